//! Exhaustive verification sweeps. Each sweep walks a parameter grid, runs
//! every check in each cell, and merges the per-cell outcomes in canonical
//! grid order, so the report does not depend on the worker count.

use std::collections::{BTreeSet, HashMap};
use std::fmt::Write as _;
use std::time::{Duration, Instant};

use serde::Serialize;
use serde_json::json;

use crate::abseq::{check_pairing_property, check_prefix_sign_property, enumerate_s, zero_prefix_positions, ABSequence};
use crate::bijections::{
    board, count_strict_by_parts_rank, in_p_ab, iota, iota_image_check, iota_inverse, pab_index,
    phi, phi_inverse, staircase_height, theorem34_rhs, IotaImage,
};
use crate::error::Result;
use crate::partitions::{
    columns, durfee_rectangle, enumerate_partitions, enumerate_strict_partitions, PartsFilter,
    StrictPartition,
};
use crate::qseries::{gf_p_j, q_j_count, s_coefficients};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Mismatch {
    pub check: String,
    pub params: String,
    pub expected: String,
    pub actual: String,
}

impl Mismatch {
    fn new(check: &str, params: String, expected: impl ToString, actual: impl ToString) -> Self {
        Self { check: check.to_string(), params, expected: expected.to_string(), actual: actual.to_string() }
    }
}

/// Outcome of one sweep. `elapsed` is kept out of the serialized forms so
/// that identical parameters give byte-identical reports.
#[derive(Debug, Clone, Serialize)]
pub struct VerificationReport {
    pub subject: String,
    pub parameter_grid: String,
    pub checks_run: u64,
    pub skipped: u64,
    pub mismatches: Vec<Mismatch>,
    #[serde(skip)]
    pub elapsed: Duration,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.mismatches.is_empty()
    }

    pub fn status(&self) -> &'static str {
        if self.passed() {
            "pass"
        } else {
            "fail"
        }
    }

    pub fn to_tsv(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "# subject\t{}", self.subject);
        let _ = writeln!(out, "# grid\t{}", self.parameter_grid);
        out.push_str("status\tchecks\tmismatches\tskipped\n");
        let _ = writeln!(
            out,
            "{}\t{}\t{}\t{}",
            self.status(),
            self.checks_run,
            self.mismatches.len(),
            self.skipped
        );
        for m in &self.mismatches {
            let _ = writeln!(out, "mismatch\t{}\t{}\t{}\t{}", m.check, m.params, m.expected, m.actual);
        }
        out
    }

    pub fn to_json_lines(&self) -> String {
        let mut lines = vec![json!({
            "record": "header",
            "subject": self.subject,
            "grid": self.parameter_grid,
        })];
        for m in &self.mismatches {
            lines.push(json!({
                "record": "mismatch",
                "check": m.check,
                "params": m.params,
                "expected": m.expected,
                "actual": m.actual,
            }));
        }
        lines.push(json!({
            "record": "summary",
            "status": self.status(),
            "checks": self.checks_run,
            "mismatches": self.mismatches.len(),
            "skipped": self.skipped,
        }));
        lines.into_iter().map(|v| v.to_string() + "\n").collect()
    }
}

#[derive(Debug, Default)]
struct CellOutcome {
    checks: u64,
    skipped: u64,
    mismatches: Vec<Mismatch>,
}

impl CellOutcome {
    fn check(&mut self, ok: bool, mismatch: impl FnOnce() -> Mismatch) {
        self.checks += 1;
        if !ok {
            self.mismatches.push(mismatch());
        }
    }

    fn equal<T: PartialEq + ToString>(&mut self, check: &str, params: impl FnOnce() -> String, expected: T, actual: T) {
        self.checks += 1;
        if expected != actual {
            self.mismatches.push(Mismatch::new(check, params(), expected, actual));
        }
    }
}

/// Maps `f` over `cells` on `jobs` workers, preserving input order.
fn run_cells<T, R, F>(cells: &[T], jobs: usize, f: F) -> Vec<R>
where
    T: Sync,
    R: Send,
    F: Fn(&T) -> R + Sync + Send,
{
    #[cfg(feature = "parallel")]
    if jobs > 1 {
        use rayon::prelude::*;
        if let Ok(pool) = rayon::ThreadPoolBuilder::new().num_threads(jobs).build() {
            return pool.install(|| cells.par_iter().map(&f).collect());
        }
    }
    let _ = jobs;
    cells.iter().map(f).collect()
}

fn assemble(subject: &str, grid: String, outcomes: Vec<CellOutcome>, started: Instant) -> VerificationReport {
    let mut report = VerificationReport {
        subject: subject.to_string(),
        parameter_grid: grid,
        checks_run: 0,
        skipped: 0,
        mismatches: Vec::new(),
        elapsed: Duration::ZERO,
    };
    for o in outcomes {
        report.checks_run += o.checks;
        report.skipped += o.skipped;
        report.mismatches.extend(o.mismatches);
    }
    report.elapsed = started.elapsed();
    report
}

fn error_outcome(check: &str, params: String, err: impl ToString) -> CellOutcome {
    let mut o = CellOutcome::default();
    o.check(false, || Mismatch::new(check, params, "ok", err.to_string()));
    o
}

#[derive(Debug, Clone, Copy)]
enum PhiCell {
    Shape { a: u64, b: u64, n: u64 },
    Universe { a: u64, n: u64 },
}

/// Round trip, weight law, image membership, board-replay agreement and
/// `|S(a,b)| = |P(a,b)|` at every weight, plus the statement that the
/// `P(a,b)` split every partition with `λ_1 > a` by a-Durfee rectangle.
pub fn verify_phi(a_max: u64, b_max: u64, n_max: u64, jobs: usize) -> VerificationReport {
    let started = Instant::now();
    let mut cells = Vec::new();
    for a in 0..=a_max {
        for n in 0..=n_max {
            for b in 1..=b_max {
                cells.push(PhiCell::Shape { a, b, n });
            }
            cells.push(PhiCell::Universe { a, n });
        }
    }
    let outcomes = run_cells(&cells, jobs, |&cell| match cell {
        PhiCell::Shape { a, b, n } => phi_shape_cell(a, b, n),
        PhiCell::Universe { a, n } => phi_universe_cell(a, n),
    });
    assemble("phi-bijection", format!("a<={a_max} b=1..{b_max} n<={n_max}"), outcomes, started)
}

/// The per-sequence checks of [`verify_phi`] for one given sequence. The
/// image is recorded in the parameter grid.
pub fn verify_phi_single(d: &ABSequence) -> VerificationReport {
    let started = Instant::now();
    let a = d.a();
    let mut o = CellOutcome::default();
    let image = match phi(a, d) {
        Ok(lambda) => {
            phi_sequence_checks(&mut o, a, d.b(), d, &lambda);
            lambda.to_string()
        }
        Err(e) => {
            o.check(false, || Mismatch::new("phi", d.to_string(), "partition", &e));
            e.to_string()
        }
    };
    assemble("phi-bijection", format!("a={a} b={} delta={d} image={image}", d.b()), vec![o], started)
}

fn phi_sequence_checks(o: &mut CellOutcome, a: u64, b: u64, d: &ABSequence, lambda: &crate::Partition) {
    let params = || format!("a={a} b={b} delta={d}");
    o.equal("weight", params, d.weight(), 2 * lambda.weight());
    o.check(in_p_ab(lambda, a, b), || Mismatch::new("membership", params(), format!("in P({a},{b})"), lambda));
    match phi_inverse(a, lambda) {
        Ok(back) => o.equal("round-trip", params, d.to_string(), back.to_string()),
        Err(e) => o.check(false, || Mismatch::new("round-trip", params(), d, e)),
    }
    match board::simulate(a, d.entries()) {
        Ok(run) => o.equal("board-replay", params, run.result.to_string(), lambda.to_string()),
        Err(e) => o.check(false, || Mismatch::new("board-replay", params(), lambda, e)),
    }
}

fn phi_shape_cell(a: u64, b: u64, n: u64) -> CellOutcome {
    let mut o = CellOutcome::default();
    let seqs = enumerate_s(a, b, n);
    for d in &seqs {
        let params = || format!("a={a} b={b} delta={d}");
        let lambda = match phi(a, d) {
            Ok(l) => l,
            Err(e) => {
                o.check(false, || Mismatch::new("phi", params(), "partition", e));
                continue;
            }
        };
        phi_sequence_checks(&mut o, a, b, d, &lambda);
    }
    let members = enumerate_partitions(n, None, PartsFilter::Any)
        .into_iter()
        .filter(|p| in_p_ab(p, a, b))
        .count();
    o.equal("count", || format!("a={a} b={b} n={n}"), seqs.len(), members);
    o
}

fn phi_universe_cell(a: u64, n: u64) -> CellOutcome {
    let mut o = CellOutcome::default();
    for p in enumerate_partitions(n, None, PartsFilter::Any) {
        let params = || format!("a={a} lambda={p}");
        let hits: Vec<u64> = (1..=2 * n + 2).filter(|&b| in_p_ab(&p, a, b)).collect();
        let expected = usize::from(p.largest() > a);
        o.equal("unique-shape", params, expected, hits.len());
        if let Some(&b) = hits.first() {
            o.equal("shape-index", params, b as i64, pab_index(&p, a).map_or(-1, |x| x as i64));
            let rows = durfee_rectangle(&p, a).rows;
            o.equal("durfee-pair", params, b.div_ceil(2), rows);
        }
    }
    o
}

/// Every coefficient of `S(x, y)` up to `(max_a, max_b, order)` against a
/// brute-force count of (a,b)-sequences; the `(0, 0, 0)` entry stands for ε.
pub fn verify_gf(max_a: usize, max_b: usize, order: usize, jobs: usize) -> VerificationReport {
    let started = Instant::now();
    let grid = format!("a<={max_a} b<={max_b} n<={order}");
    let table = match s_coefficients(max_a, max_b, order) {
        Ok(t) => t,
        Err(e) => return assemble("gf-coefficients", grid, vec![error_outcome("series", String::new(), e)], started),
    };
    let cells: Vec<(usize, usize)> =
        (0..=max_a).flat_map(|a| (0..=max_b).map(move |b| (a, b))).collect();
    let outcomes = run_cells(&cells, jobs, |&(a, b)| {
        let mut o = CellOutcome::default();
        for n in 0..=order {
            let brute = if b == 0 {
                i64::from(a == 0 && n == 0)
            } else {
                enumerate_s(a as u64, b as u64, n as u64).len() as i64
            };
            o.equal("coefficient", || format!("a={a} b={b} n={n}"), brute, table.entry(a, b, n));
        }
        o
    });
    assemble("gf-coefficients", grid, outcomes, started)
}

/// The prefix-sign and pairing properties on every enumerated sequence.
pub fn verify_sequence_properties(max_a: u64, max_b: u64, max_half_weight: u64, jobs: usize) -> VerificationReport {
    let started = Instant::now();
    let cells: Vec<(u64, u64, u64)> = (0..=max_a)
        .flat_map(|a| (1..=max_b).flat_map(move |b| (0..=max_half_weight).map(move |n| (a, b, n))))
        .collect();
    let outcomes = run_cells(&cells, jobs, |&(a, b, n)| {
        let mut o = CellOutcome::default();
        for d in enumerate_s(a, b, n) {
            o.check(check_prefix_sign_property(&d), || {
                Mismatch::new("prefix-sign", d.to_string(), true, false)
            });
            for pos in zero_prefix_positions(&d) {
                let got = check_pairing_property(&d, pos);
                o.check(got == Ok(true), || {
                    Mismatch::new("pairing", format!("{d} n={pos}"), "Ok(true)", format!("{got:?}"))
                });
            }
        }
        o
    });
    assemble(
        "sequence-properties",
        format!("a<={max_a} b=1..{max_b} n<={max_half_weight}"),
        outcomes,
        started,
    )
}

/// Round trip, weight additivity, BG-rank bridge, injectivity, and the image
/// characterization in both directions for every strict partition of weight
/// at most `n_max`.
pub fn verify_iota(n_max: u64, jobs: usize) -> VerificationReport {
    let started = Instant::now();
    let weights: Vec<u64> = (0..=n_max).collect();
    let forward = run_cells(&weights, jobs, |&n| {
        let mut o = CellOutcome::default();
        let mut images = Vec::new();
        for s in enumerate_strict_partitions(n, None) {
            let params = || format!("lambda={}", s.to_sum_string());
            let img = match iota(&s) {
                Ok(img) => img,
                Err(e) => {
                    o.check(false, || Mismatch::new("iota", params(), "image", e));
                    continue;
                }
            };
            o.equal("weight", params, n, img.t + img.delta.weight());
            o.check(iota_image_check(&img), || Mismatch::new("image-check", params(), true, false));
            match iota_inverse(&img) {
                Ok(back) => o.equal("round-trip", params, s.to_sum_string(), back.to_sum_string()),
                Err(e) => o.check(false, || Mismatch::new("round-trip", params(), s.to_sum_string(), e)),
            }
            let rank = s.bg_rank();
            let alt = columns(&s).alternating_sum();
            o.equal("bg-rank-bridge", params, rank, -alt);
            let expected_k = if rank > 0 { (2 * rank - 1) as u64 } else { (-2 * rank) as u64 };
            o.equal("staircase-height", params, expected_k, img.k);
            images.push((img, s));
        }
        (o, images)
    });

    let mut outcomes = Vec::with_capacity(forward.len() + 2);
    let mut seen: HashMap<IotaImage, StrictPartition> = HashMap::new();
    let mut injectivity = CellOutcome::default();
    for (o, images) in forward {
        outcomes.push(o);
        for (img, s) in images {
            let params = format!("t={} delta={}", img.t, img.delta);
            let prev = seen.insert(img, s.clone());
            injectivity.check(prev.is_none(), || {
                Mismatch::new("injective", params, "distinct images", format!("{} and {}", prev.unwrap().to_sum_string(), s.to_sum_string()))
            });
        }
    }
    outcomes.push(injectivity);

    // every candidate (t, Δ) of total weight <= n_max: passes the image check
    // exactly when some strict partition maps onto it
    let mut completeness = CellOutcome::default();
    for (k, delta) in iota_candidates(n_max) {
        let img = IotaImage::new(k, delta);
        let params = || format!("t={} delta={}", img.t, img.delta);
        let accepted = iota_image_check(&img);
        let preimage = seen.get(&img);
        completeness.equal("characterization", params, preimage.is_some(), accepted);
        if let (true, Some(s)) = (accepted, preimage) {
            match iota_inverse(&img) {
                Ok(back) => completeness.equal("inverse", params, s.to_sum_string(), back.to_sum_string()),
                Err(e) => completeness.check(false, || Mismatch::new("inverse", params(), s.to_sum_string(), e)),
            }
        }
    }
    outcomes.push(completeness);
    assemble("iota-injection", format!("n<={n_max}"), outcomes, started)
}

/// All `(k, Δ)` with `k(k+1)/2 + |Δ| <= max_weight`, Δ ranging over ε and
/// every (a,b)-sequence, in canonical order.
pub fn iota_candidates(max_weight: u64) -> Vec<(u64, ABSequence)> {
    let mut out = Vec::new();
    let mut k = 0;
    while k * (k + 1) / 2 <= max_weight {
        let room = (max_weight - k * (k + 1) / 2) / 2;
        out.push((k, ABSequence::epsilon()));
        for a in 0..=2 * room {
            for b in 1..=2 * room {
                if b * a + b * (b + 1) / 2 > 2 * room {
                    break;
                }
                for h in 1..=room {
                    out.extend(enumerate_s(a, b, h).into_iter().map(|d| (k, d)));
                }
            }
        }
        k += 1;
    }
    out
}

/// Brute-force strict counts by number of parts and BG-rank against the
/// four-case sequence/partition side.
pub fn verify_theorem34(k_min: i64, k_max: i64, m_max: usize, n_max: u64, jobs: usize) -> VerificationReport {
    let started = Instant::now();
    let cells: Vec<(i64, usize)> = (k_min..=k_max).flat_map(|k| (1..=m_max).map(move |m| (k, m))).collect();
    let outcomes = run_cells(&cells, jobs, |&(k, m)| {
        let mut o = CellOutcome::default();
        for n in 0..=n_max {
            let lhs = count_strict_by_parts_rank(k, m, n);
            let rhs = theorem34_rhs(k, m, n);
            o.equal("rank-parts-count", || format!("k={k} m={m} n={n}"), lhs, rhs);
        }
        o
    });
    assemble("strict-by-parts-and-rank", format!("k={k_min}..{k_max} m=1..{m_max} n<={n_max}"), outcomes, started)
}

/// Triangular numbers `0, 1, 3, 6, ...` not exceeding `n`.
pub fn triangular_numbers(n: u64) -> Vec<u64> {
    (0..).map(|k: u64| k * (k + 1) / 2).take_while(|&t| t <= n).collect()
}

/// Number of pairs `(t, μ)` with `t` triangular, `μ` a partition into even
/// parts, and `t + |μ| = n`, by enumeration.
pub fn even_plus_triangular_count(n: u64) -> u64 {
    triangular_numbers(n)
        .into_iter()
        .map(|t| enumerate_partitions(n - t, None, PartsFilter::EvenOnly).len() as u64)
        .sum()
}

/// Strict partitions of `n` against partitions of `n` into even parts plus
/// one distinguished triangular part (0 allowed).
pub fn verify_euler_vandervelde(n_max: u64, jobs: usize) -> VerificationReport {
    let started = Instant::now();
    let weights: Vec<u64> = (0..=n_max).collect();
    let outcomes = run_cells(&weights, jobs, |&n| {
        let mut o = CellOutcome::default();
        let lhs = enumerate_strict_partitions(n, None).len() as u64;
        o.equal("strict-vs-even-plus-triangular", || format!("n={n}"), lhs, even_plus_triangular_count(n));
        o
    });
    assemble("strict-vs-even-plus-triangular", format!("n<={n_max}"), outcomes, started)
}

/// `(r, j residues mod 10)`: `q_j(10n + r) ≡ 0 (mod 5)` for those `j`.
pub const CONGRUENCE_FAMILIES: [(u64, &[i64]); 6] = [
    (1, &[9]),
    (3, &[3, 5]),
    (4, &[2, 6]),
    (6, &[4]),
    (8, &[0, 8]),
    (9, &[1, 7]),
];

/// Largest `|j|` scanned by [`verify_congruences`].
pub const CONGRUENCE_J_BOUND: i64 = 5;

/// Largest weight at which `q_j` is also cross-checked by enumeration.
pub const CONGRUENCE_BRUTE_LIMIT: u64 = 30;

/// Scans the six mod-5 families for `|j| <= 5` and `10n + r <= n_max`.
/// Cells below the weight `j(2j-1)`, where `q_j` vanishes identically, are
/// counted as skipped.
pub fn verify_congruences(n_max: u64, jobs: usize) -> VerificationReport {
    let started = Instant::now();
    let mut cells = Vec::new();
    for &(r, classes) in &CONGRUENCE_FAMILIES {
        for j in -CONGRUENCE_J_BOUND..=CONGRUENCE_J_BOUND {
            if classes.contains(&j.rem_euclid(10)) {
                cells.push((r, j));
            }
        }
    }
    let outcomes = run_cells(&cells, jobs, |&(r, j)| {
        let mut o = CellOutcome::default();
        let lead = j * (2 * j - 1);
        for weight in (r..=n_max).step_by(10) {
            if (weight as i64) < lead {
                o.skipped += 1;
                continue;
            }
            let params = || format!("j={j} n={weight}");
            let count = match q_j_count(j, weight) {
                Ok(c) => c,
                Err(e) => {
                    o.check(false, || Mismatch::new("q_j", params(), "count", e));
                    continue;
                }
            };
            o.equal("mod-5", params, 0, count % 5);
            if weight <= CONGRUENCE_BRUTE_LIMIT {
                let brute = enumerate_strict_partitions(weight, None).iter().filter(|s| s.bg_rank() == j).count() as u64;
                o.equal("q_j-oracle", params, brute, count);
            }
        }
        o
    });
    assemble("mod-5-congruences", format!("|j|<={CONGRUENCE_J_BOUND} n<={n_max}"), outcomes, started)
}

/// `q_j(n)` from the closed form and from the generating function against
/// enumeration of strict partitions by BG-rank.
pub fn verify_rank_counts(j_bound: i64, n_max: u64) -> Result<VerificationReport> {
    let started = Instant::now();
    let mut o = CellOutcome::default();
    let ranks: BTreeSet<i64> = (-j_bound..=j_bound).collect();
    let mut brute: HashMap<(i64, u64), u64> = HashMap::new();
    for n in 0..=n_max {
        for s in enumerate_strict_partitions(n, None) {
            *brute.entry((s.bg_rank(), n)).or_default() += 1;
        }
    }
    for &j in &ranks {
        let series = gf_p_j(j, n_max as usize)?;
        for n in 0..=n_max {
            let expected = brute.get(&(j, n)).copied().unwrap_or(0);
            let params = || format!("j={j} n={n}");
            o.equal("closed-form", params, expected, q_j_count(j, n)?);
            o.equal("series", params, expected as i64, series.coeff(n as usize));
        }
    }
    Ok(assemble("rank-counts", format!("|j|<={j_bound} n<={n_max}"), vec![o], started))
}

/// The staircase height picked by `iota` for a strict partition of BG-rank `r`.
pub fn height_for_rank(rank: i64) -> u64 {
    staircase_height(-rank)
}
