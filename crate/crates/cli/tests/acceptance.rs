//! End-to-end acceptance criteria. Each criterion prints one PASS/FAIL line;
//! the test fails if any criterion fails.

use std::process::Command;
use std::time::{Duration, Instant};

use parity_board::abseq::{check_pairing_property, check_prefix_sign_property, enumerate_s, zero_prefix_positions};
use parity_board::bijections::{count_strict_by_parts_rank, phi, phi_inverse, theorem34_rhs};
use parity_board::partitions::enumerate_strict_partitions;
use parity_board::qseries::q_j_count;
use parity_board::verify;
use parity_board::{ABSequence, Partition};

const BIN: &str = env!("CARGO_BIN_EXE_parity-board");

type Check = fn() -> Result<(), String>;

fn cli(args: &[&str]) -> (i32, String) {
    let out = Command::new(BIN).args(args).output().expect("run parity-board");
    (out.status.code().unwrap_or(-1), String::from_utf8(out.stdout).expect("utf-8 output"))
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

/// Runs a verify subcommand and requires exit 0 with a clean summary line.
fn cli_sweep(args: &[&str]) -> Result<String, String> {
    let (code, out) = cli(args);
    let summary = out.lines().nth(3).unwrap_or_default().to_string();
    ensure(code == 0, || format!("exit {code}: {out}"))?;
    ensure(summary.starts_with("pass\t") && summary.split('\t').nth(2) == Some("0"), || {
        format!("summary line {summary:?}")
    })?;
    Ok(summary)
}

fn table_one() -> Result<(), String> {
    let (code, out) = cli(&["table", "table1", "--n", "7"]);
    ensure(code == 0, || format!("exit {code}"))?;
    let rows: Vec<&str> = out.lines().skip(2).collect();
    let want = [
        "7\t1\t{1,1,1,1,1,1}",
        "6+1\t3\t{1,1,1,1}",
        "5+2\t1\t{2,2,1,1}",
        "4+3\t3\t{2,2}",
        "4+2+1\t1\t{2,3,1}",
    ];
    ensure(rows == want, || format!("rows {rows:?}"))
}

fn phi_six_example() -> Result<(), String> {
    let raw = [7, 8, 9, 10, 11, 11, 8, 7, 5, 5, 4, 3, 1, 1];
    let d = ABSequence::validate(&raw).map_err(|e| e.to_string())?;
    let lambda = phi(6, &d).map_err(|e| e.to_string())?;
    let want = Partition::new(vec![12, 10, 9, 6, 4, 3, 1]).unwrap();
    ensure(lambda == want, || format!("phi gave {lambda}"))?;
    ensure(lambda.weight() == 45, || format!("weight {}", lambda.weight()))?;
    let back = phi_inverse(6, &lambda).map_err(|e| e.to_string())?;
    ensure(back == d, || format!("inverse gave {back}"))?;
    let (code, out) = cli(&["verify-phi", "--delta", "7,8,9,10,11,11,8,7,5,5,4,3,1,1"]);
    ensure(code == 0 && out.contains("image=(12,10,9,6,4,3,1)"), || format!("cli: {out}"))
}

fn gf_identity() -> Result<(), String> {
    cli_sweep(&["verify-gf", "--a-max", "4", "--b-max", "8", "--trunc", "15"]).map(|_| ())
}

fn phi_sweep() -> Result<(), String> {
    cli_sweep(&["verify-phi", "--a-max", "3", "--b-max", "4", "--n-max", "12"]).map(|_| ())
}

fn iota_sweep() -> Result<(), String> {
    cli_sweep(&["verify-iota", "--n-max", "25"]).map(|_| ())
}

fn rank_and_parts() -> Result<(), String> {
    for (k, m, n, want) in [(3, 6, 33, 3), (2, 3, 16, 5), (0, 3, 12, 4), (-1, 2, 11, 3)] {
        let lhs = count_strict_by_parts_rank(k, m, n);
        let rhs = theorem34_rhs(k, m, n);
        ensure(lhs == want && rhs == want, || format!("({k},{m},{n}): {lhs} vs {rhs}, want {want}"))?;
    }
    cli_sweep(&["verify-thm34", "--k-min", "-3", "--k-max", "3", "--m-max", "8", "--n-max", "30"]).map(|_| ())
}

fn rank_counts() -> Result<(), String> {
    ensure(q_j_count(1, 7) == Ok(3), || "q_1(7)".into())?;
    ensure(q_j_count(-1, 11) == Ok(5), || "q_-1(11)".into())?;
    for n in 0..=30 {
        let strict = enumerate_strict_partitions(n, None);
        for j in -3..=3 {
            let brute = strict.iter().filter(|s| s.bg_rank() == j).count() as u64;
            let got = q_j_count(j, n).map_err(|e| e.to_string())?;
            ensure(brute == got, || format!("j={j} n={n}: {brute} vs {got}"))?;
        }
    }
    let report = verify::verify_rank_counts(3, 30).map_err(|e| e.to_string())?;
    ensure(report.passed(), || report.to_tsv())
}

fn strict_vs_even_plus_triangular() -> Result<(), String> {
    ensure(enumerate_strict_partitions(7, None).len() == 5, || "strict(7)".into())?;
    ensure(verify::even_plus_triangular_count(7) == 5, || "rhs(7)".into())?;
    cli_sweep(&["verify-euler", "--n-max", "40"]).map(|_| ())
}

fn congruences() -> Result<(), String> {
    ensure(q_j_count(-1, 11) == Ok(5), || "q_-1(11)".into())?;
    ensure(q_j_count(-1, 21) == Ok(30), || "q_-1(21)".into())?;
    let summary = cli_sweep(&["verify-congruences", "--n-max", "101"])?;
    let checks: u64 = summary.split('\t').nth(1).and_then(|c| c.parse().ok()).unwrap_or(0);
    ensure(checks > 0, || "no congruence cells checked".into())
}

fn sequence_properties() -> Result<(), String> {
    let mut seen = 0;
    for a in 0..=4 {
        for b in 1..=8 {
            for n in 0..=15 {
                for d in enumerate_s(a, b, n) {
                    seen += 1;
                    ensure(check_prefix_sign_property(&d), || format!("prefix sign fails on {d}"))?;
                    for pos in zero_prefix_positions(&d) {
                        ensure(check_pairing_property(&d, pos) == Ok(true), || format!("pairing fails on {d} at {pos}"))?;
                    }
                }
            }
        }
    }
    ensure(seen > 0, || "empty sweep".into())?;
    let report = verify::verify_sequence_properties(4, 8, 15, 1);
    ensure(report.passed(), || report.to_tsv())
}

#[test]
fn acceptance_criteria() {
    let criteria: [(&str, Duration, Check); 10] = [
        ("1 iota table for n=7", Duration::from_secs(1), table_one),
        ("2 phi_6 worked example", Duration::from_secs(1), phi_six_example),
        ("3 S(x,y) coefficients, A=4 B=8 N=15", Duration::from_secs(30), gf_identity),
        ("4 phi sweep a<=3 b<=4 n<=12", Duration::from_secs(30), phi_sweep),
        ("5 iota sweep n<=25", Duration::from_secs(30), iota_sweep),
        ("6 parts-and-rank examples and grid", Duration::from_secs(60), rank_and_parts),
        ("7 q_j closed form vs enumeration", Duration::from_secs(60), rank_counts),
        ("8 strict vs even+triangular n<=40", Duration::from_secs(10), strict_vs_even_plus_triangular),
        ("9 mod-5 congruences n<=101", Duration::from_secs(10), congruences),
        ("10 prefix-sign and pairing properties", Duration::from_secs(60), sequence_properties),
    ];
    let mut failures = Vec::new();
    for (name, limit, check) in criteria {
        let started = Instant::now();
        let result = check();
        let elapsed = started.elapsed();
        let result = result.and_then(|()| {
            ensure(elapsed < limit, || format!("took {elapsed:.2?}, limit {limit:?}"))
        });
        match result {
            Ok(()) => println!("PASS  {name}  ({elapsed:.2?})"),
            Err(why) => {
                println!("FAIL  {name}  ({elapsed:.2?}): {why}");
                failures.push(name);
            }
        }
    }
    assert!(failures.is_empty(), "failed criteria: {failures:?}");
}
