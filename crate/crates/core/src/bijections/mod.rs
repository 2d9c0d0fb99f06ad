//! The board-filling bijection `phi_a: S(a,b) -> P(a,b)`, the injection
//! `iota` from strict partitions to (triangular number, (a,b)-sequence)
//! pairs, and the counting equivalences built on top of them.

pub mod board;

use serde::Serialize;

use crate::abseq::{enumerate_s, ABSequence};
use crate::error::{Error, Result};
use crate::partitions::{
    columns, durfee_rectangle, enumerate_partitions, enumerate_strict_partitions, from_columns,
    ColumnSequence, Partition, PartsFilter, StrictPartition,
};

/// Cells of the image inside each block: `c_1 = d_1`, `c_i = d_i - c_{i-1}`.
fn block_counts(d: &ABSequence) -> Result<Vec<u64>> {
    let mut counts: Vec<u64> = Vec::with_capacity(d.len());
    for (i, &di) in d.entries().iter().enumerate() {
        let prev = if i == 0 { 0 } else { counts[i - 1] };
        let c = di.checked_sub(prev).ok_or_else(|| {
            Error::InvalidSequence(format!("d_{} = {di} is below c_{} = {prev}", i + 1, i))
        })?;
        counts.push(c);
    }
    Ok(counts)
}

/// `phi_a(Δ)`. Row `j` of the image is `c_{2j-1}` plus the number of even
/// blocks `B_{2i}` reaching down to row `j`.
pub fn phi(a: u64, d: &ABSequence) -> Result<Partition> {
    if d.is_epsilon() {
        return Err(Error::InvalidSequence("phi is not defined on the empty sequence".into()));
    }
    if d.a() != a {
        return Err(Error::InvalidSequence(format!("sequence has a = {}, expected {a}", d.a())));
    }
    let counts = block_counts(d)?;
    let odd: Vec<u64> = counts.iter().step_by(2).copied().collect();
    let even: Vec<u64> = counts.iter().skip(1).step_by(2).copied().collect();
    let mut parts = Vec::with_capacity(odd.len());
    for (j0, &row_cells) in odd.iter().enumerate() {
        let j = j0 as u64 + 1;
        if row_cells > a + j {
            return Err(Error::InvalidSequence(format!("block {} overflows", 2 * j0 + 1)));
        }
        let reach = even.iter().filter(|&&c| c >= j).count() as u64;
        let len = row_cells + reach;
        if len == 0 {
            break;
        }
        parts.push(len);
    }
    Partition::new(parts).map_err(|e| Error::InvalidSequence(e.to_string()))
}

/// Inverse of [`phi`]: count the cells `c_i` of `p` inside each block and
/// read off `d_1 = c_1`, `d_i = c_{i-1} + c_i`.
pub fn phi_inverse(a: u64, p: &Partition) -> Result<ABSequence> {
    if p.largest() <= a {
        return Err(Error::NotInPab { a });
    }
    let rows = p.len() as u64;
    let mut counts = Vec::new();
    for j in 1..=rows.max(p.largest().saturating_sub(a)) {
        let odd = p.part(j as usize).min(a + j);
        let even = (1..=j).filter(|&r| p.part(r as usize) > a + j).count() as u64;
        counts.push(odd);
        counts.push(even);
    }
    let last = counts.iter().rposition(|&c| c > 0).unwrap_or(0);
    counts.truncate(last + 2);
    let mut entries = Vec::with_capacity(counts.len());
    entries.push(counts[0]);
    for w in counts.windows(2) {
        entries.push(w[0] + w[1]);
    }
    let d = ABSequence::from_entries(entries).map_err(|_| Error::NotInPab { a })?;
    if d.a() != a {
        return Err(Error::NotInPab { a });
    }
    Ok(d)
}

/// Membership in `P(a,b)`: the a-Durfee rectangle is `⌈b/2⌉ × (⌈b/2⌉ + a)`,
/// and row `b/2` is strictly longer than `a + b/2` (b even) or row
/// `(b+1)/2` equals `a + (b+1)/2` exactly (b odd).
pub fn in_p_ab(p: &Partition, a: u64, b: u64) -> bool {
    if b == 0 {
        return false;
    }
    let r = b.div_ceil(2);
    if durfee_rectangle(p, a).rows != r {
        return false;
    }
    let row = p.part(r as usize);
    if b.is_multiple_of(2) {
        row > a + r
    } else {
        row == a + r
    }
}

/// The `b` with `p ∈ P(a,b)`, if any; `None` exactly when `λ_1 <= a`.
pub fn pab_index(p: &Partition, a: u64) -> Option<u64> {
    let r = durfee_rectangle(p, a).rows;
    if r == 0 {
        return None;
    }
    Some(if p.part(r as usize) == a + r { 2 * r - 1 } else { 2 * r })
}

/// `ι(λ) = (t, Δ)` with `t = k(k+1)/2`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct IotaImage {
    pub t: u64,
    pub k: u64,
    pub delta: ABSequence,
}

impl IotaImage {
    /// Pairs a staircase height `k` with `delta`; `t` is derived.
    pub fn new(k: u64, delta: ABSequence) -> Self {
        Self { t: k * (k + 1) / 2, k, delta }
    }

    /// Recovers `k` from a triangular `t`.
    pub fn from_triangular(t: u64, delta: ABSequence) -> Result<Self> {
        let k = triangular_root(t)
            .ok_or_else(|| Error::NotInImage(format!("t = {t} is not triangular")))?;
        Ok(Self::new(k, delta))
    }
}

pub fn triangular_root(t: u64) -> Option<u64> {
    let mut k = ((2.0 * t as f64).sqrt()) as u64;
    while k * (k + 1) / 2 > t {
        k -= 1;
    }
    while (k + 1) * (k + 2) / 2 <= t {
        k += 1;
    }
    (k * (k + 1) / 2 == t).then_some(k)
}

/// The staircase height picked by `iota` for a column alternating sum `alt`.
///
/// Prefix alternating sums of `1, 2, 3, ...` run `0, -1, 1, -2, 2, ...`, so
/// the first position where they hit `alt` is `2 alt` or `-2 alt - 1`.
pub fn staircase_height(alt: i64) -> u64 {
    if alt >= 0 {
        2 * alt as u64
    } else {
        (-2 * alt - 1) as u64
    }
}

pub fn iota(s: &StrictPartition) -> Result<IotaImage> {
    let c = columns(s);
    let k = staircase_height(c.alternating_sum());
    let m = s.num_parts() as u64;
    if k > m {
        return Err(Error::InternalInvariantViolation(format!(
            "staircase height {k} exceeds the {m} parts of {s}"
        )));
    }
    let delta = ABSequence::from_entries(c.as_slice()[k as usize..].to_vec())
        .map_err(|e| Error::InternalInvariantViolation(format!("suffix of c({s}): {e}")))?;
    Ok(IotaImage::new(k, delta))
}

pub fn iota_image_check(img: &IotaImage) -> bool {
    let d = &img.delta;
    d.is_epsilon() || d.a() == img.k || (d.a() < img.k && d.b() == 1)
}

/// Prepends columns `1..=k` to `Δ` and rebuilds the shifted diagram.
pub fn iota_inverse(img: &IotaImage) -> Result<StrictPartition> {
    if !iota_image_check(img) {
        return Err(Error::NotInImage(format!("(t = {}, Δ = {})", img.t, img.delta)));
    }
    let mut cols: Vec<u64> = (1..=img.k).collect();
    cols.extend_from_slice(img.delta.entries());
    let c = ColumnSequence::new(cols).map_err(|e| Error::NotInImage(e.to_string()))?;
    from_columns(&c).map_err(|e| Error::NotInImage(e.to_string()))
}

/// Brute-force count of strict partitions of `n` with `m` parts and BG-rank `k`.
pub fn count_strict_by_parts_rank(k: i64, m: usize, n: u64) -> u64 {
    enumerate_strict_partitions(n, Some(m)).iter().filter(|s| s.bg_rank() == k).count() as u64
}

/// Which of the four regimes applies to `(k, m)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum RankCase {
    /// `k > 0, m > 2k-1`: sequences in `S(2k-1, m-2k+1)`.
    PositiveSequences,
    /// `k > 0, m = 2k-1`: partitions with parts at most `2k-1`.
    PositivePartitions,
    /// `k <= 0, m > -2k`: sequences in `S(-2k, m+2k)`.
    NonPositiveSequences,
    /// `k <= 0, m = -2k`: partitions with parts at most `-2k`.
    NonPositivePartitions,
}

impl RankCase {
    pub fn classify(k: i64, m: i64) -> Option<Self> {
        if k > 0 {
            match m.cmp(&(2 * k - 1)) {
                std::cmp::Ordering::Greater => Some(Self::PositiveSequences),
                std::cmp::Ordering::Equal => Some(Self::PositivePartitions),
                std::cmp::Ordering::Less => None,
            }
        } else {
            match m.cmp(&(-2 * k)) {
                std::cmp::Ordering::Greater => Some(Self::NonPositiveSequences),
                std::cmp::Ordering::Equal => Some(Self::NonPositivePartitions),
                std::cmp::Ordering::Less => None,
            }
        }
    }

    pub fn label(self) -> &'static str {
        match self {
            Self::PositiveSequences => "1",
            Self::PositivePartitions => "2",
            Self::NonPositiveSequences => "3",
            Self::NonPositivePartitions => "4",
        }
    }
}

/// The sequence/partition side of the rank-and-parts count. Zero outside
/// the admissible `(k, m, n)` range, or when `n - k(2k-1)` is negative or odd.
pub fn theorem34_rhs(k: i64, m: usize, n: u64) -> u64 {
    let m = m as i64;
    let Some(case) = RankCase::classify(k, m) else {
        return 0;
    };
    if (n as i64) < m * (m + 1) / 2 {
        return 0;
    }
    let excess = n as i64 - k * (2 * k - 1);
    if excess < 0 || excess % 2 != 0 {
        return 0;
    }
    let half = (excess / 2) as u64;
    match case {
        RankCase::PositiveSequences => enumerate_s((2 * k - 1) as u64, (m - 2 * k + 1) as u64, half).len() as u64,
        RankCase::PositivePartitions => {
            enumerate_partitions(half, Some((2 * k - 1) as u64), PartsFilter::Any).len() as u64
        }
        RankCase::NonPositiveSequences => enumerate_s((-2 * k) as u64, (m + 2 * k) as u64, half).len() as u64,
        RankCase::NonPositivePartitions => {
            enumerate_partitions(half, Some((-2 * k) as u64), PartsFilter::Any).len() as u64
        }
    }
}
