//! Integer partitions, strict partitions, shifted-diagram columns and the
//! statistics built on them (BG-rank, a-Durfee rectangles, p(n)).
//!
//! Enumerators return their results in reverse-lexicographic order of the
//! part lists, so every report derived from them is byte-stable.

use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};

/// A weakly decreasing list of positive parts. The empty list is the empty
/// partition of 0.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct Partition {
    parts: Vec<u64>,
    weight: u64,
}

impl Partition {
    pub fn new(parts: Vec<u64>) -> Result<Self> {
        for (index, &p) in parts.iter().enumerate() {
            if p == 0 {
                return Err(Error::NonPositivePart { index });
            }
            if index > 0 && parts[index - 1] < p {
                return Err(Error::PartsNotDecreasing { index });
            }
        }
        let weight = checked_sum(&parts)?;
        Ok(Self { parts, weight })
    }

    pub fn empty() -> Self {
        Self { parts: Vec::new(), weight: 0 }
    }

    pub fn parts(&self) -> &[u64] {
        &self.parts
    }

    pub fn weight(&self) -> u64 {
        self.weight
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Largest part, 0 for the empty partition.
    pub fn largest(&self) -> u64 {
        self.parts.first().copied().unwrap_or(0)
    }

    /// 1-based part access; 0 past the end.
    pub fn part(&self, i: usize) -> u64 {
        if i == 0 {
            return 0;
        }
        self.parts.get(i - 1).copied().unwrap_or(0)
    }

    pub fn bg_rank(&self) -> i64 {
        bg_rank(&self.parts)
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_tuple(f, &self.parts)
    }
}

/// A partition with strictly decreasing parts.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct StrictPartition {
    parts: Vec<u64>,
    weight: u64,
}

impl StrictPartition {
    pub fn new(parts: Vec<u64>) -> Result<Self> {
        for (index, &p) in parts.iter().enumerate() {
            if p == 0 {
                return Err(Error::NonPositivePart { index });
            }
            if index > 0 && parts[index - 1] <= p {
                return Err(Error::NotStrict { index });
            }
        }
        let weight = checked_sum(&parts)?;
        Ok(Self { parts, weight })
    }

    pub fn empty() -> Self {
        Self { parts: Vec::new(), weight: 0 }
    }

    pub fn parts(&self) -> &[u64] {
        &self.parts
    }

    pub fn weight(&self) -> u64 {
        self.weight
    }

    /// Number of parts, `m`.
    pub fn num_parts(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn bg_rank(&self) -> i64 {
        bg_rank(&self.parts)
    }

    pub fn to_partition(&self) -> Partition {
        Partition { parts: self.parts.clone(), weight: self.weight }
    }

    /// Renders as `4+2+1`; the empty partition renders as `∅`.
    pub fn to_sum_string(&self) -> String {
        if self.parts.is_empty() {
            return "∅".to_string();
        }
        let parts: Vec<String> = self.parts.iter().map(u64::to_string).collect();
        parts.join("+")
    }
}

impl fmt::Display for StrictPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_tuple(f, &self.parts)
    }
}

fn write_tuple(f: &mut fmt::Formatter<'_>, parts: &[u64]) -> fmt::Result {
    if parts.is_empty() {
        return f.write_str("∅");
    }
    f.write_str("(")?;
    for (i, p) in parts.iter().enumerate() {
        if i > 0 {
            f.write_str(",")?;
        }
        write!(f, "{p}")?;
    }
    f.write_str(")")
}

fn checked_sum(values: &[u64]) -> Result<u64> {
    values
        .iter()
        .try_fold(0u64, |acc, &v| acc.checked_add(v))
        .ok_or(Error::Overflow("partition weight"))
}

/// Column lengths `c_1..c_L` of a shifted Young diagram.
///
/// Valid sequences start with a staircase `1, 2, ..., m` (where `m` is the
/// number of rows) and are weakly decreasing from index `m` on, with
/// `c_{m+1} <= m`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct ColumnSequence {
    cols: Vec<u64>,
}

impl ColumnSequence {
    pub fn new(cols: Vec<u64>) -> Result<Self> {
        let staircase = cols
            .iter()
            .enumerate()
            .take_while(|&(i, &c)| c == i as u64 + 1)
            .count();
        if !cols.is_empty() && staircase == 0 {
            return Err(Error::MalformedColumns(format!(
                "first column has length {}, expected 1",
                cols[0]
            )));
        }
        for i in staircase.max(1)..cols.len() {
            if cols[i] == 0 {
                return Err(Error::MalformedColumns(format!("column {} is empty", i + 1)));
            }
            if cols[i] > cols[i - 1] {
                return Err(Error::MalformedColumns(format!(
                    "column {} is longer than column {}",
                    i + 1,
                    i
                )));
            }
        }
        Ok(Self { cols })
    }

    pub fn as_slice(&self) -> &[u64] {
        &self.cols
    }

    pub fn len(&self) -> usize {
        self.cols.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cols.is_empty()
    }

    /// Length of the initial staircase run, which equals the number of rows.
    pub fn staircase_len(&self) -> usize {
        self.cols
            .iter()
            .enumerate()
            .take_while(|&(i, &c)| c == i as u64 + 1)
            .count()
    }

    /// `sum_i (-1)^i c_i` with 1-based indices.
    pub fn alternating_sum(&self) -> i64 {
        alternating_sum(&self.cols)
    }
}

/// `sum_i (-1)^i v_i` with 1-based indices.
pub fn alternating_sum(values: &[u64]) -> i64 {
    values
        .iter()
        .enumerate()
        .map(|(i, &v)| if i % 2 == 0 { -(v as i64) } else { v as i64 })
        .sum()
}

/// An `rows × (rows + a)` rectangle. `rows == 0` means the partition has no
/// a-Durfee rectangle, i.e. its largest part is at most `a`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct DurfeeRect {
    pub rows: u64,
    pub cols: u64,
}

impl DurfeeRect {
    pub fn is_absent(&self) -> bool {
        self.rows == 0
    }
}

impl fmt::Display for DurfeeRect {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}x{}", self.rows, self.cols)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum PartsFilter {
    #[default]
    Any,
    EvenOnly,
}

/// Every partition of `n` with parts at most `max_part` (unbounded if
/// `None`) passing `filter`, in reverse-lexicographic order.
pub fn enumerate_partitions(n: u64, max_part: Option<u64>, filter: PartsFilter) -> Vec<Partition> {
    let mut out = Vec::new();
    let mut current = Vec::new();
    let bound = max_part.unwrap_or(n).min(n);
    fill_partitions(n, bound, filter, &mut current, &mut out);
    out
}

fn fill_partitions(
    remaining: u64,
    bound: u64,
    filter: PartsFilter,
    current: &mut Vec<u64>,
    out: &mut Vec<Partition>,
) {
    if remaining == 0 {
        let weight = current.iter().sum();
        out.push(Partition { parts: current.clone(), weight });
        return;
    }
    for part in (1..=bound.min(remaining)).rev() {
        if filter == PartsFilter::EvenOnly && part % 2 == 1 {
            continue;
        }
        current.push(part);
        fill_partitions(remaining - part, part, filter, current, out);
        current.pop();
    }
}

/// Every strict partition of `n`, optionally with exactly `num_parts`
/// parts, in reverse-lexicographic order.
pub fn enumerate_strict_partitions(n: u64, num_parts: Option<usize>) -> Vec<StrictPartition> {
    let mut out = Vec::new();
    let mut current = Vec::new();
    fill_strict(n, n, num_parts, &mut current, &mut out);
    out
}

fn fill_strict(
    remaining: u64,
    bound: u64,
    num_parts: Option<usize>,
    current: &mut Vec<u64>,
    out: &mut Vec<StrictPartition>,
) {
    if remaining == 0 {
        if num_parts.is_none_or(|m| m == current.len()) {
            let weight = current.iter().sum();
            out.push(StrictPartition { parts: current.clone(), weight });
        }
        return;
    }
    if let Some(m) = num_parts {
        let left = m.saturating_sub(current.len()) as u64;
        // the largest sum reachable with `left` distinct parts below `bound + 1`
        if left == 0 || left > bound || remaining > left * bound - left * (left - 1) / 2 {
            return;
        }
    }
    for part in (1..=bound.min(remaining)).rev() {
        // parts below `part` sum to at most part*(part-1)/2
        if remaining - part > part * (part - 1) / 2 {
            break;
        }
        current.push(part);
        fill_strict(remaining - part, part - 1, num_parts, current, out);
        current.pop();
    }
}

/// p(n) by Euler's pentagonal-number recurrence; 0 for negative `n`.
pub fn partition_count(n: i64) -> Result<u64> {
    if n < 0 {
        return Ok(0);
    }
    Ok(*partition_count_table(n as usize)?.last().unwrap_or(&1))
}

/// `[p(0), ..., p(n)]`.
pub fn partition_count_table(n: usize) -> Result<Vec<u64>> {
    // i128 accumulation: the signed partial sums briefly exceed p(i) itself
    let mut table: Vec<i128> = Vec::with_capacity(n + 1);
    table.push(1);
    for i in 1..=n {
        let mut sum: i128 = 0;
        let mut k: usize = 1;
        loop {
            let g1 = k * (3 * k - 1) / 2;
            if g1 > i {
                break;
            }
            let g2 = k * (3 * k + 1) / 2;
            let mut term = table[i - g1];
            if g2 <= i {
                term += table[i - g2];
            }
            sum += if k % 2 == 1 { term } else { -term };
            k += 1;
        }
        if sum > i64::MAX as i128 {
            return Err(Error::Overflow("p(n)"));
        }
        table.push(sum);
    }
    Ok(table.into_iter().map(|v| v as u64).collect())
}

/// Odd parts at odd (1-based) positions minus odd parts at even positions.
pub fn bg_rank(parts: &[u64]) -> i64 {
    parts
        .iter()
        .enumerate()
        .filter(|(_, &p)| p % 2 == 1)
        .map(|(i, _)| if i % 2 == 0 { 1 } else { -1 })
        .sum()
}

/// Column lengths of the shifted Young diagram of `s`, read left to right.
pub fn columns(s: &StrictPartition) -> ColumnSequence {
    let width = s.parts.first().copied().unwrap_or(0) as usize;
    let mut cols = vec![0u64; width];
    for (row, &part) in s.parts.iter().enumerate() {
        // row `row` (0-based) occupies columns row..row+part
        for col in &mut cols[row..row + part as usize] {
            *col += 1;
        }
    }
    ColumnSequence { cols }
}

/// Inverse of [`columns`]: `λ_i = #{ j >= i : c_j >= i }`.
pub fn from_columns(c: &ColumnSequence) -> Result<StrictPartition> {
    let rows = c.staircase_len();
    let parts: Vec<u64> = (1..=rows)
        .map(|i| c.cols[i - 1..].iter().filter(|&&cj| cj >= i as u64).count() as u64)
        .collect();
    let s = StrictPartition::new(parts)?;
    if columns(&s) != *c {
        return Err(Error::MalformedColumns(format!(
            "{:?} is not the column sequence of a shifted diagram",
            c.cols
        )));
    }
    Ok(s)
}

/// Largest `i × (i + a)` rectangle inside the Young diagram of `p`.
pub fn durfee_rectangle(p: &Partition, a: u64) -> DurfeeRect {
    let rows = p
        .parts
        .iter()
        .enumerate()
        .take_while(|&(i, &part)| part >= i as u64 + 1 + a)
        .count() as u64;
    DurfeeRect { rows, cols: rows + a }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(parts: &[u64]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    fn s(parts: &[u64]) -> StrictPartition {
        StrictPartition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn partitions_of_five_with_parts_at_most_three() {
        let got: Vec<Vec<u64>> = enumerate_partitions(5, Some(3), PartsFilter::Any)
            .into_iter()
            .map(|p| p.parts)
            .collect();
        assert_eq!(
            got,
            vec![vec![3, 2], vec![3, 1, 1], vec![2, 2, 1], vec![2, 1, 1, 1], vec![1, 1, 1, 1, 1]]
        );
    }

    #[test]
    fn zero_has_only_the_empty_partition() {
        let all = enumerate_partitions(0, None, PartsFilter::Any);
        assert_eq!(all, vec![Partition::empty()]);
        assert_eq!(enumerate_strict_partitions(0, None), vec![StrictPartition::empty()]);
        assert_eq!(enumerate_strict_partitions(0, Some(0)).len(), 1);
        assert!(enumerate_strict_partitions(0, Some(1)).is_empty());
    }

    #[test]
    fn even_partitions_of_six() {
        // brute force: filter every partition of 6
        let brute: Vec<Partition> = enumerate_partitions(6, None, PartsFilter::Any)
            .into_iter()
            .filter(|p| p.parts.iter().all(|x| x % 2 == 0))
            .collect();
        let got = enumerate_partitions(6, None, PartsFilter::EvenOnly);
        assert_eq!(got, brute);
        assert_eq!(got, vec![p(&[6]), p(&[4, 2]), p(&[2, 2, 2])]);
    }

    #[test]
    fn strict_partitions_of_seven() {
        let got: Vec<String> =
            enumerate_strict_partitions(7, None).iter().map(|s| s.to_sum_string()).collect();
        assert_eq!(got, ["7", "6+1", "5+2", "4+3", "4+2+1"]);
    }

    #[test]
    fn strict_partitions_of_33_with_six_parts_and_rank_three() {
        let got: Vec<StrictPartition> = enumerate_strict_partitions(33, Some(6))
            .into_iter()
            .filter(|s| s.bg_rank() == 3)
            .collect();
        assert_eq!(
            got,
            vec![s(&[13, 6, 5, 4, 3, 2]), s(&[11, 8, 5, 4, 3, 2]), s(&[9, 8, 7, 4, 3, 2])]
        );
    }

    #[test]
    fn strict_enumeration_with_part_count_matches_filter() {
        for n in 0..=30 {
            let all = enumerate_strict_partitions(n, None);
            for m in 0..=8 {
                let filtered: Vec<_> =
                    all.iter().filter(|s| s.num_parts() == m).cloned().collect();
                assert_eq!(enumerate_strict_partitions(n, Some(m)), filtered, "n={n} m={m}");
            }
        }
    }

    #[test]
    fn partition_count_values() {
        assert_eq!(partition_count(0).unwrap(), 1);
        assert_eq!(partition_count(4).unwrap(), 5);
        assert_eq!(partition_count(9).unwrap(), 30);
        assert_eq!(partition_count(-3).unwrap(), 0);
        assert_eq!(partition_count(100).unwrap(), 190_569_292);
    }

    #[test]
    fn partition_count_overflow_is_an_error() {
        assert!(partition_count(400).is_ok());
        assert_eq!(partition_count(500), Err(Error::Overflow("p(n)")));
    }

    #[test]
    fn partition_count_matches_enumeration() {
        for n in 0..=30u64 {
            assert_eq!(
                partition_count(n as i64).unwrap(),
                enumerate_partitions(n, None, PartsFilter::Any).len() as u64
            );
        }
    }

    #[test]
    fn bg_rank_examples() {
        assert_eq!(bg_rank(&[13, 6, 5, 4, 3, 2]), 3);
        assert_eq!(bg_rank(&[]), 0);
        assert_eq!(bg_rank(&[7, 4, 3, 1]), 1);
        assert_eq!(bg_rank(&[10, 1]), -1);
    }

    #[test]
    fn columns_examples() {
        assert_eq!(columns(&s(&[7, 4, 3, 1])).as_slice(), &[1, 2, 3, 4, 3, 1, 1]);
        assert_eq!(columns(&s(&[1])).as_slice(), &[1]);
        assert_eq!(columns(&s(&[4, 2, 1])).as_slice(), &[1, 2, 3, 1]);
        assert!(columns(&StrictPartition::empty()).is_empty());
    }

    #[test]
    fn from_columns_examples() {
        let c = ColumnSequence::new(vec![1, 2, 3, 4, 3, 1, 1]).unwrap();
        assert_eq!(from_columns(&c).unwrap(), s(&[7, 4, 3, 1]));
        let c = ColumnSequence::new(vec![1]).unwrap();
        assert_eq!(from_columns(&c).unwrap(), s(&[1]));
        assert_eq!(columns(&s(&[4, 2])).as_slice(), &[1, 2, 2, 1]);
        let c = ColumnSequence::new(vec![1, 2, 2, 1]).unwrap();
        assert_eq!(from_columns(&c).unwrap(), s(&[4, 2]));
        assert_eq!(from_columns(&ColumnSequence::new(vec![]).unwrap()).unwrap(), StrictPartition::empty());
    }

    #[test]
    fn malformed_columns_are_rejected() {
        assert!(ColumnSequence::new(vec![2]).is_err());
        assert!(ColumnSequence::new(vec![1, 2, 1, 2]).is_err());
        assert!(ColumnSequence::new(vec![1, 0]).is_err());
        assert!(ColumnSequence::new(vec![1, 1, 1]).is_ok());
    }

    #[test]
    fn durfee_examples() {
        assert_eq!(
            durfee_rectangle(&p(&[12, 10, 9, 6, 4, 3, 1]), 6),
            DurfeeRect { rows: 3, cols: 9 }
        );
        assert_eq!(durfee_rectangle(&p(&[7, 4, 3, 1]), 0), DurfeeRect { rows: 3, cols: 3 });
        assert!(durfee_rectangle(&Partition::empty(), 2).is_absent());
        assert!(durfee_rectangle(&p(&[2, 2]), 2).is_absent());
    }

    #[test]
    fn invalid_partitions_are_rejected() {
        assert_eq!(Partition::new(vec![1, 2]), Err(Error::PartsNotDecreasing { index: 1 }));
        assert_eq!(Partition::new(vec![2, 0]), Err(Error::NonPositivePart { index: 1 }));
        assert_eq!(StrictPartition::new(vec![2, 2]), Err(Error::NotStrict { index: 1 }));
    }
}
