//! (a,b)-sequences: positive integer sequences that open with the staircase
//! `a+1, a+2, ..., a+b`, are weakly decreasing afterwards, and have
//! alternating sum `sum_i (-1)^i d_i = 0`.
//!
//! The shape parameters are derived, never supplied: `a = d_1 - 1` and `b`
//! is the length of the maximal initial staircase run. Since `d_{b+1}` can
//! never equal `a + b + 1` without breaking monotonicity, this makes `(a, b)`
//! unique for any entry list.

use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::partitions::alternating_sum;

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct ABSequence {
    entries: Vec<u64>,
    a: u64,
    b: u64,
    weight: u64,
}

impl ABSequence {
    /// The empty sequence ε, with `a = b = l = |ε| = 0`.
    pub fn epsilon() -> Self {
        Self { entries: Vec::new(), a: 0, b: 0, weight: 0 }
    }

    /// Validates a raw entry list. An empty list yields ε.
    pub fn validate(raw: &[i64]) -> Result<Self> {
        let mut entries = Vec::with_capacity(raw.len());
        for (index, &d) in raw.iter().enumerate() {
            if d <= 0 {
                return Err(Error::NonPositiveEntry { index });
            }
            entries.push(d as u64);
        }
        Self::from_entries(entries)
    }

    /// Same as [`ABSequence::validate`] for entries that are already unsigned.
    pub fn from_entries(entries: Vec<u64>) -> Result<Self> {
        if entries.is_empty() {
            return Ok(Self::epsilon());
        }
        if let Some(index) = entries.iter().position(|&d| d == 0) {
            return Err(Error::NonPositiveEntry { index });
        }
        let a = entries[0] - 1;
        let b = entries
            .iter()
            .enumerate()
            .take_while(|&(i, &d)| d == a + i as u64 + 1)
            .count();
        for index in b..entries.len() {
            if entries[index] > entries[index - 1] {
                return Err(Error::NotWeaklyDecreasing { index });
            }
        }
        let alt = alternating_sum(&entries);
        if alt != 0 {
            return Err(Error::NonzeroAlternatingSum(alt));
        }
        let weight = entries
            .iter()
            .try_fold(0u64, |acc, &d| acc.checked_add(d))
            .ok_or(Error::Overflow("sequence weight"))?;
        Ok(Self { entries, a, b: b as u64, weight })
    }

    pub fn entries(&self) -> &[u64] {
        &self.entries
    }

    pub fn a(&self) -> u64 {
        self.a
    }

    pub fn b(&self) -> u64 {
        self.b
    }

    /// Length `l`.
    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_epsilon(&self) -> bool {
        self.entries.is_empty()
    }

    /// Same as [`is_epsilon`](Self::is_epsilon).
    pub fn is_empty(&self) -> bool {
        self.is_epsilon()
    }

    /// `|Δ|`, always even.
    pub fn weight(&self) -> u64 {
        self.weight
    }

    /// `|Δ|_a`, always 0 for a validated sequence.
    pub fn alt_sum(&self) -> i64 {
        alternating_sum(&self.entries)
    }

    /// Alternating sums of the first `0, 1, ..., l` entries.
    pub fn prefix_alt_sums(&self) -> Vec<i64> {
        prefix_alt_sums(&self.entries)
    }
}

impl fmt::Display for ABSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.entries.is_empty() {
            return f.write_str("ε");
        }
        f.write_str("{")?;
        for (i, d) in self.entries.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{d}")?;
        }
        f.write_str("}")
    }
}

pub(crate) fn prefix_alt_sums(values: &[u64]) -> Vec<i64> {
    let mut sums = Vec::with_capacity(values.len() + 1);
    let mut acc = 0i64;
    sums.push(acc);
    for (i, &v) in values.iter().enumerate() {
        acc += if i % 2 == 0 { -(v as i64) } else { v as i64 };
        sums.push(acc);
    }
    sums
}

/// Every member of `S(a,b)` with weight `2 * half_weight`, tails in
/// descending lexicographic order. Never returns ε.
pub fn enumerate_s(a: u64, b: u64, half_weight: u64) -> Vec<ABSequence> {
    let mut out = Vec::new();
    if b == 0 {
        return out;
    }
    let total = 2 * half_weight;
    let prefix: Vec<u64> = (1..=b).map(|i| a + i).collect();
    let prefix_weight: u64 = prefix.iter().sum();
    if prefix_weight > total {
        return out;
    }
    let alt = alternating_sum(&prefix);
    let mut current = prefix;
    extend_tail(&mut current, a + b, total - prefix_weight, alt, a, b, &mut out);
    out
}

fn extend_tail(
    current: &mut Vec<u64>,
    bound: u64,
    remaining: u64,
    alt: i64,
    a: u64,
    b: u64,
    out: &mut Vec<ABSequence>,
) {
    // every later entry moves the alternating sum by at most itself
    if alt.unsigned_abs() > remaining {
        return;
    }
    if remaining == 0 {
        if alt == 0 {
            let weight = current.iter().sum();
            out.push(ABSequence { entries: current.clone(), a, b, weight });
        }
        return;
    }
    let next_positive = current.len() % 2 == 1;
    for d in (1..=bound.min(remaining)).rev() {
        let next_alt = if next_positive { alt + d as i64 } else { alt - d as i64 };
        current.push(d);
        extend_tail(current, d, remaining - d, next_alt, a, b, out);
        current.pop();
    }
}

/// True iff no two consecutive prefix alternating sums (at positions
/// `m` and `m+1`, `0 < m < l`) are both strictly positive or both strictly
/// negative.
pub fn check_prefix_sign_property(d: &ABSequence) -> bool {
    let sums = d.prefix_alt_sums();
    let l = d.len();
    (1..l).all(|m| {
        let (x, y) = (sums[m], sums[m + 1]);
        !((x > 0 && y > 0) || (x < 0 && y < 0))
    })
}

/// For `n >= b - 1` with a vanishing `n`-th prefix alternating sum: checks
/// that `n ≡ l (mod 2)` and the remaining entries come in equal adjacent
/// pairs `d_{n+1} = d_{n+2} >= d_{n+3} = d_{n+4} >= ...`.
pub fn check_pairing_property(d: &ABSequence, n: usize) -> Result<bool> {
    if (n as u64) + 1 < d.b() {
        return Err(Error::PreconditionViolated(format!("n = {n} is below b - 1 = {}", d.b() - 1)));
    }
    if n > d.len() {
        return Err(Error::PreconditionViolated(format!("n = {n} exceeds length {}", d.len())));
    }
    let prefix = alternating_sum(&d.entries[..n]);
    if prefix != 0 {
        return Err(Error::PreconditionViolated(format!(
            "prefix alternating sum at n = {n} is {prefix}"
        )));
    }
    let tail = &d.entries[n..];
    if !tail.len().is_multiple_of(2) {
        return Ok(false);
    }
    let paired = tail.chunks_exact(2).all(|pair| pair[0] == pair[1]);
    let decreasing = tail.windows(2).all(|w| w[0] >= w[1]);
    Ok(paired && decreasing)
}

/// Positions `n >= b - 1` (including 0 when `b = 1`) at which the prefix
/// alternating sum vanishes.
pub fn zero_prefix_positions(d: &ABSequence) -> Vec<usize> {
    let start = d.b().saturating_sub(1) as usize;
    d.prefix_alt_sums()
        .into_iter()
        .enumerate()
        .skip(start)
        .filter(|&(_, s)| s == 0)
        .map(|(n, _)| n)
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partitions::{enumerate_partitions, PartsFilter};

    fn seq(raw: &[u64]) -> ABSequence {
        ABSequence::from_entries(raw.to_vec()).unwrap()
    }

    const PAPER_DELTA: [i64; 14] = [7, 8, 9, 10, 11, 11, 8, 7, 5, 5, 4, 3, 1, 1];

    #[test]
    fn validate_examples() {
        let d = ABSequence::validate(&PAPER_DELTA).unwrap();
        assert_eq!((d.a(), d.b(), d.weight(), d.len()), (6, 5, 90, 14));
        let d = ABSequence::validate(&[2, 3, 1]).unwrap();
        assert_eq!((d.a(), d.b(), d.weight()), (1, 2, 6));
        assert_eq!(ABSequence::validate(&[1, 1, 1]), Err(Error::NonzeroAlternatingSum(-1)));
        assert_eq!(ABSequence::validate(&[]).unwrap(), ABSequence::epsilon());
    }

    #[test]
    fn validate_errors() {
        assert_eq!(ABSequence::validate(&[1, 0]), Err(Error::NonPositiveEntry { index: 1 }));
        assert_eq!(ABSequence::validate(&[-2]), Err(Error::NonPositiveEntry { index: 0 }));
        // 1,2 then 4 jumps above the staircase
        assert_eq!(ABSequence::validate(&[1, 2, 4, 3]), Err(Error::NotWeaklyDecreasing { index: 2 }));
        assert_eq!(ABSequence::validate(&[2, 1, 1, 2]), Err(Error::NotWeaklyDecreasing { index: 3 }));
    }

    #[test]
    fn validate_is_idempotent() {
        let d = ABSequence::validate(&PAPER_DELTA).unwrap();
        assert_eq!(ABSequence::from_entries(d.entries().to_vec()).unwrap(), d);
    }

    #[test]
    fn enumerate_paper_examples() {
        let got = enumerate_s(5, 1, 9);
        assert_eq!(
            got,
            vec![
                seq(&[6, 6, 3, 3]),
                seq(&[6, 6, 2, 2, 1, 1]),
                seq(&[6, 6, 1, 1, 1, 1, 1, 1]),
            ]
        );
        let mut got: Vec<Vec<u64>> =
            enumerate_s(0, 3, 6).into_iter().map(|d| d.entries().to_vec()).collect();
        got.sort();
        let mut want = vec![
            vec![1, 2, 3, 3, 2, 1],
            vec![1, 2, 3, 3, 1, 1, 1],
            vec![1, 2, 3, 2, 1, 1, 1, 1],
            vec![1, 2, 3, 2, 2, 2],
        ];
        want.sort();
        assert_eq!(got, want);
        assert_eq!(enumerate_s(0, 1, 1), vec![seq(&[1, 1])]);
    }

    #[test]
    fn enumerate_s_rejects_degenerate_shapes() {
        assert!(enumerate_s(0, 0, 3).is_empty());
        assert!(enumerate_s(3, 3, 0).is_empty());
        assert!(enumerate_s(0, 1, 0).is_empty());
    }

    /// Unpruned reference: staircase prefix followed by every partition of
    /// the remaining weight with parts at most `a + b`, filtered by validation.
    fn unpruned(a: u64, b: u64, n: u64) -> Vec<Vec<u64>> {
        let prefix: Vec<u64> = (1..=b).map(|i| a + i).collect();
        let pw: u64 = prefix.iter().sum();
        if pw > 2 * n {
            return Vec::new();
        }
        let mut out = Vec::new();
        for tail in enumerate_partitions(2 * n - pw, Some(a + b), PartsFilter::Any) {
            let mut v = prefix.clone();
            v.extend_from_slice(tail.parts());
            if let Ok(d) = ABSequence::from_entries(v) {
                if d.a() == a && d.b() == b {
                    out.push(d.entries().to_vec());
                }
            }
        }
        out.sort();
        out
    }

    #[test]
    fn pruned_enumeration_is_complete() {
        for a in 0..=3 {
            for b in 1..=4 {
                for n in 0..=9 {
                    let mut got: Vec<Vec<u64>> =
                        enumerate_s(a, b, n).into_iter().map(|d| d.entries().to_vec()).collect();
                    got.sort();
                    assert_eq!(got, unpruned(a, b, n), "a={a} b={b} n={n}");
                }
            }
        }
    }

    #[test]
    fn enumerated_members_validate_to_same_shape() {
        for a in 0..=3 {
            for b in 1..=4 {
                for n in 0..=10 {
                    for d in enumerate_s(a, b, n) {
                        let again = ABSequence::from_entries(d.entries().to_vec()).unwrap();
                        assert_eq!((again.a(), again.b()), (a, b));
                        assert_eq!(again.weight(), 2 * n);
                        assert_eq!(again.weight() % 2, 0);
                    }
                }
            }
        }
    }

    #[test]
    fn prefix_sign_examples() {
        assert!(check_prefix_sign_property(&ABSequence::validate(&PAPER_DELTA).unwrap()));
        assert!(check_prefix_sign_property(&seq(&[1, 1])));
    }

    #[test]
    fn pairing_examples() {
        assert!(check_pairing_property(&seq(&[6, 6, 3, 3]), 0).unwrap());
        assert!(check_pairing_property(&seq(&[1, 1]), 0).unwrap());
        let d = ABSequence::validate(&PAPER_DELTA).unwrap();
        assert!(matches!(check_pairing_property(&d, 1), Err(Error::PreconditionViolated(_))));
        assert!(matches!(check_pairing_property(&d, 5), Err(Error::PreconditionViolated(_))));
    }

    #[test]
    fn lemma_properties_hold_on_sweep() {
        for a in 0..=3 {
            for b in 1..=4 {
                for n in 0..=10 {
                    for d in enumerate_s(a, b, n) {
                        assert!(check_prefix_sign_property(&d), "{d}");
                        for pos in zero_prefix_positions(&d) {
                            assert_eq!(check_pairing_property(&d, pos), Ok(true), "{d} at {pos}");
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn b_one_sequences_are_doubled_partitions_with_fixed_top() {
        for a in 0..=3u64 {
            for n in 0..=12u64 {
                let mut halves: Vec<Vec<u64>> = enumerate_s(a, 1, n)
                    .iter()
                    .map(|d| d.entries().chunks_exact(2).map(|p| p[0]).collect())
                    .collect();
                halves.sort();
                let mut want: Vec<Vec<u64>> = enumerate_partitions(n, Some(a + 1), PartsFilter::Any)
                    .into_iter()
                    .filter(|p| p.largest() == a + 1)
                    .map(|p| p.parts().to_vec())
                    .collect();
                want.sort();
                assert_eq!(halves, want, "a={a} n={n}");
            }
        }
    }
}
