//! Exact truncated power series in `q` and the generating functions built
//! from them: `(q;q)_k`, the trivariate coefficients of `S(x, y)`, and the
//! BG-rank refinement of the strict-partition generating function.

use std::fmt;
use std::ops::{Add, Mul};

use serde::Serialize;

use crate::error::{Error, Result};
use crate::partitions::partition_count;

/// `sum_{n=0}^{N} coeffs[n] q^n`, arithmetic modulo `q^{N+1}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TruncatedSeries {
    coeffs: Vec<i64>,
}

impl TruncatedSeries {
    pub fn zero(order: usize) -> Self {
        Self { coeffs: vec![0; order + 1] }
    }

    pub fn one(order: usize) -> Self {
        Self::monomial(order, 1, 0)
    }

    /// `c q^e`, or the zero series if `e` is past the truncation.
    pub fn monomial(order: usize, c: i64, e: usize) -> Self {
        let mut s = Self::zero(order);
        if e <= order {
            s.coeffs[e] = c;
        }
        s
    }

    /// Coefficients past `order` are dropped; missing ones are zero.
    pub fn from_coeffs(order: usize, mut coeffs: Vec<i64>) -> Self {
        coeffs.resize(order + 1, 0);
        Self { coeffs }
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[i64] {
        &self.coeffs
    }

    pub fn coeff(&self, n: usize) -> i64 {
        self.coeffs.get(n).copied().unwrap_or(0)
    }

    fn check_order(&self, other: &Self) -> Result<()> {
        if self.order() != other.order() {
            return Err(Error::TruncationMismatch(self.order(), other.order()));
        }
        Ok(())
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        self.check_order(other)?;
        let coeffs = self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(x, y)| x.checked_add(*y).ok_or(Error::Overflow("series addition")))
            .collect::<Result<_>>()?;
        Ok(Self { coeffs })
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self> {
        self.check_order(other)?;
        let coeffs = self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(x, y)| x.checked_sub(*y).ok_or(Error::Overflow("series subtraction")))
            .collect::<Result<_>>()?;
        Ok(Self { coeffs })
    }

    pub fn try_mul(&self, other: &Self) -> Result<Self> {
        self.check_order(other)?;
        let n = self.order();
        let mut out = vec![0i64; n + 1];
        for (i, &x) in self.coeffs.iter().enumerate() {
            if x == 0 {
                continue;
            }
            for (j, &y) in other.coeffs[..=n - i].iter().enumerate() {
                let term = x.checked_mul(y).ok_or(Error::Overflow("series product"))?;
                out[i + j] = out[i + j].checked_add(term).ok_or(Error::Overflow("series product"))?;
            }
        }
        Ok(Self { coeffs: out })
    }

    /// Multiplicative inverse; the constant term must be ±1.
    pub fn reciprocal(&self) -> Result<Self> {
        let c0 = self.coeffs[0];
        if c0 != 1 && c0 != -1 {
            return Err(Error::NonUnitConstantTerm(c0));
        }
        let n = self.order();
        let mut inv = vec![0i64; n + 1];
        inv[0] = c0;
        for m in 1..=n {
            let mut acc: i64 = 0;
            for i in 1..=m {
                let term = self.coeffs[i]
                    .checked_mul(inv[m - i])
                    .ok_or(Error::Overflow("series reciprocal"))?;
                acc = acc.checked_add(term).ok_or(Error::Overflow("series reciprocal"))?;
            }
            // c0 * inv[m] = -acc, and c0 is its own inverse
            inv[m] = acc.checked_neg().ok_or(Error::Overflow("series reciprocal"))? * c0;
        }
        Ok(Self { coeffs: inv })
    }

    /// Multiplies by `q^e`.
    pub fn shift(&self, e: usize) -> Self {
        let n = self.order();
        let mut coeffs = vec![0i64; n + 1];
        if e <= n {
            coeffs[e..].copy_from_slice(&self.coeffs[..=n - e]);
        }
        Self { coeffs }
    }
}

impl Add for &TruncatedSeries {
    type Output = TruncatedSeries;

    /// Panics on mismatched orders or overflow; use [`TruncatedSeries::try_add`]
    /// to handle those.
    fn add(self, rhs: Self) -> TruncatedSeries {
        self.try_add(rhs).expect("series addition")
    }
}

impl Mul for &TruncatedSeries {
    type Output = TruncatedSeries;

    fn mul(self, rhs: Self) -> TruncatedSeries {
        self.try_mul(rhs).expect("series product")
    }
}

impl fmt::Display for TruncatedSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (e, &c) in self.coeffs.iter().enumerate() {
            if c == 0 {
                continue;
            }
            let sign = if c < 0 { "-" } else { "+" };
            if first {
                if c < 0 {
                    f.write_str("-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            first = false;
            let abs = c.unsigned_abs();
            match (e, abs) {
                (0, _) => write!(f, "{abs}")?,
                (1, 1) => f.write_str("q")?,
                (1, _) => write!(f, "{abs}q")?,
                (_, 1) => write!(f, "q^{e}")?,
                _ => write!(f, "{abs}q^{e}")?,
            }
        }
        if first {
            f.write_str("0")?;
        }
        write!(f, " + O(q^{})", self.order() + 1)
    }
}

/// `(q;q)_k = prod_{n=1}^{k} (1 - q^n)` truncated at `order`.
pub fn pochhammer_q(k: usize, order: usize) -> Result<TruncatedSeries> {
    let mut acc = TruncatedSeries::one(order);
    for n in 1..=k.min(order) {
        let mut factor = TruncatedSeries::one(order);
        factor.coeffs[n] = -1;
        acc = acc.try_mul(&factor)?;
    }
    Ok(acc)
}

/// Coefficients of `x^a y^b q^n` in `S(x, y)` for `a <= max_a`,
/// `b <= max_b`, `n <= order`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CoeffTable {
    max_a: usize,
    max_b: usize,
    order: usize,
    entries: Vec<i64>,
}

impl CoeffTable {
    fn zero(max_a: usize, max_b: usize, order: usize) -> Self {
        Self { max_a, max_b, order, entries: vec![0; (max_a + 1) * (max_b + 1) * (order + 1)] }
    }

    fn index(&self, a: usize, b: usize, n: usize) -> usize {
        (a * (self.max_b + 1) + b) * (self.order + 1) + n
    }

    pub fn max_a(&self) -> usize {
        self.max_a
    }

    pub fn max_b(&self) -> usize {
        self.max_b
    }

    pub fn order(&self) -> usize {
        self.order
    }

    /// Panics if any index is out of range.
    pub fn entry(&self, a: usize, b: usize, n: usize) -> i64 {
        assert!(a <= self.max_a && b <= self.max_b && n <= self.order, "index out of range");
        self.entries[self.index(a, b, n)]
    }

    fn add_slice(&mut self, a: usize, b: usize, series: &TruncatedSeries) -> Result<()> {
        for (n, &c) in series.coeffs().iter().enumerate() {
            let idx = self.index(a, b, n);
            self.entries[idx] =
                self.entries[idx].checked_add(c).ok_or(Error::Overflow("coefficient table"))?;
        }
        Ok(())
    }

    /// `(a, b, n, coefficient)` in lexicographic index order.
    pub fn iter(&self) -> impl Iterator<Item = (usize, usize, usize, i64)> + '_ {
        (0..=self.max_a).flat_map(move |a| {
            (0..=self.max_b)
                .flat_map(move |b| (0..=self.order).map(move |n| (a, b, n, self.entry(a, b, n))))
        })
    }
}

/// Expands `S(x, y)` term by term. Each summand
/// `(1 + (y-1) q^k) y^{2k-1} q^{k(i+k)} / ((q;q)_k (q;q)_{i+k})` splits into
/// the `y^{2k-1}` slice `q^{k(i+k)} (1 - q^k) R` and the `y^{2k}` slice
/// `q^{k(i+k)+k} R`, with `R = 1 / ((q;q)_k (q;q)_{i+k})`.
pub fn s_coefficients(max_a: usize, max_b: usize, order: usize) -> Result<CoeffTable> {
    let mut table = CoeffTable::zero(max_a, max_b, order);
    table.entries[0] = 1;
    let reciprocals: Vec<TruncatedSeries> = (0..=max_a + order)
        .map(|k| pochhammer_q(k, order)?.reciprocal())
        .collect::<Result<_>>()?;
    for i in 0..=max_a {
        for k in 1.. {
            let lead = k * (i + k);
            if lead > order || 2 * k - 1 > max_b {
                break;
            }
            let r = reciprocals[k].try_mul(&reciprocals[i + k])?;
            let base = r.shift(lead);
            let odd = base.try_sub(&base.shift(k))?;
            table.add_slice(i, 2 * k - 1, &odd)?;
            if 2 * k <= max_b {
                table.add_slice(i, 2 * k, &base.shift(k))?;
            }
        }
    }
    Ok(table)
}

/// Number of strict partitions of `n` with BG-rank `j`, via
/// `p((n - j(2j-1)) / 2)`; zero when that argument is negative or not an
/// integer.
pub fn q_j_count(j: i64, n: u64) -> Result<u64> {
    let excess = n as i64 - j * (2 * j - 1);
    if excess < 0 || excess % 2 != 0 {
        return Ok(0);
    }
    partition_count(excess / 2)
}

/// `q^{j(2j-1)} / prod_{i>=1} (1 - q^{2i})` truncated at `order`.
pub fn gf_p_j(j: i64, order: usize) -> Result<TruncatedSeries> {
    let lead = j * (2 * j - 1);
    if lead < 0 || lead as usize > order {
        return Ok(TruncatedSeries::zero(order));
    }
    let mut denominator = TruncatedSeries::one(order);
    for i in 1..=order / 2 {
        let mut factor = TruncatedSeries::one(order);
        factor.coeffs[2 * i] = -1;
        denominator = denominator.try_mul(&factor)?;
    }
    Ok(denominator.reciprocal()?.shift(lead as usize))
}
