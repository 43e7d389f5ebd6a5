//! Multivariate power series over `QRat`, truncated in total `x`-degree.
//!
//! A series holds coefficients for dimension vectors `d` with `|d| <= order`;
//! absent keys are zero and zero coefficients are never stored. All
//! operations truncate back to the order of their operands, and plethystic
//! exponential and logarithm are mutually inverse on the maximal ideal.

use super::qrat::QRat;
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;
use std::fmt;
use thiserror::Error;

/// Dimension vector: one non-negative entry per quiver vertex. Ordered
/// lexicographically, which fixes the deterministic output order everywhere.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct DimVector(pub Vec<u32>);

impl DimVector {
    pub fn zero(nvars: usize) -> Self {
        DimVector(vec![0; nvars])
    }

    pub fn unit(nvars: usize, i: usize) -> Self {
        let mut d = vec![0; nvars];
        d[i] = 1;
        DimVector(d)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Total `|d|`.
    pub fn total(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&c| c == 0)
    }

    pub fn scaled(&self, n: u32) -> DimVector {
        DimVector(self.0.iter().map(|&c| c * n).collect())
    }

    pub fn plus(&self, other: &DimVector) -> DimVector {
        assert_eq!(self.len(), other.len(), "dimension vector length mismatch");
        DimVector(
            self.0
                .iter()
                .zip(&other.0)
                .map(|(&a, &b)| a + b)
                .collect(),
        )
    }
}

impl fmt::Display for DimVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

impl fmt::Debug for DimVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// All dimension vectors with `nvars` entries and `|d| <= max_total`, in
/// lexicographic order.
pub fn dim_vectors(nvars: usize, max_total: u32) -> Vec<DimVector> {
    let mut out = Vec::new();
    let mut current = vec![0u32; nvars];
    collect(&mut current, 0, max_total, &mut out);
    out.sort();
    return out;

    fn collect(current: &mut Vec<u32>, i: usize, budget: u32, out: &mut Vec<DimVector>) {
        if i == current.len() {
            out.push(DimVector(current.clone()));
            return;
        }
        for c in 0..=budget {
            current[i] = c;
            collect(current, i + 1, budget - c, out);
        }
        current[i] = 0;
    }
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum SeriesError {
    #[error("plethystic exponential requires a zero constant term, found {0}")]
    NonzeroConstantTerm(String),
    #[error("plethystic logarithm requires constant term 1, found {0}")]
    ConstantTermNotOne(String),
    #[error("series with constant term 0 has no multiplicative inverse")]
    NotInvertible,
}

#[derive(Clone, PartialEq, Eq)]
pub struct MSeries {
    nvars: usize,
    order: u32,
    coeffs: BTreeMap<DimVector, QRat>,
}

impl MSeries {
    pub fn zero(nvars: usize, order: u32) -> Self {
        MSeries {
            nvars,
            order,
            coeffs: BTreeMap::new(),
        }
    }

    pub fn one(nvars: usize, order: u32) -> Self {
        let mut s = MSeries::zero(nvars, order);
        s.set(DimVector::zero(nvars), QRat::one());
        s
    }

    pub fn monomial(nvars: usize, order: u32, d: DimVector, c: QRat) -> Self {
        let mut s = MSeries::zero(nvars, order);
        s.set(d, c);
        s
    }

    /// Builds a series from a coefficient rule evaluated at every `|d| <= order`.
    pub fn from_fn(nvars: usize, order: u32, f: impl Fn(&DimVector) -> QRat) -> Self {
        let mut s = MSeries::zero(nvars, order);
        for d in dim_vectors(nvars, order) {
            s.set(d.clone(), f(&d));
        }
        s
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn order(&self) -> u32 {
        self.order
    }

    pub fn coeff(&self, d: &DimVector) -> QRat {
        self.coeffs.get(d).cloned().unwrap_or_else(QRat::zero)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&DimVector, &QRat)> {
        self.coeffs.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    fn set(&mut self, d: DimVector, c: QRat) {
        assert_eq!(d.len(), self.nvars, "dimension vector length mismatch");
        if d.total() <= self.order && !c.is_zero() {
            self.coeffs.insert(d, c);
        } else {
            self.coeffs.remove(&d);
        }
    }

    pub fn constant_term(&self) -> QRat {
        self.coeff(&DimVector::zero(self.nvars))
    }

    fn compatible(&self, other: &MSeries) {
        assert_eq!(self.nvars, other.nvars, "variable count mismatch");
        assert_eq!(self.order, other.order, "truncation order mismatch");
    }

    pub fn add(&self, other: &MSeries) -> MSeries {
        self.compatible(other);
        let mut out = self.clone();
        for (d, c) in &other.coeffs {
            let v = out.coeff(d) + c;
            out.set(d.clone(), v);
        }
        out
    }

    pub fn sub(&self, other: &MSeries) -> MSeries {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> MSeries {
        MSeries {
            nvars: self.nvars,
            order: self.order,
            coeffs: self.coeffs.iter().map(|(d, c)| (d.clone(), -c)).collect(),
        }
    }

    pub fn mul(&self, other: &MSeries) -> MSeries {
        self.compatible(other);
        let mut out = MSeries::zero(self.nvars, self.order);
        for (d1, c1) in &self.coeffs {
            let t1 = d1.total();
            for (d2, c2) in &other.coeffs {
                if t1 + d2.total() > self.order {
                    continue;
                }
                let d = d1.plus(d2);
                let v = out.coeff(&d) + c1 * c2;
                out.set(d, v);
            }
        }
        out
    }

    pub fn scale(&self, s: &QRat) -> MSeries {
        let mut out = MSeries::zero(self.nvars, self.order);
        for (d, c) in &self.coeffs {
            out.set(d.clone(), c * s);
        }
        out
    }

    /// Applies a map to every coefficient (for example `q -> q^{-1}`).
    pub fn map_coeffs(&self, f: impl Fn(&QRat) -> QRat) -> MSeries {
        let mut out = MSeries::zero(self.nvars, self.order);
        for (d, c) in &self.coeffs {
            out.set(d.clone(), f(c));
        }
        out
    }

    /// Rescales `x_i -> u^s x_i`: the coefficient at `d` picks up `u^{s|d|}`.
    pub fn scale_x_by_u_pow(&self, s: i64) -> MSeries {
        let mut out = MSeries::zero(self.nvars, self.order);
        for (d, c) in &self.coeffs {
            out.set(d.clone(), c * QRat::u_pow(s * d.total() as i64));
        }
        out
    }

    /// Adams operation `p_n`: substitutes `x_i -> x_i^n` and `u -> u^n`.
    pub fn adams(&self, n: u32) -> MSeries {
        assert!(n >= 1, "adams index must be positive");
        if n == 1 {
            return self.clone();
        }
        let mut out = MSeries::zero(self.nvars, self.order);
        for (d, c) in &self.coeffs {
            if d.total() * n <= self.order {
                out.set(d.scaled(n), c.subst_u_pow(n));
            }
        }
        out
    }

    /// Multiplicative inverse; requires an invertible constant term.
    pub fn invert(&self) -> Result<MSeries, SeriesError> {
        let c = self.constant_term();
        if c.is_zero() {
            return Err(SeriesError::NotInvertible);
        }
        // 1/f = (1/c) * sum_k (-h)^k with h = f/c - 1 in the maximal ideal.
        let h = self.scale(&c.recip()).sub(&MSeries::one(self.nvars, self.order));
        let mut acc = MSeries::one(self.nvars, self.order);
        let mut term = MSeries::one(self.nvars, self.order);
        for _ in 1..=self.order {
            term = term.mul(&h).neg();
            if term.is_zero() {
                break;
            }
            acc = acc.add(&term);
        }
        Ok(acc.scale(&c.recip()))
    }

    /// Plethystic exponential `Exp(f) = exp(sum_n p_n(f)/n)`.
    pub fn pleth_exp(&self) -> Result<MSeries, SeriesError> {
        let c = self.constant_term();
        if !c.is_zero() {
            return Err(SeriesError::NonzeroConstantTerm(c.to_string()));
        }
        let mut s = MSeries::zero(self.nvars, self.order);
        for n in 1..=self.order.max(1) {
            let a = self.adams(n);
            if a.is_zero() {
                continue;
            }
            s = s.add(&a.scale(&QRat::rational(1, n as i64)));
        }
        // exp of a series in the maximal ideal
        let mut acc = MSeries::one(self.nvars, self.order);
        let mut term = MSeries::one(self.nvars, self.order);
        for k in 1..=self.order {
            term = term.mul(&s).scale(&QRat::rational(1, k as i64));
            if term.is_zero() {
                break;
            }
            acc = acc.add(&term);
        }
        Ok(acc)
    }

    /// Plethystic logarithm, the inverse of `pleth_exp`; requires constant
    /// term 1.
    pub fn pleth_log(&self) -> Result<MSeries, SeriesError> {
        let c = self.constant_term();
        if !c.is_one() {
            return Err(SeriesError::ConstantTermNotOne(c.to_string()));
        }
        // log(1+h) = sum_k (-1)^{k+1} h^k / k
        let h = self.sub(&MSeries::one(self.nvars, self.order));
        let mut log = MSeries::zero(self.nvars, self.order);
        let mut pow = MSeries::one(self.nvars, self.order);
        for k in 1..=self.order {
            pow = pow.mul(&h);
            if pow.is_zero() {
                break;
            }
            let sign = if k % 2 == 1 { 1 } else { -1 };
            log = log.add(&pow.scale(&QRat::rational(sign, k as i64)));
        }
        // Moebius inversion of log = sum_n p_n(f)/n.
        let mut out = MSeries::zero(self.nvars, self.order);
        for n in 1..=self.order.max(1) {
            let m = moebius(n);
            if m == 0 {
                continue;
            }
            let a = log.adams(n);
            if a.is_zero() {
                continue;
            }
            out = out.add(&a.scale(&QRat::rational(m, n as i64)));
        }
        Ok(out)
    }
}

fn moebius(n: u32) -> i64 {
    assert!(n >= 1);
    let mut n = n;
    let mut sign = 1i64;
    let mut p = 2;
    while p * p <= n {
        if n % p == 0 {
            n /= p;
            if n % p == 0 {
                return 0;
            }
            sign = -sign;
        }
        p += 1;
    }
    if n > 1 {
        sign = -sign;
    }
    sign
}

impl fmt::Debug for MSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "series (order {}):", self.order)?;
        for (d, c) in &self.coeffs {
            writeln!(f, "  {d}: {c}")?;
        }
        Ok(())
    }
}


#[cfg(test)]
impl QRat {
    /// Test-only constructor from raw coefficient slices.
    pub fn new_test(num: &[i64], den: &[i64]) -> QRat {
        use super::poly::IntPoly;
        use num::bigint::BigInt;
        QRat::new(
            IntPoly::from_coeffs(num.iter().map(|&c| BigInt::from(c)).collect()),
            IntPoly::from_coeffs(den.iter().map(|&c| BigInt::from(c)).collect()),
        )
    }
}
