//! Dense univariate polynomials over the integers.
//!
//! Coefficients are stored in ascending power order with no trailing zeros,
//! so the zero polynomial is the empty vector and `coeffs.len() - 1` is the
//! degree. All arithmetic is exact over `BigInt`.

use num::bigint::BigInt;
use num::{Integer, One, Signed, Zero};
use std::fmt;

/// Polynomial in one variable with `BigInt` coefficients, lowest power first.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct IntPoly {
    coeffs: Vec<BigInt>,
}

impl IntPoly {
    pub fn zero() -> Self {
        IntPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        IntPoly::constant(BigInt::one())
    }

    pub fn constant(c: BigInt) -> Self {
        IntPoly::from_coeffs(vec![c])
    }

    /// `c * u^k`.
    pub fn monomial(c: BigInt, k: usize) -> Self {
        if c.is_zero() {
            return IntPoly::zero();
        }
        let mut coeffs = vec![BigInt::zero(); k + 1];
        coeffs[k] = c;
        IntPoly { coeffs }
    }

    /// Builds a polynomial, stripping trailing zero coefficients.
    pub fn from_coeffs(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        IntPoly { coeffs }
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Smallest power with nonzero coefficient, or `None` for zero.
    pub fn valuation(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }

    pub fn coeff(&self, k: usize) -> BigInt {
        self.coeffs.get(k).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn leading_coeff(&self) -> BigInt {
        self.coeffs.last().cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn neg(&self) -> IntPoly {
        IntPoly {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }

    pub fn add(&self, other: &IntPoly) -> IntPoly {
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut coeffs = Vec::with_capacity(n);
        for k in 0..n {
            coeffs.push(self.coeff(k) + other.coeff(k));
        }
        IntPoly::from_coeffs(coeffs)
    }

    pub fn sub(&self, other: &IntPoly) -> IntPoly {
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut coeffs = Vec::with_capacity(n);
        for k in 0..n {
            coeffs.push(self.coeff(k) - other.coeff(k));
        }
        IntPoly::from_coeffs(coeffs)
    }

    pub fn mul(&self, other: &IntPoly) -> IntPoly {
        if self.is_zero() || other.is_zero() {
            return IntPoly::zero();
        }
        let mut coeffs = vec![BigInt::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    coeffs[i + j] += a * b;
                }
            }
        }
        IntPoly::from_coeffs(coeffs)
    }

    pub fn mul_scalar(&self, s: &BigInt) -> IntPoly {
        if s.is_zero() {
            return IntPoly::zero();
        }
        IntPoly {
            coeffs: self.coeffs.iter().map(|c| c * s).collect(),
        }
    }

    /// Multiplies by `u^k`.
    pub fn mul_u_pow(&self, k: usize) -> IntPoly {
        if self.is_zero() {
            return IntPoly::zero();
        }
        let mut coeffs = vec![BigInt::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        IntPoly { coeffs }
    }

    /// Divides by `u^k`; requires valuation >= k.
    pub fn div_u_pow(&self, k: usize) -> IntPoly {
        if self.is_zero() {
            return IntPoly::zero();
        }
        assert!(
            self.valuation().unwrap() >= k,
            "division by u^{k} is not exact"
        );
        IntPoly {
            coeffs: self.coeffs[k..].to_vec(),
        }
    }

    /// Substitutes `u -> u^n`.
    pub fn subst_u_pow(&self, n: u32) -> IntPoly {
        assert!(n >= 1, "substitution exponent must be positive");
        if n == 1 || self.is_zero() {
            return self.clone();
        }
        let n = n as usize;
        let mut coeffs = vec![BigInt::zero(); (self.coeffs.len() - 1) * n + 1];
        for (k, c) in self.coeffs.iter().enumerate() {
            if !c.is_zero() {
                coeffs[k * n] = c.clone();
            }
        }
        IntPoly { coeffs }
    }

    /// Coefficient list reversed: `u^deg * p(1/u)`.
    pub fn reversed(&self) -> IntPoly {
        let mut coeffs = self.coeffs.clone();
        coeffs.reverse();
        IntPoly::from_coeffs(coeffs)
    }

    /// Gcd of all coefficients, non-negative; zero for the zero polynomial.
    pub fn content(&self) -> BigInt {
        let mut g = BigInt::zero();
        for c in &self.coeffs {
            g = g.gcd(c);
            if g.is_one() {
                break;
            }
        }
        g
    }

    /// Divides out the content and makes the leading coefficient positive.
    pub fn primitive(&self) -> IntPoly {
        if self.is_zero() {
            return IntPoly::zero();
        }
        let mut g = self.content();
        if self.leading_coeff().is_negative() {
            g = -g;
        }
        IntPoly {
            coeffs: self.coeffs.iter().map(|c| c / &g).collect(),
        }
    }

    /// Exact division; panics if `d` does not divide `self`.
    pub fn div_exact(&self, d: &IntPoly) -> IntPoly {
        assert!(!d.is_zero(), "division by the zero polynomial");
        if self.is_zero() {
            return IntPoly::zero();
        }
        let dn = self.degree().unwrap();
        let dd = d.degree().unwrap();
        assert!(dn >= dd, "exact division with too small a dividend");
        let lc = d.leading_coeff();
        let mut rem = self.coeffs.clone();
        let mut quot = vec![BigInt::zero(); dn - dd + 1];
        for k in (0..=dn - dd).rev() {
            let top = rem[k + dd].clone();
            if top.is_zero() {
                continue;
            }
            let (q, r) = top.div_rem(&lc);
            assert!(r.is_zero(), "inexact polynomial division");
            for (j, c) in d.coeffs.iter().enumerate() {
                let prod = &q * c;
                rem[k + j] -= prod;
            }
            quot[k] = q;
        }
        assert!(rem.iter().all(Zero::is_zero), "inexact polynomial division");
        IntPoly::from_coeffs(quot)
    }

    /// Polynomial gcd, returned primitive with positive leading coefficient.
    pub fn gcd(a: &IntPoly, b: &IntPoly) -> IntPoly {
        if a.is_zero() {
            return b.primitive();
        }
        if b.is_zero() {
            return a.primitive();
        }
        if coprime_mod_p(a, b) {
            return IntPoly::one();
        }
        // Primitive pseudo-remainder sequence.
        let mut f = a.primitive();
        let mut g = b.primitive();
        if f.degree() < g.degree() {
            std::mem::swap(&mut f, &mut g);
        }
        loop {
            let r = pseudo_rem(&f, &g);
            if r.is_zero() {
                return g.primitive();
            }
            f = g;
            g = r.primitive();
            if g.degree() == Some(0) {
                return IntPoly::one();
            }
        }
    }
}

/// Pseudo-remainder: `lc(g)^k * f mod g` up to a scalar, degree below `deg g`.
fn pseudo_rem(f: &IntPoly, g: &IntPoly) -> IntPoly {
    let dg = g.degree().unwrap();
    let lg = g.leading_coeff();
    let mut r = f.clone();
    while let Some(dr) = r.degree() {
        if dr < dg {
            break;
        }
        let lr = r.leading_coeff();
        r = r.mul_scalar(&lg).sub(&g.mul_u_pow(dr - dg).mul_scalar(&lr));
    }
    r
}

const GCD_PRIME: u64 = 2_147_483_647;

/// One-sided coprimality test: a constant gcd modulo a prime that preserves
/// both leading coefficients proves coprimality over the rationals.
fn coprime_mod_p(a: &IntPoly, b: &IntPoly) -> bool {
    let ra = reduce_mod_p(a);
    let rb = reduce_mod_p(b);
    let (mut f, mut g) = match (ra, rb) {
        (Some(f), Some(g)) => (f, g),
        _ => return false,
    };
    if f.last() == Some(&0) || g.last() == Some(&0) {
        return false;
    }
    while !g.is_empty() {
        mod_rem_in_place(&mut f, &g);
        std::mem::swap(&mut f, &mut g);
    }
    f.len() == 1
}

fn reduce_mod_p(p: &IntPoly) -> Option<Vec<u64>> {
    let m = BigInt::from(GCD_PRIME);
    let mut out = Vec::with_capacity(p.coeffs.len());
    for c in &p.coeffs {
        let r = c.mod_floor(&m);
        out.push(u64::try_from(r).ok()?);
    }
    while out.last() == Some(&0) {
        out.pop();
    }
    Some(out)
}

fn mod_rem_in_place(f: &mut Vec<u64>, g: &[u64]) {
    let dg = g.len() - 1;
    let inv_lg = mod_inv(g[dg]);
    while f.len() > dg {
        let lf = *f.last().unwrap();
        let df = f.len() - 1;
        if lf != 0 {
            let factor = mulmod(lf, inv_lg);
            for (j, &c) in g.iter().enumerate() {
                let idx = df - dg + j;
                let sub = mulmod(factor, c);
                f[idx] = (f[idx] + GCD_PRIME - sub) % GCD_PRIME;
            }
        }
        f.pop();
        while f.last() == Some(&0) {
            f.pop();
        }
    }
}

fn mulmod(a: u64, b: u64) -> u64 {
    ((a as u128 * b as u128) % GCD_PRIME as u128) as u64
}

fn mod_inv(a: u64) -> u64 {
    // Fermat: p is prime and a != 0 mod p.
    let mut base = a % GCD_PRIME;
    let mut exp = GCD_PRIME - 2;
    let mut acc = 1u64;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mulmod(acc, base);
        }
        base = mulmod(base, base);
        exp >>= 1;
    }
    acc
}

impl fmt::Debug for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match k {
                0 => write!(f, "{c}")?,
                1 if c.is_one() => write!(f, "u")?,
                1 => write!(f, "{c}*u")?,
                _ if c.is_one() => write!(f, "u^{k}")?,
                _ => write!(f, "{c}*u^{k}")?,
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(coeffs: &[i64]) -> IntPoly {
        IntPoly::from_coeffs(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    #[test]
    fn construction_strips_trailing_zeros() {
        assert_eq!(p(&[1, 2, 0, 0]), p(&[1, 2]));
        assert!(p(&[0, 0]).is_zero());
        assert_eq!(p(&[0, 0, 3]).valuation(), Some(2));
    }

    #[test]
    fn ring_operations() {
        let a = p(&[1, 1]);
        let b = p(&[-1, 1]);
        assert_eq!(a.mul(&b), p(&[-1, 0, 1]));
        assert_eq!(a.add(&b), p(&[0, 2]));
        assert_eq!(a.sub(&a), IntPoly::zero());
        assert_eq!(a.mul_u_pow(2), p(&[0, 0, 1, 1]));
        assert_eq!(p(&[0, 0, 2, 4]).div_u_pow(2), p(&[2, 4]));
    }

    #[test]
    fn substitution_spreads_exponents() {
        assert_eq!(p(&[1, -1]).subst_u_pow(3), p(&[1, 0, 0, -1]));
        assert_eq!(p(&[5]).subst_u_pow(7), p(&[5]));
    }

    #[test]
    fn gcd_of_cyclotomic_products() {
        // (1-u^2)(1-u^4) and (1-u^2)(1-u^6) share exactly (1-u^2)(1+u)... the
        // primitive gcd is determined up to sign; check by exact division.
        let a = p(&[1, 0, -1]).mul(&p(&[1, 0, 0, 0, -1]));
        let b = p(&[1, 0, -1]).mul(&p(&[1, 0, 0, 0, 0, 0, -1]));
        let g = IntPoly::gcd(&a, &b);
        let qa = a.div_exact(&g);
        let qb = b.div_exact(&g);
        assert_eq!(qa.mul(&g), a);
        assert_eq!(qb.mul(&g), b);
        assert_eq!(IntPoly::gcd(&qa, &qb), IntPoly::one());
    }

    #[test]
    fn gcd_of_coprime_is_one() {
        let a = p(&[1, 0, -1]);
        let b = p(&[1, 1, 1]);
        assert_eq!(IntPoly::gcd(&a, &b), IntPoly::one());
    }

    #[test]
    fn gcd_handles_zero_and_constants() {
        let a = p(&[2, 4]);
        assert_eq!(IntPoly::gcd(&a, &IntPoly::zero()), p(&[1, 2]));
        assert_eq!(IntPoly::gcd(&p(&[6]), &p(&[4])), IntPoly::one());
    }

    #[test]
    fn exact_division_round_trips() {
        let a = p(&[2, 3, 1]);
        let b = p(&[1, 1]);
        assert_eq!(a.div_exact(&b), p(&[2, 1]));
    }
}
