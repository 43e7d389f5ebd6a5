//! Exact rational functions in `u = q^{1/2}` over the rationals.
//!
//! Canonical form maintained by every constructor and operation:
//!
//! * numerator and denominator are integer polynomials in `u`,
//! * the fraction is reduced: no common polynomial factor, and the integer
//!   contents of numerator and denominator are coprime,
//! * the denominator has a positive leading coefficient (and is `1` when the
//!   value is zero).
//!
//! Equality is therefore structural. Half-integer powers of `q` are integer
//! powers of `u`, so the field also hosts Laurent polynomials in `q^{1/2}`.

use super::poly::IntPoly;
use num::bigint::BigInt;
use num::rational::BigRational;
use num::{Integer, One, Signed, Zero};
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::str::FromStr;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct QRat {
    num: IntPoly,
    den: IntPoly,
}

/// Truncated Laurent expansion of a rational function at `u = 0`.
///
/// `coeffs[0]` is the coefficient of `u^valuation`; the expansion is valid
/// through `u^cap` inclusive.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LaurentExpansion {
    pub valuation: i64,
    pub cap: i64,
    pub coeffs: Vec<BigRational>,
}

impl LaurentExpansion {
    pub fn coeff(&self, e: i64) -> BigRational {
        assert!(e <= self.cap, "exponent {e} beyond expansion cap {}", self.cap);
        if e < self.valuation {
            return BigRational::zero();
        }
        self.coeffs
            .get((e - self.valuation) as usize)
            .cloned()
            .unwrap_or_else(BigRational::zero)
    }
}

impl QRat {
    fn make(num: IntPoly, den: IntPoly) -> QRat {
        let mut r = QRat { num, den };
        r.canonicalize();
        r
    }

    pub fn new(num: IntPoly, den: IntPoly) -> QRat {
        assert!(!den.is_zero(), "zero denominator");
        QRat::make(num, den)
    }

    pub fn zero() -> QRat {
        QRat {
            num: IntPoly::zero(),
            den: IntPoly::one(),
        }
    }

    pub fn one() -> QRat {
        QRat {
            num: IntPoly::one(),
            den: IntPoly::one(),
        }
    }

    pub fn integer(n: i64) -> QRat {
        QRat::from_poly(IntPoly::constant(BigInt::from(n)))
    }

    pub fn rational(p: i64, q: i64) -> QRat {
        assert!(q != 0, "zero denominator");
        QRat::make(
            IntPoly::constant(BigInt::from(p)),
            IntPoly::constant(BigInt::from(q)),
        )
    }

    pub fn from_poly(num: IntPoly) -> QRat {
        QRat {
            num,
            den: IntPoly::one(),
        }
    }

    /// `u^e`, any integer `e`.
    pub fn u_pow(e: i64) -> QRat {
        if e >= 0 {
            QRat::from_poly(IntPoly::monomial(BigInt::one(), e as usize))
        } else {
            QRat {
                num: IntPoly::one(),
                den: IntPoly::monomial(BigInt::one(), (-e) as usize),
            }
        }
    }

    /// `(-u)^e = (-1)^e u^e`, any integer `e`.
    pub fn neg_u_pow(e: i64) -> QRat {
        let p = QRat::u_pow(e);
        if e.rem_euclid(2) == 0 {
            p
        } else {
            -p
        }
    }

    /// `1 - u^e`, any integer `e`.
    pub fn one_minus_u_pow(e: i64) -> QRat {
        QRat::one() - QRat::u_pow(e)
    }

    pub fn num(&self) -> &IntPoly {
        &self.num
    }

    pub fn den(&self) -> &IntPoly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    fn canonicalize(&mut self) {
        assert!(!self.den.is_zero(), "zero denominator");
        if self.num.is_zero() {
            self.den = IntPoly::one();
            return;
        }
        let g = IntPoly::gcd(&self.num, &self.den);
        if !g.is_one() {
            self.num = self.num.div_exact(&g);
            self.den = self.den.div_exact(&g);
        }
        let c = self.num.content().gcd(&self.den.content());
        if !c.is_one() {
            let c = IntPoly::constant(c);
            self.num = self.num.div_exact(&c);
            self.den = self.den.div_exact(&c);
        }
        if self.den.leading_coeff().is_negative() {
            self.num = self.num.neg();
            self.den = self.den.neg();
        }
    }

    pub fn recip(&self) -> QRat {
        assert!(!self.is_zero(), "reciprocal of zero");
        let mut r = QRat {
            num: self.den.clone(),
            den: self.num.clone(),
        };
        // Already reduced; only the sign convention can be violated.
        if r.den.leading_coeff().is_negative() {
            r.num = r.num.neg();
            r.den = r.den.neg();
        }
        r
    }

    pub fn pow(&self, e: i64) -> QRat {
        if e == 0 {
            return QRat::one();
        }
        let base = if e > 0 { self.clone() } else { self.recip() };
        let mut acc = QRat::one();
        for _ in 0..e.unsigned_abs() {
            acc = &acc * &base;
        }
        acc
    }

    /// Substitution `u -> u^n`; a field endomorphism, so no re-reduction is
    /// needed.
    pub fn subst_u_pow(&self, n: u32) -> QRat {
        QRat {
            num: self.num.subst_u_pow(n),
            den: self.den.subst_u_pow(n),
        }
    }

    /// Substitution `u -> 1/u` (that is, `q -> q^{-1}`); an involution.
    pub fn invert_q(&self) -> QRat {
        if self.is_zero() {
            return QRat::zero();
        }
        let dn = self.num.degree().unwrap();
        let dd = self.den.degree().unwrap();
        let rn = self.num.reversed();
        let rd = self.den.reversed();
        if dd >= dn {
            QRat::make(rn.mul_u_pow(dd - dn), rd)
        } else {
            QRat::make(rn, rd.mul_u_pow(dn - dd))
        }
    }

    /// Laurent expansion at `u = 0` through `u^cap` inclusive.
    pub fn laurent(&self, cap: i64) -> LaurentExpansion {
        if self.is_zero() {
            return LaurentExpansion {
                valuation: 0,
                cap,
                coeffs: Vec::new(),
            };
        }
        let w = self.den.valuation().unwrap();
        let den0 = self.den.div_u_pow(w);
        let vnum = self.num.valuation().unwrap();
        let valuation = vnum as i64 - w as i64;
        if valuation > cap {
            return LaurentExpansion {
                valuation,
                cap,
                coeffs: Vec::new(),
            };
        }
        let len = (cap - valuation + 1) as usize;
        let c0 = BigRational::from(den0.coeff(0));
        let d0 = den0.degree().unwrap();
        let mut inv: Vec<BigRational> = Vec::with_capacity(len);
        inv.push(c0.recip());
        for t in 1..len {
            let mut acc = BigRational::zero();
            for s in 1..=d0.min(t) {
                let c = den0.coeff(s);
                if !c.is_zero() {
                    acc += BigRational::from(c) * &inv[t - s];
                }
            }
            inv.push(-acc / &c0);
        }
        let ndeg = self.num.degree().unwrap();
        let mut coeffs = Vec::with_capacity(len);
        for t in 0..len {
            let mut acc = BigRational::zero();
            for s in 0..=(ndeg - vnum).min(t) {
                let c = self.num.coeff(vnum + s);
                if !c.is_zero() {
                    acc += BigRational::from(c) * &inv[t - s];
                }
            }
            coeffs.push(acc);
        }
        LaurentExpansion {
            valuation,
            cap,
            coeffs,
        }
    }

    /// Integer Laurent polynomial view: `Some((offset, coeffs))` with
    /// `coeffs[0]` the coefficient of `u^offset`, when the canonical
    /// denominator is exactly a power of `u` with unit coefficient.
    pub fn as_laurent_poly(&self) -> Option<(i64, Vec<BigInt>)> {
        if self.is_zero() {
            return Some((0, Vec::new()));
        }
        let k = self.den.degree().unwrap();
        if self.den.valuation() != Some(k) || !self.den.leading_coeff().is_one() {
            return None;
        }
        let v = self.num.valuation().unwrap();
        let offset = v as i64 - k as i64;
        Some((offset, self.num.coeffs()[v..].to_vec()))
    }
}

fn add_impl(a: &QRat, b: &QRat) -> QRat {
    if a.is_zero() {
        return b.clone();
    }
    if b.is_zero() {
        return a.clone();
    }
    let g = IntPoly::gcd(&a.den, &b.den);
    if g.is_one() {
        let num = a.num.mul(&b.den).add(&b.num.mul(&a.den));
        QRat::make(num, a.den.mul(&b.den))
    } else {
        let ad = a.den.div_exact(&g);
        let bd = b.den.div_exact(&g);
        let num = a.num.mul(&bd).add(&b.num.mul(&ad));
        QRat::make(num, a.den.mul(&bd))
    }
}

fn mul_impl(a: &QRat, b: &QRat) -> QRat {
    if a.is_zero() || b.is_zero() {
        return QRat::zero();
    }
    // Cross-reduction keeps the remaining gcd purely scalar.
    let g1 = IntPoly::gcd(&a.num, &b.den);
    let g2 = IntPoly::gcd(&b.num, &a.den);
    let num = a.num.div_exact(&g1).mul(&b.num.div_exact(&g2));
    let den = a.den.div_exact(&g2).mul(&b.den.div_exact(&g1));
    let mut r = QRat { num, den };
    let c = r.num.content().gcd(&r.den.content());
    if !c.is_one() {
        let c = IntPoly::constant(c);
        r.num = r.num.div_exact(&c);
        r.den = r.den.div_exact(&c);
    }
    if r.den.leading_coeff().is_negative() {
        r.num = r.num.neg();
        r.den = r.den.neg();
    }
    r
}

impl Neg for &QRat {
    type Output = QRat;
    fn neg(self) -> QRat {
        QRat {
            num: self.num.neg(),
            den: self.den.clone(),
        }
    }
}

impl Neg for QRat {
    type Output = QRat;
    fn neg(self) -> QRat {
        -&self
    }
}

macro_rules! impl_binop {
    ($trait:ident, $method:ident, $f:expr) => {
        impl $trait<&QRat> for &QRat {
            type Output = QRat;
            fn $method(self, rhs: &QRat) -> QRat {
                $f(self, rhs)
            }
        }
        impl $trait<QRat> for QRat {
            type Output = QRat;
            fn $method(self, rhs: QRat) -> QRat {
                $f(&self, &rhs)
            }
        }
        impl $trait<&QRat> for QRat {
            type Output = QRat;
            fn $method(self, rhs: &QRat) -> QRat {
                $f(&self, rhs)
            }
        }
        impl $trait<QRat> for &QRat {
            type Output = QRat;
            fn $method(self, rhs: QRat) -> QRat {
                $f(self, &rhs)
            }
        }
    };
}

impl_binop!(Add, add, add_impl);
impl_binop!(Sub, sub, |a: &QRat, b: &QRat| add_impl(a, &-b));
impl_binop!(Mul, mul, mul_impl);
impl_binop!(Div, div, |a: &QRat, b: &QRat| mul_impl(a, &b.recip()));

/// Formats one Laurent term in `q^{1/2}` notation; `e` is the `u`-exponent.
fn push_term(out: &mut String, first: bool, c: &BigInt, e: i64) {
    let neg = c.is_negative();
    let mag = c.abs();
    if first {
        if neg {
            out.push('-');
        }
    } else if neg {
        out.push_str(" - ");
    } else {
        out.push_str(" + ");
    }
    let power = match e {
        0 => String::new(),
        2 => "q".to_string(),
        e if e % 2 == 0 => format!("q^{}", e / 2),
        e => format!("q^{e}/2"),
    };
    if power.is_empty() {
        out.push_str(&mag.to_string());
    } else if mag.is_one() {
        out.push_str(&power);
    } else {
        out.push_str(&format!("{mag}*{power}"));
    }
}

fn format_laurent(offset: i64, coeffs: &[BigInt]) -> String {
    let mut out = String::new();
    let mut first = true;
    for (i, c) in coeffs.iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        push_term(&mut out, first, c, offset + i as i64);
        first = false;
    }
    if first {
        out.push('0');
    }
    out
}

impl fmt::Display for QRat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if let Some((offset, coeffs)) = self.as_laurent_poly() {
            return write!(f, "{}", format_laurent(offset, &coeffs));
        }
        // Print with the lowest denominator coefficient positive, so
        // geometric factors read 1 - q^k; the canonical sign convention is
        // on the leading coefficient instead.
        let v = self.den.valuation().unwrap();
        let (num, den) = if self.den.coeff(v).is_negative() {
            (self.num.neg(), self.den.neg())
        } else {
            (self.num.clone(), self.den.clone())
        };
        write!(
            f,
            "({})/({})",
            format_laurent(0, num.coeffs()),
            format_laurent(0, den.coeffs())
        )
    }
}

impl fmt::Debug for QRat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({:?})/({:?})", self.num, self.den)
    }
}

#[derive(Serialize, Deserialize)]
struct PolyRepr {
    offset: usize,
    coeffs: Vec<String>,
}

#[derive(Serialize, Deserialize)]
struct QRatRepr {
    num: PolyRepr,
    den: PolyRepr,
}

fn poly_repr(p: &IntPoly) -> PolyRepr {
    let offset = p.valuation().unwrap_or(0);
    PolyRepr {
        offset,
        coeffs: p.coeffs()[offset..].iter().map(|c| c.to_string()).collect(),
    }
}

fn poly_from_repr<E: serde::de::Error>(r: &PolyRepr) -> Result<IntPoly, E> {
    let mut coeffs = vec![BigInt::zero(); r.offset];
    for s in &r.coeffs {
        coeffs.push(BigInt::from_str(s).map_err(|_| E::custom(format!("bad integer `{s}`")))?);
    }
    Ok(IntPoly::from_coeffs(coeffs))
}

impl Serialize for QRat {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        QRatRepr {
            num: poly_repr(&self.num),
            den: poly_repr(&self.den),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for QRat {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let repr = QRatRepr::deserialize(d)?;
        let num = poly_from_repr(&repr.num)?;
        let den = poly_from_repr(&repr.den)?;
        if den.is_zero() {
            return Err(D::Error::custom("zero denominator"));
        }
        Ok(QRat::make(num, den))
    }
}
