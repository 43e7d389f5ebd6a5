//! Motivic generating series, refined Donaldson-Thomas invariants, and the
//! numerical Koszulness checks that tie them together.
//!
//! Conventions, all in `u = q^{1/2}`:
//!
//! * `motivic_series` is the generating series with coefficient
//!   `(-u)^{-chi(d,d)} / prod_i prod_{j=1..d_i} (1 - u^{-2j})` at `x^d`,
//! * `algebra_series` is the Poincaré series of the associated
//!   supercommutative quadratic algebra, with coefficient
//!   `(-u)^{d.d - chi(d,d)} / prod_i prod_{j=1..d_i} (1 - u^{2j})`,
//! * `g_character` is the plethystic logarithm of the inverse of the motivic
//!   series: the character of the graded dual of the Koszul-dual Lie algebra.
//!   Its homological exponents are non-negative powers of `u`.
//!
//! The DT table is extracted from the plethystic logarithm of the motivic
//! series taken at `q^{-1}`; integrality, positivity, and parity of the
//! result are enforced, never assumed.

use crate::qseries::{dim_vectors, DimVector, IntPoly, MSeries, QRat};
use crate::quiver::Quiver;
use num::bigint::BigInt;
use num::{One, Signed, Zero};
use rayon::prelude::*;
use std::collections::BTreeMap;
use thiserror::Error;

/// `(q)_n = prod_{j=1..n} (1 - u^{2j})` as an integer polynomial.
pub fn pochhammer(n: u32) -> IntPoly {
    let mut acc = IntPoly::one();
    for j in 1..=n {
        let factor = IntPoly::one().sub(&IntPoly::monomial(BigInt::one(), 2 * j as usize));
        acc = acc.mul(&factor);
    }
    acc
}

/// `prod_{j=1..n} (1 - u^{-2j})`.
fn pochhammer_q_inv(n: u32) -> QRat {
    let mut acc = QRat::one();
    for j in 1..=n {
        acc = acc * QRat::one_minus_u_pow(-2 * j as i64);
    }
    acc
}

fn sign_of(chi: i64) -> QRat {
    if chi.rem_euclid(2) == 0 {
        QRat::one()
    } else {
        -QRat::one()
    }
}

/// Motivic generating series of the quiver, truncated at `order`.
pub fn motivic_series(q: &Quiver, order: u32) -> MSeries {
    let n = q.vertex_count();
    MSeries::from_fn(n, order, |d| {
        let chi = q.euler_form(d, d);
        let mut c = QRat::neg_u_pow(-chi);
        for &di in &d.0 {
            c = c / pochhammer_q_inv(di);
        }
        c
    })
}

/// Poincaré series of the supercommutative quadratic algebra attached to the
/// quiver, truncated at `order`.
pub fn algebra_series(q: &Quiver, order: u32) -> MSeries {
    let n = q.vertex_count();
    MSeries::from_fn(n, order, |d| {
        let chi = q.euler_form(d, d);
        let dd: i64 = d.0.iter().map(|&c| c as i64 * c as i64).sum();
        let mut c = QRat::neg_u_pow(dd - chi);
        for &di in &d.0 {
            c = c / QRat::from_poly(pochhammer(di));
        }
        c
    })
}

#[derive(Debug, Error)]
pub enum DtError {
    #[error("DT coefficient at d = {d} is not a Laurent polynomial: {value}")]
    NotLaurent { d: DimVector, value: QRat },
    #[error("DT coefficient at d = {d} has a negative term at u-exponent {exponent}")]
    Negative { d: DimVector, exponent: i64 },
    #[error("DT coefficient at d = {d} has support below u^-2, at u-exponent {exponent}")]
    UnexpectedSupport { d: DimVector, exponent: i64 },
    #[error("DT coefficient at d = {d} violates the parity class at u-exponent {exponent}")]
    ParityViolation { d: DimVector, exponent: i64 },
}

/// One row of the DT table.
#[derive(Debug, Clone)]
pub struct DtEntry {
    pub d: DimVector,
    /// `DT_d(q)`: a Laurent polynomial in `u` with non-negative integer
    /// coefficients.
    pub dt: QRat,
    /// Degree `n` kernel dimensions: `dt = sum_n ker_dims[n] u^{n-2}`.
    pub ker_dims: BTreeMap<u32, BigInt>,
    pub parity_class: u8,
}

#[derive(Debug, Clone)]
pub struct DtTable {
    pub order: u32,
    /// Entries for every `0 < |d| <= order`, in lexicographic order.
    pub entries: Vec<DtEntry>,
}

impl DtTable {
    pub fn get(&self, d: &DimVector) -> Option<&DtEntry> {
        self.entries.iter().find(|e| &e.d == d)
    }
}

/// Computes the refined DT invariants of the quiver for all `0 < |d| <= order`.
///
/// Pipeline: apply `q -> q^{-1}` to the motivic series coefficientwise, take
/// the plethystic logarithm, multiply the coefficient at `d` by
/// `(-1)^{chi(d,d)} (1 - u^2)`, and map back with `q -> q^{-1}`. The result
/// must be a Laurent polynomial with non-negative integer coefficients
/// supported on `u^{n-2}` for `n >= 0` in the parity class of `d`; any
/// violation is reported as an error rather than silently accepted.
pub fn dt_invariants(q: &Quiver, order: u32) -> Result<DtTable, DtError> {
    assert!(order >= 1, "order must be at least 1");
    let a_inv = motivic_series(q, order).map_coeffs(QRat::invert_q);
    let log = a_inv.pleth_log().expect("motivic series has constant term 1");
    let one_minus_q = QRat::one_minus_u_pow(2);
    let ds: Vec<DimVector> = dim_vectors(q.vertex_count(), order)
        .into_iter()
        .filter(|d| !d.is_zero())
        .collect();
    let entries = ds
        .into_par_iter()
        .map(|d| {
            let chi = q.euler_form(&d, &d);
            let dt = (&(&log.coeff(&d) * &one_minus_q) * &sign_of(chi)).invert_q();
            let (offset, coeffs) = match dt.as_laurent_poly() {
                Some(p) => p,
                None => return Err(DtError::NotLaurent { d, value: dt }),
            };
            let parity_class = q.parity_class(&d);
            let mut ker_dims = BTreeMap::new();
            for (t, c) in coeffs.into_iter().enumerate() {
                if c.is_zero() {
                    continue;
                }
                let exponent = offset + t as i64;
                if c.is_negative() {
                    return Err(DtError::Negative { d, exponent });
                }
                if exponent < -2 {
                    return Err(DtError::UnexpectedSupport { d, exponent });
                }
                let n = (exponent + 2) as u32;
                if n % 2 != parity_class as u32 {
                    return Err(DtError::ParityViolation { d, exponent });
                }
                ker_dims.insert(n, c);
            }
            Ok(DtEntry {
                d,
                dt,
                ker_dims,
                parity_class,
            })
        })
        .collect::<Result<Vec<_>, _>>()?;
    Ok(DtTable { order, entries })
}

/// Character of the graded dual of the Koszul-dual Lie algebra, as a series
/// over dimension vectors.
pub fn g_character(q: &Quiver, order: u32) -> MSeries {
    let inv = motivic_series(q, order)
        .invert()
        .expect("motivic series has constant term 1");
    inv.pleth_log().expect("inverse has constant term 1")
}

/// Signless character: the coefficient at `d` of `g_character` times
/// `(-1)^{chi(d,d)}`. Each graded piece sits in a single parity, so this
/// global sign turns the alternating character into a dimension series with
/// non-negative expansion coefficients.
pub fn unsigned_character(q: &Quiver, order: u32) -> MSeries {
    let n = q.vertex_count();
    let g = g_character(q, order);
    MSeries::from_fn(n, order, |d| &g.coeff(d) * &sign_of(q.euler_form(d, d)))
}

#[derive(Debug, Error)]
pub enum CheckError {
    #[error(transparent)]
    Dt(#[from] DtError),
    #[error("series differ at d = {d}: {lhs} vs {rhs}")]
    Mismatch { d: DimVector, lhs: QRat, rhs: QRat },
    #[error("value at d = {d} is not a Laurent polynomial: {value}")]
    NotPolynomial { d: DimVector, value: QRat },
    #[error("negative coefficient at d = {d}, u-exponent {exponent}")]
    Negative { d: DimVector, exponent: i64 },
    #[error("character support at d = {d} breaks parity at u-exponent {exponent}")]
    Parity { d: DimVector, exponent: i64 },
    #[error("kernel dimension at d = {d}, degree {degree}, disagrees with the character difference")]
    KernelMismatch { d: DimVector, degree: i64 },
}

/// Verifies that the motivic series and the algebra Poincaré series agree
/// under the change of variables `x_i -> u x_i`, coefficient by coefficient.
pub fn check_change_of_variables(q: &Quiver, order: u32) -> Result<(), CheckError> {
    let lhs = motivic_series(q, order);
    let rhs = algebra_series(q, order).scale_x_by_u_pow(1);
    for d in dim_vectors(q.vertex_count(), order) {
        let l = lhs.coeff(&d);
        let r = rhs.coeff(&d);
        if l != r {
            return Err(CheckError::Mismatch { d, lhs: l, rhs: r });
        }
    }
    Ok(())
}

/// Numerical Koszulness: the algebra Poincaré series times the plethystic
/// exponential of the dual Lie character, with `x_i` rescaled by `u^{-1}`,
/// must be exactly 1 up to the truncation order.
pub fn check_numerical_koszulness(q: &Quiver, order: u32) -> Result<(), CheckError> {
    let lhs = algebra_series(q, order);
    let envelope = g_character(q, order)
        .pleth_exp()
        .expect("character has zero constant term");
    let prod = lhs.mul(&envelope.scale_x_by_u_pow(-1));
    let one = MSeries::one(q.vertex_count(), order);
    for d in dim_vectors(q.vertex_count(), order) {
        let l = prod.coeff(&d);
        let r = one.coeff(&d);
        if l != r {
            return Err(CheckError::Mismatch { d, lhs: l, rhs: r });
        }
    }
    Ok(())
}

/// Cross-validates the DT table against the dual Lie character:
/// `DT_d(q) = u^{-2} (1 - u^2) (-1)^{chi(d,d)} g_character[d]` for every
/// `0 < |d| <= order`.
pub fn dt_cross_check(q: &Quiver, order: u32) -> Result<(), CheckError> {
    let table = dt_invariants(q, order)?;
    let ch = unsigned_character(q, order);
    let factor = QRat::u_pow(-2) * QRat::one_minus_u_pow(2);
    for entry in &table.entries {
        let expected = &factor * &ch.coeff(&entry.d);
        if entry.dt != expected {
            return Err(CheckError::Mismatch {
                d: entry.d.clone(),
                lhs: entry.dt.clone(),
                rhs: expected,
            });
        }
    }
    Ok(())
}

/// Positivity and polynomiality of the signless character: for every
/// `0 < |d| <= order`, both `(1 - u^2) ch_d` and `(1 - u^{2|d|}) ch_d` must
/// be Laurent polynomials with non-negative coefficients, supported in the
/// parity class of `d`.
pub fn check_character_positivity(q: &Quiver, order: u32) -> Result<(), CheckError> {
    let ch = unsigned_character(q, order);
    for d in dim_vectors(q.vertex_count(), order) {
        if d.is_zero() {
            continue;
        }
        let c = ch.coeff(&d);
        let parity = q.parity_class(&d) as i64;
        for factor_exp in [2, 2 * d.total() as i64] {
            let p = QRat::one_minus_u_pow(factor_exp) * &c;
            let (offset, coeffs) = match p.as_laurent_poly() {
                Some(v) => v,
                None => {
                    return Err(CheckError::NotPolynomial { d, value: p });
                }
            };
            for (t, coeff) in coeffs.iter().enumerate() {
                let exponent = offset + t as i64;
                if coeff.is_negative() {
                    return Err(CheckError::Negative { d, exponent });
                }
                if !coeff.is_zero() && factor_exp == 2 && exponent.rem_euclid(2) != parity {
                    return Err(CheckError::Parity { d, exponent });
                }
            }
        }
    }
    Ok(())
}

/// Default expansion cap for dimension extraction: generous enough for every
/// degree reachable at the truncation order, plus a safety margin.
pub fn default_expansion_cap(q: &Quiver, order: u32) -> i64 {
    2 * order as i64 * order as i64 + q.max_arrows() as i64 + 2
}

/// Extracts graded dimensions `c_n` from the signless character expansion up
/// to `cap` and verifies, degree by degree, that `c_n - c_{n-2}` is
/// non-negative, matches the DT kernel dimensions, and respects parity.
pub fn check_kernel_dimensions(q: &Quiver, order: u32, cap: i64) -> Result<(), CheckError> {
    let table = dt_invariants(q, order)?;
    let ch = unsigned_character(q, order);
    for entry in &table.entries {
        let c = ch.coeff(&entry.d);
        let expansion = c.laurent(cap);
        assert!(
            expansion.valuation >= 0 || c.is_zero(),
            "character at {} has negative valuation",
            entry.d
        );
        if let Some(&max_n) = entry.ker_dims.keys().max() {
            assert!(
                (max_n as i64) <= cap,
                "cap {cap} too small to cover kernel degrees at {}",
                entry.d
            );
        }
        let parity = entry.parity_class as i64;
        for n in 0..=cap {
            let cn = expansion.coeff(n);
            if !cn.is_zero() && n.rem_euclid(2) != parity {
                return Err(CheckError::Parity {
                    d: entry.d.clone(),
                    exponent: n,
                });
            }
            let prev = if n >= 2 {
                expansion.coeff(n - 2)
            } else {
                num::rational::BigRational::zero()
            };
            let diff = &cn - &prev;
            if diff.is_negative() {
                return Err(CheckError::Negative {
                    d: entry.d.clone(),
                    exponent: n,
                });
            }
            let ker = entry
                .ker_dims
                .get(&(n as u32))
                .cloned()
                .unwrap_or_else(BigInt::zero);
            if diff != num::rational::BigRational::from(ker) {
                return Err(CheckError::KernelMismatch {
                    d: entry.d.clone(),
                    degree: n,
                });
            }
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn dv(entries: &[u32]) -> DimVector {
        DimVector(entries.to_vec())
    }

    fn two_vertex_no_loops() -> Quiver {
        Quiver::new(vec![vec![0, 1], vec![1, 0]]).unwrap()
    }

    fn rat(num: &[i64], den: &[i64]) -> QRat {
        QRat::new(
            IntPoly::from_coeffs(num.iter().map(|&c| BigInt::from(c)).collect()),
            IntPoly::from_coeffs(den.iter().map(|&c| BigInt::from(c)).collect()),
        )
    }

    #[test]
    fn motivic_series_coefficients() {
        let s = motivic_series(&Quiver::loops(0), 3);
        assert_eq!(s.coeff(&dv(&[0])), QRat::one());
        // (-u)^{-1}/(1 - u^{-2}) = u/(1 - u^2)
        assert_eq!(s.coeff(&dv(&[1])), rat(&[0, 1], &[1, 0, -1]));
        let s1 = motivic_series(&Quiver::loops(1), 2);
        // chi = 0: coefficient 1/(1 - u^{-2}) = -u^2/(1 - u^2)
        assert_eq!(s1.coeff(&dv(&[1])), rat(&[0, 0, -1], &[1, 0, -1]));
    }

    #[test]
    fn algebra_series_coefficients() {
        let s = algebra_series(&Quiver::loops(2), 3);
        assert_eq!(s.coeff(&dv(&[0])), QRat::one());
        // d.d - chi = 1 + 1 = 2: u^2/(1 - u^2)
        assert_eq!(s.coeff(&dv(&[1])), rat(&[0, 0, 1], &[1, 0, -1]));
    }

    #[test]
    fn change_of_variables_holds() {
        for q in [
            Quiver::loops(0),
            Quiver::loops(3),
            two_vertex_no_loops(),
            Quiver::new(vec![vec![2, 1], vec![1, 1]]).unwrap(),
        ] {
            check_change_of_variables(&q, 4).unwrap();
        }
    }

    /// Certifies a claimed complete DT table by rebuilding the motivic series
    /// at `q^{-1}` through the plethystic exponential alone.
    fn certify_dt_table(q: &Quiver, order: u32, claimed: &[(DimVector, QRat)]) {
        let n = q.vertex_count();
        let mut payload = MSeries::zero(n, order);
        for (d, dt) in claimed {
            let chi = q.euler_form(d, d);
            let c = &(&dt.invert_q() * &sign_of(chi)) / &QRat::one_minus_u_pow(2);
            payload = payload.add(&MSeries::monomial(n, order, d.clone(), c));
        }
        let rebuilt = payload.pleth_exp().unwrap();
        let expected = motivic_series(q, order).map_coeffs(QRat::invert_q);
        assert_eq!(rebuilt, expected, "claimed DT table fails the exponential identity");
    }

    #[test]
    fn dt_of_zero_loop_quiver() {
        certify_dt_table(&Quiver::loops(0), 5, &[(dv(&[1]), QRat::u_pow(-1))]);
        let table = dt_invariants(&Quiver::loops(0), 5).unwrap();
        let e1 = table.get(&dv(&[1])).unwrap();
        assert_eq!(e1.dt, QRat::u_pow(-1));
        assert_eq!(e1.ker_dims, BTreeMap::from([(1, BigInt::one())]));
        for d in 2..=5 {
            assert!(table.get(&dv(&[d])).unwrap().dt.is_zero());
        }
    }

    #[test]
    fn dt_of_one_loop_quiver() {
        certify_dt_table(&Quiver::loops(1), 5, &[(dv(&[1]), QRat::one())]);
        let table = dt_invariants(&Quiver::loops(1), 5).unwrap();
        assert_eq!(table.get(&dv(&[1])).unwrap().dt, QRat::one());
        assert_eq!(
            table.get(&dv(&[1])).unwrap().ker_dims,
            BTreeMap::from([(2, BigInt::one())])
        );
        for d in 2..=5 {
            assert!(table.get(&dv(&[d])).unwrap().dt.is_zero());
        }
    }

    #[test]
    fn dt_of_free_algebra_quivers() {
        // Two loops: the count of terms at q = 1 runs 1, 1, 1, 2.
        certify_dt_table(
            &Quiver::loops(2),
            4,
            &[
                (dv(&[1]), QRat::u_pow(1)),
                (dv(&[2]), QRat::u_pow(4)),
                (dv(&[3]), QRat::u_pow(9)),
                (dv(&[4]), &QRat::u_pow(12) + &QRat::u_pow(16)),
            ],
        );
        // Three loops: 1, 1, 3.
        certify_dt_table(
            &Quiver::loops(3),
            3,
            &[
                (dv(&[1]), QRat::u_pow(2)),
                (dv(&[2]), QRat::u_pow(8)),
                (dv(&[3]), &(&QRat::u_pow(12) + &QRat::u_pow(14)) + &QRat::u_pow(18)),
            ],
        );
        let table = dt_invariants(&Quiver::loops(2), 4).unwrap();
        assert_eq!(table.get(&dv(&[4])).unwrap().dt, &QRat::u_pow(12) + &QRat::u_pow(16));
    }

    #[test]
    fn dt_single_unit_matches_loop_count() {
        // DT_{(1)} = q^{(m-1)/2} = u^{m-1}
        for m in 0..=3 {
            let table = dt_invariants(&Quiver::loops(m), 2).unwrap();
            assert_eq!(
                table.get(&dv(&[1])).unwrap().dt,
                QRat::u_pow(m as i64 - 1),
                "m = {m}"
            );
        }
        // two loops: dt = u = u^{3-2}, kernel dimension 1 in degree 3
        let table = dt_invariants(&Quiver::loops(2), 3).unwrap();
        let e = table.get(&dv(&[1])).unwrap();
        assert_eq!(e.ker_dims, BTreeMap::from([(3, BigInt::one())]));
        assert_eq!(e.parity_class, 1);
    }

    #[test]
    fn dt_of_two_vertex_no_loop_quiver() {
        let q = two_vertex_no_loops();
        certify_dt_table(
            &q,
            4,
            &[
                (dv(&[1, 0]), QRat::u_pow(-1)),
                (dv(&[0, 1]), QRat::u_pow(-1)),
                (dv(&[1, 1]), QRat::one()),
            ],
        );
        let table = dt_invariants(&q, 4).unwrap();
        assert_eq!(table.get(&dv(&[1, 0])).unwrap().dt, QRat::u_pow(-1));
        assert_eq!(table.get(&dv(&[0, 1])).unwrap().dt, QRat::u_pow(-1));
        assert_eq!(table.get(&dv(&[1, 1])).unwrap().dt, QRat::one());
        for entry in &table.entries {
            if entry.d.total() >= 2 && entry.d != dv(&[1, 1]) {
                assert!(entry.dt.is_zero(), "expected 0 at {}", entry.d);
            }
        }
    }

    #[test]
    fn g_character_examples() {
        // one loop: a single generator per internal level, all even degrees
        let g = g_character(&Quiver::loops(1), 3);
        assert_eq!(g.coeff(&dv(&[0])), QRat::zero());
        // one even generator per level: sum of u^{2k+2} over k >= 0
        assert_eq!(g.coeff(&dv(&[1])), rat(&[0, 0, 1], &[1, 0, -1]));
        // two vertices, one arrow: odd generators at the units, even at (1,1)
        let g = g_character(&two_vertex_no_loops(), 3);
        assert_eq!(g.coeff(&dv(&[1, 0])), rat(&[0, 1], &[-1, 0, 1]));
        assert_eq!(g.coeff(&dv(&[0, 1])), rat(&[0, 1], &[-1, 0, 1]));
        assert_eq!(g.coeff(&dv(&[1, 1])), rat(&[0, 0, 1], &[1, 0, -1]));
        assert_eq!(g.coeff(&dv(&[2, 0])), QRat::zero());
        assert_eq!(g.coeff(&dv(&[2, 1])), QRat::zero());
    }

    #[test]
    fn numerical_koszulness_holds() {
        for q in [
            Quiver::loops(2),
            two_vertex_no_loops(),
            Quiver::new(vec![vec![1, 1], vec![1, 1]]).unwrap(),
        ] {
            check_numerical_koszulness(&q, 3).unwrap();
        }
    }

    #[test]
    fn dt_cross_check_holds() {
        for m in 0..=3 {
            dt_cross_check(&Quiver::loops(m), 3).unwrap();
        }
        dt_cross_check(&two_vertex_no_loops(), 3).unwrap();
    }

    #[test]
    fn character_positivity_holds() {
        for q in [
            Quiver::loops(0),
            Quiver::loops(2),
            two_vertex_no_loops(),
            Quiver::new(vec![vec![2, 1], vec![1, 1]]).unwrap(),
        ] {
            check_character_positivity(&q, 3).unwrap();
        }
    }

    #[test]
    fn kernel_dimensions_match_character_differences() {
        for q in [Quiver::loops(1), Quiver::loops(3), two_vertex_no_loops()] {
            let cap = default_expansion_cap(&q, 3);
            check_kernel_dimensions(&q, 3, cap).unwrap();
        }
    }
}
