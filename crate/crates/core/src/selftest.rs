//! The acceptance suite: each criterion exercises one end-to-end claim of
//! the library, reports a witness on failure, and records its wall time.
//!
//! The criteria deliberately cross-validate independent routes: closed
//! formulas against plethystic identities, word enumeration against series
//! expansions, and normal word counts against brute-force linear algebra.

use crate::grobner;
use crate::lieword;
use crate::motivic;
use crate::partitions;
use crate::qseries::{dim_vectors, DimVector, MSeries, QRat};
use crate::quiver::Quiver;
use std::fmt::Write as _;
use std::time::{Duration, Instant};

#[derive(Debug, Clone)]
pub struct Outcome {
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
    pub elapsed: Duration,
}

impl Outcome {
    pub fn line(&self) -> String {
        format!(
            "{}: {} ({:.2}s) {}",
            self.name,
            if self.passed { "PASS" } else { "FAIL" },
            self.elapsed.as_secs_f64(),
            self.detail
        )
    }
}

fn run(name: &'static str, body: impl FnOnce() -> Result<String, String>) -> Outcome {
    let start = Instant::now();
    let result = body();
    let elapsed = start.elapsed();
    match result {
        Ok(detail) => Outcome { name, passed: true, detail, elapsed },
        Err(detail) => Outcome { name, passed: false, detail, elapsed },
    }
}

/// The fixed quiver suite used by the series-level criteria.
pub fn suite_quivers() -> Vec<Quiver> {
    vec![
        Quiver::loops(0),
        Quiver::loops(1),
        Quiver::loops(2),
        Quiver::loops(3),
        Quiver::new(vec![vec![0, 1], vec![1, 0]]).unwrap(),
        Quiver::new(vec![vec![1, 1], vec![1, 1]]).unwrap(),
        Quiver::new(vec![vec![2, 1], vec![1, 1]]).unwrap(),
        Quiver::new(vec![vec![2, 2], vec![2, 2]]).unwrap(),
    ]
}

pub fn quiver_label(q: &Quiver) -> String {
    let mut s = String::from("[");
    for i in 0..q.vertex_count() {
        if i > 0 {
            s.push(',');
        }
        s.push('[');
        for j in 0..q.vertex_count() {
            if j > 0 {
                s.push(',');
            }
            let _ = write!(s, "{}", q.arrow_count(i, j));
        }
        s.push(']');
    }
    s.push(']');
    s
}

/// Exp and Log are mutually inverse and turn sums into products, on dense
/// two-variable series with rational-function coefficients, at order 8.
pub fn criterion_exp_log() -> Outcome {
    run("exp-log roundtrip and group law, order 8", || {
        let order = 8;
        let f = MSeries::from_fn(2, order, |d| {
            if d.is_zero() {
                return QRat::zero();
            }
            let (a, b) = (d.0[0] as i64, d.0[1] as i64);
            let sign = if a % 2 == 0 { QRat::one() } else { -QRat::one() };
            sign * QRat::u_pow(b - a) / QRat::one_minus_u_pow(2 * (a + b))
        });
        let g = MSeries::from_fn(2, order, |d| {
            if d.is_zero() {
                return QRat::zero();
            }
            let (a, b) = (d.0[0] as i64, d.0[1] as i64);
            QRat::integer(b + 1) * QRat::u_pow(1 - a) / QRat::one_minus_u_pow(2)
        });
        let ef = f.pleth_exp().map_err(|e| e.to_string())?;
        let back = ef.pleth_log().map_err(|e| e.to_string())?;
        if back != f {
            return Err("Log(Exp(f)) differs from f".into());
        }
        let eg = g.pleth_exp().map_err(|e| e.to_string())?;
        let sum = f.add(&g).pleth_exp().map_err(|e| e.to_string())?;
        if ef.mul(&eg) != sum {
            return Err("Exp(f)Exp(g) differs from Exp(f+g)".into());
        }
        Ok(format!(
            "verified on {} coefficients",
            dim_vectors(2, order).len()
        ))
    })
}

/// The motivic series and the algebra Poincaré series agree under
/// `x_i -> u x_i`, at order 6, across the suite.
pub fn criterion_change_of_variables() -> Outcome {
    run("change of variables, order 6", || {
        let quivers = suite_quivers();
        for q in &quivers {
            motivic::check_change_of_variables(q, 6)
                .map_err(|e| format!("{}: {e}", quiver_label(q)))?;
        }
        Ok(format!("verified for {} quivers", quivers.len()))
    })
}

/// Numerical Koszulness at order 5 across the suite.
pub fn criterion_koszulness() -> Outcome {
    run("numerical Koszulness, order 5", || {
        let quivers = suite_quivers();
        for q in &quivers {
            motivic::check_numerical_koszulness(q, 5)
                .map_err(|e| format!("{}: {e}", quiver_label(q)))?;
        }
        Ok(format!("verified for {} quivers", quivers.len()))
    })
}

/// DT tables at order 5: Laurent polynomiality, positivity, parity, and the
/// pinned unit values.
pub fn criterion_dt_tables() -> Outcome {
    run("DT invariants, order 5", || {
        let quivers = suite_quivers();
        for q in &quivers {
            motivic::dt_invariants(q, 5).map_err(|e| format!("{}: {e}", quiver_label(q)))?;
        }
        for m in 0..=3u32 {
            let q = Quiver::loops(m);
            let table = motivic::dt_invariants(&q, 5).map_err(|e| e.to_string())?;
            let d = DimVector(vec![1]);
            let got = &table.get(&d).unwrap().dt;
            let want = QRat::u_pow(m as i64 - 1);
            if *got != want {
                return Err(format!("{}: DT at (1) is {got}, expected {want}", quiver_label(&q)));
            }
        }
        let q = Quiver::new(vec![vec![0, 1], vec![1, 0]]).unwrap();
        let table = motivic::dt_invariants(&q, 5).map_err(|e| e.to_string())?;
        for (d, want) in [
            (DimVector(vec![1, 0]), QRat::u_pow(-1)),
            (DimVector(vec![0, 1]), QRat::u_pow(-1)),
            (DimVector(vec![1, 1]), QRat::one()),
        ] {
            let got = &table.get(&d).unwrap().dt;
            if *got != want {
                return Err(format!("{}: DT at {d} is {got}, expected {want}", quiver_label(&q)));
            }
        }
        Ok("tables valid for 8 quivers; unit values match".into())
    })
}

/// DT against the dual Lie character, order 4, across the suite.
pub fn criterion_cross_check() -> Outcome {
    run("DT vs character cross-check, order 4", || {
        let quivers = suite_quivers();
        for q in &quivers {
            motivic::dt_cross_check(q, 4).map_err(|e| format!("{}: {e}", quiver_label(q)))?;
        }
        Ok(format!("verified for {} quivers", quivers.len()))
    })
}

/// Character positivity, parity support, and kernel dimension consistency at
/// order 4 across the suite.
pub fn criterion_positivity() -> Outcome {
    run("character positivity and parity, order 4", || {
        let quivers = suite_quivers();
        for q in &quivers {
            motivic::check_character_positivity(q, 4)
                .map_err(|e| format!("{}: {e}", quiver_label(q)))?;
            let cap = motivic::default_expansion_cap(q, 4);
            motivic::check_kernel_dimensions(q, 4, cap)
                .map_err(|e| format!("{}: {e}", quiver_label(q)))?;
        }
        Ok(format!("verified for {} quivers", quivers.len()))
    })
}

/// One-vertex word bases against the character, lengths up to 4, degrees up
/// to 24, plus the level-shift bijection.
pub fn criterion_word_basis() -> Outcome {
    run("word basis vs character, lengths <= 4, degrees <= 24", || {
        for m in 1..=3u32 {
            lieword::check_words_against_character(m, 4, 24)
                .map_err(|e| format!("m = {m}: {e}"))?;
            lieword::check_shift_bijection(m, 4, 12).map_err(|e| format!("m = {m}: {e}"))?;
        }
        Ok("verified for m in 1..=3".into())
    })
}

/// The partition-alphabet factorization of minimum-level-zero words, lengths
/// up to 4, levels up to 6.
pub fn criterion_partition_bijection() -> Outcome {
    run("partition factorization, lengths <= 4, levels <= 6", || {
        for m in 1..=4u32 {
            partitions::check_bijection(m, 4, 6, partitions::PrefixRule::ShorterLarger)
                .map_err(|e| format!("m = {m}: {e}"))?;
        }
        Ok("verified for m in 1..=4".into())
    })
}

/// Computed leading terms against the closed-form families, levels up to 12.
pub fn criterion_leading_terms() -> Outcome {
    run("Gröbner leading terms, levels <= 12", || {
        for loops in 1..=4u32 {
            grobner::check_leading_terms(&Quiver::loops(loops), 12)
                .map_err(|e| format!("loops {loops}: {e}"))?;
        }
        for m in 1..=4u32 {
            let q = Quiver::new(vec![vec![0, m], vec![m, 0]]).unwrap();
            grobner::check_leading_terms(&q, 12).map_err(|e| format!("{}: {e}", quiver_label(&q)))?;
        }
        Ok("verified for 8 model quivers".into())
    })
}

/// The quadratic Gröbner classification: the weight-three check must agree
/// with the regularity predicate (or a relation-free algebra) on every
/// quiver with at most two vertices and entries up to 3, and on three
/// three-vertex spot checks.
pub fn criterion_classification() -> Outcome {
    run("quadratic basis classification sweep", || {
        let mut quivers = Vec::new();
        for loops in 0..=3u32 {
            quivers.push(Quiver::loops(loops));
        }
        for a in 0..=3u32 {
            for b in 0..=3u32 {
                for c in 0..=3u32 {
                    quivers.push(Quiver::new(vec![vec![a, c], vec![c, b]]).unwrap());
                }
            }
        }
        quivers.push(Quiver::new(vec![vec![1, 1, 1], vec![1, 1, 1], vec![1, 1, 1]]).unwrap());
        quivers.push(Quiver::new(vec![vec![2, 2, 2], vec![2, 2, 2], vec![2, 2, 2]]).unwrap());
        quivers.push(Quiver::new(vec![vec![1, 1, 1], vec![1, 1, 2], vec![1, 2, 1]]).unwrap());
        let mut quadratic = 0;
        for q in &quivers {
            let expected = q.almost_n_regular().is_some() || grobner::relation_free(q);
            let checked = grobner::check_quadratic_gb(q, grobner::default_gb_cap(q));
            match (expected, checked) {
                (true, Ok(())) => quadratic += 1,
                (false, Err(_)) => {}
                (true, Err(e)) => {
                    return Err(format!(
                        "{}: predicted quadratic, but {e}",
                        quiver_label(q)
                    ));
                }
                (false, Ok(())) => {
                    return Err(format!(
                        "{}: predicted non-quadratic, but the check passed",
                        quiver_label(q)
                    ));
                }
            }
        }
        Ok(format!(
            "{} quivers classified, {} quadratic",
            quivers.len(),
            quadratic
        ))
    })
}

/// Runs the whole acceptance suite in order.
pub fn run_all() -> Vec<Outcome> {
    vec![
        criterion_exp_log(),
        criterion_change_of_variables(),
        criterion_koszulness(),
        criterion_dt_tables(),
        criterion_cross_check(),
        criterion_positivity(),
        criterion_word_basis(),
        criterion_partition_bijection(),
        criterion_leading_terms(),
        criterion_classification(),
    ]
}
