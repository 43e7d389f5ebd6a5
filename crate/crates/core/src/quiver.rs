//! Symmetric quivers: a finite vertex set with `m[i][j] = m[j][i]` arrows
//! between vertices `i` and `j` (loops on the diagonal).

use crate::qseries::DimVector;
use serde::Deserialize;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum QuiverError {
    #[error("invalid quiver JSON: {0}")]
    Json(String),
    #[error("arrow matrix must be square, row {row} has length {len} but there are {n} rows")]
    NotSquare { row: usize, len: usize, n: usize },
    #[error("arrow matrix must be symmetric, entries ({i},{j}) and ({j},{i}) differ: {a} vs {b}")]
    NotSymmetric { i: usize, j: usize, a: u32, b: u32 },
    #[error("quiver must have at least one vertex")]
    Empty,
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Quiver {
    arrows: Vec<Vec<u32>>,
}

#[derive(Deserialize)]
struct QuiverRepr {
    arrows: Vec<Vec<u32>>,
}

impl Quiver {
    pub fn new(arrows: Vec<Vec<u32>>) -> Result<Self, QuiverError> {
        let n = arrows.len();
        if n == 0 {
            return Err(QuiverError::Empty);
        }
        for (row, r) in arrows.iter().enumerate() {
            if r.len() != n {
                return Err(QuiverError::NotSquare {
                    row,
                    len: r.len(),
                    n,
                });
            }
        }
        for i in 0..n {
            for j in i + 1..n {
                if arrows[i][j] != arrows[j][i] {
                    return Err(QuiverError::NotSymmetric {
                        i,
                        j,
                        a: arrows[i][j],
                        b: arrows[j][i],
                    });
                }
            }
        }
        Ok(Quiver { arrows })
    }

    /// One vertex with `m` loops.
    pub fn loops(m: u32) -> Self {
        Quiver {
            arrows: vec![vec![m]],
        }
    }

    /// Parses `{"arrows": [[...], ...]}`; negative or non-integer entries are
    /// rejected by the JSON layer.
    pub fn parse_json(text: &str) -> Result<Self, QuiverError> {
        let repr: QuiverRepr =
            serde_json::from_str(text).map_err(|e| QuiverError::Json(e.to_string()))?;
        Quiver::new(repr.arrows)
    }

    pub fn vertex_count(&self) -> usize {
        self.arrows.len()
    }

    pub fn arrow_count(&self, i: usize, j: usize) -> u32 {
        self.arrows[i][j]
    }

    pub fn loops_at(&self, i: usize) -> u32 {
        self.arrows[i][i]
    }

    pub fn max_arrows(&self) -> u32 {
        self.arrows
            .iter()
            .flat_map(|r| r.iter().copied())
            .max()
            .unwrap_or(0)
    }

    /// Euler form `chi(d, e) = sum_i d_i e_i - sum_{i,j} m_{ij} d_i e_j`.
    /// Symmetric because the arrow matrix is.
    pub fn euler_form(&self, d: &DimVector, e: &DimVector) -> i64 {
        let n = self.vertex_count();
        assert_eq!(d.len(), n, "dimension vector length mismatch");
        assert_eq!(e.len(), n, "dimension vector length mismatch");
        let mut acc: i64 = 0;
        for i in 0..n {
            acc += d.0[i] as i64 * e.0[i] as i64;
            for j in 0..n {
                acc -= self.arrows[i][j] as i64 * d.0[i] as i64 * e.0[j] as i64;
            }
        }
        acc
    }

    /// Parity class of `d`: `sum_i (m_ii + 1) d_i mod 2`.
    pub fn parity_class(&self, d: &DimVector) -> u8 {
        let mut acc: u32 = 0;
        for (i, &di) in d.0.iter().enumerate() {
            acc += (self.arrows[i][i] + 1) * di;
        }
        (acc % 2) as u8
    }

    /// The largest `N >= 1` such that every pair of distinct vertices is
    /// joined by exactly `N` arrows and every vertex carries `N` or `N + 1`
    /// loops. For a single vertex with `m >= 1` loops this is `m`.
    pub fn almost_n_regular(&self) -> Option<u32> {
        let n = self.vertex_count();
        if n == 1 {
            let m = self.arrows[0][0];
            return if m >= 1 { Some(m) } else { None };
        }
        let reg = self.arrows[0][1];
        if reg < 1 {
            return None;
        }
        for i in 0..n {
            for j in 0..n {
                if i != j && self.arrows[i][j] != reg {
                    return None;
                }
            }
        }
        for i in 0..n {
            let l = self.arrows[i][i];
            if l != reg && l != reg + 1 {
                return None;
            }
        }
        Some(reg)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn dv(entries: &[u32]) -> DimVector {
        DimVector(entries.to_vec())
    }

    #[test]
    fn parses_valid_quivers() {
        let q = Quiver::parse_json(r#"{"arrows": [[2]]}"#).unwrap();
        assert_eq!(q.vertex_count(), 1);
        assert_eq!(q.loops_at(0), 2);
        let q = Quiver::parse_json(r#"{"arrows": [[0,1],[1,0]]}"#).unwrap();
        assert_eq!(q.vertex_count(), 2);
        assert_eq!(q.arrow_count(0, 1), 1);
    }

    #[test]
    fn rejects_malformed_input() {
        assert!(matches!(
            Quiver::parse_json(r#"{"arrows": [[0,1],[2,0]]}"#),
            Err(QuiverError::NotSymmetric { .. })
        ));
        assert!(matches!(
            Quiver::parse_json(r#"{"arrows": [[0,1]]}"#),
            Err(QuiverError::NotSquare { .. })
        ));
        assert!(matches!(
            Quiver::parse_json(r#"{"arrows": [[-1]]}"#),
            Err(QuiverError::Json(_))
        ));
        assert!(matches!(
            Quiver::parse_json(r#"{"arrows": []}"#),
            Err(QuiverError::Empty)
        ));
        assert!(matches!(
            Quiver::parse_json("not json"),
            Err(QuiverError::Json(_))
        ));
    }

    #[test]
    fn euler_form_examples() {
        // one loop: chi(d, e) = de - de = 0, so chi((1),(1)) = 0
        assert_eq!(Quiver::loops(1).euler_form(&dv(&[1]), &dv(&[1])), 0);
        // two loops: chi((1),(1)) = 1 - 2 = -1
        assert_eq!(Quiver::loops(2).euler_form(&dv(&[1]), &dv(&[1])), -1);
        let q = Quiver::parse_json(r#"{"arrows": [[0,1],[1,0]]}"#).unwrap();
        assert_eq!(q.euler_form(&dv(&[1, 0]), &dv(&[0, 1])), -1);
        assert_eq!(q.euler_form(&dv(&[1, 1]), &dv(&[1, 1])), 0);
    }

    #[test]
    fn euler_form_is_symmetric_and_bilinear() {
        let q = Quiver::new(vec![vec![2, 1], vec![1, 1]]).unwrap();
        let tuples = [
            (dv(&[1, 0]), dv(&[0, 1])),
            (dv(&[2, 1]), dv(&[1, 3])),
            (dv(&[1, 1]), dv(&[2, 0])),
        ];
        for (d, e) in &tuples {
            assert_eq!(q.euler_form(d, e), q.euler_form(e, d));
            let s = d.plus(e);
            assert_eq!(
                q.euler_form(&s, &s),
                q.euler_form(d, d) + 2 * q.euler_form(d, e) + q.euler_form(e, e)
            );
        }
    }

    #[test]
    fn almost_n_regular_classification() {
        assert_eq!(Quiver::loops(0).almost_n_regular(), None);
        assert_eq!(Quiver::loops(1).almost_n_regular(), Some(1));
        assert_eq!(Quiver::loops(3).almost_n_regular(), Some(3));
        let some = |rows: &[&[u32]]| {
            Quiver::new(rows.iter().map(|r| r.to_vec()).collect())
                .unwrap()
                .almost_n_regular()
        };
        assert_eq!(some(&[&[1, 1], &[1, 1]]), Some(1));
        assert_eq!(some(&[&[2, 1], &[1, 1]]), Some(1));
        assert_eq!(some(&[&[2, 2], &[2, 2]]), Some(2));
        assert_eq!(some(&[&[0, 1], &[1, 0]]), None);
        assert_eq!(some(&[&[3, 1], &[1, 1]]), None);
        assert_eq!(some(&[&[1, 1, 1], &[1, 1, 1], &[1, 1, 1]]), Some(1));
        assert_eq!(some(&[&[1, 1, 1], &[1, 1, 2], &[1, 2, 1]]), None);
    }

    #[test]
    fn parity_class_counts_odd_vertices() {
        let q = Quiver::parse_json(r#"{"arrows": [[0,1],[1,1]]}"#).unwrap();
        // vertex 0 contributes (0+1) per unit, vertex 1 contributes (1+1)
        assert_eq!(q.parity_class(&dv(&[1, 0])), 1);
        assert_eq!(q.parity_class(&dv(&[0, 1])), 0);
        assert_eq!(q.parity_class(&dv(&[1, 1])), 1);
        assert_eq!(q.parity_class(&dv(&[2, 5])), 0);
    }
}
