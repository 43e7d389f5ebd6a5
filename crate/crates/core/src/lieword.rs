//! Word bases for the Koszul-dual Lie algebra: super-Lyndon words over a
//! graded alphabet of letters, one per vertex and homological level.
//!
//! A word is Lyndon here when it is strictly larger than every proper cyclic
//! rotation of itself. Super-Lyndon words are the Lyndon words together with
//! the squares of odd-parity Lyndon words. Letters are ordered so that a
//! higher level means a smaller letter; among letters of equal level, a
//! higher vertex index is smaller.

use crate::motivic::g_character;
use crate::qseries::{DimVector, IntPoly};
use crate::quiver::Quiver;
use num::bigint::BigInt;
use num::rational::BigRational;
use num::{One, Zero};
use std::cmp::Ordering;
use std::collections::{BTreeMap, BTreeSet};
use thiserror::Error;

/// Generator of the dual Lie algebra: vertex `i`, homological level `k`.
/// Its degree is `2k + m_ii + 1` where `m_ii` counts loops at the vertex.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Letter {
    pub vertex: usize,
    pub level: u32,
}

impl Ord for Letter {
    fn cmp(&self, other: &Letter) -> Ordering {
        (other.level, other.vertex).cmp(&(self.level, self.vertex))
    }
}

impl PartialOrd for Letter {
    fn partial_cmp(&self, other: &Letter) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Letter {
    pub fn degree(&self, q: &Quiver) -> u32 {
        2 * self.level + q.loops_at(self.vertex) + 1
    }

    pub fn is_odd(&self, q: &Quiver) -> bool {
        self.degree(q) % 2 == 1
    }
}

/// Whether `w` is strictly larger than all of its proper cyclic rotations.
pub fn is_lyndon<T: Ord>(w: &[T]) -> bool {
    if w.is_empty() {
        return false;
    }
    for r in 1..w.len() {
        let rotation = w[r..].iter().chain(w[..r].iter());
        if w.iter().cmp(rotation) != Ordering::Greater {
            return false;
        }
    }
    true
}

/// Lyndon words plus squares `vv` of odd-degree Lyndon words `v`.
pub fn is_super_lyndon<T: Ord>(w: &[T], is_odd_letter: impl Fn(&T) -> bool) -> bool {
    if is_lyndon(w) {
        return true;
    }
    if w.len() % 2 != 0 {
        return false;
    }
    let (v, rest) = w.split_at(w.len() / 2);
    if v != rest || !is_lyndon(v) {
        return false;
    }
    let odd_letters = v.iter().filter(|l| is_odd_letter(l)).count();
    odd_letters % 2 == 1
}

/// Degree of a one-vertex word given as its level sequence.
pub fn word_degree(m: u32, levels: &[u32]) -> u32 {
    levels.iter().map(|&p| 2 * p + m + 1).sum()
}

fn step_allowed(m: u32, prev: u32, next: u32) -> bool {
    next as i64 <= prev as i64 + m as i64 - 1
}

/// Basis words of the dual Lie algebra of the one-vertex quiver with `m`
/// loops: super-Lyndon level sequences whose consecutive levels satisfy
/// `p_{i+1} <= p_i + m - 1`, with length in `1..=len_max` and every level at
/// most `level_max`. Words are returned sorted.
pub fn one_vertex_basis(m: u32, len_max: u32, level_max: u32) -> Vec<Vec<u32>> {
    let odd_letter = (m + 1) % 2 == 1;
    let mut out = Vec::new();
    let mut word: Vec<u32> = Vec::new();
    fn extend(
        m: u32,
        len_max: u32,
        level_max: u32,
        odd_letter: bool,
        word: &mut Vec<u32>,
        out: &mut Vec<Vec<u32>>,
    ) {
        if !word.is_empty() {
            let letters: Vec<Letter> = word
                .iter()
                .map(|&p| Letter { vertex: 0, level: p })
                .collect();
            if is_super_lyndon(&letters, |_| odd_letter) {
                out.push(word.clone());
            }
        }
        if word.len() as u32 == len_max {
            return;
        }
        for p in 0..=level_max {
            if let Some(&prev) = word.last() {
                if !step_allowed(m, prev, p) {
                    continue;
                }
            }
            word.push(p);
            extend(m, len_max, level_max, odd_letter, word, out);
            word.pop();
        }
    }
    extend(m, len_max, level_max, odd_letter, &mut word, &mut out);
    out.sort();
    out
}

/// Character of a word set, keyed by word length: the length `d` entry is
/// `sum of (-u)^{D(w)}` over the words `w` of length `d`.
pub fn signed_character(m: u32, words: &[Vec<u32>]) -> BTreeMap<u32, IntPoly> {
    let mut out: BTreeMap<u32, BTreeMap<usize, BigInt>> = BTreeMap::new();
    for w in words {
        let deg = word_degree(m, w) as usize;
        let sign = if deg % 2 == 0 {
            BigInt::one()
        } else {
            -BigInt::one()
        };
        *out.entry(w.len() as u32)
            .or_default()
            .entry(deg)
            .or_insert_with(BigInt::zero) += sign;
    }
    out.into_iter()
        .map(|(len, coeffs)| {
            let top = coeffs.keys().max().copied().unwrap_or(0);
            let mut v = vec![BigInt::zero(); top + 1];
            for (deg, c) in coeffs {
                v[deg] = c;
            }
            (len, IntPoly::from_coeffs(v))
        })
        .collect()
}

#[derive(Debug, Error)]
pub enum WordCheckError {
    #[error(
        "character mismatch at length {len}, u-exponent {exponent}: \
         words give {words}, series gives {series}"
    )]
    CharacterMismatch {
        len: u32,
        exponent: i64,
        words: BigInt,
        series: BigRational,
    },
    #[error("word {word:?} shifted down by {shift} is not a basis word")]
    ShiftDownMissing { word: Vec<u32>, shift: u32 },
    #[error("word {word:?} shifted up by {shift} is not a basis word")]
    ShiftUpMissing { word: Vec<u32>, shift: u32 },
}

/// Compares the signed word character of the one-vertex quiver with `m`
/// loops against the plethystic-logarithm character, for word lengths up to
/// `d_max` and degrees up to `deg_cap`, coefficient by coefficient.
///
/// Levels are enumerated up to `ceil(deg_cap / 2)`; a letter above that
/// level already has degree beyond `deg_cap`, so the enumeration sees every
/// word that can contribute within the degree window.
pub fn check_words_against_character(
    m: u32,
    d_max: u32,
    deg_cap: i64,
) -> Result<(), WordCheckError> {
    assert!(deg_cap >= 0, "degree cap must be non-negative");
    let level_max = (deg_cap as u32).div_ceil(2);
    let words = one_vertex_basis(m, d_max, level_max);
    let chars = signed_character(m, &words);
    let g = g_character(&Quiver::loops(m), d_max);
    let empty = IntPoly::zero();
    for len in 1..=d_max {
        let from_words = chars.get(&len).unwrap_or(&empty);
        let expansion = g.coeff(&DimVector(vec![len])).laurent(deg_cap);
        for exponent in 0..=deg_cap {
            let series = expansion.coeff(exponent);
            let word_coeff = from_words.coeff(exponent as usize);
            if series != BigRational::from(word_coeff.clone()) {
                return Err(WordCheckError::CharacterMismatch {
                    len,
                    exponent,
                    words: word_coeff,
                    series,
                });
            }
        }
    }
    Ok(())
}

/// Verifies the level-shift bijection on the enumerated basis: shifting all
/// levels of a basis word down by their minimum lands on a basis word with
/// minimum level zero, and shifting any minimum-level-zero basis word up by
/// `s` stays a basis word whenever the result respects `level_max`.
pub fn check_shift_bijection(m: u32, len_max: u32, level_max: u32) -> Result<(), WordCheckError> {
    let basis: BTreeSet<Vec<u32>> = one_vertex_basis(m, len_max, level_max).into_iter().collect();
    for w in &basis {
        let s = *w.iter().min().expect("words are non-empty");
        if s == 0 {
            continue;
        }
        let shifted: Vec<u32> = w.iter().map(|&p| p - s).collect();
        if !basis.contains(&shifted) {
            return Err(WordCheckError::ShiftDownMissing {
                word: w.clone(),
                shift: s,
            });
        }
    }
    for w in &basis {
        if *w.iter().min().expect("words are non-empty") != 0 {
            continue;
        }
        let top = *w.iter().max().expect("words are non-empty");
        for s in 1..=(level_max - top) {
            let shifted: Vec<u32> = w.iter().map(|&p| p + s).collect();
            if !basis.contains(&shifted) {
                return Err(WordCheckError::ShiftUpMissing {
                    word: w.clone(),
                    shift: s,
                });
            }
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn letters(levels: &[u32]) -> Vec<Letter> {
        levels
            .iter()
            .map(|&level| Letter { vertex: 0, level })
            .collect()
    }

    #[test]
    fn letter_order_reverses_levels_and_vertices() {
        let high = Letter { vertex: 0, level: 3 };
        let low = Letter { vertex: 0, level : 1 };
        assert!(high < low);
        let left = Letter { vertex: 0, level: 2 };
        let right = Letter { vertex: 1, level: 2 };
        assert!(right < left);
    }

    #[test]
    fn lyndon_words_on_integers() {
        // over plain integers the largest rotation starts with the maximum
        assert!(is_lyndon(&[3, 1, 2]));
        assert!(!is_lyndon(&[1, 2, 3]));
        assert!(!is_lyndon(&[2, 1, 2, 1]));
        assert!(is_lyndon(&[5]));
        assert!(!is_lyndon::<u32>(&[]));
    }

    #[test]
    fn super_lyndon_accepts_odd_squares_only() {
        assert!(is_super_lyndon(&[2, 1, 2, 1], |&l| l % 2 == 1));
        assert!(!is_super_lyndon(&[2, 1, 2, 1], |_| true));
        assert!(!is_super_lyndon(&[2, 2, 2, 2], |_| true));
        assert!(is_super_lyndon(&[7, 7], |_| true));
        assert!(!is_super_lyndon(&[7, 7], |_| false));
    }

    #[test]
    fn two_loop_length_two_basis_matches_hand_enumeration() {
        let words: Vec<Vec<u32>> = one_vertex_basis(2, 2, 2)
            .into_iter()
            .filter(|w| w.len() == 2)
            .collect();
        let expected: Vec<Vec<u32>> =
            [[0, 0], [0, 1], [1, 1], [1, 2], [2, 2]].map(|w| w.to_vec()).into();
        assert_eq!(words, expected);
    }

    #[test]
    fn one_loop_words_are_single_letters() {
        // m = 1: levels cannot increase and cannot repeat, letters are even,
        // so every basis word is a singleton
        let words = one_vertex_basis(1, 4, 5);
        assert_eq!(words.len(), 6);
        assert!(words.iter().all(|w| w.len() == 1));
    }

    #[test]
    fn no_loop_words_are_single_letters() {
        let words = one_vertex_basis(0, 3, 4);
        assert!(words.iter().all(|w| w.len() == 1));
    }

    #[test]
    fn step_constraint_filters_levels() {
        // m = 2 allows steps up by at most one
        assert!(one_vertex_basis(2, 2, 3).contains(&vec![2, 3]));
        assert!(!one_vertex_basis(2, 2, 3).contains(&vec![1, 3]));
    }

    #[test]
    fn characters_match_series_for_small_loops() {
        for m in [0, 1, 2] {
            check_words_against_character(m, 3, 12).unwrap();
        }
    }

    #[test]
    fn shift_bijection_holds() {
        for m in [0, 1, 2, 3] {
            check_shift_bijection(m, 3, 4).unwrap();
        }
    }

    #[test]
    fn degrees_and_parity() {
        let q = Quiver::loops(2);
        let l = Letter { vertex: 0, level: 3 };
        assert_eq!(l.degree(&q), 9);
        assert!(l.is_odd(&q));
        assert_eq!(word_degree(2, &[0, 1]), 3 + 5);
        let w = letters(&[0, 1]);
        assert!(is_super_lyndon(&w, |l| l.is_odd(&q)));
    }

    #[test]
    fn two_loop_cubic_words() {
        // length 3, m = 2: all-odd letters, Lyndon means level sequence
        // strictly ascending at the first descent boundary; spot-check a few
        let basis = one_vertex_basis(2, 3, 2);
        assert!(basis.contains(&vec![0, 1, 1]));
        assert!(basis.contains(&vec![0, 0, 1]));
        assert!(basis.contains(&vec![0, 1, 2]));
        assert!(!basis.contains(&vec![1, 0, 1]));
        // a cube is neither Lyndon nor the square of an odd word
        assert!(!basis.contains(&vec![1, 1, 1]));
    }
}
