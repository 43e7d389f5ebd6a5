//! Staircase partitions and the letter alphabet behind the one-vertex word
//! basis: basis words with minimum level zero factor uniquely into strict
//! staircase partitions, glued by a shifted concatenation.
//!
//! Throughout, partitions have nondecreasing parts. For a quiver with `m`
//! loops, `T` is the staircase region `l_i <= (m-1)(i-1)` and the alphabet
//! `T0` consists of the strict staircase partitions: `l_1 = 0` and
//! `l_i < (m-1)(i-1)` for `i >= 2`.

use crate::lieword::{is_super_lyndon, one_vertex_basis};
use std::cmp::Ordering;
use std::collections::{BTreeMap, BTreeSet};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct Partition(pub Vec<u32>);

impl Partition {
    /// Builds a partition, checking that parts are nondecreasing.
    pub fn new(parts: Vec<u32>) -> Partition {
        assert!(
            parts.windows(2).all(|w| w[0] <= w[1]),
            "parts must be nondecreasing"
        );
        Partition(parts)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Membership in the staircase region `l_i <= (m-1)(i-1)`.
    pub fn in_staircase(&self, m: u32) -> bool {
        let step = staircase_step(m);
        self.0
            .iter()
            .enumerate()
            .all(|(i, &part)| part as u64 <= step * i as u64)
    }

    /// Membership in the alphabet `T0`: non-empty, first part zero, and
    /// `l_i < (m-1)(i-1)` strictly from the second part on.
    pub fn is_letter(&self, m: u32) -> bool {
        if self.0.first() != Some(&0) {
            return false;
        }
        let step = staircase_step(m);
        self.0
            .iter()
            .enumerate()
            .skip(1)
            .all(|(i, &part)| (part as u64) < step * i as u64)
    }

    /// Parity of the corresponding word chunk: `(m-1) * length mod 2`.
    pub fn parity(&self, m: u32) -> u8 {
        ((staircase_step(m) * self.0.len() as u64) % 2) as u8
    }
}

fn staircase_step(m: u32) -> u64 {
    m.checked_sub(1).expect("loop count must be at least 1") as u64
}

/// Shifted concatenation: appends `b` raised by `(m-1) * len(a)` to `a`.
/// Stays inside the staircase region when both factors are letters.
pub fn star(a: &Partition, b: &Partition, m: u32) -> Partition {
    let shift = staircase_step(m) as u32 * a.len() as u32;
    let mut parts = a.0.clone();
    parts.extend(b.0.iter().map(|&p| p + shift));
    Partition::new(parts)
}

/// Tie-breaking convention for comparing a letter against one of its proper
/// prefixes. `ShorterLarger` is the order under which the word basis factors
/// through the alphabet; `ShorterSmaller` is kept to demonstrate that the
/// opposite convention breaks the factorization.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PrefixRule {
    ShorterLarger,
    ShorterSmaller,
}

/// Compares letters part by part, larger part first wins; a proper prefix is
/// resolved by the rule.
pub fn compare_letters(a: &[u32], b: &[u32], rule: PrefixRule) -> Ordering {
    for (x, y) in a.iter().zip(b.iter()) {
        if x != y {
            return x.cmp(y);
        }
    }
    match a.len().cmp(&b.len()) {
        Ordering::Equal => Ordering::Equal,
        Ordering::Less => match rule {
            PrefixRule::ShorterLarger => Ordering::Greater,
            PrefixRule::ShorterSmaller => Ordering::Less,
        },
        Ordering::Greater => match rule {
            PrefixRule::ShorterLarger => Ordering::Less,
            PrefixRule::ShorterSmaller => Ordering::Greater,
        },
    }
}

/// All letters of length at most `max_len`, sorted.
pub fn alphabet(m: u32, max_len: u32) -> Vec<Partition> {
    let mut out = Vec::new();
    let mut parts = vec![0u32];
    fn extend(m: u32, max_len: u32, parts: &mut Vec<u32>, out: &mut Vec<Partition>) {
        out.push(Partition(parts.clone()));
        if parts.len() as u32 == max_len {
            return;
        }
        let i = parts.len() as u64;
        let last = *parts.last().expect("letters are non-empty");
        let bound = staircase_step(m) * i;
        for next in last as u64..bound {
            parts.push(next as u32);
            extend(m, max_len, parts, out);
            parts.pop();
        }
    }
    if max_len >= 1 {
        extend(m, max_len, &mut parts, &mut out);
    }
    out.sort();
    out
}

/// Level sequence of the word encoded by a letter sequence under a global
/// level shift `p`: the letters are star-multiplied into one staircase
/// partition `L`, and position `i` gets level `p + (m-1)(i-1) - L_i`.
pub fn word_from_letters(p: u32, letters: &[Partition], m: u32) -> Vec<u32> {
    let mut combined = Partition::new(Vec::new());
    for letter in letters {
        combined = star(&combined, letter, m);
    }
    combined
        .0
        .iter()
        .enumerate()
        .map(|(i, &part)| {
            let ceiling = staircase_step(m) as u32 * i as u32;
            assert!(part <= ceiling, "star product left the staircase region");
            p + ceiling - part
        })
        .collect()
}

#[derive(Debug, Error)]
pub enum BijectionError {
    #[error("letter words {first:?} and {second:?} encode the same level word {word:?}")]
    DuplicateImage {
        first: Vec<Vec<u32>>,
        second: Vec<Vec<u32>>,
        word: Vec<u32>,
    },
    #[error("letter word {letters:?} encodes {word:?}, which is not a basis word")]
    NotInBasis {
        letters: Vec<Vec<u32>>,
        word: Vec<u32>,
    },
    #[error("basis word {word:?} is not encoded by any letter word")]
    Missing { word: Vec<u32> },
}

struct RuledLetter<'a> {
    parts: &'a [u32],
    rule: PrefixRule,
}

impl PartialEq for RuledLetter<'_> {
    fn eq(&self, other: &Self) -> bool {
        self.parts == other.parts
    }
}

impl Eq for RuledLetter<'_> {}

impl Ord for RuledLetter<'_> {
    fn cmp(&self, other: &Self) -> Ordering {
        compare_letters(self.parts, other.parts, self.rule)
    }
}

impl PartialOrd for RuledLetter<'_> {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

fn is_super_lyndon_letter_word(m: u32, word: &[&Partition], rule: PrefixRule) -> bool {
    let ruled: Vec<RuledLetter> = word
        .iter()
        .map(|p| RuledLetter {
            parts: &p.0,
            rule,
        })
        .collect();
    let parity: BTreeMap<&[u32], bool> = word
        .iter()
        .map(|p| (p.0.as_slice(), p.parity(m) == 1))
        .collect();
    is_super_lyndon(&ruled, |l| parity[l.parts])
}

/// Verifies that level-shift-zero basis words correspond exactly to
/// super-Lyndon words over the letter alphabet: the encoding is injective,
/// lands in the basis, and reaches every basis word with minimum level zero,
/// restricted to words of length at most `len_max` and levels at most
/// `level_max`.
pub fn check_bijection(
    m: u32,
    len_max: u32,
    level_max: u32,
    rule: PrefixRule,
) -> Result<(), BijectionError> {
    let basis0: BTreeSet<Vec<u32>> = one_vertex_basis(m, len_max, level_max)
        .into_iter()
        .filter(|w| w.iter().min() == Some(&0))
        .collect();
    let letters = alphabet(m, len_max);
    let mut images: BTreeMap<Vec<u32>, Vec<Vec<u32>>> = BTreeMap::new();

    fn enumerate<'a>(
        m: u32,
        len_max: u32,
        level_max: u32,
        rule: PrefixRule,
        letters: &'a [Partition],
        word: &mut Vec<&'a Partition>,
        used_len: u32,
        images: &mut BTreeMap<Vec<u32>, Vec<Vec<u32>>>,
    ) -> Result<(), BijectionError> {
        if !word.is_empty() && is_super_lyndon_letter_word(m, word, rule) {
            let encoded = word_from_letters(0, &word.iter().cloned().cloned().collect::<Vec<_>>(), m);
            if encoded.iter().max().is_none_or(|&top| top <= level_max) {
                let tag: Vec<Vec<u32>> = word.iter().map(|p| p.0.clone()).collect();
                if let Some(first) = images.get(&encoded) {
                    return Err(BijectionError::DuplicateImage {
                        first: first.clone(),
                        second: tag,
                        word: encoded,
                    });
                }
                images.insert(encoded, tag);
            }
        }
        for letter in letters {
            let next_len = used_len + letter.len() as u32;
            if next_len > len_max {
                continue;
            }
            word.push(letter);
            enumerate(m, len_max, level_max, rule, letters, word, next_len, images)?;
            word.pop();
        }
        Ok(())
    }

    let mut word = Vec::new();
    enumerate(m, len_max, level_max, rule, &letters, &mut word, 0, &mut images)?;

    for (encoded, tag) in &images {
        if !basis0.contains(encoded) {
            return Err(BijectionError::NotInBasis {
                letters: tag.clone(),
                word: encoded.clone(),
            });
        }
    }
    for w in &basis0 {
        if !images.contains_key(w) {
            return Err(BijectionError::Missing { word: w.clone() });
        }
    }
    Ok(())
}
