//! Braid words on `n` strands and their elementary combinatorics.
//!
//! A letter `+i` stands for the Artin generator `a_i` and `-i` for its
//! inverse. Words are never reduced at this layer; the element of `B_n`
//! they represent is only compared through the order engine or the Artin
//! action.

use std::fmt;

use crate::error::{BraidError, Result};

/// A word in the Artin generators of `B_n`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BraidWord {
    strands: usize,
    letters: Vec<i32>,
}

impl BraidWord {
    pub fn new(strands: usize, letters: Vec<i32>) -> Result<Self> {
        if strands == 0 {
            return Err(BraidError::BadParams(
                "a braid needs at least one strand".into(),
            ));
        }
        if let Some(&bad) = letters
            .iter()
            .find(|&&g| g == 0 || g.unsigned_abs() as usize >= strands)
        {
            return Err(BraidError::BadParams(format!(
                "letter {bad} is not a generator of B_{strands}"
            )));
        }
        Ok(Self { strands, letters })
    }

    /// Builds a word whose letters are already known to be valid for `strands`.
    pub(crate) fn from_trusted(strands: usize, letters: Vec<i32>) -> Self {
        debug_assert!(letters
            .iter()
            .all(|&g| g != 0 && (g.unsigned_abs() as usize) < strands));
        Self { strands, letters }
    }

    pub fn identity(strands: usize) -> Self {
        Self {
            strands: strands.max(1),
            letters: Vec::new(),
        }
    }

    pub fn strands(&self) -> usize {
        self.strands
    }

    pub fn letters(&self) -> &[i32] {
        &self.letters
    }

    pub fn into_letters(self) -> Vec<i32> {
        self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn concat(&self, other: &BraidWord) -> Result<BraidWord> {
        check_strands(self, other)?;
        let mut letters = Vec::with_capacity(self.len() + other.len());
        letters.extend_from_slice(&self.letters);
        letters.extend_from_slice(&other.letters);
        Ok(Self {
            strands: self.strands,
            letters,
        })
    }

    pub fn inverse(&self) -> BraidWord {
        Self {
            strands: self.strands,
            letters: self.letters.iter().rev().map(|&g| -g).collect(),
        }
    }

    /// `self^k`; negative exponents repeat the inverse word.
    pub fn power(&self, k: i64) -> BraidWord {
        let base = if k < 0 { self.inverse() } else { self.clone() };
        let reps = k.unsigned_abs() as usize;
        let mut letters = Vec::with_capacity(base.len() * reps);
        for _ in 0..reps {
            letters.extend_from_slice(&base.letters);
        }
        Self {
            strands: self.strands,
            letters,
        }
    }

    /// Exponent sum of the word.
    pub fn writhe(&self) -> i64 {
        self.letters.iter().map(|&g| i64::from(g.signum())).sum()
    }

    pub fn perm(&self) -> Perm {
        let mut images: Vec<usize> = (0..self.strands).collect();
        for &g in &self.letters {
            let i = g.unsigned_abs() as usize - 1;
            images.swap(i, i + 1);
        }
        Perm { images }
    }

    /// Number of link components of the closure.
    pub fn closure_components(&self) -> usize {
        self.perm().cycle_count()
    }

    /// A positive word `e` of length `components - 1` with `self * e` closing
    /// up to a knot. Generators are taken greedily in increasing index.
    pub fn knotting_suffix(&self) -> BraidWord {
        let mut running = self.perm();
        let mut letters = Vec::new();
        for i in 1..self.strands {
            let cycles = running.cycle_labels();
            if cycles[i - 1] != cycles[i] {
                running.images.swap(i - 1, i);
                letters.push(i as i32);
            }
        }
        Self {
            strands: self.strands,
            letters,
        }
    }

    /// Stacks `parts` side by side, shifting the generators of each part past
    /// the strands of the parts before it.
    pub fn disjoint_union(parts: &[BraidWord]) -> Result<BraidWord> {
        if parts.is_empty() {
            return Err(BraidError::BadParams("disjoint union of no braids".into()));
        }
        let strands = parts.iter().map(|p| p.strands).sum();
        let mut letters = Vec::with_capacity(parts.iter().map(|p| p.len()).sum());
        let mut shift = 0i32;
        for part in parts {
            letters.extend(part.letters.iter().map(|&g| g + g.signum() * shift));
            shift += part.strands as i32;
        }
        Ok(Self { strands, letters })
    }

    /// Occurrence counts `(positive, negative)` of the generator `a_i`.
    pub fn occurrences(&self, i: usize) -> (u64, u64) {
        let mut pos = 0;
        let mut neg = 0;
        for &g in &self.letters {
            if g.unsigned_abs() as usize == i {
                if g > 0 {
                    pos += 1;
                } else {
                    neg += 1;
                }
            }
        }
        (pos, neg)
    }

    /// Integer window `[max_i(-s_i), min_i(r_i)]` from the counts `r_i`, `s_i`
    /// of `a_i` and `a_i^-1`; it contains the fractional Dehn twist
    /// coefficient of the braid.
    pub fn occurrence_window(&self) -> (i64, i64) {
        let mut lo = i64::MIN;
        let mut hi = i64::MAX;
        for i in 1..self.strands {
            let (r, s) = self.occurrences(i);
            lo = lo.max(-(s as i64));
            hi = hi.min(r as i64);
        }
        if self.strands < 2 {
            (0, 0)
        } else {
            (lo, hi)
        }
    }

    /// Same letters viewed in `B_strands` for some `strands >= self.strands()`.
    pub fn widen(&self, strands: usize) -> Result<BraidWord> {
        if strands < self.strands {
            return Err(BraidError::BadParams(format!(
                "cannot narrow a {}-braid to {strands} strands",
                self.strands
            )));
        }
        Ok(Self {
            strands,
            letters: self.letters.clone(),
        })
    }
}

pub(crate) fn check_strands(a: &BraidWord, b: &BraidWord) -> Result<()> {
    if a.strands != b.strands {
        return Err(BraidError::StrandMismatch {
            left: a.strands,
            right: b.strands,
        });
    }
    Ok(())
}

/// Canonical text form: `s<i>` for `a_i`, `S<i>` for its inverse.
impl fmt::Display for BraidWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (pos, &g) in self.letters.iter().enumerate() {
            if pos > 0 {
                f.write_str(" ")?;
            }
            let c = if g > 0 { 's' } else { 'S' };
            write!(f, "{c}{}", g.unsigned_abs())?;
        }
        Ok(())
    }
}

/// Permutation of strand labels: `images[j]` is the (0-based) label of the
/// strand that ends in position `j`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Perm {
    images: Vec<usize>,
}

impl Perm {
    pub fn identity(n: usize) -> Self {
        Self {
            images: (0..n).collect(),
        }
    }

    /// From 1-based images.
    pub fn from_images(images: &[usize]) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &v in images {
            if v == 0 || v > n || seen[v - 1] {
                return Err(BraidError::BadParams(format!(
                    "{images:?} is not a permutation"
                )));
            }
            seen[v - 1] = true;
        }
        Ok(Self {
            images: images.iter().map(|v| v - 1).collect(),
        })
    }

    /// 1-based images.
    pub fn images(&self) -> Vec<usize> {
        self.images.iter().map(|v| v + 1).collect()
    }

    pub fn len(&self) -> usize {
        self.images.len()
    }

    pub fn is_empty(&self) -> bool {
        self.images.is_empty()
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(j, &v)| j == v)
    }

    /// The permutation of `a * b` given those of `a` (self) and `b`.
    pub fn then(&self, next: &Perm) -> Perm {
        Perm {
            images: next.images.iter().map(|&j| self.images[j]).collect(),
        }
    }

    fn cycle_labels(&self) -> Vec<usize> {
        let n = self.images.len();
        let mut label = vec![usize::MAX; n];
        let mut next = 0;
        for start in 0..n {
            if label[start] != usize::MAX {
                continue;
            }
            let mut j = start;
            while label[j] == usize::MAX {
                label[j] = next;
                j = self.images[j];
            }
            next += 1;
        }
        label
    }

    pub fn cycle_count(&self) -> usize {
        self.cycle_labels().into_iter().max().map_or(0, |m| m + 1)
    }
}

impl fmt::Display for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (j, v) in self.images.iter().enumerate() {
            if j > 0 {
                f.write_str(",")?;
            }
            write!(f, "{}", v + 1)?;
        }
        f.write_str(")")
    }
}
