//! Word-problem oracle through the Artin representation `B_n -> Aut(F_n)`.
//!
//! The generator `a_i` acts by `x_i -> x_i x_{i+1} x_i^-1`, `x_{i+1} -> x_i`.
//! A braid word `g_1 ... g_k` maps to `phi_{g_1} o ... o phi_{g_k}`, so the
//! representation is a homomorphism and faithful: two words are the same
//! braid iff their automorphisms agree on every generator.

use crate::braid::{check_strands, BraidWord};
use crate::error::{BraidError, Result};

pub const DEFAULT_IMAGE_CAP: usize = 1_000_000;

/// A freely reduced word over `x_1 .. x_n`; `-j` is `x_j^-1`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct FreeWord {
    letters: Vec<i32>,
}

impl FreeWord {
    pub fn generator(j: i32) -> Self {
        Self { letters: vec![j] }
    }

    pub fn letters(&self) -> &[i32] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn inverse(&self) -> Self {
        Self {
            letters: self.letters.iter().rev().map(|&g| -g).collect(),
        }
    }

    /// `self * other`, freely reduced.
    pub fn mul(&self, other: &FreeWord) -> Self {
        let mut out = self.letters.clone();
        push_reduced(&mut out, &other.letters);
        Self { letters: out }
    }
}

fn push_reduced(out: &mut Vec<i32>, tail: &[i32]) {
    for &g in tail {
        if out.last() == Some(&-g) {
            out.pop();
        } else {
            out.push(g);
        }
    }
}

pub fn free_reduce(letters: &[i32]) -> FreeWord {
    let mut out = Vec::with_capacity(letters.len());
    push_reduced(&mut out, letters);
    FreeWord { letters: out }
}

/// An endomorphism of `F_n`, given by the images of the generators.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FreeEndo {
    images: Vec<FreeWord>,
}

impl FreeEndo {
    pub fn identity(n: usize) -> Self {
        Self {
            images: (1..=n as i32).map(FreeWord::generator).collect(),
        }
    }

    pub fn images(&self) -> &[FreeWord] {
        &self.images
    }

    pub fn rank(&self) -> usize {
        self.images.len()
    }

    pub fn is_identity(&self) -> bool {
        self == &Self::identity(self.rank())
    }

    /// Image of an arbitrary free word.
    pub fn apply(&self, word: &FreeWord) -> FreeWord {
        let mut out = Vec::new();
        for &g in word.letters() {
            let image = &self.images[g.unsigned_abs() as usize - 1];
            if g > 0 {
                push_reduced(&mut out, image.letters());
            } else {
                push_reduced(&mut out, image.inverse().letters());
            }
        }
        FreeWord { letters: out }
    }

    /// `self o inner`.
    pub fn compose(&self, inner: &FreeEndo) -> FreeEndo {
        FreeEndo {
            images: inner.images.iter().map(|w| self.apply(w)).collect(),
        }
    }

    fn total_len(&self) -> usize {
        self.images.iter().map(FreeWord::len).sum()
    }
}

pub fn artin_action(b: &BraidWord) -> Result<FreeEndo> {
    artin_action_capped(b, DEFAULT_IMAGE_CAP)
}

pub fn artin_action_capped(b: &BraidWord, cap: usize) -> Result<FreeEndo> {
    let mut endo = FreeEndo::identity(b.strands());
    for &g in b.letters() {
        let i = g.unsigned_abs() as usize - 1;
        let (left, right) = (&endo.images[i], &endo.images[i + 1]);
        let (new_left, new_right) = if g > 0 {
            (left.mul(right).mul(&left.inverse()), left.clone())
        } else {
            (right.clone(), right.inverse().mul(left).mul(right))
        };
        endo.images[i] = new_left;
        endo.images[i + 1] = new_right;
        if endo.total_len() > cap {
            return Err(BraidError::OracleBudgetExceeded { cap });
        }
    }
    Ok(endo)
}

/// True iff `a` and `b` are the same element of `B_n`.
pub fn artin_equal(a: &BraidWord, b: &BraidWord) -> Result<bool> {
    check_strands(a, b)?;
    Ok(artin_action(a)? == artin_action(b)?)
}
