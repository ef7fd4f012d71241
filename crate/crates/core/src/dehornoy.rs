//! Dehornoy's order on `B_n`, decided by handle reduction.
//!
//! A `sigma_i`-handle is a factor `a_i^e u a_i^-e` whose interior `u` only
//! uses generators of index `> i`. Reducing it deletes the two ends and
//! replaces every `a_{i+1}^d` of `u` by `a_{i+1}^-e a_i^d a_{i+1}^e`. The
//! reducer always rewrites the handle whose right end comes first; its
//! interior is then handle-free, which is the convergent strategy.
//!
//! The word is processed left to right. The already scanned prefix is kept
//! handle-free, and for every prefix position we store the nearest earlier
//! position carrying a strictly smaller generator index. Following those
//! links from the end of the prefix finds, for an incoming letter of index
//! `i`, the nearest earlier letter of index `<= i` in `O(n)` steps. After a
//! rewrite the prefix is truncated at the left end of the handle and the new
//! interior is pushed back onto the input, so the scan resumes exactly where
//! the word changed and the prefix links stay valid.

use std::cmp::Ordering;

use crate::braid::{check_strands, BraidWord};
use crate::error::{BraidError, Result};
use crate::family::full_twist;

pub const DEFAULT_STEP_BUDGET: u64 = 10_000_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum DehornoySign {
    Positive,
    Zero,
    Negative,
}

impl DehornoySign {
    pub fn as_str(self) -> &'static str {
        match self {
            DehornoySign::Positive => "positive",
            DehornoySign::Zero => "zero",
            DehornoySign::Negative => "negative",
        }
    }

    /// Sign of a handle-free word.
    fn of_reduced(letters: &[i32]) -> Self {
        match letters.iter().min_by_key(|g| g.unsigned_abs()) {
            None => DehornoySign::Zero,
            Some(&g) if g > 0 => DehornoySign::Positive,
            Some(_) => DehornoySign::Negative,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReductionReport {
    pub reduced: BraidWord,
    pub steps: u64,
    pub sign: DehornoySign,
}

const NONE: usize = usize::MAX;

fn reduce_letters(input: &[i32], budget: u64) -> Result<(Vec<i32>, u64)> {
    let mut out: Vec<i32> = Vec::with_capacity(input.len());
    let mut below: Vec<usize> = Vec::with_capacity(input.len());
    // Unscanned letters, next letter last.
    let mut pending: Vec<i32> = input.iter().rev().copied().collect();
    let mut steps = 0u64;

    while let Some(g) = pending.pop() {
        let index = g.abs();
        let mut pos = out.len().wrapping_sub(1);
        while pos != NONE && out[pos].abs() > index {
            pos = below[pos];
        }
        if pos != NONE && out[pos] == -g {
            steps += 1;
            if steps > budget {
                return Err(BraidError::BudgetExceeded { budget });
            }
            let e = out[pos].signum();
            let next = index + 1;
            for &x in out[pos + 1..].iter().rev() {
                if x.abs() == next {
                    pending.push(e * next);
                    pending.push(x.signum() * index);
                    pending.push(-e * next);
                } else {
                    pending.push(x);
                }
            }
            out.truncate(pos);
            below.truncate(pos);
        } else {
            let link = if pos != NONE && out[pos].abs() == index {
                below[pos]
            } else {
                pos
            };
            out.push(g);
            below.push(link);
        }
    }
    Ok((out, steps))
}

/// Decides the Dehornoy order with a fixed per-reduction step budget.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct OrderEngine {
    budget: u64,
}

impl Default for OrderEngine {
    fn default() -> Self {
        Self {
            budget: DEFAULT_STEP_BUDGET,
        }
    }
}

impl OrderEngine {
    pub fn with_budget(budget: u64) -> Self {
        Self { budget }
    }

    pub fn budget(&self) -> u64 {
        self.budget
    }

    pub fn handle_reduce(&self, w: &BraidWord) -> Result<ReductionReport> {
        let (reduced, steps) = reduce_letters(w.letters(), self.budget)?;
        let sign = DehornoySign::of_reduced(&reduced);
        Ok(ReductionReport {
            reduced: BraidWord::from_trusted(w.strands(), reduced),
            steps,
            sign,
        })
    }

    pub fn sign(&self, w: &BraidWord) -> Result<DehornoySign> {
        self.sign_of_letters(w.letters())
    }

    fn sign_of_letters(&self, letters: &[i32]) -> Result<DehornoySign> {
        let (reduced, _) = reduce_letters(letters, self.budget)?;
        Ok(DehornoySign::of_reduced(&reduced))
    }

    /// Order of `a` relative to `b`: `a < b` iff `a^-1 b` is positive.
    pub fn compare(&self, a: &BraidWord, b: &BraidWord) -> Result<Ordering> {
        check_strands(a, b)?;
        Ok(match self.sign(&a.inverse().concat(b)?)? {
            DehornoySign::Positive => Ordering::Less,
            DehornoySign::Zero => Ordering::Equal,
            DehornoySign::Negative => Ordering::Greater,
        })
    }

    pub fn equal(&self, a: &BraidWord, b: &BraidWord) -> Result<bool> {
        Ok(self.compare(a, b)? == Ordering::Equal)
    }

    /// The integer `m` with `D^2m <= b < D^2(m+1)`, `D^2` the full twist.
    pub fn floor(&self, b: &BraidWord) -> Result<i64> {
        let (lo, hi) = b.occurrence_window();
        self.floor_of_power(b, 1, lo - 1, hi)
    }

    /// Floor of `b^k`, known to lie in `[lo, hi]`.
    pub(crate) fn floor_of_power(&self, b: &BraidWord, k: u64, lo: i64, hi: i64) -> Result<i64> {
        let n = b.strands();
        if n < 2 {
            return Ok(0);
        }
        let twist = full_twist(n)?;
        let twist_inv = twist.inverse();
        // Largest m in [lo, hi] with D^2m <= b^k; the predicate is monotone.
        let (mut good, mut bad) = (lo, hi + 1);
        while bad - good > 1 {
            let mid = good + (bad - good) / 2;
            let word = interleave_twists(b, k, -mid, &twist, &twist_inv);
            if self.sign_of_letters(&word)? == DehornoySign::Negative {
                bad = mid;
            } else {
                good = mid;
            }
        }
        Ok(good)
    }
}

/// Letters of `D^(2 * twists) * b^k`, with the central twist factors spread
/// evenly between the copies of `b` so handles stay local.
fn interleave_twists(
    b: &BraidWord,
    k: u64,
    twists: i64,
    twist: &BraidWord,
    twist_inv: &BraidWord,
) -> Vec<i32> {
    let block = if twists >= 0 { twist } else { twist_inv };
    let total = twists.unsigned_abs();
    let mut letters = Vec::with_capacity(b.len() * k as usize + block.len() * total as usize);
    let k = k.max(1);
    for slot in 0..k {
        let copies = (slot + 1) * total / k - slot * total / k;
        for _ in 0..copies {
            letters.extend_from_slice(block.letters());
        }
        letters.extend_from_slice(b.letters());
    }
    letters
}

pub fn handle_reduce(w: &BraidWord) -> Result<ReductionReport> {
    OrderEngine::default().handle_reduce(w)
}

pub fn dehornoy_sign(w: &BraidWord) -> Result<DehornoySign> {
    OrderEngine::default().sign(w)
}

pub fn compare(a: &BraidWord, b: &BraidWord) -> Result<Ordering> {
    OrderEngine::default().compare(a, b)
}

pub fn dehornoy_floor(b: &BraidWord) -> Result<i64> {
    OrderEngine::default().floor(b)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::artin::artin_equal;

    fn w(n: usize, letters: &[i32]) -> BraidWord {
        BraidWord::new(n, letters.to_vec()).unwrap()
    }

    #[test]
    fn trivial_handle() {
        let r = handle_reduce(&w(2, &[1, -1])).unwrap();
        assert!(r.reduced.is_empty());
        assert_eq!(r.sign, DehornoySign::Zero);
        assert_eq!(r.steps, 1);
    }

    #[test]
    fn single_rewrite() {
        let input = w(4, &[2, 3, -2]);
        let r = handle_reduce(&input).unwrap();
        assert_eq!(r.reduced.letters(), &[-3, 2, 3]);
        assert_eq!(r.sign, DehornoySign::Positive);
        assert!(artin_equal(&input, &r.reduced).unwrap());
    }

    #[test]
    fn braid_relation_reduces_to_empty() {
        let input = w(3, &[1, 2, 1, -2, -1, -2]);
        assert!(artin_equal(&input, &w(3, &[])).unwrap());
        let r = handle_reduce(&input).unwrap();
        assert!(r.reduced.is_empty());
        assert_eq!(r.sign, DehornoySign::Zero);
    }

    #[test]
    fn sign_examples() {
        assert_eq!(
            dehornoy_sign(&w(3, &[-1, 2])).unwrap(),
            DehornoySign::Negative
        );
        assert_eq!(
            dehornoy_sign(&full_twist(3).unwrap()).unwrap(),
            DehornoySign::Positive
        );
        assert_eq!(dehornoy_sign(&w(3, &[2, -2])).unwrap(), DehornoySign::Zero);
    }

    #[test]
    fn compare_examples() {
        assert_eq!(compare(&w(2, &[]), &w(2, &[1])).unwrap(), Ordering::Less);
        assert_eq!(
            compare(&w(3, &[1, 2, 1]), &w(3, &[2, 1, 2])).unwrap(),
            Ordering::Equal
        );
        assert_eq!(
            compare(&full_twist(3).unwrap(), &w(3, &[1])).unwrap(),
            Ordering::Greater
        );
        assert!(compare(&w(2, &[]), &w(3, &[])).is_err());
    }

    #[test]
    fn floor_examples() {
        assert_eq!(dehornoy_floor(&full_twist(3).unwrap().power(2)).unwrap(), 2);
        assert_eq!(dehornoy_floor(&w(2, &[1])).unwrap(), 0);
        assert_eq!(dehornoy_floor(&w(2, &[-1])).unwrap(), -1);
        assert_eq!(dehornoy_floor(&w(1, &[])).unwrap(), 0);
        assert_eq!(
            dehornoy_floor(&full_twist(4).unwrap().power(-3)).unwrap(),
            -3
        );
    }

    #[test]
    fn budget_is_enforced() {
        let engine = OrderEngine::with_budget(0);
        assert_eq!(
            engine.handle_reduce(&w(2, &[1, -1])),
            Err(BraidError::BudgetExceeded { budget: 0 })
        );
        assert!(engine.handle_reduce(&w(3, &[1, 2, 2])).is_ok());
    }

    #[test]
    fn interleaving_keeps_letter_multiset() {
        let b = w(3, &[1, -2]);
        let t = full_twist(3).unwrap();
        let letters = interleave_twists(&b, 3, -2, &t, &t.inverse());
        assert_eq!(letters.len(), 3 * 2 + 2 * 6);
        let expected = t.inverse().power(2).concat(&b.power(3)).unwrap();
        assert!(artin_equal(&BraidWord::new(3, letters).unwrap(), &expected).unwrap());
    }
}
