//! Exact fractional Dehn twist coefficients.
//!
//! `omega(b)` is the limit of `floor(b^k) / k`. Since `floor(x) <= omega(x)
//! <= floor(x) + 1` and `omega(b^k) = k omega(b)`, every `k` confines
//! `omega(b)` to `[m_k / k, (m_k + 1) / k]` with `m_k = floor(b^k)`. The value
//! is a fraction with denominator at most `n`, and two distinct such
//! fractions differ by at least `1 / (n (n - 1))`, so once the intersected
//! window is narrower than that a single candidate survives. Powers are
//! tried as `k = 1, 2, 4, ...` and capped at `n (n - 1) + 1`, which always
//! isolates the answer.

use std::collections::BTreeSet;

use num_traits::{One, Signed, Zero};

use crate::braid::{check_strands, BraidWord};
use crate::dehornoy::OrderEngine;
use crate::error::{BraidError, Result};
use crate::family::full_twist;
use crate::rational::{self, ceil_i64, floor_i64, int, Rational};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Fdtc {
    pub value: Rational,
    pub strands: usize,
}

impl Fdtc {
    pub fn zero(strands: usize) -> Self {
        Self {
            value: Rational::zero(),
            strands,
        }
    }
}

impl std::fmt::Display for Fdtc {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&rational::display(&self.value))
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OmegaBounds {
    pub lo: Rational,
    pub hi: Rational,
}

impl OmegaBounds {
    pub fn contains(&self, x: &Rational) -> bool {
        &self.lo <= x && x <= &self.hi
    }
}

/// `omega(w)` lies in `[-s_i, r_i]` for every generator `a_i` occurring
/// `r_i` times positively and `s_i` times negatively in `w`.
pub fn occurrence_bounds(w: &BraidWord) -> OmegaBounds {
    let (lo, hi) = w.occurrence_window();
    OmegaBounds {
        lo: int(lo),
        hi: int(hi),
    }
}

/// Fractions `p/q` with `q <= max_den` in `[lo, hi]`, stopping after `limit`.
fn candidates(lo: &Rational, hi: &Rational, max_den: usize, limit: usize) -> Vec<Rational> {
    let mut found = BTreeSet::new();
    for q in 1..=max_den as i64 {
        let qq = int(q);
        for p in ceil_i64(&(lo * &qq))..=floor_i64(&(hi * &qq)) {
            found.insert(rational::ratio(p, q));
            if found.len() >= limit {
                return found.into_iter().collect();
            }
        }
    }
    found.into_iter().collect()
}

/// Splits literal full-twist factors off both ends of the word.
fn peel_full_twists(b: &BraidWord) -> (i64, BraidWord) {
    let n = b.strands();
    let twist = full_twist(n).expect("strands >= 1");
    let t = twist.letters();
    let t_inv = twist.inverse().into_letters();
    let mut letters = b.letters();
    let mut twists = 0i64;
    loop {
        if letters.starts_with(t) {
            letters = &letters[t.len()..];
            twists += 1;
        } else if letters.starts_with(&t_inv) {
            letters = &letters[t.len()..];
            twists -= 1;
        } else if letters.ends_with(t) {
            letters = &letters[..letters.len() - t.len()];
            twists += 1;
        } else if letters.ends_with(&t_inv) {
            letters = &letters[..letters.len() - t.len()];
            twists -= 1;
        } else {
            break;
        }
    }
    (twists, BraidWord::from_trusted(n, letters.to_vec()))
}

#[derive(Debug, Clone, Copy, Default)]
pub struct FdtcSolver {
    engine: OrderEngine,
}

impl FdtcSolver {
    pub fn new(engine: OrderEngine) -> Self {
        Self { engine }
    }

    pub fn engine(&self) -> &OrderEngine {
        &self.engine
    }

    pub fn compute(&self, b: &BraidWord) -> Result<Fdtc> {
        let n = b.strands();
        if n < 2 || b.is_empty() {
            return Ok(Fdtc::zero(n));
        }
        let (twists, rest) = peel_full_twists(b);
        let value = int(twists) + self.isolate(&rest)?;
        Ok(Fdtc { value, strands: n })
    }

    fn isolate(&self, b: &BraidWord) -> Result<Rational> {
        let n = b.strands();
        let bounds = occurrence_bounds(b);
        let (mut lo, mut hi) = (bounds.lo, bounds.hi);
        let last_k = (n * (n - 1) + 1) as u64;
        let mut k = 1u64;
        loop {
            let found = candidates(&lo, &hi, n, 2);
            match found.len() {
                1 => return Ok(found.into_iter().next().unwrap()),
                0 => {
                    return Err(BraidError::Inconsistent {
                        strands: n,
                        lo: rational::display(&lo),
                        hi: rational::display(&hi),
                    })
                }
                _ if k > last_k => {
                    return Err(BraidError::Inconsistent {
                        strands: n,
                        lo: rational::display(&lo),
                        hi: rational::display(&hi),
                    })
                }
                _ => {}
            }
            let kk = int(k as i64);
            let floor_lo = ceil_i64(&(&lo * &kk)) - 1;
            let floor_hi = floor_i64(&(&hi * &kk));
            let m = self.engine.floor_of_power(b, k, floor_lo, floor_hi)?;
            let below = rational::ratio(m, k as i64);
            let above = rational::ratio(m + 1, k as i64);
            lo = lo.max(below);
            hi = hi.min(above);
            k = if k == last_k {
                k + 1
            } else {
                (2 * k).min(last_k)
            };
        }
    }
}

pub fn fdtc(b: &BraidWord) -> Result<Fdtc> {
    FdtcSolver::default().compute(b)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PropertyCheck {
    pub name: &'static str,
    pub passed: bool,
    pub witness: String,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PropertyReport {
    pub checks: Vec<PropertyCheck>,
}

impl PropertyReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &PropertyCheck> {
        self.checks.iter().filter(|c| !c.passed)
    }
}

impl FdtcSolver {
    /// Evaluates quasimorphism defect, homogeneity, the full-twist shift,
    /// conjugation invariance and the denominator bound on `a` and `b`.
    pub fn check_properties(&self, a: &BraidWord, b: &BraidWord) -> Result<PropertyReport> {
        check_strands(a, b)?;
        let n = a.strands();
        let wa = self.compute(a)?.value;
        let wb = self.compute(b)?.value;
        let wab = self.compute(&a.concat(b)?)?.value;
        let mut checks = Vec::new();

        let defect = (&wab - &wa - &wb).abs();
        checks.push(PropertyCheck {
            name: "quasimorphism",
            passed: defect <= Rational::one(),
            witness: format!("|w(ab) - w(a) - w(b)| = {}", rational::display(&defect)),
        });

        for k in [-1i64, 2] {
            let wk = self.compute(&a.power(k))?.value;
            let expected = int(k) * &wa;
            checks.push(PropertyCheck {
                name: "homogeneity",
                passed: wk == expected,
                witness: format!(
                    "w(a^{k}) = {}, k w(a) = {}",
                    rational::display(&wk),
                    rational::display(&expected)
                ),
            });
        }

        let twisted = self.compute(&full_twist(n)?.concat(a)?)?.value;
        checks.push(PropertyCheck {
            name: "full twist",
            passed: twisted == &wa + Rational::one(),
            witness: format!(
                "w(D^2 a) = {}, w(a) + 1 = {}",
                rational::display(&twisted),
                rational::display(&(&wa + Rational::one()))
            ),
        });

        let conj = self.compute(&b.concat(a)?.concat(&b.inverse())?)?.value;
        checks.push(PropertyCheck {
            name: "conjugation",
            passed: conj == wa,
            witness: format!(
                "w(b a b^-1) = {}, w(a) = {}",
                rational::display(&conj),
                rational::display(&wa)
            ),
        });

        let worst = [&wa, &wb, &wab]
            .into_iter()
            .map(|w| w.denom().clone())
            .max()
            .unwrap();
        checks.push(PropertyCheck {
            name: "denominator",
            passed: worst <= num_bigint::BigInt::from(n),
            witness: format!("largest denominator {worst} with n = {n}"),
        });

        Ok(PropertyReport { checks })
    }
}

pub fn fdtc_properties_check(a: &BraidWord, b: &BraidWord) -> Result<PropertyReport> {
    FdtcSolver::default().check_properties(a, b)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::family::{beta_nm, elrifai_k, elrifai_l};
    use crate::rational::ratio;

    fn w(n: usize, letters: &[i32]) -> BraidWord {
        BraidWord::new(n, letters.to_vec()).unwrap()
    }

    #[test]
    fn occurrence_bound_examples() {
        let k1 = occurrence_bounds(&elrifai_k(1).unwrap());
        assert_eq!((k1.lo, k1.hi), (int(0), int(4)));
        let b = occurrence_bounds(&w(3, &[1, -2]));
        assert_eq!((b.lo, b.hi), (int(0), int(0)));
        let t = occurrence_bounds(&full_twist(2).unwrap());
        assert!(t.contains(&int(1)));
        assert_eq!((t.lo, t.hi), (int(0), int(2)));
    }

    #[test]
    fn fdtc_examples() {
        assert_eq!(fdtc(&beta_nm(4, 3).unwrap()).unwrap().value, int(2));
        assert_eq!(fdtc(&w(4, &[1, 2, 3, 3])).unwrap().value, ratio(1, 3));
        assert_eq!(fdtc(&elrifai_l(1).unwrap()).unwrap().value, int(3));
        assert_eq!(fdtc(&w(2, &[1])).unwrap().value, ratio(1, 2));
        assert_eq!(fdtc(&w(5, &[1, 2, 3, 4, 1, 2])).unwrap().value, ratio(1, 3));
    }

    #[test]
    fn identity_and_trivial_group() {
        assert_eq!(fdtc(&w(4, &[])).unwrap().value, int(0));
        assert_eq!(fdtc(&w(1, &[])).unwrap().value, int(0));
    }

    #[test]
    fn peeling_is_syntactic() {
        let t = full_twist(3).unwrap();
        let word = t
            .concat(&w(3, &[1, -2]))
            .unwrap()
            .concat(&t.inverse().power(2))
            .unwrap();
        let (twists, rest) = peel_full_twists(&word);
        assert_eq!(twists, -1);
        assert_eq!(rest.letters(), &[1, -2]);
        assert_eq!(fdtc(&word).unwrap().value, int(-1));
    }

    #[test]
    fn candidate_scan() {
        let c = candidates(&int(0), &int(1), 2, 10);
        assert_eq!(c, vec![int(0), ratio(1, 2), int(1)]);
        assert!(candidates(&ratio(1, 5), &ratio(1, 4), 3, 10).is_empty());
    }

    #[test]
    fn property_report_examples() {
        let r = fdtc_properties_check(&w(2, &[1]), &w(2, &[-1])).unwrap();
        assert!(r.passed(), "{:?}", r);
        let r = fdtc_properties_check(&full_twist(3).unwrap(), &w(3, &[2, -1])).unwrap();
        assert!(r.passed(), "{:?}", r);
        let r = fdtc_properties_check(&w(4, &[1, 2, -3]), &w(4, &[])).unwrap();
        assert!(r.passed(), "{:?}", r);
        assert!(fdtc_properties_check(&w(2, &[]), &w(3, &[])).is_err());
        assert_eq!(fdtc(&elrifai_k(1).unwrap()).unwrap().value, int(2));
    }
}
