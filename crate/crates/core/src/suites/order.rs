use std::cmp::Ordering;

use rand::Rng;
use rand_chacha::ChaCha8Rng;

use super::{draw_word, CaseOutcome, PropertySuite, SuiteContext};
use crate::artin::{artin_action, artin_equal};
use crate::braid::BraidWord;
use crate::dehornoy::DehornoySign;
use crate::error::Result;
use crate::family::full_twist;
use crate::random::random_equivalent;

/// Handle reduction against the Artin action: equality verdicts agree and
/// reduction preserves writhe, permutation and the automorphism.
pub struct OrderOracle;

impl PropertySuite for OrderOracle {
    fn name(&self) -> &'static str {
        "order-oracle"
    }

    fn description(&self) -> &'static str {
        "handle-reduction equality vs Artin action; reduction preserves writhe, permutation, action"
    }

    fn run_case(&self, ctx: &SuiteContext, rng: &mut ChaCha8Rng) -> Result<CaseOutcome> {
        let engine = ctx.solver.engine();
        let n = ctx.strands_or(rng, 2, 5);
        let (a, b) = match rng.gen_range(0..3) {
            0 => {
                let a = draw_word(rng, n, 0..=14);
                let b = random_equivalent(rng, &a, 8);
                (a, b)
            }
            1 => {
                let a = draw_word(rng, n, 0..=14);
                let mut letters = random_equivalent(rng, &a, 8).into_letters();
                if !letters.is_empty() {
                    let pos = rng.gen_range(0..letters.len());
                    letters[pos] = -letters[pos];
                }
                (a, BraidWord::new(n, letters)?)
            }
            _ => (draw_word(rng, n, 0..=30), draw_word(rng, n, 0..=30)),
        };
        let mut out = CaseOutcome::default();
        let handle_eq = engine.equal(&a, &b)?;
        let oracle_eq = artin_equal(&a, &b)?;
        out.check(handle_eq == oracle_eq, || {
            format!("[{a}] vs [{b}] in B_{n}: handle says {handle_eq}, Artin says {oracle_eq}")
        });

        for w in [&a, &b] {
            let report = engine.handle_reduce(w)?;
            let r = &report.reduced;
            out.check(r.writhe() == w.writhe(), || {
                format!("writhe changed reducing [{w}]")
            });
            out.check(r.perm() == w.perm(), || {
                format!("permutation changed reducing [{w}]")
            });
            out.check(artin_action(r)? == artin_action(w)?, || {
                format!("Artin action changed reducing [{w}] to [{r}]")
            });
            let again = engine.handle_reduce(r)?;
            out.check(again.steps == 0, || format!("[{r}] still has a handle"));
            out.check((report.sign == DehornoySign::Zero) == r.is_empty(), || {
                format!(
                    "sign {:?} inconsistent with reduced word [{r}]",
                    report.sign
                )
            });
        }
        Ok(out)
    }
}

/// Trichotomy, antisymmetry, transitivity, left invariance, the positive
/// cone, and floor bracketing/superadditivity.
pub struct OrderAxioms;

impl PropertySuite for OrderAxioms {
    fn name(&self) -> &'static str {
        "order-axioms"
    }

    fn description(&self) -> &'static str {
        "trichotomy, transitivity, left invariance, positive cone, floor bracketing"
    }

    fn run_case(&self, ctx: &SuiteContext, rng: &mut ChaCha8Rng) -> Result<CaseOutcome> {
        let engine = ctx.solver.engine();
        let n = ctx.strands_or(rng, 2, 4);
        let (a, b, c) = (
            draw_word(rng, n, 0..=12),
            draw_word(rng, n, 0..=12),
            draw_word(rng, n, 0..=12),
        );
        let mut out = CaseOutcome::default();

        let ab = engine.compare(&a, &b)?;
        let ba = engine.compare(&b, &a)?;
        out.check(ab == ba.reverse(), || {
            format!("[{a}] vs [{b}]: {ab:?} but reversed {ba:?}")
        });
        out.check((ab == Ordering::Equal) == artin_equal(&a, &b)?, || {
            format!("[{a}] vs [{b}]: {ab:?} disagrees with the Artin action")
        });

        let cab = engine.compare(&c.concat(&a)?, &c.concat(&b)?)?;
        out.check(cab == ab, || {
            format!("left multiplication by [{c}] turned {ab:?} into {cab:?}")
        });

        let bc = engine.compare(&b, &c)?;
        let ac = engine.compare(&a, &c)?;
        if ab != Ordering::Greater && bc != Ordering::Greater {
            out.check(ac != Ordering::Greater, || {
                format!("[{a}] <= [{b}] <= [{c}] but a > c")
            });
        }
        if ab != Ordering::Less && bc != Ordering::Less {
            out.check(ac != Ordering::Less, || {
                format!("[{a}] >= [{b}] >= [{c}] but a < c")
            });
        }

        let (sa, sb) = (engine.sign(&a)?, engine.sign(&b)?);
        if sa == sb && sa != DehornoySign::Zero {
            let sab = engine.sign(&a.concat(&b)?)?;
            out.check(sab == sa, || {
                format!("[{a}] and [{b}] are {sa:?} but their product is {sab:?}")
            });
        }

        if n >= 2 {
            let twist = full_twist(n)?;
            let fa = engine.floor(&a)?;
            let fb = engine.floor(&b)?;
            let low = twist.power(fa);
            let high = twist.power(fa + 1);
            out.check(engine.compare(&low, &a)? != Ordering::Greater, || {
                format!("floor {fa} of [{a}] too large")
            });
            out.check(engine.compare(&a, &high)? == Ordering::Less, || {
                format!("floor {fa} of [{a}] too small")
            });
            let fab = engine.floor(&a.concat(&b)?)?;
            out.check(fab >= fa + fb, || {
                format!("floor(ab) = {fab} < {fa} + {fb} for [{a}], [{b}]")
            });
        }
        Ok(out)
    }
}
