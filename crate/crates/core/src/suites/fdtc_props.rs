use num_traits::Signed;
use rand_chacha::ChaCha8Rng;

use super::{draw_word, CaseOutcome, PropertySuite, SuiteContext};
use crate::dehornoy::DehornoySign;
use crate::error::Result;
use crate::fdtc::occurrence_bounds;
use crate::rational::{display, int, Rational};

/// Quasimorphism, homogeneity, full-twist shift, conjugation invariance,
/// denominators, the floor sandwich and the occurrence bounds.
pub struct FdtcProperties;

impl PropertySuite for FdtcProperties {
    fn name(&self) -> &'static str {
        "fdtc-props"
    }

    fn description(&self) -> &'static str {
        "quasimorphism, homogeneity, full-twist shift, conjugation, denominators, floor sandwich"
    }

    fn run_case(&self, ctx: &SuiteContext, rng: &mut ChaCha8Rng) -> Result<CaseOutcome> {
        let solver = &ctx.solver;
        let n = ctx.strands_or(rng, 3, 4);
        let a = draw_word(rng, n, 1..=8);
        let b = draw_word(rng, n, 1..=8);
        let mut out = CaseOutcome::default();

        for check in solver.check_properties(&a, &b)?.checks {
            out.check(check.passed, || {
                format!("{} on [{a}], [{b}]: {}", check.name, check.witness)
            });
        }

        let wa = solver.compute(&a)?.value;
        for k in -3i64..=3 {
            let wk = solver.compute(&a.power(k))?.value;
            out.check(wk == int(k) * &wa, || {
                format!(
                    "omega([{a}]^{k}) = {} but omega = {}",
                    display(&wk),
                    display(&wa)
                )
            });
        }

        let floor = int(solver.engine().floor(&a)?);
        out.check(floor <= wa && wa <= &floor + int(1), || {
            format!(
                "omega([{a}]) = {} outside [floor, floor + 1] with floor {floor}",
                display(&wa)
            )
        });
        let bounds = occurrence_bounds(&a);
        out.check(bounds.contains(&wa), || {
            format!(
                "omega([{a}]) = {} outside [{}, {}]",
                display(&wa),
                bounds.lo,
                bounds.hi
            )
        });

        match solver.engine().sign(&a)? {
            DehornoySign::Positive => out.check(!wa.is_negative(), || {
                format!("[{a}] > 1 with negative omega")
            }),
            DehornoySign::Negative => out.check(!wa.is_positive(), || {
                format!("[{a}] < 1 with positive omega")
            }),
            DehornoySign::Zero => out.check(wa == Rational::from_integer(0.into()), || {
                format!("trivial [{a}] with omega {}", display(&wa))
            }),
        }
        Ok(out)
    }
}
