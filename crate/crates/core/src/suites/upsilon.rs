use num_traits::{Signed, Zero};
use rand::Rng;
use rand_chacha::ChaCha8Rng;

use super::{draw_word, half, sample_ts, CaseOutcome, PropertySuite, SuiteContext};
use crate::braid::BraidWord;
use crate::error::Result;
use crate::family::full_twist;
use crate::fdtc::FdtcSolver;
use crate::random::random_word;
use crate::rational::{display, int, ratio, Rational};
use crate::upsilon::{homogenized_upsilon_with, hu_domain_end, PLFunction};

fn hu(solver: &FdtcSolver, b: &BraidWord) -> Result<PLFunction> {
    Ok(homogenized_upsilon_with(solver, b)?.function)
}

/// Shape of HU: the slope jump is `n * omega`, the first piece is
/// `-t wr / 2`, the second piece is sandwiched by the Dehornoy floor, and
/// every slope is at most half the word length.
pub struct HuStructure;

impl PropertySuite for HuStructure {
    fn name(&self) -> &'static str {
        "hu-structure"
    }

    fn description(&self) -> &'static str {
        "slope change n*omega, first piece -t*wr/2, floor sandwich on the second piece"
    }

    fn run_case(&self, ctx: &SuiteContext, rng: &mut ChaCha8Rng) -> Result<CaseOutcome> {
        let solver = &ctx.solver;
        let n = ctx.strands_or(rng, 2, 5);
        let b = draw_word(rng, n, 0..=12);
        let res = homogenized_upsilon_with(solver, &b)?;
        let f = &res.function;
        let nn = int(n as i64);
        let end = hu_domain_end(n);
        let wr = int(res.writhe);
        let mut out = CaseOutcome::default();

        out.check(res.slope_change == &nn * &res.omega.value, || {
            format!(
                "[{b}]: slope change {} is not n * omega",
                display(&res.slope_change)
            )
        });
        out.check(f.domain_end() == &end, || {
            format!("[{b}]: domain ends at {}", display(f.domain_end()))
        });
        let slopes = f.slopes();
        if n >= 3 {
            out.check(
                slopes.len() == 2 && &slopes[1] - &slopes[0] == res.slope_change,
                || {
                    format!(
                        "[{b}]: slopes {:?} do not jump by the slope change",
                        slopes.iter().map(display).collect::<Vec<_>>()
                    )
                },
            );
        }
        let lipschitz = int(b.len() as i64) * half();
        out.check(slopes.iter().all(|s| s.abs() <= lipschitz), || {
            format!("[{b}]: a slope exceeds length/2 = {}", display(&lipschitz))
        });

        let knee = if n >= 3 {
            ratio(2, n as i64)
        } else {
            end.clone()
        };
        for t in sample_ts(rng, &Rational::zero(), &knee, 3) {
            let v = f.eval(&t)?;
            out.check(v == -(&t * &wr) * half(), || {
                format!(
                    "[{b}]: HU({}) = {} off the first piece",
                    display(&t),
                    display(&v)
                )
            });
        }

        // Between 2/n and the end, HU(t) = -t wr/2 + (nt - 2) omega, and
        // floor <= omega <= floor + 1 brackets it.
        if n >= 3 {
            let floor = int(solver.engine().floor(&b)?);
            for t in sample_ts(rng, &knee, &end, 10) {
                let v = f.eval(&t)?;
                let base = -(&t * &wr) * half();
                let weight = &nn * &t - int(2);
                let lo = &base + &weight * &floor;
                let hi = &base + &weight * (&floor + int(1));
                out.check(lo <= v && v <= hi, || {
                    format!(
                        "[{b}]: HU({}) = {} outside [{}, {}]",
                        display(&t),
                        display(&v),
                        display(&lo),
                        display(&hi)
                    )
                });
            }
        }
        Ok(out)
    }
}

/// Crossing changes move HU by at most `t/2` per letter, products are
/// additive up to `t(n-1)`, exactly additive on commuting pairs, and split
/// braids add their parts.
pub struct HuBounds;

impl PropertySuite for HuBounds {
    fn name(&self) -> &'static str {
        "hu-bounds"
    }

    fn description(&self) -> &'static str {
        "one-letter Lipschitz bound, product defect t(n-1), additivity on powers and split unions"
    }

    fn run_case(&self, ctx: &SuiteContext, rng: &mut ChaCha8Rng) -> Result<CaseOutcome> {
        let solver = &ctx.solver;
        let n = ctx.strands_or(rng, 2, 5);
        let end = hu_domain_end(n);
        let nn = n as i64;
        let mut out = CaseOutcome::default();
        let ts = sample_ts(rng, &Rational::zero(), &end, 5);

        // one extra letter
        let b = draw_word(rng, n, 0..=10);
        let g = rng.gen_range(1..nn as i32) * if rng.gen_bool(0.5) { 1 } else { -1 };
        let b2 = b.concat(&BraidWord::new(n, vec![g])?)?;
        let (fb, fb2) = (hu(solver, &b)?, hu(solver, &b2)?);
        for t in &ts {
            let d = (fb2.eval(t)? - fb.eval(t)?).abs();
            out.check(d <= t * half(), || {
                format!(
                    "[{b}] and [{b2}] differ by {} at t = {}",
                    display(&d),
                    display(t)
                )
            });
        }

        // products
        let a = draw_word(rng, n, 0..=10);
        let fa = hu(solver, &a)?;
        let fab = hu(solver, &a.concat(&b)?)?;
        for t in &ts {
            let d = (fab.eval(t)? - fa.eval(t)? - fb.eval(t)?).abs();
            let bound = t * int(nn - 1);
            out.check(d <= bound, || {
                format!(
                    "[{a}] * [{b}]: defect {} above {} at t = {}",
                    display(&d),
                    display(&bound),
                    display(t)
                )
            });
        }
        let one = int(1);
        let j = rng.gen_range(-2..=3);
        let pj = b.power(j);
        let sum = fb.combine(&hu(solver, &pj)?, &one, &one)?;
        out.check(hu(solver, &pj.concat(&b)?)?.same_function(&sum), || {
            format!("HU not additive on [{b}]^{j} * [{b}]")
        });
        if n >= 2 {
            let twist = full_twist(n)?;
            let sum = fb.combine(&hu(solver, &twist)?, &one, &one)?;
            out.check(hu(solver, &twist.concat(&b)?)?.same_function(&sum), || {
                format!("HU not additive on D^2 * [{b}]")
            });
        }

        // split unions
        let count = rng.gen_range(2..=3);
        let parts: Vec<BraidWord> = (0..count)
            .map(|_| {
                let k = rng.gen_range(1..=3);
                let len = rng.gen_range(0..=6);
                random_word(rng, k, len)
            })
            .collect();
        let union = BraidWord::disjoint_union(&parts)?;
        let fu = hu(solver, &union)?;
        let mut diff = fu.clone();
        for p in &parts {
            diff = diff.combine(&hu(solver, p)?, &one, &-&one)?;
        }
        let names: Vec<String> = parts.iter().map(|p| format!("[{p}]")).collect();
        out.check(diff.is_zero(), || {
            format!("HU of the union of {} is not the sum", names.join(" "))
        });
        let omega = solver.compute(&union)?.value;
        out.check(omega.is_zero(), || {
            format!(
                "split union of {} has omega {}",
                names.join(" "),
                display(&omega)
            )
        });
        Ok(out)
    }
}
