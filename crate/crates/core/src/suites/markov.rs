use num_traits::Signed;
use rand::Rng;
use rand_chacha::ChaCha8Rng;

use super::{draw_word, sample_ts, CaseOutcome, PropertySuite, SuiteContext};
use crate::error::Result;
use crate::index::{index_certificate_with, Rule};
use crate::markov::markov_perturb;
use crate::rational::{display, int, Rational};
use crate::upsilon::{homogenized_upsilon_with, hu_domain_end};

/// Random Markov traces with at least one stabilization: the coefficient
/// stays within `N - 1`, the general index threshold never fires, and HU
/// moves by at most `t(n + N - 2)/2`.
pub struct MarkovInvariance;

impl PropertySuite for MarkovInvariance {
    fn name(&self) -> &'static str {
        "markov"
    }

    fn description(&self) -> &'static str {
        "stabilized braids: |omega| <= N-1, no false index certificate, HU drift bound"
    }

    fn run_case(&self, ctx: &SuiteContext, rng: &mut ChaCha8Rng) -> Result<CaseOutcome> {
        let solver = &ctx.solver;
        let n = ctx.strands_or(rng, 2, 3);
        let big = (n + rng.gen_range(1..=2)).min(5).max(n + 1);
        let base = draw_word(rng, n, 1..=8);
        let trace = markov_perturb(&base, big, rng.gen())?;
        let result = &trace.result;
        let mut out = CaseOutcome::default();

        out.check(
            result.strands() == big && trace.stabilizations() >= 1,
            || format!("trace from [{base}] ended on {} strands", result.strands()),
        );
        out.check(
            result.writhe() == base.writhe() + trace.stabilization_writhe(),
            || format!("writhe of [{result}] does not track the stabilizations of [{base}]"),
        );
        out.check(
            result.closure_components() == base.closure_components(),
            || format!("[{base}] and [{result}] close up with different component counts"),
        );

        let cert = index_certificate_with(solver, result)?;
        let omega = &cert.omega.value;
        out.check(omega.abs() <= int(big as i64 - 1), || {
            format!(
                "[{result}] from [{base}]: |omega| = {} above N - 1",
                display(omega)
            )
        });
        out.check(cert.rule != Some(Rule::GeneralThreshold), || {
            format!("[{result}] certified as index {big} but it destabilizes to [{base}]")
        });

        let f = homogenized_upsilon_with(solver, &base)?.function;
        let g = homogenized_upsilon_with(solver, result)?.function;
        let end = hu_domain_end(big);
        let spread = int((n + big) as i64 - 2);
        for t in sample_ts(rng, &Rational::from_integer(0.into()), &end, 5) {
            let d = (f.eval(&t)? - g.eval(&t)?).abs();
            let bound = &t * &spread / int(2);
            out.check(d <= bound, || {
                format!(
                    "[{base}] -> [{result}]: HU drifts {} above {} at t = {}",
                    display(&d),
                    display(&bound),
                    display(&t)
                )
            });
        }
        Ok(out)
    }
}
