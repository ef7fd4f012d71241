//! Named randomized property suites. Each suite checks one family of
//! invariants on independently seeded cases; a run is reproducible from its
//! `(seed, count)` and cases fan out over the rayon pool.

mod fdtc_props;
mod markov;
mod order;
mod upsilon;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::braid::BraidWord;
use crate::error::{BraidError, Result};
use crate::fdtc::FdtcSolver;
use crate::random::{random_rational, random_word};
use crate::rational::{ratio, Rational};

pub use fdtc_props::FdtcProperties;
pub use markov::MarkovInvariance;
pub use order::{OrderAxioms, OrderOracle};
pub use upsilon::{HuBounds, HuStructure};

/// Shared knobs for a suite run.
#[derive(Debug, Clone, Copy, Default)]
pub struct SuiteContext {
    pub solver: FdtcSolver,
    /// Fixes the strand count instead of letting each case draw one.
    pub strands: Option<usize>,
}

impl SuiteContext {
    pub fn strands_or<R: Rng + ?Sized>(&self, rng: &mut R, lo: usize, hi: usize) -> usize {
        self.strands.unwrap_or_else(|| rng.gen_range(lo..=hi))
    }
}

/// Checks performed and violations found in one case.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct CaseOutcome {
    pub checks: u64,
    pub violations: Vec<String>,
}

impl CaseOutcome {
    pub fn check(&mut self, ok: bool, describe: impl FnOnce() -> String) {
        self.checks += 1;
        if !ok {
            self.violations.push(describe());
        }
    }
}

pub trait PropertySuite: Send + Sync {
    fn name(&self) -> &'static str;
    fn description(&self) -> &'static str;
    fn run_case(&self, ctx: &SuiteContext, rng: &mut ChaCha8Rng) -> Result<CaseOutcome>;
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Violation {
    pub case: usize,
    pub message: String,
}

#[derive(Debug, Clone)]
pub struct SuiteReport {
    pub suite: &'static str,
    pub seed: u64,
    pub cases: usize,
    pub checks: u64,
    pub violations: Vec<Violation>,
    pub errors: Vec<(usize, BraidError)>,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty() && self.errors.is_empty()
    }

    pub fn budget_exceeded(&self) -> bool {
        self.errors.iter().any(|(_, e)| {
            matches!(
                e,
                BraidError::BudgetExceeded { .. } | BraidError::OracleBudgetExceeded { .. }
            )
        })
    }
}

pub fn case_rng(seed: u64, case: usize) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(case as u64);
    rng
}

pub fn run_suite(
    suite: &dyn PropertySuite,
    ctx: &SuiteContext,
    seed: u64,
    count: usize,
) -> SuiteReport {
    let outcomes: Vec<_> = (0..count)
        .into_par_iter()
        .map(|case| (case, suite.run_case(ctx, &mut case_rng(seed, case))))
        .collect();
    let mut report = SuiteReport {
        suite: suite.name(),
        seed,
        cases: count,
        checks: 0,
        violations: Vec::new(),
        errors: Vec::new(),
    };
    for (case, outcome) in outcomes {
        match outcome {
            Ok(o) => {
                report.checks += o.checks;
                report.violations.extend(
                    o.violations
                        .into_iter()
                        .map(|message| Violation { case, message }),
                );
            }
            Err(e) => report.errors.push((case, e)),
        }
    }
    report
}

pub fn registry() -> Vec<Box<dyn PropertySuite>> {
    vec![
        Box::new(OrderOracle),
        Box::new(OrderAxioms),
        Box::new(FdtcProperties),
        Box::new(HuStructure),
        Box::new(HuBounds),
        Box::new(MarkovInvariance),
    ]
}

pub fn lookup(name: &str) -> Result<Box<dyn PropertySuite>> {
    registry()
        .into_iter()
        .find(|s| s.name() == name)
        .ok_or_else(|| {
            let known: Vec<_> = registry().iter().map(|s| s.name()).collect();
            BraidError::BadParams(format!(
                "unknown suite {name:?}; known: {}",
                known.join(", ")
            ))
        })
}

/// Random word whose length is drawn from `lens`.
pub(crate) fn draw_word<R: Rng + ?Sized>(
    rng: &mut R,
    n: usize,
    lens: std::ops::RangeInclusive<usize>,
) -> BraidWord {
    let len = rng.gen_range(lens);
    random_word(rng, n, len)
}

/// Random sample points in `[lo, hi]` on a fine rational grid.
pub(crate) fn sample_ts<R: Rng + ?Sized>(
    rng: &mut R,
    lo: &Rational,
    hi: &Rational,
    count: usize,
) -> Vec<Rational> {
    (0..count)
        .map(|_| random_rational(rng, lo, hi, 420))
        .collect()
}

pub(crate) fn half() -> Rational {
    ratio(1, 2)
}
