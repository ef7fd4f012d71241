//! Acceptance run: one PASS/FAIL line per criterion. All comparisons are
//! exact rationals, so every tolerance below is zero.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use braidwrench_core::braid::BraidWord;
use braidwrench_core::error::BraidError;
use braidwrench_core::family::{beta_nm, elrifai_k, elrifai_l, full_twist};
use braidwrench_core::fdtc::{Fdtc, FdtcSolver};
use braidwrench_core::index::{index_certificate, Verdict};
use braidwrench_core::rational::{display, int, ratio, Rational};
use braidwrench_core::suites::{self, PropertySuite, SuiteContext, SuiteReport};
use braidwrench_core::upsilon::{homogenized_upsilon, torus_upsilon};

const SEED: u64 = 0x5eed_b4a1d;
const EXAMPLE_TIME_LIMIT: Duration = Duration::from_secs(60);
const ORACLE_PAIRS: usize = 1000;
const AXIOM_TRIPLES_PER_N: usize = 500;
const FDTC_PAIRS_PER_N: usize = 300;
const HU_CASES: usize = 200;
const MARKOV_TRACES: usize = 200;

struct Criterion {
    passed: bool,
    detail: String,
}

#[derive(Default)]
struct Run {
    budget_errors: Vec<String>,
    slowest: Duration,
    examples: Vec<(String, BraidWord)>,
}

impl Run {
    fn note_error(&mut self, what: &str, e: &BraidError) {
        if matches!(
            e,
            BraidError::BudgetExceeded { .. } | BraidError::OracleBudgetExceeded { .. }
        ) {
            self.budget_errors.push(format!("{what}: {e}"));
        }
    }

    fn timed_fdtc(&mut self, label: &str, b: &BraidWord) -> Result<Fdtc, String> {
        let start = Instant::now();
        let out = FdtcSolver::default().compute(b);
        self.slowest = self.slowest.max(start.elapsed());
        self.examples.push((label.to_string(), b.clone()));
        out.map_err(|e| {
            self.note_error(label, &e);
            format!("{label}: {e}")
        })
    }

    fn note_suite(&mut self, report: &SuiteReport) {
        for (case, e) in &report.errors {
            self.note_error(&format!("{} case {case}", report.suite), e);
        }
    }
}

fn expect_fdtc(
    run: &mut Run,
    failures: &mut Vec<String>,
    label: String,
    b: BraidWord,
    want: Rational,
) {
    match run.timed_fdtc(&label, &b) {
        Ok(got) if got.value == want => {}
        Ok(got) => failures.push(format!("{label} = {} (want {})", got, display(&want))),
        Err(e) => failures.push(e),
    }
}

fn verdict(checked: usize, failures: Vec<String>) -> Criterion {
    let passed = failures.is_empty();
    let detail = if passed {
        format!("{checked} checks")
    } else {
        format!(
            "{} of {checked} failed: {}",
            failures.len(),
            failures.join("; ")
        )
    };
    Criterion { passed, detail }
}

fn criterion_1(run: &mut Run) -> Criterion {
    let mut failures = Vec::new();
    let mut checked = 0;
    for n in 2..=5 {
        for m in 2..=5 {
            checked += 1;
            let b = beta_nm(n, m).expect("beta_nm");
            expect_fdtc(
                run,
                &mut failures,
                format!("beta_nm({n},{m})"),
                b,
                int(m as i64 - 1),
            );
        }
    }
    for k in 1..=3 {
        checked += 2;
        expect_fdtc(
            run,
            &mut failures,
            format!("elrifai_K({k})"),
            elrifai_k(k).unwrap(),
            int(2 * k),
        );
        expect_fdtc(
            run,
            &mut failures,
            format!("elrifai_L({k})"),
            elrifai_l(k).unwrap(),
            int(2 * k + 1),
        );
    }
    checked += 2;
    let w4 = BraidWord::new(4, vec![1, 2, 3, 3]).unwrap();
    expect_fdtc(run, &mut failures, "s1 s2 s3 s3".into(), w4, ratio(1, 3));
    let w5 = BraidWord::new(5, vec![1, 2, 3, 4, 1, 2]).unwrap();
    expect_fdtc(
        run,
        &mut failures,
        "s1 s2 s3 s4 s1 s2".into(),
        w5,
        ratio(1, 3),
    );
    verdict(checked, failures)
}

fn criterion_2(run: &mut Run) -> Criterion {
    let mut failures = Vec::new();
    let mut checked = 0;
    for n in 2..=5 {
        let twist = full_twist(n).unwrap();
        for d in -3..=3 {
            checked += 1;
            expect_fdtc(
                run,
                &mut failures,
                format!("full_twist({n})^{d}"),
                twist.power(d),
                int(d),
            );
        }
        checked += 1;
        let hu = homogenized_upsilon(&twist).map(|r| r.function);
        match (hu, torus_upsilon(n, 1)) {
            (Ok(f), Ok(g)) if f == g => {}
            (Ok(_), Ok(_)) => failures.push(format!(
                "HU(full_twist({n})) differs from torus_upsilon({n},1)"
            )),
            (Err(e), _) | (_, Err(e)) => failures.push(format!("HU(full_twist({n})): {e}")),
        }
    }
    verdict(checked, failures)
}

fn suite_criterion(
    run: &mut Run,
    runs: &[(&dyn PropertySuite, Option<usize>, usize)],
) -> Criterion {
    let mut failures = Vec::new();
    let mut checked = 0;
    let mut cases = 0;
    for (i, &(suite, strands, count)) in runs.iter().enumerate() {
        let ctx = SuiteContext {
            strands,
            ..SuiteContext::default()
        };
        let report = suites::run_suite(suite, &ctx, SEED + i as u64, count);
        run.note_suite(&report);
        checked += report.checks as usize;
        cases += report.cases;
        let scope = match strands {
            Some(n) => format!("{} n={n}", report.suite),
            None => report.suite.to_string(),
        };
        failures.extend(
            report
                .violations
                .iter()
                .take(3)
                .map(|v| format!("{scope} case {}: {}", v.case, v.message)),
        );
        failures.extend(
            report
                .errors
                .iter()
                .take(3)
                .map(|(c, e)| format!("{scope} case {c}: {e}")),
        );
    }
    let mut c = verdict(checked, failures);
    c.detail = format!("{cases} cases, {}", c.detail);
    c
}

fn criterion_6(run: &mut Run) -> Criterion {
    let mut failures = Vec::new();
    let mut checked = 0;
    for (label, b) in run.examples.clone() {
        checked += 1;
        match homogenized_upsilon(&b) {
            Ok(hu) => {
                let n = int(b.strands() as i64);
                let slopes = hu.function.slopes();
                let jump_ok = hu.slope_change == &n * &hu.omega.value
                    && (b.strands() < 3 || &slopes[1] - &slopes[0] == hu.slope_change);
                if !jump_ok {
                    failures.push(format!(
                        "{label}: slope change {}",
                        display(&hu.slope_change)
                    ));
                }
            }
            Err(e) => {
                run.note_error(&label, &e);
                failures.push(format!("{label}: {e}"));
            }
        }
    }
    let suite = suite_criterion(run, &[(&suites::HuStructure, None, HU_CASES)]);
    if !suite.passed {
        failures.push(suite.detail.clone());
    }
    let passed = failures.is_empty();
    let detail = format!(
        "{checked} examples, {} failures; random braids: {}",
        failures.len(),
        suite.detail
    );
    Criterion { passed, detail }
}

fn criterion_8(run: &mut Run) -> Criterion {
    let mut failures = Vec::new();
    let mut checked = 0;
    for n in 3..=5 {
        checked += 1;
        match index_certificate(&beta_nm(n, n - 1).unwrap()) {
            Ok(c) if c.verdict == Verdict::NoConclusion => {}
            Ok(c) => failures.push(format!("beta_nm({n},{}) certified via {:?}", n - 1, c.rule)),
            Err(e) => failures.push(format!("beta_nm({n},{}): {e}", n - 1)),
        }
    }
    for n in 2..=5 {
        for m in (n + 1)..=7 {
            checked += 1;
            match index_certificate(&beta_nm(n, m).unwrap()) {
                Ok(c) if c.verdict == Verdict::ExactlyN => {}
                Ok(c) => failures.push(format!(
                    "beta_nm({n},{m}): omega {} gave no certificate",
                    c.omega
                )),
                Err(e) => failures.push(format!("beta_nm({n},{m}): {e}")),
            }
        }
    }
    let fuzz = suite_criterion(run, &[(&suites::MarkovInvariance, None, MARKOV_TRACES)]);
    if !fuzz.passed {
        failures.push(fuzz.detail.clone());
    }
    let mut c = verdict(checked, failures);
    c.detail = format!("{checked} certificates; traces: {}", fuzz.detail);
    c
}

fn main() -> ExitCode {
    let mut run = Run::default();
    let mut results: Vec<(u32, &str, Criterion)> = Vec::new();

    results.push((
        1,
        "exact FDTC of the worked examples",
        criterion_1(&mut run),
    ));
    results.push((2, "full-twist calibration", criterion_2(&mut run)));
    let c3 = suite_criterion(&mut run, &[(&suites::OrderOracle, None, ORACLE_PAIRS)]);
    results.push((3, "order engine agrees with the Artin action", c3));
    let c4 = suite_criterion(
        &mut run,
        &[
            (&suites::OrderAxioms, Some(2), AXIOM_TRIPLES_PER_N),
            (&suites::OrderAxioms, Some(3), AXIOM_TRIPLES_PER_N),
            (&suites::OrderAxioms, Some(4), AXIOM_TRIPLES_PER_N),
        ],
    );
    results.push((4, "order axioms", c4));
    let c5 = suite_criterion(
        &mut run,
        &[
            (&suites::FdtcProperties, Some(3), FDTC_PAIRS_PER_N),
            (&suites::FdtcProperties, Some(4), FDTC_PAIRS_PER_N),
        ],
    );
    results.push((5, "FDTC quasimorphism properties", c5));
    results.push((
        6,
        "HU slope change and floor sandwich",
        criterion_6(&mut run),
    ));
    let c7 = suite_criterion(&mut run, &[(&suites::HuBounds, None, HU_CASES)]);
    results.push((7, "HU perturbation, product and split bounds", c7));
    results.push((
        8,
        "Markov contrapositive and index certificates",
        criterion_8(&mut run),
    ));
    // The Markov suite checks the HU drift bound on the same traces.
    let c9 = suite_criterion(
        &mut run,
        &[(&suites::MarkovInvariance, None, MARKOV_TRACES)],
    );
    results.push((9, "HU drift under Markov moves", c9));
    let c10 = Criterion {
        passed: run.budget_errors.is_empty() && run.slowest <= EXAMPLE_TIME_LIMIT,
        detail: format!(
            "slowest example {:.3?}, {} budget errors{}",
            run.slowest,
            run.budget_errors.len(),
            run.budget_errors
                .first()
                .map(|e| format!(": {e}"))
                .unwrap_or_default()
        ),
    };
    results.push((10, "default step budget suffices", c10));

    let mut all = true;
    for (id, title, c) in &results {
        all &= c.passed;
        let tag = if c.passed { "PASS" } else { "FAIL" };
        println!("criterion {id:>2} {tag}  {title} ({})", c.detail);
    }
    let passed = results.iter().filter(|r| r.2.passed).count();
    println!("acceptance: {passed}/{} criteria passed", results.len());
    if all {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
