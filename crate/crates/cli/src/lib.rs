//! `braidwrench` command-line front end.

pub mod output;
pub mod parse;

use std::cmp::Ordering;
use std::ffi::OsString;
use std::io::Write;

use braidwrench_core::braid::BraidWord;
use braidwrench_core::dehornoy::{OrderEngine, DEFAULT_STEP_BUDGET};
use braidwrench_core::engine;
use braidwrench_core::error::BraidError;
use braidwrench_core::family;
use braidwrench_core::fdtc::{occurrence_bounds, FdtcSolver};
use braidwrench_core::index::{full_twist_domination_with, index_certificate_with, Verdict};
use braidwrench_core::rational::display;
use braidwrench_core::suites::{self, SuiteContext};
use braidwrench_core::upsilon::{homogenized_upsilon_with, torus_upsilon, PLFunction};
use clap::{Args, Parser, Subcommand};
use serde_json::{json, Value};
use thiserror::Error;

use crate::parse::{parse_braid, InputError};

pub const BUDGET_ENV: &str = "BRAIDWRENCH_BUDGET";

#[derive(Debug, Parser)]
#[command(
    name = "braidwrench",
    version,
    about = "Dehornoy order, fractional Dehn twist coefficients and homogenized Upsilon for braids"
)]
pub struct Cli {
    /// Machine-readable output; rationals are {"num", "den"} pairs.
    #[arg(long, global = true)]
    pub json: bool,
    /// Number of strands (default: 1 + largest generator index).
    #[arg(short = 'n', long = "strands", global = true)]
    pub strands: Option<usize>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Args)]
pub struct Input {
    /// Braid word such as "s1 S2 (s1 s2)^3"; `S` is the inverse generator.
    pub word: Option<String>,
    /// Build the braid from a named family instead, e.g. `--family beta_nm 4 3`.
    #[arg(long, num_args = 1.., value_name = "NAME PARAMS", allow_negative_numbers = true, conflicts_with = "word")]
    pub family: Option<Vec<String>>,
}

#[derive(Debug, Clone, Args)]
pub struct Plot {
    /// Emit CSV rows "t_num,t_den,v_num,v_den" instead of a summary.
    #[arg(long)]
    pub csv: bool,
    /// Extra uniformly spaced CSV rows (in addition to the breakpoints).
    #[arg(long, default_value_t = 0)]
    pub samples: usize,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Handle-reduce a word.
    Reduce(Input),
    /// Dehornoy sign: positive, zero or negative.
    Sign(Input),
    /// Compare two braids in the Dehornoy order.
    Cmp { a: String, b: String },
    /// Decide whether two words represent the same braid.
    Eq {
        a: String,
        b: String,
        /// Word-problem engine: handle or artin.
        #[arg(long, default_value = "handle")]
        engine: String,
    },
    /// Dehornoy floor.
    Floor(Input),
    /// Fractional Dehn twist coefficient.
    Fdtc(Input),
    /// Homogenized Upsilon.
    Upsilon {
        #[command(flatten)]
        input: Input,
        #[command(flatten)]
        plot: Plot,
    },
    /// Upsilon of the torus knot T(n, nk+1).
    TorusUpsilon {
        #[arg(value_name = "N")]
        torus_n: usize,
        k: i64,
        #[command(flatten)]
        plot: Plot,
    },
    /// Braid-index certificate.
    Index(Input),
    /// Writhe (exponent sum).
    Wr(Input),
    /// Strand permutation, 1-based.
    Perm(Input),
    /// Number of components of the closure.
    Components(Input),
    /// Print a named family member, or list the families.
    Family {
        name: Option<String>,
        #[arg(allow_negative_numbers = true)]
        params: Vec<i64>,
        #[arg(long)]
        list: bool,
    },
    /// Run a randomized property suite.
    Fuzz {
        #[arg(long, required_unless_present = "list")]
        suite: Option<String>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 100)]
        count: usize,
        #[arg(long)]
        list: bool,
    },
}

#[derive(Debug, Error)]
pub enum CliError {
    #[error(transparent)]
    Input(#[from] InputError),
    #[error("{0}")]
    Violation(String),
    #[error("{0}")]
    Usage(String),
}

impl From<BraidError> for CliError {
    fn from(e: BraidError) -> Self {
        CliError::Input(InputError::Braid(e))
    }
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Input(InputError::Braid(
                BraidError::BudgetExceeded { .. } | BraidError::OracleBudgetExceeded { .. },
            )) => 2,
            _ => 1,
        }
    }

    fn to_json(&self) -> Value {
        let (kind, position) = match self {
            CliError::Input(InputError::Parse(p)) => ("parse", Some(p.position)),
            CliError::Input(InputError::Braid(e)) => (braid_error_kind(e), None),
            CliError::Violation(_) => ("violation", None),
            CliError::Usage(_) => ("usage", None),
        };
        let mut body = json!({ "kind": kind, "message": self.to_string() });
        if let Some(p) = position {
            body["position"] = json!(p);
        }
        json!({ "error": body })
    }
}

fn braid_error_kind(e: &BraidError) -> &'static str {
    match e {
        BraidError::StrandMismatch { .. } => "strand-mismatch",
        BraidError::BadParams(_) => "bad-params",
        BraidError::BudgetExceeded { .. } => "budget-exceeded",
        BraidError::OracleBudgetExceeded { .. } => "oracle-budget-exceeded",
        BraidError::DomainError { .. } => "domain",
        BraidError::Inconsistent { .. } => "inconsistent",
    }
}

/// Step budget from `BRAIDWRENCH_BUDGET`, else the library default.
pub fn budget_from(var: Option<&str>) -> Result<u64, CliError> {
    match var {
        None => Ok(DEFAULT_STEP_BUDGET),
        Some(s) => s.trim().parse().map_err(|_| {
            CliError::Usage(format!(
                "{BUDGET_ENV} must be a non-negative integer, got {s:?}"
            ))
        }),
    }
}

/// Result of one command: a JSON document and its plain-text rendering.
struct Output {
    json: Value,
    text: String,
}

impl Output {
    fn new(json: Value, text: impl Into<String>) -> Self {
        Self {
            json,
            text: text.into(),
        }
    }
}

struct Session {
    strands: Option<usize>,
    solver: FdtcSolver,
}

impl Session {
    fn engine(&self) -> &OrderEngine {
        self.solver.engine()
    }

    fn braid(&self, input: &Input) -> Result<BraidWord, CliError> {
        match (&input.family, &input.word) {
            (Some(spec), _) => {
                let (name, params) = spec.split_first().expect("clap requires a family name");
                let args = params
                    .iter()
                    .map(|p| {
                        p.parse::<i64>().map_err(|_| {
                            CliError::Usage(format!("family parameter {p:?} is not an integer"))
                        })
                    })
                    .collect::<Result<Vec<_>, _>>()?;
                let b = family::build(name, &args)?;
                Ok(match self.strands {
                    Some(n) => b.widen(n)?,
                    None => b,
                })
            }
            (None, Some(text)) => Ok(parse_braid(text, self.strands)?.word),
            (None, None) => Err(CliError::Usage("expected a braid word or --family".into())),
        }
    }

    /// Two words share the strand count of the larger unless `-n` is given.
    fn pair(&self, a: &str, b: &str) -> Result<(BraidWord, BraidWord), CliError> {
        let pa = parse_braid(a, self.strands)?;
        let pb = parse_braid(b, self.strands)?;
        let n = pa.strands.max(pb.strands);
        Ok((pa.word.widen(n)?, pb.word.widen(n)?))
    }
}

fn described(b: &BraidWord) -> Value {
    json!({ "strands": b.strands(), "word": b.to_string() })
}

fn with(mut base: Value, extra: Value) -> Value {
    if let (Value::Object(a), Value::Object(b)) = (&mut base, extra) {
        a.extend(b);
    }
    base
}

fn plot_output(f: &PLFunction, plot: &Plot, json: Value, text: String) -> Output {
    if plot.csv {
        Output::new(json, output::pl_csv(f, plot.samples).trim_end().to_string())
    } else {
        Output::new(json, text)
    }
}

fn pl_text(f: &PLFunction) -> String {
    let join = |rs: &[braidwrench_core::rational::Rational]| {
        rs.iter().map(display).collect::<Vec<_>>().join(" ")
    };
    format!(
        "breakpoints {}\nvalues {}\nslopes {}",
        join(f.breakpoints()),
        join(f.values()),
        join(&f.slopes())
    )
}

fn ordering_name(o: Ordering) -> &'static str {
    match o {
        Ordering::Less => "less",
        Ordering::Equal => "equal",
        Ordering::Greater => "greater",
    }
}

fn execute(cmd: &Command, s: &Session) -> Result<Output, Failure> {
    Ok(match cmd {
        Command::Reduce(input) => {
            let b = s.braid(input)?;
            let r = s.engine().handle_reduce(&b)?;
            Output::new(
                with(
                    described(&b),
                    json!({
                        "reduced": r.reduced.to_string(),
                        "letters": r.reduced.letters(),
                        "steps": r.steps,
                        "sign": r.sign.as_str(),
                    }),
                ),
                r.reduced.to_string(),
            )
        }
        Command::Sign(input) => {
            let b = s.braid(input)?;
            let sign = s.engine().sign(&b)?.as_str();
            Output::new(with(described(&b), json!({ "sign": sign })), sign)
        }
        Command::Cmp { a, b } => {
            let (a, b) = s.pair(a, b)?;
            let o = ordering_name(s.engine().compare(&a, &b)?);
            Output::new(
                json!({ "strands": a.strands(), "a": a.to_string(), "b": b.to_string(), "order": o }),
                o,
            )
        }
        Command::Eq { a, b, engine: name } => {
            let (a, b) = s.pair(a, b)?;
            let eng = engine::lookup(name, *s.engine())?;
            let eq = eng.equal(&a, &b)?;
            Output::new(
                json!({ "strands": a.strands(), "a": a.to_string(), "b": b.to_string(), "engine": eng.name(), "equal": eq }),
                eq.to_string(),
            )
        }
        Command::Floor(input) => {
            let b = s.braid(input)?;
            let f = s.engine().floor(&b)?;
            Output::new(with(described(&b), json!({ "floor": f })), f.to_string())
        }
        Command::Fdtc(input) => {
            let b = s.braid(input)?;
            let w = s.solver.compute(&b)?;
            let bounds = occurrence_bounds(&b);
            Output::new(
                with(
                    described(&b),
                    json!({
                        "fdtc": output::rational(&w.value),
                        "bounds": { "lo": output::rational(&bounds.lo), "hi": output::rational(&bounds.hi) },
                    }),
                ),
                w.to_string(),
            )
        }
        Command::Upsilon { input, plot } => {
            let b = s.braid(input)?;
            let hu = homogenized_upsilon_with(&s.solver, &b)?;
            let json = with(
                described(&b),
                with(
                    json!({
                        "writhe": hu.writhe,
                        "fdtc": output::rational(&hu.omega.value),
                        "slope_change": output::rational(&hu.slope_change),
                    }),
                    output::pl_function(&hu.function),
                ),
            );
            let text = format!(
                "writhe {}\nfdtc {}\n{}",
                hu.writhe,
                hu.omega,
                pl_text(&hu.function)
            );
            plot_output(&hu.function, plot, json, text)
        }
        Command::TorusUpsilon { torus_n, k, plot } => {
            let f = torus_upsilon(*torus_n, *k)?;
            let json = with(json!({ "n": torus_n, "k": k }), output::pl_function(&f));
            let text = pl_text(&f);
            plot_output(&f, plot, json, text)
        }
        Command::Index(input) => {
            let b = s.braid(input)?;
            let cert = index_certificate_with(&s.solver, &b)?;
            let dominated = full_twist_domination_with(&s.solver, &b)?;
            let verdict = match cert.verdict {
                Verdict::ExactlyN => "exactly-n",
                Verdict::NoConclusion => "no-conclusion",
            };
            let rule = cert.rule.map(|r| r.as_str());
            let text = match rule {
                Some(r) => format!("{verdict} ({r}), fdtc {}", cert.omega),
                None => format!("{verdict}, fdtc {}", cert.omega),
            };
            Output::new(
                with(
                    described(&b),
                    json!({
                        "fdtc": output::rational(&cert.omega.value),
                        "verdict": verdict,
                        "rule": rule,
                        "full_twist_domination": dominated,
                        "experimental": { "exceeds_n_minus_2": cert.experimental_exceeds_n_minus_2 },
                    }),
                ),
                text,
            )
        }
        Command::Wr(input) => {
            let b = s.braid(input)?;
            Output::new(
                with(described(&b), json!({ "writhe": b.writhe() })),
                b.writhe().to_string(),
            )
        }
        Command::Perm(input) => {
            let b = s.braid(input)?;
            let p = b.perm();
            Output::new(
                with(described(&b), json!({ "perm": p.images() })),
                p.to_string(),
            )
        }
        Command::Components(input) => {
            let b = s.braid(input)?;
            let c = b.closure_components();
            Output::new(
                with(described(&b), json!({ "components": c })),
                c.to_string(),
            )
        }
        Command::Family { name, params, list } => match (list, name) {
            (false, Some(name)) => {
                let b = family::build(name, params)?;
                let b = match s.strands {
                    Some(n) => b.widen(n)?,
                    None => b,
                };
                Output::new(
                    with(
                        json!({ "family": name, "params": params }),
                        with(described(&b), json!({ "letters": b.letters() })),
                    ),
                    b.to_string(),
                )
            }
            _ => {
                let fams = family::registry();
                let json = Value::Array(
                    fams.iter()
                        .map(|f| json!({ "name": f.name(), "params": f.params() }))
                        .collect(),
                );
                let text = fams
                    .iter()
                    .map(|f| format!("{} {}", f.name(), f.params().join(" ")))
                    .collect::<Vec<_>>()
                    .join("\n");
                Output::new(json, text)
            }
        },
        Command::Fuzz {
            suite,
            seed,
            count,
            list,
        } => {
            let name = match (list, suite) {
                (false, Some(name)) => name,
                _ => {
                    let all = suites::registry();
                    let json = Value::Array(
                        all.iter()
                            .map(|s| json!({ "name": s.name(), "description": s.description() }))
                            .collect(),
                    );
                    let text = all
                        .iter()
                        .map(|s| format!("{}: {}", s.name(), s.description()))
                        .collect::<Vec<_>>()
                        .join("\n");
                    return Ok(Output::new(json, text));
                }
            };
            let suite = suites::lookup(name)?;
            let ctx = SuiteContext {
                solver: s.solver,
                strands: s.strands,
            };
            let report = suites::run_suite(suite.as_ref(), &ctx, *seed, *count);
            let json = json!({
                "suite": report.suite,
                "seed": report.seed,
                "count": report.cases,
                "checks": report.checks,
                "passed": report.passed(),
                "violations": report.violations.iter().map(|v| json!({ "case": v.case, "message": v.message })).collect::<Vec<_>>(),
                "errors": report.errors.iter().map(|(c, e)| json!({ "case": c, "kind": braid_error_kind(e), "message": e.to_string() })).collect::<Vec<_>>(),
            });
            let mut text = format!(
                "{} seed {}: {} cases, {} checks, {} violations, {} errors",
                report.suite,
                report.seed,
                report.cases,
                report.checks,
                report.violations.len(),
                report.errors.len()
            );
            for v in &report.violations {
                text.push_str(&format!("\nviolation in case {}: {}", v.case, v.message));
            }
            for (c, e) in &report.errors {
                text.push_str(&format!("\nerror in case {c}: {e}"));
            }
            let out = Output::new(json, text);
            if !report.violations.is_empty() {
                return Err(FuzzFailure::Violations(out).into());
            }
            if let Some((_, e)) = report.errors.iter().find(|(_, e)| {
                !matches!(
                    e,
                    BraidError::BudgetExceeded { .. } | BraidError::OracleBudgetExceeded { .. }
                )
            }) {
                return Err(FuzzFailure::Errors(out, e.clone()).into());
            }
            if report.budget_exceeded() {
                return Err(FuzzFailure::Budget(out).into());
            }
            out
        }
    })
}

/// A fuzz run that produced a report but must exit nonzero.
enum FuzzFailure {
    Violations(Output),
    Errors(Output, BraidError),
    Budget(Output),
}

enum Failure {
    Plain(CliError),
    Fuzz(FuzzFailure),
}

impl From<CliError> for Failure {
    fn from(e: CliError) -> Self {
        Failure::Plain(e)
    }
}

impl From<FuzzFailure> for Failure {
    fn from(f: FuzzFailure) -> Self {
        Failure::Fuzz(f)
    }
}

impl From<InputError> for Failure {
    fn from(e: InputError) -> Self {
        Failure::Plain(e.into())
    }
}

impl From<BraidError> for Failure {
    fn from(e: BraidError) -> Self {
        Failure::Plain(e.into())
    }
}

/// Parses `args` (including the program name), runs the command and
/// returns the exit code: 0 success, 1 violation or bad input, 2 budget.
pub fn run<I, T>(args: I, budget_var: Option<&str>, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let rendered = e.render().to_string();
            let _ = if code == 0 {
                write!(out, "{rendered}")
            } else {
                write!(err, "{rendered}")
            };
            return code;
        }
    };
    let result = budget_from(budget_var)
        .map_err(Failure::from)
        .and_then(|budget| {
            let session = Session {
                strands: cli.strands,
                solver: FdtcSolver::new(OrderEngine::with_budget(budget)),
            };
            execute(&cli.command, &session)
        });
    let emit = |o: &Output, out: &mut dyn Write| {
        let _ = if cli.json {
            writeln!(out, "{}", serde_json::to_string_pretty(&o.json).unwrap())
        } else {
            writeln!(out, "{}", o.text)
        };
    };
    match result {
        Ok(o) => {
            emit(&o, out);
            0
        }
        Err(Failure::Fuzz(f)) => {
            let (o, code, message) = match &f {
                FuzzFailure::Violations(o) => (o, 1, "property violations found".to_string()),
                FuzzFailure::Errors(o, e) => (o, 1, e.to_string()),
                FuzzFailure::Budget(o) => (o, 2, "step budget exceeded in some cases".to_string()),
            };
            emit(o, out);
            let _ = writeln!(err, "error: {message}");
            code
        }
        Err(Failure::Plain(e)) => {
            if cli.json {
                let _ = writeln!(
                    out,
                    "{}",
                    serde_json::to_string_pretty(&e.to_json()).unwrap()
                );
            }
            let _ = writeln!(err, "error: {e}");
            e.exit_code()
        }
    }
}
