//! Braid-index certificates.
//!
//! An `n`-braid whose closure is also the closure of a braid on fewer
//! strands has `|omega| <= n - 1`, and for 3-braids even `|omega| <= 1`.
//! A larger coefficient therefore certifies that `n` is the braid index.
//! Nothing is concluded otherwise.

use std::cmp::Ordering;

use num_traits::Signed;

use crate::braid::BraidWord;
use crate::error::{BraidError, Result};
use crate::family::full_twist;
use crate::fdtc::{Fdtc, FdtcSolver};
use crate::rational::int;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Verdict {
    ExactlyN,
    NoConclusion,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Rule {
    GeneralThreshold,
    ThreeBraidRefinement,
    FullTwistDomination,
}

impl Rule {
    pub fn as_str(self) -> &'static str {
        match self {
            Rule::GeneralThreshold => "general-threshold",
            Rule::ThreeBraidRefinement => "three-braid-refinement",
            Rule::FullTwistDomination => "full-twist-domination",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IndexCertificate {
    pub strands: usize,
    pub omega: Fdtc,
    pub verdict: Verdict,
    /// The rule whose hypothesis was verified; `None` with `NoConclusion`.
    pub rule: Option<Rule>,
    /// Whether `|omega| > n - 2`, the conjectural sharper threshold. Never
    /// feeds into `verdict`.
    pub experimental_exceeds_n_minus_2: bool,
}

pub fn index_certificate_with(solver: &FdtcSolver, b: &BraidWord) -> Result<IndexCertificate> {
    let n = b.strands();
    if n < 2 {
        return Err(BraidError::BadParams(
            "braid index certificates need n >= 2".into(),
        ));
    }
    let omega = solver.compute(b)?;
    let size = omega.value.abs();
    let nn = n as i64;
    let rule = if size > int(nn - 1) {
        Some(Rule::GeneralThreshold)
    } else if n == 3 && size > int(1) {
        Some(Rule::ThreeBraidRefinement)
    } else {
        None
    };
    Ok(IndexCertificate {
        strands: n,
        experimental_exceeds_n_minus_2: size > int(nn - 2),
        omega,
        verdict: if rule.is_some() {
            Verdict::ExactlyN
        } else {
            Verdict::NoConclusion
        },
        rule,
    })
}

pub fn index_certificate(b: &BraidWord) -> Result<IndexCertificate> {
    index_certificate_with(&FdtcSolver::default(), b)
}

/// `D^2n <= b` or `b <= D^-2n`.
pub fn full_twist_domination_with(solver: &FdtcSolver, b: &BraidWord) -> Result<bool> {
    let n = b.strands();
    if n < 2 {
        return Ok(false);
    }
    let engine = solver.engine();
    let twist = full_twist(n)?;
    let up = twist.power(n as i64);
    if engine.compare(&up, b)? != Ordering::Greater {
        return Ok(true);
    }
    let down = twist.power(-(n as i64));
    Ok(engine.compare(b, &down)? != Ordering::Greater)
}

pub fn full_twist_domination(b: &BraidWord) -> Result<bool> {
    full_twist_domination_with(&FdtcSolver::default(), b)
}

/// Certificate through full-twist domination alone; falls back to
/// `NoConclusion` when neither inequality holds.
pub fn domination_certificate(b: &BraidWord) -> Result<IndexCertificate> {
    let solver = FdtcSolver::default();
    let mut cert = index_certificate_with(&solver, b)?;
    if full_twist_domination_with(&solver, b)? {
        cert.verdict = Verdict::ExactlyN;
        cert.rule = Some(Rule::FullTwistDomination);
    } else {
        cert.verdict = Verdict::NoConclusion;
        cert.rule = None;
    }
    Ok(cert)
}
