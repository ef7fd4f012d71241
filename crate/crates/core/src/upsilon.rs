//! Exact piecewise-linear functions, torus-knot Upsilon and the homogenized
//! Upsilon of a braid.
//!
//! For an `n`-braid the homogenized Upsilon is only represented on
//! `[0, min(2/(n-1), 1)]`. It has slope `-wr/2` up to `2/n` and slope
//! `-wr/2 + n omega` after it. Nothing is evaluated past that domain.

use num_traits::Zero;

use crate::braid::BraidWord;
use crate::error::{BraidError, Result};
use crate::fdtc::{Fdtc, FdtcSolver};
use crate::rational::{self, int, ratio, Rational};

/// Continuous piecewise-linear function on `[0, t_K]`, linear between
/// consecutive breakpoints.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PLFunction {
    breakpoints: Vec<Rational>,
    values: Vec<Rational>,
}

impl PLFunction {
    /// Points `(t_j, v_j)` with `t_0 = 0` and strictly ascending `t_j`.
    pub fn from_points(points: Vec<(Rational, Rational)>) -> Result<Self> {
        if points.len() < 2 {
            return Err(BraidError::BadParams(
                "a PL function needs two breakpoints".into(),
            ));
        }
        if !points[0].0.is_zero() {
            return Err(BraidError::BadParams("first breakpoint must be 0".into()));
        }
        if points.windows(2).any(|p| p[0].0 >= p[1].0) {
            return Err(BraidError::BadParams(
                "breakpoints must be strictly ascending".into(),
            ));
        }
        let (breakpoints, values) = points.into_iter().unzip();
        Ok(Self {
            breakpoints,
            values,
        })
    }

    /// `v(t) = slope * t` on `[0, end]`.
    pub fn linear(slope: Rational, end: Rational) -> Result<Self> {
        let v = &slope * &end;
        Self::from_points(vec![(Rational::zero(), Rational::zero()), (end, v)])
    }

    pub fn zero(end: Rational) -> Result<Self> {
        Self::linear(Rational::zero(), end)
    }

    pub fn breakpoints(&self) -> &[Rational] {
        &self.breakpoints
    }

    pub fn values(&self) -> &[Rational] {
        &self.values
    }

    pub fn domain_end(&self) -> &Rational {
        self.breakpoints.last().expect("at least two breakpoints")
    }

    /// Slope of every piece, left to right.
    pub fn slopes(&self) -> Vec<Rational> {
        self.breakpoints
            .windows(2)
            .zip(self.values.windows(2))
            .map(|(t, v)| (&v[1] - &v[0]) / (&t[1] - &t[0]))
            .collect()
    }

    pub fn is_zero(&self) -> bool {
        self.values.iter().all(Zero::is_zero)
    }

    pub fn eval(&self, t: &Rational) -> Result<Rational> {
        if t < &self.breakpoints[0] || t > self.domain_end() {
            return Err(BraidError::DomainError {
                t: rational::display(t),
                end: rational::display(self.domain_end()),
            });
        }
        let j = self.breakpoints.partition_point(|b| b < t);
        if &self.breakpoints[j] == t {
            return Ok(self.values[j].clone());
        }
        let (t0, t1) = (&self.breakpoints[j - 1], &self.breakpoints[j]);
        let (v0, v1) = (&self.values[j - 1], &self.values[j]);
        Ok(v0 + (v1 - v0) * (t - t0) / (t1 - t0))
    }

    /// `cf * self + cg * other` on the common domain, breakpoints merged.
    pub fn combine(&self, other: &PLFunction, cf: &Rational, cg: &Rational) -> Result<Self> {
        let end = self.domain_end().min(other.domain_end()).clone();
        if end.is_zero() {
            return Err(BraidError::DomainError {
                t: "0".into(),
                end: "0".into(),
            });
        }
        let mut ts: Vec<Rational> = self
            .breakpoints
            .iter()
            .chain(&other.breakpoints)
            .filter(|t| **t <= end)
            .cloned()
            .collect();
        ts.push(end);
        ts.sort();
        ts.dedup();
        let points = ts
            .into_iter()
            .map(|t| {
                let v = cf * self.eval(&t)? + cg * other.eval(&t)?;
                Ok((t, v))
            })
            .collect::<Result<Vec<_>>>()?;
        Self::from_points(points)
    }

    /// Drops breakpoints where the slope does not change.
    pub fn simplified(&self) -> Self {
        let slopes = self.slopes();
        let mut points = vec![(self.breakpoints[0].clone(), self.values[0].clone())];
        for j in 1..self.breakpoints.len() - 1 {
            if slopes[j - 1] != slopes[j] {
                points.push((self.breakpoints[j].clone(), self.values[j].clone()));
            }
        }
        points.push((
            self.domain_end().clone(),
            self.values.last().unwrap().clone(),
        ));
        Self::from_points(points).expect("subset of valid breakpoints")
    }

    /// Same function, regardless of which collinear breakpoints are listed.
    pub fn same_function(&self, other: &PLFunction) -> bool {
        self.simplified() == other.simplified()
    }
}

pub fn pl_eval(f: &PLFunction, t: &Rational) -> Result<Rational> {
    f.eval(t)
}

pub fn pl_combine(
    f: &PLFunction,
    g: &PLFunction,
    coeffs: (&Rational, &Rational),
) -> Result<PLFunction> {
    f.combine(g, coeffs.0, coeffs.1)
}

/// `min(2/(n-1), 1)`, and `1` for a single strand.
pub fn hu_domain_end(n: usize) -> Rational {
    if n <= 2 {
        int(1)
    } else {
        ratio(2, n as i64 - 1)
    }
}

/// Two-piece function with slope `first` on `[0, 2/n]` and `second` after.
fn two_piece(n: usize, first: &Rational, second: &Rational) -> Result<PLFunction> {
    let end = hu_domain_end(n);
    if n <= 2 {
        return PLFunction::linear(first.clone(), end);
    }
    let knee = ratio(2, n as i64);
    let at_knee = first * &knee;
    let at_end = &at_knee + second * (&end - &knee);
    PLFunction::from_points(vec![
        (Rational::zero(), Rational::zero()),
        (knee, at_knee),
        (end, at_end),
    ])
}

/// Upsilon of the torus knot `T(n, nk+1)` on `[0, min(2/(n-1), 1)]`.
pub fn torus_upsilon(n: usize, k: i64) -> Result<PLFunction> {
    if n < 2 || k < 1 {
        return Err(BraidError::BadParams(format!(
            "torus_upsilon needs n >= 2 and k >= 1, got n = {n}, k = {k}"
        )));
    }
    let nn = n as i64;
    let first = ratio(-nn * (nn - 1) * k, 2);
    let second = &first + int(nn * k);
    two_piece(n, &first, &second)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HUResult {
    pub function: PLFunction,
    pub writhe: i64,
    pub omega: Fdtc,
    /// `n * omega`, the jump in slope at `2/n`.
    pub slope_change: Rational,
}

pub fn homogenized_upsilon_with(solver: &FdtcSolver, b: &BraidWord) -> Result<HUResult> {
    let n = b.strands();
    let writhe = b.writhe();
    let omega = solver.compute(b)?;
    let slope_change = int(n as i64) * &omega.value;
    let first = ratio(-writhe, 2);
    let second = &first + &slope_change;
    let function = two_piece(n, &first, &second)?;
    Ok(HUResult {
        function,
        writhe,
        omega,
        slope_change,
    })
}

pub fn homogenized_upsilon(b: &BraidWord) -> Result<HUResult> {
    homogenized_upsilon_with(&FdtcSolver::default(), b)
}
