//! Named braid families, each registered under the name the CLI accepts.

use crate::braid::BraidWord;
use crate::error::{BraidError, Result};

/// `a_1 a_2 ... a_{n-1}`.
pub fn delta(n: usize) -> Result<BraidWord> {
    check_strands(n)?;
    Ok(BraidWord::from_trusted(n, (1..n as i32).collect()))
}

/// `a_{n-1} ... a_2 a_1`.
pub fn delta_rev(n: usize) -> Result<BraidWord> {
    check_strands(n)?;
    Ok(BraidWord::from_trusted(n, (1..n as i32).rev().collect()))
}

/// The full twist `(a_1 ... a_{n-1})^n`, central in `B_n`.
pub fn full_twist(n: usize) -> Result<BraidWord> {
    Ok(delta(n)?.power(n as i64))
}

/// `(a_1 ... a_{p-1})^q`; its closure is the torus link `T(p, q)`.
pub fn torus_braid(p: usize, q: i64) -> Result<BraidWord> {
    Ok(delta(p)?.power(q))
}

/// `(d d')^{m-1} d` with `d = delta(n)` and `d' = delta_rev(n)`: the first
/// strand winds `m - 1` times around the others.
pub fn beta_nm(n: usize, m: usize) -> Result<BraidWord> {
    if m < 1 {
        return Err(BraidError::BadParams(format!(
            "beta_nm needs m >= 1, got {m}"
        )));
    }
    let d = delta(n)?;
    let pair = d.concat(&delta_rev(n)?)?;
    pair.power(m as i64 - 1).concat(&d)
}

fn elrifai(block_power: i64, tail_power: i64) -> BraidWord {
    let block = BraidWord::from_trusted(3, vec![1, 2, 2, 1]);
    let mut letters = block.power(block_power).into_letters();
    letters.push(1);
    letters.extend(
        BraidWord::from_trusted(3, vec![2])
            .power(tail_power)
            .into_letters(),
    );
    BraidWord::from_trusted(3, letters)
}

/// `K_k = (a_1 a_2 a_2 a_1)^{2k} a_1 a_2^{-2k-1}` in `B_3`.
pub fn elrifai_k(k: i64) -> Result<BraidWord> {
    check_k(k)?;
    Ok(elrifai(2 * k, -2 * k - 1))
}

/// `L_k = (a_1 a_2 a_2 a_1)^{2k+1} a_1 a_2^{-2k+1}` in `B_3`.
pub fn elrifai_l(k: i64) -> Result<BraidWord> {
    check_k(k)?;
    Ok(elrifai(2 * k + 1, -2 * k + 1))
}

fn check_strands(n: usize) -> Result<()> {
    if n < 1 {
        return Err(BraidError::BadParams(
            "a braid needs at least one strand".into(),
        ));
    }
    Ok(())
}

fn check_k(k: i64) -> Result<()> {
    if k < 1 {
        return Err(BraidError::BadParams(format!(
            "Elrifai families need k >= 1, got {k}"
        )));
    }
    Ok(())
}

/// A named constructor taking integer parameters.
pub trait BraidFamily: Send + Sync {
    fn name(&self) -> &'static str;
    fn params(&self) -> &'static [&'static str];
    fn build(&self, args: &[i64]) -> Result<BraidWord>;
}

struct Fixed {
    name: &'static str,
    params: &'static [&'static str],
    build: fn(&[i64]) -> Result<BraidWord>,
}

impl BraidFamily for Fixed {
    fn name(&self) -> &'static str {
        self.name
    }

    fn params(&self) -> &'static [&'static str] {
        self.params
    }

    fn build(&self, args: &[i64]) -> Result<BraidWord> {
        if args.len() != self.params.len() {
            return Err(BraidError::BadParams(format!(
                "{} takes {} parameter(s) ({}), got {}",
                self.name,
                self.params.len(),
                self.params.join(", "),
                args.len()
            )));
        }
        (self.build)(args)
    }
}

fn to_usize(v: i64, what: &str) -> Result<usize> {
    usize::try_from(v)
        .map_err(|_| BraidError::BadParams(format!("{what} must be non-negative, got {v}")))
}

/// Every family, in a stable order.
pub fn registry() -> Vec<Box<dyn BraidFamily>> {
    vec![
        Box::new(Fixed {
            name: "delta",
            params: &["n"],
            build: |a| delta(to_usize(a[0], "n")?),
        }),
        Box::new(Fixed {
            name: "delta_rev",
            params: &["n"],
            build: |a| delta_rev(to_usize(a[0], "n")?),
        }),
        Box::new(Fixed {
            name: "full_twist",
            params: &["n"],
            build: |a| full_twist(to_usize(a[0], "n")?),
        }),
        Box::new(Fixed {
            name: "torus_braid",
            params: &["p", "q"],
            build: |a| torus_braid(to_usize(a[0], "p")?, a[1]),
        }),
        Box::new(Fixed {
            name: "beta_nm",
            params: &["n", "m"],
            build: |a| beta_nm(to_usize(a[0], "n")?, to_usize(a[1], "m")?),
        }),
        Box::new(Fixed {
            name: "elrifai_K",
            params: &["k"],
            build: |a| elrifai_k(a[0]),
        }),
        Box::new(Fixed {
            name: "elrifai_L",
            params: &["k"],
            build: |a| elrifai_l(a[0]),
        }),
    ]
}

pub fn lookup(name: &str) -> Option<Box<dyn BraidFamily>> {
    registry().into_iter().find(|f| f.name() == name)
}

pub fn build(name: &str, args: &[i64]) -> Result<BraidWord> {
    let family = lookup(name).ok_or_else(|| {
        let known: Vec<_> = registry().iter().map(|f| f.name()).collect();
        BraidError::BadParams(format!(
            "unknown family {name:?}; known: {}",
            known.join(", ")
        ))
    })?;
    family.build(args)
}
