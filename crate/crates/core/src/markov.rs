//! Random Markov moves: conjugations and stabilizations. Every trace ends at
//! a braid whose closure is isotopic to the closure of its base.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::braid::BraidWord;
use crate::error::{BraidError, Result};
use crate::random::random_word;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum MarkovMove {
    Conjugate { by: BraidWord },
    StabilizePositive,
    StabilizeNegative,
}

impl MarkovMove {
    pub fn apply(&self, w: &BraidWord) -> Result<BraidWord> {
        match self {
            MarkovMove::Conjugate { by } => by.concat(w)?.concat(&by.inverse()),
            MarkovMove::StabilizePositive => stabilize(w, 1),
            MarkovMove::StabilizeNegative => stabilize(w, -1),
        }
    }

    pub fn is_stabilization(&self) -> bool {
        !matches!(self, MarkovMove::Conjugate { .. })
    }
}

/// `w * a_n^sign` in `B_{n+1}`.
fn stabilize(w: &BraidWord, sign: i32) -> Result<BraidWord> {
    let n = w.strands();
    let mut letters = w.letters().to_vec();
    letters.push(sign * n as i32);
    BraidWord::new(n + 1, letters)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MarkovTrace {
    pub base: BraidWord,
    pub moves: Vec<MarkovMove>,
    pub result: BraidWord,
}

impl MarkovTrace {
    /// Every intermediate braid, starting with `base` and ending with `result`.
    pub fn replay(&self) -> Result<Vec<BraidWord>> {
        let mut states = vec![self.base.clone()];
        for m in &self.moves {
            let next = m.apply(states.last().unwrap())?;
            states.push(next);
        }
        Ok(states)
    }

    pub fn stabilizations(&self) -> usize {
        self.moves.iter().filter(|m| m.is_stabilization()).count()
    }

    /// Signed sum of the stabilizing letters.
    pub fn stabilization_writhe(&self) -> i64 {
        self.moves
            .iter()
            .map(|m| match m {
                MarkovMove::StabilizePositive => 1,
                MarkovMove::StabilizeNegative => -1,
                MarkovMove::Conjugate { .. } => 0,
            })
            .sum()
    }
}

/// Alternates conjugation by a random word of length at most 4 with a
/// stabilization of random sign until `target_strands` is reached, then
/// conjugates once more.
pub fn markov_perturb(a: &BraidWord, target_strands: usize, seed: u64) -> Result<MarkovTrace> {
    if target_strands < a.strands() {
        return Err(BraidError::BadParams(format!(
            "target of {target_strands} strands is below the base's {}",
            a.strands()
        )));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut current = a.clone();
    let mut moves = Vec::new();
    while current.strands() < target_strands {
        conjugate_randomly(&mut current, &mut moves, &mut rng)?;
        let m = if rng.gen_bool(0.5) {
            MarkovMove::StabilizePositive
        } else {
            MarkovMove::StabilizeNegative
        };
        current = m.apply(&current)?;
        moves.push(m);
    }
    conjugate_randomly(&mut current, &mut moves, &mut rng)?;
    Ok(MarkovTrace {
        base: a.clone(),
        moves,
        result: current,
    })
}

fn conjugate_randomly(
    current: &mut BraidWord,
    moves: &mut Vec<MarkovMove>,
    rng: &mut ChaCha8Rng,
) -> Result<()> {
    let len = rng.gen_range(1..=4);
    let m = MarkovMove::Conjugate {
        by: random_word(rng, current.strands(), len),
    };
    *current = m.apply(current)?;
    moves.push(m);
    Ok(())
}
