//! Random words and rewrites for property suites.

use rand::Rng;

use crate::braid::BraidWord;
use crate::rational::{ratio, Rational};

/// Uniform random word of exactly `len` letters in `B_n`; empty when `n < 2`.
pub fn random_word<R: Rng + ?Sized>(rng: &mut R, n: usize, len: usize) -> BraidWord {
    if n < 2 {
        return BraidWord::identity(n);
    }
    let letters = (0..len)
        .map(|_| {
            let i = rng.gen_range(1..n as i32);
            if rng.gen_bool(0.5) {
                i
            } else {
                -i
            }
        })
        .collect();
    BraidWord::from_trusted(n, letters)
}

/// A word for the same braid, obtained by `moves` random applications of
/// free insertion/cancellation, far commutation and the braid relation.
pub fn random_equivalent<R: Rng + ?Sized>(rng: &mut R, w: &BraidWord, moves: usize) -> BraidWord {
    let n = w.strands();
    if n < 2 {
        return w.clone();
    }
    let mut letters = w.letters().to_vec();
    for _ in 0..moves {
        match rng.gen_range(0..4) {
            0 => {
                let pos = rng.gen_range(0..=letters.len());
                let g = rng.gen_range(1..n as i32) * if rng.gen_bool(0.5) { 1 } else { -1 };
                letters.splice(pos..pos, [g, -g]);
            }
            1 => {
                if let Some(pos) =
                    find_from(rng, &letters, |p, l| p + 1 < l.len() && l[p] == -l[p + 1])
                {
                    letters.drain(pos..pos + 2);
                }
            }
            2 => {
                if let Some(pos) = find_from(rng, &letters, |p, l| {
                    p + 1 < l.len() && (l[p].abs() - l[p + 1].abs()).abs() >= 2
                }) {
                    letters.swap(pos, pos + 1);
                }
            }
            _ => {
                // a_i^e a_j^e a_i^e = a_j^e a_i^e a_j^e for |i - j| = 1
                if let Some(pos) = find_from(rng, &letters, |p, l| {
                    p + 2 < l.len()
                        && l[p] == l[p + 2]
                        && l[p].signum() == l[p + 1].signum()
                        && (l[p].abs() - l[p + 1].abs()).abs() == 1
                }) {
                    let (x, y) = (letters[pos], letters[pos + 1]);
                    letters[pos] = y;
                    letters[pos + 1] = x;
                    letters[pos + 2] = y;
                }
            }
        }
    }
    BraidWord::from_trusted(n, letters)
}

/// First position satisfying `pred`, scanning cyclically from a random start.
fn find_from<R: Rng + ?Sized>(
    rng: &mut R,
    letters: &[i32],
    pred: impl Fn(usize, &[i32]) -> bool,
) -> Option<usize> {
    if letters.is_empty() {
        return None;
    }
    let start = rng.gen_range(0..letters.len());
    (0..letters.len())
        .map(|d| (start + d) % letters.len())
        .find(|&p| pred(p, letters))
}

/// Random rational in `[lo, hi]` with denominator dividing `den`.
pub fn random_rational<R: Rng + ?Sized>(
    rng: &mut R,
    lo: &Rational,
    hi: &Rational,
    den: i64,
) -> Rational {
    let d = Rational::from_integer(den.into());
    let p_lo = crate::rational::ceil_i64(&(lo * &d));
    let p_hi = crate::rational::floor_i64(&(hi * &d));
    ratio(rng.gen_range(p_lo..=p_hi), den)
}
