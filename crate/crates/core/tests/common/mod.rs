#![allow(dead_code)]

use braidwrench_core::braid::BraidWord;
use proptest::prelude::*;

pub fn letters(n: usize, max_len: usize) -> BoxedStrategy<Vec<i32>> {
    if n < 2 {
        return Just(Vec::new()).boxed();
    }
    let gen = (1..n as i32, any::<bool>()).prop_map(|(i, pos)| if pos { i } else { -i });
    prop::collection::vec(gen, 0..=max_len).boxed()
}

pub fn word_in(n: usize, max_len: usize) -> impl Strategy<Value = BraidWord> {
    letters(n, max_len).prop_map(move |l| BraidWord::new(n, l).unwrap())
}

pub fn word(
    ns: std::ops::RangeInclusive<usize>,
    max_len: usize,
) -> impl Strategy<Value = BraidWord> {
    ns.prop_flat_map(move |n| word_in(n, max_len))
}

pub fn pair(
    ns: std::ops::RangeInclusive<usize>,
    max_len: usize,
) -> impl Strategy<Value = (BraidWord, BraidWord)> {
    ns.prop_flat_map(move |n| (word_in(n, max_len), word_in(n, max_len)))
}

pub fn w(n: usize, letters: &[i32]) -> BraidWord {
    BraidWord::new(n, letters.to_vec()).unwrap()
}
