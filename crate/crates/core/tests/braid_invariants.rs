mod common;

use braidwrench_core::braid::BraidWord;
use braidwrench_core::markov::markov_perturb;
use common::{pair, word, word_in};
use proptest::prelude::*;

proptest! {
    #[test]
    fn writhe_is_a_homomorphism((a, b) in pair(2..=6, 20), k in -4i64..=4) {
        prop_assert_eq!(a.concat(&b).unwrap().writhe(), a.writhe() + b.writhe());
        prop_assert_eq!(a.inverse().writhe(), -a.writhe());
        prop_assert_eq!(a.power(k).writhe(), k * a.writhe());
    }

    #[test]
    fn perm_is_a_homomorphism((a, b) in pair(2..=6, 20)) {
        prop_assert_eq!(a.concat(&b).unwrap().perm(), a.perm().then(&b.perm()));
        prop_assert!(a.concat(&a.inverse()).unwrap().perm().is_identity());
        prop_assert_eq!(a.closure_components(), a.perm().cycle_count());
    }

    #[test]
    fn knotting_suffix_makes_a_knot(b in word(1..=7, 20)) {
        let e = b.knotting_suffix();
        prop_assert_eq!(e.len() + 1, b.closure_components());
        prop_assert!(e.letters().iter().all(|&l| l > 0));
        prop_assert_eq!(b.concat(&e).unwrap().closure_components(), 1);
    }

    #[test]
    fn disjoint_union_adds_writhe_and_components(
        parts in prop::collection::vec(word(1..=4, 10), 1..=4)
    ) {
        let u = BraidWord::disjoint_union(&parts).unwrap();
        prop_assert_eq!(u.strands(), parts.iter().map(BraidWord::strands).sum::<usize>());
        prop_assert_eq!(u.writhe(), parts.iter().map(BraidWord::writhe).sum::<i64>());
        prop_assert_eq!(
            u.closure_components(),
            parts.iter().map(BraidWord::closure_components).sum::<usize>()
        );
    }

    #[test]
    fn markov_moves_shift_writhe_by_stabilizations(
        base in word_in(3, 10),
        extra in 0usize..=2,
        seed in any::<u64>()
    ) {
        let trace = markov_perturb(&base, 3 + extra, seed).unwrap();
        prop_assert_eq!(trace.stabilizations(), extra);
        let states = trace.replay().unwrap();
        for (m, pair) in trace.moves.iter().zip(states.windows(2)) {
            let step = pair[1].writhe() - pair[0].writhe();
            prop_assert_eq!(step.abs(), i64::from(m.is_stabilization()));
        }
        prop_assert_eq!(states.last().unwrap(), &trace.result);
        prop_assert_eq!(trace.result.closure_components(), base.closure_components());
    }
}
