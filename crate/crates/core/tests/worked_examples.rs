mod common;

use braidwrench_core::family::{self, beta_nm, elrifai_k, elrifai_l, full_twist};
use braidwrench_core::fdtc::{fdtc, fdtc_properties_check, occurrence_bounds};
use braidwrench_core::index::{full_twist_domination, index_certificate, Rule, Verdict};
use braidwrench_core::rational::{int, ratio};
use braidwrench_core::upsilon::{homogenized_upsilon, pl_combine, torus_upsilon, PLFunction};
use common::w;

#[test]
fn family_words() {
    assert_eq!(beta_nm(3, 2).unwrap().letters(), &[1, 2, 2, 1, 1, 2]);
    assert_eq!(
        elrifai_k(1).unwrap().letters(),
        &[1, 2, 2, 1, 1, 2, 2, 1, 1, -2, -2, -2]
    );
    assert_eq!(full_twist(2).unwrap().letters(), &[1, 1]);
    assert_eq!(
        family::build("beta_nm", &[4, 3]).unwrap(),
        beta_nm(4, 3).unwrap()
    );
    assert!(family::build("beta_nm", &[4]).is_err());
    assert!(family::build("nope", &[]).is_err());
}

#[test]
fn coefficient_examples() {
    assert_eq!(fdtc(&beta_nm(4, 3).unwrap()).unwrap().value, int(2));
    assert_eq!(fdtc(&w(4, &[1, 2, 3, 3])).unwrap().value, ratio(1, 3));
    assert_eq!(fdtc(&w(5, &[1, 2, 3, 4, 1, 2])).unwrap().value, ratio(1, 3));
    assert_eq!(fdtc(&elrifai_l(1).unwrap()).unwrap().value, int(3));
    assert_eq!(fdtc(&elrifai_k(2).unwrap()).unwrap().value, int(4));
    assert_eq!(fdtc(&w(2, &[1])).unwrap().value, ratio(1, 2));
    assert!(fdtc_properties_check(&w(2, &[1]), &w(2, &[-1]))
        .unwrap()
        .passed());
    assert!(
        fdtc_properties_check(&full_twist(3).unwrap(), &w(3, &[1, -2]))
            .unwrap()
            .passed()
    );
}

#[test]
fn occurrence_windows() {
    let b = occurrence_bounds(&elrifai_k(1).unwrap());
    assert_eq!((b.lo, b.hi), (int(0), int(4)));
    let b = occurrence_bounds(&w(3, &[1, -2]));
    assert_eq!((b.lo, b.hi), (int(0), int(0)));
    let b = occurrence_bounds(&full_twist(2).unwrap());
    assert!(b.contains(&int(1)));
}

#[test]
fn upsilon_examples() {
    let t31 = torus_upsilon(3, 1).unwrap();
    assert_eq!(t31.breakpoints(), &[int(0), ratio(2, 3), int(1)]);
    assert_eq!(t31.values(), &[int(0), int(-2), int(-2)]);
    let t32 = torus_upsilon(3, 2).unwrap();
    assert!(pl_combine(&t31, &t31, (&int(1), &int(1)))
        .unwrap()
        .same_function(&t32));
    assert_eq!(
        torus_upsilon(2, 1).unwrap().eval(&ratio(1, 2)).unwrap(),
        ratio(-1, 2)
    );

    assert!(homogenized_upsilon(&w(3, &[])).unwrap().function.is_zero());
    assert_eq!(
        homogenized_upsilon(&w(2, &[1])).unwrap().function,
        PLFunction::linear(ratio(-1, 2), int(1)).unwrap()
    );
    let hu = homogenized_upsilon(&beta_nm(4, 3).unwrap()).unwrap();
    assert_eq!(hu.writhe, 15);
    assert_eq!(hu.function.slopes(), vec![ratio(-15, 2), ratio(1, 2)]);
    assert_eq!(
        hu.function.breakpoints(),
        &[int(0), ratio(1, 2), ratio(2, 3)]
    );
}

#[test]
fn full_twist_shifts_upsilon_by_the_torus_knot() {
    for n in 3..=5 {
        let b = w(n, &[1, -2, 1, 2, 2]);
        let twisted = full_twist(n).unwrap().concat(&b).unwrap();
        let lhs = homogenized_upsilon(&twisted).unwrap().function;
        let rhs = pl_combine(
            &homogenized_upsilon(&b).unwrap().function,
            &torus_upsilon(n, 1).unwrap(),
            (&int(1), &int(1)),
        )
        .unwrap();
        assert!(lhs.same_function(&rhs), "n = {n}");
    }
}

#[test]
fn index_examples() {
    let c = index_certificate(&full_twist(3).unwrap().power(3)).unwrap();
    assert_eq!(
        (c.verdict, c.rule),
        (Verdict::ExactlyN, Some(Rule::GeneralThreshold))
    );
    let c = index_certificate(&elrifai_k(1).unwrap()).unwrap();
    assert_eq!(
        (c.verdict, c.rule),
        (Verdict::ExactlyN, Some(Rule::ThreeBraidRefinement))
    );
    let c = index_certificate(&beta_nm(4, 3).unwrap()).unwrap();
    assert_eq!((c.verdict, c.rule), (Verdict::NoConclusion, None));
    assert!(!c.experimental_exceeds_n_minus_2);
    assert!(full_twist_domination(&full_twist(3).unwrap().power(3)).unwrap());
    assert!(!full_twist_domination(&w(3, &[])).unwrap());
    assert!(full_twist_domination(&beta_nm(3, 4).unwrap()).unwrap());
    assert!(index_certificate(&w(1, &[])).is_err());
}
