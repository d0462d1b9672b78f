use std::sync::Arc;

use lefschetz_core::ci::monomial_ci;
use lefschetz_core::lefschetz::{check_slp, check_wlp, Certificate};
use lefschetz_core::parse::parse_polynomial;
use lefschetz_core::random::{random_binary_artinian_ideal, trial_rng};
use lefschetz_core::{GradedAlgebra, IdealSpan, LefschetzOptions, Ring};
use proptest::prelude::*;

fn ideal(ring: &Arc<Ring>, gens: &[&str]) -> IdealSpan {
    IdealSpan::new(ring, gens.iter().map(|g| parse_polynomial(g, ring).unwrap()).collect()).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(16))]

    #[test]
    fn two_variable_algebras_have_slp(seed in any::<u64>()) {
        let r = Arc::new(Ring::with_var_names(&["x", "y"], 0).unwrap());
        let i = random_binary_artinian_ideal(&mut trial_rng(seed, 0), &r, 10, 10);
        let a = GradedAlgebra::new(&i).unwrap();
        prop_assert!(a.socle_degree() <= 10);
        let v = check_slp(&a, &LefschetzOptions { seed, ..Default::default() });
        prop_assert!(v.holds, "{:?}", i.gens());
    }
}

#[test]
fn monomial_complete_intersections_have_slp() {
    let r = Arc::new(Ring::with_var_names(&["x", "y", "z"], 0).unwrap());
    for a in 2..=3 {
        for b in 2..=3 {
            for c in 2..=3 {
                let alg = GradedAlgebra::new(&monomial_ci(&r, [a, b, c])).unwrap();
                assert!(check_slp(&alg, &LefschetzOptions::default()).holds, "{a} {b} {c}");
            }
        }
    }
}

#[test]
fn squares_in_characteristic_two_fail_wlp_for_every_form() {
    let r = Arc::new(Ring::with_var_names(&["x1", "x2", "x3"], 2).unwrap());
    let a = GradedAlgebra::new(&ideal(&r, &["x1^2", "x2^2", "x3^2"])).unwrap();
    let v = check_wlp(&a, &LefschetzOptions::default());
    assert!(!v.holds && v.is_exact());
    assert_eq!(v.certificate, Some(Certificate::NilpotentForm { exponent: 2 }));
    // The same ideal over Q has the property.
    let q = Arc::new(Ring::with_var_names(&["x1", "x2", "x3"], 0).unwrap());
    let aq = GradedAlgebra::new(&ideal(&q, &["x1^2", "x2^2", "x3^2"])).unwrap();
    assert!(check_slp(&aq, &LefschetzOptions::default()).holds);
}

#[test]
fn non_lex_ideal_with_hilbert_function_1331_fails_wlp() {
    let r = Arc::new(Ring::with_var_names(&["x1", "x2", "x3"], 0).unwrap());
    let i = ideal(&r, &["x1^2", "x1*x2", "x1*x3", "x2^3", "x2^2*x3", "x2*x3^2", "x3^4"]);
    let a = GradedAlgebra::new(&i).unwrap();
    assert_eq!(a.hilbert_function().values(), &[1, 3, 3, 1]);
    let v = check_wlp(&a, &LefschetzOptions::default());
    assert!(!v.holds);
    match v.certificate {
        Some(Certificate::CommonKernel { degree: 1, step: 1, basis }) => {
            assert_eq!(basis, vec![parse_polynomial("x1", &r).unwrap()]);
        }
        other => panic!("unexpected certificate {other:?}"),
    }
}
