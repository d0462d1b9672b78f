use std::sync::Arc;

use lefschetz_core::betti::{
    eliahou_kervaire_table, euler_identity_holds, koszul_betti_table, lex_betti_numbers, BettiError,
};
use lefschetz_core::ideal::{lex_segment_ideal, power_of_max_ideal, truncate_ideal};
use lefschetz_core::monomial::monomials_of_degree;
use lefschetz_core::random::trial_rng;
use lefschetz_core::{GradedAlgebra, HilbertFunction, Monomial, MonomialIdeal, Ring};
use proptest::prelude::*;
use rand::Rng;

/// Closure under `x_j -> x_i` for `i < j`.
fn borel_closure(seeds: Vec<Monomial>) -> Vec<Monomial> {
    let mut out = seeds;
    let mut k = 0;
    while k < out.len() {
        let m = out[k].clone();
        let n = m.num_vars();
        for j in 0..n {
            if m.exps()[j] == 0 {
                continue;
            }
            for i in 0..j {
                let moved = m.div_var(j).unwrap().mul_var(i);
                if !out.contains(&moved) {
                    out.push(moved);
                }
            }
        }
        k += 1;
    }
    out
}

/// A random Borel-fixed Artinian ideal in `n` variables.
fn random_borel_ideal(seed: u64, n: usize, cap: u32) -> MonomialIdeal {
    let mut rng = trial_rng(seed, 7);
    let ring = Arc::new(Ring::new(n, 0).unwrap());
    let count = rng.gen_range(1..=3);
    let seeds: Vec<Monomial> = (0..count)
        .map(|_| {
            let d = rng.gen_range(1..=cap);
            let all = monomials_of_degree(n, d);
            all[rng.gen_range(0..all.len())].clone()
        })
        .collect();
    let mut gens = borel_closure(seeds);
    gens.extend(power_of_max_ideal(&ring, cap + 1).gens().iter().cloned());
    MonomialIdeal::new(&ring, gens)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn eliahou_kervaire_agrees_with_koszul_homology(seed in any::<u64>(), n in 1usize..=4) {
        let ideal = random_borel_ideal(seed, n, if n == 4 { 3 } else { 4 });
        prop_assert!(ideal.is_stable() && ideal.is_borel_fixed());
        let a = GradedAlgebra::new(&ideal.to_span()).unwrap();
        let koszul = koszul_betti_table(&a);
        prop_assert_eq!(&eliahou_kervaire_table(&ideal).unwrap(), &koszul);
        prop_assert!(euler_identity_holds(&koszul, a.hilbert_function().values()));
    }

    #[test]
    fn lex_tables_dominate(seed in any::<u64>(), n in 2usize..=3) {
        // Any monomial Artinian ideal; Betti numbers are bounded by the lex ideal's.
        let mut rng = trial_rng(seed, 8);
        let ring = Arc::new(Ring::new(n, 0).unwrap());
        let cap = 4;
        let mut gens: Vec<Monomial> = (0..rng.gen_range(1..=4))
            .map(|_| {
                let all = monomials_of_degree(n, rng.gen_range(2..=cap));
                all[rng.gen_range(0..all.len())].clone()
            })
            .collect();
        gens.extend(power_of_max_ideal(&ring, cap + 1).gens().iter().cloned());
        let ideal = MonomialIdeal::new(&ring, gens);
        let a = GradedAlgebra::new(&ideal.to_span()).unwrap();
        let table = koszul_betti_table(&a);
        prop_assert!(euler_identity_holds(&table, a.hilbert_function().values()));
        let lex = lex_betti_numbers(a.hilbert_function(), &ring).unwrap();
        prop_assert!(table.is_dominated_by(&lex), "\n{}\n{}", table.diagram(), lex.diagram());
    }

    #[test]
    fn truncation_keeps_high_degrees(seed in any::<u64>(), u in 0usize..5) {
        let ideal = random_borel_ideal(seed, 3, 4).to_span();
        let t = truncate_ideal(&ideal, u);
        for d in 0..7 {
            let want = if d < u { 0 } else { ideal.dim(d) };
            prop_assert_eq!(t.dim(d), want);
        }
    }
}

#[test]
fn lex_ideal_of_1331_resolution() {
    let ring = Arc::new(Ring::new(3, 0).unwrap());
    let h = HilbertFunction::new(vec![1, 3, 3, 1]).unwrap();
    let lex = lex_segment_ideal(&h, &ring).unwrap();
    let ek = eliahou_kervaire_table(&lex).unwrap();
    let kz = koszul_betti_table(&GradedAlgebra::new(&lex.to_span()).unwrap());
    assert_eq!(ek, kz);
    for (i, row) in [(1, [3, 3, 1]), (2, [3, 5, 2]), (3, [1, 2, 1])] {
        for (j, &v) in (1..=3).zip(row.iter()) {
            assert_eq!(kz.get(i, j), v, "beta_{i},{}", i + j);
        }
    }
}

#[test]
fn eliahou_kervaire_rejects_non_stable_ideals() {
    let ring = Arc::new(Ring::new(2, 0).unwrap());
    let ideal = MonomialIdeal::new(&ring, [Monomial::new(vec![0, 2])]);
    assert!(matches!(eliahou_kervaire_table(&ideal), Err(BettiError::NotStable)));
}

#[test]
fn truncating_the_cube_keeps_nine_cubics() {
    // [ (x1^2, x1 x2, x1 x3, x2^2, x2 x3) ]_{>=3} in K[x1, x2, x3]: every cubic but x3^3.
    let ring = Arc::new(Ring::new(3, 0).unwrap());
    let quadrics = monomials_of_degree(3, 2).into_iter().filter(|m| m.exps()[2] < 2);
    let j = MonomialIdeal::new(&ring, quadrics).to_span();
    assert_eq!(truncate_ideal(&j, 3).dim(3), 9);
}
