use std::cmp::Ordering;
use std::sync::Arc;

use lefschetz_core::hilbert::is_o_sequence;
use lefschetz_core::monomial::{deglex_compare, monomials_of_degree};
use lefschetz_core::parse::parse_polynomial;
use lefschetz_core::random::{random_sparse_form, trial_rng};
use lefschetz_core::{Monomial, Polynomial, Ring};
use proptest::prelude::*;
use rand::Rng;

fn mono() -> impl Strategy<Value = Monomial> {
    prop::collection::vec(0u32..4, 3).prop_map(Monomial::new)
}

fn ring(ch: u32) -> Arc<Ring> {
    Arc::new(Ring::new(3, ch).unwrap())
}

/// Non-homogeneous polynomial with a few terms of degree up to 3.
fn poly(r: &Arc<Ring>, seed: u64) -> Polynomial {
    let mut rng = trial_rng(seed, 99);
    let mut p = Polynomial::zero(r);
    for d in 0..=3 {
        if rng.gen_bool(0.7) {
            p = &p + &random_sparse_form(&mut rng, r, d, 9);
        }
    }
    p
}

proptest! {
    #[test]
    fn deglex_is_a_monomial_order(a in mono(), b in mono(), c in mono()) {
        let ab = deglex_compare(&a, &b);
        prop_assert_eq!(ab, deglex_compare(&b, &a).reverse());
        prop_assert_eq!(ab == Ordering::Equal, a == b);
        if ab == Ordering::Less && deglex_compare(&b, &c) == Ordering::Less {
            prop_assert_eq!(deglex_compare(&a, &c), Ordering::Less);
        }
        prop_assert_eq!(deglex_compare(&a.mul(&c), &b.mul(&c)), ab);
        if a.degree() != b.degree() {
            prop_assert_eq!(ab, a.degree().cmp(&b.degree()));
        }
        prop_assert_eq!(a.cmp(&b), ab);
    }

    #[test]
    fn polynomial_ring_axioms(s1 in any::<u64>(), s2 in any::<u64>(), s3 in any::<u64>(), ch in prop::sample::select(vec![0u32, 2, 7])) {
        let r = ring(ch);
        let (p, q, w) = (poly(&r, s1), poly(&r, s2), poly(&r, s3));
        prop_assert_eq!(&(&p + &q) + &w, &p + &(&q + &w));
        prop_assert_eq!(&p * &q, &q * &p);
        prop_assert_eq!(&(&p * &q) * &w, &p * &(&q * &w));
        prop_assert_eq!(&p * &(&q + &w), &(&p * &q) + &(&p * &w));
        prop_assert!((&p - &p).is_zero());
        prop_assert_eq!(&p * &Polynomial::constant(&r, lefschetz_core::Scalar::one(r.characteristic())), p.clone());
    }

    #[test]
    fn render_then_parse_round_trips(seed in any::<u64>(), ch in prop::sample::select(vec![0u32, 5, 101])) {
        let r = ring(ch);
        let p = poly(&r, seed);
        let text = p.render();
        prop_assert_eq!(parse_polynomial(&text, &r).unwrap(), p);
    }
}

#[test]
fn parser_reads_the_documented_example() {
    let r = Arc::new(Ring::with_var_names(&["x1", "x2", "x3"], 0).unwrap());
    let p = parse_polynomial("x1^2 + 2*x1*x2", &r).unwrap();
    assert_eq!(p.num_terms(), 2);
    assert_eq!(p.homogeneous_degree(), Some(2));
    let q = parse_polynomial(" 3/4 * x3 - x2 -1/4*x3 + x2 ", &r).unwrap();
    assert_eq!(q, parse_polynomial("1/2*x3", &r).unwrap());
}

/// Lex comparison on exponent vectors, `x_0 > x_1 > ...`.
fn lex_gt(a: &[u32], b: &[u32]) -> bool {
    a > b
}

/// Order-ideal oracle: the lex-last segments of sizes `h_d` must be closed under division.
fn o_sequence_oracle(h: &[u64]) -> bool {
    if h.first() != Some(&1) {
        return false;
    }
    if h.len() == 1 {
        return true;
    }
    let n = h[1] as usize;
    let mut prev: Vec<Vec<u32>> = vec![vec![0; n]];
    for (d, &hd) in h.iter().enumerate().skip(1) {
        let mut all: Vec<Vec<u32>> = monomials_of_degree(n, d as u32).into_iter().map(|m| m.exps().to_vec()).collect();
        if hd as usize > all.len() {
            return false;
        }
        all.sort_by(|a, b| if lex_gt(a, b) { Ordering::Less } else { Ordering::Greater });
        let last: Vec<Vec<u32>> = all[all.len() - hd as usize..].to_vec();
        for m in &last {
            for k in 0..n {
                if m[k] > 0 {
                    let mut q = m.clone();
                    q[k] -= 1;
                    if !prev.contains(&q) {
                        return false;
                    }
                }
            }
        }
        prev = last;
    }
    true
}

proptest! {
    #[test]
    fn o_sequences_match_the_order_ideal_oracle(tail in prop::collection::vec(0u64..16, 1..6), n in 1u64..5) {
        let mut h = vec![1, n];
        h.extend(tail.into_iter().take_while(|&v| v > 0));
        prop_assert_eq!(is_o_sequence(&h), o_sequence_oracle(&h), "{:?}", h);
    }
}

#[test]
fn oracle_agrees_on_known_sequences() {
    for (h, ok) in [
        (&[1u64, 3, 6, 10][..], true),
        (&[1, 3, 7], false),
        (&[1, 2, 3, 4, 5], true),
        (&[1, 2, 4], false),
        (&[1, 3, 4, 5, 4], true),
        (&[1, 3, 5, 7], true),
        (&[1, 3, 5, 8], false),
    ] {
        assert_eq!(o_sequence_oracle(h), ok, "{h:?}");
        assert_eq!(is_o_sequence(h), ok, "{h:?}");
    }
}
