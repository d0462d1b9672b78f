//! Seeded sampling of coefficients, linear forms and homogeneous forms.
//!
//! Every random object is drawn from `ChaCha8Rng::seed_from_u64(seed)` with the
//! stream set to a trial index, so trial `t` of a run can be replayed alone.

use alloc::sync::Arc;
use alloc::vec;
use alloc::vec::Vec;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::algebra::GradedAlgebra;
use crate::ideal::IdealSpan;
use crate::monomial::{monomials_of_degree, Monomial};
use crate::poly::Polynomial;
use crate::ring::Ring;
use crate::scalar::{Characteristic, Scalar};

/// The generator for trial `stream` of a run with master seed `seed`.
pub fn trial_rng(seed: u64, stream: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(stream);
    rng
}

/// A uniform integer in `[-bound, bound] \ {0}` whose image in the field is nonzero.
pub fn nonzero_coefficient<R: Rng>(rng: &mut R, bound: u64, ch: Characteristic) -> Scalar {
    assert!(bound >= 1, "coefficient bound must be positive");
    let b = bound.min(i64::MAX as u64) as i64;
    loop {
        let v = rng.gen_range(1..=b);
        let v = if rng.gen::<bool>() { v } else { -v };
        let s = Scalar::from_i64(v, ch);
        if !s.is_zero() {
            return s;
        }
    }
}

/// Coefficients of a random linear form with every coefficient nonzero.
pub fn random_linear_coefficients<R: Rng>(rng: &mut R, num_vars: usize, bound: u64, ch: Characteristic) -> Vec<Scalar> {
    (0..num_vars).map(|_| nonzero_coefficient(rng, bound, ch)).collect()
}

/// A homogeneous form of degree `d` with a nonzero coefficient on every monomial.
pub fn random_dense_form<R: Rng>(rng: &mut R, ring: &Arc<Ring>, d: u32, bound: u64) -> Polynomial {
    let ch = ring.characteristic();
    Polynomial::from_terms(
        ring,
        monomials_of_degree(ring.num_vars(), d)
            .into_iter()
            .map(|m| (m, nonzero_coefficient(rng, bound, ch))),
    )
}

/// A homogeneous form of degree `d` where each monomial appears with probability
/// about one half; never zero.
pub fn random_sparse_form<R: Rng>(rng: &mut R, ring: &Arc<Ring>, d: u32, bound: u64) -> Polynomial {
    let ch = ring.characteristic();
    let monos = monomials_of_degree(ring.num_vars(), d);
    loop {
        let mut terms = Vec::new();
        for m in &monos {
            if rng.gen::<bool>() {
                terms.push((m.clone(), nonzero_coefficient(rng, bound, ch)));
            }
        }
        let p = Polynomial::from_terms(ring, terms);
        if !p.is_zero() {
            return p;
        }
    }
}

/// A random Artinian ideal of a two-variable ring with socle degree at most
/// `s_max`: with equal odds, pure powers plus random monomials, or two dense
/// forms of degrees `a + b - 2 <= s_max` plus possibly a third.
pub fn random_binary_artinian_ideal<R: Rng>(rng: &mut R, ring: &Arc<Ring>, s_max: u32, bound: u64) -> IdealSpan {
    assert_eq!(ring.num_vars(), 2, "two variables expected");
    loop {
        let (a, b) = (rng.gen_range(1..=s_max + 1), rng.gen_range(1..=s_max + 1));
        if a + b > s_max + 2 {
            continue;
        }
        let (a, b) = (a.min(b), a.max(b));
        let gens: Vec<Polynomial> = if rng.gen::<bool>() {
            let mut g = vec![
                Polynomial::monomial(ring, Monomial::new(vec![a, 0])),
                Polynomial::monomial(ring, Monomial::new(vec![0, b])),
            ];
            if a > 1 {
                for _ in 0..rng.gen_range(0..3) {
                    let i = rng.gen_range(1..a);
                    let j = rng.gen_range(1..b);
                    g.push(Polynomial::monomial(ring, Monomial::new(vec![i, j])));
                }
            }
            g
        } else {
            let mut g = vec![random_dense_form(rng, ring, a, bound), random_dense_form(rng, ring, b, bound)];
            if rng.gen::<bool>() {
                let c = rng.gen_range(a..=a + b - 1);
                g.push(random_dense_form(rng, ring, c, bound));
            }
            g
        };
        let ideal = IdealSpan::new(ring, gens).expect("homogeneous");
        if GradedAlgebra::with_cap(&ideal, s_max as usize).is_ok() {
            return ideal;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn streams_are_reproducible_and_distinct() {
        let a: Vec<u64> = (0..4).map(|_| trial_rng(7, 1).gen()).collect();
        let b: Vec<u64> = (0..4).map(|_| trial_rng(7, 1).gen()).collect();
        assert_eq!(a, b);
        let x: u64 = trial_rng(7, 1).gen();
        let y: u64 = trial_rng(7, 2).gen();
        assert_ne!(x, y);
    }

    #[test]
    fn coefficients_are_nonzero_in_small_fields() {
        let f2 = Characteristic::new(2).unwrap();
        let mut rng = trial_rng(1, 0);
        for _ in 0..50 {
            let c = nonzero_coefficient(&mut rng, 10, f2);
            assert!(c.is_one());
        }
    }

    #[test]
    fn dense_forms_have_full_support() {
        let r = Arc::new(Ring::new(3, 0).unwrap());
        let mut rng = trial_rng(3, 0);
        let f = random_dense_form(&mut rng, &r, 4, 5);
        assert_eq!(f.num_terms(), 15);
        assert_eq!(f.homogeneous_degree(), Some(4));
    }
}
