//! Homogeneous ideals as degreewise spans, and monomial ideals.

use alloc::borrow::Cow;
use alloc::boxed::Box;
use alloc::sync::Arc;
use alloc::vec;
use alloc::vec::Vec;

use once_cell::race::OnceBox;

use crate::hilbert::HilbertFunction;
use crate::linalg::Echelon;
use crate::monomial::{monomials_of_degree, Monomial, MonomialBasis};
use crate::poly::{coefficient_row, same_ring, Polynomial};
use crate::ring::Ring;
use crate::scalar::Scalar;

/// Default cap on the degree searched for the end of an Artinian quotient.
pub const DEFAULT_S_MAX: usize = 60;

const CACHED_DEGREES: usize = 64;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum IdealError {
    #[error("generator {index} is not homogeneous")]
    NotHomogeneous { index: usize },
    #[error("generator {index} lives in a different ring")]
    RingMismatch { index: usize },
    #[error("no lex-segment ideal has this Hilbert function: {reason}")]
    NoLexSegment { reason: &'static str },
}

/// A monomial ideal stored by its minimal generators, sorted in descending deglex order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MonomialIdeal {
    ring: Arc<Ring>,
    gens: Vec<Monomial>,
}

impl MonomialIdeal {
    /// Minimalizes `gens`: drops duplicates and multiples of other generators.
    pub fn new(ring: &Arc<Ring>, gens: impl IntoIterator<Item = Monomial>) -> Self {
        let mut all: Vec<Monomial> = gens.into_iter().collect();
        for m in &all {
            assert_eq!(m.num_vars(), ring.num_vars(), "monomial from a different ring");
        }
        all.sort_by_key(Monomial::degree);
        let mut kept: Vec<Monomial> = Vec::new();
        for m in all {
            if !kept.iter().any(|g| g.divides(&m)) {
                kept.push(m);
            }
        }
        kept.sort_by(|a, b| b.cmp(a));
        MonomialIdeal {
            ring: ring.clone(),
            gens: kept,
        }
    }

    pub fn ring(&self) -> &Arc<Ring> {
        &self.ring
    }

    pub fn gens(&self) -> &[Monomial] {
        &self.gens
    }

    pub fn contains(&self, m: &Monomial) -> bool {
        self.gens.iter().any(|g| g.divides(m))
    }

    /// Monomials of degree `d` lying in the ideal, descending deglex.
    pub fn degree_part(&self, d: u32) -> Vec<Monomial> {
        monomials_of_degree(self.ring.num_vars(), d)
            .into_iter()
            .filter(|m| self.contains(m))
            .collect()
    }

    /// `(x_j / x_{m(u)}) u` stays in the ideal for every generator `u` and `j < m(u)`.
    pub fn is_stable(&self) -> bool {
        self.gens.iter().all(|u| match u.max_var() {
            None => true,
            Some(k) => {
                let base = u.div_var(k).expect("max_var divides");
                (0..k).all(|j| self.contains(&base.mul_var(j)))
            }
        })
    }

    /// `(x_j / x_i) u` stays in the ideal for every generator `u`, every `x_i | u` and `j < i`.
    pub fn is_borel_fixed(&self) -> bool {
        self.gens.iter().all(|u| {
            (0..u.num_vars()).all(|i| match u.div_var(i) {
                None => true,
                Some(base) => (0..i).all(|j| self.contains(&base.mul_var(j))),
            })
        })
    }

    pub fn to_span(&self) -> IdealSpan {
        IdealSpan::new(
            &self.ring,
            self.gens
                .iter()
                .map(|m| Polynomial::monomial(&self.ring, m.clone()))
                .collect(),
        )
        .expect("monomials are homogeneous")
    }

    /// Sum of two monomial ideals in the same ring.
    pub fn sum(&self, other: &MonomialIdeal) -> MonomialIdeal {
        assert!(same_ring(&self.ring, &other.ring), "ideals from different rings");
        MonomialIdeal::new(&self.ring, self.gens.iter().chain(&other.gens).cloned())
    }

    pub fn is_subset_of(&self, other: &MonomialIdeal) -> bool {
        self.gens.iter().all(|g| other.contains(g))
    }
}

/// The lex-segment ideal whose quotient has Hilbert function `h`.
///
/// In degree `d` the ideal consists of the first `dim R_d - h_d` monomials in
/// deglex order. Fails when these segments are not closed under
/// multiplication, which happens exactly when `h` is not an O-sequence.
pub fn lex_segment_ideal(h: &HilbertFunction, ring: &Arc<Ring>) -> Result<MonomialIdeal, IdealError> {
    let n = ring.num_vars();
    let mut gens = Vec::new();
    let mut prev: Vec<Monomial> = Vec::new();
    for d in 1..=h.socle_degree() + 1 {
        let all = monomials_of_degree(n, d as u32);
        let hd = h.get(d) as usize;
        if hd > all.len() {
            return Err(IdealError::NoLexSegment {
                reason: "a value exceeds the number of monomials",
            });
        }
        let seg: Vec<Monomial> = all[..all.len() - hd].to_vec();
        let index: alloc::collections::BTreeSet<&Monomial> = seg.iter().collect();
        let mut generated = alloc::collections::BTreeSet::new();
        for m in &prev {
            for k in 0..n {
                let t = m.mul_var(k);
                if !index.contains(&t) {
                    return Err(IdealError::NoLexSegment {
                        reason: "segments are not closed under multiplication",
                    });
                }
                generated.insert(t);
            }
        }
        gens.extend(seg.iter().filter(|m| !generated.contains(m)).cloned());
        prev = seg;
    }
    Ok(MonomialIdeal::new(ring, gens))
}

/// `m^k`: all monomials of degree `k`.
pub fn power_of_max_ideal(ring: &Arc<Ring>, k: u32) -> MonomialIdeal {
    MonomialIdeal::new(ring, monomials_of_degree(ring.num_vars(), k))
}

/// A homogeneous ideal given by generators, with lazily cached degree pieces.
pub struct IdealSpan {
    ring: Arc<Ring>,
    gens: Vec<Polynomial>,
    cache: Box<[OnceBox<Echelon>]>,
}

impl Clone for IdealSpan {
    fn clone(&self) -> Self {
        IdealSpan::new(&self.ring, self.gens.clone()).expect("already validated")
    }
}

impl core::fmt::Debug for IdealSpan {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        f.debug_struct("IdealSpan").field("gens", &self.gens).finish()
    }
}

impl IdealSpan {
    /// Zero generators are dropped; every other generator must be homogeneous.
    pub fn new(ring: &Arc<Ring>, gens: Vec<Polynomial>) -> Result<Self, IdealError> {
        for (index, g) in gens.iter().enumerate() {
            if !same_ring(g.ring(), ring) {
                return Err(IdealError::RingMismatch { index });
            }
            if !g.is_homogeneous() {
                return Err(IdealError::NotHomogeneous { index });
            }
        }
        Ok(IdealSpan {
            ring: ring.clone(),
            gens: gens.into_iter().filter(|g| !g.is_zero()).collect(),
            cache: (0..CACHED_DEGREES).map(|_| OnceBox::new()).collect(),
        })
    }

    pub fn ring(&self) -> &Arc<Ring> {
        &self.ring
    }

    pub fn gens(&self) -> &[Polynomial] {
        &self.gens
    }

    pub fn max_generator_degree(&self) -> Option<u32> {
        self.gens.iter().filter_map(Polynomial::homogeneous_degree).max()
    }

    /// Reduced echelon basis of `I_d` in the canonical monomial basis of `R_d`.
    pub fn ideal_degree_basis(&self, d: usize) -> Cow<'_, Echelon> {
        match self.cache.get(d) {
            Some(slot) => Cow::Borrowed(slot.get_or_init(|| Box::new(self.compute_degree(d)))),
            None => Cow::Owned(self.compute_degree(d)),
        }
    }

    fn compute_degree(&self, d: usize) -> Echelon {
        let n = self.ring.num_vars();
        let basis = MonomialBasis::new(n, d as u32);
        let mut ech = Echelon::new(basis.len(), self.ring.characteristic());
        for g in &self.gens {
            let e = g.homogeneous_degree().expect("nonzero homogeneous") as usize;
            if e > d {
                continue;
            }
            for m in monomials_of_degree(n, (d - e) as u32) {
                if ech.rank() == basis.len() {
                    return ech;
                }
                ech.insert(coefficient_row(&g.mul_monomial(&m), &basis));
            }
        }
        ech
    }

    pub fn dim(&self, d: usize) -> usize {
        self.ideal_degree_basis(d).rank()
    }

    /// Whether a homogeneous polynomial lies in the ideal.
    pub fn contains(&self, p: &Polynomial) -> bool {
        let Some(d) = p.homogeneous_degree() else {
            return p.is_zero();
        };
        let basis = MonomialBasis::new(self.ring.num_vars(), d);
        self.ideal_degree_basis(d as usize)
            .contains(&coefficient_row(p, &basis))
    }

    /// `dim R_t - dim I_t` for `t = 0, 1, ...` until it vanishes; `None` if it
    /// does not vanish by `s_max`. Computed directly in `R_t`.
    pub fn hilbert_function_direct(&self, s_max: usize) -> Option<Vec<u64>> {
        let n = self.ring.num_vars();
        let mut out = Vec::new();
        for t in 0..=s_max {
            let h = crate::monomial::count_of_degree(n, t as u32) - self.dim(t);
            if h == 0 {
                return Some(out);
            }
            out.push(h as u64);
        }
        None
    }

    /// The ideal generated by `self` and `other`.
    pub fn sum(&self, other: &IdealSpan) -> IdealSpan {
        assert!(same_ring(&self.ring, &other.ring), "ideals from different rings");
        IdealSpan::new(&self.ring, self.gens.iter().chain(&other.gens).cloned().collect())
            .expect("generators already validated")
    }

    /// Whether every generator of `self` lies in `other`.
    pub fn is_subset_of(&self, other: &IdealSpan) -> bool {
        self.gens.iter().all(|g| other.contains(g))
    }

    /// Polynomials spanning `I_d`, one per echelon row.
    pub fn degree_polynomials(&self, d: usize) -> Vec<Polynomial> {
        let basis = MonomialBasis::new(self.ring.num_vars(), d as u32);
        self.ideal_degree_basis(d)
            .rows()
            .iter()
            .map(|r| row_to_polynomial(&self.ring, &basis, r))
            .collect()
    }
}

pub(crate) fn row_to_polynomial(ring: &Arc<Ring>, basis: &MonomialBasis, row: &[Scalar]) -> Polynomial {
    Polynomial::from_terms(
        ring,
        row.iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, c)| (basis.get(i).clone(), c.clone())),
    )
}

/// `[J]_{>= u}`: generated by a basis of `J_u` and the generators of degree above `u`.
pub fn truncate_ideal(j: &IdealSpan, u: usize) -> IdealSpan {
    if u == 0 {
        return j.clone();
    }
    let mut gens = j.degree_polynomials(u);
    gens.extend(
        j.gens()
            .iter()
            .filter(|g| g.homogeneous_degree().is_some_and(|e| e as usize > u))
            .cloned(),
    );
    IdealSpan::new(j.ring(), gens).expect("homogeneous")
}

/// `mu_d = dim I_d - dim R_1 I_{d-1}` for `d = 0..=d_max`.
pub fn minimal_generator_counts(ideal: &IdealSpan, d_max: usize) -> Vec<usize> {
    let ring = ideal.ring();
    let n = ring.num_vars();
    let mut out = vec![ideal.dim(0)];
    for d in 1..=d_max {
        let lower = ideal.degree_polynomials(d - 1);
        let basis = MonomialBasis::new(n, d as u32);
        let mut ech = Echelon::new(basis.len(), ring.characteristic());
        for p in &lower {
            for k in 0..n {
                ech.insert(coefficient_row(&p.mul_monomial(&Monomial::var(n, k)), &basis));
            }
        }
        out.push(ideal.dim(d) - ech.rank());
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::parse_polynomial;

    fn ring(names: &[&str]) -> Arc<Ring> {
        Arc::new(Ring::with_var_names(names, 0).unwrap())
    }

    fn mono(e: &[u32]) -> Monomial {
        Monomial::new(e.to_vec())
    }

    fn hf(v: &[u64]) -> HilbertFunction {
        HilbertFunction::new(v.to_vec()).unwrap()
    }

    #[test]
    fn lex_1331() {
        let r = ring(&["x1", "x2", "x3"]);
        let j = lex_segment_ideal(&hf(&[1, 3, 3, 1]), &r).unwrap();
        let expected = [
            [2, 0, 0],
            [1, 1, 0],
            [1, 0, 1],
            [0, 3, 0],
            [0, 2, 1],
            [0, 1, 2],
            [0, 0, 4],
        ];
        let mut want: Vec<Monomial> = expected.iter().map(|e| mono(e)).collect();
        want.sort_by(|a, b| b.cmp(a));
        assert_eq!(j.gens(), &want[..]);
        assert!(j.is_stable() && j.is_borel_fixed());
    }

    #[test]
    fn lex_13431() {
        let r = ring(&["x1", "x2", "x3"]);
        let j = lex_segment_ideal(&hf(&[1, 3, 4, 3, 1]), &r).unwrap();
        let mut want: Vec<Monomial> = [
            [2, 0, 0],
            [1, 1, 0],
            [1, 0, 2],
            [0, 3, 0],
            [0, 2, 2],
            [0, 1, 3],
            [0, 0, 5],
        ]
        .iter()
        .map(|e| mono(e))
        .collect();
        want.sort_by(|a, b| b.cmp(a));
        assert_eq!(j.gens(), &want[..]);
    }

    #[test]
    fn lex_of_one_is_maximal_ideal() {
        let r = ring(&["x1", "x2"]);
        let j = lex_segment_ideal(&hf(&[1]), &r).unwrap();
        assert_eq!(j.gens(), &[mono(&[1, 0]), mono(&[0, 1])]);
        assert!(lex_segment_ideal(&hf(&[1, 1, 2]), &r).is_err());
    }

    #[test]
    fn degree_pieces() {
        let r = ring(&["x", "y"]);
        let i = IdealSpan::new(
            &r,
            vec![
                parse_polynomial("x^2", &r).unwrap(),
                parse_polynomial("y^2", &r).unwrap(),
            ],
        )
        .unwrap();
        assert_eq!(i.dim(0), 0);
        assert_eq!(i.dim(2), 2);
        assert_eq!(i.dim(3), 4);
        assert_eq!(i.hilbert_function_direct(DEFAULT_S_MAX), Some(vec![1, 2, 1]));
    }

    #[test]
    fn truncation_and_powers() {
        let r = ring(&["x1", "x2", "x3"]);
        let j = MonomialIdeal::new(&r, [mono(&[1, 0, 0]), mono(&[0, 1, 0])]).to_span();
        let t = truncate_ideal(&j, 3);
        assert_eq!(t.gens().len(), 9);
        assert_eq!(minimal_generator_counts(&t, 4)[3], 9);
        for d in 0..6 {
            assert_eq!(t.dim(d), if d >= 3 { j.dim(d) } else { 0 });
        }
        assert_eq!(power_of_max_ideal(&r, 2).gens().len(), 6);
        assert_eq!(power_of_max_ideal(&r, 4).gens().len(), 15);
        let one = ring(&["x"]);
        assert_eq!(power_of_max_ideal(&one, 5).gens(), &[mono(&[5])]);
    }

    #[test]
    fn generator_counts_of_1331_lex() {
        let r = ring(&["x1", "x2", "x3"]);
        let j = lex_segment_ideal(&hf(&[1, 3, 3, 1]), &r).unwrap().to_span();
        assert_eq!(minimal_generator_counts(&j, 5), vec![0, 0, 3, 3, 1, 0]);
        let two = ring(&["x", "y"]);
        assert_eq!(minimal_generator_counts(&power_of_max_ideal(&two, 2).to_span(), 3)[2], 3);
    }

    #[test]
    fn stability_checks() {
        let r = ring(&["x1", "x2"]);
        assert!(!MonomialIdeal::new(&r, [mono(&[0, 2])]).is_stable());
        assert!(!MonomialIdeal::new(&r, [mono(&[2, 0]), mono(&[0, 2])]).is_stable());
        assert!(MonomialIdeal::new(&r, [mono(&[2, 0]), mono(&[1, 1]), mono(&[0, 3])]).is_stable());
    }
}
