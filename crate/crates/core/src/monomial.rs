//! Exponent vectors and the degree-lexicographic order.
//!
//! Every basis of a graded piece `R_d` in this crate lists monomials in
//! descending deglex order; lex-segment ideals are then prefixes of that list.

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;

use crate::ring::Ring;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Monomial {
    exps: Vec<u32>,
}

impl Monomial {
    pub fn new(exps: Vec<u32>) -> Self {
        Monomial { exps }
    }

    pub fn one(num_vars: usize) -> Self {
        Monomial {
            exps: vec![0; num_vars],
        }
    }

    pub fn var(num_vars: usize, i: usize) -> Self {
        let mut m = Self::one(num_vars);
        m.exps[i] = 1;
        m
    }

    pub fn exps(&self) -> &[u32] {
        &self.exps
    }

    pub fn num_vars(&self) -> usize {
        self.exps.len()
    }

    pub fn degree(&self) -> u32 {
        self.exps.iter().sum()
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        debug_assert_eq!(self.num_vars(), other.num_vars());
        Monomial {
            exps: self.exps.iter().zip(&other.exps).map(|(a, b)| a + b).collect(),
        }
    }

    pub fn mul_var(&self, i: usize) -> Monomial {
        let mut m = self.clone();
        m.exps[i] += 1;
        m
    }

    /// `self / x_i`, if `x_i` divides `self`.
    pub fn div_var(&self, i: usize) -> Option<Monomial> {
        (self.exps[i] > 0).then(|| {
            let mut m = self.clone();
            m.exps[i] -= 1;
            m
        })
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.exps.iter().zip(&other.exps).all(|(a, b)| a <= b)
    }

    /// `other / self` when `self` divides `other`.
    pub fn quotient(&self, other: &Monomial) -> Option<Monomial> {
        self.divides(other).then(|| Monomial {
            exps: other.exps.iter().zip(&self.exps).map(|(b, a)| b - a).collect(),
        })
    }

    /// Index of the first variable dividing `self`.
    pub fn min_var(&self) -> Option<usize> {
        self.exps.iter().position(|&e| e > 0)
    }

    /// Index of the last variable dividing `self` (`m(u) - 1` in 1-based terms).
    pub fn max_var(&self) -> Option<usize> {
        self.exps.iter().rposition(|&e| e > 0)
    }

    pub fn render(&self, ring: &Ring) -> alloc::string::String {
        use core::fmt::Write;
        let mut out = alloc::string::String::new();
        for (i, &e) in self.exps.iter().enumerate() {
            if e == 0 {
                continue;
            }
            if !out.is_empty() {
                out.push('*');
            }
            out.push_str(ring.var_name(i));
            if e > 1 {
                let _ = write!(out, "^{e}");
            }
        }
        if out.is_empty() {
            out.push('1');
        }
        out
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.exps)
    }
}

/// Degree-lexicographic comparison: higher total degree first, ties broken by
/// the sign of the first nonzero entry of `a - b`.
pub fn deglex_compare(a: &Monomial, b: &Monomial) -> Ordering {
    assert_eq!(a.num_vars(), b.num_vars(), "monomials from different rings");
    a.degree()
        .cmp(&b.degree())
        .then_with(|| a.exps.cmp(&b.exps))
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        deglex_compare(self, other)
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// All monomials of degree `d` in `num_vars` variables, in descending deglex order.
pub fn monomials_of_degree(num_vars: usize, d: u32) -> Vec<Monomial> {
    let mut out = Vec::new();
    if num_vars == 0 {
        if d == 0 {
            out.push(Monomial::one(0));
        }
        return out;
    }
    let mut exps = vec![0u32; num_vars];
    fill(&mut exps, 0, d, &mut out);
    out
}

fn fill(exps: &mut [u32], pos: usize, remaining: u32, out: &mut Vec<Monomial>) {
    if pos + 1 == exps.len() {
        exps[pos] = remaining;
        out.push(Monomial::new(exps.to_vec()));
        exps[pos] = 0;
        return;
    }
    for e in (0..=remaining).rev() {
        exps[pos] = e;
        fill(exps, pos + 1, remaining - e, out);
    }
    exps[pos] = 0;
}

/// Number of monomials of degree `d` in `n` variables, `C(n-1+d, d)`.
pub fn count_of_degree(num_vars: usize, d: u32) -> usize {
    if num_vars == 0 {
        return usize::from(d == 0);
    }
    crate::hilbert::binomial(num_vars as u64 - 1 + d as u64, d as u64) as usize
}

/// The canonical basis of `R_d` with reverse lookup.
#[derive(Clone, Debug)]
pub struct MonomialBasis {
    degree: u32,
    monomials: Vec<Monomial>,
    index: BTreeMap<Monomial, usize>,
}

impl MonomialBasis {
    pub fn new(num_vars: usize, degree: u32) -> Self {
        let monomials = monomials_of_degree(num_vars, degree);
        let index = monomials
            .iter()
            .enumerate()
            .map(|(i, m)| (m.clone(), i))
            .collect();
        MonomialBasis {
            degree,
            monomials,
            index,
        }
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn len(&self) -> usize {
        self.monomials.len()
    }

    pub fn is_empty(&self) -> bool {
        self.monomials.is_empty()
    }

    pub fn monomials(&self) -> &[Monomial] {
        &self.monomials
    }

    pub fn get(&self, i: usize) -> &Monomial {
        &self.monomials[i]
    }

    pub fn index_of(&self, m: &Monomial) -> Option<usize> {
        self.index.get(m).copied()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(e: &[u32]) -> Monomial {
        Monomial::new(e.to_vec())
    }

    #[test]
    fn deglex_examples() {
        // x1^2 > x1*x2
        assert_eq!(deglex_compare(&m(&[2, 0, 0]), &m(&[1, 1, 0])), Ordering::Greater);
        assert_eq!(deglex_compare(&m(&[1, 1, 0]), &m(&[1, 1, 0])), Ordering::Equal);
        // x2^3 vs x1*x3: degree dominates
        assert_eq!(deglex_compare(&m(&[0, 3, 0]), &m(&[1, 0, 1])), Ordering::Greater);
    }

    #[test]
    fn degree_enumeration() {
        assert_eq!(monomials_of_degree(3, 0), vec![m(&[0, 0, 0])]);
        let d2 = monomials_of_degree(3, 2);
        assert_eq!(
            d2,
            vec![
                m(&[2, 0, 0]),
                m(&[1, 1, 0]),
                m(&[1, 0, 1]),
                m(&[0, 2, 0]),
                m(&[0, 1, 1]),
                m(&[0, 0, 2])
            ]
        );
        assert_eq!(monomials_of_degree(2, 5).len(), 6);
        assert_eq!(count_of_degree(3, 4), 15);
    }

    #[test]
    fn enumeration_is_sorted_by_deglex() {
        for n in 1..5 {
            for d in 0..5 {
                let ms = monomials_of_degree(n, d);
                assert_eq!(ms.len(), count_of_degree(n, d));
                assert!(ms.windows(2).all(|w| deglex_compare(&w[0], &w[1]) == Ordering::Greater));
            }
        }
    }

    #[test]
    fn divisibility_helpers() {
        let a = m(&[1, 0, 2]);
        let b = m(&[2, 1, 2]);
        assert!(a.divides(&b));
        assert_eq!(a.quotient(&b), Some(m(&[1, 1, 0])));
        assert_eq!(a.max_var(), Some(2));
        assert_eq!(a.min_var(), Some(0));
        assert_eq!(a.div_var(1), None);
    }
}
