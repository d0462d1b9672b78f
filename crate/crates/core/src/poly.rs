//! Sparse polynomials over exact scalars.

use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::sync::Arc;
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use crate::monomial::Monomial;
use crate::ring::Ring;
use crate::scalar::Scalar;

/// A polynomial in `ring`; zero coefficients are never stored.
#[derive(Clone)]
pub struct Polynomial {
    ring: Arc<Ring>,
    terms: BTreeMap<Monomial, Scalar>,
}

impl PartialEq for Polynomial {
    fn eq(&self, other: &Self) -> bool {
        same_ring(&self.ring, &other.ring) && self.terms == other.terms
    }
}

impl Eq for Polynomial {}

pub(crate) fn same_ring(a: &Arc<Ring>, b: &Arc<Ring>) -> bool {
    Arc::ptr_eq(a, b) || **a == **b
}

impl Polynomial {
    pub fn zero(ring: &Arc<Ring>) -> Self {
        Polynomial {
            ring: ring.clone(),
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(ring: &Arc<Ring>, c: Scalar) -> Self {
        Self::term(ring, Monomial::one(ring.num_vars()), c)
    }

    pub fn term(ring: &Arc<Ring>, m: Monomial, c: Scalar) -> Self {
        assert_eq!(m.num_vars(), ring.num_vars(), "monomial from a different ring");
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        Polynomial {
            ring: ring.clone(),
            terms,
        }
    }

    pub fn monomial(ring: &Arc<Ring>, m: Monomial) -> Self {
        Self::term(ring, m, Scalar::one(ring.characteristic()))
    }

    pub fn var(ring: &Arc<Ring>, i: usize) -> Self {
        Self::monomial(ring, Monomial::var(ring.num_vars(), i))
    }

    /// `sum_i coeffs[i] * x_i`.
    pub fn linear_form(ring: &Arc<Ring>, coeffs: &[Scalar]) -> Self {
        assert_eq!(coeffs.len(), ring.num_vars());
        let n = ring.num_vars();
        Self::from_terms(
            ring,
            coeffs
                .iter()
                .enumerate()
                .map(|(i, c)| (Monomial::var(n, i), c.clone())),
        )
    }

    /// Builds a polynomial, combining repeated monomials and dropping zeros.
    pub fn from_terms(ring: &Arc<Ring>, terms: impl IntoIterator<Item = (Monomial, Scalar)>) -> Self {
        let mut p = Self::zero(ring);
        for (m, c) in terms {
            p.add_term(m, &c);
        }
        p
    }

    pub fn ring(&self) -> &Arc<Ring> {
        &self.ring
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Terms in descending deglex order.
    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Scalar)> {
        self.terms.iter().rev()
    }

    pub fn coefficient(&self, m: &Monomial) -> Scalar {
        self.terms
            .get(m)
            .cloned()
            .unwrap_or_else(|| Scalar::zero(self.ring.characteristic()))
    }

    pub fn leading_monomial(&self) -> Option<&Monomial> {
        self.terms.keys().next_back()
    }

    /// Highest total degree of a term, `None` for zero.
    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().map(Monomial::degree).max()
    }

    /// The common degree of all terms, if the polynomial is homogeneous and nonzero.
    pub fn homogeneous_degree(&self) -> Option<u32> {
        let mut degs = self.terms.keys().map(Monomial::degree);
        let first = degs.next()?;
        degs.all(|d| d == first).then_some(first)
    }

    pub fn is_homogeneous(&self) -> bool {
        self.is_zero() || self.homogeneous_degree().is_some()
    }

    pub fn add_term(&mut self, m: Monomial, c: &Scalar) {
        if c.is_zero() {
            return;
        }
        assert_eq!(m.num_vars(), self.ring.num_vars(), "monomial from a different ring");
        match self.terms.entry(m) {
            alloc::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c.clone());
            }
            alloc::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn scale(&self, c: &Scalar) -> Self {
        if c.is_zero() {
            return Self::zero(&self.ring);
        }
        Polynomial {
            ring: self.ring.clone(),
            terms: self.terms.iter().map(|(m, v)| (m.clone(), v * c)).collect(),
        }
    }

    pub fn mul_monomial(&self, m: &Monomial) -> Self {
        Polynomial {
            ring: self.ring.clone(),
            terms: self.terms.iter().map(|(t, v)| (t.mul(m), v.clone())).collect(),
        }
    }

    pub fn pow(&self, mut e: u32) -> Self {
        let mut acc = Self::constant(&self.ring, Scalar::one(self.ring.characteristic()));
        let mut base = self.clone();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Substitutes polynomials for every variable (`images[i]` replaces `x_i`);
    /// the result lives in the ring of the images.
    pub fn substitute(&self, target: &Arc<Ring>, images: &[Polynomial]) -> Polynomial {
        assert_eq!(images.len(), self.ring.num_vars());
        let mut out = Polynomial::zero(target);
        for (m, c) in self.terms.iter() {
            let mut t = Polynomial::constant(target, c.clone());
            for (i, &e) in m.exps().iter().enumerate() {
                if e > 0 {
                    t = &t * &images[i].pow(e);
                }
            }
            out = &out + &t;
        }
        out
    }

    /// Human-readable form using the grammar accepted by the parser.
    pub fn render(&self) -> String {
        use core::fmt::Write;
        if self.is_zero() {
            return String::from("0");
        }
        let mut out = String::new();
        for (i, (m, c)) in self.terms().enumerate() {
            let neg = c.is_negative();
            let abs = if neg { -c } else { c.clone() };
            if i == 0 {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            let is_const = m.degree() == 0;
            if is_const {
                let _ = write!(out, "{abs}");
            } else if abs.is_one() {
                out.push_str(&m.render(&self.ring));
            } else {
                let _ = write!(out, "{abs}*{}", m.render(&self.ring));
            }
        }
        out
    }

    fn check_ring(&self, other: &Self) {
        assert!(same_ring(&self.ring, &other.ring), "polynomials from different rings");
    }
}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

impl<'a> Add<&'a Polynomial> for &'a Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &'a Polynomial) -> Polynomial {
        self.check_ring(rhs);
        let mut out = self.clone();
        for (m, c) in rhs.terms.iter() {
            out.add_term(m.clone(), c);
        }
        out
    }
}

impl<'a> Sub<&'a Polynomial> for &'a Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &'a Polynomial) -> Polynomial {
        self + &(-rhs)
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        Polynomial {
            ring: self.ring.clone(),
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }
}

impl<'a> Mul<&'a Polynomial> for &'a Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &'a Polynomial) -> Polynomial {
        self.check_ring(rhs);
        let mut out = Polynomial::zero(&self.ring);
        for (ma, ca) in self.terms.iter() {
            for (mb, cb) in rhs.terms.iter() {
                out.add_term(ma.mul(mb), &(ca * cb));
            }
        }
        out
    }
}

/// Collects the scalar coefficient vector of a homogeneous polynomial in the
/// canonical basis of its degree.
pub(crate) fn coefficient_row(p: &Polynomial, basis: &crate::monomial::MonomialBasis) -> Vec<Scalar> {
    let ch = p.ring().characteristic();
    let mut row = alloc::vec![Scalar::zero(ch); basis.len()];
    for (m, c) in p.terms() {
        let i = basis
            .index_of(m)
            .expect("polynomial term outside the requested degree");
        row[i] = c.clone();
    }
    row
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::parse_polynomial;

    fn ring() -> Arc<Ring> {
        Arc::new(Ring::with_var_names(&["x", "y", "z"], 0).unwrap())
    }

    #[test]
    fn arithmetic_basics() {
        let r = ring();
        let x = Polynomial::var(&r, 0);
        let y = Polynomial::var(&r, 1);
        let s = &x + &y;
        let sq = s.pow(2);
        assert_eq!(sq, parse_polynomial("x^2 + 2*x*y + y^2", &r).unwrap());
        assert_eq!(sq.homogeneous_degree(), Some(2));
        assert!((&s - &s).is_zero());
    }

    #[test]
    fn render_is_readable() {
        let r = ring();
        let p = parse_polynomial("-x^2 + 3/2*y*z - 1", &r).unwrap();
        assert_eq!(p.render(), "-x^2 + 3/2*y*z - 1");
        assert_eq!(Polynomial::zero(&r).render(), "0");
        assert_eq!(p.homogeneous_degree(), None);
    }

    #[test]
    fn substitution_into_smaller_ring() {
        let r = ring();
        let small = Arc::new(Ring::with_var_names(&["x", "y"], 0).unwrap());
        let p = parse_polynomial("z^2", &r).unwrap();
        let images = [
            Polynomial::var(&small, 0),
            Polynomial::var(&small, 1),
            -&(&Polynomial::var(&small, 0) + &Polynomial::var(&small, 1)),
        ];
        let q = p.substitute(&small, &images);
        assert_eq!(q, parse_polynomial("x^2 + 2*x*y + y^2", &small).unwrap());
    }
}
