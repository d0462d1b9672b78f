//! Artinian quotients `A = R/I` and finitely generated graded modules.
//!
//! The quotient is built one degree at a time. Given the standard monomials
//! `S_{d-1}` and normal forms of every monomial of degree `d - 1`, the degree
//! `d` piece is a quotient of the span of `T_d = { x_k b : b in S_{d-1} }`:
//! every monomial `m` has one image `x_k nf(m / x_k)` per variable dividing it,
//! the differences of these images are relations, and so are the images of the
//! generators of degree `d`. Row reduction over `T_d` (columns in descending
//! deglex order) leaves `S_d` as the non-pivot columns. Working over `T_d`
//! instead of all of `R_d` keeps the matrices at size about `N h_{d-1}`.

use alloc::collections::BTreeMap;
use alloc::sync::Arc;
use alloc::vec;
use alloc::vec::Vec;

use crate::hilbert::HilbertFunction;
use crate::ideal::{IdealError, IdealSpan, DEFAULT_S_MAX};
use crate::linalg::{axpy, Echelon, Matrix};
use crate::monomial::{Monomial, MonomialBasis};
use crate::poly::{same_ring, Polynomial};
use crate::ring::Ring;
use crate::scalar::{Characteristic, Scalar};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum AlgebraError {
    #[error("the quotient is not Artinian within degree {s_max}")]
    NotArtinianWithinCap { s_max: usize },
    #[error("a generator has degree 0, so the quotient is zero")]
    ConstantGenerator,
    #[error(transparent)]
    Ideal(#[from] IdealError),
    #[error("polynomial is not homogeneous")]
    NotHomogeneous,
    #[error("polynomial lives in a different ring")]
    RingMismatch,
}

/// A standard graded Artinian algebra `R/I` with a monomial basis in each degree.
#[derive(Clone, Debug)]
pub struct GradedAlgebra {
    ring: Arc<Ring>,
    ideal: IdealSpan,
    hf: HilbertFunction,
    std_basis: Vec<Vec<Monomial>>,
    bases: Vec<MonomialBasis>,
    /// `nf[d][i]`: coordinates of the `i`-th monomial of `R_d` over `std_basis[d]`.
    nf: Vec<Vec<Vec<Scalar>>>,
}

impl GradedAlgebra {
    pub fn new(ideal: &IdealSpan) -> Result<Self, AlgebraError> {
        Self::with_cap(ideal, DEFAULT_S_MAX)
    }

    pub fn with_cap(ideal: &IdealSpan, s_max: usize) -> Result<Self, AlgebraError> {
        let ring = ideal.ring().clone();
        let ch = ring.characteristic();
        let n = ring.num_vars();
        let mut by_degree: BTreeMap<usize, Vec<&Polynomial>> = BTreeMap::new();
        for g in ideal.gens() {
            let e = g.homogeneous_degree().expect("validated homogeneous") as usize;
            if e == 0 {
                return Err(AlgebraError::ConstantGenerator);
            }
            by_degree.entry(e).or_default().push(g);
        }

        let mut std_basis = vec![vec![Monomial::one(n)]];
        let mut bases = vec![MonomialBasis::new(n, 0)];
        let mut nf = vec![vec![vec![Scalar::one(ch)]]];

        for d in 1.. {
            if d > s_max + 1 {
                return Err(AlgebraError::NotArtinianWithinCap { s_max });
            }
            let basis = MonomialBasis::new(n, d as u32);
            let prev_basis = &bases[d - 1];
            let prev_std = &std_basis[d - 1];
            let prev_nf = &nf[d - 1];

            let mut t: Vec<Monomial> = prev_std
                .iter()
                .flat_map(|b| (0..n).map(move |k| b.mul_var(k)))
                .collect();
            t.sort_by(|a, b| b.cmp(a));
            t.dedup();
            let t_index: BTreeMap<&Monomial, usize> = t.iter().enumerate().map(|(i, m)| (m, i)).collect();

            // x_k * nf(m / x_k) written over T_d.
            let image = |m: &Monomial, k: usize| -> Vec<Scalar> {
                let q = m.div_var(k).expect("variable divides");
                let coords = &prev_nf[prev_basis.index_of(&q).expect("same degree")];
                let mut v = vec![Scalar::zero(ch); t.len()];
                for (c, b) in coords.iter().zip(prev_std) {
                    if !c.is_zero() {
                        v[t_index[&b.mul_var(k)]] = c.clone();
                    }
                }
                v
            };

            let mut ech = Echelon::new(t.len(), ch);
            let mut first_images = Vec::with_capacity(basis.len());
            for m in basis.monomials() {
                let k0 = m.min_var().expect("positive degree");
                let base = image(m, k0);
                for k in k0 + 1..n {
                    if m.exps()[k] == 0 {
                        continue;
                    }
                    let mut rel = image(m, k);
                    axpy(&mut rel, &-Scalar::one(ch), &base);
                    ech.insert(rel);
                }
                first_images.push(base);
            }
            for g in by_degree.get(&d).into_iter().flatten() {
                let mut v = vec![Scalar::zero(ch); t.len()];
                for (m, c) in g.terms() {
                    let i = basis.index_of(m).expect("degree d term");
                    axpy(&mut v, c, &first_images[i]);
                }
                ech.insert(v);
            }

            let free = ech.free_columns();
            if free.is_empty() {
                break;
            }
            let degree_nf: Vec<Vec<Scalar>> = first_images
                .into_iter()
                .map(|mut v| {
                    ech.reduce(&mut v);
                    free.iter().map(|&c| v[c].clone()).collect()
                })
                .collect();
            std_basis.push(free.iter().map(|&c| t[c].clone()).collect());
            bases.push(basis);
            nf.push(degree_nf);
        }

        let hf = HilbertFunction::new(std_basis.iter().map(|b| b.len() as u64).collect())
            .expect("h_0 = 1 and positive entries");
        Ok(GradedAlgebra {
            ring,
            ideal: ideal.clone(),
            hf,
            std_basis,
            bases,
            nf,
        })
    }

    pub fn ring(&self) -> &Arc<Ring> {
        &self.ring
    }

    pub fn ideal(&self) -> &IdealSpan {
        &self.ideal
    }

    pub fn characteristic(&self) -> Characteristic {
        self.ring.characteristic()
    }

    pub fn hilbert_function(&self) -> &HilbertFunction {
        &self.hf
    }

    pub fn socle_degree(&self) -> usize {
        self.hf.socle_degree()
    }

    pub fn dim(&self, d: usize) -> usize {
        self.hf.get(d) as usize
    }

    /// Standard monomials of degree `d`; empty above the socle degree.
    pub fn std_basis(&self, d: usize) -> &[Monomial] {
        self.std_basis.get(d).map(Vec::as_slice).unwrap_or(&[])
    }

    /// Coordinates of a monomial over the standard basis of its degree.
    pub fn monomial_coords(&self, m: &Monomial) -> Vec<Scalar> {
        let d = m.degree() as usize;
        match self.bases.get(d) {
            Some(b) => self.nf[d][b.index_of(m).expect("monomial of this ring")].clone(),
            None => Vec::new(),
        }
    }

    /// Normal form of a homogeneous polynomial: its degree and coordinates.
    pub fn normal_form(&self, p: &Polynomial) -> Result<(usize, Vec<Scalar>), AlgebraError> {
        if !same_ring(p.ring(), &self.ring) {
            return Err(AlgebraError::RingMismatch);
        }
        let d = p.homogeneous_degree().ok_or(AlgebraError::NotHomogeneous)? as usize;
        let mut v = vec![Scalar::zero(self.characteristic()); self.dim(d)];
        if v.is_empty() {
            return Ok((d, v));
        }
        for (m, c) in p.terms() {
            axpy(&mut v, c, &self.nf[d][self.bases[d].index_of(m).expect("degree d")]);
        }
        Ok((d, v))
    }

    /// The element of `A_d` with the given coordinates, as a polynomial in standard monomials.
    pub fn element(&self, d: usize, coords: &[Scalar]) -> Polynomial {
        Polynomial::from_terms(
            &self.ring,
            self.std_basis(d)
                .iter()
                .zip(coords)
                .map(|(m, c)| (m.clone(), c.clone())),
        )
    }

    /// `x_k : A_i -> A_{i+1}` as an `h_i x h_{i+1}` matrix acting on row vectors.
    pub fn variable_matrix(&self, k: usize, i: usize) -> Matrix {
        let rows = self
            .std_basis(i)
            .iter()
            .map(|b| self.monomial_coords(&b.mul_var(k)))
            .map(|r| if r.is_empty() { vec![Scalar::zero(self.characteristic()); self.dim(i + 1)] } else { r })
            .collect();
        Matrix::from_rows(rows, self.dim(i + 1), self.characteristic())
    }

    /// Multiplication by the linear form `sum_k coeffs[k] x_k` from `A_i` to `A_{i+1}`.
    pub fn linear_matrix(&self, coeffs: &[Scalar], i: usize) -> Matrix {
        assert_eq!(coeffs.len(), self.ring.num_vars());
        let ch = self.characteristic();
        let (h0, h1) = (self.dim(i), self.dim(i + 1));
        let mut rows = vec![vec![Scalar::zero(ch); h1]; h0];
        if h1 == 0 {
            return Matrix::from_rows(rows, 0, ch);
        }
        for (r, b) in self.std_basis(i).iter().enumerate() {
            for (k, c) in coeffs.iter().enumerate() {
                if c.is_zero() {
                    continue;
                }
                axpy(&mut rows[r], c, &self.monomial_coords(&b.mul_var(k)));
            }
        }
        Matrix::from_rows(rows, h1, ch)
    }

    /// `x ell^power : A_i -> A_{i+power}` for a linear form `ell`.
    pub fn multiplication_matrix(&self, ell: &Polynomial, power: usize, i: usize) -> Matrix {
        let coeffs = linear_coefficients(ell);
        self.power_matrix(&coeffs, power, i)
    }

    /// Composition of the one-step matrices for a linear form given by coefficients.
    pub fn power_matrix(&self, coeffs: &[Scalar], power: usize, i: usize) -> Matrix {
        let mut acc = self.linear_matrix(coeffs, i);
        for t in 1..power {
            acc = acc.mul(&self.linear_matrix(coeffs, i + t));
        }
        acc
    }

    /// `A` as a graded module over its own ring.
    pub fn as_module(&self) -> GradedModule {
        let n = self.ring.num_vars();
        let s = self.socle_degree();
        GradedModule {
            num_vars: n,
            ch: self.characteristic(),
            dims: (0..=s).map(|d| self.dim(d)).collect(),
            action: (0..n)
                .map(|k| (0..=s).map(|t| self.variable_matrix(k, t)).collect())
                .collect(),
        }
    }

    /// Dimension of the socle in each degree, with bases as polynomials.
    pub fn socle(&self) -> Vec<Vec<Polynomial>> {
        (0..=self.socle_degree())
            .map(|i| {
                self.common_kernel(i, 1)
                    .into_iter()
                    .map(|v| self.element(i, &v))
                    .collect()
            })
            .collect()
    }

    pub fn socle_type(&self) -> Vec<u64> {
        self.socle().iter().map(|b| b.len() as u64).collect()
    }

    /// Basis of `{ v in A_i : v m in I for every monomial m of degree d }`.
    pub fn common_kernel(&self, i: usize, d: usize) -> Vec<Vec<Scalar>> {
        let ch = self.characteristic();
        let h_i = self.dim(i);
        let h_t = self.dim(i + d);
        if h_t == 0 {
            return (0..h_i)
                .map(|r| {
                    let mut v = vec![Scalar::zero(ch); h_i];
                    v[r] = Scalar::one(ch);
                    v
                })
                .collect();
        }
        let monos = crate::monomial::monomials_of_degree(self.ring.num_vars(), d as u32);
        // Stack the maps for every monomial side by side; the kernel is the common kernel.
        let rows: Vec<Vec<Scalar>> = self
            .std_basis(i)
            .iter()
            .map(|b| monos.iter().flat_map(|m| self.monomial_coords(&b.mul(m))).collect())
            .collect();
        Matrix::from_rows(rows, h_t * monos.len(), ch).left_kernel()
    }
}

/// Coefficients of a linear form, indexed by variable.
pub fn linear_coefficients(ell: &Polynomial) -> Vec<Scalar> {
    let n = ell.ring().num_vars();
    assert!(
        ell.is_zero() || ell.homogeneous_degree() == Some(1),
        "expected a linear form"
    );
    (0..n).map(|k| ell.coefficient(&Monomial::var(n, k))).collect()
}

/// `dim R_t - dim I_t` for `t = 0, 1, ...` until it vanishes.
pub fn quotient_hilbert_function(ideal: &IdealSpan, s_max: usize) -> Result<HilbertFunction, AlgebraError> {
    GradedAlgebra::with_cap(ideal, s_max).map(|a| a.hf)
}

/// A graded module of finite length, `M = M_0 + ... + M_top`, given by the
/// dimensions of its pieces and the matrices of the variables.
#[derive(Clone, Debug)]
pub struct GradedModule {
    num_vars: usize,
    ch: Characteristic,
    dims: Vec<usize>,
    /// `action[k][t]`: `x_k : M_t -> M_{t+1}` acting on row vectors.
    action: Vec<Vec<Matrix>>,
}

impl GradedModule {
    pub fn new(num_vars: usize, ch: Characteristic, dims: Vec<usize>, action: Vec<Vec<Matrix>>) -> Self {
        assert_eq!(action.len(), num_vars);
        for per_var in &action {
            assert_eq!(per_var.len(), dims.len());
            for (t, m) in per_var.iter().enumerate() {
                assert_eq!(m.nrows(), dims[t]);
                assert_eq!(m.ncols(), dims.get(t + 1).copied().unwrap_or(0));
            }
        }
        GradedModule {
            num_vars,
            ch,
            dims,
            action,
        }
    }

    pub fn num_vars(&self) -> usize {
        self.num_vars
    }

    pub fn characteristic(&self) -> Characteristic {
        self.ch
    }

    pub fn dim(&self, t: usize) -> usize {
        self.dims.get(t).copied().unwrap_or(0)
    }

    pub fn dims(&self) -> &[usize] {
        &self.dims
    }

    /// Highest degree with a nonzero piece, if any.
    pub fn top_degree(&self) -> Option<usize> {
        self.dims.iter().rposition(|&d| d > 0)
    }

    /// `x_k : M_t -> M_{t+1}`, empty outside the stored range.
    pub fn action(&self, k: usize, t: usize) -> Matrix {
        match self.action[k].get(t) {
            Some(m) => m.clone(),
            None => Matrix::zeros(0, 0, self.ch),
        }
    }

    /// `M / x_k M` as a module over the remaining variables.
    pub fn quotient_by_variable(&self, k: usize) -> GradedModule {
        let len = self.dims.len();
        let images: Vec<Echelon> = (0..len)
            .map(|t| {
                let rows = if t == 0 {
                    Vec::new()
                } else {
                    self.action[k][t - 1].rows().to_vec()
                };
                Echelon::from_rows(rows, self.dims[t], self.ch)
            })
            .collect();
        let free: Vec<Vec<usize>> = images.iter().map(Echelon::free_columns).collect();
        let dims: Vec<usize> = free.iter().map(Vec::len).collect();
        let action = (0..self.num_vars)
            .filter(|&j| j != k)
            .map(|j| {
                (0..len)
                    .map(|t| {
                        let next = t + 1;
                        let ncols = dims.get(next).copied().unwrap_or(0);
                        let rows = free[t]
                            .iter()
                            .map(|&c| {
                                if ncols == 0 {
                                    return Vec::new();
                                }
                                let mut v = self.action[j][t].row(c).to_vec();
                                images[next].reduce(&mut v);
                                free[next].iter().map(|&f| v[f].clone()).collect()
                            })
                            .collect();
                        Matrix::from_rows(rows, ncols, self.ch)
                    })
                    .collect()
            })
            .collect();
        GradedModule::new(self.num_vars - 1, self.ch, dims, action)
    }

    /// `0 :_M x_k` as a module over the remaining variables.
    pub fn annihilator_of_variable(&self, k: usize) -> GradedModule {
        let len = self.dims.len();
        let kernels: Vec<Echelon> = (0..len)
            .map(|t| {
                let m = &self.action[k][t];
                let basis = if m.ncols() == 0 {
                    identity_rows(self.dims[t], self.ch)
                } else {
                    m.left_kernel()
                };
                Echelon::from_rows(basis, self.dims[t], self.ch)
            })
            .collect();
        let dims: Vec<usize> = kernels.iter().map(Echelon::rank).collect();
        let action = (0..self.num_vars)
            .filter(|&j| j != k)
            .map(|j| {
                (0..len)
                    .map(|t| {
                        let ncols = dims.get(t + 1).copied().unwrap_or(0);
                        let rows = kernels[t]
                            .rows()
                            .iter()
                            .map(|b| {
                                if ncols == 0 {
                                    return Vec::new();
                                }
                                let image = self.action[j][t].left_apply(b);
                                kernels[t + 1]
                                    .coordinates(&image)
                                    .expect("kernel of x_k is a submodule")
                            })
                            .collect();
                        Matrix::from_rows(rows, ncols, self.ch)
                    })
                    .collect()
            })
            .collect();
        GradedModule::new(self.num_vars - 1, self.ch, dims, action)
    }
}

fn identity_rows(n: usize, ch: Characteristic) -> Vec<Vec<Scalar>> {
    (0..n)
        .map(|r| {
            let mut v = vec![Scalar::zero(ch); n];
            v[r] = Scalar::one(ch);
            v
        })
        .collect()
}
