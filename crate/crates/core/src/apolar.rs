//! Gorenstein algebras from inverse systems.
//!
//! `R` acts on itself by differentiation: `x^a o x^b = b!/(b-a)! x^(b-a)` when
//! `a <= b`, else 0. For a form `F` of degree `e`, `Ann(F)_j` is the kernel of
//! the catalecticant `R_j -> R_{e-j}`, `g -> g o F`, and `R/Ann(F)` is
//! Artinian Gorenstein with socle degree `e`.

use alloc::sync::Arc;
use alloc::vec::Vec;

use num_bigint::BigInt;

use crate::algebra::{AlgebraError, GradedAlgebra};
use crate::ideal::{IdealError, IdealSpan};
use crate::linalg::Matrix;
use crate::monomial::{monomials_of_degree, Monomial};
use crate::poly::Polynomial;
use crate::ring::Ring;
use crate::scalar::Scalar;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ApolarError {
    #[error("the dual form is zero")]
    ZeroForm,
    #[error("the dual form is not homogeneous")]
    NotHomogeneous,
    #[error("apolarity is computed in characteristic zero only")]
    NeedsCharacteristicZero,
    #[error(transparent)]
    Ideal(#[from] IdealError),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
}

/// `b! / (b - a)!` per variable, or `None` if `a` does not divide `b`.
fn falling_factor(a: &Monomial, b: &Monomial) -> Option<BigInt> {
    let mut c = BigInt::from(1);
    for (&ai, &bi) in a.exps().iter().zip(b.exps()) {
        if ai > bi {
            return None;
        }
        for k in (bi - ai + 1)..=bi {
            c *= k;
        }
    }
    Some(c)
}

/// `g o F` for a monomial `g`.
pub fn contract(g: &Monomial, f: &Polynomial) -> Polynomial {
    let ch = f.ring().characteristic();
    Polynomial::from_terms(
        f.ring(),
        f.terms().filter_map(|(m, c)| {
            let k = falling_factor(g, m)?;
            let q = g.quotient(m).expect("divides");
            Some((q, c * &Scalar::from_bigint(&k, ch)))
        }),
    )
}

/// Matrix of `R_j -> R_{e-j}` with rows indexed by the monomials of degree `j`.
pub fn catalecticant(f: &Polynomial, j: u32) -> Result<Matrix, ApolarError> {
    let e = f.homogeneous_degree().ok_or(if f.is_zero() {
        ApolarError::ZeroForm
    } else {
        ApolarError::NotHomogeneous
    })?;
    let ring = f.ring();
    let n = ring.num_vars();
    let cols = monomials_of_degree(n, e.saturating_sub(j));
    let rows = monomials_of_degree(n, j)
        .iter()
        .map(|g| {
            let img = contract(g, f);
            cols.iter().map(|m| img.coefficient(m)).collect()
        })
        .collect();
    Ok(Matrix::from_rows(rows, cols.len(), ring.characteristic()))
}

/// `Ann(F)`: catalecticant kernels in degrees `1..=e` and all of `R_{e+1}`.
pub fn annihilator(f: &Polynomial) -> Result<IdealSpan, ApolarError> {
    let ring: &Arc<Ring> = f.ring();
    if !ring.characteristic().is_zero() {
        return Err(ApolarError::NeedsCharacteristicZero);
    }
    let e = f.homogeneous_degree().ok_or(if f.is_zero() {
        ApolarError::ZeroForm
    } else {
        ApolarError::NotHomogeneous
    })?;
    let n = ring.num_vars();
    let mut gens = Vec::new();
    for j in 1..=e {
        let monos = monomials_of_degree(n, j);
        for v in catalecticant(f, j)?.left_kernel() {
            gens.push(Polynomial::from_terms(ring, monos.iter().cloned().zip(v)));
        }
    }
    gens.extend(
        monomials_of_degree(n, e + 1)
            .into_iter()
            .map(|m| Polynomial::monomial(ring, m)),
    );
    Ok(IdealSpan::new(ring, gens)?)
}

/// `R / Ann(F)`.
pub fn apolar_algebra(f: &Polynomial) -> Result<GradedAlgebra, ApolarError> {
    Ok(GradedAlgebra::new(&annihilator(f)?)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lefschetz::{check_slp, check_wlp, Certificate, LefschetzOptions};
    use crate::parse::parse_polynomial;

    fn ring() -> Arc<Ring> {
        Arc::new(Ring::with_var_names(&["x", "y", "z", "u", "v"], 0).unwrap())
    }

    #[test]
    fn contraction() {
        let r = ring();
        let f = parse_polynomial("x*u^2 + y*u*v", &r).unwrap();
        let g = Monomial::new(alloc::vec![0, 0, 0, 2, 0]);
        assert_eq!(contract(&g, &f), parse_polynomial("2*x", &r).unwrap());
    }

    #[test]
    fn power_of_a_variable() {
        let r = ring();
        let a = apolar_algebra(&parse_polynomial("u^4", &r).unwrap()).unwrap();
        assert_eq!(a.hilbert_function().values(), &[1, 1, 1, 1, 1]);
    }

    #[test]
    fn cubic_fails_wlp_exactly() {
        let r = ring();
        let a = apolar_algebra(&parse_polynomial("x*u^2 + y*u*v + z*v^2", &r).unwrap()).unwrap();
        assert_eq!(a.hilbert_function().values(), &[1, 5, 5, 1]);
        assert_eq!(a.socle_type(), alloc::vec![0, 0, 0, 1]);
        let v = check_wlp(&a, &LefschetzOptions::default());
        assert!(!v.holds);
        assert_eq!(v.failing_steps, alloc::vec![(1, 1)]);
        assert!(matches!(v.certificate, Some(Certificate::GridExhaustion { step: (1, 1), .. })), "{:?}", v.certificate);
    }

    #[test]
    fn quartic_has_wlp_but_not_slp() {
        let r = ring();
        let a = apolar_algebra(&parse_polynomial("x*u^3 + y*u^2*v + z*u*v^2", &r).unwrap()).unwrap();
        assert_eq!(a.hilbert_function().values(), &[1, 5, 6, 5, 1]);
        assert_eq!(a.socle_type(), alloc::vec![0, 0, 0, 0, 1]);
        assert!(check_wlp(&a, &LefschetzOptions::default()).holds);
        let v = check_slp(&a, &LefschetzOptions::default());
        assert!(!v.holds);
        assert_eq!(v.failing_steps, alloc::vec![(1, 2)]);
        assert!(v.is_exact(), "{:?}", v.certificate);
    }
}
