//! Weak and strong Lefschetz verdicts.
//!
//! A verdict that the property holds always comes with a witness linear form
//! whose multiplication maps were checked to have maximal rank by exact
//! arithmetic. A failure is exact when one of the following obstructions applies to
//! every linear form at once:
//!
//! * a nonzero `v in A_i` with `v R_d` contained in `I` while `h_i <= h_{i+d}`,
//!   so no `ell^d` can be injective on `A_i`;
//! * an exponent `m` for which `ell^m` vanishes in `A` identically in the
//!   coefficients of `ell` (possible only in positive characteristic);
//! * a step whose map drops rank at every point of a grid large enough that
//!   the maximal minors, homogeneous of degree `D` in the coefficients, must
//!   vanish identically.
//!
//! Otherwise the failure is reported with a Schwartz–Zippel error bound.

use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::One;

use crate::algebra::GradedAlgebra;
use crate::hilbert::positive_first_difference;
use crate::monomial::monomials_of_degree;
use crate::poly::Polynomial;
use crate::random::{random_linear_coefficients, trial_rng};
use crate::scalar::Scalar;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Property {
    Weak,
    Strong,
}

impl Property {
    pub fn name(self) -> &'static str {
        match self {
            Property::Weak => "WLP",
            Property::Strong => "SLP",
        }
    }
}

/// How "general" linear forms are sampled.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LefschetzOptions {
    pub trials: usize,
    pub coeff_bound: u64,
    pub seed: u64,
    /// Forms tried before any random one, e.g. a known witness.
    pub candidates: Vec<Vec<Scalar>>,
    /// Largest number of rank evaluations spent on a grid certificate.
    pub grid_budget: u64,
}

impl Default for LefschetzOptions {
    fn default() -> Self {
        LefschetzOptions {
            trials: 3,
            coeff_bound: 10_000,
            seed: 0,
            candidates: Vec::new(),
            grid_budget: 100_000,
        }
    }
}

/// Steps `(i, d)`: the map `x ell^d : A_i -> A_{i+d}`.
pub type Step = (usize, usize);

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Certificate {
    /// `v m` lies in `I` for all `v` in the span of `basis` (in `A_degree`) and
    /// all monomials `m` of degree `step`.
    CommonKernel {
        degree: usize,
        step: usize,
        basis: Vec<Polynomial>,
    },
    /// `ell^exponent = 0` in `A` for every linear form `ell`.
    NilpotentForm { exponent: usize },
    /// The map of `step` has deficient rank at every point
    /// `(0, .., 0, 1, t)` with `t` in `{0, .., degree}`, where `degree` bounds
    /// the degree of its maximal minors.
    GridExhaustion { step: Step, degree: u64, evaluations: u64 },
    /// No exact obstruction found; every sampled form failed.
    Probabilistic { epsilon: BigRational },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TrialRecord {
    /// `None` for a deterministic candidate, otherwise the stream index.
    pub stream: Option<u64>,
    pub coefficients: Vec<Scalar>,
    pub failing_steps: Vec<Step>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LefschetzVerdict {
    pub property: Property,
    pub holds: bool,
    pub witness: Option<Polynomial>,
    /// Failing steps of the first tried form, when the property fails.
    pub failing_steps: Vec<Step>,
    pub certificate: Option<Certificate>,
    pub trials: Vec<TrialRecord>,
    pub seed: u64,
    pub coeff_bound: u64,
}

impl LefschetzVerdict {
    pub fn is_exact(&self) -> bool {
        self.holds || matches!(
                self.certificate,
                Some(
                    Certificate::CommonKernel { .. }
                        | Certificate::NilpotentForm { .. }
                        | Certificate::GridExhaustion { .. }
                )
            )
    }
}

/// All steps the property quantifies over.
pub fn steps(a: &GradedAlgebra, property: Property) -> Vec<Step> {
    let s = a.socle_degree();
    match property {
        Property::Weak => (0..s).map(|i| (i, 1)).collect(),
        Property::Strong => (1..=s).flat_map(|d| (0..=s - d).map(move |i| (i, d))).collect(),
    }
}

/// Steps where `x ell^d` fails to have maximal rank, for `ell = sum coeffs[k] x_k`.
pub fn failing_steps(a: &GradedAlgebra, property: Property, coeffs: &[Scalar]) -> Vec<Step> {
    let s = a.socle_degree();
    let mut out = Vec::new();
    let maxd = match property {
        Property::Weak => 1,
        Property::Strong => s,
    };
    for i in 0..s {
        let mut acc = a.linear_matrix(coeffs, i);
        for d in 1..=maxd.min(s - i) {
            if d > 1 {
                acc = acc.mul(&a.linear_matrix(coeffs, i + d - 1));
            }
            if acc.rank() < a.dim(i).min(a.dim(i + d)) {
                out.push((i, d));
            }
        }
    }
    out.sort_by_key(|&(i, d)| (d, i));
    out
}

/// Hilbert function of `A / ell A`: `h_t - rank(x ell : A_{t-1} -> A_t)`.
pub fn hilbert_function_mod_form(a: &GradedAlgebra, coeffs: &[Scalar]) -> Vec<u64> {
    let mut out = Vec::new();
    for t in 0..=a.socle_degree() {
        let r = if t == 0 { 0 } else { a.linear_matrix(coeffs, t - 1).rank() };
        out.push((a.dim(t) - r) as u64);
    }
    while out.last() == Some(&0) {
        out.pop();
    }
    out
}

/// Whether the form gives the weak Lefschetz property, judged through `A / ell A`.
pub fn wlp_by_quotient(a: &GradedAlgebra, coeffs: &[Scalar]) -> bool {
    hilbert_function_mod_form(a, coeffs) == positive_first_difference(a.hilbert_function())
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum CertificateError {
    #[error("h_{i} = {from} > h_{{i+1}} = {to}: the step needs surjectivity, not injectivity")]
    NotInjectiveStep { i: usize, from: u64, to: u64 },
}

/// The socle in degree `i`, which lies in the kernel of every `x ell : A_i -> A_{i+1}`.
pub fn common_kernel_certificate(a: &GradedAlgebra, i: usize) -> Result<Vec<Polynomial>, CertificateError> {
    let h = a.hilbert_function();
    if h.get(i) > h.get(i + 1) {
        return Err(CertificateError::NotInjectiveStep {
            i,
            from: h.get(i),
            to: h.get(i + 1),
        });
    }
    Ok(a.common_kernel(i, 1).iter().map(|v| a.element(i, v)).collect())
}

/// Whether the multinomial coefficient of `exps` is nonzero modulo `p` (`p = 0` means never zero).
fn multinomial_nonzero(exps: &[u32], p: u32) -> bool {
    if p == 0 {
        return true;
    }
    // No carries when adding the exponents in base p.
    let mut digits: Vec<u32> = exps.to_vec();
    while digits.iter().any(|&e| e > 0) {
        let sum: u64 = digits.iter().map(|&e| (e % p) as u64).sum();
        if sum >= p as u64 {
            return false;
        }
        for e in digits.iter_mut() {
            *e /= p;
        }
    }
    true
}

/// Smallest `m <= s` with `ell^m = 0` in `A` as a polynomial identity in the coefficients of `ell`.
pub fn nilpotency_exponent(a: &GradedAlgebra) -> Option<usize> {
    let p = a.characteristic().value();
    if p == 0 {
        return None;
    }
    let n = a.ring().num_vars();
    (1..=a.socle_degree()).find(|&m| {
        monomials_of_degree(n, m as u32).iter().all(|mono| {
            !multinomial_nonzero(mono.exps(), p) || a.monomial_coords(mono).iter().all(Scalar::is_zero)
        })
    })
}

fn step_has_max_rank(a: &GradedAlgebra, coeffs: &[Scalar], (i, d): Step) -> bool {
    a.power_matrix(coeffs, d, i).rank() == a.dim(i).min(a.dim(i + d))
}

/// Number of chart points needed for a step whose minors have degree `degree`.
fn grid_size(n: usize, degree: u64) -> Option<u64> {
    let base = degree.checked_add(1)?;
    (0..n as u32).try_fold(0u64, |acc, k| acc.checked_add(base.checked_pow(k)?))
}

/// Exhausts the chart grid for `step`; `None` if some point gives maximal rank.
pub fn grid_certificate(a: &GradedAlgebra, (i, d): Step, budget: u64) -> Option<Certificate> {
    let n = a.ring().num_vars();
    let ch = a.characteristic();
    let degree = a.dim(i).min(a.dim(i + d)) as u64 * d as u64;
    let evaluations = grid_size(n, degree)?;
    if evaluations > budget {
        return None;
    }
    if let Some(q) = ch.field_size() {
        if q <= degree {
            return None;
        }
    }
    for lead in 0..n {
        let free = n - lead - 1;
        let mut t = vec![0u64; free];
        loop {
            let mut coeffs = vec![Scalar::zero(ch); n];
            coeffs[lead] = Scalar::one(ch);
            for (c, &v) in coeffs[lead + 1..].iter_mut().zip(&t) {
                *c = Scalar::from_i64(v as i64, ch);
            }
            if step_has_max_rank(a, &coeffs, (i, d)) {
                return None;
            }
            // Odometer over {0..degree}^free.
            let mut k = 0;
            while k < free && t[k] == degree {
                t[k] = 0;
                k += 1;
            }
            if k == free {
                break;
            }
            t[k] += 1;
        }
    }
    Some(Certificate::GridExhaustion {
        step: (i, d),
        degree,
        evaluations,
    })
}

fn exact_certificate(a: &GradedAlgebra, property: Property, observed: &[Step], grid_budget: u64) -> Option<Certificate> {
    let h = a.hilbert_function();
    let mut order: Vec<Step> = observed.to_vec();
    order.extend(steps(a, property).into_iter().filter(|s| !observed.contains(s)));
    for (i, d) in order {
        if h.get(i) > h.get(i + d) {
            continue;
        }
        let kernel = a.common_kernel(i, d);
        if !kernel.is_empty() {
            return Some(Certificate::CommonKernel {
                degree: i,
                step: d,
                basis: kernel.iter().map(|v| a.element(i, v)).collect(),
            });
        }
    }
    if let Some(m) = nilpotency_exponent(a) {
        let ok = match property {
            Property::Weak => (0..m).all(|t| h.get(t) <= h.get(t + 1)),
            Property::Strong => h.get(0) <= h.get(m),
        };
        if ok {
            return Some(Certificate::NilpotentForm { exponent: m });
        }
    }
    let mut by_cost: Vec<Step> = observed.to_vec();
    by_cost.sort_by_key(|&(i, d)| a.dim(i).min(a.dim(i + d)) * d);
    by_cost.into_iter().find_map(|st| grid_certificate(a, st, grid_budget))
}

/// Schwartz–Zippel bound `min(1, D / |S|)^T`, with `D` the total degree of a
/// product of one maximal minor per step and `S` the sampling set.
pub fn failure_epsilon(a: &GradedAlgebra, property: Property, coeff_bound: u64, trials: usize) -> BigRational {
    let degree: u64 = steps(a, property)
        .into_iter()
        .map(|(i, d)| a.dim(i).min(a.dim(i + d)) as u64 * d as u64)
        .sum();
    let mut set = 2 * coeff_bound;
    if let Some(q) = a.characteristic().field_size() {
        set = set.min(q - 1);
    }
    let one = BigRational::one();
    let ratio = if set == 0 || degree >= set {
        one.clone()
    } else {
        BigRational::new(BigInt::from(degree), BigInt::from(set))
    };
    let mut eps = one;
    for _ in 0..trials {
        eps *= &ratio;
    }
    eps
}

/// Decides the property by trying candidate forms, then seeded random forms.
pub fn check_lefschetz(a: &GradedAlgebra, property: Property, opts: &LefschetzOptions) -> LefschetzVerdict {
    let n = a.ring().num_vars();
    let ch = a.characteristic();
    let mut verdict = LefschetzVerdict {
        property,
        holds: false,
        witness: None,
        failing_steps: Vec::new(),
        certificate: None,
        trials: Vec::new(),
        seed: opts.seed,
        coeff_bound: opts.coeff_bound,
    };
    let candidates = opts.candidates.iter().cloned().map(|c| (None, c));
    let random = (0..opts.trials as u64).map(|t| {
        let mut rng = trial_rng(opts.seed, t);
        (Some(t), random_linear_coefficients(&mut rng, n, opts.coeff_bound, ch))
    });
    for (stream, coefficients) in candidates.chain(random) {
        let failing = failing_steps(a, property, &coefficients);
        let ok = failing.is_empty();
        if verdict.trials.is_empty() {
            verdict.failing_steps = failing.clone();
        }
        verdict.trials.push(TrialRecord {
            stream,
            coefficients: coefficients.clone(),
            failing_steps: failing,
        });
        if ok {
            verdict.holds = true;
            verdict.failing_steps.clear();
            verdict.witness = Some(Polynomial::linear_form(a.ring(), &coefficients));
            return verdict;
        }
    }
    verdict.certificate = Some(match exact_certificate(a, property, &verdict.failing_steps, opts.grid_budget) {
        Some(c) => c,
        None => Certificate::Probabilistic {
            epsilon: if opts.trials == 0 {
                BigRational::one()
            } else {
                failure_epsilon(a, property, opts.coeff_bound, opts.trials)
            },
        },
    });
    verdict
}

pub fn check_wlp(a: &GradedAlgebra, opts: &LefschetzOptions) -> LefschetzVerdict {
    check_lefschetz(a, Property::Weak, opts)
}

pub fn check_slp(a: &GradedAlgebra, opts: &LefschetzOptions) -> LefschetzVerdict {
    check_lefschetz(a, Property::Strong, opts)
}

/// Coefficient vector of the variable `x_k`.
pub fn variable_coefficients(a: &GradedAlgebra, k: usize) -> Vec<Scalar> {
    let ch = a.characteristic();
    let mut v = vec![Scalar::zero(ch); a.ring().num_vars()];
    v[k] = Scalar::one(ch);
    v
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ideal::IdealSpan;
    use crate::parse::parse_polynomial;
    use crate::ring::Ring;
    use alloc::sync::Arc;

    fn algebra(names: &[&str], ch: u32, gens: &[&str]) -> GradedAlgebra {
        let r = Arc::new(Ring::with_var_names(names, ch).unwrap());
        let gens = gens.iter().map(|g| parse_polynomial(g, &r).unwrap()).collect();
        GradedAlgebra::new(&IdealSpan::new(&r, gens).unwrap()).unwrap()
    }

    fn ex1331() -> GradedAlgebra {
        algebra(&["x1", "x2", "x3"], 0, &["x1^2", "x1*x2", "x1*x3", "x2^3", "x2^2*x3", "x2*x3^2", "x3^4"])
    }

    #[test]
    fn example_1331_fails_with_socle_certificate() {
        let a = ex1331();
        let v = check_wlp(&a, &LefschetzOptions::default());
        assert!(!v.holds);
        assert_eq!(v.failing_steps, vec![(1, 1)]);
        let x1 = parse_polynomial("x1", a.ring()).unwrap();
        assert_eq!(
            v.certificate,
            Some(Certificate::CommonKernel {
                degree: 1,
                step: 1,
                basis: vec![x1.clone()]
            })
        );
        assert!(v.is_exact());
        assert_eq!(common_kernel_certificate(&a, 1).unwrap(), vec![x1]);
        assert!(common_kernel_certificate(&a, 3).is_err());
    }

    #[test]
    fn monomial_ci_has_slp() {
        let a = algebra(&["x", "y", "z"], 0, &["x^2", "y^2", "z^2"]);
        assert!(check_wlp(&a, &LefschetzOptions::default()).holds);
        let v = check_slp(&a, &LefschetzOptions::default());
        assert!(v.holds);
        let w = v.witness.unwrap();
        assert_eq!(w.homogeneous_degree(), Some(1));
        assert!(common_kernel_certificate(&a, 1).unwrap().is_empty());
    }

    #[test]
    fn char_two_nilpotent_form() {
        let a = algebra(&["x1", "x2", "x3"], 2, &["x1^2", "x2^2", "x3^2"]);
        let v = check_wlp(&a, &LefschetzOptions::default());
        assert!(!v.holds);
        assert_eq!(v.certificate, Some(Certificate::NilpotentForm { exponent: 2 }));
        assert!(v.is_exact());
    }

    #[test]
    fn lex_13431_wlp_but_not_slp() {
        let a = algebra(&["x1", "x2", "x3"], 0, &["x1^2", "x1*x2", "x1*x3^2", "x2^3", "x2^2*x3^2", "x2*x3^3", "x3^5"]);
        assert_eq!(a.hilbert_function().values(), &[1, 3, 4, 3, 1]);
        assert!(check_wlp(&a, &LefschetzOptions::default()).holds);
        let v = check_slp(&a, &LefschetzOptions::default());
        assert!(!v.holds);
        assert_eq!(v.failing_steps, vec![(1, 2)]);
        assert!(matches!(v.certificate, Some(Certificate::CommonKernel { degree: 1, step: 2, .. })));
    }

    #[test]
    fn quotient_criterion_matches() {
        let a = algebra(&["x", "y", "z"], 0, &["x^2", "y^2", "z^2"]);
        let mut rng = trial_rng(5, 0);
        let c = random_linear_coefficients(&mut rng, 3, 100, a.characteristic());
        assert!(wlp_by_quotient(&a, &c));
        let b = ex1331();
        assert!(!wlp_by_quotient(&b, &c));
    }

    #[test]
    fn epsilon_bounds() {
        let a = ex1331();
        // steps (0,1),(1,1),(2,1): degree 1 + 3 + 1 = 5
        let e = failure_epsilon(&a, Property::Weak, 10, 2);
        assert_eq!(e, BigRational::new(BigInt::from(1), BigInt::from(16)));
        let f2 = algebra(&["x"], 2, &["x^3"]);
        assert_eq!(failure_epsilon(&f2, Property::Weak, 10, 3), BigRational::one());
    }

    #[test]
    fn multinomials_mod_p() {
        assert!(!multinomial_nonzero(&[1, 1], 2));
        assert!(multinomial_nonzero(&[2, 0], 2));
        assert!(multinomial_nonzero(&[1, 2], 5));
        assert!(!multinomial_nonzero(&[3, 2], 5));
    }
}
