//! Height-three complete intersections and their restrictions to lines.
//!
//! A trial draws `I = (F_1, F_2, F_3)` in `K[x, y, z]` with dense random
//! forms, checks it is a complete intersection by its Hilbert function, then
//! restricts to a random line `L = 0` and measures the syzygy module of the
//! restricted ideal in `K[x, y, z]/(L)`.

use alloc::sync::Arc;
use alloc::vec;
use alloc::vec::Vec;

use num_rational::BigRational;
use rand::seq::SliceRandom;
use rand::Rng;

use crate::algebra::{AlgebraError, GradedAlgebra};
use crate::betti::{koszul_betti_table, BettiTable};
use crate::hilbert::complete_intersection_hf;
use crate::ideal::{minimal_generator_counts, IdealError, IdealSpan};
use crate::linalg::Matrix;
use crate::monomial::{monomials_of_degree, Monomial};
use crate::poly::Polynomial;
use crate::random::{random_dense_form, trial_rng};
use crate::ring::Ring;
use crate::scalar::Scalar;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum CiError {
    #[error("degrees must satisfy 2 <= d1 <= d2 <= d3, got {0:?}")]
    BadDegrees([u32; 3]),
    #[error("prediction needs d3 < d1 + d2 + 1, got {0:?}")]
    HypothesisViolated([u32; 3]),
    #[error("no complete intersection found after {0} attempts")]
    RetriesExhausted(usize),
    #[error("kernel dimensions do not come from a rank two free module (degree {degree})")]
    InconsistentKernel { degree: usize },
    #[error("expected a ring in {want} variables, got {got}")]
    WrongVariableCount { want: usize, got: usize },
    #[error("the linear form is zero")]
    ZeroLinearForm,
    #[error("this computation needs characteristic zero")]
    NeedsCharacteristicZero,
    #[error(transparent)]
    Ideal(#[from] IdealError),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct CiDegrees([u32; 3]);

impl CiDegrees {
    pub fn new(d1: u32, d2: u32, d3: u32) -> Result<Self, CiError> {
        let d = [d1, d2, d3];
        if d1 < 2 || d1 > d2 || d2 > d3 {
            return Err(CiError::BadDegrees(d));
        }
        Ok(CiDegrees(d))
    }

    /// Sorts the input before validating.
    pub fn sorted(mut d: [u32; 3]) -> Result<Self, CiError> {
        d.sort_unstable();
        Self::new(d[0], d[1], d[2])
    }

    pub fn get(self) -> [u32; 3] {
        self.0
    }

    pub fn sum(self) -> u32 {
        self.0.iter().sum()
    }

    /// `d3 <= d1 + d2 - 2`: the restricted ideal keeps three minimal generators.
    pub fn three_generated_restriction(self) -> bool {
        let [a, b, c] = self.0;
        c + 2 <= a + b
    }
}

/// Uniform degrees `2 <= d1 <= d2 <= d3 <= max`.
pub fn random_ci_degrees<R: Rng>(rng: &mut R, max: u32) -> CiDegrees {
    let mut d = [0u32; 3];
    for x in &mut d {
        *x = rng.gen_range(2..=max);
    }
    CiDegrees::sorted(d).expect("degrees in range")
}

/// Twists `(e1, e2)`, `e1 >= e2`, of a rank two free module `R(e1) + R(e2)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct SplittingType {
    pub e1: i64,
    pub e2: i64,
}

impl SplittingType {
    pub fn sum(self) -> i64 {
        self.e1 + self.e2
    }
}

impl core::fmt::Display for SplittingType {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        write!(f, "({}, {})", self.e1, self.e2)
    }
}

/// The generic splitting type for degrees with `d3 < d1 + d2 + 1`.
pub fn predicted_splitting_type(degs: CiDegrees) -> Result<SplittingType, CiError> {
    let [a, b, c] = degs.get();
    if c > a + b {
        return Err(CiError::HypothesisViolated(degs.get()));
    }
    let total = (a + b + c) as i64;
    let d = total / 2;
    Ok(if total % 2 == 0 {
        SplittingType { e1: -d, e2: -d }
    } else {
        SplittingType { e1: -d, e2: -d - 1 }
    })
}

/// True when the quotient has the Hilbert function of a complete intersection of degrees `degs`.
pub fn is_complete_intersection(ideal: &IdealSpan, degs: &[u32]) -> bool {
    complete_intersection_algebra(ideal, degs).is_some()
}

/// The quotient algebra, if `ideal` is a complete intersection of degrees `degs`.
pub fn complete_intersection_algebra(ideal: &IdealSpan, degs: &[u32]) -> Option<GradedAlgebra> {
    let want = complete_intersection_hf(degs);
    if ideal.ring().num_vars() != degs.len() {
        return None;
    }
    GradedAlgebra::with_cap(ideal, want.len() - 1)
        .ok()
        .filter(|a| a.hilbert_function().values() == want.as_slice())
}

/// Three dense random forms of degrees `degs` in a three-variable ring, retried
/// until they form a complete intersection.
pub fn random_complete_intersection<R: Rng>(
    rng: &mut R,
    ring: &Arc<Ring>,
    degs: CiDegrees,
    form_bound: u64,
) -> Result<IdealSpan, CiError> {
    random_ci_with_algebra(rng, ring, degs, form_bound).map(|(i, _)| i)
}

fn random_ci_with_algebra<R: Rng>(
    rng: &mut R,
    ring: &Arc<Ring>,
    degs: CiDegrees,
    form_bound: u64,
) -> Result<(IdealSpan, GradedAlgebra), CiError> {
    const RETRIES: usize = 20;
    check_vars(ring, 3)?;
    for _ in 0..RETRIES {
        let gens = degs.get().iter().map(|&d| random_dense_form(rng, ring, d, form_bound)).collect();
        let ideal = IdealSpan::new(ring, gens)?;
        if let Some(a) = complete_intersection_algebra(&ideal, &degs.get()) {
            return Ok((ideal, a));
        }
    }
    Err(CiError::RetriesExhausted(RETRIES))
}

fn check_vars(ring: &Ring, want: usize) -> Result<(), CiError> {
    if ring.num_vars() != want {
        return Err(CiError::WrongVariableCount {
            want,
            got: ring.num_vars(),
        });
    }
    Ok(())
}

/// Restricts an ideal to the hyperplane `sum c_i x_i = 0` by eliminating the
/// last variable with a nonzero coefficient. Returns the ideal in the ring
/// without that variable.
pub fn restrict_mod_linear(ideal: &IdealSpan, coeffs: &[Scalar]) -> Result<IdealSpan, CiError> {
    let ring = ideal.ring();
    check_vars(ring, coeffs.len())?;
    let pivot = coeffs.iter().rposition(|c| !c.is_zero()).ok_or(CiError::ZeroLinearForm)?;
    let target = Arc::new(ring.drop_var(pivot).expect("names stay valid"));
    let inv = coeffs[pivot].inv().expect("nonzero pivot");
    let mut images = Vec::with_capacity(coeffs.len());
    for i in 0..coeffs.len() {
        if i == pivot {
            let rest: Vec<Scalar> = coeffs
                .iter()
                .enumerate()
                .filter(|&(j, _)| j != pivot)
                .map(|(_, c)| -(c * &inv))
                .collect();
            images.push(Polynomial::linear_form(&target, &rest));
        } else {
            let j = if i < pivot { i } else { i - 1 };
            images.push(Polynomial::var(&target, j));
        }
    }
    let gens = ideal.gens().iter().map(|g| g.substitute(&target, &images)).collect();
    Ok(IdealSpan::new(&target, gens)?)
}

/// `max(0, t + e + 1)`: the dimension of `K[x, y](e)` in degree `t`.
fn twisted_dim(t: i64, e: i64) -> i64 {
    (t + e + 1).max(0)
}

/// Dimension of the degree-`t` kernel of `(a_1, .., a_k): sum R(-d_i) -> R`
/// for a two-variable ideal, read off from `dim I_t`.
pub fn syzygy_kernel_dims(ibar: &IdealSpan, degs: &[u32], t_max: usize) -> Vec<i64> {
    (0..=t_max)
        .map(|t| {
            let domain: i64 = degs.iter().map(|&d| twisted_dim(t as i64, -(d as i64))).sum();
            domain - ibar.dim(t) as i64
        })
        .collect()
}

/// Splitting type of the syzygy module of three forms of degrees `degs` in two variables.
pub fn syzygy_splitting_type(ibar: &IdealSpan, degs: &[u32]) -> Result<SplittingType, CiError> {
    check_vars(ibar.ring(), 2)?;
    let total: u32 = degs.iter().sum();
    let t_max = total as usize + 1;
    let k = syzygy_kernel_dims(ibar, degs, t_max);
    let first = k.iter().position(|&v| v > 0).ok_or(CiError::InconsistentKernel { degree: t_max })?;
    let e1 = -(first as i64);
    let e2 = if k[first] >= 2 {
        e1
    } else {
        let second = (first..=t_max)
            .find(|&t| k[t] > twisted_dim(t as i64, e1))
            .ok_or(CiError::InconsistentKernel { degree: t_max })?;
        -(second as i64)
    };
    for (t, &v) in k.iter().enumerate() {
        if v != twisted_dim(t as i64, e1) + twisted_dim(t as i64, e2) {
            return Err(CiError::InconsistentKernel { degree: t });
        }
    }
    Ok(SplittingType { e1, e2 })
}

/// Number of minimal generators of an ideal whose generators have degree at most `d_max`.
pub fn minimal_generator_total(ideal: &IdealSpan) -> usize {
    let d_max = ideal.max_generator_degree().unwrap_or(0) as usize;
    minimal_generator_counts(ideal, d_max).iter().sum()
}

/// Expected `mu` of a general restriction.
pub fn predicted_mu_bar(degs: CiDegrees) -> usize {
    if degs.three_generated_restriction() {
        3
    } else {
        2
    }
}

fn add_twist(table: &mut BettiTable, i: usize, twist: i64) {
    let j = -twist - i as i64;
    assert!(j >= 0, "negative row");
    table.add(i, j as usize, 1);
}

/// Predicted Betti table of `R/(I + (L))` for a general complete intersection and line.
pub fn predicted_iplusl_table(degs: CiDegrees) -> Result<BettiTable, CiError> {
    let [a, b, c] = degs.get().map(|d| d as i64);
    let mut t = BettiTable::new(3);
    t.set(0, 0, 1);
    add_twist(&mut t, 1, -1);
    if degs.three_generated_restriction() {
        let st = predicted_splitting_type(degs)?;
        for d in [a, b, c] {
            add_twist(&mut t, 1, -d);
            add_twist(&mut t, 2, -d - 1);
        }
        for e in [st.e1, st.e2] {
            add_twist(&mut t, 2, e);
            add_twist(&mut t, 3, e - 1);
        }
    } else {
        // I + (L) = (L, F_1, F_2) is a complete intersection of degrees 1, d1, d2.
        for d in [a, b] {
            add_twist(&mut t, 1, -d);
            add_twist(&mut t, 2, -d - 1);
        }
        add_twist(&mut t, 2, -a - b);
        add_twist(&mut t, 3, -a - b - 1);
    }
    Ok(t)
}

/// Options shared by the trial drivers.
#[derive(Debug, Clone)]
pub struct CiOptions {
    pub characteristic: u32,
    /// Bound on the coefficients of the random forms.
    pub form_bound: u64,
    /// Bound on the coefficients of the random line.
    pub line_bound: u64,
    pub seed: u64,
}

impl Default for CiOptions {
    fn default() -> Self {
        CiOptions {
            characteristic: 0,
            form_bound: 10,
            line_bound: 100,
            seed: 0,
        }
    }
}

/// One complete intersection with a random line, reproducible from `(seed, stream)`.
#[derive(Debug, Clone)]
pub struct CiSample {
    pub stream: u64,
    pub degs: CiDegrees,
    pub ideal: IdealSpan,
    pub algebra: GradedAlgebra,
    pub line: Vec<Scalar>,
}

pub fn ci_ring(characteristic: u32) -> Arc<Ring> {
    Arc::new(Ring::with_var_names(&["x", "y", "z"], characteristic).expect("valid ring"))
}

pub fn sample_ci(degs: CiDegrees, opts: &CiOptions, stream: u64) -> Result<CiSample, CiError> {
    let ring = ci_ring(opts.characteristic);
    let mut rng = trial_rng(opts.seed, stream);
    let (ideal, algebra) = random_ci_with_algebra(&mut rng, &ring, degs, opts.form_bound)?;
    let line = crate::random::random_linear_coefficients(&mut rng, 3, opts.line_bound, ring.characteristic());
    Ok(CiSample {
        stream,
        degs,
        ideal,
        algebra,
        line,
    })
}

/// What a restriction to the sampled line looks like.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RestrictionReport {
    pub splitting: SplittingType,
    pub predicted_splitting: Option<SplittingType>,
    pub mu_bar: usize,
    pub predicted_mu_bar: usize,
    pub iplusl_table: BettiTable,
    pub predicted_table: BettiTable,
}

impl RestrictionReport {
    pub fn splitting_ok(&self) -> bool {
        self.predicted_splitting.is_none_or(|p| p == self.splitting)
    }

    pub fn degree_sum_ok(&self, degs: CiDegrees) -> bool {
        self.splitting.sum() == -(degs.sum() as i64)
    }

    pub fn mu_ok(&self) -> bool {
        self.mu_bar == self.predicted_mu_bar
    }

    pub fn table_ok(&self) -> bool {
        self.iplusl_table == self.predicted_table
    }
}

pub fn check_restriction(sample: &CiSample) -> Result<RestrictionReport, CiError> {
    let degs = sample.degs;
    let ibar = restrict_mod_linear(&sample.ideal, &sample.line)?;
    let splitting = syzygy_splitting_type(&ibar, &degs.get())?;
    let ring = sample.ideal.ring();
    let l = Polynomial::linear_form(ring, &sample.line);
    let with_line = sample.ideal.sum(&IdealSpan::new(ring, vec![l])?);
    let iplusl_table = koszul_betti_table(&GradedAlgebra::new(&with_line)?);
    Ok(RestrictionReport {
        splitting,
        predicted_splitting: predicted_splitting_type(degs).ok(),
        mu_bar: minimal_generator_total(&ibar),
        predicted_mu_bar: predicted_mu_bar(degs),
        iplusl_table,
        predicted_table: predicted_iplusl_table(degs)?,
    })
}

/// `mu` of the restriction for `trials` samples, paired with the prediction.
pub fn check_mu_bar(degs: CiDegrees, trials: u64, opts: &CiOptions) -> Result<Vec<(usize, usize)>, CiError> {
    (0..trials)
        .map(|t| {
            let s = sample_ci(degs, opts, t)?;
            let ibar = restrict_mod_linear(&s.ideal, &s.line)?;
            Ok((minimal_generator_total(&ibar), predicted_mu_bar(degs)))
        })
        .collect()
}

/// Koszul table of `R/(I + L)` against the prediction for `trials` samples.
pub fn check_iplusl(degs: CiDegrees, trials: u64, opts: &CiOptions) -> Result<Vec<(BettiTable, BettiTable)>, CiError> {
    (0..trials)
        .map(|t| {
            let r = check_restriction(&sample_ci(degs, opts, t)?)?;
            Ok((r.iplusl_table, r.predicted_table))
        })
        .collect()
}

/// A (4,4,4) complete intersection with three lines along which the
/// restriction has a linear syzygy.
///
/// `F_1` and `F_2` pass through three common points `P_{i,1..3}` on each line
/// `lambda_i`, so their restrictions share a cubic factor. `F_3` passes through
/// three other points `R_{i,1..3}` per line. Four points per line would force
/// every quartic of the system to contain all three lines.
#[derive(Debug, Clone)]
pub struct JumpingLineCi {
    pub ideal: IdealSpan,
    /// Coefficients of the linear forms cutting out the three lines.
    pub lines: [Vec<Scalar>; 3],
    /// Resampling rounds needed before the configuration was nondegenerate.
    pub resamples: usize,
}

fn rational(v: i64) -> Scalar {
    Scalar::Rational(BigRational::from_integer(v.into()))
}

fn cross(a: [i64; 3], b: [i64; 3]) -> [i64; 3] {
    [a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]]
}

/// Basis of the quartics through `points` (projective, integral).
pub fn quartics_through(ring: &Arc<Ring>, points: &[[i64; 3]]) -> Vec<Polynomial> {
    let ch = ring.characteristic();
    let monos = monomials_of_degree(3, 4);
    let rows: Vec<Vec<Scalar>> = points
        .iter()
        .map(|p| {
            monos
                .iter()
                .map(|m| {
                    let v: i64 = m.exps().iter().zip(p).map(|(&e, &x)| x.pow(e)).product();
                    rational(v)
                })
                .collect()
        })
        .collect();
    Matrix::from_rows(rows, monos.len(), ch)
        .kernel()
        .into_iter()
        .map(|v| Polynomial::from_terms(ring, monos.iter().cloned().zip(v)))
        .collect()
}

fn random_combination<R: Rng>(rng: &mut R, ring: &Arc<Ring>, basis: &[Polynomial]) -> Polynomial {
    let mut f = Polynomial::zero(ring);
    for b in basis {
        let c = rational(rng.gen_range(-20..=20));
        f = &f + &b.scale(&c);
    }
    f
}

/// Three random lines through pairs of small integer points, each with
/// `per_line` distinct points on it. Returns the line forms and the points.
pub fn random_lines_with_points<R: Rng>(rng: &mut R, per_line: usize) -> ([[i64; 3]; 3], [Vec<[i64; 3]>; 3]) {
    let params: Vec<i64> = (-8..=8).collect();
    loop {
        let mut lines = [[0i64; 3]; 3];
        let mut points: [Vec<[i64; 3]>; 3] = Default::default();
        for i in 0..3 {
            let a: [i64; 3] = core::array::from_fn(|_| rng.gen_range(-3..=3));
            let b: [i64; 3] = core::array::from_fn(|_| rng.gen_range(-3..=3));
            lines[i] = cross(a, b);
            points[i] = params
                .choose_multiple(rng, per_line)
                .map(|&t| core::array::from_fn(|k| a[k] + t * b[k]))
                .collect();
        }
        let distinct = lines.iter().all(|l| *l != [0, 0, 0])
            && (0..3).all(|i| (i + 1..3).all(|j| cross(lines[i], lines[j]) != [0, 0, 0]));
        if distinct {
            return (lines, points);
        }
    }
}

/// Builds the jumping-line configuration over the rationals.
pub fn jumping_line_ci<R: Rng>(rng: &mut R, ring: &Arc<Ring>) -> Result<JumpingLineCi, CiError> {
    const RETRIES: usize = 50;
    check_vars(ring, 3)?;
    if !ring.characteristic().is_zero() {
        return Err(CiError::NeedsCharacteristicZero);
    }
    for resamples in 0..RETRIES {
        // Labelled points per line: P1 P2 P3 R1 R2 R3.
        let (lines, labelled) = random_lines_with_points(rng, 6);
        let pick = |idx: &[usize]| -> Vec<[i64; 3]> {
            labelled.iter().flat_map(|pts| idx.iter().map(|&i| pts[i])).collect()
        };
        let p = quartics_through(ring, &pick(&[0, 1, 2]));
        let r = quartics_through(ring, &pick(&[3, 4, 5]));
        if p.len() != 6 || r.len() != 6 {
            continue;
        }
        let gens = vec![
            random_combination(rng, ring, &p),
            random_combination(rng, ring, &p),
            random_combination(rng, ring, &r),
        ];
        let ideal = IdealSpan::new(ring, gens)?;
        if !is_complete_intersection(&ideal, &[4, 4, 4]) {
            continue;
        }
        return Ok(JumpingLineCi {
            ideal,
            lines: core::array::from_fn(|i| lines[i].iter().map(|&v| rational(v)).collect()),
            resamples,
        });
    }
    Err(CiError::RetriesExhausted(RETRIES))
}

/// `(x^a, y^b, z^c)`.
pub fn monomial_ci(ring: &Arc<Ring>, exps: [u32; 3]) -> IdealSpan {
    let gens = (0..3)
        .map(|k| {
            let mut e = vec![0; 3];
            e[k] = exps[k];
            Polynomial::monomial(ring, Monomial::new(e))
        })
        .collect();
    IdealSpan::new(ring, gens).expect("monomials are homogeneous")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::parse_polynomial;

    fn ideal(ring: &Arc<Ring>, gens: &[&str]) -> IdealSpan {
        IdealSpan::new(ring, gens.iter().map(|g| parse_polynomial(g, ring).unwrap()).collect()).unwrap()
    }

    fn degs(a: u32, b: u32, c: u32) -> CiDegrees {
        CiDegrees::new(a, b, c).unwrap()
    }

    fn q(v: i64) -> Scalar {
        rational(v)
    }

    #[test]
    fn splitting_predictions() {
        assert_eq!(predicted_splitting_type(degs(4, 4, 4)).unwrap(), SplittingType { e1: -6, e2: -6 });
        assert_eq!(predicted_splitting_type(degs(3, 4, 4)).unwrap(), SplittingType { e1: -5, e2: -6 });
        assert_eq!(predicted_splitting_type(degs(2, 2, 2)).unwrap(), SplittingType { e1: -3, e2: -3 });
        assert!(predicted_splitting_type(degs(2, 2, 5)).is_err());
        assert!(CiDegrees::new(3, 2, 2).is_err());
        assert!(CiDegrees::new(1, 2, 2).is_err());
    }

    #[test]
    fn restriction_by_substitution() {
        let r = ci_ring(0);
        let i = ideal(&r, &["x^2", "y^2", "z^2"]);
        let by_z = restrict_mod_linear(&i, &[q(0), q(0), q(1)]).unwrap();
        assert_eq!(by_z.ring().var_names(), &["x", "y"]);
        let want = ideal(by_z.ring(), &["x^2", "y^2"]);
        assert!(by_z.is_subset_of(&want) && want.is_subset_of(&by_z));
        let by_sum = restrict_mod_linear(&i, &[q(1), q(1), q(1)]).unwrap();
        assert_eq!(by_sum.gens()[2], parse_polynomial("x^2 + 2*x*y + y^2", by_sum.ring()).unwrap());
        assert_eq!(minimal_generator_total(&by_sum), 3);
        assert_eq!(
            syzygy_splitting_type(&by_sum, &[2, 2, 2]).unwrap(),
            SplittingType { e1: -3, e2: -3 }
        );
        assert!(matches!(restrict_mod_linear(&i, &[q(0), q(0), q(0)]), Err(CiError::ZeroLinearForm)));
    }

    #[test]
    fn validator_accepts_ci_and_rejects_non_ci() {
        let r = ci_ring(0);
        assert!(is_complete_intersection(&monomial_ci(&r, [2, 3, 4]), &[2, 3, 4]));
        assert!(!is_complete_intersection(&ideal(&r, &["x^2", "x*y", "z^2"]), &[2, 2, 2]));
        let mut rng = trial_rng(5, 0);
        let i = random_complete_intersection(&mut rng, &r, degs(2, 2, 2), 10).unwrap();
        assert_eq!(i.hilbert_function_direct(4).unwrap(), vec![1, 3, 3, 1]);
    }

    #[test]
    fn small_restrictions_match_predictions() {
        let opts = CiOptions::default();
        for d in [degs(2, 2, 2), degs(2, 2, 5), degs(3, 4, 4), degs(2, 3, 3)] {
            let rep = check_restriction(&sample_ci(d, &opts, 0).unwrap()).unwrap();
            assert!(rep.splitting_ok() && rep.degree_sum_ok(d), "{d:?} {rep:?}");
            assert!(rep.mu_ok(), "{d:?} {rep:?}");
            assert!(rep.table_ok(), "{d:?}\n{}\n{}", rep.iplusl_table.diagram(), rep.predicted_table.diagram());
        }
    }

    #[test]
    fn predicted_table_for_quadrics() {
        let t = predicted_iplusl_table(degs(2, 2, 2)).unwrap();
        assert_eq!((t.get(1, 0), t.get(1, 1)), (1, 3));
        assert_eq!((t.get(2, 1), t.get(3, 1)), (5, 2));
        assert_eq!(t.total(1) + t.total(2) + t.total(3), 4 + 5 + 2);
    }

    #[test]
    fn four_points_per_line_force_the_lines_into_every_quartic() {
        let r = ci_ring(0);
        let mut rng = trial_rng(2, 0);
        let (lines, pts) = random_lines_with_points(&mut rng, 4);
        let all: Vec<[i64; 3]> = pts.iter().flatten().cloned().collect();
        let system = quartics_through(&r, &all);
        assert_eq!(system.len(), 3);
        let cubic = lines
            .iter()
            .map(|l| Polynomial::linear_form(&r, &l.map(rational)))
            .fold(Polynomial::constant(&r, q(1)), |acc, l| &acc * &l);
        let multiples = IdealSpan::new(&r, vec![cubic]).unwrap();
        assert!(system.iter().all(|f| multiples.contains(f)));
    }

    #[test]
    fn jumping_lines_have_linear_syzygies() {
        let r = ci_ring(0);
        let mut rng = trial_rng(1, 0);
        let j = jumping_line_ci(&mut rng, &r).unwrap();
        for line in &j.lines {
            let ibar = restrict_mod_linear(&j.ideal, line).unwrap();
            let st = syzygy_splitting_type(&ibar, &[4, 4, 4]).unwrap();
            assert!(st.e1 >= -5, "{st}");
            assert_eq!(st.sum(), -12);
        }
        let general = [q(3), q(-7), q(11)];
        let ibar = restrict_mod_linear(&j.ideal, &general).unwrap();
        assert_eq!(syzygy_splitting_type(&ibar, &[4, 4, 4]).unwrap(), SplittingType { e1: -6, e2: -6 });
    }
}
