//! An extremal algebra for every admissible Hilbert function.
//!
//! For `h` with profile `u_1 < ... < u_l` the ideal is
//! `I = J_1 + sum_{i >= 2} [J_i]_{>= u_i} + m^{s+1}` in `R = K[x_0, .., x_n]`,
//! where each `J_i` is extended from a monomial ideal `Jbar_i` of
//! `Rbar = K[x_1, .., x_n]` (so `x_0` never appears in its generators),
//! `Rbar/Jbar_1` has Hilbert function `hbar` and `Rbar/Jbar_i` has length
//! `h_{u_i}`. With lex-segment choices the result has the strong Lefschetz
//! property with witness `x_0`, socle type `Phi_h`, and attains the Betti
//! bounds.

use alloc::sync::Arc;
use alloc::vec;
use alloc::vec::Vec;

use rand::Rng;

use crate::algebra::{AlgebraError, GradedAlgebra};
use crate::betti::{betti_bounds, koszul_betti_table, BettiError, BettiTable};
use crate::hilbert::{macaulay_bound, positive_first_difference, wlp_admissible, HilbertFunction, Rejection, WlpProfile};
use crate::ideal::{lex_segment_ideal, power_of_max_ideal, IdealError, MonomialIdeal};
use crate::lefschetz::{failing_steps, variable_coefficients, Property};
use crate::monomial::{monomials_of_degree, Monomial};
use crate::ring::Ring;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Mode {
    /// Lex-segment levels with truncated targets; strong Lefschetz and maximal Betti numbers.
    SlpLex,
    /// Weak Lefschetz only; higher levels default to the simplest ideal of the right length.
    Basic,
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ConstructionError {
    #[error(transparent)]
    Inadmissible(#[from] Rejection),
    #[error("the construction needs h_1 = N, got h_1 = {h1} with N = {num_vars}")]
    VariableMismatch { h1: u64, num_vars: usize },
    #[error("level {level} does not contain level {prev}")]
    Containment { level: usize, prev: usize },
    #[error("level {level} has length {got}, expected {want}")]
    LevelLength { level: usize, got: u64, want: u64 },
    #[error("expected {want} level ideals, got {got}")]
    LevelCount { want: usize, got: usize },
    #[error(transparent)]
    Ideal(#[from] IdealError),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error(transparent)]
    Betti(#[from] BettiError),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Level {
    /// Truncation degree; 0 for the first level.
    pub truncation: usize,
    /// Hilbert function of `Rbar / Jbar_i`.
    pub target: Vec<u64>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConstructionPlan {
    pub h: HilbertFunction,
    pub profile: WlpProfile,
    pub num_vars: usize,
    pub mode: Mode,
    pub levels: Vec<Level>,
}

/// Target for level `i >= 2` in lex mode: the positive first difference of `min(h_t, c)`.
fn truncated_target(h: &HilbertFunction, c: u64) -> Vec<u64> {
    let g: Vec<u64> = h.values().iter().map(|&v| v.min(c)).collect();
    positive_first_difference(&HilbertFunction::new(g).expect("positive values starting at 1"))
}

pub fn plan_construction(h: &HilbertFunction, num_vars: usize, mode: Mode) -> Result<ConstructionPlan, ConstructionError> {
    let profile = wlp_admissible(h, num_vars)?;
    if profile.s >= 1 && h.get(1) != num_vars as u64 {
        return Err(ConstructionError::VariableMismatch {
            h1: h.get(1),
            num_vars,
        });
    }
    let mut levels = vec![Level {
        truncation: 0,
        target: profile.hbar.clone(),
    }];
    for &u in &profile.u[1..] {
        let c = h.get(u);
        let target = match mode {
            Mode::Basic if c as usize <= profile.hbar.len() => vec![1; c as usize],
            _ => truncated_target(h, c),
        };
        levels.push(Level { truncation: u, target });
    }
    Ok(ConstructionPlan {
        h: h.clone(),
        profile,
        num_vars,
        mode,
        levels,
    })
}

/// The assembled ideal and its quotient.
#[derive(Debug, Clone)]
pub struct Construction {
    pub plan: ConstructionPlan,
    pub ideal: MonomialIdeal,
    /// Level ideals in `Rbar`; empty when `N = 1`.
    pub levels: Vec<MonomialIdeal>,
    pub algebra: GradedAlgebra,
}

/// Ring `K[x0, .., x{N-1}]` used by the construction.
pub fn construction_ring(num_vars: usize, characteristic: u32) -> Result<Arc<Ring>, crate::ring::RingError> {
    Ring::new(num_vars, characteristic).map(Arc::new)
}

/// `Rbar = K[x1, .., x{N-1}]`, or `None` when `N = 1`.
fn rbar(num_vars: usize, characteristic: u32) -> Option<Arc<Ring>> {
    if num_vars < 2 {
        return None;
    }
    let names = (1..num_vars).map(|i| alloc::format!("x{i}")).collect();
    Some(Arc::new(Ring::with_names(names, characteristic).expect("valid names")))
}

fn extend(m: &Monomial) -> Monomial {
    let mut exps = vec![0];
    exps.extend_from_slice(m.exps());
    Monomial::new(exps)
}

/// Builds the plan with lex-segment level ideals.
pub fn build_construction(plan: &ConstructionPlan, characteristic: u32) -> Result<Construction, ConstructionError> {
    let levels = match rbar(plan.num_vars, characteristic) {
        None => Vec::new(),
        Some(r) => plan
            .levels
            .iter()
            .map(|l| lex_segment_ideal(&HilbertFunction::new(l.target.clone()).expect("valid target"), &r))
            .collect::<Result<Vec<_>, _>>()?,
    };
    build_with_levels(plan, characteristic, levels)
}

/// Builds the plan with caller-supplied level ideals of `K[x1, .., x{N-1}]`.
pub fn build_with_levels(
    plan: &ConstructionPlan,
    characteristic: u32,
    levels: Vec<MonomialIdeal>,
) -> Result<Construction, ConstructionError> {
    let ring = construction_ring(plan.num_vars, characteristic).map_err(|_| IdealError::NoLexSegment {
        reason: "invalid ring",
    })?;
    let s = plan.profile.s;
    let mut gens: Vec<Monomial> = power_of_max_ideal(&ring, s as u32 + 1).gens().to_vec();
    if plan.num_vars >= 2 {
        if levels.len() != plan.levels.len() {
            return Err(ConstructionError::LevelCount {
                want: plan.levels.len(),
                got: levels.len(),
            });
        }
        for (idx, (jbar, level)) in levels.iter().zip(&plan.levels).enumerate() {
            let want: u64 = level.target.iter().sum();
            let got = GradedAlgebra::new(&jbar.to_span())?.hilbert_function().total();
            if got != want {
                return Err(ConstructionError::LevelLength {
                    level: idx + 1,
                    got,
                    want,
                });
            }
            if idx > 0 && !levels[idx - 1].is_subset_of(jbar) {
                return Err(ConstructionError::Containment {
                    level: idx + 1,
                    prev: idx,
                });
            }
            let extended = MonomialIdeal::new(&ring, jbar.gens().iter().map(extend));
            if idx == 0 {
                gens.extend(extended.gens().iter().cloned());
            } else {
                let u = level.truncation as u32;
                gens.extend(extended.degree_part(u));
                gens.extend(extended.gens().iter().filter(|g| g.degree() > u).cloned());
            }
        }
    }
    let ideal = MonomialIdeal::new(&ring, gens);
    let algebra = GradedAlgebra::new(&ideal.to_span())?;
    Ok(Construction {
        plan: plan.clone(),
        ideal,
        levels,
        algebra,
    })
}

/// Outcome of the four checks on a constructed algebra.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConstructionReport {
    pub mode: Mode,
    pub hilbert_function: Vec<u64>,
    pub hilbert_ok: bool,
    /// Failing steps of `x_0` for the strong (lex mode) or weak (basic mode) property.
    pub x0_failing_steps: Vec<(usize, usize)>,
    pub lefschetz_ok: bool,
    pub socle_type: Vec<u64>,
    pub phi: Vec<u64>,
    pub socle_ok: bool,
    pub betti: BettiTable,
    pub bounds: BettiTable,
    /// Equality in lex mode, entrywise domination in basic mode.
    pub betti_ok: bool,
}

impl ConstructionReport {
    pub fn all_pass(&self) -> bool {
        self.hilbert_ok && self.lefschetz_ok && self.socle_ok && self.betti_ok
    }
}

pub fn verify_construction(c: &Construction) -> Result<ConstructionReport, ConstructionError> {
    let a = &c.algebra;
    let h = &c.plan.h;
    let property = match c.plan.mode {
        Mode::SlpLex => Property::Strong,
        Mode::Basic => Property::Weak,
    };
    let x0_failing_steps = failing_steps(a, property, &variable_coefficients(a, 0));
    let socle_type = a.socle_type();
    let phi = c.plan.profile.phi.clone();
    let betti = koszul_betti_table(a);
    let bounds = betti_bounds(h, a.ring())?;
    let betti_ok = match c.plan.mode {
        Mode::SlpLex => betti == bounds,
        Mode::Basic => betti.is_dominated_by(&bounds),
    };
    Ok(ConstructionReport {
        mode: c.plan.mode,
        hilbert_function: a.hilbert_function().values().to_vec(),
        hilbert_ok: a.hilbert_function() == h,
        lefschetz_ok: x0_failing_steps.is_empty(),
        x0_failing_steps,
        socle_ok: socle_type == phi,
        socle_type,
        phi,
        betti,
        bounds,
        betti_ok,
    })
}

/// Samples an admissible Hilbert function with `2 <= h_1 <= max_vars` and
/// socle degree at most `max_s`.
pub fn random_admissible_hf<R: Rng>(rng: &mut R, max_vars: usize, max_s: usize) -> HilbertFunction {
    assert!(max_vars >= 2 && max_s >= 1);
    // Fix the shape first and resample only the values; rejecting whole
    // draws would favour short sequences.
    let n = rng.gen_range(2..=max_vars) as u64;
    let s = rng.gen_range(max_s.min(2)..=max_s);
    let peak = rng.gen_range(1..=s);
    loop {
        let mut h = vec![1u64, n];
        for t in 2..=s {
            let prev = h[t - 1];
            let next = if t <= peak {
                let room = macaulay_bound(prev, (t - 1) as u32).saturating_sub(prev).clamp(1, 4);
                prev + rng.gen_range(1..=room)
            } else {
                prev - rng.gen_range(0..prev)
            };
            h.push(next);
        }
        let hf = HilbertFunction::new(h).expect("positive entries");
        if wlp_admissible(&hf, n as usize).is_ok() {
            return hf;
        }
    }
}

/// All degree-`d` monomials of the construction ring that avoid `x_0`.
pub fn monomials_without_x0(num_vars: usize, d: u32) -> Vec<Monomial> {
    monomials_of_degree(num_vars, d)
        .into_iter()
        .filter(|m| m.exps()[0] == 0)
        .collect()
}
