//! Hilbert functions: Macaulay growth, O-sequences and the shape constraints a
//! Hilbert function must satisfy for an algebra with a weak Lefschetz element.

use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

/// `C(n, k)` computed exactly; saturates at `u64::MAX` on overflow.
pub fn binomial(n: u64, k: u64) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * (n - i) as u128 / (i + 1) as u128;
        if acc > u64::MAX as u128 {
            return u64::MAX;
        }
    }
    acc as u64
}

/// The `d`-th Macaulay representation of `value` as pairs `(k_i, i)` with
/// `value = sum C(k_i, i)`, `k_d > k_{d-1} > ... >= e >= 1`.
pub fn macaulay_representation(value: u64, d: u32) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    let mut rest = value;
    let mut i = d;
    while rest > 0 && i >= 1 {
        let mut k = i as u64;
        while binomial(k + 1, i as u64) <= rest {
            k += 1;
        }
        out.push((k, i));
        rest -= binomial(k, i as u64);
        i -= 1;
    }
    out
}

/// Macaulay's upper bound for the value in degree `d + 1` following `value` in degree `d`.
pub fn macaulay_bound(value: u64, d: u32) -> u64 {
    assert!(d >= 1, "Macaulay bound needs d >= 1");
    macaulay_representation(value, d)
        .into_iter()
        .map(|(k, i)| binomial(k + 1, i as u64 + 1))
        .fold(0u64, u64::saturating_add)
}

/// Whether `seq` is the Hilbert function of some standard graded algebra.
pub fn is_o_sequence(seq: &[u64]) -> bool {
    if seq.is_empty() {
        return true;
    }
    if seq[0] != 1 {
        return false;
    }
    for d in 1..seq.len().saturating_sub(1) {
        if seq[d + 1] > macaulay_bound(seq[d], d as u32) {
            return false;
        }
    }
    // Also forbids a positive entry after a zero in degree 1.
    !(seq.len() > 2 && seq[1] == 0 && seq[2..].iter().any(|&v| v > 0))
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum HilbertError {
    #[error("a Hilbert function needs at least one value")]
    Empty,
    #[error("h_0 must be 1, got {0}")]
    BadStart(u64),
    #[error("entry {index} is zero; list only the nonzero values")]
    ZeroEntry { index: usize },
    #[error("cannot parse `{0}` as a list of positive integers")]
    Parse(String),
}

/// `(h_0, ..., h_s)` with `h_0 = 1`, every listed value positive and `h_{s+1} = 0`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct HilbertFunction {
    values: Vec<u64>,
}

impl HilbertFunction {
    pub fn new(values: Vec<u64>) -> Result<Self, HilbertError> {
        match values.first() {
            None => return Err(HilbertError::Empty),
            Some(&v) if v != 1 => return Err(HilbertError::BadStart(v)),
            _ => {}
        }
        if let Some(index) = values.iter().position(|&v| v == 0) {
            return Err(HilbertError::ZeroEntry { index });
        }
        Ok(HilbertFunction { values })
    }

    /// Drops trailing zeros before validating.
    pub fn from_dims(mut values: Vec<u64>) -> Result<Self, HilbertError> {
        while values.last() == Some(&0) {
            values.pop();
        }
        Self::new(values)
    }

    pub fn values(&self) -> &[u64] {
        &self.values
    }

    /// Socle degree `s`.
    pub fn socle_degree(&self) -> usize {
        self.values.len() - 1
    }

    /// `h_t`, zero past the socle degree.
    pub fn get(&self, t: usize) -> u64 {
        self.values.get(t).copied().unwrap_or(0)
    }

    /// `h_t - h_{t-1}` with `h_{-1} = 0`.
    pub fn delta(&self, t: usize) -> i64 {
        let prev = if t == 0 { 0 } else { self.get(t - 1) };
        self.get(t) as i64 - prev as i64
    }

    pub fn total(&self) -> u64 {
        self.values.iter().sum()
    }
}

impl fmt::Display for HilbertFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, v) in self.values.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{v}")?;
        }
        Ok(())
    }
}

impl FromStr for HilbertFunction {
    type Err = HilbertError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let values = s
            .split(',')
            .map(|p| p.trim().parse::<u64>())
            .collect::<Result<Vec<_>, _>>()
            .map_err(|_| HilbertError::Parse(String::from(s)))?;
        Self::new(values)
    }
}

/// `(1, h_1 - h_0, ...)` keeping the positive differences up to the first non-positive one.
pub fn positive_first_difference(h: &HilbertFunction) -> Vec<u64> {
    let mut out = vec![1];
    for j in 1..=h.socle_degree() {
        let diff = h.delta(j);
        if diff <= 0 {
            break;
        }
        out.push(diff as u64);
    }
    out
}

/// Why a Hilbert function cannot belong to an algebra with a weak Lefschetz element.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Rejection {
    #[error("h_1 = {h1} exceeds the number of variables {num_vars}")]
    ExceedsVariables { h1: u64, num_vars: usize },
    #[error("plateau before increase at degree {degree}")]
    PlateauBeforeIncrease { degree: usize },
    #[error("not unimodal: increase at degree {degree} after a decrease")]
    NotUnimodal { degree: usize },
    #[error("not an O-sequence: growth from degree {degree} exceeds Macaulay's bound")]
    NotOSequence { degree: usize },
    #[error("the positive part of the first difference is not an O-sequence")]
    DifferenceNotOSequence,
}

/// Combinatorial data attached to an admissible Hilbert function.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WlpProfile {
    pub h: HilbertFunction,
    /// `u_1 < u_2 < ... < u_l`: the peak, then every degree where `h` drops.
    pub u: Vec<usize>,
    /// Peak degree `u_1`.
    pub d: usize,
    /// First degree where `0 : l` can be nonzero: `u_2 - 1`, or `s` when `l = 1`.
    pub a: usize,
    pub s: usize,
    pub hbar: Vec<u64>,
    /// Coefficients of the maximal socle polynomial, indexed by degree `0..=s`.
    pub phi: Vec<u64>,
}

impl WlpProfile {
    pub fn ell(&self) -> usize {
        self.u.len()
    }

    /// Peak value `h_{u_1}`.
    pub fn sperner(&self) -> u64 {
        self.h.get(self.d)
    }
}

/// Checks the strict-increase then weak-decrease shape, the O-sequence
/// property of `h` and of its positive first difference.
pub fn wlp_admissible(h: &HilbertFunction, num_vars: usize) -> Result<WlpProfile, Rejection> {
    let s = h.socle_degree();
    if h.get(1) > num_vars as u64 {
        return Err(Rejection::ExceedsVariables {
            h1: h.get(1),
            num_vars,
        });
    }
    let d = (0..=s).find(|&i| i == s || h.get(i + 1) <= h.get(i)).unwrap_or(s);
    for t in d + 1..=s {
        if h.get(t) > h.get(t - 1) {
            let plateau = (d + 1..t).any(|k| h.get(k) == h.get(k - 1));
            return Err(if plateau {
                Rejection::PlateauBeforeIncrease { degree: t }
            } else {
                Rejection::NotUnimodal { degree: t }
            });
        }
    }
    if !is_o_sequence(h.values()) {
        let degree = (1..s)
            .find(|&k| h.get(k + 1) > macaulay_bound(h.get(k), k as u32))
            .unwrap_or(0);
        return Err(Rejection::NotOSequence { degree });
    }
    let hbar = positive_first_difference(h);
    if !is_o_sequence(&hbar) {
        return Err(Rejection::DifferenceNotOSequence);
    }
    let mut u = vec![d];
    u.extend((d + 1..=s).filter(|&t| h.get(t) < h.get(t - 1)));
    let a = if u.len() >= 2 { u[1] - 1 } else { s };
    let mut profile = WlpProfile {
        h: h.clone(),
        u,
        d,
        a,
        s,
        hbar,
        phi: Vec::new(),
    };
    profile.phi = max_socle_polynomial(&profile);
    Ok(profile)
}

/// `Phi(lambda) = sum_{i = u_1}^{s} (h_i - h_{i+1}) lambda^i` as a coefficient vector.
pub fn max_socle_polynomial(profile: &WlpProfile) -> Vec<u64> {
    let h = &profile.h;
    (0..=profile.s)
        .map(|i| {
            if i >= profile.d {
                h.get(i).saturating_sub(h.get(i + 1))
            } else {
                0
            }
        })
        .collect()
}

/// Coefficients of `prod_i (1 + t + ... + t^{d_i - 1})`, the Hilbert function
/// of a complete intersection with generator degrees `degs`.
pub fn complete_intersection_hf(degs: &[u32]) -> Vec<u64> {
    let mut acc = vec![1u64];
    for &d in degs {
        let mut next = vec![0u64; acc.len() + d as usize - 1];
        for (i, &a) in acc.iter().enumerate() {
            for j in 0..d as usize {
                next[i + j] += a;
            }
        }
        acc = next;
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;

    fn hf(v: &[u64]) -> HilbertFunction {
        HilbertFunction::new(v.to_vec()).unwrap()
    }

    #[test]
    fn binomials() {
        assert_eq!(binomial(5, 2), 10);
        assert_eq!(binomial(2, 5), 0);
        assert_eq!(binomial(0, 0), 1);
        assert_eq!(binomial(60, 30), 118264581564861424);
    }

    #[test]
    fn macaulay_bounds() {
        assert_eq!(macaulay_bound(3, 2), 4);
        assert_eq!(macaulay_bound(6, 2), 10);
        for d in 1..8 {
            assert_eq!(macaulay_bound(1, d), 1);
        }
        assert_eq!(macaulay_bound(3, 1), 6);
        assert_eq!(macaulay_representation(6, 2), vec![(4, 2)]);
        assert_eq!(macaulay_representation(5, 2), vec![(3, 2), (2, 1)]);
    }

    #[test]
    fn o_sequences() {
        assert!(is_o_sequence(&[1, 3, 3, 4]));
        assert!(!is_o_sequence(&[1, 1, 2]));
        assert!(is_o_sequence(&[1, 17]));
        assert!(!is_o_sequence(&[2, 1]));
        assert!(!is_o_sequence(&[1, 2, 0, 1]));
    }

    #[test]
    fn parse_and_display() {
        let h: HilbertFunction = "1, 3,3,1".parse().unwrap();
        assert_eq!(h.values(), &[1, 3, 3, 1]);
        assert_eq!(alloc::format!("{h}"), "1,3,3,1");
        assert_eq!("1,0".parse::<HilbertFunction>(), Err(HilbertError::ZeroEntry { index: 1 }));
        assert_eq!("2,1".parse::<HilbertFunction>(), Err(HilbertError::BadStart(2)));
        assert!("1,x".parse::<HilbertFunction>().is_err());
    }

    #[test]
    fn profile_1331() {
        let p = wlp_admissible(&hf(&[1, 3, 3, 1]), 3).unwrap();
        assert_eq!(p.u, vec![1, 3]);
        assert_eq!((p.d, p.a, p.s), (1, 2, 3));
        assert_eq!(p.hbar, vec![1, 2]);
        assert_eq!(p.phi, vec![0, 0, 2, 1]);
    }

    #[test]
    fn profile_13454() {
        let p = wlp_admissible(&hf(&[1, 3, 4, 5, 4]), 3).unwrap();
        assert_eq!(p.u, vec![3, 4]);
        assert_eq!(p.hbar, vec![1, 2, 1, 1]);
        assert_eq!(p.a, 3);
        assert_eq!(p.phi, vec![0, 0, 0, 1, 4]);
    }

    #[test]
    fn profile_13431_and_trivial() {
        let p = wlp_admissible(&hf(&[1, 3, 4, 3, 1]), 3).unwrap();
        assert_eq!(p.phi, vec![0, 0, 1, 2, 1]);
        let t = wlp_admissible(&hf(&[1]), 2).unwrap();
        assert_eq!(t.phi, vec![1]);
        assert_eq!((t.d, t.a, t.s), (0, 0, 0));
        assert_eq!(t.hbar, vec![1]);
    }

    #[test]
    fn rejections() {
        assert_eq!(
            wlp_admissible(&hf(&[1, 3, 3, 4]), 3),
            Err(Rejection::PlateauBeforeIncrease { degree: 3 })
        );
        assert_eq!(
            wlp_admissible(&hf(&[1, 3, 2, 3]), 3),
            Err(Rejection::NotUnimodal { degree: 3 })
        );
        assert_eq!(
            wlp_admissible(&hf(&[1, 4]), 3),
            Err(Rejection::ExceedsVariables { h1: 4, num_vars: 3 })
        );
        assert_eq!(
            wlp_admissible(&hf(&[1, 2, 4]), 3),
            Err(Rejection::NotOSequence { degree: 1 })
        );
        // (1,4,5,7) is an O-sequence but (1,3,1,2) is not.
        assert_eq!(
            wlp_admissible(&hf(&[1, 4, 5, 7]), 4),
            Err(Rejection::DifferenceNotOSequence)
        );
    }

    #[test]
    fn ci_series() {
        assert_eq!(complete_intersection_hf(&[2, 2, 2]), vec![1, 3, 3, 1]);
        let h = complete_intersection_hf(&[4, 4, 4]);
        assert_eq!(h.len(), 10);
        assert_eq!(h[4], 12);
        assert_eq!(h.iter().sum::<u64>(), 64);
    }
}
