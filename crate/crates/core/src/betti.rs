//! Graded Betti numbers.
//!
//! Entry `(i, j)` of a [`BettiTable`] is `dim [Tor_i(M, K)]_{i+j}`. Tables are
//! computed from Koszul homology, from the Eliahou–Kervaire formula for stable
//! monomial ideals, or bounded from the Hilbert function alone.
//!
//! Exterior basis elements `e_S` are subsets of the variables stored as
//! bitmasks; within a fixed size they are listed in increasing numeric order,
//! which is colex order.

use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::sync::Arc;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt::Write;

use crate::algebra::{GradedAlgebra, GradedModule};
use crate::hilbert::{binomial, wlp_admissible, HilbertFunction, Rejection};
use crate::ideal::{lex_segment_ideal, IdealError, MonomialIdeal};
use crate::linalg::rank_of_rows;
use crate::ring::Ring;
use crate::scalar::Scalar;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum BettiError {
    #[error("the monomial ideal is not stable")]
    NotStable,
    #[error(transparent)]
    Ideal(#[from] IdealError),
    #[error("Hilbert function is not admissible: {0}")]
    Inadmissible(#[from] Rejection),
}

/// Graded Betti numbers `beta_{i,j}`, stored sparsely (zeros are omitted).
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct BettiTable {
    num_vars: usize,
    entries: BTreeMap<(usize, usize), u64>,
}

impl BettiTable {
    pub fn new(num_vars: usize) -> Self {
        BettiTable {
            num_vars,
            entries: BTreeMap::new(),
        }
    }

    pub fn num_vars(&self) -> usize {
        self.num_vars
    }

    pub fn get(&self, i: usize, j: usize) -> u64 {
        self.entries.get(&(i, j)).copied().unwrap_or(0)
    }

    pub fn set(&mut self, i: usize, j: usize, value: u64) {
        if value == 0 {
            self.entries.remove(&(i, j));
        } else {
            self.entries.insert((i, j), value);
        }
    }

    pub fn add(&mut self, i: usize, j: usize, value: u64) {
        let v = self.get(i, j) + value;
        self.set(i, j, v);
    }

    /// Nonzero entries `((i, j), beta)` ordered by `(i, j)`.
    pub fn entries(&self) -> impl Iterator<Item = ((usize, usize), u64)> + '_ {
        self.entries.iter().map(|(&k, &v)| (k, v))
    }

    pub fn max_j(&self) -> usize {
        self.entries.keys().map(|&(_, j)| j).max().unwrap_or(0)
    }

    /// Total Betti number in homological degree `i`.
    pub fn total(&self, i: usize) -> u64 {
        self.entries().filter(|((a, _), _)| *a == i).map(|(_, v)| v).sum()
    }

    /// Entrywise `self <= other`.
    pub fn is_dominated_by(&self, other: &BettiTable) -> bool {
        self.entries().all(|((i, j), v)| v <= other.get(i, j))
    }

    /// Entries where the two tables differ: `((i, j), self, other)`.
    pub fn differences(&self, other: &BettiTable) -> Vec<((usize, usize), u64, u64)> {
        let keys: alloc::collections::BTreeSet<(usize, usize)> =
            self.entries.keys().chain(other.entries.keys()).copied().collect();
        keys.into_iter()
            .filter_map(|(i, j)| {
                let (a, b) = (self.get(i, j), other.get(i, j));
                (a != b).then_some(((i, j), a, b))
            })
            .collect()
    }

    /// Coefficients of `sum_{i,j} (-1)^i beta_{i,j} t^{i+j}`.
    pub fn euler_polynomial(&self) -> Vec<i64> {
        let mut out = Vec::new();
        for ((i, j), v) in self.entries() {
            let k = i + j;
            if out.len() <= k {
                out.resize(k + 1, 0);
            }
            let v = v as i64;
            out[k] += if i % 2 == 0 { v } else { -v };
        }
        trim(out)
    }

    /// Betti diagram: one row per `j`, one column per `i`, zeros shown as `.`.
    pub fn diagram(&self) -> String {
        let mut out = String::new();
        let width = self
            .entries()
            .map(|(_, v)| decimal_width(v))
            .max()
            .unwrap_or(1)
            .max(decimal_width(self.num_vars as u64));
        let _ = write!(out, "{:>4} ", "");
        for i in 0..=self.num_vars {
            let _ = write!(out, " {i:>width$}");
        }
        out.push('\n');
        for j in 0..=self.max_j() {
            let _ = write!(out, "{j:>4}:");
            for i in 0..=self.num_vars {
                let v = self.get(i, j);
                if v == 0 {
                    let _ = write!(out, " {:>width$}", ".");
                } else {
                    let _ = write!(out, " {v:>width$}");
                }
            }
            out.push('\n');
        }
        out
    }
}

fn decimal_width(v: u64) -> usize {
    let mut w = 1;
    let mut x = v;
    while x >= 10 {
        x /= 10;
        w += 1;
    }
    w
}

fn trim(mut v: Vec<i64>) -> Vec<i64> {
    while v.last() == Some(&0) {
        v.pop();
    }
    v
}

/// Coefficients of `H_A(t) (1 - t)^N`.
pub fn hilbert_numerator(hf: &[u64], num_vars: usize) -> Vec<i64> {
    let mut acc: Vec<i64> = hf.iter().map(|&v| v as i64).collect();
    for _ in 0..num_vars {
        let mut next = vec![0i64; acc.len() + 1];
        for (k, &a) in acc.iter().enumerate() {
            next[k] += a;
            next[k + 1] -= a;
        }
        acc = next;
    }
    trim(acc)
}

/// Whether `sum (-1)^i beta_{i,j} t^{i+j} = H(t) (1 - t)^N` holds exactly.
pub fn euler_identity_holds(table: &BettiTable, hf: &[u64]) -> bool {
    table.euler_polynomial() == hilbert_numerator(hf, table.num_vars())
}

/// Subsets of `{0, .., n-1}` of size `k` as bitmasks in colex order.
pub fn exterior_basis(n: usize, k: usize) -> Vec<u32> {
    (0u32..(1u32 << n))
        .filter(|m| m.count_ones() as usize == k)
        .collect()
}

/// Matrix of the Koszul differential `wedge^i (x) M_j -> wedge^{i-1} (x) M_{j+1}`.
fn koszul_differential(m: &GradedModule, i: usize, j: usize) -> (Vec<Vec<Scalar>>, usize) {
    let n = m.num_vars();
    let ch = m.characteristic();
    let src = exterior_basis(n, i);
    let dst = exterior_basis(n, i - 1);
    let dst_index: BTreeMap<u32, usize> = dst.iter().enumerate().map(|(k, &s)| (s, k)).collect();
    let (mj, mj1) = (m.dim(j), m.dim(j + 1));
    let ncols = dst.len() * mj1;
    let mut rows = vec![vec![Scalar::zero(ch); ncols]; src.len() * mj];
    if ncols == 0 {
        return (rows, 0);
    }
    for (si, &s) in src.iter().enumerate() {
        for k in 0..n {
            if s & (1 << k) == 0 {
                continue;
            }
            let below = (s & ((1u32 << k) - 1)).count_ones();
            let negative = below % 2 == 1;
            let col0 = dst_index[&(s & !(1 << k))] * mj1;
            let action = m.action(k, j);
            for r in 0..mj {
                for (c, v) in action.row(r).iter().enumerate() {
                    if !v.is_zero() {
                        rows[si * mj + r][col0 + c] = if negative { -v } else { v.clone() };
                    }
                }
            }
        }
    }
    (rows, ncols)
}

/// Betti numbers of a finite-length graded module from Koszul homology:
/// `beta_{i,j} = dim C_{i,j} - rank d_{i,j} - rank d_{i+1,j-1}` with
/// `C_{i,j} = wedge^i (x) M_j`.
pub fn koszul_betti_module(m: &GradedModule) -> BettiTable {
    let n = m.num_vars();
    let mut table = BettiTable::new(n);
    let Some(top) = m.top_degree() else {
        return table;
    };
    let mut ranks: BTreeMap<(usize, usize), usize> = BTreeMap::new();
    let mut rank = |i: usize, j: usize| -> usize {
        if i == 0 || i > n || m.dim(j) == 0 || m.dim(j + 1) == 0 {
            return 0;
        }
        *ranks.entry((i, j)).or_insert_with(|| {
            let (rows, ncols) = koszul_differential(m, i, j);
            rank_of_rows(rows, ncols)
        })
    };
    for i in 0..=n {
        for j in 0..=top + 1 {
            let dim_c = binomial(n as u64, i as u64) as usize * m.dim(j);
            if dim_c == 0 {
                continue;
            }
            let down = rank(i, j);
            let up = if j == 0 { 0 } else { rank(i + 1, j - 1) };
            table.set(i, j, (dim_c - down - up) as u64);
        }
    }
    table
}

/// Betti table of `A` over its ring, by Koszul homology.
pub fn koszul_betti_table(a: &GradedAlgebra) -> BettiTable {
    koszul_betti_module(&a.as_module())
}

/// Betti table of `R/J` for a stable monomial ideal `J`: each minimal generator
/// `u` of degree `q` contributes `C(m(u) - 1, i)` to `beta_{i+1, q-1}`, where
/// `m(u)` is the 1-based index of the last variable dividing `u`.
pub fn eliahou_kervaire_table(j: &MonomialIdeal) -> Result<BettiTable, BettiError> {
    if !j.is_stable() {
        return Err(BettiError::NotStable);
    }
    let mut table = BettiTable::new(j.ring().num_vars());
    table.set(0, 0, 1);
    for u in j.gens() {
        let q = u.degree() as usize;
        let m = u.max_var().map_or(0, |k| k + 1);
        if q == 0 {
            // J = R: the quotient is zero.
            return Ok(BettiTable::new(j.ring().num_vars()));
        }
        for i in 0..m {
            table.add(i + 1, q - 1, binomial(m as u64 - 1, i as u64));
        }
    }
    Ok(table)
}

/// `beta_{i,j}(h, R)`: Betti numbers of the lex-segment ideal with Hilbert function `h`.
pub fn lex_betti_numbers(h: &HilbertFunction, ring: &Arc<Ring>) -> Result<BettiTable, BettiError> {
    eliahou_kervaire_table(&lex_segment_ideal(h, ring)?)
}

/// Upper bounds for the Betti numbers of any algebra with the weak Lefschetz
/// property and Hilbert function `h`, in a ring with `N = n + 1` variables.
pub fn betti_bounds(h: &HilbertFunction, ring: &Ring) -> Result<BettiTable, BettiError> {
    let num_vars = ring.num_vars();
    let ch = ring.characteristic();
    let profile = wlp_admissible(h, num_vars)?;
    let n = num_vars - 1;
    let hbar = HilbertFunction::new(profile.hbar.clone()).expect("positive values starting at 1");
    let base = if n == 0 {
        let mut t = BettiTable::new(0);
        t.set(0, 0, 1);
        t
    } else {
        let rbar = Arc::new(Ring::new(n, ch.value()).expect("valid ring"));
        lex_betti_numbers(&hbar, &rbar)?
    };
    let (a, d) = (profile.a, profile.d);
    let drop_after = |j: usize| -> u64 {
        let delta = h.get(j + 1) as i64 - h.get(j) as i64;
        (-delta).max(0) as u64
    };
    let socle_term = |i: usize, j: usize| -> u64 {
        if i == 0 {
            0
        } else {
            drop_after(j) * binomial(n as u64, i as u64 - 1)
        }
    };
    let mut table = BettiTable::new(num_vars);
    for j in 0..=profile.s + 1 {
        for i in 0..=num_vars {
            let v = if j < a {
                base.get(i, j)
            } else if j <= d {
                base.get(i, j) + socle_term(i, j)
            } else {
                socle_term(i, j)
            };
            table.set(i, j, v);
        }
    }
    Ok(table)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ideal::{power_of_max_ideal, IdealSpan};
    use crate::parse::parse_polynomial;

    fn hf(v: &[u64]) -> HilbertFunction {
        HilbertFunction::new(v.to_vec()).unwrap()
    }

    fn ring3() -> Arc<Ring> {
        Arc::new(Ring::with_var_names(&["x1", "x2", "x3"], 0).unwrap())
    }

    fn table(n: usize, entries: &[((usize, usize), u64)]) -> BettiTable {
        let mut t = BettiTable::new(n);
        for &((i, j), v) in entries {
            t.set(i, j, v);
        }
        t
    }

    fn lex_1331_table() -> BettiTable {
        table(
            3,
            &[
                ((0, 0), 1),
                ((1, 1), 3),
                ((1, 2), 3),
                ((1, 3), 1),
                ((2, 1), 3),
                ((2, 2), 5),
                ((2, 3), 2),
                ((3, 1), 1),
                ((3, 2), 2),
                ((3, 3), 1),
            ],
        )
    }

    #[test]
    fn lex_1331_both_routes() {
        let j = lex_segment_ideal(&hf(&[1, 3, 3, 1]), &ring3()).unwrap();
        let ek = eliahou_kervaire_table(&j).unwrap();
        assert_eq!(ek, lex_1331_table());
        let a = GradedAlgebra::new(&j.to_span()).unwrap();
        assert_eq!(koszul_betti_table(&a), lex_1331_table());
        assert!(euler_identity_holds(&ek, &[1, 3, 3, 1]));
    }

    #[test]
    fn residue_field_and_ci() {
        let r = ring3();
        let m = power_of_max_ideal(&r, 1);
        let k = GradedAlgebra::new(&m.to_span()).unwrap();
        let koszul = table(3, &[((0, 0), 1), ((1, 0), 3), ((2, 0), 3), ((3, 0), 1)]);
        assert_eq!(koszul_betti_table(&k), koszul);
        assert_eq!(eliahou_kervaire_table(&m).unwrap(), koszul);

        let gens = ["x1^2", "x2^2", "x3^2"].iter().map(|g| parse_polynomial(g, &r).unwrap()).collect();
        let ci = GradedAlgebra::new(&IdealSpan::new(&r, gens).unwrap()).unwrap();
        let t = koszul_betti_table(&ci);
        assert_eq!(t, table(3, &[((0, 0), 1), ((1, 1), 3), ((2, 2), 3), ((3, 3), 1)]));
    }

    #[test]
    fn lex_in_two_variables() {
        let r = Arc::new(Ring::with_var_names(&["x1", "x2"], 0).unwrap());
        let t = lex_betti_numbers(&hf(&[1, 2]), &r).unwrap();
        assert_eq!(t, table(2, &[((0, 0), 1), ((1, 1), 3), ((2, 1), 2)]));
    }

    #[test]
    fn bounds_for_1331() {
        let t = betti_bounds(&hf(&[1, 3, 3, 1]), &ring3()).unwrap();
        let want = table(
            3,
            &[
                ((0, 0), 1),
                ((1, 1), 3),
                ((2, 1), 2),
                ((1, 2), 2),
                ((2, 2), 4),
                ((3, 2), 2),
                ((1, 3), 1),
                ((2, 3), 2),
                ((3, 3), 1),
            ],
        );
        assert_eq!(t, want);
        assert!(euler_identity_holds(&t, &[1, 3, 3, 1]));
    }

    #[test]
    fn bounds_for_trivial_h() {
        for n in 1..5 {
            let t = betti_bounds(&hf(&[1]), &Ring::new(n, 0).unwrap()).unwrap();
            for i in 0..=n {
                assert_eq!(t.get(i, 0), binomial(n as u64, i as u64));
            }
        }
    }

    #[test]
    fn diagram_layout() {
        let d = lex_1331_table().diagram();
        assert!(d.starts_with("      0 1 2 3\n"));
        assert!(d.contains("   2: . 3 5 2\n"));
    }

    #[test]
    fn exterior_basis_is_colex() {
        assert_eq!(exterior_basis(3, 2), vec![0b011, 0b101, 0b110]);
        assert_eq!(exterior_basis(4, 0), vec![0]);
    }
}
