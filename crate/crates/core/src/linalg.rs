//! Dense exact linear algebra: ranks, kernels and incremental reduced echelon forms.

use alloc::vec;
use alloc::vec::Vec;

use crate::scalar::{Characteristic, Scalar};

/// A dense matrix stored by rows.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Matrix {
    ncols: usize,
    rows: Vec<Vec<Scalar>>,
    ch: Characteristic,
}

impl Matrix {
    pub fn zeros(nrows: usize, ncols: usize, ch: Characteristic) -> Self {
        Matrix {
            ncols,
            rows: vec![vec![Scalar::zero(ch); ncols]; nrows],
            ch,
        }
    }

    pub fn from_rows(rows: Vec<Vec<Scalar>>, ncols: usize, ch: Characteristic) -> Self {
        assert!(rows.iter().all(|r| r.len() == ncols), "ragged matrix");
        Matrix { ncols, rows, ch }
    }

    pub fn nrows(&self) -> usize {
        self.rows.len()
    }

    pub fn ncols(&self) -> usize {
        self.ncols
    }

    pub fn characteristic(&self) -> Characteristic {
        self.ch
    }

    pub fn rows(&self) -> &[Vec<Scalar>] {
        &self.rows
    }

    pub fn row(&self, i: usize) -> &[Scalar] {
        &self.rows[i]
    }

    pub fn get(&self, r: usize, c: usize) -> &Scalar {
        &self.rows[r][c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: Scalar) {
        self.rows[r][c] = v;
    }

    pub fn transpose(&self) -> Matrix {
        let mut t = Matrix::zeros(self.ncols, self.nrows(), self.ch);
        for (i, row) in self.rows.iter().enumerate() {
            for (j, v) in row.iter().enumerate() {
                if !v.is_zero() {
                    t.rows[j][i] = v.clone();
                }
            }
        }
        t
    }

    /// Horizontal concatenation; both sides need the same number of rows.
    pub fn hstack(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.nrows(), other.nrows());
        let rows = self
            .rows
            .iter()
            .zip(&other.rows)
            .map(|(a, b)| a.iter().chain(b).cloned().collect())
            .collect();
        Matrix::from_rows(rows, self.ncols + other.ncols, self.ch)
    }

    /// `v * self` for a row vector `v`.
    pub fn left_apply(&self, v: &[Scalar]) -> Vec<Scalar> {
        assert_eq!(v.len(), self.nrows());
        let mut out = vec![Scalar::zero(self.ch); self.ncols];
        for (c, row) in v.iter().zip(&self.rows) {
            if c.is_zero() {
                continue;
            }
            axpy(&mut out, c, row);
        }
        out
    }

    /// Matrix product `self * other`.
    pub fn mul(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.ncols, other.nrows());
        let rows = self.rows.iter().map(|r| other.left_apply(r)).collect();
        Matrix::from_rows(rows, other.ncols, self.ch)
    }

    pub fn rank(&self) -> usize {
        rank_of_rows(self.rows.clone(), self.ncols)
    }

    /// Basis of `{v : v * self = 0}`.
    pub fn left_kernel(&self) -> Vec<Vec<Scalar>> {
        self.transpose().kernel()
    }

    /// Basis of `{x : self * x = 0}`, one vector per free column of the RREF.
    pub fn kernel(&self) -> Vec<Vec<Scalar>> {
        let mut ech = Echelon::new(self.ncols, self.ch);
        for r in &self.rows {
            ech.insert(r.clone());
        }
        ech.null_space()
    }
}

/// `dst += c * src`.
pub(crate) fn axpy(dst: &mut [Scalar], c: &Scalar, src: &[Scalar]) {
    for (d, s) in dst.iter_mut().zip(src) {
        if !s.is_zero() {
            *d += &(c * s);
        }
    }
}

pub fn is_zero_vector(v: &[Scalar]) -> bool {
    v.iter().all(Scalar::is_zero)
}

/// Rank by Gaussian elimination, choosing the smallest available pivot in each column.
pub fn rank_of_rows(mut rows: Vec<Vec<Scalar>>, ncols: usize) -> usize {
    rows.retain(|r| !is_zero_vector(r));
    let mut rank = 0;
    for col in 0..ncols {
        if rank == rows.len() {
            break;
        }
        let pivot = (rank..rows.len())
            .filter(|&i| !rows[i][col].is_zero())
            .min_by_key(|&i| rows[i][col].size_hint());
        let Some(p) = pivot else { continue };
        rows.swap(rank, p);
        let inv = rows[rank][col].inv().expect("nonzero pivot");
        let (head, tail) = rows.split_at_mut(rank + 1);
        let prow = &head[rank];
        for r in tail.iter_mut() {
            if r[col].is_zero() {
                continue;
            }
            let f = -(&r[col] * &inv);
            axpy(&mut r[col..], &f, &prow[col..]);
        }
        rank += 1;
    }
    rank
}

/// A subspace of `K^ncols` kept in reduced row echelon form.
///
/// Rows are sorted by pivot column; each pivot entry is 1 and every other row
/// is zero in that column.
#[derive(Clone, Debug)]
pub struct Echelon {
    ncols: usize,
    ch: Characteristic,
    rows: Vec<Vec<Scalar>>,
    pivots: Vec<usize>,
}

impl Echelon {
    pub fn new(ncols: usize, ch: Characteristic) -> Self {
        Echelon {
            ncols,
            ch,
            rows: Vec::new(),
            pivots: Vec::new(),
        }
    }

    pub fn from_rows(rows: impl IntoIterator<Item = Vec<Scalar>>, ncols: usize, ch: Characteristic) -> Self {
        let mut e = Self::new(ncols, ch);
        for r in rows {
            e.insert(r);
        }
        e
    }

    pub fn ncols(&self) -> usize {
        self.ncols
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn rows(&self) -> &[Vec<Scalar>] {
        &self.rows
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    pub fn is_pivot(&self, col: usize) -> bool {
        self.pivots.binary_search(&col).is_ok()
    }

    /// Columns without a pivot, ascending.
    pub fn free_columns(&self) -> Vec<usize> {
        (0..self.ncols).filter(|c| !self.is_pivot(*c)).collect()
    }

    /// Reduces `v` modulo the span: afterwards `v` vanishes on every pivot column.
    pub fn reduce(&self, v: &mut [Scalar]) {
        for (row, &p) in self.rows.iter().zip(&self.pivots) {
            if v[p].is_zero() {
                continue;
            }
            let f = -&v[p];
            axpy(v, &f, row);
        }
    }

    pub fn contains(&self, v: &[Scalar]) -> bool {
        let mut w = v.to_vec();
        self.reduce(&mut w);
        is_zero_vector(&w)
    }

    /// Adds `v` to the span; returns whether the rank grew.
    pub fn insert(&mut self, mut v: Vec<Scalar>) -> bool {
        assert_eq!(v.len(), self.ncols);
        self.reduce(&mut v);
        let Some(lead) = v.iter().position(|x| !x.is_zero()) else {
            return false;
        };
        let inv = v[lead].inv().expect("nonzero");
        for x in v.iter_mut().skip(lead) {
            if !x.is_zero() {
                *x *= &inv;
            }
        }
        for row in self.rows.iter_mut() {
            if row[lead].is_zero() {
                continue;
            }
            let f = -&row[lead];
            axpy(row, &f, &v);
        }
        let at = self.pivots.partition_point(|&p| p < lead);
        self.pivots.insert(at, lead);
        self.rows.insert(at, v);
        true
    }

    /// Coordinates of a vector of the span with respect to the stored rows.
    pub fn coordinates(&self, v: &[Scalar]) -> Option<Vec<Scalar>> {
        let coords: Vec<Scalar> = self.pivots.iter().map(|&p| v[p].clone()).collect();
        let mut w = v.to_vec();
        for (c, row) in coords.iter().zip(&self.rows) {
            if !c.is_zero() {
                axpy(&mut w, &-c, row);
            }
        }
        is_zero_vector(&w).then_some(coords)
    }

    /// Basis of `{x : r . x = 0 for every stored row r}`.
    pub fn null_space(&self) -> Vec<Vec<Scalar>> {
        let mut out = Vec::new();
        for free in self.free_columns() {
            let mut x = vec![Scalar::zero(self.ch); self.ncols];
            x[free] = Scalar::one(self.ch);
            for (row, &p) in self.rows.iter().zip(&self.pivots) {
                if !row[free].is_zero() {
                    x[p] = -&row[free];
                }
            }
            out.push(x);
        }
        out
    }

    /// Same span, compared as canonical reduced forms.
    pub fn same_span(&self, other: &Echelon) -> bool {
        self.ncols == other.ncols && self.pivots == other.pivots && self.rows == other.rows
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(v: i64) -> Scalar {
        Scalar::from_i64(v, Characteristic::ZERO)
    }

    fn mat(rows: &[&[i64]]) -> Matrix {
        let ncols = rows.first().map_or(0, |r| r.len());
        Matrix::from_rows(
            rows.iter().map(|r| r.iter().map(|&x| q(x)).collect()).collect(),
            ncols,
            Characteristic::ZERO,
        )
    }

    #[test]
    fn rank_and_kernel() {
        let m = mat(&[&[1, 2, 3], &[2, 4, 6], &[1, 0, 1]]);
        assert_eq!(m.rank(), 2);
        let k = m.kernel();
        assert_eq!(k.len(), 1);
        let mv: Vec<Scalar> = m
            .rows()
            .iter()
            .map(|r| r.iter().zip(&k[0]).fold(q(0), |acc, (a, b)| acc + a * b))
            .collect();
        assert!(is_zero_vector(&mv));
        let lk = m.left_kernel();
        assert_eq!(lk.len(), 1);
        assert!(is_zero_vector(&m.left_apply(&lk[0])));
    }

    #[test]
    fn echelon_is_reduced_and_canonical() {
        let mut a = Echelon::new(3, Characteristic::ZERO);
        assert!(a.insert(vec![q(0), q(2), q(4)]));
        assert!(a.insert(vec![q(1), q(1), q(1)]));
        assert!(!a.insert(vec![q(1), q(3), q(5)]));
        assert_eq!(a.pivots(), &[0, 1]);
        assert_eq!(a.rows()[0], vec![q(1), q(0), q(-1)]);
        let b = Echelon::from_rows([vec![q(1), q(2), q(3)], vec![q(2), q(3), q(4)]], 3, Characteristic::ZERO);
        assert!(a.same_span(&b));
        assert_eq!(a.coordinates(&[q(2), q(1), q(0)]), Some(vec![q(2), q(1)]));
        assert_eq!(a.coordinates(&[q(0), q(0), q(1)]), None);
    }

    #[test]
    fn rank_mod_two() {
        let f2 = Characteristic::new(2).unwrap();
        let rows = vec![
            vec![Scalar::from_i64(1, f2), Scalar::from_i64(1, f2)],
            vec![Scalar::from_i64(1, f2), Scalar::from_i64(-1, f2)],
        ];
        assert_eq!(rank_of_rows(rows, 2), 1);
    }
}
