//! Small complex matrices for generator algebra.
//!
//! [`ComplexMatrix`] is dense row-major. [`SparseMatrix`] stores sorted
//! per-row `(column, value)` lists and is used for representations whose
//! dimension reaches [`SPARSE_THRESHOLD`]. [`Operator`] wraps either form and
//! performs mixed arithmetic by densifying only when both sides are small.

use std::ops::{Index, IndexMut};

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Representations at or above this dimension store generators sparsely.
pub const SPARSE_THRESHOLD: usize = 512;

pub const ZERO: Complex64 = Complex64::new(0.0, 0.0);
pub const ONE: Complex64 = Complex64::new(1.0, 0.0);

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ComplexMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Complex64>,
}

impl ComplexMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self { rows, cols, data: vec![ZERO; rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = ONE;
        }
        m
    }

    pub fn from_rows(rows: &[Vec<Complex64>]) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        let mut data = Vec::with_capacity(r * c);
        for row in rows {
            if row.len() != c {
                return Err(Error::DimensionMismatch { expected: c, found: row.len() });
            }
            data.extend_from_slice(row);
        }
        Ok(Self { rows: r, cols: c, data })
    }

    pub fn from_real_rows(rows: &[Vec<f64>]) -> Result<Self> {
        let rows: Vec<Vec<Complex64>> =
            rows.iter().map(|r| r.iter().map(|&v| Complex64::new(v, 0.0)).collect()).collect();
        Self::from_rows(&rows)
    }

    pub fn diagonal(diag: &[Complex64]) -> Self {
        let mut m = Self::zeros(diag.len(), diag.len());
        for (i, &d) in diag.iter().enumerate() {
            m[(i, i)] = d;
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    /// Row-major entries.
    pub fn data(&self) -> &[Complex64] {
        &self.data
    }

    pub fn matmul(&self, rhs: &Self) -> Self {
        assert_eq!(self.cols, rhs.rows, "matmul dimension mismatch");
        let mut out = Self::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.data[i * self.cols + k];
                if a == ZERO {
                    continue;
                }
                let src = &rhs.data[k * rhs.cols..(k + 1) * rhs.cols];
                let dst = &mut out.data[i * rhs.cols..(i + 1) * rhs.cols];
                for (d, &b) in dst.iter_mut().zip(src) {
                    *d += a * b;
                }
            }
        }
        out
    }

    pub fn add(&self, rhs: &Self) -> Self {
        self.zip_with(rhs, |a, b| a + b)
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        self.zip_with(rhs, |a, b| a - b)
    }

    fn zip_with(&self, rhs: &Self, f: impl Fn(Complex64, Complex64) -> Complex64) -> Self {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols), "shape mismatch");
        let data = self.data.iter().zip(&rhs.data).map(|(&a, &b)| f(a, b)).collect();
        Self { rows: self.rows, cols: self.cols, data }
    }

    pub fn scale(&self, s: Complex64) -> Self {
        Self { rows: self.rows, cols: self.cols, data: self.data.iter().map(|&a| a * s).collect() }
    }

    pub fn adjoint(&self) -> Self {
        let mut out = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out[(j, i)] = self[(i, j)].conj();
            }
        }
        out
    }

    pub fn transpose(&self) -> Self {
        let mut out = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out[(j, i)] = self[(i, j)];
            }
        }
        out
    }

    pub fn kron(&self, rhs: &Self) -> Self {
        let (r, c) = (self.rows * rhs.rows, self.cols * rhs.cols);
        let mut out = Self::zeros(r, c);
        for i in 0..self.rows {
            for j in 0..self.cols {
                let a = self[(i, j)];
                for k in 0..rhs.rows {
                    for l in 0..rhs.cols {
                        out[(i * rhs.rows + k, j * rhs.cols + l)] = a * rhs[(k, l)];
                    }
                }
            }
        }
        out
    }

    pub fn trace(&self) -> Complex64 {
        (0..self.rows.min(self.cols)).map(|i| self[(i, i)]).sum()
    }

    pub fn max_abs(&self) -> f64 {
        self.data.iter().map(|z| z.norm()).fold(0.0, f64::max)
    }

    /// Entrywise max-norm of `self - rhs`; infinite on shape mismatch.
    pub fn max_abs_diff(&self, rhs: &Self) -> f64 {
        if (self.rows, self.cols) != (rhs.rows, rhs.cols) {
            return f64::INFINITY;
        }
        self.data.iter().zip(&rhs.data).map(|(a, b)| (a - b).norm()).fold(0.0, f64::max)
    }

    /// `max |U†U − I|` entrywise.
    pub fn unitarity_deviation(&self) -> f64 {
        if !self.is_square() {
            return f64::INFINITY;
        }
        self.adjoint().matmul(self).max_abs_diff(&Self::identity(self.rows))
    }

    /// `max |A − A†|` entrywise.
    pub fn hermiticity_deviation(&self) -> f64 {
        if !self.is_square() {
            return f64::INFINITY;
        }
        self.max_abs_diff(&self.adjoint())
    }

    pub fn is_finite(&self) -> bool {
        self.data.iter().all(|z| z.re.is_finite() && z.im.is_finite())
    }

    pub fn to_sparse(&self) -> SparseMatrix {
        let rows = (0..self.rows)
            .map(|i| {
                (0..self.cols)
                    .filter_map(|j| {
                        let v = self[(i, j)];
                        (v != ZERO).then_some((j, v))
                    })
                    .collect()
            })
            .collect();
        SparseMatrix { cols: self.cols, rows }
    }
}

impl Index<(usize, usize)> for ComplexMatrix {
    type Output = Complex64;
    fn index(&self, (i, j): (usize, usize)) -> &Complex64 {
        &self.data[i * self.cols + j]
    }
}

impl IndexMut<(usize, usize)> for ComplexMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Complex64 {
        &mut self.data[i * self.cols + j]
    }
}

/// Row-compressed sparse matrix; each row is sorted by column with no
/// explicit zeros and no duplicate columns.
#[derive(Debug, Clone, PartialEq)]
pub struct SparseMatrix {
    cols: usize,
    rows: Vec<Vec<(usize, Complex64)>>,
}

impl SparseMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self { cols, rows: vec![Vec::new(); rows] }
    }

    pub fn identity(n: usize) -> Self {
        Self { cols: n, rows: (0..n).map(|i| vec![(i, ONE)]).collect() }
    }

    /// Builds from `(row, col, value)` triplets, summing duplicates.
    pub fn from_triplets(
        rows: usize,
        cols: usize,
        triplets: impl IntoIterator<Item = (usize, usize, Complex64)>,
    ) -> Self {
        let mut acc: Vec<Vec<(usize, Complex64)>> = vec![Vec::new(); rows];
        for (i, j, v) in triplets {
            assert!(i < rows && j < cols, "triplet out of range");
            acc[i].push((j, v));
        }
        let rows = acc.into_iter().map(Self::normalize_row).collect();
        Self { cols, rows }
    }

    fn normalize_row(mut row: Vec<(usize, Complex64)>) -> Vec<(usize, Complex64)> {
        row.sort_by_key(|&(j, _)| j);
        let mut out: Vec<(usize, Complex64)> = Vec::with_capacity(row.len());
        for (j, v) in row {
            match out.last_mut() {
                Some((lj, lv)) if *lj == j => *lv += v,
                _ => out.push((j, v)),
            }
        }
        out.retain(|&(_, v)| v != ZERO);
        out
    }

    pub fn rows(&self) -> usize {
        self.rows.len()
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn nnz(&self) -> usize {
        self.rows.iter().map(Vec::len).sum()
    }

    pub fn row(&self, i: usize) -> &[(usize, Complex64)] {
        &self.rows[i]
    }

    pub fn get(&self, i: usize, j: usize) -> Complex64 {
        self.rows[i]
            .binary_search_by_key(&j, |&(c, _)| c)
            .map_or(ZERO, |k| self.rows[i][k].1)
    }

    pub fn matmul(&self, rhs: &Self) -> Self {
        assert_eq!(self.cols, rhs.rows(), "matmul dimension mismatch");
        let rows = self
            .rows
            .iter()
            .map(|row| {
                let mut acc = Vec::new();
                for &(k, a) in row {
                    acc.extend(rhs.rows[k].iter().map(|&(j, b)| (j, a * b)));
                }
                Self::normalize_row(acc)
            })
            .collect();
        Self { cols: rhs.cols, rows }
    }

    pub fn lin_comb(&self, a: Complex64, rhs: &Self, b: Complex64) -> Self {
        assert_eq!((self.rows(), self.cols), (rhs.rows(), rhs.cols), "shape mismatch");
        let rows = self
            .rows
            .iter()
            .zip(&rhs.rows)
            .map(|(r1, r2)| {
                let acc = r1.iter().map(|&(j, v)| (j, a * v)).chain(r2.iter().map(|&(j, v)| (j, b * v)));
                Self::normalize_row(acc.collect())
            })
            .collect();
        Self { cols: self.cols, rows }
    }

    pub fn scale(&self, s: Complex64) -> Self {
        self.lin_comb(s, &Self::zeros(self.rows(), self.cols), ZERO)
    }

    pub fn max_abs(&self) -> f64 {
        self.rows.iter().flatten().map(|(_, v)| v.norm()).fold(0.0, f64::max)
    }

    pub fn max_abs_diff(&self, rhs: &Self) -> f64 {
        if (self.rows(), self.cols) != (rhs.rows(), rhs.cols) {
            return f64::INFINITY;
        }
        self.lin_comb(ONE, rhs, -ONE).max_abs()
    }

    pub fn adjoint(&self) -> Self {
        let trip = self
            .rows
            .iter()
            .enumerate()
            .flat_map(|(i, r)| r.iter().map(move |&(j, v)| (j, i, v.conj())));
        Self::from_triplets(self.cols, self.rows(), trip)
    }

    pub fn to_dense(&self) -> ComplexMatrix {
        let mut m = ComplexMatrix::zeros(self.rows(), self.cols);
        for (i, r) in self.rows.iter().enumerate() {
            for &(j, v) in r {
                m[(i, j)] = v;
            }
        }
        m
    }
}

/// A square linear operator stored densely or sparsely.
#[derive(Debug, Clone, PartialEq)]
pub enum Operator {
    Dense(ComplexMatrix),
    Sparse(SparseMatrix),
}

impl Operator {
    /// Chooses the storage form from the dimension.
    pub fn from_triplets(
        dim: usize,
        triplets: impl IntoIterator<Item = (usize, usize, Complex64)>,
    ) -> Self {
        let sparse = SparseMatrix::from_triplets(dim, dim, triplets);
        if dim >= SPARSE_THRESHOLD {
            Operator::Sparse(sparse)
        } else {
            Operator::Dense(sparse.to_dense())
        }
    }

    pub fn from_dense(m: ComplexMatrix) -> Self {
        if m.rows() >= SPARSE_THRESHOLD {
            Operator::Sparse(m.to_sparse())
        } else {
            Operator::Dense(m)
        }
    }

    pub fn dim(&self) -> usize {
        match self {
            Operator::Dense(m) => m.rows(),
            Operator::Sparse(m) => m.rows(),
        }
    }

    pub fn is_sparse(&self) -> bool {
        matches!(self, Operator::Sparse(_))
    }

    pub fn identity_like(&self) -> Self {
        match self {
            Operator::Dense(m) => Operator::Dense(ComplexMatrix::identity(m.rows())),
            Operator::Sparse(m) => Operator::Sparse(SparseMatrix::identity(m.rows())),
        }
    }

    pub fn to_dense(&self) -> ComplexMatrix {
        match self {
            Operator::Dense(m) => m.clone(),
            Operator::Sparse(m) => m.to_dense(),
        }
    }

    fn to_sparse(&self) -> SparseMatrix {
        match self {
            Operator::Dense(m) => m.to_sparse(),
            Operator::Sparse(m) => m.clone(),
        }
    }

    pub fn matmul(&self, rhs: &Self) -> Self {
        match (self, rhs) {
            (Operator::Dense(a), Operator::Dense(b)) => Operator::Dense(a.matmul(b)),
            _ => Operator::Sparse(self.to_sparse().matmul(&rhs.to_sparse())),
        }
    }

    /// `a·self + b·rhs`.
    pub fn lin_comb(&self, a: Complex64, rhs: &Self, b: Complex64) -> Self {
        match (self, rhs) {
            (Operator::Dense(x), Operator::Dense(y)) => Operator::Dense(x.scale(a).add(&y.scale(b))),
            _ => Operator::Sparse(self.to_sparse().lin_comb(a, &rhs.to_sparse(), b)),
        }
    }

    pub fn scale(&self, s: Complex64) -> Self {
        match self {
            Operator::Dense(m) => Operator::Dense(m.scale(s)),
            Operator::Sparse(m) => Operator::Sparse(m.scale(s)),
        }
    }

    pub fn adjoint(&self) -> Self {
        match self {
            Operator::Dense(m) => Operator::Dense(m.adjoint()),
            Operator::Sparse(m) => Operator::Sparse(m.adjoint()),
        }
    }

    pub fn max_abs_diff(&self, rhs: &Self) -> f64 {
        match (self, rhs) {
            (Operator::Dense(a), Operator::Dense(b)) => a.max_abs_diff(b),
            _ => self.to_sparse().max_abs_diff(&rhs.to_sparse()),
        }
    }

    pub fn get(&self, i: usize, j: usize) -> Complex64 {
        match self {
            Operator::Dense(m) => m[(i, j)],
            Operator::Sparse(m) => m.get(i, j),
        }
    }
}
