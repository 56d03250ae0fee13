//! Row reduction and everything built directly on it: rank, kernels,
//! inverses, incremental echelon bases and coordinate solvers.

use super::matrix::{vector, Matrix};
use super::scalar::Scalar;
use crate::error::{Error, Result};

/// Reduced row echelon form of `m`, with pivot columns.
pub fn rref<T: Scalar>(m: &Matrix<T>) -> (Matrix<T>, Vec<usize>) {
    let mut rows = m.row_vectors();
    let pivots = rref_rows(&mut rows, m.cols());
    (Matrix::from_fn(m.rows(), m.cols(), |r, c| rows[r][c].clone()), pivots)
}

/// In-place reduction of a list of equal-length rows. Returns pivot columns;
/// the first `pivots.len()` rows are the non-zero reduced rows.
pub(crate) fn rref_rows<T: Scalar>(rows: &mut [Vec<T>], cols: usize) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows.len() {
            break;
        }
        let Some(p) = (r..rows.len()).find(|&i| !rows[i][c].is_zero()) else {
            continue;
        };
        rows.swap(r, p);
        let inv = T::one().div_ref(&rows[r][c]);
        if !inv.is_one() {
            for x in rows[r][c..].iter_mut() {
                if !x.is_zero() {
                    *x = x.mul_ref(&inv);
                }
            }
        }
        let (head, tail) = rows.split_at_mut(r);
        let (pivot_row, rest) = tail.split_first_mut().expect("pivot row exists");
        let nz: Vec<usize> = (c..cols).filter(|&j| !pivot_row[j].is_zero()).collect();
        for other in head.iter_mut().chain(rest.iter_mut()) {
            if other[c].is_zero() {
                continue;
            }
            let f = other[c].clone();
            for &j in &nz {
                other[j].sub_mul(&f, &pivot_row[j]);
            }
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

pub fn rank<T: Scalar>(m: &Matrix<T>) -> usize {
    let mut rows = m.row_vectors();
    rref_rows(&mut rows, m.cols()).len()
}

/// Basis of `{v : A·v = 0}`, one vector per free column, in column order.
pub fn kernel<T: Scalar>(a: &Matrix<T>) -> Vec<Vec<T>> {
    let mut rows = a.row_vectors();
    let pivots = rref_rows(&mut rows, a.cols());
    kernel_from_rref(&rows, &pivots, a.cols())
}

pub(crate) fn kernel_from_rref<T: Scalar>(rows: &[Vec<T>], pivots: &[usize], cols: usize) -> Vec<Vec<T>> {
    let mut is_pivot = vec![false; cols];
    for &p in pivots {
        is_pivot[p] = true;
    }
    let mut basis = Vec::new();
    for free in (0..cols).filter(|&c| !is_pivot[c]) {
        let mut v = vec![T::zero(); cols];
        v[free] = T::one();
        for (row, &p) in rows.iter().zip(pivots) {
            if !row[free].is_zero() {
                v[p] = -row[free].clone();
            }
        }
        basis.push(v);
    }
    basis
}

/// Joint kernel of several matrices with the same column count.
pub fn joint_kernel<T: Scalar>(mats: &[&Matrix<T>], cols: usize) -> Vec<Vec<T>> {
    let rows: Vec<Vec<T>> = mats.iter().flat_map(|m| m.row_vectors()).collect();
    kernel_of_rows(rows, cols)
}

/// Kernel of the matrix whose rows are given.
pub fn kernel_of_rows<T: Scalar>(rows: Vec<Vec<T>>, cols: usize) -> Vec<Vec<T>> {
    let mut eb = EchelonBasis::new(cols);
    for r in rows {
        eb.insert(r);
    }
    eb.orthogonal_kernel()
}

pub fn inverse<T: Scalar>(m: &Matrix<T>) -> Result<Matrix<T>> {
    if !m.is_square() {
        return Err(Error::DimensionMismatch("inverse of non-square matrix".into()));
    }
    let n = m.rows();
    let mut rows: Vec<Vec<T>> = (0..n)
        .map(|r| {
            let mut row = m.row(r).to_vec();
            row.extend(vector::unit::<T>(n, r));
            row
        })
        .collect();
    let pivots = rref_rows(&mut rows, 2 * n);
    if pivots.len() < n || pivots[n - 1] >= n {
        return Err(Error::Singular);
    }
    Ok(Matrix::from_fn(n, n, |r, c| rows[r][n + c].clone()))
}

pub fn is_independent<T: Scalar>(vectors: &[Vec<T>]) -> bool {
    let Some(len) = vectors.first().map(Vec::len) else {
        return true;
    };
    let mut eb = EchelonBasis::new(len);
    vectors.iter().all(|v| eb.insert(v.clone()))
}

/// Incrementally maintained reduced echelon basis of a subspace.
#[derive(Clone, Debug)]
pub struct EchelonBasis<T> {
    len: usize,
    rows: Vec<Vec<T>>,
    pivots: Vec<usize>,
}

impl<T: Scalar> EchelonBasis<T> {
    pub fn new(len: usize) -> Self {
        Self {
            len,
            rows: Vec::new(),
            pivots: Vec::new(),
        }
    }

    pub fn from_vectors(len: usize, vectors: impl IntoIterator<Item = Vec<T>>) -> Self {
        let mut eb = Self::new(len);
        for v in vectors {
            eb.insert(v);
        }
        eb
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn ambient_dim(&self) -> usize {
        self.len
    }

    pub fn vectors(&self) -> &[Vec<T>] {
        &self.rows
    }

    pub fn into_vectors(self) -> Vec<Vec<T>> {
        self.rows
    }

    /// Remainder of `v` after reduction against the current basis.
    pub fn reduce(&self, mut v: Vec<T>) -> Vec<T> {
        for (row, &p) in self.rows.iter().zip(&self.pivots) {
            if v[p].is_zero() {
                continue;
            }
            let f = v[p].clone();
            for (x, y) in v.iter_mut().zip(row).skip(p) {
                if !y.is_zero() {
                    x.sub_mul(&f, y);
                }
            }
        }
        v
    }

    pub fn contains(&self, v: &[T]) -> bool {
        vector::is_zero(&self.reduce(v.to_vec()))
    }

    /// Adds `v`; returns false if it was already in the span.
    pub fn insert(&mut self, v: Vec<T>) -> bool {
        assert_eq!(v.len(), self.len, "vector length mismatch");
        let mut v = self.reduce(v);
        let Some(p) = v.iter().position(|x| !x.is_zero()) else {
            return false;
        };
        let inv = T::one().div_ref(&v[p]);
        for x in v.iter_mut().skip(p) {
            if !x.is_zero() {
                *x = x.mul_ref(&inv);
            }
        }
        for row in self.rows.iter_mut() {
            if row[p].is_zero() {
                continue;
            }
            let f = row[p].clone();
            for (x, y) in row.iter_mut().zip(&v).skip(p) {
                if !y.is_zero() {
                    x.sub_mul(&f, y);
                }
            }
        }
        let at = self.pivots.partition_point(|&q| q < p);
        self.pivots.insert(at, p);
        self.rows.insert(at, v);
        true
    }

    /// Basis of `{x : row·x = 0 for every basis row}`.
    pub fn orthogonal_kernel(&self) -> Vec<Vec<T>> {
        kernel_from_rref(&self.rows, &self.pivots, self.len)
    }
}

/// Solves for coordinates with respect to a fixed linearly independent family.
///
/// The family is row-reduced once; coordinates of a vector are then read off
/// its entries at the pivot positions and mapped back through the recorded
/// transformation.
#[derive(Clone)]
pub struct CoordinateSolver<T> {
    len: usize,
    reduced: Vec<Vec<T>>,
    pivots: Vec<usize>,
    /// `coords = v[pivots] · transform`
    transform: Matrix<T>,
}

impl<T: Scalar> std::fmt::Debug for CoordinateSolver<T> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("CoordinateSolver").field("len", &self.len).field("dim", &self.dim()).finish()
    }
}

impl<T: Scalar> CoordinateSolver<T> {
    pub fn new(basis: &[Vec<T>], len: usize) -> Result<Self> {
        let k = basis.len();
        let mut rows: Vec<Vec<T>> = basis
            .iter()
            .enumerate()
            .map(|(i, b)| {
                assert_eq!(b.len(), len, "basis vector length mismatch");
                let mut row = b.clone();
                row.extend(vector::unit::<T>(k, i));
                row
            })
            .collect();
        let pivots = rref_rows(&mut rows, len + k);
        if pivots.iter().filter(|&&p| p < len).count() < k {
            return Err(Error::DependentFamily);
        }
        let transform = Matrix::from_fn(k, k, |r, c| rows[r][len + c].clone());
        let reduced = rows.into_iter().map(|mut r| {
            r.truncate(len);
            r
        });
        Ok(Self {
            len,
            reduced: reduced.collect(),
            pivots,
            transform,
        })
    }

    pub fn dim(&self) -> usize {
        self.pivots.len()
    }

    /// Coordinates assuming `v` lies in the span.
    pub fn coords_unchecked(&self, v: &[T]) -> Vec<T> {
        let picked: Vec<T> = self.pivots.iter().map(|&p| v[p].clone()).collect();
        let k = self.dim();
        (0..k)
            .map(|c| {
                let mut acc = T::zero();
                for (r, x) in picked.iter().enumerate() {
                    acc.add_mul(x, &self.transform[(r, c)]);
                }
                acc
            })
            .collect()
    }

    /// Coordinates of `v`, or `None` if `v` is outside the span.
    pub fn coords(&self, v: &[T]) -> Option<Vec<T>> {
        assert_eq!(v.len(), self.len);
        let mut rest = v.to_vec();
        for (row, &p) in self.reduced.iter().zip(&self.pivots) {
            if rest[p].is_zero() {
                continue;
            }
            let f = rest[p].clone();
            for (x, y) in rest.iter_mut().zip(row) {
                if !y.is_zero() {
                    x.sub_mul(&f, y);
                }
            }
        }
        if !vector::is_zero(&rest) {
            return None;
        }
        Some(self.coords_unchecked(v))
    }
}
