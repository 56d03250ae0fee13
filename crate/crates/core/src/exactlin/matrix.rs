use std::fmt;
use std::ops::{Index, IndexMut};

use super::scalar::{Field, Gaussian, Rational, Scalar};
use crate::error::{Error, Result};

/// Dense row-major matrix over an exact field.
///
/// The field tag is carried by the element type: `Matrix<Rational>` is real,
/// `Matrix<Gaussian>` is complex.
#[derive(Clone, PartialEq, Eq)]
pub struct Matrix<T> {
    rows: usize,
    cols: usize,
    data: Vec<T>,
}

pub type RealMatrix = Matrix<Rational>;
pub type ComplexMatrix = Matrix<Gaussian>;

impl<T: Scalar> Matrix<T> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self {
            rows,
            cols,
            data: vec![T::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = T::one();
        }
        m
    }

    pub fn scalar(n: usize, c: T) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = c.clone();
        }
        m
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> T) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for r in 0..rows {
            for c in 0..cols {
                data.push(f(r, c));
            }
        }
        Self { rows, cols, data }
    }

    /// Builds a matrix from rows; all rows must have the same length.
    pub fn from_rows(rows: Vec<Vec<T>>) -> Result<Self> {
        let nrows = rows.len();
        let ncols = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|r| r.len() != ncols) {
            return Err(Error::DimensionMismatch("ragged rows".into()));
        }
        Ok(Self {
            rows: nrows,
            cols: ncols,
            data: rows.into_iter().flatten().collect(),
        })
    }

    /// Matrix whose columns are the given vectors.
    pub fn from_columns(cols: &[Vec<T>], len: usize) -> Self {
        Self::from_fn(len, cols.len(), |r, c| cols[c][r].clone())
    }

    pub fn diagonal(entries: &[T]) -> Self {
        let n = entries.len();
        let mut m = Self::zeros(n, n);
        for (i, e) in entries.iter().enumerate() {
            m[(i, i)] = e.clone();
        }
        m
    }

    pub fn from_int_rows(rows: &[&[i64]]) -> Self {
        Self::from_fn(rows.len(), rows.first().map_or(0, |r| r.len()), |r, c| {
            T::from_int(rows[r][c])
        })
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

    pub fn field(&self) -> Field {
        T::FIELD
    }

    pub fn entries(&self) -> &[T] {
        &self.data
    }

    pub fn row(&self, r: usize) -> &[T] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn column(&self, c: usize) -> Vec<T> {
        (0..self.rows).map(|r| self[(r, c)].clone()).collect()
    }

    pub fn row_vectors(&self) -> Vec<Vec<T>> {
        (0..self.rows).map(|r| self.row(r).to_vec()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(T::is_zero)
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |r, c| self[(c, r)].clone())
    }

    pub fn conj(&self) -> Self {
        self.map(|x| x.conj())
    }

    /// Conjugate transpose.
    pub fn adjoint(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |r, c| self[(c, r)].conj())
    }

    pub fn map<U>(&self, f: impl Fn(&T) -> U) -> Matrix<U> {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(f).collect(),
        }
    }

    pub fn scale(&self, c: &T) -> Self {
        if c.is_zero() {
            return Self::zeros(self.rows, self.cols);
        }
        self.map(|x| if x.is_zero() { T::zero() } else { x.mul_ref(c) })
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        Self {
            rows: self.rows,
            cols: self.cols,
            data: self
                .data
                .iter()
                .zip(&other.data)
                .map(|(a, b)| a.add_ref(b))
                .collect(),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        Self {
            rows: self.rows,
            cols: self.cols,
            data: self
                .data
                .iter()
                .zip(&other.data)
                .map(|(a, b)| a.sub_ref(b))
                .collect(),
        }
    }

    pub fn neg(&self) -> Self {
        self.map(|x| -x.clone())
    }

    /// `self += c * other`
    pub fn add_scaled(&mut self, c: &T, other: &Self) {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        if c.is_zero() {
            return;
        }
        for (a, b) in self.data.iter_mut().zip(&other.data) {
            a.add_mul(c, b);
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.cols, other.rows, "matrix product shape mismatch");
        let mut out = Self::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                let orow = other.row(k);
                for (j, b) in orow.iter().enumerate() {
                    if !b.is_zero() {
                        out.data[i * other.cols + j].add_mul(a, b);
                    }
                }
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &[T]) -> Vec<T> {
        assert_eq!(self.cols, v.len());
        (0..self.rows)
            .map(|r| {
                let mut acc = T::zero();
                for (a, b) in self.row(r).iter().zip(v) {
                    acc.add_mul(a, b);
                }
                acc
            })
            .collect()
    }

    /// `[self, other] = self·other − other·self`
    pub fn commutator(&self, other: &Self) -> Self {
        self.mul(other).sub(&other.mul(self))
    }

    pub fn trace(&self) -> T {
        let mut t = T::zero();
        for i in 0..self.rows.min(self.cols) {
            t = t.add_ref(&self[(i, i)]);
        }
        t
    }

    /// `tr(self · other)` without forming the product.
    pub fn trace_of_product(&self, other: &Self) -> T {
        assert_eq!((self.rows, self.cols), (other.cols, other.rows));
        let mut acc = T::zero();
        for i in 0..self.rows {
            for k in 0..self.cols {
                acc.add_mul(&self[(i, k)], &other[(k, i)]);
            }
        }
        acc
    }

    pub fn is_symmetric(&self) -> bool {
        self.is_square()
            && (0..self.rows).all(|r| (r + 1..self.cols).all(|c| self[(r, c)] == self[(c, r)]))
    }

    pub fn is_antisymmetric(&self) -> bool {
        self.is_square()
            && (0..self.rows).all(|r| (r..self.cols).all(|c| self[(r, c)] == -self[(c, r)].clone()))
    }

    /// Block-diagonal matrix with the given square blocks.
    pub fn block_diag(blocks: &[&Self]) -> Self {
        let n: usize = blocks.iter().map(|b| b.rows).sum();
        let m: usize = blocks.iter().map(|b| b.cols).sum();
        let mut out = Self::zeros(n, m);
        let (mut r0, mut c0) = (0, 0);
        for b in blocks {
            out.set_block(r0, c0, b);
            r0 += b.rows;
            c0 += b.cols;
        }
        out
    }

    pub fn set_block(&mut self, r0: usize, c0: usize, block: &Self) {
        for r in 0..block.rows {
            for c in 0..block.cols {
                self[(r0 + r, c0 + c)] = block[(r, c)].clone();
            }
        }
    }

    pub fn block(&self, r0: usize, c0: usize, rows: usize, cols: usize) -> Self {
        Self::from_fn(rows, cols, |r, c| self[(r0 + r, c0 + c)].clone())
    }

    /// Kronecker product.
    pub fn kron(&self, other: &Self) -> Self {
        let mut out = Self::zeros(self.rows * other.rows, self.cols * other.cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                let a = &self[(i, j)];
                if a.is_zero() {
                    continue;
                }
                for k in 0..other.rows {
                    for l in 0..other.cols {
                        let b = &other[(k, l)];
                        if !b.is_zero() {
                            out[(i * other.rows + k, j * other.cols + l)] = a.mul_ref(b);
                        }
                    }
                }
            }
        }
        out
    }

    /// Entries flattened row-major.
    pub fn flatten(&self) -> Vec<T> {
        self.data.clone()
    }

    pub fn from_flat(rows: usize, cols: usize, data: Vec<T>) -> Self {
        assert_eq!(rows * cols, data.len());
        Self { rows, cols, data }
    }

    /// First non-zero entry in row-major order, with its position.
    pub fn first_nonzero(&self) -> Option<((usize, usize), &T)> {
        self.data
            .iter()
            .enumerate()
            .find(|(_, x)| !x.is_zero())
            .map(|(i, x)| ((i / self.cols, i % self.cols), x))
    }
}

impl Matrix<Gaussian> {
    pub fn real_part(&self) -> RealMatrix {
        self.map(|x| x.re.clone())
    }

    pub fn imag_part(&self) -> RealMatrix {
        self.map(|x| x.im.clone())
    }

    pub fn is_real(&self) -> bool {
        self.data.iter().all(|x| num_traits::Zero::is_zero(&x.im))
    }

    /// Real matrices `A`, `B` combine into `A + iB`.
    pub fn from_parts(re: &RealMatrix, im: &RealMatrix) -> Self {
        Self::from_fn(re.rows, re.cols, |r, c| {
            Gaussian::new(re[(r, c)].clone(), im[(r, c)].clone())
        })
    }

    /// `A + iB ↦ [[A, −B], [B, A]]`, coordinates ordered `x₁…x_d, y₁…y_d`.
    pub fn realify(&self) -> RealMatrix {
        let a = self.real_part();
        let b = self.imag_part();
        let mut out = RealMatrix::zeros(2 * self.rows, 2 * self.cols);
        out.set_block(0, 0, &a);
        out.set_block(0, self.cols, &b.neg());
        out.set_block(self.rows, 0, &b);
        out.set_block(self.rows, self.cols, &a);
        out
    }
}

impl Matrix<Rational> {
    pub fn complexify(&self) -> ComplexMatrix {
        self.map(|x| Gaussian::from_rational(x.clone()))
    }
}

impl<T> Index<(usize, usize)> for Matrix<T> {
    type Output = T;
    fn index(&self, (r, c): (usize, usize)) -> &T {
        &self.data[r * self.cols + c]
    }
}

impl<T> IndexMut<(usize, usize)> for Matrix<T> {
    fn index_mut(&mut self, (r, c): (usize, usize)) -> &mut T {
        &mut self.data[r * self.cols + c]
    }
}

impl<T: Scalar> fmt::Debug for Matrix<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Matrix {}x{} [", self.rows, self.cols)?;
        for r in 0..self.rows {
            let row: Vec<String> = self.row(r).iter().map(|x| x.to_string()).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        write!(f, "]")
    }
}

/// Plain vector helpers.
pub mod vector {
    use super::Scalar;

    pub fn is_zero<T: Scalar>(v: &[T]) -> bool {
        v.iter().all(T::is_zero)
    }

    pub fn scale<T: Scalar>(v: &[T], c: &T) -> Vec<T> {
        v.iter().map(|x| x.mul_ref(c)).collect()
    }

    pub fn add<T: Scalar>(a: &[T], b: &[T]) -> Vec<T> {
        a.iter().zip(b).map(|(x, y)| x.add_ref(y)).collect()
    }

    pub fn sub<T: Scalar>(a: &[T], b: &[T]) -> Vec<T> {
        a.iter().zip(b).map(|(x, y)| x.sub_ref(y)).collect()
    }

    /// `a += c * b`
    pub fn axpy<T: Scalar>(a: &mut [T], c: &T, b: &[T]) {
        if c.is_zero() {
            return;
        }
        for (x, y) in a.iter_mut().zip(b) {
            x.add_mul(c, y);
        }
    }

    /// Bilinear dot product (no conjugation).
    pub fn dot<T: Scalar>(a: &[T], b: &[T]) -> T {
        let mut acc = T::zero();
        for (x, y) in a.iter().zip(b) {
            acc.add_mul(x, y);
        }
        acc
    }

    pub fn unit<T: Scalar>(len: usize, i: usize) -> Vec<T> {
        let mut v = vec![T::zero(); len];
        v[i] = T::one();
        v
    }

    /// Linear combination `Σ cᵢ·vᵢ`.
    pub fn combine<T: Scalar>(coeffs: &[T], vectors: &[Vec<T>], len: usize) -> Vec<T> {
        let mut out = vec![T::zero(); len];
        for (c, v) in coeffs.iter().zip(vectors) {
            axpy(&mut out, c, v);
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactlin::scalar::{gi, qi};

    #[test]
    fn product_and_commutator() {
        let a = RealMatrix::from_int_rows(&[&[0, 1], &[0, 0]]);
        let b = RealMatrix::from_int_rows(&[&[0, 0], &[1, 0]]);
        let h = a.commutator(&b);
        assert_eq!(h, RealMatrix::from_int_rows(&[&[1, 0], &[0, -1]]));
        assert_eq!(h.trace(), qi(0));
        assert_eq!(a.trace_of_product(&b), qi(1));
    }

    #[test]
    fn realify_uses_x_then_y_coordinates() {
        let z = ComplexMatrix::from_fn(1, 1, |_, _| gi(2, 3));
        let r = z.realify();
        assert_eq!(r, RealMatrix::from_int_rows(&[&[2, -3], &[3, 2]]));
    }

    #[test]
    fn kron_dimensions() {
        let a = RealMatrix::identity(2);
        let b = RealMatrix::from_int_rows(&[&[1, 2, 3]]);
        let k = a.kron(&b);
        assert_eq!((k.rows(), k.cols()), (2, 6));
        assert_eq!(k[(1, 5)], qi(3));
    }
}
