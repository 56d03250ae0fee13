use serde::Serialize;

use super::matrix::{Matrix, RealMatrix};
use super::scalar::Rational;
use crate::error::{Error, Result};
use num_traits::{Signed, Zero};

/// Inertia of a real symmetric bilinear form.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct Signature {
    pub plus: usize,
    pub minus: usize,
    pub zero: usize,
}

impl Signature {
    pub fn new(plus: usize, minus: usize, zero: usize) -> Self {
        Self { plus, minus, zero }
    }

    pub fn dim(&self) -> usize {
        self.plus + self.minus + self.zero
    }

    pub fn is_nondegenerate(&self) -> bool {
        self.zero == 0
    }

    /// Signature of the negated form.
    pub fn flipped(&self) -> Self {
        Self::new(self.minus, self.plus, self.zero)
    }

    /// Equal up to an overall sign of the form.
    pub fn equals_up_to_sign(&self, other: &Self) -> bool {
        self == other || self.flipped() == *other
    }
}

impl std::fmt::Display for Signature {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "({}, {}, {})", self.plus, self.minus, self.zero)
    }
}

/// Result of symmetric congruence diagonalization: `basisᵀ · S · basis = diag`.
#[derive(Debug, Clone)]
pub struct Diagonalization {
    pub diag: Vec<Rational>,
    /// Columns form the diagonalizing basis.
    pub basis: RealMatrix,
}

impl Diagonalization {
    pub fn signature(&self) -> Signature {
        let plus = self.diag.iter().filter(|d| d.is_positive()).count();
        let minus = self.diag.iter().filter(|d| d.is_negative()).count();
        Signature::new(plus, minus, self.diag.len() - plus - minus)
    }
}

/// Diagonalizes a symmetric rational matrix by simultaneous row and column
/// operations.
pub fn diagonalize_symmetric(s: &RealMatrix) -> Result<Diagonalization> {
    if !s.is_symmetric() {
        return Err(Error::NotSymmetric);
    }
    let n = s.rows();
    let mut a = s.clone();
    let mut p = RealMatrix::identity(n);
    let mut diag = Vec::with_capacity(n);
    for k in 0..n {
        if let Some(i) = (k..n).find(|&i| !a[(i, i)].is_zero()) {
            swap_sym(&mut a, &mut p, k, i);
        } else {
            // zero diagonal: fold an off-diagonal entry onto the diagonal
            let hit = (k..n)
                .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
                .find(|&(i, j)| !a[(i, j)].is_zero());
            let Some((i, j)) = hit else {
                diag.extend((k..n).map(|_| Rational::zero()));
                break;
            };
            add_sym(&mut a, &mut p, i, j);
            swap_sym(&mut a, &mut p, k, i);
        }
        let pivot = a[(k, k)].clone();
        for r in k + 1..n {
            if a[(r, k)].is_zero() {
                continue;
            }
            let f = &a[(r, k)] / &pivot;
            for c in 0..n {
                let v = &a[(k, c)] * &f;
                a[(r, c)] = &a[(r, c)] - &v;
            }
            for c in 0..n {
                let v = &a[(c, k)] * &f;
                a[(c, r)] = &a[(c, r)] - &v;
            }
            for c in 0..n {
                let v = &p[(c, k)] * &f;
                p[(c, r)] = &p[(c, r)] - &v;
            }
        }
        diag.push(pivot);
    }
    Ok(Diagonalization { diag, basis: p })
}

fn swap_sym(a: &mut RealMatrix, p: &mut RealMatrix, i: usize, j: usize) {
    if i == j {
        return;
    }
    let n = a.rows();
    for c in 0..n {
        let t = a[(i, c)].clone();
        a[(i, c)] = a[(j, c)].clone();
        a[(j, c)] = t;
    }
    for r in 0..n {
        let t = a[(r, i)].clone();
        a[(r, i)] = a[(r, j)].clone();
        a[(r, j)] = t;
        let t = p[(r, i)].clone();
        p[(r, i)] = p[(r, j)].clone();
        p[(r, j)] = t;
    }
}

/// Row/column `j` added onto row/column `i`.
fn add_sym(a: &mut RealMatrix, p: &mut RealMatrix, i: usize, j: usize) {
    let n = a.rows();
    for c in 0..n {
        let v = a[(j, c)].clone();
        a[(i, c)] = &a[(i, c)] + &v;
    }
    for r in 0..n {
        let v = a[(r, j)].clone();
        a[(r, i)] = &a[(r, i)] + &v;
        let v = p[(r, j)].clone();
        p[(r, i)] = &p[(r, i)] + &v;
    }
}

/// `(n₊, n₋, n₀)` of a real symmetric matrix.
pub fn signature(s: &RealMatrix) -> Result<Signature> {
    Ok(diagonalize_symmetric(s)?.signature())
}

/// Gram matrix `Bᵀ·S·B` of a form restricted to the span of the given vectors.
pub fn restrict_form(s: &RealMatrix, vectors: &[Vec<Rational>]) -> RealMatrix {
    let b = Matrix::from_columns(vectors, s.rows());
    b.transpose().mul(&s.mul(&b))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactlin::scalar::qi;

    #[test]
    fn diagonal_signatures() {
        let s = RealMatrix::diagonal(&[qi(1), qi(1), qi(-1)]);
        assert_eq!(signature(&s).unwrap(), Signature::new(2, 1, 0));
        assert_eq!(signature(&RealMatrix::zeros(4, 4)).unwrap(), Signature::new(0, 0, 4));
    }

    #[test]
    fn hyperbolic_plane_needs_the_off_diagonal_fold() {
        let s = RealMatrix::from_int_rows(&[&[0, 1], &[1, 0]]);
        let d = diagonalize_symmetric(&s).unwrap();
        assert_eq!(d.signature(), Signature::new(1, 1, 0));
        let check = d.basis.transpose().mul(&s.mul(&d.basis));
        assert_eq!(check, RealMatrix::diagonal(&d.diag));
    }

    #[test]
    fn rejects_non_symmetric() {
        let s = RealMatrix::from_int_rows(&[&[0, 1], &[0, 0]]);
        assert!(matches!(signature(&s), Err(Error::NotSymmetric)));
    }
}
