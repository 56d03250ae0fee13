//! Exact linear algebra over the rationals and the Gaussian rationals.
//!
//! Nothing here ever rounds: entries are arbitrary-precision rationals, or
//! pairs of them for complex scalars. Eigenvalues are only ever searched for
//! among explicit candidate lists.

mod forms;
mod matrix;
mod poly;
mod reduce;
mod scalar;

pub use forms::{diagonalize_symmetric, restrict_form, signature, Diagonalization, Signature};
pub use matrix::{vector, ComplexMatrix, Matrix, RealMatrix};
pub use poly::{min_poly, rational_eigenspaces, Poly};
pub use reduce::{
    inverse, is_independent, joint_kernel, kernel, kernel_of_rows, rank, rref, CoordinateSolver,
    EchelonBasis,
};
pub use scalar::{floor_to_i64, gi, imag_unit, q, qi, rational_sqrt, Field, Gaussian, Rational, Scalar};

/// Basis vectors of `ker(A)` for a matrix given by rows of a linear system
/// in `unknowns` variables, where each equation is a sparse list of
/// `(variable, coefficient)` pairs.
pub fn solve_homogeneous<T: Scalar>(equations: Vec<Vec<(usize, T)>>, unknowns: usize) -> Vec<Vec<T>> {
    let mut eb = EchelonBasis::new(unknowns);
    for eq in equations {
        if eq.is_empty() {
            continue;
        }
        let mut row = vec![T::zero(); unknowns];
        for (i, c) in eq {
            row[i] = row[i].add_ref(&c);
        }
        eb.insert(row);
    }
    eb.orthogonal_kernel()
}
