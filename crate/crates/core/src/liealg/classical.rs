//! The concrete algebras: `u(p,q)`, `su(p,q)` and `so(J)`.
//!
//! Basis order for the unitary algebras (frozen; everything downstream
//! depends on it):
//!
//! 1. diagonal imaginary generators: `i·E_aa` for `u`, `i·(E_aa − E_{a+1,a+1})`
//!    for `su`;
//! 2. for each pair `a < b` in row-major order, `R_ab = E_ab − ε_aε_b E_ba`
//!    followed by `S_ab = i·(E_ab + ε_aε_b E_ba)`, where `I_{p,q} = diag(ε)`.
//!
//! `so(J)` uses `J⁻¹(E_ij − E_ji)` for `i < j` in row-major order.

use std::sync::Arc;

use num_traits::Zero;

use super::algebra::{AlgebraKind, MatrixLieAlgebra};
use crate::error::{Error, Result};
use crate::exactlin::{gi, inverse, qi, signature, ComplexMatrix, Gaussian, Rational, RealMatrix, Scalar};

/// `I_{p,q} = diag(1, …, 1, −1, …, −1)`.
pub fn ipq(p: usize, q: usize) -> RealMatrix {
    let entries: Vec<Rational> = (0..p + q).map(|i| if i < p { qi(1) } else { qi(-1) }).collect();
    RealMatrix::diagonal(&entries)
}

fn check_pq(p: usize, q: usize) -> Result<()> {
    if p == 0 || q == 0 {
        return Err(Error::InvalidParameters(format!("need p, q ≥ 1, got ({p}, {q})")));
    }
    Ok(())
}

fn unit(n: usize, a: usize, b: usize, c: Gaussian) -> ComplexMatrix {
    let mut m = ComplexMatrix::zeros(n, n);
    m[(a, b)] = c;
    m
}

fn build_unitary(p: usize, q: usize, traceless: bool) -> Result<MatrixLieAlgebra> {
    let n = p + q;
    let eps: Vec<i64> = (0..n).map(|i| if i < p { 1 } else { -1 }).collect();
    let mut basis = Vec::new();
    if traceless {
        for a in 0..n - 1 {
            let mut m = unit(n, a, a, gi(0, 1));
            m[(a + 1, a + 1)] = gi(0, -1);
            basis.push(m);
        }
    } else {
        for a in 0..n {
            basis.push(unit(n, a, a, gi(0, 1)));
        }
    }
    for a in 0..n {
        for b in a + 1..n {
            let s = eps[a] * eps[b];
            let mut r = unit(n, a, b, gi(1, 0));
            r[(b, a)] = gi(-s, 0);
            let mut im = unit(n, a, b, gi(0, 1));
            im[(b, a)] = gi(0, s);
            basis.push(r);
            basis.push(im);
        }
    }
    let name = match (q, traceless) {
        (0, true) => format!("su({p})"),
        (0, false) => format!("u({p})"),
        (_, true) => format!("su({p},{q})"),
        (_, false) => format!("u({p},{q})"),
    };
    MatrixLieAlgebra::from_basis(name, AlgebraKind::Unitary { p, q, traceless }, basis, Some(ipq(p, q)))
}

/// `u(p, q)` (or `su(p, q)` when `traceless`): all `X` with
/// `X*·I_{p,q} + I_{p,q}·X = 0`.
pub fn unitary_algebra(p: usize, q: usize, traceless: bool) -> Result<Arc<MatrixLieAlgebra>> {
    check_pq(p, q)?;
    Ok(Arc::new(build_unitary(p, q, traceless)?))
}

/// The compact forms `u(n)` and `su(n)`.
pub fn compact_unitary_algebra(n: usize, traceless: bool) -> Result<Arc<MatrixLieAlgebra>> {
    if n == 0 || (traceless && n < 2) {
        return Err(Error::InvalidParameters(format!("no compact unitary algebra of size {n}")));
    }
    Ok(Arc::new(build_unitary(n, 0, traceless)?))
}

/// `so(J)`: all real `X` with `Xᵀ·J + J·X = 0`.
pub fn orthogonal_algebra(j: &RealMatrix) -> Result<Arc<MatrixLieAlgebra>> {
    if !j.is_symmetric() {
        return Err(Error::NotSymmetric);
    }
    let jinv = inverse(j)?;
    let m = j.rows();
    let sig = signature(j)?;
    let mut basis = Vec::new();
    for a in 0..m {
        for b in a + 1..m {
            let mut e = RealMatrix::zeros(m, m);
            e[(a, b)] = qi(1);
            e[(b, a)] = qi(-1);
            basis.push(jinv.mul(&e).complexify());
        }
    }
    let name = format!("so({},{})", sig.plus, sig.minus);
    MatrixLieAlgebra::from_basis(name, AlgebraKind::Orthogonal, basis, Some(j.clone())).map(Arc::new)
}

/// `diag(I_{p,q}, I_{p,q})`, the form `⟨·,·⟩₀` on `ℂ^{p,q}_ℝ`.
pub fn gram_phi(p: usize, q: usize) -> RealMatrix {
    let i = ipq(p, q);
    RealMatrix::block_diag(&[&i, &i])
}

/// `diag(I_{p,q}, I_{p,q}, −1)`, defining `so(2p, 2q+1)`.
pub fn gram_psi1(p: usize, q: usize) -> RealMatrix {
    let i = ipq(p, q);
    RealMatrix::block_diag(&[&i, &i, &RealMatrix::diagonal(&[qi(-1)])])
}

/// `diag(1, I_{p,q}, I_{p,q})`, defining `so(2p+1, 2q)`.
pub fn gram_psi2(p: usize, q: usize) -> RealMatrix {
    let i = ipq(p, q);
    RealMatrix::block_diag(&[&RealMatrix::diagonal(&[qi(1)]), &i, &i])
}

/// Projection of a matrix onto the traceless part, `X − (tr X / n)·Id`.
pub fn traceless_part(x: &ComplexMatrix) -> ComplexMatrix {
    let n = x.rows();
    let t = x.trace().div_ref(&Gaussian::from_int(n as i64));
    if t.is_zero() {
        return x.clone();
    }
    x.sub(&ComplexMatrix::scalar(n, t))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactlin::{q, Signature};
    use crate::liealg::killing_form;

    #[test]
    fn unitary_dimensions() {
        assert_eq!(unitary_algebra(1, 1, true).unwrap().dim(), 3);
        assert_eq!(unitary_algebra(2, 2, true).unwrap().dim(), 15);
        assert_eq!(unitary_algebra(1, 2, false).unwrap().dim(), 9);
        assert!(unitary_algebra(0, 3, true).is_err());
        assert!(unitary_algebra(3, 0, false).is_err());
    }

    #[test]
    fn unitary_basis_preserves_the_hermitian_form() {
        for (p, q) in [(1, 2), (2, 2), (1, 3)] {
            for traceless in [true, false] {
                let g = unitary_algebra(p, q, traceless).unwrap();
                assert_eq!(g.check_defining_relation(), None);
                assert_eq!(g.check_structure_constants(), None);
            }
        }
    }

    #[test]
    fn center_of_u_is_spanned_by_i_identity() {
        let g = unitary_algebra(1, 2, false).unwrap();
        let dim = g.dim();
        // kernel of all ad maps, i.e. vectors v with [Xᵢ, v] = 0 for every i
        let rows: Vec<Vec<Rational>> = (0..dim).flat_map(|i| g.ad(i).row_vectors()).collect();
        let center = crate::exactlin::kernel_of_rows(rows, dim);
        assert_eq!(center.len(), 1);
        let z = g.element(&center[0]);
        let scale = z[(0, 0)].clone();
        assert_eq!(z, ComplexMatrix::scalar(3, scale.clone()));
        assert!(scale.re.is_zero());
    }

    #[test]
    fn orthogonal_dimensions_and_relation() {
        let so22 = orthogonal_algebra(&gram_phi(1, 1)).unwrap();
        assert_eq!(so22.dim(), 6);
        assert_eq!(so22.name(), "so(2,2)");
        let so25 = orthogonal_algebra(&gram_psi1(1, 2)).unwrap();
        assert_eq!(so25.dim(), 21);
        assert_eq!(so25.name(), "so(2,5)");
        let so34 = orthogonal_algebra(&gram_psi2(1, 2)).unwrap();
        assert_eq!(so34.name(), "so(3,4)");
        for g in [&so22, &so25, &so34] {
            let j = g.gram().unwrap().complexify();
            for x in g.basis() {
                assert!(x.transpose().mul(&j).add(&j.mul(x)).is_zero());
            }
        }
    }

    #[test]
    fn orthogonal_rejects_bad_forms() {
        let singular = RealMatrix::diagonal(&[qi(1), qi(0)]);
        assert!(orthogonal_algebra(&singular).is_err());
        let skew = RealMatrix::from_int_rows(&[&[1, 1], &[0, 1]]);
        assert!(matches!(orthogonal_algebra(&skew), Err(Error::NotSymmetric)));
    }

    #[test]
    fn killing_form_of_su2_and_su11() {
        let su2 = compact_unitary_algebra(2, true).unwrap();
        let b = killing_form(&su2);
        // basis element 0 is diag(i, −i)
        assert_eq!(b[(0, 0)], qi(-8));
        // cross-check against 2n·tr(XY) on all pairs
        for i in 0..su2.dim() {
            for j in 0..su2.dim() {
                let t = su2.basis()[i].trace_of_product(&su2.basis()[j]);
                assert_eq!(Gaussian::from_rational(b[(i, j)].clone()), t.mul_ref(&Gaussian::from_int(4)));
            }
        }
        let su11 = unitary_algebra(1, 1, true).unwrap();
        assert_eq!(signature(&killing_form(&su11)).unwrap(), Signature::new(2, 1, 0));
        let _ = q(1, 2);
    }
}
