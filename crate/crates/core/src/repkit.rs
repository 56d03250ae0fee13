//! Finite-dimensional representations of matrix Lie algebras and the usual
//! functors on them.
//!
//! A representation is typed by its scalar field, so real-only operations
//! (such as [`complexify`]) and complex-only ones (such as [`realify`]) are
//! checked at compile time.

use std::collections::HashMap;
use std::fmt;
use std::sync::Arc;

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::exactlin::{
    vector, ComplexMatrix, CoordinateSolver, EchelonBasis, Field, Gaussian, Matrix, Rational, RealMatrix, Scalar,
};
use crate::liealg::{same_algebra, AlgebraKind, Embedding, MatrixLieAlgebra};
use crate::weights::DominantWeight;

/// A Lie algebra together with one matrix per basis element.
#[derive(Clone)]
pub struct Representation<T> {
    name: String,
    algebra: Arc<MatrixLieAlgebra>,
    action: Vec<Matrix<T>>,
    dim: usize,
}

pub type ComplexRep = Representation<Gaussian>;
pub type RealRep = Representation<Rational>;

impl<T: Scalar> fmt::Debug for Representation<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Representation")
            .field("name", &self.name)
            .field("algebra", &self.algebra.name())
            .field("dim", &self.dim)
            .field("field", &T::FIELD)
            .finish()
    }
}

impl<T: Scalar> Representation<T> {
    /// Checks shapes only; see [`Representation::check_bracket_compatibility`]
    /// for the homomorphism property.
    pub fn new(name: impl Into<String>, algebra: Arc<MatrixLieAlgebra>, action: Vec<Matrix<T>>) -> Result<Self> {
        let name = name.into();
        if action.len() != algebra.dim() {
            return Err(Error::DimensionMismatch(format!(
                "{name}: {} action matrices for an algebra of dimension {}",
                action.len(),
                algebra.dim()
            )));
        }
        let dim = action.first().map_or(0, Matrix::rows);
        if action.iter().any(|m| m.rows() != dim || m.cols() != dim) {
            return Err(Error::DimensionMismatch(format!("{name}: action matrices differ in size")));
        }
        Ok(Self {
            name,
            algebra,
            action,
            dim,
        })
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = name.into();
        self
    }

    pub fn algebra(&self) -> &Arc<MatrixLieAlgebra> {
        &self.algebra
    }

    pub fn action(&self) -> &[Matrix<T>] {
        &self.action
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn field(&self) -> Field {
        T::FIELD
    }

    /// `ρ(x)` for an algebra element in real coordinates.
    pub fn act(&self, x: &[Rational]) -> Matrix<T> {
        let mut out = Matrix::zeros(self.dim, self.dim);
        for (c, m) in x.iter().zip(&self.action) {
            if !c.is_zero() {
                out.add_scaled(&T::from_rational(c.clone()), m);
            }
        }
        out
    }

    /// `ρ([Xᵢ, Xⱼ]) = [ρ(Xᵢ), ρ(Xⱼ)]` on all basis pairs, with the left side
    /// expanded through the structure constants.
    pub fn check_bracket_compatibility(&self) -> Option<String> {
        let d = self.algebra.dim();
        for i in 0..d {
            for j in i + 1..d {
                let lhs = self.act(&self.algebra.ad(i).column(j));
                let rhs = self.action[i].commutator(&self.action[j]);
                if lhs != rhs {
                    return Some(format!("{}: ρ([X{i}, X{j}]) != [ρ(X{i}), ρ(X{j})]", self.name));
                }
            }
        }
        None
    }

    /// `X ↦ −Xᵀ`.
    pub fn dual(&self) -> Self {
        Self {
            name: format!("({})*", self.name),
            algebra: self.algebra.clone(),
            action: self.action.iter().map(|m| m.transpose().neg()).collect(),
            dim: self.dim,
        }
    }

    /// Restricted action on an invariant subspace with the given basis.
    pub fn subrepresentation(&self, name: impl Into<String>, basis: &[Vec<T>]) -> Result<Self> {
        let solver = CoordinateSolver::new(basis, self.dim)?;
        let k = basis.len();
        let mut action = Vec::with_capacity(self.action.len());
        for m in &self.action {
            let mut cols = Vec::with_capacity(k);
            for b in basis {
                cols.push(solver.coords(&m.mul_vec(b)).ok_or(Error::NotInvariant)?);
            }
            action.push(Matrix::from_columns(&cols, k));
        }
        Self::new(name, self.algebra.clone(), action)
    }
}

/// Smallest subspace containing `seeds` and stable under every matrix in
/// `ops`. Returned basis vectors are the orbit vectors themselves, in
/// discovery order.
pub fn invariant_closure<T: Scalar>(ops: &[Matrix<T>], seeds: &[Vec<T>], len: usize) -> Vec<Vec<T>> {
    let mut span = EchelonBasis::new(len);
    let mut basis = Vec::new();
    let mut queue = std::collections::VecDeque::new();
    for s in seeds {
        if span.insert(s.clone()) {
            basis.push(s.clone());
            queue.push_back(s.clone());
        }
    }
    while let Some(v) = queue.pop_front() {
        for m in ops {
            let w = m.mul_vec(&v);
            if vector::is_zero(&w) {
                continue;
            }
            if span.insert(w.clone()) {
                basis.push(w.clone());
                queue.push_back(w);
            }
        }
    }
    basis
}

/// A submodule together with its basis inside the ambient module.
#[derive(Clone)]
pub struct Submodule<T> {
    pub rep: Representation<T>,
    pub basis: Vec<Vec<T>>,
}

impl<T: Scalar> fmt::Debug for Submodule<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Submodule").field("rep", &self.rep).field("dim", &self.basis.len()).finish()
    }
}

/// Submodule generated by `v` (closure under all action matrices).
pub fn generated_submodule<T: Scalar>(r: &Representation<T>, v: &[T]) -> Result<Submodule<T>> {
    if v.len() != r.dim() {
        return Err(Error::DimensionMismatch(format!("vector of length {} in a module of dimension {}", v.len(), r.dim())));
    }
    if vector::is_zero(v) {
        return Err(Error::ZeroVector);
    }
    let basis = invariant_closure(r.action(), &[v.to_vec()], r.dim());
    let rep = r.subrepresentation(format!("<v> ⊂ {}", r.name()), &basis)?;
    Ok(Submodule { rep, basis })
}

/// The algebra acting on its own matrices (complex field tag).
pub fn defining_rep_of(g: &Arc<MatrixLieAlgebra>) -> ComplexRep {
    let name = format!("C^{} of {}", g.size(), g.name());
    Representation::new(name, g.clone(), g.basis().to_vec()).expect("basis matrices are square of equal size")
}

/// `su(p,q)` on `ℂ^{p+q}`.
pub fn defining_rep(p: usize, q: usize) -> Result<ComplexRep> {
    let g = crate::liealg::unitary_algebra(p, q, true)?;
    Ok(defining_rep_of(&g).with_name(format!("C^{{{p},{q}}}")))
}

/// The defining module of an algebra of real matrices, such as `so(J)`.
pub fn defining_real_rep(g: &Arc<MatrixLieAlgebra>) -> Result<RealRep> {
    if !g.has_real_matrices() {
        return Err(Error::Unsupported(format!("{} is not an algebra of real matrices", g.name())));
    }
    let action = g.basis().iter().map(ComplexMatrix::real_part).collect();
    Representation::new(format!("R^{} of {}", g.size(), g.name()), g.clone(), action)
}

/// Trivial module of the given dimension.
pub fn trivial_rep<T: Scalar>(g: &Arc<MatrixLieAlgebra>, dim: usize) -> Representation<T> {
    let action = vec![Matrix::zeros(dim, dim); g.dim()];
    Representation::new("trivial", g.clone(), action).expect("zero matrices have matching shapes")
}

pub fn dual_rep<T: Scalar>(r: &Representation<T>) -> Representation<T> {
    r.dual()
}

/// Entrywise complex conjugate of a complex representation.
pub fn conjugate_rep(r: &ComplexRep) -> ComplexRep {
    Representation {
        name: format!("conj({})", r.name),
        algebra: r.algebra.clone(),
        action: r.action.iter().map(Matrix::conj).collect(),
        dim: r.dim,
    }
}

/// Adjoint representation through the structure constants.
pub fn adjoint_rep(g: &Arc<MatrixLieAlgebra>) -> RealRep {
    Representation::new(format!("ad {}", g.name()), g.clone(), g.ad_matrices().to_vec())
        .expect("adjoint matrices are square")
}

/// Index of each increasing `k`-subset of `0..d`, in lexicographic order.
pub fn wedge_basis(d: usize, k: usize) -> Vec<Vec<usize>> {
    fn rec(start: usize, d: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..d {
            cur.push(i);
            rec(i + 1, d, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(0, d, k, &mut Vec::new(), &mut out);
    out
}

/// Matrix of `X` acting on `∧ᵏ` by the Leibniz rule.
fn wedge_matrix<T: Scalar>(x: &Matrix<T>, subsets: &[Vec<usize>], index: &HashMap<Vec<usize>, usize>) -> Matrix<T> {
    let d = x.rows();
    let m = subsets.len();
    let mut out = Matrix::<T>::zeros(m, m);
    for (col, s) in subsets.iter().enumerate() {
        for (pos, &a) in s.iter().enumerate() {
            for t in 0..d {
                let c = &x[(t, a)];
                if c.is_zero() || (t != a && s.contains(&t)) {
                    continue;
                }
                let mut new = s.clone();
                new[pos] = t;
                // sign of the permutation sorting `new`
                let mut sign = 1;
                for i in 0..new.len() {
                    for j in i + 1..new.len() {
                        if new[i] > new[j] {
                            sign = -sign;
                        }
                    }
                }
                new.sort_unstable();
                let row = index[&new];
                let v = if sign > 0 { c.clone() } else { -c.clone() };
                out[(row, col)] = out[(row, col)].add_ref(&v);
            }
        }
    }
    out
}

/// `∧ᵏ r` on the basis `e_{i₁} ∧ ⋯ ∧ e_{iₖ}`, `i₁ < ⋯ < iₖ`, in lexicographic order.
pub fn wedge_power<T: Scalar>(r: &Representation<T>, k: usize) -> Result<Representation<T>> {
    if k > r.dim() {
        return Err(Error::InvalidParameters(format!("∧^{k} of a module of dimension {}", r.dim())));
    }
    let subsets = wedge_basis(r.dim(), k);
    let index: HashMap<Vec<usize>, usize> = subsets.iter().cloned().enumerate().map(|(i, s)| (s, i)).collect();
    let action = r.action.iter().map(|x| wedge_matrix(x, &subsets, &index)).collect();
    Representation::new(format!("Λ^{k}({})", r.name), r.algebra.clone(), action)
}

/// `∧² r`; rejects modules of dimension below 2.
pub fn wedge2_rep<T: Scalar>(r: &Representation<T>) -> Result<Representation<T>> {
    if r.dim() < 2 {
        return Err(Error::InvalidParameters(format!("∧² needs dimension ≥ 2, got {}", r.dim())));
    }
    wedge_power(r, 2)
}

/// `r ⊗ s` with `X ↦ ρ(X) ⊗ 1 + 1 ⊗ σ(X)`; basis `eᵢ ⊗ fⱼ` at index `i·dim s + j`.
pub fn tensor_rep<T: Scalar>(r: &Representation<T>, s: &Representation<T>) -> Result<Representation<T>> {
    if !same_algebra(&r.algebra, &s.algebra) {
        return Err(Error::AlgebraMismatch {
            expected: r.algebra.name().to_string(),
            found: s.algebra.name().to_string(),
        });
    }
    let ir = Matrix::identity(r.dim);
    let is = Matrix::identity(s.dim);
    let action = r
        .action
        .iter()
        .zip(&s.action)
        .map(|(a, b)| a.kron(&is).add(&ir.kron(b)))
        .collect();
    Representation::new(format!("{} ⊗ {}", r.name, s.name), r.algebra.clone(), action)
}

/// Complex module viewed as a real one of twice the dimension, coordinates
/// `x₁…x_d, y₁…y_d`.
pub fn realify(r: &ComplexRep) -> RealRep {
    Representation {
        name: format!("({})_R", r.name),
        algebra: r.algebra.clone(),
        action: r.action.iter().map(ComplexMatrix::realify).collect(),
        dim: 2 * r.dim,
    }
}

/// Scalar extension of a real module.
pub fn complexify(r: &RealRep) -> ComplexRep {
    Representation {
        name: format!("({}) ⊗ C", r.name),
        algebra: r.algebra.clone(),
        action: r.action.iter().map(RealMatrix::complexify).collect(),
        dim: r.dim,
    }
}

/// Pulls a module of `e.target()` back to `e.source()`.
pub fn restrict<T: Scalar>(r: &Representation<T>, e: &Embedding) -> Result<Representation<T>> {
    if !same_algebra(&r.algebra, e.target()) {
        return Err(Error::AlgebraMismatch {
            expected: e.target().name().to_string(),
            found: r.algebra.name().to_string(),
        });
    }
    let action = (0..e.source().dim()).map(|i| r.act(e.image_coords(i))).collect();
    Representation::new(format!("{}|{}", r.name, e.source().name()), e.source().clone(), action)
}

/// The irreducible `sl(n,ℂ)`-module of highest weight `λ`, realized inside
/// `⊗ᵢ (∧ⁱ ℂⁿ)^{⊗kᵢ}` as the submodule generated by `⊗ᵢ (e₁ ∧ ⋯ ∧ eᵢ)^{⊗kᵢ}`.
///
/// `g` must be a unitary algebra of size `n`; the result is a module of `g`.
pub fn highest_weight_module(g: &Arc<MatrixLieAlgebra>, lambda: &DominantWeight) -> Result<ComplexRep> {
    let AlgebraKind::Unitary { p, q, .. } = g.kind() else {
        return Err(Error::Unsupported(format!("highest weight modules of {}", g.name())));
    };
    let n = p + q;
    if lambda.n() != n {
        return Err(Error::InvalidParameters(format!("weight {lambda} is not an sl({n}) weight")));
    }
    if lambda.is_zero() {
        return Ok(trivial_rep(g, 1).with_name("W^0"));
    }
    let def = defining_rep_of(g);
    let mut acc: Option<ComplexRep> = None;
    for i in 1..n {
        let k = lambda.coeff(i);
        if k == 0 {
            continue;
        }
        let factor = wedge_power(&def, i)?;
        for _ in 0..k {
            acc = Some(match acc {
                None => factor.clone(),
                Some(a) => tensor_rep(&a, &factor)?,
            });
        }
    }
    let big = acc.expect("non-zero weight has a factor");
    // every factor's seed is its first basis vector, so the tensor seed is too
    let seed = vector::unit::<Gaussian>(big.dim(), 0);
    let sub = generated_submodule(&big, &seed)?;
    Ok(sub.rep.with_name(format!("W^({lambda})")))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::liealg::{embed_phi, orthogonal_algebra, gram_phi, unitary_algebra};

    #[test]
    fn defining_and_dual() {
        let r = defining_rep(1, 2).unwrap();
        assert_eq!(r.dim(), 3);
        assert_eq!(r.field(), Field::Complex);
        assert_eq!(r.action(), r.algebra().basis());
        assert_eq!(r.check_bracket_compatibility(), None);
        let d = r.dual();
        assert_eq!(d.dim(), 3);
        assert_eq!(d.dual().action(), r.action());
        assert_eq!(d.check_bracket_compatibility(), None);
    }

    #[test]
    fn wedge_dimensions() {
        let r = defining_rep(1, 3).unwrap();
        let w = wedge2_rep(&r).unwrap();
        assert_eq!(w.dim(), 6);
        assert_eq!(w.check_bracket_compatibility(), None);
        let w3 = wedge_power(&r, 3).unwrap();
        assert_eq!(w3.dim(), 4);
        assert_eq!(w3.check_bracket_compatibility(), None);
        let g = unitary_algebra(1, 2, true).unwrap();
        let one = trivial_rep::<Gaussian>(&g, 1);
        assert!(wedge2_rep(&one).is_err());
    }

    #[test]
    fn tensor_dimensions_and_mismatch() {
        let r = defining_rep(1, 2).unwrap();
        let t = tensor_rep(&r, &r).unwrap();
        assert_eq!(t.dim(), 9);
        assert_eq!(t.check_bracket_compatibility(), None);
        let s = defining_rep(2, 1).unwrap();
        assert!(matches!(tensor_rep(&r, &s), Err(Error::AlgebraMismatch { .. })));
        let one = trivial_rep::<Gaussian>(r.algebra(), 1);
        assert_eq!(tensor_rep(&r, &one).unwrap().action(), r.action());
    }

    #[test]
    fn realify_and_restrict_agree_with_phi() {
        let phi = embed_phi(1, 2).unwrap();
        let so = orthogonal_algebra(&gram_phi(1, 2)).unwrap();
        let def = defining_real_rep(&so).unwrap();
        let restricted = restrict(&def, &phi).unwrap();
        let u_def = defining_rep_of(phi.source());
        let real = realify(&u_def);
        assert_eq!(real.dim(), 6);
        assert_eq!(restricted.action(), real.action());
        assert_eq!(real.check_bracket_compatibility(), None);
        assert!(restrict(&adjoint_rep(&so), &phi).unwrap().dim() == 15);
        assert!(restrict(&def, &embed_phi(1, 1).unwrap()).is_err());
    }

    #[test]
    fn generated_submodules() {
        let r = defining_rep(1, 2).unwrap();
        let e1 = vector::unit::<Gaussian>(3, 0);
        assert_eq!(generated_submodule(&r, &e1).unwrap().basis.len(), 3);
        assert!(matches!(generated_submodule(&r, &vec![Gaussian::zero(); 3]), Err(Error::ZeroVector)));
        let t = tensor_rep(&r, &r).unwrap();
        let sym = generated_submodule(&t, &vector::unit(9, 0)).unwrap();
        assert_eq!(sym.basis.len(), 6);
        assert_eq!(sym.rep.check_bracket_compatibility(), None);
    }

    #[test]
    fn antisymmetric_seed_in_c4_tensor_c4() {
        let r = defining_rep(2, 2).unwrap();
        let t = tensor_rep(&r, &r).unwrap();
        let mut v = vec![Gaussian::zero(); 16];
        v[1] = Gaussian::from_int(1); // e1 ⊗ e2
        v[4] = Gaussian::from_int(-1); // e2 ⊗ e1
        assert_eq!(generated_submodule(&t, &v).unwrap().basis.len(), 6);
    }

    #[test]
    fn highest_weight_modules_have_weyl_dimension() {
        let g = unitary_algebra(2, 2, true).unwrap();
        for coeffs in [vec![0, 1, 0], vec![1, 0, 1], vec![2, 0, 0], vec![0, 2, 0]] {
            let lambda = DominantWeight::new(4, coeffs).unwrap();
            let w = highest_weight_module(&g, &lambda).unwrap();
            assert_eq!(w.dim() as u128, crate::weights::weyl_dim(&lambda), "{lambda}");
        }
    }
}
