//! Weight spaces, highest weight vectors, isotypic decompositions, real
//! types, invariant forms, bracket tables and symmetric pairs.
//!
//! Weight theory is only available for modules of unitary algebras, where
//! the complexification is `sl(n,ℂ)` (plus the centre for `u(p,q)`).

use std::collections::BTreeSet;
use std::sync::Arc;

use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::exactlin::{
    diagonalize_symmetric, floor_to_i64, joint_kernel, kernel, kernel_of_rows, min_poly, rank, rational_sqrt,
    restrict_form, signature, solve_homogeneous, vector, ComplexMatrix, CoordinateSolver, EchelonBasis, Gaussian,
    Matrix, Poly, Rational, RealMatrix, Scalar, Signature,
};
use crate::liealg::{cartan_data, killing_form, orthogonal_algebra, AlgebraKind, Embedding, MatrixLieAlgebra};
use crate::repkit::{
    complexify, defining_real_rep, defining_rep_of, highest_weight_module, invariant_closure, realify, wedge2_rep,
    ComplexRep, RealRep, Representation,
};
use crate::weights::{enumerate_dominant, fundamental_weight, is_self_conjugate, weyl_dim, DominantWeight, WeightVector};

// ---------------------------------------------------------------------------
// weight operators

/// Images of the Chevalley generators `Hᵢ, Eᵢ, Fᵢ` of `sl(n,ℂ)` (and of the
/// identity, for `u(p,q)`) under a complex representation.
#[derive(Clone, Debug)]
pub struct WeightOperators {
    pub n: usize,
    pub h: Vec<ComplexMatrix>,
    pub e: Vec<ComplexMatrix>,
    pub f: Vec<ComplexMatrix>,
    pub center: Option<ComplexMatrix>,
}

fn unitary_rank(g: &MatrixLieAlgebra) -> Result<usize> {
    match g.kind() {
        AlgebraKind::Unitary { p, q, .. } => Ok(p + q),
        _ => Err(Error::Unsupported(format!("weight theory for {}", g.name()))),
    }
}

fn image_of(r: &ComplexRep, x: &ComplexMatrix) -> Option<ComplexMatrix> {
    let c = r.algebra().complex_coords(x)?;
    let mut out = ComplexMatrix::zeros(r.dim(), r.dim());
    for (ck, m) in c.iter().zip(r.action()) {
        if !ck.is_zero() {
            out.add_scaled(ck, m);
        }
    }
    Some(out)
}

pub fn weight_operators(r: &ComplexRep) -> Result<WeightOperators> {
    let n = unitary_rank(r.algebra())?;
    let cd = cartan_data(n)?;
    let img = |xs: &[ComplexMatrix]| -> Result<Vec<ComplexMatrix>> {
        xs.iter()
            .map(|x| image_of(r, x).ok_or_else(|| Error::NotInAlgebra(format!("complexification of {}", r.algebra().name()))))
            .collect()
    };
    Ok(WeightOperators {
        n,
        h: img(&cd.h)?,
        e: img(&cd.e)?,
        f: img(&cd.f)?,
        center: image_of(r, &ComplexMatrix::identity(n)),
    })
}

/// Restriction of `op` to the invariant subspace spanned by `basis`.
fn restrict_op<T: Scalar>(op: &Matrix<T>, basis: &[Vec<T>], solver: &CoordinateSolver<T>) -> Result<Matrix<T>> {
    let cols = basis
        .iter()
        .map(|b| solver.coords(&op.mul_vec(b)).ok_or(Error::NotInvariant))
        .collect::<Result<Vec<_>>>()?;
    Ok(Matrix::from_columns(&cols, basis.len()))
}

/// Restricts every operator to the span of `basis` (which must be invariant).
pub fn restrict_ops<T: Scalar>(ops: &[Matrix<T>], basis: &[Vec<T>]) -> Result<Vec<Matrix<T>>> {
    let len = basis.first().map_or(0, Vec::len);
    let solver = CoordinateSolver::new(basis, len)?;
    ops.iter().map(|m| restrict_op(m, basis, &solver)).collect()
}

fn real_poly(p: &Poly<Gaussian>) -> Option<Poly<Rational>> {
    p.coeffs()
        .iter()
        .map(|c| c.im.is_zero().then(|| c.re.clone()))
        .collect::<Option<Vec<_>>>()
        .map(Poly::new)
}

/// Eigen-decomposition of a diagonalizable operator with integer eigenvalues.
fn integer_eigenspaces(m: &ComplexMatrix) -> Result<Vec<(i64, Vec<Vec<Gaussian>>)>> {
    let mp = min_poly(m);
    let rp = real_poly(&mp).ok_or_else(|| Error::NonIntegralWeight("non-real eigenvalue".into()))?;
    let roots = rp.rational_roots();
    if Some(roots.len()) != rp.degree() {
        return Err(Error::NonIntegralWeight(format!("operator not diagonalizable over Q (minimal polynomial {rp:?})")));
    }
    let size = m.rows();
    roots
        .into_iter()
        .map(|r| {
            if !r.is_integer() {
                return Err(Error::NonIntegralWeight(format!("eigenvalue {r}")));
            }
            let k = floor_to_i64(&r).ok_or_else(|| Error::NonIntegralWeight(format!("eigenvalue {r}")))?;
            let shifted = m.sub(&ComplexMatrix::scalar(size, Gaussian::from_rational(r)));
            Ok((k, kernel(&shifted)))
        })
        .collect()
}

type LabeledSpaces = Vec<(Vec<i64>, Vec<Vec<Gaussian>>)>;

/// Simultaneous integer eigenspaces of commuting operators on the invariant
/// subspace spanned by `basis`, sorted by label.
fn simultaneous_split(ops: &[&ComplexMatrix], basis: Vec<Vec<Gaussian>>) -> Result<LabeledSpaces> {
    if basis.is_empty() {
        return Ok(Vec::new());
    }
    let len = basis[0].len();
    let mut parts: LabeledSpaces = vec![(Vec::new(), basis)];
    for op in ops {
        let mut next = Vec::new();
        for (label, b) in parts {
            let solver = CoordinateSolver::new(&b, len)?;
            let local = restrict_op(op, &b, &solver)?;
            for (k, vecs) in integer_eigenspaces(&local)? {
                let mut l = label.clone();
                l.push(k);
                let lifted = vecs.iter().map(|c| vector::combine(c, &b, len)).collect();
                next.push((l, lifted));
            }
        }
        parts = next;
    }
    parts.sort_by(|a, b| a.0.cmp(&b.0));
    Ok(parts)
}

fn full_basis(dim: usize) -> Vec<Vec<Gaussian>> {
    (0..dim).map(|i| vector::unit(dim, i)).collect()
}

/// Weight of given Dynkin labels as a vector in `𝔥`.
pub fn weight_from_labels(n: usize, labels: &[i64]) -> Result<WeightVector> {
    let mut acc = WeightVector::zero(n);
    for (i, &k) in labels.iter().enumerate() {
        let w = fundamental_weight(n, i + 1)?;
        let scaled: Vec<Rational> = w.coords().iter().map(|c| c * Rational::from_integer(k.into())).collect();
        acc = acc.add(&WeightVector::new(scaled)?);
    }
    Ok(acc)
}

/// Weight spaces of a complex module, keyed by Dynkin labels
/// `(λ(H₁), …, λ(H_{n−1}))` in increasing order.
pub fn weight_spaces_dynkin(r: &ComplexRep) -> Result<LabeledSpaces> {
    let ops = weight_operators(r)?;
    let refs: Vec<&ComplexMatrix> = ops.h.iter().collect();
    simultaneous_split(&refs, full_basis(r.dim()))
}

/// Weight spaces as vectors of `𝔥`.
pub fn weight_spaces(r: &ComplexRep) -> Result<Vec<(WeightVector, Vec<Vec<Gaussian>>)>> {
    let n = unitary_rank(r.algebra())?;
    weight_spaces_dynkin(r)?
        .into_iter()
        .map(|(l, b)| Ok((weight_from_labels(n, &l)?, b)))
        .collect()
}

/// Highest weight vectors of one weight (and central charge).
#[derive(Clone, Debug)]
pub struct HighestWeightBlock {
    pub weight: DominantWeight,
    pub central_charge: Option<i64>,
    pub vectors: Vec<Vec<Gaussian>>,
}

/// Joint kernel of the raising operators, split by weight and central
/// charge. Fails if the dimensions of the generated modules do not add up to
/// the module dimension.
pub fn highest_weight_vectors(r: &ComplexRep) -> Result<Vec<HighestWeightBlock>> {
    let ops = weight_operators(r)?;
    highest_weight_blocks(r, &ops)
}

fn highest_weight_blocks(r: &ComplexRep, ops: &WeightOperators) -> Result<Vec<HighestWeightBlock>> {
    let erefs: Vec<&ComplexMatrix> = ops.e.iter().collect();
    let k = joint_kernel(&erefs, r.dim());
    let mut split_ops: Vec<&ComplexMatrix> = ops.h.iter().collect();
    if let Some(c) = &ops.center {
        split_ops.push(c);
    }
    let mut out = Vec::new();
    let mut total: u128 = 0;
    for (label, vectors) in simultaneous_split(&split_ops, k)? {
        let (dyn_labels, charge) = match ops.center {
            Some(_) => (&label[..ops.n - 1], Some(label[ops.n - 1])),
            None => (&label[..], None),
        };
        let coeffs = dyn_labels
            .iter()
            .map(|&x| u32::try_from(x).map_err(|_| Error::NonIntegralWeight(format!("non-dominant highest weight {label:?}"))))
            .collect::<Result<Vec<_>>>()?;
        let weight = DominantWeight::new(ops.n, coeffs)?;
        total += weyl_dim(&weight) * vectors.len() as u128;
        out.push(HighestWeightBlock {
            weight,
            central_charge: charge,
            vectors,
        });
    }
    if total != r.dim() as u128 {
        return Err(Error::Incomplete(format!(
            "highest weight vectors account for dimension {total} of {}",
            r.dim()
        )));
    }
    Ok(out)
}

// ---------------------------------------------------------------------------
// isotypic decompositions

/// One isotypic component. For real decompositions every component is a
/// single irreducible summand (`multiplicity = 1`).
#[derive(Clone, Debug)]
pub struct Component<T> {
    pub label: String,
    /// Finer name when a coarse slot splits into several summands.
    pub fine_label: Option<String>,
    pub highest_weight: DominantWeight,
    /// Highest weight of the conjugate summand, for real components of complex type.
    pub conjugate_weight: Option<DominantWeight>,
    pub central_charge: Option<i64>,
    /// Dimension of one irreducible copy, over the decomposition's field.
    pub dim: usize,
    pub multiplicity: usize,
    pub basis: Vec<Vec<T>>,
}

#[derive(Clone, Debug)]
pub struct IsotypicDecomposition<T> {
    pub module: String,
    pub algebra: String,
    pub module_dim: usize,
    pub components: Vec<Component<T>>,
}

impl<T: Scalar> IsotypicDecomposition<T> {
    /// Component dimensions `dim × multiplicity`, in order.
    pub fn dims(&self) -> Vec<usize> {
        self.components.iter().map(|c| c.dim * c.multiplicity).collect()
    }

    pub fn sorted_dims(&self) -> Vec<usize> {
        let mut d = self.dims();
        d.sort_unstable();
        d
    }

    pub fn labels(&self) -> Vec<&str> {
        self.components.iter().map(|c| c.label.as_str()).collect()
    }

    /// Indices of all components carrying a label.
    pub fn indices_with_label(&self, label: &str) -> Vec<usize> {
        (0..self.components.len()).filter(|&i| self.components[i].label == label).collect()
    }

    /// The component bases jointly form a basis of the module.
    pub fn spans_module(&self) -> bool {
        let mut eb = EchelonBasis::new(self.module_dim);
        let mut count = 0;
        for c in &self.components {
            for v in &c.basis {
                count += 1;
                if !eb.insert(v.clone()) {
                    return false;
                }
            }
        }
        count == self.module_dim
    }

    /// Every component basis spans an invariant subspace of `r`. Pieces of
    /// a split slot (those with a `fine_label`) are only required to be
    /// invariant under the semisimple part, since that is where they split.
    pub fn components_invariant(&self, r: &Representation<T>) -> bool {
        let ss = semisimple_generators(r.algebra());
        self.components.iter().all(|c| {
            let eb = EchelonBasis::from_vectors(r.dim(), c.basis.iter().cloned());
            let stable = |m: &Matrix<T>| c.basis.iter().all(|v| eb.contains(&m.mul_vec(v)));
            if c.fine_label.is_some() {
                ss.iter().all(|&i| stable(&r.action()[i]))
            } else {
                r.action().iter().all(stable)
            }
        })
    }

    /// The projections onto the components sum to the identity: each basis
    /// vector of the module is the sum of its component parts.
    pub fn projections_sum_to_identity(&self) -> bool {
        let all: Vec<Vec<T>> = self.components.iter().flat_map(|c| c.basis.iter().cloned()).collect();
        let Ok(solver) = CoordinateSolver::new(&all, self.module_dim) else {
            return false;
        };
        (0..self.module_dim).all(|i| {
            let e = vector::unit::<T>(self.module_dim, i);
            let c = solver.coords_unchecked(&e);
            let mut sum = vec![T::zero(); self.module_dim];
            let mut offset = 0;
            for comp in &self.components {
                let k = comp.basis.len();
                let part = vector::combine(&c[offset..offset + k], &comp.basis, self.module_dim);
                sum = vector::add(&sum, &part);
                offset += k;
            }
            sum == e
        })
    }
}

fn complex_label(w: &DominantWeight, c: Option<i64>) -> String {
    match c {
        Some(c) => format!("W({w}; c={c})"),
        None => format!("W({w})"),
    }
}

/// Name of the real module with key `(λ, c)` (or its conjugate).
///
/// Labels name the `su(p,q)`-module class; the central charge only matters
/// at `n = 3`, where `Λ²C³ ≅ (C³)*` and the charge ±2 of `Λ²C³` under
/// `u(p,q)` picks the wedge name.
fn real_label(g: &MatrixLieAlgebra, w: &DominantWeight, c: Option<i64>) -> String {
    let (p, q) = match g.kind() {
        AlgebraKind::Unitary { p, q, .. } => (p, q),
        _ => (0, 0),
    };
    let n = w.n();
    let is = |i: usize| DominantWeight::fundamental(n, i).ok().as_ref() == Some(w);
    if w.is_zero() {
        return "R".into();
    }
    if DominantWeight::from_terms(n, &[(1, 1), (n - 1, 1)]).ok().as_ref() == Some(w) {
        return format!("su({p},{q})");
    }
    let wedge = if n == 3 { (is(2) && c == Some(2)) || (is(1) && c == Some(-2)) } else { is(2) || is(n - 2) };
    if wedge {
        return format!("(Λ²C^{n})_R");
    }
    if is(1) || is(n - 1) {
        return format!("C^{{{p},{q}}}_R");
    }
    match c {
        Some(c) if c != 0 => format!("V({w}; c={c})"),
        _ => format!("V({w})"),
    }
}

/// Splits a complex module into isotypic components, one per highest weight
/// (and central charge), each spanned by the modules generated from its
/// highest weight vectors under the lowering operators.
pub fn complex_isotypic(r: &ComplexRep) -> Result<IsotypicDecomposition<Gaussian>> {
    let ops = weight_operators(r)?;
    let blocks = highest_weight_blocks(r, &ops)?;
    let mut components = Vec::new();
    for b in blocks {
        let d = weyl_dim(&b.weight) as usize;
        let mut basis = Vec::new();
        for v in &b.vectors {
            let copy = invariant_closure(&ops.f, std::slice::from_ref(v), r.dim());
            if copy.len() != d {
                return Err(Error::Incomplete(format!(
                    "highest weight vector of weight {} generates dimension {}, expected {d}",
                    b.weight,
                    copy.len()
                )));
            }
            basis.extend(copy);
        }
        components.push(Component {
            label: complex_label(&b.weight, b.central_charge),
            fine_label: None,
            highest_weight: b.weight,
            conjugate_weight: None,
            central_charge: b.central_charge,
            dim: d,
            multiplicity: b.vectors.len(),
            basis,
        });
    }
    let out = IsotypicDecomposition {
        module: r.name().to_string(),
        algebra: r.algebra().name().to_string(),
        module_dim: r.dim(),
        components,
    };
    if !out.spans_module() {
        return Err(Error::Incomplete("components do not span the module".into()));
    }
    Ok(out)
}

/// Real span of the real and imaginary parts of complex vectors.
fn real_points(vectors: &[Vec<Gaussian>], len: usize) -> Vec<Vec<Rational>> {
    let mut eb = EchelonBasis::new(len);
    for v in vectors {
        eb.insert(v.iter().map(|x| x.re.clone()).collect());
        eb.insert(v.iter().map(|x| x.im.clone()).collect());
    }
    eb.into_vectors()
}

/// Indices of basis elements spanning the semisimple part: the off-diagonal
/// generators of a unitary algebra, which generate `su(p,q)`. All of them
/// otherwise.
pub fn semisimple_generators(g: &MatrixLieAlgebra) -> Vec<usize> {
    match g.kind() {
        AlgebraKind::Unitary { p, q, traceless } => {
            let n = p + q;
            let start = if traceless { n - 1 } else { n };
            (start..g.dim()).collect()
        }
        _ => (0..g.dim()).collect(),
    }
}

/// Decomposes a real module into irreducible summands of the semisimple part
/// of its algebra.
///
/// The module is complexified and split into isotypic blocks; conjugate
/// blocks are paired and their real points taken. Blocks that may still be
/// reducible over `su(p,q)` (self-conjugate weights with non-zero central
/// charge, or multiplicity above one) are split further through the
/// commutant.
pub fn real_isotypic(r: &RealRep) -> Result<IsotypicDecomposition<Rational>> {
    let g = r.algebra().clone();
    let cd = complex_isotypic(&complexify(r))?;
    let gens: Vec<RealMatrix> = semisimple_generators(&g).into_iter().map(|i| r.action()[i].clone()).collect();
    let mut used = vec![false; cd.components.len()];
    let mut components = Vec::new();
    for i in 0..cd.components.len() {
        if used[i] {
            continue;
        }
        used[i] = true;
        let c = &cd.components[i];
        let conj_w = c.highest_weight.conjugate();
        let conj_c = c.central_charge.map(|x| -x);
        let partner = cd
            .components
            .iter()
            .position(|o| o.highest_weight == conj_w && o.central_charge == conj_c)
            .ok_or_else(|| Error::Incomplete(format!("no conjugate block for {}", c.label)))?;
        used[partner] = true;
        let self_conj = partner == i;
        let block = real_points(&c.basis, r.dim());
        let expected = if self_conj { c.basis.len() } else { 2 * c.basis.len() };
        if block.len() != expected {
            return Err(Error::Incomplete(format!(
                "real points of {} have dimension {}, expected {expected}",
                c.label,
                block.len()
            )));
        }
        let label = real_label(&g, &c.highest_weight, c.central_charge);
        let needs_split = c.multiplicity > 1 || (is_self_conjugate(&c.highest_weight) && !self_conj);
        let pieces = if needs_split {
            let local = restrict_ops(&gens, &block)?;
            split_irreducible(&local, block.len())?
                .into_iter()
                .map(|p| p.iter().map(|v| vector::combine(v, &block, r.dim())).collect())
                .collect()
        } else {
            vec![block]
        };
        let count = pieces.len();
        for (k, piece) in pieces.into_iter().enumerate() {
            components.push(Component {
                label: label.clone(),
                fine_label: (count > 1).then(|| format!("{label} [{}/{count}]", k + 1)),
                highest_weight: c.highest_weight.clone(),
                conjugate_weight: (!self_conj).then(|| conj_w.clone()),
                central_charge: c.central_charge,
                dim: piece.len(),
                multiplicity: 1,
                basis: piece,
            });
        }
    }
    Ok(IsotypicDecomposition {
        module: r.name().to_string(),
        algebra: g.name().to_string(),
        module_dim: r.dim(),
        components,
    })
}

// ---------------------------------------------------------------------------
// commutants

/// Basis of all `T` with `T·ρ(X) = ρ(X)·T` for every given operator.
pub fn commutant_of<T: Scalar>(ops: &[Matrix<T>], dim: usize) -> Vec<Matrix<T>> {
    hom_space_of(ops, ops, dim, dim)
}

/// Basis of all `T : V → W` with `T·ρ_V(X) = ρ_W(X)·T`.
pub fn hom_space_of<T: Scalar>(src: &[Matrix<T>], dst: &[Matrix<T>], dv: usize, dw: usize) -> Vec<Matrix<T>> {
    // unknown T[a][b] sits at a·dv + b
    let mut equations = Vec::new();
    for (rv, rw) in src.iter().zip(dst) {
        for a in 0..dw {
            for b in 0..dv {
                let mut eq = Vec::new();
                for k in 0..dv {
                    let x = &rv[(k, b)];
                    if !x.is_zero() {
                        eq.push((a * dv + k, x.clone()));
                    }
                }
                for k in 0..dw {
                    let x = &rw[(a, k)];
                    if !x.is_zero() {
                        eq.push((k * dv + b, -x.clone()));
                    }
                }
                equations.push(eq);
            }
        }
    }
    solve_homogeneous(equations, dw * dv)
        .into_iter()
        .map(|v| Matrix::from_flat(dw, dv, v))
        .collect()
}

pub fn commutant<T: Scalar>(r: &Representation<T>) -> Vec<Matrix<T>> {
    commutant_of(r.action(), r.dim())
}

/// Module maps `r → s` between modules of the same algebra.
pub fn hom_space<T: Scalar>(r: &Representation<T>, s: &Representation<T>) -> Result<Vec<Matrix<T>>> {
    if !crate::liealg::same_algebra(r.algebra(), s.algebra()) {
        return Err(Error::AlgebraMismatch {
            expected: r.algebra().name().to_string(),
            found: s.algebra().name().to_string(),
        });
    }
    Ok(hom_space_of(r.action(), s.action(), r.dim(), s.dim()))
}

fn is_scalar_matrix(t: &RealMatrix) -> bool {
    let n = t.rows();
    (0..n).all(|i| (0..n).all(|j| if i == j { t[(i, i)] == t[(0, 0)] } else { t[(i, j)].is_zero() }))
}

/// Trace-zero part of a commutant, with the form `b(x, y) = (xy + yx)/2`
/// (as a scalar). `None` if some `xy + yx` is not scalar.
fn pure_part(c: &[RealMatrix]) -> Option<(Vec<RealMatrix>, RealMatrix)> {
    let dim = c.first()?.rows();
    let dimq = Rational::from_integer((dim as i64).into());
    let mut eb = EchelonBasis::new(dim * dim);
    let mut pure = Vec::new();
    for t in c {
        let s = t.trace() / &dimq;
        let x = t.sub(&RealMatrix::scalar(dim, s));
        if !x.is_zero() && eb.insert(x.flatten()) {
            pure.push(x);
        }
    }
    let k = pure.len();
    let half = Rational::new(1.into(), 2.into());
    let mut gram = RealMatrix::zeros(k, k);
    for i in 0..k {
        for j in i..k {
            let s = pure[i].mul(&pure[j]).add(&pure[j].mul(&pure[i])).scale(&half);
            if !is_scalar_matrix(&s) {
                return None;
            }
            gram[(i, j)] = s[(0, 0)].clone();
            gram[(j, i)] = s[(0, 0)].clone();
        }
    }
    Some((pure, gram))
}

/// True when a commutant is `ℝ`, `ℂ` or `ℍ`.
fn is_division_algebra(c: &[RealMatrix]) -> bool {
    match c.len() {
        1 => true,
        2 | 4 => match pure_part(c) {
            Some((pure, gram)) => {
                pure.len() + 1 == c.len()
                    && signature(&gram).is_ok_and(|s| s.plus == 0 && s.zero == 0)
            }
            None => false,
        },
        _ => false,
    }
}

/// Candidates for commutant elements: basis elements first, then small
/// integer combinations of pairs.
fn commutant_candidates(c: &[RealMatrix]) -> Vec<RealMatrix> {
    let mut out: Vec<RealMatrix> = c.to_vec();
    for i in 0..c.len() {
        for j in i + 1..c.len() {
            for k in [1, -1, 2, -2] {
                out.push(c[i].add(&c[j].scale(&Rational::from_integer(k.into()))));
            }
        }
    }
    out
}

/// Proper non-zero invariant subspace from a commutant element with a
/// rational eigenvalue; scanning order is by candidate index.
fn proper_invariant_subspace(c: &[RealMatrix]) -> Option<Vec<Vec<Rational>>> {
    for t in commutant_candidates(c) {
        if is_scalar_matrix(&t) {
            continue;
        }
        let mp = min_poly(&t);
        if let Some(r) = mp.rational_roots().into_iter().next() {
            let n = t.rows();
            return Some(kernel(&t.sub(&RealMatrix::scalar(n, r))));
        }
    }
    None
}

/// Invariant complement of the submodule `u` via an idempotent of the commutant.
fn invariant_complement(c: &[RealMatrix], u: &[Vec<Rational>], dim: usize) -> Result<Vec<Vec<Rational>>> {
    // unknowns: a_0..a_{k−1} (coefficients of P in the commutant basis), t
    let k = c.len();
    let mut rows = Vec::new();
    for uj in u {
        let images: Vec<Vec<Rational>> = c.iter().map(|ci| ci.mul_vec(uj)).collect();
        for r in 0..dim {
            let mut row: Vec<Rational> = images.iter().map(|im| im[r].clone()).collect();
            row.push(-uj[r].clone());
            rows.push(row);
        }
    }
    let annihilator = kernel_of_rows(u.to_vec(), dim);
    for y in &annihilator {
        let images: Vec<Vec<Rational>> = c.iter().map(|ci| ci.transpose().mul_vec(y)).collect();
        for l in 0..dim {
            let mut row: Vec<Rational> = images.iter().map(|im| im[l].clone()).collect();
            row.push(Rational::zero());
            rows.push(row);
        }
    }
    let sol = kernel_of_rows(rows, k + 1)
        .into_iter()
        .find(|v| !v[k].is_zero())
        .ok_or_else(|| Error::Incomplete("no invariant complement found".into()))?;
    let t = sol[k].clone();
    let mut p = RealMatrix::zeros(dim, dim);
    for (a, ci) in sol[..k].iter().zip(c) {
        p.add_scaled(&(a / &t), ci);
    }
    let comp = kernel(&p);
    if comp.len() + u.len() != dim {
        return Err(Error::Incomplete("invariant complement has the wrong dimension".into()));
    }
    Ok(comp)
}

/// Splits a real module (given by operators in local coordinates) into
/// irreducible summands. Returns bases in local coordinates.
pub fn split_irreducible(ops: &[RealMatrix], dim: usize) -> Result<Vec<Vec<Vec<Rational>>>> {
    let whole: Vec<Vec<Rational>> = (0..dim).map(|i| vector::unit(dim, i)).collect();
    if dim <= 1 {
        return Ok(vec![whole]);
    }
    let c = commutant_of(ops, dim);
    if is_division_algebra(&c) {
        return Ok(vec![whole]);
    }
    let u = proper_invariant_subspace(&c)
        .ok_or_else(|| Error::Incomplete(format!("could not split a module of dimension {dim}")))?;
    let w = invariant_complement(&c, &u, dim)?;
    let mut out = Vec::new();
    for part in [u, w] {
        let local = restrict_ops(ops, &part)?;
        for piece in split_irreducible(&local, part.len())? {
            out.push(piece.iter().map(|v| vector::combine(v, &part, dim)).collect());
        }
    }
    Ok(out)
}

// ---------------------------------------------------------------------------
// real type

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum RealKind {
    Real,
    Complex,
    Quaternionic,
}

impl RealKind {
    pub fn as_str(self) -> &'static str {
        match self {
            Self::Real => "real",
            Self::Complex => "complex",
            Self::Quaternionic => "quaternionic",
        }
    }
}

impl std::fmt::Display for RealKind {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Clone, Debug)]
pub struct RealTypeVerdict {
    pub kind: RealKind,
    pub complex_dim: usize,
    /// Dimension of the irreducible real module attached to `w`.
    pub real_dim: usize,
    pub commutant_dim: usize,
    /// For real type: basis (in realified coordinates) of an invariant real
    /// form, when one is found over the rationals.
    pub real_form: Option<Vec<Vec<Rational>>>,
}

/// Classifies an irreducible complex module by the commutant of its
/// realification: `ℂ` (complex type), `M₂(ℝ)` (real type) or `ℍ`
/// (quaternionic type). The last two are told apart by the sign of the
/// quadratic form `x ↦ x²` on trace-free commutant elements.
pub fn real_type(w: &ComplexRep) -> Result<RealTypeVerdict> {
    let v = realify(w);
    let gens: Vec<RealMatrix> = semisimple_generators(w.algebra()).into_iter().map(|i| v.action()[i].clone()).collect();
    let c = commutant_of(&gens, v.dim());
    let d = w.dim();
    match c.len() {
        2 => {
            let x = c.iter().find(|t| !is_scalar_matrix(t)).expect("two-dimensional commutant has a non-scalar");
            if !min_poly(x).is_irreducible_quadratic() {
                return Err(Error::NotIrreducible(2));
            }
            Ok(RealTypeVerdict {
                kind: RealKind::Complex,
                complex_dim: d,
                real_dim: 2 * d,
                commutant_dim: 2,
                real_form: None,
            })
        }
        4 => {
            let (pure, gram) = pure_part(&c).ok_or(Error::NotIrreducible(4))?;
            let sig = signature(&gram)?;
            if pure.len() != 3 || sig.zero != 0 {
                return Err(Error::NotIrreducible(4));
            }
            if sig.plus == 0 {
                return Ok(RealTypeVerdict {
                    kind: RealKind::Quaternionic,
                    complex_dim: d,
                    real_dim: 2 * d,
                    commutant_dim: 4,
                    real_form: None,
                });
            }
            Ok(RealTypeVerdict {
                kind: RealKind::Real,
                complex_dim: d,
                real_dim: d,
                commutant_dim: 4,
                real_form: find_real_form(&pure, &gram, d),
            })
        }
        k => Err(Error::NotIrreducible(k)),
    }
}

/// A commutant element `x` with `x² = s²` (or `x² = 0`, `x ≠ 0`) has an
/// eigenspace of half the dimension, which is a real form.
fn find_real_form(pure: &[RealMatrix], gram: &RealMatrix, d: usize) -> Option<Vec<Vec<Rational>>> {
    let mut coeff_candidates: Vec<Vec<Rational>> = Vec::new();
    let k = pure.len();
    for i in 0..k {
        coeff_candidates.push(vector::unit(k, i));
    }
    if let Ok(diag) = diagonalize_symmetric(gram) {
        for j in 0..k {
            coeff_candidates.push(diag.basis.column(j));
        }
    }
    let small = [-2i64, -1, 0, 1, 2];
    for a in small {
        for b in small {
            for c in small {
                coeff_candidates.push(vec![a.into(), b.into(), c.into()].into_iter().map(Rational::from_integer).collect());
            }
        }
    }
    for coeffs in coeff_candidates {
        if vector::is_zero(&coeffs) {
            continue;
        }
        let value = crate::liealg::form_value(gram, &coeffs, &coeffs);
        let shift = if value.is_zero() {
            Rational::zero()
        } else if value.is_positive() {
            match rational_sqrt(&value) {
                Some(s) => s,
                None => continue,
            }
        } else {
            continue;
        };
        let dim = pure[0].rows();
        let mut x = RealMatrix::zeros(dim, dim);
        for (a, p) in coeffs.iter().zip(pure) {
            x.add_scaled(a, p);
        }
        let space = kernel(&x.sub(&RealMatrix::scalar(dim, shift)));
        if space.len() == d {
            return Some(space);
        }
    }
    None
}

// ---------------------------------------------------------------------------
// invariant bilinear forms

#[derive(Clone, Debug)]
pub struct BilinearFormSpace {
    pub all: Vec<RealMatrix>,
    pub symmetric: Vec<RealMatrix>,
    pub antisymmetric: Vec<RealMatrix>,
    /// Signature of each symmetric generator, in order.
    pub signatures: Vec<Signature>,
}

impl BilinearFormSpace {
    pub fn dim(&self) -> usize {
        self.all.len()
    }

    /// `F·ρ(X) + ρ(X)ᵀ·F = 0` for every basis form and generator.
    pub fn check_invariance(&self, r: &RealRep) -> bool {
        self.all
            .iter()
            .chain(&self.symmetric)
            .chain(&self.antisymmetric)
            .all(|f| r.action().iter().all(|x| f.mul(x).add(&x.transpose().mul(f)).is_zero()))
    }
}

/// All invariant bilinear forms of a real module, split into symmetric and
/// antisymmetric parts. Generators are normalized so that their first
/// non-zero entry (row-major) is 1.
pub fn invariant_bilinear_forms(r: &RealRep) -> Result<BilinearFormSpace> {
    let d = r.dim();
    let mut equations = Vec::new();
    for x in r.action() {
        for a in 0..d {
            for b in 0..d {
                let mut eq = Vec::new();
                for k in 0..d {
                    if !x[(k, b)].is_zero() {
                        eq.push((a * d + k, x[(k, b)].clone()));
                    }
                    if !x[(k, a)].is_zero() {
                        eq.push((k * d + b, x[(k, a)].clone()));
                    }
                }
                equations.push(eq);
            }
        }
    }
    let all: Vec<RealMatrix> = solve_homogeneous(equations, d * d)
        .into_iter()
        .map(|v| RealMatrix::from_flat(d, d, v))
        .collect();
    let half = Rational::new(1.into(), 2.into());
    let sym = EchelonBasis::from_vectors(d * d, all.iter().map(|f| f.add(&f.transpose()).scale(&half).flatten()));
    let anti = EchelonBasis::from_vectors(d * d, all.iter().map(|f| f.sub(&f.transpose()).scale(&half).flatten()));
    let to_mats = |eb: EchelonBasis<Rational>| -> Vec<RealMatrix> {
        eb.into_vectors().into_iter().map(|v| RealMatrix::from_flat(d, d, v)).collect()
    };
    let symmetric = to_mats(sym);
    let antisymmetric = to_mats(anti);
    let signatures = symmetric.iter().map(signature).collect::<Result<Vec<_>>>()?;
    Ok(BilinearFormSpace {
        all,
        symmetric,
        antisymmetric,
        signatures,
    })
}

// ---------------------------------------------------------------------------
// bracket tables

fn component_solver(g: &MatrixLieAlgebra, d: &IsotypicDecomposition<Rational>) -> Result<(CoordinateSolver<Rational>, Vec<usize>)> {
    let all: Vec<Vec<Rational>> = d.components.iter().flat_map(|c| c.basis.iter().cloned()).collect();
    if d.module_dim != g.dim() || all.len() != g.dim() || all.iter().any(|v| v.len() != g.dim()) {
        return Err(Error::InvalidParameters(format!(
            "decomposition of a {}-dimensional module does not decompose {}",
            d.module_dim,
            g.name()
        )));
    }
    let solver = CoordinateSolver::new(&all, g.dim())
        .map_err(|_| Error::InvalidParameters("component bases are dependent".into()))?;
    let mut offsets = vec![0];
    for c in &d.components {
        offsets.push(offsets.last().unwrap() + c.basis.len());
    }
    Ok((solver, offsets))
}

/// Result of bracketing two sums of components.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BracketImage {
    /// Components onto which some bracket projects non-trivially.
    pub hits: BTreeSet<usize>,
    /// Dimension of the span of all brackets.
    pub image_dim: usize,
    /// The brackets span the whole sum of the hit components.
    pub fills_hits: bool,
}

/// Brackets all basis pairs of the sums `⊕_{i∈a}` and `⊕_{j∈b}` and projects
/// onto the components of `d`, which must decompose `g` itself.
pub fn bracket_image(g: &MatrixLieAlgebra, d: &IsotypicDecomposition<Rational>, a: &[usize], b: &[usize]) -> Result<BracketImage> {
    let (solver, offsets) = component_solver(g, d)?;
    for &i in a.iter().chain(b) {
        if i >= d.components.len() {
            return Err(Error::InvalidParameters(format!("no component {i}")));
        }
    }
    let mut hits = BTreeSet::new();
    let mut span = EchelonBasis::new(g.dim());
    for &i in a {
        for &j in b {
            for u in &d.components[i].basis {
                for v in &d.components[j].basis {
                    let w = g.bracket_coords(u, v);
                    if vector::is_zero(&w) {
                        continue;
                    }
                    let c = solver.coords_unchecked(&w);
                    for k in 0..d.components.len() {
                        if !hits.contains(&k) && c[offsets[k]..offsets[k + 1]].iter().any(|x| !x.is_zero()) {
                            hits.insert(k);
                        }
                    }
                    span.insert(w);
                }
            }
        }
    }
    let hit_dim: usize = hits.iter().map(|&k| d.components[k].basis.len()).sum();
    Ok(BracketImage {
        hits,
        image_dim: span.dim(),
        fills_hits: span.dim() == hit_dim,
    })
}

/// Components hit by `[component a, component b]`.
pub fn bracket_component_map(
    g: &MatrixLieAlgebra,
    d: &IsotypicDecomposition<Rational>,
    a: usize,
    b: usize,
) -> Result<BTreeSet<usize>> {
    Ok(bracket_image(g, d, &[a], &[b])?.hits)
}

// ---------------------------------------------------------------------------
// ∧²E ≅ so(E)

#[derive(Clone, Debug)]
pub struct WedgeSoReport {
    pub algebra: Arc<MatrixLieAlgebra>,
    /// Columns: so(E)-coordinates of the images of `eᵢ ∧ eⱼ`, `i < j`.
    pub map: RealMatrix,
    pub wedge_dim: usize,
    pub so_dim: usize,
    pub bijective: bool,
    /// First generator on which `Φ∘ρ_∧(X) ≠ ad(X)∘Φ`, if any.
    pub equivariance_failure: Option<String>,
}

impl WedgeSoReport {
    pub fn ok(&self) -> bool {
        self.bijective && self.equivariance_failure.is_none()
    }
}

/// `u ∧ v ↦ ⟨·,u⟩v − ⟨·,v⟩u` as a matrix, with bijectivity and
/// `so(E)`-equivariance checked exactly.
pub fn wedge_so_isomorphism(gram: &RealMatrix) -> Result<WedgeSoReport> {
    let so = orthogonal_algebra(gram)?;
    let def = defining_real_rep(&so)?;
    let w2 = wedge2_rep(&def)?;
    let d = gram.rows();
    let mut cols = Vec::new();
    for i in 0..d {
        for j in i + 1..d {
            // x ↦ ⟨x, eᵢ⟩eⱼ − ⟨x, eⱼ⟩eᵢ, i.e. eⱼ(Geᵢ)ᵀ − eᵢ(Geⱼ)ᵀ
            let mut x = RealMatrix::zeros(d, d);
            for c in 0..d {
                x[(j, c)] = &x[(j, c)] + &gram[(i, c)];
                x[(i, c)] = &x[(i, c)] - &gram[(j, c)];
            }
            let coords = so
                .coords(&x.complexify())
                .ok_or_else(|| Error::NotInAlgebra(format!("image of e{i}∧e{j} in {}", so.name())))?;
            cols.push(coords);
        }
    }
    let map = RealMatrix::from_columns(&cols, so.dim());
    let bijective = map.is_square() && rank(&map) == so.dim();
    let equivariance_failure = (0..so.dim()).find_map(|k| {
        (map.mul(&w2.action()[k]) != so.ad(k).mul(&map)).then(|| format!("generator X{k} of {}", so.name()))
    });
    Ok(WedgeSoReport {
        wedge_dim: w2.dim(),
        so_dim: so.dim(),
        algebra: so,
        map,
        bijective,
        equivariance_failure,
    })
}

// ---------------------------------------------------------------------------
// symmetric pairs

#[derive(Clone, Debug)]
pub struct SymmetricPairReport {
    pub g: String,
    pub h: String,
    pub g_dim: usize,
    pub h_dim: usize,
    pub m_basis: Vec<Vec<Rational>>,
    pub h_m_in_m: bool,
    pub m_m_in_h: bool,
    pub witness: Option<String>,
    pub m_label: String,
    /// `(label, dim)` of the summands of `m` as an `h`-module.
    pub m_components: Vec<(String, usize)>,
    pub killing_signature_m: Signature,
    pub killing_signature_h: Signature,
}

impl SymmetricPairReport {
    pub fn m_dim(&self) -> usize {
        self.m_basis.len()
    }

    pub fn is_symmetric_pair(&self) -> bool {
        self.h_m_in_m && self.m_m_in_h
    }
}

fn fmt_vec(v: &[Rational]) -> String {
    let parts: Vec<String> = v.iter().map(|x| x.to_string()).collect();
    format!("({})", parts.join(", "))
}

/// Checks that `g = e(h) ⊕ m`, with `m` the Killing-orthogonal complement
/// of `e(h)`, satisfies `[h, m] ⊆ m` and `[m, m] ⊆ h`, and identifies `m`
/// as an `h`-module.
pub fn symmetric_pair_check(e: &Embedding) -> Result<SymmetricPairReport> {
    let g = e.target();
    let h = e.source();
    let b = killing_form(g);
    let hvecs: Vec<Vec<Rational>> = (0..h.dim()).map(|i| e.image_coords(i).to_vec()).collect();
    let bh = restrict_form(&b, &hvecs);
    let degenerate = kernel(&bh);
    if let Some(k) = degenerate.first() {
        let w = vector::combine(k, &hvecs, g.dim());
        return Err(Error::DegenerateKilling { witness: fmt_vec(&w) });
    }
    let killing_signature_h = signature(&bh)?;
    let rows: Vec<Vec<Rational>> = hvecs.iter().map(|v| b.mul_vec(v)).collect();
    let m_basis = kernel_of_rows(rows, g.dim());
    let h_span = EchelonBasis::from_vectors(g.dim(), hvecs.iter().cloned());
    let m_span = EchelonBasis::from_vectors(g.dim(), m_basis.iter().cloned());
    let mut witness = None;
    let mut h_m_in_m = true;
    'hm: for (i, x) in hvecs.iter().enumerate() {
        for (j, y) in m_basis.iter().enumerate() {
            if !m_span.contains(&g.bracket_coords(x, y)) {
                h_m_in_m = false;
                witness = Some(format!("[h{i}, m{j}] not in m"));
                break 'hm;
            }
        }
    }
    let mut m_m_in_h = true;
    'mm: for (i, x) in m_basis.iter().enumerate() {
        for (j, y) in m_basis.iter().enumerate().skip(i + 1) {
            if !h_span.contains(&g.bracket_coords(x, y)) {
                m_m_in_h = false;
                witness.get_or_insert_with(|| format!("[m{i}, m{j}] not in h"));
                break 'mm;
            }
        }
    }
    let killing_signature_m = signature(&restrict_form(&b, &m_basis))?;
    let (m_label, m_components) = if h_m_in_m {
        let solver = CoordinateSolver::new(&m_basis, g.dim())?;
        let action = hvecs
            .iter()
            .map(|x| {
                let cols: Vec<Vec<Rational>> =
                    m_basis.iter().map(|y| solver.coords_unchecked(&g.bracket_coords(x, y))).collect();
                RealMatrix::from_columns(&cols, m_basis.len())
            })
            .collect();
        let m_rep = Representation::new(format!("{} / {}", g.name(), h.name()), h.clone(), action)?;
        label_module(&m_rep)?
    } else {
        ("not a module".to_string(), Vec::new())
    };
    Ok(SymmetricPairReport {
        g: g.name().to_string(),
        h: h.name().to_string(),
        g_dim: g.dim(),
        h_dim: h.dim(),
        m_basis,
        h_m_in_m,
        m_m_in_h,
        witness,
        m_label,
        m_components,
        killing_signature_m,
        killing_signature_h,
    })
}

/// Invertible element of a space of module maps, if a simple scan finds one.
///
/// Tries the basis maps, their sum, and `Σ (i+1)·mᵢ`; the invertible maps
/// form a Zariski-open set, so one of a few generic combinations usually
/// hits it when it is non-empty.
pub fn invertible_element(maps: &[RealMatrix]) -> Option<RealMatrix> {
    let mut candidates: Vec<RealMatrix> = maps.to_vec();
    if let Some(first) = maps.first() {
        let mut sum = RealMatrix::zeros(first.rows(), first.cols());
        let mut weighted = sum.clone();
        for (i, m) in maps.iter().enumerate() {
            sum = sum.add(m);
            weighted.add_scaled(&Rational::from_int(i as i64 + 1), m);
        }
        candidates.push(sum);
        candidates.push(weighted);
    }
    candidates
        .into_iter()
        .find(|m| m.is_square() && rank(m) == m.rows())
}

/// An invertible module map `r → s`, if one is found.
pub fn isomorphism(r: &RealRep, s: &RealRep) -> Result<Option<RealMatrix>> {
    if r.dim() != s.dim() {
        return Ok(None);
    }
    Ok(invertible_element(&hom_space(r, s)?))
}

/// Names a real module: by real isotypic decomposition for unitary
/// algebras, by comparison with the defining module for orthogonal ones.
pub fn label_module(r: &RealRep) -> Result<(String, Vec<(String, usize)>)> {
    let g = r.algebra();
    match g.kind() {
        AlgebraKind::Unitary { .. } => {
            let d = real_isotypic(r)?;
            let comps: Vec<(String, usize)> = d.components.iter().map(|c| (c.label.clone(), c.dim)).collect();
            let label = comps.iter().map(|(l, _)| l.as_str()).collect::<Vec<_>>().join(" + ");
            Ok((label, comps))
        }
        _ => {
            let def = defining_real_rep(g)?;
            if def.dim() == r.dim() && invertible_element(&hom_space(r, &def)?).is_some() {
                let sig = signature(g.gram().expect("orthogonal algebras carry a Gram matrix"))?;
                let label = format!("R^{{{},{}}}", sig.plus, sig.minus);
                Ok((label.clone(), vec![(label, r.dim())]))
            } else {
                Ok(("unidentified".into(), vec![("unidentified".into(), r.dim())]))
            }
        }
    }
}

// ---------------------------------------------------------------------------
// lowest dimensional real modules

#[derive(Clone, Debug)]
pub struct CandidateModule {
    pub weight: DominantWeight,
    pub conjugate: DominantWeight,
    pub complex_dim: u128,
    pub self_conjugate: bool,
    /// `None` when the module was not constructed because its real
    /// dimension is already known to exceed the bound.
    pub kind: Option<RealKind>,
    /// Real dimension, or a lower bound when `kind` is `None`.
    pub real_dim: u128,
}

#[derive(Clone, Debug)]
pub struct LowestDimReport {
    pub p: usize,
    pub q: usize,
    pub bound: u128,
    pub candidates: Vec<CandidateModule>,
    /// Non-trivial irreducible real modules of dimension at most `bound`.
    pub modules: Vec<CandidateModule>,
    pub defining_kind: RealKind,
}

/// All non-trivial irreducible real `su(p,q)`-modules of dimension at most
/// `2n + 1`.
///
/// Every such module is `W_ℝ` (complex or quaternionic `W`) or a real form
/// of `W` (real type), so its complex dimension is at most `2(2n+1)`.
/// Non-self-conjugate weights are of complex type and come in conjugate
/// pairs, listed once. Self-conjugate weights small enough to matter are
/// constructed and classified with [`real_type`].
pub fn lowest_dim_modules(p: usize, q: usize) -> Result<LowestDimReport> {
    let g = crate::liealg::unitary_algebra(p, q, true)?;
    let n = p + q;
    let bound = (2 * n + 1) as u128;
    let mut candidates = Vec::new();
    for (w, d) in enumerate_dominant(n, 2 * bound)? {
        if w.is_zero() {
            continue;
        }
        let conj = w.conjugate();
        let self_conjugate = is_self_conjugate(&w);
        if !self_conjugate {
            if w < conj {
                continue;
            }
            candidates.push(CandidateModule {
                weight: w,
                conjugate: conj,
                complex_dim: d,
                self_conjugate,
                kind: Some(RealKind::Complex),
                real_dim: 2 * d,
            });
        } else if d <= bound {
            let module = highest_weight_module(&g, &w)?;
            let v = real_type(&module)?;
            candidates.push(CandidateModule {
                weight: w,
                conjugate: conj,
                complex_dim: d,
                self_conjugate,
                kind: Some(v.kind),
                real_dim: v.real_dim as u128,
            });
        } else {
            candidates.push(CandidateModule {
                weight: w,
                conjugate: conj,
                complex_dim: d,
                self_conjugate,
                kind: None,
                real_dim: d,
            });
        }
    }
    let modules = candidates
        .iter()
        .filter(|c| c.kind.is_some() && c.real_dim <= bound)
        .cloned()
        .collect();
    let defining_kind = real_type(&defining_rep_of(&g))?.kind;
    Ok(LowestDimReport {
        p,
        q,
        bound,
        candidates,
        modules,
        defining_kind,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::liealg::{compact_unitary_algebra, embed_phi, embed_psi, unitary_algebra, PsiVariant};
    use crate::repkit::{adjoint_rep, defining_rep, restrict, tensor_rep};

    fn dw(n: usize, c: &[u32]) -> DominantWeight {
        DominantWeight::new(n, c.to_vec()).unwrap()
    }

    #[test]
    fn weights_of_small_modules() {
        let r = defining_rep(1, 2).unwrap();
        let ws = weight_spaces(&r).unwrap();
        assert_eq!(ws.len(), 3);
        assert!(ws.iter().all(|(_, b)| b.len() == 1));
        let ad = complexify(&adjoint_rep(&unitary_algebra(1, 2, true).unwrap()));
        let ws = weight_spaces_dynkin(&ad).unwrap();
        let zero = ws.iter().find(|(l, _)| l.iter().all(|&x| x == 0)).unwrap();
        assert_eq!(zero.1.len(), 2);
        let w2 = wedge2_rep(&defining_rep(1, 3).unwrap()).unwrap();
        let ws = weight_spaces(&w2).unwrap();
        assert_eq!(ws.len(), 6);
    }

    #[test]
    fn highest_weights() {
        let r = defining_rep(1, 2).unwrap();
        let hw = highest_weight_vectors(&r).unwrap();
        assert_eq!(hw.len(), 1);
        assert_eq!(hw[0].weight, dw(3, &[1, 0]));
        assert_eq!(hw[0].vectors[0], vector::unit(3, 0));
        let hw = highest_weight_vectors(&r.dual()).unwrap();
        assert_eq!(hw[0].weight, dw(3, &[0, 1]));
        let t = tensor_rep(&defining_rep(2, 2).unwrap(), &defining_rep(2, 2).unwrap()).unwrap();
        let ws: Vec<_> = highest_weight_vectors(&t).unwrap().into_iter().map(|b| b.weight).collect();
        assert_eq!(ws, vec![dw(4, &[0, 1, 0]), dw(4, &[2, 0, 0])]);
    }

    #[test]
    fn complex_decompositions() {
        let r = defining_rep(1, 2).unwrap();
        let t = tensor_rep(&r, &r).unwrap();
        let d = complex_isotypic(&t).unwrap();
        assert_eq!(d.sorted_dims(), vec![3, 6]);
        assert!(d.components_invariant(&t));
        assert!(d.projections_sum_to_identity());
        let d = complex_isotypic(&r).unwrap();
        assert_eq!(d.components.len(), 1);
    }

    #[test]
    fn phi_decomposition_1_2() {
        let phi = embed_phi(1, 2).unwrap();
        let m = restrict(&adjoint_rep(phi.target()), &phi).unwrap();
        let cd = complex_isotypic(&complexify(&m)).unwrap();
        assert_eq!(cd.sorted_dims(), vec![1, 3, 3, 8]);
        let d = real_isotypic(&m).unwrap();
        assert_eq!(d.sorted_dims(), vec![1, 6, 8]);
        let mut labels = d.labels();
        labels.sort();
        assert_eq!(labels, vec!["(Λ²C^3)_R", "R", "su(1,2)"]);
        assert!(d.spans_module());
        assert!(d.components_invariant(&m));
    }

    #[test]
    fn psi_decomposition_1_2() {
        let psi = embed_psi(1, 2, PsiVariant::First).unwrap();
        let m = restrict(&adjoint_rep(psi.target()), &psi).unwrap();
        let d = real_isotypic(&m).unwrap();
        assert_eq!(d.sorted_dims(), vec![1, 6, 6, 8]);
        let c = d.indices_with_label("C^{1,2}_R");
        assert_eq!(c.len(), 1);
        let r = d.indices_with_label("R");
        let img = bracket_image(psi.target(), &d, &r, &c).unwrap();
        assert_eq!(img.hits, c.iter().copied().collect());
        assert!(img.fills_hits);
    }

    #[test]
    fn real_types() {
        let g = unitary_algebra(2, 2, true).unwrap();
        let w = wedge2_rep(&defining_rep_of(&g)).unwrap();
        let v = real_type(&w).unwrap();
        assert_eq!((v.kind, v.real_dim, v.commutant_dim), (RealKind::Real, 6, 4));
        assert_eq!(v.real_form.map(|f| f.len()), Some(6));
        let g = unitary_algebra(1, 3, true).unwrap();
        let w = wedge2_rep(&defining_rep_of(&g)).unwrap();
        let v = real_type(&w).unwrap();
        assert_eq!((v.kind, v.real_dim), (RealKind::Quaternionic, 12));
        let v = real_type(&defining_rep(1, 2).unwrap()).unwrap();
        assert_eq!((v.kind, v.real_dim), (RealKind::Complex, 6));
    }

    #[test]
    fn forms_on_realified_defining() {
        for (p, q) in [(1, 2), (2, 2)] {
            let v = realify(&defining_rep(p, q).unwrap());
            let f = invariant_bilinear_forms(&v).unwrap();
            assert_eq!((f.dim(), f.symmetric.len(), f.antisymmetric.len()), (2, 1, 1));
            assert_eq!(f.signatures[0], Signature::new(2 * p, 2 * q, 0));
            assert_eq!(f.symmetric[0], crate::liealg::gram_phi(p, q));
            assert!(f.check_invariance(&v));
        }
        let su2 = compact_unitary_algebra(2, true).unwrap();
        let f = invariant_bilinear_forms(&adjoint_rep(&su2)).unwrap();
        assert_eq!(f.symmetric.len(), 1);
        let s = f.signatures[0];
        assert!(s.plus == 3 || s.minus == 3);
    }

    #[test]
    fn wedge_so_small() {
        let r = wedge_so_isomorphism(&RealMatrix::identity(2)).unwrap();
        assert!(r.ok());
        assert_eq!(r.algebra.element(&r.map.column(0)).real_part(), RealMatrix::from_int_rows(&[&[0, -1], &[1, 0]]));
        assert!(wedge_so_isomorphism(&RealMatrix::zeros(2, 2)).is_err());
    }

    #[test]
    fn lowest_dim_1_2() {
        let r = lowest_dim_modules(1, 2).unwrap();
        assert_eq!(r.modules.len(), 1);
        assert_eq!(r.modules[0].weight, dw(3, &[1, 0]));
        assert_eq!(r.modules[0].real_dim, 6);
        assert_eq!(r.defining_kind, RealKind::Complex);
    }
}
