use std::fmt;

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::exactlin::{
    vector, ComplexMatrix, CoordinateSolver, Gaussian, Rational, RealMatrix, Scalar,
};

/// Which family a matrix algebra was built from. Decomposition code uses
/// this to locate the `sl(n, ℂ)` Cartan data of unitary algebras.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum AlgebraKind {
    /// `u(p, q)` or, when `traceless`, `su(p, q)`. `q = 0` is the compact form.
    Unitary { p: usize, q: usize, traceless: bool },
    /// `so(J)` for a symmetric invertible `J`.
    Orthogonal,
    Custom,
}

/// Real Lie algebra given by an ordered basis of (possibly complex) square
/// matrices, with exact structure constants.
///
/// Structure constants are stored as adjoint matrices: column `j` of
/// `ad[i]` holds the coordinates of `[Xᵢ, Xⱼ]`.
#[derive(Clone)]
pub struct MatrixLieAlgebra {
    name: String,
    kind: AlgebraKind,
    size: usize,
    basis: Vec<ComplexMatrix>,
    gram: Option<RealMatrix>,
    ad: Vec<RealMatrix>,
    real_solver: CoordinateSolver<Rational>,
    complex_solver: CoordinateSolver<Gaussian>,
}

impl fmt::Debug for MatrixLieAlgebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("MatrixLieAlgebra")
            .field("name", &self.name)
            .field("kind", &self.kind)
            .field("size", &self.size)
            .field("dim", &self.dim())
            .finish()
    }
}

fn real_flatten(m: &ComplexMatrix) -> Vec<Rational> {
    let mut v: Vec<Rational> = m.entries().iter().map(|x| x.re.clone()).collect();
    v.extend(m.entries().iter().map(|x| x.im.clone()));
    v
}

impl MatrixLieAlgebra {
    /// Builds the algebra spanned by `basis`, computing structure constants.
    /// Fails if the basis is dependent or not closed under the bracket.
    pub fn from_basis(
        name: impl Into<String>,
        kind: AlgebraKind,
        basis: Vec<ComplexMatrix>,
        gram: Option<RealMatrix>,
    ) -> Result<Self> {
        let name = name.into();
        let size = basis.first().map_or(0, |b| b.rows());
        if basis.iter().any(|b| b.rows() != size || b.cols() != size) {
            return Err(Error::DimensionMismatch(format!("{name}: basis matrices differ in size")));
        }
        let flat: Vec<Vec<Rational>> = basis.iter().map(real_flatten).collect();
        let real_solver = CoordinateSolver::new(&flat, 2 * size * size)?;
        let cflat: Vec<Vec<Gaussian>> = basis.iter().map(|b| b.flatten()).collect();
        let complex_solver = CoordinateSolver::new(&cflat, size * size)
            .map_err(|_| Error::Unsupported(format!("{name}: basis is not a complex basis of its span")))?;
        let dim = basis.len();
        let mut ad = vec![RealMatrix::zeros(dim, dim); dim];
        for i in 0..dim {
            for j in i + 1..dim {
                let br = basis[i].commutator(&basis[j]);
                let c = real_solver
                    .coords(&real_flatten(&br))
                    .ok_or_else(|| Error::NotInAlgebra(format!("{name} (bracket of basis {i}, {j})")))?;
                for (k, ck) in c.into_iter().enumerate() {
                    if ck.is_zero() {
                        continue;
                    }
                    ad[j][(k, i)] = -ck.clone();
                    ad[i][(k, j)] = ck;
                }
            }
        }
        Ok(Self {
            name,
            kind,
            size,
            basis,
            gram,
            ad,
            real_solver,
            complex_solver,
        })
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn kind(&self) -> AlgebraKind {
        self.kind
    }

    /// Size of the ambient square matrices.
    pub fn size(&self) -> usize {
        self.size
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[ComplexMatrix] {
        &self.basis
    }

    pub fn gram(&self) -> Option<&RealMatrix> {
        self.gram.as_ref()
    }

    /// True when every basis matrix has real entries.
    pub fn has_real_matrices(&self) -> bool {
        self.basis.iter().all(ComplexMatrix::is_real)
    }

    /// `ad(Xᵢ)` in the algebra basis.
    pub fn ad(&self, i: usize) -> &RealMatrix {
        &self.ad[i]
    }

    pub fn ad_matrices(&self) -> &[RealMatrix] {
        &self.ad
    }

    /// `c_{ij}^k`, the `Xₖ`-coefficient of `[Xᵢ, Xⱼ]`.
    pub fn structure_constant(&self, i: usize, j: usize, k: usize) -> &Rational {
        &self.ad[i][(k, j)]
    }

    /// Same algebra with `c_{ij}^k` shifted by `delta` (and nothing else).
    pub fn with_perturbed_structure_constant(&self, i: usize, j: usize, k: usize, delta: &Rational) -> Self {
        let mut out = self.clone();
        out.ad[i][(k, j)] = &out.ad[i][(k, j)] + delta;
        out
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = name.into();
        self
    }

    /// Real coordinates of a matrix, or `None` if it is not in the algebra.
    pub fn coords(&self, m: &ComplexMatrix) -> Option<Vec<Rational>> {
        if m.rows() != self.size || m.cols() != self.size {
            return None;
        }
        self.real_solver.coords(&real_flatten(m))
    }

    /// Coordinates in the complexification `g ⊗ ℂ`, for matrices in the
    /// complex span of the basis.
    pub fn complex_coords(&self, m: &ComplexMatrix) -> Option<Vec<Gaussian>> {
        if m.rows() != self.size || m.cols() != self.size {
            return None;
        }
        self.complex_solver.coords(&m.flatten())
    }

    pub fn element(&self, coords: &[Rational]) -> ComplexMatrix {
        let mut out = ComplexMatrix::zeros(self.size, self.size);
        for (c, b) in coords.iter().zip(&self.basis) {
            if !c.is_zero() {
                out.add_scaled(&Gaussian::from_rational(c.clone()), b);
            }
        }
        out
    }

    /// Coordinates of `[u, v]` from the structure constants.
    pub fn bracket_coords(&self, u: &[Rational], v: &[Rational]) -> Vec<Rational> {
        let dim = self.dim();
        let mut out = vec![Rational::zero(); dim];
        for (i, ui) in u.iter().enumerate() {
            if ui.is_zero() {
                continue;
            }
            let adv = self.ad[i].mul_vec(v);
            vector::axpy(&mut out, ui, &adv);
        }
        out
    }

    /// Compares the stored structure constants with actual matrix
    /// commutators. Returns a witness `(i, j)` on the first mismatch.
    pub fn check_structure_constants(&self) -> Option<String> {
        for i in 0..self.dim() {
            for j in 0..self.dim() {
                let expected = self.basis[i].commutator(&self.basis[j]);
                let column = self.ad[i].column(j);
                if self.element(&column) != expected {
                    return Some(format!(
                        "stored coordinates of [X{i}, X{j}] disagree with the matrix commutator"
                    ));
                }
            }
        }
        None
    }

    /// Antisymmetry `c_{ij}^k = −c_{ji}^k` of the stored constants.
    pub fn check_antisymmetry(&self) -> Option<String> {
        for i in 0..self.dim() {
            for j in i..self.dim() {
                for k in 0..self.dim() {
                    if self.ad[i][(k, j)] != -self.ad[j][(k, i)].clone() {
                        return Some(format!("c_({i},{j})^{k} != -c_({j},{i})^{k}"));
                    }
                }
            }
        }
        None
    }

    /// Jacobi identity on all basis triples, phrased as
    /// `ad([Xᵢ, Xⱼ]) = [ad Xᵢ, ad Xⱼ]`.
    pub fn check_jacobi(&self) -> Option<String> {
        let dim = self.dim();
        for i in 0..dim {
            for j in i + 1..dim {
                let lhs = self.ad[i].commutator(&self.ad[j]);
                let mut rhs = RealMatrix::zeros(dim, dim);
                for k in 0..dim {
                    let c = &self.ad[i][(k, j)];
                    if !c.is_zero() {
                        rhs.add_scaled(c, &self.ad[k]);
                    }
                }
                if lhs != rhs {
                    let col = (0..dim).find(|&c| lhs.column(c) != rhs.column(c)).unwrap_or(0);
                    return Some(format!("Jacobi identity fails on basis triple ({i}, {j}, {col})"));
                }
            }
        }
        None
    }

    /// Every basis element preserves the defining form: `X*·G + G·X = 0`.
    pub fn check_defining_relation(&self) -> Option<String> {
        let g = self.gram.as_ref()?.complexify();
        self.basis.iter().enumerate().find_map(|(i, x)| {
            let lhs = x.adjoint().mul(&g).add(&g.mul(x));
            (!lhs.is_zero()).then(|| format!("basis element {i} does not preserve the defining form"))
        })
    }
}

/// Killing form `B(Xᵢ, Xⱼ) = tr(ad Xᵢ ∘ ad Xⱼ)` from the structure constants.
pub fn killing_form(g: &MatrixLieAlgebra) -> RealMatrix {
    let dim = g.dim();
    let mut b = RealMatrix::zeros(dim, dim);
    for i in 0..dim {
        for j in i..dim {
            let v = g.ad(i).trace_of_product(g.ad(j));
            b[(j, i)] = v.clone();
            b[(i, j)] = v;
        }
    }
    b
}

/// Evaluates a bilinear form given by its Gram matrix on coordinate vectors.
pub fn form_value(gram: &RealMatrix, u: &[Rational], v: &[Rational]) -> Rational {
    vector::dot(u, &gram.mul_vec(v))
}
