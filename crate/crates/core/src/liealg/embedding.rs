use std::sync::Arc;

use super::algebra::MatrixLieAlgebra;
use super::classical::{gram_phi, gram_psi1, gram_psi2, orthogonal_algebra, unitary_algebra};
use crate::error::{Error, Result};
use crate::exactlin::{rank, ComplexMatrix, Gaussian, Rational, RealMatrix, Scalar};

/// Which `ψ` embedding to use: `First` lands in
/// `so(2p, 2q+1)` (extra coordinate last), `Second` in `so(2p+1, 2q)`
/// (extra coordinate first).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum PsiVariant {
    First,
    Second,
}

impl PsiVariant {
    pub fn from_index(i: u8) -> Result<Self> {
        match i {
            1 => Ok(Self::First),
            2 => Ok(Self::Second),
            _ => Err(Error::InvalidParameters(format!("psi variant must be 1 or 2, got {i}"))),
        }
    }

    pub fn index(self) -> u8 {
        match self {
            Self::First => 1,
            Self::Second => 2,
        }
    }
}

/// Injective Lie algebra homomorphism, stored as the matrix images of the
/// source basis together with their target coordinates.
#[derive(Clone, Debug)]
pub struct Embedding {
    source: Arc<MatrixLieAlgebra>,
    target: Arc<MatrixLieAlgebra>,
    images: Vec<ComplexMatrix>,
    coords: Vec<Vec<Rational>>,
}

/// Two algebras are considered equal when names and bases agree.
pub fn same_algebra(a: &MatrixLieAlgebra, b: &MatrixLieAlgebra) -> bool {
    a.name() == b.name() && a.basis() == b.basis()
}

impl Embedding {
    /// Validates membership, injectivity and bracket preservation (against
    /// the source structure constants) before accepting the images.
    pub fn new(
        source: Arc<MatrixLieAlgebra>,
        target: Arc<MatrixLieAlgebra>,
        images: Vec<ComplexMatrix>,
    ) -> Result<Self> {
        if images.len() != source.dim() {
            return Err(Error::InvalidEmbedding(format!(
                "{} basis elements but {} images",
                source.dim(),
                images.len()
            )));
        }
        let mut coords = Vec::with_capacity(images.len());
        for (i, m) in images.iter().enumerate() {
            let c = target.coords(m).ok_or_else(|| {
                Error::InvalidEmbedding(format!("image of basis element {i} is not in {}", target.name()))
            })?;
            coords.push(c);
        }
        let matrix = RealMatrix::from_columns(&coords, target.dim());
        if rank(&matrix) != source.dim() {
            return Err(Error::InvalidEmbedding("images are linearly dependent".into()));
        }
        let e = Self {
            source,
            target,
            images,
            coords,
        };
        if let Some(w) = e.check_brackets() {
            return Err(Error::InvalidEmbedding(w));
        }
        Ok(e)
    }

    pub fn source(&self) -> &Arc<MatrixLieAlgebra> {
        &self.source
    }

    pub fn target(&self) -> &Arc<MatrixLieAlgebra> {
        &self.target
    }

    pub fn images(&self) -> &[ComplexMatrix] {
        &self.images
    }

    /// Target coordinates of the image of source basis element `i`.
    pub fn image_coords(&self, i: usize) -> &[Rational] {
        &self.coords[i]
    }

    /// Image of a source element given in source coordinates.
    pub fn apply(&self, x: &[Rational]) -> ComplexMatrix {
        let n = self.target.size();
        let mut out = ComplexMatrix::zeros(n, n);
        for (c, m) in x.iter().zip(&self.images) {
            if !num_traits::Zero::is_zero(c) {
                out.add_scaled(&Gaussian::from_rational(c.clone()), m);
            }
        }
        out
    }

    /// `e([Xᵢ, Xⱼ]) = [e(Xᵢ), e(Xⱼ)]` for every basis pair; witness on failure.
    pub fn check_brackets(&self) -> Option<String> {
        let d = self.source.dim();
        for i in 0..d {
            for j in i + 1..d {
                let lhs = self.apply(&self.source.ad(i).column(j));
                let rhs = self.images[i].commutator(&self.images[j]);
                if lhs != rhs {
                    return Some(format!(
                        "image of [X{i}, X{j}] differs from the bracket of the images in {}",
                        self.target.name()
                    ));
                }
            }
        }
        None
    }

    /// `outer ∘ self`.
    pub fn then(&self, outer: &Embedding) -> Result<Embedding> {
        if !same_algebra(&self.target, &outer.source) {
            return Err(Error::AlgebraMismatch {
                expected: outer.source.name().to_string(),
                found: self.target.name().to_string(),
            });
        }
        let images = self.coords.iter().map(|c| outer.apply(c)).collect();
        Embedding::new(self.source.clone(), outer.target.clone(), images)
    }

    /// Same source and target and identical images.
    pub fn agrees_with(&self, other: &Embedding) -> bool {
        same_algebra(&self.source, &other.source)
            && same_algebra(&self.target, &other.target)
            && self.images == other.images
    }
}

fn check_pq(p: usize, q: usize) -> Result<()> {
    if p == 0 || q == 0 {
        return Err(Error::InvalidParameters(format!("need p, q ≥ 1, got ({p}, {q})")));
    }
    Ok(())
}

/// `φ : u(p,q) → so(2p,2q)`, `A + iB ↦ [[A, −B], [B, A]]`.
pub fn embed_phi(p: usize, q: usize) -> Result<Embedding> {
    check_pq(p, q)?;
    let u = unitary_algebra(p, q, false)?;
    let so = orthogonal_algebra(&gram_phi(p, q))?;
    let images = u.basis().iter().map(|x| x.realify().complexify()).collect();
    Embedding::new(u, so, images)
}

fn pad(x: &RealMatrix, variant: PsiVariant) -> RealMatrix {
    let m = x.rows();
    let mut out = RealMatrix::zeros(m + 1, m + 1);
    let off = match variant {
        PsiVariant::First => 0,
        PsiVariant::Second => 1,
    };
    out.set_block(off, off, x);
    out
}

fn psi_target(p: usize, q: usize, variant: PsiVariant) -> Result<Arc<MatrixLieAlgebra>> {
    match variant {
        PsiVariant::First => orthogonal_algebra(&gram_psi1(p, q)),
        PsiVariant::Second => orthogonal_algebra(&gram_psi2(p, q)),
    }
}

/// `ψ₁ : u(p,q) → so(2p,2q+1)` or `ψ₂ : u(p,q) → so(2p+1,2q)`.
pub fn embed_psi(p: usize, q: usize, variant: PsiVariant) -> Result<Embedding> {
    check_pq(p, q)?;
    let u = unitary_algebra(p, q, false)?;
    let so = psi_target(p, q, variant)?;
    let images = u.basis().iter().map(|x| pad(&x.realify(), variant).complexify()).collect();
    Embedding::new(u, so, images)
}

/// Block inclusion `so(2p,2q) → so(2p,2q+1)` (first) or `so(2p+1,2q)` (second).
pub fn so_block_inclusion(p: usize, q: usize, variant: PsiVariant) -> Result<Embedding> {
    check_pq(p, q)?;
    let small = orthogonal_algebra(&gram_phi(p, q))?;
    let big = psi_target(p, q, variant)?;
    let images = small.basis().iter().map(|x| pad(&x.real_part(), variant).complexify()).collect();
    Embedding::new(small, big, images)
}

/// Which side the extra coordinate of `u(p,q) → su(·,·)` goes to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum UnitarySide {
    /// `u(p,q) → su(p,q+1)`, `X ↦ diag(X, −tr X)`.
    ExtraNegative,
    /// `u(p,q) → su(p+1,q)`, `X ↦ diag(−tr X, X)`.
    ExtraPositive,
}

/// Canonical embedding of `u(p,q)` into `su(p,q+1)` or `su(p+1,q)`.
pub fn embed_u_in_su(p: usize, q: usize, side: UnitarySide) -> Result<Embedding> {
    check_pq(p, q)?;
    let u = unitary_algebra(p, q, false)?;
    let (big, first) = match side {
        UnitarySide::ExtraNegative => (unitary_algebra(p, q + 1, true)?, false),
        UnitarySide::ExtraPositive => (unitary_algebra(p + 1, q, true)?, true),
    };
    let n = p + q;
    let images = u
        .basis()
        .iter()
        .map(|x| {
            let t = ComplexMatrix::diagonal(&[-x.trace()]);
            let mut out = ComplexMatrix::zeros(n + 1, n + 1);
            if first {
                out.set_block(0, 0, &t);
                out.set_block(1, 1, x);
            } else {
                out.set_block(0, 0, x);
                out.set_block(n, n, &t);
            }
            out
        })
        .collect();
    Embedding::new(u, big, images)
}

/// Inclusion of a subalgebra whose basis matrices already live in `target`.
pub fn subalgebra_inclusion(source: Arc<MatrixLieAlgebra>, target: Arc<MatrixLieAlgebra>) -> Result<Embedding> {
    let images = source.basis().to_vec();
    Embedding::new(source, target, images)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactlin::{gi, RealMatrix};
    use crate::liealg::classical::ipq;

    #[test]
    fn phi_of_i_identity() {
        let e = embed_phi(1, 2).unwrap();
        let id: Vec<Rational> = {
            // i·Id is the sum of the diagonal generators
            let mut v = vec![Rational::from_integer(0.into()); e.source().dim()];
            for c in v.iter_mut().take(3) {
                *c = Rational::from_integer(1.into());
            }
            v
        };
        assert_eq!(e.source().element(&id), ComplexMatrix::scalar(3, gi(0, 1)));
        let img = e.apply(&id).real_part();
        let mut expected = RealMatrix::zeros(6, 6);
        expected.set_block(0, 3, &RealMatrix::identity(3).neg());
        expected.set_block(3, 0, &RealMatrix::identity(3));
        assert_eq!(img, expected);
    }

    #[test]
    fn phi_blocks_satisfy_the_displayed_constraints() {
        let e = embed_phi(2, 1).unwrap();
        let i = ipq(2, 1);
        for x in e.source().basis() {
            let a = x.real_part();
            let b = x.imag_part();
            assert!(a.transpose().mul(&i).add(&i.mul(&a)).is_zero());
            assert!(b.transpose().mul(&i).sub(&i.mul(&b)).is_zero());
        }
        assert_eq!(e.source().dim(), 9);
    }

    #[test]
    fn psi_zero_rows() {
        let e1 = embed_psi(1, 2, PsiVariant::First).unwrap();
        assert_eq!(e1.target().name(), "so(2,5)");
        for m in e1.images() {
            for k in 0..7 {
                assert!(num_traits::Zero::is_zero(&m[(6, k)]) && num_traits::Zero::is_zero(&m[(k, 6)]));
            }
        }
        let e2 = embed_psi(1, 2, PsiVariant::Second).unwrap();
        assert_eq!(e2.target().name(), "so(3,4)");
        for m in e2.images() {
            for k in 0..7 {
                assert!(num_traits::Zero::is_zero(&m[(0, k)]) && num_traits::Zero::is_zero(&m[(k, 0)]));
            }
        }
    }

    #[test]
    fn psi_is_phi_followed_by_inclusion() {
        for variant in [PsiVariant::First, PsiVariant::Second] {
            let phi = embed_phi(1, 2).unwrap();
            let inc = so_block_inclusion(1, 2, variant).unwrap();
            let psi = embed_psi(1, 2, variant).unwrap();
            assert!(phi.then(&inc).unwrap().agrees_with(&psi));
        }
    }

    #[test]
    fn unitary_into_special_unitary() {
        let e = embed_u_in_su(1, 2, UnitarySide::ExtraNegative).unwrap();
        assert_eq!(e.target().name(), "su(1,3)");
        let e = embed_u_in_su(1, 2, UnitarySide::ExtraPositive).unwrap();
        assert_eq!(e.target().name(), "su(2,2)");
    }

    #[test]
    fn rejects_non_homomorphisms() {
        let phi = embed_phi(1, 1).unwrap();
        let mut images = phi.images().to_vec();
        images.swap(0, 2);
        let r = Embedding::new(phi.source().clone(), phi.target().clone(), images);
        assert!(matches!(r, Err(Error::InvalidEmbedding(_))));
        let wrong = embed_phi(1, 2).unwrap();
        assert!(phi.then(&so_block_inclusion(1, 1, PsiVariant::First).unwrap()).is_ok());
        assert!(wrong.then(&phi).is_err());
    }
}
