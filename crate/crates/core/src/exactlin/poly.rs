use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::matrix::Matrix;
use super::reduce::{kernel, EchelonBasis};
use super::scalar::{rational_sqrt, Rational, Scalar};

/// Polynomial with exact coefficients, lowest degree first.
#[derive(Clone, PartialEq, Eq)]
pub struct Poly<T> {
    coeffs: Vec<T>,
}

impl<T: Scalar> Poly<T> {
    pub fn new(mut coeffs: Vec<T>) -> Self {
        while coeffs.last().is_some_and(T::is_zero) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    /// Monic polynomial with the given roots.
    pub fn from_roots(roots: &[T]) -> Self {
        let mut p = Self::new(vec![T::one()]);
        for r in roots {
            p = p.mul(&Self::new(vec![-r.clone(), T::one()]));
        }
        p
    }

    pub fn coeffs(&self) -> &[T] {
        &self.coeffs
    }

    /// Degree; the zero polynomial reports `None`.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_monic(&self) -> bool {
        self.coeffs.last().is_some_and(T::is_one)
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.coeffs.is_empty() || other.coeffs.is_empty() {
            return Self::new(vec![]);
        }
        let mut out = vec![T::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j].add_mul(a, b);
            }
        }
        Self::new(out)
    }

    pub fn eval(&self, x: &T) -> T {
        let mut acc = T::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc.mul_ref(x).add_ref(c);
        }
        acc
    }

    /// `p(T)` for a square matrix, by Horner's scheme.
    pub fn eval_matrix(&self, t: &Matrix<T>) -> Matrix<T> {
        let n = t.rows();
        let mut acc = Matrix::zeros(n, n);
        for c in self.coeffs.iter().rev() {
            acc = acc.mul(t).add(&Matrix::scalar(n, c.clone()));
        }
        acc
    }
}

impl Poly<Rational> {
    /// Rational roots, sorted and without repetition.
    pub fn rational_roots(&self) -> Vec<Rational> {
        let Some(deg) = self.degree() else {
            return vec![];
        };
        if deg == 0 {
            return vec![];
        }
        // strip factors of x
        let shift = self.coeffs.iter().position(|c| !c.is_zero()).unwrap_or(0);
        let mut roots = Vec::new();
        if shift > 0 {
            roots.push(Rational::zero());
        }
        let reduced = &self.coeffs[shift..];
        if reduced.len() > 1 {
            let lcm = reduced
                .iter()
                .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
            let ints: Vec<BigInt> = reduced.iter().map(|c| (c * &lcm).to_integer()).collect();
            let constant = ints[0].abs();
            let leading = ints[ints.len() - 1].abs();
            for num in divisors(&constant) {
                for den in divisors(&leading) {
                    for sign in [1i64, -1] {
                        let cand = Rational::new(&num * BigInt::from(sign), den.clone());
                        if self.eval(&cand).is_zero() && !roots.contains(&cand) {
                            roots.push(cand);
                        }
                    }
                }
            }
        }
        roots.sort();
        roots
    }

    /// True for a degree-two polynomial with negative discriminant or an
    /// irrational square root of the discriminant.
    pub fn is_irreducible_quadratic(&self) -> bool {
        if self.degree() != Some(2) {
            return false;
        }
        let (c, b, a) = (&self.coeffs[0], &self.coeffs[1], &self.coeffs[2]);
        let disc = b * b - Rational::from_integer(BigInt::from(4)) * a * c;
        rational_sqrt(&disc).is_none()
    }
}

fn divisors(n: &BigInt) -> Vec<BigInt> {
    if n.is_zero() {
        return vec![BigInt::one()];
    }
    let mut out = Vec::new();
    let mut d = BigInt::one();
    while &d * &d <= *n {
        if (n % &d).is_zero() {
            out.push(d.clone());
            let other = n / &d;
            if other != d {
                out.push(other);
            }
        }
        d += 1;
    }
    out.sort();
    out
}

impl<T: Scalar> fmt::Debug for Poly<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        let terms: Vec<String> = self
            .coeffs
            .iter()
            .enumerate()
            .rev()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, c)| match i {
                0 => format!("({c})"),
                1 => format!("({c})x"),
                _ => format!("({c})x^{i}"),
            })
            .collect();
        write!(f, "{}", terms.join(" + "))
    }
}

/// Minimal polynomial: the first power of `T` that is a linear combination
/// of the lower powers determines it.
pub fn min_poly<T: Scalar>(t: &Matrix<T>) -> Poly<T> {
    assert!(t.is_square(), "minimal polynomial of a non-square matrix");
    let n = t.rows();
    let len = n * n;
    let mut powers: Vec<Vec<T>> = vec![Matrix::<T>::identity(n).flatten()];
    let mut eb = EchelonBasis::new(len);
    eb.insert(powers[0].clone());
    let mut current = Matrix::identity(n);
    loop {
        current = current.mul(t);
        let flat = current.flatten();
        if !eb.insert(flat.clone()) {
            // solve Σ cᵢ Tⁱ = T^k for the earlier powers
            let k = powers.len();
            let system = Matrix::from_fn(len, k + 1, |r, c| {
                if c < k {
                    powers[c][r].clone()
                } else {
                    flat[r].clone()
                }
            });
            let ker = kernel(&system);
            let v = ker
                .into_iter()
                .find(|v| !v[k].is_zero())
                .expect("dependency involves the top power");
            let lead = v[k].clone();
            let coeffs = v.iter().map(|c| c.div_ref(&lead)).collect();
            return Poly::new(coeffs);
        }
        powers.push(flat);
    }
}

/// `ker(T − c·Id)` for each candidate eigenvalue, in input order.
pub fn rational_eigenspaces<T: Scalar>(t: &Matrix<T>, candidates: &[T]) -> Vec<(T, Vec<Vec<T>>)> {
    assert!(t.is_square(), "eigenspaces of a non-square matrix");
    let n = t.rows();
    candidates
        .iter()
        .map(|c| {
            let shifted = t.sub(&Matrix::scalar(n, c.clone()));
            (c.clone(), kernel(&shifted))
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactlin::scalar::{q, qi};
    use crate::exactlin::RealMatrix;

    #[test]
    fn minimal_polynomials() {
        assert_eq!(min_poly(&RealMatrix::identity(3)), Poly::new(vec![qi(-1), qi(1)]));
        let j = RealMatrix::from_int_rows(&[&[0, -1], &[1, 0]]);
        assert_eq!(min_poly(&j), Poly::new(vec![qi(1), qi(0), qi(1)]));
        let d = RealMatrix::diagonal(&[qi(1), qi(2), qi(2)]);
        assert_eq!(min_poly(&d), Poly::from_roots(&[qi(1), qi(2)]));
    }

    #[test]
    fn rational_root_scan() {
        let p = Poly::new(vec![q(-3, 2), qi(-1), qi(1)]).mul(&Poly::new(vec![qi(0), qi(1)]));
        // x (x² − x − 3/2): irrational roots apart from 0
        assert_eq!(p.rational_roots(), vec![qi(0)]);
        let p = Poly::from_roots(&[q(1, 2), qi(-3), qi(4)]);
        assert_eq!(p.rational_roots(), vec![qi(-3), q(1, 2), qi(4)]);
        assert!(Poly::new(vec![qi(1), qi(0), qi(1)]).is_irreducible_quadratic());
        assert!(!Poly::new(vec![qi(-4), qi(0), qi(1)]).is_irreducible_quadratic());
    }

    #[test]
    fn eigenspaces_of_diagonal_and_jordan() {
        let d = RealMatrix::diagonal(&[qi(1), qi(1), qi(2)]);
        let es = rational_eigenspaces(&d, &[qi(1), qi(2), qi(3)]);
        let dims: Vec<usize> = es.iter().map(|(_, b)| b.len()).collect();
        assert_eq!(dims, vec![2, 1, 0]);
        let jb = RealMatrix::from_int_rows(&[&[0, 1], &[0, 0]]);
        assert_eq!(rational_eigenspaces(&jb, &[qi(0)])[0].1.len(), 1);
    }
}
