//! Weight combinatorics for `A_{n−1}`, the root system of `sl(n, ℂ)`.
//!
//! Weights are kept in fundamental-weight coordinates `(k₁, …, k_{n−1})`;
//! the Cartan-subalgebra picture `𝔥 = {v ∈ ℝⁿ : Σ vᵢ = 0}` is only used to
//! evaluate the Weyl dimension formula.

use std::fmt;

use num_traits::{One, ToPrimitive, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::exactlin::{qi, Rational};

/// Vector in `𝔥`: `n` rational coordinates summing to zero.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct WeightVector {
    coords: Vec<Rational>,
}

impl WeightVector {
    pub fn new(coords: Vec<Rational>) -> Result<Self> {
        if coords.len() < 2 {
            return Err(Error::InvalidParameters("weight vector needs n ≥ 2 coordinates".into()));
        }
        let sum: Rational = coords.iter().sum();
        if !sum.is_zero() {
            return Err(Error::InvalidParameters("weight coordinates must sum to zero".into()));
        }
        Ok(Self { coords })
    }

    /// Orthogonal projection of an arbitrary vector of `ℝⁿ` onto `𝔥`.
    pub fn project(v: &[Rational]) -> Self {
        let n = qi(v.len() as i64);
        let mean = v.iter().sum::<Rational>() / n;
        Self {
            coords: v.iter().map(|x| x - &mean).collect(),
        }
    }

    pub fn n(&self) -> usize {
        self.coords.len()
    }

    pub fn coords(&self) -> &[Rational] {
        &self.coords
    }

    pub fn inner(&self, other: &Self) -> Rational {
        self.coords.iter().zip(&other.coords).map(|(a, b)| a * b).sum()
    }

    /// `(self, e_ν − e_μ)` with 1-based indices.
    pub fn pair_with_root(&self, nu: usize, mu: usize) -> Rational {
        &self.coords[nu - 1] - &self.coords[mu - 1]
    }

    pub fn add(&self, other: &Self) -> Self {
        Self {
            coords: self.coords.iter().zip(&other.coords).map(|(a, b)| a + b).collect(),
        }
    }

    pub fn zero(n: usize) -> Self {
        Self {
            coords: vec![Rational::zero(); n],
        }
    }
}

/// Dominant weight `λ = k₁ω₁ + ⋯ + k_{n−1}ω_{n−1}` of `sl(n, ℂ)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct DominantWeight {
    n: usize,
    coeffs: Vec<u32>,
}

impl DominantWeight {
    pub fn new(n: usize, coeffs: Vec<u32>) -> Result<Self> {
        check_rank(n)?;
        if coeffs.len() != n - 1 {
            return Err(Error::InvalidParameters(format!(
                "sl({n}) weights have {} coefficients, got {}",
                n - 1,
                coeffs.len()
            )));
        }
        Ok(Self { n, coeffs })
    }

    pub fn zero(n: usize) -> Result<Self> {
        Self::new(n, vec![0; n.saturating_sub(1)])
    }

    /// The fundamental weight `ωᵢ` (1-based).
    pub fn fundamental(n: usize, i: usize) -> Result<Self> {
        check_rank(n)?;
        check_index(n, i)?;
        let mut coeffs = vec![0; n - 1];
        coeffs[i - 1] = 1;
        Ok(Self { n, coeffs })
    }

    /// Builds `Σ cᵢ·ω_{iᵢ}` from `(index, coefficient)` pairs.
    pub fn from_terms(n: usize, terms: &[(usize, u32)]) -> Result<Self> {
        let mut w = Self::zero(n)?;
        for &(i, c) in terms {
            check_index(n, i)?;
            w.coeffs[i - 1] += c;
        }
        Ok(w)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn coeffs(&self) -> &[u32] {
        &self.coeffs
    }

    /// `k_i` (1-based).
    pub fn coeff(&self, i: usize) -> u32 {
        self.coeffs[i - 1]
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|&k| k == 0)
    }

    /// Highest weight of the dual module: `(k_{n−1}, …, k₁)`.
    pub fn conjugate(&self) -> Self {
        let mut coeffs = self.coeffs.clone();
        coeffs.reverse();
        Self { n: self.n, coeffs }
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(self.n, other.n);
        Self {
            n: self.n,
            coeffs: self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a + b).collect(),
        }
    }

    /// Coordinates in `𝔥`.
    pub fn to_vector(&self) -> WeightVector {
        let mut acc = WeightVector::zero(self.n);
        for (i, &k) in self.coeffs.iter().enumerate() {
            if k == 0 {
                continue;
            }
            let w = fundamental_weight(self.n, i + 1).expect("index in range");
            for (a, b) in acc.coords.iter_mut().zip(&w.coords) {
                *a += b * qi(k as i64);
            }
        }
        acc
    }
}

impl fmt::Display for DominantWeight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let terms: Vec<String> = self
            .coeffs
            .iter()
            .enumerate()
            .filter(|(_, &k)| k > 0)
            .map(|(i, &k)| if k == 1 { format!("w{}", i + 1) } else { format!("{k}w{}", i + 1) })
            .collect();
        write!(f, "{}", terms.join("+"))
    }
}

fn check_rank(n: usize) -> Result<()> {
    if n < 3 {
        return Err(Error::InvalidParameters(format!("need n ≥ 3, got {n}")));
    }
    Ok(())
}

fn check_index(n: usize, i: usize) -> Result<()> {
    if i == 0 || i >= n {
        return Err(Error::InvalidParameters(format!(
            "fundamental weight index {i} outside 1..={}",
            n - 1
        )));
    }
    Ok(())
}

/// `ωᵢ = (e₁ + ⋯ + eᵢ)^⊥`: coordinates `1 − i/n` then `−i/n`.
pub fn fundamental_weight(n: usize, i: usize) -> Result<WeightVector> {
    check_rank(n)?;
    check_index(n, i)?;
    let v: Vec<Rational> = (0..n).map(|j| if j < i { Rational::one() } else { Rational::zero() }).collect();
    Ok(WeightVector::project(&v))
}

/// Half-sum of positive roots, `½(n−1, n−3, …, −n+1)`.
pub fn rho(n: usize) -> Result<WeightVector> {
    check_rank(n)?;
    let coords = (0..n)
        .map(|j| Rational::new((n as i64 - 1 - 2 * j as i64).into(), 2.into()))
        .collect();
    WeightVector::new(coords)
}

/// Weyl dimension formula: `∏_{ν<μ} (λ + ρ, e_ν − e_μ) / (ρ, e_ν − e_μ)`.
///
/// Panics if the product is not a positive integer, which would mean the
/// formula was evaluated incorrectly.
pub fn weyl_dim(lambda: &DominantWeight) -> u128 {
    let n = lambda.n;
    let lam = lambda.to_vector();
    let r = rho(n).expect("n ≥ 3 by construction");
    let mut prod = Rational::one();
    for nu in 1..=n {
        for mu in nu + 1..=n {
            let denom = r.pair_with_root(nu, mu);
            debug_assert_eq!(denom, qi((mu - nu) as i64));
            prod *= (lam.pair_with_root(nu, mu) + &denom) / denom;
        }
    }
    assert!(prod.is_integer(), "Weyl product {prod} is not an integer");
    prod.to_integer().to_u128().expect("dimension fits in u128")
}

/// `k_i = k_{n−i}` for all `i`.
pub fn is_self_conjugate(lambda: &DominantWeight) -> bool {
    *lambda == lambda.conjugate()
}

/// Every dominant weight with `weyl_dim(λ) ≤ max_dim`, in lexicographic
/// order of coefficient vectors, together with its dimension.
///
/// Depth-first over `k₁, k₂, …`; a branch stops growing as soon as the
/// partial weight (remaining coefficients zero) is too large, which is sound
/// because the dimension is monotone in each coefficient.
pub fn enumerate_dominant(n: usize, max_dim: u128) -> Result<Vec<(DominantWeight, u128)>> {
    check_rank(n)?;
    if max_dim == 0 {
        return Err(Error::InvalidParameters("max_dim must be at least 1".into()));
    }
    let mut out = Vec::new();
    let mut current = DominantWeight::zero(n)?;
    descend(&mut current, 0, max_dim, &mut out);
    out.sort();
    Ok(out)
}

fn descend(current: &mut DominantWeight, pos: usize, max_dim: u128, out: &mut Vec<(DominantWeight, u128)>) {
    if pos == current.coeffs.len() {
        let d = weyl_dim(current);
        out.push((current.clone(), d));
        return;
    }
    let mut k = 0u32;
    loop {
        current.coeffs[pos] = k;
        if weyl_dim(current) > max_dim {
            break;
        }
        descend(current, pos + 1, max_dim, out);
        k += 1;
    }
    current.coeffs[pos] = 0;
}

/// `λᵢ = ωᵢ + ω_{n−i}` for `i < n/2`, and the middle weight `λ_{[n/2]}`
/// (`ω_{n/2}` for even `n`, `ω_{[n/2]} + ω_{[n/2]+1}` for odd `n`).
pub fn self_conjugate_generators(n: usize) -> Result<Vec<DominantWeight>> {
    check_rank(n)?;
    let half = n / 2;
    let mut out = Vec::new();
    for i in 1..half {
        if i < n - i {
            out.push(DominantWeight::from_terms(n, &[(i, 1), (n - i, 1)])?);
        }
    }
    if n.is_multiple_of(2) {
        out.push(DominantWeight::fundamental(n, half)?);
    } else {
        out.push(DominantWeight::from_terms(n, &[(half, 1), (half + 1, 1)])?);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactlin::q;

    #[test]
    fn fundamental_weight_examples() {
        let w = fundamental_weight(3, 1).unwrap();
        assert_eq!(w.coords(), &[q(2, 3), q(-1, 3), q(-1, 3)]);
        let w = fundamental_weight(4, 2).unwrap();
        assert_eq!(w.coords(), &[q(1, 2), q(1, 2), q(-1, 2), q(-1, 2)]);
        assert!(fundamental_weight(4, 0).is_err());
        assert!(fundamental_weight(4, 4).is_err());
        assert!(fundamental_weight(2, 1).is_err());
    }

    #[test]
    fn rho_examples() {
        assert_eq!(rho(3).unwrap().coords(), &[qi(1), qi(0), qi(-1)]);
        assert_eq!(rho(4).unwrap().coords(), &[q(3, 2), q(1, 2), q(-1, 2), q(-3, 2)]);
    }

    #[test]
    fn fundamental_weights_pair_with_roots_as_indicator() {
        for n in 3..=8 {
            for i in 1..n {
                let w = fundamental_weight(n, i).unwrap();
                for nu in 1..=n {
                    for mu in nu + 1..=n {
                        let expected = if nu <= i && i < mu { qi(1) } else { qi(0) };
                        assert_eq!(w.pair_with_root(nu, mu), expected, "n={n} i={i} ({nu},{mu})");
                    }
                }
            }
        }
    }

    #[test]
    fn rho_is_sum_of_fundamental_weights() {
        for n in 3..=8 {
            let sum = (1..n).fold(WeightVector::zero(n), |acc, i| acc.add(&fundamental_weight(n, i).unwrap()));
            assert_eq!(sum, rho(n).unwrap());
        }
    }

    #[test]
    fn weyl_dimension_examples() {
        for n in 3..=8 {
            let w1 = DominantWeight::fundamental(n, 1).unwrap();
            assert_eq!(weyl_dim(&w1), n as u128);
            let adj = DominantWeight::from_terms(n, &[(1, 1), (n - 1, 1)]).unwrap();
            assert_eq!(weyl_dim(&adj), (n * n - 1) as u128);
        }
        assert_eq!(weyl_dim(&DominantWeight::fundamental(6, 3).unwrap()), 20);
        assert_eq!(weyl_dim(&DominantWeight::fundamental(8, 4).unwrap()), 70);
        for k in 0..=5u32 {
            let w = DominantWeight::from_terms(4, &[(2, k)]).unwrap();
            let k = k as u128;
            assert_eq!(weyl_dim(&w), (k + 1) * (k + 2) * (k + 2) * (k + 3) / 12);
        }
        assert_eq!(weyl_dim(&DominantWeight::zero(5).unwrap()), 1);
    }

    #[test]
    fn self_conjugacy() {
        let adj = DominantWeight::from_terms(5, &[(1, 1), (4, 1)]).unwrap();
        assert!(is_self_conjugate(&adj));
        assert!(!is_self_conjugate(&DominantWeight::fundamental(3, 1).unwrap()));
        assert!(is_self_conjugate(&DominantWeight::fundamental(4, 2).unwrap()));
    }

    #[test]
    fn enumerate_small_cases() {
        let got = enumerate_dominant(4, 6).unwrap();
        let expect: Vec<(Vec<u32>, u128)> = vec![
            (vec![0, 0, 0], 1),
            (vec![0, 0, 1], 4),
            (vec![0, 1, 0], 6),
            (vec![1, 0, 0], 4),
        ];
        let got: Vec<(Vec<u32>, u128)> = got.into_iter().map(|(w, d)| (w.coeffs().to_vec(), d)).collect();
        assert_eq!(got, expect);

        let three = enumerate_dominant(3, 8).unwrap();
        assert!(three.iter().any(|(w, d)| w.coeffs() == [1, 1] && *d == 8));

        for n in 3..=8 {
            let only_trivial = enumerate_dominant(n, (n - 1) as u128).unwrap();
            assert_eq!(only_trivial.len(), 1);
            assert!(only_trivial[0].0.is_zero());
        }
        assert!(enumerate_dominant(4, 0).is_err());
    }

    #[test]
    fn generators_of_self_conjugate_weights() {
        let g = self_conjugate_generators(6).unwrap();
        let shown: Vec<String> = g.iter().map(|w| w.to_string()).collect();
        assert_eq!(shown, vec!["w1+w5", "w2+w4", "w3"]);
        let g = self_conjugate_generators(5).unwrap();
        let shown: Vec<String> = g.iter().map(|w| w.to_string()).collect();
        assert_eq!(shown, vec!["w1+w4", "w2+w3"]);
    }
}
