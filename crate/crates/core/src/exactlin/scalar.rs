use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_complex::Complex;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Exact rational number.
pub type Rational = BigRational;

/// Gaussian rational `a + b·i` with exact rational parts.
pub type Gaussian = Complex<BigRational>;

/// Which field a scalar, matrix or representation lives over.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, serde::Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Field {
    Real,
    Complex,
}

/// Exact field element. Implemented for [`Rational`] and [`Gaussian`].
///
/// The by-reference helpers exist because the generic code would otherwise
/// clone big integers on every arithmetic step.
pub trait Scalar:
    Clone
    + PartialEq
    + Eq
    + fmt::Debug
    + fmt::Display
    + Send
    + Sync
    + Zero
    + One
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Div<Output = Self>
    + Neg<Output = Self>
    + 'static
{
    const FIELD: Field;

    fn from_rational(q: Rational) -> Self;
    fn re(&self) -> Rational;
    fn im(&self) -> Rational;
    fn conj(&self) -> Self;

    fn add_ref(&self, other: &Self) -> Self;
    fn sub_ref(&self, other: &Self) -> Self;
    fn mul_ref(&self, other: &Self) -> Self;
    fn div_ref(&self, other: &Self) -> Self;

    /// `self -= a * b`
    fn sub_mul(&mut self, a: &Self, b: &Self) {
        if a.is_zero() || b.is_zero() {
            return;
        }
        *self = self.sub_ref(&a.mul_ref(b));
    }

    /// `self += a * b`
    fn add_mul(&mut self, a: &Self, b: &Self) {
        if a.is_zero() || b.is_zero() {
            return;
        }
        *self = self.add_ref(&a.mul_ref(b));
    }

    fn from_int(i: i64) -> Self {
        Self::from_rational(Rational::from_integer(BigInt::from(i)))
    }

    /// Upper bound on the modulus, `|re| + |im|`, as a rational.
    fn abs_bound(&self) -> Rational {
        self.re().abs() + self.im().abs()
    }

    fn is_real(&self) -> bool {
        self.im().is_zero()
    }
}

impl Scalar for Rational {
    const FIELD: Field = Field::Real;

    fn from_rational(q: Rational) -> Self {
        q
    }
    fn re(&self) -> Rational {
        self.clone()
    }
    fn im(&self) -> Rational {
        Rational::zero()
    }
    fn conj(&self) -> Self {
        self.clone()
    }
    fn add_ref(&self, other: &Self) -> Self {
        self + other
    }
    fn sub_ref(&self, other: &Self) -> Self {
        self - other
    }
    fn mul_ref(&self, other: &Self) -> Self {
        self * other
    }
    fn div_ref(&self, other: &Self) -> Self {
        self / other
    }
}

impl Scalar for Gaussian {
    const FIELD: Field = Field::Complex;

    fn from_rational(q: Rational) -> Self {
        Complex::new(q, Rational::zero())
    }
    fn re(&self) -> Rational {
        self.re.clone()
    }
    fn im(&self) -> Rational {
        self.im.clone()
    }
    fn conj(&self) -> Self {
        Complex::conj(self)
    }
    fn add_ref(&self, other: &Self) -> Self {
        self + other
    }
    fn sub_ref(&self, other: &Self) -> Self {
        self - other
    }
    fn mul_ref(&self, other: &Self) -> Self {
        if self.im.is_zero() && other.im.is_zero() {
            return Complex::new(&self.re * &other.re, Rational::zero());
        }
        self * other
    }
    fn div_ref(&self, other: &Self) -> Self {
        if other.im.is_zero() {
            return Complex::new(&self.re / &other.re, &self.im / &other.re);
        }
        self / other
    }
}

/// Shorthand for the rational `num / den`.
pub fn q(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

/// Shorthand for the integer `n` as a rational.
pub fn qi(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// The Gaussian rational `re + im·i` from integer parts.
pub fn gi(re: i64, im: i64) -> Gaussian {
    Complex::new(qi(re), qi(im))
}

/// The imaginary unit.
pub fn imag_unit() -> Gaussian {
    gi(0, 1)
}

/// Square root of a non-negative rational, if it is a rational square.
pub fn rational_sqrt(x: &Rational) -> Option<Rational> {
    if x.is_negative() {
        return None;
    }
    let n = x.numer().to_biguint()?;
    let d = x.denom().to_biguint()?;
    let rn = n.sqrt();
    let rd = d.sqrt();
    if &rn * &rn == n && &rd * &rd == d {
        Some(Rational::new(BigInt::from(rn), BigInt::from(rd)))
    } else {
        None
    }
}

/// Largest integer not exceeding `x`.
pub fn floor_to_i64(x: &Rational) -> Option<i64> {
    use num_traits::ToPrimitive;
    x.floor().to_integer().to_i64()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn gaussian_arithmetic_is_exact() {
        let a = Complex::new(q(1, 2), q(1, 3));
        let b = Complex::new(q(-2, 5), qi(1));
        let prod = a.mul_ref(&b);
        assert_eq!(prod.div_ref(&b), a);
        assert_eq!(Scalar::conj(&a).im, q(-1, 3));
        assert!(imag_unit().mul_ref(&imag_unit()) == gi(-1, 0));
    }

    #[test]
    fn square_roots() {
        assert_eq!(rational_sqrt(&q(9, 4)), Some(q(3, 2)));
        assert_eq!(rational_sqrt(&qi(2)), None);
        assert_eq!(rational_sqrt(&qi(-1)), None);
        assert_eq!(floor_to_i64(&q(-1, 2)), Some(-1));
    }
}
