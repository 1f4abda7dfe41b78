//! Exact arithmetic over Q and Q(i).
//!
//! Every coefficient in the crate lives in `Gauss`, the field of complex
//! numbers with arbitrary-precision rational real and imaginary parts.
//! There is no floating point anywhere.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};

/// Arbitrary-precision rational number, always stored reduced with a
/// positive denominator.
pub type Rat = BigRational;

/// Build a rational from a signed numerator and positive denominator.
///
/// Panics if `den == 0`.
pub fn rat(num: i64, den: i64) -> Rat {
    Rat::new(BigInt::from(num), BigInt::from(den))
}

/// Shorthand for an integer rational.
pub fn rat_int(num: i64) -> Rat {
    Rat::from(BigInt::from(num))
}

/// An exact Gaussian rational `re + im·i`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Gauss {
    pub re: Rat,
    pub im: Rat,
}

impl Gauss {
    pub fn new(re: Rat, im: Rat) -> Self {
        Gauss { re, im }
    }

    pub fn zero() -> Self {
        Gauss::new(Rat::zero(), Rat::zero())
    }

    pub fn one() -> Self {
        Gauss::new(Rat::one(), Rat::zero())
    }

    /// The imaginary unit.
    pub fn i() -> Self {
        Gauss::new(Rat::zero(), Rat::one())
    }

    pub fn from_int(v: i64) -> Self {
        Gauss::new(rat_int(v), Rat::zero())
    }

    pub fn from_rat(re: Rat) -> Self {
        Gauss::new(re, Rat::zero())
    }

    /// Build from the four-integer encoding `(re_num, re_den, im_num, im_den)`.
    pub fn from_parts(re_num: i64, re_den: i64, im_num: i64, im_den: i64) -> Self {
        Gauss::new(rat(re_num, re_den), rat(im_num, im_den))
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    pub fn is_real(&self) -> bool {
        self.im.is_zero()
    }

    /// Complex conjugate.
    pub fn conj(&self) -> Self {
        Gauss::new(self.re.clone(), -self.im.clone())
    }

    /// `|z|² = z·z̄`, a non-negative rational.
    pub fn norm_sqr(&self) -> Rat {
        &self.re * &self.re + &self.im * &self.im
    }

    /// Multiplicative inverse; `None` for zero.
    pub fn inv(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        let n = self.norm_sqr();
        Some(Gauss::new(&self.re / &n, -(&self.im / &n)))
    }

    /// Exact division; panics on division by zero.
    pub fn div(&self, other: &Gauss) -> Self {
        self * &other.inv().expect("division by zero Gauss rational")
    }

    /// Scale by a real rational.
    pub fn scale(&self, s: &Rat) -> Self {
        Gauss::new(&self.re * s, &self.im * s)
    }
}

impl Add for &Gauss {
    type Output = Gauss;
    fn add(self, rhs: &Gauss) -> Gauss {
        Gauss::new(&self.re + &rhs.re, &self.im + &rhs.im)
    }
}

impl AddAssign<&Gauss> for Gauss {
    fn add_assign(&mut self, rhs: &Gauss) {
        self.re += &rhs.re;
        self.im += &rhs.im;
    }
}

impl Sub for &Gauss {
    type Output = Gauss;
    fn sub(self, rhs: &Gauss) -> Gauss {
        Gauss::new(&self.re - &rhs.re, &self.im - &rhs.im)
    }
}

impl Mul for &Gauss {
    type Output = Gauss;
    fn mul(self, rhs: &Gauss) -> Gauss {
        Gauss::new(
            &self.re * &rhs.re - &self.im * &rhs.im,
            &self.re * &rhs.im + &self.im * &rhs.re,
        )
    }
}

impl Neg for &Gauss {
    type Output = Gauss;
    fn neg(self) -> Gauss {
        Gauss::new(-self.re.clone(), -self.im.clone())
    }
}

impl fmt::Display for Gauss {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fn imag(im: &Rat) -> String {
            if im == &Rat::one() {
                "i".to_string()
            } else if im == &(-Rat::one()) {
                "-i".to_string()
            } else if im.is_integer() {
                format!("{}i", im)
            } else {
                format!("({})i", im)
            }
        }
        if self.is_zero() {
            write!(f, "0")
        } else if self.im.is_zero() {
            write!(f, "{}", self.re)
        } else if self.re.is_zero() {
            write!(f, "{}", imag(&self.im))
        } else if self.im.is_negative() {
            write!(f, "{}{}", self.re, imag(&self.im))
        } else {
            write!(f, "{}+{}", self.re, imag(&self.im))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn conjugation_is_an_involution() {
        let z = Gauss::from_parts(3, 2, -5, 7);
        assert_eq!(z.conj().conj(), z);
    }

    #[test]
    fn multiplication_commutes_and_associates() {
        let a = Gauss::from_parts(1, 2, 3, 1);
        let b = Gauss::from_parts(-2, 3, 1, 5);
        let c = Gauss::from_parts(0, 1, -1, 1);
        assert_eq!(&a * &b, &b * &a);
        assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
    }

    #[test]
    fn inverse_multiplies_to_one() {
        let z = Gauss::from_parts(3, 4, -2, 5);
        let w = z.inv().unwrap();
        assert_eq!(&z * &w, Gauss::one());
        assert!(Gauss::zero().inv().is_none());
    }

    #[test]
    fn display_forms() {
        assert_eq!(Gauss::zero().to_string(), "0");
        assert_eq!(Gauss::from_parts(1, 1, 1, 1).to_string(), "1+i");
        assert_eq!(Gauss::from_parts(0, 1, -3, 2).to_string(), "(-3/2)i");
        assert_eq!(Gauss::from_parts(2, 1, -1, 1).to_string(), "2-i");
    }
}
