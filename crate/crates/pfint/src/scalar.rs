//! Scalar fields the whole crate is generic over.
//!
//! Two instantiations are supported: arbitrary-precision rationals
//! ([`num_rational::BigRational`]) for exact identity checking, and
//! double-precision complex numbers ([`num_complex::Complex64`]) for
//! quadrature-backed measures. Rationals are kept in lowest terms with a
//! positive denominator by the underlying `Ratio` type, so equality is
//! decidable and arithmetic is exact.

use std::fmt::{Debug, Display};
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// Field scalar: exact rational or complex double.
pub trait Scalar:
    Clone
    + PartialEq
    + Debug
    + Display
    + Send
    + Sync
    + 'static
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Neg<Output = Self>
{
    /// Whether arithmetic is exact and equality is decidable.
    const EXACT: bool;

    fn zero() -> Self;
    fn one() -> Self;
    fn from_int(n: i64) -> Self;
    fn is_zero(&self) -> bool;

    /// Division, failing on a zero divisor for both scalar kinds.
    fn checked_div(&self, rhs: &Self) -> Result<Self>;

    /// Magnitude used for pivot selection and float tolerance checks.
    /// Exact scalars may round; they never rely on this for correctness.
    fn magnitude(&self) -> f64;

    /// Equality up to tolerance: exact scalars compare exactly, floats
    /// pass when |a-b| <= max(abs, rel * max(|a|, |b|)).
    fn close_to(&self, other: &Self, rel: f64, abs: f64) -> bool {
        if Self::EXACT {
            self == other
        } else {
            let diff = (self.clone() - other.clone()).magnitude();
            diff <= abs.max(rel * self.magnitude().max(other.magnitude()))
        }
    }
}

impl Scalar for BigRational {
    const EXACT: bool = true;

    fn zero() -> Self {
        Zero::zero()
    }

    fn one() -> Self {
        One::one()
    }

    fn from_int(n: i64) -> Self {
        BigRational::from_integer(BigInt::from(n))
    }

    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }

    fn checked_div(&self, rhs: &Self) -> Result<Self> {
        if Zero::is_zero(rhs) {
            return Err(Error::DivisionByZero);
        }
        Ok(self / rhs)
    }

    fn magnitude(&self) -> f64 {
        self.to_f64().map(f64::abs).unwrap_or(f64::INFINITY)
    }
}

impl Scalar for Complex64 {
    const EXACT: bool = false;

    fn zero() -> Self {
        Complex64::new(0.0, 0.0)
    }

    fn one() -> Self {
        Complex64::new(1.0, 0.0)
    }

    fn from_int(n: i64) -> Self {
        Complex64::new(n as f64, 0.0)
    }

    fn is_zero(&self) -> bool {
        self.re == 0.0 && self.im == 0.0
    }

    fn checked_div(&self, rhs: &Self) -> Result<Self> {
        if Scalar::is_zero(rhs) {
            return Err(Error::DivisionByZero);
        }
        Ok(self / rhs)
    }

    fn magnitude(&self) -> f64 {
        self.norm()
    }
}

/// Rational `n/d` (panics on `d == 0`; test and generator helper).
pub fn rat(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

/// Rational from an integer.
pub fn rat_int(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

/// `k!` as a scalar, computed by repeated multiplication so it never
/// overflows a machine integer.
pub fn factorial<S: Scalar>(k: usize) -> S {
    let mut acc = S::one();
    for i in 2..=k {
        acc = acc * S::from_int(i as i64);
    }
    acc
}

/// `(-1)^k` as a scalar.
pub fn sign_pow<S: Scalar>(k: usize) -> S {
    if k.is_multiple_of(2) {
        S::one()
    } else {
        -S::one()
    }
}

/// Non-negative integer power by repeated multiplication.
pub fn pow<S: Scalar>(base: &S, exp: usize) -> S {
    let mut acc = S::one();
    for _ in 0..exp {
        acc = acc * base.clone();
    }
    acc
}
