//! Log-domain magnitudes.
//!
//! Word norms scale like `lambda^n`, which leaves `f64` range around
//! `n = 1000`. All norm arithmetic therefore runs on the logarithm of the
//! magnitude, with `-inf` encoding an exact zero so that a vanished cosine
//! factor absorbs the whole product.

use std::ops::{Mul, MulAssign};

use crate::scalar::Real;

/// Logarithm of a nonnegative real. `-inf` encodes exactly zero; finite
/// values encode positive reals. `+inf` and NaN are never stored.
#[derive(Clone, Copy, Debug, PartialEq, PartialOrd)]
pub struct LogMagnitude<T>(T);

impl<T: Real> LogMagnitude<T> {
    /// The magnitude 0 (log value `-inf`).
    pub fn zero() -> Self {
        LogMagnitude(T::neg_infinity())
    }

    /// The magnitude 1 (log value 0).
    pub fn one() -> Self {
        LogMagnitude(T::zero())
    }

    /// Wrap an already-computed logarithm.
    pub fn from_ln(ln: T) -> Self {
        debug_assert!(!ln.is_nan() && ln != T::infinity(), "bad log value {ln:?}");
        LogMagnitude(ln)
    }

    /// Take the log of a nonnegative linear-domain value.
    pub fn from_value(value: T) -> Self {
        assert!(
            value >= T::zero(),
            "magnitude must be nonnegative, got {value}"
        );
        LogMagnitude(value.ln())
    }

    /// The stored logarithm (`-inf` for the zero magnitude).
    pub fn ln(self) -> T {
        self.0
    }

    /// Back to the linear domain; overflows to `+inf` past the scalar's range.
    pub fn value(self) -> T {
        self.0.exp()
    }

    pub fn is_zero(self) -> bool {
        self.0 == T::neg_infinity()
    }
}

impl<T: Real> Mul for LogMagnitude<T> {
    type Output = Self;

    fn mul(self, rhs: Self) -> Self {
        // -inf + finite = -inf, -inf + -inf = -inf: absorption comes for free
        LogMagnitude(self.0 + rhs.0)
    }
}

impl<T: Real> MulAssign for LogMagnitude<T> {
    fn mul_assign(&mut self, rhs: Self) {
        self.0 = self.0 + rhs.0;
    }
}
