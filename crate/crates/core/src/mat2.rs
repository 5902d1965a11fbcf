//! 2x2 real matrices, row-major.

use std::ops::Mul;

use crate::error::{Error, Result};
use crate::scalar::Real;

/// Row-major 2x2 matrix `[[a, b], [c, d]]`. Entries stay finite; the
/// constructors that can overflow return `Err` instead.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Mat2<T> {
    pub a: T,
    pub b: T,
    pub c: T,
    pub d: T,
}

impl<T: Real> Mat2<T> {
    pub fn new(a: T, b: T, c: T, d: T) -> Self {
        Mat2 { a, b, c, d }
    }

    pub fn identity() -> Self {
        Mat2::new(T::one(), T::zero(), T::zero(), T::one())
    }

    pub fn zero() -> Self {
        Mat2::new(T::zero(), T::zero(), T::zero(), T::zero())
    }

    /// Counterclockwise rotation by `theta` radians.
    pub fn rotation(theta: T) -> Self {
        let (sin, cos) = theta.sin_cos();
        Mat2::new(cos, -sin, sin, cos)
    }

    /// The singular step `diag(lambda, 0)` of the model case.
    pub fn h(lambda: T) -> Self {
        Mat2::new(lambda, T::zero(), T::zero(), T::zero())
    }

    /// `diag(lambda^power, 0)`; the lower-right entry stays 0 under powers.
    pub fn h_power(lambda: T, power: u64) -> Result<Self> {
        let top = pow_checked(lambda, power, "lambda^power")?;
        Ok(Mat2::new(top, T::zero(), T::zero(), T::zero()))
    }

    /// Sum of absolute values of the four entries.
    pub fn l1_norm(&self) -> T {
        self.a.abs() + self.b.abs() + self.c.abs() + self.d.abs()
    }

    /// Determinant via a compensated product difference, so `ad` and `bc`
    /// cancel without losing the low bits.
    pub fn det(&self) -> T {
        let w = self.b * self.c;
        let e = self.b.mul_add(self.c, -w);
        self.a.mul_add(self.d, -w) - e
    }

    pub fn is_finite(&self) -> bool {
        self.a.is_finite() && self.b.is_finite() && self.c.is_finite() && self.d.is_finite()
    }
}

/// `base^power` with an overflow check; `power` may exceed `i32`.
pub(crate) fn pow_checked<T: Real>(base: T, power: u64, context: &'static str) -> Result<T> {
    let value = if power <= i32::MAX as u64 {
        base.powi(power as i32)
    } else {
        // powi saturates long before this for base > 1
        T::infinity()
    };
    if value.is_finite() {
        Ok(value)
    } else {
        Err(Error::Overflow { context })
    }
}

impl<T: Real> Mul for Mat2<T> {
    type Output = Mat2<T>;

    fn mul(self, rhs: Mat2<T>) -> Mat2<T> {
        Mat2::new(
            self.a * rhs.a + self.b * rhs.c,
            self.a * rhs.b + self.b * rhs.d,
            self.c * rhs.a + self.d * rhs.c,
            self.c * rhs.b + self.d * rhs.d,
        )
    }
}
