//! Model parameters.

use crate::error::{Error, Result};
use crate::scalar::{floor_div, floor_mul, Real};

/// The three model parameters: growth factor `lambda > 1`, norm-threshold
/// exponent `delta` in `(0, 1)`, and rotation budget fraction `epsilon` in
/// `(0, 1)`. A word with `n` singular factors may use at most
/// `floor(epsilon * n)` rotations, and an angle is resonant once some word
/// norm drops below `lambda^(delta * n)`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Params<T> {
    lambda: T,
    delta: T,
    epsilon: T,
}

impl<T: Real> Params<T> {
    pub fn new(lambda: T, delta: T, epsilon: T) -> Result<Self> {
        if !(lambda.is_finite() && lambda > T::one()) {
            return Err(Error::InvalidParams(format!("lambda must be > 1, got {lambda}")));
        }
        if !(delta.is_finite() && delta > T::zero() && delta < T::one()) {
            return Err(Error::InvalidParams(format!("delta must be in (0, 1), got {delta}")));
        }
        if !(epsilon.is_finite() && epsilon > T::zero() && epsilon < T::one()) {
            return Err(Error::InvalidParams(format!(
                "epsilon must be in (0, 1), got {epsilon}"
            )));
        }
        Ok(Params { lambda, delta, epsilon })
    }

    pub fn lambda(&self) -> T {
        self.lambda
    }

    pub fn delta(&self) -> T {
        self.delta
    }

    pub fn epsilon(&self) -> T {
        self.epsilon
    }

    /// `floor(epsilon * n)`: the largest rotation count a word with `n`
    /// singular factors may use. The floor is taken of the exact product of
    /// the binary value of `epsilon` with `n`, not of the rounded one.
    pub fn rotation_budget(&self, n: u64) -> u64 {
        floor_mul(self.epsilon, n)
    }

    /// `floor(alpha / epsilon) + 1`: the word length of the constructive
    /// resonance witness for a near-zero of `cos(alpha * theta)`.
    pub fn witness_length(&self, alpha: u64) -> u64 {
        floor_div(alpha, self.epsilon).saturating_add(1)
    }

    /// `log(lambda^(delta * n))`, the resonance threshold at length `n` in
    /// the log domain.
    pub fn log_threshold(&self, n: u64) -> T {
        self.delta * T::from_u64(n).unwrap() * self.lambda.ln()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_out_of_range() {
        assert!(Params::new(1.0f64, 0.5, 0.5).is_err());
        assert!(Params::new(0.5f64, 0.5, 0.5).is_err());
        assert!(Params::new(2.0f64, 0.0, 0.5).is_err());
        assert!(Params::new(2.0f64, 1.0, 0.5).is_err());
        assert!(Params::new(2.0f64, 0.5, 0.0).is_err());
        assert!(Params::new(2.0f64, 0.5, 1.0).is_err());
        assert!(Params::new(f64::NAN, 0.5, 0.5).is_err());
        assert!(Params::new(2.0f64, 0.5, 0.5).is_ok());
    }

    #[test]
    fn rotation_budget_floors_exactly() {
        let p = Params::new(2.0f64, 0.5, 0.5).unwrap();
        assert_eq!(p.rotation_budget(9), 4);
        assert_eq!(p.rotation_budget(20), 10);
        let p = Params::new(2.0f64, 0.5, 0.1).unwrap();
        // 0.1 as f64 is slightly above 1/10
        assert_eq!(p.rotation_budget(10), 1);
        assert_eq!(p.rotation_budget(9), 0);
    }

    #[test]
    fn witness_length_brackets_alpha_over_epsilon() {
        // n = floor(alpha/eps) + 1 must satisfy n - 1 <= alpha/eps < n
        let p = Params::new(2.0f64, 0.5, 0.5).unwrap();
        assert_eq!(p.witness_length(10), 21);
        let p = Params::new(2.0f64, 0.5, 0.3).unwrap();
        assert_eq!(p.witness_length(3), 11); // 3/0.3 is just above 10
    }

    #[test]
    fn threshold_is_delta_n_log_lambda() {
        let p = Params::new(2.0f64, 0.5, 0.5).unwrap();
        assert!((p.log_threshold(4) - 2.0 * 2f64.ln()).abs() < 1e-15);
    }
}
