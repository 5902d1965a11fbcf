//! Brute-force word evaluation: the literal matrix product every closed form
//! is validated against.

use crate::error::{Error, Result};
use crate::mat2::Mat2;
use crate::scalar::Real;
use crate::word::{BlockKind, Word};

/// Cap on the number of elementary factors a single evaluation may expand to.
/// The oracle is a desk-scale tool; norm growth overflows `f64` long before
/// this limit matters for the model case.
pub const MAX_ORACLE_FACTORS: u64 = 1 << 20;

/// Multiply the word out factor by factor in the model case (`h` blocks are
/// `diag(lambda, 0)`). Associativity of the float product is not exploited:
/// each exponent is expanded into repeated multiplications so the result is
/// independent of the closed forms it checks.
pub fn evaluate_word<T: Real>(word: &Word, theta: T, lambda: T) -> Result<Mat2<T>> {
    evaluate_with(word, Mat2::h(lambda), Mat2::rotation(theta))
}

pub(crate) fn evaluate_with<T: Real>(
    word: &Word,
    h_step: Mat2<T>,
    r_step: Mat2<T>,
) -> Result<Mat2<T>> {
    let factors = word.h_total() + word.r_total();
    if factors > MAX_ORACLE_FACTORS {
        return Err(Error::OracleScale {
            steps: factors,
            limit: MAX_ORACLE_FACTORS,
        });
    }
    let mut acc = Mat2::identity();
    for block in word.blocks() {
        let step = match block.kind {
            BlockKind::H => h_step,
            BlockKind::R => r_step,
        };
        for _ in 0..block.exponent {
            acc = acc * step;
        }
        if !acc.is_finite() {
            return Err(Error::Overflow {
                context: "word product",
            });
        }
    }
    Ok(acc)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::word;
    use std::f64::consts::{FRAC_PI_2, FRAC_PI_3};

    #[test]
    fn single_h_block() {
        let m = evaluate_word(&word![H:1], 1.234f64, 2.0).unwrap();
        assert_eq!((m.a, m.b, m.c, m.d), (2.0, 0.0, 0.0, 0.0));
    }

    #[test]
    fn quarter_turn_kills_hrh() {
        // cos(pi/2) only vanishes to ~6e-17 in f64, so the product is tiny
        // rather than exactly zero.
        let m = evaluate_word(&word![H:1, R:1, H:1], FRAC_PI_2, 2.0).unwrap();
        assert!(m.l1_norm() < 1e-15);
        assert_eq!(m.b, 0.0);
        assert_eq!(m.c, 0.0);
        assert_eq!(m.d, 0.0);
    }

    #[test]
    fn hr_product_by_hand() {
        let m = evaluate_word(&word![H:1, R:1], FRAC_PI_3, 2.0).unwrap();
        assert!((m.a - 1.0).abs() < 1e-14);
        assert!((m.b + 3f64.sqrt()).abs() < 1e-14);
        assert_eq!(m.c, 0.0);
        assert_eq!(m.d, 0.0);
    }

    #[test]
    fn identity_word_evaluates_to_identity() {
        assert_eq!(
            evaluate_word(&word![], 0.7f64, 2.0).unwrap(),
            Mat2::identity()
        );
    }

    #[test]
    fn hh_words_have_single_nonzero_entry() {
        let m = evaluate_word(&word![H:2, R:1, H:2, R:2, H:1], 0.9f64, 2.0).unwrap();
        assert_eq!(m.b, 0.0);
        assert_eq!(m.c, 0.0);
        assert_eq!(m.d, 0.0);
        assert!(m.a != 0.0);
    }

    #[test]
    fn overflow_is_detected() {
        let err = evaluate_word(&word![H:2000], 0.3f64, 2.0).unwrap_err();
        assert!(matches!(err, Error::Overflow { .. }));
    }

    #[test]
    fn factor_cap_is_enforced() {
        let err = evaluate_word(&word![R:u64::MAX], 0.3f64, 2.0).unwrap_err();
        assert!(matches!(err, Error::OracleScale { .. }));
    }

    #[test]
    fn concatenation_multiplies() {
        let u = word![H:2, R:1];
        let v = word![R:2, H:1, R:1];
        let theta = 0.41f64;
        let product = evaluate_word(&u, theta, 2.0).unwrap()
            * evaluate_word(&v, theta, 2.0).unwrap();
        let whole = evaluate_word(&u.concat(&v), theta, 2.0).unwrap();
        let diff = (product.a - whole.a).abs()
            + (product.b - whole.b).abs()
            + (product.c - whole.c).abs()
            + (product.d - whole.d).abs();
        assert!(diff <= 1e-12 * whole.l1_norm().max(1.0));
    }
}
