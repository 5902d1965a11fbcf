//! Closed-form word norms in the log domain.
//!
//! For the model case the entrywise norm of any word collapses to
//! `lambda^n` times a product of `|cos(j_i * theta)|` factors, with the
//! boundary rotation blocks contributing `|cos| + |sin|` instead. Working on
//! logarithms keeps the formulas valid at any `n`, far past where the literal
//! product overflows.
//!
//! The norm depends only on `(n, boundary type, rotation profile)` — not on
//! how `n` is split among the `h` blocks — and the implementation reads only
//! those, so equal-profile words produce bit-identical results.

use crate::logmag::LogMagnitude;
use crate::mat2::Mat2;
use crate::scalar::{reduce_angle, Real};
use crate::word::{Word, WordShape};

/// `log || W(theta) ||` for the model case.
///
/// An exactly vanished cosine factor yields the zero magnitude (`-inf`); the
/// identity word has norm 2. Terms accumulate left to right in profile order
/// with the boundary blocks swapped to their `|cos| + |sin|` factor, so for a
/// fixed profile the pure-interior (`h...h`) variant is a monotone lower
/// bound of the other boundary types, bit for bit.
pub fn closed_form_norm<T: Real>(word: &Word, theta: T, lambda: T) -> LogMagnitude<T> {
    if word.is_identity() {
        return LogMagnitude::from_value(T::one() + T::one());
    }
    let shape = word.shape().expect("nonempty word");
    let th = reduce_angle(theta);
    let n_log_lambda = T::from_u64(word.h_total()).unwrap() * lambda.ln();

    match shape {
        WordShape::PureH => LogMagnitude::from_ln(n_log_lambda),
        WordShape::PureR => {
            // || R_theta^m || taken literally: 2 (|cos(m theta)| + |sin(m theta)|).
            // Never used by the minimum (n >= 1 there); present so every
            // canonical word has a norm.
            let m = word.rotation_profile()[0];
            LogMagnitude::from_value(Mat2::rotation(th * T::from_u64(m).unwrap()).l1_norm())
        }
        _ => {
            let profile = word.rotation_profile();
            let k = profile.len();
            let mut acc = n_log_lambda;
            for (i, &j) in profile.iter().enumerate() {
                let boundary = match shape {
                    WordShape::HR => i == k - 1,
                    WordShape::RH => i == 0,
                    WordShape::RR => i == 0 || i == k - 1,
                    WordShape::HH => false,
                    _ => unreachable!(),
                };
                let (sin, cos) = T::sin_cos_multiple(th, j);
                let term = if boundary {
                    (cos.abs() + sin.abs()).ln()
                } else {
                    cos.abs().ln()
                };
                acc = acc + term;
            }
            LogMagnitude::from_ln(acc)
        }
    }
}
