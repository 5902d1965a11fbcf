//! Minimum word norm `f_n(theta)` via dynamic programming over rotation
//! budgets, with witness recovery, plus the exhaustive oracle it is checked
//! against.
//!
//! The minimum over all words with `n` singular factors and at most
//! `floor(epsilon n)` rotations is attained on a word with `h` blocks at both
//! ends, whose norm is `lambda^n` times a product of `|cos(j theta)|` over
//! the rotation profile. Minimizing that product over profiles summing to a
//! budget `m` is a partition problem solved by the recurrence
//! `G[m] = min_{1 <= j <= m} (log|cos(j theta)| + G[m - j])`.

use crate::closed_form::closed_form_norm;
use crate::enumerate::enumerate_words;
use crate::error::{Error, Result};
use crate::logmag::LogMagnitude;
use crate::oracle::evaluate_word;
use crate::params::Params;
use crate::scalar::{reduce_angle, Real};
use crate::word::{BlockKind, Word};

/// Largest `n` the exhaustive minimizer accepts.
pub const BRUTE_FORCE_MAX_N: u64 = 12;

/// Result of a minimum-norm query: the log of `f_n(theta)`, a rotation
/// profile realizing it on an `h...h`-bounded word, and the rotation count
/// that profile spends.
#[derive(Clone, Debug, PartialEq)]
pub struct MinResult<T> {
    pub log_f_n: LogMagnitude<T>,
    pub witness_profile: Vec<u64>,
    pub m_used: u64,
}

/// The table `G[0..=m_max]` of minimal `sum log|cos(j theta)|` over
/// partitions of each budget, with backpointers for witness recovery.
#[derive(Clone, Debug)]
pub struct MinCosProductTable<T> {
    values: Vec<T>,
    back: Vec<u64>,
    parts: Vec<u32>,
}

impl<T: Real> MinCosProductTable<T> {
    /// `G[m]`, in the log domain (`-inf` when a cosine factor vanished).
    pub fn value(&self, m: u64) -> T {
        self.values[m as usize]
    }

    pub fn values(&self) -> &[T] {
        &self.values
    }

    /// Budget the table was built for.
    pub fn m_max(&self) -> u64 {
        (self.values.len() - 1) as u64
    }

    /// A partition of `m` attaining `G[m]`: fewest parts among the minima,
    /// lexicographically smallest among those.
    pub fn partition(&self, m: u64) -> Vec<u64> {
        let mut profile = Vec::new();
        let mut rest = m as usize;
        while rest > 0 {
            let j = self.back[rest];
            profile.push(j);
            rest -= j as usize;
        }
        profile
    }
}

/// Build the partition-minimum table for budgets `0..=m_max`.
/// `O(m_max^2)` time, `O(m_max)` space.
pub fn min_log_cos_product<T: Real>(theta: T, m_max: u64) -> MinCosProductTable<T> {
    let th = reduce_angle(theta);
    let mm = m_max as usize;
    let log_cos: Vec<T> = (1..=mm)
        .map(|j| T::cos_multiple(th, j as u64).abs().ln())
        .collect();

    let mut values = Vec::with_capacity(mm + 1);
    let mut back = vec![0u64; mm + 1];
    let mut parts = vec![0u32; mm + 1];
    values.push(T::zero());
    for m in 1..=mm {
        let mut best_value = T::infinity();
        let mut best_parts = u32::MAX;
        let mut best_j = 0u64;
        // ties resolve to fewer parts, then to the smallest leading part,
        // which makes the recovered profile lexicographically least
        for j in 1..=m {
            let value = log_cos[j - 1] + values[m - j];
            let part_count = parts[m - j] + 1;
            if value < best_value || (value == best_value && part_count < best_parts) {
                best_value = value;
                best_parts = part_count;
                best_j = j as u64;
            }
        }
        values.push(best_value);
        back[m] = best_j;
        parts[m] = best_parts;
    }
    MinCosProductTable { values, back, parts }
}

/// `f_n(theta)`: minimum norm over all admissible words, by DP.
///
/// The budget is `M = floor(epsilon n)`; `G` is nonincreasing in the budget
/// (every extension multiplies by `|cos| <= 1`), so the minimum over budgets
/// `m <= M` is `G[M]`, and the witness is taken at the smallest budget
/// already attaining it. The reported log norm is the closed-form norm of
/// the witness word, so re-evaluating the witness reproduces it exactly.
pub fn f_n<T: Real>(theta: T, n: u64, params: &Params<T>) -> MinResult<T> {
    assert!(n >= 1, "f_n needs n >= 1");
    let budget = params.rotation_budget(n);
    let table = min_log_cos_product(theta, budget);

    debug_assert!(
        (0..=budget).all(|m| table.value(m) >= table.value(budget)),
        "partition minimum must be nonincreasing in the budget"
    );

    let g_final = table.value(budget);
    let m_used = (0..=budget)
        .find(|&m| table.value(m) == g_final)
        .expect("budget itself attains the minimum");
    let witness_profile = table.partition(m_used);
    let word = witness_word(n, &witness_profile);
    MinResult {
        log_f_n: closed_form_norm(&word, theta, params.lambda()),
        witness_profile,
        m_used,
    }
}

/// An `h...h`-bounded word with `h_total = n` realizing the given rotation
/// profile. Any positive split of `n` gives the same norm; this one puts the
/// surplus up front. Requires `profile.len() < n` so every `h` block is
/// nonempty (guaranteed for profiles within budget, since `epsilon < 1`).
pub fn witness_word(n: u64, profile: &[u64]) -> Word {
    let k = profile.len() as u64;
    assert!(n >= 1 && (k == 0 || k < n), "profile too long for n");
    let mut blocks = vec![(BlockKind::H, n - k)];
    for &j in profile {
        blocks.push((BlockKind::R, j));
        blocks.push((BlockKind::H, 1));
    }
    Word::from_blocks(blocks)
}

/// Exhaustive `f_n` over `enumerate_words(n, floor(epsilon n))`; only for
/// validating the DP. Ties keep the first word in enumeration order.
pub fn brute_force_f_n<T: Real>(theta: T, n: u64, params: &Params<T>) -> Result<MinResult<T>> {
    if n == 0 || n > BRUTE_FORCE_MAX_N {
        return Err(Error::OracleScale {
            steps: n,
            limit: BRUTE_FORCE_MAX_N,
        });
    }
    let budget = params.rotation_budget(n);
    let mut best: Option<(T, Word)> = None;
    for word in enumerate_words(n, budget) {
        let norm = evaluate_word(&word, theta, params.lambda())?.l1_norm();
        if best.as_ref().is_none_or(|(b, _)| norm < *b) {
            best = Some((norm, word));
        }
    }
    let (norm, word) = best.expect("enumeration is nonempty for n >= 1");
    Ok(MinResult {
        log_f_n: LogMagnitude::from_value(norm),
        witness_profile: word.rotation_profile(),
        m_used: word.r_total(),
    })
}
