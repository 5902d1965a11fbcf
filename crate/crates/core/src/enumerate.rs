//! Exhaustive word enumeration for the brute-force oracle.
//!
//! The count grows exponentially in `n` and `m_max`; this is strictly a
//! desk-scale tool for validating the closed forms and the minimizer.

use crate::word::{BlockKind, Word, WordShape};

/// Every canonical word with `h_total = n` and `0 <= r_total <= m_max`,
/// each exactly once.
///
/// Order is deterministic: ascending rotation total `m`, then rotation block
/// count `k`, then boundary type in the order HR, RH, RR, HH, then the
/// rotation composition and the `h` composition, both lexicographic. The
/// `m = 0` slot yields the single pure-`h` word; pure-rotation words cannot
/// occur because `h_total = n >= 1`.
pub fn enumerate_words(n: u64, m_max: u64) -> impl Iterator<Item = Word> {
    (0..=m_max).flat_map(move |m| {
        let per_m: Box<dyn Iterator<Item = Word>> = if n == 0 {
            Box::new(std::iter::empty())
        } else if m == 0 {
            Box::new(std::iter::once(Word::from_blocks([(BlockKind::H, n)])))
        } else {
            Box::new((1..=m).flat_map(move |k| {
                compositions(m, k).into_iter().flat_map(move |r_comp| {
                    [WordShape::HR, WordShape::RH, WordShape::RR, WordShape::HH]
                        .into_iter()
                        .flat_map(move |shape| {
                            let h_blocks = match shape {
                                WordShape::HR | WordShape::RH => k,
                                WordShape::RR => k - 1,
                                WordShape::HH => k + 1,
                                _ => unreachable!(),
                            };
                            let r_comp = r_comp.clone();
                            compositions(n, h_blocks)
                                .into_iter()
                                .map(move |h_comp| interleave(shape, &h_comp, &r_comp))
                        })
                })
            }))
        };
        per_m
    })
}

/// All ways to write `total` as an ordered sum of `parts` positive integers,
/// in lexicographic order. Empty when infeasible; `parts = 0` admits only
/// `total = 0`.
fn compositions(total: u64, parts: u64) -> Vec<Vec<u64>> {
    if parts == 0 {
        return if total == 0 { vec![Vec::new()] } else { Vec::new() };
    }
    if parts == 1 {
        return if total >= 1 { vec![vec![total]] } else { Vec::new() };
    }
    if total < parts {
        return Vec::new();
    }
    let mut out = Vec::new();
    for first in 1..=total - (parts - 1) {
        for mut rest in compositions(total - first, parts - 1) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}

fn interleave(shape: WordShape, h_comp: &[u64], r_comp: &[u64]) -> Word {
    let k = r_comp.len();
    let mut blocks = Vec::with_capacity(h_comp.len() + k);
    match shape {
        WordShape::HR => {
            for i in 0..k {
                blocks.push((BlockKind::H, h_comp[i]));
                blocks.push((BlockKind::R, r_comp[i]));
            }
        }
        WordShape::RH => {
            for i in 0..k {
                blocks.push((BlockKind::R, r_comp[i]));
                blocks.push((BlockKind::H, h_comp[i]));
            }
        }
        WordShape::RR => {
            blocks.push((BlockKind::R, r_comp[0]));
            for i in 0..k - 1 {
                blocks.push((BlockKind::H, h_comp[i]));
                blocks.push((BlockKind::R, r_comp[i + 1]));
            }
        }
        WordShape::HH => {
            for i in 0..k {
                blocks.push((BlockKind::H, h_comp[i]));
                blocks.push((BlockKind::R, r_comp[i]));
            }
            blocks.push((BlockKind::H, h_comp[k]));
        }
        WordShape::PureH | WordShape::PureR => unreachable!(),
    }
    Word::from_blocks(blocks)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::word;
    use std::collections::HashSet;

    #[test]
    fn n1_m0_is_single_h() {
        let words: Vec<_> = enumerate_words(1, 0).collect();
        assert_eq!(words, vec![word![H:1]]);
    }

    #[test]
    fn n2_m1_exhaustive() {
        let words: Vec<_> = enumerate_words(2, 1).collect();
        assert_eq!(
            words,
            vec![
                word![H:2],
                word![H:2, R:1],
                word![R:1, H:2],
                word![H:1, R:1, H:1],
            ]
        );
    }

    #[test]
    fn n1_m2_contains_rr_and_rh_forms() {
        let words: Vec<_> = enumerate_words(1, 2).collect();
        assert!(words.contains(&word![R:2, H:1]));
        assert!(words.contains(&word![R:1, H:1, R:1]));
    }

    #[test]
    fn no_duplicates_and_totals_hold() {
        for (n, m_max) in [(1u64, 4u64), (3, 3), (5, 4), (6, 3)] {
            let mut seen = HashSet::new();
            let mut count = 0usize;
            for w in enumerate_words(n, m_max) {
                assert_eq!(w.h_total(), n, "{w}");
                assert!(w.r_total() <= m_max, "{w}");
                assert!(seen.insert(w.clone()), "duplicate {w}");
                count += 1;
            }
            assert_eq!(seen.len(), count);
        }
    }

    #[test]
    fn all_boundary_types_appear() {
        let shapes: HashSet<_> = enumerate_words(4, 3)
            .map(|w| w.shape().unwrap())
            .collect();
        for shape in [
            WordShape::HR,
            WordShape::RH,
            WordShape::RR,
            WordShape::HH,
            WordShape::PureH,
        ] {
            assert!(shapes.contains(&shape), "missing {shape:?}");
        }
        assert!(!shapes.contains(&WordShape::PureR));
    }

    #[test]
    fn compositions_are_lexicographic() {
        assert_eq!(
            compositions(4, 2),
            vec![vec![1, 3], vec![2, 2], vec![3, 1]]
        );
        assert_eq!(compositions(3, 3), vec![vec![1, 1, 1]]);
        assert!(compositions(2, 3).is_empty());
        assert_eq!(compositions(0, 0), vec![Vec::<u64>::new()]);
        assert!(compositions(1, 0).is_empty());
    }
}
