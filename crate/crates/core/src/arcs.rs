//! Finite unions of arcs on the circle `[0, 2*pi)`.

use crate::scalar::Real;

/// Half-open arc `[start, end)` with `0 <= start < end <= 2*pi`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct ArcSpan<T> {
    pub start: T,
    pub end: T,
}

impl<T: Real> ArcSpan<T> {
    pub fn length(&self) -> T {
        self.end - self.start
    }
}

/// A finite union of arcs on `[0, 2*pi)`, kept sorted, pairwise disjoint and
/// non-touching. Arcs crossing `0` are stored split, so two representations
/// of the same set always compare equal.
#[derive(Clone, Debug, PartialEq, Default)]
pub struct CircularIntervalSet<T> {
    arcs: Vec<ArcSpan<T>>,
}

impl<T: Real> CircularIntervalSet<T> {
    pub fn empty() -> Self {
        CircularIntervalSet { arcs: Vec::new() }
    }

    /// The whole circle as the single arc `[0, 2*pi)`.
    pub fn full() -> Self {
        CircularIntervalSet {
            arcs: vec![ArcSpan {
                start: T::zero(),
                end: T::TAU(),
            }],
        }
    }

    /// Normalize raw `(start, end)` pairs: ends below starts are empty and
    /// dropped, spans of length `>= 2*pi` cover everything, all others are
    /// shifted into `[0, 2*pi)` and split at the wrap point, then overlapping
    /// or touching arcs merge.
    pub fn from_arcs<I>(arcs: I) -> Self
    where
        I: IntoIterator<Item = (T, T)>,
    {
        let tau = T::TAU();
        let mut spans: Vec<ArcSpan<T>> = Vec::new();
        for (start, end) in arcs {
            debug_assert!(start.is_finite() && end.is_finite());
            let length = end - start;
            if length <= T::zero() {
                continue;
            }
            if length >= tau {
                return Self::full();
            }
            let mut s = start % tau;
            if s < T::zero() {
                s = s + tau;
            }
            let e = s + length;
            if e <= tau {
                spans.push(ArcSpan { start: s, end: e });
            } else {
                spans.push(ArcSpan { start: s, end: tau });
                spans.push(ArcSpan {
                    start: T::zero(),
                    end: e - tau,
                });
            }
        }
        spans.retain(|a| a.length() > T::zero());
        spans.sort_by(|x, y| x.start.partial_cmp(&y.start).expect("finite starts"));

        let mut merged: Vec<ArcSpan<T>> = Vec::with_capacity(spans.len());
        for span in spans {
            match merged.last_mut() {
                Some(last) if span.start <= last.end => {
                    if span.end > last.end {
                        last.end = span.end;
                    }
                }
                _ => merged.push(span),
            }
        }
        CircularIntervalSet { arcs: merged }
    }

    pub fn arcs(&self) -> &[ArcSpan<T>] {
        &self.arcs
    }

    pub fn is_empty(&self) -> bool {
        self.arcs.is_empty()
    }

    /// Lebesgue measure: the sum of arc lengths, in `[0, 2*pi]`.
    pub fn measure(&self) -> T {
        self.arcs
            .iter()
            .fold(T::zero(), |acc, a| acc + a.length())
    }

    /// Set union.
    pub fn union(&self, other: &Self) -> Self {
        Self::from_arcs(
            self.arcs
                .iter()
                .chain(other.arcs.iter())
                .map(|a| (a.start, a.end)),
        )
    }

    /// Membership with half-open semantics; `theta` is reduced mod `2*pi`.
    pub fn contains(&self, theta: T) -> bool {
        let x = crate::scalar::reduce_angle(theta);
        self.arcs
            .iter()
            .take_while(|a| a.start <= x)
            .any(|a| x < a.end)
    }

    /// The complementary union of arcs.
    pub fn complement(&self) -> Self {
        let tau = T::TAU();
        if self.arcs.is_empty() {
            return Self::full();
        }
        let mut gaps = Vec::with_capacity(self.arcs.len() + 1);
        let mut cursor = T::zero();
        for arc in &self.arcs {
            if arc.start > cursor {
                gaps.push(ArcSpan {
                    start: cursor,
                    end: arc.start,
                });
            }
            cursor = arc.end;
        }
        if cursor < tau {
            gaps.push(ArcSpan {
                start: cursor,
                end: tau,
            });
        }
        CircularIntervalSet { arcs: gaps }
    }

    /// Map `u` in `[0, 1)` to the point sitting `u * measure` into the set,
    /// walking arcs in order. Uniform `u` gives a uniform sample of the set.
    /// `None` for (measure-)empty sets.
    pub fn sample(&self, u: T) -> Option<T> {
        let measure = self.measure();
        if self.arcs.is_empty() || measure <= T::zero() {
            return None;
        }
        let mut offset = u * measure;
        for arc in &self.arcs {
            if offset < arc.length() {
                return Some(arc.start + offset);
            }
            offset = offset - arc.length();
        }
        // float dust for u -> 1: land mid-arc rather than on a boundary
        let last = self.arcs.last().unwrap();
        Some(last.start + last.length() / (T::one() + T::one()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::{PI, TAU};

    type Set = CircularIntervalSet<f64>;

    #[test]
    fn empty_and_full() {
        assert_eq!(Set::empty().measure(), 0.0);
        assert!((Set::full().measure() - TAU).abs() < 1e-15);
        assert!(Set::full().contains(3.0));
        assert!(!Set::empty().contains(3.0));
    }

    #[test]
    fn merge_overlapping_and_touching() {
        let set = Set::from_arcs([(0.5, 1.0), (0.9, 1.4), (1.4, 1.6), (3.0, 3.2)]);
        assert_eq!(set.arcs().len(), 2);
        assert!((set.measure() - (1.1 + 0.2)).abs() < 1e-15);
    }

    #[test]
    fn wrap_around_is_split() {
        let set = Set::from_arcs([(TAU - 0.3, TAU + 0.4)]);
        assert_eq!(set.arcs().len(), 2);
        assert!(set.contains(0.1));
        assert!(set.contains(TAU - 0.1));
        assert!(!set.contains(1.0));
        assert!((set.measure() - 0.7).abs() < 1e-15);
    }

    #[test]
    fn negative_starts_reduce() {
        let set = Set::from_arcs([(-0.2, 0.1)]);
        assert!(set.contains(0.05));
        assert!(set.contains(TAU - 0.1));
        assert!((set.measure() - 0.3).abs() < 1e-15);
    }

    #[test]
    fn union_laws_up_to_representation() {
        let a = Set::from_arcs([(0.1, 0.5), (2.0, 2.5)]);
        let b = Set::from_arcs([(0.4, 0.9), (5.0, 5.5)]);
        let c = Set::from_arcs([(2.4, 2.6)]);
        assert_eq!(a.union(&a), a);
        assert_eq!(a.union(&b), b.union(&a));
        assert_eq!(a.union(&b).union(&c), a.union(&b.union(&c)));
    }

    #[test]
    fn complement_roundtrip() {
        let set = Set::from_arcs([(0.0, 0.5), (2.0, 2.5), (6.0, TAU)]);
        let comp = set.complement();
        assert!((set.measure() + comp.measure() - TAU).abs() < 1e-14);
        assert_eq!(comp.complement(), set);
        assert_eq!(Set::empty().complement(), Set::full());
        for x in [0.25, 0.7, 2.2, 3.0, 6.1] {
            assert_ne!(set.contains(x), comp.contains(x), "x={x}");
        }
    }

    #[test]
    fn half_open_membership() {
        let set = Set::from_arcs([(1.0, 2.0)]);
        assert!(set.contains(1.0));
        assert!(!set.contains(2.0));
    }

    #[test]
    fn sample_lands_inside_and_is_monotone() {
        let set = Set::from_arcs([(0.5, 1.0), (PI, PI + 2.0)]);
        let mut prev = -1.0f64;
        for i in 0..200 {
            let u = i as f64 / 200.0;
            let x = set.sample(u).unwrap();
            assert!(set.contains(x), "u={u} -> {x}");
            assert!(x >= prev, "sample walk must be monotone in u");
            prev = x;
        }
        assert_eq!(Set::empty().sample(0.5), None);
    }

    #[test]
    fn full_cover_from_oversized_span() {
        let set = Set::from_arcs([(1.0, 1.0 + TAU)]);
        assert_eq!(set, Set::full());
    }
}
