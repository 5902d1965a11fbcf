//! Scalar abstraction: everything numeric in this crate is generic over a
//! floating-point type, in practice `f32` or `f64`.

use std::fmt::{Debug, Display};

use num_traits::{Float, FloatConst, FromPrimitive};

/// Threshold above which `j * theta` is no longer formed as a plain product.
///
/// Below it the rounding of `(j as f64) * theta` perturbs the phase by at most
/// `j * theta * 2^-53`, which is accepted as part of the declared error
/// budget. Beyond it the product is reduced modulo 2*pi in double-double
/// arithmetic before the trig call.
pub const PLAIN_MULTIPLE_LIMIT: u64 = 1 << 40;

/// Floating-point scalar the library is generic over.
pub trait Real: Float + FloatConst + FromPrimitive + Debug + Display + 'static {
    /// `(sin, cos)` of `j * theta` with `j` an exact integer.
    fn sin_cos_multiple(theta: Self, j: u64) -> (Self, Self);

    /// `cos(j * theta)` with `j` an exact integer.
    fn cos_multiple(theta: Self, j: u64) -> Self {
        Self::sin_cos_multiple(theta, j).1
    }
}

impl Real for f64 {
    fn sin_cos_multiple(theta: Self, j: u64) -> (Self, Self) {
        if j <= PLAIN_MULTIPLE_LIMIT {
            (j as f64 * theta).sin_cos()
        } else {
            mul_mod_tau(theta, j).sin_cos()
        }
    }
}

impl Real for f32 {
    fn sin_cos_multiple(theta: Self, j: u64) -> (Self, Self) {
        // f32 has no headroom for phase accumulation; route through f64.
        let (s, c) = f64::sin_cos_multiple(theta as f64, j);
        (s as f32, c as f32)
    }
}

/// Reduce `theta` into `[0, 2*pi)`.
pub fn reduce_angle<T: Real>(theta: T) -> T {
    let tau = T::TAU();
    let r = theta % tau;
    if r < T::zero() {
        r + tau
    } else {
        r
    }
}

// --- double-double reduction of j * theta modulo 2*pi ---------------------
//
// An unevaluated hi + lo pair carries ~106 significant bits. Squaring-free
// binary ladder: residues of theta * 2^k are reduced step by step, so no
// intermediate ever exceeds 4*pi and the multiples of 2*pi dropped along the
// way are exact.

const TAU_HI: f64 = std::f64::consts::TAU;
const TAU_LO: f64 = 2.449_293_598_294_706_41e-16; // 2*pi - TAU_HI to ~2^-107

#[derive(Clone, Copy)]
struct Dd {
    hi: f64,
    lo: f64,
}

#[inline]
fn two_sum(a: f64, b: f64) -> (f64, f64) {
    let s = a + b;
    let bb = s - a;
    (s, (a - (s - bb)) + (b - bb))
}

#[inline]
fn quick_two_sum(a: f64, b: f64) -> (f64, f64) {
    // requires |a| >= |b|
    let s = a + b;
    (s, b - (s - a))
}

impl Dd {
    fn new(x: f64) -> Self {
        Dd { hi: x, lo: 0.0 }
    }

    fn add(self, other: Dd) -> Dd {
        let (s, e) = two_sum(self.hi, other.hi);
        let (hi, lo) = quick_two_sum(s, e + self.lo + other.lo);
        Dd { hi, lo }
    }

    fn double(self) -> Dd {
        Dd {
            hi: 2.0 * self.hi,
            lo: 2.0 * self.lo,
        }
    }

    /// Bring a value in `[0, 4*pi)` back into `[0, ~2*pi)`.
    fn mod_tau(self) -> Dd {
        if self.hi >= TAU_HI {
            let (s, e) = two_sum(self.hi, -TAU_HI);
            let (hi, lo) = quick_two_sum(s, e + self.lo - TAU_LO);
            Dd { hi, lo }
        } else {
            self
        }
    }

    fn value(self) -> f64 {
        self.hi + self.lo
    }
}

/// `(j * theta) mod 2*pi` for `theta` in `[0, 2*pi)`, accurate to ~2^-94.
fn mul_mod_tau(theta: f64, j: u64) -> f64 {
    let mut acc = Dd::new(0.0);
    let mut cur = Dd::new(reduce_angle(theta));
    let mut bits = j;
    while bits != 0 {
        if bits & 1 == 1 {
            acc = acc.add(cur).mod_tau();
        }
        bits >>= 1;
        if bits != 0 {
            cur = cur.double().mod_tau();
        }
    }
    acc.value()
}

// --- exact floor arithmetic on float parameters ----------------------------
//
// Rotation budgets and witness lengths are defined through floors of
// epsilon * n and alpha / epsilon. Forming those products in floating point
// can land on the wrong side of an integer, so both floors are computed
// exactly from the binary representation of the parameter.

/// `floor(x * n)` computed exactly, for `x` in `(0, 1)`.
pub(crate) fn floor_mul<T: Real>(x: T, n: u64) -> u64 {
    if n == 0 {
        return 0;
    }
    let (mant, exp, sign) = x.integer_decode();
    debug_assert!(sign > 0 && exp < 0);
    let prod = mant as u128 * n as u128; // mant < 2^53, n < 2^64: fits
    let shift = (-exp) as u32;
    if shift >= 128 {
        0
    } else {
        (prod >> shift) as u64
    }
}

/// `floor(a / x)` computed exactly, for `x` in `(0, 1)`; saturates at
/// `u64::MAX` when the quotient leaves the representable range.
pub(crate) fn floor_div<T: Real>(a: u64, x: T) -> u64 {
    if a == 0 {
        return 0;
    }
    let (mant, exp, sign) = x.integer_decode();
    debug_assert!(sign > 0 && exp < 0);
    let shift = (-exp) as u32;
    match (a as u128).checked_shl(shift) {
        Some(num) => {
            let q = num / mant as u128;
            u64::try_from(q).unwrap_or(u64::MAX)
        }
        None => u64::MAX,
    }
}
