//! Scalar abstraction over the two realizations of the ordered field.
//!
//! `Rat` (arbitrary-precision rationals) certifies the theorems exactly;
//! `f64` cross-checks them numerically. Predicates branch on
//! [`Scalar::EXACT`]: exact realizations test residuals for literal zero,
//! the float realization compares an already-normalized residual against a
//! caller-supplied tolerance.

use num::bigint::BigInt;
use num::rational::BigRational;
use num::traits::{Signed, ToPrimitive};
use std::fmt;

/// Arbitrary-precision rational. `num` keeps values in lowest terms with a
/// positive denominator, which is exactly the invariant we need.
pub type Rat = BigRational;

/// An ordered field with enough structure for the geometric kernel.
///
/// `Signed` pulls in `Zero`, `One`, the four arithmetic operators and
/// `abs`/`signum`; `PartialOrd` gives the order. Operations take values,
/// so generic code clones operands — chain coefficients stay small enough
/// (bounded-height rationals, linear bit growth per step) that this is
/// never the bottleneck.
pub trait Scalar: Clone + PartialOrd + fmt::Debug + fmt::Display + Signed {
    /// True when equality of field elements is decidable and exact.
    const EXACT: bool;

    fn from_int(v: i64) -> Self;

    /// `num / den`. `den` must be nonzero.
    fn from_ratio(num: i64, den: i64) -> Self;

    fn to_f64(&self) -> f64;
}

impl Scalar for Rat {
    const EXACT: bool = true;

    fn from_int(v: i64) -> Self {
        Rat::from_integer(BigInt::from(v))
    }

    fn from_ratio(num: i64, den: i64) -> Self {
        Rat::new(BigInt::from(num), BigInt::from(den))
    }

    fn to_f64(&self) -> f64 {
        ToPrimitive::to_f64(self).unwrap_or(f64::NAN)
    }
}

impl Scalar for f64 {
    const EXACT: bool = false;

    fn from_int(v: i64) -> Self {
        v as f64
    }

    fn from_ratio(num: i64, den: i64) -> Self {
        num as f64 / den as f64
    }

    fn to_f64(&self) -> f64 {
        *self
    }
}

/// Accept an already scale-normalized residual: exact zero in the exact
/// realization, `|residual| ≤ tol` in float.
pub fn residual_ok<S: Scalar>(normalized: &S, tol: f64) -> bool {
    if S::EXACT {
        normalized.is_zero()
    } else {
        normalized.to_f64().abs() <= tol
    }
}
