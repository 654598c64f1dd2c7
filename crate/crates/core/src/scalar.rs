//! Scalar abstraction shared by every numerical routine in the crate.

use std::fmt::{Debug, Display, LowerExp};

use num_traits::{Float, FloatConst, FromPrimitive, NumAssign};
use serde::Serialize;

/// Real floating-point scalar: implemented for `f32` and `f64`.
pub trait Real:
    Float
    + FloatConst
    + FromPrimitive
    + NumAssign
    + Debug
    + Display
    + LowerExp
    + Default
    + Send
    + Sync
    + Serialize
    + 'static
{
    /// Converts an `f64` literal into the scalar type.
    #[inline]
    fn lit(value: f64) -> Self {
        Self::from_f64(value).expect("literal representable in scalar type")
    }

    /// Converts a count or index.
    #[inline]
    fn from_count(value: usize) -> Self {
        Self::from_usize(value).expect("count representable in scalar type")
    }

    /// Widens to `f64`, used for diagnostics and error messages.
    #[inline]
    fn as_f64(self) -> f64 {
        self.to_f64().unwrap_or(f64::NAN)
    }
}

impl Real for f32 {}
impl Real for f64 {}

/// Neumaier-compensated sum.
pub fn compensated_sum<T: Real, I: IntoIterator<Item = T>>(values: I) -> T {
    let mut sum = T::zero();
    let mut carry = T::zero();
    for v in values {
        let t = sum + v;
        if sum.abs() >= v.abs() {
            carry += (sum - t) + v;
        } else {
            carry += (v - t) + sum;
        }
        sum = t;
    }
    sum + carry
}
