//! Scalar abstraction shared by every numeric routine in the crate.

use std::fmt::{Debug, Display};

use num_traits::{Float, FromPrimitive, ToPrimitive};

/// Floating-point scalar the statistics are computed in.
///
/// Implemented for `f32` and `f64`. The tail-probability routines are tuned
/// for `f64`; `f32` works but only to single-precision accuracy.
pub trait Real:
    Float + FromPrimitive + ToPrimitive + Debug + Display + Default + Send + Sync + 'static
{
    /// Converts an `f64` literal into this scalar type.
    #[inline]
    fn lit(x: f64) -> Self {
        Self::from_f64(x).expect("f64 literal representable in scalar type")
    }

    /// Converts a count into this scalar type.
    #[inline]
    fn from_count(n: usize) -> Self {
        Self::from_usize(n).expect("count representable in scalar type")
    }

    /// Total order for finite values; NaN is never admitted past ingestion.
    #[inline]
    fn cmp_finite(&self, other: &Self) -> std::cmp::Ordering {
        self.partial_cmp(other).expect("finite scalar comparison")
    }
}

impl Real for f32 {}
impl Real for f64 {}

/// Neumaier compensated summation.
pub(crate) fn compensated_sum<T: Real>(values: impl IntoIterator<Item = T>) -> T {
    let mut sum = T::zero();
    let mut comp = T::zero();
    for v in values {
        let t = sum + v;
        if sum.abs() >= v.abs() {
            comp = comp + ((sum - t) + v);
        } else {
            comp = comp + ((v - t) + sum);
        }
        sum = t;
    }
    sum + comp
}
