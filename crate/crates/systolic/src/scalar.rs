//! Scalar abstraction for the trigonometric kernel.

use core::fmt::{Debug, Display};

use num_traits::{Float, FloatConst};

/// Floating-point scalar the closed-form kernel is generic over: f32 or f64.
///
/// Everything needed comes from `num_traits`: elementary functions from
/// [`Float`], mathematical constants from [`FloatConst`].
pub trait Real: Float + FloatConst + Debug + Display + 'static {}

impl<T> Real for T where T: Float + FloatConst + Debug + Display + 'static {}

/// Cast an `f64` literal into the working scalar type.
pub(crate) fn lit<T: Real>(x: f64) -> T {
    T::from(x).expect("literal must be representable in the scalar type")
}
