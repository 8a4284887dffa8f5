//! Hyperbolic trigonometry kernel.
//!
//! Exact closed forms for right triangles, the sine rule, distances between
//! boundary geodesics of a pair of pants, and hyperbolic disks. These are
//! the oracles every derived bound is checked against, so the evaluations
//! are arranged to avoid catastrophic cancellation.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::scalar::{lit, Real};

/// A positive, finite hyperbolic length.
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd, Serialize)]
#[serde(transparent)]
pub struct Length<T>(T);

impl<T: Real> Length<T> {
    /// Largest accepted length. `sinh` overflows shortly above `ln(MAX)`;
    /// inputs past this point are rejected instead of producing infinities.
    pub fn max_value() -> T {
        let cap = lit::<T>(700.0);
        let ln_max = T::max_value().ln();
        if ln_max < cap {
            ln_max
        } else {
            cap
        }
    }

    pub fn new(value: T) -> Result<Self> {
        if !value.is_finite() || value <= T::zero() {
            return Err(Error::Domain(format!(
                "length must be positive and finite, got {value}"
            )));
        }
        if value > Self::max_value() {
            return Err(Error::Range(format!(
                "length {value} exceeds the sinh-safe maximum {}",
                Self::max_value()
            )));
        }
        Ok(Length(value))
    }

    pub fn value(self) -> T {
        self.0
    }
}

/// An angle in radians, strictly between 0 and pi.
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd, Serialize)]
#[serde(transparent)]
pub struct Angle<T>(T);

impl<T: Real> Angle<T> {
    pub fn new(value: T) -> Result<Self> {
        if !value.is_finite() || value <= T::zero() || value >= T::PI() {
            return Err(Error::Domain(format!(
                "angle must lie strictly between 0 and pi, got {value}"
            )));
        }
        Ok(Angle(value))
    }

    pub fn value(self) -> T {
        self.0
    }

    pub fn sin(self) -> T {
        self.0.sin()
    }
}

/// Distance between the boundary geodesics of lengths `la` and `lb` in the
/// hyperbolic pair of pants whose third boundary has length `lg`:
///
/// cosh d = (cosh(lg/2) + cosh(la/2) cosh(lb/2)) / (sinh(la/2) sinh(lb/2)).
///
/// Evaluated through cosh(d) - 1 = (cosh(lg/2) + cosh((la-lb)/2)) / (..),
/// a cancellation-free rearrangement, so the result keeps full relative
/// precision when the boundaries are long and d is tiny.
pub fn pants_adjacent_distance<T: Real>(
    la: Length<T>,
    lb: Length<T>,
    lg: Length<T>,
) -> Result<Length<T>> {
    let two = lit::<T>(2.0);
    let a = la.value() / two;
    let b = lb.value() / two;
    let g = lg.value() / two;
    let u = (g.cosh() + (a - b).cosh()) / (a.sinh() * b.sinh());
    if !u.is_finite() {
        return Err(Error::Range(format!(
            "pair-of-pants distance overflows for boundary lengths {}, {}, {}",
            la.value(),
            lb.value(),
            lg.value()
        )));
    }
    // arccosh(1 + u) without forming 1 + u
    let d = (u + (u * (u + two)).sqrt()).ln_1p();
    Length::new(d)
}

/// Side opposite the angle `theta` in a right hyperbolic triangle with
/// hypotenuse `hyp`: sinh(s) = sin(theta) sinh(hyp).
///
/// `theta` must lie in (0, pi/2].
pub fn right_triangle_opposite<T: Real>(theta: Angle<T>, hyp: Length<T>) -> Result<Length<T>> {
    if theta.value() > T::FRAC_PI_2() {
        return Err(Error::Domain(format!(
            "right-triangle angle must be at most pi/2, got {}",
            theta.value()
        )));
    }
    Length::new((theta.sin() * hyp.value().sinh()).asinh())
}

/// Hyperbolic sine rule transfer: the side `s` opposite `theta_target` in a
/// triangle where `side_opposite` is opposite `theta_at`:
///
/// sinh(s) = sin(theta_at) sinh(side_opposite) / sin(theta_target).
pub fn triangle_sine_transfer<T: Real>(
    theta_at: Angle<T>,
    side_opposite: Length<T>,
    theta_target: Angle<T>,
) -> Result<Length<T>> {
    let s = theta_at.sin() * side_opposite.value().sinh() / theta_target.sin();
    if !s.is_finite() {
        return Err(Error::Range(format!(
            "sine transfer overflows for side {}",
            side_opposite.value()
        )));
    }
    Length::new(s.asinh())
}

/// Area of a hyperbolic disk of radius `rho`: 2 pi (cosh(rho) - 1).
///
/// Computed as 4 pi sinh^2(rho/2), which is the same quantity without the
/// subtraction, exact for small radii.
pub fn disk_area<T: Real>(rho: Length<T>) -> T {
    let half = rho.value() / lit::<T>(2.0);
    lit::<T>(4.0) * T::PI() * half.sinh() * half.sinh()
}

/// Circumference of a hyperbolic disk of radius `rho`: 2 pi sinh(rho).
pub fn disk_circumference<T: Real>(rho: Length<T>) -> T {
    lit::<T>(2.0) * T::PI() * rho.value().sinh()
}
