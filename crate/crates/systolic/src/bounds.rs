//! Closed-form bound evaluators.
//!
//! Collar widths, the pairwise-distance radius for systoles, the minimal
//! crossing angle, the intersection-locating radius, the ball-covering
//! quantities F, G, H, the resulting upper bound on the number of systoles,
//! and the genus-only corollary calculators.

use num_rational::Ratio;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::hyptrig::{disk_area, Angle, Length};
use crate::scalar::{lit, Real};

/// Collar half-width around a simple closed geodesic of length `l`:
/// arcsinh(1 / sinh(l/2)).
pub fn collar_width<T: Real>(l: Length<T>) -> Length<T> {
    let half = l.value() / lit::<T>(2.0);
    Length::new(half.sinh().recip().asinh()).expect("collar width is positive")
}

/// Half the guaranteed distance between disjoint systoles of length `l`:
/// arcsinh(1 / (2 sinh(l/4))).
pub fn systolic_radius<T: Real>(l: Length<T>) -> Length<T> {
    let quarter = l.value() / lit::<T>(4.0);
    Length::new((lit::<T>(2.0) * quarter.sinh()).recip().asinh())
        .expect("systolic radius is positive")
}

/// Minimal crossing angle of two systoles of length `l`:
/// arcsin(1 / (2 cosh(l/4))). Defined for l >= 0, with l = 0 giving pi/6.
pub fn min_angle<T: Real>(l: T) -> Result<Angle<T>> {
    if !l.is_finite() || l < T::zero() {
        return Err(Error::Domain(format!(
            "minimal angle needs a nonnegative finite length, got {l}"
        )));
    }
    let quarter = l / lit::<T>(4.0);
    Angle::new((lit::<T>(2.0) * quarter.cosh()).recip().asin())
}

/// Radius within which the intersection point of two crossing systoles of
/// length `l` must lie: arcsinh(2 coth(l/4)).
pub fn intersection_radius<T: Real>(l: Length<T>) -> Length<T> {
    let quarter = l.value() / lit::<T>(4.0);
    let coth = quarter.cosh() / quarter.sinh();
    Length::new((lit::<T>(2.0) * coth).asinh()).expect("intersection radius is positive")
}

/// Query for the bound evaluators: a genus, a systole length, the auxiliary
/// radius R' of the per-ball estimate, and the slack allowed before the
/// area-driven length warning fires.
#[derive(Debug, Clone, Copy)]
pub struct BoundQuery<T> {
    pub genus: u32,
    pub sys_length: Length<T>,
    pub r_prime: Length<T>,
    pub area_slack: T,
}

impl<T: Real> BoundQuery<T> {
    /// The default auxiliary radius is arcsinh(1).
    pub fn new(genus: u32, sys_length: Length<T>) -> Result<Self> {
        if genus < 2 {
            return Err(Error::Domain(format!("genus must be at least 2, got {genus}")));
        }
        Ok(BoundQuery {
            genus,
            sys_length,
            r_prime: Length::new(T::one().asinh()).expect("arcsinh(1) is positive"),
            area_slack: T::zero(),
        })
    }

    pub fn with_r_prime(mut self, r_prime: Length<T>) -> Self {
        self.r_prime = r_prime;
        self
    }

    pub fn with_area_slack(mut self, slack: T) -> Self {
        self.area_slack = slack;
        self
    }

    fn genus_t(&self) -> T {
        T::from(self.genus).expect("genus fits in the scalar type")
    }

    /// The systole of a genus-g hyperbolic surface is at most 2 log g plus
    /// a constant. Queries past `2 log g + slack` are flagged, not rejected.
    pub fn exceeds_area_bound(&self) -> bool {
        self.sys_length.value() > lit::<T>(2.0) * self.genus_t().ln() + self.area_slack
    }

    /// Below 2 arcsinh(1) the collar lemma forces systoles to be disjoint.
    pub fn short_regime(&self) -> bool {
        self.sys_length.value() <= lit::<T>(2.0) * T::one().asinh()
    }
}

/// Upper bound F on the number of radius-r(l) balls needed to cover the
/// surface: Area(S) / Area(D_{r(l)/2}) with Area(S) = 4 pi (g - 1).
pub fn cover_count_bound<T: Real>(q: &BoundQuery<T>) -> T {
    let half_radius = Length::new(systolic_radius(q.sys_length).value() / lit::<T>(2.0))
        .expect("half radius is positive");
    lit::<T>(4.0) * T::PI() * (q.genus_t() - T::one()) / disk_area(half_radius)
}

/// Upper bound G on the number of systoles crossing one radius-r(l) ball:
/// pi sinh(R(l) + R') / (2 arcsinh(sinh(R') sin(theta_l))).
pub fn per_ball_bound<T: Real>(q: &BoundQuery<T>) -> Result<T> {
    per_ball_with_denominator(q, |rp, theta| (rp.sinh() * theta.sin()).asinh())
}

/// Variant of [`per_ball_bound`] whose denominator takes sinh of the angle,
/// 2 arcsinh(sinh(R') sinh(theta_l)). With R' = arcsinh(1) this collapses to
/// 2 theta_l. Both forms are reported so the difference stays visible.
pub fn per_ball_bound_sinh_form<T: Real>(q: &BoundQuery<T>) -> Result<T> {
    per_ball_with_denominator(q, |rp, theta| (rp.sinh() * theta.sinh()).asinh())
}

fn per_ball_with_denominator<T: Real>(
    q: &BoundQuery<T>,
    half_denominator: impl Fn(T, T) -> T,
) -> Result<T> {
    let rp = q.r_prime.value();
    if rp <= T::zero() {
        return Err(Error::Domain("auxiliary radius R' must be positive".into()));
    }
    let big_r = intersection_radius(q.sys_length).value();
    let theta = min_angle(q.sys_length.value())?.value();
    Ok(T::PI() * (big_r + rp).sinh() / (lit::<T>(2.0) * half_denominator(rp, theta)))
}

/// Lower bound H on the number of covering balls each systole crosses:
/// 2 l / r(l).
pub fn balls_per_systole<T: Real>(q: &BoundQuery<T>) -> T {
    lit::<T>(2.0) * q.sys_length.value() / systolic_radius(q.sys_length).value()
}

/// Simplified upper bound 100 (g - 1) e^{l/2} / l, valid in the long regime.
pub fn effective_bound<T: Real>(q: &BoundQuery<T>) -> T {
    let l = q.sys_length.value();
    lit::<T>(100.0) * (q.genus_t() - T::one()) * (l / lit::<T>(2.0)).exp() / l
}

/// Upper bound on the number of systoles of a genus-g surface with systole
/// length `l`: 3g - 3 when l <= 2 arcsinh(1), otherwise the smaller of
/// F G / H and the simplified 100 (g - 1) e^{l/2} / l.
pub fn kissing_bound<T: Real>(q: &BoundQuery<T>) -> Result<T> {
    if q.short_regime() {
        return Ok(lit::<T>(3.0) * (q.genus_t() - T::one()));
    }
    let composite = cover_count_bound(q) * per_ball_bound(q)? / balls_per_systole(q);
    Ok(composite.min(effective_bound(q)))
}

/// Every derived quantity for one (genus, length) query.
#[derive(Debug, Clone, Serialize)]
pub struct BoundReport<T> {
    pub genus: u32,
    pub sys_length: Length<T>,
    pub r_prime: Length<T>,
    pub collar_w: Length<T>,
    pub systolic_r: Length<T>,
    pub theta_min: Angle<T>,
    pub intersection_r: Length<T>,
    pub cover_f: T,
    pub per_ball_g: T,
    pub per_ball_g_sinh_form: T,
    pub balls_per_systole_h: T,
    pub composite_bound: T,
    pub effective_bound: T,
    pub kiss_upper: T,
    pub short_regime: bool,
    pub length_warning: bool,
}

/// Evaluate the full report for a query.
pub fn bound_report<T: Real>(q: &BoundQuery<T>) -> Result<BoundReport<T>> {
    let cover_f = cover_count_bound(q);
    let per_ball_g = per_ball_bound(q)?;
    let balls_per_systole_h = balls_per_systole(q);
    Ok(BoundReport {
        genus: q.genus,
        sys_length: q.sys_length,
        r_prime: q.r_prime,
        collar_w: collar_width(q.sys_length),
        systolic_r: systolic_radius(q.sys_length),
        theta_min: min_angle(q.sys_length.value())?,
        intersection_r: intersection_radius(q.sys_length),
        cover_f,
        per_ball_g,
        per_ball_g_sinh_form: per_ball_bound_sinh_form(q)?,
        balls_per_systole_h,
        composite_bound: cover_f * per_ball_g / balls_per_systole_h,
        effective_bound: effective_bound(q),
        kiss_upper: kissing_bound(q)?,
        short_regime: q.short_regime(),
        length_warning: q.exceeds_area_bound(),
    })
}

/// Genus-only corollary values.
#[derive(Debug, Clone, Copy, Serialize)]
pub struct CorollaryBounds<T> {
    /// 50 g (g - 1) / log g, from substituting l = 2 log g into the main bound.
    pub subquadratic: T,
    /// (4/3) log g + A.
    pub conj_size: T,
    /// B g^{4/3}.
    pub conj_number: T,
    /// g sqrt(48g - 47) + 15 g + sqrt(48g - 47)/3 - 41/3.
    pub strong_lower: T,
}

/// Evaluate the corollary calculators. `size_offset` is the additive constant
/// A of the length conjecture, `count_scale` the multiplicative constant B of
/// the count conjecture; both are asserted to exist but not pinned, so they
/// are explicit parameters (defaults 0 and 1).
pub fn corollary_bounds<T: Real>(g: u32, size_offset: T, count_scale: T) -> Result<CorollaryBounds<T>> {
    if g < 2 {
        return Err(Error::Domain(format!(
            "sub-quadratic bound needs genus at least 2, got {g}"
        )));
    }
    let gt = T::from(g).expect("genus fits in scalar");
    Ok(CorollaryBounds {
        subquadratic: lit::<T>(50.0) * gt * (gt - T::one()) / gt.ln(),
        conj_size: lit::<T>(4.0) / lit::<T>(3.0) * gt.ln() + size_offset,
        conj_number: count_scale * gt.powf(lit::<T>(4.0) / lit::<T>(3.0)),
        strong_lower: strong_lower(g),
    })
}

/// The strong count evaluator as a float, defined for every g >= 1.
pub fn strong_lower<T: Real>(g: u32) -> T {
    let gt = T::from(g).expect("genus fits in scalar");
    let s = (lit::<T>(48.0) * gt - lit::<T>(47.0)).sqrt();
    gt * s + lit::<T>(15.0) * gt + s / lit::<T>(3.0) - lit::<T>(41.0) / lit::<T>(3.0)
}

/// Exact rational value of the strong count evaluator, available whenever
/// 48g - 47 is a perfect square: (3 g s + 45 g + s - 41) / 3.
pub fn strong_lower_exact(g: u64) -> Option<Ratio<i64>> {
    let disc = 48 * g - 47;
    let mut s = (disc as f64).sqrt() as u64;
    while s * s > disc {
        s -= 1;
    }
    while (s + 1) * (s + 1) <= disc {
        s += 1;
    }
    if s * s != disc {
        return None;
    }
    let (g, s) = (g as i64, s as i64);
    Some(Ratio::new(3 * g * s + 45 * g + s - 41, 3))
}
