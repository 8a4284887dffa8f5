//! Grid sweeps over the analytic identities and inequalities.

use systolic::{
    bound_report, collar_width, cover_count_bound, disk_area, intersection_radius, min_angle,
    pants_adjacent_distance, systolic_radius, triangle_sine_transfer, Angle, BoundQuery, Length,
};

fn len(x: f64) -> Length<f64> {
    Length::new(x).unwrap()
}

/// 50 log-spaced points over [0.1, 30].
fn log_grid() -> Vec<f64> {
    (0..50)
        .map(|i| 0.1 * (30.0f64 / 0.1).powf(i as f64 / 49.0))
        .collect()
}

#[test]
fn systolic_collar_identity_to_1e12() {
    // cosh(2 r(l)) (cosh(l/2) - 1) = cosh(l/2), with 2 r(l) evaluated
    // through the pair-of-pants route
    let mut worst: f64 = 0.0;
    for l in log_grid() {
        let d = pants_adjacent_distance(len(l), len(l), len(l)).unwrap();
        let c = (l / 2.0).cosh();
        let rel = (d.value().cosh() * (c - 1.0) - c).abs() / c;
        worst = worst.max(rel);
    }
    assert!(worst <= 1e-12, "worst relative error {worst}");
}

#[test]
fn pants_distance_doubles_the_systolic_radius_to_1e12() {
    let mut worst: f64 = 0.0;
    for l in log_grid() {
        let d = pants_adjacent_distance(len(l), len(l), len(l)).unwrap();
        let r = systolic_radius(len(l));
        let rel = ((d.value() - 2.0 * r.value()) / d.value()).abs();
        worst = worst.max(rel);
    }
    assert!(worst <= 1e-12, "worst relative error {worst}");
}

#[test]
fn double_angle_identity_to_1e14() {
    // sinh(l/4) / sinh(l/2) = 1 / (2 cosh(l/4))
    let mut worst: f64 = 0.0;
    for l in log_grid() {
        let lhs = (l / 4.0).sinh() / (l / 2.0).sinh();
        let rhs = 1.0 / (2.0 * (l / 4.0).cosh());
        worst = worst.max(((lhs - rhs) / rhs).abs());
    }
    assert!(worst <= 1e-14, "worst relative error {worst}");
}

#[test]
fn min_angle_definition_to_1e14() {
    let mut worst: f64 = 0.0;
    for l in log_grid() {
        let theta = min_angle(l).unwrap();
        worst = worst.max((theta.sin() * 2.0 * (l / 4.0).cosh() - 1.0).abs());
    }
    assert!(worst <= 1e-14, "worst relative error {worst}");
}

#[test]
fn thresholds_strictly_decrease_along_the_grid() {
    let grid = log_grid();
    for w in grid.windows(2) {
        assert!(collar_width(len(w[1])) < collar_width(len(w[0])));
        assert!(systolic_radius(len(w[1])) < systolic_radius(len(w[0])));
        assert!(intersection_radius(len(w[1])) < intersection_radius(len(w[0])));
        assert!(min_angle(w[1]).unwrap() < min_angle(w[0]).unwrap());
    }
}

#[test]
fn cover_bound_and_area_minorant_hold_in_the_long_regime() {
    let lo = 2.0 * 1.0f64.asinh();
    for g in 2..=100u32 {
        for i in 0..200 {
            let l = lo + (30.0 - lo) * i as f64 / 199.0;
            let q = BoundQuery::new(g, len(l)).unwrap();
            let f = cover_count_bound(&q);
            assert!(
                f < 16.0 * (g as f64 - 1.0) * (l / 2.0).exp(),
                "cover bound failed at g = {g}, l = {l}"
            );
        }
    }
    for i in 0..200 {
        let l = lo + (30.0 - lo) * i as f64 / 199.0;
        let rho = len(systolic_radius(len(l)).value() / 2.0);
        assert!(
            disk_area(rho) > std::f64::consts::FRAC_PI_4 * (-l / 2.0).exp(),
            "area minorant failed at l = {l}"
        );
    }
}

#[test]
fn composite_bound_comparison_has_a_crossover_near_three() {
    // The product F G / H sits above the simplified 100 (g-1) e^{l/2}/l
    // bound on [2 arcsinh 1, ~2.96) and below it from l = 3 on. The
    // comparison is independent of genus because every factor of g - 1
    // cancels.
    let lo = 2.0 * 1.0f64.asinh();
    for g in [2u32, 10, 100] {
        let report = |l: f64| bound_report(&BoundQuery::new(g, len(l)).unwrap()).unwrap();
        let at_boundary = report(lo);
        assert!(at_boundary.composite_bound > at_boundary.effective_bound);
        let at_2_9 = report(2.9);
        assert!(at_2_9.composite_bound > at_2_9.effective_bound);
        for i in 0..=100 {
            let l = 3.0 + (30.0 - 3.0) * i as f64 / 100.0;
            let r = report(l);
            assert!(
                r.composite_bound <= r.effective_bound,
                "expected the composite product below the simplified bound at g = {g}, l = {l}"
            );
        }
    }
}

#[test]
fn intersection_point_stays_within_the_locating_radius() {
    // Transferring the systolic radius through the sine rule at the worst
    // angle theta_l / 2 bounds the distance from a disk center to the
    // forced intersection point; the bound stays under R(l).
    for l in [2.0, 4.0, 8.0, 16.0] {
        let r = systolic_radius(len(l));
        let theta = min_angle(l).unwrap();
        let half_theta = Angle::new(theta.value() / 2.0).unwrap();
        let right = Angle::new(std::f64::consts::FRAC_PI_2).unwrap();
        let reach = triangle_sine_transfer(right, r, half_theta).unwrap();
        assert!(
            reach.value() < intersection_radius(len(l)).value(),
            "chain bound failed at l = {l}"
        );
    }
    // frozen value at l = 4
    let reach = triangle_sine_transfer(
        Angle::new(std::f64::consts::FRAC_PI_2).unwrap(),
        systolic_radius(len(4.0)),
        Angle::new(min_angle(4.0).unwrap().value() / 2.0).unwrap(),
    )
    .unwrap();
    assert!(((reach.value() - 1.6802942136295) / 1.6802942136295).abs() < 5e-14);
}

#[test]
fn kiss_upper_is_the_piecewise_minimum() {
    for g in [2u32, 5, 20] {
        for l in [0.3, 1.0, 1.7, 2.5, 4.0, 10.0] {
            let r = bound_report(&BoundQuery::new(g, len(l)).unwrap()).unwrap();
            if l <= 2.0 * 1.0f64.asinh() {
                assert!(r.short_regime);
                assert_eq!(r.kiss_upper, 3.0 * (g as f64 - 1.0));
            } else {
                assert!(!r.short_regime);
                assert_eq!(r.kiss_upper, r.composite_bound.min(r.effective_bound));
            }
        }
    }
}
