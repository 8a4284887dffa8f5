//! Systole-count bounds for hyperbolic surfaces and combinatorial surface
//! constructions.
//!
//! The crate has two halves. The analytic half ([`hyptrig`], [`bounds`])
//! evaluates the closed forms controlling how many systoles a hyperbolic
//! surface can carry: collar widths, minimal crossing angles, ball-covering
//! counts, and the resulting genus-and-length upper bound. The kernel is
//! generic over the floating-point scalar via [`scalar::Real`]; `f64`
//! aliases live at the crate root.
//!
//! The combinatorial half ([`ribbon`], [`systoles`]) builds surfaces out of
//! complete-graph rotation systems, enumerates their short cycles, decides
//! which ones stay essential on the surface, computes pairwise crossing
//! numbers in the ribbon neighborhood, and simulates the grafting process
//! that equalizes all candidate lengths.

pub mod bounds;
pub mod error;
pub mod hyptrig;
pub mod ribbon;
pub mod scalar;
pub mod systoles;

pub use error::{Error, Result};
pub use scalar::Real;

pub use bounds::{
    balls_per_systole, bound_report, collar_width, corollary_bounds, cover_count_bound,
    effective_bound, intersection_radius, kissing_bound, min_angle, per_ball_bound,
    per_ball_bound_sinh_form, strong_lower, strong_lower_exact, systolic_radius, BoundQuery,
    BoundReport, CorollaryBounds,
};
pub use hyptrig::{
    disk_area, disk_circumference, pants_adjacent_distance, right_triangle_opposite,
    triangle_sine_transfer, Angle, Length,
};
pub use ribbon::{
    complete_graph_embedding, complete_graph_embedding_with, read_rotation_system,
    ringel_youngs_genus, search_complete_graph, write_rotation_system, RotationSystem,
    SurfaceSummary,
};
pub use systoles::{
    count_qualifying, enumerate_short_cycles, equalize_lengths, geometric_intersection_number,
    intersection_graph_connected, is_qualifying, mod2_matrix_and_distinctness,
    npod_systole_report, rotation_report, ConstructionReport, EqualizationTrace, GraphCycle,
    IntersectionMatrix, NpodReport,
};

/// Double-precision aliases for the scalar-generic kernel types.
pub type Length64 = hyptrig::Length<f64>;
pub type Angle64 = hyptrig::Angle<f64>;
pub type BoundQuery64 = bounds::BoundQuery<f64>;
pub type BoundReport64 = bounds::BoundReport<f64>;
pub type CorollaryBounds64 = bounds::CorollaryBounds<f64>;
pub type EqualizationTrace64 = systoles::EqualizationTrace<f64>;
