//! Short cycles, qualifying classification, crossing data, and the
//! length-equalization model.

mod cycles;
mod equalize;
mod intersect;
mod report;

pub use cycles::{enumerate_short_cycles, is_qualifying, separating_pairs_at_vertex, GraphCycle};
pub use equalize::{equalize_lengths, EqualizationStep, EqualizationTrace};
pub use intersect::{
    geometric_intersection_number, intersection_graph_connected, mod2_matrix_and_distinctness,
    IntersectionMatrix,
};
pub use report::{
    complete_graph_order, count_qualifying, degree_floor, formula_floor, npod_systole_report,
    rotation_report, ConstructionReport, IntersectionSummary, NpodReport, QualifyingCount,
    SHORT_CYCLE_BOUND,
};
