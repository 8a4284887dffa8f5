//! The `construct` subcommand: build or load an embedding and report.

use systolic::{ConstructionReport, NpodReport};

use crate::output::fmt12;

/// Flat CSV projection of a construction report: scalar fields first, then
/// the qualifying cycles, then the intersection matrix as (i, j, count)
/// triples, then the equalization summary.
pub fn construction_csv(report: &ConstructionReport) -> String {
    let mut out = String::from("field,value\n");
    let mut field = |k: &str, v: String| out.push_str(&format!("{k},{v}\n"));
    field("n", opt(report.n));
    field("vertices", report.surface.vertices.to_string());
    field("edges", report.surface.edges.to_string());
    field("faces", report.surface.faces.to_string());
    field("genus", report.surface.genus.to_string());
    field(
        "boundary_components",
        report.surface.boundary_components.to_string(),
    );
    field("short_cycle_count", report.short_cycle_count.to_string());
    field("qualifying_count", report.qualifying_count.to_string());
    field("formula_floor", opt(report.formula_floor));
    field("meets_formula_floor", opt(report.meets_formula_floor));
    field("degree_floor", opt(report.degree_floor));
    field("meets_degree_floor", opt(report.meets_degree_floor));
    field(
        "nontriviality_applicable",
        report.nontriviality_applicable.to_string(),
    );
    field("pairs", report.intersection.pairs.to_string());
    field(
        "pairs_crossing_once",
        report.intersection.pairs_crossing_once.to_string(),
    );
    field("max_entry", report.intersection.max_entry.to_string());
    field(
        "all_entries_at_most_one",
        report.intersection.all_entries_at_most_one.to_string(),
    );
    field("homology_distinct", report.homology_distinct.to_string());
    field(
        "intersection_graph_connected",
        report.intersection_graph_connected.to_string(),
    );
    match &report.equalization {
        Some(trace) => {
            field("equalization_steps", trace.step_count().to_string());
            field("equalization_final_length", fmt12(trace.final_length()));
        }
        None => {
            field("equalization_steps", String::new());
            field("equalization_final_length", String::new());
        }
    }

    out.push_str("\nqualifying_cycle,vertices\n");
    for (i, cycle) in report.qualifying_cycles.iter().enumerate() {
        let verts: Vec<String> = cycle.iter().map(usize::to_string).collect();
        out.push_str(&format!("{i},{}\n", verts.join(" ")));
    }

    out.push_str("\nintersection,i,j,count\n");
    let n = report.matrix.size();
    for i in 0..n {
        for j in (i + 1)..n {
            out.push_str(&format!("intersection,{i},{j},{}\n", report.matrix.get(i, j)));
        }
    }
    out
}

pub fn npod_csv(report: &NpodReport) -> String {
    let mut out = String::from("field,value\n");
    let mut field = |k: &str, v: String| out.push_str(&format!("{k},{v}\n"));
    field("m", report.m.to_string());
    field("half_edges", report.half_edges.to_string());
    field("genus", report.surface.genus.to_string());
    field(
        "boundary_components",
        report.surface.boundary_components.to_string(),
    );
    field("loop_count", report.loop_count.to_string());
    field("all_pairs_cross_once", report.all_pairs_cross_once.to_string());
    field("four_times_genus", report.four_times_genus.to_string());
    field(
        "loops_equal_four_times_genus",
        report.loops_equal_four_times_genus.to_string(),
    );
    out
}

fn opt<T: ToString>(v: Option<T>) -> String {
    v.map(|x| x.to_string()).unwrap_or_default()
}
