//! Plain-text rotation-system format.
//!
//! ```text
//! # comment
//! vertices 2 halfedges 4
//! rot 0: 0 1 2
//! rot 1: 3
//! pair 0 3
//! pair 1 2
//! ```
//!
//! Tokens are whitespace separated, `#` starts a comment, vertex ids are
//! `0..V`. Half-edge ids in a file may be any distinct nonnegative integers;
//! they are normalized to dense ids on read (order preserving). Output is
//! canonical: vertices ascending, rotations phased to start at their
//! smallest half-edge, `pair a b` lines with a < b sorted by a. Writing is
//! therefore stable, and reading back what was written reproduces the
//! system exactly.

use std::collections::BTreeMap;

use super::RotationSystem;
use crate::error::{Error, Result};

/// Serialize in the canonical text form.
pub fn write_rotation_system(rs: &RotationSystem) -> String {
    let mut out = String::new();
    out.push_str(&format!(
        "vertices {} halfedges {}\n",
        rs.vertex_count(),
        rs.half_edge_count()
    ));
    for v in 0..rs.vertex_count() {
        out.push_str(&format!("rot {v}:"));
        for &h in rs.rotation(v) {
            out.push_str(&format!(" {h}"));
        }
        out.push('\n');
    }
    let mut pairs: Vec<(usize, usize)> = (0..rs.half_edge_count())
        .filter(|&h| h < rs.pair(h))
        .map(|h| (h, rs.pair(h)))
        .collect();
    pairs.sort_unstable();
    for (a, b) in pairs {
        out.push_str(&format!("pair {a} {b}\n"));
    }
    out
}

/// Parse the text form and validate the result.
pub fn read_rotation_system(text: &str) -> Result<RotationSystem> {
    let mut header: Option<(usize, usize)> = None;
    let mut rotations_raw: BTreeMap<usize, Vec<u64>> = BTreeMap::new();
    let mut pairs_raw: Vec<(u64, u64)> = Vec::new();

    for (idx, raw_line) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = raw_line.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let fail = |message: String| Error::Parse {
            line: line_no,
            message,
        };
        let tokens: Vec<&str> = line.split_whitespace().collect();
        match tokens[0] {
            "vertices" => {
                if header.is_some() {
                    return Err(fail("duplicate header line".into()));
                }
                if tokens.len() != 4 || tokens[2] != "halfedges" {
                    return Err(fail("expected `vertices <V> halfedges <H>`".into()));
                }
                let v = tokens[1]
                    .parse()
                    .map_err(|_| fail(format!("bad vertex count {:?}", tokens[1])))?;
                let h = tokens[3]
                    .parse()
                    .map_err(|_| fail(format!("bad half-edge count {:?}", tokens[3])))?;
                header = Some((v, h));
            }
            "rot" => {
                let (v_count, _) = header.ok_or_else(|| fail("rot before header".into()))?;
                if tokens.len() < 2 || !tokens[1].ends_with(':') {
                    return Err(fail("expected `rot <v>: h1 h2 ...`".into()));
                }
                let v: usize = tokens[1][..tokens[1].len() - 1]
                    .parse()
                    .map_err(|_| fail(format!("bad vertex id {:?}", tokens[1])))?;
                if v >= v_count {
                    return Err(fail(format!("vertex {v} out of range 0..{v_count}")));
                }
                let mut rot = Vec::with_capacity(tokens.len() - 2);
                for t in &tokens[2..] {
                    rot.push(
                        t.parse()
                            .map_err(|_| fail(format!("bad half-edge id {t:?}")))?,
                    );
                }
                if rotations_raw.insert(v, rot).is_some() {
                    return Err(fail(format!("duplicate rotation line for vertex {v}")));
                }
            }
            "pair" => {
                if header.is_none() {
                    return Err(fail("pair before header".into()));
                }
                if tokens.len() != 3 {
                    return Err(fail("expected `pair <a> <b>`".into()));
                }
                let a = tokens[1]
                    .parse()
                    .map_err(|_| fail(format!("bad half-edge id {:?}", tokens[1])))?;
                let b = tokens[2]
                    .parse()
                    .map_err(|_| fail(format!("bad half-edge id {:?}", tokens[2])))?;
                pairs_raw.push((a, b));
            }
            other => return Err(fail(format!("unknown directive {other:?}"))),
        }
    }

    let (v_count, h_count) = header.ok_or(Error::Parse {
        line: 1,
        message: "missing `vertices <V> halfedges <H>` header".into(),
    })?;

    // normalize arbitrary ids to dense 0..H, preserving numeric order
    let mut ids: Vec<u64> = rotations_raw.values().flatten().copied().collect();
    ids.sort_unstable();
    ids.dedup();
    if ids.len() != h_count {
        return Err(Error::Parse {
            line: 1,
            message: format!(
                "header promises {h_count} half-edges, rotations carry {}",
                ids.len()
            ),
        });
    }
    let dense: BTreeMap<u64, usize> = ids.iter().enumerate().map(|(i, &id)| (id, i)).collect();

    let mut rotations = vec![Vec::new(); v_count];
    for (v, rot) in rotations_raw {
        rotations[v] = rot.iter().map(|id| dense[id]).collect();
    }
    let mut pairs = Vec::with_capacity(pairs_raw.len());
    for (a, b) in pairs_raw {
        let a = *dense.get(&a).ok_or(Error::Parse {
            line: 1,
            message: format!("pair references unknown half-edge {a}"),
        })?;
        let b = *dense.get(&b).ok_or(Error::Parse {
            line: 1,
            message: format!("pair references unknown half-edge {b}"),
        })?;
        pairs.push((a, b));
    }

    RotationSystem::new(rotations, &pairs)
}
