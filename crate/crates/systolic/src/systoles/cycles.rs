//! Short cycles on a rotation system and the qualifying criterion.

use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::ribbon::RotationSystem;

/// A simple closed walk, stored as the sequence of outgoing half-edges and
/// kept in canonical form: the lexicographically least among all rotations
/// of the walk and of its reversal. The combinatorial length is the number
/// of edges traversed.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct GraphCycle {
    halfedges: Vec<usize>,
}

impl GraphCycle {
    /// Validate a closed walk against `rs` and canonicalize it. The walk
    /// must revisit no vertex, and never leave along the half-edge it just
    /// arrived on.
    pub fn new(rs: &RotationSystem, halfedges: Vec<usize>) -> Result<Self> {
        if halfedges.is_empty() {
            return Err(Error::Validation("empty cycle".into()));
        }
        let k = halfedges.len();
        let mut visited = BTreeSet::new();
        for i in 0..k {
            let h = halfedges[i];
            if h >= rs.half_edge_count() {
                return Err(Error::Validation(format!("half-edge {h} out of range")));
            }
            let next = halfedges[(i + 1) % k];
            if rs.vertex_of(next) != rs.vertex_of(rs.pair(h)) {
                return Err(Error::Validation("walk is not closed".into()));
            }
            if next == rs.pair(h) {
                return Err(Error::Validation("walk backtracks".into()));
            }
            if !visited.insert(rs.vertex_of(h)) {
                return Err(Error::Validation("walk revisits a vertex".into()));
            }
        }
        Ok(GraphCycle {
            halfedges: canonical_form(rs, &halfedges),
        })
    }

    pub fn halfedges(&self) -> &[usize] {
        &self.halfedges
    }

    pub fn len(&self) -> usize {
        self.halfedges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.halfedges.is_empty()
    }

    /// Vertices in walk order.
    pub fn vertices(&self, rs: &RotationSystem) -> Vec<usize> {
        self.halfedges.iter().map(|&h| rs.vertex_of(h)).collect()
    }

    /// Per-corner data: (vertex, incoming half-edge, outgoing half-edge).
    /// The incoming half-edge at a corner is the pair of the previous
    /// outgoing one.
    pub fn transitions(&self, rs: &RotationSystem) -> Vec<(usize, usize, usize)> {
        let k = self.halfedges.len();
        (0..k)
            .map(|i| {
                let out = self.halfedges[i];
                let inc = rs.pair(self.halfedges[(i + k - 1) % k]);
                (rs.vertex_of(out), inc, out)
            })
            .collect()
    }

    /// Edges traversed, as canonical keys min(h, pair(h)).
    pub fn edge_keys(&self, rs: &RotationSystem) -> BTreeSet<usize> {
        self.halfedges
            .iter()
            .map(|&h| h.min(rs.pair(h)))
            .collect()
    }

    /// Cheap consistency check that the walk lives on `rs`.
    pub fn belongs_to(&self, rs: &RotationSystem) -> bool {
        let k = self.halfedges.len();
        self.halfedges.iter().all(|&h| h < rs.half_edge_count())
            && (0..k).all(|i| {
                rs.vertex_of(self.halfedges[(i + 1) % k])
                    == rs.vertex_of(rs.pair(self.halfedges[i]))
            })
    }
}

fn canonical_form(rs: &RotationSystem, walk: &[usize]) -> Vec<usize> {
    let k = walk.len();
    let reversed: Vec<usize> = walk.iter().rev().map(|&h| rs.pair(h)).collect();
    let mut best: Option<Vec<usize>> = None;
    for candidate in [walk, reversed.as_slice()] {
        for shift in 0..k {
            let mut rotated = Vec::with_capacity(k);
            rotated.extend_from_slice(&candidate[shift..]);
            rotated.extend_from_slice(&candidate[..shift]);
            if best.as_ref().is_none_or(|b| rotated < *b) {
                best = Some(rotated);
            }
        }
    }
    best.unwrap()
}

/// All simple closed walks of combinatorial length at most `length_bound`,
/// each reported once up to rotation and reversal, in canonical order.
/// A bound below the girth yields an empty list.
pub fn enumerate_short_cycles(rs: &RotationSystem, length_bound: usize) -> Vec<GraphCycle> {
    let mut found: BTreeSet<Vec<usize>> = BTreeSet::new();
    let mut walk: Vec<usize> = Vec::new();
    let mut on_walk = vec![false; rs.vertex_count()];

    // Cycles are rooted at their smallest vertex: extensions only visit
    // larger vertices, so each cycle is generated from one root.
    for root in 0..rs.vertex_count() {
        on_walk[root] = true;
        extend(rs, root, root, length_bound, &mut walk, &mut on_walk, &mut found);
        on_walk[root] = false;
    }

    found
        .into_iter()
        .map(|halfedges| GraphCycle { halfedges })
        .collect()
}

fn extend(
    rs: &RotationSystem,
    root: usize,
    at: usize,
    bound: usize,
    walk: &mut Vec<usize>,
    on_walk: &mut [bool],
    found: &mut BTreeSet<Vec<usize>>,
) {
    if walk.len() >= bound {
        return;
    }
    for &h in rs.rotation(at) {
        if let Some(&last) = walk.last() {
            if h == rs.pair(last) {
                continue;
            }
        }
        let target = rs.vertex_of(rs.pair(h));
        if target == root {
            walk.push(h);
            // wrap-around backtrack: a length-2 walk out and back on one edge
            let closes_cleanly = walk.len() == 1 || walk[0] != rs.pair(h);
            if closes_cleanly {
                found.insert(canonical_form(rs, walk));
            }
            walk.pop();
            continue;
        }
        if target < root || on_walk[target] {
            continue;
        }
        walk.push(h);
        on_walk[target] = true;
        extend(rs, root, target, bound, walk, on_walk, found);
        on_walk[target] = false;
        walk.pop();
    }
}

/// Whether the cycle, at some corner, splits the other half-edges of that
/// vertex into two non-empty cyclic arcs. Corners whose two half-edges sit
/// next to each other in the rotation leave one side empty and do not count.
pub fn is_qualifying(cycle: &GraphCycle, rs: &RotationSystem) -> Result<bool> {
    if !cycle.belongs_to(rs) {
        return Err(Error::Validation(
            "cycle does not belong to this rotation system".into(),
        ));
    }
    Ok(cycle.transitions(rs).iter().any(|&(v, inc, out)| {
        let d = rs.degree(v);
        let gap = (rs.position(out) + d - rs.position(inc)) % d;
        gap != 1 && gap != d - 1
    }))
}

/// Number of unordered half-edge pairs at vertex `v` that split the
/// remaining half-edges into two non-empty arcs. Equals d(d-3)/2 for a
/// vertex of degree d, independent of the rotation.
pub fn separating_pairs_at_vertex(rs: &RotationSystem, v: usize) -> usize {
    let d = rs.degree(v);
    let mut count = 0;
    for i in 0..d {
        for j in (i + 1)..d {
            let gap = j - i;
            if gap != 1 && gap != d - 1 {
                count += 1;
            }
        }
    }
    count
}
