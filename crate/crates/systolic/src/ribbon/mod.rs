//! Combinatorial embedded surfaces.
//!
//! A rotation system is a graph together with a cyclic order of half-edges
//! at each vertex and a fixed-point-free pairing involution matching the two
//! halves of every edge. Tracing the orbits of "pair, then rotation
//! successor" yields the faces of the induced closed orientable surface;
//! the same data read as a ribbon neighborhood of the graph gives a bordered
//! surface whose boundary components are those faces.

mod catalog;
mod format;
mod search;

pub use catalog::{complete_graph_embedding, complete_graph_embedding_with};
pub use format::{read_rotation_system, write_rotation_system};
pub use search::{search_complete_graph, DEFAULT_SEARCH_BUDGET};

use serde::Serialize;

use crate::error::{Error, Result};

/// An orientable combinatorial map: cyclic half-edge order per vertex plus
/// the pairing involution. Half-edge ids are dense, `0..2E`. Rotations are
/// stored in canonical phase (each cyclic list starts at its smallest id),
/// which pins a unique representative per map.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RotationSystem {
    rotations: Vec<Vec<usize>>,
    pairing: Vec<usize>,
    vertex_of: Vec<usize>,
    position: Vec<usize>,
    successor: Vec<usize>,
}

impl RotationSystem {
    /// Build and validate from per-vertex rotations (dense half-edge ids)
    /// and the set of edge pairs.
    pub fn new(rotations: Vec<Vec<usize>>, pairs: &[(usize, usize)]) -> Result<Self> {
        let half_edges: usize = rotations.iter().map(Vec::len).sum();
        if half_edges == 0 {
            return Err(Error::Validation("no half-edges".into()));
        }
        if !half_edges.is_multiple_of(2) {
            return Err(Error::Validation("odd number of half-edges".into()));
        }
        if pairs.len() != half_edges / 2 {
            return Err(Error::Validation(format!(
                "{} half-edges need {} pairs, got {}",
                half_edges,
                half_edges / 2,
                pairs.len()
            )));
        }

        let mut seen = vec![false; half_edges];
        for rot in &rotations {
            for &h in rot {
                if h >= half_edges {
                    return Err(Error::Validation(format!(
                        "half-edge id {h} out of range 0..{half_edges}"
                    )));
                }
                if seen[h] {
                    return Err(Error::Validation(format!(
                        "half-edge {h} appears in more than one rotation slot"
                    )));
                }
                seen[h] = true;
            }
        }

        let mut pairing = vec![usize::MAX; half_edges];
        for &(a, b) in pairs {
            if a >= half_edges || b >= half_edges {
                return Err(Error::Validation(format!("pair ({a}, {b}) out of range")));
            }
            if a == b {
                return Err(Error::Validation(format!(
                    "pairing must be fixed-point-free, found ({a}, {a})"
                )));
            }
            if pairing[a] != usize::MAX || pairing[b] != usize::MAX {
                return Err(Error::Validation(format!(
                    "half-edge in pair ({a}, {b}) is already paired"
                )));
            }
            pairing[a] = b;
            pairing[b] = a;
        }
        debug_assert!(pairing.iter().all(|&p| p != usize::MAX));

        let mut rs = RotationSystem {
            rotations,
            pairing,
            vertex_of: Vec::new(),
            position: Vec::new(),
            successor: Vec::new(),
        };
        rs.canonicalize_and_index();
        Ok(rs)
    }

    /// Build from per-vertex neighbor rotations of a simple graph. Half-edge
    /// ids are assigned in reading order: vertex by vertex, slot by slot.
    pub fn from_neighbor_rotations(neighbors: &[Vec<usize>]) -> Result<Self> {
        let n = neighbors.len();
        let mut slot_id = std::collections::BTreeMap::new();
        let mut rotations = Vec::with_capacity(n);
        let mut counter = 0usize;
        for (v, nbrs) in neighbors.iter().enumerate() {
            let mut rot = Vec::with_capacity(nbrs.len());
            for &u in nbrs {
                if u == v {
                    return Err(Error::Validation(format!("loop at vertex {v}")));
                }
                if u >= n {
                    return Err(Error::Validation(format!("neighbor {u} out of range")));
                }
                if slot_id.insert((v, u), counter).is_some() {
                    return Err(Error::Validation(format!(
                        "duplicate edge ({v}, {u}) in neighbor rotation"
                    )));
                }
                rot.push(counter);
                counter += 1;
            }
            rotations.push(rot);
        }
        let mut pairs = Vec::with_capacity(counter / 2);
        for (&(v, u), &h) in &slot_id {
            let partner = *slot_id.get(&(u, v)).ok_or_else(|| {
                Error::Validation(format!("edge ({v}, {u}) has no reverse slot at {u}"))
            })?;
            if h < partner {
                pairs.push((h, partner));
            }
        }
        RotationSystem::new(rotations, &pairs)
    }

    /// Single vertex with `4m` half-edges in cyclic order, opposite pairing
    /// `i <-> i + 2m`. Traces to a genus-m surface with one boundary circle.
    pub fn npod(m: usize) -> Result<Self> {
        if m < 1 {
            return Err(Error::Domain("an n-pod surface needs m >= 1".into()));
        }
        let n = 4 * m;
        let rotations = vec![(0..n).collect::<Vec<_>>()];
        let pairs: Vec<(usize, usize)> = (0..2 * m).map(|h| (h, h + 2 * m)).collect();
        RotationSystem::new(rotations, &pairs)
    }

    fn canonicalize_and_index(&mut self) {
        for rot in &mut self.rotations {
            if rot.is_empty() {
                continue;
            }
            let min_pos = rot
                .iter()
                .enumerate()
                .min_by_key(|&(_, &h)| h)
                .map(|(i, _)| i)
                .unwrap();
            rot.rotate_left(min_pos);
        }
        let nh = self.pairing.len();
        self.vertex_of = vec![0; nh];
        self.position = vec![0; nh];
        self.successor = vec![0; nh];
        for (v, rot) in self.rotations.iter().enumerate() {
            for (i, &h) in rot.iter().enumerate() {
                self.vertex_of[h] = v;
                self.position[h] = i;
                self.successor[h] = rot[(i + 1) % rot.len()];
            }
        }
    }

    pub fn vertex_count(&self) -> usize {
        self.rotations.len()
    }

    pub fn half_edge_count(&self) -> usize {
        self.pairing.len()
    }

    pub fn edge_count(&self) -> usize {
        self.pairing.len() / 2
    }

    pub fn pair(&self, h: usize) -> usize {
        self.pairing[h]
    }

    pub fn vertex_of(&self, h: usize) -> usize {
        self.vertex_of[h]
    }

    /// Index of `h` within its vertex rotation.
    pub fn position(&self, h: usize) -> usize {
        self.position[h]
    }

    pub fn rotation(&self, v: usize) -> &[usize] {
        &self.rotations[v]
    }

    pub fn rotation_successor(&self, h: usize) -> usize {
        self.successor[h]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.rotations[v].len()
    }

    /// Whether the underlying graph is connected.
    pub fn is_connected(&self) -> bool {
        if self.vertex_count() <= 1 {
            return true;
        }
        let mut seen = vec![false; self.vertex_count()];
        let mut stack = vec![0usize];
        seen[0] = true;
        let mut count = 1;
        while let Some(v) = stack.pop() {
            for &h in &self.rotations[v] {
                let w = self.vertex_of[self.pairing[h]];
                if !seen[w] {
                    seen[w] = true;
                    count += 1;
                    stack.push(w);
                }
            }
        }
        count == self.vertex_count()
    }

    /// Face walks of the induced closed surface: orbits of the next-operator
    /// h -> rotation_successor(pair(h)). Each half-edge lies on exactly one
    /// walk. Walks start at their smallest half-edge and are listed in order
    /// of that id.
    pub fn trace_faces(&self) -> Vec<Vec<usize>> {
        let nh = self.half_edge_count();
        let mut seen = vec![false; nh];
        let mut faces = Vec::new();
        for start in 0..nh {
            if seen[start] {
                continue;
            }
            let mut walk = Vec::new();
            let mut h = start;
            while !seen[h] {
                seen[h] = true;
                walk.push(h);
                h = self.successor[self.pairing[h]];
            }
            faces.push(walk);
        }
        faces
    }

    /// Euler bookkeeping for the traced surface. Fails on disconnected
    /// graphs, where a single genus is not defined.
    pub fn summary(&self) -> Result<SurfaceSummary> {
        if !self.is_connected() {
            return Err(Error::Disconnected);
        }
        let v = self.vertex_count() as i64;
        let e = self.edge_count() as i64;
        let f = self.trace_faces().len() as i64;
        let chi = v - e + f;
        if (2 - chi) % 2 != 0 || chi > 2 {
            return Err(Error::Validation(format!(
                "inconsistent Euler characteristic {chi}"
            )));
        }
        Ok(SurfaceSummary {
            vertices: v as usize,
            edges: e as usize,
            faces: f as usize,
            euler_characteristic: chi,
            genus: ((2 - chi) / 2) as usize,
            boundary_components: f as usize,
        })
    }
}

/// Vertex, edge and face counts with the derived genus. For the closed
/// reading V - E + F = 2 - 2g; for the bordered ribbon-neighborhood reading
/// the same g satisfies V - E = 2 - 2g - b with b = F boundary circles.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct SurfaceSummary {
    pub vertices: usize,
    pub edges: usize,
    pub faces: usize,
    pub euler_characteristic: i64,
    pub genus: usize,
    pub boundary_components: usize,
}

/// Minimal genus of a surface embedding the complete graph on `n` vertices:
/// ceil((n-3)(n-4)/12) for n >= 3.
pub fn ringel_youngs_genus(n: usize) -> Result<usize> {
    if n < 3 {
        return Err(Error::Domain(format!(
            "complete-graph genus formula needs n >= 3, got {n}"
        )));
    }
    if n < 5 {
        return Ok(0);
    }
    Ok(((n - 3) * (n - 4)).div_ceil(12))
}
