//! Crossing numbers of cycles carried by a ribbon surface.
//!
//! Each cycle runs through the thickened graph: through a strip for every
//! edge it uses and through the vertex disk at every corner. Two cycles in
//! minimal position cross only inside vertex disks, where a crossing is
//! forced exactly when their corner chords interleave around the disk
//! boundary. Cycles sharing an edge are perturbed to disjoint parallel
//! strands inside the strip; which strand runs on which side is a binary
//! choice per shared edge whose two ends see opposite orders (the strip is
//! untwisted), and the minimum over these choices is the crossing number.

use std::collections::BTreeMap;

use serde::Serialize;

use super::cycles::GraphCycle;
use crate::error::{Error, Result};
use crate::ribbon::RotationSystem;

/// Position on a vertex-disk boundary: rotation slot of the half-edge arc,
/// then the strand's transversal slot within the arc.
type DiskPoint = (usize, u8);

/// Minimal transversal crossing number of the curves carried by two cycles.
/// Equal cycles give 0 by convention (distinct parallel copies).
pub fn geometric_intersection_number(
    a: &GraphCycle,
    b: &GraphCycle,
    rs: &RotationSystem,
) -> Result<u32> {
    if !a.belongs_to(rs) || !b.belongs_to(rs) {
        return Err(Error::Validation(
            "cycle does not belong to this rotation system".into(),
        ));
    }
    if a == b {
        return Ok(0);
    }

    let edges_a = a.edge_keys(rs);
    let edges_b = b.edge_keys(rs);
    let shared: Vec<usize> = edges_a.intersection(&edges_b).copied().collect();
    if shared.len() > 16 {
        return Err(Error::Unsupported(format!(
            "{} shared edges exceed the side-assignment search limit",
            shared.len()
        )));
    }

    let mut best = u32::MAX;
    for mask in 0u32..(1 << shared.len()) {
        // side of the strip each curve's strand takes, per shared half-edge
        let mut side: BTreeMap<usize, u8> = BTreeMap::new();
        for (bit, &key) in shared.iter().enumerate() {
            let flip = ((mask >> bit) & 1) as u8;
            side.insert(key, flip);
            side.insert(rs.pair(key), 1 - flip);
        }

        let endpoint = |curve: usize, h: usize| -> DiskPoint {
            let slot = match side.get(&h) {
                Some(&s) => {
                    if curve == 0 {
                        s
                    } else {
                        1 - s
                    }
                }
                None => 0,
            };
            (rs.position(h), slot)
        };

        // chords through each vertex disk, keyed by vertex
        let mut strands: BTreeMap<usize, Vec<(usize, DiskPoint, DiskPoint)>> = BTreeMap::new();
        for (curve, cycle) in [a, b].into_iter().enumerate() {
            for (v, inc, out) in cycle.transitions(rs) {
                strands
                    .entry(v)
                    .or_default()
                    .push((curve, endpoint(curve, inc), endpoint(curve, out)));
            }
        }

        let mut total = 0u32;
        for chords in strands.values() {
            for (i, &(ci, p1, q1)) in chords.iter().enumerate() {
                for &(cj, p2, q2) in &chords[i + 1..] {
                    if ci == cj {
                        continue;
                    }
                    let (lo, hi) = if p1 < q1 { (p1, q1) } else { (q1, p1) };
                    let inside1 = lo < p2 && p2 < hi;
                    let inside2 = lo < q2 && q2 < hi;
                    if inside1 != inside2 {
                        total += 1;
                    }
                }
            }
        }
        best = best.min(total);
    }
    Ok(best)
}

/// Symmetric matrix of pairwise crossing numbers with zero diagonal.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct IntersectionMatrix {
    entries: Vec<Vec<u32>>,
}

impl IntersectionMatrix {
    /// Wrap a precomputed matrix, validating shape and symmetry.
    pub fn from_entries(entries: Vec<Vec<u32>>) -> Result<Self> {
        let n = entries.len();
        for (i, row) in entries.iter().enumerate() {
            if row.len() != n {
                return Err(Error::Validation(format!(
                    "row {i} has length {}, expected {n}",
                    row.len()
                )));
            }
            if row[i] != 0 {
                return Err(Error::Validation(format!("nonzero diagonal at {i}")));
            }
            for j in 0..n {
                if entries[i][j] != entries[j][i] {
                    return Err(Error::Validation(format!(
                        "asymmetric entries at ({i}, {j})"
                    )));
                }
            }
        }
        Ok(IntersectionMatrix { entries })
    }

    /// Pairwise crossing numbers of the given cycles.
    pub fn compute(cycles: &[GraphCycle], rs: &RotationSystem) -> Result<Self> {
        let n = cycles.len();
        let mut entries = vec![vec![0u32; n]; n];
        for i in 0..n {
            for j in (i + 1)..n {
                let x = geometric_intersection_number(&cycles[i], &cycles[j], rs)?;
                entries[i][j] = x;
                entries[j][i] = x;
            }
        }
        Ok(IntersectionMatrix { entries })
    }

    pub fn size(&self) -> usize {
        self.entries.len()
    }

    pub fn get(&self, i: usize, j: usize) -> u32 {
        self.entries[i][j]
    }

    pub fn entries(&self) -> &[Vec<u32>] {
        &self.entries
    }

    pub fn mod2_rows(&self) -> Vec<Vec<u8>> {
        self.entries
            .iter()
            .map(|row| row.iter().map(|&x| (x % 2) as u8).collect())
            .collect()
    }

    /// Whether all mod-2 rows are pairwise distinct. Distinct rows certify
    /// pairwise distinct homology classes.
    pub fn mod2_rows_distinct(&self) -> bool {
        let rows = self.mod2_rows();
        let unique: std::collections::BTreeSet<_> = rows.iter().collect();
        unique.len() == rows.len()
    }

    pub fn max_entry(&self) -> u32 {
        self.entries
            .iter()
            .flat_map(|row| row.iter().copied())
            .max()
            .unwrap_or(0)
    }
}

/// Mod-2 intersection data plus the row-distinctness certificate.
pub fn mod2_matrix_and_distinctness(
    cycles: &[GraphCycle],
    rs: &RotationSystem,
) -> Result<(IntersectionMatrix, bool)> {
    let matrix = IntersectionMatrix::compute(cycles, rs)?;
    let distinct = matrix.mod2_rows_distinct();
    Ok((matrix, distinct))
}

/// Connectivity of the graph whose edges are cycle pairs crossing exactly
/// once. Empty and singleton sets count as connected.
pub fn intersection_graph_connected(matrix: &IntersectionMatrix) -> bool {
    let n = matrix.size();
    if n <= 1 {
        return true;
    }
    let mut seen = vec![false; n];
    let mut stack = vec![0usize];
    seen[0] = true;
    let mut count = 1;
    while let Some(i) = stack.pop() {
        for j in 0..n {
            if !seen[j] && matrix.get(i, j) == 1 {
                seen[j] = true;
                count += 1;
                stack.push(j);
            }
        }
    }
    count == n
}
