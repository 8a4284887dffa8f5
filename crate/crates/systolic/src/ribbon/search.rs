//! Randomized search for minimal-genus rotation systems of complete graphs.
//!
//! Exhaustive enumeration is ((n-1)!)^n and hopeless past K_5. A seeded
//! hill climb on the face count (more faces = lower genus) with plateau
//! moves and random restarts finds the minimum quickly for the sizes this
//! crate works with. Every result is verified by face trace before it is
//! returned; running out of budget is an explicit error, never a silently
//! wrong genus.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{ringel_youngs_genus, RotationSystem};
use crate::error::{Error, Result};

/// Mutation budget for one search call.
pub const DEFAULT_SEARCH_BUDGET: u64 = 2_000_000;

const RESTART_STALL: u64 = 20_000;

/// Search for a rotation system of K_n whose traced genus meets the
/// complete-graph minimum. Deterministic for a fixed seed.
pub fn search_complete_graph(n: usize, seed: u64, budget: u64) -> Result<RotationSystem> {
    if n < 4 {
        return Err(Error::Domain(format!(
            "complete-graph search needs n >= 4, got {n}"
        )));
    }
    let target_genus = ringel_youngs_genus(n)?;
    let edges = n * (n - 1) / 2;
    // V - E + F = 2 - 2g
    let target_faces = 2 + edges - n - 2 * target_genus;

    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut spent: u64 = 0;

    while spent < budget {
        // restart from a fresh random rotation
        let mut neighbors: Vec<Vec<usize>> = (0..n)
            .map(|v| (0..n).filter(|&u| u != v).collect())
            .collect();
        for row in &mut neighbors {
            shuffle(row, &mut rng);
        }
        let mut faces = face_count(&neighbors);
        let mut stall = 0u64;

        while spent < budget && stall < RESTART_STALL {
            spent += 1;
            let v = rng.gen_range(0..n);
            let i = rng.gen_range(0..n - 1);
            let j = rng.gen_range(0..n - 1);
            if i == j {
                continue;
            }
            neighbors[v].swap(i, j);
            let after = face_count(&neighbors);
            if after >= faces {
                if after > faces {
                    stall = 0;
                }
                faces = after;
                if faces == target_faces {
                    let rs = RotationSystem::from_neighbor_rotations(&neighbors)?;
                    debug_assert_eq!(rs.summary()?.genus, target_genus);
                    return Ok(rs);
                }
            } else {
                neighbors[v].swap(i, j);
                stall += 1;
            }
        }
    }

    Err(Error::SearchFailed {
        n,
        target: target_genus,
        iterations: budget,
    })
}

fn shuffle<T>(slice: &mut [T], rng: &mut ChaCha8Rng) {
    for i in (1..slice.len()).rev() {
        let j = rng.gen_range(0..=i);
        slice.swap(i, j);
    }
}

/// Face count of the complete-graph rotation given by neighbor lists,
/// without building a full RotationSystem.
fn face_count(neighbors: &[Vec<usize>]) -> usize {
    let n = neighbors.len();
    // dart (v, u) indexed as v * n + u; position lookup per vertex
    let mut pos = vec![usize::MAX; n * n];
    for (v, row) in neighbors.iter().enumerate() {
        for (i, &u) in row.iter().enumerate() {
            pos[v * n + u] = i;
        }
    }
    let deg = n - 1;
    let mut seen = vec![false; n * n];
    let mut faces = 0;
    for v in 0..n {
        for u in 0..n {
            if u == v || seen[v * n + u] {
                continue;
            }
            faces += 1;
            let (mut a, mut b) = (v, u);
            while !seen[a * n + b] {
                seen[a * n + b] = true;
                // next dart: successor of the reversed dart in b's rotation
                let p = pos[b * n + a];
                let next = neighbors[b][(p + 1) % deg];
                a = b;
                b = next;
            }
        }
    }
    faces
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn search_finds_planar_k4() {
        let rs = search_complete_graph(4, 0, 100_000).unwrap();
        assert_eq!(rs.summary().unwrap().genus, 0);
    }

    #[test]
    fn search_finds_toroidal_k5_and_k6() {
        for n in [5, 6] {
            let rs = search_complete_graph(n, 0, 500_000).unwrap();
            assert_eq!(rs.summary().unwrap().genus, 1, "K_{n}");
        }
    }

    #[test]
    fn search_is_deterministic_per_seed() {
        let a = search_complete_graph(5, 42, 500_000).unwrap();
        let b = search_complete_graph(5, 42, 500_000).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn exhausted_budget_is_an_explicit_error() {
        match search_complete_graph(7, 0, 3) {
            Err(Error::SearchFailed { n, target, .. }) => {
                assert_eq!(n, 7);
                assert_eq!(target, 1);
            }
            other => panic!("expected SearchFailed, got {other:?}"),
        }
    }

    #[test]
    fn face_count_matches_full_trace() {
        let neighbors: Vec<Vec<usize>> = (0..7)
            .map(|i| [1, 3, 2, 6, 4, 5].iter().map(|d| (i + d) % 7).collect())
            .collect();
        let rs = RotationSystem::from_neighbor_rotations(&neighbors).unwrap();
        assert_eq!(face_count(&neighbors), rs.trace_faces().len());
    }
}
