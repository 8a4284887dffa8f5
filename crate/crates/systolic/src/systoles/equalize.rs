//! Discrete grafting model for equalizing cycle lengths.
//!
//! Inserting a flat cylinder of width w along the neighborhood boundary of
//! the current longest curves lengthens every class that crosses them at
//! rate 2 per unit width (a crossing curve passes the neighborhood boundary
//! at least twice) and leaves the longest curves themselves untouched. The
//! model iterates with the minimal width that lifts at least one more curve
//! to the common maximum, so each step grows the maximal set and the whole
//! process ends in at most N - 1 steps.

use serde::Serialize;

use super::intersect::{intersection_graph_connected, IntersectionMatrix};
use crate::error::{Error, Result};
use crate::scalar::{lit, Real};

/// One grafting step: the frozen maximal set, the applied width, and the
/// lengths after the step.
#[derive(Debug, Clone, Serialize)]
pub struct EqualizationStep<T> {
    pub max_set: Vec<usize>,
    pub width: T,
    pub lengths: Vec<T>,
}

/// Full record of an equalization run.
#[derive(Debug, Clone, Serialize)]
pub struct EqualizationTrace<T> {
    pub epsilon: T,
    pub initial: Vec<T>,
    pub steps: Vec<EqualizationStep<T>>,
    pub final_lengths: Vec<T>,
}

impl<T: Real> EqualizationTrace<T> {
    pub fn step_count(&self) -> usize {
        self.steps.len()
    }

    pub fn final_length(&self) -> T {
        self.final_lengths[0]
    }
}

/// Run the grafting model. Initial lengths must lie in [3 - 6 eps, 3] with
/// 0 < eps < 1/6, and the crossing-once graph of `matrix` must be connected;
/// otherwise curves out of reach of the maximal set could never be lifted.
pub fn equalize_lengths<T: Real>(
    initial: &[T],
    matrix: &IntersectionMatrix,
    epsilon: T,
) -> Result<EqualizationTrace<T>> {
    let n = initial.len();
    if n == 0 {
        return Err(Error::Domain("no lengths to equalize".into()));
    }
    if matrix.size() != n {
        return Err(Error::Domain(format!(
            "matrix size {} does not match {} lengths",
            matrix.size(),
            n
        )));
    }
    let six = lit::<T>(6.0);
    if epsilon <= T::zero() || epsilon >= T::one() / six {
        return Err(Error::Domain(format!(
            "epsilon must lie in (0, 1/6), got {epsilon}"
        )));
    }
    let three = lit::<T>(3.0);
    let low = three - six * epsilon;
    for (i, &l) in initial.iter().enumerate() {
        if !(l >= low && l <= three) {
            return Err(Error::Domain(format!(
                "length {l} at index {i} lies outside [{low}, 3]"
            )));
        }
    }
    if !intersection_graph_connected(matrix) {
        return Err(Error::EqualizationDisconnected);
    }

    let mut lengths = initial.to_vec();
    let mut steps = Vec::new();
    let target = lengths.iter().copied().fold(lengths[0], T::max);

    while steps.len() < n {
        let max_set: Vec<usize> = (0..n).filter(|&i| lengths[i] == target).collect();
        if max_set.len() == n {
            break;
        }
        // curves below the maximum that cross a maximal curve exactly once
        let lifted: Vec<usize> = (0..n)
            .filter(|&j| lengths[j] < target)
            .filter(|&j| max_set.iter().any(|&i| matrix.get(i, j) == 1))
            .collect();
        if lifted.is_empty() {
            // unreachable when the graph is connected
            return Err(Error::EqualizationDisconnected);
        }
        let closest_gap = lifted
            .iter()
            .map(|&j| target - lengths[j])
            .fold(T::infinity(), T::min);
        let width = closest_gap / lit::<T>(2.0);
        for &j in &lifted {
            let grown = lengths[j] + lit::<T>(2.0) * width;
            // the closest curve lands exactly on the target, the others cap
            lengths[j] = if grown > target { target } else { grown };
            if target - lengths[j] < closest_gap * lit::<T>(1e-12) {
                lengths[j] = target;
            }
        }
        steps.push(EqualizationStep {
            max_set,
            width,
            lengths: lengths.clone(),
        });
    }

    debug_assert!(lengths.iter().all(|&l| l == target));
    Ok(EqualizationTrace {
        epsilon,
        initial: initial.to_vec(),
        steps,
        final_lengths: lengths,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn path_matrix(n: usize) -> IntersectionMatrix {
        let mut entries = vec![vec![0u32; n]; n];
        for i in 0..n - 1 {
            entries[i][i + 1] = 1;
            entries[i + 1][i] = 1;
        }
        IntersectionMatrix::from_entries(entries).unwrap()
    }

    #[test]
    fn already_equal_lengths_take_zero_steps() {
        let trace = equalize_lengths(&[3.0, 3.0, 3.0], &path_matrix(3), 0.05).unwrap();
        assert_eq!(trace.step_count(), 0);
        assert_eq!(trace.final_lengths, vec![3.0, 3.0, 3.0]);
    }

    #[test]
    fn path_example_lifts_one_curve_per_step() {
        let trace = equalize_lengths(&[2.9f64, 2.95, 3.0], &path_matrix(3), 0.05).unwrap();
        assert_eq!(trace.step_count(), 2);
        // step 1: only the middle curve crosses the maximal one
        assert_eq!(trace.steps[0].max_set, vec![2]);
        assert!((trace.steps[0].width - 0.025).abs() < 1e-15);
        assert_eq!(trace.steps[0].lengths, vec![2.9, 3.0, 3.0]);
        // step 2: the first curve crosses the (now maximal) middle one
        assert_eq!(trace.steps[1].max_set, vec![1, 2]);
        assert!((trace.steps[1].width - 0.05).abs() < 1e-15);
        assert_eq!(trace.final_lengths, vec![3.0, 3.0, 3.0]);
    }

    #[test]
    fn maximal_set_is_frozen_within_a_step() {
        let trace = equalize_lengths(&[2.8, 2.9, 3.0, 3.0], &path_matrix(4), 0.05).unwrap();
        for step in &trace.steps {
            for &i in &step.max_set {
                assert_eq!(step.lengths[i], 3.0);
            }
        }
    }

    #[test]
    fn simultaneous_arrivals_share_a_step() {
        // both neighbors of the maximum sit at the same gap
        let mut entries = vec![vec![0u32; 3]; 3];
        entries[0][2] = 1;
        entries[2][0] = 1;
        entries[1][2] = 1;
        entries[2][1] = 1;
        let star = IntersectionMatrix::from_entries(entries).unwrap();
        let trace = equalize_lengths(&[2.9, 2.9, 3.0], &star, 0.05).unwrap();
        assert_eq!(trace.step_count(), 1);
        assert_eq!(trace.final_lengths, vec![3.0, 3.0, 3.0]);
    }

    #[test]
    fn disconnected_graph_is_rejected() {
        let m = IntersectionMatrix::from_entries(vec![vec![0, 0], vec![0, 0]]).unwrap();
        assert!(matches!(
            equalize_lengths(&[2.9, 3.0], &m, 0.05),
            Err(Error::EqualizationDisconnected)
        ));
    }

    #[test]
    fn preconditions_are_validated() {
        let m = path_matrix(2);
        assert!(equalize_lengths(&[2.9, 3.0], &m, 0.0).is_err());
        assert!(equalize_lengths(&[2.9, 3.0], &m, 1.0 / 6.0).is_err());
        // 2.0 is below 3 - 6 * 0.05 = 2.7
        assert!(equalize_lengths(&[2.0, 3.0], &m, 0.05).is_err());
        assert!(equalize_lengths(&[2.9, 3.2], &m, 0.05).is_err());
        assert!(equalize_lengths(&[], &m, 0.05).is_err());
        assert!(equalize_lengths(&[3.0], &m, 0.05).is_err());
    }

    #[test]
    fn lengths_never_decrease_and_respect_the_target() {
        let m = path_matrix(6);
        let initial = [2.71, 2.93, 2.74, 2.99, 2.85, 2.8];
        let trace = equalize_lengths(&initial, &m, 0.05).unwrap();
        let mut prev = initial.to_vec();
        for step in &trace.steps {
            for i in 0..prev.len() {
                assert!(step.lengths[i] >= prev[i]);
                assert!(step.lengths[i] <= 2.99);
            }
            prev = step.lengths.clone();
        }
        assert!(trace.step_count() <= 5);
        assert!(trace.final_lengths.iter().all(|&l| l == 2.99));
    }
}
