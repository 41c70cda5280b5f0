//! Shared inputs for the criterion benches.

use indexcalc::CompleteIntersection;

/// The varieties the index examples are built around, plus a few larger
/// ones to exercise the higher-dimensional Todd and jet computations.
pub fn varieties() -> Vec<CompleteIntersection> {
    [
        (3, vec![2, 2]),
        (3, vec![4]),
        (4, vec![2, 3]),
        (4, vec![2, 2]),
        (5, vec![3]),
        (6, vec![2, 2]),
        (7, vec![]),
    ]
    .into_iter()
    .map(|(n, ds)| CompleteIntersection::new(n, ds).expect("valid fixture"))
    .collect()
}
