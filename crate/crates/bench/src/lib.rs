//! Shared fixtures for the criterion benchmarks.

use arm_core::rigidity::generic_rigidity_matroid;
use arm_core::Matroid;

/// Generic rigidity matroid with the rank table already filled.
pub fn generic(n: usize, m: usize) -> Matroid {
    let g = generic_rigidity_matroid(n, m, 2024).expect("generic matroid");
    g.circuits().expect("circuits");
    g
}
