//! Family sizes of small generic rigidity matroids, computed once by an
//! independent brute-force rank oracle and frozen here.

use arm_core::families::{hm1_family, hm_family};
use arm_core::rigidity::{cycle_matroid_arm, generic_rigidity_matroid};
use arm_core::Matroid;

struct Counts {
    rank: usize,
    bases: usize,
    circuits: usize,
    hyperplanes: usize,
    flats: usize,
}

fn counts(m: &Matroid) -> Counts {
    Counts {
        rank: m.full_rank(),
        bases: m.bases().unwrap().len(),
        circuits: m.circuits().unwrap().len(),
        hyperplanes: m.hyperplanes().unwrap().len(),
        flats: m.flats().unwrap().len(),
    }
}

#[test]
fn generic_family_sizes() {
    // (n, m, rank, bases, circuits, hyperplanes, flats)
    let table = [
        (4, 2, 5, 6, 1, 15, 58),
        (5, 2, 7, 100, 20, 105, 719),
        (5, 3, 9, 10, 1, 45, 1014),
        (4, 1, 3, 16, 7, 7, 15),
        (5, 1, 4, 125, 37, 15, 52),
    ];
    for (n, m, rank, bases, circuits, hyperplanes, flats) in table {
        for seed in [1, 2] {
            let c = counts(&generic_rigidity_matroid(n, m, seed).unwrap());
            assert_eq!(
                (c.rank, c.bases, c.circuits, c.hyperplanes, c.flats),
                (rank, bases, circuits, hyperplanes, flats),
                "n={n} m={m} seed={seed}"
            );
        }
    }
}

#[test]
fn cycle_matroid_family_sizes() {
    let c = counts(&cycle_matroid_arm(5));
    assert_eq!(
        (c.rank, c.bases, c.circuits, c.hyperplanes, c.flats),
        (4, 125, 37, 15, 52)
    );
}

#[test]
fn six_vertex_family_sizes() {
    let g = generic_rigidity_matroid(6, 2, 11).unwrap();
    assert_eq!(g.full_rank(), 9);
    assert_eq!(g.circuits().unwrap().len(), 642);
    assert_eq!(g.hyperplanes().unwrap().len(), 1635);
    let g3 = generic_rigidity_matroid(6, 3, 11).unwrap();
    assert_eq!(g3.full_rank(), 12);
    assert_eq!(g3.circuits().unwrap().len(), 51);
    assert_eq!(g3.hyperplanes().unwrap().len(), 795);
}

#[test]
fn prescribed_family_sizes() {
    assert_eq!(hm_family(4, 2).unwrap().len(), 12);
    assert_eq!(hm_family(5, 2).unwrap().len(), 35);
    assert_eq!(hm_family(6, 2).unwrap().len(), 90);
    assert_eq!(hm1_family(4, 2).unwrap().len(), 12);
    assert_eq!(hm1_family(5, 2).unwrap().len(), 20);
}
