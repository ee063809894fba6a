use num_rational::BigRational;
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use arm_core::checks::laman_check;
use arm_core::explore::{enumerate_matroids, search_question};
use arm_core::families::{hm1_family, hm_family, zero_extension};
use arm_core::matroid::{validate_basis_family, validate_closure_axioms};
use arm_core::rigidity::{generic_rigidity_matroid, rank_formula, rigidity_matrix, Embedding};
use arm_core::{complete_edges, edge_count, ClosureOperator, EdgeSet, Matroid, VertexSet};

fn binomial(n: usize, k: usize) -> usize {
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

#[test]
fn handshake() {
    for n in 1..=16 {
        let k = EdgeSet::full(n);
        assert_eq!((0..n).map(|v| k.valence(v)).sum::<usize>(), n * (n - 1));
    }
}

#[test]
fn prescribed_families_nest_and_separate() {
    for n in 2..=7 {
        for m in 1..n {
            let hm = hm_family(n, m).unwrap();
            for h in hm1_family(n, m).unwrap() {
                assert!(hm.binary_search(&h).is_ok(), "n={n} m={m}");
            }
            // One member per unordered split; none collapse.
            let splits = binomial(n, m - 1) * ((1 << (n - m + 1)) - 2) / 2;
            assert_eq!(hm.len(), splits, "n={n} m={m}");
        }
    }
}

fn linear_matroid(n: usize, width: usize, seed: u64) -> Matroid {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let rows = (0..edge_count(n))
        .map(|_| {
            (0..width)
                .map(|_| BigRational::from_integer(rng.gen_range(-2i64..=2).into()))
                .collect()
        })
        .collect();
    Matroid::from_linear(n, rows, seed).unwrap()
}

fn any_matroid() -> impl Strategy<Value = Matroid> {
    prop_oneof![
        (3usize..=5, 1usize..=4, any::<u64>()).prop_map(|(n, w, s)| linear_matroid(n, w, s)),
        (2usize..=5).prop_map(Matroid::cycle),
        (0usize..171).prop_map(|i| enumerate_matroids(5, 2).unwrap().nth(i).unwrap()),
        (0usize..63).prop_map(|i| enumerate_matroids(6, 5).unwrap().nth(i).unwrap()),
        (4usize..=5, 1usize..=3, 0u64..50)
            .prop_map(|(n, m, s)| generic_rigidity_matroid(n, m, s).unwrap()),
    ]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn complete_edges_is_monotone(a in 0u32..1 << 9, b in 0u32..1 << 9) {
        let (w, w2) = (VertexSet::from_bits(a), VertexSet::from_bits(a | b));
        prop_assert!(complete_edges(w, 9).is_subset(complete_edges(w2, 9)));
    }

    #[test]
    fn extension_adds_the_new_vertex(bits in 1u128..1 << 15, anchor_bits in 1u32..64, w in 0usize..6) {
        let e = EdgeSet::from_bits(6, bits).intersection(complete_edges(VertexSet::full(6).without(w), 6));
        prop_assume!(!e.is_empty());
        let anchors = VertexSet::from_bits(anchor_bits).intersection(e.support());
        prop_assume!(!anchors.is_empty());
        let x = zero_extension(e, anchors, w).unwrap();
        prop_assert_eq!(x.support(), e.support().with(w));
        prop_assert_eq!(x.len(), e.len() + anchors.len());
    }

    #[test]
    fn rank_is_a_matroid_rank(m in any_matroid()) {
        let subsets: Vec<EdgeSet> = m.subsets().unwrap().collect();
        for &x in &subsets {
            prop_assert!(m.rank(x) <= x.len());
            for e in m.ground().difference(x).indices() {
                let r = m.rank(x.with(e));
                prop_assert!(r == m.rank(x) || r == m.rank(x) + 1);
            }
        }
        if m.ground().len() <= 10 {
            for &x in &subsets {
                for &y in subsets.iter().step_by(7) {
                    prop_assert!(m.rank(x.union(y)) + m.rank(x.intersection(y)) <= m.rank(x) + m.rank(y));
                }
            }
        }
    }

    #[test]
    fn closure_satisfies_the_axioms(m in any_matroid()) {
        let sigma = ClosureOperator::from_matroid(&m).unwrap();
        prop_assert!(validate_closure_axioms(&sigma, m.n()).unwrap().passed);
    }

    #[test]
    fn families_are_consistent(m in any_matroid()) {
        let circuits = m.circuits().unwrap().members;
        for (i, c) in circuits.iter().enumerate() {
            prop_assert!(!m.is_independent(*c));
            prop_assert!(c.indices().all(|e| m.is_independent(c.without(e))));
            prop_assert!(circuits[i + 1..].iter().all(|d| !c.is_subset(*d) && !d.is_subset(*c)));
        }
        let hyperplanes = m.hyperplanes().unwrap().members;
        for (i, h) in hyperplanes.iter().enumerate() {
            prop_assert!(hyperplanes[i + 1..].iter().all(|g| !h.is_subset(*g) && !g.is_subset(*h)));
        }
        let mut comps: Vec<EdgeSet> = hyperplanes.iter().map(|h| m.ground().difference(*h)).collect();
        comps.sort_by_key(|c| c.canonical_key());
        prop_assert_eq!(comps, m.dual().unwrap().circuits().unwrap().members);
    }

    #[test]
    fn restriction_composes(m in any_matroid(), t in any::<u128>(), t2 in any::<u128>()) {
        let t = EdgeSet::from_bits(m.n(), t & m.ground().bits());
        let t2 = EdgeSet::from_bits(m.n(), t2 & t.bits());
        prop_assert!(m.restriction(t).restriction(t2).same_matroid(&m.restriction(t2)).unwrap());
    }

    #[test]
    fn linear_paths_agree(n in 3usize..=6, w in 1usize..=5, seed in any::<u64>()) {
        let m = linear_matroid(n, w, seed);
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        for _ in 0..200 {
            m.rank(EdgeSet::from_bits(n, rng.gen::<u128>() & EdgeSet::full(n).bits()));
        }
        prop_assert_eq!(m.cross_check_stats().unwrap().mismatches, 0);
    }

    #[test]
    fn enumerated_families_satisfy_basis_axioms(i in 0usize..2053) {
        let m = enumerate_matroids(6, 3).unwrap().nth(i).unwrap();
        prop_assert!(validate_basis_family(&m.bases().unwrap().members).is_ok());
    }
}

#[test]
fn rigidity_matrix_rank_is_bounded() {
    let mut rng = ChaCha8Rng::seed_from_u64(99);
    for m in 1..=3 {
        for n in m + 1..=7 {
            for _ in 0..100 {
                let mut p = Embedding::random(n, m, &mut rng).unwrap();
                if rng.gen_bool(0.3) {
                    // Squash onto a hyperplane to get degenerate cases too.
                    let coords: Vec<Vec<i64>> = (0..n)
                        .map(|_| {
                            (0..m)
                                .map(|k| if k == 0 { 0 } else { rng.gen_range(-5..=5) })
                                .collect()
                        })
                        .collect();
                    p = Embedding::from_integers(n, m, &coords).unwrap();
                }
                if let Ok(r) = rigidity_matrix(&p) {
                    assert!(r.rank() <= rank_formula(n, m), "n={n} m={m}");
                }
            }
        }
    }
}

#[test]
fn independent_sets_satisfy_laman() {
    for (n, m) in [(4, 2), (5, 2), (5, 3)] {
        let g = generic_rigidity_matroid(n, m, 1).unwrap();
        for e in g.subsets().unwrap().filter(|e| g.is_independent(*e)) {
            assert!(laman_check(e, m).passed);
        }
    }
    for (n, m) in [(6, 2), (6, 3), (7, 2), (7, 3)] {
        let g = generic_rigidity_matroid(n, m, 1).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(n as u64 * 10 + m as u64);
        for _ in 0..10_000 {
            let mut order: Vec<usize> = (0..edge_count(n)).collect();
            rand::seq::SliceRandom::shuffle(order.as_mut_slice(), &mut rng);
            let target = rng.gen_range(0..=g.full_rank());
            let mut e = EdgeSet::empty(n);
            for i in order {
                if e.len() == target {
                    break;
                }
                if g.is_independent(e.with(i)) {
                    e = e.with(i);
                }
            }
            assert!(laman_check(e, m).passed, "n={n} m={m} {e:?}");
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(4))]

    #[test]
    fn findings_are_reproducible_and_self_verifying(seed in any::<u64>()) {
        let a = search_question(5, 2, 16, seed).unwrap();
        let b = search_question(5, 2, 16, seed).unwrap();
        prop_assert_eq!(a.to_json_string(), b.to_json_string());
        let back = arm_core::explore::Finding::from_json_str(&a.to_json_string()).unwrap();
        prop_assert!(back.reverify().unwrap());
    }
}
