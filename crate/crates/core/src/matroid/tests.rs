use super::*;
use crate::families::star;
use crate::ground::{edge_rank, Edge};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn e(n: usize, pairs: &[(usize, usize)]) -> EdgeSet {
    EdgeSet::from_pairs(n, pairs).unwrap()
}

fn idx(n: usize, a: usize, b: usize) -> usize {
    edge_rank(Edge::new(a, b).unwrap(), n).unwrap()
}

/// Rank straight from a basis list, no tables involved.
fn oracle_rank(bases: &[EdgeSet], x: EdgeSet) -> usize {
    bases
        .iter()
        .map(|b| (b.bits() & x.bits()).count_ones() as usize)
        .max()
        .unwrap()
}

/// Basis family of the column matroid of a random {-1,0,1} matrix.
fn random_bases(n: usize, ground: EdgeSet, rank: usize, rng: &mut ChaCha8Rng) -> Vec<EdgeSet> {
    use num_rational::BigRational;
    loop {
        let cols: Vec<Vec<BigRational>> = ground
            .indices()
            .map(|_| {
                (0..rank)
                    .map(|_| BigRational::from_integer(rng.gen_range(-1i64..=1).into()))
                    .collect()
            })
            .collect();
        let elems: Vec<usize> = ground.indices().collect();
        let mut bases = Vec::new();
        crate::ground::combinations(&(0..elems.len()).collect::<Vec<_>>(), rank, &mut |c| {
            let rows: Vec<&[BigRational]> = c.iter().map(|&i| cols[i].as_slice()).collect();
            if crate::linalg::rank_rational(&rows) == rank {
                bases.push(EdgeSet::from_indices(n, c.iter().map(|&i| elems[i])).unwrap());
            }
        });
        if !bases.is_empty() {
            return bases;
        }
    }
}

#[test]
fn from_bases_accepts_uniform_families() {
    let u23 = Matroid::uniform(3, 2).unwrap();
    assert_eq!(u23.full_rank(), 2);
    assert_eq!(u23.bases().unwrap().len(), 3);
    let u56 = Matroid::uniform(4, 5).unwrap();
    assert_eq!(u56.bases().unwrap().len(), 6);
    let bs = u56.bases().unwrap().members;
    assert!(Matroid::from_bases(4, bs).is_ok());
}

#[test]
fn from_bases_rejects_bad_families() {
    let bad = vec![e(3, &[(0, 1), (0, 2)]), e(3, &[(1, 2)])];
    assert_eq!(
        Matroid::from_bases(3, bad).unwrap_err(),
        Error::UnequalCardinality(2, 1)
    );
    assert_eq!(
        Matroid::from_bases(3, vec![]).unwrap_err(),
        Error::EmptyFamily
    );
    // {01,02} and {12,13} on K_4: swapping 01 out of the first cannot be repaired.
    let no_exchange = vec![e(4, &[(0, 1), (0, 2)]), e(4, &[(1, 2), (1, 3)])];
    assert!(matches!(
        Matroid::from_bases(4, no_exchange),
        Err(Error::ExchangeViolation { .. })
    ));
}

#[test]
fn rank_examples() {
    let c4 = Matroid::cycle(4);
    assert_eq!(c4.rank(EdgeSet::empty(4)), 0);
    assert_eq!(c4.full_rank(), 3);
    assert_eq!(c4.rank(e(4, &[(0, 1), (1, 2), (0, 2)])), 2);
    assert!(c4.is_independent(EdgeSet::empty(4)));
}

#[test]
fn independence_of_bases_and_their_extensions() {
    let c4 = Matroid::cycle(4);
    for b in c4.bases().unwrap().members {
        assert!(c4.is_independent(b));
        for x in EdgeSet::full(4).difference(b).indices() {
            assert!(!c4.is_independent(b.with(x)));
        }
    }
}

#[test]
fn closure_examples() {
    let c4 = Matroid::cycle(4);
    assert_eq!(c4.closure(EdgeSet::empty(4)), EdgeSet::empty(4));
    assert_eq!(
        c4.closure(e(4, &[(0, 1), (1, 2)])),
        e(4, &[(0, 1), (0, 2), (1, 2)])
    );
}

#[test]
fn closure_routes_agree() {
    let c4 = Matroid::cycle(4);
    let u = Matroid::uniform(4, 4).unwrap();
    for m in [c4, u] {
        for x in m.subsets().unwrap() {
            assert_eq!(m.closure(x), m.closure_by_hyperplanes(x).unwrap(), "{x:?}");
        }
    }
}

#[test]
fn circuits_of_small_matroids() {
    let u56 = Matroid::uniform(4, 5).unwrap();
    assert_eq!(u56.circuits().unwrap().members, vec![EdgeSet::full(4)]);
    let c4 = Matroid::cycle(4).circuits().unwrap();
    assert_eq!(c4.len(), 7);
    assert_eq!(c4.members.iter().filter(|c| c.len() == 3).count(), 4);
    assert_eq!(c4.members.iter().filter(|c| c.len() == 4).count(), 3);
}

#[test]
fn hyperplanes_and_cocircuits_are_complements() {
    let u23 = Matroid::uniform(3, 2).unwrap();
    let hs = u23.hyperplanes().unwrap();
    assert_eq!(hs.len(), 3);
    assert!(hs.members.iter().all(|h| h.len() == 1));
    let cs = u23.cocircuits().unwrap();
    assert!(cs.members.iter().all(|c| c.len() == 2));

    let c4 = Matroid::cycle(4);
    let hs = c4.hyperplanes().unwrap();
    assert_eq!(hs.len(), 7);
    let cocirc = c4.cocircuits().unwrap();
    for h in &hs.members {
        assert!(cocirc.contains(&EdgeSet::full(4).difference(*h)));
    }
    for v in 0..4 {
        assert!(cocirc.contains(&star(v, 4).unwrap()));
    }
}

#[test]
fn families_are_sorted_antichains() {
    let c4 = Matroid::cycle(4);
    for fam in [
        c4.circuits().unwrap(),
        c4.hyperplanes().unwrap(),
        c4.bases().unwrap(),
        c4.cocircuits().unwrap(),
    ] {
        let mut sorted = fam.members.clone();
        sorted.sort();
        assert_eq!(sorted, fam.members);
        for a in &fam.members {
            for b in &fam.members {
                assert!(a == b || !a.is_subset(*b));
            }
        }
    }
}

#[test]
fn dual_examples() {
    let u23 = Matroid::uniform(3, 2).unwrap();
    let d = u23.dual().unwrap();
    assert!(d.same_matroid(&Matroid::uniform(3, 1).unwrap()).unwrap());

    let mut rng = ChaCha8Rng::seed_from_u64(11);
    let ground = EdgeSet::full(4);
    for _ in 0..10 {
        let r = rng.gen_range(1..=5);
        let m = Matroid::from_bases(4, random_bases(4, ground, r, &mut rng)).unwrap();
        let dd = m.dual().unwrap().dual().unwrap();
        assert_eq!(dd.bases().unwrap(), m.bases().unwrap());
        let mut co = m.cocircuits().unwrap().members;
        co.sort();
        assert_eq!(co, m.dual().unwrap().circuits().unwrap().members);
    }
}

#[test]
fn restriction_keeps_the_rank_function() {
    let c5 = Matroid::cycle(5);
    assert!(c5.restriction(c5.ground()).same_matroid(&c5).unwrap());
    let t = e(5, &[(0, 1), (1, 2), (0, 2), (2, 3), (3, 4), (2, 4), (1, 3)]);
    let r = c5.restriction(t);
    assert_eq!(r.ground(), t);
    for x in r.subsets().unwrap() {
        assert_eq!(r.rank(x), c5.rank(x));
        assert_eq!(r.closure(x), c5.closure(x).intersection(t));
    }
    let t2 = e(5, &[(0, 1), (1, 2), (0, 2)]);
    assert!(r.restriction(t2).same_matroid(&c5.restriction(t2)).unwrap());
}

#[test]
fn closure_validator_on_matroids_and_simple_operators() {
    for m in [
        Matroid::cycle(4),
        Matroid::uniform(3, 2).unwrap(),
        Matroid::uniform(4, 5).unwrap(),
    ] {
        let sigma = ClosureOperator::from_matroid(&m).unwrap();
        assert!(validate_closure_axioms(&sigma, m.n()).unwrap().passed);
    }
    let g = EdgeSet::full(4);
    let identity = ClosureOperator::from_fn(g, |a| a).unwrap();
    assert!(validate_closure_axioms(&identity, 4).unwrap().passed);

    // Constant closure on nonempty sets is the closure of U_{1,6}.
    let constant = ClosureOperator::from_fn(g, |a| if a.is_empty() { a } else { g }).unwrap();
    assert!(validate_closure_axioms(&constant, 4).unwrap().passed);

    // e1 drags e0 along but not the other way round: extensive, monotone and
    // idempotent, yet exchange fails.
    let plus = ClosureOperator::from_fn(g, |a| if a.contains(1) { a.with(0) } else { a }).unwrap();
    let report = validate_closure_axioms(&plus, 4).unwrap();
    assert!(!report.passed);
    assert!(!report.conditions["exchange"]);
    assert!(
        report.conditions["extensive"]
            && report.conditions["monotone"]
            && report.conditions["idempotent"]
    );
    let w = &report.violations[0];
    let (a, x, y) = (
        w.edge_set("A").unwrap(),
        w.edge_set("x").unwrap(),
        w.edge_set("y").unwrap(),
    );
    let (xi, yi) = (x.indices().next().unwrap(), y.indices().next().unwrap());
    assert!(plus.apply(a.with(yi)).contains(xi) && !plus.apply(a).contains(xi));
    assert!(!plus.apply(a.with(xi)).contains(yi));
}

#[test]
fn closure_validator_respects_cap() {
    let sigma = ClosureOperator::from_fn(EdgeSet::full(6), |a| a);
    assert!(sigma.is_ok());
    assert!(matches!(
        ClosureOperator::from_fn(EdgeSet::full(7), |a| a),
        Err(Error::CapExceeded { .. })
    ));
}

#[test]
fn closure_from_bases_round_trips() {
    let u23 = Matroid::uniform(3, 2).unwrap();
    let sigma = closure_from_bases(3, u23.ground(), &u23.bases().unwrap().members).unwrap();
    for i in 0..3 {
        let single = EdgeSet::from_bits(3, 1 << i);
        assert_eq!(sigma.apply(single), single);
    }
    let c4 = Matroid::cycle(4);
    let bases = c4.bases().unwrap().members;
    assert_eq!(
        closure_from_bases(4, c4.ground(), &bases).unwrap().bases(),
        bases
    );

    let mut rng = ChaCha8Rng::seed_from_u64(20);
    let ground = EdgeSet::full(4);
    for _ in 0..20 {
        let r = rng.gen_range(0..=6);
        let mut bases = random_bases(4, ground, r, &mut rng);
        bases.sort();
        let sigma = closure_from_bases(4, ground, &bases).unwrap();
        assert_eq!(sigma.bases(), bases);
        let m = Matroid::from_bases(4, bases.clone()).unwrap();
        for x in m.subsets().unwrap() {
            assert_eq!(sigma.apply(x), m.closure(x));
            assert_eq!(m.rank(x), oracle_rank(&bases, x));
        }
    }
}

#[test]
fn rank_table_matches_the_basis_oracle_on_a_partial_ground() {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    let ground = e(5, &[(0, 1), (0, 3), (1, 4), (2, 3), (2, 4), (3, 4), (1, 2)]);
    for r in 1..=4 {
        let bases = random_bases(5, ground, r, &mut rng);
        let m = Matroid::from_bases_on(5, ground, bases.clone()).unwrap();
        for x in m.subsets().unwrap() {
            assert_eq!(m.rank(x), oracle_rank(&bases, x));
        }
    }
}

#[test]
fn circuit_cocircuit_intersections() {
    for m in [Matroid::cycle(4), Matroid::uniform(3, 2).unwrap()] {
        assert!(m.check_circuit_cocircuit_intersection().unwrap().passed);
    }
}

#[test]
fn flats_by_circuits_agree_with_closure() {
    let c4 = Matroid::cycle(4);
    for x in c4.subsets().unwrap() {
        assert_eq!(c4.check_flat_by_circuits(x).unwrap(), c4.closure(x) == x);
    }
    let b = c4.bases().unwrap().members[0];
    assert!(!c4.check_flat_by_circuits(b).unwrap());
}

#[test]
fn chain_rank_examples() {
    let c4 = Matroid::cycle(4);
    assert!(c4.verify_chain_rank(c4.ground()).unwrap());
    assert!(c4.verify_chain_rank(EdgeSet::empty(4)).unwrap());
    assert_eq!(
        c4.verify_chain_rank(e(4, &[(0, 1), (1, 2)])),
        Err(Error::NotClosed)
    );
}

#[test]
fn json_round_trip() {
    let ms = [
        Matroid::cycle(4),
        Matroid::uniform(3, 2).unwrap(),
        Matroid::cycle(5).restriction(e(5, &[(0, 1), (1, 2), (0, 2), (3, 4)])),
    ];
    for m in ms {
        let s = m.to_json_string();
        let back = Matroid::from_json_str(&s).unwrap();
        assert!(back.same_matroid(&m).unwrap());
        assert_eq!(back.to_json_string(), s);
    }
    let j = Matroid::uniform(3, 2).unwrap().to_json();
    assert_eq!(
        j.bases.as_ref().unwrap()[0],
        vec![idx(3, 0, 1), idx(3, 0, 2)]
    );
    let mut wrong = j.clone();
    wrong.rank = 3;
    assert!(matches!(Matroid::from_json(&wrong), Err(Error::Parse(_))));
}

#[test]
fn enumeration_cap_is_loud() {
    let c8 = Matroid::cycle(8);
    assert!(matches!(c8.circuits(), Err(Error::CapExceeded { .. })));
    assert_eq!(c8.full_rank(), 7);
}

#[test]
fn induced_matroid_on_a_vertex_subset() {
    let c = Matroid::cycle(5);
    let x: VertexSet = [0, 2, 4].into_iter().collect();
    let sub = c.induced_on_vertices(x).unwrap();
    assert_eq!(sub.n(), 3);
    assert!(sub.same_matroid(&Matroid::cycle(3)).unwrap());
    let free = Matroid::uniform(4, 6)
        .unwrap()
        .induced_on_vertices(VertexSet::full(4).without(1))
        .unwrap();
    assert!(free.same_matroid(&Matroid::uniform(3, 3).unwrap()).unwrap());
}
