//! The defining conditions C1 and C2 of an `m`-dimensional abstract rigidity matroid.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::ground::{complete_edges, EdgeSet, VertexSet};
use crate::matroid::{submasks, Matroid};
use crate::report::{AxiomReport, Scope, Violation};

use super::{is_rigid, require_dimension};

/// Largest vertex count for which C1/C2 are checked over literal pairs of edge sets.
pub const EXHAUSTIVE_PAIR_VERTICES: usize = 5;

fn c1_violation(matroid: &Matroid, e: EdgeSet, f: EdgeSet, closure: EdgeSet) -> Option<Violation> {
    let n = matroid.n();
    let allowed = complete_edges(e.support(), n).union(complete_edges(f.support(), n));
    (!closure.is_subset(allowed)).then(|| Violation::new("C1").set("E", e).set("F", f))
}

/// Closure of every subset of `K(V)`, indexed by bit pattern.
fn closure_table(matroid: &Matroid) -> Result<Vec<EdgeSet>> {
    Ok(matroid
        .subsets()?
        .collect::<Vec<_>>()
        .into_par_iter()
        .map(|x| matroid.closure(x))
        .collect())
}

fn support_pairs(n: usize) -> Vec<(VertexSet, VertexSet)> {
    let sets: Vec<VertexSet> = VertexSet::full(n)
        .subsets()
        .filter(|s| s.len() != 1)
        .collect();
    let mut out = Vec::new();
    for (i, &s) in sets.iter().enumerate() {
        for &t in &sets[i..] {
            out.push((s, t));
        }
    }
    out
}

/// C1 decided on pairs `K(S), K(T)`: by monotonicity of the closure these are
/// the hardest pairs with supports `S` and `T`, so this is a complete check.
pub fn c1_by_supports(matroid: &Matroid, m: usize) -> AxiomReport {
    let n = matroid.n();
    let mut report = AxiomReport::new("C1", Scope::Exhaustive);
    let found: Vec<Violation> = support_pairs(n)
        .into_par_iter()
        .filter(|(s, t)| s.intersection(*t).len() < m)
        .filter_map(|(s, t)| {
            let (e, f) = (complete_edges(s, n), complete_edges(t, n));
            c1_violation(matroid, e, f, matroid.closure(e.union(f)))
        })
        .collect();
    report.extend(found);
    report.finish()
}

/// C2 decided on pairs `K(S), K(T)` of closed complete sets: a rigid set with
/// support `S` has closure `K(S)`, so this is a complete check.
pub fn c2_by_supports(matroid: &Matroid, m: usize) -> AxiomReport {
    let n = matroid.n();
    let mut report = AxiomReport::new("C2", Scope::Exhaustive);
    let found: Vec<Violation> = support_pairs(n)
        .into_par_iter()
        .filter(|(s, t)| s.len() >= 2 && t.len() >= 2 && s.intersection(*t).len() >= m)
        .filter_map(|(s, t)| {
            let (e, f) = (complete_edges(s, n), complete_edges(t, n));
            let rigid_pair = matroid.is_flat(e) && matroid.is_flat(f);
            (rigid_pair && !is_rigid(matroid, e.union(f)))
                .then(|| Violation::new("C2").set("E", e).set("F", f))
        })
        .collect();
    report.extend(found);
    report.finish()
}

fn require_full_ground(matroid: &Matroid, suite: &str) -> Result<()> {
    if matroid.ground() != EdgeSet::full(matroid.n()) {
        return Err(Error::PreconditionNotMet {
            suite: suite.to_owned(),
            detail: "the matroid's ground set is not all of K(V)".into(),
        });
    }
    Ok(())
}

fn require_pair_exhaustive(matroid: &Matroid, what: &str) -> Result<()> {
    if matroid.n() > EXHAUSTIVE_PAIR_VERTICES {
        return Err(Error::cap(what, matroid.n(), EXHAUSTIVE_PAIR_VERTICES));
    }
    Ok(())
}

/// A random edge set living on a random vertex set of the given size.
fn random_edge_set(n: usize, verts: VertexSet, rng: &mut ChaCha8Rng) -> EdgeSet {
    let k = complete_edges(verts, n);
    let keep: u128 = rng.gen();
    let picked = EdgeSet::from_bits(n, k.bits() & keep);
    if picked.is_empty() {
        k
    } else {
        picked
    }
}

/// Two random vertex sets of sizes >= 2 whose overlap lies in `overlap`.
fn random_support_pair(
    n: usize,
    overlap: std::ops::RangeInclusive<usize>,
    rng: &mut ChaCha8Rng,
) -> Option<(VertexSet, VertexSet)> {
    let lo = *overlap.start();
    let hi = (*overlap.end()).min(n);
    if lo > hi {
        return None;
    }
    let o = rng.gen_range(lo..=hi);
    let mut order: Vec<usize> = (0..n).collect();
    order.shuffle(rng);
    let rest = n - o;
    let a = rng.gen_range(0..=rest);
    let b = rng.gen_range(0..=rest - a);
    let shared: VertexSet = order[..o].iter().copied().collect();
    let s = shared.union(order[o..o + a].iter().copied().collect());
    let t = shared.union(order[o + a..o + a + b].iter().copied().collect());
    (s.len() >= 2 && t.len() >= 2).then_some((s, t))
}

/// A rigid set with support `s`, obtained by deleting random edges from the
/// closed set `K(s)` while the rank and the support stay put.
pub(crate) fn random_rigid_on(matroid: &Matroid, s: VertexSet, rng: &mut ChaCha8Rng) -> EdgeSet {
    let n = matroid.n();
    let k = complete_edges(s, n);
    let r = matroid.rank(k);
    let target = rng.gen_range(r..=k.len());
    let mut order: Vec<usize> = k.indices().collect();
    order.shuffle(rng);
    let mut e = k;
    for i in order {
        if e.len() <= target {
            break;
        }
        let smaller = e.without(i);
        if smaller.support() == s && matroid.rank(smaller) == r {
            e = smaller;
        }
    }
    e
}

/// Vertex sets `S` with `|S| >= min` whose complete edge set is closed.
pub(crate) fn closed_supports(matroid: &Matroid, min: usize) -> Vec<VertexSet> {
    let n = matroid.n();
    VertexSet::full(n)
        .subsets()
        .filter(|s| s.len() >= min.max(2) && matroid.is_flat(complete_edges(*s, n)))
        .collect()
}

/// C1: `|V(E) ∩ V(F)| < m` implies `σ(E ∪ F) ⊆ K(V(E)) ∪ K(V(F))`.
///
/// The exhaustive scope quantifies over every pair of edge sets and is limited
/// to `n <= 5`. The sampled scope runs the complete support-pair sweep plus
/// seeded random pairs (half of them pairs of flats when flats are enumerable).
pub fn check_c1(matroid: &Matroid, m: usize, scope: Scope) -> Result<AxiomReport> {
    require_dimension(matroid, m)?;
    require_full_ground(matroid, "C1")?;
    let n = matroid.n();
    let mut report = AxiomReport::new("C1", scope);
    match scope {
        Scope::Exhaustive => {
            require_pair_exhaustive(matroid, "exhaustive C1 vertex count")?;
            let closures = closure_table(matroid)?;
            let size = closures.len();
            let found: Vec<Violation> = (0..size)
                .into_par_iter()
                .flat_map_iter(|i| {
                    let e = EdgeSet::from_bits(n, i as u128);
                    let closures = &closures;
                    (i..size).filter_map(move |j| {
                        let f = EdgeSet::from_bits(n, j as u128);
                        if e.support().intersection(f.support()).len() >= m {
                            return None;
                        }
                        c1_violation(matroid, e, f, closures[i | j])
                    })
                })
                .collect();
            report.extend(found);
        }
        Scope::Sampled { seed, count } => {
            report.extend(c1_by_supports(matroid, m).violations);
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let flats = if matroid.ground().len() <= crate::matroid::CLOSURE_CAP {
                matroid.flats()?.members
            } else {
                Vec::new()
            };
            for i in 0..count {
                let (e, f) = if i % 2 == 1 && !flats.is_empty() {
                    (
                        *flats.choose(&mut rng).unwrap(),
                        *flats.choose(&mut rng).unwrap(),
                    )
                } else {
                    let Some((s, t)) = random_support_pair(n, 0..=m - 1, &mut rng) else {
                        continue;
                    };
                    (
                        random_edge_set(n, s, &mut rng),
                        random_edge_set(n, t, &mut rng),
                    )
                };
                if e.support().intersection(f.support()).len() < m {
                    report.extend(c1_violation(matroid, e, f, matroid.closure(e.union(f))));
                }
            }
        }
    }
    Ok(report.finish())
}

/// C2: rigid `E, F` with `|V(E) ∩ V(F)| >= m` have a rigid union.
///
/// Exhaustive scope enumerates every rigid set (`n <= 5`); the sampled scope
/// runs the complete support-pair sweep plus seeded pairs of random rigid sets.
pub fn check_c2(matroid: &Matroid, m: usize, scope: Scope) -> Result<AxiomReport> {
    require_dimension(matroid, m)?;
    require_full_ground(matroid, "C2")?;
    let n = matroid.n();
    let mut report = AxiomReport::new("C2", scope);
    match scope {
        Scope::Exhaustive => {
            require_pair_exhaustive(matroid, "exhaustive C2 vertex count")?;
            let closures = closure_table(matroid)?;
            let rigid: Vec<EdgeSet> = submasks(n, matroid.ground())
                .filter(|e| {
                    !e.is_empty() && closures[e.bits() as usize] == complete_edges(e.support(), n)
                })
                .collect();
            let found: Vec<Violation> = (0..rigid.len())
                .into_par_iter()
                .flat_map_iter(|i| {
                    let (rigid, closures) = (&rigid, &closures);
                    (i..rigid.len()).filter_map(move |j| {
                        let (e, f) = (rigid[i], rigid[j]);
                        let u = e.union(f);
                        let ok = e.support().intersection(f.support()).len() < m
                            || closures[u.bits() as usize] == complete_edges(u.support(), n);
                        (!ok).then(|| Violation::new("C2").set("E", e).set("F", f))
                    })
                })
                .collect();
            report.extend(found);
        }
        Scope::Sampled { seed, count } => {
            report.extend(c2_by_supports(matroid, m).violations);
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let closed: Vec<VertexSet> = closed_supports(matroid, 2);
            for _ in 0..count {
                let Some((s, t)) = random_support_pair(n, m..=n, &mut rng) else {
                    continue;
                };
                if !closed.contains(&s) || !closed.contains(&t) {
                    continue;
                }
                let e = random_rigid_on(matroid, s, &mut rng);
                let f = random_rigid_on(matroid, t, &mut rng);
                if !is_rigid(matroid, e.union(f)) {
                    report.push(Violation::new("C2").set("E", e).set("F", f));
                }
            }
        }
    }
    Ok(report.finish())
}
