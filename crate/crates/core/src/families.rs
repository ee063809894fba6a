//! Named edge-set constructions on `K(V)`: stars, big stars, the sets
//! `Δ_v^A`, the two-clique family `H_m(V)` and its subfamily `H_m^(1)(V)`,
//! and `k`-valent 0-extensions.

use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::ground::{complete_edges, edge_rank, Edge, EdgeSet, VertexId, VertexSet};

fn check_vertex(v: VertexId, n: usize) -> Result<()> {
    if v >= n {
        return Err(Error::VertexOutOfRange { vertex: v, n });
    }
    Ok(())
}

/// `star(v)`: every edge of `K(V)` incident to `v`.
pub fn star(v: VertexId, n: usize) -> Result<EdgeSet> {
    check_vertex(v, n)?;
    Ok(EdgeSet::full(n).difference(complete_edges(VertexSet::full(n).without(v), n)))
}

/// `bigstar(V') = K(V) \ K(V \ V')`.
pub fn bigstar(vp: VertexSet, n: usize) -> Result<EdgeSet> {
    if let Some(v) = vp.max().filter(|&v| v >= n) {
        return Err(Error::VertexOutOfRange { vertex: v, n });
    }
    Ok(EdgeSet::full(n).difference(complete_edges(VertexSet::full(n).difference(vp), n)))
}

/// `Δ_v^A = K({v} ∪ A) ∪ K(V \ {v})`.
pub fn delta(v: VertexId, a: VertexSet, n: usize) -> Result<EdgeSet> {
    delta_on(VertexSet::full(n), v, a, n)
}

/// `Δ_v^A` taken inside the complete graph on `universe`.
pub fn delta_on(universe: VertexSet, v: VertexId, a: VertexSet, n: usize) -> Result<EdgeSet> {
    check_vertex(v, n)?;
    if a.contains(v) {
        return Err(Error::VertexInSet(v));
    }
    if !a.union(VertexSet::singleton(v)).is_subset(universe) {
        return Err(Error::VertexOutOfRange { vertex: v, n });
    }
    Ok(complete_edges(a.with(v), n).union(complete_edges(universe.without(v), n)))
}

/// All `star(v)` minus `k` of its edges, deduplicated and canonically sorted.
pub fn stars_minus(n: usize, k: usize) -> Vec<EdgeSet> {
    let mut out = BTreeSet::new();
    for v in 0..n {
        let s = star(v, n).expect("v < n");
        let idx: Vec<usize> = s.indices().collect();
        crate::ground::combinations(&idx, k, &mut |drop| {
            out.insert(drop.iter().fold(s, |acc, &i| acc.without(i)));
        });
    }
    out.into_iter().collect()
}

/// Every `bigstar(V')` with `|V'| = m`.
pub fn bigstar_family(n: usize, m: usize) -> Vec<EdgeSet> {
    let mut out: Vec<_> = VertexSet::full(n)
        .subsets_of_size(m)
        .into_iter()
        .map(|vp| bigstar(vp, n).expect("subset of V"))
        .collect();
    out.sort();
    out
}

fn check_dims(universe: VertexSet, m: usize) -> Result<()> {
    if m == 0 || universe.len() < m {
        return Err(Error::DimensionTooLarge {
            n: universe.len(),
            m,
        });
    }
    Ok(())
}

/// `H_m(V)`: unions `K(V_1) ∪ K(V_2)` with `V_1 ∪ V_2 = V`, `|V_1 ∩ V_2| = m - 1`
/// and neither side contained in the other.
pub fn hm_family(n: usize, m: usize) -> Result<Vec<EdgeSet>> {
    hm_family_on(VertexSet::full(n), n, m)
}

/// `H_m` over the complete graph on `universe ⊆ {0, .., n-1}`.
pub fn hm_family_on(universe: VertexSet, n: usize, m: usize) -> Result<Vec<EdgeSet>> {
    check_dims(universe, m)?;
    let mut out = BTreeSet::new();
    for shared in universe.subsets_of_size(m - 1) {
        let rest = universe.difference(shared);
        let Some(first) = rest.iter().next() else {
            continue;
        };
        // The side holding `first` ranges over proper subsets of `rest` containing it.
        let others = rest.without(first);
        for side in others.subsets() {
            if side == others {
                continue;
            }
            let v1 = shared.union(side).with(first);
            let v2 = shared.union(rest.difference(side.with(first)));
            out.insert(complete_edges(v1, n).union(complete_edges(v2, n)));
        }
    }
    Ok(out.into_iter().collect())
}

/// `H_m^(1)(V) = {Δ_v^A : |A| = m - 1}`.
pub fn hm1_family(n: usize, m: usize) -> Result<Vec<EdgeSet>> {
    hm1_family_on(VertexSet::full(n), n, m)
}

/// `H_m^(1)` over the complete graph on `universe`; empty when `|universe| <= m`.
pub fn hm1_family_on(universe: VertexSet, n: usize, m: usize) -> Result<Vec<EdgeSet>> {
    check_dims(universe, m)?;
    let mut out = BTreeSet::new();
    if universe.len() > m {
        for v in universe.iter() {
            for a in universe.without(v).subsets_of_size(m - 1) {
                out.insert(delta_on(universe, v, a, n)?);
            }
        }
    }
    Ok(out.into_iter().collect())
}

/// `E ∪ {aw : a ∈ anchors}` for a vertex `w` outside the support of `E`.
pub fn zero_extension(e: EdgeSet, anchors: VertexSet, w: VertexId) -> Result<EdgeSet> {
    let n = e.n();
    check_vertex(w, n)?;
    let supp = e.support();
    if supp.contains(w) {
        return Err(Error::VertexInSet(w));
    }
    if !anchors.is_subset(supp) {
        return Err(Error::AnchorsOutsideSupport);
    }
    let mut out = e;
    for a in anchors.iter() {
        out.insert(edge_rank(Edge::new(a, w)?, n)?);
    }
    Ok(out)
}
