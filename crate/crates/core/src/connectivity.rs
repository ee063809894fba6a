//! Vertex connectivity of `(V(E), E)` by exhaustive cut enumeration.

use crate::error::{Error, Result};
use crate::ground::{EdgeSet, VertexSet};

/// Whether the graph induced on `keep` by `e` is connected (vacuously true when empty).
pub fn is_connected_on(e: EdgeSet, keep: VertexSet) -> bool {
    let Some(start) = keep.iter().next() else {
        return true;
    };
    let mut seen = VertexSet::singleton(start);
    let mut frontier = vec![start];
    let endpoints: Vec<_> = e
        .edges()
        .filter(|ed| keep.contains(ed.u()) && keep.contains(ed.v()))
        .map(|ed| (ed.u(), ed.v()))
        .collect();
    while let Some(x) = frontier.pop() {
        for &(u, v) in &endpoints {
            let y = if u == x {
                v
            } else if v == x {
                u
            } else {
                continue;
            };
            if !seen.contains(y) {
                seen.insert(y);
                frontier.push(y);
            }
        }
    }
    seen == keep
}

/// True iff `(V(E), E)` has at least `k + 1` vertices and removing any fewer
/// than `k` vertices leaves it connected.
pub fn is_k_vertex_connected(e: EdgeSet, k: usize) -> Result<bool> {
    Ok(find_small_cut(e, k)?.is_none() && e.support().len() > k)
}

/// A vertex cut of size `< k`, if one exists.
pub fn find_small_cut(e: EdgeSet, k: usize) -> Result<Option<VertexSet>> {
    if e.is_empty() {
        return Err(Error::EmptyEdgeSet);
    }
    let supp = e.support();
    for size in 0..k.min(supp.len()) {
        for cut in supp.subsets_of_size(size) {
            if !is_connected_on(e, supp.difference(cut)) {
                return Ok(Some(cut));
            }
        }
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ground::{complete_edges, VertexSet};

    #[test]
    fn examples() {
        let k4 = EdgeSet::full(4);
        assert!(is_k_vertex_connected(k4, 3).unwrap());
        assert!(!is_k_vertex_connected(k4, 4).unwrap());
        let path = EdgeSet::from_pairs(3, &[(0, 1), (1, 2)]).unwrap();
        assert!(!is_k_vertex_connected(path, 2).unwrap());
        assert_eq!(
            find_small_cut(path, 2).unwrap(),
            Some(VertexSet::singleton(1))
        );
        assert!(is_k_vertex_connected(path, 1).unwrap());
        assert_eq!(
            is_k_vertex_connected(EdgeSet::empty(3), 1),
            Err(Error::EmptyEdgeSet)
        );
    }

    #[test]
    fn wheel_on_five_vertices_is_three_connected() {
        // Hub 4 joined to the 4-cycle 0-1-2-3.
        let w = EdgeSet::from_pairs(
            5,
            &[
                (0, 1),
                (1, 2),
                (2, 3),
                (0, 3),
                (0, 4),
                (1, 4),
                (2, 4),
                (3, 4),
            ],
        )
        .unwrap();
        assert!(is_k_vertex_connected(w, 3).unwrap());
        assert!(!is_k_vertex_connected(w, 4).unwrap());
    }

    #[test]
    fn disconnected_and_isolated_vertices() {
        let two = EdgeSet::from_pairs(6, &[(0, 1), (2, 3)]).unwrap();
        assert!(!is_k_vertex_connected(two, 1).unwrap());
        // Isolated vertex 5 is ignored; only the support matters.
        let tri = complete_edges(VertexSet::from_iter([0, 1, 2]), 6);
        assert!(is_k_vertex_connected(tri, 2).unwrap());
    }
}
