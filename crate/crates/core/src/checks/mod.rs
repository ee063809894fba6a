//! Checkers for abstract rigidity matroids: the defining conditions C1/C2, the
//! equivalent axiom systems (three-condition test, cocircuits, hyperplanes,
//! bases, circuits), and the lemmas about `H_m(V)`, rigid sets and restrictions.
//!
//! Every checker returns an [`AxiomReport`] whose violations carry named
//! witness sets; [`recheck_violation`] re-decides a single witness from
//! scratch.

mod conditions;
mod lemmas;
mod routes;

use crate::error::{Error, Result};
use crate::ground::{complete_edges, EdgeSet, VertexSet};
use crate::matroid::Matroid;
use crate::report::{AxiomReport, Scope, Violation};
use crate::rigidity::rank_formula;

pub use conditions::{
    c1_by_supports, c2_by_supports, check_c1, check_c2, EXHAUSTIVE_PAIR_VERTICES,
};
pub use lemmas::{
    bottom_conclusion, check_bottom, check_connect, check_extension_lemma, check_hm_subset,
    check_theorem_2dim, check_theorem_2dim_along, check_twoparts, laman_check, laman_check_matroid,
    theorem_2dim_holds,
};
pub use routes::{check_b, check_d, check_h, check_z, is_arm_prop6};

/// Suite names accepted by [`run_suite`], in canonical order.
pub const SUITES: [&str; 13] = [
    "prop6", "C", "D", "H", "B", "Z", "laman", "ext", "hm", "connect", "2dim", "twoparts", "bottom",
];

/// `σ(E) = K(V(E))`.
pub fn is_rigid(m: &Matroid, e: EdgeSet) -> bool {
    m.closure(e) == complete_edges(e.support(), m.n())
}

pub(crate) fn require_dimension(matroid: &Matroid, m: usize) -> Result<()> {
    if m == 0 || matroid.n() < m + 1 {
        return Err(Error::DimensionTooLarge { n: matroid.n(), m });
    }
    Ok(())
}

/// Runs one named suite. `C` is the conjunction of C1 and C2.
pub fn run_suite(name: &str, matroid: &Matroid, m: usize, scope: Scope) -> Result<AxiomReport> {
    match name {
        "prop6" => is_arm_prop6(matroid, m),
        "C" => Ok(AxiomReport::combine(
            "C",
            vec![check_c1(matroid, m, scope)?, check_c2(matroid, m, scope)?],
        )),
        "C1" => check_c1(matroid, m, scope),
        "C2" => check_c2(matroid, m, scope),
        "D" => check_d(matroid, m),
        "H" => check_h(matroid, m),
        "B" => check_b(matroid, m),
        "Z" => check_z(matroid, m),
        "laman" => laman_check_matroid(matroid, m),
        "ext" => check_extension_lemma(matroid, m),
        "hm" => check_hm_subset(matroid, m),
        "connect" => check_connect(matroid, m, scope),
        "2dim" => check_theorem_2dim(matroid, m),
        "twoparts" => check_twoparts(matroid, m),
        "bottom" => check_bottom(matroid, m),
        other => Err(Error::UnknownSuite(other.to_owned())),
    }
}

fn low_valence(e: EdgeSet, min: usize) -> bool {
    e.support().iter().any(|v| e.valence(v) < min)
}

fn full_valence_count(h: EdgeSet, n: usize) -> usize {
    h.support()
        .iter()
        .filter(|&v| h.valence(v) == n - 1)
        .count()
}

fn is_zero_extension(e: EdgeSet, x: EdgeSet) -> Option<usize> {
    if !e.is_subset(x) {
        return None;
    }
    let added = x.difference(e);
    let fresh = x.support().difference(e.support());
    if fresh.len() != 1 {
        return if added.is_empty() { Some(0) } else { None };
    }
    let w = fresh.iter().next()?;
    added.edges().all(|ed| ed.contains(w)).then(|| added.len())
}

/// Decides whether the witness `v` still violates its condition for
/// `(matroid, m)`, recomputing everything from the matroid alone.
pub fn recheck_violation(matroid: &Matroid, m: usize, v: &Violation) -> Result<bool> {
    let n = matroid.n();
    let set = |name: &str| {
        v.edge_set(name)
            .ok_or_else(|| Error::Parse(format!("witness for {} lacks set {name}", v.condition)))
    };
    let verts = |name: &str| {
        v.vertex_set(name).ok_or_else(|| {
            Error::Parse(format!("witness for {} lacks vertices {name}", v.condition))
        })
    };
    Ok(match v.condition.as_str() {
        "C1" => {
            let (e, f) = (set("E")?, set("F")?);
            let allowed = complete_edges(e.support(), n).union(complete_edges(f.support(), n));
            e.support().intersection(f.support()).len() < m
                && !matroid.closure(e.union(f)).is_subset(allowed)
        }
        "C2" => {
            let (e, f) = (set("E")?, set("F")?);
            is_rigid(matroid, e)
                && is_rigid(matroid, f)
                && e.support().intersection(f.support()).len() >= m
                && !is_rigid(matroid, e.union(f))
        }
        "prop6.i" | "D2" => !matroid.is_cocircuit(set("C")?),
        "prop6.ii" | "Z2" => !matroid.is_circuit(set("K")?),
        "prop6.iii" => matroid.full_rank() != rank_formula(n, m),
        "D1" => {
            let c = set("C")?;
            matroid.is_cocircuit(c) && c.support().len() + m <= n
        }
        "H1" => {
            let h = set("H")?;
            matroid.is_hyperplane(h) && full_valence_count(h, n) >= m
        }
        "H2" | "hm" => !matroid.is_hyperplane(set("H")?),
        "B1" => {
            let b = set("B")?;
            matroid.is_basis(b) && (b.support() != VertexSet::full(n) || low_valence(b, m))
        }
        "B2" => !matroid.is_basis(set("B")?),
        "Z1" | "ext.i" => {
            let c = set("C")?;
            matroid.is_circuit(c) && low_valence(c, m + 1)
        }
        "laman" => {
            let (f, u) = (set("F")?, verts("U")?);
            let induced = f.intersection(complete_edges(u, n));
            u.len() >= m && induced.len() + m * (m + 1) / 2 > m * u.len()
        }
        "ext.ii" => {
            let (e, x) = (set("E")?, set("X")?);
            matches!(is_zero_extension(e, x), Some(k) if k <= m)
                && matroid.is_independent(e)
                && !matroid.is_independent(x)
        }
        "ext.iii" => {
            let (e, x) = (set("E")?, set("X")?);
            matches!(is_zero_extension(e, x), Some(k) if k >= m)
                && is_rigid(matroid, e)
                && !is_rigid(matroid, x)
                && c2_by_supports(matroid, m).passed
        }
        "connect" => {
            let e = set("E")?;
            is_rigid(matroid, e)
                && e.support().len() > m
                && !crate::connectivity::is_k_vertex_connected(e, m)?
        }
        "2dim" => {
            let (h, x) = (set("H")?, verts("X")?);
            !matroid.restrict_to_vertices(x).is_hyperplane(h)
        }
        "twoparts.closed" => !matroid.is_flat(set("K")?),
        "twoparts.rank" => {
            let k = set("K")?;
            matroid.rank(k) + m != matroid.full_rank()
        }
        "bottom" => !matroid.is_independent(set("K")?),
        "circuit-cocircuit" => {
            let (c, d) = (set("C")?, set("D")?);
            matroid.is_circuit(c) && matroid.is_cocircuit(d) && c.intersection(d).len() == 1
        }
        other => return Err(Error::UnknownSuite(other.to_owned())),
    })
}
