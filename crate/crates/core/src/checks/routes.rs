//! Equivalent characterizations: the three-condition test and the cocircuit,
//! hyperplane, basis and circuit axiom systems.

use crate::error::Result;
use crate::families::{bigstar_family, hm1_family, stars_minus};
use crate::ground::{complete_edges, VertexSet};
use crate::matroid::Matroid;
use crate::report::{AxiomReport, Scope, Violation};
use crate::rigidity::rank_formula;

use super::{full_valence_count, low_valence, require_dimension};

fn complete_subgraphs(n: usize, size: usize) -> Vec<crate::ground::EdgeSet> {
    VertexSet::full(n)
        .subsets_of_size(size)
        .into_iter()
        .map(|s| complete_edges(s, n))
        .collect()
}

/// (i) every star minus `m - 1` edges is a cocircuit, (ii) every `K_{m+2}` is a
/// circuit, (iii) `r(K(V)) = m|V| - C(m+1, 2)`. Passes when all three hold;
/// the `two_of_three` condition records whether at least two do.
pub fn is_arm_prop6(matroid: &Matroid, m: usize) -> Result<AxiomReport> {
    require_dimension(matroid, m)?;
    let n = matroid.n();
    let mut report = AxiomReport::new("prop6", Scope::Exhaustive);
    let mut held = [true; 3];
    for c in stars_minus(n, m - 1) {
        if !matroid.is_cocircuit(c) {
            held[0] = false;
            report.push(Violation::new("prop6.i").set("C", c));
        }
    }
    for k in complete_subgraphs(n, m + 2) {
        if !matroid.is_circuit(k) {
            held[1] = false;
            report.push(Violation::new("prop6.ii").set("K", k));
        }
    }
    if matroid.full_rank() != rank_formula(n, m) {
        held[2] = false;
        report.push(Violation::new("prop6.iii"));
    }
    report.condition("i", held[0]);
    report.condition("ii", held[1]);
    report.condition("iii", held[2]);
    report.condition("two_of_three", held.iter().filter(|&&h| h).count() >= 2);
    Ok(report.finish())
}

/// D1: every cocircuit has more than `|V| - m` vertices. D2: stars minus `m - 1` edges are cocircuits.
pub fn check_d(matroid: &Matroid, m: usize) -> Result<AxiomReport> {
    require_dimension(matroid, m)?;
    let n = matroid.n();
    let mut report = AxiomReport::new("D", Scope::Exhaustive);
    let (mut d1, mut d2) = (true, true);
    for c in matroid.cocircuits()?.members {
        if c.support().len() + m <= n {
            d1 = false;
            report.push(Violation::new("D1").set("C", c));
        }
    }
    for c in stars_minus(n, m - 1) {
        if !matroid.is_cocircuit(c) {
            d2 = false;
            report.push(Violation::new("D2").set("C", c));
        }
    }
    report.condition("D1", d1);
    report.condition("D2", d2);
    Ok(report.finish())
}

/// H1: no hyperplane has `m` vertices of valence `|V| - 1`. H2: every `Δ_v^A`, `|A| = m - 1`, is a hyperplane.
pub fn check_h(matroid: &Matroid, m: usize) -> Result<AxiomReport> {
    require_dimension(matroid, m)?;
    let n = matroid.n();
    let mut report = AxiomReport::new("H", Scope::Exhaustive);
    let (mut h1, mut h2) = (true, true);
    for h in matroid.hyperplanes()?.members {
        if full_valence_count(h, n) >= m {
            h1 = false;
            report.push(Violation::new("H1").set("H", h));
        }
    }
    for h in hm1_family(n, m)? {
        if !matroid.is_hyperplane(h) {
            h2 = false;
            report.push(Violation::new("H2").set("H", h));
        }
    }
    report.condition("H1", h1);
    report.condition("H2", h2);
    Ok(report.finish())
}

/// B1: every basis spans all of `V` with valence at least `m`. B2: every `bigstar(V')`, `|V'| = m`, is a basis.
pub fn check_b(matroid: &Matroid, m: usize) -> Result<AxiomReport> {
    require_dimension(matroid, m)?;
    let n = matroid.n();
    let mut report = AxiomReport::new("B", Scope::Exhaustive);
    let (mut b1, mut b2) = (true, true);
    for b in matroid.bases()?.members {
        if b.support() != VertexSet::full(n) || low_valence(b, m) {
            b1 = false;
            report.push(Violation::new("B1").set("B", b));
        }
    }
    for b in bigstar_family(n, m) {
        if !matroid.is_basis(b) {
            b2 = false;
            report.push(Violation::new("B2").set("B", b));
        }
    }
    report.condition("B1", b1);
    report.condition("B2", b2);
    Ok(report.finish())
}

/// Z1: no circuit has a vertex of valence below `m + 1`. Z2: every `K_{m+2}` is a circuit.
pub fn check_z(matroid: &Matroid, m: usize) -> Result<AxiomReport> {
    require_dimension(matroid, m)?;
    let n = matroid.n();
    let mut report = AxiomReport::new("Z", Scope::Exhaustive);
    let (mut z1, mut z2) = (true, true);
    for c in matroid.circuits()?.members {
        if low_valence(c, m + 1) {
            z1 = false;
            report.push(Violation::new("Z1").set("C", c));
        }
    }
    for k in complete_subgraphs(n, m + 2) {
        if !matroid.is_circuit(k) {
            z2 = false;
            report.push(Violation::new("Z2").set("K", k));
        }
    }
    report.condition("Z1", z1);
    report.condition("Z2", z2);
    Ok(report.finish())
}
