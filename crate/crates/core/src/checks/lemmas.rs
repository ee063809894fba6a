//! Statements proved about abstract rigidity matroids, each checked on a
//! concrete matroid: Laman counts, 0-extensions, `H_m(V)` inclusion, rigid-set
//! connectivity, the hereditary hyperplane characterization and its lemmas.

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::connectivity::{find_small_cut, is_k_vertex_connected};
use crate::error::{Error, Result};
use crate::families::{hm1_family, hm1_family_on, hm_family, stars_minus, zero_extension};
use crate::ground::{complete_edges, EdgeSet, VertexId, VertexSet};
use crate::matroid::{submasks, Matroid, TABLE_CAP};
use crate::report::{AxiomReport, Scope, Violation};

use super::conditions::{c2_by_supports, closed_supports, random_rigid_on};
use super::{is_rigid, low_valence, require_dimension};

/// Laman's condition in dimension `m`: `|F| <= m|V(F)| - C(m+1, 2)` for every
/// `F ⊆ E` with `|V(F)| >= m`. Only induced subsets `E ∩ K(U)` need checking.
pub fn laman_check(e: EdgeSet, m: usize) -> AxiomReport {
    let mut report = AxiomReport::new("laman", Scope::Exhaustive);
    report.extend(laman_violations(e, m));
    report.finish()
}

fn laman_violations(e: EdgeSet, m: usize) -> Vec<Violation> {
    let n = e.n();
    e.support()
        .subsets()
        .filter(|u| u.len() >= m)
        .filter_map(|u| {
            let f = e.intersection(complete_edges(u, n));
            (f.len() + m * (m + 1) / 2 > m * u.len())
                .then(|| Violation::new("laman").set("F", f).verts("U", u))
        })
        .collect()
}

/// Laman's condition on every basis, hence on every independent set.
pub fn laman_check_matroid(matroid: &Matroid, m: usize) -> Result<AxiomReport> {
    require_dimension(matroid, m)?;
    let mut report = AxiomReport::new("laman", Scope::Exhaustive);
    for b in matroid.bases()?.members {
        report.extend(laman_violations(b, m));
    }
    Ok(report.finish())
}

fn precondition(suite: &str, detail: &str) -> Error {
    Error::PreconditionNotMet {
        suite: suite.to_owned(),
        detail: detail.to_owned(),
    }
}

/// (i) circuits have minimum valence `m + 1`; (ii) `k`-valent 0-extensions
/// with `k <= m` keep independence; (iii) `k`-valent 0-extensions with
/// `k >= m` keep rigidity when C2 holds. Requires every star minus `m - 1`
/// edges to be a cocircuit.
pub fn check_extension_lemma(matroid: &Matroid, m: usize) -> Result<AxiomReport> {
    require_dimension(matroid, m)?;
    let n = matroid.n();
    if stars_minus(n, m - 1)
        .into_iter()
        .any(|c| !matroid.is_cocircuit(c))
    {
        return Err(precondition(
            "ext",
            "some star minus m-1 edges is not a cocircuit",
        ));
    }
    let mut report = AxiomReport::new("ext", Scope::Exhaustive);
    let circuits = matroid.circuits()?;
    let mut held = [true; 3];
    for c in circuits.members {
        if low_valence(c, m + 1) {
            held[0] = false;
            report.push(Violation::new("ext.i").set("C", c));
        }
    }
    let c2 = c2_by_supports(matroid, m).passed;
    report.condition("C2", c2);
    for e in submasks(n, matroid.ground()) {
        let independent = matroid.is_independent(e);
        let rigid = c2 && is_rigid(matroid, e);
        if !independent && !rigid {
            continue;
        }
        let supp = e.support();
        for w in VertexSet::full(n).difference(supp).iter() {
            for anchors in supp.subsets() {
                let k = anchors.len();
                let x = zero_extension(e, anchors, w)?;
                if independent && k <= m && !matroid.is_independent(x) {
                    held[1] = false;
                    report.push(Violation::new("ext.ii").set("E", e).set("X", x));
                }
                if rigid && k >= m && !is_rigid(matroid, x) {
                    held[2] = false;
                    report.push(Violation::new("ext.iii").set("E", e).set("X", x));
                }
            }
        }
    }
    report.condition("i", held[0]);
    report.condition("ii", held[1]);
    report.condition("iii", held[2]);
    Ok(report.finish())
}

/// Every member of `H_m(V)` is a hyperplane. `strict` records whether the
/// matroid has further hyperplanes (known only when the inclusion holds).
pub fn check_hm_subset(matroid: &Matroid, m: usize) -> Result<AxiomReport> {
    require_dimension(matroid, m)?;
    let hm = hm_family(matroid.n(), m)?;
    let mut report = AxiomReport::new("hm", Scope::Exhaustive);
    for h in &hm {
        if !matroid.is_hyperplane(*h) {
            report.push(Violation::new("hm").set("H", *h));
        }
    }
    let mut report = report.finish();
    if report.passed {
        report.strict = Some(matroid.hyperplanes()?.len() > hm.len());
    }
    Ok(report)
}

fn connect_violation(e: EdgeSet, m: usize) -> Result<Option<Violation>> {
    if e.support().len() <= m || is_k_vertex_connected(e, m)? {
        return Ok(None);
    }
    let mut v = Violation::new("connect").set("E", e);
    if let Some(cut) = find_small_cut(e, m)? {
        v = v.verts("cut", cut);
    }
    Ok(Some(v))
}

/// Every rigid set on at least `m + 1` vertices is `m`-vertex-connected.
///
/// Exhaustive scope scans every subset of the ground (up to the table cap);
/// the sampled scope draws `count` rigid sets by random deletion from closed
/// complete sets.
pub fn check_connect(matroid: &Matroid, m: usize, scope: Scope) -> Result<AxiomReport> {
    require_dimension(matroid, m)?;
    let mut report = AxiomReport::new("connect", scope);
    match scope {
        Scope::Exhaustive => {
            if matroid.ground().len() > TABLE_CAP {
                return Err(Error::cap(
                    "exhaustive rigid-set scan",
                    matroid.ground().len(),
                    TABLE_CAP,
                ));
            }
            for e in matroid.subsets()? {
                if !e.is_empty() && is_rigid(matroid, e) {
                    report.extend(connect_violation(e, m)?);
                }
            }
        }
        Scope::Sampled { seed, count } => {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let closed = closed_supports(matroid, m + 1);
            for _ in 0..count {
                let Some(&s) = closed.choose(&mut rng) else {
                    break;
                };
                let e = random_rigid_on(matroid, s, &mut rng);
                report.extend(connect_violation(e, m)?);
            }
        }
    }
    Ok(report.finish())
}

fn hm1_violations(matroid: &Matroid, m: usize, x: VertexSet) -> Result<Vec<Violation>> {
    let sub = matroid.restrict_to_vertices(x);
    Ok(hm1_family_on(x, matroid.n(), m)?
        .into_iter()
        .filter(|h| !sub.is_hyperplane(*h))
        .map(|h| Violation::new("2dim").set("H", h).verts("X", x))
        .collect())
}

/// For every `X ⊆ V` with `|X| >= m + 1`, each member of `H_m^(1)(K(X))` is a
/// hyperplane of `M[K(X)]`. Smaller `X` carry an empty family.
pub fn check_theorem_2dim(matroid: &Matroid, m: usize) -> Result<AxiomReport> {
    require_dimension(matroid, m)?;
    let n = matroid.n();
    let mut report = AxiomReport::new("2dim", Scope::Exhaustive);
    for x in VertexSet::full(n).subsets().filter(|x| x.len() > m) {
        report.extend(hm1_violations(matroid, m, x)?);
    }
    Ok(report.finish())
}

/// The hereditary condition checked only on the prefixes `{v_1, .., v_j}`,
/// `j >= m + 1`, of one vertex ordering.
pub fn check_theorem_2dim_along(
    matroid: &Matroid,
    m: usize,
    order: &[VertexId],
) -> Result<AxiomReport> {
    require_dimension(matroid, m)?;
    let n = matroid.n();
    let as_set: VertexSet = order.iter().copied().collect();
    if order.len() != n || as_set != VertexSet::full(n) {
        return Err(Error::Parse(
            "vertex order must list every vertex once".into(),
        ));
    }
    let mut report = AxiomReport::new("2dim", Scope::Exhaustive);
    for j in m + 1..=n {
        report.extend(hm1_violations(
            matroid,
            m,
            order[..j].iter().copied().collect(),
        )?);
    }
    Ok(report.finish())
}

/// Boolean form of [`check_theorem_2dim`].
pub fn theorem_2dim_holds(matroid: &Matroid, m: usize) -> Result<bool> {
    Ok(check_theorem_2dim(matroid, m)?.passed)
}

fn require_hm1_closed(matroid: &Matroid, m: usize, suite: &str) -> Result<Vec<EdgeSet>> {
    let hm1 = hm1_family(matroid.n(), m)?;
    if hm1.iter().any(|h| !matroid.is_flat(*h)) {
        return Err(precondition(suite, "some member of H_m^(1) is not closed"));
    }
    Ok(hm1)
}

/// With every member of `H_m^(1)` closed, each `K(V \ v0)` is closed; if they
/// are hyperplanes, its rank is `r(K(V)) - m`.
pub fn check_twoparts(matroid: &Matroid, m: usize) -> Result<AxiomReport> {
    require_dimension(matroid, m)?;
    let n = matroid.n();
    let hm1 = require_hm1_closed(matroid, m, "twoparts")?;
    let hyperplanes = hm1.iter().all(|h| matroid.is_hyperplane(*h));
    let mut report = AxiomReport::new("twoparts", Scope::Exhaustive);
    report.condition("hyperplanes", hyperplanes);
    for v0 in 0..n {
        let k = complete_edges(VertexSet::full(n).without(v0), n);
        if !matroid.is_flat(k) {
            report.push(Violation::new("twoparts.closed").set("K", k));
        }
        if hyperplanes && matroid.rank(k) + m != matroid.full_rank() {
            report.push(Violation::new("twoparts.rank").set("K", k));
        }
    }
    Ok(report.finish())
}

/// With every member of `H_m^(1)` closed, each `K(V')` with `|V'| = m` is independent.
pub fn check_bottom(matroid: &Matroid, m: usize) -> Result<AxiomReport> {
    require_dimension(matroid, m)?;
    require_hm1_closed(matroid, m, "bottom")?;
    bottom_conclusion(matroid, m)
}

/// The conclusion of [`check_bottom`] without its precondition.
pub fn bottom_conclusion(matroid: &Matroid, m: usize) -> Result<AxiomReport> {
    require_dimension(matroid, m)?;
    let n = matroid.n();
    let mut report = AxiomReport::new("bottom", Scope::Exhaustive);
    for vp in VertexSet::full(n).subsets_of_size(m) {
        let k = complete_edges(vp, n);
        if !matroid.is_independent(k) {
            report.push(Violation::new("bottom").set("K", k));
        }
    }
    Ok(report.finish())
}
