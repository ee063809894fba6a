//! Finite matroids whose ground set is (a subset of) the edge set `K(V)`.
//!
//! A [`Matroid`] is an immutable independence/rank oracle over one of three
//! backends: an explicit basis family, an exact linear representation, or the
//! cycle matroid of `K(V)`. Ground sets of at most [`TABLE_CAP`] elements get a
//! lazily built table of all subset ranks, which every family enumeration
//! (circuits, hyperplanes, ...) runs on.

mod closure;
mod json;
mod linear;
mod table;

use std::collections::{BTreeSet, HashSet};
use std::sync::{Arc, OnceLock};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::ground::{EdgeSet, VertexSet};
use crate::report::{AxiomReport, Scope, Violation};

pub use closure::{
    closure_from_bases, hyperplanes_from_bases, validate_closure_axioms, ClosureOperator,
    CLOSURE_CAP,
};
pub use json::{parse_rational, rational_to_string, MatroidJson};
pub use linear::{CrossCheckStats, LinearRep, DEFAULT_PRIME_SEED};
pub use table::TABLE_CAP;

use table::RankTable;

/// Ground sets up to this many elements are small enough for eager table building on any query.
const EAGER_TABLE: usize = 15;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum BackendKind {
    Bases,
    Linear,
    Cycle,
}

pub(crate) enum Backend {
    Bases(Vec<EdgeSet>),
    Linear(LinearRep),
    Cycle,
}

struct Inner {
    n: usize,
    /// Ground of the backend; restrictions share it but may shrink `Matroid::ground`.
    base: EdgeSet,
    backend: Backend,
    table: OnceLock<Option<RankTable>>,
}

/// Immutable matroid on a ground set `ground ⊆ K(V)`.
#[derive(Clone)]
pub struct Matroid {
    inner: Arc<Inner>,
    ground: EdgeSet,
}

impl std::fmt::Debug for Matroid {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("Matroid")
            .field("n", &self.n())
            .field("backend", &self.backend_kind())
            .field("ground", &self.ground)
            .field("rank", &self.full_rank())
            .finish()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum FamilyKind {
    Circuits,
    Cocircuits,
    Hyperplanes,
    Bases,
    Flats,
}

/// A derived family of a matroid, sorted by (cardinality, bit pattern).
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FamilyReport {
    pub kind: FamilyKind,
    pub members: Vec<EdgeSet>,
}

impl FamilyReport {
    fn new(kind: FamilyKind, mut members: Vec<EdgeSet>) -> Self {
        members.sort();
        members.dedup();
        FamilyReport { kind, members }
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, e: &EdgeSet) -> bool {
        self.members.binary_search(e).is_ok()
    }

    pub fn as_set(&self) -> BTreeSet<EdgeSet> {
        self.members.iter().copied().collect()
    }
}

/// Checks the basis axioms: nonempty, equicardinal, and the exchange property.
pub fn validate_basis_family(bases: &[EdgeSet]) -> Result<()> {
    let first = bases.first().ok_or(Error::EmptyFamily)?;
    if let Some(b) = bases.iter().find(|b| b.len() != first.len()) {
        return Err(Error::UnequalCardinality(first.len(), b.len()));
    }
    let set: HashSet<EdgeSet> = bases.iter().copied().collect();
    for &b1 in &set {
        for &b2 in &set {
            for x in b1.difference(b2).indices() {
                let ok = b2
                    .difference(b1)
                    .indices()
                    .any(|y| set.contains(&b1.without(x).with(y)));
                if !ok {
                    return Err(Error::ExchangeViolation { b1, b2, x });
                }
            }
        }
    }
    Ok(())
}

fn cycle_rank(x: EdgeSet) -> usize {
    let n = x.n();
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(p: &mut [usize], mut a: usize) -> usize {
        while p[a] != a {
            p[a] = p[p[a]];
            a = p[a];
        }
        a
    }
    let mut rank = 0;
    for e in x.edges() {
        let (a, b) = (find(&mut parent, e.u()), find(&mut parent, e.v()));
        if a != b {
            parent[a] = b;
            rank += 1;
        }
    }
    rank
}

/// Iterates every subset of `mask` in increasing bit order.
pub(crate) fn submasks(n: usize, mask: EdgeSet) -> impl Iterator<Item = EdgeSet> {
    let m = mask.bits();
    let mut next = Some(0u128);
    std::iter::from_fn(move || {
        let cur = next?;
        next = if cur == m {
            None
        } else {
            Some((cur | !m).wrapping_add(1) & m)
        };
        Some(EdgeSet::from_bits(n, cur))
    })
}

impl Matroid {
    fn with_backend(n: usize, base: EdgeSet, backend: Backend) -> Self {
        Matroid {
            inner: Arc::new(Inner {
                n,
                base,
                backend,
                table: OnceLock::new(),
            }),
            ground: base,
        }
    }

    /// Matroid on `K(V)` with the given basis family, validated eagerly.
    pub fn from_bases(n: usize, bases: Vec<EdgeSet>) -> Result<Self> {
        Self::from_bases_on(n, EdgeSet::full(n), bases)
    }

    /// Matroid on `ground ⊆ K(V)` with the given basis family, validated eagerly.
    pub fn from_bases_on(n: usize, ground: EdgeSet, bases: Vec<EdgeSet>) -> Result<Self> {
        validate_basis_family(&bases)?;
        if bases.iter().any(|b| !b.is_subset(ground)) {
            return Err(Error::BasisOutsideGround);
        }
        Ok(Self::from_bases_unchecked(n, ground, bases))
    }

    pub(crate) fn from_bases_unchecked(n: usize, ground: EdgeSet, mut bases: Vec<EdgeSet>) -> Self {
        bases.sort();
        bases.dedup();
        Self::with_backend(n, ground, Backend::Bases(bases))
    }

    /// Linear matroid of the rows (one per edge of `K(V)`, in edge order).
    pub fn from_linear(
        n: usize,
        rows: Vec<Vec<num_rational::BigRational>>,
        prime_seed: u64,
    ) -> Result<Self> {
        if rows.len() != crate::ground::edge_count(n) {
            return Err(Error::Parse(format!(
                "linear representation needs {} rows, got {}",
                crate::ground::edge_count(n),
                rows.len()
            )));
        }
        let width = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|r| r.len() != width) {
            return Err(Error::Parse("ragged matrix".into()));
        }
        Ok(Self::with_backend(
            n,
            EdgeSet::full(n),
            Backend::Linear(LinearRep::new(rows, prime_seed)),
        ))
    }

    /// The cycle (graphic) matroid of `K(V)`.
    pub fn cycle(n: usize) -> Self {
        Self::with_backend(n, EdgeSet::full(n), Backend::Cycle)
    }

    /// Uniform matroid `U_{r, |ground|}` on the given ground.
    pub fn uniform_on(n: usize, ground: EdgeSet, r: usize) -> Result<Self> {
        let elems: Vec<usize> = ground.indices().collect();
        if elems.len() > TABLE_CAP {
            return Err(Error::cap("uniform ground", elems.len(), TABLE_CAP));
        }
        let mut bases = Vec::new();
        crate::ground::combinations(&elems, r.min(elems.len()), &mut |c| {
            bases.push(EdgeSet::from_indices(n, c.iter().copied()).expect("in range"));
        });
        Ok(Self::from_bases_unchecked(n, ground, bases))
    }

    pub fn uniform(n: usize, r: usize) -> Result<Self> {
        Self::uniform_on(n, EdgeSet::full(n), r)
    }

    pub fn n(&self) -> usize {
        self.inner.n
    }

    pub fn ground(&self) -> EdgeSet {
        self.ground
    }

    pub fn backend_kind(&self) -> BackendKind {
        match self.inner.backend {
            Backend::Bases(_) => BackendKind::Bases,
            Backend::Linear(_) => BackendKind::Linear,
            Backend::Cycle => BackendKind::Cycle,
        }
    }

    pub fn linear_rep(&self) -> Option<&LinearRep> {
        match &self.inner.backend {
            Backend::Linear(l) => Some(l),
            _ => None,
        }
    }

    pub(crate) fn backend(&self) -> &Backend {
        &self.inner.backend
    }

    pub fn cross_check_stats(&self) -> Option<CrossCheckStats> {
        self.linear_rep().map(LinearRep::stats)
    }

    fn backend_rank(&self, x: EdgeSet) -> usize {
        match &self.inner.backend {
            Backend::Bases(bs) => bs
                .iter()
                .map(|b| b.intersection(x).len())
                .max()
                .unwrap_or(0),
            Backend::Linear(l) => l.rank(x),
            Backend::Cycle => cycle_rank(x),
        }
    }

    fn table(&self) -> Option<&RankTable> {
        self.inner
            .table
            .get_or_init(|| {
                let base = self.inner.base;
                if base.len() > TABLE_CAP {
                    return None;
                }
                Some(match &self.inner.backend {
                    Backend::Bases(bs) => RankTable::from_bases(base, bs),
                    _ => RankTable::from_independence(base, |x| self.backend_rank(x) == x.len()),
                })
            })
            .as_ref()
    }

    fn table_if_cheap(&self) -> Option<&RankTable> {
        if self.inner.base.len() <= EAGER_TABLE {
            self.table()
        } else {
            self.inner.table.get().and_then(Option::as_ref)
        }
    }

    /// Fails with `CapExceeded` unless subset enumeration over the ground is allowed.
    pub fn require_enumerable(&self, what: &str) -> Result<()> {
        if self.ground.len() > TABLE_CAP {
            return Err(Error::cap(what, self.ground.len(), TABLE_CAP));
        }
        self.table();
        Ok(())
    }

    /// Rank of `x ∩ ground`.
    pub fn rank(&self, x: EdgeSet) -> usize {
        let x = x.intersection(self.ground);
        match self.table_if_cheap() {
            Some(t) => t.rank(x),
            None => self.backend_rank(x),
        }
    }

    pub fn full_rank(&self) -> usize {
        self.rank(self.ground)
    }

    pub fn is_independent(&self, x: EdgeSet) -> bool {
        x.is_subset(self.ground) && self.rank(x) == x.len()
    }

    pub fn is_spanning(&self, x: EdgeSet) -> bool {
        self.rank(x) == self.full_rank()
    }

    pub fn is_basis(&self, x: EdgeSet) -> bool {
        self.is_independent(x) && x.len() == self.full_rank()
    }

    /// Largest superset of `x` inside the ground with the same rank.
    pub fn closure(&self, x: EdgeSet) -> EdgeSet {
        let x = x.intersection(self.ground);
        let r = self.rank(x);
        self.ground
            .difference(x)
            .indices()
            .filter(|&e| self.rank(x.with(e)) == r)
            .fold(x, |acc, e| acc.with(e))
    }

    pub fn is_flat(&self, x: EdgeSet) -> bool {
        x.is_subset(self.ground) && self.closure(x) == x
    }

    pub fn is_hyperplane(&self, h: EdgeSet) -> bool {
        let r = self.full_rank();
        r > 0 && self.is_flat(h) && self.rank(h) + 1 == r
    }

    pub fn is_cocircuit(&self, c: EdgeSet) -> bool {
        c.is_subset(self.ground) && self.is_hyperplane(self.ground.difference(c))
    }

    /// Minimal dependent set test.
    pub fn is_circuit(&self, c: EdgeSet) -> bool {
        if c.is_empty() || !c.is_subset(self.ground) {
            return false;
        }
        let k = c.len();
        self.rank(c) == k - 1 && c.indices().all(|e| self.rank(c.without(e)) == k - 1)
    }

    /// Every subset of the ground, in increasing bit order.
    pub fn subsets(&self) -> Result<impl Iterator<Item = EdgeSet>> {
        self.require_enumerable("subset enumeration")?;
        Ok(submasks(self.n(), self.ground))
    }

    pub fn bases(&self) -> Result<FamilyReport> {
        if let Backend::Bases(bs) = &self.inner.backend {
            if self.ground == self.inner.base {
                return Ok(FamilyReport::new(FamilyKind::Bases, bs.clone()));
            }
        }
        let r = self.full_rank();
        let out = self
            .subsets()?
            .filter(|x| x.len() == r && self.rank(*x) == r)
            .collect();
        Ok(FamilyReport::new(FamilyKind::Bases, out))
    }

    pub fn circuits(&self) -> Result<FamilyReport> {
        let out = self.subsets()?.filter(|&c| self.is_circuit(c)).collect();
        Ok(FamilyReport::new(FamilyKind::Circuits, out))
    }

    /// Hyperplanes as closures of independent sets of size `r - 1`.
    pub fn hyperplanes(&self) -> Result<FamilyReport> {
        let r = self.full_rank();
        if r == 0 {
            self.require_enumerable("hyperplane enumeration")?;
            return Ok(FamilyReport::new(FamilyKind::Hyperplanes, Vec::new()));
        }
        let found: BTreeSet<EdgeSet> = self
            .subsets()?
            .filter(|x| x.len() == r - 1 && self.rank(*x) == r - 1)
            .map(|x| self.closure(x))
            .collect();
        let members: Vec<EdgeSet> = found.iter().copied().collect();
        let maximal = members
            .iter()
            .copied()
            .filter(|h| !members.iter().any(|g| g != h && h.is_subset(*g)))
            .collect();
        Ok(FamilyReport::new(FamilyKind::Hyperplanes, maximal))
    }

    pub fn cocircuits(&self) -> Result<FamilyReport> {
        let hs = self.hyperplanes()?;
        let out = hs
            .members
            .iter()
            .map(|h| self.ground.difference(*h))
            .collect();
        Ok(FamilyReport::new(FamilyKind::Cocircuits, out))
    }

    pub fn flats(&self) -> Result<FamilyReport> {
        let out = self.subsets()?.filter(|&x| self.closure(x) == x).collect();
        Ok(FamilyReport::new(FamilyKind::Flats, out))
    }

    /// Closure as the intersection of all hyperplanes containing `x` (the ground if none).
    pub fn closure_by_hyperplanes(&self, x: EdgeSet) -> Result<EdgeSet> {
        let x = x.intersection(self.ground);
        let hs = self.hyperplanes()?;
        Ok(hs
            .members
            .iter()
            .filter(|h| x.is_subset(**h))
            .fold(self.ground, |acc, h| acc.intersection(*h)))
    }

    /// Closure decided by the circuit criterion: `F` is closed iff every circuit
    /// with at most one element outside `F` lies inside `F`.
    pub fn check_flat_by_circuits(&self, f: EdgeSet) -> Result<bool> {
        let cs = self.circuits()?;
        Ok(f.is_subset(self.ground)
            && cs
                .members
                .iter()
                .all(|c| c.difference(f).len() > 1 || c.is_subset(f)))
    }

    /// Matroid whose bases are the complements (within the ground) of the bases.
    pub fn dual(&self) -> Result<Matroid> {
        let bases = self.bases()?;
        let comps = bases
            .members
            .iter()
            .map(|b| self.ground.difference(*b))
            .collect();
        Ok(Self::from_bases_unchecked(self.n(), self.ground, comps))
    }

    /// `M[T]` for `T ⊆ ground`: same rank function, smaller ground.
    pub fn restriction(&self, t: EdgeSet) -> Matroid {
        Matroid {
            inner: Arc::clone(&self.inner),
            ground: t.intersection(self.ground),
        }
    }

    /// `M[K(X)]`.
    pub fn restrict_to_vertices(&self, x: VertexSet) -> Matroid {
        self.restriction(crate::ground::complete_edges(x, self.n()))
    }

    /// `M[K(X)]` relabeled onto `K_{|X|}`, vertices of `X` keeping their order.
    pub fn induced_on_vertices(&self, x: VertexSet) -> Result<Matroid> {
        let k = x.len();
        let verts: Vec<usize> = x.iter().collect();
        let mut map = vec![None; crate::ground::edge_count(self.n())];
        for (i, &a) in verts.iter().enumerate() {
            for (j, &b) in verts.iter().enumerate().skip(i + 1) {
                let from = crate::ground::edge_rank(crate::ground::Edge::new(a, b)?, self.n())?;
                map[from] = Some(crate::ground::edge_rank(
                    crate::ground::Edge::new(i, j)?,
                    k,
                )?);
            }
        }
        let relabel = |e: EdgeSet| EdgeSet::from_indices(k, e.indices().filter_map(|i| map[i]));
        let sub = self.restrict_to_vertices(x);
        let ground = relabel(sub.ground())?;
        let bases = sub
            .bases()?
            .members
            .into_iter()
            .map(relabel)
            .collect::<Result<Vec<_>>>()?;
        Ok(Self::from_bases_unchecked(k, ground, bases))
    }

    /// Whether two matroids have the same ground and rank function.
    pub fn same_matroid(&self, other: &Matroid) -> Result<bool> {
        if self.ground != other.ground || self.n() != other.n() {
            return Ok(false);
        }
        Ok(self.subsets()?.all(|x| self.rank(x) == other.rank(x)))
    }

    /// Every maximal chain of flats from `t` up to the ground has length
    /// `rank(ground) - rank(t)`.
    pub fn verify_chain_rank(&self, t: EdgeSet) -> Result<bool> {
        if !self.is_flat(t) {
            return Err(Error::NotClosed);
        }
        let flats: Vec<EdgeSet> = self
            .flats()?
            .members
            .into_iter()
            .filter(|f| t.is_subset(*f))
            .collect();
        // Flats are sorted by cardinality, so a proper superset always comes later.
        let covers = |i: usize, j: usize| {
            flats[i] != flats[j]
                && flats[i].is_subset(flats[j])
                && !flats.iter().any(|g| {
                    *g != flats[i]
                        && *g != flats[j]
                        && flats[i].is_subset(*g)
                        && g.is_subset(flats[j])
                })
        };
        let start = flats.iter().position(|f| *f == t).expect("t is a flat");
        let top = flats
            .iter()
            .position(|f| *f == self.ground)
            .expect("ground is a flat");
        // Shortest and longest path lengths from `start` in the cover DAG.
        let mut lo = vec![usize::MAX; flats.len()];
        let mut hi = vec![0usize; flats.len()];
        lo[start] = 0;
        for j in start + 1..flats.len() {
            for i in start..j {
                if lo[i] != usize::MAX && covers(i, j) {
                    lo[j] = lo[j].min(lo[i] + 1);
                    hi[j] = hi[j].max(hi[i] + 1);
                }
            }
        }
        let want = self.full_rank() - self.rank(t);
        Ok(lo[top] == want && hi[top] == want)
    }

    /// No circuit meets a cocircuit in exactly one element.
    pub fn check_circuit_cocircuit_intersection(&self) -> Result<AxiomReport> {
        let circuits = self.circuits()?;
        let cocircuits = self.cocircuits()?;
        let mut report = AxiomReport::new("circuit-cocircuit", Scope::Exhaustive);
        for c in &circuits.members {
            for d in &cocircuits.members {
                if c.intersection(*d).len() == 1 {
                    report.push(
                        Violation::new("circuit-cocircuit")
                            .set("C", *c)
                            .set("D", *d),
                    );
                }
            }
        }
        Ok(report.finish())
    }

    /// Independent sets of a fixed cardinality (from the rank table).
    pub fn independent_sets_of_size(&self, k: usize) -> Result<Vec<EdgeSet>> {
        Ok(self
            .subsets()?
            .filter(|x| x.len() == k && self.rank(*x) == k)
            .collect())
    }
}

#[cfg(test)]
mod tests;
