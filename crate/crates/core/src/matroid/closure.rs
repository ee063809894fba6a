//! Closure operators as explicit tables, their axiom validator, and the
//! basis-to-closure translation through hyperplanes.

use crate::error::{Error, Result};
use crate::ground::{BitIter, EdgeSet};
use crate::report::{AxiomReport, Scope, Violation};

use super::{submasks, validate_basis_family, Matroid};

/// Largest ground set a closure table is built for (2^15 subsets).
pub const CLOSURE_CAP: usize = 15;

/// A set function `2^S -> 2^S` tabulated over every subset of its ground `S`.
#[derive(Clone, PartialEq, Eq)]
pub struct ClosureOperator {
    ground: EdgeSet,
    elems: Vec<usize>,
    table: Vec<u128>,
}

impl std::fmt::Debug for ClosureOperator {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("ClosureOperator")
            .field("ground", &self.ground)
            .finish_non_exhaustive()
    }
}

impl ClosureOperator {
    /// Tabulates `f` on every subset of `ground`; images are intersected with the ground.
    pub fn from_fn(ground: EdgeSet, mut f: impl FnMut(EdgeSet) -> EdgeSet) -> Result<Self> {
        let elems: Vec<usize> = ground.indices().collect();
        if elems.len() > CLOSURE_CAP {
            return Err(Error::cap("closure table", elems.len(), CLOSURE_CAP));
        }
        let n = ground.n();
        let mut op = ClosureOperator {
            ground,
            elems,
            table: Vec::new(),
        };
        op.table = (0..1usize << op.elems.len())
            .map(|idx| f(op.expand(n, idx)).intersection(ground).bits())
            .collect();
        Ok(op)
    }

    /// The closure of a matroid restricted to its ground.
    pub fn from_matroid(m: &Matroid) -> Result<Self> {
        Self::from_fn(m.ground(), |x| m.closure(x))
    }

    fn compress(&self, x: EdgeSet) -> usize {
        self.elems
            .iter()
            .enumerate()
            .filter(|&(_, &e)| x.contains(e))
            .fold(0, |acc, (i, _)| acc | 1 << i)
    }

    fn expand(&self, n: usize, idx: usize) -> EdgeSet {
        EdgeSet::from_bits(
            n,
            BitIter(idx as u128).fold(0, |acc, i| acc | 1u128 << self.elems[i]),
        )
    }

    pub fn ground(&self) -> EdgeSet {
        self.ground
    }

    pub fn apply(&self, a: EdgeSet) -> EdgeSet {
        EdgeSet::from_bits(self.ground.n(), self.table[self.compress(a)])
    }

    /// Minimal sets whose closure is the whole ground, i.e. the bases of the
    /// matroid this operator defines.
    pub fn bases(&self) -> Vec<EdgeSet> {
        let mut out: Vec<EdgeSet> = submasks(self.ground.n(), self.ground)
            .filter(|&x| {
                self.apply(x) == self.ground
                    && x.indices().all(|e| !self.apply(x.without(e)).contains(e))
            })
            .collect();
        out.sort();
        out
    }
}

/// Checks extensivity, monotonicity, idempotence and exchange over every subset.
pub fn validate_closure_axioms(sigma: &ClosureOperator, n: usize) -> Result<AxiomReport> {
    let ground = sigma.ground();
    if ground.n() != n {
        return Err(Error::Parse(format!(
            "closure ground lives on {} vertices, not {n}",
            ground.n()
        )));
    }
    let mut report = AxiomReport::new("closure", Scope::Exhaustive);
    let mut held = [true; 4];
    for a in submasks(n, ground) {
        let sa = sigma.apply(a);
        if !a.is_subset(sa) {
            held[0] = false;
            report.push(Violation::new("extensive").set("A", a).set("sigma(A)", sa));
        }
        for y in ground.difference(a).indices() {
            let b = a.with(y);
            let sb = sigma.apply(b);
            if !sa.is_subset(sb) {
                held[1] = false;
                report.push(Violation::new("monotone").set("A", a).set("B", b));
            }
            // x in sigma(A + y) but not in sigma(A) forces y into sigma(A + x).
            for x in sb.difference(sa).indices() {
                if x != y && !sigma.apply(a.with(x)).contains(y) {
                    held[3] = false;
                    let ex = EdgeSet::from_bits(n, 1 << x);
                    let ey = EdgeSet::from_bits(n, 1 << y);
                    report.push(
                        Violation::new("exchange")
                            .set("A", a)
                            .set("x", ex)
                            .set("y", ey),
                    );
                }
            }
        }
        if sigma.apply(sa) != sa {
            held[2] = false;
            report.push(Violation::new("idempotent").set("A", a).set("sigma(A)", sa));
        }
    }
    for (name, ok) in ["extensive", "monotone", "idempotent", "exchange"]
        .iter()
        .zip(held)
    {
        report.condition(name, ok);
    }
    Ok(report.finish())
}

/// The operator sending `A` to the intersection of all hyperplanes containing
/// it, where hyperplanes are the maximal sets containing no basis.
pub fn closure_from_bases(n: usize, ground: EdgeSet, bases: &[EdgeSet]) -> Result<ClosureOperator> {
    validate_basis_family(bases)?;
    if bases.iter().any(|b| !b.is_subset(ground)) {
        return Err(Error::BasisOutsideGround);
    }
    let hyperplanes = hyperplanes_from_bases(n, ground, bases)?;
    ClosureOperator::from_fn(ground, |a| {
        hyperplanes
            .iter()
            .filter(|h| a.is_subset(**h))
            .fold(ground, |acc, h| acc.intersection(*h))
    })
}

/// Maximal subsets of `ground` that contain no basis.
pub fn hyperplanes_from_bases(
    n: usize,
    ground: EdgeSet,
    bases: &[EdgeSet],
) -> Result<Vec<EdgeSet>> {
    let k = ground.len();
    if k > CLOSURE_CAP {
        return Err(Error::cap("hyperplane table", k, CLOSURE_CAP));
    }
    let elems: Vec<usize> = ground.indices().collect();
    let compress = |x: EdgeSet| {
        elems
            .iter()
            .enumerate()
            .filter(|&(_, &e)| x.contains(e))
            .fold(0usize, |acc, (i, _)| acc | 1 << i)
    };
    let mut spanning = vec![false; 1 << k];
    for b in bases {
        spanning[compress(*b)] = true;
    }
    for idx in 0..1usize << k {
        if !spanning[idx] {
            spanning[idx] = BitIter(idx as u128).any(|i| spanning[idx & !(1 << i)]);
        }
    }
    let full = (1usize << k) - 1;
    let mut out: Vec<EdgeSet> = (0..1usize << k)
        .filter(|&idx| {
            !spanning[idx] && BitIter((full & !idx) as u128).all(|i| spanning[idx | 1 << i])
        })
        .map(|idx| {
            EdgeSet::from_bits(
                n,
                BitIter(idx as u128).fold(0, |acc, i| acc | 1u128 << elems[i]),
            )
        })
        .collect();
    out.sort();
    Ok(out)
}
