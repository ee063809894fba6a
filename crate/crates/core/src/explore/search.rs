use std::collections::HashSet;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::checks::{check_hm_subset, check_theorem_2dim, is_arm_prop6};
use crate::error::{Error, Result};
use crate::families::hm_family;
use crate::ground::EdgeSet;
use crate::matroid::{submasks, Matroid, CLOSURE_CAP};
use crate::report::AxiomReport;

use super::{Finding, Mode, Stats, Verdict};

/// Pools up to this size are searched exhaustively.
pub const EXHAUSTIVE_POOL: usize = 20;
/// Independent workers of the randomized search; fixed so results do not depend on the thread count.
pub const SEARCH_WORKERS: u64 = 8;
const PREFIX_BITS: usize = 4;

fn comparable(a: EdgeSet, b: EdgeSet) -> bool {
    a.is_subset(b) || b.is_subset(a)
}

/// Some `(H1 ∩ H2, e)` with no member containing `(H1 ∩ H2) + e`, if any.
pub fn covering_failure(ground: EdgeSet, family: &[EdgeSet]) -> Option<(EdgeSet, usize)> {
    let bits: Vec<u128> = family.iter().map(|h| h.bits()).collect();
    let mut seen = HashSet::new();
    for (i, &h1) in bits.iter().enumerate().rev() {
        for &h2 in bits[..i].iter().rev() {
            let meet = h1 & h2;
            if !seen.insert(meet) {
                continue;
            }
            let covered = bits
                .iter()
                .filter(|&&h| meet & !h == 0)
                .fold(0, |acc, &h| acc | h);
            let missing = ground.bits() & !covered;
            if missing != 0 {
                return Some((
                    EdgeSet::from_bits(ground.n(), meet),
                    missing.trailing_zeros() as usize,
                ));
            }
        }
    }
    None
}

/// The matroid on `ground` whose hyperplanes are `family`: its spanning sets
/// are the sets lying in no member.
pub fn matroid_from_hyperplanes(n: usize, ground: EdgeSet, family: &[EdgeSet]) -> Result<Matroid> {
    if ground.len() > CLOSURE_CAP {
        return Err(Error::cap(
            "hyperplane reconstruction ground",
            ground.len(),
            CLOSURE_CAP,
        ));
    }
    let spanning: Vec<EdgeSet> = submasks(n, ground)
        .filter(|x| !family.iter().any(|h| x.is_subset(*h)))
        .collect();
    let r = spanning
        .iter()
        .map(|x| x.len())
        .min()
        .ok_or(Error::EmptyFamily)?;
    let bases = spanning.into_iter().filter(|x| x.len() == r).collect();
    Matroid::from_bases_on(n, ground, bases)
}

/// A hyperplane family under construction, always containing `required`.
#[derive(Debug, Clone)]
pub struct SearchState {
    pub n: usize,
    pub m: usize,
    pub ground: EdgeSet,
    pub required: Vec<EdgeSet>,
    pub candidate: Vec<EdgeSet>,
    pub stats: Stats,
}

impl SearchState {
    pub fn new(n: usize, m: usize) -> Result<Self> {
        let required = hm_family(n, m)?;
        Ok(SearchState {
            n,
            m,
            ground: EdgeSet::full(n),
            candidate: required.clone(),
            required,
            stats: Stats::default(),
        })
    }

    /// Proper subsets of the ground incomparable with every required member.
    pub fn pool(&self) -> Vec<EdgeSet> {
        submasks(self.n, self.ground)
            .filter(|x| *x != self.ground && !self.required.iter().any(|h| comparable(*x, *h)))
            .collect()
    }

    fn reset(&mut self) {
        self.candidate.clone_from(&self.required);
    }

    fn admits(&self, x: EdgeSet) -> bool {
        x != self.ground && !self.candidate.iter().any(|h| comparable(x, *h))
    }
}

/// Decides whether a candidate matroid is a hit, returning the reports that show it.
pub type Probe = fn(&Matroid, usize) -> Result<Option<Vec<AxiomReport>>>;

fn question_probe(matroid: &Matroid, m: usize) -> Result<Option<Vec<AxiomReport>>> {
    let hm = check_hm_subset(matroid, m)?;
    let prop6 = is_arm_prop6(matroid, m)?;
    Ok((hm.passed && !prop6.passed).then(|| vec![hm, prop6]))
}

fn corollary_probe(matroid: &Matroid, m: usize) -> Result<Option<Vec<AxiomReport>>> {
    let hm = check_hm_subset(matroid, m)?;
    let hered = check_theorem_2dim(matroid, m)?;
    Ok((hm.passed && !hered.passed).then(|| vec![hm, hered]))
}

struct Hit {
    matroid: Matroid,
    reports: Vec<AxiomReport>,
}

/// Builds and probes a complete family; `None` when the family is not a
/// hyperplane family or the probe finds nothing.
fn test_family(state: &mut SearchState, probe: Probe) -> Result<Option<Hit>> {
    if covering_failure(state.ground, &state.candidate).is_some() {
        state.stats.bump("pruned");
        return Ok(None);
    }
    let Ok(matroid) = matroid_from_hyperplanes(state.n, state.ground, &state.candidate) else {
        state.stats.bump("pruned");
        return Ok(None);
    };
    state.stats.bump("tested");
    Ok(probe(&matroid, state.m)?.map(|reports| Hit { matroid, reports }))
}

fn dfs(state: &mut SearchState, pool: &[EdgeSet], i: usize, probe: Probe) -> Result<Option<Hit>> {
    state.stats.bump("nodes");
    if i == pool.len() {
        return test_family(state, probe);
    }
    if state.admits(pool[i]) {
        state.candidate.push(pool[i]);
        let hit = dfs(state, pool, i + 1, probe)?;
        state.candidate.pop();
        if hit.is_some() {
            return Ok(hit);
        }
    } else {
        state.stats.bump("pruned");
    }
    dfs(state, pool, i + 1, probe)
}

fn exhaustive(base: &SearchState, pool: &[EdgeSet], probe: Probe) -> Result<(Stats, Option<Hit>)> {
    let k = PREFIX_BITS.min(pool.len());
    let results: Vec<Result<(Stats, Option<Hit>)>> = (0u32..1 << k)
        .into_par_iter()
        .map(|prefix| {
            let mut state = base.clone();
            for (j, &x) in pool[..k].iter().enumerate() {
                if prefix >> j & 1 == 1 {
                    if !state.admits(x) {
                        state.stats.bump("pruned");
                        return Ok((state.stats, None));
                    }
                    state.candidate.push(x);
                }
            }
            let hit = dfs(&mut state, pool, k, probe)?;
            Ok((state.stats, hit))
        })
        .collect();
    merge(results)
}

fn merge(results: Vec<Result<(Stats, Option<Hit>)>>) -> Result<(Stats, Option<Hit>)> {
    let mut stats = Stats::default();
    let mut first = None;
    for r in results {
        let (s, hit) = r?;
        stats.absorb(&s);
        if first.is_none() {
            first = hit;
        }
    }
    Ok((stats, first))
}

/// Random subset of `x`'s complement added to `x` element by element, staying
/// proper and free of required members.
fn grow(state: &SearchState, mut x: EdgeSet, p: f64, rng: &mut ChaCha8Rng) -> EdgeSet {
    let mut outside: Vec<usize> = state.ground.difference(x).indices().collect();
    outside.shuffle(rng);
    for e in outside {
        let y = x.with(e);
        if rng.gen_bool(p) && y != state.ground && !state.required.iter().any(|h| h.is_subset(y)) {
            x = y;
        }
    }
    x
}

/// Inserts `x`, dropping optional members it contains. Fails if `x` contains a required member.
fn insert(state: &mut SearchState, x: EdgeSet) -> bool {
    if state.required.iter().any(|h| h.is_subset(x)) {
        return false;
    }
    let required = state.required.len();
    let mut kept = state.candidate.split_off(required);
    kept.retain(|h| !h.is_subset(x));
    state.candidate.extend(kept);
    state.candidate.push(x);
    true
}

fn worker(
    base: &SearchState,
    seed: u64,
    index: u64,
    budget: usize,
    probe: Probe,
) -> Result<(Stats, Option<Hit>)> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(index);
    let mut state = base.clone();
    let g = state.ground.len();
    let max_repairs = 4 * g * g;
    let bits = state.ground.bits();
    let max_restarts = (budget as u64).saturating_mul(64).max(1024);
    while state.stats.get("tested") < budget as u64 && state.stats.get("restarts") < max_restarts {
        state.reset();
        state.stats.bump("restarts");
        for _ in 0..rng.gen_range(0..=2) {
            let x = EdgeSet::from_bits(state.n, rng.gen::<u128>() & bits);
            if state.admits(x) {
                state.candidate.push(x);
            }
        }
        let mut repairs = 0;
        let p = [0.0, 0.05, 0.15, 0.3][rng.gen_range(0..4)];
        loop {
            state.stats.bump("nodes");
            match covering_failure(state.ground, &state.candidate) {
                None => {
                    if let Some(hit) = test_family(&mut state, probe)? {
                        return Ok((state.stats, Some(hit)));
                    }
                    break;
                }
                Some((meet, e)) => {
                    repairs += 1;
                    let x = grow(&state, meet.with(e), p, &mut rng);
                    if repairs > max_repairs || !insert(&mut state, x) {
                        state.stats.bump("pruned");
                        break;
                    }
                }
            }
        }
    }
    Ok((state.stats, None))
}

fn randomized(
    base: &SearchState,
    seed: u64,
    budget: usize,
    probe: Probe,
) -> Result<(Stats, Option<Hit>)> {
    let results: Vec<_> = (0..SEARCH_WORKERS)
        .into_par_iter()
        .map(|i| {
            let share = budget / SEARCH_WORKERS as usize
                + usize::from((i as usize) < budget % SEARCH_WORKERS as usize);
            worker(base, seed, i, share, probe)
        })
        .collect();
    merge(results)
}

fn search(
    mode: Mode,
    n: usize,
    m: usize,
    budget: usize,
    seed: u64,
    probe: Probe,
) -> Result<Finding> {
    if m == 0 || n < m + 2 {
        return Err(Error::DimensionTooLarge { n, m });
    }
    let ground = EdgeSet::full(n);
    if ground.len() > CLOSURE_CAP {
        return Err(Error::cap("search ground", ground.len(), CLOSURE_CAP));
    }
    let base = SearchState::new(n, m)?;
    let pool = base.pool();
    let exhausted = pool.len() <= EXHAUSTIVE_POOL;
    let (mut stats, hit) = if exhausted {
        exhaustive(&base, &pool, probe)?
    } else {
        randomized(&base, seed, budget, probe)?
    };
    stats.set("pool", pool.len() as u64);
    stats.set("required", base.required.len() as u64);
    let mut finding = Finding::new(mode, n, m, seed, budget);
    finding.stats = stats;
    finding.verdict = match hit {
        Some(hit) => {
            finding.matroid = Some(hit.matroid.to_json());
            finding.reports = hit.reports;
            Verdict::Counterexample
        }
        None if exhausted => Verdict::ExhaustedNoCounterexample,
        None => Verdict::BudgetExhausted,
    };
    Ok(finding)
}

/// Looks for a matroid on `K(V)` whose hyperplanes include `H_m(V)` but which is
/// not an `m`-dimensional abstract rigidity matroid. Small candidate pools are
/// searched exhaustively (the budget is then not consulted); larger ones by
/// seeded random repair of hyperplane families, `budget` counting fully tested candidates.
pub fn search_question(n: usize, m: usize, budget: usize, seed: u64) -> Result<Finding> {
    search(Mode::Question, n, m, budget, seed, question_probe)
}

/// The candidate search of [`search_question`] with a caller-supplied test.
pub fn search_with(n: usize, m: usize, budget: usize, seed: u64, probe: Probe) -> Result<Finding> {
    search(Mode::Question, n, m, budget, seed, probe)
}

/// Over candidates with `H_m(V)` among their hyperplanes, looks for one whose
/// restrictions `M[K(X)]` miss some member of `H_m^(1)(K(X))`.
pub fn check_closing_corollary(n: usize, m: usize, budget: usize, seed: u64) -> Result<Finding> {
    search(Mode::Corollary, n, m, budget, seed, corollary_probe)
}
