//! Exhaustive and randomized search over small matroids on `K(V)`.
//!
//! Results are [`Finding`]s: self-contained JSON records that carry the
//! matroid in question together with the reports that make it interesting,
//! and that [`Finding::reverify`] re-checks from the serialized form alone.

mod enumerate;
mod search;

use std::collections::BTreeMap;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::checks::{
    check_hm_subset, check_theorem_2dim, is_arm_prop6, run_suite, theorem_2dim_holds,
};
use crate::error::{Error, Result};
use crate::ground::edge_count;
use crate::matroid::{Matroid, MatroidJson};
use crate::report::AxiomReport;
use crate::rigidity::rank_formula;

pub use enumerate::{enumerate_matroids, enumeration_ground, MAX_ENUM_CANDIDATES, MAX_ENUM_GROUND};
pub use search::{
    check_closing_corollary, covering_failure, matroid_from_hyperplanes, search_question,
    search_with, Probe, SearchState, EXHAUSTIVE_POOL, SEARCH_WORKERS,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Verdict {
    Counterexample,
    Discrepancy,
    EquivalenceConfirmed,
    ExhaustedNoCounterexample,
    BudgetExhausted,
}

impl Verdict {
    pub fn as_str(self) -> &'static str {
        match self {
            Verdict::Counterexample => "counterexample",
            Verdict::Discrepancy => "discrepancy",
            Verdict::EquivalenceConfirmed => "equivalence-confirmed",
            Verdict::ExhaustedNoCounterexample => "exhausted-no-counterexample",
            Verdict::BudgetExhausted => "budget-exhausted",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Mode {
    Confirm2dim,
    Question,
    Corollary,
}

/// Named counters; serialized in key order.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Stats(BTreeMap<String, u64>);

impl Stats {
    pub fn get(&self, key: &str) -> u64 {
        self.0.get(key).copied().unwrap_or(0)
    }

    pub fn set(&mut self, key: &str, value: u64) {
        self.0.insert(key.to_owned(), value);
    }

    pub fn bump(&mut self, key: &str) {
        *self.0.entry(key.to_owned()).or_insert(0) += 1;
    }

    pub fn absorb(&mut self, other: &Stats) {
        for (k, v) in &other.0 {
            *self.0.entry(k.clone()).or_insert(0) += v;
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Finding {
    pub verdict: Verdict,
    pub mode: Mode,
    pub n: usize,
    pub m: usize,
    pub seed: u64,
    pub budget: usize,
    pub matroid: Option<MatroidJson>,
    pub reports: Vec<AxiomReport>,
    pub stats: Stats,
}

impl Finding {
    pub(crate) fn new(mode: Mode, n: usize, m: usize, seed: u64, budget: usize) -> Self {
        Finding {
            verdict: Verdict::BudgetExhausted,
            mode,
            n,
            m,
            seed,
            budget,
            matroid: None,
            reports: Vec::new(),
            stats: Stats::default(),
        }
    }

    pub fn to_json_string(&self) -> String {
        serde_json::to_string_pretty(self).expect("findings serialize")
    }

    pub fn from_json_str(s: &str) -> Result<Self> {
        serde_json::from_str(s).map_err(|e| Error::Parse(e.to_string()))
    }

    /// Re-checks the finding using nothing but its own contents: every
    /// attached report is recomputed and compared, and the verdict's defining
    /// property is re-decided on the matroid.
    pub fn reverify(&self) -> Result<bool> {
        let Some(json) = &self.matroid else {
            return Ok(self.reports.is_empty()
                && !matches!(self.verdict, Verdict::Counterexample | Verdict::Discrepancy));
        };
        let matroid = Matroid::from_json(json)?;
        if matroid.n() != self.n {
            return Ok(false);
        }
        for r in &self.reports {
            if run_suite(&r.suite, &matroid, self.m, r.scope)? != *r {
                return Ok(false);
            }
        }
        let m = self.m;
        Ok(match (self.mode, self.verdict) {
            (Mode::Question, Verdict::Counterexample) => {
                check_hm_subset(&matroid, m)?.passed && !is_arm_prop6(&matroid, m)?.passed
            }
            (Mode::Corollary, Verdict::Counterexample) => {
                check_hm_subset(&matroid, m)?.passed && !check_theorem_2dim(&matroid, m)?.passed
            }
            (Mode::Confirm2dim, Verdict::Discrepancy) => {
                theorem_2dim_holds(&matroid, m)? != is_arm_prop6(&matroid, m)?.passed
            }
            _ => false,
        })
    }
}

/// Over every matroid of rank `m n - C(m+1, 2)` on `K(V)`, compares the
/// hereditary hyperplane condition with the three-condition test.
pub fn confirm_theorem_2dim(n: usize, m: usize) -> Result<Finding> {
    confirm_theorem_2dim_with(n, m, theorem_2dim_holds)
}

/// [`confirm_theorem_2dim`] with the hereditary-condition decider supplied by the caller.
pub fn confirm_theorem_2dim_with<F>(n: usize, m: usize, decide: F) -> Result<Finding>
where
    F: Fn(&Matroid, usize) -> Result<bool> + Sync,
{
    if m == 0 || n < m + 1 {
        return Err(Error::DimensionTooLarge { n, m });
    }
    let matroids: Vec<Matroid> = enumerate_matroids(edge_count(n), rank_formula(n, m))?.collect();
    let verdicts: Vec<(bool, bool)> = matroids
        .par_iter()
        .map(|mat| Ok((decide(mat, m)?, is_arm_prop6(mat, m)?.passed)))
        .collect::<Result<_>>()?;
    let mut finding = Finding::new(Mode::Confirm2dim, n, m, 0, 0);
    finding.stats.set("matroids", matroids.len() as u64);
    finding
        .stats
        .set("arms", verdicts.iter().filter(|v| v.1).count() as u64);
    let bad: Vec<usize> = (0..verdicts.len())
        .filter(|&i| verdicts[i].0 != verdicts[i].1)
        .collect();
    finding.stats.set("discrepancies", bad.len() as u64);
    finding.verdict = match bad.first() {
        None => Verdict::EquivalenceConfirmed,
        Some(&i) => {
            let mat = &matroids[i];
            finding.matroid = Some(mat.to_json());
            finding.reports = vec![check_theorem_2dim(mat, m)?, is_arm_prop6(mat, m)?];
            Verdict::Discrepancy
        }
    };
    Ok(finding)
}
