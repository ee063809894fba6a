//! Structured pass/fail results of axiom and lemma checks.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::Error;
use crate::ground::{EdgeSet, VertexSet};

/// How a universally quantified statement was discharged.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Scope {
    Exhaustive,
    Sampled { seed: u64, count: usize },
}

impl fmt::Display for Scope {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scope::Exhaustive => write!(f, "exhaustive"),
            Scope::Sampled { seed, count } => write!(f, "sampled({seed}, {count})"),
        }
    }
}

impl FromStr for Scope {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        if s == "exhaustive" {
            return Ok(Scope::Exhaustive);
        }
        let bad = || Error::Parse(format!("invalid scope {s:?}"));
        let inner = s
            .strip_prefix("sampled(")
            .and_then(|r| r.strip_suffix(')'))
            .ok_or_else(bad)?;
        let (seed, count) = inner.split_once(',').ok_or_else(bad)?;
        Ok(Scope::Sampled {
            seed: seed.trim().parse().map_err(|_| bad())?,
            count: count.trim().parse().map_err(|_| bad())?,
        })
    }
}

impl Serialize for Scope {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Scope {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        String::deserialize(d)?
            .parse()
            .map_err(serde::de::Error::custom)
    }
}

/// One failing instance of a named condition, with the sets that witness it.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Violation {
    pub condition: String,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub sets: BTreeMap<String, EdgeSet>,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub vertices: BTreeMap<String, VertexSet>,
}

impl Violation {
    pub fn new(condition: impl Into<String>) -> Self {
        Violation {
            condition: condition.into(),
            sets: BTreeMap::new(),
            vertices: BTreeMap::new(),
        }
    }

    pub fn set(mut self, name: &str, e: EdgeSet) -> Self {
        self.sets.insert(name.to_owned(), e);
        self
    }

    pub fn verts(mut self, name: &str, v: VertexSet) -> Self {
        self.vertices.insert(name.to_owned(), v);
        self
    }

    pub fn edge_set(&self, name: &str) -> Option<EdgeSet> {
        self.sets.get(name).copied()
    }

    pub fn vertex_set(&self, name: &str) -> Option<VertexSet> {
        self.vertices.get(name).copied()
    }
}

/// Witnesses kept per report; the total is recorded separately.
pub const MAX_WITNESSES: usize = 64;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AxiomReport {
    pub suite: String,
    pub passed: bool,
    pub scope: Scope,
    pub violations: Vec<Violation>,
    #[serde(default)]
    pub total_violations: usize,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub conditions: BTreeMap<String, bool>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub strict: Option<bool>,
}

impl AxiomReport {
    pub fn new(suite: impl Into<String>, scope: Scope) -> Self {
        AxiomReport {
            suite: suite.into(),
            passed: true,
            scope,
            violations: Vec::new(),
            total_violations: 0,
            conditions: BTreeMap::new(),
            strict: None,
        }
    }

    pub fn push(&mut self, v: Violation) {
        self.violations.push(v);
    }

    pub fn extend(&mut self, vs: impl IntoIterator<Item = Violation>) {
        self.violations.extend(vs);
    }

    /// Records whether a named sub-condition held.
    pub fn condition(&mut self, name: &str, held: bool) {
        self.conditions.insert(name.to_owned(), held);
    }

    /// Sorts and truncates the witness list, and sets `passed`.
    pub fn finish(mut self) -> Self {
        self.violations.sort();
        self.violations.dedup();
        self.total_violations = self.violations.len();
        self.violations.truncate(MAX_WITNESSES);
        self.passed = self.violations.is_empty();
        self
    }

    /// Merges several reports into one suite, keeping every witness.
    pub fn combine(suite: &str, parts: Vec<AxiomReport>) -> AxiomReport {
        let scope = parts
            .iter()
            .map(|p| p.scope)
            .find(|s| *s != Scope::Exhaustive)
            .unwrap_or(Scope::Exhaustive);
        let mut out = AxiomReport::new(suite, scope);
        let mut total = 0;
        for p in parts {
            out.conditions.insert(p.suite.clone(), p.passed);
            total += p.total_violations;
            out.violations.extend(p.violations);
        }
        let mut out = out.finish();
        out.total_violations = total;
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn scope_round_trips_through_strings() {
        for s in [
            Scope::Exhaustive,
            Scope::Sampled {
                seed: 7,
                count: 1000,
            },
        ] {
            assert_eq!(s.to_string().parse::<Scope>().unwrap(), s);
        }
        assert_eq!(
            Scope::Sampled { seed: 7, count: 10 }.to_string(),
            "sampled(7, 10)"
        );
        assert!("sampled(x)".parse::<Scope>().is_err());
    }

    #[test]
    fn passed_iff_no_violations() {
        let r = AxiomReport::new("t", Scope::Exhaustive).finish();
        assert!(r.passed);
        let mut r = AxiomReport::new("t", Scope::Exhaustive);
        r.push(Violation::new("x").set("E", EdgeSet::full(3)));
        let r = r.finish();
        assert!(!r.passed);
        assert_eq!(r.total_violations, 1);
        let json = serde_json::to_string(&r).unwrap();
        let back: AxiomReport = serde_json::from_str(&json).unwrap();
        assert_eq!(back, r);
    }
}
