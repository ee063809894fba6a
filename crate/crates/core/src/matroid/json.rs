use num_rational::BigRational;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::ground::{EdgeSet, MAX_VERTICES};

use super::{Backend, BackendKind, Matroid, DEFAULT_PRIME_SEED};

/// Serialized matroid. `ground` is omitted when it is all of `K(V)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MatroidJson {
    pub n: usize,
    pub rank: usize,
    pub backend: BackendKind,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub ground: Option<Vec<usize>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub bases: Option<Vec<Vec<usize>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub matrix: Option<Vec<Vec<String>>>,
}

pub fn rational_to_string(q: &BigRational) -> String {
    format!("{}/{}", q.numer(), q.denom())
}

pub fn parse_rational(s: &str) -> Result<BigRational> {
    let q: BigRational = s
        .trim()
        .parse()
        .map_err(|_| Error::Parse(format!("invalid rational {s:?}")))?;
    Ok(q)
}

impl Matroid {
    pub fn to_json(&self) -> MatroidJson {
        let full = EdgeSet::full(self.n());
        let (bases, matrix) = match self.backend() {
            Backend::Bases(bs) if self.ground() == self.inner.base => (
                Some(bs.iter().map(|b| b.indices().collect()).collect()),
                None,
            ),
            Backend::Bases(_) => {
                let bs = self
                    .bases()
                    .expect("restricted basis matroids stay enumerable");
                (
                    Some(bs.members.iter().map(|b| b.indices().collect()).collect()),
                    None,
                )
            }
            Backend::Linear(l) => {
                let rows = l
                    .rows()
                    .iter()
                    .map(|r| r.iter().map(rational_to_string).collect())
                    .collect();
                (None, Some(rows))
            }
            Backend::Cycle => (None, None),
        };
        MatroidJson {
            n: self.n(),
            rank: self.full_rank(),
            backend: self.backend_kind(),
            ground: (self.ground() != full).then(|| self.ground().indices().collect()),
            bases,
            matrix,
        }
    }

    pub fn from_json(j: &MatroidJson) -> Result<Matroid> {
        if j.n > MAX_VERTICES {
            return Err(Error::TooManyVertices(j.n));
        }
        let ground = match &j.ground {
            Some(g) => EdgeSet::from_indices(j.n, g.iter().copied())?,
            None => EdgeSet::full(j.n),
        };
        let m = match j.backend {
            BackendKind::Bases => {
                let raw = j
                    .bases
                    .as_ref()
                    .ok_or_else(|| Error::Parse("missing \"bases\"".into()))?;
                let bases = raw
                    .iter()
                    .map(|b| EdgeSet::from_indices(j.n, b.iter().copied()))
                    .collect::<Result<Vec<_>>>()?;
                Matroid::from_bases_on(j.n, ground, bases)?
            }
            BackendKind::Linear => {
                let raw = j
                    .matrix
                    .as_ref()
                    .ok_or_else(|| Error::Parse("missing \"matrix\"".into()))?;
                let rows = raw
                    .iter()
                    .map(|r| {
                        r.iter()
                            .map(|s| parse_rational(s))
                            .collect::<Result<Vec<_>>>()
                    })
                    .collect::<Result<Vec<_>>>()?;
                Matroid::from_linear(j.n, rows, DEFAULT_PRIME_SEED)?.restriction(ground)
            }
            BackendKind::Cycle => Matroid::cycle(j.n).restriction(ground),
        };
        if m.full_rank() != j.rank {
            return Err(Error::Parse(format!(
                "declared rank {} but the data has rank {}",
                j.rank,
                m.full_rank()
            )));
        }
        Ok(m)
    }

    pub fn to_json_string(&self) -> String {
        serde_json::to_string(&self.to_json()).expect("matroid JSON serializes")
    }

    pub fn from_json_str(s: &str) -> Result<Matroid> {
        let j: MatroidJson = serde_json::from_str(s).map_err(|e| Error::Parse(e.to_string()))?;
        Matroid::from_json(&j)
    }
}
