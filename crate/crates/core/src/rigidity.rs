//! Generic rigidity matroids from rigidity matrices of seeded integer embeddings,
//! and the cycle matroid as the 1-dimensional case.

use num_rational::BigRational;
use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::ground::{complete_edges, EdgeSet, VertexId, VertexSet, MAX_VERTICES};
use crate::matroid::{parse_rational, rational_to_string, Matroid, DEFAULT_PRIME_SEED};

/// Coordinates are drawn uniformly from `[-COORD_RANGE, COORD_RANGE]`.
pub const COORD_RANGE: i64 = 1 << 20;

/// Embeddings tried before giving up on certification.
pub const CERTIFY_ATTEMPTS: usize = 8;

/// Rank of `K(U)` in any `m`-dimensional rigidity matroid, `k = |U|`.
pub fn rank_formula(k: usize, m: usize) -> usize {
    if k <= m + 1 {
        k * k.saturating_sub(1) / 2
    } else {
        m * k - m * (m + 1) / 2
    }
}

/// A point in `Q^m` for each vertex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Embedding {
    n: usize,
    m: usize,
    coords: Vec<Vec<BigRational>>,
}

#[derive(Serialize, Deserialize)]
struct EmbeddingJson {
    n: usize,
    m: usize,
    coords: Vec<Vec<String>>,
}

impl Embedding {
    pub fn new(n: usize, m: usize, coords: Vec<Vec<BigRational>>) -> Result<Self> {
        if n > MAX_VERTICES {
            return Err(Error::TooManyVertices(n));
        }
        if coords.len() != n || coords.iter().any(|c| c.len() != m) {
            return Err(Error::MalformedEmbedding { n, m });
        }
        Ok(Embedding { n, m, coords })
    }

    pub fn from_integers(n: usize, m: usize, coords: &[Vec<i64>]) -> Result<Self> {
        let coords = coords
            .iter()
            .map(|p| {
                p.iter()
                    .map(|&x| BigRational::from_integer(x.into()))
                    .collect()
            })
            .collect();
        Self::new(n, m, coords)
    }

    /// Integer coordinates drawn from the seeded stream.
    pub fn random<R: Rng>(n: usize, m: usize, rng: &mut R) -> Result<Self> {
        let coords: Vec<Vec<i64>> = (0..n)
            .map(|_| {
                (0..m)
                    .map(|_| rng.gen_range(-COORD_RANGE..=COORD_RANGE))
                    .collect()
            })
            .collect();
        Self::from_integers(n, m, &coords)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn point(&self, v: VertexId) -> &[BigRational] {
        &self.coords[v]
    }

    /// The embedding of the listed vertices, relabelled `0..k` in list order.
    pub fn sub_embedding(&self, vertices: &[VertexId]) -> Result<Self> {
        if let Some(&v) = vertices.iter().find(|&&v| v >= self.n) {
            return Err(Error::VertexOutOfRange {
                vertex: v,
                n: self.n,
            });
        }
        Self::new(
            vertices.len(),
            self.m,
            vertices.iter().map(|&v| self.coords[v].clone()).collect(),
        )
    }

    pub fn to_json_string(&self) -> String {
        let j = EmbeddingJson {
            n: self.n,
            m: self.m,
            coords: self
                .coords
                .iter()
                .map(|p| p.iter().map(rational_to_string).collect())
                .collect(),
        };
        serde_json::to_string(&j).expect("embedding JSON serializes")
    }

    pub fn from_json_str(s: &str) -> Result<Self> {
        let j: EmbeddingJson = serde_json::from_str(s).map_err(|e| Error::Parse(e.to_string()))?;
        let coords = j
            .coords
            .iter()
            .map(|p| {
                p.iter()
                    .map(|x| parse_rational(x))
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(j.n, j.m, coords)
    }
}

/// One row per edge of `K(V)` in edge order; vertex `u` owns columns `u*m .. u*m + m`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RigidityMatrix {
    pub n: usize,
    pub m: usize,
    pub rows: Vec<Vec<BigRational>>,
}

impl RigidityMatrix {
    pub fn rank(&self) -> usize {
        let refs: Vec<&[BigRational]> = self.rows.iter().map(Vec::as_slice).collect();
        crate::linalg::rank_rational(&refs)
    }

    pub fn rank_of(&self, x: EdgeSet) -> usize {
        let refs: Vec<&[BigRational]> = x.indices().map(|i| self.rows[i].as_slice()).collect();
        crate::linalg::rank_rational(&refs)
    }
}

/// Rigidity matrix of `p`. Collinear points are fine, coincident ones are not.
pub fn rigidity_matrix(p: &Embedding) -> Result<RigidityMatrix> {
    let (n, m) = (p.n, p.m);
    let mut rows = Vec::with_capacity(crate::ground::edge_count(n));
    for u in 0..n {
        for v in u + 1..n {
            if p.coords[u] == p.coords[v] {
                return Err(Error::CoincidentPoints(u, v));
            }
            let mut row = vec![BigRational::zero(); n * m];
            for k in 0..m {
                let d = &p.coords[u][k] - &p.coords[v][k];
                row[v * m + k] = -d.clone();
                row[u * m + k] = d;
            }
            rows.push(row);
        }
    }
    Ok(RigidityMatrix { n, m, rows })
}

/// Whether `r(K(U))` matches [`rank_formula`] for every `U ⊆ V`.
pub fn satisfies_rank_formula(matroid: &Matroid, m: usize) -> bool {
    let n = matroid.n();
    VertexSet::full(n)
        .subsets()
        .all(|u| matroid.rank(complete_edges(u, n)) == rank_formula(u.len(), m))
}

/// Linear matroid of `p`'s rigidity matrix, provided it passes the rank certificate.
pub fn rigidity_matroid_of(p: &Embedding, prime_seed: u64) -> Result<Matroid> {
    if p.n < p.m + 1 {
        return Err(Error::DimensionTooLarge { n: p.n, m: p.m });
    }
    let matrix = rigidity_matrix(p)?;
    let matroid = Matroid::from_linear(p.n, matrix.rows, prime_seed)?;
    if satisfies_rank_formula(&matroid, p.m) {
        Ok(matroid)
    } else {
        Err(Error::GenericityNotCertified { attempts: 1 })
    }
}

/// Generic `m`-dimensional rigidity matroid on `K_n` from a seeded embedding,
/// certified by the rank formula on every `K(U)`.
pub fn generic_rigidity_matroid(n: usize, m: usize, seed: u64) -> Result<Matroid> {
    generic_with_embedding(n, m, seed).map(|(matroid, _)| matroid)
}

/// As [`generic_rigidity_matroid`], also returning the certified embedding.
pub fn generic_with_embedding(n: usize, m: usize, seed: u64) -> Result<(Matroid, Embedding)> {
    if n < m + 1 {
        return Err(Error::DimensionTooLarge { n, m });
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..CERTIFY_ATTEMPTS {
        let p = Embedding::random(n, m, &mut rng)?;
        match rigidity_matroid_of(&p, seed ^ DEFAULT_PRIME_SEED) {
            Ok(matroid) => return Ok((matroid, p)),
            Err(Error::GenericityNotCertified { .. } | Error::CoincidentPoints(..)) => continue,
            Err(e) => return Err(e),
        }
    }
    Err(Error::GenericityNotCertified {
        attempts: CERTIFY_ATTEMPTS,
    })
}

/// The unique 1-dimensional abstract rigidity matroid on `K_n`.
pub fn cycle_matroid_arm(n: usize) -> Matroid {
    Matroid::cycle(n)
}
