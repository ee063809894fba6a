use std::sync::atomic::{AtomicBool, AtomicU64, Ordering};

use num_rational::BigRational;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::ground::EdgeSet;
use crate::linalg::{random_prime_62, rank_mod_p, rank_rational, residue};

/// Roughly one query in 64 is recomputed over the rationals.
const SAMPLE_MODULUS: u64 = 64;

/// Default seed for the residue prime when none is supplied.
pub const DEFAULT_PRIME_SEED: u64 = 0x5_eed0_fa11_5eed;

/// Counters for the rational-vs-residue cross-check.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct CrossCheckStats {
    pub queries: u64,
    pub checked: u64,
    pub mismatches: u64,
}

/// Exact linear representation: one rational row per edge of `K(V)`.
pub struct LinearRep {
    rows: Vec<Vec<BigRational>>,
    residues: Vec<Vec<u64>>,
    prime: u64,
    salt: u64,
    exact_only: AtomicBool,
    queries: AtomicU64,
    checked: AtomicU64,
    mismatches: AtomicU64,
}

fn splitmix(mut z: u64) -> u64 {
    z = z.wrapping_add(0x9e37_79b9_7f4a_7c15);
    z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
    z ^ (z >> 31)
}

impl LinearRep {
    pub fn new(rows: Vec<Vec<BigRational>>, prime_seed: u64) -> Self {
        let mut rng = ChaCha8Rng::seed_from_u64(prime_seed);
        let (prime, residues) = loop {
            let p = random_prime_62(&mut rng);
            let res: Option<Vec<Vec<u64>>> = rows
                .iter()
                .map(|r| r.iter().map(|x| residue(x, p)).collect())
                .collect();
            if let Some(res) = res {
                break (p, res);
            }
        };
        LinearRep {
            rows,
            residues,
            prime,
            salt: splitmix(prime_seed),
            exact_only: AtomicBool::new(false),
            queries: AtomicU64::new(0),
            checked: AtomicU64::new(0),
            mismatches: AtomicU64::new(0),
        }
    }

    pub fn rows(&self) -> &[Vec<BigRational>] {
        &self.rows
    }

    pub fn prime(&self) -> u64 {
        self.prime
    }

    pub fn columns(&self) -> usize {
        self.rows.first().map_or(0, Vec::len)
    }

    pub fn rank_exact(&self, x: EdgeSet) -> usize {
        let rows: Vec<&[BigRational]> = x.indices().map(|i| self.rows[i].as_slice()).collect();
        rank_rational(&rows)
    }

    pub fn rank_residue(&self, x: EdgeSet) -> usize {
        let mut rows: Vec<Vec<u64>> = x.indices().map(|i| self.residues[i].clone()).collect();
        rank_mod_p(&mut rows, self.prime)
    }

    fn sampled(&self, x: EdgeSet) -> bool {
        let b = x.bits();
        splitmix((b as u64) ^ ((b >> 64) as u64).rotate_left(17) ^ self.salt)
            .is_multiple_of(SAMPLE_MODULUS)
    }

    /// Residue rank, cross-checked against the rational rank on a seeded sample.
    /// A mismatch switches the representation to exact arithmetic for good.
    pub fn rank(&self, x: EdgeSet) -> usize {
        self.queries.fetch_add(1, Ordering::Relaxed);
        if self.exact_only.load(Ordering::Relaxed) {
            return self.rank_exact(x);
        }
        let fast = self.rank_residue(x);
        if self.sampled(x) {
            self.checked.fetch_add(1, Ordering::Relaxed);
            let exact = self.rank_exact(x);
            if exact != fast {
                self.mismatches.fetch_add(1, Ordering::Relaxed);
                self.exact_only.store(true, Ordering::Relaxed);
                return exact;
            }
        }
        fast
    }

    pub fn stats(&self) -> CrossCheckStats {
        CrossCheckStats {
            queries: self.queries.load(Ordering::Relaxed),
            checked: self.checked.load(Ordering::Relaxed),
            mismatches: self.mismatches.load(Ordering::Relaxed),
        }
    }
}
