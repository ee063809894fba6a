//! Exact rank computations: rational Gaussian elimination as ground truth,
//! and a residue-field fast path modulo a random 62-bit prime.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};
use rand::Rng;

/// Rank of a list of rational rows by Gaussian elimination.
pub fn rank_rational(rows: &[&[BigRational]]) -> usize {
    let mut m: Vec<Vec<BigRational>> = rows.iter().map(|r| r.to_vec()).collect();
    let cols = m.first().map_or(0, Vec::len);
    let mut rank = 0;
    for c in 0..cols {
        let Some(p) = (rank..m.len()).find(|&r| !m[r][c].is_zero()) else {
            continue;
        };
        m.swap(rank, p);
        let pivot = m[rank][c].clone();
        for r in rank + 1..m.len() {
            if m[r][c].is_zero() {
                continue;
            }
            let f = &m[r][c] / &pivot;
            for k in c..cols {
                let sub = &f * &m[rank][k];
                m[r][k] -= sub;
            }
        }
        rank += 1;
        if rank == m.len() {
            break;
        }
    }
    rank
}

/// Rank of integer residue rows modulo the prime `p`.
pub fn rank_mod_p(rows: &mut [Vec<u64>], p: u64) -> usize {
    let cols = rows.first().map_or(0, Vec::len);
    let mut rank = 0;
    for c in 0..cols {
        let Some(piv) = (rank..rows.len()).find(|&r| rows[r][c] != 0) else {
            continue;
        };
        rows.swap(rank, piv);
        let inv = inv_mod(rows[rank][c], p);
        for r in rank + 1..rows.len() {
            let x = rows[r][c];
            if x == 0 {
                continue;
            }
            let f = mul_mod(x, inv, p);
            for k in c..cols {
                let sub = mul_mod(f, rows[rank][k], p);
                rows[r][k] = sub_mod(rows[r][k], sub, p);
            }
        }
        rank += 1;
        if rank == rows.len() {
            break;
        }
    }
    rank
}

#[inline]
pub(crate) fn mul_mod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

#[inline]
fn sub_mod(a: u64, b: u64, p: u64) -> u64 {
    if a >= b {
        a - b
    } else {
        a + p - b
    }
}

fn pow_mod(mut b: u64, mut e: u64, p: u64) -> u64 {
    let mut acc = 1u64 % p;
    b %= p;
    while e > 0 {
        if e & 1 == 1 {
            acc = mul_mod(acc, b, p);
        }
        b = mul_mod(b, b, p);
        e >>= 1;
    }
    acc
}

fn inv_mod(a: u64, p: u64) -> u64 {
    pow_mod(a, p - 2, p)
}

/// Deterministic Miller-Rabin for 64-bit integers.
pub fn is_prime_u64(n: u64) -> bool {
    const WITNESSES: [u64; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];
    if n < 2 {
        return false;
    }
    for &w in &WITNESSES {
        if n.is_multiple_of(w) {
            return n == w;
        }
    }
    let s = (n - 1).trailing_zeros();
    let d = (n - 1) >> s;
    'witness: for &a in &WITNESSES {
        let mut x = pow_mod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

/// Uniformly drawn prime in `[2^61, 2^62)`.
pub fn random_prime_62<R: Rng>(rng: &mut R) -> u64 {
    loop {
        let candidate = rng.gen_range(1u64 << 61..1u64 << 62) | 1;
        if is_prime_u64(candidate) {
            return candidate;
        }
    }
}

/// Image of a rational in `Z/p`, or `None` when `p` divides the denominator.
pub fn residue(r: &BigRational, p: u64) -> Option<u64> {
    let pb = BigInt::from(p);
    let reduce = |x: &BigInt| -> u64 {
        let mut v = x % &pb;
        if v.is_negative() {
            v += &pb;
        }
        u64::try_from(v).expect("reduced below p")
    };
    let den = reduce(r.denom());
    if den == 0 {
        return None;
    }
    Some(mul_mod(reduce(r.numer()), inv_mod(den, p), p))
}
