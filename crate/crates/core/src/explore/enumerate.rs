use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::ground::{combinations, edge_count, EdgeSet};
use crate::matroid::Matroid;

pub const MAX_ENUM_GROUND: usize = 10;
pub const MAX_ENUM_CANDIDATES: usize = 20;

fn binomial(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

/// Smallest `n` with `C(n, 2) >= size`, and the first `size` edges of `K_n`.
pub fn enumeration_ground(size: usize) -> (usize, EdgeSet) {
    let n = (2..).find(|&n| edge_count(n) >= size).unwrap();
    (
        n,
        EdgeSet::from_bits(
            n,
            if size == 0 {
                0
            } else {
                u128::MAX >> (128 - size)
            },
        ),
    )
}

/// Basis exchange on a family given as a bitmask over `subsets`, with
/// `index[bits]` locating each subset.
fn exchange_holds(family: u32, subsets: &[u32], index: &[Option<u8>]) -> bool {
    let members: Vec<u32> = (0..subsets.len())
        .filter(|i| family >> i & 1 == 1)
        .map(|i| subsets[i])
        .collect();
    let inside = |b: u32| index[b as usize].is_some_and(|i| family >> i & 1 == 1);
    members.iter().all(|&b1| {
        members.iter().all(|&b2| {
            let mut rest = b1 & !b2;
            while rest != 0 {
                let x = rest & rest.wrapping_neg();
                rest &= rest - 1;
                let mut cands = b2 & !b1;
                let mut ok = false;
                while cands != 0 {
                    let y = cands & cands.wrapping_neg();
                    cands &= cands - 1;
                    if inside((b1 & !x) | y) {
                        ok = true;
                        break;
                    }
                }
                if !ok {
                    return false;
                }
            }
            true
        })
    })
}

/// Every matroid of rank `rank` on a ground of `ground_size` edges, one per
/// valid basis family, in increasing order of the family bitmask.
pub fn enumerate_matroids(
    ground_size: usize,
    rank: usize,
) -> Result<impl Iterator<Item = Matroid>> {
    if ground_size > MAX_ENUM_GROUND {
        return Err(Error::cap(
            "enumeration ground size",
            ground_size,
            MAX_ENUM_GROUND,
        ));
    }
    let count = binomial(ground_size, rank);
    if count > MAX_ENUM_CANDIDATES {
        return Err(Error::cap("candidate bases", count, MAX_ENUM_CANDIDATES));
    }
    let (n, ground) = enumeration_ground(ground_size);
    let elems: Vec<u32> = (0..ground_size as u32).collect();
    let mut subsets = Vec::with_capacity(count);
    combinations(&elems, rank, &mut |c| {
        subsets.push(c.iter().fold(0u32, |acc, &e| acc | 1 << e))
    });
    let mut index = vec![None; 1 << ground_size];
    for (i, &s) in subsets.iter().enumerate() {
        index[s as usize] = Some(i as u8);
    }
    let families: Vec<u32> = (1u32..1 << count)
        .into_par_iter()
        .filter(|&f| exchange_holds(f, &subsets, &index))
        .collect();
    Ok(families.into_iter().map(move |f| {
        let bases = (0..count)
            .filter(|i| f >> i & 1 == 1)
            .map(|i| EdgeSet::from_bits(n, subsets[i] as u128))
            .collect();
        Matroid::from_bases_unchecked(n, ground, bases)
    }))
}
