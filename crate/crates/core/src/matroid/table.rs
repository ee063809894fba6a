//! Rank of every subset of a ground set, for grounds up to [`TABLE_CAP`] elements.

use crate::ground::{BitIter, EdgeSet};

/// Largest ground set that gets a full rank table (2^21 bytes).
pub const TABLE_CAP: usize = 21;

pub(crate) struct RankTable {
    mask: u128,
    elems: Vec<usize>,
    contiguous: bool,
    ranks: Vec<u8>,
}

impl RankTable {
    /// Builds the table from an independence test that is only consulted on
    /// sets whose every one-element deletion is independent.
    pub fn from_independence(
        ground: EdgeSet,
        mut independent: impl FnMut(EdgeSet) -> bool,
    ) -> Self {
        let mut t = Self::shell(ground);
        let k = t.elems.len();
        let size = 1usize << k;
        let mut indep = vec![false; size];
        indep[0] = true;
        for idx in 1..size {
            let all_minors = BitIter(idx as u128).all(|b| indep[idx & !(1 << b)]);
            indep[idx] = all_minors && independent(t.expand(ground.n(), idx));
        }
        t.fill_ranks(&indep);
        t
    }

    /// Builds the table from an explicit basis family.
    pub fn from_bases(ground: EdgeSet, bases: &[EdgeSet]) -> Self {
        let mut t = Self::shell(ground);
        let size = 1usize << t.elems.len();
        let mut indep = vec![false; size];
        for b in bases {
            indep[t.compress(*b)] = true;
        }
        for idx in (1..size).rev() {
            if indep[idx] {
                for b in BitIter(idx as u128) {
                    indep[idx & !(1 << b)] = true;
                }
            }
        }
        t.fill_ranks(&indep);
        t
    }

    fn shell(ground: EdgeSet) -> Self {
        let elems: Vec<usize> = ground.indices().collect();
        assert!(elems.len() <= TABLE_CAP);
        let contiguous = ground.bits() == crate::ground::low_mask(elems.len());
        RankTable {
            mask: ground.bits(),
            elems,
            contiguous,
            ranks: Vec::new(),
        }
    }

    fn fill_ranks(&mut self, indep: &[bool]) {
        let mut ranks = vec![0u8; indep.len()];
        for idx in 1..indep.len() {
            ranks[idx] = if indep[idx] {
                idx.count_ones() as u8
            } else {
                BitIter(idx as u128)
                    .map(|b| ranks[idx & !(1 << b)])
                    .max()
                    .unwrap_or(0)
            };
        }
        self.ranks = ranks;
    }

    pub fn compress(&self, x: EdgeSet) -> usize {
        let bits = x.bits() & self.mask;
        if self.contiguous {
            return bits as usize;
        }
        self.elems
            .iter()
            .enumerate()
            .filter(|&(_, &e)| bits >> e & 1 == 1)
            .fold(0, |acc, (i, _)| acc | 1 << i)
    }

    pub fn expand(&self, n: usize, idx: usize) -> EdgeSet {
        if self.contiguous {
            return EdgeSet::from_bits(n, idx as u128);
        }
        let bits = BitIter(idx as u128).fold(0u128, |acc, i| acc | 1 << self.elems[i]);
        EdgeSet::from_bits(n, bits)
    }

    pub fn rank(&self, x: EdgeSet) -> usize {
        self.ranks[self.compress(x)] as usize
    }
}
