//! Edges and edge sets of the complete graph `K(V)` on `V = {0, .., n-1}`.
//!
//! Edges are indexed by their lexicographic rank among canonical pairs
//! `(u, v)` with `u < v`. That index is the bit position inside an
//! [`EdgeSet`], and every serialized form in the crate uses it.

use std::cmp::Ordering;
use std::fmt;
use std::sync::OnceLock;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// Largest supported vertex count; `C(16, 2) = 120` edges fit in a `u128`.
pub const MAX_VERTICES: usize = 16;

pub type VertexId = usize;

/// Number of edges of `K_n`.
pub const fn edge_count(n: usize) -> usize {
    n * n.saturating_sub(1) / 2
}

/// Canonical undirected edge, `u < v`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Edge {
    u: u8,
    v: u8,
}

impl Edge {
    /// Builds the canonical edge `{a, b}`; endpoint order does not matter.
    pub fn new(a: VertexId, b: VertexId) -> Result<Self> {
        if a == b {
            return Err(Error::LoopEdge(a, b));
        }
        if a.max(b) >= MAX_VERTICES {
            return Err(Error::TooManyVertices(a.max(b) + 1));
        }
        let (u, v) = if a < b { (a, b) } else { (b, a) };
        Ok(Edge {
            u: u as u8,
            v: v as u8,
        })
    }

    pub fn u(self) -> VertexId {
        self.u as usize
    }

    pub fn v(self) -> VertexId {
        self.v as usize
    }

    pub fn contains(self, w: VertexId) -> bool {
        self.u() == w || self.v() == w
    }
}

impl fmt::Display for Edge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.u, self.v)
    }
}

/// Lexicographic rank of `e` among the edges of `K_n`.
pub fn edge_rank(e: Edge, n: usize) -> Result<usize> {
    if e.v() >= n {
        return Err(Error::VertexOutOfRange { vertex: e.v(), n });
    }
    let (u, v) = (e.u(), e.v());
    Ok(u * (2 * n - u - 1) / 2 + (v - u - 1))
}

/// Inverse of [`edge_rank`].
pub fn edge_unrank(index: usize, n: usize) -> Result<Edge> {
    tables(n)?
        .endpoints
        .get(index)
        .map(|&(u, v)| Edge { u, v })
        .ok_or(Error::VertexOutOfRange { vertex: index, n })
}

/// Per-`n` lookup tables: endpoints by edge index and the star mask of each vertex.
pub(crate) struct Tables {
    pub endpoints: Vec<(u8, u8)>,
    pub stars: Vec<u128>,
    pub full: u128,
}

pub(crate) fn tables(n: usize) -> Result<&'static Tables> {
    static TABLES: OnceLock<Vec<Tables>> = OnceLock::new();
    if n > MAX_VERTICES {
        return Err(Error::TooManyVertices(n));
    }
    let all = TABLES.get_or_init(|| {
        (0..=MAX_VERTICES)
            .map(|n| {
                let mut endpoints = Vec::with_capacity(edge_count(n));
                let mut stars = vec![0u128; n];
                for u in 0..n {
                    for v in u + 1..n {
                        let i = endpoints.len();
                        endpoints.push((u as u8, v as u8));
                        stars[u] |= 1 << i;
                        stars[v] |= 1 << i;
                    }
                }
                let full = low_mask(endpoints.len());
                Tables {
                    endpoints,
                    stars,
                    full,
                }
            })
            .collect()
    });
    Ok(&all[n])
}

fn tables_unchecked(n: usize) -> &'static Tables {
    tables(n).expect("vertex count validated at construction")
}

pub(crate) fn low_mask(k: usize) -> u128 {
    if k >= 128 {
        u128::MAX
    } else {
        (1u128 << k) - 1
    }
}

/// Set of vertices, bit `v` set when `v` is a member.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default, PartialOrd, Ord)]
pub struct VertexSet(u32);

impl VertexSet {
    pub const EMPTY: VertexSet = VertexSet(0);

    pub fn from_bits(bits: u32) -> Self {
        VertexSet(bits)
    }

    pub fn full(n: usize) -> Self {
        VertexSet(if n >= 32 { u32::MAX } else { (1u32 << n) - 1 })
    }

    pub fn singleton(v: VertexId) -> Self {
        VertexSet(1 << v)
    }

    pub fn bits(self) -> u32 {
        self.0
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn contains(self, v: VertexId) -> bool {
        v < 32 && self.0 >> v & 1 == 1
    }

    pub fn insert(&mut self, v: VertexId) {
        self.0 |= 1 << v;
    }

    pub fn remove(&mut self, v: VertexId) {
        self.0 &= !(1 << v);
    }

    pub fn with(self, v: VertexId) -> Self {
        VertexSet(self.0 | 1 << v)
    }

    pub fn without(self, v: VertexId) -> Self {
        VertexSet(self.0 & !(1 << v))
    }

    pub fn union(self, other: Self) -> Self {
        VertexSet(self.0 | other.0)
    }

    pub fn intersection(self, other: Self) -> Self {
        VertexSet(self.0 & other.0)
    }

    pub fn difference(self, other: Self) -> Self {
        VertexSet(self.0 & !other.0)
    }

    pub fn is_subset(self, other: Self) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn iter(self) -> impl Iterator<Item = VertexId> {
        BitIter(self.0 as u128)
    }

    /// Largest member, if any.
    pub fn max(self) -> Option<VertexId> {
        (self.0 != 0).then(|| 31 - self.0.leading_zeros() as usize)
    }

    /// All subsets of `self` of size `k`, in increasing bit order.
    pub fn subsets_of_size(self, k: usize) -> Vec<VertexSet> {
        let members: Vec<_> = self.iter().collect();
        let mut out = Vec::new();
        combinations(&members, k, &mut |combo| {
            out.push(combo.iter().fold(VertexSet::EMPTY, |s, &v| s.with(v)));
        });
        out
    }

    /// Every subset of `self`, ordered by bit pattern.
    pub fn subsets(self) -> impl Iterator<Item = VertexSet> {
        let mask = self.0;
        let mut next = Some(0u32);
        std::iter::from_fn(move || {
            let cur = next?;
            next = if cur == mask {
                None
            } else {
                Some((cur | !mask).wrapping_add(1) & mask)
            };
            Some(VertexSet(cur))
        })
    }
}

impl FromIterator<VertexId> for VertexSet {
    fn from_iter<I: IntoIterator<Item = VertexId>>(iter: I) -> Self {
        iter.into_iter().fold(VertexSet::EMPTY, |s, v| s.with(v))
    }
}

impl Serialize for VertexSet {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_seq(self.iter())
    }
}

impl<'de> Deserialize<'de> for VertexSet {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let vs = Vec::<usize>::deserialize(d)?;
        if let Some(&bad) = vs.iter().find(|&&v| v >= 32) {
            return Err(serde::de::Error::custom(format!(
                "vertex {bad} out of range"
            )));
        }
        Ok(vs.into_iter().collect())
    }
}

pub(crate) fn combinations<T: Copy>(items: &[T], k: usize, f: &mut dyn FnMut(&[T])) {
    fn go<T: Copy>(items: &[T], k: usize, start: usize, cur: &mut Vec<T>, f: &mut dyn FnMut(&[T])) {
        if cur.len() == k {
            f(cur);
            return;
        }
        for i in start..items.len() {
            if items.len() - i < k - cur.len() {
                break;
            }
            cur.push(items[i]);
            go(items, k, i + 1, cur, f);
            cur.pop();
        }
    }
    if k <= items.len() {
        go(items, k, 0, &mut Vec::with_capacity(k), f);
    }
}

/// Iterator over set bit positions.
#[derive(Clone)]
pub struct BitIter(pub(crate) u128);

impl Iterator for BitIter {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let i = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(i)
    }
}

/// Subset of `K(V)` for `V = {0, .., n-1}`.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct EdgeSet {
    n: u8,
    bits: u128,
}

impl EdgeSet {
    pub fn empty(n: usize) -> Self {
        assert!(n <= MAX_VERTICES, "n = {n} exceeds MAX_VERTICES");
        EdgeSet {
            n: n as u8,
            bits: 0,
        }
    }

    /// All of `K(V)`.
    pub fn full(n: usize) -> Self {
        EdgeSet {
            n: n as u8,
            bits: tables_unchecked(n).full,
        }
    }

    /// Builds a set from raw bits, masking off anything beyond `C(n, 2)`.
    pub fn from_bits(n: usize, bits: u128) -> Self {
        EdgeSet {
            n: n as u8,
            bits: bits & tables_unchecked(n).full,
        }
    }

    pub fn from_indices(n: usize, indices: impl IntoIterator<Item = usize>) -> Result<Self> {
        let mut s = EdgeSet::empty(n);
        for i in indices {
            if i >= edge_count(n) {
                return Err(Error::Parse(format!(
                    "edge index {i} out of range for n = {n}"
                )));
            }
            s.bits |= 1 << i;
        }
        Ok(s)
    }

    pub fn from_pairs(n: usize, pairs: &[(usize, usize)]) -> Result<Self> {
        let mut s = EdgeSet::empty(n);
        for &(a, b) in pairs {
            s.insert(edge_rank(Edge::new(a, b)?, n)?);
        }
        Ok(s)
    }

    pub fn n(self) -> usize {
        self.n as usize
    }

    pub fn bits(self) -> u128 {
        self.bits
    }

    pub fn len(self) -> usize {
        self.bits.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.bits == 0
    }

    pub fn contains(self, index: usize) -> bool {
        self.bits >> index & 1 == 1
    }

    pub fn contains_edge(self, a: VertexId, b: VertexId) -> bool {
        Edge::new(a, b)
            .and_then(|e| edge_rank(e, self.n()))
            .map(|i| self.contains(i))
            .unwrap_or(false)
    }

    pub fn insert(&mut self, index: usize) {
        self.bits |= 1 << index;
    }

    pub fn remove(&mut self, index: usize) {
        self.bits &= !(1 << index);
    }

    pub fn with(self, index: usize) -> Self {
        EdgeSet {
            bits: self.bits | 1 << index,
            ..self
        }
    }

    pub fn without(self, index: usize) -> Self {
        EdgeSet {
            bits: self.bits & !(1 << index),
            ..self
        }
    }

    pub fn union(self, other: Self) -> Self {
        debug_assert_eq!(self.n, other.n);
        EdgeSet {
            bits: self.bits | other.bits,
            ..self
        }
    }

    pub fn intersection(self, other: Self) -> Self {
        debug_assert_eq!(self.n, other.n);
        EdgeSet {
            bits: self.bits & other.bits,
            ..self
        }
    }

    pub fn difference(self, other: Self) -> Self {
        debug_assert_eq!(self.n, other.n);
        EdgeSet {
            bits: self.bits & !other.bits,
            ..self
        }
    }

    /// Complement inside `K(V)`.
    pub fn complement(self) -> Self {
        EdgeSet {
            bits: !self.bits & tables_unchecked(self.n()).full,
            ..self
        }
    }

    pub fn is_subset(self, other: Self) -> bool {
        self.bits & !other.bits == 0
    }

    /// Edge indices in increasing (lexicographic) order.
    pub fn indices(self) -> BitIter {
        BitIter(self.bits)
    }

    pub fn edges(self) -> impl Iterator<Item = Edge> {
        let t = tables_unchecked(self.n());
        self.indices().map(move |i| {
            let (u, v) = t.endpoints[i];
            Edge { u, v }
        })
    }

    /// The support `V(E)`: endpoints of edges in the set.
    pub fn support(self) -> VertexSet {
        let t = tables_unchecked(self.n());
        let mut s = 0u32;
        for i in self.indices() {
            let (u, v) = t.endpoints[i];
            s |= 1 << u | 1 << v;
        }
        VertexSet(s)
    }

    /// Number of edges of the set incident to `v`.
    pub fn valence(self, v: VertexId) -> usize {
        match tables_unchecked(self.n()).stars.get(v) {
            Some(star) => (self.bits & star).count_ones() as usize,
            None => 0,
        }
    }

    /// Canonical sort key: cardinality first, then bit pattern.
    pub fn canonical_key(self) -> (usize, u128) {
        (self.len(), self.bits)
    }
}

impl PartialOrd for EdgeSet {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for EdgeSet {
    fn cmp(&self, other: &Self) -> Ordering {
        (self.n, self.canonical_key()).cmp(&(other.n, other.canonical_key()))
    }
}

impl fmt::Debug for EdgeSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, e) in self.edges().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{e}")?;
        }
        write!(f, "}}")
    }
}

#[derive(Serialize, Deserialize)]
struct EdgeSetJson {
    n: usize,
    edges: Vec<[usize; 2]>,
}

impl Serialize for EdgeSet {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        EdgeSetJson {
            n: self.n(),
            edges: self.edges().map(|e| [e.u(), e.v()]).collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for EdgeSet {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let raw = EdgeSetJson::deserialize(d)?;
        if raw.n > MAX_VERTICES {
            return Err(serde::de::Error::custom(Error::TooManyVertices(raw.n)));
        }
        let pairs: Vec<_> = raw.edges.iter().map(|&[u, v]| (u, v)).collect();
        EdgeSet::from_pairs(raw.n, &pairs).map_err(serde::de::Error::custom)
    }
}

/// `K(W)`: all edges with both endpoints in `W`.
pub fn complete_edges(w: VertexSet, n: usize) -> EdgeSet {
    let t = tables_unchecked(n);
    let outside = VertexSet::full(n).difference(w);
    let touched = outside.iter().fold(0u128, |acc, v| acc | t.stars[v]);
    EdgeSet::from_bits(n, t.full & !touched)
}

pub fn support(e: EdgeSet) -> VertexSet {
    e.support()
}

pub fn valence(e: EdgeSet, v: VertexId) -> usize {
    e.valence(v)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn edge_rank_examples() {
        assert_eq!(edge_rank(Edge::new(0, 1).unwrap(), 4).unwrap(), 0);
        assert_eq!(edge_rank(Edge::new(2, 3).unwrap(), 4).unwrap(), 5);
        let e = Edge::new(3, 1).unwrap();
        let i = edge_rank(e, 5).unwrap();
        assert_eq!(edge_unrank(i, 5).unwrap(), e);
        assert!(edge_rank(Edge::new(1, 4).unwrap(), 4).is_err());
        assert!(Edge::new(2, 2).is_err());
    }

    #[test]
    fn edge_rank_is_lexicographic_bijection() {
        for n in 2..=MAX_VERTICES {
            let mut expected = 0;
            for u in 0..n {
                for v in u + 1..n {
                    let e = Edge::new(u, v).unwrap();
                    assert_eq!(edge_rank(e, n).unwrap(), expected);
                    assert_eq!(edge_unrank(expected, n).unwrap(), e);
                    expected += 1;
                }
            }
            assert_eq!(expected, edge_count(n));
        }
    }

    #[test]
    fn complete_edges_examples() {
        let k = complete_edges(VertexSet::from_iter([0, 1, 2]), 5);
        assert_eq!(
            k,
            EdgeSet::from_pairs(5, &[(0, 1), (0, 2), (1, 2)]).unwrap()
        );
        assert!(complete_edges(VertexSet::EMPTY, 5).is_empty());
        assert_eq!(complete_edges(VertexSet::full(4), 4).len(), 6);
    }

    #[test]
    fn support_examples() {
        assert!(EdgeSet::empty(5).support().is_empty());
        let e = EdgeSet::from_pairs(5, &[(0, 1), (2, 3)]).unwrap();
        assert_eq!(e.support(), VertexSet::from_iter([0, 1, 2, 3]));
        for w in VertexSet::full(6).subsets().filter(|w| w.len() >= 2) {
            assert_eq!(complete_edges(w, 6).support(), w);
        }
    }

    #[test]
    fn handshake_on_complete_graph() {
        for n in 1..=MAX_VERTICES {
            let k = EdgeSet::full(n);
            let total: usize = (0..n).map(|v| k.valence(v)).sum();
            assert_eq!(total, n * (n - 1));
        }
    }

    #[test]
    fn vertex_subsets_enumerate_everything() {
        let s = VertexSet::from_iter([1, 3, 4]);
        let subs: Vec<_> = s.subsets().collect();
        assert_eq!(subs.len(), 8);
        assert!(subs.iter().all(|t| t.is_subset(s)));
        assert_eq!(s.subsets_of_size(2).len(), 3);
    }

    #[test]
    fn json_form_is_sorted_pairs() {
        let e = EdgeSet::from_pairs(4, &[(2, 3), (1, 0)]).unwrap();
        let json = serde_json::to_string(&e).unwrap();
        assert_eq!(json, r#"{"n":4,"edges":[[0,1],[2,3]]}"#);
        let back: EdgeSet = serde_json::from_str(&json).unwrap();
        assert_eq!(back, e);
        assert!(serde_json::from_str::<EdgeSet>(r#"{"n":3,"edges":[[0,3]]}"#).is_err());
    }

    #[test]
    fn canonical_order_is_cardinality_then_bits() {
        let a = EdgeSet::from_indices(4, [5]).unwrap();
        let b = EdgeSet::from_indices(4, [0, 1]).unwrap();
        assert!(a < b);
    }
}
