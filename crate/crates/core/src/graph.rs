//! Simple undirected graphs on labeled vertices `0..n`.
//!
//! Adjacency is one bit per unordered pair. The pair `{i, j}` with `i < j`
//! lives at bit `j*(j-1)/2 + i`, which is also the graph6 payload order, so
//! serialization is a straight copy of the bit vector.

use std::collections::VecDeque;
use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("vertex {vertex} out of range for graph of order {n}")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("{u}-{v} is not an edge")]
    NotAnEdge { u: usize, v: usize },
    #[error("vertex sets overlap at vertex {0}")]
    Overlap(usize),
    #[error("extremal graph needs n >= a + 2 (got n = {n}, a = {a})")]
    ExtremalTooSmall { n: usize, a: usize },
}

#[inline]
const fn pair_index(i: usize, j: usize) -> usize {
    debug_assert!(i < j);
    j * (j - 1) / 2 + i
}

pub(crate) const fn choose2(n: usize) -> usize {
    n * n.saturating_sub(1) / 2
}

/// An ascending, duplicate-free set of vertex labels.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct VertexSet(Vec<usize>);

impl VertexSet {
    pub fn new<I: IntoIterator<Item = usize>>(members: I) -> Self {
        let mut v: Vec<usize> = members.into_iter().collect();
        v.sort_unstable();
        v.dedup();
        VertexSet(v)
    }

    pub fn empty() -> Self {
        VertexSet(Vec::new())
    }

    pub fn singleton(v: usize) -> Self {
        VertexSet(vec![v])
    }

    /// Members of a bitmask over `0..64`.
    pub fn from_mask(mask: u64) -> Self {
        let mut v = Vec::with_capacity(mask.count_ones() as usize);
        let mut m = mask;
        while m != 0 {
            v.push(m.trailing_zeros() as usize);
            m &= m - 1;
        }
        VertexSet(v)
    }

    /// Bitmask form; only meaningful when every member is below 64.
    pub fn to_mask(&self) -> u64 {
        self.0.iter().fold(0u64, |m, &v| m | (1u64 << v))
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, v: usize) -> bool {
        self.0.binary_search(&v).is_ok()
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.0.iter().copied()
    }

    /// First shared member, if any.
    pub fn common_member(&self, other: &VertexSet) -> Option<usize> {
        let (mut i, mut j) = (0, 0);
        while i < self.0.len() && j < other.0.len() {
            match self.0[i].cmp(&other.0[j]) {
                std::cmp::Ordering::Less => i += 1,
                std::cmp::Ordering::Greater => j += 1,
                std::cmp::Ordering::Equal => return Some(self.0[i]),
            }
        }
        None
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        VertexSet::new(iter)
    }
}

/// Induced subgraph together with the labels its vertices had in the parent.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InducedSubgraph {
    pub graph: Graph,
    /// `original[new] = old`.
    pub original: Vec<usize>,
}

impl InducedSubgraph {
    pub fn old_to_new(&self, old: usize) -> Option<usize> {
        self.original.binary_search(&old).ok()
    }

    pub fn to_original(&self, set: &VertexSet) -> VertexSet {
        set.iter().map(|v| self.original[v]).collect()
    }
}

/// Immutable simple undirected graph.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    bits: Vec<u64>,
    degrees: Vec<usize>,
    edges: usize,
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Graph").field("n", &self.n).field("edges", &self.edges().collect::<Vec<_>>()).finish()
    }
}

impl Graph {
    /// Edgeless graph of order `n`.
    pub fn empty(n: usize) -> Self {
        Graph { n, bits: vec![0; choose2(n).div_ceil(64)], degrees: vec![0; n], edges: 0 }
    }

    /// Builds a graph from an edge iterator. Repeated pairs collapse to one edge.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut g = Graph::empty(n);
        for (u, v) in edges {
            g.check_vertex(u)?;
            g.check_vertex(v)?;
            if u == v {
                return Err(GraphError::SelfLoop(u));
            }
            g.insert(u, v);
        }
        Ok(g)
    }

    /// Builds from raw pair bits in graph6 order. `bits` must hold at least
    /// `choose2(n)` bits; anything beyond is ignored.
    pub(crate) fn from_pair_bits(n: usize, mut bits: Vec<u64>) -> Self {
        let pairs = choose2(n);
        bits.resize(pairs.div_ceil(64), 0);
        if !pairs.is_multiple_of(64) {
            if let Some(last) = bits.last_mut() {
                *last &= (1u64 << (pairs % 64)) - 1;
            }
        }
        let mut degrees = vec![0; n];
        let mut edges = 0;
        for j in 1..n {
            for i in 0..j {
                let k = pair_index(i, j);
                if bits[k / 64] >> (k % 64) & 1 == 1 {
                    degrees[i] += 1;
                    degrees[j] += 1;
                    edges += 1;
                }
            }
        }
        Graph { n, bits, degrees, edges }
    }

    pub(crate) fn pair_bits(&self) -> &[u64] {
        &self.bits
    }

    fn insert(&mut self, u: usize, v: usize) {
        let (i, j) = if u < v { (u, v) } else { (v, u) };
        let k = pair_index(i, j);
        let word = &mut self.bits[k / 64];
        let bit = 1u64 << (k % 64);
        if *word & bit == 0 {
            *word |= bit;
            self.degrees[i] += 1;
            self.degrees[j] += 1;
            self.edges += 1;
        }
    }

    fn remove(&mut self, u: usize, v: usize) {
        let (i, j) = if u < v { (u, v) } else { (v, u) };
        let k = pair_index(i, j);
        let word = &mut self.bits[k / 64];
        let bit = 1u64 << (k % 64);
        if *word & bit != 0 {
            *word &= !bit;
            self.degrees[i] -= 1;
            self.degrees[j] -= 1;
            self.edges -= 1;
        }
    }

    fn check_vertex(&self, v: usize) -> Result<(), GraphError> {
        if v < self.n {
            Ok(())
        } else {
            Err(GraphError::VertexOutOfRange { vertex: v, n: self.n })
        }
    }

    pub(crate) fn check_set(&self, s: &VertexSet) -> Result<(), GraphError> {
        match s.as_slice().last() {
            Some(&v) if v >= self.n => Err(GraphError::VertexOutOfRange { vertex: v, n: self.n }),
            _ => Ok(()),
        }
    }

    fn check_disjoint(&self, s: &VertexSet, t: &VertexSet) -> Result<(), GraphError> {
        self.check_set(s)?;
        self.check_set(t)?;
        match s.common_member(t) {
            Some(v) => Err(GraphError::Overlap(v)),
            None => Ok(()),
        }
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn size(&self) -> usize {
        self.edges
    }

    /// Adjacency test. Out-of-range or equal endpoints read as non-adjacent.
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        if u == v || u >= self.n || v >= self.n {
            return false;
        }
        let (i, j) = if u < v { (u, v) } else { (v, u) };
        let k = pair_index(i, j);
        self.bits[k / 64] >> (k % 64) & 1 == 1
    }

    pub fn degree(&self, v: usize) -> usize {
        self.degrees[v]
    }

    pub fn degrees(&self) -> &[usize] {
        &self.degrees
    }

    /// δ(G); zero for the order-0 graph.
    pub fn min_degree(&self) -> usize {
        self.degrees.iter().copied().min().unwrap_or(0)
    }

    pub fn max_degree(&self) -> usize {
        self.degrees.iter().copied().max().unwrap_or(0)
    }

    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        (0..self.n).filter(move |&u| self.has_edge(u, v))
    }

    /// Edges as `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n).flat_map(move |u| (u + 1..self.n).filter(move |&v| self.has_edge(u, v)).map(move |v| (u, v)))
    }

    /// Neighborhoods as bitmasks, available for graphs of order at most 64.
    pub fn neighbor_masks(&self) -> Option<Vec<u64>> {
        if self.n > 64 {
            return None;
        }
        let mut masks = vec![0u64; self.n];
        for (u, v) in self.edges() {
            masks[u] |= 1 << v;
            masks[v] |= 1 << u;
        }
        Some(masks)
    }

    pub fn complete(n: usize) -> Self {
        let mut g = Graph::empty(n);
        for j in 1..n {
            for i in 0..j {
                g.insert(i, j);
            }
        }
        g
    }

    pub fn cycle(n: usize) -> Self {
        let mut g = Graph::empty(n);
        if n >= 3 {
            for v in 0..n {
                g.insert(v, (v + 1) % n);
            }
        } else if n == 2 {
            g.insert(0, 1);
        }
        g
    }

    pub fn path(n: usize) -> Self {
        let mut g = Graph::empty(n);
        for v in 1..n {
            g.insert(v - 1, v);
        }
        g
    }

    /// K_{1,leaves} with the center at vertex 0.
    pub fn star(leaves: usize) -> Self {
        let mut g = Graph::empty(leaves + 1);
        for v in 1..=leaves {
            g.insert(0, v);
        }
        g
    }

    /// G1 ∪ G2, with the vertices of `other` shifted up by `self.order()`.
    pub fn disjoint_union(&self, other: &Graph) -> Graph {
        let shift = self.n;
        let mut g = Graph::empty(self.n + other.n);
        for (u, v) in self.edges() {
            g.insert(u, v);
        }
        for (u, v) in other.edges() {
            g.insert(u + shift, v + shift);
        }
        g
    }

    /// G1 ∨ G2: the disjoint union plus every edge between the two sides.
    pub fn join(&self, other: &Graph) -> Graph {
        let mut g = self.disjoint_union(other);
        for u in 0..self.n {
            for v in 0..other.n {
                g.insert(u, self.n + v);
            }
        }
        g
    }

    /// K_a ∨ (K_{n−a−1} ∪ K_1). The K_a block is `0..a`, the K_{n−a−1}
    /// block follows, and the K_1 vertex is `n − 1`.
    pub fn extremal(n: usize, a: usize) -> Result<Graph, GraphError> {
        if n < a + 2 {
            return Err(GraphError::ExtremalTooSmall { n, a });
        }
        let rest = Graph::complete(n - a - 1).disjoint_union(&Graph::complete(1));
        Ok(Graph::complete(a).join(&rest))
    }

    pub fn complement(&self) -> Graph {
        let mut g = Graph::empty(self.n);
        for j in 1..self.n {
            for i in 0..j {
                if !self.has_edge(i, j) {
                    g.insert(i, j);
                }
            }
        }
        g
    }

    /// Relabels vertex `v` to `perm[v]`.
    pub fn relabel(&self, perm: &[usize]) -> Graph {
        assert_eq!(perm.len(), self.n, "permutation length must equal order");
        let mut g = Graph::empty(self.n);
        for (u, v) in self.edges() {
            g.insert(perm[u], perm[v]);
        }
        g
    }

    /// G − e.
    pub fn delete_edge(&self, u: usize, v: usize) -> Result<Graph, GraphError> {
        if !self.has_edge(u, v) {
            self.check_vertex(u)?;
            self.check_vertex(v)?;
            return Err(GraphError::NotAnEdge { u, v });
        }
        let mut g = self.clone();
        g.remove(u, v);
        Ok(g)
    }

    /// G − S, relabeled to `0..n−|S|` preserving relative order.
    pub fn delete_vertices(&self, s: &VertexSet) -> Result<InducedSubgraph, GraphError> {
        self.check_set(s)?;
        let original: Vec<usize> = (0..self.n).filter(|&v| !s.contains(v)).collect();
        let mut g = Graph::empty(original.len());
        for (ni, &oi) in original.iter().enumerate() {
            for (nj, &oj) in original.iter().enumerate().skip(ni + 1) {
                if self.has_edge(oi, oj) {
                    g.insert(ni, nj);
                }
            }
        }
        Ok(InducedSubgraph { graph: g, original })
    }

    /// e_G(S, T): edges with one end in S and the other in T.
    pub fn cut_count(&self, s: &VertexSet, t: &VertexSet) -> Result<usize, GraphError> {
        self.check_disjoint(s, t)?;
        Ok(s.iter().map(|u| t.iter().filter(|&v| self.has_edge(u, v)).count()).sum())
    }

    /// d_{G−S}(T) = Σ_{v∈T} d_{G−S}(v).
    pub fn degree_sum_minus(&self, s: &VertexSet, t: &VertexSet) -> Result<usize, GraphError> {
        self.check_disjoint(s, t)?;
        Ok(t.iter().map(|v| self.degrees[v] - s.iter().filter(|&u| self.has_edge(u, v)).count()).sum())
    }

    /// Connected components, each ascending, ordered by smallest member.
    pub fn components(&self) -> Vec<VertexSet> {
        let mut seen = vec![false; self.n];
        let mut out = Vec::new();
        let mut queue = VecDeque::new();
        for root in 0..self.n {
            if seen[root] {
                continue;
            }
            seen[root] = true;
            queue.push_back(root);
            let mut comp = Vec::new();
            while let Some(u) = queue.pop_front() {
                comp.push(u);
                for v in self.neighbors(u) {
                    if !seen[v] {
                        seen[v] = true;
                        queue.push_back(v);
                    }
                }
            }
            out.push(VertexSet::new(comp));
        }
        out
    }

    /// Connected with at least one vertex.
    pub fn is_connected(&self) -> bool {
        self.n > 0 && self.components().len() == 1
    }

    /// True when no two members of `set` are adjacent.
    pub fn is_independent(&self, set: &VertexSet) -> bool {
        let m = set.as_slice();
        m.iter().enumerate().all(|(k, &u)| m[k + 1..].iter().all(|&v| !self.has_edge(u, v)))
    }
}
