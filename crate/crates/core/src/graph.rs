//! Simple undirected graphs on at most 64 vertices, stored as one neighbor
//! bitset per vertex.
//!
//! Vertices are `0..n` internally. Every I/O path that faces a human (JSON,
//! CLI reports) shifts to 1-indexed labels.

use std::fmt;
use std::ops::{BitAnd, BitAndAssign, BitOr, BitOrAssign, Not, Sub};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Largest supported vertex count; a [`VertexSet`] fits in one word.
pub const MAX_VERTICES: usize = 64;

/// A set of vertices of some ambient graph, as a 64-bit mask.
#[derive(Clone, Copy, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct VertexSet(pub u64);

impl VertexSet {
    pub const EMPTY: VertexSet = VertexSet(0);

    /// The set `{0, .., n-1}`.
    #[inline]
    pub fn full(n: usize) -> Self {
        if n >= 64 {
            VertexSet(u64::MAX)
        } else {
            VertexSet((1u64 << n) - 1)
        }
    }

    #[inline]
    pub fn singleton(v: usize) -> Self {
        VertexSet(1u64 << v)
    }

    pub fn from_vertices<I: IntoIterator<Item = usize>>(it: I) -> Self {
        it.into_iter().fold(VertexSet::EMPTY, |s, v| s.with(v))
    }

    #[inline]
    pub fn bits(self) -> u64 {
        self.0
    }

    #[inline]
    pub fn contains(self, v: usize) -> bool {
        v < 64 && self.0 >> v & 1 == 1
    }

    #[inline]
    pub fn with(self, v: usize) -> Self {
        VertexSet(self.0 | 1u64 << v)
    }

    #[inline]
    pub fn without(self, v: usize) -> Self {
        VertexSet(self.0 & !(1u64 << v))
    }

    #[inline]
    pub fn insert(&mut self, v: usize) {
        self.0 |= 1u64 << v;
    }

    #[inline]
    pub fn remove(&mut self, v: usize) {
        self.0 &= !(1u64 << v);
    }

    #[inline]
    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    #[inline]
    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    #[inline]
    pub fn is_subset(self, other: VertexSet) -> bool {
        self.0 & !other.0 == 0
    }

    #[inline]
    pub fn intersects(self, other: VertexSet) -> bool {
        self.0 & other.0 != 0
    }

    /// Lowest member, if any.
    #[inline]
    pub fn first(self) -> Option<usize> {
        (self.0 != 0).then(|| self.0.trailing_zeros() as usize)
    }

    pub fn iter(self) -> VertexIter {
        VertexIter(self.0)
    }

    pub fn to_vec(self) -> Vec<usize> {
        self.iter().collect()
    }

    /// Members shifted to 1-indexed labels.
    pub fn to_labels(self) -> Vec<usize> {
        self.iter().map(|v| v + 1).collect()
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl BitOr for VertexSet {
    type Output = VertexSet;
    fn bitor(self, rhs: VertexSet) -> VertexSet {
        VertexSet(self.0 | rhs.0)
    }
}

impl BitOrAssign for VertexSet {
    fn bitor_assign(&mut self, rhs: VertexSet) {
        self.0 |= rhs.0;
    }
}

impl BitAnd for VertexSet {
    type Output = VertexSet;
    fn bitand(self, rhs: VertexSet) -> VertexSet {
        VertexSet(self.0 & rhs.0)
    }
}

impl BitAndAssign for VertexSet {
    fn bitand_assign(&mut self, rhs: VertexSet) {
        self.0 &= rhs.0;
    }
}

impl Sub for VertexSet {
    type Output = VertexSet;
    fn sub(self, rhs: VertexSet) -> VertexSet {
        VertexSet(self.0 & !rhs.0)
    }
}

impl Not for VertexSet {
    type Output = VertexSet;
    fn not(self) -> VertexSet {
        VertexSet(!self.0)
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        VertexSet::from_vertices(iter)
    }
}

impl IntoIterator for VertexSet {
    type Item = usize;
    type IntoIter = VertexIter;
    fn into_iter(self) -> VertexIter {
        self.iter()
    }
}

/// Iterates the members of a [`VertexSet`] in increasing order.
#[derive(Clone, Debug)]
pub struct VertexIter(u64);

impl Iterator for VertexIter {
    type Item = usize;

    #[inline]
    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let v = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(v)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let c = self.0.count_ones() as usize;
        (c, Some(c))
    }
}

impl ExactSizeIterator for VertexIter {}

/// An undirected edge with `0 <= u < v`.
pub type Edge = (usize, usize);

#[inline]
pub fn normalize_edge(a: usize, b: usize) -> Edge {
    if a < b {
        (a, b)
    } else {
        (b, a)
    }
}

/// A deduplicated, sorted list of normalized edges.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct EdgeSet(Vec<Edge>);

impl EdgeSet {
    pub fn new<I: IntoIterator<Item = Edge>>(edges: I) -> Self {
        let mut v: Vec<Edge> = edges.into_iter().map(|(a, b)| normalize_edge(a, b)).collect();
        v.sort_unstable();
        v.dedup();
        EdgeSet(v)
    }

    /// Builds an edge set and checks every member against `g`.
    pub fn in_graph<I: IntoIterator<Item = Edge>>(g: &Graph, edges: I) -> Result<Self> {
        let set = EdgeSet::new(edges);
        for &(u, v) in &set.0 {
            if u >= g.n() || v >= g.n() {
                return Err(Error::VertexOutOfRange { vertex: u.max(v), n: g.n() });
            }
            if !g.has_edge(u, v) {
                return Err(Error::NotAnEdge(u, v));
            }
        }
        Ok(set)
    }

    pub fn edges(&self) -> &[Edge] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn iter(&self) -> std::slice::Iter<'_, Edge> {
        self.0.iter()
    }

    pub fn contains(&self, e: Edge) -> bool {
        self.0.binary_search(&normalize_edge(e.0, e.1)).is_ok()
    }

    /// Union of the endpoints.
    pub fn vertices(&self) -> VertexSet {
        self.0.iter().fold(VertexSet::EMPTY, |s, &(u, v)| s.with(u).with(v))
    }

    /// 1-indexed pairs for reports.
    pub fn to_labels(&self) -> Vec<[usize; 2]> {
        self.0.iter().map(|&(u, v)| [u + 1, v + 1]).collect()
    }
}

/// A finite simple graph. Immutable once built.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    adj: Vec<u64>,
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n, self.edges())
    }
}

impl Graph {
    /// Edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Result<Self> {
        if n > MAX_VERTICES {
            return Err(Error::GraphTooLarge { n, max: MAX_VERTICES });
        }
        Ok(Graph { n, adj: vec![0; n] })
    }

    /// Builds a graph from 0-indexed edges. Loops, repeated edges and
    /// out-of-range endpoints are rejected.
    pub fn from_edges(n: usize, edges: &[Edge]) -> Result<Self> {
        let mut g = Graph::empty(n)?;
        for &(a, b) in edges {
            g.add_edge_checked(a, b)?;
        }
        Ok(g)
    }

    /// Builds a graph from 1-indexed edges, as printed in the literature.
    pub fn from_labeled_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = Graph::empty(n)?;
        for &(a, b) in edges {
            if a == 0 || b == 0 {
                return Err(Error::Parse(format!("label 0 in 1-indexed edge ({a}, {b})")));
            }
            g.add_edge_checked(a - 1, b - 1)?;
        }
        Ok(g)
    }

    /// Raw constructor from symmetric, loop-free adjacency masks.
    pub(crate) fn from_adjacency(n: usize, adj: Vec<u64>) -> Self {
        debug_assert_eq!(adj.len(), n);
        debug_assert!((0..n).all(|v| adj[v] >> v & 1 == 0));
        Graph { n, adj }
    }

    fn add_edge_checked(&mut self, a: usize, b: usize) -> Result<()> {
        let n = self.n;
        if a >= n || b >= n {
            return Err(Error::VertexOutOfRange { vertex: a.max(b), n });
        }
        if a == b {
            return Err(Error::Loop(a));
        }
        if self.has_edge(a, b) {
            return Err(Error::DuplicateEdge(a.min(b), a.max(b)));
        }
        self.adj[a] |= 1 << b;
        self.adj[b] |= 1 << a;
        Ok(())
    }

    /// Returns a copy with the edge `{a, b}` added (no-op if present).
    pub fn with_edge(&self, a: usize, b: usize) -> Result<Self> {
        let mut g = self.clone();
        if !g.has_edge(a, b) {
            g.add_edge_checked(a, b)?;
        }
        Ok(g)
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.n)
    }

    #[inline]
    pub fn neighbors(&self, v: usize) -> VertexSet {
        VertexSet(self.adj[v])
    }

    /// Raw adjacency masks, indexed by vertex.
    #[inline]
    pub fn adjacency(&self) -> &[u64] {
        &self.adj
    }

    #[inline]
    pub fn has_edge(&self, a: usize, b: usize) -> bool {
        a < self.n && b < self.n && self.adj[a] >> b & 1 == 1
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    /// Degree of `v` inside the induced subgraph on `within`.
    #[inline]
    pub fn degree_in(&self, v: usize, within: VertexSet) -> usize {
        (self.adj[v] & within.0).count_ones() as usize
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|a| a.count_ones() as usize).sum::<usize>() / 2
    }

    /// All edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> Vec<Edge> {
        let mut out = Vec::with_capacity(self.edge_count());
        for u in 0..self.n {
            for v in VertexSet(self.adj[u] >> u >> 1 << u << 1) {
                out.push((u, v));
            }
        }
        out
    }

    /// Edges with both endpoints in `within`.
    pub fn edges_within(&self, within: VertexSet) -> Vec<Edge> {
        let mut out = Vec::new();
        for u in within {
            for v in VertexSet(self.adj[u] & within.0) {
                if u < v {
                    out.push((u, v));
                }
            }
        }
        out
    }

    pub fn is_edgeless(&self) -> bool {
        self.adj.iter().all(|&a| a == 0)
    }

    /// `N(U)`, the union of open neighborhoods.
    pub fn open_neighborhood(&self, u: VertexSet) -> VertexSet {
        u.iter().fold(VertexSet::EMPTY, |acc, x| acc | self.neighbors(x))
    }

    /// `N[U] = U ∪ N(U)`.
    pub fn closed_neighborhood(&self, u: VertexSet) -> VertexSet {
        u | self.open_neighborhood(u)
    }

    fn check_subset(&self, w: VertexSet) -> Result<()> {
        if !w.is_subset(self.vertices()) {
            let bad = (w - self.vertices()).first().unwrap_or(0);
            return Err(Error::VertexOutOfRange { vertex: bad, n: self.n });
        }
        Ok(())
    }

    /// The induced subgraph `G_W`, relabeled to `0..|W|` in increasing order.
    /// The returned map sends new labels to old ones.
    pub fn induced_subgraph(&self, w: VertexSet) -> Result<(Graph, Vec<usize>)> {
        self.check_subset(w)?;
        let map = w.to_vec();
        let mut pos = [usize::MAX; 64];
        for (i, &v) in map.iter().enumerate() {
            pos[v] = i;
        }
        let adj = map.iter().map(|&v| VertexSet(self.adj[v] & w.0).iter().fold(0u64, |m, u| m | 1 << pos[u])).collect();
        Ok((Graph::from_adjacency(map.len(), adj), map))
    }

    /// `G ∖ N[U]` with its index map.
    pub fn remove_closed_neighborhood(&self, u: VertexSet) -> Result<(Graph, Vec<usize>)> {
        self.check_subset(u)?;
        self.induced_subgraph(self.vertices() - self.closed_neighborhood(u))
    }

    /// `G ∖ W` with its index map.
    pub fn remove_vertices(&self, w: VertexSet) -> Result<(Graph, Vec<usize>)> {
        self.check_subset(w)?;
        self.induced_subgraph(self.vertices() - w)
    }

    /// Same vertex set, keeping only the listed edges.
    pub fn spanning_subgraph(&self, edges: &[Edge]) -> Result<Graph> {
        let mut g = Graph::empty(self.n)?;
        for &(a, b) in edges {
            if !self.has_edge(a, b) {
                return Err(Error::NotAnEdge(a, b));
            }
            g.add_edge_checked(a, b)?;
        }
        Ok(g)
    }

    pub fn isolated_vertices(&self) -> VertexSet {
        (0..self.n).filter(|&v| self.adj[v] == 0).collect()
    }

    /// Vertices of `within` with no neighbor inside `within`.
    pub fn isolated_within(&self, within: VertexSet) -> VertexSet {
        within.iter().filter(|&v| self.adj[v] & within.0 == 0).collect()
    }

    /// Connected component of `start` inside the induced subgraph on `within`.
    pub fn component_within(&self, start: usize, within: VertexSet) -> VertexSet {
        let mut seen = VertexSet::singleton(start);
        let mut frontier = seen;
        while !frontier.is_empty() {
            let next = self.open_neighborhood(frontier) & within;
            frontier = next - seen;
            seen |= next;
        }
        seen
    }

    /// Components of the induced subgraph on `within`, ordered by least vertex.
    pub fn components_within(&self, within: VertexSet) -> Vec<VertexSet> {
        let mut rest = within;
        let mut out = Vec::new();
        while let Some(v) = rest.first() {
            let c = self.component_within(v, within);
            rest = rest - c;
            out.push(c);
        }
        out
    }

    pub fn connected_components(&self) -> Vec<VertexSet> {
        self.components_within(self.vertices())
    }

    /// The 0-vertex graph counts as connected.
    pub fn is_connected(&self) -> bool {
        self.n == 0 || self.component_within(0, self.vertices()) == self.vertices()
    }

    /// Whether `s` is an independent set.
    pub fn is_independent(&self, s: VertexSet) -> bool {
        s.iter().all(|v| self.adj[v] & s.0 == 0)
    }

    /// Relabels by `perm`, sending old vertex `v` to `perm[v]`.
    pub fn permuted(&self, perm: &[usize]) -> Graph {
        let mut adj = vec![0u64; self.n];
        for v in 0..self.n {
            adj[perm[v]] = VertexSet(self.adj[v]).iter().fold(0, |m, u| m | 1 << perm[u]);
        }
        Graph::from_adjacency(self.n, adj)
    }

    /// Disjoint union, with `other`'s vertices shifted past ours.
    pub fn disjoint_union(&self, other: &Graph) -> Result<Graph> {
        let n = self.n + other.n;
        if n > MAX_VERTICES {
            return Err(Error::GraphTooLarge { n, max: MAX_VERTICES });
        }
        let mut adj = self.adj.clone();
        adj.extend(other.adj.iter().map(|&a| a << self.n));
        Ok(Graph::from_adjacency(n, adj))
    }
}
