//! Matching numbers, dominating induced matchings and the partition that
//! certifies `ind-match(G) = min-match(G)`.
//!
//! All three numbers are exact branch-and-bound searches over vertex bitsets.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{normalize_edge, Edge, EdgeSet, Graph, VertexSet};

/// Default cap for [`enumerate_dims`].
pub const DEFAULT_DIM_LIMIT: usize = 1_000_000;

/// A matching together with its classification against the ambient graph.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Matching {
    pub edges: EdgeSet,
    pub is_maximal: bool,
    pub is_induced: bool,
    pub is_dominating_induced: bool,
}

impl Matching {
    /// Validates that `edges` are edges of `g` and pairwise disjoint.
    pub fn new<I: IntoIterator<Item = Edge>>(g: &Graph, edges: I) -> Result<Self> {
        let edges = EdgeSet::in_graph(g, edges)?;
        let mut used = VertexSet::EMPTY;
        for &(u, v) in edges.iter() {
            if used.contains(u) || used.contains(v) {
                return Err(Error::InvalidMatching(format!("edges overlap at {{{u}, {v}}}")));
            }
            used = used.with(u).with(v);
        }
        let is_maximal = is_maximal_matching(g, &edges);
        let is_induced = is_induced_matching(g, &edges);
        Ok(Matching { is_dominating_induced: is_maximal && is_induced, edges, is_maximal, is_induced })
    }

    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }
}

fn is_maximal_matching(g: &Graph, m: &EdgeSet) -> bool {
    let free = g.vertices() - m.vertices();
    g.edges_within(free).is_empty()
}

/// Pairwise 3-disjoint: no edge of `g` touches two members.
fn is_induced_matching(g: &Graph, m: &EdgeSet) -> bool {
    let covered = m.vertices();
    m.iter().all(|&(u, v)| {
        let reach = (g.neighbors(u) | g.neighbors(v)) - VertexSet::from_vertices([u, v]);
        !reach.intersects(covered)
    })
}

/// Vertices of `alive` with at least one neighbor in `alive`.
#[inline]
fn non_isolated(g: &Graph, alive: VertexSet) -> VertexSet {
    alive.iter().filter(|&v| g.degree_in(v, alive) > 0).collect()
}

/// `match(G)`: largest matching.
pub fn matching_number(g: &Graph) -> usize {
    fn rec(g: &Graph, alive: VertexSet, cur: usize, best: &mut usize) {
        let alive = non_isolated(g, alive);
        let Some(v) = alive.first() else {
            *best = (*best).max(cur);
            return;
        };
        if cur + alive.len() / 2 <= *best {
            return;
        }
        let nbrs = g.neighbors(v) & alive;
        if nbrs.len() == 1 {
            // Matching a leaf to its only neighbor never loses.
            let u = nbrs.first().unwrap();
            rec(g, alive.without(u).without(v), cur + 1, best);
            return;
        }
        for u in nbrs {
            rec(g, alive.without(u).without(v), cur + 1, best);
        }
        rec(g, alive.without(v), cur, best);
    }
    let mut best = 0;
    rec(g, g.vertices(), 0, &mut best);
    best
}

/// `ind-match(G)`: largest induced matching.
pub fn induced_matching_number(g: &Graph) -> usize {
    induced_matching_number_within(g, g.vertices())
}

pub(crate) fn induced_matching_number_within(g: &Graph, within: VertexSet) -> usize {
    fn rec(g: &Graph, alive: VertexSet, cur: usize, best: &mut usize) {
        let alive = non_isolated(g, alive);
        let Some(v) = alive.first() else {
            *best = (*best).max(cur);
            return;
        };
        if cur + alive.len() / 2 <= *best {
            return;
        }
        let nv = g.closed_neighborhood(VertexSet::singleton(v));
        for u in g.neighbors(v) & alive {
            let blocked = nv | g.closed_neighborhood(VertexSet::singleton(u));
            rec(g, alive - blocked, cur + 1, best);
        }
        rec(g, alive.without(v), cur, best);
    }
    let mut best = 0;
    rec(g, within, 0, &mut best);
    best
}

/// Greedy induced matching inside `G[within]`, measured in that subgraph.
fn greedy_induced_lower_bound(g: &Graph, within: VertexSet) -> usize {
    let mut alive = within;
    let mut count = 0;
    while let Some(v) = non_isolated(g, alive).first() {
        let u = (g.neighbors(v) & alive).first().unwrap();
        let blocked = (g.neighbors(u) | g.neighbors(v)).with(u).with(v) & within;
        alive = alive - blocked;
        count += 1;
    }
    count
}

fn greedy_maximal_matching(g: &Graph) -> usize {
    let mut free = g.vertices();
    let mut count = 0;
    for (u, v) in g.edges() {
        if free.contains(u) && free.contains(v) {
            free = free.without(u).without(v);
            count += 1;
        }
    }
    count
}

/// `min-match(G)`: smallest maximal matching (minimum edge dominating set).
pub fn min_matching_number(g: &Graph) -> usize {
    fn rec(g: &Graph, free: VertexSet, cur: usize, best: &mut usize) {
        let active = non_isolated(g, free);
        let Some(u) = active.first() else {
            *best = (*best).min(cur);
            return;
        };
        if cur + greedy_induced_lower_bound(g, active) >= *best {
            return;
        }
        // Edge {u, v} must be touched by some chosen edge at u or at v.
        let v = (g.neighbors(u) & free).first().unwrap();
        for w in g.neighbors(u) & free {
            rec(g, free.without(u).without(w), cur + 1, best);
        }
        for w in (g.neighbors(v) & free).without(u) {
            rec(g, free.without(v).without(w), cur + 1, best);
        }
    }
    let mut best = greedy_maximal_matching(g);
    rec(g, g.vertices(), 0, &mut best);
    best
}

/// Lexicographically least sorted edge list of size `k` that is a matching,
/// induced if `induced`, maximal if `maximal`.
fn lex_least_matching(g: &Graph, k: usize, induced: bool, maximal: bool) -> Option<Vec<Edge>> {
    struct Search<'a> {
        g: &'a Graph,
        edges: Vec<Edge>,
        k: usize,
        induced: bool,
        maximal: bool,
        chosen: Vec<Edge>,
    }
    impl Search<'_> {
        fn run(&mut self, from: usize, used: VertexSet, blocked: VertexSet) -> bool {
            if self.chosen.len() == self.k {
                return !self.maximal || self.g.edges_within(self.g.vertices() - used).is_empty();
            }
            let need = self.k - self.chosen.len();
            for j in from..self.edges.len() {
                if self.edges.len() - j < need {
                    break;
                }
                let (a, b) = self.edges[j];
                let pair = VertexSet::from_vertices([a, b]);
                let forbidden = if self.induced { blocked } else { used };
                if pair.intersects(forbidden) {
                    continue;
                }
                self.chosen.push((a, b));
                let nb = blocked | self.g.closed_neighborhood(pair);
                if self.run(j + 1, used | pair, nb) {
                    return true;
                }
                self.chosen.pop();
            }
            false
        }
    }
    let mut s = Search { g, edges: g.edges(), k, induced, maximal, chosen: Vec::with_capacity(k) };
    s.run(0, VertexSet::EMPTY, VertexSet::EMPTY).then_some(s.chosen)
}

/// The lexicographically least maximum induced matching.
pub fn maximum_induced_matching(g: &Graph) -> Matching {
    let k = induced_matching_number(g);
    let edges = lex_least_matching(g, k, true, false).expect("optimum is attained");
    Matching::new(g, edges).expect("search yields a matching")
}

/// The lexicographically least minimum maximal matching.
pub fn minimum_maximal_matching(g: &Graph) -> Matching {
    let k = min_matching_number(g);
    let edges = lex_least_matching(g, k, false, true).expect("optimum is attained");
    Matching::new(g, edges).expect("search yields a matching")
}

/// For each `e_k` in the induced matching `m`, the index of the first edge of
/// the maximal matching `m_prime` that meets it.
pub fn pair_induced_with_maximal(m: &Matching, m_prime: &Matching) -> Result<Vec<usize>> {
    if !m.is_induced || !m_prime.is_maximal {
        return Err(Error::InvalidMatching("need an induced and a maximal matching".into()));
    }
    m.edges
        .iter()
        .map(|&(a, b)| {
            m_prime
                .edges
                .iter()
                .position(|&(c, d)| a == c || a == d || b == c || b == d)
                .ok_or_else(|| Error::TheoremViolation(format!("no maximal-matching edge meets {{{a}, {b}}}")))
        })
        .collect()
}

/// Outcome of [`enumerate_dims`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DimEnumeration {
    pub dims: Vec<Matching>,
    pub truncated: bool,
}

/// All dominating induced matchings, found by searching induced matchings
/// vertex by vertex and pruning as soon as two unmatched vertices are adjacent.
pub fn enumerate_dims(g: &Graph, limit: usize) -> DimEnumeration {
    struct Search<'a> {
        g: &'a Graph,
        limit: usize,
        chosen: Vec<Edge>,
        out: Vec<Vec<Edge>>,
        truncated: bool,
    }
    impl Search<'_> {
        // `undecided`: not yet placed; `unmatched`: placed outside the matching.
        fn run(&mut self, undecided: VertexSet, unmatched: VertexSet) {
            if self.truncated {
                return;
            }
            let Some(v) = undecided.first() else {
                if self.out.len() >= self.limit {
                    self.truncated = true;
                } else {
                    self.out.push(self.chosen.clone());
                }
                return;
            };
            let g = self.g;
            if !g.neighbors(v).intersects(unmatched) {
                self.run(undecided.without(v), unmatched.with(v));
            }
            let matched = g.vertices() - undecided - unmatched;
            for u in g.neighbors(v) & undecided {
                let pair = VertexSet::from_vertices([u, v]);
                let ring = g.open_neighborhood(pair) - pair;
                // Induced: no neighbor of the new edge is matched.
                if ring.intersects(matched) {
                    continue;
                }
                // The ring is forced outside the matching, so it must stay independent.
                let newly = ring & undecided;
                let outside = unmatched | newly;
                if !g.is_independent(outside) {
                    continue;
                }
                self.chosen.push(normalize_edge(u, v));
                self.run(undecided - pair - newly, outside);
                self.chosen.pop();
            }
        }
    }
    let mut s = Search { g, limit, chosen: Vec::new(), out: Vec::new(), truncated: false };
    s.run(g.vertices(), VertexSet::EMPTY);
    let mut dims: Vec<Matching> =
        s.out.into_iter().map(|e| Matching::new(g, e).expect("search yields a matching")).collect();
    dims.sort_by(|a, b| a.edges.cmp(&b.edges));
    DimEnumeration { dims, truncated: s.truncated }
}

/// Every independent set of `g`, in DFS order.
pub(crate) fn independent_sets(g: &Graph) -> Vec<VertexSet> {
    fn rec(g: &Graph, undecided: VertexSet, cur: VertexSet, out: &mut Vec<VertexSet>) {
        let Some(v) = undecided.first() else {
            out.push(cur);
            return;
        };
        rec(g, undecided.without(v), cur, out);
        rec(g, undecided - g.closed_neighborhood(VertexSet::singleton(v)), cur.with(v), out);
    }
    let mut out = Vec::new();
    rec(g, g.vertices(), VertexSet::EMPTY, &mut out);
    out
}

/// All dominating induced matchings via the characterization: `W` independent
/// and `G ∖ W` a disjoint union of edges.
pub fn enumerate_dims_by_independent_sets(g: &Graph) -> Vec<Matching> {
    let mut out: Vec<Matching> = independent_sets(g)
        .into_iter()
        .filter_map(|w| {
            let rest = g.vertices() - w;
            rest.iter()
                .all(|v| g.degree_in(v, rest) == 1)
                .then(|| Matching::new(g, g.edges_within(rest)).expect("1-regular edges are a matching"))
        })
        .collect();
    out.sort_by(|a, b| a.edges.cmp(&b.edges));
    out
}

pub fn has_dominating_induced_matching(g: &Graph) -> bool {
    !enumerate_dims(g, 1).dims.is_empty()
}

/// `V = W ⊔ M` induced by a dominating induced matching.
///
/// `pairs[j] = (x_{j1}, x_{j2})`; the orientation of each pair is part of the
/// data (it decides which endpoint is "first" in the per-pair conditions).
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct DimDecomposition {
    pub w: VertexSet,
    pub pairs: Vec<(usize, usize)>,
    pub m1: usize,
    pub m2: usize,
    /// Non-isolated vertices of `W`.
    pub w0: VertexSet,
}

impl DimDecomposition {
    /// Validates `pairs` as the matching of a DIM decomposition of `g`.
    pub fn from_pairs(g: &Graph, pairs: &[(usize, usize)]) -> Result<Self> {
        let mut covered = VertexSet::EMPTY;
        for &(a, b) in pairs {
            if !g.has_edge(a, b) {
                return Err(Error::InvalidDecomposition(format!("{{{a}, {b}}} is not an edge")));
            }
            if covered.contains(a) || covered.contains(b) {
                return Err(Error::InvalidDecomposition(format!("pair {{{a}, {b}}} overlaps")));
            }
            covered = covered.with(a).with(b);
        }
        if covered.iter().any(|v| g.degree_in(v, covered) != 1) {
            return Err(Error::InvalidDecomposition("pairs are not an induced matching".into()));
        }
        let w = g.vertices() - covered;
        if !g.is_independent(w) {
            return Err(Error::InvalidDecomposition("W is not independent".into()));
        }
        let m1 = pairs.iter().filter(|&&(a, b)| g.degree(a) == 1 || g.degree(b) == 1).count();
        Ok(DimDecomposition { w, pairs: pairs.to_vec(), m1, m2: pairs.len() - m1, w0: w - g.isolated_vertices() })
    }

    pub fn m(&self) -> usize {
        self.pairs.len()
    }

    /// `M`, the union of the pairs.
    pub fn matched(&self) -> VertexSet {
        self.pairs.iter().fold(VertexSet::EMPTY, |s, &(a, b)| s.with(a).with(b))
    }

    /// Index of the pair containing `x`.
    pub fn pair_of(&self, x: usize) -> Option<usize> {
        self.pairs.iter().position(|&(a, b)| a == x || b == x)
    }

    /// Whether pair `j` has both endpoints of degree at least 2.
    pub fn is_m2_pair(&self, g: &Graph, j: usize) -> bool {
        let (a, b) = self.pairs[j];
        g.degree(a) >= 2 && g.degree(b) >= 2
    }
}

/// The decomposition certified by a dominating induced matching `m`.
pub fn dim_decomposition(g: &Graph, m: &Matching) -> Result<DimDecomposition> {
    if !m.is_induced {
        return Err(Error::InvalidMatching("matching is not induced".into()));
    }
    if !m.is_maximal {
        return Err(Error::InvalidMatching("matching is not maximal".into()));
    }
    DimDecomposition::from_pairs(g, m.edges.edges())
}

/// All DIM decompositions of `g`, pairs oriented with the smaller label first.
pub fn all_dim_decompositions(g: &Graph) -> Vec<DimDecomposition> {
    enumerate_dims(g, DEFAULT_DIM_LIMIT)
        .dims
        .iter()
        .map(|m| dim_decomposition(g, m).expect("enumerated matchings are dominating induced"))
        .collect()
}

/// Which rule admits an edge of `E'`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum ExtraEdgeKind {
    /// (i) contains some `z_i`.
    ContainsZ,
    /// (ii) an endpoint of `e_i` with `i > α`, joined to some `w_j`.
    PairToW,
    /// (iii) `{v_{i1}, w_j}` with `i ≤ α`.
    AnchorToW,
}

/// A vertex partition witnessing `ind-match(G) = min-match(G)`.
///
/// `pairs[i] = (v_{i1}, v_{i2})`; the first `alpha` pairs also carry
/// `e_i' = {v_{i1}, z_i}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EqPartition {
    pub alpha: usize,
    pub beta: usize,
    pub gamma: usize,
    pub pairs: Vec<(usize, usize)>,
    pub z: Vec<usize>,
    pub w: Vec<usize>,
    pub extra: Vec<(Edge, ExtraEdgeKind)>,
}

fn classify_extra(p: &EqPartition, e: Edge) -> Option<ExtraEdgeKind> {
    let (a, b) = e;
    let has = |x: usize| a == x || b == x;
    let other = |x: usize| if a == x { b } else { a };
    if p.z.iter().any(|&z| has(z)) {
        return Some(ExtraEdgeKind::ContainsZ);
    }
    let in_w = |x: usize| p.w.contains(&x);
    let tail = &p.pairs[p.alpha.min(p.pairs.len())..];
    if tail.iter().any(|&(x, y)| (has(x) && in_w(other(x))) || (has(y) && in_w(other(y)))) {
        return Some(ExtraEdgeKind::PairToW);
    }
    if p.pairs[..p.alpha.min(p.pairs.len())].iter().any(|&(x, _)| has(x) && in_w(other(x))) {
        return Some(ExtraEdgeKind::AnchorToW);
    }
    None
}

/// Builds the partition from a maximum induced matching and a minimum maximal
/// matching, or returns `None` when `ind-match(G) < min-match(G)`.
pub fn eq_partition(g: &Graph) -> Result<Option<EqPartition>> {
    let m = maximum_induced_matching(g);
    let m_prime = minimum_maximal_matching(g);
    if m.len() != m_prime.len() {
        return Ok(None);
    }
    let idx = pair_induced_with_maximal(&m, &m_prime)?;
    let mut seen = vec![false; m_prime.len()];
    for &i in &idx {
        if std::mem::replace(&mut seen[i], true) {
            return Err(Error::TheoremViolation("pairing k -> i_k is not injective".into()));
        }
    }
    let mut moved = Vec::new();
    let mut fixed = Vec::new();
    let mut z = Vec::new();
    for (k, &(a, b)) in m.edges.iter().enumerate() {
        let (c, d) = m_prime.edges.edges()[idx[k]];
        if (a, b) == (c, d) {
            fixed.push((a, b));
        } else {
            let shared = if a == c || a == d { a } else { b };
            let other = if shared == a { b } else { a };
            let zk = if c == shared { d } else { c };
            moved.push((shared, other));
            z.push(zk);
        }
    }
    let alpha = moved.len();
    let pairs: Vec<(usize, usize)> = moved.into_iter().chain(fixed).collect();
    let used = pairs.iter().fold(VertexSet::from_vertices(z.iter().copied()), |s, &(a, b)| s.with(a).with(b));
    let w = (g.vertices() - used).to_vec();
    let mut p = EqPartition { alpha, beta: pairs.len() - alpha, gamma: w.len(), pairs, z, w, extra: Vec::new() };
    let structural: Vec<Edge> = p
        .pairs
        .iter()
        .map(|&(a, b)| normalize_edge(a, b))
        .chain((0..alpha).map(|i| normalize_edge(p.pairs[i].0, p.z[i])))
        .collect();
    for e in g.edges() {
        if structural.contains(&e) {
            continue;
        }
        let kind =
            classify_extra(&p, e).ok_or_else(|| Error::TheoremViolation(format!("edge {e:?} fits no rule of E'")))?;
        p.extra.push((e, kind));
    }
    if !verify_eq_partition(g, &p) {
        return Err(Error::TheoremViolation("constructed partition fails verification".into()));
    }
    Ok(Some(p))
}

/// Checks every structural requirement of an [`EqPartition`] against `g`.
pub fn verify_eq_partition(g: &Graph, p: &EqPartition) -> bool {
    let n = g.n();
    if p.pairs.len() != p.alpha + p.beta || p.z.len() != p.alpha || p.w.len() != p.gamma {
        return false;
    }
    let mut seen = VertexSet::EMPTY;
    let all = p.pairs.iter().flat_map(|&(a, b)| [a, b]).chain(p.z.iter().copied()).chain(p.w.iter().copied());
    for v in all {
        if v >= n || seen.contains(v) {
            return false;
        }
        seen.insert(v);
    }
    if seen != g.vertices() {
        return false;
    }
    let mut expected: Vec<Edge> = Vec::new();
    for (i, &(a, b)) in p.pairs.iter().enumerate() {
        if !g.has_edge(a, b) {
            return false;
        }
        expected.push(normalize_edge(a, b));
        if i < p.alpha {
            if !g.has_edge(a, p.z[i]) {
                return false;
            }
            expected.push(normalize_edge(a, p.z[i]));
        }
    }
    for &((a, b), kind) in &p.extra {
        if !g.has_edge(a, b) || classify_extra(p, (a, b)) != Some(kind) {
            return false;
        }
        expected.push(normalize_edge(a, b));
    }
    expected.sort_unstable();
    let len = expected.len();
    expected.dedup();
    len == expected.len() && expected == g.edges()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn lab(n: usize, e: &[(usize, usize)]) -> Graph {
        Graph::from_labeled_edges(n, e).unwrap()
    }
    fn g0() -> Graph {
        lab(6, &[(1, 2), (2, 3), (3, 4), (4, 5), (3, 6)])
    }
    fn path(n: usize) -> Graph {
        Graph::from_edges(n, &(1..n).map(|i| (i - 1, i)).collect::<Vec<_>>()).unwrap()
    }
    fn cycle(n: usize) -> Graph {
        Graph::from_edges(n, &(0..n).map(|i| (i, (i + 1) % n)).collect::<Vec<_>>()).unwrap()
    }
    fn complete(n: usize) -> Graph {
        let mut e = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                e.push((i, j));
            }
        }
        Graph::from_edges(n, &e).unwrap()
    }

    #[test]
    fn matching_numbers_of_named_graphs() {
        assert_eq!(matching_number(&complete(4)), 2);
        assert_eq!(matching_number(&complete(7)), 3);
        assert_eq!(matching_number(&Graph::empty(5).unwrap()), 0);
        assert_eq!(matching_number(&g0()), 3);

        assert_eq!(min_matching_number(&cycle(5)), 2);
        assert_eq!(min_matching_number(&g0()), 2);
        assert_eq!(min_matching_number(&path(6)), 2);
        assert_eq!(min_matching_number(&Graph::empty(3).unwrap()), 0);

        assert_eq!(induced_matching_number(&complete(5)), 1);
        assert_eq!(induced_matching_number(&g0()), 2);
        assert_eq!(induced_matching_number(&cycle(5)), 1);
    }

    #[test]
    fn g0_has_no_dim_but_equal_numbers() {
        let g = g0();
        assert!(!has_dominating_induced_matching(&g));
        assert!(enumerate_dims_by_independent_sets(&g).is_empty());
        let p = eq_partition(&g).unwrap().expect("ind = min = 2");
        assert_eq!(p.alpha + p.beta, 2);
        assert!(verify_eq_partition(&g, &p));
    }

    #[test]
    fn p4_dim_and_decomposition() {
        let g = path(4);
        let dims = enumerate_dims(&g, DEFAULT_DIM_LIMIT);
        assert!(!dims.truncated);
        assert_eq!(dims.dims.len(), 1);
        assert_eq!(dims.dims[0].edges.edges(), &[(1, 2)]);
        let d = dim_decomposition(&g, &dims.dims[0]).unwrap();
        assert_eq!(d.w, VertexSet::from_vertices([0, 3]));
        assert_eq!((d.m1, d.m2), (0, 1));
        assert_eq!(d.w0, VertexSet::from_vertices([0, 3]));
    }

    #[test]
    fn single_edge_decomposition() {
        let g = path(2);
        let m = Matching::new(&g, [(0, 1)]).unwrap();
        let d = dim_decomposition(&g, &m).unwrap();
        assert_eq!((d.w, d.m1, d.m2), (VertexSet::EMPTY, 1, 0));
    }

    #[test]
    fn g1_decomposition() {
        let g = lab(6, &[(1, 3), (1, 4), (1, 5), (2, 4), (2, 5), (2, 6), (3, 4), (5, 6)]);
        let m = Matching::new(&g, [(2, 3), (4, 5)]).unwrap();
        let d = dim_decomposition(&g, &m).unwrap();
        assert_eq!(d.m2, 2);
        assert_eq!(d.w0, VertexSet::from_vertices([0, 1]));
    }

    #[test]
    fn decomposition_rejects_non_dims() {
        let g = path(4);
        let m = Matching::new(&g, [(0, 1)]).unwrap();
        assert!(!m.is_maximal);
        assert!(matches!(dim_decomposition(&g, &m), Err(Error::InvalidMatching(_))));
        let m = Matching::new(&g, [(0, 1), (2, 3)]).unwrap();
        assert!(!m.is_induced);
        assert!(dim_decomposition(&g, &m).is_err());
        assert!(Matching::new(&g, [(0, 1), (1, 2)]).is_err());
    }

    #[test]
    fn c6_has_a_dim_with_w_36() {
        let g = cycle(6);
        let dims = enumerate_dims(&g, DEFAULT_DIM_LIMIT).dims;
        let by_w = enumerate_dims_by_independent_sets(&g);
        assert_eq!(dims, by_w);
        assert!(dims.iter().any(|m| dim_decomposition(&g, m).unwrap().w == VertexSet::from_vertices([2, 5])));
    }

    #[test]
    fn eq_partition_cases() {
        assert!(eq_partition(&cycle(5)).unwrap().is_none());
        let p = eq_partition(&path(4)).unwrap().unwrap();
        assert_eq!(p.alpha + p.beta, 1);
        assert!(verify_eq_partition(&path(4), &p));
    }

    #[test]
    fn verify_rejects_mislabeled_partitions() {
        let g = g0();
        let p = eq_partition(&g).unwrap().unwrap();
        // Swap the tag of some extra edge, or drop it.
        if let Some(&(e, kind)) = p.extra.first() {
            let mut q = p.clone();
            q.extra[0] =
                (e, if kind == ExtraEdgeKind::ContainsZ { ExtraEdgeKind::AnchorToW } else { ExtraEdgeKind::ContainsZ });
            assert!(!verify_eq_partition(&g, &q));
            let mut q = p.clone();
            q.extra.remove(0);
            assert!(!verify_eq_partition(&g, &q));
        }
        let mut q = p.clone();
        q.gamma += 1;
        assert!(!verify_eq_partition(&g, &q));
        let mut q = p;
        q.pairs.swap(0, 1);
        if q.alpha == 1 {
            assert!(!verify_eq_partition(&g, &q));
        }
    }

    #[test]
    fn k2_trivial_partition() {
        let g = path(2);
        let p = EqPartition { alpha: 0, beta: 1, gamma: 0, pairs: vec![(0, 1)], z: vec![], w: vec![], extra: vec![] };
        assert!(verify_eq_partition(&g, &p));
    }

    #[test]
    fn lex_least_choices() {
        let g = path(6);
        assert_eq!(maximum_induced_matching(&g).edges.edges(), &[(0, 1), (3, 4)]);
        assert_eq!(minimum_maximal_matching(&g).edges.edges(), &[(0, 1), (3, 4)]);
    }

    #[test]
    fn dim_limit_truncates() {
        let g = Graph::empty(0).unwrap().disjoint_union(&path(2)).unwrap();
        let g = g.disjoint_union(&path(4)).unwrap();
        let all = enumerate_dims(&g, DEFAULT_DIM_LIMIT);
        assert_eq!(all.dims.len(), 1);
        let c6 = cycle(6);
        let capped = enumerate_dims(&c6, 1);
        assert!(capped.truncated);
        assert_eq!(capped.dims.len(), 1);
    }
}
