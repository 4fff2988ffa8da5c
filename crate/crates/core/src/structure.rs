//! Chordality, the collapsed graph of a DIM decomposition, Cameron–Walker
//! recognition, shedding vertices, vertex decomposability, and the pair
//! conditions that guarantee vertex decomposability for DIM graphs.

use std::collections::HashMap;
use std::sync::Mutex;

use serde::{Deserialize, Serialize};

use crate::covers::maximal_independent_sets_within;
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};
use crate::matchings::{induced_matching_number, matching_number, DimDecomposition};
use crate::par::{self, Exec};

/// Largest graph accepted by [`is_vertex_decomposable`] by default.
pub const DEFAULT_VD_LIMIT: usize = 20;

/// Chordal iff simplicial vertices can be peeled off one at a time.
pub fn is_chordal(g: &Graph) -> bool {
    let mut alive = g.vertices();
    while !alive.is_empty() {
        let simplicial = alive.iter().find(|&v| {
            let nb = g.neighbors(v) & alive;
            nb.iter().all(|u| nb.without(u).is_subset(g.neighbors(u)))
        });
        match simplicial {
            Some(v) => alive.remove(v),
            None => return false,
        }
    }
    true
}

/// The bipartite graph obtained by identifying each matched pair.
///
/// Vertices of `W` come first in increasing order, then one vertex per pair
/// in the order of `d.pairs`.
pub fn tilde_graph(g: &Graph, d: &DimDecomposition) -> Graph {
    let w = d.w.to_vec();
    let mut edges = Vec::new();
    for (j, &(a, b)) in d.pairs.iter().enumerate() {
        for (i, &y) in w.iter().enumerate() {
            if g.has_edge(y, a) || g.has_edge(y, b) {
                edges.push((i, w.len() + j));
            }
        }
    }
    Graph::from_edges(w.len() + d.pairs.len(), &edges).expect("collapsed graph is simple")
}

pub fn is_forest(g: &Graph) -> bool {
    g.edge_count() + g.connected_components().len() == g.n()
}

/// `K_{1,r}` with `r ≥ 1`.
pub fn is_star(g: &Graph) -> bool {
    let n = g.n();
    n >= 2 && g.edge_count() == n - 1 && g.vertices().iter().any(|v| g.degree(v) == n - 1)
}

/// `k ≥ 1` triangles sharing exactly one common vertex.
pub fn is_star_triangle(g: &Graph) -> bool {
    let n = g.n();
    if n < 3 || n.is_multiple_of(2) || g.edge_count() != 3 * (n - 1) / 2 {
        return false;
    }
    g.vertices().iter().filter(|&c| g.degree(c) == n - 1).any(|c| {
        let rest = g.vertices().without(c);
        rest.iter().all(|v| g.degree_in(v, rest) == 1)
    })
}

/// Connected, `ind-match = match`, and neither a star nor a star triangle.
pub fn is_cameron_walker(g: &Graph) -> bool {
    g.edge_count() > 0
        && g.is_connected()
        && !is_star(g)
        && !is_star_triangle(g)
        && induced_matching_number(g) == matching_number(g)
}

/// Triangles `{apex, v1, v2}` with `deg v1 = deg v2 = 2` and `deg apex > 2`.
pub fn pendant_triangles(g: &Graph) -> Vec<(usize, usize, usize)> {
    let mut out = Vec::new();
    for (v1, v2) in g.edges() {
        if g.degree(v1) != 2 || g.degree(v2) != 2 {
            continue;
        }
        for apex in g.neighbors(v1) & g.neighbors(v2) {
            if g.degree(apex) > 2 {
                out.push((apex, v1, v2));
            }
        }
    }
    out
}

pub fn has_pendant_triangle_at(g: &Graph, v: usize) -> bool {
    pendant_triangles(g).iter().any(|t| t.0 == v)
}

/// Sufficient condition for shedding: `N[w] ⊆ N[v]` for some `w ≠ v`.
pub fn shedding_by_containment(g: &Graph, v: usize) -> bool {
    shedding_by_containment_within(g, g.vertices(), v)
}

fn shedding_by_containment_within(g: &Graph, within: VertexSet, v: usize) -> bool {
    let nv = (g.neighbors(v) & within).with(v);
    (g.neighbors(v) & within).iter().any(|w| ((g.neighbors(w) & within).with(w)).is_subset(nv))
}

/// No independent set of `G ∖ N[v]` is maximal in `G ∖ v`: every maximal
/// independent set `S` of `G ∖ N[v]` extends by some neighbor of `v`.
fn shedding_direct_within(g: &Graph, within: VertexSet, v: usize) -> bool {
    let nv = g.neighbors(v) & within;
    let rest = within - nv.with(v);
    maximal_independent_sets_within(g, rest).into_iter().all(|s| nv.iter().any(|w| !g.neighbors(w).intersects(s)))
}

pub fn is_shedding_vertex_direct(g: &Graph, v: usize) -> bool {
    shedding_direct_within(g, g.vertices(), v)
}

pub fn is_shedding_vertex(g: &Graph, v: usize) -> bool {
    shedding_by_containment(g, v) || is_shedding_vertex_direct(g, v)
}

fn is_shedding_within(g: &Graph, within: VertexSet, v: usize) -> bool {
    shedding_by_containment_within(g, within, v) || shedding_direct_within(g, within, v)
}

struct VdSearch<'a> {
    g: &'a Graph,
    memo: Mutex<HashMap<VertexSet, bool>>,
}

impl VdSearch<'_> {
    fn candidates(&self, within: VertexSet) -> Vec<usize> {
        let mut c: Vec<usize> = within.iter().filter(|&v| self.g.degree_in(v, within) > 0).collect();
        c.sort_by_key(|&v| (std::cmp::Reverse(self.g.degree_in(v, within)), v));
        c
    }

    fn try_vertex(&self, within: VertexSet, v: usize) -> bool {
        is_shedding_within(self.g, within, v)
            && self.vd(within.without(v))
            && self.vd(within - self.g.closed_neighborhood(VertexSet::singleton(v)))
    }

    fn vd(&self, within: VertexSet) -> bool {
        // Isolated vertices are cone points and do not matter.
        let within = within - self.g.isolated_within(within);
        if within.is_empty() {
            return true;
        }
        if let Some(&hit) = self.memo.lock().unwrap().get(&within) {
            return hit;
        }
        let ans = self.candidates(within).into_iter().any(|v| self.try_vertex(within, v));
        self.memo.lock().unwrap().insert(within, ans);
        ans
    }
}

/// Recursive (VD1)/(VD2) test with a memo on vertex subsets.
pub fn is_vertex_decomposable(g: &Graph) -> Result<bool> {
    is_vertex_decomposable_with(g, DEFAULT_VD_LIMIT, Exec::default())
}

pub fn is_vertex_decomposable_with(g: &Graph, limit: usize, exec: Exec) -> Result<bool> {
    if g.n() > limit {
        return Err(Error::BudgetExceeded {
            what: "vertex decomposability",
            needed: g.n() as u64,
            limit: limit as u64,
        });
    }
    let s = VdSearch { g, memo: Mutex::new(HashMap::new()) };
    let within = g.vertices() - g.isolated_vertices();
    if within.is_empty() {
        return Ok(true);
    }
    Ok(par::any(exec, s.candidates(within), |v| s.try_vertex(within, v)))
}

/// The first condition of the vertex-decomposability theorem a pair meets.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum PairCondition {
    /// (i) an endpoint of degree 1.
    #[serde(rename = "i")]
    LeafEndpoint,
    /// (ii) both degrees 2 with a common neighbor in `W`.
    #[serde(rename = "ii")]
    CommonNeighbor,
    /// (iii) degrees 3 and 2 with a `W` vertex whose neighborhood is the pair.
    #[serde(rename = "iii")]
    PrivateNeighbor,
    /// (iv) both degrees 3, a private `W` vertex, and a pendant triangle at a
    /// `W` neighbor of either endpoint.
    #[serde(rename = "iv")]
    PrivateNeighborAndTriangle,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PairTag {
    pub pair: (usize, usize),
    pub condition: Option<PairCondition>,
    /// `y` for (ii)/(iii); `y_1, y_2, y_3` for (iv).
    pub witnesses: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DimVdClassification {
    pub pairs: Vec<PairTag>,
    pub in_class: bool,
}

fn tag_pair(g: &Graph, d: &DimDecomposition, a: usize, b: usize) -> (Option<PairCondition>, Vec<usize>) {
    let (da, db) = (g.degree(a), g.degree(b));
    let pair = VertexSet::from_vertices([a, b]);
    if da == 1 || db == 1 {
        return (Some(PairCondition::LeafEndpoint), vec![]);
    }
    if da == 2 && db == 2 {
        if let Some(y) = (g.neighbors(a) & g.neighbors(b) & d.w).first() {
            return (Some(PairCondition::CommonNeighbor), vec![y]);
        }
    }
    let private = || d.w.iter().find(|&y| g.neighbors(y) == pair);
    if (da, db) == (3, 2) || (da, db) == (2, 3) {
        if let Some(y) = private() {
            return (Some(PairCondition::PrivateNeighbor), vec![y]);
        }
    }
    if da == 3 && db == 3 {
        for y3 in d.w.iter().filter(|&y| g.neighbors(y) == pair) {
            for y1 in (g.neighbors(a) & d.w).without(y3) {
                for y2 in (g.neighbors(b) & d.w).without(y3).without(y1) {
                    if has_pendant_triangle_at(g, y1) || has_pendant_triangle_at(g, y2) {
                        return (Some(PairCondition::PrivateNeighborAndTriangle), vec![y1, y2, y3]);
                    }
                }
            }
        }
    }
    (None, vec![])
}

/// Tags every pair with the first of conditions (i)–(iv) it satisfies.
pub fn dimvd_class_check(g: &Graph, d: &DimDecomposition) -> DimVdClassification {
    let pairs: Vec<PairTag> = d
        .pairs
        .iter()
        .map(|&(a, b)| {
            let (condition, witnesses) = tag_pair(g, d, a, b);
            PairTag { pair: (a, b), condition, witnesses }
        })
        .collect();
    let in_class = pairs.iter().all(|p| p.condition.is_some());
    DimVdClassification { pairs, in_class }
}

/// For a connected class member with `W ≠ ∅`: Cohen–Macaulay iff `#W = m_2`
/// and each `y ∈ W` is adjacent to both endpoints of exactly one pair.
pub fn dimvd_cm_criterion(g: &Graph, d: &DimDecomposition) -> Result<bool> {
    if !g.is_connected() {
        return Err(Error::Precondition("graph is not connected".into()));
    }
    if d.w.is_empty() {
        return Err(Error::Precondition("W is empty".into()));
    }
    if !dimvd_class_check(g, d).in_class {
        return Err(Error::Precondition("decomposition is outside the vertex-decomposable class".into()));
    }
    let one_triangle_each =
        d.w.iter().all(|y| d.pairs.iter().filter(|&&(a, b)| g.has_edge(y, a) && g.has_edge(y, b)).count() == 1);
    Ok(d.w.len() == d.m2 && one_triangle_each)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::covers::is_unmixed;
    use crate::homology::{reisner_cm, Field};
    use crate::matchings::all_dim_decompositions;

    fn lab(n: usize, e: &[(usize, usize)]) -> Graph {
        Graph::from_labeled_edges(n, e).unwrap()
    }
    fn cycle(n: usize) -> Graph {
        Graph::from_edges(n, &(0..n).map(|i| (i, (i + 1) % n)).collect::<Vec<_>>()).unwrap()
    }
    fn complete(n: usize) -> Graph {
        let e: Vec<_> = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).collect();
        Graph::from_edges(n, &e).unwrap()
    }
    fn star(r: usize) -> Graph {
        Graph::from_edges(r + 1, &(1..=r).map(|i| (0, i)).collect::<Vec<_>>()).unwrap()
    }
    fn p4() -> Graph {
        lab(4, &[(1, 2), (2, 3), (3, 4)])
    }
    fn g1() -> Graph {
        lab(6, &[(1, 3), (1, 4), (1, 5), (2, 4), (2, 5), (2, 6), (3, 4), (5, 6)])
    }
    fn g3() -> Graph {
        lab(6, &[(1, 3), (3, 4), (2, 4), (2, 5), (2, 6), (5, 6)])
    }
    /// Edge x–y, a leaf at x, a pendant triangle at y.
    fn cw5() -> Graph {
        Graph::from_edges(5, &[(0, 1), (0, 2), (1, 3), (1, 4), (3, 4)]).unwrap()
    }

    #[test]
    fn chordality() {
        assert!(is_chordal(&complete(5)));
        assert!(!is_chordal(&cycle(5)));
        assert!(is_chordal(&g3()));
        assert!(!is_chordal(&g1()));
        assert!(!is_chordal(&cycle(6)));
        assert!(is_chordal(&Graph::empty(0).unwrap()));
    }

    #[test]
    fn tilde_examples() {
        let g = p4();
        let d = DimDecomposition::from_pairs(&g, &[(1, 2)]).unwrap();
        let t = tilde_graph(&g, &d);
        assert_eq!((t.n(), t.edge_count()), (3, 2));
        assert!(is_forest(&t));

        let g = cycle(6);
        let d = DimDecomposition::from_pairs(&g, &[(0, 1), (3, 4)]).unwrap();
        let t = tilde_graph(&g, &d);
        assert_eq!((t.n(), t.edge_count()), (4, 4));
        assert!(!is_forest(&t));

        let g = g1();
        let d = DimDecomposition::from_pairs(&g, &[(2, 3), (4, 5)]).unwrap();
        assert!(!is_forest(&tilde_graph(&g, &d)));
    }

    #[test]
    fn cameron_walker_recognition() {
        assert!(!is_cameron_walker(&star(3)));
        assert!(is_star(&star(1)));
        assert!(!is_cameron_walker(&cycle(5)));
        assert!(is_cameron_walker(&cw5()));
        assert_eq!((induced_matching_number(&cw5()), matching_number(&cw5())), (2, 2));
        let bowtie = Graph::from_edges(5, &[(0, 1), (0, 2), (1, 2), (0, 3), (0, 4), (3, 4)]).unwrap();
        assert!(is_star_triangle(&bowtie));
        assert!(!is_cameron_walker(&bowtie));
        assert!(is_star_triangle(&complete(3)));
    }

    #[test]
    fn pendant_triangle_apex_sheds() {
        let g = cw5();
        assert_eq!(pendant_triangles(&g), vec![(1, 3, 4)]);
        assert!(is_shedding_vertex(&g, 1));
        assert!(is_shedding_vertex_direct(&g, 1));
        // A bare triangle has no apex of degree above 2.
        assert!(pendant_triangles(&complete(3)).is_empty());
    }

    #[test]
    fn shedding_examples() {
        let g = Graph::from_edges(3, &[(0, 1)]).unwrap();
        assert!(!is_shedding_vertex(&g, 2));
        let c5 = cycle(5);
        for v in 0..5 {
            assert!(is_shedding_vertex(&c5, v));
            assert!(!shedding_by_containment(&c5, v));
        }
        for g in [g1(), g3(), p4(), cw5()] {
            for v in 0..g.n() {
                if shedding_by_containment(&g, v) {
                    assert!(is_shedding_vertex_direct(&g, v));
                }
            }
        }
    }

    #[test]
    fn vertex_decomposability() {
        assert!(is_vertex_decomposable(&cw5()).unwrap());
        assert!(!is_vertex_decomposable(&cycle(6)).unwrap());
        assert!(is_vertex_decomposable(&cycle(5)).unwrap());
        assert!(is_vertex_decomposable(&g3()).unwrap());
        assert!(is_vertex_decomposable(&Graph::empty(3).unwrap()).unwrap());
        assert!(!is_vertex_decomposable(&cycle(7)).unwrap());
        assert!(is_vertex_decomposable_with(&cycle(6), 5, Exec::Sequential).is_err());
    }

    #[test]
    fn class_tags() {
        let g = p4();
        let d = DimDecomposition::from_pairs(&g, &[(1, 2)]).unwrap();
        let c = dimvd_class_check(&g, &d);
        assert_eq!(c.pairs[0].condition, None);
        assert!(!c.in_class);

        // Triangle b–c on apex a, plus the path a–x–l.
        let g = Graph::from_edges(5, &[(0, 1), (0, 2), (1, 2), (0, 3), (3, 4)]).unwrap();
        let d = DimDecomposition::from_pairs(&g, &[(1, 2), (3, 4)]).unwrap();
        let c = dimvd_class_check(&g, &d);
        assert_eq!(c.pairs[0].condition, Some(PairCondition::CommonNeighbor));
        assert_eq!(c.pairs[0].witnesses, vec![0]);
        assert_eq!(c.pairs[1].condition, Some(PairCondition::LeafEndpoint));
        assert!(c.in_class);

        let g = g1();
        let d = DimDecomposition::from_pairs(&g, &[(2, 3), (4, 5)]).unwrap();
        let c = dimvd_class_check(&g, &d);
        assert_eq!(c.pairs.iter().map(|p| p.condition).collect::<Vec<_>>(), vec![None, None]);
        assert!(matches!(dimvd_cm_criterion(&g, &d), Err(Error::Precondition(_))));
        assert!(reisner_cm(&g, Field::Gf2).unwrap());
    }

    #[test]
    fn cm_criterion_examples() {
        // Triangle with a leaf: the only DIM tags its pair (iii).
        let g = Graph::from_edges(4, &[(0, 1), (0, 2), (1, 2), (2, 3)]).unwrap();
        for d in all_dim_decompositions(&g) {
            let c = dimvd_class_check(&g, &d);
            if c.in_class && !d.w.is_empty() {
                assert_eq!(dimvd_cm_criterion(&g, &d).unwrap(), reisner_cm(&g, Field::Gf2).unwrap());
            }
        }
        // (ii) example from above: criterion and Reisner agree.
        let g = Graph::from_edges(5, &[(0, 1), (0, 2), (1, 2), (0, 3), (3, 4)]).unwrap();
        let d = DimDecomposition::from_pairs(&g, &[(1, 2), (3, 4)]).unwrap();
        assert_eq!(dimvd_cm_criterion(&g, &d).unwrap(), reisner_cm(&g, Field::Gf2).unwrap());
        assert!(dimvd_cm_criterion(&g, &d).unwrap());

        // Two pendant triangles on one y, plus a path y–t–s.
        let g = Graph::from_edges(7, &[(0, 1), (0, 2), (1, 2), (0, 3), (0, 4), (3, 4), (0, 5), (5, 6)]).unwrap();
        let d = DimDecomposition::from_pairs(&g, &[(1, 2), (3, 4), (5, 6)]).unwrap();
        assert!(dimvd_class_check(&g, &d).in_class);
        assert!(!dimvd_cm_criterion(&g, &d).unwrap());
        assert!(!reisner_cm(&g, Field::Gf2).unwrap());
        assert!(is_vertex_decomposable(&g).unwrap());
        assert!(!is_unmixed(&g));

        let k2 = Graph::from_edges(2, &[(0, 1)]).unwrap();
        let d = DimDecomposition::from_pairs(&k2, &[(0, 1)]).unwrap();
        assert!(matches!(dimvd_cm_criterion(&k2, &d), Err(Error::Precondition(_))));
    }
}
