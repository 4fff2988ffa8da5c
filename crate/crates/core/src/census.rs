//! Isomorphism-free enumeration of small connected graphs.

use std::collections::HashSet;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};
use crate::homology::{regularity_with, Budget, Field};
use crate::io::write_graph6;
use crate::matchings::{induced_matching_number, matching_number};
use crate::par::{self, Exec};

pub const MAX_CANONICAL_N: usize = 10;
pub const MAX_CENSUS_N: usize = 9;

/// Minimal upper-triangle adjacency code over the leaves of the
/// refinement search tree.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct CanonicalForm {
    pub n: usize,
    pub code: u64,
}

impl CanonicalForm {
    pub fn graph(&self) -> Graph {
        let mut e = Vec::new();
        let mut k = 0;
        for j in 1..self.n {
            for i in 0..j {
                if self.code & bit(self.n, k) != 0 {
                    e.push((i, j));
                }
                k += 1;
            }
        }
        Graph::from_edges(self.n, &e).expect("decoded code is a simple graph")
    }

    pub fn graph6(&self) -> String {
        write_graph6(&self.graph())
    }
}

/// Bit for the `k`-th pair in column order, most significant first.
fn bit(n: usize, k: usize) -> u64 {
    let pairs = n * n.saturating_sub(1) / 2;
    1u64 << (pairs - 1 - k)
}

fn encode(g: &Graph, order: &[usize]) -> u64 {
    let n = g.n();
    let mut code = 0u64;
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            if g.has_edge(order[i], order[j]) {
                code |= bit(n, k);
            }
            k += 1;
        }
    }
    code
}

/// Equitable refinement: repeatedly split colour classes by the multiset of
/// neighbour colours. Colours are dense ranks `0..k`.
fn refine(g: &Graph, colors: &mut [u32]) {
    let n = colors.len();
    let mut classes = count_classes(colors);
    loop {
        let mut sig: Vec<(u32, Vec<u32>, usize)> = (0..n)
            .map(|v| {
                let mut nb: Vec<u32> = g.neighbors(v).iter().map(|w| colors[w]).collect();
                nb.sort_unstable();
                (colors[v], nb, v)
            })
            .collect();
        sig.sort();
        let mut rank = 0u32;
        for i in 0..n {
            if i > 0 && (sig[i].0 != sig[i - 1].0 || sig[i].1 != sig[i - 1].1) {
                rank += 1;
            }
            colors[sig[i].2] = rank;
        }
        let now = rank as usize + 1;
        if now == classes {
            return;
        }
        classes = now;
    }
}

fn count_classes(colors: &[u32]) -> usize {
    let mut c: Vec<u32> = colors.to_vec();
    c.sort_unstable();
    c.dedup();
    c.len()
}

fn search(g: &Graph, colors: &[u32], best: &mut Option<u64>) {
    let n = g.n();
    let classes = count_classes(colors);
    if classes == n {
        let mut order = vec![0; n];
        for v in 0..n {
            order[colors[v] as usize] = v;
        }
        let code = encode(g, &order);
        if best.is_none_or(|b| code < b) {
            *best = Some(code);
        }
        return;
    }
    // Smallest non-singleton cell, ties broken by colour.
    let mut sizes = vec![0usize; classes];
    for &c in colors {
        sizes[c as usize] += 1;
    }
    let target = (0..classes).filter(|&c| sizes[c] > 1).min_by_key(|&c| (sizes[c], c)).expect("non-discrete");
    let cell: Vec<usize> = (0..n).filter(|&v| colors[v] as usize == target).collect();
    let mut tried: Vec<usize> = Vec::new();
    for &v in &cell {
        // Twins give the same subtree up to an automorphism.
        if tried.iter().any(|&t| g.neighbors(t).without(v) == g.neighbors(v).without(t)) {
            continue;
        }
        tried.push(v);
        let mut c: Vec<u32> =
            colors.iter().enumerate().map(|(w, &c)| 2 * c + u32::from(c as usize == target && w != v)).collect();
        refine(g, &mut c);
        search(g, &c, best);
    }
}

pub fn canonical_form(g: &Graph) -> Result<CanonicalForm> {
    let n = g.n();
    if n > MAX_CANONICAL_N {
        return Err(Error::GraphTooLarge { n, max: MAX_CANONICAL_N });
    }
    if n <= 1 {
        return Ok(CanonicalForm { n, code: 0 });
    }
    let mut colors = vec![0u32; n];
    refine(g, &mut colors);
    let mut best = None;
    search(g, &colors, &mut best);
    Ok(CanonicalForm { n, code: best.expect("search reaches a leaf") })
}

pub fn are_isomorphic(a: &Graph, b: &Graph) -> Result<bool> {
    Ok(a.n() == b.n() && a.edge_count() == b.edge_count() && canonical_form(a)? == canonical_form(b)?)
}

/// One canonical representative per isomorphism class of connected graphs
/// on exactly `n` vertices, ordered by canonical code.
pub fn connected_graphs(n: usize) -> Result<Vec<Graph>> {
    connected_graphs_with(n, Exec::default())
}

pub fn connected_graphs_with(n: usize, exec: Exec) -> Result<Vec<Graph>> {
    Ok(levels(n, exec)?.pop().unwrap_or_default())
}

/// Connected graphs on `1..=n` vertices, grouped by order.
pub fn connected_graphs_up_to(n: usize) -> Result<Vec<Graph>> {
    Ok(levels(n, Exec::default())?.into_iter().flatten().collect())
}

fn levels(n_max: usize, exec: Exec) -> Result<Vec<Vec<Graph>>> {
    if n_max > MAX_CENSUS_N {
        return Err(Error::InvalidParameters(format!("census supports n <= {MAX_CENSUS_N}")));
    }
    if n_max == 0 {
        return Ok(Vec::new());
    }
    let mut out = vec![vec![Graph::empty(1)?]];
    for n in 2..=n_max {
        // Every connected graph has a vertex whose removal leaves it connected.
        let parents = out.last().expect("previous level").clone();
        let found: Vec<Vec<u64>> = par::map(exec, parents, |p| {
            let mut codes = Vec::new();
            for s in 1u64..(1u64 << (n - 1)) {
                let mut e = p.edges();
                e.extend(VertexSet(s).iter().map(|u| (u, n - 1)));
                let g = Graph::from_edges(n, &e).expect("augmentation is simple");
                codes.push(canonical_form(&g).expect("n is within range").code);
            }
            codes
        });
        let set: HashSet<u64> = found.into_iter().flatten().collect();
        let mut codes: Vec<u64> = set.into_iter().collect();
        codes.sort_unstable();
        out.push(codes.into_iter().map(|code| CanonicalForm { n, code }.graph()).collect());
    }
    Ok(out)
}

/// Connected graphs on at most `n_max` vertices with
/// `match(G) = reg(G) > ind-match(G)` over `field`.
pub fn case_v_graphs(n_max: usize, field: Field, exec: Exec) -> Result<Vec<Graph>> {
    let census = connected_graphs_up_to(n_max)?;
    let survivors: Vec<Graph> =
        census.into_iter().filter(|g| matching_number(g) > induced_matching_number(g)).collect();
    let budget = Budget::sequential();
    let hits = par::map(exec, survivors, |g| {
        let r = regularity_with(&g, field, budget).map(|reg| reg == matching_number(&g));
        (g, r)
    });
    let mut out = Vec::new();
    for (g, r) in hits {
        if r? {
            out.push(g);
        }
    }
    Ok(out)
}

/// Graphs satisfying `match = reg > ind-match` over GF(2) or over ℚ.
pub fn verify_case_v_census(n_max: usize) -> Result<Vec<Graph>> {
    let mut out = case_v_graphs(n_max, Field::Gf2, Exec::default())?;
    for g in case_v_graphs(n_max, Field::Rational, Exec::default())? {
        if !out.contains(&g) {
            out.push(g);
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn permutations(n: usize) -> Vec<Vec<usize>> {
        if n == 0 {
            return vec![vec![]];
        }
        let mut out = Vec::new();
        for p in permutations(n - 1) {
            for pos in 0..n {
                let mut q = p.clone();
                q.insert(pos, n - 1);
                out.push(q);
            }
        }
        out
    }

    /// Minimum code over all of `S_n`.
    fn brute_code(g: &Graph, perms: &[Vec<usize>]) -> u64 {
        perms.iter().map(|p| encode(g, p)).min().unwrap()
    }

    fn all_labeled(n: usize) -> impl Iterator<Item = Graph> {
        let pairs: Vec<(usize, usize)> = (0..n).flat_map(|j| (0..j).map(move |i| (i, j))).collect();
        (0u64..1 << pairs.len()).map(move |mask| {
            let e: Vec<_> = pairs.iter().enumerate().filter(|(k, _)| mask >> k & 1 == 1).map(|(_, &p)| p).collect();
            Graph::from_edges(n, &e).unwrap()
        })
    }

    #[test]
    fn eleven_graphs_on_four_vertices() {
        let perms = permutations(4);
        let mut ours = HashSet::new();
        let mut brute = HashSet::new();
        for g in all_labeled(4) {
            ours.insert(canonical_form(&g).unwrap());
            brute.insert(brute_code(&g, &perms));
        }
        assert_eq!(ours.len(), 11);
        assert_eq!(brute.len(), 11);
    }

    #[test]
    fn form_is_a_complete_invariant_on_five_vertices() {
        let perms = permutations(5);
        let mut pairs = HashSet::new();
        for g in all_labeled(5) {
            pairs.insert((canonical_form(&g).unwrap().code, brute_code(&g, &perms)));
        }
        // The map between our forms and the brute-force forms is a bijection.
        let ours: HashSet<u64> = pairs.iter().map(|p| p.0).collect();
        let brute: HashSet<u64> = pairs.iter().map(|p| p.1).collect();
        assert_eq!(ours.len(), 34);
        assert_eq!(brute.len(), 34);
        assert_eq!(pairs.len(), 34);
    }

    #[test]
    fn form_round_trips() {
        let c5 = Graph::from_edges(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (0, 4)]).unwrap();
        let f = canonical_form(&c5).unwrap();
        assert_eq!(canonical_form(&f.graph()).unwrap(), f);
        let shuffled = c5.permuted(&[3, 0, 4, 1, 2]);
        assert_eq!(canonical_form(&shuffled).unwrap(), f);
        let p4 = Graph::from_edges(4, &[(0, 1), (1, 2), (2, 3)]).unwrap();
        let k13 = Graph::from_edges(4, &[(0, 1), (0, 2), (0, 3)]).unwrap();
        assert!(!are_isomorphic(&p4, &k13).unwrap());
    }

    #[test]
    fn counts_match_labeled_oracle() {
        let perms: Vec<Vec<Vec<usize>>> = (0..=5).map(permutations).collect();
        for (n, p) in perms.iter().enumerate().skip(1) {
            let oracle: HashSet<u64> = all_labeled(n).filter(|g| g.is_connected()).map(|g| brute_code(&g, p)).collect();
            let ours = connected_graphs(n).unwrap();
            assert_eq!(ours.len(), oracle.len(), "n = {n}");
            assert!(ours.iter().all(|g| g.is_connected()));
        }
    }

    #[test]
    fn classical_counts() {
        let counts: Vec<usize> = (1..=6).map(|n| connected_graphs(n).unwrap().len()).collect();
        assert_eq!(counts, [1, 1, 2, 6, 21, 112]);
    }

    #[test]
    fn sequential_equals_parallel() {
        assert_eq!(
            connected_graphs_with(6, Exec::Sequential).unwrap(),
            connected_graphs_with(6, Exec::Parallel).unwrap()
        );
    }

    #[test]
    fn case_v_small() {
        assert!(verify_case_v_census(4).unwrap().is_empty());
        let five = verify_case_v_census(5).unwrap();
        assert_eq!(five.len(), 1);
        let c5 = Graph::from_edges(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (0, 4)]).unwrap();
        assert!(are_isomorphic(&five[0], &c5).unwrap());
    }

    #[test]
    fn too_large() {
        assert!(canonical_form(&Graph::empty(11).unwrap()).is_err());
        assert!(connected_graphs(10).is_err());
    }
}
