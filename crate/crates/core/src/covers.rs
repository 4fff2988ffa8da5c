//! Independent sets, vertex covers, unmixedness and condition (♭) for graphs
//! with a dominating induced matching.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};
use crate::matchings::DimDecomposition;
use crate::par::{self, Exec};

/// Maximal independent sets of `G[within]`, by Bron–Kerbosch with pivoting on
/// the complement.
pub fn maximal_independent_sets_within(g: &Graph, within: VertexSet) -> Vec<VertexSet> {
    // Independent sets of G are cliques of the complement.
    let non_adj = |v: usize| (within - g.neighbors(v)).without(v);
    fn bk(r: VertexSet, p: VertexSet, x: VertexSet, non_adj: &dyn Fn(usize) -> VertexSet, out: &mut Vec<VertexSet>) {
        if p.is_empty() {
            if x.is_empty() {
                out.push(r);
            }
            return;
        }
        let pivot = (p | x).iter().max_by_key(|&u| (p & non_adj(u)).len()).unwrap();
        let mut p = p;
        let mut x = x;
        for v in p - non_adj(pivot) {
            let nv = non_adj(v);
            bk(r.with(v), p & nv, x & nv, non_adj, out);
            p.remove(v);
            x.insert(v);
        }
    }
    let mut out = Vec::new();
    bk(VertexSet::EMPTY, within, VertexSet::EMPTY, &non_adj, &mut out);
    out.sort();
    out
}

pub fn maximal_independent_sets(g: &Graph) -> Vec<VertexSet> {
    maximal_independent_sets_within(g, g.vertices())
}

/// Minimal vertex covers, the complements of maximal independent sets.
pub fn minimal_vertex_covers(g: &Graph) -> Vec<VertexSet> {
    let mut covers: Vec<VertexSet> = maximal_independent_sets(g).into_iter().map(|s| g.vertices() - s).collect();
    covers.sort();
    covers
}

pub fn is_vertex_cover(g: &Graph, c: VertexSet) -> bool {
    g.is_independent(g.vertices() - c)
}

pub fn is_minimal_vertex_cover(g: &Graph, c: VertexSet) -> bool {
    is_vertex_cover(g, c) && c.iter().all(|v| !g.neighbors(v).is_subset(c))
}

/// All minimal vertex covers have the same size.
pub fn is_unmixed(g: &Graph) -> bool {
    let mut sizes = maximal_independent_sets(g).into_iter().map(VertexSet::len);
    match sizes.next() {
        None => true,
        Some(first) => sizes.all(|s| s == first),
    }
}

/// Height of the edge ideal: the minimum vertex cover size.
pub fn height(g: &Graph) -> usize {
    g.n() - maximal_independent_sets(g).into_iter().map(VertexSet::len).max().unwrap_or(0)
}

/// Both endpoints of every pair with both degrees at least 2, plus the
/// non-leaf endpoint of every other pair. An isolated edge contributes its
/// lower-labeled endpoint.
pub fn cover_c0(g: &Graph, d: &DimDecomposition) -> Result<VertexSet> {
    let mut c = VertexSet::EMPTY;
    for &(a, b) in &d.pairs {
        let (da, db) = (g.degree(a), g.degree(b));
        if da >= 2 && db >= 2 {
            c = c.with(a).with(b);
        } else if db == 1 && da >= db {
            c = if da == 1 { c.with(a.min(b)) } else { c.with(a) };
        } else {
            c = c.with(b);
        }
    }
    if !is_minimal_vertex_cover(g, c) {
        return Err(Error::TheoremViolation(format!("C_0 = {c:?} is not a minimal vertex cover")));
    }
    Ok(c)
}

/// Subsets `M_2` of pair vertices taking at most one endpoint per pair, each
/// of degree at least 2. Ordered by size, then lexicographically.
pub fn m2_candidates(g: &Graph, d: &DimDecomposition) -> Vec<VertexSet> {
    let mut out = vec![VertexSet::EMPTY];
    for &(a, b) in &d.pairs {
        let options: Vec<usize> = [a, b].into_iter().filter(|&x| g.degree(x) >= 2).collect();
        let mut next = Vec::with_capacity(out.len() * (1 + options.len()));
        for &s in &out {
            next.push(s);
            next.extend(options.iter().map(|&x| s.with(x)));
        }
        out = next;
    }
    out.sort_by_key(|s| (s.len(), s.to_vec()));
    out
}

/// `IN_G(U, W)`: isolated vertices of `G ∖ N[U]` lying in `W_0`.
pub fn in_set(g: &Graph, d: &DimDecomposition, u: VertexSet) -> VertexSet {
    let rest = g.vertices() - g.closed_neighborhood(u);
    g.isolated_within(rest) & d.w0
}

/// `I_{G,M_2}`: indices of pairs with both degrees at least 2 that meet `M_2`
/// or have one endpoint whose other neighbors all lie in `N(M_2)`.
pub fn i_set(g: &Graph, d: &DimDecomposition, m2: VertexSet) -> Vec<usize> {
    let n_m2 = g.open_neighborhood(m2);
    d.pairs
        .iter()
        .enumerate()
        .filter(|&(_, &(a, b))| g.degree(a) >= 2 && g.degree(b) >= 2)
        .filter(|&(_, &(a, b))| {
            m2.contains(a)
                || m2.contains(b)
                || g.neighbors(a).without(b).is_subset(n_m2)
                || g.neighbors(b).without(a).is_subset(n_m2)
        })
        .map(|(j, _)| j)
        .collect()
}

/// `m_2'` of `G' = G ∖ N[M_2]` under the restricted decomposition.
pub fn m2_prime(g: &Graph, d: &DimDecomposition, m2: VertexSet) -> usize {
    let kept = g.vertices() - g.closed_neighborhood(m2);
    d.pairs
        .iter()
        .filter(|&&(a, b)| kept.contains(a) && kept.contains(b))
        .filter(|&&(a, b)| g.degree_in(a, kept) >= 2 && g.degree_in(b, kept) >= 2)
        .count()
}

/// One `M_2` candidate evaluated against (♭1) and (♭2).
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FlatRecord {
    pub m2_set: VertexSet,
    pub neighborhood: VertexSet,
    pub m2_prime: usize,
    pub isolated: VertexSet,
    /// `m_2 − m_2'` and `#N(M_2) − #M_2`.
    pub flat1: (i64, i64),
    /// `#W_0` and `2m_2 − #N(M_2) + #M_2 + #IN(M_2, W)`.
    pub flat2: (i64, i64),
}

impl FlatRecord {
    pub fn holds(&self) -> bool {
        self.flat1.0 == self.flat1.1 && self.flat2.0 <= self.flat2.1
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FlatReport {
    pub holds: bool,
    pub records: Vec<FlatRecord>,
    pub first_violation: Option<FlatRecord>,
}

pub fn flat_record(g: &Graph, d: &DimDecomposition, m2: VertexSet) -> FlatRecord {
    let nb = g.open_neighborhood(m2);
    let m2p = m2_prime(g, d, m2);
    let isolated = in_set(g, d, m2);
    let (m2c, nn, mm, ii) = (d.m2 as i64, nb.len() as i64, m2.len() as i64, isolated.len() as i64);
    FlatRecord {
        m2_set: m2,
        neighborhood: nb,
        m2_prime: m2p,
        isolated,
        flat1: (m2c - m2p as i64, nn - mm),
        flat2: (d.w0.len() as i64, 2 * m2c - nn + mm + ii),
    }
}

/// Evaluates condition (♭) over every candidate `M_2`.
pub fn flat_check(g: &Graph, d: &DimDecomposition) -> FlatReport {
    flat_check_with(g, d, false, Exec::default())
}

/// With `short_circuit`, candidates are evaluated in order and the report
/// stops at the first violation.
pub fn flat_check_with(g: &Graph, d: &DimDecomposition, short_circuit: bool, exec: Exec) -> FlatReport {
    let candidates = m2_candidates(g, d);
    let records: Vec<FlatRecord> = if short_circuit {
        let mut recs = Vec::new();
        for m2 in candidates {
            let r = flat_record(g, d, m2);
            let bad = !r.holds();
            recs.push(r);
            if bad {
                break;
            }
        }
        recs
    } else {
        par::map(exec, candidates, |m2| flat_record(g, d, m2))
    };
    let first_violation = records.iter().find(|r| !r.holds()).cloned();
    FlatReport { holds: first_violation.is_none(), records, first_violation }
}
