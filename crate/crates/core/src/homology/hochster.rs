use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::graph::{Edge, EdgeSet, Graph, VertexSet};
use crate::par::{self, Exec};

use super::complex::{homology_from_faces_above, independence_faces_by_size};
use super::{BettiTable, Field};

/// Largest `n` for which a `2^n` subset sweep runs by default.
pub const DEFAULT_BUDGET_BITS: u32 = 24;

/// Limits and execution mode for exponential sweeps.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Budget {
    pub bits: u32,
    pub exec: Exec,
}

impl Default for Budget {
    fn default() -> Self {
        Budget { bits: DEFAULT_BUDGET_BITS, exec: Exec::default() }
    }
}

impl Budget {
    pub fn sequential() -> Self {
        Budget { exec: Exec::Sequential, ..Budget::default() }
    }

    pub(crate) fn check(&self, what: &'static str, n: usize) -> Result<()> {
        if n as u32 > self.bits {
            return Err(Error::BudgetExceeded { what, needed: n as u64, limit: self.bits as u64 });
        }
        Ok(())
    }
}

/// `Ind(G_W)` is a cone when `G_W` has an isolated vertex.
#[inline]
fn has_isolated(g: &Graph, w: VertexSet) -> bool {
    w.iter().any(|v| !g.neighbors(v).intersects(w))
}

/// `β_{i,j}(S/I(G)) = Σ_{|W| = j} dim H̃_{j−i−1}(Ind(G_W); F)`.
pub fn hochster_betti(g: &Graph, field: Field) -> Result<BettiTable> {
    hochster_betti_with(g, field, Budget::default())
}

pub fn hochster_betti_with(g: &Graph, field: Field, budget: Budget) -> Result<BettiTable> {
    budget.check("Hochster sweep", g.n())?;
    let sweep = par::fold_range(
        budget.exec,
        1u64 << g.n(),
        BTreeMap::<(usize, usize), u64>::new(),
        |mut acc, bits| {
            let w = VertexSet(bits);
            if !has_isolated(g, w) {
                let j = w.len();
                let faces = independence_faces_by_size(g, w);
                for (k, r) in homology_from_faces_above(&faces, field, 0).into_iter().enumerate() {
                    if r > 0 {
                        *acc.entry((j - k, j)).or_insert(0) += r as u64;
                    }
                }
            }
            acc
        },
        |mut a, b| {
            for (k, v) in b {
                *a.entry(k).or_insert(0) += v;
            }
            a
        },
    );
    let mut t = BettiTable::new(field);
    for ((i, j), b) in sweep {
        t.add(i, j, b);
    }
    Ok(t)
}

/// `reg S/I(G) = 1 + max{d : H̃_d(Ind(G_W); F) ≠ 0 for some W}`, without
/// building the Betti table.
pub fn regularity(g: &Graph, field: Field) -> Result<usize> {
    regularity_with(g, field, Budget::default())
}

pub fn regularity_with(g: &Graph, field: Field, budget: Budget) -> Result<usize> {
    budget.check("regularity sweep", g.n())?;
    Ok(par::fold_range(
        budget.exec,
        1u64 << g.n(),
        0usize,
        |best, bits| {
            let w = VertexSet(bits);
            if w.is_empty() || has_isolated(g, w) {
                return best;
            }
            let faces = independence_faces_by_size(g, w);
            // Only dimensions that would raise the running maximum matter.
            if faces.len() <= best + 1 {
                return best;
            }
            let ranks = homology_from_faces_above(&faces, field, best + 1);
            ranks.iter().rposition(|&r| r > 0).map_or(best, |k| best.max(k))
        },
        usize::max,
    ))
}

/// Best lower bound `m + Σ (i_t + 1)` over induced subgraphs that are
/// disjoint unions of `m` edges and cycles `C_{3 i_t + 2}`.
pub fn reg_lower_bound_woodroofe(g: &Graph) -> Result<usize> {
    reg_lower_bound_woodroofe_with(g, Budget::default())
}

pub fn reg_lower_bound_woodroofe_with(g: &Graph, budget: Budget) -> Result<usize> {
    budget.check("induced-subgraph sweep", g.n())?;
    let value = |s: VertexSet| -> Option<usize> {
        let mut total = 0;
        for c in g.components_within(s) {
            let k = c.len();
            let ok = match k {
                1 => false,
                2 => true,
                _ => k % 3 == 2 && c.iter().all(|v| g.degree_in(v, c) == 2),
            };
            if !ok {
                return None;
            }
            total += (k + 1) / 3;
        }
        Some(total)
    };
    Ok(par::fold_range(
        budget.exec,
        1u64 << g.n(),
        0usize,
        |best, bits| value(VertexSet(bits)).map_or(best, |v| best.max(v)),
        usize::max,
    ))
}

/// Outcome of a subadditivity check for an edge partition.
#[derive(Debug, Clone, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
pub struct SubadditivityReport {
    pub regularity: usize,
    pub part_regularities: Vec<usize>,
    pub holds: bool,
}

/// `reg S/I(G) ≤ Σ_k reg S/I(E_k)`, each part on the full vertex set.
pub fn km_subadditivity_check(g: &Graph, parts: &[Vec<Edge>], field: Field) -> Result<SubadditivityReport> {
    let mut covered = Vec::new();
    let mut part_regularities = Vec::with_capacity(parts.len());
    for part in parts {
        let es = EdgeSet::in_graph(g, part.iter().copied())?;
        covered.extend_from_slice(es.edges());
        part_regularities.push(regularity(&g.spanning_subgraph(es.edges())?, field)?);
    }
    if EdgeSet::new(covered).edges() != g.edges() {
        return Err(Error::InvalidParameters("the parts do not cover every edge".into()));
    }
    let reg = regularity(g, field)?;
    Ok(SubadditivityReport { holds: reg <= part_regularities.iter().sum(), regularity: reg, part_regularities })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn path(n: usize) -> Graph {
        Graph::from_edges(n, &(1..n).map(|i| (i - 1, i)).collect::<Vec<_>>()).unwrap()
    }
    fn cycle(n: usize) -> Graph {
        Graph::from_edges(n, &(0..n).map(|i| (i, (i + 1) % n)).collect::<Vec<_>>()).unwrap()
    }

    #[test]
    fn single_edge_koszul() {
        let g = path(2);
        for f in [Field::Gf2, Field::Rational] {
            let t = hochster_betti(&g, f).unwrap();
            assert_eq!(t.entries().collect::<Vec<_>>(), vec![((0, 0), 1), ((1, 2), 1)]);
            assert_eq!(regularity(&g, f).unwrap(), 1);
        }
    }

    #[test]
    fn edgeless_and_empty() {
        for n in [0, 3] {
            let g = Graph::empty(n).unwrap();
            let t = hochster_betti(&g, Field::Gf2).unwrap();
            assert_eq!(t.entries().collect::<Vec<_>>(), vec![((0, 0), 1)]);
            assert_eq!(regularity(&g, Field::Gf2).unwrap(), 0);
        }
    }

    #[test]
    fn cycles() {
        // S/I(C_5): 1, 5 in degree 2, 5 in degree 3, 1 in degree 5.
        let t = hochster_betti(&cycle(5), Field::Gf2).unwrap();
        assert_eq!(t.entries().collect::<Vec<_>>(), vec![((0, 0), 1), ((1, 2), 5), ((2, 3), 5), ((3, 5), 1)]);
        assert_eq!(regularity(&cycle(5), Field::Gf2).unwrap(), 2);
        assert_eq!(regularity(&cycle(5), Field::Rational).unwrap(), 2);
        let t8 = hochster_betti(&cycle(8), Field::Gf2).unwrap();
        assert!(t8.get(5, 8) > 0);
        assert_eq!(t8.regularity(), regularity(&cycle(8), Field::Gf2).unwrap());
    }

    #[test]
    fn betti_alternating_sum_vanishes() {
        // Σ (−1)^i β_{i,j} is the Hilbert-series numerator; at t = 1 it vanishes
        // for a proper nonzero ideal.
        for g in [cycle(6), path(5), cycle(7)] {
            let t = hochster_betti(&g, Field::Gf2).unwrap();
            let s: i64 = t.entries().map(|((i, _), b)| if i % 2 == 0 { b as i64 } else { -(b as i64) }).sum();
            assert_eq!(s, 0);
        }
    }

    #[test]
    fn budget_is_enforced() {
        let g = path(6);
        let tight = Budget { bits: 5, exec: Exec::Sequential };
        assert!(matches!(hochster_betti_with(&g, Field::Gf2, tight), Err(Error::BudgetExceeded { .. })));
        assert!(regularity_with(&g, Field::Gf2, tight).is_err());
    }

    #[test]
    fn sequential_and_parallel_agree() {
        let g = cycle(9);
        let seq = hochster_betti_with(&g, Field::Gf2, Budget::sequential()).unwrap();
        let par = hochster_betti_with(&g, Field::Gf2, Budget::default()).unwrap();
        assert_eq!(seq, par);
    }

    #[test]
    fn woodroofe_examples() {
        assert_eq!(reg_lower_bound_woodroofe(&cycle(5)).unwrap(), 2);
        let three_edges = Graph::from_edges(6, &[(0, 1), (2, 3), (4, 5)]).unwrap();
        assert_eq!(reg_lower_bound_woodroofe(&three_edges).unwrap(), 3);
        assert_eq!(reg_lower_bound_woodroofe(&Graph::empty(3).unwrap()).unwrap(), 0);
    }

    #[test]
    fn subadditivity() {
        let g = cycle(6);
        let all = g.edges();
        let r = km_subadditivity_check(&g, std::slice::from_ref(&all), Field::Gf2).unwrap();
        assert!(r.holds);
        assert_eq!(r.part_regularities, vec![r.regularity]);
        let split = km_subadditivity_check(&g, &[all[..3].to_vec(), all[3..].to_vec()], Field::Gf2).unwrap();
        assert!(split.holds);
        assert!(km_subadditivity_check(&g, &[all[..3].to_vec()], Field::Gf2).is_err());
    }
}
