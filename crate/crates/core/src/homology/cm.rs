use std::collections::HashSet;

use crate::error::Result;
use crate::graph::{Graph, VertexSet};
use crate::matchings::independent_sets;
use crate::par;

use super::complex::{homology_from_faces, independence_complex, independence_faces_by_size};
use super::hochster::Budget;
use super::{reduced_homology_ranks, Field, SimplicialComplex};

/// Every reduced homology rank except the top one vanishes.
fn acyclic_below_top(ranks: &[usize]) -> bool {
    ranks.iter().rev().skip(1).all(|&r| r == 0)
}

/// Reisner's criterion on `Ind(G)`. The link of a face `σ` is
/// `Ind(G ∖ N[σ])`, so links are memoized by their vertex set.
pub fn reisner_cm(g: &Graph, field: Field) -> Result<bool> {
    reisner_cm_with(g, field, Budget::default())
}

pub fn reisner_cm_with(g: &Graph, field: Field, budget: Budget) -> Result<bool> {
    budget.check("Reisner link sweep", g.n())?;
    let rests: HashSet<VertexSet> =
        independent_sets(g).into_iter().map(|s| g.vertices() - g.closed_neighborhood(s)).collect();
    let mut rests: Vec<VertexSet> = rests.into_iter().collect();
    rests.sort();
    Ok(!par::any(budget.exec, rests, |r| {
        // A link with a cone point is acyclic.
        if r.iter().any(|v| !g.neighbors(v).intersects(r)) {
            return false;
        }
        !acyclic_below_top(&homology_from_faces(&independence_faces_by_size(g, r), field))
    }))
}

/// Reisner's criterion for an arbitrary complex: for every face `σ`,
/// `H̃_i(lk σ; F) = 0` for `i < dim lk σ`.
pub fn is_cohen_macaulay(x: &SimplicialComplex, field: Field) -> bool {
    if x.is_void() {
        return true;
    }
    let faces: Vec<VertexSet> = x.faces_by_size().into_iter().flatten().collect();
    faces.into_iter().all(|s| acyclic_below_top(&reduced_homology_ranks(&x.link(s), field)))
}

/// Duval's criterion: every pure `i`-skeleton of `Ind(G)` is Cohen–Macaulay.
pub fn duval_scm(g: &Graph, field: Field) -> Result<bool> {
    duval_scm_with(g, field, Budget::default())
}

pub fn duval_scm_with(g: &Graph, field: Field, budget: Budget) -> Result<bool> {
    budget.check("sequentially Cohen-Macaulay test", g.n())?;
    let x = independence_complex(g);
    let top = x.dim().unwrap_or(-1);
    let dims: Vec<usize> = (0..=top.max(-1)).map(|i| i as usize).collect();
    Ok(!par::any(budget.exec, dims, |i| !is_cohen_macaulay(&x.pure_skeleton(i), field)))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn lab(n: usize, e: &[(usize, usize)]) -> Graph {
        Graph::from_labeled_edges(n, e).unwrap()
    }
    fn cycle(n: usize) -> Graph {
        Graph::from_edges(n, &(0..n).map(|i| (i, (i + 1) % n)).collect::<Vec<_>>()).unwrap()
    }
    fn g1() -> Graph {
        lab(6, &[(1, 3), (1, 4), (1, 5), (2, 4), (2, 5), (2, 6), (3, 4), (5, 6)])
    }
    fn g2() -> Graph {
        lab(6, &[(1, 3), (1, 4), (1, 5), (1, 6), (2, 3), (2, 4), (2, 5), (2, 6), (3, 4), (5, 6)])
    }
    fn g3() -> Graph {
        lab(6, &[(1, 3), (3, 4), (2, 4), (2, 5), (2, 6), (5, 6)])
    }
    fn p4() -> Graph {
        lab(4, &[(1, 2), (2, 3), (3, 4)])
    }

    #[test]
    fn named_cm_verdicts() {
        for f in [Field::Gf2, Field::Rational] {
            assert!(reisner_cm(&g1(), f).unwrap());
            assert!(!reisner_cm(&g2(), f).unwrap());
            assert!(reisner_cm(&p4(), f).unwrap());
            assert!(reisner_cm(&cycle(5), f).unwrap());
            assert!(!reisner_cm(&cycle(6), f).unwrap());
        }
    }

    #[test]
    fn generic_criterion_agrees_with_link_memo() {
        for g in [g1(), g2(), g3(), p4(), cycle(5), cycle(6), cycle(7)] {
            assert_eq!(is_cohen_macaulay(&independence_complex(&g), Field::Gf2), reisner_cm(&g, Field::Gf2).unwrap());
        }
    }

    #[test]
    fn sequential_cm() {
        assert!(duval_scm(&g3(), Field::Gf2).unwrap());
        assert!(!duval_scm(&cycle(6), Field::Gf2).unwrap());
        assert!(duval_scm(&Graph::empty(4).unwrap(), Field::Gf2).unwrap());
        assert!(duval_scm(&Graph::empty(0).unwrap(), Field::Gf2).unwrap());
        // CM implies sequentially CM.
        assert!(duval_scm(&g1(), Field::Gf2).unwrap());
    }
}
