use std::collections::{HashMap, HashSet};

use crate::covers::maximal_independent_sets;
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};

use super::linalg::{rank, SparseCol};
use super::Field;

/// A simplicial complex given by its facets.
///
/// No facets is the void complex; the single facet `∅` is the empty complex
/// `{∅}`. The two differ in reduced homology.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SimplicialComplex {
    n: usize,
    facets: Vec<VertexSet>,
}

impl SimplicialComplex {
    pub fn void(n: usize) -> Self {
        SimplicialComplex { n, facets: Vec::new() }
    }

    pub fn empty(n: usize) -> Self {
        SimplicialComplex { n, facets: vec![VertexSet::EMPTY] }
    }

    /// Keeps the inclusion-maximal sets among `faces`.
    pub fn from_facets<I: IntoIterator<Item = VertexSet>>(n: usize, faces: I) -> Result<Self> {
        let mut all: Vec<VertexSet> = faces.into_iter().collect();
        if let Some(bad) = all.iter().find(|f| !f.is_subset(VertexSet::full(n))) {
            let v = (*bad - VertexSet::full(n)).first().unwrap_or(0);
            return Err(Error::VertexOutOfRange { vertex: v, n });
        }
        all.sort_by_key(|f| std::cmp::Reverse(f.len()));
        all.dedup();
        let mut facets: Vec<VertexSet> = Vec::new();
        for f in all {
            if !facets.iter().any(|g| f.is_subset(*g)) {
                facets.push(f);
            }
        }
        facets.sort_by_key(|f| f.to_vec());
        Ok(SimplicialComplex { n, facets })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn facets(&self) -> &[VertexSet] {
        &self.facets
    }

    pub fn is_void(&self) -> bool {
        self.facets.is_empty()
    }

    /// `None` for the void complex, `-1` for `{∅}`.
    pub fn dim(&self) -> Option<isize> {
        self.facets.iter().map(|f| f.len() as isize - 1).max()
    }

    pub fn is_pure(&self) -> bool {
        self.facets.windows(2).all(|w| w[0].len() == w[1].len())
    }

    pub fn contains(&self, face: VertexSet) -> bool {
        self.facets.iter().any(|f| face.is_subset(*f))
    }

    /// All faces grouped by cardinality, each group in lexicographic order.
    pub fn faces_by_size(&self) -> Vec<Vec<VertexSet>> {
        let mut seen: HashSet<VertexSet> = HashSet::new();
        for &f in &self.facets {
            let bits = f.bits();
            let mut sub = bits;
            loop {
                seen.insert(VertexSet(sub));
                if sub == 0 {
                    break;
                }
                sub = (sub - 1) & bits;
            }
        }
        group_by_size(seen.into_iter().collect())
    }

    /// `lk σ = {τ : τ ∩ σ = ∅, τ ∪ σ ∈ X}`; void when `σ ∉ X`.
    pub fn link(&self, sigma: VertexSet) -> SimplicialComplex {
        let facets: Vec<VertexSet> = self.facets.iter().filter(|f| sigma.is_subset(**f)).map(|&f| f - sigma).collect();
        SimplicialComplex::from_facets(self.n, facets).expect("link stays in range")
    }

    /// The subcomplex generated by the `i`-dimensional faces.
    pub fn pure_skeleton(&self, i: usize) -> SimplicialComplex {
        let faces = self.faces_by_size();
        let top = faces.get(i + 1).cloned().unwrap_or_default();
        SimplicialComplex::from_facets(self.n, top).expect("skeleton stays in range")
    }
}

fn group_by_size(mut faces: Vec<VertexSet>) -> Vec<Vec<VertexSet>> {
    let top = faces.iter().map(|f| f.len()).max();
    let Some(top) = top else { return Vec::new() };
    faces.sort_by_key(|f| f.to_vec());
    let mut out = vec![Vec::new(); top + 1];
    for f in faces {
        out[f.len()].push(f);
    }
    out
}

/// `Ind(G)`: faces are the independent sets.
pub fn independence_complex(g: &Graph) -> SimplicialComplex {
    let mut facets = maximal_independent_sets(g);
    facets.sort_by_key(|f| f.to_vec());
    SimplicialComplex { n: g.n(), facets }
}

/// Faces of `Ind(G[within])` grouped by cardinality; never void.
pub(crate) fn independence_faces_by_size(g: &Graph, within: VertexSet) -> Vec<Vec<VertexSet>> {
    fn rec(g: &Graph, cand: VertexSet, cur: VertexSet, out: &mut Vec<Vec<VertexSet>>) {
        if out.len() <= cur.len() {
            out.push(Vec::new());
        }
        out[cur.len()].push(cur);
        for v in cand {
            // Only extend by vertices above v to visit each set once.
            let higher = VertexSet(cand.bits() & !((2u64 << v) - 1));
            rec(g, higher - g.neighbors(v), cur.with(v), out);
        }
    }
    let mut out = Vec::new();
    rec(g, within, VertexSet::EMPTY, &mut out);
    out
}

/// Ranks of `H̃_d` for `d = −1, 0, …`, indexed by `d + 1`, from faces grouped
/// by cardinality. Signs follow position parity in the sorted vertex list.
pub(crate) fn homology_from_faces(faces: &[Vec<VertexSet>], field: Field) -> Vec<usize> {
    homology_from_faces_above(faces, field, 0)
}

/// As [`homology_from_faces`] but only entries with index `>= from` are
/// computed; lower entries are reported as zero.
pub(crate) fn homology_from_faces_above(faces: &[Vec<VertexSet>], field: Field, from: usize) -> Vec<usize> {
    let index: Vec<HashMap<VertexSet, usize>> =
        faces.iter().map(|fs| fs.iter().enumerate().map(|(i, &f)| (f, i)).collect()).collect();
    // ranks[k] = rank of ∂ : C_{k-1} ← faces of size k.
    let mut ranks = vec![0usize; faces.len() + 1];
    for k in from.max(1)..faces.len() {
        let cols: Vec<SparseCol> = faces[k]
            .iter()
            .map(|&f| {
                let mut col: SparseCol = f
                    .iter()
                    .enumerate()
                    .map(|(pos, v)| (index[k - 1][&f.without(v)], if pos % 2 == 0 { 1 } else { -1 }))
                    .collect();
                col.sort_unstable();
                col
            })
            .collect();
        ranks[k] = rank(field, faces[k - 1].len(), &cols);
    }
    (0..faces.len()).map(|k| if k < from { 0 } else { faces[k].len() - ranks[k] - ranks[k + 1] }).collect()
}

/// Ranks of `H̃_d(X; F)` indexed by `d + 1`; the void complex gives `[]`.
pub fn reduced_homology_ranks(x: &SimplicialComplex, field: Field) -> Vec<usize> {
    homology_from_faces(&x.faces_by_size(), field)
}

/// `Σ_{σ ∈ X} (−1)^{dim σ}`, counting `∅` in dimension −1.
pub fn reduced_euler_characteristic(x: &SimplicialComplex) -> i64 {
    x.faces_by_size()
        .iter()
        .enumerate()
        .map(|(k, fs)| if k % 2 == 1 { fs.len() as i64 } else { -(fs.len() as i64) })
        .sum()
}
