//! Lyubeznik resolutions of squarefree monomial ideals and the Betti numbers
//! of their tensor product with the field.

use std::collections::{HashMap, HashSet};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{normalize_edge, Edge, Graph, VertexSet};
use crate::homology::linalg::{rank, SparseCol};
use crate::homology::{BettiTable, Field};
use crate::par::{self, Exec};

/// Default cap on the number of admissible symbols.
pub const DEFAULT_SYMBOL_LIMIT: usize = 1 << 22;

/// An ordered minimal generating set of squarefree monomials, each stored as
/// its support.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MonomialList {
    n: usize,
    gens: Vec<VertexSet>,
}

impl MonomialList {
    /// At most 64 generators, pairwise non-dividing and nonconstant.
    pub fn new(n: usize, gens: Vec<VertexSet>) -> Result<Self> {
        if gens.len() > 64 {
            return Err(Error::InvalidParameters(format!("{} generators; at most 64 supported", gens.len())));
        }
        for (a, &m) in gens.iter().enumerate() {
            if m.is_empty() || !m.is_subset(VertexSet::full(n)) {
                return Err(Error::InvalidParameters(format!("generator {} is constant or out of range", a + 1)));
            }
            if let Some(b) = gens.iter().enumerate().position(|(b, &o)| b != a && o.is_subset(m)) {
                return Err(Error::InvalidParameters(format!("generator {} divides generator {}", b + 1, a + 1)));
            }
        }
        Ok(MonomialList { n, gens })
    }

    /// Edge generators in lexicographic edge order.
    pub fn from_graph(g: &Graph) -> Self {
        let gens = g.edges().into_iter().map(|(a, b)| VertexSet::from_vertices([a, b])).collect();
        MonomialList::new(g.n(), gens).expect("edges form a minimal generating set")
    }

    /// Edge generators in the given order, which must list every edge once.
    pub fn from_edge_order(g: &Graph, order: &[Edge]) -> Result<Self> {
        let mut sorted: Vec<Edge> = order.iter().map(|&(a, b)| normalize_edge(a, b)).collect();
        sorted.sort_unstable();
        if sorted != g.edges() {
            return Err(Error::InvalidParameters("order is not a permutation of the edges".into()));
        }
        let gens = order.iter().map(|&(a, b)| VertexSet::from_vertices([a, b])).collect();
        MonomialList::new(g.n(), gens)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn gens(&self) -> &[VertexSet] {
        &self.gens
    }

    pub fn len(&self) -> usize {
        self.gens.len()
    }

    pub fn is_empty(&self) -> bool {
        self.gens.is_empty()
    }

    /// Support of `lcm(m_i : i ∈ mask)`.
    pub fn lcm(&self, mask: u64) -> VertexSet {
        mask_indices(mask).fold(VertexSet::EMPTY, |acc, i| acc | self.gens[i])
    }
}

fn mask_indices(mask: u64) -> impl Iterator<Item = usize> {
    VertexSet(mask).iter()
}

/// A symbol `[m_{i_1}, …, m_{i_s}]` with `i_1 < … < i_s` (0-based).
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct LSymbol {
    pub indices: Vec<usize>,
    pub lcm: VertexSet,
}

impl LSymbol {
    fn from_mask(m: &MonomialList, mask: u64) -> Self {
        LSymbol { indices: mask_indices(mask).collect(), lcm: m.lcm(mask) }
    }

    pub fn degree(&self) -> usize {
        self.lcm.len()
    }

    pub fn homological_index(&self) -> usize {
        self.indices.len()
    }
}

/// The defining test: for every `t < s` and `q < i_t`, `m_q` does not divide
/// `lcm(m_{i_t}, …, m_{i_s})`.
pub fn is_l_admissible(m: &MonomialList, indices: &[usize]) -> bool {
    let mut idx = indices.to_vec();
    idx.sort_unstable();
    idx.dedup();
    if idx.len() != indices.len() || idx.iter().any(|&i| i >= m.len()) {
        return false;
    }
    (0..idx.len().saturating_sub(1)).all(|t| {
        let tail = idx[t..].iter().fold(VertexSet::EMPTY, |acc, &i| acc | m.gens[i]);
        (0..idx[t]).all(|q| !m.gens[q].is_subset(tail))
    })
}

/// Index masks of all admissible symbols, including the empty one. A symbol
/// grows by prepending a smaller index, which only adds the condition at the
/// new front.
fn admissible_masks(m: &MonomialList, limit: usize) -> Result<Vec<u64>> {
    fn rec(m: &MonomialList, mask: u64, first: usize, lcm: VertexSet, out: &mut Vec<u64>, limit: usize) -> Result<()> {
        if out.len() >= limit {
            return Err(Error::BudgetExceeded {
                what: "Lyubeznik symbols",
                needed: out.len() as u64 + 1,
                limit: limit as u64,
            });
        }
        out.push(mask);
        for i in 0..first {
            let l = lcm | m.gens[i];
            if (0..i).all(|q| !m.gens[q].is_subset(l)) {
                rec(m, mask | 1 << i, i, l, out, limit)?;
            }
        }
        Ok(())
    }
    let mut out = vec![0u64];
    for j in 0..m.len() {
        rec(m, 1 << j, j, m.gens[j], &mut out, limit)?;
    }
    out.sort_by_key(|&mask| (mask.count_ones(), mask_indices(mask).collect::<Vec<_>>()));
    Ok(out)
}

/// All admissible symbols, by size then lexicographically.
pub fn l_admissible_symbols(m: &MonomialList) -> Result<Vec<LSymbol>> {
    Ok(admissible_masks(m, DEFAULT_SYMBOL_LIMIT)?.into_iter().map(|k| LSymbol::from_mask(m, k)).collect())
}

/// Admissible symbols not properly contained in another one.
pub fn maximal_l_admissible(m: &MonomialList) -> Result<Vec<LSymbol>> {
    let masks = admissible_masks(m, DEFAULT_SYMBOL_LIMIT)?;
    let set: HashSet<u64> = masks.iter().copied().collect();
    // Admissible symbols are closed under subsets, so one added index suffices.
    Ok(masks
        .into_iter()
        .filter(|&k| (0..m.len()).all(|i| k & (1 << i) != 0 || !set.contains(&(k | 1 << i))))
        .map(|k| LSymbol::from_mask(m, k))
        .collect())
}

/// Terms of `1 ⊗ d(e_S)`: deletions that keep the lcm, with Taylor sign
/// `(−1)^{t+1}` for the `t`-th index.
fn tensored_boundary(m: &MonomialList, mask: u64) -> Vec<(u64, i64)> {
    let lcm = m.lcm(mask);
    mask_indices(mask)
        .enumerate()
        .filter_map(|(pos, i)| {
            let face = mask & !(1 << i);
            (m.lcm(face) == lcm).then_some((face, if pos % 2 == 0 { 1 } else { -1 }))
        })
        .collect()
}

/// Admissible symbols sharing one lcm, grouped by homological index.
struct Piece {
    lcm: VertexSet,
    by_size: Vec<Vec<u64>>,
}

fn pieces(m: &MonomialList, limit: usize) -> Result<(Vec<Piece>, HashSet<u64>)> {
    let masks = admissible_masks(m, limit)?;
    let set: HashSet<u64> = masks.iter().copied().collect();
    // Closure: every face of an admissible symbol is admissible.
    for &k in &masks {
        for i in mask_indices(k) {
            if !set.contains(&(k & !(1 << i))) {
                return Err(Error::ClosureViolation(format!(
                    "face of {:?} dropping index {} is not admissible",
                    mask_indices(k).map(|x| x + 1).collect::<Vec<_>>(),
                    i + 1
                )));
            }
        }
    }
    let mut groups: HashMap<VertexSet, Vec<u64>> = HashMap::new();
    for &k in &masks {
        groups.entry(m.lcm(k)).or_default().push(k);
    }
    let mut out: Vec<Piece> = groups
        .into_iter()
        .map(|(lcm, ks)| {
            let top = ks.iter().map(|k| k.count_ones() as usize).max().unwrap_or(0);
            let mut by_size = vec![Vec::new(); top + 1];
            for k in ks {
                by_size[k.count_ones() as usize].push(k);
            }
            by_size.iter_mut().for_each(|v| v.sort_unstable());
            Piece { lcm, by_size }
        })
        .collect();
    out.sort_by_key(|p| p.lcm);
    Ok((out, set))
}

fn index_maps(by_size: &[Vec<u64>]) -> Vec<HashMap<u64, usize>> {
    by_size.iter().map(|ks| ks.iter().enumerate().map(|(i, &k)| (k, i)).collect()).collect()
}

fn boundary_columns(m: &MonomialList, from: &[u64], rows: &HashMap<u64, usize>) -> Vec<SparseCol> {
    from.iter()
        .map(|&k| {
            let mut col: SparseCol = tensored_boundary(m, k).into_iter().map(|(f, s)| (rows[&f], s)).collect();
            col.sort_unstable();
            col
        })
        .collect()
}

/// `d ∘ d = 0` over ℤ on one piece.
fn check_square_zero(m: &MonomialList, p: &Piece) -> Result<()> {
    for s in 2..p.by_size.len() {
        for &k in &p.by_size[s] {
            let mut acc: HashMap<u64, i64> = HashMap::new();
            for (f, a) in tensored_boundary(m, k) {
                for (g, b) in tensored_boundary(m, f) {
                    *acc.entry(g).or_insert(0) += a * b;
                }
            }
            if acc.values().any(|&c| c != 0) {
                return Err(Error::ClosureViolation("tensored differential does not square to zero".into()));
            }
        }
    }
    Ok(())
}

/// `β_{i,j}` from the Lyubeznik resolution for the given generator order.
pub fn lyubeznik_betti(m: &MonomialList, field: Field) -> Result<BettiTable> {
    lyubeznik_betti_with(m, field, DEFAULT_SYMBOL_LIMIT, Exec::default())
}

pub fn lyubeznik_betti_with(m: &MonomialList, field: Field, limit: usize, exec: Exec) -> Result<BettiTable> {
    let (pieces, _) = pieces(m, limit)?;
    let per_piece = par::map(exec, pieces, |p| -> Result<Vec<(usize, usize, u64)>> {
        check_square_zero(m, &p)?;
        let idx = index_maps(&p.by_size);
        let sizes = p.by_size.len();
        let mut ranks = vec![0usize; sizes + 1];
        for s in 1..sizes {
            ranks[s] = rank(field, p.by_size[s - 1].len(), &boundary_columns(m, &p.by_size[s], &idx[s - 1]));
        }
        let j = p.lcm.len();
        Ok((0..sizes)
            .map(|i| (i, j, (p.by_size[i].len() - ranks[i] - ranks[i + 1]) as u64))
            .filter(|&(_, _, b)| b > 0)
            .collect())
    });
    let mut t = BettiTable::new(field);
    for piece in per_piece {
        for (i, j, b) in piece? {
            t.add(i, j, b);
        }
    }
    Ok(t)
}

/// Whether `chain` (symbols with coefficients) is a cycle of `1 ⊗ d_i` that
/// is not a boundary of `1 ⊗ d_{i+1}`, within the degree-`j` strand.
pub fn witness_cycle_check(
    m: &MonomialList,
    field: Field,
    chain: &[(Vec<usize>, i64)],
    i: usize,
    j: usize,
) -> Result<bool> {
    let (pieces, set) = pieces(m, DEFAULT_SYMBOL_LIMIT)?;
    let mut target: HashMap<u64, i64> = HashMap::new();
    for (idx, c) in chain {
        let mask = idx.iter().fold(0u64, |k, &x| if x < 64 { k | 1 << x } else { k });
        if idx.len() != i || mask.count_ones() as usize != i || !set.contains(&mask) {
            return Err(Error::InvalidParameters(format!("{idx:?} is not an admissible symbol of size {i}")));
        }
        if m.lcm(mask).len() != j {
            return Err(Error::InvalidParameters(format!("{idx:?} does not have degree {j}")));
        }
        *target.entry(mask).or_insert(0) += c;
    }
    // Strand of degree j, sizes i - 1, i, i + 1.
    let strand = |s: usize| -> Vec<u64> {
        let mut v: Vec<u64> = pieces
            .iter()
            .filter(|p| p.lcm.len() == j)
            .flat_map(|p| p.by_size.get(s).cloned().unwrap_or_default())
            .collect();
        v.sort_unstable();
        v
    };
    let (lo, mid, hi) = (if i == 0 { Vec::new() } else { strand(i - 1) }, strand(i), strand(i + 1));
    let lo_idx: HashMap<u64, usize> = lo.iter().enumerate().map(|(a, &k)| (k, a)).collect();
    let mid_idx: HashMap<u64, usize> = mid.iter().enumerate().map(|(a, &k)| (k, a)).collect();

    let chain_col: SparseCol = {
        let mut c: SparseCol = target.iter().filter(|(_, &v)| v != 0).map(|(k, &v)| (mid_idx[k], v)).collect();
        c.sort_unstable();
        c
    };
    let reduce = |v: i64| -> bool {
        match field {
            Field::Gf2 => v.rem_euclid(2) != 0,
            Field::Gfp(p) => v.rem_euclid(p as i64) != 0,
            Field::Rational => v != 0,
        }
    };
    if !chain_col.iter().any(|&(_, v)| reduce(v)) {
        return Ok(false);
    }
    if i > 0 {
        let mut image: HashMap<u64, i64> = HashMap::new();
        for (k, &c) in &target {
            for (f, s) in tensored_boundary(m, *k) {
                *image.entry(f).or_insert(0) += c * s;
            }
        }
        if image.iter().any(|(f, &v)| lo_idx.contains_key(f) && reduce(v)) {
            return Ok(false);
        }
    }
    let mut d_next = boundary_columns(m, &hi, &mid_idx);
    let r = rank(field, mid.len(), &d_next);
    d_next.push(chain_col);
    Ok(rank(field, mid.len(), &d_next) > r)
}

/// Edge order for `H_k'` built with `u = 0`, `v = 1`, `x_i = i + 1`,
/// `y_i = k + i + 1`, `z_i = 2k + i + 1` (`i = 1..=k`): blocks
/// `g_i, h_i, f_i, e_i` for `i = 2..k−1`, then
/// `e_1, h_1, f_k, g_k, e_k, g_1, f_1, h_k`.
pub fn hk_prime_order(k: usize) -> Result<Vec<Edge>> {
    if k < 2 {
        return Err(Error::InvalidParameters("k must be at least 2".into()));
    }
    let (u, v) = (0, 1);
    let x = |i: usize| i + 1;
    let y = |i: usize| k + i + 1;
    let z = |i: usize| 2 * k + i + 1;
    let e = |i| normalize_edge(u, x(i));
    let f = |i| normalize_edge(v, y(i));
    let g = |i| normalize_edge(x(i), z(i));
    let h = |i| normalize_edge(y(i), z(i));
    let mut order = Vec::with_capacity(4 * k);
    for i in 2..k {
        order.extend([g(i), h(i), f(i), e(i)]);
    }
    order.extend([e(1), h(1), f(k), g(k), e(k), g(1), f(1), h(k)]);
    Ok(order)
}

/// Positions in [`hk_prime_order`] of the two symbols of `ξ^{(k)}`; the
/// cycle is the first minus the second, at `(2k + 1, 3k + 2)`.
pub fn hk_prime_xi(k: usize) -> Vec<(Vec<usize>, i64)> {
    let o = 4 * (k.max(2) - 2);
    let prefix: Vec<usize> =
        (0..k.max(2) - 2).flat_map(|r| [4 * r, 4 * r + 1]).chain([o, o + 1, o + 2, o + 3]).collect();
    let with = |last: usize| {
        let mut s = prefix.clone();
        s.push(last);
        s.sort_unstable();
        s
    };
    vec![(with(o + 4), 1), (with(o + 5), -1)]
}

/// The path `u − x − z − y − v` with `u = 0`, `v = 1`, `x = 2`, `y = 3`,
/// `z = 4`, and its order `g, h, f, e`.
pub fn l_block() -> (Graph, Vec<Edge>) {
    let (u, v, x, y, z) = (0, 1, 2, 3, 4);
    let g = Graph::from_edges(5, &[(u, x), (x, z), (y, z), (v, y)]).expect("valid path");
    let order = vec![normalize_edge(x, z), normalize_edge(y, z), normalize_edge(v, y), normalize_edge(u, x)];
    (g, order)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::homology::hochster_betti;

    fn cycle(n: usize) -> Graph {
        Graph::from_edges(n, &(0..n).map(|i| (i, (i + 1) % n)).collect::<Vec<_>>()).unwrap()
    }
    fn hk_prime_graph(k: usize) -> Graph {
        Graph::from_edges(3 * k + 2, &hk_prime_order(k).unwrap()).unwrap()
    }

    #[test]
    fn single_generator() {
        let m = MonomialList::new(2, vec![VertexSet::from_vertices([0, 1])]).unwrap();
        let syms = l_admissible_symbols(&m).unwrap();
        assert_eq!(syms.iter().map(|s| s.indices.clone()).collect::<Vec<_>>(), vec![vec![], vec![0]]);
        let t = lyubeznik_betti(&m, Field::Gf2).unwrap();
        assert_eq!(t.entries().collect::<Vec<_>>(), vec![((0, 0), 1), ((1, 2), 1)]);
    }

    #[test]
    fn rejects_non_minimal_lists() {
        let a = VertexSet::from_vertices([0, 1]);
        assert!(MonomialList::new(3, vec![a, a]).is_err());
        assert!(MonomialList::new(3, vec![a, VertexSet::from_vertices([0, 1, 2])]).is_err());
        assert!(MonomialList::new(3, vec![VertexSet::EMPTY]).is_err());
    }

    #[test]
    fn eight_cycle_maximal_symbols() {
        let g = hk_prime_graph(2);
        assert_eq!(g, cycle(8).permuted(&relabel_cycle_to_hk2()));
        let m = MonomialList::from_edge_order(&g, &hk_prime_order(2).unwrap()).unwrap();
        let max: Vec<Vec<usize>> = maximal_l_admissible(&m).unwrap().into_iter().map(|s| s.indices).collect();
        // e1 h1 f2 g2 e2 g1 f1 h2 at positions 0..8.
        assert_eq!(max, vec![vec![0, 1, 2, 3, 4, 6], vec![0, 1, 2, 3, 5, 7]]);
    }

    /// Cycle vertex i ↦ its label in H_2': u x1 z1 y1 v y2 z2 x2.
    fn relabel_cycle_to_hk2() -> Vec<usize> {
        vec![0, 2, 6, 4, 1, 5, 7, 3]
    }

    #[test]
    fn l_block_symbols_and_witness() {
        let (g, order) = l_block();
        let m = MonomialList::from_edge_order(&g, &order).unwrap();
        let max: Vec<Vec<usize>> = maximal_l_admissible(&m).unwrap().into_iter().map(|s| s.indices).collect();
        // [g, f, e] and [g, h, f].
        assert_eq!(max, vec![vec![0, 1, 2], vec![0, 2, 3]]);
        for f in [Field::Gf2, Field::Rational] {
            assert!(witness_cycle_check(&m, f, &[(vec![0, 1], 1)], 2, 3).unwrap());
        }
    }

    #[test]
    fn xi_witnesses() {
        for k in [2, 3] {
            let g = hk_prime_graph(k);
            let m = MonomialList::from_edge_order(&g, &hk_prime_order(k).unwrap()).unwrap();
            let xi = hk_prime_xi(k);
            for f in [Field::Gf2, Field::Rational] {
                assert!(witness_cycle_check(&m, f, &xi, 2 * k + 1, 3 * k + 2).unwrap());
                let t = lyubeznik_betti(&m, f).unwrap();
                assert!(t.get(2 * k + 1, 3 * k + 2) > 0);
                assert_eq!(t, hochster_betti(&g, f).unwrap());
            }
            // Zero chain: a boundary.
            let zero = vec![(xi[0].0.clone(), 1), (xi[0].0.clone(), -1)];
            assert!(!witness_cycle_check(&m, Field::Rational, &zero, 2 * k + 1, 3 * k + 2).unwrap());
            // A single term is not a cycle.
            assert!(!witness_cycle_check(&m, Field::Rational, &xi[..1], 2 * k + 1, 3 * k + 2).unwrap());
        }
    }

    #[test]
    fn malformed_chains_are_rejected() {
        let g = hk_prime_graph(2);
        let m = MonomialList::from_edge_order(&g, &hk_prime_order(2).unwrap()).unwrap();
        assert!(witness_cycle_check(&m, Field::Gf2, &[(vec![0, 1, 2, 3, 4, 5, 6, 7], 1)], 8, 8).is_err());
        assert!(witness_cycle_check(&m, Field::Gf2, &[(vec![0, 1], 1)], 2, 8).is_err());
    }

    #[test]
    fn enumeration_matches_definition() {
        let g = cycle(7);
        let m = MonomialList::from_graph(&g);
        let syms: HashSet<Vec<usize>> = l_admissible_symbols(&m).unwrap().into_iter().map(|s| s.indices).collect();
        for mask in 0u64..1 << m.len() {
            let idx: Vec<usize> = mask_indices(mask).collect();
            assert_eq!(syms.contains(&idx), is_l_admissible(&m, &idx), "{idx:?}");
        }
    }

    #[test]
    fn symbol_budget() {
        let m = MonomialList::from_graph(&cycle(8));
        assert!(matches!(admissible_masks(&m, 3), Err(Error::BudgetExceeded { .. })));
    }
}
