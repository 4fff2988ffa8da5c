//! Constructors for named graphs and graph families, plus seeded random
//! generators.
//!
//! Vertex labels (0-based) per family:
//!
//! * `Path{n}`, `Cycle{n}`: `0, 1, …, n−1` along the path or cycle.
//! * `Star{n}`: center `0`, leaves `1..=n`.
//! * `WhiskeredComplete{n}`: `x_i = i − 1`, whisker `y_i = n + i − 1`.
//! * `Hk{k}`: `u = 0`, `v = 1`, `x_i = i + 1`, `y_i = k + i + 1`,
//!   `z_{i1} = 2k + 2i`, `z_{i2} = 2k + 2i + 1`.
//! * `HkPrime{k}`: `u = 0`, `v = 1`, `x_i = i + 1`, `y_i = k + i + 1`,
//!   `z_i = 2k + i + 1`.
//! * `Gab{a,b}`: `x = 0`, `y_i = i` for `i = 1..=a+b+1`, then the new cycle
//!   vertices of `y_1, y_2, …` in order (four per 5-cycle, three per 4-cycle).
//! * `Gabmn{a,b,m,n}`: the clique `K_{2n}` on `0..2n`; a pendant vertex on
//!   each of the first `2m` clique vertices; then, hanging from the last
//!   clique vertex, `a` copies of `t–{l, s}, s–{l', l''}` followed by `b`
//!   paths `t–s–s'`.
//! * `Named`: the printed 1-based labels minus one.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{Edge, Graph, VertexSet};
use crate::matchings::DimDecomposition;
use crate::structure::{dimvd_class_check, is_cameron_walker};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum NamedGraph {
    G0,
    G1,
    G2,
    G3,
    P4,
}

impl NamedGraph {
    pub const ALL: [NamedGraph; 5] = [NamedGraph::G0, NamedGraph::G1, NamedGraph::G2, NamedGraph::G3, NamedGraph::P4];

    /// Edges with 1-based labels.
    pub fn labeled_edges(self) -> (usize, &'static [(usize, usize)]) {
        match self {
            NamedGraph::G0 => (6, &[(1, 2), (2, 3), (3, 4), (4, 5), (3, 6)]),
            NamedGraph::G1 => (6, &[(1, 3), (1, 4), (1, 5), (2, 4), (2, 5), (2, 6), (3, 4), (5, 6)]),
            NamedGraph::G2 => (6, &[(1, 3), (1, 4), (1, 5), (1, 6), (2, 3), (2, 4), (2, 5), (2, 6), (3, 4), (5, 6)]),
            NamedGraph::G3 => (6, &[(1, 3), (3, 4), (2, 4), (2, 5), (2, 6), (5, 6)]),
            NamedGraph::P4 => (4, &[(1, 2), (2, 3), (3, 4)]),
        }
    }

    pub fn graph(self) -> Graph {
        let (n, e) = self.labeled_edges();
        Graph::from_labeled_edges(n, e).expect("named graphs are simple")
    }
}

impl std::str::FromStr for NamedGraph {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_uppercase().as_str() {
            "G0" => Ok(NamedGraph::G0),
            "G1" => Ok(NamedGraph::G1),
            "G2" => Ok(NamedGraph::G2),
            "G3" => Ok(NamedGraph::G3),
            "P4" => Ok(NamedGraph::P4),
            _ => Err(Error::InvalidParameters(format!("unknown named graph {s:?}"))),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum FamilySpec {
    Gabmn { a: usize, b: usize, m: usize, n: usize },
    Gab { a: usize, b: usize },
    Hk { k: usize },
    HkPrime { k: usize },
    Path { n: usize },
    Cycle { n: usize },
    Complete { n: usize },
    Star { n: usize },
    WhiskeredComplete { n: usize },
    Named(NamedGraph),
    CameronWalker { seed: u64, n_max: usize },
    DimRandom { seed: u64, n_max: usize },
    DimVdRandom { seed: u64, n_max: usize },
}

impl FamilySpec {
    /// Parses a family name and its integer parameters, e.g. `Hk 3` or
    /// `Gabmn 0 1 2 2`. `Named` takes a graph name instead.
    pub fn from_args(name: &str, args: &[String]) -> Result<Self> {
        let int = |i: usize| -> Result<usize> {
            args.get(i)
                .ok_or_else(|| Error::InvalidParameters(format!("{name} needs more parameters")))?
                .parse::<usize>()
                .map_err(|e| Error::InvalidParameters(format!("parameter {}: {e}", i + 1)))
        };
        let arity = |k: usize| -> Result<()> {
            if args.len() != k {
                return Err(Error::InvalidParameters(format!("{name} takes {k} parameters, got {}", args.len())));
            }
            Ok(())
        };
        let spec = match name.to_ascii_lowercase().as_str() {
            "gabmn" => {
                arity(4)?;
                FamilySpec::Gabmn { a: int(0)?, b: int(1)?, m: int(2)?, n: int(3)? }
            }
            "gab" => {
                arity(2)?;
                FamilySpec::Gab { a: int(0)?, b: int(1)? }
            }
            "hk" => {
                arity(1)?;
                FamilySpec::Hk { k: int(0)? }
            }
            "hkprime" => {
                arity(1)?;
                FamilySpec::HkPrime { k: int(0)? }
            }
            "path" => {
                arity(1)?;
                FamilySpec::Path { n: int(0)? }
            }
            "cycle" => {
                arity(1)?;
                FamilySpec::Cycle { n: int(0)? }
            }
            "complete" => {
                arity(1)?;
                FamilySpec::Complete { n: int(0)? }
            }
            "star" => {
                arity(1)?;
                FamilySpec::Star { n: int(0)? }
            }
            "whiskeredcomplete" => {
                arity(1)?;
                FamilySpec::WhiskeredComplete { n: int(0)? }
            }
            "named" => {
                arity(1)?;
                FamilySpec::Named(args[0].parse()?)
            }
            "cameronwalker" | "dimrandom" | "dimvdrandom" => {
                arity(2)?;
                let seed = args[0].parse::<u64>().map_err(|e| Error::InvalidParameters(format!("seed: {e}")))?;
                let n_max = int(1)?;
                match name.to_ascii_lowercase().as_str() {
                    "cameronwalker" => FamilySpec::CameronWalker { seed, n_max },
                    "dimrandom" => FamilySpec::DimRandom { seed, n_max },
                    _ => FamilySpec::DimVdRandom { seed, n_max },
                }
            }
            _ => return Err(Error::InvalidParameters(format!("unknown family {name:?}"))),
        };
        spec.validate()?;
        Ok(spec)
    }

    pub fn validate(&self) -> Result<()> {
        let bad = |msg: &str| Err(Error::InvalidParameters(msg.to_string()));
        match *self {
            FamilySpec::Gabmn { m, n, .. } if n == 0 || m > n => bad("Gabmn needs 0 <= m <= n and n >= 1"),
            FamilySpec::Hk { k } | FamilySpec::HkPrime { k } if k < 2 => bad("k must be at least 2"),
            FamilySpec::WhiskeredComplete { n } if n < 3 => bad("WhiskeredComplete needs n >= 3"),
            FamilySpec::Cycle { n } if n < 3 => bad("a cycle needs at least 3 vertices"),
            FamilySpec::Path { n } | FamilySpec::Complete { n } if n == 0 => bad("n must be positive"),
            FamilySpec::Star { n: 0 } => bad("a star needs at least one leaf"),
            FamilySpec::CameronWalker { n_max, .. } if n_max < 4 => bad("n_max must be at least 4"),
            FamilySpec::DimRandom { n_max, .. } | FamilySpec::DimVdRandom { n_max, .. } if n_max < 2 => {
                bad("n_max must be at least 2")
            }
            _ => Ok(()),
        }
    }
}

/// Builds the graph for `spec` with the labeling documented above.
pub fn build(spec: &FamilySpec) -> Result<Graph> {
    spec.validate()?;
    match *spec {
        FamilySpec::Gabmn { a, b, m, n } => gabmn(a, b, m, n),
        FamilySpec::Gab { a, b } => gab(a, b),
        FamilySpec::Hk { k } => hk(k),
        FamilySpec::HkPrime { k } => hk_prime(k),
        FamilySpec::Path { n } => path(n),
        FamilySpec::Cycle { n } => cycle(n),
        FamilySpec::Complete { n } => complete(n),
        FamilySpec::Star { n } => Graph::from_edges(n + 1, &(1..=n).map(|i| (0, i)).collect::<Vec<_>>()),
        FamilySpec::WhiskeredComplete { n } => whiskered_complete(n),
        FamilySpec::Named(g) => Ok(g.graph()),
        FamilySpec::CameronWalker { seed, n_max } => Ok(random_cameron_walker(seed, n_max)),
        FamilySpec::DimRandom { seed, n_max } => Ok(random_dim_graph(seed, n_max).0),
        FamilySpec::DimVdRandom { seed, n_max } => Ok(random_dimvd_graph(seed, n_max).0),
    }
}

pub fn path(n: usize) -> Result<Graph> {
    Graph::from_edges(n, &(1..n).map(|i| (i - 1, i)).collect::<Vec<_>>())
}

pub fn cycle(n: usize) -> Result<Graph> {
    if n < 3 {
        return Err(Error::InvalidParameters("a cycle needs at least 3 vertices".into()));
    }
    Graph::from_edges(n, &(0..n).map(|i| (i, (i + 1) % n)).collect::<Vec<_>>())
}

pub fn complete(n: usize) -> Result<Graph> {
    let e: Vec<Edge> = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).collect();
    Graph::from_edges(n, &e)
}

/// `K_n` with a whisker `{x_i, y_i}` on every vertex.
pub fn whiskered_complete(n: usize) -> Result<Graph> {
    let mut e: Vec<Edge> = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).collect();
    e.extend((0..n).map(|i| (i, n + i)));
    Graph::from_edges(2 * n, &e)
}

pub fn hk(k: usize) -> Result<Graph> {
    if k < 2 {
        return Err(Error::InvalidParameters("k must be at least 2".into()));
    }
    let (u, v) = (0, 1);
    let mut e = Vec::with_capacity(6 * k);
    for i in 1..=k {
        let (x, y) = (i + 1, k + i + 1);
        let (z1, z2) = (2 * k + 2 * i, 2 * k + 2 * i + 1);
        e.extend([(u, x), (v, y), (x, z1), (x, z2), (y, z1), (y, z2)]);
    }
    Graph::from_edges(4 * k + 2, &e)
}

pub fn hk_prime(k: usize) -> Result<Graph> {
    if k < 2 {
        return Err(Error::InvalidParameters("k must be at least 2".into()));
    }
    let (u, v) = (0, 1);
    let mut e = Vec::with_capacity(4 * k);
    for i in 1..=k {
        let (x, y, z) = (i + 1, k + i + 1, 2 * k + i + 1);
        e.extend([(u, x), (v, y), (x, z), (y, z)]);
    }
    Graph::from_edges(3 * k + 2, &e)
}

/// `K_{1,a+b+1}` with a 5-cycle through each of `y_1..y_{a+1}` and a 4-cycle
/// through each of the remaining `y_i`.
pub fn gab(a: usize, b: usize) -> Result<Graph> {
    let leaves = a + b + 1;
    let n = 1 + leaves + 4 * (a + 1) + 3 * b;
    let mut e: Vec<Edge> = (1..=leaves).map(|i| (0, i)).collect();
    let mut next = leaves + 1;
    for i in 1..=leaves {
        let extra = if i <= a + 1 { 4 } else { 3 };
        let ring: Vec<usize> = std::iter::once(i).chain(next..next + extra).collect();
        for t in 0..ring.len() {
            e.push((ring[t], ring[(t + 1) % ring.len()]));
        }
        next += extra;
    }
    Graph::from_edges(n, &e)
}

/// See the module docs for the layout.
pub fn gabmn(a: usize, b: usize, m: usize, n: usize) -> Result<Graph> {
    if n == 0 || m > n {
        return Err(Error::InvalidParameters("Gabmn needs 0 <= m <= n and n >= 1".into()));
    }
    let core = 2 * n;
    let total = core + 2 * m + 5 * a + 3 * b;
    let mut e: Vec<Edge> = (0..core).flat_map(|i| (i + 1..core).map(move |j| (i, j))).collect();
    let mut next = core;
    for i in 0..2 * m {
        e.push((i, next));
        next += 1;
    }
    let hub = core - 1;
    for _ in 0..a {
        let (t, l, s, l1, l2) = (next, next + 1, next + 2, next + 3, next + 4);
        e.extend([(hub, t), (t, l), (t, s), (s, l1), (s, l2)]);
        next += 5;
    }
    for _ in 0..b {
        let (t, s, s2) = (next, next + 1, next + 2);
        e.extend([(hub, t), (t, s), (s, s2)]);
        next += 3;
    }
    Graph::from_edges(total, &e)
}

/// Parameters `(a, b, m, n)` with `ind = p`, `min = q`, `match = r`, for
/// `0 < p ≤ q ≤ r ≤ 2q`.
pub fn solve_gabmn_params(p: usize, q: usize, r: usize) -> Result<(usize, usize, usize, usize)> {
    if !(0 < p && p <= q && q <= r && r <= 2 * q) {
        return Err(Error::InvalidParameters(format!("need 0 < p <= q <= r <= 2q, got ({p}, {q}, {r})")));
    }
    if r - q <= q - p + 1 {
        Ok((0, p - 1, r - q, q - p + 1))
    } else {
        let n = q - p + 1;
        Ok((r + p + 1 - 2 * q - 2, 2 * q - r, n, n))
    }
}

fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// `G(n, p)` on `n` vertices.
pub fn random_gnp(seed: u64, n: usize, p: f64) -> Graph {
    let mut r = rng(seed);
    let mut e = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            if r.gen_bool(p) {
                e.push((i, j));
            }
        }
    }
    Graph::from_edges(n, &e).expect("random graph is simple")
}

/// A graph with `1..=n_max` vertices and edge density drawn from `[0.15, 0.85]`.
pub fn random_graph(seed: u64, n_max: usize) -> Graph {
    let mut r = rng(seed);
    let n = r.gen_range(1..=n_max.max(1));
    let p = r.gen_range(0.15..0.85);
    random_gnp(r.gen(), n, p)
}

/// Relabels by a random permutation and maps the pairs along.
fn shuffle_labels(r: &mut ChaCha8Rng, n: usize, edges: &[Edge], pairs: &[(usize, usize)]) -> (Graph, DimDecomposition) {
    let mut perm: Vec<usize> = (0..n).collect();
    perm.shuffle(r);
    let e: Vec<Edge> = edges.iter().map(|&(a, b)| (perm[a], perm[b])).collect();
    let g = Graph::from_edges(n, &e).expect("generator edges are simple");
    let mut p: Vec<(usize, usize)> =
        pairs.iter().map(|&(a, b)| if r.gen_bool(0.5) { (perm[a], perm[b]) } else { (perm[b], perm[a]) }).collect();
    p.sort_by_key(|&(a, b)| a.min(b));
    let d = DimDecomposition::from_pairs(&g, &p).expect("generator yields a DIM decomposition");
    (g, d)
}

/// A graph with a dominating induced matching: `m` pairs plus an independent
/// `W` joined to pair vertices at random.
pub fn random_dim_graph(seed: u64, n_max: usize) -> (Graph, DimDecomposition) {
    let mut r = rng(seed);
    let n_max = n_max.max(2);
    let m = r.gen_range(1..=n_max / 2);
    let w = r.gen_range(0..=n_max - 2 * m);
    let n = 2 * m + w;
    let p = r.gen_range(0.2..0.7);
    let pairs: Vec<(usize, usize)> = (0..m).map(|j| (2 * j, 2 * j + 1)).collect();
    let mut e: Vec<Edge> = pairs.clone();
    for y in 2 * m..n {
        for x in 0..2 * m {
            if r.gen_bool(p) {
                e.push((x, y));
            }
        }
    }
    shuffle_labels(&mut r, n, &e, &pairs)
}

/// A DIM graph whose pairs each satisfy one of the four
/// vertex-decomposability conditions, built pair by pair.
pub fn random_dimvd_graph(seed: u64, n_max: usize) -> (Graph, DimDecomposition) {
    let mut r = rng(seed);
    let n_max = n_max.max(3);
    for _ in 0..1000 {
        if let Some(out) = try_dimvd(&mut r, n_max) {
            return out;
        }
    }
    // A single triangle pair on one W vertex is always in the class.
    shuffle_labels(&mut r, 3, &[(0, 1), (0, 2), (1, 2)], &[(1, 2)])
}

fn try_dimvd(r: &mut ChaCha8Rng, n_max: usize) -> Option<(Graph, DimDecomposition)> {
    let base = r.gen_range(1..=3.min(n_max - 2));
    let mut n = base;
    // Shared W vertices, which pairs may attach to freely.
    let mut shared: Vec<usize> = (0..base).collect();
    let mut e: Vec<Edge> = Vec::new();
    let mut pairs: Vec<(usize, usize)> = Vec::new();
    let mut triangle_at: Vec<usize> = Vec::new();
    let add_triangle = |y: usize, n: &mut usize, e: &mut Vec<Edge>, pairs: &mut Vec<(usize, usize)>| {
        let (a, b) = (*n, *n + 1);
        *n += 2;
        e.extend([(a, b), (a, y), (b, y)]);
        pairs.push((a, b));
    };
    loop {
        let room = n_max - n;
        if room < 2 || (!pairs.is_empty() && r.gen_bool(0.2)) {
            break;
        }
        match r.gen_range(0..4) {
            0 => {
                let (x, leaf) = (n, n + 1);
                n += 2;
                e.push((x, leaf));
                for &y in &shared {
                    if r.gen_bool(0.5) {
                        e.push((x, y));
                    }
                }
                pairs.push((x, leaf));
            }
            1 => {
                let y = *shared.choose(r)?;
                add_triangle(y, &mut n, &mut e, &mut pairs);
                triangle_at.push(y);
            }
            2 if room >= 3 => {
                let (x1, x2, yp) = (n, n + 1, n + 2);
                n += 3;
                let y = *shared.choose(r)?;
                let xk = if r.gen_bool(0.5) { x1 } else { x2 };
                e.extend([(x1, x2), (x1, yp), (x2, yp), (xk, y)]);
                pairs.push((x1, x2));
            }
            3 if room >= 3 && shared.len() >= 2 => {
                let mut pick = shared.clone();
                pick.shuffle(r);
                let (y1, y2) = (pick[0], pick[1]);
                let needs_triangle = !triangle_at.contains(&y1) && !triangle_at.contains(&y2);
                if needs_triangle && room < 5 {
                    continue;
                }
                let (x1, x2, y3) = (n, n + 1, n + 2);
                n += 3;
                e.extend([(x1, x2), (x1, y3), (x2, y3), (x1, y1), (x2, y2)]);
                pairs.push((x1, x2));
                if needs_triangle {
                    let y = if r.gen_bool(0.5) { y1 } else { y2 };
                    add_triangle(y, &mut n, &mut e, &mut pairs);
                    triangle_at.push(y);
                }
            }
            _ => continue,
        }
        if shared.len() < 3 && n < n_max && r.gen_bool(0.15) {
            shared.push(n);
            n += 1;
        }
    }
    if pairs.is_empty() {
        return None;
    }
    let (g, d) = shuffle_labels(r, n, &e, &pairs);
    dimvd_class_check(&g, &d).in_class.then_some((g, d))
}

/// A Cameron–Walker graph: a connected bipartite core `X ⊔ Y` with at least
/// one leaf on every `x` and any number of pendant triangles on every `y`.
pub fn random_cameron_walker(seed: u64, n_max: usize) -> Graph {
    let mut r = rng(seed);
    let n_max = n_max.max(4);
    loop {
        let nx = r.gen_range(1..=((n_max - 1) / 2).clamp(1, 3));
        let ny = r.gen_range(1..=(n_max - 2 * nx).clamp(1, 3));
        let (xs, ys): (Vec<usize>, Vec<usize>) = ((0..nx).collect(), (nx..nx + ny).collect());
        let mut e = Vec::new();
        // A spanning tree keeps the core connected.
        let mut order: Vec<usize> = (0..nx + ny).collect();
        order.shuffle(&mut r);
        for i in 1..order.len() {
            let v = order[i];
            let side_x = v < nx;
            let cand: Vec<usize> = order[..i].iter().copied().filter(|&u| (u < nx) != side_x).collect();
            if let Some(&u) = cand.choose(&mut r) {
                e.push((u, v));
            }
        }
        for &x in &xs {
            for &y in &ys {
                if r.gen_bool(0.3) && !e.contains(&(x, y)) && !e.contains(&(y, x)) {
                    e.push((x, y));
                }
            }
        }
        let mut n = nx + ny;
        for &x in &xs {
            for _ in 0..r.gen_range(1..=2) {
                e.push((x, n));
                n += 1;
            }
        }
        for &y in &ys {
            for _ in 0..r.gen_range(0..=1) {
                e.extend([(y, n), (y, n + 1), (n, n + 1)]);
                n += 2;
            }
        }
        if n > n_max {
            continue;
        }
        let g = Graph::from_edges(n, &e).expect("generator edges are simple");
        if is_cameron_walker(&g) {
            return g;
        }
    }
}

/// Vertex set of `H_k'` inside `H_k` (`z_i = z_{i1}`), and the map sending
/// each `H_k'` label to its `H_k` label.
pub fn hk_prime_embedding(k: usize) -> (VertexSet, Vec<usize>) {
    let mut map: Vec<usize> = (0..2 * k + 2).collect();
    map.extend((1..=k).map(|i| 2 * k + 2 * i));
    (map.iter().copied().collect(), map)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::homology::{regularity, Field};
    use crate::matchings::{induced_matching_number, matching_number, min_matching_number};

    fn invariants(g: &Graph) -> (usize, usize, usize) {
        (induced_matching_number(g), min_matching_number(g), matching_number(g))
    }

    #[test]
    fn counts() {
        let h2 = hk(2).unwrap();
        assert_eq!((h2.n(), h2.edge_count()), (10, 12));
        let h3 = hk_prime(3).unwrap();
        assert_eq!((h3.n(), h3.edge_count()), (11, 12));
        for (a, b) in [(0, 0), (1, 0), (0, 1), (1, 1), (2, 3)] {
            assert_eq!(gab(a, b).unwrap().n(), 1 + (a + b + 1) + 4 * (a + 1) + 3 * b);
        }
        let g1 = NamedGraph::G1.graph();
        assert_eq!((g1.n(), g1.edge_count()), (6, 8));
    }

    #[test]
    fn h2_prime_is_the_eight_cycle() {
        let g = hk_prime(2).unwrap();
        assert!(g.vertices().iter().all(|v| g.degree(v) == 2));
        assert!(g.is_connected());
        assert_eq!(g.edge_count(), 8);
    }

    #[test]
    fn hk_prime_is_induced_in_hk() {
        for k in 2..=4 {
            let (w, map) = hk_prime_embedding(k);
            let (sub, order) = hk(k).unwrap().induced_subgraph(w).unwrap();
            let hp = hk_prime(k).unwrap();
            // induced_subgraph relabels in increasing order of H_k labels.
            let pos = |old: usize| order.iter().position(|&o| o == old).unwrap();
            let perm: Vec<usize> = map.iter().map(|&old| pos(old)).collect();
            assert_eq!(hp.permuted(&perm), sub);
        }
    }

    #[test]
    fn gabmn_invariants_small() {
        for (a, b, m, n) in [(0, 0, 0, 1), (1, 0, 1, 1), (0, 2, 0, 1), (1, 1, 1, 2), (0, 1, 2, 2)] {
            let g = gabmn(a, b, m, n).unwrap();
            assert_eq!(invariants(&g), (a + b + 1, a + b + n, 2 * a + b + n + m), "{a} {b} {m} {n}");
        }
    }

    #[test]
    fn gab_invariants_small() {
        let g = gab(0, 0).unwrap();
        assert_eq!(invariants(&g), (2, 2, 3));
        assert_eq!(regularity(&g, Field::Gf2).unwrap(), 2);
    }

    #[test]
    fn whiskered_complete_invariants() {
        for n in 3..=5 {
            assert_eq!(invariants(&whiskered_complete(n).unwrap()), (1, n.div_ceil(2), n));
        }
    }

    #[test]
    fn solver_cases() {
        assert_eq!(solve_gabmn_params(1, 1, 1).unwrap(), (0, 0, 0, 1));
        assert_eq!(solve_gabmn_params(2, 3, 5).unwrap(), (0, 1, 2, 2));
        assert_eq!(solve_gabmn_params(1, 2, 4).unwrap(), (0, 0, 2, 2));
        assert!(solve_gabmn_params(1, 2, 5).is_err());
        assert_eq!(solve_gabmn_params(2, 3, 6).unwrap(), (1, 0, 2, 2));
        assert!(solve_gabmn_params(0, 1, 1).is_err());
        assert!(solve_gabmn_params(2, 3, 7).is_err());
        for p in 1..=3 {
            for q in p..=4 {
                for r in q..=2 * q {
                    let (a, b, m, n) = solve_gabmn_params(p, q, r).unwrap();
                    assert!(m <= n && n >= 1);
                    let g = gabmn(a, b, m, n).unwrap();
                    if g.n() <= 20 {
                        assert_eq!(invariants(&g), (p, q, r), "({p}, {q}, {r})");
                    }
                }
            }
        }
    }

    #[test]
    fn spec_parsing() {
        let s = FamilySpec::from_args("Hk", &["3".into()]).unwrap();
        assert_eq!(s, FamilySpec::Hk { k: 3 });
        assert_eq!(FamilySpec::from_args("Named", &["g1".into()]).unwrap(), FamilySpec::Named(NamedGraph::G1));
        assert!(FamilySpec::from_args("Hk", &["1".into()]).is_err());
        assert!(FamilySpec::from_args("Gabmn", &["0".into(), "0".into(), "2".into(), "1".into()]).is_err());
        assert!(FamilySpec::from_args("Nope", &[]).is_err());
        assert!(FamilySpec::from_args("Cycle", &["x".into()]).is_err());
    }

    #[test]
    fn builders_are_deterministic() {
        for spec in [
            FamilySpec::Hk { k: 3 },
            FamilySpec::DimVdRandom { seed: 7, n_max: 12 },
            FamilySpec::CameronWalker { seed: 3, n_max: 10 },
        ] {
            assert_eq!(build(&spec).unwrap(), build(&spec).unwrap());
        }
    }

    #[test]
    fn generators_meet_their_postconditions() {
        for seed in 0..200 {
            let (g, d) = random_dim_graph(seed, 10);
            assert!(g.n() <= 10);
            assert_eq!(DimDecomposition::from_pairs(&g, &d.pairs).unwrap(), d);
            let (g, d) = random_dimvd_graph(seed, 12);
            assert!(g.n() <= 12);
            assert!(dimvd_class_check(&g, &d).in_class);
            let g = random_cameron_walker(seed, 12);
            assert!(g.n() <= 12 && is_cameron_walker(&g));
        }
    }
}
