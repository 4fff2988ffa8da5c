//! Reproducible checks of the theorems, each runnable by id.
//!
//! The numbered checks `1`–`10` form the acceptance suite; the remaining ids
//! check single lemmas with a parameter.

use std::time::Instant;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::census::{case_v_graphs, connected_graphs_up_to};
use crate::covers::{flat_check, is_unmixed};
use crate::error::{Error, Result};
use crate::families::{self, gab, gabmn, hk, hk_prime, random_cameron_walker, random_dimvd_graph, NamedGraph};
use crate::graph::{Edge, Graph};
use crate::homology::{
    duval_scm, hochster_betti, km_subadditivity_check, reg_lower_bound_woodroofe, regularity, reisner_cm, Field,
};
use crate::io::write_graph6;
use crate::matchings::{
    all_dim_decompositions, eq_partition, has_dominating_induced_matching, induced_matching_number, matching_number,
    min_matching_number, verify_eq_partition,
};
use crate::par::{self, Exec};
use crate::resolutions::{hk_prime_order, hk_prime_xi, lyubeznik_betti, witness_cycle_check, MonomialList};
use crate::structure::{
    dimvd_cm_criterion, is_chordal, is_forest, is_vertex_decomposable, tilde_graph, DimVdClassification,
};

/// Claim ids in acceptance order, then the single-lemma checks.
pub const CLAIM_IDS: [(&str, &str); 12] = [
    ("families-golden", "family invariant tables"),
    ("eight-cases", "a witness for each of the eight inequality patterns"),
    ("prop-7vertex", "match = reg > ind-match on <= 7 vertices only for C5"),
    ("ind-min-partition", "partition exists iff ind-match = min-match"),
    ("unmixed-dim", "condition (flat) iff unmixed for DIM graphs"),
    ("chordal-tilde", "chordal iff the collapsed graph is a forest"),
    ("dim-vd", "DIM-VD class is vertex decomposable; CM criterion"),
    ("named-examples", "named small examples"),
    ("betti-cross", "Hochster and Lyubeznik Betti tables agree"),
    ("property-suite", "random-graph inequality suite"),
    ("lemma-Hk", "invariants of H_k and the nonzero Betti number of H_k'"),
    ("lemma-Gab", "invariants of G_{a,b}"),
];

#[derive(Debug, Clone, Copy, Default)]
pub struct ClaimParams {
    pub k: Option<usize>,
    pub a: Option<usize>,
    pub b: Option<usize>,
    pub exec: Exec,
}

#[derive(Debug, Clone, Serialize)]
pub struct ClaimReport {
    pub id: String,
    pub number: Option<usize>,
    pub title: String,
    pub passed: bool,
    pub checked: usize,
    pub failures: Vec<String>,
    pub notes: Vec<String>,
    pub elapsed_ms: u128,
}

#[derive(Default)]
struct Tally {
    checked: usize,
    failures: Vec<String>,
    notes: Vec<String>,
}

impl Tally {
    fn check(&mut self, ok: bool, what: impl FnOnce() -> String) {
        self.checked += 1;
        if !ok {
            self.failures.push(what());
        }
    }

    fn eq<T: PartialEq + std::fmt::Debug>(&mut self, what: &str, got: T, want: T) {
        self.check(got == want, || format!("{what}: got {got:?}, expected {want:?}"));
    }
}

/// Resolves `1`–`10` or a claim name to its canonical id.
pub fn resolve_id(id: &str) -> Option<&'static str> {
    if let Ok(k) = id.parse::<usize>() {
        return (1..=10).contains(&k).then(|| CLAIM_IDS[k - 1].0);
    }
    CLAIM_IDS.iter().map(|c| c.0).find(|c| c.eq_ignore_ascii_case(id))
}

pub fn run_claim(id: &str, params: &ClaimParams) -> Result<ClaimReport> {
    let canonical = resolve_id(id).ok_or_else(|| Error::InvalidParameters(format!("unknown claim {id:?}")))?;
    let pos = CLAIM_IDS.iter().position(|c| c.0 == canonical).expect("resolved id");
    let start = Instant::now();
    let mut t = Tally::default();
    match canonical {
        "families-golden" => families_golden(&mut t)?,
        "eight-cases" => eight_cases(&mut t)?,
        "prop-7vertex" => prop_7vertex(&mut t, params.exec)?,
        "ind-min-partition" => ind_min_partition(&mut t, params.exec)?,
        "unmixed-dim" => unmixed_dim(&mut t, params.exec)?,
        "chordal-tilde" => chordal_tilde(&mut t)?,
        "dim-vd" => dim_vd(&mut t, params.exec)?,
        "named-examples" => named_examples(&mut t)?,
        "betti-cross" => betti_cross(&mut t)?,
        "property-suite" => property_suite(&mut t, params.exec)?,
        "lemma-Hk" => lemma_hk(&mut t, params.k.unwrap_or(2))?,
        "lemma-Gab" => lemma_gab(&mut t, params.a.unwrap_or(1), params.b.unwrap_or(0))?,
        _ => unreachable!("every id has a runner"),
    }
    Ok(ClaimReport {
        id: canonical.to_string(),
        number: (pos < 10).then_some(pos + 1),
        title: CLAIM_IDS[pos].1.to_string(),
        passed: t.failures.is_empty(),
        checked: t.checked,
        failures: t.failures,
        notes: t.notes,
        elapsed_ms: start.elapsed().as_millis(),
    })
}

/// `(ind, min, match)`.
fn matching_triple(g: &Graph) -> (usize, usize, usize) {
    (induced_matching_number(g), min_matching_number(g), matching_number(g))
}

fn families_golden(t: &mut Tally) -> Result<()> {
    for a in 0..=2 {
        for b in 0..=2 {
            for n in 1..=3 {
                for m in 0..=n {
                    let g = gabmn(a, b, m, n)?;
                    t.eq(
                        &format!("G_{{{a},{b},{m},{n}}}"),
                        matching_triple(&g),
                        (a + b + 1, a + b + n, 2 * a + b + n + m),
                    );
                }
            }
        }
    }
    for (a, b) in [(0, 0), (1, 0), (0, 1), (1, 1)] {
        lemma_gab(t, a, b)?;
    }
    for k in 2..=3 {
        let g = hk(k)?;
        t.eq(&format!("H_{k} matchings"), matching_triple(&g), (k, 2 * k, 2 * k));
        for f in [Field::Gf2, Field::Rational] {
            t.eq(&format!("reg H_{k} over {f}"), regularity(&g, f)?, k + 1);
        }
    }
    Ok(())
}

/// Index `1..=8` of the inequality pattern of `ind ≤ reg ≤ min ≤ match`.
pub fn inequality_case(ind: usize, reg: usize, min: usize, mat: usize) -> usize {
    1 + 4 * usize::from(ind < reg) + 2 * usize::from(reg < min) + usize::from(min < mat)
}

fn eight_cases(t: &mut Tally) -> Result<()> {
    let cw = Graph::from_edges(5, &[(0, 1), (0, 2), (1, 3), (1, 4), (3, 4)])?;
    let mut witnesses: Vec<(usize, String, Graph)> = vec![(1, "Cameron-Walker".into(), cw)];
    for seed in 0..3 {
        witnesses.push((1, format!("random Cameron-Walker #{seed}"), random_cameron_walker(seed, 10)));
    }
    for n in [6, 12] {
        witnesses.push((2, format!("P_{n}"), families::path(n)?));
    }
    for n in 4..=6 {
        witnesses.push((3, format!("K_{n}"), families::complete(n)?));
    }
    for n in 3..=5 {
        witnesses.push((4, format!("W(K_{n})"), families::whiskered_complete(n)?));
    }
    witnesses.push((5, "C_5".into(), families::cycle(5)?));
    witnesses.push((6, "G_{1,0}".into(), gab(1, 0)?));
    for k in 2..=3 {
        witnesses.push((7, format!("H_{k}"), hk(k)?));
    }
    witnesses.push((8, "G_{1,1}".into(), gab(1, 1)?));
    for (case, name, g) in witnesses {
        t.check(g.is_connected(), || format!("{name} is disconnected"));
        let (ind, min, mat) = matching_triple(&g);
        for f in [Field::Gf2, Field::Rational] {
            let reg = regularity(&g, f)?;
            t.eq(
                &format!("case of {name} over {f} (ind {ind}, reg {reg}, min {min}, match {mat})"),
                inequality_case(ind, reg, min, mat),
                case,
            );
        }
    }
    Ok(())
}

fn prop_7vertex(t: &mut Tally, exec: Exec) -> Result<()> {
    let census = connected_graphs_up_to(7)?;
    t.eq("connected graphs on <= 7 vertices", census.len(), 996);
    let c5 = crate::census::canonical_form(&families::cycle(5)?)?;
    for f in [Field::Gf2, Field::Rational] {
        let hits = case_v_graphs(7, f, exec)?;
        let forms: Vec<_> = hits.iter().map(crate::census::canonical_form).collect::<Result<_>>()?;
        t.eq(&format!("graphs with match = reg > ind over {f}"), forms, vec![c5]);
    }
    Ok(())
}

fn ind_min_partition(t: &mut Tally, exec: Exec) -> Result<()> {
    let census = connected_graphs_up_to(7)?;
    let results = par::map(exec, census, |g| {
        let equal = induced_matching_number(&g) == min_matching_number(&g);
        let verdict = eq_partition(&g).map(|p| p.map(|p| verify_eq_partition(&g, &p)));
        (write_graph6(&g), equal, verdict)
    });
    for (g6, equal, verdict) in results {
        match verdict {
            Ok(Some(valid)) => {
                t.check(equal, || format!("{g6}: partition returned but ind != min"));
                t.check(valid, || format!("{g6}: partition fails verification"));
            }
            Ok(None) => t.check(!equal, || format!("{g6}: ind = min but no partition")),
            Err(e) => t.check(false, || format!("{g6}: {e}")),
        }
    }
    Ok(())
}

/// Connected graphs on at most 8 vertices with a dominating induced matching.
fn dim_census() -> Result<Vec<Graph>> {
    Ok(connected_graphs_up_to(8)?.into_iter().filter(has_dominating_induced_matching).collect())
}

fn unmixed_dim(t: &mut Tally, exec: Exec) -> Result<()> {
    let graphs = dim_census()?;
    t.notes.push(format!("{} connected DIM graphs", graphs.len()));
    let rows = par::map(exec, graphs, |g| {
        let unmixed = is_unmixed(&g);
        let verdicts: Vec<bool> = all_dim_decompositions(&g).iter().map(|d| flat_check(&g, d).holds).collect();
        (write_graph6(&g), unmixed, verdicts)
    });
    let unmixed_count = rows.iter().filter(|r| r.1).count();
    t.notes.push(format!("{unmixed_count} unmixed"));
    for (g6, unmixed, verdicts) in rows {
        for (i, &v) in verdicts.iter().enumerate() {
            t.check(v == unmixed, || format!("{g6}, decomposition {i}: flat {v}, unmixed {unmixed}"));
        }
        t.check(verdicts.windows(2).all(|w| w[0] == w[1]), || format!("{g6}: verdict depends on the decomposition"));
    }
    Ok(())
}

fn chordal_tilde(t: &mut Tally) -> Result<()> {
    for g in dim_census()? {
        let chordal = is_chordal(&g);
        for d in all_dim_decompositions(&g) {
            let forest = is_forest(&tilde_graph(&g, &d));
            t.check(chordal == forest, || format!("{}: chordal {chordal}, forest {forest}", write_graph6(&g)));
        }
    }
    Ok(())
}

fn dim_vd(t: &mut Tally, exec: Exec) -> Result<()> {
    let seeds: Vec<u64> = (0..500).collect();
    let rows = par::map(exec, seeds, |seed| {
        let (g, d) = random_dimvd_graph(seed, 12);
        let vd = is_vertex_decomposable(&g);
        let cm = if g.is_connected() && !d.w.is_empty() {
            Some((dimvd_cm_criterion(&g, &d), reisner_cm(&g, Field::Gf2)))
        } else {
            None
        };
        (seed, write_graph6(&g), vd, cm)
    });
    let (mut compared, mut cm_true) = (0, 0);
    for (seed, g6, vd, cm) in rows {
        t.eq(&format!("seed {seed} ({g6}) vertex decomposable"), vd?, true);
        if let Some((crit, reisner)) = cm {
            compared += 1;
            let (crit, reisner) = (crit?, reisner?);
            cm_true += usize::from(reisner);
            t.check(crit == reisner, || format!("seed {seed} ({g6}): criterion {crit}, Reisner {reisner}"));
        }
    }
    t.notes.push(format!("{compared} connected instances with W nonempty, {cm_true} Cohen-Macaulay"));
    Ok(())
}

fn named_examples(t: &mut Tally) -> Result<()> {
    let g0 = NamedGraph::G0.graph();
    t.eq("G0 has a DIM", has_dominating_induced_matching(&g0), false);
    t.eq("G0 (ind, min, match)", matching_triple(&g0), (2, 2, 3));
    let p4 = NamedGraph::P4.graph();
    for f in [Field::Gf2, Field::Rational] {
        t.eq(&format!("P4 CM over {f}"), reisner_cm(&p4, f)?, true);
    }
    let g1 = NamedGraph::G1.graph();
    for f in [Field::Gf2, Field::Rational] {
        t.eq(&format!("G1 CM over {f}"), reisner_cm(&g1, f)?, true);
    }
    t.eq("G1 unmixed", is_unmixed(&g1), true);
    let g2 = NamedGraph::G2.graph();
    t.eq("G2 unmixed", is_unmixed(&g2), true);
    for f in [Field::Gf2, Field::Rational] {
        t.eq(&format!("G2 CM over {f}"), reisner_cm(&g2, f)?, false);
    }
    let g3 = NamedGraph::G3.graph();
    t.eq("G3 unmixed", is_unmixed(&g3), false);
    t.eq("G3 chordal", is_chordal(&g3), true);
    t.eq("G3 sCM over GF(2)", duval_scm(&g3, Field::Gf2)?, true);
    let c6 = families::cycle(6)?;
    t.eq("C6 has a DIM", has_dominating_induced_matching(&c6), true);
    t.eq("C6 sCM over GF(2)", duval_scm(&c6, Field::Gf2)?, false);
    t.eq("C6 vertex decomposable", is_vertex_decomposable(&c6)?, false);
    Ok(())
}

fn betti_cross(t: &mut Tally) -> Result<()> {
    let mut graphs: Vec<(String, Graph, Option<Vec<Edge>>)> = Vec::new();
    for k in 2..=3 {
        graphs.push((format!("H_{k}'"), hk_prime(k)?, Some(hk_prime_order(k)?)));
    }
    for g in [NamedGraph::G0, NamedGraph::G1, NamedGraph::G2, NamedGraph::G3] {
        graphs.push((format!("{g:?}"), g.graph(), None));
    }
    for n in 4..=8 {
        graphs.push((format!("P_{n}"), families::path(n)?, None));
    }
    for n in 4..=8 {
        graphs.push((format!("C_{n}"), families::cycle(n)?, None));
    }
    for (name, g, order) in &graphs {
        let m = match order {
            Some(o) => MonomialList::from_edge_order(g, o)?,
            None => MonomialList::from_graph(g),
        };
        for f in [Field::Gf2, Field::Rational] {
            let h = hochster_betti(g, f)?;
            let l = lyubeznik_betti(&m, f)?;
            t.check(h == l, || {
                format!(
                    "{name} over {f}: Hochster {:?} vs Lyubeznik {:?}",
                    h.entries().collect::<Vec<_>>(),
                    l.entries().collect::<Vec<_>>()
                )
            });
            if order.is_some() {
                let k = (g.n() - 2) / 3;
                let (i, j) = (2 * k + 1, 3 * k + 2);
                t.check(h.get(i, j) > 0, || format!("beta_{{{i},{j}}}({name}) over {f} is zero"));
            }
        }
    }
    let m = MonomialList::from_edge_order(&hk_prime(2)?, &hk_prime_order(2)?)?;
    for f in [Field::Gf2, Field::Rational] {
        t.eq(&format!("witness cycle for H_2' over {f}"), witness_cycle_check(&m, f, &hk_prime_xi(2), 5, 8)?, true);
    }
    Ok(())
}

/// Splits the edges of `g` into `parts` random nonempty groups (fewer when
/// there are not enough edges).
fn random_edge_partition(r: &mut ChaCha8Rng, g: &Graph, parts: usize) -> Vec<Vec<Edge>> {
    let mut e = g.edges();
    e.shuffle(r);
    let k = parts.min(e.len()).max(1);
    let mut out = vec![Vec::new(); k];
    for (i, edge) in e.into_iter().enumerate() {
        let slot = if i < k { i } else { r.gen_range(0..k) };
        out[slot].push(edge);
    }
    out
}

type PropertyRow = (u64, String, Vec<(String, bool)>);

fn property_suite(t: &mut Tally, exec: Exec) -> Result<()> {
    let seeds: Vec<u64> = (0..1000).collect();
    let rows = par::map(exec, seeds, |seed| -> Result<PropertyRow> {
        let g = families::random_graph(seed, 9);
        let mut r = ChaCha8Rng::seed_from_u64(seed ^ 0x5eed);
        let (ind, min, mat) = matching_triple(&g);
        let reg = regularity(&g, Field::Gf2)?;
        let mut checks = vec![
            ("ind <= reg".to_string(), ind <= reg),
            ("reg <= min".to_string(), reg <= min),
            ("min <= match".to_string(), min <= mat),
            ("match <= 2 min".to_string(), mat <= 2 * min),
            ("lower bound <= reg".to_string(), reg_lower_bound_woodroofe(&g)? <= reg),
        ];
        if g.edge_count() > 0 {
            let k = r.gen_range(2..=3);
            let parts = random_edge_partition(&mut r, &g, k);
            checks.push(("subadditivity".to_string(), km_subadditivity_check(&g, &parts, Field::Gf2)?.holds));
        }
        if has_dominating_induced_matching(&g) {
            checks.push(("DIM implies ind = min".to_string(), ind == min));
        }
        Ok((seed, write_graph6(&g), checks))
    });
    for row in rows {
        let (seed, g6, checks) = row?;
        for (name, ok) in checks {
            t.check(ok, || format!("seed {seed} ({g6}): {name}"));
        }
    }
    Ok(())
}

fn lemma_hk(t: &mut Tally, k: usize) -> Result<()> {
    let g = hk(k)?;
    t.eq(&format!("H_{k} (ind, min, match)"), matching_triple(&g), (k, 2 * k, 2 * k));
    t.eq(&format!("reg H_{k} over GF(2)"), regularity(&g, Field::Gf2)?, k + 1);
    let hp = hk_prime(k)?;
    let m = MonomialList::from_edge_order(&hp, &hk_prime_order(k)?)?;
    let (i, j) = (2 * k + 1, 3 * k + 2);
    for f in [Field::Gf2, Field::Rational] {
        t.eq(&format!("witness cycle for H_{k}' over {f}"), witness_cycle_check(&m, f, &hk_prime_xi(k), i, j)?, true);
        t.check(hochster_betti(&hp, f)?.get(i, j) > 0, || format!("beta_{{{i},{j}}}(H_{k}') over {f} is zero"));
    }
    Ok(())
}

fn lemma_gab(t: &mut Tally, a: usize, b: usize) -> Result<()> {
    let g = gab(a, b)?;
    t.eq(
        &format!("G_{{{a},{b}}} (ind, min, match)"),
        matching_triple(&g),
        (a + b + 2, 2 * a + 2 * b + 2, 2 * a + 2 * b + 3),
    );
    for f in [Field::Gf2, Field::Rational] {
        t.eq(&format!("reg G_{{{a},{b}}} over {f}"), regularity(&g, f)?, 2 * a + b + 2);
    }
    Ok(())
}

/// Tags of a classification, for display.
pub fn describe_classification(c: &DimVdClassification) -> Vec<String> {
    c.pairs
        .iter()
        .map(|p| {
            let tag = p.condition.map_or("none".to_string(), |c| format!("{c:?}"));
            format!("{{{}, {}}}: {tag}", p.pair.0 + 1, p.pair.1 + 1)
        })
        .collect()
}
