//! Reduced simplicial homology of independence complexes over a chosen field,
//! graded Betti numbers by Hochster's formula, regularity and the
//! Cohen–Macaulay tests of Reisner and Duval.

mod cm;
mod complex;
mod hochster;
pub mod linalg;

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub use cm::{duval_scm, duval_scm_with, is_cohen_macaulay, reisner_cm, reisner_cm_with};
pub use complex::{independence_complex, reduced_euler_characteristic, reduced_homology_ranks, SimplicialComplex};
pub use hochster::{
    hochster_betti, hochster_betti_with, km_subadditivity_check, reg_lower_bound_woodroofe,
    reg_lower_bound_woodroofe_with, regularity, regularity_with, Budget, SubadditivityReport, DEFAULT_BUDGET_BITS,
};

/// Coefficient field.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Field {
    #[default]
    Gf2,
    Gfp(u32),
    Rational,
}

fn is_prime(p: u32) -> bool {
    p >= 2 && (2..).take_while(|d: &u32| (*d as u64) * (*d as u64) <= p as u64).all(|d| !p.is_multiple_of(d))
}

impl Field {
    /// `GF(p)`, normalizing `p = 2` to [`Field::Gf2`].
    pub fn gfp(p: u32) -> Result<Field> {
        match p {
            2 => Ok(Field::Gf2),
            p if is_prime(p) => Ok(Field::Gfp(p)),
            p => Err(Error::InvalidParameters(format!("{p} is not prime"))),
        }
    }

    pub fn characteristic(self) -> u32 {
        match self {
            Field::Gf2 => 2,
            Field::Gfp(p) => p,
            Field::Rational => 0,
        }
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Field::Gf2 => f.write_str("gf2"),
            Field::Gfp(p) => write!(f, "gfp:{p}"),
            Field::Rational => f.write_str("rat"),
        }
    }
}

impl FromStr for Field {
    type Err = Error;

    fn from_str(s: &str) -> Result<Field> {
        match s {
            "gf2" => Ok(Field::Gf2),
            "rat" | "q" => Ok(Field::Rational),
            _ => {
                let p = s
                    .strip_prefix("gfp:")
                    .and_then(|p| p.parse::<u32>().ok())
                    .ok_or_else(|| Error::Parse(format!("unknown field {s:?}; expected gf2, gfp:<p> or rat")))?;
                Field::gfp(p)
            }
        }
    }
}

/// Graded Betti numbers `β_{i,j}`, stored sparsely.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BettiTable {
    pub field: Field,
    entries: BTreeMap<(usize, usize), u64>,
}

#[derive(Serialize, Deserialize)]
struct BettiEntry {
    i: usize,
    j: usize,
    beta: u64,
}

#[derive(Serialize, Deserialize)]
struct BettiJson {
    field: Field,
    entries: Vec<BettiEntry>,
    regularity: usize,
    projective_dimension: usize,
}

impl Serialize for BettiTable {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        BettiJson {
            field: self.field,
            entries: self.entries.iter().map(|(&(i, j), &beta)| BettiEntry { i, j, beta }).collect(),
            regularity: self.regularity(),
            projective_dimension: self.projective_dimension(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for BettiTable {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let j = BettiJson::deserialize(d)?;
        let mut t = BettiTable::new(j.field);
        for e in j.entries {
            t.add(e.i, e.j, e.beta);
        }
        Ok(t)
    }
}

impl BettiTable {
    pub fn new(field: Field) -> Self {
        BettiTable { field, entries: BTreeMap::new() }
    }

    pub fn get(&self, i: usize, j: usize) -> u64 {
        self.entries.get(&(i, j)).copied().unwrap_or(0)
    }

    pub fn add(&mut self, i: usize, j: usize, beta: u64) {
        if beta > 0 {
            *self.entries.entry((i, j)).or_insert(0) += beta;
        }
    }

    pub fn merge(&mut self, other: &BettiTable) {
        for (&(i, j), &b) in &other.entries {
            self.add(i, j, b);
        }
    }

    /// Nonzero entries in `(i, j)` order.
    pub fn entries(&self) -> impl Iterator<Item = ((usize, usize), u64)> + '_ {
        self.entries.iter().map(|(&k, &v)| (k, v))
    }

    /// `max{j − i : β_{i,j} ≠ 0}`.
    pub fn regularity(&self) -> usize {
        self.entries.keys().map(|&(i, j)| j - i).max().unwrap_or(0)
    }

    pub fn projective_dimension(&self) -> usize {
        self.entries.keys().map(|&(i, _)| i).max().unwrap_or(0)
    }

    /// Total Betti number `β_i = Σ_j β_{i,j}`.
    pub fn total(&self, i: usize) -> u64 {
        self.entries.iter().filter(|(&(a, _), _)| a == i).map(|(_, &b)| b).sum()
    }

    /// Macaulay-style grid: columns `i`, rows `j − i`.
    pub fn to_grid(&self) -> String {
        let pd = self.projective_dimension();
        let reg = self.regularity();
        let cell = |b: u64| if b == 0 { ".".to_string() } else { b.to_string() };
        let mut rows: Vec<(String, Vec<String>)> = Vec::new();
        rows.push(("total:".into(), (0..=pd).map(|i| self.total(i).to_string()).collect()));
        for r in 0..=reg {
            rows.push((format!("{r}:"), (0..=pd).map(|i| cell(self.get(i, i + r))).collect()));
        }
        let width = rows
            .iter()
            .flat_map(|(_, c)| c.iter().map(String::len))
            .chain((0..=pd).map(|i| i.to_string().len()))
            .max()
            .unwrap_or(1);
        let label = rows.iter().map(|(l, _)| l.len()).max().unwrap_or(0);
        let mut out = format!("{:>label$}", "");
        for i in 0..=pd {
            out += &format!(" {i:>width$}");
        }
        out.push('\n');
        for (l, cells) in rows {
            out += &format!("{l:>label$}");
            for c in cells {
                out += &format!(" {c:>width$}");
            }
            out.push('\n');
        }
        out
    }
}
