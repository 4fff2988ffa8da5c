//! Exact ranks of sparse integer matrices over GF(2), GF(p) and ℚ.

use std::collections::{BTreeMap, HashMap};

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use super::Field;

/// A sparse column: `(row, coefficient)` pairs sorted by row, no zeros.
pub type SparseCol = Vec<(usize, i64)>;

pub fn rank(field: Field, nrows: usize, cols: &[SparseCol]) -> usize {
    match field {
        Field::Gf2 => rank_gf2(nrows, cols),
        Field::Gfp(p) => rank_gfp(p as u64, cols),
        Field::Rational => rank_rational(cols),
    }
}

/// Column reduction on bit-packed columns.
pub fn rank_gf2(nrows: usize, cols: &[SparseCol]) -> usize {
    let words = nrows.div_ceil(64).max(1);
    let mut pivots: HashMap<usize, Vec<u64>> = HashMap::new();
    let mut rank = 0;
    for col in cols {
        let mut v = vec![0u64; words];
        for &(r, c) in col {
            if c.rem_euclid(2) == 1 {
                v[r / 64] ^= 1 << (r % 64);
            }
        }
        while let Some(low) = low_bit(&v) {
            match pivots.get(&low) {
                Some(p) => v.iter_mut().zip(p).for_each(|(a, b)| *a ^= b),
                None => {
                    pivots.insert(low, v);
                    rank += 1;
                    break;
                }
            }
        }
    }
    rank
}

fn low_bit(v: &[u64]) -> Option<usize> {
    v.iter().enumerate().rev().find(|(_, &w)| w != 0).map(|(i, &w)| i * 64 + 63 - w.leading_zeros() as usize)
}

fn pow_mod(mut b: u64, mut e: u64, p: u64) -> u64 {
    let mut r = 1;
    b %= p;
    while e > 0 {
        if e & 1 == 1 {
            r = r * b % p;
        }
        b = b * b % p;
        e >>= 1;
    }
    r
}

/// Sparse column reduction modulo a prime `p < 2^32`.
pub fn rank_gfp(p: u64, cols: &[SparseCol]) -> usize {
    let mut pivots: HashMap<usize, Vec<(usize, u64)>> = HashMap::new();
    let mut rank = 0;
    for col in cols {
        let mut v: Vec<(usize, u64)> =
            col.iter().map(|&(r, c)| (r, c.rem_euclid(p as i64) as u64)).filter(|&(_, c)| c != 0).collect();
        while let Some(&(low, c)) = v.last() {
            match pivots.get(&low) {
                // Pivots are normalized to a unit low entry.
                Some(piv) => v = axpy_mod(&v, p - c, piv, p),
                None => {
                    let inv = pow_mod(c, p - 2, p);
                    v.iter_mut().for_each(|e| e.1 = e.1 * inv % p);
                    pivots.insert(low, v);
                    rank += 1;
                    break;
                }
            }
        }
    }
    rank
}

/// `v + k·w` mod `p` on sorted sparse vectors.
fn axpy_mod(v: &[(usize, u64)], k: u64, w: &[(usize, u64)], p: u64) -> Vec<(usize, u64)> {
    let mut out = Vec::with_capacity(v.len() + w.len());
    let (mut i, mut j) = (0, 0);
    while i < v.len() || j < w.len() {
        let (r, c) = match (v.get(i), w.get(j)) {
            (Some(&(a, x)), Some(&(b, y))) if a == b => {
                i += 1;
                j += 1;
                (a, (x + k * y) % p)
            }
            (Some(&(a, x)), Some(&(b, _))) if a < b => {
                i += 1;
                (a, x)
            }
            (Some(&(a, x)), None) => {
                i += 1;
                (a, x)
            }
            (_, Some(&(b, y))) => {
                j += 1;
                (b, k * y % p)
            }
            (None, None) => unreachable!(),
        };
        if c != 0 {
            out.push((r, c));
        }
    }
    out
}

/// Fraction-free column reduction over ℤ with content normalization; ranks
/// over ℚ. Runs in `i128` and restarts in arbitrary precision on overflow.
pub fn rank_rational(cols: &[SparseCol]) -> usize {
    rank_rational_i128(cols).unwrap_or_else(|| rank_rational_big(cols))
}

fn gcd_i128(a: i128, b: i128) -> i128 {
    let (mut a, mut b) = (a.abs(), b.abs());
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

fn rank_rational_i128(cols: &[SparseCol]) -> Option<usize> {
    let mut pivots: HashMap<usize, Vec<(usize, i128)>> = HashMap::new();
    let mut rank = 0;
    for col in cols {
        let mut v: Vec<(usize, i128)> = col.iter().map(|&(r, c)| (r, c as i128)).collect();
        while let Some(&(low, c)) = v.last() {
            match pivots.get(&low) {
                Some(piv) => {
                    let d = piv.last().unwrap().1;
                    // v ← d·v − c·piv, then divide by the content.
                    let mut out = Vec::with_capacity(v.len() + piv.len());
                    let (mut i, mut j) = (0, 0);
                    while i < v.len() || j < piv.len() {
                        let (r, x) = match (v.get(i), piv.get(j)) {
                            (Some(&(a, x)), Some(&(b, y))) if a == b => {
                                i += 1;
                                j += 1;
                                (a, d.checked_mul(x)?.checked_sub(c.checked_mul(y)?)?)
                            }
                            (Some(&(a, x)), Some(&(b, _))) if a < b => {
                                i += 1;
                                (a, d.checked_mul(x)?)
                            }
                            (Some(&(a, x)), None) => {
                                i += 1;
                                (a, d.checked_mul(x)?)
                            }
                            (_, Some(&(b, y))) => {
                                j += 1;
                                (b, c.checked_mul(y)?.checked_neg()?)
                            }
                            (None, None) => unreachable!(),
                        };
                        if x != 0 {
                            out.push((r, x));
                        }
                    }
                    let g = out.iter().fold(0, |g, e| gcd_i128(g, e.1));
                    if g > 1 {
                        out.iter_mut().for_each(|e| e.1 /= g);
                    }
                    v = out;
                }
                None => {
                    pivots.insert(low, v);
                    rank += 1;
                    break;
                }
            }
        }
    }
    Some(rank)
}

fn rank_rational_big(cols: &[SparseCol]) -> usize {
    let mut pivots: HashMap<usize, Vec<(usize, BigInt)>> = HashMap::new();
    let mut rank = 0;
    for col in cols {
        let mut v: Vec<(usize, BigInt)> = col.iter().map(|&(r, c)| (r, BigInt::from(c))).collect();
        while let Some((low, c)) = v.last().cloned() {
            match pivots.get(&low) {
                Some(piv) => {
                    let d = piv.last().unwrap().1.clone();
                    let mut dense: BTreeMap<usize, BigInt> = BTreeMap::new();
                    for (r, x) in &v {
                        *dense.entry(*r).or_insert_with(BigInt::zero) += &d * x;
                    }
                    for (r, y) in piv {
                        *dense.entry(*r).or_insert_with(BigInt::zero) -= &c * y;
                    }
                    let mut out: Vec<(usize, BigInt)> = dense.into_iter().filter(|(_, x)| !x.is_zero()).collect();
                    let g = out.iter().fold(BigInt::zero(), |g, e| num_integer_gcd(&g, &e.1));
                    if g > BigInt::from(1) {
                        out.iter_mut().for_each(|e| e.1 = &e.1 / &g);
                    }
                    v = out;
                }
                None => {
                    pivots.insert(low, v);
                    rank += 1;
                    break;
                }
            }
        }
    }
    rank
}

fn num_integer_gcd(a: &BigInt, b: &BigInt) -> BigInt {
    let (mut a, mut b) = (a.abs(), b.abs());
    while !b.is_zero() {
        let r = &a % &b;
        a = b;
        b = r;
    }
    a
}
