//! Exact rank computations over prime fields and the rationals.
//!
//! Two independent routes are provided: a dense elimination on integer
//! matrices (modular Gaussian elimination, or fraction-free Bareiss over
//! arbitrary-precision integers for ℚ) and a sparse column reduction used by
//! the homology engine. Rational arithmetic in the sparse route first runs on
//! checked 64-bit fractions and restarts on big rationals if anything overflows.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{input, Error, Result};

/// Coefficient field for all homology computations.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum FieldSpec {
    Prime(u32),
    Rational,
}

impl FieldSpec {
    pub fn prime(p: u32) -> Result<Self> {
        if is_prime(p) {
            Ok(FieldSpec::Prime(p))
        } else {
            input(format!("{p} is not prime"))
        }
    }

    pub const GF2: FieldSpec = FieldSpec::Prime(2);
    pub const GF3: FieldSpec = FieldSpec::Prime(3);
    pub const Q: FieldSpec = FieldSpec::Rational;
}

pub fn is_prime(p: u32) -> bool {
    p >= 2
        && (2..)
            .take_while(|d| d * d <= p)
            .all(|d| !p.is_multiple_of(d))
}

impl fmt::Display for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldSpec::Prime(p) => write!(f, "GF({p})"),
            FieldSpec::Rational => write!(f, "Q"),
        }
    }
}

/// Accepts `Q`, `p` or `GF(p)`.
impl FromStr for FieldSpec {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.eq_ignore_ascii_case("q") {
            return Ok(FieldSpec::Rational);
        }
        let digits = s
            .strip_prefix("GF(")
            .and_then(|r| r.strip_suffix(')'))
            .unwrap_or(s);
        match digits.parse::<u32>() {
            Ok(p) => FieldSpec::prime(p),
            Err(_) => input(format!("unknown field {s:?}; use Q, p or GF(p)")),
        }
    }
}

impl Serialize for FieldSpec {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for FieldSpec {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// Field arithmetic used by the sparse reduction. Operations may report
/// overflow by returning `None`.
pub(crate) trait Field {
    type E: Clone;
    fn from_i64(&self, v: i64) -> Option<Self::E>;
    fn is_zero(&self, a: &Self::E) -> bool;
    fn sub(&self, a: &Self::E, b: &Self::E) -> Option<Self::E>;
    fn mul(&self, a: &Self::E, b: &Self::E) -> Option<Self::E>;
    fn div(&self, a: &Self::E, b: &Self::E) -> Option<Self::E>;
}

pub(crate) struct Fp(pub u64);

impl Field for Fp {
    type E = u64;
    fn from_i64(&self, v: i64) -> Option<u64> {
        Some(v.rem_euclid(self.0 as i64) as u64)
    }
    fn is_zero(&self, a: &u64) -> bool {
        *a == 0
    }
    fn sub(&self, a: &u64, b: &u64) -> Option<u64> {
        Some((a + self.0 - b) % self.0)
    }
    fn mul(&self, a: &u64, b: &u64) -> Option<u64> {
        Some(a * b % self.0)
    }
    fn div(&self, a: &u64, b: &u64) -> Option<u64> {
        Some(a * mod_inverse(*b, self.0) % self.0)
    }
}

fn mod_inverse(a: u64, p: u64) -> u64 {
    // Fermat: p is prime and a != 0
    let mut base = a % p;
    let mut exp = p - 2;
    let mut acc = 1u64;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * base % p;
        }
        base = base * base % p;
        exp >>= 1;
    }
    acc
}

/// Fractions over `i64` in lowest terms with checked arithmetic.
pub(crate) struct SmallQ;

impl Field for SmallQ {
    type E = (i64, i64);
    fn from_i64(&self, v: i64) -> Option<(i64, i64)> {
        Some((v, 1))
    }
    fn is_zero(&self, a: &(i64, i64)) -> bool {
        a.0 == 0
    }
    fn sub(&self, a: &(i64, i64), b: &(i64, i64)) -> Option<(i64, i64)> {
        let g = a.1.gcd(&b.1);
        let (da, db) = (a.1 / g, b.1 / g);
        let num = a.0.checked_mul(db)?.checked_sub(b.0.checked_mul(da)?)?;
        let den = a.1.checked_mul(db)?;
        reduce(num, den)
    }
    fn mul(&self, a: &(i64, i64), b: &(i64, i64)) -> Option<(i64, i64)> {
        let g1 = a.0.gcd(&b.1).max(1);
        let g2 = b.0.gcd(&a.1).max(1);
        let num = (a.0 / g1).checked_mul(b.0 / g2)?;
        let den = (a.1 / g2).checked_mul(b.1 / g1)?;
        reduce(num, den)
    }
    fn div(&self, a: &(i64, i64), b: &(i64, i64)) -> Option<(i64, i64)> {
        let inv = if b.0 < 0 {
            (b.1.checked_neg()?, b.0.checked_neg()?)
        } else {
            (b.1, b.0)
        };
        self.mul(a, &inv)
    }
}

fn reduce(num: i64, den: i64) -> Option<(i64, i64)> {
    if num == 0 {
        return Some((0, 1));
    }
    let g = num.gcd(&den);
    let (mut n, mut d) = (num / g, den / g);
    if d < 0 {
        n = n.checked_neg()?;
        d = d.checked_neg()?;
    }
    Some((n, d))
}

pub(crate) struct BigQ;

impl Field for BigQ {
    type E = BigRational;
    fn from_i64(&self, v: i64) -> Option<BigRational> {
        Some(BigRational::from_integer(BigInt::from(v)))
    }
    fn is_zero(&self, a: &BigRational) -> bool {
        a.is_zero()
    }
    fn sub(&self, a: &BigRational, b: &BigRational) -> Option<BigRational> {
        Some(a - b)
    }
    fn mul(&self, a: &BigRational, b: &BigRational) -> Option<BigRational> {
        Some(a * b)
    }
    fn div(&self, a: &BigRational, b: &BigRational) -> Option<BigRational> {
        Some(a / b)
    }
}

/// Sparse integer column: `(row, value)` sorted by row.
pub(crate) type SparseColumn = Vec<(usize, i64)>;

/// Rank of the matrix whose columns are given, by pivot-on-lowest-row column
/// reduction. `None` means an arithmetic overflow occurred.
fn sparse_rank_in<F: Field>(field: &F, nrows: usize, columns: &[SparseColumn]) -> Option<usize> {
    let mut pivots: Vec<Option<Vec<(usize, F::E)>>> = vec![None; nrows];
    let mut rank = 0;
    for col in columns {
        let mut cur: Vec<(usize, F::E)> = Vec::with_capacity(col.len());
        for &(r, v) in col {
            let e = field.from_i64(v)?;
            if !field.is_zero(&e) {
                cur.push((r, e));
            }
        }
        while let Some((low, lv)) = cur.last().cloned() {
            match &pivots[low] {
                None => {
                    // normalize so the pivot entry is 1
                    let mut norm = Vec::with_capacity(cur.len());
                    for (r, e) in &cur {
                        norm.push((*r, field.div(e, &lv)?));
                    }
                    pivots[low] = Some(norm);
                    rank += 1;
                    break;
                }
                Some(p) => {
                    // cur -= lv * p, with p[low] = 1
                    let mut merged = Vec::with_capacity(cur.len() + p.len());
                    let (mut i, mut j) = (0, 0);
                    while i < cur.len() || j < p.len() {
                        let take_cur = j >= p.len() || (i < cur.len() && cur[i].0 < p[j].0);
                        let take_p = i >= cur.len() || (j < p.len() && p[j].0 < cur[i].0);
                        if take_cur {
                            merged.push(cur[i].clone());
                            i += 1;
                        } else if take_p {
                            let t = field.mul(&lv, &p[j].1)?;
                            let z = field.from_i64(0)?;
                            merged.push((p[j].0, field.sub(&z, &t)?));
                            j += 1;
                        } else {
                            let t = field.mul(&lv, &p[j].1)?;
                            let e = field.sub(&cur[i].1, &t)?;
                            if !field.is_zero(&e) {
                                merged.push((cur[i].0, e));
                            }
                            i += 1;
                            j += 1;
                        }
                    }
                    cur = merged;
                }
            }
        }
    }
    Some(rank)
}

pub(crate) fn sparse_rank(field: FieldSpec, nrows: usize, columns: &[SparseColumn]) -> usize {
    match field {
        FieldSpec::Prime(p) => sparse_rank_in(&Fp(p as u64), nrows, columns)
            .expect("modular arithmetic does not overflow"),
        FieldSpec::Rational => sparse_rank_in(&SmallQ, nrows, columns)
            .or_else(|| sparse_rank_in(&BigQ, nrows, columns))
            .expect("big rationals do not overflow"),
    }
}

/// Rank of a dense integer matrix over the given field.
pub fn rank(matrix: &[Vec<i64>], field: FieldSpec) -> usize {
    match field {
        FieldSpec::Prime(p) => rank_mod_p(matrix, p as u64),
        FieldSpec::Rational => rank_bareiss(matrix),
    }
}

fn rank_mod_p(matrix: &[Vec<i64>], p: u64) -> usize {
    let f = Fp(p);
    let mut m: Vec<Vec<u64>> = matrix
        .iter()
        .map(|row| row.iter().map(|&v| f.from_i64(v).unwrap()).collect())
        .collect();
    let rows = m.len();
    let cols = m.first().map_or(0, Vec::len);
    let mut rank = 0;
    for c in 0..cols {
        let Some(piv) = (rank..rows).find(|&r| m[r][c] != 0) else {
            continue;
        };
        m.swap(rank, piv);
        let inv = mod_inverse(m[rank][c], p);
        for v in m[rank].iter_mut() {
            *v = *v * inv % p;
        }
        for r in 0..rows {
            if r != rank && m[r][c] != 0 {
                let factor = m[r][c];
                for k in c..cols {
                    let t = factor * m[rank][k] % p;
                    m[r][k] = (m[r][k] + p - t) % p;
                }
            }
        }
        rank += 1;
    }
    rank
}

/// Fraction-free Gaussian elimination (Bareiss) with row pivoting.
fn rank_bareiss(matrix: &[Vec<i64>]) -> usize {
    let mut m: Vec<Vec<BigInt>> = matrix
        .iter()
        .map(|row| row.iter().map(|&v| BigInt::from(v)).collect())
        .collect();
    let rows = m.len();
    let cols = m.first().map_or(0, Vec::len);
    let mut prev = BigInt::one();
    let mut rank = 0;
    for c in 0..cols {
        if rank == rows {
            break;
        }
        // smallest nonzero entry keeps intermediate values small
        let Some(piv) = (rank..rows)
            .filter(|&r| !m[r][c].is_zero())
            .min_by_key(|&r| m[r][c].abs())
        else {
            continue;
        };
        m.swap(rank, piv);
        for r in rank + 1..rows {
            for k in c + 1..cols {
                let v = &m[rank][c] * &m[r][k] - &m[r][c] * &m[rank][k];
                debug_assert!((&v % &prev).is_zero());
                m[r][k] = v / &prev;
            }
            m[r][c] = BigInt::zero();
        }
        prev = m[rank][c].clone();
        rank += 1;
    }
    rank
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn to_sparse(m: &[Vec<i64>]) -> Vec<SparseColumn> {
        let cols = m.first().map_or(0, Vec::len);
        (0..cols)
            .map(|c| {
                (0..m.len())
                    .filter(|&r| m[r][c] != 0)
                    .map(|r| (r, m[r][c]))
                    .collect()
            })
            .collect()
    }

    #[test]
    fn rank_examples() {
        let id = vec![vec![1, 0, 0], vec![0, 1, 0], vec![0, 0, 1]];
        for f in [FieldSpec::GF2, FieldSpec::GF3, FieldSpec::Q] {
            assert_eq!(rank(&id, f), 3);
        }
        assert_eq!(rank(&[vec![1, 1], vec![1, 1]], FieldSpec::GF2), 1);
        let two = vec![vec![2, 0], vec![0, 2]];
        assert_eq!(rank(&two, FieldSpec::GF2), 0);
        assert_eq!(rank(&two, FieldSpec::Q), 2);
        assert_eq!(rank(&[], FieldSpec::Q), 0);
    }

    #[test]
    fn field_parsing() {
        assert_eq!("Q".parse::<FieldSpec>().unwrap(), FieldSpec::Q);
        assert_eq!("3".parse::<FieldSpec>().unwrap(), FieldSpec::GF3);
        assert_eq!("GF(5)".parse::<FieldSpec>().unwrap(), FieldSpec::Prime(5));
        assert!("4".parse::<FieldSpec>().is_err());
        assert!("R".parse::<FieldSpec>().is_err());
        assert_eq!(FieldSpec::Prime(7).to_string(), "GF(7)");
    }

    #[test]
    fn small_rationals_overflow_falls_back() {
        // entries near i64::MAX force the checked path to give up
        let big = i64::MAX / 3;
        let m = vec![
            vec![big, big - 1, 3],
            vec![big - 5, big, 7],
            vec![1, 2, big],
        ];
        let sparse = to_sparse(&m);
        assert_eq!(
            sparse_rank(FieldSpec::Q, 3, &sparse),
            rank(&m, FieldSpec::Q)
        );
    }

    proptest! {
        #[test]
        fn dense_and_sparse_ranks_agree(
            m in proptest::collection::vec(proptest::collection::vec(-3i64..=3, 6), 0..7),
            p in prop::sample::select(vec![2u32, 3, 5, 7]),
        ) {
            let sparse = to_sparse(&m);
            for f in [FieldSpec::Prime(p), FieldSpec::Q] {
                prop_assert_eq!(sparse_rank(f, m.len(), &sparse), rank(&m, f));
            }
            // rank over Q bounds every modular rank
            prop_assert!(rank(&m, FieldSpec::Prime(p)) <= rank(&m, FieldSpec::Q));
        }
    }
}
