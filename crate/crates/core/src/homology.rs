//! Reduced simplicial homology over a field, from boundary-matrix ranks.
//!
//! Chains are augmented: the empty face sits in degree −1 and `∂₀` is the
//! all-ones row, so `H̃_{-1}({∅}) = k` and the void complex has no homology.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::complex::{faces_by_size, SimplicialComplex};
use crate::error::{input, Result};
use crate::linalg::{sparse_rank, FieldSpec, SparseColumn};
use crate::vertex_set::{lex_cmp_masks, mask_bits};

/// `dim_k H̃_d` for every degree `d` in `-1..=dim Δ`; zero elsewhere.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct HomologyProfile {
    #[serde(with = "degree_keys")]
    dims: BTreeMap<isize, usize>,
}

mod degree_keys {
    use std::collections::BTreeMap;

    use serde::{Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(m: &BTreeMap<isize, usize>, s: S) -> Result<S::Ok, S::Error> {
        s.collect_map(m.iter().map(|(k, v)| (k.to_string(), v)))
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(
        d: D,
    ) -> Result<BTreeMap<isize, usize>, D::Error> {
        let raw: BTreeMap<String, usize> = BTreeMap::deserialize(d)?;
        raw.into_iter()
            .map(|(k, v)| k.parse().map(|k| (k, v)).map_err(serde::de::Error::custom))
            .collect()
    }
}

impl HomologyProfile {
    pub(crate) fn from_dims(dims: &[usize]) -> Self {
        HomologyProfile {
            dims: dims
                .iter()
                .enumerate()
                .map(|(i, &d)| (i as isize - 1, d))
                .collect(),
        }
    }

    pub fn get(&self, degree: isize) -> usize {
        self.dims.get(&degree).copied().unwrap_or(0)
    }

    pub fn is_acyclic(&self) -> bool {
        self.dims.values().all(|&d| d == 0)
    }

    /// Nonzero `(degree, dimension)` pairs.
    pub fn nonzero(&self) -> impl Iterator<Item = (isize, usize)> + '_ {
        self.dims
            .iter()
            .filter(|(_, &v)| v > 0)
            .map(|(&k, &v)| (k, v))
    }

    pub fn total(&self) -> usize {
        self.dims.values().sum()
    }
}

fn boundary_columns(faces: &[u64], lower: &[u64]) -> Vec<SparseColumn> {
    faces
        .iter()
        .map(|&f| {
            let mut col: SparseColumn = mask_bits(f)
                .enumerate()
                .map(|(t, v)| {
                    let row = lower
                        .binary_search_by(|&x| lex_cmp_masks(x, f & !(1 << v)))
                        .expect("boundary face is a face");
                    (row, if t % 2 == 0 { 1 } else { -1 })
                })
                .collect();
            col.sort_unstable_by_key(|&(r, _)| r);
            col
        })
        .collect()
}

/// Reduced Betti numbers indexed by `degree + 1`, straight from facet masks.
pub(crate) fn reduced_homology_masks(facets: &[u64], field: FieldSpec) -> Vec<usize> {
    match facets {
        [] => return Vec::new(),
        [0] => return vec![1],
        [f] => return vec![0; f.count_ones() as usize + 1],
        _ => {}
    }
    let top = facets
        .iter()
        .map(|f| f.count_ones() as usize)
        .max()
        .unwrap_or(0);
    // cone: a vertex common to every facet
    if facets.iter().fold(u64::MAX, |a, &f| a & f) != 0 {
        return vec![0; top + 1];
    }
    let faces = faces_by_size(facets);
    // ranks[k] = rank of the boundary from k-vertex faces to (k-1)-vertex faces
    let mut ranks = vec![0usize; top + 2];
    ranks[1] = usize::from(!faces[1].is_empty());
    for k in 2..=top {
        let cols = boundary_columns(&faces[k], &faces[k - 1]);
        ranks[k] = sparse_rank(field, faces[k - 1].len(), &cols);
    }
    (0..=top)
        .map(|k| faces[k].len() - ranks[k] - ranks[k + 1])
        .collect()
}

impl SimplicialComplex {
    pub fn reduced_homology(&self, field: FieldSpec) -> HomologyProfile {
        HomologyProfile::from_dims(&reduced_homology_masks(self.facet_masks(), field))
    }

    /// The matrix of `∂_d` from `d`-faces (columns) to `(d-1)`-faces (rows),
    /// both in lexicographic order. `d = 0` gives the augmentation row.
    pub fn boundary_matrix(&self, d: isize) -> Vec<Vec<i64>> {
        if d < 0 {
            return Vec::new();
        }
        let faces = faces_by_size(self.facet_masks());
        let k = d as usize + 1;
        let cols: &[u64] = faces.get(k).map_or(&[], Vec::as_slice);
        let rows: &[u64] = faces.get(k - 1).map_or(&[], Vec::as_slice);
        let mut m = vec![vec![0i64; cols.len()]; rows.len()];
        for (j, col) in boundary_columns(cols, rows).into_iter().enumerate() {
            for (i, v) in col {
                m[i][j] = v;
            }
        }
        m
    }

    /// `true` when no torsion is detected: the homology profiles over every
    /// listed prime agree with the rational one.
    pub fn torsion_probe(&self, primes: &[u32]) -> Result<bool> {
        if primes.is_empty() {
            return input("torsion probe needs at least one prime");
        }
        let fields = primes
            .iter()
            .map(|&p| FieldSpec::prime(p))
            .collect::<Result<Vec<_>>>()?;
        let rational = self.reduced_homology(FieldSpec::Q);
        Ok(fields
            .into_iter()
            .all(|f| self.reduced_homology(f) == rational))
    }
}
