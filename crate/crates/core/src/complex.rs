//! Facet-represented simplicial complexes on a ground set of at most 64 vertices.
//!
//! Faces are enumerated on demand from the facet list. The void complex (no
//! faces at all) and the complex `{∅}` are different values: the former has no
//! facets, the latter has the single facet `∅`.

use std::cmp::Ordering;

use serde::{Deserialize, Serialize};

use crate::error::{input, Result};
use crate::graph::Graph;
use crate::vertex_set::{canonical_cmp_masks, lex_cmp_masks, mask_bits, VertexSet};

pub const MAX_GROUND: usize = 64;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct SimplicialComplex {
    ground: usize,
    // antichain, canonical order (size, then lexicographic)
    facets: Vec<u64>,
}

impl std::fmt::Debug for SimplicialComplex {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.is_void() {
            return write!(f, "Void(ground={})", self.ground);
        }
        write!(f, "Complex(ground={}, facets=[", self.ground)?;
        for (i, &m) in self.facets.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{:?}", mask_bits(m).collect::<Vec<_>>())?;
        }
        write!(f, "])")
    }
}

/// Reduces a list of faces to its inclusion-maximal members in canonical order.
pub(crate) fn normalize(faces: &mut Vec<u64>) {
    faces.sort_unstable_by(|a, b| b.count_ones().cmp(&a.count_ones()).then(a.cmp(b)));
    faces.dedup();
    let mut kept: Vec<u64> = Vec::with_capacity(faces.len());
    for &f in faces.iter() {
        if !kept.iter().any(|&k| f & !k == 0) {
            kept.push(f);
        }
    }
    kept.sort_unstable_by(|&a, &b| canonical_cmp_masks(a, b));
    *faces = kept;
}

fn ground_mask(ground: usize) -> u64 {
    if ground == 64 {
        u64::MAX
    } else {
        (1u64 << ground) - 1
    }
}

/// Compacts the bits of `m` selected by `keep` into the low positions.
pub(crate) fn compress(m: u64, keep: u64) -> u64 {
    let mut out = 0u64;
    for (i, b) in mask_bits(keep).enumerate() {
        if m >> b & 1 == 1 {
            out |= 1 << i;
        }
    }
    out
}

/// Maximal cliques by Bron–Kerbosch with pivoting; `adj` restricted to `active`.
pub(crate) fn maximal_cliques(adj: &[u64], active: u64) -> Vec<u64> {
    fn bk(adj: &[u64], r: u64, mut p: u64, mut x: u64, out: &mut Vec<u64>) {
        if p == 0 && x == 0 {
            out.push(r);
            return;
        }
        let pivot = mask_bits(p | x)
            .max_by_key(|&u| (p & adj[u]).count_ones())
            .expect("p | x nonempty");
        for v in mask_bits(p & !adj[pivot]) {
            bk(adj, r | 1 << v, p & adj[v], x & adj[v], out);
            p &= !(1 << v);
            x |= 1 << v;
        }
    }
    let mut out = Vec::new();
    bk(adj, 0, active, 0, &mut out);
    out
}

/// Maximal independent sets of the graph `adj` restricted to `active`, found
/// as maximal cliques of the complement.
pub(crate) fn maximal_independent_sets(adj: &[u64], active: u64) -> Vec<u64> {
    let comp: Vec<u64> = (0..adj.len())
        .map(|v| active & !adj[v] & !(1u64 << v))
        .collect();
    maximal_cliques(&comp, active)
}

/// Facets of `Δ[W]` before relabelling.
pub(crate) fn restrict_masks(facets: &[u64], w: u64) -> Vec<u64> {
    if facets.is_empty() {
        return Vec::new();
    }
    let mut out: Vec<u64> = facets.iter().map(|&f| f & w).collect();
    normalize(&mut out);
    out
}

/// Facets of the link of `sigma` (no relabelling); empty if `sigma` is not a face.
pub(crate) fn link_masks(facets: &[u64], sigma: u64) -> Vec<u64> {
    let mut out: Vec<u64> = facets
        .iter()
        .filter(|&&f| f & sigma == sigma)
        .map(|&f| f & !sigma)
        .collect();
    // facets through sigma stay an antichain after removing sigma
    out.sort_unstable_by(|&a, &b| canonical_cmp_masks(a, b));
    out
}

/// Facets of the deletion of `sigma` (no relabelling).
pub(crate) fn deletion_masks(facets: &[u64], sigma: u64) -> Vec<u64> {
    if facets.is_empty() {
        return Vec::new();
    }
    let mut out: Vec<u64> = facets.iter().map(|&f| f & !sigma).collect();
    normalize(&mut out);
    out
}

/// All faces grouped by cardinality (`out[k]` holds the faces with `k`
/// vertices), each group in lexicographic order.
pub(crate) fn faces_by_size(facets: &[u64]) -> Vec<Vec<u64>> {
    let top = facets.iter().map(|f| f.count_ones() as usize).max();
    let Some(top) = top else {
        return Vec::new();
    };
    let mut all: Vec<u64> = Vec::new();
    for &f in facets {
        // enumerate submasks of f
        let mut s = f;
        loop {
            all.push(s);
            if s == 0 {
                break;
            }
            s = (s - 1) & f;
        }
    }
    all.sort_unstable();
    all.dedup();
    let mut out = vec![Vec::new(); top + 1];
    for s in all {
        out[s.count_ones() as usize].push(s);
    }
    for group in &mut out {
        group.sort_unstable_by(|&a, &b| lex_cmp_masks(a, b));
    }
    out
}

impl SimplicialComplex {
    /// Builds a complex from generating faces; non-maximal generators are dropped.
    pub fn new(ground: usize, generators: &[VertexSet]) -> Result<Self> {
        if ground > MAX_GROUND {
            return input(format!(
                "complexes support at most {MAX_GROUND} ground vertices, got {ground}"
            ));
        }
        let mut masks = Vec::with_capacity(generators.len());
        for g in generators {
            if g.bound() > ground {
                return input(format!(
                    "face {:?} leaves the ground set 0..{ground}",
                    g.to_vec()
                ));
            }
            masks.push(g.as_mask().expect("bounded by ground <= 64"));
        }
        Ok(Self::from_masks(ground, masks))
    }

    /// Mask form of [`SimplicialComplex::new`]. An empty generator list gives
    /// the void complex.
    pub fn from_masks(ground: usize, mut generators: Vec<u64>) -> Self {
        assert!(ground <= MAX_GROUND);
        debug_assert!(generators.iter().all(|&g| g & !ground_mask(ground) == 0));
        normalize(&mut generators);
        SimplicialComplex {
            ground,
            facets: generators,
        }
    }

    pub fn void(ground: usize) -> Self {
        Self::from_masks(ground, Vec::new())
    }

    /// The complex `{∅}`.
    pub fn empty_face(ground: usize) -> Self {
        Self::from_masks(ground, vec![0])
    }

    /// The full simplex on `0..n`.
    pub fn simplex(n: usize) -> Self {
        Self::from_masks(n, vec![ground_mask(n)])
    }

    /// The six-vertex triangulation of the real projective plane.
    pub fn real_projective_plane() -> Self {
        const TRIANGLES: [[u32; 3]; 10] = [
            [0, 1, 2],
            [0, 2, 3],
            [0, 3, 4],
            [0, 4, 5],
            [0, 1, 5],
            [1, 2, 4],
            [2, 3, 5],
            [1, 3, 4],
            [2, 4, 5],
            [1, 3, 5],
        ];
        Self::from_masks(
            6,
            TRIANGLES
                .iter()
                .map(|t| t.iter().map(|&v| 1u64 << v).sum())
                .collect(),
        )
    }

    pub fn ground(&self) -> usize {
        self.ground
    }

    pub fn facets(&self) -> Vec<VertexSet> {
        self.facets
            .iter()
            .map(|&m| VertexSet::from_mask(m))
            .collect()
    }

    pub fn facet_masks(&self) -> &[u64] {
        &self.facets
    }

    pub fn is_void(&self) -> bool {
        self.facets.is_empty()
    }

    /// Dimension; `None` for the void complex, `-1` for `{∅}`.
    pub fn dim(&self) -> Option<isize> {
        self.facets
            .iter()
            .map(|f| f.count_ones() as isize - 1)
            .max()
    }

    /// Vertices that lie in some face.
    pub fn support(&self) -> VertexSet {
        VertexSet::from_mask(self.facets.iter().fold(0, |a, &f| a | f))
    }

    pub fn contains_face(&self, face: &VertexSet) -> bool {
        match face.as_mask() {
            Some(m) => self.facets.iter().any(|&f| m & !f == 0),
            None => false,
        }
    }

    pub fn is_pure(&self) -> bool {
        self.facets
            .windows(2)
            .all(|w| w[0].count_ones() == w[1].count_ones())
    }

    pub fn is_simplex(&self) -> bool {
        self.facets.len() <= 1
    }

    /// Faces of dimension `d` in lexicographic order.
    pub fn faces_of_dim(&self, d: isize) -> Vec<VertexSet> {
        let groups = faces_by_size(&self.facets);
        let k = d + 1;
        if k < 0 || k as usize >= groups.len() {
            return Vec::new();
        }
        groups[k as usize]
            .iter()
            .map(|&m| VertexSet::from_mask(m))
            .collect()
    }

    /// All faces, by increasing dimension and lexicographically within a dimension.
    pub fn all_faces(&self) -> impl Iterator<Item = VertexSet> {
        faces_by_size(&self.facets)
            .into_iter()
            .flatten()
            .map(VertexSet::from_mask)
    }

    pub fn face_count(&self) -> usize {
        faces_by_size(&self.facets).iter().map(Vec::len).sum()
    }

    fn face_mask(&self, sigma: &VertexSet) -> Result<u64> {
        match sigma.as_mask() {
            Some(m) if self.facets.iter().any(|&f| m & !f == 0) => Ok(m),
            _ => input(format!("{:?} is not a face of the complex", sigma.to_vec())),
        }
    }

    fn relabel(&self, facets: Vec<u64>, keep: u64) -> SimplicialComplex {
        let ground = keep.count_ones() as usize;
        SimplicialComplex::from_masks(
            ground,
            facets.into_iter().map(|f| compress(f, keep)).collect(),
        )
    }

    /// `lk(σ) = {τ : τ ∩ σ = ∅, τ ∪ σ ∈ Δ}` on the ground set minus `σ`.
    pub fn link(&self, sigma: &VertexSet) -> Result<SimplicialComplex> {
        let s = self.face_mask(sigma)?;
        Ok(self.relabel(link_masks(&self.facets, s), ground_mask(self.ground) & !s))
    }

    /// `del(σ) = {τ : τ ∩ σ = ∅}` on the ground set minus `σ`.
    pub fn deletion(&self, sigma: &VertexSet) -> Result<SimplicialComplex> {
        let s = self.face_mask(sigma)?;
        Ok(self.relabel(
            deletion_masks(&self.facets, s),
            ground_mask(self.ground) & !s,
        ))
    }

    /// `Δ[W]`, relabelled onto `0..|W|`.
    pub fn induced_subcomplex(&self, w: &VertexSet) -> Result<SimplicialComplex> {
        if w.bound() > self.ground {
            return input(format!(
                "vertex {} outside the ground set 0..{}",
                w.bound() - 1,
                self.ground
            ));
        }
        let wm = w.as_mask().expect("bounded by ground");
        Ok(self.relabel(restrict_masks(&self.facets, wm), wm))
    }

    /// Relabels onto the support, dropping ground vertices that lie in no face.
    pub fn compact(&self) -> SimplicialComplex {
        let keep = self.support().as_mask().expect("ground <= 64");
        self.relabel(self.facets.clone(), keep)
    }

    /// All faces of dimension at most `k` (`k ≥ -1`).
    pub fn skeleton(&self, k: isize) -> Result<SimplicialComplex> {
        if k < -1 {
            return input(format!("skeleton dimension {k} < -1"));
        }
        let size = (k + 1) as u32;
        let mut gens = Vec::new();
        for &f in &self.facets {
            if f.count_ones() <= size {
                gens.push(f);
            } else {
                subsets_of_size(f, size as usize, &mut gens);
            }
        }
        Ok(SimplicialComplex::from_masks(self.ground, gens))
    }

    /// The subcomplex generated by the facets of dimension at least `m`.
    pub fn pure_part_above(&self, m: isize) -> SimplicialComplex {
        SimplicialComplex::from_masks(
            self.ground,
            self.facets
                .iter()
                .copied()
                .filter(|f| f.count_ones() as isize > m)
                .collect(),
        )
    }

    /// Join on the concatenated ground set.
    pub fn join(&self, other: &SimplicialComplex) -> Result<SimplicialComplex> {
        let ground = self.ground + other.ground;
        if ground > MAX_GROUND {
            return input(format!("join ground set {ground} exceeds {MAX_GROUND}"));
        }
        let mut gens = Vec::with_capacity(self.facets.len() * other.facets.len());
        for &a in &self.facets {
            for &b in &other.facets {
                gens.push(a | b << self.ground);
            }
        }
        Ok(SimplicialComplex::from_masks(ground, gens))
    }

    pub fn independence_complex(g: &Graph) -> Result<SimplicialComplex> {
        let adj = g.adjacency_masks()?;
        let n = g.n();
        Ok(SimplicialComplex::from_masks(
            n,
            maximal_independent_sets(&adj, ground_mask(n)),
        ))
    }

    pub fn clique_complex(g: &Graph) -> Result<SimplicialComplex> {
        let adj = g.adjacency_masks()?;
        let n = g.n();
        Ok(SimplicialComplex::from_masks(
            n,
            maximal_cliques(&adj, ground_mask(n)),
        ))
    }

    /// Faces are the vertex sets `W` all of whose induced components have fewer
    /// than `r` vertices. `r = 2` gives the independence complex.
    pub fn component_complex(g: &Graph, r: usize) -> Result<SimplicialComplex> {
        if r < 2 {
            return input(format!("component size r = {r} < 2"));
        }
        let adj = g.adjacency_masks()?;
        let n = g.n();
        let mut facets = Vec::new();
        // depth-first over faces in increasing vertex order; the face property
        // is hereditary, so a face is a facet iff no vertex can be added
        fn dfs(adj: &[u64], n: usize, r: usize, face: u64, next: usize, out: &mut Vec<u64>) {
            let mut extended = false;
            for v in next..n {
                let f = face | 1 << v;
                if components_below(adj, f, r) {
                    extended = true;
                    dfs(adj, n, r, f, v + 1, out);
                }
            }
            if !extended {
                let maximal =
                    (0..n).all(|v| face >> v & 1 == 1 || !components_below(adj, face | 1 << v, r));
                if maximal {
                    out.push(face);
                }
            }
        }
        dfs(&adj, n, r, 0, 0, &mut facets);
        Ok(SimplicialComplex::from_masks(n, facets))
    }
}

/// Every connected component of the subgraph induced on `w` has fewer than `r` vertices.
pub(crate) fn components_below(adj: &[u64], w: u64, r: usize) -> bool {
    let mut left = w;
    while left != 0 {
        let start = left & left.wrapping_neg();
        let mut comp = start;
        let mut frontier = start;
        while frontier != 0 {
            let v = frontier.trailing_zeros() as usize;
            frontier &= frontier - 1;
            let new = adj[v] & w & !comp;
            comp |= new;
            frontier |= new;
        }
        if comp.count_ones() as usize >= r {
            return false;
        }
        left &= !comp;
    }
    true
}

fn subsets_of_size(f: u64, k: usize, out: &mut Vec<u64>) {
    let bits: Vec<usize> = mask_bits(f).collect();
    fn rec(bits: &[usize], k: usize, start: usize, cur: u64, out: &mut Vec<u64>) {
        if k == 0 {
            out.push(cur);
            return;
        }
        for i in start..=bits.len() - k {
            rec(bits, k - 1, i + 1, cur | 1 << bits[i], out);
        }
    }
    rec(&bits, k, 0, 0, out);
}

#[derive(Serialize, Deserialize)]
struct ComplexJson {
    ground: usize,
    facets: Vec<Vec<usize>>,
}

impl Serialize for SimplicialComplex {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        ComplexJson {
            ground: self.ground,
            facets: self
                .facets
                .iter()
                .map(|&f| mask_bits(f).collect())
                .collect(),
        }
        .serialize(s)
    }
}

impl SimplicialComplex {
    pub fn from_json(text: &str) -> Result<Self> {
        let j: ComplexJson = serde_json::from_str(text)
            .map_err(|e| crate::Error::Input(format!("complex JSON: {e}")))?;
        let gens: Vec<VertexSet> = j
            .facets
            .iter()
            .map(|f| f.iter().copied().collect())
            .collect();
        SimplicialComplex::new(j.ground, &gens)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("complex serializes")
    }
}

impl PartialOrd for SimplicialComplex {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for SimplicialComplex {
    fn cmp(&self, other: &Self) -> Ordering {
        self.ground.cmp(&other.ground).then_with(|| {
            self.facets.len().cmp(&other.facets.len()).then_with(|| {
                self.facets
                    .iter()
                    .zip(&other.facets)
                    .map(|(&a, &b)| canonical_cmp_masks(a, b))
                    .find(|o| o.is_ne())
                    .unwrap_or(Ordering::Equal)
            })
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::random::{random_complex, random_graph};
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn set(v: &[usize]) -> VertexSet {
        v.iter().copied().collect()
    }

    fn cx(ground: usize, facets: &[&[usize]]) -> SimplicialComplex {
        let gens: Vec<VertexSet> = facets.iter().map(|f| set(f)).collect();
        SimplicialComplex::new(ground, &gens).unwrap()
    }

    fn pentagon() -> SimplicialComplex {
        SimplicialComplex::independence_complex(&Graph::cycle(5).unwrap()).unwrap()
    }

    #[test]
    fn independence_complex_examples() {
        let k2 = SimplicialComplex::independence_complex(&Graph::complete(2)).unwrap();
        assert_eq!(k2, cx(2, &[&[0], &[1]]));
        assert_eq!(
            pentagon(),
            cx(5, &[&[0, 2], &[0, 3], &[1, 3], &[1, 4], &[2, 4]])
        );
        assert_eq!(
            SimplicialComplex::independence_complex(&Graph::empty(3)).unwrap(),
            SimplicialComplex::simplex(3)
        );
        assert_eq!(
            SimplicialComplex::independence_complex(&Graph::empty(0)).unwrap(),
            SimplicialComplex::empty_face(0)
        );
    }

    #[test]
    fn clique_complex_examples() {
        assert_eq!(
            SimplicialComplex::clique_complex(&Graph::complete(3)).unwrap(),
            SimplicialComplex::simplex(3)
        );
        assert_eq!(
            SimplicialComplex::clique_complex(&Graph::cycle(4).unwrap()).unwrap(),
            cx(4, &[&[0, 1], &[1, 2], &[2, 3], &[0, 3]])
        );
        assert_eq!(
            SimplicialComplex::clique_complex(&Graph::path(3)).unwrap(),
            cx(3, &[&[0, 1], &[1, 2]])
        );
    }

    #[test]
    fn component_complex_examples() {
        let c5 = Graph::cycle(5).unwrap();
        assert_eq!(
            SimplicialComplex::component_complex(&c5, 2).unwrap(),
            pentagon()
        );
        assert_eq!(
            SimplicialComplex::component_complex(&Graph::path(3), 3).unwrap(),
            cx(3, &[&[0, 1], &[1, 2], &[0, 2]])
        );
        assert_eq!(
            SimplicialComplex::component_complex(&Graph::complete(3), 3).unwrap(),
            SimplicialComplex::simplex(3).skeleton(1).unwrap()
        );
        assert!(SimplicialComplex::component_complex(&c5, 1).is_err());
    }

    #[test]
    fn component_complex_minimal_nonfaces_are_connected_r_sets() {
        let mut rng = ChaCha8Rng::seed_from_u64(2);
        for _ in 0..40 {
            let g = random_graph(&mut rng, 7, 0.4);
            for r in 2..5 {
                let d = SimplicialComplex::component_complex(&g, r).unwrap();
                for w in 0u64..1 << 7 {
                    let is_face = d.contains_face(&VertexSet::from_mask(w));
                    let minimal_nonface = !is_face
                        && mask_bits(w)
                            .all(|v| d.contains_face(&VertexSet::from_mask(w & !(1 << v))));
                    let connected_r_set = w.count_ones() as usize == r && {
                        let (h, _) = g.induced_subgraph(&VertexSet::from_mask(w)).unwrap();
                        h.is_connected()
                    };
                    assert_eq!(minimal_nonface, connected_r_set, "r={r} w={w:b}");
                }
            }
        }
    }

    #[test]
    fn link_and_deletion_examples() {
        let p = pentagon();
        assert_eq!(p.link(&set(&[0])).unwrap(), cx(4, &[&[1], &[2]]));
        assert_eq!(
            SimplicialComplex::simplex(3).deletion(&set(&[1])).unwrap(),
            SimplicialComplex::simplex(2)
        );
        assert_eq!(p.link(&VertexSet::new()).unwrap(), p);
        assert!(p.link(&set(&[0, 1])).is_err());
    }

    #[test]
    fn induced_subcomplex_examples() {
        let p = pentagon();
        // complex-vertices 0, 2, 4 consecutive along the pentagon 0-2-4-1-3
        assert_eq!(
            p.induced_subcomplex(&set(&[0, 2, 4])).unwrap(),
            cx(3, &[&[0, 1], &[1, 2]])
        );
        assert_eq!(p.induced_subcomplex(&VertexSet::full(5)).unwrap(), p);
        assert_eq!(
            p.induced_subcomplex(&VertexSet::new()).unwrap(),
            SimplicialComplex::empty_face(0)
        );
        assert!(p.induced_subcomplex(&set(&[5])).is_err());
    }

    #[test]
    fn skeleton_and_pure_part() {
        let s = SimplicialComplex::simplex(3);
        assert_eq!(s.skeleton(1).unwrap(), cx(3, &[&[0, 1], &[0, 2], &[1, 2]]));
        assert_eq!(s.skeleton(0).unwrap(), cx(3, &[&[0], &[1], &[2]]));
        assert_eq!(pentagon().skeleton(1).unwrap(), pentagon());
        assert_eq!(s.skeleton(-1).unwrap(), SimplicialComplex::empty_face(3));

        let d = cx(3, &[&[0, 1], &[2]]);
        assert_eq!(d.pure_part_above(1), cx(3, &[&[0, 1]]));
        assert_eq!(d.pure_part_above(0), d);
        assert!(d.pure_part_above(2).is_void());
    }

    #[test]
    fn join_and_purity() {
        let two_points = cx(2, &[&[0], &[1]]);
        let square = two_points.join(&two_points).unwrap();
        assert_eq!(square, cx(4, &[&[0, 2], &[0, 3], &[1, 2], &[1, 3]]));
        assert!(pentagon().is_pure());
        assert!(!cx(3, &[&[0, 1], &[2]]).is_pure());
    }

    #[test]
    fn faces_by_dimension() {
        let p = pentagon();
        assert_eq!(p.faces_of_dim(-1), vec![VertexSet::new()]);
        assert_eq!(p.faces_of_dim(0).len(), 5);
        assert_eq!(p.faces_of_dim(1).len(), 5);
        assert_eq!(p.face_count(), 11);
        assert_eq!(SimplicialComplex::void(3).face_count(), 0);
    }

    #[test]
    fn ind_identities_exhaustive_small() {
        // all graphs on 5 vertices, every W and every vertex
        let pairs: Vec<(usize, usize)> = (0..5)
            .flat_map(|u| (u + 1..5).map(move |v| (u, v)))
            .collect();
        for code in 0u32..1 << pairs.len() {
            let g = Graph::from_edges(
                5,
                pairs
                    .iter()
                    .enumerate()
                    .filter(|(i, _)| code >> i & 1 == 1)
                    .map(|(_, &e)| e),
            )
            .unwrap();
            let ind = SimplicialComplex::independence_complex(&g).unwrap();
            assert_eq!(
                ind,
                SimplicialComplex::clique_complex(&g.complement()).unwrap()
            );
            assert_eq!(ind, SimplicialComplex::component_complex(&g, 2).unwrap());
            for w in 0u64..32 {
                let w = VertexSet::from_mask(w);
                let lhs = ind.induced_subcomplex(&w).unwrap();
                let rhs =
                    SimplicialComplex::independence_complex(&g.induced_subgraph(&w).unwrap().0)
                        .unwrap();
                assert_eq!(lhs, rhs);
            }
            for v in 0..5 {
                let del = ind.deletion(&set(&[v])).unwrap();
                let (gv, _) = g.remove_vertices(&set(&[v])).unwrap();
                assert_eq!(del, SimplicialComplex::independence_complex(&gv).unwrap());
                let lk = ind.link(&set(&[v])).unwrap().compact();
                let (gn, _) = g
                    .remove_vertices(&g.neighborhood(v, true).unwrap())
                    .unwrap();
                assert_eq!(
                    lk,
                    SimplicialComplex::independence_complex(&gn)
                        .unwrap()
                        .compact()
                );
            }
        }
    }

    #[test]
    fn join_of_disjoint_union() {
        let mut rng = ChaCha8Rng::seed_from_u64(4);
        for _ in 0..50 {
            let g = random_graph(&mut rng, 4, 0.5);
            let h = random_graph(&mut rng, 5, 0.5);
            let lhs =
                SimplicialComplex::independence_complex(&Graph::disjoint_union(&g, &h)).unwrap();
            let rhs = SimplicialComplex::independence_complex(&g)
                .unwrap()
                .join(&SimplicialComplex::independence_complex(&h).unwrap())
                .unwrap();
            assert_eq!(lhs, rhs);
        }
    }

    #[test]
    fn join_is_associative() {
        let mut rng = ChaCha8Rng::seed_from_u64(8);
        for _ in 0..50 {
            let a = random_complex(&mut rng, 3, 3);
            let b = random_complex(&mut rng, 3, 3);
            let c = random_complex(&mut rng, 4, 3);
            assert_eq!(
                a.join(&b).unwrap().join(&c).unwrap(),
                a.join(&b.join(&c).unwrap()).unwrap()
            );
        }
    }

    #[test]
    fn facets_stay_antichains() {
        let mut rng = ChaCha8Rng::seed_from_u64(6);
        let antichain = |c: &SimplicialComplex| {
            let f = c.facet_masks();
            f.iter()
                .enumerate()
                .all(|(i, &a)| f.iter().enumerate().all(|(j, &b)| i == j || a & !b != 0))
        };
        for _ in 0..200 {
            let c = random_complex(&mut rng, 7, 6);
            assert!(antichain(&c));
            assert!(antichain(&c.skeleton(1).unwrap()));
            assert!(antichain(&c.pure_part_above(1)));
            assert!(antichain(
                &c.induced_subcomplex(&VertexSet::from_mask(0b1011011))
                    .unwrap()
            ));
            if let Some(&f) = c.facet_masks().first() {
                let v = VertexSet::from_mask(f & f.wrapping_neg());
                assert!(antichain(&c.link(&v).unwrap()));
                assert!(antichain(&c.deletion(&v).unwrap()));
            }
        }
    }

    #[test]
    fn json_round_trip() {
        let p = pentagon();
        let s = p.to_json();
        assert_eq!(
            s,
            r#"{"ground":5,"facets":[[0,2],[0,3],[1,3],[1,4],[2,4]]}"#
        );
        assert_eq!(SimplicialComplex::from_json(&s).unwrap(), p);
        assert!(SimplicialComplex::from_json(r#"{"ground":2,"facets":[[0,5]]}"#).is_err());
    }
}
