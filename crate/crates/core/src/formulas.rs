//! Closed forms for special families and projective-dimension bounds.
//!
//! Nothing here calls the Hochster sweep except [`verify_bound`], whose job
//! is to compare a bound with the true projective dimension. The closed forms
//! are checked against the sweep in tests and by the `verify` runners.

use std::collections::{BTreeMap, VecDeque};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Serialize, Serializer};

use crate::complex::{restrict_masks, SimplicialComplex};
use crate::error::{Error, Result};
use crate::graph::{Chordality, Graph, Partition};
use crate::hochster::{betti_table_component_ideal, betti_table_graph, BettiOptions, BettiTable};
use crate::homology::reduced_homology_masks;
use crate::linalg::FieldSpec;
use crate::vertex_set::mask_bits;

/// Largest vertex count for the subset sums in [`betti_complement_chordal`].
pub const COMPONENT_SUM_CAP: usize = 24;

fn require_complement_chordal(g: &Graph) -> Result<Graph> {
    let comp = g.complement();
    match comp.chordality() {
        Chordality::Chordal { .. } => Ok(comp),
        Chordality::NotChordal { witness_cycle } => Err(Error::Precondition(format!(
            "complement is not chordal: induced cycle {witness_cycle:?}"
        ))),
    }
}

fn components_in(adj: &[u64], w: u64) -> usize {
    let mut left = w;
    let mut count = 0;
    while left != 0 {
        let mut frontier = left & left.wrapping_neg();
        let mut seen = frontier;
        while frontier != 0 {
            let mut next = 0;
            for v in mask_bits(frontier) {
                next |= adj[v] & w;
            }
            frontier = next & !seen;
            seen |= next;
        }
        left &= !seen;
        count += 1;
    }
    count
}

/// `β_{j-1,j} = Σ_{|I|=j} (c(Ḡ[I]) - 1)` where `c` counts connected
/// components; all other entries vanish apart from `β_{0,0}`.
pub fn betti_complement_chordal(g: &Graph) -> Result<BettiTable> {
    let comp = require_complement_chordal(g)?;
    let n = g.n();
    if n > COMPONENT_SUM_CAP {
        return Err(Error::CapExceeded {
            what: "vertex count",
            value: n,
            cap: COMPONENT_SUM_CAP,
            cost: format!("the component sum visits 2^{n} subsets"),
        });
    }
    let adj = comp.adjacency_masks()?;
    let mut strand = vec![0u64; n + 1];
    for w in 1u64..1 << n {
        strand[w.count_ones() as usize] += components_in(&adj, w) as u64 - 1;
    }
    let mut entries = BTreeMap::from([((0, 0), 1)]);
    for (j, &b) in strand.iter().enumerate() {
        if b > 0 {
            entries.insert((j - 1, j), b);
        }
    }
    Ok(BettiTable::from_entries(n, entries))
}

/// Maximum number of internally disjoint `s`–`t` paths (unit vertex
/// capacities), by augmenting paths on the split graph.
fn local_connectivity(g: &Graph, s: usize, t: usize) -> usize {
    let n = g.n();
    // vertex v becomes v_in = 2v, v_out = 2v + 1
    let size = 2 * n;
    let mut cap = vec![vec![0i32; size]; size];
    for v in 0..n {
        cap[2 * v][2 * v + 1] = if v == s || v == t { n as i32 } else { 1 };
        for u in g.neighbors(v).iter() {
            cap[2 * v + 1][2 * u] = n as i32;
        }
    }
    let (source, sink) = (2 * s + 1, 2 * t);
    let mut flow = 0;
    loop {
        let mut parent = vec![usize::MAX; size];
        parent[source] = source;
        let mut queue = VecDeque::from([source]);
        while let Some(x) = queue.pop_front() {
            for y in 0..size {
                if parent[y] == usize::MAX && cap[x][y] > 0 {
                    parent[y] = x;
                    queue.push_back(y);
                }
            }
        }
        if parent[sink] == usize::MAX {
            return flow;
        }
        let mut y = sink;
        while y != source {
            let x = parent[y];
            cap[x][y] -= 1;
            cap[y][x] += 1;
            y = x;
        }
        flow += 1;
    }
}

/// Vertex connectivity; `None` for complete graphs.
pub fn vertex_connectivity(g: &Graph) -> Option<usize> {
    let n = g.n();
    let mut best: Option<usize> = None;
    for s in 0..n {
        for t in s + 1..n {
            if !g.has_edge(s, t) {
                let k = local_connectivity(g, s, t);
                best = Some(best.map_or(k, |b| b.min(k)));
            }
        }
    }
    best
}

/// `(pdim, depth)` of `S/I_G` when `Ḡ` is chordal: `pdim = 0` if `Ḡ` is
/// complete and `n - κ(Ḡ) - 1` otherwise.
pub fn pdim_depth_complement_chordal(g: &Graph) -> Result<(usize, usize)> {
    let comp = require_complement_chordal(g)?;
    let n = g.n();
    let pdim = match vertex_connectivity(&comp) {
        None => 0,
        Some(k) => n - k - 1,
    };
    Ok((pdim, n - pdim))
}

/// Linearity of the resolution as predicted by chordality of the complement,
/// with the certificate for that answer.
pub fn froberg_linear(g: &Graph) -> (bool, Chordality) {
    let c = g.complement().chordality();
    (c.is_chordal(), c)
}

fn binomial(a: i64, b: i64) -> BigInt {
    if b < 0 || a < 0 || b > a {
        return BigInt::zero();
    }
    let b = b.min(a - b);
    let mut acc = BigInt::one();
    for k in 0..b {
        acc = acc * BigInt::from(a - k) / BigInt::from(k + 1);
    }
    acc
}

fn to_u64(x: &BigInt) -> Result<u64> {
    if x.is_negative() {
        return Err(Error::Invariant(format!("negative Betti number {x}")));
    }
    x.to_u64()
        .ok_or_else(|| Error::Input(format!("Betti number {x} does not fit in 64 bits")))
}

/// `β_{i,i+1} = Σ_k C(λ_k + k - 1, i) - C(m, i + 1)` for `i ≥ 1`.
pub fn ferrers_betti(lambda: &Partition) -> Result<BettiTable> {
    let parts = lambda.parts();
    let m = parts.len() as i64;
    let n = parts.len() + parts[0];
    let mut entries = BTreeMap::from([((0, 0), 1)]);
    for i in 1..=n as i64 {
        let mut b: BigInt = parts
            .iter()
            .enumerate()
            .map(|(k, &l)| binomial(l as i64 + k as i64, i))
            .sum();
        b -= binomial(m, i + 1);
        let b = to_u64(&b)?;
        if b > 0 {
            entries.insert((i as usize, i as usize + 1), b);
        }
    }
    Ok(BettiTable::from_entries(n, entries))
}

/// Largest `rows + λ₁` for the rectangle enumeration.
pub const RECTANGLE_CAP: usize = 30;

/// Counts `l × w` rectangles in the diagram directly: a set of rows and a
/// set of columns such that every chosen row reaches every chosen column.
/// Each one contributes to `β_{l+w-1, l+w}`.
pub fn ferrers_betti_rectangles(lambda: &Partition) -> Result<BettiTable> {
    let parts = lambda.parts();
    let (m, cols) = (parts.len(), parts[0]);
    if m + cols > RECTANGLE_CAP {
        return Err(Error::CapExceeded {
            what: "rows + columns",
            value: m + cols,
            cap: RECTANGLE_CAP,
            cost: format!("the enumeration visits 2^{} row/column choices", m + cols),
        });
    }
    let mut counts: BTreeMap<(usize, usize), u64> = BTreeMap::from([((0, 0), 1)]);
    for rows in 1u64..1 << m {
        let reach = mask_bits(rows).map(|r| parts[r]).min().expect("nonempty");
        for chosen in 1u64..1 << cols {
            // column c (0-based) is reachable iff c < reach
            if 64 - chosen.leading_zeros() as usize <= reach {
                let size = (rows.count_ones() + chosen.count_ones()) as usize;
                *counts.entry((size - 1, size)).or_insert(0) += 1;
            }
        }
    }
    Ok(BettiTable::from_entries(m + cols, counts))
}

/// The bounds on `pdim S/I` implemented here.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum BoundKind {
    /// `n(1-a) - b - 1`, valid when `H̃_t(Δ[W]) = 0` for all `t ≤ a|W| + b`.
    General { a: BigRational, b: BigRational },
    /// Maximum degree `d ≥ 1`.
    MaxDegree,
    /// Claw-free with maximum degree `d ≥ 1`.
    ClawFree,
    /// Finite induced subgraph of the square lattice.
    Z2Lattice,
    /// The `r`-component ideal, maximum degree `d ≥ 1`.
    Component { r: usize },
}

impl BoundKind {
    pub fn name(&self) -> &'static str {
        match self {
            BoundKind::General { .. } => "general",
            BoundKind::MaxDegree => "max_degree",
            BoundKind::ClawFree => "claw_free",
            BoundKind::Z2Lattice => "z2_lattice",
            BoundKind::Component { .. } => "component",
        }
    }
}

fn rat_string(q: &BigRational) -> String {
    format!("{}/{}", q.numer(), q.denom())
}

fn ser_rat<S: Serializer>(q: &BigRational, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&rat_string(q))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BoundReport {
    pub kind: String,
    pub params: BTreeMap<String, String>,
    #[serde(serialize_with = "ser_rat")]
    pub bound: BigRational,
    /// Set once compared with the oracle.
    pub holds: Option<bool>,
    /// Oracle projective dimension of the quotient ring, when computed.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub pdim: Option<usize>,
}

impl BoundReport {
    /// The bound on the integer `pdim`.
    pub fn floor(&self) -> BigInt {
        self.bound.floor().to_integer()
    }
}

fn rat(p: i64, q: i64) -> BigRational {
    BigRational::new(p.into(), q.into())
}

fn int(n: usize) -> BigRational {
    BigRational::from_integer(n.into())
}

/// `n(1-a) - b - 1`.
fn general_value(n: usize, a: &BigRational, b: &BigRational) -> BigRational {
    int(n) * (BigRational::one() - a) - b - BigRational::one()
}

/// `n(1-c) + c` for the degree-type corollaries.
fn shifted(n: usize, c: BigRational) -> BigRational {
    int(n) * (BigRational::one() - &c) + c
}

/// Evaluates a bound. `d` is required by the degree kinds, ignored otherwise.
pub fn pdim_bound(kind: &BoundKind, n: usize, d: Option<usize>) -> Result<BoundReport> {
    let mut params = BTreeMap::from([("n".to_string(), n.to_string())]);
    let need_d = |d: Option<usize>| match d {
        Some(d) if d >= 1 => Ok(d),
        _ => Err(Error::Precondition(format!(
            "{} bound needs maximum degree d ≥ 1",
            kind.name()
        ))),
    };
    let bound = match kind {
        BoundKind::General { a, b } => {
            if !a.is_positive() {
                return Err(Error::Precondition(format!(
                    "general bound needs a > 0, got {a}"
                )));
            }
            params.insert("a".into(), rat_string(a));
            params.insert("b".into(), rat_string(b));
            general_value(n, a, b)
        }
        BoundKind::MaxDegree => {
            let d = need_d(d)?;
            params.insert("d".into(), d.to_string());
            shifted(n, rat(1, 2 * d as i64))
        }
        BoundKind::ClawFree => {
            let d = need_d(d)?;
            params.insert("d".into(), d.to_string());
            shifted(n, rat(2, 3 * d as i64 + 2))
        }
        BoundKind::Z2Lattice => int(n) * rat(5, 6) + rat(1, 2),
        BoundKind::Component { r } => {
            let d = need_d(d)?;
            if *r < 2 {
                return Err(Error::Precondition(format!(
                    "component bound needs r ≥ 2, got {r}"
                )));
            }
            params.insert("d".into(), d.to_string());
            params.insert("r".into(), r.to_string());
            // D = d - 1 + (d + 1)/(r - 1)
            let big_d = int(d) - BigRational::one() + rat(d as i64 + 1, *r as i64 - 1);
            let c = big_d.recip();
            int(n) * (BigRational::one() - &c) + BigRational::one() + c
        }
    };
    Ok(BoundReport {
        kind: kind.name().to_string(),
        params,
        bound,
        holds: None,
        pdim: None,
    })
}

/// Checks the hypothesis of the general bound on `Ind(G)`: `H̃_t(Ind(G[W]))`
/// vanishes for every `W` and every integer `t ≤ a|W| + b`.
fn general_hypothesis(
    g: &Graph,
    a: &BigRational,
    b: &BigRational,
    field: FieldSpec,
) -> Result<bool> {
    let ind = SimplicialComplex::independence_complex(g)?;
    for w in 0u64..1 << g.n() {
        let limit = (a * int(w.count_ones() as usize) + b).floor().to_integer();
        let h = reduced_homology_masks(&restrict_masks(ind.facet_masks(), w), field);
        for (k, &dim) in h.iter().enumerate() {
            // degree k - 1
            if dim > 0 && BigInt::from(k as i64 - 1) <= limit {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Evaluates the bound for `g`, checks the kind's preconditions, and compares
/// with the projective dimension from the Hochster sweep.
pub fn verify_bound(
    g: &Graph,
    kind: &BoundKind,
    field: FieldSpec,
    opts: &BettiOptions,
) -> Result<BoundReport> {
    let n = g.n();
    let d = Some(g.max_degree());
    match kind {
        BoundKind::ClawFree if !g.is_claw_free() => {
            return Err(Error::Precondition("graph is not claw-free".into()));
        }
        BoundKind::Z2Lattice if g.lattice_points().is_none() => {
            return Err(Error::Precondition(
                "graph carries no lattice coordinates matching its edges".into(),
            ));
        }
        BoundKind::General { a, b } if !general_hypothesis(g, a, b, field)? => {
            return Err(Error::Precondition(
                "homology vanishing hypothesis fails for some induced subgraph".into(),
            ));
        }
        _ => {}
    }
    let mut report = pdim_bound(kind, n, d)?;
    let table = match kind {
        BoundKind::Component { r } => betti_table_component_ideal(g, *r, field, opts)?,
        _ => betti_table_graph(g, field, opts)?,
    };
    let pdim = table.summarize().pdim;
    report.holds = Some(BigInt::from(pdim) <= report.floor());
    report.pdim = Some(pdim);
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::random::{random_chordal_graph, random_graph};
    use proptest::prelude::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn table(n: usize, e: &[((usize, usize), u64)]) -> BettiTable {
        let mut m: BTreeMap<_, _> = e.iter().copied().collect();
        m.insert((0, 0), 1);
        BettiTable::from_entries(n, m)
    }

    fn part(p: &[usize]) -> Partition {
        Partition::new(p.to_vec()).unwrap()
    }

    #[test]
    fn complement_chordal_examples() {
        assert_eq!(
            betti_complement_chordal(&Graph::complete(3)).unwrap(),
            table(3, &[((1, 2), 3), ((2, 3), 2)])
        );
        assert_eq!(
            betti_complement_chordal(&Graph::cycle(4).unwrap()).unwrap(),
            table(4, &[((1, 2), 4), ((2, 3), 4), ((3, 4), 1)])
        );
        assert_eq!(
            betti_complement_chordal(&Graph::complete(2)).unwrap(),
            table(2, &[((1, 2), 1)])
        );
        match betti_complement_chordal(&Graph::cycle(5).unwrap()) {
            Err(Error::Precondition(msg)) => assert!(msg.contains("induced cycle")),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn complete_graph_betti_numbers_are_binomial() {
        // Ḡ empty: c(Ḡ[I]) - 1 = |I| - 1, so β_{i,i+1} = i·C(n, i+1)
        for n in 2..=8usize {
            let t = betti_complement_chordal(&Graph::complete(n)).unwrap();
            for i in 1..n {
                let expect = i as u64 * binomial(n as i64, i as i64 + 1).to_u64().unwrap();
                assert_eq!(t.get(i, i + 1), expect);
            }
        }
    }

    #[test]
    fn pdim_depth_examples() {
        assert_eq!(
            pdim_depth_complement_chordal(&Graph::empty(4)).unwrap(),
            (0, 4)
        );
        assert_eq!(
            pdim_depth_complement_chordal(&Graph::cycle(4).unwrap()).unwrap(),
            (3, 1)
        );
        assert_eq!(
            pdim_depth_complement_chordal(&Graph::complete(3)).unwrap(),
            (2, 1)
        );
    }

    /// Largest vertex set inducing a disconnected subgraph, by brute force.
    fn max_disconnected(h: &Graph) -> Option<usize> {
        let adj = h.adjacency_masks().unwrap();
        (0u64..1 << h.n())
            .filter(|&w| components_in(&adj, w) > 1)
            .map(|w| w.count_ones() as usize)
            .max()
    }

    #[test]
    fn connectivity_matches_disconnected_subsets() {
        let mut rng = ChaCha8Rng::seed_from_u64(51);
        for _ in 0..200 {
            let p = rng.gen_range(0.2..0.95);
            let h = random_graph(&mut rng, 8, p);
            match (vertex_connectivity(&h), max_disconnected(&h)) {
                (None, None) => {}
                (Some(k), Some(m)) => assert_eq!(h.n() - k, m, "{h:?}"),
                other => panic!("{other:?} for {h:?}"),
            }
        }
    }

    #[test]
    fn complement_chordal_against_oracle() {
        let mut rng = ChaCha8Rng::seed_from_u64(52);
        for _ in 0..60 {
            let g = random_chordal_graph(&mut rng, 8).complement();
            let oracle =
                betti_table_graph(&g, FieldSpec::GF2, &BettiOptions::sequential()).unwrap();
            assert_eq!(betti_complement_chordal(&g).unwrap(), oracle);
            let s = oracle.summarize();
            assert_eq!(
                pdim_depth_complement_chordal(&g).unwrap(),
                (s.pdim, s.depth)
            );
        }
    }

    #[test]
    fn froberg_examples() {
        let (lin, cert) = froberg_linear(&Graph::cycle(4).unwrap());
        assert!(lin && cert.verify(&Graph::cycle(4).unwrap().complement()));
        let c5 = Graph::cycle(5).unwrap();
        let (lin, cert) = froberg_linear(&c5);
        assert!(!lin);
        match &cert {
            Chordality::NotChordal { witness_cycle } => assert_eq!(witness_cycle.len(), 5),
            _ => unreachable!(),
        }
        assert!(cert.verify(&c5.complement()));
        for cells in 1..=8 {
            for p in Partition::all_of_size(cells) {
                assert!(froberg_linear(&Graph::ferrers(&p)).0);
            }
        }
    }

    #[test]
    fn ferrers_examples() {
        for i in 1..=4usize {
            assert_eq!(
                ferrers_betti(&part(&[4])).unwrap().get(i, i + 1),
                binomial(4, i as i64).to_u64().unwrap()
            );
        }
        let t21 = table(4, &[((1, 2), 3), ((2, 3), 2)]);
        assert_eq!(ferrers_betti(&part(&[2, 1])).unwrap(), t21);
        assert_eq!(ferrers_betti_rectangles(&part(&[2, 1])).unwrap(), t21);
        let c4 = table(4, &[((1, 2), 4), ((2, 3), 4), ((3, 4), 1)]);
        assert_eq!(ferrers_betti(&part(&[2, 2])).unwrap(), c4);
        assert_eq!(
            ferrers_betti_rectangles(&part(&[1])).unwrap(),
            table(2, &[((1, 2), 1)])
        );
    }

    #[test]
    fn ferrers_formula_matches_rectangles_and_oracle() {
        for cells in 1..=7 {
            for p in Partition::all_of_size(cells) {
                let f = ferrers_betti(&p).unwrap();
                assert_eq!(f, ferrers_betti_rectangles(&p).unwrap(), "{p:?}");
                let g = Graph::ferrers(&p);
                assert_eq!(
                    f,
                    betti_table_graph(&g, FieldSpec::Q, &BettiOptions::sequential()).unwrap()
                );
            }
        }
    }

    proptest! {
        #[test]
        fn ferrers_formula_matches_rectangles_large(parts in proptest::collection::vec(1usize..9, 1..9)) {
            let mut parts = parts;
            parts.sort_unstable_by(|a, b| b.cmp(a));
            let p = Partition::new(parts).unwrap();
            prop_assert_eq!(ferrers_betti(&p).unwrap(), ferrers_betti_rectangles(&p).unwrap());
        }
    }

    #[test]
    fn bound_values() {
        let v = |k: &BoundKind, n, d| rat_string(&pdim_bound(k, n, d).unwrap().bound);
        assert_eq!(v(&BoundKind::MaxDegree, 4, Some(2)), "13/4");
        assert_eq!(v(&BoundKind::MaxDegree, 2, Some(1)), "3/2");
        assert_eq!(v(&BoundKind::Z2Lattice, 6, None), "11/2");
        assert_eq!(v(&BoundKind::ClawFree, 6, Some(2)), "19/4");
        for n in 1..12 {
            for d in 1..5 {
                let md = pdim_bound(&BoundKind::MaxDegree, n, Some(d)).unwrap().bound;
                let c2 = pdim_bound(&BoundKind::Component { r: 2 }, n, Some(d))
                    .unwrap()
                    .bound;
                assert_eq!(c2, md + BigRational::one());
                let a = rat(1, 2 * d as i64);
                let b = -BigRational::one() - &a;
                let gen = pdim_bound(&BoundKind::General { a, b }, n, None)
                    .unwrap()
                    .bound;
                assert_eq!(
                    gen,
                    pdim_bound(&BoundKind::MaxDegree, n, Some(d)).unwrap().bound
                );
            }
        }
        assert!(pdim_bound(&BoundKind::MaxDegree, 3, Some(0)).is_err());
        assert!(pdim_bound(&BoundKind::Component { r: 1 }, 3, Some(2)).is_err());
        let bad = BoundKind::General {
            a: BigRational::zero(),
            b: BigRational::zero(),
        };
        assert!(pdim_bound(&bad, 3, None).is_err());
    }

    #[test]
    fn verify_examples() {
        let opts = BettiOptions::sequential();
        let r = verify_bound(
            &Graph::cycle(4).unwrap(),
            &BoundKind::MaxDegree,
            FieldSpec::GF2,
            &opts,
        )
        .unwrap();
        assert_eq!((r.holds, r.pdim), (Some(true), Some(3)));
        assert_eq!(r.floor(), BigInt::from(3));
        let kk = Graph::complete_bipartite(2, 2);
        let two = Graph::disjoint_union(&kk, &kk);
        let r = verify_bound(&two, &BoundKind::MaxDegree, FieldSpec::GF2, &opts).unwrap();
        assert_eq!(r.holds, Some(true));
        assert_eq!(BigInt::from(r.pdim.unwrap()), r.floor());
        let r = verify_bound(
            &Graph::path(6),
            &BoundKind::MaxDegree,
            FieldSpec::GF2,
            &opts,
        )
        .unwrap();
        assert_eq!(r.holds, Some(true));
        let claw = Graph::complete_bipartite(1, 3);
        assert!(matches!(
            verify_bound(&claw, &BoundKind::ClawFree, FieldSpec::GF2, &opts),
            Err(Error::Precondition(_))
        ));
        assert!(verify_bound(
            &Graph::path(3),
            &BoundKind::Z2Lattice,
            FieldSpec::GF2,
            &opts
        )
        .is_err());
        let grid = Graph::grid_subgraph(&[(0, 0), (0, 1), (1, 0), (1, 1), (2, 1)]).unwrap();
        let r = verify_bound(&grid, &BoundKind::Z2Lattice, FieldSpec::GF2, &opts).unwrap();
        assert_eq!(r.holds, Some(true));
        let json = serde_json::to_value(&r).unwrap();
        assert_eq!(json["bound"], "14/3");
        assert_eq!(json["kind"], "z2_lattice");
    }

    #[test]
    fn general_bound_hypothesis_is_checked() {
        let opts = BettiOptions::sequential();
        // C5: H̃₁ of the pentagon at |W| = 5 breaks t ≤ |W|/2 - 1
        let kind = BoundKind::General {
            a: rat(1, 2),
            b: rat(-1, 1),
        };
        assert!(verify_bound(&Graph::cycle(5).unwrap(), &kind, FieldSpec::GF2, &opts).is_err());
        let kind = BoundKind::General {
            a: rat(1, 4),
            b: rat(-3, 2),
        };
        let r = verify_bound(&Graph::cycle(5).unwrap(), &kind, FieldSpec::GF2, &opts).unwrap();
        assert_eq!(r.holds, Some(true));
    }
}
