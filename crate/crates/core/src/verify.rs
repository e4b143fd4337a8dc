//! Cross-checks between the Hochster sweep, the closed forms, the reduction
//! calculus and the classifiers, on exhaustive and seeded random families.
//!
//! Each runner returns a [`CriterionReport`]; a report passes when no
//! mismatch was recorded. Library errors (cap refusals, bad input) propagate
//! as `Err` instead of being counted.

use std::collections::BTreeSet;
use std::fmt;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::classify::{
    is_cohen_macaulay, is_sequentially_cm, is_vertex_decomposable, is_vertex_decomposable_graph,
    replay_vd_witness,
};
use crate::complex::SimplicialComplex;
use crate::error::Result;
use crate::formulas::{
    betti_complement_chordal, ferrers_betti, ferrers_betti_rectangles, froberg_linear,
    pdim_depth_complement_chordal, verify_bound, BoundKind,
};
use crate::genfun::{
    field_independence_probe, genfun_forest, genfun_forest_with, genfun_oracle,
    reduce_dominated_set, reduce_isolated_edge, reduce_isolated_vertex, reduce_leaf,
    reg_pdim_forest, LeafRule,
};
use crate::graph::{Chordality, Graph, Partition};
use crate::hochster::{betti_table_graph, BettiOptions, BettiTable};
use crate::linalg::{rank, FieldSpec};
use crate::random::{
    random_bounded_degree_graph, random_chordal_graph, random_complex, random_forest, random_graph,
};
use crate::vertex_set::VertexSet;

const MAX_RECORDED: usize = 20;

const ALL_FIELDS: [FieldSpec; 4] = [
    FieldSpec::GF2,
    FieldSpec::GF3,
    FieldSpec::Prime(5),
    FieldSpec::Q,
];
const GF2_Q: [FieldSpec; 2] = [FieldSpec::GF2, FieldSpec::Q];

#[derive(Clone, Debug)]
pub struct VerifyConfig {
    pub seed: u64,
    pub opts: BettiOptions,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        VerifyConfig {
            seed: 20080,
            opts: BettiOptions::from_env(),
        }
    }
}

impl VerifyConfig {
    fn rng(&self, salt: u64) -> ChaCha8Rng {
        ChaCha8Rng::seed_from_u64(self.seed.wrapping_mul(0x9e37_79b9_7f4a_7c15) ^ salt)
    }
}

#[derive(Clone, Debug, serde::Serialize)]
pub struct CriterionReport {
    pub id: u8,
    pub name: &'static str,
    pub checked: usize,
    pub mismatch_count: usize,
    /// The first few mismatches, described.
    pub mismatches: Vec<String>,
    pub notes: Vec<String>,
}

impl CriterionReport {
    fn new(id: u8, name: &'static str) -> Self {
        CriterionReport {
            id,
            name,
            checked: 0,
            mismatch_count: 0,
            mismatches: Vec::new(),
            notes: Vec::new(),
        }
    }

    fn check(&mut self, ok: bool, detail: impl FnOnce() -> String) {
        self.checked += 1;
        if !ok {
            self.mismatch_count += 1;
            if self.mismatches.len() < MAX_RECORDED {
                self.mismatches.push(detail());
            }
        }
    }

    fn note(&mut self, s: impl Into<String>) {
        self.notes.push(s.into());
    }

    pub fn passed(&self) -> bool {
        self.mismatch_count == 0 && self.checked > 0
    }
}

impl fmt::Display for CriterionReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let status = if self.passed() { "OK" } else { "FAIL" };
        write!(
            f,
            "[{:>2}] {}: {status}: {} mismatches in {} checks",
            self.id, self.name, self.mismatch_count, self.checked
        )?;
        for n in &self.notes {
            write!(f, "\n     note: {n}")?;
        }
        for m in &self.mismatches {
            write!(f, "\n     mismatch: {m}")?;
        }
        Ok(())
    }
}

// ---------------------------------------------------------------------------
// graph corpora

fn pair_index(a: usize, b: usize) -> u32 {
    // graph6 column order: (0,1), (0,2), (1,2), (0,3), ...
    let (a, b) = if a < b { (a, b) } else { (b, a) };
    (b * (b - 1) / 2 + a) as u32
}

/// Least edge code over all relabellings; two graphs on `n ≤ 11` vertices
/// are isomorphic iff their codes agree. Cost is `n!`, meant for `n ≤ 8`.
pub fn canonical_code(g: &Graph) -> u64 {
    let n = g.n();
    assert!(n <= 11, "canonical_code is exhaustive over n! relabellings");
    let edges = g.edges();
    let code = |perm: &[usize]| -> u64 {
        edges
            .iter()
            .fold(0u64, |c, &(u, v)| c | 1 << pair_index(perm[u], perm[v]))
    };
    let mut perm: Vec<usize> = (0..n).collect();
    let mut best = code(&perm);
    // Heap's algorithm
    let mut c = vec![0usize; n];
    let mut i = 0;
    while i < n {
        if c[i] < i {
            if i % 2 == 0 {
                perm.swap(0, i);
            } else {
                perm.swap(c[i], i);
            }
            best = best.min(code(&perm));
            c[i] += 1;
            i = 0;
        } else {
            c[i] = 0;
            i += 1;
        }
    }
    best
}

fn graph_from_code(n: usize, code: u64) -> Graph {
    let mut edges = Vec::new();
    for b in 1..n {
        for a in 0..b {
            if code >> pair_index(a, b) & 1 == 1 {
                edges.push((a, b));
            }
        }
    }
    Graph::from_edges(n, edges).expect("code describes a simple graph")
}

/// One representative per isomorphism class on `n` vertices, each in its
/// canonical labelling, sorted by canonical code. Built by adding a vertex to
/// the classes on `n - 1` vertices in every possible way.
pub fn isomorphism_classes(n: usize) -> Vec<Graph> {
    let mut codes: BTreeSet<u64> = BTreeSet::from([0]);
    for k in 1..=n {
        let prev: Vec<Graph> = codes.iter().map(|&c| graph_from_code(k - 1, c)).collect();
        let mut next = BTreeSet::new();
        for h in &prev {
            for nbrs in 0u64..1 << (k - 1) {
                let mut edges = h.edges();
                edges.extend(VertexSet::from_mask(nbrs).iter().map(|u| (u, k - 1)));
                next.insert(canonical_code(&Graph::from_edges(k, edges).expect("valid")));
            }
        }
        codes = next;
    }
    codes.into_iter().map(|c| graph_from_code(n, c)).collect()
}

/// Every labelled graph on `n` vertices (`2^(n choose 2)` of them).
pub fn labeled_graphs(n: usize) -> impl Iterator<Item = Graph> {
    let pairs = n * n.saturating_sub(1) / 2;
    (0u64..1 << pairs).map(move |code| graph_from_code(n, code))
}

/// Number of graphs on `n` vertices up to isomorphism, `n = 0..=8`.
pub const CLASS_COUNTS: [usize; 9] = [1, 1, 2, 4, 11, 34, 156, 1044, 12346];

fn line_graph(h: &Graph) -> Graph {
    let edges = h.edges();
    let mut out = Vec::new();
    for (i, &(a, b)) in edges.iter().enumerate() {
        for (j, &(c, d)) in edges.iter().enumerate().skip(i + 1) {
            if a == c || a == d || b == c || b == d {
                out.push((i, j));
            }
        }
    }
    Graph::from_edges(edges.len(), out).expect("valid")
}

fn ind(g: &Graph) -> Result<SimplicialComplex> {
    SimplicialComplex::independence_complex(g)
}

fn oracle(g: &Graph, field: FieldSpec, cfg: &VerifyConfig) -> Result<BettiTable> {
    betti_table_graph(g, field, &cfg.opts)
}

// ---------------------------------------------------------------------------
// 1. Ferrers graphs

pub fn ferrers(
    cfg: &VerifyConfig,
    max_cells: usize,
    random_max_cells: usize,
    random_samples: usize,
) -> Result<CriterionReport> {
    let mut rep = CriterionReport::new(1, "Ferrers formula = rectangles = oracle");
    let mut partitions: Vec<Partition> = (1..=max_cells).flat_map(Partition::all_of_size).collect();
    let exhaustive = partitions.len();
    let mut rng = cfg.rng(1);
    if random_max_cells > max_cells {
        for _ in 0..random_samples {
            let cells = rng.gen_range(max_cells + 1..=random_max_cells);
            let all = Partition::all_of_size(cells);
            partitions.push(all.choose(&mut rng).expect("nonempty").clone());
        }
    }
    for p in &partitions {
        let formula = ferrers_betti(p)?;
        let rect = ferrers_betti_rectangles(p)?;
        rep.check(formula == rect, || {
            format!(
                "{:?}: formula {formula:?} vs rectangles {rect:?}",
                p.parts()
            )
        });
        let g = Graph::ferrers(p);
        for f in GF2_Q {
            let o = oracle(&g, f, cfg)?;
            rep.check(formula == o, || {
                format!(
                    "{:?} over {f}: formula {formula:?} vs oracle {o:?}",
                    p.parts()
                )
            });
        }
    }
    rep.note(format!(
        "{exhaustive} partitions with at most {max_cells} cells, {} random ones up to {random_max_cells} cells",
        partitions.len() - exhaustive
    ));
    Ok(rep)
}

// ---------------------------------------------------------------------------
// 2. Linear resolutions and chordal complements

fn froberg_check(rep: &mut CriterionReport, g: &Graph, cfg: &VerifyConfig) -> Result<()> {
    let table = oracle(g, FieldSpec::GF2, cfg)?;
    let linear = table.summarize().linear;
    let (predicted, cert) = froberg_linear(g);
    let comp = g.complement();
    rep.check(cert.verify(&comp), || {
        format!("{g:?}: chordality certificate does not verify")
    });
    rep.check(linear == predicted, || {
        format!("{g:?}: oracle linear = {linear}, complement chordal = {predicted}")
    });
    if let Chordality::NotChordal { witness_cycle } = &cert {
        // an induced j-cycle in the complement forces β_{j-2,j} ≠ 0
        let j = witness_cycle.len();
        rep.check(table.get(j - 2, j) > 0, || {
            format!(
                "{g:?}: complement has induced C{j} but β_{{{},{j}}} = 0",
                j - 2
            )
        });
    }
    Ok(())
}

/// Exhaustive over labelled graphs up to `labeled_max_n` vertices and over
/// isomorphism classes on `iso_n` vertices.
pub fn froberg(cfg: &VerifyConfig, labeled_max_n: usize, iso_n: usize) -> Result<CriterionReport> {
    let mut rep = CriterionReport::new(2, "linear resolution iff chordal complement");
    let mut graphs = 0usize;
    for n in 0..=labeled_max_n {
        for g in labeled_graphs(n) {
            froberg_check(&mut rep, &g, cfg)?;
            graphs += 1;
        }
    }
    let classes = isomorphism_classes(iso_n);
    if let Some(&known) = CLASS_COUNTS.get(iso_n) {
        rep.check(classes.len() == known, || {
            format!(
                "{} isomorphism classes on {iso_n} vertices, expected {known}",
                classes.len()
            )
        });
    }
    for g in &classes {
        froberg_check(&mut rep, g, cfg)?;
    }
    rep.note(format!(
        "{graphs} labelled graphs on at most {labeled_max_n} vertices, {} isomorphism classes on {iso_n}",
        classes.len()
    ));
    Ok(rep)
}

/// The same check over a supplied corpus (e.g. a graph6 file).
pub fn froberg_on(cfg: &VerifyConfig, graphs: &[Graph]) -> Result<CriterionReport> {
    let mut rep = CriterionReport::new(2, "linear resolution iff chordal complement");
    for g in graphs {
        froberg_check(&mut rep, g, cfg)?;
    }
    rep.note(format!("{} graphs from the corpus", graphs.len()));
    Ok(rep)
}

// ---------------------------------------------------------------------------
// 3. Complement-chordal Betti numbers

pub fn complement_chordal(
    cfg: &VerifyConfig,
    samples: usize,
    max_n: usize,
) -> Result<CriterionReport> {
    let mut rep = CriterionReport::new(3, "complement-chordal Betti numbers and pdim/depth");
    let mut rng = cfg.rng(3);
    for _ in 0..samples {
        let n = rng.gen_range(1..=max_n);
        let g = random_chordal_graph(&mut rng, n).complement();
        let formula = betti_complement_chordal(&g)?;
        let (pdim, depth) = pdim_depth_complement_chordal(&g)?;
        for f in [FieldSpec::GF2, FieldSpec::GF3, FieldSpec::Q] {
            let o = oracle(&g, f, cfg)?;
            rep.check(formula == o, || {
                format!("{g:?} over {f}: formula {formula:?} vs oracle {o:?}")
            });
            let s = o.summarize();
            rep.check((pdim, depth) == (s.pdim, s.depth), || {
                format!(
                    "{g:?} over {f}: (pdim, depth) = ({pdim}, {depth}) vs oracle ({}, {})",
                    s.pdim, s.depth
                )
            });
        }
    }
    Ok(rep)
}

// ---------------------------------------------------------------------------
// 4. Chordal graphs are vertex decomposable

fn vd_check(rep: &mut CriterionReport, g: &Graph) -> Result<()> {
    let r = is_vertex_decomposable_graph(g)?;
    let replayed = match &r.witness {
        Some(w) => replay_vd_witness(&ind(g)?, w),
        None => false,
    };
    rep.check(r.decomposable && replayed, || {
        format!("{g:?}: Ind(G) not shown vertex decomposable")
    });
    Ok(())
}

pub fn chordal_vd(
    cfg: &VerifyConfig,
    exhaustive_n: usize,
    samples: usize,
    max_n: usize,
) -> Result<CriterionReport> {
    let mut rep = CriterionReport::new(4, "chordal graphs have vertex decomposable Ind(G)");
    let mut exhaustive = 0;
    for n in 0..=exhaustive_n {
        for g in isomorphism_classes(n).into_iter().filter(Graph::is_chordal) {
            vd_check(&mut rep, &g)?;
            exhaustive += 1;
        }
    }
    let mut rng = cfg.rng(4);
    for _ in 0..samples {
        let n = rng.gen_range(1..=max_n);
        let g = random_chordal_graph(&mut rng, n);
        vd_check(&mut rep, &g)?;
    }
    rep.note(format!(
        "{exhaustive} chordal isomorphism classes on at most {exhaustive_n} vertices, {samples} random up to {max_n}"
    ));
    Ok(rep)
}

// ---------------------------------------------------------------------------
// 5. Whiskers

pub fn whiskers(
    cfg: &VerifyConfig,
    max_n: usize,
    samples: usize,
    negative_samples: usize,
    negative_max_n: usize,
) -> Result<CriterionReport> {
    let mut rep = CriterionReport::new(5, "whiskered graphs: pure, VD, CM; non-SCM persists");
    let mut rng = cfg.rng(5);
    let mut graphs: Vec<Graph> = (0..=max_n).flat_map(isomorphism_classes).collect();
    let classes = graphs.len();
    for _ in 0..samples {
        let n = rng.gen_range(1..=max_n);
        let p = rng.gen_range(0.1..0.9);
        graphs.push(random_graph(&mut rng, n, p));
    }
    for g in &graphs {
        let w = g.whisker_all();
        let c = ind(&w)?;
        rep.check(c.is_pure(), || format!("{g:?}: Ind(W(G)) not pure"));
        let vd = is_vertex_decomposable_graph(&w)?;
        rep.check(vd.decomposable, || format!("{g:?}: Ind(W(G)) not VD"));
        for f in [FieldSpec::GF2, FieldSpec::GF3] {
            rep.check(is_cohen_macaulay(&c, f), || {
                format!("{g:?}: Ind(W(G)) not CM over {f}")
            });
        }
    }
    rep.note(format!(
        "{classes} isomorphism classes on at most {max_n} vertices plus {samples} random graphs"
    ));

    let mut found = 0;
    let mut attempts = 0;
    while found < negative_samples && attempts < 200 * negative_samples.max(1) {
        attempts += 1;
        let n = rng.gen_range(2..=negative_max_n);
        let g = {
            let a = n;
            let b = rng.gen_range(0.3..0.7);
            random_graph(&mut rng, a, b)
        };
        let s: VertexSet = (0..n).filter(|_| rng.gen_bool(0.3)).collect();
        let rest = g.remove_vertices(&s)?.0;
        if is_sequentially_cm(&ind(&rest)?, FieldSpec::GF2) {
            continue;
        }
        found += 1;
        let w = g.whisker(&s)?;
        rep.check(!is_sequentially_cm(&ind(&w)?, FieldSpec::GF2), || {
            format!("{g:?} with S = {s:?}: G∖S not SCM but the whiskered graph is")
        });
    }
    rep.check(found == negative_samples, || {
        format!("only {found} of {negative_samples} pairs with G∖S not SCM found in {attempts} attempts")
    });
    rep.note(format!(
        "{found} pairs (G, S) with G∖S not sequentially CM over GF(2)"
    ));
    Ok(rep)
}

// ---------------------------------------------------------------------------
// 6. Ears on cycles

pub fn ears(_cfg: &VerifyConfig, r_max: usize) -> Result<CriterionReport> {
    let mut rep = CriterionReport::new(6, "cycles with an ear are vertex decomposable");
    for r in 3..=r_max {
        let g = Graph::cycle(r)?.add_ear(0, 1)?;
        let c = ind(&g)?;
        let vd = is_vertex_decomposable_graph(&g)?;
        rep.check(vd.decomposable, || format!("C{r} with an ear: Ind not VD"));
        let status: Vec<String> = [FieldSpec::GF2, FieldSpec::GF3, FieldSpec::Q]
            .iter()
            .map(|&f| {
                format!(
                    "{f}: CM={} SCM={}",
                    is_cohen_macaulay(&c, f),
                    is_sequentially_cm(&c, f)
                )
            })
            .collect();
        rep.note(format!(
            "r = {r}: pure={} {}",
            c.is_pure(),
            status.join(", ")
        ));
    }
    Ok(rep)
}

// ---------------------------------------------------------------------------
// 7. Golden tables

pub fn golden(cfg: &VerifyConfig) -> Result<CriterionReport> {
    let mut rep = CriterionReport::new(7, "golden Betti tables");
    let cases: Vec<(&str, Graph, Vec<((usize, usize), u64)>)> = vec![
        ("K2", Graph::complete(2), vec![((1, 2), 1)]),
        ("P3", Graph::path(3), vec![((1, 2), 2), ((2, 3), 1)]),
        (
            "C4",
            Graph::cycle(4)?,
            vec![((1, 2), 4), ((2, 3), 4), ((3, 4), 1)],
        ),
        (
            "C5",
            Graph::cycle(5)?,
            vec![((1, 2), 5), ((2, 3), 5), ((3, 5), 1)],
        ),
        ("K3", Graph::complete(3), vec![((1, 2), 3), ((2, 3), 2)]),
    ];
    for (name, g, entries) in cases {
        let mut expected = std::collections::BTreeMap::from([((0, 0), 1)]);
        expected.extend(entries);
        let expected = BettiTable::from_entries(g.n(), expected);
        for f in ALL_FIELDS {
            let o = oracle(&g, f, cfg)?;
            rep.check(o == expected, || format!("{name} over {f}: got {o:?}"));
        }
    }
    Ok(rep)
}

// ---------------------------------------------------------------------------
// 8. Generating-function calculus

fn random_with_isolated_vertex(rng: &mut ChaCha8Rng, max_n: usize) -> (Graph, usize) {
    let n = rng.gen_range(1..=max_n);
    let g = {
        let a = n;
        let b = rng.gen_range(0.2..0.7);
        random_graph(rng, a, b)
    };
    let v = rng.gen_range(0..n);
    let edges = g.edges().into_iter().filter(|&(a, b)| a != v && b != v);
    (Graph::from_edges(n, edges).expect("valid"), v)
}

fn random_with_isolated_edge(rng: &mut ChaCha8Rng, max_n: usize) -> (Graph, usize, usize) {
    let n = rng.gen_range(2..=max_n);
    let g = {
        let a = n;
        let b = rng.gen_range(0.2..0.7);
        random_graph(rng, a, b)
    };
    let mut vs: Vec<usize> = (0..n).collect();
    vs.shuffle(rng);
    let (u, v) = (vs[0], vs[1]);
    let mut edges: Vec<_> = g
        .edges()
        .into_iter()
        .filter(|&(a, b)| a != u && b != u && a != v && b != v)
        .collect();
    edges.push((u, v));
    (Graph::from_edges(n, edges).expect("valid"), u, v)
}

fn random_with_dominated_set(rng: &mut ChaCha8Rng, max_n: usize) -> (Graph, usize, VertexSet) {
    loop {
        let n = rng.gen_range(2..=max_n);
        let g = {
            let a = n;
            let b = rng.gen_range(0.2..0.6);
            random_graph(rng, a, b)
        };
        let v = rng.gen_range(0..n);
        let closed = g.neighborhood(v, true).expect("in range");
        let candidates: Vec<usize> = (0..n).filter(|&u| !closed.contains(u)).collect();
        if candidates.is_empty() {
            continue;
        }
        let mut u: VertexSet = candidates
            .iter()
            .copied()
            .filter(|_| rng.gen_bool(0.5))
            .collect();
        if u.is_empty() {
            u.insert(*candidates.choose(rng).expect("nonempty"));
        }
        // give every member of U the neighbours of v
        let mut edges = g.edges();
        for x in u.iter() {
            for y in g.neighbors(v).iter() {
                if x != y && !g.has_edge(x, y) {
                    edges.push((x.min(y), x.max(y)));
                }
            }
        }
        edges.sort_unstable();
        edges.dedup();
        return (Graph::from_edges(n, edges).expect("valid"), v, u);
    }
}

fn random_with_leaf(rng: &mut ChaCha8Rng, max_n: usize) -> (Graph, usize) {
    let n = rng.gen_range(2..=max_n);
    let g = {
        let a = n;
        let b = rng.gen_range(0.2..0.7);
        random_graph(rng, a, b)
    };
    let mut vs: Vec<usize> = (0..n).collect();
    vs.shuffle(rng);
    let (v, w) = (vs[0], vs[1]);
    let mut edges: Vec<_> = g
        .edges()
        .into_iter()
        .filter(|&(a, b)| a != v && b != v)
        .collect();
    edges.push((v.min(w), v.max(w)));
    (Graph::from_edges(n, edges).expect("valid"), v)
}

pub fn genfun(
    cfg: &VerifyConfig,
    samples: usize,
    max_n: usize,
    forest_samples: usize,
    forest_max_n: usize,
) -> Result<CriterionReport> {
    let mut rep = CriterionReport::new(8, "generating-function reductions and forest recursions");
    let mut rng = cfg.rng(8);
    for f in GF2_Q {
        let mut eval = |h: &Graph| genfun_oracle(h, f, &cfg.opts);
        for _ in 0..samples {
            let (g, v) = random_with_isolated_vertex(&mut rng, max_n);
            let lhs = genfun_oracle(&g, f, &cfg.opts)?;
            let rhs = reduce_isolated_vertex(&g, v, &mut eval)?;
            rep.check(lhs == rhs, || {
                format!("isolated vertex {v} in {g:?} over {f}: {lhs} vs {rhs}")
            });

            let (g, u, v) = random_with_isolated_edge(&mut rng, max_n);
            let lhs = genfun_oracle(&g, f, &cfg.opts)?;
            let rhs = reduce_isolated_edge(&g, u, v, &mut eval)?;
            rep.check(lhs == rhs, || {
                format!("isolated edge {u}{v} in {g:?} over {f}: {lhs} vs {rhs}")
            });

            let (g, v, us) = random_with_dominated_set(&mut rng, max_n);
            let lhs = genfun_oracle(&g, f, &cfg.opts)?;
            let rhs = reduce_dominated_set(&g, v, &us, &mut eval)?;
            rep.check(lhs == rhs, || {
                format!("v = {v}, U = {us:?} in {g:?} over {f}: {lhs} vs {rhs}")
            });

            let (g, v) = random_with_leaf(&mut rng, max_n);
            let lhs = genfun_oracle(&g, f, &cfg.opts)?;
            let rhs = reduce_leaf(&g, v, &mut eval)?;
            rep.check(lhs == rhs, || {
                format!("leaf {v} in {g:?} over {f}: {lhs} vs {rhs}")
            });
        }
    }
    for _ in 0..forest_samples {
        let n = rng.gen_range(1..=forest_max_n);
        let g = random_forest(&mut rng, n);
        let poly = genfun_forest(&g)?;
        let other = genfun_forest_with(&g, LeafRule::Last)?;
        rep.check(poly == other, || {
            format!("{g:?}: leaf rules disagree: {poly} vs {other}")
        });
        rep.check(poly.is_nonnegative(), || {
            format!("{g:?}: negative coefficient in {poly}")
        });
        for f in GF2_Q {
            let o = genfun_oracle(&g, f, &cfg.opts)?;
            rep.check(poly == o, || {
                format!("{g:?} over {f}: recursion {poly} vs oracle {o}")
            });
        }
        let (reg, pdim) = reg_pdim_forest(&g)?;
        rep.check(
            (Some(reg as u32), Some(pdim as u32)) == (poly.x_degree(), poly.y_degree()),
            || format!("{g:?}: recursions give (reg, pdim) = ({reg}, {pdim}) for {poly}"),
        );
        let stable = field_independence_probe(&g, &[2, 3], &cfg.opts)?;
        rep.check(stable, || {
            format!("{g:?}: Betti numbers depend on the field")
        });
    }
    rep.note(format!(
        "{samples} random graphs per rule and field (n ≤ {max_n}), {forest_samples} forests (n ≤ {forest_max_n})"
    ));
    Ok(rep)
}

// ---------------------------------------------------------------------------
// 9. Projective dimension bounds

fn random_claw_free(rng: &mut ChaCha8Rng, max_n: usize) -> Graph {
    loop {
        if rng.gen_bool(0.5) {
            let h = {
                let a = rng.gen_range(3..=7);
                let b = rng.gen_range(0.2..0.6);
                random_graph(rng, a, b)
            };
            let l = line_graph(&h);
            if (1..=max_n).contains(&l.n()) && l.max_degree() >= 1 {
                return l;
            }
        } else {
            let g = {
                let a = rng.gen_range(2..=max_n);
                let b = rng.gen_range(0.3..0.9);
                random_graph(rng, a, b)
            };
            if g.is_claw_free() && g.max_degree() >= 1 {
                return g;
            }
        }
    }
}

fn random_lattice_graph(rng: &mut ChaCha8Rng, max_n: usize) -> Result<Graph> {
    let mut pts: Vec<(i64, i64)> = (0..4).flat_map(|x| (0..4).map(move |y| (x, y))).collect();
    pts.shuffle(rng);
    pts.truncate(rng.gen_range(1..=max_n));
    Graph::grid_subgraph(&pts)
}

fn random_with_edges(rng: &mut ChaCha8Rng, min_n: usize, max_n: usize) -> Graph {
    loop {
        let n = rng.gen_range(min_n..=max_n);
        let g = if rng.gen_bool(0.5) {
            {
                let a = n;
                let b = rng.gen_range(0.1..0.6);
                random_graph(rng, a, b)
            }
        } else {
            {
                let a = n;
                let b = rng.gen_range(1..=4);
                random_bounded_degree_graph(rng, a, b)
            }
        };
        if g.max_degree() >= 1 {
            return g;
        }
    }
}

pub fn bounds(
    cfg: &VerifyConfig,
    samples: usize,
    max_n: usize,
    component_max_n: usize,
) -> Result<CriterionReport> {
    let mut rep = CriterionReport::new(9, "projective dimension bounds");
    let mut rng = cfg.rng(9);
    let record = |rep: &mut CriterionReport, g: &Graph, kind: &BoundKind| -> Result<()> {
        let r = verify_bound(g, kind, FieldSpec::GF2, &cfg.opts)?;
        rep.check(r.holds == Some(true), || {
            format!(
                "{g:?} {}: pdim {:?} exceeds bound {}",
                kind.name(),
                r.pdim,
                r.bound
            )
        });
        Ok(())
    };
    for _ in 0..samples {
        let g = random_with_edges(&mut rng, 2, max_n);
        record(&mut rep, &g, &BoundKind::MaxDegree)?;
        let g = random_claw_free(&mut rng, max_n);
        record(&mut rep, &g, &BoundKind::ClawFree)?;
        let g = random_lattice_graph(&mut rng, max_n)?;
        record(&mut rep, &g, &BoundKind::Z2Lattice)?;
        let g = random_with_edges(&mut rng, 3, component_max_n);
        record(&mut rep, &g, &BoundKind::Component { r: 3 })?;
    }
    // disjoint copies of K_{d,d} meet the maximum-degree bound
    let mut tight = Vec::new();
    for d in 1..=3usize {
        for t in 1..=6usize {
            if 2 * d * t > 12 {
                break;
            }
            let kdd = Graph::complete_bipartite(d, d);
            let g = (1..t).fold(kdd.clone(), |acc, _| Graph::disjoint_union(&acc, &kdd));
            let r = verify_bound(&g, &BoundKind::MaxDegree, FieldSpec::GF2, &cfg.opts)?;
            let floor = r.floor();
            rep.check(
                r.pdim.map(num_bigint::BigInt::from) == Some(floor.clone()),
                || {
                    format!(
                        "{t}·K_{{{d},{d}}}: pdim {:?} but bound floor {floor}",
                        r.pdim
                    )
                },
            );
            tight.push(format!("{t}K{d},{d}"));
        }
    }
    rep.note(format!(
        "{samples} random graphs per kind; tight family: {}",
        tight.join(" ")
    ));
    Ok(rep)
}

// ---------------------------------------------------------------------------
// 10. Skeletons of independence complexes

/// Faces of dimension at most `k` (so of at most `k + 1` vertices), for every
/// integer `k` with `-1 ≤ k < n/(2d)`.
pub fn skeleton(cfg: &VerifyConfig, samples: usize, max_n: usize) -> Result<CriterionReport> {
    let mut rep = CriterionReport::new(10, "low skeletons of Ind(G) are pure and VD");
    let mut rng = cfg.rng(10);
    let mut skeletons = 0;
    for _ in 0..samples {
        let g = random_with_edges(&mut rng, 2, max_n);
        let (n, d) = (g.n() as isize, g.max_degree() as isize);
        let c = ind(&g)?;
        let mut k = -1;
        while 2 * d * k < n {
            let s = c.skeleton(k)?;
            rep.check(s.is_pure(), || {
                format!("{g:?}: skeleton of dimension {k} not pure")
            });
            let vd = is_vertex_decomposable(&s);
            let ok = vd
                .witness
                .as_ref()
                .is_some_and(|w| replay_vd_witness(&s, w));
            rep.check(ok, || format!("{g:?}: skeleton of dimension {k} not VD"));
            skeletons += 1;
            k += 1;
        }
    }
    rep.note(format!(
        "{skeletons} skeletons (dimension convention) from {samples} graphs"
    ));
    Ok(rep)
}

// ---------------------------------------------------------------------------
// 11. Homology engine

fn boundary_squares_to_zero(c: &SimplicialComplex) -> bool {
    let Some(dim) = c.dim() else {
        return true;
    };
    (1..=dim).all(|d| {
        let outer = c.boundary_matrix(d - 1);
        let inner = c.boundary_matrix(d);
        outer.iter().all(|row| {
            (0..inner.first().map_or(0, Vec::len))
                .all(|col| row.iter().zip(&inner).map(|(a, r)| a * r[col]).sum::<i64>() == 0)
        })
    })
}

fn reduced_euler(c: &SimplicialComplex) -> i64 {
    let Some(dim) = c.dim() else {
        return 0;
    };
    (-1..=dim)
        .map(|d| {
            let sign = if d.rem_euclid(2) == 0 { 1 } else { -1 };
            sign * c.faces_of_dim(d).len() as i64
        })
        .sum()
}

pub fn engine(cfg: &VerifyConfig, random_complexes: usize) -> Result<CriterionReport> {
    let mut rep = CriterionReport::new(11, "homology engine sanity");
    let mut rng = cfg.rng(11);
    let mut complexes: Vec<(String, SimplicialComplex)> = vec![
        ("RP2".into(), SimplicialComplex::real_projective_plane()),
        ("simplex(4)".into(), SimplicialComplex::simplex(4)),
    ];
    let named: Vec<(&str, Graph)> = vec![
        ("C5", Graph::cycle(5)?),
        ("C5+ear", Graph::cycle(5)?.add_ear(0, 1)?),
        ("W(K3)", Graph::complete(3).whisker_all()),
        (
            "Ferrers(3,2,1)",
            Graph::ferrers(&Partition::new(vec![3, 2, 1])?),
        ),
        ("K3,3", Graph::complete_bipartite(3, 3)),
        (
            "grid",
            Graph::grid_subgraph(&[(0, 0), (0, 1), (1, 0), (1, 1), (2, 0), (2, 1)])?,
        ),
    ];
    for (name, g) in named {
        complexes.push((format!("Ind({name})"), ind(&g)?));
        complexes.push((
            format!("Cl({name})"),
            SimplicialComplex::clique_complex(&g)?,
        ));
    }
    for _ in 0..random_complexes {
        let ground = rng.gen_range(1..=7);
        let facets = rng.gen_range(1..=7);
        complexes.push(("random".into(), random_complex(&mut rng, ground, facets)));
    }
    for (name, c) in &complexes {
        rep.check(boundary_squares_to_zero(c), || {
            format!("{name} {c:?}: ∂∘∂ ≠ 0")
        });
        let chi = reduced_euler(c);
        for f in [FieldSpec::GF2, FieldSpec::GF3, FieldSpec::Q] {
            let h = c.reduced_homology(f);
            let alt: i64 = h
                .nonzero()
                .map(|(d, x)| {
                    if d.rem_euclid(2) == 0 {
                        x as i64
                    } else {
                        -(x as i64)
                    }
                })
                .sum();
            rep.check(chi == alt, || {
                format!("{name} {c:?} over {f}: χ̃ = {chi} but homology gives {alt}")
            });
        }
    }
    let rp2 = SimplicialComplex::real_projective_plane();
    let h2 = rp2.reduced_homology(FieldSpec::GF2);
    let hq = rp2.reduced_homology(FieldSpec::Q);
    rep.check(h2.get(1) == 1 && h2.get(2) == 1, || {
        format!("RP2 over GF(2): {h2:?}")
    });
    rep.check(hq.is_acyclic(), || format!("RP2 over Q: {hq:?}"));
    rep.check(!rp2.torsion_probe(&[2, 3])?, || {
        "torsion probe misses RP2".into()
    });
    // the characteristic shows up in plain matrix rank as well
    let two_id = vec![vec![2, 0], vec![0, 2]];
    rep.check(
        rank(&two_id, FieldSpec::GF2) == 0 && rank(&two_id, FieldSpec::Q) == 2,
        || "rank of 2·I".into(),
    );
    rep.note(format!("{} complexes", complexes.len()));
    Ok(rep)
}

// ---------------------------------------------------------------------------
// 12. Determinism of the sweep

pub fn determinism(
    cfg: &VerifyConfig,
    samples: usize,
    min_n: usize,
    max_n: usize,
) -> Result<CriterionReport> {
    let mut rep = CriterionReport::new(12, "sweep output independent of workers and folding");
    let mut rng = cfg.rng(12);
    for _ in 0..samples {
        let n = rng.gen_range(min_n..=max_n);
        let g = {
            let a = n;
            let b = rng.gen_range(0.2..0.5);
            random_graph(&mut rng, a, b)
        };
        for f in GF2_Q {
            let base_opts = BettiOptions {
                workers: 1,
                fold_reduce: false,
                ..cfg.opts.clone()
            };
            let base = betti_table_graph(&g, f, &base_opts)?;
            for workers in [1, 4, 8] {
                for fold_reduce in [false, true] {
                    let opts = BettiOptions {
                        workers,
                        fold_reduce,
                        ..cfg.opts.clone()
                    };
                    let t = betti_table_graph(&g, f, &opts)?;
                    rep.check(t == base, || {
                        format!("{g:?} over {f}: workers={workers} fold={fold_reduce} gives {t:?}, expected {base:?}")
                    });
                }
            }
        }
    }
    Ok(rep)
}

// ---------------------------------------------------------------------------

/// Every runner at its documented size, in order.
pub fn run_all(cfg: &VerifyConfig) -> Vec<(u8, Result<CriterionReport>)> {
    vec![
        (1, ferrers(cfg, 8, 12, 40)),
        (2, froberg(cfg, 6, 7)),
        (3, complement_chordal(cfg, 200, 9)),
        (4, chordal_vd(cfg, 7, 200, 10)),
        (5, whiskers(cfg, 5, 100, 100, 6)),
        (6, ears(cfg, 8)),
        (7, golden(cfg)),
        (8, genfun(cfg, 300, 8, 200, 12)),
        (9, bounds(cfg, 200, 10, 9)),
        (10, skeleton(cfg, 100, 10)),
        (11, engine(cfg, 500)),
        (12, determinism(cfg, 10, 10, 12)),
    ]
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn class_counts_match_known_values() {
        let counts: Vec<usize> = (0..=6).map(|n| isomorphism_classes(n).len()).collect();
        assert_eq!(counts, vec![1, 1, 2, 4, 11, 34, 156]);
    }

    #[test]
    fn canonical_code_is_invariant() {
        let c5 = Graph::cycle(5).unwrap();
        assert_eq!(canonical_code(&c5), canonical_code(&c5.complement()));
        let p4 = Graph::path(4);
        let star = Graph::complete_bipartite(1, 3);
        assert_ne!(canonical_code(&p4), canonical_code(&star));
        let relabeled = Graph::from_edges(4, [(2, 0), (0, 3), (3, 1)]).unwrap();
        assert_eq!(canonical_code(&p4), canonical_code(&relabeled));
    }

    #[test]
    fn line_graphs_are_claw_free() {
        let mut rng = ChaCha8Rng::seed_from_u64(71);
        for _ in 0..50 {
            let h = random_graph(&mut rng, 6, 0.5);
            assert!(line_graph(&h).is_claw_free());
        }
        assert_eq!(line_graph(&Graph::complete_bipartite(1, 3)).edge_count(), 3);
    }

    #[test]
    fn small_runs_pass() {
        let cfg = VerifyConfig {
            seed: 1,
            opts: BettiOptions::sequential(),
        };
        for rep in [
            ferrers(&cfg, 4, 6, 3).unwrap(),
            froberg(&cfg, 4, 5).unwrap(),
            complement_chordal(&cfg, 10, 6).unwrap(),
            golden(&cfg).unwrap(),
            ears(&cfg, 5).unwrap(),
            engine(&cfg, 20).unwrap(),
        ] {
            assert!(rep.passed(), "{rep}");
        }
    }

    #[test]
    fn report_rendering() {
        let mut rep = CriterionReport::new(3, "demo");
        rep.check(true, String::new);
        assert_eq!(rep.to_string(), "[ 3] demo: OK: 0 mismatches in 1 checks");
        rep.check(false, || "bad".into());
        assert!(rep
            .to_string()
            .contains("FAIL: 1 mismatches in 2 checks\n     mismatch: bad"));
    }
}
