//! Graded Betti numbers of Stanley–Reisner rings via Hochster's formula.
//!
//! `β_{i,j} = Σ_{|W|=j} dim_k H̃_{j-i-1}(Δ[W]; k)`, summed over every vertex
//! subset `W`. Tables are stored for the quotient ring `R = S/I`, so
//! `β_{0,0} = 1` is always present.
//!
//! The subset sweep is the expensive part (`2ⁿ` homology computations). With
//! the `parallel` feature it is spread over a rayon pool; every subset is an
//! independent job and results are merged by integer addition, so the table
//! does not depend on the worker count.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::complex::{maximal_independent_sets, restrict_masks, SimplicialComplex};
use crate::error::{Error, Result};
use crate::graph::fold_reduce_mask;
use crate::graph::Graph;
use crate::homology::reduced_homology_masks;
use crate::linalg::FieldSpec;

pub const DEFAULT_N_CAP: usize = 20;

/// Environment variable consulted for the default worker count.
pub const WORKERS_ENV: &str = "EDGEIDEAL_WORKERS";

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BettiOptions {
    /// Fold-reduce each induced subgraph before computing homology (graph input only).
    pub fold_reduce: bool,
    /// 0 uses the default pool, 1 runs sequentially.
    pub workers: usize,
    /// Largest ground set the sweep will accept.
    pub n_cap: usize,
}

impl Default for BettiOptions {
    fn default() -> Self {
        BettiOptions {
            fold_reduce: false,
            workers: 0,
            n_cap: DEFAULT_N_CAP,
        }
    }
}

impl BettiOptions {
    pub fn sequential() -> Self {
        BettiOptions {
            workers: 1,
            ..Self::default()
        }
    }

    /// Defaults, with the worker count taken from `EDGEIDEAL_WORKERS` if set.
    pub fn from_env() -> Self {
        let workers = std::env::var(WORKERS_ENV)
            .ok()
            .and_then(|v| v.parse().ok())
            .unwrap_or(0);
        BettiOptions {
            workers,
            ..Self::default()
        }
    }
}

/// Sparse graded Betti table `(i, j) → β_{i,j}` of a quotient ring in `n` variables.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BettiTable {
    n: usize,
    entries: BTreeMap<(usize, usize), u64>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ResolutionSummary {
    /// Projective dimension of `R`.
    pub pdim: usize,
    /// Regularity of `R`: the largest `j - i`.
    pub reg_ring: usize,
    pub depth: usize,
    /// Every entry with `i ≥ 1` sits on the strand `j = i + 1`.
    pub linear: bool,
}

impl ResolutionSummary {
    /// Projective dimension of the ideal, `pdim(R) - 1`, when `R` is not free.
    pub fn pdim_ideal(&self) -> Option<usize> {
        self.pdim.checked_sub(1)
    }

    pub fn reg_ideal(&self) -> usize {
        self.reg_ring + 1
    }
}

impl BettiTable {
    /// The table of the polynomial ring itself: only `β_{0,0} = 1`.
    pub fn new(n: usize) -> Self {
        BettiTable {
            n,
            entries: BTreeMap::from([((0, 0), 1)]),
        }
    }

    pub(crate) fn from_entries(n: usize, entries: BTreeMap<(usize, usize), u64>) -> Self {
        BettiTable {
            n,
            entries: entries.into_iter().filter(|&(_, b)| b > 0).collect(),
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> u64 {
        self.entries.get(&(i, j)).copied().unwrap_or(0)
    }

    /// Nonzero entries as `((i, j), β_{i,j})`, sorted by `(i, j)`.
    pub fn entries(&self) -> impl Iterator<Item = ((usize, usize), u64)> + '_ {
        self.entries.iter().map(|(&k, &v)| (k, v))
    }

    pub fn summarize(&self) -> ResolutionSummary {
        let pdim = self.entries.keys().map(|&(i, _)| i).max().unwrap_or(0);
        let reg_ring = self.entries.keys().map(|&(i, j)| j - i).max().unwrap_or(0);
        let linear = self.entries.keys().all(|&(i, j)| i == 0 || j == i + 1);
        ResolutionSummary {
            pdim,
            reg_ring,
            depth: self.n - pdim,
            linear,
        }
    }

    /// Grid with rows `j - i` and columns `i`, headed by a `total:` row.
    pub fn render(&self) -> String {
        let s = self.summarize();
        let cols = s.pdim + 1;
        let mut totals = vec![0u64; cols];
        for (&(i, _), &b) in &self.entries {
            totals[i] += b;
        }
        let cell = |i: usize, r: usize| match self.get(i, i + r) {
            0 => ".".to_string(),
            b => b.to_string(),
        };
        let widths: Vec<usize> = (0..cols)
            .map(|i| {
                (0..=s.reg_ring)
                    .map(|r| cell(i, r).len())
                    .chain([i.to_string().len(), totals[i].to_string().len()])
                    .max()
                    .unwrap_or(1)
            })
            .collect();
        let label_width = "total:".len().max(s.reg_ring.to_string().len() + 1);
        let mut out = String::new();
        let row = |out: &mut String, label: String, cells: Vec<String>| {
            let _ = write!(out, "{label:>label_width$}");
            for (c, w) in cells.iter().zip(&widths) {
                let _ = write!(out, " {c:>w$}");
            }
            out.push('\n');
        };
        row(
            &mut out,
            String::new(),
            (0..cols).map(|i| i.to_string()).collect(),
        );
        row(
            &mut out,
            "total:".into(),
            totals.iter().map(u64::to_string).collect(),
        );
        for r in 0..=s.reg_ring {
            row(
                &mut out,
                format!("{r}:"),
                (0..cols).map(|i| cell(i, r)).collect(),
            );
        }
        out
    }

    pub fn to_csv(&self) -> String {
        let mut out = String::from("i,j,b\n");
        for (&(i, j), &b) in &self.entries {
            let _ = writeln!(out, "{i},{j},{b}");
        }
        out
    }

    pub fn to_json_value(&self, field: Option<FieldSpec>) -> serde_json::Value {
        serde_json::json!({
            "n": self.n,
            "field": field.map(|f| f.to_string()),
            "entries": self
                .entries
                .iter()
                .map(|(&(i, j), &b)| serde_json::json!({"i": i, "j": j, "b": b}))
                .collect::<Vec<_>>(),
        })
    }

    pub fn from_json(text: &str) -> Result<(Self, Option<FieldSpec>)> {
        #[derive(Deserialize)]
        struct Entry {
            i: usize,
            j: usize,
            b: u64,
        }
        #[derive(Deserialize)]
        struct Table {
            n: usize,
            field: Option<FieldSpec>,
            entries: Vec<Entry>,
        }
        let t: Table = serde_json::from_str(text)
            .map_err(|e| Error::Input(format!("Betti table JSON: {e}")))?;
        let entries = t.entries.into_iter().map(|e| ((e.i, e.j), e.b)).collect();
        Ok((BettiTable::from_entries(t.n, entries), t.field))
    }
}

fn check_cap(n: usize, opts: &BettiOptions) -> Result<()> {
    if n > opts.n_cap {
        return Err(Error::CapExceeded {
            what: "ground set size",
            value: n,
            cap: opts.n_cap,
            cost: format!("the sweep visits 2^{n} subsets"),
        });
    }
    Ok(())
}

/// Adds the Hochster contributions of one subset `W` to a dense `[i][j]` grid.
fn accumulate(grid: &mut [Vec<u64>], w: u64, homology: &[usize]) {
    let j = w.count_ones() as usize;
    for (k, &dim) in homology.iter().enumerate() {
        // degree d = k - 1 contributes to i = j - d - 1 = j - k
        if dim > 0 && k <= j {
            grid[j - k][j] += dim as u64;
        }
    }
}

fn sweep<F>(n: usize, workers: usize, homology_of: F) -> Vec<Vec<u64>>
where
    F: Fn(u64) -> Vec<usize> + Sync,
{
    let zero = || vec![vec![0u64; n + 1]; n + 1];
    let total: u64 = 1 << n;
    let run_sequential = || {
        let mut grid = zero();
        for w in 0..total {
            accumulate(&mut grid, w, &homology_of(w));
        }
        grid
    };
    #[cfg(feature = "parallel")]
    {
        // tiny sweeps are not worth a pool hand-off
        if workers != 1 && n >= 8 {
            use rayon::prelude::*;
            let run = || {
                (0..total)
                    .into_par_iter()
                    .fold(zero, |mut grid, w| {
                        accumulate(&mut grid, w, &homology_of(w));
                        grid
                    })
                    .reduce(zero, |mut a, b| {
                        for (ra, rb) in a.iter_mut().zip(&b) {
                            for (x, y) in ra.iter_mut().zip(rb) {
                                *x += y;
                            }
                        }
                        a
                    })
            };
            return match pool(workers) {
                Some(p) => p.install(run),
                None => run(),
            };
        }
    }
    let _ = workers;
    run_sequential()
}

#[cfg(feature = "parallel")]
fn pool(workers: usize) -> Option<std::sync::Arc<rayon::ThreadPool>> {
    use std::collections::HashMap;
    use std::sync::{Arc, Mutex, OnceLock};
    if workers == 0 {
        return None;
    }
    static POOLS: OnceLock<Mutex<HashMap<usize, Arc<rayon::ThreadPool>>>> = OnceLock::new();
    let mut pools = POOLS
        .get_or_init(Default::default)
        .lock()
        .expect("pool cache lock");
    Some(
        pools
            .entry(workers)
            .or_insert_with(|| {
                Arc::new(
                    rayon::ThreadPoolBuilder::new()
                        .num_threads(workers)
                        .build()
                        .expect("thread pool"),
                )
            })
            .clone(),
    )
}

fn grid_to_table(n: usize, grid: Vec<Vec<u64>>) -> BettiTable {
    let mut entries = BTreeMap::new();
    for (i, row) in grid.into_iter().enumerate() {
        for (j, b) in row.into_iter().enumerate() {
            if b > 0 {
                entries.insert((i, j), b);
            }
        }
    }
    BettiTable::from_entries(n, entries)
}

/// Betti table of `R_Δ` over `field`. `opts.fold_reduce` has no effect here:
/// it needs the graph, see [`betti_table_graph`].
pub fn betti_table(
    complex: &SimplicialComplex,
    field: FieldSpec,
    opts: &BettiOptions,
) -> Result<BettiTable> {
    let n = complex.ground();
    check_cap(n, opts)?;
    let facets = complex.facet_masks();
    let grid = sweep(n, opts.workers, |w| {
        reduced_homology_masks(&restrict_masks(facets, w), field)
    });
    Ok(grid_to_table(n, grid))
}

/// Betti table of the edge ideal quotient `S/I_G`, computed on `Ind(G[W])`
/// directly from the graph.
pub fn betti_table_graph(g: &Graph, field: FieldSpec, opts: &BettiOptions) -> Result<BettiTable> {
    let n = g.n();
    check_cap(n, opts)?;
    let adj = g.adjacency_masks()?;
    let grid = sweep(n, opts.workers, |w| {
        let active = if opts.fold_reduce {
            fold_reduce_mask(&adj, w)
        } else {
            w
        };
        reduced_homology_masks(&maximal_independent_sets(&adj, active), field)
    });
    Ok(grid_to_table(n, grid))
}

/// Betti table of `S/I_{G;r}`, the ideal of connected induced `r`-subsets.
pub fn betti_table_component_ideal(
    g: &Graph,
    r: usize,
    field: FieldSpec,
    opts: &BettiOptions,
) -> Result<BettiTable> {
    check_cap(g.n(), opts)?;
    betti_table(&SimplicialComplex::component_complex(g, r)?, field, opts)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::random::random_graph;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn table(n: usize, e: &[((usize, usize), u64)]) -> BettiTable {
        let mut m: BTreeMap<_, _> = e.iter().copied().collect();
        m.insert((0, 0), 1);
        BettiTable::from_entries(n, m)
    }

    fn oracle(g: &Graph, f: FieldSpec) -> BettiTable {
        betti_table_graph(g, f, &BettiOptions::sequential()).unwrap()
    }

    /// Hochster's sum written out directly over relabelled induced subgraphs;
    /// shares only the homology engine with the sweep.
    fn hochster_by_hand(g: &Graph, f: FieldSpec) -> BettiTable {
        let n = g.n();
        let mut entries = BTreeMap::new();
        for w in 0u64..1 << n {
            let (h, _) = g
                .induced_subgraph(&crate::vertex_set::VertexSet::from_mask(w))
                .unwrap();
            let prof = SimplicialComplex::independence_complex(&h)
                .unwrap()
                .reduced_homology(f);
            let j = h.n() as isize;
            for (d, dim) in prof.nonzero() {
                let i = j - d - 1;
                *entries.entry((i as usize, j as usize)).or_insert(0) += dim as u64;
            }
        }
        BettiTable::from_entries(n, entries)
    }

    #[test]
    fn golden_tables() {
        for f in [FieldSpec::GF2, FieldSpec::GF3, FieldSpec::Q] {
            assert_eq!(oracle(&Graph::complete(2), f), table(2, &[((1, 2), 1)]));
            assert_eq!(
                oracle(&Graph::path(3), f),
                table(3, &[((1, 2), 2), ((2, 3), 1)])
            );
            assert_eq!(
                oracle(&Graph::cycle(5).unwrap(), f),
                table(5, &[((1, 2), 5), ((2, 3), 5), ((3, 5), 1)])
            );
            assert_eq!(
                oracle(&Graph::cycle(4).unwrap(), f),
                table(4, &[((1, 2), 4), ((2, 3), 4), ((3, 4), 1)])
            );
            assert_eq!(
                oracle(&Graph::complete(3), f),
                table(3, &[((1, 2), 3), ((2, 3), 2)])
            );
            assert_eq!(oracle(&Graph::empty(4), f), BettiTable::new(4));
        }
    }

    #[test]
    fn summaries() {
        let s = oracle(&Graph::complete(2), FieldSpec::GF2).summarize();
        assert_eq!((s.pdim, s.reg_ring, s.linear), (1, 1, true));
        let s = oracle(&Graph::cycle(5).unwrap(), FieldSpec::GF2).summarize();
        assert_eq!((s.pdim, s.reg_ring, s.linear), (3, 2, false));
        assert_eq!((s.pdim_ideal(), s.reg_ideal()), (Some(2), 3));
        let s = oracle(&Graph::cycle(4).unwrap(), FieldSpec::GF2).summarize();
        assert_eq!((s.pdim, s.depth, s.linear), (3, 1, true));
        let s = BettiTable::new(3).summarize();
        assert_eq!((s.pdim, s.depth, s.pdim_ideal()), (0, 3, None));
    }

    #[test]
    fn component_ideal_of_a_path() {
        let t = betti_table_component_ideal(
            &Graph::path(3),
            3,
            FieldSpec::Q,
            &BettiOptions::sequential(),
        )
        .unwrap();
        assert_eq!(t, table(3, &[((1, 3), 1)]));
    }

    #[test]
    fn complex_and_graph_routes_agree_with_direct_sum() {
        let mut rng = ChaCha8Rng::seed_from_u64(31);
        for _ in 0..60 {
            let g = random_graph(&mut rng, 7, 0.4);
            let ind = SimplicialComplex::independence_complex(&g).unwrap();
            for f in [FieldSpec::GF2, FieldSpec::Q] {
                let by_hand = hochster_by_hand(&g, f);
                assert_eq!(oracle(&g, f), by_hand);
                assert_eq!(
                    betti_table(&ind, f, &BettiOptions::sequential()).unwrap(),
                    by_hand
                );
            }
        }
    }

    #[test]
    fn fold_reduction_and_workers_do_not_change_tables() {
        let mut rng = ChaCha8Rng::seed_from_u64(32);
        for _ in 0..30 {
            let g = random_graph(&mut rng, 9, 0.35);
            let base = oracle(&g, FieldSpec::GF2);
            for (fold, workers) in [(true, 1), (false, 4), (true, 8), (false, 0)] {
                let opts = BettiOptions {
                    fold_reduce: fold,
                    workers,
                    ..BettiOptions::default()
                };
                assert_eq!(betti_table_graph(&g, FieldSpec::GF2, &opts).unwrap(), base);
            }
        }
    }

    #[test]
    fn cap_refusal() {
        let g = Graph::empty(21);
        match betti_table_graph(&g, FieldSpec::GF2, &BettiOptions::default()) {
            Err(Error::CapExceeded {
                value: 21, cap: 20, ..
            }) => {}
            other => panic!("{other:?}"),
        }
        let opts = BettiOptions {
            n_cap: 21,
            ..BettiOptions::default()
        };
        assert_eq!(
            betti_table_graph(&g, FieldSpec::GF2, &opts).unwrap(),
            BettiTable::new(21)
        );
    }

    #[test]
    fn rendering() {
        let t = oracle(&Graph::cycle(5).unwrap(), FieldSpec::Q);
        let expect = "       0 1 2 3\n\
                      total: 1 5 5 1\n    \
                      0: 1 . . .\n    \
                      1: . 5 5 .\n    \
                      2: . . . 1\n";
        assert_eq!(t.render(), expect);
        assert_eq!(t.to_csv(), "i,j,b\n0,0,1\n1,2,5\n2,3,5\n3,5,1\n");
        let v = t.to_json_value(Some(FieldSpec::Q));
        let (back, field) = BettiTable::from_json(&v.to_string()).unwrap();
        assert_eq!((back, field), (t, Some(FieldSpec::Q)));
    }
}
