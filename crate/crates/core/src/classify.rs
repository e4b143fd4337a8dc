//! Vertex decomposability, shellability and the Cohen–Macaulay family of
//! properties, with replayable witnesses.
//!
//! Everything works on facet masks in the complex's own labelling; links and
//! deletions are never relabelled, so a witness refers to original vertices.

use std::collections::{BTreeMap, HashMap};
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::complex::{deletion_masks, faces_by_size, link_masks, SimplicialComplex};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::homology::reduced_homology_masks;
use crate::linalg::FieldSpec;
use crate::vertex_set::{mask_bits, VertexSet};

pub const DEFAULT_SHELLING_CAP: usize = 12;

/// Decision tree of shedding vertices.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum VdWitness {
    /// Void, `{∅}` or a single facet.
    Simplex,
    Shed {
        vertex: usize,
        deletion: Arc<VdWitness>,
        link: Arc<VdWitness>,
    },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VdResult {
    pub decomposable: bool,
    pub witness: Option<Arc<VdWitness>>,
}

fn support(facets: &[u64]) -> u64 {
    facets.iter().fold(0, |a, &f| a | f)
}

fn is_shedding(facets: &[u64], v: usize) -> bool {
    deletion_masks(facets, 1 << v).iter().all(|d| {
        facets
            .binary_search_by(|f| crate::vertex_set::canonical_cmp_masks(*f, *d))
            .is_ok()
    })
}

type Memo = HashMap<Vec<u64>, Option<Arc<VdWitness>>>;

fn vd_search(
    facets: &[u64],
    memo: &mut Memo,
    hint: &dyn Fn(&[u64]) -> Option<usize>,
) -> Option<Arc<VdWitness>> {
    if facets.len() <= 1 {
        return Some(Arc::new(VdWitness::Simplex));
    }
    if let Some(w) = memo.get(facets) {
        return w.clone();
    }
    let preferred = hint(facets);
    let candidates = preferred
        .into_iter()
        .chain(mask_bits(support(facets)).filter(|&v| Some(v) != preferred));
    let mut found = None;
    for v in candidates {
        if !is_shedding(facets, v) {
            continue;
        }
        let Some(deletion) = vd_search(&deletion_masks(facets, 1 << v), memo, hint) else {
            continue;
        };
        let Some(link) = vd_search(&link_masks(facets, 1 << v), memo, hint) else {
            continue;
        };
        found = Some(Arc::new(VdWitness::Shed {
            vertex: v,
            deletion,
            link,
        }));
        break;
    }
    memo.insert(facets.to_vec(), found.clone());
    found
}

fn vd_result(witness: Option<Arc<VdWitness>>) -> VdResult {
    VdResult {
        decomposable: witness.is_some(),
        witness,
    }
}

/// Vertex decomposability, by exhaustive memoized search over shedding vertices.
pub fn is_vertex_decomposable(complex: &SimplicialComplex) -> VdResult {
    vd_result(vd_search(complex.facet_masks(), &mut Memo::new(), &|_| {
        None
    }))
}

/// Vertex decomposability of `Ind(G)`. Every intermediate complex is the
/// independence complex of the subgraph induced on its support, so a
/// closed-neighbourhood domination `N[u] ⊆ N[v]` there names a shedding
/// vertex `v` that is tried first.
pub fn is_vertex_decomposable_graph(g: &Graph) -> Result<VdResult> {
    let adj = g.adjacency_masks()?;
    let ind = SimplicialComplex::independence_complex(g)?;
    let hint = |facets: &[u64]| dominated_pair_masks(&adj, support(facets)).map(|(_, v)| v);
    Ok(vd_result(vd_search(
        ind.facet_masks(),
        &mut Memo::new(),
        &hint,
    )))
}

/// Re-checks a shedding tree against the complex it claims to decompose.
pub fn replay_vd_witness(complex: &SimplicialComplex, witness: &VdWitness) -> bool {
    fn go(facets: &[u64], w: &VdWitness) -> bool {
        match w {
            VdWitness::Simplex => facets.len() <= 1,
            VdWitness::Shed {
                vertex,
                deletion,
                link,
            } => {
                *vertex < 64
                    && support(facets) >> vertex & 1 == 1
                    && is_shedding(facets, *vertex)
                    && go(&deletion_masks(facets, 1 << vertex), deletion)
                    && go(&link_masks(facets, 1 << vertex), link)
            }
        }
    }
    go(complex.facet_masks(), witness)
}

/// Lexicographically least `(u, v)`, `u ≠ v`, with `N[u] ⊆ N[v]` inside `active`.
fn dominated_pair_masks(adj: &[u64], active: u64) -> Option<(usize, usize)> {
    for u in mask_bits(active) {
        let nu = (adj[u] & active) | 1 << u;
        for v in mask_bits(active) {
            if v != u && nu & !((adj[v] & active) | 1 << v) == 0 {
                return Some((u, v));
            }
        }
    }
    None
}

/// Lexicographically least `(u, v)` with `N[u] ⊆ N[v]`; `v` is then a shedding
/// vertex of `Ind(G)`.
pub fn dominated_pair_shedding(g: &Graph) -> Result<Option<(usize, usize)>> {
    let adj = g.adjacency_masks()?;
    let all = if g.n() == 64 {
        u64::MAX
    } else {
        (1u64 << g.n()) - 1
    };
    Ok(dominated_pair_masks(&adj, all))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ShellingResult {
    pub shellable: bool,
    /// Facets in shelling order, when one exists.
    pub order: Option<Vec<VertexSet>>,
}

/// `⟨previous⟩ ∩ ⟨f⟩` is pure of dimension `dim f - 1`.
fn shelling_step_ok(previous: impl Iterator<Item = u64>, f: u64) -> bool {
    let need = f.count_ones() - 1;
    let mut inter: Vec<u64> = previous.map(|p| p & f).collect();
    crate::complex::normalize(&mut inter);
    !inter.is_empty() && inter.iter().all(|m| m.count_ones() == need)
}

/// Nonpure shellability by dynamic programming over facet subsets. The step
/// condition only depends on which facets came before, not their order, so
/// `2^t` states suffice. Refuses complexes with more than `cap` facets.
pub fn is_shellable(complex: &SimplicialComplex, cap: usize) -> Result<ShellingResult> {
    let facets = complex.facet_masks();
    let t = facets.len();
    if t > cap {
        return Err(Error::CapExceeded {
            what: "facet count",
            value: t,
            cap,
            cost: format!("the search visits up to 2^{t} facet subsets"),
        });
    }
    if t <= 1 {
        return Ok(ShellingResult {
            shellable: true,
            order: Some(complex.facets()),
        });
    }
    let full = (1usize << t) - 1;
    // last[s] = facet placed last in some shelling of subset s
    let mut last: Vec<Option<usize>> = vec![None; full + 1];
    let mut reachable = vec![false; full + 1];
    reachable[0] = true;
    for s in 1..=full {
        for k in mask_bits(s as u64) {
            let prev = s & !(1 << k);
            if !reachable[prev] {
                continue;
            }
            let ok =
                prev == 0 || shelling_step_ok(mask_bits(prev as u64).map(|i| facets[i]), facets[k]);
            if ok {
                reachable[s] = true;
                last[s] = Some(k);
                break;
            }
        }
    }
    if !reachable[full] {
        return Ok(ShellingResult {
            shellable: false,
            order: None,
        });
    }
    let mut order = Vec::with_capacity(t);
    let mut s = full;
    while s != 0 {
        let k = last[s].expect("reachable state has a last facet");
        order.push(facets[k]);
        s &= !(1 << k);
    }
    order.reverse();
    Ok(ShellingResult {
        shellable: true,
        order: Some(order.into_iter().map(VertexSet::from_mask).collect()),
    })
}

/// Checks a proposed shelling order: it must list every facet once and pass
/// the step condition at each position.
pub fn replay_shelling(complex: &SimplicialComplex, order: &[VertexSet]) -> bool {
    let Some(masks) = order
        .iter()
        .map(VertexSet::as_mask)
        .collect::<Option<Vec<u64>>>()
    else {
        return false;
    };
    let mut sorted = masks.clone();
    sorted.sort_unstable();
    let mut facets = complex.facet_masks().to_vec();
    facets.sort_unstable();
    if sorted != facets {
        return false;
    }
    (1..masks.len()).all(|k| shelling_step_ok(masks[..k].iter().copied(), masks[k]))
}

fn dim_of(facets: &[u64]) -> Option<isize> {
    facets.iter().map(|f| f.count_ones() as isize - 1).max()
}

/// `H̃_i = 0` for all `i < dim`.
fn acyclic_below_top(facets: &[u64], field: FieldSpec) -> bool {
    let Some(dim) = dim_of(facets) else {
        return true;
    };
    let h = reduced_homology_masks(facets, field);
    h.iter().take((dim + 1) as usize).all(|&x| x == 0)
}

/// Reisner's criterion over every face, the empty face included.
pub fn is_cohen_macaulay(complex: &SimplicialComplex, field: FieldSpec) -> bool {
    let facets = complex.facet_masks();
    faces_by_size(facets)
        .iter()
        .flatten()
        .all(|&f| acyclic_below_top(&link_masks(facets, f), field))
}

fn sequentially_acyclic_masks(facets: &[u64], field: FieldSpec) -> bool {
    let Some(dim) = dim_of(facets) else {
        return true;
    };
    (0..=dim).all(|m| {
        let part: Vec<u64> = facets
            .iter()
            .copied()
            .filter(|f| f.count_ones() as isize > m)
            .collect();
        let h = reduced_homology_masks(&part, field);
        // degrees r = -1 .. m-1
        h.iter().take(m as usize + 1).all(|&x| x == 0)
    })
}

/// `H̃_r(Δ^{<m>}) = 0` for all `r < m ≤ dim Δ`.
pub fn is_sequentially_acyclic(complex: &SimplicialComplex, field: FieldSpec) -> bool {
    sequentially_acyclic_masks(complex.facet_masks(), field)
}

/// Every link, the complex itself included, is sequentially acyclic.
pub fn is_sequentially_cm(complex: &SimplicialComplex, field: FieldSpec) -> bool {
    let facets = complex.facet_masks();
    faces_by_size(facets)
        .iter()
        .flatten()
        .all(|&f| sequentially_acyclic_masks(&link_masks(facets, f), field))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassificationReport {
    pub pure: bool,
    pub vertex_decomposable: VdResult,
    /// `None` when the facet count is above the shelling cap.
    pub shellable: Option<ShellingResult>,
    pub cm: BTreeMap<FieldSpec, bool>,
    pub sequentially_cm: BTreeMap<FieldSpec, bool>,
    /// Broken implications. Nonempty means a bug in one of the checkers.
    pub violations: Vec<String>,
}

/// Runs every checker and cross-examines the implications
/// VD ⇒ shellable ⇒ sequentially CM, CM ⇒ sequentially CM, and
/// pure + shellable ⇒ CM.
pub fn audit_chain(
    complex: &SimplicialComplex,
    fields: &[FieldSpec],
    shelling_cap: usize,
) -> ClassificationReport {
    let pure = complex.is_pure();
    let vd = is_vertex_decomposable(complex);
    let shellable = is_shellable(complex, shelling_cap).ok();
    let cm: BTreeMap<_, _> = fields
        .iter()
        .map(|&f| (f, is_cohen_macaulay(complex, f)))
        .collect();
    let scm: BTreeMap<_, _> = fields
        .iter()
        .map(|&f| (f, is_sequentially_cm(complex, f)))
        .collect();

    let mut violations = Vec::new();
    if let Some(w) = &vd.witness {
        if !replay_vd_witness(complex, w) {
            violations.push("shedding tree does not replay".into());
        }
    }
    let shell_flag = shellable.as_ref().map(|s| s.shellable);
    if let Some(order) = shellable.as_ref().and_then(|s| s.order.as_ref()) {
        if !replay_shelling(complex, order) {
            violations.push("shelling order does not replay".into());
        }
    }
    if vd.decomposable && shell_flag == Some(false) {
        violations.push("vertex decomposable but not shellable".into());
    }
    let shellable_known = shell_flag == Some(true) || vd.decomposable;
    for &f in fields {
        if shellable_known && !scm[&f] {
            violations.push(format!("shellable but not sequentially CM over {f}"));
        }
        if cm[&f] && !scm[&f] {
            violations.push(format!("CM but not sequentially CM over {f}"));
        }
        if pure && shellable_known && !cm[&f] {
            violations.push(format!("pure and shellable but not CM over {f}"));
        }
        if cm[&f] && !pure {
            violations.push(format!("CM over {f} but not pure"));
        }
    }
    ClassificationReport {
        pure,
        vertex_decomposable: vd,
        shellable,
        cm,
        sequentially_cm: scm,
        violations,
    }
}
