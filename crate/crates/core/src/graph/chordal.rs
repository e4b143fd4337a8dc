//! Chordality with certificates.
//!
//! A maximum cardinality search proposes an elimination order; the order is
//! then checked directly. On failure a chordless cycle of length at least four
//! is extracted and checked as well, so callers never have to trust the search.

use std::collections::VecDeque;

use serde::{Deserialize, Serialize};

use super::Graph;
use crate::vertex_set::VertexSet;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "chordal", rename_all = "snake_case")]
pub enum Chordality {
    /// Each vertex's later neighbours in `elimination_order` form a clique.
    Chordal { elimination_order: Vec<usize> },
    /// An induced cycle of length at least four, in cyclic order.
    NotChordal { witness_cycle: Vec<usize> },
}

impl Chordality {
    pub fn is_chordal(&self) -> bool {
        matches!(self, Chordality::Chordal { .. })
    }

    /// Re-checks the certificate against `g`.
    pub fn verify(&self, g: &Graph) -> bool {
        match self {
            Chordality::Chordal { elimination_order } => {
                is_perfect_elimination_order(g, elimination_order).is_ok()
            }
            Chordality::NotChordal { witness_cycle } => is_chordless_cycle(g, witness_cycle),
        }
    }
}

/// Maximum cardinality search; the reverse of the visit order is a perfect
/// elimination order whenever the graph is chordal.
fn mcs_order(g: &Graph) -> Vec<usize> {
    let n = g.n();
    let mut weight = vec![0usize; n];
    let mut done = vec![false; n];
    let mut visit = Vec::with_capacity(n);
    for _ in 0..n {
        let v = (0..n)
            .filter(|&v| !done[v])
            .max_by_key(|&v| (weight[v], std::cmp::Reverse(v)))
            .expect("unvisited vertex remains");
        done[v] = true;
        visit.push(v);
        for u in g.neighbors(v).iter() {
            if !done[u] {
                weight[u] += 1;
            }
        }
    }
    visit.reverse();
    visit
}

/// Returns the first offending `(v, x, y)` where `x, y` are non-adjacent later
/// neighbours of `v`.
fn is_perfect_elimination_order(g: &Graph, order: &[usize]) -> Result<(), (usize, usize, usize)> {
    let n = g.n();
    if order.len() != n {
        return Err((usize::MAX, usize::MAX, usize::MAX));
    }
    let mut pos = vec![usize::MAX; n];
    for (i, &v) in order.iter().enumerate() {
        if v >= n || pos[v] != usize::MAX {
            return Err((usize::MAX, usize::MAX, usize::MAX));
        }
        pos[v] = i;
    }
    for (i, &v) in order.iter().enumerate() {
        let later: Vec<usize> = g.neighbors(v).iter().filter(|&u| pos[u] > i).collect();
        for (a, &x) in later.iter().enumerate() {
            for &y in &later[a + 1..] {
                if !g.has_edge(x, y) {
                    return Err((v, x, y));
                }
            }
        }
    }
    Ok(())
}

fn is_chordless_cycle(g: &Graph, cycle: &[usize]) -> bool {
    let k = cycle.len();
    if k < 4 {
        return false;
    }
    let distinct: VertexSet = cycle.iter().copied().collect();
    if distinct.len() != k || distinct.bound() > g.n() {
        return false;
    }
    for i in 0..k {
        for j in i + 1..k {
            let consecutive = j == i + 1 || (i == 0 && j == k - 1);
            if g.has_edge(cycle[i], cycle[j]) != consecutive {
                return false;
            }
        }
    }
    true
}

/// Shortest `x`–`y` path avoiding `N[v] \ {x, y}`, closed into a cycle through `v`.
fn cycle_through(g: &Graph, v: usize, x: usize, y: usize) -> Option<Vec<usize>> {
    let mut blocked = g.neighbors(v).clone();
    blocked.insert(v);
    blocked.remove(x);
    blocked.remove(y);
    let n = g.n();
    let mut prev = vec![usize::MAX; n];
    let mut seen = vec![false; n];
    seen[x] = true;
    let mut queue = VecDeque::from([x]);
    while let Some(a) = queue.pop_front() {
        if a == y {
            break;
        }
        for b in g.neighbors(a).iter() {
            if seen[b] || blocked.contains(b) || (a == x && b == y) {
                continue;
            }
            seen[b] = true;
            prev[b] = a;
            queue.push_back(b);
        }
    }
    if !seen[y] {
        return None;
    }
    let mut path = vec![y];
    let mut cur = y;
    while cur != x {
        cur = prev[cur];
        path.push(cur);
    }
    path.reverse();
    let mut cycle = vec![v];
    cycle.extend(path);
    Some(cycle)
}

impl Graph {
    pub fn chordality(&self) -> Chordality {
        let order = mcs_order(self);
        let (v0, x0, y0) = match is_perfect_elimination_order(self, &order) {
            Ok(()) => {
                return Chordality::Chordal {
                    elimination_order: order,
                }
            }
            Err(t) => t,
        };
        let mut candidates = vec![(v0, x0, y0)];
        for v in 0..self.n() {
            let nb = self.neighbors(v).to_vec();
            for (i, &x) in nb.iter().enumerate() {
                for &y in &nb[i + 1..] {
                    if !self.has_edge(x, y) {
                        candidates.push((v, x, y));
                    }
                }
            }
        }
        for (v, x, y) in candidates {
            if let Some(c) = cycle_through(self, v, x, y) {
                if is_chordless_cycle(self, &c) {
                    return Chordality::NotChordal { witness_cycle: c };
                }
            }
        }
        unreachable!("non-chordal graph without a chordless cycle")
    }

    pub fn is_chordal(&self) -> bool {
        self.chordality().is_chordal()
    }
}
