//! Finite simple graphs on vertices `0..n`.

mod chordal;
mod construct;
mod fold;
pub mod io;

use std::collections::VecDeque;
use std::fmt;

use crate::error::{input, Result};
use crate::vertex_set::VertexSet;

pub use chordal::Chordality;
pub use construct::Partition;
pub(crate) use fold::fold_reduce_mask;

#[derive(Clone, PartialEq, Eq)]
pub struct Graph {
    adj: Vec<VertexSet>,
    labels: Option<Vec<String>>,
}

impl Graph {
    /// The edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Self {
        Graph {
            adj: vec![VertexSet::new(); n],
            labels: None,
        }
    }

    /// Builds a graph from an edge list. Edges are unordered; loops, duplicates
    /// and out-of-range endpoints are rejected.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut g = Graph::empty(n);
        for (u, v) in edges {
            if u >= n || v >= n {
                return input(format!("edge ({u},{v}) has an endpoint outside 0..{n}"));
            }
            if u == v {
                return input(format!("loop at vertex {u}"));
            }
            if g.adj[u].contains(v) {
                return input(format!("duplicate edge ({},{})", u.min(v), u.max(v)));
            }
            g.add_edge_unchecked(u, v);
        }
        Ok(g)
    }

    pub(crate) fn add_edge_unchecked(&mut self, u: usize, v: usize) {
        self.adj[u].insert(v);
        self.adj[v].insert(u);
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Result<Self> {
        if labels.len() != self.n() {
            return input(format!(
                "{} labels given for {} vertices",
                labels.len(),
                self.n()
            ));
        }
        self.labels = Some(labels);
        Ok(self)
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    pub fn n(&self) -> usize {
        self.adj.len()
    }

    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.n())
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(VertexSet::len).sum::<usize>() / 2
    }

    /// Edges `(u, v)` with `u < v`, sorted.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for (u, nb) in self.adj.iter().enumerate() {
            out.extend(nb.iter().filter(|&v| v > u).map(|v| (u, v)));
        }
        out
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n() && self.adj[u].contains(v)
    }

    /// Open neighbourhood; panics if `v` is out of range.
    pub fn neighbors(&self, v: usize) -> &VertexSet {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(VertexSet::len).max().unwrap_or(0)
    }

    /// Open `N(v)` or closed `N[v]` neighbourhood.
    pub fn neighborhood(&self, v: usize, closed: bool) -> Result<VertexSet> {
        if v >= self.n() {
            return input(format!("vertex {v} out of range 0..{}", self.n()));
        }
        let mut s = self.adj[v].clone();
        if closed {
            s.insert(v);
        }
        Ok(s)
    }

    pub fn complement(&self) -> Graph {
        let n = self.n();
        let all = VertexSet::full(n);
        let adj = (0..n)
            .map(|v| {
                let mut s = all.difference(&self.adj[v]);
                s.remove(v);
                s
            })
            .collect();
        Graph {
            adj,
            labels: self.labels.clone(),
        }
    }

    fn check_subset(&self, w: &VertexSet) -> Result<()> {
        if w.bound() > self.n() {
            return input(format!(
                "vertex {} out of range 0..{}",
                w.bound() - 1,
                self.n()
            ));
        }
        Ok(())
    }

    /// The subgraph induced on `w`, relabelled `0..|w|` in increasing original
    /// order. The second component maps new labels back to original vertices.
    pub fn induced_subgraph(&self, w: &VertexSet) -> Result<(Graph, Vec<usize>)> {
        self.check_subset(w)?;
        let map: Vec<usize> = w.iter().collect();
        let mut index = vec![usize::MAX; self.n()];
        for (i, &v) in map.iter().enumerate() {
            index[v] = i;
        }
        let adj = map
            .iter()
            .map(|&v| {
                self.adj[v]
                    .intersection(w)
                    .iter()
                    .map(|u| index[u])
                    .collect()
            })
            .collect();
        let labels = self
            .labels
            .as_ref()
            .map(|l| map.iter().map(|&v| l[v].clone()).collect());
        Ok((Graph { adj, labels }, map))
    }

    /// `G \ S`: the subgraph induced on the vertices outside `s`.
    pub fn remove_vertices(&self, s: &VertexSet) -> Result<(Graph, Vec<usize>)> {
        self.check_subset(s)?;
        self.induced_subgraph(&self.vertices().difference(s))
    }

    /// Connected components, each sorted, listed by least member.
    pub fn connected_components(&self) -> Vec<VertexSet> {
        let n = self.n();
        let mut seen = vec![false; n];
        let mut comps = Vec::new();
        for s in 0..n {
            if seen[s] {
                continue;
            }
            let mut comp = VertexSet::new();
            let mut queue = VecDeque::from([s]);
            seen[s] = true;
            while let Some(v) = queue.pop_front() {
                comp.insert(v);
                for u in self.adj[v].iter() {
                    if !seen[u] {
                        seen[u] = true;
                        queue.push_back(u);
                    }
                }
            }
            comps.push(comp);
        }
        comps
    }

    pub fn is_connected(&self) -> bool {
        self.connected_components().len() <= 1
    }

    pub fn is_forest(&self) -> bool {
        self.edge_count() + self.connected_components().len() == self.n()
    }

    /// No vertex has three pairwise non-adjacent neighbours.
    pub fn is_claw_free(&self) -> bool {
        (0..self.n()).all(|c| {
            let nb = self.adj[c].to_vec();
            for (i, &a) in nb.iter().enumerate() {
                for (j, &b) in nb.iter().enumerate().skip(i + 1) {
                    if self.has_edge(a, b) {
                        continue;
                    }
                    for &d in &nb[j + 1..] {
                        if !self.has_edge(a, d) && !self.has_edge(b, d) {
                            return false;
                        }
                    }
                }
            }
            true
        })
    }

    /// Adjacency as bit masks; only available for graphs on at most 64 vertices.
    pub fn adjacency_masks(&self) -> Result<Vec<u64>> {
        if self.n() > 64 {
            return input(format!(
                "graph has {} vertices; mask form supports at most 64",
                self.n()
            ));
        }
        Ok(self
            .adj
            .iter()
            .map(|s| s.as_mask().expect("members below 64"))
            .collect())
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n(), self.edges())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn set(v: &[usize]) -> VertexSet {
        v.iter().copied().collect()
    }

    #[test]
    fn induced_subgraph_examples() {
        let c5 = Graph::cycle(5).unwrap();
        let (p, map) = c5.induced_subgraph(&set(&[0, 1, 2])).unwrap();
        assert_eq!(p, Graph::path(3));
        assert_eq!(map, vec![0, 1, 2]);

        let (e, _) = c5.induced_subgraph(&VertexSet::new()).unwrap();
        assert_eq!(e.n(), 0);

        let (g, map) = c5.induced_subgraph(&set(&[0, 1, 3])).unwrap();
        assert_eq!(g.edges(), vec![(0, 1)]);
        assert_eq!(map, vec![0, 1, 3]);

        assert!(matches!(
            c5.induced_subgraph(&set(&[7])),
            Err(crate::Error::Input(_))
        ));
    }

    #[test]
    fn complement_examples() {
        let c4 = Graph::cycle(4).unwrap();
        assert_eq!(c4.complement().edges(), vec![(0, 2), (1, 3)]);
        assert_eq!(Graph::complete(4).complement(), Graph::empty(4));
        let c5c = Graph::cycle(5).unwrap().complement();
        assert_eq!(c5c.edges(), vec![(0, 2), (0, 3), (1, 3), (1, 4), (2, 4)]);
        // 0-2-4-1-3-0
        let order = [0, 2, 4, 1, 3];
        for i in 0..5 {
            assert!(c5c.has_edge(order[i], order[(i + 1) % 5]));
        }
    }

    #[test]
    fn neighborhood_examples() {
        let c4 = Graph::cycle(4).unwrap();
        assert_eq!(c4.neighborhood(0, false).unwrap(), set(&[1, 3]));
        assert!(Graph::empty(1).neighborhood(0, false).unwrap().is_empty());
        let star = Graph::complete_bipartite(1, 3);
        assert_eq!(star.neighborhood(0, true).unwrap(), set(&[0, 1, 2, 3]));
        assert!(c4.neighborhood(4, false).is_err());
    }

    #[test]
    fn components_examples() {
        let two_k2 = Graph::disjoint_union(&Graph::complete(2), &Graph::complete(2));
        assert_eq!(
            two_k2.connected_components(),
            vec![set(&[0, 1]), set(&[2, 3])]
        );
        assert_eq!(Graph::cycle(6).unwrap().connected_components().len(), 1);
        assert_eq!(
            Graph::empty(3).connected_components(),
            vec![set(&[0]), set(&[1]), set(&[2])]
        );
    }

    #[test]
    fn rejects_bad_edges() {
        assert!(Graph::from_edges(3, [(0, 0)]).is_err());
        assert!(Graph::from_edges(3, [(0, 3)]).is_err());
        assert!(Graph::from_edges(3, [(0, 1), (1, 0)]).is_err());
    }

    #[test]
    fn wide_graphs_use_spilled_sets() {
        let g = Graph::cycle(100).unwrap();
        assert_eq!(g.edge_count(), 100);
        assert!(g.has_edge(99, 0));
        assert!(g.adjacency_masks().is_err());
        let (p, _) = g.remove_vertices(&set(&[99])).unwrap();
        assert!(p.is_forest());
        assert_eq!(g.complement().edge_count(), 100 * 99 / 2 - 100);
    }

    #[test]
    fn claw_free() {
        assert!(!Graph::complete_bipartite(1, 3).is_claw_free());
        assert!(Graph::cycle(5).unwrap().is_claw_free());
        assert!(Graph::complete(5).is_claw_free());
    }

    #[test]
    fn complement_commutes_with_induction() {
        let g = Graph::from_edges(6, [(0, 1), (1, 2), (2, 5), (3, 4), (0, 4)]).unwrap();
        for m in 0u64..64 {
            let w = VertexSet::from_mask(m);
            let a = g.induced_subgraph(&w).unwrap().0.complement();
            let b = g.complement().induced_subgraph(&w).unwrap().0;
            assert_eq!(a, b);
        }
        assert_eq!(g.complement().complement(), g);
    }
}
