//! Folds of independence complexes and dismantlability.
//!
//! Deleting a vertex `v` with `N(w) ⊆ N(v)` for some other vertex `w` leaves
//! the homotopy type of `Ind(G)` unchanged: in the complement this is the
//! closed-neighbourhood fold `N̄[v] ⊆ N̄[w]`.

use super::Graph;
use crate::vertex_set::{mask_bits, VertexSet};

impl Graph {
    /// Lexicographically least `(v, w)`, `v ≠ w`, with `N(w) ⊆ N(v)`; deleting
    /// `v` is the fold.
    pub fn find_fold(&self) -> Option<(usize, usize)> {
        let n = self.n();
        (0..n).find_map(|v| {
            (0..n)
                .find(|&w| w != v && self.neighbors(w).is_subset(self.neighbors(v)))
                .map(|w| (v, w))
        })
    }

    /// Applies folds until none remains. Returns the reduced graph (relabelled
    /// in increasing original order) and the deleted original vertices in the
    /// order they were removed.
    pub fn fold_reduce(&self) -> (Graph, Vec<usize>) {
        let mut g = self.clone();
        let mut alive: Vec<usize> = (0..self.n()).collect();
        let mut removed = Vec::new();
        while let Some((v, _)) = g.find_fold() {
            removed.push(alive.remove(v));
            let (h, _) = g
                .remove_vertices(&VertexSet::from_iter([v]))
                .expect("fold vertex in range");
            g = h;
        }
        (g, removed)
    }

    /// Dismantlability of the reflexive graph: dominated vertices
    /// (`N[v] ⊆ N[w]`) are removed greedily until one vertex is left. The
    /// outcome does not depend on the removal order.
    pub fn is_dismantlable(&self) -> bool {
        if self.n() == 0 {
            return false;
        }
        let closed: Vec<VertexSet> = (0..self.n())
            .map(|v| self.neighborhood(v, true).expect("in range"))
            .collect();
        let mut alive = self.vertices();
        let mut count = self.n();
        'outer: while count > 1 {
            for v in alive.to_vec() {
                let nv = closed[v].intersection(&alive);
                for w in alive.iter() {
                    if w != v && nv.is_subset(&closed[w]) {
                        alive.remove(v);
                        count -= 1;
                        continue 'outer;
                    }
                }
            }
            return false;
        }
        true
    }
}

/// Mask form of [`Graph::fold_reduce`] restricted to the vertices in `active`;
/// returns the surviving vertex mask. Same tie-breaking as the graph version.
pub(crate) fn fold_reduce_mask(adj: &[u64], mut active: u64) -> u64 {
    'outer: loop {
        for v in mask_bits(active) {
            let nv = adj[v] & active;
            for w in mask_bits(active) {
                if w != v && adj[w] & active & !nv == 0 {
                    active &= !(1 << v);
                    continue 'outer;
                }
            }
        }
        return active;
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Partition;
    use crate::random::random_graph;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn find_fold_examples() {
        // K_{1,2} with centre 1 and leaves 0 < 2: equal neighbourhoods
        assert_eq!(Graph::path(3).find_fold(), Some((0, 2)));
        assert_eq!(Graph::cycle(5).unwrap().find_fold(), None);
        let f = Graph::ferrers(&Partition::new(vec![2, 1]).unwrap());
        // N(r2) = {c1} ⊆ N(r1) = {c1, c2}: delete r1 = 0
        assert_eq!(f.find_fold(), Some((0, 1)));
    }

    #[test]
    fn fold_reduce_examples() {
        for (a, b) in [(1, 1), (2, 2), (2, 3), (3, 4)] {
            let (g, _) = Graph::complete_bipartite(a, b).fold_reduce();
            assert_eq!(g, Graph::complete(2), "K_{a},{b}");
        }
        let c5 = Graph::cycle(5).unwrap();
        let (g, removed) = c5.fold_reduce();
        assert_eq!(g, c5);
        assert!(removed.is_empty());
        let (g, removed) = Graph::ferrers(&Partition::new(vec![2, 1]).unwrap()).fold_reduce();
        assert_eq!(g.n(), 1);
        assert_eq!(removed[0], 0);
    }

    #[test]
    fn mask_reduction_matches_graph_reduction() {
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        for _ in 0..300 {
            let g = random_graph(&mut rng, 9, 0.35);
            let adj = g.adjacency_masks().unwrap();
            let full = (1u64 << g.n()) - 1;
            let keep = fold_reduce_mask(&adj, full);
            let (h, removed) = g.fold_reduce();
            assert_eq!(keep.count_ones() as usize, h.n());
            let removed_mask = removed.iter().fold(0u64, |m, &v| m | 1 << v);
            assert_eq!(keep, full & !removed_mask);
        }
    }

    #[test]
    fn dismantlable_examples() {
        for n in 1..6 {
            assert!(Graph::complete(n).is_dismantlable());
        }
        let mut rng = ChaCha8Rng::seed_from_u64(9);
        for _ in 0..30 {
            let mut t = crate::random::random_forest(&mut rng, 10);
            // connect the forest into a tree
            let comps = t.connected_components();
            for w in comps.windows(2) {
                t.add_edge_unchecked(w[0].first().unwrap(), w[1].first().unwrap());
            }
            assert!(t.is_dismantlable());
        }
        assert!(!Graph::cycle(4).unwrap().is_dismantlable());
        assert!(!Graph::cycle(5).unwrap().is_dismantlable());
    }
}
