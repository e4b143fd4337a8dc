//! Standard graph families and the whisker, ear and Ferrers constructions.

use serde::{Deserialize, Serialize};

use super::Graph;
use crate::error::{input, Result};
use crate::vertex_set::VertexSet;

/// An integer partition `λ₁ ≥ λ₂ ≥ … ≥ λ_m ≥ 1`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Partition(Vec<usize>);

impl Partition {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.is_empty() {
            return input("partition must have at least one part");
        }
        if parts.contains(&0) {
            return input("partition parts must be positive");
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return input(format!("partition {parts:?} is not weakly decreasing"));
        }
        Ok(Partition(parts))
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    pub fn rows(&self) -> usize {
        self.0.len()
    }

    pub fn cells(&self) -> usize {
        self.0.iter().sum()
    }

    /// Every partition with exactly `cells` cells, largest parts first.
    pub fn all_of_size(cells: usize) -> Vec<Partition> {
        fn rec(rem: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
            if rem == 0 {
                out.push(Partition(cur.clone()));
                return;
            }
            for p in (1..=rem.min(max)).rev() {
                cur.push(p);
                rec(rem - p, p, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        if cells > 0 {
            rec(cells, cells, &mut Vec::new(), &mut out);
        }
        out
    }
}

impl TryFrom<Vec<usize>> for Partition {
    type Error = crate::Error;
    fn try_from(v: Vec<usize>) -> Result<Self> {
        Partition::new(v)
    }
}

impl From<Partition> for Vec<usize> {
    fn from(p: Partition) -> Vec<usize> {
        p.0
    }
}

impl Graph {
    pub fn cycle(r: usize) -> Result<Graph> {
        if r < 3 {
            return input(format!("cycle length {r} < 3"));
        }
        Graph::from_edges(r, (0..r).map(|i| (i, (i + 1) % r)))
    }

    pub fn path(n: usize) -> Graph {
        Graph::from_edges(n, (1..n).map(|i| (i - 1, i))).expect("path edges are valid")
    }

    pub fn complete(n: usize) -> Graph {
        let mut g = Graph::empty(n);
        for u in 0..n {
            for v in u + 1..n {
                g.add_edge_unchecked(u, v);
            }
        }
        g
    }

    /// `K_{a,b}` with the `a` side on `0..a`.
    pub fn complete_bipartite(a: usize, b: usize) -> Graph {
        let mut g = Graph::empty(a + b);
        for u in 0..a {
            for v in a..a + b {
                g.add_edge_unchecked(u, v);
            }
        }
        g
    }

    /// `G ⊔ H`, with `H` shifted by `G.n()`.
    pub fn disjoint_union(g: &Graph, h: &Graph) -> Graph {
        let off = g.n();
        let mut out = Graph::empty(off + h.n());
        for (u, v) in g.edges() {
            out.add_edge_unchecked(u, v);
        }
        for (u, v) in h.edges() {
            out.add_edge_unchecked(u + off, v + off);
        }
        out
    }

    /// Induced subgraph of the integer lattice on a finite point set: points
    /// at L¹ distance 1 are adjacent. Vertices follow the input order and are
    /// labelled `x,y`.
    pub fn grid_subgraph(points: &[(i64, i64)]) -> Result<Graph> {
        let mut seen = std::collections::HashSet::new();
        for p in points {
            if !seen.insert(*p) {
                return input(format!("duplicate lattice point {p:?}"));
            }
        }
        let mut g = Graph::empty(points.len());
        for (i, &(x1, y1)) in points.iter().enumerate() {
            for (j, &(x2, y2)) in points.iter().enumerate().skip(i + 1) {
                if (x1 - x2).abs() + (y1 - y2).abs() == 1 {
                    g.add_edge_unchecked(i, j);
                }
            }
        }
        g.with_labels(points.iter().map(|(x, y)| format!("{x},{y}")).collect())
    }

    /// Recovers lattice points from `x,y` labels when they certify this graph
    /// as a lattice subgraph.
    pub fn lattice_points(&self) -> Option<Vec<(i64, i64)>> {
        let labels = self.labels()?;
        let pts: Option<Vec<(i64, i64)>> = labels
            .iter()
            .map(|l| {
                let (x, y) = l.split_once(',')?;
                Some((x.trim().parse().ok()?, y.trim().parse().ok()?))
            })
            .collect();
        let pts = pts?;
        let rebuilt = Graph::grid_subgraph(&pts).ok()?;
        (rebuilt.edges() == self.edges()).then_some(pts)
    }

    /// Appends one pendant vertex per member of `s`, in increasing order of
    /// the base vertex.
    pub fn whisker(&self, s: &VertexSet) -> Result<Graph> {
        if s.bound() > self.n() {
            return input(format!("whisker base {} out of range", s.bound() - 1));
        }
        let n = self.n();
        let mut g = Graph::empty(n + s.len());
        for (u, v) in self.edges() {
            g.add_edge_unchecked(u, v);
        }
        for (k, v) in s.iter().enumerate() {
            g.add_edge_unchecked(v, n + k);
        }
        Ok(g)
    }

    pub fn whisker_all(&self) -> Graph {
        self.whisker(&self.vertices())
            .expect("all vertices are in range")
    }

    /// Glues a triangle along the edge `{u, v}`: one new vertex adjacent to both.
    pub fn add_ear(&self, u: usize, v: usize) -> Result<Graph> {
        if !self.has_edge(u, v) {
            return input(format!("({u},{v}) is not an edge"));
        }
        let n = self.n();
        let mut g = Graph::empty(n + 1);
        for (a, b) in self.edges() {
            g.add_edge_unchecked(a, b);
        }
        g.add_edge_unchecked(u, n);
        g.add_edge_unchecked(v, n);
        Ok(g)
    }

    /// Ferrers graph: rows `r_i` on `0..m`, columns `c_j` on `m..m+λ₁`, with
    /// `r_i ~ c_j` iff `j ≤ λ_i`.
    pub fn ferrers(lambda: &Partition) -> Graph {
        let m = lambda.rows();
        let cols = lambda.parts()[0];
        let mut g = Graph::empty(m + cols);
        for (i, &len) in lambda.parts().iter().enumerate() {
            for j in 0..len {
                g.add_edge_unchecked(i, m + j);
            }
        }
        g
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn constructors() {
        assert_eq!(Graph::cycle(3).unwrap(), Graph::complete(3));
        assert!(Graph::cycle(2).is_err());
        let two_k2 = Graph::disjoint_union(&Graph::complete(2), &Graph::complete(2));
        assert_eq!(two_k2.edges(), vec![(0, 1), (2, 3)]);
        let g = Graph::grid_subgraph(&[(0, 0), (0, 1), (1, 0)]).unwrap();
        // (0,1) - (0,0) - (1,0)
        assert_eq!(g.edges(), vec![(0, 1), (0, 2)]);
        assert_eq!(g.lattice_points().unwrap().len(), 3);
        assert!(Graph::cycle(4).unwrap().lattice_points().is_none());
    }

    #[test]
    fn whisker_examples() {
        let k1 = Graph::empty(1);
        assert_eq!(
            k1.whisker(&VertexSet::from_mask(1)).unwrap(),
            Graph::complete(2)
        );
        let w = Graph::complete(3).whisker_all();
        assert_eq!((w.n(), w.edge_count()), (6, 6));
        let c5 = Graph::cycle(5)
            .unwrap()
            .whisker(&VertexSet::from_mask(1))
            .unwrap();
        assert_eq!((c5.n(), c5.edge_count()), (6, 6));
        assert_eq!(c5.neighbors(5).to_vec(), vec![0]);
    }

    #[test]
    fn ear_examples() {
        assert_eq!(
            Graph::complete(2).add_ear(0, 1).unwrap(),
            Graph::complete(3)
        );
        let k4_minus = Graph::complete(3).add_ear(0, 1).unwrap();
        assert_eq!(k4_minus.edge_count(), 5);
        assert!(!k4_minus.has_edge(2, 3));
        let c5 = Graph::cycle(5).unwrap().add_ear(0, 1).unwrap();
        assert_eq!(c5.neighbors(5).to_vec(), vec![0, 1]);
        assert!(Graph::cycle(5).unwrap().add_ear(0, 2).is_err());
    }

    #[test]
    fn ferrers_examples() {
        let p = |v: &[usize]| Partition::new(v.to_vec()).unwrap();
        assert_eq!(Graph::ferrers(&p(&[1])), Graph::complete(2));
        assert_eq!(Graph::ferrers(&p(&[2, 2])), Graph::complete_bipartite(2, 2));
        // r1=0, r2=1, c1=2, c2=3: path c2 - r1 - c1 - r2
        let g = Graph::ferrers(&p(&[2, 1]));
        assert_eq!(g.edges(), vec![(0, 2), (0, 3), (1, 2)]);
        assert_eq!(Graph::ferrers(&p(&[3, 2, 1])).edge_count(), 6);
    }

    #[test]
    fn partitions() {
        assert!(Partition::new(vec![1, 2]).is_err());
        assert!(Partition::new(vec![]).is_err());
        assert!(Partition::new(vec![2, 0]).is_err());
        // p(1..=8) = 1 2 3 5 7 11 15 22
        let counts: Vec<usize> = (1..=8).map(|k| Partition::all_of_size(k).len()).collect();
        assert_eq!(counts, vec![1, 2, 3, 5, 7, 11, 15, 22]);
    }
}
