//! Seeded random instances for property checks and the verify runners.

use rand::seq::SliceRandom;
use rand::Rng;

use crate::complex::SimplicialComplex;
use crate::graph::Graph;

/// Erdős–Rényi `G(n, p)`.
pub fn random_graph<R: Rng + ?Sized>(rng: &mut R, n: usize, p: f64) -> Graph {
    let mut g = Graph::empty(n);
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                g.add_edge_unchecked(u, v);
            }
        }
    }
    g
}

/// A random forest on `n` vertices: each vertex attaches to an earlier one
/// with probability 3/4, after a random relabelling.
pub fn random_forest<R: Rng + ?Sized>(rng: &mut R, n: usize) -> Graph {
    let mut perm: Vec<usize> = (0..n).collect();
    perm.shuffle(rng);
    let mut g = Graph::empty(n);
    for i in 1..n {
        if rng.gen_bool(0.75) {
            let j = rng.gen_range(0..i);
            g.add_edge_unchecked(perm[i], perm[j]);
        }
    }
    g
}

/// A random chordal graph: the fill-in of a random graph under a random
/// elimination order.
pub fn random_chordal_graph<R: Rng + ?Sized>(rng: &mut R, n: usize) -> Graph {
    let p = rng.gen_range(0.1..0.6);
    let mut g = random_graph(rng, n, p);
    let mut order: Vec<usize> = (0..n).collect();
    order.shuffle(rng);
    let mut eliminated = vec![false; n];
    for &v in &order {
        let later: Vec<usize> = g.neighbors(v).iter().filter(|&u| !eliminated[u]).collect();
        for (i, &a) in later.iter().enumerate() {
            for &b in &later[i + 1..] {
                if !g.has_edge(a, b) {
                    g.add_edge_unchecked(a, b);
                }
            }
        }
        eliminated[v] = true;
    }
    g
}

/// Graph with maximum degree at most `d`, built by adding random edges
/// between vertices that still have spare degree.
pub fn random_bounded_degree_graph<R: Rng + ?Sized>(rng: &mut R, n: usize, d: usize) -> Graph {
    let mut g = Graph::empty(n);
    if n < 2 {
        return g;
    }
    let attempts = n * d * 2;
    for _ in 0..attempts {
        let u = rng.gen_range(0..n);
        let v = rng.gen_range(0..n);
        if u != v && !g.has_edge(u, v) && g.degree(u) < d && g.degree(v) < d {
            g.add_edge_unchecked(u, v);
        }
    }
    g
}

/// Random complex on `ground` vertices with up to `max_facets` random faces
/// as generators.
pub fn random_complex<R: Rng + ?Sized>(
    rng: &mut R,
    ground: usize,
    max_facets: usize,
) -> SimplicialComplex {
    let count = rng.gen_range(0..=max_facets);
    let faces: Vec<u64> = (0..count)
        .map(|_| {
            let mut m = 0u64;
            for v in 0..ground {
                if rng.gen_bool(0.45) {
                    m |= 1 << v;
                }
            }
            m
        })
        .collect();
    // no generators gives the void complex
    SimplicialComplex::from_masks(ground, faces)
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn generators_meet_their_contracts() {
        let mut rng = ChaCha8Rng::seed_from_u64(0);
        for _ in 0..50 {
            assert!(random_forest(&mut rng, 11).is_forest());
            assert!(random_chordal_graph(&mut rng, 9).is_chordal());
            assert!(random_bounded_degree_graph(&mut rng, 10, 3).max_degree() <= 3);
        }
    }
}
