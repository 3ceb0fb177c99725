//! Seeded instance generators for tests and benchmarks.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{BipartiteGraph, ColouredGraph, Graph};

/// Bipartite graph with maximum degree at most `delta`.
///
/// Every pair in `U × V` is proposed once in a seeded random order and kept
/// when both endpoints still have degree below `delta`. The result is a
/// maximal degree-constrained subgraph of `K_{nU,nV}`.
pub fn random_bounded_degree_bipartite(n_left: usize, n_right: usize, delta: usize, seed: u64) -> BipartiteGraph {
    random_bipartite_with_budget(n_left, n_right, delta, usize::MAX, seed)
}

/// As [`random_bounded_degree_bipartite`] but stops after `max_edges` accepted edges.
pub fn random_bipartite_with_budget(
    n_left: usize,
    n_right: usize,
    delta: usize,
    max_edges: usize,
    seed: u64,
) -> BipartiteGraph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut pairs: Vec<(usize, usize)> =
        (0..n_left).flat_map(|u| (0..n_right).map(move |v| (u, v))).collect();
    pairs.shuffle(&mut rng);
    let mut deg_left = vec![0; n_left];
    let mut deg_right = vec![0; n_right];
    let mut edges = Vec::new();
    for (u, v) in pairs {
        if edges.len() >= max_edges {
            break;
        }
        if deg_left[u] < delta && deg_right[v] < delta {
            deg_left[u] += 1;
            deg_right[v] += 1;
            edges.push((u, v));
        }
    }
    BipartiteGraph::new(n_left, n_right, edges).expect("generated edges are distinct and in range")
}

/// Coloured graph on `n` vertices with colours drawn uniformly from `1..=q`
/// and maximum degree at most `delta`, built by the same proposal scheme.
pub fn random_bounded_degree_coloured(n: usize, q: u32, delta: usize, seed: u64) -> ColouredGraph {
    random_coloured_with_budget(n, q, delta, usize::MAX, seed)
}

pub fn random_coloured_with_budget(n: usize, q: u32, delta: usize, max_edges: usize, seed: u64) -> ColouredGraph {
    assert!(q >= 1, "need at least one colour");
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let colours: Vec<u32> = (0..n).map(|_| rng.gen_range(1..=q)).collect();
    let mut pairs: Vec<(usize, usize)> = (0..n).flat_map(|a| (a + 1..n).map(move |b| (a, b))).collect();
    pairs.shuffle(&mut rng);
    let mut deg = vec![0; n];
    let mut edges = Vec::new();
    for (a, b) in pairs {
        if edges.len() >= max_edges {
            break;
        }
        if deg[a] < delta && deg[b] < delta {
            deg[a] += 1;
            deg[b] += 1;
            edges.push((a, b));
        }
    }
    ColouredGraph::new(colours, edges).expect("generated edges are simple")
}

/// Erdős–Rényi graph `G(n, p)`.
pub fn random_graph(n: usize, p: f64, seed: u64) -> Graph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut edges = Vec::new();
    for a in 0..n {
        for b in a + 1..n {
            if rng.gen_bool(p) {
                edges.push((a, b));
            }
        }
    }
    Graph::new(n, edges).expect("generated edges are simple")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::MaxDegree;

    #[test]
    fn zero_degree_gives_edgeless() {
        for seed in 0..5 {
            assert_eq!(random_bounded_degree_bipartite(3, 3, 0, seed).edge_count(), 0);
        }
    }

    #[test]
    fn deterministic_given_seed() {
        let a = random_bounded_degree_bipartite(4, 4, 3, 7);
        let b = random_bounded_degree_bipartite(4, 4, 3, 7);
        assert_eq!(a, b);
        let c = random_bounded_degree_coloured(9, 3, 3, 7);
        assert_eq!(c, random_bounded_degree_coloured(9, 3, 3, 7));
    }

    #[test]
    fn respects_degree_bound() {
        let g = random_bounded_degree_bipartite(4, 4, 2, 7);
        for u in 0..4 {
            assert!(g.left_neighbours(u).len() <= 2);
        }
        for v in 0..4 {
            assert!(g.right_neighbours(v).len() <= 2);
        }
        for seed in 0..20 {
            assert!(random_bounded_degree_bipartite(7, 6, 3, seed).max_degree() <= 3);
            assert!(random_bounded_degree_coloured(12, 2, 3, seed).max_degree() <= 3);
            assert!(random_bipartite_with_budget(7, 6, 3, 4, seed).edge_count() <= 4);
        }
    }
}
