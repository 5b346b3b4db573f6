//! Graph corpora: exhaustive dense labeled graphs by complement enumeration,
//! and Erdős–Rényi samples.

use itertools::Itertools;
use rand::Rng;

use crate::graph::{choose2, Graph};

/// Every labeled graph on `n` vertices missing at most `max_missing` edges,
/// ordered by the number of missing edges, then lexicographically by the
/// missing pairs.
pub fn dense_graphs(n: usize, max_missing: usize) -> impl Iterator<Item = Graph> {
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
    let top = max_missing.min(pairs.len());
    (0..=top).flat_map(move |k| {
        let pairs = pairs.clone();
        (0..pairs.len()).combinations(k).map(move |missing| {
            let missing_edges = missing.iter().map(|&i| pairs[i]);
            Graph::from_edges(n, missing_edges).expect("pairs are in range").complement()
        })
    })
}

/// Number of graphs `dense_graphs(n, max_missing)` yields.
pub fn dense_graph_count(n: usize, max_missing: usize) -> u128 {
    let m = choose2(n) as u128;
    let mut total = 0u128;
    let mut binom = 1u128;
    for k in 0..=(max_missing as u128).min(m) {
        total += binom;
        binom = binom * (m - k) / (k + 1);
    }
    total
}

/// Largest number of missing edges compatible with the size condition
/// e(G) ≥ C(n−1, 2) + (a+2)/2, i.e. C(n,2) − C(n−1,2) − ⌈(a+2)/2⌉.
pub fn threshold_missing(n: usize, a: usize) -> usize {
    (n.saturating_sub(1)).saturating_sub((a + 2).div_ceil(2))
}

/// G(n, p): each pair independently present with probability `p`.
pub fn random_graph<R: Rng + ?Sized>(n: usize, p: f64, rng: &mut R) -> Graph {
    let edges: Vec<(usize, usize)> =
        (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).filter(|_| rng.gen_bool(p)).collect();
    Graph::from_edges(n, edges).expect("pairs are in range")
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;

    #[test]
    fn dense_counts() {
        assert_eq!(threshold_missing(7, 1), 4);
        assert_eq!(dense_graph_count(7, 4), 7547);
        assert_eq!(dense_graphs(7, 4).count(), 7547);
        assert_eq!(dense_graphs(4, 6).count(), 64);
        assert_eq!(dense_graph_count(4, 100), 64);
    }

    #[test]
    fn dense_graphs_are_dense_and_distinct() {
        let all: Vec<Graph> = dense_graphs(6, 3).collect();
        assert!(all.iter().all(|g| g.size() >= 15 - 3));
        let unique: std::collections::HashSet<_> = all.iter().collect();
        assert_eq!(unique.len(), all.len());
        assert_eq!(all[0], Graph::complete(6));
    }

    #[test]
    fn random_graph_extremes() {
        let mut rng = rand::rngs::StdRng::seed_from_u64(7);
        assert_eq!(random_graph(6, 0.0, &mut rng), Graph::empty(6));
        assert_eq!(random_graph(6, 1.0, &mut rng), Graph::complete(6));
    }
}
