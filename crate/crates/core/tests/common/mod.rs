#![allow(dead_code)]

use fracdel::Graph;
use proptest::prelude::*;

pub fn pairs(n: usize) -> Vec<(usize, usize)> {
    (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect()
}

pub fn from_bits(n: usize, bits: &[bool]) -> Graph {
    let edges = pairs(n).into_iter().zip(bits).filter(|(_, &b)| b).map(|(p, _)| p);
    Graph::from_edges(n, edges).unwrap()
}

/// Labeled graphs with order in `lo..=hi`, each pair present with
/// probability one half.
pub fn graph(lo: usize, hi: usize) -> impl Strategy<Value = Graph> {
    (lo..=hi).prop_flat_map(|n| {
        proptest::collection::vec(any::<bool>(), n * (n - 1) / 2).prop_map(move |b| from_bits(n, &b))
    })
}

pub fn permutation(n: usize) -> impl Strategy<Value = Vec<usize>> {
    Just((0..n).collect::<Vec<_>>()).prop_shuffle()
}

/// Largest root of a monic cubic x³ + c2 x² + c1 x + c0 in [lo, hi], by
/// bisection on a sign change.
pub fn largest_root(c2: f64, c1: f64, c0: f64, lo: f64, hi: f64) -> f64 {
    let p = |x: f64| ((x + c2) * x + c1) * x + c0;
    assert!(p(hi) > 0.0, "upper bracket must lie above every root");
    // walk down from hi to find the top sign change
    let steps = 20_000;
    let h = (hi - lo) / steps as f64;
    let mut right = hi;
    let mut left = hi - h;
    while p(left) > 0.0 {
        right = left;
        left -= h;
        assert!(left >= lo - h, "no root in bracket");
    }
    for _ in 0..200 {
        let mid = 0.5 * (left + right);
        if p(mid) > 0.0 {
            right = mid;
        } else {
            left = mid;
        }
    }
    0.5 * (left + right)
}

/// Largest eigenvalue of a 3×3 matrix with nonnegative entries, via its
/// characteristic polynomial.
pub fn largest_eigenvalue_3x3(m: [[f64; 3]; 3]) -> f64 {
    let tr = m[0][0] + m[1][1] + m[2][2];
    let minors = m[0][0] * m[1][1] - m[0][1] * m[1][0] + m[0][0] * m[2][2] - m[0][2] * m[2][0] + m[1][1] * m[2][2]
        - m[1][2] * m[2][1];
    let det = m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0])
        + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
    let bound = m.iter().map(|r| r.iter().sum::<f64>()).fold(0.0, f64::max) + 1.0;
    largest_root(-tr, minors, -det, -bound, bound)
}

/// ρ and q of K_a ∨ (K_{n−a−1} ∪ K_1) from the equitable partition
/// {K_a, K_{n−a−1}, K_1}.
pub fn extremal_quotient(n: usize, a: usize) -> (f64, f64) {
    let (n, a) = (n as f64, a as f64);
    let adj = [[a - 1.0, n - a - 1.0, 1.0], [a, n - a - 2.0, 0.0], [a, 0.0, 0.0]];
    let q = [[a + n - 2.0, n - a - 1.0, 1.0], [a, 2.0 * n - a - 4.0, 0.0], [a, 0.0, a]];
    (largest_eigenvalue_3x3(adj), largest_eigenvalue_3x3(q))
}

/// Brute-force perfect matching search by recursion on the lowest
/// unmatched vertex.
pub fn has_perfect_matching(g: &Graph) -> bool {
    fn go(g: &Graph, used: &mut Vec<bool>) -> bool {
        let Some(u) = used.iter().position(|&x| !x) else { return true };
        used[u] = true;
        for v in g.neighbors(u).collect::<Vec<_>>() {
            if !used[v] {
                used[v] = true;
                if go(g, used) {
                    return true;
                }
                used[v] = false;
            }
        }
        used[u] = false;
        false
    }
    go(g, &mut vec![false; g.order()])
}

/// Exhaustive search over weights {0, 1/2, 1} on every edge: does G have a
/// fractional (lo,hi)-factor? Exact by half-integrality. Only for tiny graphs.
pub fn half_integral_factor_exists(g: &Graph, lo: &[usize], hi: &[usize]) -> bool {
    let edges: Vec<(usize, usize)> = g.edges().collect();
    let n = g.order();
    let mut load = vec![0usize; n];
    // remaining capacity each vertex could still gain, in halves
    let mut rest = vec![0usize; n];
    for &(u, v) in &edges {
        rest[u] += 2;
        rest[v] += 2;
    }
    fn go(
        i: usize,
        edges: &[(usize, usize)],
        load: &mut [usize],
        rest: &mut [usize],
        lo: &[usize],
        hi: &[usize],
    ) -> bool {
        if i == edges.len() {
            return (0..load.len()).all(|v| 2 * lo[v] <= load[v] && load[v] <= 2 * hi[v]);
        }
        let (u, v) = edges[i];
        rest[u] -= 2;
        rest[v] -= 2;
        for w in 0..=2 {
            load[u] += w;
            load[v] += w;
            let ok = [u, v].iter().all(|&x| load[x] <= 2 * hi[x] && load[x] + rest[x] >= 2 * lo[x]);
            if ok && go(i + 1, edges, load, rest, lo, hi) {
                return true;
            }
            load[u] -= w;
            load[v] -= w;
        }
        rest[u] += 2;
        rest[v] += 2;
        false
    }
    go(0, &edges, &mut load, &mut rest, lo, hi)
}
