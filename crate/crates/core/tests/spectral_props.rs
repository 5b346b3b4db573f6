mod common;

use common::{extremal_quotient, graph, permutation};
use fracdel::spectral::{
    eigen_max_symmetric, feng_yu_bound, hsf_bound, jacobi_eigen, prop32_f, spectral_summary, SymmetricMatrix,
    DEFAULT_TOL,
};
use fracdel::Graph;
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Q·diag(λ)·Qᵀ with Q a product of random Givens rotations.
fn planted(lambda: &[f64], seed: u64) -> SymmetricMatrix {
    let n = lambda.len();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut q = vec![0.0; n * n];
    for i in 0..n {
        q[i * n + i] = 1.0;
    }
    for _ in 0..4 * n * n {
        let i = rng.gen_range(0..n);
        let j = rng.gen_range(0..n);
        if i == j {
            continue;
        }
        let t: f64 = rng.gen_range(0.0..std::f64::consts::TAU);
        let (s, c) = t.sin_cos();
        for r in 0..n {
            let (x, y) = (q[r * n + i], q[r * n + j]);
            q[r * n + i] = c * x - s * y;
            q[r * n + j] = s * x + c * y;
        }
    }
    let mut m = vec![0.0; n * n];
    for i in 0..n {
        for j in i..n {
            let v: f64 = (0..n).map(|k| q[i * n + k] * lambda[k] * q[j * n + k]).sum();
            m[i * n + j] = v;
            m[j * n + i] = v;
        }
    }
    SymmetricMatrix::new(n, m).unwrap()
}

/// Circulant graph on `n` vertices with the given jumps, each below n/2.
fn circulant(n: usize, jumps: &[usize]) -> Graph {
    let edges = (0..n).flat_map(|u| jumps.iter().map(move |&j| (u, (u + j) % n)));
    Graph::from_edges(n, edges).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn planted_spectrum_maximum(lambda in proptest::collection::vec(-10.0f64..10.0, 1..12), seed in any::<u64>()) {
        let m = planted(&lambda, seed);
        let top = lambda.iter().copied().fold(f64::NEG_INFINITY, f64::max);
        let pair = eigen_max_symmetric(&m, DEFAULT_TOL).unwrap();
        prop_assert!((pair.value - top).abs() <= 1e-8, "{} vs {}", pair.value, top);
        let mut got = jacobi_eigen(&m, DEFAULT_TOL).unwrap().values;
        let mut want = lambda.clone();
        got.sort_by(f64::total_cmp);
        want.sort_by(f64::total_cmp);
        for (x, y) in got.iter().zip(&want) {
            prop_assert!((x - y).abs() <= 1e-8);
        }
    }

    #[test]
    fn regular_graphs(n in 5usize..24, picks in proptest::collection::vec(any::<bool>(), 11)) {
        let jumps: Vec<usize> = (1..n.div_ceil(2)).filter(|&j| picks[j - 1]).collect();
        let g = circulant(n, &jumps);
        let k = 2 * jumps.len();
        prop_assert!(g.degrees().iter().all(|&d| d == k));
        let s = spectral_summary(&g, DEFAULT_TOL).unwrap();
        prop_assert!((s.rho - k as f64).abs() <= 1e-8);
        prop_assert!((s.q - 2.0 * k as f64).abs() <= 1e-8);
    }

    #[test]
    fn adjacency_bound_holds(g in graph(1, 14)) {
        let s = spectral_summary(&g, DEFAULT_TOL).unwrap();
        prop_assert!(s.rho <= hsf_bound(&g).unwrap() + 1e-8);
        prop_assert!(s.rho >= 2.0 * g.size() as f64 / g.order() as f64 - 1e-8);
        prop_assert!(s.rho <= (g.order() - 1) as f64 + 1e-8);
        prop_assert!(s.q <= 2.0 * (g.order() - 1) as f64 + 1e-8);
    }

    #[test]
    fn signless_bound_holds_when_connected(g in graph(2, 14)) {
        let q = spectral_summary(&g, DEFAULT_TOL).unwrap().q;
        match feng_yu_bound(&g) {
            Ok(bound) => prop_assert!(q <= bound + 1e-8),
            Err(_) => prop_assert!(!g.is_connected()),
        }
    }

    #[test]
    fn prop32_monotone(g in graph(2, 14), x1 in 0.0f64..1.0, x2 in 0.0f64..1.0) {
        let (n, e) = (g.order(), g.size());
        let top = (n - 1) as f64;
        let (lo, hi) = if x1 < x2 { (x1 * top, x2 * top) } else { (x2 * top, x1 * top) };
        // the radicand is nonnegative up to 2e/n
        if hi <= 2.0 * e as f64 / n as f64 {
            let (flo, fhi) = (prop32_f(e, n, lo).unwrap(), prop32_f(e, n, hi).unwrap());
            prop_assert!(flo >= fhi - 1e-10);
        }
        if let (Ok(flo), Ok(fhi)) = (prop32_f(e, n, lo), prop32_f(e, n, hi)) {
            prop_assert!(flo >= fhi - 1e-10);
        }
        prop_assert!(prop32_f(e, n, g.min_degree() as f64).is_ok());
    }

    #[test]
    fn edge_deletion_lowers_both_radii(g in graph(2, 12), pick in any::<prop::sample::Index>()) {
        prop_assume!(g.size() > 0);
        let edges: Vec<_> = g.edges().collect();
        let (u, v) = edges[pick.index(edges.len())];
        let h = g.delete_edge(u, v).unwrap();
        let sg = spectral_summary(&g, DEFAULT_TOL).unwrap();
        let sh = spectral_summary(&h, DEFAULT_TOL).unwrap();
        prop_assert!(sh.rho <= sg.rho + 1e-8);
        prop_assert!(sh.q <= sg.q + 1e-8);
        if g.is_connected() {
            prop_assert!(sg.rho - sh.rho > 1e-10);
            prop_assert!(sg.q - sh.q > 1e-10);
        }
    }

    #[test]
    fn relabel_invariance(
        (g, perm) in graph(1, 14).prop_flat_map(|g| { let n = g.order(); (Just(g), permutation(n)) })
    ) {
        let a = spectral_summary(&g, DEFAULT_TOL).unwrap();
        let b = spectral_summary(&g.relabel(&perm), DEFAULT_TOL).unwrap();
        prop_assert!((a.rho - b.rho).abs() <= 1e-9);
        prop_assert!((a.q - b.q).abs() <= 1e-9);
    }

    #[test]
    fn repeated_runs_are_identical(g in graph(1, 12)) {
        let a = spectral_summary(&g, DEFAULT_TOL).unwrap();
        let b = spectral_summary(&g, DEFAULT_TOL).unwrap();
        prop_assert!((a.rho - b.rho).abs() <= 1e-12 && (a.q - b.q).abs() <= 1e-12);
    }
}

#[test]
fn extremal_matches_equitable_quotient() {
    for n in 3..=30 {
        for a in 1..=n - 2 {
            let s = spectral_summary(&Graph::extremal(n, a).unwrap(), DEFAULT_TOL).unwrap();
            let (rho, q) = extremal_quotient(n, a);
            assert!((s.rho - rho).abs() <= 1e-8, "rho n={n} a={a}: {} vs {rho}", s.rho);
            assert!((s.q - q).abs() <= 1e-8, "q n={n} a={a}: {} vs {q}", s.q);
            // K_{n−1} is a proper subgraph, and the graph is a proper subgraph of K_n
            assert!(rho > (n - 2) as f64 && rho < (n - 1) as f64);
        }
    }
}

#[test]
fn known_spectra() {
    let (rho, _) = extremal_quotient(7, 1);
    assert!(rho > 5.0 && rho < 6.0);
    let star = spectral_summary(&Graph::star(3), DEFAULT_TOL).unwrap();
    assert!((star.q - 4.0).abs() <= 1e-9);
    assert!((star.rho - 3f64.sqrt()).abs() <= 1e-9);
    let p3 = Graph::path(3);
    assert!((spectral_summary(&p3, DEFAULT_TOL).unwrap().q - 3.0).abs() <= 1e-9);
    assert!((feng_yu_bound(&p3).unwrap() - 3.0).abs() <= 1e-12);
    let c4 = Graph::cycle(4);
    assert!((hsf_bound(&c4).unwrap() - 2.0).abs() <= 1e-12);
    assert!((feng_yu_bound(&c4).unwrap() - (8.0 / 3.0 + 2.0)).abs() <= 1e-12);
}

#[test]
fn complete_graphs_attain_both_bounds() {
    for n in 2..=30 {
        let g = Graph::complete(n);
        let s = spectral_summary(&g, DEFAULT_TOL).unwrap();
        assert!((hsf_bound(&g).unwrap() - s.rho).abs() <= 1e-8);
        assert!((feng_yu_bound(&g).unwrap() - s.q).abs() <= 1e-8);
    }
}
