//! Largest eigenvalues of the adjacency and signless Laplacian matrices,
//! plus the closed-form upper bounds used by the spectral sufficient
//! conditions.
//!
//! The kernel is a cyclic Jacobi eigensolver. It converges for every real
//! symmetric matrix, and at the orders handled here (a few hundred at most)
//! the O(n³) sweep cost is irrelevant.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::Graph;

/// Default convergence tolerance on the off-diagonal Frobenius norm.
pub const DEFAULT_TOL: f64 = 1e-10;
/// Sweep budget before the solver gives up.
pub const MAX_SWEEPS: usize = 100;
/// Margin for strict spectral comparisons: `x > y` only when `x − y > STRICT_MARGIN`.
pub const STRICT_MARGIN: f64 = 1e-9;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum SpectralError {
    #[error("matrix of order 0")]
    Empty,
    #[error("entry ({row}, {col}) is not finite")]
    NotFinite { row: usize, col: usize },
    #[error("entries ({row}, {col}) and ({col}, {row}) differ")]
    NotSymmetric { row: usize, col: usize },
    #[error("expected {expected} entries, got {found}")]
    Shape { expected: usize, found: usize },
    #[error("tolerance must be positive and finite, got {0}")]
    BadTolerance(f64),
    #[error("no convergence after {sweeps} sweeps: off-diagonal norm {off_norm:e}, residual {residual:e}")]
    NoConvergence { sweeps: usize, off_norm: f64, residual: f64 },
    #[error("radicand {0} is negative")]
    NegativeRadicand(f64),
    #[error("bound requires a connected graph")]
    Disconnected,
    #[error("bound requires at least {0} vertices")]
    TooSmall(usize),
}

/// Dense real symmetric matrix, row-major.
#[derive(Debug, Clone, PartialEq)]
pub struct SymmetricMatrix {
    order: usize,
    data: Vec<f64>,
}

impl SymmetricMatrix {
    pub fn new(order: usize, data: Vec<f64>) -> Result<Self, SpectralError> {
        if data.len() != order * order {
            return Err(SpectralError::Shape { expected: order * order, found: data.len() });
        }
        for i in 0..order {
            for j in 0..order {
                if !data[i * order + j].is_finite() {
                    return Err(SpectralError::NotFinite { row: i, col: j });
                }
                if j > i && data[i * order + j] != data[j * order + i] {
                    return Err(SpectralError::NotSymmetric { row: i, col: j });
                }
            }
        }
        Ok(SymmetricMatrix { order, data })
    }

    /// A(G).
    pub fn adjacency(g: &Graph) -> Self {
        let n = g.order();
        let mut data = vec![0.0; n * n];
        for (u, v) in g.edges() {
            data[u * n + v] = 1.0;
            data[v * n + u] = 1.0;
        }
        SymmetricMatrix { order: n, data }
    }

    /// Q(G) = D(G) + A(G).
    pub fn signless_laplacian(g: &Graph) -> Self {
        let mut m = Self::adjacency(g);
        let n = m.order;
        for v in 0..n {
            m.data[v * n + v] = g.degree(v) as f64;
        }
        m
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn get(&self, i: usize, j: usize) -> f64 {
        self.data[i * self.order + j]
    }

    fn mul_vec(&self, x: &[f64]) -> Vec<f64> {
        self.data.chunks_exact(self.order).map(|row| row.iter().zip(x).map(|(a, b)| a * b).sum()).collect()
    }
}

/// Full eigendecomposition from the Jacobi sweeps.
#[derive(Debug, Clone)]
pub struct Decomposition {
    /// Eigenvalues in diagonal order (not sorted).
    pub values: Vec<f64>,
    /// Column-major: eigenvector `k` is `vectors[k * n .. (k + 1) * n]`.
    pub vectors: Vec<f64>,
    pub sweeps: usize,
    pub off_norm: f64,
}

impl Decomposition {
    pub fn vector(&self, k: usize) -> &[f64] {
        let n = self.values.len();
        &self.vectors[k * n..(k + 1) * n]
    }
}

fn off_diagonal_norm(a: &[f64], n: usize) -> f64 {
    let mut s = 0.0;
    for i in 0..n {
        for j in i + 1..n {
            s += 2.0 * a[i * n + j] * a[i * n + j];
        }
    }
    s.sqrt()
}

/// Cyclic Jacobi. Stops once the off-diagonal norm is at most `tol`.
pub fn jacobi_eigen(m: &SymmetricMatrix, tol: f64) -> Result<Decomposition, SpectralError> {
    if !(tol > 0.0 && tol.is_finite()) {
        return Err(SpectralError::BadTolerance(tol));
    }
    let n = m.order;
    if n == 0 {
        return Err(SpectralError::Empty);
    }
    let mut a = m.data.clone();
    let mut v = vec![0.0; n * n];
    for i in 0..n {
        v[i * n + i] = 1.0;
    }

    let mut sweeps = 0;
    let mut off = off_diagonal_norm(&a, n);
    while off > tol {
        if sweeps == MAX_SWEEPS {
            return Err(SpectralError::NoConvergence { sweeps, off_norm: off, residual: f64::NAN });
        }
        sweeps += 1;
        for p in 0..n {
            for q in p + 1..n {
                let apq = a[p * n + q];
                if apq == 0.0 {
                    continue;
                }
                let theta = (a[q * n + q] - a[p * n + p]) / (2.0 * apq);
                let t = if theta.abs() > 1e150 {
                    0.5 / theta
                } else {
                    theta.signum() / (theta.abs() + (theta * theta + 1.0).sqrt())
                };
                let c = 1.0 / (t * t + 1.0).sqrt();
                let s = t * c;

                a[p * n + p] -= t * apq;
                a[q * n + q] += t * apq;
                a[p * n + q] = 0.0;
                a[q * n + p] = 0.0;
                for r in 0..n {
                    if r == p || r == q {
                        continue;
                    }
                    let arp = a[r * n + p];
                    let arq = a[r * n + q];
                    let new_rp = c * arp - s * arq;
                    let new_rq = s * arp + c * arq;
                    a[r * n + p] = new_rp;
                    a[p * n + r] = new_rp;
                    a[r * n + q] = new_rq;
                    a[q * n + r] = new_rq;
                }
                // columns p and q of the accumulated rotation, stored column-major
                for r in 0..n {
                    let vrp = v[p * n + r];
                    let vrq = v[q * n + r];
                    v[p * n + r] = c * vrp - s * vrq;
                    v[q * n + r] = s * vrp + c * vrq;
                }
            }
        }
        off = off_diagonal_norm(&a, n);
    }

    Ok(Decomposition { values: (0..n).map(|i| a[i * n + i]).collect(), vectors: v, sweeps, off_norm: off })
}

/// Largest eigenpair with its achieved residual `‖Mx − λx‖∞`, `‖x‖₂ = 1`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct EigenPair {
    pub value: f64,
    pub vector: Vec<f64>,
    pub residual: f64,
}

pub fn eigen_max_symmetric(m: &SymmetricMatrix, tol: f64) -> Result<EigenPair, SpectralError> {
    let dec = jacobi_eigen(m, tol)?;
    let k = dec.values.iter().enumerate().fold(0, |best, (i, &x)| if x > dec.values[best] { i } else { best });
    let mut x = dec.vector(k).to_vec();
    let norm = x.iter().map(|t| t * t).sum::<f64>().sqrt();
    x.iter_mut().for_each(|t| *t /= norm);
    let value = dec.values[k];
    let mx = m.mul_vec(&x);
    let residual = mx.iter().zip(&x).map(|(y, xi)| (y - value * xi).abs()).fold(0.0, f64::max);
    if residual > tol {
        return Err(SpectralError::NoConvergence { sweeps: dec.sweeps, off_norm: dec.off_norm, residual });
    }
    Ok(EigenPair { value, vector: x, residual })
}

/// ρ(G) and q(G) with the worst residual of the two solves.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SpectralSummary {
    pub rho: f64,
    pub q: f64,
    pub residual: f64,
    pub tol: f64,
}

pub fn spectral_summary(g: &Graph, tol: f64) -> Result<SpectralSummary, SpectralError> {
    let a = eigen_max_symmetric(&SymmetricMatrix::adjacency(g), tol)?;
    let q = eigen_max_symmetric(&SymmetricMatrix::signless_laplacian(g), tol)?;
    Ok(SpectralSummary { rho: a.value, q: q.value, residual: a.residual.max(q.residual), tol })
}

/// ρ(G), the largest adjacency eigenvalue.
pub fn spectral_radius(g: &Graph) -> Result<f64, SpectralError> {
    eigen_max_symmetric(&SymmetricMatrix::adjacency(g), DEFAULT_TOL).map(|p| p.value)
}

/// q(G), the largest signless Laplacian eigenvalue.
pub fn signless_laplacian_radius(g: &Graph) -> Result<f64, SpectralError> {
    eigen_max_symmetric(&SymmetricMatrix::signless_laplacian(g), DEFAULT_TOL).map(|p| p.value)
}

/// `(x − 1)/2 + √(2e − nx + (x + 1)²/4)`.
///
/// Non-increasing in `x` wherever the radicand is non-negative and
/// `e ≤ n(n−1)/2`. The radicand is always non-negative for `x ≤ 2e/n`, in
/// particular for `x ≤ δ(G)`; past that it can go negative and the call fails.
pub fn prop32_f(e: usize, n: usize, x: f64) -> Result<f64, SpectralError> {
    let radicand = 2.0 * e as f64 - n as f64 * x + (x + 1.0) * (x + 1.0) / 4.0;
    if radicand < 0.0 {
        return Err(SpectralError::NegativeRadicand(radicand));
    }
    Ok((x - 1.0) / 2.0 + radicand.sqrt())
}

/// Upper bound on ρ(G) in terms of n, e(G) and δ(G).
pub fn hsf_bound(g: &Graph) -> Result<f64, SpectralError> {
    if g.order() == 0 {
        return Err(SpectralError::Empty);
    }
    prop32_f(g.size(), g.order(), g.min_degree() as f64)
}

/// Upper bound `2e/(n−1) + n − 2` on q(G) for connected G.
pub fn feng_yu_bound(g: &Graph) -> Result<f64, SpectralError> {
    let n = g.order();
    if n < 2 {
        return Err(SpectralError::TooSmall(2));
    }
    if !g.is_connected() {
        return Err(SpectralError::Disconnected);
    }
    Ok(2.0 * g.size() as f64 / (n - 1) as f64 + n as f64 - 2.0)
}

/// `x > y` beyond the strict-comparison margin.
pub fn strictly_greater(x: f64, y: f64, margin: f64) -> bool {
    x - y > margin
}
