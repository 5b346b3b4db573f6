//! Exact deciders for fractional factors and fractional [a,b]-deleted graphs.
//!
//! Three independent routes are provided:
//!
//! * subset enumeration of the deficiency criterion (`is_fractional_ab_deleted`,
//!   `has_fractional_gf_factor`), which also yields a witness set pair;
//! * the definition itself, one fractional factor check per deleted edge
//!   (`is_fractional_ab_deleted_by_edges`);
//! * a max-flow construction that produces an explicit half-integral
//!   indicator function (`find_fractional_factor`, `is_fractional_ab_deleted_by_flow`).
//!
//! Deficiency arithmetic is exact integer arithmetic throughout.

mod enumerate;
mod flow;
mod lovasz;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::{Graph, GraphError, VertexSet};

pub use enumerate::{deleted_criterion_violation, has_fractional_gf_factor, is_fractional_ab_deleted};
pub use flow::{find_fractional_factor, is_fractional_ab_deleted_by_flow, AssignmentViolation, FractionalAssignment};
pub use lovasz::has_gf_factor_lovasz;

/// Largest order the bitmask enumerators can represent at all.
pub const HARD_MAX_N: usize = 63;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OracleError {
    #[error("order {n} exceeds the {kind} size guard of {limit}")]
    SizeGuard { n: usize, limit: usize, kind: &'static str },
    #[error("graph of order 0")]
    EmptyGraph,
    #[error("need 1 <= a <= b, got a = {a}, b = {b}")]
    InvalidParameters { a: usize, b: usize },
    #[error("per-vertex bounds have length {found}, graph has {expected} vertices")]
    BoundsLength { expected: usize, found: usize },
    #[error("g({vertex}) = {g} exceeds f({vertex}) = {f}")]
    BoundsOrder { vertex: usize, g: usize, f: usize },
    #[error("vertex sets: {0}")]
    Graph(#[from] GraphError),
}

/// Size guards for the exponential enumerators.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Limits {
    /// Subset enumeration (2^n sets S).
    pub max_subset_n: usize,
    /// Lovász enumeration (3^n disjoint pairs).
    pub max_lovasz_n: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Limits { max_subset_n: 24, max_lovasz_n: 12 }
    }
}

impl Limits {
    pub(crate) fn check_subset(&self, n: usize) -> Result<(), OracleError> {
        check_guard(n, self.max_subset_n.min(HARD_MAX_N), "subset-enumeration")
    }

    pub(crate) fn check_lovasz(&self, n: usize) -> Result<(), OracleError> {
        check_guard(n, self.max_lovasz_n.min(HARD_MAX_N), "Lovász-enumeration")
    }
}

fn check_guard(n: usize, limit: usize, kind: &'static str) -> Result<(), OracleError> {
    if n == 0 {
        return Err(OracleError::EmptyGraph);
    }
    if n > limit {
        return Err(OracleError::SizeGuard { n, limit, kind });
    }
    Ok(())
}

/// Degree bounds: the constant pair (a, b) or per-vertex integer functions (g, f).
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "mode", rename_all = "snake_case")]
pub enum FactorBounds {
    Constant { a: usize, b: usize },
    PerVertex { g: Vec<usize>, f: Vec<usize> },
}

impl FactorBounds {
    pub fn constant(a: usize, b: usize) -> Result<Self, OracleError> {
        check_ab(a, b)?;
        Ok(FactorBounds::Constant { a, b })
    }

    pub fn per_vertex(g: Vec<usize>, f: Vec<usize>) -> Result<Self, OracleError> {
        if g.len() != f.len() {
            return Err(OracleError::BoundsLength { expected: f.len(), found: g.len() });
        }
        if let Some(v) = (0..g.len()).find(|&v| g[v] > f[v]) {
            return Err(OracleError::BoundsOrder { vertex: v, g: g[v], f: f[v] });
        }
        Ok(FactorBounds::PerVertex { g, f })
    }

    pub fn lower(&self, v: usize) -> usize {
        match self {
            FactorBounds::Constant { a, .. } => *a,
            FactorBounds::PerVertex { g, .. } => g[v],
        }
    }

    pub fn upper(&self, v: usize) -> usize {
        match self {
            FactorBounds::Constant { b, .. } => *b,
            FactorBounds::PerVertex { f, .. } => f[v],
        }
    }

    pub(crate) fn check_against(&self, g: &Graph) -> Result<(), OracleError> {
        if g.order() == 0 {
            return Err(OracleError::EmptyGraph);
        }
        match self {
            FactorBounds::Constant { a, b } => check_ab(*a, *b),
            FactorBounds::PerVertex { g: lo, f: hi } => {
                if lo.len() != g.order() || hi.len() != g.order() {
                    return Err(OracleError::BoundsLength { expected: g.order(), found: lo.len().min(hi.len()) });
                }
                match (0..lo.len()).find(|&v| lo[v] > hi[v]) {
                    Some(v) => Err(OracleError::BoundsOrder { vertex: v, g: lo[v], f: hi[v] }),
                    None => Ok(()),
                }
            }
        }
    }
}

pub(crate) fn check_ab(a: usize, b: usize) -> Result<(), OracleError> {
    if a >= 1 && a <= b {
        Ok(())
    } else {
        Err(OracleError::InvalidParameters { a, b })
    }
}

/// Which derived-set rule produced a witness.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Rule {
    /// T = {v ∉ S : d_{G−S}(v) ≤ a}, value b|S| + d_{G−S}(T) − a|T| against ε(S,T).
    Deleted,
    /// T = {v ∉ S : d_{G−S}(v) < g(v)}, value f(S) + d_{G−S}(T) − g(T) against 0.
    Factor,
}

/// A set S, its derived T, and the deficiency value of the pair.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct DeficiencyWitness {
    #[serde(rename = "S")]
    pub s: VertexSet,
    #[serde(rename = "T")]
    pub t: VertexSet,
    pub theta: i64,
    pub epsilon: u8,
    pub rule: Rule,
}

impl DeficiencyWitness {
    pub fn satisfied(&self) -> bool {
        self.theta >= i64::from(self.epsilon)
    }

    /// Recomputes the witness from `(G, S)` alone and compares.
    pub fn recheck(&self, g: &Graph, bounds: &FactorBounds) -> Result<bool, OracleError> {
        let fresh = match (self.rule, bounds) {
            (Rule::Deleted, FactorBounds::Constant { a, b }) => evaluate_deleted(g, &self.s, *a, *b)?,
            (Rule::Deleted, FactorBounds::PerVertex { .. }) => return Ok(false),
            (Rule::Factor, _) => evaluate_factor(g, &self.s, bounds)?,
        };
        Ok(&fresh == self)
    }
}

/// Outcome of a decider: the verdict and, when it is negative, the first
/// violating pair in (|S|, lexicographic) order.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Verdict {
    pub holds: bool,
    pub witness: Option<DeficiencyWitness>,
}

/// ε(S,T): 2 if T spans an edge, 1 if T is independent but has an edge
/// leaving to V∖(S∪T), 0 otherwise.
pub fn epsilon(g: &Graph, s: &VertexSet, t: &VertexSet) -> Result<u8, GraphError> {
    // range and disjointness
    g.cut_count(s, t)?;
    let outside: VertexSet = (0..g.order()).filter(|&v| !s.contains(v) && !t.contains(v)).collect();
    if !g.is_independent(t) {
        Ok(2)
    } else if g.cut_count(t, &outside)? >= 1 {
        Ok(1)
    } else {
        Ok(0)
    }
}

/// θ_G(S,T) = b|S| + d_{G−S}(T) − a|T|.
pub fn theta(g: &Graph, s: &VertexSet, t: &VertexSet, a: usize, b: usize) -> Result<i64, GraphError> {
    let d = g.degree_sum_minus(s, t)?;
    Ok((b * s.len()) as i64 + d as i64 - (a * t.len()) as i64)
}

/// Derives T from S under the deleted rule and evaluates θ and ε.
pub fn evaluate_deleted(g: &Graph, s: &VertexSet, a: usize, b: usize) -> Result<DeficiencyWitness, OracleError> {
    g.check_set(s)?;
    let t = derived_set(g, s, |_, d| d <= a);
    let theta = theta(g, s, &t, a, b)?;
    let epsilon = epsilon(g, s, &t)?;
    Ok(DeficiencyWitness { s: s.clone(), t, theta, epsilon, rule: Rule::Deleted })
}

/// Derives T from S under the factor rule and evaluates f(S) + d_{G−S}(T) − g(T).
pub fn evaluate_factor(g: &Graph, s: &VertexSet, bounds: &FactorBounds) -> Result<DeficiencyWitness, OracleError> {
    bounds.check_against(g)?;
    g.check_set(s)?;
    let t = derived_set(g, s, |v, d| d < bounds.lower(v));
    let f_s: i64 = s.iter().map(|v| bounds.upper(v) as i64).sum();
    let g_t: i64 = t.iter().map(|v| bounds.lower(v) as i64).sum();
    let theta = f_s + g.degree_sum_minus(s, &t)? as i64 - g_t;
    Ok(DeficiencyWitness { s: s.clone(), t, theta, epsilon: 0, rule: Rule::Factor })
}

fn derived_set(g: &Graph, s: &VertexSet, keep: impl Fn(usize, usize) -> bool) -> VertexSet {
    (0..g.order())
        .filter(|&v| !s.contains(v))
        .filter(|&v| {
            let d = g.degree(v) - s.iter().filter(|&u| g.has_edge(u, v)).count();
            keep(v, d)
        })
        .collect()
}

/// Definitional check: G − e has a fractional [a,b]-factor for every edge e.
/// Vacuously true for edgeless graphs.
pub fn is_fractional_ab_deleted_by_edges(g: &Graph, a: usize, b: usize, limits: &Limits) -> Result<bool, OracleError> {
    check_ab(a, b)?;
    limits.check_subset(g.order())?;
    let bounds = FactorBounds::Constant { a, b };
    for (u, v) in g.edges() {
        let h = g.delete_edge(u, v)?;
        if !has_fractional_gf_factor(&h, &bounds, limits)?.holds {
            return Ok(false);
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn set(v: &[usize]) -> VertexSet {
        VertexSet::new(v.iter().copied())
    }

    #[test]
    fn epsilon_examples() {
        let k4 = Graph::complete(4);
        assert_eq!(epsilon(&k4, &set(&[0]), &VertexSet::empty()).unwrap(), 0);
        assert_eq!(epsilon(&k4, &VertexSet::empty(), &set(&[0, 1])).unwrap(), 2);
        for (n, a) in [(7, 1), (9, 2), (12, 3)] {
            let g = Graph::extremal(n, a).unwrap();
            assert_eq!(epsilon(&g, &VertexSet::empty(), &set(&[n - 1])).unwrap(), 1);
        }
        // independent T with every neighbor inside S
        assert_eq!(epsilon(&Graph::star(3), &set(&[0]), &set(&[1, 2, 3])).unwrap(), 0);
        assert_eq!(epsilon(&k4, &set(&[0]), &set(&[0])), Err(GraphError::Overlap(0)));
    }

    #[test]
    fn theta_examples() {
        for b in 1..5 {
            let g = Graph::extremal(7, 1).unwrap();
            assert_eq!(theta(&g, &VertexSet::empty(), &set(&[6]), 1, b).unwrap(), 0);
        }
        assert_eq!(theta(&Graph::cycle(5), &VertexSet::empty(), &VertexSet::empty(), 2, 3).unwrap(), 0);
        assert_eq!(theta(&Graph::complete(5), &set(&[0]), &set(&[1]), 3, 3).unwrap(), 3);
    }

    #[test]
    fn evaluate_derives_t() {
        let g = Graph::extremal(7, 1).unwrap();
        let w = evaluate_deleted(&g, &VertexSet::empty(), 1, 3).unwrap();
        assert_eq!((w.t.clone(), w.theta, w.epsilon, w.satisfied()), (set(&[6]), 0, 1, false));
        let bounds = FactorBounds::constant(1, 1).unwrap();
        let w = evaluate_factor(&Graph::star(3), &set(&[0]), &bounds).unwrap();
        assert_eq!((w.t, w.theta), (set(&[1, 2, 3]), -2));
    }

    #[test]
    fn bounds_validation() {
        assert_eq!(FactorBounds::constant(0, 2), Err(OracleError::InvalidParameters { a: 0, b: 2 }));
        assert_eq!(FactorBounds::constant(3, 2), Err(OracleError::InvalidParameters { a: 3, b: 2 }));
        assert_eq!(
            FactorBounds::per_vertex(vec![1, 2], vec![1, 1]),
            Err(OracleError::BoundsOrder { vertex: 1, g: 2, f: 1 })
        );
        let b = FactorBounds::per_vertex(vec![1, 1], vec![1, 1]).unwrap();
        assert_eq!(b.check_against(&Graph::complete(3)), Err(OracleError::BoundsLength { expected: 3, found: 2 }));
    }

    #[test]
    fn by_edges_examples() {
        let lim = Limits::default();
        assert!(!is_fractional_ab_deleted_by_edges(&Graph::extremal(7, 1).unwrap(), 1, 3, &lim).unwrap());
        assert!(is_fractional_ab_deleted_by_edges(&Graph::complete(5), 3, 3, &lim).unwrap());
        assert!(is_fractional_ab_deleted_by_edges(&Graph::empty(3), 1, 1, &lim).unwrap());
    }

    #[test]
    fn size_guard_refuses() {
        let lim = Limits { max_subset_n: 5, max_lovasz_n: 3 };
        let err = is_fractional_ab_deleted_by_edges(&Graph::complete(6), 1, 2, &lim).unwrap_err();
        assert_eq!(err, OracleError::SizeGuard { n: 6, limit: 5, kind: "subset-enumeration" });
    }

    #[test]
    fn witness_json_shape() {
        let w = DeficiencyWitness { s: VertexSet::empty(), t: set(&[6]), theta: 0, epsilon: 1, rule: Rule::Deleted };
        assert_eq!(serde_json::to_string(&w).unwrap(), r#"{"S":[],"T":[6],"theta":0,"epsilon":1,"rule":"deleted"}"#);
    }
}
