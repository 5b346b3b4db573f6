//! Hypothesis evaluation for the size, spectral-radius and signless Laplacian
//! sufficient conditions, cross-checked against the exact oracle.
//!
//! Nothing here trusts a theorem. Every graph within the oracle's size guard
//! gets an oracle run, and a report is consistent unless the hypotheses hold,
//! the side conditions hold, and the oracle still says "not deleted".

pub mod generate;
pub mod scan;

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde::{Serialize, Serializer};
use thiserror::Error;

use crate::graph::{choose2, Graph, GraphError, VertexSet};
use crate::oracle::{self, check_ab, DeficiencyWitness, Limits, OracleError};
use crate::spectral::{self, SpectralError, SpectralSummary, DEFAULT_TOL, STRICT_MARGIN};

#[derive(Debug, Error)]
pub enum VerifyError {
    #[error(transparent)]
    Oracle(#[from] OracleError),
    #[error(transparent)]
    Spectral(#[from] SpectralError),
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error("sharpness replay failed for (n, a, b) = ({n}, {a}, {b}): {reason}")]
    Sharpness { n: usize, a: usize, b: usize, reason: String },
    #[error("sharpness replay needs n >= max(a + 2, 7) and 1 <= a <= b, got ({n}, {a}, {b})")]
    SharpnessParameters { n: usize, a: usize, b: usize },
}

/// Which sufficient condition is evaluated.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum TheoremId {
    /// ρ(G) > ρ(K_a ∨ (K_{n−a−1} ∪ K_1)).
    SpectralRadius,
    /// q(G) > 2n − 4 + (a+1)/(n−1) and q(G) > q(K_a ∨ (K_{n−a−1} ∪ K_1)), G connected.
    SignlessLaplacian,
    /// δ(G) ≥ a + 1 and e(G) ≥ C(n−1, 2) + (a+2)/2.
    Size,
}

impl TheoremId {
    pub const ALL: [TheoremId; 3] = [TheoremId::SpectralRadius, TheoremId::SignlessLaplacian, TheoremId::Size];

    pub fn label(self) -> &'static str {
        match self {
            TheoremId::SpectralRadius => "1.4",
            TheoremId::SignlessLaplacian => "1.6",
            TheoremId::Size => "1.8",
        }
    }
}

impl fmt::Display for TheoremId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

impl FromStr for TheoremId {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        TheoremId::ALL
            .into_iter()
            .find(|t| t.label() == s)
            .ok_or_else(|| format!("unknown theorem `{s}`, expected one of 1.4, 1.6, 1.8"))
    }
}

impl Serialize for TheoremId {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(self.label())
    }
}

/// The oracle's answer, or why there is none.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OracleOutcome {
    Deleted,
    NotDeleted,
    SkippedSizeGuard,
}

impl OracleOutcome {
    pub fn label(self) -> &'static str {
        match self {
            OracleOutcome::Deleted => "true",
            OracleOutcome::NotDeleted => "false",
            OracleOutcome::SkippedSizeGuard => "skipped(size-guard)",
        }
    }
}

impl Serialize for OracleOutcome {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        match self {
            OracleOutcome::Deleted => s.serialize_bool(true),
            OracleOutcome::NotDeleted => s.serialize_bool(false),
            OracleOutcome::SkippedSizeGuard => s.serialize_str("skipped(size-guard)"),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct VerifierConfig {
    /// Strict spectral comparisons need a gap above this.
    pub margin: f64,
    pub tol: f64,
    pub limits: Limits,
}

impl Default for VerifierConfig {
    fn default() -> Self {
        VerifierConfig { margin: STRICT_MARGIN, tol: DEFAULT_TOL, limits: Limits::default() }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct TheoremReport {
    pub theorem: TheoremId,
    pub n: usize,
    pub a: usize,
    pub b: usize,
    pub hypothesis_values: BTreeMap<String, f64>,
    pub margin: f64,
    pub applicable: bool,
    pub hypothesis_met: bool,
    pub oracle: OracleOutcome,
    pub witness: Option<DeficiencyWitness>,
    /// For the spectral conditions, whether the size and minimum-degree
    /// consequences the proofs derive actually hold. Present only when the
    /// hypotheses and side conditions hold.
    pub size_chain: Option<bool>,
    pub consistent: bool,
}

/// Side conditions shared by all three statements: b ≥ max{a, 3}, n ≥ max{a+2, 7}.
pub fn side_conditions(n: usize, a: usize, b: usize) -> bool {
    b >= a.max(3) && n >= (a + 2).max(7)
}

/// e(G) ≥ C(n−1, 2) + (a+2)/2, compared after doubling.
pub fn meets_size_bound(g: &Graph, a: usize) -> bool {
    let n = g.order();
    n >= 1 && 2 * g.size() >= 2 * choose2(n - 1) + a + 2
}

fn size_chain(g: &Graph, a: usize) -> bool {
    meets_size_bound(g, a) && g.min_degree() > a
}

fn run_oracle(
    g: &Graph,
    a: usize,
    b: usize,
    limits: &Limits,
) -> Result<(OracleOutcome, Option<DeficiencyWitness>), VerifyError> {
    if g.order() > limits.max_subset_n.min(oracle::HARD_MAX_N) {
        return Ok((OracleOutcome::SkippedSizeGuard, None));
    }
    let verdict = oracle::is_fractional_ab_deleted(g, a, b, limits)?;
    let outcome = if verdict.holds { OracleOutcome::Deleted } else { OracleOutcome::NotDeleted };
    Ok((outcome, verdict.witness))
}

#[allow(clippy::too_many_arguments)]
fn finish(
    theorem: TheoremId,
    g: &Graph,
    a: usize,
    b: usize,
    values: BTreeMap<String, f64>,
    applicable: bool,
    hypothesis_met: bool,
    cfg: &VerifierConfig,
) -> Result<TheoremReport, VerifyError> {
    let (oracle, witness) = run_oracle(g, a, b, &cfg.limits)?;
    let size_chain = match theorem {
        TheoremId::Size => None,
        _ if applicable && hypothesis_met => Some(size_chain(g, a)),
        _ => None,
    };
    let consistent = !(hypothesis_met && applicable && oracle == OracleOutcome::NotDeleted);
    Ok(TheoremReport {
        theorem,
        n: g.order(),
        a,
        b,
        hypothesis_values: values,
        margin: cfg.margin,
        applicable,
        hypothesis_met,
        oracle,
        witness,
        size_chain,
        consistent,
    })
}

/// Size condition: δ(G) ≥ a+1 and e(G) ≥ C(n−1,2) + (a+2)/2.
pub fn eval_theorem_1_8(g: &Graph, a: usize, b: usize, cfg: &VerifierConfig) -> Result<TheoremReport, VerifyError> {
    check_ab(a, b)?;
    let n = g.order();
    let mut values = BTreeMap::new();
    values.insert("e".to_string(), g.size() as f64);
    values.insert("delta".to_string(), g.min_degree() as f64);
    values.insert("size_threshold".to_string(), choose2(n.saturating_sub(1)) as f64 + (a + 2) as f64 / 2.0);
    let met = g.min_degree() > a && meets_size_bound(g, a);
    finish(TheoremId::Size, g, a, b, values, side_conditions(n, a, b), met, cfg)
}

/// ρ and q of K_a ∨ (K_{n−a−1} ∪ K_1), or `None` when n < a + 2.
pub fn extremal_spectrum(n: usize, a: usize, tol: f64) -> Result<Option<SpectralSummary>, VerifyError> {
    if n < a + 2 {
        return Ok(None);
    }
    Ok(Some(spectral::spectral_summary(&Graph::extremal(n, a)?, tol)?))
}

/// Spectral-radius condition: ρ(G) > ρ(K_a ∨ (K_{n−a−1} ∪ K_1)).
pub fn eval_theorem_1_4(g: &Graph, a: usize, b: usize, cfg: &VerifierConfig) -> Result<TheoremReport, VerifyError> {
    check_ab(a, b)?;
    let n = g.order();
    let mut values = BTreeMap::new();
    let mut met = false;
    if n >= 1 {
        let pair = spectral::eigen_max_symmetric(&spectral::SymmetricMatrix::adjacency(g), cfg.tol)?;
        values.insert("rho".to_string(), pair.value);
        values.insert("rho_residual".to_string(), pair.residual);
        if let Some(ext) = extremal_spectrum(n, a, cfg.tol)? {
            values.insert("rho_extremal".to_string(), ext.rho);
            met = spectral::strictly_greater(pair.value, ext.rho, cfg.margin);
        }
    }
    finish(TheoremId::SpectralRadius, g, a, b, values, side_conditions(n, a, b), met, cfg)
}

/// Signless Laplacian condition on connected G: q(G) > 2n − 4 + (a+1)/(n−1)
/// and q(G) > q(K_a ∨ (K_{n−a−1} ∪ K_1)).
pub fn eval_theorem_1_6(g: &Graph, a: usize, b: usize, cfg: &VerifierConfig) -> Result<TheoremReport, VerifyError> {
    check_ab(a, b)?;
    let n = g.order();
    let mut values = BTreeMap::new();
    let mut met = false;
    if n >= 1 {
        let pair = spectral::eigen_max_symmetric(&spectral::SymmetricMatrix::signless_laplacian(g), cfg.tol)?;
        values.insert("q".to_string(), pair.value);
        values.insert("q_residual".to_string(), pair.residual);
        if let Some(ext) = extremal_spectrum(n, a, cfg.tol)? {
            // n ≥ a + 2 ≥ 3 here, so n − 1 > 0
            let threshold = 2.0 * n as f64 - 4.0 + (a + 1) as f64 / (n - 1) as f64;
            values.insert("q_threshold".to_string(), threshold);
            values.insert("q_extremal".to_string(), ext.q);
            met = spectral::strictly_greater(pair.value, threshold, cfg.margin)
                && spectral::strictly_greater(pair.value, ext.q, cfg.margin);
        }
    }
    let applicable = side_conditions(n, a, b) && g.is_connected();
    finish(TheoremId::SignlessLaplacian, g, a, b, values, applicable, met, cfg)
}

pub fn eval_theorem(
    theorem: TheoremId,
    g: &Graph,
    a: usize,
    b: usize,
    cfg: &VerifierConfig,
) -> Result<TheoremReport, VerifyError> {
    match theorem {
        TheoremId::SpectralRadius => eval_theorem_1_4(g, a, b, cfg),
        TheoremId::SignlessLaplacian => eval_theorem_1_6(g, a, b, cfg),
        TheoremId::Size => eval_theorem_1_8(g, a, b, cfg),
    }
}

/// Outcome of replaying the sharpness construction.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SharpnessReport {
    pub n: usize,
    pub a: usize,
    pub b: usize,
    pub graph6: String,
    pub witness: DeficiencyWitness,
    pub deleted_by_edges: bool,
    pub rho: f64,
    pub rho_extremal: f64,
    pub q: f64,
    pub q_extremal: f64,
    pub rho_hypothesis_met: bool,
    pub q_hypothesis_met: bool,
    pub margin: f64,
}

/// Replays the sharpness construction K_a ∨ (K_{n−a−1} ∪ K_1):
///
/// * the oracle rejects it, with first witness S = ∅ and T the vertices of
///   degree a, θ = 0 and ε = 1;
/// * the definitional per-edge check agrees;
/// * on a relabeled copy, ρ and q equal the extremal values within the
///   margin, so both strict spectral hypotheses fail.
pub fn verify_sharpness(n: usize, a: usize, b: usize, cfg: &VerifierConfig) -> Result<SharpnessReport, VerifyError> {
    if a == 0 || a > b || n < (a + 2).max(7) {
        return Err(VerifyError::SharpnessParameters { n, a, b });
    }
    let fail = |reason: String| VerifyError::Sharpness { n, a, b, reason };
    let g = Graph::extremal(n, a)?;

    let verdict = oracle::is_fractional_ab_deleted(&g, a, b, &cfg.limits)?;
    if verdict.holds {
        return Err(fail("oracle accepts the extremal graph".into()));
    }
    let witness = verdict.witness.ok_or_else(|| fail("no witness returned".into()))?;
    let low: VertexSet = (0..n).filter(|&v| g.degree(v) == a).collect();
    let expected = (VertexSet::empty(), low, 0i64, 1u8);
    if (witness.s.clone(), witness.t.clone(), witness.theta, witness.epsilon) != expected {
        return Err(fail(format!("unexpected witness {witness:?}")));
    }
    let deleted_by_edges = oracle::is_fractional_ab_deleted_by_edges(&g, a, b, &cfg.limits)?;
    if deleted_by_edges {
        return Err(fail("per-edge check accepts the extremal graph".into()));
    }

    let reversed: Vec<usize> = (0..n).rev().collect();
    let copy = g.relabel(&reversed);
    let ext = extremal_spectrum(n, a, cfg.tol)?.expect("n >= a + 2");
    let here = spectral::spectral_summary(&copy, cfg.tol)?;
    if (here.rho - ext.rho).abs() > cfg.margin || (here.q - ext.q).abs() > cfg.margin {
        return Err(fail(format!(
            "relabeled spectrum drifted: rho {} vs {}, q {} vs {}",
            here.rho, ext.rho, here.q, ext.q
        )));
    }
    let r14 = eval_theorem_1_4(&copy, a, b, cfg)?;
    let r16 = eval_theorem_1_6(&copy, a, b, cfg)?;
    if r14.hypothesis_met || r16.hypothesis_met {
        return Err(fail("a strict spectral hypothesis holds at equality".into()));
    }
    Ok(SharpnessReport {
        n,
        a,
        b,
        graph6: crate::graph6::to_graph6(&g),
        witness,
        deleted_by_edges,
        rho: here.rho,
        rho_extremal: ext.rho,
        q: here.q,
        q_extremal: ext.q,
        rho_hypothesis_met: r14.hypothesis_met,
        q_hypothesis_met: r16.hypothesis_met,
        margin: cfg.margin,
    })
}
