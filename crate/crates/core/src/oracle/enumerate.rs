//! Subset enumeration over S in (|S|, lexicographic) order, on bitmasks.

use crate::graph::{Graph, VertexSet};

use super::{check_ab, DeficiencyWitness, FactorBounds, Limits, OracleError, Rule, Verdict};

/// Masks of all `k`-subsets of `0..n`, in lexicographic order of their
/// ascending member lists.
struct Combinations {
    n: usize,
    idx: Vec<usize>,
    done: bool,
}

impl Combinations {
    fn new(n: usize, k: usize) -> Self {
        Combinations { n, idx: (0..k).collect(), done: k > n }
    }
}

impl Iterator for Combinations {
    type Item = u64;

    fn next(&mut self) -> Option<u64> {
        if self.done {
            return None;
        }
        let mask = self.idx.iter().fold(0u64, |m, &v| m | 1 << v);
        let k = self.idx.len();
        // advance to the next combination
        match (0..k).rev().find(|&i| self.idx[i] < self.n - k + i) {
            Some(i) => {
                self.idx[i] += 1;
                for j in i + 1..k {
                    self.idx[j] = self.idx[j - 1] + 1;
                }
            }
            None => self.done = true,
        }
        Some(mask)
    }
}

/// All subsets of `0..n` ordered by size, then lexicographically.
pub(super) fn subsets_by_size(n: usize) -> impl Iterator<Item = u64> {
    (0..=n).flat_map(move |k| Combinations::new(n, k))
}

/// Neighborhood masks and the full vertex mask.
pub(super) struct MaskGraph {
    pub nbr: Vec<u64>,
    pub all: u64,
}

impl MaskGraph {
    pub fn new(g: &Graph) -> Self {
        let n = g.order();
        let nbr = g.neighbor_masks().expect("order checked against the hard limit");
        let all = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
        MaskGraph { nbr, all }
    }

    #[inline]
    pub fn degree_in(&self, v: usize, within: u64) -> u32 {
        (self.nbr[v] & within).count_ones()
    }

    pub fn epsilon(&self, s: u64, t: u64) -> u8 {
        let outside = self.all & !s & !t;
        let mut leaves = false;
        for v in Bits(t) {
            if self.nbr[v] & t != 0 {
                return 2;
            }
            leaves |= self.nbr[v] & outside != 0;
        }
        u8::from(leaves)
    }
}

/// Iterator over set bit positions.
pub(super) struct Bits(pub u64);

impl Iterator for Bits {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let v = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(v)
    }
}

/// The first S (in (|S|, lex) order) violating b|S| + d_{G−S}(T) ≥ ε(S,T)
/// with T = {v ∉ S : d_{G−S}(v) ≤ a}, exactly as the criterion reads.
///
/// The criterion characterizes fractional [a,b]-deleted graphs only when G
/// has at least one edge: on an edgeless graph S = ∅ always violates it,
/// while the definition holds vacuously.
pub fn deleted_criterion_violation(
    g: &Graph,
    a: usize,
    b: usize,
    limits: &Limits,
) -> Result<Option<DeficiencyWitness>, OracleError> {
    check_ab(a, b)?;
    limits.check_subset(g.order())?;
    let mg = MaskGraph::new(g);
    let (a64, b64) = (a as i64, b as i64);
    for s in subsets_by_size(g.order()) {
        let rest = mg.all & !s;
        let mut t = 0u64;
        let mut excess = 0i64;
        for v in Bits(rest) {
            let d = mg.degree_in(v, rest) as i64;
            if d <= a64 {
                t |= 1 << v;
                excess += d - a64;
            }
        }
        let theta = b64 * s.count_ones() as i64 + excess;
        // ε ≤ 2, so only small θ can fail
        if theta >= 2 {
            continue;
        }
        let eps = mg.epsilon(s, t);
        if theta < i64::from(eps) {
            return Ok(Some(DeficiencyWitness {
                s: VertexSet::from_mask(s),
                t: VertexSet::from_mask(t),
                theta,
                epsilon: eps,
                rule: Rule::Deleted,
            }));
        }
    }
    Ok(None)
}

/// Decides whether G is a fractional [a,b]-deleted graph by the deficiency
/// criterion. Edgeless graphs are accepted vacuously with no witness.
pub fn is_fractional_ab_deleted(g: &Graph, a: usize, b: usize, limits: &Limits) -> Result<Verdict, OracleError> {
    check_ab(a, b)?;
    limits.check_subset(g.order())?;
    if g.size() == 0 {
        return Ok(Verdict { holds: true, witness: None });
    }
    let witness = deleted_criterion_violation(g, a, b, limits)?;
    Ok(Verdict { holds: witness.is_none(), witness })
}

/// Decides whether G has a fractional (g,f)-factor: for every S, with
/// T = {v ∉ S : d_{G−S}(v) < g(v)}, f(S) + d_{G−S}(T) − g(T) ≥ 0.
pub fn has_fractional_gf_factor(g: &Graph, bounds: &FactorBounds, limits: &Limits) -> Result<Verdict, OracleError> {
    bounds.check_against(g)?;
    limits.check_subset(g.order())?;
    let n = g.order();
    let mg = MaskGraph::new(g);
    let lower: Vec<i64> = (0..n).map(|v| bounds.lower(v) as i64).collect();
    let upper: Vec<i64> = (0..n).map(|v| bounds.upper(v) as i64).collect();
    for s in subsets_by_size(n) {
        let rest = mg.all & !s;
        let mut value: i64 = Bits(s).map(|v| upper[v]).sum();
        let mut t = 0u64;
        for v in Bits(rest) {
            let d = mg.degree_in(v, rest) as i64;
            if d < lower[v] {
                t |= 1 << v;
                value += d - lower[v];
            }
        }
        if value < 0 {
            return Ok(Verdict {
                holds: false,
                witness: Some(DeficiencyWitness {
                    s: VertexSet::from_mask(s),
                    t: VertexSet::from_mask(t),
                    theta: value,
                    epsilon: 0,
                    rule: Rule::Factor,
                }),
            });
        }
    }
    Ok(Verdict { holds: true, witness: None })
}
