//! Integer (g,f)-factor existence by Lovász's condition over all disjoint
//! pairs (S, T): f(S) + d_{G−S}(T) − g(T) − q(S,T) ≥ 0, where q counts the
//! components C of G − (S ∪ T) with g ≡ f on C and f(C) + e_G(C,T) odd.

use crate::graph::Graph;

use super::enumerate::{Bits, MaskGraph};
use super::{FactorBounds, Limits, OracleError};

pub fn has_gf_factor_lovasz(g: &Graph, bounds: &FactorBounds, limits: &Limits) -> Result<bool, OracleError> {
    bounds.check_against(g)?;
    limits.check_lovasz(g.order())?;
    let n = g.order();
    let mg = MaskGraph::new(g);
    let lower: Vec<i64> = (0..n).map(|v| bounds.lower(v) as i64).collect();
    let upper: Vec<i64> = (0..n).map(|v| bounds.upper(v) as i64).collect();
    let tight = (0..n).filter(|&v| lower[v] == upper[v]).fold(0u64, |m, v| m | 1 << v);

    for s in 0..=mg.all {
        let rest = mg.all & !s;
        let f_s: i64 = Bits(s).map(|v| upper[v]).sum();
        // excess[v] = d_{G−S}(v) − g(v)
        let excess: Vec<i64> = (0..n).map(|v| mg.degree_in(v, rest) as i64 - lower[v]).collect();

        // every submask T of `rest`, including the empty one
        let mut t = rest;
        loop {
            let base = f_s + Bits(t).map(|v| excess[v]).sum::<i64>();
            // q(S,T) ≤ number of vertices left, so large bases cannot fail
            if base < (rest & !t).count_ones() as i64 + 1 && base - odd_components(&mg, rest & !t, t, tight, &upper) < 0
            {
                return Ok(false);
            }
            if t == 0 {
                break;
            }
            t = (t - 1) & rest;
        }
    }
    Ok(true)
}

/// q(S,T): components of the subgraph induced by `remaining` that are tight
/// (g ≡ f) with f(C) + e_G(C, T) odd.
fn odd_components(mg: &MaskGraph, remaining: u64, t: u64, tight: u64, upper: &[i64]) -> i64 {
    let mut unvisited = remaining;
    let mut count = 0;
    while unvisited != 0 {
        let root = unvisited.trailing_zeros() as usize;
        let mut comp = 1u64 << root;
        let mut frontier = comp;
        while frontier != 0 {
            let mut next = 0u64;
            for v in Bits(frontier) {
                next |= mg.nbr[v] & remaining;
            }
            frontier = next & !comp;
            comp |= frontier;
        }
        unvisited &= !comp;
        if comp & !tight != 0 {
            continue;
        }
        let parity: i64 = Bits(comp).map(|v| upper[v] + mg.degree_in(v, t) as i64).sum();
        if parity % 2 == 1 {
            count += 1;
        }
    }
    count
}

#[cfg(test)]
mod tests {
    use super::*;

    fn perfect(g: &Graph) -> bool {
        let one = FactorBounds::constant(1, 1).unwrap();
        has_gf_factor_lovasz(g, &one, &Limits::default()).unwrap()
    }

    #[test]
    fn matching_examples() {
        assert!(perfect(&Graph::complete(2)));
        assert!(!perfect(&Graph::star(3)));
        assert!(!perfect(&Graph::cycle(5)));
        assert!(perfect(&Graph::cycle(6)));
        assert!(!perfect(&Graph::complete(7)));
        assert!(perfect(&Graph::complete(8)));
    }

    #[test]
    fn two_factor_of_cycle() {
        let two = FactorBounds::constant(2, 2).unwrap();
        let lim = Limits::default();
        assert!(has_gf_factor_lovasz(&Graph::cycle(7), &two, &lim).unwrap());
        assert!(!has_gf_factor_lovasz(&Graph::path(4), &two, &lim).unwrap());
        let g = Graph::complete(3).disjoint_union(&Graph::complete(3));
        assert!(has_gf_factor_lovasz(&g, &two, &lim).unwrap());
    }

    #[test]
    fn size_guard() {
        let one = FactorBounds::constant(1, 1).unwrap();
        assert!(matches!(
            has_gf_factor_lovasz(&Graph::complete(13), &one, &Limits::default()),
            Err(OracleError::SizeGuard { n: 13, limit: 12, .. })
        ));
    }
}
