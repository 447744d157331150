//! Small-graph isomorphism by backtracking with degree-based pruning.

use super::SimpleGraph;
use crate::error::NcError;

pub const MAX_ISO_VERTICES: usize = 64;

/// Sort key refining vertices: degree plus sorted neighbour-degree multiset.
fn vertex_signature(g: &SimpleGraph, v: usize) -> (usize, Vec<usize>) {
    let mut nd: Vec<usize> = g.neighbors(v).map(|u| g.degree(u)).collect();
    nd.sort_unstable();
    (g.degree(v), nd)
}

pub fn is_isomorphic(g1: &SimpleGraph, g2: &SimpleGraph) -> Result<bool, NcError> {
    if g1.n() > MAX_ISO_VERTICES || g2.n() > MAX_ISO_VERTICES {
        return Err(NcError::CostGuard {
            what: "isomorphism vertex count",
            got: g1.n().max(g2.n()),
            limit: MAX_ISO_VERTICES,
        });
    }
    if g1.n() != g2.n() || g1.edge_count() != g2.edge_count() {
        return Ok(false);
    }
    let n = g1.n();
    if n == 0 {
        return Ok(true);
    }
    let sig1: Vec<_> = (0..n).map(|v| vertex_signature(g1, v)).collect();
    let sig2: Vec<_> = (0..n).map(|v| vertex_signature(g2, v)).collect();
    {
        let mut s1 = sig1.clone();
        let mut s2 = sig2.clone();
        s1.sort();
        s2.sort();
        if s1 != s2 {
            return Ok(false);
        }
    }
    // map g1 vertices in order of rarest signature first
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&a, &b| sig1[a].cmp(&sig1[b]));

    let mut mapping = vec![usize::MAX; n]; // g1 -> g2
    let mut used = vec![false; n];
    #[allow(clippy::too_many_arguments)]
    fn backtrack(
        g1: &SimpleGraph,
        g2: &SimpleGraph,
        sig1: &[(usize, Vec<usize>)],
        sig2: &[(usize, Vec<usize>)],
        order: &[usize],
        depth: usize,
        mapping: &mut [usize],
        used: &mut [bool],
    ) -> bool {
        if depth == order.len() {
            return true;
        }
        let v = order[depth];
        for w in 0..g2.n() {
            if used[w] || sig1[v] != sig2[w] {
                continue;
            }
            // adjacency consistency with vertices mapped so far
            let ok = order[..depth].iter().all(|&p| {
                g1.has_edge(v, p) == g2.has_edge(w, mapping[p])
            });
            if !ok {
                continue;
            }
            mapping[v] = w;
            used[w] = true;
            if backtrack(g1, g2, sig1, sig2, order, depth + 1, mapping, used) {
                return true;
            }
            mapping[v] = usize::MAX;
            used[w] = false;
        }
        false
    }
    Ok(backtrack(
        g1, g2, &sig1, &sig2, &order, 0, &mut mapping, &mut used,
    ))
}
