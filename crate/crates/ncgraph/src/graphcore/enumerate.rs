//! Exhaustive enumeration of small graphs up to isomorphism, by vertex
//! augmentation with invariant-bucketed isomorphism rejection.

use super::iso::is_isomorphic;
use super::SimpleGraph;
use std::collections::HashMap;

type Invariant = (usize, Vec<usize>, Vec<usize>);

/// (edge count, sorted degree sequence, sorted per-vertex triangle counts)
fn invariant(g: &SimpleGraph) -> Invariant {
    let mut degs = g.degree_sequence();
    degs.sort_unstable();
    let mut tris: Vec<usize> = (0..g.n())
        .map(|v| {
            let nv: Vec<usize> = g.neighbors(v).collect();
            let mut t = 0;
            for (i, &a) in nv.iter().enumerate() {
                for &b in nv.iter().skip(i + 1) {
                    if g.has_edge(a, b) {
                        t += 1;
                    }
                }
            }
            t
        })
        .collect();
    tris.sort_unstable();
    (g.edge_count(), degs, tris)
}

/// All graphs on exactly `n` vertices, one representative per isomorphism
/// class. Counts for n = 1..8: 1, 2, 4, 11, 34, 156, 1044, 12346.
pub fn graphs_up_to_iso(n: usize) -> Vec<SimpleGraph> {
    assert!((1..=8).contains(&n), "enumeration is for small graphs only");
    let mut level: Vec<SimpleGraph> = vec![SimpleGraph::new(1)];
    for k in 1..n {
        let mut next: Vec<SimpleGraph> = Vec::new();
        let mut buckets: HashMap<Invariant, Vec<usize>> = HashMap::new();
        for g in &level {
            for mask in 0u64..(1 << k) {
                let mut h = SimpleGraph::new(k + 1);
                for (a, b) in g.edges() {
                    h.add_edge(a, b);
                }
                for v in 0..k {
                    if mask & (1 << v) != 0 {
                        h.add_edge(v, k);
                    }
                }
                let inv = invariant(&h);
                let bucket = buckets.entry(inv).or_default();
                if !bucket
                    .iter()
                    .any(|&i| is_isomorphic(&next[i], &h).unwrap())
                {
                    bucket.push(next.len());
                    next.push(h);
                }
            }
        }
        level = next;
    }
    level
}
