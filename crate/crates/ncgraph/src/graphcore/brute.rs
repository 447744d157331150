//! Definitional brute-force oracles. Deliberately independent of the
//! recognition algorithms they cross-check: everything here works by
//! subset enumeration straight from the definitions, so it is only
//! suitable for small graphs.

use super::iso::is_isomorphic;
use super::SimpleGraph;

fn subsets_of_size(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(k);
    fn rec(n: usize, k: usize, start: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for v in start..n {
            cur.push(v);
            rec(n, k, v + 1, cur, out);
            cur.pop();
        }
    }
    rec(n, k, 0, &mut cur, &mut out);
    out
}

/// Does `g` contain an induced subgraph isomorphic to `pattern`?
pub fn contains_induced(g: &SimpleGraph, pattern: &SimpleGraph) -> bool {
    subsets_of_size(g.n(), pattern.n())
        .iter()
        .any(|s| is_isomorphic(&g.induced(s), pattern).unwrap())
}

/// Forbidden-subgraph split test: no induced 2K_2, C_4 or C_5.
pub fn is_split_brute(g: &SimpleGraph) -> bool {
    let two_k2 = SimpleGraph::from_edges(4, &[(0, 1), (2, 3)]);
    let c4 = SimpleGraph::from_edges(4, &[(0, 1), (1, 2), (2, 3), (3, 0)]);
    let c5 = SimpleGraph::from_edges(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)]);
    !contains_induced(g, &two_k2) && !contains_induced(g, &c4) && !contains_induced(g, &c5)
}

fn induced_is_cycle(g: &SimpleGraph, s: &[usize]) -> bool {
    let sub = g.induced(s);
    sub.n() >= 3 && sub.is_connected() && (0..sub.n()).all(|v| sub.degree(v) == 2)
}

/// Chordless cycle of length >= 4 anywhere in the graph?
pub fn has_chordless_cycle(g: &SimpleGraph) -> bool {
    for k in 4..=g.n() {
        if subsets_of_size(g.n(), k).iter().any(|s| induced_is_cycle(g, s)) {
            return true;
        }
    }
    false
}

/// Induced K_{1,3} anywhere in the graph?
pub fn has_claw_brute(g: &SimpleGraph) -> bool {
    let claw = SimpleGraph::from_edges(4, &[(0, 1), (0, 2), (0, 3)]);
    contains_induced(g, &claw)
}

/// Induced odd cycle of length >= 5 in g or its complement?
pub fn has_odd_hole_or_antihole_brute(g: &SimpleGraph) -> bool {
    let comp = g.complement();
    for k in (5..=g.n()).step_by(2) {
        for s in subsets_of_size(g.n(), k) {
            if induced_is_cycle(g, &s) || induced_is_cycle(&comp, &s) {
                return true;
            }
        }
    }
    false
}

pub fn clique_number(g: &SimpleGraph) -> usize {
    fn rec(g: &SimpleGraph, candidates: &[usize], size: usize, best: &mut usize) {
        if size + candidates.len() <= *best {
            return;
        }
        if candidates.is_empty() {
            *best = (*best).max(size);
            return;
        }
        for (i, &v) in candidates.iter().enumerate() {
            let next: Vec<usize> = candidates[i + 1..]
                .iter()
                .copied()
                .filter(|&u| g.has_edge(v, u))
                .collect();
            rec(g, &next, size + 1, best);
        }
        *best = (*best).max(size);
    }
    let all: Vec<usize> = (0..g.n()).collect();
    let mut best = 0;
    rec(g, &all, 0, &mut best);
    best
}

fn colorable(g: &SimpleGraph, k: usize, colors: &mut [usize], v: usize) -> bool {
    if v == g.n() {
        return true;
    }
    // symmetry break: only allow one brand-new colour
    let max_used = colors[..v].iter().copied().max().map_or(0, |m| m + 1);
    for c in 0..k.min(max_used + 1) {
        if g.neighbors(v).any(|u| u < v && colors[u] == c) {
            continue;
        }
        colors[v] = c;
        if colorable(g, k, colors, v + 1) {
            return true;
        }
    }
    false
}

pub fn chromatic_number(g: &SimpleGraph) -> usize {
    if g.n() == 0 {
        return 0;
    }
    let lo = clique_number(g);
    for k in lo..=g.n() {
        let mut colors = vec![0usize; g.n()];
        if colorable(g, k, &mut colors, 0) {
            return k;
        }
    }
    g.n()
}

/// Definition-level perfectness: clique number equals chromatic number on
/// every induced subgraph.
pub fn is_perfect_brute(g: &SimpleGraph) -> bool {
    let n = g.n();
    for mask in 1u64..(1 << n) {
        let s: Vec<usize> = (0..n).filter(|&v| mask & (1 << v) != 0).collect();
        let sub = g.induced(&s);
        if clique_number(&sub) != chromatic_number(&sub) {
            return false;
        }
    }
    true
}
