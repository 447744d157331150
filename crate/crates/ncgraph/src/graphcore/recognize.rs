//! Split, chordal and claw-free recognition.

use super::SimpleGraph;

/// Degree-sequence splittance criterion (Hammer–Simeone): with degrees
/// sorted descending, the graph is split iff
/// sum_{i<=m} d_i = m(m-1) + sum_{i>m} d_i for m = max{i : d_i >= i-1}.
pub fn is_split(g: &SimpleGraph) -> bool {
    let n = g.n();
    if n == 0 {
        return true;
    }
    let mut degs = g.degree_sequence();
    degs.sort_unstable_by(|a, b| b.cmp(a));
    let mut m = 0;
    for i in 1..=n {
        if degs[i - 1] >= i - 1 {
            m = i;
        } else {
            break;
        }
    }
    let lhs: usize = degs[..m].iter().sum();
    let rhs: usize = m * (m - 1) + degs[m..].iter().sum::<usize>();
    lhs == rhs
}

/// Chordality via maximum-cardinality search followed by perfect
/// elimination ordering verification.
pub fn is_chordal(g: &SimpleGraph) -> bool {
    let n = g.n();
    if n == 0 {
        return true;
    }
    // MCS: repeatedly visit the unvisited vertex with the most visited
    // neighbours
    let mut weight = vec![0usize; n];
    let mut visited = vec![false; n];
    let mut order = Vec::with_capacity(n);
    for _ in 0..n {
        let v = (0..n)
            .filter(|&v| !visited[v])
            .max_by_key(|&v| weight[v])
            .unwrap();
        visited[v] = true;
        order.push(v);
        for u in g.neighbors(v) {
            if !visited[u] {
                weight[u] += 1;
            }
        }
    }
    // reverse MCS order is a PEO iff the graph is chordal: check that the
    // earlier-visited neighbours of each vertex form a clique
    let mut pos = vec![0usize; n];
    for (i, &v) in order.iter().enumerate() {
        pos[v] = i;
    }
    for &v in &order {
        let earlier: Vec<usize> = g.neighbors(v).filter(|&u| pos[u] < pos[v]).collect();
        for (i, &a) in earlier.iter().enumerate() {
            for &b in earlier.iter().skip(i + 1) {
                if !g.has_edge(a, b) {
                    return false;
                }
            }
        }
    }
    true
}

/// True iff no vertex has three pairwise non-adjacent neighbours.
pub fn is_claw_free(g: &SimpleGraph) -> bool {
    let n = g.n();
    if n == 0 {
        return true;
    }
    let words = g.row(0).len();
    for v in 0..n {
        let nv: Vec<usize> = g.neighbors(v).collect();
        for (i, &a) in nv.iter().enumerate() {
            for &b in nv.iter().skip(i + 1) {
                if g.has_edge(a, b) {
                    continue;
                }
                // any third neighbour of v non-adjacent to both a and b?
                for w in 0..words {
                    let mut cand = g.row(v)[w] & !g.row(a)[w] & !g.row(b)[w];
                    if a / 64 == w {
                        cand &= !(1u64 << (a % 64));
                    }
                    if b / 64 == w {
                        cand &= !(1u64 << (b % 64));
                    }
                    if cand != 0 {
                        return false;
                    }
                }
            }
        }
    }
    true
}
