//! Odd-hole / odd-antihole search and the perfectness decision built on it.

use super::twins::{hole_prune, twin_reduce};
use super::SimpleGraph;
use crate::error::NcError;

/// Vertex-count guard for the induced-path extension search.
pub const DEFAULT_HOLE_GUARD: usize = 48;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum HoleKind {
    Hole,
    Antihole,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HoleWitness {
    pub vertices: Vec<usize>,
    pub kind: HoleKind,
}

/// Finds an induced odd cycle of length >= 5 in the graph or, failing that,
/// in its complement. Vertices in the witness are in cycle order.
pub fn find_odd_hole_or_antihole(g: &SimpleGraph) -> Result<Option<HoleWitness>, NcError> {
    if g.n() > DEFAULT_HOLE_GUARD {
        return Err(NcError::CostGuard {
            what: "hole search vertex count",
            got: g.n(),
            limit: DEFAULT_HOLE_GUARD,
        });
    }
    if let Some(cycle) = find_odd_hole(g) {
        return Ok(Some(HoleWitness {
            vertices: cycle,
            kind: HoleKind::Hole,
        }));
    }
    if let Some(cycle) = find_odd_hole(&g.complement()) {
        return Ok(Some(HoleWitness {
            vertices: cycle,
            kind: HoleKind::Antihole,
        }));
    }
    Ok(None)
}

/// Induced-path extension with parity tracking. The lowest-indexed cycle
/// vertex anchors each search.
fn find_odd_hole(g: &SimpleGraph) -> Option<Vec<usize>> {
    let n = g.n();
    let mut path: Vec<usize> = Vec::new();
    for start in 0..n {
        path.clear();
        path.push(start);
        if let Some(cycle) = extend(g, start, &mut path) {
            return Some(cycle);
        }
    }
    None
}

fn extend(g: &SimpleGraph, start: usize, path: &mut Vec<usize>) -> Option<Vec<usize>> {
    let last = *path.last().unwrap();
    for u in g.neighbors(last) {
        if u <= start || path.contains(&u) {
            continue;
        }
        // u must see only the path's last vertex (v0 only when closing)
        let interior = if path.len() >= 2 {
            &path[1..path.len() - 1]
        } else {
            &[][..]
        };
        if interior.iter().any(|&p| g.has_edge(u, p)) {
            continue;
        }
        if path.len() >= 2 && g.has_edge(u, start) {
            // closes a cycle of |path|+1 vertices
            let len = path.len() + 1;
            if len >= 5 && len % 2 == 1 {
                let mut cycle = path.clone();
                cycle.push(u);
                return Some(cycle);
            }
            // a chord to v0 forbids extending through u
            continue;
        }
        path.push(u);
        if let Some(c) = extend(g, start, path) {
            return Some(c);
        }
        path.pop();
    }
    None
}

pub fn is_perfect_with_guard(g: &SimpleGraph, guard: usize) -> Result<bool, NcError> {
    let reduced = twin_reduce(g).final_graph;
    let pruned = hole_prune(&reduced);
    if pruned.n() > guard {
        return Err(NcError::CostGuard {
            what: "reduced graph vertex count",
            got: pruned.n(),
            limit: guard,
        });
    }
    Ok(find_odd_hole_or_antihole(&pruned)?.is_none())
}

/// Strong-perfect-graph-theorem oracle: perfect iff the twin-reduced,
/// pruned graph has no odd hole and no odd antihole.
pub fn is_perfect(g: &SimpleGraph) -> Result<bool, NcError> {
    is_perfect_with_guard(g, DEFAULT_HOLE_GUARD)
}

#[cfg(test)]
mod tests {
    use super::super::testutil::{complete_graph, cycle_graph, path_graph};
    use super::*;

    #[test]
    fn c5_is_a_hole() {
        let w = find_odd_hole_or_antihole(&cycle_graph(5)).unwrap().unwrap();
        assert_eq!(w.kind, HoleKind::Hole);
        assert_eq!(w.vertices.len(), 5);
    }

    #[test]
    fn c6_has_no_odd_hole_or_antihole() {
        assert!(find_odd_hole_or_antihole(&cycle_graph(6))
            .unwrap()
            .is_none());
    }

    #[test]
    fn c7_complement_is_an_antihole() {
        let g = cycle_graph(7).complement();
        let w = find_odd_hole_or_antihole(&g).unwrap().unwrap();
        assert_eq!(w.kind, HoleKind::Antihole);
        assert_eq!(w.vertices.len(), 7);
    }

    #[test]
    fn witness_is_an_induced_odd_cycle() {
        let mut g = cycle_graph(9);
        g.add_edge(0, 4); // splits C9 into shorter cycles
        if let Some(w) = find_odd_hole_or_antihole(&g).unwrap() {
            let target = match w.kind {
                HoleKind::Hole => g.clone(),
                HoleKind::Antihole => g.complement(),
            };
            let k = w.vertices.len();
            assert!(k >= 5 && k % 2 == 1);
            for i in 0..k {
                for j in (i + 1)..k {
                    let expect = j - i == 1 || (i == 0 && j == k - 1);
                    assert_eq!(
                        target.has_edge(w.vertices[i], w.vertices[j]),
                        expect,
                        "cycle positions {i},{j}"
                    );
                }
            }
        } else {
            panic!("C9 with one chord still contains an odd hole");
        }
    }

    #[test]
    fn perfectness_basics() {
        assert!(is_perfect(&path_graph(6)).unwrap());
        assert!(is_perfect(&complete_graph(8)).unwrap());
        assert!(!is_perfect(&cycle_graph(5)).unwrap());
        assert!(is_perfect(&cycle_graph(6)).unwrap());
        assert!(!is_perfect(&cycle_graph(7).complement()).unwrap());
        // any bipartite graph is perfect
        let mut b = SimpleGraph::new(6);
        for a in 0..3 {
            for c in 3..6 {
                b.add_edge(a, c);
            }
        }
        assert!(is_perfect(&b).unwrap());
    }
}
