//! Twin reduction and the pruning rules used before hole search.

use super::SimpleGraph;
use std::collections::HashMap;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TwinKind {
    Open,
    Closed,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TwinStep {
    pub kept: usize,
    pub removed: usize,
    pub kind: TwinKind,
}

/// Record of a complete twin reduction: the removal steps (in original
/// vertex indices), the twin-free final graph and the map from each
/// original vertex to its surviving representative.
#[derive(Debug, Clone)]
pub struct ReductionTrace {
    pub steps: Vec<TwinStep>,
    pub final_graph: SimpleGraph,
    /// original vertex -> original index of its surviving representative
    pub representative: Vec<usize>,
    /// original index of each final-graph vertex
    pub survivors: Vec<usize>,
}

struct Work {
    n: usize,
    words: usize,
    rows: Vec<Vec<u64>>,
    alive: Vec<bool>,
}

impl Work {
    fn new(g: &SimpleGraph) -> Work {
        let n = g.n();
        let words = n.div_ceil(64);
        let rows = (0..n).map(|v| g.row(v).to_vec()).collect();
        Work {
            n,
            words,
            rows,
            alive: vec![true; n],
        }
    }

    fn remove(&mut self, v: usize) {
        self.alive[v] = false;
        let (w, b) = (v / 64, 1u64 << (v % 64));
        for row in &mut self.rows {
            row[w] &= !b;
        }
        self.rows[v] = vec![0; self.words];
    }

    fn open_key(&self, v: usize) -> Vec<u64> {
        self.rows[v].clone()
    }

    fn closed_key(&self, v: usize) -> Vec<u64> {
        let mut k = self.rows[v].clone();
        k[v / 64] |= 1u64 << (v % 64);
        k
    }

    fn adjacent(&self, a: usize, b: usize) -> bool {
        self.rows[a][b / 64] & (1u64 << (b % 64)) != 0
    }

    fn finish(self, g: &SimpleGraph, steps: Vec<TwinStep>) -> ReductionTrace {
        let survivors: Vec<usize> = (0..self.n).filter(|&v| self.alive[v]).collect();
        let mut final_graph = SimpleGraph::with_labels(
            survivors.iter().map(|&v| g.label(v).to_string()).collect(),
        );
        for (i, &a) in survivors.iter().enumerate() {
            for (j, &b) in survivors.iter().enumerate().skip(i + 1) {
                if self.adjacent(a, b) {
                    final_graph.add_edge(i, j);
                }
            }
        }
        // resolve removal chains to surviving representatives
        let mut representative: Vec<usize> = (0..self.n).collect();
        for step in steps.iter().rev() {
            representative[step.removed] = representative[step.kept];
        }
        ReductionTrace {
            steps,
            final_graph,
            representative,
            survivors,
        }
    }
}

/// Deterministic twin reduction. Whole equivalence classes of twins are
/// collapsed per pass; the lowest-indexed vertex of a class is kept.
pub fn twin_reduce(g: &SimpleGraph) -> ReductionTrace {
    let mut work = Work::new(g);
    let mut steps = Vec::new();
    loop {
        let mut open_reps: HashMap<Vec<u64>, usize> = HashMap::new();
        let mut closed_reps: HashMap<Vec<u64>, usize> = HashMap::new();
        let mut removed_this_pass = Vec::new();
        for v in 0..work.n {
            if !work.alive[v] {
                continue;
            }
            let okey = work.open_key(v);
            if let Some(&r) = open_reps.get(&okey) {
                steps.push(TwinStep {
                    kept: r,
                    removed: v,
                    kind: TwinKind::Open,
                });
                removed_this_pass.push(v);
                continue;
            }
            let ckey = work.closed_key(v);
            if let Some(&r) = closed_reps.get(&ckey) {
                steps.push(TwinStep {
                    kept: r,
                    removed: v,
                    kind: TwinKind::Closed,
                });
                removed_this_pass.push(v);
                continue;
            }
            open_reps.insert(okey, v);
            closed_reps.insert(ckey, v);
        }
        if removed_this_pass.is_empty() {
            break;
        }
        for v in removed_this_pass {
            work.remove(v);
        }
    }
    work.finish(g, steps)
}

/// Twin reduction with an injectable choice of which twin pair to collapse
/// and which vertex of the pair to delete; used to exercise confluence.
/// `chooser(k)` must return a value in `0..k`.
pub fn twin_reduce_with_chooser(
    g: &SimpleGraph,
    chooser: &mut dyn FnMut(usize) -> usize,
) -> ReductionTrace {
    let mut work = Work::new(g);
    let mut steps = Vec::new();
    loop {
        let alive: Vec<usize> = (0..work.n).filter(|&v| work.alive[v]).collect();
        let mut pairs: Vec<(usize, usize, TwinKind)> = Vec::new();
        for (i, &a) in alive.iter().enumerate() {
            for &b in alive.iter().skip(i + 1) {
                if work.open_key(a) == work.open_key(b) {
                    pairs.push((a, b, TwinKind::Open));
                } else if work.closed_key(a) == work.closed_key(b) {
                    pairs.push((a, b, TwinKind::Closed));
                }
            }
        }
        if pairs.is_empty() {
            break;
        }
        let (a, b, kind) = pairs[chooser(pairs.len())];
        let (kept, removed) = if chooser(2) == 0 { (a, b) } else { (b, a) };
        steps.push(TwinStep {
            kept,
            removed,
            kind,
        });
        work.remove(removed);
    }
    work.finish(g, steps)
}

/// Iteratively deletes vertices that cannot lie on an induced odd cycle of
/// length >= 5 or the complement of one: degree < 2, codegree < 2, complete
/// neighbourhood, or edgeless non-neighbourhood. Runs to fixpoint.
pub fn hole_prune(g: &SimpleGraph) -> SimpleGraph {
    let mut work = Work::new(g);
    let mut alive_count = work.n;
    let mut changed = true;
    while changed {
        changed = false;
        for v in 0..work.n {
            if !work.alive[v] {
                continue;
            }
            if prunable(&work, v, alive_count) {
                work.remove(v);
                alive_count -= 1;
                changed = true;
            }
        }
    }
    let survivors: Vec<usize> = (0..work.n).filter(|&v| work.alive[v]).collect();
    let mut out = SimpleGraph::with_labels(
        survivors.iter().map(|&v| g.label(v).to_string()).collect(),
    );
    for (i, &a) in survivors.iter().enumerate() {
        for (j, &b) in survivors.iter().enumerate().skip(i + 1) {
            if work.adjacent(a, b) {
                out.add_edge(i, j);
            }
        }
    }
    out
}

fn prunable(work: &Work, v: usize, alive_count: usize) -> bool {
    let deg: usize = work.rows[v].iter().map(|w| w.count_ones() as usize).sum();
    if deg < 2 || alive_count - 1 - deg < 2 {
        return true;
    }
    let nv: Vec<usize> = (0..work.n)
        .filter(|&u| work.adjacent(v, u))
        .collect();
    // complete neighbourhood
    if nv
        .iter()
        .enumerate()
        .all(|(i, &a)| nv.iter().skip(i + 1).all(|&b| work.adjacent(a, b)))
    {
        return true;
    }
    // edgeless non-neighbourhood
    let non: Vec<usize> = (0..work.n)
        .filter(|&u| work.alive[u] && u != v && !work.adjacent(v, u))
        .collect();
    if non
        .iter()
        .enumerate()
        .all(|(i, &a)| non.iter().skip(i + 1).all(|&b| !work.adjacent(a, b)))
    {
        return true;
    }
    false
}

#[cfg(test)]
mod tests {
    use super::super::testutil::complete_graph;
    use super::*;
    use crate::graphcore::is_isomorphic;

    #[test]
    fn complete_graph_reduces_to_point() {
        let tr = twin_reduce(&complete_graph(6));
        assert_eq!(tr.final_graph.n(), 1);
        assert_eq!(tr.steps.len(), 5);
        assert!(tr.steps.iter().all(|s| s.kind == TwinKind::Closed));
        assert_eq!(tr.survivors, vec![0]);
        assert!(tr.representative.iter().all(|&r| r == 0));
    }

    #[test]
    fn star_plus_isolated_reduces_to_point() {
        // K_{1,7} plus 7 isolated vertices
        let mut g = SimpleGraph::new(15);
        for i in 1..=7 {
            g.add_edge(0, i);
        }
        let tr = twin_reduce(&g);
        assert_eq!(tr.final_graph.n(), 1);
    }

    #[test]
    fn final_graph_is_twin_free() {
        let mut g = SimpleGraph::new(6);
        for (a, b) in [(0, 1), (0, 2), (1, 2), (2, 3), (3, 4), (3, 5)] {
            g.add_edge(a, b);
        }
        let tr = twin_reduce(&g);
        let f = &tr.final_graph;
        for a in 0..f.n() {
            for b in (a + 1)..f.n() {
                let open: Vec<usize> =
                    f.neighbors(a).filter(|&u| u != b).collect();
                let open_b: Vec<usize> =
                    f.neighbors(b).filter(|&u| u != a).collect();
                assert!(
                    !(open == open_b),
                    "twins {a},{b} survive in the final graph"
                );
            }
        }
    }

    #[test]
    fn chooser_variant_matches_deterministic_up_to_iso() {
        let mut g = SimpleGraph::new(7);
        for (a, b) in [(0, 1), (1, 2), (2, 0), (2, 3), (3, 4), (4, 5), (5, 3), (6, 0)] {
            g.add_edge(a, b);
        }
        let det = twin_reduce(&g);
        let mut pick_last = |k: usize| k - 1;
        let alt = twin_reduce_with_chooser(&g, &mut pick_last);
        assert!(is_isomorphic(&det.final_graph, &alt.final_graph).unwrap());
    }

    #[test]
    fn prune_removes_isolated_vertices() {
        let mut g = SimpleGraph::new(8);
        // C5 plus 3 isolated vertices: prune must keep the C5 intact
        for i in 0..5 {
            g.add_edge(i, (i + 1) % 5);
        }
        let pruned = hole_prune(&g);
        assert_eq!(pruned.n(), 5);
        assert_eq!(pruned.edge_count(), 5);
    }

    #[test]
    fn prune_eats_trees() {
        let mut g = SimpleGraph::new(5);
        for i in 1..5 {
            g.add_edge(i - 1, i);
        }
        assert_eq!(hole_prune(&g).n(), 0);
    }
}
