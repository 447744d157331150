//! Generic simple-graph engine: primitives, shape classification,
//! recognition algorithms, twin reduction, odd-hole search and small-graph
//! isomorphism.

mod brute;
mod enumerate;
mod holes;
mod iso;
mod recognize;
mod twins;

pub use brute::{
    chromatic_number, clique_number, contains_induced, has_chordless_cycle, has_claw_brute,
    has_odd_hole_or_antihole_brute, is_perfect_brute, is_split_brute,
};
pub use enumerate::graphs_up_to_iso;
pub use holes::{
    find_odd_hole_or_antihole, is_perfect, is_perfect_with_guard, HoleKind, HoleWitness,
    DEFAULT_HOLE_GUARD,
};
pub use iso::is_isomorphic;
pub use recognize::{is_chordal, is_claw_free, is_split};
pub use twins::{
    hole_prune, twin_reduce, twin_reduce_with_chooser, ReductionTrace, TwinKind, TwinStep,
};

const WORD_BITS: usize = 64;

/// Undirected simple graph with bitset adjacency rows and per-vertex labels.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SimpleGraph {
    n: usize,
    words: usize,
    labels: Vec<String>,
    rows: Vec<Vec<u64>>,
}

impl SimpleGraph {
    pub fn new(n: usize) -> SimpleGraph {
        let labels = (0..n).map(|i| i.to_string()).collect();
        SimpleGraph::with_labels(labels)
    }

    pub fn with_labels(labels: Vec<String>) -> SimpleGraph {
        let n = labels.len();
        let words = n.div_ceil(WORD_BITS);
        SimpleGraph {
            n,
            words,
            labels,
            rows: vec![vec![0u64; words]; n],
        }
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> SimpleGraph {
        let mut g = SimpleGraph::new(n);
        for &(a, b) in edges {
            g.add_edge(a, b);
        }
        g
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn label(&self, v: usize) -> &str {
        &self.labels[v]
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn set_label(&mut self, v: usize, label: String) {
        self.labels[v] = label;
    }

    pub fn add_edge(&mut self, a: usize, b: usize) {
        assert!(a != b, "no loops in a simple graph");
        assert!(a < self.n && b < self.n);
        self.rows[a][b / WORD_BITS] |= 1 << (b % WORD_BITS);
        self.rows[b][a / WORD_BITS] |= 1 << (a % WORD_BITS);
    }

    pub fn has_edge(&self, a: usize, b: usize) -> bool {
        self.rows[a][b / WORD_BITS] & (1 << (b % WORD_BITS)) != 0
    }

    pub fn degree(&self, v: usize) -> usize {
        self.rows[v].iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        let row = &self.rows[v];
        (0..self.n).filter(move |&u| row[u / WORD_BITS] & (1 << (u % WORD_BITS)) != 0)
    }

    pub(crate) fn row(&self, v: usize) -> &[u64] {
        &self.rows[v]
    }

    pub fn edge_count(&self) -> usize {
        self.rows
            .iter()
            .map(|r| r.iter().map(|w| w.count_ones() as usize).sum::<usize>())
            .sum::<usize>()
            / 2
    }

    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for a in 0..self.n {
            for b in (a + 1)..self.n {
                if self.has_edge(a, b) {
                    out.push((a, b));
                }
            }
        }
        out
    }

    pub fn degree_sequence(&self) -> Vec<usize> {
        (0..self.n).map(|v| self.degree(v)).collect()
    }

    pub fn complement(&self) -> SimpleGraph {
        let mut g = SimpleGraph::with_labels(self.labels.clone());
        for a in 0..self.n {
            for b in (a + 1)..self.n {
                if !self.has_edge(a, b) {
                    g.add_edge(a, b);
                }
            }
        }
        g
    }

    /// Induced subgraph on `verts`, in the given vertex order.
    pub fn induced(&self, verts: &[usize]) -> SimpleGraph {
        let labels = verts.iter().map(|&v| self.labels[v].clone()).collect();
        let mut g = SimpleGraph::with_labels(labels);
        for (i, &a) in verts.iter().enumerate() {
            for (j, &b) in verts.iter().enumerate().skip(i + 1) {
                if self.has_edge(a, b) {
                    g.add_edge(i, j);
                }
            }
        }
        g
    }

    /// Connected components as sorted vertex lists.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.n];
        let mut comps = Vec::new();
        for s in 0..self.n {
            if seen[s] {
                continue;
            }
            let mut comp = vec![s];
            seen[s] = true;
            let mut queue = vec![s];
            while let Some(v) = queue.pop() {
                for u in self.neighbors(v) {
                    if !seen[u] {
                        seen[u] = true;
                        comp.push(u);
                        queue.push(u);
                    }
                }
            }
            comp.sort_unstable();
            comps.push(comp);
        }
        comps
    }

    pub fn is_connected(&self) -> bool {
        assert!(self.n >= 1, "connectivity of the empty graph is undefined");
        self.components().len() == 1
    }

    /// Connectivity after discarding isolated vertices; vacuously true when
    /// every vertex is isolated.
    pub fn is_connected_ignoring_isolated(&self) -> bool {
        self.components()
            .iter()
            .filter(|c| c.len() > 1)
            .count()
            <= 1
    }

    pub fn has_triangle(&self) -> bool {
        for a in 0..self.n {
            for b in (a + 1)..self.n {
                if !self.has_edge(a, b) {
                    continue;
                }
                let common = self.rows[a]
                    .iter()
                    .zip(&self.rows[b])
                    .any(|(&x, &y)| x & y != 0);
                if common {
                    return true;
                }
            }
        }
        false
    }

    /// Two-coloring; None when an odd cycle obstructs.
    pub fn bipartition(&self) -> Option<(Vec<usize>, Vec<usize>)> {
        let mut color = vec![-1i8; self.n];
        for s in 0..self.n {
            if color[s] >= 0 {
                continue;
            }
            color[s] = 0;
            let mut queue = vec![s];
            while let Some(v) = queue.pop() {
                for u in self.neighbors(v) {
                    if color[u] < 0 {
                        color[u] = 1 - color[v];
                        queue.push(u);
                    } else if color[u] == color[v] {
                        return None;
                    }
                }
            }
        }
        let a = (0..self.n).filter(|&v| color[v] == 0).collect();
        let b = (0..self.n).filter(|&v| color[v] == 1).collect();
        Some((a, b))
    }
}

/// Textbook shape flags, each decided by direct checks.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct ShapeFlags {
    pub star: bool,
    pub path: bool,
    pub cycle: bool,
    pub complete: bool,
    pub complete_bipartite: bool,
    pub triangle_free: bool,
    pub unicyclic: bool,
    pub eulerian: bool,
}

pub fn classify_shape(g: &SimpleGraph) -> ShapeFlags {
    assert!(g.n() >= 1);
    let n = g.n();
    let m = g.edge_count();
    let comps = g.components().len();
    let connected = comps == 1;
    let degs = g.degree_sequence();
    let max_deg = degs.iter().copied().max().unwrap_or(0);

    let star = n >= 2 && connected && m == n - 1 && max_deg == n - 1;
    let path = connected && m == n.saturating_sub(1) && max_deg <= 2;
    let cycle = n >= 3 && connected && degs.iter().all(|&d| d == 2);
    let complete = m == n * (n - 1) / 2;
    let complete_bipartite = n >= 2
        && connected
        && match g.bipartition() {
            Some((a, b)) => !a.is_empty() && !b.is_empty() && m == a.len() * b.len(),
            None => false,
        };
    let triangle_free = !g.has_triangle();
    // cyclomatic number: one independent cycle means exactly one cycle
    let unicyclic = m + comps == n + 1;
    let eulerian = connected && degs.iter().all(|&d| d % 2 == 0);

    ShapeFlags {
        star,
        path,
        cycle,
        complete,
        complete_bipartite,
        triangle_free,
        unicyclic,
        eulerian,
    }
}

#[cfg(test)]
pub(crate) mod testutil {
    use super::SimpleGraph;

    pub fn star_graph(leaves: usize) -> SimpleGraph {
        let mut g = SimpleGraph::new(leaves + 1);
        for i in 1..=leaves {
            g.add_edge(0, i);
        }
        g
    }

    pub fn cycle_graph(n: usize) -> SimpleGraph {
        let mut g = SimpleGraph::new(n);
        for i in 0..n {
            g.add_edge(i, (i + 1) % n);
        }
        g
    }

    pub fn path_graph(n: usize) -> SimpleGraph {
        let mut g = SimpleGraph::new(n);
        for i in 1..n {
            g.add_edge(i - 1, i);
        }
        g
    }

    pub fn complete_graph(n: usize) -> SimpleGraph {
        let mut g = SimpleGraph::new(n);
        for a in 0..n {
            for b in (a + 1)..n {
                g.add_edge(a, b);
            }
        }
        g
    }
}

#[cfg(test)]
mod tests {
    use super::testutil::*;
    use super::*;

    #[test]
    fn connectivity_basics() {
        assert!(path_graph(3).is_connected());
        let two_k2 = SimpleGraph::from_edges(4, &[(0, 1), (2, 3)]);
        assert!(!two_k2.is_connected());
        assert!(SimpleGraph::new(1).is_connected());
    }

    #[test]
    fn shape_star_k16() {
        let f = classify_shape(&star_graph(6));
        assert!(f.star && f.triangle_free && f.complete_bipartite);
        assert!(!f.path);
    }

    #[test]
    fn shape_c3() {
        let f = classify_shape(&cycle_graph(3));
        assert!(f.cycle && f.complete && f.unicyclic && f.eulerian);
    }

    #[test]
    fn shape_p3() {
        let f = classify_shape(&path_graph(3));
        assert!(f.star && f.path && f.triangle_free && f.complete_bipartite);
        assert!(!f.cycle && !f.eulerian);
    }

    #[test]
    fn complement_and_induced() {
        let g = path_graph(4);
        let c = g.complement();
        assert_eq!(c.edge_count(), 6 - 3);
        assert!(c.has_edge(0, 3));
        let sub = g.induced(&[0, 1, 2]);
        assert_eq!(sub.edges(), vec![(0, 1), (1, 2)]);
    }
}
