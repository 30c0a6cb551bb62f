//! Degree, distance, connectivity and coloring invariants.

use std::cmp::Ordering;
use std::collections::VecDeque;

use serde::{Deserialize, Serialize};

use super::{bit, Bits, Graph};

/// Graph diameter; disconnected graphs have an infinite diameter.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Diameter {
    Finite(usize),
    Infinite,
}

impl Diameter {
    pub fn at_least(self, d: usize) -> bool {
        match self {
            Diameter::Finite(x) => x >= d,
            Diameter::Infinite => true,
        }
    }
}

impl PartialOrd for Diameter {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Diameter {
    fn cmp(&self, other: &Self) -> Ordering {
        match (self, other) {
            (Diameter::Finite(a), Diameter::Finite(b)) => a.cmp(b),
            (Diameter::Finite(_), Diameter::Infinite) => Ordering::Less,
            (Diameter::Infinite, Diameter::Finite(_)) => Ordering::Greater,
            (Diameter::Infinite, Diameter::Infinite) => Ordering::Equal,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphMetrics {
    pub max_degree: usize,
    pub min_degree: usize,
    pub diameter: Diameter,
    pub vertex_connectivity: usize,
    pub chromatic_number: usize,
    pub is_triangle_free: bool,
    pub has_cut_vertex: bool,
}

pub fn metrics(g: &Graph) -> GraphMetrics {
    GraphMetrics {
        max_degree: g.max_degree(),
        min_degree: g.min_degree(),
        diameter: diameter(g),
        vertex_connectivity: vertex_connectivity(g),
        chromatic_number: chromatic_number(g),
        is_triangle_free: is_triangle_free(g),
        has_cut_vertex: has_cut_vertex(g),
    }
}

fn eccentricity(g: &Graph, src: usize) -> Option<usize> {
    let all = g.vertex_mask();
    let mut seen = bit(src);
    let mut frontier = seen;
    let mut depth = 0;
    loop {
        let mut next = 0;
        for v in Bits(frontier) {
            next |= g.neighbors(v);
        }
        next &= !seen;
        if next == 0 {
            return (seen == all).then_some(depth);
        }
        seen |= next;
        frontier = next;
        depth += 1;
    }
}

/// All-pairs BFS.
pub fn diameter(g: &Graph) -> Diameter {
    let mut best = 0;
    for v in 0..g.n() {
        match eccentricity(g, v) {
            Some(e) => best = best.max(e),
            None => return Diameter::Infinite,
        }
    }
    Diameter::Finite(best)
}

pub fn is_triangle_free(g: &Graph) -> bool {
    g.edges()
        .iter()
        .all(|e| g.neighbors(e.u) & g.neighbors(e.v) == 0)
}

/// Articulation points via DFS low-points, ascending.
pub fn cut_vertices(g: &Graph) -> Vec<usize> {
    struct Dfs<'a> {
        g: &'a Graph,
        disc: Vec<usize>,
        low: Vec<usize>,
        timer: usize,
        cut: u64,
    }

    impl Dfs<'_> {
        fn visit(&mut self, v: usize, parent: Option<usize>) {
            self.timer += 1;
            self.disc[v] = self.timer;
            self.low[v] = self.timer;
            let mut children = 0;
            for w in Bits(self.g.neighbors(v)) {
                if self.disc[w] == 0 {
                    children += 1;
                    self.visit(w, Some(v));
                    self.low[v] = self.low[v].min(self.low[w]);
                    if parent.is_some() && self.low[w] >= self.disc[v] {
                        self.cut |= bit(v);
                    }
                } else if Some(w) != parent {
                    self.low[v] = self.low[v].min(self.disc[w]);
                }
            }
            if parent.is_none() && children > 1 {
                self.cut |= bit(v);
            }
        }
    }

    let mut dfs = Dfs {
        g,
        disc: vec![0; g.n()],
        low: vec![0; g.n()],
        timer: 0,
        cut: 0,
    };
    for v in 0..g.n() {
        if dfs.disc[v] == 0 {
            dfs.visit(v, None);
        }
    }
    Bits(dfs.cut).collect()
}

pub fn has_cut_vertex(g: &Graph) -> bool {
    !cut_vertices(g).is_empty()
}

/// Maximum number of internally vertex-disjoint `s`-`t` paths for a
/// nonadjacent pair, by unit-capacity augmenting paths on the split graph
/// (`x_in = 2x`, `x_out = 2x + 1`).
pub fn local_vertex_connectivity(g: &Graph, s: usize, t: usize) -> usize {
    assert!(s != t && !g.has_edge(s, t), "pair must be distinct and nonadjacent");
    let n = g.n();
    let size = 2 * n;
    let mut cap = vec![0i32; size * size];
    let idx = |a: usize, b: usize| a * size + b;
    for x in 0..n {
        let through = if x == s || x == t { n as i32 } else { 1 };
        cap[idx(2 * x, 2 * x + 1)] = through;
        for y in Bits(g.neighbors(x)) {
            cap[idx(2 * x + 1, 2 * y)] = 1;
        }
    }
    let (source, sink) = (2 * s + 1, 2 * t);
    let mut flow = 0;
    let mut prev = vec![usize::MAX; size];
    loop {
        prev.iter_mut().for_each(|p| *p = usize::MAX);
        prev[source] = source;
        let mut queue = VecDeque::from([source]);
        while let Some(a) = queue.pop_front() {
            if a == sink {
                break;
            }
            for b in 0..size {
                if prev[b] == usize::MAX && cap[idx(a, b)] > 0 {
                    prev[b] = a;
                    queue.push_back(b);
                }
            }
        }
        if prev[sink] == usize::MAX {
            return flow;
        }
        let mut b = sink;
        while b != source {
            let a = prev[b];
            cap[idx(a, b)] -= 1;
            cap[idx(b, a)] += 1;
            b = a;
        }
        flow += 1;
    }
}

/// Vertex connectivity: `n - 1` for complete graphs, `0` when disconnected,
/// otherwise the minimum local connectivity over nonadjacent pairs.
pub fn vertex_connectivity(g: &Graph) -> usize {
    let n = g.n();
    if g.m() == crate::choose2(n) {
        return n - 1;
    }
    if !g.is_connected() {
        return 0;
    }
    let mut best = g.min_degree();
    for s in 0..n {
        for t in Bits(!g.neighbors(s) & g.vertex_mask() & !super::low_bits(s + 1)) {
            best = best.min(local_vertex_connectivity(g, s, t));
            if best <= 1 {
                return best;
            }
        }
    }
    best
}

/// Exact chromatic number by iterated k-colorability backtracking.
pub fn chromatic_number(g: &Graph) -> usize {
    let n = g.n();
    if g.m() == 0 {
        return 1;
    }
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&v| std::cmp::Reverse(g.degree(v)));

    // Greedy coloring in that order bounds from above.
    let mut classes: Vec<u64> = Vec::new();
    for &v in &order {
        match classes.iter_mut().find(|c| **c & g.neighbors(v) == 0) {
            Some(c) => *c |= bit(v),
            None => classes.push(bit(v)),
        }
    }
    let upper = classes.len();

    let lower = greedy_clique(g).max(2);
    for k in lower..upper {
        let mut classes = vec![0u64; k];
        if colorable(g, &order, 0, &mut classes, 0) {
            return k;
        }
    }
    upper
}

fn greedy_clique(g: &Graph) -> usize {
    (0..g.n())
        .map(|start| {
            let mut clique = bit(start);
            let mut cand = g.neighbors(start);
            while cand != 0 {
                let v = Bits(cand)
                    .max_by_key(|&v| (g.neighbors(v) & cand).count_ones())
                    .expect("nonempty");
                clique |= bit(v);
                cand &= g.neighbors(v);
            }
            clique.count_ones() as usize
        })
        .max()
        .unwrap_or(1)
}

fn colorable(g: &Graph, order: &[usize], pos: usize, classes: &mut [u64], used: usize) -> bool {
    let Some(&v) = order.get(pos) else {
        return true;
    };
    let limit = (used + 1).min(classes.len());
    for c in 0..limit {
        if classes[c] & g.neighbors(v) == 0 {
            classes[c] |= bit(v);
            if colorable(g, order, pos + 1, classes, used.max(c + 1)) {
                return true;
            }
            classes[c] &= !bit(v);
        }
    }
    false
}
