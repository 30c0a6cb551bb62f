//! Simple undirected graphs on at most 62 vertices, stored as bitset rows.

pub(crate) mod enumerate;
mod graph6;
mod metrics;

use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

pub use enumerate::{connected_labeled_count, enumerate_connected_graphs, ConnectedGraphs};
pub use metrics::{
    chromatic_number, cut_vertices, diameter, has_cut_vertex, is_triangle_free,
    local_vertex_connectivity, metrics, vertex_connectivity, Diameter, GraphMetrics,
};

/// Largest vertex count representable (graph6 short form).
pub const MAX_VERTICES: usize = 62;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("vertex count {0} outside supported range 2..={MAX_VERTICES}")]
    VertexCount(usize),
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("graph6 parse error at byte {offset}: {reason}")]
    Graph6 { offset: usize, reason: String },
    #[error("graph is disconnected")]
    Disconnected,
    #[error("enumeration supports 2 <= n <= {max}, got {n}")]
    EnumerationRange { n: usize, max: usize },
    #[error("edge masks need C(n,2) <= 64, got n = {0}")]
    MaskTooWide(usize),
}

/// An undirected edge with `u < v`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Edge {
    pub u: usize,
    pub v: usize,
}

impl Edge {
    /// Normalizes endpoint order. Panics on a loop.
    pub fn new(a: usize, b: usize) -> Self {
        assert_ne!(a, b, "an edge needs two distinct endpoints");
        if a < b {
            Edge { u: a, v: b }
        } else {
            Edge { u: b, v: a }
        }
    }
}

impl fmt::Display for Edge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}-{}", self.u, self.v)
    }
}

#[inline]
pub(crate) const fn bit(v: usize) -> u64 {
    1u64 << v
}

#[inline]
pub(crate) const fn low_bits(n: usize) -> u64 {
    if n >= 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

/// Iterates the set bits of a mask in ascending order.
#[derive(Debug, Clone, Copy)]
pub struct Bits(pub u64);

impl Iterator for Bits {
    type Item = usize;

    #[inline]
    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            None
        } else {
            let i = self.0.trailing_zeros() as usize;
            self.0 &= self.0 - 1;
            Some(i)
        }
    }
}

/// Simple undirected graph. `adj[v]` holds the neighbor set of `v`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    adj: Vec<u64>,
    m: usize,
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph({})", self.to_graph6())
    }
}

impl Graph {
    /// The edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Result<Self, GraphError> {
        if !(2..=MAX_VERTICES).contains(&n) {
            return Err(GraphError::VertexCount(n));
        }
        Ok(Graph {
            n,
            adj: vec![0; n],
            m: 0,
        })
    }

    pub fn complete(n: usize) -> Result<Self, GraphError> {
        let mut g = Graph::empty(n)?;
        let all = low_bits(n);
        for v in 0..n {
            g.adj[v] = all & !bit(v);
        }
        g.m = n * (n - 1) / 2;
        Ok(g)
    }

    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut g = Graph::empty(n)?;
        for (a, b) in edges {
            g.add_edge(a, b)?;
        }
        Ok(g)
    }

    /// Builds the graph whose edge set is the set bits of `mask`, where bit
    /// `i` is the `i`-th pair of `K_n` in lexicographic order.
    pub fn from_mask(n: usize, mask: u64) -> Result<Self, GraphError> {
        if crate::choose2(n) > 64 {
            return Err(GraphError::MaskTooWide(n));
        }
        let mut g = Graph::empty(n)?;
        let mut i = 0;
        for u in 0..n {
            for v in u + 1..n {
                if mask & bit(i) != 0 {
                    g.adj[u] |= bit(v);
                    g.adj[v] |= bit(u);
                    g.m += 1;
                }
                i += 1;
            }
        }
        Ok(g)
    }

    /// Inverse of [`Graph::from_mask`].
    pub fn edge_mask(&self) -> Result<u64, GraphError> {
        if crate::choose2(self.n) > 64 {
            return Err(GraphError::MaskTooWide(self.n));
        }
        let mut mask = 0;
        let mut i = 0;
        for u in 0..self.n {
            for v in u + 1..self.n {
                if self.has_edge(u, v) {
                    mask |= bit(i);
                }
                i += 1;
            }
        }
        Ok(mask)
    }

    fn check_vertex(&self, v: usize) -> Result<(), GraphError> {
        if v >= self.n {
            Err(GraphError::VertexOutOfRange { vertex: v, n: self.n })
        } else {
            Ok(())
        }
    }

    /// Adds `{a, b}`; returns whether the edge is new.
    pub fn add_edge(&mut self, a: usize, b: usize) -> Result<bool, GraphError> {
        self.check_vertex(a)?;
        self.check_vertex(b)?;
        if a == b {
            return Err(GraphError::SelfLoop(a));
        }
        if self.adj[a] & bit(b) != 0 {
            return Ok(false);
        }
        self.adj[a] |= bit(b);
        self.adj[b] |= bit(a);
        self.m += 1;
        Ok(true)
    }

    /// Removes `{a, b}`; returns whether it was present.
    pub fn remove_edge(&mut self, a: usize, b: usize) -> Result<bool, GraphError> {
        self.check_vertex(a)?;
        self.check_vertex(b)?;
        if a == b || self.adj[a] & bit(b) == 0 {
            return Ok(false);
        }
        self.adj[a] &= !bit(b);
        self.adj[b] &= !bit(a);
        self.m -= 1;
        Ok(true)
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn m(&self) -> usize {
        self.m
    }

    /// Bitset of all vertices.
    #[inline]
    pub fn vertex_mask(&self) -> u64 {
        low_bits(self.n)
    }

    #[inline]
    pub fn neighbors(&self, v: usize) -> u64 {
        self.adj[v]
    }

    #[inline]
    pub fn has_edge(&self, a: usize, b: usize) -> bool {
        a < self.n && b < self.n && self.adj[a] & bit(b) != 0
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    /// All edges in lexicographic order.
    pub fn edges(&self) -> Vec<Edge> {
        let mut out = Vec::with_capacity(self.m);
        for u in 0..self.n {
            for v in Bits(self.adj[u] & !low_bits(u + 1)) {
                out.push(Edge { u, v });
            }
        }
        out
    }

    /// Position of `e` in [`Graph::edges`], if present.
    pub fn edge_index(&self, e: Edge) -> Option<usize> {
        if !self.has_edge(e.u, e.v) {
            return None;
        }
        let before: usize = (0..e.u)
            .map(|u| (self.adj[u] & !low_bits(u + 1)).count_ones() as usize)
            .sum();
        let within = (self.adj[e.u] & !low_bits(e.u + 1) & low_bits(e.v)).count_ones() as usize;
        Some(before + within)
    }

    /// The complement: `{u, v}` is an edge iff it is not an edge of `self`.
    pub fn complement(&self) -> Graph {
        let all = self.vertex_mask();
        let adj: Vec<u64> = (0..self.n)
            .map(|v| all & !self.adj[v] & !bit(v))
            .collect();
        Graph {
            n: self.n,
            adj,
            m: crate::choose2(self.n) - self.m,
        }
    }

    /// Vertices reachable from `start` inside `within` (which must contain it).
    pub fn reach_within(&self, start: usize, within: u64) -> u64 {
        let mut seen = bit(start);
        let mut frontier = seen;
        while frontier != 0 {
            let mut next = 0;
            for v in Bits(frontier) {
                next |= self.adj[v];
            }
            next &= within & !seen;
            seen |= next;
            frontier = next;
        }
        seen
    }

    /// Whether the subgraph induced by `set` is connected (empty set counts).
    pub fn induces_connected(&self, set: u64) -> bool {
        if set == 0 {
            return true;
        }
        self.reach_within(set.trailing_zeros() as usize, set) == set
    }

    /// Connected components of the subgraph induced by `within`, ordered by
    /// lowest vertex.
    pub fn components_within(&self, within: u64) -> Vec<u64> {
        let mut rest = within;
        let mut out = Vec::new();
        while rest != 0 {
            let c = self.reach_within(rest.trailing_zeros() as usize, rest);
            out.push(c);
            rest &= !c;
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.induces_connected(self.vertex_mask())
    }

    pub fn max_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).max().unwrap_or(0)
    }

    pub fn min_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).min().unwrap_or(0)
    }

    /// BFS spanning tree from vertex 0, scanning neighbors in ascending order.
    /// Edges come back sorted.
    pub fn spanning_tree(&self) -> Result<Vec<Edge>, GraphError> {
        let tree = self.bfs_tree_within(0, self.vertex_mask());
        if tree.len() + 1 != self.n {
            return Err(GraphError::Disconnected);
        }
        Ok(tree)
    }

    /// BFS tree of the component of `root` inside `within`, sorted edges.
    pub fn bfs_tree_within(&self, root: usize, within: u64) -> Vec<Edge> {
        let mut seen = bit(root);
        let mut queue = std::collections::VecDeque::from([root]);
        let mut tree = Vec::new();
        while let Some(x) = queue.pop_front() {
            for y in Bits(self.adj[x] & within & !seen) {
                seen |= bit(y);
                tree.push(Edge::new(x, y));
                queue.push_back(y);
            }
        }
        tree.sort_unstable();
        tree
    }

    pub fn parse_graph6(text: &str) -> Result<Graph, GraphError> {
        graph6::parse(text)
    }

    pub fn to_graph6(&self) -> String {
        graph6::emit(self)
    }
}

impl fmt::Display for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_graph6())
    }
}

#[cfg(test)]
pub(crate) mod tests {
    use super::*;

    pub(crate) fn cycle(n: usize) -> Graph {
        Graph::from_edges(n, (0..n).map(|i| (i, (i + 1) % n))).unwrap()
    }

    pub(crate) fn path(n: usize) -> Graph {
        Graph::from_edges(n, (0..n - 1).map(|i| (i, i + 1))).unwrap()
    }

    #[test]
    fn degree_sum_is_twice_edge_count() {
        let g = Graph::from_edges(5, [(0, 1), (1, 2), (2, 0), (3, 4), (0, 4)]).unwrap();
        let sum: usize = (0..5).map(|v| g.degree(v)).sum();
        assert_eq!(sum, 2 * g.m());
        for u in 0..5 {
            assert!(!g.has_edge(u, u));
            for v in 0..5 {
                assert_eq!(g.has_edge(u, v), g.has_edge(v, u));
            }
        }
    }

    #[test]
    fn rejects_bad_construction() {
        assert_eq!(Graph::empty(1).unwrap_err(), GraphError::VertexCount(1));
        assert_eq!(Graph::empty(63).unwrap_err(), GraphError::VertexCount(63));
        let mut g = Graph::empty(3).unwrap();
        assert_eq!(g.add_edge(1, 1).unwrap_err(), GraphError::SelfLoop(1));
        assert!(matches!(
            g.add_edge(0, 3),
            Err(GraphError::VertexOutOfRange { vertex: 3, n: 3 })
        ));
        assert!(g.add_edge(0, 2).unwrap());
        assert!(!g.add_edge(2, 0).unwrap());
        assert_eq!(g.m(), 1);
    }

    #[test]
    fn mask_round_trip_and_edge_index() {
        let g = Graph::from_mask(5, 0b10_1101_0011).unwrap();
        assert_eq!(g.edge_mask().unwrap(), 0b10_1101_0011);
        for (i, e) in g.edges().iter().enumerate() {
            assert_eq!(g.edge_index(*e), Some(i));
        }
        assert_eq!(g.edge_index(Edge::new(0, 1)), Some(0));
        assert!(Graph::from_mask(12, 0).is_err());
    }

    #[test]
    fn complement_of_complete_is_edgeless() {
        for n in 2..8 {
            let c = Graph::complete(n).unwrap().complement();
            assert_eq!(c.m(), 0);
            assert_eq!(c, Graph::empty(n).unwrap());
        }
    }

    #[test]
    fn complement_is_an_involution() {
        for n in 2..=6 {
            for g in enumerate_connected_graphs(n, None).unwrap() {
                let c = g.complement();
                assert_eq!(c.m() + g.m(), crate::choose2(n));
                assert_eq!(c.complement(), g);
            }
        }
    }

    fn isomorphic_by_brute_force(a: &Graph, b: &Graph) -> bool {
        fn rec(a: &Graph, b: &Graph, perm: &mut Vec<usize>, used: u64) -> bool {
            let k = perm.len();
            if k == a.n() {
                return true;
            }
            for img in 0..a.n() {
                if used & bit(img) != 0 {
                    continue;
                }
                if (0..k).all(|j| a.has_edge(j, k) == b.has_edge(perm[j], img)) {
                    perm.push(img);
                    if rec(a, b, perm, used | bit(img)) {
                        return true;
                    }
                    perm.pop();
                }
            }
            false
        }
        a.n() == b.n() && a.m() == b.m() && rec(a, b, &mut Vec::new(), 0)
    }

    #[test]
    fn five_cycle_is_self_complementary() {
        let c5 = cycle(5);
        let comp = c5.complement();
        assert_ne!(comp, c5);
        assert!(isomorphic_by_brute_force(&c5, &comp));
        assert!(!isomorphic_by_brute_force(&c5, &path(5)));
    }

    #[test]
    fn connectivity_basics() {
        assert!(Graph::complete(2).unwrap().is_connected());
        assert!(!Graph::empty(2).unwrap().is_connected());
        let g = Graph::from_edges(5, [(0, 1), (2, 3), (3, 4)]).unwrap();
        assert_eq!(g.components_within(g.vertex_mask()), vec![0b00011, 0b11100]);
    }

    #[test]
    fn spanning_tree_of_tree_is_itself() {
        let t = Graph::from_edges(6, [(0, 3), (3, 1), (3, 2), (2, 4), (4, 5)]).unwrap();
        assert_eq!(t.spanning_tree().unwrap(), t.edges());
    }

    #[test]
    fn spanning_tree_of_k4_is_star_at_zero() {
        let k4 = Graph::complete(4).unwrap();
        assert_eq!(
            k4.spanning_tree().unwrap(),
            vec![Edge::new(0, 1), Edge::new(0, 2), Edge::new(0, 3)]
        );
    }

    #[test]
    fn spanning_tree_of_c5_follows_bfs_order() {
        // BFS from 0 visits 1 and 4, then 2 (from 1) and 3 (from 4).
        let tree = cycle(5).spanning_tree().unwrap();
        assert_eq!(
            tree,
            vec![Edge::new(0, 1), Edge::new(0, 4), Edge::new(1, 2), Edge::new(3, 4)]
        );
    }

    #[test]
    fn spanning_tree_requires_connectivity() {
        let g = Graph::from_edges(4, [(0, 1), (2, 3)]).unwrap();
        assert_eq!(g.spanning_tree().unwrap_err(), GraphError::Disconnected);
    }

    #[test]
    fn enumerated_trees_are_connected() {
        for n in 2..=6 {
            let trees: Vec<_> = enumerate_connected_graphs(n, Some(n - 1)).unwrap().collect();
            // Cayley: n^(n-2) labeled trees.
            assert_eq!(trees.len(), n.pow(n as u32 - 2));
            assert!(trees.iter().all(|t| t.is_connected() && t.spanning_tree().unwrap().len() == n - 1));
        }
    }
}
