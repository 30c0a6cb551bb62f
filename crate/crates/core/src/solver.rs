//! Exact monochromatic connection numbers with certificates.
//!
//! Every connected graph has an extremal MC-coloring whose color classes are
//! trees, and any two nontrivial trees of it share at most one vertex. Such a
//! coloring uses `m - W` colors, where `W` sums `|V(T)| - 2` over its
//! nontrivial trees `T`. Since trees sharing at most one vertex cannot share
//! an edge, any spanning tree of `G[V(T)]` works equally well, so only the
//! vertex sets matter. [`mc_exact`] therefore searches for a minimum-waste
//! family of vertex sets, each inducing a connected subgraph, pairwise
//! meeting in at most one vertex, and together containing every nonadjacent
//! pair.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::coloring::{ColoringError, ColoringJson, EdgeColoring};
use crate::constructions::{few_missing_edges_coloring, spanning_tree_coloring, ConstructionError};
use crate::graph::{
    bit, chromatic_number, diameter, has_cut_vertex, is_triangle_free, low_bits,
    vertex_connectivity, Bits, Edge, Graph,
};

/// Default largest `n` the exact search accepts.
pub const EXACT_HARD_CAP: usize = 16;

/// Largest edge count the partition oracle accepts.
pub const ORACLE_MAX_EDGES: usize = 12;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SolverError {
    #[error("graph is disconnected")]
    Disconnected,
    #[error("exact solve refused: n = {n} exceeds cap {cap} (bounds: {lower} <= mc <= {upper})")]
    TooLarge {
        n: usize,
        cap: usize,
        lower: usize,
        upper: usize,
    },
    #[error("partition oracle refused: m = {0} exceeds {ORACLE_MAX_EDGES}")]
    OracleTooLarge(usize),
    #[error(transparent)]
    Construction(#[from] ConstructionError),
    #[error(transparent)]
    Coloring(#[from] ColoringError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum BoundKind {
    Lower,
    Upper,
    Exact,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Bound {
    pub name: String,
    pub kind: BoundKind,
    pub value: usize,
}

impl Bound {
    fn new(name: impl Into<String>, kind: BoundKind, value: usize) -> Self {
        Bound {
            name: name.into(),
            kind,
            value,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Method {
    FastPath,
    BranchAndBound,
    Oracle,
}

/// `mc(G)` with an achieving coloring and the bounds consulted.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct McCertificate {
    pub value: usize,
    pub coloring: EdgeColoring,
    pub method: Method,
    pub bound_trace: Vec<Bound>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CertificateJson {
    pub graph6: String,
    pub mc: usize,
    pub method: Method,
    pub bounds: Vec<Bound>,
    pub coloring: ColoringJson,
}

impl McCertificate {
    pub fn to_json(&self) -> CertificateJson {
        CertificateJson {
            graph6: self.coloring.graph().to_graph6(),
            mc: self.value,
            method: self.method,
            bounds: self.bound_trace.clone(),
            coloring: self.coloring.to_json(),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SolveOptions {
    /// Use the sufficient conditions for `mc = m - n + 2` and stop as soon as
    /// the incumbent meets an upper bound. Off means pure branch and bound.
    pub shortcuts: bool,
    pub hard_cap: usize,
}

impl Default for SolveOptions {
    fn default() -> Self {
        SolveOptions {
            shortcuts: true,
            hard_cap: EXACT_HARD_CAP,
        }
    }
}

impl SolveOptions {
    /// Branch and bound alone, with no closed-form shortcuts.
    pub fn pure() -> Self {
        SolveOptions {
            shortcuts: false,
            ..SolveOptions::default()
        }
    }
}

fn require_connected(g: &Graph) -> Result<(), SolverError> {
    if g.is_connected() {
        Ok(())
    } else {
        Err(SolverError::Disconnected)
    }
}

/// Best of the spanning-tree coloring (`m - n + 2`) and the few-missing-edges
/// coloring (`>= C(n,2) - 2p`), with the achieving coloring.
pub fn mc_lower_bound(g: &Graph) -> Result<(usize, EdgeColoring), SolverError> {
    require_connected(g)?;
    let tree = spanning_tree_coloring(g)?;
    let dense = few_missing_edges_coloring(g)?;
    let best = if dense.color_count() > tree.color_count() {
        dense
    } else {
        tree
    };
    Ok((best.color_count(), best))
}

/// Named upper bounds on `mc(G)`:
///
/// * `chromatic`: `m - n + chi`;
/// * `connectivity`: `m - n + kappa + 1`, as `G` is not `(kappa + 1)`-connected;
/// * `min-degree`: `m - n + delta`, or `min-degree-perfect` with
///   `m - n + delta + 1` (attained) when `G` is `delta`-perfectly-connected;
/// * `edge-window t=..`: `m - t + 1` for each `2 <= t <= n - 1` with
///   `C(n-t,2) + t(n-t) <= m <= C(n-t,2) + t(n-t) + t - 2`.
pub fn mc_upper_bounds(g: &Graph) -> Result<Vec<Bound>, SolverError> {
    require_connected(g)?;
    let (n, m) = (g.n(), g.m());
    let base = m + 2 - n; // m - n + 2 >= 1 for connected g; bounds add (x - 2).
    let mut out = vec![
        Bound::new("chromatic", BoundKind::Upper, base + chromatic_number(g) - 2),
        Bound::new("connectivity", BoundKind::Upper, base + vertex_connectivity(g) - 1),
    ];
    let delta = g.min_degree();
    if is_s_perfectly_connected(g, delta) {
        out.push(Bound::new("min-degree-perfect", BoundKind::Upper, base + delta - 1));
    } else {
        out.push(Bound::new("min-degree", BoundKind::Upper, base + delta - 2));
    }
    for t in 2..n {
        let lo = crate::choose2(n - t) + t * (n - t);
        if (lo..=lo + t - 2).contains(&m) {
            out.push(Bound::new(format!("edge-window t={t}"), BoundKind::Upper, m + 1 - t));
        }
    }
    Ok(out)
}

/// Whether some vertex `v` of degree `s` admits a partition of the other
/// vertices into `s` parts, each inducing a connected subgraph, every two
/// parts completely joined, and `v` having exactly one neighbor per part.
///
/// Nonadjacent vertices must share a part, so parts are unions of components
/// of the complement of `G - v`. Each part holds exactly one neighbor of `v`,
/// so the components holding a neighbor seed the parts and the remaining
/// components are distributed among them.
pub fn is_s_perfectly_connected(g: &Graph, s: usize) -> bool {
    if s == 0 {
        return false;
    }
    let comp = g.complement();
    (0..g.n())
        .filter(|&v| g.degree(v) == s)
        .any(|v| perfect_at(g, &comp, v, s))
}

fn perfect_at(g: &Graph, comp: &Graph, v: usize, s: usize) -> bool {
    let rest = g.vertex_mask() & !bit(v);
    let nbrs = g.neighbors(v);
    let mut seeds = Vec::with_capacity(s);
    let mut loose = Vec::new();
    for c in comp.components_within(rest) {
        match (c & nbrs).count_ones() {
            0 => loose.push(c),
            1 => seeds.push(c),
            _ => return false,
        }
    }
    debug_assert_eq!(seeds.len(), s);

    fn assign(g: &Graph, parts: &mut [u64], loose: &[u64]) -> bool {
        match loose.split_first() {
            None => parts.iter().all(|&p| g.induces_connected(p)),
            Some((&c, tail)) => (0..parts.len()).any(|i| {
                parts[i] |= c;
                let ok = assign(g, parts, tail);
                parts[i] &= !c;
                ok
            }),
        }
    }
    assign(g, &mut seeds, &loose)
}

/// Sufficient conditions for `mc(G) = m - n + 2` on connected graphs with
/// `n > 3`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum FastPathCondition {
    ComplementFourConnected,
    TriangleFree,
    MaxDegreeBound,
    DiameterAtLeastThree,
    CutVertex,
}

impl FastPathCondition {
    pub fn name(self) -> &'static str {
        match self {
            FastPathCondition::ComplementFourConnected => "complement-4-connected",
            FastPathCondition::TriangleFree => "triangle-free",
            FastPathCondition::MaxDegreeBound => "max-degree",
            FastPathCondition::DiameterAtLeastThree => "diameter>=3",
            FastPathCondition::CutVertex => "cut-vertex",
        }
    }
}

/// Every condition that holds; empty for `n <= 3`.
pub fn fast_path_conditions(g: &Graph) -> Vec<FastPathCondition> {
    let n = g.n();
    if n <= 3 || !g.is_connected() {
        return Vec::new();
    }
    let mut out = Vec::new();
    if vertex_connectivity(&g.complement()) >= 4 {
        out.push(FastPathCondition::ComplementFourConnected);
    }
    if is_triangle_free(g) {
        out.push(FastPathCondition::TriangleFree);
    }
    // max_degree < n - (2m - 3(n-1)) / (n-3), scaled by n - 3 > 0.
    let (ni, mi, di) = (n as i64, g.m() as i64, g.max_degree() as i64);
    if di * (ni - 3) < ni * (ni - 3) - (2 * mi - 3 * (ni - 1)) {
        out.push(FastPathCondition::MaxDegreeBound);
    }
    if diameter(g).at_least(3) {
        out.push(FastPathCondition::DiameterAtLeastThree);
    }
    if has_cut_vertex(g) {
        out.push(FastPathCondition::CutVertex);
    }
    out
}

/// `Some(m - n + 2)` when a sufficient condition for that value holds.
pub fn fast_path(g: &Graph) -> Option<usize> {
    (!fast_path_conditions(g).is_empty()).then(|| g.m() + 2 - g.n())
}

/// Exact `mc(G)` with default options.
pub fn mc_exact(g: &Graph) -> Result<McCertificate, SolverError> {
    mc_exact_with(g, &SolveOptions::default())
}

pub fn mc_exact_with(g: &Graph, opts: &SolveOptions) -> Result<McCertificate, SolverError> {
    require_connected(g)?;
    let (lower, lower_coloring) = mc_lower_bound(g)?;
    let uppers = mc_upper_bounds(g)?;
    let upper = uppers.iter().map(|b| b.value).min().expect("bounds are nonempty");

    let mut trace = vec![Bound::new(
        if lower_coloring.color_count() + g.n() == g.m() + 2 {
            "spanning-tree"
        } else {
            "few-missing-edges"
        },
        BoundKind::Lower,
        lower,
    )];
    trace.extend(uppers);

    if g.n() > opts.hard_cap {
        return Err(SolverError::TooLarge {
            n: g.n(),
            cap: opts.hard_cap,
            lower,
            upper,
        });
    }

    if opts.shortcuts {
        if let Some(&cond) = fast_path_conditions(g).first() {
            let value = g.m() + 2 - g.n();
            trace.push(Bound::new(format!("fast-path {}", cond.name()), BoundKind::Exact, value));
            return Ok(McCertificate {
                value,
                coloring: spanning_tree_coloring(g)?,
                method: Method::FastPath,
                bound_trace: trace,
            });
        }
        if lower == upper {
            return Ok(McCertificate {
                value: lower,
                coloring: lower_coloring,
                method: Method::FastPath,
                bound_trace: trace,
            });
        }
    }

    let floor = if opts.shortcuts { g.m() - upper } else { 0 };
    let mut search = Search::new(g, g.m() - lower, floor);
    search.run();
    let coloring = match search.best_sets {
        Some(sets) => TreeCover::from_sets(g, &sets).coloring(g)?,
        None => lower_coloring,
    };
    let value = coloring.color_count();
    debug_assert_eq!(value, g.m() - search.best_waste);
    Ok(McCertificate {
        value,
        coloring,
        method: Method::BranchAndBound,
        bound_trace: trace,
    })
}

/// Edge-disjoint nontrivial trees whose vertex sets cover every nonadjacent
/// pair; each tree wastes `|V(T)| - 2` colors.
#[derive(Debug, Clone)]
struct TreeCover {
    trees: Vec<Vec<Edge>>,
}

impl TreeCover {
    fn from_sets(g: &Graph, sets: &[u64]) -> Self {
        let mut sets = sets.to_vec();
        sets.sort_unstable();
        TreeCover {
            trees: sets
                .iter()
                .map(|&s| g.bfs_tree_within(s.trailing_zeros() as usize, s))
                .collect(),
        }
    }

    fn coloring(&self, g: &Graph) -> Result<EdgeColoring, ColoringError> {
        EdgeColoring::from_classes(g.clone(), &self.trees)
    }
}

/// Smallest `w` with `C(w + 1, 2) >= pairs`: a set of waste `w` spans at
/// most `C(w + 1, 2)` nonadjacent pairs, and that count is superadditive.
fn convexity_bound(pairs: usize) -> usize {
    let mut w = 0;
    while crate::choose2(w + 1) < pairs {
        w += 1;
    }
    w
}

struct Search<'a> {
    g: &'a Graph,
    /// Nonadjacent partners of each vertex not yet inside a chosen set.
    uncovered: Vec<u64>,
    /// Vertices sharing a chosen set with each vertex.
    claimed: Vec<u64>,
    chosen: Vec<u64>,
    best_waste: usize,
    best_sets: Option<Vec<u64>>,
    /// Waste no solution can beat; reaching it ends the search.
    floor: usize,
    done: bool,
}

impl<'a> Search<'a> {
    fn new(g: &'a Graph, incumbent_waste: usize, floor: usize) -> Self {
        let all = g.vertex_mask();
        let uncovered = (0..g.n()).map(|v| all & !g.neighbors(v) & !bit(v)).collect();
        Search {
            g,
            uncovered,
            claimed: vec![0; g.n()],
            chosen: Vec::new(),
            best_waste: incumbent_waste,
            best_sets: None,
            floor,
            done: incumbent_waste <= floor,
        }
    }

    fn run(&mut self) {
        let pairs = self.remaining_pairs();
        self.dfs(0, pairs);
    }

    fn remaining_pairs(&self) -> usize {
        self.uncovered.iter().map(|r| r.count_ones() as usize).sum::<usize>() / 2
    }

    fn lower_bound(&self, pairs: usize) -> usize {
        let per_vertex = self
            .uncovered
            .iter()
            .map(|r| r.count_ones() as usize)
            .max()
            .unwrap_or(0);
        per_vertex.max(convexity_bound(pairs))
    }

    fn dfs(&mut self, waste: usize, pairs: usize) {
        if self.done {
            return;
        }
        if pairs == 0 {
            if waste < self.best_waste {
                self.best_waste = waste;
                self.best_sets = Some(self.chosen.clone());
                self.done = waste <= self.floor;
            }
            return;
        }
        if waste + self.lower_bound(pairs) >= self.best_waste {
            return;
        }
        let budget = self.best_waste - 1 - waste;
        let Some(candidates) = self.branch_candidates(budget + 2) else {
            return;
        };
        for set in candidates {
            let saved_uncovered = self.uncovered.clone();
            let saved_claimed = self.claimed.clone();
            let mut newly = 0;
            for a in Bits(set) {
                newly += (self.uncovered[a] & set).count_ones() as usize;
                self.uncovered[a] &= !set;
                self.claimed[a] |= set & !bit(a);
            }
            self.chosen.push(set);
            self.dfs(waste + set.count_ones() as usize - 2, pairs - newly / 2);
            self.chosen.pop();
            self.uncovered = saved_uncovered;
            self.claimed = saved_claimed;
            if self.done {
                return;
            }
        }
    }

    /// Candidate sets for the uncovered pair with the fewest of them, or
    /// `None` when some pair cannot be covered within `max_size` vertices.
    fn branch_candidates(&self, max_size: usize) -> Option<Vec<u64>> {
        let mut best: Option<Vec<u64>> = None;
        for u in 0..self.g.n() {
            for v in Bits(self.uncovered[u] & !low_bits(u + 1)) {
                let cands = self.candidates(u, v, max_size);
                if cands.is_empty() {
                    return None;
                }
                if best.as_ref().is_none_or(|b| cands.len() < b.len()) {
                    let forced = cands.len() == 1;
                    best = Some(cands);
                    if forced {
                        return best;
                    }
                }
            }
        }
        best
    }

    /// Connected vertex sets of at most `max_size` vertices containing `u`
    /// and `v` that meet every chosen set in at most one vertex, smallest
    /// first.
    fn candidates(&self, u: usize, v: usize, max_size: usize) -> Vec<u64> {
        let base = bit(u) | bit(v);
        let pool = self.g.vertex_mask() & !base & !self.claimed[u] & !self.claimed[v];
        let pool: Vec<usize> = Bits(pool).collect();
        let mut out = Vec::new();
        self.extend(base, &pool, max_size.saturating_sub(2), &mut out);
        out.sort_unstable_by_key(|s| (s.count_ones(), *s));
        out
    }

    fn extend(&self, set: u64, pool: &[usize], room: usize, out: &mut Vec<u64>) {
        for (i, &w) in pool.iter().enumerate() {
            if room == 0 {
                return;
            }
            if self.claimed[w] & set != 0 {
                continue;
            }
            let next = set | bit(w);
            if self.g.induces_connected(next) {
                out.push(next);
            }
            self.extend(next, &pool[i + 1..], room - 1, out);
        }
    }
}

/// `mc(G)` straight from the definition: the most blocks of any partition of
/// `E(G)` whose classes give every vertex pair a monochromatic path. No
/// structural facts about extremal colorings are used.
pub fn mc_oracle_partitions(g: &Graph) -> Result<usize, SolverError> {
    oracle_search(g).map(|(blocks, _)| blocks)
}

/// Oracle value with the partition that attains it.
pub fn oracle_certificate(g: &Graph) -> Result<McCertificate, SolverError> {
    let (value, assignment) = oracle_search(g)?;
    let coloring = EdgeColoring::new(g.clone(), assignment)?;
    Ok(McCertificate {
        value,
        coloring,
        method: Method::Oracle,
        bound_trace: Vec::new(),
    })
}

fn oracle_search(g: &Graph) -> Result<(usize, Vec<usize>), SolverError> {
    require_connected(g)?;
    let edges = g.edges();
    if edges.len() > ORACLE_MAX_EDGES {
        return Err(SolverError::OracleTooLarge(edges.len()));
    }
    let mut ctx = Oracle {
        n: g.n(),
        edges: &edges,
        assign: vec![0; edges.len()],
    };
    for blocks in (1..=edges.len()).rev() {
        if ctx.exists(0, 0, blocks) {
            return Ok((blocks, ctx.assign));
        }
    }
    unreachable!("a single color connects every pair of a connected graph")
}

struct Oracle<'a> {
    n: usize,
    edges: &'a [Edge],
    assign: Vec<usize>,
}

impl Oracle<'_> {
    /// Restricted-growth enumeration of partitions with exactly `blocks`
    /// blocks; stops at the first one that is an MC-coloring.
    fn exists(&mut self, i: usize, used: usize, blocks: usize) -> bool {
        let left = self.edges.len() - i;
        if used + left < blocks {
            return false;
        }
        if left == 0 {
            return self.connects_all(blocks);
        }
        let top = if used < blocks { used + 1 } else { used };
        for b in 0..top {
            self.assign[i] = b;
            if self.exists(i + 1, used.max(b + 1), blocks) {
                return true;
            }
        }
        false
    }

    fn connects_all(&self, blocks: usize) -> bool {
        let n = self.n;
        let all = low_bits(n);
        let mut reach: Vec<u64> = (0..n).map(bit).collect();
        let mut adj = vec![0u64; n];
        for b in 0..blocks {
            adj.iter_mut().for_each(|a| *a = 0);
            let mut touched = 0u64;
            for (e, &c) in self.edges.iter().zip(&self.assign) {
                if c == b {
                    adj[e.u] |= bit(e.v);
                    adj[e.v] |= bit(e.u);
                    touched |= bit(e.u) | bit(e.v);
                }
            }
            while touched != 0 {
                let start = touched.trailing_zeros() as usize;
                let mut comp = bit(start);
                let mut frontier = comp;
                while frontier != 0 {
                    let mut next = 0;
                    for x in Bits(frontier) {
                        next |= adj[x];
                    }
                    next &= !comp;
                    comp |= next;
                    frontier = next;
                }
                for x in Bits(comp) {
                    reach[x] |= comp;
                }
                touched &= !comp;
            }
        }
        reach.iter().all(|&r| r == all)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{
        balanced_detached_graph, clique_with_linked_pair, clique_with_split_pair, sharp_window_graph,
    };
    use crate::graph::enumerate_connected_graphs;
    use crate::graph::tests::{cycle, path};

    fn k4_minus_edge() -> Graph {
        let mut g = Graph::complete(4).unwrap();
        g.remove_edge(2, 3).unwrap();
        g
    }

    fn upper(g: &Graph, name: &str) -> usize {
        mc_upper_bounds(g)
            .unwrap()
            .into_iter()
            .find(|b| b.name == name)
            .unwrap_or_else(|| panic!("no bound {name}"))
            .value
    }

    #[test]
    fn lower_bound_examples() {
        let tree = path(6);
        assert_eq!(mc_lower_bound(&tree).unwrap().0, 1);
        let mut k5e = Graph::complete(5).unwrap();
        k5e.remove_edge(0, 4).unwrap();
        assert_eq!(mc_lower_bound(&k5e).unwrap().0, 8);
        assert_eq!(mc_lower_bound(&cycle(6)).unwrap().0, 2);
        assert_eq!(
            mc_lower_bound(&Graph::empty(3).unwrap()).unwrap_err(),
            SolverError::Disconnected
        );
    }

    #[test]
    fn upper_bound_examples() {
        let k5 = Graph::complete(5).unwrap();
        assert_eq!(upper(&k5, "chromatic"), 10);
        let t2 = clique_with_linked_pair(5).unwrap();
        assert_eq!(upper(&t2, "min-degree"), 4);
        let (g, _) = sharp_window_graph(6, 3, 0).unwrap();
        assert_eq!(upper(&g, "edge-window t=3"), 10);
    }

    #[test]
    fn perfectly_connected_examples() {
        assert!(is_s_perfectly_connected(&Graph::complete(3).unwrap(), 2));
        assert!(!is_s_perfectly_connected(&cycle(4), 2));
        for n in 2..8 {
            assert!(is_s_perfectly_connected(&Graph::complete(n).unwrap(), n - 1));
        }
        // A leaf of any tree gives the one-part split.
        assert!(is_s_perfectly_connected(&path(5), 1));
        for n in 5..9 {
            assert!(!is_s_perfectly_connected(&clique_with_linked_pair(n).unwrap(), 2));
        }
    }

    #[test]
    fn fast_path_examples() {
        assert_eq!(fast_path(&cycle(6)), Some(2));
        assert!(fast_path_conditions(&cycle(6)).contains(&FastPathCondition::TriangleFree));
        assert_eq!(fast_path(&path(5)), Some(1));
        assert!(fast_path_conditions(&path(5)).contains(&FastPathCondition::CutVertex));
        let h = clique_with_split_pair(6).unwrap();
        assert_eq!(fast_path(&h), Some(6));
        assert!(fast_path_conditions(&h).contains(&FastPathCondition::DiameterAtLeastThree));
        assert_eq!(fast_path(&Graph::complete(3).unwrap()), None);
        assert_eq!(fast_path(&Graph::complete(6).unwrap()), None);
    }

    #[test]
    fn convexity_bound_values() {
        let got: Vec<_> = (0..8).map(convexity_bound).collect();
        assert_eq!(got, vec![0, 1, 2, 2, 3, 3, 3, 4]);
    }

    #[test]
    fn exact_examples() {
        assert_eq!(mc_exact(&Graph::complete(4).unwrap()).unwrap().value, 6);
        assert_eq!(mc_exact(&k4_minus_edge()).unwrap().value, 4);
        let g63 = balanced_detached_graph(6, 3).unwrap().graph;
        assert_eq!(mc_exact(&g63).unwrap().value, 9);
        assert_eq!(mc_exact_with(&g63, &SolveOptions::pure()).unwrap().value, 9);
        let t2 = clique_with_linked_pair(5).unwrap();
        assert_eq!(mc_exact(&t2).unwrap().value, 4);
    }

    #[test]
    fn exact_refuses_large_graphs_with_bounds() {
        let g = Graph::complete(20).unwrap();
        match mc_exact(&g) {
            Err(SolverError::TooLarge { n: 20, lower, upper, .. }) => {
                assert_eq!((lower, upper), (190, 190));
            }
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn oracle_examples() {
        assert_eq!(mc_oracle_partitions(&path(4)).unwrap(), 1);
        assert_eq!(mc_oracle_partitions(&cycle(4)).unwrap(), 2);
        assert_eq!(mc_oracle_partitions(&Graph::complete(4).unwrap()).unwrap(), 6);
        assert_eq!(mc_oracle_partitions(&k4_minus_edge()).unwrap(), 4);
        assert_eq!(
            mc_oracle_partitions(&Graph::complete(6).unwrap()).unwrap_err(),
            SolverError::OracleTooLarge(15)
        );
        let cert = oracle_certificate(&cycle(5)).unwrap();
        assert!(cert.coloring.verify_mc().is_ok());
        assert_eq!(cert.coloring.color_count(), cert.value);
    }

    fn check_certificate(g: &Graph, cert: &McCertificate) {
        let col = &cert.coloring;
        assert!(col.verify_mc().is_ok(), "{g}");
        assert!(col.classes_are_trees(), "{g}");
        assert!(col.classes_have_nonadjacent_pair(), "{g}");
        assert_eq!(col.color_count(), cert.value);
        for b in &cert.bound_trace {
            match b.kind {
                BoundKind::Lower => assert!(b.value <= cert.value, "{g} {b:?}"),
                BoundKind::Upper => assert!(cert.value <= b.value, "{g} {b:?}"),
                BoundKind::Exact => assert_eq!(cert.value, b.value),
            }
        }
    }

    #[test]
    fn exact_matches_oracle_up_to_five_vertices() {
        for n in 2..=5 {
            for g in enumerate_connected_graphs(n, None).unwrap() {
                let oracle = mc_oracle_partitions(&g).unwrap();
                for opts in [SolveOptions::default(), SolveOptions::pure()] {
                    let cert = mc_exact_with(&g, &opts).unwrap();
                    assert_eq!(cert.value, oracle, "{g}");
                    check_certificate(&g, &cert);
                }
            }
        }
    }

    #[test]
    fn certificates_on_six_vertices() {
        for g in enumerate_connected_graphs(6, None).unwrap().step_by(37) {
            let fast = mc_exact(&g).unwrap();
            let pure = mc_exact_with(&g, &SolveOptions::pure()).unwrap();
            assert_eq!(fast.value, pure.value, "{g}");
            check_certificate(&g, &fast);
            check_certificate(&g, &pure);
        }
    }

    #[test]
    fn certificate_json_shape() {
        let cert = mc_exact(&Graph::complete(2).unwrap()).unwrap();
        let text = serde_json::to_string(&cert.to_json()).unwrap();
        assert!(text.starts_with(r#"{"graph6":"A_","mc":1,"method":"fast-path""#), "{text}");
    }
}
