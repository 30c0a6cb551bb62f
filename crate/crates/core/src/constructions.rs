//! Extremal graph families and the explicit MC-colorings that witness their
//! lower bounds.
//!
//! Tie-breaks are fixed so every builder is reproducible: vertices are
//! assigned to classes in ascending id order, a class center is always its
//! lowest vertex, and cyclic star linking runs `V_1 -> V_2 -> ... -> V_t -> V_1`.

use thiserror::Error;

use crate::coloring::{ColoringError, EdgeColoring};
use crate::graph::{bit, low_bits, Bits, Edge, Graph, GraphError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ConstructionError {
    #[error("input graph is disconnected")]
    Disconnected,
    #[error("parameters out of range: {0}")]
    OutOfRange(String),
    #[error("graph is not complete multipartite over the given classes")]
    NotCompleteMultipartite,
    #[error("partition was not produced by the balanced detached builder")]
    WrongProvenance,
    #[error("coloring wastes {waste} colors, more than the {missing} missing edges allow")]
    WasteExceeded { waste: usize, missing: usize },
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Coloring(#[from] ColoringError),
}

/// How a [`PartitionedGraph`] was built.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PartitionKind {
    CompleteMultipartite,
    /// Near-balanced classes over `K_n` where each class has one detached
    /// vertex with no neighbor inside its own class.
    BalancedDetached,
}

/// A graph with a vertex partition `V_1..V_t` (as bitsets) and, for the
/// detached family, the special vertex of each class.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PartitionedGraph {
    pub graph: Graph,
    pub classes: Vec<u64>,
    pub specials: Option<Vec<usize>>,
    pub kind: PartitionKind,
}

fn out_of_range(msg: impl Into<String>) -> ConstructionError {
    ConstructionError::OutOfRange(msg.into())
}

fn lowest(set: u64) -> usize {
    set.trailing_zeros() as usize
}

/// Star edges from the lowest vertex of `from` to every vertex of `to`.
fn star(from: u64, to: u64) -> Vec<Edge> {
    let c = lowest(from);
    Bits(to).map(|v| Edge::new(c, v)).collect()
}

/// Classes linking disjoint vertex groups so each group lies inside one
/// class. Two groups share a double star on their lowest vertices; three or
/// more are linked cyclically, group `j`'s center starring group `j + 1`.
fn linking_classes(groups: &[u64]) -> Vec<Vec<Edge>> {
    match groups {
        [] | [_] => Vec::new(),
        [a, b] => {
            let mut double = star(*a, *b);
            double.extend(star(*b, *a));
            double.sort_unstable();
            double.dedup();
            vec![double]
        }
        _ => (0..groups.len())
            .map(|j| star(groups[j], groups[(j + 1) % groups.len()]))
            .collect(),
    }
}

/// One color on the BFS spanning tree, a fresh color on every other edge:
/// `m - n + 2` colors.
pub fn spanning_tree_coloring(g: &Graph) -> Result<EdgeColoring, ConstructionError> {
    let tree = g.spanning_tree().map_err(|_| ConstructionError::Disconnected)?;
    Ok(EdgeColoring::from_classes(g.clone(), &[tree])?)
}

/// MC-coloring of a connected graph missing `p` edges of `K_n` that wastes
/// at most `p` colors, so it uses at least `C(n,2) - 2p` colors.
///
/// With `p >= n - 2` the spanning-tree coloring already suffices. Otherwise
/// the missing edges form a graph on the non-isolated complement vertices
/// `W`: if `|W| <= p + 1` a universal vertex stars `W`; if the missing edges
/// form two components they share one double star; with three or more
/// components the components are star-linked cyclically.
pub fn few_missing_edges_coloring(g: &Graph) -> Result<EdgeColoring, ConstructionError> {
    if !g.is_connected() {
        return Err(ConstructionError::Disconnected);
    }
    let n = g.n();
    let missing = crate::choose2(n) - g.m();
    if missing + 2 >= n {
        return spanning_tree_coloring(g);
    }

    let comp = g.complement();
    let touched: u64 = (0..n).filter(|&v| comp.degree(v) > 0).map(bit).sum();
    let classes = if touched.count_ones() as usize <= missing + 1 {
        let universal = (0..n)
            .find(|&v| g.degree(v) == n - 1)
            .expect("|W| <= p + 1 <= n - 2 leaves at least two universal vertices");
        vec![Bits(touched).map(|v| Edge::new(universal, v)).collect()]
    } else {
        let groups = comp.components_within(touched);
        debug_assert!(groups.len() >= 2, "at least two missing-edge components");
        linking_classes(&groups)
    };
    let col = EdgeColoring::from_classes(g.clone(), &classes)?;
    if col.waste() > missing {
        return Err(ConstructionError::WasteExceeded {
            waste: col.waste(),
            missing,
        });
    }
    Ok(col)
}

/// Complete multipartite graph; vertices fill the classes in ascending order.
pub fn complete_multipartite(sizes: &[usize]) -> Result<PartitionedGraph, ConstructionError> {
    if sizes.len() < 2 {
        return Err(out_of_range("need at least two parts"));
    }
    if sizes.contains(&0) {
        return Err(out_of_range("part sizes must be positive"));
    }
    let n: usize = sizes.iter().sum();
    let mut graph = Graph::empty(n)?;
    let classes = consecutive_classes(sizes);
    for (i, &a) in classes.iter().enumerate() {
        for &b in &classes[i + 1..] {
            for u in Bits(a) {
                for v in Bits(b) {
                    graph.add_edge(u, v)?;
                }
            }
        }
    }
    Ok(PartitionedGraph {
        graph,
        classes,
        specials: None,
        kind: PartitionKind::CompleteMultipartite,
    })
}

fn consecutive_classes(sizes: &[usize]) -> Vec<u64> {
    let mut start = 0;
    sizes
        .iter()
        .map(|&s| {
            let set = low_bits(start + s) & !low_bits(start);
            start += s;
            set
        })
        .collect()
}

fn is_complete_multipartite_over(g: &Graph, classes: &[u64]) -> bool {
    let all = g.vertex_mask();
    let covered = classes.iter().fold(0u64, |acc, &c| acc | c);
    let disjoint = classes.iter().map(|c| c.count_ones()).sum::<u32>() == covered.count_ones();
    covered == all
        && disjoint
        && classes
            .iter()
            .all(|&c| Bits(c).all(|v| g.neighbors(v) == all & !c))
}

/// Cyclic star coloring of a complete `r`-partite graph: `m - n + r` colors.
pub fn multipartite_star_coloring(pg: &PartitionedGraph) -> Result<EdgeColoring, ConstructionError> {
    if pg.classes.len() < 2 || !is_complete_multipartite_over(&pg.graph, &pg.classes) {
        return Err(ConstructionError::NotCompleteMultipartite);
    }
    Ok(EdgeColoring::from_classes(
        pg.graph.clone(),
        &linking_classes(&pg.classes),
    )?)
}

/// Near-balanced `t`-class graph on `n` vertices: start from `K_n`, split
/// the vertices into `t` classes whose sizes differ by at most one (larger
/// classes first), and detach the lowest vertex of each class from the rest
/// of its class. Has `C(n,2) - n + t` edges.
pub fn balanced_detached_graph(n: usize, t: usize) -> Result<PartitionedGraph, ConstructionError> {
    if !(3..=n).contains(&t) {
        return Err(out_of_range(format!("need 3 <= t <= n, got n = {n}, t = {t}")));
    }
    let mut graph = Graph::complete(n)?;
    let sizes: Vec<usize> = (0..t).map(|j| n / t + usize::from(j < n % t)).collect();
    let classes = consecutive_classes(&sizes);
    let specials: Vec<usize> = classes.iter().map(|&c| lowest(c)).collect();
    for (&class, &s) in classes.iter().zip(&specials) {
        for v in Bits(class & !bit(s)) {
            graph.remove_edge(s, v)?;
        }
    }
    debug_assert_eq!(graph.m(), crate::choose2(n) - n + t);
    Ok(PartitionedGraph {
        graph,
        classes,
        specials: Some(specials),
        kind: PartitionKind::BalancedDetached,
    })
}

/// Cyclic star coloring over the spanning complete `t`-partite subgraph of a
/// balanced detached graph: `C(n,2) - 2n + 2t` colors.
pub fn detached_star_coloring(pg: &PartitionedGraph) -> Result<EdgeColoring, ConstructionError> {
    if pg.kind != PartitionKind::BalancedDetached {
        return Err(ConstructionError::WrongProvenance);
    }
    let expected = balanced_detached_graph(pg.graph.n(), pg.classes.len())
        .map_err(|_| ConstructionError::WrongProvenance)?;
    if &expected != pg {
        return Err(ConstructionError::WrongProvenance);
    }
    Ok(EdgeColoring::from_classes(
        pg.graph.clone(),
        &linking_classes(&pg.classes),
    )?)
}

/// Complete `(n - t + 1)`-partite graph with `n - t` singleton classes
/// (vertices `0..n-t`) and one class of size `t` (the rest), plus `extra`
/// edges inside the big class taken in lexicographic order. The coloring
/// puts the star from vertex 0 to the big class on one color and every
/// other edge on a fresh color, using `m - t + 1` colors.
pub fn sharp_window_graph(
    n: usize,
    t: usize,
    extra: usize,
) -> Result<(Graph, EdgeColoring), ConstructionError> {
    if n < 3 || !(2..n).contains(&t) || extra + 2 > t {
        return Err(out_of_range(format!(
            "need 2 <= t <= n - 1 and extra <= t - 2, got n = {n}, t = {t}, extra = {extra}"
        )));
    }
    let mut sizes = vec![1; n - t];
    sizes.push(t);
    let base = complete_multipartite(&sizes)?;
    let mut graph = base.graph;
    let big = *base.classes.last().expect("at least two classes");
    let inside: Vec<Edge> = Bits(big)
        .flat_map(|u| Bits(big & !low_bits(u + 1)).map(move |v| Edge::new(u, v)))
        .take(extra)
        .collect();
    for e in &inside {
        graph.add_edge(e.u, e.v)?;
    }
    let hub = star(bit(0), big);
    let col = EdgeColoring::from_classes(graph.clone(), &[hub])?;
    Ok((graph, col))
}

/// `K_{n-2}` on vertices `0..n-2` plus two nonadjacent vertices: `n - 2`
/// joined to clique vertex 0 only, `n - 1` joined to the other clique
/// vertices. `C(n,2) - n + 1` edges, diameter 3.
pub fn clique_with_split_pair(n: usize) -> Result<Graph, ConstructionError> {
    if n < 5 {
        return Err(out_of_range(format!("need n >= 5, got {n}")));
    }
    let (u, v) = (n - 2, n - 1);
    let mut g = clique_on_prefix(n, n - 2)?;
    g.add_edge(u, 0)?;
    for w in 1..n - 2 {
        g.add_edge(v, w)?;
    }
    Ok(g)
}

/// For `n >= 5`: `K_{n-2}` plus adjacent vertices `u = n - 2` and
/// `v = n - 1`, with `u` joined to clique vertex 0 and `v` to the other
/// clique vertices. `C(n,2) - n + 2` edges, `u` the only vertex of degree 2.
/// Returns `P_3` for `n = 3` and `C_4` for `n = 4`.
pub fn clique_with_linked_pair(n: usize) -> Result<Graph, ConstructionError> {
    match n {
        0..=2 => Err(out_of_range(format!("need n >= 3, got {n}"))),
        3 => Ok(Graph::from_edges(3, [(0, 1), (1, 2)])?),
        4 => Ok(Graph::from_edges(4, [(0, 1), (1, 2), (2, 3), (0, 3)])?),
        _ => {
            let mut g = clique_with_split_pair(n)?;
            g.add_edge(n - 2, n - 1)?;
            Ok(g)
        }
    }
}

fn clique_on_prefix(n: usize, k: usize) -> Result<Graph, GraphError> {
    let mut g = Graph::empty(n)?;
    for a in 0..k {
        for b in a + 1..k {
            g.add_edge(a, b)?;
        }
    }
    Ok(g)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::choose2;
    use crate::graph::{diameter, enumerate_connected_graphs, has_cut_vertex, Diameter};

    fn check(col: &EdgeColoring) {
        assert!(col.verify_mc().is_ok(), "{:?}", col.to_json());
        assert!(col.classes_are_trees(), "{:?}", col.to_json());
    }

    #[test]
    fn spanning_tree_coloring_counts() {
        let tree = Graph::from_edges(5, [(0, 1), (1, 2), (1, 3), (3, 4)]).unwrap();
        assert_eq!(spanning_tree_coloring(&tree).unwrap().color_count(), 1);
        let k4 = spanning_tree_coloring(&Graph::complete(4).unwrap()).unwrap();
        assert_eq!(k4.color_count(), 4);
        for n in 2..=6 {
            for g in enumerate_connected_graphs(n, None).unwrap() {
                let col = spanning_tree_coloring(&g).unwrap();
                assert_eq!(col.color_count(), g.m() + 2 - n);
                check(&col);
            }
        }
        let split = Graph::from_edges(4, [(0, 1), (2, 3)]).unwrap();
        assert_eq!(spanning_tree_coloring(&split).unwrap_err(), ConstructionError::Disconnected);
    }

    #[test]
    fn few_missing_edges_k5_minus_edge() {
        let mut g = Graph::complete(5).unwrap();
        g.remove_edge(3, 4).unwrap();
        let col = few_missing_edges_coloring(&g).unwrap();
        check(&col);
        assert!(col.waste() <= 1);
        assert_eq!(col.color_count(), 8);
    }

    #[test]
    fn few_missing_edges_complete_graph_is_rainbow() {
        for n in 2..8 {
            let col = few_missing_edges_coloring(&Graph::complete(n).unwrap()).unwrap();
            assert_eq!(col.color_count(), choose2(n));
        }
    }

    #[test]
    fn few_missing_edges_three_component_complement() {
        let mut g = Graph::complete(6).unwrap();
        for (a, b) in [(0, 1), (2, 3), (4, 5)] {
            g.remove_edge(a, b).unwrap();
        }
        let col = few_missing_edges_coloring(&g).unwrap();
        check(&col);
        assert_eq!(col.waste(), 3);
    }

    #[test]
    fn few_missing_edges_two_component_complement() {
        // Missing edges 0-1 and 2-3-4 path: p = 3 <= n - 3 for n = 7, |W| = 5.
        let mut g = Graph::complete(7).unwrap();
        for (a, b) in [(0, 1), (2, 3), (3, 4)] {
            g.remove_edge(a, b).unwrap();
        }
        let col = few_missing_edges_coloring(&g).unwrap();
        check(&col);
        assert_eq!(col.waste(), 3);
        assert_eq!(col.classes().iter().filter(|c| c.is_nontrivial()).count(), 1);
    }

    #[test]
    fn few_missing_edges_bound_holds_exhaustively() {
        for n in 2..=6 {
            for g in enumerate_connected_graphs(n, None).unwrap() {
                let p = choose2(n) - g.m();
                let col = few_missing_edges_coloring(&g).unwrap();
                check(&col);
                assert!(col.waste() <= p, "{g}");
            }
        }
    }

    #[test]
    fn multipartite_small_cases() {
        let k3 = complete_multipartite(&[1, 1, 1]).unwrap();
        assert_eq!(k3.graph, Graph::complete(3).unwrap());
        assert_eq!(multipartite_star_coloring(&k3).unwrap().color_count(), 3);

        let c4 = complete_multipartite(&[2, 2]).unwrap();
        assert_eq!(c4.graph.m(), 4);
        assert!((0..4).all(|v| c4.graph.degree(v) == 2));
        let col = multipartite_star_coloring(&c4).unwrap();
        check(&col);
        assert_eq!(col.color_count(), 2);

        let k4e = complete_multipartite(&[1, 1, 2]).unwrap();
        let mut expected = Graph::complete(4).unwrap();
        expected.remove_edge(2, 3).unwrap();
        assert_eq!(k4e.graph, expected);
        let col = multipartite_star_coloring(&k4e).unwrap();
        check(&col);
        assert_eq!(col.color_count(), 4);
    }

    #[test]
    fn multipartite_count_formula() {
        for sizes in [vec![3, 1], vec![2, 3, 4], vec![1, 1, 1, 5], vec![3, 3, 3, 3, 3]] {
            let pg = complete_multipartite(&sizes).unwrap();
            let col = multipartite_star_coloring(&pg).unwrap();
            check(&col);
            let (m, n, r) = (pg.graph.m(), pg.graph.n(), sizes.len());
            assert_eq!(col.color_count() + n, m + r);
        }
    }

    #[test]
    fn multipartite_errors() {
        assert!(complete_multipartite(&[3]).is_err());
        assert!(complete_multipartite(&[2, 0]).is_err());
        let mut pg = complete_multipartite(&[2, 2]).unwrap();
        pg.graph.add_edge(0, 1).unwrap();
        assert_eq!(
            multipartite_star_coloring(&pg).unwrap_err(),
            ConstructionError::NotCompleteMultipartite
        );
    }

    #[test]
    fn balanced_detached_shapes() {
        let g63 = balanced_detached_graph(6, 3).unwrap();
        assert_eq!(g63.graph.m(), 12);
        let g73 = balanced_detached_graph(7, 3).unwrap();
        let sizes: Vec<u32> = g73.classes.iter().map(|c| c.count_ones()).collect();
        assert_eq!(sizes, vec![3, 2, 2]);
        assert_eq!(g73.graph.m(), 17);
        assert_eq!(g73.specials, Some(vec![0, 3, 5]));
        for (&class, &s) in g73.classes.iter().zip(g73.specials.as_ref().unwrap()) {
            assert_eq!(g73.graph.neighbors(s) & class, 0);
        }
        for n in 3..10 {
            assert_eq!(balanced_detached_graph(n, n).unwrap().graph, Graph::complete(n).unwrap());
        }
        assert!(balanced_detached_graph(5, 2).is_err());
        assert!(balanced_detached_graph(5, 6).is_err());
    }

    #[test]
    fn detached_star_coloring_counts() {
        let col = detached_star_coloring(&balanced_detached_graph(6, 3).unwrap()).unwrap();
        check(&col);
        assert_eq!(col.color_count(), 9);
        let col = detached_star_coloring(&balanced_detached_graph(5, 4).unwrap()).unwrap();
        assert_eq!(col.color_count(), 8);
        for n in 3..=14 {
            for t in 3..=n {
                let col = detached_star_coloring(&balanced_detached_graph(n, t).unwrap()).unwrap();
                check(&col);
                assert!(col.is_simple().unwrap());
                assert_eq!(col.color_count() + 2 * n, choose2(n) + 2 * t);
            }
        }
    }

    #[test]
    fn detached_star_coloring_checks_provenance() {
        let pg = complete_multipartite(&[2, 2, 2]).unwrap();
        assert_eq!(detached_star_coloring(&pg).unwrap_err(), ConstructionError::WrongProvenance);
        let mut pg = balanced_detached_graph(6, 3).unwrap();
        pg.graph.remove_edge(1, 2).unwrap();
        assert_eq!(detached_star_coloring(&pg).unwrap_err(), ConstructionError::WrongProvenance);
    }

    #[test]
    fn sharp_window_examples() {
        let (g, col) = sharp_window_graph(6, 3, 0).unwrap();
        assert_eq!((g.m(), col.color_count()), (12, 10));
        check(&col);
        let (g, col) = sharp_window_graph(6, 3, 1).unwrap();
        assert_eq!((g.m(), col.color_count()), (13, 11));
        check(&col);
        // t = 2 is a clique on n - 2 vertices completely joined to an
        // independent pair.
        let (g, col) = sharp_window_graph(7, 2, 0).unwrap();
        assert_eq!(g.m(), choose2(7) - 1);
        assert_eq!(col.color_count(), g.m() - 1);
        assert!(sharp_window_graph(6, 3, 2).is_err());
        assert!(sharp_window_graph(6, 6, 0).is_err());
        assert!(sharp_window_graph(6, 1, 0).is_err());
    }

    #[test]
    fn sharp_window_counts_up_to_forty() {
        for n in 3..=40 {
            for t in 2..n {
                for extra in [0, (t - 2) / 2, t - 2] {
                    let (g, col) = sharp_window_graph(n, t, extra).unwrap();
                    assert_eq!(g.m(), choose2(n - t) + t * (n - t) + extra);
                    assert_eq!(col.color_count() + t, g.m() + 1);
                    assert!(col.verify_mc().is_ok());
                }
            }
        }
    }

    #[test]
    fn split_pair_graph() {
        for (n, m) in [(5, 6), (6, 10), (9, 28)] {
            let h = clique_with_split_pair(n).unwrap();
            assert_eq!(h.m(), m);
            assert_eq!(h.m(), choose2(n) - n + 1);
            assert_eq!(diameter(&h), Diameter::Finite(3));
            // Vertex 0 is the only route to n - 2.
            assert!(has_cut_vertex(&h));
        }
        assert!(clique_with_split_pair(4).is_err());
    }

    #[test]
    fn linked_pair_graph() {
        assert_eq!(
            clique_with_linked_pair(3).unwrap(),
            Graph::from_edges(3, [(0, 1), (1, 2)]).unwrap()
        );
        assert_eq!(clique_with_linked_pair(4).unwrap().m(), 4);
        for n in 5..12 {
            let g = clique_with_linked_pair(n).unwrap();
            assert_eq!(g.m(), choose2(n) - n + 2);
            assert_eq!(g.min_degree(), 2);
            let low: Vec<_> = (0..n).filter(|&v| g.degree(v) == 2).collect();
            assert_eq!(low, vec![n - 2]);
        }
        assert_eq!(clique_with_linked_pair(5).unwrap().m(), 7);
        assert!(clique_with_linked_pair(2).is_err());
    }
}
