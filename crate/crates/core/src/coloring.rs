//! Edge colorings and the monochromatic-connectivity checks run on them.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::dsu::DisjointSets;
use crate::graph::{bit, Bits, Edge, Graph, GraphError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ColoringError {
    #[error("coloring has {got} entries but the graph has {expected} edges")]
    LengthMismatch { expected: usize, got: usize },
    #[error("edge {0} is not in the graph")]
    UnknownEdge(Edge),
    #[error("edge {0} listed more than once")]
    DuplicateEdge(Edge),
    #[error("edge {0} of the graph has no color")]
    MissingEdge(Edge),
    #[error("invalid edge [{0}, {1}]")]
    BadEdge(usize, usize),
    #[error("color classes are not all trees")]
    NotTrees,
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error("coloring JSON: {0}")]
    Json(String),
}

/// Outcome of the MC check.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum McVerdict {
    Ok,
    /// Lexicographically first pair with no monochromatic path.
    FailingPair(usize, usize),
}

impl McVerdict {
    pub fn is_ok(self) -> bool {
        self == McVerdict::Ok
    }
}

/// One color class.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ColorClass {
    pub color: usize,
    pub edges: Vec<Edge>,
    /// Bitset of vertices touched by the class.
    pub vertices: u64,
    pub is_tree: bool,
    /// `|edges| - 1`: colors given up relative to one color per edge.
    pub waste: usize,
}

impl ColorClass {
    pub fn is_nontrivial(&self) -> bool {
        self.edges.len() >= 2
    }
}

/// A color for every edge of a graph, stored against the lexicographic edge
/// order of [`Graph::edges`]. Ids are relabeled to `0..color_count` in order
/// of first appearance.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct EdgeColoring {
    graph: Graph,
    edges: Vec<Edge>,
    colors: Vec<usize>,
    count: usize,
}

/// Wire form: edges listed explicitly, colors parallel to them.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ColoringJson {
    pub graph6: String,
    pub edges: Vec<[usize; 2]>,
    pub colors: Vec<usize>,
}

impl EdgeColoring {
    /// `colors[i]` colors the `i`-th edge of `graph.edges()`.
    pub fn new(graph: Graph, colors: Vec<usize>) -> Result<Self, ColoringError> {
        let edges = graph.edges();
        if colors.len() != edges.len() {
            return Err(ColoringError::LengthMismatch {
                expected: edges.len(),
                got: colors.len(),
            });
        }
        let mut relabel = std::collections::HashMap::new();
        let colors: Vec<usize> = colors
            .into_iter()
            .map(|c| {
                let next = relabel.len();
                *relabel.entry(c).or_insert(next)
            })
            .collect();
        Ok(EdgeColoring {
            graph,
            edges,
            count: relabel.len(),
            colors,
        })
    }

    /// Colors given for edges listed in any order; the listing must be
    /// exactly the edge set of `graph`.
    pub fn from_listed(graph: Graph, listed: &[(Edge, usize)]) -> Result<Self, ColoringError> {
        let mut slots = vec![None; graph.m()];
        for &(e, c) in listed {
            let i = graph.edge_index(e).ok_or(ColoringError::UnknownEdge(e))?;
            if slots[i].replace(c).is_some() {
                return Err(ColoringError::DuplicateEdge(e));
            }
        }
        let edges = graph.edges();
        let colors = slots
            .into_iter()
            .zip(&edges)
            .map(|(c, &e)| c.ok_or(ColoringError::MissingEdge(e)))
            .collect::<Result<Vec<_>, _>>()?;
        EdgeColoring::new(graph, colors)
    }

    /// One color per listed class; every edge outside the classes gets its
    /// own fresh color.
    pub fn from_classes(graph: Graph, classes: &[Vec<Edge>]) -> Result<Self, ColoringError> {
        let mut colors: Vec<Option<usize>> = vec![None; graph.m()];
        for (c, class) in classes.iter().enumerate() {
            for &e in class {
                let i = graph.edge_index(e).ok_or(ColoringError::UnknownEdge(e))?;
                if colors[i].replace(c).is_some() {
                    return Err(ColoringError::DuplicateEdge(e));
                }
            }
        }
        let mut fresh = classes.len();
        let colors = colors
            .into_iter()
            .map(|c| {
                c.unwrap_or_else(|| {
                    fresh += 1;
                    fresh - 1
                })
            })
            .collect();
        EdgeColoring::new(graph, colors)
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn colors(&self) -> &[usize] {
        &self.colors
    }

    pub fn color_count(&self) -> usize {
        self.count
    }

    /// `m - color_count`.
    pub fn waste(&self) -> usize {
        self.edges.len() - self.count
    }

    pub fn classes(&self) -> Vec<ColorClass> {
        let mut classes: Vec<ColorClass> = (0..self.count)
            .map(|color| ColorClass {
                color,
                edges: Vec::new(),
                vertices: 0,
                is_tree: false,
                waste: 0,
            })
            .collect();
        for (&e, &c) in self.edges.iter().zip(&self.colors) {
            classes[c].edges.push(e);
            classes[c].vertices |= bit(e.u) | bit(e.v);
        }
        for class in &mut classes {
            let nv = class.vertices.count_ones() as usize;
            class.waste = class.edges.len() - 1;
            class.is_tree = class.edges.len() + 1 == nv && {
                let mut dsu = DisjointSets::new(self.graph.n());
                class.edges.iter().all(|e| dsu.union(e.u, e.v))
            };
        }
        classes
    }

    /// Every pair of vertices must lie in one component of some color class.
    pub fn verify_mc(&self) -> McVerdict {
        let n = self.graph.n();
        let mut dsu_per_color: Vec<DisjointSets> =
            (0..self.count).map(|_| DisjointSets::new(n)).collect();
        let mut touched = vec![0u64; self.count];
        for (&e, &c) in self.edges.iter().zip(&self.colors) {
            dsu_per_color[c].union(e.u, e.v);
            touched[c] |= bit(e.u) | bit(e.v);
        }
        // reach[u]: vertices sharing a monochromatic component with u.
        let mut reach: Vec<u64> = (0..n).map(bit).collect();
        for (dsu, &verts) in dsu_per_color.iter_mut().zip(&touched) {
            let mut comp = vec![0u64; n];
            for v in Bits(verts) {
                comp[dsu.find(v)] |= bit(v);
            }
            for v in Bits(verts) {
                reach[v] |= comp[dsu.find(v)];
            }
        }
        let all = self.graph.vertex_mask();
        for (u, &r) in reach.iter().enumerate() {
            let missing = all & !r;
            if missing != 0 {
                let v = missing.trailing_zeros() as usize;
                return McVerdict::FailingPair(u.min(v), u.max(v));
            }
        }
        McVerdict::Ok
    }

    pub fn classes_are_trees(&self) -> bool {
        self.classes().iter().all(|c| c.is_tree)
    }

    /// Nontrivial classes pairwise share at most one vertex. Requires tree
    /// classes.
    pub fn is_simple(&self) -> Result<bool, ColoringError> {
        let classes = self.classes();
        if !classes.iter().all(|c| c.is_tree) {
            return Err(ColoringError::NotTrees);
        }
        let sets: Vec<u64> = classes
            .iter()
            .filter(|c| c.is_nontrivial())
            .map(|c| c.vertices)
            .collect();
        Ok(sets
            .iter()
            .enumerate()
            .all(|(i, a)| sets[i + 1..].iter().all(|b| (a & b).count_ones() <= 1)))
    }

    /// Every nontrivial class spans at least one pair of vertices that are
    /// nonadjacent in the graph. Extremal colorings always satisfy this.
    pub fn classes_have_nonadjacent_pair(&self) -> bool {
        self.classes()
            .iter()
            .filter(|c| c.is_nontrivial())
            .all(|c| {
                Bits(c.vertices)
                    .any(|u| c.vertices & !self.graph.neighbors(u) & !bit(u) != 0)
            })
    }

    pub fn to_json(&self) -> ColoringJson {
        ColoringJson {
            graph6: self.graph.to_graph6(),
            edges: self.edges.iter().map(|e| [e.u, e.v]).collect(),
            colors: self.colors.clone(),
        }
    }

    pub fn from_json(json: &ColoringJson) -> Result<Self, ColoringError> {
        let graph = Graph::parse_graph6(&json.graph6)?;
        if json.edges.len() != json.colors.len() {
            return Err(ColoringError::LengthMismatch {
                expected: json.edges.len(),
                got: json.colors.len(),
            });
        }
        let listed = json
            .edges
            .iter()
            .zip(&json.colors)
            .map(|(&[a, b], &c)| {
                if a == b {
                    Err(ColoringError::BadEdge(a, b))
                } else {
                    Ok((Edge::new(a, b), c))
                }
            })
            .collect::<Result<Vec<_>, _>>()?;
        if listed.len() != graph.m() {
            return Err(ColoringError::LengthMismatch {
                expected: graph.m(),
                got: listed.len(),
            });
        }
        EdgeColoring::from_listed(graph, &listed)
    }

    pub fn from_json_str(text: &str) -> Result<Self, ColoringError> {
        let json: ColoringJson =
            serde_json::from_str(text).map_err(|e| ColoringError::Json(e.to_string()))?;
        EdgeColoring::from_json(&json)
    }
}
