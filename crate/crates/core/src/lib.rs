//! Exact monochromatic connection numbers for small graphs.
//!
//! An edge coloring is an *MC-coloring* when every pair of vertices is joined
//! by a path whose edges all share one color. `mc(G)` is the largest number of
//! colors such a coloring can use. This crate computes `mc(G)` exactly with a
//! certificate, builds the extremal graph families and explicit colorings that
//! pin down the edge thresholds `f(n, k)` and `g(n, k)`, evaluates those
//! thresholds in closed form, and certifies the closed forms against
//! exhaustive enumeration of labeled connected graphs.

pub mod coloring;
pub mod constructions;
mod dsu;
pub mod formulas;
pub mod graph;
pub mod harness;
pub mod solver;

pub use coloring::{ColorClass, ColoringError, EdgeColoring, McVerdict};
pub use graph::{Diameter, Edge, Graph, GraphError, GraphMetrics};
pub use solver::{McCertificate, Method, SolveOptions, SolverError};

/// `C(n, 2)`.
#[inline]
pub const fn choose2(n: usize) -> usize {
    n * n.saturating_sub(1) / 2
}
