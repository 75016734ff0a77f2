//! Finite undirected multigraphs with optional 3-space embedding.

mod arcs;
mod format;
mod multigraph;
mod validate;

pub use arcs::{build_arc_system, ArcSystem};
pub use format::{parse_graph, serialize_graph, HEADER};
pub use multigraph::{fixtures, Edge, Multigraph, Vertex};
pub use validate::{validate, ValidationReport};
