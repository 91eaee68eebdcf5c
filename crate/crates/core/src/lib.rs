//! Analysis of Artin groups given by labelled defining graphs.
//!
//! The crate decides the standard graph-level hyperbolicity criteria
//! (two-dimensionality, FC type, empty squares, Moussong's conditions),
//! builds the associated combinatorial complexes, computes the deformed
//! hyperbolic cube metric used on the cubical Deligne complex, and provides
//! finite-ball tools (Cayley and coned-off Cayley graphs, Deligne and Davis
//! balls, four-point delta estimates, quasi-isometry fits) for checking
//! hyperbolicity statements on examples.

pub mod classify;
pub mod complexes;
pub mod coxeter;
pub mod defgraph;
pub mod hypcube;
pub mod orbits;

pub use defgraph::{parse_defining_graph, DefiningGraph, GraphError, VertexSet};
