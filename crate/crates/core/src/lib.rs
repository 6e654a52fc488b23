//! Signed graphs: switching, walk systems, walk-girths, homomorphisms and
//! the constructions that go with them.
//!
//! Graphs are finite multigraphs; loops and parallel edges are allowed.

pub mod chromatic;
pub mod cycles;
pub mod equivalence;
pub mod error;
pub mod girth;
pub mod graph;
pub mod hom;
pub mod packing;
pub mod walk;
pub mod walksys;

pub use error::{Error, Result};
pub use graph::{Edge, EdgeId, Sign, SignedGraph, SwitchSet, VertexId};
pub use walk::{Parity, Walk, WalkType};
