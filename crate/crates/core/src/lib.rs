//! Vertex separations, profiles, cycle completions and k-pseudoflowers in
//! finite graphs.

pub mod cyclic_order;
pub mod dot;
pub mod error;
pub mod extension;
pub mod flower;
pub mod generators;
pub mod graph;
pub mod io;
pub mod profiles;
pub mod universe;
pub mod vertex_set;

pub use error::*;
pub use graph::Graph;
pub use profiles::{enumerate_profiles, Orientation, Profile, ProfileKind, ProfileSet, SeparationSystem};
pub use universe::{enumerate_separations, is_graph_separation, Separation, SeparationUniverse};
pub use vertex_set::VertexSet;
