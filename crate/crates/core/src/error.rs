use thiserror::Error;

use crate::vertex_set::VertexSet;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GraphError {
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("duplicate edge {0}-{1}")]
    DuplicateEdge(usize, usize),
    #[error("vertex {vertex} out of range for {vertex_count} vertices")]
    VertexOutOfRange { vertex: usize, vertex_count: usize },
    #[error("{0} vertices exceed the supported maximum of 128")]
    TooManyVertices(usize),
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SeparationError {
    #[error("separation does not cover the ground set")]
    NotCovering,
    #[error("separations live on different ground sets")]
    GroundSetMismatch,
    #[error("input is not a chain")]
    NotAChain,
    #[error("empty chain")]
    EmptyChain,
    #[error("chain element is not a separation of the graph")]
    NotGraphSeparation,
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum OrderError {
    #[error("unknown label {0:?}")]
    UnknownLabel(String),
    #[error("duplicate label {0:?}")]
    DuplicateLabel(String),
    #[error("need at least {needed} elements, found {found}")]
    TooSmall { needed: usize, found: usize },
    #[error("map is not total on the domain: {0:?} has no image")]
    NotTotal(String),
    #[error("map is not surjective: {0:?} has no preimage")]
    NotSurjective(String),
    #[error("map is not monotone")]
    NotMonotone,
    #[error("{0:?} is not a cutpoint")]
    NotACutpoint(String),
    #[error("sequence does not alternate cutpoints and index elements")]
    NotAlternating,
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum FlowerError {
    #[error(transparent)]
    Order(#[from] OrderError),
    #[error("no vertex set for label {0:?}")]
    MissingLabel(String),
    #[error("{0:?} is not a cutpoint")]
    NotACutpoint(String),
    #[error("{0:?} is not an index element")]
    NotAnIndex(String),
    #[error("cutpoints must be distinct")]
    EqualCutpoints,
    #[error("vertex {0} is in X")]
    VertexInX(usize),
    #[error("vertex {0} is not in the graph")]
    VertexOutOfRange(usize),
    #[error("stated X {stated} differs from derived X {derived}")]
    XMismatch { stated: String, derived: String },
    #[error("pseudoflower is invalid: {0}")]
    Invalid(String),
    #[error("need at least 2 cutpoints, found {0}")]
    TooFewCutpoints(usize),
    #[error("witness search guard: {0} index elements exceed {1}")]
    Guard(usize, usize),
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ProfileError {
    #[error("order bound must be at least 1")]
    ZeroOrder,
    #[error("separation system has {pairs} pairs, above the guard of {max_pairs}")]
    Guard { pairs: usize, max_pairs: usize },
    #[error("orientation is incomplete: pair {0} has no chosen side")]
    Incomplete(usize),
    #[error("orientation chooses both sides of pair {0}")]
    BothSides(usize),
    #[error("separation {0} is not in the separation system")]
    NotInSystem(String),
    #[error("profiles live on different separation systems")]
    SystemMismatch,
    #[error("no locating cutpoint")]
    NotLocated,
    #[error("orientation is not a profile: {0}")]
    NotAProfile(String),
    #[error("profile set is empty")]
    EmptySet,
    #[error(transparent)]
    Flower(#[from] FlowerError),
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ExtensionError {
    #[error("precondition failed: {0}")]
    Precondition(String),
    #[error("anchoring invariant fails: {0}")]
    NotAnchored(String),
    #[error(transparent)]
    Flower(#[from] FlowerError),
    #[error(transparent)]
    Profile(#[from] ProfileError),
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GeneratorError {
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error("base graph is not {0}-connected")]
    NotConnected(usize),
    #[error("invalid daisy specification: {0}")]
    InvalidSpec(String),
    #[error("need at least 2 groups, found {0}")]
    TooFewGroups(usize),
    #[error("grouping is not a partition of the components of G - X: {0}")]
    BadGrouping(String),
    #[error(transparent)]
    Flower(#[from] FlowerError),
}

#[derive(Debug, Error)]
pub enum FormatError {
    #[error(transparent)]
    Json(#[from] serde_json::Error),
    #[error("{0}")]
    Schema(String),
    #[error("stated x {stated} differs from derived x {derived}")]
    XMismatch { stated: VertexSet, derived: VertexSet },
    #[error(transparent)]
    Flower(#[from] FlowerError),
    #[error(transparent)]
    Profile(#[from] ProfileError),
}
