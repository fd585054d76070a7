//! Line geometry, instances, validation and reductions.

mod bound;
mod check;
mod coord;
mod graph;
mod instance;
pub mod json;
mod reduce;
pub mod slots;

pub use bound::{subset_before, Bound, BoundPair, Span};
pub use check::{check_representation, CheckReport, Violation};
pub use coord::{Coord, ExtCoord};
pub use graph::Graph;
pub use instance::{normalize_bounds, GraphClass, Instance, Interval, Representation};
pub use reduce::{reduce_inclusion, reduce_repext};

use thiserror::Error;

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum ModelError {
    #[error("not a rational number: {0}")]
    BadNumber(String),
    #[error("bound [{0}, {1}] has lo > hi")]
    InvertedBound(String, String),
    #[error("bound [{0}, {1}] contains no finite point")]
    NoFinitePoint(String, String),
    #[error("vertex {0} out of range for n = {1}")]
    VertexOutOfRange(usize, usize),
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("duplicate edge {0}-{1}")]
    DuplicateEdge(usize, usize),
    #[error("{0} bound pairs for {1} vertices")]
    BoundCount(usize, usize),
    #[error("unknown graph class {0:?}")]
    UnknownClass(String),
    #[error("bounds of vertex {0} are empty after normalization")]
    EmptyBound(usize),
    #[error("predrawn intervals of {0} and {1} contradict the graph")]
    InvalidPartial(usize, usize),
    #[error("inner interval of vertex {0} is not inside its outer interval")]
    BadNesting(usize),
    #[error("malformed JSON: {0}")]
    Json(String),
}
