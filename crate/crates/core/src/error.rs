use thiserror::Error;

use crate::graph::VertexId;

/// Why a constructive procedure refused its input.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Witness {
    /// `first` is non-adjacent to both `second` and `third`, which are adjacent.
    ForbiddenTriple {
        first: VertexId,
        second: VertexId,
        third: VertexId,
    },
    LowReducedDegree { vertex: VertexId, rdeg: usize },
    LowWeight { vertex: VertexId, weight: i64 },
    /// Mutually non-adjacent vertices inside the target set, too many of them.
    LargeIndependentSet { vertices: Vec<VertexId>, limit: usize },
}

impl std::fmt::Display for Witness {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Witness::ForbiddenTriple {
                first,
                second,
                third,
            } => write!(
                f,
                "{first} is non-adjacent to {second} and {third}, but {second}-{third} is an edge"
            ),
            Witness::LowReducedDegree { vertex, rdeg } => {
                write!(f, "vertex {vertex} has reduced degree {rdeg} < 4")
            }
            Witness::LowWeight { vertex, weight } => {
                write!(f, "vertex {vertex} has weight {weight} < 2")
            }
            Witness::LargeIndependentSet { vertices, limit } => {
                let names: Vec<&str> = vertices.iter().map(VertexId::as_str).collect();
                write!(
                    f,
                    "independent set {{{}}} of size {} exceeds {limit}",
                    names.join(", "),
                    vertices.len()
                )
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("unknown vertex `{0}`")]
    UnknownVertex(VertexId),
    #[error("duplicate vertex `{0}`")]
    DuplicateVertex(VertexId),
    #[error("self-loop at vertex `{0}`")]
    SelfLoop(VertexId),
    #[error("vertices `{0}` and `{1}` are not adjacent")]
    NotAdjacent(VertexId, VertexId),
    #[error("vertex `{vertex}` has non-positive weight {weight}")]
    NonPositiveWeight { vertex: VertexId, weight: i64 },
    #[error("graph has {size} vertices, bound is {bound}")]
    SizeBound { size: usize, bound: usize },
    #[error("graph has total multiplicity {total}, bound is {bound}")]
    MultiplicityBound { total: u64, bound: u64 },
    #[error("invalid embedding: {0}")]
    Embedding(String),
    #[error("merged vertex id `{0}` collides with an existing vertex")]
    MergedIdCollision(VertexId),
    #[error("precondition violated: {0}")]
    Precondition(Witness),
    #[error("class {class} does not live on {surface}")]
    SurfaceMismatch { surface: String, class: String },
    #[error("{what} must be even, got {value}")]
    Odd { what: &'static str, value: i64 },
    #[error("invalid input: {0}")]
    Invalid(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
