use crate::complex::{Edge, VertexId};

#[derive(Debug, thiserror::Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("degenerate face: repeated vertex in ({0}, {1}, {2})")]
    DegenerateFace(u32, u32, u32),
    #[error("degenerate edge: repeated vertex {0}")]
    DegenerateEdge(u32),
    #[error("duplicate face ({0}, {1}, {2})")]
    DuplicateFace(u32, u32, u32),
    #[error("vertex label must be positive")]
    ZeroVertex,
    #[error("complex has no vertices or no edges")]
    EmptyComplex,
    #[error("complex has no faces")]
    NoFaces,
    #[error("unknown vertex {0}")]
    UnknownVertex(VertexId),
    #[error("edge {0} is not in the complex")]
    EdgeNotInComplex(Edge),
    #[error("complex is not a closed surface: {0}")]
    NotAClosedSurface(&'static str),
    #[error("{faces} faces exceed the exhaustive oracle limit of {limit}")]
    TooLargeForOracle { faces: usize, limit: usize },
    #[error("no free faces to collapse")]
    NothingToCollapse,
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("integer overflow in exact arithmetic")]
    Overflow,
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
