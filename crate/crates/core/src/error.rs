use thiserror::Error;

use crate::index::Side;

/// Errors produced by the library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("line {line}: syntax error: {message}")]
    Syntax { line: usize, message: String },

    #[error("line {line}: invalid triangle index: {message}")]
    Index { line: usize, message: String },

    #[error("line {line}: duplicate triangle {tag} {k1} {k2} {k3}")]
    Duplicate {
        line: usize,
        tag: String,
        k1: u64,
        k2: u64,
        k3: u64,
    },

    #[error("level {requested} exceeds the enumeration cap {cap}")]
    CapExceeded { requested: u32, cap: u32 },

    #[error("scale overflow at level {0}")]
    ScaleOverflow(u32),

    #[error("graph is not a tree")]
    NotATree,

    #[error("vertex {0} is not in the graph")]
    VertexMissing(usize),

    #[error("no exit on side {0}")]
    NoExit(Side),

    #[error("more than one exit on side {0}")]
    MultipleExits(Side),

    #[error("not a triangular labyrinth patterns system: {0}")]
    InvalidSystem(String),

    #[error("the down-pointing white or yellow pattern is empty")]
    EmptyDownSet,

    #[error("matrix has a negative entry")]
    NegativeEntry,

    #[error("matrix is reducible")]
    Reducible,

    #[error("unsupported matrix size {0}")]
    DegenerateSize(usize),
}

pub type Result<T> = std::result::Result<T, Error>;
