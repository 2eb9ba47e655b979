use thiserror::Error;

/// Errors produced by graph construction, gluing and the spectral routines.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("index {index} out of range (limit {limit})")]
    IndexOutOfRange { index: usize, limit: usize },

    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),

    #[error("parallel edge between vertices {0} and {1}")]
    ParallelEdge(usize, usize),

    #[error("{what} requires at least {min}, got {got}")]
    TooSmall {
        what: &'static str,
        min: usize,
        got: usize,
    },

    #[error("{what} is limited to {max}, got {got}")]
    TooLarge {
        what: &'static str,
        max: usize,
        got: usize,
    },

    #[error("edge {0} compared with itself")]
    SameEdge(usize),

    #[error("indices must differ, both are {0}")]
    SameIndex(usize),

    #[error("invalid interface: {0}")]
    InvalidInterface(String),

    #[error("invalid bridge: {0}")]
    InvalidBridge(String),

    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("matrix is not square: {rows} x {cols}")]
    NotSquare { rows: usize, cols: usize },

    #[error("matrix is not symmetric at ({0}, {1})")]
    NotSymmetric(usize, usize),

    #[error("vertices {0} and {1} are already adjacent")]
    VerticesAdjacent(usize, usize),

    #[error("inexact division: {0}")]
    InexactDivision(String),

    #[error("eigensolver did not converge after {0} sweeps")]
    NoConvergence(usize),

    #[error("graph is disconnected")]
    Disconnected,

    #[error("graph has no edges")]
    NoEdges,
}

pub type Result<T> = std::result::Result<T, Error>;
