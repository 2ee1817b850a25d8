use thiserror::Error;

/// Errors produced by the library.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("graph6: invalid byte {byte:#04x} at offset {offset}")]
    Graph6Char { byte: u8, offset: usize },
    #[error("graph6: expected {expected} data bytes, found {found}")]
    Graph6Length { expected: usize, found: usize },
    #[error("graph6: empty input")]
    Graph6Empty,
    #[error("graph has {0} vertices, at most {max} are supported", max = crate::graph::MAX_VERTICES)]
    TooManyVertices(usize),
    #[error("vertex {vertex} out of range for graph of order {order}")]
    VertexOutOfRange { vertex: usize, order: usize },
    #[error("{{{0}, {1}}} is not an edge")]
    NotAnEdge(usize, usize),
    #[error("orbit exceeded the member budget of {0}")]
    OrbitBudget(usize),
    #[error("oracle limited to order {limit}, got {order}")]
    OracleTooLarge { order: usize, limit: usize },
    #[error("invalid adjacency data: {0}")]
    Adjacency(String),
    #[error("invalid chord word: {0}")]
    ChordWord(String),
    #[error("{0}")]
    Domain(String),
    #[error("i/o: {0}")]
    Io(String),
    #[error("contract violated: {0}")]
    Contract(String),
}

pub type Result<T> = std::result::Result<T, Error>;
