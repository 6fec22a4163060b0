use thiserror::Error;

use crate::graph::MAX_VERTICES;

/// Errors raised by graph construction and structural operations.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("graph order {n} exceeds the supported maximum of {MAX_VERTICES}")]
    TooManyVertices { n: usize },
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("vertex {0} listed more than once")]
    DuplicateVertex(usize),
    #[error("graphs have different orders ({left} vs {right})")]
    OrderMismatch { left: usize, right: usize },
    #[error("invalid order {n} for {what}")]
    InvalidOrder { what: &'static str, n: usize },
    #[error("vertex set is not a connected component")]
    NotAComponent,
    #[error("graph on {n} vertices is too large for {what} (limit {limit})")]
    Oversize {
        what: &'static str,
        n: usize,
        limit: usize,
    },
}

/// Errors raised while reading one of the text interchange formats.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("empty input")]
    Empty,
    #[error("non-printable byte 0x{byte:02x} at offset {offset}")]
    NonPrintable { offset: usize, byte: u8 },
    #[error("malformed graph6 length header")]
    BadHeader,
    #[error("graph6 order {0} exceeds the supported maximum of {MAX_VERTICES}")]
    TooLarge(usize),
    #[error("graph6 body has {found} bytes, expected {expected}")]
    BodyLength { expected: usize, found: usize },
    #[error("graph6 padding bits are not zero")]
    NonzeroPadding,
    #[error("edge list line {line}: {msg}")]
    EdgeList { line: usize, msg: String },
    #[error(transparent)]
    Graph(#[from] GraphError),
}
