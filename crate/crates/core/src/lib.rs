//! Structure of graphs with no claw and no co-claw, the Boolean sums of graph
//! pairs sharing their 3-element homogeneous subsets, and the incidence-matrix
//! facts behind reconstruction of graphs up to complementation.
//!
//! The modules build on each other:
//!
//! - [`graph`], [`named`], [`iso`], [`enumerate`], [`format`]: the graph type,
//!   small named graphs, isomorphism search, exhaustive enumeration, text formats.
//! - [`structure`]: claw, co-claw and diamond detectors and the certifying
//!   classifier.
//! - [`edge_graph`]: the edge-graph `S(U)`.
//! - [`homogeneous`]: homogeneous triples and the equivalent pair conditions.
//! - [`decompose`]: generic and explicit Boolean-sum decompositions.
//! - [`incidence`]: inclusion matrices, GF(2) kernels, rational ranks,
//!   hypomorphy up to complementation.
//! - [`oracle`], [`verify`]: brute-force reference checks and the exhaustive
//!   verification suites built on them.

mod bits;
pub mod decompose;
pub mod edge_graph;
pub mod enumerate;
pub mod error;
pub mod format;
pub mod graph;
pub mod homogeneous;
pub mod incidence;
pub mod iso;
pub mod named;
pub mod oracle;
pub mod structure;
pub mod verify;

pub use error::{GraphError, ParseError};
pub use graph::{ComponentPartition, ComponentShape, Graph, VertexPair, MAX_VERTICES};
