//! qplab: an exact-arithmetic laboratory for topological graph drawings
//! and generalized Davenport-Schinzel sequences.
//!
//! The crate provides:
//! - exact rational geometry for polyline drawings ([`geometry`]),
//! - the topological-graph model with crossing graphs, quasi-planarity
//!   certification, and bisection width ([`drawing`]),
//! - l-regularity and forbidden-pattern detection for sequences
//!   ([`dsseq`]),
//! - crossing-sequence and vertical-split pipelines over concrete
//!   drawings ([`pipeline`]),
//! - evaluable edge-count bound formulas ([`bounds`]),
//! - fixture generators and exact extremal search ([`lab`]),
//! - the JSON drawing document format ([`format`]).

pub mod bounds;
pub mod drawing;
pub mod dsseq;
pub mod format;
pub mod geometry;
pub mod lab;
pub mod pipeline;

pub use dsseq::DsError;
pub use geometry::GeometryError;

/// Crate-wide error type.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error(transparent)]
    Geometry(#[from] GeometryError),
    #[error(transparent)]
    Sequence(#[from] DsError),
    #[error("invalid drawing: {0}")]
    InvalidDrawing(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("size limit exceeded: {0}")]
    SizeLimit(String),
    #[error("k must be >= 2, got {0}")]
    InvalidK(u32),
    #[error("the drawing has no crossings")]
    NoCrossings,
    #[error("vertex x-coordinates are not pairwise distinct")]
    DuplicateX,
    #[error("two edges meet the vertical line at the same point")]
    CoincidentCrossing,
    #[error("partial order violation: {0}")]
    OrderViolation(String),
    #[error("no witness exists below the guarantee threshold")]
    NoWitness,
    #[error("missing configured constant: {0}")]
    MissingConstant(String),
    #[error("retry budget exhausted: {0}")]
    RetryBudget(String),
}

pub type Result<T> = std::result::Result<T, Error>;
