//! Exact-arithmetic geometric primitives: rational points, polyline
//! curves, orientation tests, and proper-crossing detection.

mod curve;
mod point;
mod predicates;

pub use curve::{
    curve_crossings, crossing_side, intersection_count, is_simple_pair, is_x_monotone,
    CrossingPoint, PolylineCurve, SideAssignment, Traversal, XMonotoneCurve,
};
pub use point::{format_coord, parse_coord, CoordParseError, Point};
pub use predicates::{cross, cross_sign, dot, on_segment, orient, segment_meet, Dir, SegMeet};

/// Errors raised by the exact geometric predicates.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum GeometryError {
    /// Two curves touch at a point without properly crossing.
    #[error("tangency at {at}: curves touch without crossing")]
    Tangency { at: String },
    /// Two curves share a one-dimensional piece.
    #[error("overlap at {at}: curves share a one-dimensional piece")]
    Overlap { at: String },
    /// Tangent directions are collinear where a strict side decision is needed.
    #[error("degenerate tangents at {at}")]
    Degenerate { at: String },
    /// A polyline violates its own invariants.
    #[error("invalid curve: {0}")]
    InvalidCurve(String),
}
