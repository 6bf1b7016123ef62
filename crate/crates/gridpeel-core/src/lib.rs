//! Convex-layer peeling of exact integer point sets.
//!
//! The crate peels a planar point set by repeatedly removing the strict
//! corners of its convex hull, and carries the counting apparatus the
//! experiments need: generators for the integer grid and the
//! nested-squares family, primitive direction sets with their grid line
//! families, and power-law exponent estimation over peeling traces.
//!
//! All geometric decisions are made in exact integer arithmetic; see
//! [`geom`] for the kernel and its capacity bound.

pub mod analysis;
pub mod directions;
pub mod generators;
pub mod geom;
pub mod peeling;

pub use analysis::{fit_power_law, isoperimetric_ratio, trace_summary, ScalingFit, ScalingSample};
pub use directions::{
    activity_trace, count_grid_lines, count_lines_meeting_hull, is_active, primitive_vectors,
    totient, totient_sum, ActivityTrace, Direction, PrimitiveVectorSet,
};
pub use generators::{make_grid, make_nested_squares, GridSpec, SquaresSpec};
pub use geom::{orientation, strict_hull, ConvexPolygon, HullKind, Orientation, Point, PointSet};
pub use peeling::{layer_sizes, peel, peel_naive, tau_of, LayerRecord, PeelingTrace, SourceSpec};
