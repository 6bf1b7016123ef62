//! Persistence and rendering behind the `gridpeel` binary: JSON traces,
//! CSV summaries, and SVG layer figures, all written atomically.

pub mod atomic;
pub mod trace_csv;
pub mod trace_json;
pub mod trace_svg;
