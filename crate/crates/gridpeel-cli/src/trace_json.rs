//! Lossless JSON persistence for peeling traces.
//!
//! The document shape is `{source, tau, layers: [{index, vertex_count,
//! doubled_area, perimeter, vertices: [[x, y], ...]}]}` with all
//! combinatorial quantities emitted as JSON integers, never floats.
//! Reading re-derives every layer from its vertex list and rejects
//! documents whose stored statistics disagree.

use std::io;
use std::path::Path;

use gridpeel_core::geom::{ConvexPolygon, Point};
use gridpeel_core::peeling::{LayerRecord, PeelingTrace, SourceSpec};
use serde::{Deserialize, Serialize};

use crate::atomic::write_atomic;

#[derive(Serialize, Deserialize)]
struct TraceDoc {
    source: SourceDoc,
    tau: usize,
    layers: Vec<LayerDoc>,
}

#[derive(Serialize, Deserialize, Clone, Copy)]
#[serde(tag = "kind", rename_all = "snake_case")]
enum SourceDoc {
    Grid { n: u32 },
    NestedSquares { k: u32 },
    Points { count: usize },
}

#[derive(Serialize, Deserialize)]
struct LayerDoc {
    index: usize,
    vertex_count: usize,
    doubled_area: i128,
    perimeter: f64,
    vertices: Vec<(i64, i64)>,
}

impl From<SourceSpec> for SourceDoc {
    fn from(s: SourceSpec) -> Self {
        match s {
            SourceSpec::Grid { n } => SourceDoc::Grid { n },
            SourceSpec::NestedSquares { k } => SourceDoc::NestedSquares { k },
            SourceSpec::Points { count } => SourceDoc::Points { count },
        }
    }
}

impl From<SourceDoc> for SourceSpec {
    fn from(s: SourceDoc) -> Self {
        match s {
            SourceDoc::Grid { n } => SourceSpec::Grid { n },
            SourceDoc::NestedSquares { k } => SourceSpec::NestedSquares { k },
            SourceDoc::Points { count } => SourceSpec::Points { count },
        }
    }
}

#[derive(Debug, thiserror::Error)]
pub enum TraceParseError {
    #[error("malformed trace JSON: {0}")]
    Json(#[from] serde_json::Error),
    #[error("inconsistent trace document: {0}")]
    Inconsistent(String),
}

pub fn trace_to_json(trace: &PeelingTrace) -> String {
    let doc = TraceDoc {
        source: trace.source().into(),
        tau: trace.tau(),
        layers: trace
            .layers()
            .iter()
            .map(|l| LayerDoc {
                index: l.index,
                vertex_count: l.vertex_count,
                doubled_area: l.doubled_area,
                perimeter: l.perimeter,
                vertices: l.polygon.vertices().iter().map(|p| (p.x, p.y)).collect(),
            })
            .collect(),
    };
    let mut s = serde_json::to_string_pretty(&doc).expect("trace serialization cannot fail");
    s.push('\n');
    s
}

pub fn trace_from_json(input: &str) -> Result<PeelingTrace, TraceParseError> {
    let doc: TraceDoc = serde_json::from_str(input)?;
    if doc.tau != doc.layers.len() {
        return Err(TraceParseError::Inconsistent(format!(
            "tau={} but {} layers present",
            doc.tau,
            doc.layers.len()
        )));
    }
    let mut layers = Vec::with_capacity(doc.layers.len());
    for (i, layer) in doc.layers.into_iter().enumerate() {
        if layer.index != i + 1 {
            return Err(TraceParseError::Inconsistent(format!(
                "layer at position {} carries index {}",
                i + 1,
                layer.index
            )));
        }
        let vertices: Vec<Point> = layer
            .vertices
            .iter()
            .map(|&(x, y)| Point::new(x, y))
            .collect();
        let polygon = ConvexPolygon::from_canonical_vertices(vertices)
            .map_err(|e| TraceParseError::Inconsistent(format!("layer {}: {e}", layer.index)))?;
        let rebuilt = LayerRecord::from_polygon(layer.index, polygon);
        if rebuilt.vertex_count != layer.vertex_count
            || rebuilt.doubled_area != layer.doubled_area
            || rebuilt.perimeter != layer.perimeter
        {
            return Err(TraceParseError::Inconsistent(format!(
                "layer {} statistics disagree with its vertices",
                layer.index
            )));
        }
        layers.push(rebuilt);
    }
    Ok(PeelingTrace::new(doc.source.into(), layers))
}

pub fn write_trace_json(trace: &PeelingTrace, path: &Path) -> io::Result<()> {
    write_atomic(path, trace_to_json(trace).as_bytes())
}
