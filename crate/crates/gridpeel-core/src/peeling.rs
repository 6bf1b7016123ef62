//! The peeling process: repeatedly remove the strict hull corners of the
//! remaining point set until nothing is left, recording every layer.
//!
//! Two engines implement the same contract. [`peel`] sorts the input once
//! and runs a linear monotone-chain scan per iteration over the surviving
//! points; [`peel_naive`] rebuilds everything from scratch each iteration
//! with a gift-wrapping hull, and serves as the independent oracle the
//! fast path is tested against.

use std::collections::HashSet;
use std::fmt;

use crate::geom::{
    dist2, hull_of_sorted, orientation, ConvexPolygon, Orientation, Point, PointSet,
};

/// One peeling iteration: the strict hull corners removed at step `index`.
#[derive(Clone, Debug, PartialEq)]
pub struct LayerRecord {
    /// 1-based iteration number.
    pub index: usize,
    pub polygon: ConvexPolygon,
    pub vertex_count: usize,
    pub doubled_area: i128,
    pub perimeter: f64,
}

impl LayerRecord {
    pub fn from_polygon(index: usize, polygon: ConvexPolygon) -> Self {
        LayerRecord {
            index,
            vertex_count: polygon.vertex_count(),
            doubled_area: polygon.doubled_area(),
            perimeter: polygon.perimeter(),
            polygon,
        }
    }
}

/// Where a trace's input points came from.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SourceSpec {
    Grid { n: u32 },
    NestedSquares { k: u32 },
    Points { count: usize },
}

impl fmt::Display for SourceSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SourceSpec::Grid { n } => write!(f, "grid(n={n})"),
            SourceSpec::NestedSquares { k } => write!(f, "nested-squares(k={k})"),
            SourceSpec::Points { count } => write!(f, "points(count={count})"),
        }
    }
}

/// Full record of a peeling run. Layer `i` holds the vertices removed at
/// iteration `i`; summing their counts recovers the input size exactly.
#[derive(Clone, Debug, PartialEq)]
pub struct PeelingTrace {
    source: SourceSpec,
    layers: Vec<LayerRecord>,
}

impl PeelingTrace {
    pub fn new(source: SourceSpec, layers: Vec<LayerRecord>) -> Self {
        debug_assert!(layers.iter().enumerate().all(|(i, l)| l.index == i + 1));
        PeelingTrace { source, layers }
    }

    /// Replaces the input descriptor (engines default to `Points`).
    pub fn with_source(mut self, source: SourceSpec) -> Self {
        self.source = source;
        self
    }

    pub fn source(&self) -> SourceSpec {
        self.source
    }

    pub fn layers(&self) -> &[LayerRecord] {
        &self.layers
    }

    /// Number of iterations until the point set was exhausted.
    pub fn tau(&self) -> usize {
        self.layers.len()
    }

    pub fn total_points(&self) -> usize {
        self.layers.iter().map(|l| l.vertex_count).sum()
    }

    pub fn vertex_counts(&self) -> Vec<usize> {
        self.layers.iter().map(|l| l.vertex_count).collect()
    }
}

/// Shared driver: sort once, then per iteration scan the survivors with
/// the monotone chain and compact the removed corners out of the array.
fn drive<F: FnMut(usize, ConvexPolygon)>(points: &PointSet, mut on_layer: F) {
    let mut pts: Vec<Point> = points.as_slice().to_vec();
    let mut removed: Vec<Point> = Vec::new();
    let mut index = 0;
    while !pts.is_empty() {
        index += 1;
        let hull = hull_of_sorted(&pts);
        removed.clear();
        removed.extend_from_slice(hull.vertices());
        removed.sort_unstable();
        compact_out(&mut pts, &removed);
        on_layer(index, hull);
    }
}

/// Removes a sorted subset from a sorted vector in one merge pass.
fn compact_out(pts: &mut Vec<Point>, dead: &[Point]) {
    let mut di = 0;
    let mut write = 0;
    for read in 0..pts.len() {
        let p = pts[read];
        if di < dead.len() && dead[di] == p {
            di += 1;
            continue;
        }
        pts[write] = p;
        write += 1;
    }
    debug_assert_eq!(di, dead.len(), "hull vertex missing from point array");
    pts.truncate(write);
}

/// Peels `points` down to the empty set, keeping every layer polygon.
pub fn peel(points: &PointSet) -> PeelingTrace {
    let mut layers = Vec::new();
    drive(points, |index, polygon| {
        layers.push(LayerRecord::from_polygon(index, polygon))
    });
    PeelingTrace::new(
        SourceSpec::Points {
            count: points.len(),
        },
        layers,
    )
}

/// Number of peeling iterations, without retaining layer polygons.
pub fn tau_of(points: &PointSet) -> usize {
    let mut tau = 0;
    drive(points, |_, _| tau += 1);
    tau
}

/// Per-layer vertex counts, without retaining layer polygons. The
/// counting mode used by scaling sweeps.
pub fn layer_sizes(points: &PointSet) -> Vec<usize> {
    let mut sizes = Vec::new();
    drive(points, |_, polygon| sizes.push(polygon.vertex_count()));
    sizes
}

/// Oracle engine: rebuilds a fresh sorted set every iteration and wraps
/// its hull by gift wrapping. Quadratic per layer; intended for inputs up
/// to roughly 10^4 points.
pub fn peel_naive(points: &PointSet) -> PeelingTrace {
    let mut remaining: Vec<Point> = points.as_slice().to_vec();
    let mut layers = Vec::new();
    let mut index = 0;
    while !remaining.is_empty() {
        index += 1;
        let set = PointSet::from_points(remaining.clone());
        let hull = gift_wrap_hull(&set);
        let dead: HashSet<Point> = hull.vertices().iter().copied().collect();
        remaining.retain(|p| !dead.contains(p));
        layers.push(LayerRecord::from_polygon(index, hull));
    }
    PeelingTrace::new(
        SourceSpec::Points {
            count: points.len(),
        },
        layers,
    )
}

/// Gift-wrapping (Jarvis march) hull with the strict-corner rule: among
/// collinear candidates the farthest one is taken, so points interior to
/// an edge are never vertices. Produces the same canonical cycle as the
/// monotone chain.
fn gift_wrap_hull(points: &PointSet) -> ConvexPolygon {
    let pts = points.as_slice();
    match pts.len() {
        0 => return ConvexPolygon::empty(),
        1 => return ConvexPolygon::from_scan(vec![pts[0]]),
        _ => {}
    }
    let start = pts[0]; // lexicographic minimum, the canonical start
    let mut hull = Vec::new();
    let mut current = start;
    loop {
        hull.push(current);
        let mut next = if pts[0] == current { pts[1] } else { pts[0] };
        for &q in pts {
            if q == current || q == next {
                continue;
            }
            match orientation(current, next, q) {
                Orientation::Right => next = q,
                Orientation::Collinear => {
                    if dist2(current, q) > dist2(current, next) {
                        next = q;
                    }
                }
                Orientation::Left => {}
            }
        }
        current = next;
        if current == start {
            break;
        }
        assert!(hull.len() <= pts.len(), "gift wrapping failed to close");
    }
    ConvexPolygon::from_scan(hull)
}
