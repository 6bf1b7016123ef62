//! SVG rendering of a peeling trace: one closed polygon per proper layer,
//! hue sweeping with the layer index, degenerate layers drawn as segments
//! or dots. No plotting dependency; the markup is written directly.

use std::io;
use std::path::Path;

use gridpeel_core::geom::{HullKind, Point};
use gridpeel_core::peeling::PeelingTrace;

use crate::atomic::write_atomic;

pub fn trace_to_svg(trace: &PeelingTrace) -> String {
    let bbox = trace
        .layers()
        .first()
        .map(|l| bounding_box(l.polygon.vertices()));
    let (min_x, min_y, max_x, max_y) = bbox.unwrap_or((0, 0, 1, 1));
    let width = (max_x - min_x) as f64;
    let height = (max_y - min_y) as f64;
    let span = width.max(height);
    let margin = if span == 0.0 { 1.0 } else { 0.05 * span };
    let view = format!(
        "{} {} {} {}",
        min_x as f64 - margin,
        min_y as f64 - margin,
        width + 2.0 * margin,
        height + 2.0 * margin
    );
    let stroke = (span / 256.0).max(0.05);
    let tau = trace.tau();

    let mut out = String::from("<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n");
    out.push_str(&format!(
        "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"{view}\">\n"
    ));
    // SVG's y axis points down; reflect within the bounding box so the
    // figure appears in the usual orientation.
    let flip = |p: Point| (p.x, min_y + max_y - p.y);
    for layer in trace.layers() {
        let hue = 300.0 * layer.index as f64 / tau as f64;
        let color = format!("hsl({hue:.1},80%,45%)");
        let verts = layer.polygon.vertices();
        match layer.polygon.kind() {
            HullKind::Proper => {
                let points: Vec<String> = verts
                    .iter()
                    .map(|&p| {
                        let (x, y) = flip(p);
                        format!("{x},{y}")
                    })
                    .collect();
                out.push_str(&format!(
                    "  <polygon points=\"{}\" fill=\"none\" stroke=\"{color}\" stroke-width=\"{stroke}\"/>\n",
                    points.join(" ")
                ));
            }
            HullKind::Segment => {
                let (x1, y1) = flip(verts[0]);
                let (x2, y2) = flip(verts[1]);
                out.push_str(&format!(
                    "  <line x1=\"{x1}\" y1=\"{y1}\" x2=\"{x2}\" y2=\"{y2}\" stroke=\"{color}\" stroke-width=\"{stroke}\"/>\n"
                ));
            }
            HullKind::SinglePoint => {
                let (cx, cy) = flip(verts[0]);
                out.push_str(&format!(
                    "  <circle cx=\"{cx}\" cy=\"{cy}\" r=\"{}\" fill=\"{color}\"/>\n",
                    2.0 * stroke
                ));
            }
            HullKind::Empty => {}
        }
    }
    out.push_str("</svg>\n");
    out
}

pub fn write_trace_svg(trace: &PeelingTrace, path: &Path) -> io::Result<()> {
    write_atomic(path, trace_to_svg(trace).as_bytes())
}

fn bounding_box(points: &[Point]) -> (i64, i64, i64, i64) {
    let min_x = points.iter().map(|p| p.x).min().unwrap();
    let min_y = points.iter().map(|p| p.y).min().unwrap();
    let max_x = points.iter().map(|p| p.x).max().unwrap();
    let max_y = points.iter().map(|p| p.y).max().unwrap();
    (min_x, min_y, max_x, max_y)
}
