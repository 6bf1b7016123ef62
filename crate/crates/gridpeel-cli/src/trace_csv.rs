//! CSV emitters: per-layer trace summaries, scaling samples, and
//! per-iteration activity counts. Columns are plain numerics, so rows are
//! formatted by hand.

use std::io;
use std::path::Path;

use gridpeel_core::analysis::{isoperimetric_ratio, ScalingSample};
use gridpeel_core::directions::ActivityTrace;
use gridpeel_core::peeling::PeelingTrace;

use crate::atomic::write_atomic;

/// One row per layer; the isoperimetric column is empty for degenerate
/// layers.
pub fn layer_summary_csv(trace: &PeelingTrace) -> String {
    let mut out =
        String::from("layer_index,vertex_count,doubled_area,perimeter,isoperimetric_ratio\n");
    for layer in trace.layers() {
        let iso = isoperimetric_ratio(&layer.polygon)
            .map(|r| r.to_string())
            .unwrap_or_default();
        out.push_str(&format!(
            "{},{},{},{},{}\n",
            layer.index, layer.vertex_count, layer.doubled_area, layer.perimeter, iso
        ));
    }
    out
}

pub fn write_layer_summary_csv(trace: &PeelingTrace, path: &Path) -> io::Result<()> {
    write_atomic(path, layer_summary_csv(trace).as_bytes())
}

/// Scaling sweep rows, one per grid size, in sample order.
pub fn samples_csv(quantity: &str, samples: &[ScalingSample]) -> String {
    let mut out = format!("n,{quantity}\n");
    for s in samples {
        out.push_str(&format!("{},{}\n", s.n, s.value));
    }
    out
}

pub fn write_samples_csv(quantity: &str, samples: &[ScalingSample], path: &Path) -> io::Result<()> {
    write_atomic(path, samples_csv(quantity, samples).as_bytes())
}

/// Per-iteration active-direction counts.
pub fn activity_csv(activity: &ActivityTrace) -> String {
    let mut out = String::from("iteration,active_count\n");
    for it in activity.iterations() {
        out.push_str(&format!("{},{}\n", it.index, it.active_count));
    }
    out
}

pub fn write_activity_csv(activity: &ActivityTrace, path: &Path) -> io::Result<()> {
    write_atomic(path, activity_csv(activity).as_bytes())
}

#[cfg(test)]
mod tests {
    use super::*;
    use gridpeel_core::generators::{make_grid, GridSpec};
    use gridpeel_core::geom::{Point, PointSet};
    use gridpeel_core::peeling::peel;

    #[test]
    fn row_count_equals_tau() {
        let trace = peel(&make_grid(GridSpec { n: 5 }));
        let csv = layer_summary_csv(&trace);
        let rows: Vec<&str> = csv.lines().collect();
        assert_eq!(rows.len(), trace.tau() + 1);
        assert!(rows[0].starts_with("layer_index,"));
    }

    #[test]
    fn degenerate_layers_have_empty_ratio() {
        let collinear: PointSet = (0..4).map(|x| Point::new(x, 0)).collect();
        let csv = layer_summary_csv(&peel(&collinear));
        for line in csv.lines().skip(1) {
            assert!(line.ends_with(','), "expected empty ratio in {line:?}");
        }
    }

    #[test]
    fn samples_csv_shape() {
        let samples = [
            ScalingSample { n: 32, value: 60.0 },
            ScalingSample {
                n: 64,
                value: 147.0,
            },
        ];
        assert_eq!(samples_csv("tau", &samples), "n,tau\n32,60\n64,147\n");
    }
}
