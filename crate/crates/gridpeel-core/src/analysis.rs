//! Scaling-law estimation and shape diagnostics on top of peeling traces.
//! Everything here is double precision; the combinatorial quantities it
//! consumes stay exact in the kernel.

use std::f64::consts::PI;

use crate::geom::ConvexPolygon;
use crate::peeling::PeelingTrace;

/// One measurement in a scaling sweep: the quantity `value` observed at
/// input scale `n`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct ScalingSample {
    pub n: u64,
    pub value: f64,
}

/// Least-squares power-law fit in log-log space; `slope` is the exponent
/// estimate.
#[derive(Clone, Debug, PartialEq)]
pub struct ScalingFit {
    pub slope: f64,
    pub intercept: f64,
    pub r_squared: f64,
    pub samples: Vec<ScalingSample>,
}

#[derive(Debug, PartialEq, Eq, thiserror::Error)]
pub enum FitError {
    #[error("power-law fit needs at least two samples with distinct n")]
    TooFewDistinct,
    #[error("power-law fit requires n >= 2 and value >= 1 for every sample")]
    InvalidSample,
}

/// Ordinary least squares on `(ln n, ln value)`.
pub fn fit_power_law(samples: &[ScalingSample]) -> Result<ScalingFit, FitError> {
    if samples.iter().any(|s| s.n < 2 || s.value < 1.0) {
        return Err(FitError::InvalidSample);
    }
    let mut ns: Vec<u64> = samples.iter().map(|s| s.n).collect();
    ns.sort_unstable();
    ns.dedup();
    if ns.len() < 2 {
        return Err(FitError::TooFewDistinct);
    }

    let m = samples.len() as f64;
    let xs: Vec<f64> = samples.iter().map(|s| (s.n as f64).ln()).collect();
    let ys: Vec<f64> = samples.iter().map(|s| s.value.ln()).collect();
    let x_mean = xs.iter().sum::<f64>() / m;
    let y_mean = ys.iter().sum::<f64>() / m;
    let sxy: f64 = xs
        .iter()
        .zip(&ys)
        .map(|(x, y)| (x - x_mean) * (y - y_mean))
        .sum();
    let sxx: f64 = xs.iter().map(|x| (x - x_mean) * (x - x_mean)).sum();
    let syy: f64 = ys.iter().map(|y| (y - y_mean) * (y - y_mean)).sum();

    let slope = sxy / sxx;
    let intercept = y_mean - slope * x_mean;
    let r_squared = if syy == 0.0 {
        1.0
    } else {
        (sxy * sxy) / (sxx * syy)
    };
    Ok(ScalingFit {
        slope,
        intercept,
        r_squared,
        samples: samples.to_vec(),
    })
}

#[derive(Debug, PartialEq, Eq, thiserror::Error)]
#[error("isoperimetric ratio requires a proper polygon")]
pub struct DegeneratePolygonError;

/// `4*pi*A / P^2`, in `[0, 1]`, with 1 approached by circles. Area comes
/// from the exact doubled area; the perimeter is double precision.
pub fn isoperimetric_ratio(poly: &ConvexPolygon) -> Result<f64, DegeneratePolygonError> {
    if !poly.is_proper() {
        return Err(DegeneratePolygonError);
    }
    let area = poly.doubled_area() as f64 / 2.0;
    let perimeter = poly.perimeter();
    Ok(4.0 * PI * area / (perimeter * perimeter))
}

/// Headline numbers of a peeling trace.
#[derive(Clone, Debug, PartialEq)]
pub struct TraceSummary {
    pub tau: usize,
    /// Largest layer vertex count (0 for an empty trace).
    pub max_layer: usize,
    /// 1-based index of the first layer attaining `max_layer`.
    pub max_layer_index: Option<usize>,
    pub total_points: usize,
    /// Per-layer isoperimetric ratios; `None` for degenerate layers.
    pub iso_ratios: Vec<Option<f64>>,
}

pub fn trace_summary(trace: &PeelingTrace) -> TraceSummary {
    let mut max_layer = 0;
    let mut max_layer_index = None;
    for layer in trace.layers() {
        if layer.vertex_count > max_layer {
            max_layer = layer.vertex_count;
            max_layer_index = Some(layer.index);
        }
    }
    let iso_ratios = trace
        .layers()
        .iter()
        .map(|l| isoperimetric_ratio(&l.polygon).ok())
        .collect();
    TraceSummary {
        tau: trace.tau(),
        max_layer,
        max_layer_index,
        total_points: trace.total_points(),
        iso_ratios,
    }
}
