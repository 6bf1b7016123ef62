//! Generators for the two point families the experiments run on: the
//! uniform integer grid and the nested-squares construction.

use crate::geom::{Point, PointSet};

/// The `n x n` integer grid `{1, ..., n}^2`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct GridSpec {
    pub n: u32,
}

/// `k` concentric axis-aligned squares with side lengths `3^1, ..., 3^k`,
/// extended to lines and intersected. Coordinates are stored doubled so
/// the half-integer square corners become exact integers; the scaling is
/// affine and leaves all convexity and peeling structure unchanged.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SquaresSpec {
    pub k: u32,
}

/// Largest supported square count: `3^38` doubled is the coordinate
/// capacity of the exact kernel.
pub const MAX_SQUARES: u32 = 38;

#[derive(Debug, PartialEq, Eq, thiserror::Error)]
#[error("nested-squares parameter k={k} outside the supported range 1..={MAX_SQUARES}")]
pub struct CapacityError {
    pub k: u32,
}

/// Exactly the `n^2` points of `{1, ..., n}^2`.
pub fn make_grid(spec: GridSpec) -> PointSet {
    assert!(spec.n >= 1, "grid side must be positive");
    let n = spec.n as i64;
    let mut points = Vec::with_capacity((n * n) as usize);
    for x in 1..=n {
        for y in 1..=n {
            points.push(Point::new(x, y));
        }
    }
    PointSet::from_sorted(points)
}

/// All `4k^2` pairwise intersections of the `2k` horizontal lines
/// `y = ±3^i` and the `2k` vertical lines `x = ±3^i`, `i = 1..=k`, in
/// doubled coordinates. Each of the `4k` lines contains exactly `2k`
/// points of the result.
pub fn make_nested_squares(spec: SquaresSpec) -> Result<PointSet, CapacityError> {
    if spec.k < 1 || spec.k > MAX_SQUARES {
        return Err(CapacityError { k: spec.k });
    }
    let k = spec.k;
    let mut coords: Vec<i64> = Vec::with_capacity(2 * k as usize);
    for i in 1..=k {
        let c = 3i64.pow(i);
        coords.push(c);
        coords.push(-c);
    }
    coords.sort_unstable();
    let mut points = Vec::with_capacity(coords.len() * coords.len());
    for &x in &coords {
        for &y in &coords {
            points.push(Point::new(x, y));
        }
    }
    Ok(PointSet::from_sorted(points))
}
