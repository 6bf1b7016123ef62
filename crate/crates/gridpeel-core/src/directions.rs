//! Primitive lattice directions and the counting machinery built on them:
//! totients, the direction set `V(mu)`, grid line families per direction,
//! and the active/inactive status of a direction against a hull.

use crate::geom::{ConvexPolygon, Point};
use crate::peeling::{PeelingTrace, SourceSpec};

/// Euler's totient via trial factorization. Intended for inputs up to
/// around 10^7.
pub fn totient(x: u64) -> u64 {
    assert!(x >= 1, "totient is defined for positive integers");
    let mut n = x;
    let mut result = x;
    let mut p = 2;
    while p * p <= n {
        if n.is_multiple_of(p) {
            while n.is_multiple_of(p) {
                n /= p;
            }
            result -= result / p;
        }
        p += 1;
    }
    if n > 1 {
        result -= result / n;
    }
    result
}

/// `sum of phi(x) for x in 1..=mu`, the size of `V(mu)`.
pub fn totient_sum(mu: u32) -> u64 {
    (1..=mu as u64).map(totient).sum()
}

fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

/// A primitive lattice direction `(vx, vy)` with `0 <= vy < vx` and
/// `gcd(vx, vy) = 1`.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Direction {
    vx: i64,
    vy: i64,
}

impl Direction {
    pub fn new(vx: i64, vy: i64) -> Option<Self> {
        if vx >= 1 && vy >= 0 && vy < vx && gcd(vx as u64, vy as u64) == 1 {
            Some(Direction { vx, vy })
        } else {
            None
        }
    }

    pub fn vx(&self) -> i64 {
        self.vx
    }

    pub fn vy(&self) -> i64 {
        self.vy
    }
}

impl std::fmt::Display for Direction {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "({},{})", self.vx, self.vy)
    }
}

/// The set `V(mu)` of primitive directions with `vx <= mu`, sorted by
/// `(vx, vy)`. Its size equals `totient_sum(mu)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PrimitiveVectorSet {
    mu: u32,
    vectors: Vec<Direction>,
}

impl PrimitiveVectorSet {
    pub fn mu(&self) -> u32 {
        self.mu
    }

    pub fn len(&self) -> usize {
        self.vectors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vectors.is_empty()
    }

    pub fn as_slice(&self) -> &[Direction] {
        &self.vectors
    }

    pub fn iter(&self) -> std::slice::Iter<'_, Direction> {
        self.vectors.iter()
    }

    /// `|V(mu)| / mu^2`; tends to `3 / pi^2 ~ 0.304` as `mu` grows.
    pub fn density(&self) -> f64 {
        self.vectors.len() as f64 / (self.mu as f64 * self.mu as f64)
    }
}

/// Enumerates `V(mu)` with a gcd filter.
pub fn primitive_vectors(mu: u32) -> PrimitiveVectorSet {
    assert!(mu >= 1, "mu must be positive");
    let mut vectors = Vec::new();
    for vx in 1..=mu as i64 {
        for vy in 0..vx {
            if gcd(vx as u64, vy as u64) == 1 {
                vectors.push(Direction { vx, vy });
            }
        }
    }
    debug_assert_eq!(vectors.len() as u64, totient_sum(mu));
    PrimitiveVectorSet { mu, vectors }
}

/// Number of distinct lines with direction `v` that contain at least one
/// point of `Grid(n)`. Expects `n >= 2`.
///
/// Lines of the family are the offsets `c = vx*y - vy*x` realized over the
/// grid. For `vx <= n`, grouping offsets by residue class modulo `vx`
/// (class representative: the smallest in-grid x-coordinate `x_r` of the
/// class) shows each class realizes `n + vy * floor((n - x_r) / vx)`
/// consecutive members; summing over the `vx` classes telescopes to
/// `n*vx + vy*(n - vx)`. For `vx > n` no two grid points share a line, so
/// the count is `n^2`. Offsets skipped by corner-clipped lines are exactly
/// what the formula accounts for relative to the naive offset range.
pub fn count_grid_lines(v: Direction, n: u32) -> u64 {
    debug_assert!(n >= 2);
    let n = n as u64;
    let vx = v.vx as u64;
    let vy = v.vy as u64;
    if vx > n {
        n * n
    } else {
        n * vx + vy * (n - vx)
    }
}

#[derive(Debug, PartialEq, Eq, thiserror::Error)]
#[error("hull vertex {point} lies outside the grid [1,{n}]^2")]
pub struct GridBoundsError {
    pub point: Point,
    pub n: u32,
}

/// Number of lines of the `Grid(n)` family of direction `v` that
/// intersect `hull`: offsets within the exact `[min, max]` of
/// `vx*y - vy*x` over the hull vertices, filtered by per-line membership
/// (the line must contain a grid point, decided by extended-gcd
/// parametrization and an interval intersection on the parameter range).
pub fn count_lines_meeting_hull(
    v: Direction,
    hull: &ConvexPolygon,
    n: u32,
) -> Result<u64, GridBoundsError> {
    for &p in hull.vertices() {
        if p.x < 1 || p.x > n as i64 || p.y < 1 || p.y > n as i64 {
            return Err(GridBoundsError { point: p, n });
        }
    }
    let offsets = hull.vertices().iter().map(|p| line_offset(v, *p));
    let (Some(lo), Some(hi)) = (offsets.clone().min(), offsets.max()) else {
        return Ok(0);
    };
    Ok((lo..=hi).filter(|&c| line_hits_grid(v, c, n)).count() as u64)
}

/// Offset identifying the line with direction `v` through `p`.
#[inline]
fn line_offset(v: Direction, p: Point) -> i128 {
    v.vx as i128 * p.y as i128 - v.vy as i128 * p.x as i128
}

/// Does the line `vx*y - vy*x = c` contain a point of `Grid(n)`?
fn line_hits_grid(v: Direction, c: i128, n: u32) -> bool {
    let n = n as i128;
    let vx = v.vx as i128;
    let vy = v.vy as i128;
    if vy == 0 {
        // Primitivity forces vx = 1: horizontal lines y = c.
        return (1..=n).contains(&c);
    }
    // Lattice points on the line step by (vx, vy). Normalize to the one
    // with the smallest x >= 1; from x0 = -t*c (mod vx) where
    // vx*s + vy*t = 1, divisibility of c + vy*x0 by vx is automatic.
    let (_, _, t) = egcd(v.vx, v.vy);
    let r = ((-(t as i128)).rem_euclid(vx) * c.rem_euclid(vx)).rem_euclid(vx);
    let x0 = if r == 0 { vx } else { r };
    debug_assert_eq!((c + vy * x0).rem_euclid(vx), 0);
    let y0 = (c + vy * x0) / vx;
    if x0 > n {
        return false;
    }
    // Steps t >= 0 keep x in range up to t_max_x; y climbs by vy per step.
    let t_max_x = (n - x0).div_euclid(vx);
    let t_min_y = ceil_div(1 - y0, vy);
    let t_max_y = (n - y0).div_euclid(vy);
    t_min_y.max(0) <= t_max_y.min(t_max_x)
}

/// Ceiling division for a positive divisor.
#[inline]
fn ceil_div(a: i128, b: i128) -> i128 {
    debug_assert!(b > 0);
    -(-a).div_euclid(b)
}

/// Extended Euclid: returns `(g, s, t)` with `a*s + b*t = g` for
/// `a >= 1, b >= 0`.
fn egcd(a: i64, b: i64) -> (i64, i64, i64) {
    if b == 0 {
        return (a, 1, 0);
    }
    let (g, s, t) = egcd(b, a % b);
    (g, t, s - (a / b) * t)
}

/// A direction is active against a hull when both of its supporting lines
/// meet the boundary in an edge of positive length, i.e. the hull has an
/// edge parallel to `v` on each supporting side. Degenerate hulls are
/// always inactive.
pub fn is_active(v: Direction, hull: &ConvexPolygon) -> bool {
    if !hull.is_proper() {
        return false;
    }
    let verts = hull.vertices();
    let m = verts.len();
    let parallel_edges = (0..m)
        .filter(|&i| {
            let a = verts[i];
            let b = verts[(i + 1) % m];
            let dx = (b.x - a.x) as i128;
            let dy = (b.y - a.y) as i128;
            dx * v.vy as i128 - dy * v.vx as i128 == 0
        })
        .count();
    // Strict convexity permits at most one parallel edge per supporting
    // side, so two parallel edges means both sides carry one.
    parallel_edges == 2
}

/// Activity status of one peeling iteration.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IterationActivity {
    /// 1-based peeling iteration.
    pub index: usize,
    /// Number of directions of `V(mu)` active against this layer.
    pub active_count: usize,
    /// Per-direction flags, aligned with `PrimitiveVectorSet::as_slice`.
    pub flags: Vec<bool>,
}

/// Activity instrumentation for a whole grid peeling run.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ActivityTrace {
    grid_n: u32,
    mu: u32,
    iterations: Vec<IterationActivity>,
    alpha: u64,
    line_budget: u64,
}

impl ActivityTrace {
    pub fn grid_n(&self) -> u32 {
        self.grid_n
    }

    pub fn mu(&self) -> u32 {
        self.mu
    }

    pub fn iterations(&self) -> &[IterationActivity] {
        &self.iterations
    }

    /// Sum of active-direction counts over all recorded iterations.
    pub fn alpha(&self) -> u64 {
        self.alpha
    }

    /// The `4*n*mu` budget on any direction's line family.
    pub fn line_budget(&self) -> u64 {
        self.line_budget
    }
}

/// Evaluates [`is_active`] for every direction of `V(mu)` against every
/// layer of a grid peeling trace.
///
/// This multiplies the cost of a peeling run by `|V(mu)|`, so scaling
/// sweeps leave it off. Panics when a non-empty trace does not come from
/// a grid source.
pub fn activity_trace(trace: &PeelingTrace, mu: u32) -> ActivityTrace {
    let grid_n = match trace.source() {
        SourceSpec::Grid { n } => n,
        _ if trace.tau() == 0 => 0,
        other => panic!("activity instrumentation requires a grid-sourced trace, got {other}"),
    };
    let dirs = primitive_vectors(mu);
    let mut iterations = Vec::with_capacity(trace.tau());
    let mut alpha = 0u64;
    for layer in trace.layers() {
        let flags: Vec<bool> = dirs.iter().map(|&v| is_active(v, &layer.polygon)).collect();
        let active_count = flags.iter().filter(|&&f| f).count();
        alpha += active_count as u64;
        iterations.push(IterationActivity {
            index: layer.index,
            active_count,
            flags,
        });
    }
    ActivityTrace {
        grid_n,
        mu,
        iterations,
        alpha,
        line_budget: 4 * grid_n as u64 * mu as u64,
    }
}
