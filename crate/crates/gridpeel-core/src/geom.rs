//! Exact integer planar primitives and the strict convex hull.
//!
//! Every predicate in this module is decided with integer arithmetic only:
//! coordinate differences stay in `i64` and cross products widen to `i128`,
//! so no decision path ever touches floating point. Floating point appears
//! solely in diagnostics ([`ConvexPolygon::perimeter`]).

use std::fmt;

/// 3^38, the largest power of three whose doubled value still leaves
/// slack for exact `i128` cross products.
const POW3_38: i64 = 1_350_851_717_672_992_089;

/// Maximum supported coordinate magnitude, `2 * 3^38`.
///
/// With `|x|, |y| <= COORD_LIMIT`, coordinate differences fit in `i64`
/// (`< 2^63`) and every kernel intermediate (cross product, squared
/// distance, doubled area of a polygon inside the coordinate box) stays
/// below `2^126`, so `i128` arithmetic is exact. Exceeding the limit is a
/// programming error, not a runtime condition; `Point::new` checks it in
/// debug builds.
pub const COORD_LIMIT: i64 = 2 * POW3_38;

/// A planar point with exact integer coordinates.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Default)]
pub struct Point {
    pub x: i64,
    pub y: i64,
}

impl Point {
    pub fn new(x: i64, y: i64) -> Self {
        debug_assert!(
            x.unsigned_abs() <= COORD_LIMIT as u64 && y.unsigned_abs() <= COORD_LIMIT as u64,
            "coordinate ({x}, {y}) exceeds COORD_LIMIT"
        );
        Point { x, y }
    }
}

impl fmt::Display for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.x, self.y)
    }
}

/// Sign of the turn `a -> b -> c`.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Orientation {
    Left,
    Right,
    Collinear,
}

/// Exact cross product `(b - a) x (c - a)`.
///
/// Differences are taken in `i64` (exact under [`COORD_LIMIT`]) and the
/// products in `i128`, which compiles down to a single widening multiply
/// per term.
#[inline]
pub(crate) fn cross(a: Point, b: Point, c: Point) -> i128 {
    let abx = b.x - a.x;
    let aby = b.y - a.y;
    let acx = c.x - a.x;
    let acy = c.y - a.y;
    abx as i128 * acy as i128 - aby as i128 * acx as i128
}

/// Exact squared Euclidean distance.
#[inline]
pub(crate) fn dist2(a: Point, b: Point) -> i128 {
    let dx = (b.x - a.x) as i128;
    let dy = (b.y - a.y) as i128;
    dx * dx + dy * dy
}

/// Exact orientation of the ordered triple `(a, b, c)`: the sign of
/// `(b - a) x (c - a)`.
#[inline]
pub fn orientation(a: Point, b: Point, c: Point) -> Orientation {
    match cross(a, b, c) {
        d if d > 0 => Orientation::Left,
        d if d < 0 => Orientation::Right,
        _ => Orientation::Collinear,
    }
}

/// A duplicate-free point collection kept in lexicographic `(x, y)` order.
///
/// The set is immutable after construction; all operations on it are pure,
/// so values can be shared freely across threads.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct PointSet {
    points: Vec<Point>,
}

impl PointSet {
    /// Builds a set from arbitrary input, sorting and removing duplicates.
    pub fn from_points(mut points: Vec<Point>) -> Self {
        points.sort_unstable();
        points.dedup();
        PointSet { points }
    }

    /// Wraps a vector that is already strictly sorted.
    pub(crate) fn from_sorted(points: Vec<Point>) -> Self {
        debug_assert!(
            points.windows(2).all(|w| w[0] < w[1]),
            "input not strictly sorted"
        );
        PointSet { points }
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn as_slice(&self) -> &[Point] {
        &self.points
    }

    pub fn iter(&self) -> std::slice::Iter<'_, Point> {
        self.points.iter()
    }

    pub fn contains(&self, p: Point) -> bool {
        self.points.binary_search(&p).is_ok()
    }
}

impl FromIterator<Point> for PointSet {
    fn from_iter<I: IntoIterator<Item = Point>>(iter: I) -> Self {
        PointSet::from_points(iter.into_iter().collect())
    }
}

/// Degeneracy classification of a hull.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum HullKind {
    Empty,
    SinglePoint,
    Segment,
    Proper,
}

/// A strictly convex vertex cycle in canonical form: counterclockwise
/// order starting at the lexicographically smallest vertex, with no three
/// consecutive vertices collinear. Collinear degenerate hulls are stored
/// explicitly as a two-vertex segment or a single point.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConvexPolygon {
    vertices: Vec<Point>,
}

/// Rejection reason for [`ConvexPolygon::from_canonical_vertices`].
#[derive(Debug, PartialEq, Eq, thiserror::Error)]
#[error("vertex list is not a canonical strict hull: {reason}")]
pub struct PolygonError {
    pub reason: &'static str,
}

impl ConvexPolygon {
    pub fn empty() -> Self {
        ConvexPolygon {
            vertices: Vec::new(),
        }
    }

    /// Accepts a vertex list only if it is exactly the canonical strict
    /// hull of its own point set. Used when reconstructing polygons from
    /// persisted traces.
    pub fn from_canonical_vertices(vertices: Vec<Point>) -> Result<Self, PolygonError> {
        let recomputed = strict_hull(&PointSet::from_points(vertices.clone()));
        if recomputed.vertices == vertices {
            Ok(recomputed)
        } else {
            Err(PolygonError {
                reason: "not the canonical strict hull of its vertex set",
            })
        }
    }

    /// Wraps a hull-scan result. Callers guarantee canonical form.
    pub(crate) fn from_scan(vertices: Vec<Point>) -> Self {
        #[cfg(debug_assertions)]
        {
            if vertices.len() >= 3 {
                let m = vertices.len();
                for i in 0..m {
                    debug_assert_eq!(
                        orientation(vertices[i], vertices[(i + 1) % m], vertices[(i + 2) % m]),
                        Orientation::Left,
                        "hull scan produced a non-strict turn"
                    );
                }
            }
            for w in vertices.windows(2) {
                debug_assert_ne!(w[0], w[1], "hull scan produced duplicate vertices");
            }
            if let Some(first) = vertices.first() {
                debug_assert!(
                    vertices.iter().all(|v| first <= v),
                    "hull scan start not canonical"
                );
            }
        }
        ConvexPolygon { vertices }
    }

    pub fn kind(&self) -> HullKind {
        match self.vertices.len() {
            0 => HullKind::Empty,
            1 => HullKind::SinglePoint,
            2 => HullKind::Segment,
            _ => HullKind::Proper,
        }
    }

    pub fn is_proper(&self) -> bool {
        self.vertices.len() >= 3
    }

    pub fn vertices(&self) -> &[Point] {
        &self.vertices
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    /// True if `p` lies inside or on the boundary of the hull.
    pub fn contains_point(&self, p: Point) -> bool {
        match self.kind() {
            HullKind::Empty => false,
            HullKind::SinglePoint => self.vertices[0] == p,
            HullKind::Segment => {
                let (a, b) = (self.vertices[0], self.vertices[1]);
                orientation(a, b, p) == Orientation::Collinear
                    && p.x >= a.x.min(b.x)
                    && p.x <= a.x.max(b.x)
                    && p.y >= a.y.min(b.y)
                    && p.y <= a.y.max(b.y)
            }
            HullKind::Proper => {
                let m = self.vertices.len();
                (0..m).all(|i| {
                    orientation(self.vertices[i], self.vertices[(i + 1) % m], p)
                        != Orientation::Right
                })
            }
        }
    }

    /// Twice the enclosed area, exact. Zero for degenerate kinds.
    ///
    /// Evaluates the shoelace sum translated to the first vertex; for a
    /// strictly convex counterclockwise cycle every term is positive, so
    /// partial sums are bounded by the result and stay within `i128`
    /// under [`COORD_LIMIT`].
    pub fn doubled_area(&self) -> i128 {
        if !self.is_proper() {
            return 0;
        }
        let v0 = self.vertices[0];
        self.vertices
            .windows(2)
            .map(|w| cross(v0, w[0], w[1]))
            .sum()
    }

    /// Total Euclidean boundary length in double precision.
    ///
    /// Degenerate cases follow the boundary-traversal convention: empty
    /// and single-point hulls have perimeter 0, a segment counts both
    /// sides (twice its length).
    pub fn perimeter(&self) -> f64 {
        match self.kind() {
            HullKind::Empty | HullKind::SinglePoint => 0.0,
            HullKind::Segment => 2.0 * edge_len(self.vertices[0], self.vertices[1]),
            HullKind::Proper => {
                let m = self.vertices.len();
                (0..m)
                    .map(|i| edge_len(self.vertices[i], self.vertices[(i + 1) % m]))
                    .sum()
            }
        }
    }
}

fn edge_len(a: Point, b: Point) -> f64 {
    (dist2(a, b) as f64).sqrt()
}

/// Convex hull whose vertex set is exactly the corners of `CH(points)`:
/// points interior to hull edges are never vertices. Returns the canonical
/// counterclockwise cycle; collinear inputs collapse to a segment, single
/// point, or the empty hull.
pub fn strict_hull(points: &PointSet) -> ConvexPolygon {
    hull_of_sorted(points.as_slice())
}

/// Monotone-chain scan over points already in lexicographic order.
/// Linear in the input length.
pub(crate) fn hull_of_sorted(pts: &[Point]) -> ConvexPolygon {
    debug_assert!(pts.windows(2).all(|w| w[0] < w[1]));
    match pts.len() {
        0 => return ConvexPolygon::empty(),
        1 => return ConvexPolygon::from_scan(vec![pts[0]]),
        _ => {}
    }

    // Popping on collinear (`<= 0`) is what makes the hull strict: grid
    // points in the middle of an edge never survive the scan.
    let mut hull: Vec<Point> = Vec::new();
    for &p in pts {
        while hull.len() >= 2 && cross(hull[hull.len() - 2], hull[hull.len() - 1], p) <= 0 {
            hull.pop();
        }
        hull.push(p);
    }
    hull.pop();
    let lower_len = hull.len();
    for &p in pts.iter().rev() {
        while hull.len() >= lower_len + 2
            && cross(hull[hull.len() - 2], hull[hull.len() - 1], p) <= 0
        {
            hull.pop();
        }
        hull.push(p);
    }
    hull.pop();
    ConvexPolygon::from_scan(hull)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pt(x: i64, y: i64) -> Point {
        Point::new(x, y)
    }

    fn set(coords: &[(i64, i64)]) -> PointSet {
        PointSet::from_points(coords.iter().map(|&(x, y)| pt(x, y)).collect())
    }

    #[test]
    fn orientation_unit_cases() {
        assert_eq!(orientation(pt(0, 0), pt(1, 0), pt(0, 1)), Orientation::Left);
        assert_eq!(
            orientation(pt(0, 0), pt(1, 1), pt(2, 2)),
            Orientation::Collinear
        );
        assert_eq!(
            orientation(pt(0, 0), pt(0, 1), pt(1, 0)),
            Orientation::Right
        );
    }

    #[test]
    fn orientation_exact_at_capacity() {
        // A sliver triangle near the coordinate capacity: the turn is one
        // lattice step away from collinear and must still be resolved.
        let a = pt(-COORD_LIMIT, -COORD_LIMIT);
        let b = pt(COORD_LIMIT, COORD_LIMIT - 1);
        let c = pt(COORD_LIMIT, COORD_LIMIT);
        assert_eq!(orientation(a, b, c), Orientation::Left);
        assert_eq!(orientation(a, c, b), Orientation::Right);
        assert_eq!(orientation(a, c, pt(0, 0)), Orientation::Collinear);
    }

    #[test]
    fn point_set_sorts_and_dedups() {
        let s = set(&[(2, 1), (1, 2), (1, 1), (2, 1)]);
        assert_eq!(s.len(), 3);
        assert_eq!(s.as_slice(), &[pt(1, 1), pt(1, 2), pt(2, 1)]);
        assert!(s.contains(pt(1, 2)));
        assert!(!s.contains(pt(2, 2)));
    }

    #[test]
    fn strict_hull_excludes_edge_midpoints() {
        let s = set(&[
            (1, 1),
            (1, 2),
            (1, 3),
            (2, 1),
            (2, 2),
            (2, 3),
            (3, 1),
            (3, 2),
            (3, 3),
        ]);
        let hull = strict_hull(&s);
        assert_eq!(hull.vertices(), &[pt(1, 1), pt(3, 1), pt(3, 3), pt(1, 3)]);
        assert_eq!(hull.kind(), HullKind::Proper);
    }

    #[test]
    fn strict_hull_collinear_is_segment() {
        let hull = strict_hull(&set(&[(0, 0), (1, 0), (2, 0)]));
        assert_eq!(hull.kind(), HullKind::Segment);
        assert_eq!(hull.vertices(), &[pt(0, 0), pt(2, 0)]);
    }

    #[test]
    fn strict_hull_point_on_bottom_edge_excluded() {
        let hull = strict_hull(&set(&[(0, 0), (1, 0), (2, 0), (1, 1)]));
        assert_eq!(hull.vertices(), &[pt(0, 0), pt(2, 0), pt(1, 1)]);
    }

    #[test]
    fn strict_hull_degenerate_small() {
        assert_eq!(strict_hull(&set(&[])).kind(), HullKind::Empty);
        assert_eq!(strict_hull(&set(&[(5, -7)])).kind(), HullKind::SinglePoint);
        let seg = strict_hull(&set(&[(3, 4), (1, 2)]));
        assert_eq!(seg.kind(), HullKind::Segment);
        assert_eq!(seg.vertices(), &[pt(1, 2), pt(3, 4)]);
    }

    #[test]
    fn doubled_area_cases() {
        let square = strict_hull(&set(&[(0, 0), (1, 0), (1, 1), (0, 1)]));
        assert_eq!(square.doubled_area(), 2);
        let seg = strict_hull(&set(&[(0, 0), (2, 0)]));
        assert_eq!(seg.doubled_area(), 0);
        let tri = strict_hull(&set(&[(0, 0), (2, 0), (0, 2)]));
        assert_eq!(tri.doubled_area(), 4);
    }

    #[test]
    fn perimeter_cases() {
        let square = strict_hull(&set(&[(0, 0), (1, 0), (1, 1), (0, 1)]));
        assert_eq!(square.perimeter(), 4.0);
        assert_eq!(strict_hull(&set(&[(7, 7)])).perimeter(), 0.0);
        let seg = strict_hull(&set(&[(0, 0), (3, 4)]));
        assert_eq!(seg.perimeter(), 10.0);
    }

    #[test]
    fn contains_point_boundary_and_interior() {
        let hull = strict_hull(&set(&[(0, 0), (4, 0), (4, 4), (0, 4)]));
        assert!(hull.contains_point(pt(2, 2)));
        assert!(hull.contains_point(pt(2, 0)));
        assert!(hull.contains_point(pt(4, 4)));
        assert!(!hull.contains_point(pt(5, 2)));
        let seg = strict_hull(&set(&[(0, 0), (4, 0)]));
        assert!(seg.contains_point(pt(2, 0)));
        assert!(!seg.contains_point(pt(5, 0)));
        assert!(!seg.contains_point(pt(2, 1)));
    }

    #[test]
    fn canonical_vertex_validation() {
        let ok = ConvexPolygon::from_canonical_vertices(vec![pt(0, 0), pt(2, 0), pt(1, 1)]);
        assert!(ok.is_ok());
        // clockwise order
        let cw = ConvexPolygon::from_canonical_vertices(vec![pt(0, 0), pt(1, 1), pt(2, 0)]);
        assert!(cw.is_err());
        // wrong start vertex
        let shifted = ConvexPolygon::from_canonical_vertices(vec![pt(2, 0), pt(1, 1), pt(0, 0)]);
        assert!(shifted.is_err());
        // mid-edge point present
        let slack =
            ConvexPolygon::from_canonical_vertices(vec![pt(0, 0), pt(1, 0), pt(2, 0), pt(1, 1)]);
        assert!(slack.is_err());
        assert!(ConvexPolygon::from_canonical_vertices(vec![]).is_ok());
    }
}
