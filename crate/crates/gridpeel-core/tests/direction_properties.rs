//! Oracle checks for the direction machinery: line counts against brute
//! enumeration, activity against an independent supporting-line test, and
//! the per-direction decrement of line counts across peeling iterations.

use std::collections::HashSet;

use gridpeel_core::directions::{
    count_grid_lines, count_lines_meeting_hull, is_active, primitive_vectors, totient, totient_sum,
    Direction,
};
use gridpeel_core::generators::{make_grid, GridSpec};
use gridpeel_core::geom::{strict_hull, ConvexPolygon, Point, PointSet};
use gridpeel_core::peeling::{peel, SourceSpec};
use proptest::prelude::*;

fn brute_gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

fn offset(v: Direction, x: i64, y: i64) -> i128 {
    v.vx() as i128 * y as i128 - v.vy() as i128 * x as i128
}

fn brute_count_grid_lines(v: Direction, n: u32) -> u64 {
    let n = n as i64;
    let mut offsets = HashSet::new();
    for x in 1..=n {
        for y in 1..=n {
            offsets.insert(offset(v, x, y));
        }
    }
    offsets.len() as u64
}

fn brute_lines_meeting_hull(v: Direction, hull: &ConvexPolygon, n: u32) -> u64 {
    let grid_offsets: HashSet<i128> = {
        let n = n as i64;
        let mut s = HashSet::new();
        for x in 1..=n {
            for y in 1..=n {
                s.insert(offset(v, x, y));
            }
        }
        s
    };
    let hull_offsets: Vec<i128> = hull
        .vertices()
        .iter()
        .map(|p| offset(v, p.x, p.y))
        .collect();
    let (Some(&lo), Some(&hi)) = (hull_offsets.iter().min(), hull_offsets.iter().max()) else {
        return 0;
    };
    (lo..=hi).filter(|c| grid_offsets.contains(c)).count() as u64
}

#[test]
fn totient_matches_gcd_count() {
    for x in 1..=300u64 {
        let brute = (1..=x).filter(|&y| brute_gcd(x, y) == 1).count() as u64;
        assert_eq!(totient(x), brute, "x={x}");
    }
}

#[test]
fn primitive_vectors_match_totient_sum_and_invariants() {
    for mu in 1..=60u32 {
        let set = primitive_vectors(mu);
        assert_eq!(set.len() as u64, totient_sum(mu));
        let mut prev = None;
        for &v in set.iter() {
            assert!(v.vx() >= 1 && v.vx() <= mu as i64);
            assert!(v.vy() >= 0 && v.vy() < v.vx());
            assert_eq!(brute_gcd(v.vx() as u64, v.vy() as u64), 1);
            if let Some(p) = prev {
                assert!(p < v, "not sorted or duplicated");
            }
            prev = Some(v);
        }
    }
}

/// The classical primitive-pair density: at mu = 1000 the ratio
/// |V(mu)| / mu^2 has essentially converged to 3/pi^2.
#[test]
fn primitive_density_window_at_mu_1000() {
    let set = primitive_vectors(1000);
    let density = set.density();
    assert!(
        (0.300..=0.309).contains(&density),
        "density {density} outside window"
    );
}

#[test]
fn grid_line_counts_match_enumeration() {
    for n in 2..=20u32 {
        for vx in 1..=8i64 {
            for vy in 0..vx {
                let Some(v) = Direction::new(vx, vy) else {
                    continue;
                };
                assert_eq!(
                    count_grid_lines(v, n),
                    brute_count_grid_lines(v, n),
                    "v={v} n={n}"
                );
            }
        }
    }
}

#[test]
fn grid_line_counts_within_budget() {
    // mu capped at min(4, n/4) so the regime of the 4*n*mu bound applies.
    for n in [10u32, 50, 100] {
        for mu in 1..=4u32.min(n / 4) {
            let budget = 4 * n as u64 * mu as u64;
            for &v in primitive_vectors(mu).as_slice() {
                assert!(count_grid_lines(v, n) <= budget, "v={v} n={n} mu={mu}");
            }
        }
    }
}

proptest! {
    /// Hull line counts equal brute enumeration over offsets and grid
    /// points, for arbitrary hulls of in-grid points.
    #[test]
    fn hull_line_counts_match_enumeration(
        n in 2u32..=12,
        pts in prop::collection::vec((1i64..=12, 1i64..=12), 1..14),
        vx in 1i64..=5,
        vy in 0i64..=4,
    ) {
        prop_assume!(vy < vx && brute_gcd(vx as u64, vy as u64) == 1);
        let pts: Vec<Point> = pts
            .into_iter()
            .map(|(x, y)| Point::new(1 + (x - 1) % n as i64, 1 + (y - 1) % n as i64))
            .collect();
        let hull = strict_hull(&PointSet::from_points(pts));
        let v = Direction::new(vx, vy).unwrap();
        prop_assert_eq!(
            count_lines_meeting_hull(v, &hull, n).unwrap(),
            brute_lines_meeting_hull(v, &hull, n)
        );
    }
}

/// The first hull of the grid is met by every line of the family, so the
/// two counting routes must coincide.
#[test]
fn first_hull_meets_every_family_line() {
    for n in 2..=15u32 {
        let hull = strict_hull(&make_grid(GridSpec { n }));
        for &v in primitive_vectors(4).as_slice() {
            assert_eq!(
                count_lines_meeting_hull(v, &hull, n).unwrap(),
                count_grid_lines(v, n),
                "v={v} n={n}"
            );
        }
    }
}

/// Independent activity oracle: a direction is active iff both extremes
/// of the offset functional over the hull vertices are attained twice
/// (the supporting line contains an edge, not just a corner).
fn active_by_supporting_lines(v: Direction, hull: &ConvexPolygon) -> bool {
    if !hull.is_proper() {
        return false;
    }
    let offsets: Vec<i128> = hull
        .vertices()
        .iter()
        .map(|p| offset(v, p.x, p.y))
        .collect();
    let lo = *offsets.iter().min().unwrap();
    let hi = *offsets.iter().max().unwrap();
    let at_lo = offsets.iter().filter(|&&c| c == lo).count();
    let at_hi = offsets.iter().filter(|&&c| c == hi).count();
    at_lo >= 2 && at_hi >= 2
}

#[test]
fn activity_matches_supporting_line_oracle() {
    for n in [5u32, 8, 11, 14] {
        let trace = peel(&make_grid(GridSpec { n }));
        for layer in trace.layers() {
            for &v in primitive_vectors(4).as_slice() {
                assert_eq!(
                    is_active(v, &layer.polygon),
                    active_by_supporting_lines(v, &layer.polygon),
                    "v={v} n={n} layer={}",
                    layer.index
                );
            }
        }
    }
}

proptest! {
    #[test]
    fn activity_matches_oracle_on_random_hulls(
        pts in prop::collection::vec((-20i64..=20, -20i64..=20), 0..20),
        vx in 1i64..=5,
        vy in 0i64..=4,
    ) {
        prop_assume!(vy < vx && brute_gcd(vx as u64, vy as u64) == 1);
        let hull = strict_hull(&PointSet::from_points(
            pts.into_iter().map(|(x, y)| Point::new(x, y)).collect(),
        ));
        let v = Direction::new(vx, vy).unwrap();
        prop_assert_eq!(is_active(v, &hull), active_by_supporting_lines(v, &hull));
    }
}

/// Whenever a direction is inactive at an iteration, the number of its
/// family lines meeting the hull drops by at least two at the next one.
#[test]
fn inactive_iterations_drop_line_count_by_two() {
    for n in 10..=30u32 {
        let trace = peel(&make_grid(GridSpec { n })).with_source(SourceSpec::Grid { n });
        let layers = trace.layers();
        for &v in primitive_vectors(3).as_slice() {
            let counts: Vec<u64> = layers
                .iter()
                .map(|l| count_lines_meeting_hull(v, &l.polygon, n).unwrap())
                .collect();
            for i in 0..layers.len() - 1 {
                if !is_active(v, &layers[i].polygon) {
                    assert!(
                        counts[i + 1] + 2 <= counts[i],
                        "n={n} v={v} iteration {}: {} -> {}",
                        layers[i].index,
                        counts[i],
                        counts[i + 1]
                    );
                }
            }
        }
    }
}

/// With `n_i` directions active, the layer polygon has at least `2 n_i`
/// edges: each active direction contributes an edge on both supporting
/// sides, and distinct primitive directions contribute distinct edges.
#[test]
fn active_directions_force_edge_count() {
    let mu = 3;
    let dirs = primitive_vectors(mu);
    for n in [8u32, 12, 16, 24] {
        let trace = peel(&make_grid(GridSpec { n }));
        for layer in trace.layers() {
            if !layer.polygon.is_proper() {
                continue;
            }
            let n_i = dirs
                .iter()
                .filter(|&&v| is_active(v, &layer.polygon))
                .count();
            assert!(
                layer.vertex_count >= 2 * n_i,
                "n={n} layer {}: {} edges < 2*{n_i}",
                layer.index,
                layer.vertex_count
            );
        }
    }
}
