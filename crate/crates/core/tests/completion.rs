//! Completion constructions on the max-norm plane instances whose exact
//! answers are known in closed form: the unit segment, the staircase
//! triangle, the unit square and its distinguished segments, and the
//! shaved-triangle minimality scan.

use diametric_core::rat::{rat, rat_int, Rat};
use diametric_core::{
    convex_hull, CompletionStatus, ConvexBody, Norm, Scalar, Space, Strategy, Vector,
};

fn v2(x: i64, y: i64) -> Vector {
    Vector::from_ints(&[x, y])
}

fn max2() -> Space {
    Space::new(2, Norm::Max).unwrap()
}

fn unit_square() -> ConvexBody {
    convex_hull(&[v2(0, 0), v2(1, 0), v2(1, 1), v2(0, 1)]).unwrap()
}

#[test]
fn unit_segment_constructions() {
    let s = max2();
    let seg = convex_hull(&[v2(0, 0), v2(1, 0)]).unwrap();
    // Ball hull: the segment itself. Ball intersection: the tall rectangle.
    assert_eq!(s.ball_hull(&seg).unwrap(), seg);
    let rect = convex_hull(&[v2(0, -1), v2(1, -1), v2(1, 1), v2(0, 1)]).unwrap();
    let dprime = s.ball_intersection(&seg).unwrap();
    assert_eq!(dprime, rect);
    // diam(D') = 2 = 4 r(D): the chain bound is attained.
    let ddp = s.diameter(&dprime).unwrap().value.as_exact().unwrap().clone();
    let r = s.chebyshev(&seg).unwrap().radius.as_exact().unwrap().clone();
    assert_eq!(ddp, rat_int(2));
    assert_eq!(ddp, rat_int(4) * r);
    assert!(!s.has_unique_completion(&seg).unwrap());
}

#[test]
fn staircase_triangle_unique_completion() {
    let s = max2();
    let tri = convex_hull(&[v2(0, 0), v2(1, 0), v2(1, 1)]).unwrap();
    let square = unit_square();
    assert_eq!(s.ball_intersection(&tri).unwrap(), square);
    assert_eq!(s.ball_hull(&tri).unwrap(), square);
    assert!(s.has_unique_completion(&tri).unwrap());
    assert!(!s.is_complete(&tri).unwrap());
    assert!(s.is_complete(&square).unwrap());
    let trace = s
        .complete_one(&tri, Strategy::FarthestFromBody, None)
        .unwrap();
    assert_eq!(trace.status, CompletionStatus::ExactComplete);
    assert_eq!(trace.final_body, square);
}

#[test]
fn completion_within_self_radius_ball() {
    // Growth confined to B(center, self_radius + 1/4) still completes.
    let s = max2();
    let tri = convex_hull(&[v2(0, 0), v2(1, 0), v2(1, 1)]).unwrap();
    let center = Vector::new(vec![rat(1, 2), rat(1, 2)]);
    let r = rat(3, 4); // self-radius 1/2 plus a margin, still <= diameter 1
    let trace = s
        .complete_one(&tri, Strategy::FarthestFromBody, Some((&center, &r)))
        .unwrap();
    assert_eq!(trace.status, CompletionStatus::ExactComplete);
    let ball = s.ball(&center, &r).unwrap();
    assert!(trace.final_body.is_subset(&ball).unwrap());
    assert!(s.is_complete(&trace.final_body).unwrap());
}

#[test]
fn square_segments_completion_multiplicity() {
    let s = max2();
    let square = unit_square();
    let bottom = convex_hull(&[v2(0, 0), v2(1, 0)]).unwrap();
    let diagonal = convex_hull(&[v2(0, 0), v2(1, 1)]).unwrap();
    let antidiagonal = convex_hull(&[v2(0, 1), v2(1, 0)]).unwrap();

    assert!(!s.has_unique_completion(&bottom).unwrap());
    assert!(s.has_unique_completion(&diagonal).unwrap());
    assert!(s.has_unique_completion(&antidiagonal).unwrap());
    assert_eq!(s.ball_intersection(&diagonal).unwrap(), square);
    assert_eq!(s.ball_intersection(&antidiagonal).unwrap(), square);

    // All three are minimal (segments of full diameter inside the square).
    for seg in [&bottom, &diagonal, &antidiagonal] {
        assert!(s.is_minimal_with_completion(seg, &square).unwrap());
    }

    // Sampled completions of the bottom edge reach at least two distinct
    // unit squares, and every completion is an axis-aligned unit square
    // containing the segment.
    let traces = s.sample_completions(&bottom, 8, 0).unwrap();
    let mut finals: Vec<ConvexBody> = Vec::new();
    for t in &traces {
        assert_eq!(t.status, CompletionStatus::ExactComplete);
        assert!(bottom.is_subset(&t.final_body).unwrap());
        let (lo, hi) = t.final_body.bbox();
        assert_eq!(hi.get(0) - lo.get(0), rat_int(1));
        assert_eq!(hi.get(1) - lo.get(1), rat_int(1));
        if !finals.contains(&t.final_body) {
            finals.push(t.final_body.clone());
        }
    }
    assert!(finals.len() >= 2);

    // The spread over the extreme squares is exactly 1.
    let spread = s.completion_spread(&bottom, 8, 0).unwrap();
    assert_eq!(spread, Scalar::Exact(rat_int(1)));

    // Two distinct minimal segments intersect strictly below the diameter:
    // here in a single point.
    let crossing = diametric_core::intersect_bodies(&[diagonal, antidiagonal])
        .unwrap()
        .unwrap();
    assert_eq!(
        crossing.vertices(),
        &[Vector::new(vec![rat(1, 2), rat(1, 2)])]
    );
}

#[test]
fn shaved_triangle_scan_reports_multiple_completions() {
    let s = max2();
    let half = Vector::new(vec![rat_int(1), rat(1, 2)]);
    let d4 = convex_hull(&[v2(0, 0), v2(0, 1), half]).unwrap();
    let square = unit_square();
    assert!(s.has_unique_completion(&d4).unwrap());
    assert_eq!(s.ball_intersection(&d4).unwrap(), square);
    assert!(!s.is_minimal_with_completion(&d4, &square).unwrap());

    let cuts: Vec<Rat> = vec![rat(1, 4), rat(1, 2), rat(3, 4)];
    let report = s
        .subset_completion_scan(&d4, &square, &cuts, 0, 256)
        .unwrap();
    assert!(report.preserving_probe_count() > 0);
    assert!(report.all_preserving_probes_multiple());

    // The left edge keeps the diameter and its ball intersection is the
    // wide rectangle, so it has multiple completions.
    let edge = convex_hull(&[v2(0, 0), v2(0, 1)]).unwrap();
    let wide = convex_hull(&[v2(-1, 0), v2(1, 0), v2(1, 1), v2(-1, 1)]).unwrap();
    assert_eq!(s.ball_intersection(&edge).unwrap(), wide);
    assert!(!s.has_unique_completion(&edge).unwrap());
}

#[test]
fn euclidean_lens_constructions() {
    let s = Space::new(2, Norm::euclidean()).unwrap();
    let seg = convex_hull(&[v2(0, 0), v2(1, 0)]).unwrap();
    let dprime = s.ball_intersection(&seg).unwrap();
    // Vertical lens: diameter sqrt(3), tips near (1/2, ±sqrt(3)/2).
    let delta = s.diameter(&dprime).unwrap().value.to_f64();
    assert!((delta - 3f64.sqrt()).abs() < 3e-3 * 3f64.sqrt());
    let hull = s.ball_hull(&seg).unwrap();
    // Horizontal lens: contains the segment, same diameter as it.
    assert!(seg.is_subset(&hull).unwrap());
    let dh = s.diameter(&hull).unwrap().value.to_f64();
    assert!((dh - 1.0).abs() < 3e-3);
    assert!(hull.is_subset(&dprime).unwrap());
    assert!(!s.has_unique_completion(&seg).unwrap());
    // Unique center at the midpoint even though completions differ.
    let c = s.chebyshev(&seg).unwrap();
    assert!(!c.full_set);
    assert_eq!(
        c.centers.vertices(),
        &[Vector::new(vec![rat(1, 2), rat_int(0)])]
    );
}

#[test]
fn euclidean_ball_is_complete() {
    let s = Space::new(2, Norm::euclidean()).unwrap();
    let ball = s.ball(&v2(0, 0), &rat_int(1)).unwrap();
    assert!(s.is_complete(&ball).unwrap());
    assert!(s.has_unique_completion(&ball).unwrap());
}
