//! Vertex enumeration: converting halfspace systems back to vertex form.
//!
//! Two exact routes are used. Small systems go through brute-force basis
//! enumeration: every subset of `dim` constraint boundaries with independent
//! normals is solved and the feasible solutions are exactly the vertices
//! (any 0-face of the region has `dim` independent tight constraints).
//! Large planar systems (polygonal norm balls) are handled by clipping a
//! bounding rectangle with each halfspace in turn, which is linear in the
//! system size per clip and has no degenerate cases under exact arithmetic.

use alloc::vec::Vec;

use num_traits::{Signed, Zero};

use crate::body::{affine_basis, check_dim, ConvexBody};
use crate::error::{Error, Result};
use crate::halfspace::Halfspace;
use crate::linalg::{rank, solve_square};
use crate::lp::{self, Constraint, LpResult};
use crate::rat::{rat_int, Rat};
use crate::vector::Vector;

/// Threshold above which planar systems use the clipping route.
const CLIP_THRESHOLD: usize = 32;

/// Enumerates the vertices of `⋂ hs`, assuming the region is bounded.
///
/// `bbox_hint`, when given, must be a box containing the region; it enables
/// the fast clipping route for large planar systems.
pub(crate) fn enumerate_vertices(
    hs: &[Halfspace],
    dim: usize,
    bbox_hint: Option<(&Vector, &Vector)>,
) -> Vec<Vector> {
    let hs = dedup_directions(hs);
    if dim == 2 && hs.len() > CLIP_THRESHOLD {
        if let Some((lo, hi)) = bbox_hint {
            return clip_vertices(&hs, lo, hi);
        }
    }
    brute_vertices(&hs, dim)
}

/// Keeps, for each normal direction, only the tightest offset.
fn dedup_directions(hs: &[Halfspace]) -> Vec<Halfspace> {
    let mut sorted: Vec<Halfspace> = hs.to_vec();
    sorted.sort_by(Halfspace::canonical_cmp);
    let mut out: Vec<Halfspace> = Vec::with_capacity(sorted.len());
    for h in sorted {
        match out.last() {
            Some(prev) if prev.normal() == h.normal() => {} // prev has smaller offset
            _ => out.push(h),
        }
    }
    out
}

fn brute_vertices(hs: &[Halfspace], dim: usize) -> Vec<Vector> {
    let m = hs.len();
    let mut candidates: Vec<Vector> = Vec::new();
    let mut try_basis = |ids: &[usize]| {
        let rows: Vec<Vector> = ids.iter().map(|&i| hs[i].normal().clone()).collect();
        let rhs: Vec<Rat> = ids.iter().map(|&i| hs[i].offset().clone()).collect();
        if let Some(x) = solve_square(&rows, &rhs) {
            if hs.iter().all(|h| h.contains(&x)) {
                candidates.push(x);
            }
        }
    };
    match dim {
        1 => {
            for i in 0..m {
                try_basis(&[i]);
            }
        }
        2 => {
            for i in 0..m {
                for j in (i + 1)..m {
                    try_basis(&[i, j]);
                }
            }
        }
        3 => {
            for i in 0..m {
                for j in (i + 1)..m {
                    for k in (j + 1)..m {
                        try_basis(&[i, j, k]);
                    }
                }
            }
        }
        _ => unreachable!("dimension checked by callers"),
    }
    candidates.sort();
    candidates.dedup();
    candidates
}

/// Ring vertex together with the boundary line supporting the outgoing edge.
/// Tracking lines keeps crossing coordinates at bounded size: every crossing
/// is the exact intersection of two input boundary lines rather than a
/// parametric combination of earlier crossings.
#[derive(Clone)]
struct RingVertex {
    point: Vector,
    edge_line: Halfspace,
}

/// Clips the hint box by every halfspace; exact Sutherland-Hodgman on a
/// convex ring. The result is canonicalized through a final 2D hull.
fn clip_vertices(hs: &[Halfspace], lo: &Vector, hi: &Vector) -> Vec<Vector> {
    let one = rat_int(1);
    let (lx, ly) = (lo.get(0) - &one, lo.get(1) - &one);
    let (hx, hy) = (hi.get(0) + &one, hi.get(1) + &one);
    let corner = |x: &Rat, y: &Rat| Vector::new(alloc::vec![x.clone(), y.clone()]);
    let axis = |x: i64, y: i64| Vector::from_ints(&[x, y]);
    // Counterclockwise box ring; each edge lies on an axis-aligned line.
    let mut ring: Vec<RingVertex> = alloc::vec![
        RingVertex {
            point: corner(&lx, &ly),
            edge_line: Halfspace::new(axis(0, -1), -ly.clone()),
        },
        RingVertex {
            point: corner(&hx, &ly),
            edge_line: Halfspace::new(axis(1, 0), hx.clone()),
        },
        RingVertex {
            point: corner(&hx, &hy),
            edge_line: Halfspace::new(axis(0, 1), hy.clone()),
        },
        RingVertex {
            point: corner(&lx, &hy),
            edge_line: Halfspace::new(axis(-1, 0), -lx.clone()),
        },
    ];
    for h in hs {
        if ring.is_empty() {
            return Vec::new();
        }
        ring = clip_ring(&ring, h);
    }
    if ring.is_empty() {
        return Vec::new();
    }
    let pts: Vec<Vector> = ring.into_iter().map(|rv| rv.point).collect();
    match ConvexBody::hull(&pts) {
        Ok(b) => b.vertices().to_vec(),
        Err(_) => Vec::new(),
    }
}

fn clip_ring(ring: &[RingVertex], h: &Halfspace) -> Vec<RingVertex> {
    let n = ring.len();
    if n == 1 {
        return if h.contains(&ring[0].point) {
            ring.to_vec()
        } else {
            Vec::new()
        };
    }
    let slacks: Vec<Rat> = ring.iter().map(|rv| h.slack(&rv.point)).collect();
    let mut out: Vec<RingVertex> = Vec::with_capacity(n + 2);
    for i in 0..n {
        let j = (i + 1) % n;
        let cur_in = !slacks[i].is_negative();
        let nxt_in = !slacks[j].is_negative();
        if cur_in {
            out.push(ring[i].clone());
        }
        if cur_in != nxt_in {
            // The edge strictly crosses the boundary of h, so its line and
            // h's boundary are not parallel.
            let rows = [ring[i].edge_line.normal().clone(), h.normal().clone()];
            let rhs = [ring[i].edge_line.offset().clone(), h.offset().clone()];
            if let Some(x) = solve_square(&rows, &rhs) {
                let edge_line = if cur_in {
                    h.clone()
                } else {
                    ring[i].edge_line.clone()
                };
                out.push(RingVertex {
                    point: x,
                    edge_line,
                });
            }
        }
    }
    out
}

/// Public vertex enumeration with validation: rejects unbounded systems,
/// signals an empty region with `None`.
pub fn vertex_enum(hs: &[Halfspace]) -> Result<Option<ConvexBody>> {
    if hs.is_empty() {
        return Err(Error::EmptyInput);
    }
    let dim = hs[0].dim();
    if hs.iter().any(|h| h.dim() != dim) {
        return Err(Error::MixedDimensions);
    }
    check_dim(dim)?;
    if !is_bounded(hs, dim) {
        return Err(Error::Unbounded);
    }
    Ok(body_from_system(hs, dim, None))
}

/// Tests whether the recession cone `{d : normal · d <= 0}` is trivial.
fn is_bounded(hs: &[Halfspace], dim: usize) -> bool {
    let cons: Vec<Constraint> = hs
        .iter()
        .map(|h| Constraint::new(h.normal().coords().to_vec(), Rat::zero()))
        .collect();
    let lo = alloc::vec![rat_int(-1); dim];
    let hi = alloc::vec![rat_int(1); dim];
    for i in 0..dim {
        for sign in [1i64, -1] {
            let mut obj = alloc::vec![Rat::zero(); dim];
            obj[i] = rat_int(sign);
            match lp::maximize(&obj, &cons, &lo, &hi) {
                LpResult::Optimal { value, .. } => {
                    if !value.is_zero() {
                        return false;
                    }
                }
                LpResult::Infeasible => unreachable!("origin is always feasible"),
            }
        }
    }
    true
}

/// Builds a body from a bounded halfspace system; `None` when infeasible.
pub(crate) fn body_from_system(
    hs: &[Halfspace],
    dim: usize,
    bbox_hint: Option<(&Vector, &Vector)>,
) -> Option<ConvexBody> {
    let vertices = enumerate_vertices(hs, dim, bbox_hint);
    if vertices.is_empty() {
        return None;
    }
    let facets = touching_facets(hs, &vertices);
    Some(ConvexBody::from_reps(vertices, facets))
}

/// Selects a sound halfspace description from the input system given the
/// vertex set:
///
/// * constraints whose boundary misses the body are redundant and dropped
///   (walking from inside to any violating point first crosses a touching
///   constraint, so the touching subset alone cuts the same set);
/// * for full-dimensional bodies only facet-defining constraints
///   (tight set of affine dimension `dim - 1`) are kept;
/// * for lower-dimensional bodies every touching constraint is kept.
fn touching_facets(hs: &[Halfspace], vertices: &[Vector]) -> Vec<Halfspace> {
    let dim = vertices[0].dim();
    let (_, body_dim) = affine_basis(vertices);
    let mut kept: Vec<Halfspace> = Vec::new();
    for h in dedup_directions(hs) {
        let tight: Vec<&Vector> = vertices.iter().filter(|v| h.is_tight(v)).collect();
        if tight.is_empty() {
            continue;
        }
        if body_dim == dim {
            let dirs: Vec<Vector> = tight[1..].iter().map(|v| v.sub(tight[0])).collect();
            if rank(&dirs) == dim - 1 {
                kept.push(h);
            }
        } else {
            kept.push(h);
        }
    }
    kept.sort_by(Halfspace::canonical_cmp);
    kept.dedup();
    kept
}

/// Intersection of finitely many bodies; `None` signals an empty
/// intersection (distinguished from failure).
pub fn intersect_bodies(bodies: &[ConvexBody]) -> Result<Option<ConvexBody>> {
    if bodies.is_empty() {
        return Err(Error::EmptyInput);
    }
    let dim = bodies[0].dim();
    if bodies.iter().any(|b| b.dim() != dim) {
        return Err(Error::MixedDimensions);
    }
    let mut hs: Vec<Halfspace> = Vec::new();
    for b in bodies {
        hs.extend_from_slice(b.facets());
    }
    let (lo, hi) = bodies[0].bbox();
    Ok(body_from_system(&hs, dim, Some((&lo, &hi))))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::body::convex_hull;
    use crate::rat::rat;

    fn v2(x: i64, y: i64) -> Vector {
        Vector::from_ints(&[x, y])
    }

    fn square(lo: (i64, i64), hi: (i64, i64)) -> ConvexBody {
        convex_hull(&[
            v2(lo.0, lo.1),
            v2(hi.0, lo.1),
            v2(hi.0, hi.1),
            v2(lo.0, hi.1),
        ])
        .unwrap()
    }

    #[test]
    fn unit_square_round_trip() {
        let b = square((0, 0), (1, 1));
        let again = vertex_enum(b.facets()).unwrap().unwrap();
        assert_eq!(b, again);
    }

    #[test]
    fn three_box_intersection() {
        let a = square((-1, -1), (1, 1));
        let b = square((0, -1), (2, 1));
        let c = square((0, 0), (2, 2));
        let isect = intersect_bodies(&[a, b, c]).unwrap().unwrap();
        assert_eq!(isect, square((0, 0), (1, 1)));
    }

    #[test]
    fn self_intersection_is_identity() {
        let p = convex_hull(&[v2(0, 0), v2(3, 1), v2(1, 4)]).unwrap();
        let isect = intersect_bodies(&[p.clone(), p.clone()]).unwrap().unwrap();
        assert_eq!(isect, p);
    }

    #[test]
    fn disjoint_boxes_signal_empty() {
        let a = square((0, 0), (1, 1));
        let b = square((2, 2), (3, 3));
        assert!(intersect_bodies(&[a, b]).unwrap().is_none());
    }

    #[test]
    fn unbounded_system_rejected() {
        let hs = [Halfspace::new(v2(1, 0), rat(1, 1))];
        assert_eq!(vertex_enum(&hs), Err(Error::Unbounded));
    }

    #[test]
    fn segment_system_round_trip() {
        let seg = convex_hull(&[v2(0, 0), v2(1, 0)]).unwrap();
        let again = vertex_enum(seg.facets()).unwrap().unwrap();
        assert_eq!(seg, again);
        assert_eq!(again.affine_dim(), 1);
    }

    #[test]
    fn intersection_to_lower_dimension() {
        // Boxes sharing exactly an edge.
        let a = square((0, 0), (1, 1));
        let b = square((1, 0), (2, 1));
        let isect = intersect_bodies(&[a, b]).unwrap().unwrap();
        assert_eq!(isect.vertices(), &[v2(1, 0), v2(1, 1)]);
    }

    #[test]
    fn octahedron_round_trip() {
        let pts: Vec<Vector> = (0..3)
            .flat_map(|i| {
                [2i64, -2].map(|s| {
                    let mut c = [0i64; 3];
                    c[i] = s;
                    Vector::from_ints(&c)
                })
            })
            .collect();
        let oct = convex_hull(&pts).unwrap();
        assert_eq!(oct.facets().len(), 8);
        let again = vertex_enum(oct.facets()).unwrap().unwrap();
        assert_eq!(oct, again);
    }
}
