//! Convex bodies with canonical vertex and halfspace representations.
//!
//! A [`ConvexBody`] always carries both descriptions: a canonical vertex list
//! (extreme points only, deduplicated, sorted lexicographically) and a
//! complete halfspace system whose intersection is exactly the body.
//! Lower-dimensional bodies (segments, planar polygons in 3D, points) are
//! first-class; their halfspace systems contain opposite pairs pinning the
//! affine hull.

use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;

use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::halfspace::Halfspace;
use crate::linalg::{orthogonal_pair_3d, rank, solve_square};
use crate::rat::Rat;
use crate::vector::Vector;

#[derive(Clone)]
pub struct ConvexBody {
    dim: usize,
    affine_dim: usize,
    vertices: Vec<Vector>,
    facets: Vec<Halfspace>,
}

/// Convex hull of a point list; the entry point for building bodies from
/// points. Canonicalizes: duplicates and non-extreme points are dropped.
pub fn convex_hull(points: &[Vector]) -> Result<ConvexBody> {
    ConvexBody::hull(points)
}

impl ConvexBody {
    pub fn hull(points: &[Vector]) -> Result<ConvexBody> {
        if points.is_empty() {
            return Err(Error::EmptyInput);
        }
        let dim = points[0].dim();
        if points.iter().any(|p| p.dim() != dim) {
            return Err(Error::MixedDimensions);
        }
        check_dim(dim)?;

        let mut pts: Vec<Vector> = points.to_vec();
        pts.sort();
        pts.dedup();

        let (basis, affine_dim) = affine_basis(&pts);
        match affine_dim {
            0 => Ok(Self::point_body(pts.remove(0))),
            1 => Ok(Self::hull_segment(&pts, &basis[0])),
            2 => Self::hull_planar(&pts, &basis),
            3 => Ok(Self::hull_3d(&pts)),
            _ => unreachable!("dimension checked above"),
        }
    }

    fn point_body(p: Vector) -> ConvexBody {
        let dim = p.dim();
        let mut facets = Vec::with_capacity(2 * dim);
        for i in 0..dim {
            let mut e = alloc::vec![Rat::zero(); dim];
            e[i] = Rat::from_integer(1.into());
            let axis = Vector::new(e);
            facets.push(Halfspace::new(axis.clone(), p.get(i).clone()));
            facets.push(Halfspace::new(axis.neg(), -p.get(i).clone()));
        }
        Self::from_reps(alloc::vec![p], facets)
    }

    fn hull_segment(pts: &[Vector], dir: &Vector) -> ConvexBody {
        let dim = pts[0].dim();
        // Endpoints extremize the linear functional dir · x along the line.
        let lo = pts
            .iter()
            .min_by(|a, b| dir.dot(a).cmp(&dir.dot(b)))
            .unwrap()
            .clone();
        let hi = pts
            .iter()
            .max_by(|a, b| dir.dot(a).cmp(&dir.dot(b)))
            .unwrap()
            .clone();
        let mut facets = Vec::new();
        facets.push(Halfspace::new(dir.clone(), dir.dot(&hi)));
        facets.push(Halfspace::new(dir.neg(), -dir.dot(&lo)));
        match dim {
            1 => {}
            2 => {
                let n = Vector::new(alloc::vec![-dir.get(1).clone(), dir.get(0).clone()]);
                let off = n.dot(&lo);
                facets.push(Halfspace::new(n.clone(), off.clone()));
                facets.push(Halfspace::new(n.neg(), -off));
            }
            3 => {
                let (n1, n2) = orthogonal_pair_3d(dir);
                for n in [n1, n2] {
                    let off = n.dot(&lo);
                    facets.push(Halfspace::new(n.clone(), off.clone()));
                    facets.push(Halfspace::new(n.neg(), -off));
                }
            }
            _ => unreachable!(),
        }
        let mut vertices = alloc::vec![lo, hi];
        vertices.sort();
        Self::from_reps(vertices, facets)
    }

    fn hull_planar(pts: &[Vector], basis: &[Vector]) -> Result<ConvexBody> {
        let dim = pts[0].dim();
        let origin = &pts[0];
        // In the plane itself the standard basis serves; in 3D plane
        // coordinates use the affine basis and normals are lifted back.
        let standard = [Vector::from_ints(&[1, 0]), Vector::from_ints(&[0, 1])];
        let (u, v) = if dim == 2 {
            (&standard[0], &standard[1])
        } else {
            (&basis[0], &basis[1])
        };
        let plane: Vec<(Rat, Rat)> = pts
            .iter()
            .map(|p| plane_coords(&p.sub(origin), u, v))
            .collect::<Option<Vec<_>>>()
            .ok_or(Error::MixedDimensions)?;

        let ring = chain_hull_indices(&plane);
        let ring_pts: Vec<Vector> = ring.iter().map(|&i| pts[i].clone()).collect();
        let ring_plane: Vec<(Rat, Rat)> = ring.iter().map(|&i| plane[i].clone()).collect();

        let mut facets: Vec<Halfspace> = Vec::new();
        let plane_normal = if dim == 3 {
            let n = u.cross3(v);
            let off = n.dot(origin);
            facets.push(Halfspace::new(n.clone(), off.clone()));
            facets.push(Halfspace::new(n.neg(), -off));
            Some(n)
        } else {
            None
        };

        let m = ring_pts.len();
        for i in 0..m {
            let j = (i + 1) % m;
            let dx = &ring_plane[j].0 - &ring_plane[i].0;
            let dy = &ring_plane[j].1 - &ring_plane[i].1;
            // Outward normal of a counterclockwise edge in plane coordinates.
            let g = (dy, -dx);
            let w = match &plane_normal {
                None => Vector::new(alloc::vec![g.0, g.1]),
                Some(n) => solve_square(
                    &[u.clone(), v.clone(), n.clone()],
                    &[g.0, g.1, Rat::zero()],
                )
                .expect("basis rows are independent"),
            };
            let mut off = w.dot(&ring_pts[i]);
            let mut w = w;
            if ring_pts.iter().any(|q| w.dot(q) > off) {
                w = w.neg();
                off = -off;
            }
            facets.push(Halfspace::new(w, off));
        }

        let mut vertices = ring_pts;
        vertices.sort();
        facets.sort_by(Halfspace::canonical_cmp);
        facets.dedup();
        Ok(Self::from_reps(vertices, facets))
    }

    fn hull_3d(pts: &[Vector]) -> ConvexBody {
        let n = pts.len();
        let mut facets: Vec<Halfspace> = Vec::new();
        for i in 0..n {
            for j in (i + 1)..n {
                for k in (j + 1)..n {
                    let normal = pts[j].sub(&pts[i]).cross3(&pts[k].sub(&pts[i]));
                    if normal.is_zero() {
                        continue;
                    }
                    let off = normal.dot(&pts[i]);
                    let mut above = false;
                    let mut below = false;
                    for p in pts {
                        match normal.dot(p).cmp(&off) {
                            Ordering::Greater => above = true,
                            Ordering::Less => below = true,
                            Ordering::Equal => {}
                        }
                        if above && below {
                            break;
                        }
                    }
                    if !above {
                        facets.push(Halfspace::new(normal.clone(), off.clone()));
                    }
                    if !below {
                        facets.push(Halfspace::new(normal.neg(), -off));
                    }
                }
            }
        }
        facets.sort_by(Halfspace::canonical_cmp);
        facets.dedup();

        // A point is a vertex exactly when its tight supporting planes span
        // the full space.
        let mut vertices: Vec<Vector> = pts
            .iter()
            .filter(|p| {
                let tight: Vec<Vector> = facets
                    .iter()
                    .filter(|h| h.is_tight(p))
                    .map(|h| h.normal().clone())
                    .collect();
                rank(&tight) == 3
            })
            .cloned()
            .collect();
        vertices.sort();
        Self::from_reps(vertices, facets)
    }

    /// Trusted constructor: `vertices` sorted canonical extreme points,
    /// `facets` a complete halfspace description of their hull.
    pub(crate) fn from_reps(vertices: Vec<Vector>, facets: Vec<Halfspace>) -> ConvexBody {
        debug_assert!(!vertices.is_empty());
        let dim = vertices[0].dim();
        let (_, affine_dim) = affine_basis(&vertices);
        ConvexBody {
            dim,
            affine_dim,
            vertices,
            facets,
        }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    /// Dimension of the affine hull (0 for a point, 1 for a segment, ...).
    pub fn affine_dim(&self) -> usize {
        self.affine_dim
    }

    pub fn vertices(&self) -> &[Vector] {
        &self.vertices
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    /// The stored halfspace description (complete: its intersection is
    /// exactly this body).
    pub fn facets(&self) -> &[Halfspace] {
        &self.facets
    }

    pub fn is_point(&self) -> bool {
        self.vertices.len() == 1
    }

    pub fn contains(&self, x: &Vector) -> Result<bool> {
        if x.dim() != self.dim {
            return Err(Error::DimensionMismatch {
                expected: self.dim,
                found: x.dim(),
            });
        }
        Ok(self.contains_point(x))
    }

    pub(crate) fn contains_point(&self, x: &Vector) -> bool {
        self.facets.iter().all(|h| h.contains(x))
    }

    /// `self ⊆ other`, decided by testing the vertices of `self` against the
    /// facets of `other`.
    pub fn is_subset(&self, other: &ConvexBody) -> Result<bool> {
        if self.dim != other.dim {
            return Err(Error::DimensionMismatch {
                expected: other.dim,
                found: self.dim,
            });
        }
        Ok(self.vertices.iter().all(|v| other.contains_point(v)))
    }

    pub fn translate(&self, t: &Vector) -> ConvexBody {
        // Translation preserves lexicographic vertex order and facet normals.
        let vertices = self.vertices.iter().map(|v| v.add(t)).collect();
        let facets = self
            .facets
            .iter()
            .map(|h| Halfspace::new(h.normal().clone(), h.offset() + h.normal().dot(t)))
            .collect();
        ConvexBody {
            dim: self.dim,
            affine_dim: self.affine_dim,
            vertices,
            facets,
        }
    }

    /// Axis-aligned bounding box as (lower corner, upper corner).
    pub fn bbox(&self) -> (Vector, Vector) {
        let mut lo: Vec<Rat> = self.vertices[0].coords().to_vec();
        let mut hi = lo.clone();
        for v in &self.vertices[1..] {
            for (i, c) in v.iter().enumerate() {
                if c < &lo[i] {
                    lo[i] = c.clone();
                }
                if c > &hi[i] {
                    hi[i] = c.clone();
                }
            }
        }
        (Vector::new(lo), Vector::new(hi))
    }

    /// Average of the vertices; lies in the relative interior.
    pub fn centroid(&self) -> Vector {
        let n = Rat::from_integer((self.vertices.len() as i64).into());
        let mut acc = Vector::zero(self.dim);
        for v in &self.vertices {
            acc = acc.add(v);
        }
        acc.scale(&n.recip())
    }

    /// Vertices of a 2D body in counterclockwise boundary order.
    pub fn ring2d(&self) -> Result<Vec<Vector>> {
        if self.dim != 2 {
            return Err(Error::UnsupportedDimension {
                dim: self.dim,
                reason: "boundary ring is defined for planar bodies",
            });
        }
        if self.vertices.len() <= 2 {
            return Ok(self.vertices.clone());
        }
        let c = self.centroid();
        let mut ring = self.vertices.clone();
        ring.sort_by(|a, b| angle_cmp(&a.sub(&c), &b.sub(&c)));
        Ok(ring)
    }

    /// Vertex adjacency as index pairs into [`Self::vertices`].
    ///
    /// Two vertices are adjacent when their common tight facets cut a line,
    /// i.e. have normal rank `dim - 1`. Assumes the canonical facet list
    /// produced by the hull constructors.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let n = self.vertices.len();
        if n == 2 {
            return alloc::vec![(0, 1)];
        }
        if n < 2 {
            return Vec::new();
        }
        if self.dim == 2 {
            let ring = self.ring2d().expect("dim checked");
            let index_of = |v: &Vector| self.vertices.iter().position(|w| w == v).unwrap();
            return (0..ring.len())
                .map(|i| {
                    let a = index_of(&ring[i]);
                    let b = index_of(&ring[(i + 1) % ring.len()]);
                    (a.min(b), a.max(b))
                })
                .collect();
        }
        let tight_sets: Vec<Vec<&Halfspace>> = self
            .vertices
            .iter()
            .map(|v| self.facets.iter().filter(|h| h.is_tight(v)).collect())
            .collect();
        let mut edges = Vec::new();
        for i in 0..n {
            for j in (i + 1)..n {
                let common: Vec<Vector> = tight_sets[i]
                    .iter()
                    .filter(|h| tight_sets[j].contains(h))
                    .map(|h| h.normal().clone())
                    .collect();
                if rank(&common) == self.dim - 1 {
                    edges.push((i, j));
                }
            }
        }
        edges
    }
}

impl PartialEq for ConvexBody {
    /// Bodies are equal exactly when their canonical vertex lists coincide.
    fn eq(&self, other: &Self) -> bool {
        self.dim == other.dim && self.vertices == other.vertices
    }
}

impl Eq for ConvexBody {}

impl fmt::Debug for ConvexBody {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "ConvexBody[dim {}; ", self.dim)?;
        for (i, v) in self.vertices.iter().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            write!(f, "{v:?}")?;
        }
        write!(f, "]")
    }
}

/// Affinely independent direction basis of the point set (relative to the
/// first point) and its size.
pub(crate) fn affine_basis(pts: &[Vector]) -> (Vec<Vector>, usize) {
    let mut basis: Vec<Vector> = Vec::new();
    if pts.is_empty() {
        return (basis, 0);
    }
    let p0 = &pts[0];
    for p in &pts[1..] {
        let d = p.sub(p0);
        if d.is_zero() {
            continue;
        }
        basis.push(d);
        if rank(&basis) < basis.len() {
            basis.pop();
        }
        if basis.len() == p0.dim() {
            break;
        }
    }
    let k = basis.len();
    (basis, k)
}

/// Coordinates `(α, β)` with `p = α·u + β·v`, for `p` in the span of `u, v`.
fn plane_coords(p: &Vector, u: &Vector, v: &Vector) -> Option<(Rat, Rat)> {
    let dim = p.dim();
    for r1 in 0..dim {
        for r2 in (r1 + 1)..dim {
            let det = u.get(r1) * v.get(r2) - u.get(r2) * v.get(r1);
            if det.is_zero() {
                continue;
            }
            let a = (p.get(r1) * v.get(r2) - p.get(r2) * v.get(r1)) / det.clone();
            let b = (u.get(r1) * p.get(r2) - u.get(r2) * p.get(r1)) / det;
            return Some((a, b));
        }
    }
    None
}

/// Andrew's monotone chain on exact plane coordinates. Returns indices into
/// the input in counterclockwise order; collinear mid-edge points dropped.
fn chain_hull_indices(plane: &[(Rat, Rat)]) -> Vec<usize> {
    let mut idx: Vec<usize> = (0..plane.len()).collect();
    idx.sort_by(|&a, &b| {
        plane[a]
            .0
            .cmp(&plane[b].0)
            .then_with(|| plane[a].1.cmp(&plane[b].1))
    });

    let cross = |o: usize, a: usize, b: usize| -> Rat {
        let (ox, oy) = &plane[o];
        let (ax, ay) = &plane[a];
        let (bx, by) = &plane[b];
        (ax - ox) * (by - oy) - (ay - oy) * (bx - ox)
    };

    let mut lower: Vec<usize> = Vec::new();
    for &i in &idx {
        while lower.len() >= 2
            && !cross(lower[lower.len() - 2], lower[lower.len() - 1], i).is_positive()
        {
            lower.pop();
        }
        lower.push(i);
    }
    let mut upper: Vec<usize> = Vec::new();
    for &i in idx.iter().rev() {
        while upper.len() >= 2
            && !cross(upper[upper.len() - 2], upper[upper.len() - 1], i).is_positive()
        {
            upper.pop();
        }
        upper.push(i);
    }
    lower.pop();
    upper.pop();
    lower.extend(upper);
    lower
}

/// Exact angular order around the origin, starting at the positive x-axis.
pub(crate) fn angle_cmp(a: &Vector, b: &Vector) -> Ordering {
    let half = |v: &Vector| -> u8 {
        let x = v.get(0);
        let y = v.get(1);
        if y.is_positive() || (y.is_zero() && x.is_positive()) {
            0
        } else {
            1
        }
    };
    half(a).cmp(&half(b)).then_with(|| {
        let c = b.cross2(a); // a before b when cross(a, b) > 0
        if c.is_negative() {
            Ordering::Less
        } else if c.is_positive() {
            Ordering::Greater
        } else {
            Ordering::Equal
        }
    })
}

pub(crate) fn check_dim(dim: usize) -> Result<()> {
    if dim == 0 {
        return Err(Error::UnsupportedDimension {
            dim,
            reason: "dimension must be at least 1",
        });
    }
    if dim > 3 {
        return Err(Error::UnsupportedDimension {
            dim,
            reason: "exact vertex/facet enumeration is limited to dimension <= 3",
        });
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat::rat;

    fn v2(x: i64, y: i64) -> Vector {
        Vector::from_ints(&[x, y])
    }

    #[test]
    fn triangle_hull_is_canonical() {
        let b = convex_hull(&[v2(1, 1), v2(0, 0), v2(2, 0), v2(1, 1), v2(1, 0)]).unwrap();
        assert_eq!(b.vertices(), &[v2(0, 0), v2(1, 1), v2(2, 0)]);
        assert_eq!(b.facets().len(), 3);
        assert_eq!(b.affine_dim(), 2);
    }

    #[test]
    fn collinear_points_absorb() {
        let b = convex_hull(&[
            v2(0, 0),
            v2(1, 0),
            Vector::new(alloc::vec![rat(1, 2), rat(0, 1)]),
        ])
        .unwrap();
        assert_eq!(b.vertices(), &[v2(0, 0), v2(1, 0)]);
        assert_eq!(b.affine_dim(), 1);
        // H-description carries the opposite pair pinning the line y = 0.
        let has_pair = b
            .facets()
            .iter()
            .any(|h| h.normal() == &v2(0, 1) && h.offset().is_zero())
            && b.facets()
                .iter()
                .any(|h| h.normal() == &v2(0, -1) && h.offset().is_zero());
        assert!(has_pair);
    }

    #[test]
    fn hull_idempotent() {
        let b = convex_hull(&[v2(0, 0), v2(2, 0), v2(2, 2), v2(0, 2), v2(1, 1)]).unwrap();
        let again = convex_hull(b.vertices()).unwrap();
        assert_eq!(b, again);
        assert_eq!(b.vertex_count(), 4);
    }

    #[test]
    fn planar_triangle_in_3d() {
        let b = convex_hull(&[
            Vector::from_ints(&[1, 1, 0]),
            Vector::from_ints(&[1, 0, 1]),
            Vector::from_ints(&[0, 1, 1]),
        ])
        .unwrap();
        assert_eq!(b.vertex_count(), 3);
        assert_eq!(b.affine_dim(), 2);
        // Plane x + y + z = 2 pinned by an opposite pair.
        let n = Vector::from_ints(&[1, 1, 1]);
        assert!(b
            .facets()
            .iter()
            .any(|h| h.normal() == &n && h.offset() == &crate::rat::rat_int(2)));
        assert!(b.contains(&Vector::new(alloc::vec![
            rat(2, 3),
            rat(2, 3),
            rat(2, 3)
        ])).unwrap());
        assert!(!b.contains(&Vector::from_ints(&[0, 0, 0])).unwrap());
    }

    #[test]
    fn tetrahedron_hull() {
        let b = convex_hull(&[
            Vector::from_ints(&[0, 0, 0]),
            Vector::from_ints(&[1, 0, 0]),
            Vector::from_ints(&[0, 1, 0]),
            Vector::from_ints(&[0, 0, 1]),
            Vector::from_ints(&[0, 0, 0]),
        ])
        .unwrap();
        assert_eq!(b.vertex_count(), 4);
        assert_eq!(b.facets().len(), 4);
        assert_eq!(b.affine_dim(), 3);
        let inside = Vector::new(alloc::vec![rat(1, 8), rat(1, 8), rat(1, 8)]);
        assert!(b.contains(&inside).unwrap());
    }

    #[test]
    fn cube_edges() {
        let mut pts = Vec::new();
        for x in [0, 1] {
            for y in [0, 1] {
                for z in [0, 1] {
                    pts.push(Vector::from_ints(&[x, y, z]));
                }
            }
        }
        let b = convex_hull(&pts).unwrap();
        assert_eq!(b.vertex_count(), 8);
        assert_eq!(b.facets().len(), 6);
        assert_eq!(b.edges().len(), 12);
    }

    #[test]
    fn ring_order_is_ccw() {
        let b = convex_hull(&[v2(0, 0), v2(2, 0), v2(2, 2), v2(0, 2)]).unwrap();
        let ring = b.ring2d().unwrap();
        let mut area2 = Rat::zero();
        for i in 0..ring.len() {
            let j = (i + 1) % ring.len();
            area2 += ring[i].cross2(&ring[j]);
        }
        assert_eq!(area2, crate::rat::rat_int(8));
    }
}
