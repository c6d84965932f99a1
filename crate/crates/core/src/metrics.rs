//! Size functionals: diameter, farthest-point radius, Chebyshev radius and
//! center set, self-radius, inner radius, point-to-body distance, Hausdorff
//! distance.
//!
//! Everything reduces to vertices or to small exact linear programs:
//! suprema of convex functions over a body are attained at vertices, and the
//! radius-like quantities are linear programs in at most `dim + 1` variables.

use alloc::vec::Vec;

use num_traits::Zero;

use crate::body::ConvexBody;
use crate::error::{Error, Result};
use crate::lp::{self, Constraint, LpResult};
use crate::rat::{rat, Rat};
use crate::scalar::Scalar;
use crate::space::Space;
use crate::vector::Vector;
use crate::welzl::min_enclosing_disk;

/// Diameter with a witnessing vertex pair.
#[derive(Clone, Debug)]
pub struct DiameterResult {
    pub value: Scalar,
    /// Lexicographically least vertex pair attaining the diameter.
    pub witness: (Vector, Vector),
}

/// Chebyshev radius together with the set of centers.
#[derive(Clone, Debug)]
pub struct CenterSet {
    pub radius: Scalar,
    pub centers: ConvexBody,
    /// True when `centers` is the complete optimal set (polyhedral modes).
    /// In Euclidean mode a single center is reported and multiplicity is
    /// left undetermined.
    pub full_set: bool,
}

impl Space {
    /// Largest distance between points of `d` (attained at a vertex pair).
    pub fn diameter(&self, d: &ConvexBody) -> Result<DiameterResult> {
        self.check_body(d)?;
        let vs = d.vertices();
        if vs.len() < 2 {
            return Err(Error::DegenerateBody(
                "diameter requires a body with at least two points",
            ));
        }
        let mut best_key = Rat::zero();
        let mut witness = (vs[0].clone(), vs[1].clone());
        let mut first = true;
        for i in 0..vs.len() {
            for j in (i + 1)..vs.len() {
                let key = self.key(&vs[i].sub(&vs[j]));
                if first || key > best_key {
                    best_key = key;
                    witness = (vs[i].clone(), vs[j].clone());
                    first = false;
                }
            }
        }
        Ok(DiameterResult {
            value: self.key_to_scalar(best_key),
            witness,
        })
    }

    /// Diameter as an internal comparison key.
    pub(crate) fn diameter_key(&self, d: &ConvexBody) -> Result<Rat> {
        self.check_body(d)?;
        let vs = d.vertices();
        if vs.len() < 2 {
            return Err(Error::DegenerateBody(
                "diameter requires a body with at least two points",
            ));
        }
        let mut best = Rat::zero();
        for i in 0..vs.len() {
            for j in (i + 1)..vs.len() {
                let key = self.key(&vs[i].sub(&vs[j]));
                if key > best {
                    best = key;
                }
            }
        }
        Ok(best)
    }

    /// Diameter as an exact rational usable as a ball radius. For polyhedral
    /// norms this is the diameter itself; in Euclidean mode it is the
    /// polygon-gauge diameter (the norm actually realized by the mode's
    /// balls).
    pub(crate) fn construction_diameter(&self, d: &ConvexBody) -> Result<Rat> {
        self.check_body(d)?;
        let vs = d.vertices();
        if vs.len() < 2 {
            return Err(Error::DegenerateBody(
                "diameter requires a body with at least two points",
            ));
        }
        if !self.is_euclidean() {
            return self.diameter_key(d);
        }
        // The polygon gauge is expensive per pair; prefilter by squared
        // Euclidean length. gauge(v)² lies in [|v|², |v|² / cos²(π/2k)], so
        // the gauge maximum is attained among pairs with
        // |v|² >= cos²(π/2k) · max |v|².
        let mut sq: Vec<(Rat, usize, usize)> = Vec::with_capacity(vs.len() * (vs.len() - 1) / 2);
        let mut sq_max = Rat::zero();
        for i in 0..vs.len() {
            for j in (i + 1)..vs.len() {
                let k = vs[i].sub(&vs[j]).sq_norm();
                if k > sq_max {
                    sq_max = k.clone();
                }
                sq.push((k, i, j));
            }
        }
        let cos_bound = match self.norm() {
            crate::norm::Norm::Euclidean { k } => {
                let c = libm::cos(core::f64::consts::PI / (2.0 * *k as f64));
                crate::rat::rat_from_f64(c * c - 1e-9).expect("finite")
            }
            _ => unreachable!(),
        };
        let threshold = sq_max * cos_bound;
        let mut best = Rat::zero();
        for (k, i, j) in sq {
            if k < threshold {
                continue;
            }
            let g = self.linear_key(&vs[i].sub(&vs[j]));
            if g > best {
                best = g;
            }
        }
        Ok(best)
    }

    /// Farthest distance from `x` into `d`: `sup { ||x - p|| : p in d }`.
    pub fn farthest_radius(&self, d: &ConvexBody, x: &Vector) -> Result<Scalar> {
        self.check_body(d)?;
        self.check_vector(x)?;
        Ok(self.key_to_scalar(self.farthest_key(d, x)))
    }

    pub(crate) fn farthest_key(&self, d: &ConvexBody, x: &Vector) -> Rat {
        d.vertices()
            .iter()
            .map(|v| self.key(&x.sub(v)))
            .max()
            .expect("bodies have vertices")
    }

    /// Chebyshev radius and the full set of centers.
    ///
    /// Polyhedral modes solve the enclosing-ball linear program exactly and
    /// return the whole center set (the intersection of vertex balls at the
    /// optimal radius). Euclidean mode solves the exact minimum enclosing
    /// disk of the vertices and reports its single center.
    pub fn chebyshev(&self, d: &ConvexBody) -> Result<CenterSet> {
        self.check_body(d)?;
        if d.vertex_count() < 2 {
            return Err(Error::DegenerateBody(
                "radius requires a body with at least two points",
            ));
        }
        if self.is_euclidean() {
            let disk = min_enclosing_disk(d.vertices());
            let centers = ConvexBody::hull(&[disk.center])?;
            return Ok(CenterSet {
                radius: self.key_to_scalar(disk.sq_radius),
                centers,
                full_set: false,
            });
        }
        let radius = self.enclosing_radius_lp(d, None)?;
        let centers = self
            .ball_intersection_at(d, &radius)?
            .expect("ball intersection at the optimal radius is nonempty");
        Ok(CenterSet {
            radius: Scalar::Exact(radius),
            centers,
            full_set: true,
        })
    }

    /// Self-radius: least enclosing radius with the center constrained to
    /// lie in the body. Euclidean mode solves the polygon-gauge program and
    /// is approximate.
    pub fn self_radius(&self, d: &ConvexBody) -> Result<Scalar> {
        self.check_body(d)?;
        if d.vertex_count() < 2 {
            return Err(Error::DegenerateBody(
                "self-radius requires a body with at least two points",
            ));
        }
        let value = self.enclosing_radius_lp(d, Some(d))?;
        if self.is_euclidean() {
            Ok(Scalar::Approx(crate::rat::rat_to_f64(&value)))
        } else {
            Ok(Scalar::Exact(value))
        }
    }

    /// Solves `min r` s.t. every vertex of `d` lies in `B(c, r)`, optionally
    /// constraining the center to `inside`. The optimal value is exact in
    /// the linear (gauge) metric of the mode.
    fn enclosing_radius_lp(&self, d: &ConvexBody, inside: Option<&ConvexBody>) -> Result<Rat> {
        let dim = self.dim();
        let delta = self.construction_diameter(d)?;

        if matches!(self.norm(), crate::norm::Norm::Max) && inside.is_none() {
            // Half the largest bounding-box side.
            let (lo, hi) = d.bbox();
            let r = (0..dim)
                .map(|i| hi.get(i) - lo.get(i))
                .max()
                .expect("dim >= 1");
            return Ok(r * rat(1, 2));
        }

        let nvars = dim + 1;
        let mut cons: Vec<Constraint> = Vec::new();
        for v in d.vertices() {
            for h in self.unit_ball().facets() {
                // a · (v - c) <= r * a_off  ⟺  -a·c - a_off·r <= -a·v
                let mut coeffs: Vec<Rat> = h.normal().iter().map(|a| -a).collect();
                coeffs.push(-h.offset().clone());
                cons.push(Constraint::new(coeffs, -h.normal().dot(v)));
            }
        }
        if let Some(host) = inside {
            for h in host.facets() {
                let mut coeffs: Vec<Rat> = h.normal().coords().to_vec();
                coeffs.push(Rat::zero());
                cons.push(Constraint::new(coeffs, h.offset().clone()));
            }
        }
        let (lo, hi) = d.bbox();
        let mut lower: Vec<Rat> = (0..dim)
            .map(|i| lo.get(i) - &delta * self.axis_radius().get(i))
            .collect();
        let mut upper: Vec<Rat> = (0..dim)
            .map(|i| hi.get(i) + &delta * self.axis_radius().get(i))
            .collect();
        lower.push(Rat::zero());
        upper.push(delta);
        let mut obj = alloc::vec![Rat::zero(); nvars];
        obj[dim] = Rat::from_integer(1.into());
        match lp::minimize(&obj, &cons, &lower, &upper) {
            LpResult::Optimal { value, .. } => Ok(value),
            LpResult::Infeasible => unreachable!("enclosing-ball program is always feasible"),
        }
    }

    /// Inner radius: the largest `ρ` with `B(x, ρ) ⊆ d` for some `x ∈ d`;
    /// zero when the body has empty interior.
    pub fn inner_radius(&self, d: &ConvexBody) -> Result<Scalar> {
        self.check_body(d)?;
        let dim = self.dim();
        let delta = if d.vertex_count() >= 2 {
            self.construction_diameter(d)?
        } else {
            Rat::from_integer(1.into())
        };
        let nvars = dim + 1;
        let mut cons: Vec<Constraint> = Vec::new();
        for h in d.facets() {
            // a·x + ρ·h_ball(a) <= b keeps the ball inside facet h.
            let mut coeffs: Vec<Rat> = h.normal().coords().to_vec();
            coeffs.push(self.support(h.normal()));
            cons.push(Constraint::new(coeffs, h.offset().clone()));
        }
        let (lo, hi) = d.bbox();
        let mut lower: Vec<Rat> = lo.coords().to_vec();
        let mut upper: Vec<Rat> = hi.coords().to_vec();
        lower.push(Rat::zero());
        upper.push(delta);
        let mut obj = alloc::vec![Rat::zero(); nvars];
        obj[dim] = Rat::from_integer(1.into());
        let value = match lp::maximize(&obj, &cons, &lower, &upper) {
            LpResult::Optimal { value, .. } => value,
            LpResult::Infeasible => unreachable!("rho = 0 with x in d is feasible"),
        };
        if self.is_euclidean() {
            Ok(Scalar::Approx(crate::rat::rat_to_f64(&value)))
        } else {
            Ok(Scalar::Exact(value))
        }
    }

    /// Distance from a point to a body: `min { ||x - y|| : y in d }`.
    pub fn point_dist(&self, x: &Vector, d: &ConvexBody) -> Result<Scalar> {
        Ok(self.key_to_scalar(self.point_dist_key(x, d)?))
    }

    pub(crate) fn point_dist_key(&self, x: &Vector, d: &ConvexBody) -> Result<Rat> {
        self.check_body(d)?;
        self.check_vector(x)?;
        if d.contains_point(x) {
            return Ok(Rat::zero());
        }
        if self.is_euclidean() {
            return Ok(euclid_sq_dist_to_body(x, d));
        }
        let dim = self.dim();
        let nvars = dim + 1;
        let bound = d
            .vertices()
            .iter()
            .map(|v| self.linear_key(&x.sub(v)))
            .max()
            .expect("bodies have vertices");
        let mut cons: Vec<Constraint> = Vec::new();
        for h in d.facets() {
            let mut coeffs: Vec<Rat> = h.normal().coords().to_vec();
            coeffs.push(Rat::zero());
            cons.push(Constraint::new(coeffs, h.offset().clone()));
        }
        for h in self.unit_ball().facets() {
            // a·(x - y) <= t * a_off
            let mut coeffs: Vec<Rat> = h.normal().iter().map(|a| -a).collect();
            coeffs.push(-h.offset().clone());
            cons.push(Constraint::new(coeffs, -h.normal().dot(x)));
        }
        let (lo, hi) = d.bbox();
        let mut lower: Vec<Rat> = lo.coords().to_vec();
        let mut upper: Vec<Rat> = hi.coords().to_vec();
        lower.push(Rat::zero());
        upper.push(bound);
        let mut obj = alloc::vec![Rat::zero(); nvars];
        obj[dim] = Rat::from_integer(1.into());
        match lp::minimize(&obj, &cons, &lower, &upper) {
            LpResult::Optimal { value, .. } => Ok(value),
            LpResult::Infeasible => unreachable!("projection program is always feasible"),
        }
    }

    /// Hausdorff distance between two bodies, via the vertex reduction
    /// `max(max_v dist(v, B), max_w dist(w, A))`.
    pub fn hausdorff(&self, a: &ConvexBody, b: &ConvexBody) -> Result<Scalar> {
        Ok(self.key_to_scalar(self.hausdorff_key(a, b)?))
    }

    pub(crate) fn hausdorff_key(&self, a: &ConvexBody, b: &ConvexBody) -> Result<Rat> {
        self.check_body(a)?;
        self.check_body(b)?;
        let mut best = Rat::zero();
        for v in a.vertices() {
            let k = self.point_dist_key(v, b)?;
            if k > best {
                best = k;
            }
        }
        for w in b.vertices() {
            let k = self.point_dist_key(w, a)?;
            if k > best {
                best = k;
            }
        }
        Ok(best)
    }
}

/// Exact squared Euclidean distance from `x` to a planar body (point,
/// segment, or polygon boundary), assuming `x` lies outside.
fn euclid_sq_dist_to_body(x: &Vector, d: &ConvexBody) -> Rat {
    let vs = d.vertices();
    if vs.len() == 1 {
        return x.sub(&vs[0]).sq_norm();
    }
    let ring = if vs.len() == 2 {
        vs.to_vec()
    } else {
        d.ring2d().expect("euclidean mode is planar")
    };
    let mut best: Option<Rat> = None;
    let m = ring.len();
    let segments = if m == 2 { 1 } else { m };
    for i in 0..segments {
        let a = &ring[i];
        let b = &ring[(i + 1) % m];
        let k = sq_dist_point_segment(x, a, b);
        if best.as_ref().map_or(true, |cur| &k < cur) {
            best = Some(k);
        }
    }
    best.expect("at least one segment")
}

fn sq_dist_point_segment(p: &Vector, a: &Vector, b: &Vector) -> Rat {
    let w = b.sub(a);
    let ww = w.sq_norm();
    if ww.is_zero() {
        return p.sub(a).sq_norm();
    }
    let mut t = p.sub(a).dot(&w) / ww;
    let zero = Rat::zero();
    let one = Rat::from_integer(1.into());
    if t < zero {
        t = zero;
    } else if t > one {
        t = one;
    }
    let proj = a.add(&w.scale(&t));
    p.sub(&proj).sq_norm()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::body::convex_hull;
    use crate::norm::Norm;
    use crate::rat::rat_int;

    fn v2(x: i64, y: i64) -> Vector {
        Vector::from_ints(&[x, y])
    }

    fn max2() -> Space {
        Space::new(2, Norm::Max).unwrap()
    }

    #[test]
    fn segment_diameter_with_witness() {
        let s = max2();
        let seg = convex_hull(&[v2(0, 0), v2(1, 0)]).unwrap();
        let d = s.diameter(&seg).unwrap();
        assert_eq!(d.value, Scalar::Exact(rat_int(1)));
        assert_eq!(d.witness, (v2(0, 0), v2(1, 0)));
    }

    #[test]
    fn singleton_rejected() {
        let s = max2();
        let p = convex_hull(&[v2(3, 3)]).unwrap();
        assert!(matches!(s.diameter(&p), Err(Error::DegenerateBody(_))));
    }

    #[test]
    fn unit_square_functionals() {
        let s = max2();
        let sq = convex_hull(&[v2(0, 0), v2(1, 0), v2(1, 1), v2(0, 1)]).unwrap();
        assert_eq!(s.diameter(&sq).unwrap().value, Scalar::Exact(rat_int(1)));
        let c = s.chebyshev(&sq).unwrap();
        assert_eq!(c.radius, Scalar::Exact(rat(1, 2)));
        assert!(c.full_set);
        assert_eq!(
            c.centers.vertices(),
            &[Vector::new(alloc::vec![rat(1, 2), rat(1, 2)])]
        );
        assert_eq!(s.self_radius(&sq).unwrap(), Scalar::Exact(rat(1, 2)));
        assert_eq!(s.inner_radius(&sq).unwrap(), Scalar::Exact(rat(1, 2)));
    }

    #[test]
    fn segment_inner_radius_zero() {
        let s = max2();
        let seg = convex_hull(&[v2(0, 0), v2(1, 0)]).unwrap();
        assert_eq!(s.inner_radius(&seg).unwrap(), Scalar::Exact(rat_int(0)));
        assert_eq!(s.self_radius(&seg).unwrap(), Scalar::Exact(rat(1, 2)));
    }

    #[test]
    fn point_distance_examples() {
        let s = max2();
        let sq = convex_hull(&[v2(0, 0), v2(1, 0), v2(1, 1), v2(0, 1)]).unwrap();
        assert_eq!(
            s.point_dist(&v2(2, 0), &sq).unwrap(),
            Scalar::Exact(rat_int(1))
        );
        assert_eq!(
            s.point_dist(&v2(0, 0), &sq).unwrap(),
            Scalar::Exact(rat_int(0))
        );
    }

    #[test]
    fn hausdorff_examples() {
        let s = max2();
        let sq = convex_hull(&[v2(0, 0), v2(1, 0), v2(1, 1), v2(0, 1)]).unwrap();
        let tall = convex_hull(&[v2(0, -1), v2(1, -1), v2(1, 1), v2(0, 1)]).unwrap();
        assert_eq!(s.hausdorff(&sq, &tall).unwrap(), Scalar::Exact(rat_int(1)));
        assert_eq!(s.hausdorff(&sq, &sq).unwrap(), Scalar::Exact(rat_int(0)));
    }

    #[test]
    fn euclidean_point_dist_is_exact_geometry() {
        let s = Space::new(2, Norm::euclidean()).unwrap();
        let sq = convex_hull(&[v2(0, 0), v2(2, 0), v2(2, 2), v2(0, 2)]).unwrap();
        let d = s.point_dist(&v2(5, 2), &sq).unwrap();
        assert_eq!(d.to_f64(), 3.0);
        let corner = s.point_dist(&v2(3, 3), &sq).unwrap();
        assert!((corner.to_f64() - 2f64.sqrt()).abs() < 1e-12);
    }

    #[test]
    fn euclidean_chebyshev_single_center() {
        let s = Space::new(2, Norm::euclidean()).unwrap();
        let sq = convex_hull(&[v2(0, 0), v2(2, 0), v2(2, 2), v2(0, 2)]).unwrap();
        let c = s.chebyshev(&sq).unwrap();
        assert!(!c.full_set);
        assert_eq!(c.centers.vertices(), &[v2(1, 1)]);
        assert!((c.radius.to_f64() - 2f64.sqrt()).abs() < 1e-12);
    }
}
