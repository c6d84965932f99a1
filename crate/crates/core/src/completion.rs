//! Completions of convex bodies and the associated constructions.
//!
//! For a body `d` of diameter `δ`:
//!
//! * the *ball intersection* is `⋂ { B(x, δ) : x ∈ d }` — the union of all
//!   completions of `d`;
//! * the *ball hull* is `⋂ { B(x, δ) : d ⊆ B(x, δ) }` — the intersection of
//!   all completions, computed as the ball intersection taken over the
//!   vertices of the ball intersection;
//! * `d` is *complete* (diametrically maximal) exactly when it equals its
//!   ball intersection, and has a unique completion exactly when its ball
//!   intersection has the same diameter.
//!
//! Both intersections reduce to vertices: `||x - p|| <= ρ` for all `p` in a
//! body iff it holds at the body's vertices. Since all balls are translates
//! of one polytope, the intersection over vertices keeps the unit ball's
//! facet directions with offsets tightened by support minima.

use alloc::vec::Vec;

use num_traits::{Signed, Zero};

use crate::body::ConvexBody;
use crate::enumerate::{body_from_system, intersect_bodies};
use crate::error::{Error, Result};
use crate::halfspace::Halfspace;
use crate::rat::{rat_to_f64, Rat};
use crate::rng::SplitMix64;
use crate::scalar::Scalar;
use crate::space::Space;
use crate::vector::Vector;

/// Iteration cap for the greedy completion loop.
pub const MAX_COMPLETION_ITERATIONS: usize = 64;

/// How the greedy completion picks the next vertex to absorb.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Strategy {
    /// Add the candidate vertex farthest from the current body
    /// (lexicographically least among ties). Deterministic.
    FarthestFromBody,
    /// Add a seeded-random candidate vertex; used for sampling the
    /// completion family.
    RandomVertex { seed: u64 },
}

#[derive(Clone, Debug, PartialEq)]
pub enum CompletionStatus {
    /// The final body equals its ball intersection exactly.
    ExactComplete,
    /// Euclidean mode: the final body is complete up to the polygon
    /// approximation tolerance; `gap` is the remaining Hausdorff distance.
    ToleranceComplete { gap: Scalar },
    /// The iteration cap was reached; `gap` is the remaining Hausdorff
    /// distance to the ball intersection.
    IterationCap { gap: Scalar },
}

/// The run record of one greedy completion.
#[derive(Clone, Debug)]
pub struct CompletionTrace {
    pub initial: ConvexBody,
    pub added: Vec<Vector>,
    pub final_body: ConvexBody,
    pub status: CompletionStatus,
}

impl CompletionTrace {
    pub fn is_exact(&self) -> bool {
        matches!(self.status, CompletionStatus::ExactComplete)
    }
}

/// One probed subset in a minimality scan.
#[derive(Clone, Debug)]
pub struct SubsetProbe {
    pub subset: ConvexBody,
    pub diameter_preserved: bool,
    /// Present only when the diameter is preserved.
    pub unique_completion: Option<bool>,
    /// When the completion is unique: does it equal the scan target?
    pub completion_is_target: Option<bool>,
}

/// Result of probing proper subsets of a body for unique completions.
/// A finite probe over a declared cut family — evidence, not a certificate.
#[derive(Clone, Debug)]
pub struct MinimalityReport {
    pub subject: ConvexBody,
    pub target: ConvexBody,
    pub probes: Vec<SubsetProbe>,
}

impl MinimalityReport {
    /// True when every diameter-preserving probe has multiple completions.
    pub fn all_preserving_probes_multiple(&self) -> bool {
        self.probes
            .iter()
            .filter(|p| p.diameter_preserved)
            .all(|p| p.unique_completion == Some(false))
    }

    pub fn preserving_probe_count(&self) -> usize {
        self.probes.iter().filter(|p| p.diameter_preserved).count()
    }
}

impl Space {
    /// `⋂ { B(v, ρ) : v vertex of s }`; `None` when empty (ρ below the
    /// Chebyshev radius of `s`).
    pub fn ball_intersection_at(
        &self,
        s: &ConvexBody,
        rho: &Rat,
    ) -> Result<Option<ConvexBody>> {
        self.check_body(s)?;
        if !rho.is_positive() {
            return Err(Error::NonpositiveRadius);
        }
        if matches!(self.norm(), crate::norm::Norm::Max) {
            return Ok(self.max_norm_box_intersection(s, rho));
        }
        let mut system: Vec<Halfspace> = Vec::with_capacity(self.unit_ball().facets().len());
        for h in self.unit_ball().facets() {
            let tightest = s
                .vertices()
                .iter()
                .map(|v| h.normal().dot(v))
                .min()
                .expect("bodies have vertices");
            system.push(Halfspace::new(
                h.normal().clone(),
                h.offset() * rho + tightest,
            ));
        }
        // The region sits inside any single ball of the family.
        let v0 = &s.vertices()[0];
        let lo = Vector::new(
            (0..self.dim())
                .map(|i| v0.get(i) - rho * self.axis_radius().get(i))
                .collect(),
        );
        let hi = Vector::new(
            (0..self.dim())
                .map(|i| v0.get(i) + rho * self.axis_radius().get(i))
                .collect(),
        );
        Ok(body_from_system(&system, self.dim(), Some((&lo, &hi))))
    }

    /// Max-norm balls are boxes, so the intersection is a box computed
    /// directly from per-axis extremes.
    fn max_norm_box_intersection(&self, s: &ConvexBody, rho: &Rat) -> Option<ConvexBody> {
        let dim = self.dim();
        let mut lo: Vec<Rat> = Vec::with_capacity(dim);
        let mut hi: Vec<Rat> = Vec::with_capacity(dim);
        let (bb_lo, bb_hi) = s.bbox();
        for i in 0..dim {
            let l = bb_hi.get(i) - rho;
            let h = bb_lo.get(i) + rho;
            if l > h {
                return None;
            }
            lo.push(l);
            hi.push(h);
        }
        let mut vertices: Vec<Vector> = Vec::new();
        let mut stack: Vec<Rat> = Vec::with_capacity(dim);
        build_box_vertices(&lo, &hi, &mut stack, &mut vertices);
        let mut facets: Vec<Halfspace> = Vec::with_capacity(2 * dim);
        for i in 0..dim {
            let mut e = alloc::vec![Rat::zero(); dim];
            e[i] = Rat::from_integer(1.into());
            let axis = Vector::new(e);
            facets.push(Halfspace::new(axis.clone(), hi[i].clone()));
            facets.push(Halfspace::new(axis.neg(), -lo[i].clone()));
        }
        facets.sort_by(Halfspace::canonical_cmp);
        Some(ConvexBody::from_reps(vertices, facets))
    }

    /// The ball intersection of `d` at its own diameter: the union of all
    /// completions of `d`. Contains `d`.
    pub fn ball_intersection(&self, d: &ConvexBody) -> Result<ConvexBody> {
        let delta = self.positive_diameter(d)?;
        let result = self
            .ball_intersection_at(d, &delta)?
            .expect("a body lies inside its own ball intersection");
        debug_assert!(d.is_subset(&result).unwrap_or(false));
        Ok(result)
    }

    /// The ball hull of `d`: the intersection of all completions of `d`.
    /// Satisfies `d ⊆ hull ⊆ ball_intersection(d)` and has the same
    /// diameter as `d`.
    pub fn ball_hull(&self, d: &ConvexBody) -> Result<ConvexBody> {
        let delta = self.positive_diameter(d)?;
        let outer = self.ball_intersection(d)?;
        let hull = self
            .ball_intersection_at(&outer, &delta)?
            .expect("the ball hull contains the body");
        debug_assert!(d.is_subset(&hull).unwrap_or(false));
        Ok(hull)
    }

    /// A body is complete (diametrically maximal) iff it equals its ball
    /// intersection. Exact for polyhedral norms; in Euclidean mode the test
    /// allows the polygon approximation tolerance.
    pub fn is_complete(&self, d: &ConvexBody) -> Result<bool> {
        let dprime = self.ball_intersection(d)?;
        if self.is_euclidean() {
            let gap = self.hausdorff_key(d, &dprime)?;
            let delta = self.diameter(d)?.value.to_f64();
            Ok(libm::sqrt(rat_to_f64(&gap)) <= self.euclid_tolerance(delta))
        } else {
            Ok(*d == dprime)
        }
    }

    /// A body has a unique completion iff its ball intersection has the same
    /// diameter.
    pub fn has_unique_completion(&self, d: &ConvexBody) -> Result<bool> {
        let dprime = self.ball_intersection(d)?;
        if self.is_euclidean() {
            let a = self.diameter(d)?.value.to_f64();
            let b = self.diameter(&dprime)?.value.to_f64();
            Ok((a - b).abs() <= self.euclid_tolerance(a))
        } else {
            Ok(self.construction_diameter(d)? == self.construction_diameter(&dprime)?)
        }
    }

    /// Greedily completes `d` by absorbing one vertex of its current ball
    /// intersection per round; the diameter is preserved at every step.
    ///
    /// With `within = (center, r)` the growth is confined to `B(center, r)`,
    /// which requires `d ⊆ B(center, r)` and `r <= diameter(d)` (a completion
    /// inside the ball exists only under that bound).
    pub fn complete_one(
        &self,
        d: &ConvexBody,
        strategy: Strategy,
        within: Option<(&Vector, &Rat)>,
    ) -> Result<CompletionTrace> {
        let delta = self.positive_diameter(d)?;
        let constraint = match within {
            None => None,
            Some((center, r)) => {
                self.check_vector(center)?;
                if !r.is_positive() {
                    return Err(Error::NonpositiveRadius);
                }
                if *r > delta {
                    return Err(Error::Precondition(
                        "constrained completion requires r <= diameter(d)",
                    ));
                }
                let ball = self.ball_unchecked(center, r);
                if !d.is_subset(&ball)? {
                    return Err(Error::Precondition(
                        "constrained completion requires d to lie inside the given ball",
                    ));
                }
                Some(ball)
            }
        };

        let mut rng = match strategy {
            Strategy::FarthestFromBody => None,
            Strategy::RandomVertex { seed } => Some(SplitMix64::new(seed)),
        };

        let mut current = d.clone();
        let mut added: Vec<Vector> = Vec::new();
        let mut status: Option<CompletionStatus> = None;

        for _ in 0..MAX_COMPLETION_ITERATIONS {
            let dprime = self
                .ball_intersection_at(&current, &delta)?
                .expect("body lies in its ball intersection");
            let region = match &constraint {
                None => dprime.clone(),
                Some(ball) => intersect_bodies(&[dprime.clone(), ball.clone()])?
                    .expect("the current body lies in both"),
            };
            let candidates: Vec<&Vector> = region
                .vertices()
                .iter()
                .filter(|v| !current.contains_point(v))
                .collect();
            if candidates.is_empty() {
                // No diameter-preserving growth remains, and within the
                // constrained form a completion inside the ball exists, so
                // the current body is complete.
                status = Some(CompletionStatus::ExactComplete);
                debug_assert_eq!(current, dprime);
                break;
            }
            if self.is_euclidean() {
                let gap = self.hausdorff_key(&current, &dprime)?;
                let scale = libm::sqrt(rat_to_f64(&self.diameter_key(&current)?));
                if libm::sqrt(rat_to_f64(&gap)) <= self.euclid_tolerance(scale) {
                    status = Some(CompletionStatus::ToleranceComplete {
                        gap: self.key_to_scalar(gap),
                    });
                    break;
                }
            }
            let pick: Vector = match &mut rng {
                None => {
                    // Farthest candidate; candidates are in lexicographic
                    // order, so the first strict maximum is the tie-break.
                    let mut best: Option<(&Vector, Rat)> = None;
                    for v in &candidates {
                        let key = self.point_dist_key(v, &current)?;
                        match &best {
                            Some((_, bk)) if &key <= bk => {}
                            _ => best = Some((v, key)),
                        }
                    }
                    best.expect("candidates nonempty").0.clone()
                }
                Some(rng) => candidates[rng.below(candidates.len())].clone(),
            };
            current = ConvexBody::hull(
                &current
                    .vertices()
                    .iter()
                    .cloned()
                    .chain(core::iter::once(pick.clone()))
                    .collect::<Vec<_>>(),
            )?;
            added.push(pick);
        }

        let status = match status {
            Some(s) => s,
            None => {
                let dprime = self.ball_intersection_at(&current, &delta)?.expect("nonempty");
                let gap = self.hausdorff_key(&current, &dprime)?;
                CompletionStatus::IterationCap {
                    gap: self.key_to_scalar(gap),
                }
            }
        };
        Ok(CompletionTrace {
            initial: d.clone(),
            added,
            final_body: current,
            status,
        })
    }

    /// Samples `count` completions with the random-vertex strategy under
    /// distinct per-index sub-seeds. Deterministic for a fixed seed.
    pub fn sample_completions(
        &self,
        d: &ConvexBody,
        count: usize,
        seed: u64,
    ) -> Result<Vec<CompletionTrace>> {
        if count == 0 {
            return Err(Error::Precondition("sampling requires count >= 1"));
        }
        (0..count)
            .map(|i| {
                let sub = SplitMix64::substream(seed, i as u64).next_u64();
                self.complete_one(d, Strategy::RandomVertex { seed: sub }, None)
            })
            .collect()
    }

    /// Largest pairwise Hausdorff distance over sampled completions: a
    /// lower bound for the true spread of the completion family.
    pub fn completion_spread(
        &self,
        d: &ConvexBody,
        samples: usize,
        seed: u64,
    ) -> Result<Scalar> {
        if samples < 2 {
            return Err(Error::Precondition("spread requires at least two samples"));
        }
        let traces = self.sample_completions(d, samples, seed)?;
        let mut best = Rat::zero();
        for i in 0..traces.len() {
            for j in (i + 1)..traces.len() {
                let k = self.hausdorff_key(&traces[i].final_body, &traces[j].final_body)?;
                if k > best {
                    best = k;
                }
            }
        }
        Ok(self.key_to_scalar(best))
    }

    /// Tests the constant-diameter identity
    /// `farthest(c, x) = diameter(c) + dist(x, c)` at seeded random exterior
    /// probe points. Exact in polyhedral modes.
    pub fn check_constant_diameter(
        &self,
        c: &ConvexBody,
        probes: usize,
        seed: u64,
    ) -> Result<bool> {
        if !self.is_complete(c)? {
            return Err(Error::Precondition(
                "constant-diameter check requires a complete body",
            ));
        }
        let delta_key = self.diameter_key(c)?;
        let delta_lin = self.construction_diameter(c)?;
        let (lo, hi) = c.bbox();
        let mut rng = SplitMix64::new(seed);
        let mut found = 0usize;
        let mut attempts = 0usize;
        while found < probes && attempts < probes.saturating_mul(64).max(64) {
            attempts += 1;
            let x = Vector::new(
                (0..self.dim())
                    .map(|i| {
                        let pad = &delta_lin * self.axis_radius().get(i);
                        let l = lo.get(i) - &pad;
                        let h = hi.get(i) + &pad;
                        let t = Rat::new((rng.below(65) as i64).into(), 64.into());
                        &l + (h - &l) * t
                    })
                    .collect(),
            );
            if c.contains_point(&x) {
                continue; // probes must be exterior
            }
            found += 1;
            let lhs = self.farthest_key(c, &x);
            let dist = self.point_dist_key(&x, c)?;
            if self.is_euclidean() {
                let lhs = libm::sqrt(rat_to_f64(&lhs));
                let rhs = libm::sqrt(rat_to_f64(&delta_key)) + libm::sqrt(rat_to_f64(&dist));
                let tol = self.euclid_tolerance(rat_to_f64(&delta_lin));
                if (lhs - rhs).abs() > tol {
                    return Ok(false);
                }
            } else if lhs != &delta_key + &dist {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Whether `d` is minimal among subsets of the complete body `c` that
    /// have `c` as a completion: in finite dimensions, exactly the segments
    /// whose length is the diameter of `c`.
    pub fn is_minimal_with_completion(&self, d: &ConvexBody, c: &ConvexBody) -> Result<bool> {
        if !self.is_complete(c)? {
            return Err(Error::Precondition(
                "minimality target must be a complete body",
            ));
        }
        if !d.is_subset(c)? {
            return Err(Error::Precondition(
                "minimality subject must be a subset of the target",
            ));
        }
        if self.diameter_key(d)? != self.diameter_key(c)? {
            return Err(Error::Precondition(
                "minimality subject must have the target's diameter",
            ));
        }
        Ok(d.vertex_count() == 2)
    }

    /// Probes proper subsets of `d` (vertex shavings at the given edge
    /// parameters, plus hulls of proper vertex subsets) and reports, for
    /// each diameter-preserving probe, whether its completion is unique and
    /// whether it equals `c`. A finite probe, not a certificate.
    pub fn subset_completion_scan(
        &self,
        d: &ConvexBody,
        c: &ConvexBody,
        cut_params: &[Rat],
        seed: u64,
        max_probes: usize,
    ) -> Result<MinimalityReport> {
        self.check_body(d)?;
        self.check_body(c)?;
        if !self.has_unique_completion(d)? || self.ball_intersection(d)? != *c {
            return Err(Error::Precondition(
                "subset scan requires c to be the unique completion of d",
            ));
        }
        let one = Rat::from_integer(1.into());
        if cut_params
            .iter()
            .any(|t| !t.is_positive() || *t >= one)
        {
            return Err(Error::Precondition(
                "cut parameters must lie strictly between 0 and 1",
            ));
        }

        let verts = d.vertices();
        let n = verts.len();
        let edges = d.edges();
        let mut subsets: Vec<ConvexBody> = Vec::new();

        // Vertex shavings: replace one vertex by points at parameter t along
        // its incident edges.
        for vi in 0..n {
            let neighbors: Vec<usize> = edges
                .iter()
                .filter_map(|&(a, b)| {
                    if a == vi {
                        Some(b)
                    } else if b == vi {
                        Some(a)
                    } else {
                        None
                    }
                })
                .collect();
            if neighbors.is_empty() {
                continue;
            }
            for t in cut_params {
                let mut pts: Vec<Vector> = verts
                    .iter()
                    .enumerate()
                    .filter(|(i, _)| *i != vi)
                    .map(|(_, v)| v.clone())
                    .collect();
                for &w in &neighbors {
                    let step = verts[w].sub(&verts[vi]).scale(t);
                    pts.push(verts[vi].add(&step));
                }
                let s = ConvexBody::hull(&pts)?;
                if s != *d {
                    subsets.push(s);
                }
            }
        }

        // Hulls of proper vertex subsets with at least two points.
        if n <= 12 {
            for mask in 1u32..(1 << n) - 1 {
                if mask.count_ones() < 2 {
                    continue;
                }
                let pts: Vec<Vector> = (0..n)
                    .filter(|i| mask & (1 << i) != 0)
                    .map(|i| verts[i].clone())
                    .collect();
                subsets.push(ConvexBody::hull(&pts)?);
            }
        }

        if subsets.len() > max_probes {
            let mut rng = SplitMix64::new(seed);
            rng.shuffle(&mut subsets);
            subsets.truncate(max_probes);
        }

        let delta = self.construction_diameter(d)?;
        let mut probes: Vec<SubsetProbe> = Vec::with_capacity(subsets.len());
        for s in subsets {
            let preserved = s.vertex_count() >= 2 && self.construction_diameter(&s)? == delta;
            let (unique, matches) = if preserved {
                let u = self.has_unique_completion(&s)?;
                let m = if u {
                    Some(self.ball_intersection(&s)? == *c)
                } else {
                    None
                };
                (Some(u), m)
            } else {
                (None, None)
            };
            probes.push(SubsetProbe {
                subset: s,
                diameter_preserved: preserved,
                unique_completion: unique,
                completion_is_target: matches,
            });
        }
        Ok(MinimalityReport {
            subject: d.clone(),
            target: c.clone(),
            probes,
        })
    }

    /// Diameter as an exact positive rational; rejects degenerate bodies.
    fn positive_diameter(&self, d: &ConvexBody) -> Result<Rat> {
        let delta = self.construction_diameter(d)?;
        if !delta.is_positive() {
            return Err(Error::DegenerateBody(
                "operation requires a body with positive diameter",
            ));
        }
        Ok(delta)
    }
}

fn build_box_vertices(lo: &[Rat], hi: &[Rat], stack: &mut Vec<Rat>, out: &mut Vec<Vector>) {
    let i = stack.len();
    if i == lo.len() {
        out.push(Vector::new(stack.clone()));
        return;
    }
    // lo first keeps the output lexicographically sorted.
    stack.push(lo[i].clone());
    build_box_vertices(lo, hi, stack, out);
    stack.pop();
    if hi[i] != lo[i] {
        stack.push(hi[i].clone());
        build_box_vertices(lo, hi, stack, out);
        stack.pop();
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::body::convex_hull;
    use crate::norm::Norm;
    use crate::rat::{rat, rat_int};

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
    fn segment_ball_intersection_is_rectangle() {
        let s = max2();
        let seg = convex_hull(&[v2(0, 0), v2(1, 0)]).unwrap();
        let di = s.ball_intersection(&seg).unwrap();
        let rect = convex_hull(&[v2(0, -1), v2(1, -1), v2(1, 1), v2(0, 1)]).unwrap();
        assert_eq!(di, rect);
    }

    #[test]
    fn segment_ball_hull_is_itself() {
        let s = max2();
        let seg = convex_hull(&[v2(0, 0), v2(1, 0)]).unwrap();
        assert_eq!(s.ball_hull(&seg).unwrap(), seg);
    }

    #[test]
    fn singleton_center_ball() {
        let s = max2();
        let p = convex_hull(&[v2(0, 0)]).unwrap();
        let b = s.ball_intersection_at(&p, &rat_int(1)).unwrap().unwrap();
        assert_eq!(b, s.ball(&v2(0, 0), &rat_int(1)).unwrap());
    }

    #[test]
    fn empty_intersection_below_radius() {
        let s = max2();
        let sq = unit_square();
        // Chebyshev radius is 1/2; anything smaller is empty.
        assert!(s.ball_intersection_at(&sq, &rat(1, 4)).unwrap().is_none());
    }

    #[test]
    fn square_is_complete_triangle_is_not() {
        let s = max2();
        assert!(s.is_complete(&unit_square()).unwrap());
        let tri = convex_hull(&[v2(0, 0), v2(1, 0), v2(1, 1)]).unwrap();
        assert!(!s.is_complete(&tri).unwrap());
        assert!(s.has_unique_completion(&tri).unwrap());
    }

    #[test]
    fn triangle_completes_to_square() {
        let s = max2();
        let tri = convex_hull(&[v2(0, 0), v2(1, 0), v2(1, 1)]).unwrap();
        let trace = s
            .complete_one(&tri, Strategy::FarthestFromBody, None)
            .unwrap();
        assert!(trace.is_exact());
        assert_eq!(trace.final_body, unit_square());
        assert_eq!(trace.added, alloc::vec![v2(0, 1)]);
    }

    #[test]
    fn constrained_completion_respects_bound() {
        let s = max2();
        let tri = convex_hull(&[v2(0, 0), v2(1, 0), v2(1, 1)]).unwrap();
        // r > diameter violates the containment bound.
        let err = s.complete_one(
            &tri,
            Strategy::FarthestFromBody,
            Some((&v2(0, 0), &rat_int(2))),
        );
        assert!(matches!(err, Err(Error::Precondition(_))));
        // A valid constraint ball around the centroid-ish point.
        let center = Vector::new(alloc::vec![rat(1, 2), rat(1, 2)]);
        let trace = s
            .complete_one(&tri, Strategy::FarthestFromBody, Some((&center, &rat_int(1))))
            .unwrap();
        assert!(trace.is_exact());
        assert!(tri.is_subset(&trace.final_body).unwrap());
        let ball = s.ball(&center, &rat_int(1)).unwrap();
        assert!(trace.final_body.is_subset(&ball).unwrap());
    }

    #[test]
    fn sampling_is_deterministic() {
        let s = max2();
        let seg = convex_hull(&[v2(0, 0), v2(1, 0)]).unwrap();
        let a = s.sample_completions(&seg, 4, 9).unwrap();
        let b = s.sample_completions(&seg, 4, 9).unwrap();
        for (x, y) in a.iter().zip(&b) {
            assert_eq!(x.final_body, y.final_body);
        }
    }

    #[test]
    fn constant_diameter_holds_for_square() {
        let s = max2();
        assert!(s.check_constant_diameter(&unit_square(), 16, 3).unwrap());
        // Direct instance: r(C, (2, 1/2)) = 2 = diameter + distance.
        let x = Vector::new(alloc::vec![rat_int(2), rat(1, 2)]);
        assert_eq!(s.farthest_key(&unit_square(), &x), rat_int(2));
    }

    #[test]
    fn minimal_segments_only() {
        let s = max2();
        let diag = convex_hull(&[v2(0, 0), v2(1, 1)]).unwrap();
        assert!(s.is_minimal_with_completion(&diag, &unit_square()).unwrap());
        let tri = convex_hull(&[v2(0, 0), v2(1, 0), v2(1, 1)]).unwrap();
        assert!(!s.is_minimal_with_completion(&tri, &unit_square()).unwrap());
        // Precondition: target must be complete.
        let bad = s.is_minimal_with_completion(&diag, &tri);
        assert!(matches!(bad, Err(Error::Precondition(_))));
    }
}
