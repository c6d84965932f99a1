//! A finite-dimensional normed space: the ambient dimension, the norm, and
//! its cached unit ball. All geometric operations hang off [`Space`].

use alloc::vec::Vec;

use num_traits::Signed;

use crate::body::ConvexBody;
use crate::error::{Error, Result};
use crate::halfspace::Halfspace;
use crate::norm::{gauge_value, Norm};
use crate::rat::{rat_to_f64, Rat};
use crate::scalar::Scalar;
use crate::vector::Vector;

#[derive(Clone, Debug)]
pub struct Space {
    dim: usize,
    norm: Norm,
    unit_ball: ConvexBody,
    /// Per-axis extent of the unit ball (for bounding boxes).
    axis_radius: Vector,
}

impl Space {
    pub fn new(dim: usize, norm: Norm) -> Result<Space> {
        let unit_ball = norm.unit_ball(dim)?;
        let (lo, hi) = unit_ball.bbox();
        let axis_radius = Vector::new(
            (0..dim)
                .map(|i| {
                    let a = lo.get(i).abs();
                    let b = hi.get(i).abs();
                    if a > b {
                        a
                    } else {
                        b
                    }
                })
                .collect(),
        );
        Ok(Space {
            dim,
            norm,
            unit_ball,
            axis_radius,
        })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn norm(&self) -> &Norm {
        &self.norm
    }

    pub fn unit_ball(&self) -> &ConvexBody {
        &self.unit_ball
    }

    pub fn is_euclidean(&self) -> bool {
        self.norm.is_euclidean()
    }

    pub(crate) fn axis_radius(&self) -> &Vector {
        &self.axis_radius
    }

    pub(crate) fn check_vector(&self, v: &Vector) -> Result<()> {
        if v.dim() != self.dim {
            return Err(Error::DimensionMismatch {
                expected: self.dim,
                found: v.dim(),
            });
        }
        Ok(())
    }

    pub(crate) fn check_body(&self, b: &ConvexBody) -> Result<()> {
        if b.dim() != self.dim {
            return Err(Error::DimensionMismatch {
                expected: self.dim,
                found: b.dim(),
            });
        }
        Ok(())
    }

    /// Evaluates the norm of `v`.
    pub fn norm_eval(&self, v: &Vector) -> Result<Scalar> {
        self.check_vector(v)?;
        Ok(self.key_to_scalar(self.key(v)))
    }

    /// Internal comparison key: the exact norm value for polyhedral norms,
    /// the exact *squared* Euclidean norm in Euclidean mode. Keys order
    /// distances correctly within a single space.
    pub(crate) fn key(&self, v: &Vector) -> Rat {
        match &self.norm {
            Norm::Max => v.iter().map(Signed::abs).max().expect("dim >= 1"),
            Norm::Sum => v.iter().map(Signed::abs).sum(),
            Norm::Euclidean { .. } => v.sq_norm(),
            Norm::Gauge(_) => gauge_value(&self.unit_ball, v),
        }
    }

    /// Converts a comparison key into the reported metric value.
    pub(crate) fn key_to_scalar(&self, key: Rat) -> Scalar {
        if self.is_euclidean() {
            Scalar::Approx(libm::sqrt(rat_to_f64(&key)))
        } else {
            Scalar::Exact(key)
        }
    }

    /// A key that is linear in distances (additive along rays): the norm
    /// itself for polyhedral norms, the polygon gauge in Euclidean mode.
    /// Used wherever an exact rational radius is required.
    pub(crate) fn linear_key(&self, v: &Vector) -> Rat {
        match &self.norm {
            Norm::Euclidean { .. } => gauge_value(&self.unit_ball, v),
            _ => self.key(v),
        }
    }

    /// Support function of the unit ball: `max { a · u : u in ball }`.
    pub(crate) fn support(&self, a: &Vector) -> Rat {
        self.unit_ball
            .vertices()
            .iter()
            .map(|u| a.dot(u))
            .max()
            .expect("unit ball has vertices")
    }

    /// The ball `center + r · unit_ball` as an explicit body.
    pub fn ball(&self, center: &Vector, r: &Rat) -> Result<ConvexBody> {
        self.check_vector(center)?;
        if !r.is_positive() {
            return Err(Error::NonpositiveRadius);
        }
        Ok(self.ball_unchecked(center, r))
    }

    pub(crate) fn ball_unchecked(&self, center: &Vector, r: &Rat) -> ConvexBody {
        // Positive scaling plus translation preserve both the lexicographic
        // vertex order and the canonical facet normals.
        let vertices: Vec<Vector> = self
            .unit_ball
            .vertices()
            .iter()
            .map(|u| center.add(&u.scale(r)))
            .collect();
        let facets: Vec<Halfspace> = self
            .unit_ball
            .facets()
            .iter()
            .map(|h| {
                Halfspace::new(
                    h.normal().clone(),
                    h.offset() * r + h.normal().dot(center),
                )
            })
            .collect();
        ConvexBody::from_reps(vertices, facets)
    }

    /// Tolerance for completeness-style tests in Euclidean mode, scaled to
    /// the polygon approximation defect at the given diameter.
    pub(crate) fn euclid_tolerance(&self, diameter: f64) -> f64 {
        match &self.norm {
            Norm::Euclidean { k } => {
                let defect = 1.0 / libm::cos(core::f64::consts::PI / (2.0 * *k as f64)) - 1.0;
                4.0 * diameter.max(1.0) * defect + 1e-12
            }
            _ => 0.0,
        }
    }
}
