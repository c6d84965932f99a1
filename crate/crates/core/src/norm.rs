//! Norm families and their unit balls.

use alloc::vec::Vec;

use num_traits::{Signed, Zero};

use crate::body::ConvexBody;
use crate::error::{Error, Result};
use crate::halfspace::Halfspace;
use crate::rat::{rat_from_f64_dyadic, rat_int, Rat};
use crate::vector::Vector;

/// Default polygon refinement for the Euclidean mode (a regular 128-gon).
pub const DEFAULT_EUCLIDEAN_REFINEMENT: u32 = 64;

/// A norm on the ambient space, determined by its unit ball.
///
/// `Max`, `Sum` and `Gauge` are polyhedral and evaluated exactly. `Euclidean`
/// replaces the unit disk by the inscribed regular `2k`-gon with one vertex
/// on the positive x-axis (2D only); geometric constructions use the polygon
/// while reported values use the true Euclidean norm.
#[derive(Clone, Debug, PartialEq)]
pub enum Norm {
    Max,
    Sum,
    Euclidean { k: u32 },
    Gauge(ConvexBody),
}

impl Norm {
    pub fn euclidean() -> Norm {
        Norm::Euclidean {
            k: DEFAULT_EUCLIDEAN_REFINEMENT,
        }
    }

    pub fn is_euclidean(&self) -> bool {
        matches!(self, Norm::Euclidean { .. })
    }

    /// Builds the unit ball for this norm in the given dimension.
    pub fn unit_ball(&self, dim: usize) -> Result<ConvexBody> {
        crate::body::check_dim(dim)?;
        match self {
            Norm::Max => Ok(cube(dim)),
            Norm::Sum => Ok(cross_polytope(dim)),
            Norm::Euclidean { k } => {
                if dim != 2 {
                    return Err(Error::UnsupportedDimension {
                        dim,
                        reason: "the Euclidean mode is planar only",
                    });
                }
                if *k < 8 || *k % 2 != 0 {
                    return Err(Error::Precondition(
                        "Euclidean refinement k must be even and at least 8",
                    ));
                }
                Ok(regular_polygon(*k))
            }
            Norm::Gauge(ball) => {
                validate_gauge_ball(ball, dim)?;
                Ok(ball.clone())
            }
        }
    }
}

/// Unit ball of the max norm: the cube `[-1, 1]^dim`.
fn cube(dim: usize) -> ConvexBody {
    let mut vertices: Vec<Vector> = Vec::with_capacity(1 << dim);
    for mask in 0..(1u32 << dim) {
        let coords: Vec<Rat> = (0..dim)
            .map(|i| {
                if mask & (1 << (dim - 1 - i)) == 0 {
                    rat_int(-1)
                } else {
                    rat_int(1)
                }
            })
            .collect();
        vertices.push(Vector::new(coords));
    }
    vertices.sort();
    let mut facets: Vec<Halfspace> = Vec::with_capacity(2 * dim);
    for i in 0..dim {
        let mut e = alloc::vec![Rat::zero(); dim];
        e[i] = rat_int(1);
        let axis = Vector::new(e);
        facets.push(Halfspace::new(axis.clone(), rat_int(1)));
        facets.push(Halfspace::new(axis.neg(), rat_int(1)));
    }
    facets.sort_by(Halfspace::canonical_cmp);
    ConvexBody::from_reps(vertices, facets)
}

/// Unit ball of the sum norm: the cross-polytope.
fn cross_polytope(dim: usize) -> ConvexBody {
    let mut vertices: Vec<Vector> = Vec::with_capacity(2 * dim);
    for i in 0..dim {
        for s in [-1i64, 1] {
            let mut c = alloc::vec![Rat::zero(); dim];
            c[i] = rat_int(s);
            vertices.push(Vector::new(c));
        }
    }
    vertices.sort();
    let mut facets: Vec<Halfspace> = Vec::with_capacity(1 << dim);
    for mask in 0..(1u32 << dim) {
        let coords: Vec<Rat> = (0..dim)
            .map(|i| {
                if mask & (1 << i) == 0 {
                    rat_int(-1)
                } else {
                    rat_int(1)
                }
            })
            .collect();
        facets.push(Halfspace::new(Vector::new(coords), rat_int(1)));
    }
    facets.sort_by(Halfspace::canonical_cmp);
    ConvexBody::from_reps(vertices, facets)
}

/// Inscribed regular `2k`-gon with a vertex at `(1, 0)`, exactly symmetric
/// under negation. Vertices are dyadic rationals on a `2^-32` grid, so each
/// lies at distance 1 from the center to within about `2.4e-10`.
fn regular_polygon(k: u32) -> ConvexBody {
    const GRID_BITS: u32 = 32;
    let k = k as usize;
    let mut half: Vec<Vector> = Vec::with_capacity(k);
    for i in 0..k {
        let theta = core::f64::consts::PI * (i as f64) / (k as f64);
        let (c, s) = if i == 0 {
            (rat_int(1), rat_int(0))
        } else if 2 * i == k {
            (rat_int(0), rat_int(1))
        } else {
            (
                rat_from_f64_dyadic(libm::cos(theta), GRID_BITS).expect("finite"),
                rat_from_f64_dyadic(libm::sin(theta), GRID_BITS).expect("finite"),
            )
        };
        half.push(Vector::new(alloc::vec![c, s]));
    }
    let mut vertices: Vec<Vector> = half.iter().map(Vector::neg).collect();
    vertices.extend(half);

    // Ring order by angle index: i and i+k are negations, so consecutive
    // pairs around the ring give the edge facets.
    let ring: Vec<&Vector> = {
        let (neg, pos) = vertices.split_at(k);
        pos.iter().chain(neg.iter()).collect()
    };
    let mut facets: Vec<Halfspace> = Vec::with_capacity(2 * k);
    for i in 0..2 * k {
        let a = ring[i];
        let b = ring[(i + 1) % (2 * k)];
        let d = b.sub(a);
        // Outward normal of a counterclockwise edge.
        let n = Vector::new(alloc::vec![d.get(1).clone(), -d.get(0).clone()]);
        let off = n.dot(a);
        facets.push(Halfspace::new(n, off));
    }
    vertices.sort();
    facets.sort_by(Halfspace::canonical_cmp);
    facets.dedup();
    ConvexBody::from_reps(vertices, facets)
}

/// A gauge unit ball must be full-dimensional, centrally symmetric, and
/// contain the origin in its interior.
fn validate_gauge_ball(ball: &ConvexBody, dim: usize) -> Result<()> {
    if ball.dim() != dim {
        return Err(Error::DimensionMismatch {
            expected: dim,
            found: ball.dim(),
        });
    }
    if ball.affine_dim() != dim {
        return Err(Error::InvalidGaugeBall("unit ball must be full-dimensional"));
    }
    for v in ball.vertices() {
        let neg = v.neg();
        if ball.vertices().binary_search(&neg).is_err() {
            return Err(Error::InvalidGaugeBall(
                "vertex set must be closed under negation",
            ));
        }
    }
    if ball.facets().iter().any(|h| !h.offset().is_positive()) {
        return Err(Error::InvalidGaugeBall(
            "origin must lie in the interior of the unit ball",
        ));
    }
    Ok(())
}

/// Gauge of `v` with respect to a polytope unit ball: the least `λ >= 0`
/// with `v ∈ λ · ball`, computed from the facet description.
///
/// The maximum of `(a·v) / a_off` is tracked without divisions: with all
/// offsets positive, `n/d > bn/bd  ⟺  n·bd > bn·d`.
pub(crate) fn gauge_value(ball: &ConvexBody, v: &Vector) -> Rat {
    let mut best_num = Rat::zero();
    let mut best_den = Rat::from_integer(1.into());
    for h in ball.facets() {
        let num = h.normal().dot(v);
        if !num.is_positive() {
            continue;
        }
        let den = h.offset();
        if &num * &best_den > &best_num * den {
            best_num = num;
            best_den = den.clone();
        }
    }
    best_num / best_den
}
