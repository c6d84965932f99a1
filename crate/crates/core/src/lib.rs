//! Exact computational geometry for complete (diametrically maximal) sets
//! in finite-dimensional normed spaces.
//!
//! A bounded closed convex set is *complete* when every proper superset has a
//! strictly larger diameter. This crate computes the associated constructions
//! for polytopes in dimension ≤ 3 under polyhedral norms (max, sum, arbitrary
//! symmetric gauges) and a polygonal approximation of the Euclidean plane:
//!
//! * ball intersections and ball hulls,
//! * diameters, Chebyshev radii and center sets, self-radii, inner radii,
//! * point-to-body and Hausdorff distances,
//! * greedy diametric completions, completion sampling and spread,
//! * constant-diameter checks and minimality probes.
//!
//! All polyhedral computation is performed over arbitrary-precision rationals,
//! so equality tests are exact. The Euclidean mode replaces the unit disk by
//! an inscribed regular polygon with rational vertices; body combinatorics
//! stay exact while reported metric values carry a final floating square root.
//!
//! The crate is `no_std` (with `alloc`); the companion `diametric` crate adds
//! JSON formats, a verification harness, and the command-line interface.

#![cfg_attr(not(feature = "std"), no_std)]

extern crate alloc;

pub mod body;
pub mod completion;
pub mod enumerate;
mod error;
pub mod halfspace;
pub mod linalg;
pub mod lp;
pub mod metrics;
pub mod norm;
pub mod rat;
pub mod rng;
pub mod scalar;
pub mod space;
pub mod vector;
mod welzl;

pub use body::{convex_hull, ConvexBody};
pub use completion::{
    CompletionStatus, CompletionTrace, MinimalityReport, Strategy, SubsetProbe,
};
pub use enumerate::{intersect_bodies, vertex_enum};
pub use error::{Error, Result};
pub use halfspace::Halfspace;
pub use metrics::{CenterSet, DiameterResult};
pub use norm::Norm;
pub use rat::Rat;
pub use scalar::Scalar;
pub use space::Space;
pub use vector::Vector;
