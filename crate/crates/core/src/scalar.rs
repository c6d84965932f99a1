//! Metric values: exact rationals in polyhedral modes, floating-point in the
//! Euclidean-approximate mode.

use core::cmp::Ordering;
use core::fmt;

use crate::rat::{rat_to_f64, Rat};

/// A reported metric value.
///
/// Polyhedral norms (max, sum, gauge) produce `Exact` values and all equality
/// tests on them are exact. The Euclidean mode produces `Approx` values (a
/// final square root applied to an exactly computed quantity); compare those
/// with [`Scalar::approx_eq`] and a tolerance.
#[derive(Clone, Debug)]
pub enum Scalar {
    Exact(Rat),
    Approx(f64),
}

impl Scalar {
    pub fn is_exact(&self) -> bool {
        matches!(self, Scalar::Exact(_))
    }

    pub fn as_exact(&self) -> Option<&Rat> {
        match self {
            Scalar::Exact(r) => Some(r),
            Scalar::Approx(_) => None,
        }
    }

    pub fn to_f64(&self) -> f64 {
        match self {
            Scalar::Exact(r) => rat_to_f64(r),
            Scalar::Approx(x) => *x,
        }
    }

    /// `|self - other| <= tol` in floating point.
    pub fn approx_eq(&self, other: &Scalar, tol: f64) -> bool {
        (self.to_f64() - other.to_f64()).abs() <= tol
    }

    /// Relative closeness `|a - b| <= tol * max(1, |b|)`.
    pub fn approx_eq_rel(&self, other: &Scalar, tol: f64) -> bool {
        let a = self.to_f64();
        let b = other.to_f64();
        (a - b).abs() <= tol * b.abs().max(1.0)
    }
}

impl From<Rat> for Scalar {
    fn from(r: Rat) -> Self {
        Scalar::Exact(r)
    }
}

impl PartialEq for Scalar {
    fn eq(&self, other: &Self) -> bool {
        match (self, other) {
            (Scalar::Exact(a), Scalar::Exact(b)) => a == b,
            (a, b) => a.to_f64() == b.to_f64(),
        }
    }
}

impl PartialOrd for Scalar {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        match (self, other) {
            (Scalar::Exact(a), Scalar::Exact(b)) => Some(a.cmp(b)),
            (a, b) => a.to_f64().partial_cmp(&b.to_f64()),
        }
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Exact(r) => write!(f, "{r}"),
            Scalar::Approx(x) => write!(f, "{x}"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat::rat;

    #[test]
    fn exact_comparisons_are_exact() {
        let a = Scalar::Exact(rat(1, 3));
        let b = Scalar::Exact(rat(2, 6));
        assert_eq!(a, b);
        assert!(Scalar::Exact(rat(1, 3)) < Scalar::Exact(rat(1, 2)));
    }

    #[test]
    fn approx_tolerance() {
        let a = Scalar::Approx(3f64.sqrt());
        let b = Scalar::Exact(rat(17320508, 10000000));
        assert!(a.approx_eq(&b, 1e-6));
        assert!(!a.approx_eq(&b, 1e-9));
    }
}
