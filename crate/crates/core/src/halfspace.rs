//! Halfspaces `normal · x <= offset` with canonical integer scaling.

use core::cmp::Ordering;
use core::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::rat::Rat;
use crate::vector::Vector;

/// A closed halfspace `{ x : normal · x <= offset }`.
///
/// Canonical form: the normal is a primitive integer vector (coordinates are
/// coprime integers) and the scaling factor applied is positive, so the
/// halfspace itself is unchanged.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Halfspace {
    normal: Vector,
    offset: Rat,
}

impl Halfspace {
    /// Builds and canonicalizes a halfspace. The normal must be nonzero.
    pub fn new(normal: Vector, offset: Rat) -> Self {
        assert!(!normal.is_zero(), "halfspace normal must be nonzero");
        let (normal, offset) = canonical_scale(normal, offset);
        Halfspace { normal, offset }
    }

    pub fn dim(&self) -> usize {
        self.normal.dim()
    }

    pub fn normal(&self) -> &Vector {
        &self.normal
    }

    pub fn offset(&self) -> &Rat {
        &self.offset
    }

    /// `offset - normal · x`; nonnegative iff the point satisfies the halfspace.
    pub fn slack(&self, x: &Vector) -> Rat {
        &self.offset - self.normal.dot(x)
    }

    pub fn contains(&self, x: &Vector) -> bool {
        !self.slack(x).is_negative()
    }

    /// True when `normal · x == offset`.
    pub fn is_tight(&self, x: &Vector) -> bool {
        self.slack(x).is_zero()
    }

    /// The opposite halfspace `-normal · x <= -offset`; together with `self`
    /// it pins the boundary hyperplane.
    pub fn flipped(&self) -> Halfspace {
        Halfspace::new(self.normal.neg(), -self.offset.clone())
    }

    /// Deterministic ordering: by normal, then offset.
    pub fn canonical_cmp(&self, other: &Halfspace) -> Ordering {
        self.normal
            .cmp(&other.normal)
            .then_with(|| self.offset.cmp(&other.offset))
    }
}

/// Scales `(normal, offset)` by the positive rational that makes the normal a
/// primitive integer vector.
fn canonical_scale(normal: Vector, offset: Rat) -> (Vector, Rat) {
    let mut lcm = BigInt::one();
    for c in normal.iter() {
        lcm = lcm.lcm(c.denom());
    }
    let mut gcd = BigInt::zero();
    for c in normal.iter() {
        let scaled = c.numer() * (&lcm / c.denom());
        gcd = gcd.gcd(&scaled);
    }
    // normal != 0 so gcd > 0; factor = lcm/gcd > 0 preserves orientation.
    let factor = Rat::new(lcm, gcd);
    (normal.scale(&factor), offset * factor.clone())
}

impl fmt::Debug for Halfspace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?} . x <= {}", self.normal, self.offset)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat::{rat, rat_int};

    #[test]
    fn canonical_scaling_is_primitive_and_positive() {
        let h = Halfspace::new(
            Vector::new(alloc::vec![rat(2, 3), rat(4, 3)]),
            rat_int(2),
        );
        assert_eq!(h.normal(), &Vector::from_ints(&[1, 2]));
        assert_eq!(h.offset(), &rat_int(3));
        // Orientation must be preserved.
        let g = Halfspace::new(Vector::from_ints(&[-2, 0]), rat_int(4));
        assert_eq!(g.normal(), &Vector::from_ints(&[-1, 0]));
        assert_eq!(g.offset(), &rat_int(2));
    }

    #[test]
    fn membership_and_flip() {
        let h = Halfspace::new(Vector::from_ints(&[1, 0]), rat_int(1));
        assert!(h.contains(&Vector::from_ints(&[1, 5])));
        assert!(!h.contains(&Vector::from_ints(&[2, 0])));
        let pair = h.flipped();
        // x = 1 exactly satisfies both.
        let x = Vector::from_ints(&[1, -3]);
        assert!(h.contains(&x) && pair.contains(&x));
    }
}
