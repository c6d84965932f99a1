//! Points and directions with exact rational coordinates.

use alloc::vec::Vec;
use core::fmt;

use num_traits::Zero;

use crate::rat::Rat;

/// A point (or direction) of the ambient space.
///
/// Ordering is lexicographic over the coordinates; this is the canonical
/// order used for vertex lists and tie-breaking throughout the crate.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Vector {
    coords: Vec<Rat>,
}

impl Vector {
    /// Builds a vector from its coordinates. Must be nonempty.
    pub fn new(coords: Vec<Rat>) -> Self {
        assert!(!coords.is_empty(), "vectors must have dimension >= 1");
        Vector { coords }
    }

    pub fn zero(dim: usize) -> Self {
        Vector::new(alloc::vec![Rat::zero(); dim])
    }

    /// Convenience constructor from integer coordinates.
    pub fn from_ints(coords: &[i64]) -> Self {
        Vector::new(coords.iter().map(|&c| crate::rat::rat_int(c)).collect())
    }

    pub fn dim(&self) -> usize {
        self.coords.len()
    }

    pub fn coords(&self) -> &[Rat] {
        &self.coords
    }

    pub fn get(&self, i: usize) -> &Rat {
        &self.coords[i]
    }

    pub fn iter(&self) -> core::slice::Iter<'_, Rat> {
        self.coords.iter()
    }

    pub fn add(&self, other: &Vector) -> Vector {
        debug_assert_eq!(self.dim(), other.dim());
        Vector::new(
            self.coords
                .iter()
                .zip(&other.coords)
                .map(|(a, b)| a + b)
                .collect(),
        )
    }

    pub fn sub(&self, other: &Vector) -> Vector {
        debug_assert_eq!(self.dim(), other.dim());
        Vector::new(
            self.coords
                .iter()
                .zip(&other.coords)
                .map(|(a, b)| a - b)
                .collect(),
        )
    }

    pub fn neg(&self) -> Vector {
        Vector::new(self.coords.iter().map(|a| -a).collect())
    }

    pub fn scale(&self, s: &Rat) -> Vector {
        Vector::new(self.coords.iter().map(|a| a * s).collect())
    }

    pub fn dot(&self, other: &Vector) -> Rat {
        debug_assert_eq!(self.dim(), other.dim());
        self.coords
            .iter()
            .zip(&other.coords)
            .map(|(a, b)| a * b)
            .fold(Rat::zero(), |acc, x| acc + x)
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(Zero::is_zero)
    }

    /// Squared Euclidean length, exact.
    pub fn sq_norm(&self) -> Rat {
        self.dot(self)
    }

    /// 2D cross product `self.x * other.y - self.y * other.x`.
    pub fn cross2(&self, other: &Vector) -> Rat {
        debug_assert_eq!(self.dim(), 2);
        &self.coords[0] * &other.coords[1] - &self.coords[1] * &other.coords[0]
    }

    /// 3D cross product.
    pub fn cross3(&self, other: &Vector) -> Vector {
        debug_assert_eq!(self.dim(), 3);
        let a = &self.coords;
        let b = &other.coords;
        Vector::new(alloc::vec![
            &a[1] * &b[2] - &a[2] * &b[1],
            &a[2] * &b[0] - &a[0] * &b[2],
            &a[0] * &b[1] - &a[1] * &b[0],
        ])
    }
}

impl fmt::Debug for Vector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.coords.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

impl fmt::Display for Vector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat::rat;

    #[test]
    fn lexicographic_order() {
        let a = Vector::from_ints(&[0, 1]);
        let b = Vector::from_ints(&[1, 0]);
        assert!(a < b);
        let c = Vector::new(alloc::vec![rat(1, 2), rat(0, 1)]);
        assert!(a < c && c < b);
    }

    #[test]
    fn cross_products() {
        let e1 = Vector::from_ints(&[1, 0, 0]);
        let e2 = Vector::from_ints(&[0, 1, 0]);
        assert_eq!(e1.cross3(&e2), Vector::from_ints(&[0, 0, 1]));
        let u = Vector::from_ints(&[1, 0]);
        let v = Vector::from_ints(&[0, 1]);
        assert_eq!(u.cross2(&v), rat(1, 1));
    }
}
