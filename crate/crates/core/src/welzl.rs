//! Exact minimum enclosing disk in the plane (Welzl's move-to-front scheme,
//! unrolled to the classic three-loop form). Centers and squared radii are
//! rational, so containment tests are exact.

use alloc::vec::Vec;

use num_traits::Zero;

use crate::linalg::solve_square;
use crate::rat::Rat;
use crate::rng::SplitMix64;
use crate::vector::Vector;

#[derive(Clone, Debug)]
pub(crate) struct Disk {
    pub center: Vector,
    pub sq_radius: Rat,
}

impl Disk {
    fn contains(&self, p: &Vector) -> bool {
        p.sub(&self.center).sq_norm() <= self.sq_radius
    }

    fn from_diameter(a: &Vector, b: &Vector) -> Disk {
        let half = Rat::new(1.into(), 2.into());
        let center = a.add(b).scale(&half);
        let sq_radius = a.sub(&center).sq_norm();
        Disk { center, sq_radius }
    }

    /// Circumdisk of three points; falls back to the farthest-pair diameter
    /// disk when they are collinear.
    fn circum(a: &Vector, b: &Vector, c: &Vector) -> Disk {
        let row1 = b.sub(a).scale(&Rat::from_integer(2.into()));
        let row2 = c.sub(a).scale(&Rat::from_integer(2.into()));
        let rhs1 = b.sq_norm() - a.sq_norm();
        let rhs2 = c.sq_norm() - a.sq_norm();
        match solve_square(&[row1, row2], &[rhs1, rhs2]) {
            Some(center) => {
                let sq_radius = a.sub(&center).sq_norm();
                Disk { center, sq_radius }
            }
            None => {
                let mut best = Disk::from_diameter(a, b);
                for (p, q) in [(a, c), (b, c)] {
                    let d = Disk::from_diameter(p, q);
                    if d.sq_radius > best.sq_radius {
                        best = d;
                    }
                }
                best
            }
        }
    }
}

/// Minimum disk enclosing all points (nonempty input, dimension 2).
pub(crate) fn min_enclosing_disk(points: &[Vector]) -> Disk {
    debug_assert!(!points.is_empty() && points[0].dim() == 2);
    let mut pts: Vec<Vector> = points.to_vec();
    let mut rng = SplitMix64::new(0x5EED_D15C ^ pts.len() as u64);
    rng.shuffle(&mut pts);

    let mut d = Disk {
        center: pts[0].clone(),
        sq_radius: Rat::zero(),
    };
    for i in 1..pts.len() {
        if d.contains(&pts[i]) {
            continue;
        }
        d = with_one(&pts[..i], &pts[i]);
    }
    d
}

fn with_one(pts: &[Vector], q: &Vector) -> Disk {
    let mut d = Disk {
        center: q.clone(),
        sq_radius: Rat::zero(),
    };
    for i in 0..pts.len() {
        if d.contains(&pts[i]) {
            continue;
        }
        d = with_two(&pts[..i], &pts[i], q);
    }
    d
}

fn with_two(pts: &[Vector], q1: &Vector, q2: &Vector) -> Disk {
    let mut d = Disk::from_diameter(q1, q2);
    for p in pts {
        if d.contains(p) {
            continue;
        }
        d = Disk::circum(p, q1, q2);
    }
    d
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat::{rat, rat_int};

    #[test]
    fn two_point_disk() {
        let d = min_enclosing_disk(&[Vector::from_ints(&[0, 0]), Vector::from_ints(&[2, 0])]);
        assert_eq!(d.center, Vector::from_ints(&[1, 0]));
        assert_eq!(d.sq_radius, rat_int(1));
    }

    #[test]
    fn square_disk() {
        let d = min_enclosing_disk(&[
            Vector::from_ints(&[0, 0]),
            Vector::from_ints(&[1, 0]),
            Vector::from_ints(&[1, 1]),
            Vector::from_ints(&[0, 1]),
        ]);
        assert_eq!(
            d.center,
            Vector::new(alloc::vec![rat(1, 2), rat(1, 2)])
        );
        assert_eq!(d.sq_radius, rat(1, 2));
    }

    #[test]
    fn obtuse_triangle_uses_diameter() {
        // Flat triangle: the min disk spans the long side.
        let d = min_enclosing_disk(&[
            Vector::from_ints(&[-4, 0]),
            Vector::from_ints(&[4, 0]),
            Vector::from_ints(&[0, 1]),
        ]);
        assert_eq!(d.center, Vector::from_ints(&[0, 0]));
        assert_eq!(d.sq_radius, rat_int(16));
    }

    #[test]
    fn collinear_points() {
        let d = min_enclosing_disk(&[
            Vector::from_ints(&[0, 0]),
            Vector::from_ints(&[1, 1]),
            Vector::from_ints(&[3, 3]),
        ]);
        assert_eq!(d.sq_radius, rat(9, 2));
    }
}
