//! Small exact linear solvers over the rationals.

use alloc::vec::Vec;

use num_traits::Zero;

use crate::rat::Rat;
use crate::vector::Vector;

/// Solves the square system `rows[i] · x = rhs[i]` by Gaussian elimination.
/// Returns `None` when the matrix is singular.
pub fn solve_square(rows: &[Vector], rhs: &[Rat]) -> Option<Vector> {
    let n = rows.len();
    debug_assert!(n >= 1 && n == rhs.len() && rows.iter().all(|r| r.dim() == n));
    let mut m: Vec<Vec<Rat>> = rows
        .iter()
        .zip(rhs)
        .map(|(r, b)| {
            let mut row: Vec<Rat> = r.coords().to_vec();
            row.push(b.clone());
            row
        })
        .collect();

    for col in 0..n {
        let pivot = (col..n).find(|&r| !m[r][col].is_zero())?;
        m.swap(col, pivot);
        let p = m[col][col].clone();
        for r in 0..n {
            if r == col || m[r][col].is_zero() {
                continue;
            }
            let factor = &m[r][col] / &p;
            for c in col..=n {
                let sub = &factor * &m[col][c];
                m[r][c] = &m[r][c] - &sub;
            }
        }
    }
    let coords = (0..n).map(|i| &m[i][n] / &m[i][i]).collect();
    Some(Vector::new(coords))
}

/// Rank of a list of vectors (all the same dimension).
pub fn rank(vectors: &[Vector]) -> usize {
    if vectors.is_empty() {
        return 0;
    }
    let dim = vectors[0].dim();
    let mut rows: Vec<Vec<Rat>> = vectors.iter().map(|v| v.coords().to_vec()).collect();
    let mut r = 0;
    for col in 0..dim {
        let Some(pivot) = (r..rows.len()).find(|&i| !rows[i][col].is_zero()) else {
            continue;
        };
        rows.swap(r, pivot);
        let p = rows[r][col].clone();
        for i in 0..rows.len() {
            if i == r || rows[i][col].is_zero() {
                continue;
            }
            let factor = &rows[i][col] / &p;
            for c in col..dim {
                let sub = &factor * &rows[r][c];
                rows[i][c] = &rows[i][c] - &sub;
            }
        }
        r += 1;
        if r == rows.len() {
            break;
        }
    }
    r
}

/// A deterministic basis of the subspace orthogonal to `d` (3D), used to pin
/// a line inside ambient space. Returns two independent normals.
pub fn orthogonal_pair_3d(d: &Vector) -> (Vector, Vector) {
    debug_assert_eq!(d.dim(), 3);
    let candidates = [
        Vector::new(alloc::vec![-d.get(1).clone(), d.get(0).clone(), Rat::zero()]),
        Vector::new(alloc::vec![-d.get(2).clone(), Rat::zero(), d.get(0).clone()]),
        Vector::new(alloc::vec![Rat::zero(), -d.get(2).clone(), d.get(1).clone()]),
    ];
    let mut picked: Vec<Vector> = Vec::new();
    for c in candidates {
        if c.is_zero() {
            continue;
        }
        if picked.is_empty() {
            picked.push(c);
        } else if rank(&[picked[0].clone(), c.clone()]) == 2 {
            picked.push(c);
            break;
        }
    }
    debug_assert_eq!(picked.len(), 2);
    let second = picked.pop().unwrap();
    (picked.pop().unwrap(), second)
}
