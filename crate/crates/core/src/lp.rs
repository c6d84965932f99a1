//! Exact rational linear programming in few variables.
//!
//! All linear programs in this crate have at most four variables (a point of
//! the space plus one radius-like scalar), while constraint counts stay in the
//! tens to low hundreds. Seidel's incremental algorithm with variable
//! elimination solves these exactly over the rationals in expected linear
//! time in the number of constraints.
//!
//! Every problem carries explicit finite bounds per variable, so
//! unboundedness cannot occur and infeasibility is the only failure mode.

use alloc::vec::Vec;

use num_traits::{Signed, Zero};

use crate::rat::Rat;
use crate::rng::SplitMix64;

/// One linear constraint `coeffs · x <= bound`.
#[derive(Clone, Debug)]
pub struct Constraint {
    pub coeffs: Vec<Rat>,
    pub bound: Rat,
}

impl Constraint {
    pub fn new(coeffs: Vec<Rat>, bound: Rat) -> Self {
        Constraint { coeffs, bound }
    }

    fn satisfied(&self, x: &[Rat]) -> bool {
        let lhs = self
            .coeffs
            .iter()
            .zip(x)
            .fold(Rat::zero(), |acc, (a, v)| acc + a * v);
        lhs <= self.bound
    }
}

#[derive(Clone, Debug, PartialEq)]
pub enum LpResult {
    Optimal { point: Vec<Rat>, value: Rat },
    Infeasible,
}

/// Maximizes `obj · x` subject to `constraints` and `lower <= x <= upper`.
///
/// The optimal value is unique; the reported point is one optimizer.
pub fn maximize(
    obj: &[Rat],
    constraints: &[Constraint],
    lower: &[Rat],
    upper: &[Rat],
) -> LpResult {
    let n = obj.len();
    debug_assert!(n >= 1 && n <= 4);
    debug_assert!(lower.len() == n && upper.len() == n);
    debug_assert!(constraints.iter().all(|c| c.coeffs.len() == n));

    let mut shuffled: Vec<Constraint> = constraints.to_vec();
    let mut rng = SplitMix64::new(0xC0FF_EE00_0000_0001 ^ constraints.len() as u64);
    rng.shuffle(&mut shuffled);

    match solve(&shuffled, obj, lower, upper) {
        Some(point) => {
            let value = obj
                .iter()
                .zip(&point)
                .fold(Rat::zero(), |acc, (c, v)| acc + c * v);
            LpResult::Optimal { point, value }
        }
        None => LpResult::Infeasible,
    }
}

/// Minimizes `obj · x`; same contract as [`maximize`].
pub fn minimize(
    obj: &[Rat],
    constraints: &[Constraint],
    lower: &[Rat],
    upper: &[Rat],
) -> LpResult {
    let neg: Vec<Rat> = obj.iter().map(|c| -c).collect();
    match maximize(&neg, constraints, lower, upper) {
        LpResult::Optimal { point, value } => LpResult::Optimal {
            point,
            value: -value,
        },
        LpResult::Infeasible => LpResult::Infeasible,
    }
}

fn solve(cons: &[Constraint], obj: &[Rat], lo: &[Rat], hi: &[Rat]) -> Option<Vec<Rat>> {
    let n = obj.len();
    for i in 0..n {
        if lo[i] > hi[i] {
            return None;
        }
    }
    if n == 1 {
        return solve_1d(cons, &obj[0], &lo[0], &hi[0]);
    }

    // Start from the box corner optimal for the objective alone.
    let mut x: Vec<Rat> = (0..n)
        .map(|i| {
            if obj[i].is_positive() {
                hi[i].clone()
            } else {
                lo[i].clone()
            }
        })
        .collect();

    for (i, c) in cons.iter().enumerate() {
        if c.satisfied(&x) {
            continue;
        }
        // Some optimum of the enlarged system lies on this hyperplane;
        // eliminate one variable and recurse on the prior constraints.
        let Some(k) = pivot_index(&c.coeffs) else {
            // 0 · x <= bound violated: infeasible.
            return None;
        };
        let reduced = Reduction::against(c, k, n);
        let mut sub_cons: Vec<Constraint> = Vec::with_capacity(i + 2);
        for prior in &cons[..i] {
            sub_cons.push(reduced.constraint(&prior.coeffs, &prior.bound));
        }
        // The eliminated variable's box bounds become ordinary constraints.
        let mut ek = alloc::vec![Rat::zero(); n];
        ek[k] = Rat::from_integer(1.into());
        sub_cons.push(reduced.constraint(&ek, &hi[k]));
        ek[k] = Rat::from_integer((-1).into());
        sub_cons.push(reduced.constraint(&ek, &(-lo[k].clone())));

        let sub_obj = reduced.objective(obj);
        let sub_lo = drop_index(lo, k);
        let sub_hi = drop_index(hi, k);
        let y = solve(&sub_cons, &sub_obj, &sub_lo, &sub_hi)?;
        x = reduced.lift(&y);
    }
    Some(x)
}

fn solve_1d(cons: &[Constraint], obj: &Rat, lo: &Rat, hi: &Rat) -> Option<Vec<Rat>> {
    let mut l = lo.clone();
    let mut h = hi.clone();
    for c in cons {
        let a = &c.coeffs[0];
        if a.is_zero() {
            if c.bound.is_negative() {
                return None;
            }
        } else if a.is_positive() {
            let b = &c.bound / a;
            if b < h {
                h = b;
            }
        } else {
            let b = &c.bound / a;
            if b > l {
                l = b;
            }
        }
    }
    if l > h {
        return None;
    }
    Some(alloc::vec![if obj.is_positive() { h } else { l }])
}

/// Index of the largest-magnitude nonzero coefficient.
fn pivot_index(coeffs: &[Rat]) -> Option<usize> {
    let mut best: Option<usize> = None;
    for (i, c) in coeffs.iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        best = match best {
            None => Some(i),
            Some(j) if c.abs() > coeffs[j].abs() => Some(i),
            keep => keep,
        };
    }
    best
}

fn drop_index(xs: &[Rat], k: usize) -> Vec<Rat> {
    xs.iter()
        .enumerate()
        .filter(|(i, _)| *i != k)
        .map(|(_, x)| x.clone())
        .collect()
}

/// Substitution data for `x_k = (bound - sum_{j != k} a_j x_j) / a_k`.
struct Reduction {
    coeffs: Vec<Rat>,
    bound: Rat,
    k: usize,
    n: usize,
}

impl Reduction {
    fn against(c: &Constraint, k: usize, n: usize) -> Self {
        Reduction {
            coeffs: c.coeffs.clone(),
            bound: c.bound.clone(),
            k,
            n,
        }
    }

    /// Rewrites `c · x <= d` without the eliminated variable.
    fn constraint(&self, coeffs: &[Rat], bound: &Rat) -> Constraint {
        let ck = &coeffs[self.k];
        let scale = ck / &self.coeffs[self.k];
        let new_coeffs: Vec<Rat> = (0..self.n)
            .filter(|&j| j != self.k)
            .map(|j| &coeffs[j] - &(&self.coeffs[j] * &scale))
            .collect();
        let new_bound = bound - &(&self.bound * &scale);
        Constraint::new(new_coeffs, new_bound)
    }

    fn objective(&self, obj: &[Rat]) -> Vec<Rat> {
        let scale = &obj[self.k] / &self.coeffs[self.k];
        (0..self.n)
            .filter(|&j| j != self.k)
            .map(|j| &obj[j] - &(&self.coeffs[j] * &scale))
            .collect()
    }

    fn lift(&self, y: &[Rat]) -> Vec<Rat> {
        let mut full: Vec<Rat> = Vec::with_capacity(self.n);
        let mut it = y.iter();
        for j in 0..self.n {
            if j == self.k {
                full.push(Rat::zero()); // placeholder
            } else {
                full.push(it.next().unwrap().clone());
            }
        }
        let mut acc = self.bound.clone();
        for j in 0..self.n {
            if j != self.k {
                acc -= &self.coeffs[j] * &full[j];
            }
        }
        full[self.k] = acc / self.coeffs[self.k].clone();
        full
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat::{rat, rat_int};

    fn ints(xs: &[i64]) -> Vec<Rat> {
        xs.iter().map(|&x| rat_int(x)).collect()
    }

    #[test]
    fn simple_2d_maximum() {
        // max x + y st x + 2y <= 4, x ∈ [0,3], y ∈ [0,3] → (3, 1/2), value 7/2.
        let cons = [Constraint::new(ints(&[1, 2]), rat_int(4))];
        let r = maximize(&ints(&[1, 1]), &cons, &ints(&[0, 0]), &ints(&[3, 3]));
        match r {
            LpResult::Optimal { value, .. } => assert_eq!(value, rat(7, 2)),
            _ => panic!("expected optimum"),
        }
    }

    #[test]
    fn infeasible_detected() {
        let cons = [
            Constraint::new(ints(&[1, 0]), rat_int(-1)),
            Constraint::new(ints(&[-1, 0]), rat_int(0)),
        ];
        let r = maximize(&ints(&[1, 0]), &cons, &ints(&[-5, -5]), &ints(&[5, 5]));
        assert_eq!(r, LpResult::Infeasible);
    }

    #[test]
    fn equality_pair_pins_variable() {
        // x = 2 via a pair of opposite constraints; maximize -x.
        let cons = [
            Constraint::new(ints(&[1, 0]), rat_int(2)),
            Constraint::new(ints(&[-1, 0]), rat_int(-2)),
        ];
        let r = minimize(&ints(&[1, 0]), &cons, &ints(&[-9, -9]), &ints(&[9, 9]));
        match r {
            LpResult::Optimal { value, .. } => assert_eq!(value, rat_int(2)),
            _ => panic!("expected optimum"),
        }
    }

    #[test]
    fn chebyshev_like_3_vars() {
        // min r st |x - p| <= r in the max norm for p ∈ {0, 4} on a line,
        // encoded as 1D center + radius: x - p <= r, p - x <= r.
        let cons = [
            Constraint::new(ints(&[1, -1]), rat_int(0)),
            Constraint::new(ints(&[-1, -1]), rat_int(0)),
            Constraint::new(ints(&[1, -1]), rat_int(4)),
            Constraint::new(ints(&[-1, -1]), rat_int(-4)),
        ];
        let r = minimize(
            &ints(&[0, 1]),
            &cons,
            &ints(&[-10, 0]),
            &ints(&[10, 10]),
        );
        match r {
            LpResult::Optimal { value, .. } => assert_eq!(value, rat_int(2)),
            _ => panic!("expected optimum"),
        }
    }
}
