//! Exact rational simplex with Bland's rule: two-phase, dense tableau,
//! guaranteed termination. Used for cone membership (generator form) and
//! feasibility-interval optimization.

use crate::linalg::Rat;
use num_traits::{One, Signed, Zero};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum LpResult {
    Infeasible,
    /// Optimal value and a primal solution attaining it.
    Optimal(Rat, Vec<Rat>),
    /// Objective unbounded below (for minimization).
    Unbounded,
}

/// Finds some x >= 0 with A x = b, or None.
pub fn feasible_point(a: &[Vec<Rat>], b: &[Rat]) -> Option<Vec<Rat>> {
    let mut t = Tableau::new(a, b);
    if !t.phase_one() {
        return None;
    }
    Some(t.solution())
}

/// Minimizes c·x over {x >= 0 : A x = b}.
pub fn minimize(a: &[Vec<Rat>], b: &[Rat], c: &[Rat]) -> LpResult {
    let mut t = Tableau::new(a, b);
    if !t.phase_one() {
        return LpResult::Infeasible;
    }
    match t.phase_two(c) {
        true => LpResult::Optimal(t.objective_value(c), t.solution()),
        false => LpResult::Unbounded,
    }
}

struct Tableau {
    /// rows x (n + m) coefficient matrix; columns n.. are artificials.
    a: Vec<Vec<Rat>>,
    b: Vec<Rat>,
    basis: Vec<usize>,
    n: usize,
    /// Rows still active (redundant rows get dropped after phase one).
    live: Vec<bool>,
}

impl Tableau {
    fn new(a_in: &[Vec<Rat>], b_in: &[Rat]) -> Tableau {
        let m = a_in.len();
        let n = a_in.first().map_or(0, |r| r.len());
        let mut a: Vec<Vec<Rat>> = Vec::with_capacity(m);
        let mut b: Vec<Rat> = Vec::with_capacity(m);
        for i in 0..m {
            let mut row = a_in[i].clone();
            let mut rhs = b_in[i].clone();
            if rhs.is_negative() {
                for v in row.iter_mut() {
                    *v = -v.clone();
                }
                rhs = -rhs;
            }
            row.extend((0..m).map(|j| {
                if j == i {
                    Rat::one()
                } else {
                    Rat::zero()
                }
            }));
            a.push(row);
            b.push(rhs);
        }
        let basis: Vec<usize> = (0..m).map(|i| n + i).collect();
        Tableau {
            a,
            b,
            basis,
            n,
            live: vec![true; m],
        }
    }

    fn m(&self) -> usize {
        self.b.len()
    }

    fn pivot(&mut self, row: usize, col: usize) {
        let inv = self.a[row][col].recip();
        for j in 0..self.a[row].len() {
            let v = &self.a[row][j] * &inv;
            self.a[row][j] = v;
        }
        let v = &self.b[row] * &inv;
        self.b[row] = v;
        for i in 0..self.m() {
            if i == row || !self.live[i] || self.a[i][col].is_zero() {
                continue;
            }
            let f = self.a[i][col].clone();
            for j in 0..self.a[i].len() {
                let v = &self.a[i][j] - &f * &self.a[row][j];
                self.a[i][j] = v;
            }
            let v = &self.b[i] - &f * &self.b[row];
            self.b[i] = v;
        }
        self.basis[row] = col;
    }

    /// Reduced cost of one column: c_j minus c_B-weighted tableau column.
    fn reduced_cost(&self, obj: &[Rat], dual: &[Rat], j: usize) -> Rat {
        let mut s = obj.get(j).cloned().unwrap_or_else(Rat::zero);
        for i in 0..self.m() {
            if self.live[i] && !dual[i].is_zero() && !self.a[i][j].is_zero() {
                s -= &dual[i] * &self.a[i][j];
            }
        }
        s
    }

    /// Bland's rule minimization of `obj`; columns in `allowed` only.
    /// Returns false on unboundedness.
    fn optimize(&mut self, obj: &[Rat], allowed: &dyn Fn(usize) -> bool) -> bool {
        let width = self.n + self.m();
        loop {
            let mut dual = vec![Rat::zero(); self.m()];
            for (i, &bv) in self.basis.iter().enumerate() {
                if self.live[i] {
                    dual[i] = obj.get(bv).cloned().unwrap_or_else(Rat::zero);
                }
            }
            // Entering: lowest-index allowed column with negative reduced cost.
            let col = (0..width)
                .filter(|&j| allowed(j))
                .find(|&j| self.reduced_cost(obj, &dual, j).is_negative());
            let Some(col) = col else {
                return true;
            };
            // Ratio test with Bland tie-breaking (lowest basis variable).
            let mut best: Option<(Rat, usize)> = None;
            for i in 0..self.m() {
                if !self.live[i] || !self.a[i][col].is_positive() {
                    continue;
                }
                let ratio = &self.b[i] / &self.a[i][col];
                best = match best {
                    None => Some((ratio, i)),
                    Some((r, bi)) => {
                        if ratio < r || (ratio == r && self.basis[i] < self.basis[bi]) {
                            Some((ratio, i))
                        } else {
                            Some((r, bi))
                        }
                    }
                };
            }
            let Some((_, row)) = best else {
                return false;
            };
            self.pivot(row, col);
        }
    }

    /// Drives the artificial objective to zero; false means infeasible.
    fn phase_one(&mut self) -> bool {
        let width = self.n + self.m();
        let mut obj = vec![Rat::zero(); width];
        for j in self.n..width {
            obj[j] = Rat::one();
        }
        if !self.optimize(&obj, &|_| true) {
            unreachable!("phase-one objective is bounded below by zero");
        }
        let value: Rat = (0..self.m())
            .filter(|&i| self.live[i] && self.basis[i] >= self.n)
            .map(|i| self.b[i].clone())
            .sum();
        if !value.is_zero() {
            return false;
        }
        // Pivot artificials out of the basis; drop rows that are redundant.
        for i in 0..self.m() {
            if !self.live[i] || self.basis[i] < self.n {
                continue;
            }
            match (0..self.n).find(|&j| !self.a[i][j].is_zero()) {
                Some(j) => self.pivot(i, j),
                None => self.live[i] = false,
            }
        }
        true
    }

    /// Minimizes the real objective with artificial columns barred.
    fn phase_two(&mut self, c: &[Rat]) -> bool {
        let n = self.n;
        let mut obj = vec![Rat::zero(); n + self.m()];
        obj[..n].clone_from_slice(c);
        self.optimize(&obj, &|j| j < n)
    }

    fn solution(&self) -> Vec<Rat> {
        let mut x = vec![Rat::zero(); self.n];
        for (i, &bv) in self.basis.iter().enumerate() {
            if self.live[i] && bv < self.n {
                x[bv] = self.b[i].clone();
            }
        }
        x
    }

    fn objective_value(&self, c: &[Rat]) -> Rat {
        let x = self.solution();
        c.iter().zip(&x).map(|(ci, xi)| ci * xi).sum()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::{rat, rat_int};

    fn r(v: i64) -> Rat {
        rat_int(v)
    }

    #[test]
    fn feasibility_basic() {
        // x1 + x2 = 2, x1 - x2 = 0 -> x = (1,1)
        let a = vec![vec![r(1), r(1)], vec![r(1), r(-1)]];
        let b = vec![r(2), r(0)];
        let x = feasible_point(&a, &b).unwrap();
        assert_eq!(x, vec![r(1), r(1)]);
    }

    #[test]
    fn infeasible_detected() {
        // x1 = -1 with x1 >= 0.
        let a = vec![vec![r(1)]];
        let b = vec![r(-1)];
        assert!(feasible_point(&a, &b).is_none());
        // x1 + x2 = 1 and x1 + x2 = 2.
        let a = vec![vec![r(1), r(1)], vec![r(1), r(1)]];
        let b = vec![r(1), r(2)];
        assert!(feasible_point(&a, &b).is_none());
    }

    #[test]
    fn redundant_rows_are_fine() {
        let a = vec![vec![r(1), r(1)], vec![r(2), r(2)]];
        let b = vec![r(1), r(2)];
        assert!(feasible_point(&a, &b).is_some());
    }

    #[test]
    fn optimize_min_and_unbounded() {
        // Min x1 subject to x1 - x2 = 1: x2 free upward, x1 = 1 + x2 -> min at x2=0.
        let a = vec![vec![r(1), r(-1)]];
        let b = vec![r(1)];
        match minimize(&a, &b, &[r(1), r(0)]) {
            LpResult::Optimal(v, _) => assert_eq!(v, r(1)),
            other => panic!("expected optimal, got {other:?}"),
        }
        // Min -x1 subject to the same: unbounded.
        assert_eq!(minimize(&a, &b, &[r(-1), r(0)]), LpResult::Unbounded);
    }

    #[test]
    fn exact_rationals_survive() {
        // 2x1 + 3x2 = 1, minimize x2 -> x = (1/2, 0).
        let a = vec![vec![r(2), r(3)]];
        let b = vec![r(1)];
        match minimize(&a, &b, &[r(0), r(1)]) {
            LpResult::Optimal(v, x) => {
                assert_eq!(v, r(0));
                assert_eq!(x, vec![rat(1, 2), r(0)]);
            }
            other => panic!("unexpected {other:?}"),
        }
    }
}
