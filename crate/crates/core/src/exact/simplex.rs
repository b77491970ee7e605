//! Dense two-phase simplex over exact rationals with Bland's rule.
//!
//! Problems are in equality form `a * x = b, x >= 0`. Phase 1 is solved once
//! and the resulting [`FeasibleRegion`] can then be optimized against several
//! objectives, which is how lattice-point enumeration gets coordinate ranges.

use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

type Q = BigRational;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum LpOutcome {
    Infeasible,
    Unbounded,
    Optimal { x: Vec<Q>, value: Q },
}

/// A tableau holding a basic feasible solution of `a * x = b, x >= 0`.
#[derive(Clone, Debug)]
pub struct FeasibleRegion {
    /// Constraint rows, each of width `width + 1` (last entry is the rhs).
    rows: Vec<Vec<Q>>,
    basis: Vec<usize>,
    /// Number of structural variables.
    vars: usize,
    /// Structural plus artificial columns.
    width: usize,
}

impl FeasibleRegion {
    /// Runs phase 1. Returns `None` when the system is infeasible.
    pub fn new(a: &[Vec<Q>], b: &[Q]) -> Option<Self> {
        assert_eq!(a.len(), b.len(), "constraint count mismatch");
        let m = a.len();
        let n = a.first().map_or(0, Vec::len);
        if n == 0 {
            return b.iter().all(Zero::is_zero).then(|| FeasibleRegion {
                rows: Vec::new(),
                basis: Vec::new(),
                vars: 0,
                width: 0,
            });
        }
        let width = n + m;
        let mut rows = Vec::with_capacity(m);
        for (i, (row, rhs)) in a.iter().zip(b).enumerate() {
            assert_eq!(row.len(), n, "ragged constraint matrix");
            let flip = rhs.is_negative();
            let mut r: Vec<Q> = Vec::with_capacity(width + 1);
            r.extend(row.iter().map(|v| if flip { -v } else { v.clone() }));
            r.extend((0..m).map(|j| if j == i { Q::one() } else { Q::zero() }));
            r.push(if flip { -rhs } else { rhs.clone() });
            rows.push(r);
        }
        let basis: Vec<usize> = (n..n + m).collect();

        // Phase-1 objective: minimize the sum of artificials.
        let mut obj = vec![Q::zero(); width + 1];
        for r in &rows {
            for j in 0..n {
                obj[j] -= &r[j];
            }
            obj[width] -= &r[width];
        }
        let mut region = FeasibleRegion {
            rows,
            basis,
            vars: n,
            width,
        };
        let bounded = region.run(&mut obj, width);
        debug_assert!(bounded, "phase 1 is always bounded");
        if !obj[width].is_zero() {
            return None;
        }
        region.drive_out_artificials();
        Some(region)
    }

    pub fn vars(&self) -> usize {
        self.vars
    }

    /// Current basic feasible solution.
    pub fn point(&self) -> Vec<Q> {
        let mut x = vec![Q::zero(); self.vars];
        for (row, &bv) in self.rows.iter().zip(&self.basis) {
            if bv < self.vars {
                x[bv] = row[self.width].clone();
            }
        }
        x
    }

    /// Minimizes `c * x` over the region (phase 2). Does not modify `self`.
    pub fn minimize(&self, c: &[Q]) -> LpOutcome {
        assert_eq!(c.len(), self.vars, "objective length mismatch");
        let mut region = self.clone();
        let w = region.width;
        let mut obj = vec![Q::zero(); w + 1];
        obj[..region.vars].clone_from_slice(c);
        for (row, &bv) in region.rows.iter().zip(&region.basis) {
            if bv >= region.vars || c[bv].is_zero() {
                continue;
            }
            let cb = &c[bv];
            for j in 0..=w {
                if !row[j].is_zero() {
                    obj[j] -= cb * &row[j];
                }
            }
        }
        if !region.run(&mut obj, region.vars) {
            return LpOutcome::Unbounded;
        }
        LpOutcome::Optimal {
            x: region.point(),
            value: -obj[w].clone(),
        }
    }

    pub fn maximize(&self, c: &[Q]) -> LpOutcome {
        let neg: Vec<Q> = c.iter().map(|v| -v).collect();
        match self.minimize(&neg) {
            LpOutcome::Optimal { x, value } => LpOutcome::Optimal { x, value: -value },
            other => other,
        }
    }

    /// Bland's-rule iterations; only columns `< enter_limit` may enter.
    /// Returns false if the objective is unbounded below.
    fn run(&mut self, obj: &mut [Q], enter_limit: usize) -> bool {
        let w = self.width;
        loop {
            let Some(enter) = (0..enter_limit).find(|&j| obj[j].is_negative()) else {
                return true;
            };
            let mut leave: Option<(usize, Q)> = None;
            for (i, row) in self.rows.iter().enumerate() {
                if !row[enter].is_positive() {
                    continue;
                }
                let ratio = &row[w] / &row[enter];
                let better = match &leave {
                    None => true,
                    Some((li, lr)) => {
                        ratio < *lr || (ratio == *lr && self.basis[i] < self.basis[*li])
                    }
                };
                if better {
                    leave = Some((i, ratio));
                }
            }
            let Some((leave, _)) = leave else {
                return false;
            };
            self.pivot(leave, enter, obj);
        }
    }

    fn pivot(&mut self, r: usize, c: usize, obj: &mut [Q]) {
        let w = self.width;
        let inv = self.rows[r][c].recip();
        for v in self.rows[r].iter_mut() {
            if !v.is_zero() {
                *v *= &inv;
            }
        }
        let pivot_row = self.rows[r].clone();
        let eliminate = |target: &mut [Q]| {
            let f = target[c].clone();
            if f.is_zero() {
                return;
            }
            for j in 0..=w {
                if !pivot_row[j].is_zero() {
                    target[j] -= &f * &pivot_row[j];
                }
            }
        };
        for (i, row) in self.rows.iter_mut().enumerate() {
            if i != r {
                eliminate(row);
            }
        }
        eliminate(obj);
        self.basis[r] = c;
    }

    /// After phase 1, pivots zero-valued artificials out of the basis and
    /// drops rows that turn out to be redundant.
    fn drive_out_artificials(&mut self) {
        let mut dummy = vec![Q::zero(); self.width + 1];
        let mut i = 0;
        while i < self.rows.len() {
            if self.basis[i] < self.vars {
                i += 1;
                continue;
            }
            match (0..self.vars).find(|&j| !self.rows[i][j].is_zero()) {
                Some(j) => {
                    self.pivot(i, j, &mut dummy);
                    i += 1;
                }
                None => {
                    self.rows.remove(i);
                    self.basis.remove(i);
                }
            }
        }
    }
}

/// Minimizes `c * x` subject to `a * x = b, x >= 0`.
pub fn minimize(a: &[Vec<Q>], b: &[Q], c: &[Q]) -> LpOutcome {
    match FeasibleRegion::new(a, b) {
        None => LpOutcome::Infeasible,
        Some(region) => region.minimize(c),
    }
}

/// Finds `x >= 0` with `a * x = b`, or with every coordinate strictly
/// positive when `strict` is set.
///
/// The strict variant substitutes `x = y + t * 1` with `y >= 0`, `0 <= t <= 1`
/// and maximizes `t`; a solution exists iff the optimum is positive.
pub fn rational_feasible(a: &[Vec<Q>], b: &[Q], strict: bool) -> Option<Vec<Q>> {
    if !strict {
        return FeasibleRegion::new(a, b).map(|r| r.point());
    }
    let n = a.first().map_or(0, Vec::len);
    if n == 0 {
        return b.iter().all(Zero::is_zero).then(Vec::new);
    }
    // Columns: y_0..y_{n-1}, t, s  with  t + s = 1.
    let mut rows: Vec<Vec<Q>> = a
        .iter()
        .map(|row| {
            let mut r = row.clone();
            r.push(row.iter().sum());
            r.push(Q::zero());
            r
        })
        .collect();
    let mut cap = vec![Q::zero(); n + 2];
    cap[n] = Q::one();
    cap[n + 1] = Q::one();
    rows.push(cap);
    let mut rhs = b.to_vec();
    rhs.push(Q::one());

    let region = FeasibleRegion::new(&rows, &rhs)?;
    let mut c = vec![Q::zero(); n + 2];
    c[n] = Q::one();
    match region.maximize(&c) {
        LpOutcome::Optimal { x, value } if value.is_positive() => {
            let t = &x[n];
            Some(x[..n].iter().map(|y| y + t).collect())
        }
        _ => None,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{frac, rat};

    fn qm(rows: &[&[i64]]) -> Vec<Vec<Q>> {
        rows.iter().map(|r| r.iter().map(|&v| rat(v)).collect()).collect()
    }

    fn check(a: &[Vec<Q>], b: &[Q], x: &[Q]) {
        for (row, rhs) in a.iter().zip(b) {
            let lhs: Q = row.iter().zip(x).map(|(p, q)| p * q).sum();
            assert_eq!(&lhs, rhs);
        }
    }

    #[test]
    fn segment_vertex() {
        let a = qm(&[&[1, 1]]);
        let b = vec![rat(1)];
        let x = rational_feasible(&a, &b, false).unwrap();
        check(&a, &b, &x);
        assert!(x.iter().all(|v| !v.is_negative()));
        assert!(x.iter().any(Zero::is_zero));
    }

    #[test]
    fn segment_interior() {
        let a = qm(&[&[1, 1]]);
        let b = vec![rat(1)];
        let x = rational_feasible(&a, &b, true).unwrap();
        check(&a, &b, &x);
        assert!(x.iter().all(|v| v.is_positive()));
    }

    #[test]
    fn negativity_obstruction() {
        let a = qm(&[&[1, 0], &[0, 1]]);
        let b = vec![rat(1), rat(-1)];
        assert_eq!(rational_feasible(&a, &b, false), None);
        assert_eq!(rational_feasible(&a, &b, true), None);
    }

    #[test]
    fn strict_fails_on_face() {
        // x0 + x1 = 1 and x1 = 0 forces a zero coordinate.
        let a = qm(&[&[1, 1], &[0, 1]]);
        let b = vec![rat(1), rat(0)];
        assert!(rational_feasible(&a, &b, false).is_some());
        assert_eq!(rational_feasible(&a, &b, true), None);
    }

    #[test]
    fn redundant_rows() {
        let a = qm(&[&[1, 1, 0], &[2, 2, 0], &[0, 1, 1]]);
        let b = vec![rat(1), rat(2), rat(1)];
        let x = rational_feasible(&a, &b, true).unwrap();
        check(&a, &b, &x);
        let region = FeasibleRegion::new(&a, &b).unwrap();
        match region.maximize(&[rat(0), rat(1), rat(0)]) {
            LpOutcome::Optimal { value, .. } => assert_eq!(value, rat(1)),
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn optimum_and_unbounded() {
        // min -x0 s.t. x0 - x1 = 0 is unbounded.
        let a = qm(&[&[1, -1]]);
        assert_eq!(minimize(&a, &[rat(0)], &[rat(-1), rat(0)]), LpOutcome::Unbounded);
        // min x0 + x1 s.t. 2x0 + 3x1 = 1 -> x1 = 1/3.
        let a = qm(&[&[2, 3]]);
        match minimize(&a, &[rat(1)], &[rat(1), rat(1)]) {
            LpOutcome::Optimal { value, x } => {
                assert_eq!(value, frac(1, 3));
                assert_eq!(x, vec![rat(0), frac(1, 3)]);
            }
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn degenerate_cycling_instance_terminates() {
        // Beale's classic cycling example in equality form with slacks.
        let a = vec![
            vec![frac(1, 4), rat(-60), frac(-1, 25), rat(9), rat(1), rat(0), rat(0)],
            vec![frac(1, 2), rat(-90), frac(-1, 50), rat(3), rat(0), rat(1), rat(0)],
            vec![rat(0), rat(0), rat(1), rat(0), rat(0), rat(0), rat(1)],
        ];
        let b = vec![rat(0), rat(0), rat(1)];
        let c = vec![frac(-3, 4), rat(150), frac(-1, 50), rat(6), rat(0), rat(0), rat(0)];
        match minimize(&a, &b, &c) {
            LpOutcome::Optimal { value, x } => {
                assert_eq!(value, frac(-1, 20));
                check(&a, &b, &x);
            }
            other => panic!("unexpected {other:?}"),
        }
    }
}
