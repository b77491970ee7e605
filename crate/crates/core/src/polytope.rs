//! Integral convex polytopes in V-representation and their Minkowski-sum
//! algebra.
//!
//! Every predicate reduces to an exact linear program over the generators:
//! membership is a convex combination, relative-interior membership is a
//! convex combination with every coefficient strictly positive.

use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};
use rayon::prelude::*;

use crate::exact::{
    ceil_i64, floor_i64, one, rat, rational_feasible, solve_integer_linear, to_i64,
    FeasibleRegion, IntMatrix, LpOutcome,
};
use crate::{Error, Result};

/// An integer point of `Z^N`.
pub type Point = Vec<i64>;

pub fn add(a: &[i64], b: &[i64]) -> Point {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

pub fn sub(a: &[i64], b: &[i64]) -> Point {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

pub fn scale(a: &[i64], k: i64) -> Point {
    a.iter().map(|x| x * k).collect()
}

pub fn sum_points<'a>(dim: usize, points: impl IntoIterator<Item = &'a Point>) -> Point {
    let mut acc = vec![0; dim];
    for p in points {
        for (a, x) in acc.iter_mut().zip(p) {
            *a += x;
        }
    }
    acc
}

pub fn to_rational(p: &[i64]) -> Vec<BigRational> {
    p.iter().map(|&x| rat(x)).collect()
}

/// Convex hull of finitely many integer points.
///
/// Generators are deduplicated and kept in lexicographic order. They need not
/// all be vertices, so two polytopes are compared with [`Self::same_as`]
/// rather than `==`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct LatticePolytope {
    ambient_dim: usize,
    generators: Vec<Point>,
}

impl LatticePolytope {
    pub fn new(ambient_dim: usize, generators: Vec<Point>) -> Result<Self> {
        if generators.is_empty() {
            return Err(Error::EmptyPolytope);
        }
        if let Some(bad) = generators.iter().find(|g| g.len() != ambient_dim) {
            return Err(Error::DimensionMismatch {
                expected: ambient_dim,
                found: bad.len(),
            });
        }
        let generators: BTreeSet<Point> = generators.into_iter().collect();
        Ok(LatticePolytope {
            ambient_dim,
            generators: generators.into_iter().collect(),
        })
    }

    /// The polytope `{p}`.
    pub fn point(p: Point) -> Self {
        LatticePolytope {
            ambient_dim: p.len(),
            generators: vec![p],
        }
    }

    pub fn origin(ambient_dim: usize) -> Self {
        Self::point(vec![0; ambient_dim])
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn generators(&self) -> &[Point] {
        &self.generators
    }

    /// Affine dimension of the hull.
    pub fn dimension(&self) -> usize {
        let g0 = &self.generators[0];
        let diffs: Vec<Vec<BigRational>> = self.generators[1..]
            .iter()
            .map(|g| to_rational(&sub(g, g0)))
            .collect();
        crate::exact::rank(&diffs)
    }

    /// `n * self`.
    pub fn dilate(&self, n: i64) -> Result<Self> {
        if n < 1 {
            return Err(Error::InvalidDilation(n));
        }
        Ok(LatticePolytope {
            ambient_dim: self.ambient_dim,
            generators: self.generators.iter().map(|g| scale(g, n)).collect(),
        })
    }

    /// Translate by an integer vector.
    pub fn translate(&self, v: &[i64]) -> Self {
        LatticePolytope {
            ambient_dim: self.ambient_dim,
            generators: self.generators.iter().map(|g| add(g, v)).collect(),
        }
    }

    /// Is `x` a convex combination of the generators?
    pub fn contains(&self, x: &[BigRational]) -> bool {
        self.check_dim(x.len());
        let (a, b) = self.combination_system(x);
        rational_feasible(&a, &b, false).is_some()
    }

    pub fn contains_point(&self, x: &[i64]) -> bool {
        if !self.in_bounding_box(x) {
            return false;
        }
        self.contains(&to_rational(x))
    }

    /// Is `x` a convex combination of all generators with strictly positive
    /// coefficients? For a finite point set this is exactly the relative
    /// interior of its hull.
    pub fn relint_contains(&self, x: &[BigRational]) -> bool {
        self.check_dim(x.len());
        if self.generators.len() == 1 {
            return x.iter().zip(&self.generators[0]).all(|(a, &b)| *a == rat(b));
        }
        let (a, b) = self.combination_system(x);
        rational_feasible(&a, &b, true).is_some()
    }

    pub fn relint_contains_point(&self, x: &[i64]) -> bool {
        if !self.in_bounding_box(x) {
            return false;
        }
        self.relint_contains(&to_rational(x))
    }

    /// A convex-combination certificate for `x`, supported on affinely
    /// independent generators.
    pub fn convex_representation(&self, x: &[BigRational]) -> Option<WeightedCombination> {
        self.check_dim(x.len());
        let (a, b) = self.combination_system(x);
        let lambda = rational_feasible(&a, &b, false)?;
        Some(WeightedCombination::new(
            self.generators
                .iter()
                .cloned()
                .zip(lambda)
                .filter(|(_, c)| !c.is_zero())
                .collect(),
        ))
    }

    /// Polytope equality as point sets (mutual containment of generators).
    pub fn same_as(&self, other: &LatticePolytope) -> bool {
        self.ambient_dim == other.ambient_dim
            && self.generators.iter().all(|g| other.contains_point(g))
            && other.generators.iter().all(|g| self.contains_point(g))
    }

    /// The same polytope generated by its vertices only.
    pub fn reduced(&self) -> LatticePolytope {
        if self.generators.len() <= 2 {
            return self.clone();
        }
        let vertices: Vec<Point> = (0..self.generators.len())
            .into_par_iter()
            .filter(|&i| {
                let others: Vec<Point> = self
                    .generators
                    .iter()
                    .enumerate()
                    .filter(|&(j, _)| j != i)
                    .map(|(_, g)| g.clone())
                    .collect();
                let rest = LatticePolytope {
                    ambient_dim: self.ambient_dim,
                    generators: others,
                };
                !rest.contains_point(&self.generators[i])
            })
            .map(|i| self.generators[i].clone())
            .collect();
        LatticePolytope {
            ambient_dim: self.ambient_dim,
            generators: vertices,
        }
    }

    /// Componentwise `(min, max)` over the generators.
    pub fn bounding_box(&self) -> (Point, Point) {
        let mut lo = self.generators[0].clone();
        let mut hi = self.generators[0].clone();
        for g in &self.generators[1..] {
            for i in 0..self.ambient_dim {
                lo[i] = lo[i].min(g[i]);
                hi[i] = hi[i].max(g[i]);
            }
        }
        (lo, hi)
    }

    /// All integer points of the polytope, sorted lexicographically.
    ///
    /// The scan runs over coordinates that parametrize the affine hull; at
    /// each prefix the admissible range of the next coordinate is the exact
    /// LP projection, so every visited leaf is a member.
    pub fn lattice_points(&self) -> Vec<Point> {
        let reduced = self.reduced();
        let chart = AffineChart::of(&reduced.generators);
        if chart.free.is_empty() {
            return vec![reduced.generators[0].clone()];
        }
        let enumerator = Enumerator {
            gens: &reduced.generators,
            chart: &chart,
        };
        let first = chart.free[0];
        let lo = reduced.generators.iter().map(|g| g[first]).min().unwrap();
        let hi = reduced.generators.iter().map(|g| g[first]).max().unwrap();
        let mut points: Vec<Point> = (lo..=hi)
            .into_par_iter()
            .flat_map_iter(|v| {
                let mut out = Vec::new();
                enumerator.descend(&mut vec![v], &mut out);
                out
            })
            .collect();
        points.sort();
        points
    }

    /// Integer points of the relative interior, sorted.
    pub fn relint_lattice_points(&self) -> Vec<Point> {
        let reduced = self.reduced();
        let points = reduced.lattice_points();
        if reduced.generators.len() == 1 {
            return points;
        }
        points
            .into_par_iter()
            .filter(|x| reduced.relint_contains(&to_rational(x)))
            .collect()
    }

    fn combination_system(&self, x: &[BigRational]) -> (Vec<Vec<BigRational>>, Vec<BigRational>) {
        let mut a: Vec<Vec<BigRational>> = (0..self.ambient_dim)
            .map(|i| self.generators.iter().map(|g| rat(g[i])).collect())
            .collect();
        a.push(vec![one(); self.generators.len()]);
        let mut b = x.to_vec();
        b.push(one());
        (a, b)
    }

    fn in_bounding_box(&self, x: &[i64]) -> bool {
        self.check_dim(x.len());
        let (lo, hi) = self.bounding_box();
        x.iter().zip(lo.iter().zip(&hi)).all(|(v, (l, h))| l <= v && v <= h)
    }

    fn check_dim(&self, n: usize) {
        assert_eq!(n, self.ambient_dim, "point dimension does not match polytope");
    }
}

/// `P_1 + ... + P_m`, generated by all sums of generator tuples.
pub fn minkowski_sum(ps: &[LatticePolytope]) -> Result<LatticePolytope> {
    let Some(first) = ps.first() else {
        return Err(Error::EmptyPolytope);
    };
    let dim = first.ambient_dim;
    let mut sums: BTreeSet<Point> = first.generators.iter().cloned().collect();
    for p in &ps[1..] {
        if p.ambient_dim != dim {
            return Err(Error::DimensionMismatch {
                expected: dim,
                found: p.ambient_dim,
            });
        }
        sums = sums
            .iter()
            .flat_map(|s| p.generators.iter().map(move |g| add(s, g)))
            .collect();
    }
    Ok(LatticePolytope {
        ambient_dim: dim,
        generators: sums.into_iter().collect(),
    })
}

/// Splits `z` as `x_1 + ... + x_m` with each `x_i` in the relative interior
/// of `ps[i]`, if such a split exists.
pub fn relint_split(ps: &[LatticePolytope], z: &[BigRational]) -> Option<Vec<Vec<BigRational>>> {
    let dim = ps.first()?.ambient_dim;
    assert!(ps.iter().all(|p| p.ambient_dim == dim), "mixed ambient dimensions");
    assert_eq!(z.len(), dim, "point dimension does not match polytope");
    let cols: Vec<(usize, &Point)> = ps
        .iter()
        .enumerate()
        .flat_map(|(i, p)| p.generators.iter().map(move |g| (i, g)))
        .collect();
    let mut a: Vec<Vec<BigRational>> = (0..dim)
        .map(|c| cols.iter().map(|(_, g)| rat(g[c])).collect())
        .collect();
    for i in 0..ps.len() {
        a.push(
            cols.iter()
                .map(|&(j, _)| if i == j { one() } else { BigRational::zero() })
                .collect(),
        );
    }
    let mut b = z.to_vec();
    b.extend(ps.iter().map(|_| one()));
    let lambda = rational_feasible(&a, &b, true)?;
    let mut parts = vec![vec![BigRational::zero(); dim]; ps.len()];
    for ((i, g), l) in cols.iter().zip(&lambda) {
        for (acc, &x) in parts[*i].iter_mut().zip(g.iter()) {
            *acc += l * rat(x);
        }
    }
    Some(parts)
}

/// `n_1 P_1 + ... + n_m P_m` with `n_i >= 0`; terms with `n_i = 0` contribute
/// the origin.
pub fn scaled_sum(ps: &[LatticePolytope], ns: &[i64]) -> Result<LatticePolytope> {
    if ps.len() != ns.len() {
        return Err(Error::Precondition(format!(
            "{} polytopes but {} multipliers",
            ps.len(),
            ns.len()
        )));
    }
    let Some(first) = ps.first() else {
        return Err(Error::EmptyPolytope);
    };
    let mut terms = Vec::new();
    for (p, &n) in ps.iter().zip(ns) {
        match n {
            0 => {}
            n if n < 0 => return Err(Error::InvalidDilation(n)),
            n => terms.push(p.dilate(n)?),
        }
    }
    if terms.is_empty() {
        return Ok(LatticePolytope::origin(first.ambient_dim));
    }
    minkowski_sum(&terms)
}

/// Affine hull in solved form: every point is determined by its values on the
/// `free` coordinates.
struct AffineChart {
    base: Vec<BigRational>,
    free: Vec<usize>,
    /// One row per free coordinate, reduced so that row `t` is 1 at `free[t]`
    /// and 0 at the other free coordinates.
    rows: Vec<Vec<BigRational>>,
}

impl AffineChart {
    fn of(points: &[Point]) -> Self {
        let base = to_rational(&points[0]);
        let n = base.len();
        let mut rows: Vec<Vec<BigRational>> = points[1..]
            .iter()
            .map(|p| to_rational(&sub(p, &points[0])))
            .collect();
        let mut free = Vec::new();
        let mut r = 0;
        for c in 0..n {
            let Some(p) = (r..rows.len()).find(|&i| !rows[i][c].is_zero()) else {
                continue;
            };
            rows.swap(r, p);
            let inv = rows[r][c].recip();
            for v in rows[r].iter_mut() {
                *v *= &inv;
            }
            for i in 0..rows.len() {
                if i == r || rows[i][c].is_zero() {
                    continue;
                }
                let f = rows[i][c].clone();
                for j in 0..n {
                    let s = &f * &rows[r][j];
                    rows[i][j] -= s;
                }
            }
            free.push(c);
            r += 1;
        }
        rows.truncate(r);
        AffineChart { base, free, rows }
    }

    /// The point with the given free-coordinate values, if it is integral.
    fn lift(&self, values: &[i64]) -> Option<Point> {
        let mut x = self.base.clone();
        for (t, row) in self.rows.iter().enumerate() {
            let shift = rat(values[t]) - &self.base[self.free[t]];
            if shift.is_zero() {
                continue;
            }
            for (xc, rc) in x.iter_mut().zip(row) {
                if !rc.is_zero() {
                    *xc += &shift * rc;
                }
            }
        }
        x.iter().map(to_i64).collect()
    }
}

struct Enumerator<'a> {
    gens: &'a [Point],
    chart: &'a AffineChart,
}

impl Enumerator<'_> {
    fn descend(&self, prefix: &mut Vec<i64>, out: &mut Vec<Point>) {
        let depth = prefix.len();
        if depth == self.chart.free.len() {
            if let Some(x) = self.chart.lift(prefix) {
                out.push(x);
            }
            return;
        }
        let Some((lo, hi)) = self.range(prefix) else {
            return;
        };
        for v in lo..=hi {
            prefix.push(v);
            self.descend(prefix, out);
            prefix.pop();
        }
    }

    /// Range of the next free coordinate over the slice of the polytope with
    /// the prefix fixed.
    fn range(&self, prefix: &[i64]) -> Option<(i64, i64)> {
        let mut a: Vec<Vec<BigRational>> = self.chart.free[..prefix.len()]
            .iter()
            .map(|&c| self.gens.iter().map(|g| rat(g[c])).collect())
            .collect();
        a.push(vec![one(); self.gens.len()]);
        let mut b: Vec<BigRational> = prefix.iter().map(|&v| rat(v)).collect();
        b.push(one());
        let region = FeasibleRegion::new(&a, &b)?;
        let next = self.chart.free[prefix.len()];
        let obj: Vec<BigRational> = self.gens.iter().map(|g| rat(g[next])).collect();
        let (LpOutcome::Optimal { value: lo, .. }, LpOutcome::Optimal { value: hi, .. }) =
            (region.minimize(&obj), region.maximize(&obj))
        else {
            unreachable!("objective over a polytope is bounded");
        };
        let (lo, hi) = (ceil_i64(&lo), floor_i64(&hi));
        (lo <= hi).then_some((lo, hi))
    }
}

/// Affine lattice `v0 + Z-span{v - v0}` generated by a finite point set.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AffineLattice {
    ambient_dim: usize,
    base: Point,
    /// Z-basis of the difference lattice: the nonzero columns of its HNF.
    basis: Vec<Vec<BigInt>>,
}

impl AffineLattice {
    pub fn from_points(points: &[Point]) -> Result<Self> {
        let base = points.first().ok_or(Error::EmptyPointSet)?.clone();
        let n = base.len();
        if let Some(bad) = points.iter().find(|p| p.len() != n) {
            return Err(Error::DimensionMismatch {
                expected: n,
                found: bad.len(),
            });
        }
        let diffs: Vec<Vec<i64>> = points[1..]
            .iter()
            .map(|p| sub(p, &base))
            .filter(|d| d.iter().any(|&v| v != 0))
            .collect();
        // Folding a few columns at a time into the running basis keeps every
        // HNF narrow; the result is the same since the HNF is canonical.
        let mut basis: Vec<Vec<BigInt>> = Vec::new();
        for chunk in diffs.chunks(n.max(1)) {
            let mut cols = std::mem::take(&mut basis);
            cols.extend(chunk.iter().map(|d| d.iter().map(|&v| BigInt::from(v)).collect()));
            let h = crate::exact::hnf(&IntMatrix::from_cols(&cols));
            basis = (0..h.rank()).map(|j| h.h.col(j)).collect();
        }
        Ok(AffineLattice {
            ambient_dim: n,
            base,
            basis,
        })
    }

    pub fn base(&self) -> &[i64] {
        &self.base
    }

    pub fn basis(&self) -> &[Vec<BigInt>] {
        &self.basis
    }

    pub fn rank(&self) -> usize {
        self.basis.len()
    }

    pub fn contains(&self, x: &[i64]) -> bool {
        assert_eq!(x.len(), self.ambient_dim, "point dimension mismatch");
        let diff: Vec<BigInt> = sub(x, &self.base).into_iter().map(BigInt::from).collect();
        if self.basis.is_empty() {
            return diff.iter().all(Zero::is_zero);
        }
        let a = IntMatrix::from_cols(&self.basis);
        solve_integer_linear(&a, &diff).is_some()
    }
}

/// `sum coeff_i * point_i` with nonnegative rational coefficients.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeightedCombination {
    pub terms: Vec<(Point, BigRational)>,
    pub total: BigRational,
}

impl WeightedCombination {
    pub fn new(terms: Vec<(Point, BigRational)>) -> Self {
        assert!(
            terms.iter().all(|(_, c)| !c.is_negative()),
            "coefficients must be nonnegative"
        );
        let total = terms.iter().map(|(_, c)| c.clone()).sum();
        WeightedCombination { terms, total }
    }

    pub fn value(&self, dim: usize) -> Vec<BigRational> {
        let mut acc = vec![BigRational::zero(); dim];
        for (p, c) in &self.terms {
            for (a, &x) in acc.iter_mut().zip(p) {
                *a += c * rat(x);
            }
        }
        acc
    }
}
