//! Decomposition search in the graded semigroup of a lattice polytope.
//!
//! A point `alpha` of `kP ∩ Z^N` decomposes when it is a sum of `k` lattice
//! points of `P`. The checkers here certify that property degree by degree up
//! to a caller-chosen bound; a failure always carries an explicit point that
//! can be re-checked by exhaustive search.

use std::collections::HashSet;
use std::fmt;

use num_rational::BigRational;
use num_traits::{One, Zero};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::exact::{rat, FeasibleRegion};
use crate::polytope::{add, scaled_sum, sub, sum_points, to_rational, AffineLattice, LatticePolytope, Point};
use crate::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Property {
    #[serde(rename = "IDP")]
    Idp,
    #[serde(rename = "NORMAL")]
    Normal,
    #[serde(rename = "LEVEL")]
    Level,
}

impl fmt::Display for Property {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Property::Idp => "IDP",
            Property::Normal => "NORMAL",
            Property::Level => "LEVEL",
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Verdict {
    #[serde(rename = "HOLDS_UP_TO_K")]
    HoldsUpToK,
    #[serde(rename = "FAILS")]
    Fails,
}

/// A degree `k` and a point of the `k`-th dilate with no admissible split.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Counterexample {
    pub k: usize,
    pub alpha: Point,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckReport {
    pub property: Property,
    /// Largest degree for which every point was verified.
    pub verified_up_to_k: usize,
    pub verdict: Verdict,
    pub counterexample: Option<Counterexample>,
}

impl CheckReport {
    fn holds(property: Property, max_k: usize) -> Self {
        CheckReport {
            property,
            verified_up_to_k: max_k,
            verdict: Verdict::HoldsUpToK,
            counterexample: None,
        }
    }

    fn fails(property: Property, k: usize, alpha: Point) -> Self {
        CheckReport {
            property,
            verified_up_to_k: k - 1,
            verdict: Verdict::Fails,
            counterexample: Some(Counterexample { k, alpha }),
        }
    }

    pub fn holds_up_to_k(&self) -> bool {
        self.verdict == Verdict::HoldsUpToK
    }
}

/// `alpha = parts[0] + ... + parts[k-1]` with every part a lattice point of
/// the polytope under test.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DecompositionWitness {
    pub k: usize,
    pub alpha: Point,
    pub parts: Vec<Point>,
}

impl DecompositionWitness {
    /// Re-validates the witness against `p` from scratch.
    pub fn is_valid_for(&self, p: &LatticePolytope) -> bool {
        self.parts.len() == self.k
            && sum_points(p.ambient_dim(), &self.parts) == self.alpha
            && self.parts.iter().all(|x| p.contains_point(x))
    }
}

/// Pointwise sums `a + b` for `a` in `left`, `b` in `right`.
pub fn sumset(left: &HashSet<Point>, right: &[Point]) -> HashSet<Point> {
    left.par_iter()
        .fold(HashSet::new, |mut acc, a| {
            acc.extend(right.iter().map(|b| add(a, b)));
            acc
        })
        .reduce(HashSet::new, |mut x, y| {
            if x.len() < y.len() {
                return reduce_into(y, x);
            }
            x.extend(y);
            x
        })
}

fn reduce_into(mut big: HashSet<Point>, small: HashSet<Point>) -> HashSet<Point> {
    big.extend(small);
    big
}

/// The `k`-fold sumset of `points` (all sums of `k` of them).
pub fn k_fold_sumset(points: &[Point], k: usize) -> HashSet<Point> {
    assert!(k >= 1);
    let mut acc: HashSet<Point> = points.iter().cloned().collect();
    for _ in 1..k {
        acc = sumset(&acc, points);
    }
    acc
}

/// Exhaustive depth-first search for `k` lattice points of `p` summing to
/// `alpha`.
pub fn decompose(alpha: &[i64], k: usize, p: &LatticePolytope) -> Option<Vec<Point>> {
    Decomposer::new(p).decompose(alpha, k)
}

/// Reusable decomposition search over a fixed polytope.
pub struct Decomposer {
    polytope: LatticePolytope,
    points: Vec<Point>,
}

impl Decomposer {
    pub fn new(p: &LatticePolytope) -> Self {
        let polytope = p.reduced();
        let points = polytope.lattice_points();
        Decomposer { polytope, points }
    }

    pub fn points(&self) -> &[Point] {
        &self.points
    }

    pub fn decompose(&self, alpha: &[i64], k: usize) -> Option<Vec<Point>> {
        assert!(k >= 1, "decomposition length must be positive");
        assert_eq!(alpha.len(), self.polytope.ambient_dim(), "point dimension mismatch");
        let dilates: Vec<LatticePolytope> = (1..=k as i64)
            .map(|j| self.polytope.dilate(j).expect("positive dilation"))
            .collect();
        if !dilates[k - 1].contains_point(alpha) {
            return None;
        }
        let mut parts = Vec::with_capacity(k);
        self.search(alpha.to_vec(), k, self.points.len(), &dilates, &mut parts)
            .then_some(parts)
    }

    /// Parts are taken in non-increasing lexicographic order: each chosen
    /// index is below `bound`.
    fn search(
        &self,
        residual: Point,
        remaining: usize,
        bound: usize,
        dilates: &[LatticePolytope],
        parts: &mut Vec<Point>,
    ) -> bool {
        if remaining == 1 {
            return match self.points[..bound].binary_search(&residual) {
                Ok(_) => {
                    parts.push(residual);
                    true
                }
                Err(_) => false,
            };
        }
        for idx in (0..bound).rev() {
            let next = sub(&residual, &self.points[idx]);
            if !dilates[remaining - 2].contains_point(&next) {
                continue;
            }
            parts.push(self.points[idx].clone());
            if self.search(next, remaining - 1, idx + 1, dilates, parts) {
                return true;
            }
            parts.pop();
        }
        false
    }
}

fn require_max_k(max_k: usize) -> Result<()> {
    if max_k < 2 {
        return Err(Error::Precondition(format!("max_k must be at least 2, got {max_k}")));
    }
    Ok(())
}

/// Checks that every lattice point of `kP` splits into `k` lattice points of
/// `P` for `k = 2..=max_k`, reporting the lexicographically first failure of
/// the smallest failing degree.
pub fn idp_check(p: &LatticePolytope, max_k: usize) -> Result<CheckReport> {
    require_max_k(max_k)?;
    let base = p.reduced();
    let points = base.lattice_points();
    let mut reachable: HashSet<Point> = points.iter().cloned().collect();
    for k in 2..=max_k {
        reachable = sumset(&reachable, &points);
        let dilate = base.dilate(k as i64)?;
        if let Some(alpha) = dilate.lattice_points().into_iter().find(|a| !reachable.contains(a)) {
            return Ok(CheckReport::fails(Property::Idp, k, alpha));
        }
    }
    Ok(CheckReport::holds(Property::Idp, max_k))
}

/// All lattice points of `kP` that are not sums of `k` lattice points of `P`.
pub fn idp_failures(p: &LatticePolytope, k: usize) -> Vec<Point> {
    let base = p.reduced();
    let reachable = k_fold_sumset(&base.lattice_points(), k);
    base.dilate(k as i64)
        .expect("positive dilation")
        .lattice_points()
        .into_iter()
        .filter(|a| !reachable.contains(a))
        .collect()
}

/// Like [`idp_check`], restricted to points of `kP` lying in the affine
/// lattice generated by the lattice points of `kP`.
pub fn normal_check(p: &LatticePolytope, max_k: usize) -> Result<CheckReport> {
    require_max_k(max_k)?;
    let base = p.reduced();
    let points = base.lattice_points();
    let mut reachable: HashSet<Point> = points.iter().cloned().collect();
    for k in 2..=max_k {
        reachable = sumset(&reachable, &points);
        let dilated_points = base.dilate(k as i64)?.lattice_points();
        let lattice = AffineLattice::from_points(&dilated_points)?;
        if let Some(alpha) = dilated_points
            .into_iter()
            .find(|a| !reachable.contains(a) && lattice.contains(a))
        {
            return Ok(CheckReport::fails(Property::Normal, k, alpha));
        }
    }
    Ok(CheckReport::holds(Property::Normal, max_k))
}

/// Levelness proxy for `Q = sum n_i P_i`: every interior lattice point of
/// `kQ` is an interior lattice point of `Q` plus `k - 1` lattice points of
/// `Q`.
pub fn level_check(ps: &[LatticePolytope], ns: &[i64], max_k: usize) -> Result<CheckReport> {
    require_max_k(max_k)?;
    if ps.len() != ns.len() || ps.is_empty() {
        return Err(Error::Precondition("need one positive multiplier per polytope".into()));
    }
    if let Some(&n) = ns.iter().find(|&&n| n < 1) {
        return Err(Error::InvalidDilation(n));
    }
    let q = scaled_sum(ps, ns)?.reduced();
    let q_points = q.lattice_points();
    let interior = q.relint_lattice_points();
    let mut tails: HashSet<Point> = q_points.iter().cloned().collect();
    for k in 2..=max_k {
        if k > 2 {
            tails = sumset(&tails, &q_points);
        }
        let kq = q.dilate(k as i64)?;
        let candidates = kq.lattice_points();
        let failure = candidates.par_iter().find_first(|alpha| {
            let splits = interior.iter().any(|beta| tails.contains(&sub(alpha, beta)));
            // Any point that splits this way is automatically interior.
            !splits && kq.relint_contains_point(alpha)
        });
        if let Some(alpha) = failure {
            return Ok(CheckReport::fails(Property::Level, k, alpha.clone()));
        }
    }
    Ok(CheckReport::holds(Property::Level, max_k))
}

fn dims_and_check(ps: &[LatticePolytope], ns: &[i64], slack: i64) -> Result<Vec<i64>> {
    if ps.len() != ns.len() || ps.is_empty() {
        return Err(Error::Precondition("need one multiplier per polytope".into()));
    }
    let dims: Vec<i64> = ps.iter().map(|p| p.dimension() as i64).collect();
    for (i, (&n, &d)) in ns.iter().zip(&dims).enumerate() {
        if n < d + slack {
            return Err(Error::Precondition(format!(
                "multiplier n_{} = {n} is below dim + {slack} = {}",
                i + 1,
                d + slack
            )));
        }
    }
    Ok(dims)
}

/// Sumset of `base` with `copies[i]` lattice points of each `P_i`.
fn expand(base: Vec<Point>, ps: &[LatticePolytope], copies: &[i64]) -> HashSet<Point> {
    let mut acc: HashSet<Point> = base.into_iter().collect();
    for (p, &c) in ps.iter().zip(copies) {
        let pts = p.lattice_points();
        for _ in 0..c {
            acc = sumset(&acc, &pts);
        }
    }
    acc
}

/// Set identity: the lattice points of `sum n_i P_i` are exactly the lattice
/// points of `sum d_i P_i` plus `n_i - d_i` lattice points of each `P_i`,
/// where `d_i = dim P_i`. Requires `n_i >= d_i + 1`.
pub fn verify_lemma25a(ps: &[LatticePolytope], ns: &[i64]) -> Result<bool> {
    let dims = dims_and_check(ps, ns, 1)?;
    let lhs: HashSet<Point> = scaled_sum(ps, ns)?.lattice_points().into_iter().collect();
    let core = scaled_sum(ps, &dims)?.lattice_points();
    let copies: Vec<i64> = ns.iter().zip(&dims).map(|(n, d)| n - d).collect();
    Ok(lhs == expand(core, ps, &copies))
}

/// Interior analogue: interior lattice points of `sum n_i P_i` are the
/// interior lattice points of `sum (d_i + 1) P_i` plus `n_i - d_i - 1`
/// lattice points of each `P_i`. Requires `n_i >= d_i + 2`.
pub fn verify_lemma25b(ps: &[LatticePolytope], ns: &[i64]) -> Result<bool> {
    let dims = dims_and_check(ps, ns, 2)?;
    let lhs: HashSet<Point> = scaled_sum(ps, ns)?.relint_lattice_points().into_iter().collect();
    let shifted: Vec<i64> = dims.iter().map(|d| d + 1).collect();
    let core = scaled_sum(ps, &shifted)?.relint_lattice_points();
    let copies: Vec<i64> = ns.iter().zip(&dims).map(|(n, d)| n - d - 1).collect();
    Ok(lhs == expand(core, ps, &copies))
}

/// Constructive split of `alpha in k(n_1 P_1 + ... + n_m P_m)` into `k`
/// lattice points of `n_1 P_1 + ... + n_m P_m`, valid when `n_i >= dim P_i`.
///
/// One basic solution of the joint convex-combination system supports each
/// block on affinely independent generators. While block `i` still carries
/// total weight above `dim P_i`, some coefficient in it is at least 1 and the
/// corresponding generator is peeled off as an integer summand. The peeled
/// summands and the integral remainder are then regrouped into `k` parts.
pub fn caratheodory_decompose(
    ps: &[LatticePolytope],
    ns: &[i64],
    alpha: &[i64],
    k: usize,
) -> Result<Vec<Point>> {
    if ps.len() != ns.len() || ps.is_empty() {
        return Err(Error::Precondition("need one multiplier per polytope".into()));
    }
    if k < 1 {
        return Err(Error::Precondition("k must be positive".into()));
    }
    let dim = ps[0].ambient_dim();
    if alpha.len() != dim {
        return Err(Error::DimensionMismatch { expected: dim, found: alpha.len() });
    }
    let dims: Vec<i64> = ps.iter().map(|p| p.dimension() as i64).collect();
    for (&n, &d) in ns.iter().zip(&dims) {
        if n < d.max(1) {
            return Err(Error::Precondition(format!("multiplier {n} is below dimension {d}")));
        }
    }

    // Columns: generators of every block; rows: coordinates then block totals.
    let blocks: Vec<&[Point]> = ps.iter().map(|p| p.generators()).collect();
    let mut a: Vec<Vec<BigRational>> = Vec::with_capacity(dim + ps.len());
    for c in 0..dim {
        a.push(blocks.iter().flat_map(|gens| gens.iter().map(move |g| rat(g[c]))).collect());
    }
    for i in 0..blocks.len() {
        let row = blocks
            .iter()
            .enumerate()
            .flat_map(|(j, gens)| {
                let v = if i == j { BigRational::one() } else { BigRational::zero() };
                std::iter::repeat_n(v, gens.len())
            })
            .collect();
        a.push(row);
    }
    let mut b = to_rational(alpha);
    b.extend(ns.iter().map(|&n| rat(n * k as i64)));

    let Some(region) = FeasibleRegion::new(&a, &b) else {
        return Err(Error::Precondition(format!("{alpha:?} is not in the {k}-th dilate")));
    };
    let mut lambda = region.point();

    let mut peeled: Vec<Vec<Point>> = vec![Vec::new(); blocks.len()];
    let mut remainder = alpha.to_vec();
    let mut offset = 0;
    for (i, gens) in blocks.iter().enumerate() {
        let mut total = ns[i] * k as i64;
        while total > dims[i] {
            let Some(j) = (0..gens.len()).find(|&j| lambda[offset + j] >= BigRational::one()) else {
                return Err(Error::Internal(format!(
                    "block {i} has weight {total} above its dimension but no unit coefficient"
                )));
            };
            lambda[offset + j] -= BigRational::one();
            remainder = sub(&remainder, &gens[j]);
            peeled[i].push(gens[j].clone());
            total -= 1;
        }
        offset += gens.len();
    }

    let mut parts = Vec::with_capacity(k);
    let mut first = remainder;
    let mut cursors = vec![0usize; blocks.len()];
    for (i, pile) in peeled.iter().enumerate() {
        let take = (ns[i] - dims[i]) as usize;
        for g in &pile[..take] {
            first = add(&first, g);
        }
        cursors[i] = take;
    }
    parts.push(first);
    for _ in 1..k {
        let mut part = vec![0; dim];
        for (i, pile) in peeled.iter().enumerate() {
            let take = ns[i] as usize;
            for g in &pile[cursors[i]..cursors[i] + take] {
                part = add(&part, g);
            }
            cursors[i] += take;
        }
        parts.push(part);
    }
    Ok(parts)
}
