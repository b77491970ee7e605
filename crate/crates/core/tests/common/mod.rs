//! Brute-force oracles and instance generators shared by the integration
//! tests. The oracles do not call the library's LP, lattice or cycle routines.

#![allow(dead_code)]

use std::collections::{BTreeSet, HashSet};

use itertools::Itertools;
use minksum::exact::{rat, BigInt, BigRational};
use minksum::graph::Graph;
use num_traits::{Signed, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub type Point = Vec<i64>;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn random_gens(rng: &mut ChaCha8Rng, dim: usize, max_gens: usize, max_coord: i64) -> Vec<Point> {
    let count = rng.gen_range(1..=max_gens);
    (0..count)
        .map(|_| (0..dim).map(|_| rng.gen_range(0..=max_coord)).collect())
        .collect()
}

/// Every sum of `k` points chosen with repetition from `points`.
pub fn naive_k_fold(points: &[Point], k: usize) -> HashSet<Point> {
    let dim = points.first().map_or(0, Vec::len);
    std::iter::repeat_n(points.iter(), k)
        .multi_cartesian_product()
        .map(|tuple| {
            let mut s = vec![0; dim];
            for p in tuple {
                for (a, b) in s.iter_mut().zip(p) {
                    *a += b;
                }
            }
            s
        })
        .collect()
}

/// Solves the square-or-tall system `m * y = rhs` by Gaussian elimination;
/// `None` unless the solution exists and is unique.
fn unique_solution(mut m: Vec<Vec<BigRational>>, mut rhs: Vec<BigRational>) -> Option<Vec<BigRational>> {
    let cols = m.first().map_or(0, Vec::len);
    let mut row = 0;
    for c in 0..cols {
        let p = (row..m.len()).find(|&i| !m[i][c].is_zero())?;
        m.swap(row, p);
        rhs.swap(row, p);
        let inv = m[row][c].recip();
        for v in m[row].iter_mut() {
            *v *= &inv;
        }
        rhs[row] *= &inv;
        for i in 0..m.len() {
            if i != row && !m[i][c].is_zero() {
                let f = m[i][c].clone();
                for j in 0..cols {
                    let s = &f * &m[row][j];
                    m[i][j] -= s;
                }
                let s = &f * &rhs[row];
                rhs[i] -= s;
            }
        }
        row += 1;
    }
    if rhs[row..].iter().any(|v| !v.is_zero()) {
        return None;
    }
    Some(rhs[..cols].to_vec())
}

/// Convex hull membership by Caratheodory: `x` is in the hull iff it has
/// nonnegative barycentric coordinates on some affinely independent subset.
pub fn hull_contains(gens: &[Point], x: &[BigRational]) -> bool {
    let dim = x.len();
    let distinct: Vec<&Point> = gens.iter().unique().collect();
    for size in 1..=distinct.len().min(dim + 1) {
        for subset in distinct.iter().combinations(size) {
            let mut m: Vec<Vec<BigRational>> = (0..dim).map(|i| subset.iter().map(|g| rat(g[i])).collect()).collect();
            m.push(vec![rat(1); size]);
            let mut rhs = x.to_vec();
            rhs.push(rat(1));
            if let Some(l) = unique_solution(m, rhs) {
                if l.iter().all(|v| !v.is_negative()) {
                    return true;
                }
            }
        }
    }
    false
}

pub fn hull_contains_point(gens: &[Point], x: &[i64]) -> bool {
    hull_contains(gens, &x.iter().map(|&v| rat(v)).collect::<Vec<_>>())
}

/// Lattice points of `conv(gens)` by scanning the bounding box.
pub fn box_lattice_points(gens: &[Point]) -> Vec<Point> {
    let dim = gens[0].len();
    let ranges: Vec<_> = (0..dim)
        .map(|i| {
            let lo = gens.iter().map(|g| g[i]).min().unwrap();
            let hi = gens.iter().map(|g| g[i]).max().unwrap();
            lo..=hi
        })
        .collect();
    let mut out: Vec<Point> = ranges
        .into_iter()
        .multi_cartesian_product()
        .filter(|x| hull_contains_point(gens, x))
        .collect();
    if dim == 0 {
        out = vec![vec![]];
    }
    out.sort();
    out
}

pub fn minkowski_gens(a: &[Point], b: &[Point]) -> Vec<Point> {
    a.iter()
        .cartesian_product(b)
        .map(|(x, y)| x.iter().zip(y).map(|(u, v)| u + v).collect())
        .collect()
}

pub fn scale_gens(a: &[Point], k: i64) -> Vec<Point> {
    a.iter().map(|x| x.iter().map(|v| v * k).collect()).collect()
}

/// Feasibility of `a x = b, x >= 0` by Fourier-Motzkin elimination.
pub fn fm_feasible(a: &[Vec<BigRational>], b: &[BigRational]) -> bool {
    let n = a.first().map_or(0, Vec::len);
    // Rows `coeffs . x <= rhs`.
    let mut rows: Vec<(Vec<BigRational>, BigRational)> = Vec::new();
    for (row, rhs) in a.iter().zip(b) {
        rows.push((row.clone(), rhs.clone()));
        rows.push((row.iter().map(|v| -v).collect(), -rhs));
    }
    for j in 0..n {
        let mut c = vec![rat(0); n];
        c[j] = rat(-1);
        rows.push((c, rat(0)));
    }
    for j in 0..n {
        let (mut pos, mut neg, mut rest) = (Vec::new(), Vec::new(), Vec::new());
        for (c, r) in rows {
            if c[j].is_positive() {
                pos.push((c, r));
            } else if c[j].is_negative() {
                neg.push((c, r));
            } else {
                rest.push((c, r));
            }
        }
        for (pc, pr) in &pos {
            for (nc, nr) in &neg {
                let (fp, fn_) = (-&nc[j], pc[j].clone());
                let c: Vec<BigRational> = pc.iter().zip(nc).map(|(u, v)| u * &fp + v * &fn_).collect();
                let r = pr * &fp + nr * &fn_;
                rest.push((c, r));
            }
        }
        rows = rest.into_iter().unique().collect();
    }
    rows.iter().all(|(_, r)| !r.is_negative())
}

/// An integer solution of `a x = b` with every entry in `[-bound, bound]`.
pub fn box_integer_solve(a: &[Vec<i64>], b: &[i64], bound: i64) -> Option<Vec<i64>> {
    let n = a.first().map_or(0, Vec::len);
    (0..n)
        .map(|_| -bound..=bound)
        .multi_cartesian_product()
        .find(|x| a.iter().zip(b).all(|(row, &r)| row.iter().zip(x).map(|(u, v)| u * v).sum::<i64>() == r))
}

pub fn big(v: &[i64]) -> Vec<BigInt> {
    v.iter().map(|&x| BigInt::from(x)).collect()
}

/// Vertex sets of all cycles of `g` (not only induced ones), with parity.
pub fn all_cycles(g: &Graph) -> Vec<(BTreeSet<usize>, bool)> {
    let n = g.n();
    let mut out = HashSet::new();
    for len in 3..=n {
        for verts in (1..=n).combinations(len) {
            let (first, rest) = verts.split_first().unwrap();
            for order in rest.iter().permutations(len - 1) {
                let mut cyc = vec![*first];
                cyc.extend(order.into_iter().copied());
                if (0..len).all(|i| g.has_edge(cyc[i], cyc[(i + 1) % len])) {
                    out.insert((verts.iter().copied().collect::<BTreeSet<_>>(), len % 2 == 1));
                    break;
                }
            }
        }
    }
    out.into_iter().collect()
}

fn joined(g: &Graph, a: &BTreeSet<usize>, b: &BTreeSet<usize>) -> bool {
    a.iter().any(|&u| b.iter().any(|&v| g.has_edge(u, v)))
}

/// Any two vertex-disjoint odd cycles have an edge between them.
pub fn occ_oracle(g: &Graph) -> bool {
    let odd: Vec<_> = all_cycles(g).into_iter().filter(|c| c.1).map(|c| c.0).collect();
    odd.iter()
        .tuple_combinations()
        .all(|(a, b)| !a.is_disjoint(b) || joined(g, a, b))
}

/// Any two odd cycles share a vertex.
pub fn common_vertex_oracle(g: &Graph) -> bool {
    let odd: Vec<_> = all_cycles(g).into_iter().filter(|c| c.1).map(|c| c.0).collect();
    odd.iter().tuple_combinations().all(|(a, b)| !a.is_disjoint(b))
}

pub fn has_odd_cycle(g: &Graph) -> bool {
    all_cycles(g).iter().any(|c| c.1)
}

/// A weighting of `g` with integer value, plus a random set of tracked
/// support edges. The weights are a random convex combination of several
/// vertices of the fiber `{w >= 0 : value(w) = alpha, degree(w) = k}` and the
/// integer weighting that produced `alpha`; up to `attempts` points `alpha`
/// are tried until the result has a fractional entry.
pub fn fractional_weighting(
    rng: &mut ChaCha8Rng,
    g: &Graph,
    attempts: usize,
) -> (minksum::edge_polytope::EdgeWeighting, BTreeSet<minksum::graph::Edge>, Point) {
    use minksum::exact::{minimize, LpOutcome};
    use std::collections::BTreeMap;

    let edges: Vec<_> = g.edges().iter().copied().collect();
    let mut last = None;
    for _ in 0..attempts.max(1) {
        let k = rng.gen_range(2..=5);
        let mut integer = vec![0i64; edges.len()];
        let mut alpha = vec![0i64; g.n()];
        for _ in 0..k {
            let c = rng.gen_range(0..edges.len());
            integer[c] += 1;
            alpha[edges[c].0 - 1] += 1;
            alpha[edges[c].1 - 1] += 1;
        }
        let mut a = vec![vec![rat(0); edges.len()]; g.n() + 1];
        for (c, &(i, j)) in edges.iter().enumerate() {
            a[i - 1][c] = rat(1);
            a[j - 1][c] = rat(1);
            a[g.n()][c] = rat(1);
        }
        let mut b: Vec<BigRational> = alpha.iter().map(|&x| rat(x)).collect();
        b.push(rat(k));
        let mut points: Vec<Vec<BigRational>> = vec![integer.iter().map(|&x| rat(x)).collect()];
        for _ in 0..3 {
            let cost: Vec<BigRational> = edges.iter().map(|_| rat(rng.gen_range(-5..=5))).collect();
            let LpOutcome::Optimal { x, .. } = minimize(&a, &b, &cost) else {
                panic!("the fiber is a nonempty polytope");
            };
            points.push(x);
        }
        let coeffs: Vec<i64> = points.iter().map(|_| rng.gen_range(1..=4)).collect();
        let total = rat(coeffs.iter().sum());
        let mut weights = BTreeMap::new();
        for (c, e) in edges.iter().enumerate() {
            let w: BigRational = points.iter().zip(&coeffs).map(|(x, &l)| &x[c] * rat(l)).sum::<BigRational>() / &total;
            if w.is_positive() {
                weights.insert(*e, w);
            }
        }
        let tracked = weights.keys().copied().filter(|_| rng.gen_bool(0.4)).collect();
        let fractional = weights.values().any(|w| !w.is_integer());
        let w = minksum::edge_polytope::EdgeWeighting::new(g.clone(), weights).unwrap();
        last = Some((w, tracked, alpha));
        if fractional {
            break;
        }
    }
    last.unwrap()
}

/// Checks a rewrite of `w` against its defining conditions and returns the
/// first violated one.
pub fn rewrite_violation(
    w: &minksum::edge_polytope::EdgeWeighting,
    tracked: &BTreeSet<minksum::graph::Edge>,
    alpha: &[i64],
    out: &minksum::edge_polytope::RewriteResult,
) -> Option<String> {
    let mut value = vec![0i64; alpha.len()];
    for (&(i, j), &a) in &out.integer_weights {
        if !w.graph.has_edge(i, j) {
            return Some(format!("edge {{{i},{j}}} is outside the graph"));
        }
        value[i - 1] += a as i64;
        value[j - 1] += a as i64;
    }
    if value != alpha {
        return Some(format!("value {value:?} differs from {alpha:?}"));
    }
    let q: BigRational = tracked.iter().map(|e| w.weights[e].clone()).sum();
    let got: u64 = tracked.iter().map(|e| out.integer_weights.get(e).copied().unwrap_or(0)).sum();
    if rat(got as i64) < q {
        return Some(format!("tracked total {got} is below {q}"));
    }
    if rat(got as i64) != out.tracked_sum {
        return Some(format!("reported tracked total {} differs from {got}", out.tracked_sum));
    }
    None
}
