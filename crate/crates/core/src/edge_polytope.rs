//! Edge polytopes of finite simple graphs and the constructive decomposition
//! of `P_{G1} + P_{G2}` when every two odd cycles of `G1` meet and `G2` is a
//! subgraph of `G1`.

use std::collections::{BTreeMap, BTreeSet};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::exact::{rat, rational_feasible};
use crate::graph::{graph_sum, Cycle, Edge, Graph};
use crate::polytope::{add, minkowski_sum, LatticePolytope, Point};
use crate::{Error, Result};

/// `e_i + e_j` in `Z^d` for the edge `{i, j}`.
pub fn rho(e: Edge, d: usize) -> Result<Point> {
    let (i, j) = e;
    if i == j {
        return Err(Error::InvalidGraph(format!("loop at vertex {i}")));
    }
    if i == 0 || j == 0 || i > d || j > d {
        return Err(Error::InvalidGraph(format!(
            "edge {{{i},{j}}} is outside the vertex range 1..={d}"
        )));
    }
    let mut p = vec![0; d];
    p[i - 1] = 1;
    p[j - 1] = 1;
    Ok(p)
}

fn rho_unchecked(e: Edge, d: usize) -> Point {
    let mut p = vec![0; d];
    p[e.0 - 1] += 1;
    p[e.1 - 1] += 1;
    p
}

/// `conv{rho(e) : e in E(g)}` in `Z^n`.
pub fn edge_polytope(g: &Graph) -> Result<LatticePolytope> {
    if g.edge_count() == 0 {
        return Err(Error::InvalidGraph("the edge polytope of an edgeless graph is empty".into()));
    }
    LatticePolytope::new(g.n(), g.edges().iter().map(|&e| rho_unchecked(e, g.n())).collect())
}

fn bipartite_dimension(n: usize, bipartite: bool) -> usize {
    if bipartite {
        n - 2
    } else {
        n - 1
    }
}

/// Dimension of the edge polytope of a connected graph with at least one
/// edge: `n - 2` if bipartite, `n - 1` otherwise.
pub fn dim_formula(g: &Graph) -> Result<usize> {
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    if g.edge_count() == 0 {
        return Err(Error::InvalidGraph("graph has no edges".into()));
    }
    Ok(bipartite_dimension(g.n(), g.is_bipartite()))
}

/// Dimension of `P_{G1} + ... + P_{Gm}` for connected graphs on a common
/// vertex set, read off the bipartiteness of their edge union.
pub fn dim_formula_sum(gs: &[Graph]) -> Result<usize> {
    let union = graph_sum(gs)?;
    for g in gs {
        if g.edge_count() == 0 {
            return Err(Error::InvalidGraph("graph has no edges".into()));
        }
        if !g.is_connected() {
            return Err(Error::Disconnected);
        }
    }
    Ok(bipartite_dimension(union.n(), union.is_bipartite()))
}

/// Minkowski sum of the edge polytopes of `gs`.
pub fn edge_polytope_sum(gs: &[Graph]) -> Result<LatticePolytope> {
    let ps = gs.iter().map(edge_polytope).collect::<Result<Vec<_>>>()?;
    minkowski_sum(&ps)
}

/// Nonnegative rational weights on edges of a graph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EdgeWeighting {
    pub graph: Graph,
    pub weights: BTreeMap<Edge, BigRational>,
}

impl EdgeWeighting {
    pub fn new(graph: Graph, weights: BTreeMap<Edge, BigRational>) -> Result<Self> {
        for (&(i, j), w) in &weights {
            if !graph.has_edge(i, j) {
                return Err(Error::InvalidGraph(format!("weighted edge {{{i},{j}}} is not in the graph")));
            }
            if w.is_negative() {
                return Err(Error::Precondition(format!("weight on {{{i},{j}}} is negative")));
            }
        }
        Ok(EdgeWeighting { graph, weights })
    }

    /// `sum_e w_e * rho(e)`.
    pub fn value(&self) -> Vec<BigRational> {
        let mut v = vec![BigRational::zero(); self.graph.n()];
        for (&(i, j), w) in &self.weights {
            v[i - 1] += w;
            v[j - 1] += w;
        }
        v
    }

    /// `sum_e w_e`.
    pub fn degree(&self) -> BigRational {
        self.weights.values().fold(BigRational::zero(), |acc, w| acc + w)
    }

    /// The value as an integer point, if it is one.
    pub fn integer_value(&self) -> Option<Point> {
        self.value()
            .iter()
            .map(|x| if x.is_integer() { x.to_integer().to_i64() } else { None })
            .collect()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RewriteResult {
    /// Positive integer weights only.
    pub integer_weights: BTreeMap<Edge, u64>,
    /// Total integer weight on the tracked edges.
    pub tracked_sum: BigRational,
}

impl RewriteResult {
    pub fn value(&self, d: usize) -> Point {
        let mut v = vec![0; d];
        for (&(i, j), &a) in &self.integer_weights {
            v[i - 1] += a as i64;
            v[j - 1] += a as i64;
        }
        v
    }
}

fn to_u64(x: &BigInt) -> Result<u64> {
    x.to_u64()
        .ok_or_else(|| Error::Input(format!("weight {x} does not fit in 64 bits")))
}

/// Moves the integer part of every weight into `a`, leaving `r` in `[0, 1)`.
fn extract_integer_parts(r: &mut BTreeMap<Edge, BigRational>, a: &mut BTreeMap<Edge, u64>) -> Result<()> {
    for (e, w) in r.iter_mut() {
        let fl = w.floor();
        if !fl.is_zero() {
            *a.entry(*e).or_default() += to_u64(&fl.to_integer())?;
            *w -= fl;
        }
    }
    Ok(())
}

/// Rewrites an integer point given as a fractional edge combination on `g`
/// into a nonnegative integer edge combination, keeping at least as much
/// total weight on `tracked` as the input carried there.
///
/// Each round picks a closed even walk in the fractional support `H`: an
/// even cycle if `H` has one, otherwise two odd cycles through a common
/// vertex. Weight `eps` is pushed from one alternating class of its edges to
/// the other, the receiving class being the one with more tracked edges, so
/// at least one edge leaves `H`. Weights reaching one are moved into the
/// integer part.
pub fn lemma35_rewrite(g: &Graph, r: &EdgeWeighting, tracked: &BTreeSet<Edge>) -> Result<RewriteResult> {
    if r.graph.n() != g.n() {
        return Err(Error::VertexCountMismatch(r.graph.n(), g.n()));
    }
    if !g.common_vertex_condition()? {
        return Err(Error::Precondition("two odd cycles of the graph are vertex-disjoint".into()));
    }
    if r.weights.is_empty() {
        return Err(Error::Precondition("the weighting is empty".into()));
    }
    for (&(i, j), w) in &r.weights {
        if !g.has_edge(i, j) {
            return Err(Error::Precondition(format!("weighted edge {{{i},{j}}} is not in the graph")));
        }
        if !w.is_positive() {
            return Err(Error::Precondition(format!("weight on {{{i},{j}}} is not positive")));
        }
    }
    if let Some(&(i, j)) = tracked.iter().find(|e| !r.weights.contains_key(e)) {
        return Err(Error::Precondition(format!("tracked edge {{{i},{j}}} carries no weight")));
    }
    let Some(target) = r.integer_value() else {
        return Err(Error::Precondition("the weighted sum is not an integer point".into()));
    };
    let q_tracked = tracked.iter().fold(BigRational::zero(), |acc, e| acc + &r.weights[e]);

    let mut a: BTreeMap<Edge, u64> = r.weights.keys().map(|&e| (e, 0)).collect();
    let mut w = r.weights.clone();
    extract_integer_parts(&mut w, &mut a)?;
    w.retain(|_, x| !x.is_zero());

    while !w.is_empty() {
        let before = w.len();
        let support = Graph::new(g.n(), w.keys().copied())?;
        for v in support.support() {
            if support.degree(v) < 2 {
                return Err(Error::Internal(format!(
                    "vertex {v} meets a single fractional edge"
                )));
            }
        }
        let (l1, l2) = alternating_classes(&support)?;
        let m1 = l1.iter().filter(|e| tracked.contains(e)).count();
        let m2 = l2.iter().filter(|e| tracked.contains(e)).count();
        let (plus, minus) = if m1 >= m2 { (l1, l2) } else { (l2, l1) };
        let eps = minus
            .iter()
            .map(|e| w[e].clone())
            .min()
            .expect("alternating classes are nonempty");
        for e in &minus {
            let x = w.get_mut(e).unwrap();
            *x -= &eps;
        }
        for e in &plus {
            let x = w.get_mut(e).unwrap();
            *x += &eps;
            if *x >= BigRational::one() {
                *x -= BigRational::one();
                *a.get_mut(e).unwrap() += 1;
            }
        }
        w.retain(|_, x| !x.is_zero());
        if w.len() >= before {
            return Err(Error::Internal("a rewriting round kept every fractional edge".into()));
        }
    }

    let tracked_sum = rat(tracked.iter().map(|e| a[e] as i64).sum());
    a.retain(|_, c| *c > 0);
    let result = RewriteResult {
        integer_weights: a,
        tracked_sum,
    };
    if result.value(g.n()) != target {
        return Err(Error::Internal("rewriting changed the weighted sum".into()));
    }
    if result.tracked_sum < q_tracked {
        return Err(Error::Internal("rewriting lost weight on tracked edges".into()));
    }
    Ok(result)
}

/// Splits the edges of a closed even walk in `h` into its two alternating
/// classes.
fn alternating_classes(h: &Graph) -> Result<(Vec<Edge>, Vec<Edge>)> {
    if let Some(c) = h.find_even_cycle() {
        let edges = c.edges();
        let l1 = edges.iter().step_by(2).copied().collect();
        let l2 = edges.iter().skip(1).step_by(2).copied().collect();
        return Ok((l1, l2));
    }
    let blocks = h.two_connected_components();
    for b in &blocks {
        let odd_cycle = b.edge_count() >= 3 && b.edge_count() % 2 == 1 && b.support().len() == b.edge_count();
        if !odd_cycle {
            return Err(Error::Internal(
                "a 2-connected component of the fractional support is not an odd cycle".into(),
            ));
        }
    }
    if blocks.len() < 2 {
        return Err(Error::Internal("the fractional support is a single odd cycle".into()));
    }
    let cycles = h.induced_odd_cycles();
    let (c, c2, v) = first_meeting_pair(&cycles)
        .ok_or_else(|| Error::Internal("no two odd cycles of the fractional support meet".into()))?;
    let walk = |cycle: &Cycle| -> Vec<Edge> {
        let vs = cycle.starting_at(v).unwrap();
        let k = vs.len();
        (0..k).map(|i| crate::graph::edge(vs[i], vs[(i + 1) % k])).collect()
    };
    let (e, f) = (walk(c), walk(c2));
    let mut l1: Vec<Edge> = e.iter().step_by(2).copied().collect();
    l1.extend(f.iter().skip(1).step_by(2));
    let mut l2: Vec<Edge> = e.iter().skip(1).step_by(2).copied().collect();
    l2.extend(f.iter().step_by(2));
    Ok((l1, l2))
}

fn first_meeting_pair(cycles: &[Cycle]) -> Option<(&Cycle, &Cycle, usize)> {
    for (i, c) in cycles.iter().enumerate() {
        for c2 in &cycles[i + 1..] {
            let shared: Vec<usize> = c.vertices().iter().copied().filter(|&v| c2.contains(v)).collect();
            if let [v] = shared[..] {
                return Some((c, c2, v));
            }
        }
    }
    None
}

/// One summand `rho(e1) + rho(e2)` with `e1` in `G1` and `e2` in `G2`.
pub type EdgePair = (Edge, Edge);

/// Splits `alpha` in `k (P_{G1} + P_{G2})` into `k` lattice points of
/// `P_{G1} + P_{G2}`, returned as edge pairs.
pub fn theorem34_edge_pairs(g1: &Graph, g2: &Graph, alpha: &[i64], k: usize) -> Result<Vec<EdgePair>> {
    let d = g1.n();
    if g2.n() != d {
        return Err(Error::VertexCountMismatch(d, g2.n()));
    }
    if alpha.len() != d {
        return Err(Error::DimensionMismatch {
            expected: d,
            found: alpha.len(),
        });
    }
    if k == 0 {
        return Err(Error::Precondition("k must be positive".into()));
    }
    if g1.edge_count() == 0 || g2.edge_count() == 0 {
        return Err(Error::InvalidGraph("both graphs need at least one edge".into()));
    }
    if !g1.common_vertex_condition()? {
        return Err(Error::Precondition("two odd cycles of the first graph are vertex-disjoint".into()));
    }
    if !g2.is_subgraph_of(g1)? {
        return Err(Error::Precondition("the second graph is not a subgraph of the first".into()));
    }

    let (mut r, mut r2) = real_expression(g1, g2, alpha, k)?;

    // Shift fractional parts of edges fractional on both sides to the second.
    for (e, x) in r.iter_mut() {
        if let Some(y) = r2.get_mut(e) {
            if !x.is_integer() && !y.is_integer() {
                let fl = x.floor();
                *y += &*x - &fl;
                *x = fl;
            }
        }
    }

    let mut b: BTreeMap<Edge, u64> = BTreeMap::new();
    let mut b2: BTreeMap<Edge, u64> = BTreeMap::new();
    extract_integer_parts(&mut r, &mut b)?;
    extract_integer_parts(&mut r2, &mut b2)?;
    r.retain(|_, x| !x.is_zero());
    r2.retain(|_, x| !x.is_zero());

    let tracked: BTreeSet<Edge> = r2.keys().copied().collect();
    if !(r.is_empty() && r2.is_empty()) {
        let mut frac = r.clone();
        for (e, y) in &r2 {
            if frac.insert(*e, y.clone()).is_some() {
                return Err(Error::Internal(format!("edge {e:?} is fractional on both sides")));
            }
        }
        let rewrite = lemma35_rewrite(g1, &EdgeWeighting::new(g1.clone(), frac)?, &tracked)?;
        for (e, a) in rewrite.integer_weights {
            let side = if tracked.contains(&e) { &mut b2 } else { &mut b };
            *side.entry(e).or_default() += a;
        }
    }

    let total1: u64 = b.values().sum();
    let total2: u64 = b2.values().sum();
    let k64 = k as u64;
    if total1 + total2 != 2 * k64 || total1 > k64 {
        return Err(Error::Internal(format!(
            "integer weights split as {total1} + {total2} instead of at most {k64} + at least {k64}"
        )));
    }
    // Every edge of G2 is an edge of G1, so surplus units may change sides.
    let mut surplus = total2 - k64;
    let order: Vec<Edge> = tracked.iter().copied().chain(g2.edges().iter().copied()).collect();
    for e in order {
        while surplus > 0 && b2.get(&e).copied().unwrap_or(0) > 0 {
            *b2.get_mut(&e).unwrap() -= 1;
            *b.entry(e).or_default() += 1;
            surplus -= 1;
        }
    }

    let units = |m: &BTreeMap<Edge, u64>| -> Vec<Edge> {
        m.iter().flat_map(|(&e, &c)| std::iter::repeat_n(e, c as usize)).collect()
    };
    let pairs: Vec<EdgePair> = units(&b).into_iter().zip(units(&b2)).collect();
    let total = pairs
        .iter()
        .fold(vec![0; d], |acc, &(e, f)| add(&acc, &add(&rho_unchecked(e, d), &rho_unchecked(f, d))));
    if pairs.len() != k || total != alpha {
        return Err(Error::Internal("the assembled parts do not sum to alpha".into()));
    }
    Ok(pairs)
}

/// Splits `alpha` in `k (P_{G1} + P_{G2})` into `k` lattice points of
/// `P_{G1} + P_{G2}`.
pub fn theorem34_decompose(g1: &Graph, g2: &Graph, alpha: &[i64], k: usize) -> Result<Vec<Point>> {
    let d = g1.n();
    Ok(theorem34_edge_pairs(g1, g2, alpha, k)?
        .into_iter()
        .map(|(e, f)| add(&rho_unchecked(e, d), &rho_unchecked(f, d)))
        .collect())
}

type Weights = BTreeMap<Edge, BigRational>;

/// A basic solution of `sum r_e rho(e) + sum r'_e rho(e) = alpha` with both
/// weight totals equal to `k`.
fn real_expression(g1: &Graph, g2: &Graph, alpha: &[i64], k: usize) -> Result<(Weights, Weights)> {
    let d = g1.n();
    let e1: Vec<Edge> = g1.edges().iter().copied().collect();
    let e2: Vec<Edge> = g2.edges().iter().copied().collect();
    let cols = e1.len() + e2.len();
    let mut a = vec![vec![BigRational::zero(); cols]; d + 2];
    for (c, &(i, j)) in e1.iter().chain(&e2).enumerate() {
        a[i - 1][c] = BigRational::one();
        a[j - 1][c] = BigRational::one();
        let side = if c < e1.len() { d } else { d + 1 };
        a[side][c] = BigRational::one();
    }
    let mut b: Vec<BigRational> = alpha.iter().map(|&x| rat(x)).collect();
    b.push(rat(k as i64));
    b.push(rat(k as i64));
    let x = rational_feasible(&a, &b, false)
        .ok_or_else(|| Error::Precondition(format!("alpha is not a point of {k}(P_G1 + P_G2)")))?;
    let r = e1.iter().copied().zip(x[..e1.len()].iter().cloned()).collect();
    let r2 = e2.iter().copied().zip(x[e1.len()..].iter().cloned()).collect();
    Ok((r, r2))
}
