//! The reproduction suite behind `verify-paper`: every worked example and
//! counterexample, plus seeded randomized checks of each general statement
//! at desk scale.
//!
//! A report depends only on its [`RunConfig`]; each check draws from its own
//! PRNG stream keyed by the seed and the check id.

use std::collections::{BTreeMap, BTreeSet};

use num_rational::BigRational;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::edge_polytope::{
    dim_formula, dim_formula_sum, edge_polytope, edge_polytope_sum, theorem34_edge_pairs, EdgeWeighting,
};
use crate::exact::{format_rational, parse_rational, rat};
use crate::graph::{connected_graphs, edge, Edge, Graph};
use crate::io::graph_from_json;
use crate::polytope::{add, minkowski_sum, relint_split, scaled_sum, to_rational, LatticePolytope, Point};
use crate::semigroup::{
    caratheodory_decompose, decompose, idp_check, k_fold_sumset, level_check, normal_check, verify_lemma25a, verify_lemma25b,
    CheckReport,
};
use crate::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RunConfig {
    pub max_k: usize,
    pub random_seed: u64,
    pub sample_count: usize,
    pub dim_cap: usize,
}

impl Default for RunConfig {
    fn default() -> Self {
        RunConfig {
            max_k: 3,
            random_seed: 0,
            sample_count: 20,
            dim_cap: 8,
        }
    }
}

impl RunConfig {
    pub fn validate(&self) -> Result<()> {
        if self.max_k < 2 {
            return Err(Error::Precondition(format!("max_k must be at least 2, got {}", self.max_k)));
        }
        if self.sample_count == 0 {
            return Err(Error::Precondition("sample_count must be positive".into()));
        }
        if self.dim_cap < 3 {
            return Err(Error::Precondition(format!("dim_cap must be at least 3, got {}", self.dim_cap)));
        }
        Ok(())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum CheckStatus {
    Pass,
    Fail,
    Skipped(String),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PaperCheck {
    pub id: String,
    pub status: CheckStatus,
    pub details: String,
    /// Machine-checkable data behind the verdict: the failing instance for
    /// a FAIL, the certified non-decomposable point for a counterexample.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Value>,
}

impl PaperCheck {
    fn new(id: &str, ok: bool, details: String, witness: Option<Value>) -> Self {
        PaperCheck {
            id: id.to_string(),
            status: if ok { CheckStatus::Pass } else { CheckStatus::Fail },
            details,
            witness,
        }
    }

    fn from_result(id: &str, r: Result<Outcome>) -> Self {
        match r {
            Ok(o) => PaperCheck::new(id, o.ok, o.details, o.witness),
            Err(e) => PaperCheck::new(id, false, format!("error: {e}"), None),
        }
    }
}

struct Outcome {
    ok: bool,
    details: String,
    witness: Option<Value>,
}

impl Outcome {
    fn pass(details: String) -> Self {
        Outcome { ok: true, details, witness: None }
    }

    fn with(ok: bool, details: String, witness: Value) -> Self {
        Outcome {
            ok,
            details,
            witness: Some(witness),
        }
    }
}

/// Check ids in report order.
pub const CHECK_IDS: [&str; 20] = [
    "example-1.3",
    "remark-2.6-n1",
    "remark-2.6-n2",
    "prop-2.1-random",
    "cor-2.2-random",
    "lemma-2.4-random",
    "lemma-2.5a",
    "lemma-2.5b",
    "thm-2.3a-random",
    "thm-2.3a-random-plus1",
    "thm-2.3b-random",
    "prop-3.1-random",
    "prop-3.2-random",
    "thm-3.3-sweep",
    "thm-3.4-random",
    "example-3.7a",
    "example-3.7b",
    "example-3.7c",
    "example-3.7b-polytope",
    "remark-3.6",
];

/// Runs every check in report order.
pub fn verify_paper(config: &RunConfig) -> Result<Vec<PaperCheck>> {
    config.validate()?;
    CHECK_IDS.iter().map(|id| run_check(config, id)).collect()
}

/// Runs the single check `id`.
pub fn run_check(config: &RunConfig, id: &str) -> Result<PaperCheck> {
    config.validate()?;
    let rng = &mut stream(config.random_seed, id);
    let outcome = match id {
        "example-1.3" => check_triangle_plus_segment(config),
        "remark-2.6-n1" | "example-3.7b-polytope" => check_matching_sum(1),
        "remark-2.6-n2" => check_matching_sum(2),
        "prop-2.1-random" => check_dimension_invariance(config, rng),
        "cor-2.2-random" => check_scaled_dimension_invariance(config, rng),
        "lemma-2.4-random" => check_relint_sums(config, rng),
        "lemma-2.5a" => check_lattice_identity(config, rng, false),
        "lemma-2.5b" => check_lattice_identity(config, rng, true),
        "thm-2.3a-random" => check_idp_suite(config, rng, 0),
        "thm-2.3a-random-plus1" => check_idp_suite(config, rng, 1),
        "thm-2.3b-random" => check_level_suite(config, rng),
        "prop-3.1-random" => check_edge_dimension(config, rng),
        "prop-3.2-random" => check_edge_sum_dimension(config, rng),
        "thm-3.3-sweep" => check_odd_cycle_sweep(config.dim_cap.min(6)),
        "thm-3.4-random" => check_two_graph_suite(config, rng),
        "remark-3.6" => check_condition_strength(config, rng),
        other => match reconstructions()?.into_iter().find(|r| r.id == other) {
            Some(ex) => check_reconstruction(&ex),
            None => return Err(Error::Input(format!("unknown check id `{other}`"))),
        },
    };
    Ok(PaperCheck::from_result(id, outcome))
}

fn stream(seed: u64, id: &str) -> ChaCha8Rng {
    // FNV-1a of the id, mixed with the seed.
    let h = id
        .bytes()
        .fold(0xcbf29ce484222325u64, |h, b| (h ^ b as u64).wrapping_mul(0x100000001b3));
    ChaCha8Rng::seed_from_u64(h ^ seed.wrapping_mul(0x9e3779b97f4a7c15))
}

fn poly(gens: &[&[i64]]) -> LatticePolytope {
    LatticePolytope::new(gens[0].len(), gens.iter().map(|g| g.to_vec()).collect()).expect("valid generators")
}

/// The unimodular triangle and the segment to `(1, 1, 3)`.
pub fn triangle_and_segment() -> (LatticePolytope, LatticePolytope) {
    (
        poly(&[&[0, 0, 0], &[1, 0, 0], &[0, 1, 0]]),
        poly(&[&[0, 0, 0], &[1, 1, 3]]),
    )
}

/// Hulls of the two perfect matchings `{12, 34, 56}` and `{16, 23, 45}` of
/// the 6-cycle.
pub fn matching_polytopes() -> (LatticePolytope, LatticePolytope) {
    (
        poly(&[&[1, 1, 0, 0, 0, 0], &[0, 0, 1, 1, 0, 0], &[0, 0, 0, 0, 1, 1]]),
        poly(&[&[1, 0, 0, 0, 0, 1], &[0, 1, 1, 0, 0, 0], &[0, 0, 0, 1, 1, 0]]),
    )
}

fn point_json(p: &[i64]) -> Value {
    json!(p)
}

fn counterexample_witness(report: &CheckReport) -> Value {
    serde_json::to_value(report).expect("serializable")
}

/// A reported failure re-checked from scratch: the point lies in `kP` and the
/// exhaustive search finds no split.
fn recheck(p: &LatticePolytope, report: &CheckReport) -> bool {
    match &report.counterexample {
        Some(cx) => {
            p.dilate(cx.k as i64).map(|d| d.contains_point(&cx.alpha)).unwrap_or(false)
                && decompose(&cx.alpha, cx.k, p).is_none()
        }
        None => false,
    }
}

fn check_triangle_plus_segment(config: &RunConfig) -> Result<Outcome> {
    let (p1, p2) = triangle_and_segment();
    let p = minkowski_sum(&[p1, p2])?;
    let idp = idp_check(&p, config.max_k)?;
    let normal = normal_check(&p, config.max_k)?;
    let ok = !idp.holds_up_to_k() && !normal.holds_up_to_k() && recheck(&p, &idp) && recheck(&p, &normal);
    let cx = normal.counterexample.clone().or(idp.counterexample.clone());
    let details = match &cx {
        Some(c) => format!(
            "P1+P2 fails IDP and normality; k={} alpha={:?} lies in kP and in L(kP) with no split",
            c.k, c.alpha
        ),
        None => format!("no failure found up to k={}", config.max_k),
    };
    Ok(Outcome::with(
        ok,
        details,
        json!({"idp": counterexample_witness(&idp), "normal": counterexample_witness(&normal)}),
    ))
}

fn check_matching_sum(n: i64) -> Result<Outcome> {
    let (p1, p2) = matching_polytopes();
    let q = scaled_sum(&[p1.clone(), p2.clone()], &[n, 1])?;
    let alpha = vec![2 * n, 2 * n, 1, 1, 1, 1];
    // The rational certificate: block weights 2n and 2, summing to alpha.
    let third = |c: i64| BigRational::new(c.into(), 3.into());
    let v = p1.generators();
    let w = p2.generators();
    let mut combo = vec![rat(0); 6];
    let terms = [
        (&v[2], third(6 * n - 2)),
        (&v[1], third(1)),
        (&v[0], third(1)),
        (&w[0], third(2)),
        (&w[1], third(2)),
        (&w[2], third(2)),
    ];
    for (g, c) in &terms {
        for (acc, &x) in combo.iter_mut().zip(g.iter()) {
            *acc += c * rat(x);
        }
    }
    let certified = combo == to_rational(&alpha);
    let inside = q.dilate(2)?.contains_point(&alpha);
    let split = decompose(&alpha, 2, &q);
    let ok = certified && inside && split.is_none();
    let details = format!(
        "n={n}, dim P1 = dim P2 = {}: alpha={alpha:?}; rational certificate in 2Q: {certified}; in 2Q: {inside}; 2-part split: {}",
        p1.dimension(),
        match &split {
            Some(parts) => format!("{parts:?}"),
            None => "none".into(),
        }
    );
    Ok(Outcome::with(ok, details, json!({"k": 2, "alpha": alpha})))
}

fn random_polytope(rng: &mut ChaCha8Rng, ambient: usize, max_gens: usize, max_coord: i64) -> LatticePolytope {
    let count = rng.gen_range(1..=max_gens);
    let gens = (0..count)
        .map(|_| (0..ambient).map(|_| rng.gen_range(0..=max_coord)).collect())
        .collect();
    LatticePolytope::new(ambient, gens).expect("nonempty")
}

fn polytopes_json(ps: &[LatticePolytope]) -> Value {
    Value::Array(ps.iter().map(crate::io::polytope_to_value).collect())
}

fn check_dimension_invariance(config: &RunConfig, rng: &mut ChaCha8Rng) -> Result<Outcome> {
    for i in 0..config.sample_count {
        let n = rng.gen_range(1..=4);
        let p = random_polytope(rng, n, 5, 3);
        let q = random_polytope(rng, n, 5, 3);
        let l = rng.gen_range(2..=3);
        let lhs = minkowski_sum(&[p.clone(), q.clone()])?.dimension();
        let rhs = minkowski_sum(&[p.dilate(l)?, q.clone()])?.dimension();
        if lhs != rhs {
            return Ok(Outcome::with(
                false,
                format!("instance {i}: dim(P+P')={lhs} but dim({l}P+P')={rhs}"),
                json!({"polytopes": polytopes_json(&[p, q]), "l": l}),
            ));
        }
    }
    Ok(Outcome::pass(format!(
        "{} random pairs: dim(P+P') = dim(lP+P') for l in {{2,3}}",
        config.sample_count
    )))
}

fn check_scaled_dimension_invariance(config: &RunConfig, rng: &mut ChaCha8Rng) -> Result<Outcome> {
    for i in 0..config.sample_count {
        let n = rng.gen_range(1..=4);
        let m = rng.gen_range(1..=3);
        let ps: Vec<_> = (0..m).map(|_| random_polytope(rng, n, 5, 3)).collect();
        let ns: Vec<i64> = (0..m).map(|_| rng.gen_range(1..=3)).collect();
        let lhs = minkowski_sum(&ps)?.dimension();
        let rhs = scaled_sum(&ps, &ns)?.dimension();
        if lhs != rhs {
            return Ok(Outcome::with(
                false,
                format!("instance {i}: unscaled dimension {lhs}, scaled {rhs}"),
                json!({"polytopes": polytopes_json(&ps), "n": ns}),
            ));
        }
    }
    Ok(Outcome::pass(format!(
        "{} random families: dim(sum P_i) = dim(sum n_i P_i)",
        config.sample_count
    )))
}

/// A random point with strictly positive barycentric weights.
fn random_relint_point(rng: &mut ChaCha8Rng, p: &LatticePolytope) -> Vec<BigRational> {
    let weights: Vec<i64> = p.generators().iter().map(|_| rng.gen_range(1..=5)).collect();
    let total: i64 = weights.iter().sum();
    let mut x = vec![rat(0); p.ambient_dim()];
    for (g, &w) in p.generators().iter().zip(&weights) {
        for (acc, &c) in x.iter_mut().zip(g) {
            *acc += BigRational::new((w * c).into(), total.into());
        }
    }
    x
}

fn check_relint_sums(config: &RunConfig, rng: &mut ChaCha8Rng) -> Result<Outcome> {
    let mut interior_points = 0;
    for i in 0..config.sample_count {
        let n = rng.gen_range(1..=3);
        let p = random_polytope(rng, n, 4, 2);
        let q = random_polytope(rng, n, 4, 2);
        let sum = minkowski_sum(&[p.clone(), q.clone()])?;
        let x = random_relint_point(rng, &p);
        let y = random_relint_point(rng, &q);
        let z: Vec<BigRational> = x.iter().zip(&y).map(|(a, b)| a + b).collect();
        if !(p.relint_contains(&x) && q.relint_contains(&y) && sum.relint_contains(&z)) {
            return Ok(Outcome::with(
                false,
                format!("instance {i}: a sum of interior points left the interior"),
                json!({"polytopes": polytopes_json(&[p, q]), "x": x.iter().map(format_rational).collect::<Vec<_>>(),
                       "y": y.iter().map(format_rational).collect::<Vec<_>>()}),
            ));
        }
        for w in sum.relint_lattice_points() {
            interior_points += 1;
            let split = relint_split(&[p.clone(), q.clone()], &to_rational(&w));
            let valid = split.as_ref().is_some_and(|parts| {
                p.relint_contains(&parts[0])
                    && q.relint_contains(&parts[1])
                    && parts[0].iter().zip(&parts[1]).zip(&w).all(|((a, b), &c)| a + b == rat(c))
            });
            if !valid {
                return Ok(Outcome::with(
                    false,
                    format!("instance {i}: interior point {w:?} of P+Q has no interior split"),
                    json!({"polytopes": polytopes_json(&[p, q]), "point": w}),
                ));
            }
        }
    }
    Ok(Outcome::pass(format!(
        "{} random pairs: interior sums stay interior; {interior_points} interior lattice points split",
        config.sample_count
    )))
}

/// One or two random polytopes in `Z^3` with positive dimensions.
fn random_family(rng: &mut ChaCha8Rng, max_gens: usize, max_coord: i64) -> (Vec<LatticePolytope>, Vec<i64>) {
    let m = rng.gen_range(1..=2);
    let mut ps = Vec::with_capacity(m);
    while ps.len() < m {
        let p = random_polytope(rng, 3, max_gens, max_coord);
        if p.dimension() >= 1 {
            ps.push(p);
        }
    }
    let dims = ps.iter().map(|p| p.dimension() as i64).collect();
    (ps, dims)
}

fn check_lattice_identity(config: &RunConfig, rng: &mut ChaCha8Rng, interior: bool) -> Result<Outcome> {
    let count = config.sample_count.div_ceil(2).max(10);
    for i in 0..count {
        let (ps, dims) = random_family(rng, 3, 1);
        let slack = if interior { 2 } else { 1 };
        let ns: Vec<i64> = dims.iter().map(|d| d + slack).collect();
        let holds = if interior {
            verify_lemma25b(&ps, &ns)?
        } else {
            verify_lemma25a(&ps, &ns)?
        };
        if !holds {
            return Ok(Outcome::with(
                false,
                format!("instance {i}: set identity fails at n={ns:?}"),
                json!({"polytopes": polytopes_json(&ps), "n": ns}),
            ));
        }
    }
    let which = if interior { "interior" } else { "lattice-point" };
    Ok(Outcome::pass(format!(
        "{count} random families: {which} identity holds at n_i = d_i + {}",
        if interior { 2 } else { 1 }
    )))
}

fn check_idp_suite(config: &RunConfig, rng: &mut ChaCha8Rng, extra: i64) -> Result<Outcome> {
    let mut splits = 0;
    for i in 0..config.sample_count {
        let (ps, dims) = random_family(rng, 3, 2);
        let ns: Vec<i64> = dims.iter().map(|d| d + extra).collect();
        let q = scaled_sum(&ps, &ns)?;
        let report = idp_check(&q, config.max_k)?;
        if !report.holds_up_to_k() {
            return Ok(Outcome::with(
                false,
                format!("instance {i}: n={ns:?} fails IDP"),
                json!({"polytopes": polytopes_json(&ps), "n": ns, "report": counterexample_witness(&report)}),
            ));
        }
        for k in 2..=config.max_k {
            let points = q.dilate(k as i64)?.lattice_points();
            let alpha = points.choose(rng).expect("nonempty");
            let parts = caratheodory_decompose(&ps, &ns, alpha, k)?;
            let valid = parts.len() == k
                && parts.iter().fold(vec![0; 3], |acc, x| add(&acc, x)) == *alpha
                && parts.iter().all(|x| q.contains_point(x));
            if !valid {
                return Ok(Outcome::with(
                    false,
                    format!("instance {i}: constructive split of {alpha:?} at k={k} is invalid"),
                    json!({"polytopes": polytopes_json(&ps), "n": ns, "alpha": alpha, "parts": parts}),
                ));
            }
            splits += 1;
        }
    }
    Ok(Outcome::pass(format!(
        "{} random families at n_i = d_i + {extra}: IDP holds up to k={}; {splits} constructive splits re-validated",
        config.sample_count, config.max_k
    )))
}

fn check_level_suite(config: &RunConfig, rng: &mut ChaCha8Rng) -> Result<Outcome> {
    for i in 0..config.sample_count {
        let (ps, dims) = random_family(rng, 3, 2);
        let ns: Vec<i64> = dims.iter().map(|d| d + 1).collect();
        let report = level_check(&ps, &ns, config.max_k)?;
        if !report.holds_up_to_k() {
            return Ok(Outcome::with(
                false,
                format!("instance {i}: n={ns:?} fails the interior split"),
                json!({"polytopes": polytopes_json(&ps), "n": ns, "report": counterexample_witness(&report)}),
            ));
        }
    }
    Ok(Outcome::pass(format!(
        "{} random families at n_i = d_i + 1: interior splits hold up to k={}",
        config.sample_count, config.max_k
    )))
}

/// A uniformly random labeled tree plus each remaining pair with
/// probability `extra`.
pub fn random_connected_graph(rng: &mut ChaCha8Rng, n: usize, extra: f64) -> Graph {
    let mut order: Vec<usize> = (1..=n).collect();
    order.shuffle(rng);
    let mut edges: BTreeSet<Edge> = BTreeSet::new();
    for i in 1..n {
        let parent = order[rng.gen_range(0..i)];
        edges.insert(edge(order[i], parent));
    }
    for i in 1..=n {
        for j in i + 1..=n {
            if rng.gen_bool(extra) {
                edges.insert((i, j));
            }
        }
    }
    Graph::new(n, edges).expect("simple graph")
}

fn graph_json(g: &Graph) -> Value {
    crate::io::graph_to_value(g)
}

fn check_edge_dimension(config: &RunConfig, rng: &mut ChaCha8Rng) -> Result<Outcome> {
    let count = config.sample_count.max(30);
    for i in 0..count {
        let n = rng.gen_range(2..=config.dim_cap);
        let density = rng.gen_range(0.0..0.5);
        let g = random_connected_graph(rng, n, density);
        let formula = dim_formula(&g)?;
        let actual = edge_polytope(&g)?.dimension();
        if formula != actual {
            return Ok(Outcome::with(
                false,
                format!("graph {i}: formula {formula}, rank {actual}"),
                graph_json(&g),
            ));
        }
    }
    Ok(Outcome::pass(format!(
        "{count} random connected graphs on at most {} vertices: formula matches rank",
        config.dim_cap
    )))
}

fn check_edge_sum_dimension(config: &RunConfig, rng: &mut ChaCha8Rng) -> Result<Outcome> {
    let count = config.sample_count.max(10);
    for i in 0..count {
        let n = rng.gen_range(2..=config.dim_cap);
        let m = rng.gen_range(2..=3);
        let gs: Vec<Graph> = (0..m)
            .map(|_| {
                let density = rng.gen_range(0.0..0.3);
                random_connected_graph(rng, n, density)
            })
            .collect();
        let formula = dim_formula_sum(&gs)?;
        let actual = edge_polytope_sum(&gs)?.dimension();
        if formula != actual {
            return Ok(Outcome::with(
                false,
                format!("family {i}: formula {formula}, rank {actual}"),
                Value::Array(gs.iter().map(graph_json).collect()),
            ));
        }
    }
    Ok(Outcome::pass(format!(
        "{count} random families of 2-3 connected graphs: formula matches rank"
    )))
}

fn check_odd_cycle_sweep(max_n: usize) -> Result<Outcome> {
    let mut tally = BTreeMap::new();
    for n in 2..=max_n {
        let graphs = connected_graphs(n);
        for g in &graphs {
            let occ = g.odd_cycle_condition()?;
            let report = idp_check(&edge_polytope(g)?, (n - 1).max(2))?;
            if occ != report.holds_up_to_k() {
                return Ok(Outcome::with(
                    false,
                    format!("graph on {n} vertices: odd cycle condition {occ}, IDP up to k={} {}", (n - 1).max(2), report.holds_up_to_k()),
                    json!({"graph": graph_json(g), "report": counterexample_witness(&report)}),
                ));
            }
        }
        tally.insert(n, graphs.len());
    }
    let total: usize = tally.values().sum();
    Ok(Outcome::pass(format!(
        "{total} connected graphs up to isomorphism on 2..={max_n} vertices {tally:?}: odd cycle condition agrees with IDP up to k=max(2,d-1)"
    )))
}

/// A connected graph on `n` vertices in which every two odd cycles meet.
pub fn random_common_vertex_graph(rng: &mut ChaCha8Rng, n: usize) -> Graph {
    loop {
        let g = random_connected_graph(rng, n, 0.25);
        if g.common_vertex_condition().unwrap_or(false) {
            return g;
        }
    }
}

/// A random nonempty spanning subgraph of `g`.
pub fn random_subgraph(rng: &mut ChaCha8Rng, g: &Graph) -> Graph {
    let edges: Vec<Edge> = g.edges().iter().copied().collect();
    loop {
        let keep: Vec<Edge> = edges.iter().copied().filter(|_| rng.gen_bool(0.5)).collect();
        if !keep.is_empty() {
            return Graph::new(g.n(), keep).expect("subgraph");
        }
    }
}

/// Checks the constructive split of every lattice point of `kP` for
/// `k = 2..=max_k`; returns the number of points split.
pub fn validate_two_graph_splits(g1: &Graph, g2: &Graph, max_k: usize) -> Result<std::result::Result<usize, (usize, Point)>> {
    let p = edge_polytope_sum(&[g1.clone(), g2.clone()])?;
    let d = g1.n();
    let mut count = 0;
    for k in 2..=max_k {
        for alpha in p.dilate(k as i64)?.lattice_points() {
            let pairs = match theorem34_edge_pairs(g1, g2, &alpha, k) {
                Ok(pairs) => pairs,
                Err(_) => return Ok(Err((k, alpha))),
            };
            let mut total = vec![0; d];
            for &((a, b), (c, e)) in &pairs {
                total[a - 1] += 1;
                total[b - 1] += 1;
                total[c - 1] += 1;
                total[e - 1] += 1;
            }
            let valid = pairs.len() == k
                && total == alpha
                && pairs.iter().all(|(e, f)| g1.has_edge(e.0, e.1) && g2.has_edge(f.0, f.1));
            if !valid {
                return Ok(Err((k, alpha)));
            }
            count += 1;
        }
    }
    Ok(Ok(count))
}

fn check_two_graph_suite(config: &RunConfig, rng: &mut ChaCha8Rng) -> Result<Outcome> {
    let mut splits = 0;
    let top = config.dim_cap.min(6);
    for i in 0..config.sample_count {
        let n = rng.gen_range(3..=top);
        let g1 = random_common_vertex_graph(rng, n);
        let g2 = random_subgraph(rng, &g1);
        let p = edge_polytope_sum(&[g1.clone(), g2.clone()])?;
        let witness = json!({"g1": graph_json(&g1), "g2": graph_json(&g2)});
        let report = idp_check(&p, config.max_k)?;
        if !report.holds_up_to_k() {
            return Ok(Outcome::with(
                false,
                format!("pair {i}: IDP fails"),
                json!({"graphs": witness, "report": counterexample_witness(&report)}),
            ));
        }
        match validate_two_graph_splits(&g1, &g2, config.max_k)? {
            Ok(c) => splits += c,
            Err((k, alpha)) => {
                return Ok(Outcome::with(
                    false,
                    format!("pair {i}: constructive split failed for k={k} alpha={alpha:?}"),
                    json!({"graphs": witness, "k": k, "alpha": alpha}),
                ))
            }
        }
    }
    Ok(Outcome::pass(format!(
        "{} random pairs on 3..={top} vertices: IDP up to k={}; {splits} constructive splits re-validated",
        config.sample_count, config.max_k
    )))
}

#[derive(Debug, Deserialize)]
struct ReconstructionFile {
    examples: Vec<RawReconstruction>,
}

#[derive(Debug, Deserialize)]
struct RawReconstruction {
    id: String,
    graphs: Vec<Value>,
    weights: Vec<Vec<((usize, usize), String)>>,
    alpha: Point,
    k: usize,
}

/// Graph families with a displayed combination and a point of `kP` that
/// does not split, where `P` is the sum of their edge polytopes.
#[derive(Clone, Debug)]
pub struct Reconstruction {
    pub id: String,
    pub graphs: Vec<Graph>,
    pub weights: Vec<EdgeWeighting>,
    pub alpha: Point,
    pub k: usize,
}

const RECONSTRUCTIONS: &str = include_str!("../data/reconstructions.json");

pub fn reconstructions() -> Result<Vec<Reconstruction>> {
    let file: ReconstructionFile =
        serde_json::from_str(RECONSTRUCTIONS).map_err(|e| Error::Input(format!("reconstruction data: {e}")))?;
    file.examples
        .into_iter()
        .map(|raw| {
            let graphs = raw
                .graphs
                .iter()
                .map(|v| graph_from_json(&v.to_string()))
                .collect::<Result<Vec<_>>>()?;
            let weights = graphs
                .iter()
                .zip(&raw.weights)
                .map(|(g, ws)| {
                    let map = ws
                        .iter()
                        .map(|&((i, j), ref s)| {
                            let q = parse_rational(s).ok_or_else(|| Error::Input(format!("bad rational {s}")))?;
                            Ok((edge(i, j), q))
                        })
                        .collect::<Result<BTreeMap<_, _>>>()?;
                    EdgeWeighting::new(g.clone(), map)
                })
                .collect::<Result<Vec<_>>>()?;
            Ok(Reconstruction {
                id: raw.id,
                graphs,
                weights,
                alpha: raw.alpha,
                k: raw.k,
            })
        })
        .collect()
}

fn check_reconstruction(ex: &Reconstruction) -> Result<Outcome> {
    let d = ex.alpha.len();
    let k = rat(ex.k as i64);
    let mut value = vec![rat(0); d];
    let mut degrees_ok = true;
    for w in &ex.weights {
        for (acc, x) in value.iter_mut().zip(w.value()) {
            *acc += x;
        }
        degrees_ok &= w.degree() == k;
    }
    let combination_ok = degrees_ok && value == to_rational(&ex.alpha);
    let p = edge_polytope_sum(&ex.graphs)?;
    let inside = p.dilate(ex.k as i64)?.contains_point(&ex.alpha);
    let split = decompose(&ex.alpha, ex.k, &p);

    let mut hypotheses = Vec::new();
    let g1 = &ex.graphs[0];
    hypotheses.push(format!("G1 connected: {}", g1.is_connected()));
    hypotheses.push(format!("G1 odd cycle condition: {}", g1.odd_cycle_condition()?));
    hypotheses.push(format!("G1 odd cycles pairwise meet: {}", g1.common_vertex_condition()?));
    for (i, g) in ex.graphs.iter().enumerate().skip(1) {
        hypotheses.push(format!("G{} subgraph of G1: {}", i + 1, g.is_subgraph_of(g1)?));
        if g.is_connected() {
            hypotheses.push(format!("G{} odd cycles pairwise meet: {}", i + 1, g.common_vertex_condition()?));
        }
    }
    if ex.graphs.len() == 3 {
        hypotheses.push(format!("G3 subgraph of G2: {}", ex.graphs[2].is_subgraph_of(&ex.graphs[1])?));
    }
    // k-fold generator sums are lattice points of kP, so they span a sublattice of L(kP).
    let sums: Vec<Point> = k_fold_sumset(p.generators(), ex.k).into_iter().collect();
    let in_lattice = crate::polytope::AffineLattice::from_points(&sums)?.contains(&ex.alpha);
    let ok = combination_ok && inside && in_lattice && split.is_none();
    Ok(Outcome::with(
        ok,
        format!(
            "reconstruction; displayed combination evaluates to alpha: {combination_ok}; alpha={:?} in {}P: {inside}; in the lattice of {}-fold generator sums: {in_lattice}; {}-part split: {}; {}",
            ex.alpha,
            ex.k,
            ex.k,
            ex.k,
            if split.is_none() { "none" } else { "found" },
            hypotheses.join(", ")
        ),
        json!({
            "graphs": ex.graphs.iter().map(graph_json).collect::<Vec<_>>(),
            "k": ex.k,
            "alpha": point_json(&ex.alpha),
        }),
    ))
}

fn check_condition_strength(config: &RunConfig, rng: &mut ChaCha8Rng) -> Result<Outcome> {
    let count = config.sample_count.max(50);
    for i in 0..count {
        let n = rng.gen_range(3..=config.dim_cap);
        let density = rng.gen_range(0.0..0.5);
        let g = random_connected_graph(rng, n, density);
        if g.common_vertex_condition()? && !g.odd_cycle_condition()? {
            return Ok(Outcome::with(
                false,
                format!("graph {i}: odd cycles pairwise meet but the odd cycle condition fails"),
                graph_json(&g),
            ));
        }
    }
    let bridged = Graph::new(6, [(1, 2), (2, 3), (1, 3), (4, 5), (5, 6), (4, 6), (3, 4)])?;
    let separates = bridged.odd_cycle_condition()? && !bridged.common_vertex_condition()?;
    Ok(Outcome::with(
        separates,
        format!(
            "{count} random connected graphs: meeting odd cycles imply the odd cycle condition; two bridged triangles satisfy only the latter: {separates}"
        ),
        graph_json(&bridged),
    ))
}

/// Plain-text table of a report; `color` wraps statuses in ANSI codes.
pub fn render_table(config: &RunConfig, checks: &[PaperCheck], color: bool) -> String {
    let mut out = format!(
        "seed={} max_k={} sample_count={} dim_cap={}\n",
        config.random_seed, config.max_k, config.sample_count, config.dim_cap
    );
    let width = checks.iter().map(|c| c.id.len()).max().unwrap_or(0);
    for c in checks {
        let (label, code) = match &c.status {
            CheckStatus::Pass => ("PASS".to_string(), "32"),
            CheckStatus::Fail => ("FAIL".to_string(), "31"),
            CheckStatus::Skipped(reason) => (format!("SKIPPED({reason})"), "33"),
        };
        let label = if color {
            format!("\x1b[{code}m{label}\x1b[0m")
        } else {
            label
        };
        out.push_str(&format!("{:<width$}  {label}  {}\n", c.id, c.details));
    }
    let failed = checks.iter().filter(|c| c.status == CheckStatus::Fail).count();
    out.push_str(&format!("{} checks, {failed} failed\n", checks.len()));
    out
}

pub fn all_passed(checks: &[PaperCheck]) -> bool {
    checks.iter().all(|c| c.status != CheckStatus::Fail)
}
