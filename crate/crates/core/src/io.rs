//! JSON encodings of polytopes, graphs and edge weightings.
//!
//! Rationals travel as exact strings (`"4/3"`). Decoding errors name the
//! offending field by its JSON path.

use std::collections::BTreeMap;

use serde::de::DeserializeOwned;
use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::edge_polytope::EdgeWeighting;
use crate::exact::{format_rational, parse_rational};
use crate::graph::Graph;
use crate::polytope::{LatticePolytope, Point};
use crate::{Error, Result};

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct PolytopeJson {
    ambient_dim: usize,
    generators: Vec<Point>,
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct GraphJson {
    n: usize,
    edges: Vec<(usize, usize)>,
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct WeightingJson {
    graph: GraphJson,
    weights: Vec<((usize, usize), String)>,
}

fn decode<T: DeserializeOwned>(text: &str) -> Result<T> {
    let de = &mut serde_json::Deserializer::from_str(text);
    serde_path_to_error::deserialize(de).map_err(|e| {
        let path = e.path().to_string();
        let inner = e.into_inner();
        if inner.is_syntax() || inner.is_eof() {
            Error::Input(format!("malformed JSON: {inner}"))
        } else if path == "." {
            Error::Input(inner.to_string())
        } else {
            Error::Input(format!("field `{path}`: {inner}"))
        }
    })
}

fn field_error(field: &str, err: Error) -> Error {
    Error::Input(format!("field `{field}`: {err}"))
}

pub fn polytope_from_json(text: &str) -> Result<LatticePolytope> {
    let raw: PolytopeJson = decode(text)?;
    if raw.generators.is_empty() {
        return Err(field_error("generators", Error::EmptyPolytope));
    }
    for (i, g) in raw.generators.iter().enumerate() {
        if g.len() != raw.ambient_dim {
            return Err(field_error(
                &format!("generators[{i}]"),
                Error::DimensionMismatch {
                    expected: raw.ambient_dim,
                    found: g.len(),
                },
            ));
        }
    }
    LatticePolytope::new(raw.ambient_dim, raw.generators)
}

pub fn polytope_to_value(p: &LatticePolytope) -> Value {
    serde_json::to_value(PolytopeJson {
        ambient_dim: p.ambient_dim(),
        generators: p.generators().to_vec(),
    })
    .expect("serializable")
}

pub fn polytope_to_json(p: &LatticePolytope) -> String {
    polytope_to_value(p).to_string()
}

fn graph_from_raw(raw: GraphJson, prefix: &str) -> Result<Graph> {
    for (idx, &(i, j)) in raw.edges.iter().enumerate() {
        if let Err(e) = Graph::new(raw.n, [(i, j)]) {
            return Err(field_error(&format!("{prefix}edges[{idx}]"), e));
        }
    }
    Graph::new(raw.n, raw.edges).map_err(|e| field_error(&format!("{prefix}edges"), e))
}

pub fn graph_from_json(text: &str) -> Result<Graph> {
    graph_from_raw(decode(text)?, "")
}

fn graph_to_raw(g: &Graph) -> GraphJson {
    GraphJson {
        n: g.n(),
        edges: g.edges().iter().copied().collect(),
    }
}

pub fn graph_to_value(g: &Graph) -> Value {
    serde_json::to_value(graph_to_raw(g)).expect("serializable")
}

pub fn graph_to_json(g: &Graph) -> String {
    graph_to_value(g).to_string()
}

pub fn weighting_from_json(text: &str) -> Result<EdgeWeighting> {
    let raw: WeightingJson = decode(text)?;
    let graph = graph_from_raw(raw.graph, "graph.")?;
    let mut weights = BTreeMap::new();
    for (idx, ((i, j), s)) in raw.weights.iter().enumerate() {
        let q = parse_rational(s).ok_or_else(|| {
            Error::Input(format!("field `weights[{idx}][1]`: `{s}` is not an exact rational"))
        })?;
        if weights.insert(crate::graph::edge(*i, *j), q).is_some() {
            return Err(Error::Input(format!("field `weights[{idx}][0]`: edge {{{i},{j}}} repeats")));
        }
    }
    EdgeWeighting::new(graph, weights).map_err(|e| field_error("weights", e))
}

pub fn weighting_to_json(w: &EdgeWeighting) -> String {
    serde_json::to_string(&WeightingJson {
        graph: graph_to_raw(&w.graph),
        weights: w.weights.iter().map(|(&e, q)| (e, format_rational(q))).collect(),
    })
    .expect("serializable")
}
