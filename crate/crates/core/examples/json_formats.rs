//! Reading and writing polytope, graph and weighting JSON.

use minksum::io::{graph_from_json, graph_to_json, polytope_from_json, polytope_to_json, weighting_from_json, weighting_to_json};

fn main() -> minksum::Result<()> {
    let p = polytope_from_json(r#"{"ambient_dim": 2, "generators": [[0, 0], [2, 0], [0, 2], [1, 1]]}"#)?;
    println!("polytope {} -> dim {}", polytope_to_json(&p), p.dimension());

    let g = graph_from_json(r#"{"n": 4, "edges": [[1, 2], [2, 3], [3, 4], [1, 4]]}"#)?;
    println!("graph {}", graph_to_json(&g));

    let w = weighting_from_json(
        r#"{"graph": {"n": 3, "edges": [[1, 2], [2, 3], [1, 3]]}, "weights": [[[1, 2], "1/2"], [[2, 3], "1/2"], [[1, 3], "1/2"]]}"#,
    )?;
    println!("weighting {} has degree {}", weighting_to_json(&w), w.degree());

    for bad in [r#"{"ambient_dim": 2, "generators": [[0, 0], [1]]}"#, r#"{"ambient_dim": 2}"#, "[1"] {
        println!("{bad} -> {}", polytope_from_json(bad).unwrap_err());
    }
    Ok(())
}
