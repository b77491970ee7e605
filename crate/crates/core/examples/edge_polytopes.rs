//! Edge polytopes of graphs and sums of them, with the dimension formula and
//! the IDP check tied to the odd cycle condition.

use minksum::edge_polytope::{dim_formula, dim_formula_sum, edge_polytope, edge_polytope_sum};
use minksum::graph::Graph;
use minksum::semigroup::idp_check;

fn main() -> minksum::Result<()> {
    let graphs = [
        ("triangle", Graph::complete(3)),
        ("4-cycle", Graph::cycle_on(4, &[1, 2, 3, 4])?),
        ("bridged triangles", Graph::new(6, [(1, 2), (2, 3), (1, 3), (4, 5), (5, 6), (4, 6), (3, 4)])?),
        ("path-joined triangles", Graph::new(7, [(1, 2), (2, 3), (1, 3), (4, 5), (5, 6), (4, 6), (3, 7), (4, 7)])?),
    ];
    for (name, g) in &graphs {
        let p = edge_polytope(g)?;
        let report = idp_check(&p, 3)?;
        println!(
            "{name}: dim {} (formula {}), odd cycle condition {}, IDP up to 3: {:?}",
            p.dimension(),
            dim_formula(g)?,
            g.odd_cycle_condition()?,
            report.verdict
        );
        if let Some(cx) = report.counterexample {
            println!("  no split of {:?} in {}P", cx.alpha, cx.k);
        }
    }

    let g1 = Graph::cycle_on(5, &[1, 2, 3, 4, 5])?;
    let g2 = Graph::path_on(5, &[1, 2, 3, 4, 5])?;
    let sum = edge_polytope_sum(&[g1.clone(), g2.clone()])?;
    println!(
        "pentagon + path: {} generators, dim {} (formula {})",
        sum.generators().len(),
        sum.dimension(),
        dim_formula_sum(&[g1, g2])?
    );
    Ok(())
}
