//! Induced odd cycles, the two odd cycle conditions and 2-connected
//! components, plus connected graph counts up to isomorphism.

use minksum::graph::{connected_graphs, Graph};

fn describe(name: &str, g: &Graph) -> minksum::Result<()> {
    let cycles: Vec<_> = g.induced_odd_cycles().iter().map(|c| c.vertices().to_vec()).collect();
    println!("{name}: induced odd cycles {cycles:?}");
    println!(
        "  bipartite {}, odd cycle condition {}, odd cycles pairwise meet {}",
        g.is_bipartite(),
        g.odd_cycle_condition()?,
        g.common_vertex_condition()?
    );
    let blocks: Vec<_> = g.two_connected_components().iter().map(|b| b.edges().clone()).collect();
    println!("  2-connected components {blocks:?}");
    Ok(())
}

fn main() -> minksum::Result<()> {
    describe("bridged triangles", &Graph::new(6, [(1, 2), (2, 3), (1, 3), (4, 5), (5, 6), (4, 6), (3, 4)])?)?;
    describe("path-joined triangles", &Graph::new(7, [(1, 2), (2, 3), (1, 3), (4, 5), (5, 6), (4, 6), (3, 7), (4, 7)])?)?;
    describe("bowtie", &Graph::new(5, [(1, 2), (2, 3), (1, 3), (3, 4), (4, 5), (3, 5)])?)?;
    describe("6-cycle", &Graph::cycle_on(6, &[1, 2, 3, 4, 5, 6])?)?;
    for n in 1..=6 {
        println!("connected graphs on {n} vertices: {}", connected_graphs(n).len());
    }
    Ok(())
}
