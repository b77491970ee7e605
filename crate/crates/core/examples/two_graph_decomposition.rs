//! Splitting lattice points of k(P_G1 + P_G2) into k lattice points when the
//! odd cycles of G1 pairwise meet and G2 is a subgraph of G1.

use minksum::edge_polytope::{edge_polytope_sum, theorem34_decompose, theorem34_edge_pairs};
use minksum::graph::Graph;
use minksum::semigroup::decompose;

fn main() -> minksum::Result<()> {
    let g1 = Graph::new(
        9,
        [(1, 2), (2, 3), (3, 4), (4, 5), (1, 5), (5, 6), (6, 7), (7, 8), (8, 9), (5, 9)],
    )?;
    let g2 = Graph::new(9, [(1, 5), (2, 3), (4, 5), (6, 7), (8, 9)])?;
    println!("odd cycles of G1 meet: {}, G2 inside G1: {}", g1.common_vertex_condition()?, g2.is_subgraph_of(&g1)?);

    let p = edge_polytope_sum(&[g1.clone(), g2.clone()])?;
    let k = 2;
    let points = p.dilate(k as i64)?.lattice_points();
    println!("{} lattice points in {k}P", points.len());
    for alpha in points.iter().step_by(points.len() / 4) {
        let pairs = theorem34_edge_pairs(&g1, &g2, alpha, k)?;
        println!("{alpha:?} = sum over {pairs:?}");
    }

    let alpha = [1, 1, 1, 1, 2, 1, 1, 0, 0];
    let parts = theorem34_decompose(&g1, &g2, &alpha, k)?;
    println!("constructive: {parts:?}");
    println!("search:       {:?}", decompose(&alpha, k, &p));
    Ok(())
}
