//! Dimension, Minkowski sums, dilation, lattice points and interiors.

use minksum::polytope::{minkowski_sum, AffineLattice, LatticePolytope};

fn main() -> minksum::Result<()> {
    let triangle = LatticePolytope::new(3, vec![vec![0, 0, 0], vec![1, 0, 0], vec![0, 1, 0]])?;
    let segment = LatticePolytope::new(3, vec![vec![0, 0, 0], vec![1, 1, 3]])?;
    let sum = minkowski_sum(&[triangle.clone(), segment.clone()])?;
    println!("dim triangle = {}, dim segment = {}, dim sum = {}", triangle.dimension(), segment.dimension(), sum.dimension());
    println!("sum generators: {:?}", sum.generators());

    let points = sum.lattice_points();
    println!("{} lattice points in the sum: {points:?}", points.len());
    for k in 2..=3 {
        let dilate = sum.dilate(k)?;
        println!(
            "{k}P: {} lattice points, {} in the relative interior",
            dilate.lattice_points().len(),
            dilate.relint_lattice_points().len()
        );
    }

    let lattice = AffineLattice::from_points(&sum.dilate(2)?.lattice_points())?;
    println!("L(2P) has rank {} with basis {:?}", lattice.rank(), lattice.basis());
    println!("(1,1,1) in 2P: {}, in L(2P): {}", sum.dilate(2)?.contains_point(&[1, 1, 1]), lattice.contains(&[1, 1, 1]));
    Ok(())
}
