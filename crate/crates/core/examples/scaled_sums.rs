//! Scaled Minkowski sums: IDP at n_i = dim P_i, interior splits at
//! n_i = dim P_i + 1, and the constructive split of a lattice point.

use minksum::harness::matching_polytopes;
use minksum::polytope::scaled_sum;
use minksum::semigroup::{caratheodory_decompose, decompose, idp_check, level_check, verify_lemma25a};

fn main() -> minksum::Result<()> {
    let (p1, p2) = matching_polytopes();
    let ps = [p1.clone(), p2.clone()];
    println!("dim P1 = {}, dim P2 = {}", p1.dimension(), p2.dimension());

    for ns in [[1, 1], [2, 2]] {
        let q = scaled_sum(&ps, &ns)?;
        println!("n = {ns:?}: {:?}", idp_check(&q, 2)?.verdict);
    }
    let q = scaled_sum(&ps, &[1, 1])?;
    println!("(2,2,1,1,1,1) over P1+P2 splits as {:?}", decompose(&[2, 2, 1, 1, 1, 1], 2, &q));

    println!("interior splits at n = [3, 3]: {:?}", level_check(&ps, &[3, 3], 2)?.verdict);
    println!("lattice identity at n = [3, 3]: {}", verify_lemma25a(&ps, &[3, 3])?);

    let q = scaled_sum(&ps, &[2, 2])?;
    let alpha = q.dilate(2)?.lattice_points()[7].clone();
    let parts = caratheodory_decompose(&ps, &[2, 2], &alpha, 2)?;
    println!("constructive split of {alpha:?}: {parts:?}");
    Ok(())
}
