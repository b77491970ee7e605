//! IDP and normality checks, with a counterexample and a positive case.

use minksum::harness::triangle_and_segment;
use minksum::polytope::minkowski_sum;
use minksum::semigroup::{decompose, idp_check, normal_check};

fn main() -> minksum::Result<()> {
    let (p1, p2) = triangle_and_segment();
    for (name, p) in [("triangle", p1.clone()), ("segment", p2.clone()), ("sum", minkowski_sum(&[p1, p2])?)] {
        let idp = idp_check(&p, 3)?;
        let normal = normal_check(&p, 3)?;
        println!("{name}: IDP {:?}, normal {:?}", idp.verdict, normal.verdict);
        if let Some(cx) = idp.counterexample {
            println!("  {:?} lies in {}P but splits as {:?}", cx.alpha, cx.k, decompose(&cx.alpha, cx.k, &p));
        }
    }

    let (p1, _) = triangle_and_segment();
    let parts = decompose(&[2, 1, 0], 3, &p1).expect("the triangle has IDP");
    println!("(2,1,0) in 3T splits as {parts:?}");
    Ok(())
}
