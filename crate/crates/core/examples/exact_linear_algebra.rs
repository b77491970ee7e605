//! Hermite normal form, integer solving and exact LP feasibility.

use minksum::exact::{det, format_rational, frac, hnf, rat, rational_feasible, solve_integer_linear, BigInt, IntMatrix};

fn main() {
    let a = IntMatrix::from_rows(&[vec![2, 4, 4], vec![-6, 6, 12], vec![10, -4, -16]]);
    let res = hnf(&a);
    println!("A = {a:?}");
    println!("H = {:?}  (rank {}, det U = {})", res.h, res.rank(), det(&res.u));

    let b: Vec<BigInt> = [2, 6, -4].iter().map(|&v| BigInt::from(v)).collect();
    match solve_integer_linear(&a, &b) {
        Some(x) => println!("integer solution of A x = {b:?}: {x:?}"),
        None => println!("A x = {b:?} has no integer solution"),
    }

    // x1 + x2 + x3 = 1, x1 - x3 = 1/3, x >= 0
    let rows = vec![vec![rat(1), rat(1), rat(1)], vec![rat(1), rat(0), rat(-1)]];
    let rhs = vec![rat(1), frac(1, 3)];
    for strict in [false, true] {
        let x = rational_feasible(&rows, &rhs, strict).expect("feasible");
        let shown: Vec<String> = x.iter().map(format_rational).collect();
        println!("{} solution: {shown:?}", if strict { "strictly positive" } else { "basic" });
    }
}
