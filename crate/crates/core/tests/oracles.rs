//! Library routines against independent brute-force oracles.

mod common;

use common::*;
use minksum::edge_polytope::edge_polytope;
use minksum::exact::{rat, rational_feasible, solve_integer_linear, BigInt, BigRational, IntMatrix};
use minksum::graph::{connected_graphs, Graph};
use minksum::harness::{random_connected_graph, triangle_and_segment};
use minksum::polytope::{minkowski_sum, LatticePolytope};
use minksum::semigroup::{decompose, idp_check, normal_check};
use rand::Rng;

fn polytope(gens: &[Point]) -> LatticePolytope {
    LatticePolytope::new(gens[0].len(), gens.to_vec()).unwrap()
}

#[test]
fn lattice_points_match_box_scan() {
    let mut r = rng(11);
    for _ in 0..60 {
        let dim = r.gen_range(1..=3);
        let gens = random_gens(&mut r, dim, 5, 3);
        assert_eq!(polytope(&gens).lattice_points(), box_lattice_points(&gens), "{gens:?}");
    }
}

#[test]
fn lattice_points_of_dilated_sum_match_box_scan() {
    let (p1, p2) = triangle_and_segment();
    let sum = minkowski_gens(p1.generators(), p2.generators());
    for k in 1..=3 {
        let expected = box_lattice_points(&scale_gens(&sum, k));
        let got = minkowski_sum(&[p1.clone(), p2.clone()]).unwrap().dilate(k).unwrap().lattice_points();
        assert_eq!(got, expected, "k={k}");
    }
}

#[test]
fn lower_dimensional_lattice_points_match_box_scan() {
    let gens = vec![vec![0, 0, 0, 0], vec![2, 2, 0, 1], vec![0, 2, 2, 1], vec![2, 0, 2, 1]];
    assert_eq!(polytope(&gens).lattice_points(), box_lattice_points(&gens));
}

#[test]
fn membership_matches_caratheodory_oracle() {
    let mut r = rng(12);
    for _ in 0..60 {
        let dim = r.gen_range(1..=3);
        let gens = random_gens(&mut r, dim, 5, 3);
        let p = polytope(&gens);
        for _ in 0..10 {
            let x: Vec<BigRational> = (0..dim)
                .map(|_| BigRational::new(r.gen_range(-1..=13).into(), 4.into()))
                .collect();
            assert_eq!(p.contains(&x), hull_contains(&gens, &x), "{gens:?} {x:?}");
        }
    }
}

#[test]
fn rational_feasibility_matches_fourier_motzkin() {
    let mut r = rng(13);
    let mut feasible = 0;
    for _ in 0..200 {
        let vars = r.gen_range(1..=4);
        let rows = r.gen_range(1..=3);
        let a: Vec<Vec<BigRational>> = (0..rows).map(|_| (0..vars).map(|_| rat(r.gen_range(-3..=3))).collect()).collect();
        let b: Vec<BigRational> = (0..rows).map(|_| rat(r.gen_range(-3..=3))).collect();
        let expected = fm_feasible(&a, &b);
        let got = rational_feasible(&a, &b, false);
        assert_eq!(got.is_some(), expected, "a={a:?} b={b:?}");
        if let Some(x) = got {
            feasible += 1;
            assert!(x.iter().all(|v| *v >= rat(0)));
            for (row, rhs) in a.iter().zip(&b) {
                let lhs: BigRational = row.iter().zip(&x).map(|(u, v)| u * v).sum();
                assert_eq!(&lhs, rhs);
            }
        }
    }
    assert!(feasible > 20 && feasible < 200);
}

#[test]
fn integer_solutions_match_bounded_search() {
    let mut r = rng(14);
    for _ in 0..100 {
        let a: Vec<Vec<i64>> = (0..3).map(|_| (0..3).map(|_| r.gen_range(-3..=3)).collect()).collect();
        let b: Vec<i64> = (0..3).map(|_| r.gen_range(-4..=4)).collect();
        let m = IntMatrix::from_rows(&a);
        let got = solve_integer_linear(&m, &big(&b));
        if let Some(x) = &got {
            assert_eq!(m.mul_vec(x), big(&b));
        }
        // A nonsingular system has at most one solution, so the box search is
        // exhaustive for solutions inside the box.
        if minksum::exact::det(&m) != BigInt::from(0) {
            let got: Option<Vec<i64>> = got.map(|x| x.iter().map(|v| i64::try_from(v).unwrap()).collect());
            match (got, box_integer_solve(&a, &b, 20)) {
                (Some(x), None) => assert!(x.iter().any(|v| v.abs() > 20), "a={a:?} b={b:?}"),
                (got, expected) => assert_eq!(got, expected, "a={a:?} b={b:?}"),
            }
        } else if box_integer_solve(&a, &b, 6).is_some() {
            assert!(got.is_some(), "a={a:?} b={b:?}");
        }
    }
}

#[test]
fn triangle_plus_segment_fails_at_degree_two() {
    // Frozen from the oracle: the smallest failing degree and its first point.
    let (p1, p2) = triangle_and_segment();
    let p = minkowski_sum(&[p1, p2]).unwrap();
    let points = box_lattice_points(p.generators());
    let reachable = naive_k_fold(&points, 2);
    assert!(box_lattice_points(&scale_gens(p.generators(), 2)).contains(&vec![1, 1, 1]));
    assert!(!reachable.contains(&vec![1, 1, 1]));
    assert!(decompose(&[1, 1, 1], 2, &p).is_none());
    for report in [idp_check(&p, 3).unwrap(), normal_check(&p, 3).unwrap()] {
        let cx = report.counterexample.unwrap();
        assert_eq!((cx.k, cx.alpha), (2, vec![1, 1, 1]));
    }
}

#[test]
fn triangles_joined_by_a_path_fail_at_degree_three() {
    let g = Graph::new(7, [(1, 2), (2, 3), (1, 3), (4, 5), (5, 6), (4, 6), (3, 7), (7, 4)]).unwrap();
    assert!(!g.odd_cycle_condition().unwrap());
    let p = edge_polytope(&g).unwrap();
    let alpha = vec![1, 1, 1, 1, 1, 1, 0];
    assert!(hull_contains_point(&scale_gens(p.generators(), 3), &alpha));
    assert!(!naive_k_fold(&box_lattice_points(p.generators()), 3).contains(&alpha));
    let report = idp_check(&p, 3).unwrap();
    assert!(!report.holds_up_to_k());
    assert_eq!(report.counterexample.unwrap().k, 3);
}

#[test]
fn cycle_conditions_match_exhaustive_cycles() {
    for n in 1..=6 {
        for g in connected_graphs(n) {
            assert_eq!(g.odd_cycle_condition().unwrap(), occ_oracle(&g), "{g:?}");
            assert_eq!(g.common_vertex_condition().unwrap(), common_vertex_oracle(&g), "{g:?}");
            assert_eq!(g.is_bipartite(), !has_odd_cycle(&g), "{g:?}");
        }
    }
    let mut r = rng(15);
    for _ in 0..40 {
        let n = r.gen_range(7..=8);
        let density = r.gen_range(0.0..0.3);
        let g = random_connected_graph(&mut r, n, density);
        assert_eq!(g.odd_cycle_condition().unwrap(), occ_oracle(&g), "{g:?}");
        assert_eq!(g.common_vertex_condition().unwrap(), common_vertex_oracle(&g), "{g:?}");
    }
}

#[test]
fn induced_cycles_are_chordless_cycles() {
    for g in connected_graphs(6) {
        let from_lib: std::collections::BTreeSet<_> = g
            .induced_cycles()
            .iter()
            .map(|c| c.vertices().iter().copied().collect::<std::collections::BTreeSet<_>>())
            .collect();
        let chordless: std::collections::BTreeSet<_> = all_cycles(&g)
            .into_iter()
            .map(|(vs, _)| vs)
            .filter(|vs| {
                vs.iter().map(|&v| vs.iter().filter(|&&u| g.has_edge(u, v)).count()).all(|d| d == 2)
            })
            .collect();
        assert_eq!(from_lib, chordless, "{g:?}");
    }
}
