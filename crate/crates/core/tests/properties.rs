//! Property tests for the invariants of each module.

mod common;

use std::collections::BTreeSet;

use common::*;
use minksum::edge_polytope::{dim_formula, edge_polytope, edge_polytope_sum, lemma35_rewrite, theorem34_edge_pairs};
use minksum::exact::{det, hnf, solve_integer_linear, BigInt, IntMatrix};
use minksum::graph::Graph;
use minksum::harness::{random_common_vertex_graph, random_connected_graph, random_subgraph};
use minksum::polytope::{minkowski_sum, LatticePolytope};
use minksum::semigroup::{decompose, idp_check, normal_check};
use num_traits::{One, Signed, Zero};
use proptest::prelude::*;
use rand::Rng;

fn small_matrix() -> impl Strategy<Value = Vec<Vec<i64>>> {
    (1usize..=4, 1usize..=4).prop_flat_map(|(r, c)| prop::collection::vec(prop::collection::vec(-6i64..=6, c), r))
}

fn points(dim: usize) -> impl Strategy<Value = Vec<Vec<i64>>> {
    prop::collection::vec(prop::collection::vec(0i64..=3, dim), 1..=4)
}

fn polytope(gens: &[Vec<i64>]) -> LatticePolytope {
    LatticePolytope::new(gens[0].len(), gens.to_vec()).unwrap()
}

fn graph_from_seed(seed: u64, lo: usize, hi: usize) -> Graph {
    let mut r = rng(seed);
    let n = r.gen_range(lo..=hi);
    let density = r.gen_range(0.0..0.6);
    random_connected_graph(&mut r, n, density)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn hnf_is_a_unimodular_echelon_form(rows in small_matrix()) {
        let a = IntMatrix::from_rows(&rows);
        let res = hnf(&a);
        prop_assert_eq!(a.mul(&res.u), res.h.clone());
        prop_assert!(det(&res.u).abs().is_one());
        let mut last_col = None;
        for &(r, c) in &res.pivots {
            prop_assert!(res.h[(r, c)].is_positive());
            for j in 0..c {
                prop_assert!(!res.h[(r, j)].is_negative() && res.h[(r, j)] < res.h[(r, c)]);
            }
            for i in 0..r {
                prop_assert!(res.h[(i, c)].is_zero());
            }
            prop_assert!(last_col.is_none_or(|l| c > l));
            last_col = Some(c);
        }
        for c in res.rank()..res.h.cols() {
            prop_assert!((0..res.h.rows()).all(|i| res.h[(i, c)].is_zero()));
        }
    }

    #[test]
    fn integer_solutions_solve_the_system(rows in small_matrix(), seed in any::<u64>()) {
        let a = IntMatrix::from_rows(&rows);
        let mut r = rng(seed);
        // Half the right-hand sides are images of integer vectors.
        let b: Vec<BigInt> = if r.gen_bool(0.5) {
            let x: Vec<i64> = (0..a.cols()).map(|_| r.gen_range(-3..=3)).collect();
            a.mul_vec(&big(&x))
        } else {
            big(&(0..a.rows()).map(|_| r.gen_range(-5..=5)).collect::<Vec<_>>())
        };
        match solve_integer_linear(&a, &b) {
            Some(x) => prop_assert_eq!(a.mul_vec(&x), b),
            None => prop_assert!(box_integer_solve(&rows, &b.iter().map(|v| i64::try_from(v).unwrap()).collect::<Vec<_>>(), 3).is_none()),
        }
    }

    #[test]
    fn minkowski_sum_commutes_and_associates(p in points(3), q in points(3), s in points(3)) {
        let (p, q, s) = (polytope(&p), polytope(&q), polytope(&s));
        let pq = minkowski_sum(&[p.clone(), q.clone()]).unwrap();
        prop_assert!(pq.same_as(&minkowski_sum(&[q.clone(), p.clone()]).unwrap()));
        let left = minkowski_sum(&[pq, s.clone()]).unwrap();
        let right = minkowski_sum(&[p, minkowski_sum(&[q, s]).unwrap()]).unwrap();
        prop_assert!(left.same_as(&right));
    }

    #[test]
    fn dilation_by_one_keeps_lattice_points(p in points(3)) {
        let p = polytope(&p);
        prop_assert_eq!(p.dilate(1).unwrap().lattice_points(), p.lattice_points());
    }

    #[test]
    fn dilation_keeps_dimension(p in points(3), q in points(3), l in 2i64..=3) {
        let (p, q) = (polytope(&p), polytope(&q));
        prop_assert_eq!(
            minkowski_sum(&[p.clone(), q.clone()]).unwrap().dimension(),
            minkowski_sum(&[p.dilate(l).unwrap(), q]).unwrap().dimension()
        );
    }

    #[test]
    fn decompositions_are_sound_and_complete(gens in points(2), k in 1usize..=3) {
        let p = polytope(&gens);
        let lattice = box_lattice_points(p.generators());
        let reachable = naive_k_fold(&lattice, k);
        for alpha in p.dilate(k as i64).unwrap().lattice_points() {
            match decompose(&alpha, k, &p) {
                Some(parts) => {
                    prop_assert_eq!(parts.len(), k);
                    let sum = parts.iter().fold(vec![0; 2], |acc, x| vec![acc[0] + x[0], acc[1] + x[1]]);
                    prop_assert_eq!(&sum, &alpha);
                    prop_assert!(parts.iter().all(|x| lattice.contains(x)));
                }
                None => prop_assert!(!reachable.contains(&alpha)),
            }
        }
    }

    #[test]
    fn idp_implies_normal(gens in points(3)) {
        let p = polytope(&gens);
        if idp_check(&p, 2).unwrap().holds_up_to_k() {
            prop_assert!(normal_check(&p, 2).unwrap().holds_up_to_k());
        }
    }

    #[test]
    fn bipartite_iff_no_induced_odd_cycle(seed in any::<u64>()) {
        let g = graph_from_seed(seed, 2, 9);
        prop_assert_eq!(g.bipartition().is_some(), g.induced_odd_cycles().is_empty());
    }

    #[test]
    fn meeting_odd_cycles_imply_the_odd_cycle_condition(seed in any::<u64>()) {
        let g = graph_from_seed(seed, 2, 9);
        if g.common_vertex_condition().unwrap() {
            prop_assert!(g.odd_cycle_condition().unwrap());
        }
    }

    #[test]
    fn induced_cycles_are_chordless_odd_and_unique(seed in any::<u64>()) {
        let g = graph_from_seed(seed, 3, 9);
        let cycles = g.induced_odd_cycles();
        let distinct: BTreeSet<_> = cycles.iter().map(|c| c.vertices().to_vec()).collect();
        prop_assert_eq!(distinct.len(), cycles.len());
        for c in &cycles {
            prop_assert!(c.is_odd() && c.len() >= 3 && c.is_chordless_in(&g));
            prop_assert!(c.edges().iter().all(|&(i, j)| g.has_edge(i, j)));
        }
    }

    #[test]
    fn dimension_formula_matches_rank(seed in any::<u64>()) {
        let g = graph_from_seed(seed, 2, 8);
        prop_assert_eq!(dim_formula(&g).unwrap(), edge_polytope(&g).unwrap().dimension());
    }

    #[test]
    fn rewriting_keeps_value_and_tracked_bound(seed in any::<u64>()) {
        let mut r = rng(seed);
        let n = r.gen_range(3..=8);
        let g = random_common_vertex_graph(&mut r, n);
        let (w, tracked, alpha) = fractional_weighting(&mut r, &g, 5);
        let out = lemma35_rewrite(&g, &w, &tracked).unwrap();
        prop_assert_eq!(rewrite_violation(&w, &tracked, &alpha, &out), None);
    }

    #[test]
    fn constructive_splits_revalidate(seed in any::<u64>()) {
        let mut r = rng(seed);
        let n = r.gen_range(3..=6);
        let g1 = random_common_vertex_graph(&mut r, n);
        let g2 = random_subgraph(&mut r, &g1);
        let k = r.gen_range(1..=3);
        let p = edge_polytope_sum(&[g1.clone(), g2.clone()]).unwrap();
        let candidates = p.dilate(k as i64).unwrap().lattice_points();
        let alpha = &candidates[r.gen_range(0..candidates.len())];
        let pairs = theorem34_edge_pairs(&g1, &g2, alpha, k).unwrap();
        prop_assert_eq!(pairs.len(), k);
        let mut total = vec![0; n];
        for &((a, b), (c, d)) in &pairs {
            prop_assert!(g1.has_edge(a, b) && g2.has_edge(c, d));
            for v in [a, b, c, d] {
                total[v - 1] += 1;
            }
        }
        prop_assert_eq!(&total, alpha);
    }
}
