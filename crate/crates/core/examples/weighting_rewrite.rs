//! Rewriting a fractional edge weighting with integer value into an integer
//! one on a graph whose odd cycles meet, while keeping the weight on a tracked
//! edge set from dropping.

use std::collections::BTreeSet;

use minksum::edge_polytope::{lemma35_rewrite, EdgeWeighting};
use minksum::exact::{format_rational, frac};
use minksum::graph::Graph;

fn main() -> minksum::Result<()> {
    let bowtie = Graph::new(5, [(1, 2), (2, 3), (1, 3), (3, 4), (4, 5), (3, 5)])?;
    let half = frac(1, 2);
    let weights = bowtie.edges().iter().map(|&e| (e, half.clone())).collect();
    let w = EdgeWeighting::new(bowtie.clone(), weights)?;
    let value: Vec<String> = w.value().iter().map(format_rational).collect();
    println!("weights 1/2 on every edge, value {value:?}, degree {}", format_rational(&w.degree()));

    let tracked: BTreeSet<_> = [(1, 2), (4, 5)].into_iter().collect();
    let out = lemma35_rewrite(&bowtie, &w, &tracked)?;
    println!("integer weights {:?}", out.integer_weights);
    println!("value {:?}, tracked total {}", out.value(5), format_rational(&out.tracked_sum));

    let c4 = Graph::cycle_on(4, &[1, 2, 3, 4])?;
    let w = EdgeWeighting::new(
        c4.clone(),
        [((1, 2), frac(3, 2)), ((2, 3), frac(1, 2)), ((3, 4), frac(3, 2)), ((1, 4), frac(1, 2))].into_iter().collect(),
    )?;
    let out = lemma35_rewrite(&c4, &w, &[(2, 3)].into_iter().collect())?;
    println!("4-cycle: {:?}, tracked total {}", out.integer_weights, format_rational(&out.tracked_sum));
    Ok(())
}
