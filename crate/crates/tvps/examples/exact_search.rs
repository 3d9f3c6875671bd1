//! Exact strength values on small graphs by branch and bound.
//!
//! The search refutes a strength by degree-class counting where it can,
//! otherwise labels edges first (pruning as soon as too many vertices
//! share an edge product) and vertices second (pruning on any product
//! degree collision).
//!
//! Run with: cargo run --example exact_search

use tvps::graph::{make_complete, make_complete_multipartite, make_cycle};
use tvps::solver::{tvps_exact, SearchConfig, TvpsOutcome};

fn report(name: &str, g: &tvps::graph::Graph) {
    match tvps_exact(g, &SearchConfig::default()).expect("search ran") {
        TvpsOutcome::Exact { value, witness } => {
            println!(
                "{name:<8} tvps = {value}   witness vertex labels {:?}",
                witness.vertex_labels()
            );
        }
        TvpsOutcome::Bracket { lower, upper } => {
            println!("{name:<8} tvps in [{lower}, {upper:?}] (budget exhausted)");
        }
    }
}

fn main() {
    for n in 3..=10usize {
        report(&format!("C{n}"), &make_cycle(n).unwrap());
    }
    for n in 3..=6usize {
        report(&format!("K{n}"), &make_complete(n).unwrap());
    }
    report("K_{3,3}", &make_complete_multipartite(&[3, 3]).unwrap());
    report("K_{3,4}", &make_complete_multipartite(&[3, 4]).unwrap());
}
