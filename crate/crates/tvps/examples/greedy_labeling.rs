//! The greedy strength-at-most-n construction.
//!
//! Edges keep their labels (all ones by default). With all vertex labels
//! temporarily 1, vertices are sorted by their temporary product degree
//! and receive the labels 1..=n in that order; the final product degrees
//! are strictly increasing, so the labeling is always product-irregular.
//!
//! Run with: cargo run --example greedy_labeling

use tvps::bounds::greedy_upper_labeling;
use tvps::graph::{make_complete, make_empty, Graph};

fn main() {
    // the empty graph is the worst case: pd(v) = w(v), so all n labels
    // are genuinely needed
    let empty = make_empty(6).unwrap();
    let l = greedy_upper_labeling(&empty, None).unwrap();
    println!("empty graph, 6 vertices: labels {:?}", l.vertex_labels());

    let k5 = make_complete(5).unwrap();
    let l = greedy_upper_labeling(&k5, None).unwrap();
    let pds: Vec<String> = l.product_degrees().values().iter().map(|p| p.to_string()).collect();
    println!("K5, all-ones edges: vertex labels {:?}, pds {:?}", l.vertex_labels(), pds);

    // a sparse graph with an isolated vertex and a seeded edge labeling
    let g = Graph::new(7, [(0, 1), (1, 2), (2, 3), (3, 0), (4, 5)]).unwrap();
    let seed = vec![2, 1, 3, 1, 5];
    let l = greedy_upper_labeling(&g, Some(&seed)).unwrap();
    let pds: Vec<String> = l.product_degrees().values().iter().map(|p| p.to_string()).collect();
    println!("seeded sparse graph: vertex labels {:?}, pds {:?}", l.vertex_labels(), pds);
    println!(
        "strength {} <= max(n, max edge label) = {}",
        l.strength(),
        (g.vertex_count() as u64).max(5)
    );
}
