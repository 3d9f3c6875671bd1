//! Labelings inherited through Hamiltonian cycles and paths.
//!
//! Walk edges carry a cycle (or path) labeling; every other edge carries
//! the label 1, which leaves all product degrees untouched. The witness
//! walk is validated, never searched.
//!
//! Run with: cargo run --example hamiltonian

use tvps::cycles::label_hamiltonian;
use tvps::graph::{make_complete, Graph};

fn main() {
    // K4 through the cycle 0-1-2-3: the two chords get label 1
    let k4 = make_complete(4).unwrap();
    let l = label_hamiltonian(&k4, &[0, 1, 2, 3]).unwrap();
    println!(
        "K4 via hamiltonian cycle: strength {}, chord (0,2) label {:?}",
        l.strength(),
        l.edge_label(0, 2)
    );

    // the Petersen graph has no Hamiltonian cycle but has Hamiltonian
    // paths; outer cycle 0..4, inner pentagram 5..9, spokes i -- i+5
    let mut edges = Vec::new();
    for i in 0..5 {
        edges.push((i, (i + 1) % 5));
        edges.push((i + 5, (i + 2) % 5 + 5));
        edges.push((i, i + 5));
    }
    let petersen = Graph::new(10, edges).unwrap();
    let walk = [0usize, 1, 2, 3, 4, 9, 6, 8, 5, 7];
    let l = label_hamiltonian(&petersen, &walk).unwrap();
    println!(
        "Petersen via hamiltonian path: strength {}, irregular {}",
        l.strength(),
        l.is_product_irregular()
    );

    // invalid witnesses are rejected rather than repaired
    match label_hamiltonian(&k4, &[0, 1, 2]) {
        Err(e) => println!("short witness rejected: {e}"),
        Ok(_) => unreachable!(),
    }
}
