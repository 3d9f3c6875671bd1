//! The stored optimal labelings for short cycles.
//!
//! Decodes the label sequence for every cycle length 3..=16, verifies
//! product-irregularity, and prints the strength row together with the
//! product degrees.
//!
//! Run with: cargo run --example cycle_tables

use tvps::labeling::{builtin_cycle_labeling, builtin_cycle_sequence};

fn main() {
    println!("{:>3} {:>9} {:>9}  product degrees", "n", "strength", "irregular");
    for n in 3..=16usize {
        let labeling = builtin_cycle_labeling(n).expect("table covers 3..=16");
        let pds = labeling.product_degrees().sorted();
        let rendered: Vec<String> = pds.iter().map(|p| p.to_string()).collect();
        println!(
            "{n:>3} {:>9} {:>9}  [{}]",
            labeling.strength(),
            labeling.is_product_irregular(),
            rendered.join(", ")
        );
    }

    // the raw alternating sequence for the 5-cycle: [vertex], edge, ...
    let seq = builtin_cycle_sequence(5).unwrap();
    println!("\nsequence for n=5 (vertex/edge alternating): {:?}", seq.entries());
}
