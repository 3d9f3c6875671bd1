//! Building, serializing and verifying labelings by hand.
//!
//! Shows the labeling data model directly: construct a labeling on a
//! graph, inspect product degrees, catch a collision witness, and round
//! trip through the JSON wire format.
//!
//! Run with: cargo run --example verify_labelings

use tvps::graph::make_cycle;
use tvps::labeling::TotalLabeling;

fn main() {
    let c4 = make_cycle(4).unwrap();

    // labels chosen by hand; edge labels follow the canonical edge order
    // (0,1), (0,3), (1,2), (2,3)
    let good = TotalLabeling::new(c4.clone(), vec![1, 1, 2, 2], vec![1, 2, 1, 2]).unwrap();
    let pds: Vec<String> = good.product_degrees().values().iter().map(|p| p.to_string()).collect();
    println!("labels ok: pds {:?}, irregular {}", pds, good.is_product_irregular());

    // the all-ones labeling collapses every product degree to 1
    let ones = TotalLabeling::new(c4.clone(), vec![1; 4], vec![1; 4]).unwrap();
    println!("all ones: witness {:?}", ones.irregularity_witness());

    // JSON round trip
    let json = good.to_json_string();
    let back = TotalLabeling::from_json_str(c4, &json).unwrap();
    assert_eq!(back, good);
    println!("wire format:\n{json}");
}
