//! Lower and upper bounds side by side for several graph families.
//!
//! Lower bounds come from counting label multisets per degree class,
//! exhaustive distinct-product enumeration, the cycle cube-root test and
//! the two-label weight argument for multipartite graphs. Upper bounds
//! are strengths of verified constructions.
//!
//! Run with: cargo run --example bounds_report

use tvps::bounds::bound_report;
use tvps::graph::{make_complete, make_complete_multipartite, make_cycle, make_path};

fn main() {
    let cases = vec![
        ("C100", make_cycle(100).unwrap()),
        ("C1000", make_cycle(1000).unwrap()),
        ("P50", make_path(50).unwrap()),
        ("K6", make_complete(6).unwrap()),
        ("K_{3,4}", make_complete_multipartite(&[3, 4]).unwrap()),
        ("K_{3,4,5}", make_complete_multipartite(&[3, 4, 5]).unwrap()),
    ];
    for (name, graph) in cases {
        let report = bound_report(&graph).expect("report builds");
        println!(
            "{name}: best lower {:?}, best upper {:?}",
            report.best_lower, report.best_upper
        );
        for b in &report.bounds {
            println!("  {:<22} {:<5} {:>6}   {}", b.name, format!("{:?}", b.kind), b.value, b.reference);
        }
    }
}
