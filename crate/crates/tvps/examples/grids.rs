//! Grid and toroidal-grid labelings by factor composition.
//!
//! Each dimension gets a cycle (or path) labeling remapped onto its own
//! prime pool; dimension-j edges inherit the factor-j edge label and a
//! composite vertex takes the product of its factor vertex labels. The
//! product degree of a composite vertex then factors as the product of
//! the factor product degrees, which disjoint prime supports keep
//! distinct.
//!
//! Run with: cargo run --example grids

use tvps::compose::label_grid;

fn main() {
    let cases: [(&[usize], bool); 4] = [
        (&[7, 7], true),
        (&[5, 5, 5], true),
        (&[8, 9], false),
        (&[3, 3, 3], false),
    ];
    for (dims, toroidal) in cases {
        let out = label_grid(dims, toroidal).expect("composition verifies");
        let kind = if toroidal { "torus" } else { "grid" };
        println!(
            "{kind} {dims:?}: {} vertices, strength {}, max edge label {}, vertex bound {}",
            out.graph.vertex_count(),
            out.labeling.strength(),
            out.max_edge_label,
            out.vertex_label_bound,
        );
        println!(
            "  primes used {} of {} allowed; targets per dim: edges {:?}, vertices {:?}",
            out.used_primes,
            out.budget.total_primes(),
            out.budget.target_edge_labels,
            out.budget.target_vertex_labels,
        );
        for (j, f) in out.factors.iter().enumerate() {
            println!(
                "  factor {j}: strength {}, edge labels {:?}",
                f.strength(),
                {
                    let mut e: Vec<u64> = f.edge_labels().to_vec();
                    e.sort_unstable();
                    e.dedup();
                    e
                }
            );
        }
    }
}
