//! The prime-chain construction for long cycles.
//!
//! Residue chains 0, q, 2q, ..., (p-1)q, 0 over Z_p are concatenated at
//! their shared zeros; every unordered pair of adjacent residues appears
//! at most once, so after substituting residue a by the a-th indexed
//! label (1, 2, 3, 5, 7, ...) all adjacent label products are distinct.
//! Copies, edge doubling and distinguishing vertex primes finish the
//! cycle at its exact length.
//!
//! Run with: cargo run --release --example prime_chain

use tvps::cycles::{label_cycle_prime_chain, minimal_chain_budget, multichain_residues};

fn main() {
    // the multichain for p = 5: chains q = 1 and q = 2 share their zeros
    println!("multichain residues, p=5: {:?}", multichain_residues(5, 2));

    println!(
        "\n{:>8} {:>8} {:>6} {:>7} {:>7} {:>9} {:>10}",
        "n", "budget", "p", "copies", "chains", "leftover", "strength"
    );
    for n in [100usize, 1_000, 10_000, 100_000] {
        let budget = minimal_chain_budget(n).expect("chain covers this length");
        let (labeling, plan) = label_cycle_prime_chain(n, budget).expect("construction verifies");
        println!(
            "{:>8} {:>8} {:>6} {:>7} {:>7} {:>9} {:>10}",
            n,
            budget,
            plan.prime,
            plan.copies,
            plan.steps.len(),
            plan.leftover,
            labeling.strength(),
        );
    }

    // how the achieved strength scales against n^(1/3) * ln n
    println!("\nstrength / (n^(1/3) ln n):");
    for n in [1_000usize, 10_000, 100_000] {
        let budget = minimal_chain_budget(n).unwrap();
        let (labeling, _) = label_cycle_prime_chain(n, budget).unwrap();
        let scale = (n as f64).cbrt() * (n as f64).ln();
        println!("  n={n:<7} ratio={:.3}", labeling.strength() as f64 / scale);
    }
}
