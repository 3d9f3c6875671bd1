//! Inductive cycle extensions: strength ceil(n/3) and ceil(n/4).
//!
//! Starting from a short optimal labeling, each step removes one anchor
//! edge and splices in a window with one new label, preserving every old
//! product degree. The anchor subsequence survives each step, so the
//! process iterates to any length.
//!
//! Run with: cargo run --example cycle_extensions

use tvps::cycles::{label_cycle_div3, label_cycle_div4};
use tvps::labeling::CycleSequence;

fn show_anchor(entries: &[u64], window: &[u64]) -> Option<usize> {
    let len = entries.len();
    (0..len).find(|&k| window.iter().enumerate().all(|(i, &w)| entries[(k + i) % len] == w))
}

fn main() {
    println!("3-step extension (strength <= max(3, ceil(n/3))):");
    for n in [12usize, 25, 100, 1000] {
        let l = label_cycle_div3(n).unwrap();
        let s = l.strength();
        let entries = CycleSequence::encode(&l).unwrap().entries().to_vec();
        let anchor = show_anchor(&entries, &[s - 1, s - 1, s, s, s, s, s - 1]);
        println!(
            "  n={n:<5} strength={s:<4} bound={:<4} anchor at entry {:?}",
            3.max(n.div_ceil(3)),
            anchor.expect("anchor present"),
        );
    }

    println!("4-step extension (strength <= max(4, ceil(n/4))):");
    for n in [20usize, 50, 100, 1000] {
        let l = label_cycle_div4(n).unwrap();
        let s = l.strength();
        let entries = CycleSequence::encode(&l).unwrap().entries().to_vec();
        let anchor = show_anchor(&entries, &[s - 1, s, s, s - 2, s, s, s, s - 1, s - 1]);
        println!(
            "  n={n:<5} strength={s:<4} bound={:<4} anchor at entry {:?}",
            4.max(n.div_ceil(4)),
            anchor.expect("anchor present"),
        );
    }

    // the first extension step in full, n = 9 -> 12
    let base = label_cycle_div3(9).unwrap();
    let grown = label_cycle_div3(12).unwrap();
    println!("\nlabels at n=9:  {:?}", CycleSequence::encode(&base).unwrap().entries());
    println!("labels at n=12: {:?}", CycleSequence::encode(&grown).unwrap().entries());
}
