//! Prints the number of Hilbert algebras of each size up to isomorphism,
//! together with how many have each depth.
//!
//! ```text
//! cargo run --release -p hilbert-depth --example counts -- 5
//! ```

use std::time::Instant;

use hilbert_depth::{depth, enumerate_hilbert_with_cap};

fn main() {
    let max: usize = std::env::args()
        .nth(1)
        .and_then(|s| s.parse().ok())
        .unwrap_or(5);
    println!("| size | algebras | by depth | time |");
    println!("|---|---|---|---|");
    for n in 1..=max {
        let start = Instant::now();
        let algebras = enumerate_hilbert_with_cap(n, max).expect("size within cap");
        let mut by_depth = vec![0usize; n];
        for a in &algebras {
            by_depth[depth(a).expect("small algebra")] += 1;
        }
        let hist: Vec<String> = by_depth
            .iter()
            .enumerate()
            .filter(|(_, &c)| c > 0)
            .map(|(d, c)| format!("{d}: {c}"))
            .collect();
        println!(
            "| {n} | {} | {} | {:.2?} |",
            algebras.len(),
            hist.join(", "),
            start.elapsed()
        );
    }
}
