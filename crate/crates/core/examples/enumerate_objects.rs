//! Partitions, compositions and diophantine solutions of n, and the
//! bijection between partitions and solutions of q1 + 2 q2 + ... + n qn = n.
//!
//! ```bash
//! cargo run -p partseq --example enumerate_objects -- 6
//! ```

use num_bigint::BigInt;
use partseq::partitions::{
    composition_count, compositions, diophantine, diophantine_to_partition, multiplicity,
    partition_to_diophantine, partitions, DEFAULT_COMPOSITION_CAP,
};

fn main() -> partseq::Result<()> {
    let n: usize = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(5);

    println!("partitions of {n} (reverse lexicographic):");
    let mut mu_total = BigInt::from(0);
    for p in partitions(n)? {
        let d = partition_to_diophantine(&p);
        assert_eq!(diophantine_to_partition(&d), p);
        let mu = multiplicity(&p);
        println!("  {:<16} l = {:<2} mu = {:<4} q = {}", p.to_string(), p.len(), mu, d);
        mu_total += mu;
    }
    println!("  sum of mu = {mu_total} = 2^{} = {}", n - 1, composition_count(n));

    println!("\ncompositions of {n} (binary counter over cut points):");
    for c in compositions(n, DEFAULT_COMPOSITION_CAP)? {
        println!("  {c}");
    }

    println!("\nsolutions of sum i*q_i = {n}:");
    for s in diophantine(n)? {
        println!("  {:<16} -> {}", s.to_string(), diophantine_to_partition(&s));
    }
    Ok(())
}
