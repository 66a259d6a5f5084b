//! Bernoulli numbers as sums over integer partitions.
//!
//! Prints every term of the partition sum for B_4, then B_1..B_20 by the
//! partition method next to the recursion.
//!
//! ```bash
//! cargo run -p partseq --example bernoulli_partition_sum
//! ```

use partseq::catalog::{named_value, CatalogEntry};
use partseq::exact::{factorial, Rational};
use partseq::partitions::{multiplicity, partitions, DEFAULT_COMPOSITION_CAP};
use partseq::MethodId;

fn main() -> partseq::Result<()> {
    let entry = CatalogEntry::Bernoulli;
    let n = 4;
    println!("B_{n} = {n}! * sum over partitions p of {n} of mu(p) * prod(-a_k):");
    let mut total = Rational::zero();
    for p in partitions(n)? {
        let mu = multiplicity(&p);
        let product: Rational = p.parts().iter().map(|&k| -entry.coefficient(k)).product();
        let term = product.mul_int(&mu);
        println!("  {:<10} mu = {:<2} term = {}", p.to_string(), mu, term);
        total += term;
    }
    let b4 = total.mul_int(&factorial(n));
    println!("  b_{n} = {total}, B_{n} = {b4}\n");

    println!("{:>3}  {:>28}  {:>28}", "n", "partition sum", "recursion");
    for n in 1..=20 {
        let by_partitions = named_value(entry, n, MethodId::Partition, DEFAULT_COMPOSITION_CAP)?;
        let by_recursion = named_value(entry, n, MethodId::Recursion, DEFAULT_COMPOSITION_CAP)?;
        assert_eq!(by_partitions, by_recursion);
        println!("{n:>3}  {:>28}  {:>28}", by_partitions.to_string(), by_recursion.to_string());
    }
    Ok(())
}
