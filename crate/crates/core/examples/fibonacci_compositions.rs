//! Fibonacci numbers from compositions and partitions.
//!
//! With a_n = -n every composition term is a plain product of parts, so
//! F_2n is the number of ways to write n as an ordered sum, each part k
//! weighted by k. The partition sum reaches the same value with far fewer
//! terms.
//!
//! ```bash
//! cargo run -p partseq --example fibonacci_compositions
//! ```

use partseq::catalog::{fibonacci_reference, CatalogEntry};
use partseq::partitions::{compositions, DEFAULT_COMPOSITION_CAP};
use partseq::recurrence::evaluate;
use partseq::MethodId;

fn main() -> partseq::Result<()> {
    let even = CatalogEntry::EvenFibonacci.sequence();

    println!("F_8 from the 8 compositions of 4:");
    for c in compositions(4, DEFAULT_COMPOSITION_CAP)? {
        let product: usize = c.parts().iter().product();
        println!("  {:<10} {}", c.to_string(), product);
    }

    println!("\n{:>3} {:>10} {:>14} {:>10} {:>12}", "n", "F_2n", "compositions", "partitions", "reference");
    for n in 1..=16 {
        let by_comp = evaluate(&even, n, MethodId::Composition, DEFAULT_COMPOSITION_CAP)?;
        let by_part = evaluate(&even, n, MethodId::Partition, DEFAULT_COMPOSITION_CAP)?;
        let reference = fibonacci_reference(2 * n);
        assert_eq!(by_comp.value, reference);
        assert_eq!(by_part.value, reference);
        println!(
            "{n:>3} {:>10} {:>14} {:>10} {:>12}",
            by_comp.value.to_string(),
            by_comp.terms,
            by_part.terms,
            reference.to_string()
        );
    }

    // The odd-indexed entry reaches the same numbers at even positions.
    let full = CatalogEntry::Fibonacci.sequence();
    let f24 = evaluate(&full, 24, MethodId::Diophantine, DEFAULT_COMPOSITION_CAP)?.value;
    println!("\nF_24 via the fibonacci entry and diophantine sum: {f24}");
    Ok(())
}
