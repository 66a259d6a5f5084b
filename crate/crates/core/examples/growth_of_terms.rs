//! How many summands each method touches as n grows, and what that costs.
//!
//! ```bash
//! cargo run -p partseq --release --example growth_of_terms
//! ```

use std::time::Instant;

use partseq::catalog::CatalogEntry;
use partseq::partitions::DEFAULT_COMPOSITION_CAP;
use partseq::recurrence::evaluate;
use partseq::MethodId;

fn main() -> partseq::Result<()> {
    let methods = [MethodId::Recursion, MethodId::Composition, MethodId::Partition, MethodId::Determinant];
    print!("{:>3}", "n");
    for m in methods {
        print!("  {:>24}", m.name());
    }
    println!();
    for n in (4..=40).step_by(4) {
        print!("{n:>3}");
        for m in methods {
            // fresh sequence, so the recursion memo starts empty
            let a = CatalogEntry::Bernoulli.sequence();
            let start = Instant::now();
            match evaluate(&a, n, m, 22) {
                Ok(e) => print!("  {:>12} {:>9.2?}", e.terms, start.elapsed()),
                Err(_) => print!("  {:>24}", "(over cap)"),
            }
        }
        println!();
    }
    println!("\ncomposition sums stop at n = 22 here; the library default cap is {DEFAULT_COMPOSITION_CAP}");
    Ok(())
}
