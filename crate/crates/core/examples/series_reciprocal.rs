//! Truncated power-series inversion.
//!
//! Writes a(x) = 1 + u(x) and sums the geometric series 1 - u + u^2 - ...
//! modulo x^(N+1), then checks a(x) b(x) = 1 with the Cauchy product.
//!
//! ```bash
//! cargo run -p partseq --example series_reciprocal
//! ```

use partseq::catalog::CatalogEntry;
use partseq::exact::factorial;
use partseq::recurrence::{cauchy_product, series_reciprocal, TruncatedSeries};

fn main() -> partseq::Result<()> {
    let order = 12;
    for entry in CatalogEntry::ALL {
        let a = entry.sequence();
        let b = series_reciprocal(&a, order)?;
        let check = cauchy_product(&TruncatedSeries::of(&a, order)?, &b, order)?;
        assert!(check.is_delta());
        let shown: Vec<String> = b.coefficients().iter().take(7).map(|c| c.to_string()).collect();
        println!("{:<15} 1/a(x) = {} + ...", entry.name(), shown.join(", "));
    }

    // Coefficients of x/(e^x - 1), scaled by k!, are the Bernoulli numbers.
    let b = series_reciprocal(&CatalogEntry::Bernoulli.sequence(), order)?;
    let scaled: Vec<String> = b
        .coefficients()
        .iter()
        .enumerate()
        .map(|(k, c)| c.mul_int(&factorial(k)).to_string())
        .collect();
    println!("\nB_0..B_{order}: {}", scaled.join(", "));
    Ok(())
}
