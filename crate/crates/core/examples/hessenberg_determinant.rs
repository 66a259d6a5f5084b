//! b_n as a determinant.
//!
//! Solving the triangular system for b_1..b_n by Cramer's rule gives
//! b_n = (-1)^n det H, with H the lower-Hessenberg matrix whose rows are
//! (a_1 1 0 ...), (a_2 a_1 1 ...), ..., (a_n ... a_1). The unit
//! superdiagonal means the determinant never needs a division.
//!
//! ```bash
//! cargo run -p partseq --example hessenberg_determinant
//! ```

use partseq::catalog::CatalogEntry;
use partseq::exact::factorial;
use partseq::recurrence::{b_determinant, b_recursion, lower_hessenberg_det, reciprocal_matrix};

fn main() -> partseq::Result<()> {
    let a = CatalogEntry::Euler.sequence();
    let n = 6;
    let h = reciprocal_matrix(&a, n)?;
    println!("H for the Euler entry, n = {n}:");
    for row in &h {
        let cells: Vec<String> = row.iter().map(|x| format!("{:>6}", x.to_string())).collect();
        println!("  {}", cells.join(" "));
    }
    let det = lower_hessenberg_det(&h);
    println!("det H = {det}, b_{n} = {}, E_{n} = {}", b_determinant(&a, n)?, b_determinant(&a, n)?.mul_int(&factorial(n)));

    println!("\nEuler numbers E_2k from the determinant:");
    for k in 1..=10 {
        let n = 2 * k;
        let b = b_determinant(&a, n)?;
        assert_eq!(b, b_recursion(&a, n)?);
        println!("  E_{n:<3} = {}", b.mul_int(&factorial(n)));
    }
    Ok(())
}
