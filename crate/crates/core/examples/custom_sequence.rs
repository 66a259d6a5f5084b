//! Reciprocals of user-supplied coefficient sequences.
//!
//! Loads `examples/data/catalan_inverse.json` (a(x) = 1 - x C(x) with C the
//! Catalan generating function, truncated), and shows how a sequence with
//! a0 != 1 must be normalized first.
//!
//! ```bash
//! cargo run -p partseq --example custom_sequence
//! ```

use partseq::partitions::DEFAULT_COMPOSITION_CAP;
use partseq::recurrence::{evaluate, CoefficientSequence};
use partseq::{Error, MethodId, Rational};

fn main() -> partseq::Result<()> {
    let path = concat!(env!("CARGO_MANIFEST_DIR"), "/examples/data/catalan_inverse.json");
    let a = CoefficientSequence::from_json_file(path)?;
    let known = a.known_len().unwrap_or(0);
    println!("{} ({known} coefficients):", a.name());
    for n in 1..known {
        let values: Vec<String> = MethodId::ALL
            .iter()
            .map(|&m| evaluate(&a, n, m, DEFAULT_COMPOSITION_CAP).map(|e| e.value.to_string()))
            .collect::<Result<_, _>>()?;
        assert!(values.windows(2).all(|w| w[0] == w[1]));
        println!("  b_{n:<2} = {}", values[0]);
    }

    // Asking past the known coefficients is an error, not zero padding.
    match evaluate(&a, known, MethodId::Partition, DEFAULT_COMPOSITION_CAP) {
        Err(e @ Error::MissingCoefficient { .. }) => println!("  b_{known}: {e}"),
        other => panic!("unexpected {other:?}"),
    }

    let raw = vec![Rational::from(2), Rational::from(-2), Rational::from(0)];
    match CoefficientSequence::from_coefficients("doubled", raw.clone()) {
        Err(e) => println!("\nfrom_coefficients: {e}"),
        Ok(_) => unreachable!(),
    }
    let normalized = CoefficientSequence::normalized_from("doubled", raw)?;
    let b = evaluate(&normalized, 2, MethodId::Recursion, DEFAULT_COMPOSITION_CAP)?;
    let shown: Vec<String> = normalized.coefficients(2)?.iter().map(|c| c.to_string()).collect();
    println!("normalized_from: a = {}, b_2 = {}", shown.join(", "), b.value);
    Ok(())
}
