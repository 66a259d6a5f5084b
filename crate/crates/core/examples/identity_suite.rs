//! The Fibonacci sum identities, vanishing odd Bernoulli numbers, and the
//! agreement of each even-index entry with its full counterpart.
//!
//! ```bash
//! cargo run -p partseq --example identity_suite -- 15
//! ```

use std::collections::BTreeMap;

use partseq::catalog::identity_suite;

fn main() -> partseq::Result<()> {
    let n_max: usize = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(10);
    let report = identity_suite(n_max)?;
    let mut by_identity: BTreeMap<&str, (usize, usize)> = BTreeMap::new();
    for c in &report.checks {
        let entry = by_identity.entry(c.identity.name()).or_default();
        entry.0 += 1;
        entry.1 += usize::from(c.passed());
    }
    for (name, (total, passed)) in by_identity {
        println!("{name:<28} {passed}/{total}");
    }
    for c in report.failures() {
        println!("FAILED {} at n = {}: {} != {}", c.identity, c.n, c.lhs, c.rhs);
    }
    if !report.passed() {
        std::process::exit(1);
    }
    Ok(())
}
