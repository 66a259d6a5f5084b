//! Every method against the recursion, for the catalog and for seeded random
//! coefficient sequences.
//!
//! ```bash
//! cargo run -p partseq --release --example cross_verification -- 14
//! ```

use partseq::catalog::CatalogEntry;
use partseq::partitions::DEFAULT_COMPOSITION_CAP;
use partseq::recurrence::{random_sequence, verify_all_methods, Outcome};

fn main() -> partseq::Result<()> {
    let n_max: usize = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(12);
    let mut sequences: Vec<_> = CatalogEntry::ALL.iter().map(|e| e.sequence()).collect();
    sequences.extend((1..=5).map(|seed| random_sequence(seed, n_max)));

    let mut all_ok = true;
    for a in &sequences {
        let report = verify_all_methods(a, n_max, DEFAULT_COMPOSITION_CAP)?;
        let skipped = report
            .rows
            .iter()
            .filter(|r| matches!(r.outcome, Outcome::Skipped { .. }))
            .count();
        let time: std::time::Duration = report.rows.iter().map(|r| r.elapsed).sum();
        println!(
            "{:<16} {} checks, {} skipped, {}  ({time:?})",
            a.name(),
            report.rows.len(),
            skipped,
            if report.passed() { "all exact" } else { "MISMATCH" }
        );
        for row in report.failures() {
            println!("    n = {} {}: {:?}", row.n, row.method, row.outcome);
        }
        all_ok &= report.passed();
    }
    if !all_ok {
        std::process::exit(1);
    }
    Ok(())
}
