//! Run the complete bound audit on one instance and walk through the
//! report: eigenpair, vertex/edge spread parameters, and every inequality
//! with its slack, equality flag, and structural diagnostics.
//!
//! ```bash
//! cargo run -p hypereigen --example full_audit
//! ```

use hypereigen::analysis::full_report;
use hypereigen::error::Result;
use hypereigen::graph::Hypergraph;
use hypereigen::render::{render_report_json, render_report_table};
use hypereigen::solver::SolverConfig;

fn main() -> Result<()> {
    // A dense 3-uniform core with one pendant edge: irregular enough that
    // every bound has visible slack, and the spectral radius is large enough
    // to activate the conditional lower-bound comparison.
    let mut edges: Vec<Vec<usize>> = vec![];
    for a in 0..5usize {
        for b in (a + 1)..5 {
            for c in (b + 1)..5 {
                edges.push(vec![a, b, c]);
            }
        }
    }
    edges.push(vec![0, 5, 6]);
    let h = Hypergraph::new(7, edges)?;

    let report = full_report(&h, &SolverConfig::default())?;
    print!("{}", render_report_table(&report));

    println!();
    println!(
        "tight checks: {:?}",
        report
            .checks
            .iter()
            .filter(|c| c.equality)
            .map(|c| c.name)
            .collect::<Vec<_>>()
    );
    println!(
        "worst slack: {:.3e} on {}",
        report
            .checks
            .iter()
            .map(|c| c.slack)
            .fold(f64::INFINITY, f64::min),
        report
            .checks
            .iter()
            .min_by(|a, b| a.slack.total_cmp(&b.slack))
            .map(|c| c.name)
            .unwrap_or("-")
    );

    // The same report as machine-readable JSON (fixed field order, floats at
    // 17 significant digits so they round-trip bit-exactly).
    let json = render_report_json(&report);
    println!("\nJSON report is {} bytes; first lines:", json.len());
    for line in json.lines().take(12) {
        println!("  {line}");
    }
    Ok(())
}
