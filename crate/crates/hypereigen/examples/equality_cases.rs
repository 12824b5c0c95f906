//! When do the bounds become equalities? Each audited inequality carries a
//! structural characterization of its tight cases; this example shows the
//! three canonical situations: regular instances (everything tight), stars
//! (the gamma bounds tight without regularity), and near-misses that look
//! tight to the eye but not to the audit.
//!
//! ```bash
//! cargo run -p hypereigen --example equality_cases
//! ```

use hypereigen::analysis::{check_extreme_entry_bounds, full_report};
use hypereigen::error::Result;
use hypereigen::families::{complete_uniform, star};
use hypereigen::graph::Hypergraph;
use hypereigen::solver::{solve_principal, SolverConfig};

fn main() -> Result<()> {
    let cfg = SolverConfig::default();

    // Regular: x is uniform, so every two-sided bound collapses.
    let k4 = complete_uniform(4, 2)?;
    let report = full_report(&k4, &cfg)?;
    let tight = report.checks.iter().filter(|c| c.equality).count();
    println!("K_4 (regular): {tight} of {} checks tight", report.checks.len());

    // Star: gamma = sqrt(Delta/delta) exactly, so all three gamma lower
    // bounds are tight at once even though the star is far from regular.
    let s5 = star(5)?;
    let report = full_report(&s5, &cfg)?;
    println!("\nstar_5 tight checks with diagnostics:");
    for check in report.checks.iter().filter(|c| c.equality) {
        println!("  {}", check.name);
        for note in &check.notes {
            println!("      {note}");
        }
    }

    // Near-miss: a 6-cycle with one chord is close to regular (degrees 2 and
    // 3) but no bound reaches equality - the slack stays visibly positive.
    let chord = Hypergraph::parse("a b\nb c\nc d\nd e\ne f\nf a\na d\n")?;
    let pair = solve_principal(&chord, &cfg)?;
    let checks = check_extreme_entry_bounds(&chord, &pair);
    let xmin_check = checks
        .iter()
        .find(|c| c.name == "xmin_vs_spectral_radius")
        .expect("check always present");
    println!("\ncycle_6_chord:");
    println!(
        "  x_min = {:.12} vs bound {:.12}: slack {:.3e}, equality: {}",
        xmin_check.lhs, xmin_check.rhs, xmin_check.slack, xmin_check.equality
    );
    for note in &xmin_check.notes {
        println!("  {note}");
    }
    println!("  (the tight case needs all but one entry at x_min; here two entries sit high)");
    Ok(())
}
