//! Solve the principal eigenpair of a star and watch the eigenvalue bracket
//! contract; compare the result against the star's closed forms.
//!
//! For the star on n vertices the spectral radius is sqrt(n-1), the center
//! entry is 1/sqrt(2), and every leaf entry is 1/sqrt(2(n-1)).
//!
//! ```bash
//! cargo run -p hypereigen --example solve_star
//! ```

use hypereigen::error::Result;
use hypereigen::families::star;
use hypereigen::solver::{solve_traced, SolverConfig};

fn main() -> Result<()> {
    let n = 6;
    let h = star(n)?;
    let cfg = SolverConfig {
        tolerance: 1e-12,
        ..SolverConfig::default()
    };
    let (pair, trace) = solve_traced(&h, &cfg)?;

    println!("star on {n} vertices, tolerance {:.0e}:", cfg.tolerance);
    println!("bracket per iteration (first 8, then the last):");
    for (i, (lo, hi)) in trace.iter().take(8).enumerate() {
        println!("  iter {i:>3}: [{lo:.15}, {hi:.15}]  width {:.3e}", hi - lo);
    }
    if trace.len() > 8 {
        let (lo, hi) = trace[trace.len() - 1];
        println!("  ...");
        println!(
            "  iter {:>3}: [{lo:.15}, {hi:.15}]  width {:.3e}",
            trace.len() - 1,
            hi - lo
        );
    }

    let expected_rho = ((n - 1) as f64).sqrt();
    let expected_center = 0.5f64.sqrt();
    let expected_leaf = 1.0 / (2.0 * (n - 1) as f64).sqrt();
    println!("\nrho      = {:.15}  (closed form {expected_rho:.15})", pair.rho);
    println!("center   = {:.15}  (closed form {expected_center:.15})", pair.vector.get(0));
    println!("leaf     = {:.15}  (closed form {expected_leaf:.15})", pair.vector.get(1));
    println!("residual = {:.3e} after {} iterations", pair.residual, pair.iterations);

    assert!((pair.rho - expected_rho).abs() < 1e-11);
    assert!((pair.vector.get(0) - expected_center).abs() < 1e-11);
    assert!((pair.vector.get(1) - expected_leaf).abs() < 1e-11);
    println!("closed forms confirmed");
    Ok(())
}
