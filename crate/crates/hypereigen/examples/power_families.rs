//! Generalized power hypergraphs: blow every vertex into an s-block, then
//! pad each edge with fresh degree-one vertices up to size r. Powers of
//! stars and of regular hypergraphs keep the per-edge degree product
//! constant, so their spectral radius has a closed form.
//!
//! For a star on n vertices, rho((S_n)^r_s) = (n-1)^(s/r); for an
//! r0-regular k0-uniform base, rho(H^r_s) = r0^(k0*s/r).
//!
//! ```bash
//! cargo run -p hypereigen --example power_families
//! ```

use hypereigen::analysis::{edge_parameters, vertex_parameters};
use hypereigen::error::Result;
use hypereigen::families::{complete_uniform, generalized_power, star};
use hypereigen::solver::{solve_principal, SolverConfig};

fn main() -> Result<()> {
    let cfg = SolverConfig::default();

    println!("powers of the star S_3 (m = 2 edges):");
    for (s, r) in [(1usize, 2usize), (1, 3), (1, 4), (2, 4), (2, 6)] {
        let h = generalized_power(&star(3)?, s, r)?;
        let pair = solve_principal(&h, &cfg)?;
        let expected = 2f64.powf(s as f64 / r as f64);
        let gamma_big = edge_parameters(&h, &pair)?.big_gamma;
        println!(
            "  (S_3)^{r}_{s}: n={:>2} m={} rho={:.12} (closed form {expected:.12})  Gamma={gamma_big:.12}",
            h.n(),
            h.m(),
            pair.rho
        );
        assert!((pair.rho - expected).abs() < 1e-10);
        assert!((gamma_big - 1.0).abs() < 1e-10, "degree products stay constant");
    }

    println!("powers of the 3-regular K_4 (k0 = 2):");
    for (s, r) in [(1usize, 3usize), (2, 4), (2, 5)] {
        let base = complete_uniform(4, 2)?;
        let h = generalized_power(&base, s, r)?;
        let pair = solve_principal(&h, &cfg)?;
        let expected = 3f64.powf(2.0 * s as f64 / r as f64);
        println!(
            "  (K_4)^{r}_{s}: n={:>2} m={} rho={:.12} (closed form {expected:.12})",
            h.n(),
            h.m(),
            pair.rho
        );
        assert!((pair.rho - expected).abs() < 1e-10);
    }

    // Structure: (S_3)^3_1 keeps the two star edges, each padded with one
    // fresh filler vertex; the center keeps degree 2, all others degree 1.
    let h = generalized_power(&star(3)?, 1, 3)?;
    println!("\n(S_3)^3_1 in canonical text form:\n{}", h.to_text());
    let pair = solve_principal(&h, &cfg)?;
    let vp = vertex_parameters(&pair);
    println!(
        "entries: center {:.12}, periphery {:.12} (gamma {:.12})",
        vp.x_max, vp.x_min, vp.gamma
    );
    Ok(())
}
