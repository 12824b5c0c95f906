//! Principal eigenpair computation.
//!
//! A connected hypergraph has a unique eigenvalue with a strictly positive
//! eigenvector, reached here by shifted higher-order power iteration: each
//! step contracts the tensor, adds `shift * x^{k-1}` entrywise, takes the
//! `(k-1)`-th root, and rescales to unit order-`k` norm. The running ratios
//! `(Ax)_i / x_i^{k-1}` bracket the spectral radius from both sides; the
//! iteration stops when the bracket closes to the requested tolerance.

use crate::error::{Error, Result};
use crate::graph::Hypergraph;
use crate::operator::{apply, edge_weights, apply_into, ApplyScratch};
use crate::vector::PositiveVector;

/// Residual threshold for certifying the closed-form eigenpair of a regular
/// hypergraph.
pub const REGULAR_CERT_TOL: f64 = 1e-10;

/// Power-iteration configuration.
#[derive(Clone, Debug)]
pub struct SolverConfig {
    /// Stop when the eigenvalue bracket `hi - lo` is at most this.
    pub tolerance: f64,
    pub max_iterations: usize,
    /// Diagonal shift; `None` uses the maximum degree, which guarantees
    /// convergence on connected input (an unshifted iteration can cycle, for
    /// instance on bipartite graphs).
    pub shift: Option<f64>,
    /// Start vector; `None` uses the uniform unit vector. Must be strictly
    /// positive; it is rescaled before use.
    pub start: Option<Vec<f64>>,
}

impl Default for SolverConfig {
    fn default() -> Self {
        SolverConfig {
            tolerance: 1e-10,
            max_iterations: 200_000,
            shift: None,
            start: None,
        }
    }
}

/// A converged eigenpair: `apply(H, x) = rho * x^{[k-1]}` up to `residual`.
#[derive(Clone, Debug)]
pub struct PrincipalEigenpair {
    pub rho: f64,
    pub vector: PositiveVector,
    /// `max_i |(Ax)_i - rho * x_i^{k-1}|` at the returned pair.
    pub residual: f64,
    pub iterations: usize,
    /// Final Collatz bracket `[lo, hi]`; it contains `rho`.
    pub bracket: (f64, f64),
}

/// Computes the principal eigenpair of a connected hypergraph.
pub fn solve_principal(h: &Hypergraph, cfg: &SolverConfig) -> Result<PrincipalEigenpair> {
    solve_impl(h, cfg, None)
}

/// Like [`solve_principal`], also returning the `(lo, hi)` ratio bracket of
/// every iteration, the last entry being the converged bracket.
pub fn solve_traced(
    h: &Hypergraph,
    cfg: &SolverConfig,
) -> Result<(PrincipalEigenpair, Vec<(f64, f64)>)> {
    let mut trace = Vec::new();
    let pair = solve_impl(h, cfg, Some(&mut trace))?;
    Ok((pair, trace))
}

fn solve_impl(
    h: &Hypergraph,
    cfg: &SolverConfig,
    mut trace: Option<&mut Vec<(f64, f64)>>,
) -> Result<PrincipalEigenpair> {
    if h.m() == 0 {
        return Err(Error::NoEdges);
    }
    let connectivity = h.connectivity();
    if !connectivity.is_connected() {
        return Err(Error::Disconnected {
            components: connectivity.count,
        });
    }
    if !(cfg.tolerance.is_finite() && cfg.tolerance > 0.0) {
        return Err(Error::InvalidParameter(format!(
            "tolerance must be positive and finite, got {}",
            cfg.tolerance
        )));
    }
    if cfg.max_iterations == 0 {
        return Err(Error::InvalidParameter(
            "max_iterations must be at least 1".to_string(),
        ));
    }
    let shift = cfg.shift.unwrap_or(h.degrees().max as f64);
    if !(shift.is_finite() && shift >= 0.0) {
        return Err(Error::InvalidParameter(format!(
            "shift must be nonnegative and finite, got {shift}"
        )));
    }

    let k = h.order();
    let km1 = k as i32 - 1;
    let mut x = match &cfg.start {
        Some(values) => {
            if values.len() != h.n() {
                return Err(Error::DimensionMismatch {
                    expected: h.n(),
                    got: values.len(),
                });
            }
            PositiveVector::strictly_positive(values.clone(), k)?.normalized()
        }
        None => PositiveVector::uniform(h.n(), k),
    }
    .into_values();

    let weights = edge_weights(h);
    let mut scratch = ApplyScratch::new(h);
    let mut y = vec![0.0; h.n()];
    let mut last = (f64::NEG_INFINITY, f64::INFINITY);

    for iteration in 1..=cfg.max_iterations {
        apply_into(h, &weights, &x, &mut y, &mut scratch);
        let mut lo = f64::INFINITY;
        let mut hi = f64::NEG_INFINITY;
        for (yi, xi) in y.iter().zip(&x) {
            let ratio = yi / xi.powi(km1);
            lo = lo.min(ratio);
            hi = hi.max(ratio);
        }
        if let Some(t) = trace.as_deref_mut() {
            t.push((lo, hi));
        }
        last = (lo, hi);
        if hi - lo <= cfg.tolerance {
            let rho = x
                .iter()
                .zip(&y)
                .map(|(xi, yi)| xi * yi)
                .sum::<f64>()
                .clamp(lo, hi);
            let residual = x
                .iter()
                .zip(&y)
                .map(|(xi, yi)| (yi - rho * xi.powi(km1)).abs())
                .fold(0.0, f64::max);
            return Ok(PrincipalEigenpair {
                rho,
                vector: PositiveVector::strictly_positive(x, k)?,
                residual,
                iterations: iteration,
                bracket: (lo, hi),
            });
        }
        for (xi, yi) in x.iter_mut().zip(&y) {
            *xi = (yi + shift * xi.powi(km1)).powf(1.0 / km1 as f64);
        }
        let norm: f64 = x
            .iter()
            .map(|v| v.powi(k as i32))
            .sum::<f64>()
            .powf(1.0 / k as f64);
        for xi in &mut x {
            *xi /= norm;
        }
    }

    Err(Error::NotConverged {
        iterations: cfg.max_iterations,
        lo: last.0,
        hi: last.1,
        gap: last.1 - last.0,
    })
}

/// `max_i |(Ax)_i - rho * x_i^{k-1}|` for an arbitrary candidate pair.
pub fn residual_of(h: &Hypergraph, rho: f64, x: &PositiveVector) -> Result<f64> {
    if x.order() != h.order() {
        return Err(Error::InvalidParameter(format!(
            "vector order {} does not match the hypergraph order {}",
            x.order(),
            h.order()
        )));
    }
    let y = apply(h, x.as_slice())?;
    let km1 = h.order() as i32 - 1;
    Ok(x.as_slice()
        .iter()
        .zip(&y)
        .map(|(xi, yi)| (yi - rho * xi.powi(km1)).abs())
        .fold(0.0, f64::max))
}

/// Residual of an already-computed eigenpair.
pub fn residual(h: &Hypergraph, pair: &PrincipalEigenpair) -> Result<f64> {
    residual_of(h, pair.rho, &pair.vector)
}

/// For a regular hypergraph, returns the closed-form certificate
/// `(r, uniform unit vector)` after checking its residual against
/// [`REGULAR_CERT_TOL`]. Returns `None` when the hypergraph is not regular.
pub fn verify_regular_eigenpair(h: &Hypergraph) -> Result<Option<PrincipalEigenpair>> {
    if h.m() == 0 {
        return Err(Error::NoEdges);
    }
    let degree = match h.regular_degree() {
        Some(d) => d,
        None => return Ok(None),
    };
    let vector = PositiveVector::uniform(h.n(), h.order());
    let rho = degree as f64;
    let residual = residual_of(h, rho, &vector)?;
    if residual > REGULAR_CERT_TOL {
        return Err(Error::CertificateResidual {
            degree,
            residual,
            threshold: REGULAR_CERT_TOL,
        });
    }
    Ok(Some(PrincipalEigenpair {
        rho,
        vector,
        residual,
        iterations: 0,
        bracket: (rho, rho),
    }))
}
