//! Principal eigenpairs and spectral bound audits for general hypergraphs.
//!
//! A hypergraph with edges of mixed cardinality is represented by an
//! order-`k` symmetric adjacency tensor: every edge of size `r <= k` is
//! spread over all ordered `k`-tuples whose distinct entries are exactly
//! that edge, each carrying weight `|e| / |S(e)|` where `|S(e)|` is the
//! surjection count `r! * S2(k, r)`. For a connected instance this tensor
//! has a unique positive principal eigenpair `(rho, x)`; the library
//! computes it with a shifted power iteration whose eigenvalue bracket is
//! certified at every step, and then audits the full catalog of known
//! inequalities between `rho`, the degree sequence, and the extreme
//! eigenvector entries — each with its slack and equality structure.
//!
//! ## Start with the examples
//!
//! The `examples/` directory is the primary interface: one runnable program
//! per capability, each small enough to read whole.
//!
//! ```text
//! examples/
//! ├── parse_and_inspect.rs   # text format, labels, degrees, connectivity
//! ├── expansion_weights.rs   # exact surjection counts and tensor weights
//! ├── operator_oracle.rs     # closed form vs enumeration vs dense tensor
//! ├── solve_star.rs          # bracketed power iteration on a star
//! ├── regular_families.rs    # certified eigenpairs of regular instances
//! ├── power_families.rs      # generalized powers and their closed forms
//! ├── full_audit.rs          # every bound checked on one instance
//! ├── equality_cases.rs      # when the bounds become equalities
//! └── audit_catalog.rs       # the full fixed + random instance sweep
//! ```
//!
//! ```bash
//! cargo run -p hypereigen --example parse_and_inspect
//! cargo run -p hypereigen --example expansion_weights
//! cargo run -p hypereigen --example operator_oracle
//! cargo run -p hypereigen --example solve_star
//! cargo run -p hypereigen --example regular_families
//! cargo run -p hypereigen --example power_families
//! cargo run -p hypereigen --example full_audit
//! cargo run -p hypereigen --example equality_cases
//! cargo run -p hypereigen --example audit_catalog
//! ```
//!
//! ## Library layout
//!
//! - [`graph`] — [`Hypergraph`]: validated edge lists, the line-oriented
//!   text format (`%n=` / `%k=` directives, labels or indices), degrees,
//!   neighborhoods, connectivity.
//! - [`families`] — stars, complete `k`-uniform hypergraphs, and
//!   generalized power constructions.
//! - [`expansion`] — exact expanded-edge combinatorics: surjection counts,
//!   tensor weights, and the inclusion–exclusion edge sums, with literal
//!   enumeration twins for cross-checking.
//! - [`operator`] — the tensor action `y = A x^{k-1}` and quadratic form in
//!   closed form, plus an explicit dense tensor for small instances.
//! - [`solver`] — shifted power iteration with certified eigenvalue
//!   brackets; residuals; one-step certificates for regular instances.
//! - [`analysis`] — every audited inequality as a [`analysis::BoundCheck`]
//!   with slack, equality flag, and structural diagnostics; full reports.
//! - [`suite`] — the fixed instance catalog, seeded random connected
//!   instances, batch audits, and the numeric cross-validation oracle.
//! - [`render`] — deterministic JSON (17-significant-digit floats, fixed
//!   field order) and human-readable tables.
//!
//! A thin `hypereigen` binary exposes the same capabilities as the
//! `analyze`, `generate`, `oracle`, and `audit-suite` subcommands.
//!
//! ## Quick taste
//!
//! ```
//! use hypereigen::analysis::full_report;
//! use hypereigen::graph::Hypergraph;
//! use hypereigen::solver::SolverConfig;
//!
//! // One pair edge and one triple edge; the tensor order defaults to 3.
//! let h = Hypergraph::parse("a b\na b c\n")?;
//! let report = full_report(&h, &SolverConfig::default())?;
//! assert!(report.all_satisfied());
//! assert!((report.rho - report.bracket.0).abs() <= 1e-9);
//! # Ok::<(), hypereigen::Error>(())
//! ```

pub mod analysis;
pub mod error;
pub mod expansion;
pub mod families;
pub mod graph;
pub mod operator;
pub mod render;
pub mod solver;
pub mod suite;
pub mod vector;

pub use error::{Error, Result};
pub use graph::{BuildOptions, ConnectivityResult, DegreeProfile, Hypergraph};
pub use vector::PositiveVector;
