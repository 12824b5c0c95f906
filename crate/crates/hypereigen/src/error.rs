use thiserror::Error;

/// Errors produced by hypergraph construction, parsing, tensor operations,
/// and the eigensolver.
#[derive(Debug, Error)]
pub enum Error {
    #[error("edge {index} is empty; every edge needs at least one vertex")]
    EmptyEdge { index: usize },

    #[error(
        "edge {index} is the singleton {{{vertex}}}; singleton edges are rejected unless \
         explicitly allowed"
    )]
    SingletonEdge { index: usize, vertex: usize },

    #[error("edge {index} repeats vertex {vertex}; edges are sets of distinct vertices")]
    RepeatedVertex { index: usize, vertex: usize },

    #[error("edge {index} references vertex {vertex}, but the hypergraph has {n} vertices")]
    VertexOutOfRange { index: usize, vertex: usize, n: usize },

    #[error("duplicate edge {{{edge}}} (edges {first} and {second} are the same vertex set)")]
    DuplicateEdge {
        edge: String,
        first: usize,
        second: usize,
    },

    #[error("tensor order {order} is invalid: it must be at least 2 and at least the rank {rank}")]
    OrderTooSmall { order: usize, rank: usize },

    #[error("line {line}: unknown label `{label}`; with %n={n} labels must be integers below n")]
    UnknownLabel { line: usize, label: String, n: usize },

    #[error("line {line}: bad directive `{text}`: {reason}")]
    BadDirective {
        line: usize,
        text: String,
        reason: String,
    },

    #[error(
        "hypergraph is disconnected ({components} components); the adjacency tensor has a \
         unique strictly positive eigenpair only when the hypergraph is connected"
    )]
    Disconnected { components: usize },

    #[error("hypergraph has no edges; the spectral radius is defined over a nonempty edge set")]
    NoEdges,

    #[error("hypergraph is not uniform (edge sizes range from {min} to {max}); edge values x^e \
             and their bounds are defined for uniform hypergraphs only")]
    NotUniform { min: usize, max: usize },

    #[error("vector has length {got}, expected {expected}")]
    DimensionMismatch { expected: usize, got: usize },

    #[error("vector entry {index} is {value}; entries must be finite and nonnegative")]
    NegativeEntry { index: usize, value: f64 },

    #[error("vector entry {index} is {value}; a strictly positive vector is required")]
    NotStrictlyPositive { index: usize, value: f64 },

    #[error(
        "enumeration over {count} tuples exceeds the cap of {cap}; use the closed-form path \
         for instances this large"
    )]
    EnumerationCap { count: u128, cap: u128 },

    #[error("dense tensor with n^k = {count} entries exceeds the cap of {cap}")]
    DenseCap { count: u128, cap: u128 },

    #[error(
        "power iteration did not converge in {iterations} iterations; last eigenvalue bracket \
         [{lo}, {hi}] has gap {gap}"
    )]
    NotConverged {
        iterations: usize,
        lo: f64,
        hi: f64,
        gap: f64,
    },

    #[error("closed-form eigenpair for the {degree}-regular hypergraph has residual {residual}, \
             above the certification threshold {threshold}")]
    CertificateResidual {
        degree: usize,
        residual: f64,
        threshold: f64,
    },

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("surjection count needs 1 <= r <= k, got r={r}, k={k}")]
    BadSurjectionArgs { r: usize, k: usize },
}

pub type Result<T> = std::result::Result<T, Error>;
