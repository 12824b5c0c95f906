//! Deterministic generators for the families used throughout the test and
//! audit suites: stars, complete uniform hypergraphs, and generalized powers.

use crate::error::{Error, Result};
use crate::graph::Hypergraph;

/// Star on `n >= 2` vertices: center 0 joined to each leaf by a 2-edge.
pub fn star(n: usize) -> Result<Hypergraph> {
    if n < 2 {
        return Err(Error::InvalidParameter(format!(
            "star needs at least 2 vertices, got {n}"
        )));
    }
    let edges = (1..n).map(|leaf| vec![0, leaf]).collect();
    Hypergraph::new(n, edges)
}

/// Complete `k`-uniform hypergraph on `n` vertices: every `k`-subset is an
/// edge. Requires `2 <= k <= n`; `k = n` yields the single full edge.
pub fn complete_uniform(n: usize, k: usize) -> Result<Hypergraph> {
    if k < 2 || k > n {
        return Err(Error::InvalidParameter(format!(
            "complete uniform hypergraph needs 2 <= k <= n, got n={n}, k={k}"
        )));
    }
    let mut edges = Vec::new();
    let mut current = Vec::with_capacity(k);
    subsets(0, n, k, &mut current, &mut edges);
    Hypergraph::new(n, edges)
}

fn subsets(
    start: usize,
    n: usize,
    k: usize,
    current: &mut Vec<usize>,
    out: &mut Vec<Vec<usize>>,
) {
    if current.len() == k {
        out.push(current.clone());
        return;
    }
    let remaining = k - current.len();
    for v in start..=(n - remaining) {
        current.push(v);
        subsets(v + 1, n, k, current, out);
        current.pop();
    }
}

/// Generalized power of a uniform hypergraph.
///
/// Each vertex `v` of the base becomes a block of `s` vertices, and each edge
/// gains a fresh block of `r - k*s` degree-one vertices, producing an
/// `r`-uniform hypergraph on `s*n + (r - k*s)*m` vertices (`k` is the base
/// edge cardinality). Requires `s >= 1` and `r >= k*s`; `s = 1, r = k`
/// reproduces the base.
///
/// Vertex layout: block of base vertex `v` occupies `v*s .. (v+1)*s`; the
/// filler block of the `j`-th base edge follows all vertex blocks, in base
/// edge order.
pub fn generalized_power(base: &Hypergraph, s: usize, r: usize) -> Result<Hypergraph> {
    let k = base.uniform_size().ok_or_else(|| {
        Error::InvalidParameter("generalized power needs a uniform base with at least one edge".to_string())
    })?;
    if s < 1 {
        return Err(Error::InvalidParameter(
            "generalized power needs s >= 1".to_string(),
        ));
    }
    if r < k * s {
        return Err(Error::InvalidParameter(format!(
            "generalized power needs r >= k*s, got r={r}, k={k}, s={s}"
        )));
    }
    let filler = r - k * s;
    let n = s * base.n() + filler * base.m();
    let mut edges = Vec::with_capacity(base.m());
    for (j, e) in base.edges().iter().enumerate() {
        let mut edge = Vec::with_capacity(r);
        for &v in e {
            edge.extend(v * s..(v + 1) * s);
        }
        let start = s * base.n() + j * filler;
        edge.extend(start..start + filler);
        edges.push(edge);
    }
    Hypergraph::new(n, edges)
}
