//! The adjacency-tensor operator of a hypergraph.
//!
//! For an order-`k` hypergraph the tensor holds `a(e) = |e|/|S(e)|` at every
//! expansion of every edge. [`apply`] contracts it against the last `k-1`
//! slots of a vertex vector without materializing anything; [`materialize_dense`]
//! builds the full `n^k` array for small instances so the two can be checked
//! against each other.

use std::io::{self, Write};

use crate::error::{Error, Result};
use crate::expansion::{edge_expansion, Neumaier};
use crate::graph::Hypergraph;

/// Largest number of entries [`materialize_dense`] will allocate.
pub const DENSE_CAP: u128 = 10_000_000;

fn validate_vector(h: &Hypergraph, x: &[f64]) -> Result<()> {
    if x.len() != h.n() {
        return Err(Error::DimensionMismatch {
            expected: h.n(),
            got: x.len(),
        });
    }
    for (index, &value) in x.iter().enumerate() {
        if !value.is_finite() || value < 0.0 {
            return Err(Error::NegativeEntry { index, value });
        }
    }
    Ok(())
}

/// One `f64` tensor weight per edge, in edge order.
pub(crate) fn edge_weights(h: &Hypergraph) -> Vec<f64> {
    let mut by_size: Vec<Option<f64>> = vec![None; h.rank() + 1];
    h.edges()
        .iter()
        .map(|e| {
            let r = e.len();
            *by_size[r].get_or_insert_with(|| {
                edge_expansion(r, h.order())
                    .expect("edge sizes are validated against the order at construction")
                    .weight_f64
            })
        })
        .collect()
}

/// Reusable per-edge subset-sum buffer for the hot contraction path.
pub(crate) struct ApplyScratch {
    subset: Vec<f64>,
}

impl ApplyScratch {
    pub(crate) fn new(h: &Hypergraph) -> Self {
        ApplyScratch {
            subset: vec![0.0; 1 << h.rank()],
        }
    }
}

/// Contracts the adjacency tensor against `x` in the last `k-1` slots:
/// `y_i = sum_{e : i in e} a(e) * sum_{alpha in S(e)_i} x^{alpha - i}`.
///
/// Edges are visited in ascending order and inclusion-exclusion subsets in
/// increasing bitmask order, so the result is reproducible bit for bit.
/// Vertices in no edge get a zero row.
pub fn apply(h: &Hypergraph, x: &[f64]) -> Result<Vec<f64>> {
    validate_vector(h, x)?;
    let weights = edge_weights(h);
    let mut scratch = ApplyScratch::new(h);
    let mut y = vec![0.0; h.n()];
    apply_into(h, &weights, x, &mut y, &mut scratch);
    Ok(y)
}

pub(crate) fn apply_into(
    h: &Hypergraph,
    weights: &[f64],
    x: &[f64],
    y: &mut [f64],
    scratch: &mut ApplyScratch,
) {
    let k = h.order() as i32;
    y.fill(0.0);
    for (j, e) in h.edges().iter().enumerate() {
        let r = e.len();
        let size = 1usize << r;
        let subset = &mut scratch.subset[..size];
        subset[0] = 0.0;
        for mask in 1..size {
            let low = mask & mask.wrapping_neg();
            let p = low.trailing_zeros() as usize;
            subset[mask] = subset[mask ^ low] + x[e[p]];
        }
        for s in subset[1..].iter_mut() {
            *s = s.powi(k - 1);
        }
        let w = weights[j];
        for (p, &v) in e.iter().enumerate() {
            let bit = 1usize << p;
            let mut acc = Neumaier::new();
            for (mask, &power) in subset.iter().enumerate().skip(1) {
                if mask & bit == 0 {
                    continue;
                }
                if (r - mask.count_ones() as usize) % 2 == 0 {
                    acc.add(power);
                } else {
                    acc.add(-power);
                }
            }
            y[v] += w * acc.value();
        }
    }
}

/// The degree-`k` form `x^T (A x) = sum_e a(e) * sum_{alpha in S(e)} x^alpha`.
pub fn quadratic_form(h: &Hypergraph, x: &[f64]) -> Result<f64> {
    validate_vector(h, x)?;
    let weights = edge_weights(h);
    let k = h.order() as i32;
    let mut total = 0.0;
    let mut subset = vec![0.0; 1 << h.rank()];
    for (j, e) in h.edges().iter().enumerate() {
        let r = e.len();
        let size = 1usize << r;
        subset[0] = 0.0;
        for mask in 1..size {
            let low = mask & mask.wrapping_neg();
            let p = low.trailing_zeros() as usize;
            subset[mask] = subset[mask ^ low] + x[e[p]];
        }
        let mut acc = Neumaier::new();
        for (mask, &s) in subset.iter().enumerate().take(size).skip(1) {
            let term = s.powi(k);
            if (r - mask.count_ones() as usize) % 2 == 0 {
                acc.add(term);
            } else {
                acc.add(-term);
            }
        }
        total += weights[j] * acc.value();
    }
    Ok(total)
}

/// Fully materialized order-`k`, dimension-`n` adjacency tensor.
#[derive(Clone, Debug)]
pub struct DenseTensor {
    n: usize,
    order: usize,
    entries: Vec<f64>,
}

/// Builds the dense adjacency tensor. Capped at `n^k <= 10^7` entries.
pub fn materialize_dense(h: &Hypergraph) -> Result<DenseTensor> {
    let n = h.n();
    let k = h.order();
    let count = (n as u128).checked_pow(k as u32).unwrap_or(u128::MAX);
    if count > DENSE_CAP {
        return Err(Error::DenseCap {
            count,
            cap: DENSE_CAP,
        });
    }
    let mut entries = vec![0.0; count as usize];
    let weights = edge_weights(h);
    for (j, e) in h.edges().iter().enumerate() {
        let full = (1u32 << e.len()) - 1;
        expansion_walk(e, n, k, 0, 0, full, &mut |flat| {
            debug_assert_eq!(entries[flat], 0.0, "expansions of distinct edges are disjoint");
            entries[flat] = weights[j];
        });
    }
    Ok(DenseTensor {
        n,
        order: k,
        entries,
    })
}

fn expansion_walk(
    edge: &[usize],
    n: usize,
    slots: usize,
    covered: u32,
    flat: usize,
    full: u32,
    emit: &mut impl FnMut(usize),
) {
    if slots == 0 {
        if covered == full {
            emit(flat);
        }
        return;
    }
    for (p, &v) in edge.iter().enumerate() {
        expansion_walk(edge, n, slots - 1, covered | (1 << p), flat * n + v, full, emit);
    }
}

impl DenseTensor {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn entries(&self) -> &[f64] {
        &self.entries
    }

    /// Entry at a full multi-index of length `order`.
    pub fn get(&self, index: &[usize]) -> f64 {
        assert_eq!(index.len(), self.order);
        let flat = index.iter().fold(0usize, |acc, &i| {
            assert!(i < self.n);
            acc * self.n + i
        });
        self.entries[flat]
    }

    /// Contraction against the last `k-1` slots, summing over every stored
    /// entry. The independent twin of [`apply`].
    pub fn apply(&self, x: &[f64]) -> Result<Vec<f64>> {
        if x.len() != self.n {
            return Err(Error::DimensionMismatch {
                expected: self.n,
                got: x.len(),
            });
        }
        let stride = self.entries.len() / self.n.max(1);
        let mut y = vec![0.0; self.n];
        for i in 0..self.n {
            let mut sum = 0.0;
            for rest in 0..stride {
                let t = self.entries[i * stride + rest];
                if t == 0.0 {
                    continue;
                }
                let mut product = 1.0;
                let mut digits = rest;
                for _ in 1..self.order {
                    product *= x[digits % self.n];
                    digits /= self.n;
                }
                sum += t * product;
            }
            y[i] = sum;
        }
        Ok(y)
    }

    /// Writes one line per nonzero entry: `i_1 i_2 ... i_k value`, indices
    /// ascending lexicographically, values with 17 significant digits.
    pub fn write_nonzero<W: Write>(&self, out: &mut W) -> io::Result<()> {
        let mut index = vec![0usize; self.order];
        for (flat, &value) in self.entries.iter().enumerate() {
            if value == 0.0 {
                continue;
            }
            let mut rest = flat;
            for slot in (0..self.order).rev() {
                index[slot] = rest % self.n;
                rest /= self.n;
            }
            let toks: Vec<String> = index.iter().map(|i| i.to_string()).collect();
            writeln!(out, "{} {:.16e}", toks.join(" "), value)?;
        }
        Ok(())
    }
}
