//! Expanded-edge combinatorics.
//!
//! An edge `e` of cardinality `r` inside an order-`k` tensor is represented
//! by its expansions: the ordered `k`-tuples whose set of distinct entries is
//! exactly `e`. This module counts those tuples exactly, derives the tensor
//! weight `a(e) = |e| / |S(e)|`, and evaluates the per-edge polynomial sums
//! both in closed form (inclusion-exclusion over subset sums) and by literal
//! tuple enumeration for cross-checking.

use num::bigint::{BigInt, BigUint};
use num::rational::Ratio;
use num::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// Largest tuple count the literal enumerators will walk.
pub const ENUMERATION_CAP: u128 = 10_000_000;

/// Largest tensor order the literal enumerators accept.
pub const ENUMERATION_MAX_ORDER: usize = 8;

/// Number of surjections from a `k`-element set onto an `r`-element set,
/// computed exactly by inclusion-exclusion. Requires `1 <= r <= k`.
pub fn surjection_count(r: usize, k: usize) -> Result<BigUint> {
    if r < 1 || r > k {
        return Err(Error::BadSurjectionArgs { r, k });
    }
    let k32 = u32::try_from(k)
        .map_err(|_| Error::InvalidParameter(format!("order {k} is out of range")))?;
    let mut acc = BigInt::zero();
    for j in 0..=r {
        let term = BigInt::from(binomial(r, j)) * BigInt::from(BigUint::from(r - j).pow(k32));
        if j % 2 == 0 {
            acc += term;
        } else {
            acc -= term;
        }
    }
    debug_assert!(!acc.is_negative());
    Ok(acc
        .to_biguint()
        .expect("inclusion-exclusion count is nonnegative for r <= k"))
}

fn binomial(n: usize, j: usize) -> BigUint {
    let j = j.min(n - j.min(n));
    let mut num = BigUint::one();
    let mut den = BigUint::one();
    for i in 0..j {
        num *= BigUint::from(n - i);
        den *= BigUint::from(i + 1);
    }
    num / den
}

/// Exact expansion counts and tensor weight for one edge cardinality.
#[derive(Clone, Debug, PartialEq)]
pub struct EdgeExpansion {
    pub edge_size: usize,
    pub order: usize,
    /// `|S(e)|`: expansions of the edge.
    pub count_s: BigUint,
    /// `|S(e)_v|`: expansions starting at a fixed vertex of the edge.
    pub count_sv: BigUint,
    /// `a(e) = |e| / |S(e)|` as an exact rational.
    pub weight: Ratio<BigInt>,
    /// `a(e)` rounded once to `f64`.
    pub weight_f64: f64,
}

/// Expansion data for an edge of the given cardinality inside an order-`k`
/// tensor. Requires `1 <= edge_size <= order`.
pub fn edge_expansion(edge_size: usize, order: usize) -> Result<EdgeExpansion> {
    let count_s = surjection_count(edge_size, order)?;
    let r = BigUint::from(edge_size);
    debug_assert!((&count_s % &r).is_zero(), "|S(e)| is divisible by |e|");
    let count_sv = &count_s / &r;
    let weight = Ratio::new(BigInt::from(r), BigInt::from(count_s.clone()));
    let weight_f64 = weight
        .to_f64()
        .expect("edge weight is a small positive rational");
    Ok(EdgeExpansion {
        edge_size,
        order,
        count_s,
        count_sv,
        weight,
        weight_f64,
    })
}

fn validate_edge(edge: &[usize], x: &[f64], order: usize) -> Result<()> {
    if edge.is_empty() {
        return Err(Error::EmptyEdge { index: 0 });
    }
    if order < 2 || edge.len() > order {
        return Err(Error::OrderTooSmall {
            order,
            rank: edge.len(),
        });
    }
    for w in edge.windows(2) {
        if w[1] <= w[0] {
            return Err(Error::RepeatedVertex {
                index: 0,
                vertex: w[1],
            });
        }
    }
    if let Some(&v) = edge.last() {
        if v >= x.len() {
            return Err(Error::VertexOutOfRange {
                index: 0,
                vertex: v,
                n: x.len(),
            });
        }
    }
    for (index, &value) in x.iter().enumerate() {
        if !value.is_finite() || value < 0.0 {
            return Err(Error::NegativeEntry { index, value });
        }
    }
    Ok(())
}

fn position_of(edge: &[usize], from: usize) -> Result<usize> {
    edge.binary_search(&from)
        .map_err(|_| Error::InvalidParameter(format!("vertex {from} is not in the edge")))
}

/// Sum of `x^{alpha - from}` over all expansions `alpha` of `edge` that start
/// at `from`, in closed form.
///
/// Inclusion-exclusion over the subsets `T` of the edge that contain `from`:
/// `sum_T (-1)^{|e|-|T|} (sum_{v in T} x_v)^{k-1}`, subsets visited in
/// increasing bitmask order with compensated summation.
pub fn edge_sum_from(edge: &[usize], from: usize, x: &[f64], order: usize) -> Result<f64> {
    validate_edge(edge, x, order)?;
    let pos = position_of(edge, from)?;
    Ok(edge_sum_from_at(edge, pos, x, order))
}

/// Sum of `x^alpha` over all expansions `alpha` of `edge`, in closed form:
/// `sum_{T subseteq e} (-1)^{|e|-|T|} (sum_{v in T} x_v)^k`.
pub fn edge_sum_total(edge: &[usize], x: &[f64], order: usize) -> Result<f64> {
    validate_edge(edge, x, order)?;
    let r = edge.len();
    let mut acc = Neumaier::new();
    for mask in 1u32..(1u32 << r) {
        let mut t = 0.0;
        for (p, &v) in edge.iter().enumerate() {
            if mask & (1 << p) != 0 {
                t += x[v];
            }
        }
        let term = t.powi(order as i32);
        if (r - mask.count_ones() as usize) % 2 == 0 {
            acc.add(term);
        } else {
            acc.add(-term);
        }
    }
    Ok(acc.value())
}

pub(crate) fn edge_sum_from_at(edge: &[usize], pos: usize, x: &[f64], order: usize) -> f64 {
    let r = edge.len();
    let from_bit = 1u32 << pos;
    let mut acc = Neumaier::new();
    for mask in 1u32..(1u32 << r) {
        if mask & from_bit == 0 {
            continue;
        }
        let mut t = 0.0;
        for (p, &v) in edge.iter().enumerate() {
            if mask & (1 << p) != 0 {
                t += x[v];
            }
        }
        let term = t.powi(order as i32 - 1);
        if (r - mask.count_ones() as usize) % 2 == 0 {
            acc.add(term);
        } else {
            acc.add(-term);
        }
    }
    acc.value()
}

fn enumeration_budget(base: usize, slots: usize) -> Result<u128> {
    let count = (base as u128)
        .checked_pow(slots as u32)
        .unwrap_or(u128::MAX);
    if count > ENUMERATION_CAP {
        return Err(Error::EnumerationCap {
            count,
            cap: ENUMERATION_CAP,
        });
    }
    Ok(count)
}

fn check_enumeration_order(order: usize) -> Result<()> {
    if order > ENUMERATION_MAX_ORDER {
        return Err(Error::InvalidParameter(format!(
            "literal enumeration is capped at order {ENUMERATION_MAX_ORDER}, got {order}"
        )));
    }
    Ok(())
}

/// Literal-enumeration twin of [`edge_sum_from`]: walks every `(k-1)`-tuple
/// over the edge and keeps those that, together with `from`, cover the edge.
/// Capped at order 8 and 10^7 tuples.
pub fn enumerate_edge_sum_from(edge: &[usize], from: usize, x: &[f64], order: usize) -> Result<f64> {
    validate_edge(edge, x, order)?;
    check_enumeration_order(order)?;
    let pos = position_of(edge, from)?;
    enumeration_budget(edge.len(), order - 1)?;
    let full = (1u32 << edge.len()) - 1;
    let mut sum = 0.0;
    tuple_walk(edge, x, order - 1, 1u32 << pos, 1.0, full, &mut sum);
    Ok(sum)
}

/// Literal-enumeration twin of [`edge_sum_total`]: walks every `k`-tuple over
/// the edge and keeps those covering the edge. Capped at order 8 and 10^7
/// tuples.
pub fn enumerate_edge_sum_total(edge: &[usize], x: &[f64], order: usize) -> Result<f64> {
    validate_edge(edge, x, order)?;
    check_enumeration_order(order)?;
    enumeration_budget(edge.len(), order)?;
    let full = (1u32 << edge.len()) - 1;
    let mut sum = 0.0;
    tuple_walk(edge, x, order, 0, 1.0, full, &mut sum);
    Ok(sum)
}

fn tuple_walk(
    edge: &[usize],
    x: &[f64],
    slots: usize,
    covered: u32,
    product: f64,
    full: u32,
    sum: &mut f64,
) {
    if slots == 0 {
        if covered == full {
            *sum += product;
        }
        return;
    }
    for (p, &v) in edge.iter().enumerate() {
        tuple_walk(
            edge,
            x,
            slots - 1,
            covered | (1 << p),
            product * x[v],
            full,
            sum,
        );
    }
}

/// Neumaier-compensated accumulator for the alternating subset sums.
pub(crate) struct Neumaier {
    sum: f64,
    compensation: f64,
}

impl Neumaier {
    pub(crate) fn new() -> Self {
        Neumaier {
            sum: 0.0,
            compensation: 0.0,
        }
    }

    pub(crate) fn add(&mut self, value: f64) {
        let t = self.sum + value;
        if self.sum.abs() >= value.abs() {
            self.compensation += (self.sum - t) + value;
        } else {
            self.compensation += (value - t) + self.sum;
        }
        self.sum = t;
    }

    pub(crate) fn value(&self) -> f64 {
        self.sum + self.compensation
    }
}
