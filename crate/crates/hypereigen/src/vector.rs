use crate::error::{Error, Result};

/// A nonnegative vertex vector carrying the tensor order it is paired with.
///
/// The order `k` fixes the normalization in use: a unit vector satisfies
/// `sum_i x_i^k = 1`. Principal eigenvectors are strictly positive and unit
/// in this sense.
#[derive(Clone, Debug, PartialEq)]
pub struct PositiveVector {
    values: Vec<f64>,
    order: usize,
}

impl PositiveVector {
    /// Wraps finite nonnegative entries.
    pub fn nonnegative(values: Vec<f64>, order: usize) -> Result<Self> {
        if order < 2 {
            return Err(Error::OrderTooSmall { order, rank: 0 });
        }
        for (index, &value) in values.iter().enumerate() {
            if !value.is_finite() || value < 0.0 {
                return Err(Error::NegativeEntry { index, value });
            }
        }
        Ok(PositiveVector { values, order })
    }

    /// Wraps finite strictly positive entries.
    pub fn strictly_positive(values: Vec<f64>, order: usize) -> Result<Self> {
        let v = Self::nonnegative(values, order)?;
        for (index, &value) in v.values.iter().enumerate() {
            if value <= 0.0 {
                return Err(Error::NotStrictlyPositive { index, value });
            }
        }
        Ok(v)
    }

    /// The unit uniform vector `(n^{-1/k}, ..., n^{-1/k})`.
    pub fn uniform(n: usize, order: usize) -> Self {
        let entry = (n as f64).powf(-1.0 / order as f64);
        PositiveVector {
            values: vec![entry; n],
            order,
        }
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn as_slice(&self) -> &[f64] {
        &self.values
    }

    pub fn get(&self, i: usize) -> f64 {
        self.values[i]
    }

    pub fn into_values(self) -> Vec<f64> {
        self.values
    }

    /// The norm `(sum_i x_i^k)^{1/k}` for the vector's own order `k`.
    pub fn norm(&self) -> f64 {
        let k = self.order as i32;
        let sum: f64 = self.values.iter().map(|v| v.powi(k)).sum();
        sum.powf(1.0 / self.order as f64)
    }

    pub fn is_unit(&self, tol: f64) -> bool {
        (self.norm() - 1.0).abs() <= tol
    }

    /// Rescales to unit norm. The vector must not be all zero.
    pub fn normalized(mut self) -> Self {
        let norm = self.norm();
        assert!(norm > 0.0, "cannot normalize the zero vector");
        for v in &mut self.values {
            *v /= norm;
        }
        self
    }

    pub fn min_entry(&self) -> f64 {
        self.values.iter().copied().fold(f64::INFINITY, f64::min)
    }

    pub fn max_entry(&self) -> f64 {
        self.values.iter().copied().fold(f64::NEG_INFINITY, f64::max)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_bad_entries() {
        assert!(PositiveVector::nonnegative(vec![0.0, 1.0], 2).is_ok());
        assert!(PositiveVector::nonnegative(vec![-0.5], 2).is_err());
        assert!(PositiveVector::nonnegative(vec![f64::NAN], 2).is_err());
        assert!(PositiveVector::strictly_positive(vec![1.0, 0.0], 2).is_err());
        assert!(PositiveVector::nonnegative(vec![1.0], 1).is_err());
    }

    #[test]
    fn uniform_vector_is_unit() {
        for k in 2..=5 {
            for n in 1..=8 {
                let u = PositiveVector::uniform(n, k);
                assert!(u.is_unit(1e-12), "n={n} k={k} norm={}", u.norm());
            }
        }
    }

    #[test]
    fn normalization_fixes_the_order_k_norm() {
        let v = PositiveVector::nonnegative(vec![0.3, 1.7, 0.2], 3)
            .unwrap()
            .normalized();
        assert!(v.is_unit(1e-14));
        assert!((v.norm() - 1.0).abs() <= 1e-14);
    }

    #[test]
    fn extremes() {
        let v = PositiveVector::nonnegative(vec![0.4, 0.1, 0.9], 2).unwrap();
        assert_eq!(v.min_entry(), 0.1);
        assert_eq!(v.max_entry(), 0.9);
    }
}
