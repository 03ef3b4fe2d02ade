use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Sparse real vector of dimension `dim`; indices strictly increasing.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct FeatureVector {
    dim: usize,
    indices: Vec<u32>,
    values: Vec<f64>,
}

impl FeatureVector {
    /// Zero entries are dropped.
    pub fn from_dense(values: &[f64]) -> Self {
        let (indices, kept) = values
            .iter()
            .enumerate()
            .filter(|(_, v)| **v != 0.0)
            .map(|(i, &v)| (i as u32, v))
            .unzip();
        FeatureVector {
            dim: values.len(),
            indices,
            values: kept,
        }
    }

    /// From `(index, value)` pairs in any order; duplicate indices are an error.
    pub fn from_pairs(dim: usize, mut pairs: Vec<(usize, f64)>) -> Result<Self> {
        pairs.sort_by_key(|&(i, _)| i);
        if pairs.windows(2).any(|w| w[0].0 == w[1].0) {
            return Err(Error::invalid("duplicate feature index"));
        }
        if let Some(&(i, _)) = pairs.last() {
            if i >= dim {
                return Err(Error::invalid(format!("feature index {i} out of range for {dim}")));
            }
        }
        let (indices, values) = pairs
            .into_iter()
            .filter(|&(_, v)| v != 0.0)
            .map(|(i, v)| (i as u32, v))
            .unzip();
        Ok(FeatureVector { dim, indices, values })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn nnz(&self) -> usize {
        self.indices.len()
    }

    pub fn iter(&self) -> impl Iterator<Item = (usize, f64)> + '_ {
        self.indices
            .iter()
            .zip(&self.values)
            .map(|(&i, &v)| (i as usize, v))
    }

    pub fn to_dense(&self) -> Vec<f64> {
        let mut out = vec![0.0; self.dim];
        for (i, v) in self.iter() {
            out[i] = v;
        }
        out
    }

    pub fn sq_norm(&self) -> f64 {
        self.values.iter().map(|v| v * v).sum()
    }

    /// `w . x` over the first `dim` weights.
    pub fn dot(&self, w: &[f64]) -> f64 {
        self.iter().map(|(i, v)| w[i] * v).sum()
    }

    pub fn is_finite(&self) -> bool {
        self.values.iter().all(|v| v.is_finite())
    }

    pub fn scale(&mut self, factor: f64) {
        self.values.iter_mut().for_each(|v| *v *= factor);
    }
}

/// Per-dimension standardization fitted on training vectors.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Standardizer {
    mean: Vec<f64>,
    inv_std: Vec<f64>,
}

impl Standardizer {
    pub fn fit(xs: &[FeatureVector]) -> Result<Self> {
        let dim = xs.first().map_or(0, FeatureVector::dim);
        let n = xs.len() as f64;
        let mut mean = vec![0.0; dim];
        let mut sq = vec![0.0; dim];
        for x in xs {
            if x.dim() != dim {
                return Err(Error::DimensionMismatch {
                    expected: dim,
                    found: x.dim(),
                });
            }
            for (i, v) in x.iter() {
                mean[i] += v;
                sq[i] += v * v;
            }
        }
        let inv_std = mean
            .iter_mut()
            .zip(&sq)
            .map(|(m, s)| {
                *m /= n;
                let var = (s / n - *m * *m).max(0.0);
                if var > 0.0 {
                    1.0 / var.sqrt()
                } else {
                    0.0
                }
            })
            .collect();
        Ok(Standardizer { mean, inv_std })
    }

    /// Constant dimensions map to 0.
    pub fn transform(&self, x: &FeatureVector) -> Result<FeatureVector> {
        if x.dim() != self.mean.len() {
            return Err(Error::DimensionMismatch {
                expected: self.mean.len(),
                found: x.dim(),
            });
        }
        let dense = x.to_dense();
        let out: Vec<f64> = dense
            .iter()
            .zip(self.mean.iter().zip(&self.inv_std))
            .map(|(v, (m, s))| (v - m) * s)
            .collect();
        Ok(FeatureVector::from_dense(&out))
    }
}
