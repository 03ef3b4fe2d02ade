use std::collections::BTreeSet;
use std::fmt::Write as _;
use std::path::Path;

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

use super::FeatureVector;

/// Solver settings. The defaults mirror the usual LIBLINEAR ones.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct SvmConfig {
    pub c: f64,
    /// Stop once the spread of projected gradients falls below this.
    pub eps: f64,
    pub max_epochs: usize,
    pub seed: u64,
}

impl Default for SvmConfig {
    fn default() -> Self {
        SvmConfig {
            c: 1.0,
            eps: 0.1,
            max_epochs: 1000,
            seed: 1,
        }
    }
}

/// Result of one binary subproblem.
#[derive(Debug, Clone, PartialEq)]
pub struct BinarySolution {
    /// `dim + 1` weights, bias last.
    pub weights: Vec<f64>,
    pub alpha: Vec<f64>,
    pub epochs: usize,
    /// Final `max PG - min PG` over the epoch.
    pub violation: f64,
    /// Dual objective before training and after every epoch.
    pub dual_objective: Vec<f64>,
}

fn dot_aug(x: &FeatureVector, w: &[f64]) -> f64 {
    x.dot(w) + w[w.len() - 1]
}

fn dual_objective(w: &[f64], alpha: &[f64], diag: f64) -> f64 {
    let ww: f64 = w.iter().map(|v| v * v).sum();
    let aa: f64 = alpha.iter().map(|a| a * a).sum();
    let sa: f64 = alpha.iter().sum();
    0.5 * ww + 0.5 * diag * aa - sa
}

/// Dual coordinate descent for
/// `min_a 0.5 a'(Q + I/(2C))a - sum a` subject to `a >= 0`,
/// with `Q_ij = y_i y_j x_i'x_j` on bias-augmented inputs. `y` holds +1/-1.
/// Coordinates are visited in a fresh seeded permutation every epoch.
pub fn solve_binary(x: &[FeatureVector], y: &[f64], cfg: &SvmConfig) -> Result<BinarySolution> {
    let n = x.len();
    if n == 0 || n != y.len() {
        return Err(Error::invalid("need as many labels as (at least one) samples"));
    }
    if !(cfg.c > 0.0) || !cfg.c.is_finite() {
        return Err(Error::invalid("C must be positive and finite"));
    }
    let dim = x[0].dim();
    for xi in x {
        if xi.dim() != dim {
            return Err(Error::DimensionMismatch {
                expected: dim,
                found: xi.dim(),
            });
        }
        if !xi.is_finite() {
            return Err(Error::invalid("feature vectors must be finite"));
        }
    }

    let diag = 0.5 / cfg.c;
    let qd: Vec<f64> = x.iter().map(|xi| xi.sq_norm() + 1.0 + diag).collect();
    let mut w = vec![0.0; dim + 1];
    let mut alpha = vec![0.0; n];
    let mut order: Vec<usize> = (0..n).collect();
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let mut trace = vec![0.0];
    let mut epochs = 0;
    let mut violation = f64::INFINITY;

    while epochs < cfg.max_epochs {
        order.shuffle(&mut rng);
        let mut pg_max = f64::NEG_INFINITY;
        let mut pg_min = f64::INFINITY;
        for &i in &order {
            let yi = y[i];
            let g = yi * dot_aug(&x[i], &w) - 1.0 + diag * alpha[i];
            let pg = if alpha[i] == 0.0 { g.min(0.0) } else { g };
            pg_max = pg_max.max(pg);
            pg_min = pg_min.min(pg);
            if pg.abs() > 1e-12 {
                let old = alpha[i];
                alpha[i] = (old - g / qd[i]).max(0.0);
                let step = (alpha[i] - old) * yi;
                for (j, v) in x[i].iter() {
                    w[j] += step * v;
                }
                w[dim] += step;
            }
        }
        epochs += 1;
        trace.push(dual_objective(&w, &alpha, diag));
        violation = pg_max - pg_min;
        if violation < cfg.eps {
            break;
        }
    }
    if epochs == cfg.max_epochs && violation >= cfg.eps {
        log::warn!("SVM solver hit {epochs} epochs (violation {violation:.3e})");
    }

    Ok(BinarySolution {
        weights: w,
        alpha,
        epochs,
        violation,
        dual_objective: trace,
    })
}

/// Trained linear separators, one per category (one in total for two categories).
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SvmModel {
    pub categories: Vec<String>,
    pub c: f64,
    pub dim: usize,
    /// `dim + 1` values each, bias last.
    pub weights: Vec<Vec<f64>>,
    pub epochs: Vec<usize>,
    pub violation: Vec<f64>,
}

/// Trains with C = `c` and otherwise default settings.
pub fn train_linear_svm(x: &[FeatureVector], y: &[String], c: f64) -> Result<SvmModel> {
    train_linear_svm_with(x, y, &SvmConfig { c, ..SvmConfig::default() })
}

/// One-vs-rest training. With two categories a single separator is trained
/// whose positive side is the first category (in sorted order).
pub fn train_linear_svm_with(x: &[FeatureVector], y: &[String], cfg: &SvmConfig) -> Result<SvmModel> {
    if x.len() != y.len() || x.len() < 2 {
        return Err(Error::invalid("need at least two samples with one label each"));
    }
    let categories: Vec<String> = y.iter().cloned().collect::<BTreeSet<_>>().into_iter().collect();
    if categories.len() < 2 {
        return Err(Error::invalid("training data holds a single category"));
    }
    let n_models = if categories.len() == 2 { 1 } else { categories.len() };
    let solutions: Vec<BinarySolution> = (0..n_models)
        .into_par_iter()
        .map(|k| {
            let signs: Vec<f64> = y
                .iter()
                .map(|label| if *label == categories[k] { 1.0 } else { -1.0 })
                .collect();
            let sub = SvmConfig {
                seed: cfg.seed.wrapping_add(k as u64),
                ..cfg.clone()
            };
            solve_binary(x, &signs, &sub)
        })
        .collect::<Result<_>>()?;

    Ok(SvmModel {
        categories,
        c: cfg.c,
        dim: x[0].dim(),
        epochs: solutions.iter().map(|s| s.epochs).collect(),
        violation: solutions.iter().map(|s| s.violation).collect(),
        weights: solutions.into_iter().map(|s| s.weights).collect(),
    })
}

impl SvmModel {
    /// Decision value of every category for `x`.
    pub fn decision_values(&self, x: &FeatureVector) -> Result<Vec<f64>> {
        if x.dim() != self.dim {
            return Err(Error::DimensionMismatch {
                expected: self.dim,
                found: x.dim(),
            });
        }
        if !x.is_finite() {
            return Err(Error::invalid("feature vectors must be finite"));
        }
        if self.categories.len() == 2 && self.weights.len() == 1 {
            let s = dot_aug(x, &self.weights[0]);
            Ok(vec![s, -s])
        } else {
            Ok(self.weights.iter().map(|w| dot_aug(x, w)).collect())
        }
    }

    /// Category with the largest decision value; ties go to the earlier category.
    pub fn predict_one(&self, x: &FeatureVector) -> Result<&str> {
        let values = self.decision_values(x)?;
        let mut best = 0;
        for (k, &v) in values.iter().enumerate() {
            if v > values[best] {
                best = k;
            }
        }
        Ok(&self.categories[best])
    }

    pub fn to_text(&self) -> Result<String> {
        for c in &self.categories {
            if c.is_empty() || c.contains(['\t', '\n', '\r']) {
                return Err(Error::invalid(format!("category `{}` cannot be stored", c.escape_debug())));
            }
        }
        let join = |v: &[f64]| v.iter().map(|x| format!("{x:.16e}")).collect::<Vec<_>>().join(" ");
        let mut out = String::new();
        writeln!(out, "svm-model\t1").unwrap();
        writeln!(out, "dim\t{}", self.dim).unwrap();
        writeln!(out, "c\t{:.16e}", self.c).unwrap();
        writeln!(out, "categories\t{}", self.categories.len()).unwrap();
        for c in &self.categories {
            writeln!(out, "category\t{c}").unwrap();
        }
        writeln!(out, "weights\t{}", self.weights.len()).unwrap();
        for (k, w) in self.weights.iter().enumerate() {
            writeln!(
                out,
                "w\t{}\t{:.16e}\t{}",
                self.epochs[k],
                self.violation[k],
                join(w)
            )
            .unwrap();
        }
        Ok(out)
    }

    pub fn from_text(text: &str) -> Result<Self> {
        let path = Path::new("<svm-model>");
        let mut lines = text.lines().enumerate();
        let mut field = |key: &str| -> Result<(usize, String)> {
            let (n, line) = lines
                .next()
                .ok_or_else(|| Error::parse(path, 0, format!("missing `{key}`")))?;
            match line.split_once('\t') {
                Some((k, v)) if k == key => Ok((n + 1, v.to_string())),
                _ => Err(Error::parse(path, n + 1, format!("expected `{key}`"))),
            }
        };
        let num = |(n, v): (usize, String)| -> Result<usize> {
            v.parse().map_err(|_| Error::parse(path, n, format!("bad count `{v}`")))
        };
        let real = |n: usize, v: &str| -> Result<f64> {
            v.parse().map_err(|_| Error::parse(path, n, format!("bad value `{v}`")))
        };

        let (n, version) = field("svm-model")?;
        if version != "1" {
            return Err(Error::parse(path, n, "unsupported version"));
        }
        let dim = num(field("dim")?)?;
        let (n, c) = field("c")?;
        let c = real(n, &c)?;
        let n_cat = num(field("categories")?)?;
        let categories = (0..n_cat)
            .map(|_| field("category").map(|(_, v)| v))
            .collect::<Result<Vec<_>>>()?;
        let n_w = num(field("weights")?)?;
        let mut weights = Vec::new();
        let mut epochs = Vec::new();
        let mut violation = Vec::new();
        for _ in 0..n_w {
            let (n, rest) = field("w")?;
            let mut parts = rest.splitn(3, '\t');
            let (Some(e), Some(v), Some(ws)) = (parts.next(), parts.next(), parts.next()) else {
                return Err(Error::parse(path, n, "expected epochs, violation and weights"));
            };
            epochs.push(e.parse().map_err(|_| Error::parse(path, n, "bad epoch count"))?);
            violation.push(real(n, v)?);
            let w = ws
                .split(' ')
                .map(|x| real(n, x))
                .collect::<Result<Vec<f64>>>()?;
            if w.len() != dim + 1 {
                return Err(Error::parse(path, n, format!("expected {} weights", dim + 1)));
            }
            weights.push(w);
        }
        let expected = if n_cat == 2 { 1 } else { n_cat };
        if n_w != expected {
            return Err(Error::parse(path, 0, format!("expected {expected} weight vectors")));
        }
        Ok(SvmModel {
            categories,
            c,
            dim,
            weights,
            epochs,
            violation,
        })
    }

    pub fn save(&self, path: &Path) -> Result<()> {
        std::fs::write(path, self.to_text()?).map_err(|e| Error::io(path, e))
    }

    pub fn load(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path).map_err(|e| Error::io(path, e))?;
        Self::from_text(&text)
    }
}

/// Predicts the category of every vector.
pub fn predict(model: &SvmModel, x: &[FeatureVector]) -> Result<Vec<String>> {
    x.iter()
        .map(|xi| model.predict_one(xi).map(str::to_string))
        .collect()
}
