//! Wilcoxon signed-rank test for paired samples.

use serde::{Deserialize, Serialize};
use statrs::function::erf::erfc;

use crate::error::{Error, Result};

/// Largest sample size evaluated by exact enumeration of the null distribution.
pub const EXACT_MAX_N: usize = 20;
/// Smallest number of nonzero differences the test is run on.
pub const MIN_N: usize = 5;
/// Differences (and gaps between magnitudes) below this are treated as zero.
const TIE_TOLERANCE: f64 = 1e-12;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum WilcoxonMethod {
    Exact,
    NormalApproximation,
    InsufficientN,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct WilcoxonResult {
    /// Nonzero differences used.
    pub n: usize,
    pub w_plus: f64,
    pub w_minus: f64,
    /// `min(W+, W-)`.
    pub statistic: f64,
    /// Two-sided p-value; absent when there are too few differences.
    pub p_value: Option<f64>,
    pub significant: bool,
    pub method: WilcoxonMethod,
}

/// Average ranks of `values` (ascending), treating near-equal values as ties.
pub fn average_ranks(values: &[f64]) -> Vec<f64> {
    let mut order: Vec<usize> = (0..values.len()).collect();
    order.sort_by(|&a, &b| values[a].total_cmp(&values[b]));
    let mut ranks = vec![0.0; values.len()];
    let mut start = 0;
    while start < order.len() {
        let mut end = start + 1;
        while end < order.len()
            && values[order[end]] - values[order[start]]
                <= TIE_TOLERANCE * values[order[start]].abs().max(1.0)
        {
            end += 1;
        }
        let rank = (start + end + 1) as f64 / 2.0;
        for &i in &order[start..end] {
            ranks[i] = rank;
        }
        start = end;
    }
    ranks
}

/// Two-sided signed-rank test of `a - b` at level `alpha`.
///
/// Zero differences are dropped and tied magnitudes share their average
/// rank. For up to [`EXACT_MAX_N`] differences the p-value is the exact
/// fraction of the 2^n equally likely sign assignments whose statistic is
/// at most the observed one; above that the normal approximation with tie
/// and continuity corrections is used.
pub fn wilcoxon_signed_rank(a: &[f64], b: &[f64], alpha: f64) -> Result<WilcoxonResult> {
    if a.len() != b.len() {
        return Err(Error::invalid(format!(
            "paired samples differ in length ({} vs {})",
            a.len(),
            b.len()
        )));
    }
    if a.iter().chain(b).any(|x| !x.is_finite()) {
        return Err(Error::invalid("paired samples must be finite"));
    }
    let diffs: Vec<f64> = a
        .iter()
        .zip(b)
        .map(|(x, y)| x - y)
        .filter(|d| d.abs() > TIE_TOLERANCE)
        .collect();
    let n = diffs.len();
    let ranks = average_ranks(&diffs.iter().map(|d| d.abs()).collect::<Vec<_>>());
    let w_plus: f64 = diffs.iter().zip(&ranks).filter(|(d, _)| **d > 0.0).map(|(_, r)| r).sum::<f64>() + 0.0;
    let w_minus: f64 = diffs.iter().zip(&ranks).filter(|(d, _)| **d < 0.0).map(|(_, r)| r).sum::<f64>() + 0.0;
    let statistic = w_plus.min(w_minus);

    let (p_value, method) = if n < MIN_N {
        (None, WilcoxonMethod::InsufficientN)
    } else if n <= EXACT_MAX_N {
        (Some(exact_p_value(&ranks, statistic)), WilcoxonMethod::Exact)
    } else {
        (Some(normal_p_value(&ranks, w_plus)), WilcoxonMethod::NormalApproximation)
    };

    Ok(WilcoxonResult {
        n,
        w_plus,
        w_minus,
        statistic,
        p_value,
        significant: p_value.is_some_and(|p| p <= alpha),
        method,
    })
}

/// Exact two-sided p-value from the distribution of W+ under random signs,
/// computed by subset-sum counting over doubled (integral) ranks.
fn exact_p_value(ranks: &[f64], statistic: f64) -> f64 {
    let doubled: Vec<usize> = ranks.iter().map(|r| (2.0 * r).round() as usize).collect();
    let total: usize = doubled.iter().sum();
    let mut counts = vec![0u64; total + 1];
    counts[0] = 1;
    let mut reach = 0;
    for &r in &doubled {
        reach += r;
        for s in (r..=reach).rev() {
            counts[s] += counts[s - r];
        }
    }
    let observed = (2.0 * statistic).round() as usize;
    let extreme: u64 = counts
        .iter()
        .enumerate()
        .filter(|&(s, _)| s.min(total - s) <= observed)
        .map(|(_, &c)| c)
        .sum();
    extreme as f64 / (1u64 << ranks.len()) as f64
}

fn normal_p_value(ranks: &[f64], w_plus: f64) -> f64 {
    let n = ranks.len() as f64;
    let mean = n * (n + 1.0) / 4.0;
    let mut sorted = ranks.to_vec();
    sorted.sort_by(f64::total_cmp);
    let mut tie_term = 0.0;
    let mut i = 0;
    while i < sorted.len() {
        let mut j = i + 1;
        while j < sorted.len() && sorted[j] == sorted[i] {
            j += 1;
        }
        let t = (j - i) as f64;
        tie_term += t * t * t - t;
        i = j;
    }
    let var = n * (n + 1.0) * (2.0 * n + 1.0) / 24.0 - tie_term / 48.0;
    if var <= 0.0 {
        return 1.0;
    }
    let z = ((w_plus - mean).abs() - 0.5).max(0.0) / var.sqrt();
    erfc(z / std::f64::consts::SQRT_2).min(1.0)
}
