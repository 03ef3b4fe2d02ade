//! Distributional term representations and document aggregation.
//!
//! Every builder maps each vocabulary term to a vector; documents are then
//! represented by a weighted sum of the vectors of their terms. All builders
//! look only at the corpus they are given, so callers pass the training fold.

mod aggregate;
mod dor;
mod kmeans;
mod matrix;
mod ssr;
mod subprofiles;
mod tcor;

use serde::{Deserialize, Serialize};

pub use aggregate::{aggregate_corpus, aggregate_documents, Aggregation, DocVector};
pub use dor::{build_dor, build_dor_with};
pub use kmeans::{kmeans, KMeansResult, SparsePoint};
pub use matrix::{RepKind, TermMatrix};
pub use ssr::{build_ssr, normalize_ssr, raw_ssr_weights};
pub use subprofiles::{cluster_subprofiles, SubprofileAssignment, KMEANS_RESTARTS};
pub use tcor::{build_tcor, build_tcor_with, cooccurrence_counts, TcorIdf};

/// Logarithm used by the DOR and TCOR weights.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum LogBase {
    #[default]
    Natural,
    Two,
    Ten,
}

impl LogBase {
    pub fn log(self, x: f64) -> f64 {
        match self {
            LogBase::Natural => x.ln(),
            LogBase::Two => x.log2(),
            LogBase::Ten => x.log10(),
        }
    }

    /// `1 + log(count)` for positive counts, 0 otherwise.
    pub fn damped(self, count: u32) -> f64 {
        if count == 0 {
            0.0
        } else {
            1.0 + self.log(count as f64)
        }
    }
}
