//! Bag-of-words features and a linear SVM.
//!
//! The SVM is the L2-regularized, squared-hinge (L2-loss) formulation solved
//! in the dual by coordinate descent, one-vs-rest for more than two
//! categories. A constant feature of 1 is appended so every separator has a
//! bias term.

mod bow;
mod features;
mod svm;

pub use bow::{build_bow, BowScheme, BowWeighting, DocFrequencies};
pub use features::{FeatureVector, Standardizer};
pub use svm::{
    predict, solve_binary, train_linear_svm, train_linear_svm_with, BinarySolution, SvmConfig,
    SvmModel,
};
