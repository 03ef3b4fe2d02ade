//! Author profiling with distributional term representations.
//!
//! The pipeline has two stages. First every vocabulary term receives a
//! vector built from distributional statistics of the training documents:
//!
//! * DOR ([`representations::build_dor`]) - occurrence over documents,
//! * TCOR ([`representations::build_tcor`]) - co-occurrence with other terms,
//! * SSR ([`representations::build_ssr`]) - association with author subprofiles,
//! * skip-gram embeddings ([`embeddings::train_skipgram`]) or pretrained vectors.
//!
//! Then each author's document becomes the weighted average of its term
//! vectors and a linear SVM ([`classifier::train_linear_svm`]) predicts the
//! profile (gender, age, ...). [`evaluation`] runs leakage-safe stratified
//! cross-validation, Wilcoxon signed-rank tests, and the corpus
//! characteristics used to explain where distributional features help.
//!
//! ```no_run
//! use dtrprof::corpus::synthetic::{generate, SyntheticSpec};
//! use dtrprof::evaluation::{cross_validate, RepresentationConfig, ClassifierConfig};
//!
//! let corpus = generate(&SyntheticSpec::default());
//! let report = cross_validate(
//!     &corpus,
//!     "gender",
//!     &RepresentationConfig::dor(),
//!     &ClassifierConfig::default(),
//!     10,
//!     42,
//! )
//! .unwrap();
//! println!("DOR accuracy: {:.3}", report.mean_accuracy);
//! ```

pub mod classifier;
pub mod cli;
pub mod config;
pub mod corpus;
pub mod embeddings;
mod error;
pub mod evaluation;
pub mod representations;

pub use error::{Error, Result};
