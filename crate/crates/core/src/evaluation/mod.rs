//! Cross-validated evaluation, significance testing, collection
//! characteristics and interpretability reports.

mod cv;
mod interpret;
mod kfold;
mod stats;
mod wilcoxon;

pub use cv::{
    accuracy, build_term_matrix, cross_validate, fold_accuracy_csv, fold_seed, ClassifierConfig,
    EvalReport, FoldResult, RepresentationConfig, RepresentationKind, Significance,
};
pub use interpret::{information_gain, representative_authors, top_terms_tfidf, RepresentativeAuthor};
pub use kfold::{stratified_kfold, train_indices};
pub use stats::{
    class_imbalance, collection_stats, correlation_map, jaccard, pearson, CollectionStats,
    CorrelationTable, GenreEvaluation, CHARACTERISTICS,
};
pub use wilcoxon::{
    average_ranks, wilcoxon_signed_rank, WilcoxonMethod, WilcoxonResult, EXACT_MAX_N, MIN_N,
};
