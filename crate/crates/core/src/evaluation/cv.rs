//! Leakage-safe stratified cross-validation of a representation + SVM pipeline.

use std::fmt::Write as _;
use std::path::PathBuf;
use std::str::FromStr;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::classifier::{
    build_bow, predict, train_linear_svm_with, BowScheme, BowWeighting, DocFrequencies,
    FeatureVector, Standardizer, SvmConfig,
};
use crate::corpus::{build_vocabulary, Corpus, Vocabulary, DEFAULT_MAX_TERMS};
use crate::embeddings::{train_skipgram, EmbeddingConfig, WordVectors};
use crate::error::{Error, Result};
use crate::representations::{
    aggregate_corpus, build_dor_with, build_ssr, build_tcor_with, cluster_subprofiles,
    Aggregation, LogBase, TcorIdf, TermMatrix,
};

use super::kfold::{stratified_kfold, train_indices};
use super::wilcoxon::{wilcoxon_signed_rank, WilcoxonResult};

/// Document representation evaluated by [`cross_validate`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum RepresentationKind {
    Bow,
    Dor,
    Tcor,
    Ssr,
    W2vTrain,
    W2vPretrained,
}

impl RepresentationKind {
    pub const ALL: [RepresentationKind; 6] = [
        RepresentationKind::Bow,
        RepresentationKind::Dor,
        RepresentationKind::Tcor,
        RepresentationKind::Ssr,
        RepresentationKind::W2vTrain,
        RepresentationKind::W2vPretrained,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            RepresentationKind::Bow => "bow",
            RepresentationKind::Dor => "dor",
            RepresentationKind::Tcor => "tcor",
            RepresentationKind::Ssr => "ssr",
            RepresentationKind::W2vTrain => "w2v-train",
            RepresentationKind::W2vPretrained => "w2v-pretrained",
        }
    }
}

impl FromStr for RepresentationKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        RepresentationKind::ALL
            .into_iter()
            .find(|k| k.as_str() == s)
            .ok_or_else(|| {
                Error::Config(format!(
                    "unknown representation `{s}` (expected one of bow, dor, tcor, ssr, w2v-train, w2v-pretrained)"
                ))
            })
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct RepresentationConfig {
    /// Report id; defaults to the kind name.
    pub name: Option<String>,
    pub kind: RepresentationKind,
    pub max_terms: usize,
    pub aggregation: Aggregation,
    pub k_per_class: usize,
    pub tcor_idf: TcorIdf,
    pub log_base: LogBase,
    /// Skip-gram settings for `w2v-train`. The seed is replaced per fold.
    pub embedding: EmbeddingConfig,
    /// Word2vec text file for `w2v-pretrained`.
    pub pretrained: Option<PathBuf>,
}

impl Default for RepresentationConfig {
    fn default() -> Self {
        RepresentationConfig {
            name: None,
            kind: RepresentationKind::Bow,
            max_terms: DEFAULT_MAX_TERMS,
            aggregation: Aggregation::Mean,
            k_per_class: 3,
            tcor_idf: TcorIdf::default(),
            log_base: LogBase::Natural,
            embedding: EmbeddingConfig::default(),
            pretrained: None,
        }
    }
}

impl RepresentationConfig {
    pub fn of_kind(kind: RepresentationKind) -> Self {
        RepresentationConfig {
            kind,
            ..Default::default()
        }
    }

    pub fn bow() -> Self {
        Self::of_kind(RepresentationKind::Bow)
    }

    pub fn dor() -> Self {
        Self::of_kind(RepresentationKind::Dor)
    }

    pub fn tcor() -> Self {
        Self::of_kind(RepresentationKind::Tcor)
    }

    pub fn ssr() -> Self {
        Self::of_kind(RepresentationKind::Ssr)
    }

    pub fn id(&self) -> String {
        self.name
            .clone()
            .unwrap_or_else(|| self.kind.as_str().to_string())
    }

    pub fn validate(&self) -> Result<()> {
        if self.max_terms == 0 {
            return Err(Error::Config("max_terms must be positive".into()));
        }
        if self.k_per_class == 0 {
            return Err(Error::Config("k_per_class must be positive".into()));
        }
        match self.kind {
            RepresentationKind::W2vTrain => self.embedding.validate(),
            RepresentationKind::W2vPretrained if self.pretrained.is_none() => Err(Error::Config(
                "w2v-pretrained needs a `pretrained` vector file".into(),
            )),
            _ => Ok(()),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct ClassifierConfig {
    pub c: f64,
    pub bow_weighting: BowScheme,
    /// Standardize every feature on the training fold before the SVM.
    pub standardize: bool,
    pub eps: f64,
    pub max_epochs: usize,
}

impl Default for ClassifierConfig {
    fn default() -> Self {
        let svm = SvmConfig::default();
        ClassifierConfig {
            c: svm.c,
            bow_weighting: BowScheme::Tf,
            standardize: false,
            eps: svm.eps,
            max_epochs: svm.max_epochs,
        }
    }
}

impl ClassifierConfig {
    pub fn validate(&self) -> Result<()> {
        if !(self.c > 0.0) || !(self.eps > 0.0) || self.max_epochs == 0 {
            return Err(Error::Config(
                "classifier c, eps and max_epochs must be positive".into(),
            ));
        }
        Ok(())
    }
}

/// Fraction of positions where `pred` equals `truth`.
pub fn accuracy<S: AsRef<str>, T: AsRef<str>>(pred: &[S], truth: &[T]) -> Result<f64> {
    if pred.len() != truth.len() {
        return Err(Error::DimensionMismatch {
            expected: truth.len(),
            found: pred.len(),
        });
    }
    if pred.is_empty() {
        return Err(Error::invalid("accuracy of an empty prediction set"));
    }
    let hits = pred
        .iter()
        .zip(truth)
        .filter(|(p, t)| p.as_ref() == t.as_ref())
        .count();
    Ok(hits as f64 / pred.len() as f64)
}

/// Seed used for everything random inside fold `fold` of a run seeded `seed`.
pub fn fold_seed(seed: u64, fold: usize) -> u64 {
    seed.wrapping_add(fold as u64)
}

/// Term matrix of a distributional representation built from `train` alone.
/// `seed` drives subprofile clustering and skip-gram training.
pub fn build_term_matrix(
    train: &Corpus,
    task: &str,
    vocab: &Vocabulary,
    rep: &RepresentationConfig,
    seed: u64,
) -> Result<TermMatrix> {
    build_term_matrix_inner(train, task, vocab, rep, seed, None)
}

fn build_term_matrix_inner(
    train: &Corpus,
    task: &str,
    vocab: &Vocabulary,
    rep: &RepresentationConfig,
    seed: u64,
    pretrained: Option<&WordVectors>,
) -> Result<TermMatrix> {
    match rep.kind {
        RepresentationKind::Bow => Err(Error::invalid("bag-of-words has no term matrix")),
        RepresentationKind::Dor => build_dor_with(train, vocab, rep.log_base),
        RepresentationKind::Tcor => build_tcor_with(train, vocab, rep.log_base, rep.tcor_idf),
        RepresentationKind::Ssr => {
            let assignment = cluster_subprofiles(train, task, vocab, rep.k_per_class, seed)?;
            build_ssr(train, vocab, &assignment)
        }
        RepresentationKind::W2vTrain => {
            let cfg = EmbeddingConfig {
                seed,
                ..rep.embedding.clone()
            };
            train_skipgram(train, vocab, &cfg)
        }
        RepresentationKind::W2vPretrained => {
            let loaded = match pretrained {
                Some(vectors) => vectors.project(vocab)?,
                None => {
                    let path = rep.pretrained.as_ref().ok_or_else(|| {
                        Error::Config("w2v-pretrained needs a `pretrained` vector file".into())
                    })?;
                    WordVectors::read(path, |t| vocab.index_of(t).is_some())?.project(vocab)?
                }
            };
            log::info!(
                "pretrained vectors cover {}/{} terms",
                loaded.found,
                vocab.len()
            );
            Ok(loaded.matrix)
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct FoldResult {
    pub fold: usize,
    pub test_authors: Vec<String>,
    pub predictions: Vec<String>,
    pub truth: Vec<String>,
    pub accuracy: f64,
    /// Length of the document vectors fed to the classifier.
    pub feature_dim: usize,
}

/// A paired comparison against another report on the same folds.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Significance {
    pub baseline: String,
    pub alpha: f64,
    pub test: WilcoxonResult,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct EvalReport {
    pub representation: String,
    pub task: String,
    pub seed: u64,
    pub folds: Vec<FoldResult>,
    pub mean_accuracy: f64,
    pub significance: Vec<Significance>,
}

impl EvalReport {
    pub fn fold_accuracies(&self) -> Vec<f64> {
        self.folds.iter().map(|f| f.accuracy).collect()
    }

    /// Wilcoxon signed-rank test of this report's fold accuracies against
    /// `baseline`'s; both must come from the same partition.
    pub fn compare_to(&mut self, baseline: &EvalReport, alpha: f64) -> Result<&Significance> {
        if baseline.task != self.task || baseline.seed != self.seed {
            return Err(Error::invalid(format!(
                "`{}` and `{}` were not evaluated on the same folds",
                self.representation, baseline.representation
            )));
        }
        let same_folds = self.folds.len() == baseline.folds.len()
            && self
                .folds
                .iter()
                .zip(&baseline.folds)
                .all(|(a, b)| a.test_authors == b.test_authors);
        if !same_folds {
            return Err(Error::invalid(format!(
                "`{}` and `{}` have different fold partitions",
                self.representation, baseline.representation
            )));
        }
        let test = wilcoxon_signed_rank(&self.fold_accuracies(), &baseline.fold_accuracies(), alpha)?;
        self.significance.push(Significance {
            baseline: baseline.representation.clone(),
            alpha,
            test,
        });
        Ok(self.significance.last().unwrap())
    }

    pub fn to_json(&self) -> Result<String> {
        serde_json::to_string_pretty(self).map_err(|e| Error::invalid(e.to_string()))
    }

    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::invalid(format!("bad report JSON: {e}")))
    }
}

/// Fold-by-representation accuracy matrix; one column per report.
pub fn fold_accuracy_csv(reports: &[EvalReport]) -> String {
    let mut out = String::from("fold");
    for r in reports {
        write!(out, ",{}", r.representation).unwrap();
    }
    out.push('\n');
    let n_folds = reports.iter().map(|r| r.folds.len()).max().unwrap_or(0);
    for f in 0..n_folds {
        write!(out, "{f}").unwrap();
        for r in reports {
            match r.folds.get(f) {
                Some(fold) => write!(out, ",{}", fold.accuracy).unwrap(),
                None => out.push(','),
            }
        }
        out.push('\n');
    }
    out
}

fn doc_features(
    train: &Corpus,
    test: &Corpus,
    task: &str,
    rep: &RepresentationConfig,
    clf: &ClassifierConfig,
    seed: u64,
    pretrained: Option<&WordVectors>,
) -> Result<(Vec<FeatureVector>, Vec<FeatureVector>)> {
    let vocab = build_vocabulary(train, rep.max_terms);
    if rep.kind == RepresentationKind::Bow {
        let df = DocFrequencies::from_corpus(train, &vocab);
        let weighting = match clf.bow_weighting {
            BowScheme::Tf => BowWeighting::Tf,
            BowScheme::Boolean => BowWeighting::Boolean,
            BowScheme::Tfidf => BowWeighting::TfIdf(&df),
        };
        let encode = |c: &Corpus| -> Vec<FeatureVector> {
            c.docs().iter().map(|d| build_bow(d, &vocab, weighting)).collect()
        };
        return Ok((encode(train), encode(test)));
    }
    let tm = build_term_matrix_inner(train, task, &vocab, rep, seed, pretrained)?;
    let encode = |c: &Corpus| -> Result<Vec<FeatureVector>> {
        Ok(aggregate_corpus(c, &tm, &vocab, rep.aggregation)?
            .iter()
            .map(|v| FeatureVector::from_dense(&v.values))
            .collect())
    };
    Ok((encode(train)?, encode(test)?))
}

/// Runs `k`-fold stratified cross-validation of `rep` + linear SVM on `task`.
///
/// Every fold builds its vocabulary, term matrix and (for tf-idf) document
/// frequencies from its training documents only. Folds run in parallel;
/// the report is identical for identical inputs.
pub fn cross_validate(
    corpus: &Corpus,
    task: &str,
    rep: &RepresentationConfig,
    clf: &ClassifierConfig,
    k: usize,
    seed: u64,
) -> Result<EvalReport> {
    rep.validate()?;
    clf.validate()?;
    let labels = corpus.labels(task)?;
    let folds = stratified_kfold(&labels, k, seed)?;

    let pretrained = match (&rep.kind, &rep.pretrained) {
        (RepresentationKind::W2vPretrained, Some(path)) => {
            let tokens: std::collections::HashSet<&str> = corpus
                .docs()
                .iter()
                .flat_map(|d| d.tokens.iter().map(String::as_str))
                .collect();
            Some(WordVectors::read(path, |t| tokens.contains(t))?)
        }
        _ => None,
    };

    let results: Vec<FoldResult> = folds
        .par_iter()
        .enumerate()
        .map(|(f, test_idx)| {
            let train_idx = train_indices(corpus.len(), test_idx);
            let train = corpus.subset(&train_idx);
            let test = corpus.subset(test_idx);
            let fseed = fold_seed(seed, f);
            let (mut x_train, mut x_test) =
                doc_features(&train, &test, task, rep, clf, fseed, pretrained.as_ref())?;
            if clf.standardize {
                let scaler = Standardizer::fit(&x_train)?;
                x_train = x_train.iter().map(|x| scaler.transform(x)).collect::<Result<_>>()?;
                x_test = x_test.iter().map(|x| scaler.transform(x)).collect::<Result<_>>()?;
            }
            let y_train = train.labels(task)?;
            let truth = test.labels(task)?;
            let svm = SvmConfig {
                c: clf.c,
                eps: clf.eps,
                max_epochs: clf.max_epochs,
                seed: fseed,
            };
            let model = train_linear_svm_with(&x_train, &y_train, &svm)?;
            let predictions = predict(&model, &x_test)?;
            let acc = accuracy(&predictions, &truth)?;
            log::debug!("{} fold {f}: accuracy {acc:.4}", rep.id());
            Ok(FoldResult {
                fold: f,
                test_authors: test.docs().iter().map(|d| d.author_id.clone()).collect(),
                predictions,
                truth,
                accuracy: acc,
                feature_dim: x_train.first().map_or(0, FeatureVector::dim),
            })
        })
        .collect::<Result<_>>()?;

    let mean_accuracy = results.iter().map(|f| f.accuracy).sum::<f64>() / results.len() as f64;
    Ok(EvalReport {
        representation: rep.id(),
        task: task.to_string(),
        seed,
        folds: results,
        mean_accuracy,
        significance: Vec::new(),
    })
}
