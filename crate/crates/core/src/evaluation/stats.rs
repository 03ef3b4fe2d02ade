//! Collection characteristics and their correlation with accuracy gains.

use std::collections::{BTreeMap, HashSet};
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::corpus::{is_symbolic, Corpus, Stopwords};
use crate::error::{Error, Result};

use super::EvalReport;

/// Corpus-level characteristics of a labeled collection.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct CollectionStats {
    /// Type-token ratio: distinct tokens over all tokens.
    #[serde(rename = "TTR")]
    pub ttr: f64,
    /// Lexical density: content tokens over all tokens. Content means neither
    /// a stopword nor punctuation.
    #[serde(rename = "LD")]
    pub ld: f64,
    /// Sophistication: share of distinct terms longer than the mean term
    /// length plus one (population) standard deviation.
    #[serde(rename = "SX")]
    pub sx: f64,
    /// Mean number of tokens per document.
    #[serde(rename = "S")]
    pub shortness: f64,
    /// Population standard deviation of the gaps between actual and ideal
    /// per-category document counts.
    #[serde(rename = "In")]
    pub imbalance: f64,
    /// Mean Jaccard overlap between the vocabularies of every pair of categories.
    #[serde(rename = "H")]
    pub hardness: f64,
}

pub const CHARACTERISTICS: [&str; 6] = ["TTR", "LD", "SX", "S", "In", "H"];

impl CollectionStats {
    pub fn values(&self) -> [f64; 6] {
        [
            self.ttr,
            self.ld,
            self.sx,
            self.shortness,
            self.imbalance,
            self.hardness,
        ]
    }

    pub fn csv_header() -> String {
        format!("corpus,task,{}", CHARACTERISTICS.join(","))
    }

    pub fn csv_row(&self, corpus: &str, task: &str) -> String {
        let values: Vec<String> = self.values().iter().map(|v| v.to_string()).collect();
        format!("{corpus},{task},{}", values.join(","))
    }
}

fn population_std(xs: &[f64]) -> f64 {
    if xs.is_empty() {
        return 0.0;
    }
    let n = xs.len() as f64;
    let mean = xs.iter().sum::<f64>() / n;
    (xs.iter().map(|x| (x - mean) * (x - mean)).sum::<f64>() / n).sqrt()
}

/// Class imbalance of the given per-category document counts.
pub fn class_imbalance(counts: &[usize]) -> f64 {
    if counts.is_empty() {
        return 0.0;
    }
    let total: usize = counts.iter().sum();
    let ideal = total as f64 / counts.len() as f64;
    let gaps: Vec<f64> = counts.iter().map(|&c| c as f64 - ideal).collect();
    population_std(&gaps)
}

/// Jaccard coefficient of two sets; 0 for two empty sets.
pub fn jaccard<T: Eq + std::hash::Hash>(a: &HashSet<T>, b: &HashSet<T>) -> f64 {
    let union = a.union(b).count();
    if union == 0 {
        0.0
    } else {
        a.intersection(b).count() as f64 / union as f64
    }
}

/// Computes the characteristics of `corpus`; imbalance and hardness use the
/// categories of `task`.
pub fn collection_stats(corpus: &Corpus, task: &str, stopwords: &Stopwords) -> Result<CollectionStats> {
    if corpus.is_empty() {
        return Err(Error::invalid("cannot characterize an empty corpus"));
    }
    let counts = corpus.category_counts(task)?;

    let total = corpus.token_count();
    let mut distinct: HashSet<&str> = HashSet::new();
    let mut content = 0usize;
    for doc in corpus.docs() {
        for t in &doc.tokens {
            distinct.insert(t);
            if !is_symbolic(t) && !stopwords.contains(t) {
                content += 1;
            }
        }
    }
    let ratio = |x: usize| if total == 0 { 0.0 } else { x as f64 / total as f64 };

    let lengths: Vec<f64> = distinct.iter().map(|t| t.chars().count() as f64).collect();
    let sx = if lengths.is_empty() {
        0.0
    } else {
        let mean = lengths.iter().sum::<f64>() / lengths.len() as f64;
        let threshold = mean + population_std(&lengths);
        lengths.iter().filter(|&&l| l > threshold).count() as f64 / lengths.len() as f64
    };

    let mut category_vocab: BTreeMap<&str, HashSet<&str>> = BTreeMap::new();
    for doc in corpus.docs() {
        category_vocab
            .entry(&doc.labels[task])
            .or_default()
            .extend(doc.tokens.iter().map(String::as_str));
    }
    let vocabs: Vec<&HashSet<&str>> = category_vocab.values().collect();
    let mut overlaps = Vec::new();
    for i in 0..vocabs.len() {
        for j in i + 1..vocabs.len() {
            overlaps.push(jaccard(vocabs[i], vocabs[j]));
        }
    }
    let hardness = if overlaps.is_empty() {
        0.0
    } else {
        overlaps.iter().sum::<f64>() / overlaps.len() as f64
    };

    Ok(CollectionStats {
        ttr: ratio(distinct.len()),
        ld: ratio(content),
        sx,
        shortness: total as f64 / corpus.len() as f64,
        imbalance: class_imbalance(&counts.values().copied().collect::<Vec<_>>()),
        hardness,
    })
}

/// Sample Pearson correlation; `None` when either side has zero variance.
pub fn pearson(xs: &[f64], ys: &[f64]) -> Result<Option<f64>> {
    if xs.len() != ys.len() {
        return Err(Error::invalid(format!(
            "correlation needs equal lengths ({} vs {})",
            xs.len(),
            ys.len()
        )));
    }
    if xs.len() < 2 {
        return Err(Error::invalid("correlation needs at least two points"));
    }
    let n = xs.len() as f64;
    let mx = xs.iter().sum::<f64>() / n;
    let my = ys.iter().sum::<f64>() / n;
    let (mut sxy, mut sxx, mut syy) = (0.0, 0.0, 0.0);
    for (x, y) in xs.iter().zip(ys) {
        let (dx, dy) = (x - mx, y - my);
        sxy += dx * dy;
        sxx += dx * dx;
        syy += dy * dy;
    }
    if sxx <= 0.0 || syy <= 0.0 {
        return Ok(None);
    }
    Ok(Some((sxy / (sxx.sqrt() * syy.sqrt())).clamp(-1.0, 1.0)))
}

/// Results of every representation and the baseline on one genre (corpus).
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct GenreEvaluation {
    pub genre: String,
    pub stats: CollectionStats,
    pub baseline_accuracy: f64,
    /// Mean accuracy per representation id.
    pub accuracies: BTreeMap<String, f64>,
}

impl GenreEvaluation {
    pub fn from_reports(
        genre: impl Into<String>,
        stats: CollectionStats,
        baseline: &EvalReport,
        reports: &[EvalReport],
    ) -> Self {
        GenreEvaluation {
            genre: genre.into(),
            stats,
            baseline_accuracy: baseline.mean_accuracy,
            accuracies: reports
                .iter()
                .map(|r| (r.representation.clone(), r.mean_accuracy))
                .collect(),
        }
    }
}

/// Pearson r between each characteristic and each representation's accuracy
/// gain over the baseline, computed across genres.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CorrelationTable {
    pub characteristics: Vec<String>,
    /// `(representation, r per characteristic)`; `None` marks an undefined r.
    pub rows: Vec<(String, Vec<Option<f64>>)>,
}

impl CorrelationTable {
    pub fn get(&self, representation: &str, characteristic: &str) -> Option<Option<f64>> {
        let col = self.characteristics.iter().position(|c| c == characteristic)?;
        self.rows
            .iter()
            .find(|(r, _)| r == representation)
            .map(|(_, v)| v[col])
    }

    /// Rows are representations, columns characteristics; undefined cells are `NA`.
    pub fn to_csv(&self) -> String {
        let mut out = format!("representation,{}\n", self.characteristics.join(","));
        for (rep, values) in &self.rows {
            out.push_str(rep);
            for v in values {
                match v {
                    Some(r) => write!(out, ",{r}").unwrap(),
                    None => out.push_str(",NA"),
                }
            }
            out.push('\n');
        }
        out
    }
}

pub fn correlation_map(genres: &[GenreEvaluation]) -> Result<CorrelationTable> {
    if genres.len() < 2 {
        return Err(Error::invalid("correlation across genres needs at least two genres"));
    }
    let reps: Vec<&String> = genres[0].accuracies.keys().collect();
    for g in &genres[1..] {
        if g.accuracies.keys().collect::<Vec<_>>() != reps {
            return Err(Error::invalid(format!(
                "genre `{}` was evaluated with a different representation set",
                g.genre
            )));
        }
    }

    let mut rows = Vec::new();
    for rep in reps {
        let gains: Vec<f64> = genres
            .iter()
            .map(|g| g.accuracies[rep] - g.baseline_accuracy)
            .collect();
        let mut values = Vec::new();
        for c in 0..CHARACTERISTICS.len() {
            let xs: Vec<f64> = genres.iter().map(|g| g.stats.values()[c]).collect();
            values.push(pearson(&xs, &gains)?);
        }
        rows.push((rep.clone(), values));
    }
    Ok(CorrelationTable {
        characteristics: CHARACTERISTICS.iter().map(|c| c.to_string()).collect(),
        rows,
    })
}
