use serde::{Deserialize, Serialize};

use crate::corpus::{AuthorDoc, Corpus, Vocabulary};

use super::FeatureVector;

/// Bag-of-words weighting selected in configuration.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum BowScheme {
    #[default]
    Tf,
    Boolean,
    Tfidf,
}

/// Document frequencies over a (training) corpus.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DocFrequencies {
    pub n_docs: usize,
    pub df: Vec<u32>,
}

impl DocFrequencies {
    pub fn from_corpus(train: &Corpus, vocab: &Vocabulary) -> Self {
        let mut df = vec![0u32; vocab.len()];
        for doc in train.docs() {
            for (i, _) in vocab.count(&doc.tokens).entries {
                df[i] += 1;
            }
        }
        DocFrequencies {
            n_docs: train.len(),
            df,
        }
    }

    /// `ln(N / df)`, or 0 for terms never seen.
    pub fn idf(&self, term: usize) -> f64 {
        match self.df[term] {
            0 => 0.0,
            d => (self.n_docs as f64 / d as f64).ln(),
        }
    }
}

/// Weighting applied by [`build_bow`]. Tf-idf carries the training-fold
/// document frequencies.
#[derive(Debug, Clone, Copy)]
pub enum BowWeighting<'a> {
    Tf,
    Boolean,
    TfIdf(&'a DocFrequencies),
}

/// Bag-of-words vector of `doc` over `vocab`. Tf-idf vectors are L2-normalized.
pub fn build_bow(doc: &AuthorDoc, vocab: &Vocabulary, weighting: BowWeighting<'_>) -> FeatureVector {
    let counts = vocab.count(&doc.tokens);
    let mut pairs: Vec<(usize, f64)> = counts
        .entries
        .iter()
        .map(|&(i, c)| {
            let w = match weighting {
                BowWeighting::Tf => c as f64,
                BowWeighting::Boolean => 1.0,
                BowWeighting::TfIdf(df) => c as f64 * df.idf(i),
            };
            (i, w)
        })
        .collect();
    if let BowWeighting::TfIdf(_) = weighting {
        let norm = pairs.iter().map(|(_, w)| w * w).sum::<f64>().sqrt();
        if norm > 0.0 {
            pairs.iter_mut().for_each(|(_, w)| *w /= norm);
        }
    }
    FeatureVector::from_pairs(vocab.len(), pairs).expect("vocabulary indices are unique and in range")
}
