use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::corpus::{AuthorDoc, Corpus, Vocabulary};
use crate::error::{Error, Result};

use super::TermMatrix;

/// How term vectors are weighted when summed into a document vector.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Aggregation {
    /// Weight proportional to the term's count in the document.
    #[default]
    Mean,
    /// Weight proportional to `1 + ln(count)`.
    TfWeighted,
}

/// A document embedded in the feature space of a [`TermMatrix`].
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct DocVector {
    pub values: Vec<f64>,
    pub source_author: String,
}

/// Weighted sum of the term vectors of `doc`. Out-of-vocabulary tokens are
/// skipped; the weights sum to one.
pub fn aggregate_documents(
    doc: &AuthorDoc,
    tm: &TermMatrix,
    vocab: &Vocabulary,
    weighting: Aggregation,
) -> Result<DocVector> {
    if tm.n_terms() != vocab.len() {
        return Err(Error::DimensionMismatch {
            expected: vocab.len(),
            found: tm.n_terms(),
        });
    }
    let counts = vocab.count(&doc.tokens);
    let mut values = vec![0.0; tm.dims()];
    if counts.entries.is_empty() {
        log::warn!(
            "author `{}` has no vocabulary terms; zero document vector",
            doc.author_id
        );
    } else {
        let alphas: Vec<f64> = counts
            .entries
            .iter()
            .map(|&(_, c)| match weighting {
                Aggregation::Mean => c as f64,
                Aggregation::TfWeighted => 1.0 + (c as f64).ln(),
            })
            .collect();
        let total: f64 = alphas.iter().sum();
        for (&(i, _), alpha) in counts.entries.iter().zip(alphas) {
            tm.axpy_row(i, alpha / total, &mut values);
        }
    }
    Ok(DocVector {
        values,
        source_author: doc.author_id.clone(),
    })
}

/// [`aggregate_documents`] over every document of `corpus`, in order.
pub fn aggregate_corpus(
    corpus: &Corpus,
    tm: &TermMatrix,
    vocab: &Vocabulary,
    weighting: Aggregation,
) -> Result<Vec<DocVector>> {
    corpus
        .docs()
        .par_iter()
        .map(|d| aggregate_documents(d, tm, vocab, weighting))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::representations::RepKind;
    use std::collections::BTreeMap;

    fn setup() -> (Vocabulary, TermMatrix) {
        let vocab = Vocabulary::from_frequencies([("a", 2), ("b", 1)], 10);
        let tm = TermMatrix::dense(
            RepKind::Embedding,
            vocab.terms().to_vec(),
            2,
            vec![1.0, 0.0, 0.0, 1.0],
            None,
        )
        .unwrap();
        (vocab, tm)
    }

    fn doc(text: &str) -> AuthorDoc {
        AuthorDoc::new("u", text, BTreeMap::new())
    }

    #[test]
    fn mean_of_two_terms() {
        let (v, tm) = setup();
        let d = aggregate_documents(&doc("a b"), &tm, &v, Aggregation::Mean).unwrap();
        assert_eq!(d.values, vec![0.5, 0.5]);
        assert_eq!(d.source_author, "u");
    }

    #[test]
    fn mean_weights_by_count() {
        let (v, tm) = setup();
        let d = aggregate_documents(&doc("a b a a zz"), &tm, &v, Aggregation::Mean).unwrap();
        assert_eq!(d.values, vec![0.75, 0.25]);
    }

    #[test]
    fn tf_weighted_dampens_counts() {
        let (v, tm) = setup();
        let d = aggregate_documents(&doc("a a a b"), &tm, &v, Aggregation::TfWeighted).unwrap();
        let wa = 1.0 + 3f64.ln();
        assert!((d.values[0] - wa / (wa + 1.0)).abs() < 1e-15);
        assert!((d.values.iter().sum::<f64>() - 1.0).abs() < 1e-15);
    }

    #[test]
    fn out_of_vocabulary_only_gives_zero() {
        let (v, tm) = setup();
        let d = aggregate_documents(&doc("x y z"), &tm, &v, Aggregation::Mean).unwrap();
        assert_eq!(d.values, vec![0.0, 0.0]);
    }

    #[test]
    fn matrix_must_match_vocabulary() {
        let (_, tm) = setup();
        let other = Vocabulary::from_frequencies([("a", 1)], 10);
        assert!(aggregate_documents(&doc("a"), &tm, &other, Aggregation::Mean).is_err());
    }
}
