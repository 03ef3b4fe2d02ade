use crate::corpus::{Corpus, Vocabulary};
use crate::error::{Error, Result};

use super::{LogBase, RepKind, TermMatrix};

/// Document occurrence representation with natural logarithms.
///
/// Term `i` gets one feature per training document `j`:
/// `(1 + log #(i, j)) * log(|V| / N_j)` where `N_j` is the number of
/// distinct vocabulary terms in `j`, and 0 when the term is absent.
pub fn build_dor(train: &Corpus, vocab: &Vocabulary) -> Result<TermMatrix> {
    build_dor_with(train, vocab, LogBase::Natural)
}

pub fn build_dor_with(train: &Corpus, vocab: &Vocabulary, base: LogBase) -> Result<TermMatrix> {
    if train.is_empty() {
        return Err(Error::invalid("DOR needs at least one training document"));
    }
    let m = vocab.len();
    let n = train.len();
    let mut values = vec![0.0; m * n];

    for (j, doc) in train.docs().iter().enumerate() {
        let counts = vocab.count(&doc.tokens);
        if counts.distinct() == 0 {
            log::warn!(
                "author `{}` has no vocabulary terms; its DOR column is zero",
                doc.author_id
            );
            continue;
        }
        let discount = base.log(m as f64 / counts.distinct() as f64);
        for &(i, c) in &counts.entries {
            values[i * n + j] = base.damped(c) * discount;
        }
    }

    let names = train.docs().iter().map(|d| d.author_id.clone()).collect();
    TermMatrix::dense(RepKind::Dor, vocab.terms().to_vec(), n, values, Some(names))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus::{build_vocabulary, AuthorDoc};
    use std::collections::BTreeMap;

    fn corpus(texts: &[&str]) -> Corpus {
        let docs = texts
            .iter()
            .enumerate()
            .map(|(i, t)| AuthorDoc::new(format!("d{i}"), *t, BTreeMap::new()))
            .collect();
        Corpus::from_docs(docs).unwrap()
    }

    #[test]
    fn hand_evaluated_weight() {
        // |V| = 8, d0 holds 4 distinct terms with `a` three times.
        let c = corpus(&["a a a b c d", "e f g h"]);
        let v = build_vocabulary(&c, 100);
        assert_eq!(v.len(), 8);
        let m = build_dor(&c, &v).unwrap();
        let a = v.index_of("a").unwrap();
        let expected = (1.0 + 3f64.ln()) * 2f64.ln();
        assert!((m.get(a, 0) - expected).abs() < 1e-12);
        assert!((m.get(a, 0) - 1.454647).abs() < 1e-6);
        assert_eq!(m.get(a, 1), 0.0);
        assert_eq!(m.dims(), 2);
        assert_eq!(m.feature_names().unwrap(), ["d0", "d1"]);
    }

    #[test]
    fn document_with_whole_vocabulary_contributes_nothing() {
        let c = corpus(&["a b c"]);
        let v = build_vocabulary(&c, 100);
        let m = build_dor(&c, &v).unwrap();
        for i in 0..3 {
            assert_eq!(m.get(i, 0), 0.0);
        }
    }

    #[test]
    fn empty_document_column_is_zero() {
        let c = corpus(&["a b", "zzz"]);
        let v = Vocabulary::from_frequencies([("a", 1), ("b", 1)], 10);
        let m = build_dor(&c, &v).unwrap();
        assert_eq!(m.row_dense(0)[1], 0.0);
        assert_eq!(m.row_dense(1)[1], 0.0);
        assert!(m.to_dense().iter().all(|x| x.is_finite() && *x >= 0.0));
    }
}
