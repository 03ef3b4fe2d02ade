use crate::corpus::{Corpus, Vocabulary};
use crate::error::{Error, Result};

use super::{RepKind, SubprofileAssignment, TermMatrix};

/// Raw association of every term with every subclass, row-major `|V| x K`:
/// the sum over the subclass documents of `log2(1 + tf / len)`, where `len`
/// counts all tokens of the document.
pub fn raw_ssr_weights(
    train: &Corpus,
    vocab: &Vocabulary,
    assignment: &SubprofileAssignment,
) -> Result<Vec<f64>> {
    let k = assignment.n_subclasses();
    let mut raw = vec![0.0; vocab.len() * k];
    for doc in train.docs() {
        let sub = assignment
            .subclass_of(&doc.author_id)
            .ok_or_else(|| Error::invalid(format!("author `{}` has no subclass", doc.author_id)))?;
        if sub >= k {
            return Err(Error::invalid(format!("subclass {sub} out of range")));
        }
        let counts = vocab.count(&doc.tokens);
        if counts.doc_len == 0 {
            continue;
        }
        let len = counts.doc_len as f64;
        for &(i, c) in &counts.entries {
            raw[i * k + sub] += (1.0 + c as f64 / len).log2();
        }
    }
    Ok(raw)
}

/// Turns raw weights into per-term distributions over subclasses: each
/// subclass column is divided by its total, then each term row by its total.
/// Rows without support stay zero.
pub fn normalize_ssr(raw: &[f64], n_terms: usize, k: usize) -> Result<Vec<f64>> {
    assert_eq!(raw.len(), n_terms * k);
    let mut w = raw.to_vec();
    for col in 0..k {
        let total: f64 = (0..n_terms).map(|i| w[i * k + col]).sum();
        if total <= 0.0 {
            return Err(Error::invalid(format!(
                "subclass {col} has no weight over the vocabulary"
            )));
        }
        for i in 0..n_terms {
            w[i * k + col] /= total;
        }
    }
    for row in w.chunks_mut(k.max(1)) {
        let total: f64 = row.iter().sum();
        if total > 0.0 {
            row.iter_mut().for_each(|x| *x /= total);
        }
    }
    Ok(w)
}

/// Subprofile-specific representation: one feature per subclass of `assignment`.
pub fn build_ssr(
    train: &Corpus,
    vocab: &Vocabulary,
    assignment: &SubprofileAssignment,
) -> Result<TermMatrix> {
    if train.is_empty() {
        return Err(Error::invalid("SSR needs at least one training document"));
    }
    let k = assignment.n_subclasses();
    let raw = raw_ssr_weights(train, vocab, assignment)?;
    let values = normalize_ssr(&raw, vocab.len(), k)?;
    TermMatrix::dense(
        RepKind::Ssr,
        vocab.terms().to_vec(),
        k,
        values,
        Some(assignment.subclass_labels.clone()),
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus::{build_vocabulary, AuthorDoc};
    use std::collections::BTreeMap;

    fn corpus(docs: &[(&str, &str, &str)]) -> Corpus {
        Corpus::from_docs(
            docs.iter()
                .map(|(id, label, text)| {
                    AuthorDoc::new(*id, *text, BTreeMap::from([("g".to_string(), label.to_string())]))
                })
                .collect(),
        )
        .unwrap()
    }

    #[test]
    fn raw_contribution_is_log2() {
        let c = corpus(&[("a", "f", "t t o o o o o o o o")]);
        let v = build_vocabulary(&c, 100);
        let s = SubprofileAssignment::by_category(&c, "g").unwrap();
        let raw = raw_ssr_weights(&c, &v, &s).unwrap();
        let t = v.index_of("t").unwrap();
        assert!((raw[t] - 1.2f64.log2()).abs() < 1e-15);
        assert!((raw[t] - 0.26303).abs() < 1e-5);
    }

    #[test]
    fn exclusive_term_is_one_hot() {
        let c = corpus(&[("a", "f", "x common"), ("b", "m", "y common")]);
        let v = build_vocabulary(&c, 100);
        let s = SubprofileAssignment::by_category(&c, "g").unwrap();
        let m = build_ssr(&c, &v, &s).unwrap();
        assert_eq!(m.row_dense(v.index_of("x").unwrap()), vec![1.0, 0.0]);
        assert_eq!(m.row_dense(v.index_of("y").unwrap()), vec![0.0, 1.0]);
        assert_eq!(m.feature_names().unwrap(), ["f/0", "m/0"]);
    }

    #[test]
    fn symmetric_subclasses_split_evenly() {
        let c = corpus(&[("a", "f", "p q q"), ("b", "m", "p q q")]);
        let v = build_vocabulary(&c, 100);
        let s = SubprofileAssignment::by_category(&c, "g").unwrap();
        let m = build_ssr(&c, &v, &s).unwrap();
        for i in 0..v.len() {
            let row = m.row_dense(i);
            assert!((row[0] - 0.5).abs() < 1e-15 && (row[1] - 0.5).abs() < 1e-15);
        }
    }

    #[test]
    fn unsupported_term_row_is_zero() {
        let c = corpus(&[("a", "f", "p"), ("b", "m", "q")]);
        let v = Vocabulary::from_frequencies([("p", 1), ("q", 1), ("never", 1)], 10);
        let s = SubprofileAssignment::by_category(&c, "g").unwrap();
        let m = build_ssr(&c, &v, &s).unwrap();
        assert_eq!(m.row_dense(v.index_of("never").unwrap()), vec![0.0, 0.0]);
    }

    #[test]
    fn empty_subclass_is_an_error() {
        let c = corpus(&[("a", "f", "p"), ("b", "m", "zzz")]);
        let v = Vocabulary::from_frequencies([("p", 1)], 10);
        let s = SubprofileAssignment::by_category(&c, "g").unwrap();
        assert!(build_ssr(&c, &v, &s).is_err());
    }

    #[test]
    fn column_scaling_is_cancelled() {
        let raw = vec![1.0, 2.0, 3.0, 0.5, 0.0, 4.0];
        let base = normalize_ssr(&raw, 3, 2).unwrap();
        let mut scaled = raw.clone();
        for i in 0..3 {
            scaled[i * 2 + 1] *= 7.5;
        }
        let again = normalize_ssr(&scaled, 3, 2).unwrap();
        for (a, b) in base.iter().zip(&again) {
            assert!((a - b).abs() < 1e-12);
        }
    }
}
