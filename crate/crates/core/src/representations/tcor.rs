use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::corpus::{Corpus, Vocabulary};
use crate::error::{Error, Result};

use super::{LogBase, RepKind, TermMatrix};

/// Which term's co-occurrence breadth discounts a TCOR weight `w[i][j]`.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum TcorIdf {
    /// Breadth of the feature term `t_j`.
    #[default]
    FeatureTerm,
    /// Breadth of the represented term `t_i`; constant along a row.
    RowTerm,
}

/// Number of documents in which each pair of distinct vocabulary terms
/// occurs together, as sparse rows. The diagonal is left out.
pub fn cooccurrence_counts(train: &Corpus, vocab: &Vocabulary) -> Vec<Vec<(u32, u32)>> {
    let m = vocab.len();
    let doc_terms: Vec<Vec<usize>> = train
        .docs()
        .iter()
        .map(|d| vocab.count(&d.tokens).entries.iter().map(|&(i, _)| i).collect())
        .collect();
    let mut postings: Vec<Vec<usize>> = vec![Vec::new(); m];
    for (j, terms) in doc_terms.iter().enumerate() {
        for &i in terms {
            postings[i].push(j);
        }
    }

    (0..m)
        .into_par_iter()
        .map_init(
            || vec![0u32; m],
            |counter, i| {
                let mut touched = Vec::new();
                for &d in &postings[i] {
                    for &t in &doc_terms[d] {
                        if t != i {
                            if counter[t] == 0 {
                                touched.push(t);
                            }
                            counter[t] += 1;
                        }
                    }
                }
                touched.sort_unstable();
                touched
                    .into_iter()
                    .map(|t| {
                        let c = std::mem::take(&mut counter[t]);
                        (t as u32, c)
                    })
                    .collect()
            },
        )
        .collect()
}

/// Term co-occurrence representation with natural logarithms and the
/// feature-term discount.
pub fn build_tcor(train: &Corpus, vocab: &Vocabulary) -> Result<TermMatrix> {
    build_tcor_with(train, vocab, LogBase::Natural, TcorIdf::FeatureTerm)
}

/// `w[i][j] = (1 + log #(i, j)) * log(|V| / V_k)` where `#(i, j)` counts the
/// documents holding both terms and `V_k` is the number of distinct terms
/// co-occurring with the discounting term (see [`TcorIdf`]). `w[i][i] = 0`.
pub fn build_tcor_with(
    train: &Corpus,
    vocab: &Vocabulary,
    base: LogBase,
    idf: TcorIdf,
) -> Result<TermMatrix> {
    if train.is_empty() {
        return Err(Error::invalid("TCOR needs at least one training document"));
    }
    let m = vocab.len();
    let counts = cooccurrence_counts(train, vocab);
    let breadth: Vec<usize> = counts.iter().map(Vec::len).collect();

    let rows = counts
        .iter()
        .enumerate()
        .map(|(i, row)| {
            row.iter()
                .map(|&(j, c)| {
                    let k = match idf {
                        TcorIdf::FeatureTerm => breadth[j as usize],
                        TcorIdf::RowTerm => breadth[i],
                    };
                    (j, base.damped(c) * base.log(m as f64 / k as f64))
                })
                .collect()
        })
        .collect();

    let names = vocab.terms().to_vec();
    TermMatrix::sparse(RepKind::Tcor, vocab.terms().to_vec(), m, rows, Some(names))
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
        // a and b share two documents; b co-occurs with a, c, d, e (4 terms); |V| = 8.
        let c = corpus(&["a b c", "a b d e", "f g h", "f g h"]);
        let v = build_vocabulary(&c, 100);
        assert_eq!(v.len(), 8);
        let m = build_tcor(&c, &v).unwrap();
        let (a, b) = (v.index_of("a").unwrap(), v.index_of("b").unwrap());
        let expected = (1.0 + 2f64.ln()) * 2f64.ln();
        assert!((m.get(a, b) - expected).abs() < 1e-12);
        assert!((m.get(a, b) - 1.1736).abs() < 1e-4);
    }

    #[test]
    fn disjoint_terms_and_diagonal_are_zero() {
        let c = corpus(&["a b", "c d"]);
        let v = build_vocabulary(&c, 100);
        let m = build_tcor(&c, &v).unwrap();
        let (a, c_) = (v.index_of("a").unwrap(), v.index_of("c").unwrap());
        assert_eq!(m.get(a, c_), 0.0);
        for i in 0..v.len() {
            assert_eq!(m.get(i, i), 0.0);
        }
    }

    #[test]
    fn counts_are_symmetric() {
        let c = corpus(&["a b c a", "b c", "c d e", "a e"]);
        let v = build_vocabulary(&c, 100);
        let counts = cooccurrence_counts(&c, &v);
        let get = |i: usize, j: usize| {
            counts[i]
                .iter()
                .find(|&&(t, _)| t as usize == j)
                .map_or(0, |&(_, n)| n)
        };
        for i in 0..v.len() {
            for j in 0..v.len() {
                assert_eq!(get(i, j), get(j, i));
            }
        }
    }

    #[test]
    fn row_term_discount_is_constant_along_rows() {
        let c = corpus(&["a b c", "a b", "a c d"]);
        let v = build_vocabulary(&c, 100);
        let m = build_tcor_with(&c, &v, LogBase::Natural, TcorIdf::RowTerm).unwrap();
        let a = v.index_of("a").unwrap();
        // a co-occurs with b, c, d: discount ln(4/3) for every entry of its row.
        let b = v.index_of("b").unwrap();
        let d = v.index_of("d").unwrap();
        assert!((m.get(a, b) - (1.0 + 2f64.ln()) * (4.0f64 / 3.0).ln()).abs() < 1e-12);
        assert!((m.get(a, d) - (4.0f64 / 3.0).ln()).abs() < 1e-12);
    }
}
