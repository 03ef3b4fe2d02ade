use std::collections::{BTreeMap, HashMap};

use super::Corpus;

pub const DEFAULT_MAX_TERMS: usize = 10_000;

/// The most frequent terms of a collection, indexed `0..len()`.
///
/// Terms are ordered by descending collection frequency; equal frequencies
/// are ordered lexicographically so the vocabulary is reproducible.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Vocabulary {
    terms: Vec<String>,
    freqs: Vec<u64>,
    index: HashMap<String, usize>,
}

/// Sparse in-vocabulary counts of one document, sorted by term index.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct TermCounts {
    pub entries: Vec<(usize, u32)>,
    /// All tokens of the document, including out-of-vocabulary ones.
    pub doc_len: usize,
}

impl TermCounts {
    pub fn in_vocab_total(&self) -> u64 {
        self.entries.iter().map(|&(_, c)| c as u64).sum()
    }

    pub fn distinct(&self) -> usize {
        self.entries.len()
    }
}

impl Vocabulary {
    /// Builds a vocabulary from explicit `(term, frequency)` pairs, applying
    /// the usual ordering and truncation.
    pub fn from_frequencies<I, S>(freqs: I, max_terms: usize) -> Self
    where
        I: IntoIterator<Item = (S, u64)>,
        S: Into<String>,
    {
        let mut pairs: Vec<(String, u64)> = freqs
            .into_iter()
            .map(|(t, f)| (t.into(), f))
            .filter(|(_, f)| *f > 0)
            .collect();
        pairs.sort_by(|a, b| b.1.cmp(&a.1).then_with(|| a.0.cmp(&b.0)));
        pairs.truncate(max_terms);
        let (terms, freqs): (Vec<String>, Vec<u64>) = pairs.into_iter().unzip();
        Self::from_parts(terms, freqs)
    }

    /// Uses `terms` in the given order, all with frequency zero. Useful for
    /// matrices read back from disk.
    pub fn from_terms(terms: Vec<String>) -> Self {
        let freqs = vec![0; terms.len()];
        Self::from_parts(terms, freqs)
    }

    fn from_parts(terms: Vec<String>, freqs: Vec<u64>) -> Self {
        let index = terms
            .iter()
            .enumerate()
            .map(|(i, t)| (t.clone(), i))
            .collect();
        Vocabulary {
            terms,
            freqs,
            index,
        }
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> &[String] {
        &self.terms
    }

    pub fn term(&self, i: usize) -> &str {
        &self.terms[i]
    }

    pub fn index_of(&self, term: &str) -> Option<usize> {
        self.index.get(term).copied()
    }

    pub fn freq(&self, term: &str) -> Option<u64> {
        self.index_of(term).map(|i| self.freqs[i])
    }

    pub fn freqs(&self) -> &[u64] {
        &self.freqs
    }

    /// Keeps the first `k` terms.
    pub fn truncated(&self, k: usize) -> Vocabulary {
        let k = k.min(self.len());
        Self::from_parts(self.terms[..k].to_vec(), self.freqs[..k].to_vec())
    }

    /// Counts the in-vocabulary occurrences of `tokens`.
    pub fn count<S: AsRef<str>>(&self, tokens: &[S]) -> TermCounts {
        let mut counts: BTreeMap<usize, u32> = BTreeMap::new();
        for t in tokens {
            if let Some(i) = self.index_of(t.as_ref()) {
                *counts.entry(i).or_insert(0) += 1;
            }
        }
        TermCounts {
            entries: counts.into_iter().collect(),
            doc_len: tokens.len(),
        }
    }
}

/// The `max_terms` most frequent tokens of `corpus`.
pub fn build_vocabulary(corpus: &Corpus, max_terms: usize) -> Vocabulary {
    let mut freqs: HashMap<&str, u64> = HashMap::new();
    for doc in corpus.docs() {
        for t in &doc.tokens {
            *freqs.entry(t.as_str()).or_insert(0) += 1;
        }
    }
    Vocabulary::from_frequencies(freqs, max_terms)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus::AuthorDoc;
    use proptest::prelude::*;
    use std::collections::BTreeMap;

    fn corpus(texts: &[&str]) -> Corpus {
        let docs = texts
            .iter()
            .enumerate()
            .map(|(i, t)| AuthorDoc::new(format!("u{i}"), *t, BTreeMap::new()))
            .collect();
        Corpus::from_docs(docs).unwrap()
    }

    #[test]
    fn keeps_most_frequent() {
        let v = Vocabulary::from_frequencies([("a", 5), ("b", 3), ("c", 1)], 2);
        assert_eq!(v.terms(), ["a", "b"]);
    }

    #[test]
    fn ties_are_lexicographic() {
        let v = Vocabulary::from_frequencies([("b", 3), ("a", 3)], 1);
        assert_eq!(v.terms(), ["a"]);
    }

    #[test]
    fn no_truncation_when_small() {
        let c = corpus(&["x y z", "y z", "z"]);
        let v = build_vocabulary(&c, 100);
        assert_eq!(v.terms(), ["z", "y", "x"]);
        assert_eq!(v.freq("z"), Some(3));
        assert_eq!(v.index_of("x"), Some(2));
    }

    #[test]
    fn counts_skip_oov() {
        let v = Vocabulary::from_frequencies([("a", 2), ("b", 1)], 10);
        let c = v.count(&["b", "a", "q", "a"]);
        assert_eq!(c.entries, vec![(0, 2), (1, 1)]);
        assert_eq!(c.doc_len, 4);
        assert_eq!(c.in_vocab_total(), 3);
    }

    proptest! {
        #[test]
        fn truncation_commutes(texts in prop::collection::vec("[a-e ]{0,30}", 1..6), k in 0usize..8) {
            let refs: Vec<&str> = texts.iter().map(String::as_str).collect();
            let c = corpus(&refs);
            let full = build_vocabulary(&c, usize::MAX);
            prop_assert_eq!(full.truncated(k), build_vocabulary(&c, k));
            let total: u64 = full.freqs().iter().sum();
            prop_assert_eq!(total as usize, c.token_count());
            for (i, t) in full.terms().iter().enumerate() {
                prop_assert_eq!(full.index_of(t), Some(i));
            }
        }
    }
}
