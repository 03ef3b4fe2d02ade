//! Interpretability reports: per-author tf-idf terms and the authors whose
//! DOR features best separate the categories.

use std::collections::{BTreeMap, HashMap};

use serde::{Deserialize, Serialize};

use crate::corpus::{build_vocabulary, is_symbolic, Corpus, Stopwords, DEFAULT_MAX_TERMS};
use crate::error::{Error, Result};
use crate::representations::{aggregate_corpus, build_dor, Aggregation};

/// The `n` highest tf-idf terms of one author, ties broken lexicographically.
/// Stopwords and punctuation are left out of the ranking.
pub fn top_terms_tfidf(
    corpus: &Corpus,
    author_id: &str,
    n: usize,
    stopwords: &Stopwords,
) -> Result<Vec<(String, f64)>> {
    let doc = corpus
        .find(author_id)
        .ok_or_else(|| Error::UnknownAuthor(author_id.to_string()))?;
    let mut tf: HashMap<&str, u32> = HashMap::new();
    for t in &doc.tokens {
        if !is_symbolic(t) && !stopwords.contains(t) {
            *tf.entry(t.as_str()).or_default() += 1;
        }
    }
    let mut df: HashMap<&str, u32> = tf.keys().map(|&t| (t, 0)).collect();
    for other in corpus.docs() {
        let mut seen: Vec<&str> = other
            .tokens
            .iter()
            .map(String::as_str)
            .filter(|t| df.contains_key(t))
            .collect();
        seen.sort_unstable();
        seen.dedup();
        for t in seen {
            *df.get_mut(t).unwrap() += 1;
        }
    }
    let n_docs = corpus.len() as f64;
    let mut scored: Vec<(String, f64)> = tf
        .into_iter()
        .map(|(t, c)| (t.to_string(), c as f64 * (n_docs / df[t] as f64).ln()))
        .collect();
    scored.sort_by(|a, b| b.1.total_cmp(&a.1).then_with(|| a.0.cmp(&b.0)));
    scored.truncate(n);
    Ok(scored)
}

fn entropy(counts: &BTreeMap<&str, usize>) -> f64 {
    let total: usize = counts.values().sum();
    if total == 0 {
        return 0.0;
    }
    counts
        .values()
        .filter(|&&c| c > 0)
        .map(|&c| {
            let p = c as f64 / total as f64;
            -p * p.log2()
        })
        .sum()
}

fn median(values: &[f64]) -> f64 {
    let mut sorted = values.to_vec();
    sorted.sort_by(f64::total_cmp);
    let m = sorted.len() / 2;
    if sorted.len() % 2 == 0 {
        (sorted[m - 1] + sorted[m]) / 2.0
    } else {
        sorted[m]
    }
}

/// Information gain (bits) of a feature binarized at its median
/// (`value > median`) with respect to `labels`.
pub fn information_gain<S: AsRef<str>>(values: &[f64], labels: &[S]) -> Result<f64> {
    if values.len() != labels.len() {
        return Err(Error::DimensionMismatch {
            expected: labels.len(),
            found: values.len(),
        });
    }
    if values.is_empty() {
        return Ok(0.0);
    }
    let threshold = median(values);
    let mut all = BTreeMap::new();
    let mut sides = [BTreeMap::new(), BTreeMap::new()];
    for (v, label) in values.iter().zip(labels) {
        *all.entry(label.as_ref()).or_insert(0) += 1;
        *sides[(*v > threshold) as usize].entry(label.as_ref()).or_insert(0) += 1;
    }
    let n = values.len() as f64;
    let conditional: f64 = sides
        .iter()
        .map(|side| side.values().sum::<usize>() as f64 / n * entropy(side))
        .sum();
    Ok((entropy(&all) - conditional).max(0.0))
}

/// An author selected as a discriminative DOR feature.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RepresentativeAuthor {
    pub author_id: String,
    pub category: String,
    pub information_gain: f64,
    pub top_terms: Vec<(String, f64)>,
}

/// Builds a DOR on the whole corpus, ranks its features (one per author) by
/// information gain against the `task` labels, and keeps the best
/// `per_category` authors of every category together with their top
/// `n_terms` tf-idf words.
pub fn representative_authors(
    corpus: &Corpus,
    task: &str,
    per_category: usize,
    n_terms: usize,
    stopwords: &Stopwords,
) -> Result<Vec<RepresentativeAuthor>> {
    let labels = corpus.labels(task)?;
    if per_category == 0 {
        return Ok(Vec::new());
    }
    let vocab = build_vocabulary(corpus, DEFAULT_MAX_TERMS);
    let dor = build_dor(corpus, &vocab)?;
    let docs = aggregate_corpus(corpus, &dor, &vocab, Aggregation::Mean)?;

    let mut ranked: Vec<(f64, usize)> = (0..dor.dims())
        .map(|j| {
            let column: Vec<f64> = docs.iter().map(|d| d.values[j]).collect();
            information_gain(&column, &labels).map(|ig| (ig, j))
        })
        .collect::<Result<_>>()?;
    // DOR feature j is training author j, so index order is author-id order.
    ranked.sort_by(|a, b| b.0.total_cmp(&a.0).then(a.1.cmp(&b.1)));

    let mut out = Vec::new();
    for category in corpus.categories(task)? {
        let picks = ranked
            .iter()
            .filter(|(_, j)| labels[*j] == category)
            .take(per_category);
        for &(ig, j) in picks {
            let author = &corpus.docs()[j].author_id;
            out.push(RepresentativeAuthor {
                author_id: author.clone(),
                category: category.clone(),
                information_gain: ig,
                top_terms: top_terms_tfidf(corpus, author, n_terms, stopwords)?,
            });
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus::{english_stopwords, AuthorDoc};

    fn doc(id: &str, label: &str, text: &str) -> AuthorDoc {
        AuthorDoc::new(id, text, BTreeMap::from([("g".to_string(), label.to_string())]))
    }

    fn corpus() -> Corpus {
        Corpus::from_docs(vec![
            doc("a", "f", "linux linux linux office and the cat"),
            doc("b", "f", "office linux the cat"),
            doc("c", "m", "football beer the cat"),
            doc("d", "m", "beer football football the cat"),
        ])
        .unwrap()
    }

    #[test]
    fn exclusive_term_ranks_first() {
        let c = Corpus::from_docs(vec![
            doc("a", "f", "zebra zebra zebra cat dog"),
            doc("b", "m", "cat dog"),
        ])
        .unwrap();
        let top = top_terms_tfidf(&c, "a", 10, &english_stopwords()).unwrap();
        assert_eq!(top[0].0, "zebra");
        assert!((top[0].1 - 3.0 * 2f64.ln()).abs() < 1e-12);
        // universal terms score zero and follow in lexicographic order
        assert_eq!(top[1], ("cat".to_string(), 0.0));
        assert_eq!(top.len(), 3);
    }

    #[test]
    fn stopwords_and_punctuation_skipped() {
        let c = Corpus::from_docs(vec![doc("a", "f", "the cat , !"), doc("b", "m", "dog")]).unwrap();
        let top = top_terms_tfidf(&c, "a", 10, &english_stopwords()).unwrap();
        assert_eq!(top, vec![("cat".to_string(), 2f64.ln())]);
    }

    #[test]
    fn unknown_author() {
        assert!(matches!(
            top_terms_tfidf(&corpus(), "zz", 3, &english_stopwords()),
            Err(Error::UnknownAuthor(_))
        ));
    }

    #[test]
    fn ig_examples() {
        let labels = ["f", "f", "m", "m"];
        assert!((information_gain(&[1.0, 2.0, 3.0, 4.0], &labels).unwrap() - 1.0).abs() < 1e-12);
        assert_eq!(information_gain(&[1.0; 4], &labels).unwrap(), 0.0);
        assert_eq!(information_gain(&[1.0, 3.0, 2.0, 4.0], &labels).unwrap(), 0.0);
        assert!(information_gain(&[1.0], &labels).is_err());
    }

    #[test]
    fn representative_authors_per_category() {
        let reps = representative_authors(&corpus(), "g", 1, 10, &english_stopwords()).unwrap();
        assert_eq!(reps.len(), 2);
        assert_eq!(reps[0].category, "f");
        assert_eq!(reps[1].category, "m");
        assert!(reps[0].top_terms.iter().any(|(t, _)| t == "linux"));
        assert!(representative_authors(&corpus(), "g", 0, 10, &english_stopwords())
            .unwrap()
            .is_empty());
    }
}
