//! Seeded generator of labeled toy corpora.
//!
//! Every author writes from a shared Zipf-distributed pool of common words
//! and punctuation, mixed with terms drawn from a small topical vocabulary
//! that belongs to the author's category only. With the default rate the
//! categories are nearly, but not perfectly, separable by content.

use std::collections::BTreeMap;

use rand::distr::weighted::WeightedIndex;
use rand::distr::Distribution;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{AuthorDoc, Corpus};

const SYLLABLES: [&str; 24] = [
    "ka", "lo", "mi", "ne", "ru", "sa", "ti", "vo", "be", "da", "fu", "go", "hi", "ja", "ku",
    "le", "mo", "na", "pi", "re", "so", "tu", "wa", "ze",
];

const FUNCTION_WORDS: [&str; 24] = [
    "the", "a", "and", "to", "of", "i", "it", "in", "is", "that", "you", "for", "on", "my",
    "this", "with", "but", "so", "we", "was", "be", "at", "just", "have",
];

const PUNCTUATION: [&str; 4] = [".", ",", "!", "?"];

#[derive(Debug, Clone)]
pub struct SyntheticSpec {
    pub task: String,
    pub categories: Vec<String>,
    pub authors_per_category: usize,
    pub topical_terms: usize,
    pub common_terms: usize,
    pub tokens_per_doc: usize,
    /// Probability that a token is drawn from the author's topical pool.
    pub topical_rate: f64,
    pub seed: u64,
}

impl Default for SyntheticSpec {
    fn default() -> Self {
        SyntheticSpec {
            task: "gender".into(),
            categories: vec!["female".into(), "male".into()],
            authors_per_category: 100,
            topical_terms: 30,
            common_terms: 300,
            tokens_per_doc: 120,
            topical_rate: 0.1,
            seed: 2014,
        }
    }
}

fn pseudo_word(mut n: usize, min_syllables: usize) -> String {
    let mut w = String::new();
    let mut parts = 0;
    loop {
        w.push_str(SYLLABLES[n % SYLLABLES.len()]);
        n /= SYLLABLES.len();
        parts += 1;
        if n == 0 && parts >= min_syllables {
            break w;
        }
    }
}

fn zipf(n: usize) -> WeightedIndex<f64> {
    WeightedIndex::new((1..=n).map(|r| 1.0 / r as f64)).expect("non-empty pool")
}

/// Common words shared by every category.
pub fn common_pool(spec: &SyntheticSpec) -> Vec<String> {
    FUNCTION_WORDS
        .iter()
        .map(|w| w.to_string())
        .chain((0..spec.common_terms).map(|i| pseudo_word(i, 2)))
        .collect()
}

/// Topical terms owned by category `c`; pools of different categories are disjoint.
pub fn topical_pool(spec: &SyntheticSpec, c: usize) -> Vec<String> {
    (0..spec.topical_terms)
        .map(|i| format!("{}{}", pseudo_word(c * spec.topical_terms + i, 3), "x"))
        .collect()
}

/// Generates the corpus described by `spec`.
pub fn generate(spec: &SyntheticSpec) -> Corpus {
    let mut rng = ChaCha8Rng::seed_from_u64(spec.seed);
    let common = common_pool(spec);
    let common_dist = zipf(common.len());
    let punct_dist = zipf(PUNCTUATION.len());

    let mut docs = Vec::new();
    for (c, category) in spec.categories.iter().enumerate() {
        let topical = topical_pool(spec, c);
        let topical_dist = zipf(topical.len());
        for a in 0..spec.authors_per_category {
            let len = spec.tokens_per_doc / 2 + rng.random_range(0..=spec.tokens_per_doc);
            let mut words = Vec::with_capacity(len);
            for _ in 0..len {
                let r: f64 = rng.random();
                let w = if r < spec.topical_rate {
                    topical[topical_dist.sample(&mut rng)].as_str()
                } else if r < spec.topical_rate + 0.08 {
                    PUNCTUATION[punct_dist.sample(&mut rng)]
                } else {
                    common[common_dist.sample(&mut rng)].as_str()
                };
                words.push(w);
            }
            let labels = BTreeMap::from([(spec.task.clone(), category.clone())]);
            let id = format!("{}-{:03}", category, a);
            docs.push(AuthorDoc::new(id, words.join(" "), labels));
        }
    }
    Corpus::from_docs(docs).expect("generated ids are unique")
}
