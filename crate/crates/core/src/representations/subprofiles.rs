use std::collections::BTreeMap;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::corpus::{Corpus, Vocabulary};
use crate::error::{Error, Result};

use super::kmeans::{kmeans, SparsePoint};

pub const KMEANS_RESTARTS: usize = 20;

/// Split of every category of a task into subclasses (author subprofiles).
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SubprofileAssignment {
    pub task: String,
    /// Author id to subclass index.
    pub mapping: BTreeMap<String, usize>,
    /// `category/cluster` label of every subclass, ordered by category then cluster.
    pub subclass_labels: Vec<String>,
    /// Parent category of every subclass.
    pub parents: Vec<String>,
}

impl SubprofileAssignment {
    /// One subclass per category: the plain class-level split.
    pub fn by_category(train: &Corpus, task: &str) -> Result<Self> {
        let categories = train.categories(task)?;
        let mapping = train
            .docs()
            .iter()
            .map(|d| {
                let c = categories.binary_search(&d.labels[task]).expect("known category");
                (d.author_id.clone(), c)
            })
            .collect();
        Ok(SubprofileAssignment {
            task: task.to_string(),
            mapping,
            subclass_labels: categories.iter().map(|c| format!("{c}/0")).collect(),
            parents: categories,
        })
    }

    pub fn n_subclasses(&self) -> usize {
        self.subclass_labels.len()
    }

    pub fn subclass_of(&self, author_id: &str) -> Option<usize> {
        self.mapping.get(author_id).copied()
    }
}

fn normalized_tf(train: &Corpus, vocab: &Vocabulary, idx: usize) -> SparsePoint {
    let counts = vocab.count(&train.docs()[idx].tokens);
    let norm = counts
        .entries
        .iter()
        .map(|&(_, c)| (c as f64) * (c as f64))
        .sum::<f64>()
        .sqrt();
    if norm == 0.0 {
        return Vec::new();
    }
    counts
        .entries
        .iter()
        .map(|&(i, c)| (i, c as f64 / norm))
        .collect()
}

/// Clusters the documents of each category of `task` into at most
/// `k_per_class` subprofiles with seeded k-means on L2-normalized term
/// frequency vectors.
pub fn cluster_subprofiles(
    train: &Corpus,
    task: &str,
    vocab: &Vocabulary,
    k_per_class: usize,
    seed: u64,
) -> Result<SubprofileAssignment> {
    if k_per_class == 0 {
        return Err(Error::invalid("k_per_class must be positive"));
    }
    let categories = train.categories(task)?;
    let mut mapping = BTreeMap::new();
    let mut subclass_labels = Vec::new();
    let mut parents = Vec::new();

    for (c, category) in categories.iter().enumerate() {
        let members: Vec<usize> = train
            .docs()
            .iter()
            .enumerate()
            .filter(|(_, d)| d.labels[task] == *category)
            .map(|(i, _)| i)
            .collect();
        let points: Vec<SparsePoint> = members
            .iter()
            .map(|&i| normalized_tf(train, vocab, i))
            .collect();
        let mut rng = ChaCha8Rng::seed_from_u64(seed ^ (c as u64).wrapping_mul(0x9E37_79B9_7F4A_7C15));
        let result = kmeans(&points, vocab.len(), k_per_class, KMEANS_RESTARTS, &mut rng);
        let k = result.assignment.iter().max().map_or(0, |m| m + 1);

        let base = subclass_labels.len();
        for cluster in 0..k {
            subclass_labels.push(format!("{category}/{cluster}"));
            parents.push(category.clone());
        }
        for (&i, &cluster) in members.iter().zip(&result.assignment) {
            mapping.insert(train.docs()[i].author_id.clone(), base + cluster);
        }
    }

    Ok(SubprofileAssignment {
        task: task.to_string(),
        mapping,
        subclass_labels,
        parents,
    })
}
