use std::collections::BTreeMap;

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};

/// Splits `0..labels.len()` into `k` disjoint test folds.
///
/// Within each category (visited in sorted order) indices are shuffled with
/// the seed and dealt round-robin; the deal position carries over between
/// categories so fold sizes stay within one of each other. A category with
/// fewer than `k` members simply leaves some folds without it. Each fold is
/// returned sorted.
pub fn stratified_kfold<S: AsRef<str>>(labels: &[S], k: usize, seed: u64) -> Result<Vec<Vec<usize>>> {
    if k == 0 {
        return Err(Error::invalid("number of folds must be positive"));
    }
    if k > labels.len() {
        return Err(Error::invalid(format!(
            "{k} folds requested for {} samples",
            labels.len()
        )));
    }
    let mut by_category: BTreeMap<&str, Vec<usize>> = BTreeMap::new();
    for (i, l) in labels.iter().enumerate() {
        by_category.entry(l.as_ref()).or_default().push(i);
    }

    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut folds = vec![Vec::new(); k];
    let mut next = 0;
    for members in by_category.values_mut() {
        members.shuffle(&mut rng);
        for &i in members.iter() {
            folds[next].push(i);
            next = (next + 1) % k;
        }
    }
    for f in &mut folds {
        f.sort_unstable();
    }
    Ok(folds)
}

/// Complement of `test` within `0..n`.
pub fn train_indices(n: usize, test: &[usize]) -> Vec<usize> {
    let mut in_test = vec![false; n];
    for &i in test {
        in_test[i] = true;
    }
    (0..n).filter(|&i| !in_test[i]).collect()
}
