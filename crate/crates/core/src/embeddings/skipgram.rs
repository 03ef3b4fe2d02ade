use std::collections::HashMap;

use rand::distr::weighted::WeightedIndex;
use rand::distr::Distribution;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::corpus::{Corpus, Vocabulary};
use crate::error::{Error, Result};
use crate::representations::{RepKind, TermMatrix};

/// Skip-gram hyperparameters.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct EmbeddingConfig {
    pub dim: usize,
    /// Maximum distance between center and context; the effective window
    /// is drawn uniformly from `1..=window` for every center word.
    pub window: usize,
    pub negatives: usize,
    pub epochs: usize,
    pub initial_lr: f64,
    pub min_count: u64,
    /// Frequency subsampling threshold (`1e-3` is the usual choice); off when `None`.
    pub subsample: Option<f64>,
    pub seed: u64,
}

impl Default for EmbeddingConfig {
    fn default() -> Self {
        EmbeddingConfig {
            dim: 100,
            window: 5,
            negatives: 5,
            epochs: 5,
            initial_lr: 0.025,
            min_count: 1,
            subsample: None,
            seed: 1,
        }
    }
}

impl EmbeddingConfig {
    pub fn validate(&self) -> Result<()> {
        if self.dim == 0 || self.window == 0 || self.epochs == 0 || self.negatives == 0 {
            return Err(Error::Config(
                "embedding dim, window, negatives and epochs must be positive".into(),
            ));
        }
        if !(self.initial_lr > 0.0) || self.min_count == 0 {
            return Err(Error::Config(
                "embedding initial_lr and min_count must be positive".into(),
            ));
        }
        Ok(())
    }
}

const MIN_LR_FRACTION: f64 = 1e-4;

fn sigmoid(x: f64) -> f64 {
    1.0 / (1.0 + (-x.clamp(-30.0, 30.0)).exp())
}

/// `-ln(sigmoid(x))`, stable for large |x|.
fn neg_log_sigmoid(x: f64) -> f64 {
    if x > 0.0 {
        (-x).exp().ln_1p()
    } else {
        -x + x.exp().ln_1p()
    }
}

fn dot(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

/// Trains skip-gram vectors for `vocab` on `corpus`; see [`train_skipgram_traced`].
pub fn train_skipgram(corpus: &Corpus, vocab: &Vocabulary, cfg: &EmbeddingConfig) -> Result<TermMatrix> {
    train_skipgram_traced(corpus, vocab, cfg).map(|(m, _)| m)
}

/// Skip-gram with negative sampling, single-threaded and fully determined by
/// `cfg.seed`. Each document is one sentence. For every (center, context)
/// pair the trainer ascends `log s(w.c) + sum log s(-w.n)` over negatives `n`
/// drawn from the unigram distribution raised to 3/4. The learning rate
/// decays linearly to `initial_lr * 1e-4`.
///
/// Returns the input vectors and the mean loss (negated objective) of every
/// epoch. Terms below `min_count` or absent from the corpus get zero rows.
pub fn train_skipgram_traced(
    corpus: &Corpus,
    vocab: &Vocabulary,
    cfg: &EmbeddingConfig,
) -> Result<(TermMatrix, Vec<f64>)> {
    cfg.validate()?;
    if vocab.is_empty() {
        return Err(Error::invalid("cannot train embeddings for an empty vocabulary"));
    }
    if corpus.is_empty() {
        return Err(Error::invalid("cannot train embeddings on an empty corpus"));
    }
    let m = vocab.len();
    let dim = cfg.dim;

    let mut counts = vec![0u64; m];
    let mut sentences: Vec<Vec<usize>> = corpus
        .docs()
        .iter()
        .map(|d| {
            d.tokens
                .iter()
                .filter_map(|t| vocab.index_of(t))
                .inspect(|&i| counts[i] += 1)
                .collect()
        })
        .collect();
    let trainable: Vec<bool> = counts.iter().map(|&c| c >= cfg.min_count).collect();
    for s in &mut sentences {
        s.retain(|&i| trainable[i]);
    }
    let total_words: u64 = sentences.iter().map(|s| s.len() as u64).sum();
    if total_words == 0 {
        return Err(Error::invalid("no trainable vocabulary tokens in the corpus"));
    }

    let noise_terms: Vec<usize> = (0..m).filter(|&i| trainable[i]).collect();
    let noise = WeightedIndex::new(noise_terms.iter().map(|&i| (counts[i] as f64).powf(0.75)))
        .map_err(|e| Error::invalid(format!("negative sampling table: {e}")))?;

    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let mut input: Vec<f64> = (0..m * dim)
        .map(|_| (rng.random::<f64>() - 0.5) / dim as f64)
        .collect();
    let mut output = vec![0.0; m * dim];
    let mut grad = vec![0.0; dim];

    let keep_prob: HashMap<usize, f64> = match cfg.subsample {
        Some(t) if t > 0.0 => noise_terms
            .iter()
            .map(|&i| {
                let f = counts[i] as f64 / total_words as f64;
                (i, ((f / t).sqrt() + 1.0) * t / f)
            })
            .collect(),
        _ => HashMap::new(),
    };

    let total_steps = (cfg.epochs as u64 * total_words) as f64;
    let mut processed = 0u64;
    let mut epoch_loss = Vec::with_capacity(cfg.epochs);

    for _ in 0..cfg.epochs {
        let mut loss = 0.0;
        let mut pairs = 0u64;
        for sentence in &sentences {
            let kept: Vec<usize> = if keep_prob.is_empty() {
                sentence.clone()
            } else {
                sentence
                    .iter()
                    .copied()
                    .filter(|i| rng.random::<f64>() < keep_prob[i])
                    .collect()
            };
            for (pos, &center) in kept.iter().enumerate() {
                let lr = cfg.initial_lr
                    * (1.0 - processed as f64 / total_steps).max(MIN_LR_FRACTION);
                processed += 1;
                let reach = rng.random_range(1..=cfg.window);
                let lo = pos.saturating_sub(reach);
                let hi = (pos + reach).min(kept.len() - 1);
                for (ctx_pos, &context) in kept.iter().enumerate().take(hi + 1).skip(lo) {
                    if ctx_pos == pos {
                        continue;
                    }
                    grad.iter_mut().for_each(|g| *g = 0.0);
                    let center_row = center * dim..(center + 1) * dim;
                    for n in 0..=cfg.negatives {
                        let (target, label) = if n == 0 {
                            (context, 1.0)
                        } else {
                            let t = noise_terms[noise.sample(&mut rng)];
                            if t == context {
                                continue;
                            }
                            (t, 0.0)
                        };
                        let out_row = target * dim..(target + 1) * dim;
                        let score = dot(&input[center_row.clone()], &output[out_row.clone()]);
                        loss += if label == 1.0 {
                            neg_log_sigmoid(score)
                        } else {
                            neg_log_sigmoid(-score)
                        };
                        let g = (label - sigmoid(score)) * lr;
                        for d in 0..dim {
                            grad[d] += g * output[target * dim + d];
                            output[target * dim + d] += g * input[center * dim + d];
                        }
                    }
                    for d in 0..dim {
                        input[center * dim + d] += grad[d];
                    }
                    pairs += 1;
                }
            }
            processed += (sentence.len() - kept.len()) as u64;
        }
        epoch_loss.push(if pairs == 0 { 0.0 } else { loss / pairs as f64 });
    }

    for i in 0..m {
        if counts[i] == 0 || !trainable[i] {
            input[i * dim..(i + 1) * dim].iter_mut().for_each(|x| *x = 0.0);
        }
    }
    if input.iter().any(|x| !x.is_finite()) {
        return Err(Error::invalid("skip-gram training diverged"));
    }
    let matrix = TermMatrix::dense(RepKind::Embedding, vocab.terms().to_vec(), dim, input, None)?;
    Ok((matrix, epoch_loss))
}
