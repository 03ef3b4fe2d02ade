//! Train skip-gram vectors and query nearest neighbours.

use dtrprof::corpus::synthetic::{generate, SyntheticSpec};
use dtrprof::corpus::build_vocabulary;
use dtrprof::embeddings::{nearest_neighbors, train_skipgram_traced, EmbeddingConfig};

fn main() -> dtrprof::Result<()> {
    let spec = SyntheticSpec {
        authors_per_category: 30,
        ..SyntheticSpec::default()
    };
    let corpus = generate(&spec);
    let vocab = build_vocabulary(&corpus, 5000);
    let cfg = EmbeddingConfig {
        dim: 50,
        epochs: 10,
        seed: 3,
        ..EmbeddingConfig::default()
    };
    let (tm, losses) = train_skipgram_traced(&corpus, &vocab, &cfg)?;
    for (e, l) in losses.iter().enumerate() {
        println!("epoch {:>2}  loss {l:.4}", e + 1);
    }

    let query = &dtrprof::corpus::synthetic::topical_pool(&spec, 0)[0];
    println!("neighbours of {query}:");
    for (term, sim) in nearest_neighbors(&tm, query, 5)? {
        println!("  {term:<16} {sim:.3}");
    }
    Ok(())
}
