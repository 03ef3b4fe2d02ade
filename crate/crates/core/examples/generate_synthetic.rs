//! Writes the seed-fixed synthetic profiling corpus as JSON lines.
//!
//! cargo run --example generate_synthetic -- data/synthetic.jsonl

use std::path::PathBuf;

use dtrprof::corpus::synthetic::{generate, SyntheticSpec};
use dtrprof::corpus::write_jsonl;

fn main() -> dtrprof::Result<()> {
    let out = std::env::args()
        .nth(1)
        .map(PathBuf::from)
        .unwrap_or_else(|| PathBuf::from("synthetic.jsonl"));
    let spec = SyntheticSpec::default();
    let corpus = generate(&spec);
    write_jsonl(&corpus, &out)?;
    println!(
        "{} authors, {} tokens, categories {:?} -> {}",
        corpus.len(),
        corpus.token_count(),
        corpus.category_counts(&spec.task)?,
        out.display()
    );
    Ok(())
}
