//! Which authors are the most discriminative DOR features, and what do
//! they write about?

use dtrprof::corpus::english_stopwords;
use dtrprof::corpus::synthetic::{generate, SyntheticSpec};
use dtrprof::evaluation::representative_authors;

fn main() -> dtrprof::Result<()> {
    let corpus = generate(&SyntheticSpec {
        authors_per_category: 25,
        ..SyntheticSpec::default()
    });
    for a in representative_authors(&corpus, "gender", 2, 10, &english_stopwords())? {
        let words: Vec<&str> = a.top_terms.iter().map(|(t, _)| t.as_str()).collect();
        println!("{:<7} {:<11} IG {:.3}  {}", a.category, a.author_id, a.information_gain, words.join(" "));
    }
    Ok(())
}
