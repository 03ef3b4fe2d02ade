//! Subprofile clustering and the subprofile-specific representation.

use dtrprof::corpus::synthetic::{generate, SyntheticSpec};
use dtrprof::corpus::build_vocabulary;
use dtrprof::representations::{build_ssr, cluster_subprofiles};

fn main() -> dtrprof::Result<()> {
    let corpus = generate(&SyntheticSpec {
        authors_per_category: 20,
        ..SyntheticSpec::default()
    });
    let vocab = build_vocabulary(&corpus, 2000);
    let assignment = cluster_subprofiles(&corpus, "gender", &vocab, 3, 7)?;
    for (k, label) in assignment.subclass_labels.iter().enumerate() {
        let members = assignment.mapping.values().filter(|&&s| s == k).count();
        println!("{label:<10} {members} authors");
    }

    let ssr = build_ssr(&corpus, &vocab, &assignment)?;
    // the most frequent term is spread over all profiles, topical ones are not
    for i in [0, vocab.len() / 2, vocab.len() - 1] {
        let row: Vec<String> = ssr.row_dense(i).iter().map(|v| format!("{v:.2}")).collect();
        println!("{:<16} [{}]", vocab.term(i), row.join(", "));
    }
    Ok(())
}
