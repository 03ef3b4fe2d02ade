//! Collection characteristics of several synthetic "genres" and their
//! correlation with the accuracy gain of DOR over BoW.

use dtrprof::corpus::english_stopwords;
use dtrprof::corpus::synthetic::{generate, SyntheticSpec};
use dtrprof::evaluation::{
    collection_stats, correlation_map, cross_validate, ClassifierConfig, CollectionStats,
    GenreEvaluation, RepresentationConfig,
};

fn main() -> dtrprof::Result<()> {
    let stopwords = english_stopwords();
    let clf = ClassifierConfig::default();
    let genres = [
        ("short", 40, 0.05),
        ("long", 200, 0.05),
        ("topical", 80, 0.15),
        ("vague", 80, 0.02),
    ];

    println!("{}", CollectionStats::csv_header());
    let mut evaluations = Vec::new();
    for (i, (name, len, rate)) in genres.into_iter().enumerate() {
        let spec = SyntheticSpec {
            authors_per_category: 30 + 10 * i,
            tokens_per_doc: len,
            topical_rate: rate,
            seed: 100 + i as u64,
            ..SyntheticSpec::default()
        };
        let corpus = generate(&spec);
        let stats = collection_stats(&corpus, "gender", &stopwords)?;
        println!("{}", stats.csv_row(name, "gender"));
        let bow = cross_validate(&corpus, "gender", &RepresentationConfig::bow(), &clf, 5, 1)?;
        let dor = cross_validate(&corpus, "gender", &RepresentationConfig::dor(), &clf, 5, 1)?;
        evaluations.push(GenreEvaluation::from_reports(name, stats, &bow, &[dor]));
    }
    print!("\n{}", correlation_map(&evaluations)?.to_csv());
    Ok(())
}
