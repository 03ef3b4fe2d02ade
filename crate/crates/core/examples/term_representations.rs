//! DOR and TCOR term vectors for a toy corpus, plus document aggregation.

use std::collections::BTreeMap;

use dtrprof::corpus::{build_vocabulary, AuthorDoc, Corpus};
use dtrprof::representations::{aggregate_documents, build_dor, build_tcor, Aggregation, TermMatrix};

fn show(tm: &TermMatrix, terms: &[&str], vocab: &dtrprof::corpus::Vocabulary) {
    println!("{} ({} features)", tm.kind().as_str(), tm.dims());
    for t in terms {
        let i = vocab.index_of(t).unwrap();
        let row: Vec<String> = tm.row_dense(i).iter().map(|v| format!("{v:.3}")).collect();
        println!("  {t:<8} [{}]", row.join(", "));
    }
}

fn main() -> dtrprof::Result<()> {
    let label = |l: &str| BTreeMap::from([("gender".to_string(), l.to_string())]);
    let corpus = Corpus::from_docs(vec![
        AuthorDoc::new("a", "linux kernel linux code", label("male")),
        AuthorDoc::new("b", "kernel code football", label("male")),
        AuthorDoc::new("c", "shopping sister fun", label("female")),
        AuthorDoc::new("d", "sister fun code", label("female")),
    ])?;
    let vocab = build_vocabulary(&corpus, 100);

    let dor = build_dor(&corpus, &vocab)?;
    show(&dor, &["linux", "code", "sister"], &vocab);
    let tcor = build_tcor(&corpus, &vocab)?;
    show(&tcor, &["linux", "code", "sister"], &vocab);

    let unseen = AuthorDoc::new("new", "linux code fun fun", label("male"));
    let v = aggregate_documents(&unseen, &dor, &vocab, Aggregation::Mean)?;
    println!("unseen author over DOR features {:?}: {:.3?}", dor.feature_names().unwrap(), v.values);
    Ok(())
}
