//! Tokenization and the frequency-ranked vocabulary.

use std::collections::BTreeMap;

use dtrprof::corpus::{build_vocabulary, tokenize, AuthorDoc, Corpus};

fn main() -> dtrprof::Result<()> {
    for text in ["I love Linux!", "don't stop :) 👍🏽", "Ünïcode, çafé & “quotes”"] {
        println!("{text:?} -> {:?}", tokenize(text));
    }

    let label = |l: &str| BTreeMap::from([("gender".to_string(), l.to_string())]);
    let corpus = Corpus::from_docs(vec![
        AuthorDoc::new("u1", "My new laptop runs Linux. Linux is great!", label("male")),
        AuthorDoc::new("u2", "Shopping with my sister today, so much fun!!", label("female")),
        AuthorDoc::new("u3", "Linux kernel hacking all night :)", label("male")),
    ])?;

    let vocab = build_vocabulary(&corpus, 8);
    for (i, term) in vocab.terms().iter().enumerate() {
        println!("{i:>2} {term:<10} {}", vocab.freqs()[i]);
    }
    Ok(())
}
