use std::collections::HashSet;
use std::fs;
use std::path::Path;

use crate::error::{Error, Result};

const ENGLISH: &str = include_str!("../../data/stopwords_en.txt");

/// A set of function words, compared against lowercased tokens.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Stopwords(HashSet<String>);

impl Stopwords {
    pub fn from_words<I, S>(words: I) -> Self
    where
        I: IntoIterator<Item = S>,
        S: AsRef<str>,
    {
        Stopwords(
            words
                .into_iter()
                .map(|w| w.as_ref().trim().to_lowercase())
                .filter(|w| !w.is_empty() && !w.starts_with('#'))
                .collect(),
        )
    }

    pub fn contains(&self, token: &str) -> bool {
        self.0.contains(token)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

/// The bundled English list.
pub fn english_stopwords() -> Stopwords {
    Stopwords::from_words(ENGLISH.lines())
}

/// One word per line; blank lines and `#` comments ignored.
pub fn load_stopwords(path: &Path) -> Result<Stopwords> {
    let text = fs::read_to_string(path).map_err(|e| Error::io(path, e))?;
    Ok(Stopwords::from_words(text.lines()))
}
