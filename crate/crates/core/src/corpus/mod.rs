//! Labeled author corpora: loading, tokenization and vocabulary.
//!
//! One [`AuthorDoc`] holds everything an author wrote, concatenated. Two
//! on-disk layouts are understood: a PAN-style directory (`truth.txt` plus
//! one text file per author) and JSON lines.

mod stopwords;
pub mod synthetic;
mod tokenize;
mod vocab;

use std::collections::{BTreeMap, BTreeSet};
use std::fs;
use std::path::Path;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub use stopwords::{english_stopwords, load_stopwords, Stopwords};
pub use tokenize::{is_symbolic, tokenize};
pub use vocab::{build_vocabulary, TermCounts, Vocabulary, DEFAULT_MAX_TERMS};

/// Everything one author wrote, with its labels.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AuthorDoc {
    pub author_id: String,
    pub text: String,
    pub tokens: Vec<String>,
    pub labels: BTreeMap<String, String>,
}

impl AuthorDoc {
    /// Builds a document, tokenizing `text`.
    pub fn new(
        author_id: impl Into<String>,
        text: impl Into<String>,
        labels: BTreeMap<String, String>,
    ) -> Self {
        let text = text.into();
        let tokens = tokenize(&text);
        AuthorDoc {
            author_id: author_id.into(),
            text,
            tokens,
            labels,
        }
    }

    pub fn label(&self, task: &str) -> Option<&str> {
        self.labels.get(task).map(String::as_str)
    }

    /// Replaces the text (and therefore the tokens) keeping id and labels.
    pub fn set_text(&mut self, text: impl Into<String>) {
        self.text = text.into();
        self.tokens = tokenize(&self.text);
    }
}

/// On-disk corpus layouts.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum CorpusFormat {
    PanDir,
    Jsonl,
}

impl FromStr for CorpusFormat {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "pan-dir" | "pan" => Ok(CorpusFormat::PanDir),
            "jsonl" => Ok(CorpusFormat::Jsonl),
            other => Err(Error::Config(format!(
                "unknown corpus format `{other}` (expected pan-dir or jsonl)"
            ))),
        }
    }
}

/// A labeled collection of author documents, sorted by author id.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Corpus {
    docs: Vec<AuthorDoc>,
    tasks: BTreeSet<String>,
}

impl Corpus {
    /// Validates and sorts `docs`. Every document must carry a label for
    /// every task in `tasks` and author ids must be unique.
    pub fn new(mut docs: Vec<AuthorDoc>, tasks: BTreeSet<String>) -> Result<Self> {
        docs.sort_by(|a, b| a.author_id.cmp(&b.author_id));
        for pair in docs.windows(2) {
            if pair[0].author_id == pair[1].author_id {
                return Err(Error::DuplicateAuthor(pair[0].author_id.clone()));
            }
        }
        for doc in &docs {
            for task in &tasks {
                if !doc.labels.contains_key(task) {
                    return Err(Error::invalid(format!(
                        "author `{}` has no `{task}` label",
                        doc.author_id
                    )));
                }
            }
        }
        Ok(Corpus { docs, tasks })
    }

    /// Builds a corpus whose task set is the intersection of all label keys.
    pub fn from_docs(docs: Vec<AuthorDoc>) -> Result<Self> {
        let mut tasks: Option<BTreeSet<String>> = None;
        for doc in &docs {
            let keys: BTreeSet<String> = doc.labels.keys().cloned().collect();
            tasks = Some(match tasks {
                None => keys,
                Some(t) => t.intersection(&keys).cloned().collect(),
            });
        }
        Corpus::new(docs, tasks.unwrap_or_default())
    }

    pub fn docs(&self) -> &[AuthorDoc] {
        &self.docs
    }

    pub fn len(&self) -> usize {
        self.docs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.docs.is_empty()
    }

    pub fn tasks(&self) -> &BTreeSet<String> {
        &self.tasks
    }

    pub fn has_task(&self, task: &str) -> bool {
        self.tasks.contains(task)
    }

    fn require_task(&self, task: &str) -> Result<()> {
        if self.has_task(task) {
            Ok(())
        } else {
            Err(Error::UnknownTask(task.to_string()))
        }
    }

    /// Distinct categories of `task`, sorted lexicographically.
    pub fn categories(&self, task: &str) -> Result<Vec<String>> {
        self.require_task(task)?;
        let set: BTreeSet<&str> = self.docs.iter().filter_map(|d| d.label(task)).collect();
        Ok(set.into_iter().map(str::to_string).collect())
    }

    /// Label of every document for `task`, in document order.
    pub fn labels(&self, task: &str) -> Result<Vec<String>> {
        self.require_task(task)?;
        Ok(self
            .docs
            .iter()
            .map(|d| d.labels[task].clone())
            .collect())
    }

    /// Number of documents per category.
    pub fn category_counts(&self, task: &str) -> Result<BTreeMap<String, usize>> {
        self.require_task(task)?;
        let mut counts = BTreeMap::new();
        for doc in &self.docs {
            *counts.entry(doc.labels[task].clone()).or_insert(0) += 1;
        }
        Ok(counts)
    }

    pub fn find(&self, author_id: &str) -> Option<&AuthorDoc> {
        self.docs
            .binary_search_by(|d| d.author_id.as_str().cmp(author_id))
            .ok()
            .map(|i| &self.docs[i])
    }

    pub fn position(&self, author_id: &str) -> Option<usize> {
        self.docs
            .binary_search_by(|d| d.author_id.as_str().cmp(author_id))
            .ok()
    }

    /// The documents at `indices` (any order) as a new corpus.
    pub fn subset(&self, indices: &[usize]) -> Corpus {
        let mut idx = indices.to_vec();
        idx.sort_unstable();
        idx.dedup();
        Corpus {
            docs: idx.iter().map(|&i| self.docs[i].clone()).collect(),
            tasks: self.tasks.clone(),
        }
    }

    /// Total number of tokens over all documents.
    pub fn token_count(&self) -> usize {
        self.docs.iter().map(|d| d.tokens.len()).sum()
    }

    /// Mutable access for tests and perturbation experiments. Ids must stay unique.
    pub fn docs_mut(&mut self) -> &mut [AuthorDoc] {
        &mut self.docs
    }
}

/// Loads a corpus from `path` in the given layout.
pub fn load_corpus(path: &Path, format: CorpusFormat) -> Result<Corpus> {
    match format {
        CorpusFormat::PanDir => load_pan_dir(path),
        CorpusFormat::Jsonl => load_jsonl(path),
    }
}

pub const PAN_TASKS: [&str; 2] = ["gender", "age"];

fn load_pan_dir(dir: &Path) -> Result<Corpus> {
    let truth_path = dir.join("truth.txt");
    let truth = fs::read_to_string(&truth_path).map_err(|e| Error::io(&truth_path, e))?;

    let mut labels: BTreeMap<String, BTreeMap<String, String>> = BTreeMap::new();
    for (n, line) in truth.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() {
            continue;
        }
        let fields: Vec<&str> = line.split(":::").map(str::trim).collect();
        if fields.len() < 3 || fields[..3].iter().any(|f| f.is_empty()) {
            return Err(Error::parse(
                &truth_path,
                n + 1,
                "expected `author_id:::gender:::age`",
            ));
        }
        let entry: BTreeMap<String, String> = PAN_TASKS
            .iter()
            .zip(&fields[1..3])
            .map(|(task, value)| (task.to_string(), value.to_string()))
            .collect();
        if labels.insert(fields[0].to_string(), entry).is_some() {
            return Err(Error::DuplicateAuthor(fields[0].to_string()));
        }
    }

    let entries = fs::read_dir(dir).map_err(|e| Error::io(dir, e))?;
    let mut docs = Vec::new();
    for entry in entries {
        let entry = entry.map_err(|e| Error::io(dir, e))?;
        let path = entry.path();
        if path.extension().and_then(|e| e.to_str()) != Some("txt") {
            continue;
        }
        let Some(author_id) = path.file_stem().and_then(|s| s.to_str()) else {
            continue;
        };
        if author_id == "truth" {
            continue;
        }
        let doc_labels = labels
            .remove(author_id)
            .ok_or_else(|| Error::MissingTruth(author_id.to_string()))?;
        let bytes = fs::read(&path).map_err(|e| Error::io(&path, e))?;
        let text = String::from_utf8(bytes)
            .map_err(|_| Error::parse(&path, 1, "document is not valid UTF-8"))?;
        docs.push(AuthorDoc::new(author_id, text, doc_labels));
    }
    if let Some(orphan) = labels.keys().next() {
        return Err(Error::MissingDocument(orphan.clone()));
    }

    Corpus::new(docs, PAN_TASKS.iter().map(|t| t.to_string()).collect())
}

fn load_jsonl(path: &Path) -> Result<Corpus> {
    let content = fs::read_to_string(path).map_err(|e| Error::io(path, e))?;
    let mut docs = Vec::new();
    let mut tasks: Option<BTreeSet<String>> = None;

    for (n, line) in content.lines().enumerate() {
        let line_no = n + 1;
        if line.trim().is_empty() {
            continue;
        }
        let value: serde_json::Value = serde_json::from_str(line)
            .map_err(|e| Error::parse(path, line_no, e.to_string()))?;
        let serde_json::Value::Object(map) = value else {
            return Err(Error::parse(path, line_no, "expected a JSON object"));
        };

        let mut author_id = None;
        let mut text = None;
        let mut labels = BTreeMap::new();
        for (key, value) in map {
            let serde_json::Value::String(s) = value else {
                return Err(Error::parse(
                    path,
                    line_no,
                    format!("field `{key}` must be a string"),
                ));
            };
            match key.as_str() {
                "author_id" => author_id = Some(s),
                "text" => text = Some(s),
                _ => {
                    labels.insert(key, s);
                }
            }
        }
        let author_id =
            author_id.ok_or_else(|| Error::parse(path, line_no, "missing `author_id`"))?;
        let text = text.ok_or_else(|| Error::parse(path, line_no, "missing `text`"))?;

        let keys: BTreeSet<String> = labels.keys().cloned().collect();
        match &tasks {
            None => tasks = Some(keys),
            Some(expected) if *expected != keys => {
                return Err(Error::parse(
                    path,
                    line_no,
                    format!("label keys {keys:?} differ from earlier records {expected:?}"),
                ));
            }
            Some(_) => {}
        }
        docs.push(AuthorDoc::new(author_id, text, labels));
    }

    Corpus::new(docs, tasks.unwrap_or_default())
}

/// Writes a corpus as JSON lines, one author per line, readable by [`load_corpus`].
pub fn write_jsonl(corpus: &Corpus, path: &Path) -> Result<()> {
    let mut out = String::new();
    for doc in corpus.docs() {
        let mut map = serde_json::Map::new();
        map.insert("author_id".into(), doc.author_id.clone().into());
        map.insert("text".into(), doc.text.clone().into());
        for (task, label) in &doc.labels {
            map.insert(task.clone(), label.clone().into());
        }
        out.push_str(&serde_json::Value::Object(map).to_string());
        out.push('\n');
    }
    fs::write(path, out).map_err(|e| Error::io(path, e))
}
