use std::collections::HashMap;
use std::fmt::Write as _;
use std::fs::File;
use std::io::{BufRead, BufReader};
use std::path::Path;

use crate::corpus::Vocabulary;
use crate::error::{Error, Result};
use crate::representations::{RepKind, TermMatrix};

/// Vectors read from a textual word2vec file.
#[derive(Debug, Clone, PartialEq)]
pub struct WordVectors {
    pub dim: usize,
    pub vectors: HashMap<String, Vec<f64>>,
}

/// Pretrained vectors projected onto a vocabulary.
#[derive(Debug, Clone, PartialEq)]
pub struct LoadedEmbeddings {
    pub matrix: TermMatrix,
    /// Vocabulary terms found in the file.
    pub found: usize,
    /// `found / |V|`.
    pub coverage: f64,
}

impl WordVectors {
    /// Reads a file whose first line is `count dim` followed by `count`
    /// lines of `token v1 .. v_dim`. Only tokens accepted by `keep` are
    /// stored; the rest are still validated. The first occurrence of a
    /// repeated token wins.
    pub fn read(path: &Path, keep: impl Fn(&str) -> bool) -> Result<Self> {
        let file = File::open(path).map_err(|e| Error::io(path, e))?;
        let mut lines = BufReader::new(file).lines();

        let header = match lines.next() {
            Some(Ok(line)) => line,
            Some(Err(e)) => return Err(Error::parse(path, 1, e.to_string())),
            None => return Err(Error::parse(path, 1, "empty file, expected `count dim` header")),
        };
        let fields: Vec<&str> = header.split_whitespace().collect();
        let (count, dim) = match fields.as_slice() {
            [c, d] => match (c.parse::<usize>(), d.parse::<usize>()) {
                (Ok(c), Ok(d)) if d > 0 => (c, d),
                _ => return Err(Error::parse(path, 1, format!("malformed header `{header}`"))),
            },
            _ => return Err(Error::parse(path, 1, format!("malformed header `{header}`"))),
        };

        let mut vectors = HashMap::new();
        let mut rows = 0;
        for (n, line) in lines.enumerate() {
            let line_no = n + 2;
            let line = line.map_err(|e| Error::parse(path, line_no, e.to_string()))?;
            if line.trim().is_empty() {
                continue;
            }
            rows += 1;
            let mut parts = line.split_whitespace();
            let token = parts.next().expect("non-empty line");
            let values: Vec<&str> = parts.collect();
            if values.len() != dim {
                return Err(Error::parse(
                    path,
                    line_no,
                    format!("expected {dim} values for `{token}`, found {}", values.len()),
                ));
            }
            if !keep(token) || vectors.contains_key(token) {
                continue;
            }
            let parsed = values
                .iter()
                .map(|v| {
                    v.parse::<f64>()
                        .ok()
                        .filter(|x| x.is_finite())
                        .ok_or_else(|| Error::parse(path, line_no, format!("bad value `{v}`")))
                })
                .collect::<Result<Vec<f64>>>()?;
            vectors.insert(token.to_string(), parsed);
        }
        if rows != count {
            return Err(Error::parse(
                path,
                1,
                format!("header announces {count} vectors, file holds {rows}"),
            ));
        }
        Ok(WordVectors { dim, vectors })
    }

    /// One row per vocabulary term; terms without a vector get zeros.
    pub fn project(&self, vocab: &Vocabulary) -> Result<LoadedEmbeddings> {
        let mut values = vec![0.0; vocab.len() * self.dim];
        let mut found = 0;
        for (i, term) in vocab.terms().iter().enumerate() {
            if let Some(v) = self.vectors.get(term) {
                values[i * self.dim..(i + 1) * self.dim].copy_from_slice(v);
                found += 1;
            }
        }
        let coverage = if vocab.is_empty() {
            0.0
        } else {
            found as f64 / vocab.len() as f64
        };
        let matrix = TermMatrix::dense(
            RepKind::Embedding,
            vocab.terms().to_vec(),
            self.dim,
            values,
            None,
        )?;
        Ok(LoadedEmbeddings {
            matrix,
            found,
            coverage,
        })
    }
}

/// Reads pretrained vectors for the terms of `vocab`.
pub fn load_embeddings(path: &Path, vocab: &Vocabulary) -> Result<LoadedEmbeddings> {
    WordVectors::read(path, |t| vocab.index_of(t).is_some())?.project(vocab)
}

/// Writes every row of `tm` in textual word2vec format with round-trip precision.
pub fn save_embeddings(tm: &TermMatrix, path: &Path) -> Result<()> {
    let mut out = format!("{} {}\n", tm.n_terms(), tm.dims());
    for (i, term) in tm.terms().iter().enumerate() {
        if term.chars().any(char::is_whitespace) || term.is_empty() {
            return Err(Error::invalid(format!("term `{term}` cannot be written")));
        }
        out.push_str(term);
        for x in tm.row_dense(i) {
            write!(out, " {x:e}").unwrap();
        }
        out.push('\n');
    }
    std::fs::write(path, out).map_err(|e| Error::io(path, e))
}
