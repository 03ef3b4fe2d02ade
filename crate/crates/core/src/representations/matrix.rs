use std::fmt::Write as _;
use std::fs;
use std::io::{BufRead, BufReader, Read};
use std::path::Path;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Which distributional recipe produced a [`TermMatrix`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum RepKind {
    #[serde(rename = "DOR")]
    Dor,
    #[serde(rename = "TCOR")]
    Tcor,
    #[serde(rename = "SSR")]
    Ssr,
    #[serde(rename = "EMBEDDING")]
    Embedding,
}

impl RepKind {
    pub fn as_str(self) -> &'static str {
        match self {
            RepKind::Dor => "DOR",
            RepKind::Tcor => "TCOR",
            RepKind::Ssr => "SSR",
            RepKind::Embedding => "EMBEDDING",
        }
    }
}

impl FromStr for RepKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "DOR" => Ok(RepKind::Dor),
            "TCOR" => Ok(RepKind::Tcor),
            "SSR" => Ok(RepKind::Ssr),
            "EMBEDDING" => Ok(RepKind::Embedding),
            other => Err(Error::invalid(format!("unknown representation kind `{other}`"))),
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
enum Rows {
    /// Row-major, `n_terms * dims` values.
    Dense(Vec<f64>),
    /// Per term, `(feature, value)` pairs sorted by feature with no zeros.
    Sparse(Vec<Vec<(u32, f64)>>),
}

/// One vector of length `dims` per vocabulary term.
#[derive(Debug, Clone, PartialEq)]
pub struct TermMatrix {
    kind: RepKind,
    dims: usize,
    terms: Vec<String>,
    feature_names: Option<Vec<String>>,
    rows: Rows,
}

impl TermMatrix {
    pub fn dense(
        kind: RepKind,
        terms: Vec<String>,
        dims: usize,
        values: Vec<f64>,
        feature_names: Option<Vec<String>>,
    ) -> Result<Self> {
        if values.len() != terms.len() * dims {
            return Err(Error::DimensionMismatch {
                expected: terms.len() * dims,
                found: values.len(),
            });
        }
        Self::check_names(dims, &feature_names)?;
        Ok(TermMatrix {
            kind,
            dims,
            terms,
            feature_names,
            rows: Rows::Dense(values),
        })
    }

    pub fn sparse(
        kind: RepKind,
        terms: Vec<String>,
        dims: usize,
        mut rows: Vec<Vec<(u32, f64)>>,
        feature_names: Option<Vec<String>>,
    ) -> Result<Self> {
        if rows.len() != terms.len() {
            return Err(Error::DimensionMismatch {
                expected: terms.len(),
                found: rows.len(),
            });
        }
        Self::check_names(dims, &feature_names)?;
        for row in &mut rows {
            row.retain(|&(_, v)| v != 0.0);
            row.sort_by_key(|&(j, _)| j);
            if let Some(&(j, _)) = row.last() {
                if j as usize >= dims {
                    return Err(Error::invalid(format!(
                        "feature index {j} out of range for {dims} dims"
                    )));
                }
            }
            if row.windows(2).any(|w| w[0].0 == w[1].0) {
                return Err(Error::invalid("duplicate feature index in sparse row"));
            }
        }
        Ok(TermMatrix {
            kind,
            dims,
            terms,
            feature_names,
            rows: Rows::Sparse(rows),
        })
    }

    fn check_names(dims: usize, names: &Option<Vec<String>>) -> Result<()> {
        match names {
            Some(n) if n.len() != dims => Err(Error::DimensionMismatch {
                expected: dims,
                found: n.len(),
            }),
            _ => Ok(()),
        }
    }

    pub fn kind(&self) -> RepKind {
        self.kind
    }

    pub fn dims(&self) -> usize {
        self.dims
    }

    pub fn n_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> &[String] {
        &self.terms
    }

    pub fn feature_names(&self) -> Option<&[String]> {
        self.feature_names.as_deref()
    }

    pub fn is_sparse(&self) -> bool {
        matches!(self.rows, Rows::Sparse(_))
    }

    pub fn get(&self, term: usize, feature: usize) -> f64 {
        match &self.rows {
            Rows::Dense(v) => v[term * self.dims + feature],
            Rows::Sparse(rows) => rows[term]
                .binary_search_by_key(&(feature as u32), |&(j, _)| j)
                .map(|k| rows[term][k].1)
                .unwrap_or(0.0),
        }
    }

    /// Calls `f(feature, value)` for every stored entry of row `term`.
    /// Dense rows report zeros too.
    pub fn for_each_in_row(&self, term: usize, mut f: impl FnMut(usize, f64)) {
        match &self.rows {
            Rows::Dense(v) => {
                let row = &v[term * self.dims..(term + 1) * self.dims];
                for (j, &x) in row.iter().enumerate() {
                    f(j, x);
                }
            }
            Rows::Sparse(rows) => {
                for &(j, x) in &rows[term] {
                    f(j as usize, x);
                }
            }
        }
    }

    /// Adds `scale * row(term)` into `acc`.
    pub fn axpy_row(&self, term: usize, scale: f64, acc: &mut [f64]) {
        debug_assert_eq!(acc.len(), self.dims);
        match &self.rows {
            Rows::Dense(v) => {
                let row = &v[term * self.dims..(term + 1) * self.dims];
                for (a, &x) in acc.iter_mut().zip(row) {
                    *a += scale * x;
                }
            }
            Rows::Sparse(rows) => {
                for &(j, x) in &rows[term] {
                    acc[j as usize] += scale * x;
                }
            }
        }
    }

    pub fn row_dense(&self, term: usize) -> Vec<f64> {
        let mut row = vec![0.0; self.dims];
        self.axpy_row(term, 1.0, &mut row);
        row
    }

    pub fn row_sum(&self, term: usize) -> f64 {
        let mut s = 0.0;
        self.for_each_in_row(term, |_, x| s += x);
        s
    }

    pub fn row_norm(&self, term: usize) -> f64 {
        let mut s = 0.0;
        self.for_each_in_row(term, |_, x| s += x * x);
        s.sqrt()
    }

    /// All values, row-major.
    pub fn to_dense(&self) -> Vec<f64> {
        match &self.rows {
            Rows::Dense(v) => v.clone(),
            Rows::Sparse(_) => (0..self.n_terms()).flat_map(|i| self.row_dense(i)).collect(),
        }
    }

    /// Same shape, names and bit patterns of every value.
    pub fn bit_identical(&self, other: &TermMatrix) -> bool {
        self.kind == other.kind
            && self.dims == other.dims
            && self.terms == other.terms
            && self.feature_names == other.feature_names
            && self
                .to_dense()
                .iter()
                .zip(other.to_dense().iter())
                .all(|(a, b)| a.to_bits() == b.to_bits())
    }

    /// Textual container: a header, the feature names, then one line per term.
    /// Values carry 17 significant digits so reading back is exact.
    pub fn to_text(&self) -> Result<String> {
        for name in self.terms.iter().chain(self.feature_names.iter().flatten()) {
            if name.is_empty() || name.contains(['\t', '\n', '\r']) {
                return Err(Error::invalid(format!(
                    "name `{}` cannot be stored in the text container",
                    name.escape_debug()
                )));
            }
        }
        let mut out = String::new();
        let storage = if self.is_sparse() { "sparse" } else { "dense" };
        let n_names = self.feature_names.as_ref().map_or(0, Vec::len);
        writeln!(out, "dtr-matrix\t1").unwrap();
        writeln!(out, "kind\t{}", self.kind.as_str()).unwrap();
        writeln!(out, "dims\t{}", self.dims).unwrap();
        writeln!(out, "terms\t{}", self.terms.len()).unwrap();
        writeln!(out, "storage\t{storage}").unwrap();
        writeln!(out, "features\t{n_names}").unwrap();
        for name in self.feature_names.iter().flatten() {
            writeln!(out, "f\t{name}").unwrap();
        }
        for (i, term) in self.terms.iter().enumerate() {
            out.push_str(term);
            out.push('\t');
            let mut first = true;
            match &self.rows {
                Rows::Dense(_) => self.for_each_in_row(i, |_, x| {
                    if !first {
                        out.push(' ');
                    }
                    first = false;
                    write!(out, "{x:.16e}").unwrap();
                }),
                Rows::Sparse(_) => self.for_each_in_row(i, |j, x| {
                    if !first {
                        out.push(' ');
                    }
                    first = false;
                    write!(out, "{j}:{x:.16e}").unwrap();
                }),
            }
            out.push('\n');
        }
        Ok(out)
    }

    pub fn save(&self, path: &Path) -> Result<()> {
        fs::write(path, self.to_text()?).map_err(|e| Error::io(path, e))
    }

    pub fn load(path: &Path) -> Result<Self> {
        let file = fs::File::open(path).map_err(|e| Error::io(path, e))?;
        Self::read_text(file, path)
    }

    pub fn from_text(text: &str) -> Result<Self> {
        Self::read_text(text.as_bytes(), Path::new("<text>"))
    }

    fn read_text(reader: impl Read, path: &Path) -> Result<Self> {
        let mut lines = BufReader::new(reader).lines().enumerate();
        let mut next = |what: &str| -> Result<(usize, String)> {
            match lines.next() {
                Some((n, Ok(line))) => Ok((n + 1, line)),
                Some((n, Err(e))) => Err(Error::parse(path, n + 1, e.to_string())),
                None => Err(Error::parse(path, 0, format!("unexpected end of file, expected {what}"))),
            }
        };
        let mut header = |key: &str| -> Result<(usize, String)> {
            let (n, line) = next(key)?;
            match line.split_once('\t') {
                Some((k, v)) if k == key => Ok((n, v.to_string())),
                _ => Err(Error::parse(path, n, format!("expected `{key}` header"))),
            }
        };
        let parse_usize = |(n, v): (usize, String)| -> Result<usize> {
            v.parse().map_err(|_| Error::parse(path, n, format!("bad count `{v}`")))
        };

        let (n, magic) = header("dtr-matrix")?;
        if magic != "1" {
            return Err(Error::parse(path, n, format!("unsupported version `{magic}`")));
        }
        let (n, kind) = header("kind")?;
        let kind: RepKind = kind.parse().map_err(|_| Error::parse(path, n, "bad kind"))?;
        let dims = parse_usize(header("dims")?)?;
        let n_terms = parse_usize(header("terms")?)?;
        let (n, storage) = header("storage")?;
        let sparse = match storage.as_str() {
            "dense" => false,
            "sparse" => true,
            _ => return Err(Error::parse(path, n, "storage must be dense or sparse")),
        };
        let n_names = parse_usize(header("features")?)?;
        if n_names != 0 && n_names != dims {
            return Err(Error::parse(path, n, "feature name count differs from dims"));
        }

        let mut names = Vec::with_capacity(n_names);
        for _ in 0..n_names {
            let (_, name) = header("f")?;
            names.push(name);
        }

        let parse_f64 = |n: usize, s: &str| -> Result<f64> {
            s.parse()
                .map_err(|_| Error::parse(path, n, format!("bad value `{s}`")))
        };

        let mut terms = Vec::with_capacity(n_terms);
        let mut dense = Vec::new();
        let mut sparse_rows = Vec::new();
        for _ in 0..n_terms {
            let (n, line) = next("term row")?;
            let (term, rest) = line
                .split_once('\t')
                .ok_or_else(|| Error::parse(path, n, "expected `term<TAB>values`"))?;
            terms.push(term.to_string());
            if sparse {
                let mut row = Vec::new();
                for item in rest.split(' ').filter(|s| !s.is_empty()) {
                    let (j, v) = item
                        .split_once(':')
                        .ok_or_else(|| Error::parse(path, n, format!("bad entry `{item}`")))?;
                    let j: u32 = j
                        .parse()
                        .map_err(|_| Error::parse(path, n, format!("bad index `{j}`")))?;
                    row.push((j, parse_f64(n, v)?));
                }
                sparse_rows.push(row);
            } else {
                let before = dense.len();
                for v in rest.split(' ').filter(|s| !s.is_empty()) {
                    dense.push(parse_f64(n, v)?);
                }
                if dense.len() - before != dims {
                    return Err(Error::parse(
                        path,
                        n,
                        format!("expected {dims} values, found {}", dense.len() - before),
                    ));
                }
            }
        }

        let names = (n_names > 0).then_some(names);
        if sparse {
            Self::sparse(kind, terms, dims, sparse_rows, names)
        } else {
            Self::dense(kind, terms, dims, dense, names)
        }
    }
}
