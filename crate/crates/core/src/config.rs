//! Declarative experiment files (TOML).
//!
//! ```toml
//! seed = 42
//! folds = 10
//! tasks = ["gender"]
//! baselines = ["bow"]
//! out = "reports"
//!
//! [[corpora]]
//! name = "synthetic"
//! path = "data/synthetic.jsonl"
//! format = "jsonl"
//!
//! [[representations]]
//! kind = "bow"
//!
//! [[representations]]
//! kind = "ssr"
//! k_per_class = 3
//!
//! [classifier]
//! c = 1.0
//! ```
//!
//! Relative paths are resolved against the directory holding the file.

use std::collections::BTreeSet;
use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};

use crate::corpus::CorpusFormat;
use crate::error::{Error, Result};
use crate::evaluation::{ClassifierConfig, RepresentationConfig};

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CorpusSpec {
    /// Column name in reports; defaults to the file stem.
    #[serde(default)]
    pub name: Option<String>,
    pub path: PathBuf,
    #[serde(default = "default_format")]
    pub format: String,
}

fn default_format() -> String {
    "jsonl".into()
}

impl CorpusSpec {
    pub fn new(path: impl Into<PathBuf>, format: impl Into<String>) -> Self {
        CorpusSpec {
            name: None,
            path: path.into(),
            format: format.into(),
        }
    }

    pub fn name(&self) -> String {
        self.name.clone().unwrap_or_else(|| {
            self.path
                .file_stem()
                .map(|s| s.to_string_lossy().into_owned())
                .unwrap_or_else(|| "corpus".into())
        })
    }

    pub fn format(&self) -> Result<CorpusFormat> {
        self.format.parse()
    }
}

fn default_folds() -> usize {
    10
}

fn default_alpha() -> f64 {
    0.05
}

fn default_out() -> PathBuf {
    PathBuf::from("reports")
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ExperimentConfig {
    /// Single source of randomness for folds, clustering, embeddings and the SVM.
    pub seed: u64,
    #[serde(default = "default_folds")]
    pub folds: usize,
    /// Tasks to evaluate; empty means every task of each corpus.
    #[serde(default)]
    pub tasks: Vec<String>,
    #[serde(default)]
    pub corpora: Vec<CorpusSpec>,
    #[serde(default)]
    pub representations: Vec<RepresentationConfig>,
    #[serde(default)]
    pub classifier: ClassifierConfig,
    /// Representation ids every other representation is tested against.
    #[serde(default)]
    pub baselines: Vec<String>,
    #[serde(default = "default_alpha")]
    pub alpha: f64,
    #[serde(default = "default_out")]
    pub out: PathBuf,
}

impl ExperimentConfig {
    pub fn from_toml(text: &str) -> Result<Self> {
        toml::from_str(text).map_err(|e| Error::Config(e.message().to_string()))
    }

    /// Reads and validates `path`, resolving relative paths against its directory.
    pub fn load(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path).map_err(|e| Error::io(path, e))?;
        let mut cfg = Self::from_toml(&text)
            .map_err(|e| Error::Config(format!("{}: {e}", path.display())))?;
        cfg.resolve_paths(path.parent().unwrap_or(Path::new("")));
        Ok(cfg)
    }

    pub fn resolve_paths(&mut self, base: &Path) {
        let fix = |p: &mut PathBuf| {
            if p.is_relative() {
                *p = base.join(&*p);
            }
        };
        for c in &mut self.corpora {
            fix(&mut c.path);
        }
        for r in &mut self.representations {
            if let Some(p) = &mut r.pretrained {
                fix(p);
            }
        }
        fix(&mut self.out);
    }

    pub fn validate(&self) -> Result<()> {
        if self.folds == 0 {
            return Err(Error::Config("folds must be positive".into()));
        }
        if !(self.alpha > 0.0 && self.alpha < 1.0) {
            return Err(Error::Config("alpha must lie in (0, 1)".into()));
        }
        if self.corpora.is_empty() {
            return Err(Error::Config("no corpus configured".into()));
        }
        if self.representations.is_empty() {
            return Err(Error::Config("no representation configured".into()));
        }
        for c in &self.corpora {
            c.format()?;
        }
        let mut ids = BTreeSet::new();
        for r in &self.representations {
            r.validate()?;
            if !ids.insert(r.id()) {
                return Err(Error::Config(format!(
                    "representation id `{}` is used twice; set `name`",
                    r.id()
                )));
            }
        }
        for b in &self.baselines {
            if !ids.contains(b) {
                return Err(Error::Config(format!(
                    "baseline `{b}` is not among the configured representations"
                )));
            }
        }
        self.classifier.validate()
    }
}
