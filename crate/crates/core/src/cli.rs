//! Command-line front end behind the `dtrprof` binary.
//!
//! Exit codes: 0 on success, 1 on a runtime failure, 2 on a usage or
//! configuration error.

use std::collections::BTreeMap;
use std::ffi::OsString;
use std::fmt::Write as _;
use std::fs;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand};

use crate::config::{CorpusSpec, ExperimentConfig};
use crate::corpus::{
    build_vocabulary, english_stopwords, load_corpus, load_stopwords, Corpus, Stopwords,
    DEFAULT_MAX_TERMS,
};
use crate::embeddings::{nearest_neighbors, save_embeddings, train_skipgram_traced, EmbeddingConfig, WordVectors};
use crate::error::{Error, Result};
use crate::evaluation::{
    collection_stats, correlation_map, cross_validate, fold_accuracy_csv, representative_authors,
    CollectionStats, EvalReport, GenreEvaluation, RepresentationConfig,
};
use crate::corpus::Vocabulary;

/// Environment variable naming the default stopword list (one word per line).
pub const STOPWORDS_ENV: &str = "DTRPROF_STOPWORDS";

#[derive(Debug, Parser)]
#[command(name = "dtrprof", version, about = "Author profiling with distributional term representations")]
pub struct Cli {
    /// Stopword list used by `characterize` and `top-terms` [env: DTRPROF_STOPWORDS]
    #[arg(long, global = true)]
    pub stopwords: Option<PathBuf>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Cross-validate the configured representations and write reports.
    Run(RunArgs),
    /// Print collection characteristics (TTR, LD, SX, S, In, H).
    Characterize(CharacterizeArgs),
    /// Most discriminative DOR authors per category with their tf-idf words.
    TopTerms(TopTermsArgs),
    /// Train skip-gram vectors and save them in word2vec text format.
    EmbedTrain(EmbedTrainArgs),
    /// Nearest neighbours of a term in a word2vec text file.
    EmbedNeighbors(EmbedNeighborsArgs),
}

#[derive(Debug, Args)]
pub struct CorpusArgs {
    /// Corpus file (jsonl) or directory (pan-dir).
    #[arg(long)]
    pub corpus: Option<PathBuf>,
    /// `jsonl` or `pan-dir`.
    #[arg(long, default_value = "jsonl")]
    pub format: String,
}

#[derive(Debug, Args)]
pub struct RunArgs {
    #[arg(long)]
    pub config: Option<PathBuf>,
    /// Replaces the configured corpora.
    #[arg(long)]
    pub corpus: Option<PathBuf>,
    #[arg(long)]
    pub format: Option<String>,
    /// Comma-separated tasks.
    #[arg(long, value_delimiter = ',')]
    pub task: Vec<String>,
    /// Comma-separated representation kinds; replaces the configured list.
    #[arg(long, value_delimiter = ',')]
    pub rep: Vec<String>,
    #[arg(long)]
    pub seed: Option<u64>,
    #[arg(long)]
    pub folds: Option<usize>,
    /// Report directory.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct CharacterizeArgs {
    #[command(flatten)]
    pub corpus: CorpusArgs,
    /// Characterize the corpora of an experiment file instead.
    #[arg(long)]
    pub config: Option<PathBuf>,
    /// Task for In and H; every task when omitted.
    #[arg(long)]
    pub task: Option<String>,
    /// Directory for `characteristics.csv`.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct TopTermsArgs {
    #[command(flatten)]
    pub corpus: CorpusArgs,
    #[arg(long)]
    pub task: String,
    /// Authors reported per category.
    #[arg(long, default_value_t = 3)]
    pub count: usize,
    /// Words reported per author.
    #[arg(long, default_value_t = 10)]
    pub terms: usize,
    /// Directory for `top_terms.json`.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct EmbedTrainArgs {
    #[command(flatten)]
    pub corpus: CorpusArgs,
    #[arg(long)]
    pub seed: u64,
    /// Output vector file.
    #[arg(long)]
    pub out: PathBuf,
    #[arg(long, default_value_t = DEFAULT_MAX_TERMS)]
    pub max_terms: usize,
    #[arg(long, default_value_t = 100)]
    pub dim: usize,
    #[arg(long, default_value_t = 5)]
    pub window: usize,
    #[arg(long, default_value_t = 5)]
    pub negatives: usize,
    #[arg(long, default_value_t = 5)]
    pub epochs: usize,
    #[arg(long, default_value_t = 1)]
    pub min_count: u64,
}

#[derive(Debug, Args)]
pub struct EmbedNeighborsArgs {
    /// Word2vec text file.
    #[arg(long)]
    pub vectors: PathBuf,
    #[arg(long)]
    pub term: String,
    #[arg(long, short, default_value_t = 10)]
    pub k: usize,
}

/// Exit status for an error: 2 for usage/configuration problems, 1 otherwise.
pub fn exit_code(err: &Error) -> i32 {
    match err {
        Error::Config(_) | Error::UnknownTask(_) => 2,
        _ => 1,
    }
}

/// Parses `args` (including the program name), runs the command and
/// returns the process exit status.
pub fn main_with_args<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return code;
        }
    };
    match execute(&cli) {
        Ok(()) => 0,
        Err(e) => {
            eprintln!("error: {e}");
            exit_code(&e)
        }
    }
}

pub fn execute(cli: &Cli) -> Result<()> {
    match &cli.command {
        Command::Run(args) => cmd_run(args),
        Command::Characterize(args) => cmd_characterize(args, &stopwords(cli)?),
        Command::TopTerms(args) => cmd_top_terms(args, &stopwords(cli)?),
        Command::EmbedTrain(args) => cmd_embed_train(args),
        Command::EmbedNeighbors(args) => cmd_embed_neighbors(args),
    }
}

fn stopwords(cli: &Cli) -> Result<Stopwords> {
    let path = cli
        .stopwords
        .clone()
        .or_else(|| std::env::var_os(STOPWORDS_ENV).map(PathBuf::from));
    match path {
        Some(p) => {
            require_exists(&p)?;
            load_stopwords(&p)
        }
        None => Ok(english_stopwords()),
    }
}

fn require_exists(path: &Path) -> Result<()> {
    if path.exists() {
        Ok(())
    } else {
        Err(Error::Config(format!("{} does not exist", path.display())))
    }
}

fn open_corpus(spec: &CorpusSpec) -> Result<Corpus> {
    require_exists(&spec.path)?;
    load_corpus(&spec.path, spec.format()?)
}

fn corpus_from_args(args: &CorpusArgs) -> Result<Corpus> {
    let path = args
        .corpus
        .as_ref()
        .ok_or_else(|| Error::Config("--corpus is required".into()))?;
    open_corpus(&CorpusSpec::new(path, args.format.clone()))
}

fn write_file(path: &Path, contents: &str) -> Result<()> {
    if let Some(dir) = path.parent().filter(|d| !d.as_os_str().is_empty()) {
        fs::create_dir_all(dir).map_err(|e| Error::io(dir, e))?;
    }
    fs::write(path, contents).map_err(|e| Error::io(path, e))
}

fn tasks_for(corpus: &Corpus, requested: &[String]) -> Result<Vec<String>> {
    if requested.is_empty() {
        return Ok(corpus.tasks().iter().cloned().collect());
    }
    for t in requested {
        if !corpus.has_task(t) {
            return Err(Error::UnknownTask(t.clone()));
        }
    }
    Ok(requested.to_vec())
}

/// Experiment file merged with command-line overrides.
pub fn resolve_run_config(args: &RunArgs) -> Result<ExperimentConfig> {
    let mut cfg = match &args.config {
        Some(path) => {
            require_exists(path)?;
            ExperimentConfig::load(path)?
        }
        None => {
            let seed = args
                .seed
                .ok_or_else(|| Error::Config("a seed is required (--seed or config file)".into()))?;
            ExperimentConfig::from_toml(&format!("seed = {seed}"))?
        }
    };
    if let Some(path) = &args.corpus {
        let format = args.format.clone().unwrap_or_else(|| "jsonl".into());
        cfg.corpora = vec![CorpusSpec::new(path, format)];
    } else if let Some(format) = &args.format {
        cfg.corpora.iter_mut().for_each(|c| c.format = format.clone());
    }
    if !args.task.is_empty() {
        cfg.tasks = args.task.clone();
    }
    if !args.rep.is_empty() {
        cfg.representations = args
            .rep
            .iter()
            .map(|r| Ok(RepresentationConfig::of_kind(r.parse()?)))
            .collect::<Result<_>>()?;
        let ids: Vec<String> = cfg.representations.iter().map(RepresentationConfig::id).collect();
        cfg.baselines.retain(|b| ids.contains(b));
    }
    if let Some(seed) = args.seed {
        cfg.seed = seed;
    }
    if let Some(folds) = args.folds {
        cfg.folds = folds;
    }
    if let Some(out) = &args.out {
        cfg.out = out.clone();
    }
    cfg.validate()?;
    Ok(cfg)
}

/// Accuracy table: one row per representation, one column per corpus.
/// A `*` marks a significant difference against some baseline.
fn accuracy_table(task: &str, corpora: &[String], results: &BTreeMap<String, Vec<EvalReport>>, reps: &[String]) -> String {
    let mut out = format!("task: {task}\n{:<16}", "representation");
    for c in corpora {
        write!(out, " {c:>14}").unwrap();
    }
    out.push('\n');
    for (r, rep) in reps.iter().enumerate() {
        write!(out, "{rep:<16}").unwrap();
        for c in corpora {
            let report = &results[c][r];
            let star = if report.significance.iter().any(|s| s.test.significant) { "*" } else { "" };
            write!(out, " {:>14}", format!("{:.4}{star}", report.mean_accuracy)).unwrap();
        }
        out.push('\n');
    }
    out
}

pub fn cmd_run(args: &RunArgs) -> Result<()> {
    let cfg = resolve_run_config(args)?;
    let mut loaded = Vec::new();
    for spec in &cfg.corpora {
        loaded.push((spec.name(), open_corpus(spec)?));
    }
    let tasks = match cfg.tasks.is_empty() {
        true => loaded[0].1.tasks().iter().cloned().collect(),
        false => cfg.tasks.clone(),
    };
    for (_, corpus) in &loaded {
        tasks_for(corpus, &tasks)?;
    }
    let reps: Vec<String> = cfg.representations.iter().map(RepresentationConfig::id).collect();
    let names: Vec<String> = loaded.iter().map(|(n, _)| n.clone()).collect();
    let stopwords = english_stopwords();

    for task in &tasks {
        let mut results: BTreeMap<String, Vec<EvalReport>> = BTreeMap::new();
        for (name, corpus) in &loaded {
            let mut reports = Vec::new();
            for rep in &cfg.representations {
                log::info!("{name}/{task}: evaluating {}", rep.id());
                reports.push(cross_validate(corpus, task, rep, &cfg.classifier, cfg.folds, cfg.seed)?);
            }
            for b in &cfg.baselines {
                let base = reports.iter().find(|r| &r.representation == b).unwrap().clone();
                for r in reports.iter_mut().filter(|r| &r.representation != b) {
                    r.compare_to(&base, cfg.alpha)?;
                }
            }
            for r in &reports {
                let file = cfg.out.join(format!("{name}_{task}_{}.json", r.representation));
                write_file(&file, &r.to_json()?)?;
            }
            write_file(
                &cfg.out.join(format!("{name}_{task}_folds.csv")),
                &fold_accuracy_csv(&reports),
            )?;
            results.insert(name.clone(), reports);
        }
        print!("{}", accuracy_table(task, &names, &results, &reps));

        if loaded.len() >= 2 {
            if let Some(baseline) = cfg.baselines.first() {
                let mut genres = Vec::new();
                for (name, corpus) in &loaded {
                    let stats = collection_stats(corpus, task, &stopwords)?;
                    let reports = &results[name];
                    let base = reports.iter().find(|r| &r.representation == baseline).unwrap();
                    let others: Vec<EvalReport> =
                        reports.iter().filter(|r| &r.representation != baseline).cloned().collect();
                    genres.push(GenreEvaluation::from_reports(name.clone(), stats, base, &others));
                }
                let table = correlation_map(&genres)?;
                write_file(&cfg.out.join(format!("{task}_correlation.csv")), &table.to_csv())?;
            }
        }
    }
    println!("reports written to {}", cfg.out.display());
    Ok(())
}

fn stats_table(rows: &[(String, String, CollectionStats)]) -> String {
    let mut out = CollectionStats::csv_header();
    out.push('\n');
    for (corpus, task, stats) in rows {
        out.push_str(&stats.csv_row(corpus, task));
        out.push('\n');
    }
    out
}

pub fn cmd_characterize(args: &CharacterizeArgs, stopwords: &Stopwords) -> Result<()> {
    let specs = match (&args.config, &args.corpus.corpus) {
        (_, Some(path)) => vec![CorpusSpec::new(path, args.corpus.format.clone())],
        (Some(cfg), None) => {
            require_exists(cfg)?;
            ExperimentConfig::load(cfg)?.corpora
        }
        (None, None) => return Err(Error::Config("--corpus or --config is required".into())),
    };
    let mut rows = Vec::new();
    for spec in &specs {
        let corpus = open_corpus(spec)?;
        let requested: Vec<String> = args.task.iter().cloned().collect();
        for task in tasks_for(&corpus, &requested)? {
            let stats = collection_stats(&corpus, &task, stopwords)?;
            rows.push((spec.name(), task, stats));
        }
    }
    let csv = stats_table(&rows);
    print!("{csv}");
    if let Some(dir) = &args.out {
        write_file(&dir.join("characteristics.csv"), &csv)?;
    }
    Ok(())
}

pub fn cmd_top_terms(args: &TopTermsArgs, stopwords: &Stopwords) -> Result<()> {
    let corpus = corpus_from_args(&args.corpus)?;
    tasks_for(&corpus, std::slice::from_ref(&args.task))?;
    let authors = representative_authors(&corpus, &args.task, args.count, args.terms, stopwords)?;
    for a in &authors {
        let words: Vec<&str> = a.top_terms.iter().map(|(t, _)| t.as_str()).collect();
        println!("{}\t{}\tIG={:.4}\t{}", a.category, a.author_id, a.information_gain, words.join(", "));
    }
    if let Some(dir) = &args.out {
        let json = serde_json::to_string_pretty(&authors).map_err(|e| Error::invalid(e.to_string()))?;
        write_file(&dir.join("top_terms.json"), &json)?;
    }
    Ok(())
}

pub fn cmd_embed_train(args: &EmbedTrainArgs) -> Result<()> {
    let corpus = corpus_from_args(&args.corpus)?;
    let cfg = EmbeddingConfig {
        dim: args.dim,
        window: args.window,
        negatives: args.negatives,
        epochs: args.epochs,
        min_count: args.min_count,
        seed: args.seed,
        ..EmbeddingConfig::default()
    };
    cfg.validate()?;
    if args.max_terms == 0 {
        return Err(Error::Config("--max-terms must be positive".into()));
    }
    let vocab = build_vocabulary(&corpus, args.max_terms);
    let (tm, losses) = train_skipgram_traced(&corpus, &vocab, &cfg)?;
    for (epoch, loss) in losses.iter().enumerate() {
        println!("epoch {}\tloss {loss:.6}", epoch + 1);
    }
    if let Some(dir) = args.out.parent().filter(|d| !d.as_os_str().is_empty()) {
        fs::create_dir_all(dir).map_err(|e| Error::io(dir, e))?;
    }
    save_embeddings(&tm, &args.out)?;
    println!("{} vectors of dimension {} written to {}", tm.n_terms(), tm.dims(), args.out.display());
    Ok(())
}

pub fn cmd_embed_neighbors(args: &EmbedNeighborsArgs) -> Result<()> {
    require_exists(&args.vectors)?;
    let vectors = WordVectors::read(&args.vectors, |_| true)?;
    let mut terms: Vec<String> = vectors.vectors.keys().cloned().collect();
    terms.sort();
    let vocab = Vocabulary::from_terms(terms);
    let tm = vectors.project(&vocab)?.matrix;
    for (term, sim) in nearest_neighbors(&tm, &args.term, args.k)? {
        println!("{term}\t{sim:.6}");
    }
    Ok(())
}
