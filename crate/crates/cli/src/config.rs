//! Run configuration: input expansion, network naming, evaluation-instance
//! selection, and parameter validation. Configuration is explicit — nothing
//! is read from environment variables.

use hicent::centrality::{CentralityKind, CentralityOptions};
use hicent::evaluation::{EvalMeasure, EvalParams, TopkRule};
use hicent::hierarchy::HierarchyKind;
use std::fmt;
use std::path::{Path, PathBuf};

/// A configuration problem; the process exits with code 2.
#[derive(Debug)]
pub struct ConfigError(pub String);

impl fmt::Display for ConfigError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl std::error::Error for ConfigError {}

fn err<T>(message: impl Into<String>) -> Result<T, ConfigError> {
    Err(ConfigError(message.into()))
}

/// Which tables are written as CSV, JSON, or both.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum OutputFormat {
    #[default]
    Csv,
    Json,
    Both,
}

impl OutputFormat {
    pub fn as_str(self) -> &'static str {
        match self {
            OutputFormat::Csv => "csv",
            OutputFormat::Json => "json",
            OutputFormat::Both => "both",
        }
    }

    pub fn wants_csv(self) -> bool {
        matches!(self, OutputFormat::Csv | OutputFormat::Both)
    }

    pub fn wants_json(self) -> bool {
        matches!(self, OutputFormat::Json | OutputFormat::Both)
    }
}

/// One selectable per-node measure (for the `measures` command).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum MeasureSelect {
    Hierarchy(HierarchyKind),
    Centrality(CentralityKind),
}

impl MeasureSelect {
    pub const ALL: [MeasureSelect; 10] = [
        MeasureSelect::Hierarchy(HierarchyKind::Core),
        MeasureSelect::Hierarchy(HierarchyKind::Truss),
        MeasureSelect::Hierarchy(HierarchyKind::LocalReaching),
        MeasureSelect::Hierarchy(HierarchyKind::TriangleParticipation),
        MeasureSelect::Centrality(CentralityKind::Degree),
        MeasureSelect::Centrality(CentralityKind::Local),
        MeasureSelect::Centrality(CentralityKind::Betweenness),
        MeasureSelect::Centrality(CentralityKind::CurrentFlowCloseness),
        MeasureSelect::Centrality(CentralityKind::Katz),
        MeasureSelect::Centrality(CentralityKind::Pagerank),
    ];

    pub fn id(self) -> &'static str {
        match self {
            MeasureSelect::Hierarchy(kind) => kind.as_str(),
            MeasureSelect::Centrality(kind) => kind.as_str(),
        }
    }

    pub fn parse(token: &str) -> Result<MeasureSelect, ConfigError> {
        MeasureSelect::ALL
            .into_iter()
            .find(|m| m.id() == token)
            .ok_or_else(|| {
                let known: Vec<&str> = MeasureSelect::ALL.iter().map(|m| m.id()).collect();
                ConfigError(format!(
                    "unknown measure '{token}' (known: {})",
                    known.join(", ")
                ))
            })
    }
}

/// One input network: display name plus source path.
#[derive(Clone, Debug)]
pub struct NetworkInput {
    pub name: String,
    pub path: PathBuf,
}

/// Fully validated settings for one command invocation.
#[derive(Clone, Debug)]
pub struct RunConfig {
    pub inputs: Vec<NetworkInput>,
    /// Measures the `measures` command emits (all ten by default).
    pub measures: Vec<MeasureSelect>,
    /// Evaluation instances for the pipeline, in emission order.
    pub evals: Vec<EvalParams>,
    /// Top-k rule applied to every instance (echoed in the manifest).
    pub topk: TopkRule,
    /// Binarization threshold μ.
    pub threshold: f64,
    /// Cluster-count override; `None` selects 3 for correlation instances
    /// and 2 for similarity instances.
    pub cluster_k: Option<usize>,
    /// Seed for k-means initialization.
    pub seed: u64,
    pub centrality: CentralityOptions,
    pub jobs: usize,
    pub output: PathBuf,
    pub format: OutputFormat,
    pub strict: bool,
}

impl RunConfig {
    /// Baseline configuration over the given inputs; mirrors the CLI defaults.
    pub fn new(inputs: Vec<NetworkInput>, output: PathBuf) -> Result<RunConfig, ConfigError> {
        if inputs.is_empty() {
            return err("at least one input network is required");
        }
        Ok(RunConfig {
            inputs,
            measures: MeasureSelect::ALL.to_vec(),
            evals: parse_evals(
                &default_eval_tokens(),
                &[0.5, 0.9],
                TopkRule::Adaptive,
            )?,
            topk: TopkRule::Adaptive,
            threshold: 0.7,
            cluster_k: None,
            seed: 0,
            centrality: CentralityOptions::default(),
            jobs: default_jobs(),
            output,
            format: OutputFormat::Csv,
            strict: false,
        })
    }
}

pub fn default_eval_tokens() -> Vec<String> {
    ["pearson", "spearman", "kendall", "jaccard", "rbo"]
        .into_iter()
        .map(str::to_string)
        .collect()
}

pub fn default_jobs() -> usize {
    std::thread::available_parallelism().map_or(1, |n| n.get())
}

/// Expand files and directories into named network inputs. Directories
/// contribute their regular files sorted by name; names are sanitized file
/// stems, deduplicated with `_2`, `_3`, … suffixes in input order.
pub fn expand_inputs(paths: &[PathBuf]) -> Result<Vec<NetworkInput>, ConfigError> {
    let mut files = Vec::new();
    for path in paths {
        let meta = std::fs::metadata(path)
            .map_err(|e| ConfigError(format!("input {}: {e}", path.display())))?;
        if meta.is_dir() {
            let mut entries: Vec<PathBuf> = std::fs::read_dir(path)
                .map_err(|e| ConfigError(format!("input {}: {e}", path.display())))?
                .filter_map(|entry| entry.ok())
                .filter(|entry| entry.file_type().map(|t| t.is_file()).unwrap_or(false))
                .map(|entry| entry.path())
                .collect();
            entries.sort();
            if entries.is_empty() {
                return err(format!("input directory {} holds no files", path.display()));
            }
            files.extend(entries);
        } else {
            files.push(path.clone());
        }
    }
    if files.is_empty() {
        return err("at least one input network is required");
    }

    let mut used: std::collections::HashMap<String, usize> = std::collections::HashMap::new();
    let inputs = files
        .into_iter()
        .map(|path| {
            let stem = network_stem(&path);
            let count = used.entry(stem.clone()).or_insert(0);
            *count += 1;
            let name = if *count == 1 {
                stem
            } else {
                format!("{stem}_{count}")
            };
            NetworkInput { name, path }
        })
        .collect();
    Ok(inputs)
}

/// File stem reduced to a directory- and CSV-safe token.
fn network_stem(path: &Path) -> String {
    let stem = path
        .file_stem()
        .map(|s| s.to_string_lossy().into_owned())
        .unwrap_or_else(|| "network".to_string());
    let cleaned: String = stem
        .chars()
        .map(|c| {
            if c.is_ascii_alphanumeric() || matches!(c, '.' | '_' | '-') {
                c
            } else {
                '_'
            }
        })
        .collect();
    if cleaned.is_empty() {
        "network".to_string()
    } else {
        cleaned
    }
}

/// Resolve `--eval` tokens into concrete instances. `rbo` expands to one
/// instance per `--rbo-p` value; duplicates collapse, order is preserved.
pub fn parse_evals(
    tokens: &[String],
    rbo_ps: &[f64],
    topk: TopkRule,
) -> Result<Vec<EvalParams>, ConfigError> {
    if tokens.is_empty() {
        return err("at least one evaluation measure is required");
    }
    let mut evals: Vec<EvalParams> = Vec::new();
    let mut push = |params: EvalParams| {
        if !evals.iter().any(|e| e.id() == params.id()) {
            evals.push(params);
        }
    };
    for token in tokens {
        match token.as_str() {
            "pearson" => push(with_topk(EvalParams::new(EvalMeasure::Pearson), topk)),
            "spearman" => push(with_topk(EvalParams::new(EvalMeasure::Spearman), topk)),
            "kendall" => push(with_topk(EvalParams::new(EvalMeasure::KendallB), topk)),
            "jaccard" => push(with_topk(EvalParams::new(EvalMeasure::Jaccard), topk)),
            "rbo" => {
                if rbo_ps.is_empty() {
                    return err("--eval rbo requires at least one --rbo-p value");
                }
                for &p in rbo_ps {
                    if !(p > 0.0 && p < 1.0) {
                        return err(format!("--rbo-p must lie in (0, 1), got {p}"));
                    }
                    push(with_topk(EvalParams::rbo(p), topk));
                }
            }
            other => {
                return err(format!(
                    "unknown evaluation measure '{other}' (known: pearson, spearman, kendall, jaccard, rbo)"
                ))
            }
        }
    }
    Ok(evals)
}

fn with_topk(mut params: EvalParams, topk: TopkRule) -> EvalParams {
    params.topk = topk;
    params
}

/// Parse `--topk`: `adaptive` or an explicit positive list size.
pub fn parse_topk(token: &str) -> Result<TopkRule, ConfigError> {
    if token == "adaptive" {
        return Ok(TopkRule::Adaptive);
    }
    match token.parse::<usize>() {
        Ok(k) if k >= 1 => Ok(TopkRule::Explicit(k)),
        _ => err(format!("--topk must be 'adaptive' or a positive integer, got '{token}'")),
    }
}

pub fn validate_threshold(mu: f64) -> Result<f64, ConfigError> {
    if mu > 0.0 && mu <= 1.0 {
        Ok(mu)
    } else {
        err(format!("--threshold must lie in (0, 1], got {mu}"))
    }
}

pub fn validate_cluster_k(k: Option<usize>) -> Result<Option<usize>, ConfigError> {
    match k {
        Some(0) => err("--k must be at least 1"),
        other => Ok(other),
    }
}

pub fn validate_jobs(jobs: Option<usize>) -> Result<usize, ConfigError> {
    match jobs {
        None => Ok(default_jobs()),
        Some(0) => err("--jobs must be at least 1"),
        Some(n) => Ok(n),
    }
}

pub fn validate_katz_s(s: Option<f64>) -> Result<Option<f64>, ConfigError> {
    match s {
        Some(v) if !v.is_finite() || v < 0.0 => {
            err(format!("--katz-s must be a finite non-negative number, got {v}"))
        }
        other => Ok(other),
    }
}

/// Evaluation families for ranking tables: the three correlations pool into
/// one λ count, Jaccard stands alone, and the RBO instances pool together.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum EvalFamily {
    Correlation,
    Jaccard,
    Rbo,
}

impl EvalFamily {
    pub fn of(measure: EvalMeasure) -> EvalFamily {
        match measure {
            EvalMeasure::Pearson | EvalMeasure::Spearman | EvalMeasure::KendallB => {
                EvalFamily::Correlation
            }
            EvalMeasure::Jaccard => EvalFamily::Jaccard,
            EvalMeasure::Rbo => EvalFamily::Rbo,
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            EvalFamily::Correlation => "correlation",
            EvalFamily::Jaccard => "jaccard",
            EvalFamily::Rbo => "rbo",
        }
    }
}
