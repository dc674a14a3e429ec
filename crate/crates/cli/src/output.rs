//! Output-tree writer, table serializers, and the run manifest. Every file
//! goes through [`OutputTree`] so the manifest can list exactly what was
//! written; all numbers use 10 significant digits with a '.' decimal point.

use hicent::centrality::{CentralityParams, CentralityScores};
use hicent::export::format_significant;
use hicent::hierarchy::HierarchyScores;
use std::io;
use std::path::{Path, PathBuf};

const CSV_DIGITS: u32 = 10;

fn fmt(x: f64) -> String {
    format_significant(x, CSV_DIGITS)
}

/// Collects every file written below a root directory.
pub struct OutputTree {
    root: PathBuf,
    files: Vec<String>,
}

impl OutputTree {
    pub fn new(root: impl Into<PathBuf>) -> OutputTree {
        OutputTree {
            root: root.into(),
            files: Vec::new(),
        }
    }

    pub fn root(&self) -> &Path {
        &self.root
    }

    /// Relative paths written so far, sorted for a canonical manifest.
    pub fn files(&self) -> Vec<String> {
        let mut files = self.files.clone();
        files.sort();
        files
    }

    pub fn write_text(&mut self, relative: &str, contents: &str) -> io::Result<()> {
        let path = self.root.join(relative);
        if let Some(parent) = path.parent() {
            std::fs::create_dir_all(parent)?;
        }
        std::fs::write(&path, contents)?;
        self.files.push(relative.to_string());
        Ok(())
    }

    pub fn write_json<T: serde::Serialize>(
        &mut self,
        relative: &str,
        value: &T,
    ) -> io::Result<()> {
        let mut body = serde_json::to_string_pretty(value)
            .map_err(|e| io::Error::new(io::ErrorKind::InvalidData, e))?;
        body.push('\n');
        self.write_text(relative, &body)
    }
}

/// Per-node hierarchy table: index, original label, raw importance, level.
pub fn hierarchy_csv(labels: &[String], scores: &HierarchyScores) -> String {
    let mut out = String::from("node,label,raw,level\n");
    for (i, label) in labels.iter().enumerate() {
        out.push_str(&format!(
            "{i},{label},{},{}\n",
            fmt(scores.raw[i]),
            fmt(scores.level[i])
        ));
    }
    out
}

/// Per-node centrality table: index, original label, value.
pub fn centrality_csv(labels: &[String], scores: &CentralityScores) -> String {
    let mut out = String::from("node,label,value\n");
    for (i, label) in labels.iter().enumerate() {
        out.push_str(&format!("{i},{label},{}\n", fmt(scores.values[i])));
    }
    out
}

/// JSON form of one hierarchy table.
#[derive(serde::Serialize)]
pub struct HierarchyFile<'a> {
    pub kind: &'a str,
    pub nodes: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub k_min: Option<u32>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub k_max: Option<u32>,
    pub labels: &'a [String],
    pub raw: &'a [f64],
    pub level: &'a [f64],
}

impl<'a> HierarchyFile<'a> {
    pub fn new(labels: &'a [String], scores: &'a HierarchyScores) -> HierarchyFile<'a> {
        HierarchyFile {
            kind: scores.kind.as_str(),
            nodes: labels.len(),
            k_min: scores.k_min,
            k_max: scores.k_max,
            labels,
            raw: &scores.raw,
            level: &scores.level,
        }
    }
}

/// JSON form of one centrality table.
#[derive(serde::Serialize)]
pub struct CentralityFile<'a> {
    pub kind: &'a str,
    pub nodes: usize,
    pub params: &'a CentralityParams,
    pub labels: &'a [String],
    pub values: &'a [f64],
}

impl<'a> CentralityFile<'a> {
    pub fn new(labels: &'a [String], scores: &'a CentralityScores) -> CentralityFile<'a> {
        CentralityFile {
            kind: scores.kind.as_str(),
            nodes: labels.len(),
            params: &scores.params,
            labels,
            values: &scores.values,
        }
    }
}

/// Sidecar recording the constants each emitted measure actually used.
#[derive(serde::Serialize)]
pub struct ParamsSidecar {
    pub network: String,
    pub nodes: usize,
    pub hierarchy: Vec<HierarchyParamsEntry>,
    pub centrality: Vec<CentralityParamsEntry>,
}

#[derive(serde::Serialize)]
pub struct HierarchyParamsEntry {
    pub id: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub k_min: Option<u32>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub k_max: Option<u32>,
}

#[derive(serde::Serialize)]
pub struct CentralityParamsEntry {
    pub id: &'static str,
    pub params: CentralityParams,
}

/// Wrapper for `clusters_<eval>.json`.
#[derive(serde::Serialize)]
pub struct ClustersFile {
    pub eval_id: String,
    pub networks: Vec<String>,
    #[serde(flatten)]
    pub assignment: hicent::analysis::ClusterAssignment,
}

/// Wrapper for `schulze_<eval>.json`.
#[derive(serde::Serialize)]
pub struct SchulzeFile {
    pub eval_id: String,
    pub ballot_order: hicent::analysis::BallotOrder,
    pub tally: hicent::analysis::SchulzeTally,
}

/// The run manifest: parameters, per-network outcomes, stage outcomes, and
/// the complete list of emitted files. Written last, as
/// `aggregate/manifest.json`.
#[derive(serde::Serialize)]
pub struct Manifest {
    /// UTC creation time (the only field allowed to differ between reruns).
    pub created: String,
    pub tool: ToolInfo,
    pub command: &'static str,
    pub parameters: Parameters,
    pub networks: Vec<NetworkRecord>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub stages: Vec<StageRecord>,
    pub files: Vec<String>,
}

#[derive(serde::Serialize)]
pub struct ToolInfo {
    pub name: &'static str,
    pub version: &'static str,
}

impl Default for ToolInfo {
    fn default() -> Self {
        ToolInfo {
            name: "hicent",
            version: env!("CARGO_PKG_VERSION"),
        }
    }
}

/// Echo of every effective parameter (defaults included).
#[derive(serde::Serialize)]
pub struct Parameters {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub measures: Option<Vec<String>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub evals: Option<Vec<String>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub topk: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub threshold: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub cluster_k: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub katz_s: Option<f64>,
    pub damping: f64,
    pub tolerance: f64,
    pub max_iterations: u32,
    pub jobs: usize,
    pub format: &'static str,
    pub strict: bool,
    pub output: String,
}

#[derive(serde::Serialize)]
pub struct NetworkRecord {
    pub name: String,
    pub path: String,
    /// "ok", or "failed: <reason>".
    pub status: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub nodes_input: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub nodes_lcc: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub edges_lcc: Option<usize>,
}

#[derive(serde::Serialize)]
pub struct StageRecord {
    pub stage: String,
    /// "ok", "skipped: <reason>", or "failed: <reason>".
    pub status: String,
}

impl StageRecord {
    pub fn ok(stage: impl Into<String>) -> StageRecord {
        StageRecord {
            stage: stage.into(),
            status: "ok".to_string(),
        }
    }

    pub fn skipped(stage: impl Into<String>, reason: impl std::fmt::Display) -> StageRecord {
        StageRecord {
            stage: stage.into(),
            status: format!("skipped: {reason}"),
        }
    }

    pub fn failed(stage: impl Into<String>, reason: impl std::fmt::Display) -> StageRecord {
        StageRecord {
            stage: stage.into(),
            status: format!("failed: {reason}"),
        }
    }

    pub fn is_failed(&self) -> bool {
        self.status.starts_with("failed")
    }
}
