//! Cross-measure and cross-network analysis: per-network combination
//! matrices (hierarchy × centrality), network-vs-network correlation,
//! threshold binarization with network ranking, k-means clustering of
//! network profiles, and Schulze voting over networks-as-voters.

pub mod kmeans;
pub mod schulze;

pub use kmeans::{kmeans, kmeans_with_trace, ClusterAssignment};
pub use schulze::{schulze_rank, Ballot, BallotOrder, RankedCandidate, SchulzeTally};

use crate::centrality::{self, CentralityKind, CentralityOptions, CentralityScores};
use crate::error::{Error, Result};
use crate::evaluation::{self, EvalMeasure, EvalParams};
use crate::export::format_opt_significant;
use crate::graph::Graph;
use crate::hierarchy::{self, HierarchyKind, HierarchyScores};

const CSV_DIGITS: u32 = 10;

/// Number of hierarchy × centrality combinations.
pub const COMBINATION_COUNT: usize = HierarchyKind::ALL.len() * CentralityKind::ALL.len();

/// The 24 combination ids, hierarchy-major: "core_degree", "core_local", …,
/// "tp_pagerank".
pub fn combination_ids() -> Vec<String> {
    let mut ids = Vec::with_capacity(COMBINATION_COUNT);
    for h in HierarchyKind::ALL {
        for c in CentralityKind::ALL {
            ids.push(format!("{}_{}", h.as_str(), c.as_str()));
        }
    }
    ids
}

/// All ten per-node measure vectors of one network, computed once.
#[derive(Clone, Debug)]
pub struct NetworkMeasures {
    pub network: String,
    pub node_count: usize,
    /// In [`HierarchyKind::ALL`] order.
    pub hierarchies: Vec<HierarchyScores>,
    /// In [`CentralityKind::ALL`] order.
    pub centralities: Vec<CentralityScores>,
}

/// Compute the four hierarchy and six centrality measures for a connected
/// graph. Any measure-level failure fails the whole network.
pub fn compute_network_measures(
    network: &str,
    g: &Graph,
    options: &CentralityOptions,
) -> Result<NetworkMeasures> {
    let hierarchies = HierarchyKind::ALL
        .into_iter()
        .map(|kind| hierarchy::compute(g, kind))
        .collect::<Result<Vec<_>>>()?;
    let centralities = CentralityKind::ALL
        .into_iter()
        .map(|kind| centrality::compute(g, kind, options))
        .collect::<Result<Vec<_>>>()?;
    Ok(NetworkMeasures {
        network: network.to_string(),
        node_count: g.node_count(),
        hierarchies,
        centralities,
    })
}

/// One network's 4×6 grid of hierarchy-vs-centrality comparison values under
/// a single evaluation instance. `None` marks a cell whose value is undefined
/// (constant input, top-k larger than the network, …).
#[derive(Clone, Debug)]
pub struct CombinationMatrix {
    pub network: String,
    pub eval_id: String,
    /// Indexed `[hierarchy][centrality]` in canonical order.
    pub cells: [[Option<f64>; 6]; 4],
}

impl CombinationMatrix {
    /// The 24 cells flattened hierarchy-major, matching [`combination_ids`].
    pub fn flat(&self) -> Vec<Option<f64>> {
        self.cells.iter().flatten().copied().collect()
    }

    /// Count of cells with |γ| ≥ μ (missing cells never count).
    pub fn meaningful_count(&self, mu: f64) -> u32 {
        self.cells
            .iter()
            .flatten()
            .filter(|cell| matches!(cell, Some(v) if v.abs() >= mu))
            .count() as u32
    }

    /// Binary mask of the |γ| ≥ μ test, cell-parallel to `cells`.
    pub fn binarize(&self, mu: f64) -> [[bool; 6]; 4] {
        let mut mask = [[false; 6]; 4];
        for (h, row) in self.cells.iter().enumerate() {
            for (c, cell) in row.iter().enumerate() {
                mask[h][c] = matches!(cell, Some(v) if v.abs() >= mu);
            }
        }
        mask
    }

    /// CSV with hierarchy rows and centrality columns; missing cells are
    /// empty fields.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("hierarchy");
        for c in CentralityKind::ALL {
            out.push(',');
            out.push_str(c.as_str());
        }
        out.push('\n');
        for (h, kind) in HierarchyKind::ALL.into_iter().enumerate() {
            out.push_str(kind.as_str());
            for c in 0..CentralityKind::ALL.len() {
                out.push(',');
                out.push_str(&format_opt_significant(self.cells[h][c], CSV_DIGITS));
            }
            out.push('\n');
        }
        out
    }
}

impl serde::Serialize for CombinationMatrix {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::{SerializeMap, SerializeStruct};

        struct Row<'a>(&'a [Option<f64>; 6]);
        impl serde::Serialize for Row<'_> {
            fn serialize<S: serde::Serializer>(
                &self,
                serializer: S,
            ) -> std::result::Result<S::Ok, S::Error> {
                let mut map = serializer.serialize_map(Some(6))?;
                for (c, kind) in CentralityKind::ALL.into_iter().enumerate() {
                    map.serialize_entry(kind.as_str(), &self.0[c])?;
                }
                map.end()
            }
        }

        struct Cells<'a>(&'a [[Option<f64>; 6]; 4]);
        impl serde::Serialize for Cells<'_> {
            fn serialize<S: serde::Serializer>(
                &self,
                serializer: S,
            ) -> std::result::Result<S::Ok, S::Error> {
                let mut map = serializer.serialize_map(Some(4))?;
                for (h, kind) in HierarchyKind::ALL.into_iter().enumerate() {
                    map.serialize_entry(kind.as_str(), &Row(&self.0[h]))?;
                }
                map.end()
            }
        }

        let mut st = serializer.serialize_struct("CombinationMatrix", 3)?;
        st.serialize_field("network", &self.network)?;
        st.serialize_field("eval", &self.eval_id)?;
        st.serialize_field("cells", &Cells(&self.cells))?;
        st.end()
    }
}

/// Fill the 24-cell grid by comparing every hierarchy raw-score vector with
/// every centrality vector under one evaluation instance. Cells whose
/// comparison is undefined are marked missing and logged.
pub fn combination_matrix(measures: &NetworkMeasures, eval: &EvalParams) -> CombinationMatrix {
    let eval_id = eval.id();
    let mut cells = [[None; 6]; 4];
    for (h, hierarchy) in measures.hierarchies.iter().enumerate() {
        for (c, centrality) in measures.centralities.iter().enumerate() {
            match evaluation::evaluate(&hierarchy.raw, &centrality.values, eval) {
                Ok(v) => cells[h][c] = Some(v),
                Err(err) => log::warn!(
                    "{}/{}: cell {}_{} marked missing: {}",
                    measures.network,
                    eval_id,
                    hierarchy.kind.as_str(),
                    centrality.kind.as_str(),
                    err
                ),
            }
        }
    }
    CombinationMatrix {
        network: measures.network.clone(),
        eval_id,
        cells,
    }
}

/// Convenience: measures plus matrix for a single graph and instance.
pub fn combination_matrix_for_graph(
    network: &str,
    g: &Graph,
    eval: &EvalParams,
    options: &CentralityOptions,
) -> Result<CombinationMatrix> {
    let measures = compute_network_measures(network, g, options)?;
    Ok(combination_matrix(&measures, eval))
}

/// Symmetric network-vs-network Pearson matrix over flattened 24-cell
/// profiles (missing cells dropped pairwise), with unit diagonal. Entries
/// with fewer than 3 shared defined cells — or an undefined correlation —
/// are missing.
#[derive(Clone, Debug, serde::Serialize)]
pub struct NetworkCorrelation {
    pub eval_id: String,
    pub networks: Vec<String>,
    pub values: Vec<Vec<Option<f64>>>,
}

impl NetworkCorrelation {
    pub fn to_csv(&self) -> String {
        let mut out = String::from("network");
        for name in &self.networks {
            out.push(',');
            out.push_str(name);
        }
        out.push('\n');
        for (i, name) in self.networks.iter().enumerate() {
            out.push_str(name);
            for j in 0..self.networks.len() {
                out.push(',');
                out.push_str(&format_opt_significant(self.values[i][j], CSV_DIGITS));
            }
            out.push('\n');
        }
        out
    }
}

pub fn network_correlation_matrix(matrices: &[CombinationMatrix]) -> Result<NetworkCorrelation> {
    if matrices.len() < 2 {
        return Err(Error::Precondition {
            context: "network_correlation_matrix",
            requirement: format!("at least 2 networks required, got {}", matrices.len()),
        });
    }
    let eval_id = matrices[0].eval_id.clone();
    if let Some(other) = matrices.iter().find(|m| m.eval_id != eval_id) {
        return Err(Error::Precondition {
            context: "network_correlation_matrix",
            requirement: format!(
                "all matrices must share one eval instance, got {eval_id} and {}",
                other.eval_id
            ),
        });
    }
    let n = matrices.len();
    let profiles: Vec<Vec<Option<f64>>> = matrices.iter().map(|m| m.flat()).collect();
    let mut values = vec![vec![None; n]; n];
    for i in 0..n {
        values[i][i] = Some(1.0);
        for j in (i + 1)..n {
            let mut x = Vec::with_capacity(COMBINATION_COUNT);
            let mut y = Vec::with_capacity(COMBINATION_COUNT);
            for (a, b) in profiles[i].iter().zip(&profiles[j]) {
                if let (Some(a), Some(b)) = (a, b) {
                    x.push(*a);
                    y.push(*b);
                }
            }
            let entry = if x.len() < 3 {
                log::warn!(
                    "{eval_id}: {} vs {}: only {} shared defined cells, entry marked missing",
                    matrices[i].network,
                    matrices[j].network,
                    x.len()
                );
                None
            } else {
                match evaluation::pearson(&x, &y) {
                    Ok(v) => Some(v),
                    Err(err) => {
                        log::warn!(
                            "{eval_id}: {} vs {}: entry marked missing: {err}",
                            matrices[i].network,
                            matrices[j].network
                        );
                        None
                    }
                }
            };
            values[i][j] = entry;
            values[j][i] = entry;
        }
    }
    Ok(NetworkCorrelation {
        eval_id,
        networks: matrices.iter().map(|m| m.network.clone()).collect(),
        values,
    })
}

/// One network's binarization outcome across the eval instances of a family.
#[derive(Clone, Debug, serde::Serialize)]
pub struct RankingEntry {
    pub network: String,
    /// λ: number of meaningful cells (|γ| ≥ μ) across all instances.
    pub meaningful: u32,
    /// Total cells considered: 24 × number of instances.
    pub denominator: u32,
    /// Per-instance binary masks, keyed by eval id, cell-parallel to the
    /// combination grid.
    pub masks: Vec<(String, [[bool; 6]; 4])>,
}

/// Networks ordered by how many of their comparison cells pass |γ| ≥ μ.
#[derive(Clone, Debug, serde::Serialize)]
pub struct NetworkRanking {
    pub threshold: f64,
    /// Sorted by descending λ, ties by ascending network name.
    pub entries: Vec<RankingEntry>,
}

impl NetworkRanking {
    pub fn to_csv(&self) -> String {
        let mut out = String::from("network,meaningful,denominator\n");
        for e in &self.entries {
            out.push_str(&format!("{},{},{}\n", e.network, e.meaningful, e.denominator));
        }
        out
    }
}

/// Binarize every matrix at |γ| ≥ `mu` and rank networks by their meaningful
/// count λ. The input may mix several eval instances (e.g. the three
/// correlations, λ out of 72); every network must carry the same instances.
pub fn binarize_and_rank(matrices: &[CombinationMatrix], mu: f64) -> Result<NetworkRanking> {
    if matrices.is_empty() {
        return Err(Error::Precondition {
            context: "binarize_and_rank",
            requirement: "at least one combination matrix required".into(),
        });
    }
    let mut by_network: Vec<(String, Vec<&CombinationMatrix>)> = Vec::new();
    for m in matrices {
        match by_network.iter_mut().find(|(name, _)| *name == m.network) {
            Some((_, group)) => group.push(m),
            None => by_network.push((m.network.clone(), vec![m])),
        }
    }
    let mut reference: Vec<&str> = by_network[0].1.iter().map(|m| m.eval_id.as_str()).collect();
    reference.sort_unstable();
    for (name, group) in &by_network {
        let mut ids: Vec<&str> = group.iter().map(|m| m.eval_id.as_str()).collect();
        ids.sort_unstable();
        if ids != reference {
            return Err(Error::Precondition {
                context: "binarize_and_rank",
                requirement: format!(
                    "network {name} carries eval instances {ids:?}, expected {reference:?}"
                ),
            });
        }
    }
    let mut entries: Vec<RankingEntry> = by_network
        .into_iter()
        .map(|(network, group)| RankingEntry {
            network,
            meaningful: group.iter().map(|m| m.meaningful_count(mu)).sum(),
            denominator: (group.len() * COMBINATION_COUNT) as u32,
            masks: group
                .iter()
                .map(|m| (m.eval_id.clone(), m.binarize(mu)))
                .collect(),
        })
        .collect();
    entries.sort_by(|a, b| b.meaningful.cmp(&a.meaningful).then(a.network.cmp(&b.network)));
    Ok(NetworkRanking {
        threshold: mu,
        entries,
    })
}

/// Flatten a combination matrix into a 24-dim feature vector for clustering,
/// imputing missing cells as 0 with a logged warning.
pub fn impute_features(matrix: &CombinationMatrix) -> Vec<f64> {
    let flat = matrix.flat();
    let missing = flat.iter().filter(|c| c.is_none()).count();
    if missing > 0 {
        log::warn!(
            "{}/{}: imputing {missing} missing cells as 0 for clustering",
            matrix.network,
            matrix.eval_id
        );
    }
    flat.into_iter().map(|c| c.unwrap_or(0.0)).collect()
}

/// Default cluster count: 3 for correlation instances, 2 for similarity.
pub fn default_cluster_count(measure: EvalMeasure) -> usize {
    if measure.is_correlation() {
        3
    } else {
        2
    }
}

/// Build Schulze ballots from one combination matrix per network (a fixed
/// eval instance) and tally. Candidates are the 24 combination ids; missing
/// cells rank last on that network's ballot (logged).
pub fn schulze_from_matrices(
    matrices: &[CombinationMatrix],
    order: BallotOrder,
) -> Result<SchulzeTally> {
    if matrices.is_empty() {
        return Err(Error::Precondition {
            context: "schulze_from_matrices",
            requirement: "at least one ballot (network) required".into(),
        });
    }
    let eval_id = &matrices[0].eval_id;
    if let Some(other) = matrices.iter().find(|m| &m.eval_id != eval_id) {
        return Err(Error::Precondition {
            context: "schulze_from_matrices",
            requirement: format!(
                "all matrices must share one eval instance, got {eval_id} and {}",
                other.eval_id
            ),
        });
    }
    let candidates = combination_ids();
    let ballots: Vec<(String, Vec<Option<f64>>)> = matrices
        .iter()
        .map(|m| {
            let flat = m.flat();
            let missing = flat.iter().filter(|c| c.is_none()).count();
            if missing > 0 {
                log::warn!(
                    "{}/{}: {missing} missing cells ranked last on the ballot",
                    m.network,
                    m.eval_id
                );
            }
            (m.network.clone(), flat)
        })
        .collect();
    schulze_rank(&candidates, &ballots, order)
}
