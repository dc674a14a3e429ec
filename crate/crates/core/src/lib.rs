//! Node hierarchy and centrality measures on undirected, unweighted graphs,
//! plus the comparison pipeline built on top of them.
//!
//! The crate is organized in layers:
//!
//! - [`graph`]: edge-list parsing, components, distances, triangle counts,
//!   and whole-graph statistics.
//! - [`hierarchy`]: k-core, k-truss, local reaching centrality, and triangle
//!   participation — raw importance scores plus derived hierarchy levels.
//! - [`centrality`]: degree, local (two-hop), betweenness, current-flow
//!   closeness, Katz, and PageRank.
//! - [`evaluation`]: Pearson / Spearman / Kendall tau-b correlations and
//!   Jaccard / RBO rank-overlap measures between two score vectors.
//! - [`analysis`]: per-network hierarchy × centrality combination matrices,
//!   network-vs-network correlation, threshold binarization and ranking,
//!   seeded k-means, and Schulze voting.
//!
//! All computations are deterministic: repeated runs on the same input (and
//! seed, where one applies) produce bitwise-identical results regardless of
//! thread count.

pub mod analysis;
pub mod centrality;
pub mod error;
pub mod evaluation;
pub mod export;
pub mod graph;
pub mod hierarchy;

pub use analysis::{
    binarize_and_rank, combination_ids, combination_matrix, combination_matrix_for_graph,
    compute_network_measures, default_cluster_count, impute_features, kmeans,
    network_correlation_matrix, schulze_from_matrices, schulze_rank, BallotOrder,
    ClusterAssignment, CombinationMatrix, NetworkCorrelation, NetworkMeasures, NetworkRanking,
    SchulzeTally, COMBINATION_COUNT,
};
pub use centrality::{CentralityKind, CentralityOptions, CentralityParams, CentralityScores, LocalMode};
pub use error::{Error, Result};
pub use evaluation::{
    evaluate, jaccard_topk, kendall_tau_b, pearson, rbo, resolve_topk, spearman, EvalMeasure,
    EvalParams, RankedList, RboScope, RboValue, TiePolicy, TopkRule,
};
pub use graph::{graph_stats, load_edge_list, load_edge_list_path, Graph, GraphStats, ParseOptions};
pub use hierarchy::{EdgeTrussMap, HierarchyKind, HierarchyScores};
