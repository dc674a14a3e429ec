//! The three batch commands: `stats`, `measures`, and `pipeline`. Each
//! processes networks independently (bounded by `--jobs`), aggregates
//! serially, and returns a process exit code: 0 success, 1 partial failure
//! (configuration problems exit 2 before reaching this module).

use crate::config::{EvalFamily, MeasureSelect, NetworkInput, RunConfig};
use crate::output::{
    centrality_csv, hierarchy_csv, CentralityFile, CentralityParamsEntry, ClustersFile,
    HierarchyFile, HierarchyParamsEntry, Manifest, NetworkRecord, OutputTree, Parameters,
    ParamsSidecar, SchulzeFile, StageRecord, ToolInfo,
};
use hicent::analysis::{self, BallotOrder, CombinationMatrix, NetworkMeasures};
use hicent::centrality::{self, CentralityKind, CentralityScores};
use hicent::evaluation::TopkRule;
use hicent::graph::{GraphStats, ParseOptions};
use hicent::hierarchy::{self, HierarchyScores};
use hicent::Graph;
use rayon::prelude::*;
use std::collections::BTreeMap;

pub const EXIT_OK: u8 = 0;
pub const EXIT_PARTIAL: u8 = 1;
pub const EXIT_CONFIG: u8 = 2;

/// Node count above which the cubic current-flow solve gets a heads-up log.
const CURRENT_FLOW_WARN_NODES: usize = 5000;

fn warn_current_flow(name: &str, n: usize) {
    log::warn!("{name}: current-flow closeness factorizes a dense {n}x{n} system; expect a long run");
}

/// Record an aggregate stage's outcome, logging failures.
fn run_stage(stage: String, outcome: Result<(), String>, stages: &mut Vec<StageRecord>) {
    match outcome {
        Ok(()) => stages.push(StageRecord::ok(stage)),
        Err(reason) => {
            log::error!("{stage}: {reason}");
            stages.push(StageRecord::failed(stage, reason));
        }
    }
}

struct LoadedNetwork {
    input: NetworkInput,
    nodes_input: usize,
    /// Largest connected component of the parsed graph.
    graph: Graph,
}

fn load_network(input: &NetworkInput) -> Result<LoadedNetwork, String> {
    let g = hicent::load_edge_list_path(&input.path, &ParseOptions::default())
        .map_err(|e| format!("{}: {e}", input.path.display()))?;
    let nodes_input = g.node_count();
    let lcc = g.largest_connected_component();
    if lcc.node_count() < nodes_input {
        log::info!(
            "{}: using the largest connected component ({} of {} nodes)",
            input.name,
            lcc.node_count(),
            nodes_input
        );
    }
    Ok(LoadedNetwork {
        input: input.clone(),
        nodes_input,
        graph: lcc,
    })
}

fn build_pool(jobs: usize) -> Result<rayon::ThreadPool, String> {
    rayon::ThreadPoolBuilder::new()
        .num_threads(jobs)
        .build()
        .map_err(|e| format!("worker pool: {e}"))
}

/// Run `process` over all inputs: in parallel normally, serially with an
/// early stop under `--strict`. Returns one slot per input; `None` marks
/// inputs never attempted because a strict run aborted first.
fn process_networks<T: Send>(
    config: &RunConfig,
    process: impl Fn(&NetworkInput) -> Result<T, String> + Sync,
) -> Result<Vec<Option<Result<T, String>>>, String> {
    if config.strict {
        let mut slots: Vec<Option<Result<T, String>>> = Vec::new();
        let mut aborted = false;
        for input in &config.inputs {
            if aborted {
                slots.push(None);
                continue;
            }
            let result = process(input);
            if result.is_err() {
                aborted = true;
            }
            slots.push(Some(result));
        }
        Ok(slots)
    } else {
        let pool = build_pool(config.jobs)?;
        let results: Vec<Result<T, String>> =
            pool.install(|| config.inputs.par_iter().map(&process).collect());
        Ok(results.into_iter().map(Some).collect())
    }
}

fn record_for(input: &NetworkInput, status: String) -> NetworkRecord {
    NetworkRecord {
        name: input.name.clone(),
        path: input.path.display().to_string(),
        status,
        nodes_input: None,
        nodes_lcc: None,
        edges_lcc: None,
    }
}

fn ok_record(loaded: &LoadedNetwork) -> NetworkRecord {
    NetworkRecord {
        name: loaded.input.name.clone(),
        path: loaded.input.path.display().to_string(),
        status: "ok".to_string(),
        nodes_input: Some(loaded.nodes_input),
        nodes_lcc: Some(loaded.graph.node_count()),
        edges_lcc: Some(loaded.graph.edge_count()),
    }
}

fn base_parameters(config: &RunConfig) -> Parameters {
    Parameters {
        measures: None,
        evals: None,
        topk: None,
        threshold: None,
        cluster_k: None,
        seed: None,
        katz_s: config.centrality.katz_s,
        damping: config.centrality.damping,
        tolerance: config.centrality.tolerance,
        max_iterations: config.centrality.max_iterations,
        jobs: config.jobs,
        format: config.format.as_str(),
        strict: config.strict,
        output: config.output.display().to_string(),
    }
}

fn topk_echo(rule: TopkRule) -> String {
    match rule {
        TopkRule::Adaptive => "adaptive".to_string(),
        TopkRule::Explicit(k) => k.to_string(),
    }
}

fn pipeline_parameters(config: &RunConfig) -> Parameters {
    Parameters {
        evals: Some(config.evals.iter().map(|e| e.id()).collect()),
        topk: Some(topk_echo(config.topk)),
        threshold: Some(config.threshold),
        cluster_k: Some(
            config
                .cluster_k
                .map_or_else(|| "auto".to_string(), |k| k.to_string()),
        ),
        seed: Some(config.seed),
        ..base_parameters(config)
    }
}

/// Write the manifest; returns whether writing succeeded.
fn write_manifest(
    tree: &mut OutputTree,
    command: &'static str,
    parameters: Parameters,
    networks: Vec<NetworkRecord>,
    stages: Vec<StageRecord>,
) -> bool {
    let mut files = tree.files();
    files.push("aggregate/manifest.json".to_string());
    files.sort();
    let manifest = Manifest {
        created: chrono::Utc::now().to_rfc3339_opts(chrono::SecondsFormat::Secs, true),
        tool: ToolInfo::default(),
        command,
        parameters,
        networks,
        stages,
        files,
    };
    match tree.write_json("aggregate/manifest.json", &manifest) {
        Ok(()) => true,
        Err(e) => {
            log::error!("writing manifest: {e}");
            false
        }
    }
}

fn write_stats_tables(
    tree: &mut OutputTree,
    config: &RunConfig,
    name: &str,
    stats: &GraphStats,
) -> std::io::Result<()> {
    if config.format.wants_csv() {
        let body = format!("{}\n{}\n", GraphStats::CSV_HEADER, stats.csv_row());
        tree.write_text(&format!("{name}/stats.csv"), &body)?;
    }
    if config.format.wants_json() {
        tree.write_json(&format!("{name}/stats.json"), stats)?;
    }
    Ok(())
}

/// Whole-graph statistics per network; prints a combined table to stdout.
pub fn cmd_stats(config: &RunConfig) -> u8 {
    let mut tree = OutputTree::new(&config.output);
    let mut records = Vec::new();
    let mut failed = false;

    let results = match process_networks(config, |input| {
        let loaded = load_network(input)?;
        let stats = hicent::graph_stats(&loaded.graph)
            .map_err(|e| format!("{}: {e}", input.path.display()))?;
        Ok((loaded, stats))
    }) {
        Ok(results) => results,
        Err(e) => {
            log::error!("{e}");
            return EXIT_PARTIAL;
        }
    };

    println!("network,{}", GraphStats::CSV_HEADER);
    for (input, slot) in config.inputs.iter().zip(results) {
        match slot {
            Some(Ok((loaded, stats))) => {
                println!("{},{}", input.name, stats.csv_row());
                if let Err(e) = write_stats_tables(&mut tree, config, &input.name, &stats) {
                    log::error!("{}: writing stats: {e}", input.name);
                    failed = true;
                }
                records.push(ok_record(&loaded));
            }
            Some(Err(message)) => {
                log::error!("{message}");
                failed = true;
                records.push(record_for(input, format!("failed: {message}")));
            }
            None => {
                records.push(record_for(input, "skipped: aborted by --strict".to_string()));
            }
        }
    }

    if !write_manifest(&mut tree, "stats", base_parameters(config), records, Vec::new()) {
        failed = true;
    }
    if failed {
        EXIT_PARTIAL
    } else {
        EXIT_OK
    }
}

struct SelectedMeasures {
    hierarchies: Vec<HierarchyScores>,
    centralities: Vec<CentralityScores>,
}

fn compute_selected(
    config: &RunConfig,
    loaded: &LoadedNetwork,
) -> Result<SelectedMeasures, String> {
    let wants_cf = config
        .measures
        .contains(&MeasureSelect::Centrality(CentralityKind::CurrentFlowCloseness));
    if wants_cf && loaded.graph.node_count() > CURRENT_FLOW_WARN_NODES {
        warn_current_flow(&loaded.input.name, loaded.graph.node_count());
    }
    let mut hierarchies = Vec::new();
    let mut centralities = Vec::new();
    for select in &config.measures {
        match *select {
            MeasureSelect::Hierarchy(kind) => hierarchies.push(
                hierarchy::compute(&loaded.graph, kind)
                    .map_err(|e| format!("{}: {}: {e}", loaded.input.name, kind.as_str()))?,
            ),
            MeasureSelect::Centrality(kind) => centralities.push(
                centrality::compute(&loaded.graph, kind, &config.centrality)
                    .map_err(|e| format!("{}: {}: {e}", loaded.input.name, kind.as_str()))?,
            ),
        }
    }
    Ok(SelectedMeasures {
        hierarchies,
        centralities,
    })
}

fn write_measure_tables(
    tree: &mut OutputTree,
    config: &RunConfig,
    name: &str,
    labels: &[String],
    hierarchies: &[HierarchyScores],
    centralities: &[CentralityScores],
) -> std::io::Result<()> {
    for scores in hierarchies {
        let id = scores.kind.as_str();
        if config.format.wants_csv() {
            tree.write_text(
                &format!("{name}/measures/hierarchy_{id}.csv"),
                &hierarchy_csv(labels, scores),
            )?;
        }
        if config.format.wants_json() {
            tree.write_json(
                &format!("{name}/measures/hierarchy_{id}.json"),
                &HierarchyFile::new(labels, scores),
            )?;
        }
    }
    for scores in centralities {
        let id = scores.kind.as_str();
        if config.format.wants_csv() {
            tree.write_text(
                &format!("{name}/measures/centrality_{id}.csv"),
                &centrality_csv(labels, scores),
            )?;
        }
        if config.format.wants_json() {
            tree.write_json(
                &format!("{name}/measures/centrality_{id}.json"),
                &CentralityFile::new(labels, scores),
            )?;
        }
    }
    let sidecar = ParamsSidecar {
        network: name.to_string(),
        nodes: labels.len(),
        hierarchy: hierarchies
            .iter()
            .map(|s| HierarchyParamsEntry {
                id: s.kind.as_str(),
                k_min: s.k_min,
                k_max: s.k_max,
            })
            .collect(),
        centrality: centralities
            .iter()
            .map(|s| CentralityParamsEntry {
                id: s.kind.as_str(),
                params: s.params.clone(),
            })
            .collect(),
    };
    tree.write_json(&format!("{name}/measures/params.json"), &sidecar)
}

/// Per-node hierarchy and centrality tables for each network.
pub fn cmd_measures(config: &RunConfig) -> u8 {
    let mut tree = OutputTree::new(&config.output);
    let mut records = Vec::new();
    let mut failed = false;

    let results = match process_networks(config, |input| {
        let loaded = load_network(input)?;
        let selected = compute_selected(config, &loaded)?;
        Ok((loaded, selected))
    }) {
        Ok(results) => results,
        Err(e) => {
            log::error!("{e}");
            return EXIT_PARTIAL;
        }
    };

    for (input, slot) in config.inputs.iter().zip(results) {
        match slot {
            Some(Ok((loaded, selected))) => {
                let write = write_measure_tables(
                    &mut tree,
                    config,
                    &input.name,
                    loaded.graph.labels(),
                    &selected.hierarchies,
                    &selected.centralities,
                );
                if let Err(e) = write {
                    log::error!("{}: writing measures: {e}", input.name);
                    failed = true;
                }
                records.push(ok_record(&loaded));
            }
            Some(Err(message)) => {
                log::error!("{message}");
                failed = true;
                records.push(record_for(input, format!("failed: {message}")));
            }
            None => {
                records.push(record_for(input, "skipped: aborted by --strict".to_string()));
            }
        }
    }

    let parameters = Parameters {
        measures: Some(config.measures.iter().map(|m| m.id().to_string()).collect()),
        ..base_parameters(config)
    };
    if !write_manifest(&mut tree, "measures", parameters, records, Vec::new()) {
        failed = true;
    }
    if failed {
        EXIT_PARTIAL
    } else {
        EXIT_OK
    }
}

struct NetworkData {
    loaded: LoadedNetwork,
    stats: GraphStats,
    measures: NetworkMeasures,
}

fn compute_network(input: &NetworkInput, config: &RunConfig) -> Result<NetworkData, String> {
    let loaded = load_network(input)?;
    if loaded.graph.node_count() > CURRENT_FLOW_WARN_NODES {
        warn_current_flow(&loaded.input.name, loaded.graph.node_count());
    }
    let stats = hicent::graph_stats(&loaded.graph)
        .map_err(|e| format!("{}: {e}", input.name))?;
    let measures =
        analysis::compute_network_measures(&input.name, &loaded.graph, &config.centrality)
            .map_err(|e| format!("{}: {e}", input.name))?;
    Ok(NetworkData {
        loaded,
        stats,
        measures,
    })
}

/// The full comparison pipeline: per-network tables, combination matrices,
/// and the aggregate analyses (network correlation, threshold ranking,
/// clustering, Schulze), finished by a manifest.
pub fn cmd_pipeline(config: &RunConfig) -> u8 {
    let mut tree = OutputTree::new(&config.output);
    let mut records = Vec::new();
    let mut stages: Vec<StageRecord> = Vec::new();
    let mut failed = false;

    let results = match process_networks(config, |input| compute_network(input, config)) {
        Ok(results) => results,
        Err(e) => {
            log::error!("{e}");
            return EXIT_PARTIAL;
        }
    };

    let mut data: Vec<NetworkData> = Vec::new();
    for (input, slot) in config.inputs.iter().zip(results) {
        match slot {
            Some(Ok(network)) => {
                records.push(ok_record(&network.loaded));
                data.push(network);
            }
            Some(Err(message)) => {
                log::error!("{message}");
                failed = true;
                records.push(record_for(input, format!("failed: {message}")));
            }
            None => {
                records.push(record_for(input, "skipped: aborted by --strict".to_string()));
            }
        }
    }

    // Under --strict a failure aborts before any outputs are written.
    if config.strict && failed {
        write_manifest(&mut tree, "pipeline", pipeline_parameters(config), records, Vec::new());
        return EXIT_PARTIAL;
    }

    // Per-network outputs plus one combination matrix per (instance, network).
    let mut matrices: Vec<Vec<CombinationMatrix>> = vec![Vec::new(); config.evals.len()];
    for network in &data {
        let name = &network.loaded.input.name;
        if let Err(e) = write_stats_tables(&mut tree, config, name, &network.stats) {
            log::error!("{name}: writing stats: {e}");
            failed = true;
        }
        let write = write_measure_tables(
            &mut tree,
            config,
            name,
            network.loaded.graph.labels(),
            &network.measures.hierarchies,
            &network.measures.centralities,
        );
        if let Err(e) = write {
            log::error!("{name}: writing measures: {e}");
            failed = true;
        }
        for (ei, eval) in config.evals.iter().enumerate() {
            let matrix = analysis::combination_matrix(&network.measures, eval);
            let id = eval.id();
            if config.format.wants_csv() {
                if let Err(e) = tree.write_text(&format!("{name}/combos_{id}.csv"), &matrix.to_csv())
                {
                    log::error!("{name}: writing combos_{id}.csv: {e}");
                    failed = true;
                }
            }
            if config.format.wants_json() {
                if let Err(e) = tree.write_json(&format!("{name}/combos_{id}.json"), &matrix) {
                    log::error!("{name}: writing combos_{id}.json: {e}");
                    failed = true;
                }
            }
            matrices[ei].push(matrix);
        }
    }

    let n_ok = data.len();
    let names: Vec<String> = data
        .iter()
        .map(|d| d.loaded.input.name.clone())
        .collect();

    // Network-vs-network correlation, one table per instance.
    for (ei, eval) in config.evals.iter().enumerate() {
        let id = eval.id();
        let stage = format!("netcorr_{id}");
        if n_ok < 2 {
            log::warn!("{stage}: skipped ({n_ok} networks, need at least 2)");
            stages.push(StageRecord::skipped(stage, "requires at least 2 networks"));
            continue;
        }
        let outcome = analysis::network_correlation_matrix(&matrices[ei])
            .map_err(|e| e.to_string())
            .and_then(|nc| {
                if config.format.wants_csv() {
                    tree.write_text(&format!("aggregate/netcorr_{id}.csv"), &nc.to_csv())
                        .map_err(|e| e.to_string())?;
                }
                if config.format.wants_json() {
                    tree.write_json(&format!("aggregate/netcorr_{id}.json"), &nc)
                        .map_err(|e| e.to_string())?;
                }
                Ok(())
            });
        run_stage(stage, outcome, &mut stages);
    }

    // Threshold ranking, one table per evaluation family, pooling instances.
    let mut families: BTreeMap<EvalFamily, Vec<usize>> = BTreeMap::new();
    for (ei, eval) in config.evals.iter().enumerate() {
        families.entry(EvalFamily::of(eval.measure)).or_default().push(ei);
    }
    for (family, members) in &families {
        let stage = format!("ranking_{}", family.as_str());
        if n_ok == 0 {
            log::warn!("{stage}: skipped (no networks processed successfully)");
            stages.push(StageRecord::skipped(stage, "no networks processed successfully"));
            continue;
        }
        let pooled: Vec<CombinationMatrix> = members
            .iter()
            .flat_map(|&ei| matrices[ei].iter().cloned())
            .collect();
        let outcome = analysis::binarize_and_rank(&pooled, config.threshold)
            .map_err(|e| e.to_string())
            .and_then(|ranking| {
                if config.format.wants_csv() {
                    tree.write_text(
                        &format!("aggregate/ranking_{}.csv", family.as_str()),
                        &ranking.to_csv(),
                    )
                    .map_err(|e| e.to_string())?;
                }
                if config.format.wants_json() {
                    tree.write_json(&format!("aggregate/ranking_{}.json", family.as_str()), &ranking)
                        .map_err(|e| e.to_string())?;
                }
                Ok(())
            });
        run_stage(stage, outcome, &mut stages);
    }

    // Clustering of network profiles, one assignment per instance.
    for (ei, eval) in config.evals.iter().enumerate() {
        let id = eval.id();
        let stage = format!("clusters_{id}");
        if n_ok < 2 {
            log::warn!("{stage}: skipped ({n_ok} networks, need at least 2)");
            stages.push(StageRecord::skipped(stage, "requires at least 2 networks"));
            continue;
        }
        let k = config
            .cluster_k
            .unwrap_or_else(|| analysis::default_cluster_count(eval.measure));
        if k > n_ok {
            log::warn!("{stage}: skipped (k={k} exceeds {n_ok} networks)");
            stages.push(StageRecord::skipped(
                stage,
                format!("k={k} exceeds {n_ok} networks"),
            ));
            continue;
        }
        let features: Vec<Vec<f64>> = matrices[ei].iter().map(analysis::impute_features).collect();
        let outcome = analysis::kmeans(&features, k, config.seed)
            .map_err(|e| e.to_string())
            .and_then(|assignment| {
                let file = ClustersFile {
                    eval_id: id.clone(),
                    networks: names.clone(),
                    assignment,
                };
                tree.write_json(&format!("aggregate/clusters_{id}.json"), &file)
                    .map_err(|e| e.to_string())
            });
        run_stage(stage, outcome, &mut stages);
    }

    // Schulze tally over combination candidates, one per instance.
    for (ei, eval) in config.evals.iter().enumerate() {
        let id = eval.id();
        let stage = format!("schulze_{id}");
        if n_ok == 0 {
            log::warn!("{stage}: skipped (no networks processed successfully)");
            stages.push(StageRecord::skipped(stage, "no networks processed successfully"));
            continue;
        }
        let outcome = analysis::schulze_from_matrices(&matrices[ei], BallotOrder::SignedDescending)
            .map_err(|e| e.to_string())
            .and_then(|tally| {
                let file = SchulzeFile {
                    eval_id: id.clone(),
                    ballot_order: BallotOrder::SignedDescending,
                    tally,
                };
                tree.write_json(&format!("aggregate/schulze_{id}.json"), &file)
                    .map_err(|e| e.to_string())
            });
        run_stage(stage, outcome, &mut stages);
    }

    let stage_failed = stages.iter().any(StageRecord::is_failed);
    if !write_manifest(&mut tree, "pipeline", pipeline_parameters(config), records, stages) {
        failed = true;
    }
    if failed || stage_failed {
        EXIT_PARTIAL
    } else {
        EXIT_OK
    }
}
