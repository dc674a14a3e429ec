//! Node-hierarchy measures: k-core, k-truss, local reaching centrality, and
//! triangle participation. Each yields a raw importance score per node (higher
//! = more important) plus a derived hierarchy level (level 1 = top of the
//! hierarchy; for local reaching centrality the level is the raw value itself).

use std::collections::HashMap;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::graph::{Graph, UNREACHABLE};

/// The four hierarchy measures.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, serde::Serialize)]
#[serde(rename_all = "snake_case")]
pub enum HierarchyKind {
    Core,
    Truss,
    LocalReaching,
    TriangleParticipation,
}

impl HierarchyKind {
    /// Canonical order used in matrices and exports.
    pub const ALL: [HierarchyKind; 4] = [
        HierarchyKind::Core,
        HierarchyKind::Truss,
        HierarchyKind::LocalReaching,
        HierarchyKind::TriangleParticipation,
    ];

    /// Short identifier used in file names, CSV rows, and combination ids.
    pub fn as_str(self) -> &'static str {
        match self {
            HierarchyKind::Core => "core",
            HierarchyKind::Truss => "truss",
            HierarchyKind::LocalReaching => "lrc",
            HierarchyKind::TriangleParticipation => "tp",
        }
    }
}

impl std::fmt::Display for HierarchyKind {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Per-node raw scores and hierarchy levels for one measure.
#[derive(Clone, Debug)]
pub struct HierarchyScores {
    pub kind: HierarchyKind,
    /// Importance-oriented raw score (core number, shifted node trussness,
    /// reaching value, triangle count). This is what correlation and
    /// similarity consumers should use.
    pub raw: Vec<f64>,
    /// Hierarchy level: a positive integer (stored exactly in f64) for
    /// core/truss/tp with level 1 at the top; equal to `raw` for lrc.
    pub level: Vec<f64>,
    /// Minimum constant of the decomposition (standard trussness for truss;
    /// unused otherwise).
    pub k_min: Option<u32>,
    /// Maximum constant of the decomposition (max core number, max standard
    /// trussness, or max triangle count; unused for lrc).
    pub k_max: Option<u32>,
}

/// Standard trussness per edge, parallel to `Graph::edges()`.
#[derive(Clone, Debug)]
pub struct EdgeTrussMap {
    /// Standard trussness of each edge: the largest k such that the edge
    /// survives in a subgraph where every edge closes at least k−2 triangles.
    /// Triangle-free edges sit at 2.
    pub trussness: Vec<u32>,
    /// Minimum standard trussness over edges (the shift origin).
    pub k_min: u32,
    /// Maximum standard trussness over edges.
    pub k_max: u32,
}

impl EdgeTrussMap {
    /// Shifted edge label t(e) = trussness − k_min.
    pub fn shifted(&self, edge_index: usize) -> u32 {
        self.trussness[edge_index] - self.k_min
    }

    pub fn max_trussness(&self) -> u32 {
        self.k_max
    }
}

/// Core number of every node via bucket peeling (repeatedly removing minimum-
/// degree nodes). Output is unique regardless of within-bucket order.
pub fn core_numbers(g: &Graph) -> Vec<u32> {
    let n = g.node_count();
    let mut degree: Vec<usize> = (0..n as u32).map(|v| g.degree(v)).collect();
    let max_degree = degree.iter().copied().max().unwrap_or(0);

    // Bucket sort nodes by degree: vert holds nodes ordered by current degree,
    // pos[v] is v's slot, bin[d] is the start of degree-d nodes.
    let mut bin = vec![0usize; max_degree + 2];
    for &d in &degree {
        bin[d + 1] += 1;
    }
    for d in 1..bin.len() {
        bin[d] += bin[d - 1];
    }
    let mut vert = vec![0u32; n];
    let mut pos = vec![0usize; n];
    {
        let mut next = bin.clone();
        for v in 0..n {
            pos[v] = next[degree[v]];
            vert[pos[v]] = v as u32;
            next[degree[v]] += 1;
        }
    }

    let mut core = vec![0u32; n];
    for i in 0..n {
        let v = vert[i];
        core[v as usize] = degree[v as usize] as u32;
        for &w in g.neighbors(v) {
            let wu = w as usize;
            if degree[wu] > degree[v as usize] {
                // Swap w with the first node of its degree bucket, then shrink
                // its degree by one.
                let dw = degree[wu];
                let first_pos = bin[dw];
                let first_node = vert[first_pos];
                if first_node != w {
                    vert[first_pos] = w;
                    vert[pos[wu]] = first_node;
                    pos[first_node as usize] = pos[wu];
                    pos[wu] = first_pos;
                }
                bin[dw] += 1;
                degree[wu] -= 1;
            }
        }
    }
    core
}

/// k-core hierarchy: raw = core number c(v), level = k_max − (c(v) − 1).
pub fn core_decompose(g: &Graph) -> HierarchyScores {
    let core = core_numbers(g);
    let k_max = core.iter().copied().max().unwrap_or(0);
    let raw: Vec<f64> = core.iter().map(|&c| c as f64).collect();
    // k_max − (c − 1) rewritten as k_max + 1 − c to stay in unsigned range.
    let level: Vec<f64> = core.iter().map(|&c| (k_max + 1 - c) as f64).collect();
    HierarchyScores {
        kind: HierarchyKind::Core,
        raw,
        level,
        k_min: None,
        k_max: Some(k_max),
    }
}

/// Standard trussness of every edge by staged support peeling.
pub fn edge_trussness(g: &Graph) -> EdgeTrussMap {
    let m = g.edge_count();
    let mut edge_id: HashMap<(u32, u32), usize> = HashMap::with_capacity(m);
    for (i, &e) in g.edges().iter().enumerate() {
        edge_id.insert(e, i);
    }
    let id = |a: u32, b: u32| -> usize { edge_id[&(a.min(b), a.max(b))] };

    // Initial support: triangles per edge.
    let mut support = vec![0u32; m];
    for (i, &(u, v)) in g.edges().iter().enumerate() {
        support[i] = sorted_intersection_count(g.neighbors(u), g.neighbors(v));
    }

    let mut alive = vec![true; m];
    let mut trussness = vec![0u32; m];
    let mut remaining = m;
    let mut k = 3u32;
    while remaining > 0 {
        // Removing every edge whose support dropped below k−2 yields the
        // k-truss; edges removed on this pass have trussness k−1.
        let mut queue: Vec<usize> =
            (0..m).filter(|&i| alive[i] && support[i] < k - 2).collect();
        while let Some(i) = queue.pop() {
            if !alive[i] {
                continue;
            }
            alive[i] = false;
            trussness[i] = k - 1;
            remaining -= 1;
            let (u, v) = g.edges()[i];
            for w in sorted_intersection(g.neighbors(u), g.neighbors(v)) {
                let (a, b) = (id(u, w), id(v, w));
                if alive[a] && alive[b] {
                    for e in [a, b] {
                        support[e] -= 1;
                        if support[e] < k - 2 {
                            queue.push(e);
                        }
                    }
                }
            }
        }
        k += 1;
    }

    let k_min = trussness.iter().copied().min().unwrap_or(2);
    let k_max = trussness.iter().copied().max().unwrap_or(2);
    EdgeTrussMap {
        trussness,
        k_min,
        k_max,
    }
}

/// k-truss hierarchy. Node raw score t(v) is the maximum shifted label
/// (trussness − k_min) over incident edges — the peeling stage at which the
/// node becomes isolated; level = (k_max − k_min) − (t(v) − 1).
pub fn truss_decompose(g: &Graph) -> (EdgeTrussMap, HierarchyScores) {
    let map = edge_trussness(g);
    let n = g.node_count();
    // Isolated nodes keep shift 0 and land in the bottom tier.
    let mut node_shift = vec![0u32; n];
    for (i, &(u, v)) in g.edges().iter().enumerate() {
        let t = map.shifted(i);
        for x in [u as usize, v as usize] {
            node_shift[x] = node_shift[x].max(t);
        }
    }
    let span = map.k_max - map.k_min;
    let raw: Vec<f64> = node_shift.iter().map(|&t| t as f64).collect();
    // span − (t − 1) written to stay in unsigned arithmetic: t ≤ span always.
    let level: Vec<f64> = node_shift.iter().map(|&t| (span - t + 1) as f64).collect();
    let scores = HierarchyScores {
        kind: HierarchyKind::Truss,
        raw,
        level,
        k_min: Some(map.k_min),
        k_max: Some(map.k_max),
    };
    (map, scores)
}

/// Local reaching centrality: (1/(N−1)) Σ over reachable j≠v of 1/d(v,j).
/// Values lie in [0,1]; raw and level coincide.
pub fn local_reaching_centrality(g: &Graph) -> Result<HierarchyScores> {
    let n = g.node_count();
    if n < 2 {
        return Err(Error::Precondition {
            context: "local_reaching_centrality",
            requirement: format!("at least 2 nodes required, got {n}"),
        });
    }
    let norm = (n - 1) as f64;
    let raw: Vec<f64> = (0..n as u32)
        .into_par_iter()
        .map(|v| {
            let mut sum = 0.0;
            for &d in &g.bfs_distances(v) {
                if d != 0 && d != UNREACHABLE {
                    sum += 1.0 / d as f64;
                }
            }
            sum / norm
        })
        .collect();
    Ok(HierarchyScores {
        kind: HierarchyKind::LocalReaching,
        level: raw.clone(),
        raw,
        k_min: None,
        k_max: None,
    })
}

/// Triangle participation: raw = number of triangles containing the node,
/// level = k_max + 1 − Tp(v) with k_max the maximum count.
pub fn triangle_participation(g: &Graph) -> HierarchyScores {
    let counts = g.triangles_per_node();
    let k_max = counts.iter().copied().max().unwrap_or(0);
    let raw: Vec<f64> = counts.iter().map(|&c| c as f64).collect();
    let level: Vec<f64> = counts.iter().map(|&c| (k_max + 1 - c) as f64).collect();
    HierarchyScores {
        kind: HierarchyKind::TriangleParticipation,
        raw,
        level,
        k_min: None,
        k_max: Some(k_max.min(u32::MAX as u64) as u32),
    }
}

/// Compute one hierarchy measure by kind.
pub fn compute(g: &Graph, kind: HierarchyKind) -> Result<HierarchyScores> {
    match kind {
        HierarchyKind::Core => Ok(core_decompose(g)),
        HierarchyKind::Truss => Ok(truss_decompose(g).1),
        HierarchyKind::LocalReaching => local_reaching_centrality(g),
        HierarchyKind::TriangleParticipation => Ok(triangle_participation(g)),
    }
}

fn sorted_intersection_count(a: &[u32], b: &[u32]) -> u32 {
    let (mut i, mut j, mut count) = (0, 0, 0);
    while i < a.len() && j < b.len() {
        match a[i].cmp(&b[j]) {
            std::cmp::Ordering::Less => i += 1,
            std::cmp::Ordering::Greater => j += 1,
            std::cmp::Ordering::Equal => {
                count += 1;
                i += 1;
                j += 1;
            }
        }
    }
    count
}

fn sorted_intersection(a: &[u32], b: &[u32]) -> Vec<u32> {
    let (mut i, mut j) = (0, 0);
    let mut out = Vec::new();
    while i < a.len() && j < b.len() {
        match a[i].cmp(&b[j]) {
            std::cmp::Ordering::Less => i += 1,
            std::cmp::Ordering::Greater => j += 1,
            std::cmp::Ordering::Equal => {
                out.push(a[i]);
                i += 1;
                j += 1;
            }
        }
    }
    out
}
