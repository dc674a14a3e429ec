//! Six node-centrality measures: degree, local (two-hop walk count),
//! shortest-path betweenness, current-flow closeness, Katz, and PageRank.

use nalgebra::{DMatrix, DVector};
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Number of betweenness sources handled per parallel work unit. Each unit is
/// accumulated sequentially and units are reduced in fixed order, so results
/// are bitwise identical for any thread count.
const BETWEENNESS_CHUNK: usize = 64;

/// Spectral-radius power iteration: relative tolerance and iteration cap.
const SPECTRAL_TOL: f64 = 1e-10;
const SPECTRAL_MAX_ITERS: u64 = 1_000_000;

/// The six centrality measures.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, serde::Serialize)]
#[serde(rename_all = "snake_case")]
pub enum CentralityKind {
    Degree,
    Local,
    Betweenness,
    CurrentFlowCloseness,
    Katz,
    Pagerank,
}

impl CentralityKind {
    /// Canonical order used in matrices and exports.
    pub const ALL: [CentralityKind; 6] = [
        CentralityKind::Degree,
        CentralityKind::Local,
        CentralityKind::Betweenness,
        CentralityKind::CurrentFlowCloseness,
        CentralityKind::Katz,
        CentralityKind::Pagerank,
    ];

    /// Short identifier used in file names, CSV columns, and combination ids.
    pub fn as_str(self) -> &'static str {
        match self {
            CentralityKind::Degree => "degree",
            CentralityKind::Local => "local",
            CentralityKind::Betweenness => "betweenness",
            CentralityKind::CurrentFlowCloseness => "cf_closeness",
            CentralityKind::Katz => "katz",
            CentralityKind::Pagerank => "pagerank",
        }
    }
}

impl std::fmt::Display for CentralityKind {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.as_str())
    }
}

/// How the local (two-hop) centrality counts the neighborhood.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, serde::Serialize)]
#[serde(rename_all = "snake_case")]
pub enum LocalMode {
    /// Row sums of the squared adjacency matrix, diagonal included
    /// (= sum of neighbor degrees). The default.
    #[default]
    WalkCount,
    /// Number of distinct other nodes within two hops.
    DistinctTwoHop,
}

/// Constants a measure actually used; unset fields are omitted from exports.
#[derive(Clone, Debug, Default, serde::Serialize)]
pub struct CentralityParams {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub katz_s: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub spectral_radius: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub damping: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub tolerance: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub max_iterations: Option<u32>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub iterations_used: Option<u32>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub local_mode: Option<LocalMode>,
}

/// Per-node values for one centrality measure.
#[derive(Clone, Debug)]
pub struct CentralityScores {
    pub kind: CentralityKind,
    pub values: Vec<f64>,
    pub params: CentralityParams,
}

/// Tunables for the parameterized measures; `Default` gives the standard setup.
#[derive(Clone, Debug)]
pub struct CentralityOptions {
    /// Katz attenuation; `None` selects 0.9 / spectral radius.
    pub katz_s: Option<f64>,
    pub local_mode: LocalMode,
    pub damping: f64,
    pub tolerance: f64,
    pub max_iterations: u32,
}

impl Default for CentralityOptions {
    fn default() -> Self {
        CentralityOptions {
            katz_s: None,
            local_mode: LocalMode::WalkCount,
            damping: 0.85,
            tolerance: 1e-10,
            max_iterations: 1000,
        }
    }
}

fn require_min_nodes(g: &Graph, context: &'static str, min: usize) -> Result<()> {
    if g.node_count() < min {
        return Err(Error::Precondition {
            context,
            requirement: format!("at least {min} nodes required, got {}", g.node_count()),
        });
    }
    Ok(())
}

fn require_connected(g: &Graph, context: &'static str) -> Result<()> {
    if !g.is_connected() {
        return Err(Error::Precondition {
            context,
            requirement: "graph must be connected (extract the largest component first)".into(),
        });
    }
    Ok(())
}

/// Degree centrality: deg(v) / (N−1).
pub fn degree_centrality(g: &Graph) -> Result<CentralityScores> {
    require_min_nodes(g, "degree_centrality", 2)?;
    let norm = (g.node_count() - 1) as f64;
    let values = (0..g.node_count() as u32)
        .map(|v| g.degree(v) as f64 / norm)
        .collect();
    Ok(CentralityScores {
        kind: CentralityKind::Degree,
        values,
        params: CentralityParams::default(),
    })
}

/// Local centrality: two-hop reach divided by N−1. In the default
/// [`LocalMode::WalkCount`] this is the v-th row sum of A² (diagonal
/// included), i.e. the sum of neighbor degrees.
pub fn local_centrality(g: &Graph, mode: LocalMode) -> Result<CentralityScores> {
    require_min_nodes(g, "local_centrality", 2)?;
    let n = g.node_count();
    let norm = (n - 1) as f64;
    let values: Vec<f64> = match mode {
        LocalMode::WalkCount => (0..n as u32)
            .map(|v| {
                let walks: u64 = g.neighbors(v).iter().map(|&w| g.degree(w) as u64).sum();
                walks as f64 / norm
            })
            .collect(),
        LocalMode::DistinctTwoHop => {
            let mut values = Vec::with_capacity(n);
            let mut mark = vec![false; n];
            for v in 0..n as u32 {
                let mut reached: Vec<u32> = Vec::new();
                for &w in g.neighbors(v) {
                    if !mark[w as usize] {
                        mark[w as usize] = true;
                        reached.push(w);
                    }
                    for &x in g.neighbors(w) {
                        if x != v && !mark[x as usize] {
                            mark[x as usize] = true;
                            reached.push(x);
                        }
                    }
                }
                values.push(reached.len() as f64 / norm);
                for r in reached {
                    mark[r as usize] = false;
                }
            }
            values
        }
    };
    Ok(CentralityScores {
        kind: CentralityKind::Local,
        values,
        params: CentralityParams {
            local_mode: Some(mode),
            ..CentralityParams::default()
        },
    })
}

/// Shortest-path betweenness with endpoints excluded, normalized by
/// 2/((N−1)(N−2)) over unordered pairs. Requires a connected graph with n ≥ 3.
pub fn betweenness_centrality(g: &Graph) -> Result<CentralityScores> {
    let n = g.node_count();
    if n < 3 {
        return Err(Error::Precondition {
            context: "betweenness_centrality",
            requirement: format!("normalization needs at least 3 nodes, got {n}"),
        });
    }
    require_connected(g, "betweenness_centrality")?;

    let sources: Vec<u32> = (0..n as u32).collect();
    let partials: Vec<Vec<f64>> = sources
        .par_chunks(BETWEENNESS_CHUNK)
        .map(|chunk| {
            let mut acc = vec![0.0f64; n];
            for &s in chunk {
                accumulate_from_source(g, s, &mut acc);
            }
            acc
        })
        .collect();

    // Fixed-order reduction over chunks keeps the sum independent of scheduling.
    let mut acc = vec![0.0f64; n];
    for partial in partials {
        for (a, p) in acc.iter_mut().zip(partial) {
            *a += p;
        }
    }

    // Source-rooted accumulation counts every unordered pair twice, so the
    // 2/((N−1)(N−2)) unordered-pair normalization becomes a plain division.
    let norm = ((n - 1) * (n - 2)) as f64;
    let values = acc.into_iter().map(|x| x / norm).collect();
    Ok(CentralityScores {
        kind: CentralityKind::Betweenness,
        values,
        params: CentralityParams::default(),
    })
}

/// One Brandes source pass: BFS shortest-path DAG, then dependency
/// back-propagation. Adds ordered-pair dependencies into `acc`.
fn accumulate_from_source(g: &Graph, s: u32, acc: &mut [f64]) {
    let n = g.node_count();
    let mut order: Vec<u32> = Vec::with_capacity(n);
    let mut preds: Vec<Vec<u32>> = vec![Vec::new(); n];
    let mut sigma = vec![0.0f64; n];
    let mut dist = vec![-1i64; n];
    sigma[s as usize] = 1.0;
    dist[s as usize] = 0;
    let mut head = 0usize;
    order.push(s);
    while head < order.len() {
        let v = order[head];
        head += 1;
        let dv = dist[v as usize];
        for &w in g.neighbors(v) {
            let wu = w as usize;
            if dist[wu] < 0 {
                dist[wu] = dv + 1;
                order.push(w);
            }
            if dist[wu] == dv + 1 {
                sigma[wu] += sigma[v as usize];
                preds[wu].push(v);
            }
        }
    }
    let mut delta = vec![0.0f64; n];
    for &w in order.iter().rev() {
        let wu = w as usize;
        let coeff = (1.0 + delta[wu]) / sigma[wu];
        for &v in &preds[wu] {
            delta[v as usize] += sigma[v as usize] * coeff;
        }
        if w != s {
            acc[wu] += delta[wu];
        }
    }
}

/// Current-flow closeness: with L = D − A and F the all-ones matrix, let
/// R = (L + F)^{-1}; then β(v) = N / Σ_j (r_vv + r_jj − 2 r_vj). The bracket
/// equals the effective resistance between v and j. Dense O(n³) solve.
pub fn current_flow_closeness(g: &Graph) -> Result<CentralityScores> {
    require_min_nodes(g, "current_flow_closeness", 2)?;
    require_connected(g, "current_flow_closeness")?;
    let n = g.node_count();
    let mut m = DMatrix::<f64>::from_element(n, n, 1.0);
    for v in 0..n {
        m[(v, v)] += g.degree(v as u32) as f64;
    }
    for &(u, v) in g.edges() {
        m[(u as usize, v as usize)] -= 1.0;
        m[(v as usize, u as usize)] -= 1.0;
    }
    let r = m.lu().try_inverse().ok_or_else(|| {
        Error::Numerical("current-flow matrix is singular within working precision".into())
    })?;
    let trace: f64 = (0..n).map(|i| r[(i, i)]).sum();
    let nf = n as f64;
    let values: Vec<f64> = (0..n)
        .map(|v| {
            let row_sum: f64 = (0..n).map(|j| r[(v, j)]).sum();
            nf / (nf * r[(v, v)] + trace - 2.0 * row_sum)
        })
        .collect();
    Ok(CentralityScores {
        kind: CentralityKind::CurrentFlowCloseness,
        values,
        params: CentralityParams::default(),
    })
}

/// Spectral radius of the adjacency matrix by power iteration. Iterates on
/// A + I so bipartite spectra (where ±λ_max tie in magnitude) still converge,
/// then shifts back.
pub fn spectral_radius(g: &Graph) -> Result<f64> {
    let n = g.node_count();
    if g.edge_count() == 0 {
        return Ok(0.0);
    }
    let mut x = vec![1.0 / (n as f64).sqrt(); n];
    let mut y = vec![0.0f64; n];
    let mut previous = f64::NAN;
    for _ in 0..SPECTRAL_MAX_ITERS {
        // y = (A + I) x
        for v in 0..n {
            let mut sum = x[v];
            for &w in g.neighbors(v as u32) {
                sum += x[w as usize];
            }
            y[v] = sum;
        }
        // Rayleigh quotient ρ = xᵀ(A+I)x with ‖x‖ = 1.
        let rho: f64 = x.iter().zip(&y).map(|(a, b)| a * b).sum();
        let norm = y.iter().map(|v| v * v).sum::<f64>().sqrt();
        for (xi, yi) in x.iter_mut().zip(&y) {
            *xi = yi / norm;
        }
        if (rho - previous).abs() <= SPECTRAL_TOL * rho.abs().max(1.0) {
            return Ok((rho - 1.0).max(0.0));
        }
        previous = rho;
    }
    Err(Error::NonConvergence {
        what: "spectral-radius power iteration",
        iterations: SPECTRAL_MAX_ITERS,
    })
}

/// Katz centrality: β(v) = Σ_{p≥1} s^p (A^p · 1)_v, computed by solving
/// (I − sA) x = sA·1. `s = None` selects 0.9 / spectral radius (0 on an
/// edgeless graph). Requires 0 ≤ s and s·λ_max < 1.
pub fn katz_centrality(g: &Graph, s: Option<f64>) -> Result<CentralityScores> {
    let n = g.node_count();
    let lambda = spectral_radius(g)?;
    let s = match s {
        Some(s) => s,
        None if lambda == 0.0 => 0.0,
        None => 0.9 / lambda,
    };
    if !s.is_finite() || s < 0.0 {
        return Err(Error::Parameter {
            name: "katz_s",
            message: format!("attenuation must be finite and non-negative, got {s}"),
        });
    }
    if s * lambda >= 1.0 {
        return Err(Error::Parameter {
            name: "katz_s",
            message: format!(
                "attenuation {s} must stay below 1/λ_max = {}",
                1.0 / lambda
            ),
        });
    }
    let mut m = DMatrix::<f64>::identity(n, n);
    for &(u, v) in g.edges() {
        m[(u as usize, v as usize)] = -s;
        m[(v as usize, u as usize)] = -s;
    }
    let rhs = DVector::<f64>::from_iterator(
        n,
        (0..n as u32).map(|v| s * g.degree(v) as f64),
    );
    let x = m.lu().solve(&rhs).ok_or_else(|| {
        Error::Numerical("Katz system is singular within working precision".into())
    })?;
    Ok(CentralityScores {
        kind: CentralityKind::Katz,
        values: x.iter().copied().collect(),
        params: CentralityParams {
            katz_s: Some(s),
            spectral_radius: Some(lambda),
            ..CentralityParams::default()
        },
    })
}

/// PageRank by power iteration: β(v) = (1−d)/N + d Σ_{u ∈ N(v)} β(u)/deg(u),
/// stopping when the L1 change drops below `tolerance`; the result is
/// renormalized to sum exactly to 1. Requires a connected graph.
pub fn pagerank_centrality(
    g: &Graph,
    damping: f64,
    tolerance: f64,
    max_iterations: u32,
) -> Result<CentralityScores> {
    require_min_nodes(g, "pagerank_centrality", 1)?;
    require_connected(g, "pagerank_centrality")?;
    if !(0.0..1.0).contains(&damping) {
        return Err(Error::Parameter {
            name: "damping",
            message: format!("damping must lie in [0, 1), got {damping}"),
        });
    }
    let n = g.node_count();
    let params = |iters: u32| CentralityParams {
        damping: Some(damping),
        tolerance: Some(tolerance),
        max_iterations: Some(max_iterations),
        iterations_used: Some(iters),
        ..CentralityParams::default()
    };
    if n == 1 {
        return Ok(CentralityScores {
            kind: CentralityKind::Pagerank,
            values: vec![1.0],
            params: params(0),
        });
    }
    let base = (1.0 - damping) / n as f64;
    let mut rank = vec![1.0 / n as f64; n];
    let mut next = vec![0.0f64; n];
    for iteration in 1..=max_iterations {
        // A connected graph with n ≥ 2 has no dangling nodes.
        for (v, slot) in next.iter_mut().enumerate() {
            let mut sum = 0.0;
            for &u in g.neighbors(v as u32) {
                sum += rank[u as usize] / g.degree(u) as f64;
            }
            *slot = base + damping * sum;
        }
        let change: f64 = rank
            .iter()
            .zip(&next)
            .map(|(a, b)| (a - b).abs())
            .sum();
        std::mem::swap(&mut rank, &mut next);
        if change < tolerance {
            let total: f64 = rank.iter().sum();
            for r in &mut rank {
                *r /= total;
            }
            return Ok(CentralityScores {
                kind: CentralityKind::Pagerank,
                values: rank,
                params: params(iteration),
            });
        }
    }
    Err(Error::NonConvergence {
        what: "pagerank power iteration",
        iterations: max_iterations as u64,
    })
}

/// Compute one centrality measure by kind with the given options.
pub fn compute(g: &Graph, kind: CentralityKind, options: &CentralityOptions) -> Result<CentralityScores> {
    match kind {
        CentralityKind::Degree => degree_centrality(g),
        CentralityKind::Local => local_centrality(g, options.local_mode),
        CentralityKind::Betweenness => betweenness_centrality(g),
        CentralityKind::CurrentFlowCloseness => current_flow_closeness(g),
        CentralityKind::Katz => katz_centrality(g, options.katz_s),
        CentralityKind::Pagerank => {
            pagerank_centrality(g, options.damping, options.tolerance, options.max_iterations)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;

    fn complete(n: usize) -> Graph {
        let mut edges = Vec::new();
        for u in 0..n as u32 {
            for v in (u + 1)..n as u32 {
                edges.push((u, v));
            }
        }
        Graph::from_edges(n, &edges).unwrap()
    }

    fn star(leaves: usize) -> Graph {
        let edges: Vec<(u32, u32)> = (1..=leaves as u32).map(|v| (0, v)).collect();
        Graph::from_edges(leaves + 1, &edges).unwrap()
    }

    fn path3() -> Graph {
        Graph::from_edges(3, &[(0, 1), (1, 2)]).unwrap()
    }

    #[test]
    fn degree_on_k4_and_star() {
        let s = degree_centrality(&complete(4)).unwrap();
        assert_eq!(s.values, vec![1.0; 4]);
        let s = degree_centrality(&star(4)).unwrap();
        assert_eq!(s.values, vec![1.0, 0.25, 0.25, 0.25, 0.25]);
    }

    #[test]
    fn local_walk_count_on_k2_and_p3() {
        let k2 = Graph::from_edges(2, &[(0, 1)]).unwrap();
        let s = local_centrality(&k2, LocalMode::WalkCount).unwrap();
        assert_eq!(s.values, vec![1.0, 1.0], "A² is the identity on a single edge");
        let s = local_centrality(&path3(), LocalMode::WalkCount).unwrap();
        assert_eq!(s.values, vec![1.0, 1.0, 1.0]);
    }

    #[test]
    fn local_distinct_mode_differs_on_triangles() {
        let k3 = complete(3);
        let walk = local_centrality(&k3, LocalMode::WalkCount).unwrap();
        assert_eq!(walk.values, vec![2.0; 3]);
        let distinct = local_centrality(&k3, LocalMode::DistinctTwoHop).unwrap();
        assert_eq!(distinct.values, vec![1.0; 3]);
        assert_eq!(distinct.params.local_mode, Some(LocalMode::DistinctTwoHop));
    }

    #[test]
    fn betweenness_on_p3_and_star() {
        let s = betweenness_centrality(&path3()).unwrap();
        assert_abs_diff_eq!(s.values[0], 0.0);
        assert_abs_diff_eq!(s.values[1], 1.0);
        assert_abs_diff_eq!(s.values[2], 0.0);
        let s = betweenness_centrality(&star(5)).unwrap();
        assert_abs_diff_eq!(s.values[0], 1.0);
        for leaf in 1..=5 {
            assert_abs_diff_eq!(s.values[leaf], 0.0);
        }
    }

    #[test]
    fn betweenness_rejects_tiny_or_disconnected() {
        let k2 = Graph::from_edges(2, &[(0, 1)]).unwrap();
        assert!(betweenness_centrality(&k2).is_err());
        let disc = Graph::from_edges(4, &[(0, 1), (2, 3)]).unwrap();
        assert!(betweenness_centrality(&disc).is_err());
    }

    #[test]
    fn current_flow_closeness_on_k2_and_k3() {
        let k2 = Graph::from_edges(2, &[(0, 1)]).unwrap();
        let s = current_flow_closeness(&k2).unwrap();
        assert_abs_diff_eq!(s.values[0], 2.0, epsilon = 1e-12);
        assert_abs_diff_eq!(s.values[1], 2.0, epsilon = 1e-12);
        let s = current_flow_closeness(&complete(3)).unwrap();
        for v in 0..3 {
            assert_abs_diff_eq!(s.values[v], 2.25, epsilon = 1e-12);
        }
    }

    #[test]
    fn spectral_radius_on_known_graphs() {
        assert_abs_diff_eq!(spectral_radius(&complete(4)).unwrap(), 3.0, epsilon = 1e-8);
        // K1,4 is bipartite with spectrum ±2: the shift must still converge.
        assert_abs_diff_eq!(spectral_radius(&star(4)).unwrap(), 2.0, epsilon = 1e-8);
        let empty = Graph::from_edges(3, &[]).unwrap();
        assert_eq!(spectral_radius(&empty).unwrap(), 0.0);
    }

    #[test]
    fn katz_on_k2_and_edgeless() {
        let k2 = Graph::from_edges(2, &[(0, 1)]).unwrap();
        let s = katz_centrality(&k2, Some(0.5)).unwrap();
        assert_abs_diff_eq!(s.values[0], 1.0, epsilon = 1e-12);
        assert_abs_diff_eq!(s.values[1], 1.0, epsilon = 1e-12);
        assert_eq!(s.params.katz_s, Some(0.5));

        let empty = Graph::from_edges(3, &[]).unwrap();
        let s = katz_centrality(&empty, None).unwrap();
        assert_eq!(s.values, vec![0.0; 3]);
        assert_eq!(s.params.katz_s, Some(0.0));
    }

    #[test]
    fn katz_rejects_out_of_range_attenuation() {
        let k2 = Graph::from_edges(2, &[(0, 1)]).unwrap();
        // λ_max(K2) = 1, so s = 1.5 is past the divergence boundary.
        assert!(matches!(
            katz_centrality(&k2, Some(1.5)),
            Err(Error::Parameter { name: "katz_s", .. })
        ));
        assert!(katz_centrality(&k2, Some(-0.1)).is_err());
    }

    #[test]
    fn pagerank_uniform_on_regular_graphs() {
        for g in [complete(5), Graph::from_edges(4, &[(0, 1), (1, 2), (2, 3), (0, 3)]).unwrap()] {
            let s = pagerank_centrality(&g, 0.85, 1e-10, 1000).unwrap();
            let n = g.node_count() as f64;
            for &v in &s.values {
                assert_abs_diff_eq!(v, 1.0 / n, epsilon = 1e-9);
            }
        }
    }

    #[test]
    fn pagerank_star_center_dominates() {
        let s = pagerank_centrality(&star(4), 0.85, 1e-10, 1000).unwrap();
        let total: f64 = s.values.iter().sum();
        assert_abs_diff_eq!(total, 1.0, epsilon = 1e-12);
        for leaf in 1..=4 {
            assert!(s.values[0] > s.values[leaf]);
            assert_abs_diff_eq!(s.values[1], s.values[leaf], epsilon = 1e-12);
        }
    }

    #[test]
    fn pagerank_single_node_and_errors() {
        let one = Graph::from_edges(1, &[]).unwrap();
        assert_eq!(pagerank_centrality(&one, 0.85, 1e-10, 1000).unwrap().values, vec![1.0]);
        let disc = Graph::from_edges(4, &[(0, 1), (2, 3)]).unwrap();
        assert!(pagerank_centrality(&disc, 0.85, 1e-10, 1000).is_err());
        let k2 = Graph::from_edges(2, &[(0, 1)]).unwrap();
        assert!(matches!(
            pagerank_centrality(&k2, 1.0, 1e-10, 1000),
            Err(Error::Parameter { name: "damping", .. })
        ));
        // A zero tolerance can never be undercut, so the cap must trip.
        assert!(matches!(
            pagerank_centrality(&path3(), 0.85, 0.0, 2),
            Err(Error::NonConvergence { .. })
        ));
    }
}
