//! Simple undirected graph: ingestion, normalization, components, distances,
//! triangle counting, and whole-graph topological statistics.

use std::collections::HashMap;
use std::collections::VecDeque;
use std::io::BufRead;
use std::path::Path;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::export::{format_opt_significant, format_significant};

/// Sentinel distance for unreachable nodes.
pub const UNREACHABLE: u32 = u32::MAX;

const CSV_DIGITS: u32 = 10;

/// Options controlling edge-list parsing.
#[derive(Clone, Debug)]
pub struct ParseOptions {
    /// Lines starting with any of these characters (after leading whitespace) are skipped.
    pub comment_prefixes: Vec<char>,
}

impl Default for ParseOptions {
    fn default() -> Self {
        ParseOptions {
            comment_prefixes: vec!['#', '%'],
        }
    }
}

/// An immutable simple undirected graph. Node labels are arbitrary text tokens
/// mapped to dense indices in first-appearance order; adjacency lists are sorted;
/// no self-loops or duplicate edges.
#[derive(Clone, Debug)]
pub struct Graph {
    labels: Vec<String>,
    adjacency: Vec<Vec<u32>>,
    /// Canonical edge list: (u, v) with u < v, sorted lexicographically.
    edges: Vec<(u32, u32)>,
}

impl Graph {
    /// Build a graph from explicit labels and edges. Self-loops are dropped and
    /// duplicate/reversed edges collapsed, mirroring edge-list normalization.
    pub fn from_labeled_edges(labels: Vec<String>, edges: &[(u32, u32)]) -> Result<Graph> {
        if labels.is_empty() {
            return Err(Error::EmptyGraph);
        }
        let n = labels.len();
        let mut canonical: Vec<(u32, u32)> = Vec::with_capacity(edges.len());
        for &(a, b) in edges {
            assert!(
                (a as usize) < n && (b as usize) < n,
                "edge endpoint out of range"
            );
            if a == b {
                continue;
            }
            canonical.push((a.min(b), a.max(b)));
        }
        canonical.sort_unstable();
        canonical.dedup();

        let mut adjacency = vec![Vec::new(); n];
        for &(u, v) in &canonical {
            adjacency[u as usize].push(v);
            adjacency[v as usize].push(u);
        }
        for list in &mut adjacency {
            list.sort_unstable();
        }
        Ok(Graph {
            labels,
            adjacency,
            edges: canonical,
        })
    }

    /// Build a graph on `n` nodes labeled by their indices ("0", "1", ...).
    pub fn from_edges(n: usize, edges: &[(u32, u32)]) -> Result<Graph> {
        let labels = (0..n).map(|i| i.to_string()).collect();
        Graph::from_labeled_edges(labels, edges)
    }

    /// Parse an edge list from text. See [`load_edge_list`] for the format.
    pub fn from_edge_text(text: &str, options: &ParseOptions) -> Result<Graph> {
        let mut index: HashMap<String, u32> = HashMap::new();
        let mut labels: Vec<String> = Vec::new();
        let mut edges: Vec<(u32, u32)> = Vec::new();

        for (lineno, raw) in text.lines().enumerate() {
            let line = raw.trim();
            if line.is_empty() || options.comment_prefixes.iter().any(|&c| line.starts_with(c)) {
                continue;
            }
            let (a, b) = split_edge_line(line).ok_or_else(|| Error::Parse {
                line: lineno + 1,
                message: format!("expected two node tokens, got: {line:?}"),
            })?;
            let mut id = |token: &str| -> u32 {
                if let Some(&i) = index.get(token) {
                    i
                } else {
                    let i = labels.len() as u32;
                    index.insert(token.to_string(), i);
                    labels.push(token.to_string());
                    i
                }
            };
            let (ia, ib) = (id(a), id(b));
            if ia != ib {
                edges.push((ia, ib));
            }
        }
        if labels.is_empty() {
            return Err(Error::EmptyGraph);
        }
        Graph::from_labeled_edges(labels, &edges)
    }

    /// Number of nodes.
    pub fn node_count(&self) -> usize {
        self.labels.len()
    }

    /// Number of edges.
    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Original text label of a node.
    pub fn label(&self, v: u32) -> &str {
        &self.labels[v as usize]
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    /// Sorted neighbor list of a node.
    pub fn neighbors(&self, v: u32) -> &[u32] {
        &self.adjacency[v as usize]
    }

    pub fn degree(&self, v: u32) -> usize {
        self.adjacency[v as usize].len()
    }

    /// Canonical edge list: (u, v) with u < v, sorted.
    pub fn edges(&self) -> &[(u32, u32)] {
        &self.edges
    }

    pub fn has_edge(&self, u: u32, v: u32) -> bool {
        self.adjacency[u as usize].binary_search(&v).is_ok()
    }

    /// Unweighted shortest-hop distances from `source`; unreachable nodes get
    /// [`UNREACHABLE`].
    pub fn bfs_distances(&self, source: u32) -> Vec<u32> {
        assert!((source as usize) < self.node_count(), "source out of range");
        let mut dist = vec![UNREACHABLE; self.node_count()];
        dist[source as usize] = 0;
        let mut queue = VecDeque::new();
        queue.push_back(source);
        while let Some(u) = queue.pop_front() {
            let du = dist[u as usize];
            for &w in self.neighbors(u) {
                if dist[w as usize] == UNREACHABLE {
                    dist[w as usize] = du + 1;
                    queue.push_back(w);
                }
            }
        }
        dist
    }

    pub fn is_connected(&self) -> bool {
        let dist = self.bfs_distances(0);
        dist.iter().all(|&d| d != UNREACHABLE)
    }

    /// Induced subgraph on the largest connected component. Ties are broken by
    /// the smallest minimum original index; indices are re-compacted preserving
    /// relative order; labels are preserved.
    pub fn largest_connected_component(&self) -> Graph {
        let n = self.node_count();
        let mut component = vec![usize::MAX; n];
        let mut sizes: Vec<usize> = Vec::new();
        for start in 0..n as u32 {
            if component[start as usize] != usize::MAX {
                continue;
            }
            let id = sizes.len();
            let mut size = 0usize;
            let mut queue = VecDeque::new();
            component[start as usize] = id;
            queue.push_back(start);
            while let Some(u) = queue.pop_front() {
                size += 1;
                for &w in self.neighbors(u) {
                    if component[w as usize] == usize::MAX {
                        component[w as usize] = id;
                        queue.push_back(w);
                    }
                }
            }
            sizes.push(size);
        }
        // Components are discovered in order of their minimum original index, so
        // the first component with maximal size wins ties.
        let best = sizes
            .iter()
            .enumerate()
            .max_by(|a, b| a.1.cmp(b.1).then(b.0.cmp(&a.0)))
            .map(|(i, _)| i)
            .expect("graph has at least one node");

        let mut remap = vec![u32::MAX; n];
        let mut labels = Vec::with_capacity(sizes[best]);
        for v in 0..n {
            if component[v] == best {
                remap[v] = labels.len() as u32;
                labels.push(self.labels[v].clone());
            }
        }
        let edges: Vec<(u32, u32)> = self
            .edges
            .iter()
            .filter(|&&(u, v)| component[u as usize] == best && component[v as usize] == best)
            .map(|&(u, v)| (remap[u as usize], remap[v as usize]))
            .collect();
        Graph::from_labeled_edges(labels, &edges).expect("component is non-empty")
    }

    /// Number of distinct triangles containing each node.
    /// The per-node counts sum to 3 × (total triangles).
    pub fn triangles_per_node(&self) -> Vec<u64> {
        let mut counts = vec![0u64; self.node_count()];
        for &(u, v) in &self.edges {
            // Enumerate each triangle {u, v, w} exactly once at its smallest
            // edge by requiring w > v (with u < v by construction).
            let (a, b) = (self.neighbors(u), self.neighbors(v));
            let (mut i, mut j) = (0, 0);
            while i < a.len() && j < b.len() {
                match a[i].cmp(&b[j]) {
                    std::cmp::Ordering::Less => i += 1,
                    std::cmp::Ordering::Greater => j += 1,
                    std::cmp::Ordering::Equal => {
                        let w = a[i];
                        if w > v {
                            counts[u as usize] += 1;
                            counts[v as usize] += 1;
                            counts[w as usize] += 1;
                        }
                        i += 1;
                        j += 1;
                    }
                }
            }
        }
        counts
    }
}

/// Split an edge line into exactly two tokens. Separators are runs of
/// whitespace, or commas (CSV style); empty fields are malformed.
fn split_edge_line(line: &str) -> Option<(&str, &str)> {
    let mut tokens = Vec::new();
    if line.contains(',') {
        for field in line.split(',') {
            let field = field.trim();
            if field.is_empty() || field.contains(char::is_whitespace) {
                return None;
            }
            tokens.push(field);
        }
    } else {
        tokens.extend(line.split_whitespace());
    }
    match tokens[..] {
        [a, b] => Some((a, b)),
        _ => None,
    }
}

/// Load a graph from an edge-list stream: one edge per line, two node tokens
/// separated by whitespace or a comma; lines starting with '#' or '%' are
/// comments. Self-loops are dropped, parallel edges collapsed, direction
/// ignored; node indices are assigned in first-appearance order.
pub fn load_edge_list<R: BufRead>(mut source: R, options: &ParseOptions) -> Result<Graph> {
    let mut text = String::new();
    source.read_to_string(&mut text)?;
    Graph::from_edge_text(&text, options)
}

/// Load a graph from an edge-list file. See [`load_edge_list`].
pub fn load_edge_list_path<P: AsRef<Path>>(path: P, options: &ParseOptions) -> Result<Graph> {
    let file = std::fs::File::open(path)?;
    load_edge_list(std::io::BufReader::new(file), options)
}

/// Whole-graph topological statistics (the usual summary-table columns).
#[derive(Clone, Debug, serde::Serialize)]
pub struct GraphStats {
    pub n: usize,
    pub m: usize,
    /// Minimum degree.
    pub k_min: usize,
    /// Maximum degree.
    pub k_max: usize,
    /// Mean degree 2m/n.
    pub avg_degree: f64,
    /// Mean shortest-path length over all unordered reachable pairs.
    pub avg_shortest_path: f64,
    /// Density 2m/(n(n−1)).
    pub density: f64,
    /// Global clustering coefficient: 3·triangles / connected triples
    /// (0 when the graph has no connected triples).
    pub transitivity: f64,
    /// Degree assortativity: Pearson correlation of endpoint degrees over all
    /// edges counted in both directions. `None` when degenerate (e.g. regular
    /// graphs, where the endpoint-degree variance is zero).
    pub assortativity: Option<f64>,
    /// Maximum core number.
    pub max_coreness: u32,
    /// Maximum standard edge trussness.
    pub max_trussness: u32,
}

impl GraphStats {
    /// Fixed CSV header for stats rows.
    pub const CSV_HEADER: &'static str =
        "n,m,k_min,k_max,avg_k,avg_d,density,transitivity,assortativity,gamma_max,phi_max";

    /// One CSV row matching [`GraphStats::CSV_HEADER`].
    pub fn csv_row(&self) -> String {
        format!(
            "{},{},{},{},{},{},{},{},{},{},{}",
            self.n,
            self.m,
            self.k_min,
            self.k_max,
            format_significant(self.avg_degree, CSV_DIGITS),
            format_significant(self.avg_shortest_path, CSV_DIGITS),
            format_significant(self.density, CSV_DIGITS),
            format_significant(self.transitivity, CSV_DIGITS),
            format_opt_significant(self.assortativity, CSV_DIGITS),
            self.max_coreness,
            self.max_trussness,
        )
    }
}

/// Compute [`GraphStats`] for a connected graph with at least two nodes
/// (run [`Graph::largest_connected_component`] first for arbitrary input).
pub fn graph_stats(g: &Graph) -> Result<GraphStats> {
    let n = g.node_count();
    if n < 2 {
        return Err(Error::Precondition {
            context: "graph_stats",
            requirement: format!("at least 2 nodes required, got {n}"),
        });
    }
    if !g.is_connected() {
        return Err(Error::Precondition {
            context: "graph_stats",
            requirement: "graph must be connected (extract the largest component first)".into(),
        });
    }
    let m = g.edge_count();
    let degrees: Vec<usize> = (0..n as u32).map(|v| g.degree(v)).collect();
    let k_min = *degrees.iter().min().expect("n >= 2");
    let k_max = *degrees.iter().max().expect("n >= 2");
    let nf = n as f64;
    let avg_degree = 2.0 * m as f64 / nf;
    let density = 2.0 * m as f64 / (nf * (nf - 1.0));

    let triangle_total: u64 = g.triangles_per_node().iter().sum::<u64>() / 3;
    let triples: u64 = degrees.iter().map(|&d| (d as u64) * (d as u64 - 1) / 2).sum();
    let transitivity = if triples == 0 {
        0.0
    } else {
        3.0 * triangle_total as f64 / triples as f64
    };

    // Distance sums are integers, so the parallel reduction order cannot
    // perturb the result.
    let dist_sum: u64 = (0..n as u32)
        .into_par_iter()
        .map(|v| {
            g.bfs_distances(v)
                .iter()
                .map(|&d| {
                    debug_assert!(d != UNREACHABLE);
                    d as u64
                })
                .sum::<u64>()
        })
        .sum();
    let avg_shortest_path = dist_sum as f64 / (nf * (nf - 1.0));

    let assortativity = endpoint_degree_correlation(g, &degrees);

    let max_coreness = crate::hierarchy::core_numbers(g)
        .into_iter()
        .max()
        .expect("n >= 2");
    let max_trussness = crate::hierarchy::edge_trussness(g).max_trussness();

    Ok(GraphStats {
        n,
        m,
        k_min,
        k_max,
        avg_degree,
        avg_shortest_path,
        density,
        transitivity,
        assortativity,
        max_coreness,
        max_trussness,
    })
}

/// Pearson correlation of endpoint degrees over all edges counted in both
/// directions; `None` when either marginal is constant.
fn endpoint_degree_correlation(g: &Graph, degrees: &[usize]) -> Option<f64> {
    let m2 = 2.0 * g.edge_count() as f64;
    if g.edge_count() == 0 {
        return None;
    }
    let (mut sx, mut sxx, mut sxy) = (0.0f64, 0.0f64, 0.0f64);
    for &(u, v) in g.edges() {
        let (du, dv) = (degrees[u as usize] as f64, degrees[v as usize] as f64);
        // Each undirected edge contributes the ordered pairs (du,dv) and (dv,du),
        // so the two marginals coincide.
        sx += du + dv;
        sxx += du * du + dv * dv;
        sxy += 2.0 * du * dv;
    }
    let mean = sx / m2;
    let var = sxx / m2 - mean * mean;
    let cov = sxy / m2 - mean * mean;
    if var <= 0.0 {
        return None;
    }
    Some(cov / var)
}
