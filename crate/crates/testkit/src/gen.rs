//! Seeded deterministic generators for graphs, permutations, and score
//! vectors.

use hicent::Graph;
use rand::seq::SliceRandom;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Erdős–Rényi G(n, p). May be disconnected or edgeless.
pub fn gnp(n: usize, p: f64, seed: u64) -> Graph {
    let mut r = rng(seed);
    let mut edges = Vec::new();
    for u in 0..n as u32 {
        for v in (u + 1)..n as u32 {
            if r.gen::<f64>() < p {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edges(n, &edges).expect("n >= 1")
}

/// Uniform random tree on n nodes (each node attaches to a random earlier one).
pub fn random_tree(n: usize, seed: u64) -> Graph {
    let mut r = rng(seed);
    let mut edges = Vec::new();
    for v in 1..n as u32 {
        let parent = r.gen_range(0..v);
        edges.push((parent, v));
    }
    Graph::from_edges(n, &edges).expect("n >= 1")
}

/// Connected random graph: random tree plus `extra` additional random edges
/// (duplicates collapse, so the final edge count may be lower).
pub fn random_connected(n: usize, extra: usize, seed: u64) -> Graph {
    let mut r = rng(seed);
    let mut edges = Vec::new();
    for v in 1..n as u32 {
        let parent = r.gen_range(0..v);
        edges.push((parent, v));
    }
    let mut added = 0;
    let mut attempts = 0;
    while added < extra && attempts < extra * 20 + 100 {
        attempts += 1;
        let u = r.gen_range(0..n as u32);
        let v = r.gen_range(0..n as u32);
        if u != v {
            edges.push((u, v));
            added += 1;
        }
    }
    Graph::from_edges(n, &edges).expect("n >= 1")
}

pub fn random_permutation(n: usize, seed: u64) -> Vec<u32> {
    let mut perm: Vec<u32> = (0..n as u32).collect();
    perm.shuffle(&mut rng(seed));
    perm
}

/// Rebuild `g` with node v renamed to perm[v]. A measure `f` is
/// isomorphism-equivariant iff f(relabel(g))[perm[v]] == f(g)[v].
pub fn relabel(g: &Graph, perm: &[u32]) -> Graph {
    let edges: Vec<(u32, u32)> = g
        .edges()
        .iter()
        .map(|&(u, v)| (perm[u as usize], perm[v as usize]))
        .collect();
    Graph::from_edges(g.node_count(), &edges).expect("non-empty")
}

/// Random scores, roughly uniform in [0, 1), tie-free with probability 1.
pub fn random_scores(n: usize, seed: u64) -> Vec<f64> {
    let mut r = rng(seed);
    (0..n).map(|_| r.gen::<f64>()).collect()
}

/// Random scores drawn from `levels` distinct values — dense in ties.
pub fn random_tied_scores(n: usize, levels: u32, seed: u64) -> Vec<f64> {
    let mut r = rng(seed);
    (0..n).map(|_| r.gen_range(0..levels) as f64).collect()
}

/// Every labeled graph on `n` nodes (all 2^C(n,2) edge subsets) that is
/// connected. Only sensible for small n: counts are 1, 1, 4, 38, 728, 26704
/// for n = 1..=6.
pub fn all_labeled_connected_graphs(n: usize) -> Vec<Graph> {
    let pairs: Vec<(u32, u32)> = (0..n as u32)
        .flat_map(|u| ((u + 1)..n as u32).map(move |v| (u, v)))
        .collect();
    assert!(pairs.len() <= 21, "enumeration explodes past n = 7");
    let mut out = Vec::new();
    for mask in 0u64..(1u64 << pairs.len()) {
        let edges: Vec<(u32, u32)> = pairs
            .iter()
            .enumerate()
            .filter(|(i, _)| mask >> i & 1 == 1)
            .map(|(_, &e)| e)
            .collect();
        let g = Graph::from_edges(n, &edges).expect("n >= 1");
        if g.is_connected() {
            out.push(g);
        }
    }
    out
}
