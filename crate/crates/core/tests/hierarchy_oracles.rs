//! Hierarchy measures against from-scratch oracles and structural invariants:
//! peeling equivalence, subgraph nesting, minimum-support guarantees, and
//! relabeling equivariance, across randomized graph families.

use hicent::error::Error;
use hicent::hierarchy::{self, HierarchyKind};
use hicent::Graph;
use std::collections::HashSet;
use testkit::gen;
use testkit::oracle;

/// 100 mixed random graphs: sparse/dense gnp plus tree-based connected graphs.
fn corpus() -> Vec<Graph> {
    let mut graphs = Vec::new();
    for seed in 0..40 {
        graphs.push(gen::gnp(20, 0.10, seed));
        graphs.push(gen::gnp(14, 0.30, 1000 + seed));
    }
    for seed in 0..20 {
        graphs.push(gen::random_connected(16, 10, 2000 + seed));
    }
    assert_eq!(graphs.len(), 100);
    graphs
}

#[test]
fn core_numbers_match_brute_force_on_corpus() {
    for (i, g) in corpus().iter().enumerate() {
        assert_eq!(
            hierarchy::core_numbers(g),
            oracle::brute_core_numbers(g),
            "graph {i}"
        );
    }
}

#[test]
fn cores_are_nested_and_meet_minimum_degree() {
    for (i, g) in corpus().iter().enumerate() {
        let core = hierarchy::core_numbers(g);
        let k_max = core.iter().copied().max().unwrap_or(0);
        for k in 1..=k_max {
            let members: HashSet<u32> = (0..g.node_count() as u32)
                .filter(|&v| core[v as usize] >= k)
                .collect();
            // support: every member keeps >= k neighbors inside the k-core
            for &v in &members {
                let inside = g
                    .neighbors(v)
                    .iter()
                    .filter(|u| members.contains(u))
                    .count();
                assert!(
                    inside >= k as usize,
                    "graph {i}: node {v} has {inside} < {k} neighbors in the {k}-core"
                );
            }
            // nesting: the (k+1)-core is a subset of the k-core
            let next: HashSet<u32> = (0..g.node_count() as u32)
                .filter(|&v| core[v as usize] > k)
                .collect();
            assert!(next.is_subset(&members), "graph {i}: core nesting broken at k={k}");
        }
    }
}

#[test]
fn trussness_matches_brute_force_on_corpus() {
    for (i, g) in corpus().iter().enumerate() {
        if g.edge_count() == 0 {
            continue;
        }
        let map = hierarchy::edge_trussness(g);
        let k_max = map.max_trussness();
        for k in 2..=k_max {
            let mine: HashSet<(u32, u32)> = g
                .edges()
                .iter()
                .enumerate()
                .filter(|(e, _)| map.trussness[*e] >= k)
                .map(|(_, &uv)| uv)
                .collect();
            let brute: HashSet<(u32, u32)> =
                oracle::brute_truss_edges(g, k).into_iter().collect();
            assert_eq!(mine, brute, "graph {i}: {k}-truss edge set differs");
        }
    }
}

#[test]
fn truss_edges_meet_minimum_support_inside_their_truss() {
    for (i, g) in corpus().iter().enumerate() {
        if g.edge_count() == 0 {
            continue;
        }
        let map = hierarchy::edge_trussness(g);
        let k_max = map.max_trussness();
        for k in 2..=k_max {
            let kept: HashSet<(u32, u32)> = g
                .edges()
                .iter()
                .enumerate()
                .filter(|(e, _)| map.trussness[*e] >= k)
                .map(|(_, &uv)| uv)
                .collect();
            let has = |a: u32, b: u32| kept.contains(&(a.min(b), a.max(b)));
            for &(u, v) in &kept {
                let support = (0..g.node_count() as u32)
                    .filter(|&w| w != u && w != v && has(u, w) && has(v, w))
                    .count() as u32;
                assert!(
                    support >= k - 2,
                    "graph {i}: edge ({u},{v}) has support {support} < {} in its {k}-truss",
                    k - 2
                );
            }
        }
    }
}

#[test]
fn truss_k_min_equals_min_trussness_and_node_scores_are_max_incident() {
    for (i, g) in corpus().iter().enumerate() {
        if g.edge_count() == 0 {
            continue;
        }
        let (map, scores) = hierarchy::truss_decompose(g);
        let min_t = *map.trussness.iter().min().unwrap();
        let max_t = *map.trussness.iter().max().unwrap();
        assert_eq!(map.k_min, min_t, "graph {i}");
        assert_eq!(map.k_max, max_t, "graph {i}");
        for v in 0..g.node_count() as u32 {
            if g.degree(v) == 0 {
                assert_eq!(scores.raw[v as usize], 0.0, "graph {i}: isolated node {v}");
                continue;
            }
            let expect = g
                .edges()
                .iter()
                .enumerate()
                .filter(|(_, &(a, b))| a == v || b == v)
                .map(|(e, _)| map.trussness[e] - map.k_min)
                .max()
                .unwrap() as f64;
            assert_eq!(scores.raw[v as usize], expect, "graph {i}: node {v}");
        }
    }
}

#[test]
fn triangle_free_graph_has_uniform_trussness_two() {
    let g = gen::random_tree(12, 7);
    let map = hierarchy::edge_trussness(&g);
    assert!(map.trussness.iter().all(|&t| t == 2));
    assert_eq!(map.k_min, 2);
    assert_eq!(map.k_max, 2);
}

#[test]
fn local_reaching_matches_distance_oracle() {
    for seed in 0..20 {
        let g = gen::gnp(22, 0.12, 500 + seed);
        let n = g.node_count();
        let dist = oracle::all_pairs_distances(&g);
        let scores = hierarchy::local_reaching_centrality(&g).unwrap();
        for (v, row) in dist.iter().enumerate() {
            let mut sum = 0.0;
            for (j, &d) in row.iter().enumerate() {
                if j != v && d != oracle::INF {
                    sum += 1.0 / d as f64;
                }
            }
            let expect = sum / (n - 1) as f64;
            assert!(
                (scores.raw[v] - expect).abs() <= 1e-12,
                "seed {seed} node {v}: {} vs {expect}",
                scores.raw[v]
            );
        }
    }
}

#[test]
fn local_reaching_requires_two_nodes() {
    let g = Graph::from_edges(1, &[]).unwrap();
    assert!(matches!(
        hierarchy::local_reaching_centrality(&g),
        Err(Error::Precondition { .. })
    ));
}

#[test]
fn triangle_participation_totals_three_per_triangle() {
    for seed in 0..20 {
        let g = gen::gnp(16, 0.25, 300 + seed);
        let scores = hierarchy::triangle_participation(&g);
        let total: f64 = scores.raw.iter().sum();
        let mut triangles = 0u64;
        let n = g.node_count() as u32;
        for u in 0..n {
            for v in (u + 1)..n {
                for w in (v + 1)..n {
                    if g.has_edge(u, v) && g.has_edge(u, w) && g.has_edge(v, w) {
                        triangles += 1;
                    }
                }
            }
        }
        assert_eq!(total as u64, 3 * triangles, "seed {seed}");
    }
}

/// Relabeling the nodes permutes every hierarchy score identically.
#[test]
fn hierarchy_is_relabeling_equivariant() {
    for seed in 0..12 {
        let g = gen::random_connected(14, 8, 4000 + seed);
        let perm = gen::random_permutation(g.node_count(), 9000 + seed);
        let h = gen::relabel(&g, &perm);
        for kind in HierarchyKind::ALL {
            let a = hierarchy::compute(&g, kind).unwrap();
            let b = hierarchy::compute(&h, kind).unwrap();
            for (v, &p) in perm.iter().enumerate() {
                let pv = p as usize;
                assert!(
                    (a.raw[v] - b.raw[pv]).abs() <= 1e-12,
                    "seed {seed} {kind:?} node {v}"
                );
                assert!(
                    (a.level[v] - b.level[pv]).abs() <= 1e-12,
                    "seed {seed} {kind:?} level node {v}"
                );
            }
        }
    }
}

/// Levels always start at 1 for the top tier and k_min/k_max bound the raw range.
#[test]
fn level_conventions_hold_on_corpus() {
    for (i, g) in corpus().iter().enumerate() {
        let core = hierarchy::core_decompose(g);
        let top = core.raw.iter().cloned().fold(f64::MIN, f64::max);
        let best_level = core
            .raw
            .iter()
            .zip(&core.level)
            .find(|(r, _)| **r == top)
            .map(|(_, l)| *l)
            .unwrap();
        assert_eq!(best_level, 1.0, "graph {i}: top core tier must be level 1");

        let tp = hierarchy::triangle_participation(g);
        let top = tp.raw.iter().cloned().fold(f64::MIN, f64::max);
        let best_level = tp
            .raw
            .iter()
            .zip(&tp.level)
            .find(|(r, _)| **r == top)
            .map(|(_, l)| *l)
            .unwrap();
        assert_eq!(best_level, 1.0, "graph {i}: top tp tier must be level 1");
    }
}
