//! Centrality measures against independent brute-force oracles: literal
//! path-enumeration betweenness, dense two-hop walk counts, truncated Katz
//! series, tree-resistance current-flow closeness, and stochastic-vector
//! invariants for PageRank.

use hicent::centrality::{self, CentralityKind, CentralityOptions, LocalMode};
use hicent::error::Error;
use hicent::Graph;
use testkit::gen;
use testkit::oracle;

fn path(n: usize) -> Graph {
    let edges: Vec<(u32, u32)> = (1..n as u32).map(|v| (v - 1, v)).collect();
    Graph::from_edges(n, &edges).unwrap()
}

fn complete(n: usize) -> Graph {
    let mut edges = Vec::new();
    for u in 0..n as u32 {
        for v in (u + 1)..n as u32 {
            edges.push((u, v));
        }
    }
    Graph::from_edges(n, &edges).unwrap()
}

#[test]
fn betweenness_matches_paths_on_every_small_connected_graph() {
    // exhaustive over all labeled connected graphs with up to 5 nodes
    for n in 2..=5 {
        for (i, g) in gen::all_labeled_connected_graphs(n).iter().enumerate() {
            if n < 3 {
                continue; // below the measure's minimum size
            }
            let fast = centrality::betweenness_centrality(g).unwrap();
            let brute = oracle::brute_betweenness(g);
            for (v, (f, b)) in fast.values.iter().zip(&brute).enumerate() {
                assert!(
                    (f - b).abs() <= 1e-9,
                    "n={n} graph {i} node {v}: {f} vs {b}"
                );
            }
        }
    }
}

#[test]
fn betweenness_matches_paths_on_sampled_graphs() {
    // sampled connected graphs at 6..=8 nodes, then random graphs up to 12
    let mut graphs = Vec::new();
    for n in 6..=8 {
        for seed in 0..25 {
            graphs.push(gen::random_connected(n, n, (n as u64) * 100 + seed));
        }
    }
    for seed in 0..100 {
        let n = 6 + (seed as usize % 7); // 6..=12
        graphs.push(gen::random_connected(n, n / 2, 7000 + seed));
    }
    for (i, g) in graphs.iter().enumerate() {
        let fast = centrality::betweenness_centrality(g).unwrap();
        let brute = oracle::brute_betweenness(g);
        for (v, (f, b)) in fast.values.iter().zip(&brute).enumerate() {
            assert!(
                (f - b).abs() <= 1e-9,
                "graph {i} node {v}: {f} vs {b}"
            );
        }
    }
}

#[test]
fn betweenness_known_values() {
    let p3 = centrality::betweenness_centrality(&path(3)).unwrap();
    assert_eq!(p3.values, vec![0.0, 1.0, 0.0]);
    // star: the hub lies on every leaf pair
    let star = Graph::from_edges(4, &[(0, 1), (0, 2), (0, 3)]).unwrap();
    let s = centrality::betweenness_centrality(&star).unwrap();
    assert_eq!(s.values, vec![1.0, 0.0, 0.0, 0.0]);
    // complete graph: nobody is interior
    let k5 = centrality::betweenness_centrality(&complete(5)).unwrap();
    assert!(k5.values.iter().all(|&b| b == 0.0));
}

#[test]
fn local_walkcount_matches_dense_oracle() {
    for seed in 0..25 {
        let g = gen::gnp(20, 0.15, 100 + seed);
        if g.node_count() < 2 {
            continue;
        }
        let fast = centrality::local_centrality(&g, LocalMode::WalkCount).unwrap();
        let dense = oracle::dense_two_hop_walks(&g);
        for (v, (f, d)) in fast.values.iter().zip(&dense).enumerate() {
            assert!((f - d).abs() <= 1e-12, "seed {seed} node {v}");
        }
    }
}

#[test]
fn local_distinct_mode_counts_two_hop_neighborhoods() {
    for seed in 0..15 {
        let g = gen::random_connected(15, 10, 200 + seed);
        let n = g.node_count();
        let fast = centrality::local_centrality(&g, LocalMode::DistinctTwoHop).unwrap();
        let dist = oracle::all_pairs_distances(&g);
        for (v, row) in dist.iter().enumerate() {
            let within = row
                .iter()
                .enumerate()
                .filter(|&(j, &d)| j != v && d <= 2)
                .count() as f64;
            let expect = within / (n - 1) as f64;
            assert!(
                (fast.values[v] - expect).abs() <= 1e-12,
                "seed {seed} node {v}"
            );
        }
    }
}

#[test]
fn current_flow_closeness_equals_hop_formula_on_trees() {
    // on a tree, effective resistance equals hop distance, so
    // beta(v) = n / sum_j d(v, j)
    for seed in 0..20 {
        let g = gen::random_tree(12, 300 + seed);
        let n = g.node_count();
        let fast = centrality::current_flow_closeness(&g).unwrap();
        let dist = oracle::all_pairs_distances(&g);
        for (v, row) in dist.iter().enumerate() {
            let total: f64 = row.iter().map(|&d| d as f64).sum();
            let expect = n as f64 / total;
            assert!(
                (fast.values[v] - expect).abs() <= 1e-9,
                "seed {seed} node {v}: {} vs {expect}",
                fast.values[v]
            );
        }
    }
}

#[test]
fn current_flow_closeness_known_values() {
    let k2 = centrality::current_flow_closeness(&complete(2)).unwrap();
    assert!((k2.values[0] - 2.0).abs() <= 1e-12);
    let k3 = centrality::current_flow_closeness(&complete(3)).unwrap();
    for v in 0..3 {
        assert!(
            (k3.values[v] - 2.25).abs() <= 1e-12,
            "triangle node {v}: {}",
            k3.values[v]
        );
    }
}

#[test]
fn katz_matches_truncated_series() {
    for seed in 0..20 {
        let g = gen::random_connected(14, 8, 400 + seed);
        // pick s with s * lambda <= 0.5 so 80 terms leave a < 1e-18 tail
        let lambda = centrality::spectral_radius(&g).unwrap();
        let s = 0.5 / lambda;
        let fast = centrality::katz_centrality(&g, Some(s)).unwrap();
        let series = oracle::truncated_katz(&g, s, 80);
        for (v, (f, t)) in fast.values.iter().zip(&series).enumerate() {
            assert!(
                (f - t).abs() <= 1e-9,
                "seed {seed} node {v}: {f} vs {t}"
            );
        }
    }
}

#[test]
fn katz_rejects_bad_attenuation() {
    let g = complete(3); // lambda = 2
    assert!(matches!(
        centrality::katz_centrality(&g, Some(0.6)),
        Err(Error::Parameter { .. })
    ));
    assert!(matches!(
        centrality::katz_centrality(&g, Some(-0.1)),
        Err(Error::Parameter { .. })
    ));
    assert!(centrality::katz_centrality(&g, Some(0.49)).is_ok());
}

#[test]
fn spectral_radius_known_values() {
    // K_n has lambda = n - 1
    for n in 2..=6 {
        let lambda = centrality::spectral_radius(&complete(n)).unwrap();
        assert!(
            (lambda - (n as f64 - 1.0)).abs() <= 1e-8,
            "K{n}: {lambda}"
        );
    }
    // C4 is bipartite with lambda = 2; the shifted iteration must still converge
    let c4 = Graph::from_edges(4, &[(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap();
    let lambda = centrality::spectral_radius(&c4).unwrap();
    assert!((lambda - 2.0).abs() <= 1e-8, "C4: {lambda}");
    // star K_{1,4}: lambda = sqrt(4) = 2 (also bipartite)
    let star = Graph::from_edges(5, &[(0, 1), (0, 2), (0, 3), (0, 4)]).unwrap();
    let lambda = centrality::spectral_radius(&star).unwrap();
    assert!((lambda - 2.0).abs() <= 1e-8, "star: {lambda}");
}

#[test]
fn pagerank_is_a_probability_vector() {
    for seed in 0..100 {
        let n = 5 + (seed as usize % 20);
        let g = gen::random_connected(n, n / 2, 500 + seed);
        let pr = centrality::pagerank_centrality(&g, 0.85, 1e-10, 1000).unwrap();
        let total: f64 = pr.values.iter().sum();
        assert!(
            (total - 1.0).abs() <= 1e-9,
            "seed {seed}: sums to {total}"
        );
        assert!(pr.values.iter().all(|&x| x > 0.0), "seed {seed}");
    }
}

#[test]
fn pagerank_is_uniform_on_regular_graphs() {
    // cycle C8: 2-regular, so the stationary vector is exactly uniform
    let edges: Vec<(u32, u32)> = (0..8u32).map(|v| (v, (v + 1) % 8)).collect();
    let c8 = Graph::from_edges(8, &edges).unwrap();
    let pr = centrality::pagerank_centrality(&c8, 0.85, 1e-12, 1000).unwrap();
    for v in 0..8 {
        assert!(
            (pr.values[v] - 0.125).abs() <= 1e-10,
            "node {v}: {}",
            pr.values[v]
        );
    }
}

#[test]
fn centralities_are_relabeling_equivariant() {
    let opts = CentralityOptions::default();
    for seed in 0..10 {
        let g = gen::random_connected(13, 9, 600 + seed);
        let perm = gen::random_permutation(g.node_count(), 800 + seed);
        let h = gen::relabel(&g, &perm);
        for kind in CentralityKind::ALL {
            let a = centrality::compute(&g, kind, &opts).unwrap();
            let b = centrality::compute(&h, kind, &opts).unwrap();
            for (v, &p) in perm.iter().enumerate() {
                let pv = p as usize;
                assert!(
                    (a.values[v] - b.values[pv]).abs() <= 1e-9,
                    "seed {seed} {kind:?} node {v}: {} vs {}",
                    a.values[v],
                    b.values[pv]
                );
            }
        }
    }
}

#[test]
fn preconditions_are_enforced() {
    let disconnected = Graph::from_edges(4, &[(0, 1), (2, 3)]).unwrap();
    assert!(matches!(
        centrality::betweenness_centrality(&disconnected),
        Err(Error::Precondition { .. })
    ));
    assert!(matches!(
        centrality::current_flow_closeness(&disconnected),
        Err(Error::Precondition { .. })
    ));
    assert!(matches!(
        centrality::pagerank_centrality(&disconnected, 0.85, 1e-10, 100),
        Err(Error::Precondition { .. })
    ));

    let k2 = complete(2);
    assert!(matches!(
        centrality::betweenness_centrality(&k2),
        Err(Error::Precondition { .. })
    ));

    let single = Graph::from_edges(1, &[]).unwrap();
    assert!(matches!(
        centrality::degree_centrality(&single),
        Err(Error::Precondition { .. })
    ));
    assert!(matches!(
        centrality::current_flow_closeness(&single),
        Err(Error::Precondition { .. })
    ));
    // a single node is a valid (trivially connected) PageRank input
    let pr = centrality::pagerank_centrality(&single, 0.85, 1e-10, 100).unwrap();
    assert_eq!(pr.values, vec![1.0]);
}

#[test]
fn pagerank_rejects_bad_damping() {
    let g = complete(3);
    assert!(matches!(
        centrality::pagerank_centrality(&g, 1.0, 1e-10, 100),
        Err(Error::Parameter { .. })
    ));
    assert!(matches!(
        centrality::pagerank_centrality(&g, -0.1, 1e-10, 100),
        Err(Error::Parameter { .. })
    ));
}
