//! Slow, direct oracle implementations used to cross-check the optimized
//! algorithms: different algorithmic routes on purpose.

use hicent::Graph;

/// Unreachable marker for [`all_pairs_distances`].
pub const INF: u32 = u32::MAX;

/// All-pairs shortest hop counts by Floyd–Warshall (no BFS involved).
pub fn all_pairs_distances(g: &Graph) -> Vec<Vec<u32>> {
    let n = g.node_count();
    let mut dist = vec![vec![INF; n]; n];
    for (v, row) in dist.iter_mut().enumerate() {
        row[v] = 0;
    }
    for &(u, v) in g.edges() {
        dist[u as usize][v as usize] = 1;
        dist[v as usize][u as usize] = 1;
    }
    for k in 0..n {
        for i in 0..n {
            if dist[i][k] == INF {
                continue;
            }
            for j in 0..n {
                if dist[k][j] == INF {
                    continue;
                }
                let through = dist[i][k] + dist[k][j];
                if through < dist[i][j] {
                    dist[i][j] = through;
                }
            }
        }
    }
    dist
}

/// Every shortest path from s to t, as explicit node sequences.
fn enumerate_shortest_paths(g: &Graph, dist_from_s: &[u32], s: u32, t: u32) -> Vec<Vec<u32>> {
    if dist_from_s[t as usize] == INF {
        return Vec::new();
    }
    if s == t {
        return vec![vec![s]];
    }
    let mut paths = Vec::new();
    // Step backward from t along any neighbor one hop closer to s.
    for &w in g.neighbors(t) {
        if dist_from_s[w as usize] + 1 == dist_from_s[t as usize] {
            for mut prefix in enumerate_shortest_paths(g, dist_from_s, s, w) {
                prefix.push(t);
                paths.push(prefix);
            }
        }
    }
    paths
}

/// Betweenness by literal shortest-path enumeration: for every unordered
/// pair, list all shortest paths and credit interior nodes fractionally.
/// Normalized by 2/((N−1)(N−2)). Exponential in the worst case — small
/// graphs only.
pub fn brute_betweenness(g: &Graph) -> Vec<f64> {
    let n = g.node_count();
    assert!(n >= 3, "normalization needs n >= 3");
    let dist = all_pairs_distances(g);
    let mut acc = vec![0.0f64; n];
    for s in 0..n as u32 {
        for t in (s + 1)..n as u32 {
            let paths = enumerate_shortest_paths(g, &dist[s as usize], s, t);
            if paths.is_empty() {
                continue;
            }
            let total = paths.len() as f64;
            for path in &paths {
                for &v in &path[1..path.len() - 1] {
                    acc[v as usize] += 1.0 / total;
                }
            }
        }
    }
    let norm = 2.0 / (((n - 1) * (n - 2)) as f64);
    acc.into_iter().map(|x| x * norm).collect()
}

/// Row sums of A² divided by N−1, via an explicit O(n³) matrix square.
pub fn dense_two_hop_walks(g: &Graph) -> Vec<f64> {
    let n = g.node_count();
    let mut a = vec![vec![0.0f64; n]; n];
    for &(u, v) in g.edges() {
        a[u as usize][v as usize] = 1.0;
        a[v as usize][u as usize] = 1.0;
    }
    let mut row_sums = vec![0.0f64; n];
    for i in 0..n {
        for j in 0..n {
            let mut cell = 0.0;
            for (k, row) in a.iter().enumerate() {
                cell += a[i][k] * row[j];
            }
            row_sums[i] += cell;
        }
    }
    let norm = (n - 1) as f64;
    row_sums.into_iter().map(|x| x / norm).collect()
}

/// Truncated Katz series Σ_{p=1..terms} s^p (A^p · 1) by repeated
/// matrix-vector products.
pub fn truncated_katz(g: &Graph, s: f64, terms: usize) -> Vec<f64> {
    let n = g.node_count();
    let mut term = vec![1.0f64; n];
    let mut sum = vec![0.0f64; n];
    for _ in 0..terms {
        let mut next = vec![0.0f64; n];
        for (v, slot) in next.iter_mut().enumerate() {
            for &w in g.neighbors(v as u32) {
                *slot += term[w as usize];
            }
            *slot *= s;
        }
        for (acc, t) in sum.iter_mut().zip(&next) {
            *acc += t;
        }
        term = next;
    }
    sum
}

/// Kendall tau-b by exhaustive O(n²) pair classification. `None` when all
/// pairs are tied on either variable.
pub fn tau_b_quadratic(x: &[f64], y: &[f64]) -> Option<f64> {
    assert_eq!(x.len(), y.len());
    let n = x.len();
    let (mut con, mut dis, mut tie_x_only, mut tie_y_only) = (0u64, 0u64, 0u64, 0u64);
    for i in 0..n {
        for j in (i + 1)..n {
            let same_x = x[i] == x[j];
            let same_y = y[i] == y[j];
            if same_x && same_y {
                // Pairs tied on both variables drop out of every count.
            } else if same_x {
                tie_x_only += 1;
            } else if same_y {
                tie_y_only += 1;
            } else if (x[i] < x[j]) == (y[i] < y[j]) {
                con += 1;
            } else {
                dis += 1;
            }
        }
    }
    let fx = con + dis + tie_y_only;
    let fy = con + dis + tie_x_only;
    if fx == 0 || fy == 0 {
        return None;
    }
    Some((con as f64 - dis as f64) / ((fx as f64).sqrt() * (fy as f64).sqrt()))
}

/// Core numbers by definition: for each k, strip nodes of degree < k until
/// stable; a node's core number is the largest k it survives.
pub fn brute_core_numbers(g: &Graph) -> Vec<u32> {
    let n = g.node_count();
    let max_deg = (0..n as u32).map(|v| g.degree(v)).max().unwrap_or(0) as u32;
    let mut core = vec![0u32; n];
    for k in 0..=max_deg {
        let mut alive = vec![true; n];
        loop {
            let mut removed = false;
            for v in 0..n as u32 {
                if !alive[v as usize] {
                    continue;
                }
                let deg = g
                    .neighbors(v)
                    .iter()
                    .filter(|&&w| alive[w as usize])
                    .count() as u32;
                if deg < k {
                    alive[v as usize] = false;
                    removed = true;
                }
            }
            if !removed {
                break;
            }
        }
        for v in 0..n {
            if alive[v] {
                core[v] = k;
            }
        }
    }
    core
}

/// The k-truss edge set by definition: repeatedly delete edges closing fewer
/// than k−2 triangles in the surviving subgraph, recomputing supports from
/// scratch each round.
pub fn brute_truss_edges(g: &Graph, k: u32) -> Vec<(u32, u32)> {
    let n = g.node_count() as u32;
    let mut edges: Vec<(u32, u32)> = g.edges().to_vec();
    loop {
        let has = |a: u32, b: u32| edges.binary_search(&(a.min(b), a.max(b))).is_ok();
        let support = |u: u32, v: u32| -> u32 {
            (0..n)
                .filter(|&w| w != u && w != v && has(u, w) && has(v, w))
                .count() as u32
        };
        let kept: Vec<(u32, u32)> = edges
            .iter()
            .filter(|&&(u, v)| support(u, v) + 2 >= k)
            .copied()
            .collect();
        if kept.len() == edges.len() {
            return edges;
        }
        edges = kept;
    }
}

/// Condorcet winner over rank ballots (rank 1 = best, ties share a rank):
/// the candidate beating every other in strict pairwise majority, if any.
pub fn condorcet_winner(ballots: &[Vec<u32>]) -> Option<usize> {
    let n = ballots.first()?.len();
    'candidate: for i in 0..n {
        for j in 0..n {
            if i == j {
                continue;
            }
            let prefer_i = ballots.iter().filter(|b| b[i] < b[j]).count();
            let prefer_j = ballots.iter().filter(|b| b[j] < b[i]).count();
            if prefer_i <= prefer_j {
                continue 'candidate;
            }
        }
        return Some(i);
    }
    None
}

/// Pairwise strict-preference counts from rank ballots.
pub fn pairwise_counts(ballots: &[Vec<u32>], candidates: usize) -> Vec<Vec<u64>> {
    let mut counts = vec![vec![0u64; candidates]; candidates];
    for ballot in ballots {
        for i in 0..candidates {
            for j in 0..candidates {
                if ballot[i] < ballot[j] {
                    counts[i][j] += 1;
                }
            }
        }
    }
    counts
}
