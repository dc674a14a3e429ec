//! Seeded, deterministic k-means (Lloyd's algorithm) over network profile
//! vectors: farthest-point initialization from a seeded random first pick,
//! index-based tie-breaks everywhere, and empty-cluster re-seeding.

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};

const MAX_ITERATIONS: usize = 100;
const SHIFT_TOLERANCE: f64 = 1e-9;

/// Final clustering of m feature vectors into k clusters.
#[derive(Clone, Debug, serde::Serialize)]
pub struct ClusterAssignment {
    pub k: usize,
    pub seed: u64,
    /// Cluster label per input vector, each in [0, k).
    pub labels: Vec<usize>,
    pub centroids: Vec<Vec<f64>>,
    /// Within-cluster sum of squared distances at the returned assignment.
    pub sse: f64,
}

fn squared_distance(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b).map(|(x, y)| (x - y) * (x - y)).sum()
}

/// Cluster `features` into `k` groups. Identical inputs and seed give a
/// bitwise-identical result.
pub fn kmeans(features: &[Vec<f64>], k: usize, seed: u64) -> Result<ClusterAssignment> {
    kmeans_with_trace(features, k, seed).map(|(assignment, _)| assignment)
}

/// [`kmeans`] plus the objective value recorded after every Lloyd iteration
/// (useful for verifying monotone descent).
pub fn kmeans_with_trace(
    features: &[Vec<f64>],
    k: usize,
    seed: u64,
) -> Result<(ClusterAssignment, Vec<f64>)> {
    let m = features.len();
    if k == 0 || k > m {
        return Err(Error::Parameter {
            name: "k",
            message: format!("cluster count must lie in 1..={m}, got {k}"),
        });
    }
    let dim = features[0].len();
    if features.iter().any(|f| f.len() != dim) {
        return Err(Error::Precondition {
            context: "kmeans",
            requirement: "all feature vectors must share one dimension".into(),
        });
    }

    // Farthest-point initialization: seeded random first centroid, then
    // repeatedly the point farthest from its nearest chosen centroid
    // (ties to the lowest index).
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let first = rng.gen_range(0..m);
    let mut centroids: Vec<Vec<f64>> = vec![features[first].clone()];
    while centroids.len() < k {
        let mut best = (0usize, -1.0f64);
        for (i, f) in features.iter().enumerate() {
            let nearest = centroids
                .iter()
                .map(|c| squared_distance(f, c))
                .fold(f64::INFINITY, f64::min);
            if nearest > best.1 {
                best = (i, nearest);
            }
        }
        centroids.push(features[best.0].clone());
    }

    let mut labels = vec![0usize; m];
    let mut trace = Vec::new();
    for _ in 0..MAX_ITERATIONS {
        // Assignment step (nearest centroid, ties to the lowest cluster index).
        for (i, f) in features.iter().enumerate() {
            let mut best = (0usize, f64::INFINITY);
            for (c, centroid) in centroids.iter().enumerate() {
                let d = squared_distance(f, centroid);
                if d < best.1 {
                    best = (c, d);
                }
            }
            labels[i] = best.0;
        }

        // Re-seed empty clusters at the point farthest from its own centroid,
        // drawn from clusters that can spare a member.
        let mut sizes = vec![0usize; k];
        for &l in &labels {
            sizes[l] += 1;
        }
        for c in 0..k {
            if sizes[c] > 0 {
                continue;
            }
            let mut farthest = (usize::MAX, -1.0f64);
            for (i, f) in features.iter().enumerate() {
                if sizes[labels[i]] < 2 {
                    continue;
                }
                let d = squared_distance(f, &centroids[labels[i]]);
                if d > farthest.1 {
                    farthest = (i, d);
                }
            }
            let (i, _) = farthest;
            log::warn!("kmeans: cluster {c} became empty; re-seeding at point {i}");
            sizes[labels[i]] -= 1;
            labels[i] = c;
            sizes[c] = 1;
            centroids[c] = features[i].clone();
        }

        // Update step: centroid = mean of members, in fixed input order.
        let mut shift: f64 = 0.0;
        for c in 0..k {
            let mut mean = vec![0.0f64; dim];
            for (i, f) in features.iter().enumerate() {
                if labels[i] == c {
                    for (slot, v) in mean.iter_mut().zip(f) {
                        *slot += v;
                    }
                }
            }
            for v in &mut mean {
                *v /= sizes[c] as f64;
            }
            shift = shift.max(squared_distance(&centroids[c], &mean).sqrt());
            centroids[c] = mean;
        }

        trace.push(objective(features, &labels, &centroids));
        if shift < SHIFT_TOLERANCE {
            break;
        }
    }

    let sse = objective(features, &labels, &centroids);
    Ok((
        ClusterAssignment {
            k,
            seed,
            labels,
            centroids,
            sse,
        },
        trace,
    ))
}

fn objective(features: &[Vec<f64>], labels: &[usize], centroids: &[Vec<f64>]) -> f64 {
    features
        .iter()
        .zip(labels)
        .map(|(f, &l)| squared_distance(f, &centroids[l]))
        .sum()
}
