//! Schulze voting over candidate score ballots: pairwise preference counts,
//! widest-path (strongest-path) propagation, and win-count ranking.

use crate::error::{Error, Result};

/// How a ballot orders candidates from its scores.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, serde::Serialize)]
#[serde(rename_all = "snake_case")]
pub enum BallotOrder {
    /// Higher signed score ranks higher (the default).
    #[default]
    SignedDescending,
    /// Higher absolute score ranks higher.
    AbsoluteDescending,
}

/// One voter's derived ranking: competition ranks (1 = best, ties share a
/// rank, missing scores rank last).
#[derive(Clone, Debug, serde::Serialize)]
pub struct Ballot {
    pub voter: String,
    pub ranks: Vec<u32>,
}

/// One candidate's final standing.
#[derive(Clone, Debug, serde::Serialize)]
pub struct RankedCandidate {
    pub index: usize,
    pub id: String,
    pub wins: u32,
}

/// Complete tally: inputs, pairwise counts Ω, path strengths Υ, and ranking.
#[derive(Clone, Debug, serde::Serialize)]
pub struct SchulzeTally {
    pub candidates: Vec<String>,
    pub ballots: Vec<Ballot>,
    /// Ω[i][j]: number of ballots strictly preferring i over j.
    pub pairwise: Vec<Vec<u64>>,
    /// Υ[i][j]: strength of the strongest path from i to j.
    pub strength: Vec<Vec<u64>>,
    /// Candidates by descending win count, residual ties by candidate index.
    pub ranking: Vec<RankedCandidate>,
}

/// Rank candidates by Schulze's method. Each ballot is a (voter, scores)
/// pair giving one optional score per candidate; `None` ranks below every
/// defined score, and tied candidates contribute no pairwise preference.
pub fn schulze_rank(
    candidates: &[String],
    ballots: &[(String, Vec<Option<f64>>)],
    order: BallotOrder,
) -> Result<SchulzeTally> {
    let n = candidates.len();
    if n == 0 {
        return Err(Error::Precondition {
            context: "schulze_rank",
            requirement: "at least one candidate required".into(),
        });
    }
    if ballots.is_empty() {
        return Err(Error::Precondition {
            context: "schulze_rank",
            requirement: "at least one ballot required".into(),
        });
    }
    for (voter, scores) in ballots {
        if scores.len() != n {
            return Err(Error::Precondition {
                context: "schulze_rank",
                requirement: format!(
                    "ballot {voter} scores {} candidates, expected {n}",
                    scores.len()
                ),
            });
        }
        if scores.iter().flatten().any(|v| v.is_nan()) {
            return Err(Error::Numerical(format!("ballot {voter} contains NaN")));
        }
    }

    let key = |v: Option<f64>| -> Option<f64> {
        match order {
            BallotOrder::SignedDescending => v,
            BallotOrder::AbsoluteDescending => v.map(f64::abs),
        }
    };
    // Strict "ranks higher than": any defined score beats a missing one.
    let beats = |a: Option<f64>, b: Option<f64>| -> bool {
        match (key(a), key(b)) {
            (Some(x), Some(y)) => x > y,
            (Some(_), None) => true,
            _ => false,
        }
    };

    let mut pairwise = vec![vec![0u64; n]; n];
    let mut ranked_ballots = Vec::with_capacity(ballots.len());
    for (voter, scores) in ballots {
        let ranks: Vec<u32> = (0..n)
            .map(|i| 1 + (0..n).filter(|&j| beats(scores[j], scores[i])).count() as u32)
            .collect();
        for i in 0..n {
            for j in 0..n {
                if ranks[i] < ranks[j] {
                    pairwise[i][j] += 1;
                }
            }
        }
        ranked_ballots.push(Ballot {
            voter: voter.clone(),
            ranks,
        });
    }

    // Strongest-path strengths: start from winning pairwise counts, then relax
    // through every intermediate candidate (widest-path Floyd–Warshall).
    let mut strength = vec![vec![0u64; n]; n];
    for i in 0..n {
        for j in 0..n {
            if i != j && pairwise[i][j] > pairwise[j][i] {
                strength[i][j] = pairwise[i][j];
            }
        }
    }
    for i in 0..n {
        for j in 0..n {
            if j == i {
                continue;
            }
            for k in 0..n {
                if k == i || k == j {
                    continue;
                }
                strength[j][k] = strength[j][k].max(strength[j][i].min(strength[i][k]));
            }
        }
    }

    let wins: Vec<u32> = (0..n)
        .map(|i| {
            (0..n)
                .filter(|&j| j != i && strength[i][j] > strength[j][i])
                .count() as u32
        })
        .collect();
    let mut ranking: Vec<usize> = (0..n).collect();
    ranking.sort_by(|&a, &b| wins[b].cmp(&wins[a]).then(a.cmp(&b)));
    let ranking = ranking
        .into_iter()
        .map(|index| RankedCandidate {
            index,
            id: candidates[index].clone(),
            wins: wins[index],
        })
        .collect();

    Ok(SchulzeTally {
        candidates: candidates.to_vec(),
        ballots: ranked_ballots,
        pairwise,
        strength,
        ranking,
    })
}
