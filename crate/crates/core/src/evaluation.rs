//! Pairwise comparison of two per-node score vectors: Pearson, Spearman,
//! Kendall tau-b, Jaccard over top-k sets, and rank-biased overlap (RBO),
//! with a deterministic tie policy throughout.

use crate::error::{Error, Result};

/// The five comparison measures.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, serde::Serialize)]
#[serde(rename_all = "snake_case")]
pub enum EvalMeasure {
    Pearson,
    Spearman,
    KendallB,
    Jaccard,
    Rbo,
}

impl EvalMeasure {
    pub fn as_str(self) -> &'static str {
        match self {
            EvalMeasure::Pearson => "pearson",
            EvalMeasure::Spearman => "spearman",
            EvalMeasure::KendallB => "kendall",
            EvalMeasure::Jaccard => "jaccard",
            EvalMeasure::Rbo => "rbo",
        }
    }

    /// Correlation measures yield signed values in [−1,1]; similarity
    /// measures yield values in [0,1].
    pub fn is_correlation(self) -> bool {
        matches!(
            self,
            EvalMeasure::Pearson | EvalMeasure::Spearman | EvalMeasure::KendallB
        )
    }
}

/// How the top-k cutoff is chosen.
#[derive(Clone, Copy, Debug, PartialEq, Eq, serde::Serialize)]
#[serde(rename_all = "snake_case")]
pub enum TopkRule {
    /// A fixed k.
    Explicit(usize),
    /// 10 for networks under 150 nodes, otherwise 10% of N rounded up.
    Adaptive,
}

/// Which prefix depth RBO evaluates to.
#[derive(Clone, Copy, Debug, PartialEq, Eq, serde::Serialize)]
#[serde(rename_all = "snake_case")]
pub enum RboScope {
    /// Depth from the top-k rule.
    TopK,
    /// Depth = the full list length.
    EntireSet,
}

/// How tied scores are handled when building ranked prefixes.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, serde::Serialize)]
#[serde(rename_all = "snake_case")]
pub enum TiePolicy {
    /// Break ties by ascending node index; prefixes take exactly d items.
    #[default]
    Deterministic,
    /// Equal-score items share a rank: a whole tie group enters the prefix at
    /// the group's first position, and agreement at depth d is
    /// 2|A∩B| / (|A|+|B|) (which reduces to |A∩B|/d without ties).
    TieAware,
}

/// Parameters for one comparison instance.
#[derive(Clone, Debug)]
pub struct EvalParams {
    pub measure: EvalMeasure,
    /// RBO persistence parameter, in (0,1).
    pub rbo_p: f64,
    pub rbo_scope: RboScope,
    pub topk: TopkRule,
    pub tie_policy: TiePolicy,
}

impl Default for EvalParams {
    fn default() -> Self {
        EvalParams {
            measure: EvalMeasure::Pearson,
            rbo_p: 0.9,
            rbo_scope: RboScope::TopK,
            topk: TopkRule::Adaptive,
            tie_policy: TiePolicy::Deterministic,
        }
    }
}

impl EvalParams {
    pub fn new(measure: EvalMeasure) -> Self {
        EvalParams {
            measure,
            ..EvalParams::default()
        }
    }

    pub fn rbo(p: f64) -> Self {
        EvalParams {
            measure: EvalMeasure::Rbo,
            rbo_p: p,
            ..EvalParams::default()
        }
    }

    /// Short instance identifier used in file names and logs: the measure
    /// name, plus the p value (dot stripped) for RBO — e.g. "rbo_p05".
    pub fn id(&self) -> String {
        match self.measure {
            EvalMeasure::Rbo => format!("rbo_p{}", self.rbo_p.to_string().replace('.', "")),
            m => m.as_str().to_string(),
        }
    }
}

/// Resolve a top-k rule against a list length. The result may exceed `n`
/// (e.g. the adaptive rule on very small lists); consumers reject that case.
pub fn resolve_topk(rule: TopkRule, n: usize) -> Result<usize> {
    let k = match rule {
        TopkRule::Explicit(k) => k,
        TopkRule::Adaptive => {
            if n < 150 {
                10
            } else {
                n.div_ceil(10)
            }
        }
    };
    if k == 0 {
        return Err(Error::Parameter {
            name: "topk",
            message: "top-k cutoff must be at least 1".into(),
        });
    }
    Ok(k)
}

/// A score vector ranked descending, ties broken by ascending node index.
#[derive(Clone, Debug)]
pub struct RankedList {
    /// Node indices ordered by (score descending, index ascending).
    pub order: Vec<u32>,
    /// Start offset (into `order`) of each maximal equal-score run; the first
    /// entry is always 0.
    pub tie_starts: Vec<usize>,
    /// The source scores, indexed by node.
    pub scores: Vec<f64>,
}

impl RankedList {
    pub fn from_scores(scores: &[f64]) -> Result<RankedList> {
        if scores.iter().any(|v| v.is_nan()) {
            return Err(Error::Numerical("score vector contains NaN".into()));
        }
        let mut order: Vec<u32> = (0..scores.len() as u32).collect();
        order.sort_by(|&a, &b| {
            scores[b as usize]
                .partial_cmp(&scores[a as usize])
                .expect("NaN rejected above")
                .then(a.cmp(&b))
        });
        let mut tie_starts = Vec::new();
        for (pos, &v) in order.iter().enumerate() {
            if pos == 0 || scores[v as usize] != scores[order[pos - 1] as usize] {
                tie_starts.push(pos);
            }
        }
        Ok(RankedList {
            order,
            tie_starts,
            scores: scores.to_vec(),
        })
    }

    /// For each position in `order`, the start offset of its tie group.
    fn group_start_at(&self) -> Vec<usize> {
        let mut starts = vec![0usize; self.order.len()];
        for window in self.tie_starts.windows(2) {
            starts[window[0]..window[1]].fill(window[0]);
        }
        if let Some(&last) = self.tie_starts.last() {
            starts[last..].fill(last);
        }
        starts
    }
}

fn check_same_length(x: &[f64], y: &[f64], context: &'static str) -> Result<()> {
    if x.len() != y.len() {
        return Err(Error::Precondition {
            context,
            requirement: format!("equal-length vectors required, got {} and {}", x.len(), y.len()),
        });
    }
    Ok(())
}

/// Pearson correlation coefficient. Errors when either input is constant
/// (the value is undefined, never silently 0).
pub fn pearson(x: &[f64], y: &[f64]) -> Result<f64> {
    check_same_length(x, y, "pearson")?;
    if x.len() < 2 {
        return Err(Error::Precondition {
            context: "pearson",
            requirement: format!("at least 2 observations required, got {}", x.len()),
        });
    }
    let n = x.len() as f64;
    let mx = x.iter().sum::<f64>() / n;
    let my = y.iter().sum::<f64>() / n;
    let (mut sxx, mut syy, mut sxy) = (0.0, 0.0, 0.0);
    for (&a, &b) in x.iter().zip(y) {
        let (dx, dy) = (a - mx, b - my);
        sxx += dx * dx;
        syy += dy * dy;
        sxy += dx * dy;
    }
    if sxx == 0.0 || syy == 0.0 {
        return Err(Error::UndefinedCorrelation(
            "pearson: an input vector is constant".into(),
        ));
    }
    Ok((sxy / (sxx.sqrt() * syy.sqrt())).clamp(-1.0, 1.0))
}

/// Midranks (1-based; ties get the average of their rank range).
fn midranks(x: &[f64]) -> Result<Vec<f64>> {
    if x.iter().any(|v| v.is_nan()) {
        return Err(Error::Numerical("score vector contains NaN".into()));
    }
    let n = x.len();
    let mut idx: Vec<usize> = (0..n).collect();
    idx.sort_by(|&a, &b| x[a].partial_cmp(&x[b]).expect("NaN rejected above"));
    let mut ranks = vec![0.0; n];
    let mut i = 0;
    while i < n {
        let mut j = i;
        while j + 1 < n && x[idx[j + 1]] == x[idx[i]] {
            j += 1;
        }
        let mid = (i + 1 + j + 1) as f64 / 2.0;
        for &node in &idx[i..=j] {
            ranks[node] = mid;
        }
        i = j + 1;
    }
    Ok(ranks)
}

/// Spearman rank correlation: Pearson of midranks.
pub fn spearman(x: &[f64], y: &[f64]) -> Result<f64> {
    check_same_length(x, y, "spearman")?;
    pearson(&midranks(x)?, &midranks(y)?).map_err(|e| match e {
        Error::UndefinedCorrelation(_) => {
            Error::UndefinedCorrelation("spearman: an input vector is constant".into())
        }
        other => other,
    })
}

/// Count pairs i<j with a[i] > a[j] (strict), sorting `a` ascending in place.
fn sort_counting_strict_inversions(a: &mut [f64], buf: &mut [f64]) -> u64 {
    let n = a.len();
    if n < 2 {
        return 0;
    }
    let mid = n / 2;
    let mut inversions = {
        let (left, right) = a.split_at_mut(mid);
        let (buf_left, buf_right) = buf.split_at_mut(mid);
        sort_counting_strict_inversions(left, buf_left)
            + sort_counting_strict_inversions(right, buf_right)
    };
    let (mut i, mut j, mut k) = (0, mid, 0);
    while i < mid && j < n {
        if a[i] <= a[j] {
            buf[k] = a[i];
            i += 1;
        } else {
            inversions += (mid - i) as u64;
            buf[k] = a[j];
            j += 1;
        }
        k += 1;
    }
    while i < mid {
        buf[k] = a[i];
        i += 1;
        k += 1;
    }
    while j < n {
        buf[k] = a[j];
        j += 1;
        k += 1;
    }
    a.copy_from_slice(&buf[..n]);
    inversions
}

fn tied_pairs<F: Fn(usize, usize) -> bool>(n: usize, order: &[usize], same: F) -> u64 {
    let mut total = 0u64;
    let mut i = 0;
    while i < n {
        let mut j = i;
        while j + 1 < n && same(order[j + 1], order[i]) {
            j += 1;
        }
        let run = (j - i + 1) as u64;
        total += run * (run - 1) / 2;
        i = j + 1;
    }
    total
}

/// Kendall tau-b: (n_c − n_d) / √((n_0 − T_x)(n_0 − T_y)) with tie
/// corrections, computed in O(n log n) by sorting + inversion counting.
/// Errors when all pairs are tied on either variable.
pub fn kendall_tau_b(x: &[f64], y: &[f64]) -> Result<f64> {
    check_same_length(x, y, "kendall_tau_b")?;
    let n = x.len();
    if n < 2 {
        return Err(Error::Precondition {
            context: "kendall_tau_b",
            requirement: format!("at least 2 observations required, got {n}"),
        });
    }
    if x.iter().chain(y).any(|v| v.is_nan()) {
        return Err(Error::Numerical("score vector contains NaN".into()));
    }
    let mut idx: Vec<usize> = (0..n).collect();
    idx.sort_by(|&a, &b| {
        x[a].partial_cmp(&x[b])
            .expect("NaN rejected above")
            .then(y[a].partial_cmp(&y[b]).expect("NaN rejected above"))
    });

    let n0 = (n as u64) * (n as u64 - 1) / 2;
    let tie_x = tied_pairs(n, &idx, |a, b| x[a] == x[b]);
    let tie_xy = tied_pairs(n, &idx, |a, b| x[a] == x[b] && y[a] == y[b]);

    // y in x-sorted order; within equal-x runs y is ascending, so the strict
    // inversion count is exactly the number of discordant pairs.
    let mut ys: Vec<f64> = idx.iter().map(|&i| y[i]).collect();
    let mut buf = vec![0.0; n];
    let discordant = sort_counting_strict_inversions(&mut ys, &mut buf);
    // ys is now globally sorted.
    let sorted_order: Vec<usize> = (0..n).collect();
    let tie_y = tied_pairs(n, &sorted_order, |a, b| ys[a] == ys[b]);

    if n0 == tie_x || n0 == tie_y {
        return Err(Error::UndefinedCorrelation(
            "kendall_tau_b: all pairs are tied on one variable".into(),
        ));
    }
    let con_minus_dis =
        n0 as i64 - tie_x as i64 - tie_y as i64 + tie_xy as i64 - 2 * discordant as i64;
    let denom = ((n0 - tie_x) as f64).sqrt() * ((n0 - tie_y) as f64).sqrt();
    Ok((con_minus_dis as f64 / denom).clamp(-1.0, 1.0))
}

/// Jaccard similarity of the two top-k node sets (deterministic tie-break,
/// exactly k items each).
pub fn jaccard_topk(x: &[f64], y: &[f64], k: usize) -> Result<f64> {
    check_same_length(x, y, "jaccard_topk")?;
    let n = x.len();
    if k == 0 || k > n {
        return Err(Error::Parameter {
            name: "topk",
            message: format!("k must lie in 1..={n}, got {k}"),
        });
    }
    let rx = RankedList::from_scores(x)?;
    let ry = RankedList::from_scores(y)?;
    let mut in_x = vec![false; n];
    for &v in &rx.order[..k] {
        in_x[v as usize] = true;
    }
    let intersection = ry.order[..k].iter().filter(|&&v| in_x[v as usize]).count();
    Ok(intersection as f64 / (2 * k - intersection) as f64)
}

/// Both RBO readings at the evaluation depth.
#[derive(Clone, Copy, Debug, serde::Serialize)]
pub struct RboValue {
    /// Truncated sum (1−p) Σ_{d=1..k} p^{d−1} A_d.
    pub base: f64,
    /// base + A_k·p^k, assuming the depth-k agreement persists; this is the
    /// reported RBO value.
    pub extrapolated: f64,
}

/// Rank-biased overlap of the two rankings at prefix depth `depth`.
pub fn rbo(x: &[f64], y: &[f64], p: f64, depth: usize, ties: TiePolicy) -> Result<RboValue> {
    check_same_length(x, y, "rbo")?;
    if !(p > 0.0 && p < 1.0) {
        return Err(Error::Parameter {
            name: "rbo_p",
            message: format!("persistence must lie strictly in (0,1), got {p}"),
        });
    }
    let n = x.len();
    if depth == 0 || depth > n {
        return Err(Error::Parameter {
            name: "rbo_depth",
            message: format!("depth must lie in 1..={n}, got {depth}"),
        });
    }
    let rx = RankedList::from_scores(x)?;
    let ry = RankedList::from_scores(y)?;

    // Membership state: 0 = neither, 1 = x only, 2 = y only, 3 = both.
    let mut membership = vec![0u8; n];
    let mut in_x = 0usize;
    let mut in_y = 0usize;
    let mut both = 0usize;
    let mut add = |v: u32, bit: u8, in_count: &mut usize, both: &mut usize| {
        let m = &mut membership[v as usize];
        if *m & bit == 0 {
            *m |= bit;
            *in_count += 1;
            if *m == 3 {
                *both += 1;
            }
        }
    };

    let (gx, gy) = match ties {
        TiePolicy::Deterministic => (Vec::new(), Vec::new()),
        TiePolicy::TieAware => (rx.group_start_at(), ry.group_start_at()),
    };

    let mut base = 0.0;
    let mut weight = 1.0; // p^{d−1}
    let mut agreement = 0.0;
    for d in 1..=depth {
        match ties {
            TiePolicy::Deterministic => {
                add(rx.order[d - 1], 1, &mut in_x, &mut both);
                add(ry.order[d - 1], 2, &mut in_y, &mut both);
                agreement = both as f64 / d as f64;
            }
            TiePolicy::TieAware => {
                // A tie group enters in full at its first position.
                let mut pos = d - 1;
                while pos < n && gx[pos] == d - 1 {
                    add(rx.order[pos], 1, &mut in_x, &mut both);
                    pos += 1;
                }
                let mut pos = d - 1;
                while pos < n && gy[pos] == d - 1 {
                    add(ry.order[pos], 2, &mut in_y, &mut both);
                    pos += 1;
                }
                agreement = 2.0 * both as f64 / (in_x + in_y) as f64;
            }
        }
        base += weight * agreement;
        weight *= p;
    }
    base *= 1.0 - p;
    // After the loop, weight = p^depth.
    let extrapolated = base + agreement * weight;
    Ok(RboValue { base, extrapolated })
}

/// Apply one comparison instance to two score vectors, returning its single
/// reported value (the extrapolated value for RBO).
pub fn evaluate(x: &[f64], y: &[f64], params: &EvalParams) -> Result<f64> {
    match params.measure {
        EvalMeasure::Pearson => pearson(x, y),
        EvalMeasure::Spearman => spearman(x, y),
        EvalMeasure::KendallB => kendall_tau_b(x, y),
        EvalMeasure::Jaccard => {
            let k = resolve_topk(params.topk, x.len())?;
            jaccard_topk(x, y, k)
        }
        EvalMeasure::Rbo => {
            let depth = match params.rbo_scope {
                RboScope::TopK => resolve_topk(params.topk, x.len())?,
                RboScope::EntireSet => x.len(),
            };
            rbo(x, y, params.rbo_p, depth, params.tie_policy).map(|v| v.extrapolated)
        }
    }
}
