//! Monte Carlo estimation of solution probabilities and the derived
//! per-instance statistics.
//!
//! A solution's probability is the chance that a uniformly drawn scenario
//! makes the algorithm output it. Estimates are plain frequencies over `N`
//! sampled scenarios, kept as integer tallies so they sum to exactly one.
//!
//! Sampling is split into fixed chunks of [`CHUNK`] scenarios; chunk `i`
//! draws from stream `(seed, Sample, i)` and tallies merge in chunk order,
//! so results are bit-identical no matter how many workers run.

use std::collections::HashMap;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::enumerate::{enumerate_optimal, UnitedApproxSet};
use crate::error::{Error, Result};
use crate::greedy::{exact_optimum, greedy_cover, minimal_covers, GreedyConfig};
use crate::interval::{sample_scenario, Domain, Interval};
use crate::model::{CoverSolution, IscpInstance};
use crate::rng::{stream_rng, StreamTag};

/// Scenarios per sampling chunk; part of the deterministic partition plan.
pub const CHUNK: u64 = 1 << 16;

/// Frequency of one solution over a sampling run.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ProbabilityEstimate {
    pub solution: CoverSolution,
    pub tally: u64,
    pub sample_count: u64,
}

impl ProbabilityEstimate {
    pub fn frequency(&self) -> f64 {
        self.tally as f64 / self.sample_count as f64
    }
}

fn tally_runs<F>(n_samples: u64, run: F) -> Vec<ProbabilityEstimate>
where
    F: Fn(u64, u64) -> HashMap<CoverSolution, u64> + Sync,
{
    let chunks: Vec<(u64, u64)> = (0..n_samples.div_ceil(CHUNK))
        .map(|i| (i, CHUNK.min(n_samples - i * CHUNK)))
        .collect();
    let partial: Vec<HashMap<CoverSolution, u64>> = chunks
        .par_iter()
        .map(|&(i, len)| run(i, len))
        .collect();
    let mut merged: HashMap<CoverSolution, u64> = HashMap::new();
    for map in partial {
        for (sol, count) in map {
            *merged.entry(sol).or_insert(0) += count;
        }
    }
    let mut out: Vec<ProbabilityEstimate> = merged
        .into_iter()
        .map(|(solution, tally)| ProbabilityEstimate {
            solution,
            tally,
            sample_count: n_samples,
        })
        .collect();
    out.sort_by(|a, b| b.tally.cmp(&a.tally).then(a.solution.cmp(&b.solution)));
    out
}

/// Tallies greedy outputs over `n_samples` uniform scenarios.
pub fn estimate_probabilities(
    instance: &IscpInstance,
    cfg: GreedyConfig,
    domain: Domain,
    n_samples: u64,
    seed: u64,
) -> Result<Vec<ProbabilityEstimate>> {
    if n_samples == 0 {
        return Err(Error::InvalidParameter("n_samples must be >= 1".into()));
    }
    // fail fast on integer-free components instead of inside workers
    if domain == Domain::Integer {
        sample_scenario(
            instance.cost_box(),
            domain,
            &mut stream_rng(seed, StreamTag::Sample, 0),
        )?;
    }
    Ok(tally_runs(n_samples, |chunk, len| {
        let mut rng = stream_rng(seed, StreamTag::Sample, chunk);
        let mut map: HashMap<CoverSolution, u64> = HashMap::new();
        for _ in 0..len {
            let c = sample_scenario(instance.cost_box(), domain, &mut rng)
                .expect("domain checked before sampling");
            let (sol, _) = greedy_cover(instance, &c, cfg).expect("lengths match");
            *map.entry(sol).or_insert(0) += 1;
        }
        map
    }))
}

/// Tallies exact optima over `n_samples` uniform scenarios.
///
/// Optima are evaluated over the precomputed minimal covers (positive costs
/// make every optimum minimal), scanning in lexicographic order so ties
/// resolve exactly like [`exact_optimum`].
pub fn estimate_optimal_probabilities(
    instance: &IscpInstance,
    domain: Domain,
    n_samples: u64,
    seed: u64,
) -> Result<Vec<ProbabilityEstimate>> {
    if n_samples == 0 {
        return Err(Error::InvalidParameter("n_samples must be >= 1".into()));
    }
    if domain == Domain::Integer {
        sample_scenario(
            instance.cost_box(),
            domain,
            &mut stream_rng(seed, StreamTag::OptSample, 0),
        )?;
    }
    let covers = minimal_covers(instance)?;
    Ok(tally_runs(n_samples, |chunk, len| {
        let mut rng = stream_rng(seed, StreamTag::OptSample, chunk);
        let mut map: HashMap<CoverSolution, u64> = HashMap::new();
        for _ in 0..len {
            let c = sample_scenario(instance.cost_box(), domain, &mut rng)
                .expect("domain checked before sampling");
            let mut best = 0usize;
            let mut best_cost = f64::INFINITY;
            for (i, x) in covers.iter().enumerate() {
                let cost = instance.cost(x, &c).expect("lengths match");
                if cost < best_cost {
                    best = i;
                    best_cost = cost;
                }
            }
            *map.entry(covers[best].clone()).or_insert(0) += 1;
        }
        map
    }))
}

/// Attaches sampled frequencies to an enumerated united set.
///
/// Members never observed get frequency zero (reachable only on tie sets).
/// Returns the sampled mass falling outside the united set, which is zero
/// whenever sampling ran in the same exact-ratio mode as the enumeration.
pub fn attach_probabilities(
    united: &mut UnitedApproxSet,
    estimates: &[ProbabilityEstimate],
) -> f64 {
    let mut outside = 0u64;
    let mut total = 0u64;
    for rec in &mut united.records {
        rec.probability = Some(0.0);
    }
    for est in estimates {
        total = est.sample_count;
        match united
            .records
            .iter_mut()
            .find(|r| r.solution == est.solution)
        {
            Some(rec) => rec.probability = Some(est.frequency()),
            None => outside += est.tally,
        }
    }
    if total == 0 {
        0.0
    } else {
        outside as f64 / total as f64
    }
}

/// Threshold below which a solution counts as unrepresentative.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct RepresentativenessPolicy {
    pub boundary: f64,
}

impl RepresentativenessPolicy {
    pub fn new(boundary: f64) -> Result<Self> {
        if !(boundary > 0.0 && boundary <= 1.0) {
            return Err(Error::InvalidParameter(format!(
                "boundary must lie in (0, 1], got {boundary}"
            )));
        }
        Ok(RepresentativenessPolicy { boundary })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Representativeness {
    Representative,
    Unrepresentative,
}

/// Unrepresentative iff the probability is strictly below the boundary.
pub fn classify(frequency: f64, policy: RepresentativenessPolicy) -> Representativeness {
    if frequency < policy.boundary {
        Representativeness::Unrepresentative
    } else {
        Representativeness::Representative
    }
}

/// The possible-optimal side of an instance: the united optimal solution
/// set, the range of optimal costs over the box, and the mean optimum.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct OptimalInfo {
    pub solutions: Vec<CoverSolution>,
    /// `[opt(lower corner), opt(upper corner)]`; the optimal value is
    /// monotone in every cost, so the corners are exact extremes.
    pub cost_range: Interval,
    pub mean_optimal: CoverSolution,
    pub mean_optimal_cost: f64,
}

pub fn optimal_info(instance: &IscpInstance) -> Result<OptimalInfo> {
    let solutions = enumerate_optimal(instance)?;
    let (_, lo) = exact_optimum(instance, &instance.cost_box().lower_corner())?;
    let (_, hi) = exact_optimum(instance, &instance.cost_box().upper_corner())?;
    let (mean_optimal, mean_optimal_cost) = exact_optimum(instance, instance.mean_costs())?;
    Ok(OptimalInfo {
        solutions,
        cost_range: Interval::new(lo, hi),
        mean_optimal,
        mean_optimal_cost,
    })
}

/// Summary statistics over a united set with attached probabilities.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct InstanceStats {
    pub p_mean: f64,
    pub p_max: f64,
    pub solution_count: usize,
    /// Probability-weighted midpoint of the refined cost intervals.
    pub expected_mid_cost: f64,
    /// Largest deviation of a possible optimal cost from the mean-scenario
    /// optimal cost.
    pub deviation_opt: f64,
    /// Largest deviation of a possible greedy cost from the mean-scenario
    /// greedy cost.
    pub deviation_approx: f64,
    pub mean_approx_cost: f64,
}

/// Computes [`InstanceStats`].
///
/// `mean_cfg` selects the ratio mode defining the mean approximate solution
/// that the deviations are measured against.
pub fn instance_stats(
    instance: &IscpInstance,
    united: &UnitedApproxSet,
    optimal: &OptimalInfo,
    mean_cfg: GreedyConfig,
) -> Result<InstanceStats> {
    if united.records.is_empty() {
        return Err(Error::EmptySolutionSet);
    }
    let freqs: Vec<f64> = united
        .records
        .iter()
        .map(|r| r.probability.ok_or(Error::MissingProbabilities))
        .collect::<Result<_>>()?;
    let count = united.records.len();
    let p_mean = freqs.iter().sum::<f64>() / count as f64;
    let p_max = freqs.iter().fold(0.0f64, |a, &b| a.max(b));
    let expected_mid_cost = united
        .records
        .iter()
        .zip(&freqs)
        .map(|(r, f)| f * r.refined_cost.midpoint())
        .sum();

    let (mean_sol, _) = greedy_cover(instance, instance.mean_costs(), mean_cfg)?;
    let mean_approx_cost = instance.cost(&mean_sol, instance.mean_costs())?;
    let deviation_approx = united
        .records
        .iter()
        .map(|r| {
            (mean_approx_cost - r.refined_cost.lo)
                .abs()
                .max((mean_approx_cost - r.refined_cost.hi).abs())
        })
        .fold(0.0f64, f64::max);
    let deviation_opt = (optimal.mean_optimal_cost - optimal.cost_range.lo)
        .abs()
        .max((optimal.mean_optimal_cost - optimal.cost_range.hi).abs());

    Ok(InstanceStats {
        p_mean,
        p_max,
        solution_count: count,
        expected_mid_cost,
        deviation_opt,
        deviation_approx,
        mean_approx_cost,
    })
}

/// Cost frequencies of greedy outputs, tallied into width-`bin_width` bins
/// anchored at zero.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct Histogram {
    pub bin_width: f64,
    pub bins: Vec<HistogramBin>,
    pub sample_count: u64,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct HistogramBin {
    pub lo: f64,
    pub hi: f64,
    pub count: u64,
}

impl HistogramBin {
    pub fn frequency(&self, total: u64) -> f64 {
        self.count as f64 / total as f64
    }
}

impl Histogram {
    /// Largest cost gap between consecutive occupied bins.
    pub fn widest_gap(&self) -> f64 {
        self.bins
            .windows(2)
            .map(|w| w[1].lo - w[0].hi)
            .fold(0.0, f64::max)
    }
}

pub fn cost_histogram(
    instance: &IscpInstance,
    cfg: GreedyConfig,
    domain: Domain,
    n_samples: u64,
    bin_width: f64,
    seed: u64,
) -> Result<Histogram> {
    if bin_width <= 0.0 {
        return Err(Error::InvalidParameter(format!(
            "bin_width must be positive, got {bin_width}"
        )));
    }
    if n_samples == 0 {
        return Err(Error::InvalidParameter("n_samples must be >= 1".into()));
    }
    if domain == Domain::Integer {
        sample_scenario(
            instance.cost_box(),
            domain,
            &mut stream_rng(seed, StreamTag::Histogram, 0),
        )?;
    }
    let chunks: Vec<(u64, u64)> = (0..n_samples.div_ceil(CHUNK))
        .map(|i| (i, CHUNK.min(n_samples - i * CHUNK)))
        .collect();
    let partial: Vec<HashMap<i64, u64>> = chunks
        .par_iter()
        .map(|&(chunk, len)| {
            let mut rng = stream_rng(seed, StreamTag::Histogram, chunk);
            let mut map: HashMap<i64, u64> = HashMap::new();
            for _ in 0..len {
                let c = sample_scenario(instance.cost_box(), domain, &mut rng)
                    .expect("domain checked before sampling");
                let (sol, _) = greedy_cover(instance, &c, cfg).expect("lengths match");
                let cost = instance.cost(&sol, &c).expect("lengths match");
                let idx = (cost / bin_width).floor() as i64;
                *map.entry(idx).or_insert(0) += 1;
            }
            map
        })
        .collect();
    let mut merged: HashMap<i64, u64> = HashMap::new();
    for map in partial {
        for (idx, count) in map {
            *merged.entry(idx).or_insert(0) += count;
        }
    }
    let mut indices: Vec<i64> = merged.keys().copied().collect();
    indices.sort_unstable();
    let bins = indices
        .into_iter()
        .map(|idx| HistogramBin {
            lo: idx as f64 * bin_width,
            hi: (idx + 1) as f64 * bin_width,
            count: merged[&idx],
        })
        .collect();
    Ok(Histogram {
        bin_width,
        bins,
        sample_count: n_samples,
    })
}

/// CSV rows `bin_lo,bin_hi,frequency`.
pub fn histogram_csv(hist: &Histogram) -> String {
    let mut out = String::from("bin_lo,bin_hi,frequency\n");
    for b in &hist.bins {
        out.push_str(&format!(
            "{},{},{}\n",
            b.lo,
            b.hi,
            b.frequency(hist.sample_count)
        ));
    }
    out
}

/// CSV rows `solution_bits,frequency,refined_lo,refined_hi,classification`.
pub fn probability_report_csv(united: &UnitedApproxSet, policy: RepresentativenessPolicy) -> String {
    let mut out = String::from("solution_bits,frequency,refined_lo,refined_hi,classification\n");
    for rec in &united.records {
        let freq = rec.probability.unwrap_or(0.0);
        let class = match classify(freq, policy) {
            Representativeness::Representative => "representative",
            Representativeness::Unrepresentative => "unrepresentative",
        };
        out.push_str(&format!(
            "{},{},{},{},{}\n",
            rec.solution.bit_string(),
            freq,
            rec.refined_cost.lo,
            rec.refined_cost.hi,
            class
        ));
    }
    out
}
