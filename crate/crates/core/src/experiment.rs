//! Bulk experiments: distribution of mean-solution probabilities over
//! generated instance populations, average probability statistics at larger
//! sizes, and the reference-value comparison report for a single instance.
//!
//! Work is partitioned per instance with seeds derived from the master
//! seed and the instance's global index, so runs are reproducible
//! bit-for-bit regardless of worker count. Wall-clock timing is carried in
//! memory but never serialized, keeping result files byte-identical across
//! reruns.

use std::collections::HashMap;
use std::time::Instant;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::analysis::{
    attach_probabilities, cost_histogram, estimate_optimal_probabilities, estimate_probabilities,
    instance_stats, optimal_info, Histogram, InstanceStats, OptimalInfo, CHUNK,
};
use crate::enumerate::{enumerate_approx, ApproxReportEntry, DEFAULT_NODE_LIMIT};
use crate::error::{Error, Result};
use crate::generator::{generate, GeneratorConfig};
use crate::greedy::{exact_optimum, greedy_cover, GreedyConfig};
use crate::interval::{sample_scenario, Domain, Interval};
use crate::model::{CoverSolution, IscpInstance, Radius};
use crate::rng::{derive_seed, stream_rng, StreamTag};

// ---------------------------------------------------------------------------
// distribution experiment
// ---------------------------------------------------------------------------

/// Ten left-open bins over the mean-solution probability: bin `k` holds the
/// share (percent) of instances with probability in `((k-1)/10, k/10]`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct DistributionVector {
    pub bins: [f64; 10],
}

impl DistributionVector {
    pub fn sum(&self) -> f64 {
        self.bins.iter().sum()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct DistributionParams {
    pub m: usize,
    pub delta: f64,
    pub q: u32,
    pub instances_per_replicate: usize,
    pub replicates: usize,
    pub prob_samples: u64,
    pub seed: u64,
    pub greedy: GreedyConfig,
    pub domain: Domain,
}

impl DistributionParams {
    /// Desk-scale defaults: 200 instances x 20 replicates x 1e4 samples,
    /// exact-ratio greedy over continuous scenarios (the calibrated
    /// configuration, see the README).
    pub fn desk_scale(m: usize, delta: f64, seed: u64) -> Self {
        DistributionParams {
            m,
            delta,
            q: 3,
            instances_per_replicate: 200,
            replicates: 20,
            prob_samples: 10_000,
            seed,
            greedy: GreedyConfig::exact(),
            domain: Domain::Continuous,
        }
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ExperimentResult {
    pub params: DistributionParams,
    pub replicate_vectors: Vec<DistributionVector>,
    pub mean: DistributionVector,
    pub std: DistributionVector,
    /// Instances whose mean solution never showed up among the samples;
    /// they are excluded from the bins and reported here instead.
    pub zero_estimate_anomalies: u64,
    #[serde(skip)]
    pub elapsed_secs: f64,
}

impl ExperimentResult {
    /// CSV rows `delta,k,mean,std`.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("delta,k,mean,std\n");
        for k in 0..10 {
            out.push_str(&format!(
                "{},{},{},{}\n",
                self.params.delta,
                k + 1,
                self.mean.bins[k],
                self.std.bins[k]
            ));
        }
        out
    }

    /// Parses a result file, recomputing the aggregates as a consistency
    /// check.
    pub fn load_json(json: &str) -> Result<Self> {
        let result: ExperimentResult = serde_json::from_str(json)?;
        let (mean, std) = aggregate(&result.replicate_vectors);
        for k in 0..10 {
            if (mean.bins[k] - result.mean.bins[k]).abs() > 1e-9
                || (std.bins[k] - result.std.bins[k]).abs() > 1e-9
            {
                return Err(Error::InvalidParameter(
                    "stored mean/std disagree with replicate vectors".into(),
                ));
            }
        }
        Ok(result)
    }
}

fn aggregate(replicates: &[DistributionVector]) -> (DistributionVector, DistributionVector) {
    let r = replicates.len() as f64;
    let mut mean = [0.0; 10];
    for v in replicates {
        for (acc, b) in mean.iter_mut().zip(&v.bins) {
            *acc += b / r;
        }
    }
    let mut std = [0.0; 10];
    if replicates.len() > 1 {
        for v in replicates {
            for ((acc, b), m) in std.iter_mut().zip(&v.bins).zip(&mean) {
                let d = b - m;
                *acc += d * d / (r - 1.0);
            }
        }
        for s in &mut std {
            *s = s.sqrt();
        }
    }
    (
        DistributionVector { bins: mean },
        DistributionVector { bins: std },
    )
}

/// Frequency of the mean greedy solution over sampled scenarios, as a raw
/// tally. Chunked like `estimate_probabilities` but without the full
/// per-solution map, since only one solution is compared against.
fn mean_solution_tally(
    instance: &IscpInstance,
    cfg: GreedyConfig,
    domain: Domain,
    n_samples: u64,
    seed: u64,
) -> Result<u64> {
    let (mean_sol, _) = greedy_cover(instance, instance.mean_costs(), cfg)?;
    if domain == Domain::Integer {
        sample_scenario(
            instance.cost_box(),
            domain,
            &mut stream_rng(seed, StreamTag::Sample, 0),
        )?;
    }
    let mut tally = 0u64;
    let mut done = 0u64;
    let mut chunk = 0u64;
    while done < n_samples {
        let len = CHUNK.min(n_samples - done);
        let mut rng = stream_rng(seed, StreamTag::Sample, chunk);
        for _ in 0..len {
            let c = sample_scenario(instance.cost_box(), domain, &mut rng)
                .expect("domain checked before sampling");
            let (sol, _) = greedy_cover(instance, &c, cfg).expect("lengths match");
            if sol == mean_sol {
                tally += 1;
            }
        }
        done += len;
        chunk += 1;
    }
    Ok(tally)
}

/// Bin index 1..=10 for a positive tally, per the left-open bin rule.
fn bin_of(tally: u64, total: u64) -> usize {
    debug_assert!(tally >= 1 && tally <= total);
    // smallest k with tally/total <= k/10
    (10 * tally).div_ceil(total) as usize
}

/// Runs the distribution experiment: generate instances, estimate the mean
/// solution's probability for each, bin per replicate, aggregate.
pub fn run_distribution(params: &DistributionParams) -> Result<ExperimentResult> {
    if params.instances_per_replicate < 1 || params.replicates < 1 || params.prob_samples < 1 {
        return Err(Error::InvalidParameter(
            "instance, replicate, and sample counts must be >= 1".into(),
        ));
    }
    let start = Instant::now();
    let total = params.replicates * params.instances_per_replicate;
    let bins: Vec<Option<usize>> = (0..total)
        .into_par_iter()
        .map(|idx| {
            let inst_seed = derive_seed(params.seed, idx as u64);
            let inst = generate(&GeneratorConfig {
                m: params.m,
                q: params.q,
                radius: Radius::Abs { abs: params.delta },
                seed: inst_seed,
            })?;
            let tally = mean_solution_tally(
                &inst,
                params.greedy,
                params.domain,
                params.prob_samples,
                inst_seed,
            )?;
            Ok(if tally == 0 {
                None
            } else {
                Some(bin_of(tally, params.prob_samples))
            })
        })
        .collect::<Result<_>>()?;

    let mut replicate_vectors = Vec::with_capacity(params.replicates);
    let mut anomalies = 0u64;
    for r in 0..params.replicates {
        let slice =
            &bins[r * params.instances_per_replicate..(r + 1) * params.instances_per_replicate];
        let mut counts = [0u64; 10];
        for b in slice {
            match b {
                Some(k) => counts[k - 1] += 1,
                None => anomalies += 1,
            }
        }
        let share = 100.0 / params.instances_per_replicate as f64;
        let mut v = [0.0; 10];
        for k in 0..10 {
            v[k] = counts[k] as f64 * share;
        }
        replicate_vectors.push(DistributionVector { bins: v });
    }
    let (mean, std) = aggregate(&replicate_vectors);
    Ok(ExperimentResult {
        params: *params,
        replicate_vectors,
        mean,
        std,
        zero_estimate_anomalies: anomalies,
        elapsed_secs: start.elapsed().as_secs_f64(),
    })
}

// ---------------------------------------------------------------------------
// average-probability experiment
// ---------------------------------------------------------------------------

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct MpParams {
    pub m: usize,
    pub q: u32,
    pub rel_radius: f64,
    pub instance_count: usize,
    pub prob_samples: u64,
    pub seed: u64,
    pub greedy: GreedyConfig,
    pub domain: Domain,
}

impl MpParams {
    pub fn desk_scale(m: usize, seed: u64) -> Self {
        MpParams {
            m,
            q: 3,
            rel_radius: 0.05,
            instance_count: 100,
            prob_samples: 10_000,
            seed,
            greedy: GreedyConfig::exact(),
            domain: Domain::Continuous,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct MpInstanceRow {
    /// `1 / observed_solutions`; probabilities over the observed support
    /// sum to one, so their average is its reciprocal.
    pub p_mean: f64,
    pub p_max: f64,
    pub observed_solutions: u32,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct MpResult {
    pub params: MpParams,
    pub rows: Vec<MpInstanceRow>,
    /// Average of per-instance `p_mean`.
    pub mp_mean: f64,
    /// Average of per-instance `p_max`.
    pub mp_max: f64,
    /// Always true here: sampling misses rare solutions, so the observed
    /// support undercounts and `mp_mean` is biased upward.
    pub support_biased: bool,
    #[serde(skip)]
    pub elapsed_secs: f64,
}

impl MpResult {
    /// CSV rows `instance,p_mean,p_max,observed_solutions`.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("instance,p_mean,p_max,observed_solutions\n");
        for (i, r) in self.rows.iter().enumerate() {
            out.push_str(&format!(
                "{},{},{},{}\n",
                i, r.p_mean, r.p_max, r.observed_solutions
            ));
        }
        out
    }
}

/// Estimates average and maximum solution probabilities over a generated
/// population, discovering solutions by sampling only.
pub fn run_mp(params: &MpParams) -> Result<MpResult> {
    if params.instance_count < 1 || params.prob_samples < 1 {
        return Err(Error::InvalidParameter(
            "instance and sample counts must be >= 1".into(),
        ));
    }
    let start = Instant::now();
    let rows: Vec<MpInstanceRow> = (0..params.instance_count)
        .into_par_iter()
        .map(|idx| {
            let inst_seed = derive_seed(params.seed, idx as u64);
            let inst = generate(&GeneratorConfig {
                m: params.m,
                q: params.q,
                radius: Radius::Rel {
                    rel: params.rel_radius,
                },
                seed: inst_seed,
            })?;
            let est = estimate_probabilities(
                &inst,
                params.greedy,
                params.domain,
                params.prob_samples,
                inst_seed,
            )?;
            let observed = est.len() as u32;
            let p_max = est
                .iter()
                .map(|e| e.frequency())
                .fold(0.0f64, f64::max);
            Ok(MpInstanceRow {
                p_mean: 1.0 / observed as f64,
                p_max,
                observed_solutions: observed,
            })
        })
        .collect::<Result<_>>()?;
    let count = rows.len() as f64;
    let mp_mean = rows.iter().map(|r| r.p_mean).sum::<f64>() / count;
    let mp_max = rows.iter().map(|r| r.p_max).sum::<f64>() / count;
    Ok(MpResult {
        params: *params,
        rows,
        mp_mean,
        mp_max,
        support_biased: true,
        elapsed_secs: start.elapsed().as_secs_f64(),
    })
}

// ---------------------------------------------------------------------------
// fixture comparison report
// ---------------------------------------------------------------------------

/// Expected values to compare a full analysis run against. Every field is
/// optional; an empty file produces a report of observations only.
#[derive(Debug, Clone, Default, Serialize, Deserialize)]
#[serde(default)]
pub struct FixtureExpectations {
    pub mean_solution: Option<Vec<u8>>,
    pub mean_solution_cost: Option<f64>,
    pub optimal_solution: Option<Vec<u8>>,
    pub optimal_cost: Option<f64>,
    pub solutions: Option<Vec<ExpectedSolution>>,
    /// Expected sampled probability of the mean optimal solution.
    pub optimal_probability: Option<f64>,
    pub deviation_opt: Option<f64>,
    pub deviation_approx: Option<f64>,
    pub expected_mid_cost: Option<f64>,
    /// Greedy costs must all fall at or below `low` or at or above `high`.
    pub support_gap: Option<SupportGap>,
    pub tolerances: Tolerances,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ExpectedSolution {
    pub solution: Vec<u8>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub cost_interval: Option<[f64; 2]>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub probability: Option<f64>,
}

#[derive(Debug, Clone, Copy, Serialize, Deserialize)]
pub struct SupportGap {
    pub low: f64,
    pub high: f64,
}

#[derive(Debug, Clone, Copy, Serialize, Deserialize)]
#[serde(default)]
pub struct Tolerances {
    pub probability: f64,
    pub optimal_probability: f64,
    pub expected_mid_cost: f64,
}

impl Default for Tolerances {
    fn default() -> Self {
        Tolerances {
            probability: 0.015,
            optimal_probability: 0.02,
            expected_mid_cost: 2.0,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum CheckStatus {
    Pass,
    Diff,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct FixtureCheck {
    pub name: String,
    pub status: CheckStatus,
    pub expected: String,
    pub observed: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub delta: Option<f64>,
}

impl FixtureCheck {
    pub fn line(&self) -> String {
        let tag = match self.status {
            CheckStatus::Pass => "PASS",
            CheckStatus::Diff => "DIFF",
        };
        match self.delta {
            Some(d) => format!(
                "{tag} {}: expected {}, observed {} (delta {d})",
                self.name, self.expected, self.observed
            ),
            None => format!(
                "{tag} {}: expected {}, observed {}",
                self.name, self.expected, self.observed
            ),
        }
    }
}

/// Everything the report run computed, for JSON output.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct FixtureObservations {
    pub mean_solution: CoverSolution,
    pub mean_solution_cost: f64,
    pub optimal: OptimalInfo,
    pub united: Vec<ApproxReportEntry>,
    pub stats: InstanceStats,
    pub histogram: Histogram,
    pub sampled_mass_outside_united: f64,
    pub optimal_probabilities: Vec<(CoverSolution, f64)>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct FixtureReport {
    pub checks: Vec<FixtureCheck>,
    pub observations: FixtureObservations,
    #[serde(skip)]
    pub elapsed_secs: f64,
}

impl FixtureReport {
    pub fn has_diffs(&self) -> bool {
        self.checks.iter().any(|c| c.status == CheckStatus::Diff)
    }

    pub fn lines(&self) -> Vec<String> {
        self.checks.iter().map(|c| c.line()).collect()
    }
}

#[derive(Debug, Clone, Copy)]
pub struct FixtureRunOptions {
    pub seed: u64,
    pub prob_samples: u64,
    pub opt_samples: u64,
    /// Ratio mode defining the mean approximate solution that deviations
    /// are measured against.
    pub mean_greedy: GreedyConfig,
    /// Ratio mode and domain for probability sampling and the histogram;
    /// exact ratios over continuous scenarios reproduce the reference
    /// probabilities, see the calibration notes in the README.
    pub sample_greedy: GreedyConfig,
    pub sample_domain: Domain,
    /// Domain for the enumeration's interval refinement; integer keeps the
    /// refined endpoints exact.
    pub enum_domain: Domain,
    pub histogram_bin_width: f64,
}

impl Default for FixtureRunOptions {
    fn default() -> Self {
        FixtureRunOptions {
            seed: 0,
            prob_samples: 1_000_000,
            opt_samples: 100_000,
            mean_greedy: GreedyConfig::floor(),
            sample_greedy: GreedyConfig::exact(),
            sample_domain: Domain::Continuous,
            enum_domain: Domain::Integer,
            histogram_bin_width: 1.0,
        }
    }
}

fn push_check<T: PartialEq + std::fmt::Debug>(
    checks: &mut Vec<FixtureCheck>,
    name: &str,
    expected: &T,
    observed: &T,
) {
    checks.push(FixtureCheck {
        name: name.to_string(),
        status: if expected == observed {
            CheckStatus::Pass
        } else {
            CheckStatus::Diff
        },
        expected: format!("{expected:?}"),
        observed: format!("{observed:?}"),
        delta: None,
    });
}

fn push_tolerance_check(
    checks: &mut Vec<FixtureCheck>,
    name: &str,
    expected: f64,
    observed: f64,
    tolerance: f64,
) {
    let delta = observed - expected;
    checks.push(FixtureCheck {
        name: name.to_string(),
        status: if delta.abs() <= tolerance {
            CheckStatus::Pass
        } else {
            CheckStatus::Diff
        },
        expected: format!("{expected} +- {tolerance}"),
        observed: format!("{observed}"),
        delta: Some(delta),
    });
}

/// Runs the full analysis pipeline on one instance and diffs the outcome
/// against the expectations.
pub fn run_fixture_report(
    instance: &IscpInstance,
    expectations: &FixtureExpectations,
    opts: FixtureRunOptions,
) -> Result<FixtureReport> {
    let start = Instant::now();
    let tol = expectations.tolerances;

    let (mean_solution, _) = greedy_cover(instance, instance.mean_costs(), opts.mean_greedy)?;
    let mean_solution_cost = instance.cost(&mean_solution, instance.mean_costs())?;
    let optimal = optimal_info(instance)?;
    let mut united = enumerate_approx(
        instance,
        GreedyConfig::exact(),
        opts.enum_domain,
        DEFAULT_NODE_LIMIT,
    )?;
    let estimates = estimate_probabilities(
        instance,
        opts.sample_greedy,
        opts.sample_domain,
        opts.prob_samples,
        opts.seed,
    )?;
    let outside = attach_probabilities(&mut united, &estimates);
    let opt_estimates =
        estimate_optimal_probabilities(instance, opts.sample_domain, opts.opt_samples, opts.seed)?;
    let stats = instance_stats(instance, &united, &optimal, opts.mean_greedy)?;
    let histogram = cost_histogram(
        instance,
        opts.sample_greedy,
        opts.sample_domain,
        opts.prob_samples,
        opts.histogram_bin_width,
        opts.seed,
    )?;

    let mut checks = Vec::new();
    if let Some(expected) = &expectations.mean_solution {
        push_check(&mut checks, "mean_solution", expected, &mean_solution.bits());
    }
    if let Some(expected) = expectations.mean_solution_cost {
        push_check(&mut checks, "mean_solution_cost", &expected, &mean_solution_cost);
    }
    if let Some(expected) = &expectations.optimal_solution {
        push_check(
            &mut checks,
            "optimal_solution",
            expected,
            &optimal.mean_optimal.bits(),
        );
    }
    if let Some(expected) = expectations.optimal_cost {
        push_check(
            &mut checks,
            "optimal_cost",
            &expected,
            &optimal.mean_optimal_cost,
        );
    }
    if let Some(expected_solutions) = &expectations.solutions {
        push_check(
            &mut checks,
            "solution_count",
            &expected_solutions.len(),
            &united.records.len(),
        );
        for exp in expected_solutions {
            let sol = CoverSolution::from_bits(&exp.solution);
            let label = sol.bit_string();
            match united.find(&sol) {
                None => checks.push(FixtureCheck {
                    name: format!("solution[{label}]"),
                    status: CheckStatus::Diff,
                    expected: "present".into(),
                    observed: "absent".into(),
                    delta: None,
                }),
                Some(rec) => {
                    if let Some([lo, hi]) = exp.cost_interval {
                        push_check(
                            &mut checks,
                            &format!("cost_interval[{label}]"),
                            &Interval::new(lo, hi),
                            &rec.refined_cost,
                        );
                    }
                    if let Some(p) = exp.probability {
                        push_tolerance_check(
                            &mut checks,
                            &format!("probability[{label}]"),
                            p,
                            rec.probability.unwrap_or(0.0),
                            tol.probability,
                        );
                    }
                }
            }
        }
    }
    if let Some(expected) = expectations.optimal_probability {
        let observed = opt_estimates
            .iter()
            .find(|e| e.solution == optimal.mean_optimal)
            .map(|e| e.frequency())
            .unwrap_or(0.0);
        push_tolerance_check(
            &mut checks,
            "optimal_probability",
            expected,
            observed,
            tol.optimal_probability,
        );
    }
    if let Some(expected) = expectations.deviation_opt {
        push_check(&mut checks, "deviation_opt", &expected, &stats.deviation_opt);
    }
    if let Some(expected) = expectations.deviation_approx {
        push_check(
            &mut checks,
            "deviation_approx",
            &expected,
            &stats.deviation_approx,
        );
    }
    if let Some(expected) = expectations.expected_mid_cost {
        push_tolerance_check(
            &mut checks,
            "expected_mid_cost",
            expected,
            stats.expected_mid_cost,
            tol.expected_mid_cost,
        );
    }
    if let Some(gap) = expectations.support_gap {
        let inside_gap = histogram
            .bins
            .iter()
            .filter(|b| b.lo > gap.low && b.hi < gap.high)
            .map(|b| b.count)
            .sum::<u64>();
        checks.push(FixtureCheck {
            name: "support_gap".into(),
            status: if inside_gap == 0 {
                CheckStatus::Pass
            } else {
                CheckStatus::Diff
            },
            expected: format!("no mass in ({}, {})", gap.low, gap.high),
            observed: format!("{inside_gap} samples inside the gap"),
            delta: None,
        });
    }

    let observations = FixtureObservations {
        mean_solution,
        mean_solution_cost,
        optimal,
        united: united.report(),
        stats,
        histogram,
        sampled_mass_outside_united: outside,
        optimal_probabilities: opt_estimates
            .iter()
            .map(|e| (e.solution.clone(), e.frequency()))
            .collect(),
    };
    Ok(FixtureReport {
        checks,
        observations,
        elapsed_secs: start.elapsed().as_secs_f64(),
    })
}

// ---------------------------------------------------------------------------
// batch persistence
// ---------------------------------------------------------------------------

/// Manifest entry for one written instance file.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ManifestEntry {
    pub file: String,
    pub seed: u64,
    pub m: usize,
    pub n: usize,
}

/// Writes a generated batch as numbered JSON files plus a manifest.
pub fn write_batch(
    dir: &std::path::Path,
    config: &GeneratorConfig,
    count: usize,
) -> Result<Vec<ManifestEntry>> {
    std::fs::create_dir_all(dir)?;
    let mut manifest = Vec::with_capacity(count);
    for j in 0..count {
        let seed = derive_seed(config.seed, j as u64);
        let inst = generate(&GeneratorConfig { seed, ..*config })?;
        let file = format!("instance_{j:05}.json");
        inst.write_file(dir.join(&file))?;
        manifest.push(ManifestEntry {
            file,
            seed,
            m: inst.m(),
            n: inst.n(),
        });
    }
    let json = serde_json::to_string_pretty(&manifest)?;
    std::fs::write(dir.join("manifest.json"), json + "\n")?;
    Ok(manifest)
}

// used by tests to hold per-solution tallies without recomputation
#[doc(hidden)]
pub fn observed_support(
    instance: &IscpInstance,
    cfg: GreedyConfig,
    domain: Domain,
    n_samples: u64,
    seed: u64,
) -> Result<HashMap<CoverSolution, u64>> {
    Ok(
        estimate_probabilities(instance, cfg, domain, n_samples, seed)?
            .into_iter()
            .map(|e| (e.solution, e.tally))
            .collect(),
    )
}

/// Convenience wrapper: exact optimum at the box midpoint.
pub fn solve_mean(instance: &IscpInstance) -> Result<(CoverSolution, f64)> {
    exact_optimum(instance, instance.mean_costs())
}
