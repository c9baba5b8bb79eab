//! `iscp` — set cover under interval cost uncertainty.
//!
//! Subcommands mirror the analysis pipeline: `generate` instances, `solve`
//! one scenario, `enumerate` every greedy-reachable solution, `analyze`
//! probabilities and representativeness, `histogram` the cost
//! distribution, run bulk `experiment`s, and check the bundled worked
//! example with `fixture`.

use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::error::ErrorKind;
use clap::{Args, Parser, Subcommand, ValueEnum};

use iscp_core::analysis::{histogram_csv, probability_report_csv};
use iscp_core::experiment::write_batch;
use iscp_core::rng::{stream_rng, StreamTag};
use iscp_core::*;

const BUNDLED_INSTANCE: &str = include_str!("../../../fixtures/worked_example.json");
const BUNDLED_EXPECTED: &str = include_str!("../../../fixtures/worked_example_expected.json");

#[derive(Parser)]
#[command(name = "iscp", version, about = "Set cover with interval costs: united solution sets, probabilities, experiments")]
struct Cli {
    /// Master seed; every random stream derives from it.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,

    /// Greedy ratio mode (default: floor for solve, exact elsewhere).
    #[arg(long, global = true, value_enum)]
    mode: Option<ModeArg>,

    /// Scenario domain (default: continuous sampling, integer refinement).
    #[arg(long, global = true, value_enum)]
    domain: Option<DomainArg>,

    /// Output file (JSON or CSV depending on the subcommand).
    #[arg(long, global = true)]
    out: Option<PathBuf>,

    /// Worker thread count (default: all cores). Results do not depend on
    /// it; work is partitioned by index, not by thread.
    #[arg(long, global = true)]
    threads: Option<usize>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum ModeArg {
    Exact,
    Floor,
}

impl From<ModeArg> for GreedyConfig {
    fn from(m: ModeArg) -> Self {
        match m {
            ModeArg::Exact => GreedyConfig::exact(),
            ModeArg::Floor => GreedyConfig::floor(),
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum DomainArg {
    Continuous,
    Integer,
}

impl From<DomainArg> for Domain {
    fn from(d: DomainArg) -> Self {
        match d {
            DomainArg::Continuous => Domain::Continuous,
            DomainArg::Integer => Domain::Integer,
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Generate random instances and write them as JSON files.
    Generate(GenerateArgs),
    /// Run the greedy solver (and optionally the exact optimum) at one scenario.
    Solve(SolveArgs),
    /// Enumerate every solution the greedy algorithm can output over the box.
    Enumerate(EnumerateArgs),
    /// Estimate solution probabilities, classify, and compute statistics.
    Analyze(AnalyzeArgs),
    /// Tally greedy costs over sampled scenarios into bins.
    Histogram(HistogramArgs),
    /// Bulk experiments over generated instance populations.
    #[command(subcommand)]
    Experiment(ExperimentCmd),
    /// Run the full pipeline on an instance and diff against expected values.
    Fixture(FixtureArgs),
}

#[derive(Args)]
struct GenerateArgs {
    #[arg(long)]
    m: usize,
    #[arg(long, default_value_t = 3)]
    q: u32,
    /// Absolute cost radius.
    #[arg(long, conflicts_with = "rel")]
    delta: Option<f64>,
    /// Relative cost radius (fraction of each mean cost).
    #[arg(long)]
    rel: Option<f64>,
    #[arg(long, default_value_t = 1)]
    count: usize,
}

#[derive(Args)]
struct SolveArgs {
    #[arg(long)]
    instance: PathBuf,
    /// Scenario to solve at.
    #[arg(long, value_enum, default_value_t = ScenarioArg::Mean)]
    scenario: ScenarioArg,
    /// Also run the exhaustive exact optimum (n <= 25).
    #[arg(long)]
    exact: bool,
}

#[derive(Clone, Copy, ValueEnum)]
enum ScenarioArg {
    Mean,
    Lower,
    Upper,
}

#[derive(Args)]
struct EnumerateArgs {
    #[arg(long)]
    instance: PathBuf,
    /// Also enumerate the possible optimal solutions (n <= 25).
    #[arg(long)]
    optimal: bool,
    #[arg(long, default_value_t = DEFAULT_NODE_LIMIT)]
    node_limit: u64,
}

#[derive(Args)]
struct AnalyzeArgs {
    #[arg(long)]
    instance: PathBuf,
    /// Representativeness boundary b; probability below b is unrepresentative.
    #[arg(long, default_value_t = 0.2)]
    boundary: f64,
    #[arg(long, default_value_t = 1_000_000)]
    samples: u64,
    /// Skip the exact-optimum statistics (needed when n > 25).
    #[arg(long)]
    no_optimal: bool,
}

#[derive(Args)]
struct HistogramArgs {
    #[arg(long)]
    instance: PathBuf,
    #[arg(long, default_value_t = 1_000_000)]
    samples: u64,
    /// Bin width in cost units.
    #[arg(long, default_value_t = 1.0, conflicts_with = "bins")]
    bin_width: f64,
    /// Alternatively: target bin count over the sampled cost range.
    #[arg(long)]
    bins: Option<u32>,
}

#[derive(Subcommand)]
enum ExperimentCmd {
    /// Distribution of mean-solution probabilities over generated instances.
    Distribution(DistributionArgs),
    /// Average and maximum solution probabilities at a fixed universe size.
    Mp(MpArgs),
}

#[derive(Args)]
struct DistributionArgs {
    #[arg(long)]
    m: usize,
    #[arg(long)]
    delta: f64,
    #[arg(long, default_value_t = 3)]
    q: u32,
    #[arg(long, default_value_t = 200)]
    instances: usize,
    #[arg(long, default_value_t = 20)]
    replicates: usize,
    #[arg(long, default_value_t = 10_000)]
    samples: u64,
    /// Write the delta,k,mean,std table here (stdout otherwise).
    #[arg(long)]
    csv: Option<PathBuf>,
}

#[derive(Args)]
struct MpArgs {
    #[arg(long)]
    m: usize,
    #[arg(long, default_value_t = 0.05)]
    rel: f64,
    #[arg(long, default_value_t = 3)]
    q: u32,
    #[arg(long, default_value_t = 100)]
    instances: usize,
    #[arg(long, default_value_t = 10_000)]
    samples: u64,
    #[arg(long)]
    csv: Option<PathBuf>,
}

#[derive(Args)]
struct FixtureArgs {
    /// Instance file (bundled worked example when omitted).
    #[arg(long)]
    instance: Option<PathBuf>,
    /// Expected-values file (bundled reference values when omitted).
    #[arg(long)]
    expected: Option<PathBuf>,
    #[arg(long, default_value_t = 1_000_000)]
    samples: u64,
    #[arg(long, default_value_t = 100_000)]
    opt_samples: u64,
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => 1,
            };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    if let Some(threads) = cli.threads {
        let _ = rayon::ThreadPoolBuilder::new()
            .num_threads(threads)
            .build_global();
    }
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(1)
        }
    }
}

fn load_instance(path: &Path) -> Result<IscpInstance> {
    IscpInstance::from_file(path).with_context(|| format!("loading instance {}", path.display()))
}

fn write_or_print(out: &Option<PathBuf>, content: &str) -> Result<()> {
    match out {
        Some(path) => {
            std::fs::write(path, content).with_context(|| format!("writing {}", path.display()))?
        }
        None => print!("{content}"),
    }
    Ok(())
}

fn run(cli: Cli) -> Result<u8> {
    match cli.command {
        Command::Generate(args) => {
            let radius = match (args.delta, args.rel) {
                (Some(abs), None) => Radius::Abs { abs },
                (None, Some(rel)) => Radius::Rel { rel },
                (None, None) => bail!("one of --delta or --rel is required"),
                _ => unreachable!("clap conflicts_with"),
            };
            let config = GeneratorConfig {
                m: args.m,
                q: args.q,
                radius,
                seed: cli.seed,
            };
            match &cli.out {
                Some(dir) => {
                    let manifest = write_batch(dir, &config, args.count)?;
                    eprintln!(
                        "wrote {} instances and manifest.json to {}",
                        manifest.len(),
                        dir.display()
                    );
                }
                None => {
                    for inst in generate_batch(&config, args.count)? {
                        println!("{}", serde_json::to_string(&inst.to_data())?);
                    }
                }
            }
            Ok(0)
        }

        Command::Solve(args) => {
            let inst = load_instance(&args.instance)?;
            let scenario = match args.scenario {
                ScenarioArg::Mean => inst.mean_costs().clone(),
                ScenarioArg::Lower => inst.cost_box().lower_corner(),
                ScenarioArg::Upper => inst.cost_box().upper_corner(),
            };
            let cfg: GreedyConfig = cli.mode.map(Into::into).unwrap_or(GreedyConfig::floor());
            let (solution, trace) = greedy_cover(&inst, &scenario, cfg)?;
            let greedy_cost = inst.cost(&solution, &scenario)?;
            let mut report = serde_json::json!({
                "solution": solution.bits(),
                "cost": greedy_cost,
                "steps": trace.steps.iter().map(|s| s.chosen).collect::<Vec<_>>(),
            });
            println!("greedy solution {} cost {}", solution, greedy_cost);
            if args.exact {
                let (opt, opt_cost) = exact_optimum(&inst, &scenario)?;
                let ratio = approx_ratio(greedy_cost, opt_cost)?;
                let bound = harmonic_bound(inst.m())?;
                println!("exact optimum  {} cost {}", opt, opt_cost);
                println!("ratio {ratio:.6} (harmonic bound {bound:.6})");
                report["optimum"] = serde_json::json!({
                    "solution": opt.bits(),
                    "cost": opt_cost,
                    "ratio": ratio,
                    "harmonic_bound": bound,
                });
            }
            if cli.out.is_some() {
                write_or_print(&cli.out, &(serde_json::to_string_pretty(&report)? + "\n"))?;
            }
            Ok(0)
        }

        Command::Enumerate(args) => {
            let inst = load_instance(&args.instance)?;
            if matches!(cli.mode, Some(ModeArg::Floor)) {
                bail!("enumeration requires exact ratio mode; floor-mode support comes from sampling (see analyze)");
            }
            let domain = cli.domain.map(Into::into).unwrap_or(Domain::Integer);
            let united = enumerate_approx(&inst, GreedyConfig::exact(), domain, args.node_limit)?;
            eprintln!(
                "{} solutions over {} branch nodes",
                united.records.len(),
                united.nodes_explored
            );
            let json = if args.optimal {
                let optimal = enumerate_optimal(&inst)?;
                serde_json::to_string_pretty(&serde_json::json!({
                    "approx": united.report(),
                    "optimal": optimal.iter().map(|s| s.bits()).collect::<Vec<_>>(),
                }))?
            } else {
                serde_json::to_string_pretty(&united.report())?
            };
            write_or_print(&cli.out, &(json + "\n"))?;
            Ok(0)
        }

        Command::Analyze(args) => {
            let inst = load_instance(&args.instance)?;
            let policy = RepresentativenessPolicy::new(args.boundary)?;
            let sample_cfg: GreedyConfig =
                cli.mode.map(Into::into).unwrap_or(GreedyConfig::exact());
            let sample_domain: Domain =
                cli.domain.map(Into::into).unwrap_or(Domain::Continuous);
            let mut united =
                enumerate_approx(&inst, GreedyConfig::exact(), Domain::Integer, DEFAULT_NODE_LIMIT)?;
            let estimates =
                estimate_probabilities(&inst, sample_cfg, sample_domain, args.samples, cli.seed)?;
            let outside = attach_probabilities(&mut united, &estimates);
            if outside > 0.0 {
                eprintln!(
                    "note: {:.4} of the sampled mass fell outside the exact-mode united set",
                    outside
                );
            }
            write_or_print(&cli.out, &probability_report_csv(&united, policy))?;
            if !args.no_optimal {
                let info = optimal_info(&inst)?;
                let stats = instance_stats(&inst, &united, &info, GreedyConfig::floor())?;
                eprintln!("{}", serde_json::to_string_pretty(&stats)?);
            }
            Ok(0)
        }

        Command::Histogram(args) => {
            let inst = load_instance(&args.instance)?;
            let cfg: GreedyConfig = cli.mode.map(Into::into).unwrap_or(GreedyConfig::exact());
            let domain: Domain = cli.domain.map(Into::into).unwrap_or(Domain::Continuous);
            let width = match args.bins {
                None => args.bin_width,
                Some(bins) => {
                    // pre-pass for the sampled cost range
                    let mut rng = stream_rng(cli.seed, StreamTag::Histogram, u32::MAX as u64);
                    let mut lo = f64::INFINITY;
                    let mut hi = f64::NEG_INFINITY;
                    for _ in 0..10_000 {
                        let c = sample_scenario(inst.cost_box(), domain, &mut rng)?;
                        let (sol, _) = greedy_cover(&inst, &c, cfg)?;
                        let cost = inst.cost(&sol, &c)?;
                        lo = lo.min(cost);
                        hi = hi.max(cost);
                    }
                    ((hi - lo) / bins as f64).max(1e-9)
                }
            };
            let hist = cost_histogram(&inst, cfg, domain, args.samples, width, cli.seed)?;
            write_or_print(&cli.out, &histogram_csv(&hist))?;
            Ok(0)
        }

        Command::Experiment(ExperimentCmd::Distribution(args)) => {
            let mut params = DistributionParams::desk_scale(args.m, args.delta, cli.seed);
            params.q = args.q;
            params.instances_per_replicate = args.instances;
            params.replicates = args.replicates;
            params.prob_samples = args.samples;
            if let Some(mode) = cli.mode {
                params.greedy = mode.into();
            }
            if let Some(domain) = cli.domain {
                params.domain = domain.into();
            }
            let result = run_distribution(&params)?;
            eprintln!(
                "m={} delta={} done in {:.1}s ({} anomalies)",
                params.m, params.delta, result.elapsed_secs, result.zero_estimate_anomalies
            );
            match &args.csv {
                Some(path) => std::fs::write(path, result.to_csv())?,
                None => print!("{}", result.to_csv()),
            }
            if cli.out.is_some() {
                write_or_print(&cli.out, &(serde_json::to_string_pretty(&result)? + "\n"))?;
            }
            Ok(0)
        }

        Command::Experiment(ExperimentCmd::Mp(args)) => {
            let mut params = MpParams::desk_scale(args.m, cli.seed);
            params.q = args.q;
            params.rel_radius = args.rel;
            params.instance_count = args.instances;
            params.prob_samples = args.samples;
            if let Some(mode) = cli.mode {
                params.greedy = mode.into();
            }
            if let Some(domain) = cli.domain {
                params.domain = domain.into();
            }
            let result = run_mp(&params)?;
            println!(
                "m={} MP_mean={:.4} MP_max={:.4} over {} instances ({} samples each{})",
                params.m,
                result.mp_mean,
                result.mp_max,
                params.instance_count,
                params.prob_samples,
                if result.support_biased {
                    "; MP_mean biased up by unobserved rare solutions"
                } else {
                    ""
                }
            );
            if let Some(path) = &args.csv {
                std::fs::write(path, result.to_csv())?;
            }
            if cli.out.is_some() {
                write_or_print(&cli.out, &(serde_json::to_string_pretty(&result)? + "\n"))?;
            }
            Ok(0)
        }

        Command::Fixture(args) => {
            let inst = match &args.instance {
                Some(path) => load_instance(path)?,
                None => IscpInstance::from_json(BUNDLED_INSTANCE)?,
            };
            let expectations: FixtureExpectations = match &args.expected {
                Some(path) => serde_json::from_str(
                    &std::fs::read_to_string(path)
                        .with_context(|| format!("reading {}", path.display()))?,
                )?,
                None => serde_json::from_str(BUNDLED_EXPECTED)?,
            };
            let mut opts = FixtureRunOptions {
                seed: cli.seed,
                prob_samples: args.samples,
                opt_samples: args.opt_samples,
                ..Default::default()
            };
            if let Some(mode) = cli.mode {
                opts.sample_greedy = mode.into();
            }
            if let Some(domain) = cli.domain {
                opts.sample_domain = domain.into();
            }
            let report = run_fixture_report(&inst, &expectations, opts)?;
            for line in report.lines() {
                println!("{line}");
            }
            let diffs = report
                .checks
                .iter()
                .filter(|c| c.status == iscp_core::experiment::CheckStatus::Diff)
                .count();
            println!(
                "{} checks, {} diffs ({:.1}s)",
                report.checks.len(),
                diffs,
                report.elapsed_secs
            );
            if cli.out.is_some() {
                write_or_print(&cli.out, &(serde_json::to_string_pretty(&report)? + "\n"))?;
            }
            Ok(if report.has_diffs() { 2 } else { 0 })
        }
    }
}
