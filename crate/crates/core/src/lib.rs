//! Set cover under interval cost uncertainty.
//!
//! When the costs of a set cover instance are only known up to intervals,
//! the greedy algorithm's output depends on which scenario (cost vector
//! inside the box) materializes. This crate answers, for a given instance:
//!
//! - which covers the greedy algorithm can output at all, with the exact
//!   cost range each one realizes over the scenarios selecting it
//!   ([`enumerate`]);
//! - how likely each output is under uniform scenarios, and whether any of
//!   them is representative ([`analysis`]);
//! - how those probabilities distribute over randomly generated instance
//!   populations ([`generator`], [`experiment`]).
//!
//! The greedy solver itself, a brute-force exact optimum for small
//! instances, interval primitives, and deterministic stream-seeded
//! randomness round out the toolkit.

pub mod analysis;
pub mod bitset;
pub mod enumerate;
pub mod error;
pub mod experiment;
pub mod fixture;
pub mod generator;
pub mod greedy;
pub mod interval;
pub mod model;
pub mod rng;

pub use analysis::{
    attach_probabilities, classify, cost_histogram, estimate_optimal_probabilities,
    estimate_probabilities, instance_stats, optimal_info, InstanceStats, OptimalInfo,
    ProbabilityEstimate, Representativeness, RepresentativenessPolicy,
};
pub use enumerate::{
    enumerate_approx, enumerate_optimal, refine_cost_interval, ApproxSolutionRecord,
    ConstraintSystem, RatioConstraint, UnitedApproxSet, DEFAULT_NODE_LIMIT,
};
pub use error::{Error, Result};
pub use experiment::{
    run_distribution, run_fixture_report, run_mp, DistributionParams, DistributionVector,
    ExperimentResult, FixtureExpectations, FixtureReport, FixtureRunOptions, MpParams, MpResult,
};
pub use generator::{generate, generate_batch, GeneratorConfig};
pub use greedy::{
    approx_ratio, exact_optimum, greedy_cover, minimal_covers, GreedyConfig, GreedyTrace,
    RatioMode,
};
pub use interval::{sample_scenario, Domain, Interval, IntervalBox, Scenario};
pub use model::{harmonic_bound, CoverSolution, IscpInstance, InstanceData, Radius, Violation};
