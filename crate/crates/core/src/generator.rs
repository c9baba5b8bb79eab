//! Randomized instance generator.
//!
//! Sets of random cardinality are drawn until every universe element is
//! covered at least `q` times. Set `i` of cardinality `p_i` costs
//! `100 + 10 * p_i + eta` with `eta` an integer uniform on `[-5, 5]`, so
//! cost tracks size with a small perturbation. The cost box is the given
//! radius around those integer costs. `n` is whatever the coverage loop
//! produced; duplicate sets may occur and are kept.

use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::model::{IscpInstance, Radius};
use crate::rng::{derive_seed, stream_rng, StreamTag};

/// Iteration cap; coverage succeeds long before this for any sane config.
const MAX_ITERATIONS: usize = 1_000_000;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct GeneratorConfig {
    /// Universe size.
    pub m: usize,
    /// Minimum coverage multiplicity.
    pub q: u32,
    pub radius: Radius,
    pub seed: u64,
}

impl GeneratorConfig {
    fn validate(&self) -> Result<()> {
        if self.m < 1 {
            return Err(Error::InvalidParameter("m must be >= 1".into()));
        }
        if self.q < 1 {
            return Err(Error::InvalidParameter("q must be >= 1".into()));
        }
        match self.radius {
            // the smallest possible cost is 105, so radii up to there keep
            // lower bounds positive
            Radius::Abs { abs } if !(0.0..105.0).contains(&abs) => Err(Error::InvalidParameter(
                format!("absolute radius must lie in [0, 105), got {abs}"),
            )),
            Radius::Rel { rel } if !(0.0..1.0).contains(&rel) => Err(Error::InvalidParameter(
                format!("relative radius must lie in [0, 1), got {rel}"),
            )),
            _ => Ok(()),
        }
    }
}

/// Generates one instance.
pub fn generate(config: &GeneratorConfig) -> Result<IscpInstance> {
    config.validate()?;
    let mut rng = stream_rng(config.seed, StreamTag::Generate, 0);
    let m = config.m;
    let mut coverage = vec![0u32; m];
    let mut sets: Vec<Vec<u32>> = Vec::new();
    let mut costs: Vec<f64> = Vec::new();
    while coverage.iter().any(|&c| c < config.q) {
        if sets.len() >= MAX_ITERATIONS {
            return Err(Error::InvalidParameter(
                "generator iteration cap exceeded".into(),
            ));
        }
        let p = rng.gen_range(1..=m);
        let elements: Vec<u32> = rand::seq::index::sample(&mut rng, m, p)
            .into_iter()
            .map(|e| e as u32 + 1)
            .collect();
        for &e in &elements {
            coverage[e as usize - 1] += 1;
        }
        let eta: i64 = rng.gen_range(-5..=5);
        costs.push((100 + 10 * p) as f64 + eta as f64);
        sets.push(elements);
    }
    IscpInstance::new(m, sets, costs, config.radius)
}

/// Generates `count` instances from consecutive derived seeds.
pub fn generate_batch(config: &GeneratorConfig, count: usize) -> Result<Vec<IscpInstance>> {
    if count < 1 {
        return Err(Error::InvalidParameter("count must be >= 1".into()));
    }
    (0..count)
        .map(|j| {
            let child = GeneratorConfig {
                seed: derive_seed(config.seed, j as u64),
                ..*config
            };
            generate(&child)
        })
        .collect()
}
