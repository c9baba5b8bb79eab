//! Closed real intervals, interval vectors, and uniform scenario sampling.
//!
//! Only the operations the interval cost function needs are provided:
//! addition and nonnegative scaling. Endpoints are `f64`; every value the
//! instance generator produces is an integer far below 2^53, so integer
//! endpoint arithmetic stays exact.

use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A closed interval `[lo, hi]`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Interval {
    pub lo: f64,
    pub hi: f64,
}

impl Interval {
    /// Panics if `lo > hi`; construction from untrusted data goes through
    /// instance validation instead.
    pub fn new(lo: f64, hi: f64) -> Self {
        assert!(lo <= hi, "interval endpoints out of order: [{lo}, {hi}]");
        Interval { lo, hi }
    }

    pub fn degenerate(v: f64) -> Self {
        Interval { lo: v, hi: v }
    }

    /// Scales by a nonnegative factor.
    pub fn scale(self, alpha: f64) -> Result<Interval> {
        if alpha < 0.0 {
            return Err(Error::NegativeScale(alpha));
        }
        Ok(Interval {
            lo: alpha * self.lo,
            hi: alpha * self.hi,
        })
    }

    pub fn midpoint(self) -> f64 {
        (self.lo + self.hi) / 2.0
    }

    pub fn width(self) -> f64 {
        self.hi - self.lo
    }

    pub fn contains(self, v: f64) -> bool {
        self.lo <= v && v <= self.hi
    }

    pub fn is_subset_of(self, other: Interval) -> bool {
        other.lo <= self.lo && self.hi <= other.hi
    }

    /// Smallest interval containing both.
    pub fn hull(self, other: Interval) -> Interval {
        Interval {
            lo: self.lo.min(other.lo),
            hi: self.hi.max(other.hi),
        }
    }
}

impl std::ops::Add for Interval {
    type Output = Interval;

    fn add(self, other: Interval) -> Interval {
        Interval {
            lo: self.lo + other.lo,
            hi: self.hi + other.hi,
        }
    }
}

/// An interval vector; the cost box the scenarios live in.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct IntervalBox {
    components: Vec<Interval>,
}

impl IntervalBox {
    pub fn new(components: Vec<Interval>) -> Self {
        IntervalBox { components }
    }

    pub fn len(&self) -> usize {
        self.components.len()
    }

    pub fn is_empty(&self) -> bool {
        self.components.is_empty()
    }

    pub fn component(&self, i: usize) -> Interval {
        self.components[i]
    }

    pub fn components(&self) -> &[Interval] {
        &self.components
    }

    pub fn max_width(&self) -> f64 {
        self.components
            .iter()
            .map(|c| c.width())
            .fold(0.0, f64::max)
    }

    pub fn contains(&self, scenario: &Scenario) -> bool {
        scenario.values.len() == self.len()
            && self
                .components
                .iter()
                .zip(&scenario.values)
                .all(|(c, &v)| c.contains(v))
    }

    /// The componentwise-lower corner.
    pub fn lower_corner(&self) -> Scenario {
        Scenario::new(self.components.iter().map(|c| c.lo).collect())
    }

    /// The componentwise-upper corner.
    pub fn upper_corner(&self) -> Scenario {
        Scenario::new(self.components.iter().map(|c| c.hi).collect())
    }

    pub fn midpoint(&self) -> Scenario {
        Scenario::new(self.components.iter().map(|c| c.midpoint()).collect())
    }
}

/// One concrete cost vector drawn from a box.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Scenario {
    pub values: Vec<f64>,
}

impl Scenario {
    pub fn new(values: Vec<f64>) -> Self {
        Scenario { values }
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }
}

/// Whether scenarios range over all reals in the box or only the integers.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Domain {
    Continuous,
    Integer,
}

/// Integer endpoints of the integers contained in `iv`, if any.
pub(crate) fn integer_range(iv: Interval, index: usize) -> Result<(i64, i64)> {
    let lo = iv.lo.ceil();
    let hi = iv.hi.floor();
    if lo > hi {
        return Err(Error::NoIntegerInInterval {
            index,
            lo: iv.lo,
            hi: iv.hi,
        });
    }
    Ok((lo as i64, hi as i64))
}

/// Draws one scenario, componentwise independent and uniform.
///
/// Integer mode draws uniformly from the integers contained in each
/// component and fails if some component contains none.
pub fn sample_scenario<R: Rng>(box_: &IntervalBox, domain: Domain, rng: &mut R) -> Result<Scenario> {
    let mut values = Vec::with_capacity(box_.len());
    match domain {
        Domain::Continuous => {
            for c in box_.components() {
                if c.width() == 0.0 {
                    values.push(c.lo);
                } else {
                    values.push(rng.gen_range(c.lo..=c.hi));
                }
            }
        }
        Domain::Integer => {
            for (i, c) in box_.components().iter().enumerate() {
                let (lo, hi) = integer_range(*c, i)?;
                values.push(rng.gen_range(lo..=hi) as f64);
            }
        }
    }
    Ok(Scenario::new(values))
}
