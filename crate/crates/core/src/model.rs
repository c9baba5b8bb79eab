//! Instance and solution model for set cover with interval costs.
//!
//! An instance is a universe `{1, .., m}`, a collection of subsets covering
//! it, the mean cost vector, and the cost box around it. A plain set cover
//! instance is the degenerate case of a zero-radius box, so there is a
//! single code path throughout.
//!
//! Instance files are JSON:
//!
//! ```json
//! {"m": 7, "sets": [[3,5], [4,6]], "mean_costs": [119, 117],
//!  "radius": {"abs": 5}}
//! ```
//!
//! where `{"abs": d}` puts every cost in `[c - d, c + d]` and `{"rel": r}`
//! uses a per-component radius `r * c`. Elements are 1-based in files and
//! 0-based internally.

use std::cmp::Ordering;
use std::fmt;
use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::bitset::BitSet;
use crate::error::{Error, Result};
use crate::interval::{Interval, IntervalBox, Scenario};

/// Radius specification for building the cost box around the mean costs.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Radius {
    Abs { abs: f64 },
    Rel { rel: f64 },
}

impl Radius {
    pub fn interval_around(self, mean: f64) -> Interval {
        let delta = match self {
            Radius::Abs { abs } => abs,
            Radius::Rel { rel } => rel * mean,
        };
        Interval::new(mean - delta, mean + delta)
    }
}

/// Raw instance data exactly as stored on disk.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct InstanceData {
    pub m: usize,
    pub sets: Vec<Vec<u32>>,
    pub mean_costs: Vec<f64>,
    pub radius: Radius,
}

/// A single invariant violation found while validating raw data.
#[derive(Debug, Clone, PartialEq)]
pub enum Violation {
    UncoveredElement(u32),
    EmptySet { set: usize },
    ElementOutOfRange { set: usize, element: u32 },
    DuplicateElement { set: usize, element: u32 },
    CostLengthMismatch { sets: usize, costs: usize },
    NonpositiveLowerBound { index: usize, lo: f64 },
    NonfiniteCost { index: usize },
    EmptyUniverse,
    NegativeRadius,
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::UncoveredElement(e) => write!(f, "uncovered element {e}"),
            Violation::EmptySet { set } => write!(f, "set {} is empty", set + 1),
            Violation::ElementOutOfRange { set, element } => {
                write!(f, "set {} has element {element} outside 1..=m", set + 1)
            }
            Violation::DuplicateElement { set, element } => {
                write!(f, "set {} repeats element {element}", set + 1)
            }
            Violation::CostLengthMismatch { sets, costs } => {
                write!(f, "{sets} sets but {costs} mean costs")
            }
            Violation::NonpositiveLowerBound { index, lo } => {
                write!(f, "nonpositive lower bound {lo} at component {}", index + 1)
            }
            Violation::NonfiniteCost { index } => {
                write!(f, "nonfinite mean cost at component {}", index + 1)
            }
            Violation::EmptyUniverse => write!(f, "m must be at least 1"),
            Violation::NegativeRadius => write!(f, "radius must be nonnegative"),
        }
    }
}

/// A validated, immutable interval set cover instance.
#[derive(Debug, Clone)]
pub struct IscpInstance {
    m: usize,
    sets: Vec<Vec<u32>>,
    masks: Vec<BitSet>,
    mean_costs: Scenario,
    cost_box: IntervalBox,
    radius: Radius,
}

impl IscpInstance {
    /// Validates raw data and returns every violated invariant.
    pub fn validate(data: &InstanceData) -> Vec<Violation> {
        let mut out = Vec::new();
        if data.m == 0 {
            out.push(Violation::EmptyUniverse);
        }
        match data.radius {
            Radius::Abs { abs } if abs < 0.0 => out.push(Violation::NegativeRadius),
            Radius::Rel { rel } if rel < 0.0 => out.push(Violation::NegativeRadius),
            _ => {}
        }
        if data.sets.len() != data.mean_costs.len() {
            out.push(Violation::CostLengthMismatch {
                sets: data.sets.len(),
                costs: data.mean_costs.len(),
            });
        }
        let mut covered = vec![false; data.m];
        for (si, set) in data.sets.iter().enumerate() {
            if set.is_empty() {
                out.push(Violation::EmptySet { set: si });
            }
            let mut seen = vec![false; data.m + 1];
            for &e in set {
                if e < 1 || e as usize > data.m {
                    out.push(Violation::ElementOutOfRange {
                        set: si,
                        element: e,
                    });
                    continue;
                }
                if seen[e as usize] {
                    out.push(Violation::DuplicateElement {
                        set: si,
                        element: e,
                    });
                }
                seen[e as usize] = true;
                covered[e as usize - 1] = true;
            }
        }
        for (i, &c) in covered.iter().enumerate() {
            if !c {
                out.push(Violation::UncoveredElement(i as u32 + 1));
            }
        }
        for (i, &c) in data.mean_costs.iter().enumerate() {
            if !c.is_finite() {
                out.push(Violation::NonfiniteCost { index: i });
                continue;
            }
            let iv = data.radius.interval_around(c);
            if iv.lo <= 0.0 {
                out.push(Violation::NonpositiveLowerBound { index: i, lo: iv.lo });
            }
        }
        out
    }

    /// Builds an instance, rejecting invalid data.
    pub fn from_data(data: InstanceData) -> Result<Self> {
        let violations = Self::validate(&data);
        if !violations.is_empty() {
            return Err(Error::InvalidInstance(violations));
        }
        let masks = data
            .sets
            .iter()
            .map(|s| {
                BitSet::from_indices(
                    data.m,
                    &s.iter().map(|&e| e as usize - 1).collect::<Vec<_>>(),
                )
            })
            .collect();
        let cost_box = IntervalBox::new(
            data.mean_costs
                .iter()
                .map(|&c| data.radius.interval_around(c))
                .collect(),
        );
        let mut sets = data.sets;
        for s in &mut sets {
            s.sort_unstable();
        }
        Ok(IscpInstance {
            m: data.m,
            sets,
            masks,
            mean_costs: Scenario::new(data.mean_costs),
            cost_box,
            radius: data.radius,
        })
    }

    /// Convenience constructor from 1-based element lists.
    pub fn new(m: usize, sets: Vec<Vec<u32>>, mean_costs: Vec<f64>, radius: Radius) -> Result<Self> {
        Self::from_data(InstanceData {
            m,
            sets,
            mean_costs,
            radius,
        })
    }

    pub fn to_data(&self) -> InstanceData {
        InstanceData {
            m: self.m,
            sets: self.sets.clone(),
            mean_costs: self.mean_costs.values.clone(),
            radius: self.radius,
        }
    }

    pub fn from_json(json: &str) -> Result<Self> {
        Self::from_data(serde_json::from_str(json)?)
    }

    pub fn from_file(path: impl AsRef<Path>) -> Result<Self> {
        Self::from_json(&std::fs::read_to_string(path)?)
    }

    pub fn write_file(&self, path: impl AsRef<Path>) -> Result<()> {
        let json = serde_json::to_string_pretty(&self.to_data())?;
        std::fs::write(path, json + "\n")?;
        Ok(())
    }

    pub fn m(&self) -> usize {
        self.m
    }

    /// Number of sets in the collection.
    pub fn n(&self) -> usize {
        self.sets.len()
    }

    /// 1-based elements of set `i`, sorted.
    pub fn set_elements(&self, i: usize) -> &[u32] {
        &self.sets[i]
    }

    pub fn set_mask(&self, i: usize) -> &BitSet {
        &self.masks[i]
    }

    pub fn mean_costs(&self) -> &Scenario {
        &self.mean_costs
    }

    pub fn cost_box(&self) -> &IntervalBox {
        &self.cost_box
    }

    pub fn radius(&self) -> Radius {
        self.radius
    }

    /// True iff the selected sets cover the whole universe.
    pub fn is_cover(&self, x: &CoverSolution) -> Result<bool> {
        if x.len() != self.n() {
            return Err(Error::LengthMismatch {
                expected: self.n(),
                actual: x.len(),
            });
        }
        let mut covered = BitSet::new(self.m);
        for i in x.iter_selected() {
            covered.union_with(&self.masks[i]);
        }
        Ok(covered.is_full())
    }

    /// Cost of a selection under a fixed scenario; defined for any selection.
    pub fn cost(&self, x: &CoverSolution, c: &Scenario) -> Result<f64> {
        if x.len() != self.n() || c.len() != self.n() {
            return Err(Error::LengthMismatch {
                expected: self.n(),
                actual: if x.len() != self.n() { x.len() } else { c.len() },
            });
        }
        Ok(x.iter_selected().map(|i| c.values[i]).sum())
    }

    /// Endpoint sum of the selected cost intervals (the unrefined range).
    pub fn interval_cost_naive(&self, x: &CoverSolution) -> Result<Interval> {
        if x.len() != self.n() {
            return Err(Error::LengthMismatch {
                expected: self.n(),
                actual: x.len(),
            });
        }
        let mut acc = Interval::degenerate(0.0);
        for i in x.iter_selected() {
            acc = acc + self.cost_box.component(i);
        }
        Ok(acc)
    }
}

/// Harmonic number `H(m) = 1 + 1/2 + .. + 1/m`, the greedy guarantee.
pub fn harmonic_bound(m: usize) -> Result<f64> {
    if m == 0 {
        return Err(Error::ZeroUniverse);
    }
    Ok((1..=m).map(|k| 1.0 / k as f64).sum())
}

/// A selection of sets as a packed bit vector of length `n`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CoverSolution {
    words: Vec<u64>,
    n: usize,
}

impl CoverSolution {
    pub fn empty(n: usize) -> Self {
        CoverSolution {
            words: vec![0; n.div_ceil(64)],
            n,
        }
    }

    pub fn from_indices(n: usize, indices: &[usize]) -> Self {
        let mut s = CoverSolution::empty(n);
        for &i in indices {
            s.select(i);
        }
        s
    }

    pub fn from_bits(bits: &[u8]) -> Self {
        let mut s = CoverSolution::empty(bits.len());
        for (i, &b) in bits.iter().enumerate() {
            if b != 0 {
                s.select(i);
            }
        }
        s
    }

    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    pub fn select(&mut self, i: usize) {
        debug_assert!(i < self.n);
        self.words[i / 64] |= 1 << (i % 64);
    }

    pub fn deselect(&mut self, i: usize) {
        debug_assert!(i < self.n);
        self.words[i / 64] &= !(1 << (i % 64));
    }

    pub fn is_selected(&self, i: usize) -> bool {
        self.words[i / 64] & (1 << (i % 64)) != 0
    }

    pub fn selected_count(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn iter_selected(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.n).filter(move |&i| self.is_selected(i))
    }

    /// Bits as 0/1 in index order, for reports.
    pub fn bits(&self) -> Vec<u8> {
        (0..self.n).map(|i| self.is_selected(i) as u8).collect()
    }

    /// Compact string form, e.g. `10010010000`.
    pub fn bit_string(&self) -> String {
        (0..self.n)
            .map(|i| if self.is_selected(i) { '1' } else { '0' })
            .collect()
    }
}

impl fmt::Display for CoverSolution {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.bit_string())
    }
}

/// Lexicographic order on the bit sequence `(x1, .., xn)`.
impl Ord for CoverSolution {
    fn cmp(&self, other: &Self) -> Ordering {
        for i in 0..self.n.min(other.n) {
            match (self.is_selected(i), other.is_selected(i)) {
                (false, true) => return Ordering::Less,
                (true, false) => return Ordering::Greater,
                _ => {}
            }
        }
        self.n.cmp(&other.n)
    }
}

impl PartialOrd for CoverSolution {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Serialize for CoverSolution {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        self.bits().serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for CoverSolution {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let bits = Vec::<u8>::deserialize(deserializer)?;
        Ok(CoverSolution::from_bits(&bits))
    }
}
