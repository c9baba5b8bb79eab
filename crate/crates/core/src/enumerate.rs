//! Exact enumeration of every cover the greedy algorithm can output for
//! some scenario in the cost box, with refined per-solution cost intervals.
//!
//! ## How it works
//!
//! The greedy run is deterministic once a scenario is fixed, so the set of
//! reachable outputs is explored by branching over which candidate wins
//! each step. Selecting set `j` with gain `p_j` over a competitor `k` with
//! gain `p_k` means
//!
//! ```text
//! p_k * c_j <= p_j * c_k        (strict when k < j, because ties break
//!                                to the lowest index)
//! ```
//!
//! A branch accumulates one such inequality per competitor per step. Every
//! inequality has exactly two variables, both with positive coefficients on
//! opposite sides, so the system is monotone: iterated bound tightening to
//! a fixed point decides feasibility exactly, and the all-lower-bounds
//! point is a witness scenario. The winner/loser pairs follow the choice
//! order, so the constraint graph is acyclic and propagation settles in at
//! most one sweep per step.
//!
//! At a feasible leaf the propagated bounds also give the exact cost range
//! of the solution over that branch's scenario region: the all-lower and
//! all-upper points are both feasible, so the range is just the sum of the
//! selected components' bounds. Branches reaching the same cover merge by
//! interval hull.
//!
//! Integer mode tightens with exact `i64` ceiling/floor division; strict
//! inequalities become a `+1` offset. Continuous mode keeps `f64` bounds
//! and honors strictness with a slack of 1e-9 of the widest box component
//! (strictness only matters for witnesses there; it has measure zero).
//!
//! Floor-ratio greedy compares piecewise-constant keys, which no linear
//! system captures, so enumeration only accepts the exact-rational mode.
//! Floor-mode support comes from the sampling side instead.

use std::collections::HashMap;

use serde::{Deserialize, Serialize};

use crate::bitset::BitSet;
use crate::error::{Error, Result};
use crate::greedy::{minimal_covers, GreedyConfig, RatioMode};
use crate::interval::{integer_range, Domain, Interval, IntervalBox, Scenario};
use crate::model::{CoverSolution, IscpInstance};

/// Default cap on explored branch nodes.
pub const DEFAULT_NODE_LIMIT: u64 = 1_000_000;

/// Relative slack standing in for strict inequalities in continuous mode.
const STRICT_SLACK_REL: f64 = 1e-9;

/// One two-variable ratio comparison: `lhs_coef * c[lhs] <= rhs_coef * c[rhs]`
/// (`<` when strict).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct RatioConstraint {
    pub lhs: usize,
    pub lhs_coef: u32,
    pub rhs: usize,
    pub rhs_coef: u32,
    pub strict: bool,
}

impl RatioConstraint {
    /// Encodes "set `winner` (gain `winner_gain`) beats `loser` (gain
    /// `loser_gain`)" under lowest-index tie-breaking.
    pub fn beats(winner: usize, winner_gain: u32, loser: usize, loser_gain: u32) -> Self {
        RatioConstraint {
            lhs: winner,
            lhs_coef: loser_gain,
            rhs: loser,
            rhs_coef: winner_gain,
            strict: loser < winner,
        }
    }

    fn holds_at(&self, c: &Scenario) -> bool {
        let lhs = self.lhs_coef as f64 * c.values[self.lhs];
        let rhs = self.rhs_coef as f64 * c.values[self.rhs];
        if self.strict {
            lhs < rhs
        } else {
            lhs <= rhs
        }
    }
}

/// Working bounds, exact integers or reals depending on the domain.
#[derive(Debug, Clone)]
enum Bounds {
    Int(Vec<(i64, i64)>),
    Cont(Vec<(f64, f64)>),
}

impl Bounds {
    fn from_box(box_: &IntervalBox, domain: Domain) -> Result<Bounds> {
        match domain {
            Domain::Integer => {
                let mut v = Vec::with_capacity(box_.len());
                for (i, c) in box_.components().iter().enumerate() {
                    v.push(integer_range(*c, i)?);
                }
                Ok(Bounds::Int(v))
            }
            Domain::Continuous => Ok(Bounds::Cont(
                box_.components().iter().map(|c| (c.lo, c.hi)).collect(),
            )),
        }
    }

    fn lower_point(&self) -> Scenario {
        match self {
            Bounds::Int(v) => Scenario::new(v.iter().map(|&(lo, _)| lo as f64).collect()),
            Bounds::Cont(v) => Scenario::new(v.iter().map(|&(lo, _)| lo).collect()),
        }
    }

    fn component(&self, i: usize) -> Interval {
        match self {
            Bounds::Int(v) => Interval::new(v[i].0 as f64, v[i].1 as f64),
            Bounds::Cont(v) => Interval::new(v[i].0, v[i].1),
        }
    }

    fn to_box(&self, n: usize) -> IntervalBox {
        IntervalBox::new((0..n).map(|i| self.component(i)).collect())
    }
}

fn ceil_div(a: i64, b: i64) -> i64 {
    debug_assert!(b > 0);
    a.div_euclid(b) + if a.rem_euclid(b) != 0 { 1 } else { 0 }
}

/// A conjunction of ratio constraints over a cost box.
#[derive(Debug, Clone)]
pub struct ConstraintSystem {
    constraints: Vec<RatioConstraint>,
    box_: IntervalBox,
    domain: Domain,
}

impl ConstraintSystem {
    pub fn new(box_: IntervalBox, domain: Domain) -> Self {
        ConstraintSystem {
            constraints: Vec::new(),
            box_,
            domain,
        }
    }

    pub fn push(&mut self, c: RatioConstraint) {
        self.constraints.push(c);
    }

    pub fn constraints(&self) -> &[RatioConstraint] {
        &self.constraints
    }

    /// Intersects one box component with `iv` (for plain variable bounds).
    pub fn restrict_component(&mut self, index: usize, iv: Interval) {
        let cur = self.box_.component(index);
        let lo = cur.lo.max(iv.lo);
        let hi = cur.hi.min(iv.hi);
        let comps: Vec<Interval> = self
            .box_
            .components()
            .iter()
            .enumerate()
            .map(|(i, &c)| {
                if i == index {
                    // may be empty; propagation reports infeasibility
                    Interval { lo, hi }
                } else {
                    c
                }
            })
            .collect();
        self.box_ = IntervalBox::new(comps);
    }

    /// Decides satisfiability over the box; returns a witness scenario when
    /// satisfiable.
    pub fn feasible(&self) -> Option<Scenario> {
        let empty_component = self
            .box_
            .components()
            .iter()
            .any(|c| c.lo > c.hi);
        if empty_component {
            return None;
        }
        let mut bounds = match Bounds::from_box(&self.box_, self.domain) {
            Ok(b) => b,
            Err(_) => return None, // no integer point in some component
        };
        if !propagate(&mut bounds, &self.constraints, self.box_.max_width()) {
            return None;
        }
        let witness = bounds.lower_point();
        // exact re-check; catches strictness on fully degenerate boxes where
        // the continuous slack vanishes
        if self.constraints.iter().all(|c| c.holds_at(&witness)) {
            Some(witness)
        } else {
            None
        }
    }
}

/// Tightens `bounds` to the fixed point of all constraints. Returns false
/// if some variable's range empties.
fn propagate(bounds: &mut Bounds, constraints: &[RatioConstraint], max_width: f64) -> bool {
    let sweep_cap = constraints.len() + 8;
    for sweep in 0..sweep_cap {
        let mut changed = false;
        match bounds {
            Bounds::Int(v) => {
                for c in constraints {
                    let a = c.lhs_coef as i64;
                    let b = c.rhs_coef as i64;
                    let s = c.strict as i64;
                    // a*x + s <= b*y  =>  x <= (b*hi_y - s)/a,  y >= (a*lo_x + s)/b
                    let new_hi = (b * v[c.rhs].1 - s).div_euclid(a);
                    if new_hi < v[c.lhs].1 {
                        v[c.lhs].1 = new_hi;
                        changed = true;
                    }
                    let new_lo = ceil_div(a * v[c.lhs].0 + s, b);
                    if new_lo > v[c.rhs].0 {
                        v[c.rhs].0 = new_lo;
                        changed = true;
                    }
                }
                if v.iter().any(|&(lo, hi)| lo > hi) {
                    return false;
                }
            }
            Bounds::Cont(v) => {
                let eps = STRICT_SLACK_REL * max_width;
                for c in constraints {
                    let a = c.lhs_coef as f64;
                    let b = c.rhs_coef as f64;
                    let s = if c.strict { eps } else { 0.0 };
                    let new_hi = (b * v[c.rhs].1 - s) / a;
                    if new_hi < v[c.lhs].1 {
                        v[c.lhs].1 = new_hi;
                        changed = true;
                    }
                    let new_lo = (a * v[c.lhs].0 + s) / b;
                    if new_lo > v[c.rhs].0 {
                        v[c.rhs].0 = new_lo;
                        changed = true;
                    }
                }
                if v.iter().any(|&(lo, hi)| lo > hi) {
                    return false;
                }
            }
        }
        if !changed {
            return true;
        }
        debug_assert!(sweep + 1 < sweep_cap, "propagation failed to settle");
    }
    true
}

/// One feasible branch reaching a leaf: the choice order, the propagated
/// component bounds, and the all-lower-bounds witness.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct LeafBranch {
    pub order: Vec<usize>,
    pub bounds: IntervalBox,
    pub witness: Scenario,
}

/// A member of the united approximate solution set.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ApproxSolutionRecord {
    pub solution: CoverSolution,
    pub refined_cost: Interval,
    pub naive_cost: Interval,
    pub branch_count: u32,
    pub leaves: Vec<LeafBranch>,
    /// Sampled frequency, filled by the analysis stage.
    pub probability: Option<f64>,
}

impl ApproxSolutionRecord {
    /// A witness scenario on which greedy outputs this solution.
    pub fn witness(&self) -> &Scenario {
        &self.leaves[0].witness
    }
}

/// The united approximate solution set with refined cost intervals.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct UnitedApproxSet {
    pub records: Vec<ApproxSolutionRecord>,
    pub domain: Domain,
    pub nodes_explored: u64,
}

impl UnitedApproxSet {
    pub fn find(&self, solution: &CoverSolution) -> Option<&ApproxSolutionRecord> {
        self.records.iter().find(|r| &r.solution == solution)
    }

    /// Report rows: solution bits, refined interval, branch count.
    pub fn report(&self) -> Vec<ApproxReportEntry> {
        self.records
            .iter()
            .map(|r| ApproxReportEntry {
                solution: r.solution.bits(),
                refined: [r.refined_cost.lo, r.refined_cost.hi],
                branches: r.branch_count,
                probability: r.probability,
            })
            .collect()
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ApproxReportEntry {
    pub solution: Vec<u8>,
    pub refined: [f64; 2],
    pub branches: u32,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub probability: Option<f64>,
}

/// Cost range of `solution` over a set of leaf branches: per leaf the sum
/// of the propagated bounds of the selected components, hulled across
/// leaves.
pub fn refine_cost_interval(solution: &CoverSolution, leaves: &[LeafBranch]) -> Interval {
    let mut hull: Option<Interval> = None;
    for leaf in leaves {
        let mut sum = Interval::degenerate(0.0);
        for i in solution.iter_selected() {
            sum = sum + leaf.bounds.component(i);
        }
        hull = Some(match hull {
            None => sum,
            Some(h) => h.hull(sum),
        });
    }
    hull.expect("refine over empty leaf list")
}

/// Enumerates the full set of greedy-reachable covers.
///
/// Requires the exact-rational ratio mode. Aborts with a partial result if
/// more than `node_limit` branch nodes get explored.
pub fn enumerate_approx(
    instance: &IscpInstance,
    cfg: GreedyConfig,
    domain: Domain,
    node_limit: u64,
) -> Result<UnitedApproxSet> {
    if cfg.ratio_mode != RatioMode::ExactRational {
        return Err(Error::FloorModeUnsupported);
    }
    let initial = Bounds::from_box(instance.cost_box(), domain)?;
    let mut dfs = Dfs {
        instance,
        max_width: instance.cost_box().max_width(),
        node_limit,
        nodes: 0,
        constraints: Vec::new(),
        order: Vec::new(),
        found: HashMap::new(),
        hit_limit: false,
    };
    let covered = BitSet::new(instance.m());
    dfs.explore(&covered, initial);

    let mut records: Vec<ApproxSolutionRecord> = dfs
        .found
        .into_iter()
        .map(|(solution, leaves)| {
            let refined_cost = refine_cost_interval(&solution, &leaves);
            let naive_cost = instance
                .interval_cost_naive(&solution)
                .expect("solution length matches instance");
            ApproxSolutionRecord {
                solution,
                refined_cost,
                naive_cost,
                branch_count: leaves.len() as u32,
                leaves,
                probability: None,
            }
        })
        .collect();
    records.sort_by(|a, b| a.solution.cmp(&b.solution));
    let set = UnitedApproxSet {
        records,
        domain,
        nodes_explored: dfs.nodes,
    };
    if dfs.hit_limit {
        return Err(Error::NodeLimitExceeded {
            limit: node_limit,
            found: set.records.len(),
            partial: Box::new(set),
        });
    }
    Ok(set)
}

struct Dfs<'a> {
    instance: &'a IscpInstance,
    max_width: f64,
    node_limit: u64,
    nodes: u64,
    constraints: Vec<RatioConstraint>,
    order: Vec<usize>,
    found: HashMap<CoverSolution, Vec<LeafBranch>>,
    hit_limit: bool,
}

impl Dfs<'_> {
    fn explore(&mut self, covered: &BitSet, bounds: Bounds) {
        if covered.is_full() {
            let n = self.instance.n();
            let solution = CoverSolution::from_indices(n, &self.order);
            let witness = bounds.lower_point();
            debug_assert!(
                {
                    let (out, _) = crate::greedy::greedy_cover(
                        self.instance,
                        &witness,
                        GreedyConfig::exact(),
                    )
                    .unwrap();
                    out == solution
                },
                "leaf witness does not reproduce its solution"
            );
            self.found.entry(solution).or_default().push(LeafBranch {
                order: self.order.clone(),
                bounds: bounds.to_box(n),
                witness,
            });
            return;
        }
        // candidates and their gains are scenario-independent at the node
        let candidates: Vec<(usize, u32)> = (0..self.instance.n())
            .filter(|&j| !self.order.contains(&j))
            .filter_map(|j| {
                let gain = covered.count_new(self.instance.set_mask(j)) as u32;
                (gain > 0).then_some((j, gain))
            })
            .collect();
        for &(j, pj) in &candidates {
            if self.hit_limit {
                return;
            }
            self.nodes += 1;
            if self.nodes > self.node_limit {
                self.hit_limit = true;
                return;
            }
            let parent_len = self.constraints.len();
            for &(k, pk) in &candidates {
                if k != j {
                    self.constraints.push(RatioConstraint::beats(j, pj, k, pk));
                }
            }
            let mut child = bounds.clone();
            if propagate(&mut child, &self.constraints, self.max_width) {
                let mut child_covered = covered.clone();
                child_covered.union_with(self.instance.set_mask(j));
                self.order.push(j);
                self.explore(&child_covered, child);
                self.order.pop();
            }
            self.constraints.truncate(parent_len);
        }
    }
}

/// Enumerates every cover that is optimal for at least one scenario.
///
/// For a fixed cover `x` the most favorable scenario is extreme: selected
/// components at their lower bounds, the rest at their upper bounds. `x` is
/// possibly optimal iff it is optimal there, so one comparison per minimal
/// cover decides membership.
pub fn enumerate_optimal(instance: &IscpInstance) -> Result<Vec<CoverSolution>> {
    let covers = minimal_covers(instance)?;
    let box_ = instance.cost_box();
    let mut out = Vec::new();
    for x in &covers {
        let extreme = Scenario::new(
            (0..instance.n())
                .map(|i| {
                    let c = box_.component(i);
                    if x.is_selected(i) {
                        c.lo
                    } else {
                        c.hi
                    }
                })
                .collect(),
        );
        let own = instance.cost(x, &extreme)?;
        let best_other = covers
            .iter()
            .map(|y| instance.cost(y, &extreme).expect("lengths match"))
            .fold(f64::INFINITY, f64::min);
        if own <= best_other {
            out.push(x.clone());
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixture::worked_example;
    use crate::greedy::{exact_optimum, greedy_cover};
    use crate::interval::sample_scenario;
    use crate::model::Radius;
    use crate::rng::{stream_rng, StreamTag};

    fn solution(bits: &[u8]) -> CoverSolution {
        CoverSolution::from_bits(bits)
    }

    #[test]
    fn feasible_simple_ordering() {
        // c7 <= c11 over the worked-example box
        let inst = worked_example();
        let mut sys = ConstraintSystem::new(inst.cost_box().clone(), Domain::Integer);
        sys.push(RatioConstraint::beats(6, 4, 10, 4));
        let witness = sys.feasible().expect("satisfiable ordering");
        assert!(witness.values[6] <= witness.values[10]);
        assert!(inst.cost_box().contains(&witness));
    }

    #[test]
    fn infeasible_on_empty_intersection() {
        let inst = worked_example();
        let mut sys = ConstraintSystem::new(inst.cost_box().clone(), Domain::Integer);
        // c7 >= 149 against c7 in [138, 148]
        sys.restrict_component(6, Interval::new(149.0, 1000.0));
        assert!(sys.feasible().is_none());
    }

    #[test]
    fn first_step_system_for_s7_is_feasible() {
        // step-1 comparisons for choosing S7 over all ten competitors
        let inst = worked_example();
        for domain in [Domain::Integer, Domain::Continuous] {
            let mut sys = ConstraintSystem::new(inst.cost_box().clone(), domain);
            let gains = [2u32, 2, 2, 3, 3, 3, 4, 4, 4, 4, 4];
            for (k, &gain) in gains.iter().enumerate() {
                if k != 6 {
                    sys.push(RatioConstraint::beats(6, 4, k, gain));
                }
            }
            let witness = sys.feasible().expect("S7 can win the first step");
            let (_, trace) = greedy_cover(&inst, &witness, GreedyConfig::exact()).unwrap();
            assert_eq!(trace.steps[0].chosen, 6);
        }
    }

    #[test]
    fn strict_constraint_on_degenerate_box_is_infeasible() {
        let box_ = IntervalBox::new(vec![Interval::degenerate(5.0), Interval::degenerate(5.0)]);
        for domain in [Domain::Integer, Domain::Continuous] {
            let mut sys = ConstraintSystem::new(box_.clone(), domain);
            // higher index beating lower strictly: c2 < c1, impossible at 5 = 5
            sys.push(RatioConstraint::beats(1, 1, 0, 1));
            assert!(sys.feasible().is_none(), "{domain:?}");
            // the non-strict direction is fine
            let mut sys = ConstraintSystem::new(box_.clone(), domain);
            sys.push(RatioConstraint::beats(0, 1, 1, 1));
            assert!(sys.feasible().is_some());
        }
    }

    #[test]
    fn worked_example_united_set_has_exactly_seven_solutions() {
        let inst = worked_example();
        let set =
            enumerate_approx(&inst, GreedyConfig::exact(), Domain::Integer, DEFAULT_NODE_LIMIT)
                .unwrap();
        let expected = [
            solution(&[1, 0, 0, 1, 0, 0, 1, 0, 0, 0, 0]),
            solution(&[1, 0, 0, 0, 0, 0, 1, 0, 1, 0, 0]),
            solution(&[1, 0, 0, 0, 0, 0, 1, 0, 0, 0, 1]),
            solution(&[0, 0, 0, 0, 0, 0, 0, 1, 1, 0, 0]),
            solution(&[0, 0, 0, 0, 0, 0, 0, 0, 1, 1, 0]),
            solution(&[1, 0, 0, 0, 0, 0, 0, 0, 1, 0, 1]),
            solution(&[1, 0, 0, 0, 0, 0, 0, 0, 0, 1, 1]),
        ];
        assert_eq!(set.records.len(), 7);
        for sol in &expected {
            assert!(set.find(sol).is_some(), "missing {sol}");
        }
    }

    #[test]
    fn refined_intervals_on_worked_example() {
        let inst = worked_example();
        let set =
            enumerate_approx(&inst, GreedyConfig::exact(), Domain::Integer, DEFAULT_NODE_LIMIT)
                .unwrap();
        let x1 = set
            .find(&solution(&[1, 0, 0, 1, 0, 0, 1, 0, 0, 0, 0]))
            .unwrap();
        assert_eq!(x1.refined_cost, Interval::new(382.0, 410.0));
        let x4 = set
            .find(&solution(&[0, 0, 0, 0, 0, 0, 0, 1, 1, 0, 0]))
            .unwrap();
        assert_eq!(x4.refined_cost, Interval::new(278.0, 295.0));
    }

    #[test]
    fn refined_is_subset_of_naive_and_witness_cost_inside() {
        let inst = worked_example();
        for domain in [Domain::Integer, Domain::Continuous] {
            let set =
                enumerate_approx(&inst, GreedyConfig::exact(), domain, DEFAULT_NODE_LIMIT).unwrap();
            for rec in &set.records {
                assert!(rec.refined_cost.is_subset_of(rec.naive_cost));
                for leaf in &rec.leaves {
                    let cost = inst.cost(&rec.solution, &leaf.witness).unwrap();
                    assert!(rec.refined_cost.contains(cost));
                }
            }
        }
    }

    #[test]
    fn witnesses_reproduce_their_solutions() {
        let inst = worked_example();
        let set =
            enumerate_approx(&inst, GreedyConfig::exact(), Domain::Integer, DEFAULT_NODE_LIMIT)
                .unwrap();
        for rec in &set.records {
            for leaf in &rec.leaves {
                let (out, _) = greedy_cover(&inst, &leaf.witness, GreedyConfig::exact()).unwrap();
                assert_eq!(out, rec.solution);
            }
        }
    }

    #[test]
    fn degenerate_box_enumerates_to_single_greedy_solution() {
        let inst = worked_example();
        let degen = IscpInstance::new(
            7,
            inst.to_data().sets,
            inst.mean_costs().values.clone(),
            Radius::Abs { abs: 0.0 },
        )
        .unwrap();
        for domain in [Domain::Integer, Domain::Continuous] {
            let set = enumerate_approx(&degen, GreedyConfig::exact(), domain, DEFAULT_NODE_LIMIT)
                .unwrap();
            assert_eq!(set.records.len(), 1, "{domain:?}");
            let (sol, _) = greedy_cover(&degen, degen.mean_costs(), GreedyConfig::exact()).unwrap();
            assert_eq!(set.records[0].solution, sol);
            let cost = degen.cost(&sol, degen.mean_costs()).unwrap();
            assert_eq!(set.records[0].refined_cost, Interval::degenerate(cost));
        }
    }

    #[test]
    fn two_set_toy_matches_grid_oracle() {
        // U = {1}, S1 = S2 = {1}, costs [1,3] x [2,4]
        let inst = IscpInstance::new(
            1,
            vec![vec![1], vec![1]],
            vec![2.0, 3.0],
            Radius::Abs { abs: 1.0 },
        )
        .unwrap();
        // oracle: run greedy on every integer scenario of the box
        let mut grid_solutions = std::collections::HashSet::new();
        for c1 in 1..=3 {
            for c2 in 2..=4 {
                let c = Scenario::new(vec![c1 as f64, c2 as f64]);
                let (sol, _) = greedy_cover(&inst, &c, GreedyConfig::exact()).unwrap();
                grid_solutions.insert(sol);
            }
        }
        let set =
            enumerate_approx(&inst, GreedyConfig::exact(), Domain::Integer, DEFAULT_NODE_LIMIT)
                .unwrap();
        let enumerated: std::collections::HashSet<_> =
            set.records.iter().map(|r| r.solution.clone()).collect();
        assert_eq!(enumerated, grid_solutions);
        assert_eq!(set.records.len(), 2);
        // refined interval of the S2-only solution collapses to [2,2]:
        // it wins only when c2 < c1 <= 3
        let s2 = set.find(&solution(&[0, 1])).unwrap();
        assert_eq!(s2.refined_cost, Interval::new(2.0, 2.0));
        assert_eq!(s2.naive_cost, Interval::new(2.0, 4.0));
    }

    #[test]
    fn floor_mode_rejected() {
        let inst = worked_example();
        assert!(matches!(
            enumerate_approx(&inst, GreedyConfig::floor(), Domain::Integer, DEFAULT_NODE_LIMIT),
            Err(Error::FloorModeUnsupported)
        ));
    }

    #[test]
    fn node_limit_returns_partial() {
        let inst = worked_example();
        match enumerate_approx(&inst, GreedyConfig::exact(), Domain::Integer, 3) {
            Err(Error::NodeLimitExceeded { limit, partial, .. }) => {
                assert_eq!(limit, 3);
                assert!(partial.records.len() < 7);
            }
            other => panic!("expected node limit error, got {other:?}"),
        }
    }

    #[test]
    fn optimal_set_of_worked_example() {
        let inst = worked_example();
        let xi = enumerate_optimal(&inst).unwrap();
        assert_eq!(
            xi,
            vec![
                solution(&[0, 0, 0, 0, 0, 0, 0, 0, 1, 1, 0]),
                solution(&[0, 0, 0, 0, 0, 0, 0, 1, 1, 0, 0]),
            ]
        );
    }

    #[test]
    fn optimal_set_members_are_optimal_at_their_extreme_scenario() {
        let inst = worked_example();
        for x in enumerate_optimal(&inst).unwrap() {
            let extreme = Scenario::new(
                (0..inst.n())
                    .map(|i| {
                        let c = inst.cost_box().component(i);
                        if x.is_selected(i) {
                            c.lo
                        } else {
                            c.hi
                        }
                    })
                    .collect(),
            );
            let (_, opt_cost) = exact_optimum(&inst, &extreme).unwrap();
            assert_eq!(inst.cost(&x, &extreme).unwrap(), opt_cost);
        }
    }

    #[test]
    fn optimal_set_on_degenerate_box() {
        let degen = IscpInstance::new(
            2,
            vec![vec![1], vec![2], vec![1, 2]],
            vec![3.0, 3.0, 5.0],
            Radius::Abs { abs: 0.0 },
        )
        .unwrap();
        let xi = enumerate_optimal(&degen).unwrap();
        let (opt, _) = exact_optimum(&degen, degen.mean_costs()).unwrap();
        assert_eq!(xi, vec![opt]);
    }

    #[test]
    fn optimal_set_on_two_set_toy() {
        let inst = IscpInstance::new(
            1,
            vec![vec![1], vec![1]],
            vec![2.0, 3.0],
            Radius::Abs { abs: 1.0 },
        )
        .unwrap();
        let xi = enumerate_optimal(&inst).unwrap();
        assert_eq!(xi.len(), 2);
    }

    #[test]
    fn sampling_support_is_contained_in_enumeration() {
        let inst = worked_example();
        let set =
            enumerate_approx(&inst, GreedyConfig::exact(), Domain::Integer, DEFAULT_NODE_LIMIT)
                .unwrap();
        let mut rng = stream_rng(51, StreamTag::Sample, 0);
        for _ in 0..20_000 {
            let c = sample_scenario(inst.cost_box(), Domain::Integer, &mut rng).unwrap();
            let (sol, _) = greedy_cover(&inst, &c, GreedyConfig::exact()).unwrap();
            assert!(set.find(&sol).is_some(), "sampled {sol} not enumerated");
        }
    }

    #[test]
    fn merging_never_shrinks_refined_interval() {
        let inst = worked_example();
        let set =
            enumerate_approx(&inst, GreedyConfig::exact(), Domain::Integer, DEFAULT_NODE_LIMIT)
                .unwrap();
        for rec in &set.records {
            for leaf in &rec.leaves {
                let single = refine_cost_interval(&rec.solution, std::slice::from_ref(leaf));
                assert!(single.is_subset_of(rec.refined_cost));
            }
        }
    }
}
