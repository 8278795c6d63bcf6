//! Three-phase greedy placement.
//!
//! 1. Walk the tasks in topological order. Keep a task local when its local
//!    finish time strictly beats both offload finish times; otherwise send it
//!    to the cloud when the cloud is paid at least its energy
//!    (`P_c * d >= E_c`), else to the fog.
//! 2. While the device cost exceeds the budget, pull the cloud task with the
//!    least cloud energy down to the fog, or once no such task is left push
//!    the fog task with the least fog energy back to the device. Only moves
//!    that make the task strictly cheaper are candidates, so the cost falls
//!    with every move.
//! 3. While the fog utility is negative, pull the cloud task with the largest
//!    `E_s / E_f` (> 1) down to the fog, or else push the fog task with the
//!    smallest `P_f * d / E_f` back to the device.
//!
//! Cost and utilities depend only on the tier of each task, never on the
//! timing, so phases 2 and 3 update running totals exactly per move and the
//! full timing pass runs once at the end. Each task can only move down
//! (cloud -> fog -> local), so phases 2 and 3 make at most `2N` moves between
//! them and candidate selection is a pointer walk over pre-sorted lists.

use std::time::Instant;

use crate::error::SolveError;
use crate::model::{Scenario, Tier};
use crate::schedule::{CandidateTimes, Evaluator, TaskSchedule, FEASIBILITY_TOL};

use super::SolveOutcome;

/// Bookkeeping from one greedy run.
#[derive(Debug, Clone, PartialEq, Default)]
pub struct GreedyTrace {
    /// Decisions in phase 1, moves in phases 2 and 3.
    pub phase_iterations: [u64; 3],
    /// Device cost after the initial pass and after every budget-repair move.
    pub budget_trace: Vec<f64>,
    /// Fog utility after the budget repair and after every utility-repair move.
    pub utility_trace: Vec<f64>,
    /// Phase 3 ran out of moves with the fog utility still negative.
    pub utility_repair_stuck: bool,
}

/// Neumaier-compensated running sum; keeps add/remove bookkeeping from drifting.
#[derive(Debug, Clone, Copy, Default)]
struct RunningSum {
    sum: f64,
    comp: f64,
}

impl RunningSum {
    fn add(&mut self, x: f64) {
        let t = self.sum + x;
        if self.sum.abs() >= x.abs() {
            self.comp += (self.sum - t) + x;
        } else {
            self.comp += (x - t) + self.sum;
        }
        self.sum = t;
    }

    fn value(&self) -> f64 {
        self.sum + self.comp
    }
}

/// `num / den` with `x / 0 = +inf` for `x > 0` and `0 / 0 = 0`.
fn ratio(num: f64, den: f64) -> f64 {
    if den > 0.0 {
        num / den
    } else if num > 0.0 {
        f64::INFINITY
    } else {
        0.0
    }
}

/// Indices sorted by `key`, ties by index.
fn sorted_by(n: usize, key: impl Fn(usize) -> f64) -> Vec<usize> {
    let keys: Vec<f64> = (0..n).map(&key).collect();
    let mut idx: Vec<usize> = (0..n).collect();
    idx.sort_by(|&a, &b| keys[a].total_cmp(&keys[b]).then(a.cmp(&b)));
    idx
}

/// Walks a pre-sorted candidate list, skipping tasks no longer on `tier`.
struct Cursor {
    order: Vec<usize>,
    pos: usize,
}

impl Cursor {
    fn next_on(&mut self, tiers: &[Tier], tier: Tier) -> Option<usize> {
        while self.pos < self.order.len() {
            let i = self.order[self.pos];
            self.pos += 1;
            if tiers[i] == tier {
                return Some(i);
            }
        }
        None
    }
}

pub fn greedy_solve(scenario: &Scenario) -> Result<SolveOutcome, SolveError> {
    greedy_solve_traced(scenario).map(|(outcome, _)| outcome)
}

pub fn greedy_solve_traced(scenario: &Scenario) -> Result<(SolveOutcome, GreedyTrace), SolveError> {
    let start = Instant::now();
    let graph = &scenario.graph;
    let platform = &scenario.platform;
    let ev = Evaluator::new(graph, platform);
    let costs = ev.costs();
    let n = graph.len();
    let mut trace = GreedyTrace::default();

    // Phase 1: initial placement from already-decided predecessors.
    let mut tiers = vec![Tier::Local; n];
    let mut timed = vec![TaskSchedule::default(); n];
    for &i in graph.order() {
        let cand = CandidateTimes::compute(graph.preds(i), &timed, &costs[i]);
        let tier = if cand.finish_local < cand.finish_fog && cand.finish_local < cand.finish_cloud {
            Tier::Local
        } else if platform.cloud.price * graph.task(i).data_size >= costs[i].cloud_energy {
            Tier::Cloud
        } else {
            Tier::Fog
        };
        tiers[i] = tier;
        timed[i] = cand.tier_times(tier);
        trace.phase_iterations[0] += 1;
    }

    let mut total_cost = RunningSum::default();
    let mut fog_utility = RunningSum::default();
    let mut n_cloud = 0usize;
    for (i, &t) in tiers.iter().enumerate() {
        total_cost.add(ev.task_cost(i, t));
        fog_utility.add(ev.fog_term(i, t));
        n_cloud += usize::from(t == Tier::Cloud);
    }
    let relocate = |tiers: &mut [Tier], i: usize, to: Tier, cost: &mut RunningSum, util: &mut RunningSum| {
        let from = tiers[i];
        cost.add(ev.task_cost(i, to));
        cost.add(-ev.task_cost(i, from));
        util.add(ev.fog_term(i, to));
        util.add(-ev.fog_term(i, from));
        tiers[i] = to;
    };

    // Phase 2: budget repair.
    trace.budget_trace.push(total_cost.value());
    let cheaper = |i: usize, from: Tier, to: Tier| ev.task_cost(i, to) < ev.task_cost(i, from);
    let mut by_cloud_energy = Cursor {
        order: {
            let mut v = sorted_by(n, |i| costs[i].cloud_energy);
            v.retain(|&i| cheaper(i, Tier::Cloud, Tier::Fog));
            v
        },
        pos: 0,
    };
    let mut by_fog_energy = Cursor {
        order: {
            let mut v = sorted_by(n, |i| costs[i].fog_energy);
            v.retain(|&i| cheaper(i, Tier::Fog, Tier::Local));
            v
        },
        pos: 0,
    };
    while total_cost.value() > scenario.budget + FEASIBILITY_TOL {
        if let Some(i) = by_cloud_energy.next_on(&tiers, Tier::Cloud) {
            relocate(&mut tiers, i, Tier::Fog, &mut total_cost, &mut fog_utility);
            n_cloud -= 1;
        } else if let Some(i) = by_fog_energy.next_on(&tiers, Tier::Fog) {
            relocate(&mut tiers, i, Tier::Local, &mut total_cost, &mut fog_utility);
        } else {
            return Err(SolveError::Infeasible);
        }
        trace.phase_iterations[1] += 1;
        trace.budget_trace.push(total_cost.value());
    }

    // Phase 3: fog utility repair.
    trace.utility_trace.push(fog_utility.value());
    let forward_ratio = |i: usize| ratio(costs[i].fog_cloud_energy, costs[i].fog_energy);
    let mut by_forward_ratio = Cursor {
        order: {
            let mut v = sorted_by(n, |i| -forward_ratio(i));
            v.retain(|&i| forward_ratio(i) > 1.0);
            v
        },
        pos: 0,
    };
    let mut by_fog_margin = Cursor {
        order: sorted_by(n, |i| ratio(platform.fog.price * graph.task(i).data_size, costs[i].fog_energy)),
        pos: 0,
    };
    while fog_utility.value() < -FEASIBILITY_TOL {
        let pulled = if n_cloud > 0 { by_forward_ratio.next_on(&tiers, Tier::Cloud) } else { None };
        if let Some(i) = pulled {
            relocate(&mut tiers, i, Tier::Fog, &mut total_cost, &mut fog_utility);
            n_cloud -= 1;
        } else if let Some(i) = by_fog_margin.next_on(&tiers, Tier::Fog) {
            relocate(&mut tiers, i, Tier::Local, &mut total_cost, &mut fog_utility);
        } else {
            trace.utility_repair_stuck = true;
            break;
        }
        trace.phase_iterations[2] += 1;
        trace.utility_trace.push(fog_utility.value());
    }

    let iterations = trace.phase_iterations.iter().sum();
    let outcome = SolveOutcome::build(scenario, &ev, &tiers, iterations, start);
    Ok((outcome, trace))
}
