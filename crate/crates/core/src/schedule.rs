//! Precedence-driven timing of a placement, device cost, provider utilities
//! and the feasibility checks of the constrained minimisation.
//!
//! Tasks are timed in topological order. For task `n` with predecessor set
//! `pre(n)` (maxima over an empty set are 0):
//!
//! * local: `TR_l = max_k finish(k)`, `TF_l = tau_l + TR_l`
//! * upload: `TF_t = tau_t + max_k TF_l(k)`
//! * fog: `TR_f = max(TF_t, max_k TF_f(k), max_k TF_c(k))`, `TF_f = tau_f + TR_f`
//! * forward: `TF_r = tau_r + max_k TF_f(k)`
//! * cloud: `TR_c = max(TF_t + tau_r, max_k TF_c(k), TF_r)`, `TF_c = tau_c + TR_c`
//!
//! Only the fields of a task's own tier are stored; the others stay 0, which
//! lets every max above run over all predecessors without looking at tiers.
//! Machines have no queues, so independent tasks overlap freely.

use crate::cost::{graph_costs, TaskCosts};
use crate::error::ModelError;
use crate::model::{CloudSpec, FogSpec, ObjectiveMode, Placement, Platform, Scenario, TaskGraph, TaskId, TaskSpec, Tier};

/// Absolute slack used by every feasibility comparison.
pub const FEASIBILITY_TOL: f64 = 1e-9;

/// Ready/finish times of one task. Fields for tiers the task is not placed on are 0.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct TaskSchedule {
    pub ready_local: f64,
    pub ready_fog: f64,
    pub ready_cloud: f64,
    pub finish_local: f64,
    pub finish_tx: f64,
    pub finish_fog: f64,
    pub finish_fwd: f64,
    pub finish_cloud: f64,
    pub chosen_finish: f64,
    pub cost: f64,
}

/// Every candidate time of a task given its already-timed predecessors.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct CandidateTimes {
    pub ready_local: f64,
    pub finish_local: f64,
    pub finish_tx: f64,
    pub ready_fog: f64,
    pub finish_fog: f64,
    pub finish_fwd: f64,
    pub ready_cloud: f64,
    pub finish_cloud: f64,
}

impl CandidateTimes {
    pub fn compute(preds: &[usize], timed: &[TaskSchedule], costs: &TaskCosts) -> Self {
        let (mut any, mut local, mut fog, mut cloud) = (0.0f64, 0.0f64, 0.0f64, 0.0f64);
        for &k in preds {
            let p = &timed[k];
            any = any.max(p.chosen_finish);
            local = local.max(p.finish_local);
            fog = fog.max(p.finish_fog);
            cloud = cloud.max(p.finish_cloud);
        }
        let finish_tx = costs.uplink_time + local;
        let ready_fog = finish_tx.max(fog).max(cloud);
        let finish_fwd = costs.fog_cloud_time + fog;
        let ready_cloud = (finish_tx + costs.fog_cloud_time).max(cloud).max(finish_fwd);
        CandidateTimes {
            ready_local: any,
            finish_local: costs.local_time + any,
            finish_tx,
            ready_fog,
            finish_fog: costs.fog_time + ready_fog,
            finish_fwd,
            ready_cloud,
            finish_cloud: costs.cloud_time + ready_cloud,
        }
    }

    pub fn finish(&self, tier: Tier) -> f64 {
        match tier {
            Tier::Local => self.finish_local,
            Tier::Fog => self.finish_fog,
            Tier::Cloud => self.finish_cloud,
        }
    }

    /// Keeps only the fields that belong to `tier`.
    pub fn tier_times(&self, tier: Tier) -> TaskSchedule {
        match tier {
            Tier::Local => TaskSchedule {
                ready_local: self.ready_local,
                finish_local: self.finish_local,
                chosen_finish: self.finish_local,
                ..TaskSchedule::default()
            },
            Tier::Fog => TaskSchedule {
                finish_tx: self.finish_tx,
                ready_fog: self.ready_fog,
                finish_fog: self.finish_fog,
                chosen_finish: self.finish_fog,
                ..TaskSchedule::default()
            },
            Tier::Cloud => TaskSchedule {
                finish_tx: self.finish_tx,
                finish_fwd: self.finish_fwd,
                ready_cloud: self.ready_cloud,
                finish_cloud: self.finish_cloud,
                chosen_finish: self.finish_cloud,
                ..TaskSchedule::default()
            },
        }
    }
}

/// Monetary cost to the device of running one task at `tier`.
pub fn task_cost(task: &TaskSpec, tier: Tier, costs: &TaskCosts, fog: &FogSpec, cloud: &CloudSpec) -> f64 {
    match tier {
        Tier::Local => costs.local_energy,
        Tier::Fog => fog.price * task.data_size,
        Tier::Cloud => cloud.price * task.data_size,
    }
}

/// Fog revenue minus execution energy, less forwarding energy for cloud tasks.
pub fn fog_utility(tasks: &[TaskSpec], tiers: &[Tier], costs: &[TaskCosts], fog: &FogSpec) -> f64 {
    tasks
        .iter()
        .zip(tiers)
        .zip(costs)
        .map(|((t, tier), c)| fog_utility_term(t, *tier, c, fog))
        .sum()
}

/// Contribution of one task to the fog utility.
pub fn fog_utility_term(task: &TaskSpec, tier: Tier, costs: &TaskCosts, fog: &FogSpec) -> f64 {
    match tier {
        Tier::Local => 0.0,
        Tier::Fog => fog.price * task.data_size - costs.fog_energy,
        Tier::Cloud => -costs.fog_cloud_energy,
    }
}

pub fn cloud_utility(tasks: &[TaskSpec], tiers: &[Tier], costs: &[TaskCosts], cloud: &CloudSpec) -> f64 {
    tasks
        .iter()
        .zip(tiers)
        .zip(costs)
        .map(|((t, tier), c)| cloud_utility_term(t, *tier, c, cloud))
        .sum()
}

pub fn cloud_utility_term(task: &TaskSpec, tier: Tier, costs: &TaskCosts, cloud: &CloudSpec) -> f64 {
    match tier {
        Tier::Cloud => cloud.price * task.data_size - costs.cloud_energy,
        _ => 0.0,
    }
}

/// Full timing and accounting of one placement.
#[derive(Debug, Clone, PartialEq)]
pub struct ScheduleResult {
    pub tiers: Vec<Tier>,
    pub tasks: Vec<TaskSchedule>,
    pub makespan: f64,
    pub sum_finish: f64,
    pub total_cost: f64,
    pub fog_utility: f64,
    pub cloud_utility: f64,
}

impl ScheduleResult {
    pub fn objective(&self, mode: ObjectiveMode) -> f64 {
        match mode {
            ObjectiveMode::Makespan => self.makespan,
            ObjectiveMode::SumOfFinishTimes => self.sum_finish,
        }
    }

    pub fn placement(&self) -> Placement {
        Placement::from_tiers(&self.tiers)
    }
}

/// Per-task costs of a graph bundled with the platform, reusable across many
/// placements of the same scenario.
#[derive(Debug, Clone)]
pub struct Evaluator<'a> {
    graph: &'a TaskGraph,
    platform: &'a Platform,
    costs: Vec<TaskCosts>,
}

impl<'a> Evaluator<'a> {
    pub fn new(graph: &'a TaskGraph, platform: &'a Platform) -> Self {
        Evaluator {
            graph,
            platform,
            costs: graph_costs(graph.tasks(), platform),
        }
    }

    pub fn graph(&self) -> &TaskGraph {
        self.graph
    }

    pub fn platform(&self) -> &Platform {
        self.platform
    }

    pub fn costs(&self) -> &[TaskCosts] {
        &self.costs
    }

    pub fn task_cost(&self, index: usize, tier: Tier) -> f64 {
        task_cost(self.graph.task(index), tier, &self.costs[index], &self.platform.fog, &self.platform.cloud)
    }

    pub fn fog_term(&self, index: usize, tier: Tier) -> f64 {
        fog_utility_term(self.graph.task(index), tier, &self.costs[index], &self.platform.fog)
    }

    pub fn cloud_term(&self, index: usize, tier: Tier) -> f64 {
        cloud_utility_term(self.graph.task(index), tier, &self.costs[index], &self.platform.cloud)
    }

    /// Times every task; `tiers[i]` is the tier of task `i + 1`.
    pub fn evaluate_tiers(&self, tiers: &[Tier]) -> ScheduleResult {
        assert_eq!(tiers.len(), self.graph.len(), "one tier per task");
        let n = self.graph.len();
        let mut tasks = vec![TaskSchedule::default(); n];
        for &i in self.graph.order() {
            let cand = CandidateTimes::compute(self.graph.preds(i), &tasks, &self.costs[i]);
            tasks[i] = TaskSchedule {
                cost: self.task_cost(i, tiers[i]),
                ..cand.tier_times(tiers[i])
            };
        }
        self.finish(tiers.to_vec(), tasks)
    }

    pub(crate) fn finish(&self, tiers: Vec<Tier>, tasks: Vec<TaskSchedule>) -> ScheduleResult {
        let makespan = tasks
            .iter()
            .enumerate()
            .filter(|(i, _)| self.graph.is_sink(*i))
            .fold(0.0f64, |m, (_, t)| m.max(t.chosen_finish));
        let sum_finish = tasks.iter().map(|t| t.chosen_finish).sum();
        let total_cost = tasks.iter().map(|t| t.cost).sum();
        let tasks_spec = self.graph.tasks();
        ScheduleResult {
            fog_utility: fog_utility(tasks_spec, &tiers, &self.costs, &self.platform.fog),
            cloud_utility: cloud_utility(tasks_spec, &tiers, &self.costs, &self.platform.cloud),
            tiers,
            tasks,
            makespan,
            sum_finish,
            total_cost,
        }
    }

    pub fn evaluate(&self, placement: &Placement) -> Result<ScheduleResult, ModelError> {
        Ok(self.evaluate_tiers(&placement.to_tiers(self.graph)?))
    }
}

/// Times a placement on a graph.
///
/// `mode` only selects which aggregate [`ScheduleResult::objective`] should
/// be read by callers; both aggregates are always filled in.
pub fn evaluate(
    graph: &TaskGraph,
    placement: &Placement,
    platform: &Platform,
    _mode: ObjectiveMode,
) -> Result<ScheduleResult, ModelError> {
    Evaluator::new(graph, platform).evaluate(placement)
}

/// One failed constraint.
#[derive(Debug, Clone, PartialEq)]
pub struct Violation {
    /// 1..=7.
    pub constraint: u8,
    pub task: Option<TaskId>,
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq)]
pub struct FeasibilityReport {
    pub c1_ok: bool,
    pub c2_ok: bool,
    pub c3_ok: bool,
    pub c4_ok: bool,
    pub c5_ok: bool,
    pub c6_ok: bool,
    pub c7_ok: bool,
    pub violations: Vec<Violation>,
}

impl FeasibilityReport {
    pub fn feasible(&self) -> bool {
        self.flags().iter().all(|&ok| ok)
    }

    pub fn flags(&self) -> [bool; 7] {
        [self.c1_ok, self.c2_ok, self.c3_ok, self.c4_ok, self.c5_ok, self.c6_ok, self.c7_ok]
    }
}

/// Re-checks a result against the precedence (C1-C3), utility (C4) and
/// budget (C7) constraints. C5/C6 hold by construction of [`Tier`].
pub fn check_feasibility(result: &ScheduleResult, scenario: &Scenario) -> FeasibilityReport {
    let graph = &scenario.graph;
    let costs = graph_costs(graph.tasks(), &scenario.platform);
    let mut violations = Vec::new();
    let mut flag = |constraint: u8, task: Option<TaskId>, detail: String| {
        violations.push(Violation { constraint, task, detail });
    };
    let below = |lhs: f64, rhs: f64| lhs < rhs - FEASIBILITY_TOL;

    for (i, c) in costs.iter().enumerate() {
        let id = i as TaskId + 1;
        let t = &result.tasks[i];
        let preds = graph.preds(i);
        let max_of = |f: fn(&TaskSchedule) -> f64| preds.iter().map(|&k| f(&result.tasks[k])).fold(0.0, f64::max);
        match result.tiers[i] {
            Tier::Local => {
                for &k in preds {
                    let pf = result.tasks[k].chosen_finish;
                    if below(t.ready_local, pf) {
                        flag(1, Some(id), format!("TR_l {} < finish of predecessor {} ({pf})", t.ready_local, k + 1));
                    }
                }
            }
            Tier::Fog => {
                for (what, rhs) in [
                    ("TF_t", t.finish_tx),
                    ("max pre TF_f", max_of(|p| p.finish_fog)),
                    ("max pre TF_c", max_of(|p| p.finish_cloud)),
                ] {
                    if below(t.ready_fog, rhs) {
                        flag(2, Some(id), format!("TR_f {} < {what} {rhs}", t.ready_fog));
                    }
                }
            }
            Tier::Cloud => {
                for (what, rhs) in [
                    ("TF_t + tau_r", t.finish_tx + c.fog_cloud_time),
                    ("TF_r", t.finish_fwd),
                    ("max pre TF_c", max_of(|p| p.finish_cloud)),
                ] {
                    if below(t.ready_cloud, rhs) {
                        flag(3, Some(id), format!("TR_c {} < {what} {rhs}", t.ready_cloud));
                    }
                }
            }
        }
    }
    if below(result.fog_utility, 0.0) {
        flag(4, None, format!("fog utility {} < 0", result.fog_utility));
    }
    if below(result.cloud_utility, 0.0) {
        flag(4, None, format!("cloud utility {} < 0", result.cloud_utility));
    }
    if result.total_cost > scenario.budget + FEASIBILITY_TOL {
        flag(7, None, format!("total cost {} exceeds budget {}", result.total_cost, scenario.budget));
    }

    let failed = |c: u8| violations.iter().any(|v| v.constraint == c);
    FeasibilityReport {
        c1_ok: !failed(1),
        c2_ok: !failed(2),
        c3_ok: !failed(3),
        c4_ok: !failed(4),
        c5_ok: true,
        c6_ok: true,
        c7_ok: !failed(7),
        violations,
    }
}
