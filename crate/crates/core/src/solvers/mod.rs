//! Placement solvers: the three-phase greedy heuristic, simulated annealing
//! over the 1/2/3 tier encoding, and exhaustive enumeration.

mod anneal;
mod brute;
mod greedy;
mod rules;

use std::time::Instant;

pub use anneal::{metropolis_accept, sa_solve, SA_STREAM_BASE};
pub use brute::brute_force_solve;
pub use greedy::{greedy_solve, greedy_solve_traced, GreedyTrace};
pub use rules::{classify_power_case, decision_rule, PowerCase, PowerRegime, PowerTerms};

use crate::error::SolveError;
use crate::model::{Placement, Scenario, SolverKind, Tier};
use crate::schedule::{check_feasibility, Evaluator, FeasibilityReport, ScheduleResult};

#[derive(Debug, Clone, PartialEq)]
pub struct SolveOutcome {
    pub placement: Placement,
    pub result: ScheduleResult,
    pub report: FeasibilityReport,
    /// All seven constraints hold.
    pub feasible: bool,
    /// Solver-specific work counter: greedy decisions and moves, annealing
    /// steps, or enumerated placements.
    pub iterations: u64,
    /// Seconds spent inside the solver.
    pub wall_time: f64,
}

impl SolveOutcome {
    pub(crate) fn build(scenario: &Scenario, ev: &Evaluator<'_>, tiers: &[Tier], iterations: u64, start: Instant) -> Self {
        let result = ev.evaluate_tiers(tiers);
        let report = check_feasibility(&result, scenario);
        SolveOutcome {
            placement: result.placement(),
            feasible: report.feasible(),
            report,
            result,
            iterations,
            wall_time: start.elapsed().as_secs_f64(),
        }
    }

    pub fn objective(&self, scenario: &Scenario) -> f64 {
        self.result.objective(scenario.objective_mode)
    }
}

/// Runs the solver named by `kind` with the scenario's parameters.
pub fn solve(scenario: &Scenario, kind: SolverKind) -> Result<SolveOutcome, SolveError> {
    match kind {
        SolverKind::Greedy => greedy_solve(scenario),
        SolverKind::Sa => sa_solve(scenario),
        SolverKind::Brute => brute_force_solve(scenario),
    }
}
