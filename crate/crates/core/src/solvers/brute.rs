//! Exhaustive search over all `3^N` placements.
//!
//! Placements are enumerated depth-first along the topological order, so a
//! task's times are computed once per prefix rather than once per leaf and
//! the work per placement stays constant as `N` grows. Nothing is pruned:
//! every leaf is visited and tested against the utility and budget
//! constraints (precedence holds by construction of the recursions).

use std::time::Instant;

use crate::error::SolveError;
use crate::model::{ObjectiveMode, Scenario, Tier};
use crate::schedule::{CandidateTimes, Evaluator, TaskSchedule, FEASIBILITY_TOL};

use super::SolveOutcome;

/// Running aggregates for a placement prefix.
#[derive(Debug, Clone, Copy, Default)]
struct Prefix {
    cost: f64,
    fog_utility: f64,
    cloud_utility: f64,
    makespan: f64,
    sum_finish: f64,
}

struct Search<'a> {
    ev: &'a Evaluator<'a>,
    budget: f64,
    mode: ObjectiveMode,
    tiers: Vec<Tier>,
    timed: Vec<TaskSchedule>,
    best: Option<(f64, Vec<Tier>)>,
    leaves: u64,
}

impl Search<'_> {
    fn descend(&mut self, depth: usize, acc: Prefix) {
        let graph = self.ev.graph();
        if depth == graph.len() {
            self.leaf(acc);
            return;
        }
        let i = graph.order()[depth];
        let cand = CandidateTimes::compute(graph.preds(i), &self.timed, &self.ev.costs()[i]);
        for tier in Tier::ALL {
            let times = cand.tier_times(tier);
            self.tiers[i] = tier;
            self.timed[i] = times;
            let finish = times.chosen_finish;
            let next = Prefix {
                cost: acc.cost + self.ev.task_cost(i, tier),
                fog_utility: acc.fog_utility + self.ev.fog_term(i, tier),
                cloud_utility: acc.cloud_utility + self.ev.cloud_term(i, tier),
                makespan: if graph.is_sink(i) { acc.makespan.max(finish) } else { acc.makespan },
                sum_finish: acc.sum_finish + finish,
            };
            self.descend(depth + 1, next);
        }
    }

    fn leaf(&mut self, acc: Prefix) {
        self.leaves += 1;
        let feasible = acc.cost <= self.budget + FEASIBILITY_TOL
            && acc.fog_utility >= -FEASIBILITY_TOL
            && acc.cloud_utility >= -FEASIBILITY_TOL;
        if !feasible {
            return;
        }
        let obj = match self.mode {
            ObjectiveMode::Makespan => acc.makespan,
            ObjectiveMode::SumOfFinishTimes => acc.sum_finish,
        };
        let better = match &self.best {
            None => true,
            Some((b, tiers)) => obj < *b || (obj == *b && self.tiers < *tiers),
        };
        if better {
            self.best = Some((obj, self.tiers.clone()));
        }
    }
}

pub fn brute_force_solve(scenario: &Scenario) -> Result<SolveOutcome, SolveError> {
    let start = Instant::now();
    let n = scenario.graph.len();
    let cap = scenario.solver.brute().cap;
    if n > cap {
        return Err(SolveError::TooLarge { n, cap });
    }
    let ev = Evaluator::new(&scenario.graph, &scenario.platform);
    let mut search = Search {
        ev: &ev,
        budget: scenario.budget,
        mode: scenario.objective_mode,
        tiers: vec![Tier::Local; n],
        timed: vec![TaskSchedule::default(); n],
        best: None,
        leaves: 0,
    };
    search.descend(0, Prefix::default());
    let leaves = search.leaves;
    let (_, tiers) = search.best.ok_or(SolveError::Infeasible)?;
    Ok(SolveOutcome::build(scenario, &ev, &tiers, leaves, start))
}
