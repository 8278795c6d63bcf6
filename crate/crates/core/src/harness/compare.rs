use std::path::Path;

use crate::error::{HarnessError, SolveError};
use crate::model::{Scenario, SolverKind};
use crate::solvers::solve;

#[derive(Debug, Clone, PartialEq)]
pub struct SolverSummary {
    pub solver: SolverKind,
    /// Repetitions in which this solver returned a feasible outcome.
    pub feasible_runs: u32,
    /// Mean makespan over the repetitions where all three solvers returned a
    /// placement, feasible or not.
    pub mean_makespan: f64,
    /// `(mean - brute mean) / brute mean`.
    pub gap: f64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct CompareSummary {
    pub reps: u32,
    /// Repetitions counted in the means.
    pub common_runs: u32,
    pub solvers: Vec<SolverSummary>,
}

impl CompareSummary {
    pub fn get(&self, kind: SolverKind) -> &SolverSummary {
        self.solvers.iter().find(|s| s.solver == kind).expect("all solvers are summarised")
    }
}

/// Greedy, annealing and brute force on the same scenario for seeds
/// `seed, seed + 1, ...`.
pub fn compare(scenario_path: &Path, seed: Option<u64>, reps: u32) -> Result<CompareSummary, HarnessError> {
    compare_scenario(&Scenario::load(scenario_path)?, seed, reps)
}

pub fn compare_scenario(scenario: &Scenario, seed: Option<u64>, reps: u32) -> Result<CompareSummary, HarnessError> {
    let cap = scenario.solver.brute().cap;
    if scenario.graph.len() > cap {
        return Err(SolveError::TooLarge { n: scenario.graph.len(), cap }.into());
    }
    let base = seed.unwrap_or(scenario.seed);
    let mut sums = [0.0f64; 3];
    let mut feasible = [0u32; 3];
    let mut common = 0u32;
    for k in 0..reps as u64 {
        let s = Scenario { seed: base.wrapping_add(k), ..scenario.clone() };
        let mut spans = [0.0f64; 3];
        let mut all = true;
        for (j, kind) in SolverKind::ALL.into_iter().enumerate() {
            match solve(&s, kind) {
                Ok(out) => {
                    feasible[j] += u32::from(out.feasible);
                    spans[j] = out.result.makespan;
                }
                Err(_) => all = false,
            }
        }
        if all {
            common += 1;
            for j in 0..3 {
                sums[j] += spans[j];
            }
        }
    }
    let means = sums.map(|s| if common > 0 { s / common as f64 } else { f64::NAN });
    let brute = means[2];
    let solvers = SolverKind::ALL
        .into_iter()
        .enumerate()
        .map(|(j, solver)| SolverSummary {
            solver,
            feasible_runs: feasible[j],
            mean_makespan: means[j],
            gap: if solver == SolverKind::Brute { 0.0 } else { (means[j] - brute) / brute },
        })
        .collect();
    Ok(CompareSummary { reps, common_runs: common, solvers })
}
