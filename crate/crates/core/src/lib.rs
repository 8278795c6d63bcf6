//! Offloading a chain or DAG of dependent tasks across a mobile device, a
//! fog node and a cloud: cost model, schedule evaluation, placement solvers
//! and an experiment harness.

pub mod cost;
pub mod error;
pub mod generate;
pub mod harness;
pub mod model;
pub mod scenario;
pub mod schedule;
pub mod solvers;

pub use cost::{graph_costs, task_costs, TaskCosts};
pub use error::{HarnessError, ModelError, SolveError};
pub use model::{
    validate_graph, validate_placement, BruteForceConfig, CloudSpec, FogSpec, GeneratorSpec, ObjectiveMode,
    Placement, Platform, RadioLink, SaConfig, Scenario, SolverConfig, SolverKind, TaskGraph, TaskId, TaskSpec,
    Tier,
};
pub use schedule::{
    check_feasibility, evaluate, Evaluator, FeasibilityReport, ScheduleResult, TaskSchedule, Violation,
    FEASIBILITY_TOL,
};
pub use harness::{ResultRow, RunOptions, SweepParam, SweepSpec};
pub use solvers::{brute_force_solve, greedy_solve, sa_solve, solve, SolveOutcome};
