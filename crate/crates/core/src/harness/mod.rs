//! Experiment runner: seeded repetitions, parameter sweeps, solver
//! comparison and scenario diagnostics, with CSV output.
//!
//! Independent cells run on a rayon pool whose size comes from
//! `FOGCLOUD_WORKERS` (default: all cores). Rows are sorted by
//! (sweep value, solver name, seed) before they are written.

mod compare;
mod sweep;
mod table;
mod validate;

use std::path::Path;
use std::time::Instant;

use rayon::prelude::*;

pub use compare::{compare, compare_scenario, CompareSummary, SolverSummary};
pub use sweep::{sweep, sweep_rows, sweep_values, SweepParam, SweepSpec};
pub use table::{write_rows, write_schedule, ROW_HEADER};
pub use validate::{validate, validate_str, Diagnostics};

use crate::error::HarnessError;
use crate::model::{Scenario, SolverKind};
use crate::schedule::check_feasibility;
use crate::solvers::solve;

/// Environment variable holding the worker count.
pub const WORKERS_ENV: &str = "FOGCLOUD_WORKERS";

/// Switches shared by `run` and `sweep`.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct RunOptions {
    /// Record measured solver time in `wall_time`. Off by default so that
    /// identical inputs give identical files.
    pub timing: bool,
    /// Re-check every feasible outcome with `check_feasibility`.
    pub verify: bool,
}

/// One solver run. Metric fields are NaN (written as empty cells) when
/// `status` is not `ok`.
#[derive(Debug, Clone, PartialEq)]
pub struct ResultRow {
    pub scenario_id: String,
    pub solver: SolverKind,
    pub seed: u64,
    pub n_tasks: usize,
    /// NaN outside sweeps.
    pub sweep_value: f64,
    pub makespan: f64,
    pub sum_finish: f64,
    pub total_cost: f64,
    pub fog_utility: f64,
    pub cloud_utility: f64,
    pub n_local: usize,
    pub n_fog: usize,
    pub n_cloud: usize,
    pub feasible: bool,
    pub iterations: u64,
    pub wall_time: f64,
    /// `ok`, or the tag of the solver error.
    pub status: String,
}

impl ResultRow {
    pub fn is_ok(&self) -> bool {
        self.status == "ok"
    }
}

/// Solves `scenario` with `kind` and flattens the outcome into a row.
pub fn solve_row(scenario: &Scenario, kind: SolverKind, scenario_id: &str, sweep_value: f64, opts: RunOptions) -> ResultRow {
    let start = Instant::now();
    let outcome = solve(scenario, kind);
    let elapsed = start.elapsed().as_secs_f64();
    let mut row = ResultRow {
        scenario_id: scenario_id.to_string(),
        solver: kind,
        seed: scenario.seed,
        n_tasks: scenario.graph.len(),
        sweep_value,
        makespan: f64::NAN,
        sum_finish: f64::NAN,
        total_cost: f64::NAN,
        fog_utility: f64::NAN,
        cloud_utility: f64::NAN,
        n_local: 0,
        n_fog: 0,
        n_cloud: 0,
        feasible: false,
        iterations: 0,
        wall_time: if opts.timing { elapsed } else { 0.0 },
        status: "ok".to_string(),
    };
    match outcome {
        Ok(out) => {
            let r = &out.result;
            let (l, f, c) = out.placement.counts();
            row.makespan = r.makespan;
            row.sum_finish = r.sum_finish;
            row.total_cost = r.total_cost;
            row.fog_utility = r.fog_utility;
            row.cloud_utility = r.cloud_utility;
            (row.n_local, row.n_fog, row.n_cloud) = (l, f, c);
            row.feasible = out.feasible;
            row.iterations = out.iterations;
            if opts.verify && out.feasible && !check_feasibility(r, scenario).feasible() {
                row.feasible = false;
                row.status = "verify_failed".to_string();
            }
        }
        Err(e) => row.status = e.tag().to_string(),
    }
    row
}

/// Identifier written in the `scenario_id` column: the file stem.
pub fn scenario_id(path: &Path) -> String {
    path.file_stem()
        .map(|s| s.to_string_lossy().into_owned())
        .unwrap_or_else(|| "scenario".to_string())
}

pub(crate) fn worker_pool() -> rayon::ThreadPool {
    let workers = std::env::var(WORKERS_ENV)
        .ok()
        .and_then(|v| v.trim().parse::<usize>().ok())
        .filter(|&n| n > 0)
        .unwrap_or(0);
    rayon::ThreadPoolBuilder::new()
        .num_threads(workers)
        .build()
        .expect("thread pool")
}

pub(crate) fn sort_rows(rows: &mut [ResultRow]) {
    rows.sort_by(|a, b| {
        a.sweep_value
            .total_cmp(&b.sweep_value)
            .then_with(|| a.solver.name().cmp(b.solver.name()))
            .then_with(|| a.seed.cmp(&b.seed))
    });
}

/// `reps` solves with seeds `seed, seed + 1, ...` (default: the scenario's
/// own seed). Solver errors become rows; only loading can fail.
pub fn run(
    scenario_path: &Path,
    solver: Option<SolverKind>,
    seed: Option<u64>,
    reps: u32,
    opts: RunOptions,
) -> Result<Vec<ResultRow>, HarnessError> {
    let scenario = Scenario::load(scenario_path)?;
    Ok(run_scenario(&scenario, &scenario_id(scenario_path), solver, seed, reps, opts))
}

/// [`run`] on an already loaded scenario.
pub fn run_scenario(
    scenario: &Scenario,
    id: &str,
    solver: Option<SolverKind>,
    seed: Option<u64>,
    reps: u32,
    opts: RunOptions,
) -> Vec<ResultRow> {
    let kind = solver.unwrap_or(scenario.solver.kind);
    let base = seed.unwrap_or(scenario.seed);
    let mut rows: Vec<ResultRow> = worker_pool().install(|| {
        (0..reps as u64)
            .into_par_iter()
            .map(|k| {
                let s = Scenario {
                    seed: base.wrapping_add(k),
                    ..scenario.clone()
                };
                solve_row(&s, kind, id, f64::NAN, opts)
            })
            .collect()
    });
    sort_rows(&mut rows);
    rows
}
