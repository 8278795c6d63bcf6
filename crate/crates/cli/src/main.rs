//! `fogcloud`: run, sweep, compare and validate offloading scenarios.

use std::fs::File;
use std::io::{self, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{Context, Result};
use clap::{Args, Parser, Subcommand};
use fogcloud_core::harness::{self, RunOptions, SweepParam, SweepSpec};
use fogcloud_core::{solve, Scenario, SolverKind};

#[derive(Parser)]
#[command(name = "fogcloud", version, about = "Device/fog/cloud task offloading experiments")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Output {
    /// Record measured solver time in the wall_time column (makes output run-dependent).
    #[arg(long)]
    timing: bool,
    /// Re-check every feasible outcome against all constraints.
    #[arg(long)]
    verify: bool,
}

impl Output {
    fn options(&self) -> RunOptions {
        RunOptions { timing: self.timing, verify: self.verify }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Solve a scenario for one or more seeds and print a result table.
    Run {
        #[arg(long)]
        scenario: PathBuf,
        /// greedy, sa or brute (default: the scenario's solver.kind).
        #[arg(long)]
        solver: Option<SolverKind>,
        #[arg(long)]
        seed: Option<u64>,
        #[arg(long, default_value_t = 1)]
        reps: u32,
        /// Write the result table here instead of stdout.
        #[arg(long)]
        out: Option<PathBuf>,
        /// Also write the per-task schedule of the first repetition.
        #[arg(long)]
        schedule: Option<PathBuf>,
        #[command(flatten)]
        output: Output,
    },
    /// Rewrite one parameter over evenly spaced values and solve at each.
    Sweep {
        #[arg(long)]
        scenario: PathBuf,
        /// data-size, budget, fog-price or task-count.
        #[arg(long)]
        param: SweepParam,
        #[arg(long)]
        from: f64,
        #[arg(long)]
        to: f64,
        #[arg(long)]
        steps: u32,
        #[arg(long, default_value_t = 1)]
        reps: u32,
        /// Comma-separated solver names.
        #[arg(long, value_delimiter = ',', default_value = "greedy,sa,brute")]
        solvers: Vec<SolverKind>,
        #[arg(long)]
        out: PathBuf,
        #[command(flatten)]
        output: Output,
    },
    /// Mean makespan of every solver and its gap to brute force.
    Compare {
        #[arg(long)]
        scenario: PathBuf,
        #[arg(long)]
        seed: Option<u64>,
        #[arg(long, default_value_t = 1)]
        reps: u32,
    },
    /// Check a scenario file and report problems.
    Validate {
        #[arg(long)]
        scenario: PathBuf,
    },
}

fn create(path: &Path) -> Result<File> {
    File::create(path).with_context(|| format!("cannot create {}", path.display()))
}

fn main() -> ExitCode {
    match dispatch(Cli::parse().command) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}

fn dispatch(command: Command) -> Result<ExitCode> {
    match command {
        Command::Run { scenario, solver, seed, reps, out, schedule, output } => {
            let rows = harness::run(&scenario, solver, seed, reps, output.options())?;
            match out {
                Some(path) => harness::write_rows(create(&path)?, &rows)?,
                None => harness::write_rows(io::stdout().lock(), &rows)?,
            }
            if let Some(path) = schedule {
                let mut s = Scenario::load(&scenario)?;
                s.seed = seed.unwrap_or(s.seed);
                match solve(&s, solver.unwrap_or(s.solver.kind)) {
                    Ok(outcome) => harness::write_schedule(create(&path)?, &outcome.result)?,
                    Err(e) => eprintln!("no schedule written: {e}"),
                }
            }
            let failed = rows.iter().filter(|r| !r.is_ok()).count();
            if failed > 0 {
                eprintln!("{failed} of {} rows ended with a solver error", rows.len());
            }
        }
        Command::Sweep { scenario, param, from, to, steps, reps, solvers, out, output } => {
            let spec = SweepSpec { parameter: param, from, to, steps, reps, solvers };
            let rows = harness::sweep(&scenario, &spec, &out, output.options())?;
            eprintln!("wrote {} rows to {}", rows.len(), out.display());
        }
        Command::Compare { scenario, seed, reps } => {
            let summary = harness::compare(&scenario, seed, reps)?;
            let mut w = io::stdout().lock();
            writeln!(w, "solver,feasible_runs,mean_makespan,gap")?;
            for s in &summary.solvers {
                writeln!(w, "{},{},{:.16e},{:.16e}", s.solver, s.feasible_runs, s.mean_makespan, s.gap)?;
            }
            eprintln!("{} of {} repetitions completed by every solver", summary.common_runs, summary.reps);
        }
        Command::Validate { scenario } => {
            let diag = harness::validate(&scenario)?;
            for e in &diag.errors {
                println!("error: {e}");
            }
            for w in &diag.warnings {
                println!("warning: {w}");
            }
            if let Some(c) = diag.min_cost {
                println!("minimum possible cost: {c}");
            }
            if !diag.is_ok() {
                return Ok(ExitCode::from(1));
            }
            println!("ok");
        }
    }
    Ok(ExitCode::SUCCESS)
}
