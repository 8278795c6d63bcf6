//! CSV output. Floats use `{:.16e}` (17 significant digits, round-trip
//! exact); NaN marks a cell with no value and is written empty.

use std::fs::File;
use std::io::Write;
use std::path::Path;

use crate::error::HarnessError;
use crate::schedule::ScheduleResult;

use super::ResultRow;

pub const ROW_HEADER: [&str; 17] = [
    "scenario_id",
    "solver",
    "seed",
    "n_tasks",
    "sweep_value",
    "makespan",
    "sum_finish",
    "total_cost",
    "fog_utility",
    "cloud_utility",
    "n_local",
    "n_fog",
    "n_cloud",
    "feasible",
    "iterations",
    "wall_time",
    "status",
];

const SCHEDULE_HEADER: [&str; 18] = [
    "record",
    "task",
    "tier",
    "ready_local",
    "ready_fog",
    "ready_cloud",
    "finish_local",
    "finish_tx",
    "finish_fog",
    "finish_fwd",
    "finish_cloud",
    "chosen_finish",
    "cost",
    "makespan",
    "sum_finish",
    "total_cost",
    "fog_utility",
    "cloud_utility",
];

fn num(x: f64) -> String {
    if x.is_nan() {
        String::new()
    } else {
        format!("{x:.16e}")
    }
}

fn csv_err(e: csv::Error) -> HarnessError {
    match e.into_kind() {
        csv::ErrorKind::Io(source) => HarnessError::Io { path: "<csv output>".into(), source },
        other => HarnessError::Parse(format!("{other:?}")),
    }
}

pub fn write_rows<W: Write>(out: W, rows: &[ResultRow]) -> Result<(), HarnessError> {
    let mut w = csv::WriterBuilder::new().terminator(csv::Terminator::Any(b'\n')).from_writer(out);
    w.write_record(ROW_HEADER).map_err(csv_err)?;
    for r in rows {
        let ok = r.is_ok();
        let count = |c: usize| if ok { c.to_string() } else { String::new() };
        w.write_record([
            r.scenario_id.clone(),
            r.solver.name().to_string(),
            r.seed.to_string(),
            r.n_tasks.to_string(),
            num(r.sweep_value),
            num(r.makespan),
            num(r.sum_finish),
            num(r.total_cost),
            num(r.fog_utility),
            num(r.cloud_utility),
            count(r.n_local),
            count(r.n_fog),
            count(r.n_cloud),
            r.feasible.to_string(),
            r.iterations.to_string(),
            num(r.wall_time),
            r.status.clone(),
        ])
        .map_err(csv_err)?;
    }
    w.flush().map_err(|source| HarnessError::Io { path: "<csv output>".into(), source })
}

pub(crate) fn write_rows_to_path(path: &Path, rows: &[ResultRow]) -> Result<(), HarnessError> {
    let file = File::create(path).map_err(|source| HarnessError::Io {
        path: path.display().to_string(),
        source,
    })?;
    write_rows(file, rows)
}

/// One row per task in id order, then a `total` row with the aggregates.
pub fn write_schedule<W: Write>(out: W, result: &ScheduleResult) -> Result<(), HarnessError> {
    let mut w = csv::WriterBuilder::new().terminator(csv::Terminator::Any(b'\n')).from_writer(out);
    w.write_record(SCHEDULE_HEADER).map_err(csv_err)?;
    for (i, (t, tier)) in result.tasks.iter().zip(&result.tiers).enumerate() {
        let mut rec = vec!["task".to_string(), (i + 1).to_string(), tier.name().to_string()];
        rec.extend(
            [
                t.ready_local,
                t.ready_fog,
                t.ready_cloud,
                t.finish_local,
                t.finish_tx,
                t.finish_fog,
                t.finish_fwd,
                t.finish_cloud,
                t.chosen_finish,
                t.cost,
            ]
            .map(num),
        );
        rec.extend(std::iter::repeat_n(String::new(), 5));
        w.write_record(&rec).map_err(csv_err)?;
    }
    let mut rec = vec!["total".to_string(), String::new(), String::new()];
    rec.extend(std::iter::repeat_n(String::new(), 10));
    rec.extend(
        [result.makespan, result.sum_finish, result.total_cost, result.fog_utility, result.cloud_utility].map(num),
    );
    w.write_record(&rec).map_err(csv_err)?;
    w.flush().map_err(|source| HarnessError::Io { path: "<csv output>".into(), source })
}
