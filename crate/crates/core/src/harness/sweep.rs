use std::path::Path;
use std::str::FromStr;

use rayon::prelude::*;

use crate::error::HarnessError;
use crate::generate::seeded_chain;
use crate::model::{Scenario, SolverKind};

use super::{scenario_id, solve_row, sort_rows, table, worker_pool, ResultRow, RunOptions};

/// Scenario parameter rewritten at each sweep point.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SweepParam {
    /// Multiplies every task's workload and data size by the sweep value.
    DataSize,
    /// Sets the device budget.
    Budget,
    /// Sets the fog price per bit.
    FogPrice,
    /// Regenerates a chain of `round(value)` tasks from the scenario's
    /// `[generator]` ranges, one graph per seed.
    TaskCount,
}

impl FromStr for SweepParam {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.trim().to_ascii_lowercase().replace(['-', '_'], "").as_str() {
            "datasize" => Ok(SweepParam::DataSize),
            "budget" => Ok(SweepParam::Budget),
            "fogprice" => Ok(SweepParam::FogPrice),
            "taskcount" => Ok(SweepParam::TaskCount),
            _ => Err(format!(
                "unknown sweep parameter `{s}` (expected data-size, budget, fog-price or task-count)"
            )),
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct SweepSpec {
    pub parameter: SweepParam,
    pub from: f64,
    pub to: f64,
    pub steps: u32,
    pub reps: u32,
    pub solvers: Vec<SolverKind>,
}

impl SweepSpec {
    pub fn validate(&self) -> Result<(), HarnessError> {
        let bad = |m: &str| Err(HarnessError::Sweep(m.to_string()));
        if self.steps < 1 {
            return bad("steps must be >= 1");
        }
        if self.reps < 1 {
            return bad("reps must be >= 1");
        }
        if !(self.from.is_finite() && self.to.is_finite()) {
            return bad("sweep bounds must be finite");
        }
        if self.from > self.to {
            return bad("from must not exceed to");
        }
        if self.solvers.is_empty() {
            return bad("at least one solver is required");
        }
        let floor = match self.parameter {
            SweepParam::TaskCount => 0.5,
            _ => 0.0,
        };
        if self.from < floor {
            return bad(match self.parameter {
                SweepParam::TaskCount => "task counts must be >= 1",
                _ => "sweep values must be >= 0",
            });
        }
        Ok(())
    }
}

/// `steps` evenly spaced values from `from` to `to` inclusive.
pub fn sweep_values(from: f64, to: f64, steps: u32) -> Vec<f64> {
    if steps <= 1 {
        return vec![from];
    }
    let last = (steps - 1) as f64;
    (0..steps)
        .map(|i| if i + 1 == steps { to } else { from + (to - from) * (i as f64 / last) })
        .collect()
}

/// Scenario for one sweep point and seed.
fn rewrite(base: &Scenario, param: SweepParam, value: f64, seed: u64) -> Result<Scenario, HarnessError> {
    let mut s = Scenario { seed, ..base.clone() };
    match param {
        SweepParam::DataSize => {
            let graph = base.graph.map_tasks(|t| {
                let mut t = *t;
                t.workload *= value;
                t.data_size *= value;
                t
            })?;
            s = s.with_graph(graph);
        }
        SweepParam::Budget => s.budget = value,
        SweepParam::FogPrice => s.platform.fog.price = value,
        SweepParam::TaskCount => {
            let spec = base
                .generator
                .ok_or_else(|| HarnessError::Sweep("task-count sweeps need a [generator] section".into()))?;
            s = s.with_graph(seeded_chain(value.round() as usize, &spec, seed));
        }
    }
    Ok(s)
}

/// Rows of a sweep over an already loaded scenario, sorted.
pub fn sweep_rows(base: &Scenario, id: &str, spec: &SweepSpec, opts: RunOptions) -> Result<Vec<ResultRow>, HarnessError> {
    spec.validate()?;
    let values = sweep_values(spec.from, spec.to, spec.steps);
    let mut cells = Vec::new();
    for &value in &values {
        let value = match spec.parameter {
            SweepParam::TaskCount => value.round(),
            _ => value,
        };
        for rep in 0..spec.reps as u64 {
            let scenario = rewrite(base, spec.parameter, value, base.seed.wrapping_add(rep))?;
            for &kind in &spec.solvers {
                cells.push((scenario.clone(), kind, value));
            }
        }
    }
    let mut rows: Vec<ResultRow> = worker_pool().install(|| {
        cells
            .par_iter()
            .map(|(s, kind, value)| solve_row(s, *kind, id, *value, opts))
            .collect()
    });
    sort_rows(&mut rows);
    Ok(rows)
}

/// Runs the sweep and writes the CSV table to `out_path`. The scenario file
/// is only read.
pub fn sweep(scenario_path: &Path, spec: &SweepSpec, out_path: &Path, opts: RunOptions) -> Result<Vec<ResultRow>, HarnessError> {
    let base = Scenario::load(scenario_path)?;
    let rows = sweep_rows(&base, &scenario_id(scenario_path), spec, opts)?;
    table::write_rows_to_path(out_path, &rows)?;
    Ok(rows)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn values_are_inclusive() {
        assert_eq!(sweep_values(1.0, 2.0, 3), vec![1.0, 1.5, 2.0]);
        assert_eq!(sweep_values(4.0, 9.0, 1), vec![4.0]);
        let v = sweep_values(0.1, 0.7, 7);
        assert_eq!(v.len(), 7);
        assert_eq!(v[6], 0.7);
    }

    #[test]
    fn parses_parameter_names() {
        assert_eq!("data-size".parse(), Ok(SweepParam::DataSize));
        assert_eq!("TaskCount".parse(), Ok(SweepParam::TaskCount));
        assert_eq!("fog_price".parse(), Ok(SweepParam::FogPrice));
        assert!("price".parse::<SweepParam>().is_err());
    }

    #[test]
    fn spec_checks() {
        let ok = SweepSpec {
            parameter: SweepParam::Budget,
            from: 0.0,
            to: 1.0,
            steps: 2,
            reps: 1,
            solvers: vec![SolverKind::Greedy],
        };
        assert!(ok.validate().is_ok());
        assert!(SweepSpec { from: 2.0, ..ok.clone() }.validate().is_err());
        assert!(SweepSpec { steps: 0, ..ok.clone() }.validate().is_err());
        assert!(SweepSpec { reps: 0, ..ok.clone() }.validate().is_err());
        assert!(SweepSpec { solvers: vec![], ..ok.clone() }.validate().is_err());
        assert!(SweepSpec { parameter: SweepParam::TaskCount, ..ok }.validate().is_err());
    }
}
