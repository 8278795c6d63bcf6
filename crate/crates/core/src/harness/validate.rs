use std::path::Path;

use serde::Deserialize;

use crate::cost::graph_costs;
use crate::error::HarnessError;
use crate::model::{validate_graph, TaskId, TaskSpec, Tier};
use crate::scenario::{parse_unvalidated, read};
use crate::schedule::task_cost;

/// Outcome of checking a scenario file. Errors make the scenario unusable;
/// warnings do not.
#[derive(Debug, Clone, Default, PartialEq)]
pub struct Diagnostics {
    pub errors: Vec<String>,
    pub warnings: Vec<String>,
    /// Sum over tasks of the cheapest tier's cost, when the scenario loads.
    pub min_cost: Option<f64>,
}

impl Diagnostics {
    pub fn is_ok(&self) -> bool {
        self.errors.is_empty()
    }
}

#[derive(Deserialize)]
struct GraphOnly {
    graph: LooseGraph,
}

#[derive(Deserialize)]
struct LooseGraph {
    tasks: Vec<TaskSpec>,
    #[serde(default)]
    edges: Vec<(TaskId, TaskId)>,
}

pub fn validate(scenario_path: &Path) -> Result<Diagnostics, HarnessError> {
    validate_str(&read(scenario_path)?)
}

/// Structural report on a scenario document. Only malformed TOML or a
/// missing or mistyped section is an `Err`; everything else is a diagnostic.
pub fn validate_str(text: &str) -> Result<Diagnostics, HarnessError> {
    let mut diag = Diagnostics::default();
    let loose: GraphOnly = toml::from_str(text).map_err(|e| HarnessError::Parse(e.to_string()))?;
    if loose.graph.tasks.is_empty() {
        diag.errors.push("task graph has no tasks".into());
        return Ok(diag);
    }
    if let Err(e) = validate_graph(&loose.graph.tasks, &loose.graph.edges) {
        diag.errors.push(e.to_string());
        return Ok(diag);
    }

    for t in &loose.graph.tasks {
        if !(t.workload >= 0.0 && t.workload.is_finite() && t.data_size >= 0.0 && t.data_size.is_finite()) {
            diag.errors.push(format!("task {}: sizes must be finite and >= 0", t.id));
        }
    }
    if !diag.errors.is_empty() {
        return Ok(diag);
    }

    let scenario = parse_unvalidated(text)?;
    match scenario.validate() {
        Ok(warnings) => diag.warnings.extend(warnings),
        Err(e) => {
            diag.errors.push(e.to_string());
            return Ok(diag);
        }
    }

    let p = &scenario.platform;
    let costs = graph_costs(scenario.graph.tasks(), p);
    let min_cost: f64 = scenario
        .graph
        .tasks()
        .iter()
        .zip(&costs)
        .map(|(t, c)| Tier::ALL.map(|tier| task_cost(t, tier, c, &p.fog, &p.cloud)).into_iter().fold(f64::INFINITY, f64::min))
        .sum();
    if scenario.budget < min_cost {
        diag.warnings.push(format!(
            "budget {} is below the cheapest possible total cost {min_cost}: likely infeasible",
            scenario.budget
        ));
    }
    diag.min_cost = Some(min_cost);
    Ok(diag)
}
