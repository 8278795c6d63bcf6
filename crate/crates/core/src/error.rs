use thiserror::Error;

use crate::model::TaskId;

/// Structural problems with a task graph, platform or placement.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum ModelError {
    #[error("task graph contains a directed cycle")]
    CycleDetected,
    #[error("edge {pred} -> {succ} names an unknown task")]
    DanglingEdge { pred: TaskId, succ: TaskId },
    #[error("task ids must be 1..={n} with no gaps or duplicates (found {found})")]
    BadTaskIds { n: usize, found: TaskId },
    #[error("task graph has no tasks")]
    EmptyGraph,
    #[error("placement does not assign task {0}")]
    MissingTask(TaskId),
    #[error("placement assigns unknown task {0}")]
    UnknownTask(TaskId),
    #[error("invalid parameter `{field}`: {reason}")]
    InvalidParameter { field: String, reason: String },
}

impl ModelError {
    pub(crate) fn param(field: &str, reason: impl Into<String>) -> Self {
        ModelError::InvalidParameter {
            field: field.to_string(),
            reason: reason.into(),
        }
    }
}

/// Failures reported by the placement solvers.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum SolveError {
    #[error("no placement satisfies the constraints")]
    Infeasible,
    #[error("no budget-feasible placement found after {restarts} restarts")]
    RestartsExhausted { restarts: u32 },
    #[error("{n} tasks exceed the brute-force cap of {cap}")]
    TooLarge { n: usize, cap: usize },
    #[error(transparent)]
    Model(#[from] ModelError),
}

impl SolveError {
    /// Short machine-readable tag used in result tables.
    pub fn tag(&self) -> &'static str {
        match self {
            SolveError::Infeasible => "infeasible",
            SolveError::RestartsExhausted { .. } => "restarts_exhausted",
            SolveError::TooLarge { .. } => "too_large",
            SolveError::Model(_) => "invalid_model",
        }
    }
}

/// Errors surfaced while loading scenarios or running experiments.
#[derive(Debug, Error)]
pub enum HarnessError {
    #[error("i/o error on {path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },
    #[error("cannot parse scenario: {0}")]
    Parse(String),
    #[error("invalid scenario: {0}")]
    Validation(#[from] ModelError),
    #[error("invalid sweep: {0}")]
    Sweep(String),
    #[error(transparent)]
    Solve(#[from] SolveError),
}
