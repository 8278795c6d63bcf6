//! Scenario files.
//!
//! A scenario is a TOML document with top-level `budget`, `objective_mode`
//! and `seed` keys followed by `[graph]`, `[platform]` (with `fog`, `cloud`
//! and `radio` sub-tables), `[solver]` and optional `[generator]` and
//! `[placement]` tables:
//!
//! ```toml
//! budget = 6.0
//! objective_mode = "makespan"
//! seed = 7
//!
//! [graph]
//! tasks = [{ id = 1, workload = 0.5, data_size = 400.0 }]
//! edges = []
//!
//! [platform]
//! device_cpu = 1.0
//! kappa = 1e-11
//! fog_cloud_bandwidth = 1e5
//! fog_forward_power = 0.1
//! fog = { cpu = 3.6, alpha = 0.5, beta = 0.4, epsilon = 3.0, price = 0.001 }
//! cloud = { cpu = 36.0, alpha = 0.6, beta = 0.6, epsilon = 3.0, price = 0.004 }
//! radio = { bandwidth = 5e6, tx_power_max = 1.0, channel_gain = 1.0, noise = 1.0 }
//!
//! [solver]
//! kind = "greedy"
//! ```
//!
//! Floats are written in shortest round-trip form, so loading a saved
//! scenario reproduces it bit for bit. `budget = inf` disables the budget.

use std::fs;
use std::path::Path;

use crate::error::HarnessError;
use crate::model::Scenario;

impl Scenario {
    /// Parses and validates a scenario document.
    pub fn from_toml_str(text: &str) -> Result<Scenario, HarnessError> {
        let scenario = parse_unvalidated(text)?;
        scenario.validate()?;
        Ok(scenario)
    }

    pub fn to_toml_string(&self) -> String {
        toml::to_string(self).expect("scenario serializes")
    }

    pub fn load(path: impl AsRef<Path>) -> Result<Scenario, HarnessError> {
        Scenario::from_toml_str(&read(path.as_ref())?)
    }

    pub fn save(&self, path: impl AsRef<Path>) -> Result<(), HarnessError> {
        let path = path.as_ref();
        fs::write(path, self.to_toml_string()).map_err(|source| HarnessError::Io {
            path: path.display().to_string(),
            source,
        })
    }
}

/// Parses without the numeric checks of [`Scenario::validate`]. Graph
/// structure is still enforced because a graph cannot exist without it.
pub fn parse_unvalidated(text: &str) -> Result<Scenario, HarnessError> {
    toml::from_str(text).map_err(|e| HarnessError::Parse(e.to_string()))
}

pub(crate) fn read(path: &Path) -> Result<String, HarnessError> {
    fs::read_to_string(path).map_err(|source| HarnessError::Io {
        path: path.display().to_string(),
        source,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::model::{Placement, Tier};

    const DOC: &str = r#"
budget = 6.0
seed = 3

[graph]
tasks = [
  { id = 1, workload = 0.5, data_size = 400.0 },
  { id = 2, workload = 0.25, data_size = 100.0 },
]
edges = [[1, 2]]

[platform]
device_cpu = 1.0
kappa = 1e-11
fog_cloud_bandwidth = 1e5
fog_forward_power = 0.1
fog = { cpu = 3.6, alpha = 0.5, beta = 0.4, price = 0.001 }
cloud = { cpu = 36.0, alpha = 0.6, beta = 0.6, epsilon = 3.0, price = 0.004 }
radio = { bandwidth = 5e6, tx_power_max = 1.0, channel_gain = 1.0, noise = 1.0 }

[placement]
1 = "fog"
2 = "cloud"
"#;

    #[test]
    fn parses_with_defaults() {
        let s = Scenario::from_toml_str(DOC).unwrap();
        assert_eq!(s.graph.len(), 2);
        assert_eq!(s.platform.fog.epsilon, 3.0);
        assert_eq!(s.platform.radio.effective_tx_power(), 1.0);
        assert_eq!(s.platform.radio.interference, 0.0);
        assert_eq!(s.solver.kind, crate::model::SolverKind::Greedy);
        assert_eq!(s.placement, Some(Placement::from_tiers(&[Tier::Fog, Tier::Cloud])));
    }

    #[test]
    fn round_trip_is_exact() {
        let s = Scenario::from_toml_str(DOC).unwrap();
        let again = Scenario::from_toml_str(&s.to_toml_string()).unwrap();
        assert_eq!(s, again);
    }

    #[test]
    fn infinite_budget() {
        let doc = DOC.replace("budget = 6.0", "budget = inf");
        let s = Scenario::from_toml_str(&doc).unwrap();
        assert!(s.budget.is_infinite());
        let again = Scenario::from_toml_str(&s.to_toml_string()).unwrap();
        assert!(again.budget.is_infinite());
    }

    #[test]
    fn cyclic_graph_is_a_parse_error() {
        let doc = DOC.replace("edges = [[1, 2]]", "edges = [[1, 2], [2, 1]]");
        let err = Scenario::from_toml_str(&doc).unwrap_err();
        assert!(err.to_string().contains("cycle"), "{err}");
    }

    #[test]
    fn placement_must_cover_graph() {
        let doc = DOC.replace("2 = \"cloud\"", "");
        assert!(matches!(
            Scenario::from_toml_str(&doc),
            Err(HarnessError::Validation(crate::error::ModelError::MissingTask(2)))
        ));
    }

    #[test]
    fn negative_budget_rejected() {
        let doc = DOC.replace("budget = 6.0", "budget = -1.0");
        assert!(matches!(Scenario::from_toml_str(&doc), Err(HarnessError::Validation(_))));
    }
}
