//! Fixtures for the criterion benches.

use fogcloud_core::generate::seeded_chain;
use fogcloud_core::{Scenario, Tier};

const CHAIN40: &str = include_str!("../../../scenarios/chain40.scn");

/// The bundled 40-task scenario's platform with a fresh `n`-task chain.
/// The budget admits roughly half the tasks on the fog, so the greedy
/// repair phases do real work.
pub fn chain_scenario(n: usize, seed: u64) -> Scenario {
    let base = Scenario::from_toml_str(CHAIN40).expect("bundled scenario parses");
    let spec = base.generator.expect("bundled scenario has a generator");
    Scenario {
        seed,
        budget: 0.75 * n as f64,
        ..base.with_graph(seeded_chain(n, &spec, seed))
    }
}

/// Tiers cycling local, fog, cloud.
pub fn mixed_tiers(n: usize) -> Vec<Tier> {
    (0..n).map(|i| Tier::ALL[i % 3]).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fixtures_are_valid() {
        let s = chain_scenario(25, 3);
        assert_eq!(s.graph.len(), 25);
        assert_eq!(s, chain_scenario(25, 3));
        assert!(s.validate().is_ok());
        assert_eq!(mixed_tiers(4), [Tier::Local, Tier::Fog, Tier::Cloud, Tier::Local]);
    }
}
