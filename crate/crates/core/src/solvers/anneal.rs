//! Simulated annealing over the integer tier encoding (1 local, 2 fog, 3 cloud).
//!
//! Each attempt draws a uniformly random placement, then repeatedly picks a
//! step in `-r..=r` and a task index, clamps the shifted code to `1..=3`,
//! cools the temperature and applies the Metropolis test. The loop keeps
//! going while the temperature is above `t_stop` and both provider utilities
//! of the last accepted placement are non-negative, so accepting a placement
//! with a negative utility ends the attempt early. An attempt whose final
//! placement is over budget is discarded and a fresh one starts.
//!
//! Randomness: every attempt uses `ChaCha8Rng::seed_from_u64(seed)` with the
//! stream set to `SA_STREAM_BASE + attempt`. Draw order within an attempt is
//! the initial tiers (task 1 first), then per iteration the step, the index,
//! and a uniform `[0, 1)` only when the move is worsening.

use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::SolveError;
use crate::model::{Scenario, Tier};
use crate::schedule::{Evaluator, FEASIBILITY_TOL};

use super::SolveOutcome;

/// Stream id of attempt 0; attempt `k` uses `SA_STREAM_BASE + k`.
pub const SA_STREAM_BASE: u64 = 0;

/// Metropolis criterion: always accept `delta <= 0`, otherwise accept with
/// probability `exp(-delta / temperature)`.
pub fn metropolis_accept<R: Rng + ?Sized>(delta: f64, temperature: f64, rng: &mut R) -> bool {
    if delta <= 0.0 {
        return true;
    }
    rng.random::<f64>() < (-delta / temperature).exp()
}

pub fn sa_solve(scenario: &Scenario) -> Result<SolveOutcome, SolveError> {
    let start = Instant::now();
    let cfg = scenario.solver.sa();
    cfg.validate()?;
    let ev = Evaluator::new(&scenario.graph, &scenario.platform);
    let n = scenario.graph.len();
    let mode = scenario.objective_mode;
    let range = cfg.neighbor_range;
    let mut iterations = 0u64;

    for attempt in 0..=cfg.max_restarts {
        let mut rng = ChaCha8Rng::seed_from_u64(scenario.seed);
        rng.set_stream(SA_STREAM_BASE + attempt as u64);

        let mut current: Vec<Tier> = (0..n).map(|_| Tier::from_code(rng.random_range(1..=3))).collect();
        let mut current_obj = ev.evaluate_tiers(&current).objective(mode);
        let (mut fog_u, mut cloud_u) = (0.0f64, 0.0f64);
        let mut temperature = cfg.t0;

        while temperature > cfg.t_stop && fog_u >= -FEASIBILITY_TOL && cloud_u >= -FEASIBILITY_TOL {
            iterations += 1;
            let step = rng.random_range(-range..=range);
            let index = rng.random_range(0..n);
            let mut candidate = current.clone();
            candidate[index] = Tier::from_code(current[index].code() + step);
            temperature *= cfg.cool;

            let result = ev.evaluate_tiers(&candidate);
            let obj = result.objective(mode);
            if metropolis_accept(obj - current_obj, temperature, &mut rng) {
                current = candidate;
                current_obj = obj;
                fog_u = result.fog_utility;
                cloud_u = result.cloud_utility;
            }
        }

        let total_cost: f64 = (0..n).map(|i| ev.task_cost(i, current[i])).sum();
        if total_cost <= scenario.budget + FEASIBILITY_TOL {
            return Ok(SolveOutcome::build(scenario, &ev, &current, iterations, start));
        }
    }
    Err(SolveError::RestartsExhausted {
        restarts: cfg.max_restarts,
    })
}
