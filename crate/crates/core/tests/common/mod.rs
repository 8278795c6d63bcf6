//! Shared helpers for the integration tests: random scenarios and an
//! independent reference evaluator.
//!
//! The reference evaluator recomputes every per-task quantity from the raw
//! scenario numbers and iterates the ready/finish equations in task-id
//! order until nothing changes, so it relies neither on the cost module nor
//! on a topological order.

#![allow(dead_code)]

use std::path::PathBuf;

use fogcloud_core::generate::{random_chain, random_dag};
use fogcloud_core::{
    CloudSpec, FogSpec, GeneratorSpec, ObjectiveMode, Platform, RadioLink, Scenario, SolverConfig, TaskGraph, Tier,
};
use rand::Rng;

pub fn scenario_path(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../scenarios").join(name)
}

fn between(rng: &mut impl Rng, lo: f64, hi: f64) -> f64 {
    rng.random_range(lo..hi)
}

/// Unit-scale platform where every tier wins for some tasks.
pub fn random_platform(rng: &mut impl Rng) -> Platform {
    let device = between(rng, 0.5, 2.0);
    Platform {
        device_cpu: device,
        kappa: between(rng, 0.01, 0.5),
        fog_cloud_bandwidth: between(rng, 0.2, 3.0),
        fog_forward_power: between(rng, 0.0, 0.2),
        fog: FogSpec {
            cpu: device * between(rng, 1.5, 4.0),
            alpha: between(rng, 0.0, 0.02),
            beta: between(rng, 0.0, 0.5),
            epsilon: between(rng, 2.5, 3.0),
            price: between(rng, 0.05, 0.5),
        },
        cloud: CloudSpec {
            cpu: device * between(rng, 4.0, 12.0),
            alpha: between(rng, 0.0, 0.002),
            beta: between(rng, 0.0, 0.5),
            epsilon: between(rng, 2.5, 3.0),
            price: between(rng, 0.1, 1.5),
        },
        radio: RadioLink {
            bandwidth: between(rng, 0.5, 5.0),
            tx_power: None,
            tx_power_max: between(rng, 0.5, 2.0),
            channel_gain: between(rng, 0.5, 2.0),
            noise: between(rng, 0.5, 2.0),
            interference: between(rng, 0.0, 1.0),
        },
    }
}

pub const UNIT_SIZES: GeneratorSpec = GeneratorSpec {
    workload: [0.1, 5.0],
    data_size: [0.1, 3.0],
};

/// Random chain or DAG with up to `max_n` tasks, random platform and a
/// budget that is sometimes unbounded, sometimes tight.
pub fn random_scenario(rng: &mut impl Rng, max_n: usize) -> Scenario {
    let n = rng.random_range(1..=max_n);
    let graph = if rng.random_bool(0.5) {
        random_chain(n, &UNIT_SIZES, rng)
    } else {
        let p = between(rng, 0.1, 0.7);
        random_dag(n, p, &UNIT_SIZES, rng)
    };
    let platform = random_platform(rng);
    let budget = if rng.random_bool(0.2) {
        f64::INFINITY
    } else {
        between(rng, 0.0, 2.0) * n as f64
    };
    Scenario {
        budget,
        objective_mode: if rng.random_bool(0.8) { ObjectiveMode::Makespan } else { ObjectiveMode::SumOfFinishTimes },
        seed: rng.random(),
        graph,
        platform,
        solver: SolverConfig::default(),
        generator: None,
        placement: None,
    }
}

pub fn random_tiers(rng: &mut impl Rng, n: usize) -> Vec<Tier> {
    (0..n).map(|_| Tier::ALL[rng.random_range(0..3)]).collect()
}

/// Per-task constants straight from the model formulas.
#[derive(Debug, Clone, Copy)]
pub struct RefCosts {
    pub tau_l: f64,
    pub tau_t: f64,
    pub tau_f: f64,
    pub tau_r: f64,
    pub tau_c: f64,
    pub e_l: f64,
    pub e_f: f64,
    pub e_s: f64,
    pub e_c: f64,
}

pub fn ref_costs(w: f64, d: f64, p: &Platform) -> RefCosts {
    let r = &p.radio;
    let power = r.tx_power.unwrap_or(r.tx_power_max);
    let rate = r.bandwidth * (1.0 + power * r.channel_gain / (r.noise + r.interference)).log2();
    let tau_f = w / p.fog.cpu;
    let tau_c = w / p.cloud.cpu;
    let tau_r = d / p.fog_cloud_bandwidth;
    RefCosts {
        tau_l: w / p.device_cpu,
        tau_t: d / rate,
        tau_f,
        tau_r,
        tau_c,
        e_l: p.kappa * w * p.device_cpu * p.device_cpu,
        e_f: (p.fog.alpha * p.fog.cpu.powf(p.fog.epsilon) + p.fog.beta) * tau_f,
        e_s: p.fog_forward_power * tau_r,
        e_c: (p.cloud.alpha * p.cloud.cpu.powf(p.cloud.epsilon) + p.cloud.beta) * tau_c,
    }
}

/// Ready/finish times of one task; zero for tiers it is not placed on.
#[derive(Debug, Clone, Copy, Default, PartialEq)]
pub struct RefTimes {
    pub tr_l: f64,
    pub tr_f: f64,
    pub tr_c: f64,
    pub tf_l: f64,
    pub tf_t: f64,
    pub tf_f: f64,
    pub tf_r: f64,
    pub tf_c: f64,
}

impl RefTimes {
    pub fn finish(&self) -> f64 {
        self.tf_l.max(self.tf_f).max(self.tf_c)
    }
}

#[derive(Debug, Clone)]
pub struct RefResult {
    pub times: Vec<RefTimes>,
    pub makespan: f64,
    pub sum_finish: f64,
    pub cost: f64,
    pub fog_utility: f64,
    pub cloud_utility: f64,
}

/// Fixed-point evaluation of the ready/finish equations.
pub fn reference_evaluate(graph: &TaskGraph, platform: &Platform, tiers: &[Tier]) -> RefResult {
    let n = graph.len();
    let tasks = graph.tasks();
    let costs: Vec<RefCosts> = tasks.iter().map(|t| ref_costs(t.workload, t.data_size, platform)).collect();
    let preds: Vec<Vec<usize>> = (0..n)
        .map(|i| {
            graph
                .edges()
                .iter()
                .filter(|&&(_, s)| s as usize == i + 1)
                .map(|&(p, _)| p as usize - 1)
                .collect()
        })
        .collect();

    let mut times = vec![RefTimes::default(); n];
    for _sweep in 0..=n + 1 {
        let mut changed = false;
        for i in 0..n {
            let c = &costs[i];
            let max_over = |f: &dyn Fn(&RefTimes) -> f64| preds[i].iter().map(|&k| f(&times[k])).fold(0.0, f64::max);
            let any = max_over(&|t| t.tf_l.max(t.tf_f).max(t.tf_c));
            let pre_l = max_over(&|t| t.tf_l);
            let pre_f = max_over(&|t| t.tf_f);
            let pre_c = max_over(&|t| t.tf_c);
            let mut next = RefTimes::default();
            match tiers[i] {
                Tier::Local => {
                    next.tr_l = any;
                    next.tf_l = c.tau_l + any;
                }
                Tier::Fog => {
                    next.tf_t = c.tau_t + pre_l;
                    next.tr_f = next.tf_t.max(pre_f).max(pre_c);
                    next.tf_f = c.tau_f + next.tr_f;
                }
                Tier::Cloud => {
                    next.tf_t = c.tau_t + pre_l;
                    next.tf_r = c.tau_r + pre_f;
                    next.tr_c = (next.tf_t + c.tau_r).max(pre_c).max(next.tf_r);
                    next.tf_c = c.tau_c + next.tr_c;
                }
            }
            if next != times[i] {
                times[i] = next;
                changed = true;
            }
        }
        if !changed {
            break;
        }
    }

    let is_sink = |i: usize| !graph.edges().iter().any(|&(p, _)| p as usize == i + 1);
    let makespan = (0..n).filter(|&i| is_sink(i)).map(|i| times[i].finish()).fold(0.0, f64::max);
    let sum_finish = times.iter().map(|t| t.finish()).sum();
    let (mut cost, mut uf, mut uc) = (0.0, 0.0, 0.0);
    for (i, tier) in tiers.iter().enumerate() {
        let (c, d) = (&costs[i], tasks[i].data_size);
        match tier {
            Tier::Local => cost += c.e_l,
            Tier::Fog => {
                cost += platform.fog.price * d;
                uf += platform.fog.price * d - c.e_f;
            }
            Tier::Cloud => {
                cost += platform.cloud.price * d;
                uf -= c.e_s;
                uc += platform.cloud.price * d - c.e_c;
            }
        }
    }
    RefResult { times, makespan, sum_finish, cost, fog_utility: uf, cloud_utility: uc }
}

pub fn rel_close(a: f64, b: f64, tol: f64) -> bool {
    a == b || (a - b).abs() <= tol * a.abs().max(b.abs())
}

/// Constraint check using only the reference evaluator.
pub fn reference_feasible(scenario: &Scenario, tiers: &[Tier]) -> bool {
    let r = reference_evaluate(&scenario.graph, &scenario.platform, tiers);
    let tol = 1e-9;
    r.cost <= scenario.budget + tol && r.fog_utility >= -tol && r.cloud_utility >= -tol
}

/// Least-squares line `y = a + b x`; returns `(a, b, r_squared)`.
pub fn linear_fit(xs: &[f64], ys: &[f64]) -> (f64, f64, f64) {
    let n = xs.len() as f64;
    let mx = xs.iter().sum::<f64>() / n;
    let my = ys.iter().sum::<f64>() / n;
    let sxy: f64 = xs.iter().zip(ys).map(|(x, y)| (x - mx) * (y - my)).sum();
    let sxx: f64 = xs.iter().map(|x| (x - mx).powi(2)).sum();
    let syy: f64 = ys.iter().map(|y| (y - my).powi(2)).sum();
    let b = sxy / sxx;
    let a = my - b * mx;
    let r2 = if syy == 0.0 { 1.0 } else { sxy * sxy / (sxx * syy) };
    (a, b, r2)
}
