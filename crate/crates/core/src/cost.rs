//! Closed-form per-task timing and energy.
//!
//! Every function is a direct evaluation of one model formula. Quantities are
//! in whatever consistent model units the platform uses; nothing is rescaled.

use crate::model::{CloudSpec, FogSpec, Platform, RadioLink, TaskSpec};

/// Uplink rate `W * log2(1 + P h / (noise + interference))`.
pub fn uplink_rate(link: &RadioLink) -> f64 {
    let snr = link.effective_tx_power() * link.channel_gain / (link.noise + link.interference);
    link.bandwidth * snr.ln_1p() / std::f64::consts::LN_2
}

/// `w / f_local`.
pub fn local_exec_time(task: &TaskSpec, platform: &Platform) -> f64 {
    task.workload / platform.device_cpu
}

/// `kappa * w * f_local^2`.
pub fn local_energy(task: &TaskSpec, platform: &Platform) -> f64 {
    platform.kappa * task.workload * platform.device_cpu * platform.device_cpu
}

pub fn fog_exec_time(task: &TaskSpec, fog: &FogSpec) -> f64 {
    task.workload / fog.cpu
}

/// `(alpha_f * f_fog^eps + beta_f) * tau_fog`.
pub fn fog_energy(task: &TaskSpec, fog: &FogSpec) -> f64 {
    (fog.alpha * fog.cpu.powf(fog.epsilon) + fog.beta) * fog_exec_time(task, fog)
}

pub fn cloud_exec_time(task: &TaskSpec, cloud: &CloudSpec) -> f64 {
    task.workload / cloud.cpu
}

/// `(alpha_c * f_cloud^eps + beta_c) * tau_cloud`.
pub fn cloud_energy(task: &TaskSpec, cloud: &CloudSpec) -> f64 {
    (cloud.alpha * cloud.cpu.powf(cloud.epsilon) + cloud.beta) * cloud_exec_time(task, cloud)
}

/// Time to push the task's input over the uplink.
pub fn uplink_time(task: &TaskSpec, link: &RadioLink) -> f64 {
    task.data_size / uplink_rate(link)
}

pub fn uplink_energy(task: &TaskSpec, link: &RadioLink) -> f64 {
    link.effective_tx_power() * uplink_time(task, link)
}

/// Fog-to-cloud forwarding time over the wired link.
pub fn fog_cloud_time(task: &TaskSpec, platform: &Platform) -> f64 {
    task.data_size / platform.fog_cloud_bandwidth
}

/// Energy the fog node spends forwarding the task to the cloud.
pub fn fog_cloud_energy(task: &TaskSpec, platform: &Platform) -> f64 {
    platform.fog_forward_power * fog_cloud_time(task, platform)
}

/// All per-task quantities for one task.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct TaskCosts {
    pub local_time: f64,
    pub local_energy: f64,
    pub uplink_rate: f64,
    pub uplink_time: f64,
    pub uplink_energy: f64,
    pub fog_time: f64,
    pub fog_energy: f64,
    pub fog_cloud_time: f64,
    pub fog_cloud_energy: f64,
    pub cloud_time: f64,
    pub cloud_energy: f64,
}

pub fn task_costs(task: &TaskSpec, platform: &Platform) -> TaskCosts {
    let rate = uplink_rate(&platform.radio);
    let uplink_time = task.data_size / rate;
    TaskCosts {
        local_time: local_exec_time(task, platform),
        local_energy: local_energy(task, platform),
        uplink_rate: rate,
        uplink_time,
        uplink_energy: platform.radio.effective_tx_power() * uplink_time,
        fog_time: fog_exec_time(task, &platform.fog),
        fog_energy: fog_energy(task, &platform.fog),
        fog_cloud_time: fog_cloud_time(task, platform),
        fog_cloud_energy: fog_cloud_energy(task, platform),
        cloud_time: cloud_exec_time(task, &platform.cloud),
        cloud_energy: cloud_energy(task, &platform.cloud),
    }
}

/// [`task_costs`] for every task of a graph, indexed by `id - 1`.
pub fn graph_costs(tasks: &[TaskSpec], platform: &Platform) -> Vec<TaskCosts> {
    tasks.iter().map(|t| task_costs(t, platform)).collect()
}
