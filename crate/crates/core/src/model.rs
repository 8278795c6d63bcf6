//! Domain types shared by the cost engine, the evaluator and the solvers.
//!
//! Everything here is immutable once constructed. [`TaskGraph::new`] is the
//! only way to obtain a graph, so every graph in circulation is known to be
//! acyclic with ids `1..=N`.

use std::collections::{BTreeMap, BinaryHeap};
use std::cmp::Reverse;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::ModelError;

/// 1-based task index.
pub type TaskId = u32;

/// One sub-task: CPU cycles to execute and input bits to ship when offloaded.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct TaskSpec {
    pub id: TaskId,
    pub workload: f64,
    pub data_size: f64,
}

impl TaskSpec {
    pub fn new(id: TaskId, workload: f64, data_size: f64) -> Self {
        TaskSpec {
            id,
            workload,
            data_size,
        }
    }
}

/// Returns a topological order of the tasks, smallest ready id first.
///
/// A list that is already topologically sorted comes back unchanged.
pub fn validate_graph(
    tasks: &[TaskSpec],
    edges: &[(TaskId, TaskId)],
) -> Result<Vec<TaskId>, ModelError> {
    let n = tasks.len();
    let mut seen = vec![false; n];
    for t in tasks {
        let idx = t.id as usize;
        if idx == 0 || idx > n || seen[idx - 1] {
            return Err(ModelError::BadTaskIds { n, found: t.id });
        }
        seen[idx - 1] = true;
    }
    for &(pred, succ) in edges {
        let known = |id: TaskId| id >= 1 && (id as usize) <= n;
        if !known(pred) || !known(succ) {
            return Err(ModelError::DanglingEdge { pred, succ });
        }
    }

    let mut indegree = vec![0usize; n];
    let mut succs: Vec<Vec<usize>> = vec![Vec::new(); n];
    for &(pred, succ) in edges {
        succs[pred as usize - 1].push(succ as usize - 1);
        indegree[succ as usize - 1] += 1;
    }
    let mut ready: BinaryHeap<Reverse<usize>> = (0..n)
        .filter(|&i| indegree[i] == 0)
        .map(Reverse)
        .collect();
    let mut order = Vec::with_capacity(n);
    while let Some(Reverse(i)) = ready.pop() {
        order.push(i as TaskId + 1);
        for &s in &succs[i] {
            indegree[s] -= 1;
            if indegree[s] == 0 {
                ready.push(Reverse(s));
            }
        }
    }
    if order.len() != n {
        return Err(ModelError::CycleDetected);
    }
    Ok(order)
}

#[derive(Debug, Clone, Serialize, Deserialize)]
struct RawGraph {
    tasks: Vec<TaskSpec>,
    #[serde(default)]
    edges: Vec<(TaskId, TaskId)>,
}

/// Application DAG. Tasks are stored by id, so task `id` lives at index `id - 1`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "RawGraph", into = "RawGraph")]
pub struct TaskGraph {
    tasks: Vec<TaskSpec>,
    edges: Vec<(TaskId, TaskId)>,
    preds: Vec<Vec<usize>>,
    is_sink: Vec<bool>,
    order: Vec<usize>,
}

impl TryFrom<RawGraph> for TaskGraph {
    type Error = ModelError;

    fn try_from(raw: RawGraph) -> Result<Self, Self::Error> {
        TaskGraph::new(raw.tasks, raw.edges)
    }
}

impl From<TaskGraph> for RawGraph {
    fn from(g: TaskGraph) -> Self {
        RawGraph {
            tasks: g.tasks,
            edges: g.edges,
        }
    }
}

impl TaskGraph {
    pub fn new(mut tasks: Vec<TaskSpec>, edges: Vec<(TaskId, TaskId)>) -> Result<Self, ModelError> {
        if tasks.is_empty() {
            return Err(ModelError::EmptyGraph);
        }
        for t in &tasks {
            if !(t.workload >= 0.0 && t.workload.is_finite()) {
                return Err(ModelError::param("workload", format!("task {}: must be finite and >= 0", t.id)));
            }
            if !(t.data_size >= 0.0 && t.data_size.is_finite()) {
                return Err(ModelError::param("data_size", format!("task {}: must be finite and >= 0", t.id)));
            }
        }
        let order = validate_graph(&tasks, &edges)?;
        tasks.sort_by_key(|t| t.id);

        let n = tasks.len();
        let mut preds: Vec<Vec<usize>> = vec![Vec::new(); n];
        let mut is_sink = vec![true; n];
        for &(p, s) in &edges {
            let (p, s) = (p as usize - 1, s as usize - 1);
            if !preds[s].contains(&p) {
                preds[s].push(p);
            }
            is_sink[p] = false;
        }
        for p in &mut preds {
            p.sort_unstable();
        }
        Ok(TaskGraph {
            tasks,
            edges,
            preds,
            is_sink,
            order: order.into_iter().map(|id| id as usize - 1).collect(),
        })
    }

    /// Sequential graph `1 -> 2 -> ... -> N`.
    pub fn chain(tasks: Vec<TaskSpec>) -> Result<Self, ModelError> {
        let edges = (1..tasks.len() as TaskId).map(|i| (i, i + 1)).collect();
        TaskGraph::new(tasks, edges)
    }

    /// Chain built from `(workload, data_size)` pairs, ids assigned in order.
    pub fn chain_from_sizes(sizes: &[(f64, f64)]) -> Result<Self, ModelError> {
        let tasks = sizes
            .iter()
            .enumerate()
            .map(|(i, &(w, d))| TaskSpec::new(i as TaskId + 1, w, d))
            .collect();
        TaskGraph::chain(tasks)
    }

    /// Same topology with every task rewritten by `f`.
    pub fn map_tasks(&self, f: impl Fn(&TaskSpec) -> TaskSpec) -> Result<Self, ModelError> {
        let tasks = self
            .tasks
            .iter()
            .map(|t| TaskSpec { id: t.id, ..f(t) })
            .collect();
        TaskGraph::new(tasks, self.edges.clone())
    }

    pub fn len(&self) -> usize {
        self.tasks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.tasks.is_empty()
    }

    pub fn tasks(&self) -> &[TaskSpec] {
        &self.tasks
    }

    pub fn task(&self, index: usize) -> &TaskSpec {
        &self.tasks[index]
    }

    pub fn edges(&self) -> &[(TaskId, TaskId)] {
        &self.edges
    }

    /// Predecessor indices (0-based) of the task at `index`.
    pub fn preds(&self, index: usize) -> &[usize] {
        &self.preds[index]
    }

    pub fn is_sink(&self, index: usize) -> bool {
        self.is_sink[index]
    }

    /// Topological order as 0-based indices.
    pub fn order(&self) -> &[usize] {
        &self.order
    }

    pub fn topological_order(&self) -> Vec<TaskId> {
        self.order.iter().map(|&i| i as TaskId + 1).collect()
    }
}

/// Where a task executes. Codes 1/2/3 follow the annealer's integer encoding.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Tier {
    Local,
    Fog,
    Cloud,
}

impl Tier {
    pub const ALL: [Tier; 3] = [Tier::Local, Tier::Fog, Tier::Cloud];

    pub fn code(self) -> i32 {
        match self {
            Tier::Local => 1,
            Tier::Fog => 2,
            Tier::Cloud => 3,
        }
    }

    /// Inverse of [`Tier::code`]; values outside 1..=3 are clamped.
    pub fn from_code(code: i32) -> Tier {
        match code {
            i32::MIN..=1 => Tier::Local,
            2 => Tier::Fog,
            _ => Tier::Cloud,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Tier::Local => "local",
            Tier::Fog => "fog",
            Tier::Cloud => "cloud",
        }
    }
}

impl fmt::Display for Tier {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Per-task tier assignment. A task on `Fog` has `x^f = 1`, on `Cloud` has
/// `x^c = 1`, on `Local` both are zero, so at most one indicator is ever set.
#[derive(Debug, Clone, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(try_from = "BTreeMap<String, Tier>", into = "BTreeMap<String, Tier>")]
pub struct Placement {
    assignment: BTreeMap<TaskId, Tier>,
}

impl TryFrom<BTreeMap<String, Tier>> for Placement {
    type Error = ModelError;

    fn try_from(raw: BTreeMap<String, Tier>) -> Result<Self, Self::Error> {
        let mut assignment = BTreeMap::new();
        for (k, tier) in raw {
            let id: TaskId = k
                .trim()
                .parse()
                .map_err(|_| ModelError::param("placement", format!("`{k}` is not a task id")))?;
            assignment.insert(id, tier);
        }
        Ok(Placement { assignment })
    }
}

impl From<Placement> for BTreeMap<String, Tier> {
    fn from(p: Placement) -> Self {
        p.assignment
            .into_iter()
            .map(|(id, t)| (id.to_string(), t))
            .collect()
    }
}

impl Placement {
    pub fn new() -> Self {
        Placement::default()
    }

    /// Tier of task `i + 1` is `tiers[i]`.
    pub fn from_tiers(tiers: &[Tier]) -> Self {
        Placement {
            assignment: tiers
                .iter()
                .enumerate()
                .map(|(i, &t)| (i as TaskId + 1, t))
                .collect(),
        }
    }

    pub fn uniform(n: usize, tier: Tier) -> Self {
        Placement::from_tiers(&vec![tier; n])
    }

    pub fn assign(&mut self, id: TaskId, tier: Tier) {
        self.assignment.insert(id, tier);
    }

    pub fn tier(&self, id: TaskId) -> Option<Tier> {
        self.assignment.get(&id).copied()
    }

    pub fn len(&self) -> usize {
        self.assignment.len()
    }

    pub fn is_empty(&self) -> bool {
        self.assignment.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (TaskId, Tier)> + '_ {
        self.assignment.iter().map(|(&id, &t)| (id, t))
    }

    /// `(n_local, n_fog, n_cloud)`.
    pub fn counts(&self) -> (usize, usize, usize) {
        self.assignment.values().fold((0, 0, 0), |(l, f, c), t| match t {
            Tier::Local => (l + 1, f, c),
            Tier::Fog => (l, f + 1, c),
            Tier::Cloud => (l, f, c + 1),
        })
    }

    /// Dense tier vector indexed by `id - 1`, after checking coverage.
    pub fn to_tiers(&self, graph: &TaskGraph) -> Result<Vec<Tier>, ModelError> {
        validate_placement(self, graph)?;
        Ok(self.assignment.values().copied().collect())
    }
}

/// Confirms that the placement assigns exactly the graph's tasks.
pub fn validate_placement(placement: &Placement, graph: &TaskGraph) -> Result<(), ModelError> {
    let n = graph.len() as TaskId;
    if let Some((&id, _)) = placement.assignment.iter().find(|(&id, _)| id == 0 || id > n) {
        return Err(ModelError::UnknownTask(id));
    }
    if let Some(id) = (1..=n).find(|id| !placement.assignment.contains_key(id)) {
        return Err(ModelError::MissingTask(id));
    }
    Ok(())
}

fn default_epsilon() -> f64 {
    3.0
}

/// Fog node: CPU speed, power fit `alpha * f^epsilon + beta`, price per bit.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct FogSpec {
    pub cpu: f64,
    pub alpha: f64,
    pub beta: f64,
    #[serde(default = "default_epsilon")]
    pub epsilon: f64,
    pub price: f64,
}

/// Remote cloud server, same shape as [`FogSpec`].
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct CloudSpec {
    pub cpu: f64,
    pub alpha: f64,
    pub beta: f64,
    #[serde(default = "default_epsilon")]
    pub epsilon: f64,
    pub price: f64,
}

/// Device-to-access-point uplink.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct RadioLink {
    pub bandwidth: f64,
    /// Transmit power; `None` transmits at `tx_power_max`.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub tx_power: Option<f64>,
    pub tx_power_max: f64,
    pub channel_gain: f64,
    pub noise: f64,
    /// Static aggregate of neighbouring transmitters' received power.
    #[serde(default)]
    pub interference: f64,
}

impl RadioLink {
    pub fn effective_tx_power(&self) -> f64 {
        self.tx_power.unwrap_or(self.tx_power_max)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Platform {
    pub device_cpu: f64,
    pub kappa: f64,
    pub fog_cloud_bandwidth: f64,
    pub fog_forward_power: f64,
    pub fog: FogSpec,
    pub cloud: CloudSpec,
    pub radio: RadioLink,
}

fn positive(field: &str, v: f64) -> Result<(), ModelError> {
    if v > 0.0 && v.is_finite() {
        Ok(())
    } else {
        Err(ModelError::param(field, format!("must be finite and > 0 (got {v})")))
    }
}

fn non_negative(field: &str, v: f64) -> Result<(), ModelError> {
    if v >= 0.0 && v.is_finite() {
        Ok(())
    } else {
        Err(ModelError::param(field, format!("must be finite and >= 0 (got {v})")))
    }
}

impl Platform {
    /// Hard invariants are errors; soft range checks come back as warnings.
    pub fn validate(&self) -> Result<Vec<String>, ModelError> {
        positive("platform.device_cpu", self.device_cpu)?;
        non_negative("platform.kappa", self.kappa)?;
        positive("platform.fog_cloud_bandwidth", self.fog_cloud_bandwidth)?;
        non_negative("platform.fog_forward_power", self.fog_forward_power)?;

        positive("platform.fog.cpu", self.fog.cpu)?;
        non_negative("platform.fog.price", self.fog.price)?;
        non_negative("platform.fog.alpha", self.fog.alpha)?;
        non_negative("platform.fog.beta", self.fog.beta)?;
        positive("platform.cloud.cpu", self.cloud.cpu)?;
        non_negative("platform.cloud.price", self.cloud.price)?;
        non_negative("platform.cloud.alpha", self.cloud.alpha)?;
        non_negative("platform.cloud.beta", self.cloud.beta)?;

        let r = &self.radio;
        positive("platform.radio.bandwidth", r.bandwidth)?;
        positive("platform.radio.noise", r.noise)?;
        positive("platform.radio.tx_power_max", r.tx_power_max)?;
        positive("platform.radio.tx_power", r.effective_tx_power())?;
        if r.effective_tx_power() > r.tx_power_max {
            return Err(ModelError::param("platform.radio.tx_power", "exceeds tx_power_max"));
        }
        non_negative("platform.radio.channel_gain", r.channel_gain)?;
        non_negative("platform.radio.interference", r.interference)?;

        let mut warnings = Vec::new();
        for (name, eps) in [("fog", self.fog.epsilon), ("cloud", self.cloud.epsilon)] {
            if !eps.is_finite() {
                return Err(ModelError::param(&format!("platform.{name}.epsilon"), "must be finite"));
            }
            if !(2.5..=3.0).contains(&eps) {
                warnings.push(format!(
                    "platform.{name}.epsilon = {eps} lies outside the usual [2.5, 3] range"
                ));
            }
        }
        if r.channel_gain == 0.0 {
            warnings.push("platform.radio.channel_gain = 0 makes the uplink rate zero".to_string());
        }
        Ok(warnings)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ObjectiveMode {
    /// Latest finish time over sink tasks.
    #[default]
    Makespan,
    /// Sum of every task's finish time at its assigned tier.
    SumOfFinishTimes,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum SolverKind {
    Greedy,
    Sa,
    Brute,
}

impl SolverKind {
    pub const ALL: [SolverKind; 3] = [SolverKind::Greedy, SolverKind::Sa, SolverKind::Brute];

    pub fn name(self) -> &'static str {
        match self {
            SolverKind::Greedy => "greedy",
            SolverKind::Sa => "sa",
            SolverKind::Brute => "brute",
        }
    }
}

impl std::str::FromStr for SolverKind {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.trim().to_ascii_lowercase().as_str() {
            "greedy" => Ok(SolverKind::Greedy),
            "sa" | "anneal" => Ok(SolverKind::Sa),
            "brute" | "bruteforce" | "brute_force" => Ok(SolverKind::Brute),
            other => Err(format!("unknown solver `{other}` (expected greedy, sa or brute)")),
        }
    }
}

impl fmt::Display for SolverKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Annealing schedule.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SaConfig {
    pub t0: f64,
    pub cool: f64,
    pub t_stop: f64,
    /// Perturbation steps are drawn uniformly from `-neighbor_range..=neighbor_range`.
    pub neighbor_range: i32,
    pub max_restarts: u32,
}

impl Default for SaConfig {
    fn default() -> Self {
        SaConfig {
            t0: 100.0,
            cool: 0.98,
            t_stop: 0.1,
            neighbor_range: 3,
            max_restarts: 50,
        }
    }
}

impl SaConfig {
    pub fn validate(&self) -> Result<(), ModelError> {
        if !(self.cool > 0.0 && self.cool < 1.0) {
            return Err(ModelError::param("solver.cool", "must lie in (0, 1)"));
        }
        positive("solver.t_stop", self.t_stop)?;
        if !self.t0.is_finite() {
            return Err(ModelError::param("solver.t0", "must be finite"));
        }
        if self.neighbor_range < 1 {
            return Err(ModelError::param("solver.neighbor_range", "must be >= 1"));
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BruteForceConfig {
    pub cap: usize,
}

impl Default for BruteForceConfig {
    fn default() -> Self {
        BruteForceConfig { cap: 14 }
    }
}

/// The `solver` section of a scenario file. Parameters for every solver may
/// be present; `kind` selects which one a plain `run` uses.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(default)]
pub struct SolverConfig {
    pub kind: SolverKind,
    pub t0: f64,
    pub cool: f64,
    pub t_stop: f64,
    pub neighbor_range: i32,
    pub max_restarts: u32,
    pub brute_cap: usize,
}

impl Default for SolverConfig {
    fn default() -> Self {
        let sa = SaConfig::default();
        SolverConfig {
            kind: SolverKind::Greedy,
            t0: sa.t0,
            cool: sa.cool,
            t_stop: sa.t_stop,
            neighbor_range: sa.neighbor_range,
            max_restarts: sa.max_restarts,
            brute_cap: BruteForceConfig::default().cap,
        }
    }
}

impl SolverConfig {
    pub fn sa(&self) -> SaConfig {
        SaConfig {
            t0: self.t0,
            cool: self.cool,
            t_stop: self.t_stop,
            neighbor_range: self.neighbor_range,
            max_restarts: self.max_restarts,
        }
    }

    pub fn brute(&self) -> BruteForceConfig {
        BruteForceConfig { cap: self.brute_cap }
    }
}

/// Ranges for i.i.d. uniform task sizes when a chain is regenerated.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct GeneratorSpec {
    pub workload: [f64; 2],
    pub data_size: [f64; 2],
}

impl GeneratorSpec {
    pub fn validate(&self) -> Result<(), ModelError> {
        for (name, [lo, hi]) in [("generator.workload", self.workload), ("generator.data_size", self.data_size)] {
            non_negative(name, lo)?;
            non_negative(name, hi)?;
            if lo > hi {
                return Err(ModelError::param(name, "lower bound exceeds upper bound"));
            }
        }
        Ok(())
    }
}

/// One experiment: graph, platform, budget and solver settings.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Scenario {
    pub budget: f64,
    #[serde(default)]
    pub objective_mode: ObjectiveMode,
    #[serde(default)]
    pub seed: u64,
    pub graph: TaskGraph,
    pub platform: Platform,
    #[serde(default)]
    pub solver: SolverConfig,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub generator: Option<GeneratorSpec>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub placement: Option<Placement>,
}

impl Scenario {
    /// Checks every numeric invariant; returns soft warnings on success.
    pub fn validate(&self) -> Result<Vec<String>, ModelError> {
        if self.budget.is_nan() || self.budget < 0.0 {
            return Err(ModelError::param("budget", "must be >= 0"));
        }
        let warnings = self.platform.validate()?;
        self.solver.sa().validate()?;
        if let Some(g) = &self.generator {
            g.validate()?;
        }
        if let Some(p) = &self.placement {
            validate_placement(p, &self.graph)?;
        }
        Ok(warnings)
    }

    /// Copy with a different graph (and no stale stored placement).
    pub fn with_graph(&self, graph: TaskGraph) -> Scenario {
        Scenario {
            graph,
            placement: None,
            ..self.clone()
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn tasks(n: u32) -> Vec<TaskSpec> {
        (1..=n).map(|i| TaskSpec::new(i, 1.0, 1.0)).collect()
    }

    #[test]
    fn chain_order() {
        assert_eq!(validate_graph(&tasks(3), &[(1, 2), (2, 3)]).unwrap(), vec![1, 2, 3]);
    }

    #[test]
    fn two_cycle_detected() {
        assert_eq!(
            validate_graph(&tasks(2), &[(1, 2), (2, 1)]),
            Err(ModelError::CycleDetected)
        );
    }

    #[test]
    fn singleton() {
        assert_eq!(validate_graph(&tasks(1), &[]).unwrap(), vec![1]);
    }

    #[test]
    fn self_loop_is_a_cycle() {
        assert_eq!(validate_graph(&tasks(2), &[(2, 2)]), Err(ModelError::CycleDetected));
    }

    #[test]
    fn dangling_edge() {
        assert_eq!(
            validate_graph(&tasks(3), &[(1, 4)]),
            Err(ModelError::DanglingEdge { pred: 1, succ: 4 })
        );
    }

    #[test]
    fn ids_must_be_contiguous() {
        let t = vec![TaskSpec::new(1, 1.0, 1.0), TaskSpec::new(3, 1.0, 1.0)];
        assert!(matches!(validate_graph(&t, &[]), Err(ModelError::BadTaskIds { .. })));
        let dup = vec![TaskSpec::new(1, 1.0, 1.0), TaskSpec::new(1, 1.0, 1.0)];
        assert!(matches!(validate_graph(&dup, &[]), Err(ModelError::BadTaskIds { .. })));
    }

    #[test]
    fn reversed_edges_reorder() {
        assert_eq!(validate_graph(&tasks(3), &[(3, 2), (2, 1)]).unwrap(), vec![3, 2, 1]);
    }

    #[test]
    fn negative_sizes_rejected() {
        let t = vec![TaskSpec::new(1, -1.0, 1.0)];
        assert!(TaskGraph::new(t, vec![]).is_err());
    }

    #[test]
    fn graph_keeps_preds_and_sinks() {
        let g = TaskGraph::new(tasks(4), vec![(1, 3), (2, 3), (3, 4), (1, 3)]).unwrap();
        assert_eq!(g.preds(2), &[0, 1]);
        assert!(g.is_sink(3));
        assert!(!g.is_sink(0));
        assert_eq!(g.topological_order(), vec![1, 2, 3, 4]);
    }

    #[test]
    fn placement_all_local_ok() {
        let g = TaskGraph::chain(tasks(3)).unwrap();
        assert!(validate_placement(&Placement::uniform(3, Tier::Local), &g).is_ok());
    }

    #[test]
    fn placement_missing_task() {
        let g = TaskGraph::chain(tasks(3)).unwrap();
        let p = Placement::from_tiers(&[Tier::Local, Tier::Fog]);
        assert_eq!(validate_placement(&p, &g), Err(ModelError::MissingTask(3)));
    }

    #[test]
    fn placement_unknown_task() {
        let g = TaskGraph::chain(tasks(3)).unwrap();
        let mut p = Placement::uniform(3, Tier::Local);
        p.assign(9, Tier::Cloud);
        assert_eq!(validate_placement(&p, &g), Err(ModelError::UnknownTask(9)));
    }

    #[test]
    fn tier_codes_clamp() {
        assert_eq!(Tier::from_code(-2), Tier::Local);
        assert_eq!(Tier::from_code(2), Tier::Fog);
        assert_eq!(Tier::from_code(6), Tier::Cloud);
        for t in Tier::ALL {
            assert_eq!(Tier::from_code(t.code()), t);
        }
    }

    #[test]
    fn placement_counts() {
        let p = Placement::from_tiers(&[Tier::Local, Tier::Cloud, Tier::Cloud, Tier::Fog]);
        assert_eq!(p.counts(), (1, 1, 2));
    }

    #[test]
    fn sa_config_bounds() {
        assert!(SaConfig::default().validate().is_ok());
        let bad = SaConfig { cool: 1.0, ..SaConfig::default() };
        assert!(bad.validate().is_err());
        let bad = SaConfig { t_stop: 0.0, ..SaConfig::default() };
        assert!(bad.validate().is_err());
    }
}
