//! Teleporting random walk on an hb-graph, the baseline the diffusion ranks
//! are compared against.
//!
//! The walker alternates vertex → hb-edge → vertex: from a vertex it picks
//! an incident hb-edge with probability `multiplicity / m-degree`, from an
//! hb-edge a member vertex with probability `multiplicity / m-cardinality`.
//! Before each move it teleports to a uniformly random vertex with
//! probability `1 - beta`. A walk ends once every vertex and every hb-edge
//! has been visited at least once.

use rand::{RngExt, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::diffusion::{rank, RankedValue};
use crate::error::{Error, Result};
use crate::hbgraph::HbGraph;

/// Continuation probability used by default.
pub const DEFAULT_BETA: f64 = 0.85;
/// Number of aggregated walks used by default.
pub const DEFAULT_WALKS: usize = 100;
/// Step safety valve: a walk raises `StepCapExceeded` beyond this.
pub const DEFAULT_STEP_CAP: u64 = 100_000_000;

fn default_step_cap() -> u64 {
    DEFAULT_STEP_CAP
}

/// Parameters of a batch of random walks.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct WalkConfig {
    /// Probability of following the alternating step; `1 - beta` is the
    /// teleportation probability. Must lie in (0, 1].
    pub beta: f64,
    /// Number of independent walks to aggregate.
    pub n_walks: usize,
    pub seed: u64,
    #[serde(default = "default_step_cap")]
    pub step_cap: u64,
}

impl Default for WalkConfig {
    fn default() -> Self {
        Self {
            beta: DEFAULT_BETA,
            n_walks: DEFAULT_WALKS,
            seed: 0,
            step_cap: DEFAULT_STEP_CAP,
        }
    }
}

impl WalkConfig {
    pub fn validate(&self) -> Result<()> {
        if !self.beta.is_finite() || self.beta <= 0.0 || self.beta > 1.0 {
            return Err(Error::InfeasibleConfig(format!(
                "beta must lie in (0, 1], got {}",
                self.beta
            )));
        }
        if self.n_walks < 1 {
            return Err(Error::InfeasibleConfig("n_walks must be at least 1".into()));
        }
        if self.step_cap < 1 {
            return Err(Error::InfeasibleConfig("step_cap must be at least 1".into()));
        }
        Ok(())
    }
}

/// Passage counts accumulated by one or more walks.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct WalkCounts {
    pub vertex_passages: Vec<u64>,
    pub hbedge_passages: Vec<u64>,
    pub total_steps: u64,
}

impl WalkCounts {
    fn zeros(g: &HbGraph) -> Self {
        Self {
            vertex_passages: vec![0; g.vertex_count()],
            hbedge_passages: vec![0; g.hbedge_count()],
            total_steps: 0,
        }
    }

    fn absorb(&mut self, other: &WalkCounts) {
        for (a, b) in self.vertex_passages.iter_mut().zip(&other.vertex_passages) {
            *a += b;
        }
        for (a, b) in self.hbedge_passages.iter_mut().zip(&other.hbedge_passages) {
            *a += b;
        }
        self.total_steps += other.total_steps;
    }
}

/// Probability of stepping from vertex `v` onto each hb-edge:
/// `multiplicity / m-degree`, zero for non-incident hb-edges.
pub fn vertex_to_hbedge_dist(g: &HbGraph, v: &str) -> Result<Vec<f64>> {
    let i = g
        .vertex_index(v)
        .ok_or_else(|| Error::UnknownVertex(v.to_string()))?;
    let deg = g.m_degree_by_index(i);
    if deg <= 0.0 {
        return Err(Error::IsolatedVertex(v.to_string()));
    }
    let mut dist = vec![0.0; g.hbedge_count()];
    for &(j, m) in g.incident_hbedges(i) {
        dist[j] = m / deg;
    }
    Ok(dist)
}

/// Probability of stepping from hb-edge `e` back onto each vertex:
/// `multiplicity / m-cardinality`, zero for non-members.
pub fn hbedge_to_vertex_dist(g: &HbGraph, e: &str) -> Result<Vec<f64>> {
    let j = g
        .hbedge_index(e)
        .ok_or_else(|| Error::UnknownHbEdge(e.to_string()))?;
    let card = g.hbedge_m_cardinality_by_index(j);
    let mut dist = vec![0.0; g.vertex_count()];
    for &(i, m) in g.hbedge_members(j) {
        dist[i] = m / card;
    }
    Ok(dist)
}

/// Cumulative-weight sampling table: `targets[i]` is drawn with weight
/// `cum[i] - cum[i-1]`.
struct CumTable {
    targets: Vec<usize>,
    cum: Vec<f64>,
}

impl CumTable {
    fn new(pairs: &[(usize, f64)]) -> Self {
        let mut cum = Vec::with_capacity(pairs.len());
        let mut acc = 0.0;
        let mut targets = Vec::with_capacity(pairs.len());
        for &(t, w) in pairs {
            acc += w;
            targets.push(t);
            cum.push(acc);
        }
        Self { targets, cum }
    }

    fn is_empty(&self) -> bool {
        self.targets.is_empty()
    }

    fn sample(&self, rng: &mut ChaCha8Rng) -> usize {
        let total = *self.cum.last().expect("sampling from an empty table");
        let x = rng.random_range(0.0..total);
        let idx = self.cum.partition_point(|&c| c <= x);
        self.targets[idx.min(self.targets.len() - 1)]
    }
}

/// Precomputed sampling tables for the alternating step.
struct WalkTables {
    from_vertex: Vec<CumTable>,
    from_hbedge: Vec<CumTable>,
}

impl WalkTables {
    fn new(g: &HbGraph) -> Self {
        Self {
            from_vertex: (0..g.vertex_count())
                .map(|i| CumTable::new(g.incident_hbedges(i)))
                .collect(),
            from_hbedge: (0..g.hbedge_count())
                .map(|j| CumTable::new(g.hbedge_members(j)))
                .collect(),
        }
    }
}

/// Visited-set tracker with O(1) completeness checks.
struct Exploration {
    seen_vertices: Vec<bool>,
    seen_hbedges: Vec<bool>,
    missing: usize,
}

impl Exploration {
    fn new(g: &HbGraph) -> Self {
        Self {
            seen_vertices: vec![false; g.vertex_count()],
            seen_hbedges: vec![false; g.hbedge_count()],
            missing: g.vertex_count() + g.hbedge_count(),
        }
    }

    fn visit_vertex(&mut self, i: usize) {
        if !self.seen_vertices[i] {
            self.seen_vertices[i] = true;
            self.missing -= 1;
        }
    }

    fn visit_hbedge(&mut self, j: usize) {
        if !self.seen_hbedges[j] {
            self.seen_hbedges[j] = true;
            self.missing -= 1;
        }
    }

    fn complete(&self) -> bool {
        self.missing == 0
    }
}

enum StopRule {
    FullExploration,
    FixedSteps(u64),
}

fn walk(
    g: &HbGraph,
    tables: &WalkTables,
    beta: f64,
    step_cap: u64,
    stop: StopRule,
    rng: &mut ChaCha8Rng,
) -> Result<WalkCounts> {
    let n = g.vertex_count();
    if n == 0 {
        return Err(Error::InfeasibleConfig(
            "cannot walk a graph with no vertices".into(),
        ));
    }
    let mut counts = WalkCounts::zeros(g);
    let mut explored = Exploration::new(g);

    // The start vertex counts as a passage.
    let mut pos = rng.random_range(0..n);
    counts.vertex_passages[pos] += 1;
    explored.visit_vertex(pos);

    loop {
        match stop {
            StopRule::FullExploration => {
                if explored.complete() {
                    return Ok(counts);
                }
                if counts.total_steps >= step_cap {
                    return Err(Error::StepCapExceeded(step_cap));
                }
            }
            StopRule::FixedSteps(limit) => {
                if counts.total_steps >= limit {
                    return Ok(counts);
                }
            }
        }
        counts.total_steps += 1;
        let teleport = rng.random_range(0.0..1.0) < 1.0 - beta;
        if teleport {
            pos = rng.random_range(0..n);
        } else if tables.from_vertex[pos].is_empty() {
            // An isolated vertex has no alternating move; the walker stays
            // put until teleportation rescues it (or the cap trips).
        } else {
            let j = tables.from_vertex[pos].sample(rng);
            counts.hbedge_passages[j] += 1;
            explored.visit_hbedge(j);
            pos = tables.from_hbedge[j].sample(rng);
        }
        counts.vertex_passages[pos] += 1;
        explored.visit_vertex(pos);
    }
}

/// One walk from a uniform start until every vertex and hb-edge has been
/// visited. `rng` supplies all randomness, so equal streams reproduce the
/// walk exactly.
pub fn walk_until_explored(
    g: &HbGraph,
    beta: f64,
    step_cap: u64,
    rng: &mut ChaCha8Rng,
) -> Result<WalkCounts> {
    walk(
        g,
        &WalkTables::new(g),
        beta,
        step_cap,
        StopRule::FullExploration,
        rng,
    )
}

/// One walk of exactly `steps` transitions, no stopping rule.
pub fn walk_steps(
    g: &HbGraph,
    beta: f64,
    steps: u64,
    rng: &mut ChaCha8Rng,
) -> Result<WalkCounts> {
    walk(
        g,
        &WalkTables::new(g),
        beta,
        u64::MAX,
        StopRule::FixedSteps(steps),
        rng,
    )
}

/// Aggregated outcome of `n_walks` independent walks plus the ranks the
/// passage counts induce.
#[derive(Debug, Clone)]
pub struct WalkOutcome {
    pub counts: WalkCounts,
    pub per_walk_steps: Vec<u64>,
    pub vertex_ranks: Vec<RankedValue>,
    pub hbedge_ranks: Vec<RankedValue>,
}

/// Runs `cfg.n_walks` full-exploration walks on independent substreams of
/// the seeded generator (walk `w` uses stream `w`), sums their counts and
/// ranks vertices and hb-edges by total passages.
pub fn run_n_walks(g: &HbGraph, cfg: &WalkConfig) -> Result<WalkOutcome> {
    cfg.validate()?;
    let tables = WalkTables::new(g);
    let mut counts = WalkCounts::zeros(g);
    let mut per_walk_steps = Vec::with_capacity(cfg.n_walks);
    for w in 0..cfg.n_walks {
        let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
        rng.set_stream(w as u64);
        let one = walk(
            g,
            &tables,
            cfg.beta,
            cfg.step_cap,
            StopRule::FullExploration,
            &mut rng,
        )?;
        per_walk_steps.push(one.total_steps);
        counts.absorb(&one);
    }

    let vertex_values: Vec<f64> = counts.vertex_passages.iter().map(|&c| c as f64).collect();
    let hbedge_ids: Vec<String> = g.hbedges().iter().map(|e| e.id().to_string()).collect();
    let hbedge_values: Vec<f64> = counts.hbedge_passages.iter().map(|&c| c as f64).collect();
    Ok(WalkOutcome {
        vertex_ranks: rank(g.vertices(), &vertex_values),
        hbedge_ranks: rank(&hbedge_ids, &hbedge_values),
        counts,
        per_walk_steps,
    })
}
