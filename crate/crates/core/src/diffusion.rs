//! Two-phase exchange diffusion over an hb-graph.
//!
//! Each whole step moves all value from vertices to hb-edges and back:
//! phase 1 splits a vertex's value over its incident hb-edges in proportion
//! to `multiplicity * weight / weighted m-degree`; phase 2 returns an
//! hb-edge's value to its members in proportion to
//! `multiplicity * weight / m-cardinality`. Nothing is renormalized, so on
//! unweighted graphs the total vertex value is conserved exactly.

use crate::error::{Error, Result};
use crate::hbgraph::HbGraph;

/// Number of whole diffusion steps used by default.
pub const DEFAULT_STEPS: usize = 5;

/// Diffusion values at a point in time: `alpha` on vertices, `epsilon` on
/// hb-edges. After phase 1 the state sits at a half step (`t + 1/2`), where
/// `epsilon` is fresh and `alpha` still holds the values of step `t`.
#[derive(Debug, Clone, PartialEq)]
pub struct DiffusionState {
    whole_steps: usize,
    at_half_step: bool,
    alpha: Vec<f64>,
    epsilon: Vec<f64>,
}

impl DiffusionState {
    pub fn alpha(&self) -> &[f64] {
        &self.alpha
    }

    pub fn epsilon(&self) -> &[f64] {
        &self.epsilon
    }

    /// Count of completed whole steps.
    pub fn whole_steps(&self) -> usize {
        self.whole_steps
    }

    pub fn at_half_step(&self) -> bool {
        self.at_half_step
    }
}

/// Start state: every vertex holds 1, every hb-edge holds 0.
pub fn init_state(g: &HbGraph) -> DiffusionState {
    DiffusionState {
        whole_steps: 0,
        at_half_step: false,
        alpha: vec![1.0; g.vertex_count()],
        epsilon: vec![0.0; g.hbedge_count()],
    }
}

/// Phase 1: vertices push their value onto incident hb-edges. Requires a
/// whole-step state.
pub fn phase1(g: &HbGraph, state: &DiffusionState) -> DiffusionState {
    assert!(!state.at_half_step, "phase 1 requires a whole-step state");
    let mut epsilon = vec![0.0; g.hbedge_count()];
    for (j, edge) in g.hbedges().iter().enumerate() {
        let w = edge.weight();
        let mut acc = 0.0;
        for &(i, m) in g.hbedge_members(j) {
            // Members always have a positive weighted m-degree.
            acc += m * w / g.weighted_m_degree_by_index(i) * state.alpha[i];
        }
        epsilon[j] = acc;
    }
    DiffusionState {
        whole_steps: state.whole_steps,
        at_half_step: true,
        alpha: state.alpha.clone(),
        epsilon,
    }
}

/// Phase 2: hb-edges hand their value back to member vertices. Vertices in
/// no hb-edge keep their previous value. Requires a half-step state.
pub fn phase2(g: &HbGraph, state: &DiffusionState) -> DiffusionState {
    assert!(state.at_half_step, "phase 2 requires a half-step state");
    let mut alpha = vec![0.0; g.vertex_count()];
    for (i, a) in alpha.iter_mut().enumerate() {
        let incident = g.incident_hbedges(i);
        if incident.is_empty() {
            *a = state.alpha[i];
            continue;
        }
        let mut acc = 0.0;
        for &(j, m) in incident {
            let w = g.hbedges()[j].weight();
            acc += m * w / g.hbedge_m_cardinality_by_index(j) * state.epsilon[j];
        }
        *a = acc;
    }
    DiffusionState {
        whole_steps: state.whole_steps + 1,
        at_half_step: false,
        alpha,
        epsilon: state.epsilon.clone(),
    }
}

/// One whole step: phase 1 then phase 2.
pub fn step(g: &HbGraph, state: &DiffusionState) -> DiffusionState {
    phase2(g, &phase1(g, state))
}

/// Full record of a diffusion run: vertex values after every whole step and
/// hb-edge values after every half step.
#[derive(Debug, Clone, PartialEq)]
pub struct DiffusionTrace {
    steps: usize,
    /// `alphas[t]` for t = 0..=steps.
    alphas: Vec<Vec<f64>>,
    /// `epsilons[t]` holds the hb-edge values at half step `t + 1/2`,
    /// for t = 0..steps.
    epsilons: Vec<Vec<f64>>,
}

impl DiffusionTrace {
    /// Reassembles a trace from stored rows, checking shape consistency.
    pub fn from_parts(alphas: Vec<Vec<f64>>, epsilons: Vec<Vec<f64>>) -> Result<Self> {
        if alphas.is_empty() || alphas.len() != epsilons.len() + 1 {
            return Err(Error::Schema(format!(
                "trace needs one more alpha column than epsilon columns, got {} and {}",
                alphas.len(),
                epsilons.len()
            )));
        }
        let n = alphas[0].len();
        if alphas.iter().any(|a| a.len() != n) {
            return Err(Error::Schema("ragged alpha rows in trace".into()));
        }
        let p = epsilons.first().map_or(0, Vec::len);
        if epsilons.iter().any(|e| e.len() != p) {
            return Err(Error::Schema("ragged epsilon rows in trace".into()));
        }
        Ok(Self {
            steps: epsilons.len(),
            alphas,
            epsilons,
        })
    }

    /// Number of whole steps the trace covers.
    pub fn step_count(&self) -> usize {
        self.steps
    }

    pub fn vertex_count(&self) -> usize {
        self.alphas[0].len()
    }

    pub fn hbedge_count(&self) -> usize {
        self.epsilons.first().map_or(0, Vec::len)
    }

    /// Vertex values after `t` whole steps, t in `0..=step_count()`.
    pub fn alpha_at(&self, t: usize) -> &[f64] {
        &self.alphas[t]
    }

    /// Hb-edge values at half step `t + 1/2`, t in `0..step_count()`.
    pub fn epsilon_at(&self, t: usize) -> &[f64] {
        &self.epsilons[t]
    }

    pub fn final_alpha(&self) -> &[f64] {
        self.alphas.last().unwrap()
    }

    /// Hb-edge values at the last half step.
    pub fn final_epsilon(&self) -> &[f64] {
        self.epsilons
            .last()
            .expect("trace with zero steps has no epsilon")
    }
}

/// Runs `steps >= 1` whole steps from the start state and records every
/// intermediate value.
pub fn run(g: &HbGraph, steps: usize) -> DiffusionTrace {
    assert!(steps >= 1, "diffusion needs at least one step");
    let mut alphas = Vec::with_capacity(steps + 1);
    let mut epsilons = Vec::with_capacity(steps);
    let mut state = init_state(g);
    alphas.push(state.alpha.clone());
    for _ in 0..steps {
        let half = phase1(g, &state);
        epsilons.push(half.epsilon.clone());
        state = phase2(g, &half);
        alphas.push(state.alpha.clone());
    }
    DiffusionTrace {
        steps,
        alphas,
        epsilons,
    }
}

/// Dense one-step transition matrix `T`, row-major: a whole step maps the
/// row vector `alpha` to `alpha * T`. Rows of vertices in no hb-edge are
/// identity rows, matching the keep-your-value rule of phase 2.
pub fn transition_matrix(g: &HbGraph) -> Vec<Vec<f64>> {
    let n = g.vertex_count();
    let mut t = vec![vec![0.0; n]; n];
    for (j, edge) in g.hbedges().iter().enumerate() {
        let w = edge.weight();
        let card = g.hbedge_m_cardinality_by_index(j);
        let members = g.hbedge_members(j);
        for &(i, mi) in members {
            let give = mi * w / g.weighted_m_degree_by_index(i);
            for &(i2, mi2) in members {
                t[i][i2] += give * mi2 * w / card;
            }
        }
    }
    for (i, row) in t.iter_mut().enumerate() {
        if g.incident_hbedges(i).is_empty() {
            row[i] = 1.0;
        }
    }
    t
}

/// Applies the transition matrix to a row vector: `out = alpha * T`.
pub fn apply_transition(matrix: &[Vec<f64>], alpha: &[f64]) -> Vec<f64> {
    assert_eq!(matrix.len(), alpha.len(), "matrix and vector sizes differ");
    let n = alpha.len();
    let mut out = vec![0.0; n];
    for i in 0..n {
        let a = alpha[i];
        if a == 0.0 {
            continue;
        }
        for i2 in 0..n {
            out[i2] += a * matrix[i][i2];
        }
    }
    out
}

/// A value with its dense 1-based rank: rank 1 is the largest value, ties
/// share a rank, and the next distinct value gets the next rank.
#[derive(Debug, Clone, PartialEq)]
pub struct RankedValue {
    /// Position in the input slice.
    pub index: usize,
    pub id: String,
    pub value: f64,
    pub rank: usize,
}

/// Ranks values descending; ties share a dense rank and are listed in
/// ascending id order. Values must be finite.
pub fn rank(ids: &[String], values: &[f64]) -> Vec<RankedValue> {
    assert_eq!(ids.len(), values.len(), "ids and values must align");
    let mut order: Vec<usize> = (0..ids.len()).collect();
    order.sort_by(|&a, &b| {
        values[b]
            .total_cmp(&values[a])
            .then_with(|| ids[a].cmp(&ids[b]))
    });
    let mut out = Vec::with_capacity(ids.len());
    let mut rank = 0;
    let mut prev = f64::INFINITY;
    for idx in order {
        if values[idx] != prev {
            rank += 1;
            prev = values[idx];
        }
        out.push(RankedValue {
            index: idx,
            id: ids[idx].clone(),
            value: values[idx],
            rank,
        });
    }
    out
}

/// Rank of each input position, aligned with the original value order.
pub fn ranks_by_index(ranked: &[RankedValue]) -> Vec<usize> {
    let mut out = vec![0; ranked.len()];
    for r in ranked {
        out[r.index] = r.rank;
    }
    out
}
