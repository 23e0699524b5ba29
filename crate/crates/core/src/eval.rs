//! Evaluation of diffusion outcomes: relative eccentricity of superlevel
//! sets, threshold sweeps, normalized hb-edge scores and rank correlation.

use std::collections::BTreeMap;
use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::hbgraph::HbGraph;

/// Number of equal threshold increments used by default.
pub const DEFAULT_SWEEP_STEPS: usize = 100;

/// What a sweep thresholds over.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SweepTarget {
    Vertices,
    Hbedges,
}

impl SweepTarget {
    pub fn as_str(&self) -> &'static str {
        match self {
            SweepTarget::Vertices => "vertices",
            SweepTarget::Hbedges => "hbedges",
        }
    }
}

/// One recorded threshold of a sweep. `ratio` is the threshold divided by
/// the reference value; `subset_fraction` is the share of items above the
/// threshold. `max_eccentricity` is `None` only in the never-recorded
/// all-unreachable case (the sweep stops instead).
#[derive(Debug, Clone, PartialEq)]
pub struct SweepPoint {
    pub ratio: f64,
    pub max_eccentricity: Option<usize>,
    pub subset_fraction: f64,
}

/// Eccentricity-versus-threshold curve for vertices or hb-edges.
#[derive(Debug, Clone, PartialEq)]
pub struct EccentricitySweep {
    pub target: SweepTarget,
    pub points: Vec<SweepPoint>,
}

/// Reference value `100 / order`; infinite for graphs of order zero.
pub fn alpha_ref(g: &HbGraph) -> f64 {
    100.0 / g.order()
}

/// For each vertex of `S`: the longest hb-edge-hop distance to a vertex
/// outside `S` that it can reach, or `None` when it reaches none.
pub fn relative_eccentricity(
    g: &HbGraph,
    subset: &BTreeSet<String>,
) -> Result<BTreeMap<String, Option<usize>>> {
    if subset.is_empty() {
        return Err(Error::InvalidSubset("subset is empty".into()));
    }
    if subset.len() >= g.vertex_count() {
        return Err(Error::InvalidSubset(
            "subset covers every vertex; nothing lies outside it".into(),
        ));
    }
    let mut indices = Vec::with_capacity(subset.len());
    for id in subset {
        indices.push(
            g.vertex_index(id)
                .ok_or_else(|| Error::UnknownVertex(id.clone()))?,
        );
    }
    let evg = g.extra_vertex_graph();
    let in_subset: Vec<bool> = {
        let mut v = vec![false; g.vertex_count()];
        for &i in &indices {
            v[i] = true;
        }
        v
    };
    let mut out = BTreeMap::new();
    for (id, &u) in subset.iter().zip(&indices) {
        let dist = evg.bfs_distances(evg.vertex_node(u));
        let ecc = (0..g.vertex_count())
            .filter(|&w| !in_subset[w])
            .filter_map(|w| dist[w])
            .max()
            .map(|d| (d / 2) as usize);
        out.insert(id.clone(), ecc);
    }
    Ok(out)
}

/// Pairwise hb-edge-hop distances between original vertices,
/// `u32::MAX` when unreachable.
fn vertex_distances(g: &HbGraph) -> Vec<Vec<u32>> {
    let evg = g.extra_vertex_graph();
    (0..g.vertex_count())
        .map(|u| {
            let dist = evg.bfs_distances(evg.vertex_node(u));
            (0..g.vertex_count())
                .map(|w| dist[w].map_or(u32::MAX, |d| d / 2))
                .collect()
        })
        .collect()
}

/// Pairwise hb-edge-hop distances between hb-edges (via their extra nodes,
/// halved), `u32::MAX` when unreachable.
fn hbedge_distances(g: &HbGraph) -> Vec<Vec<u32>> {
    let evg = g.extra_vertex_graph();
    (0..g.hbedge_count())
        .map(|u| {
            let dist = evg.bfs_distances(evg.extra_node(u));
            (0..g.hbedge_count())
                .map(|w| dist[evg.extra_node(w)].map_or(u32::MAX, |d| d / 2))
                .collect()
        })
        .collect()
}

/// Shared sweep mechanics: thresholds rise from 0 to the maximum value in
/// `steps` equal increments; every threshold whose superlevel set `A` is
/// neither empty nor everything records the maximal relative eccentricity
/// over `A` and `|A| / total`. The sweep stops early when every member of
/// `A` has nothing reachable outside `A`.
fn sweep(
    values: &[f64],
    dist: &[Vec<u32>],
    reference: f64,
    steps: usize,
    target: SweepTarget,
) -> EccentricitySweep {
    assert!(steps >= 1, "a sweep needs at least one increment");
    let total = values.len();
    let mut points = Vec::new();
    let max = values.iter().copied().fold(f64::NEG_INFINITY, f64::max);
    if total == 0 || max <= 0.0 {
        return EccentricitySweep { target, points };
    }
    for i in 0..=steps {
        let s = max * i as f64 / steps as f64;
        let in_a: Vec<bool> = values.iter().map(|&v| v > s).collect();
        let a_size = in_a.iter().filter(|&&b| b).count();
        if a_size == 0 || a_size == total {
            continue;
        }
        let mut point_max: Option<u32> = None;
        for u in (0..total).filter(|&u| in_a[u]) {
            for w in (0..total).filter(|&w| !in_a[w]) {
                let d = dist[u][w];
                if d != u32::MAX && point_max.is_none_or(|m| d > m) {
                    point_max = Some(d);
                }
            }
        }
        let Some(ecc) = point_max else {
            break;
        };
        points.push(SweepPoint {
            ratio: s / reference,
            max_eccentricity: Some(ecc as usize),
            subset_fraction: a_size as f64 / total as f64,
        });
    }
    EccentricitySweep { target, points }
}

/// Threshold sweep over vertex values (typically the final diffusion
/// alpha).
pub fn sweep_vertices(g: &HbGraph, alpha: &[f64], steps: usize) -> Result<EccentricitySweep> {
    if alpha.len() != g.vertex_count() {
        return Err(Error::LengthMismatch {
            expected: g.vertex_count(),
            actual: alpha.len(),
        });
    }
    Ok(sweep(
        alpha,
        &vertex_distances(g),
        alpha_ref(g),
        steps,
        SweepTarget::Vertices,
    ))
}

/// Threshold sweep over hb-edge values (typically the final half-step
/// epsilon).
pub fn sweep_hbedges(g: &HbGraph, epsilon: &[f64], steps: usize) -> Result<EccentricitySweep> {
    if epsilon.len() != g.hbedge_count() {
        return Err(Error::LengthMismatch {
            expected: g.hbedge_count(),
            actual: epsilon.len(),
        });
    }
    Ok(sweep(
        epsilon,
        &hbedge_distances(g),
        alpha_ref(g),
        steps,
        SweepTarget::Hbedges,
    ))
}

/// Normalizer of an hb-edge: what its value would be if every support
/// vertex carried the reference value, i.e.
/// `sum over members of multiplicity / m-degree, times 100 / order`.
pub fn epsilon_norm(g: &HbGraph, e: &str) -> Result<f64> {
    let j = g
        .hbedge_index(e)
        .ok_or_else(|| Error::UnknownHbEdge(e.to_string()))?;
    let reference = alpha_ref(g);
    Ok(g.hbedge_members(j)
        .iter()
        .map(|&(i, m)| m / g.m_degree_by_index(i))
        .sum::<f64>()
        * reference)
}

/// Per-hb-edge color ratio: epsilon divided by the hb-edge's normalizer.
/// Higher means hotter in exports.
pub fn hbedge_color_ratios(g: &HbGraph, epsilon: &[f64]) -> Result<Vec<f64>> {
    if epsilon.len() != g.hbedge_count() {
        return Err(Error::LengthMismatch {
            expected: g.hbedge_count(),
            actual: epsilon.len(),
        });
    }
    g.hbedges()
        .iter()
        .zip(epsilon)
        .map(|(e, &eps)| Ok(eps / epsilon_norm(g, e.id())?))
        .collect()
}

/// Ascending average ranks (ties share the mean of their positions,
/// 1-based).
fn average_ranks(x: &[f64]) -> Vec<f64> {
    let mut idx: Vec<usize> = (0..x.len()).collect();
    idx.sort_by(|&a, &b| x[a].total_cmp(&x[b]));
    let mut ranks = vec![0.0; x.len()];
    let mut i = 0;
    while i < idx.len() {
        let mut j = i;
        while j + 1 < idx.len() && x[idx[j + 1]] == x[idx[i]] {
            j += 1;
        }
        let avg = (i + j) as f64 / 2.0 + 1.0;
        for &k in &idx[i..=j] {
            ranks[k] = avg;
        }
        i = j + 1;
    }
    ranks
}

/// Spearman rank correlation with average-rank tie handling. Constant
/// inputs (zero rank variance) yield 0.
pub fn spearman(a: &[f64], b: &[f64]) -> Result<f64> {
    if a.len() != b.len() {
        return Err(Error::LengthMismatch {
            expected: a.len(),
            actual: b.len(),
        });
    }
    let n = a.len();
    if n == 0 {
        return Ok(0.0);
    }
    let ra = average_ranks(a);
    let rb = average_ranks(b);
    let mean = (n + 1) as f64 / 2.0;
    let mut cov = 0.0;
    let mut va = 0.0;
    let mut vb = 0.0;
    for (x, y) in ra.iter().zip(&rb) {
        let dx = x - mean;
        let dy = y - mean;
        cov += dx * dy;
        va += dx * dx;
        vb += dy * dy;
    }
    if va == 0.0 || vb == 0.0 {
        return Ok(0.0);
    }
    Ok(cov / (va * vb).sqrt())
}
