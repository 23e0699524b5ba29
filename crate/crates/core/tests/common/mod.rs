//! Fixtures shared by the integration tests.
#![allow(dead_code)]

use std::collections::BTreeSet;

use hbdiff::{HbEdge, HbGraph, Multiset};
use rand::{RngExt, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn ms(pairs: &[(&str, f64)]) -> Multiset {
    Multiset::from_pairs(pairs.iter().map(|&(v, m)| (v, m))).unwrap()
}

/// Three vertices, two unweighted hb-edges sharing `v2`.
pub fn g1() -> HbGraph {
    HbGraph::build(
        vec!["v1".into(), "v2".into(), "v3".into()],
        vec![
            HbEdge::unweighted("e1", ms(&[("v1", 2.0), ("v2", 1.0)])).unwrap(),
            HbEdge::unweighted("e2", ms(&[("v2", 1.0), ("v3", 1.0)])).unwrap(),
        ],
    )
    .unwrap()
}

/// Same shape as `g1` with weight 2 on the first hb-edge.
pub fn g2() -> HbGraph {
    HbGraph::build(
        vec!["v1".into(), "v2".into(), "v3".into()],
        vec![
            HbEdge::new("e1", ms(&[("v1", 2.0), ("v2", 1.0)]), 2.0).unwrap(),
            HbEdge::new("e2", ms(&[("v2", 1.0), ("v3", 1.0)]), 1.0).unwrap(),
        ],
    )
    .unwrap()
}

/// Connected four-vertex chain with mixed multiplicities.
pub fn fixture4() -> HbGraph {
    HbGraph::build(
        vec!["v1".into(), "v2".into(), "v3".into(), "v4".into()],
        vec![
            HbEdge::unweighted("e1", ms(&[("v1", 2.0), ("v2", 1.0)])).unwrap(),
            HbEdge::unweighted("e2", ms(&[("v2", 1.0), ("v3", 2.0)])).unwrap(),
            HbEdge::unweighted("e3", ms(&[("v3", 1.0), ("v4", 1.0)])).unwrap(),
        ],
    )
    .unwrap()
}

/// Seeded random graph with up to 50 vertices and 30 hb-edges where every
/// retained vertex sits in at least one hb-edge. `weighted` mixes edge
/// weights from {0.5, 1, 2, 3.5}; otherwise all weights are 1.
pub fn random_covered_graph(seed: u64, weighted: bool) -> HbGraph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let pool: usize = rng.random_range(2..=50);
    let n_hbedges: usize = rng.random_range(1..=30);
    let weights = [0.5, 1.0, 2.0, 3.5];
    let mut edges = Vec::with_capacity(n_hbedges);
    let mut covered: BTreeSet<String> = BTreeSet::new();
    for j in 0..n_hbedges {
        let support = rng.random_range(1..=pool.min(5));
        let mut chosen = BTreeSet::new();
        while chosen.len() < support {
            chosen.insert(rng.random_range(0..pool));
        }
        let members: Vec<(String, f64)> = chosen
            .into_iter()
            .map(|v| (format!("v{v}"), rng.random_range(1..=3) as f64))
            .collect();
        covered.extend(members.iter().map(|(v, _)| v.clone()));
        let w = if weighted {
            weights[rng.random_range(0..weights.len())]
        } else {
            1.0
        };
        edges.push(HbEdge::new(format!("e{j:02}"), Multiset::from_pairs(members).unwrap(), w).unwrap());
    }
    HbGraph::build(covered.into_iter().collect(), edges).unwrap()
}

/// True when `a` and `b` agree within `tol`, relative to their magnitude.
pub fn close(a: f64, b: f64, tol: f64) -> bool {
    (a - b).abs() <= tol * 1.0_f64.max(a.abs()).max(b.abs())
}
