//! Shared fixtures and strategies for unit tests.

use proptest::prelude::*;

use crate::hbgraph::{HbEdge, HbGraph};
use crate::mset::Multiset;

pub fn ms(pairs: &[(&str, f64)]) -> Multiset {
    Multiset::from_pairs(pairs.iter().map(|(k, v)| (*k, *v))).unwrap()
}

/// Three vertices, two unweighted hb-edges: e1 = {v1, v1, v2},
/// e2 = {v2, v3}.
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

/// Same shape as `g1` but e1 carries weight 2.
pub fn g2() -> HbGraph {
    HbGraph::build(
        vec!["v1".into(), "v2".into(), "v3".into()],
        vec![
            HbEdge::new("e1", ms(&[("v1", 2.0), ("v2", 1.0)]), 2.0).unwrap(),
            HbEdge::unweighted("e2", ms(&[("v2", 1.0), ("v3", 1.0)])).unwrap(),
        ],
    )
    .unwrap()
}

fn weight_strategy(weighted: bool) -> BoxedStrategy<f64> {
    if weighted {
        prop_oneof![Just(1.0), (0.25f64..4.0)].boxed()
    } else {
        Just(1.0).boxed()
    }
}

/// Random small hb-graph; isolated vertices and an empty edge family are
/// both possible.
pub fn arb_hbgraph(max_n: usize, max_p: usize, weighted: bool) -> BoxedStrategy<HbGraph> {
    (1..=max_n)
        .prop_flat_map(move |n| {
            let edge = prop::collection::btree_map(0..n, 1u8..=3, 1..=n.min(4));
            prop::collection::vec((edge, weight_strategy(weighted)), 0..=max_p).prop_map(
                move |edges| {
                    let vertices: Vec<String> = (0..n).map(|i| format!("v{i}")).collect();
                    let hbedges = edges
                        .into_iter()
                        .enumerate()
                        .map(|(j, (members, w))| {
                            let members = Multiset::from_pairs(
                                members.into_iter().map(|(i, m)| (format!("v{i}"), m as f64)),
                            )
                            .unwrap();
                            HbEdge::new(format!("e{j}"), members, w).unwrap()
                        })
                        .collect();
                    HbGraph::build(vertices, hbedges).unwrap()
                },
            )
        })
        .boxed()
}

/// Random small hb-graph with at least one hb-edge and no isolated
/// vertices: the universe is trimmed to the vertices that occur in some
/// edge.
pub fn arb_covered_hbgraph(max_n: usize, max_p: usize, weighted: bool) -> BoxedStrategy<HbGraph> {
    (1..=max_n)
        .prop_flat_map(move |n| {
            let edge = prop::collection::btree_map(0..n, 1u8..=3, 1..=n.min(4));
            prop::collection::vec((edge, weight_strategy(weighted)), 1..=max_p.max(1)).prop_map(
                move |edges| {
                    let mut covered: Vec<usize> = edges
                        .iter()
                        .flat_map(|(members, _)| members.keys().copied())
                        .collect();
                    covered.sort_unstable();
                    covered.dedup();
                    let vertices: Vec<String> =
                        covered.iter().map(|i| format!("v{i}")).collect();
                    let hbedges = edges
                        .into_iter()
                        .enumerate()
                        .map(|(j, (members, w))| {
                            let members = Multiset::from_pairs(
                                members.into_iter().map(|(i, m)| (format!("v{i}"), m as f64)),
                            )
                            .unwrap();
                            HbEdge::new(format!("e{j}"), members, w).unwrap()
                        })
                        .collect();
                    HbGraph::build(vertices, hbedges).unwrap()
                },
            )
        })
        .boxed()
}

/// Relative closeness with an absolute floor of one: true when
/// `|a - b| <= tol * max(1, |a|, |b|)`.
pub fn close(a: f64, b: f64, tol: f64) -> bool {
    (a - b).abs() <= tol * a.abs().max(b.abs()).max(1.0)
}
