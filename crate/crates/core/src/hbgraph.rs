//! Hyper-bag-graphs: families of vertex multisets (hb-edges) with weights.

use std::collections::{BTreeSet, HashMap, VecDeque};

use crate::error::{Error, Result};
use crate::mset::Multiset;

/// A weighted hb-edge: a non-empty multiset of vertices plus a positive
/// weight.
#[derive(Debug, Clone, PartialEq)]
pub struct HbEdge {
    id: String,
    members: Multiset,
    weight: f64,
}

impl HbEdge {
    pub fn new(id: impl Into<String>, members: Multiset, weight: f64) -> Result<Self> {
        let id = id.into();
        if members.is_empty() {
            return Err(Error::EmptySupport(id));
        }
        if !weight.is_finite() || weight <= 0.0 {
            return Err(Error::NonPositiveWeight { id, weight });
        }
        Ok(Self {
            id,
            members,
            weight,
        })
    }

    /// An hb-edge with the default weight of 1.
    pub fn unweighted(id: impl Into<String>, members: Multiset) -> Result<Self> {
        Self::new(id, members, 1.0)
    }

    pub fn id(&self) -> &str {
        &self.id
    }

    pub fn members(&self) -> &Multiset {
        &self.members
    }

    pub fn weight(&self) -> f64 {
        self.weight
    }

    pub fn m_cardinality(&self) -> f64 {
        self.members.m_cardinality()
    }

    pub fn support_cardinality(&self) -> usize {
        self.members.support_cardinality()
    }
}

/// An hb-graph: an ordered vertex universe plus a family of hb-edges over it.
///
/// Vertices may appear in no hb-edge at all (isolated vertices are allowed);
/// every hb-edge support must lie inside the universe. Per-vertex and
/// per-edge aggregates are precomputed at build time, so lookups are O(1).
#[derive(Debug, Clone)]
pub struct HbGraph {
    vertices: Vec<String>,
    vertex_index: HashMap<String, usize>,
    hbedges: Vec<HbEdge>,
    hbedge_index: HashMap<String, usize>,
    /// Per hb-edge: (vertex index, multiplicity), ascending by vertex index.
    edge_members: Vec<Vec<(usize, f64)>>,
    /// Per vertex: (hb-edge index, multiplicity), ascending by edge index.
    vertex_incidence: Vec<Vec<(usize, f64)>>,
    m_degrees: Vec<f64>,
    weighted_m_degrees: Vec<f64>,
    edge_m_cardinalities: Vec<f64>,
}

impl HbGraph {
    /// Builds an hb-graph, validating id uniqueness and support membership.
    pub fn build(vertices: Vec<String>, hbedges: Vec<HbEdge>) -> Result<Self> {
        let mut vertex_index = HashMap::with_capacity(vertices.len());
        for (i, v) in vertices.iter().enumerate() {
            if vertex_index.insert(v.clone(), i).is_some() {
                return Err(Error::DuplicateVertex(v.clone()));
            }
        }
        let mut hbedge_index = HashMap::with_capacity(hbedges.len());
        for (j, e) in hbedges.iter().enumerate() {
            if hbedge_index.insert(e.id.clone(), j).is_some() {
                return Err(Error::DuplicateHbEdge(e.id.clone()));
            }
        }

        let n = vertices.len();
        let mut edge_members = Vec::with_capacity(hbedges.len());
        let mut vertex_incidence = vec![Vec::new(); n];
        let mut m_degrees = vec![0.0; n];
        let mut weighted_m_degrees = vec![0.0; n];
        let mut edge_m_cardinalities = Vec::with_capacity(hbedges.len());

        for (j, e) in hbedges.iter().enumerate() {
            let mut members = Vec::with_capacity(e.members.support_cardinality());
            for (id, m) in e.members.iter() {
                let i = *vertex_index
                    .get(id)
                    .ok_or_else(|| Error::UnknownVertex(id.to_string()))?;
                members.push((i, m));
                vertex_incidence[i].push((j, m));
                m_degrees[i] += m;
                weighted_m_degrees[i] += m * e.weight;
            }
            members.sort_by_key(|&(i, _)| i);
            edge_members.push(members);
            edge_m_cardinalities.push(e.m_cardinality());
        }

        Ok(Self {
            vertices,
            vertex_index,
            hbedges,
            hbedge_index,
            edge_members,
            vertex_incidence,
            m_degrees,
            weighted_m_degrees,
            edge_m_cardinalities,
        })
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn hbedge_count(&self) -> usize {
        self.hbedges.len()
    }

    pub fn vertices(&self) -> &[String] {
        &self.vertices
    }

    pub fn hbedges(&self) -> &[HbEdge] {
        &self.hbedges
    }

    pub fn vertex_id(&self, index: usize) -> &str {
        &self.vertices[index]
    }

    pub fn vertex_index(&self, id: &str) -> Option<usize> {
        self.vertex_index.get(id).copied()
    }

    pub fn hbedge_index(&self, id: &str) -> Option<usize> {
        self.hbedge_index.get(id).copied()
    }

    fn require_vertex(&self, id: &str) -> Result<usize> {
        self.vertex_index(id)
            .ok_or_else(|| Error::UnknownVertex(id.to_string()))
    }

    fn require_hbedge(&self, id: &str) -> Result<usize> {
        self.hbedge_index(id)
            .ok_or_else(|| Error::UnknownHbEdge(id.to_string()))
    }

    /// `(hb-edge index, multiplicity)` pairs for every hb-edge containing
    /// the vertex, ascending by edge index.
    pub fn incident_hbedges(&self, vertex: usize) -> &[(usize, f64)] {
        &self.vertex_incidence[vertex]
    }

    /// `(vertex index, multiplicity)` pairs of an hb-edge, ascending by
    /// vertex index.
    pub fn hbedge_members(&self, hbedge: usize) -> &[(usize, f64)] {
        &self.edge_members[hbedge]
    }

    /// Sum of the vertex's multiplicities across all hb-edges.
    pub fn m_degree(&self, id: &str) -> Result<f64> {
        Ok(self.m_degrees[self.require_vertex(id)?])
    }

    pub fn m_degree_by_index(&self, vertex: usize) -> f64 {
        self.m_degrees[vertex]
    }

    /// Number of hb-edges whose support contains the vertex.
    pub fn degree(&self, id: &str) -> Result<usize> {
        Ok(self.vertex_incidence[self.require_vertex(id)?].len())
    }

    pub fn degree_by_index(&self, vertex: usize) -> usize {
        self.vertex_incidence[vertex].len()
    }

    /// Weight-scaled m-degree: sum over incident hb-edges of
    /// multiplicity times edge weight.
    pub fn weighted_m_degree(&self, id: &str) -> Result<f64> {
        Ok(self.weighted_m_degrees[self.require_vertex(id)?])
    }

    pub fn weighted_m_degree_by_index(&self, vertex: usize) -> f64 {
        self.weighted_m_degrees[vertex]
    }

    /// m-cardinality of an hb-edge by id.
    pub fn hbedge_m_cardinality(&self, id: &str) -> Result<f64> {
        Ok(self.edge_m_cardinalities[self.require_hbedge(id)?])
    }

    pub fn hbedge_m_cardinality_by_index(&self, hbedge: usize) -> f64 {
        self.edge_m_cardinalities[hbedge]
    }

    /// Sum over vertices of the maximum multiplicity any hb-edge assigns
    /// to them.
    pub fn order(&self) -> f64 {
        self.vertex_incidence
            .iter()
            .map(|inc| inc.iter().map(|&(_, m)| m).fold(0.0, f64::max))
            .sum()
    }

    /// Multiplicity of vertex `i` in hb-edge `j` (the incidence entry).
    pub fn incidence(&self, vertex: usize, hbedge: usize) -> f64 {
        self.hbedges[hbedge].members.multiplicity(&self.vertices[vertex])
    }

    /// Dense incidence matrix, vertices along rows and hb-edges along
    /// columns.
    pub fn incidence_matrix(&self) -> Vec<Vec<f64>> {
        let mut h = vec![vec![0.0; self.hbedge_count()]; self.vertex_count()];
        for (j, members) in self.edge_members.iter().enumerate() {
            for &(i, m) in members {
                h[i][j] = m;
            }
        }
        h
    }

    /// Forgets multiplicities: each hb-edge collapses to its support set.
    /// Distinct hb-edges with equal supports stay distinct (same ids).
    pub fn support_hypergraph(&self) -> SupportHypergraph {
        let hyperedges = self
            .hbedges
            .iter()
            .map(|e| SupportEdge {
                id: e.id.clone(),
                vertices: e.members.support().map(str::to_string).collect(),
            })
            .collect();
        SupportHypergraph {
            vertices: self.vertices.clone(),
            hyperedges,
        }
    }

    /// Bipartite incidence graph: one node per vertex, one extra node per
    /// hb-edge, an undirected edge whenever the vertex lies in the hb-edge
    /// support.
    pub fn extra_vertex_graph(&self) -> ExtraVertexGraph {
        let n = self.vertex_count();
        let p = self.hbedge_count();
        let mut adjacency = vec![Vec::new(); n + p];
        for (j, members) in self.edge_members.iter().enumerate() {
            for &(i, _) in members {
                adjacency[i].push(n + j);
                adjacency[n + j].push(i);
            }
        }
        ExtraVertexGraph {
            vertex_count: n,
            extra_count: p,
            adjacency,
            vertex_ids: self.vertices.clone(),
            hbedge_ids: self.hbedges.iter().map(|e| e.id.clone()).collect(),
        }
    }

    /// Shortest path length between two vertices, counted in hb-edge hops.
    /// `Some(0)` when `from == to`, `None` when unreachable.
    pub fn path_length(&self, from: &str, to: &str) -> Result<Option<usize>> {
        let s = self.require_vertex(from)?;
        let t = self.require_vertex(to)?;
        let evg = self.extra_vertex_graph();
        let dist = evg.bfs_distances(s);
        Ok(dist[t].map(|d| {
            debug_assert!(d % 2 == 0, "vertex-to-vertex walks have even length");
            (d / 2) as usize
        }))
    }
}

/// An hb-edge reduced to its support set.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SupportEdge {
    pub id: String,
    pub vertices: BTreeSet<String>,
}

/// The hypergraph obtained by forgetting multiplicities.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SupportHypergraph {
    pub vertices: Vec<String>,
    pub hyperedges: Vec<SupportEdge>,
}

impl SupportHypergraph {
    /// Number of hyperedges containing the vertex.
    pub fn degree(&self, id: &str) -> usize {
        self.hyperedges
            .iter()
            .filter(|e| e.vertices.contains(id))
            .count()
    }
}

/// Bipartite incidence graph of an hb-graph. Nodes `0..vertex_count` are
/// the original vertices; nodes `vertex_count..vertex_count + extra_count`
/// stand in for the hb-edges.
#[derive(Debug, Clone)]
pub struct ExtraVertexGraph {
    vertex_count: usize,
    extra_count: usize,
    adjacency: Vec<Vec<usize>>,
    vertex_ids: Vec<String>,
    hbedge_ids: Vec<String>,
}

impl ExtraVertexGraph {
    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn extra_count(&self) -> usize {
        self.extra_count
    }

    pub fn node_count(&self) -> usize {
        self.vertex_count + self.extra_count
    }

    /// Node index of an original vertex.
    pub fn vertex_node(&self, vertex: usize) -> usize {
        debug_assert!(vertex < self.vertex_count);
        vertex
    }

    /// Node index of the extra node standing in for an hb-edge.
    pub fn extra_node(&self, hbedge: usize) -> usize {
        debug_assert!(hbedge < self.extra_count);
        self.vertex_count + hbedge
    }

    pub fn neighbors(&self, node: usize) -> &[usize] {
        &self.adjacency[node]
    }

    pub fn vertex_ids(&self) -> &[String] {
        &self.vertex_ids
    }

    pub fn hbedge_ids(&self) -> &[String] {
        &self.hbedge_ids
    }

    /// Hop distances from `start` to every node; `None` when unreachable.
    pub fn bfs_distances(&self, start: usize) -> Vec<Option<u32>> {
        let mut dist = vec![None; self.node_count()];
        dist[start] = Some(0);
        let mut queue = VecDeque::from([start]);
        while let Some(u) = queue.pop_front() {
            let du = dist[u].unwrap();
            for &w in &self.adjacency[u] {
                if dist[w].is_none() {
                    dist[w] = Some(du + 1);
                    queue.push_back(w);
                }
            }
        }
        dist
    }

    /// True when every node is reachable from node 0 (or the graph is
    /// empty).
    pub fn is_connected(&self) -> bool {
        if self.node_count() == 0 {
            return true;
        }
        self.bfs_distances(0).iter().all(Option::is_some)
    }

    /// Number of connected components.
    pub fn component_count(&self) -> usize {
        let mut seen = vec![false; self.node_count()];
        let mut count = 0;
        for s in 0..self.node_count() {
            if seen[s] {
                continue;
            }
            count += 1;
            let mut queue = VecDeque::from([s]);
            seen[s] = true;
            while let Some(u) = queue.pop_front() {
                for &w in &self.adjacency[u] {
                    if !seen[w] {
                        seen[w] = true;
                        queue.push_back(w);
                    }
                }
            }
        }
        count
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::test_util::{g1, ms};

    #[test]
    fn build_rejects_invalid_inputs() {
        assert!(matches!(
            HbEdge::unweighted("e", Multiset::new()),
            Err(Error::EmptySupport(_))
        ));
        assert!(matches!(
            HbEdge::new("e", ms(&[("v1", 1.0)]), 0.0),
            Err(Error::NonPositiveWeight { .. })
        ));
        assert!(matches!(
            HbEdge::new("e", ms(&[("v1", 1.0)]), -2.0),
            Err(Error::NonPositiveWeight { .. })
        ));
        let e = HbEdge::unweighted("e", ms(&[("vX", 1.0)])).unwrap();
        assert!(matches!(
            HbGraph::build(vec!["v1".into()], vec![e]),
            Err(Error::UnknownVertex(_))
        ));
        assert!(matches!(
            HbGraph::build(vec!["v1".into(), "v1".into()], vec![]),
            Err(Error::DuplicateVertex(_))
        ));
        let e1 = HbEdge::unweighted("e", ms(&[("v1", 1.0)])).unwrap();
        let e2 = HbEdge::unweighted("e", ms(&[("v1", 2.0)])).unwrap();
        assert!(matches!(
            HbGraph::build(vec!["v1".into()], vec![e1, e2]),
            Err(Error::DuplicateHbEdge(_))
        ));
    }

    #[test]
    fn degrees_and_order() {
        let g = g1();
        assert_eq!(g.m_degree("v1").unwrap(), 2.0);
        assert_eq!(g.m_degree("v2").unwrap(), 2.0);
        assert_eq!(g.m_degree("v3").unwrap(), 1.0);
        assert_eq!(g.degree("v1").unwrap(), 1);
        assert_eq!(g.degree("v2").unwrap(), 2);
        assert_eq!(g.degree("v3").unwrap(), 1);
        assert_eq!(g.order(), 4.0);
        assert!(matches!(g.m_degree("vX"), Err(Error::UnknownVertex(_))));
    }

    #[test]
    fn weighted_degrees_scale_with_edge_weight() {
        let g = HbGraph::build(
            vec!["v1".into(), "v2".into(), "v3".into()],
            vec![
                HbEdge::new("e1", ms(&[("v1", 2.0), ("v2", 1.0)]), 2.0).unwrap(),
                HbEdge::unweighted("e2", ms(&[("v2", 1.0), ("v3", 1.0)])).unwrap(),
            ],
        )
        .unwrap();
        assert_eq!(g.weighted_m_degree("v1").unwrap(), 4.0);
        assert_eq!(g.weighted_m_degree("v2").unwrap(), 3.0);
        assert_eq!(g.weighted_m_degree("v3").unwrap(), 1.0);
        // Unweighted graphs collapse to the plain m-degree.
        let g = g1();
        for v in ["v1", "v2", "v3"] {
            assert_eq!(g.weighted_m_degree(v).unwrap(), g.m_degree(v).unwrap());
        }
    }

    #[test]
    fn isolated_vertices_are_allowed() {
        let g = HbGraph::build(
            vec!["v1".into(), "lonely".into()],
            vec![HbEdge::unweighted("e1", ms(&[("v1", 1.0)])).unwrap()],
        )
        .unwrap();
        assert_eq!(g.m_degree("lonely").unwrap(), 0.0);
        assert_eq!(g.degree("lonely").unwrap(), 0);
        assert_eq!(g.path_length("v1", "lonely").unwrap(), None);
    }

    #[test]
    fn incidence_matrix_matches_multiplicities() {
        let g = g1();
        assert_eq!(
            g.incidence_matrix(),
            vec![vec![2.0, 0.0], vec![1.0, 1.0], vec![0.0, 1.0]]
        );
        assert_eq!(g.incidence(0, 0), 2.0);
        assert_eq!(g.incidence(2, 0), 0.0);
    }

    #[test]
    fn hbedge_cardinalities() {
        let g = g1();
        assert_eq!(g.hbedge_m_cardinality("e1").unwrap(), 3.0);
        assert_eq!(g.hbedges()[0].support_cardinality(), 2);
        assert!(matches!(
            g.hbedge_m_cardinality("eX"),
            Err(Error::UnknownHbEdge(_))
        ));
    }

    #[test]
    fn support_hypergraph_forgets_multiplicities() {
        let g = g1();
        let sh = g.support_hypergraph();
        assert_eq!(sh.vertices, vec!["v1", "v2", "v3"]);
        assert_eq!(
            sh.hyperedges[0].vertices,
            BTreeSet::from(["v1".to_string(), "v2".to_string()])
        );
        // Support-level degree agrees with the hb-graph degree.
        for v in ["v1", "v2", "v3"] {
            assert_eq!(sh.degree(v), g.degree(v).unwrap());
        }
    }

    #[test]
    fn extra_vertex_graph_structure() {
        let g = g1();
        let evg = g.extra_vertex_graph();
        assert_eq!(evg.vertex_count(), 3);
        assert_eq!(evg.extra_count(), 2);
        assert_eq!(evg.node_count(), 5);
        // v1 touches only e1; v2 touches both extra nodes.
        assert_eq!(evg.neighbors(0), &[evg.extra_node(0)]);
        assert_eq!(
            evg.neighbors(1),
            &[evg.extra_node(0), evg.extra_node(1)]
        );
        assert!(evg.is_connected());
        assert_eq!(evg.component_count(), 1);
    }

    #[test]
    fn path_lengths_count_hbedge_hops() {
        let g = g1();
        assert_eq!(g.path_length("v1", "v1").unwrap(), Some(0));
        assert_eq!(g.path_length("v1", "v2").unwrap(), Some(1));
        assert_eq!(g.path_length("v1", "v3").unwrap(), Some(2));
        assert_eq!(g.path_length("v3", "v1").unwrap(), Some(2));
        assert!(matches!(
            g.path_length("v1", "vX"),
            Err(Error::UnknownVertex(_))
        ));
    }

    #[test]
    fn disconnected_components_are_counted() {
        let g = HbGraph::build(
            vec!["a".into(), "b".into(), "c".into(), "d".into()],
            vec![
                HbEdge::unweighted("e1", ms(&[("a", 1.0), ("b", 2.0)])).unwrap(),
                HbEdge::unweighted("e2", ms(&[("c", 1.0), ("d", 1.0)])).unwrap(),
            ],
        )
        .unwrap();
        let evg = g.extra_vertex_graph();
        assert!(!evg.is_connected());
        assert_eq!(evg.component_count(), 2);
        assert_eq!(g.path_length("a", "c").unwrap(), None);
        assert_eq!(g.path_length("a", "b").unwrap(), Some(1));
    }
}
