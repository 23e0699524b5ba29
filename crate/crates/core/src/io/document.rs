//! The JSON graph document: a versioned, human-diffable serialization of an
//! hb-graph with optional vertex labels and generator provenance.

use std::collections::{BTreeMap, BTreeSet};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::genrand::{GeneratedGraph, GeneratorConfig, VertexLabel};
use crate::hbgraph::{HbEdge, HbGraph};
use crate::mset::Multiset;

/// Version written by this build; parsing rejects anything else.
pub const SCHEMA_VERSION: u32 = 1;

fn default_weight() -> f64 {
    1.0
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct VertexRecord {
    pub id: String,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct HbEdgeRecord {
    pub id: String,
    /// Defaults to 1 when omitted.
    #[serde(default = "default_weight")]
    pub weight: f64,
    pub members: BTreeMap<String, f64>,
}

/// How a generated graph came to be: the full config plus the seed echoed
/// separately for quick reading.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Provenance {
    pub seed: u64,
    pub config: GeneratorConfig,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GraphDocument {
    pub schema_version: u32,
    pub vertices: Vec<VertexRecord>,
    pub hbedges: Vec<HbEdgeRecord>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub labels: Option<BTreeMap<String, VertexLabel>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub provenance: Option<Provenance>,
}

/// A graph parsed from a document, with whatever optional metadata the
/// document carried.
#[derive(Debug, Clone)]
pub struct ParsedGraph {
    pub graph: HbGraph,
    pub labels: Option<BTreeMap<String, VertexLabel>>,
    pub provenance: Option<Provenance>,
}

/// Builds a document from a graph and optional metadata.
pub fn graph_to_document(
    g: &HbGraph,
    labels: Option<&BTreeMap<String, VertexLabel>>,
    provenance: Option<&Provenance>,
) -> GraphDocument {
    GraphDocument {
        schema_version: SCHEMA_VERSION,
        vertices: g
            .vertices()
            .iter()
            .map(|id| VertexRecord { id: id.clone() })
            .collect(),
        hbedges: g
            .hbedges()
            .iter()
            .map(|e| HbEdgeRecord {
                id: e.id().to_string(),
                weight: e.weight(),
                members: e.members().iter().map(|(v, m)| (v.to_string(), m)).collect(),
            })
            .collect(),
        labels: labels.cloned(),
        provenance: provenance.cloned(),
    }
}

impl GeneratedGraph {
    /// Document with labels and provenance filled in from the generation.
    pub fn to_document(&self) -> GraphDocument {
        graph_to_document(
            &self.graph,
            Some(self.group_labels()),
            Some(&Provenance {
                seed: self.config.seed,
                config: self.config.clone(),
            }),
        )
    }
}

/// Pretty-printed JSON with a trailing newline.
pub fn serialize_graph(doc: &GraphDocument) -> String {
    let mut text = serde_json::to_string_pretty(doc).expect("graph documents always serialize");
    text.push('\n');
    text
}

/// Parses and validates a document without building the graph yet.
pub fn parse_document(text: &str) -> Result<GraphDocument> {
    let doc: GraphDocument = serde_json::from_str(text).map_err(|e| {
        if e.classify() == serde_json::error::Category::Data {
            Error::Schema(e.to_string())
        } else {
            Error::Parse(e.to_string())
        }
    })?;
    if doc.schema_version != SCHEMA_VERSION {
        return Err(Error::Schema(format!(
            "unsupported schema_version {}; this build reads version {SCHEMA_VERSION}",
            doc.schema_version
        )));
    }
    let mut vertex_ids = BTreeSet::new();
    for v in &doc.vertices {
        if !vertex_ids.insert(v.id.as_str()) {
            return Err(Error::Schema(format!("duplicate vertex id `{}`", v.id)));
        }
    }
    let mut hbedge_ids = BTreeSet::new();
    for e in &doc.hbedges {
        if !hbedge_ids.insert(e.id.as_str()) {
            return Err(Error::Schema(format!("duplicate hb-edge id `{}`", e.id)));
        }
        for (v, m) in &e.members {
            if !m.is_finite() || *m <= 0.0 {
                return Err(Error::Schema(format!(
                    "hb-edge `{}` assigns `{v}` a non-positive multiplicity {m}",
                    e.id
                )));
            }
        }
    }
    if let Some(labels) = &doc.labels {
        for id in labels.keys() {
            if !vertex_ids.contains(id.as_str()) {
                return Err(Error::Schema(format!(
                    "label refers to unknown vertex `{id}`"
                )));
            }
        }
    }
    Ok(doc)
}

/// Builds the validated graph from a document.
pub fn document_to_graph(doc: &GraphDocument) -> Result<ParsedGraph> {
    let vertices: Vec<String> = doc.vertices.iter().map(|v| v.id.clone()).collect();
    let hbedges: Vec<HbEdge> = doc
        .hbedges
        .iter()
        .map(|e| {
            let members =
                Multiset::from_pairs(e.members.iter().map(|(v, m)| (v.clone(), *m)))?;
            HbEdge::new(e.id.clone(), members, e.weight)
        })
        .collect::<Result<_>>()?;
    Ok(ParsedGraph {
        graph: HbGraph::build(vertices, hbedges)?,
        labels: doc.labels.clone(),
        provenance: doc.provenance.clone(),
    })
}

/// One-shot parse: document text to validated graph plus metadata.
pub fn parse_graph(text: &str) -> Result<ParsedGraph> {
    document_to_graph(&parse_document(text)?)
}
