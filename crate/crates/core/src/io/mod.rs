//! File formats: the JSON graph document, the TOML generator config, CSV
//! reports and the DOT rendering of the extra-vertex graph.

pub mod config;
pub mod csv;
pub mod document;
pub mod dot;

pub use config::{generator_config_to_toml, parse_generator_config};
pub use csv::{
    parse_trace_csv, write_hbedge_csv, write_sweep_csv, write_trace_csv, write_vertex_csv,
    write_walk_csv,
};
pub use document::{
    graph_to_document, parse_graph, serialize_graph, GraphDocument, HbEdgeRecord, ParsedGraph,
    Provenance, VertexRecord, SCHEMA_VERSION,
};
pub use dot::export_dot;
