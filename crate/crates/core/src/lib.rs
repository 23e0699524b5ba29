//! Exchange-based diffusion over hyper-bag-graphs.
//!
//! A hyper-bag-graph (hb-graph) is a family of multisets — hb-edges — over a
//! vertex universe: each hb-edge assigns a multiplicity to every vertex it
//! contains. This crate models such graphs and ranks their vertices and
//! hb-edges by a two-phase exchange diffusion, with a teleporting random
//! walk as the baseline to compare against.
//!
//! Modules:
//! - [`mset`], [`hbgraph`]: the combinatorial substrate;
//! - [`diffusion`]: the two-phase exchange process and its matrix form;
//! - [`genrand`]: a seeded generator of grouped random hb-graphs;
//! - [`rwalk`]: the teleporting multiset random walk;
//! - [`eval`]: eccentricity sweeps, normalization and rank correlation;
//! - [`io`], [`cli`]: file formats and the `hbdiff` command-line tool.
//!
//! # Example
//!
//! Build a three-vertex hb-graph with two hb-edges and run one diffusion
//! step. Each vertex starts with one unit of value; after a step, vertices
//! that occur with higher multiplicity in better-connected hb-edges hold
//! more of it, and the total is conserved:
//!
//! ```
//! use hbdiff::{HbEdge, HbGraph, Multiset};
//! use hbdiff::diffusion;
//!
//! let g = HbGraph::build(
//!     vec!["v1".into(), "v2".into(), "v3".into()],
//!     vec![
//!         HbEdge::unweighted("e1", Multiset::from_pairs([("v1", 2.0), ("v2", 1.0)])?)?,
//!         HbEdge::unweighted("e2", Multiset::from_pairs([("v2", 1.0), ("v3", 1.0)])?)?,
//!     ],
//! )?;
//!
//! let trace = diffusion::run(&g, 1);
//! assert_eq!(trace.final_alpha(), &[1.0, 1.25, 0.75]);
//! assert_eq!(trace.final_alpha().iter().sum::<f64>(), g.vertex_count() as f64);
//! # Ok::<(), hbdiff::Error>(())
//! ```

pub mod cli;
pub mod diffusion;
pub mod error;
pub mod eval;
pub mod genrand;
pub mod hbgraph;
pub mod io;
pub mod mset;
pub mod rwalk;

#[cfg(test)]
pub(crate) mod test_util;

pub use error::{Error, Result};
pub use hbgraph::{ExtraVertexGraph, HbEdge, HbGraph, SupportHypergraph};
pub use mset::{CombineKind, Multiset};
