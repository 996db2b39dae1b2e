//! Structural decomposition and certified coloring of (P5, paraglider)-free graphs.
//!
//! The crate is organized around a small immutable [`graph::Graph`] value type:
//!
//! * [`graph`] — bitset-backed simple graphs, set algebra, graph6/DOT/JSON codecs;
//! * [`patterns`] — induced-subgraph search with certificates, perfection test;
//! * [`oracle`] — exact clique number, independence number and chromatic number
//!   at desk scale (brute force, used as ground truth everywhere);
//! * [`structure`] — decomposition primitives (comparable pairs, clique cutsets,
//!   homogeneous sets), the five-set partition around an induced C5 with its
//!   property validator, class recognizers, and the case dispatcher;
//! * [`coloring`] — explicit coloring schemes and the master recursion that
//!   colors every (P5, paraglider)-free graph with at most ceil(3w/2) colors,
//!   emitting a machine-checkable derivation trace;
//! * [`atlas`] — deterministic constructors for the named graphs used
//!   throughout (paraglider, F-graphs, Clebsch/Petersen complements, G_k) and
//!   seeded generators for structured corpora;
//! * [`harness`] — verification campaigns behind the `chroma` CLI.

pub mod atlas;
pub mod coloring;
pub mod error;
pub mod graph;
pub mod graph6;
pub mod harness;
pub mod oracle;
pub mod patterns;
pub mod structure;

pub use error::Error;
pub use graph::{Graph, VertexSet};

/// Convenience result alias used across the crate.
pub type Result<T> = std::result::Result<T, Error>;
