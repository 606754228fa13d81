//! Tools for extremal problems on uniform hypergraphs.
//!
//! The crate builds the standard extremal families (`Ψ`-type stars, blowups
//! of bipartite trees, tight and loose paths), computes covers and
//! crosscuts, decides containment of fixed patterns, evaluates the classical
//! closed-form bounds and computes exact Turán numbers for small `n`.
//!
//! Vertices are the labels `1..=n` with `n ≤ 128`; see [`VertexSet`].

pub mod bipartite;
pub mod bounds;
pub mod canon;
pub mod constructions;
pub mod covers;
pub mod embedding;
mod error;
pub mod hypergraph;
pub mod io;
pub mod search;
pub mod templates;
pub mod vertex_set;

pub use bipartite::{BipartiteGraph, PartVertex};
pub use error::{Error, Result};
pub use hypergraph::{is_matching, EdgeSet, Hypergraph};
pub use vertex_set::{binomial, checked_binomial, k_subsets, subsets, VertexSet, MAX_VERTICES};
