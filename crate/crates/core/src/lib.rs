//! Mixed hypergraphs whose chromatic spectrum is prescribed.
//!
//! A mixed hypergraph `(X, C, D)` carries two edge families: every C-edge
//! must contain two vertices of a common color and every D-edge two vertices
//! of distinct colors. A hypergraph is a *one-realization* of a finite set
//! `S` when it has a strict `k`-coloring exactly for `k` in `S`, and exactly
//! one such coloring (as a partition) for each of them.
//!
//! This crate builds the smallest known one-realizations of `S` (minimum
//! vertex count, minimum D-edge count, minimum C-edge count), enumerates
//! strict colorings exactly and checks every claimed property of the
//! constructions computationally.
//!
//! The crate is `no_std` and only needs `alloc`. File formats, the CLI and
//! threaded enumeration live in the `mhg` crate.

#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod coloring;
pub mod constructions;
mod error;
pub mod hypergraph;
pub mod solver;
pub mod spec_set;

pub use coloring::{is_proper_coloring, normalize_coloring, Coloring, Properness};
pub use constructions::{build, Variant};
pub use error::Error;
pub use hypergraph::{Edge, EdgeKind, MixedHypergraph, Vertex};
pub use solver::{ChromaticSpectrum, OneRealizationReport, PairGraph};
pub use spec_set::SpecSet;

pub type Result<T, E = Error> = core::result::Result<T, E>;
