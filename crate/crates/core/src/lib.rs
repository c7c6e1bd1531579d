//! Core algorithms for learning on source code with a graph-structured cache.
//!
//! The pipeline turns a source file into a typed directed multigraph and runs
//! a graph neural network over it:
//!
//! 1. [`parser`] lexes and parses a Java-like subset into an AST and emits a
//!    [`graph::CodeGraph`] with `AST` and `NEXT_TOKEN` edges.
//! 2. [`augment`] adds dataflow, lexical and field edges plus reversed copies.
//! 3. [`cache`] adds one cache node per name word, wired with `WORD_USE` edges.
//! 4. [`embed`] computes initial node states.
//! 5. [`gnn`] runs message passing; [`tasks`] holds readouts, losses,
//!    decoding and metrics.
//!
//! Everything here is `no_std` + `alloc`. File formats, the corpus and the
//! training harness live in the companion `gsc` crate.

#![cfg_attr(not(any(feature = "std", test)), no_std)]

extern crate alloc;

pub mod augment;
pub mod cache;
pub mod embed;
pub mod error;
pub mod gnn;
pub mod graph;
pub mod math;
pub mod model;
pub mod parser;
pub mod tasks;
pub mod tensor;

pub use error::ModelError;
pub use graph::{CodeGraph, EdgeType, NodeId, NodeKind};
