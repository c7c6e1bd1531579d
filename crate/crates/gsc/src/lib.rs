//! Corpus extraction, JSONL formats, configuration, checkpoints and the
//! training harness around the `gsc-core` models.

pub mod checkpoint;
pub mod config;
pub mod corpus;
pub mod error;
pub mod format;
pub mod harness;
pub mod pipeline;

pub use error::{GscError, Result};
