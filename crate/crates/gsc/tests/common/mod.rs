//! Shared fixtures for the integration tests.

#![allow(dead_code)]

use std::path::PathBuf;

use gsc::config::ExperimentConfig;
use gsc::corpus::scan_corpus;
use gsc::format::LabeledInstance;
use gsc::pipeline::{make_instances, parse_units};
use gsc_core::tasks::Task;

pub fn fixture(rel: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("fixtures").join(rel)
}

/// A small fast configuration.
pub fn tiny_config(task: Task) -> ExperimentConfig {
    ExperimentConfig { task, hidden: 4, rounds: 2, max_nodes: 120, max_epochs: 3, batch_size: 4, lr: 0.01, ..ExperimentConfig::default() }
}

/// Instances of the smoke corpus for `config`, split in two halves by file.
pub fn smoke_instances(config: &ExperimentConfig) -> (Vec<LabeledInstance>, Vec<LabeledInstance>) {
    let (units, _) = scan_corpus(&fixture("smoke")).unwrap();
    let (graphs, failures) = parse_units(&units);
    assert!(failures.is_empty(), "{failures:?}");
    let all = make_instances(&graphs, config, 7).unwrap();
    let first_file = &graphs[0].0;
    all.into_iter().partition(|i| &i.file != first_file)
}
