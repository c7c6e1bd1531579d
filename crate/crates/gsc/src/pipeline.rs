//! The file-level steps behind the CLI: corpus extraction, instance
//! generation and loading instance sets back for training and evaluation.

use std::collections::BTreeMap;
use std::fs;
use std::path::Path;

use gsc_core::graph::CodeGraph;
use gsc_core::parser::source_to_graph;
use gsc_core::tasks::{make_fitb_instances, make_varnaming_instances, GraphConfig, Instance, Task};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use crate::config::ExperimentConfig;
use crate::corpus::{detect_duplication, scan_corpus, split_dataset, DatasetSplit, ScanWarning, SourceUnit, SPLIT_NAMES};
use crate::error::{GscError, Result};
use crate::format::{read_json, read_jsonl, write_json, write_jsonl, GraphRecord, InstanceRecord, LabeledInstance};

pub const GRAPHS_FILE: &str = "graphs.jsonl";
pub const SPLIT_FILE: &str = "split.json";
pub const DUPLICATION_FILE: &str = "duplication.json";
pub const EXTRACT_REPORT_FILE: &str = "extract_report.json";
pub const META_FILE: &str = "meta.json";

#[derive(Clone, Debug, PartialEq)]
pub struct ExtractOptions {
    pub unseen_repos: usize,
    pub seen_fraction: f64,
    pub validation_fraction: f64,
    pub seed: u64,
    /// Shortest token run counted as duplicated code.
    pub min_token_run: usize,
}

impl Default for ExtractOptions {
    fn default() -> Self {
        ExtractOptions { unseen_repos: 3, seen_fraction: 0.15, validation_fraction: 0.15, seed: 0, min_token_run: 50 }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ParseFailure {
    pub file: String,
    pub line: u32,
    pub column: u32,
    pub message: String,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ExtractReport {
    pub files: usize,
    pub graphs: usize,
    pub nodes: usize,
    pub edges: usize,
    pub parse_failures: Vec<ParseFailure>,
    pub warnings: Vec<ScanWarning>,
    pub duplicated_line_fraction: f64,
}

/// Parses every unit; failures are returned with their location instead of
/// aborting the batch.
pub fn parse_units(units: &[SourceUnit]) -> (Vec<(String, CodeGraph)>, Vec<ParseFailure>) {
    let mut graphs = Vec::new();
    let mut failures = Vec::new();
    for u in units {
        match source_to_graph(&u.text) {
            Ok(g) => graphs.push((u.key(), g)),
            Err(e) => failures.push(ParseFailure {
                file: u.key(),
                line: e.line,
                column: e.column,
                message: e.to_string(),
            }),
        }
    }
    (graphs, failures)
}

/// Scans `input`, parses every file and writes the graphs, the split
/// manifest over the parsed files, the duplication report and a summary
/// into `out`.
pub fn extract(input: &Path, out: &Path, opts: &ExtractOptions) -> Result<ExtractReport> {
    let (units, warnings) = scan_corpus(input)?;
    let (graphs, parse_failures) = parse_units(&units);
    for f in &parse_failures {
        log::warn!("{}:{}:{}: {}", f.file, f.line, f.column, f.message);
    }
    let parsed: Vec<SourceUnit> = {
        let ok: std::collections::BTreeSet<&str> = graphs.iter().map(|(k, _)| k.as_str()).collect();
        units.iter().filter(|u| ok.contains(u.key().as_str())).cloned().collect()
    };
    if parsed.is_empty() {
        return Err(GscError::Empty("set of parsed files"));
    }
    let split = split_dataset(&parsed, opts.unseen_repos, opts.seen_fraction, opts.validation_fraction, opts.seed)?;
    let duplication = detect_duplication(&units, opts.min_token_run)?;

    fs::create_dir_all(out).map_err(|e| GscError::io(out, e))?;
    write_jsonl(&out.join(GRAPHS_FILE), graphs.iter().map(|(k, g)| GraphRecord::from_graph(k, g)))?;
    write_json(&out.join(SPLIT_FILE), &split)?;
    write_json(&out.join(DUPLICATION_FILE), &duplication)?;
    let report = ExtractReport {
        files: units.len(),
        graphs: graphs.len(),
        nodes: graphs.iter().map(|(_, g)| g.len()).sum(),
        edges: graphs.iter().map(|(_, g)| g.edges.len()).sum(),
        parse_failures,
        warnings,
        duplicated_line_fraction: duplication.fraction,
    };
    write_json(&out.join(EXTRACT_REPORT_FILE), &report)?;
    Ok(report)
}

/// What an instance set was generated with; training checks its
/// configuration against it.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct InstanceMeta {
    pub task: String,
    pub representation: String,
    pub vocab: String,
    pub max_nodes: usize,
    pub seed: u64,
    /// Instances per split.
    pub counts: BTreeMap<String, usize>,
}

impl InstanceMeta {
    fn of(config: &ExperimentConfig, seed: u64) -> Self {
        InstanceMeta {
            task: config.task.as_str().into(),
            representation: config.representation.as_str().into(),
            vocab: config.vocab.as_str().into(),
            max_nodes: config.max_nodes,
            seed,
            counts: BTreeMap::new(),
        }
    }

    /// Errors if instances generated this way do not fit `config`. Closed
    /// and character-level vocabularies share cache-free graphs, as do the
    /// two cache strategies only when their cache modes agree.
    pub fn check(&self, config: &ExperimentConfig) -> Result<()> {
        let want = InstanceMeta::of(config, self.seed);
        let cache = |v: &str| v.parse::<gsc_core::model::VocabStrategy>().ok().and_then(|v| v.cache_mode());
        let mismatch = if self.task != want.task {
            Some(("task", &self.task, &want.task))
        } else if self.representation != want.representation {
            Some(("representation", &self.representation, &want.representation))
        } else if cache(&self.vocab) != cache(&want.vocab) {
            Some(("vocab", &self.vocab, &want.vocab))
        } else {
            None
        };
        if let Some((key, have, need)) = mismatch {
            return Err(GscError::Config(format!("instances were generated with {key} = {have}, the configuration needs {need}")));
        }
        if self.max_nodes > config.max_nodes {
            return Err(GscError::Config(format!(
                "instances allow {} nodes, the configuration at most {}",
                self.max_nodes, config.max_nodes
            )));
        }
        Ok(())
    }
}

/// Per-file generator, so a file's instances do not depend on which other
/// files are in the corpus.
fn file_rng(seed: u64, file: &str) -> ChaCha8Rng {
    let digest = Sha256::new().chain_update(seed.to_le_bytes()).chain_update(file.as_bytes()).finalize();
    let mut bytes = [0u8; 32];
    bytes.copy_from_slice(&digest);
    ChaCha8Rng::from_seed(bytes)
}

/// Instances of `config.task` for the given parsed files, with ids
/// `file#task:k`.
pub fn make_instances(graphs: &[(String, CodeGraph)], config: &ExperimentConfig, seed: u64) -> Result<Vec<LabeledInstance>> {
    let graph_config: GraphConfig = config.model_config().graph_config();
    let mut out = Vec::new();
    for (file, g) in graphs {
        let instances: Vec<Instance> = match config.task {
            Task::Fitb => make_fitb_instances(g, &graph_config, &mut file_rng(seed, file))?
                .into_iter()
                .map(Instance::Fitb)
                .collect(),
            Task::VarNaming => make_varnaming_instances(g, &graph_config)?.into_iter().map(Instance::VarNaming).collect(),
        };
        for (k, instance) in instances.into_iter().enumerate() {
            out.push(LabeledInstance { id: format!("{file}#{}:{k}", config.task.as_str()), file: file.clone(), instance });
        }
    }
    Ok(out)
}

/// Graphs of an extraction directory, keyed by file.
pub fn read_graphs(dir: &Path) -> Result<Vec<(String, CodeGraph)>> {
    let records: Vec<GraphRecord> = read_jsonl(&dir.join(GRAPHS_FILE))?;
    records.iter().map(|r| Ok((r.file.clone(), r.to_graph()?))).collect()
}

/// Instance sets per split for an extraction directory.
pub fn split_instances(
    graphs: &[(String, CodeGraph)],
    split: &DatasetSplit,
    config: &ExperimentConfig,
    seed: u64,
) -> Result<BTreeMap<&'static str, Vec<LabeledInstance>>> {
    let assignment = split.assignment();
    let mut parts: BTreeMap<&'static str, Vec<(String, CodeGraph)>> = SPLIT_NAMES.iter().map(|&n| (n, Vec::new())).collect();
    for (file, g) in graphs {
        match assignment.get(file.as_str()) {
            Some(part) => parts.get_mut(part).expect("known split").push((file.clone(), g.clone())),
            None => log::warn!("{file} is not in the split manifest; skipped"),
        }
    }
    parts.into_iter().map(|(name, gs)| Ok((name, make_instances(&gs, config, seed)?))).collect()
}

/// Reads an extraction directory and writes one instance file per split
/// plus `meta.json` into `out`.
pub fn write_instances(input: &Path, config: &ExperimentConfig, seed: u64, out: &Path) -> Result<InstanceMeta> {
    let graphs = read_graphs(input)?;
    let split: DatasetSplit = read_json(&input.join(SPLIT_FILE))?;
    let parts = split_instances(&graphs, &split, config, seed)?;
    fs::create_dir_all(out).map_err(|e| GscError::io(out, e))?;
    let mut meta = InstanceMeta::of(config, seed);
    for (name, instances) in &parts {
        write_jsonl(&out.join(format!("{name}.jsonl")), instances.iter().map(InstanceRecord::from_instance))?;
        meta.counts.insert((*name).into(), instances.len());
    }
    write_json(&out.join(META_FILE), &meta)?;
    Ok(meta)
}

/// Loads one split of an instance directory after checking that it was
/// generated for `config`.
pub fn read_instances(dir: &Path, split: &str, config: &ExperimentConfig) -> Result<Vec<LabeledInstance>> {
    if !SPLIT_NAMES.contains(&split) {
        return Err(GscError::Split(format!("unknown split `{split}`")));
    }
    let meta: InstanceMeta = read_json(&dir.join(META_FILE))?;
    meta.check(config)?;
    let records: Vec<InstanceRecord> = read_jsonl(&dir.join(format!("{split}.jsonl")))?;
    records.iter().map(InstanceRecord::to_instance).collect()
}
