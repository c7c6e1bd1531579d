use std::fmt;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

use anyhow::{bail, Context, Result};
use clap::builder::PossibleValuesParser;
use clap::{Args, Parser, Subcommand};
use gsc::checkpoint::Checkpoint;
use gsc::config::ExperimentConfig;
use gsc::format::{write_json, LabeledInstance};
use gsc::harness::{self, MetricsJson};
use gsc::pipeline::{self, ExtractOptions};
use gsc::GscError;
use gsc_core::graph::{CodeGraph, NodeId};
use gsc_core::model::Prediction;
use gsc_core::parser::source_to_graph;
use gsc_core::tasks::{fitb_instance_at, varnaming_instance_at, Instance, Task};
use serde::Serialize;

#[derive(Parser)]
#[command(name = "gsc", version, about = "Graph-structured cache models for variable naming and fill-in-the-blank")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Parse a corpus of repositories into graphs and a dataset split.
    Extract(ExtractArgs),
    /// Build task instances from an extraction directory.
    Instances(InstancesArgs),
    /// Train a model and write its checkpoint.
    Train(TrainArgs),
    /// Evaluate a checkpoint on one split.
    Eval(EvalArgs),
    /// Random-guess accuracy for fill-in-the-blank.
    Baseline(BaselineArgs),
    /// Predict for one variable occurrence in a source file.
    Predict(PredictArgs),
}

#[derive(Args)]
struct ExtractArgs {
    /// Corpus root; every top-level directory is one repository.
    #[arg(long)]
    input: PathBuf,
    /// Directory for the graphs, split manifest and reports.
    #[arg(long)]
    out: PathBuf,
    /// Repositories held out entirely as the unseen test set.
    #[arg(long, default_value_t = 3)]
    unseen_repos: usize,
    /// Fraction of the remaining files used as the seen test set.
    #[arg(long, default_value_t = 0.15)]
    seen_fraction: f64,
    /// Fraction of the files left after that used for validation.
    #[arg(long, default_value_t = 0.15)]
    validation_fraction: f64,
    /// Seed for the repository and file shuffles.
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Shortest token run counted as duplicated code.
    #[arg(long, default_value_t = 50)]
    min_token_run: usize,
    /// Print machine-readable JSON instead of text.
    #[arg(long)]
    json: bool,
}

const TASKS: [&str; 2] = ["fitb", "varnaming"];
const REPRS: [&str; 2] = ["ast", "augast"];
const VOCABS: [&str; 4] = ["closed", "charcnn", "sentinel", "gsc"];
const GNNS: [&str; 3] = ["ggnn", "dtnn", "rgcn"];

/// Model choices shared by `instances` and `train`; they override the
/// configuration file.
#[derive(Args)]
struct ModelArgs {
    #[arg(long, value_parser = PossibleValuesParser::new(TASKS))]
    task: Option<String>,
    #[arg(long, value_parser = PossibleValuesParser::new(REPRS))]
    repr: Option<String>,
    #[arg(long, value_parser = PossibleValuesParser::new(VOCABS))]
    vocab: Option<String>,
    #[arg(long, value_parser = PossibleValuesParser::new(GNNS))]
    gnn: Option<String>,
    /// `key = value` configuration file.
    #[arg(long)]
    config: Option<PathBuf>,
    /// Overrides the seed from the config file.
    #[arg(long)]
    seed: Option<u64>,
}

impl ModelArgs {
    fn resolve(&self) -> Result<ExperimentConfig> {
        let mut cfg = match &self.config {
            Some(path) => ExperimentConfig::load(path)?,
            None => ExperimentConfig::default(),
        };
        let pairs = [("task", &self.task), ("representation", &self.repr), ("vocab", &self.vocab), ("gnn", &self.gnn)];
        for (key, value) in pairs {
            if let Some(v) = value {
                cfg.set(key, v)?;
            }
        }
        if let Some(seed) = self.seed {
            cfg.seed = seed;
        }
        cfg.validate()?;
        Ok(cfg)
    }
}

#[derive(Args)]
struct InstancesArgs {
    /// Output directory of `extract`.
    #[arg(long)]
    input: PathBuf,
    #[command(flatten)]
    model: ModelArgs,
    /// Directory for the per-split instance files and `meta.json`.
    #[arg(long)]
    out: PathBuf,
    /// Print machine-readable JSON instead of text.
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct TrainArgs {
    #[command(flatten)]
    model: ModelArgs,
    /// Output directory of `instances`.
    #[arg(long)]
    data: PathBuf,
    /// Directory for `checkpoint.json` and `config.txt`.
    #[arg(long)]
    out: PathBuf,
    /// Print machine-readable JSON instead of text.
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct EvalArgs {
    /// Checkpoint written by `train`.
    #[arg(long)]
    checkpoint: PathBuf,
    #[arg(long, value_parser = PossibleValuesParser::new(["seen", "unseen", "validation", "train"]))]
    split: String,
    /// Output directory of `instances`.
    #[arg(long)]
    data: PathBuf,
    /// Also write `metrics.json` here.
    #[arg(long)]
    out: Option<PathBuf>,
    /// Print machine-readable JSON instead of text.
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct BaselineArgs {
    /// Candidate variables lie within this many edges of the blank.
    #[arg(long, default_value_t = 8)]
    radius: usize,
    /// Output directory of `instances` for fill-in-the-blank.
    #[arg(long)]
    data: PathBuf,
    #[arg(long, value_parser = PossibleValuesParser::new(["seen", "unseen", "validation", "train"]), default_value = "seen")]
    split: String,
    #[arg(long, default_value_t = 100_000)]
    trials: usize,
    /// Seed for the Monte-Carlo draws.
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Also write `baseline.json` here.
    #[arg(long)]
    out: Option<PathBuf>,
    /// Print machine-readable JSON instead of text.
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct PredictArgs {
    /// Checkpoint written by `train`.
    #[arg(long)]
    checkpoint: PathBuf,
    /// Source file to analyse.
    #[arg(long)]
    file: PathBuf,
    /// Location of a variable occurrence, `LINE:COLUMN` (1-based).
    #[arg(long, value_parser = parse_location)]
    at: (u32, u32),
    /// Print machine-readable JSON instead of text.
    #[arg(long)]
    json: bool,
}

fn parse_location(s: &str) -> Result<(u32, u32), String> {
    let (l, c) = s.split_once(':').ok_or("expected LINE:COLUMN")?;
    let l = l.parse().map_err(|_| format!("bad line `{l}`"))?;
    let c = c.parse().map_err(|_| format!("bad column `{c}`"))?;
    Ok((l, c))
}

/// A problem with the invocation rather than the data; exits with code 2.
#[derive(Debug)]
struct UsageError(String);

impl fmt::Display for UsageError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl std::error::Error for UsageError {}

fn print_json<T: Serialize>(value: &T) -> Result<()> {
    println!("{}", serde_json::to_string_pretty(value)?);
    Ok(())
}

fn split_file(name: &str) -> &str {
    match name {
        "seen" => "seen_test",
        "unseen" => "unseen_test",
        other => other,
    }
}

fn extract(a: &ExtractArgs) -> Result<()> {
    let opts = ExtractOptions {
        unseen_repos: a.unseen_repos,
        seen_fraction: a.seen_fraction,
        validation_fraction: a.validation_fraction,
        seed: a.seed,
        min_token_run: a.min_token_run,
    };
    let report = pipeline::extract(&a.input, &a.out, &opts)?;
    log::info!(
        "{} files, {} graphs, {} parse failures, {} skipped, {:.1}% duplicated lines",
        report.files,
        report.graphs,
        report.parse_failures.len(),
        report.warnings.len(),
        100.0 * report.duplicated_line_fraction
    );
    if a.json {
        print_json(&report)?;
    }
    Ok(())
}

fn instances(a: &InstancesArgs) -> Result<()> {
    let cfg = a.model.resolve()?;
    let meta = pipeline::write_instances(&a.input, &cfg, cfg.seed, &a.out)?;
    for (split, n) in &meta.counts {
        log::info!("{split}: {n} {} instances", meta.task);
    }
    if a.json {
        print_json(&meta)?;
    }
    Ok(())
}

fn train(a: &TrainArgs) -> Result<()> {
    let cfg = a.model.resolve()?;
    log::info!("config hash {}", cfg.hash());
    let train = pipeline::read_instances(&a.data, "train", &cfg)?;
    let validation = pipeline::read_instances(&a.data, "validation", &cfg)?;
    let outcome = harness::train(&cfg, &train, &validation)?;
    std::fs::create_dir_all(&a.out).with_context(|| format!("creating {}", a.out.display()))?;
    let path = a.out.join("checkpoint.json");
    outcome.checkpoint.save(&path)?;
    std::fs::write(a.out.join("config.txt"), cfg.to_text()).with_context(|| format!("writing {}", a.out.display()))?;
    log::info!(
        "best epoch {} (validation {:.4}); wrote {}",
        outcome.checkpoint.best_epoch,
        outcome.checkpoint.best_validation_metric,
        path.display()
    );
    if a.json {
        print_json(&outcome.checkpoint.curve)?;
    }
    Ok(())
}

fn print_metrics(task: Task, split: &str, n: usize, m: &MetricsJson) {
    println!("{} on {split} ({n} instances)", task.as_str());
    println!("  accuracy        {:.4}", m.accuracy);
    println!("  top-5 accuracy  {:.4}", m.top5_accuracy);
    if let (Some(s), Some(e), Some(ne)) = (m.subword_accuracy, m.edit_distance, m.normalized_edit_distance) {
        println!("  subword acc.    {s:.4}");
        println!("  edit distance   {e:.4}");
        println!("  normalized ed.  {ne:.4}");
    }
}

fn eval(a: &EvalArgs) -> Result<()> {
    let ck = Checkpoint::load(&a.checkpoint)?;
    log::info!("config hash {}", ck.config_hash);
    let loaded = ck.restore()?;
    let instances = pipeline::read_instances(&a.data, split_file(&a.split), &loaded.config)?;
    let start = Instant::now();
    let report = harness::evaluate(&loaded, &instances)?;
    log::info!("evaluated {} instances in {:.1}s", report.instances, start.elapsed().as_secs_f64());
    let metrics = MetricsJson::from(&report);
    if let Some(out) = &a.out {
        std::fs::create_dir_all(out).with_context(|| format!("creating {}", out.display()))?;
        write_json(&out.join("metrics.json"), &metrics)?;
    }
    if a.json {
        print_json(&metrics)?;
    } else {
        print_metrics(report.task, &a.split, report.instances, &metrics);
    }
    Ok(())
}

fn baseline(a: &BaselineArgs) -> Result<()> {
    let cfg = ExperimentConfig { task: Task::Fitb, ..ExperimentConfig::default() };
    let meta: pipeline::InstanceMeta = gsc::format::read_json(&a.data.join(pipeline::META_FILE))?;
    if meta.task != Task::Fitb.as_str() {
        return Err(UsageError(format!("baseline needs fill-in-the-blank instances, {} holds {}", a.data.display(), meta.task)).into());
    }
    let cfg = ExperimentConfig {
        representation: meta.representation.parse()?,
        vocab: meta.vocab.parse()?,
        max_nodes: meta.max_nodes,
        ..cfg
    };
    let instances = pipeline::read_instances(&a.data, split_file(&a.split), &cfg)?;
    let fitb: Vec<_> = instances
        .into_iter()
        .filter_map(|i| match i.instance {
            Instance::Fitb(f) => Some(f),
            Instance::VarNaming(_) => None,
        })
        .collect();
    let report = harness::random_baseline(&fitb, a.radius, a.trials, a.seed)?;
    if let Some(out) = &a.out {
        std::fs::create_dir_all(out).with_context(|| format!("creating {}", out.display()))?;
        write_json(&out.join("baseline.json"), &report)?;
    }
    if a.json {
        print_json(&report)?;
    } else {
        println!(
            "radius {}: {:.4} +- {:.4} over {} trials (exact {:.4}, {} instances)",
            report.radius, report.estimate, report.standard_error, report.trials, report.exact, report.instances
        );
    }
    Ok(())
}

/// The variable occurrence at `(line, column)`: an exact start match, else
/// an occurrence whose name covers the column.
fn node_at(g: &CodeGraph, (line, column): (u32, u32)) -> Option<NodeId> {
    let vars = || g.node_ids().filter(|&id| g.node(id).is_variable());
    let span = |id: NodeId| g.node(id).span;
    vars().find(|&id| span(id).is_some_and(|s| s.line == line && s.column == column)).or_else(|| {
        vars().find(|&id| {
            let width = g.node(id).name.as_deref().map_or(0, str::len) as u32;
            span(id).is_some_and(|s| s.line == line && s.column <= column && column < s.column + width)
        })
    })
}

#[derive(Serialize)]
struct Candidate {
    name: String,
    line: Option<u32>,
    column: Option<u32>,
    probability: f64,
}

#[derive(Serialize)]
struct NameGuess {
    name: String,
    words: Vec<String>,
    log_prob: f64,
}

fn camel_case(words: &[String]) -> String {
    words
        .iter()
        .enumerate()
        .map(|(i, w)| {
            let mut cs = w.chars();
            match cs.next() {
                Some(c) if i > 0 => c.to_uppercase().chain(cs).collect(),
                _ => w.clone(),
            }
        })
        .collect()
}

fn predict(a: &PredictArgs) -> Result<()> {
    let ck = Checkpoint::load(&a.checkpoint)?;
    log::info!("config hash {}", ck.config_hash);
    let loaded = ck.restore()?;
    let text = std::fs::read_to_string(&a.file).with_context(|| format!("reading {}", a.file.display()))?;
    let graph = source_to_graph(&text).map_err(|error| GscError::Parse { file: a.file.display().to_string(), error })?;
    let (line, column) = a.at;
    let Some(at) = node_at(&graph, a.at) else {
        return Err(UsageError(format!("{}:{line}:{column}: no variable occurrence here", a.file.display())).into());
    };
    let graph_config = loaded.config.model_config().graph_config();
    let instance = match loaded.config.task {
        Task::Fitb => fitb_instance_at(&graph, at, &graph_config)?.map(Instance::Fitb),
        Task::VarNaming => varnaming_instance_at(&graph, at, &graph_config)?.map(Instance::VarNaming),
    };
    let Some(instance) = instance else {
        return Err(UsageError(format!(
            "{}:{line}:{column}: `{}` has no {} instance here",
            a.file.display(),
            graph.node(at).name.as_deref().unwrap_or("?"),
            loaded.config.task.as_str()
        ))
        .into());
    };
    let labeled = LabeledInstance { id: format!("{}:{line}:{column}", a.file.display()), file: a.file.display().to_string(), instance };
    match loaded.model.predict(&loaded.store, &labeled.instance, &loaded.vocabs, 5)? {
        Prediction::Fitb { scores, ranked } => {
            let g = labeled.instance.graph();
            let top: Vec<Candidate> = ranked
                .iter()
                .take(5)
                .map(|&id| {
                    let n = g.node(id);
                    Candidate {
                        name: n.name.clone().unwrap_or_default(),
                        line: n.span.map(|s| s.line),
                        column: n.span.map(|s| s.column),
                        probability: scores[id.index()],
                    }
                })
                .collect();
            if a.json {
                print_json(&top)?;
            } else {
                for (i, c) in top.iter().enumerate() {
                    let loc = c.line.zip(c.column).map_or("?".into(), |(l, c)| format!("{l}:{c}"));
                    println!("{}. {} at {loc} ({:.4})", i + 1, c.name, c.probability);
                }
            }
        }
        Prediction::Naming { names } => {
            let top: Vec<NameGuess> = names
                .into_iter()
                .take(5)
                .map(|(n, lp)| NameGuess { name: camel_case(&n.words), words: n.words, log_prob: lp })
                .collect();
            if a.json {
                print_json(&top)?;
            } else {
                for (i, g) in top.iter().enumerate() {
                    println!("{}. {} ({:.4})", i + 1, g.name, g.log_prob);
                }
            }
        }
    }
    Ok(())
}

fn run(cli: &Cli) -> Result<()> {
    match &cli.command {
        Command::Extract(a) => extract(a),
        Command::Instances(a) => instances(a),
        Command::Train(a) => train(a),
        Command::Eval(a) => eval(a),
        Command::Baseline(a) => baseline(a),
        Command::Predict(a) => predict(a),
    }
}

fn exists_or_usage(path: &Path, what: &str) -> Result<()> {
    if !path.exists() {
        bail!(UsageError(format!("{what} {} does not exist", path.display())));
    }
    Ok(())
}

fn check_inputs(cli: &Cli) -> Result<()> {
    match &cli.command {
        Command::Extract(a) => exists_or_usage(&a.input, "input"),
        Command::Instances(a) => exists_or_usage(&a.input, "input"),
        Command::Train(a) => exists_or_usage(&a.data, "data directory"),
        Command::Eval(a) => exists_or_usage(&a.checkpoint, "checkpoint").and(exists_or_usage(&a.data, "data directory")),
        Command::Baseline(a) => exists_or_usage(&a.data, "data directory"),
        Command::Predict(a) => exists_or_usage(&a.checkpoint, "checkpoint").and(exists_or_usage(&a.file, "file")),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or("info")).init();
    match check_inputs(&cli).and_then(|()| run(&cli)) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e:#}");
            if e.downcast_ref::<UsageError>().is_some() {
                ExitCode::from(2)
            } else {
                ExitCode::FAILURE
            }
        }
    }
}
