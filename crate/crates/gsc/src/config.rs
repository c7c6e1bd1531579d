//! Experiment configuration in a plain `key = value` text format.

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::path::Path;

use gsc_core::gnn::{GnnKind, DEFAULT_ROUNDS};
use gsc_core::model::{ModelConfig, Representation, VocabStrategy};
use gsc_core::tasks::varnaming::Mixture;
use gsc_core::tasks::{Task, MAX_NODES};
use sha2::{Digest, Sha256};

use crate::error::{GscError, Result};

/// Everything that determines a training run.
#[derive(Clone, Debug, PartialEq)]
pub struct ExperimentConfig {
    pub task: Task,
    pub representation: Representation,
    pub vocab: VocabStrategy,
    pub gnn: GnnKind,
    pub hidden: usize,
    /// Message-passing rounds (unrolled propagation steps).
    pub rounds: usize,
    pub max_nodes: usize,
    pub mixture: Mixture,
    pub lr: f64,
    /// Instances whose gradients are accumulated per optimizer step.
    pub batch_size: usize,
    /// Epochs without validation improvement before stopping.
    pub patience: usize,
    pub max_epochs: usize,
    /// Stop as soon as the validation metric reaches this value.
    pub target_metric: Option<f64>,
    /// Closed vocabulary size, excluding the reserved entries.
    pub max_vocab_words: usize,
    pub max_types: usize,
    pub seed: u64,
}

impl Default for ExperimentConfig {
    fn default() -> Self {
        ExperimentConfig {
            task: Task::Fitb,
            representation: Representation::AugAst,
            vocab: VocabStrategy::Gsc,
            gnn: GnnKind::Ggnn,
            hidden: 64,
            rounds: DEFAULT_ROUNDS,
            max_nodes: MAX_NODES,
            mixture: Mixture::Normalized,
            lr: 1e-3,
            batch_size: 20,
            patience: 10,
            max_epochs: 200,
            target_metric: None,
            max_vocab_words: 5_000,
            max_types: 1_000,
            seed: 0,
        }
    }
}

/// Accepts the short CLI names and the long descriptive ones.
fn parse_vocab(s: &str) -> Result<VocabStrategy> {
    let short = match s {
        "closed_vocab" => "closed",
        "pointer_sentinel" => "sentinel",
        other => other,
    };
    Ok(short.parse()?)
}

fn num<T: std::str::FromStr>(key: &str, value: &str) -> Result<T> {
    value.parse().map_err(|_| GscError::Config(format!("`{key}` expects a number, got `{value}`")))
}

impl ExperimentConfig {
    /// Sets one key. `unroll` is an alias of `rounds`; `target_metric = none`
    /// clears the target.
    pub fn set(&mut self, key: &str, value: &str) -> Result<()> {
        match key {
            "task" => self.task = value.parse()?,
            "representation" | "repr" => self.representation = value.parse()?,
            "vocab" | "vocab_strategy" => self.vocab = parse_vocab(value)?,
            "gnn" => self.gnn = value.parse()?,
            "hidden" => self.hidden = num(key, value)?,
            "rounds" | "unroll" => self.rounds = num(key, value)?,
            "max_nodes" => self.max_nodes = num(key, value)?,
            "mixture" => self.mixture = value.parse()?,
            "lr" => self.lr = num(key, value)?,
            "batch_size" => self.batch_size = num(key, value)?,
            "patience" => self.patience = num(key, value)?,
            "max_epochs" => self.max_epochs = num(key, value)?,
            "target_metric" => self.target_metric = if value == "none" { None } else { Some(num(key, value)?) },
            "max_vocab_words" => self.max_vocab_words = num(key, value)?,
            "max_types" => self.max_types = num(key, value)?,
            "seed" => self.seed = num(key, value)?,
            _ => return Err(GscError::Config(format!("unknown key `{key}`"))),
        }
        Ok(())
    }

    /// Applies `key = value` lines on top of `self`. Blank lines and lines
    /// starting with `#` are ignored.
    pub fn apply_text(&mut self, text: &str) -> Result<()> {
        for (i, raw) in text.lines().enumerate() {
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let (k, v) = line
                .split_once('=')
                .ok_or_else(|| GscError::Config(format!("line {}: expected `key = value`", i + 1)))?;
            self.set(k.trim(), v.trim()).map_err(|e| GscError::Config(format!("line {}: {e}", i + 1)))?;
        }
        self.validate()
    }

    pub fn from_text(text: &str) -> Result<Self> {
        let mut cfg = ExperimentConfig::default();
        cfg.apply_text(text)?;
        Ok(cfg)
    }

    pub fn load(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path).map_err(|e| GscError::io(path, e))?;
        Self::from_text(&text)
    }

    pub fn validate(&self) -> Result<()> {
        let bad = |m: &str| Err(GscError::Config(m.into()));
        if self.hidden == 0 {
            return bad("hidden must be positive");
        }
        if self.batch_size == 0 {
            return bad("batch_size must be positive");
        }
        if self.max_epochs == 0 {
            return bad("max_epochs must be positive");
        }
        if !(self.lr > 0.0 && self.lr.is_finite()) {
            return bad("lr must be a positive number");
        }
        if self.max_nodes < 2 {
            return bad("max_nodes must be at least 2");
        }
        Ok(())
    }

    /// Canonical key-value map, every key present.
    pub fn to_map(&self) -> BTreeMap<String, String> {
        let pairs: [(&str, String); 16] = [
            ("task", self.task.as_str().into()),
            ("representation", self.representation.as_str().into()),
            ("vocab", self.vocab.as_str().into()),
            ("gnn", self.gnn.as_str().into()),
            ("hidden", self.hidden.to_string()),
            ("rounds", self.rounds.to_string()),
            ("max_nodes", self.max_nodes.to_string()),
            ("mixture", self.mixture.as_str().into()),
            ("lr", format!("{:?}", self.lr)),
            ("batch_size", self.batch_size.to_string()),
            ("patience", self.patience.to_string()),
            ("max_epochs", self.max_epochs.to_string()),
            ("target_metric", self.target_metric.map_or("none".into(), |t| format!("{t:?}"))),
            ("max_vocab_words", self.max_vocab_words.to_string()),
            ("max_types", self.max_types.to_string()),
            ("seed", self.seed.to_string()),
        ];
        pairs.into_iter().map(|(k, v)| (k.to_string(), v)).collect()
    }

    pub fn from_map(map: &BTreeMap<String, String>) -> Result<Self> {
        let mut cfg = ExperimentConfig::default();
        for (k, v) in map {
            cfg.set(k, v)?;
        }
        cfg.validate()?;
        Ok(cfg)
    }

    /// Canonical text, keys sorted; parsing it yields `self` again.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for (k, v) in self.to_map() {
            let _ = writeln!(out, "{k} = {v}");
        }
        out
    }

    /// SHA-256 of the canonical text, hex encoded.
    pub fn hash(&self) -> String {
        hex_digest(self.to_text().as_bytes())
    }

    pub fn model_config(&self) -> ModelConfig {
        ModelConfig {
            hidden: self.hidden,
            rounds: self.rounds,
            max_nodes: self.max_nodes,
            mixture: self.mixture,
            ..ModelConfig::new(self.task, self.representation, self.vocab, self.gnn)
        }
    }
}

pub fn hex_digest(bytes: &[u8]) -> String {
    Sha256::digest(bytes).iter().fold(String::with_capacity(64), |mut s, b| {
        let _ = write!(s, "{b:02x}");
        s
    })
}
