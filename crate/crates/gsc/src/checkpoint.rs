//! JSON checkpoints: parameters by name, vocabularies, configuration and the
//! training curve.

use std::collections::BTreeMap;
use std::path::Path;

use gsc_core::embed::{VocabTable, Vocabs};
use gsc_core::graph::EdgeType;
use gsc_core::model::Model;
use gsc_core::tensor::{ParamStore, Tensor};
use serde::{Deserialize, Serialize};

use crate::config::ExperimentConfig;
use crate::error::{GscError, Result};
use crate::format::{read_json, write_json};

pub const FORMAT_VERSION: u32 = 1;

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ParamRecord {
    pub name: String,
    pub shape: [usize; 2],
    pub values: Vec<f64>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct EpochRecord {
    pub epoch: usize,
    pub train_loss: f64,
    pub validation_metric: f64,
    pub seconds: f64,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct VocabRecord {
    pub words: Vec<String>,
    pub types: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Checkpoint {
    pub format_version: u32,
    pub config: BTreeMap<String, String>,
    pub config_hash: String,
    /// Edge types the message-passing layers have parameters for.
    pub edge_types: Vec<String>,
    pub vocab: VocabRecord,
    pub parameters: Vec<ParamRecord>,
    pub curve: Vec<EpochRecord>,
    pub best_epoch: usize,
    pub best_validation_metric: f64,
}

/// A checkpoint loaded into a runnable model.
pub struct Loaded {
    pub config: ExperimentConfig,
    pub model: Model,
    pub store: ParamStore,
    pub vocabs: Vocabs,
}

impl Checkpoint {
    pub fn new(config: &ExperimentConfig, store: &ParamStore, vocabs: &Vocabs) -> Self {
        let parameters = store
            .iter()
            .map(|(_, p)| ParamRecord { name: p.name.clone(), shape: p.value.shape(), values: p.value.data().to_vec() })
            .collect();
        Checkpoint {
            format_version: FORMAT_VERSION,
            config: config.to_map(),
            config_hash: config.hash(),
            edge_types: config.model_config().gnn_config().edge_types.iter().map(ToString::to_string).collect(),
            vocab: VocabRecord { words: vocabs.words.words().to_vec(), types: vocabs.types.words().to_vec() },
            parameters,
            curve: Vec::new(),
            best_epoch: 0,
            best_validation_metric: f64::NAN,
        }
    }

    pub fn save(&self, path: &Path) -> Result<()> {
        write_json(path, self)
    }

    pub fn load(path: &Path) -> Result<Self> {
        let ck: Checkpoint = read_json(path)?;
        if ck.format_version != FORMAT_VERSION {
            return Err(GscError::Config(format!("unsupported checkpoint format {}", ck.format_version)));
        }
        Ok(ck)
    }

    pub fn experiment_config(&self) -> Result<ExperimentConfig> {
        ExperimentConfig::from_map(&self.config)
    }

    /// Rebuilds the parameter store, vocabularies and model.
    pub fn restore(&self) -> Result<Loaded> {
        let config = self.experiment_config()?;
        let mut edge_types = Vec::with_capacity(self.edge_types.len());
        for t in &self.edge_types {
            edge_types.push(t.parse::<EdgeType>()?);
        }
        let model_config = config.model_config();
        if edge_types != model_config.gnn_config().edge_types {
            return Err(GscError::Config("checkpoint edge types differ from the model's".into()));
        }
        let mut store = ParamStore::new();
        for p in &self.parameters {
            store.add(&p.name, Tensor::new(p.shape[0], p.shape[1], p.values.clone())?)?;
        }
        let vocabs = Vocabs {
            words: VocabTable::from_words(self.vocab.words.iter().cloned()),
            types: VocabTable::from_words(self.vocab.types.iter().cloned()),
        };
        let model = Model::from_store(model_config, &store)?;
        Ok(Loaded { config, model, store, vocabs })
    }
}
