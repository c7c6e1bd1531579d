//! A full model: initial states, message passing and a task head.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::str::FromStr;

use rand::Rng;

use crate::cache::CacheMode;
use crate::embed::{CharCnnConfig, EmbedConfig, Embedder, NameEmbedding, Vocabs};
use crate::error::ModelError;
use crate::gnn::{all_edge_types, EdgeIndex, Gnn, GnnConfig, GnnKind, DEFAULT_ROUNDS};
use crate::graph::{CodeGraph, NodeId};
use crate::tasks::fitb::{fitb_loss, rank_variables, FitbReadout};
use crate::tasks::varnaming::{render, Decoder, Mixture, NeuralStep, OutputMode, DECODE_STEPS};
use crate::tasks::{
    beam_search, fitb_outcome, naming_outcome, DecodedName, FitbOutcome, GraphConfig, Instance, NamingOutcome, Task,
    MAX_NODES,
};
use crate::tensor::{ParamStore, Tape, Var};

/// Whether semantic edges are added to the syntax graph.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Representation {
    Ast,
    AugAst,
}

impl Representation {
    pub fn as_str(self) -> &'static str {
        match self {
            Representation::Ast => "ast",
            Representation::AugAst => "augast",
        }
    }
}

impl FromStr for Representation {
    type Err = ModelError;

    fn from_str(s: &str) -> Result<Self, ModelError> {
        match s {
            "ast" => Ok(Representation::Ast),
            "augast" => Ok(Representation::AugAst),
            _ => Err(ModelError::Config(format!("unknown representation `{s}`"))),
        }
    }
}

/// How names enter and leave the model.
///
/// | strategy   | name embedding | cache nodes       | naming output      |
/// |------------|----------------|-------------------|--------------------|
/// | `closed`   | word mean      | none              | vocabulary softmax |
/// | `charcnn`  | CharCNN        | none              | vocabulary softmax |
/// | `sentinel` | CharCNN        | no `WORD_USE`     | pointer-sentinel   |
/// | `gsc`      | CharCNN        | with `WORD_USE`   | pointer-sentinel   |
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum VocabStrategy {
    ClosedVocab,
    CharCnn,
    PointerSentinel,
    Gsc,
}

impl VocabStrategy {
    pub const ALL: [VocabStrategy; 4] =
        [VocabStrategy::ClosedVocab, VocabStrategy::CharCnn, VocabStrategy::PointerSentinel, VocabStrategy::Gsc];

    pub fn as_str(self) -> &'static str {
        match self {
            VocabStrategy::ClosedVocab => "closed",
            VocabStrategy::CharCnn => "charcnn",
            VocabStrategy::PointerSentinel => "sentinel",
            VocabStrategy::Gsc => "gsc",
        }
    }

    pub fn cache_mode(self) -> Option<CacheMode> {
        match self {
            VocabStrategy::ClosedVocab | VocabStrategy::CharCnn => None,
            VocabStrategy::PointerSentinel => Some(CacheMode::NoEdges),
            VocabStrategy::Gsc => Some(CacheMode::Full),
        }
    }

    pub fn name_embedding(self) -> NameEmbedding {
        match self {
            VocabStrategy::ClosedVocab => NameEmbedding::ClosedVocab,
            _ => NameEmbedding::CharCnn,
        }
    }

    pub fn output_mode(self, mixture: Mixture) -> OutputMode {
        match self {
            VocabStrategy::ClosedVocab | VocabStrategy::CharCnn => OutputMode::Vocab,
            VocabStrategy::PointerSentinel | VocabStrategy::Gsc => OutputMode::Pointer(mixture),
        }
    }
}

impl FromStr for VocabStrategy {
    type Err = ModelError;

    fn from_str(s: &str) -> Result<Self, ModelError> {
        VocabStrategy::ALL
            .into_iter()
            .find(|v| v.as_str() == s)
            .ok_or_else(|| ModelError::Config(format!("unknown vocabulary strategy `{s}`")))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ModelConfig {
    pub task: Task,
    pub representation: Representation,
    pub vocab: VocabStrategy,
    pub gnn: GnnKind,
    pub hidden: usize,
    pub rounds: usize,
    pub max_nodes: usize,
    pub mixture: Mixture,
}

impl ModelConfig {
    pub fn new(task: Task, representation: Representation, vocab: VocabStrategy, gnn: GnnKind) -> Self {
        ModelConfig {
            task,
            representation,
            vocab,
            gnn,
            hidden: 64,
            rounds: DEFAULT_ROUNDS,
            max_nodes: MAX_NODES,
            mixture: Mixture::Normalized,
        }
    }

    pub fn graph_config(&self) -> GraphConfig {
        GraphConfig {
            augment: self.representation == Representation::AugAst,
            cache: self.vocab.cache_mode(),
            max_nodes: self.max_nodes,
        }
    }

    pub fn embed_config(&self) -> EmbedConfig {
        let mut charcnn = CharCnnConfig::default();
        charcnn.layers[1].1 = self.hidden;
        EmbedConfig { hidden: self.hidden, name: self.vocab.name_embedding(), charcnn, ..EmbedConfig::default() }
    }

    /// Every edge type gets a transform, so one parameter layout serves all
    /// representations.
    pub fn gnn_config(&self) -> GnnConfig {
        GnnConfig { kind: self.gnn, hidden: self.hidden, rounds: self.rounds, edge_types: all_edge_types() }
    }

    /// Short identifier such as `augast-gsc-ggnn`.
    pub fn label(&self) -> String {
        format!("{}-{}-{}", self.representation.as_str(), self.vocab.as_str(), self.gnn.as_str())
    }
}

#[derive(Clone, Debug, PartialEq)]
enum Head {
    Fitb(FitbReadout),
    Naming(Decoder),
}

/// Output of [`Model::predict`].
#[derive(Clone, Debug, PartialEq)]
pub enum Prediction {
    Fitb {
        /// Probability per node.
        scores: Vec<f64>,
        /// Variable nodes, best first.
        ranked: Vec<NodeId>,
    },
    Naming {
        /// Beam results, best first, with their log-probabilities.
        names: Vec<(DecodedName, f64)>,
    },
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub enum Outcome {
    Fitb(FitbOutcome),
    Naming(NamingOutcome),
}

#[derive(Clone, Debug, PartialEq)]
pub struct Model {
    pub config: ModelConfig,
    embedder: Embedder,
    gnn: Gnn,
    head: Head,
}

impl Model {
    pub fn new(config: ModelConfig, vocabs: &Vocabs, store: &mut ParamStore, rng: &mut impl Rng) -> Result<Self, ModelError> {
        let embedder = Embedder::new(config.embed_config(), vocabs, store, rng)?;
        let gnn = Gnn::new(config.gnn_config(), store, rng)?;
        let head = match config.task {
            Task::Fitb => Head::Fitb(FitbReadout::new(config.gnn, config.hidden, store, rng)?),
            Task::VarNaming => Head::Naming(Decoder::new(
                config.hidden,
                vocabs.words.len(),
                config.vocab.output_mode(config.mixture),
                store,
                rng,
            )?),
        };
        Ok(Model { config, embedder, gnn, head })
    }

    /// Rebinds a model to parameters loaded by name.
    pub fn from_store(config: ModelConfig, store: &ParamStore) -> Result<Self, ModelError> {
        let embedder = Embedder::from_store(config.embed_config(), store)?;
        let gnn = Gnn::from_store(config.gnn_config(), store)?;
        let head = match config.task {
            Task::Fitb => Head::Fitb(FitbReadout::from_store(config.gnn, store)?),
            Task::VarNaming => Head::Naming(Decoder::from_store(config.vocab.output_mode(config.mixture), store)?),
        };
        Ok(Model { config, embedder, gnn, head })
    }

    pub fn gnn(&self) -> &Gnn {
        &self.gnn
    }

    /// Initial and final node states.
    pub fn encode(&self, tape: &mut Tape, g: &CodeGraph, vocabs: &Vocabs) -> Result<(Var, Var), ModelError> {
        let index = EdgeIndex::new(g, &self.gnn.config.edge_types)?;
        let h0 = self.embedder.init_hidden_states(tape, g, vocabs)?;
        let states = self.gnn.forward(tape, h0, &index)?;
        Ok((h0, *states.last().unwrap_or(&h0)))
    }

    fn check_task(&self, inst: &Instance) -> Result<(), ModelError> {
        if inst.task() != self.config.task {
            return Err(ModelError::Config(format!(
                "model is for {} but the instance is {}",
                self.config.task.as_str(),
                inst.task().as_str()
            )));
        }
        Ok(())
    }

    /// Scalar training loss for one instance.
    pub fn loss(&self, tape: &mut Tape, inst: &Instance, vocabs: &Vocabs) -> Result<Var, ModelError> {
        self.check_task(inst)?;
        let (h0, ht) = self.encode(tape, inst.graph(), vocabs)?;
        match (&self.head, inst) {
            (Head::Fitb(readout), Instance::Fitb(i)) => {
                let scores = readout.scores(tape, h0, ht)?;
                fitb_loss(tape, scores, &i.correct)
            }
            (Head::Naming(decoder), Instance::VarNaming(i)) => {
                let ctx = decoder.context(tape, &i.graph, ht, &i.name_me, vocabs)?;
                decoder.loss(tape, &self.embedder, &ctx, &i.target, vocabs)
            }
            _ => Err(ModelError::Config("task head does not match the instance".into())),
        }
    }

    pub fn predict(&self, store: &ParamStore, inst: &Instance, vocabs: &Vocabs, beam_width: usize) -> Result<Prediction, ModelError> {
        self.check_task(inst)?;
        let mut tape = Tape::new(store);
        let (h0, ht) = self.encode(&mut tape, inst.graph(), vocabs)?;
        match (&self.head, inst) {
            (Head::Fitb(readout), Instance::Fitb(i)) => {
                let s = readout.scores(&mut tape, h0, ht)?;
                let scores = tape.value(s).data().to_vec();
                let ranked = rank_variables(&i.graph, &scores);
                Ok(Prediction::Fitb { scores, ranked })
            }
            (Head::Naming(decoder), Instance::VarNaming(i)) => {
                let ctx = decoder.context(&mut tape, &i.graph, ht, &i.name_me, vocabs)?;
                let mut step = NeuralStep::new(&mut tape, decoder, &self.embedder, &ctx, vocabs);
                let hyps = beam_search(&mut step, beam_width, DECODE_STEPS)?;
                let names = hyps
                    .into_iter()
                    .map(|h| (DecodedName { words: render(&h.tokens, &ctx, vocabs), finished: h.finished }, h.log_prob))
                    .collect();
                Ok(Prediction::Naming { names })
            }
            _ => Err(ModelError::Config("task head does not match the instance".into())),
        }
    }

    /// Prediction scored against the instance's answer (beam width 5).
    pub fn evaluate(&self, store: &ParamStore, inst: &Instance, vocabs: &Vocabs) -> Result<Outcome, ModelError> {
        Ok(match (self.predict(store, inst, vocabs, 5)?, inst) {
            (Prediction::Fitb { ranked, .. }, Instance::Fitb(i)) => Outcome::Fitb(fitb_outcome(&ranked, &i.correct)),
            (Prediction::Naming { names }, Instance::VarNaming(i)) => {
                let ranked: Vec<DecodedName> = names.into_iter().map(|(n, _)| n).collect();
                Outcome::Naming(naming_outcome(&ranked, &i.target))
            }
            _ => return Err(ModelError::Config("task head does not match the instance".into())),
        })
    }
}
