//! GRU decoder for variable naming with an optional pointer-sentinel
//! mixture over the instance's cache nodes.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::str::FromStr;

use rand::Rng;

use super::beam::StepDecoder;
use super::MAX_NAME_WORDS;
use crate::embed::{Embedder, Vocabs, EMBED_INIT, EOS_INDEX, UNK, UNK_INDEX};
use crate::error::ModelError;
use crate::gnn::GruCell;
use crate::graph::{CodeGraph, NodeId, NodeKind};
use crate::tensor::{ParamId, ParamStore, Tape, Tensor, Var};

/// Decoder unroll length: the word budget plus the end marker.
pub const DECODE_STEPS: usize = MAX_NAME_WORDS + 1;
/// Floor applied to mixture probabilities before taking logs.
pub const PROB_FLOOR: f64 = 1e-12;

/// How pointer and vocabulary distributions are combined.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum Mixture {
    /// `P(w) = P_graph(w) + P_graph(s) · P_vocab(w)`.
    #[default]
    Normalized,
    /// `P(w) ∝ P_graph(s) · P_graph(w) + (1 − P_graph(s)) · P_vocab(w)`.
    Interpolated,
}

impl Mixture {
    pub fn as_str(self) -> &'static str {
        match self {
            Mixture::Normalized => "normalized",
            Mixture::Interpolated => "interpolated",
        }
    }
}

impl FromStr for Mixture {
    type Err = ModelError;

    fn from_str(s: &str) -> Result<Self, ModelError> {
        match s {
            "normalized" => Ok(Mixture::Normalized),
            "interpolated" => Ok(Mixture::Interpolated),
            _ => Err(ModelError::Config(format!("unknown mixture `{s}`"))),
        }
    }
}

/// Output distribution of the decoder.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum OutputMode {
    /// Softmax over the closed vocabulary only.
    Vocab,
    /// Pointer-sentinel mixture of cache nodes and the closed vocabulary.
    Pointer(Mixture),
}

/// Scatters the columns of a `1 × k` row into `slots` of a `1 × width` row.
fn scatter_cols(tape: &mut Tape, row: Var, slots: &[usize], width: usize) -> Result<Var, ModelError> {
    let col = tape.transpose(row);
    let spread = tape.scatter_add_rows(col, slots, width)?;
    Ok(tape.transpose(spread))
}

/// Combines pointer probabilities `p_graph` (`1 × (K + 1)`, sentinel last)
/// with vocabulary probabilities `p_vocab` (`1 × V`) into a distribution over
/// `width ≥ V` output words, where cache node `i` maps to column `slots[i]`.
pub fn pointer_sentinel_mix(
    tape: &mut Tape,
    p_graph: Var,
    p_vocab: Var,
    slots: &[usize],
    width: usize,
    mixture: Mixture,
) -> Result<Var, ModelError> {
    let [_, k1] = tape.shape(p_graph);
    let [_, v] = tape.shape(p_vocab);
    if k1 != slots.len() + 1 || width < v {
        return Err(ModelError::Config(format!("pointer has {k1} columns for {} cache words", slots.len())));
    }
    let sentinel = tape.pick(p_graph, 0, slots.len())?;
    // With no pointer mass both mixtures reduce to the vocabulary; the
    // literal form would otherwise normalise an all-zero row.
    let vocab_only = slots.is_empty() || tape.value(sentinel).item() >= 1.0;
    let vocab = if width > v {
        let pad = tape.constant(Tensor::zeros(1, width - v));
        tape.concat_cols(&[p_vocab, pad])?
    } else {
        p_vocab
    };
    let graph = if slots.is_empty() {
        tape.constant(Tensor::zeros(1, width))
    } else {
        let cache = tape.slice_cols(p_graph, 0, slots.len())?;
        scatter_cols(tape, cache, slots, width)?
    };
    match mixture {
        _ if vocab_only => Ok(tape.add(graph, vocab)?),
        Mixture::Normalized => {
            let from_vocab = tape.mul_scalar(vocab, sentinel)?;
            Ok(tape.add(graph, from_vocab)?)
        }
        Mixture::Interpolated => {
            let from_graph = tape.mul_scalar(graph, sentinel)?;
            let rest = tape.affine(sentinel, -1.0, 1.0);
            let from_vocab = tape.mul_scalar(vocab, rest)?;
            let raw = tape.add(from_graph, from_vocab)?;
            let total = tape.sum(raw);
            let log_total = tape.log(total);
            let neg = tape.scale(log_total, -1.0);
            let inv = tape.exp(neg);
            Ok(tape.mul_scalar(raw, inv)?)
        }
    }
}

/// Per-instance decoding context.
#[derive(Clone, Debug)]
pub struct DecodeContext {
    /// Initial decoder state: mean final state of the `<NAME-ME>` nodes.
    pub init: Var,
    /// Transformed cache-node states followed by the sentinel, `(K + 1) × d`.
    pub keys: Option<Var>,
    /// Output column of each cache node.
    pub slots: Vec<usize>,
    /// Cache words outside the closed vocabulary, in column order after it.
    pub extra_words: Vec<String>,
    pub vocab_size: usize,
}

impl DecodeContext {
    pub fn width(&self) -> usize {
        self.vocab_size + self.extra_words.len()
    }

    /// Column of `word`, or `<UNK>` when it has none.
    pub fn index_of(&self, word: &str, vocabs: &Vocabs) -> usize {
        if let Some(i) = vocabs.words.get(word) {
            return i;
        }
        self.extra_words.iter().position(|w| w == word).map_or(UNK_INDEX, |j| self.vocab_size + j)
    }

    pub fn word<'a>(&'a self, index: usize, vocabs: &'a Vocabs) -> &'a str {
        if index < self.vocab_size {
            vocabs.words.word(index)
        } else {
            &self.extra_words[index - self.vocab_size]
        }
    }
}

/// GRU decoder unrolled for a fixed number of steps. Step `i` consumes the
/// embedding of word `i − 1` (a learned start vector at step 0).
#[derive(Clone, Debug, PartialEq)]
pub struct Decoder {
    pub hidden: usize,
    pub output: OutputMode,
    gru: GruCell,
    go: ParamId,
    out_w: ParamId,
    out_b: ParamId,
    pointer: Option<(ParamId, ParamId, ParamId)>,
}

impl Decoder {
    pub fn new(hidden: usize, vocab_size: usize, output: OutputMode, store: &mut ParamStore, rng: &mut impl Rng) -> Result<Self, ModelError> {
        let gru = GruCell::new("decoder.gru", hidden, hidden, store, rng)?;
        let go = store.uniform("decoder.go", 1, hidden, EMBED_INIT, rng)?;
        let out_w = store.glorot("decoder.out.weight", hidden, vocab_size, rng)?;
        let out_b = store.zeros("decoder.out.bias", 1, vocab_size)?;
        let pointer = match output {
            OutputMode::Vocab => None,
            OutputMode::Pointer(_) => Some((
                store.glorot("decoder.pointer.weight", hidden, hidden, rng)?,
                store.zeros("decoder.pointer.bias", 1, hidden)?,
                store.uniform("decoder.sentinel", 1, hidden, EMBED_INIT, rng)?,
            )),
        };
        Ok(Decoder { hidden, output, gru, go, out_w, out_b, pointer })
    }

    pub fn from_store(output: OutputMode, store: &ParamStore) -> Result<Self, ModelError> {
        let gru = GruCell::from_store("decoder.gru", store)?;
        let pointer = match output {
            OutputMode::Vocab => None,
            OutputMode::Pointer(_) => Some((
                store.id("decoder.pointer.weight")?,
                store.id("decoder.pointer.bias")?,
                store.id("decoder.sentinel")?,
            )),
        };
        Ok(Decoder {
            hidden: gru.hidden,
            output,
            gru,
            go: store.id("decoder.go")?,
            out_w: store.id("decoder.out.weight")?,
            out_b: store.id("decoder.out.bias")?,
            pointer,
        })
    }

    /// Builds the context from final node states `ht` (`N × d`).
    pub fn context(&self, tape: &mut Tape, g: &CodeGraph, ht: Var, name_me: &[NodeId], vocabs: &Vocabs) -> Result<DecodeContext, ModelError> {
        if name_me.is_empty() {
            return Err(ModelError::Empty("<NAME-ME> node set"));
        }
        let idx: Vec<usize> = name_me.iter().map(|n| n.index()).collect();
        let rows = tape.gather_rows(ht, &idx)?;
        let init = tape.mean_rows(rows)?;
        let vocab_size = vocabs.words.len();
        let mut ctx = DecodeContext { init, keys: None, slots: Vec::new(), extra_words: Vec::new(), vocab_size };
        let Some((w, b, sentinel)) = self.pointer else { return Ok(ctx) };
        let mut cache_ids = Vec::new();
        for id in g.node_ids() {
            let n = g.node(id);
            if n.kind != NodeKind::Cache {
                continue;
            }
            let word = n.name.clone().unwrap_or_default();
            let slot = match vocabs.words.get(&word) {
                Some(i) => i,
                None => match ctx.extra_words.iter().position(|x| *x == word) {
                    Some(j) => vocab_size + j,
                    None => {
                        ctx.extra_words.push(word);
                        vocab_size + ctx.extra_words.len() - 1
                    }
                },
            };
            cache_ids.push(id.index());
            ctx.slots.push(slot);
        }
        let sentinel = tape.param(sentinel);
        let states = if cache_ids.is_empty() {
            sentinel
        } else {
            let cache = tape.gather_rows(ht, &cache_ids)?;
            tape.concat_rows(&[cache, sentinel])?
        };
        let (w, b) = (tape.param(w), tape.param(b));
        let keys = tape.matmul(states, w)?;
        ctx.keys = Some(tape.add_row(keys, b)?);
        Ok(ctx)
    }

    /// Input embedding of output column `index` (`None` for the start).
    pub fn input(
        &self,
        tape: &mut Tape,
        embedder: &Embedder,
        ctx: &DecodeContext,
        vocabs: &Vocabs,
        memo: &mut BTreeMap<usize, Var>,
        index: Option<usize>,
    ) -> Result<Var, ModelError> {
        let Some(index) = index else { return Ok(tape.param(self.go)) };
        if let Some(&v) = memo.get(&index) {
            return Ok(v);
        }
        let v = match embedder.charcnn() {
            Some(cnn) => {
                let word = if index == UNK_INDEX { UNK } else { ctx.word(index, vocabs) };
                cnn.embed(tape, word)?
            }
            None => {
                let table = tape.param(embedder.word_table());
                let row = if index < ctx.vocab_size { index } else { UNK_INDEX };
                tape.gather_rows(table, &[row])?
            }
        };
        memo.insert(index, v);
        Ok(v)
    }

    /// One step: new state and the `1 × width` output distribution.
    pub fn step(&self, tape: &mut Tape, ctx: &DecodeContext, h: Var, x: Var) -> Result<(Var, Var), ModelError> {
        let h = self.gru.step(tape, x, h)?;
        let (w, b) = (tape.param(self.out_w), tape.param(self.out_b));
        let logits = tape.matmul(h, w)?;
        let logits = tape.add_row(logits, b)?;
        let p_vocab = tape.softmax_rows(logits);
        let probs = match (self.output, ctx.keys) {
            (OutputMode::Pointer(mixture), Some(keys)) => {
                let kt = tape.transpose(keys);
                let scores = tape.matmul(h, kt)?;
                let p_graph = tape.softmax_rows(scores);
                pointer_sentinel_mix(tape, p_graph, p_vocab, &ctx.slots, ctx.width(), mixture)?
            }
            _ => p_vocab,
        };
        Ok((h, probs))
    }

    /// Output columns of the target words followed by the end marker.
    pub fn target_indices(ctx: &DecodeContext, target: &[String], vocabs: &Vocabs) -> Vec<usize> {
        target.iter().take(MAX_NAME_WORDS).map(|w| ctx.index_of(w, vocabs)).chain([EOS_INDEX]).collect()
    }

    /// Teacher-forced negative log-likelihood of the target words and the end
    /// marker. Words with no output column score `−log P(<UNK>)`.
    pub fn loss(
        &self,
        tape: &mut Tape,
        embedder: &Embedder,
        ctx: &DecodeContext,
        target: &[String],
        vocabs: &Vocabs,
    ) -> Result<Var, ModelError> {
        let targets = Self::target_indices(ctx, target, vocabs);
        let mut memo = BTreeMap::new();
        let mut h = ctx.init;
        let mut prev = None;
        let mut terms = Vec::with_capacity(targets.len());
        for &t in &targets {
            let x = self.input(tape, embedder, ctx, vocabs, &mut memo, prev)?;
            let (next, probs) = self.step(tape, ctx, h, x)?;
            h = next;
            let p = tape.pick(probs, 0, t)?;
            let p = tape.clamp(p, PROB_FLOOR, 1.0);
            terms.push(tape.log(p));
            prev = Some(t);
        }
        let all = tape.concat_cols(&terms)?;
        let total = tape.sum(all);
        Ok(tape.scale(total, -1.0))
    }
}

/// Inference-time decoder over a tape, for [`super::beam_search`].
pub struct NeuralStep<'t, 'p> {
    pub tape: &'t mut Tape<'p>,
    pub decoder: &'t Decoder,
    pub embedder: &'t Embedder,
    pub ctx: &'t DecodeContext,
    pub vocabs: &'t Vocabs,
    memo: BTreeMap<usize, Var>,
}

impl<'t, 'p> NeuralStep<'t, 'p> {
    pub fn new(tape: &'t mut Tape<'p>, decoder: &'t Decoder, embedder: &'t Embedder, ctx: &'t DecodeContext, vocabs: &'t Vocabs) -> Self {
        NeuralStep { tape, decoder, embedder, ctx, vocabs, memo: BTreeMap::new() }
    }
}

impl StepDecoder for NeuralStep<'_, '_> {
    type State = Var;

    fn start(&mut self) -> Result<Var, ModelError> {
        Ok(self.ctx.init)
    }

    fn step(&mut self, state: &Var, prev: Option<usize>) -> Result<(Var, Vec<f64>), ModelError> {
        let x = self.decoder.input(self.tape, self.embedder, self.ctx, self.vocabs, &mut self.memo, prev)?;
        let (h, probs) = self.decoder.step(self.tape, self.ctx, *state, x)?;
        let logp = self.tape.value(probs).data().iter().map(|&p| crate::math::ln(p.max(PROB_FLOOR))).collect();
        Ok((h, logp))
    }

    fn eos(&self) -> usize {
        EOS_INDEX
    }
}

/// Words of a decoded column sequence up to the end marker; `<UNK>` renders
/// as an empty word.
pub fn render(tokens: &[usize], ctx: &DecodeContext, vocabs: &Vocabs) -> Vec<String> {
    tokens
        .iter()
        .take_while(|&&t| t != EOS_INDEX)
        .map(|&t| if t == UNK_INDEX { String::new() } else { String::from(ctx.word(t, vocabs)) })
        .collect()
}
