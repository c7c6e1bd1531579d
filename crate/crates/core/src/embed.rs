//! Initial node states: construct embeddings for syntax nodes and a learned
//! projection of `[type embedding, name embedding]` for variable and cache
//! nodes.

use alloc::collections::BTreeMap;
use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::str::FromStr;

use rand::Rng;

use crate::cache::split_name;
use crate::error::ModelError;
use crate::graph::{CodeGraph, Construct, NodeKind, CACHE_NODE_TYPE};
use crate::tensor::{ParamId, ParamStore, Tape, Var};

/// Range of the uniform initializer for embedding tables.
pub const EMBED_INIT: f64 = 0.05;

/// Characters understood by the CharCNN, in index order. Index
/// `CHARSET.len()` is the unknown character.
pub const CHARSET: &str =
    "abcdefghijklmnopqrstuvwxyz0123456789!\"#$%&'()*+,-./:;<=>?@[\\]^_`{|}~ ";

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CharCnnConfig {
    pub charset: String,
    pub max_name_chars: usize,
    pub char_embed_dim: usize,
    /// `(kernel width, output channels)` of the two conv layers.
    pub layers: [(usize, usize); 2],
}

impl Default for CharCnnConfig {
    fn default() -> Self {
        CharCnnConfig { charset: CHARSET.into(), max_name_chars: 32, char_embed_dim: 16, layers: [(3, 32), (3, 64)] }
    }
}

impl CharCnnConfig {
    /// Rows of the character table: the charset plus one unknown character.
    pub fn table_size(&self) -> usize {
        self.charset.chars().count() + 1
    }

    pub fn output_dim(&self) -> usize {
        self.layers[1].1
    }

    /// Lowercased, truncated character indices of `name`.
    pub fn encode(&self, name: &str) -> Vec<usize> {
        let unknown = self.table_size() - 1;
        let mut idx: Vec<usize> = name
            .chars()
            .flat_map(char::to_lowercase)
            .take(self.max_name_chars)
            .map(|c| self.charset.chars().position(|k| k == c).unwrap_or(unknown))
            .collect();
        if idx.is_empty() {
            idx.push(unknown);
        }
        idx
    }
}

/// Two-layer character CNN with ReLU and max-pooling over positions.
#[derive(Clone, Debug, PartialEq)]
pub struct CharCnn {
    pub config: CharCnnConfig,
    chars: ParamId,
    conv: [(ParamId, ParamId); 2],
}

impl CharCnn {
    pub fn new(prefix: &str, config: CharCnnConfig, store: &mut ParamStore, rng: &mut impl Rng) -> Result<Self, ModelError> {
        let chars = store.uniform(&alloc::format!("{prefix}.chars"), config.table_size(), config.char_embed_dim, EMBED_INIT, rng)?;
        let mut in_dim = config.char_embed_dim;
        let mut conv = Vec::new();
        for (i, &(width, out)) in config.layers.iter().enumerate() {
            let w = store.glorot(&alloc::format!("{prefix}.conv{i}.weight"), width * in_dim, out, rng)?;
            let b = store.zeros(&alloc::format!("{prefix}.conv{i}.bias"), 1, out)?;
            conv.push((w, b));
            in_dim = out;
        }
        Ok(CharCnn { config, chars, conv: [conv[0], conv[1]] })
    }

    pub fn from_store(prefix: &str, config: CharCnnConfig, store: &ParamStore) -> Result<Self, ModelError> {
        let id = |s: &str| store.id(&alloc::format!("{prefix}.{s}"));
        Ok(CharCnn {
            config,
            chars: id("chars")?,
            conv: [(id("conv0.weight")?, id("conv0.bias")?), (id("conv1.weight")?, id("conv1.bias")?)],
        })
    }

    /// `1 × output_dim` embedding of `name`.
    pub fn embed(&self, tape: &mut Tape, name: &str) -> Result<Var, ModelError> {
        let idx = self.config.encode(name);
        let table = tape.param(self.chars);
        let mut h = tape.gather_rows(table, &idx)?;
        for (i, &(w, b)) in self.conv.iter().enumerate() {
            let (w, b) = (tape.param(w), tape.param(b));
            let width = self.config.layers[i].0;
            h = tape.conv1d(h, w, b, width, width / 2)?;
            h = tape.relu(h);
        }
        Ok(tape.max_pool_rows(h)?)
    }
}

/// Word or type table with reserved entries at the lowest indices.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct VocabTable {
    words: Vec<String>,
    index: BTreeMap<String, usize>,
}

pub const UNK: &str = "<UNK>";
pub const EOS: &str = "<EOS>";
pub const UNK_INDEX: usize = 0;
pub const EOS_INDEX: usize = 1;

impl VocabTable {
    pub fn from_words(words: impl IntoIterator<Item = String>) -> Self {
        let mut t = VocabTable::default();
        for w in words {
            if !t.index.contains_key(&w) {
                t.index.insert(w.clone(), t.words.len());
                t.words.push(w);
            }
        }
        t
    }

    /// Reserved entries followed by the `max_size` most frequent words
    /// (ties broken alphabetically).
    pub fn from_counts(reserved: &[&str], counts: &BTreeMap<String, usize>, max_size: usize) -> Self {
        let mut ranked: Vec<(&String, &usize)> =
            counts.iter().filter(|(w, _)| !reserved.contains(&w.as_str())).collect();
        ranked.sort_by(|a, b| b.1.cmp(a.1).then(a.0.cmp(b.0)));
        let words = reserved
            .iter()
            .map(|s| s.to_string())
            .chain(ranked.into_iter().take(max_size).map(|(w, _)| w.clone()));
        Self::from_words(words)
    }

    /// Closed word vocabulary: `<UNK>`, `<EOS>`, then frequent words.
    pub fn words_from_counts(counts: &BTreeMap<String, usize>, max_size: usize) -> Self {
        Self::from_counts(&[UNK, EOS], counts, max_size)
    }

    /// Type vocabulary: `<UNK>`, the cache-node type, then frequent types.
    pub fn types_from_counts(counts: &BTreeMap<String, usize>, max_size: usize) -> Self {
        Self::from_counts(&[UNK, CACHE_NODE_TYPE], counts, max_size)
    }

    pub fn len(&self) -> usize {
        self.words.len()
    }

    pub fn is_empty(&self) -> bool {
        self.words.is_empty()
    }

    pub fn get(&self, word: &str) -> Option<usize> {
        self.index.get(word).copied()
    }

    pub fn index_or_unk(&self, word: &str) -> usize {
        self.get(word).unwrap_or(UNK_INDEX)
    }

    pub fn word(&self, i: usize) -> &str {
        &self.words[i]
    }

    pub fn words(&self) -> &[String] {
        &self.words
    }
}

/// How identifier names are embedded.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum NameEmbedding {
    /// Mean of closed-vocabulary word embeddings.
    ClosedVocab,
    CharCnn,
}

impl NameEmbedding {
    pub fn as_str(self) -> &'static str {
        match self {
            NameEmbedding::ClosedVocab => "closed_vocab",
            NameEmbedding::CharCnn => "charcnn",
        }
    }
}

impl FromStr for NameEmbedding {
    type Err = ModelError;

    fn from_str(s: &str) -> Result<Self, ModelError> {
        match s {
            "closed_vocab" => Ok(NameEmbedding::ClosedVocab),
            "charcnn" => Ok(NameEmbedding::CharCnn),
            _ => Err(ModelError::Config(alloc::format!("unknown name embedding `{s}`"))),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EmbedConfig {
    pub hidden: usize,
    pub type_dim: usize,
    pub name: NameEmbedding,
    pub charcnn: CharCnnConfig,
}

impl Default for EmbedConfig {
    fn default() -> Self {
        EmbedConfig { hidden: 64, type_dim: 16, name: NameEmbedding::CharCnn, charcnn: CharCnnConfig::default() }
    }
}

/// Word and type vocabularies built from the training split.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Vocabs {
    pub words: VocabTable,
    pub types: VocabTable,
}

/// Parameters of the initial-state function.
#[derive(Clone, Debug, PartialEq)]
pub struct Embedder {
    pub config: EmbedConfig,
    constructs: ParamId,
    types: ParamId,
    /// Closed-vocabulary word table; also the decoder's output embedding.
    words: ParamId,
    charcnn: Option<CharCnn>,
    proj_w: ParamId,
    proj_b: ParamId,
}

impl Embedder {
    pub fn new(config: EmbedConfig, vocabs: &Vocabs, store: &mut ParamStore, rng: &mut impl Rng) -> Result<Self, ModelError> {
        if config.hidden == 0 {
            return Err(ModelError::ZeroWidth);
        }
        let h = config.hidden;
        let constructs = store.uniform("embed.construct", Construct::count(), h, EMBED_INIT, rng)?;
        let types = store.uniform("embed.type", vocabs.types.len().max(2), config.type_dim, EMBED_INIT, rng)?;
        let words = store.uniform("embed.word", vocabs.words.len().max(2), h, EMBED_INIT, rng)?;
        let charcnn = match config.name {
            NameEmbedding::CharCnn => {
                let cfg = config.charcnn.clone();
                if cfg.output_dim() != h {
                    return Err(ModelError::Config("CharCNN output width must equal the hidden width".into()));
                }
                Some(CharCnn::new("embed.charcnn", cfg, store, rng)?)
            }
            NameEmbedding::ClosedVocab => None,
        };
        let proj_w = store.glorot("embed.proj.weight", config.type_dim + h, h, rng)?;
        let proj_b = store.zeros("embed.proj.bias", 1, h)?;
        Ok(Embedder { config, constructs, types, words, charcnn, proj_w, proj_b })
    }

    pub fn from_store(config: EmbedConfig, store: &ParamStore) -> Result<Self, ModelError> {
        let charcnn = match config.name {
            NameEmbedding::CharCnn => Some(CharCnn::from_store("embed.charcnn", config.charcnn.clone(), store)?),
            NameEmbedding::ClosedVocab => None,
        };
        Ok(Embedder {
            constructs: store.id("embed.construct")?,
            types: store.id("embed.type")?,
            words: store.id("embed.word")?,
            charcnn,
            proj_w: store.id("embed.proj.weight")?,
            proj_b: store.id("embed.proj.bias")?,
            config,
        })
    }

    pub fn charcnn(&self) -> Option<&CharCnn> {
        self.charcnn.as_ref()
    }

    pub fn word_table(&self) -> ParamId {
        self.words
    }

    /// `1 × hidden` name embedding under the configured strategy.
    pub fn name_embedding(&self, tape: &mut Tape, name: &str, vocabs: &Vocabs) -> Result<Var, ModelError> {
        match &self.charcnn {
            Some(cnn) => cnn.embed(tape, name),
            None => {
                let mut idx: Vec<usize> = split_name(name).iter().map(|w| vocabs.words.index_or_unk(w)).collect();
                if idx.is_empty() {
                    idx.push(crate::embed::UNK_INDEX);
                }
                let table = tape.param(self.words);
                let rows = tape.gather_rows(table, &idx)?;
                Ok(tape.mean_rows(rows)?)
            }
        }
    }

    /// Closed-vocabulary word indices used for a name (for inspection).
    pub fn closed_word_indices(name: &str, vocabs: &Vocabs) -> Vec<usize> {
        split_name(name).iter().map(|w| vocabs.words.index_or_unk(w)).collect()
    }

    /// `N × hidden` initial states, one row per node.
    pub fn init_hidden_states(&self, tape: &mut Tape, g: &CodeGraph, vocabs: &Vocabs) -> Result<Var, ModelError> {
        let n = g.len();
        if n == 0 {
            return Err(ModelError::Empty("graph"));
        }
        let mut syn_ids = Vec::new();
        let mut syn_rows = Vec::new();
        let mut var_ids = Vec::new();
        let mut var_types = Vec::new();
        let mut var_names = Vec::new();
        let mut distinct: BTreeMap<&str, usize> = BTreeMap::new();
        for (i, node) in g.nodes.iter().enumerate() {
            match node.kind {
                NodeKind::Variable | NodeKind::Cache => {
                    let name = node.name.as_deref().unwrap_or("");
                    let next = distinct.len();
                    let slot = *distinct.entry(name).or_insert(next);
                    var_ids.push(i);
                    var_names.push(slot);
                    let ty = match node.kind {
                        NodeKind::Cache => CACHE_NODE_TYPE,
                        _ => node.type_name.as_deref().unwrap_or(UNK),
                    };
                    var_types.push(vocabs.types.index_or_unk(ty));
                }
                NodeKind::Syntax | NodeKind::Special => {
                    syn_ids.push(i);
                    syn_rows.push(node.construct.index());
                }
            }
        }
        let mut parts = Vec::new();
        if !syn_ids.is_empty() {
            let table = tape.param(self.constructs);
            let rows = tape.gather_rows(table, &syn_rows)?;
            parts.push(tape.scatter_add_rows(rows, &syn_ids, n)?);
        }
        if !var_ids.is_empty() {
            let mut names: Vec<(&str, usize)> = distinct.into_iter().collect();
            names.sort_by_key(|&(_, slot)| slot);
            let mut embs = Vec::with_capacity(names.len());
            for (name, _) in names {
                embs.push(self.name_embedding(tape, name, vocabs)?);
            }
            let name_mat = tape.concat_rows(&embs)?;
            let name_rows = tape.gather_rows(name_mat, &var_names)?;
            let type_table = tape.param(self.types);
            let type_rows = tape.gather_rows(type_table, &var_types)?;
            let x = tape.concat_cols(&[type_rows, name_rows])?;
            let (w, b) = (tape.param(self.proj_w), tape.param(self.proj_b));
            let y = tape.matmul(x, w)?;
            let y = tape.add_row(y, b)?;
            parts.push(tape.scatter_add_rows(y, &var_ids, n)?);
        }
        let mut h = parts[0];
        for &p in &parts[1..] {
            h = tape.add(h, p)?;
        }
        Ok(h)
    }
}

/// Counts of name words and declared types over a set of graphs, for
/// building [`Vocabs`].
#[derive(Clone, Debug, Default)]
pub struct VocabCounter {
    pub words: BTreeMap<String, usize>,
    pub types: BTreeMap<String, usize>,
}

impl VocabCounter {
    pub fn add_graph(&mut self, g: &CodeGraph) {
        for n in g.nodes.iter().filter(|n| n.kind == NodeKind::Variable) {
            if let Some(name) = &n.name {
                for w in split_name(name) {
                    *self.words.entry(w).or_default() += 1;
                }
            }
            if let Some(t) = &n.type_name {
                *self.types.entry(t.clone()).or_default() += 1;
            }
        }
    }

    pub fn add_words<'a>(&mut self, words: impl IntoIterator<Item = &'a str>) {
        for w in words {
            *self.words.entry(w.into()).or_default() += 1;
        }
    }

    pub fn build(&self, max_words: usize, max_types: usize) -> Vocabs {
        Vocabs {
            words: VocabTable::words_from_counts(&self.words, max_words),
            types: VocabTable::types_from_counts(&self.types, max_types),
        }
    }
}
