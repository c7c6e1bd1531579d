mod support;

use std::collections::BTreeMap;

use gsc_core::embed::{
    CharCnn, CharCnnConfig, EmbedConfig, Embedder, NameEmbedding, VocabCounter, VocabTable, Vocabs, UNK_INDEX,
};
use gsc_core::graph::{CodeGraph, Construct, Node, NodeKind, SpecialToken};
use gsc_core::parser::source_to_graph;
use gsc_core::tensor::{ParamStore, Tape};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use support::gradcheck::{max_relative_error, REL_TOL};

fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn charcnn(seed: u64) -> (ParamStore, CharCnn) {
    let mut store = ParamStore::new();
    let cnn = CharCnn::new("cnn", CharCnnConfig::default(), &mut store, &mut rng(seed)).unwrap();
    (store, cnn)
}

fn embed_name(store: &ParamStore, cnn: &CharCnn, name: &str) -> Vec<f64> {
    let mut tape = Tape::new(store);
    let v = cnn.embed(&mut tape, name).unwrap();
    tape.value(v).data().to_vec()
}

#[test]
fn charset_has_seventy_entries() {
    assert_eq!(CharCnnConfig::default().table_size(), 70);
}

#[test]
fn charcnn_is_deterministic_and_64_wide() {
    let (store, cnn) = charcnn(1);
    let a = embed_name(&store, &cnn, "expectedLength");
    assert_eq!(a.len(), 64);
    assert_eq!(a, embed_name(&store, &cnn, "expectedLength"));
}

#[test]
fn charcnn_separates_one_character_edits() {
    for seed in 0..10 {
        let (store, cnn) = charcnn(seed);
        assert_ne!(embed_name(&store, &cnn, "abc"), embed_name(&store, &cnn, "abd"), "seed {seed}");
    }
}

#[test]
fn charcnn_truncates_long_names() {
    let (store, cnn) = charcnn(3);
    let long: String = "abcdefghij".repeat(5);
    assert_eq!(embed_name(&store, &cnn, &long), embed_name(&store, &cnn, &long[..32]));
    assert_ne!(embed_name(&store, &cnn, &long[..31]), embed_name(&store, &cnn, &long[..32]));
}

#[test]
fn charcnn_lowercases_and_maps_unknown_characters() {
    let cfg = CharCnnConfig::default();
    assert_eq!(cfg.encode("AbC"), cfg.encode("abc"));
    assert_eq!(cfg.encode("é"), vec![69]);
    assert_eq!(cfg.encode(""), vec![69]);
}

#[test]
fn charcnn_gradients_match_finite_differences() {
    let cfg = CharCnnConfig { char_embed_dim: 3, layers: [(3, 4), (3, 5)], ..CharCnnConfig::default() };
    for seed in 0..20 {
        let mut store = ParamStore::new();
        let cnn = CharCnn::new("cnn", cfg.clone(), &mut store, &mut rng(seed)).unwrap();
        let (err, at) = max_relative_error(&store, &|tape: &mut Tape| {
            let e = cnn.embed(tape, "getX1")?;
            let s = tape.tanh(e);
            Ok::<_, gsc_core::ModelError>(tape.sum(s))
        });
        assert!(err < REL_TOL, "seed {seed}: {at}");
    }
}

#[test]
fn vocab_keeps_most_frequent_words_with_reserved_prefix() {
    let counts: BTreeMap<String, usize> =
        [("b", 3), ("a", 3), ("c", 1), ("d", 5)].into_iter().map(|(w, c)| (w.to_string(), c)).collect();
    let v = VocabTable::words_from_counts(&counts, 3);
    assert_eq!(v.words(), ["<UNK>", "<EOS>", "d", "a", "b"]);
    assert_eq!(v.index_or_unk("c"), UNK_INDEX);
}

fn closed_vocabs() -> Vocabs {
    let mut counter = VocabCounter::default();
    counter.add_words(["foo", "bar"]);
    counter.types.insert("int".into(), 1);
    counter.build(10, 10)
}

fn variable(name: &str, ty: &str) -> Node {
    Node {
        kind: NodeKind::Variable,
        name: Some(name.into()),
        type_name: Some(ty.into()),
        ..Node::syntax(Construct::named("LocalName"))
    }
}

fn closed_embedder(store: &mut ParamStore, vocabs: &Vocabs) -> Embedder {
    let cfg = EmbedConfig { name: NameEmbedding::ClosedVocab, ..EmbedConfig::default() };
    Embedder::new(cfg, vocabs, store, &mut rng(9)).unwrap()
}

/// Applies `proj([type_row, name_part])` with explicit loops.
fn project(store: &ParamStore, type_row: &[f64], name_part: &[f64]) -> Vec<f64> {
    let w = store.value(store.id("embed.proj.weight").unwrap());
    let b = store.value(store.id("embed.proj.bias").unwrap());
    let x: Vec<f64> = type_row.iter().chain(name_part).copied().collect();
    (0..w.cols()).map(|j| b.get(0, j) + (0..w.rows()).map(|i| x[i] * w.get(i, j)).sum::<f64>()).collect()
}

fn row(store: &ParamStore, name: &str, r: usize) -> Vec<f64> {
    store.value(store.id(name).unwrap()).row(r).to_vec()
}

#[test]
fn closed_vocab_name_is_mean_of_word_embeddings() {
    let vocabs = closed_vocabs();
    let mut store = ParamStore::new();
    let emb = closed_embedder(&mut store, &vocabs);
    let mut g = CodeGraph::new();
    g.add_node(variable("foo_bar", "int"));
    let mut tape = Tape::new(&store);
    let h = emb.init_hidden_states(&mut tape, &g, &vocabs).unwrap();
    let got = tape.value(h).row(0).to_vec();

    let foo = row(&store, "embed.word", vocabs.words.get("foo").unwrap());
    let bar = row(&store, "embed.word", vocabs.words.get("bar").unwrap());
    let mean: Vec<f64> = foo.iter().zip(&bar).map(|(a, b)| (a + b) / 2.0).collect();
    let ty = row(&store, "embed.type", vocabs.types.get("int").unwrap());
    let want = project(&store, &ty, &mean);
    assert_eq!(got.len(), 64);
    for (a, b) in got.iter().zip(&want) {
        assert!((a - b).abs() < 1e-12);
    }
}

#[test]
fn closed_vocab_all_oov_uses_unk_embedding() {
    let vocabs = closed_vocabs();
    let mut store = ParamStore::new();
    let emb = closed_embedder(&mut store, &vocabs);
    let mut tape = Tape::new(&store);
    let v = emb.name_embedding(&mut tape, "quuxZap", &vocabs).unwrap();
    assert_eq!(tape.value(v).data(), row(&store, "embed.word", UNK_INDEX).as_slice());
}

#[test]
fn syntax_special_and_cache_nodes_use_their_tables() {
    let vocabs = closed_vocabs();
    let mut store = ParamStore::new();
    let emb = Embedder::new(EmbedConfig::default(), &vocabs, &mut store, &mut rng(2)).unwrap();
    let mut g = CodeGraph::new();
    let block = Construct::named("Block");
    g.add_node(Node::syntax(block));
    g.add_node(Node::special(SpecialToken::NameMe));
    g.add_node(Node::cache("foo"));
    g.add_node(variable("foo", "Mystery"));
    let mut tape = Tape::new(&store);
    let h = emb.init_hidden_states(&mut tape, &g, &vocabs).unwrap();
    let h = tape.value(h).clone();
    assert_eq!(h.shape(), [4, 64]);
    assert_eq!(h.row(0), row(&store, "embed.construct", block.index()).as_slice());
    assert_eq!(h.row(1), row(&store, "embed.construct", SpecialToken::NameMe.construct().index()).as_slice());

    let mut tape = Tape::new(&store);
    let name = emb.name_embedding(&mut tape, "foo", &vocabs).unwrap();
    let name = tape.value(name).data().to_vec();
    let cache_ty = row(&store, "embed.type", 1);
    let unk_ty = row(&store, "embed.type", 0);
    for (a, b) in h.row(2).iter().zip(project(&store, &cache_ty, &name)) {
        assert!((a - b).abs() < 1e-12);
    }
    for (a, b) in h.row(3).iter().zip(project(&store, &unk_ty, &name)) {
        assert!((a - b).abs() < 1e-12);
    }
}

#[test]
fn embedder_rejects_zero_width() {
    let cfg = EmbedConfig { hidden: 0, ..EmbedConfig::default() };
    let err = Embedder::new(cfg, &Vocabs::default(), &mut ParamStore::new(), &mut rng(0)).unwrap_err();
    assert_eq!(err, gsc_core::ModelError::ZeroWidth);
}

#[test]
fn parsed_graph_embeds_every_node() {
    let g = source_to_graph("class A { int x; int get() { return x; } }").unwrap();
    let mut counter = VocabCounter::default();
    counter.add_graph(&g);
    let vocabs = counter.build(100, 100);
    let mut store = ParamStore::new();
    let emb = Embedder::new(EmbedConfig::default(), &vocabs, &mut store, &mut rng(4)).unwrap();
    let mut tape = Tape::new(&store);
    let h = emb.init_hidden_states(&mut tape, &g, &vocabs).unwrap();
    assert_eq!(tape.value(h).shape(), [g.len(), 64]);
    assert!(tape.value(h).all_finite());
}

#[test]
fn embedding_gradients_match_finite_differences() {
    let vocabs = closed_vocabs();
    let mut g = CodeGraph::new();
    g.add_node(Node::syntax(Construct::named("Block")));
    g.add_node(variable("fooBar", "int"));
    g.add_node(Node::cache("bar"));
    for (seed, name) in [NameEmbedding::ClosedVocab, NameEmbedding::CharCnn].into_iter().cycle().take(20).enumerate() {
        let cfg = EmbedConfig {
            hidden: 4,
            type_dim: 2,
            name,
            charcnn: CharCnnConfig { char_embed_dim: 2, layers: [(3, 3), (3, 4)], ..CharCnnConfig::default() },
        };
        let mut store = ParamStore::new();
        let emb = Embedder::new(cfg, &vocabs, &mut store, &mut rng(seed as u64)).unwrap();
        let (err, at) = max_relative_error(&store, &|tape: &mut Tape| {
            let h = emb.init_hidden_states(tape, &g, &vocabs)?;
            let s = tape.sigmoid(h);
            Ok::<_, gsc_core::ModelError>(tape.sum(s))
        });
        assert!(err < REL_TOL, "seed {seed}: {at}");
    }
}
