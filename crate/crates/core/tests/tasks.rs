mod support;

use std::collections::{BTreeSet, VecDeque};

use gsc_core::cache::{build_cache, CacheMode};
use gsc_core::embed::{CharCnnConfig, EmbedConfig, Embedder, NameEmbedding, VocabCounter, Vocabs};
use gsc_core::graph::{CodeGraph, Construct, Node, NodeId, NodeKind, SpecialToken, AST};
use gsc_core::parser::source_to_graph;
use gsc_core::tasks::fitb::{fitb_loss, rank_variables};
use gsc_core::tasks::varnaming::{pointer_sentinel_mix, Decoder, Mixture, OutputMode};
use gsc_core::tasks::{
    beam_search, bfs_order, fitb_outcome, levenshtein, make_fitb_instances, make_varnaming_instances, naming_outcome,
    prepare_graph, truncate_graph, DecodedName, GraphConfig, MetricsReport, StepDecoder, MAX_NAME_WORDS,
};
use gsc_core::tensor::{ParamStore, Tape, Tensor};
use gsc_core::ModelError;
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use support::gradcheck::{max_relative_error, REL_TOL};
use support::programs::random_program;

fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn plain_graph(n: usize, edges: &[(usize, usize)]) -> CodeGraph {
    let mut g = CodeGraph::new();
    for _ in 0..n {
        g.add_node(Node::syntax(Construct::named("Block")));
    }
    for &(s, d) in edges {
        g.add_edge(NodeId::from(s), NodeId::from(d), AST);
    }
    g
}

/// Breadth-first distances over the edge list without the graph helpers.
fn oracle_keep(n: usize, edges: &[(usize, usize)], center: usize, max: usize) -> BTreeSet<usize> {
    let mut dist = vec![usize::MAX; n];
    dist[center] = 0;
    let mut queue = VecDeque::from([center]);
    while let Some(v) = queue.pop_front() {
        for &(s, d) in edges {
            let w = if s == v { d } else if d == v { s } else { continue };
            if dist[w] == usize::MAX {
                dist[w] = dist[v] + 1;
                queue.push_back(w);
            }
        }
    }
    let mut order: Vec<(usize, usize)> = (0..n).filter(|&v| dist[v] != usize::MAX).map(|v| (dist[v], v)).collect();
    order.sort();
    order.into_iter().take(max).map(|(_, v)| v).collect()
}

#[test]
fn star_truncation_keeps_hub_and_smallest_leaves() {
    let edges: Vec<(usize, usize)> = (1..=700).map(|i| (0, i)).collect();
    let g = plain_graph(701, &edges);
    let (t, map) = truncate_graph(&g, &[NodeId(0)], 500).unwrap();
    assert_eq!(t.len(), 500);
    let kept: Vec<usize> = (0..701).filter(|&i| map[i].is_some()).collect();
    assert_eq!(kept, (0..500).collect::<Vec<_>>());
    assert_eq!(t.edges.len(), 499);
}

#[test]
fn small_graphs_are_left_unchanged() {
    let g = plain_graph(4, &[(0, 1), (1, 2)]);
    let (t, map) = truncate_graph(&g, &[NodeId(3)], 500).unwrap();
    assert_eq!(t, g);
    assert!(map.iter().all(Option::is_some));
}

#[test]
fn truncation_matches_bfs_oracle_on_random_graph() {
    let mut r = rng(7);
    let n = 600;
    let mut edges: Vec<(usize, usize)> = (1..n).map(|i| (r.gen_range(0..i), i)).collect();
    edges.extend((0..200).map(|_| (r.gen_range(0..n), r.gen_range(0..n))));
    let g = plain_graph(n, &edges);
    for center in [0, 17, 599] {
        let (t, map) = truncate_graph(&g, &[NodeId::from(center)], 500).unwrap();
        let kept: BTreeSet<usize> = (0..n).filter(|&i| map[i].is_some()).collect();
        assert_eq!(kept, oracle_keep(n, &edges, center, 500), "center {center}");
        assert_eq!(t.len(), 500);
        let renumbered: Vec<usize> = kept.iter().map(|&i| map[i].unwrap().index()).collect();
        assert_eq!(renumbered, (0..500).collect::<Vec<_>>());
    }
}

#[test]
fn bfs_rejects_missing_or_empty_centers() {
    let g = plain_graph(3, &[(0, 1)]);
    assert_eq!(bfs_order(&g, &[]), Err(ModelError::Empty("center set")));
    assert_eq!(bfs_order(&g, &[NodeId(9)]), Err(ModelError::MissingNode(9)));
    let order = bfs_order(&g, &[NodeId(1)]).unwrap();
    assert_eq!(order, vec![(NodeId(1), 0), (NodeId(0), 1)]);
}

#[test]
fn centers_survive_a_tiny_budget() {
    let edges: Vec<(usize, usize)> = (0..20).map(|i| (i, i + 1)).collect();
    let g = plain_graph(21, &edges);
    let centers = [NodeId(0), NodeId(10), NodeId(20)];
    let (t, map) = truncate_graph(&g, &centers, 2).unwrap();
    assert_eq!(t.len(), 3);
    assert!(centers.iter().all(|c| map[c.index()].is_some()));
}

const CHECKER: &str = r#"
class Checker {
    int check(String text, int expectedLength) {
        int actual = text.length();
        if (actual != expectedLength) {
            return expectedLength - actual;
        }
        return 0;
    }
}
"#;

fn specials(g: &CodeGraph, token: SpecialToken) -> Vec<NodeId> {
    g.node_ids().filter(|&i| g.node(i).kind == NodeKind::Special && g.node(i).construct == token.construct()).collect()
}

#[test]
fn fitb_instances_cover_every_eligible_variable() {
    let g = source_to_graph(CHECKER).unwrap();
    let insts = make_fitb_instances(&g, &GraphConfig::default(), &mut rng(0)).unwrap();
    assert_eq!(insts.len(), 3);
    let mut answers = BTreeSet::new();
    for inst in &insts {
        assert_eq!(specials(&inst.graph, SpecialToken::FillInTheBlank), vec![inst.blank]);
        let names: BTreeSet<&str> = inst.correct.iter().map(|&c| inst.graph.node(c).name.as_deref().unwrap()).collect();
        assert_eq!(names.len(), 1);
        answers.extend(names.into_iter().map(String::from));
        assert!(inst.graph.has_reverse_edges());
    }
    let want: BTreeSet<String> = ["text", "expectedLength", "actual"].iter().map(|s| s.to_string()).collect();
    assert_eq!(answers, want);
}

#[test]
fn varnaming_instance_hides_every_occurrence() {
    let g = source_to_graph(CHECKER).unwrap();
    let insts = make_varnaming_instances(&g, &GraphConfig::default()).unwrap();
    let inst = insts.iter().find(|i| i.target == ["expected", "length"]).expect("expectedLength instance");
    assert_eq!(inst.name_me.len(), 3);
    assert_eq!(specials(&inst.graph, SpecialToken::NameMe), inst.name_me);
    assert!(inst.graph.node_ids().all(|i| inst.graph.node(i).name.as_deref() != Some("expectedLength")));
    let words: BTreeSet<&str> = inst
        .graph
        .node_ids()
        .filter(|&i| inst.graph.node(i).kind == NodeKind::Cache)
        .map(|i| inst.graph.node(i).name.as_deref().unwrap())
        .collect();
    assert!(words.contains("length") && !words.contains("expected"));
}

#[test]
fn ast_representation_has_only_syntax_edges() {
    let g = source_to_graph(CHECKER).unwrap();
    let cfg = GraphConfig { augment: false, cache: None, max_nodes: 500 };
    for inst in make_fitb_instances(&g, &cfg, &mut rng(1)).unwrap() {
        assert!(inst.graph.edges.iter().all(|e| !e.ty.base.is_semantic()));
    }
}

#[test]
fn prepared_graph_fits_budget_with_cache() {
    let src = random_program(3, 40);
    let g = source_to_graph(&src).unwrap();
    let cfg = GraphConfig { max_nodes: 60, ..GraphConfig::default() };
    let (t, map) = prepare_graph(&g, &[NodeId(5)], &cfg).unwrap();
    assert!(t.len() <= 60);
    assert!(map[5].is_some());
    assert!(t.node_ids().any(|i| t.node(i).kind == NodeKind::Cache));
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn instances_satisfy_invariants(seed in 0u64..10_000, max_nodes in 20usize..200) {
        let g = source_to_graph(&random_program(seed, 25)).unwrap();
        let cfg = GraphConfig { max_nodes, ..GraphConfig::default() };
        for inst in make_fitb_instances(&g, &cfg, &mut rng(seed)).unwrap() {
            prop_assert!(inst.graph.len() <= max_nodes);
            prop_assert_eq!(specials(&inst.graph, SpecialToken::FillInTheBlank), vec![inst.blank]);
            prop_assert!(!inst.correct.is_empty());
            prop_assert!(inst.correct.iter().all(|&c| inst.graph.node(c).kind == NodeKind::Variable));
        }
        for inst in make_varnaming_instances(&g, &cfg).unwrap() {
            prop_assert!(inst.graph.len() <= max_nodes);
            prop_assert!(!inst.name_me.is_empty());
            prop_assert_eq!(specials(&inst.graph, SpecialToken::NameMe), inst.name_me.clone());
            prop_assert!(!inst.target.is_empty() && inst.target.len() <= MAX_NAME_WORDS);
        }
    }
}

#[test]
fn long_names_keep_eight_words() {
    let g = source_to_graph("class A { void m() { int aB_cD_eF_gH_iJ = 1; aB_cD_eF_gH_iJ++; } }").unwrap();
    let insts = make_varnaming_instances(&g, &GraphConfig::default()).unwrap();
    let long = insts.iter().max_by_key(|i| i.target.len()).unwrap();
    assert_eq!(long.target, ["a", "b", "c", "d", "e", "f", "g", "h"]);
}

fn scores_tape<'a>(store: &'a ParamStore, p: &[f64]) -> (Tape<'a>, gsc_core::tensor::Var) {
    let mut tape = Tape::new(store);
    let v = tape.constant(Tensor::new(p.len(), 1, p.to_vec()).unwrap());
    (tape, v)
}

#[test]
fn bce_of_uniform_scores_is_ln_two() {
    let store = ParamStore::new();
    let (mut tape, s) = scores_tape(&store, &[0.5; 6]);
    let l = fitb_loss(&mut tape, s, &[NodeId(1), NodeId(4)]).unwrap();
    assert!((tape.value(l).item() - std::f64::consts::LN_2).abs() < 1e-12);
}

#[test]
fn bce_matches_direct_formula_and_clips() {
    let store = ParamStore::new();
    let p = [0.9, 0.2, 0.0, 1.0];
    let (mut tape, s) = scores_tape(&store, &p);
    let l = fitb_loss(&mut tape, s, &[NodeId(0), NodeId(2)]).unwrap();
    let c = |x: f64| x.clamp(1e-7, 1.0 - 1e-7);
    let want = -(c(0.9).ln() + (1.0 - c(0.2)).ln() + c(0.0).ln() + (1.0 - c(1.0)).ln()) / 4.0;
    assert!((tape.value(l).item() - want).abs() < 1e-12);
}

#[test]
fn bce_rejects_out_of_range_scores() {
    let store = ParamStore::new();
    let (mut tape, s) = scores_tape(&store, &[0.5, 1.5]);
    assert_eq!(fitb_loss(&mut tape, s, &[NodeId(0)]), Err(ModelError::ScoreOutOfRange(1.5)));
    let (mut tape, s) = scores_tape(&store, &[f64::NAN]);
    assert!(matches!(fitb_loss(&mut tape, s, &[]), Err(ModelError::ScoreOutOfRange(p)) if p.is_nan()));
}

#[test]
fn ranking_orders_variables_by_score_then_id() {
    let mut g = plain_graph(5, &[]);
    for i in [0, 2, 3, 4] {
        g.node_mut(NodeId(i)).kind = NodeKind::Variable;
    }
    let ranked = rank_variables(&g, &[0.3, 0.99, 0.7, 0.3, 0.8]);
    assert_eq!(ranked, vec![NodeId(4), NodeId(2), NodeId(0), NodeId(3)]);
    let o = fitb_outcome(&ranked, &[NodeId(2)]);
    assert!(!o.top1 && o.top5);
}

fn mix(p_graph: &[f64], p_vocab: &[f64], slots: &[usize], width: usize, mixture: Mixture) -> Vec<f64> {
    let store = ParamStore::new();
    let mut tape = Tape::new(&store);
    let g = tape.constant(Tensor::from_row(p_graph));
    let v = tape.constant(Tensor::from_row(p_vocab));
    let m = pointer_sentinel_mix(&mut tape, g, v, slots, width, mixture).unwrap();
    tape.value(m).data().to_vec()
}

#[test]
fn mixture_worked_example() {
    let out = mix(&[0.3, 0.3, 0.4], &[0.5, 0.5], &[1, 2], 3, Mixture::Normalized);
    let want = [0.2, 0.5, 0.3];
    for (a, b) in out.iter().zip(want) {
        assert!((a - b).abs() < 1e-12, "{out:?}");
    }
    // Sentinel 0.4: pointer mass 0.4·P_graph, vocabulary mass 0.6·P_vocab, then renormalised.
    let out = mix(&[0.3, 0.3, 0.4], &[0.5, 0.5], &[1, 2], 3, Mixture::Interpolated);
    let raw = [0.6 * 0.5, 0.4 * 0.3 + 0.6 * 0.5, 0.4 * 0.3];
    let z: f64 = raw.iter().sum();
    for (a, b) in out.iter().zip(raw) {
        assert!((a - b / z).abs() < 1e-12, "{out:?}");
    }
}

fn softmax(logits: &[f64]) -> Vec<f64> {
    let m = logits.iter().cloned().fold(f64::NEG_INFINITY, f64::max);
    let e: Vec<f64> = logits.iter().map(|x| (x - m).exp()).collect();
    let z: f64 = e.iter().sum();
    e.into_iter().map(|x| x / z).collect()
}

#[test]
fn mixture_normalises_over_fuzzed_inputs() {
    let mut r = rng(11);
    for step in 0..1000 {
        let k = r.gen_range(0..6);
        let v = r.gen_range(1..8);
        let extra = r.gen_range(0..4);
        let width = v + extra;
        let slots: Vec<usize> = (0..k).map(|_| r.gen_range(0..width)).collect();
        let pg = softmax(&(0..=k).map(|_| r.gen_range(-6.0..6.0)).collect::<Vec<_>>());
        let pv = softmax(&(0..v).map(|_| r.gen_range(-6.0..6.0)).collect::<Vec<_>>());
        for mixture in [Mixture::Normalized, Mixture::Interpolated] {
            let out = mix(&pg, &pv, &slots, width, mixture);
            let total: f64 = out.iter().sum();
            assert!((total - 1.0).abs() < 1e-6, "step {step} {mixture:?}: {total}");
            assert!(out.iter().all(|&p| (0.0..=1.0 + 1e-12).contains(&p)));
        }
    }
}

#[test]
fn mixture_without_cache_nodes_is_the_vocabulary() {
    let out = mix(&[1.0], &[0.25, 0.75], &[], 2, Mixture::Normalized);
    assert_eq!(out, vec![0.25, 0.75]);
}

#[test]
fn mixture_rejects_mismatched_slots() {
    let store = ParamStore::new();
    let mut tape = Tape::new(&store);
    let g = tape.constant(Tensor::from_row(&[0.5, 0.5]));
    let v = tape.constant(Tensor::from_row(&[1.0]));
    assert!(pointer_sentinel_mix(&mut tape, g, v, &[0, 0], 1, Mixture::Normalized).is_err());
}

/// Log-probabilities that depend on the whole prefix.
struct Table {
    vocab: usize,
    seed: u64,
}

impl Table {
    fn logp(&self, prefix: &[usize]) -> Vec<f64> {
        let mut h = self.seed;
        for &t in prefix {
            h = h.wrapping_mul(6364136223846793005).wrapping_add(t as u64 + 1);
        }
        let mut r = rng(h);
        softmax(&(0..self.vocab).map(|_| r.gen_range(-3.0..3.0)).collect::<Vec<_>>()).into_iter().map(f64::ln).collect()
    }
}

impl StepDecoder for Table {
    type State = Vec<usize>;

    fn start(&mut self) -> Result<Vec<usize>, ModelError> {
        Ok(Vec::new())
    }

    fn step(&mut self, state: &Vec<usize>, prev: Option<usize>) -> Result<(Vec<usize>, Vec<f64>), ModelError> {
        let mut s = state.clone();
        s.extend(prev);
        let lp = self.logp(&s);
        Ok((s, lp))
    }

    fn eos(&self) -> usize {
        0
    }
}

#[test]
fn beam_of_one_is_greedy() {
    for seed in 0..20 {
        let mut t = Table { vocab: 4, seed };
        let got = beam_search(&mut t, 1, 6).unwrap();
        let mut prefix = Vec::new();
        let mut total = 0.0;
        for _ in 0..6 {
            let lp = t.logp(&prefix);
            let best = (0..4).max_by(|&a, &b| lp[a].total_cmp(&lp[b]).then(b.cmp(&a))).unwrap();
            prefix.push(best);
            total += lp[best];
            if best == 0 {
                break;
            }
        }
        assert_eq!(got.len(), 1);
        assert_eq!(got[0].tokens, prefix, "seed {seed}");
        assert!((got[0].log_prob - total).abs() < 1e-12);
    }
}

#[test]
fn wide_beam_equals_exhaustive_enumeration() {
    for seed in 0..10 {
        let mut t = Table { vocab: 3, seed };
        let got = beam_search(&mut t, 16, 2).unwrap();
        let mut all: Vec<(Vec<usize>, f64)> = vec![(vec![0], t.logp(&[])[0])];
        for a in 1..3 {
            for b in 0..3 {
                all.push((vec![a, b], t.logp(&[])[a] + t.logp(&[a])[b]));
            }
        }
        all.sort_by(|x, y| y.1.total_cmp(&x.1).then(x.0.cmp(&y.0)));
        assert_eq!(got.len(), all.len());
        for (h, (tokens, lp)) in got.iter().zip(&all) {
            assert_eq!(&h.tokens, tokens);
            assert!((h.log_prob - lp).abs() < 1e-12);
            assert_eq!(h.finished, tokens.last() == Some(&0));
        }
    }
}

#[test]
fn beam_results_are_sorted_and_distinct() {
    let mut t = Table { vocab: 5, seed: 3 };
    let got = beam_search(&mut t, 5, 9).unwrap();
    assert_eq!(got.len(), 5);
    assert!(got.windows(2).all(|w| w[0].log_prob >= w[1].log_prob && w[0].tokens != w[1].tokens));
    assert!(beam_search(&mut t, 0, 3).is_err());
}

#[test]
fn levenshtein_examples() {
    assert_eq!(levenshtein("foo", "food"), 1);
    assert_eq!(levenshtein("", "abc"), 3);
    assert_eq!(levenshtein("kitten", "sitting"), 3);
    assert_eq!(levenshtein("same", "same"), 0);
}

proptest! {
    #[test]
    fn levenshtein_is_a_metric(a in "[a-c]{0,6}", b in "[a-c]{0,6}", c in "[a-c]{0,6}") {
        prop_assert_eq!(levenshtein(&a, &b), levenshtein(&b, &a));
        prop_assert!(levenshtein(&a, &c) <= levenshtein(&a, &b) + levenshtein(&b, &c));
        prop_assert!(levenshtein(&a, &b) >= a.len().abs_diff(b.len()));
    }
}

fn words(ws: &[&str]) -> Vec<String> {
    ws.iter().map(|s| s.to_string()).collect()
}

#[test]
fn naming_outcome_scores_positions_and_edits() {
    let target = words(&["expected", "length"]);
    let ranked = vec![
        DecodedName { words: words(&["expected", "size"]), finished: true },
        DecodedName { words: words(&["expected", "length"]), finished: true },
    ];
    let o = naming_outcome(&ranked, &target);
    assert!(!o.exact && o.top5);
    assert_eq!(o.subword, 0.5);
    assert_eq!(o.edit_distance, levenshtein("expectedsize", "expectedlength") as f64);
    assert_eq!(o.normalized_edit_distance, o.edit_distance / 14.0);
    let unfinished = vec![DecodedName { words: target.clone(), finished: false }];
    assert!(!naming_outcome(&unfinished, &target).exact);
}

#[test]
fn reports_average_and_reject_empty_input() {
    assert_eq!(MetricsReport::from_fitb(&[]), Err(ModelError::Empty("instance list")));
    assert_eq!(MetricsReport::from_naming(&[]), Err(ModelError::Empty("instance list")));
    let outcomes = [fitb_outcome(&[NodeId(1)], &[NodeId(1)]), fitb_outcome(&[NodeId(2)], &[NodeId(1)])];
    let r = MetricsReport::from_fitb(&outcomes).unwrap();
    assert_eq!((r.instances, r.accuracy, r.top5_accuracy), (2, 0.5, 0.5));
    assert_eq!(r.subword_accuracy, None);
}

fn var_graph(names: &[&str]) -> CodeGraph {
    let mut g = CodeGraph::new();
    let root = g.add_node(Node::syntax(Construct::named("Block")));
    for n in names {
        let mut node = Node::syntax(Construct::named("NameUse"));
        node.kind = NodeKind::Variable;
        node.name = Some((*n).into());
        node.type_name = Some("int".into());
        let id = g.add_node(node);
        g.add_edge(root, id, AST);
    }
    g
}

fn small_embed(name: NameEmbedding) -> EmbedConfig {
    let charcnn = CharCnnConfig { char_embed_dim: 3, layers: [(3, 3), (3, 4)], ..CharCnnConfig::default() };
    EmbedConfig { hidden: 4, type_dim: 2, name, charcnn }
}

struct DecoderCase {
    store: ParamStore,
    graph: CodeGraph,
    vocabs: Vocabs,
    embedder: Embedder,
    decoder: Decoder,
}

fn decoder_case(seed: u64, output: OutputMode, cache: Option<CacheMode>) -> DecoderCase {
    let mut graph = var_graph(&["rowCount", "maxRows", "widgetColor"]);
    let mut counter = VocabCounter::default();
    counter.add_words(["row", "count", "max"]);
    let vocabs = counter.build(4, 10);
    if let Some(mode) = cache {
        build_cache(&mut graph, mode);
    }
    let mut r = rng(seed);
    let mut store = ParamStore::new();
    let name = if output == OutputMode::Vocab { NameEmbedding::ClosedVocab } else { NameEmbedding::CharCnn };
    let embedder = Embedder::new(small_embed(name), &vocabs, &mut store, &mut r).unwrap();
    let decoder = Decoder::new(4, vocabs.words.len(), output, &mut store, &mut r).unwrap();
    store.uniform("states", graph.len(), 4, 1.0, &mut r).unwrap();
    jitter(&mut store, &mut r);
    DecoderCase { store, graph, vocabs, embedder, decoder }
}

/// Moves zero-initialised parameters off ReLU kinks before a gradient check.
fn jitter(store: &mut ParamStore, r: &mut ChaCha8Rng) {
    let ids: Vec<_> = store.iter().map(|(id, _)| id).collect();
    for id in ids {
        for v in store.get_mut(id).value.data_mut() {
            *v += r.gen_range(-0.1..0.1);
        }
    }
}

fn decoder_loss(case: &DecoderCase, tape: &mut Tape, target: &[String]) -> Result<gsc_core::tensor::Var, ModelError> {
    let ht = tape.param(case.store.id("states").unwrap());
    let ctx = case.decoder.context(tape, &case.graph, ht, &[NodeId(1)], &case.vocabs)?;
    case.decoder.loss(tape, &case.embedder, &ctx, target, &case.vocabs)
}

#[test]
fn decoder_gradients_match_finite_differences() {
    let target = words(&["widget", "count", "zebra"]);
    let modes = [
        (OutputMode::Vocab, None),
        (OutputMode::Pointer(Mixture::Normalized), Some(CacheMode::Full)),
        (OutputMode::Pointer(Mixture::Interpolated), Some(CacheMode::Full)),
        (OutputMode::Pointer(Mixture::Normalized), Some(CacheMode::NoEdges)),
    ];
    for (output, cache) in modes {
        for seed in 0..20 {
            let case = decoder_case(seed, output, cache);
            let (err, at) = max_relative_error(&case.store, &|tape| decoder_loss(&case, tape, &target));
            assert!(err < REL_TOL, "{output:?} seed {seed}: {err} at {at}");
        }
    }
}

#[test]
fn decoder_step_distributions_sum_to_one() {
    for (output, cache) in [
        (OutputMode::Vocab, None),
        (OutputMode::Pointer(Mixture::Normalized), Some(CacheMode::Full)),
        (OutputMode::Pointer(Mixture::Normalized), None),
    ] {
        let case = decoder_case(5, output, cache);
        let mut tape = Tape::new(&case.store);
        let ht = tape.param(case.store.id("states").unwrap());
        let ctx = case.decoder.context(&mut tape, &case.graph, ht, &[NodeId(1), NodeId(2)], &case.vocabs).unwrap();
        let mut memo = Default::default();
        let mut h = ctx.init;
        let mut prev = None;
        for t in 0..9 {
            let x = case.decoder.input(&mut tape, &case.embedder, &ctx, &case.vocabs, &mut memo, prev).unwrap();
            let (next, probs) = case.decoder.step(&mut tape, &ctx, h, x).unwrap();
            let total: f64 = tape.value(probs).data().iter().sum();
            assert!((total - 1.0).abs() < 1e-9, "{output:?} step {t}: {total}");
            assert_eq!(tape.value(probs).cols(), ctx.width());
            h = next;
            prev = Some(t % ctx.width());
        }
    }
}

#[test]
fn pointer_context_extends_vocabulary_with_cache_words() {
    let case = decoder_case(0, OutputMode::Pointer(Mixture::Normalized), Some(CacheMode::Full));
    let mut tape = Tape::new(&case.store);
    let ht = tape.param(case.store.id("states").unwrap());
    let ctx = case.decoder.context(&mut tape, &case.graph, ht, &[NodeId(1)], &case.vocabs).unwrap();
    let extra: BTreeSet<&str> = ctx.extra_words.iter().map(String::as_str).collect();
    assert_eq!(extra, BTreeSet::from(["color", "rows", "widget"]));
    assert_eq!(ctx.index_of("widget", &case.vocabs), ctx.vocab_size + ctx.extra_words.iter().position(|w| w == "widget").unwrap());
    assert_eq!(ctx.index_of("zebra", &case.vocabs), 0);
    let idx = Decoder::target_indices(&ctx, &words(&["row", "zebra"]), &case.vocabs);
    assert_eq!(idx, vec![case.vocabs.words.get("row").unwrap(), 0, 1]);
}

#[test]
fn empty_name_me_set_is_rejected() {
    let case = decoder_case(0, OutputMode::Vocab, None);
    let mut tape = Tape::new(&case.store);
    let ht = tape.param(case.store.id("states").unwrap());
    assert_eq!(
        case.decoder.context(&mut tape, &case.graph, ht, &[], &case.vocabs).err(),
        Some(ModelError::Empty("<NAME-ME> node set"))
    );
}
