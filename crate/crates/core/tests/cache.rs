use std::collections::{BTreeMap, BTreeSet};

use gsc_core::cache::{build_cache, split_name, CacheMode};
use gsc_core::graph::{CodeGraph, Node, NodeId, NodeKind, WORD_USE, CACHE_NODE_TYPE};
use gsc_core::graph::Construct;
use proptest::prelude::*;

fn var_graph(names: &[&str]) -> CodeGraph {
    let mut g = CodeGraph::new();
    for n in names {
        let mut node = Node::syntax(Construct::named("NameUse"));
        node.kind = NodeKind::Variable;
        node.name = Some((*n).into());
        g.add_node(node);
    }
    g
}

fn word_of(g: &CodeGraph, id: NodeId) -> String {
    g.node(id).name.clone().unwrap()
}

#[test]
fn guava_example() {
    let mut g = var_graph(&["getGuavaDictionary", "guava_dict"]);
    let ids = build_cache(&mut g, CacheMode::Full);
    let words: BTreeSet<String> = ids.iter().map(|&i| word_of(&g, i)).collect();
    let want: BTreeSet<String> = ["get", "guava", "dictionary", "dict"].iter().map(|s| s.to_string()).collect();
    assert_eq!(words, want);
    let guava = ids.iter().copied().find(|&i| word_of(&g, i) == "guava").unwrap();
    let targets: Vec<NodeId> = g.edges_of(WORD_USE).filter(|e| e.src == guava).map(|e| e.dst).collect();
    assert_eq!(targets, vec![NodeId(0), NodeId(1)]);
    for &i in &ids {
        assert_eq!(g.node(i).kind, NodeKind::Cache);
        assert_eq!(g.node(i).type_name.as_deref(), Some(CACHE_NODE_TYPE));
    }
}

#[test]
fn no_variables_no_cache() {
    let mut g = CodeGraph::new();
    g.add_node(Node::syntax(Construct::named("Block")));
    assert!(build_cache(&mut g, CacheMode::Full).is_empty());
}

#[test]
fn brute_force_set_example() {
    let mut g = var_graph(&["a", "ab", "a_b"]);
    let ids = build_cache(&mut g, CacheMode::Full);
    let words: Vec<String> = ids.iter().map(|&i| word_of(&g, i)).collect();
    assert_eq!(words, ["a", "ab", "b"]);
    let a_targets: Vec<NodeId> = g.edges_of(WORD_USE).filter(|e| e.src == ids[0]).map(|e| e.dst).collect();
    assert_eq!(a_targets, vec![NodeId(0), NodeId(2)]);
}

#[test]
fn sentinel_mode_adds_no_edges() {
    let mut g = var_graph(&["fooBar", "bar"]);
    let ids = build_cache(&mut g, CacheMode::NoEdges);
    assert_eq!(ids.len(), 2);
    assert!(g.edges.is_empty());
}

fn ident() -> impl Strategy<Value = String> {
    "[A-Za-z_][A-Za-z0-9_]{0,15}"
}

proptest! {
    #[test]
    fn split_reconstructs_alphanumerics(name in ident()) {
        let words = split_name(&name);
        let joined: String = words.concat();
        let want: String = name.chars().filter(|c| c.is_alphanumeric()).flat_map(|c| c.to_lowercase()).collect();
        prop_assert_eq!(joined, want.clone());
        prop_assert_eq!(words.is_empty(), want.is_empty());
        prop_assert!(words.iter().all(|w| !w.is_empty() && w.chars().all(|c| !c.is_uppercase())));
    }

    #[test]
    fn cache_matches_brute_force(names in prop::collection::vec(ident(), 0..8)) {
        let refs: Vec<&str> = names.iter().map(String::as_str).collect();
        let mut g = var_graph(&refs);
        let ids = build_cache(&mut g, CacheMode::Full);
        let mut want: BTreeMap<String, BTreeSet<NodeId>> = BTreeMap::new();
        for (i, n) in names.iter().enumerate() {
            for w in split_name(n) {
                want.entry(w).or_default().insert(NodeId(i as u32));
            }
        }
        let mut got: BTreeMap<String, BTreeSet<NodeId>> = BTreeMap::new();
        for &c in &ids {
            got.insert(word_of(&g, c), BTreeSet::new());
        }
        prop_assert_eq!(got.len(), ids.len());
        for e in g.edges_of(WORD_USE) {
            got.get_mut(&word_of(&g, e.src)).unwrap().insert(e.dst);
        }
        prop_assert_eq!(got, want);
    }

    #[test]
    fn cache_invariant_under_relabeling(names in prop::collection::vec(ident(), 1..8), rot in 0usize..8) {
        let refs: Vec<&str> = names.iter().map(String::as_str).collect();
        let k = rot % refs.len();
        let mut rotated = refs.clone();
        rotated.rotate_left(k);
        let summarize = |names: &[&str]| {
            let mut g = var_graph(names);
            build_cache(&mut g, CacheMode::Full);
            let mut pairs: Vec<(String, String)> = g
                .edges_of(WORD_USE)
                .map(|e| (word_of(&g, e.src), word_of(&g, e.dst)))
                .collect();
            pairs.sort();
            pairs
        };
        prop_assert_eq!(summarize(&refs), summarize(&rotated));
    }
}
