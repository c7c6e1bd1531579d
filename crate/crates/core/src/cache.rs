//! Graph-structured cache: one node per distinct word of the identifier
//! names in a graph, linked to the variable nodes that use the word.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::string::String;
use alloc::vec::Vec;
use core::str::FromStr;

use crate::graph::{CodeGraph, Node, NodeId, NodeKind, WORD_USE};

/// Splits an identifier into lowercase words at underscores and other
/// non-alphanumeric characters, lower-to-upper transitions, digit-to-upper
/// transitions and acronym ends (`XMLParser` → `xml`, `parser`). Digits stay
/// with the preceding segment.
pub fn split_name(name: &str) -> Vec<String> {
    let chars: Vec<char> = name.chars().collect();
    let mut words = Vec::new();
    let mut cur = String::new();
    for (i, &c) in chars.iter().enumerate() {
        if !c.is_alphanumeric() {
            if !cur.is_empty() {
                words.push(core::mem::take(&mut cur));
            }
            continue;
        }
        if !cur.is_empty() && c.is_uppercase() {
            let prev = chars[i - 1];
            let next_lower = chars.get(i + 1).is_some_and(|n| n.is_lowercase());
            if prev.is_lowercase() || prev.is_numeric() || (prev.is_uppercase() && next_lower) {
                words.push(core::mem::take(&mut cur));
            }
        }
        cur.extend(c.to_lowercase());
    }
    if !cur.is_empty() {
        words.push(cur);
    }
    words
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum CacheMode {
    /// Cache nodes with `WORD_USE` edges.
    #[default]
    Full,
    /// Cache nodes only, no edges.
    NoEdges,
}

impl CacheMode {
    pub fn as_str(self) -> &'static str {
        match self {
            CacheMode::Full => "full_gsc",
            CacheMode::NoEdges => "pointer_sentinel_no_edges",
        }
    }
}

impl FromStr for CacheMode {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "full_gsc" => Ok(CacheMode::Full),
            "pointer_sentinel_no_edges" => Ok(CacheMode::NoEdges),
            _ => Err(alloc::format!("unknown cache mode `{s}`")),
        }
    }
}

/// Appends cache nodes in lexicographic word order and, in full mode, a
/// `WORD_USE` edge from each cache node to every variable node whose name
/// contains the word. Returns the ids of the new nodes.
pub fn build_cache(g: &mut CodeGraph, mode: CacheMode) -> Vec<NodeId> {
    let mut users: BTreeMap<String, BTreeSet<NodeId>> = BTreeMap::new();
    for id in g.node_ids() {
        let n = g.node(id);
        if n.kind != NodeKind::Variable {
            continue;
        }
        let Some(name) = &n.name else { continue };
        for w in split_name(name) {
            users.entry(w).or_default().insert(id);
        }
    }
    let mut ids = Vec::with_capacity(users.len());
    for (word, vars) in users {
        let c = g.add_node(Node::cache(&word));
        ids.push(c);
        if mode == CacheMode::Full {
            for v in vars {
                g.add_edge(c, v, WORD_USE);
            }
        }
    }
    ids
}

/// Words an instance's cache would hold, without building it.
pub fn cache_words(g: &CodeGraph) -> BTreeSet<String> {
    g.nodes
        .iter()
        .filter(|n| n.kind == NodeKind::Variable)
        .filter_map(|n| n.name.as_deref())
        .flat_map(split_name)
        .collect()
}
