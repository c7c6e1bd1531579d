use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec::Vec;

use rand::Rng;

use super::{truncate_graph, FitbInstance, VarNamingInstance, MAX_NAME_WORDS, MAX_NODES};
use crate::augment::{add_reverse_edges, augment};
use crate::cache::{build_cache, cache_words, split_name, CacheMode};
use crate::error::ModelError;
use crate::graph::{CodeGraph, Entity, Node, NodeId, NodeKind, SpecialToken};

/// How an instance graph is assembled from a parsed file.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct GraphConfig {
    /// Add semantic edges (augmented AST) or keep syntax edges only.
    pub augment: bool,
    pub cache: Option<CacheMode>,
    pub max_nodes: usize,
}

impl Default for GraphConfig {
    fn default() -> Self {
        GraphConfig { augment: true, cache: Some(CacheMode::Full), max_nodes: MAX_NODES }
    }
}

/// Truncates around `centers`, attaches the cache and adds reversed edges.
/// The truncation budget shrinks until the graph including its cache fits
/// in `max_nodes`.
pub fn prepare_graph(
    g: &CodeGraph,
    centers: &[NodeId],
    cfg: &GraphConfig,
) -> Result<(CodeGraph, Vec<Option<NodeId>>), ModelError> {
    let mut budget = cfg.max_nodes;
    loop {
        let (mut t, map) = truncate_graph(g, centers, budget)?;
        let extra = if cfg.cache.is_some() { cache_words(&t).len() } else { 0 };
        if t.len() + extra <= cfg.max_nodes || budget <= centers.len() {
            if let Some(mode) = cfg.cache {
                build_cache(&mut t, mode);
            }
            add_reverse_edges(&mut t)?;
            return Ok((t, map));
        }
        budget = (budget - 1).min(cfg.max_nodes.saturating_sub(extra)).max(centers.len());
    }
}

fn special(node: &Node, token: SpecialToken) -> Node {
    Node { span: node.span, text: Some(token.text().into()), ..Node::special(token) }
}

/// Occurrences grouped by the declaration they resolve to, for declarations
/// whose entity satisfies `keep`.
fn occurrences(g: &CodeGraph, keep: impl Fn(Entity) -> bool) -> BTreeMap<NodeId, Vec<NodeId>> {
    let mut groups: BTreeMap<NodeId, Vec<NodeId>> = BTreeMap::new();
    for id in g.node_ids() {
        let n = g.node(id);
        if n.kind != NodeKind::Variable {
            continue;
        }
        if let (Some(d), Some(e)) = (n.decl, n.entity) {
            if keep(e) {
                groups.entry(d).or_default().push(id);
            }
        }
    }
    groups
}

/// One instance per local, parameter or field with at least two occurrences
/// (declaration included), blanking a uniformly chosen non-declaration use.
/// `g` must be a freshly parsed graph without semantic edges.
pub fn make_fitb_instances(g: &CodeGraph, cfg: &GraphConfig, rng: &mut impl Rng) -> Result<Vec<FitbInstance>, ModelError> {
    let mut out = Vec::new();
    for (decl, occ) in occurrences(g, Entity::is_value) {
        let uses: Vec<NodeId> = occ.iter().copied().filter(|&o| o != decl).collect();
        if occ.len() < 2 || uses.is_empty() {
            continue;
        }
        let blank = uses[rng.gen_range(0..uses.len())];
        if let Some(inst) = fitb_instance(g, &occ, blank, cfg)? {
            out.push(inst);
        }
    }
    Ok(out)
}

/// The fill-in-the-blank instance for one occurrence of a local, parameter
/// or field, or `None` if `at` is not such an occurrence or no other
/// occurrence survives truncation.
pub fn fitb_instance_at(g: &CodeGraph, at: NodeId, cfg: &GraphConfig) -> Result<Option<FitbInstance>, ModelError> {
    let node = g.node(at);
    let (Some(decl), Some(entity)) = (node.decl, node.entity) else {
        return Ok(None);
    };
    if node.kind != NodeKind::Variable || !entity.is_value() {
        return Ok(None);
    }
    let occ = occurrences(g, Entity::is_value).remove(&decl).unwrap_or_default();
    fitb_instance(g, &occ, at, cfg)
}

fn fitb_instance(g: &CodeGraph, occ: &[NodeId], blank: NodeId, cfg: &GraphConfig) -> Result<Option<FitbInstance>, ModelError> {
    let mut sub = g.clone();
    *sub.node_mut(blank) = special(g.node(blank), SpecialToken::FillInTheBlank);
    if cfg.augment {
        augment(&mut sub);
    }
    let (graph, map) = prepare_graph(&sub, &[blank], cfg)?;
    let correct: Vec<NodeId> = occ.iter().filter(|&&o| o != blank).filter_map(|o| map[o.index()]).collect();
    if correct.is_empty() {
        return Ok(None);
    }
    let blank = map[blank.index()].ok_or(ModelError::MissingNode(blank.index()))?;
    Ok(Some(FitbInstance { graph, blank, correct }))
}

/// One instance per declared name of any entity: every occurrence becomes a
/// `<NAME-ME>` node after semantic edges are computed, so the placeholders
/// keep the dataflow structure of the original name.
pub fn make_varnaming_instances(g: &CodeGraph, cfg: &GraphConfig) -> Result<Vec<VarNamingInstance>, ModelError> {
    let mut base = g.clone();
    if cfg.augment {
        augment(&mut base);
    }
    let mut out = Vec::new();
    for (decl, occ) in occurrences(g, |_| true) {
        if let Some(inst) = varnaming_instance(g, &base, decl, &occ, cfg)? {
            out.push(inst);
        }
    }
    Ok(out)
}

/// The naming instance for the name that the occurrence `at` resolves to,
/// or `None` if `at` is not a resolved variable occurrence.
pub fn varnaming_instance_at(g: &CodeGraph, at: NodeId, cfg: &GraphConfig) -> Result<Option<VarNamingInstance>, ModelError> {
    let node = g.node(at);
    let Some(decl) = node.decl.filter(|_| node.kind == NodeKind::Variable && node.entity.is_some()) else {
        return Ok(None);
    };
    let occ = occurrences(g, |_| true).remove(&decl).unwrap_or_default();
    let mut base = g.clone();
    if cfg.augment {
        augment(&mut base);
    }
    varnaming_instance(g, &base, decl, &occ, cfg)
}

fn varnaming_instance(
    g: &CodeGraph,
    base: &CodeGraph,
    decl: NodeId,
    occ: &[NodeId],
    cfg: &GraphConfig,
) -> Result<Option<VarNamingInstance>, ModelError> {
    let name: String = g.node(decl).name.clone().unwrap_or_default();
    let mut target = split_name(&name);
    target.truncate(MAX_NAME_WORDS);
    if target.is_empty() || !occ.contains(&decl) {
        return Ok(None);
    }
    let mut sub = base.clone();
    for &o in occ {
        *sub.node_mut(o) = special(g.node(o), SpecialToken::NameMe);
    }
    let (graph, map) = prepare_graph(&sub, occ, cfg)?;
    let name_me = occ.iter().filter_map(|o| map[o.index()]).collect();
    Ok(Some(VarNamingInstance { graph, name_me, target }))
}
