use alloc::vec;
use alloc::vec::Vec;

use crate::error::ModelError;
use crate::graph::{CodeGraph, NodeId};

/// Nodes in undirected breadth-first order from `centers`, ordered by
/// `(distance, id)`. Unreachable nodes are omitted.
pub fn bfs_order(g: &CodeGraph, centers: &[NodeId]) -> Result<Vec<(NodeId, usize)>, ModelError> {
    if centers.is_empty() {
        return Err(ModelError::Empty("center set"));
    }
    if let Some(c) = centers.iter().find(|c| c.index() >= g.len()) {
        return Err(ModelError::MissingNode(c.index()));
    }
    let adj = g.undirected_adjacency();
    let mut seen = vec![false; g.len()];
    let mut level: Vec<NodeId> = centers.to_vec();
    level.sort_unstable();
    level.dedup();
    for c in &level {
        seen[c.index()] = true;
    }
    let mut out = Vec::new();
    let mut dist = 0;
    while !level.is_empty() {
        out.extend(level.iter().map(|&v| (v, dist)));
        let mut next = Vec::new();
        for v in &level {
            for &w in &adj[v.index()] {
                if !seen[w.index()] {
                    seen[w.index()] = true;
                    next.push(w);
                }
            }
        }
        next.sort_unstable();
        level = next;
        dist += 1;
    }
    Ok(out)
}

/// Keeps the first `max_nodes` nodes of [`bfs_order`] (always every center)
/// and returns the induced subgraph with the old→new id map. Graphs within
/// budget are returned unchanged.
pub fn truncate_graph(
    g: &CodeGraph,
    centers: &[NodeId],
    max_nodes: usize,
) -> Result<(CodeGraph, Vec<Option<NodeId>>), ModelError> {
    let order = bfs_order(g, centers)?;
    if g.len() <= max_nodes {
        return Ok((g.clone(), g.node_ids().map(Some).collect()));
    }
    let keep: Vec<NodeId> = order
        .iter()
        .enumerate()
        .filter(|&(i, &(_, d))| d == 0 || i < max_nodes)
        .map(|(_, &(v, _))| v)
        .collect();
    Ok(g.induced_subgraph(&keep))
}
