//! Semantic edges on top of the syntax graph.
//!
//! Edge direction conventions: `COMPUTED_FROM` points from an assignment
//! target to each variable read on the right-hand side; `LAST_READ` and
//! `LAST_WRITE` point from an access to the earlier accesses it may follow;
//! `RETURNS_TO` points from a returned expression to the method's return type;
//! `LAST_SCOPE_USE` and `LAST_FIELD_LEX` point backwards in source order;
//! `FIELD` points from a field occurrence to the field declaration.
//! [`add_reverse_edges`] adds the opposite direction for every edge.

use alloc::collections::BTreeSet;
use alloc::vec::Vec;

use crate::graph::{CodeGraph, Edge, EdgeType, Entity, GraphError, NodeId, NodeKind};

pub mod dataflow;
mod lexical;

pub use dataflow::{build_cfgs, compute_last_accesses, Access, AccessKind, Cfg, EventExtractor, VarKey};
pub use lexical::add_lexical_edges;

/// Adds every forward semantic edge type to a freshly parsed graph.
pub fn augment(g: &mut CodeGraph) {
    add_computed_from(g);
    compute_last_accesses(g);
    add_returns_to(g);
    add_lexical_edges(g);
}

/// Whether a node is a read of a value (local, parameter, field, or an
/// unresolved plain name) rather than a method or class reference.
pub(crate) fn is_value_occurrence(g: &CodeGraph, id: NodeId) -> bool {
    let n = g.node(id);
    if n.kind != NodeKind::Variable {
        return false;
    }
    match n.construct.label() {
        "NameUse" | "MemberName" => !matches!(n.entity, Some(Entity::Class | Entity::Method)),
        _ => false,
    }
}

fn subtree(children: &[Vec<NodeId>], root: NodeId, out: &mut Vec<NodeId>) {
    let mut stack = alloc::vec![root];
    while let Some(id) = stack.pop() {
        out.push(id);
        stack.extend(children[id.index()].iter().rev().copied());
    }
}

/// Target occurrence written by an assignment left-hand side.
pub(crate) fn assign_target(g: &CodeGraph, children: &[Vec<NodeId>], lhs: NodeId) -> Option<NodeId> {
    match g.node(lhs).construct.label() {
        "NameUse" => Some(lhs),
        "FieldAccess" => children[lhs.index()].last().copied(),
        _ => None,
    }
}

pub(crate) fn push_sorted(g: &mut CodeGraph, edges: BTreeSet<(NodeId, NodeId)>, ty: EdgeType) {
    for (src, dst) in edges {
        g.add_edge(src, dst, ty);
    }
}

/// Edges from each assignment or initialized declaration target to every
/// value occurrence in the assigned expression, one per occurrence.
pub fn add_computed_from(g: &mut CodeGraph) {
    let children = g.children();
    let mut edges = BTreeSet::new();
    for id in g.node_ids() {
        let kids = &children[id.index()];
        let (target, rhs) = match g.node(id).construct.label() {
            "Assign" if kids.len() == 3 => (assign_target(g, &children, kids[0]), kids[2]),
            "VarDecl" | "FieldDecl" => {
                let name = kids.iter().copied().find(|&c| {
                    matches!(g.node(c).construct.label(), "LocalName" | "FieldName")
                });
                let eq = kids.iter().position(|&c| g.node(c).construct.label() == "Token:=");
                match (name, eq) {
                    (Some(n), Some(p)) if p + 1 < kids.len() => (Some(n), kids[p + 1]),
                    _ => continue,
                }
            }
            _ => continue,
        };
        let Some(target) = target else { continue };
        if g.node(target).kind != NodeKind::Variable {
            continue;
        }
        let mut nodes = Vec::new();
        subtree(&children, rhs, &mut nodes);
        for v in nodes {
            if is_value_occurrence(g, v) {
                edges.insert((target, v));
            }
        }
    }
    push_sorted(g, edges, crate::graph::COMPUTED_FROM);
}

/// Edges from each returned expression to the enclosing method's return type.
pub fn add_returns_to(g: &mut CodeGraph) {
    let children = g.children();
    let mut edges = BTreeSet::new();
    for id in g.node_ids() {
        if g.node(id).construct.label() != "MethodDecl" {
            continue;
        }
        let kids = &children[id.index()];
        let Some(ret_ty) = kids.iter().copied().find(|&c| g.node(c).construct.label() == "TypeRef") else {
            continue;
        };
        let mut nodes = Vec::new();
        subtree(&children, id, &mut nodes);
        for n in nodes {
            if g.node(n).construct.label() != "Return" {
                continue;
            }
            let rk = &children[n.index()];
            // [return, expr, ;]
            if rk.len() == 3 {
                edges.insert((rk[1], ret_ty));
            }
        }
    }
    push_sorted(g, edges, crate::graph::RETURNS_TO);
}

/// Adds `(v, u, reverse_t)` for every edge `(u, v, t)`. Fails if the graph
/// already carries reverse edges.
pub fn add_reverse_edges(g: &mut CodeGraph) -> Result<(), GraphError> {
    if g.has_reverse_edges() || g.edges.iter().any(|e| e.ty.reversed) {
        return Err(GraphError::AlreadyReversed);
    }
    let rev: Vec<Edge> =
        g.edges.iter().map(|e| Edge { src: e.dst, dst: e.src, ty: e.ty.reverse() }).collect();
    g.edges.extend(rev);
    g.mark_reversed();
    Ok(())
}
