//! Source-order edges: `LAST_SCOPE_USE`, `LAST_FIELD_LEX` and `FIELD`.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::vec::Vec;

use super::dataflow::VarKey;
use super::push_sorted;
use crate::graph::{CodeGraph, Entity, NodeId, NodeKind, FIELD, LAST_FIELD_LEX, LAST_SCOPE_USE};

fn scope_key(g: &CodeGraph, id: NodeId) -> Option<VarKey> {
    let n = g.node(id);
    if n.kind != NodeKind::Variable {
        return None;
    }
    match n.decl {
        Some(d) => Some(VarKey::Decl(d)),
        None => n.name.clone().map(VarKey::Name),
    }
}

/// Node ids are assigned in pre-order, so ascending id order is source order
/// for identifier leaves.
pub fn add_lexical_edges(g: &mut CodeGraph) {
    let children = g.children();
    let mut scope_edges = BTreeSet::new();
    let mut field_lex = BTreeSet::new();
    let mut field = BTreeSet::new();

    // LAST_SCOPE_USE: previous occurrence of the same entity within one member
    for id in g.node_ids() {
        if !matches!(g.node(id).construct.label(), "FieldDecl" | "MethodDecl" | "ConstructorDecl") {
            continue;
        }
        let mut members = Vec::new();
        let mut stack = alloc::vec![id];
        while let Some(n) = stack.pop() {
            members.push(n);
            stack.extend(children[n.index()].iter().rev().copied());
        }
        let mut last: BTreeMap<VarKey, NodeId> = BTreeMap::new();
        for n in members {
            if let Some(k) = scope_key(g, n) {
                if let Some(prev) = last.insert(k, n) {
                    scope_edges.insert((n, prev));
                }
            }
        }
    }

    // LAST_FIELD_LEX and FIELD: field occurrences across the whole unit
    let mut last_use: BTreeMap<NodeId, NodeId> = BTreeMap::new();
    for id in g.node_ids() {
        let n = g.node(id);
        if n.kind != NodeKind::Variable || n.entity != Some(Entity::Field) {
            continue;
        }
        let Some(decl) = n.decl else { continue };
        if decl == id {
            continue;
        }
        field.insert((id, decl));
        let prev = last_use.insert(decl, id).unwrap_or(decl);
        field_lex.insert((id, prev));
    }

    push_sorted(g, scope_edges, LAST_SCOPE_USE);
    push_sorted(g, field_lex, LAST_FIELD_LEX);
    push_sorted(g, field, FIELD);
}
