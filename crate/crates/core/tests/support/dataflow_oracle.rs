//! Brute-force last-access oracle: enumerate execution paths of each method
//! with every loop body taken 0, 1 or 2 times, replay the access events along
//! each path and collect the edges seen on any path.

#![allow(dead_code)]

use std::collections::{BTreeMap, BTreeSet};

use gsc_core::augment::{Access, AccessKind, EventExtractor, VarKey};
use gsc_core::graph::{CodeGraph, NodeId};

type Path = (Vec<Access>, bool);
pub type EdgeSet = BTreeSet<(NodeId, NodeId)>;

const MAX_PATHS: usize = 200_000;

fn seq(prefixes: Vec<Path>, next: impl Fn() -> Vec<Path>) -> Vec<Path> {
    let suffixes = next();
    let mut out = Vec::new();
    for (p, returned) in prefixes {
        if returned {
            out.push((p, true));
            continue;
        }
        for (s, r) in &suffixes {
            let mut v = p.clone();
            v.extend(s.iter().cloned());
            out.push((v, *r));
        }
    }
    assert!(out.len() <= MAX_PATHS, "fixture too large for path enumeration");
    out
}

fn expr_paths(ex: &EventExtractor<'_>, e: NodeId) -> Vec<Path> {
    let mut ev = Vec::new();
    ex.expr_events(e, &mut ev);
    vec![(ev, false)]
}

fn loop_paths(
    ex: &EventExtractor<'_>,
    cond: Option<NodeId>,
    body: NodeId,
    update: Option<NodeId>,
) -> Vec<Path> {
    let cond_p = || cond.map(|c| expr_paths(ex, c)).unwrap_or_else(|| vec![(Vec::new(), false)]);
    let mut exits = Vec::new();
    // before iteration k the path has evaluated the condition k times
    let mut frontier = cond_p();
    for k in 0..=2 {
        for (p, r) in &frontier {
            if *r || cond.is_some() {
                exits.push((p.clone(), *r));
            }
        }
        if k == 2 {
            break;
        }
        let live: Vec<Path> = frontier.into_iter().filter(|(_, r)| !r).collect();
        let mut next = seq(live, || stmt_paths(ex, body));
        // returned paths already recorded as exits inside the body
        let (done, cont): (Vec<Path>, Vec<Path>) = next.drain(..).partition(|(_, r)| *r);
        exits.extend(done);
        let cont = match update {
            Some(u) => seq(cont, || expr_paths(ex, u)),
            None => cont,
        };
        frontier = seq(cont, cond_p);
    }
    // dedup identical event sequences
    let mut seen = BTreeSet::new();
    exits.retain(|(p, r)| seen.insert((format!("{p:?}"), *r)));
    exits
}

fn stmt_paths(ex: &EventExtractor<'_>, s: NodeId) -> Vec<Path> {
    let kids = ex.children(s).to_vec();
    match ex.label(s) {
        "Block" => kids.iter().fold(vec![(Vec::new(), false)], |acc, &c| seq(acc, || stmt_paths(ex, c))),
        "Return" => {
            let mut ev = Vec::new();
            ex.simple_statement_events(s, &mut ev);
            vec![(ev, true)]
        }
        "If" => {
            let cond = expr_paths(ex, kids[2]);
            let mut branches = stmt_paths(ex, kids[4]);
            if kids.len() == 7 {
                branches.extend(stmt_paths(ex, kids[6]));
            } else {
                branches.push((Vec::new(), false));
            }
            seq(cond, || branches.clone())
        }
        "While" => loop_paths(ex, Some(kids[2]), kids[4], None),
        "For" => {
            let mut init = Vec::new();
            ex.simple_statement_events(kids[2], &mut init);
            let mut i = 3;
            let cond = if ex.label(kids[i]) == "Token:;" { None } else { Some(kids[i]) };
            i += if cond.is_some() { 2 } else { 1 };
            let update = if ex.label(kids[i]) == "Token:)" { None } else { Some(kids[i]) };
            let body = *kids.last().unwrap();
            seq(vec![(init, false)], || loop_paths(ex, cond, body, update))
        }
        _ => {
            let mut ev = Vec::new();
            ex.simple_statement_events(s, &mut ev);
            vec![(ev, false)]
        }
    }
}

fn replay(path: &[Access], reads: &mut EdgeSet, writes: &mut EdgeSet) {
    let mut last_read: BTreeMap<VarKey, NodeId> = BTreeMap::new();
    let mut last_write: BTreeMap<VarKey, NodeId> = BTreeMap::new();
    for a in path {
        match a.kind {
            AccessKind::Reset => {
                last_read.remove(&a.var);
                last_write.remove(&a.var);
            }
            AccessKind::Read | AccessKind::Write => {
                if let Some(&r) = last_read.get(&a.var) {
                    if r != a.node {
                        reads.insert((a.node, r));
                    }
                }
                if let Some(&w) = last_write.get(&a.var) {
                    if w != a.node {
                        writes.insert((a.node, w));
                    }
                }
                let m = if a.kind == AccessKind::Read { &mut last_read } else { &mut last_write };
                m.insert(a.var.clone(), a.node);
            }
        }
    }
}

/// `(LAST_READ, LAST_WRITE)` edges over all enumerated paths of all methods.
pub fn oracle_edges(g: &CodeGraph) -> (EdgeSet, EdgeSet) {
    let ex = EventExtractor::new(g);
    let mut reads = EdgeSet::new();
    let mut writes = EdgeSet::new();
    for id in g.node_ids() {
        if !matches!(ex.label(id), "MethodDecl" | "ConstructorDecl") {
            continue;
        }
        let body = *ex.children(id).iter().find(|&&c| ex.label(c) == "Block").unwrap();
        let entry = ex.entry_events(id);
        for (p, _) in seq(vec![(entry, false)], || stmt_paths(&ex, body)) {
            replay(&p, &mut reads, &mut writes);
        }
    }
    (reads, writes)
}
