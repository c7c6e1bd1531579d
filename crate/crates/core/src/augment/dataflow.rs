//! Per-method control flow graphs and the last-read / last-write analysis.
//!
//! Each statement contributes a sequence of access events in evaluation
//! order: right-hand-side reads come before the left-hand-side write, a
//! compound assignment or increment reads and then writes the same node, and
//! a local declaration first forgets earlier accesses of that variable and
//! then writes it if initialized. Parameters are written at method entry.
//!
//! The analysis is a may-analysis: the state at a program point maps each
//! variable to the sets of occurrences that may have been its last read and
//! last write, joined by union and iterated to a fixed point over the CFG.
//! Short-circuit evaluation inside conditions is not modeled.

use alloc::collections::{BTreeMap, BTreeSet, VecDeque};
use alloc::string::String;
use alloc::vec::Vec;

use super::{assign_target, push_sorted};
use crate::graph::{CodeGraph, Entity, NodeId, NodeKind, LAST_READ, LAST_WRITE};

/// Identity of a tracked variable.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum VarKey {
    /// Resolved local, parameter or field, keyed by its declaration.
    Decl(NodeId),
    /// Unresolved plain name.
    Name(String),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum AccessKind {
    Read,
    Write,
    /// Start of a fresh variable lifetime at its declaration.
    Reset,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Access {
    pub node: NodeId,
    pub var: VarKey,
    pub kind: AccessKind,
}

/// Computes access events for statements and expressions of one graph.
pub struct EventExtractor<'g> {
    g: &'g CodeGraph,
    children: Vec<Vec<NodeId>>,
}

impl<'g> EventExtractor<'g> {
    pub fn new(g: &'g CodeGraph) -> Self {
        EventExtractor { g, children: g.children() }
    }

    pub fn children(&self, id: NodeId) -> &[NodeId] {
        &self.children[id.index()]
    }

    pub fn label(&self, id: NodeId) -> &'static str {
        self.g.node(id).construct.label()
    }

    /// Tracked variable named by an occurrence, if any.
    pub fn key(&self, id: NodeId) -> Option<VarKey> {
        let n = self.g.node(id);
        if n.kind != NodeKind::Variable {
            return None;
        }
        match n.construct.label() {
            "NameUse" | "MemberName" | "LocalName" | "ParamName" | "FieldName" => {}
            _ => return None,
        }
        match (n.entity, n.decl) {
            (Some(Entity::Local | Entity::Param | Entity::Field), Some(d)) => Some(VarKey::Decl(d)),
            (None, _) if n.construct.label() == "NameUse" => n.name.clone().map(VarKey::Name),
            _ => None,
        }
    }

    fn push(&self, out: &mut Vec<Access>, node: NodeId, kind: AccessKind) {
        if let Some(var) = self.key(node) {
            out.push(Access { node, var, kind });
        }
    }

    /// Writes of every parameter at method entry.
    pub fn entry_events(&self, method: NodeId) -> Vec<Access> {
        let mut out = Vec::new();
        for &c in self.children(method) {
            if self.label(c) == "Parameter" {
                for &p in self.children(c) {
                    if self.label(p) == "ParamName" {
                        self.push(&mut out, p, AccessKind::Write);
                    }
                }
            }
        }
        out
    }

    /// Events of a straight-line statement (`VarDecl`, `ExprStmt`,
    /// `EmptyStmt`, `Return`).
    pub fn simple_statement_events(&self, stmt: NodeId, out: &mut Vec<Access>) {
        let kids = self.children(stmt);
        match self.label(stmt) {
            "VarDecl" => {
                let name = kids.iter().copied().find(|&c| self.label(c) == "LocalName");
                let eq = kids.iter().position(|&c| self.label(c) == "Token:=");
                if let Some(p) = eq {
                    self.expr_events(kids[p + 1], out);
                }
                if let Some(n) = name {
                    self.push(out, n, AccessKind::Reset);
                    if eq.is_some() {
                        self.push(out, n, AccessKind::Write);
                    }
                }
            }
            _ => {
                for &c in kids {
                    self.expr_events(c, out);
                }
            }
        }
    }

    /// Events of an expression in evaluation order.
    pub fn expr_events(&self, id: NodeId, out: &mut Vec<Access>) {
        let kids = self.children(id);
        match self.label(id) {
            "NameUse" | "MemberName" => self.push(out, id, AccessKind::Read),
            "FieldAccess" => {
                self.expr_events(kids[0], out);
                self.push(out, kids[2], AccessKind::Read);
            }
            "Assign" => {
                let (lhs, op, rhs) = (kids[0], kids[1], kids[2]);
                if self.label(lhs) == "FieldAccess" {
                    self.expr_events(self.children(lhs)[0], out);
                }
                self.expr_events(rhs, out);
                if let Some(t) = assign_target(self.g, &self.children, lhs) {
                    if self.label(op) != "Token:=" {
                        self.push(out, t, AccessKind::Read);
                    }
                    self.push(out, t, AccessKind::Write);
                }
            }
            "UnaryOp" | "PostfixOp" => {
                let (op, operand) =
                    if self.label(id) == "UnaryOp" { (kids[0], kids[1]) } else { (kids[1], kids[0]) };
                let step = matches!(self.label(op), "Token:++" | "Token:--");
                match assign_target(self.g, &self.children, operand) {
                    Some(t) if step => {
                        if self.label(operand) == "FieldAccess" {
                            self.expr_events(self.children(operand)[0], out);
                        }
                        self.push(out, t, AccessKind::Read);
                        self.push(out, t, AccessKind::Write);
                    }
                    _ => self.expr_events(operand, out),
                }
            }
            _ => {
                for &c in kids {
                    self.expr_events(c, out);
                }
            }
        }
    }
}

/// Control flow graph of one method body. Block 0 is the entry, block 1 the
/// exit.
#[derive(Clone, Debug, Default)]
pub struct Cfg {
    pub method: NodeId,
    /// Statement nodes whose events live in each block.
    pub blocks: Vec<Vec<NodeId>>,
    pub events: Vec<Vec<Access>>,
    pub successors: Vec<BTreeSet<usize>>,
}

impl Cfg {
    pub const ENTRY: usize = 0;
    pub const EXIT: usize = 1;

    fn new_block(&mut self) -> usize {
        self.blocks.push(Vec::new());
        self.events.push(Vec::new());
        self.successors.push(BTreeSet::new());
        self.blocks.len() - 1
    }

    fn link(&mut self, a: usize, b: usize) {
        self.successors[a].insert(b);
    }

    pub fn predecessors(&self) -> Vec<Vec<usize>> {
        let mut preds = alloc::vec![Vec::new(); self.blocks.len()];
        for (a, succ) in self.successors.iter().enumerate() {
            for &b in succ {
                preds[b].push(a);
            }
        }
        preds
    }

    /// Blocks reachable from the entry.
    pub fn reachable(&self) -> Vec<bool> {
        let mut seen = alloc::vec![false; self.blocks.len()];
        let mut stack = alloc::vec![Self::ENTRY];
        seen[Self::ENTRY] = true;
        while let Some(b) = stack.pop() {
            for &s in &self.successors[b] {
                if !seen[s] {
                    seen[s] = true;
                    stack.push(s);
                }
            }
        }
        seen
    }
}

struct CfgBuilder<'e, 'g> {
    ex: &'e EventExtractor<'g>,
    cfg: Cfg,
}

impl CfgBuilder<'_, '_> {
    fn simple(&mut self, b: usize, stmt: NodeId) {
        self.cfg.blocks[b].push(stmt);
        let mut ev = Vec::new();
        self.ex.simple_statement_events(stmt, &mut ev);
        self.cfg.events[b].extend(ev);
    }

    fn expr(&mut self, b: usize, expr: NodeId) {
        let mut ev = Vec::new();
        self.ex.expr_events(expr, &mut ev);
        self.cfg.events[b].extend(ev);
    }

    /// Appends `stmt` starting in block `b`; returns the block where control
    /// continues afterwards.
    fn stmt(&mut self, b: usize, stmt: NodeId) -> usize {
        let ex = self.ex;
        let kids = ex.children(stmt).to_vec();
        match ex.label(stmt) {
            "Block" => kids.iter().fold(b, |cur, &c| self.stmt(cur, c)),
            "Return" => {
                self.simple(b, stmt);
                self.cfg.link(b, Cfg::EXIT);
                // anything after a return is unreachable
                self.cfg.new_block()
            }
            "If" => {
                // [if, (, cond, ), then, (else, other)?]
                self.cfg.blocks[b].push(stmt);
                self.expr(b, kids[2]);
                let then_b = self.cfg.new_block();
                self.cfg.link(b, then_b);
                let then_end = self.stmt(then_b, kids[4]);
                let join = self.cfg.new_block();
                self.cfg.link(then_end, join);
                if kids.len() == 7 {
                    let else_b = self.cfg.new_block();
                    self.cfg.link(b, else_b);
                    let else_end = self.stmt(else_b, kids[6]);
                    self.cfg.link(else_end, join);
                } else {
                    self.cfg.link(b, join);
                }
                join
            }
            "While" => {
                // [while, (, cond, ), body]
                let cond = self.cfg.new_block();
                self.cfg.link(b, cond);
                self.cfg.blocks[cond].push(stmt);
                self.expr(cond, kids[2]);
                let body = self.cfg.new_block();
                self.cfg.link(cond, body);
                let body_end = self.stmt(body, kids[4]);
                self.cfg.link(body_end, cond);
                let after = self.cfg.new_block();
                self.cfg.link(cond, after);
                after
            }
            "For" => {
                // [for, (, init, cond?, ;, update?, ), body]
                self.simple(b, kids[2]);
                let mut i = 3;
                let cond_expr = if ex.label(kids[i]) == "Token:;" { None } else { Some(kids[i]) };
                i += if cond_expr.is_some() { 2 } else { 1 };
                let update = if ex.label(kids[i]) == "Token:)" { None } else { Some(kids[i]) };
                let body_stmt = *kids.last().expect("for has a body");
                let cond = self.cfg.new_block();
                self.cfg.link(b, cond);
                self.cfg.blocks[cond].push(stmt);
                if let Some(c) = cond_expr {
                    self.expr(cond, c);
                }
                let body = self.cfg.new_block();
                self.cfg.link(cond, body);
                let body_end = self.stmt(body, body_stmt);
                let upd = self.cfg.new_block();
                self.cfg.link(body_end, upd);
                if let Some(u) = update {
                    self.expr(upd, u);
                }
                self.cfg.link(upd, cond);
                let after = self.cfg.new_block();
                // without a condition the loop only exits through `return`
                if cond_expr.is_some() {
                    self.cfg.link(cond, after);
                }
                after
            }
            _ => {
                self.simple(b, stmt);
                b
            }
        }
    }
}

/// One CFG per method and constructor, in source order.
pub fn build_cfgs(g: &CodeGraph) -> Vec<Cfg> {
    let ex = EventExtractor::new(g);
    build_cfgs_with(&ex, g)
}

fn build_cfgs_with(ex: &EventExtractor<'_>, g: &CodeGraph) -> Vec<Cfg> {
    let mut out = Vec::new();
    for id in g.node_ids() {
        if !matches!(ex.label(id), "MethodDecl" | "ConstructorDecl") {
            continue;
        }
        let Some(&body) = ex.children(id).iter().find(|&&c| ex.label(c) == "Block") else {
            continue;
        };
        let mut b = CfgBuilder { ex, cfg: Cfg { method: id, ..Cfg::default() } };
        let entry = b.cfg.new_block();
        let exit = b.cfg.new_block();
        debug_assert_eq!((entry, exit), (Cfg::ENTRY, Cfg::EXIT));
        b.cfg.events[entry] = ex.entry_events(id);
        let start = b.cfg.new_block();
        b.cfg.link(entry, start);
        let end = b.stmt(start, body);
        b.cfg.link(end, exit);
        out.push(b.cfg);
    }
    out
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
struct VarState {
    reads: BTreeSet<NodeId>,
    writes: BTreeSet<NodeId>,
}

type State = BTreeMap<VarKey, VarState>;

fn join_into(dst: &mut State, src: &State) {
    for (k, v) in src {
        let d = dst.entry(k.clone()).or_default();
        d.reads.extend(v.reads.iter().copied());
        d.writes.extend(v.writes.iter().copied());
    }
}

/// Applies `events` to `state`, reporting edges through `emit(src, dst, is_write_edge)`.
fn transfer(state: &mut State, events: &[Access], mut emit: impl FnMut(NodeId, NodeId, bool)) {
    for a in events {
        let s = state.entry(a.var.clone()).or_default();
        match a.kind {
            AccessKind::Reset => *s = VarState::default(),
            AccessKind::Read | AccessKind::Write => {
                for &r in s.reads.iter().filter(|&&r| r != a.node) {
                    emit(a.node, r, false);
                }
                for &w in s.writes.iter().filter(|&&w| w != a.node) {
                    emit(a.node, w, true);
                }
                let set = if a.kind == AccessKind::Read { &mut s.reads } else { &mut s.writes };
                set.clear();
                set.insert(a.node);
            }
        }
    }
}

/// Per-method `(LAST_READ, LAST_WRITE)` edge sets from the fixed point.
pub fn last_access_edges(cfg: &Cfg) -> (BTreeSet<(NodeId, NodeId)>, BTreeSet<(NodeId, NodeId)>) {
    let n = cfg.blocks.len();
    let preds = cfg.predecessors();
    let reachable = cfg.reachable();
    let mut out_state: Vec<State> = alloc::vec![State::new(); n];
    let mut queued = alloc::vec![false; n];
    let mut work: VecDeque<usize> = VecDeque::new();
    for b in 0..n {
        if reachable[b] {
            work.push_back(b);
            queued[b] = true;
        }
    }
    let in_state = |b: usize, out_state: &[State]| {
        let mut s = State::new();
        for &p in &preds[b] {
            join_into(&mut s, &out_state[p]);
        }
        s
    };
    while let Some(b) = work.pop_front() {
        queued[b] = false;
        let mut s = in_state(b, &out_state);
        transfer(&mut s, &cfg.events[b], |_, _, _| {});
        if s != out_state[b] {
            out_state[b] = s;
            for &succ in &cfg.successors[b] {
                if reachable[succ] && !queued[succ] {
                    queued[succ] = true;
                    work.push_back(succ);
                }
            }
        }
    }
    let mut reads = BTreeSet::new();
    let mut writes = BTreeSet::new();
    for b in (0..n).filter(|&b| reachable[b]) {
        let mut s = in_state(b, &out_state);
        transfer(&mut s, &cfg.events[b], |src, dst, w| {
            if w {
                writes.insert((src, dst));
            } else {
                reads.insert((src, dst));
            }
        });
    }
    (reads, writes)
}

/// Adds `LAST_READ` and `LAST_WRITE` edges for every method body.
pub fn compute_last_accesses(g: &mut CodeGraph) {
    let cfgs = build_cfgs(g);
    let mut reads = BTreeSet::new();
    let mut writes = BTreeSet::new();
    for cfg in &cfgs {
        let (r, w) = last_access_edges(cfg);
        reads.extend(r);
        writes.extend(w);
    }
    push_sorted(g, reads, LAST_READ);
    push_sorted(g, writes, LAST_WRITE);
}
