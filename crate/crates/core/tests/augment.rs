mod support;

use std::collections::BTreeSet;

use gsc_core::augment::{
    add_computed_from, add_lexical_edges, add_returns_to, add_reverse_edges, augment, compute_last_accesses,
};
use gsc_core::graph::{
    CodeGraph, EdgeType, NodeId, COMPUTED_FROM, FIELD, LAST_FIELD_LEX, LAST_READ, LAST_SCOPE_USE, LAST_WRITE,
    RETURNS_TO,
};
use gsc_core::parser::source_to_graph;
use support::dataflow_oracle::oracle_edges;
use support::programs::random_program;

fn graph(src: &str) -> CodeGraph {
    source_to_graph(src).unwrap()
}

fn method(body: &str) -> CodeGraph {
    graph(&format!("class A {{ int f; int w; int m(int p, int q) {{ {body} }} }}"))
}

/// Occurrences of identifier `name`, in source order.
fn occ(g: &CodeGraph, name: &str) -> Vec<NodeId> {
    g.node_ids().filter(|&i| g.node(i).is_variable() && g.node(i).name.as_deref() == Some(name)).collect()
}

fn edges(g: &CodeGraph, ty: EdgeType) -> BTreeSet<(NodeId, NodeId)> {
    g.edges_of(ty).map(|e| (e.src, e.dst)).collect()
}

#[test]
fn computed_from_targets_rhs_variables() {
    let mut g = method("int x; int y = 1; int z = 2; x = y + z;");
    add_computed_from(&mut g);
    let (x, y, z) = (occ(&g, "x"), occ(&g, "y"), occ(&g, "z"));
    let cf = edges(&g, COMPUTED_FROM);
    assert!(cf.contains(&(x[1], y[1])));
    assert!(cf.contains(&(x[1], z[1])));
    assert_eq!(cf.iter().filter(|e| e.0 == x[1]).count(), 2);
}

#[test]
fn computed_from_constant_rhs_has_no_edges() {
    let mut g = method("int x; x = 5;");
    add_computed_from(&mut g);
    assert_eq!(g.edges_of(COMPUTED_FROM).count(), 0);
}

#[test]
fn computed_from_one_edge_per_occurrence_and_no_callee() {
    let mut g = graph("class A { int f(int u, int v) { return u; } void m(int a, int b) { int x; x = f(a, b) + a; } }");
    add_computed_from(&mut g);
    let x = occ(&g, "x")[1];
    let a = occ(&g, "a");
    let b = occ(&g, "b");
    let got: BTreeSet<_> = edges(&g, COMPUTED_FROM).into_iter().filter(|e| e.0 == x).collect();
    let want: BTreeSet<_> = [(x, a[1]), (x, b[1]), (x, a[2])].into_iter().collect();
    assert_eq!(got, want);
}

#[test]
fn straight_line_reads() {
    let mut g = method("h(p); h(p);");
    compute_last_accesses(&mut g);
    let p = occ(&g, "p");
    let lr = edges(&g, LAST_READ);
    assert_eq!(lr, [(p[2], p[1])].into_iter().collect());
    // both reads see the parameter write at entry
    let lw = edges(&g, LAST_WRITE);
    assert_eq!(lw, [(p[1], p[0]), (p[2], p[0])].into_iter().collect());
}

#[test]
fn branch_writes_both_reach_use() {
    let mut g = method("int x; if (p < q) { x = 1; } else { x = 2; } return x;");
    compute_last_accesses(&mut g);
    let x = occ(&g, "x");
    let use_ = x[3];
    let from_use: BTreeSet<_> = edges(&g, LAST_WRITE).into_iter().filter(|e| e.0 == use_).map(|e| e.1).collect();
    assert_eq!(from_use, [x[1], x[2]].into_iter().collect());
}

#[test]
fn loop_write_and_prior_write_reach_use_after_loop() {
    let mut g = method("int x = 0; while (p < q) { x = p; p++; } return x;");
    compute_last_accesses(&mut g);
    let x = occ(&g, "x");
    let from_use: BTreeSet<_> =
        edges(&g, LAST_WRITE).into_iter().filter(|e| e.0 == x[2]).map(|e| e.1).collect();
    assert_eq!(from_use, [x[0], x[1]].into_iter().collect());
}

#[test]
fn returns_to_points_at_return_type() {
    let mut g = graph("class A { int x; int getX() { if (x < 0) { return 0; } return x; } void v() { return; } }");
    add_returns_to(&mut g);
    let get_x = occ(&g, "getX")[0];
    let ty = NodeId(get_x.0 - 1);
    assert_eq!(g.node(ty).construct.label(), "TypeRef");
    let rt = edges(&g, RETURNS_TO);
    assert_eq!(rt.len(), 2);
    assert!(rt.iter().all(|e| e.1 == ty));
    let x_use = occ(&g, "x")[2];
    assert!(rt.contains(&(x_use, ty)));
}

#[test]
fn scope_use_links_within_member_only() {
    let mut g = graph("class A { void a(int n) { h(n); h(n); } void b(int n) { h(n); } }");
    add_lexical_edges(&mut g);
    let n = occ(&g, "n");
    let su: BTreeSet<_> = edges(&g, LAST_SCOPE_USE).into_iter().filter(|e| n.contains(&e.0)).collect();
    assert_eq!(su, [(n[1], n[0]), (n[2], n[1]), (n[4], n[3])].into_iter().collect());
}

#[test]
fn shadowed_name_links_within_inner_scope() {
    let mut g = method("int x = 1; h(x); { int x = 2; h(x); h(x); } h(x);");
    add_lexical_edges(&mut g);
    let x = occ(&g, "x");
    let su: BTreeSet<_> = edges(&g, LAST_SCOPE_USE).into_iter().filter(|e| x.contains(&e.0)).collect();
    let want = [(x[1], x[0]), (x[3], x[2]), (x[4], x[3]), (x[5], x[1])];
    assert_eq!(su, want.into_iter().collect());
}

#[test]
fn field_edges_cross_methods() {
    let mut g = graph("class A { int w; void a() { this.w = 1; } void b() { h(w); } }");
    add_lexical_edges(&mut g);
    let w = occ(&g, "w");
    assert_eq!(edges(&g, LAST_FIELD_LEX), [(w[1], w[0]), (w[2], w[1])].into_iter().collect());
    assert_eq!(edges(&g, FIELD), [(w[1], w[0]), (w[2], w[0])].into_iter().collect());
}

#[test]
fn reverse_edges_double_and_guard() {
    let mut g = method("int x = p; x = x + q; return x;");
    augment(&mut g);
    let before = g.edges.clone();
    let hist = g.edge_type_histogram();
    add_reverse_edges(&mut g).unwrap();
    assert_eq!(g.edges.len(), 2 * before.len());
    let after = g.edge_type_histogram();
    for ty in before.iter().map(|e| e.ty) {
        assert_eq!(after[ty.reverse().index()], hist[ty.index()]);
    }
    let set: BTreeSet<_> = g.edges.iter().map(|e| (e.src, e.dst, e.ty.index())).collect();
    for e in &before {
        assert!(set.contains(&(e.dst, e.src, e.ty.reverse().index())));
    }
    assert!(add_reverse_edges(&mut g).is_err());
}

#[test]
fn reverse_of_single_edge() {
    let mut g = graph("class A { }");
    g.retain_edges(|t| t == gsc_core::graph::AST);
    g.edges.truncate(1);
    add_reverse_edges(&mut g).unwrap();
    let kinds: Vec<String> = g.edges.iter().map(|e| e.ty.to_string()).collect();
    assert_eq!(kinds, ["AST", "reverse_AST"]);
}

#[test]
fn semantic_edges_stay_inside_methods() {
    let mut g = graph(&random_program(3, 15).replace("class Fixture {", "class Fixture { int k(int p) { return p; }"));
    augment(&mut g);
    let parents = g.parents();
    let method_of = |mut n: NodeId| loop {
        match g.node(n).construct.label() {
            "MethodDecl" | "ConstructorDecl" | "FieldDecl" => return Some(n),
            _ => n = parents[n.index()]?,
        }
    };
    for e in &g.edges {
        if matches!(e.ty.base.as_str(), "AST" | "NEXT_TOKEN" | "LAST_FIELD_LEX" | "FIELD") {
            continue;
        }
        assert_eq!(method_of(e.src), method_of(e.dst), "{:?}", e);
    }
}

#[test]
fn fixed_point_matches_path_enumeration() {
    let hand = [
        "int x = p; while (x < q) { if (x < 3) { x = x + 1; } else { q = q - 1; } } return x;",
        "int s = 0; for (int i = 0; i < p; i++) { s += i; } return s;",
        "int a = p; if (a < q) { return a; } a = q; return a;",
        "int a; while (p < q) { a = p; while (a < q) { a++; } p = a; } return p;",
        "f = p; this.f = f + q; return this.f;",
        "int x = 1; { int x = 2; x = x + p; } return x;",
        "for (;;) { if (p < q) { return p; } p++; }",
    ];
    let mut count = 0;
    let check = |g: &mut CodeGraph, what: &str| {
        let (r, w) = oracle_edges(g);
        compute_last_accesses(g);
        assert_eq!(edges(g, LAST_READ), r, "LAST_READ mismatch on {what}");
        assert_eq!(edges(g, LAST_WRITE), w, "LAST_WRITE mismatch on {what}");
    };
    for body in hand {
        check(&mut method(body), body);
        count += 1;
    }
    for seed in 0..40 {
        let src = random_program(seed, 19);
        check(&mut graph(&src), &src);
        count += 1;
    }
    assert!(count >= 30);
}

#[test]
fn generated_fixtures_are_nontrivial() {
    let mut loops = 0;
    for seed in 0..40 {
        let src = random_program(seed, 19);
        loops += usize::from(src.contains("while") || src.contains("for"));
        let mut g = graph(&src);
        compute_last_accesses(&mut g);
        assert!(g.edges_of(LAST_WRITE).count() > 0);
    }
    assert!(loops >= 10, "only {loops} fixtures with loops");
}
