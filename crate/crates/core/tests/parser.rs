use gsc_core::graph::{Entity, NodeKind, AST, NEXT_TOKEN};
use gsc_core::parser::{ast_to_graph, parse, parse_source, tokenize, Ast};
use regex::Regex;

const SAMPLE: &str = r#"
class Account {
    private double balance = 0.0;
    private String ownerName;

    Account(String name) {
        ownerName = name;
    }

    /* deposits an amount */
    public void deposit(double amount) {
        if (amount > 0) {
            balance += amount;
        } else {
            logError("negative");
        }
    }

    public double getBalance() {
        return this.balance;
    }

    int countDigits(int n) {
        int count = 0;
        while (n > 0) {
            n = n / 10;
            count++;
        }
        for (int i = 0; i < 3; i = i + 1) {
            count = count + i;
        }
        return count;
    }
}
"#;

fn find<'a>(ast: &'a Ast, label: &str, text: &str) -> Vec<usize> {
    ast.nodes
        .iter()
        .enumerate()
        .filter(|(_, n)| n.construct.label() == label && n.text.as_deref() == Some(text))
        .map(|(i, _)| i)
        .collect()
}

/// Independent token counter: strips comments, then matches one regex
/// alternative per token class.
fn regex_token_count(src: &str) -> usize {
    let comments = Regex::new(r"(?s)/\*.*?\*/|//[^\n]*").unwrap();
    let stripped = comments.replace_all(src, " ");
    let token = Regex::new(
        r#""([^"\\]|\\.)*"|'([^'\\]|\\.)*'|[0-9]+(\.[0-9]+)?[lLdDfF]?|[A-Za-z_$][A-Za-z0-9_$]*|\+=|-=|\*=|/=|%=|==|!=|<=|>=|&&|\|\||\+\+|--|[=<>!+\-*/%(){};,.]"#,
    )
    .unwrap();
    token.find_iter(&stripped).count()
}

#[test]
fn token_count_matches_regex_oracle() {
    let toks = tokenize(SAMPLE).unwrap();
    assert_eq!(toks.len(), regex_token_count(SAMPLE));
}

#[test]
fn leaf_round_trip() {
    let toks = tokenize(SAMPLE).unwrap();
    let ast = parse(&toks).unwrap();
    let texts: Vec<&str> = toks.iter().map(|t| t.text.as_str()).collect();
    assert_eq!(ast.leaf_texts(), texts);
}

#[test]
fn minimal_program_resolves_parameter() {
    let ast = parse_source("class A { int f(int n){ return n; } }").unwrap();
    assert_eq!(ast.label(ast.root()), "CompilationUnit");
    let class = ast.node(ast.root()).children[0];
    assert_eq!(ast.label(class), "ClassDecl");
    assert!(ast.child_with(class, "MethodDecl").is_some());
    let param = find(&ast, "ParamName", "n")[0];
    let uses = find(&ast, "NameUse", "n");
    assert_eq!(uses.len(), 1);
    let u = ast.node(uses[0].into());
    assert_eq!(u.decl, Some(param.into()));
    assert_eq!(u.entity, Some(Entity::Param));
    assert_eq!(u.type_name.as_deref(), Some("int"));
}

#[test]
fn assignment_structure() {
    let ast = parse_source("class A { void m(int y, int z) { int x; x = y + z; } }").unwrap();
    let assign = ast.nodes.iter().position(|n| n.construct.label() == "Assign").unwrap();
    let kids = &ast.node(assign.into()).children;
    assert_eq!(ast.label(kids[0]), "NameUse");
    assert_eq!(ast.node(kids[0]).text.as_deref(), Some("x"));
    assert_eq!(ast.label(kids[1]), "Token:=");
    let rhs = kids[2];
    assert_eq!(ast.label(rhs), "BinaryOp");
    let r = &ast.node(rhs).children;
    assert_eq!(ast.node(r[0]).text.as_deref(), Some("y"));
    assert_eq!(ast.node(r[1]).text.as_deref(), Some("+"));
    assert_eq!(ast.node(r[2]).text.as_deref(), Some("z"));
}

#[test]
fn minimal_class_graph_counts() {
    // CompilationUnit, ClassDecl, class, A, {, FieldDecl, int, x, ;, }
    let ast = parse_source("class A { int x; }").unwrap();
    let g = ast_to_graph(&ast);
    assert_eq!(g.len(), 10);
    assert_eq!(g.edges_of(AST).count(), 9);
    // ClassDecl has 5 children, FieldDecl 3, CompilationUnit 1
    assert_eq!(g.edges_of(NEXT_TOKEN).count(), 4 + 2);
    let vars: Vec<_> = g.nodes.iter().filter(|n| n.kind == NodeKind::Variable).collect();
    assert_eq!(vars.len(), 2);
    assert_eq!(vars[1].name.as_deref(), Some("x"));
    assert_eq!(vars[1].type_name.as_deref(), Some("int"));
}

#[test]
fn shadowing_in_inner_block() {
    let src = "class A { void m() { int x = 1; x = x + 1; { int x = 2; x = 3; } x = 4; } }";
    let ast = parse_source(src).unwrap();
    let decls = find(&ast, "LocalName", "x");
    assert_eq!(decls.len(), 2);
    let uses = find(&ast, "NameUse", "x");
    let targets: Vec<usize> = uses.iter().map(|&u| ast.node(u.into()).decl.unwrap().index()).collect();
    assert_eq!(targets, vec![decls[0], decls[0], decls[1], decls[0]]);
}

#[test]
fn qualified_field_access_resolves() {
    let src = "class A { int w; static int k; void m() { this.w = A.k; B b = new B(); b.v = 1; } }
               class B { int v; }";
    let ast = parse_source(src).unwrap();
    let w_decl = find(&ast, "FieldName", "w")[0];
    let k_decl = find(&ast, "FieldName", "k")[0];
    let v_decl = find(&ast, "FieldName", "v")[0];
    let member = |t: &str| ast.node(find(&ast, "MemberName", t)[0].into()).decl.map(|d| d.index());
    assert_eq!(member("w"), Some(w_decl));
    assert_eq!(member("k"), Some(k_decl));
    assert_eq!(member("v"), Some(v_decl));
}

#[test]
fn unresolved_names_are_flagged() {
    let ast = parse_source("class A { void m() { y = foo.bar; } }").unwrap();
    let y = find(&ast, "NameUse", "y")[0];
    assert!(ast.node(y.into()).is_unresolved());
    assert_eq!(ast.node(y.into()).type_name, None);
}

#[test]
fn syntax_error_reports_location_and_expected() {
    let err = parse_source("class A {\n  int x = ;\n}").unwrap_err();
    assert_eq!((err.line, err.column), (2, 11));
    assert!(!err.expected.is_empty());
}

#[test]
fn sample_parses() {
    let ast = parse_source(SAMPLE).unwrap();
    let g = ast_to_graph(&ast);
    assert_eq!(g.edges_of(AST).count(), g.len() - 1);
}
