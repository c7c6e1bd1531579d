//! Syntax tree to graph conversion.

use crate::graph::{CodeGraph, Node, NodeKind, AST, NEXT_TOKEN};

use super::ast::Ast;

/// One graph node per AST node with identical ids. Emits an `AST` edge from
/// every parent to each child and a `NEXT_TOKEN` edge between consecutive
/// children. Identifier leaves become variable nodes.
pub fn ast_to_graph(ast: &Ast) -> CodeGraph {
    let mut g = CodeGraph::new();
    for n in &ast.nodes {
        let mut node = Node::syntax(n.construct);
        node.text = n.text.clone();
        node.span = n.span;
        if n.is_name() {
            node.kind = NodeKind::Variable;
            node.name = n.text.clone();
            node.type_name = n.type_name.clone();
            node.decl = n.decl;
            node.entity = n.entity;
        }
        g.add_node(node);
    }
    for id in ast.node_ids() {
        let children = &ast.node(id).children;
        for &c in children {
            g.add_edge(id, c, AST);
        }
        for w in children.windows(2) {
            g.add_edge(w[0], w[1], NEXT_TOKEN);
        }
    }
    g
}
