//! Arena-backed ordered syntax tree.

use alloc::string::String;
use alloc::vec::Vec;

use crate::graph::{Construct, Entity, NodeId, Span};

/// Construct labels of identifier leaves. Every such leaf becomes a variable
/// node in the graph.
pub const NAME_CONSTRUCTS: &[&str] = &[
    "ClassName",
    "MethodName",
    "ConstructorName",
    "FieldName",
    "ParamName",
    "LocalName",
    "NameUse",
    "MemberName",
    "CalleeName",
];

/// Constructs whose leaf declares the entity it names.
pub const DECL_CONSTRUCTS: &[&str] =
    &["ClassName", "MethodName", "FieldName", "ParamName", "LocalName"];

pub fn is_name_construct(c: Construct) -> bool {
    NAME_CONSTRUCTS.contains(&c.label())
}

pub fn is_decl_construct(c: Construct) -> bool {
    DECL_CONSTRUCTS.contains(&c.label())
}

#[derive(Clone, Debug, PartialEq)]
pub struct AstNode {
    pub construct: Construct,
    /// Source text for leaves.
    pub text: Option<String>,
    pub span: Option<Span>,
    pub children: Vec<NodeId>,
    /// Declaration leaf this identifier resolves to; declarations point at
    /// themselves. `None` on an identifier leaf means unresolved.
    pub decl: Option<NodeId>,
    pub entity: Option<Entity>,
    /// Declared type of the named entity.
    pub type_name: Option<String>,
}

impl AstNode {
    pub fn is_leaf(&self) -> bool {
        self.children.is_empty() && self.text.is_some()
    }

    pub fn is_name(&self) -> bool {
        is_name_construct(self.construct)
    }

    /// Identifier leaves that did not resolve to a declaration in the unit.
    pub fn is_unresolved(&self) -> bool {
        self.is_name() && self.decl.is_none()
    }
}

/// Ordered tree stored in pre-order; the root is node 0.
#[derive(Clone, Debug, Default, PartialEq)]
pub struct Ast {
    pub nodes: Vec<AstNode>,
}

impl Ast {
    pub fn root(&self) -> NodeId {
        NodeId(0)
    }

    pub fn node(&self, id: NodeId) -> &AstNode {
        &self.nodes[id.index()]
    }

    pub fn node_mut(&mut self, id: NodeId) -> &mut AstNode {
        &mut self.nodes[id.index()]
    }

    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    pub fn node_ids(&self) -> impl Iterator<Item = NodeId> {
        (0..self.nodes.len()).map(NodeId::from)
    }

    pub fn label(&self, id: NodeId) -> &'static str {
        self.node(id).construct.label()
    }

    /// Leaf texts in left-to-right order.
    pub fn leaf_texts(&self) -> Vec<&str> {
        let mut out = Vec::new();
        let mut stack = alloc::vec![self.root()];
        while let Some(id) = stack.pop() {
            let n = self.node(id);
            if n.children.is_empty() {
                if let Some(t) = &n.text {
                    out.push(t.as_str());
                }
            }
            stack.extend(n.children.iter().rev().copied());
        }
        out
    }

    /// First child with the given construct label.
    pub fn child_with(&self, id: NodeId, label: &str) -> Option<NodeId> {
        self.node(id).children.iter().copied().find(|&c| self.label(c) == label)
    }
}

/// Owned tree produced while parsing, flattened into an [`Ast`] afterwards.
#[derive(Clone, Debug)]
pub(crate) struct Tree {
    pub construct: Construct,
    pub text: Option<String>,
    pub span: Option<Span>,
    pub children: Vec<Tree>,
}

impl Tree {
    pub fn inner(label: &str, children: Vec<Tree>) -> Tree {
        Tree { construct: Construct::named(label), text: None, span: None, children }
    }

    pub fn leaf(construct: Construct, text: String, span: Span) -> Tree {
        Tree { construct, text: Some(text), span: Some(span), children: Vec::new() }
    }

    pub fn label(&self) -> &'static str {
        self.construct.label()
    }

    pub fn into_ast(self) -> Ast {
        let mut ast = Ast::default();
        push(&mut ast, self);
        ast
    }
}

fn push(ast: &mut Ast, tree: Tree) -> NodeId {
    let id = NodeId::from(ast.nodes.len());
    ast.nodes.push(AstNode {
        construct: tree.construct,
        text: tree.text,
        span: tree.span,
        children: Vec::new(),
        decl: None,
        entity: None,
        type_name: None,
    });
    let children: Vec<NodeId> = tree.children.into_iter().map(|c| push(ast, c)).collect();
    ast.nodes[id.index()].children = children;
    id
}
