//! Typed directed multigraph shared by every pipeline stage.

use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use thiserror::Error;

/// Index of a node inside a [`CodeGraph`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct NodeId(pub u32);

impl NodeId {
    #[inline]
    pub fn index(self) -> usize {
        self.0 as usize
    }
}

impl From<usize> for NodeId {
    fn from(i: usize) -> Self {
        NodeId(i as u32)
    }
}

impl fmt::Display for NodeId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum NodeKind {
    Syntax,
    Variable,
    Cache,
    Special,
}

impl NodeKind {
    pub fn as_str(self) -> &'static str {
        match self {
            NodeKind::Syntax => "syntax",
            NodeKind::Variable => "variable",
            NodeKind::Cache => "cache",
            NodeKind::Special => "special",
        }
    }
}

impl FromStr for NodeKind {
    type Err = GraphError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Ok(match s {
            "syntax" => NodeKind::Syntax,
            "variable" => NodeKind::Variable,
            "cache" => NodeKind::Cache,
            "special" => NodeKind::Special,
            other => return Err(GraphError::UnknownNodeKind(other.into())),
        })
    }
}

/// Edge families before reversal.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum BaseEdge {
    Ast,
    NextToken,
    ComputedFrom,
    LastRead,
    LastWrite,
    ReturnsTo,
    LastScopeUse,
    LastFieldLex,
    Field,
    WordUse,
}

impl BaseEdge {
    pub const ALL: [BaseEdge; 10] = [
        BaseEdge::Ast,
        BaseEdge::NextToken,
        BaseEdge::ComputedFrom,
        BaseEdge::LastRead,
        BaseEdge::LastWrite,
        BaseEdge::ReturnsTo,
        BaseEdge::LastScopeUse,
        BaseEdge::LastFieldLex,
        BaseEdge::Field,
        BaseEdge::WordUse,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            BaseEdge::Ast => "AST",
            BaseEdge::NextToken => "NEXT_TOKEN",
            BaseEdge::ComputedFrom => "COMPUTED_FROM",
            BaseEdge::LastRead => "LAST_READ",
            BaseEdge::LastWrite => "LAST_WRITE",
            BaseEdge::ReturnsTo => "RETURNS_TO",
            BaseEdge::LastScopeUse => "LAST_SCOPE_USE",
            BaseEdge::LastFieldLex => "LAST_FIELD_LEX",
            BaseEdge::Field => "FIELD",
            BaseEdge::WordUse => "WORD_USE",
        }
    }

    /// Edge families that only exist in an augmented AST.
    pub fn is_semantic(self) -> bool {
        !matches!(self, BaseEdge::Ast | BaseEdge::NextToken | BaseEdge::WordUse)
    }
}

/// An edge label: a base family plus a reversal flag.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct EdgeType {
    pub base: BaseEdge,
    pub reversed: bool,
}

impl EdgeType {
    pub const fn forward(base: BaseEdge) -> Self {
        EdgeType { base, reversed: false }
    }

    pub const fn reverse(self) -> Self {
        EdgeType { base: self.base, reversed: !self.reversed }
    }

    /// Dense index in `0..20`.
    pub fn index(self) -> usize {
        let b = BaseEdge::ALL.iter().position(|&b| b == self.base).unwrap_or(0);
        b * 2 + self.reversed as usize
    }

    pub const COUNT: usize = 20;
}

pub const AST: EdgeType = EdgeType::forward(BaseEdge::Ast);
pub const NEXT_TOKEN: EdgeType = EdgeType::forward(BaseEdge::NextToken);
pub const COMPUTED_FROM: EdgeType = EdgeType::forward(BaseEdge::ComputedFrom);
pub const LAST_READ: EdgeType = EdgeType::forward(BaseEdge::LastRead);
pub const LAST_WRITE: EdgeType = EdgeType::forward(BaseEdge::LastWrite);
pub const RETURNS_TO: EdgeType = EdgeType::forward(BaseEdge::ReturnsTo);
pub const LAST_SCOPE_USE: EdgeType = EdgeType::forward(BaseEdge::LastScopeUse);
pub const LAST_FIELD_LEX: EdgeType = EdgeType::forward(BaseEdge::LastFieldLex);
pub const FIELD: EdgeType = EdgeType::forward(BaseEdge::Field);
pub const WORD_USE: EdgeType = EdgeType::forward(BaseEdge::WordUse);

impl fmt::Display for EdgeType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.reversed {
            f.write_str("reverse_")?;
        }
        f.write_str(self.base.as_str())
    }
}

impl FromStr for EdgeType {
    type Err = GraphError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let (reversed, rest) = match s.strip_prefix("reverse_") {
            Some(rest) => (true, rest),
            None => (false, s),
        };
        BaseEdge::ALL
            .iter()
            .find(|b| b.as_str() == rest)
            .map(|&base| EdgeType { base, reversed })
            .ok_or_else(|| GraphError::UnknownEdgeType(s.into()))
    }
}

/// Closed set of construct labels. Leaf tokens without a dedicated construct
/// (keywords, operators, punctuation) use `Token:<text>`.
pub const CONSTRUCTS: &[&str] = &[
    "CompilationUnit",
    "ClassDecl",
    "FieldDecl",
    "MethodDecl",
    "ConstructorDecl",
    "Parameter",
    "Block",
    "VarDecl",
    "ExprStmt",
    "EmptyStmt",
    "If",
    "While",
    "For",
    "Return",
    "Assign",
    "BinaryOp",
    "UnaryOp",
    "PostfixOp",
    "Call",
    "FieldAccess",
    "New",
    "Paren",
    "TypeRef",
    "This",
    "IntLiteral",
    "DoubleLiteral",
    "StringLiteral",
    "CharLiteral",
    "BoolLiteral",
    "NullLiteral",
    "ClassName",
    "MethodName",
    "ConstructorName",
    "FieldName",
    "ParamName",
    "LocalName",
    "NameUse",
    "MemberName",
    "CalleeName",
    "CacheNode",
    "FillInTheBlank",
    "NameMe",
    "Token:class",
    "Token:public",
    "Token:private",
    "Token:protected",
    "Token:static",
    "Token:final",
    "Token:if",
    "Token:else",
    "Token:while",
    "Token:for",
    "Token:return",
    "Token:new",
    "Token:(",
    "Token:)",
    "Token:{",
    "Token:}",
    "Token:;",
    "Token:,",
    "Token:.",
    "Token:=",
    "Token:+=",
    "Token:-=",
    "Token:*=",
    "Token:/=",
    "Token:%=",
    "Token:==",
    "Token:!=",
    "Token:<",
    "Token:>",
    "Token:<=",
    "Token:>=",
    "Token:&&",
    "Token:||",
    "Token:!",
    "Token:+",
    "Token:-",
    "Token:*",
    "Token:/",
    "Token:%",
    "Token:++",
    "Token:--",
];

/// A construct label, guaranteed to be a member of [`CONSTRUCTS`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Construct(u16);

impl Construct {
    pub fn from_label(label: &str) -> Option<Construct> {
        CONSTRUCTS.iter().position(|&c| c == label).map(|i| Construct(i as u16))
    }

    /// Panics if `label` is not a known construct; only for labels written in code.
    pub fn named(label: &str) -> Construct {
        Construct::from_label(label).unwrap_or_else(|| panic!("unknown construct {label}"))
    }

    /// Leaf label for a keyword, operator or punctuation token.
    pub fn token(text: &str) -> Option<Construct> {
        let mut buf = String::from("Token:");
        buf.push_str(text);
        Construct::from_label(&buf)
    }

    pub fn label(self) -> &'static str {
        CONSTRUCTS[self.0 as usize]
    }

    pub fn index(self) -> usize {
        self.0 as usize
    }

    pub fn count() -> usize {
        CONSTRUCTS.len()
    }
}

impl fmt::Display for Construct {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

impl FromStr for Construct {
    type Err = GraphError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Construct::from_label(s).ok_or_else(|| GraphError::UnknownConstruct(s.into()))
    }
}

/// What a variable node names.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Entity {
    Class,
    Method,
    Field,
    Param,
    Local,
}

impl Entity {
    pub const ALL: [Entity; 5] = [Entity::Class, Entity::Method, Entity::Field, Entity::Param, Entity::Local];

    pub fn as_str(self) -> &'static str {
        match self {
            Entity::Class => "class",
            Entity::Method => "method",
            Entity::Field => "field",
            Entity::Param => "param",
            Entity::Local => "local",
        }
    }

    /// Entities that hold values and take part in dataflow.
    pub fn is_value(self) -> bool {
        matches!(self, Entity::Field | Entity::Param | Entity::Local)
    }
}

impl FromStr for Entity {
    type Err = GraphError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Entity::ALL.into_iter().find(|e| e.as_str() == s).ok_or_else(|| GraphError::UnknownEntity(s.into()))
    }
}

/// 1-based source position of a leaf token.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub struct Span {
    pub line: u32,
    pub column: u32,
}

/// Reserved type name carried by cache nodes.
pub const CACHE_NODE_TYPE: &str = "CACHE_NODE";

#[derive(Clone, Debug, PartialEq)]
pub struct Node {
    pub kind: NodeKind,
    pub construct: Construct,
    /// Identifier text for variable nodes, the word for cache nodes.
    pub name: Option<String>,
    /// Declared type of the named entity, `None` when unknown.
    pub type_name: Option<String>,
    /// Source token text for AST leaves. Not serialized.
    pub text: Option<String>,
    /// Declaration node this occurrence resolves to. Not serialized.
    pub decl: Option<NodeId>,
    /// What the occurrence names, when resolved. Not serialized.
    pub entity: Option<Entity>,
    pub span: Option<Span>,
}

impl Node {
    pub fn syntax(construct: Construct) -> Node {
        Node {
            kind: NodeKind::Syntax,
            construct,
            name: None,
            type_name: None,
            text: None,
            decl: None,
            entity: None,
            span: None,
        }
    }

    pub fn cache(word: &str) -> Node {
        Node {
            kind: NodeKind::Cache,
            construct: Construct::named("CacheNode"),
            name: Some(word.into()),
            type_name: Some(CACHE_NODE_TYPE.into()),
            ..Node::syntax(Construct::named("CacheNode"))
        }
    }

    pub fn special(token: SpecialToken) -> Node {
        Node { kind: NodeKind::Special, ..Node::syntax(token.construct()) }
    }

    pub fn is_variable(&self) -> bool {
        self.kind == NodeKind::Variable
    }
}

/// Placeholder tokens substituted into task instances.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SpecialToken {
    FillInTheBlank,
    NameMe,
}

impl SpecialToken {
    pub fn construct(self) -> Construct {
        match self {
            SpecialToken::FillInTheBlank => Construct::named("FillInTheBlank"),
            SpecialToken::NameMe => Construct::named("NameMe"),
        }
    }

    pub fn text(self) -> &'static str {
        match self {
            SpecialToken::FillInTheBlank => "<FILL-IN-THE-BLANK>",
            SpecialToken::NameMe => "<NAME-ME>",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Edge {
    pub src: NodeId,
    pub dst: NodeId,
    pub ty: EdgeType,
}

#[derive(Clone, Debug, Error, PartialEq)]
pub enum GraphError {
    #[error("unknown edge type `{0}`")]
    UnknownEdgeType(String),
    #[error("unknown node kind `{0}`")]
    UnknownNodeKind(String),
    #[error("unknown entity `{0}`")]
    UnknownEntity(String),
    #[error("unknown construct label `{0}`")]
    UnknownConstruct(String),
    #[error("reverse edges were already added to this graph")]
    AlreadyReversed,
    #[error("edge ({0}, {1}) references a node outside the graph")]
    DanglingEdge(NodeId, NodeId),
    #[error("node {0} is not in the graph")]
    MissingNode(NodeId),
}

/// Directed multigraph of typed nodes and typed edges.
///
/// Node ids are dense indices into `nodes`. AST edges are stored in child
/// order, so [`CodeGraph::children`] recovers the ordered tree.
#[derive(Clone, Debug, Default, PartialEq)]
pub struct CodeGraph {
    pub nodes: Vec<Node>,
    pub edges: Vec<Edge>,
    reversed: bool,
}

impl CodeGraph {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn from_parts(nodes: Vec<Node>, edges: Vec<Edge>, reversed: bool) -> Result<Self, GraphError> {
        let n = nodes.len();
        if let Some(e) = edges.iter().find(|e| e.src.index() >= n || e.dst.index() >= n) {
            return Err(GraphError::DanglingEdge(e.src, e.dst));
        }
        Ok(CodeGraph { nodes, edges, reversed })
    }

    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    pub fn node(&self, id: NodeId) -> &Node {
        &self.nodes[id.index()]
    }

    pub fn node_mut(&mut self, id: NodeId) -> &mut Node {
        &mut self.nodes[id.index()]
    }

    pub fn add_node(&mut self, node: Node) -> NodeId {
        self.nodes.push(node);
        NodeId::from(self.nodes.len() - 1)
    }

    pub fn add_edge(&mut self, src: NodeId, dst: NodeId, ty: EdgeType) {
        self.edges.push(Edge { src, dst, ty });
    }

    pub fn has_reverse_edges(&self) -> bool {
        self.reversed
    }

    pub(crate) fn mark_reversed(&mut self) {
        self.reversed = true;
    }

    pub fn node_ids(&self) -> impl Iterator<Item = NodeId> + '_ {
        (0..self.nodes.len()).map(NodeId::from)
    }

    pub fn edges_of(&self, ty: EdgeType) -> impl Iterator<Item = &Edge> + '_ {
        self.edges.iter().filter(move |e| e.ty == ty)
    }

    /// Ordered children per node, rebuilt from forward AST edges.
    pub fn children(&self) -> Vec<Vec<NodeId>> {
        let mut out = alloc::vec![Vec::new(); self.nodes.len()];
        for e in self.edges_of(AST) {
            out[e.src.index()].push(e.dst);
        }
        out
    }

    /// Parent per node under forward AST edges.
    pub fn parents(&self) -> Vec<Option<NodeId>> {
        let mut out = alloc::vec![None; self.nodes.len()];
        for e in self.edges_of(AST) {
            out[e.dst.index()] = Some(e.src);
        }
        out
    }

    /// Undirected adjacency lists, sorted by neighbour id and deduplicated.
    pub fn undirected_adjacency(&self) -> Vec<Vec<NodeId>> {
        let mut adj = alloc::vec![Vec::new(); self.nodes.len()];
        for e in &self.edges {
            adj[e.src.index()].push(e.dst);
            adj[e.dst.index()].push(e.src);
        }
        for list in adj.iter_mut() {
            list.sort_unstable();
            list.dedup();
        }
        adj
    }

    /// Count of edges per edge type, in `EdgeType::index` order.
    pub fn edge_type_histogram(&self) -> [usize; EdgeType::COUNT] {
        let mut h = [0; EdgeType::COUNT];
        for e in &self.edges {
            h[e.ty.index()] += 1;
        }
        h
    }

    /// Keeps only edges whose type satisfies `keep`.
    pub fn retain_edges(&mut self, mut keep: impl FnMut(EdgeType) -> bool) {
        self.edges.retain(|e| keep(e.ty));
    }

    /// Induced subgraph on `keep` (any order); nodes are renumbered in
    /// ascending original-id order. Returns the graph and the old→new map.
    pub fn induced_subgraph(&self, keep: &[NodeId]) -> (CodeGraph, Vec<Option<NodeId>>) {
        let mut sorted: Vec<NodeId> = keep.to_vec();
        sorted.sort_unstable();
        sorted.dedup();
        let mut map = alloc::vec![None; self.nodes.len()];
        for (new, &old) in sorted.iter().enumerate() {
            map[old.index()] = Some(NodeId::from(new));
        }
        let nodes = sorted
            .iter()
            .map(|&old| {
                let mut node = self.nodes[old.index()].clone();
                node.decl = node.decl.and_then(|d| map[d.index()]);
                node
            })
            .collect();
        let edges = self
            .edges
            .iter()
            .filter_map(|e| {
                Some(Edge { src: map[e.src.index()]?, dst: map[e.dst.index()]?, ty: e.ty })
            })
            .collect();
        (CodeGraph { nodes, edges, reversed: self.reversed }, map)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;

    #[test]
    fn edge_type_names_round_trip() {
        for base in BaseEdge::ALL {
            for reversed in [false, true] {
                let t = EdgeType { base, reversed };
                let s = t.to_string();
                assert_eq!(s.parse::<EdgeType>().unwrap(), t);
            }
        }
        assert_eq!(LAST_READ.reverse().to_string(), "reverse_LAST_READ");
        assert!("reverse_BOGUS".parse::<EdgeType>().is_err());
    }

    #[test]
    fn edge_type_indices_are_dense() {
        let mut seen = [false; EdgeType::COUNT];
        for base in BaseEdge::ALL {
            for reversed in [false, true] {
                seen[EdgeType { base, reversed }.index()] = true;
            }
        }
        assert!(seen.iter().all(|&s| s));
    }

    #[test]
    fn constructs_are_unique() {
        for (i, a) in CONSTRUCTS.iter().enumerate() {
            assert_eq!(Construct::from_label(a).unwrap().index(), i);
        }
        assert!("Lambda".parse::<Construct>().is_err());
    }

    #[test]
    fn induced_subgraph_renumbers_in_order() {
        let mut g = CodeGraph::new();
        for _ in 0..4 {
            g.add_node(Node::syntax(Construct::named("Block")));
        }
        g.add_edge(NodeId(0), NodeId(1), AST);
        g.add_edge(NodeId(1), NodeId(3), AST);
        g.add_edge(NodeId(0), NodeId(2), AST);
        let (sub, map) = g.induced_subgraph(&[NodeId(3), NodeId(1)]);
        assert_eq!(sub.len(), 2);
        assert_eq!(map[1], Some(NodeId(0)));
        assert_eq!(map[3], Some(NodeId(1)));
        assert_eq!(sub.edges, alloc::vec![Edge { src: NodeId(0), dst: NodeId(1), ty: AST }]);
    }
}
