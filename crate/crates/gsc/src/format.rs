//! JSONL graph and instance records.

use std::fs::File;
use std::io::{BufRead, BufReader, BufWriter, Write};
use std::path::Path;

use gsc_core::graph::{CodeGraph, Construct, Edge, EdgeType, Entity, Node, NodeId, Span};
use gsc_core::tasks::{FitbInstance, Instance, Task, VarNamingInstance};
use serde::de::DeserializeOwned;
use serde::{Deserialize, Serialize};

use crate::error::{GscError, Result};

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct NodeRecord {
    pub id: usize,
    pub kind: String,
    pub construct: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
    #[serde(rename = "type", default, skip_serializing_if = "Option::is_none")]
    pub type_name: Option<String>,
    /// Source text, written only when the construct and name do not imply it.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub text: Option<String>,
    /// The node has no text although its construct or name would imply one.
    #[serde(default, skip_serializing_if = "std::ops::Not::not")]
    pub no_text: bool,
    /// Declaration this occurrence resolves to.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub decl: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub entity: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub line: Option<u32>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub column: Option<u32>,
}

/// One graph per JSONL line: `{"file", "nodes", "edges": [[src, dst, "TYPE"], ...]}`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct GraphRecord {
    pub file: String,
    pub nodes: Vec<NodeRecord>,
    pub edges: Vec<(usize, usize, String)>,
}

/// Text a node gets when its record has none: the token of a token
/// construct, otherwise the name.
fn implied_text(construct: Construct, name: Option<&String>) -> Option<String> {
    construct.label().strip_prefix("Token:").map(String::from).or_else(|| name.cloned())
}

impl GraphRecord {
    pub fn from_graph(file: &str, g: &CodeGraph) -> Self {
        let nodes = g
            .node_ids()
            .map(|id| {
                let n = g.node(id);
                let implied = implied_text(n.construct, n.name.as_ref());
                NodeRecord {
                    id: id.index(),
                    kind: n.kind.as_str().into(),
                    construct: n.construct.label().into(),
                    name: n.name.clone(),
                    type_name: n.type_name.clone(),
                    text: n.text.clone().filter(|_| n.text != implied),
                    no_text: n.text.is_none() && implied.is_some(),
                    decl: n.decl.map(NodeId::index),
                    entity: n.entity.map(|e| e.as_str().into()),
                    line: n.span.map(|s| s.line),
                    column: n.span.map(|s| s.column),
                }
            })
            .collect();
        let edges = g.edges.iter().map(|e| (e.src.index(), e.dst.index(), e.ty.to_string())).collect();
        GraphRecord { file: file.into(), nodes, edges }
    }

    pub fn to_graph(&self) -> Result<CodeGraph> {
        let mut nodes = Vec::with_capacity(self.nodes.len());
        for (i, r) in self.nodes.iter().enumerate() {
            if r.id != i {
                return Err(GscError::Config(format!("{}: node {} listed at position {i}", self.file, r.id)));
            }
            let construct: Construct = r.construct.parse()?;
            let text = if r.no_text { None } else { r.text.clone().or_else(|| implied_text(construct, r.name.as_ref())) };
            nodes.push(Node {
                kind: r.kind.parse()?,
                construct,
                name: r.name.clone(),
                type_name: r.type_name.clone(),
                text,
                decl: r.decl.map(NodeId::from),
                entity: r.entity.as_deref().map(str::parse::<Entity>).transpose()?,
                span: r.line.zip(r.column).map(|(line, column)| Span { line, column }),
            });
        }
        let mut edges = Vec::with_capacity(self.edges.len());
        let mut reversed = false;
        for (s, d, t) in &self.edges {
            let ty: EdgeType = t.parse()?;
            reversed |= ty.reversed;
            edges.push(Edge { src: NodeId::from(*s), dst: NodeId::from(*d), ty });
        }
        if let Some(d) = nodes.iter().filter_map(|n| n.decl).find(|d| d.index() >= nodes.len()) {
            return Err(GscError::Config(format!("{}: declaration {d} is not a node", self.file)));
        }
        Ok(CodeGraph::from_parts(nodes, edges, reversed)?)
    }
}

/// Ground truth of an instance: node ids for fill-in-the-blank, words for
/// variable naming.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Answer {
    Nodes(Vec<usize>),
    Words(Vec<String>),
}

/// A graph record plus the task fields.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct InstanceRecord {
    pub id: String,
    #[serde(flatten)]
    pub graph: GraphRecord,
    pub task: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub blank_node: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub name_me_nodes: Option<Vec<usize>>,
    pub answer: Answer,
}

/// An instance with a stable identifier for diagnostics.
#[derive(Clone, Debug, PartialEq)]
pub struct LabeledInstance {
    pub id: String,
    pub file: String,
    pub instance: Instance,
}

impl InstanceRecord {
    pub fn from_instance(inst: &LabeledInstance) -> Self {
        let graph = GraphRecord::from_graph(&inst.file, inst.instance.graph());
        let ids = |v: &[NodeId]| v.iter().map(|n| n.index()).collect::<Vec<_>>();
        let (blank_node, name_me_nodes, answer) = match &inst.instance {
            Instance::Fitb(i) => (Some(i.blank.index()), None, Answer::Nodes(ids(&i.correct))),
            Instance::VarNaming(i) => (None, Some(ids(&i.name_me)), Answer::Words(i.target.clone())),
        };
        InstanceRecord {
            id: inst.id.clone(),
            graph,
            task: inst.instance.task().as_str().into(),
            blank_node,
            name_me_nodes,
            answer,
        }
    }

    pub fn to_instance(&self) -> Result<LabeledInstance> {
        let graph = self.graph.to_graph()?;
        let n = graph.len();
        let node = |i: usize| {
            if i < n {
                Ok(NodeId::from(i))
            } else {
                Err(GscError::Config(format!("instance {}: node {i} is out of range", self.id)))
            }
        };
        let bad = |what: &str| GscError::Config(format!("instance {}: {what}", self.id));
        let instance = match (self.task.parse::<Task>()?, &self.answer) {
            (Task::Fitb, Answer::Nodes(correct)) => {
                let blank = node(self.blank_node.ok_or_else(|| bad("missing blank_node"))?)?;
                let correct = correct.iter().map(|&c| node(c)).collect::<Result<_>>()?;
                Instance::Fitb(FitbInstance { graph, blank, correct })
            }
            (Task::VarNaming, Answer::Words(target)) => {
                let ids = self.name_me_nodes.as_ref().ok_or_else(|| bad("missing name_me_nodes"))?;
                let name_me = ids.iter().map(|&c| node(c)).collect::<Result<_>>()?;
                Instance::VarNaming(VarNamingInstance { graph, name_me, target: target.clone() })
            }
            _ => return Err(bad("answer does not match the task")),
        };
        Ok(LabeledInstance { id: self.id.clone(), file: self.graph.file.clone(), instance })
    }
}

pub fn write_jsonl<T: Serialize>(path: &Path, records: impl IntoIterator<Item = T>) -> Result<()> {
    let file = File::create(path).map_err(|e| GscError::io(path, e))?;
    let mut w = BufWriter::new(file);
    for (i, r) in records.into_iter().enumerate() {
        serde_json::to_writer(&mut w, &r).map_err(|e| GscError::Json { path: path.into(), line: i + 1, source: e })?;
        w.write_all(b"\n").map_err(|e| GscError::io(path, e))?;
    }
    w.flush().map_err(|e| GscError::io(path, e))
}

pub fn read_jsonl<T: DeserializeOwned>(path: &Path) -> Result<Vec<T>> {
    let file = File::open(path).map_err(|e| GscError::io(path, e))?;
    let mut out = Vec::new();
    for (i, line) in BufReader::new(file).lines().enumerate() {
        let line = line.map_err(|e| GscError::io(path, e))?;
        if line.trim().is_empty() {
            continue;
        }
        out.push(serde_json::from_str(&line).map_err(|e| GscError::Json { path: path.into(), line: i + 1, source: e })?);
    }
    Ok(out)
}

pub fn write_json<T: Serialize>(path: &Path, value: &T) -> Result<()> {
    let file = File::create(path).map_err(|e| GscError::io(path, e))?;
    let mut w = BufWriter::new(file);
    serde_json::to_writer_pretty(&mut w, value).map_err(|e| GscError::Json { path: path.into(), line: 0, source: e })?;
    w.write_all(b"\n").map_err(|e| GscError::io(path, e))?;
    w.flush().map_err(|e| GscError::io(path, e))
}

pub fn read_json<T: DeserializeOwned>(path: &Path) -> Result<T> {
    let text = std::fs::read_to_string(path).map_err(|e| GscError::io(path, e))?;
    serde_json::from_str(&text).map_err(|e| GscError::Json { path: path.into(), line: e.line(), source: e })
}
