//! Task instances, readouts, losses, decoding and metrics for the
//! fill-in-the-blank and variable naming tasks.

use alloc::string::String;
use alloc::vec::Vec;
use core::str::FromStr;

use crate::error::ModelError;
use crate::graph::{CodeGraph, NodeId};

pub mod beam;
pub mod fitb;
mod instances;
pub mod metrics;
mod truncate;
pub mod varnaming;

pub use beam::{beam_search, Hypothesis, StepDecoder};
pub use instances::{
    fitb_instance_at, make_fitb_instances, make_varnaming_instances, prepare_graph, varnaming_instance_at, GraphConfig,
};
pub use metrics::{fitb_outcome, levenshtein, naming_outcome, DecodedName, FitbOutcome, MetricsReport, NamingOutcome};
pub use truncate::{bfs_order, truncate_graph};

/// Largest number of name words a variable naming target keeps.
pub const MAX_NAME_WORDS: usize = 8;
/// Default node budget of an instance graph.
pub const MAX_NODES: usize = 500;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Task {
    Fitb,
    VarNaming,
}

impl Task {
    pub fn as_str(self) -> &'static str {
        match self {
            Task::Fitb => "fitb",
            Task::VarNaming => "varnaming",
        }
    }
}

impl FromStr for Task {
    type Err = ModelError;

    fn from_str(s: &str) -> Result<Self, ModelError> {
        match s {
            "fitb" => Ok(Task::Fitb),
            "varnaming" => Ok(Task::VarNaming),
            _ => Err(ModelError::Config(alloc::format!("unknown task `{s}`"))),
        }
    }
}

/// A graph with one `<FILL-IN-THE-BLANK>` node standing in for a variable
/// occurrence.
#[derive(Clone, Debug, PartialEq)]
pub struct FitbInstance {
    pub graph: CodeGraph,
    pub blank: NodeId,
    /// Every other retained occurrence of the blanked variable, ascending.
    pub correct: Vec<NodeId>,
}

/// A graph whose every occurrence of one name is a `<NAME-ME>` node.
#[derive(Clone, Debug, PartialEq)]
pub struct VarNamingInstance {
    pub graph: CodeGraph,
    /// Ascending ids of the `<NAME-ME>` nodes.
    pub name_me: Vec<NodeId>,
    /// Name words, at most [`MAX_NAME_WORDS`], without the end marker.
    pub target: Vec<String>,
}

#[derive(Clone, Debug, PartialEq)]
pub enum Instance {
    Fitb(FitbInstance),
    VarNaming(VarNamingInstance),
}

impl Instance {
    pub fn graph(&self) -> &CodeGraph {
        match self {
            Instance::Fitb(i) => &i.graph,
            Instance::VarNaming(i) => &i.graph,
        }
    }

    pub fn task(&self) -> Task {
        match self {
            Instance::Fitb(_) => Task::Fitb,
            Instance::VarNaming(_) => Task::VarNaming,
        }
    }

    /// Nodes the instance is centred on.
    pub fn centers(&self) -> Vec<NodeId> {
        match self {
            Instance::Fitb(i) => alloc::vec![i.blank],
            Instance::VarNaming(i) => i.name_me.clone(),
        }
    }
}
