use alloc::string::String;

use thiserror::Error;

use crate::graph::GraphError;
use crate::tensor::TensorError;

/// Errors from embedding, message passing, readouts and instance building.
#[derive(Clone, Debug, Error, PartialEq)]
pub enum ModelError {
    #[error(transparent)]
    Tensor(#[from] TensorError),
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error("hidden width must be positive")]
    ZeroWidth,
    #[error("edge type `{0}` is not part of the model configuration")]
    UnknownEdgeType(String),
    #[error("{0} is empty")]
    Empty(&'static str),
    #[error("node {0} is outside the graph")]
    MissingNode(usize),
    #[error("score {0} is outside (0, 1)")]
    ScoreOutOfRange(f64),
    #[error("invalid configuration: {0}")]
    Config(String),
}
