use std::path::PathBuf;

use gsc_core::graph::GraphError;
use gsc_core::parser::ParseError;
use gsc_core::tensor::TensorError;
use gsc_core::ModelError;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum GscError {
    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
    #[error("{path}:{line}: {source}")]
    Json {
        path: PathBuf,
        line: usize,
        #[source]
        source: serde_json::Error,
    },
    #[error("{file}:{error}")]
    Parse { file: String, error: ParseError },
    #[error("empty corpus: no .{extension} files under {root}")]
    EmptyCorpus { root: PathBuf, extension: &'static str },
    #[error("{0}")]
    Split(String),
    #[error("config: {0}")]
    Config(String),
    #[error("non-finite loss on instance {instance} in epoch {epoch}")]
    NonFiniteLoss { instance: String, epoch: usize },
    #[error("instance {instance}: {source}")]
    Instance {
        instance: String,
        #[source]
        source: ModelError,
    },
    #[error("{0} is empty")]
    Empty(&'static str),
    #[error(transparent)]
    Model(#[from] ModelError),
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Tensor(#[from] TensorError),
}

impl GscError {
    pub fn io(path: impl Into<PathBuf>, source: std::io::Error) -> Self {
        GscError::Io { path: path.into(), source }
    }
}

pub type Result<T, E = GscError> = std::result::Result<T, E>;
