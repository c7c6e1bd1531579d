//! Node-scoring readout and binary cross-entropy loss for fill-in-the-blank.

use alloc::format;
use alloc::vec::Vec;

use rand::Rng;

use crate::error::ModelError;
use crate::gnn::GnnKind;
use crate::graph::{CodeGraph, NodeId, NodeKind};
use crate::tensor::{ParamId, ParamStore, Tape, Tensor, Var};

/// Probabilities are clipped to `[CLIP, 1 − CLIP]` inside the loss.
pub const CLIP: f64 = 1e-7;

/// Fully connected layers with `tanh` between them and a linear output.
#[derive(Clone, Debug, PartialEq)]
pub struct Mlp {
    layers: Vec<(ParamId, ParamId)>,
}

impl Mlp {
    /// `dims` lists the widths from input to output, e.g. `[128, 64, 1]`.
    pub fn new(prefix: &str, dims: &[usize], store: &mut ParamStore, rng: &mut impl Rng) -> Result<Self, ModelError> {
        if dims.len() < 2 || dims.contains(&0) {
            return Err(ModelError::ZeroWidth);
        }
        let mut layers = Vec::new();
        for (i, w) in dims.windows(2).enumerate() {
            let weight = store.glorot(&format!("{prefix}.{i}.weight"), w[0], w[1], rng)?;
            let bias = store.zeros(&format!("{prefix}.{i}.bias"), 1, w[1])?;
            layers.push((weight, bias));
        }
        Ok(Mlp { layers })
    }

    pub fn from_store(prefix: &str, depth: usize, store: &ParamStore) -> Result<Self, ModelError> {
        let mut layers = Vec::new();
        for i in 0..depth {
            layers.push((store.id(&format!("{prefix}.{i}.weight"))?, store.id(&format!("{prefix}.{i}.bias"))?));
        }
        Ok(Mlp { layers })
    }

    pub fn forward(&self, tape: &mut Tape, x: Var) -> Result<Var, ModelError> {
        let mut h = x;
        for (i, &(w, b)) in self.layers.iter().enumerate() {
            if i > 0 {
                h = tape.tanh(h);
            }
            let (w, b) = (tape.param(w), tape.param(b));
            let y = tape.matmul(h, w)?;
            h = tape.add_row(y, b)?;
        }
        Ok(h)
    }
}

/// Per-node probability that the node is the blanked variable.
///
/// GGNN: `p = σ(f1([h^T, h^0])) · σ(f2(h^T))`; DTNN and RGCN:
/// `p = σ(f(h^T))`, each `f` an MLP with one hidden layer.
#[derive(Clone, Debug, PartialEq)]
pub enum FitbReadout {
    Gated { f1: Mlp, f2: Mlp },
    Single { f: Mlp },
}

impl FitbReadout {
    pub fn new(kind: GnnKind, hidden: usize, store: &mut ParamStore, rng: &mut impl Rng) -> Result<Self, ModelError> {
        Ok(match kind {
            GnnKind::Ggnn => FitbReadout::Gated {
                f1: Mlp::new("readout.f1", &[2 * hidden, hidden, 1], store, rng)?,
                f2: Mlp::new("readout.f2", &[hidden, hidden, 1], store, rng)?,
            },
            GnnKind::Dtnn | GnnKind::Rgcn => FitbReadout::Single { f: Mlp::new("readout.f", &[hidden, hidden, 1], store, rng)? },
        })
    }

    pub fn from_store(kind: GnnKind, store: &ParamStore) -> Result<Self, ModelError> {
        Ok(match kind {
            GnnKind::Ggnn => FitbReadout::Gated {
                f1: Mlp::from_store("readout.f1", 2, store)?,
                f2: Mlp::from_store("readout.f2", 2, store)?,
            },
            GnnKind::Dtnn | GnnKind::Rgcn => FitbReadout::Single { f: Mlp::from_store("readout.f", 2, store)? },
        })
    }

    /// `N × 1` probabilities from initial and final states.
    pub fn scores(&self, tape: &mut Tape, h0: Var, ht: Var) -> Result<Var, ModelError> {
        match self {
            FitbReadout::Gated { f1, f2 } => {
                let both = tape.concat_cols(&[ht, h0])?;
                let a = f1.forward(tape, both)?;
                let a = tape.sigmoid(a);
                let b = f2.forward(tape, ht)?;
                let b = tape.sigmoid(b);
                Ok(tape.mul(a, b)?)
            }
            FitbReadout::Single { f } => {
                let a = f.forward(tape, ht)?;
                Ok(tape.sigmoid(a))
            }
        }
    }
}

/// Mean binary cross-entropy over all nodes with label 1 on `correct`.
/// Fails if any probability is NaN or outside `[0, 1]`.
pub fn fitb_loss(tape: &mut Tape, scores: Var, correct: &[NodeId]) -> Result<Var, ModelError> {
    let [n, cols] = tape.shape(scores);
    if cols != 1 {
        return Err(ModelError::Config(format!("expected one score per node, got {cols} columns")));
    }
    if let Some(&p) = tape.value(scores).data().iter().find(|p| !(0.0..=1.0).contains(*p)) {
        return Err(ModelError::ScoreOutOfRange(p));
    }
    let mut labels = Tensor::zeros(n, 1);
    for c in correct {
        if c.index() >= n {
            return Err(ModelError::MissingNode(c.index()));
        }
        labels.set(c.index(), 0, 1.0);
    }
    let p = tape.clamp(scores, CLIP, 1.0 - CLIP);
    let log_p = tape.log(p);
    let q = tape.affine(p, -1.0, 1.0);
    let log_q = tape.log(q);
    let y = tape.constant(labels.clone());
    let mut inv = labels;
    inv.data_mut().iter_mut().for_each(|v| *v = 1.0 - *v);
    let not_y = tape.constant(inv);
    let pos = tape.mul(y, log_p)?;
    let neg = tape.mul(not_y, log_q)?;
    let total = tape.add(pos, neg)?;
    let total = tape.sum(total);
    Ok(tape.scale(total, -1.0 / n as f64))
}

/// Variable nodes ordered by descending score, ties by ascending id.
pub fn rank_variables(g: &CodeGraph, scores: &[f64]) -> Vec<NodeId> {
    let mut ids: Vec<NodeId> = g.node_ids().filter(|&v| g.node(v).kind == NodeKind::Variable).collect();
    ids.sort_by(|a, b| scores[b.index()].total_cmp(&scores[a.index()]).then(a.cmp(b)));
    ids
}
