//! Message passing over typed directed multigraphs.
//!
//! Messages flow along edge direction: an edge `w → v` delivers a message
//! computed from `h_w` to `v`. Parameters are shared across rounds.

use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::str::FromStr;

use rand::Rng;

use crate::error::ModelError;
use crate::graph::{BaseEdge, CodeGraph, EdgeType};
use crate::tensor::{ParamId, ParamStore, Tape, Var};

/// Width of the learned per-type edge feature used by DTNN.
pub const DTNN_EDGE_DIM: usize = 16;
pub const DEFAULT_ROUNDS: usize = 8;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GnnKind {
    Ggnn,
    Dtnn,
    Rgcn,
}

impl GnnKind {
    pub const ALL: [GnnKind; 3] = [GnnKind::Ggnn, GnnKind::Dtnn, GnnKind::Rgcn];

    pub fn as_str(self) -> &'static str {
        match self {
            GnnKind::Ggnn => "ggnn",
            GnnKind::Dtnn => "dtnn",
            GnnKind::Rgcn => "rgcn",
        }
    }
}

impl FromStr for GnnKind {
    type Err = ModelError;

    fn from_str(s: &str) -> Result<Self, ModelError> {
        GnnKind::ALL
            .into_iter()
            .find(|k| k.as_str() == s)
            .ok_or_else(|| ModelError::Config(format!("unknown gnn `{s}`")))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GnnConfig {
    pub kind: GnnKind,
    pub hidden: usize,
    pub rounds: usize,
    /// Edge types that carry messages; each gets its own transform.
    pub edge_types: Vec<EdgeType>,
}

impl GnnConfig {
    pub fn new(kind: GnnKind, hidden: usize, edge_types: Vec<EdgeType>) -> Self {
        GnnConfig { kind, hidden, rounds: DEFAULT_ROUNDS, edge_types }
    }
}

/// Every edge type, forward and reversed.
pub fn all_edge_types() -> Vec<EdgeType> {
    BaseEdge::ALL.iter().flat_map(|&b| [EdgeType::forward(b), EdgeType::forward(b).reverse()]).collect()
}

/// Edges grouped by configured type, as `(sources, targets)` index lists.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EdgeIndex {
    pub nodes: usize,
    pub by_type: Vec<(Vec<usize>, Vec<usize>)>,
}

impl EdgeIndex {
    pub fn new(g: &CodeGraph, edge_types: &[EdgeType]) -> Result<Self, ModelError> {
        let mut by_type = vec![(Vec::new(), Vec::new()); edge_types.len()];
        for e in &g.edges {
            let slot = edge_types
                .iter()
                .position(|&t| t == e.ty)
                .ok_or_else(|| ModelError::UnknownEdgeType(format!("{}", e.ty)))?;
            by_type[slot].0.push(e.src.index());
            by_type[slot].1.push(e.dst.index());
        }
        Ok(EdgeIndex { nodes: g.len(), by_type })
    }

    /// Builds an index directly from `(src, dst, type slot)` triples.
    pub fn from_triples(nodes: usize, types: usize, edges: &[(usize, usize, usize)]) -> Result<Self, ModelError> {
        let mut by_type = vec![(Vec::new(), Vec::new()); types];
        for &(s, d, t) in edges {
            if s >= nodes || d >= nodes {
                return Err(ModelError::MissingNode(s.max(d)));
            }
            let slot = by_type.get_mut(t).ok_or_else(|| ModelError::UnknownEdgeType(format!("slot {t}")))?;
            slot.0.push(s);
            slot.1.push(d);
        }
        Ok(EdgeIndex { nodes, by_type })
    }

    pub fn edge_count(&self) -> usize {
        self.by_type.iter().map(|(s, _)| s.len()).sum()
    }
}

/// GRU cell `h' = h + z ⊙ (h̃ − h)` with
/// `r, z = σ(x W_{r,z} + h U_{r,z} + b_{r,z})` and
/// `h̃ = tanh(x W_h + (r ⊙ h) U_h + b_h)`.
#[derive(Clone, Debug, PartialEq)]
pub struct GruCell {
    pub input: usize,
    pub hidden: usize,
    w: ParamId,
    u_rz: ParamId,
    u_h: ParamId,
    b: ParamId,
}

impl GruCell {
    pub fn new(prefix: &str, input: usize, hidden: usize, store: &mut ParamStore, rng: &mut impl Rng) -> Result<Self, ModelError> {
        if input == 0 || hidden == 0 {
            return Err(ModelError::ZeroWidth);
        }
        Ok(GruCell {
            input,
            hidden,
            w: store.glorot(&format!("{prefix}.w"), input, 3 * hidden, rng)?,
            u_rz: store.glorot(&format!("{prefix}.u_rz"), hidden, 2 * hidden, rng)?,
            u_h: store.glorot(&format!("{prefix}.u_h"), hidden, hidden, rng)?,
            b: store.zeros(&format!("{prefix}.b"), 1, 3 * hidden)?,
        })
    }

    pub fn from_store(prefix: &str, store: &ParamStore) -> Result<Self, ModelError> {
        let w = store.id(&format!("{prefix}.w"))?;
        let hidden = store.value(w).cols() / 3;
        Ok(GruCell {
            input: store.value(w).rows(),
            hidden,
            w,
            u_rz: store.id(&format!("{prefix}.u_rz"))?,
            u_h: store.id(&format!("{prefix}.u_h"))?,
            b: store.id(&format!("{prefix}.b"))?,
        })
    }

    pub fn params(&self) -> [ParamId; 4] {
        [self.w, self.u_rz, self.u_h, self.b]
    }

    /// One step on a batch of rows: `x` is `N × input`, `h` is `N × hidden`.
    pub fn step(&self, tape: &mut Tape, x: Var, h: Var) -> Result<Var, ModelError> {
        let d = self.hidden;
        let (w, u_rz, u_h, b) = (tape.param(self.w), tape.param(self.u_rz), tape.param(self.u_h), tape.param(self.b));
        let xw = tape.matmul(x, w)?;
        let xw = tape.add_row(xw, b)?;
        let hu = tape.matmul(h, u_rz)?;
        let x_rz = tape.slice_cols(xw, 0, 2 * d)?;
        let gates = tape.add(x_rz, hu)?;
        let gates = tape.sigmoid(gates);
        let r = tape.slice_cols(gates, 0, d)?;
        let z = tape.slice_cols(gates, d, d)?;
        let rh = tape.mul(r, h)?;
        let rhu = tape.matmul(rh, u_h)?;
        let x_h = tape.slice_cols(xw, 2 * d, d)?;
        let cand = tape.add(x_h, rhu)?;
        let cand = tape.tanh(cand);
        let delta = tape.sub(cand, h)?;
        let delta = tape.mul(z, delta)?;
        Ok(tape.add(h, delta)?)
    }
}

#[derive(Clone, Debug, PartialEq)]
enum Variant {
    Ggnn { edges: Vec<(ParamId, ParamId)>, gru: GruCell },
    Rgcn { self_loop: ParamId, edges: Vec<ParamId> },
    Dtnn { edges: Vec<ParamId>, cf: (ParamId, ParamId), df: (ParamId, ParamId), fc: ParamId },
}

/// One GNN variant's parameters.
#[derive(Clone, Debug, PartialEq)]
pub struct Gnn {
    pub config: GnnConfig,
    variant: Variant,
}

fn edge_name(t: EdgeType, what: &str) -> String {
    format!("gnn.edge.{t}.{what}")
}

impl Gnn {
    pub fn new(config: GnnConfig, store: &mut ParamStore, rng: &mut impl Rng) -> Result<Self, ModelError> {
        let d = config.hidden;
        if d == 0 {
            return Err(ModelError::ZeroWidth);
        }
        let variant = match config.kind {
            GnnKind::Ggnn => {
                let mut edges = Vec::new();
                for &t in &config.edge_types {
                    let w = store.glorot(&edge_name(t, "weight"), d, d, rng)?;
                    let b = store.zeros(&edge_name(t, "bias"), 1, d)?;
                    edges.push((w, b));
                }
                Variant::Ggnn { edges, gru: GruCell::new("gnn.gru", d, d, store, rng)? }
            }
            GnnKind::Rgcn => {
                let self_loop = store.glorot("gnn.self.weight", d, d, rng)?;
                let mut edges = Vec::new();
                for &t in &config.edge_types {
                    edges.push(store.glorot(&edge_name(t, "weight"), d, d, rng)?);
                }
                Variant::Rgcn { self_loop, edges }
            }
            GnnKind::Dtnn => {
                let mut edges = Vec::new();
                for &t in &config.edge_types {
                    edges.push(store.uniform(&edge_name(t, "embedding"), 1, DTNN_EDGE_DIM, crate::embed::EMBED_INIT, rng)?);
                }
                let cf = (store.glorot("gnn.dtnn.cf.weight", d, d, rng)?, store.zeros("gnn.dtnn.cf.bias", 1, d)?);
                let df = (
                    store.glorot("gnn.dtnn.df.weight", DTNN_EDGE_DIM, d, rng)?,
                    store.zeros("gnn.dtnn.df.bias", 1, d)?,
                );
                let fc = store.glorot("gnn.dtnn.fc.weight", d, d, rng)?;
                Variant::Dtnn { edges, cf, df, fc }
            }
        };
        Ok(Gnn { config, variant })
    }

    pub fn from_store(config: GnnConfig, store: &ParamStore) -> Result<Self, ModelError> {
        let id = |s: &str| store.id(s);
        let variant = match config.kind {
            GnnKind::Ggnn => {
                let mut edges = Vec::new();
                for &t in &config.edge_types {
                    edges.push((id(&edge_name(t, "weight"))?, id(&edge_name(t, "bias"))?));
                }
                Variant::Ggnn { edges, gru: GruCell::from_store("gnn.gru", store)? }
            }
            GnnKind::Rgcn => {
                let mut edges = Vec::new();
                for &t in &config.edge_types {
                    edges.push(id(&edge_name(t, "weight"))?);
                }
                Variant::Rgcn { self_loop: id("gnn.self.weight")?, edges }
            }
            GnnKind::Dtnn => {
                let mut edges = Vec::new();
                for &t in &config.edge_types {
                    edges.push(id(&edge_name(t, "embedding"))?);
                }
                Variant::Dtnn {
                    edges,
                    cf: (id("gnn.dtnn.cf.weight")?, id("gnn.dtnn.cf.bias")?),
                    df: (id("gnn.dtnn.df.weight")?, id("gnn.dtnn.df.bias")?),
                    fc: id("gnn.dtnn.fc.weight")?,
                }
            }
        };
        Ok(Gnn { config, variant })
    }

    pub fn params(&self) -> Vec<ParamId> {
        match &self.variant {
            Variant::Ggnn { edges, gru } => edges.iter().flat_map(|&(w, b)| [w, b]).chain(gru.params()).collect(),
            Variant::Rgcn { self_loop, edges } => core::iter::once(*self_loop).chain(edges.iter().copied()).collect(),
            Variant::Dtnn { edges, cf, df, fc } => {
                edges.iter().copied().chain([cf.0, cf.1, df.0, df.1, *fc]).collect()
            }
        }
    }

    /// Exact number of learnable scalars in this model.
    pub fn count_parameters(&self, store: &ParamStore) -> usize {
        self.params().iter().map(|&p| store.value(p).len()).sum()
    }

    /// Runs `config.rounds` rounds from `h0` (`N × hidden`) and returns the
    /// states of every round, `h^0` first.
    pub fn forward(&self, tape: &mut Tape, h0: Var, index: &EdgeIndex) -> Result<Vec<Var>, ModelError> {
        let [rows, cols] = tape.shape(h0);
        if rows != index.nodes {
            return Err(ModelError::MissingNode(rows.min(index.nodes)));
        }
        if cols != self.config.hidden {
            return Err(ModelError::Config(format!("initial states have width {cols}, expected {}", self.config.hidden)));
        }
        if index.by_type.len() != self.config.edge_types.len() {
            return Err(ModelError::Config("edge index does not match the configured edge types".into()));
        }
        let mut states = vec![h0];
        for _ in 0..self.config.rounds {
            let h = *states.last().unwrap_or(&h0);
            let next = match &self.variant {
                Variant::Ggnn { edges, gru } => {
                    let m = self.ggnn_messages(tape, h, index, edges)?;
                    gru.step(tape, m, h)?
                }
                Variant::Rgcn { self_loop, edges } => self.rgcn_round(tape, h, index, *self_loop, edges)?,
                Variant::Dtnn { edges, cf, df, fc } => {
                    let m = self.dtnn_messages(tape, h, index, edges, *cf, *df, *fc)?;
                    tape.add(h, m)?
                }
            };
            states.push(next);
        }
        Ok(states)
    }

    /// Sums per-edge message rows into their targets; zero when no edges.
    fn deliver(&self, tape: &mut Tape, parts: Vec<Var>, dst: Vec<usize>, n: usize) -> Result<Var, ModelError> {
        if parts.is_empty() {
            return Ok(tape.constant(crate::tensor::Tensor::zeros(n, self.config.hidden)));
        }
        let all = if parts.len() == 1 { parts[0] } else { tape.concat_rows(&parts)? };
        Ok(tape.scatter_add_rows(all, &dst, n)?)
    }

    /// `src_rows · W` for one edge type, transforming whichever side is smaller.
    fn transform_sources(tape: &mut Tape, h: Var, src: &[usize], w: Var, n: usize) -> Result<Var, ModelError> {
        if src.len() <= n {
            let x = tape.gather_rows(h, src)?;
            Ok(tape.matmul(x, w)?)
        } else {
            let all = tape.matmul(h, w)?;
            Ok(tape.gather_rows(all, src)?)
        }
    }

    fn ggnn_messages(&self, tape: &mut Tape, h: Var, index: &EdgeIndex, edges: &[(ParamId, ParamId)]) -> Result<Var, ModelError> {
        let mut parts = Vec::new();
        let mut dst = Vec::new();
        for ((s, d), &(w, b)) in index.by_type.iter().zip(edges) {
            if s.is_empty() {
                continue;
            }
            let (w, b) = (tape.param(w), tape.param(b));
            let m = Self::transform_sources(tape, h, s, w, index.nodes)?;
            parts.push(tape.add_row(m, b)?);
            dst.extend_from_slice(d);
        }
        self.deliver(tape, parts, dst, index.nodes)
    }

    fn rgcn_round(&self, tape: &mut Tape, h: Var, index: &EdgeIndex, self_loop: ParamId, edges: &[ParamId]) -> Result<Var, ModelError> {
        let n = index.nodes;
        let mut parts = Vec::new();
        let mut dst = Vec::new();
        for ((s, d), &w) in index.by_type.iter().zip(edges) {
            if s.is_empty() {
                continue;
            }
            let mut indeg = vec![0usize; n];
            for &v in d {
                indeg[v] += 1;
            }
            let norm: Vec<f64> = d.iter().map(|&v| 1.0 / indeg[v] as f64).collect();
            let w = tape.param(w);
            let m = Self::transform_sources(tape, h, s, w, n)?;
            parts.push(tape.scale_rows(m, &norm)?);
            dst.extend_from_slice(d);
        }
        let m = self.deliver(tape, parts, dst, n)?;
        let w0 = tape.param(self_loop);
        let own = tape.matmul(h, w0)?;
        let pre = tape.add(own, m)?;
        Ok(tape.relu(pre))
    }

    #[allow(clippy::too_many_arguments)]
    fn dtnn_messages(
        &self,
        tape: &mut Tape,
        h: Var,
        index: &EdgeIndex,
        edges: &[ParamId],
        cf: (ParamId, ParamId),
        df: (ParamId, ParamId),
        fc: ParamId,
    ) -> Result<Var, ModelError> {
        let mut parts = Vec::new();
        let mut dst = Vec::new();
        let mut node_factor = None;
        let (wdf, bdf) = (tape.param(df.0), tape.param(df.1));
        for ((s, d), &e) in index.by_type.iter().zip(edges) {
            if s.is_empty() {
                continue;
            }
            let hf = match node_factor {
                Some(v) => v,
                None => {
                    let (wcf, bcf) = (tape.param(cf.0), tape.param(cf.1));
                    let x = tape.matmul(h, wcf)?;
                    let v = tape.add_row(x, bcf)?;
                    node_factor = Some(v);
                    v
                }
            };
            let e = tape.param(e);
            let ef = tape.matmul(e, wdf)?;
            let ef = tape.add_row(ef, bdf)?;
            let src = tape.gather_rows(hf, s)?;
            let ef = tape.gather_rows(ef, &vec![0; s.len()])?;
            parts.push(tape.mul(src, ef)?);
            dst.extend_from_slice(d);
        }
        if parts.is_empty() {
            return self.deliver(tape, parts, dst, index.nodes);
        }
        let all = if parts.len() == 1 { parts[0] } else { tape.concat_rows(&parts)? };
        let wfc = tape.param(fc);
        let m = tape.matmul(all, wfc)?;
        let m = tape.tanh(m);
        Ok(tape.scatter_add_rows(m, &dst, index.nodes)?)
    }
}
