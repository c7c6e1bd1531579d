//! Named parameters, gradient buffers and the Adam optimizer.

use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec::Vec;

use rand::Rng;

use super::{Tensor, TensorError};
use crate::math;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ParamId(pub usize);

#[derive(Clone, Debug, PartialEq)]
pub struct Parameter {
    pub name: String,
    pub value: Tensor,
    pub adam_m: Tensor,
    pub adam_v: Tensor,
    pub step_count: u64,
}

/// Parameters addressed by stable hierarchical names such as
/// `ggnn.edge.AST.weight`.
#[derive(Clone, Debug, Default, PartialEq)]
pub struct ParamStore {
    params: Vec<Parameter>,
    index: BTreeMap<String, ParamId>,
}

impl ParamStore {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn add(&mut self, name: &str, value: Tensor) -> Result<ParamId, TensorError> {
        if self.index.contains_key(name) {
            return Err(TensorError::DuplicateParameter(name.into()));
        }
        let id = ParamId(self.params.len());
        let [r, c] = value.shape();
        self.params.push(Parameter {
            name: name.into(),
            value,
            adam_m: Tensor::zeros(r, c),
            adam_v: Tensor::zeros(r, c),
            step_count: 0,
        });
        self.index.insert(name.into(), id);
        Ok(id)
    }

    /// Uniform in `[-a, a]` with `a = sqrt(6 / (fan_in + fan_out))`, where
    /// `fan_in = rows` and `fan_out = cols`.
    pub fn glorot(&mut self, name: &str, rows: usize, cols: usize, rng: &mut impl Rng) -> Result<ParamId, TensorError> {
        let a = math::sqrt(6.0 / (rows + cols) as f64);
        self.uniform(name, rows, cols, a, rng)
    }

    pub fn uniform(
        &mut self,
        name: &str,
        rows: usize,
        cols: usize,
        a: f64,
        rng: &mut impl Rng,
    ) -> Result<ParamId, TensorError> {
        let data = (0..rows * cols).map(|_| rng.gen_range(-a..=a)).collect();
        self.add(name, Tensor::new(rows, cols, data)?)
    }

    pub fn zeros(&mut self, name: &str, rows: usize, cols: usize) -> Result<ParamId, TensorError> {
        self.add(name, Tensor::zeros(rows, cols))
    }

    pub fn len(&self) -> usize {
        self.params.len()
    }

    pub fn is_empty(&self) -> bool {
        self.params.is_empty()
    }

    pub fn get(&self, id: ParamId) -> &Parameter {
        &self.params[id.0]
    }

    pub fn get_mut(&mut self, id: ParamId) -> &mut Parameter {
        &mut self.params[id.0]
    }

    pub fn value(&self, id: ParamId) -> &Tensor {
        &self.params[id.0].value
    }

    pub fn id(&self, name: &str) -> Result<ParamId, TensorError> {
        self.index.get(name).copied().ok_or_else(|| TensorError::UnknownParameter(name.into()))
    }

    pub fn iter(&self) -> impl Iterator<Item = (ParamId, &Parameter)> {
        self.params.iter().enumerate().map(|(i, p)| (ParamId(i), p))
    }

    /// Total number of learnable scalars.
    pub fn scalar_count(&self) -> usize {
        self.params.iter().map(|p| p.value.len()).sum()
    }

    /// Replaces a parameter's value, keeping its shape.
    pub fn set_value(&mut self, id: ParamId, value: Tensor) -> Result<(), TensorError> {
        let p = &mut self.params[id.0];
        if p.value.shape() != value.shape() {
            return Err(TensorError::ShapeMismatch { op: "set_value", left: p.value.shape(), right: value.shape() });
        }
        p.value = value;
        Ok(())
    }
}

/// Gradient accumulators, one optional buffer per parameter.
#[derive(Clone, Debug, Default, PartialEq)]
pub struct Grads {
    grads: Vec<Option<Tensor>>,
}

impl Grads {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn accumulate(&mut self, id: ParamId, g: &Tensor) {
        if self.grads.len() <= id.0 {
            self.grads.resize(id.0 + 1, None);
        }
        match &mut self.grads[id.0] {
            Some(acc) => acc.add_assign(g),
            slot @ None => *slot = Some(g.clone()),
        }
    }

    pub fn merge(&mut self, other: &Grads) {
        for (i, g) in other.grads.iter().enumerate() {
            if let Some(g) = g {
                self.accumulate(ParamId(i), g);
            }
        }
    }

    pub fn get(&self, id: ParamId) -> Option<&Tensor> {
        self.grads.get(id.0).and_then(Option::as_ref)
    }

    pub fn scale(&mut self, s: f64) {
        for g in self.grads.iter_mut().flatten() {
            g.scale(s);
        }
    }

    pub fn is_empty(&self) -> bool {
        self.grads.iter().all(Option::is_none)
    }

    pub fn clear(&mut self) {
        self.grads.clear();
    }

    pub fn all_finite(&self) -> bool {
        self.grads.iter().flatten().all(Tensor::all_finite)
    }
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Adam {
    pub lr: f64,
    pub beta1: f64,
    pub beta2: f64,
    pub eps: f64,
}

impl Default for Adam {
    fn default() -> Self {
        Adam { lr: 1e-3, beta1: 0.9, beta2: 0.999, eps: 1e-8 }
    }
}

impl Adam {
    pub fn with_lr(lr: f64) -> Self {
        Adam { lr, ..Adam::default() }
    }

    /// One bias-corrected Adam step for every parameter that has a gradient.
    /// Parameters without a gradient keep their moments and step count.
    /// Clears `grads` afterwards.
    pub fn step(&self, store: &mut ParamStore, grads: &mut Grads) -> Result<(), TensorError> {
        if grads.is_empty() {
            return Err(TensorError::MissingGradients);
        }
        for (i, g) in grads.grads.iter().enumerate() {
            let Some(g) = g else { continue };
            let p = &mut store.params[i];
            if p.value.shape() != g.shape() {
                return Err(TensorError::ShapeMismatch { op: "adam", left: p.value.shape(), right: g.shape() });
            }
            p.step_count += 1;
            let t = p.step_count as f64;
            let bc1 = 1.0 - libm::pow(self.beta1, t);
            let bc2 = 1.0 - libm::pow(self.beta2, t);
            let m = p.adam_m.data_mut();
            let v = p.adam_v.data_mut();
            let w = p.value.data_mut();
            for (j, &gj) in g.data().iter().enumerate() {
                m[j] = self.beta1 * m[j] + (1.0 - self.beta1) * gj;
                v[j] = self.beta2 * v[j] + (1.0 - self.beta2) * gj * gj;
                let mhat = m[j] / bc1;
                let vhat = v[j] / bc2;
                w[j] -= self.lr * mhat / (math::sqrt(vhat) + self.eps);
            }
        }
        grads.clear();
        Ok(())
    }
}
