//! Reverse-mode automatic differentiation over a flat operation tape.

use alloc::vec::Vec;

use super::param::{Grads, ParamId, ParamStore};
use super::{axpy, dot, matmul_acc, transpose_data, Tensor, TensorError};
use crate::math;

/// Handle to a value recorded on a [`Tape`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Var(usize);

#[derive(Clone, Debug)]
enum Op {
    Constant,
    Leaf,
    Param(ParamId),
    MatMul(Var, Var),
    Transpose(Var),
    Add(Var, Var),
    Sub(Var, Var),
    Mul(Var, Var),
    AddRow(Var, Var),
    MulScalar(Var, Var),
    Affine(Var, f64),
    Sigmoid(Var),
    Tanh(Var),
    Relu(Var),
    Exp(Var),
    Log(Var),
    Clamp(Var, f64, f64),
    SoftmaxRows(Var),
    LogSoftmaxRows(Var),
    ConcatCols(Vec<Var>),
    ConcatRows(Vec<Var>),
    MeanRows(Var),
    SumCols(Var),
    SumAll(Var),
    MaxPoolRows(Var, Vec<usize>),
    GatherRows(Var, Vec<usize>),
    ScatterAddRows(Var, Vec<usize>),
    ScaleRows(Var, Vec<f64>),
    Conv1d { x: Var, w: Var, b: Var, width: usize, pad: usize },
    Pick(Var, usize, usize),
    SliceRows(Var, usize),
    SliceCols(Var, usize),
}

struct Entry {
    /// `None` for parameters, whose value lives in the store.
    value: Option<Tensor>,
    op: Op,
    needs_grad: bool,
}

/// Records operations for one forward pass. Parameters are read from the
/// borrowed store without copying.
pub struct Tape<'p> {
    store: &'p ParamStore,
    entries: Vec<Entry>,
    param_vars: Vec<Option<Var>>,
    grads: Vec<Option<Tensor>>,
}

fn mismatch(op: &'static str, a: &Tensor, b: &Tensor) -> TensorError {
    TensorError::ShapeMismatch { op, left: a.shape(), right: b.shape() }
}

fn map(t: &Tensor, f: impl Fn(f64) -> f64) -> Tensor {
    let data = t.data().iter().map(|&x| f(x)).collect();
    Tensor::new(t.rows(), t.cols(), data).expect("same shape")
}

fn softmax_row(x: &[f64], out: &mut [f64]) {
    let max = x.iter().copied().fold(f64::NEG_INFINITY, f64::max);
    let mut sum = 0.0;
    for (o, &v) in out.iter_mut().zip(x) {
        *o = math::exp(v - max);
        sum += *o;
    }
    for o in out.iter_mut() {
        *o /= sum;
    }
}

impl<'p> Tape<'p> {
    pub fn new(store: &'p ParamStore) -> Self {
        Tape { store, entries: Vec::new(), param_vars: alloc::vec![None; store.len()], grads: Vec::new() }
    }

    pub fn store(&self) -> &'p ParamStore {
        self.store
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn value(&self, v: Var) -> &Tensor {
        let e = &self.entries[v.0];
        match (&e.value, &e.op) {
            (Some(t), _) => t,
            (None, Op::Param(id)) => self.store.value(*id),
            (None, _) => unreachable!("only parameters are stored by reference"),
        }
    }

    pub fn shape(&self, v: Var) -> [usize; 2] {
        self.value(v).shape()
    }

    fn push(&mut self, value: Tensor, op: Op, needs_grad: bool) -> Var {
        self.entries.push(Entry { value: Some(value), op, needs_grad });
        Var(self.entries.len() - 1)
    }

    fn ng(&self, v: Var) -> bool {
        self.entries[v.0].needs_grad
    }

    /// Input that receives no gradient.
    pub fn constant(&mut self, t: Tensor) -> Var {
        self.push(t, Op::Constant, false)
    }

    /// Input whose gradient is kept and readable through [`Tape::grad`].
    pub fn leaf(&mut self, t: Tensor) -> Var {
        self.push(t, Op::Leaf, true)
    }

    /// A parameter; repeated calls return the same variable.
    pub fn param(&mut self, id: ParamId) -> Var {
        if let Some(v) = self.param_vars[id.0] {
            return v;
        }
        self.entries.push(Entry { value: None, op: Op::Param(id), needs_grad: true });
        let v = Var(self.entries.len() - 1);
        self.param_vars[id.0] = Some(v);
        v
    }

    pub fn matmul(&mut self, a: Var, b: Var) -> Result<Var, TensorError> {
        let (ta, tb) = (self.value(a), self.value(b));
        if ta.cols() != tb.rows() {
            return Err(mismatch("matmul", ta, tb));
        }
        let (m, k, n) = (ta.rows(), ta.cols(), tb.cols());
        let mut out = Tensor::zeros(m, n);
        matmul_acc(ta.data(), tb.data(), out.data_mut(), m, k, n);
        let ng = self.ng(a) || self.ng(b);
        Ok(self.push(out, Op::MatMul(a, b), ng))
    }

    pub fn transpose(&mut self, a: Var) -> Var {
        let t = self.value(a);
        let mut out = Tensor::zeros(t.cols(), t.rows());
        for r in 0..t.rows() {
            for c in 0..t.cols() {
                out.set(c, r, t.get(r, c));
            }
        }
        let ng = self.ng(a);
        self.push(out, Op::Transpose(a), ng)
    }

    fn zip(&mut self, a: Var, b: Var, name: &'static str, f: impl Fn(f64, f64) -> f64, op: Op) -> Result<Var, TensorError> {
        let (ta, tb) = (self.value(a), self.value(b));
        if ta.shape() != tb.shape() {
            return Err(mismatch(name, ta, tb));
        }
        let data = ta.data().iter().zip(tb.data()).map(|(&x, &y)| f(x, y)).collect();
        let out = Tensor::new(ta.rows(), ta.cols(), data)?;
        let ng = self.ng(a) || self.ng(b);
        Ok(self.push(out, op, ng))
    }

    pub fn add(&mut self, a: Var, b: Var) -> Result<Var, TensorError> {
        self.zip(a, b, "add", |x, y| x + y, Op::Add(a, b))
    }

    pub fn sub(&mut self, a: Var, b: Var) -> Result<Var, TensorError> {
        self.zip(a, b, "sub", |x, y| x - y, Op::Sub(a, b))
    }

    /// Elementwise product.
    pub fn mul(&mut self, a: Var, b: Var) -> Result<Var, TensorError> {
        self.zip(a, b, "mul", |x, y| x * y, Op::Mul(a, b))
    }

    /// Adds the `1 × n` row `b` to every row of `a`.
    pub fn add_row(&mut self, a: Var, b: Var) -> Result<Var, TensorError> {
        let (ta, tb) = (self.value(a), self.value(b));
        if tb.rows() != 1 || tb.cols() != ta.cols() {
            return Err(mismatch("add_row", ta, tb));
        }
        let mut out = ta.clone();
        for r in 0..out.rows() {
            axpy(1.0, tb.data(), out.row_mut(r));
        }
        let ng = self.ng(a) || self.ng(b);
        Ok(self.push(out, Op::AddRow(a, b), ng))
    }

    /// Multiplies every element of `a` by the `1 × 1` value `s`.
    pub fn mul_scalar(&mut self, a: Var, s: Var) -> Result<Var, TensorError> {
        let (ta, ts) = (self.value(a), self.value(s));
        if ts.shape() != [1, 1] {
            return Err(mismatch("mul_scalar", ta, ts));
        }
        let k = ts.item();
        let out = map(ta, |x| x * k);
        let ng = self.ng(a) || self.ng(s);
        Ok(self.push(out, Op::MulScalar(a, s), ng))
    }

    /// `scale * a + shift`, constants fixed at record time.
    pub fn affine(&mut self, a: Var, scale: f64, shift: f64) -> Var {
        let out = map(self.value(a), |x| scale * x + shift);
        let ng = self.ng(a);
        self.push(out, Op::Affine(a, scale), ng)
    }

    pub fn scale(&mut self, a: Var, s: f64) -> Var {
        self.affine(a, s, 0.0)
    }

    fn unary(&mut self, a: Var, f: impl Fn(f64) -> f64, op: Op) -> Var {
        let out = map(self.value(a), f);
        let ng = self.ng(a);
        self.push(out, op, ng)
    }

    pub fn sigmoid(&mut self, a: Var) -> Var {
        self.unary(a, math::sigmoid, Op::Sigmoid(a))
    }

    pub fn tanh(&mut self, a: Var) -> Var {
        self.unary(a, math::tanh, Op::Tanh(a))
    }

    pub fn relu(&mut self, a: Var) -> Var {
        self.unary(a, |x| if x > 0.0 { x } else { 0.0 }, Op::Relu(a))
    }

    pub fn exp(&mut self, a: Var) -> Var {
        self.unary(a, math::exp, Op::Exp(a))
    }

    pub fn log(&mut self, a: Var) -> Var {
        self.unary(a, math::ln, Op::Log(a))
    }

    /// Clamps into `[lo, hi]`; the gradient is zero where clamping applied.
    pub fn clamp(&mut self, a: Var, lo: f64, hi: f64) -> Var {
        self.unary(a, |x| x.clamp(lo, hi), Op::Clamp(a, lo, hi))
    }

    /// Softmax of each row, shifted by the row maximum.
    pub fn softmax_rows(&mut self, a: Var) -> Var {
        let t = self.value(a);
        let mut out = Tensor::zeros(t.rows(), t.cols());
        for r in 0..t.rows() {
            softmax_row(t.row(r), out.row_mut(r));
        }
        let ng = self.ng(a);
        self.push(out, Op::SoftmaxRows(a), ng)
    }

    pub fn log_softmax_rows(&mut self, a: Var) -> Var {
        let t = self.value(a);
        let mut out = Tensor::zeros(t.rows(), t.cols());
        for r in 0..t.rows() {
            let x = t.row(r);
            let max = x.iter().copied().fold(f64::NEG_INFINITY, f64::max);
            let lse = max + math::ln(x.iter().map(|&v| math::exp(v - max)).sum::<f64>());
            for (o, &v) in out.row_mut(r).iter_mut().zip(x) {
                *o = v - lse;
            }
        }
        let ng = self.ng(a);
        self.push(out, Op::LogSoftmaxRows(a), ng)
    }

    pub fn concat_cols(&mut self, parts: &[Var]) -> Result<Var, TensorError> {
        let rows = self.value(parts[0]).rows();
        let mut cols = 0;
        for &p in parts {
            let t = self.value(p);
            if t.rows() != rows {
                return Err(mismatch("concat_cols", self.value(parts[0]), t));
            }
            cols += t.cols();
        }
        let mut out = Tensor::zeros(rows, cols);
        for r in 0..rows {
            let mut off = 0;
            for &p in parts {
                let src = self.value(p).row(r);
                out.row_mut(r)[off..off + src.len()].copy_from_slice(src);
                off += src.len();
            }
        }
        let ng = parts.iter().any(|&p| self.ng(p));
        Ok(self.push(out, Op::ConcatCols(parts.to_vec()), ng))
    }

    pub fn concat_rows(&mut self, parts: &[Var]) -> Result<Var, TensorError> {
        let cols = self.value(parts[0]).cols();
        let mut data = Vec::new();
        for &p in parts {
            let t = self.value(p);
            if t.cols() != cols {
                return Err(mismatch("concat_rows", self.value(parts[0]), t));
            }
            data.extend_from_slice(t.data());
        }
        let rows = data.len() / cols.max(1);
        let out = Tensor::new(rows, cols, data)?;
        let ng = parts.iter().any(|&p| self.ng(p));
        Ok(self.push(out, Op::ConcatRows(parts.to_vec()), ng))
    }

    /// Column-wise mean over rows: `m × n → 1 × n`.
    pub fn mean_rows(&mut self, a: Var) -> Result<Var, TensorError> {
        let t = self.value(a);
        if t.rows() == 0 {
            return Err(TensorError::InvalidShape { op: "mean_rows", shape: t.shape(), reason: "no rows" });
        }
        let mut out = Tensor::zeros(1, t.cols());
        for r in 0..t.rows() {
            axpy(1.0, t.row(r), out.data_mut());
        }
        out.scale(1.0 / t.rows() as f64);
        let ng = self.ng(a);
        Ok(self.push(out, Op::MeanRows(a), ng))
    }

    /// Row sums: `m × n → m × 1`.
    pub fn sum_cols(&mut self, a: Var) -> Var {
        let t = self.value(a);
        let data = (0..t.rows()).map(|r| t.row(r).iter().sum()).collect();
        let out = Tensor::new(t.rows(), 1, data).expect("shape");
        let ng = self.ng(a);
        self.push(out, Op::SumCols(a), ng)
    }

    pub fn sum(&mut self, a: Var) -> Var {
        let s = self.value(a).data().iter().sum();
        let ng = self.ng(a);
        self.push(Tensor::scalar(s), Op::SumAll(a), ng)
    }

    pub fn mean(&mut self, a: Var) -> Result<Var, TensorError> {
        let n = self.value(a).len();
        if n == 0 {
            return Err(TensorError::InvalidShape { op: "mean", shape: self.shape(a), reason: "empty" });
        }
        let s = self.sum(a);
        Ok(self.scale(s, 1.0 / n as f64))
    }

    /// Column-wise maximum over rows: `m × n → 1 × n`. Ties go to the first row.
    pub fn max_pool_rows(&mut self, a: Var) -> Result<Var, TensorError> {
        let t = self.value(a);
        if t.rows() == 0 {
            return Err(TensorError::InvalidShape { op: "max_pool_rows", shape: t.shape(), reason: "no rows" });
        }
        let mut arg = alloc::vec![0usize; t.cols()];
        let mut out = Tensor::from_row(t.row(0));
        for r in 1..t.rows() {
            for (c, &v) in t.row(r).iter().enumerate() {
                if v > out.data()[c] {
                    out.data_mut()[c] = v;
                    arg[c] = r;
                }
            }
        }
        let ng = self.ng(a);
        Ok(self.push(out, Op::MaxPoolRows(a, arg), ng))
    }

    /// Embedding lookup: row `idx[i]` of `table` becomes row `i`.
    pub fn gather_rows(&mut self, table: Var, idx: &[usize]) -> Result<Var, TensorError> {
        let t = self.value(table);
        let cols = t.cols();
        let mut data = Vec::with_capacity(idx.len() * cols);
        for &i in idx {
            if i >= t.rows() {
                return Err(TensorError::IndexOutOfRange { op: "gather_rows", index: i, len: t.rows() });
            }
            data.extend_from_slice(t.row(i));
        }
        let out = Tensor::new(idx.len(), cols, data)?;
        let ng = self.ng(table);
        Ok(self.push(out, Op::GatherRows(table, idx.to_vec()), ng))
    }

    /// `out[idx[i]] += a[i]` into a zero matrix with `rows` rows.
    pub fn scatter_add_rows(&mut self, a: Var, idx: &[usize], rows: usize) -> Result<Var, TensorError> {
        let t = self.value(a);
        if idx.len() != t.rows() {
            return Err(TensorError::InvalidShape { op: "scatter_add_rows", shape: t.shape(), reason: "index count differs from rows" });
        }
        let mut out = Tensor::zeros(rows, t.cols());
        for (i, &d) in idx.iter().enumerate() {
            if d >= rows {
                return Err(TensorError::IndexOutOfRange { op: "scatter_add_rows", index: d, len: rows });
            }
            axpy(1.0, t.row(i), out.row_mut(d));
        }
        let ng = self.ng(a);
        Ok(self.push(out, Op::ScatterAddRows(a, idx.to_vec()), ng))
    }

    /// Multiplies row `i` by `factors[i]`.
    pub fn scale_rows(&mut self, a: Var, factors: &[f64]) -> Result<Var, TensorError> {
        let t = self.value(a);
        if factors.len() != t.rows() {
            return Err(TensorError::InvalidShape { op: "scale_rows", shape: t.shape(), reason: "factor count differs from rows" });
        }
        let mut out = t.clone();
        for (r, &f) in factors.iter().enumerate() {
            out.row_mut(r).iter_mut().for_each(|x| *x *= f);
        }
        let ng = self.ng(a);
        Ok(self.push(out, Op::ScaleRows(a, factors.to_vec()), ng))
    }

    /// 1-D convolution over rows (positions) of `x: L × c_in`. `w` has shape
    /// `(width · c_in) × c_out` with row `j · c_in + c` holding kernel offset
    /// `j` for input channel `c`; `b` is `1 × c_out`. Output length is
    /// `L + 2·pad − width + 1`.
    pub fn conv1d(&mut self, x: Var, w: Var, b: Var, width: usize, pad: usize) -> Result<Var, TensorError> {
        let (tx, tw, tb) = (self.value(x), self.value(w), self.value(b));
        let (len, cin, cout) = (tx.rows(), tx.cols(), tw.cols());
        if tw.rows() != width * cin {
            return Err(mismatch("conv1d", tx, tw));
        }
        if tb.shape() != [1, cout] {
            return Err(mismatch("conv1d", tw, tb));
        }
        if len + 2 * pad < width {
            return Err(TensorError::InvalidShape { op: "conv1d", shape: tx.shape(), reason: "sequence shorter than kernel" });
        }
        let out_len = len + 2 * pad + 1 - width;
        let mut out = Tensor::zeros(out_len, cout);
        for t in 0..out_len {
            let orow = out.row_mut(t);
            orow.copy_from_slice(tb.data());
            for j in 0..width {
                let Some(src) = (t + j).checked_sub(pad).filter(|&s| s < len) else { continue };
                for (c, &xv) in tx.row(src).iter().enumerate() {
                    if xv != 0.0 {
                        axpy(xv, tw.row(j * cin + c), orow);
                    }
                }
            }
        }
        let ng = self.ng(x) || self.ng(w) || self.ng(b);
        Ok(self.push(out, Op::Conv1d { x, w, b, width, pad }, ng))
    }

    /// The single element `(r, c)` as a `1 × 1` tensor.
    pub fn pick(&mut self, a: Var, r: usize, c: usize) -> Result<Var, TensorError> {
        let t = self.value(a);
        if r >= t.rows() || c >= t.cols() {
            return Err(TensorError::IndexOutOfRange { op: "pick", index: r * t.cols() + c, len: t.len() });
        }
        let v = t.get(r, c);
        let ng = self.ng(a);
        Ok(self.push(Tensor::scalar(v), Op::Pick(a, r, c), ng))
    }

    pub fn slice_rows(&mut self, a: Var, start: usize, len: usize) -> Result<Var, TensorError> {
        let t = self.value(a);
        if start + len > t.rows() {
            return Err(TensorError::IndexOutOfRange { op: "slice_rows", index: start + len, len: t.rows() });
        }
        let data = t.data()[start * t.cols()..(start + len) * t.cols()].to_vec();
        let out = Tensor::new(len, t.cols(), data)?;
        let ng = self.ng(a);
        Ok(self.push(out, Op::SliceRows(a, start), ng))
    }

    pub fn slice_cols(&mut self, a: Var, start: usize, len: usize) -> Result<Var, TensorError> {
        let t = self.value(a);
        if start + len > t.cols() {
            return Err(TensorError::IndexOutOfRange { op: "slice_cols", index: start + len, len: t.cols() });
        }
        let mut out = Tensor::zeros(t.rows(), len);
        for r in 0..t.rows() {
            out.row_mut(r).copy_from_slice(&t.row(r)[start..start + len]);
        }
        let ng = self.ng(a);
        Ok(self.push(out, Op::SliceCols(a, start), ng))
    }

    /// Gradient of a leaf or parameter variable after [`Tape::backward`].
    pub fn grad(&self, v: Var) -> Option<&Tensor> {
        self.grads.get(v.0).and_then(Option::as_ref)
    }

    /// Back-propagates from the scalar `loss`, adding parameter gradients
    /// into `grads`.
    pub fn backward(&mut self, loss: Var, grads: &mut Grads) -> Result<(), TensorError> {
        let shape = self.shape(loss);
        if shape != [1, 1] {
            return Err(TensorError::NonScalarLoss(shape));
        }
        let n = self.entries.len();
        let mut g: Vec<Option<Tensor>> = Vec::new();
        g.resize_with(n, || None);
        g[loss.0] = Some(Tensor::scalar(1.0));
        for i in (0..=loss.0).rev() {
            if !self.entries[i].needs_grad {
                continue;
            }
            let Some(gout) = g[i].take() else { continue };
            match &self.entries[i].op {
                Op::Leaf | Op::Param(_) => {
                    g[i] = Some(gout);
                    continue;
                }
                _ => {}
            }
            self.backprop_one(i, &gout, &mut g);
        }
        for (i, e) in self.entries.iter().enumerate() {
            if let (Op::Param(id), Some(gr)) = (&e.op, &g[i]) {
                grads.accumulate(*id, gr);
            }
        }
        self.grads = g;
        Ok(())
    }

    fn acc(&self, g: &mut [Option<Tensor>], v: Var, delta: Tensor) {
        if !self.entries[v.0].needs_grad {
            return;
        }
        match &mut g[v.0] {
            Some(t) => t.add_assign(&delta),
            slot @ None => *slot = Some(delta),
        }
    }

    /// Adds `f(slot)` in place, allocating a zero slot first if needed.
    fn acc_with(&self, g: &mut [Option<Tensor>], v: Var, f: impl FnOnce(&mut Tensor)) {
        if !self.entries[v.0].needs_grad {
            return;
        }
        let slot = g[v.0].get_or_insert_with(|| {
            let [r, c] = self.value(v).shape();
            Tensor::zeros(r, c)
        });
        f(slot);
    }

    fn backprop_one(&self, i: usize, gout: &Tensor, g: &mut [Option<Tensor>]) {
        let out = self.entries[i].value.as_ref().expect("computed value");
        match &self.entries[i].op {
            Op::Constant | Op::Leaf | Op::Param(_) => {}
            Op::MatMul(a, b) => {
                let (ta, tb) = (self.value(*a), self.value(*b));
                let (m, k, n) = (ta.rows(), ta.cols(), tb.cols());
                if self.ng(*a) {
                    // dA += dC · Bᵀ
                    let bt = transpose_data(tb.data(), k, n);
                    self.acc_with(g, *a, |da| matmul_acc(gout.data(), &bt, da.data_mut(), m, n, k));
                }
                if self.ng(*b) {
                    // dB += Aᵀ · dC
                    let at = transpose_data(ta.data(), m, k);
                    self.acc_with(g, *b, |db| matmul_acc(&at, gout.data(), db.data_mut(), k, m, n));
                }
            }
            Op::Transpose(a) => {
                let mut d = Tensor::zeros(gout.cols(), gout.rows());
                for r in 0..gout.rows() {
                    for c in 0..gout.cols() {
                        d.set(c, r, gout.get(r, c));
                    }
                }
                self.acc(g, *a, d);
            }
            Op::Add(a, b) => {
                self.acc_with(g, *a, |d| d.add_assign(gout));
                self.acc_with(g, *b, |d| d.add_assign(gout));
            }
            Op::Sub(a, b) => {
                self.acc_with(g, *a, |d| d.add_assign(gout));
                self.acc_with(g, *b, |d| axpy(-1.0, gout.data(), d.data_mut()));
            }
            Op::Mul(a, b) => {
                let (ta, tb) = (self.value(*a), self.value(*b));
                self.acc_with(g, *a, |d| {
                    for ((x, &go), &y) in d.data_mut().iter_mut().zip(gout.data()).zip(tb.data()) {
                        *x += go * y;
                    }
                });
                self.acc_with(g, *b, |d| {
                    for ((x, &go), &y) in d.data_mut().iter_mut().zip(gout.data()).zip(ta.data()) {
                        *x += go * y;
                    }
                });
            }
            Op::AddRow(a, b) => {
                self.acc_with(g, *a, |d| d.add_assign(gout));
                self.acc_with(g, *b, |d| {
                    for r in 0..gout.rows() {
                        axpy(1.0, gout.row(r), d.data_mut());
                    }
                });
            }
            Op::MulScalar(a, s) => {
                let k = self.value(*s).item();
                self.acc_with(g, *a, |d| axpy(k, gout.data(), d.data_mut()));
                let ta = self.value(*a);
                let ds = dot(gout.data(), ta.data());
                self.acc_with(g, *s, |d| d.data_mut()[0] += ds);
            }
            Op::Affine(a, scale) => self.acc_with(g, *a, |d| axpy(*scale, gout.data(), d.data_mut())),
            Op::Sigmoid(a) => self.elementwise(g, *a, gout, out, |_, y| y * (1.0 - y)),
            Op::Tanh(a) => self.elementwise(g, *a, gout, out, |_, y| 1.0 - y * y),
            Op::Relu(a) => self.elementwise(g, *a, gout, out, |x, _| if x > 0.0 { 1.0 } else { 0.0 }),
            Op::Exp(a) => self.elementwise(g, *a, gout, out, |_, y| y),
            Op::Log(a) => self.elementwise(g, *a, gout, out, |x, _| 1.0 / x),
            Op::Clamp(a, lo, hi) => {
                let (lo, hi) = (*lo, *hi);
                self.elementwise(g, *a, gout, out, |x, _| if x >= lo && x <= hi { 1.0 } else { 0.0 })
            }
            Op::SoftmaxRows(a) => {
                self.acc_with(g, *a, |d| {
                    for r in 0..out.rows() {
                        let y = out.row(r);
                        let go = gout.row(r);
                        let s = dot(y, go);
                        for ((x, &yi), &gi) in d.row_mut(r).iter_mut().zip(y).zip(go) {
                            *x += yi * (gi - s);
                        }
                    }
                });
            }
            Op::LogSoftmaxRows(a) => {
                self.acc_with(g, *a, |d| {
                    for r in 0..out.rows() {
                        let go = gout.row(r);
                        let s: f64 = go.iter().sum();
                        for ((x, &ly), &gi) in d.row_mut(r).iter_mut().zip(out.row(r)).zip(go) {
                            *x += gi - math::exp(ly) * s;
                        }
                    }
                });
            }
            Op::ConcatCols(parts) => {
                let mut off = 0;
                for &p in parts {
                    let w = self.value(p).cols();
                    self.acc_with(g, p, |d| {
                        for r in 0..gout.rows() {
                            axpy(1.0, &gout.row(r)[off..off + w], d.row_mut(r));
                        }
                    });
                    off += w;
                }
            }
            Op::ConcatRows(parts) => {
                let mut off = 0;
                for &p in parts {
                    let n = self.value(p).len();
                    self.acc_with(g, p, |d| axpy(1.0, &gout.data()[off..off + n], d.data_mut()));
                    off += n;
                }
            }
            Op::MeanRows(a) => {
                let rows = self.value(*a).rows();
                let k = 1.0 / rows as f64;
                self.acc_with(g, *a, |d| {
                    for r in 0..rows {
                        axpy(k, gout.data(), d.row_mut(r));
                    }
                });
            }
            Op::SumCols(a) => {
                self.acc_with(g, *a, |d| {
                    for r in 0..d.rows() {
                        let go = gout.data()[r];
                        d.row_mut(r).iter_mut().for_each(|x| *x += go);
                    }
                });
            }
            Op::SumAll(a) => {
                let go = gout.item();
                self.acc_with(g, *a, |d| d.data_mut().iter_mut().for_each(|x| *x += go));
            }
            Op::MaxPoolRows(a, arg) => {
                self.acc_with(g, *a, |d| {
                    for (c, &r) in arg.iter().enumerate() {
                        let cols = d.cols();
                        d.data_mut()[r * cols + c] += gout.data()[c];
                    }
                });
            }
            Op::GatherRows(a, idx) => {
                self.acc_with(g, *a, |d| {
                    for (i, &r) in idx.iter().enumerate() {
                        axpy(1.0, gout.row(i), d.row_mut(r));
                    }
                });
            }
            Op::ScatterAddRows(a, idx) => {
                self.acc_with(g, *a, |d| {
                    for (i, &r) in idx.iter().enumerate() {
                        axpy(1.0, gout.row(r), d.row_mut(i));
                    }
                });
            }
            Op::ScaleRows(a, f) => {
                self.acc_with(g, *a, |d| {
                    for (r, &k) in f.iter().enumerate() {
                        axpy(k, gout.row(r), d.row_mut(r));
                    }
                });
            }
            Op::Conv1d { x, w, b, width, pad } => {
                let (tx, tw) = (self.value(*x), self.value(*w));
                let (len, cin) = (tx.rows(), tx.cols());
                let (width, pad) = (*width, *pad);
                self.acc_with(g, *b, |db| {
                    for t in 0..gout.rows() {
                        axpy(1.0, gout.row(t), db.data_mut());
                    }
                });
                let positions = |t: usize, j: usize| (t + j).checked_sub(pad).filter(|&s| s < len);
                self.acc_with(g, *x, |dx| {
                    for t in 0..gout.rows() {
                        for j in 0..width {
                            let Some(src) = positions(t, j) else { continue };
                            for c in 0..cin {
                                dx.row_mut(src)[c] += dot(gout.row(t), tw.row(j * cin + c));
                            }
                        }
                    }
                });
                self.acc_with(g, *w, |dw| {
                    for t in 0..gout.rows() {
                        for j in 0..width {
                            let Some(src) = positions(t, j) else { continue };
                            for (c, &xv) in tx.row(src).iter().enumerate() {
                                if xv != 0.0 {
                                    axpy(xv, gout.row(t), dw.row_mut(j * cin + c));
                                }
                            }
                        }
                    }
                });
            }
            Op::Pick(a, r, c) => {
                let go = gout.item();
                let (r, c) = (*r, *c);
                self.acc_with(g, *a, |d| {
                    let cols = d.cols();
                    d.data_mut()[r * cols + c] += go;
                });
            }
            Op::SliceRows(a, start) => {
                let cols = gout.cols();
                let s = *start;
                self.acc_with(g, *a, |d| axpy(1.0, gout.data(), &mut d.data_mut()[s * cols..s * cols + gout.len()]));
            }
            Op::SliceCols(a, start) => {
                let s = *start;
                self.acc_with(g, *a, |d| {
                    for r in 0..gout.rows() {
                        axpy(1.0, gout.row(r), &mut d.row_mut(r)[s..s + gout.cols()]);
                    }
                });
            }
        }
    }

    /// Accumulates `gout · f(x, y)` elementwise, where `y` is the op output.
    fn elementwise(&self, g: &mut [Option<Tensor>], a: Var, gout: &Tensor, out: &Tensor, f: impl Fn(f64, f64) -> f64) {
        let x = self.value(a);
        self.acc_with(g, a, |d| {
            for (((di, &go), &xi), &yi) in d.data_mut().iter_mut().zip(gout.data()).zip(x.data()).zip(out.data()) {
                *di += go * f(xi, yi);
            }
        });
    }
}
