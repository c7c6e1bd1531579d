//! Dense 2-D tensors, a reverse-mode autodiff tape, parameters and Adam.
//!
//! Every tensor is a row-major matrix; vectors are `1 × n`. Values are `f64`
//! throughout.

use alloc::vec::Vec;
use core::fmt;

use thiserror::Error;

mod param;
mod tape;

pub use param::{Adam, Grads, ParamId, ParamStore, Parameter};
pub use tape::{Tape, Var};

#[derive(Clone, Debug, Error, PartialEq)]
pub enum TensorError {
    #[error("{op}: shape mismatch between {left:?} and {right:?}")]
    ShapeMismatch { op: &'static str, left: [usize; 2], right: [usize; 2] },
    #[error("{op}: invalid operand of shape {shape:?}: {reason}")]
    InvalidShape { op: &'static str, shape: [usize; 2], reason: &'static str },
    #[error("{op}: index {index} out of range for {len} rows")]
    IndexOutOfRange { op: &'static str, index: usize, len: usize },
    #[error("backward needs a scalar loss, got shape {0:?}")]
    NonScalarLoss([usize; 2]),
    #[error("no gradients to apply")]
    MissingGradients,
    #[error("parameter `{0}` already exists")]
    DuplicateParameter(alloc::string::String),
    #[error("unknown parameter `{0}`")]
    UnknownParameter(alloc::string::String),
}

#[derive(Clone, PartialEq)]
pub struct Tensor {
    rows: usize,
    cols: usize,
    data: Vec<f64>,
}

impl fmt::Debug for Tensor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Tensor{:?}{:?}", self.shape(), self.data)
    }
}

impl Tensor {
    pub fn new(rows: usize, cols: usize, data: Vec<f64>) -> Result<Tensor, TensorError> {
        if data.len() != rows * cols {
            return Err(TensorError::InvalidShape {
                op: "new",
                shape: [rows, cols],
                reason: "value count does not match shape",
            });
        }
        Ok(Tensor { rows, cols, data })
    }

    pub fn zeros(rows: usize, cols: usize) -> Tensor {
        Tensor { rows, cols, data: alloc::vec![0.0; rows * cols] }
    }

    pub fn filled(rows: usize, cols: usize, value: f64) -> Tensor {
        Tensor { rows, cols, data: alloc::vec![value; rows * cols] }
    }

    pub fn scalar(x: f64) -> Tensor {
        Tensor { rows: 1, cols: 1, data: alloc::vec![x] }
    }

    pub fn row_vector(data: Vec<f64>) -> Tensor {
        Tensor { rows: 1, cols: data.len(), data }
    }

    pub fn from_row(row: &[f64]) -> Tensor {
        Tensor::row_vector(row.to_vec())
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn shape(&self) -> [usize; 2] {
        [self.rows, self.cols]
    }

    pub fn len(&self) -> usize {
        self.data.len()
    }

    pub fn is_empty(&self) -> bool {
        self.data.is_empty()
    }

    pub fn data(&self) -> &[f64] {
        &self.data
    }

    pub fn data_mut(&mut self) -> &mut [f64] {
        &mut self.data
    }

    pub fn into_data(self) -> Vec<f64> {
        self.data
    }

    pub fn get(&self, r: usize, c: usize) -> f64 {
        self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: f64) {
        self.data[r * self.cols + c] = v;
    }

    pub fn row(&self, r: usize) -> &[f64] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn row_mut(&mut self, r: usize) -> &mut [f64] {
        &mut self.data[r * self.cols..(r + 1) * self.cols]
    }

    /// The single value of a `1 × 1` tensor.
    pub fn item(&self) -> f64 {
        debug_assert_eq!(self.data.len(), 1);
        self.data[0]
    }

    pub fn add_assign(&mut self, other: &Tensor) {
        debug_assert_eq!(self.shape(), other.shape());
        axpy(1.0, &other.data, &mut self.data);
    }

    pub fn scale(&mut self, s: f64) {
        self.data.iter_mut().for_each(|x| *x *= s);
    }

    pub fn all_finite(&self) -> bool {
        self.data.iter().all(|x| x.is_finite())
    }
}

/// `y += a * x`.
#[inline]
pub(crate) fn axpy(a: f64, x: &[f64], y: &mut [f64]) {
    for (yi, xi) in y.iter_mut().zip(x) {
        *yi += a * xi;
    }
}

#[inline]
pub(crate) fn dot(x: &[f64], y: &[f64]) -> f64 {
    // four partial sums let the compiler vectorize without reassociation
    let mut acc = [0.0; 4];
    let chunks = x.len() / 4;
    for i in 0..chunks {
        for j in 0..4 {
            acc[j] += x[4 * i + j] * y[4 * i + j];
        }
    }
    let mut s = (acc[0] + acc[1]) + (acc[2] + acc[3]);
    for i in 4 * chunks..x.len() {
        s += x[i] * y[i];
    }
    s
}

/// Row-major transpose of an `rows × cols` buffer.
pub(crate) fn transpose_data(a: &[f64], rows: usize, cols: usize) -> Vec<f64> {
    let mut out = alloc::vec![0.0; a.len()];
    for r in 0..rows {
        for c in 0..cols {
            out[c * rows + r] = a[r * cols + c];
        }
    }
    out
}

const MR: usize = 2;
const NR: usize = 8;

/// `c += a · b` for row-major `a: m×k`, `b: k×n`, `c: m×n`, computed in
/// `MR × NR` register blocks.
pub(crate) fn matmul_acc(a: &[f64], b: &[f64], c: &mut [f64], m: usize, k: usize, n: usize) {
    let mut i = 0;
    while i + MR <= m {
        let rows: [&[f64]; MR] = core::array::from_fn(|r| &a[(i + r) * k..(i + r + 1) * k]);
        let mut j = 0;
        while j + NR <= n {
            let mut acc = [[0.0; NR]; MR];
            for p in 0..k {
                let bp = &b[p * n + j..][..NR];
                for (row, ar) in acc.iter_mut().zip(rows.iter().map(|a| a[p])) {
                    for q in 0..NR {
                        row[q] += ar * bp[q];
                    }
                }
            }
            for (r, row) in acc.iter().enumerate() {
                let cr = &mut c[(i + r) * n + j..][..NR];
                for q in 0..NR {
                    cr[q] += row[q];
                }
            }
            j += NR;
        }
        if j < n {
            for (r, ar) in rows.iter().enumerate() {
                let cr = &mut c[(i + r) * n + j..(i + r + 1) * n];
                for p in 0..k {
                    axpy(ar[p], &b[p * n + j..(p + 1) * n], cr);
                }
            }
        }
        i += MR;
    }
    for r in i..m {
        let cr = &mut c[r * n..(r + 1) * n];
        for p in 0..k {
            let arp = a[r * k + p];
            if arp != 0.0 {
                axpy(arp, &b[p * n..(p + 1) * n], cr);
            }
        }
    }
}
