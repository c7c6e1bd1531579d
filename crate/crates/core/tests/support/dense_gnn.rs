//! Dense-adjacency reference implementation of the three GNN variants,
//! written with plain nested loops and read straight from the parameter store.

#![allow(dead_code)]

use gsc_core::gnn::{GnnConfig, GnnKind, DTNN_EDGE_DIM};
use gsc_core::tensor::ParamStore;

pub type Mat = Vec<Vec<f64>>;

fn param(store: &ParamStore, name: &str) -> Mat {
    let t = store.value(store.id(name).expect(name));
    (0..t.rows()).map(|r| t.row(r).to_vec()).collect()
}

/// `x · w` for a row vector.
fn vecmat(x: &[f64], w: &Mat) -> Vec<f64> {
    let cols = w[0].len();
    (0..cols).map(|j| x.iter().zip(w).map(|(a, row)| a * row[j]).sum()).collect()
}

fn add(a: &[f64], b: &[f64]) -> Vec<f64> {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

fn sigmoid(x: f64) -> f64 {
    1.0 / (1.0 + (-x).exp())
}

/// Reference GRU step for a single row.
pub fn gru(store: &ParamStore, prefix: &str, x: &[f64], h: &[f64]) -> Vec<f64> {
    let w = param(store, &format!("{prefix}.w"));
    let u_rz = param(store, &format!("{prefix}.u_rz"));
    let u_h = param(store, &format!("{prefix}.u_h"));
    let b = &param(store, &format!("{prefix}.b"))[0];
    let d = h.len();
    let xw = add(&vecmat(x, &w), b);
    let hu = vecmat(h, &u_rz);
    let r: Vec<f64> = (0..d).map(|i| sigmoid(xw[i] + hu[i])).collect();
    let z: Vec<f64> = (0..d).map(|i| sigmoid(xw[d + i] + hu[d + i])).collect();
    let rh: Vec<f64> = (0..d).map(|i| r[i] * h[i]).collect();
    let rhu = vecmat(&rh, &u_h);
    (0..d).map(|i| {
        let cand = (xw[2 * d + i] + rhu[i]).tanh();
        (1.0 - z[i]) * h[i] + z[i] * cand
    })
    .collect()
}

/// Dense adjacency per type: `adj[t][v][w]` counts edges `w → v` of type `t`.
pub fn adjacency(n: usize, types: usize, edges: &[(usize, usize, usize)]) -> Vec<Mat> {
    let mut adj = vec![vec![vec![0.0; n]; n]; types];
    for &(s, d, t) in edges {
        adj[t][d][s] += 1.0;
    }
    adj
}

/// All round states, `h^0` first.
pub fn forward(store: &ParamStore, cfg: &GnnConfig, h0: &Mat, adj: &[Mat]) -> Vec<Mat> {
    let n = h0.len();
    let d = cfg.hidden;
    let mut states = vec![h0.clone()];
    for _ in 0..cfg.rounds {
        let h = states.last().unwrap().clone();
        let mut next = vec![vec![0.0; d]; n];
        match cfg.kind {
            GnnKind::Ggnn => {
                for v in 0..n {
                    let mut m = vec![0.0; d];
                    for (t, ty) in cfg.edge_types.iter().enumerate() {
                        let w = param(store, &format!("gnn.edge.{ty}.weight"));
                        let b = &param(store, &format!("gnn.edge.{ty}.bias"))[0];
                        for u in 0..n {
                            let count = adj[t][v][u];
                            if count != 0.0 {
                                let msg = add(&vecmat(&h[u], &w), b);
                                for i in 0..d {
                                    m[i] += count * msg[i];
                                }
                            }
                        }
                    }
                    next[v] = gru(store, "gnn.gru", &m, &h[v]);
                }
            }
            GnnKind::Rgcn => {
                let w0 = param(store, "gnn.self.weight");
                for v in 0..n {
                    let mut pre = vecmat(&h[v], &w0);
                    for (t, ty) in cfg.edge_types.iter().enumerate() {
                        let w = param(store, &format!("gnn.edge.{ty}.weight"));
                        let indeg: f64 = adj[t][v].iter().sum();
                        if indeg == 0.0 {
                            continue;
                        }
                        for u in 0..n {
                            if adj[t][v][u] != 0.0 {
                                let msg = vecmat(&h[u], &w);
                                for i in 0..d {
                                    pre[i] += adj[t][v][u] * msg[i] / indeg;
                                }
                            }
                        }
                    }
                    next[v] = pre.iter().map(|&x| x.max(0.0)).collect();
                }
            }
            GnnKind::Dtnn => {
                let wcf = param(store, "gnn.dtnn.cf.weight");
                let bcf = &param(store, "gnn.dtnn.cf.bias")[0];
                let wdf = param(store, "gnn.dtnn.df.weight");
                let bdf = &param(store, "gnn.dtnn.df.bias")[0];
                let wfc = param(store, "gnn.dtnn.fc.weight");
                for v in 0..n {
                    let mut m = vec![0.0; d];
                    for (t, ty) in cfg.edge_types.iter().enumerate() {
                        let e = &param(store, &format!("gnn.edge.{ty}.embedding"))[0];
                        assert_eq!(e.len(), DTNN_EDGE_DIM);
                        let ef = add(&vecmat(e, &wdf), bdf);
                        for u in 0..n {
                            if adj[t][v][u] != 0.0 {
                                let hf = add(&vecmat(&h[u], &wcf), bcf);
                                let prod: Vec<f64> = hf.iter().zip(&ef).map(|(a, b)| a * b).collect();
                                let msg = vecmat(&prod, &wfc);
                                for i in 0..d {
                                    m[i] += adj[t][v][u] * msg[i].tanh();
                                }
                            }
                        }
                    }
                    next[v] = add(&h[v], &m);
                }
            }
        }
        states.push(next);
    }
    states
}
