//! Central finite-difference gradient checks.

#![allow(dead_code)]

use std::fmt::Debug;

use gsc_core::tensor::{Grads, ParamStore, Tape, Var};

pub const EPS: f64 = 1e-5;
pub const REL_TOL: f64 = 1e-4;
/// Differences below this are treated as agreement regardless of scale.
pub const ABS_FLOOR: f64 = 1e-8;

fn loss_value<E: Debug>(store: &ParamStore, build: &dyn Fn(&mut Tape) -> Result<Var, E>) -> f64 {
    let mut tape = Tape::new(store);
    let l = build(&mut tape).expect("forward");
    tape.value(l).item()
}

/// Largest relative error between autodiff and finite-difference gradients
/// over every scalar of every parameter, along with the offending name.
pub fn max_relative_error<E: Debug>(
    store: &ParamStore,
    build: &dyn Fn(&mut Tape) -> Result<Var, E>,
) -> (f64, String) {
    let mut grads = Grads::new();
    {
        let mut tape = Tape::new(store);
        let l = build(&mut tape).expect("forward");
        tape.backward(l, &mut grads).expect("backward");
    }
    let mut work = store.clone();
    let mut worst = (0.0, String::new());
    let ids: Vec<_> = store.iter().map(|(id, p)| (id, p.name.clone(), p.value.len())).collect();
    for (id, name, len) in ids {
        for j in 0..len {
            let orig = work.get(id).value.data()[j];
            work.get_mut(id).value.data_mut()[j] = orig + EPS;
            let plus = loss_value(&work, build);
            work.get_mut(id).value.data_mut()[j] = orig - EPS;
            let minus = loss_value(&work, build);
            work.get_mut(id).value.data_mut()[j] = orig;
            let numeric = (plus - minus) / (2.0 * EPS);
            let analytic = grads.get(id).map_or(0.0, |g| g.data()[j]);
            let diff = (numeric - analytic).abs();
            let rel = if diff < ABS_FLOOR { 0.0 } else { diff / numeric.abs().max(analytic.abs()) };
            if rel > worst.0 {
                worst = (rel, format!("{name}[{j}]: analytic {analytic} numeric {numeric}"));
            }
        }
    }
    worst
}
