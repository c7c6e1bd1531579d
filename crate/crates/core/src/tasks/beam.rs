//! Beam search over any step-wise decoder.

use alloc::vec::Vec;

use crate::error::ModelError;

/// A decoder that yields log-probabilities over output tokens one step at a
/// time.
pub trait StepDecoder {
    type State: Clone;

    fn start(&mut self) -> Result<Self::State, ModelError>;

    /// Advances `state` after emitting `prev` (`None` at the first step) and
    /// returns the log-probability of every next token.
    fn step(&mut self, state: &Self::State, prev: Option<usize>) -> Result<(Self::State, Vec<f64>), ModelError>;

    /// Token that ends a sequence.
    fn eos(&self) -> usize;
}

#[derive(Clone, Debug, PartialEq)]
pub struct Hypothesis {
    /// Emitted tokens, including the end token if `finished`.
    pub tokens: Vec<usize>,
    pub log_prob: f64,
    pub finished: bool,
}

fn by_score(a: &Hypothesis, b: &Hypothesis) -> core::cmp::Ordering {
    b.log_prob.total_cmp(&a.log_prob).then_with(|| a.tokens.cmp(&b.tokens))
}

/// Keeps the `beam_width` best partial sequences per step for at most
/// `max_steps` steps. Sequences stop at the end token; the result holds at
/// most `beam_width` distinct sequences sorted by descending log-probability.
pub fn beam_search<D: StepDecoder>(dec: &mut D, beam_width: usize, max_steps: usize) -> Result<Vec<Hypothesis>, ModelError> {
    if beam_width == 0 {
        return Err(ModelError::Config("beam width must be at least 1".into()));
    }
    let eos = dec.eos();
    let mut live = alloc::vec![(dec.start()?, Hypothesis { tokens: Vec::new(), log_prob: 0.0, finished: false })];
    let mut done: Vec<Hypothesis> = Vec::new();
    for _ in 0..max_steps {
        if live.is_empty() {
            break;
        }
        let mut candidates: Vec<(usize, Hypothesis)> = Vec::new();
        let mut states = Vec::with_capacity(live.len());
        for (i, (state, hyp)) in live.iter().enumerate() {
            let (next, logp) = dec.step(state, hyp.tokens.last().copied())?;
            states.push(next);
            for (t, &lp) in logp.iter().enumerate() {
                let mut tokens = hyp.tokens.clone();
                tokens.push(t);
                candidates.push((i, Hypothesis { tokens, log_prob: hyp.log_prob + lp, finished: t == eos }));
            }
        }
        candidates.sort_by(|a, b| by_score(&a.1, &b.1));
        candidates.truncate(beam_width);
        live = Vec::new();
        for (i, hyp) in candidates {
            if hyp.finished {
                done.push(hyp);
            } else {
                live.push((states[i].clone(), hyp));
            }
        }
    }
    done.extend(live.into_iter().map(|(_, h)| h));
    done.sort_by(by_score);
    done.dedup_by(|a, b| a.tokens == b.tokens);
    done.truncate(beam_width);
    Ok(done)
}
