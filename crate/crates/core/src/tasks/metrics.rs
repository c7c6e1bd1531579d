//! Per-instance outcomes and their aggregate report.

use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use super::Task;
use crate::error::ModelError;
use crate::graph::NodeId;

/// Character-wise edit distance with unit insert, delete and substitute costs.
pub fn levenshtein(a: &str, b: &str) -> usize {
    let b: Vec<char> = b.chars().collect();
    let mut prev: Vec<usize> = (0..=b.len()).collect();
    let mut cur = vec![0; b.len() + 1];
    for (i, ca) in a.chars().enumerate() {
        cur[0] = i + 1;
        for (j, &cb) in b.iter().enumerate() {
            let sub = prev[j] + usize::from(ca != cb);
            cur[j + 1] = sub.min(prev[j + 1] + 1).min(cur[j] + 1);
        }
        core::mem::swap(&mut prev, &mut cur);
    }
    prev[b.len()]
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct FitbOutcome {
    pub top1: bool,
    pub top5: bool,
}

/// Scores a ranking of candidate nodes against the correct set.
pub fn fitb_outcome(ranked: &[NodeId], correct: &[NodeId]) -> FitbOutcome {
    let hit = |v: &NodeId| correct.contains(v);
    FitbOutcome { top1: ranked.first().is_some_and(hit), top5: ranked.iter().take(5).any(hit) }
}

/// A decoded name: its words (unknown words empty) and whether decoding
/// emitted the end marker.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DecodedName {
    pub words: Vec<String>,
    pub finished: bool,
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct NamingOutcome {
    pub exact: bool,
    pub top5: bool,
    /// Fraction of target positions whose word is predicted at that position.
    pub subword: f64,
    pub edit_distance: f64,
    pub normalized_edit_distance: f64,
}

fn matches(name: &DecodedName, target: &[String]) -> bool {
    name.finished && name.words == target
}

/// Scores ranked decodes (best first) against the target words.
pub fn naming_outcome(ranked: &[DecodedName], target: &[String]) -> NamingOutcome {
    let best = ranked.first().cloned().unwrap_or(DecodedName { words: Vec::new(), finished: false });
    let hits = target.iter().enumerate().filter(|(i, w)| best.words.get(*i) == Some(*w)).count();
    let truth: String = target.concat();
    let guess: String = best.words.concat();
    let d = levenshtein(&guess, &truth) as f64;
    NamingOutcome {
        exact: matches(&best, target),
        top5: ranked.iter().take(5).any(|n| matches(n, target)),
        subword: if target.is_empty() { 0.0 } else { hits as f64 / target.len() as f64 },
        edit_distance: d,
        normalized_edit_distance: d / truth.chars().count().max(1) as f64,
    }
}

/// Aggregate evaluation metrics over one split.
#[derive(Clone, Debug, PartialEq)]
pub struct MetricsReport {
    pub task: Task,
    pub instances: usize,
    pub accuracy: f64,
    pub top5_accuracy: f64,
    pub subword_accuracy: Option<f64>,
    pub edit_distance: Option<f64>,
    pub normalized_edit_distance: Option<f64>,
}

fn mean(xs: impl Iterator<Item = f64>, n: usize) -> f64 {
    xs.sum::<f64>() / n as f64
}

impl MetricsReport {
    pub fn from_fitb(outcomes: &[FitbOutcome]) -> Result<Self, ModelError> {
        let n = outcomes.len();
        if n == 0 {
            return Err(ModelError::Empty("instance list"));
        }
        Ok(MetricsReport {
            task: Task::Fitb,
            instances: n,
            accuracy: mean(outcomes.iter().map(|o| f64::from(u8::from(o.top1))), n),
            top5_accuracy: mean(outcomes.iter().map(|o| f64::from(u8::from(o.top5))), n),
            subword_accuracy: None,
            edit_distance: None,
            normalized_edit_distance: None,
        })
    }

    pub fn from_naming(outcomes: &[NamingOutcome]) -> Result<Self, ModelError> {
        let n = outcomes.len();
        if n == 0 {
            return Err(ModelError::Empty("instance list"));
        }
        Ok(MetricsReport {
            task: Task::VarNaming,
            instances: n,
            accuracy: mean(outcomes.iter().map(|o| f64::from(u8::from(o.exact))), n),
            top5_accuracy: mean(outcomes.iter().map(|o| f64::from(u8::from(o.top5))), n),
            subword_accuracy: Some(mean(outcomes.iter().map(|o| o.subword), n)),
            edit_distance: Some(mean(outcomes.iter().map(|o| o.edit_distance), n)),
            normalized_edit_distance: Some(mean(outcomes.iter().map(|o| o.normalized_edit_distance), n)),
        })
    }
}
