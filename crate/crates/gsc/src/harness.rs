//! Training with early stopping, parallel evaluation and the random-guess
//! baseline for fill-in-the-blank.

use std::collections::VecDeque;
use std::time::Instant;

use gsc_core::embed::{VocabCounter, Vocabs};
use gsc_core::model::{Model, Outcome};
use gsc_core::tasks::{FitbInstance, Instance, MetricsReport, Task};
use gsc_core::tensor::{Adam, Grads, ParamStore, Tape};
use gsc_core::ModelError;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::checkpoint::{Checkpoint, EpochRecord, Loaded};
use crate::config::ExperimentConfig;
use crate::error::{GscError, Result};
use crate::format::LabeledInstance;

/// Environment variable capping evaluation worker threads.
pub const THREADS_ENV: &str = "GSC_NUM_THREADS";

/// Worker threads for evaluation: `GSC_NUM_THREADS` if set to a positive
/// integer, otherwise the available parallelism.
pub fn num_threads() -> usize {
    std::env::var(THREADS_ENV)
        .ok()
        .and_then(|v| v.trim().parse::<usize>().ok())
        .filter(|&n| n > 0)
        .unwrap_or_else(|| std::thread::available_parallelism().map_or(1, |n| n.get()))
}

/// Closed word and type vocabularies from the training instances; naming
/// targets count towards the word vocabulary.
pub fn build_vocabs(config: &ExperimentConfig, train: &[LabeledInstance]) -> Vocabs {
    let mut counter = VocabCounter::default();
    for inst in train {
        counter.add_graph(inst.instance.graph());
        if let Instance::VarNaming(i) = &inst.instance {
            counter.add_words(i.target.iter().map(String::as_str));
        }
    }
    counter.build(config.max_vocab_words, config.max_types)
}

fn check_task(config: &ExperimentConfig, instances: &[LabeledInstance]) -> Result<()> {
    if let Some(bad) = instances.iter().find(|i| i.instance.task() != config.task) {
        return Err(GscError::Config(format!(
            "instance {} is for {} but the configuration trains {}",
            bad.id,
            bad.instance.task().as_str(),
            config.task.as_str()
        )));
    }
    Ok(())
}

/// Result of [`train`].
pub struct TrainOutcome {
    pub checkpoint: Checkpoint,
    pub loaded: Loaded,
}

/// Trains with Adam on gradients accumulated over `batch_size` instances,
/// scoring the validation set after every epoch. Stops after `patience`
/// epochs without improvement, after `max_epochs`, or once the validation
/// metric reaches `target_metric`; returns the best epoch's parameters. An
/// empty validation set falls back to the training set.
pub fn train(config: &ExperimentConfig, train: &[LabeledInstance], validation: &[LabeledInstance]) -> Result<TrainOutcome> {
    config.validate()?;
    if train.is_empty() {
        return Err(GscError::Empty("training set"));
    }
    check_task(config, train)?;
    check_task(config, validation)?;
    let validation = if validation.is_empty() {
        log::warn!("validation set is empty; selecting epochs on the training set");
        train
    } else {
        validation
    };
    let vocabs = build_vocabs(config, train);
    let mut rng = ChaCha8Rng::seed_from_u64(config.seed);
    let mut store = ParamStore::new();
    let model = Model::new(config.model_config(), &vocabs, &mut store, &mut rng)?;
    log::info!(
        "training {} on {} instances ({} validation), {} parameters, {} words",
        config.model_config().label(),
        train.len(),
        validation.len(),
        store.scalar_count(),
        vocabs.words.len()
    );
    let adam = Adam::with_lr(config.lr);
    let mut order: Vec<usize> = (0..train.len()).collect();
    let mut curve = Vec::new();
    let mut best: Option<(f64, usize, ParamStore)> = None;
    let mut since_best = 0;
    for epoch in 1..=config.max_epochs {
        let start = Instant::now();
        order.shuffle(&mut rng);
        let mut total_loss = 0.0;
        for batch in order.chunks(config.batch_size) {
            let mut grads = Grads::new();
            for &i in batch {
                let inst = &train[i];
                let (loss, g) = instance_gradients(&model, &store, &vocabs, inst, epoch)?;
                total_loss += loss;
                grads.merge(&g);
            }
            grads.scale(1.0 / batch.len() as f64);
            adam.step(&mut store, &mut grads)?;
        }
        let metric = evaluate_model(&model, &store, &vocabs, validation)?.accuracy;
        let record = EpochRecord {
            epoch,
            train_loss: total_loss / train.len() as f64,
            validation_metric: metric,
            seconds: start.elapsed().as_secs_f64(),
        };
        log::info!(
            "epoch {epoch}: loss {:.5} validation {:.4} ({:.1}s)",
            record.train_loss,
            metric,
            record.seconds
        );
        curve.push(record);
        if best.as_ref().is_none_or(|(m, _, _)| metric > *m) {
            best = Some((metric, epoch, store.clone()));
            since_best = 0;
        } else {
            since_best += 1;
        }
        if since_best >= config.patience || config.target_metric.is_some_and(|t| metric >= t) {
            break;
        }
    }
    let (best_metric, best_epoch, best_store) = best.ok_or(GscError::Empty("training curve"))?;
    let mut checkpoint = Checkpoint::new(config, &best_store, &vocabs);
    checkpoint.curve = curve;
    checkpoint.best_epoch = best_epoch;
    checkpoint.best_validation_metric = best_metric;
    let model = Model::from_store(config.model_config(), &best_store)?;
    Ok(TrainOutcome { checkpoint, loaded: Loaded { config: config.clone(), model, store: best_store, vocabs } })
}

/// Loss and parameter gradients of one instance; non-finite values abort
/// with the instance id.
fn instance_gradients(
    model: &Model,
    store: &ParamStore,
    vocabs: &Vocabs,
    inst: &LabeledInstance,
    epoch: usize,
) -> Result<(f64, Grads)> {
    let nonfinite = || GscError::NonFiniteLoss { instance: inst.id.clone(), epoch };
    let mut tape = Tape::new(store);
    let loss = match model.loss(&mut tape, &inst.instance, vocabs) {
        Ok(l) => l,
        Err(ModelError::ScoreOutOfRange(_)) => return Err(nonfinite()),
        Err(e) => return Err(GscError::Instance { instance: inst.id.clone(), source: e }),
    };
    let value = tape.value(loss).item();
    if !value.is_finite() {
        return Err(nonfinite());
    }
    let mut grads = Grads::new();
    tape.backward(loss, &mut grads)?;
    if !grads.all_finite() {
        return Err(nonfinite());
    }
    Ok((value, grads))
}

fn outcome_of(model: &Model, store: &ParamStore, vocabs: &Vocabs, inst: &LabeledInstance) -> Result<Outcome> {
    model
        .evaluate(store, &inst.instance, vocabs)
        .map_err(|e| GscError::Instance { instance: inst.id.clone(), source: e })
}

/// Per-instance outcomes computed on up to [`num_threads`] workers, in
/// input order.
pub fn outcomes(model: &Model, store: &ParamStore, vocabs: &Vocabs, instances: &[LabeledInstance]) -> Result<Vec<Outcome>> {
    let threads = num_threads().min(instances.len()).max(1);
    if threads == 1 {
        return instances.iter().map(|i| outcome_of(model, store, vocabs, i)).collect();
    }
    let chunk = instances.len().div_ceil(threads);
    std::thread::scope(|s| {
        let handles: Vec<_> = instances
            .chunks(chunk)
            .map(|part| s.spawn(move || part.iter().map(|i| outcome_of(model, store, vocabs, i)).collect::<Result<Vec<_>>>()))
            .collect();
        let mut out = Vec::with_capacity(instances.len());
        for h in handles {
            out.extend(h.join().expect("evaluation worker panicked")?);
        }
        Ok(out)
    })
}

/// Aggregate metrics of `model` over `instances`; an empty list is an error.
pub fn evaluate_model(model: &Model, store: &ParamStore, vocabs: &Vocabs, instances: &[LabeledInstance]) -> Result<MetricsReport> {
    if instances.is_empty() {
        return Err(GscError::Empty("instance list"));
    }
    let all = outcomes(model, store, vocabs, instances)?;
    let report = match model.config.task {
        Task::Fitb => {
            let o: Vec<_> = all.into_iter().filter_map(|o| if let Outcome::Fitb(f) = o { Some(f) } else { None }).collect();
            MetricsReport::from_fitb(&o)?
        }
        Task::VarNaming => {
            let o: Vec<_> = all.into_iter().filter_map(|o| if let Outcome::Naming(n) = o { Some(n) } else { None }).collect();
            MetricsReport::from_naming(&o)?
        }
    };
    Ok(report)
}

/// The serialized metrics: exactly these five fields, the naming-only ones
/// `null` for fill-in-the-blank.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct MetricsJson {
    pub accuracy: f64,
    pub top5_accuracy: f64,
    pub subword_accuracy: Option<f64>,
    pub edit_distance: Option<f64>,
    pub normalized_edit_distance: Option<f64>,
}

impl From<&MetricsReport> for MetricsJson {
    fn from(m: &MetricsReport) -> Self {
        MetricsJson {
            accuracy: m.accuracy,
            top5_accuracy: m.top5_accuracy,
            subword_accuracy: m.subword_accuracy,
            edit_distance: m.edit_distance,
            normalized_edit_distance: m.normalized_edit_distance,
        }
    }
}

/// Evaluates a restored checkpoint.
pub fn evaluate(loaded: &Loaded, instances: &[LabeledInstance]) -> Result<MetricsReport> {
    check_task(&loaded.config, instances)?;
    evaluate_model(&loaded.model, &loaded.store, &loaded.vocabs, instances)
}

/// Variable nodes within `radius` undirected edges of the blank, and how
/// many of them are correct.
pub fn candidates_within(inst: &FitbInstance, radius: usize) -> (usize, usize) {
    let g = &inst.graph;
    let adj = g.undirected_adjacency();
    let mut dist = vec![usize::MAX; g.len()];
    dist[inst.blank.index()] = 0;
    let mut queue = VecDeque::from([inst.blank]);
    let (mut k, mut c) = (0, 0);
    while let Some(v) = queue.pop_front() {
        let d = dist[v.index()];
        if g.node(v).is_variable() {
            k += 1;
            c += usize::from(inst.correct.contains(&v));
        }
        if d == radius {
            continue;
        }
        for &w in &adj[v.index()] {
            if dist[w.index()] == usize::MAX {
                dist[w.index()] = d + 1;
                queue.push_back(w);
            }
        }
    }
    (k, c)
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct BaselineReport {
    pub radius: usize,
    pub instances: usize,
    pub trials: usize,
    /// Monte-Carlo accuracy of guessing uniformly among nearby variables.
    pub estimate: f64,
    pub standard_error: f64,
    /// Mean of `c / k` over instances (0 when no candidate is in range).
    pub exact: f64,
}

/// Random-guess accuracy for fill-in-the-blank. Each trial picks an
/// instance uniformly, then a variable node uniformly within `radius` of its
/// blank, so trials are independent draws whose mean is the exact average of
/// `c / k`.
pub fn random_baseline(instances: &[FitbInstance], radius: usize, trials: usize, seed: u64) -> Result<BaselineReport> {
    if instances.is_empty() {
        return Err(GscError::Empty("instance list"));
    }
    if radius == 0 || trials == 0 {
        return Err(GscError::Config("radius and trials must be positive".into()));
    }
    let counts: Vec<(usize, usize)> = instances.iter().map(|i| candidates_within(i, radius)).collect();
    let exact = counts.iter().map(|&(k, c)| if k == 0 { 0.0 } else { c as f64 / k as f64 }).sum::<f64>() / counts.len() as f64;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut hits = 0usize;
    for _ in 0..trials {
        let (k, c) = counts[rng.gen_range(0..counts.len())];
        if k > 0 && rng.gen_range(0..k) < c {
            hits += 1;
        }
    }
    let p = hits as f64 / trials as f64;
    Ok(BaselineReport {
        radius,
        instances: instances.len(),
        trials,
        estimate: p,
        standard_error: (p * (1.0 - p) / trials as f64).sqrt(),
        exact,
    })
}
