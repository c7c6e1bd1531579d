mod common;

use std::collections::VecDeque;

use gsc::config::ExperimentConfig;
use gsc::format::LabeledInstance;
use gsc::harness::{self, candidates_within, random_baseline};
use gsc::GscError;
use gsc_core::model::Outcome;
use gsc_core::tasks::{FitbInstance, Instance, Task};

fn fitb(instances: &[LabeledInstance]) -> Vec<FitbInstance> {
    instances
        .iter()
        .filter_map(|i| match &i.instance {
            Instance::Fitb(f) => Some(f.clone()),
            Instance::VarNaming(_) => None,
        })
        .collect()
}

#[test]
fn patience_zero_runs_exactly_one_epoch() {
    let cfg = ExperimentConfig { patience: 0, max_epochs: 50, ..common::tiny_config(Task::Fitb) };
    let (train, val) = common::smoke_instances(&cfg);
    let out = harness::train(&cfg, &train, &val).unwrap();
    assert_eq!(out.checkpoint.curve.len(), 1);
    assert_eq!(out.checkpoint.best_epoch, 1);
}

#[test]
fn identical_config_and_seed_give_identical_curves() {
    for task in [Task::Fitb, Task::VarNaming] {
        let cfg = common::tiny_config(task);
        let (train, val) = common::smoke_instances(&cfg);
        let a = harness::train(&cfg, &train, &val).unwrap().checkpoint;
        let b = harness::train(&cfg, &train, &val).unwrap().checkpoint;
        let strip = |c: &gsc::checkpoint::Checkpoint| {
            c.curve.iter().map(|e| (e.epoch, e.train_loss.to_bits(), e.validation_metric.to_bits())).collect::<Vec<_>>()
        };
        assert_eq!(strip(&a), strip(&b));
        assert_eq!(a.parameters, b.parameters);
        let c = harness::train(&ExperimentConfig { seed: 1, ..cfg }, &train, &val).unwrap().checkpoint;
        assert_ne!(a.parameters, c.parameters);
    }
}

#[test]
fn early_stopping_returns_the_best_epoch() {
    let cfg = ExperimentConfig { patience: 2, max_epochs: 8, lr: 0.05, ..common::tiny_config(Task::Fitb) };
    let (train, val) = common::smoke_instances(&cfg);
    let out = harness::train(&cfg, &train, &val).unwrap();
    let ck = &out.checkpoint;
    let best = ck.curve.iter().map(|e| e.validation_metric).fold(f64::NEG_INFINITY, f64::max);
    assert_eq!(ck.best_validation_metric, best);
    let first_best = ck.curve.iter().find(|e| e.validation_metric == best).unwrap().epoch;
    assert_eq!(ck.best_epoch, first_best);
    let again = harness::evaluate(&out.loaded, &val).unwrap();
    assert_eq!(again.accuracy, best);
    let last = ck.curve.last().unwrap().epoch;
    assert!(last == cfg.max_epochs || last - ck.best_epoch == cfg.patience);
}

#[test]
fn reaching_the_target_metric_stops_training() {
    let cfg = ExperimentConfig { target_metric: Some(0.0), max_epochs: 10, ..common::tiny_config(Task::Fitb) };
    let (train, val) = common::smoke_instances(&cfg);
    assert_eq!(harness::train(&cfg, &train, &val).unwrap().checkpoint.curve.len(), 1);
}

#[test]
fn exploding_parameters_abort_with_the_instance_id() {
    let cfg = ExperimentConfig { lr: 1e300, batch_size: 1, ..common::tiny_config(Task::Fitb) };
    let (train, val) = common::smoke_instances(&cfg);
    match harness::train(&cfg, &train, &val) {
        Err(GscError::NonFiniteLoss { instance, epoch }) => {
            assert!(train.iter().any(|i| i.id == instance), "{instance}");
            assert_eq!(epoch, 1);
        }
        Err(e) => panic!("unexpected error {e}"),
        Ok(_) => panic!("training should have diverged"),
    }
}

#[test]
fn empty_or_mismatched_inputs_are_errors() {
    let cfg = common::tiny_config(Task::Fitb);
    let (train, val) = common::smoke_instances(&cfg);
    assert!(matches!(harness::train(&cfg, &[], &val), Err(GscError::Empty(_))));
    let out = harness::train(&ExperimentConfig { max_epochs: 1, ..cfg.clone() }, &train, &val).unwrap();
    assert!(matches!(harness::evaluate(&out.loaded, &[]), Err(GscError::Empty(_))));
    let naming = common::smoke_instances(&common::tiny_config(Task::VarNaming)).0;
    assert!(matches!(harness::evaluate(&out.loaded, &naming), Err(GscError::Config(_))));
    assert!(matches!(harness::train(&cfg, &naming, &[]), Err(GscError::Config(_))));
}

#[test]
fn thread_count_does_not_change_outcomes() {
    let cfg = ExperimentConfig { max_epochs: 1, ..common::tiny_config(Task::VarNaming) };
    let (train, val) = common::smoke_instances(&cfg);
    let out = harness::train(&cfg, &train, &val).unwrap();
    let l = &out.loaded;
    let serial: Vec<Outcome> = val.iter().map(|i| l.model.evaluate(&l.store, &i.instance, &l.vocabs).unwrap()).collect();
    std::env::set_var(harness::THREADS_ENV, "3");
    assert_eq!(harness::num_threads(), 3);
    let parallel = harness::outcomes(&l.model, &l.store, &l.vocabs, &val).unwrap();
    std::env::remove_var(harness::THREADS_ENV);
    assert_eq!(serial, parallel);
}

/// All-pairs BFS over the undirected graph, independent of the harness.
fn within_radius(inst: &FitbInstance, radius: usize) -> (usize, usize) {
    let g = &inst.graph;
    let n = g.len();
    let mut adj = vec![Vec::new(); n];
    for e in &g.edges {
        adj[e.src.index()].push(e.dst.index());
        adj[e.dst.index()].push(e.src.index());
    }
    let mut dist = vec![usize::MAX; n];
    dist[inst.blank.index()] = 0;
    let mut q = VecDeque::from([inst.blank.index()]);
    while let Some(v) = q.pop_front() {
        for &w in &adj[v] {
            if dist[w] == usize::MAX {
                dist[w] = dist[v] + 1;
                q.push_back(w);
            }
        }
    }
    let mut k = 0;
    let mut c = 0;
    for id in g.node_ids() {
        if g.node(id).is_variable() && dist[id.index()] <= radius {
            k += 1;
            c += usize::from(inst.correct.contains(&id));
        }
    }
    (k, c)
}

#[test]
fn baseline_counts_match_bfs_and_estimate_is_within_three_se() {
    let cfg = common::tiny_config(Task::Fitb);
    let (a, b) = common::smoke_instances(&cfg);
    let insts = fitb(&[a, b].concat());
    for radius in [1, 2, 4, 8] {
        for inst in &insts {
            assert_eq!(candidates_within(inst, radius), within_radius(inst, radius));
        }
    }
    let exact = insts
        .iter()
        .map(|i| {
            let (k, c) = within_radius(i, 8);
            if k == 0 { 0.0 } else { c as f64 / k as f64 }
        })
        .sum::<f64>()
        / insts.len() as f64;
    let r = random_baseline(&insts, 8, 50_000, 3).unwrap();
    assert!((r.exact - exact).abs() < 1e-12);
    assert!((r.estimate - exact).abs() <= 3.0 * r.standard_error, "{r:?}");
    assert!(random_baseline(&[], 8, 10, 0).is_err());
    assert!(random_baseline(&insts, 0, 10, 0).is_err());
}
