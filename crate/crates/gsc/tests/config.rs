use gsc::config::ExperimentConfig;
use gsc::GscError;
use gsc_core::gnn::GnnKind;
use gsc_core::model::{Representation, VocabStrategy};
use gsc_core::tasks::varnaming::Mixture;
use gsc_core::tasks::Task;
use proptest::prelude::*;

#[test]
fn text_round_trips_and_hash_tracks_content() {
    let cfg = ExperimentConfig { hidden: 32, lr: 0.0025, target_metric: Some(0.95), seed: 11, ..ExperimentConfig::default() };
    let back = ExperimentConfig::from_text(&cfg.to_text()).unwrap();
    assert_eq!(back, cfg);
    assert_eq!(back.hash(), cfg.hash());
    assert_eq!(cfg.hash().len(), 64);
    let other = ExperimentConfig { seed: 12, ..cfg.clone() };
    assert_ne!(other.hash(), cfg.hash());
}

#[test]
fn aliases_comments_and_overrides() {
    let text = "# desk preset\n\ntask = varnaming\nrepr = ast\nvocab_strategy = closed_vocab\nunroll = 3\n  gnn =   rgcn  \ntarget_metric = none\n";
    let cfg = ExperimentConfig::from_text(text).unwrap();
    assert_eq!(cfg.task, Task::VarNaming);
    assert_eq!(cfg.representation, Representation::Ast);
    assert_eq!(cfg.vocab, VocabStrategy::ClosedVocab);
    assert_eq!(cfg.gnn, GnnKind::Rgcn);
    assert_eq!(cfg.rounds, 3);
    assert_eq!(cfg.target_metric, None);
    assert_eq!(ExperimentConfig::from_text("vocab = pointer_sentinel").unwrap().vocab, VocabStrategy::PointerSentinel);
}

#[test]
fn errors_name_the_line() {
    for (text, needle) in [
        ("task = fitb\nhidden 4\n", "line 2"),
        ("colour = blue\n", "unknown key"),
        ("\n\nlr = fast\n", "line 3"),
        ("task = poetry\n", "line 1"),
    ] {
        let err = ExperimentConfig::from_text(text).unwrap_err();
        assert!(matches!(err, GscError::Config(_)));
        assert!(err.to_string().contains(needle), "{err}");
    }
}

#[test]
fn validation_rejects_degenerate_values() {
    for text in ["hidden = 0", "batch_size = 0", "max_epochs = 0", "lr = 0", "lr = NaN", "max_nodes = 1"] {
        assert!(ExperimentConfig::from_text(text).is_err(), "{text}");
    }
}

#[test]
fn model_config_follows_the_experiment() {
    let cfg = ExperimentConfig { hidden: 12, rounds: 3, max_nodes: 200, ..ExperimentConfig::default() };
    let m = cfg.model_config();
    assert_eq!((m.hidden, m.rounds, m.max_nodes), (12, 3, 200));
    assert_eq!(m.label(), "augast-gsc-ggnn");
}

proptest! {
    #[test]
    fn any_valid_config_round_trips(
        task in prop::sample::select(vec![Task::Fitb, Task::VarNaming]),
        repr in prop::sample::select(vec![Representation::Ast, Representation::AugAst]),
        vocab in prop::sample::select(VocabStrategy::ALL.to_vec()),
        gnn in prop::sample::select(GnnKind::ALL.to_vec()),
        mixture in prop::sample::select(vec![Mixture::Normalized, Mixture::Interpolated]),
        hidden in 1usize..512,
        lr in 1e-6f64..1.0,
        target in prop::option::of(0.0f64..1.0),
        seed in any::<u64>(),
    ) {
        let cfg = ExperimentConfig {
            task, representation: repr, vocab, gnn, mixture, hidden, lr, target_metric: target, seed,
            ..ExperimentConfig::default()
        };
        let back = ExperimentConfig::from_text(&cfg.to_text()).unwrap();
        prop_assert_eq!(&back, &cfg);
        prop_assert_eq!(ExperimentConfig::from_map(&cfg.to_map()).unwrap(), cfg);
    }
}
