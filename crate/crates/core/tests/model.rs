mod support;

use gsc_core::embed::{VocabCounter, Vocabs};
use gsc_core::gnn::GnnKind;
use gsc_core::model::{Model, ModelConfig, Outcome, Prediction, Representation, VocabStrategy};
use gsc_core::parser::source_to_graph;
use gsc_core::tasks::{make_fitb_instances, make_varnaming_instances, Instance, Task};
use gsc_core::tensor::{Adam, Grads, ParamStore, Tape};
use gsc_core::ModelError;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use support::gradcheck::{max_relative_error, REL_TOL};

const SRC: &str = "class Box { int size; int grow(int step) { int next = size + step; size = next; return next; } }";

fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn instances(cfg: &ModelConfig) -> Vec<Instance> {
    let g = source_to_graph(SRC).unwrap();
    let gc = cfg.graph_config();
    match cfg.task {
        Task::Fitb => make_fitb_instances(&g, &gc, &mut rng(0)).unwrap().into_iter().map(Instance::Fitb).collect(),
        Task::VarNaming => make_varnaming_instances(&g, &gc).unwrap().into_iter().map(Instance::VarNaming).collect(),
    }
}

fn vocabs() -> Vocabs {
    let mut counter = VocabCounter::default();
    counter.add_graph(&source_to_graph(SRC).unwrap());
    // Leaves some name words out of the closed vocabulary.
    counter.build(3, 20)
}

fn small(task: Task, repr: Representation, vocab: VocabStrategy, gnn: GnnKind) -> ModelConfig {
    ModelConfig { hidden: 4, rounds: 2, ..ModelConfig::new(task, repr, vocab, gnn) }
}

fn build(cfg: &ModelConfig, vocabs: &Vocabs, seed: u64) -> (ParamStore, Model) {
    let mut store = ParamStore::new();
    let mut r = rng(seed);
    let model = Model::new(cfg.clone(), vocabs, &mut store, &mut r).unwrap();
    let ids: Vec<_> = store.iter().map(|(id, _)| id).collect();
    for id in ids {
        for v in store.get_mut(id).value.data_mut() {
            *v += r.gen_range(-0.1..0.1);
        }
    }
    (store, model)
}

#[test]
fn model_losses_match_finite_differences() {
    let vocabs = vocabs();
    let configs = [
        small(Task::Fitb, Representation::AugAst, VocabStrategy::Gsc, GnnKind::Ggnn),
        small(Task::Fitb, Representation::Ast, VocabStrategy::ClosedVocab, GnnKind::Rgcn),
        small(Task::Fitb, Representation::AugAst, VocabStrategy::CharCnn, GnnKind::Dtnn),
        small(Task::VarNaming, Representation::AugAst, VocabStrategy::Gsc, GnnKind::Ggnn),
        small(Task::VarNaming, Representation::AugAst, VocabStrategy::ClosedVocab, GnnKind::Ggnn),
        small(Task::VarNaming, Representation::Ast, VocabStrategy::PointerSentinel, GnnKind::Rgcn),
    ];
    for cfg in configs {
        let insts = instances(&cfg);
        let inst = &insts[0];
        for seed in 0..2 {
            let (store, model) = build(&cfg, &vocabs, seed);
            let (err, at) = max_relative_error(&store, &|tape| model.loss(tape, inst, &vocabs));
            assert!(err < REL_TOL, "{} seed {seed}: {err} at {at}", cfg.label());
        }
    }
}

#[test]
fn rebinding_parameters_reproduces_predictions() {
    let vocabs = vocabs();
    for task in [Task::Fitb, Task::VarNaming] {
        let cfg = small(task, Representation::AugAst, VocabStrategy::Gsc, GnnKind::Ggnn);
        let (store, model) = build(&cfg, &vocabs, 3);
        let copy = store.clone();
        let rebound = Model::from_store(cfg.clone(), &copy).unwrap();
        for inst in instances(&cfg) {
            assert_eq!(model.predict(&store, &inst, &vocabs, 5).unwrap(), rebound.predict(&copy, &inst, &vocabs, 5).unwrap());
        }
    }
}

#[test]
fn predictions_have_expected_shape() {
    let vocabs = vocabs();
    let cfg = small(Task::Fitb, Representation::AugAst, VocabStrategy::Gsc, GnnKind::Ggnn);
    let (store, model) = build(&cfg, &vocabs, 4);
    let inst = &instances(&cfg)[0];
    let Prediction::Fitb { scores, ranked } = model.predict(&store, inst, &vocabs, 5).unwrap() else { panic!() };
    assert_eq!(scores.len(), inst.graph().len());
    assert!(scores.iter().all(|p| (0.0..=1.0).contains(p)));
    assert!(ranked.windows(2).all(|w| scores[w[0].index()] >= scores[w[1].index()]));

    let cfg = small(Task::VarNaming, Representation::AugAst, VocabStrategy::Gsc, GnnKind::Ggnn);
    let (store, model) = build(&cfg, &vocabs, 4);
    let inst = &instances(&cfg)[0];
    let Prediction::Naming { names } = model.predict(&store, inst, &vocabs, 5).unwrap() else { panic!() };
    assert!(!names.is_empty() && names.len() <= 5);
    assert!(names.windows(2).all(|w| w[0].1 >= w[1].1));
    assert!(names.iter().all(|(n, lp)| n.words.len() <= 9 && *lp <= 0.0));
}

#[test]
fn task_mismatch_is_rejected() {
    let vocabs = vocabs();
    let cfg = small(Task::Fitb, Representation::AugAst, VocabStrategy::Gsc, GnnKind::Ggnn);
    let (store, model) = build(&cfg, &vocabs, 0);
    let naming = small(Task::VarNaming, Representation::AugAst, VocabStrategy::Gsc, GnnKind::Ggnn);
    let inst = &instances(&naming)[0];
    assert!(matches!(model.evaluate(&store, inst, &vocabs), Err(ModelError::Config(_))));
}

#[test]
fn a_few_adam_steps_fit_one_fitb_instance() {
    let vocabs = vocabs();
    let cfg = ModelConfig { hidden: 8, rounds: 3, ..ModelConfig::new(Task::Fitb, Representation::AugAst, VocabStrategy::Gsc, GnnKind::Ggnn) };
    let mut store = ParamStore::new();
    let model = Model::new(cfg.clone(), &vocabs, &mut store, &mut rng(1)).unwrap();
    let inst = &instances(&cfg)[0];
    let adam = Adam::with_lr(0.01);
    let loss_of = |store: &ParamStore| {
        let mut tape = Tape::new(store);
        let l = model.loss(&mut tape, inst, &vocabs).unwrap();
        tape.value(l).item()
    };
    let before = loss_of(&store);
    for _ in 0..60 {
        let mut grads = Grads::new();
        let mut tape = Tape::new(&store);
        let l = model.loss(&mut tape, inst, &vocabs).unwrap();
        tape.backward(l, &mut grads).unwrap();
        drop(tape);
        adam.step(&mut store, &mut grads).unwrap();
    }
    assert!(loss_of(&store) < before * 0.5);
    assert!(matches!(model.evaluate(&store, inst, &vocabs).unwrap(), Outcome::Fitb(o) if o.top1));
}

#[test]
fn labels_and_strategies_parse() {
    let cfg = ModelConfig::new(Task::Fitb, Representation::AugAst, VocabStrategy::Gsc, GnnKind::Ggnn);
    assert_eq!(cfg.label(), "augast-gsc-ggnn");
    for v in VocabStrategy::ALL {
        assert_eq!(v.as_str().parse::<VocabStrategy>().unwrap(), v);
    }
    assert!("bpe".parse::<VocabStrategy>().is_err());
    assert!("cfg".parse::<Representation>().is_err());
}
