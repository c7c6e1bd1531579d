mod common;

use gsc::format::{read_jsonl, write_jsonl, GraphRecord, InstanceRecord, LabeledInstance};
use gsc::GscError;
use gsc_core::augment::{add_reverse_edges, augment};
use gsc_core::cache::{build_cache, CacheMode};
use gsc_core::parser::source_to_graph;
use gsc_core::tasks::Task;

const SOURCE: &str = r#"
class Counter {
    private int total;
    int add(int step) {
        for (int i = 0; i < step; i++) {
            total = total + i;
        }
        return total;
    }
}
"#;

#[test]
fn graph_records_round_trip_at_every_stage() {
    let mut g = source_to_graph(SOURCE).unwrap();
    let check = |g: &gsc_core::CodeGraph| {
        let rec = GraphRecord::from_graph("repo/Counter.java", g);
        let text = serde_json::to_string(&rec).unwrap();
        let back: GraphRecord = serde_json::from_str(&text).unwrap();
        assert_eq!(back, rec);
        assert_eq!(&back.to_graph().unwrap(), g);
    };
    check(&g);
    augment(&mut g);
    check(&g);
    build_cache(&mut g, CacheMode::Full);
    check(&g);
    add_reverse_edges(&mut g).unwrap();
    check(&g);
}

#[test]
fn instance_records_round_trip_for_both_tasks() {
    for task in [Task::Fitb, Task::VarNaming] {
        let (a, b) = common::smoke_instances(&common::tiny_config(task));
        for inst in a.iter().chain(&b).take(25) {
            let rec = InstanceRecord::from_instance(inst);
            let text = serde_json::to_string(&rec).unwrap();
            let back: InstanceRecord = serde_json::from_str(&text).unwrap();
            assert_eq!(&back.to_instance().unwrap(), inst);
        }
    }
}

#[test]
fn jsonl_files_round_trip_and_report_bad_lines() {
    let dir = tempfile::tempdir().unwrap();
    let (a, _) = common::smoke_instances(&common::tiny_config(Task::Fitb));
    let path = dir.path().join("x.jsonl");
    write_jsonl(&path, a.iter().map(InstanceRecord::from_instance)).unwrap();
    let back: Vec<InstanceRecord> = read_jsonl(&path).unwrap();
    let back: Vec<LabeledInstance> = back.iter().map(|r| r.to_instance().unwrap()).collect();
    assert_eq!(back, a);

    std::fs::write(&path, "{\"file\": \"a\", \"nodes\": [], \"edges\": []}\n\nnot json\n").unwrap();
    match read_jsonl::<GraphRecord>(&path) {
        Err(GscError::Json { line, .. }) => assert_eq!(line, 3),
        other => panic!("expected a JSON error, got {other:?}"),
    }
}

#[test]
fn malformed_records_are_rejected() {
    let g = source_to_graph(SOURCE).unwrap();
    let rec = GraphRecord::from_graph("f", &g);

    let mut bad = rec.clone();
    bad.edges[0].2 = "NOT_AN_EDGE".into();
    assert!(bad.to_graph().is_err());

    let mut bad = rec.clone();
    bad.edges[0].1 = 10_000;
    assert!(bad.to_graph().is_err());

    let mut bad = rec.clone();
    bad.nodes.swap(0, 1);
    assert!(bad.to_graph().is_err());

    let mut bad = rec.clone();
    bad.nodes[3].decl = Some(10_000);
    assert!(bad.to_graph().is_err());

    let (a, _) = common::smoke_instances(&common::tiny_config(Task::Fitb));
    let mut inst = InstanceRecord::from_instance(&a[0]);
    inst.blank_node = Some(100_000);
    assert!(inst.to_instance().is_err());
    inst.blank_node = None;
    assert!(inst.to_instance().is_err());
    let mut inst = InstanceRecord::from_instance(&a[0]);
    inst.task = "varnaming".into();
    assert!(inst.to_instance().is_err());
}
