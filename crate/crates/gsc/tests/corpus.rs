mod common;

use std::collections::{BTreeMap, BTreeSet};
use std::fs;
use std::path::Path;

use gsc::corpus::{detect_duplication, scan_corpus, split_dataset, SourceUnit, SPLIT_NAMES};
use gsc::GscError;
use proptest::prelude::*;

fn write(root: &Path, rel: &str, bytes: &[u8]) {
    let p = root.join(rel);
    fs::create_dir_all(p.parent().unwrap()).unwrap();
    fs::write(p, bytes).unwrap();
}

const CLASS: &[u8] = b"class A { int f(int x) { return x; } }\n";

#[test]
fn scan_orders_by_repo_then_path_and_warns_on_skips() {
    let dir = tempfile::tempdir().unwrap();
    let root = dir.path();
    write(root, "zeta/src/B.java", CLASS);
    write(root, "alpha/z/Y.java", CLASS);
    write(root, "alpha/A.java", CLASS);
    write(root, "alpha/notes.txt", b"not code");
    write(root, "Loose.java", CLASS);
    write(root, "alpha/Bad.java", &[0xff, 0xfe, 0x00, 0x63]);
    write(root, "alpha/Empty.java", b"// only a comment\n\n");
    let (units, warnings) = scan_corpus(root).unwrap();
    let keys: Vec<String> = units.iter().map(|u| u.key()).collect();
    assert_eq!(keys, ["alpha/A.java", "alpha/z/Y.java", "zeta/src/B.java"]);
    let warned: BTreeSet<String> =
        warnings.iter().map(|w| w.path.file_name().unwrap().to_string_lossy().into_owned()).collect();
    let want: BTreeSet<String> = ["Loose.java", "Bad.java", "Empty.java"].iter().map(|s| s.to_string()).collect();
    assert_eq!(warned, want);
}

#[test]
fn scan_rejects_empty_and_missing_roots() {
    let dir = tempfile::tempdir().unwrap();
    write(dir.path(), "repo/readme.md", b"# nothing");
    assert!(matches!(scan_corpus(dir.path()), Err(GscError::EmptyCorpus { .. })));
    assert!(matches!(scan_corpus(&dir.path().join("missing")), Err(GscError::Io { .. })));
}

#[test]
fn bundled_corpus_scans_every_file() {
    let (units, warnings) = scan_corpus(&common::fixture("corpus")).unwrap();
    assert!(warnings.is_empty(), "{warnings:?}");
    let repos: BTreeSet<&str> = units.iter().map(|u| u.repo_id.as_str()).collect();
    assert!(units.len() >= 150 && repos.len() >= 10);
}

fn units(repos: usize, files: usize) -> Vec<SourceUnit> {
    (0..repos)
        .flat_map(|r| {
            (0..files).map(move |f| SourceUnit {
                repo_id: format!("r{r}"),
                path: format!("F{f}.java"),
                text: String::from_utf8(CLASS.to_vec()).unwrap(),
            })
        })
        .collect()
}

#[test]
fn split_is_a_deterministic_partition_with_whole_unseen_repos() {
    let us = units(6, 20);
    let a = split_dataset(&us, 2, 0.2, 0.1, 42).unwrap();
    assert_eq!(a, split_dataset(&us, 2, 0.2, 0.1, 42).unwrap());
    assert_ne!(a, split_dataset(&us, 2, 0.2, 0.1, 43).unwrap());
    let assignment = a.assignment();
    assert_eq!(assignment.len(), us.len());
    let total: usize = SPLIT_NAMES.iter().map(|n| a.part(n).unwrap().len()).sum();
    assert_eq!(total, us.len());
    let unseen_repos: BTreeSet<&str> = a.unseen_test.iter().map(|k| k.split('/').next().unwrap()).collect();
    assert_eq!(unseen_repos.len(), 2);
    assert_eq!(a.unseen_test.len(), 40);
    for name in ["train", "validation", "seen_test"] {
        assert!(a.part(name).unwrap().iter().all(|k| !unseen_repos.contains(k.split('/').next().unwrap())));
    }
    assert_eq!(a.seen_test.len(), 16);
    assert_eq!(a.validation.len(), 6);
    for name in SPLIT_NAMES {
        let part = a.part(name).unwrap();
        assert!(part.windows(2).all(|w| w[0] < w[1]));
    }
}

#[test]
fn split_manifest_round_trips_through_json() {
    let a = split_dataset(&units(3, 5), 1, 0.3, 0.3, 9).unwrap();
    let text = serde_json::to_string(&a).unwrap();
    let v: serde_json::Value = serde_json::from_str(&text).unwrap();
    let keys: BTreeSet<&str> = v.as_object().unwrap().keys().map(String::as_str).collect();
    assert_eq!(keys, BTreeSet::from(["seed", "train", "validation", "seen_test", "unseen_test"]));
    assert_eq!(serde_json::from_str::<gsc::corpus::DatasetSplit>(&text).unwrap(), a);
}

#[test]
fn split_rejects_bad_arguments() {
    let us = units(2, 3);
    assert!(matches!(split_dataset(&us, 2, 0.2, 0.1, 0), Err(GscError::Split(_))));
    assert!(matches!(split_dataset(&us, 1, 0.0, 0.1, 0), Err(GscError::Split(_))));
    assert!(matches!(split_dataset(&us, 1, 0.2, 1.0, 0), Err(GscError::Split(_))));
}

/// Token files laid out from `(token, newline_after)` pairs over a tiny
/// alphabet, so repeated windows are common.
fn token_file() -> impl Strategy<Value = Vec<(u8, bool)>> {
    prop::collection::vec((0u8..3, prop::bool::weighted(0.3)), 0..40)
}

fn render(tokens: &[(u8, bool)]) -> (String, Vec<u32>) {
    let mut text = String::new();
    let mut lines = Vec::new();
    let mut line = 1;
    for &(t, nl) in tokens {
        text.push(['a', 'b', 'c'][t as usize]);
        lines.push(line);
        if nl {
            text.push('\n');
            line += 1;
        } else {
            text.push(' ');
        }
    }
    (text, lines)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn duplication_matches_pairwise_window_comparison(files in prop::collection::vec(token_file(), 1..5), run in 1usize..5) {
        let rendered: Vec<(String, Vec<u32>)> = files.iter().map(|f| render(f)).collect();
        let us: Vec<SourceUnit> = rendered
            .iter()
            .enumerate()
            .map(|(i, (text, _))| SourceUnit { repo_id: "r".into(), path: format!("F{i}.java"), text: text.clone() })
            .collect();
        let report = detect_duplication(&us, run).unwrap();

        let windows: Vec<(usize, usize)> = files
            .iter()
            .enumerate()
            .flat_map(|(fi, f)| (0..(f.len() + 1).saturating_sub(run)).map(move |s| (fi, s)))
            .collect();
        let toks = |fi: usize, s: usize| files[fi][s..s + run].iter().map(|t| t.0).collect::<Vec<_>>();
        let mut covered: Vec<Vec<bool>> = files.iter().map(|f| vec![false; f.len()]).collect();
        for (i, &(fa, sa)) in windows.iter().enumerate() {
            for &(fb, sb) in &windows[i + 1..] {
                if toks(fa, sa) == toks(fb, sb) {
                    for k in 0..run {
                        covered[fa][sa + k] = true;
                        covered[fb][sb + k] = true;
                    }
                }
            }
        }
        let mut total = 0;
        let mut dup = 0;
        for ((_, lines), cov) in rendered.iter().zip(&covered) {
            let mut per_line: BTreeMap<u32, bool> = BTreeMap::new();
            for (&l, &c) in lines.iter().zip(cov) {
                *per_line.entry(l).or_default() |= c;
            }
            total += per_line.len();
            dup += per_line.values().filter(|&&d| d).count();
        }
        prop_assert_eq!(report.total_lines, total);
        prop_assert_eq!(report.duplicated_lines, dup);
        let located: usize = report.locations.iter().map(|l| (l.end_line - l.start_line) as usize + 1).sum();
        prop_assert_eq!(located, dup);
    }
}

#[test]
fn duplication_rejects_zero_run() {
    assert!(detect_duplication(&units(1, 1), 0).is_err());
}
