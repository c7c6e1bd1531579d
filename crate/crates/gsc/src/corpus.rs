//! Source file ingestion, dataset splits and duplicate-code detection.

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::path::{Path, PathBuf};

use gsc_core::parser::{tokenize, SOURCE_EXTENSION};
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{GscError, Result};

/// One source file of a repository.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SourceUnit {
    pub repo_id: String,
    /// Path inside the repository, `/`-separated.
    pub path: String,
    pub text: String,
}

impl SourceUnit {
    /// `repo_id/path`, the identifier used in manifests and records.
    pub fn key(&self) -> String {
        format!("{}/{}", self.repo_id, self.path)
    }
}

/// A file skipped during scanning.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ScanWarning {
    pub path: PathBuf,
    pub message: String,
}

/// Every `.java` file below `root`, one repository per top-level directory,
/// ordered by `(repo_id, path)`. Unreadable files, files outside a
/// repository directory and files without tokens are skipped with a warning.
pub fn scan_corpus(root: &Path) -> Result<(Vec<SourceUnit>, Vec<ScanWarning>)> {
    if !root.is_dir() {
        return Err(GscError::io(root, std::io::Error::new(std::io::ErrorKind::NotFound, "not a directory")));
    }
    let mut units = Vec::new();
    let mut warnings = Vec::new();
    for entry in walkdir::WalkDir::new(root).sort_by_file_name() {
        let entry = match entry {
            Ok(e) => e,
            Err(e) => {
                let path = e.path().map(Path::to_path_buf).unwrap_or_else(|| root.to_path_buf());
                warnings.push(ScanWarning { path, message: e.to_string() });
                continue;
            }
        };
        let path = entry.path();
        if !entry.file_type().is_file() || path.extension().and_then(|e| e.to_str()) != Some(SOURCE_EXTENSION) {
            continue;
        }
        let rel: Vec<String> = match path.strip_prefix(root) {
            Ok(r) => r.components().map(|c| c.as_os_str().to_string_lossy().into_owned()).collect(),
            Err(_) => continue,
        };
        if rel.len() < 2 {
            warnings.push(ScanWarning { path: path.into(), message: "file is not inside a repository directory".into() });
            continue;
        }
        let text = match std::fs::read_to_string(path) {
            Ok(t) => t,
            Err(e) => {
                warnings.push(ScanWarning { path: path.into(), message: e.to_string() });
                continue;
            }
        };
        if tokenize(&text).is_ok_and(|t| t.is_empty()) {
            warnings.push(ScanWarning { path: path.into(), message: "no code after comments and whitespace".into() });
            continue;
        }
        units.push(SourceUnit { repo_id: rel[0].clone(), path: rel[1..].join("/"), text });
    }
    if units.is_empty() {
        return Err(GscError::EmptyCorpus { root: root.into(), extension: SOURCE_EXTENSION });
    }
    units.sort_by(|a, b| (&a.repo_id, &a.path).cmp(&(&b.repo_id, &b.path)));
    Ok((units, warnings))
}

/// File-level partition of a corpus; entries are `repo_id/path` keys in
/// ascending order.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct DatasetSplit {
    pub seed: u64,
    pub train: Vec<String>,
    pub validation: Vec<String>,
    pub seen_test: Vec<String>,
    pub unseen_test: Vec<String>,
}

/// Names of the four parts, in manifest order.
pub const SPLIT_NAMES: [&str; 4] = ["train", "validation", "seen_test", "unseen_test"];

impl DatasetSplit {
    pub fn part(&self, name: &str) -> Option<&[String]> {
        match name {
            "train" => Some(&self.train),
            "validation" => Some(&self.validation),
            "seen_test" => Some(&self.seen_test),
            "unseen_test" => Some(&self.unseen_test),
            _ => None,
        }
    }

    /// Which part holds `key`.
    pub fn assignment(&self) -> BTreeMap<&str, &'static str> {
        let mut out = BTreeMap::new();
        for name in SPLIT_NAMES {
            for key in self.part(name).unwrap_or_default() {
                out.insert(key.as_str(), name);
            }
        }
        out
    }
}

fn check_fraction(name: &str, f: f64) -> Result<()> {
    if f > 0.0 && f < 1.0 {
        Ok(())
    } else {
        Err(GscError::Split(format!("{name} must lie in (0, 1), got {f}")))
    }
}

/// Holds out `unseen_repo_count` whole repositories, then a
/// `seen_file_fraction` of the remaining files as the seen test set, then a
/// `val_fraction` of what is left as validation. Same inputs and seed give
/// the same split.
pub fn split_dataset(
    units: &[SourceUnit],
    unseen_repo_count: usize,
    seen_file_fraction: f64,
    val_fraction: f64,
    seed: u64,
) -> Result<DatasetSplit> {
    check_fraction("seen file fraction", seen_file_fraction)?;
    check_fraction("validation fraction", val_fraction)?;
    let repos: BTreeSet<&str> = units.iter().map(|u| u.repo_id.as_str()).collect();
    if repos.len() < unseen_repo_count + 1 {
        return Err(GscError::Split(format!(
            "{} repositories cannot leave {unseen_repo_count} unseen and one for training",
            repos.len()
        )));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut repo_order: Vec<&str> = repos.into_iter().collect();
    repo_order.shuffle(&mut rng);
    let unseen: BTreeSet<&str> = repo_order[..unseen_repo_count].iter().copied().collect();

    let mut split = DatasetSplit { seed, ..DatasetSplit::default() };
    let mut rest = Vec::new();
    for u in units {
        if unseen.contains(u.repo_id.as_str()) {
            split.unseen_test.push(u.key());
        } else {
            rest.push(u.key());
        }
    }
    rest.sort();
    rest.shuffle(&mut rng);
    let n_seen = (seen_file_fraction * rest.len() as f64).round() as usize;
    let n_val = (val_fraction * (rest.len() - n_seen) as f64).round() as usize;
    split.seen_test = rest[..n_seen].to_vec();
    split.validation = rest[n_seen..n_seen + n_val].to_vec();
    split.train = rest[n_seen + n_val..].to_vec();
    for part in [&mut split.train, &mut split.validation, &mut split.seen_test, &mut split.unseen_test] {
        part.sort();
    }
    Ok(split)
}

/// A run of duplicated lines in one file.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DuplicateLocation {
    pub file: String,
    pub start_line: u32,
    pub end_line: u32,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct DuplicationReport {
    pub min_token_run: usize,
    /// Lines holding at least one token.
    pub total_lines: usize,
    pub duplicated_lines: usize,
    pub fraction: f64,
    pub locations: Vec<DuplicateLocation>,
}

struct TokenFile {
    key: String,
    hashes: Vec<u64>,
    texts: Vec<String>,
    lines: Vec<u32>,
}

fn text_hash(s: &str) -> u64 {
    // FNV-1a; only needs to be stable and cheap.
    s.bytes().fold(0xcbf2_9ce4_8422_2325, |h, b| (h ^ u64::from(b)).wrapping_mul(0x0100_0000_01b3))
}

/// Fraction of code lines covered by token windows of length
/// `min_token_run` that occur at least twice anywhere in the corpus.
/// Windows are found by a rolling hash with stride one and confirmed by
/// exact comparison. Files that fail to tokenize are ignored.
pub fn detect_duplication(units: &[SourceUnit], min_token_run: usize) -> Result<DuplicationReport> {
    if min_token_run == 0 {
        return Err(GscError::Config("minimum token run must be at least 1".into()));
    }
    let files: Vec<TokenFile> = units
        .iter()
        .filter_map(|u| {
            let toks = tokenize(&u.text).ok()?;
            Some(TokenFile {
                key: u.key(),
                hashes: toks.iter().map(|t| text_hash(&t.text)).collect(),
                texts: toks.iter().map(|t| t.text.clone()).collect(),
                lines: toks.iter().map(|t| t.line).collect(),
            })
        })
        .collect();

    const BASE: u64 = 0x9e37_79b9_7f4a_7c15;
    let top = (1..min_token_run).fold(1u64, |p, _| p.wrapping_mul(BASE));
    let mut buckets: HashMap<u64, Vec<(usize, usize)>> = HashMap::new();
    for (fi, f) in files.iter().enumerate() {
        if f.hashes.len() < min_token_run {
            continue;
        }
        let mut h = f.hashes[..min_token_run].iter().fold(0u64, |h, &x| h.wrapping_mul(BASE).wrapping_add(x));
        buckets.entry(h).or_default().push((fi, 0));
        for start in 1..=f.hashes.len() - min_token_run {
            h = h.wrapping_sub(f.hashes[start - 1].wrapping_mul(top));
            h = h.wrapping_mul(BASE).wrapping_add(f.hashes[start + min_token_run - 1]);
            buckets.entry(h).or_default().push((fi, start));
        }
    }

    let window = |(fi, s): (usize, usize)| &files[fi].texts[s..s + min_token_run];
    let mut covered: Vec<Vec<bool>> = files.iter().map(|f| vec![false; f.texts.len()]).collect();
    for entries in buckets.values().filter(|e| e.len() > 1) {
        // Group exactly equal windows; colliding hashes fall into separate groups.
        let mut groups: Vec<Vec<(usize, usize)>> = Vec::new();
        for &e in entries {
            match groups.iter_mut().find(|g| window(g[0]) == window(e)) {
                Some(g) => g.push(e),
                None => groups.push(vec![e]),
            }
        }
        for g in groups.into_iter().filter(|g| g.len() > 1) {
            for (fi, s) in g {
                covered[fi][s..s + min_token_run].iter_mut().for_each(|c| *c = true);
            }
        }
    }

    let mut total_lines = 0;
    let mut duplicated_lines = 0;
    let mut locations = Vec::new();
    for (f, cov) in files.iter().zip(&covered) {
        let mut line_dup: BTreeMap<u32, bool> = BTreeMap::new();
        for (&line, &c) in f.lines.iter().zip(cov) {
            *line_dup.entry(line).or_default() |= c;
        }
        total_lines += line_dup.len();
        let mut run: Option<(u32, u32)> = None;
        for (&line, &dup) in &line_dup {
            if dup {
                duplicated_lines += 1;
                run = Some(run.map_or((line, line), |(s, _)| (s, line)));
            } else if let Some((s, e)) = run.take() {
                locations.push(DuplicateLocation { file: f.key.clone(), start_line: s, end_line: e });
            }
        }
        if let Some((s, e)) = run {
            locations.push(DuplicateLocation { file: f.key.clone(), start_line: s, end_line: e });
        }
    }
    let fraction = if total_lines == 0 { 0.0 } else { duplicated_lines as f64 / total_lines as f64 };
    Ok(DuplicationReport { min_token_run, total_lines, duplicated_lines, fraction, locations })
}
