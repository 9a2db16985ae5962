//! Shared helpers for the integration tests: loading the shipped corpus.

use std::fs;
use std::path::PathBuf;

use truth_core::dsl::RawSystem;
use truth_core::SentenceSystem;

pub fn corpus_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../corpus")
}

/// Every corpus file, parsed and elaborated, sorted by file name.
pub fn load_corpus() -> Vec<(String, RawSystem, SentenceSystem)> {
    let mut paths: Vec<_> = fs::read_dir(corpus_dir())
        .expect("corpus directory exists")
        .map(|e| e.unwrap().path())
        .filter(|p| p.extension().is_some_and(|ext| ext == "tsys"))
        .collect();
    paths.sort();
    assert!(!paths.is_empty(), "corpus is not empty");
    paths
        .into_iter()
        .map(|path| {
            let text = fs::read_to_string(&path).unwrap();
            let file = path.file_name().unwrap().to_string_lossy().into_owned();
            let (raw, system) = truth_core::load_system(&text)
                .unwrap_or_else(|e| panic!("{file} failed to load: {e}"));
            (file, raw, system)
        })
        .collect()
}
