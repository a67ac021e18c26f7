//! Append-only line-delimited result record store.
//!
//! Records are keyed by (certificate or descriptor, query string); re-runs
//! of a cached query return the stored value without searching, which makes
//! long surveys resumable. The store location comes from `--cache-dir` or
//! the `TDL_CACHE_DIR` environment variable; without either, caching is
//! disabled.

use serde::{Deserialize, Serialize};
use std::fs;
use std::io::Write;
use std::path::PathBuf;

pub const TOOL_VERSION: &str = env!("CARGO_PKG_VERSION");

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct ResultRecord {
    pub certificate: String,
    pub query: String,
    pub value: serde_json::Value,
    pub runtime_ms: u64,
    pub tool_version: String,
}

pub struct CacheStore {
    path: Option<PathBuf>,
}

impl CacheStore {
    pub fn open(flag: Option<PathBuf>) -> CacheStore {
        let path = flag
            .or_else(|| std::env::var_os("TDL_CACHE_DIR").map(PathBuf::from))
            .map(|dir| dir.join("records.jsonl"));
        CacheStore { path }
    }

    pub fn enabled(&self) -> bool {
        self.path.is_some()
    }

    /// First stored value for the key, if any.
    pub fn lookup(&self, certificate: &str, query: &str) -> Option<serde_json::Value> {
        let path = self.path.as_ref()?;
        let text = fs::read_to_string(path).ok()?;
        for line in text.lines() {
            if line.trim().is_empty() {
                continue;
            }
            if let Ok(rec) = serde_json::from_str::<ResultRecord>(line) {
                if rec.certificate == certificate && rec.query == query {
                    return Some(rec.value);
                }
            }
        }
        None
    }

    /// Appends one record. Identical keys must carry identical values; a
    /// conflicting append is refused loudly and the original kept.
    pub fn append(&self, record: &ResultRecord) {
        let Some(path) = self.path.as_ref() else { return };
        if let Some(existing) = self.lookup(&record.certificate, &record.query) {
            if existing != record.value {
                eprintln!(
                    "cache conflict for ({}, {}): keeping the stored value",
                    record.certificate, record.query
                );
            }
            return;
        }
        if let Some(parent) = path.parent() {
            let _ = fs::create_dir_all(parent);
        }
        let line = serde_json::to_string(record).expect("records serialize");
        match fs::OpenOptions::new().create(true).append(true).open(path) {
            Ok(mut f) => {
                let _ = writeln!(f, "{line}");
            }
            Err(e) => eprintln!("cannot write record store {}: {e}", path.display()),
        }
    }
}
