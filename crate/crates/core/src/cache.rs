//! Append-only JSON-lines cache for Betti tables.
//!
//! Keys combine the isomorphism-class encoding of the graph, the ideal
//! kind, and the field characteristic, so isomorphic inputs share one
//! entry. The audit mode recomputes a seeded sample and reports any
//! record that no longer matches a fresh run.

use std::collections::HashMap;
use std::fs::{self, OpenOptions};
use std::io::{BufRead, BufReader, Write};
use std::path::{Path, PathBuf};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::enumerate::canonical_key;
use crate::error::Result;
use crate::graph::Graph;

pub const ARTIFACT_VERSION: &str = env!("CARGO_PKG_VERSION");

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct CacheRecord {
    pub key: String,
    pub version: String,
    pub value: serde_json::Value,
}

pub fn betti_cache_key(graph: &Graph, ideal_kind: &str, p: u32) -> String {
    format!("{}|{}|p{}", canonical_key(graph), ideal_kind, p)
}

pub struct Cache {
    path: PathBuf,
    entries: HashMap<String, CacheRecord>,
}

impl Cache {
    /// Open (or create) the cache file under `dir`.
    pub fn open(dir: &Path) -> Result<Cache> {
        fs::create_dir_all(dir)?;
        let path = dir.join("betti-cache.jsonl");
        let mut entries = HashMap::new();
        if path.exists() {
            let reader = BufReader::new(fs::File::open(&path)?);
            for line in reader.lines() {
                let line = line?;
                if line.trim().is_empty() {
                    continue;
                }
                let record: CacheRecord = serde_json::from_str(&line)?;
                entries.insert(record.key.clone(), record);
            }
        }
        Ok(Cache { path, entries })
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn get(&self, key: &str) -> Option<&CacheRecord> {
        self.entries.get(key)
    }

    /// Append a record; existing keys are left untouched.
    pub fn put(&mut self, key: &str, value: serde_json::Value) -> Result<()> {
        if self.entries.contains_key(key) {
            return Ok(());
        }
        let record = CacheRecord {
            key: key.to_string(),
            version: ARTIFACT_VERSION.to_string(),
            value,
        };
        let mut file = OpenOptions::new()
            .create(true)
            .append(true)
            .open(&self.path)?;
        let mut line = serde_json::to_string(&record)?;
        line.push('\n');
        file.write_all(line.as_bytes())?;
        self.entries.insert(record.key.clone(), record);
        Ok(())
    }

    /// Recompute a seeded sample (at least one entry when nonempty) and
    /// return the keys whose stored value differs from a fresh run. The
    /// recompute closure may return `None` for keys it cannot rebuild;
    /// those are reported too.
    pub fn audit<F>(&self, fraction: f64, seed: u64, recompute: F) -> Result<Vec<String>>
    where
        F: Fn(&str) -> Result<Option<serde_json::Value>>,
    {
        let mut keys: Vec<&String> = self.entries.keys().collect();
        keys.sort();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut mismatched = Vec::new();
        let mut sampled = 0usize;
        for key in keys {
            let forced = sampled == 0 && self.entries.len() == 1;
            if !forced && !rng.random_bool(fraction.clamp(0.0, 1.0)) {
                continue;
            }
            sampled += 1;
            let stored = &self.entries[key].value;
            match recompute(key)? {
                Some(fresh) if &fresh == stored => {}
                _ => mismatched.push(key.clone()),
            }
        }
        Ok(mismatched)
    }
}
