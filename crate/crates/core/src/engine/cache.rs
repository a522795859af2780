use std::collections::HashMap;
use std::fs::{self, File, OpenOptions};
use std::io::{BufRead, BufReader, Write};
use std::path::{Path, PathBuf};

use num_bigint::BigUint;

use super::{CountKind, CountRecord, ENGINE_VERSION};
use crate::Result;

/// Environment variable naming the cache directory when no flag is given.
pub const CACHE_ENV: &str = "AVOIDANCE_LAB_CACHE";
/// File inside the cache directory holding one JSON record per line.
pub const CACHE_FILE: &str = "counts.jsonl";

/// Append-only store of exact counts keyed by `(kind, pattern, n)`.
///
/// Lines written by a different engine version, or that fail to parse, are
/// skipped on load.
#[derive(Debug)]
pub struct CountCache {
    path: PathBuf,
    entries: HashMap<(CountKind, String, usize), BigUint>,
}

impl CountCache {
    pub fn open(dir: impl AsRef<Path>) -> Result<Self> {
        let dir = dir.as_ref();
        fs::create_dir_all(dir)?;
        let path = dir.join(CACHE_FILE);
        let mut entries = HashMap::new();
        if path.exists() {
            for line in BufReader::new(File::open(&path)?).lines() {
                let line = line?;
                let Ok(record) = serde_json::from_str::<CountRecord>(&line) else {
                    continue;
                };
                if record.engine_version == ENGINE_VERSION {
                    entries.insert((record.kind, record.pattern, record.n), record.value);
                }
            }
        }
        Ok(CountCache { path, entries })
    }

    /// Opens the directory named by [`CACHE_ENV`], if set.
    pub fn from_env() -> Result<Option<Self>> {
        match std::env::var_os(CACHE_ENV) {
            Some(dir) if !dir.is_empty() => Ok(Some(Self::open(dir)?)),
            _ => Ok(None),
        }
    }

    pub fn path(&self) -> &Path {
        &self.path
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn get(&self, kind: CountKind, pattern: &str, n: usize) -> Option<BigUint> {
        self.entries.get(&(kind, pattern.to_string(), n)).cloned()
    }

    /// Appends `record` unless an identical key is already stored.
    pub fn insert(&mut self, record: &CountRecord) -> Result<()> {
        let key = (record.kind, record.pattern.clone(), record.n);
        if self.entries.contains_key(&key) {
            return Ok(());
        }
        let mut line = serde_json::to_string(&CountRecord {
            engine_version: ENGINE_VERSION.into(),
            ..record.clone()
        })?;
        line.push('\n');
        OpenOptions::new().create(true).append(true).open(&self.path)?.write_all(line.as_bytes())?;
        self.entries.insert(key, record.value.clone());
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_trip_and_idempotent_append() {
        let dir = tempfile::tempdir().unwrap();
        let record = CountRecord::new(CountKind::PartitionAvoiders, "123", 5, BigUint::from(26u32));
        {
            let mut cache = CountCache::open(dir.path()).unwrap();
            assert!(cache.is_empty());
            cache.insert(&record).unwrap();
            cache.insert(&record).unwrap();
        }
        let text = fs::read_to_string(dir.path().join(CACHE_FILE)).unwrap();
        assert_eq!(text.lines().count(), 1);
        let cache = CountCache::open(dir.path()).unwrap();
        assert_eq!(cache.get(CountKind::PartitionAvoiders, "123", 5), Some(BigUint::from(26u32)));
        assert_eq!(cache.get(CountKind::PartitionAvoiders, "123", 6), None);
    }

    #[test]
    fn stale_and_garbled_lines_are_ignored() {
        let dir = tempfile::tempdir().unwrap();
        let stale = CountRecord {
            engine_version: "avoidance-lab/0.0.0-old".into(),
            ..CountRecord::new(CountKind::PartitionAvoiders, "123", 5, BigUint::from(999u32))
        };
        let body = format!("{}\nnot json\n", serde_json::to_string(&stale).unwrap());
        fs::write(dir.path().join(CACHE_FILE), body).unwrap();
        let cache = CountCache::open(dir.path()).unwrap();
        assert!(cache.is_empty());
    }
}
