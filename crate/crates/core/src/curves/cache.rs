//! Resumable record of finished search branches.
//!
//! The cache is a single JSON file holding, per search key, the branches
//! that have been searched to the end. A file written by another format
//! version is ignored and overwritten.

use std::collections::BTreeMap;
use std::fs;
use std::path::{Path, PathBuf};
use std::time::{Duration, Instant};

use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use super::pattern::CurvePattern;
use super::search::{ArcConstraint, Decision};
use crate::error::Result;

pub const CACHE_VERSION: u32 = 1;

/// Environment variable naming the default cache directory.
pub const CACHE_DIR_ENV: &str = "ARTIN_MONODROMY_CACHE_DIR";

const WRITE_INTERVAL: Duration = Duration::from_secs(2);

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BranchRecord {
    pub nodes: u64,
    pub found: Option<Vec<Decision>>,
}

#[derive(Debug, Default, Serialize, Deserialize)]
struct CacheFile {
    version: u32,
    entries: BTreeMap<String, BTreeMap<usize, BranchRecord>>,
}

#[derive(Debug)]
pub struct SearchCache {
    path: PathBuf,
    key: String,
    file: CacheFile,
    dirty: bool,
    last_write: Instant,
}

/// Default cache file for a pattern, under [`CACHE_DIR_ENV`] if set.
pub fn default_cache_path() -> Option<PathBuf> {
    std::env::var_os(CACHE_DIR_ENV).map(|d| PathBuf::from(d).join("min-genus-cache.json"))
}

impl SearchCache {
    pub fn key(
        pattern: &CurvePattern,
        order: &[String],
        constraints: &[ArcConstraint],
        target: usize,
        depth: usize,
        branches: usize,
    ) -> String {
        let mut h = Sha256::new();
        h.update(pattern.to_json_string().as_bytes());
        h.update(serde_json::to_vec(order).expect("labels serialize"));
        h.update(serde_json::to_vec(constraints).expect("constraints serialize"));
        h.update(format!("|{target}|{depth}|{branches}|{CACHE_VERSION}").as_bytes());
        h.finalize().iter().map(|b| format!("{b:02x}")).collect()
    }

    /// Open the cache at `path`. Without `resume`, previous records for this
    /// key are discarded.
    pub fn open(path: &Path, key: &str, resume: bool) -> Result<Self> {
        let mut file = match fs::read_to_string(path) {
            Ok(s) => match serde_json::from_str::<CacheFile>(&s) {
                Ok(f) if f.version == CACHE_VERSION => f,
                _ => CacheFile::default(),
            },
            Err(e) if e.kind() == std::io::ErrorKind::NotFound => CacheFile::default(),
            Err(e) => return Err(e.into()),
        };
        file.version = CACHE_VERSION;
        if !resume {
            file.entries.remove(key);
        }
        file.entries.entry(key.to_string()).or_default();
        Ok(SearchCache {
            path: path.to_path_buf(),
            key: key.to_string(),
            file,
            dirty: false,
            last_write: Instant::now(),
        })
    }

    pub fn get(&self, index: usize) -> Option<&BranchRecord> {
        self.file.entries.get(&self.key).and_then(|b| b.get(&index))
    }

    pub fn completed(&self) -> usize {
        self.file.entries.get(&self.key).map_or(0, BTreeMap::len)
    }

    pub fn record(&mut self, index: usize, rec: BranchRecord) -> Result<()> {
        self.file
            .entries
            .entry(self.key.clone())
            .or_default()
            .insert(index, rec);
        self.dirty = true;
        if self.last_write.elapsed() >= WRITE_INTERVAL {
            self.flush()?;
        }
        Ok(())
    }

    /// Write the cache atomically if anything changed.
    pub fn flush(&mut self) -> Result<()> {
        if !self.dirty {
            return Ok(());
        }
        if let Some(dir) = self.path.parent().filter(|d| !d.as_os_str().is_empty()) {
            fs::create_dir_all(dir)?;
        }
        let tmp = self.path.with_extension("json.tmp");
        fs::write(&tmp, serde_json::to_vec(&self.file)?)?;
        fs::rename(&tmp, &self.path)?;
        self.dirty = false;
        self.last_write = Instant::now();
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::standard;

    #[test]
    fn round_trip_and_version_reset() {
        let dir = std::env::temp_dir().join(format!("am-cache-{}", std::process::id()));
        let path = dir.join("c.json");
        let p = standard::chain7_pattern();
        let key = SearchCache::key(&p, &[], &[], 3, 2, 10);
        let mut c = SearchCache::open(&path, &key, false).unwrap();
        c.record(
            4,
            BranchRecord {
                nodes: 7,
                found: None,
            },
        )
        .unwrap();
        c.flush().unwrap();
        let c = SearchCache::open(&path, &key, true).unwrap();
        assert_eq!(c.get(4).unwrap().nodes, 7);
        let c = SearchCache::open(&path, &key, false).unwrap();
        assert!(c.get(4).is_none());
        fs::write(&path, r#"{"version":0,"entries":{}}"#).unwrap();
        let c = SearchCache::open(&path, &key, true).unwrap();
        assert_eq!(c.completed(), 0);
        fs::remove_dir_all(dir).ok();
    }
}
