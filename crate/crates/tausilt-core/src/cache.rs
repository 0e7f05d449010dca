//! Append-only JSON-lines result cache keyed by a canonical presentation
//! hash.

use crate::error::Result;
use crate::quiver::AlgebraPresentation;
use sha2::{Digest, Sha256};
use std::collections::HashMap;
use std::io::{BufRead, Write};
use std::path::{Path, PathBuf};

pub const ENGINE_VERSION: &str = env!("CARGO_PKG_VERSION");

#[derive(Clone, Debug, serde::Serialize, serde::Deserialize)]
pub struct CacheRecord {
    pub key: String,
    pub presentation: String,
    pub verdict: String,
    pub certificate: Option<String>,
    pub node_count: Option<usize>,
    pub engine_version: String,
}

/// Canonical cache key for a presentation.
pub fn presentation_key(p: &AlgebraPresentation) -> String {
    let mut hasher = Sha256::new();
    hasher.update(p.canonical_string().as_bytes());
    let digest = hasher.finalize();
    digest.iter().map(|b| format!("{b:02x}")).collect()
}

pub struct ResultCache {
    path: PathBuf,
    records: HashMap<String, CacheRecord>,
}

impl ResultCache {
    /// Opens (or creates) a cache file and loads its current contents.
    /// Lines from other engine versions are kept but not served.
    pub fn open(path: &Path) -> Result<ResultCache> {
        let mut records = HashMap::new();
        if path.exists() {
            let file = std::fs::File::open(path)?;
            for line in std::io::BufReader::new(file).lines() {
                let line = line?;
                if line.trim().is_empty() {
                    continue;
                }
                if let Ok(rec) = serde_json::from_str::<CacheRecord>(&line) {
                    if rec.engine_version == ENGINE_VERSION {
                        records.insert(rec.key.clone(), rec);
                    }
                }
            }
        }
        Ok(ResultCache { path: path.to_path_buf(), records })
    }

    pub fn lookup(&self, key: &str) -> Option<&CacheRecord> {
        self.records.get(key)
    }

    pub fn len(&self) -> usize {
        self.records.len()
    }

    pub fn is_empty(&self) -> bool {
        self.records.is_empty()
    }

    /// Appends a record to the file and the in-memory view.
    pub fn append(&mut self, record: CacheRecord) -> Result<()> {
        let mut file =
            std::fs::OpenOptions::new().create(true).append(true).open(&self.path)?;
        let line = serde_json::to_string(&record).expect("serializable record");
        writeln!(file, "{line}")?;
        self.records.insert(record.key.clone(), record);
        Ok(())
    }
}
