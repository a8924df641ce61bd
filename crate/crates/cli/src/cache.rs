//! Append-only JSON-lines cache of solve results.

use std::fs::{self, File, OpenOptions};
use std::io::{BufRead, BufReader, Write};
use std::path::{Path, PathBuf};
use std::time::{SystemTime, UNIX_EPOCH};

use serde::{Deserialize, Serialize};
use thiserror::Error;
use zeckgame::solver::{Mode, ReportRecord, SCHEMA_VERSION};
use zeckgame::{GameParams, SolveReport};

/// Environment variable naming the default cache file.
pub const CACHE_ENV: &str = "ZGAME_CACHE";

#[derive(Debug, Error)]
pub enum CacheError {
    #[error("cache {path}: {source}")]
    Io {
        path: PathBuf,
        source: std::io::Error,
    },
    #[error("cache {path} line {line}: {message}")]
    Malformed {
        path: PathBuf,
        line: usize,
        message: String,
    },
    #[error("cache {path} line {line}: unsupported schema_version {found} (expected {SCHEMA_VERSION})")]
    Schema {
        path: PathBuf,
        line: usize,
        found: u64,
    },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CacheRecord {
    pub schema_version: u32,
    pub params: GameParams,
    pub n: u32,
    pub mode: Mode,
    pub p: usize,
    pub seating: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub focal: Option<String>,
    pub winners: Vec<String>,
    pub states_visited: usize,
    pub policy_digest: Option<String>,
    pub timestamp: u64,
}

/// What a cache entry is keyed on.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CacheKey {
    pub params: GameParams,
    pub n: u32,
    pub mode: Mode,
    pub p: usize,
    pub seating: String,
    pub focal: Option<String>,
}

impl CacheRecord {
    pub fn from_report(report: &SolveReport, focal: Option<String>) -> Self {
        let r = report.to_record(false);
        CacheRecord {
            schema_version: SCHEMA_VERSION,
            params: r.params,
            n: r.n,
            mode: r.mode,
            p: r.players,
            seating: r.seating,
            focal,
            winners: r.winners,
            states_visited: r.states_visited,
            policy_digest: r.policy_digest,
            timestamp: SystemTime::now()
                .duration_since(UNIX_EPOCH)
                .map(|d| d.as_secs())
                .unwrap_or(0),
        }
    }

    pub fn key(&self) -> CacheKey {
        CacheKey {
            params: self.params,
            n: self.n,
            mode: self.mode,
            p: self.p,
            seating: self.seating.clone(),
            focal: self.focal.clone(),
        }
    }

    pub fn to_report_record(&self, cache_hit: bool) -> ReportRecord {
        ReportRecord {
            schema_version: self.schema_version,
            params: self.params,
            n: self.n,
            mode: self.mode,
            players: self.p,
            seating: self.seating.clone(),
            winners: self.winners.clone(),
            states_visited: self.states_visited,
            cache_hit,
            policy_digest: self.policy_digest.clone(),
        }
    }

    pub fn to_line(&self) -> String {
        serde_json::to_string(self).expect("record serializes")
    }

    /// Parse one line, rejecting unknown schema versions before anything else.
    pub fn from_line(text: &str) -> Result<Self, (Option<u64>, String)> {
        let value: serde_json::Value = serde_json::from_str(text).map_err(|e| (None, e.to_string()))?;
        let version = value
            .get("schema_version")
            .and_then(|v| v.as_u64())
            .ok_or((None, "missing schema_version".to_string()))?;
        if version != SCHEMA_VERSION as u64 {
            return Err((Some(version), String::new()));
        }
        serde_json::from_value(value).map_err(|e| (None, e.to_string()))
    }
}

pub struct Cache {
    path: PathBuf,
}

impl Cache {
    pub fn new(path: impl Into<PathBuf>) -> Self {
        Cache { path: path.into() }
    }

    pub fn path(&self) -> &Path {
        &self.path
    }

    fn io(&self, source: std::io::Error) -> CacheError {
        CacheError::Io {
            path: self.path.clone(),
            source,
        }
    }

    /// Every record in file order. A missing file is an empty cache.
    pub fn records(&self) -> Result<Vec<CacheRecord>, CacheError> {
        let file = match File::open(&self.path) {
            Ok(f) => f,
            Err(e) if e.kind() == std::io::ErrorKind::NotFound => return Ok(Vec::new()),
            Err(e) => return Err(self.io(e)),
        };
        let mut out = Vec::new();
        for (i, line) in BufReader::new(file).lines().enumerate() {
            let line = line.map_err(|e| self.io(e))?;
            if line.trim().is_empty() {
                continue;
            }
            match CacheRecord::from_line(&line) {
                Ok(r) => out.push(r),
                Err((Some(found), _)) => {
                    return Err(CacheError::Schema {
                        path: self.path.clone(),
                        line: i + 1,
                        found,
                    })
                }
                Err((None, message)) => {
                    return Err(CacheError::Malformed {
                        path: self.path.clone(),
                        line: i + 1,
                        message,
                    })
                }
            }
        }
        Ok(out)
    }

    /// Most recent record for `key`.
    pub fn lookup(&self, key: &CacheKey) -> Result<Option<CacheRecord>, CacheError> {
        Ok(self.records()?.into_iter().rev().find(|r| &r.key() == key))
    }

    pub fn append(&self, record: &CacheRecord) -> Result<(), CacheError> {
        if let Some(dir) = self.path.parent().filter(|d| !d.as_os_str().is_empty()) {
            fs::create_dir_all(dir).map_err(|e| self.io(e))?;
        }
        let mut file = OpenOptions::new()
            .create(true)
            .append(true)
            .open(&self.path)
            .map_err(|e| self.io(e))?;
        writeln!(file, "{}", record.to_line()).map_err(|e| self.io(e))
    }

    pub fn clear(&self) -> Result<usize, CacheError> {
        let n = self.records().map(|r| r.len()).unwrap_or(0);
        match fs::remove_file(&self.path) {
            Ok(()) => Ok(n),
            Err(e) if e.kind() == std::io::ErrorKind::NotFound => Ok(0),
            Err(e) => Err(self.io(e)),
        }
    }
}
