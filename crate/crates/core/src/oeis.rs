//! Sequence identification against a local OEIS "stripped" dump.
//!
//! The dump has one record per line, `A000108 ,1,1,2,5,14,42,`, and `#`
//! comment lines. Queries match a contiguous run of the stored prefix that
//! starts at offset 0, 1 or 2.

use std::collections::{BTreeMap, HashMap};
use std::fs;
use std::path::{Path, PathBuf};

use num_bigint::BigInt;
use serde::Serialize;
use thiserror::Error;

use crate::riordan::TriMatrix;

/// Shortest query accepted; shorter prefixes match too many entries to be useful.
pub const MIN_QUERY_LEN: usize = 6;

/// Offsets into a stored sequence at which a query may start.
pub const MAX_OFFSET: usize = 2;

pub const DUMP_ENV_VAR: &str = "OEIS_STRIPPED_PATH";

#[derive(Debug, Error)]
pub enum OeisError {
    #[error("cannot read OEIS dump {path}: {source}")]
    Io { path: PathBuf, source: std::io::Error },
    #[error("OEIS dump contains no parseable records")]
    Empty,
    #[error("query has {0} values; at least {MIN_QUERY_LEN} are required")]
    TooFewValues(usize),
    #[error("triangle needs at least 3 rows, got {0}")]
    TriangleTooSmall(usize),
    #[error("entry ({row}, {col}) is not an integer")]
    NonIntegral { row: usize, col: usize },
    #[error("no OEIS dump given: pass --oeis <path> or set {DUMP_ENV_VAR}")]
    NoDumpPath,
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub struct SequenceMatch {
    pub offset: usize,
    pub a_number: String,
}

/// Read-only index over a stripped dump.
#[derive(Debug, Clone, Default)]
pub struct OeisIndex {
    entries: BTreeMap<String, Vec<BigInt>>,
    // first MIN_QUERY_LEN terms at each allowed offset -> A-numbers
    by_window: HashMap<Vec<BigInt>, Vec<(usize, String)>>,
    skipped: usize,
}

fn parse_record(line: &str) -> Option<(String, Vec<BigInt>)> {
    let (id, rest) = line.split_once(char::is_whitespace)?;
    let valid_id = id.len() == 7 && id.starts_with('A') && id[1..].chars().all(|c| c.is_ascii_digit());
    if !valid_id {
        return None;
    }
    let rest = rest.trim();
    let body = rest.strip_prefix(',')?;
    let body = body.strip_suffix(',').unwrap_or(body);
    if body.is_empty() {
        return None;
    }
    let values = body.split(',').map(|v| v.trim().parse().ok()).collect::<Option<Vec<BigInt>>>()?;
    Some((id.to_string(), values))
}

impl OeisIndex {
    pub fn parse_str(text: &str) -> Result<Self, OeisError> {
        let mut index = Self::default();
        for line in text.lines() {
            let line = line.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            match parse_record(line) {
                Some((id, values)) => index.insert(id, values),
                None => index.skipped += 1,
            }
        }
        if index.entries.is_empty() {
            return Err(OeisError::Empty);
        }
        Ok(index)
    }

    fn insert(&mut self, id: String, values: Vec<BigInt>) {
        for offset in 0..=MAX_OFFSET {
            if let Some(window) = values.get(offset..offset + MIN_QUERY_LEN) {
                self.by_window.entry(window.to_vec()).or_default().push((offset, id.clone()));
            }
        }
        self.entries.insert(id, values);
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Malformed lines skipped while loading.
    pub fn skipped(&self) -> usize {
        self.skipped
    }

    pub fn get(&self, a_number: &str) -> Option<&[BigInt]> {
        self.entries.get(a_number).map(Vec::as_slice)
    }

    /// Entries whose stored prefix contains `values` starting at offset 0, 1 or 2,
    /// sorted by `(offset, A-number)`.
    pub fn identify_sequence(&self, values: &[BigInt]) -> Result<Vec<SequenceMatch>, OeisError> {
        if values.len() < MIN_QUERY_LEN {
            return Err(OeisError::TooFewValues(values.len()));
        }
        let Some(candidates) = self.by_window.get(&values[..MIN_QUERY_LEN]) else {
            return Ok(Vec::new());
        };
        let mut matches: Vec<SequenceMatch> = candidates
            .iter()
            .filter(|(offset, id)| {
                self.entries[id].get(*offset..*offset + values.len()).is_some_and(|run| run == values)
            })
            .map(|(offset, id)| SequenceMatch { offset: *offset, a_number: id.clone() })
            .collect();
        matches.sort();
        matches.dedup();
        Ok(matches)
    }

    /// Reads the lower triangle by rows and identifies the flattened sequence.
    pub fn identify_triangle(&self, m: &TriMatrix) -> Result<Vec<SequenceMatch>, OeisError> {
        self.identify_sequence(&flatten_triangle(m)?)
    }
}

/// Lower triangle read by rows, row 0 first; every entry must be an integer.
pub fn flatten_triangle(m: &TriMatrix) -> Result<Vec<BigInt>, OeisError> {
    if m.size() < 3 {
        return Err(OeisError::TriangleTooSmall(m.size()));
    }
    let mut out = Vec::new();
    for row in 0..m.size() {
        for col in 0..=row {
            let c = m.get(row, col);
            if !c.is_integer() {
                return Err(OeisError::NonIntegral { row, col });
            }
            out.push(c.to_integer());
        }
    }
    Ok(out)
}

pub fn load_stripped(path: &Path) -> Result<OeisIndex, OeisError> {
    let text = fs::read_to_string(path).map_err(|source| OeisError::Io { path: path.to_path_buf(), source })?;
    OeisIndex::parse_str(&text)
}

/// An explicit path wins, then `OEIS_STRIPPED_PATH`.
pub fn resolve_dump_path(flag: Option<&Path>) -> Result<PathBuf, OeisError> {
    if let Some(p) = flag {
        return Ok(p.to_path_buf());
    }
    match std::env::var_os(DUMP_ENV_VAR) {
        Some(p) if !p.is_empty() => Ok(PathBuf::from(p)),
        _ => Err(OeisError::NoDumpPath),
    }
}
