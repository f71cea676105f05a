//! Persistent sequence cache: one line per value, `family param n num/den`,
//! sorted — human-diffable, so golden files double as regression fixtures.
//!
//! Loading installs contiguous prefixes (starting at index 0) into the
//! in-memory memo; fragments that do not form a prefix are ignored with a
//! notice, since prefix tables cannot use them. Values are trusted as
//! previously-computed output — determinism of the generators is what keeps
//! cache-on and cache-off runs identical.

use congruence_lab::rational::{format_exact, parse_exact, Rational};
use congruence_lab::zoo::{SequenceCache, SequenceId};
use std::collections::BTreeMap;
use std::path::Path;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum CacheFileError {
    #[error("cache line {line}: {message}")]
    Malformed { line: usize, message: String },
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

#[derive(Debug)]
pub struct LoadOutcome {
    pub seeded_values: usize,
    pub notices: Vec<String>,
}

/// Load a cache file and seed the zoo tables with every contiguous prefix.
pub fn load_into(path: &Path, zoo: &SequenceCache) -> Result<LoadOutcome, CacheFileError> {
    let text = std::fs::read_to_string(path)?;
    let mut grouped: BTreeMap<SequenceId, BTreeMap<u64, Rational>> = BTreeMap::new();
    for (lineno, raw) in text.lines().enumerate() {
        let line = lineno + 1;
        let trimmed = raw.trim();
        if trimmed.is_empty() || trimmed.starts_with('#') {
            continue;
        }
        let fields: Vec<&str> = trimmed.split_whitespace().collect();
        let [family, param, index, value] = fields.as_slice() else {
            return Err(CacheFileError::Malformed {
                line,
                message: format!("expected 'family param n value', got {trimmed:?}"),
            });
        };
        let id = SequenceId::from_file_tokens(family, param).map_err(|e| {
            CacheFileError::Malformed {
                line,
                message: e.to_string(),
            }
        })?;
        let n: u64 = index.parse().map_err(|_| CacheFileError::Malformed {
            line,
            message: format!("bad index {index:?}"),
        })?;
        let value = parse_exact(value).map_err(|e| CacheFileError::Malformed {
            line,
            message: e.to_string(),
        })?;
        grouped.entry(id).or_default().insert(n, value);
    }

    let mut outcome = LoadOutcome {
        seeded_values: 0,
        notices: Vec::new(),
    };
    for (id, values) in grouped {
        let mut prefix = Vec::new();
        for (expected, (&n, v)) in values.iter().enumerate() {
            if n != expected as u64 {
                break;
            }
            prefix.push(v.clone());
        }
        if prefix.len() < values.len() {
            outcome.notices.push(format!(
                "{}: kept contiguous prefix of {} of {} cached values",
                id.name(),
                prefix.len(),
                values.len()
            ));
        }
        if prefix.is_empty() {
            continue;
        }
        match zoo.seed(&id, &prefix) {
            Ok(seeded) => outcome.seeded_values += seeded,
            Err(e) => outcome.notices.push(format!("{}: {}", id.name(), e)),
        }
    }
    Ok(outcome)
}

/// Write every memoized value, sorted, replacing the file.
pub fn save_from(path: &Path, zoo: &SequenceCache) -> Result<usize, CacheFileError> {
    let records = zoo.dump();
    let mut out = String::new();
    for rec in &records {
        let (family, param) = rec.id.file_tokens();
        out.push_str(&format!(
            "{} {} {} {}\n",
            family,
            param,
            rec.index,
            format_exact(&rec.value)
        ));
    }
    if let Some(parent) = path.parent() {
        if !parent.as_os_str().is_empty() {
            std::fs::create_dir_all(parent)?;
        }
    }
    std::fs::write(path, out)?;
    Ok(records.len())
}
