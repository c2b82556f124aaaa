//! Text persistence of search records.
//!
//! One record per (n, p) cell, stored as a file in the results
//! directory: a header line `n p ex count complete` followed by one
//! canonical graph6 line per extremal graph. Only complete records are
//! written; incomplete runs are not worth caching.

use std::fs;
use std::io;
use std::path::{Path, PathBuf};

use crate::search::{SearchStats, TuranRecord};

/// Environment variable overriding the cache directory.
pub const CACHE_DIR_ENV: &str = "TURAN_CACHE_DIR";

/// Default cache location relative to the working directory.
pub const DEFAULT_CACHE_DIR: &str = "turan-cache";

pub fn cache_dir() -> PathBuf {
    std::env::var_os(CACHE_DIR_ENV)
        .map(PathBuf::from)
        .unwrap_or_else(|| PathBuf::from(DEFAULT_CACHE_DIR))
}

fn record_path(dir: &Path, n: usize, p: usize) -> PathBuf {
    dir.join(format!("ex_{n}_{p}.txt"))
}

/// Serializes a record as the cache text block.
pub fn to_text(rec: &TuranRecord) -> String {
    let mut out = format!(
        "{} {} {} {} {}\n",
        rec.n, rec.p, rec.ex, rec.count, rec.complete
    );
    for line in &rec.extremal {
        out.push_str(line);
        out.push('\n');
    }
    out
}

/// Parses a cache text block back into a record (stats are not stored).
pub fn from_text(text: &str) -> Option<TuranRecord> {
    let mut lines = text.lines();
    let header = lines.next()?;
    let fields: Vec<&str> = header.split_whitespace().collect();
    if fields.len() != 5 {
        return None;
    }
    let n = fields[0].parse().ok()?;
    let p = fields[1].parse().ok()?;
    let ex = fields[2].parse().ok()?;
    let count: usize = fields[3].parse().ok()?;
    let complete = match fields[4] {
        "true" => true,
        "false" => false,
        _ => return None,
    };
    let extremal: Vec<String> = lines
        .map(str::trim)
        .filter(|l| !l.is_empty())
        .map(String::from)
        .collect();
    if count != extremal.len() {
        return None;
    }
    Some(TuranRecord {
        n,
        p,
        ex,
        extremal,
        count,
        complete,
        stats: SearchStats::default(),
    })
}

/// Loads the cached record for (n, p) if one exists and parses cleanly.
pub fn load(dir: &Path, n: usize, p: usize) -> Option<TuranRecord> {
    let text = fs::read_to_string(record_path(dir, n, p)).ok()?;
    from_text(&text)
}

/// Writes a complete record; incomplete records are skipped.
pub fn save(dir: &Path, rec: &TuranRecord) -> io::Result<()> {
    if !rec.complete {
        return Ok(());
    }
    fs::create_dir_all(dir)?;
    fs::write(record_path(dir, rec.n, rec.p), to_text(rec))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::search::{exact_turan, SearchConfig};

    #[test]
    fn roundtrip_through_text() {
        let rec = exact_turan(6, 2, &SearchConfig::default()).unwrap();
        let text = to_text(&rec);
        let back = from_text(&text).unwrap();
        assert_eq!((back.n, back.p, back.ex, back.count), (6, 2, rec.ex, rec.count));
        assert_eq!(back.extremal, rec.extremal);
        assert!(back.complete);
    }

    #[test]
    fn save_and_load() {
        let dir = std::env::temp_dir().join(format!("turan-cache-test-{}", std::process::id()));
        let rec = exact_turan(5, 1, &SearchConfig::default()).unwrap();
        save(&dir, &rec).unwrap();
        let back = load(&dir, 5, 1).unwrap();
        assert_eq!(back.ex, 6);
        assert_eq!(back.count, 1);
        assert!(load(&dir, 5, 2).is_none());
        std::fs::remove_dir_all(&dir).ok();
    }

    #[test]
    fn rejects_corrupt_text() {
        assert!(from_text("").is_none());
        assert!(from_text("5 1 6 1").is_none());
        assert!(from_text("5 1 6 2 true\nDhS\n").is_none()); // count mismatch
        assert!(from_text("5 1 6 0 maybe\n").is_none());
    }
}
