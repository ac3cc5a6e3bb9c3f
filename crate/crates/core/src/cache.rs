//! Flat text persistence for the engine's `(degree, genus)` memo.
//!
//! ```text
//! # scrolls-cache v1
//! n=5 dims=3,3,3,3,3,3,3 degree=14 genus=8
//! ```

use crate::base::IncidenceBase;
use crate::error::{Result, ScrollError};
use crate::scroll::Engine;

pub const CACHE_HEADER: &str = "# scrolls-cache v1";

/// Serialize every memoized base, sorted.
pub fn export(engine: &Engine) -> String {
    let mut out = String::from(CACHE_HEADER);
    out.push('\n');
    for (base, degree, genus) in engine.memo_entries() {
        out.push_str(&format!("{base} degree={degree} genus={genus}\n"));
    }
    out
}

/// Seed `engine` from a cache file; returns the number of entries read.
pub fn import(engine: &Engine, text: &str) -> Result<usize> {
    let mut lines = text.lines();
    match lines.next() {
        Some(h) if h.trim() == CACHE_HEADER => {}
        other => {
            return Err(ScrollError::Parse(format!(
                "cache header `{}` is not `{CACHE_HEADER}`",
                other.unwrap_or_default()
            )))
        }
    }
    let mut count = 0;
    for (k, line) in lines.enumerate() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let bad = || ScrollError::Parse(format!("cache line {}: `{line}`", k + 2));
        let fields: Vec<&str> = line.split_whitespace().collect();
        let [n, dims, degree, genus] = fields[..] else {
            return Err(bad());
        };
        let base: IncidenceBase = format!("{n} {dims}").parse()?;
        let value = |field: &str, key: &str| -> Result<i64> {
            field
                .strip_prefix(key)
                .and_then(|v| v.parse().ok())
                .ok_or_else(bad)
        };
        engine.seed(base, value(degree, "degree=")?, value(genus, "genus=")?);
        count += 1;
    }
    Ok(count)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_trip() {
        let engine = Engine::new();
        let base = IncidenceBase::new(5, vec![3; 7]).unwrap();
        engine.invariants(&base).unwrap();
        let text = export(&engine);
        assert!(text.starts_with(CACHE_HEADER));
        assert!(text.contains("n=5 dims=3,3,3,3,3,3,3 degree=14 genus=8"));

        let fresh = Engine::new();
        let count = import(&fresh, &text).unwrap();
        assert_eq!(count, engine.memo_entries().len());
        assert_eq!(fresh.memo_entries(), engine.memo_entries());
    }

    #[test]
    fn rejects_unknown_versions_and_garbage() {
        let engine = Engine::new();
        assert!(import(&engine, "# scrolls-cache v0\n").is_err());
        assert!(import(&engine, "").is_err());
        assert!(import(&engine, "# scrolls-cache v1\nn=5 dims=3 degree=x genus=1\n").is_err());
        assert!(import(&engine, "# scrolls-cache v1\nn=5\n").is_err());
    }
}
