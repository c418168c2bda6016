//! A [`DistributionSource`] that enumerates in parallel and memoizes rows.
//!
//! Each class is split by the value of `σ(1)`; the partial polynomials are
//! summed in order of that value, so the result does not depend on the
//! number of worker threads.

use std::collections::HashMap;
use std::fs;
use std::io;
use std::path::{Path, PathBuf};
use std::sync::Mutex;

use permcross_core::distribution::{accumulate, RowSelector};
use permcross_core::pattern::Avoiders;
use permcross_core::{ClassSelector, DistributionSource, Error, PatternSet, QPoly, Result, Statistic};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

/// Lengths below this are enumerated on the calling thread.
const PARALLEL_FROM: usize = 7;

type Key = (usize, PatternSet, ClassSelector, Statistic);

pub struct ParallelSource {
    pool: rayon::ThreadPool,
    memo: Mutex<HashMap<Key, QPoly>>,
    cache_path: Option<PathBuf>,
}

#[derive(Serialize, Deserialize)]
struct CacheEntry {
    n: usize,
    patterns: String,
    selector: String,
    stat: String,
    coeffs: Vec<i64>,
}

impl ParallelSource {
    /// `threads == 0` lets rayon pick the worker count.
    pub fn new(threads: usize) -> io::Result<Self> {
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(threads)
            .thread_name(|i| format!("permcross-{i}"))
            .build()
            .map_err(io::Error::other)?;
        Ok(ParallelSource { pool, memo: Mutex::new(HashMap::new()), cache_path: None })
    }

    /// Loads previously saved rows from `path` if it exists, and remembers
    /// the path for [`save_cache`](Self::save_cache).
    pub fn with_cache(mut self, path: &Path) -> io::Result<Self> {
        if path.exists() {
            let text = fs::read_to_string(path)?;
            let entries: Vec<CacheEntry> = serde_json::from_str(&text)
                .map_err(|e| io::Error::new(io::ErrorKind::InvalidData, format!("{}: {e}", path.display())))?;
            let mut memo = self.memo.lock().expect("memo lock");
            for e in entries {
                if let Some(key) = parse_key(&e) {
                    memo.insert(key, QPoly::from_coeffs(e.coeffs));
                }
            }
        }
        self.cache_path = Some(path.to_path_buf());
        Ok(self)
    }

    pub fn threads(&self) -> usize {
        self.pool.current_num_threads()
    }

    /// Runs `f` inside this source's worker pool.
    pub fn install<R: Send>(&self, f: impl FnOnce() -> R + Send) -> R {
        self.pool.install(f)
    }

    /// Writes every memoized row to the cache file, if one was configured.
    pub fn save_cache(&self) -> io::Result<()> {
        let Some(path) = &self.cache_path else {
            return Ok(());
        };
        let memo = self.memo.lock().expect("memo lock");
        let mut entries: Vec<CacheEntry> = memo
            .iter()
            .filter_map(|((n, set, sel, stat), poly)| {
                stat.name().parse::<Statistic>().ok()?;
                Some(CacheEntry {
                    n: *n,
                    patterns: set.to_string(),
                    selector: RowSelector::from(*sel).to_string(),
                    stat: stat.name().to_string(),
                    coeffs: poly.coeffs().to_vec(),
                })
            })
            .collect();
        entries.sort_by(|a, b| (&a.patterns, &a.stat, &a.selector, a.n).cmp(&(&b.patterns, &b.stat, &b.selector, b.n)));
        let tmp = path.with_extension("tmp");
        fs::write(&tmp, serde_json::to_string(&entries).map_err(io::Error::other)?)?;
        fs::rename(tmp, path)
    }

    fn compute(&self, n: usize, set: &PatternSet, sel: ClassSelector, stat: Statistic) -> Result<QPoly> {
        if n < PARALLEL_FROM {
            return accumulate(Avoiders::new(n, set, sel)?, stat);
        }
        let parts = self.pool.install(|| {
            (1..=n)
                .into_par_iter()
                .map(|first| accumulate(Avoiders::new(n, set, sel)?.with_first_value(first), stat))
                .collect::<Result<Vec<_>>>()
        })?;
        parts.iter().try_fold(QPoly::zero(), |acc, p| acc.checked_add(p))
    }
}

fn parse_key(e: &CacheEntry) -> Option<Key> {
    let set: PatternSet = e.patterns.parse().ok()?;
    let sel = e.selector.parse::<RowSelector>().ok()?.resolve(e.n).ok()?;
    let stat: Statistic = e.stat.parse().ok()?;
    Some((e.n, set, sel, stat))
}

impl DistributionSource for ParallelSource {
    fn distribution(&self, n: usize, set: &PatternSet, sel: ClassSelector, stat: Statistic) -> Result<QPoly> {
        sel.validate(n)?;
        let key = (n, set.clone(), sel, stat);
        if let Some(hit) = self.memo.lock().map_err(|_| poisoned())?.get(&key) {
            return Ok(hit.clone());
        }
        let poly = self.compute(n, set, sel, stat)?;
        self.memo.lock().map_err(|_| poisoned())?.insert(key, poly.clone());
        Ok(poly)
    }
}

fn poisoned() -> Error {
    Error::InvalidArgument("distribution cache lock poisoned".into())
}

/// Worker count from `--threads`, then `PERMCROSS_THREADS`, then automatic.
/// `auto` and `0` both mean automatic.
pub fn resolve_threads(flag: Option<&str>) -> std::result::Result<usize, String> {
    let env = std::env::var("PERMCROSS_THREADS").ok();
    let Some(raw) = flag.map(str::to_string).or(env) else {
        return Ok(0);
    };
    let raw = raw.trim();
    if raw.eq_ignore_ascii_case("auto") {
        return Ok(0);
    }
    raw.parse::<usize>().map_err(|_| format!("invalid thread count `{raw}` (expected a number or `auto`)"))
}

#[cfg(test)]
mod tests {
    use super::*;
    use permcross_core::BruteForce;

    #[test]
    fn agrees_with_sequential_enumeration() {
        let one = ParallelSource::new(1).unwrap();
        let four = ParallelSource::new(4).unwrap();
        for s in ["-", "321", "123,132", "231,312"] {
            let t: PatternSet = s.parse().unwrap();
            for n in 0..=8 {
                for sel in
                    [ClassSelector::All, ClassSelector::FirstValueOneAt(n.max(1)), ClassSelector::LastPositionValue(1)]
                {
                    if sel.validate(n).is_err() {
                        continue;
                    }
                    let expected = BruteForce.distribution(n, &t, sel, Statistic::Crs).unwrap();
                    assert_eq!(one.distribution(n, &t, sel, Statistic::Crs).unwrap(), expected);
                    assert_eq!(four.distribution(n, &t, sel, Statistic::Crs).unwrap(), expected);
                }
            }
        }
    }

    #[test]
    fn cache_round_trip() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("cache.json");
        let src = ParallelSource::new(2).unwrap().with_cache(&path).unwrap();
        let t: PatternSet = "321,231".parse().unwrap();
        let row = src.distribution(7, &t, ClassSelector::FirstValueOneAt(2), Statistic::Crs).unwrap();
        src.save_cache().unwrap();
        let again = ParallelSource::new(1).unwrap().with_cache(&path).unwrap();
        assert_eq!(again.memo.lock().unwrap().len(), 1);
        assert_eq!(again.distribution(7, &t, ClassSelector::FirstValueOneAt(2), Statistic::Crs).unwrap(), row);
    }

    #[test]
    fn thread_resolution() {
        assert_eq!(resolve_threads(Some("3")), Ok(3));
        assert_eq!(resolve_threads(Some("auto")), Ok(0));
        assert!(resolve_threads(Some("many")).is_err());
    }
}
