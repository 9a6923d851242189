//! Persistent memoization of dominance answers.
//!
//! Keys are `(n, S mask, T mask)`; the on-disk form is a TSV with lines
//! `n<TAB>S_mask<TAB>T_mask<TAB>0|1`. Witnesses are not cached (they are
//! large and cheap to recompute on demand). Concurrent inserts of the same
//! key are benign: answers are deterministic, so last write wins.

use std::collections::HashMap;
use std::io::{BufRead, BufWriter, Write};
use std::path::Path;
use std::sync::atomic::{AtomicU64, Ordering};
use std::sync::Mutex;

use crate::atoms::RankSet;
use crate::error::{LatgeomError, Result};

#[derive(Default)]
pub struct DominanceCache {
    map: Mutex<HashMap<(u8, u16, u16), bool>>,
    hits: AtomicU64,
    misses: AtomicU64,
}

impl DominanceCache {
    pub fn new() -> DominanceCache {
        DominanceCache::default()
    }

    pub fn load(path: &Path) -> Result<DominanceCache> {
        let cache = DominanceCache::new();
        let file = std::fs::File::open(path)?;
        let reader = std::io::BufReader::new(file);
        let mut map = cache.map.lock().unwrap();
        for (lineno, line) in reader.lines().enumerate() {
            let line = line?;
            if line.trim().is_empty() || line.starts_with('#') {
                continue;
            }
            let fields: Vec<&str> = line.split('\t').collect();
            if fields.len() != 4 {
                return Err(LatgeomError::Parse(format!(
                    "{}:{}: expected 4 tab-separated fields",
                    path.display(),
                    lineno + 1
                )));
            }
            let parse = |s: &str| -> Result<u64> {
                s.parse()
                    .map_err(|_| LatgeomError::Parse(format!("bad cache field `{s}`")))
            };
            let n = parse(fields[0])? as u8;
            let s_mask = parse(fields[1])? as u16;
            let t_mask = parse(fields[2])? as u16;
            let value = match fields[3] {
                "0" => false,
                "1" => true,
                other => {
                    return Err(LatgeomError::Parse(format!(
                        "bad cache value `{other}`, want 0 or 1"
                    )))
                }
            };
            map.insert((n, s_mask, t_mask), value);
        }
        drop(map);
        Ok(cache)
    }

    pub fn save(&self, path: &Path) -> Result<()> {
        let file = std::fs::File::create(path)?;
        let mut w = BufWriter::new(file);
        let map = self.map.lock().unwrap();
        let mut keys: Vec<_> = map.keys().copied().collect();
        keys.sort_unstable();
        for (n, s, t) in keys {
            let v = map[&(n, s, t)];
            writeln!(w, "{}\t{}\t{}\t{}", n, s, t, if v { 1 } else { 0 })?;
        }
        Ok(())
    }

    pub fn get(&self, n: usize, s: RankSet, t: RankSet) -> Option<bool> {
        let hit = self
            .map
            .lock()
            .unwrap()
            .get(&(n as u8, s.mask(), t.mask()))
            .copied();
        match hit {
            Some(_) => self.hits.fetch_add(1, Ordering::Relaxed),
            None => self.misses.fetch_add(1, Ordering::Relaxed),
        };
        hit
    }

    pub fn put(&self, n: usize, s: RankSet, t: RankSet, value: bool) {
        self.map
            .lock()
            .unwrap()
            .insert((n as u8, s.mask(), t.mask()), value);
    }

    pub fn len(&self) -> usize {
        self.map.lock().unwrap().len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn hits(&self) -> u64 {
        self.hits.load(Ordering::Relaxed)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_trip() {
        let cache = DominanceCache::new();
        let s = RankSet::from_ranks([1, 2]);
        let t = RankSet::from_ranks([1]);
        cache.put(4, s, t, true);
        cache.put(4, t, s, false);
        let dir = std::env::temp_dir().join("latgeom-cache-test");
        std::fs::create_dir_all(&dir).unwrap();
        let path = dir.join("cache.tsv");
        cache.save(&path).unwrap();
        let re = DominanceCache::load(&path).unwrap();
        assert_eq!(re.get(4, s, t), Some(true));
        assert_eq!(re.get(4, t, s), Some(false));
        assert_eq!(re.get(5, s, t), None);
        assert_eq!(re.hits(), 2);
        std::fs::remove_file(&path).unwrap();
    }
}
