use crate::branch_data::BranchDatum;
use crate::oracle::{MoveSet, OracleCounts};
use serde::{Deserialize, Serialize};
use std::collections::HashMap;
use std::fs::OpenOptions;
use std::io::{self, Write};
use std::path::{Path, PathBuf};

/// One line of the cache file: a datum, the move flags it was counted
/// under, and the resulting counts.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct CacheRecord {
    pub datum: BranchDatum,
    pub conj_orbits: usize,
    pub weak: usize,
    pub flags: MoveSet,
}

/// An append-only store of oracle results, one JSON record per line. Opening
/// a missing file yields an empty cache; the file is created on first write.
pub struct Cache {
    path: PathBuf,
    entries: HashMap<String, OracleCounts>,
}

impl Cache {
    pub fn open(path: &Path) -> io::Result<Cache> {
        let mut entries = HashMap::new();
        match std::fs::read_to_string(path) {
            Ok(text) => {
                for line in text.lines() {
                    let line = line.trim();
                    if line.is_empty() {
                        continue;
                    }
                    let rec: CacheRecord = serde_json::from_str(line)
                        .map_err(|e| io::Error::new(io::ErrorKind::InvalidData, e))?;
                    entries.insert(
                        Self::key(&rec.datum, rec.flags),
                        OracleCounts { conj_orbits: rec.conj_orbits, weak: rec.weak },
                    );
                }
            }
            Err(e) if e.kind() == io::ErrorKind::NotFound => {}
            Err(e) => return Err(e),
        }
        Ok(Cache { path: path.to_path_buf(), entries })
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    fn key(datum: &BranchDatum, flags: MoveSet) -> String {
        serde_json::to_string(&(datum, flags)).expect("datum and flags serialize")
    }

    pub fn get(&self, datum: &BranchDatum, flags: MoveSet) -> Option<OracleCounts> {
        self.entries.get(&Self::key(datum, flags)).copied()
    }

    /// Records a result, appending to the backing file unless the same datum
    /// and flags are already present.
    pub fn put(
        &mut self,
        datum: &BranchDatum,
        flags: MoveSet,
        counts: OracleCounts,
    ) -> io::Result<()> {
        let key = Self::key(datum, flags);
        if self.entries.contains_key(&key) {
            return Ok(());
        }
        let rec = CacheRecord {
            datum: datum.clone(),
            conj_orbits: counts.conj_orbits,
            weak: counts.weak,
            flags,
        };
        let line = serde_json::to_string(&rec).expect("record serializes");
        let mut file = OpenOptions::new().create(true).append(true).open(&self.path)?;
        writeln!(file, "{line}")?;
        self.entries.insert(key, counts);
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partition::Partition;

    fn sample_datum() -> BranchDatum {
        BranchDatum::new(
            0,
            4,
            [
                Partition::new(vec![2, 2]).unwrap(),
                Partition::new(vec![3, 1]).unwrap(),
                Partition::new(vec![3, 1]).unwrap(),
            ],
        )
        .unwrap()
    }

    #[test]
    fn round_trip_through_file() {
        let dir = std::env::temp_dir().join(format!("hurwitz-cache-test-{}", std::process::id()));
        std::fs::create_dir_all(&dir).unwrap();
        let path = dir.join("cache.jsonl");
        let _ = std::fs::remove_file(&path);

        let datum = sample_datum();
        let flags = MoveSet::default();
        let counts = OracleCounts { conj_orbits: 1, weak: 1 };

        let mut cache = Cache::open(&path).unwrap();
        assert!(cache.is_empty());
        assert_eq!(cache.get(&datum, flags), None);
        cache.put(&datum, flags, counts).unwrap();
        assert_eq!(cache.get(&datum, flags), Some(counts));

        // a fresh handle sees the persisted record
        let reopened = Cache::open(&path).unwrap();
        assert_eq!(reopened.len(), 1);
        assert_eq!(reopened.get(&datum, flags), Some(counts));
        // flags participate in the key
        let other = MoveSet { use_mirror: false, use_relabel: false };
        assert_eq!(reopened.get(&datum, other), None);

        std::fs::remove_file(&path).unwrap();
        std::fs::remove_dir(&dir).unwrap();
    }

    #[test]
    fn duplicate_put_does_not_grow_the_file() {
        let dir = std::env::temp_dir().join(format!("hurwitz-cache-dup-{}", std::process::id()));
        std::fs::create_dir_all(&dir).unwrap();
        let path = dir.join("cache.jsonl");
        let _ = std::fs::remove_file(&path);

        let datum = sample_datum();
        let flags = MoveSet::default();
        let counts = OracleCounts { conj_orbits: 1, weak: 1 };
        let mut cache = Cache::open(&path).unwrap();
        cache.put(&datum, flags, counts).unwrap();
        cache.put(&datum, flags, counts).unwrap();
        let text = std::fs::read_to_string(&path).unwrap();
        assert_eq!(text.lines().count(), 1);
        // the stored line is a valid record
        let rec: CacheRecord = serde_json::from_str(text.trim()).unwrap();
        assert_eq!(rec.weak, 1);

        std::fs::remove_file(&path).unwrap();
        std::fs::remove_dir(&dir).unwrap();
    }
}
