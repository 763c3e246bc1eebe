use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use std::fmt;
use std::str::FromStr;
use thiserror::Error;

/// A partition: weakly decreasing positive integers. Used both as a branching
/// profile (the multiset of local degrees over a branch point) and as the
/// cycle type of a permutation.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition {
    parts: Vec<u64>,
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum InvalidPartition {
    #[error("partition parts must be positive")]
    ZeroPart,
}

impl Partition {
    /// Builds a partition from parts given in any order.
    pub fn new(mut parts: Vec<u64>) -> Result<Self, InvalidPartition> {
        if parts.iter().any(|&p| p == 0) {
            return Err(InvalidPartition::ZeroPart);
        }
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Ok(Partition { parts })
    }

    pub fn parts(&self) -> &[u64] {
        &self.parts
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn total(&self) -> u64 {
        self.parts.iter().sum()
    }

    /// Multiplicity of `v` among the parts.
    pub fn count_of(&self, v: u64) -> usize {
        self.parts.iter().filter(|&&p| p == v).count()
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}

impl FromStr for Partition {
    type Err = String;

    /// Accepts "9,2,1" or "(9,2,1)", in any part order.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        let s = s.strip_prefix('(').unwrap_or(s);
        let s = s.strip_suffix(')').unwrap_or(s);
        let parts = s
            .split(',')
            .map(|tok| tok.trim().parse::<u64>().map_err(|e| format!("bad part {tok:?}: {e}")))
            .collect::<Result<Vec<_>, _>>()?;
        Partition::new(parts).map_err(|e| e.to_string())
    }
}

impl Serialize for Partition {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        self.parts.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Partition {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let parts = Vec::<u64>::deserialize(deserializer)?;
        Partition::new(parts).map_err(D::Error::custom)
    }
}

/// All partitions of `total` into exactly `len` positive parts, in descending
/// lexicographic order: (10,1,1), (9,2,1), ..., (4,4,4) for total 12, len 3.
pub fn partitions_into(total: u64, len: usize) -> Vec<Partition> {
    let mut out = Vec::new();
    let mut prefix = Vec::with_capacity(len);
    rec_partitions(total, len as u64, u64::MAX, &mut prefix, &mut out);
    out
}

fn rec_partitions(total: u64, len: u64, max: u64, prefix: &mut Vec<u64>, out: &mut Vec<Partition>) {
    if len == 0 {
        if total == 0 {
            out.push(Partition { parts: prefix.clone() });
        }
        return;
    }
    if total < len {
        return;
    }
    // first part is the largest, so it is at least ceil(total/len)
    let lo = total.div_ceil(len);
    let hi = max.min(total - (len - 1));
    let mut p = hi;
    while p >= lo {
        prefix.push(p);
        rec_partitions(total - p, len - 1, p, prefix, out);
        prefix.pop();
        p -= 1;
    }
}

/// All ordered tuples of `len` positive integers summing to `total`.
pub fn compositions_into(total: u64, len: usize) -> Vec<Vec<u64>> {
    let mut out = Vec::new();
    let mut prefix = Vec::with_capacity(len);
    rec_compositions(total, len as u64, &mut prefix, &mut out);
    out
}

fn rec_compositions(total: u64, len: u64, prefix: &mut Vec<u64>, out: &mut Vec<Vec<u64>>) {
    if len == 1 {
        if total >= 1 {
            prefix.push(total);
            out.push(prefix.clone());
            prefix.pop();
        }
        return;
    }
    for p in 1..=total.saturating_sub(len - 1) {
        prefix.push(p);
        rec_compositions(total - p, len - 1, prefix, out);
        prefix.pop();
    }
}
