use crate::partition::Partition;
use serde::{Deserialize, Deserializer, Serialize};
use thiserror::Error;

/// Parameters (g, h, k, pi) of a three-branch-point datum over the sphere:
/// source surface of genus g, degree d = 2k, branching profiles
///
///   pi1 = (2,...,2)            (k twos)
///   pi2 = (2h+1, 1, 2,...,2)   (k-h-1 twos)
///   pi3 = pi                   (h-2g+1 parts, free)
///
/// Compatibility requires h >= 2g (so pi has at least one part) and
/// k >= h+1 (so pi2 has no negative number of twos).
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct FamilyDatum {
    g: u64,
    h: u64,
    k: u64,
    pi: Partition,
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum FamilyError {
    #[error("h must be at least 2g (got g={g}, h={h})")]
    OddPartBelowGenus { g: u64, h: u64 },
    #[error("k must be at least h+1 (got h={h}, k={k})")]
    DegreeTooSmall { h: u64, k: u64 },
    #[error("pi must have h-2g+1 = {expected} parts (got {got})")]
    WrongPartCount { expected: u64, got: u64 },
    #[error("pi must sum to 2k = {expected} (got {got})")]
    WrongTotal { expected: u64, got: u64 },
}

impl FamilyDatum {
    pub fn new(g: u64, h: u64, k: u64, pi: Partition) -> Result<Self, FamilyError> {
        if h < 2 * g {
            return Err(FamilyError::OddPartBelowGenus { g, h });
        }
        if k < h + 1 {
            return Err(FamilyError::DegreeTooSmall { h, k });
        }
        let ell = h - 2 * g + 1;
        if pi.len() as u64 != ell {
            return Err(FamilyError::WrongPartCount { expected: ell, got: pi.len() as u64 });
        }
        if pi.total() != 2 * k {
            return Err(FamilyError::WrongTotal { expected: 2 * k, got: pi.total() });
        }
        Ok(FamilyDatum { g, h, k, pi })
    }

    pub fn g(&self) -> u64 {
        self.g
    }

    pub fn h(&self) -> u64 {
        self.h
    }

    pub fn k(&self) -> u64 {
        self.k
    }

    pub fn d(&self) -> u64 {
        2 * self.k
    }

    pub fn pi(&self) -> &Partition {
        &self.pi
    }

    /// The underlying three-profile branch datum.
    pub fn expand(&self) -> BranchDatum {
        let pi1 = Partition::new(vec![2; self.k as usize]).unwrap();
        let mut parts = vec![2u64; (self.k - self.h - 1) as usize];
        parts.push(2 * self.h + 1);
        parts.push(1);
        let pi2 = Partition::new(parts).unwrap();
        BranchDatum::new(self.g, 2 * self.k, [pi1, pi2, self.pi.clone()]).unwrap()
    }

    /// Positional pairs (1-indexed) of the expanded profiles that coincide as
    /// partitions; see [`BranchDatum::repeated_partitions`].
    pub fn repeated_partitions(&self) -> Vec<(usize, usize)> {
        self.expand().repeated_partitions()
    }
}

// Deserialization goes through the checked constructor so that a parsed datum
// always satisfies the family constraints.
impl<'de> Deserialize<'de> for FamilyDatum {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let raw = RawFamilyDatum::deserialize(deserializer)?;
        raw.check().map_err(serde::de::Error::custom)
    }
}

/// The wire form of a [`FamilyDatum`]: `{"g":0,"h":2,"k":6,"pi":[9,2,1]}`.
/// Parsing this first lets callers distinguish malformed JSON from a
/// well-formed datum that violates the family constraints.
#[derive(Debug, Deserialize)]
pub struct RawFamilyDatum {
    pub g: u64,
    pub h: u64,
    pub k: u64,
    pub pi: Vec<u64>,
}

impl RawFamilyDatum {
    pub fn check(self) -> Result<FamilyDatum, FamilyError> {
        let pi = Partition::new(self.pi).map_err(|_| FamilyError::WrongTotal {
            expected: 2 * self.k,
            got: 0,
        })?;
        FamilyDatum::new(self.g, self.h, self.k, pi)
    }
}

/// A general three-branch-point datum over the sphere: source genus, degree,
/// and one branching profile per branch point.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct BranchDatum {
    genus: u64,
    d: u64,
    pi: [Partition; 3],
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum BranchDatumError {
    #[error("profile {index} sums to {got}, expected the degree {d}")]
    WrongProfileTotal { index: usize, d: u64, got: u64 },
}

impl BranchDatum {
    pub fn new(genus: u64, d: u64, pi: [Partition; 3]) -> Result<Self, BranchDatumError> {
        for (i, p) in pi.iter().enumerate() {
            if p.total() != d {
                return Err(BranchDatumError::WrongProfileTotal { index: i + 1, d, got: p.total() });
            }
        }
        Ok(BranchDatum { genus, d, pi })
    }

    pub fn genus(&self) -> u64 {
        self.genus
    }

    pub fn d(&self) -> u64 {
        self.d
    }

    pub fn pi(&self, index: usize) -> &Partition {
        &self.pi[index]
    }

    pub fn profiles(&self) -> &[Partition; 3] {
        &self.pi
    }

    /// Euler-characteristic compatibility: (2-2g) - (l1+l2+l3) = -d, where
    /// l_i is the number of parts of the i-th profile.
    pub fn riemann_hurwitz_check(&self) -> bool {
        let ells: i64 = self.pi.iter().map(|p| p.len() as i64).sum();
        2 - 2 * self.genus as i64 - ells == -(self.d as i64)
    }

    /// Positional pairs (1-indexed) whose profiles coincide as partitions.
    /// These are exactly the branch-point transpositions that preserve the
    /// datum, hence the relabel moves available to weak equivalence.
    pub fn repeated_partitions(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        if self.pi[0] == self.pi[1] {
            out.push((1, 2));
        }
        if self.pi[0] == self.pi[2] {
            out.push((1, 3));
        }
        if self.pi[1] == self.pi[2] {
            out.push((2, 3));
        }
        out
    }
}

impl<'de> Deserialize<'de> for BranchDatum {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        #[derive(Deserialize)]
        struct Raw {
            genus: u64,
            d: u64,
            pi: [Partition; 3],
        }
        let raw = Raw::deserialize(deserializer)?;
        BranchDatum::new(raw.genus, raw.d, raw.pi).map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partition::partitions_into;

    fn fd(g: u64, h: u64, k: u64, pi: &[u64]) -> FamilyDatum {
        FamilyDatum::new(g, h, k, Partition::new(pi.to_vec()).unwrap()).unwrap()
    }

    #[test]
    fn constructor_rejects_each_constraint_separately() {
        let pi3 = Partition::new(vec![9, 2, 1]).unwrap();
        assert_eq!(
            FamilyDatum::new(2, 3, 6, pi3.clone()),
            Err(FamilyError::OddPartBelowGenus { g: 2, h: 3 })
        );
        assert_eq!(
            FamilyDatum::new(0, 6, 6, pi3.clone()),
            Err(FamilyError::DegreeTooSmall { h: 6, k: 6 })
        );
        assert_eq!(
            FamilyDatum::new(0, 1, 6, pi3.clone()),
            Err(FamilyError::WrongPartCount { expected: 2, got: 3 })
        );
        assert_eq!(
            FamilyDatum::new(0, 2, 7, pi3.clone()),
            Err(FamilyError::WrongTotal { expected: 14, got: 12 })
        );
        assert!(FamilyDatum::new(0, 2, 6, pi3).is_ok());
    }

    #[test]
    fn expand_profiles() {
        let b = fd(0, 2, 6, &[9, 2, 1]).expand();
        assert_eq!(b.d(), 12);
        assert_eq!(b.pi(0).parts(), &[2, 2, 2, 2, 2, 2]);
        assert_eq!(b.pi(1).parts(), &[5, 2, 2, 2, 1]);
        assert_eq!(b.pi(2).parts(), &[9, 2, 1]);
        assert!(b.riemann_hurwitz_check());

        // h=0 puts the odd part 2h+1 = 1 next to the forced 1
        let b = fd(0, 0, 3, &[6]).expand();
        assert_eq!(b.pi(1).parts(), &[2, 2, 1, 1]);
        assert!(b.riemann_hurwitz_check());

        let b = fd(2, 4, 5, &[10]).expand();
        assert_eq!(b.pi(0).parts(), &[2, 2, 2, 2, 2]);
        assert_eq!(b.pi(1).parts(), &[9, 1]);
        assert_eq!(b.pi(2).parts(), &[10]);
        assert!(b.riemann_hurwitz_check());
    }

    #[test]
    fn riemann_hurwitz_detects_bad_genus() {
        let b = fd(0, 2, 6, &[9, 2, 1]).expand();
        let bad = BranchDatum::new(1, b.d(), b.profiles().clone()).unwrap();
        assert!(!bad.riemann_hurwitz_check());
    }

    #[test]
    fn riemann_hurwitz_holds_across_the_family() {
        for g in 0..=3u64 {
            for h in (2 * g)..=(2 * g + 4) {
                for k in (h + 1)..=(h + 5) {
                    let ell = (h - 2 * g + 1) as usize;
                    for pi in partitions_into(2 * k, ell) {
                        let fd = FamilyDatum::new(g, h, k, pi).unwrap();
                        assert!(fd.expand().riemann_hurwitz_check());
                    }
                }
            }
        }
    }

    #[test]
    fn json_parsing_enforces_constraints() {
        let fd: FamilyDatum = serde_json::from_str(r#"{"g":0,"h":2,"k":6,"pi":[9,2,1]}"#).unwrap();
        assert_eq!(fd.k(), 6);
        assert_eq!(fd.pi().parts(), &[9, 2, 1]);
        // round trip
        let js = serde_json::to_string(&fd).unwrap();
        assert_eq!(serde_json::from_str::<FamilyDatum>(&js).unwrap(), fd);
        // well-formed JSON, invalid datum
        assert!(serde_json::from_str::<FamilyDatum>(r#"{"g":0,"h":2,"k":7,"pi":[9,2,1]}"#).is_err());
    }

    // The repeated-profile detector is literal multiset equality; these are the
    // closed characterizations it must reproduce on family data.
    #[test]
    fn repeated_profiles_closed_conditions() {
        for g in 0..=2u64 {
            for h in (2 * g)..=(2 * g + 4) {
                for k in (h + 1)..=(h + 5) {
                    let ell = (h - 2 * g + 1) as usize;
                    for pi in partitions_into(2 * k, ell) {
                        let fd = FamilyDatum::new(g, h, k, pi.clone()).unwrap();
                        let pairs = fd.repeated_partitions();
                        // pi1 is all twos, pi2 always contains a 1: never equal
                        assert!(!pairs.contains(&(1, 2)));
                        let expect_13 =
                            g == 0 && k == h + 1 && pi.parts().iter().all(|&p| p == 2);
                        assert_eq!(pairs.contains(&(1, 3)), expect_13, "g={g} h={h} k={k} pi={pi}");
                        let mut pi2_like = vec![2u64; (k - h - 1) as usize];
                        pi2_like.push(2 * h + 1);
                        pi2_like.push(1);
                        let expect_23 = k == 2 * h - 2 * g
                            && h >= 2 * g + 1
                            && pi == Partition::new(pi2_like).unwrap();
                        assert_eq!(pairs.contains(&(2, 3)), expect_23, "g={g} h={h} k={k} pi={pi}");
                    }
                }
            }
        }
    }

    #[test]
    fn repeated_data_up_to_degree_eight() {
        // every family datum with a repeated profile and degree at most 8
        let mut found = Vec::new();
        for g in 0..=2u64 {
            for h in (2 * g)..=8 {
                for k in (h + 1)..=4 {
                    let ell = (h - 2 * g + 1) as usize;
                    for pi in partitions_into(2 * k, ell) {
                        let fd = FamilyDatum::new(g, h, k, pi).unwrap();
                        for pair in fd.repeated_partitions() {
                            found.push((g, h, k, fd.pi().to_string(), pair));
                        }
                    }
                }
            }
        }
        assert_eq!(
            found,
            vec![
                (0, 0, 1, "(2)".to_string(), (1, 3)),
                (0, 1, 2, "(3,1)".to_string(), (2, 3)),
                (0, 1, 2, "(2,2)".to_string(), (1, 3)),
                (0, 2, 3, "(2,2,2)".to_string(), (1, 3)),
                (0, 2, 4, "(5,2,1)".to_string(), (2, 3)),
                (0, 3, 4, "(2,2,2,2)".to_string(), (1, 3)),
                (1, 3, 4, "(7,1)".to_string(), (2, 3)),
            ]
        );
    }
}
