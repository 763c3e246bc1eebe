use crate::branch_data::FamilyDatum;
use crate::partition::{compositions_into, Partition};
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;
use thiserror::Error;

/// Decorated graph family of an explicit dessin. A descriptor names one
/// dessin: the family fixes the underlying embedded graph, and each
/// decoration value a on an edge stands for a chain with one black and a-1
/// white valence-2 vertices, so decorations determine the branching profile.
///
/// Sphere families (3 decorations, a+b+c = k):
///   I(a,b,c)  realizes (2a+b+c, b, c), symmetric under b <-> c
///   II(a,b,c) realizes (2a+b, b+c, c)
///
/// Torus families (pi = (2k)): g1-h2(a,b,c), a+b+c = k, symmetric under
/// b <-> c.
///
/// Torus families (pi = (p, 2k-p), 4 decorations, a+b+c+d = k; I, II, IV, V
/// are symmetric under a <-> b):
///   I    realizes (a+b+c+2d, a+b+c)
///   II   realizes (a+b+2c, a+b+2d)
///   III  realizes (a+b+2c+2d, a+b)
///   IV   realizes (2a+2b+c, c+2d)
///   V    realizes (2a+2b+c+2d, c)
///   VI   realizes (2a+2b+c+2d, c)
///   VII  realizes (2a+2b+c+2d, c)
///
/// Genus-2 families (5 decorations, a+b+c+d+e = k): thirteen families named
/// by the octagon class they embed in (I.1-I.3, II.1-II.5, III.1-III.4, IV).
/// I.1 is symmetric under (a,b,c,d,e) -> (b,a,d,c,e); I.3, II.1, II.5 and IV
/// under (a,b,c,d,e) -> (d,c,b,a,e); the other eight are asymmetric.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Family {
    SphereI,
    SphereII,
    TorusH2,
    TorusI,
    TorusII,
    TorusIII,
    TorusIV,
    TorusV,
    TorusVI,
    TorusVII,
    OctI1,
    OctI2,
    OctI3,
    OctII1,
    OctII2,
    OctII3,
    OctII4,
    OctII5,
    OctIII1,
    OctIII2,
    OctIII3,
    OctIII4,
    OctIV,
}

pub const GENUS2_FAMILIES: [Family; 13] = [
    Family::OctI1,
    Family::OctI2,
    Family::OctI3,
    Family::OctII1,
    Family::OctII2,
    Family::OctII3,
    Family::OctII4,
    Family::OctII5,
    Family::OctIII1,
    Family::OctIII2,
    Family::OctIII3,
    Family::OctIII4,
    Family::OctIV,
];

impl Family {
    /// Number of decorations.
    pub fn arity(self) -> usize {
        match self {
            Family::SphereI | Family::SphereII | Family::TorusH2 => 3,
            Family::TorusI
            | Family::TorusII
            | Family::TorusIII
            | Family::TorusIV
            | Family::TorusV
            | Family::TorusVI
            | Family::TorusVII => 4,
            _ => 5,
        }
    }

    pub fn label(self) -> &'static str {
        match self {
            Family::SphereI | Family::TorusI => "I",
            Family::SphereII | Family::TorusII => "II",
            Family::TorusH2 => "g1-h2",
            Family::TorusIII => "III",
            Family::TorusIV => "IV",
            Family::TorusV => "V",
            Family::TorusVI => "VI",
            Family::TorusVII => "VII",
            Family::OctI1 => "I.1",
            Family::OctI2 => "I.2",
            Family::OctI3 => "I.3",
            Family::OctII1 => "II.1",
            Family::OctII2 => "II.2",
            Family::OctII3 => "II.3",
            Family::OctII4 => "II.4",
            Family::OctII5 => "II.5",
            Family::OctIII1 => "III.1",
            Family::OctIII2 => "III.2",
            Family::OctIII3 => "III.3",
            Family::OctIII4 => "III.4",
            Family::OctIV => "IV",
        }
    }

    /// The index permutation generating the family's decoration symmetry,
    /// if the family has one.
    pub fn symmetry(self) -> Option<&'static [usize]> {
        match self {
            Family::SphereI | Family::TorusH2 => Some(&[0, 2, 1]),
            Family::TorusI | Family::TorusII | Family::TorusIV | Family::TorusV => {
                Some(&[1, 0, 2, 3])
            }
            Family::OctI1 => Some(&[1, 0, 3, 2, 4]),
            Family::OctI3 | Family::OctII1 | Family::OctII5 | Family::OctIV => {
                Some(&[3, 2, 1, 0, 4])
            }
            _ => None,
        }
    }

    fn from_label(label: &str, arity: usize) -> Option<Family> {
        Some(match (label, arity) {
            ("I", 3) => Family::SphereI,
            ("II", 3) => Family::SphereII,
            ("g1-h2", 3) => Family::TorusH2,
            ("I", 4) => Family::TorusI,
            ("II", 4) => Family::TorusII,
            ("III", 4) => Family::TorusIII,
            ("IV", 4) => Family::TorusIV,
            ("V", 4) => Family::TorusV,
            ("VI", 4) => Family::TorusVI,
            ("VII", 4) => Family::TorusVII,
            ("I.1", 5) => Family::OctI1,
            ("I.2", 5) => Family::OctI2,
            ("I.3", 5) => Family::OctI3,
            ("II.1", 5) => Family::OctII1,
            ("II.2", 5) => Family::OctII2,
            ("II.3", 5) => Family::OctII3,
            ("II.4", 5) => Family::OctII4,
            ("II.5", 5) => Family::OctII5,
            ("III.1", 5) => Family::OctIII1,
            ("III.2", 5) => Family::OctIII2,
            ("III.3", 5) => Family::OctIII3,
            ("III.4", 5) => Family::OctIII4,
            ("IV", 5) => Family::OctIV,
            _ => return None,
        })
    }
}

/// One explicit dessin: a graph family plus positive edge decorations, kept
/// in canonical form (the lexicographically larger tuple under the family's
/// decoration symmetry, matching how the realizations are usually printed,
/// e.g. I(3,2,1) rather than I(3,1,2)).
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct RealizationDescriptor {
    family: Family,
    decorations: Vec<u64>,
}

impl RealizationDescriptor {
    pub fn new(family: Family, decorations: Vec<u64>) -> Self {
        assert_eq!(decorations.len(), family.arity(), "{family:?} takes {} decorations", family.arity());
        assert!(decorations.iter().all(|&x| x >= 1), "decorations must be positive");
        let mut rd = RealizationDescriptor { family, decorations };
        if let Some(perm) = family.symmetry() {
            let flipped: Vec<u64> = perm.iter().map(|&i| rd.decorations[i]).collect();
            if flipped > rd.decorations {
                rd.decorations = flipped;
            }
        }
        rd
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn decorations(&self) -> &[u64] {
        &self.decorations
    }
}

impl fmt::Display for RealizationDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}(", self.family.label())?;
        for (i, x) in self.decorations.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{x}")?;
        }
        write!(f, ")")
    }
}

impl FromStr for RealizationDescriptor {
    type Err = String;

    /// Parses the display form, e.g. "I(3,2,1)" or "II.4(1,1,2,1,1)". Labels
    /// shared between families ("I", "II", "IV") are resolved by the number
    /// of decorations.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        let open = s.find('(').ok_or_else(|| format!("missing '(' in {s:?}"))?;
        let label = &s[..open];
        let rest = s[open + 1..].strip_suffix(')').ok_or_else(|| format!("missing ')' in {s:?}"))?;
        let decorations = rest
            .split(',')
            .map(|tok| tok.trim().parse::<u64>().map_err(|e| format!("bad decoration {tok:?}: {e}")))
            .collect::<Result<Vec<_>, _>>()?;
        let family = Family::from_label(label, decorations.len())
            .ok_or_else(|| format!("no family {label:?} with {} decorations", decorations.len()))?;
        if decorations.iter().any(|&x| x == 0) {
            return Err("decorations must be positive".into());
        }
        Ok(RealizationDescriptor::new(family, decorations))
    }
}

impl Serialize for RealizationDescriptor {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for RealizationDescriptor {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(D::Error::custom)
    }
}

/// All dessins with profile pi for genus 0, h=2: solves the two realization
/// systems against the sorted parts. Empty exactly for the exceptional
/// partitions (cases (i) and (ii)).
pub fn realizations_g0h2(k: u64, pi: &Partition) -> Vec<RealizationDescriptor> {
    assert!(k >= 3);
    assert_eq!(pi.len(), 3);
    assert_eq!(pi.total(), 2 * k);
    let (p, q, r) = (pi.parts()[0], pi.parts()[1], pi.parts()[2]);
    let mut out = BTreeSet::new();
    // I(a,b,c) realizes (k+a, b, c): the first entry exceeds k, the other two
    // parts are b and c, so a solution exists only when the largest part
    // exceeds k, and then it is unique up to the b <-> c symmetry.
    if p > k {
        out.insert(RealizationDescriptor::new(Family::SphereI, vec![p - k, q, r]));
    }
    // II(a,b,c) realizes (2a+b, b+c, c): try every ordered assignment of the
    // parts to the three profile entries.
    for (x, y, z) in arrangements3(p, q, r) {
        if y > z && x + z > y && (x + z - y) % 2 == 0 {
            let a = (x + z - y) / 2;
            let b = y - z;
            if a >= 1 {
                out.insert(RealizationDescriptor::new(Family::SphereII, vec![a, b, z]));
            }
        }
    }
    out.into_iter().collect()
}

/// The distinct ordered arrangements of the multiset {p, q, r}.
fn arrangements3(p: u64, q: u64, r: u64) -> Vec<(u64, u64, u64)> {
    let mut set = BTreeSet::new();
    for (x, y, z) in [
        (p, q, r),
        (p, r, q),
        (q, p, r),
        (q, r, p),
        (r, p, q),
        (r, q, p),
    ] {
        set.insert((x, y, z));
    }
    set.into_iter().collect()
}

/// All dessins for genus 1, h=2 (pi = (2k)): triples a+b+c = k up to b <-> c.
pub fn realizations_g1_h2(k: u64) -> Vec<RealizationDescriptor> {
    assert!(k >= 3);
    let mut out = BTreeSet::new();
    for a in 1..=k - 2 {
        for b in 1..=k - 1 - a {
            out.insert(RealizationDescriptor::new(Family::TorusH2, vec![a, b, k - a - b]));
        }
    }
    out.into_iter().collect()
}

/// All dessins for genus 1, h=3 and pi = (p, 2k-p) (p normalized to <= k):
/// enumerates the defining constraint system of each of the seven families
/// directly. The per-family closed forms are checked in tests, and the total
/// equals nu_g1_h3(k, p).
pub fn realizations_g1_h3(k: u64, p: u64) -> Vec<RealizationDescriptor> {
    assert!(k >= 4);
    assert!(p >= 1 && p < 2 * k);
    let p = p.min(2 * k - p);
    let mut out = BTreeSet::new();

    // I: a+b+c = p, d = k-p
    if p < k {
        let d = k - p;
        for a in 1..p {
            for b in 1..p - a {
                out.insert(RealizationDescriptor::new(Family::TorusI, vec![a, b, p - a - b, d]));
            }
        }
    }

    // II: a+b+2c = p with d = (k-p)+c, and a+b+2d = p with c = (k-p)+d.
    // For p = k the two systems coincide (c = d).
    for c in 1..p / 2 + 1 {
        if p < 2 * c + 2 {
            break;
        }
        let s = p - 2 * c;
        let d = k - p + c;
        for a in 1..s {
            out.insert(RealizationDescriptor::new(Family::TorusII, vec![a, s - a, c, d]));
        }
    }
    for d in 1..p / 2 + 1 {
        if p < 2 * d + 2 {
            break;
        }
        let s = p - 2 * d;
        let c = k - p + d;
        for a in 1..s {
            out.insert(RealizationDescriptor::new(Family::TorusII, vec![a, s - a, c, d]));
        }
    }

    // III: a+b = p ordered, c+d = k-p ordered
    for a in 1..p {
        for c in 1..k.saturating_sub(p) {
            out.insert(RealizationDescriptor::new(
                Family::TorusIII,
                vec![a, p - a, c, k - p - c],
            ));
        }
    }

    // IV: c+2d equal to one of the two parts; 2a+2b+c then matches the other
    // automatically, since the decorations sum to k
    for part in [p, 2 * k - p] {
        for d in 1..=part.saturating_sub(1) / 2 {
            let c = part - 2 * d;
            if c + d + 2 > k {
                continue; // a+b = k-c-d needs at least 2
            }
            let s = k - c - d;
            for a in 1..s {
                out.insert(RealizationDescriptor::new(Family::TorusIV, vec![a, s - a, c, d]));
            }
        }
    }

    // V, VI, VII: c = p, a+b+d = k-p; V is symmetric in a, b while VI and
    // VII count ordered pairs
    if p < k {
        for d in 1..k - p {
            let s = k - p - d;
            if s < 2 {
                continue;
            }
            for a in 1..s {
                out.insert(RealizationDescriptor::new(Family::TorusV, vec![a, s - a, p, d]));
                out.insert(RealizationDescriptor::new(Family::TorusVI, vec![a, s - a, p, d]));
                out.insert(RealizationDescriptor::new(Family::TorusVII, vec![a, s - a, p, d]));
            }
        }
    }

    out.into_iter().collect()
}

/// All dessins for genus 2, h=4 (pi = (2k)): every composition of k into 5
/// positive decorations, in each of the 13 families, up to the symmetric
/// families' involutions. Total is 8*C(k-1,4) + 5*S(k) = nu_g2_h4(k).
pub fn realizations_g2(k: u64) -> Vec<RealizationDescriptor> {
    assert!(k >= 5);
    let mut out = BTreeSet::new();
    for tuple in compositions_into(k, 5) {
        for family in GENUS2_FAMILIES {
            out.insert(RealizationDescriptor::new(family, tuple.clone()));
        }
    }
    out.into_iter().collect()
}

#[derive(Debug, Error, PartialEq, Eq)]
#[error("no realization enumerator for (g,h)=({g},{h})")]
pub struct NoEnumerator {
    pub g: u64,
    pub h: u64,
}

/// Dispatches to the realization enumerator covering the datum. Covered:
/// (g,h) in {(0,2), (1,2), (1,3), (2,4)}.
pub fn realizations_for(fd: &FamilyDatum) -> Result<Vec<RealizationDescriptor>, NoEnumerator> {
    match (fd.g(), fd.h()) {
        (0, 2) => Ok(realizations_g0h2(fd.k(), fd.pi())),
        (1, 2) => Ok(realizations_g1_h2(fd.k())),
        (1, 3) => Ok(realizations_g1_h3(fd.k(), fd.pi().parts()[1])),
        (2, 4) => Ok(realizations_g2(fd.k())),
        (g, h) => Err(NoEnumerator { g, h }),
    }
}
