use crate::branch_data::FamilyDatum;
use crate::partition::Partition;
use serde::{Deserialize, Serialize};
use std::fmt;
use std::str::FromStr;
use thiserror::Error;

/// Sum of floor(j/2) for j = 1..=x, in closed form: floor(x^2/4).
/// Several of the genus-1 counts reduce to this sum.
pub fn floor_half_sum(x: u64) -> u64 {
    x * x / 4
}

/// Binomial coefficient, exact.
pub fn binomial(n: u64, r: u64) -> u64 {
    if r > n {
        return 0;
    }
    let r = r.min(n - r);
    let mut acc: u128 = 1;
    for i in 0..r {
        acc = acc * (n - i) as u128 / (i + 1) as u128;
    }
    acc.try_into().expect("binomial overflow")
}

/// Case of the genus-0, h=2 classification of pi = (p,q,r), p >= q >= r,
/// p+q+r = 2k. Parameters always refer to the sorted partition. The nine
/// cases are exhaustive and mutually exclusive:
///
///   (i)       (2m,2m,2m), 3m = k                   count 0
///   (ii)      (2m,m,m), m = k/2                    count 0
///   (iii)-(a) (k-t,k-t,2t), 1 <= t < k/3           count 1
///   (iii)-(b) (2t,k-t,k-t), k/3 < t < k/2          count 1
///   (iii)-(c) (2t,k-t,k-t), k/2 < t < k            count 1
///   (iv)      (k,k-r,r), 1 <= r < k/2              count 1
///   (v)       (2k-q-r,q,r), r < q < k-r            count 2
///   (vi)-(a)  (2k-q-r,q,r), r < k/2, k-r < q       count 3
///   (vi)-(b)  (2k-q-r,q,r), k/2 <= r < 2k/3, r < q count 3
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "case")]
pub enum CaseLabel {
    #[serde(rename = "i")]
    I { m: u64 },
    #[serde(rename = "ii")]
    Ii { m: u64 },
    #[serde(rename = "iii-a")]
    IiiA { t: u64 },
    #[serde(rename = "iii-b")]
    IiiB { t: u64 },
    #[serde(rename = "iii-c")]
    IiiC { t: u64 },
    #[serde(rename = "iv")]
    Iv { r: u64 },
    #[serde(rename = "v")]
    V { q: u64, r: u64 },
    #[serde(rename = "vi-a")]
    ViA { q: u64, r: u64 },
    #[serde(rename = "vi-b")]
    ViB { q: u64, r: u64 },
}

impl CaseLabel {
    pub fn tag(&self) -> &'static str {
        match self {
            CaseLabel::I { .. } => "(i)",
            CaseLabel::Ii { .. } => "(ii)",
            CaseLabel::IiiA { .. } => "(iii)-(a)",
            CaseLabel::IiiB { .. } => "(iii)-(b)",
            CaseLabel::IiiC { .. } => "(iii)-(c)",
            CaseLabel::Iv { .. } => "(iv)",
            CaseLabel::V { .. } => "(v)",
            CaseLabel::ViA { .. } => "(vi)-(a)",
            CaseLabel::ViB { .. } => "(vi)-(b)",
        }
    }

    /// The count each case contributes.
    pub fn count(&self) -> u64 {
        match self {
            CaseLabel::I { .. } | CaseLabel::Ii { .. } => 0,
            CaseLabel::IiiA { .. }
            | CaseLabel::IiiB { .. }
            | CaseLabel::IiiC { .. }
            | CaseLabel::Iv { .. } => 1,
            CaseLabel::V { .. } => 2,
            CaseLabel::ViA { .. } | CaseLabel::ViB { .. } => 3,
        }
    }
}

impl fmt::Display for CaseLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            CaseLabel::I { m } | CaseLabel::Ii { m } => write!(f, "{} m={m}", self.tag()),
            CaseLabel::IiiA { t } | CaseLabel::IiiB { t } | CaseLabel::IiiC { t } => {
                write!(f, "{} t={t}", self.tag())
            }
            CaseLabel::Iv { r } => write!(f, "{} r={r}", self.tag()),
            CaseLabel::V { q, r } | CaseLabel::ViA { q, r } | CaseLabel::ViB { q, r } => {
                write!(f, "{} q={q} r={r}", self.tag())
            }
        }
    }
}

impl FromStr for CaseLabel {
    type Err = String;

    /// Parses the display form, e.g. "(v) q=2 r=1" or "(iii)-(c) t=5".
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let mut toks = s.split_whitespace();
        let tag = toks.next().ok_or("empty case label")?;
        let mut m = None;
        let mut t = None;
        let mut q = None;
        let mut r = None;
        for tok in toks {
            let (name, val) = tok.split_once('=').ok_or_else(|| format!("bad parameter {tok:?}"))?;
            let val: u64 = val.parse().map_err(|e| format!("bad parameter {tok:?}: {e}"))?;
            match name {
                "m" => m = Some(val),
                "t" => t = Some(val),
                "q" => q = Some(val),
                "r" => r = Some(val),
                _ => return Err(format!("unknown parameter {name:?}")),
            }
        }
        let need = |v: Option<u64>, name: &str| v.ok_or(format!("case {tag} needs {name}"));
        Ok(match tag {
            "(i)" => CaseLabel::I { m: need(m, "m")? },
            "(ii)" => CaseLabel::Ii { m: need(m, "m")? },
            "(iii)-(a)" => CaseLabel::IiiA { t: need(t, "t")? },
            "(iii)-(b)" => CaseLabel::IiiB { t: need(t, "t")? },
            "(iii)-(c)" => CaseLabel::IiiC { t: need(t, "t")? },
            "(iv)" => CaseLabel::Iv { r: need(r, "r")? },
            "(v)" => CaseLabel::V { q: need(q, "q")?, r: need(r, "r")? },
            "(vi)-(a)" => CaseLabel::ViA { q: need(q, "q")?, r: need(r, "r")? },
            "(vi)-(b)" => CaseLabel::ViB { q: need(q, "q")?, r: need(r, "r")? },
            _ => return Err(format!("unknown case tag {tag:?}")),
        })
    }
}

/// Classifies a genus-0, h=2 partition pi (3 parts, total 2k) into the case
/// that determines its count.
pub fn classify_g0h2(k: u64, pi: &Partition) -> CaseLabel {
    assert!(k >= 3, "h=2 requires k >= 3");
    assert_eq!(pi.len(), 3, "h=2 requires 3 parts");
    assert_eq!(pi.total(), 2 * k, "pi must sum to 2k");
    let (p, q, r) = (pi.parts()[0], pi.parts()[1], pi.parts()[2]);
    if p == r {
        // all parts equal: p = 2k/3 is even
        return CaseLabel::I { m: p / 2 };
    }
    if q == r {
        // one large part p = 2t, a repeated part q = k - t; p > q forces t > k/3
        let t = k - q;
        return if 2 * t == k {
            CaseLabel::Ii { m: t }
        } else if 2 * t < k {
            CaseLabel::IiiB { t }
        } else {
            CaseLabel::IiiC { t }
        };
    }
    if p == q {
        // repeated large part k - t, single part r = 2t; p > r forces t < k/3
        return CaseLabel::IiiA { t: r / 2 };
    }
    // parts pairwise distinct; compare q with k - r, i.e. p with k
    if q == k - r {
        CaseLabel::Iv { r }
    } else if q < k - r {
        CaseLabel::V { q, r }
    } else if 2 * r < k {
        CaseLabel::ViA { q, r }
    } else {
        CaseLabel::ViB { q, r }
    }
}

/// Count for genus 0, h=2 (degree 2k, profiles (2,...,2), (5,1,2,...,2), pi).
pub fn nu_g0_h2(k: u64, pi: &Partition) -> u64 {
    classify_g0h2(k, pi).count()
}

/// Count for genus 0, h=1: pi = (p, 2k-p). One cover for p < k, none for p = k.
pub fn nu_g0_h1(k: u64, pi: &Partition) -> u64 {
    assert!(k >= 2, "h=1 requires k >= 2");
    assert_eq!(pi.len(), 2);
    assert_eq!(pi.total(), 2 * k);
    if pi.parts()[1] < k {
        1
    } else {
        0
    }
}

/// Count for genus 1, h=2: pi = (2k), value floor((k-1)^2/4).
pub fn nu_g1_h2(k: u64) -> u64 {
    assert!(k >= 3, "h=2 requires k >= 3");
    floor_half_sum(k - 1)
}

/// Count for genus 1, h=3: pi = (p, 2k-p), normalized internally to p <= k.
pub fn nu_g1_h3(k: u64, p: u64) -> u64 {
    assert!(k >= 4, "h=3 requires k >= 4");
    assert!(p >= 1 && p < 2 * k, "p must be a part of a 2-part partition of 2k");
    let p = p.min(2 * k - p);
    let fhs = |x: i128| x * x / 4;
    let (k, p) = (k as i128, p as i128);
    let v = if p == k {
        // one family contributes floor(k/2) * (floor(k/2) - 1) / 2 and one
        // contributes floor of a quarter square
        (k / 2) * (k / 2 - 1) / 2 + fhs((k - 1) / 2)
    } else {
        fhs(p - 1)
            + (p / 2) * (p / 2 - 1)
            + (k - 3) * (k - p - 1)
            + fhs(k - 1 - p / 2)
            - (k - p) / 2
            + fhs((p - 1) / 2)
    };
    assert!(v >= 0);
    v as u64
}

/// Count for genus 2, h=4: pi = (2k). Evaluated over exact rationals with a
/// common denominator 16; the two summands are not separately integral, so
/// integrality is asserted on the sum only.
pub fn nu_g2_h4(k: u64) -> u64 {
    assert!(k >= 5, "h=4 requires k >= 5");
    let k = k as i128;
    let n1 = (k - 1) * (7 * k * k * k - 63 * k * k + 197 * k - 208); // over 16
    let n2 = 5 * (5 - 2 * k) * (k / 2); // over 8
    let num = n1 + 2 * n2;
    assert!(num >= 0 && num % 16 == 0, "genus-2 count must be a nonnegative integer (k={k})");
    (num / 16) as u64
}

/// Number of 5-tuples of positive integers summing to k, counted up to the
/// involution (a,b,c,d,e) -> (b,a,d,c,e). This is the per-family count for
/// each of the five decoration-symmetric genus-2 graph families, and the
/// source of the 5*S(k) summand in nu_g2_h4.
pub fn symmetric_family_count_s(k: u64) -> u64 {
    assert!(k >= 5);
    let kk = k as i128;
    // tuples with a > b, plus tuples with a = b and c <= d; polynomial in k
    // with a parity-dependent constant term
    let (x, y, z) = if k % 2 == 0 { (48, 8, 0) } else { (45, 11, -6) };
    let quartic = kk * kk * kk * kk - 12 * kk * kk * kk + 50 * kk * kk - 84 * kk + x;
    let cubic = kk * kk * kk - 6 * kk * kk + y * kk + z;
    assert!(quartic >= 0 && quartic % 48 == 0, "k={k}");
    assert!(cubic >= 0 && cubic % 24 == 0, "k={k}");
    (quartic / 48 + cubic / 24) as u64
}

#[derive(Debug, Error, PartialEq, Eq)]
#[error("out of covered family: no closed form for (g,h)=({g},{h})")]
pub struct Uncovered {
    pub g: u64,
    pub h: u64,
}

/// The weak Hurwitz number of a family datum, by the closed forms. Covered:
/// (g,h) in {(0,0), (0,1), (0,2), (1,2), (1,3), (2,4)}.
pub fn nu(fd: &FamilyDatum) -> Result<u64, Uncovered> {
    match (fd.g(), fd.h()) {
        (0, 0) => Ok(1),
        (0, 1) => Ok(nu_g0_h1(fd.k(), fd.pi())),
        (0, 2) => Ok(nu_g0_h2(fd.k(), fd.pi())),
        (1, 2) => Ok(nu_g1_h2(fd.k())),
        (1, 3) => Ok(nu_g1_h3(fd.k(), fd.pi().parts()[1])),
        (2, 4) => Ok(nu_g2_h4(fd.k())),
        (g, h) => Err(Uncovered { g, h }),
    }
}
