use crate::partition::Partition;
use std::fmt;
use thiserror::Error;

/// A permutation of {0, ..., d-1}, stored as its image table.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Perm {
    img: Vec<usize>,
}

impl Perm {
    pub fn identity(degree: usize) -> Perm {
        Perm { img: (0..degree).collect() }
    }

    pub fn from_images(img: Vec<usize>) -> Perm {
        let mut seen = vec![false; img.len()];
        for &x in &img {
            assert!(x < img.len(), "image {x} out of range for degree {}", img.len());
            assert!(!seen[x], "image {x} repeated: not a bijection");
            seen[x] = true;
        }
        Perm { img }
    }

    /// Builds a permutation of the given degree from disjoint cycles;
    /// unmentioned points are fixed.
    pub fn from_cycles(degree: usize, cycles: &[Vec<usize>]) -> Perm {
        let mut img: Vec<usize> = (0..degree).collect();
        let mut seen = vec![false; degree];
        for cycle in cycles {
            for (i, &x) in cycle.iter().enumerate() {
                assert!(x < degree, "point {x} out of range for degree {degree}");
                assert!(!seen[x], "point {x} appears in two cycles");
                seen[x] = true;
                img[x] = cycle[(i + 1) % cycle.len()];
            }
        }
        Perm { img }
    }

    pub fn degree(&self) -> usize {
        self.img.len()
    }

    pub fn apply(&self, x: usize) -> usize {
        self.img[x]
    }

    pub fn images(&self) -> &[usize] {
        &self.img
    }

    /// Composition applying `other` first: (a.mul(b))(x) = a(b(x)).
    pub fn mul(&self, other: &Perm) -> Perm {
        assert_eq!(self.degree(), other.degree(), "degree mismatch");
        Perm { img: other.img.iter().map(|&x| self.img[x]).collect() }
    }

    pub fn inverse(&self) -> Perm {
        let mut img = vec![0; self.degree()];
        for (x, &y) in self.img.iter().enumerate() {
            img[y] = x;
        }
        Perm { img }
    }

    /// by * self * by^{-1}, the relabeling of self along `by`.
    pub fn conjugate_by(&self, by: &Perm) -> Perm {
        assert_eq!(self.degree(), by.degree(), "degree mismatch");
        let mut img = vec![0; self.degree()];
        for (x, &y) in self.img.iter().enumerate() {
            img[by.img[x]] = by.img[y];
        }
        Perm { img }
    }

    /// Disjoint cycles, each rotated to start at its smallest point,
    /// listed in order of those starting points. Fixed points included.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.degree()];
        let mut out = Vec::new();
        for start in 0..self.degree() {
            if seen[start] {
                continue;
            }
            let mut cycle = vec![start];
            seen[start] = true;
            let mut x = self.img[start];
            while x != start {
                seen[x] = true;
                cycle.push(x);
                x = self.img[x];
            }
            out.push(cycle);
        }
        out
    }

    pub fn cycle_count(&self) -> usize {
        let mut seen = vec![false; self.degree()];
        let mut count = 0;
        for start in 0..self.degree() {
            if seen[start] {
                continue;
            }
            count += 1;
            let mut x = start;
            while !seen[x] {
                seen[x] = true;
                x = self.img[x];
            }
        }
        count
    }

    pub fn cycle_type(&self) -> Partition {
        let lengths: Vec<u64> = self.cycles().iter().map(|c| c.len() as u64).collect();
        Partition::new(lengths).expect("cycle lengths are positive")
    }
}

impl fmt::Display for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let nontrivial: Vec<Vec<usize>> =
            self.cycles().into_iter().filter(|c| c.len() > 1).collect();
        if nontrivial.is_empty() {
            return write!(f, "()");
        }
        for cycle in nontrivial {
            write!(f, "(")?;
            for (i, x) in cycle.iter().enumerate() {
                if i > 0 {
                    write!(f, " ")?;
                }
                write!(f, "{x}")?;
            }
            write!(f, ")")?;
        }
        Ok(())
    }
}

/// Whether the group generated by `perms` acts transitively on {0, ..., d-1}.
pub fn is_transitive(degree: usize, perms: &[&Perm]) -> bool {
    if degree == 0 {
        return false;
    }
    let mut seen = vec![false; degree];
    let mut stack = vec![0usize];
    seen[0] = true;
    let mut reached = 1;
    while let Some(x) = stack.pop() {
        for p in perms {
            let y = p.apply(x);
            if !seen[y] {
                seen[y] = true;
                reached += 1;
                stack.push(y);
            }
        }
    }
    reached == degree
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum TripleError {
    #[error("product of the three permutations is not the identity")]
    ProductNotIdentity,
    #[error("the triple does not generate a transitive group")]
    NotTransitive,
    #[error("Euler characteristic computation came out odd")]
    OddEulerCharacteristic,
    #[error("Euler characteristic computation came out above 2")]
    NegativeGenus,
}

/// Genus of the covering surface determined by a transitive triple with
/// alpha * beta * gamma = id: by Riemann-Hurwitz the cycle counts satisfy
/// 2 - 2g = c(alpha) + c(beta) + c(gamma) - d.
pub fn genus_of_triple(alpha: &Perm, beta: &Perm, gamma: &Perm) -> Result<usize, TripleError> {
    let d = alpha.degree();
    let prod = alpha.mul(&beta.mul(gamma));
    if prod != Perm::identity(d) {
        return Err(TripleError::ProductNotIdentity);
    }
    if !is_transitive(d, &[alpha, beta, gamma]) {
        return Err(TripleError::NotTransitive);
    }
    let cycles = (alpha.cycle_count() + beta.cycle_count() + gamma.cycle_count()) as i64;
    let euler = cycles - d as i64;
    if (2 - euler) % 2 != 0 {
        return Err(TripleError::OddEulerCharacteristic);
    }
    if euler > 2 {
        return Err(TripleError::NegativeGenus);
    }
    Ok(((2 - euler) / 2) as usize)
}

/// A transitive monodromy triple with alpha * beta * gamma = id.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MonodromyTriple {
    alpha: Perm,
    beta: Perm,
    gamma: Perm,
}

impl MonodromyTriple {
    pub fn new(alpha: Perm, beta: Perm, gamma: Perm) -> Result<MonodromyTriple, TripleError> {
        genus_of_triple(&alpha, &beta, &gamma)?;
        Ok(MonodromyTriple { alpha, beta, gamma })
    }

    /// Completes (alpha, beta) to a triple via gamma = (alpha * beta)^{-1}.
    pub fn from_alpha_beta(alpha: Perm, beta: Perm) -> Result<MonodromyTriple, TripleError> {
        let gamma = alpha.mul(&beta).inverse();
        MonodromyTriple::new(alpha, beta, gamma)
    }

    pub fn alpha(&self) -> &Perm {
        &self.alpha
    }

    pub fn beta(&self) -> &Perm {
        &self.beta
    }

    pub fn gamma(&self) -> &Perm {
        &self.gamma
    }

    pub fn degree(&self) -> usize {
        self.alpha.degree()
    }

    pub fn genus(&self) -> Result<usize, TripleError> {
        genus_of_triple(&self.alpha, &self.beta, &self.gamma)
    }

    pub fn profiles(&self) -> [Partition; 3] {
        [self.alpha.cycle_type(), self.beta.cycle_type(), self.gamma.cycle_type()]
    }
}
