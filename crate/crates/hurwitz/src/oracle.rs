use crate::branch_data::BranchDatum;
use crate::partition::Partition;
use crate::perm::{MonodromyTriple, Perm};
use serde::{Deserialize, Serialize};
use std::collections::HashMap;
use thiserror::Error;

/// Brute force beyond this degree is refused unless the caller raises the
/// limit explicitly.
pub const DEFAULT_DEGREE_LIMIT: usize = 16;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum OracleError {
    #[error("degree {degree} exceeds the brute-force degree limit {limit}")]
    DegreeLimitExceeded { degree: usize, limit: usize },
    #[error("branch datum fails the Riemann-Hurwitz constraint")]
    IncompatibleDatum,
}

/// Which extra identifications to apply on top of simultaneous conjugation
/// when counting weak equivalence classes: the mirror move inverts all three
/// permutations, and the relabel moves swap branch points carrying equal
/// profiles. Both default to on.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct MoveSet {
    pub use_mirror: bool,
    pub use_relabel: bool,
}

impl Default for MoveSet {
    fn default() -> Self {
        MoveSet { use_mirror: true, use_relabel: true }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OracleCounts {
    /// Orbits of monodromy triples under simultaneous conjugation alone.
    pub conj_orbits: usize,
    /// Orbits after also applying the enabled moves.
    pub weak: usize,
}

/// The canonical representative of a conjugacy class: cycles laid out in
/// decreasing length on consecutive points, so the type (3,1) gives the
/// permutation (0 1 2)(3).
pub fn canonical_of_type(pi: &Partition) -> Perm {
    let mut cycles = Vec::with_capacity(pi.len());
    let mut next = 0usize;
    for &p in pi.parts() {
        cycles.push((next..next + p as usize).collect());
        next += p as usize;
    }
    Perm::from_cycles(pi.total() as usize, &cycles)
}

/// Streams every permutation of the given cycle type exactly once, passing
/// its image table to the callback. Each call roots the next cycle at the
/// smallest point not yet placed, tries each distinct remaining cycle
/// length there, and fills the rest of the cycle with every ordered choice
/// of remaining points; distinct choices give distinct permutations and
/// every permutation of the type arises from exactly one choice sequence.
pub fn for_each_of_type<F: FnMut(&[usize])>(pi: &Partition, mut f: F) {
    let d = pi.total() as usize;
    // distinct lengths with multiplicities; parts are sorted, so group runs
    let mut lengths: Vec<(usize, usize)> = Vec::new();
    for &p in pi.parts() {
        match lengths.last_mut() {
            Some((l, m)) if *l == p as usize => *m += 1,
            _ => lengths.push((p as usize, 1)),
        }
    }
    let mut gen = TypeGen { img: vec![0; d], used: vec![false; d], lengths, f: &mut f };
    gen.place_cycle(d);
}

struct TypeGen<'a, F> {
    img: Vec<usize>,
    used: Vec<bool>,
    lengths: Vec<(usize, usize)>,
    f: &'a mut F,
}

impl<F: FnMut(&[usize])> TypeGen<'_, F> {
    fn place_cycle(&mut self, left: usize) {
        if left == 0 {
            (self.f)(&self.img);
            return;
        }
        let root = self.used.iter().position(|u| !u).expect("points remain");
        self.used[root] = true;
        for i in 0..self.lengths.len() {
            if self.lengths[i].1 == 0 {
                continue;
            }
            let len = self.lengths[i].0;
            self.lengths[i].1 -= 1;
            self.fill(root, root, len - 1, left - len);
            self.lengths[i].1 += 1;
        }
        self.used[root] = false;
    }

    fn fill(&mut self, root: usize, prev: usize, todo: usize, left_after: usize) {
        if todo == 0 {
            self.img[prev] = root;
            self.place_cycle(left_after);
            return;
        }
        // every unused point is above root, the smallest unused at its turn
        for c in root + 1..self.img.len() {
            if self.used[c] {
                continue;
            }
            self.used[c] = true;
            self.img[prev] = c;
            self.fill(root, c, todo - 1, left_after);
            self.used[c] = false;
        }
    }
}

/// A total invariant of a triple's simultaneous-conjugation orbit: for each
/// choice of start point, relabel points in breadth-first discovery order
/// along alpha then beta, serialize the relabeled image tables, and keep the
/// lexicographically smallest serialization. Conjugating the triple permutes
/// the start points but leaves the set of serializations unchanged, and two
/// triples with equal fingerprints are relabelings of each other.
pub fn orbit_fingerprint(t: &MonodromyTriple) -> Vec<u8> {
    let d = t.degree();
    assert!(d <= 255, "fingerprint serialization packs points into bytes");
    let alpha = t.alpha().images();
    let beta = t.beta().images();
    let mut best: Option<Vec<u8>> = None;
    let mut label = vec![usize::MAX; d];
    let mut order = vec![0usize; d];
    for s in 0..d {
        label.fill(usize::MAX);
        label[s] = 0;
        order[0] = s;
        let mut next = 1;
        let mut head = 0;
        while head < next {
            let p = order[head];
            head += 1;
            for q in [alpha[p], beta[p]] {
                if label[q] == usize::MAX {
                    label[q] = next;
                    order[next] = q;
                    next += 1;
                }
            }
        }
        assert_eq!(next, d, "triple must be transitive");
        let mut code = Vec::with_capacity(2 * d);
        for &p in order.iter() {
            code.push(label[alpha[p]] as u8);
        }
        for &p in order.iter() {
            code.push(label[beta[p]] as u8);
        }
        if best.as_ref().is_none_or(|b| code < *b) {
            best = Some(code);
        }
    }
    best.expect("degree is positive")
}

/// Inverts all three permutations. Each cycle type is preserved, so this is
/// datum-preserving for every datum; it generally lands in a different
/// conjugation orbit.
pub fn mirror(t: &MonodromyTriple) -> MonodromyTriple {
    let out = MonodromyTriple::from_alpha_beta(t.alpha().inverse(), t.beta().inverse())
        .expect("mirror of a valid triple is valid");
    assert_eq!(out.profiles(), t.profiles(), "mirror must preserve all three profiles");
    out
}

/// Swaps the first two branch points: (a, b, c) -> (aba^{-1}, a, c). The new
/// triple's profiles are the old ones with the first two exchanged, so this
/// preserves the datum exactly when those two profiles coincide.
pub fn relabel_12(t: &MonodromyTriple) -> MonodromyTriple {
    let a = t.alpha();
    let new_alpha = a.mul(t.beta()).mul(&a.inverse());
    MonodromyTriple::new(new_alpha, a.clone(), t.gamma().clone())
        .expect("relabeling a valid triple stays valid")
}

/// Swaps the last two branch points: (a, b, c) -> (a, bcb^{-1}, b).
pub fn relabel_23(t: &MonodromyTriple) -> MonodromyTriple {
    let b = t.beta();
    let new_beta = b.mul(t.gamma()).mul(&b.inverse());
    MonodromyTriple::new(t.alpha().clone(), new_beta, b.clone())
        .expect("relabeling a valid triple stays valid")
}

/// Swaps the outer branch points, built from the two adjacent swaps. The
/// intermediate triples permute profiles that need not match; only the
/// composite is datum-preserving (when the first and third profiles agree).
pub fn relabel_13(t: &MonodromyTriple) -> MonodromyTriple {
    relabel_12(&relabel_23(&relabel_12(t)))
}

/// All monodromy triples for the datum up to simultaneous conjugation, one
/// representative per orbit, in a deterministic order.
pub fn enumerate_triples(
    datum: &BranchDatum,
    degree_limit: usize,
) -> Result<Vec<MonodromyTriple>, OracleError> {
    Ok(enumerate_with_fingerprints(datum, degree_limit)?.into_iter().map(|(_, t)| t).collect())
}

fn enumerate_with_fingerprints(
    datum: &BranchDatum,
    degree_limit: usize,
) -> Result<Vec<(Vec<u8>, MonodromyTriple)>, OracleError> {
    if !datum.riemann_hurwitz_check() {
        return Err(OracleError::IncompatibleDatum);
    }
    let d = datum.d() as usize;
    if d > degree_limit {
        return Err(OracleError::DegreeLimitExceeded { degree: d, limit: degree_limit });
    }

    let alpha = canonical_of_type(datum.pi(0));
    let alpha_img = alpha.images().to_vec();
    let gens = centralizer_generators(datum.pi(0));

    let mut expected = vec![0usize; d + 1];
    for &p in datum.pi(2).parts() {
        expected[p as usize] += 1;
    }

    let mut reps: HashMap<Vec<u8>, MonodromyTriple> = HashMap::new();
    let mut delta = vec![0usize; d];
    let mut counts = vec![0usize; d + 1];
    let mut seen = vec![false; d];
    let mut stack = Vec::with_capacity(d);

    for_each_of_type(datum.pi(1), |beta: &[usize]| {
        // cycle type of alpha * beta must match the third profile
        for x in 0..d {
            delta[x] = alpha_img[beta[x]];
        }
        counts.copy_from_slice(&expected);
        seen.fill(false);
        for start in 0..d {
            if seen[start] {
                continue;
            }
            let mut len = 0;
            let mut x = start;
            while !seen[x] {
                seen[x] = true;
                len += 1;
                x = delta[x];
            }
            if counts[len] == 0 {
                return;
            }
            counts[len] -= 1;
        }

        // keep only local lexicographic minima within the centralizer orbit
        // of beta; the true minimum of each orbit always survives, so every
        // conjugation orbit of triples keeps at least one representative
        for (g, ginv) in &gens {
            for x in 0..d {
                let c = g[beta[ginv[x]]];
                if c < beta[x] {
                    return;
                }
                if c > beta[x] {
                    break;
                }
            }
        }

        // transitivity of the pair
        seen.fill(false);
        seen[0] = true;
        stack.clear();
        stack.push(0usize);
        let mut reached = 1;
        while let Some(x) = stack.pop() {
            for y in [alpha_img[x], beta[x]] {
                if !seen[y] {
                    seen[y] = true;
                    reached += 1;
                    stack.push(y);
                }
            }
        }
        if reached < d {
            return;
        }

        let beta_perm = Perm::from_images(beta.to_vec());
        let gamma = alpha.mul(&beta_perm).inverse();
        let triple = MonodromyTriple::new(alpha.clone(), beta_perm, gamma)
            .expect("checked type, product, and transitivity");
        debug_assert_eq!(triple.genus(), Ok(datum.genus() as usize));
        let fp = orbit_fingerprint(&triple);
        reps.entry(fp).or_insert(triple);
    });

    let mut out: Vec<(Vec<u8>, MonodromyTriple)> = reps.into_iter().collect();
    out.sort_unstable_by(|a, b| a.0.cmp(&b.0));
    Ok(out)
}

/// Generators of the centralizer of the canonical permutation of this type:
/// each cycle's own rotation (both directions) and the pointwise swap of
/// each adjacent pair of equal-length cycles. Returned as image tables
/// paired with their inverses.
fn centralizer_generators(pi: &Partition) -> Vec<(Vec<usize>, Vec<usize>)> {
    let d = pi.total() as usize;
    let mut gens = Vec::new();
    let mut starts = Vec::with_capacity(pi.len());
    let mut next = 0usize;
    for &p in pi.parts() {
        starts.push(next);
        next += p as usize;
    }
    let parts = pi.parts();
    for (i, &p) in parts.iter().enumerate() {
        let (s, l) = (starts[i], p as usize);
        if l > 1 {
            let mut rot: Vec<usize> = (0..d).collect();
            for j in 0..l {
                rot[s + j] = s + (j + 1) % l;
            }
            let mut rot_inv: Vec<usize> = (0..d).collect();
            for j in 0..l {
                rot_inv[s + j] = s + (j + l - 1) % l;
            }
            gens.push((rot.clone(), rot_inv.clone()));
            gens.push((rot_inv, rot));
        }
        if i + 1 < parts.len() && parts[i + 1] == p {
            let mut swap: Vec<usize> = (0..d).collect();
            for j in 0..l {
                swap[s + j] = starts[i + 1] + j;
                swap[starts[i + 1] + j] = s + j;
            }
            gens.push((swap.clone(), swap));
        }
    }
    gens
}

/// Counts conjugation orbits and weak classes for the datum by exhaustive
/// enumeration. The enabled moves are applied to each orbit representative;
/// every move commutes with simultaneous conjugation, so gluing orbits by
/// the fingerprints of moved triples is well defined.
pub fn oracle_counts(
    datum: &BranchDatum,
    moves: MoveSet,
    degree_limit: usize,
) -> Result<OracleCounts, OracleError> {
    let reps = enumerate_with_fingerprints(datum, degree_limit)?;
    let index: HashMap<&[u8], usize> =
        reps.iter().enumerate().map(|(i, (fp, _))| (fp.as_slice(), i)).collect();
    let mut parent: Vec<usize> = (0..reps.len()).collect();
    fn find(parent: &mut [usize], mut x: usize) -> usize {
        while parent[x] != x {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        x
    }
    let repeated = datum.repeated_partitions();
    for (i, (_, t)) in reps.iter().enumerate() {
        let mut moved: Vec<MonodromyTriple> = Vec::new();
        if moves.use_mirror {
            moved.push(mirror(t));
        }
        if moves.use_relabel {
            if repeated.contains(&(1, 2)) {
                moved.push(relabel_12(t));
            }
            if repeated.contains(&(2, 3)) {
                moved.push(relabel_23(t));
            }
            if repeated.contains(&(1, 3)) {
                moved.push(relabel_13(t));
            }
        }
        for m in moved {
            assert_eq!(m.profiles(), t.profiles(), "enabled moves must preserve the datum");
            let fp = orbit_fingerprint(&m);
            let j = *index
                .get(fp.as_slice())
                .unwrap_or_else(|| panic!("bug: moved triple left the enumerated orbit set"));
            let (ri, rj) = (find(&mut parent, i), find(&mut parent, j));
            if ri != rj {
                parent[ri] = rj;
            }
        }
    }
    let weak = (0..reps.len()).filter(|&i| find(&mut parent, i) == i).count();
    Ok(OracleCounts { conj_orbits: reps.len(), weak })
}

/// The weak count with all moves enabled and the default degree limit
/// unless overridden.
pub fn weak_hurwitz(datum: &BranchDatum, degree_limit: usize) -> Result<usize, OracleError> {
    Ok(oracle_counts(datum, MoveSet::default(), degree_limit)?.weak)
}
