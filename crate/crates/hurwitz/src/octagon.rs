use serde::Serialize;
use std::fmt;

/// A perfect matching of the octagon's 8 edge labels: 4 pairs, each pair
/// naming two boundary edges to be glued. Edge i runs from corner i to
/// corner i+1 (mod 8); gluing edges i and j orientation-compatibly
/// identifies corner i with corner j+1 and corner i+1 with corner j.
/// Stored with each pair sorted and the pairs sorted.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct Matching {
    pairs: [(u8, u8); 4],
}

impl Matching {
    pub fn new(mut pairs: [(u8, u8); 4]) -> Self {
        let mut seen = [false; 8];
        for p in pairs.iter_mut() {
            if p.0 > p.1 {
                *p = (p.1, p.0);
            }
            assert!(p.0 < p.1 && p.1 < 8, "pairs must name distinct edges 0..8");
            for e in [p.0, p.1] {
                assert!(!seen[e as usize], "edge {e} paired twice");
                seen[e as usize] = true;
            }
        }
        pairs.sort_unstable();
        Matching { pairs }
    }

    pub fn pairs(&self) -> &[(u8, u8); 4] {
        &self.pairs
    }

    /// Number of corner classes after gluing. The glued surface is closed
    /// with Euler characteristic (classes) - 4 + 1, so genus 2 corresponds
    /// to exactly one class.
    pub fn corner_classes(&self) -> usize {
        let mut parent: [u8; 8] = std::array::from_fn(|i| i as u8);
        fn find(parent: &mut [u8; 8], x: u8) -> u8 {
            if parent[x as usize] != x {
                let root = find(parent, parent[x as usize]);
                parent[x as usize] = root;
            }
            parent[x as usize]
        }
        let union = |parent: &mut [u8; 8], a: u8, b: u8| {
            let (ra, rb) = (find(parent, a), find(parent, b));
            if ra != rb {
                parent[ra as usize] = rb;
            }
        };
        for &(i, j) in &self.pairs {
            union(&mut parent, i, (j + 1) % 8);
            union(&mut parent, (i + 1) % 8, j);
        }
        (0..8).filter(|&v| find(&mut parent, v) == v).count()
    }

    pub fn is_genus2(&self) -> bool {
        self.corner_classes() == 1
    }

    pub fn has_adjacent_pair(&self) -> bool {
        self.pairs.iter().any(|&(i, j)| j == i + 1 || (i, j) == (0, 7))
    }

    fn apply(&self, g: Dihedral) -> Matching {
        let mut pairs = self.pairs;
        for p in pairs.iter_mut() {
            *p = (g.on_edge(p.0), g.on_edge(p.1));
        }
        Matching::new(pairs)
    }
}

impl fmt::Display for Matching {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, j) in self.pairs {
            write!(f, "{{{i},{j}}}")?;
        }
        Ok(())
    }
}

/// An element of the 16-element dihedral symmetry group of the octagon:
/// rotation i -> i+c or reflection i -> c-i on edge labels.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Dihedral {
    reflect: bool,
    shift: u8,
}

impl Dihedral {
    pub fn all() -> impl Iterator<Item = Dihedral> {
        (0..8).flat_map(|shift| [false, true].map(|reflect| Dihedral { reflect, shift }))
    }

    pub fn identity() -> Dihedral {
        Dihedral { reflect: false, shift: 0 }
    }

    pub fn on_edge(self, i: u8) -> u8 {
        if self.reflect {
            (self.shift + 8 - i) % 8
        } else {
            (i + self.shift) % 8
        }
    }

    /// Action on corners: the reflection i -> c-i of edges sends the corner
    /// between edges i-1 and i to the corner between edges c-i+1 and c-i,
    /// i.e. corner v -> c+1-v; rotations shift corners like edges.
    pub fn on_corner(self, v: u8) -> u8 {
        if self.reflect {
            (self.shift + 1 + 8 - v) % 8
        } else {
            (v + self.shift) % 8
        }
    }
}

/// One orbit of the stabilizer of a pairing class acting on the 8 corners:
/// the possible attachment positions for a pendant edge ("leg") are these
/// orbits, and a leg at a position with residual symmetry of order 2 yields
/// a decoration-symmetric graph family, order 1 an asymmetric one.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LegOrbit {
    /// Smallest corner in the orbit.
    pub corner: u8,
    pub orbit_size: usize,
    /// Order of the subgroup of the matching's stabilizer fixing the corner.
    pub residual_order: usize,
}

/// An equivalence class of genus-2 edge pairings of the octagon under the
/// 16-element dihedral group.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PairingClass {
    /// Lexicographically smallest matching in the orbit.
    pub representative: Matching,
    pub orbit_size: usize,
    /// Order of the subgroup of the dihedral group fixing the representative.
    pub stabilizer_order: usize,
    pub leg_orbits: Vec<LegOrbit>,
}

impl PairingClass {
    /// Number of leg positions, i.e. of graph families this class yields.
    pub fn leg_positions(&self) -> usize {
        self.leg_orbits.len()
    }

    pub fn symmetric_leg_positions(&self) -> usize {
        self.leg_orbits.iter().filter(|l| l.residual_order == 2).count()
    }
}

/// All 105 perfect matchings of the 8 edge labels.
pub fn all_matchings() -> Vec<Matching> {
    let mut out = Vec::with_capacity(105);
    let mut pairs = Vec::with_capacity(4);
    fn rec(used: &mut [bool; 8], pairs: &mut Vec<(u8, u8)>, out: &mut Vec<Matching>) {
        let Some(first) = (0..8).find(|&e| !used[e as usize]) else {
            out.push(Matching::new([pairs[0], pairs[1], pairs[2], pairs[3]]));
            return;
        };
        used[first as usize] = true;
        for second in first + 1..8 {
            if used[second as usize] {
                continue;
            }
            used[second as usize] = true;
            pairs.push((first, second));
            rec(used, pairs, out);
            pairs.pop();
            used[second as usize] = false;
        }
        used[first as usize] = false;
    }
    rec(&mut [false; 8], &mut pairs, &mut out);
    out
}

/// The genus-2 matchings (single corner class): 21 of the 105.
pub fn genus2_matchings() -> Vec<Matching> {
    all_matchings().into_iter().filter(Matching::is_genus2).collect()
}

/// Classifies the genus-2 matchings under the dihedral action. Exactly four
/// classes come out, listed by increasing representative; stabilizer orders
/// and the leg-position data are measured, not assumed, and cross-checked
/// in tests against orbit sizes (orbit times stabilizer = 16, orbit sizes
/// summing to 21, and 13 leg positions in total, 5 of them symmetric).
pub fn octagon_pairings() -> Vec<PairingClass> {
    let mut all = genus2_matchings();
    all.sort_unstable();
    let mut classes: Vec<PairingClass> = Vec::new();
    let mut assigned: Vec<bool> = vec![false; all.len()];
    for (idx, &m) in all.iter().enumerate() {
        if assigned[idx] {
            continue;
        }
        let mut orbit: Vec<Matching> = Dihedral::all().map(|g| m.apply(g)).collect();
        orbit.sort_unstable();
        orbit.dedup();
        for other in &orbit {
            let pos = all.binary_search(other).expect("orbit member must be a genus-2 matching");
            assigned[pos] = true;
        }
        let representative = orbit[0];
        let stabilizer: Vec<Dihedral> =
            Dihedral::all().filter(|&g| representative.apply(g) == representative).collect();
        assert_eq!(stabilizer.len() * orbit.len(), 16, "orbit-stabilizer");
        let leg_orbits = corner_orbits(&stabilizer);
        classes.push(PairingClass {
            representative,
            orbit_size: orbit.len(),
            stabilizer_order: stabilizer.len(),
            leg_orbits,
        });
    }
    classes.sort_unstable_by_key(|c| c.representative);
    classes
}

fn corner_orbits(stabilizer: &[Dihedral]) -> Vec<LegOrbit> {
    let mut seen = [false; 8];
    let mut out = Vec::new();
    for v in 0..8u8 {
        if seen[v as usize] {
            continue;
        }
        let mut orbit: Vec<u8> = stabilizer.iter().map(|g| g.on_corner(v)).collect();
        orbit.sort_unstable();
        orbit.dedup();
        for &w in &orbit {
            seen[w as usize] = true;
        }
        let residual_order = stabilizer.iter().filter(|g| g.on_corner(v) == v).count();
        assert_eq!(residual_order * orbit.len(), stabilizer.len(), "orbit-stabilizer on corners");
        out.push(LegOrbit { corner: v, orbit_size: orbit.len(), residual_order });
    }
    out
}
