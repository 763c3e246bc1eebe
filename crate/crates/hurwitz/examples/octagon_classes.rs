//! Classifies the 21 genus-2 edge pairings of the octagon under its
//! 16-element dihedral symmetry group and derives the 13 genus-2 graph
//! families: one per leg position, decoration-symmetric exactly when the
//! position keeps a residual symmetry of order 2.
//!
//!     cargo run --example octagon_classes

use hurwitz::octagon::{all_matchings, genus2_matchings, octagon_pairings};

fn main() {
    println!(
        "{} matchings of 8 octagon edges, {} of genus 2\n",
        all_matchings().len(),
        genus2_matchings().len()
    );
    let classes = octagon_pairings();
    let labels = ["I", "II", "III", "IV"];
    for (label, c) in labels.iter().zip(&classes) {
        println!(
            "class {label}: {}  (orbit {}, stabilizer order {})",
            c.representative, c.orbit_size, c.stabilizer_order
        );
        for leg in &c.leg_orbits {
            let kind = if leg.residual_order == 2 { "symmetric" } else { "asymmetric" };
            println!(
                "  leg at corner {} (orbit of {}) -> {kind} family",
                leg.corner, leg.orbit_size
            );
        }
    }
    let legs: usize = classes.iter().map(|c| c.leg_orbits.len()).sum();
    let symmetric: usize = classes.iter().map(|c| c.symmetric_leg_positions()).sum();
    println!(
        "\n{legs} leg positions in all: {symmetric} symmetric + {} asymmetric graph families",
        legs - symmetric
    );
}
