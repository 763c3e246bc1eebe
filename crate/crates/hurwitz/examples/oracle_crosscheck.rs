//! Cross-checks the closed forms against the brute-force monodromy oracle
//! on every covered datum of degree at most 10.
//!
//!     cargo run --release --example oracle_crosscheck

use hurwitz::closed_form::nu;
use hurwitz::oracle::{oracle_counts, MoveSet, DEFAULT_DEGREE_LIMIT};
use hurwitz::partition::partitions_into;
use hurwitz::FamilyDatum;

fn main() {
    let covered = [(0u64, 0u64), (0, 1), (0, 2), (1, 2), (1, 3), (2, 4)];
    let k_max = 5;
    let mut checked = 0;
    let mut failed = 0;
    for (g, h) in covered {
        for k in (h + 1)..=k_max {
            let ell = (h - 2 * g + 1) as usize;
            for pi in partitions_into(2 * k, ell) {
                let fd = FamilyDatum::new(g, h, k, pi).unwrap();
                let formula = nu(&fd).unwrap();
                let counts =
                    oracle_counts(&fd.expand(), MoveSet::default(), DEFAULT_DEGREE_LIMIT).unwrap();
                let verdict = if counts.weak as u64 == formula { "ok" } else { "MISMATCH" };
                println!(
                    "g={g} h={h} k={k} pi={:<12} formula={formula:<3} oracle={:<3} (conj orbits {:<3}) {verdict}",
                    fd.pi().to_string(),
                    counts.weak,
                    counts.conj_orbits
                );
                checked += 1;
                if counts.weak as u64 != formula {
                    failed += 1;
                }
            }
        }
    }
    println!("\n{checked} data checked, {failed} mismatches");
    assert_eq!(failed, 0);
}
