//! Computes weak Hurwitz numbers by the closed forms, one datum per line.
//!
//!     cargo run --example compute_nu

use hurwitz::closed_form::{classify_g0h2, nu};
use hurwitz::{FamilyDatum, Partition};

fn main() {
    let data = [
        (0, 0, 3, vec![6]),
        (0, 1, 4, vec![5, 3]),
        (0, 1, 4, vec![4, 4]),
        (0, 2, 6, vec![9, 2, 1]),
        (0, 2, 6, vec![6, 3, 3]),
        (0, 2, 7, vec![10, 3, 1]),
        (1, 2, 5, vec![10]),
        (1, 3, 4, vec![7, 1]),
        (1, 3, 6, vec![7, 5]),
        (2, 4, 5, vec![10]),
        (2, 4, 6, vec![12]),
    ];
    for (g, h, k, parts) in data {
        let pi = Partition::new(parts).unwrap();
        let fd = FamilyDatum::new(g, h, k, pi).unwrap();
        let value = nu(&fd).unwrap();
        let case = if (g, h) == (0, 2) {
            format!("  case {}", classify_g0h2(k, fd.pi()))
        } else {
            String::new()
        };
        println!("g={g} h={h} k={k} pi={}  nu={value}{case}", fd.pi());
    }
}
