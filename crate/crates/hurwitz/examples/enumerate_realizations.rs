//! Lists the explicit dessins behind the counts: every realization
//! descriptor for a sample datum from each covered slice.
//!
//!     cargo run --example enumerate_realizations

use hurwitz::{nu, realizations_for, FamilyDatum, Partition};

fn main() {
    let data = [
        (0, 2, 6, vec![9, 2, 1]),
        (0, 2, 7, vec![6, 5, 3]),
        (1, 2, 5, vec![10]),
        (1, 3, 6, vec![7, 5]),
        (2, 4, 5, vec![10]),
    ];
    for (g, h, k, parts) in data {
        let fd = FamilyDatum::new(g, h, k, Partition::new(parts).unwrap()).unwrap();
        let rs = realizations_for(&fd).unwrap();
        println!("g={g} h={h} k={k} pi={}: {} dessins (nu = {})", fd.pi(), rs.len(), nu(&fd).unwrap());
        for r in &rs {
            println!("  {r}");
        }
        println!();
    }
}
