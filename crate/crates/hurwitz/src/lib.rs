//! Weak Hurwitz numbers for a family of three-branch-point data over the
//! sphere: a degree-2k covering with profiles (2,...,2), (2h+1,1,2,...,2)
//! and a free partition pi, counted up to conjugation, mirror, and the
//! relabeling of branch points with equal profiles.
//!
//! Three independent routes to the counts live here and are kept in
//! agreement by the test suite:
//!
//! * closed forms per (g,h) slice ([`closed_form`]),
//! * explicit dessin realizations, enumerable family by family
//!   ([`realizations`], with the genus-2 graph families classified through
//!   the octagon pairings in [`octagon`]),
//! * a brute-force monodromy oracle over permutation triples ([`oracle`]).
//!
//! The runnable examples cover each capability; the `hurwitz` binary wraps
//! them as subcommands (`nu`, `table`, `realizations`, `verify`,
//! `octagons`).

pub mod branch_data;
pub mod cache;
pub mod cli;
pub mod closed_form;
pub mod octagon;
pub mod oracle;
pub mod partition;
pub mod perm;
pub mod realizations;
pub mod tables;

pub use branch_data::{BranchDatum, FamilyDatum};
pub use closed_form::nu;
pub use oracle::{enumerate_triples, oracle_counts, weak_hurwitz, MoveSet, OracleCounts};
pub use partition::Partition;
pub use perm::{genus_of_triple, MonodromyTriple, Perm};
pub use realizations::{realizations_for, RealizationDescriptor};
