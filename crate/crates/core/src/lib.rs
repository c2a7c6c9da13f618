//! Perrin cordial labelings of graphs.
//!
//! A labeling gives each vertex a distinct index in `{0..=|V|}` (one index is
//! left over) and an edge gets `0` when its endpoints' Perrin numbers have the
//! same parity, `1` otherwise. It is cordial when the two edge counts differ
//! by at most one.
//!
//! * [`perrin`]: the sequence, its parities and even-index counts.
//! * [`graph`]: simple graphs and the ten generated families.
//! * [`labeling`]: labelings, parity patterns, tallies and the verifier.
//! * [`constructors`]: per-family labeling schemes.
//! * [`oracle`]: exhaustive and count-level feasibility deciders.
//! * [`claims`]: published characterizations and sweeps against them.
//! * [`io`]: JSON and DOT.

pub mod claims;
pub mod constructors;
pub mod error;
pub mod graph;
pub mod io;
pub mod labeling;
pub mod oracle;
pub mod perrin;

pub use constructors::{construct, Constructed, Outcome};
pub use error::{Error, Result};
pub use graph::{Family, FamilySpec, Graph, Role};
pub use labeling::{
    is_cordial, is_valid, realize, tally, tally_labeling, to_parity, EdgeTally, ParityPattern,
    PerrinLabeling,
};
pub use oracle::{decide_exhaustive, SearchConfig, Verdict};
pub use perrin::{even_count, perrin_parity, perrin_value, Parity};
