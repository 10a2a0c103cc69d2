//! Linking number, Conway polynomial (two independent routes), Simon
//! invariant, α-invariant and the small-stick classification tables.

mod alpha;
mod classify;
mod conway;
mod poly;
mod simon;

pub use alpha::{alpha_d4, alpha_k33, alpha_k5, alpha_omega, d4_linking_numbers, Family};
pub use classify::{classify_knot, classify_link, KnotClass, LinkClass};
pub use conway::{
    arf, conway_a2, conway_from_seifert, conway_seifert, conway_skein, linking_number,
    ConwayPolynomial, SKEIN_BUDGET,
};
pub use poly::{determinant, in_z, Laurent};
pub use simon::{edge_linking, simon_invariant, simon_of_embedding};
