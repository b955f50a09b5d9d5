//! Constructive machinery for *rainbow* substructures in families of edge
//! sets over a complete graph.
//!
//! A family assigns one color per member (its index). A rainbow set picks at
//! most one edge per color, witnessed by an explicit injection from edges to
//! colors. The crate provides:
//!
//! * [`graph`] — vertices, canonical edges, bit-packed edge sets, cycle
//!   predicates, contraction, symmetric difference, Eulerian decomposition,
//!   and deterministic cycle enumeration over `K_n`;
//! * [`search`] — greedy and exact rainbow-cycle search, rainbow paths and
//!   stars;
//! * [`structures`] — recognizers and generators for the extremal families
//!   (pruned cacti, saguaros, linkleaves, glued squares);
//! * [`matroid`] — graphic-rank / Hall-type conditions, rainbow spanning
//!   trees, and the GF(2) reduction of odd-cycle search to matroid span;
//! * [`decide`] — the cut-or-rainbow-cycle decision procedure and its
//!   relatives.
//!
//! Everything is deterministic: ties are broken by canonical edge order or by
//! lowest color index, so repeated runs produce identical certificates.
//!
//! The supported envelope is `n <= 64` ambient vertices; vertex sets pack
//! into a single `u64` and edge sets into `C(n,2)` bits.

#![forbid(unsafe_code)]

pub mod decide;
mod error;
pub mod graph;
pub mod matroid;
pub mod search;
pub mod structures;

pub use error::Error;
