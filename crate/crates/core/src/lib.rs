//! Same-order types of finite groups, computed by exhaustive enumeration.
//!
//! A group's *same-order type* nse(G) is the set of sizes of the classes
//! of the relation "x and y have the same order": nse(G) = {s_t}, where
//! s_t counts the elements of order exactly t. This crate enumerates
//! concrete permutation and matrix groups, computes their order spectra,
//! and verifies a body of arithmetic facts about them — Frobenius's
//! divisibility theorem, the element-count formulas for L2(q) and Sz(q),
//! prime-graph structure, C_{p,p} detection, and the characterization of
//! A5 as the only nonabelian simple group with |nse| = 4.

pub mod checks;
pub mod constructions;
pub mod error;
pub mod field;
pub mod gens;
pub mod group;
pub mod matrix;
pub mod num;
pub mod perm;
pub mod report;
pub mod spectrum;
pub mod structure;

pub use error::{Error, Result};
