//! Enumeration of downward-closed classes (ideals) of edge-colored complete
//! graphs, adapters for the combinatorial classes that embed into them, and
//! a growth-rate classifier built on structural certificates.
//!
//! The universal objects are pairs `(n, chi)` assigning each vertex pair of
//! `[n]` a color from a finite poset; containment is witnessed by increasing
//! vertex maps that weakly raise every edge color. Ideals are given by a
//! finite forbidden basis, a downward-closed predicate, or the image of one
//! of the shipped class adapters (permutations, set partitions, ordered
//! graphs, words, ...). The library enumerates levels, counts them, detects
//! rich / simple / wealthy / tame configurations, and assembles the evidence
//! into a growth verdict (eventually constant, at least linear, polynomial
//! consistent, at least Fibonacci).
//!
//! See the `examples/` directory for runnable tours of each capability, or
//! the `ideal-growth` binary for the command-line interface.

pub mod cache;
pub mod certificates;
pub mod classes;
pub mod coloring;
pub mod error;
pub mod growth;
pub mod ideal;
pub mod literal;
pub mod matrix;
pub mod poset;
pub mod run;

pub use crate::coloring::{contains, find_embedding, Coloring, Homogeneity};
pub use crate::error::{Error, Result};
pub use crate::poset::{Color, ColorPoset};
