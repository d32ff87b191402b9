//! Exact small-case computation of generalized anti-Ramsey numbers.
//!
//! For a target graph `G` and a graph family `F`:
//!
//! * `f(n, G | F)` is the least `m` such that every edge coloring of `K_n`
//!   with at least `m` colours has a copy of `G` all of whose colour
//!   classes (inside the copy, isolates dropped) lie in `F`. Needs `K_2 ∈ F`.
//! * `g(n, G | F)` is the largest `m` for which some `m`-coloring of `K_n`
//!   makes every copy of `G` contain a colour class from `F`, or `0` if no
//!   such coloring exists. Needs `K_2 ∉ F`.
//!
//! The crate is organised bottom-up: [`graph`] (small graphs, canonical
//! codes, invariants), [`family`] (membership predicates), [`coloring`]
//! (colorings of `K_n` and pattern constructors), [`packing`] (packings,
//! overlaps, blockers) and [`search`] (decision procedures and the exact
//! branch-and-bound engine).

pub mod coloring;
pub mod error;
pub mod family;
pub mod graph;
pub mod packing;
pub mod search;

pub use error::{Error, Result};
