//! Exact edge counts and edge-count bounds for maximal permutation graphs.
//!
//! A graph on vertex labels `1..=n` is a permutation graph when every edge
//! `{x, y}` with `x < y` gets a distinct label `P^y_x = y!/(y-x)!`.
//!
//! - [`numtheory`]: falling factorials, primes, valuations.
//! - [`labels`]: all label pairs and their collision classes; `D(n)`.
//! - [`witness`]: the witness families `S1..S6` and their overlap `delta`.
//! - [`bounds`]: lower/upper bounds and per-`n` reports.
//! - [`graphs`]: labeled graphs, maximality, construction, export.
//! - [`claims`]: empirical checks of the underlying lemma statements.

pub mod bounds;
pub mod claims;
pub mod error;
pub mod graphs;
pub mod labels;
pub mod numtheory;
pub mod witness;

pub use error::{Error, Result};
