//! Stallings graphs for finitely generated subgroups of free groups.
//!
//! A subgroup `H` of the free group `F_r` is represented by its core graph:
//! a basepointed graph labelled by the generators, stored as one partial
//! injection per letter. On top of that the crate provides intersection
//! (pullback), join (wedge and fold), indices, bases and conjugation, two
//! random subgroup models, and a laboratory for the Hanna Neumann family of
//! rank inequalities.

pub mod error;
pub mod fold;
pub mod format;
pub mod graph;
pub mod lab;
pub mod random;
pub mod subgroup;
pub mod word;

pub use error::{Error, Result};
pub use fold::{fold_edges, fold_from_words, Folder};
pub use graph::{PartialInjection, SpanningTree, StallingsGraph};
pub use subgroup::{Index, Pullback, Subgroup};
pub use word::{Letter, Word};
