//! Diagram groups over semigroup presentations.
//!
//! The crate covers semigroup diagrams up to commutation of independent moves,
//! truncated Squier and Farley complexes, hyperplane analysis, the embedding into
//! a right-angled Artin group, graph-of-groups decompositions along left
//! hyperplanes, and the diagram groups attached to collections of intervals.

pub mod catalog;
pub mod certify;
pub mod decomposition;
pub mod diagrams;
pub mod dot;
pub mod error;
pub mod farley;
pub mod groups;
pub mod interval;
pub mod oracle;
pub mod raag;
pub mod rewriting;
pub mod squier;

pub use error::{Error, Result};
