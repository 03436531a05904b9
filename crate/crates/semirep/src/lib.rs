//! Word-representable graphs at desk scale: graph families derived from
//! de Bruijn graphs and overlapping permutations, a sound-and-complete
//! decision procedure for semi-transitive orientability, alternation
//! semantics of representing words, and homomorphism-based orientation
//! pipelines with mechanical verification.

pub mod alternation;
pub mod embedding;
pub mod engine;
pub mod error;
pub mod families;
pub mod graph;
pub mod verify;

pub use error::{Error, Result};
