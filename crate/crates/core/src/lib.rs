//! Fundamental groups of complex plane curve complements from real diagrams.

pub mod braid;
pub mod corpus;
pub mod diagram;
pub mod genpres;
pub mod hypocycloid;
pub mod presentation;
pub mod word;

pub use braid::{local_braid, Braid, LocalKind};
pub use presentation::{Presentation, TietzeTranscript};
pub use word::{Letter, Word};
