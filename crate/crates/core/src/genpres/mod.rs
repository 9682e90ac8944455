//! Presentations read off a diagram: Wirtinger generators on edges, braid
//! monodromy relations on meridians, and the corrected Wirtinger relations
//! for tangencies whose corridor to L passes obstruction points.

mod extended;
mod monodromy;
mod wirtinger;

pub use extended::{extended_details, extended_wirtinger, Correction, ExtendedOutput};
pub use monodromy::{
    diagram_braid_monodromy, edge_meridian_words, projective_closure, zvk_presentation, LocalDatum, MonodromyDatum,
};
pub use wirtinger::{wirtinger_presentation, WirtingerOutput};

use thiserror::Error;

use crate::braid::BraidError;
use crate::diagram::{DiagramError, Violation};
use crate::presentation::PresentationError;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum GenError {
    #[error(transparent)]
    Diagram(#[from] DiagramError),
    #[error("diagram is not of Wirtinger type: {}", join(.0))]
    Invalid(Vec<Violation>),
    #[error("diagram does not satisfy the hypotheses: {}", join(.0))]
    NotVerified(Vec<Violation>),
    #[error("unsupported configuration at event {event}: {message}")]
    UnsupportedConfiguration { event: usize, message: String },
    #[error("monodromy datum {index} acts on {found} strands, expected {d}")]
    StrandMismatch { index: usize, found: usize, d: usize },
    #[error("presentation has no generator `{0}`")]
    MissingGenerator(String),
    #[error(transparent)]
    Braid(#[from] BraidError),
    #[error(transparent)]
    Presentation(#[from] PresentationError),
}

fn join(v: &[Violation]) -> String {
    v.iter().map(ToString::to_string).collect::<Vec<_>>().join("; ")
}

/// Names of the fiber meridians at L.
pub fn meridian_names(d: usize) -> Vec<String> {
    (1..=d).map(|i| format!("mu{i}")).collect()
}
