//! Hypocycloids `C_{k,ℓ}`, the quotient of `C_{k,k−1}` by the reflection in
//! the horizontal axis, and the comparison of its orbifold group with the
//! semidirect product of the `N`-gon Artin group by `ℤ/2`.

mod curve;
mod trace;

pub use curve::{
    critical_parameters, hypo_point, hypo_stats, hypo_velocity, real_double_points, CriticalParameters, HypoParams,
    HypoStats,
};
pub use trace::{folded_arcs, quotient_diagram, QuotientEvent, Strand, TracedCurve, TracedEvent, Tracer};

use serde::Serialize;
use thiserror::Error;

use crate::diagram::{edge_components, DiagramError, Violation};
use crate::genpres::{wirtinger_presentation, GenError};
use crate::presentation::{ngon_semidirect, ngon_semidirect_full, profile, HomError, InvariantProfile, Presentation, TargetSet};
use crate::word::Word;

/// Largest `k` the quotient tracer accepts.
pub const MAX_K: u32 = 6;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum HypoError {
    #[error("bad parameters: {0}")]
    BadParams(String),
    #[error("{what}: residual {residual:e} above tolerance")]
    Tolerance { what: String, residual: f64 },
    #[error("{what}: found {found}, expected {expected}")]
    Census { what: String, found: usize, expected: usize },
    #[error("events at x = {left} and x = {right} are closer than 1e-6")]
    Separation { left: f64, right: f64 },
    #[error("{found} strands where {expected} were expected")]
    StrandCount { found: usize, expected: usize },
    #[error("tracing failed: {0}")]
    Trace(String),
    #[error("quotient diagram fails the hypotheses: {}", .0.iter().map(ToString::to_string).collect::<Vec<_>>().join("; "))]
    NotVerified(Vec<Violation>),
    #[error(transparent)]
    Diagram(#[from] DiagramError),
    #[error(transparent)]
    Gen(#[from] GenError),
    #[error(transparent)]
    Hom(#[from] HomError),
}

fn supported(k: u32) -> Result<(), HypoError> {
    if (2..=MAX_K).contains(&k) {
        Ok(())
    } else {
        Err(HypoError::BadParams(format!("k = {k} outside the supported range 2..={MAX_K}")))
    }
}

/// Wirtinger presentation of the quotient diagram with the square of every
/// meridian of the line killed.
pub fn orbifold_presentation(k: u32) -> Result<Presentation, HypoError> {
    supported(k)?;
    let dg = quotient_diagram(k)?;
    let out = wirtinger_presentation(&dg)?;
    let comps = edge_components(&dg)?;
    let mut p = out.presentation;
    let mut squared: Vec<usize> = Vec::new();
    for (e, name) in &out.edge_map {
        if comps[*e].as_deref() == Some("line") {
            let g = p.gen_index(name).expect("edge map names generators");
            if !squared.contains(&g) {
                squared.push(g);
            }
        }
    }
    squared.sort_unstable();
    for g in squared {
        p.push_relator(Word::gen_pow(g, 2), "line meridian squared").expect("in range");
    }
    Ok(p)
}

#[derive(Clone, Debug, Serialize)]
pub struct CaseReport {
    pub schema: u32,
    pub k: u32,
    #[serde(rename = "N")]
    pub n: u32,
    pub profile_left: InvariantProfile,
    pub profile_right: InvariantProfile,
    pub equal: bool,
    /// Profile of the semidirect product written on all `N` generators.
    pub profile_full: InvariantProfile,
    pub equal_full: bool,
    pub note: String,
}

/// Profiles of the orbifold group and of `Γ_N ⋊ ℤ/2`.
pub fn verify_case(k: u32, targets: &TargetSet) -> Result<CaseReport, HypoError> {
    let left = orbifold_presentation(k)?;
    let right = ngon_semidirect(k as usize);
    let profile_left = profile(&left, targets)?;
    let profile_right = profile(&right, targets)?;
    let profile_full = profile(&ngon_semidirect_full(k as usize), targets)?;
    Ok(CaseReport {
        schema: 1,
        k,
        n: 2 * k - 1,
        equal: profile_left.same_invariants(&profile_right),
        equal_full: profile_left.same_invariants(&profile_full),
        profile_full,
        profile_left,
        profile_right,
        note: "equal profiles are necessary for an isomorphism, not a proof of one".into(),
    })
}
