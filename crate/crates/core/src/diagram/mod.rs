//! Real pictures of plane curves: strands crossing a vertical base line,
//! events at distinct abscissae, and the checks run on them.

mod check;
mod dsl;
mod faces;
mod sweep;

pub use check::{
    auto_region_b, check_components, edge_components, check_facing, check_theorem, validate_wirtinger_type, FacingReport,
    RegionB, RegionFailure, TheoremReport, Violation, ViolationKind, WirtingerTypeReport,
};
pub use dsl::{parse_diagram, parse_rational, serialize_diagram, DslError};
pub use faces::{faces, obstruction_points, CellComplex, DividerKind, Face, FaceComplex, ObstructionPoint, OneCell, OneCellKind};
pub(crate) use faces::build_faces;
pub(crate) use sweep::UnionFind;
pub use sweep::{derive_edges, sweep_ranks, Edge, EdgeEnd, EdgeSets, EventBlock, SweepTable};

use num_rational::Rational64;
use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Side {
    Left,
    Right,
}

impl Side {
    pub fn opposite(self) -> Side {
        match self {
            Side::Left => Side::Right,
            Side::Right => Side::Left,
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            Side::Left => "left",
            Side::Right => "right",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum EventKind {
    /// `m` lines through one point, `m ≥ 2`.
    Ordinary { m: usize },
    /// `A_m` double point with real branches on both sides, `m` odd.
    Crossing { m: usize },
    /// `A_m` with both real half-branches on `branch_side`, `m ≥ 2` even.
    Cusp { m: usize, branch_side: Side },
    /// Simple vertical tangency, treated as `A_0`.
    Tangency { branch_side: Side },
}

impl EventKind {
    pub fn branch_side(&self) -> Option<Side> {
        match *self {
            EventKind::Cusp { branch_side, .. } | EventKind::Tangency { branch_side } => Some(branch_side),
            _ => None,
        }
    }

    /// The `m` of `A_m` (0 for tangencies), or the multiplicity of an ordinary point.
    pub fn m(&self) -> usize {
        match *self {
            EventKind::Ordinary { m } | EventKind::Crossing { m } | EventKind::Cusp { m, .. } => m,
            EventKind::Tangency { .. } => 0,
        }
    }

    pub fn name(&self) -> &'static str {
        match self {
            EventKind::Ordinary { .. } => "ordinary",
            EventKind::Crossing { .. } => "crossing",
            EventKind::Cusp { .. } => "cusp",
            EventKind::Tangency { .. } => "tangency",
        }
    }

    pub fn check_parity(&self) -> Result<(), String> {
        match *self {
            EventKind::Ordinary { m } if m < 2 => Err(format!("ordinary point needs m >= 2, got {m}")),
            EventKind::Crossing { m } if m % 2 == 0 => Err(format!("crossing needs odd m, got {m}")),
            EventKind::Cusp { m, .. } if m < 2 || m % 2 == 1 => Err(format!("cusp needs even m >= 2, got {m}")),
            _ => Ok(()),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Event {
    pub x: Rational64,
    pub kind: EventKind,
    /// 1-based rank of the block's top strand: in the interval between the
    /// event and L, or for a block born away from L, in the interval beyond it.
    pub top: usize,
}

impl Event {
    pub fn side_of(&self, line_x: Rational64) -> Side {
        if self.x < line_x {
            Side::Left
        } else {
            Side::Right
        }
    }

    /// Whether the branches of a cusp or tangency reach toward L.
    /// Ordinary points and crossings always do.
    pub fn faces(&self, line_x: Rational64) -> bool {
        match self.kind.branch_side() {
            Some(b) => b == self.side_of(line_x).opposite(),
            None => true,
        }
    }

    /// Strands in the block on the side toward L and on the side away from it.
    pub fn block_sizes(&self, line_x: Rational64) -> (usize, usize) {
        match self.kind {
            EventKind::Ordinary { m } => (m, m),
            EventKind::Crossing { .. } => (2, 2),
            EventKind::Cusp { .. } | EventKind::Tangency { .. } => {
                if self.faces(line_x) {
                    (2, 0)
                } else {
                    (0, 2)
                }
            }
        }
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum DiagramError {
    #[error("event {event} at x={x}: {message}")]
    BadEvent { event: usize, x: String, message: String },
    #[error("two events share x = {0}")]
    DuplicateX(String),
    #[error("event at x = {0} lies on the base line")]
    EventOnLine(String),
    #[error("strand ranks must be 1..={d} exactly once each")]
    BadStrands { d: usize },
    #[error("{0}")]
    Unsupported(String),
}

/// A real picture with base line `x = line_x` met by `d` strands, ranked
/// top to bottom and tagged with component names.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CurveDiagram {
    pub degree_y: usize,
    pub line_x: Rational64,
    pub components: Vec<String>,
    pub events: Vec<Event>,
}

impl CurveDiagram {
    /// Sorts events by `x` and checks distinctness and parity.
    pub fn new(
        degree_y: usize,
        line_x: Rational64,
        components: Vec<String>,
        mut events: Vec<Event>,
    ) -> Result<Self, DiagramError> {
        events.sort_by(|a, b| a.x.cmp(&b.x));
        for w in events.windows(2) {
            if w[0].x == w[1].x {
                return Err(DiagramError::DuplicateX(fmt_rational(w[0].x)));
            }
        }
        for (i, e) in events.iter().enumerate() {
            if e.x == line_x {
                return Err(DiagramError::EventOnLine(fmt_rational(e.x)));
            }
            e.kind.check_parity().map_err(|message| DiagramError::BadEvent {
                event: i,
                x: fmt_rational(e.x),
                message,
            })?;
            if e.top == 0 {
                return Err(DiagramError::BadEvent { event: i, x: fmt_rational(e.x), message: "top must be >= 1".into() });
            }
        }
        Ok(CurveDiagram { degree_y, line_x, components, events })
    }

    /// Number of strands crossing L.
    pub fn d(&self) -> usize {
        self.components.len()
    }

    /// Event ids on one side, ordered outward from L.
    pub fn side_events(&self, side: Side) -> Vec<usize> {
        let mut ids: Vec<usize> =
            (0..self.events.len()).filter(|&i| self.events[i].side_of(self.line_x) == side).collect();
        if side == Side::Left {
            ids.reverse();
        }
        ids
    }

    pub fn component_names(&self) -> Vec<String> {
        let mut names = self.components.clone();
        names.sort();
        names.dedup();
        names
    }
}

pub fn fmt_rational(r: Rational64) -> String {
    if *r.denom() == 1 {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

pub fn rational_to_f64(r: Rational64) -> f64 {
    *r.numer() as f64 / *r.denom() as f64
}
