use std::fmt;

use serde::Serialize;
use thiserror::Error;

use super::faces::{build_faces, FaceComplex, OneCellKind};
use super::sweep::{sweep_ranks, SweepTable, UnionFind};
use super::{fmt_rational, CurveDiagram, DiagramError, EventKind};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum ViolationKind {
    /// The picture is inconsistent (blocks out of range, too many strands).
    Sweep,
    WirtingerType,
    Components,
    Region,
    Facing,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Violation {
    pub kind: ViolationKind,
    pub message: String,
    pub events: Vec<usize>,
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let tag = match self.kind {
            ViolationKind::Sweep => "sweep",
            ViolationKind::WirtingerType => "wirtinger-type",
            ViolationKind::Components => "components",
            ViolationKind::Region => "region",
            ViolationKind::Facing => "facing",
        };
        write!(f, "[{tag}] {}", self.message)
    }
}

fn violation(kind: ViolationKind, message: impl Into<String>, events: Vec<usize>) -> Violation {
    Violation { kind, message: message.into(), events }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct WirtingerTypeReport {
    pub checks: Vec<(String, bool, String)>,
    pub violations: Vec<Violation>,
}

impl WirtingerTypeReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }
}

pub fn validate_wirtinger_type(dg: &CurveDiagram) -> WirtingerTypeReport {
    let mut checks = Vec::new();
    let mut violations = Vec::new();
    checks.push((
        "real-singular-points".to_string(),
        true,
        "assumed: singular points of the projection are real (every event is a real point)".to_string(),
    ));
    checks.push(("real-branches".to_string(), true, "assumed: branches through events are real by encoding".to_string()));
    let w3 = dg.d() == dg.degree_y;
    checks.push(("full-real-fiber".to_string(), w3, format!("L meets the curve in d = {} real points, degree in y = {}", dg.d(), dg.degree_y)));
    if !w3 {
        violations.push(violation(
            ViolationKind::WirtingerType,
            format!("L meets {} real strands but the degree in y is {}", dg.d(), dg.degree_y),
            vec![],
        ));
    }
    let parity: Vec<usize> = (0..dg.events.len()).filter(|&i| dg.events[i].kind.check_parity().is_err()).collect();
    checks.push(("simple-tangencies".to_string(), true, "vertical tangencies are simple; no vertical components".to_string()));
    checks.push((
        "event-types".to_string(),
        parity.is_empty(),
        "events are ordinary points or A_m double points".to_string(),
    ));
    for i in parity {
        let msg = dg.events[i].kind.check_parity().unwrap_err();
        violations.push(violation(ViolationKind::WirtingerType, format!("event {i}: {msg}"), vec![i]));
    }
    if let Err(e) = sweep_ranks(dg) {
        violations.push(violation(ViolationKind::Sweep, e.to_string(), vec![]));
    }
    WirtingerTypeReport { checks, violations }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FacingReport {
    pub violations: Vec<Violation>,
}

impl FacingReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Cusps and tangencies must have their branches on the side of L.
pub fn check_facing(dg: &CurveDiagram) -> FacingReport {
    let violations = dg
        .events
        .iter()
        .enumerate()
        .filter(|(_, e)| !e.faces(dg.line_x))
        .map(|(i, e)| {
            let side = e.side_of(dg.line_x);
            violation(
                ViolationKind::Facing,
                format!(
                    "{} at x = {} lies {} of L but its branches go {}, away from L",
                    e.kind.name(),
                    fmt_rational(e.x),
                    side.as_str(),
                    side.as_str()
                ),
                vec![i],
            )
        })
        .collect();
    FacingReport { violations }
}

/// Real-connectivity of each declared component, following branches
/// through events.
pub fn check_components(dg: &CurveDiagram) -> Result<Vec<Violation>, DiagramError> {
    let table = sweep_ranks(dg)?;
    Ok(component_violations(dg, &table))
}

struct Branches {
    branch: UnionFind,
    label: Vec<Option<String>>,
    events_of: Vec<Vec<usize>>,
    roots: Vec<usize>,
    conflicts: Vec<Violation>,
}

/// Real branches (edges joined through smooth continuations) with the
/// component names they inherit from L.
fn branches(dg: &CurveDiagram, table: &SweepTable) -> Branches {
    let n = table.edges.len();
    let mut branch = UnionFind::new(n);
    for b in &table.blocks {
        match dg.events[b.event].kind {
            EventKind::Cusp { .. } | EventKind::Tangency { .. } => {
                let pair = if b.near.is_empty() { &b.far } else { &b.near };
                branch.union(pair[0], pair[1]);
            }
            _ => {
                for &(i, j) in &b.pairing {
                    branch.union(b.near[i], b.far[j]);
                }
            }
        }
    }
    let mut conflicts = Vec::new();
    let mut label: Vec<Option<String>> = vec![None; n];
    for (rank, name) in dg.components.iter().enumerate() {
        let r = branch.find(rank);
        match &label[r] {
            Some(other) if other != name => conflicts.push(violation(
                ViolationKind::Components,
                format!("strand {} is declared `{name}` but lies on one real branch with a strand of `{other}`", rank + 1),
                vec![],
            )),
            _ => label[r] = Some(name.clone()),
        }
    }
    // Events touched by each branch.
    let mut events_of: Vec<Vec<usize>> = vec![Vec::new(); n];
    for b in &table.blocks {
        for &e in b.near.iter().chain(&b.far) {
            let r = branch.find(e);
            if !events_of[r].contains(&b.event) {
                events_of[r].push(b.event);
            }
        }
    }
    let roots: Vec<usize> = {
        let mut v: Vec<usize> = (0..n).map(|e| branch.find(e)).collect();
        v.sort_unstable();
        v.dedup();
        v
    };
    // Unlabelled branches inherit a label from a neighbour that has exactly one.
    loop {
        let mut changed = false;
        for &r in &roots {
            if label[r].is_some() {
                continue;
            }
            let mut seen: Vec<String> = roots
                .iter()
                .filter(|&&q| q != r && events_of[q].iter().any(|e| events_of[r].contains(e)))
                .filter_map(|&q| label[q].clone())
                .collect();
            seen.sort();
            seen.dedup();
            if seen.len() == 1 {
                label[r] = seen.pop();
                changed = true;
            }
        }
        if !changed {
            break;
        }
    }
    Branches { branch, label, events_of, roots, conflicts }
}

/// Component name of every edge, where determined.
pub fn edge_components(dg: &CurveDiagram) -> Result<Vec<Option<String>>, DiagramError> {
    let table = sweep_ranks(dg)?;
    let mut br = branches(dg, &table);
    Ok((0..table.edges.len()).map(|e| br.label[br.branch.find(e)].clone()).collect())
}

fn component_violations(dg: &CurveDiagram, table: &SweepTable) -> Vec<Violation> {
    let n = table.edges.len();
    let Branches { mut branch, label, events_of, roots, conflicts: mut out } = branches(dg, table);
    for &r in &roots {
        if label[r].is_none() {
            let edges: Vec<String> = (0..n).filter(|&e| branch.find(e) == r).map(|e| format!("e{e}")).collect();
            out.push(violation(
                ViolationKind::Components,
                format!(
                    "real piece ({}) does not reach L and meets no declared component; the real part of its component is disconnected",
                    edges.join(", ")
                ),
                events_of[r].clone(),
            ));
        }
    }
    for name in dg.component_names() {
        let mine: Vec<usize> = roots.iter().copied().filter(|&r| label[r].as_deref() == Some(name.as_str())).collect();
        let mut uf = UnionFind::new(mine.len());
        for i in 0..mine.len() {
            for j in i + 1..mine.len() {
                if events_of[mine[i]].iter().any(|e| events_of[mine[j]].contains(e)) {
                    uf.union(i, j);
                }
            }
        }
        if uf.count_roots(0..mine.len()) > 1 {
            out.push(violation(
                ViolationKind::Components,
                format!("component `{name}` has a disconnected real part"),
                vec![],
            ));
        }
    }
    out
}

/// Closed union of obstruction-free faces.
#[derive(Clone, Debug, Serialize)]
pub struct RegionB {
    pub faces: Vec<usize>,
    pub cells: Vec<usize>,
    /// Euler characteristic of `B ∪ C ∪ L` inside the box.
    pub euler: i64,
    pub connected: bool,
}

#[derive(Debug, Error, Clone)]
pub enum RegionFailure {
    #[error(transparent)]
    Diagram(#[from] DiagramError),
    #[error("no valid region B: {}", reasons.join("; "))]
    NoValidRegion { reasons: Vec<String>, blocking: Vec<usize>, euler: i64, connected: bool },
}

/// Takes every face without an obstruction point and accepts when
/// `B ∪ C ∪ L` is connected with Euler characteristic 1 and contains
/// every point of `L ∩ C` in `B`.
pub fn auto_region_b(dg: &CurveDiagram) -> Result<RegionB, RegionFailure> {
    let table = sweep_ranks(dg)?;
    let fc = build_faces(dg, &table);
    region_from_faces(dg, &fc)
}

pub(crate) fn region_from_faces(dg: &CurveDiagram, fc: &FaceComplex) -> Result<RegionB, RegionFailure> {
    let cx = &fc.complex;
    let blocked: Vec<bool> = (0..fc.faces.len()).map(|f| !fc.face_obstructions(f).is_empty()).collect();
    let faces: Vec<usize> = (0..fc.faces.len()).filter(|&f| !blocked[f]).collect();
    let in_b: Vec<bool> = (0..cx.n_cells).map(|c| !blocked[fc.cell_face[c]]).collect();
    let cells: Vec<usize> = (0..cx.n_cells).filter(|&c| in_b[c]).collect();

    // K = closed B ∪ C ∪ L, as a subcomplex.
    let mut seg_in_b = vec![false; cx.one_cells.len()];
    for &c in &cells {
        for &s in cx.cell_dividers[c].iter().chain(&cx.cell_box[c]) {
            seg_in_b[s] = true;
        }
    }
    let one: Vec<usize> = (0..cx.one_cells.len())
        .filter(|&i| match cx.one_cells[i].kind {
            OneCellKind::Arc { .. } => true,
            OneCellKind::Divider { div, .. } => div == cx.line_divider || seg_in_b[i],
            OneCellKind::Box => seg_in_b[i],
        })
        .collect();
    let mut verts = cx.curve_vertices.clone();
    for &i in &one {
        verts.extend_from_slice(&cx.one_cells[i].ends);
    }
    verts.sort_unstable();
    verts.dedup();
    let euler = verts.len() as i64 - one.len() as i64 + cells.len() as i64;
    let mut uf = UnionFind::new(cx.n_vertices);
    for &i in &one {
        let [a, b] = cx.one_cells[i].ends;
        uf.union(a, b);
    }
    let connected = uf.count_roots(verts.iter().copied()) <= 1;

    let mut reasons = Vec::new();
    if !connected {
        reasons.push("B ∪ C ∪ L is disconnected".to_string());
    }
    if euler != 1 {
        reasons.push(format!("B ∪ C ∪ L has Euler characteristic {euler}, not 1 (it is not simply connected)"));
    }
    let k = cx.line_divider;
    for p in 0..dg.d() {
        let around = [cx.cell(k, p), cx.cell(k, p + 1), cx.cell(k + 1, p), cx.cell(k + 1, p + 1)];
        if !around.iter().any(|&c| in_b[c]) {
            reasons.push(format!("the point of L on strand {} is not in B", p + 1));
        }
    }
    if reasons.is_empty() {
        Ok(RegionB { faces, cells, euler, connected })
    } else {
        let mut blocking: Vec<usize> = fc.obstructions.iter().map(|o| o.event).collect();
        blocking.dedup();
        for o in &fc.obstructions {
            let x = fmt_rational(dg.events[o.event].x);
            let where_ = if fc.faces[o.face].touches_box { "an unbounded face" } else { "a bounded face" };
            reasons.push(format!(
                "obstruction of the {} at x = {x} ({} side) blocks {where_}",
                dg.events[o.event].kind.name(),
                o.side.as_str()
            ));
        }
        Err(RegionFailure::NoValidRegion { reasons, blocking, euler, connected })
    }
}

#[derive(Clone, Debug, Serialize)]
#[serde(tag = "status", content = "detail", rename_all = "snake_case")]
pub enum TheoremReport {
    Verified(RegionB),
    Violations(Vec<Violation>),
}

impl TheoremReport {
    pub fn is_verified(&self) -> bool {
        matches!(self, TheoremReport::Verified(_))
    }

    pub fn violations(&self) -> &[Violation] {
        match self {
            TheoremReport::Verified(_) => &[],
            TheoremReport::Violations(v) => v,
        }
    }

    pub fn has(&self, kind: ViolationKind) -> bool {
        self.violations().iter().any(|v| v.kind == kind)
    }
}

/// All hypotheses: Wirtinger type, connected real components, a region B,
/// and facing singularities.
pub fn check_theorem(dg: &CurveDiagram) -> TheoremReport {
    let mut violations = validate_wirtinger_type(dg).violations;
    let table = match sweep_ranks(dg) {
        Ok(t) => t,
        Err(_) => return TheoremReport::Violations(violations),
    };
    violations.extend(component_violations(dg, &table));
    let fc = build_faces(dg, &table);
    let region = region_from_faces(dg, &fc);
    if let Err(RegionFailure::NoValidRegion { reasons, blocking, .. }) = &region {
        violations.push(violation(ViolationKind::Region, reasons.join("; "), blocking.clone()));
    }
    violations.extend(check_facing(dg).violations);
    match (region, violations.is_empty()) {
        (Ok(b), true) => TheoremReport::Verified(b),
        _ => TheoremReport::Violations(violations),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus::{corpus_diagram, Expect, CORPUS};
    use crate::diagram::faces;

    #[test]
    fn corpus_euler_and_verdicts() {
        for e in CORPUS {
            let dg = e.diagram();
            let fc = faces(&dg).unwrap();
            assert_eq!(fc.euler_characteristic(), 2, "{}", e.name);
            let rep = check_theorem(&dg);
            assert_eq!(rep.is_verified(), e.expect == Expect::Verified, "{}: {:?}", e.name, rep.violations());
        }
    }

    #[test]
    fn named_violations() {
        let kinds = |n: &str| check_theorem(&corpus_diagram(n).unwrap());
        assert!(kinds("cuspidal_cubic").has(ViolationKind::Facing));
        assert!(kinds("cardioid").has(ViolationKind::Region));
        assert!(!kinds("cardioid").has(ViolationKind::Facing));
        assert!(kinds("concentric").has(ViolationKind::Region));
        assert!(!kinds("concentric").has(ViolationKind::Components));
        assert!(kinds("smooth_cubic").has(ViolationKind::Components));
        assert!(kinds("deltoid").has(ViolationKind::Region));
    }

    #[test]
    fn edge_counts() {
        use crate::diagram::derive_edges;
        let n = |name: &str| {
            let e = derive_edges(&corpus_diagram(name).unwrap()).unwrap();
            (e.extended.len(), e.n_classes)
        };
        assert_eq!(n("nodal_cubic"), (4, 3));
        assert_eq!(n("deltoid").1, 3);
        assert_eq!(n("parabola_lines").0, 9);
        assert_eq!(n("cardioid").1, 1);
        assert_eq!(n("concentric").1, 2);
    }
}
