use std::collections::BTreeMap;

use serde::Serialize;

use super::wirtinger::{assemble, edge_map};
use super::GenError;
use crate::braid::Braid;
use crate::diagram::{build_faces, fmt_rational, sweep_ranks, validate_wirtinger_type, CurveDiagram, EventKind, Side};
use crate::diagram::{DividerKind, FaceComplex, SweepTable};
use crate::presentation::Presentation;
use crate::word::Word;

/// A cusp or tangency whose bottom strand is conjugated before entering
/// its local relation.
#[derive(Clone, Debug, Serialize)]
pub struct Correction {
    pub event: usize,
    /// Events owning the obstruction points passed, from L outward.
    pub owners: Vec<usize>,
    pub conjugator: String,
}

pub struct ExtendedOutput {
    pub presentation: Presentation,
    pub edge_map: BTreeMap<usize, String>,
    pub corrections: Vec<Correction>,
}

/// Wirtinger relations with obstruction conjugators; equal to the plain
/// Wirtinger presentation when no corridor meets an obstruction point.
pub fn extended_wirtinger(dg: &CurveDiagram) -> Result<Presentation, GenError> {
    Ok(extended_details(dg)?.presentation)
}

/// Face of the region strictly between the near strands `i` and `i + 1`
/// of an event, on the side toward L.
fn inner_face(fc: &FaceComplex, table: &SweepTable, event: usize, i: usize) -> usize {
    let k = fc.complex.dividers.iter().position(|d| *d == DividerKind::Event(event)).expect("event divider");
    let b = &table.blocks[event];
    let slab = if b.side == Side::Left { k + 1 } else { k };
    fc.cell_face[fc.complex.cell(slab, b.pos + 1 + i)]
}

pub fn extended_details(dg: &CurveDiagram) -> Result<ExtendedOutput, GenError> {
    let report = validate_wirtinger_type(dg);
    if !report.passed() {
        return Err(GenError::Invalid(report.violations));
    }
    let table = sweep_ranks(dg)?;
    let fc = build_faces(dg, &table);
    let rank_from_l = |e: usize| dg.side_events(table.blocks[e].side).iter().position(|&x| x == e).expect("on its side");

    // Obstructions owned by events between the event and L.
    let mut owners: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
    for b in &table.blocks {
        for i in 0..b.near.len().saturating_sub(1) {
            let face = inner_face(&fc, &table, b.event, i);
            let mut passed: Vec<usize> = fc
                .face_obstructions(face)
                .iter()
                .map(|o| o.event)
                .filter(|&o| table.blocks[o].side == b.side && rank_from_l(o) < rank_from_l(b.event))
                .collect();
            if passed.is_empty() {
                continue;
            }
            if b.near.len() != 2 || matches!(dg.events[b.event].kind, EventKind::Crossing { .. }) {
                return Err(GenError::UnsupportedConfiguration {
                    event: b.event,
                    message: format!(
                        "obstruction of event {} lies between strands of a {} at x = {}",
                        passed[0],
                        dg.events[b.event].kind.name(),
                        fmt_rational(dg.events[b.event].x)
                    ),
                });
            }
            passed.sort_by_key(|&o| rank_from_l(o));
            owners.insert(b.event, passed);
        }
    }

    // Each owner contributes z = y₁^{±1}, y₁ = x₁^{σ₁^{-m/2}} on its own block.
    let conjugator = |class_gen: &dyn Fn(usize) -> Word, event: usize| -> Word {
        owners[&event].iter().fold(Word::identity(), |acc, &o| {
            let b = &table.blocks[o];
            let pair = if b.near.is_empty() { &b.far } else { &b.near };
            let (x1, x2) = (class_gen(pair[0]), class_gen(pair[1]));
            let kind = dg.events[o].kind;
            let shift = Braid::sigma_pow(2, 1, -((kind.m() / 2) as i64)).expect("two strands");
            let y1 = shift.act(&Word::gen(0)).expect("in range").substitute(|k| if k == 0 { x1.clone() } else { x2.clone() });
            let sign = if kind.branch_side() == Some(Side::Left) { 1 } else { -1 };
            acc.mul(&y1.pow(sign))
        })
    };

    let merge = |e: usize| !owners.contains_key(&e);
    let (_, class) = assemble(dg, &table, merge, |_, near| near);
    let class_gen = |e: usize| Word::gen(class[e]);
    let (presentation, _) = assemble(dg, &table, merge, |event, mut near| {
        if owners.contains_key(&event) {
            let z = conjugator(&class_gen, event);
            near[1] = match table.blocks[event].side {
                Side::Left => near[1].conj(&z.inverse()),
                Side::Right => near[1].conj(&z),
            };
        }
        near
    });
    let corrections = owners
        .iter()
        .map(|(&event, own)| Correction {
            event,
            owners: own.clone(),
            conjugator: conjugator(&class_gen, event).format_with(presentation.generators()),
        })
        .collect();
    let edge_map = edge_map(&presentation, &class);
    Ok(ExtendedOutput { presentation, edge_map, corrections })
}
