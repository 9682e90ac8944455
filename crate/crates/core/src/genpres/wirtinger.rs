use std::collections::BTreeMap;

use serde_json::{json, Value};

use super::{edge_meridian_words, meridian_names, GenError};
use crate::diagram::{check_theorem, fmt_rational, sweep_ranks, validate_wirtinger_type, CurveDiagram, EventKind};
use crate::diagram::{EventBlock, SweepTable, UnionFind};
use crate::presentation::Presentation;
use crate::word::Word;

pub struct WirtingerOutput {
    pub presentation: Presentation,
    /// Edge id to generator name.
    pub edge_map: BTreeMap<usize, String>,
    /// Edge id to its meridian in the free group at L; only for diagrams
    /// meeting the hypotheses.
    pub meridian_words: Option<BTreeMap<usize, Word>>,
    /// Strands at L.
    pub d: usize,
}

impl WirtingerOutput {
    pub fn to_json(&self, used_iib: bool) -> Value {
        let names = meridian_names(self.d);
        json!({
            "schema": 1,
            "generators": self.presentation.generators(),
            "relators": self.presentation.relator_strings(),
            "edge_map": self.edge_map,
            "meridian_words": self.meridian_words.as_ref().map(|m| {
                m.iter().map(|(e, w)| (e.to_string(), w.format_with(&names))).collect::<BTreeMap<_, _>>()
            }),
            "transcript_flags": { "used_IIb": used_iib },
        })
    }
}

/// Local relators of one event given the generator words on its block,
/// top to bottom. Tangencies give their identification.
pub(crate) fn event_relators(kind: EventKind, near: &[Word], far: &[Word]) -> Vec<Word> {
    let mut out = Vec::new();
    match kind {
        EventKind::Ordinary { m } => {
            let xbar = |k: usize| (0..k).rev().fold(Word::identity(), |acc, j| acc.mul(&near[j]));
            for x in &near[..m - 1] {
                out.push(Word::commutator(&xbar(m), x));
            }
            for j in 1..=m {
                let y = near[j - 1].conj(&xbar(j - 1));
                out.push(Word::relation(&far[m - j], &y));
            }
        }
        EventKind::Crossing { m } => {
            out.push(Word::relation(
                &Word::alternating(&near[0], &near[1], m + 1),
                &Word::alternating(&near[1], &near[0], m + 1),
            ));
            let c = near[1].mul(&near[0]).pow(((m + 1) / 4) as i64);
            let swap = m % 4 == 1;
            for (i, x) in near.iter().enumerate() {
                let p = if swap { 1 - i } else { i };
                out.push(Word::relation(&far[p], &x.conj(&c)));
            }
        }
        EventKind::Cusp { m, .. } => {
            let pair = if near.is_empty() { far } else { near };
            out.push(Word::relation(
                &Word::alternating(&pair[0], &pair[1], m + 1),
                &Word::alternating(&pair[1], &pair[0], m + 1),
            ));
        }
        EventKind::Tangency { .. } => {
            let pair = if near.is_empty() { far } else { near };
            out.push(Word::relation(&pair[0], &pair[1]));
        }
    }
    out
}

pub(crate) fn event_note(dg: &CurveDiagram, b: &EventBlock) -> String {
    let e = &dg.events[b.event];
    format!("{} m={} at x={}", e.kind.name(), e.kind.m(), fmt_rational(e.x))
}

/// Generators indexed by edge class; `merge_tangency(e)` decides which
/// tangencies are folded into the generator set.
pub(crate) fn assemble(
    dg: &CurveDiagram,
    table: &SweepTable,
    merge_tangency: impl Fn(usize) -> bool,
    near_override: impl Fn(usize, Vec<Word>) -> Vec<Word>,
) -> (Presentation, Vec<usize>) {
    let n = table.edges.len();
    let mut uf = UnionFind::new(n);
    for b in &table.blocks {
        if matches!(dg.events[b.event].kind, EventKind::Tangency { .. }) && merge_tangency(b.event) {
            let pair = if b.near.is_empty() { &b.far } else { &b.near };
            uf.union(pair[0], pair[1]);
        }
    }
    let mut class = vec![0; n];
    let mut roots: Vec<usize> = Vec::new();
    for (e, c) in class.iter_mut().enumerate() {
        let r = uf.find(e);
        *c = roots.iter().position(|&x| x == r).unwrap_or_else(|| {
            roots.push(r);
            roots.len() - 1
        });
    }
    let names: Vec<String> = (1..=roots.len()).map(|i| format!("x{i}")).collect();
    let mut p = Presentation::new(names.clone()).expect("distinct names");
    let gen = |e: usize| Word::gen(class[e]);
    for b in &table.blocks {
        let kind = dg.events[b.event].kind;
        if matches!(kind, EventKind::Tangency { .. }) && merge_tangency(b.event) {
            continue;
        }
        let near = near_override(b.event, b.near.iter().map(|&e| gen(e)).collect());
        let far: Vec<Word> = b.far.iter().map(|&e| gen(e)).collect();
        let note = event_note(dg, b);
        for r in event_relators(kind, &near, &far) {
            p.push_relator(r, note.clone()).expect("generators in range");
        }
    }
    (p, class)
}

pub(crate) fn edge_map(p: &Presentation, class: &[usize]) -> BTreeMap<usize, String> {
    class.iter().enumerate().map(|(e, &c)| (e, p.generators()[c].clone())).collect()
}

/// Generators on the edges of the diagram with tangency edges identified,
/// and the local relations at each event, read with the side toward L as
/// the incoming side.
pub fn wirtinger_presentation(dg: &CurveDiagram) -> Result<WirtingerOutput, GenError> {
    let report = validate_wirtinger_type(dg);
    if !report.passed() {
        return Err(GenError::Invalid(report.violations));
    }
    let table = sweep_ranks(dg)?;
    let (presentation, class) = assemble(dg, &table, |_| true, |_, near| near);
    let edge_map = edge_map(&presentation, &class);
    let meridian_words = if check_theorem(dg).is_verified() { edge_meridian_words(dg).ok() } else { None };
    Ok(WirtingerOutput { presentation, edge_map, meridian_words, d: dg.d() })
}
