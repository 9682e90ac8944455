use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use super::{meridian_names, GenError};
use crate::braid::{local_braid, Braid, LocalKind};
use crate::diagram::{check_theorem, sweep_ranks, CurveDiagram, EventKind, Side, SweepTable};
use crate::presentation::Presentation;
use crate::word::Word;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "lowercase")]
pub enum LocalDatum {
    /// Local model at strands `pos..pos + block` (zero-based).
    Local { kind: LocalKind, pos: usize },
    /// A full monodromy braid with no known factorization.
    Opaque { tau: Braid },
}

/// One point of the discriminant: `τ = η⁻¹·δ·η` with `δ` the local braid.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MonodromyDatum {
    pub eta: Braid,
    pub local: LocalDatum,
}

impl MonodromyDatum {
    pub fn local(eta: Braid, kind: LocalKind, pos: usize) -> Self {
        MonodromyDatum { eta, local: LocalDatum::Local { kind, pos } }
    }

    pub fn strands(&self) -> usize {
        match &self.local {
            LocalDatum::Local { .. } => self.eta.strands(),
            LocalDatum::Opaque { tau } => tau.strands(),
        }
    }
}

pub(crate) fn local_kind(kind: EventKind) -> LocalKind {
    match kind {
        EventKind::Ordinary { m } => LocalKind::Ordinary(m),
        EventKind::Crossing { m } | EventKind::Cusp { m, .. } => LocalKind::A(m),
        EventKind::Tangency { .. } => LocalKind::A(0),
    }
}

struct Sweep {
    words: BTreeMap<usize, Word>,
    /// Per event, in the diagram's event order.
    data: Vec<Option<MonodromyDatum>>,
}

/// Walks outward from L on each side. Every strand slot of the fiber keeps
/// its meridian word; strands ending at a cusp or tangency stay behind as a
/// pair of complex slots.
fn sweep(dg: &CurveDiagram, table: &SweepTable) -> Result<Sweep, GenError> {
    let d = table.d;
    let mut words: BTreeMap<usize, Word> = (0..d).map(|i| (i, Word::gen(i))).collect();
    let mut data = vec![None; dg.events.len()];
    for side in [Side::Left, Side::Right] {
        let mut slots: Vec<Option<usize>> = (0..d).map(Some).collect();
        let mut slot_words: Vec<Word> = (0..d).map(Word::gen).collect();
        let mut eta = Braid::identity(d);
        for eid in dg.side_events(side) {
            let b = &table.blocks[eid];
            let kind = dg.events[eid].kind;
            let unsupported = |message: &str| GenError::UnsupportedConfiguration { event: eid, message: message.into() };
            if b.near.is_empty() {
                return Err(unsupported("strands born away from L have no meridian in the fiber at L"));
            }
            let found: Vec<usize> = b
                .near
                .iter()
                .map(|e| slots.iter().position(|s| *s == Some(*e)).expect("live edge has a slot"))
                .collect();
            let pos = found[0];
            if found.iter().enumerate().any(|(i, &s)| s != pos + i) {
                return Err(unsupported("block straddles strands that ended closer to L"));
            }
            data[eid] = Some(MonodromyDatum::local(eta.clone(), local_kind(kind), pos));
            if b.far.is_empty() {
                for s in &mut slots[pos..pos + b.near.len()] {
                    *s = None;
                }
                continue;
            }
            let half = local_braid(local_kind(kind)).half.expect("crossings and ordinary points have half twists");
            let step = half.embed(pos, d)?.inverse();
            let images = step.act_on_generators();
            let fresh: Vec<Word> =
                (pos..pos + b.far.len()).map(|i| images[i].substitute(|k| slot_words[k].clone())).collect();
            for (j, &e) in b.far.iter().enumerate() {
                slots[pos + j] = Some(e);
                slot_words[pos + j] = fresh[j].clone();
                words.insert(e, fresh[j].clone());
            }
            eta = step.compose(&eta)?;
        }
    }
    Ok(Sweep { words, data })
}

fn verified_sweep(dg: &CurveDiagram) -> Result<Sweep, GenError> {
    let report = check_theorem(dg);
    if !report.is_verified() {
        return Err(GenError::NotVerified(report.violations().to_vec()));
    }
    let table = sweep_ranks(dg)?;
    sweep(dg, &table)
}

/// Meridian of every edge as a word in `μ_1..μ_d`, the meridians at L.
pub fn edge_meridian_words(dg: &CurveDiagram) -> Result<BTreeMap<usize, Word>, GenError> {
    Ok(verified_sweep(dg)?.words)
}

/// Braid monodromy data in event order; `η` of an event collects the
/// inverse half twists of the events between it and L on its side.
pub fn diagram_braid_monodromy(dg: &CurveDiagram) -> Result<Vec<MonodromyDatum>, GenError> {
    Ok(verified_sweep(dg)?.data.into_iter().map(|d| d.expect("every event swept")).collect())
}

/// `⟨μ_1..μ_d | μ_i^{δη} = μ_i^{η}⟩` over the block of each datum, the
/// last index of each block omitted. Opaque data give `μ_i^τ = μ_i` for all `i`.
pub fn zvk_presentation(d: usize, monodromy: &[MonodromyDatum]) -> Result<Presentation, GenError> {
    let mut p = Presentation::new(meridian_names(d))?;
    for (index, datum) in monodromy.iter().enumerate() {
        if datum.strands() != d {
            return Err(GenError::StrandMismatch { index, found: datum.strands(), d });
        }
        match &datum.local {
            LocalDatum::Local { kind, pos } => {
                let lb = local_braid(*kind);
                let delta_eta = lb.full.embed(*pos, d)?.compose(&datum.eta)?;
                for i in *pos..pos + lb.block - 1 {
                    let lhs = delta_eta.act(&Word::gen(i))?;
                    let rhs = datum.eta.act(&Word::gen(i))?;
                    p.push_relator(Word::relation(&lhs, &rhs), format!("datum {index}"))?;
                }
            }
            LocalDatum::Opaque { tau } => {
                for i in 0..d {
                    let w = Word::gen(i);
                    p.push_relator(Word::relation(&tau.act(&w)?, &w), format!("datum {index}"))?;
                }
            }
        }
    }
    Ok(p)
}

/// Adds `μ_d ⋯ μ_1 = 1`.
pub fn projective_closure(p: &Presentation, d: usize) -> Result<Presentation, GenError> {
    let mut w = Word::identity();
    for name in meridian_names(d).iter().rev() {
        let g = p.gen_index(name).ok_or_else(|| GenError::MissingGenerator(name.clone()))?;
        w = w.mul(&Word::gen(g));
    }
    let mut q = p.clone();
    q.push_relator(w, "closure")?;
    Ok(q)
}
