use serde::{Deserialize, Serialize};
use thiserror::Error;

use super::Presentation;
use crate::word::Word;

// Substitutions that would push the total relator length past this are skipped.
const MAX_TOTAL_LENGTH: usize = 20_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum DeleteReason {
    Trivial,
    Duplicate,
}

/// One recorded move. Indices refer to the presentation as it stood
/// just before the move.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "move")]
pub enum TietzeMove {
    /// Type I: drop a relator that is trivial or a copy (up to rotation and inversion) of another.
    #[serde(rename = "I")]
    DeleteRelator { index: usize, reason: DeleteReason },
    /// Type IIa: `generator` occurs once in relator `relator`, which is solved for it and removed.
    #[serde(rename = "IIa")]
    EliminateGenerator { generator: String, relator: usize, definition: String },
    /// Type IIb: drop a relator that is a product of two others (up to conjugacy).
    #[serde(rename = "IIb")]
    DeleteConsequence { index: usize },
}

impl TietzeMove {
    pub fn tag(&self) -> &'static str {
        match self {
            TietzeMove::DeleteRelator { .. } => "I",
            TietzeMove::EliminateGenerator { .. } => "IIa",
            TietzeMove::DeleteConsequence { .. } => "IIb",
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct TietzeTranscript {
    pub moves: Vec<TietzeMove>,
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ReplayError {
    #[error("move {step}: relator index {index} out of range")]
    BadIndex { step: usize, index: usize },
    #[error("move {step}: {message}")]
    Invalid { step: usize, message: String },
}

impl TietzeTranscript {
    pub fn used_iib(&self) -> bool {
        self.moves.iter().any(|m| matches!(m, TietzeMove::DeleteConsequence { .. }))
    }

    pub fn only_i_iia(&self) -> bool {
        self.moves.iter().all(|m| matches!(m.tag(), "I" | "IIa"))
    }

    pub fn count(&self, tag: &str) -> usize {
        self.moves.iter().filter(|m| m.tag() == tag).count()
    }

    /// Re-applies the moves to `p`, checking each precondition again.
    pub fn replay(&self, p: &Presentation) -> Result<Presentation, ReplayError> {
        let mut st = State::from(p);
        for (step, m) in self.moves.iter().enumerate() {
            match m {
                TietzeMove::DeleteRelator { index, reason } => {
                    let r = st.rels.get(*index).ok_or(ReplayError::BadIndex { step, index: *index })?;
                    let ok = match reason {
                        DeleteReason::Trivial => r.is_identity(),
                        DeleteReason::Duplicate => {
                            let nf = r.cyclic_normal_form();
                            st.rels.iter().enumerate().any(|(j, s)| j != *index && s.cyclic_normal_form() == nf)
                        }
                    };
                    if !ok {
                        return Err(ReplayError::Invalid { step, message: "relator is not redundant".into() });
                    }
                    st.rels.remove(*index);
                }
                TietzeMove::EliminateGenerator { generator, relator, .. } => {
                    let g = st
                        .gens
                        .iter()
                        .position(|n| n == generator)
                        .ok_or_else(|| ReplayError::Invalid { step, message: format!("no generator {generator}") })?;
                    if *relator >= st.rels.len() {
                        return Err(ReplayError::BadIndex { step, index: *relator });
                    }
                    if st.rels[*relator].occurrences(g) != 1 {
                        return Err(ReplayError::Invalid { step, message: "generator does not occur exactly once".into() });
                    }
                    st.eliminate(g, *relator);
                }
                TietzeMove::DeleteConsequence { index } => {
                    if *index >= st.rels.len() || !st.is_product_of_two(*index) {
                        return Err(ReplayError::Invalid { step, message: "relator is not a product of two others".into() });
                    }
                    st.rels.remove(*index);
                }
            }
        }
        Ok(st.into_presentation())
    }
}

struct State {
    gens: Vec<String>,
    rels: Vec<Word>,
}

impl From<&Presentation> for State {
    fn from(p: &Presentation) -> Self {
        State {
            gens: p.generators().to_vec(),
            rels: p.relators().iter().map(|r| r.cyclic_reduce()).collect(),
        }
    }
}

impl State {
    fn into_presentation(self) -> Presentation {
        Presentation::from_parts(self.gens, self.rels, Vec::new())
    }

    /// Solves relator `ri` for generator `g` (which occurs once there).
    fn definition(&self, g: usize, ri: usize) -> Word {
        let r = &self.rels[ri];
        let pos = r.letters().iter().position(|l| l.gen == g).expect("occurs once");
        let rot = r.rotate(pos);
        // rot = g^e · u  ⇒  g = u^{-e}
        let u = Word::from_letters(rot.letters()[1..].to_vec());
        if rot.letters()[0].inv {
            u
        } else {
            u.inverse()
        }
    }

    fn substituted(&self, g: usize, def: &Word, skip: usize) -> Vec<Word> {
        self.rels
            .iter()
            .enumerate()
            .filter(|&(i, _)| i != skip)
            .map(|(_, r)| {
                r.substitute(|j| if j == g { def.clone() } else { Word::gen(j) })
                    .rename(|j| Some(if j > g { j - 1 } else { j }))
                    .cyclic_reduce()
            })
            .collect()
    }

    fn eliminate(&mut self, g: usize, ri: usize) {
        let def = self.definition(g, ri);
        self.rels = self.substituted(g, &def, ri);
        self.gens.remove(g);
    }

    fn is_product_of_two(&self, i: usize) -> bool {
        let target = self.rels[i].cyclic_normal_form();
        let n = self.rels.len();
        for a in (0..n).filter(|&a| a != i) {
            for b in (0..n).filter(|&b| b != i && b != a) {
                for (x, y) in [
                    (self.rels[a].clone(), self.rels[b].clone()),
                    (self.rels[a].clone(), self.rels[b].inverse()),
                ] {
                    if x.mul(&y).cyclic_normal_form() == target {
                        return true;
                    }
                }
            }
        }
        false
    }
}

/// Simplifies with type I and IIa moves; IIb deletions only when `allow_iib`.
pub fn tietze_simplify(p: &Presentation, allow_iib: bool) -> (Presentation, TietzeTranscript) {
    let mut st = State::from(p);
    let mut tr = TietzeTranscript::default();
    loop {
        if let Some(i) = st.rels.iter().position(|r| r.is_identity()) {
            st.rels.remove(i);
            tr.moves.push(TietzeMove::DeleteRelator { index: i, reason: DeleteReason::Trivial });
            continue;
        }
        if let Some(i) = first_duplicate(&st.rels) {
            st.rels.remove(i);
            tr.moves.push(TietzeMove::DeleteRelator { index: i, reason: DeleteReason::Duplicate });
            continue;
        }
        if let Some((g, ri)) = pick_elimination(&st) {
            let def = st.definition(g, ri);
            tr.moves.push(TietzeMove::EliminateGenerator {
                generator: st.gens[g].clone(),
                relator: ri,
                definition: def.format_with(&st.gens),
            });
            st.eliminate(g, ri);
            continue;
        }
        if allow_iib {
            if let Some(i) = (0..st.rels.len()).find(|&i| st.is_product_of_two(i)) {
                st.rels.remove(i);
                tr.moves.push(TietzeMove::DeleteConsequence { index: i });
                continue;
            }
        }
        break;
    }
    (st.into_presentation(), tr)
}

fn first_duplicate(rels: &[Word]) -> Option<usize> {
    let nfs: Vec<Word> = rels.iter().map(|r| r.cyclic_normal_form()).collect();
    (1..nfs.len()).find(|&i| nfs[..i].contains(&nfs[i]))
}

/// Shortest relator first, then lowest generator index.
fn pick_elimination(st: &State) -> Option<(usize, usize)> {
    let total: usize = st.rels.iter().map(|r| r.len()).sum();
    let mut cands: Vec<(usize, usize, usize)> = Vec::new();
    for (ri, r) in st.rels.iter().enumerate() {
        for g in 0..st.gens.len() {
            if r.occurrences(g) == 1 {
                cands.push((r.len(), g, ri));
            }
        }
    }
    cands.sort();
    cands.into_iter().find_map(|(len, g, ri)| {
        let growth: usize = st
            .rels
            .iter()
            .map(|r| r.occurrences(g) * len.saturating_sub(2))
            .sum();
        (total + growth <= MAX_TOTAL_LENGTH).then_some((g, ri))
    })
}
