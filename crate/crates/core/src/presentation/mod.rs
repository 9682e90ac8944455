//! Finitely presented groups and the invariants used to compare them.

mod abelian;
mod artin;
mod finite;
mod homs;
mod profile;
mod text;
mod tietze;

pub use abelian::{abelianization, smith_diagonal, AbelianInvariants};
pub use artin::{artin_from_graph, ngon_artin, ngon_semidirect, ngon_semidirect_full, GraphError};
pub use finite::{cyclic_group, symmetric_group, FiniteGroupTable, GroupTableError};
pub use homs::{count_homs, count_homs_with_bound, default_hom_bound, HomError, DEFAULT_HOM_BOUND};
pub use profile::{profile, profile_with_bound, profiles_equal, InvariantProfile, TargetSet};
pub use text::{parse_presentation, parse_word, ParseError, PresentationJson};
pub use tietze::{tietze_simplify, DeleteReason, ReplayError, TietzeMove, TietzeTranscript};

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::word::Word;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PresentationError {
    #[error("relator uses generator index {index} but only {rank} generators are declared")]
    UnknownGenerator { index: usize, rank: usize },
    #[error("unknown generator name `{0}`")]
    UnknownName(String),
    #[error("duplicate generator name `{0}`")]
    DuplicateName(String),
}

/// Named generators plus cyclically reduced relators.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Presentation {
    generators: Vec<String>,
    relators: Vec<Word>,
    notes: Vec<String>,
}

impl Presentation {
    pub fn new<S: Into<String>, I: IntoIterator<Item = S>>(generators: I) -> Result<Self, PresentationError> {
        let generators: Vec<String> = generators.into_iter().map(Into::into).collect();
        for (i, g) in generators.iter().enumerate() {
            if generators[..i].contains(g) {
                return Err(PresentationError::DuplicateName(g.clone()));
            }
        }
        Ok(Presentation { generators, relators: Vec::new(), notes: Vec::new() })
    }

    /// Free group on `x1..x{rank}`.
    pub fn free(rank: usize) -> Self {
        Presentation::new((1..=rank).map(|i| format!("x{i}"))).expect("distinct names")
    }

    pub fn with_prefix(prefix: &str, rank: usize) -> Self {
        Presentation::new((1..=rank).map(|i| format!("{prefix}{i}"))).expect("distinct names")
    }

    pub fn generators(&self) -> &[String] {
        &self.generators
    }

    pub fn relators(&self) -> &[Word] {
        &self.relators
    }

    pub fn notes(&self) -> &[String] {
        &self.notes
    }

    pub fn rank(&self) -> usize {
        self.generators.len()
    }

    pub fn gen_index(&self, name: &str) -> Option<usize> {
        self.generators.iter().position(|g| g == name)
    }

    pub fn gen_word(&self, name: &str) -> Result<Word, PresentationError> {
        self.gen_index(name)
            .map(Word::gen)
            .ok_or_else(|| PresentationError::UnknownName(name.to_string()))
    }

    pub fn push_relator(&mut self, w: Word, note: impl Into<String>) -> Result<(), PresentationError> {
        if let Some(g) = w.max_gen() {
            if g >= self.rank() {
                return Err(PresentationError::UnknownGenerator { index: g, rank: self.rank() });
            }
        }
        self.relators.push(w.cyclic_reduce());
        self.notes.push(note.into());
        Ok(())
    }

    pub fn with_relators<I: IntoIterator<Item = Word>>(mut self, ws: I) -> Result<Self, PresentationError> {
        for w in ws {
            self.push_relator(w, "")?;
        }
        Ok(self)
    }

    /// Returns a copy with the given relators appended.
    pub fn add_relators(&self, ws: &[Word]) -> Result<Presentation, PresentationError> {
        let mut p = self.clone();
        for w in ws {
            p.push_relator(w.clone(), "added")?;
        }
        Ok(p)
    }

    /// Parses and appends relators written over this presentation's names.
    pub fn add_relators_text(&self, texts: &[&str]) -> Result<Presentation, ParseError> {
        let mut ws = Vec::new();
        for t in texts {
            ws.push(parse_word(t, &self.generators)?);
        }
        self.add_relators(&ws).map_err(|e| ParseError::new(0, e.to_string()))
    }

    pub fn rename_generators(&self, names: Vec<String>) -> Result<Presentation, PresentationError> {
        let mut p = Presentation::new(names)?;
        if p.rank() != self.rank() {
            return Err(PresentationError::UnknownGenerator { index: self.rank(), rank: p.rank() });
        }
        p.relators = self.relators.clone();
        p.notes = self.notes.clone();
        Ok(p)
    }

    /// Sorted multiset of cyclic normal forms, for structural comparison.
    pub fn relator_multiset(&self) -> Vec<Word> {
        let mut v: Vec<Word> = self
            .relators
            .iter()
            .map(|r| r.cyclic_normal_form())
            .filter(|r| !r.is_identity())
            .collect();
        v.sort();
        v
    }

    /// Whether some bijection of generators carries one relator multiset to
    /// the other. Tries every permutation, so only for small ranks.
    pub fn same_relators_up_to_renaming(&self, other: &Presentation) -> bool {
        if self.rank() != other.rank() || self.relator_multiset().len() != other.relator_multiset().len() {
            return false;
        }
        let target = other.relator_multiset();
        let mut perm: Vec<usize> = (0..self.rank()).collect();
        loop {
            let mut mine: Vec<Word> = self
                .relator_multiset()
                .iter()
                .map(|r| r.rename(|g| Some(perm[g])).cyclic_normal_form())
                .collect();
            mine.sort();
            if mine == target {
                return true;
            }
            if !next_permutation(&mut perm) {
                return false;
            }
        }
    }

    pub fn relator_strings(&self) -> Vec<String> {
        self.relators.iter().map(|r| r.format_with(&self.generators)).collect()
    }

    pub(crate) fn from_parts(generators: Vec<String>, relators: Vec<Word>, notes: Vec<String>) -> Self {
        let notes = if notes.len() == relators.len() { notes } else { vec![String::new(); relators.len()] };
        Presentation {
            generators,
            relators: relators.into_iter().map(|r| r.cyclic_reduce()).collect(),
            notes,
        }
    }
}

fn next_permutation(v: &mut [usize]) -> bool {
    let Some(i) = (1..v.len()).rev().find(|&i| v[i - 1] < v[i]) else {
        return false;
    };
    let j = (i..v.len()).rev().find(|&j| v[j] > v[i - 1]).expect("pivot has a successor");
    v.swap(i - 1, j);
    v[i..].reverse();
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn renaming() {
        let a = parse_presentation("<a,b | a*b*a*b^-1*a^-1*b^-1, a^2>").unwrap();
        let b = parse_presentation("<x,y | y^2, y*x*y*x^-1*y^-1*x^-1>").unwrap();
        assert!(a.same_relators_up_to_renaming(&b));
        let c = parse_presentation("<x,y | x^2, y*x*y*x^-1*y^-1*x^-1>").unwrap();
        assert!(a.same_relators_up_to_renaming(&c));
        let d = parse_presentation("<x,y | x^3, y*x*y*x^-1*y^-1*x^-1>").unwrap();
        assert!(!a.same_relators_up_to_renaming(&d));
    }

    #[test]
    fn rejects_unknown_generators() {
        let mut p = Presentation::free(2);
        assert!(p.push_relator(Word::gen(2), "").is_err());
        assert!(p.add_relators_text(&["x3"]).is_err());
        assert!(Presentation::new(["a", "a"]).is_err());
    }

    #[test]
    fn relators_are_cyclically_reduced() {
        let p = Presentation::free(2)
            .with_relators([Word::from_powers(&[(1, 1), (0, 1), (1, -1)])])
            .unwrap();
        assert_eq!(p.relators()[0], Word::gen(0));
    }
}
