//! Braids in the half-twist generators and their right action on the free
//! group of the fiber.
//!
//! `σ_j` (index `j - 1` here) exchanges strands `j` and `j + 1`, and acts on
//! meridians by
//!
//! ```text
//! μ_i^{σ_j}   = μ_i                 (j ≠ i, i-1)
//!             = μ_{i+1}             (j = i)
//!             = μ_i μ_{i-1} μ_i⁻¹   (j = i-1)
//! μ_i^{σ_j⁻¹} = μ_i                 (j ≠ i, i-1)
//!             = μ_i⁻¹ μ_{i+1} μ_i   (j = i)
//!             = μ_{i-1}             (j = i-1)
//! ```
//!
//! The action is a right action: `w^{β₁β₂} = (w^{β₁})^{β₂}`.

use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::word::Word;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum BraidError {
    #[error("half-twist index {index} out of range for {strands} strands")]
    IndexOutOfRange { index: usize, strands: usize },
    #[error("word uses generator {gen} but the braid has {strands} strands")]
    RankTooLarge { gen: usize, strands: usize },
    #[error("strand counts differ: {0} vs {1}")]
    StrandMismatch(usize, usize),
    #[error("block [{offset}, {offset}+{size}) does not fit in {strands} strands")]
    BlockOutOfRange { offset: usize, size: usize, strands: usize },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct BraidLetter {
    /// Zero-based: `index = j - 1` for `σ_j`.
    pub index: usize,
    pub inv: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Braid {
    strands: usize,
    letters: Vec<BraidLetter>,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    pub fn identity(n: usize) -> Self {
        Permutation { images: (0..n).collect() }
    }

    /// Zero-based images; `None` unless the input is a bijection.
    pub fn from_images(images: Vec<usize>) -> Option<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &i in &images {
            if i >= n || seen[i] {
                return None;
            }
            seen[i] = true;
        }
        Some(Permutation { images })
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    pub fn apply(&self, i: usize) -> usize {
        self.images[i]
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &j)| i == j)
    }

    /// `self` followed by `other`.
    pub fn then(&self, other: &Permutation) -> Permutation {
        Permutation {
            images: self.images.iter().map(|&i| other.images[i]).collect(),
        }
    }
}

impl Braid {
    pub fn identity(strands: usize) -> Self {
        Braid { strands, letters: Vec::new() }
    }

    pub fn new(strands: usize, letters: Vec<BraidLetter>) -> Result<Self, BraidError> {
        for l in &letters {
            if l.index + 1 >= strands {
                return Err(BraidError::IndexOutOfRange { index: l.index + 1, strands });
            }
        }
        Ok(Braid { strands, letters })
    }

    /// `σ_j^{±1}` with one-based `j`.
    pub fn sigma(strands: usize, j: usize, inv: bool) -> Result<Self, BraidError> {
        if j == 0 {
            return Err(BraidError::IndexOutOfRange { index: j, strands });
        }
        Braid::new(strands, vec![BraidLetter { index: j - 1, inv }])
    }

    /// `σ_j^e` with one-based `j`.
    pub fn sigma_pow(strands: usize, j: usize, e: i64) -> Result<Self, BraidError> {
        if j == 0 || j >= strands {
            return Err(BraidError::IndexOutOfRange { index: j, strands });
        }
        let l = BraidLetter { index: j - 1, inv: e < 0 };
        Ok(Braid { strands, letters: vec![l; e.unsigned_abs() as usize] })
    }

    pub fn strands(&self) -> usize {
        self.strands
    }

    pub fn letters(&self) -> &[BraidLetter] {
        &self.letters
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn compose(&self, other: &Braid) -> Result<Braid, BraidError> {
        if self.strands != other.strands {
            return Err(BraidError::StrandMismatch(self.strands, other.strands));
        }
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&other.letters);
        Ok(Braid { strands: self.strands, letters })
    }

    pub fn inverse(&self) -> Braid {
        Braid {
            strands: self.strands,
            letters: self
                .letters
                .iter()
                .rev()
                .map(|l| BraidLetter { index: l.index, inv: !l.inv })
                .collect(),
        }
    }

    pub fn pow(&self, e: i64) -> Braid {
        let base = if e < 0 { self.inverse() } else { self.clone() };
        let mut letters = Vec::with_capacity(base.letters.len() * e.unsigned_abs() as usize);
        for _ in 0..e.unsigned_abs() {
            letters.extend_from_slice(&base.letters);
        }
        Braid { strands: self.strands, letters }
    }

    /// Re-indexes the braid onto strands `offset..offset + self.strands` of a
    /// braid on `strands` strands.
    pub fn embed(&self, offset: usize, strands: usize) -> Result<Braid, BraidError> {
        if offset + self.strands > strands {
            return Err(BraidError::BlockOutOfRange { offset, size: self.strands, strands });
        }
        Ok(Braid {
            strands,
            letters: self
                .letters
                .iter()
                .map(|l| BraidLetter { index: l.index + offset, inv: l.inv })
                .collect(),
        })
    }

    /// Underlying permutation: strand starting at position `i` ends at
    /// `perm.apply(i)`.
    pub fn permutation(&self) -> Permutation {
        let mut pos: Vec<usize> = (0..self.strands).collect();
        for l in &self.letters {
            for p in pos.iter_mut() {
                if *p == l.index {
                    *p = l.index + 1;
                } else if *p == l.index + 1 {
                    *p = l.index;
                }
            }
        }
        Permutation { images: pos }
    }

    /// Right action on a word in `μ_1, …, μ_strands`.
    pub fn act(&self, w: &Word) -> Result<Word, BraidError> {
        if let Some(g) = w.max_gen() {
            if g >= self.strands {
                return Err(BraidError::RankTooLarge { gen: g + 1, strands: self.strands });
            }
        }
        let mut cur = w.clone();
        for l in &self.letters {
            cur = cur.substitute(|i| letter_image(*l, i));
        }
        Ok(cur)
    }

    /// Images of all generators `μ_1..μ_strands`.
    pub fn act_on_generators(&self) -> Vec<Word> {
        (0..self.strands)
            .map(|i| self.act(&Word::gen(i)).expect("generator within rank"))
            .collect()
    }
}

fn letter_image(l: BraidLetter, i: usize) -> Word {
    let j = l.index;
    if !l.inv {
        if i == j {
            Word::gen(i + 1)
        } else if i == j + 1 {
            Word::gen(i).mul(&Word::gen(i - 1)).mul(&Word::gen_inv(i))
        } else {
            Word::gen(i)
        }
    } else if i == j {
        Word::gen_inv(i).mul(&Word::gen(i + 1)).mul(&Word::gen(i))
    } else if i == j + 1 {
        Word::gen(i - 1)
    } else {
        Word::gen(i)
    }
}

/// Fixed positive word `(σ₁)(σ₂σ₁)…(σ_{m−1}…σ₁)` for the half twist `Δ_m`.
pub fn half_twist(m: usize) -> Braid {
    let strands = m.max(1);
    let mut letters = Vec::new();
    for top in 1..m {
        for j in (1..=top).rev() {
            letters.push(BraidLetter { index: j - 1, inv: false });
        }
    }
    Braid { strands, letters }
}

/// Local singularity type at a point of the projection's discriminant.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum LocalKind {
    /// `A_m`: two branches (or one, for even `m`) with local equation
    /// `y² = x^{m+1}`; `A_0` is a simple vertical tangency.
    A(usize),
    /// Ordinary point of multiplicity `m`.
    Ordinary(usize),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LocalBraid {
    pub full: Braid,
    /// Square root of `full` when it exists as a braid word.
    pub half: Option<Braid>,
    pub block: usize,
}

pub fn local_braid(kind: LocalKind) -> LocalBraid {
    match kind {
        LocalKind::A(m) => {
            let full = Braid::sigma_pow(2, 1, m as i64 + 1).expect("two strands");
            let half = if m % 2 == 1 {
                Some(Braid::sigma_pow(2, 1, (m as i64 + 1) / 2).expect("two strands"))
            } else {
                None
            };
            LocalBraid { full, half, block: 2 }
        }
        LocalKind::Ordinary(m) => {
            let half = half_twist(m);
            let full = half.pow(2);
            LocalBraid { full, half: Some(half), block: m }
        }
    }
}

impl fmt::Display for Braid {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.letters.is_empty() {
            return f.write_str("1");
        }
        let parts: Vec<String> = self
            .letters
            .iter()
            .map(|l| {
                if l.inv {
                    format!("s{}^-1", l.index + 1)
                } else {
                    format!("s{}", l.index + 1)
                }
            })
            .collect();
        f.write_str(&parts.join("*"))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn mu(i: usize) -> Word {
        Word::gen(i - 1)
    }

    #[test]
    fn action_rules() {
        let s1 = Braid::sigma(2, 1, false).unwrap();
        assert_eq!(s1.act(&mu(1)).unwrap(), mu(2));
        assert_eq!(s1.act(&mu(2)).unwrap(), mu(2).mul(&mu(1)).mul(&mu(2).inverse()));
        let id = s1.compose(&s1.inverse()).unwrap();
        assert_eq!(id.act(&mu(1)).unwrap(), mu(1));
        let p = mu(2).mul(&mu(1));
        assert_eq!(s1.act(&p).unwrap(), p);
    }

    #[test]
    fn out_of_range() {
        assert!(Braid::sigma(3, 3, false).is_err());
        let s1 = Braid::sigma(2, 1, false).unwrap();
        assert!(s1.act(&mu(3)).is_err());
        let s = Braid::sigma(3, 1, false).unwrap();
        assert!(s.compose(&Braid::identity(4)).is_err());
    }

    #[test]
    fn permutations() {
        let s1 = Braid::sigma(3, 1, false).unwrap();
        assert_eq!(s1.permutation().images(), &[1, 0, 2]);
        assert!(s1.pow(2).permutation().is_identity());
    }

    #[test]
    fn half_twists() {
        assert!(half_twist(1).is_empty());
        assert_eq!(half_twist(2).to_string(), "s1");
        assert_eq!(half_twist(3).to_string(), "s1*s2*s1");
        // Δ₃² acts as conjugation by μ₃μ₂μ₁.
        let full = half_twist(3).pow(2);
        let c = mu(3).mul(&mu(2)).mul(&mu(1));
        for i in 1..=3 {
            let expected = c.mul(&mu(i)).mul(&c.inverse());
            assert_eq!(full.act(&mu(i)).unwrap(), expected, "μ{i}");
        }
    }

    #[test]
    fn local_braids() {
        let a1 = local_braid(LocalKind::A(1));
        assert_eq!(a1.full, Braid::sigma_pow(2, 1, 2).unwrap());
        assert_eq!(a1.half, Some(Braid::sigma(2, 1, false).unwrap()));
        let a2 = local_braid(LocalKind::A(2));
        assert_eq!(a2.full, Braid::sigma_pow(2, 1, 3).unwrap());
        assert!(a2.half.is_none());
        let o2 = local_braid(LocalKind::Ordinary(2));
        assert_eq!(o2.full, a1.full);
    }
}
