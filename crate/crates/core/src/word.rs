//! Freely reduced words in a finitely generated free group.
//!
//! Generators are addressed by a zero-based index; the textual form prints
//! generator `i` as `x{i+1}` unless a name table is supplied.

use std::fmt;

use serde::{Deserialize, Serialize};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Letter {
    pub gen: usize,
    pub inv: bool,
}

impl Letter {
    pub fn new(gen: usize, inv: bool) -> Self {
        Letter { gen, inv }
    }

    pub fn inverse(self) -> Self {
        Letter { gen: self.gen, inv: !self.inv }
    }

    pub fn exponent(self) -> i64 {
        if self.inv {
            -1
        } else {
            1
        }
    }

    fn cancels(self, other: Letter) -> bool {
        self.gen == other.gen && self.inv != other.inv
    }
}

/// A freely reduced word. Every constructor reduces, so structural equality
/// is equality in the free group.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Word(Vec<Letter>);

/// Free reduction of an arbitrary letter sequence.
pub fn free_reduce<I: IntoIterator<Item = Letter>>(letters: I) -> Word {
    let mut out: Vec<Letter> = Vec::new();
    for l in letters {
        match out.last() {
            Some(&last) if last.cancels(l) => {
                out.pop();
            }
            _ => out.push(l),
        }
    }
    Word(out)
}

impl Word {
    pub fn identity() -> Self {
        Word(Vec::new())
    }

    pub fn gen(i: usize) -> Self {
        Word(vec![Letter::new(i, false)])
    }

    pub fn gen_inv(i: usize) -> Self {
        Word(vec![Letter::new(i, true)])
    }

    /// Builds `g^e` for a single generator.
    pub fn gen_pow(i: usize, e: i64) -> Self {
        let l = Letter::new(i, e < 0);
        Word(vec![l; e.unsigned_abs() as usize])
    }

    pub fn from_letters<I: IntoIterator<Item = Letter>>(letters: I) -> Self {
        free_reduce(letters)
    }

    /// Parses a compact exponent list such as `[(0, 1), (1, -2)]`.
    pub fn from_powers(powers: &[(usize, i64)]) -> Self {
        free_reduce(powers.iter().flat_map(|&(g, e)| Word::gen_pow(g, e).0))
    }

    pub fn letters(&self) -> &[Letter] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn is_identity(&self) -> bool {
        self.0.is_empty()
    }

    pub fn mul(&self, other: &Word) -> Word {
        free_reduce(self.0.iter().chain(other.0.iter()).copied())
    }

    pub fn inverse(&self) -> Word {
        Word(self.0.iter().rev().map(|l| l.inverse()).collect())
    }

    pub fn pow(&self, e: i64) -> Word {
        let base = if e < 0 { self.inverse() } else { self.clone() };
        let mut out = Word::identity();
        for _ in 0..e.unsigned_abs() {
            out = out.mul(&base);
        }
        out
    }

    /// Right conjugation `by⁻¹ · self · by`, written `self^by`.
    pub fn conj(&self, by: &Word) -> Word {
        by.inverse().mul(self).mul(by)
    }

    /// `[a, b] = a·b·a⁻¹·b⁻¹`.
    pub fn commutator(a: &Word, b: &Word) -> Word {
        a.mul(b).mul(&a.inverse()).mul(&b.inverse())
    }

    /// Alternating product `a·b·a·…` with `len` factors.
    pub fn alternating(a: &Word, b: &Word, len: usize) -> Word {
        let mut out = Word::identity();
        for i in 0..len {
            out = out.mul(if i % 2 == 0 { a } else { b });
        }
        out
    }

    /// Relator for `lhs = rhs`.
    pub fn relation(lhs: &Word, rhs: &Word) -> Word {
        lhs.mul(&rhs.inverse())
    }

    /// Applies the endomorphism sending generator `i` to `images(i)`.
    pub fn substitute<F: Fn(usize) -> Word>(&self, images: F) -> Word {
        let mut out: Vec<Letter> = Vec::with_capacity(self.0.len());
        for l in &self.0 {
            let img = images(l.gen);
            let iter: Box<dyn Iterator<Item = Letter>> = if l.inv {
                Box::new(img.0.into_iter().rev().map(Letter::inverse))
            } else {
                Box::new(img.0.into_iter())
            };
            for x in iter {
                match out.last() {
                    Some(&last) if last.cancels(x) => {
                        out.pop();
                    }
                    _ => out.push(x),
                }
            }
        }
        Word(out)
    }

    /// Renames generators through `map`; `None` images drop the letter.
    pub fn rename<F: Fn(usize) -> Option<usize>>(&self, map: F) -> Word {
        free_reduce(
            self.0
                .iter()
                .filter_map(|l| map(l.gen).map(|g| Letter::new(g, l.inv))),
        )
    }

    pub fn max_gen(&self) -> Option<usize> {
        self.0.iter().map(|l| l.gen).max()
    }

    pub fn contains_gen(&self, g: usize) -> bool {
        self.0.iter().any(|l| l.gen == g)
    }

    pub fn exponent_sum(&self, g: usize) -> i64 {
        self.0.iter().filter(|l| l.gen == g).map(|l| l.exponent()).sum()
    }

    pub fn exponent_sums(&self, rank: usize) -> Vec<i64> {
        let mut v = vec![0; rank];
        for l in &self.0 {
            if l.gen < rank {
                v[l.gen] += l.exponent();
            }
        }
        v
    }

    pub fn occurrences(&self, g: usize) -> usize {
        self.0.iter().filter(|l| l.gen == g).count()
    }

    /// Cyclic reduction: strips matching inverse letters from both ends.
    pub fn cyclic_reduce(&self) -> Word {
        let mut lo = 0;
        let mut hi = self.0.len();
        while hi - lo >= 2 && self.0[lo].cancels(self.0[hi - 1]) {
            lo += 1;
            hi -= 1;
        }
        Word(self.0[lo..hi].to_vec())
    }

    /// Rotation `letters[k..] ++ letters[..k]`; only meaningful on cyclically
    /// reduced words, where it stays reduced.
    pub fn rotate(&self, k: usize) -> Word {
        let n = self.0.len();
        if n == 0 {
            return Word::identity();
        }
        let k = k % n;
        free_reduce(self.0[k..].iter().chain(self.0[..k].iter()).copied())
    }

    /// Lexicographically least representative among all rotations of the
    /// cyclic reduction and of its inverse.
    pub fn cyclic_normal_form(&self) -> Word {
        let base = self.cyclic_reduce();
        let inv = base.inverse();
        let n = base.len();
        let mut best = base.clone();
        for w in [&base, &inv] {
            for k in 0..n.max(1) {
                let r = w.rotate(k);
                if r < best {
                    best = r;
                }
            }
        }
        best
    }

    pub fn format_with(&self, names: &[String]) -> String {
        if self.0.is_empty() {
            return "1".to_string();
        }
        let mut parts = Vec::new();
        let mut i = 0;
        while i < self.0.len() {
            let l = self.0[i];
            let mut run = 1;
            while i + run < self.0.len() && self.0[i + run] == l {
                run += 1;
            }
            let name = names
                .get(l.gen)
                .cloned()
                .unwrap_or_else(|| format!("x{}", l.gen + 1));
            let e = if l.inv { -(run as i64) } else { run as i64 };
            if e == 1 {
                parts.push(name);
            } else {
                parts.push(format!("{name}^{e}"));
            }
            i += run;
        }
        parts.join("*")
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.format_with(&[]))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn a() -> Letter {
        Letter::new(0, false)
    }
    fn b() -> Letter {
        Letter::new(1, false)
    }

    #[test]
    fn cancellation() {
        assert!(free_reduce([a(), a().inverse()]).is_identity());
        let w = free_reduce([a(), b(), b().inverse(), a()]);
        assert_eq!(w, Word::gen_pow(0, 2));
    }

    #[test]
    fn word_times_inverse() {
        let w = Word::from_powers(&[(0, 2), (1, -1), (2, 3), (0, -1)]);
        assert!(w.mul(&w.inverse()).is_identity());
    }

    #[test]
    fn idempotent_reduction() {
        let w = free_reduce([a(), b(), b().inverse(), b(), a().inverse()]);
        assert_eq!(free_reduce(w.letters().to_vec()), w);
    }

    #[test]
    fn cyclic_forms() {
        let w = Word::from_powers(&[(1, 1), (0, 1), (1, -1)]);
        assert_eq!(w.cyclic_reduce(), Word::gen(0));
        let r = Word::from_powers(&[(0, 1), (1, 1)]);
        let s = Word::from_powers(&[(1, 1), (0, 1)]);
        assert_eq!(r.cyclic_normal_form(), s.cyclic_normal_form());
        assert_eq!(r.cyclic_normal_form(), r.inverse().cyclic_normal_form());
    }

    #[test]
    fn display_uses_powers() {
        let w = Word::from_powers(&[(0, 2), (1, -1)]);
        assert_eq!(w.to_string(), "x1^2*x2^-1");
        assert_eq!(Word::identity().to_string(), "1");
    }

    #[test]
    fn substitution_is_homomorphic() {
        let w = Word::from_powers(&[(0, 1), (1, -1)]);
        let img = w.substitute(|g| if g == 0 { Word::from_powers(&[(1, 1), (0, 1)]) } else { Word::gen(1) });
        assert_eq!(img, Word::from_powers(&[(1, 1), (0, 1), (1, -1)]));
    }
}
