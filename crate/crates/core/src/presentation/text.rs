use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use super::Presentation;
use crate::word::Word;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
#[error("parse error at byte {pos}: {message}")]
pub struct ParseError {
    pub pos: usize,
    pub message: String,
}

impl ParseError {
    pub fn new(pos: usize, message: impl Into<String>) -> Self {
        ParseError { pos, message: message.into() }
    }
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
    names: &'a [String],
}

impl<'a> Parser<'a> {
    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn expect(&mut self, c: u8) -> Result<(), ParseError> {
        if self.peek() == Some(c) {
            self.pos += 1;
            Ok(())
        } else {
            Err(ParseError::new(self.pos, format!("expected `{}`", c as char)))
        }
    }

    fn relation(&mut self) -> Result<Word, ParseError> {
        let lhs = self.expr()?;
        if self.peek() == Some(b'=') {
            self.pos += 1;
            let rhs = self.expr()?;
            return Ok(Word::relation(&lhs, &rhs));
        }
        Ok(lhs)
    }

    fn expr(&mut self) -> Result<Word, ParseError> {
        let mut w = self.term()?;
        while self.peek() == Some(b'*') {
            self.pos += 1;
            w = w.mul(&self.term()?);
        }
        Ok(w)
    }

    fn term(&mut self) -> Result<Word, ParseError> {
        let base = self.atom()?;
        if self.peek() == Some(b'^') {
            self.pos += 1;
            let e = self.integer()?;
            return Ok(base.pow(e));
        }
        Ok(base)
    }

    fn integer(&mut self) -> Result<i64, ParseError> {
        self.skip_ws();
        let start = self.pos;
        if self.pos < self.src.len() && (self.src[self.pos] == b'-' || self.src[self.pos] == b'+') {
            self.pos += 1;
        }
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        std::str::from_utf8(&self.src[start..self.pos])
            .ok()
            .and_then(|s| s.parse::<i64>().ok())
            .ok_or_else(|| ParseError::new(start, "expected integer exponent"))
    }

    fn atom(&mut self) -> Result<Word, ParseError> {
        match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let w = self.expr()?;
                self.expect(b')')?;
                Ok(w)
            }
            Some(b'[') => {
                self.pos += 1;
                let a = self.expr()?;
                self.expect(b',')?;
                let b = self.expr()?;
                self.expect(b']')?;
                Ok(Word::commutator(&a, &b))
            }
            Some(b'1') => {
                self.pos += 1;
                Ok(Word::identity())
            }
            Some(c) if c.is_ascii_alphabetic() || c == b'_' => {
                let start = self.pos;
                while self.pos < self.src.len()
                    && (self.src[self.pos].is_ascii_alphanumeric() || self.src[self.pos] == b'_')
                {
                    self.pos += 1;
                }
                let name = std::str::from_utf8(&self.src[start..self.pos]).expect("ascii");
                self.names
                    .iter()
                    .position(|n| n == name)
                    .map(Word::gen)
                    .ok_or_else(|| ParseError::new(start, format!("unknown generator `{name}`")))
            }
            _ => Err(ParseError::new(self.pos, "expected generator, `1`, `(` or `[`")),
        }
    }

    fn at_end(&mut self) -> bool {
        self.peek().is_none()
    }
}

/// Parses `x1*x2^-1*(x1*x2)^2`, `[a,b]` commutators and `lhs = rhs`
/// relations over the given generator names.
pub fn parse_word(text: &str, names: &[String]) -> Result<Word, ParseError> {
    let mut p = Parser { src: text.as_bytes(), pos: 0, names };
    let w = p.relation()?;
    if !p.at_end() {
        return Err(ParseError::new(p.pos, "trailing input"));
    }
    Ok(w)
}

/// Structured form `{schema, generators, relators}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PresentationJson {
    pub schema: u32,
    pub generators: Vec<String>,
    pub relators: Vec<String>,
}

fn is_identifier(s: &str) -> bool {
    let mut chars = s.chars();
    matches!(chars.next(), Some(c) if c.is_ascii_alphabetic() || c == '_')
        && chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

/// Accepts either the plain `<a,b | r1, r2>` form or the JSON form.
pub fn parse_presentation(text: &str) -> Result<Presentation, ParseError> {
    let trimmed = text.trim();
    if trimmed.starts_with('{') {
        let j: PresentationJson =
            serde_json::from_str(trimmed).map_err(|e| ParseError::new(0, e.to_string()))?;
        return Presentation::from_json(&j);
    }
    let inner = trimmed
        .strip_prefix('<')
        .and_then(|s| s.strip_suffix('>'))
        .ok_or_else(|| ParseError::new(0, "presentation must be enclosed in `<` `>`"))?;
    let (gens, rels) = match inner.find('|') {
        Some(i) => (&inner[..i], &inner[i + 1..]),
        None => (inner, ""),
    };
    let names: Vec<String> = gens
        .split(',')
        .map(|s| s.trim().to_string())
        .filter(|s| !s.is_empty())
        .collect();
    for n in &names {
        if !is_identifier(n) {
            return Err(ParseError::new(1, format!("invalid generator name `{n}`")));
        }
    }
    let mut p = Presentation::new(names.clone()).map_err(|e| ParseError::new(1, e.to_string()))?;
    let offset = text.find('|').map(|i| i + 1).unwrap_or(0);
    for (chunk, start) in split_top_level(rels) {
        if chunk.trim().is_empty() {
            continue;
        }
        let w = parse_word(chunk, &names).map_err(|e| ParseError::new(offset + start + e.pos, e.message))?;
        p.push_relator(w, "").map_err(|e| ParseError::new(offset + start, e.to_string()))?;
    }
    Ok(p)
}

/// Splits on commas that are not inside brackets or parentheses.
fn split_top_level(s: &str) -> Vec<(&str, usize)> {
    let mut out = Vec::new();
    let mut depth = 0i32;
    let mut start = 0;
    for (i, c) in s.char_indices() {
        match c {
            '(' | '[' => depth += 1,
            ')' | ']' => depth -= 1,
            ',' if depth == 0 => {
                out.push((&s[start..i], start));
                start = i + 1;
            }
            _ => {}
        }
    }
    out.push((&s[start..], start));
    out
}

impl Presentation {
    pub fn to_json(&self) -> PresentationJson {
        PresentationJson {
            schema: 1,
            generators: self.generators().to_vec(),
            relators: self.relator_strings(),
        }
    }

    pub fn from_json(j: &PresentationJson) -> Result<Presentation, ParseError> {
        let mut p = Presentation::new(j.generators.clone()).map_err(|e| ParseError::new(0, e.to_string()))?;
        for r in &j.relators {
            let w = parse_word(r, p.generators())?;
            p.push_relator(w, "").map_err(|e| ParseError::new(0, e.to_string()))?;
        }
        Ok(p)
    }

    /// GAP script building the group as a quotient of a free group.
    pub fn to_gap(&self) -> String {
        let gens: Vec<String> = self.generators().iter().map(|g| format!("\"{g}\"")).collect();
        let mut s = format!("F := FreeGroup({});;\n", gens.join(", "));
        for (i, g) in self.generators().iter().enumerate() {
            s.push_str(&format!("{g} := F.{};;\n", i + 1));
        }
        let rels: Vec<String> = self
            .relators()
            .iter()
            .filter(|r| !r.is_identity())
            .map(|r| r.format_with(self.generators()))
            .collect();
        s.push_str(&format!("G := F / [ {} ];;\n", rels.join(", ")));
        s
    }
}

impl fmt::Display for Presentation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "<{} | {}>", self.generators().join(","), self.relator_strings().join(", "))
    }
}
