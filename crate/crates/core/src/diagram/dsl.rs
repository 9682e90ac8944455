use std::fmt::Write as _;

use num_rational::Rational64;
use thiserror::Error;

use super::{fmt_rational, CurveDiagram, DiagramError, Event, EventKind, Side};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
#[error("line {line}, column {col}: {message}")]
pub struct DslError {
    pub line: usize,
    pub col: usize,
    pub message: String,
}

fn err(line: usize, col: usize, message: impl Into<String>) -> DslError {
    DslError { line, col, message: message.into() }
}

/// Whitespace-separated tokens with 1-based columns.
fn tokens(s: &str) -> Vec<(usize, &str)> {
    let mut out = Vec::new();
    let mut start = None;
    for (i, c) in s.char_indices() {
        match (c.is_whitespace(), start) {
            (true, Some(st)) => {
                out.push((st + 1, &s[st..i]));
                start = None;
            }
            (false, None) => start = Some(i),
            _ => {}
        }
    }
    if let Some(st) = start {
        out.push((st + 1, &s[st..]));
    }
    out
}

pub fn parse_rational(s: &str) -> Option<Rational64> {
    match s.split_once('/') {
        Some((p, q)) => {
            let (p, q) = (p.parse::<i64>().ok()?, q.parse::<i64>().ok()?);
            (q > 0).then(|| Rational64::new(p, q))
        }
        None => s.parse::<i64>().ok().map(Rational64::from_integer),
    }
}

struct Line<'a> {
    no: usize,
    toks: Vec<(usize, &'a str)>,
    end_col: usize,
}

impl<'a> Line<'a> {
    fn tok(&self, i: usize, what: &str) -> Result<(usize, &'a str), DslError> {
        self.toks.get(i).copied().ok_or_else(|| err(self.no, self.end_col, format!("expected {what}")))
    }

    fn keyword(&self, i: usize, kw: &str) -> Result<(), DslError> {
        let (c, t) = self.tok(i, &format!("`{kw}`"))?;
        if t == kw {
            Ok(())
        } else {
            Err(err(self.no, c, format!("expected `{kw}`, found `{t}`")))
        }
    }

    fn uint(&self, i: usize, what: &str) -> Result<usize, DslError> {
        let (c, t) = self.tok(i, what)?;
        t.parse().map_err(|_| err(self.no, c, format!("expected {what}, found `{t}`")))
    }

    fn rational(&self, i: usize) -> Result<Rational64, DslError> {
        let (c, t) = self.tok(i, "rational")?;
        parse_rational(t).ok_or_else(|| err(self.no, c, format!("expected rational `p/q`, found `{t}`")))
    }

    fn field<T>(&self, i: usize, key: &str, f: impl Fn(&str) -> Option<T>) -> Result<T, DslError> {
        let (c, t) = self.tok(i, &format!("{key}=..."))?;
        let v = t
            .strip_prefix(key)
            .and_then(|r| r.strip_prefix('='))
            .ok_or_else(|| err(self.no, c, format!("expected `{key}=`, found `{t}`")))?;
        f(v).ok_or_else(|| err(self.no, c + key.len() + 1, format!("bad value `{v}` for {key}")))
    }

    fn done(&self, n: usize) -> Result<(), DslError> {
        match self.toks.get(n) {
            Some(&(c, t)) => Err(err(self.no, c, format!("unexpected `{t}`"))),
            None => Ok(()),
        }
    }
}

fn side(s: &str) -> Option<Side> {
    match s {
        "left" => Some(Side::Left),
        "right" => Some(Side::Right),
        _ => None,
    }
}

/// Parses the line-oriented diagram language; `#` starts a comment.
pub fn parse_diagram(text: &str) -> Result<CurveDiagram, DslError> {
    let mut lines = text.lines().enumerate().filter_map(|(i, raw)| {
        let body = raw.split('#').next().unwrap_or("");
        let toks = tokens(body);
        (!toks.is_empty()).then(|| Line { no: i + 1, toks, end_col: body.trim_end().len() + 1 })
    });
    let last_line = text.lines().count().max(1);
    let mut next = |what: &str| lines.next().ok_or_else(|| err(last_line, 1, format!("unexpected end of input, expected {what}")));

    let l = next("`diagram`")?;
    l.keyword(0, "diagram")?;
    l.done(1)?;

    let l = next("`degree_y`")?;
    l.keyword(0, "degree_y")?;
    let degree_y = l.uint(1, "degree")?;
    l.done(2)?;

    let l = next("`line_L`")?;
    l.keyword(0, "line_L")?;
    l.keyword(1, "at")?;
    let line_x = l.rational(2)?;
    l.done(3)?;

    let mut strands: Vec<(usize, String, usize)> = Vec::new();
    let mut events = Vec::new();
    let mut event_lines = Vec::new();
    loop {
        let l = next("`end`")?;
        let (c0, head) = l.tok(0, "statement")?;
        match head {
            "end" => {
                l.done(1)?;
                if let Some(extra) = lines.next() {
                    return Err(err(extra.no, extra.toks[0].0, "content after `end`"));
                }
                break;
            }
            "strand" => {
                if !events.is_empty() {
                    return Err(err(l.no, c0, "strands must be declared before events"));
                }
                let rank = l.uint(1, "rank")?;
                l.keyword(2, "component")?;
                let (_, name) = l.tok(3, "component name")?;
                l.done(4)?;
                strands.push((rank, name.to_string(), l.no));
            }
            "event" => {
                l.keyword(1, "at")?;
                let x = l.rational(2)?;
                let (ck, kind) = l.tok(3, "event kind")?;
                let (kind, n) = match kind {
                    "ordinary" => (EventKind::Ordinary { m: l.field(4, "m", |v| v.parse().ok())? }, 5),
                    "crossing" => (EventKind::Crossing { m: l.field(4, "m", |v| v.parse().ok())? }, 5),
                    "cusp" => (
                        EventKind::Cusp { m: l.field(4, "m", |v| v.parse().ok())?, branch_side: l.field(5, "side", side)? },
                        6,
                    ),
                    "tangency" => (EventKind::Tangency { branch_side: l.field(4, "side", side)? }, 5),
                    other => return Err(err(l.no, ck, format!("unknown event kind `{other}`"))),
                };
                let top = l.field(n, "top", |v| v.parse::<usize>().ok().filter(|&t| t >= 1))?;
                l.done(n + 1)?;
                kind.check_parity().map_err(|m| err(l.no, ck, m))?;
                if x == line_x {
                    return Err(err(l.no, l.toks[2].0, "event lies on the base line"));
                }
                if let Some(&(prev_line, _)) = event_lines.iter().find(|&&(_, px)| px == x) {
                    return Err(err(l.no, l.toks[2].0, format!("x = {} already used on line {prev_line}", fmt_rational(x))));
                }
                event_lines.push((l.no, x));
                events.push(Event { x, kind, top });
            }
            other => return Err(err(l.no, c0, format!("unknown statement `{other}`"))),
        }
    }

    let d = strands.len();
    let mut components = vec![String::new(); d];
    for (rank, name, line) in &strands {
        if *rank == 0 || *rank > d || !components[rank - 1].is_empty() {
            return Err(err(*line, 8, DiagramError::BadStrands { d }.to_string()));
        }
        components[rank - 1] = name.clone();
    }
    CurveDiagram::new(degree_y, line_x, components, events).map_err(|e| err(1, 1, e.to_string()))
}

/// Canonical text; `parse_diagram(serialize_diagram(dg)) == dg`.
pub fn serialize_diagram(dg: &CurveDiagram) -> String {
    let mut s = String::from("diagram\n");
    let _ = writeln!(s, "degree_y {}", dg.degree_y);
    let _ = writeln!(s, "line_L at {}", fmt_rational(dg.line_x));
    for (i, c) in dg.components.iter().enumerate() {
        let _ = writeln!(s, "strand {} component {}", i + 1, c);
    }
    for e in &dg.events {
        let x = fmt_rational(e.x);
        let _ = match e.kind {
            EventKind::Ordinary { m } => writeln!(s, "event at {x} ordinary m={m} top={}", e.top),
            EventKind::Crossing { m } => writeln!(s, "event at {x} crossing m={m} top={}", e.top),
            EventKind::Cusp { m, branch_side } => {
                writeln!(s, "event at {x} cusp m={m} side={} top={}", branch_side.as_str(), e.top)
            }
            EventKind::Tangency { branch_side } => {
                writeln!(s, "event at {x} tangency side={} top={}", branch_side.as_str(), e.top)
            }
        };
    }
    s.push_str("end\n");
    s
}
