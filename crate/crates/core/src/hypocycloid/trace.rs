use std::f64::consts::{PI, TAU};

use num_rational::Rational64;
use serde::Serialize;

use super::curve::{bisect, critical_parameters, hypo_point, real_double_points, HypoParams};
use super::HypoError;
use crate::diagram::{check_theorem, sweep_ranks, CurveDiagram, Event, EventKind, Side};

/// A real strand of the folded picture `w = y²` together with the line `w = 0`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Strand {
    /// Real parameters between two consecutive critical values in `[0, π]`.
    Piece(usize),
    Line,
    /// `t = i s`, leaving the on-axis cusp.
    ImagA,
    /// `t = π + i s`, leaving the vertical tangency.
    ImagB,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum QuotientEvent {
    Cusp,
    Node,
    Tacnode,
    Transversal,
    Contact3,
}

#[derive(Clone, Debug, Serialize)]
pub struct TracedEvent {
    pub x: f64,
    pub w: f64,
    pub kind: QuotientEvent,
    pub strands: Vec<Strand>,
    /// Measured contact order with the line, for events on it.
    pub contact: Option<f64>,
}

#[derive(Clone, Debug, Serialize)]
pub struct TracedCurve {
    pub k: u32,
    /// Parameter intervals of the pieces.
    pub pieces: Vec<(f64, f64)>,
    pub events: Vec<TracedEvent>,
    pub line_x: f64,
}

pub struct Tracer {
    p: HypoParams,
    pieces: Vec<(f64, f64)>,
    x_tangency: f64,
}

impl Tracer {
    pub fn new(k: u32) -> Result<Self, HypoError> {
        let p = HypoParams::adjacent(k)?;
        let n = p.n() as f64;
        let mut cuts = vec![0.0];
        cuts.extend((1..k).map(|j| TAU * j as f64 / n));
        cuts.push(PI);
        let pieces = cuts.windows(2).map(|w| (w[0], w[1])).collect();
        Ok(Tracer { p, pieces, x_tangency: hypo_point(&p, PI).0 })
    }

    fn kf(&self) -> (f64, f64, f64) {
        (self.p.k as f64, self.p.l as f64, self.p.n() as f64)
    }

    fn sign(&self) -> f64 {
        if self.p.k % 2 == 0 {
            1.0
        } else {
            -1.0
        }
    }

    fn imag_a(&self, s: f64) -> (f64, f64) {
        let (k, l, n) = self.kf();
        let y = (k * (l * s).sinh() - l * (k * s).sinh()) / n;
        ((k * (l * s).cosh() + l * (k * s).cosh()) / n, -y * y)
    }

    fn imag_b(&self, s: f64) -> (f64, f64) {
        let (k, l, n) = self.kf();
        let y = (k * (l * s).sinh() + l * (k * s).sinh()) / n;
        (self.sign() * (l * (k * s).cosh() - k * (l * s).cosh()) / n, -y * y)
    }

    fn fold(&self, t: f64) -> (f64, f64) {
        let (x, y) = hypo_point(&self.p, t);
        (x, y * y)
    }

    fn solve_arc(&self, arc: impl Fn(f64) -> (f64, f64), x: f64, dir: f64) -> f64 {
        let mut hi = 1.0;
        while dir * (arc(hi).0 - x) < 0.0 {
            hi *= 2.0;
        }
        let s = bisect(|s| arc(s).0 - x, 0.0, hi);
        arc(s).1
    }

    /// Strands over `x`, top (largest `w`) first.
    pub fn fiber(&self, x: f64) -> Vec<(Strand, f64)> {
        let mut out = vec![(Strand::Line, 0.0)];
        for (i, &(a, b)) in self.pieces.iter().enumerate() {
            let (xa, xb) = (self.fold(a).0, self.fold(b).0);
            if xa.min(xb) < x && x < xa.max(xb) {
                let t = bisect(|t| self.fold(t).0 - x, a, b);
                out.push((Strand::Piece(i), self.fold(t).1));
            }
        }
        if x > 1.0 {
            out.push((Strand::ImagA, self.solve_arc(|s| self.imag_a(s), x, 1.0)));
        }
        if self.sign() * (x - self.x_tangency) > 0.0 {
            out.push((Strand::ImagB, self.solve_arc(|s| self.imag_b(s), x, self.sign())));
        }
        out.sort_by(|a, b| b.1.total_cmp(&a.1));
        out
    }

    fn piece_of(&self, t: f64) -> Result<usize, HypoError> {
        self.pieces
            .iter()
            .position(|&(a, b)| a < t && t < b)
            .ok_or_else(|| HypoError::Trace(format!("parameter {t} is not inside a piece")))
    }

    /// Vanishing order of `w` over that of `x − x₀` at parameter `t0`.
    fn contact(&self, t0: f64) -> f64 {
        let (x0, _) = self.fold(t0);
        let order = |f: &dyn Fn(f64) -> f64| {
            let h = 1e-2;
            (f(t0 + h).abs() / f(t0 + h / 2.0).abs()).ln() / 2f64.ln()
        };
        order(&|t| self.fold(t).1) / order(&|t| self.fold(t).0 - x0)
    }

    pub fn trace(&self) -> Result<TracedCurve, HypoError> {
        let k = self.p.k;
        let n = self.p.n() as f64;
        let crit = critical_parameters(&self.p)?;
        let mut events = Vec::new();
        for j in 1..k as usize {
            let t = TAU * j as f64 / n;
            let (x, w) = self.fold(t);
            events.push(TracedEvent {
                x,
                w,
                kind: QuotientEvent::Cusp,
                strands: vec![Strand::Piece(j - 1), Strand::Piece(j)],
                contact: None,
            });
        }
        // Double points off the axis fold in conjugate pairs onto one point.
        let fold_t = |t: f64| if t <= PI { t } else { TAU - t };
        let mut nodes: Vec<(f64, f64)> = Vec::new();
        for (t1, t2) in real_double_points(&self.p) {
            if hypo_point(&self.p, t1).1.abs() < 1e-8 {
                continue;
            }
            let (a, b) = (fold_t(t1).min(fold_t(t2)), fold_t(t1).max(fold_t(t2)));
            if !nodes.iter().any(|&(c, _)| (self.fold(c).0 - self.fold(a).0).abs() < 1e-9) {
                nodes.push((a, b));
            }
        }
        for (a, b) in nodes {
            let (x, w) = self.fold(a);
            events.push(TracedEvent {
                x,
                w,
                kind: QuotientEvent::Node,
                strands: vec![Strand::Piece(self.piece_of(a)?), Strand::Piece(self.piece_of(b)?)],
                contact: None,
            });
        }
        for &(t, _) in &crit.axis_nodes {
            events.push(TracedEvent {
                x: self.fold(t).0,
                w: 0.0,
                kind: QuotientEvent::Tacnode,
                strands: vec![Strand::Piece(self.piece_of(t)?), Strand::Line],
                contact: Some(self.contact(t)),
            });
        }
        events.push(TracedEvent {
            x: self.x_tangency,
            w: 0.0,
            kind: QuotientEvent::Transversal,
            strands: vec![Strand::Piece(self.pieces.len() - 1), Strand::Line, Strand::ImagB],
            contact: Some(self.contact(PI)),
        });
        events.push(TracedEvent {
            x: 1.0,
            w: 0.0,
            kind: QuotientEvent::Contact3,
            strands: vec![Strand::Piece(0), Strand::Line, Strand::ImagA],
            contact: Some(self.contact(0.0)),
        });
        events.sort_by(|a, b| a.x.total_cmp(&b.x));

        for e in &events {
            if let Some(c) = e.contact {
                let expected = match e.kind {
                    QuotientEvent::Tacnode => 2.0,
                    QuotientEvent::Transversal => 1.0,
                    _ => 3.0,
                };
                if (c - expected).abs() > 0.05 {
                    return Err(HypoError::Trace(format!(
                        "{:?} at x = {} has measured contact order {c:.3}, expected {expected}",
                        e.kind, e.x
                    )));
                }
            }
        }
        let census = |kind: QuotientEvent| events.iter().filter(|e| e.kind == kind).count();
        let kk = k as usize;
        for (kind, expected) in [
            (QuotientEvent::Cusp, kk - 1),
            (QuotientEvent::Node, (2 * kk - 2) * (kk - 2) / 2),
            (QuotientEvent::Tacnode, kk - 2),
            (QuotientEvent::Transversal, 1),
            (QuotientEvent::Contact3, 1),
        ] {
            if census(kind) != expected {
                return Err(HypoError::Census { what: format!("{kind:?}"), found: census(kind), expected });
            }
        }
        for w in events.windows(2) {
            if w[1].x - w[0].x < 1e-6 {
                return Err(HypoError::Separation { left: w[0].x, right: w[1].x });
            }
        }
        let i = events.iter().position(|e| e.kind == QuotientEvent::Transversal).expect("one transversal crossing");
        let line_x = match events.get(i + 1) {
            Some(next) => 0.5 * (events[i].x + next.x),
            None => events[i].x + 0.5,
        };
        Ok(TracedCurve { k, pieces: self.pieces.clone(), events, line_x })
    }
}

fn snap(x: f64) -> Rational64 {
    const GRID: i64 = 10_000_000;
    Rational64::new((x * GRID as f64).round() as i64, GRID)
}

/// Diagram of the folded curve plus the line, with L just right of the
/// transversal crossing.
pub fn quotient_diagram(k: u32) -> Result<CurveDiagram, HypoError> {
    let tracer = Tracer::new(k)?;
    let traced = tracer.trace()?;
    let line_x = traced.line_x;
    let at_l = tracer.fiber(line_x);
    if at_l.len() != k as usize + 1 {
        return Err(HypoError::StrandCount { found: at_l.len(), expected: k as usize + 1 });
    }
    let components: Vec<String> =
        at_l.iter().map(|(s, _)| if *s == Strand::Line { "line" } else { "curve" }.to_string()).collect();

    let xs: Vec<f64> = traced.events.iter().map(|e| e.x).collect();
    let sample = |i: usize, toward_l: bool| -> f64 {
        let x = xs[i];
        let left = x < line_x;
        let other = match (left, toward_l) {
            (true, true) => xs.get(i + 1).copied().unwrap_or(line_x).min(line_x),
            (false, true) => if i > 0 { xs[i - 1].max(line_x) } else { line_x },
            (true, false) => if i > 0 { xs[i - 1] } else { x - 1.0 },
            (false, false) => xs.get(i + 1).copied().unwrap_or(x + 1.0),
        };
        0.5 * (x + other)
    };
    let mut events = Vec::new();
    for (i, e) in traced.events.iter().enumerate() {
        let side = if e.x < line_x { Side::Left } else { Side::Right };
        let near: Vec<Strand> = tracer.fiber(sample(i, true)).into_iter().map(|(s, _)| s).collect();
        let far: Vec<Strand> = tracer.fiber(sample(i, false)).into_iter().map(|(s, _)| s).collect();
        let ranks = |fiber: &[Strand]| -> Vec<usize> {
            fiber.iter().enumerate().filter(|(_, s)| e.strands.contains(s)).map(|(r, _)| r).collect()
        };
        let (near_ranks, far_ranks) = (ranks(&near), ranks(&far));
        let (kind, block) = match e.kind {
            QuotientEvent::Cusp => {
                let facing = near_ranks.len() == 2;
                let toward = if side == Side::Left { Side::Right } else { Side::Left };
                let branch_side = if facing { toward } else { toward.opposite() };
                (EventKind::Cusp { m: 2, branch_side }, if facing { near_ranks } else { far_ranks })
            }
            QuotientEvent::Node | QuotientEvent::Transversal => (EventKind::Crossing { m: 1 }, near_ranks),
            QuotientEvent::Tacnode => (EventKind::Crossing { m: 3 }, near_ranks),
            QuotientEvent::Contact3 => (EventKind::Crossing { m: 5 }, near_ranks),
        };
        if block.len() != 2 || block[1] != block[0] + 1 {
            return Err(HypoError::Trace(format!("{:?} at x = {} has block ranks {block:?}", e.kind, e.x)));
        }
        events.push(Event { x: snap(e.x), kind, top: block[0] + 1 });
    }
    // the curve has degree k in w = y², plus the axis w = 0
    let dg = CurveDiagram::new(k as usize + 1, snap(line_x), components, events)?;

    let table = sweep_ranks(&dg)?;
    for side in [Side::Left, Side::Right] {
        let ids = dg.side_events(side);
        for (j, &eid) in ids.iter().enumerate() {
            let found = tracer.fiber(sample(eid, false)).len();
            let expected = table.side(side)[j + 1].len();
            if found != expected {
                return Err(HypoError::StrandCount { found, expected });
            }
        }
    }
    let report = check_theorem(&dg);
    if !report.is_verified() {
        return Err(HypoError::NotVerified(report.violations().to_vec()));
    }
    Ok(dg)
}

/// Polylines of the folded real picture for plotting: pieces, then the two
/// imaginary-parameter arcs out to `x_span`.
pub fn folded_arcs(k: u32, samples: usize, x_span: f64) -> Result<Vec<Vec<(f64, f64)>>, HypoError> {
    let tracer = Tracer::new(k)?;
    let mut arcs: Vec<Vec<(f64, f64)>> = tracer
        .pieces
        .iter()
        .map(|&(a, b)| (0..=samples).map(|i| tracer.fold(a + (b - a) * i as f64 / samples as f64)).collect())
        .collect();
    let walk = |arc: &dyn Fn(f64) -> (f64, f64)| {
        let mut pts = Vec::new();
        let mut s = 0.0;
        while pts.len() <= samples * 4 {
            let p = arc(s);
            pts.push(p);
            if p.0.abs() > x_span || p.1 < -x_span {
                break;
            }
            s += 0.01;
        }
        pts
    };
    arcs.push(walk(&|s| tracer.imag_a(s)));
    arcs.push(walk(&|s| tracer.imag_b(s)));
    Ok(arcs)
}
