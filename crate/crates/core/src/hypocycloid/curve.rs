use std::f64::consts::{PI, TAU};

use serde::Serialize;

use super::HypoError;

/// Rolling parameters with `0 < ℓ < k`, `gcd(k, ℓ) = 1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct HypoParams {
    pub k: u32,
    pub l: u32,
}

impl HypoParams {
    pub fn new(k: u32, l: u32) -> Result<Self, HypoError> {
        if l == 0 || l >= k {
            return Err(HypoError::BadParams(format!("need 0 < l < k, got k = {k}, l = {l}")));
        }
        if num_integer::gcd(k, l) != 1 {
            return Err(HypoError::BadParams(format!("k = {k} and l = {l} are not coprime")));
        }
        Ok(HypoParams { k, l })
    }

    /// The family `ℓ = k − 1`.
    pub fn adjacent(k: u32) -> Result<Self, HypoError> {
        if k < 2 {
            return Err(HypoError::BadParams(format!("need k >= 2, got {k}")));
        }
        HypoParams::new(k, k - 1)
    }

    pub fn n(&self) -> u32 {
        self.k + self.l
    }
}

pub fn hypo_point(p: &HypoParams, t: f64) -> (f64, f64) {
    let (k, l, n) = (p.k as f64, p.l as f64, p.n() as f64);
    ((k * (l * t).cos() + l * (k * t).cos()) / n, (k * (l * t).sin() - l * (k * t).sin()) / n)
}

/// Velocity of [`hypo_point`].
pub fn hypo_velocity(p: &HypoParams, t: f64) -> (f64, f64) {
    let (k, l, n) = (p.k as f64, p.l as f64, p.n() as f64);
    (-k * l * ((l * t).sin() + (k * t).sin()) / n, k * l * ((l * t).cos() - (k * t).cos()) / n)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HypoStats {
    pub degree: u32,
    pub cusps: u32,
    pub nodes: u32,
    pub real_nodes: u32,
    pub tangencies: u32,
    /// Ramification points of the vertical projection, with multiplicity.
    pub ramification: u32,
    pub ramification_at_infinity: u32,
    pub identity_holds: bool,
}

pub fn hypo_stats(p: &HypoParams) -> HypoStats {
    let (k, l, n) = (p.k, p.l, p.n());
    let ramification = 2 * (2 * k - 1);
    let ramification_at_infinity = 2 * (k - 1);
    let tangencies = ramification - ramification_at_infinity - n;
    HypoStats {
        degree: 2 * k,
        cusps: n,
        nodes: n * (k - 2),
        real_nodes: n * (l - 1),
        tangencies,
        ramification,
        ramification_at_infinity,
        identity_holds: tangencies == k - l,
    }
}

pub(crate) fn bisect(f: impl Fn(f64) -> f64, mut a: f64, mut b: f64) -> f64 {
    let mut fa = f(a);
    for _ in 0..200 {
        let m = 0.5 * (a + b);
        if m <= a || m >= b {
            break;
        }
        let fm = f(m);
        if fm == 0.0 {
            return m;
        }
        if (fm > 0.0) == (fa > 0.0) {
            a = m;
            fa = fm;
        } else {
            b = m;
        }
    }
    0.5 * (a + b)
}

/// Sign-change roots of `f` on the open interval, scanned on `samples` cells.
pub(crate) fn roots_in(f: impl Fn(f64) -> f64, a: f64, b: f64, samples: usize) -> Vec<f64> {
    let h = (b - a) / samples as f64;
    let mut out = Vec::new();
    for i in 0..samples {
        let (x0, x1) = (a + h * i as f64, a + h * (i + 1) as f64);
        let (f0, f1) = (f(x0), f(x1));
        if i > 0 && f0 == 0.0 {
            out.push(x0);
        } else if (f0 < 0.0) != (f1 < 0.0) && f1 != 0.0 {
            out.push(bisect(&f, x0, x1));
        }
    }
    out
}

/// Real double points as parameter pairs `(t₁, t₂)` in `[0, 2π)`.
///
/// Writing `t = a ± b`, `z(a+b) = z(a−b)` forces `a = πm/N` and
/// `ℓ sin kb = (−1)^m k sin ℓb`; `b` is found by bisection on `(0, π)`.
pub fn real_double_points(p: &HypoParams) -> Vec<(f64, f64)> {
    let (k, l, n) = (p.k as f64, p.l as f64, p.n());
    let mut found: Vec<(f64, f64, f64, f64)> = Vec::new();
    for m in 0..2 * n {
        let a = PI * m as f64 / n as f64;
        let s = if m % 2 == 0 { 1.0 } else { -1.0 };
        let g = |b: f64| l * (k * b).sin() - s * k * (l * b).sin();
        for b in roots_in(g, 1e-3, PI - 1e-3, 4000 * p.k as usize) {
            let (t1, t2) = ((a + b).rem_euclid(TAU), (a - b).rem_euclid(TAU));
            let gap = (t1 - t2).abs().min(TAU - (t1 - t2).abs());
            let near_cusp = |t: f64| (n as f64 * t / 2.0).sin().abs() < 1e-6;
            if gap < 1e-6 || near_cusp(t1) || near_cusp(t2) {
                continue;
            }
            let (p1, p2) = (hypo_point(p, t1), hypo_point(p, t2));
            if (p1.0 - p2.0).abs() > 1e-9 || (p1.1 - p2.1).abs() > 1e-9 {
                continue;
            }
            if found.iter().any(|q| (q.2 - p1.0).abs() < 1e-7 && (q.3 - p1.1).abs() < 1e-7) {
                continue;
            }
            found.push((t1.min(t2), t1.max(t2), p1.0, p1.1));
        }
    }
    found.sort_by(|a, b| a.2.total_cmp(&b.2).then(a.3.total_cmp(&b.3)));
    found.into_iter().map(|q| (q.0, q.1)).collect()
}

#[derive(Clone, Debug, Serialize)]
pub struct CriticalParameters {
    /// `2πj/N`, `j = 0..N`.
    pub cusps: Vec<f64>,
    pub tangency: f64,
    /// `(t, 2π − t)` with `y(t) = 0`, one pair per node on the axis.
    pub axis_nodes: Vec<(f64, f64)>,
    pub max_residual: f64,
}

pub fn critical_parameters(p: &HypoParams) -> Result<CriticalParameters, HypoError> {
    if p.l + 1 != p.k {
        return Err(HypoError::BadParams(format!("critical parameters need l = k - 1, got k = {}, l = {}", p.k, p.l)));
    }
    let n = p.n();
    let cusps: Vec<f64> = (0..n).map(|j| TAU * j as f64 / n as f64).collect();
    let mut max_residual: f64 = 0.0;
    for &t in &cusps {
        let (dx, dy) = hypo_velocity(p, t);
        max_residual = max_residual.max(dx.abs()).max(dy.abs());
    }
    let (dx, _) = hypo_velocity(p, PI);
    max_residual = max_residual.max(dx.abs());
    let y = |t: f64| hypo_point(p, t).1;
    let mut axis_nodes = Vec::new();
    for t in roots_in(y, 1e-9, PI - 1e-9, 4000 * p.k as usize) {
        if cusps.iter().any(|&c| (c - t).abs() < 1e-6) {
            continue;
        }
        max_residual = max_residual.max(y(t).abs());
        axis_nodes.push((t, TAU - t));
    }
    if max_residual > 1e-12 {
        return Err(HypoError::Tolerance { what: "critical parameters".into(), residual: max_residual });
    }
    if axis_nodes.len() != (p.k - 2) as usize {
        return Err(HypoError::Census { what: "axis nodes".into(), found: axis_nodes.len(), expected: (p.k - 2) as usize });
    }
    Ok(CriticalParameters { cusps, tangency: PI, axis_nodes, max_residual })
}
