use serde::{Deserialize, Serialize};

use super::Presentation;

/// `ℤ^free_rank ⊕ ⊕ ℤ/d_i` with `d_1 | d_2 | …`, all `d_i ≥ 2`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct AbelianInvariants {
    pub free_rank: usize,
    pub torsion: Vec<u64>,
}

impl AbelianInvariants {
    pub fn is_chain(&self) -> bool {
        self.torsion.iter().all(|&d| d >= 2) && self.torsion.windows(2).all(|w| w[1] % w[0] == 0)
    }
}

impl std::fmt::Display for AbelianInvariants {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let mut parts = Vec::new();
        match self.free_rank {
            0 => {}
            1 => parts.push("Z".to_string()),
            r => parts.push(format!("Z^{r}")),
        }
        for d in &self.torsion {
            parts.push(format!("Z/{d}"));
        }
        if parts.is_empty() {
            f.write_str("0")
        } else {
            f.write_str(&parts.join(" + "))
        }
    }
}

/// Diagonal of the Smith normal form (non-negative, divisibility chain,
/// zeros last). The length is `min(rows, cols)`.
pub fn smith_diagonal(mut m: Vec<Vec<i128>>, cols: usize) -> Vec<i128> {
    let rows = m.len();
    let n = rows.min(cols);
    let mut diag = Vec::with_capacity(n);
    for t in 0..n {
        loop {
            // Smallest non-zero entry of the trailing block becomes the pivot.
            let mut best: Option<(usize, usize)> = None;
            for (i, row) in m.iter().enumerate().skip(t) {
                for (j, &v) in row.iter().enumerate().skip(t) {
                    if v != 0 && best.map_or(true, |(bi, bj)| v.abs() < m[bi][bj].abs()) {
                        best = Some((i, j));
                    }
                }
            }
            let Some((pi, pj)) = best else {
                diag.push(0);
                break;
            };
            m.swap(t, pi);
            for row in m.iter_mut() {
                row.swap(t, pj);
            }
            let p = m[t][t];
            let mut clean = true;
            for i in t + 1..rows {
                let q = m[i][t] / p;
                if q != 0 {
                    for j in t..cols {
                        m[i][j] -= q * m[t][j];
                    }
                }
                if m[i][t] != 0 {
                    clean = false;
                }
            }
            for j in t + 1..cols {
                let q = m[t][j] / p;
                if q != 0 {
                    for row in m.iter_mut().skip(t) {
                        row[j] -= q * row[t];
                    }
                }
                if m[t][j] != 0 {
                    clean = false;
                }
            }
            if !clean {
                continue;
            }
            // Enforce divisibility by folding an offending row into row t.
            let mut offender = None;
            'scan: for i in t + 1..rows {
                for j in t + 1..cols {
                    if m[i][j] % p != 0 {
                        offender = Some(i);
                        break 'scan;
                    }
                }
            }
            match offender {
                Some(i) => {
                    for j in t..cols {
                        let v = m[i][j];
                        m[t][j] += v;
                    }
                }
                None => {
                    diag.push(p.abs());
                    break;
                }
            }
        }
    }
    diag
}

/// Abelianization via the Smith normal form of the exponent-sum matrix.
pub fn abelianization(p: &Presentation) -> AbelianInvariants {
    let cols = p.rank();
    let m: Vec<Vec<i128>> = p
        .relators()
        .iter()
        .map(|r| r.exponent_sums(cols).into_iter().map(i128::from).collect())
        .collect();
    let diag = smith_diagonal(m, cols);
    let nonzero = diag.iter().filter(|&&d| d != 0).count();
    let torsion = diag.iter().filter(|&&d| d > 1).map(|&d| d as u64).collect();
    AbelianInvariants { free_rank: cols - nonzero, torsion }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::presentation::parse_presentation;

    fn ab(s: &str) -> AbelianInvariants {
        abelianization(&parse_presentation(s).unwrap())
    }

    #[test]
    fn small_groups() {
        assert_eq!(ab("<a,b | >"), AbelianInvariants { free_rank: 2, torsion: vec![] });
        assert_eq!(ab("<a,b | a*b*a=b*a*b>"), AbelianInvariants { free_rank: 1, torsion: vec![] });
        assert_eq!(ab("<a | a^6>").torsion, vec![6]);
        assert_eq!(ab("<a,b | a^2, b^3>").torsion, vec![6]);
        assert_eq!(ab("<a,b | a^2, b^4>").torsion, vec![2, 4]);
        assert_eq!(ab("<a,b | a^4*b^6, a^6*b^4>").torsion, vec![2, 10]);
    }

    #[test]
    fn chain_property() {
        let inv = ab("<a,b,c | a^6, b^10, c^15>");
        assert!(inv.is_chain());
        assert_eq!(inv.torsion, vec![30, 30]);
    }
}
