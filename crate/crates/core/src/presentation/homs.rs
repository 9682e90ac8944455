use thiserror::Error;

use super::{FiniteGroupTable, Presentation};

/// Search-space ceiling `|G|^rank` above which counting is refused.
pub const DEFAULT_HOM_BOUND: f64 = 1e8;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum HomError {
    #[error("search space {size:.3e} for {group} exceeds bound {bound:.3e} (set WIRTLAB_HOM_BOUND to raise it)")]
    BoundExceeded { group: String, size: f64, bound: f64 },
}

/// `DEFAULT_HOM_BOUND`, overridden by the `WIRTLAB_HOM_BOUND` environment variable.
pub fn default_hom_bound() -> f64 {
    std::env::var("WIRTLAB_HOM_BOUND")
        .ok()
        .and_then(|s| s.trim().parse::<f64>().ok())
        .filter(|b| *b > 0.0)
        .unwrap_or(DEFAULT_HOM_BOUND)
}

pub fn count_homs(p: &Presentation, g: &FiniteGroupTable) -> Result<u64, HomError> {
    count_homs_with_bound(p, g, default_hom_bound())
}

struct Search<'a> {
    g: &'a FiniteGroupTable,
    rank: usize,
    // Relators grouped by the highest generator they mention, as (gen, inverted) letters.
    checks: Vec<Vec<Vec<(usize, bool)>>>,
}

impl Search<'_> {
    fn satisfied(&self, level: usize, images: &[u16]) -> bool {
        self.checks[level].iter().all(|rel| {
            let mut acc = self.g.identity();
            for &(gen, inv) in rel {
                let x = images[gen];
                acc = self.g.mul(acc, if inv { self.g.inv(x) } else { x });
            }
            acc == self.g.identity()
        })
    }

    fn count_from(&self, level: usize, images: &mut Vec<u16>) -> u64 {
        if level == self.rank {
            return 1;
        }
        let mut total = 0;
        for x in 0..self.g.order() as u16 {
            images.push(x);
            if self.satisfied(level, images) {
                total += self.count_from(level + 1, images);
            }
            images.pop();
        }
        total
    }
}

/// Number of homomorphisms `π → G` by backtracking; each relator is
/// tested as soon as all of its generators have images.
pub fn count_homs_with_bound(p: &Presentation, g: &FiniteGroupTable, bound: f64) -> Result<u64, HomError> {
    let rank = p.rank();
    let size = (g.order() as f64).powi(rank as i32);
    if size > bound {
        return Err(HomError::BoundExceeded { group: g.name().to_string(), size, bound });
    }
    if rank == 0 {
        return Ok(1);
    }
    let mut checks = vec![Vec::new(); rank];
    for r in p.relators() {
        if let Some(top) = r.max_gen() {
            checks[top].push(r.letters().iter().map(|l| (l.gen, l.inv)).collect());
        }
    }
    let search = Search { g, rank, checks };
    Ok(split_first(&search))
}

#[cfg(feature = "parallel")]
fn split_first(s: &Search<'_>) -> u64 {
    use rayon::prelude::*;
    (0..s.g.order() as u16)
        .into_par_iter()
        .map(|x| {
            let mut images = vec![x];
            if s.satisfied(0, &images) {
                s.count_from(1, &mut images)
            } else {
                0
            }
        })
        .sum()
}

#[cfg(not(feature = "parallel"))]
fn split_first(s: &Search<'_>) -> u64 {
    s.count_from(0, &mut Vec::with_capacity(s.rank))
}
