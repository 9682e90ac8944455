use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use super::{abelianization, count_homs_with_bound, default_hom_bound, symmetric_group, tietze_simplify};
use super::{AbelianInvariants, FiniteGroupTable, HomError, Presentation};

/// Symmetric groups used as hom-count targets.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TargetSet {
    degrees: Vec<usize>,
}

impl Default for TargetSet {
    /// S3 and S4.
    fn default() -> Self {
        TargetSet { degrees: vec![3, 4] }
    }
}

impl TargetSet {
    pub fn new(mut degrees: Vec<usize>) -> Result<Self, String> {
        degrees.sort_unstable();
        degrees.dedup();
        if let Some(&d) = degrees.iter().find(|&&d| !(2..=5).contains(&d)) {
            return Err(format!("unsupported target S{d}; choose from s2..s5"));
        }
        Ok(TargetSet { degrees })
    }

    pub fn with_s5() -> Self {
        TargetSet { degrees: vec![3, 4, 5] }
    }

    /// Parses `s3,s4,s5`.
    pub fn parse(text: &str) -> Result<Self, String> {
        let mut degrees = Vec::new();
        for part in text.split(',').map(str::trim).filter(|s| !s.is_empty()) {
            let d = part
                .strip_prefix(['s', 'S'])
                .and_then(|n| n.parse::<usize>().ok())
                .ok_or_else(|| format!("bad target `{part}`"))?;
            degrees.push(d);
        }
        TargetSet::new(degrees)
    }

    pub fn degrees(&self) -> &[usize] {
        &self.degrees
    }

    pub fn groups(&self) -> Vec<FiniteGroupTable> {
        self.degrees.iter().map(|&d| symmetric_group(d).expect("validated degree")).collect()
    }
}

/// Abelianization plus hom counts into each target. Equal profiles are
/// necessary for isomorphism, not sufficient.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct InvariantProfile {
    pub abelian: AbelianInvariants,
    pub hom_counts: BTreeMap<String, u64>,
    pub simplified_rank: usize,
    pub simplified_relators: usize,
}

impl InvariantProfile {
    /// Componentwise comparison of abelianization and hom counts.
    pub fn same_invariants(&self, other: &InvariantProfile) -> bool {
        self.abelian == other.abelian && self.hom_counts == other.hom_counts
    }
}

impl fmt::Display for InvariantProfile {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "H1 = {}", self.abelian)?;
        for (g, n) in &self.hom_counts {
            write!(f, "; |Hom(-, {g})| = {n}")?;
        }
        Ok(())
    }
}

pub fn profile(p: &Presentation, targets: &TargetSet) -> Result<InvariantProfile, HomError> {
    profile_with_bound(p, targets, default_hom_bound())
}

pub fn profile_with_bound(p: &Presentation, targets: &TargetSet, bound: f64) -> Result<InvariantProfile, HomError> {
    let (q, _) = tietze_simplify(p, false);
    let mut hom_counts = BTreeMap::new();
    for g in targets.groups() {
        hom_counts.insert(g.name().to_string(), count_homs_with_bound(&q, &g, bound)?);
    }
    Ok(InvariantProfile {
        abelian: abelianization(&q),
        hom_counts,
        simplified_rank: q.rank(),
        simplified_relators: q.relators().len(),
    })
}

pub fn profiles_equal(a: &Presentation, b: &Presentation, targets: &TargetSet) -> Result<bool, HomError> {
    Ok(profile(a, targets)?.same_invariants(&profile(b, targets)?))
}
