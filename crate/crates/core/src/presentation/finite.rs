use thiserror::Error;

/// Multiplication table of a finite group; elements are `0..order`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteGroupTable {
    name: String,
    table: Vec<Vec<u16>>,
    identity: u16,
    inverses: Vec<u16>,
    labels: Vec<String>,
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GroupTableError {
    #[error("symmetric group degree {0} outside the supported range 2..=5")]
    DegreeOutOfRange(usize),
    #[error("table is not a group: {0}")]
    NotAGroup(String),
}

impl FiniteGroupTable {
    pub fn from_table(name: impl Into<String>, table: Vec<Vec<u16>>, labels: Vec<String>) -> Result<Self, GroupTableError> {
        let n = table.len();
        if n == 0 || table.iter().any(|r| r.len() != n) || labels.len() != n {
            return Err(GroupTableError::NotAGroup("table must be square and labelled".into()));
        }
        let identity = (0..n)
            .find(|&e| (0..n).all(|a| table[e][a] as usize == a && table[a][e] as usize == a))
            .ok_or_else(|| GroupTableError::NotAGroup("no identity".into()))? as u16;
        let mut inverses = Vec::with_capacity(n);
        for a in 0..n {
            let inv = (0..n)
                .find(|&b| table[a][b] == identity && table[b][a] == identity)
                .ok_or_else(|| GroupTableError::NotAGroup(format!("element {a} has no inverse")))?;
            inverses.push(inv as u16);
        }
        let g = FiniteGroupTable { name: name.into(), table, identity, inverses, labels };
        if !g.is_associative() {
            return Err(GroupTableError::NotAGroup("not associative".into()));
        }
        Ok(g)
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn order(&self) -> usize {
        self.table.len()
    }

    pub fn identity(&self) -> u16 {
        self.identity
    }

    #[inline]
    pub fn mul(&self, a: u16, b: u16) -> u16 {
        self.table[a as usize][b as usize]
    }

    #[inline]
    pub fn inv(&self, a: u16) -> u16 {
        self.inverses[a as usize]
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn pow(&self, a: u16, e: i64) -> u16 {
        let base = if e < 0 { self.inv(a) } else { a };
        let mut acc = self.identity;
        for _ in 0..e.unsigned_abs() {
            acc = self.mul(acc, base);
        }
        acc
    }

    fn is_associative(&self) -> bool {
        let n = self.order() as u16;
        (0..n).all(|a| (0..n).all(|b| (0..n).all(|c| self.mul(self.mul(a, b), c) == self.mul(a, self.mul(b, c)))))
    }

    /// Full axiom check (closure, identity, inverses, associativity).
    pub fn check_axioms(&self) -> bool {
        let n = self.order();
        self.table.iter().all(|r| r.iter().all(|&x| (x as usize) < n))
            && (0..n as u16).all(|a| self.mul(a, self.inv(a)) == self.identity && self.mul(self.identity, a) == a)
            && self.is_associative()
    }
}

/// `S_n` for `2 ≤ n ≤ 5`, elements in lexicographic order of their images.
pub fn symmetric_group(n: usize) -> Result<FiniteGroupTable, GroupTableError> {
    if !(2..=5).contains(&n) {
        return Err(GroupTableError::DegreeOutOfRange(n));
    }
    let mut perms: Vec<Vec<u8>> = Vec::new();
    let mut cur: Vec<u8> = (0..n as u8).collect();
    permutations(&mut cur, 0, &mut perms);
    perms.sort();
    let index = |p: &[u8]| perms.binary_search_by(|q| q.as_slice().cmp(p)).expect("closed") as u16;
    // (a·b)(i) = b(a(i)): left-to-right composition, matching the right action convention.
    let table: Vec<Vec<u16>> = perms
        .iter()
        .map(|a| {
            perms
                .iter()
                .map(|b| {
                    let c: Vec<u8> = a.iter().map(|&i| b[i as usize]).collect();
                    index(&c)
                })
                .collect()
        })
        .collect();
    let labels = perms
        .iter()
        .map(|p| p.iter().map(|i| (i + 1).to_string()).collect::<Vec<_>>().join(""))
        .collect();
    FiniteGroupTable::from_table(format!("S{n}"), table, labels)
}

fn permutations(cur: &mut Vec<u8>, k: usize, out: &mut Vec<Vec<u8>>) {
    if k == cur.len() {
        out.push(cur.clone());
        return;
    }
    for i in k..cur.len() {
        cur.swap(k, i);
        permutations(cur, k + 1, out);
        cur.swap(k, i);
    }
}

/// Cyclic group `ℤ/n`.
pub fn cyclic_group(n: usize) -> FiniteGroupTable {
    let table = (0..n).map(|a| (0..n).map(|b| ((a + b) % n) as u16).collect()).collect();
    let labels = (0..n).map(|a| a.to_string()).collect();
    FiniteGroupTable::from_table(format!("C{n}"), table, labels).expect("cyclic group")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn orders() {
        assert_eq!(symmetric_group(3).unwrap().order(), 6);
        assert_eq!(symmetric_group(4).unwrap().order(), 24);
        assert_eq!(symmetric_group(5).unwrap().order(), 120);
        assert!(symmetric_group(6).is_err());
        assert!(symmetric_group(1).is_err());
    }

    #[test]
    fn axioms() {
        for n in 2..=4 {
            assert!(symmetric_group(n).unwrap().check_axioms());
        }
        assert!(cyclic_group(7).check_axioms());
    }

    #[test]
    fn non_group_rejected() {
        let t = vec![vec![0, 1], vec![1, 1]];
        assert!(FiniteGroupTable::from_table("bad", t, vec!["a".into(), "b".into()]).is_err());
    }
}
