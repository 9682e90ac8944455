use std::collections::BTreeSet;

use thiserror::Error;

use super::Presentation;
use crate::word::Word;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GraphError {
    #[error("edge ({0}, {1}) is a loop or mentions a missing vertex")]
    BadEdge(usize, usize),
}

fn braid_rel(a: usize, b: usize) -> Word {
    let (x, y) = (Word::gen(a), Word::gen(b));
    Word::relation(&Word::alternating(&x, &y, 3), &Word::alternating(&y, &x, 3))
}

fn comm(a: usize, b: usize) -> Word {
    Word::commutator(&Word::gen(a), &Word::gen(b))
}

/// Artin group of a simple graph on `x1..x{n}`:
/// `aba = bab` along edges, `[a, b]` for non-adjacent pairs.
pub fn artin_from_graph(vertices: usize, edges: &[(usize, usize)]) -> Result<Presentation, GraphError> {
    let mut adj = BTreeSet::new();
    for &(a, b) in edges {
        if a == b || a >= vertices || b >= vertices {
            return Err(GraphError::BadEdge(a, b));
        }
        adj.insert((a.min(b), a.max(b)));
    }
    Ok(artin_with_names((1..=vertices).map(|i| format!("x{i}")).collect(), &adj))
}

fn artin_with_names(names: Vec<String>, adj: &BTreeSet<(usize, usize)>) -> Presentation {
    let n = names.len();
    let mut p = Presentation::new(names).expect("distinct names");
    for a in 0..n {
        for b in a + 1..n {
            let (w, note) = if adj.contains(&(a, b)) { (braid_rel(a, b), "braid") } else { (comm(a, b), "commute") };
            p.push_relator(w, note).expect("in range");
        }
    }
    p
}

/// Artin group of the `N`-gon, generators `x0..x{N-1}`.
pub fn ngon_artin(n: usize) -> Presentation {
    assert!(n >= 3, "an N-gon needs N >= 3");
    let adj = (0..n).map(|j| {
        let k = (j + 1) % n;
        (j.min(k), j.max(k))
    });
    artin_with_names((0..n).map(|j| format!("x{j}")).collect(), &adj.collect())
}

/// Generators `t, x0, …, x{k-1}`; relators in the order
/// t², braids along the path, the `t`-braid of length 6, then the commutations.
pub fn ngon_semidirect(k: usize) -> Presentation {
    assert!(k >= 2, "k must be at least 2");
    let names: Vec<String> = std::iter::once("t".to_string()).chain((0..k).map(|j| format!("x{j}"))).collect();
    let mut p = Presentation::new(names).expect("distinct names");
    let t = Word::gen(0);
    let x = |j: usize| Word::gen(j + 1);
    let mut push = |w: Word, note: &str| p.push_relator(w, note).expect("in range");

    push(t.pow(2), "involution");
    for j in 0..k - 1 {
        push(braid_rel(j + 1, j + 2), "braid");
    }
    let xt = x(k - 1).mul(&t);
    let tx = t.mul(&x(k - 1));
    push(Word::relation(&xt.pow(3), &tx.pow(3)), "t-braid");
    for j in 2..k {
        push(Word::commutator(&x(0), &x(j)), "commute");
    }
    for i in 1..k {
        for j in i + 2..k {
            push(Word::commutator(&x(i), &x(j)), "commute");
        }
    }
    for i in 1..k {
        for j in i..k {
            if (i, j) == (k - 1, k - 1) {
                continue;
            }
            let txt = t.mul(&x(j)).mul(&t);
            push(Word::commutator(&x(i), &txt), "commute-twisted");
        }
    }
    p
}

/// The `N`-gon Artin group with `t` added and `x_j^t = x_{-j}`, written out
/// on all `N = 2k-1` generators.
pub fn ngon_semidirect_full(k: usize) -> Presentation {
    assert!(k >= 2, "k must be at least 2");
    let n = 2 * k - 1;
    let base = ngon_artin(n);
    let names: Vec<String> = std::iter::once("t".to_string()).chain(base.generators().iter().cloned()).collect();
    let mut p = Presentation::new(names).expect("distinct names");
    let t = Word::gen(0);
    p.push_relator(t.pow(2), "involution").expect("in range");
    for (w, note) in base.relators().iter().zip(base.notes()) {
        p.push_relator(w.substitute(|g| Word::gen(g + 1)), note).expect("in range");
    }
    for j in 0..n {
        let lhs = t.mul(&Word::gen(j + 1)).mul(&t.inverse());
        p.push_relator(Word::relation(&lhs, &Word::gen((n - j) % n + 1)), "action").expect("in range");
    }
    p
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::presentation::abelianization;

    #[test]
    fn single_edge() {
        let p = artin_from_graph(2, &[(0, 1)]).unwrap();
        assert_eq!(p.relators().len(), 1);
        assert_eq!(p.relators()[0].cyclic_normal_form(), braid_rel(0, 1).cyclic_normal_form());
        assert!(artin_from_graph(2, &[(1, 1)]).is_err());
    }

    #[test]
    fn edgeless_is_free_abelian() {
        let p = artin_from_graph(4, &[]).unwrap();
        assert_eq!(abelianization(&p).free_rank, 4);
    }

    #[test]
    fn triangle_matches_three_gon() {
        let tri = artin_from_graph(3, &[(0, 1), (1, 2), (0, 2)]).unwrap();
        assert_eq!(tri.relator_multiset(), ngon_artin(3).relator_multiset());
        let five = ngon_artin(5);
        let braids = five.notes().iter().filter(|n| *n == "braid").count();
        assert_eq!((braids, five.relators().len() - braids), (5, 5));
        assert_eq!(abelianization(&five).free_rank, 1);
    }

    #[test]
    fn semidirect_counts() {
        let p = ngon_semidirect(2);
        assert_eq!(p.generators(), ["t", "x0", "x1"]);
        assert_eq!(p.relators().len(), 3);
        assert_eq!(ngon_semidirect(4).relators().len(), 1 + 3 + 1 + 2 + 1 + 5);
        for k in 2..=5 {
            let ab = abelianization(&ngon_semidirect(k));
            assert_eq!((ab.free_rank, ab.torsion), (1, vec![2]));
        }
    }

    #[test]
    fn full_semidirect_shape() {
        let p = ngon_semidirect_full(3);
        assert_eq!(p.generators().len(), 6);
        assert_eq!(p.relators().len(), 1 + 10 + 5);
        let ab = abelianization(&p);
        assert_eq!((ab.free_rank, ab.torsion), (1, vec![2]));
    }
}
