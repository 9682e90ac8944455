use proptest::prelude::*;

use num_rational::Rational64;
use wirtlab::braid::{Braid, BraidLetter};
use wirtlab::diagram::{parse_diagram, serialize_diagram, CurveDiagram, Event, EventKind, Side};
use wirtlab::presentation::{abelianization, count_homs, symmetric_group, tietze_simplify, Presentation};
use wirtlab::word::{Letter, Word};

fn word(rank: usize, max_len: usize) -> impl Strategy<Value = Word> {
    prop::collection::vec((0..rank, any::<bool>()), 0..max_len)
        .prop_map(|ls| Word::from_letters(ls.into_iter().map(|(g, inv)| Letter::new(g, inv))))
}

fn braid(d: usize, max_len: usize) -> impl Strategy<Value = Braid> {
    prop::collection::vec((0..d - 1, any::<bool>()), 0..max_len)
        .prop_map(move |ls| Braid::new(d, ls.into_iter().map(|(index, inv)| BraidLetter { index, inv }).collect()).unwrap())
}

fn triple() -> impl Strategy<Value = (Word, Braid, Braid)> {
    (2usize..=6).prop_flat_map(|d| (word(d, 8), braid(d, 6), braid(d, 6)))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn right_action((w, a, b) in triple()) {
        let ab = a.compose(&b).unwrap();
        prop_assert_eq!(b.act(&a.act(&w).unwrap()).unwrap(), ab.act(&w).unwrap());
    }

    #[test]
    fn inverse_undoes((w, a, _b) in triple()) {
        prop_assert_eq!(a.inverse().act(&a.act(&w).unwrap()).unwrap(), w);
    }

    #[test]
    fn product_fixed((_w, a, _b) in triple()) {
        let d = a.strands();
        let top = Word::from_letters((0..d).rev().map(|g| Letter::new(g, false)));
        prop_assert_eq!(a.act(&top).unwrap(), top);
    }

    #[test]
    fn braid_relations((w, a, _b) in triple(), i in 0usize..4) {
        let d = a.strands();
        prop_assume!(i + 2 < d);
        let s = |j: usize| Braid::sigma(d, j + 1, false).unwrap();
        let lhs = s(i).compose(&s(i + 1)).unwrap().compose(&s(i)).unwrap();
        let rhs = s(i + 1).compose(&s(i)).unwrap().compose(&s(i + 1)).unwrap();
        let v = a.act(&w).unwrap();
        prop_assert_eq!(lhs.act(&v).unwrap(), rhs.act(&v).unwrap());
        if i + 3 < d {
            let far = s(i).compose(&s(i + 2)).unwrap();
            let far2 = s(i + 2).compose(&s(i)).unwrap();
            prop_assert_eq!(far.act(&v).unwrap(), far2.act(&v).unwrap());
        }
    }
}

fn presentation() -> impl Strategy<Value = Presentation> {
    (1usize..=3).prop_flat_map(|r| {
        prop::collection::vec(word(r, 7), 0..4).prop_map(move |ws| Presentation::free(r).with_relators(ws).unwrap())
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(60))]

    #[test]
    fn tietze_keeps_invariants(p in presentation()) {
        let (q, t) = tietze_simplify(&p, false);
        prop_assert!(t.only_i_iia());
        prop_assert_eq!(t.replay(&p).unwrap(), q.clone());
        prop_assert_eq!(abelianization(&p), abelianization(&q));
        let s3 = symmetric_group(3).unwrap();
        prop_assert_eq!(count_homs(&p, &s3).unwrap(), count_homs(&q, &s3).unwrap());
    }
}

fn event() -> impl Strategy<Value = EventKind> {
    let side = prop_oneof![Just(Side::Left), Just(Side::Right)];
    prop_oneof![
        (2usize..5).prop_map(|m| EventKind::Ordinary { m }),
        (0usize..3).prop_map(|h| EventKind::Crossing { m: 2 * h + 1 }),
        ((1usize..3), side.clone()).prop_map(|(h, branch_side)| EventKind::Cusp { m: 2 * h, branch_side }),
        side.prop_map(|branch_side| EventKind::Tangency { branch_side }),
    ]
}

proptest! {
    #[test]
    fn dsl_round_trip(
        d in 1usize..5,
        line in -20i64..20,
        evs in prop::collection::btree_map(-40i64..40, (event(), 1usize..4), 0..6),
    ) {
        let line_x = Rational64::new(2 * line + 1, 2);
        let events = evs.into_iter().map(|(x, (kind, top))| Event { x: Rational64::new(x, 3), kind, top }).collect();
        let comps = (0..d).map(|i| format!("c{}", i % 2)).collect();
        let dg = CurveDiagram::new(d, line_x, comps, events).unwrap();
        prop_assert_eq!(parse_diagram(&serialize_diagram(&dg)).unwrap(), dg);
    }
}
