use wirtlab::corpus::{corpus_diagram, Expect, CORPUS};
use wirtlab::diagram::{check_components, parse_diagram};
use wirtlab::genpres::{
    diagram_braid_monodromy, edge_meridian_words, extended_details, extended_wirtinger, projective_closure,
    wirtinger_presentation, zvk_presentation, MonodromyDatum,
};
use wirtlab::presentation::{
    abelianization, artin_from_graph, parse_presentation, profile, profiles_equal, tietze_simplify, TargetSet,
};
use wirtlab::{Braid, LocalKind, Word};

fn targets() -> TargetSet {
    TargetSet::default()
}

#[test]
fn nodal_cubic_is_infinite_cyclic() {
    let out = wirtinger_presentation(&corpus_diagram("nodal_cubic").unwrap()).unwrap();
    assert_eq!(out.presentation.rank(), 3);
    assert_eq!(out.presentation.relators().len(), 3);
    let (q, t) = tietze_simplify(&out.presentation, false);
    assert!(t.only_i_iia());
    assert_eq!((q.rank(), q.relators().len()), (1, 0));
    let p = profile(&out.presentation, &targets()).unwrap();
    assert_eq!(p.hom_counts["S3"], 6);
    assert_eq!(p.hom_counts["S4"], 24);
}

#[test]
fn deltoid_gives_triangle_artin() {
    let out = wirtinger_presentation(&corpus_diagram("deltoid").unwrap()).unwrap();
    let tri = artin_from_graph(3, &[(0, 1), (1, 2), (0, 2)]).unwrap();
    assert!(out.presentation.same_relators_up_to_renaming(&tri), "{}", out.presentation);
    assert!(profiles_equal(&out.presentation, &tri, &targets()).unwrap());
}

#[test]
fn parabola_and_lines() {
    let out = wirtinger_presentation(&corpus_diagram("parabola_lines").unwrap()).unwrap();
    assert_eq!(out.presentation.rank(), 9);
    let target = parse_presentation("<x,y,z | x*y=y*x, (y*z)^2=(z*y)^2, (x*z)^2=(z*x)^2>").unwrap();
    assert!(profiles_equal(&out.presentation, &target, &targets()).unwrap());
    assert_eq!(abelianization(&out.presentation).free_rank, 3);
}

#[test]
fn zvk_matches_wirtinger_on_verified_corpus() {
    for e in CORPUS.iter().filter(|e| e.expect == Expect::Verified) {
        let dg = e.diagram();
        let w = wirtinger_presentation(&dg).unwrap().presentation;
        let z = zvk_presentation(dg.d(), &diagram_braid_monodromy(&dg).unwrap()).unwrap();
        assert_eq!(profile(&w, &targets()).unwrap(), profile(&z, &targets()).unwrap().clone(), "{}", e.name);
    }
}

#[test]
fn meridian_words_are_conjugates_and_match_tacnode() {
    let dg = corpus_diagram("parabola_lines").unwrap();
    let words = edge_meridian_words(&dg).unwrap();
    for i in 0..3 {
        assert_eq!(words[&i], Word::gen(i));
    }
    // first far edge of the tacnode at block {1,2}
    let expected = Word::gen(0).conj(&Word::gen(1).mul(&Word::gen(0)));
    assert_eq!(words[&3], expected);
    for w in words.values() {
        let sums = w.exponent_sums(3);
        assert_eq!(sums.iter().sum::<i64>(), 1);
    }
}

#[test]
fn zvk_local_examples() {
    let a1 = zvk_presentation(2, &[MonodromyDatum::local(Braid::identity(2), LocalKind::A(1), 0)]).unwrap();
    let comm = parse_presentation("<a,b | a*b=b*a>").unwrap();
    assert!(a1.same_relators_up_to_renaming(&comm));
    let a2 = zvk_presentation(2, &[MonodromyDatum::local(Braid::identity(2), LocalKind::A(2), 0)]).unwrap();
    let braid = parse_presentation("<a,b | a*b*a=b*a*b>").unwrap();
    assert!(a2.same_relators_up_to_renaming(&braid));
    assert_eq!(zvk_presentation(3, &[]).unwrap().rank(), 3);
    assert!(zvk_presentation(3, &[MonodromyDatum::local(Braid::identity(2), LocalKind::A(1), 0)]).is_err());

    let closed = projective_closure(&a2, 2).unwrap();
    let oracle = parse_presentation("<a,b | a*b*a=b*a*b, b*a>").unwrap();
    assert!(profiles_equal(&closed, &oracle, &targets()).unwrap());
    let free = projective_closure(&zvk_presentation(2, &[]).unwrap(), 2).unwrap();
    assert_eq!(profile(&free, &targets()).unwrap().hom_counts["S3"], 6);
}

#[test]
fn unverified_diagrams_have_no_monodromy() {
    assert!(diagram_braid_monodromy(&corpus_diagram("cardioid").unwrap()).is_err());
    assert!(edge_meridian_words(&corpus_diagram("cuspidal_cubic").unwrap()).is_err());
}

#[test]
fn cardioid_extended() {
    let dg = corpus_diagram("cardioid").unwrap();
    let naive = wirtinger_presentation(&dg).unwrap().presentation;
    assert_eq!(profile(&naive, &targets()).unwrap().hom_counts["S3"], 6);
    let det = extended_details(&dg).unwrap();
    assert_eq!(det.corrections.len(), 1);
    let target = parse_presentation("<x1,x2 | x1*x2*x1=x2*x1*x2, x1^2*x2=x2*x1^2>").unwrap();
    assert!(profiles_equal(&det.presentation, &target, &targets()).unwrap(), "{}", det.presentation);
}

#[test]
fn concentric_extended() {
    let dg = corpus_diagram("concentric").unwrap();
    let det = extended_details(&dg).unwrap();
    assert_eq!(det.corrections.len(), 2);
    let p = profile(&det.presentation, &targets()).unwrap();
    assert_eq!(p.hom_counts["S3"], 36);
    let free = parse_presentation("<a,b | >").unwrap();
    assert!(profiles_equal(&det.presentation, &free, &targets()).unwrap());
}

#[test]
fn extended_without_obstructions_is_wirtinger() {
    for name in ["nodal_cubic", "parabola_lines"] {
        let dg = corpus_diagram(name).unwrap();
        assert_eq!(extended_wirtinger(&dg).unwrap(), wirtinger_presentation(&dg).unwrap().presentation);
    }
    let line = parse_diagram("diagram\ndegree_y 1\nline_L at 0\nstrand 1 component l\nend\n").unwrap();
    assert_eq!(extended_wirtinger(&line).unwrap().rank(), 1);
}

#[test]
fn free_rank_counts_components() {
    for e in CORPUS {
        let dg = e.diagram();
        if !check_components(&dg).unwrap().is_empty() {
            continue;
        }
        let out = wirtinger_presentation(&dg).unwrap();
        assert_eq!(abelianization(&out.presentation).free_rank, dg.component_names().len(), "{}", e.name);
    }
}
