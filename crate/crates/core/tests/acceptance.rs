//! Twelve acceptance checks, one line of output each.
//!
//! A check listed in `KNOWN_FAILURES` is expected to fail and must still
//! fail; every other check must pass.

use std::f64::consts::{PI, TAU};
use std::io::Write;
use std::time::{Duration, Instant};

use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use wirtlab::braid::{local_braid, Braid, BraidLetter, LocalKind};
use wirtlab::corpus::{corpus_diagram, Expect, CORPUS};
use wirtlab::diagram::{auto_region_b, check_components, check_facing, check_theorem, EventKind, ViolationKind};
use wirtlab::genpres::{diagram_braid_monodromy, extended_wirtinger, wirtinger_presentation, zvk_presentation};
use wirtlab::hypocycloid::{
    critical_parameters, hypo_stats, hypo_velocity, orbifold_presentation, quotient_diagram, real_double_points,
    verify_case, HypoParams, QuotientEvent, Tracer,
};
use wirtlab::presentation::{
    abelianization, artin_from_graph, count_homs, count_homs_with_bound, ngon_semidirect, ngon_semidirect_full,
    parse_presentation, profile, profiles_equal, symmetric_group, tietze_simplify, Presentation, TargetSet,
};
use wirtlab::word::{Letter, Word};

type Outcome = Result<String, String>;

/// Criteria that cannot pass as stated, with the reason.
const KNOWN_FAILURES: &[(usize, &str)] = &[(
    11,
    "for k = 2 the short semidirect list omits t*x0 = x0*t; the orbifold group matches the semidirect product written on all generators",
)];

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn err<E: std::fmt::Display>(e: E) -> String {
    e.to_string()
}

fn targets() -> TargetSet {
    TargetSet::default()
}

fn random_word(rng: &mut StdRng, d: usize) -> Word {
    let n = rng.gen_range(0..10);
    Word::from_letters((0..n).map(|_| Letter::new(rng.gen_range(0..d), rng.gen())))
}

fn random_braid(rng: &mut StdRng, d: usize) -> Braid {
    let n = rng.gen_range(0..8);
    let letters = (0..n).map(|_| BraidLetter { index: rng.gen_range(0..d - 1), inv: rng.gen() }).collect();
    Braid::new(d, letters).unwrap()
}

fn c1_braid_laws() -> Outcome {
    let mut rng = StdRng::seed_from_u64(0x5eed);
    for trial in 0..1000 {
        let d = rng.gen_range(2..=6);
        let (w, a, b) = (random_word(&mut rng, d), random_braid(&mut rng, d), random_braid(&mut rng, d));
        let lhs = b.act(&a.act(&w).map_err(err)?).map_err(err)?;
        let rhs = a.compose(&b).map_err(err)?.act(&w).map_err(err)?;
        ensure(lhs == rhs, || format!("trial {trial}: right action fails for {a} then {b}"))?;
        let s = |j: usize| Braid::sigma(d, j, false).unwrap();
        for j in 1..d - 1 {
            let l = s(j).compose(&s(j + 1)).unwrap().compose(&s(j)).unwrap();
            let r = s(j + 1).compose(&s(j)).unwrap().compose(&s(j + 1)).unwrap();
            ensure(l.act(&w).unwrap() == r.act(&w).unwrap(), || format!("trial {trial}: braid relation at {j}"))?;
        }
        for i in 1..d {
            for j in i + 2..d {
                let l = s(i).compose(&s(j)).unwrap();
                let r = s(j).compose(&s(i)).unwrap();
                ensure(l.act(&w).unwrap() == r.act(&w).unwrap(), || format!("trial {trial}: far commutation {i},{j}"))?;
            }
        }
        let top = Word::from_letters((0..d).rev().map(|g| Letter::new(g, false)));
        ensure(a.act(&top).unwrap() == top, || format!("trial {trial}: product of meridians moved by {a}"))?;
    }
    Ok("1000 random triples, d <= 6".into())
}

fn c2_local_relations() -> Outcome {
    let mu = |i: usize| Word::gen(i);
    let expected = [
        (0, mu(0).mul(&mu(1).inverse())),
        (1, Word::commutator(&mu(0), &mu(1))),
        (2, Word::relation(&mu(0).mul(&mu(1)).mul(&mu(0)), &mu(1).mul(&mu(0)).mul(&mu(1)))),
    ];
    for (m, rel) in expected {
        let lb = local_braid(LocalKind::A(m));
        let forms = [rel.cyclic_normal_form(), rel.inverse().cyclic_normal_form()];
        let mut seen = 0;
        for i in 0..2 {
            let r = lb.full.act(&mu(i)).map_err(err)?.mul(&mu(i).inverse());
            if r.cyclic_reduce().is_identity() {
                continue;
            }
            let nf = r.cyclic_normal_form();
            ensure(forms.contains(&nf), || format!("m={m}: relator {r} is not {rel} up to rotation"))?;
            seen += 1;
        }
        ensure(seen > 0, || format!("m={m}: no relator produced"))?;
    }
    Ok("m=0: x1=x2, m=1: [x1,x2], m=2: braid".into())
}

fn c3_nodal_cubic() -> Outcome {
    let out = wirtinger_presentation(&corpus_diagram("nodal_cubic").unwrap()).map_err(err)?;
    let (q, t) = tietze_simplify(&out.presentation, false);
    ensure(t.only_i_iia(), || "transcript uses IIb".into())?;
    ensure(q.rank() == 1 && q.relators().is_empty(), || format!("simplified to {q}"))?;
    let ab = abelianization(&q);
    ensure(ab.free_rank == 1 && ab.torsion.is_empty(), || format!("H1 = {ab}"))?;
    let s3 = count_homs(&q, &symmetric_group(3).unwrap()).map_err(err)?;
    let s4 = count_homs(&q, &symmetric_group(4).unwrap()).map_err(err)?;
    ensure((s3, s4) == (6, 24), || format!("hom counts {s3}, {s4}"))?;
    Ok(format!("{} -> {q}; S3 = 6, S4 = 24", out.presentation.rank()))
}

fn c4_deltoid() -> Outcome {
    let out = wirtinger_presentation(&corpus_diagram("deltoid").unwrap()).map_err(err)?;
    let tri = artin_from_graph(3, &[(0, 1), (1, 2), (0, 2)]).map_err(err)?;
    ensure(out.presentation.same_relators_up_to_renaming(&tri), || format!("relators {}", out.presentation))?;
    ensure(profiles_equal(&out.presentation, &tri, &targets()).map_err(err)?, || "profiles differ".into())?;
    Ok(format!("{} relators match the triangle Artin group", tri.relators().len()))
}

fn c5_parabola_lines() -> Outcome {
    let out = wirtinger_presentation(&corpus_diagram("parabola_lines").unwrap()).map_err(err)?;
    let target = parse_presentation("<x,y,z | x*y=y*x, (y*z)^2=(z*y)^2, (x*z)^2=(z*x)^2>").map_err(err)?;
    let (a, b) = (profile(&out.presentation, &targets()).map_err(err)?, profile(&target, &targets()).map_err(err)?);
    ensure(a.same_invariants(&b), || format!("{a} vs {b}"))?;
    Ok(a.to_string())
}

fn c6_counterexamples() -> Outcome {
    let facing = check_facing(&corpus_diagram("cuspidal_cubic").unwrap());
    ensure(!facing.passed() && facing.violations.iter().all(|v| v.kind == ViolationKind::Facing), || {
        "cuspidal cubic passes the facing check".into()
    })?;
    for name in ["cardioid", "concentric"] {
        let dg = corpus_diagram(name).unwrap();
        ensure(auto_region_b(&dg).is_err(), || format!("{name}: a region B was found"))?;
        ensure(check_theorem(&dg).has(ViolationKind::Region), || format!("{name}: no region violation named"))?;
    }
    let comps = check_components(&corpus_diagram("smooth_cubic").unwrap()).map_err(err)?;
    ensure(!comps.is_empty() && comps.iter().all(|v| v.kind == ViolationKind::Components), || {
        "smooth cubic passes the connectivity check".into()
    })?;
    Ok(format!("facing: {}; components: {}", facing.violations[0].message, comps[0].message))
}

fn c7_extended() -> Outcome {
    let card = extended_wirtinger(&corpus_diagram("cardioid").unwrap()).map_err(err)?;
    let target = parse_presentation("<a,b | a*b*a=b*a*b, a^2*b=b*a^2>").map_err(err)?;
    let (a, b) = (profile(&card, &targets()).map_err(err)?, profile(&target, &targets()).map_err(err)?);
    ensure(a.same_invariants(&b), || format!("cardioid {a} vs {b}"))?;
    let conc = extended_wirtinger(&corpus_diagram("concentric").unwrap()).map_err(err)?;
    let free2 = Presentation::free(2);
    let (c, f) = (profile(&conc, &targets()).map_err(err)?, profile(&free2, &targets()).map_err(err)?);
    ensure(c.same_invariants(&f), || format!("concentric {c} vs free group {f}"))?;
    ensure(c.hom_counts.get("S3") == Some(&36), || format!("concentric S3 count {:?}", c.hom_counts))?;
    Ok(format!("cardioid {a}; concentric {c}"))
}

fn c8_zvk_vs_wirtinger() -> Outcome {
    let mut names = Vec::new();
    for e in CORPUS.iter().filter(|e| e.expect == Expect::Verified) {
        let dg = e.diagram();
        let w = wirtinger_presentation(&dg).map_err(err)?.presentation;
        let z = zvk_presentation(dg.d(), &diagram_braid_monodromy(&dg).map_err(err)?).map_err(err)?;
        let (a, b) = (profile(&w, &targets()).map_err(err)?, profile(&z, &targets()).map_err(err)?);
        ensure(a.same_invariants(&b), || format!("{}: {a} vs {b}", e.name))?;
        names.push(e.name);
    }
    Ok(format!("agree on {}", names.join(", ")))
}

/// Zeros of `dx/dt` with multiplicity on a shifted grid: cusps plus
/// vertical tangencies. A touching minimum counts twice.
fn dx_zeros(p: &HypoParams) -> usize {
    let samples = 20_000 * p.k as usize;
    let h = TAU / samples as f64;
    let f = |i: usize| hypo_velocity(p, 0.123 + h * i as f64).0;
    let simple = (0..samples).filter(|&i| (f(i) < 0.0) != (f(i + 1) < 0.0)).count();
    let double = (1..=samples)
        .filter(|&i| {
            let (a, b, c) = (f(i - 1), f(i), f(i + 1));
            (a < 0.0) == (b < 0.0) && (b < 0.0) == (c < 0.0) && b.abs() < a.abs() && b.abs() <= c.abs() && b.abs() < 1e-6
        })
        .count();
    simple + 2 * double
}

fn c9_hypo_stats() -> Outcome {
    let mut pairs = 0;
    for k in 2..=12u32 {
        for l in 1..k {
            let Ok(p) = HypoParams::new(k, l) else { continue };
            let n = k + l;
            let s = hypo_stats(&p);
            let want = (2 * k, n, n * (k - 2), n * (l - 1), k - l);
            let got = (s.degree, s.cusps, s.nodes, s.real_nodes, s.tangencies);
            ensure(got == want, || format!("({k},{l}): {got:?} != {want:?}"))?;
            ensure(s.identity_holds && 2 * (2 * k - 1) - 2 * (k - 1) - n == k - l, || format!("({k},{l}) identity"))?;
            let real = real_double_points(&p).len() as u32;
            ensure(real == n * (l - 1), || format!("({k},{l}): traced {real} real nodes"))?;
            let crit = dx_zeros(&p) as u32;
            ensure(crit == n + (k - l), || format!("({k},{l}): {crit} zeros of dx/dt"))?;
            pairs += 1;
        }
    }
    let mut worst: f64 = 0.0;
    for k in 2..=12 {
        let p = HypoParams::adjacent(k).map_err(err)?;
        let c = critical_parameters(&p).map_err(err)?;
        ensure(c.max_residual < 1e-12, || format!("k={k}: residual {}", c.max_residual))?;
        ensure((c.tangency - PI).abs() < 1e-15 && c.cusps.len() == (2 * k - 1) as usize, || format!("k={k}"))?;
        worst = worst.max(c.max_residual);
    }
    Ok(format!("{pairs} coprime pairs; worst residual {worst:.1e}"))
}

fn c10_quotient() -> Outcome {
    let mut out = Vec::new();
    for k in 2..=4u32 {
        let n = (2 * k - 1) as usize;
        let ku = k as usize;
        let traced = Tracer::new(k).map_err(err)?.trace().map_err(err)?;
        let count = |q: QuotientEvent| traced.events.iter().filter(|e| e.kind == q).count();
        let census = (
            count(QuotientEvent::Cusp),
            count(QuotientEvent::Node),
            count(QuotientEvent::Tacnode),
            count(QuotientEvent::Transversal),
            count(QuotientEvent::Contact3),
        );
        let want = (ku - 1, (n - 1) * (ku - 2) / 2, ku - 2, 1, 1);
        ensure(census == want, || format!("k={k}: census {census:?} != {want:?}"))?;
        let dg = quotient_diagram(k).map_err(err)?;
        let kinds = |f: &dyn Fn(&EventKind) -> bool| dg.events.iter().filter(|e| f(&e.kind)).count();
        let encoded = (
            kinds(&|e| matches!(e, EventKind::Cusp { m: 2, .. })),
            kinds(&|e| *e == EventKind::Crossing { m: 1 }),
            kinds(&|e| *e == EventKind::Crossing { m: 3 }),
            kinds(&|e| *e == EventKind::Crossing { m: 5 }),
        );
        ensure(encoded == (want.0, want.1 + 1, want.2, 1), || format!("k={k}: encoded {encoded:?}"))?;
        ensure(dg.d() == ku + 1, || format!("k={k}: d = {}", dg.d()))?;
        ensure(check_theorem(&dg).is_verified(), || format!("k={k}: {:?}", check_theorem(&dg).violations()))?;
        out.push(format!("k={k} d={}", dg.d()));
    }
    Ok(format!("{}; all Verified", out.join(", ")))
}

fn c11_orbifold() -> Outcome {
    let budget = Duration::from_secs(300);
    let mut lines = Vec::new();
    let mut failures = Vec::new();
    for k in 2..=4u32 {
        let start = Instant::now();
        let r = verify_case(k, &targets()).map_err(err)?;
        let took = start.elapsed();
        let ab_l = abelianization(&orbifold_presentation(k).map_err(err)?);
        let ab_r = abelianization(&ngon_semidirect(k as usize));
        let z2 = |a: &wirtlab::presentation::AbelianInvariants| a.free_rank == 1 && a.torsion == [2];
        ensure(z2(&ab_l) && z2(&ab_r), || format!("k={k}: H1 {ab_l} vs {ab_r}"))?;
        ensure(took < budget, || format!("k={k} took {took:?}"))?;
        if r.equal {
            lines.push(format!("k={k} equal ({took:.1?})"));
        } else {
            let full = ngon_semidirect_full(k as usize);
            failures.push(format!(
                "k={k}: orbifold {} vs semidirect {} (all-generator form {}, equal={})",
                r.profile_left,
                r.profile_right,
                profile(&full, &targets()).map_err(err)?,
                r.equal_full
            ));
        }
    }
    if failures.is_empty() {
        Ok(lines.join(", "))
    } else {
        Err(format!("{}; passed: {}", failures.join("; "), lines.join(", ")))
    }
}

fn c12_tietze_safety() -> Outcome {
    let groups = [symmetric_group(3).unwrap(), symmetric_group(4).unwrap()];
    let mut cases: Vec<(String, Presentation)> = Vec::new();
    for e in CORPUS {
        let dg = e.diagram();
        if let Ok(w) = wirtinger_presentation(&dg) {
            cases.push((format!("{} wirtinger", e.name), w.presentation));
        }
        if let Ok(x) = extended_wirtinger(&dg) {
            cases.push((format!("{} extended", e.name), x));
        }
    }
    for k in 2..=4 {
        cases.push((format!("orbifold k={k}"), orbifold_presentation(k).map_err(err)?));
    }
    for (name, p) in &cases {
        let (q, t) = tietze_simplify(p, false);
        ensure(t.only_i_iia(), || format!("{name}: moves {:?}", t.moves.iter().map(|m| m.tag()).collect::<Vec<_>>()))?;
        ensure(abelianization(p) == abelianization(&q), || format!("{name}: abelianization changed"))?;
        for g in &groups {
            let before = count_homs_with_bound(p, g, f64::INFINITY).map_err(err)?;
            let after = count_homs(&q, g).map_err(err)?;
            ensure(before == after, || format!("{name}: {} count {before} -> {after}", g.name()))?;
        }
    }
    Ok(format!("{} presentations, I/IIa only", cases.len()))
}

#[test]
fn acceptance() {
    let checks: [(&str, fn() -> Outcome); 12] = [
        ("braid action laws", c1_braid_laws),
        ("local relation table", c2_local_relations),
        ("nodal cubic", c3_nodal_cubic),
        ("deltoid", c4_deltoid),
        ("parabola and two lines", c5_parabola_lines),
        ("counterexamples", c6_counterexamples),
        ("extended method", c7_extended),
        ("ZvK and Wirtinger agree", c8_zvk_vs_wirtinger),
        ("hypocycloid statistics", c9_hypo_stats),
        ("quotient extraction", c10_quotient),
        ("orbifold group vs semidirect product", c11_orbifold),
        ("Tietze safety", c12_tietze_safety),
    ];
    // Written to the process stdout so the lines survive output capture.
    let report = |line: String| {
        let mut out = std::io::stdout().lock();
        let _ = writeln!(out, "{line}");
    };
    let mut unexpected = Vec::new();
    for (i, (name, f)) in checks.iter().enumerate() {
        let n = i + 1;
        let known = KNOWN_FAILURES.iter().find(|(k, _)| *k == n);
        match (f(), known) {
            (Ok(detail), None) => report(format!("PASS {n:2} {name}: {detail}")),
            (Err(why), Some((_, reason))) => report(format!("FAIL {n:2} {name}: {why} [known: {reason}]")),
            (Err(why), None) => {
                report(format!("FAIL {n:2} {name}: {why}"));
                unexpected.push(n);
            }
            (Ok(detail), Some(_)) => {
                report(format!("PASS {n:2} {name}: {detail} [listed as a known failure]"));
                unexpected.push(n);
            }
        }
    }
    assert!(unexpected.is_empty(), "criteria with unexpected outcomes: {unexpected:?}");
}
