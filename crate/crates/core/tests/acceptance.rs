//! Acceptance suite: one line per criterion, nonzero exit if any fails.
//!
//! Run with `cargo test -p qspec-core --test acceptance`.

mod common;

use std::collections::BTreeSet;
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::time::{Duration, Instant};

use proptest::prelude::*;
use proptest::strategy::ValueTree;
use proptest::test_runner::{Config, TestRng, TestRunner};
use qspec_core::checks::{run_checks, CheckOptions, Status};
use qspec_core::spectra::{clopen_sets, induced_map_between, retraction_gamma, retraction_violations, t_phi};
use qspec_core::topspace::{t_space, FinTopSpace, TopOptions};
use qspec_core::{BitSet, FiniteRing, Ideal, Report, RingOptions, SpectralData, Spectrum, SpectrumKind};

use common::{Set, *};

const LIMIT_SP_Z8: Duration = Duration::from_secs(1);
const LIMIT_BATTERY_SCAN: Duration = Duration::from_secs(60);
const LIMIT_DETERMINISM: Duration = Duration::from_secs(300);
const BRUTE_FORCE_POINTS: usize = 12;
const GENERATED_SPACES: usize = 300;

fn data(r: &std::sync::Arc<FiniteRing>) -> SpectralData {
    SpectralData::new(r, qspec_core::ideals::DEFAULT_MAX_IDEALS).unwrap()
}

fn names(sp: &Spectrum) -> Vec<String> {
    sp.points().iter().map(Ideal::name).collect()
}

fn named(sp: &Spectrum, s: &BitSet) -> BTreeSet<String> {
    s.iter().map(|i| sp.points()[i].name()).collect()
}

fn z(n: u64) -> std::sync::Arc<FiniteRing> {
    FiniteRing::zmod(n, &RingOptions::default()).unwrap()
}

fn within(start: Instant, limit: Duration) -> String {
    let t = start.elapsed();
    assert!(t < limit, "took {t:?}, limit {limit:?}");
    format!("{:.3}s < {}s", t.as_secs_f64(), limit.as_secs())
}

fn c1() -> String {
    let start = Instant::now();
    let d = data(&z(8));
    let sp: BTreeSet<String> = names(&d.quasi).into_iter().collect();
    let spec: BTreeSet<String> = names(&d.prime).into_iter().collect();
    assert_eq!(sp, ["(0)", "(4)", "(2)"].map(String::from).into());
    assert_eq!(spec, ["(2)"].map(String::from).into());
    within(start, LIMIT_SP_Z8)
}

fn c2() -> String {
    let start = Instant::now();
    let mut ideals = 0;
    for (expr, r) in battery() {
        let lat = qspec_core::enumerate_ideals(&r, 100_000).unwrap();
        let oracle = all_ideals(&r);
        assert_eq!(lat.len(), oracle.len(), "{expr}: lattice size");
        for i in &lat {
            let m = to_set(i.members());
            assert!(oracle.contains(&m), "{expr}: {i} not an ideal");
            let scan = i.is_quasi_prime();
            let alt = is_prime(&r, &radical(&r, &m));
            assert_eq!(scan, alt, "{expr}: {i}");
            ideals += 1;
        }
    }
    format!("{ideals} ideals, 0 mismatches, {}", within(start, LIMIT_BATTERY_SCAN))
}

fn c3() -> String {
    let mut brute = 0;
    for (expr, r) in battery() {
        let d = data(&r);
        let sp = &d.quasi;
        let u = sp.basis_family();
        for f in r.elements() {
            for g in r.elements() {
                assert_eq!(u[f].intersection(&u[g]), u[r.mul(f, g)], "{expr}: U_{f} ∩ U_{g}");
            }
        }
        let n = sp.len();
        if n <= BRUTE_FORCE_POINTS {
            brute += 1;
            let fam: Vec<Set> = u.iter().map(to_set).collect();
            let opens = generated_opens(n, &fam);
            for q in 0..n {
                let formula: Set = (0..n)
                    .filter(|&p| sp.points()[q].is_subset(sp.radical_of(p)))
                    .collect();
                assert_eq!(closure_from_opens(n, &opens, q), formula, "{expr}: closure of {}", sp.points()[q]);
                assert_eq!(to_set(&sp.closure_of_point(q)), formula, "{expr}");
                assert_eq!(to_set(&sp.space().closure_of_point(q)), formula, "{expr}");
            }
        }
    }
    format!("basis law on all rings, closure formula vs brute force on {brute} rings")
}

fn c4() -> String {
    let o = TopOptions::default();
    for (expr, r) in battery() {
        let d = data(&r);
        let pairs = clopen_sets(&d.quasi, &o).unwrap();
        let idem = idempotent_count(&r);
        assert_eq!(pairs.len(), idem, "{expr}");
        let es: BTreeSet<usize> = pairs.iter().map(|p| p.1).collect();
        let cs: BTreeSet<&BitSet> = pairs.iter().map(|p| &p.0).collect();
        assert_eq!(es.len(), idem, "{expr}: pairing not injective on idempotents");
        assert_eq!(cs.len(), idem, "{expr}: pairing not injective on clopens");
        for (c, e) in &pairs {
            assert_eq!(r.mul(*e, *e), *e);
            assert_eq!(&d.quasi.basis_open(*e).unwrap(), c);
            let space = d.quasi.space();
            assert!(space.is_open(c) && space.is_closed(c));
        }
    }
    let z6 = data(&z(6));
    let n = clopen_sets(&z6.quasi, &o).unwrap().len();
    assert_eq!(n, 4);
    format!("all rings bijective; Z/6: {n}/{}", idempotent_count(&z(6)))
}

fn c5() -> String {
    for (expr, r) in battery() {
        let d = data(&r);
        let sp = &d.quasi;
        let closures: Vec<Set> = (0..sp.len())
            .map(|q| (0..sp.len()).filter(|&p| sp.points()[q].is_subset(sp.radical_of(p))).collect())
            .collect();
        let comps = components(&closures);
        let expected: BTreeSet<Set> = qspec_core::max_regular_ideals(&r)
            .iter()
            .map(|m| to_set(&sp.closed_set(m).unwrap()))
            .collect();
        assert_eq!(comps, expected, "{expr}");
        let lib: BTreeSet<Set> = qspec_core::spectra::connected_components(sp)
            .unwrap()
            .iter()
            .map(to_set)
            .collect();
        assert_eq!(lib, expected, "{expr}");
    }
    let d = data(&z(12));
    let comps: BTreeSet<BTreeSet<String>> = qspec_core::spectra::connected_components(&d.quasi)
        .unwrap()
        .iter()
        .map(|c| named(&d.quasi, c))
        .collect();
    let want: BTreeSet<BTreeSet<String>> = [vec!["(4)", "(2)"], vec!["(3)"]]
        .iter()
        .map(|v| v.iter().map(|s| s.to_string()).collect())
        .collect();
    assert_eq!(comps, want);
    "all rings; Z/12: {(4),(2)}, {(3)}".to_string()
}

fn random_preorder(n: usize) -> impl Strategy<Value = FinTopSpace> {
    proptest::collection::vec(proptest::bool::weighted(0.3), n * n).prop_map(move |bits| {
        let mut le = vec![vec![false; n]; n];
        for x in 0..n {
            for y in 0..n {
                le[x][y] = x == y || bits[x * n + y];
            }
        }
        for k in 0..n {
            for x in 0..n {
                for y in 0..n {
                    le[x][y] |= le[x][k] && le[k][y];
                }
            }
        }
        let min_open = (0..n)
            .map(|x| BitSet::from_indices(n, (0..n).filter(|&y| le[y][x])))
            .collect();
        FinTopSpace::new((0..n).map(|i| i.to_string()).collect(), min_open).unwrap()
    })
}

fn c6() -> String {
    let o = TopOptions::default();
    for (expr, r) in battery() {
        let d = data(&r);
        let (t, phi) = t_phi(&d.quasi, &o).unwrap();
        assert!(phi.is_homeomorphism(), "{expr}: phi is not a homeomorphism");
        assert_eq!(t.space.len(), d.prime.len(), "{expr}");
    }
    let mut runner = TestRunner::new_with_rng(Config::default(), TestRng::deterministic_rng(Config::default().rng_algorithm));
    let mut done = 0;
    for i in 0..GENERATED_SPACES {
        let n = 1 + i % 6;
        let x = random_preorder(n).new_tree(&mut runner).unwrap().current();
        let t = t_space(&x, &o).unwrap();
        let tt = t_space(&t.space, &o).unwrap();
        assert!(tt.eta.is_homeomorphism(), "t(t(X)) ≇ t(X) for {:?}", x.to_json());
        done += 1;
    }
    format!("phi homeomorphic on all rings; t(t(X)) ≅ t(X) on {done} generated spaces")
}

fn c7() -> String {
    let mut total = 0;
    for (expr, r) in battery() {
        let d = data(&r);
        let g = retraction_gamma(&d.quasi).unwrap();
        let v = retraction_violations(&g, &d.lattice);
        assert!(v.is_empty(), "{expr}: {v:?}");
        // independent: gamma sends q to the prime equal to its radical
        for (q, &p) in g.point_map.iter().enumerate() {
            let rad = radical(&r, &to_set(d.quasi.points()[q].members()));
            assert_eq!(to_set(g.target.points()[p].members()), rad);
        }
        total += d.lattice.len();
    }
    format!("0 violations over {total} ideals")
}

fn non_sober() -> FinTopSpace {
    // two topologically indistinguishable points
    FinTopSpace::indiscrete(2)
}

fn non_normal() -> FinTopSpace {
    let s = |xs: &[usize]| BitSet::from_indices(3, xs.iter().copied());
    FinTopSpace::new(vec!["a".into(), "b".into(), "c".into()], vec![s(&[0, 1]), s(&[1]), s(&[1, 2])]).unwrap()
}

fn c8() -> String {
    let o = TopOptions::default();
    for (expr, r) in battery() {
        let d = data(&r);
        let space = d.quasi.space();
        let sp_is_spec = d.quasi.points() == d.prime.points();
        let sp_is_max = d.quasi.points() == d.maximal.points();
        assert_eq!(space.is_sober(&o).unwrap(), sp_is_spec, "{expr}: sober");
        assert_eq!(space.is_hausdorff(), sp_is_max, "{expr}: hausdorff");
        assert_eq!(space.is_spectral_finite(&o).unwrap(), sp_is_spec, "{expr}: spectral");
    }
    assert!(!non_sober().is_sober(&o).unwrap());
    assert!(!non_normal().is_normal(&o).unwrap());
    assert!(non_normal().is_sober(&o).unwrap());
    "battery consistent; non-sober and non-normal fixtures detected".to_string()
}

fn c9() -> String {
    for (expr, r) in battery() {
        let d = data(&r);
        assert_eq!(d.primary.points(), d.quasi.points(), "{expr}");
    }
    let only = vec!["ideal:finite-coincidence".to_string()];
    let res = run_checks(&z(8), Some(&only), &CheckOptions::default()).unwrap();
    assert_eq!(res[0].status, Status::Pass);
    let reason = res[0].details["reason"].as_str().unwrap();
    assert!(reason.contains("every prime ideal is maximal") && reason.contains("out of scope"));
    "primary == quasi on all rings; report cites the reason".to_string()
}

fn c10() -> String {
    let mut quotients = 0;
    let mut locals = 0;
    let mut witness = None;
    for (expr, r) in battery() {
        let d = data(&r);
        let sp = &d.quasi;
        for i in d.lattice.iter().filter(|i| i.is_proper()) {
            let (q, h) = FiniteRing::quotient(&r, i).unwrap();
            let sq = Spectrum::from_lattice(&q, &qspec_core::enumerate_ideals(&q, 100_000).unwrap(), SpectrumKind::Quasi);
            let m = induced_map_between(&h, &sq, sp).unwrap();
            assert!(m.is_injective(), "{expr}: A -> A/{i} not injective");
            let v = sp.closed_set(i).unwrap();
            if m.full_image() != v && witness.is_none() {
                witness = Some(format!(
                    "{expr}, I = {i}: image {:?} vs 𝒱(I) {:?}",
                    named(sp, &m.full_image()),
                    named(sp, &v)
                ));
            }
            quotients += 1;
        }
        for f in r.elements().filter(|&f| !r.is_nilpotent(f)) {
            let (l, h) = FiniteRing::localize_at(&r, f).unwrap();
            let sl = Spectrum::from_lattice(&l, &qspec_core::enumerate_ideals(&l, 100_000).unwrap(), SpectrumKind::Quasi);
            let m = induced_map_between(&h, &sl, sp).unwrap();
            assert!(m.full_image().is_subset(&sp.basis_open(f).unwrap()), "{expr}: localization at {f}");
            locals += 1;
        }
    }
    if let Some(w) = witness {
        panic!("quotient image is not 𝒱(I): {w}");
    }
    format!("{quotients} quotients, {locals} localizations")
}

fn c11() -> String {
    let start = Instant::now();
    let run = || -> String {
        let mut out = String::new();
        for (expr, r) in battery() {
            let mut rep = Report::new(&expr, &r);
            rep.results = run_checks(&r, None, &CheckOptions::default()).unwrap();
            out.push_str(&rep.to_json());
        }
        out
    };
    let a = run();
    let b = run();
    assert!(a == b, "two runs differ");
    format!("{} bytes identical, {}", a.len(), within(start, LIMIT_DETERMINISM))
}

fn c12() -> String {
    let only = vec!["cor:local-ring".to_string()];
    let res = run_checks(&z(8), Some(&only), &CheckOptions::default()).unwrap();
    let r = &res[0];
    assert_eq!(
        r.status,
        Status::FailDocumented,
        "local-ring check on Z/8 reports '{}' with {}",
        r.status,
        r.details
    );
    let closed = r.details["closed_points"].as_array().unwrap();
    assert!(closed.iter().any(|p| p == "(2)"), "closed point (2) not reported: {}", r.details);
    format!("status '{}', witness {:?}", r.status, closed)
}

type Criterion = (&'static str, fn() -> String);

fn main() {
    let criteria: [Criterion; 12] = [
        ("Sp Z/8 = {(0),(4),(2)}, Spec Z/8 = {(2)}", c1),
        ("quasi-prime iff radical prime over the battery", c2),
        ("basis law and closure formula vs brute-force topology", c3),
        ("idempotent/clopen bijection", c4),
        ("components are V(M) for max-regular M", c5),
        ("t(Sp A) ≅ Spec A; t(t(X)) ≅ t(X)", c6),
        ("retraction gamma suite", c7),
        ("sober/Hausdorff/spectral criteria and fixtures", c8),
        ("primary spectrum equals quasi-prime spectrum", c9),
        ("induced maps of quotients and localizations", c10),
        ("byte-identical check reports", c11),
        ("local-ring ambiguity reported on Z/8", c12),
    ];
    std::panic::set_hook(Box::new(|_| {}));
    let mut failed = 0;
    for (i, (label, f)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = catch_unwind(AssertUnwindSafe(f));
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            Ok(note) => println!("criterion {:>2}: PASS  {label} [{note}] ({secs:.2}s)", i + 1),
            Err(e) => {
                failed += 1;
                let msg = e
                    .downcast_ref::<String>()
                    .cloned()
                    .or_else(|| e.downcast_ref::<&str>().map(|s| s.to_string()))
                    .unwrap_or_default();
                println!("criterion {:>2}: FAIL  {label}: {msg} ({secs:.2}s)", i + 1);
            }
        }
    }
    println!("{} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed > 0 {
        std::process::exit(1);
    }
}
