mod common;

use std::collections::BTreeSet;

use cgrefine::geometry::{moment_curve_embedding, random_polyline, random_rectilinear, GraphKind};
use cgrefine::theorems::*;
use common::*;

#[test]
fn moment_k7_values() {
    let r = invariant_report(&moment_curve_embedding(7).unwrap(), 0).unwrap();
    let main = verify_main2(&r).unwrap();
    assert_eq!((main.lhs, main.rhs), (7, 7));
    assert_eq!(main.breakdown["sum_a2_gamma7"], 1);
    assert_eq!(main.breakdown["sum_lk2_gamma43"], 14);
    assert_eq!(main.breakdown["sum_lk2_gamma33"], 7);
    let (a, b) = verify_main3(&r).unwrap();
    assert!(a.holds && b.holds);
    assert!(verify_lemma_k7(&r).unwrap().holds);
    let c = combination_check(&r).unwrap();
    assert!(c.holds);
    assert_eq!(c.breakdown["coefficients_match"], 1);
    let census = census_k7(&r).unwrap();
    assert_eq!(
        (census.n7_trefoil, census.n33_hopf, census.n43_hopf),
        (1, 7, 14)
    );
}

#[test]
fn random_k6_and_k7_satisfy_everything() {
    for seed in 0..20 {
        let v = verify_embedding(&random_rectilinear(6, seed, 30).unwrap(), 0).unwrap();
        assert!(v.holds(), "K6 seed {seed}: {:?}", v.failures());
    }
    for seed in 0..3 {
        let v = verify_embedding(&random_rectilinear(7, seed, 30).unwrap(), 0).unwrap();
        assert!(v.holds(), "K7 seed {seed}: {:?}", v.failures());
        assert_eq!(v.identities.len(), 6);
        assert_eq!(v.bounds.len(), 1);
    }
}

#[test]
fn polyline_k6_fixtures() {
    let want = [(12, 3), (4, 1), (4, 1), (44, 11), (52, 13)];
    for ((name, e), (rhs, lk2)) in polyline_k6().iter().zip(want) {
        assert!(!e.is_rectilinear());
        let s = verify_simon_lemma(e, 0).unwrap();
        assert_eq!((s.lhs, s.rhs), (rhs, rhs), "{name}");
        assert_eq!(s.breakdown["sum_lk2_gamma33"], lk2, "{name}");
        let v = verify_embedding(e, 0).unwrap();
        assert!(v.holds(), "{name}: {:?}", v.failures());
    }
}

#[test]
fn simon_alpha_fixtures() {
    for (kind, fixtures, make) in [
        ("K5", K5_FIXTURES, k5_fixture as fn(u64) -> _),
        ("K33", K33_FIXTURES, k33_fixture),
    ] {
        for (seed, simon, alpha) in fixtures {
            let r = verify_simon_alpha(&make(seed), 0).unwrap();
            assert!(r.holds, "{kind} {seed}");
            assert_eq!(r.breakdown["simon"], simon, "{kind} {seed}");
            assert_eq!(r.breakdown["alpha"], alpha, "{kind} {seed}");
            assert_eq!(r.lhs, simon * simon);
        }
    }
}

#[test]
fn simon_is_odd_on_random_sticks() {
    for kind in [GraphKind::Complete(5), GraphKind::K33] {
        for seed in 0..15 {
            let r = verify_simon_alpha(&random_polyline(kind, seed, 30, 0).unwrap(), 0).unwrap();
            assert!(r.holds, "{kind} {seed}");
            assert_eq!(r.breakdown["simon"].rem_euclid(2), 1);
        }
    }
}

#[test]
fn d4_fixtures_cover_all_linking_values() {
    let mut seen = [BTreeSet::new(), BTreeSet::new()];
    for (bends, seed, lk, lk2, alpha) in D4_FIXTURES {
        let r = verify_d4_alpha(&d4_fixture(bends, seed), 0).unwrap();
        assert!(r.holds, "D4 {bends} {seed}");
        assert_eq!(r.breakdown["lk_lambda"], lk);
        assert_eq!(r.breakdown["lk_lambda_prime"], lk2);
        assert_eq!(r.breakdown["alpha"], alpha);
        seen[0].insert(lk.abs());
        seen[1].insert(lk2.abs());
    }
    for s in seen {
        assert!([0, 1, 2].iter().all(|x| s.contains(x)));
    }
}

#[test]
fn identities_reject_a_tampered_report() {
    let mut r = invariant_report(&moment_curve_embedding(6).unwrap(), 0).unwrap();
    assert!(verify_main1(&r).unwrap().holds);
    r.knots.get_mut(&6).unwrap()[0].a2 = 1;
    let bad = verify_main1(&r).unwrap();
    assert!(!bad.holds);
    assert_eq!((bad.lhs, bad.rhs), (2, 0));
}

#[test]
fn wrong_graphs_are_argument_errors() {
    let k6 = invariant_report(&moment_curve_embedding(6).unwrap(), 0).unwrap();
    assert!(matches!(
        verify_main2(&k6),
        Err(cgrefine::Error::Argument(_))
    ));
    assert!(matches!(
        verify_fm_bounds(&k6),
        Err(cgrefine::Error::Argument(_))
    ));
    let k5 = moment_curve_embedding(5).unwrap();
    assert!(matches!(
        verify_d4_alpha(&k5, 0),
        Err(cgrefine::Error::Argument(_))
    ));
    assert!(matches!(
        verify_simon_lemma(&k5, 0),
        Err(cgrefine::Error::Argument(_))
    ));
}
