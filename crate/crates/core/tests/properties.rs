use cgrefine::diagram::{diagram_for_cycle, diagram_for_pair, LinkDiagram};
use cgrefine::geometry::{
    project, random_generic_direction, random_polyline, random_rectilinear, GraphKind, Q,
};
use cgrefine::graph::{complete_graph, disjoint_cycle_pairs, Cycle};
use cgrefine::invariants::{conway_skein, linking_number};
use cgrefine::theorems::invariant_report;
use num_bigint::BigInt;
use proptest::prelude::*;

fn polygon_knot(seed: u64) -> LinkDiagram {
    let e = random_polyline(GraphKind::Complete(3), seed, 5, 3).unwrap();
    let p = project(&e, &random_generic_direction(&e, 0).unwrap()).unwrap();
    diagram_for_cycle(&p, &Cycle::new(&[1, 2, 3]).unwrap()).unwrap()
}

fn k6_link(seed: u64, pair: usize) -> LinkDiagram {
    let e = random_rectilinear(6, seed, 30).unwrap();
    let p = project(&e, &random_generic_direction(&e, 0).unwrap()).unwrap();
    let pairs = disjoint_cycle_pairs(&complete_graph(6).unwrap(), 3, 3).unwrap();
    diagram_for_pair(&p, &pairs[pair % pairs.len()]).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn cycles_are_canonical(
        verts in Just((1..=7u8).collect::<Vec<_>>()).prop_shuffle(),
        len in 3..=7usize,
        turn in 0..7usize,
        flip: bool,
    ) {
        let seq = &verts[..len];
        let mut other: Vec<u8> = seq.iter().cycle().skip(turn).take(len).copied().collect();
        if flip {
            other.reverse();
        }
        let a = Cycle::new(seq).unwrap();
        let b = Cycle::new(&other).unwrap();
        prop_assert_eq!(a.bracket(), b.bracket());
        prop_assert_eq!(a, b);
    }

    #[test]
    fn skein_relation_at_every_crossing(seed in 0..500u64) {
        let d = polygon_knot(seed);
        let here = conway_skein(&d).unwrap().coeffs;
        for c in 0..d.crossing_count() {
            let switched = d.switch_crossing(c).unwrap();
            prop_assert_eq!(&switched.switch_crossing(c).unwrap(), &d);
            let other = conway_skein(&switched).unwrap().coeffs;
            let smooth = conway_skein(&d.smooth_crossing(c).unwrap()).unwrap().coeffs;
            let width = here.len().max(other.len()).max(smooth.len() + 1);
            let at = |v: &[i64], i: usize| v.get(i).copied().unwrap_or(0);
            for i in 0..width {
                let z_smooth = if i == 0 { 0 } else { at(&smooth, i - 1) };
                let lhs = at(&here, i) - at(&other, i);
                prop_assert_eq!(lhs, i64::from(d.sign(c)) * z_smooth);
            }
        }
    }

    #[test]
    fn gauss_text_round_trips(seed in 0..500u64) {
        let d = polygon_knot(seed);
        prop_assert_eq!(LinkDiagram::from_gauss(&d.gauss_text()).unwrap(), d);
    }

    #[test]
    fn mirror_and_reversal_on_links(seed in 0..200u64, pair in 0..10usize) {
        let d = k6_link(seed, pair);
        let lk = linking_number(&d).unwrap();
        prop_assert_eq!(linking_number(&d.mirror()).unwrap(), -lk);
        prop_assert_eq!(linking_number(&d.reverse_component(1).unwrap()).unwrap(), -lk);
        prop_assert_eq!(conway_skein(&d).unwrap().coefficient(1), lk);
    }

    #[test]
    fn mirror_keeps_a2(seed in 0..500u64) {
        let d = polygon_knot(seed);
        prop_assert_eq!(
            conway_skein(&d.mirror()).unwrap().coefficient(2),
            conway_skein(&d).unwrap().coefficient(2)
        );
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(12))]

    #[test]
    fn k6_invariants_are_geometric(seed in 0..10_000u64, num in 1..9i64, den in 1..5i64) {
        let e = random_rectilinear(6, seed, 30).unwrap();
        let base = invariant_report(&e, 0).unwrap();
        prop_assert!(base.same_invariants(&invariant_report(&e, 1 + seed % 7).unwrap()));

        let k = Q::new(BigInt::from(num), BigInt::from(den));
        prop_assert!(base.same_invariants(&invariant_report(&e.scaled(&k), 0).unwrap()));

        let m = invariant_report(&e.mirrored(), 0).unwrap();
        for (len, knots) in &base.knots {
            for (x, y) in knots.iter().zip(m.knots(*len)) {
                prop_assert_eq!(&x.cycle, &y.cycle);
                prop_assert_eq!(x.a2, y.a2);
            }
        }
        for ((k, l), links) in &base.links {
            for (x, y) in links.iter().zip(m.links(*k, *l)) {
                prop_assert_eq!(&x.pair, &y.pair);
                prop_assert_eq!(x.lk, -y.lk);
            }
        }
    }
}
