//! One line per acceptance criterion; exits nonzero if any fails.

mod common;

use std::collections::BTreeSet;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use cgrefine::geometry::{
    moment_curve_embedding, random_polyline, random_rectilinear, GraphKind, SpatialEmbedding,
    DEFAULT_SPAN,
};
use cgrefine::graph::{
    complete_graph, cycles_of_length, disjoint_cycle_pairs, k33_subgraphs_of_k6,
    k5_subgraphs_of_k6, Cycle, SimonLabeling, SimpleGraph,
};
use cgrefine::theorems::*;
use common::*;

const K6_SEEDS: u64 = 200;
const K7_SEEDS: u64 = 25;
const STICK_SEEDS: u64 = 100;
const SPAN: i64 = DEFAULT_SPAN;

struct Outcome {
    lines: Vec<(usize, bool, String)>,
}

impl Outcome {
    fn record(&mut self, n: usize, ok: bool, detail: String) {
        println!(
            "criterion {n}: {} {detail}",
            if ok { "PASS" } else { "FAIL" }
        );
        self.lines.push((n, ok, detail));
    }
}

struct Complete {
    name: String,
    embedding: SpatialEmbedding,
    report: InvariantReport,
    elapsed: Duration,
}

fn complete(name: String, embedding: SpatialEmbedding) -> Complete {
    let t = Instant::now();
    let report = invariant_report(&embedding, 0).expect("report");
    Complete {
        name,
        embedding,
        report,
        elapsed: t.elapsed(),
    }
}

fn failing(reports: &[(String, IdentityReport)]) -> Vec<String> {
    reports
        .iter()
        .filter(|(_, r)| !r.holds)
        .map(|(n, r)| format!("{n} {} {} != {}", r.identity, r.lhs, r.rhs))
        .collect()
}

fn summary(checked: usize, bad: &[String]) -> String {
    if bad.is_empty() {
        format!("{checked} checks")
    } else {
        format!("{checked} checks, {} failing, first: {}", bad.len(), bad[0])
    }
}

fn main() -> ExitCode {
    let mut out = Outcome { lines: Vec::new() };
    let start = Instant::now();

    // Criterion 1: the K6 identity on the moment curve and 200 random sticks.
    let t = Instant::now();
    let mut k6: Vec<Complete> = vec![complete(
        "moment K6".into(),
        moment_curve_embedding(6).unwrap(),
    )];
    k6.extend((0..K6_SEEDS).map(|s| {
        complete(
            format!("K6 seed {s}"),
            random_rectilinear(6, s, SPAN).unwrap(),
        )
    }));
    let main1: Vec<(String, IdentityReport)> = k6
        .iter()
        .map(|c| (c.name.clone(), verify_main1(&c.report).unwrap()))
        .collect();
    let k6_time = t.elapsed();
    let bad = failing(&main1);
    out.record(
        1,
        bad.is_empty() && k6_time < Duration::from_secs(60),
        format!(
            "{} in {:.1}s",
            summary(main1.len(), &bad),
            k6_time.as_secs_f64()
        ),
    );

    // Criterion 2: the K7 identities on the moment curve and 25 random sticks.
    let mut k7: Vec<Complete> = vec![complete(
        "moment K7".into(),
        moment_curve_embedding(7).unwrap(),
    )];
    k7.extend((0..K7_SEEDS).map(|s| {
        complete(
            format!("K7 seed {s}"),
            random_rectilinear(7, s, SPAN).unwrap(),
        )
    }));
    let mut k7_ids = Vec::new();
    let mut sizes_ok = true;
    for c in &k7 {
        let r = &c.report;
        sizes_ok &= (r.knots(7).len(), r.knots(6).len(), r.knots(5).len()) == (360, 420, 252);
        sizes_ok &= r.links(4, 3).len() + r.links(3, 3).len() == 175;
        let (a, b) = verify_main3(r).unwrap();
        for id in [
            verify_main2(r).unwrap(),
            a,
            b,
            verify_lemma_k7(r).unwrap(),
            combination_check(r).unwrap(),
        ] {
            k7_ids.push((c.name.clone(), id));
        }
    }
    let slowest = k7.iter().map(|c| c.elapsed).max().unwrap();
    let bad = failing(&k7_ids);
    out.record(
        2,
        bad.is_empty() && sizes_ok && slowest < Duration::from_secs(10),
        format!(
            "{}, table sizes {}, slowest embedding {:.2}s",
            summary(k7_ids.len(), &bad),
            if sizes_ok {
                "360/420/252 and 175"
            } else {
                "WRONG"
            },
            slowest.as_secs_f64()
        ),
    );

    // Criterion 8 first part needs the search hit, which also joins the K7 set.
    let hit = search_minimal_k7(0, 5000, SEARCH_SPAN).unwrap();
    if let Some(h) = &hit {
        k7.push(complete(
            format!("search hit trial {}", h.trial),
            h.embedding.clone(),
        ));
    }

    // Criterion 3: parity on every K6 and K7.
    let parity: Vec<(String, IdentityReport)> = k6
        .iter()
        .chain(&k7)
        .map(|c| (c.name.clone(), verify_parity(&c.report).unwrap()))
        .collect();
    let bad = failing(&parity);
    out.record(3, bad.is_empty(), summary(parity.len(), &bad));

    // Criterion 4: the Simon-invariant sum on every K6, bent ones included.
    let bent = polyline_k6();
    let mut simon: Vec<(String, IdentityReport)> = k6
        .iter()
        .map(|c| (c.name.clone(), verify_simon_lemma(&c.embedding, 0).unwrap()))
        .collect();
    simon.extend(
        bent.iter()
            .map(|(n, e)| (n.clone(), verify_simon_lemma(e, 0).unwrap())),
    );
    let bad = failing(&simon);
    let polyline = bent.iter().filter(|(_, e)| !e.is_rectilinear()).count();
    out.record(
        4,
        bad.is_empty() && polyline >= 3,
        format!("{}, {polyline} polyline", summary(simon.len(), &bad)),
    );

    // Criterion 5: ℒ² = 8α + 1 on K5 and K3,3.
    let mut sticks: Vec<(String, SpatialEmbedding)> = Vec::new();
    for (kind, tag) in [(GraphKind::Complete(5), "K5"), (GraphKind::K33, "K33")] {
        for s in 0..STICK_SEEDS {
            sticks.push((
                format!("{tag} seed {s}"),
                random_polyline(kind, s, SPAN, 0).unwrap(),
            ));
        }
    }
    for (s, ..) in K5_FIXTURES {
        sticks.push((format!("K5 fixture {s}"), k5_fixture(s)));
    }
    for (s, ..) in K33_FIXTURES {
        sticks.push((format!("K33 fixture {s}"), k33_fixture(s)));
    }
    let alpha: Vec<(String, IdentityReport)> = sticks
        .iter()
        .map(|(n, e)| (n.clone(), verify_simon_alpha(e, 0).unwrap()))
        .collect();
    let mut bad = failing(&alpha);
    bad.extend(
        alpha
            .iter()
            .filter(|(_, r)| r.breakdown["simon"] % 2 == 0)
            .map(|(n, _)| format!("{n} even")),
    );
    let knotted = alpha
        .iter()
        .filter(|(n, r)| n.contains("fixture") && r.breakdown["simon"].abs() >= 3)
        .count();
    out.record(
        5,
        bad.is_empty() && knotted >= 6,
        format!(
            "{}, {knotted} fixtures with |L| >= 3",
            summary(alpha.len(), &bad)
        ),
    );

    // Criterion 6: |α| = |lk(λ)·lk(λ')| on D4.
    let d4: Vec<(String, SpatialEmbedding)> = D4_FIXTURES
        .iter()
        .map(|&(b, s, ..)| (format!("D4 bends {b} seed {s}"), d4_fixture(b, s)))
        .collect();
    let d4_ids: Vec<(String, IdentityReport)> = d4
        .iter()
        .map(|(n, e)| (n.clone(), verify_d4_alpha(e, 0).unwrap()))
        .collect();
    let bad = failing(&d4_ids);
    let spread = |key: &str| {
        d4_ids
            .iter()
            .map(|(_, r)| r.breakdown[key].abs())
            .collect::<BTreeSet<i64>>()
    };
    let (l1, l2) = (spread("lk_lambda"), spread("lk_lambda_prime"));
    let covered = [0, 1, 2].iter().all(|x| l1.contains(x) && l2.contains(x));
    out.record(
        6,
        bad.is_empty() && covered && d4_ids.len() >= 20,
        format!(
            "{}, |lk| seen {l1:?} and {l2:?}",
            summary(d4_ids.len(), &bad)
        ),
    );

    // Criterion 7: odd-linking bounds on every K7.
    let bounds: Vec<(String, BoundReport)> = k7
        .iter()
        .map(|c| (c.name.clone(), verify_fm_bounds(&c.report).unwrap()))
        .collect();
    let bad: Vec<String> = bounds
        .iter()
        .filter(|(_, b)| !b.holds)
        .map(|(n, _)| n.clone())
        .collect();
    out.record(7, bad.is_empty(), summary(bounds.len(), &bad));

    // Criterion 8: Σ7 positive odd, and the search finds Σ7 = 1 with 14 + 7 Hopf links.
    let mut bad: Vec<String> = Vec::new();
    for c in &k7 {
        match census_k7(&c.report) {
            Ok(census) => {
                let s = census.sum_a2_gamma7.unwrap();
                if s <= 0 || s % 2 == 0 {
                    bad.push(format!("{} sum {s}", c.name));
                }
            }
            Err(e) => bad.push(format!("{} {e}", c.name)),
        }
    }
    let found = match &hit {
        Some(h) => {
            let census = census_k7(&invariant_report(&h.embedding, 0).unwrap()).unwrap();
            let exact = census.sum_a2_gamma7 == Some(1)
                && (census.n43_hopf, census.n33_hopf, census.n43_torus24) == (14, 7, 0)
                && census.hopf_links() == 21;
            if !exact {
                bad.push(format!("search census {census:?}"));
            }
            format!("search hit at trial {} (seed {})", h.trial, h.seed)
        }
        None => {
            bad.push("search found nothing".into());
            "no search hit".into()
        }
    };
    out.record(
        8,
        bad.is_empty(),
        format!("{}, {found}", summary(k7.len(), &bad)),
    );

    // Criterion 9: the K6 census splits into the two cases, both observed.
    let mut cases = [0usize; 2];
    let mut bad: Vec<String> = Vec::new();
    for c in k6.iter().skip(1) {
        match census_k6(&c.report) {
            Ok(census) => match census.k6_case {
                Some(K6Case::NoTrefoil) => cases[0] += 1,
                Some(K6Case::OneTrefoil) => cases[1] += 1,
                None => bad.push(c.name.clone()),
            },
            Err(e) => bad.push(format!("{} {e}", c.name)),
        }
    }
    out.record(
        9,
        bad.is_empty() && cases[0] > 0 && cases[1] > 0,
        format!(
            "{}, (0,1) x{} and (1,3) x{}",
            summary(cases[0] + cases[1] + bad.len(), &bad),
            cases[0],
            cases[1]
        ),
    );

    // Criterion 10: both invariant routes agree, and a second direction agrees.
    let mut bad: Vec<String> = Vec::new();
    let (mut knots, mut links) = (0, 0);
    let complete_all: Vec<(&String, &SpatialEmbedding)> = k6
        .iter()
        .chain(&k7)
        .map(|c| (&c.name, &c.embedding))
        .chain(bent.iter().map(|(n, e)| (n, e)))
        .collect();
    let others: Vec<(&String, &SpatialEmbedding)> =
        sticks.iter().chain(&d4).map(|(n, e)| (n, e)).collect();
    for &(name, e) in complete_all.iter().chain(&others) {
        let r = oracle_check(e, 0).unwrap();
        knots += r.knots;
        links += r.links;
        bad.extend(r.mismatches.iter().map(|m| format!("{name}: {m}")));
    }
    for (name, e) in &complete_all {
        let a = k6
            .iter()
            .chain(&k7)
            .find(|c| &c.name == *name)
            .map(|c| c.report.clone());
        let a = a.unwrap_or_else(|| invariant_report(e, 0).unwrap());
        let b = invariant_report(e, 1).unwrap();
        if a.direction == b.direction || !a.same_invariants(&b) {
            bad.push(format!("{name}: second direction disagrees"));
        }
    }
    for (name, e) in &others {
        let check = |s| match e.kind() {
            GraphKind::D4 => verify_d4_alpha(e, s).unwrap().breakdown,
            _ => verify_simon_alpha(e, s).unwrap().breakdown,
        };
        if check(0) != check(1) {
            bad.push(format!("{name}: second direction disagrees"));
        }
    }
    let embeddings = complete_all.len() + others.len();
    out.record(
        10,
        bad.is_empty(),
        format!(
            "{} embeddings, {knots} knot and {links} link diagrams, {} mismatches",
            embeddings,
            bad.len()
        ),
    );

    // Criterion 11: enumeration counts and incidence multiplicities.
    let g6 = complete_graph(6).unwrap();
    let g7 = complete_graph(7).unwrap();
    let k33: Vec<SimpleGraph> = k33_subgraphs_of_k6().iter().map(|h| h.subgraph()).collect();
    let k5: Vec<SimpleGraph> = k5_subgraphs_of_k6().iter().map(|g| g.subgraph()).collect();
    let counts = [
        disjoint_cycle_pairs(&g6, 3, 3).unwrap().len(),
        k33.len(),
        k5.len(),
        cycles_of_length(&g7, 7).len(),
        disjoint_cycle_pairs(&g7, 4, 3).unwrap().len(),
        disjoint_cycle_pairs(&g7, 3, 3).unwrap().len(),
    ];
    let within =
        |fam: &[SimpleGraph], c: &Cycle| fam.iter().filter(|h| h.contains_cycle(c)).count();
    let mult = |k: usize, fam: &[SimpleGraph]| {
        cycles_of_length(&g6, k)
            .iter()
            .map(|c| within(fam, c))
            .collect::<BTreeSet<usize>>()
    };
    let incidences = [mult(6, &k33), mult(5, &k5), mult(4, &k33), mult(4, &k5)];
    let want: [BTreeSet<usize>; 4] = [[1].into(), [1].into(), [2].into(), [2].into()];
    out.record(
        11,
        counts == [10, 10, 6, 360, 105, 70] && incidences == want,
        format!("counts {counts:?}, multiplicities {incidences:?}"),
    );

    let failed: Vec<usize> = out.lines.iter().filter(|l| !l.1).map(|l| l.0).collect();
    println!(
        "acceptance: {}/{} passed in {:.1}s",
        out.lines.len() - failed.len(),
        out.lines.len(),
        start.elapsed().as_secs_f64()
    );
    if failed.is_empty() {
        ExitCode::SUCCESS
    } else {
        println!("failed: {failed:?}");
        ExitCode::FAILURE
    }
}
