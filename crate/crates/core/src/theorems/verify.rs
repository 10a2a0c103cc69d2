use std::collections::BTreeMap;

use serde::Serialize;

use super::report::InvariantReport;
use super::try_map;
use crate::diagram::{
    diagram_for_cycle, diagram_for_d4_cycle, diagram_for_d4_pair, diagram_for_pair,
    diagram_for_walks, LinkDiagram,
};
use crate::error::{arg, Error, Result};
use crate::geometry::{project, random_generic_direction, GraphKind, SpatialEmbedding};
use crate::graph::{
    all_cycles, disjoint_cycle_pairs, k33_subgraphs_of_k6, k5_subgraphs_of_k6, D4Graph, LabeledK33,
    LabeledK5,
};
use crate::invariants::{
    alpha_d4, alpha_k33, alpha_k5, conway_seifert, conway_skein, d4_linking_numbers,
    linking_number, simon_invariant,
};

/// Both sides of an integer identity, with the sums they were built from.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct IdentityReport {
    pub identity: String,
    pub lhs: i64,
    pub rhs: i64,
    pub holds: bool,
    pub breakdown: BTreeMap<String, i64>,
}

impl IdentityReport {
    fn new(identity: &str, lhs: i64, rhs: i64, breakdown: &[(&str, i64)]) -> Self {
        Self {
            identity: identity.into(),
            lhs,
            rhs,
            holds: lhs == rhs,
            breakdown: breakdown.iter().map(|&(k, v)| (k.to_string(), v)).collect(),
        }
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(self).expect("identity report serializes")
    }
}

/// A value and the lower bound it must reach.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Bound {
    pub value: i64,
    pub at_least: i64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BoundReport {
    pub identity: String,
    pub checks: BTreeMap<String, Bound>,
    pub holds: bool,
}

impl BoundReport {
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(self).expect("bound report serializes")
    }
}

/// Linear relation `a·(Σ7, Σ6, Σ5) = b·(L43, L33, 1)` between the a₂ sums
/// over 7-, 6- and 5-cycles and the lk² sums over (4,3)- and (3,3)-pairs.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub(crate) struct Relation {
    pub a: [i64; 3],
    pub b: [i64; 3],
}

impl Relation {
    fn scaled(self, k: i64) -> Self {
        Self {
            a: self.a.map(|x| k * x),
            b: self.b.map(|x| k * x),
        }
    }

    fn plus(self, o: Self) -> Self {
        Self {
            a: [0, 1, 2].map(|i| self.a[i] + o.a[i]),
            b: [0, 1, 2].map(|i| self.b[i] + o.b[i]),
        }
    }

    fn sides(&self, s: [i64; 3], l: [i64; 3]) -> (i64, i64) {
        let dot = |c: [i64; 3], x: [i64; 3]| c.iter().zip(x).map(|(c, x)| c * x).sum();
        (dot(self.a, s), dot(self.b, l))
    }
}

pub(crate) const K7_MAIN: Relation = Relation {
    a: [7, -6, -2],
    b: [2, 0, -21],
};
pub(crate) const K7_SPLIT_A: Relation = Relation {
    a: [14, -14, 0],
    b: [4, -1, -35],
};
pub(crate) const K7_SPLIT_B: Relation = Relation {
    a: [7, 0, -14],
    b: [2, 3, -42],
};
pub(crate) const K7_LEMMA: Relation = Relation {
    a: [0, 2, -4],
    b: [0, 1, -7],
};

fn k7_sums(r: &InvariantReport) -> ([i64; 3], [i64; 3]) {
    (
        [r.sum_a2(7), r.sum_a2(6), r.sum_a2(5)],
        [r.sum_lk2(4, 3), r.sum_lk2(3, 3), 1],
    )
}

fn k7_breakdown(r: &InvariantReport) -> [(&'static str, i64); 5] {
    [
        ("sum_a2_gamma7", r.sum_a2(7)),
        ("sum_a2_gamma6", r.sum_a2(6)),
        ("sum_a2_gamma5", r.sum_a2(5)),
        ("sum_lk2_gamma43", r.sum_lk2(4, 3)),
        ("sum_lk2_gamma33", r.sum_lk2(3, 3)),
    ]
}

fn k7_identity(r: &InvariantReport, name: &str, rel: Relation) -> Result<IdentityReport> {
    r.require_order(7, name)?;
    let (s, l) = k7_sums(r);
    let (lhs, rhs) = rel.sides(s, l);
    Ok(IdentityReport::new(name, lhs, rhs, &k7_breakdown(r)))
}

/// K6: 2(Σ_{Γ6} a₂ − Σ_{Γ5} a₂) = Σ_{Γ3,3} lk² − 1.
pub fn verify_main1(r: &InvariantReport) -> Result<IdentityReport> {
    r.require_order(6, "k6-refined")?;
    let (s6, s5, l33) = (r.sum_a2(6), r.sum_a2(5), r.sum_lk2(3, 3));
    Ok(IdentityReport::new(
        "k6-refined",
        2 * (s6 - s5),
        l33 - 1,
        &[
            ("sum_a2_gamma6", s6),
            ("sum_a2_gamma5", s5),
            ("sum_lk2_gamma33", l33),
        ],
    ))
}

/// K7: 7Σ_{Γ7} a₂ − 6Σ_{Γ6} a₂ − 2Σ_{Γ5} a₂ = 2Σ_{Γ4,3} lk² − 21.
pub fn verify_main2(r: &InvariantReport) -> Result<IdentityReport> {
    k7_identity(r, "k7-refined", K7_MAIN)
}

/// The two K7 identities that together give the one checked by
/// [`verify_main2`]:
/// 14(Σ7 − Σ6) = 4L43 − L33 − 35 and 7(Σ7 − 2Σ5) = 2L43 + 3L33 − 42.
pub fn verify_main3(r: &InvariantReport) -> Result<(IdentityReport, IdentityReport)> {
    Ok((
        k7_identity(r, "k7-split-a", K7_SPLIT_A)?,
        k7_identity(r, "k7-split-b", K7_SPLIT_B)?,
    ))
}

/// K7: 2(Σ_{Γ6} a₂ − 2Σ_{Γ5} a₂) = Σ_{Γ3,3} lk² − 7.
pub fn verify_lemma_k7(r: &InvariantReport) -> Result<IdentityReport> {
    k7_identity(r, "k7-lemma", K7_LEMMA)
}

/// 3·(split-a) + (split-b) against 7·(refined), as residuals `lhs − rhs`.
/// The combination holds coefficient by coefficient, so both sides agree on
/// any report; a mismatch means the relation tables are wrong.
pub fn combination_check(r: &InvariantReport) -> Result<IdentityReport> {
    r.require_order(7, "k7-combination")?;
    let (s, l) = k7_sums(r);
    let residual = |rel: Relation| {
        let (a, b) = rel.sides(s, l);
        a - b
    };
    let combined = K7_SPLIT_A.scaled(3).plus(K7_SPLIT_B);
    let target = K7_MAIN.scaled(7);
    let symbolic = i64::from(combined == target);
    Ok(IdentityReport::new(
        "k7-combination",
        residual(combined),
        residual(target),
        &[
            ("residual_split_a", residual(K7_SPLIT_A)),
            ("residual_split_b", residual(K7_SPLIT_B)),
            ("residual_refined", residual(K7_MAIN)),
            ("coefficients_match", symbolic),
        ],
    ))
}

/// K6: Σ_{Γ3,3} lk is odd. K7: Σ_{Γ7} a₂ is odd.
pub fn verify_parity(r: &InvariantReport) -> Result<IdentityReport> {
    match r.order() {
        6 => {
            let s = r.sum_lk(3, 3);
            Ok(IdentityReport::new(
                "k6-linking-parity",
                s.rem_euclid(2),
                1,
                &[("sum_lk_gamma33", s)],
            ))
        }
        7 => {
            let s = r.sum_a2(7);
            Ok(IdentityReport::new(
                "k7-arf-parity",
                s.rem_euclid(2),
                1,
                &[("sum_a2_gamma7", s)],
            ))
        }
        _ => arg(format!(
            "parity checks need a K6 or K7 report, got {}",
            r.kind
        )),
    }
}

/// At least 7 pairs in Γ3,3 and 14 in Γ4,3 with odd linking number, hence
/// Σ_{Γ3,3} lk² ≥ 7 and Σ_{Γ4,3} lk² ≥ 14.
pub fn verify_fm_bounds(r: &InvariantReport) -> Result<BoundReport> {
    r.require_order(7, "fm-bounds")?;
    let odd = |k, l| r.links(k, l).iter().filter(|x| x.lk % 2 != 0).count() as i64;
    let checks: BTreeMap<String, Bound> = [
        ("odd_lk_gamma33", odd(3, 3), 7),
        ("odd_lk_gamma43", odd(4, 3), 14),
        ("sum_lk2_gamma33", r.sum_lk2(3, 3), 7),
        ("sum_lk2_gamma43", r.sum_lk2(4, 3), 14),
    ]
    .into_iter()
    .map(|(k, value, at_least)| (k.to_string(), Bound { value, at_least }))
    .collect();
    let holds = checks.values().all(|b| b.value >= b.at_least);
    Ok(BoundReport {
        identity: "fm-bounds".into(),
        checks,
        holds,
    })
}

/// K6: Σ over the ten K3,3 subgraphs of ℒ² − Σ over the six K5 subgraphs of
/// ℒ² = 4·Σ_{Γ3,3} lk².
pub fn verify_simon_lemma(e: &SpatialEmbedding, seed: u64) -> Result<IdentityReport> {
    if e.kind() != GraphKind::Complete(6) {
        return arg(format!("simon-sum needs a K6 embedding, got {}", e.kind()));
    }
    let proj = project(e, &random_generic_direction(e, seed)?)?;
    let k33: i64 = try_map(&k33_subgraphs_of_k6(), |h| simon_invariant(&proj, h))?
        .iter()
        .map(|x| x * x)
        .sum();
    let k5: i64 = try_map(&k5_subgraphs_of_k6(), |g| simon_invariant(&proj, g))?
        .iter()
        .map(|x| x * x)
        .sum();
    let g = e
        .kind()
        .simple_graph()
        .ok_or_else(|| Error::Internal("K6 without simple form".into()))?;
    let pairs = disjoint_cycle_pairs(&g, 3, 3)?;
    let lk2: i64 = try_map(&pairs, |p| linking_number(&diagram_for_pair(&proj, p)?))?
        .iter()
        .map(|x| x * x)
        .sum();
    Ok(IdentityReport::new(
        "simon-sum",
        k33 - k5,
        4 * lk2,
        &[
            ("sum_simon2_k33", k33),
            ("sum_simon2_k5", k5),
            ("sum_lk2_gamma33", lk2),
        ],
    ))
}

/// K5 or K3,3 under the identity labeling: ℒ² = 8α + 1.
pub fn verify_simon_alpha(e: &SpatialEmbedding, seed: u64) -> Result<IdentityReport> {
    let proj = project(e, &random_generic_direction(e, seed)?)?;
    let (simon, alpha) = match e.kind() {
        GraphKind::Complete(5) => {
            let l = LabeledK5::new([1, 2, 3, 4, 5])?;
            (simon_invariant(&proj, &l)?, alpha_k5(&proj, &l)?)
        }
        GraphKind::K33 => {
            let l = LabeledK33::new([1, 2, 3, 4, 5, 6])?;
            (simon_invariant(&proj, &l)?, alpha_k33(&proj, &l)?)
        }
        k => return arg(format!("simon-alpha needs a K5 or K33 embedding, got {k}")),
    };
    Ok(IdentityReport::new(
        "simon-alpha",
        simon * simon,
        8 * alpha + 1,
        &[("simon", simon), ("alpha", alpha)],
    ))
}

/// D4: |α| = |lk(λ)·lk(λ')|.
pub fn verify_d4_alpha(e: &SpatialEmbedding, seed: u64) -> Result<IdentityReport> {
    if e.kind() != GraphKind::D4 {
        return arg(format!("d4-alpha needs a D4 embedding, got {}", e.kind()));
    }
    let proj = project(e, &random_generic_direction(e, seed)?)?;
    let alpha = alpha_d4(&proj)?;
    let (a, b) = d4_linking_numbers(&proj)?;
    Ok(IdentityReport::new(
        "d4-alpha",
        alpha.abs(),
        (a * b).abs(),
        &[("alpha", alpha), ("lk_lambda", a), ("lk_lambda_prime", b)],
    ))
}

/// Every identity and bound that applies to the graph of `e`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Verification {
    /// Present for K6 and K7.
    pub report: Option<InvariantReport>,
    pub identities: Vec<IdentityReport>,
    pub bounds: Vec<BoundReport>,
}

impl Verification {
    pub fn holds(&self) -> bool {
        self.identities.iter().all(|r| r.holds) && self.bounds.iter().all(|b| b.holds)
    }

    /// Names of the identities and bounds that fail.
    pub fn failures(&self) -> Vec<String> {
        let ids = self
            .identities
            .iter()
            .filter(|r| !r.holds)
            .map(|r| r.identity.clone());
        ids.chain(
            self.bounds
                .iter()
                .filter(|b| !b.holds)
                .map(|b| b.identity.clone()),
        )
        .collect()
    }
}

/// K6: the refined identity, linking parity and the Simon sum. K7: the
/// refined identity, both splits, the lemma, their combination, Arf parity
/// and the odd-linking bounds. K5, K3,3: ℒ² = 8α + 1. D4: |α| = |lk·lk'|.
pub fn verify_embedding(e: &SpatialEmbedding, proj_seed: u64) -> Result<Verification> {
    let mut v = Verification {
        report: None,
        identities: Vec::new(),
        bounds: Vec::new(),
    };
    match e.kind() {
        GraphKind::Complete(6) => {
            let r = super::invariant_report(e, proj_seed)?;
            v.identities = vec![
                verify_main1(&r)?,
                verify_parity(&r)?,
                verify_simon_lemma(e, proj_seed)?,
            ];
            v.report = Some(r);
        }
        GraphKind::Complete(7) => {
            let r = super::invariant_report(e, proj_seed)?;
            let (a, b) = verify_main3(&r)?;
            v.identities = vec![
                verify_main2(&r)?,
                a,
                b,
                verify_lemma_k7(&r)?,
                combination_check(&r)?,
                verify_parity(&r)?,
            ];
            v.bounds = vec![verify_fm_bounds(&r)?];
            v.report = Some(r);
        }
        GraphKind::Complete(5) | GraphKind::K33 => {
            v.identities = vec![verify_simon_alpha(e, proj_seed)?]
        }
        GraphKind::D4 => v.identities = vec![verify_d4_alpha(e, proj_seed)?],
        k => return arg(format!("no identities are checked for {k}")),
    }
    Ok(v)
}

/// Outcome of recomputing every cycle and pair diagram by the skein relation.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct OracleReport {
    pub knots: usize,
    pub links: usize,
    pub mismatches: Vec<String>,
}

impl OracleReport {
    pub fn ok(&self) -> bool {
        self.mismatches.is_empty()
    }
}

fn knot_check(label: String, d: &LinkDiagram) -> Result<Option<String>> {
    let (s, k) = (conway_seifert(d)?, conway_skein(d)?);
    Ok((s != k).then(|| format!("{label}: seifert {s}, skein {k}")))
}

fn link_check(label: String, d: &LinkDiagram) -> Result<Option<String>> {
    let (lk, k) = (linking_number(d)?, conway_skein(d)?);
    let ok = k.coefficient(0) == 0 && k.coefficient(1) == lk;
    Ok((!ok).then(|| format!("{label}: lk {lk}, skein {k}")))
}

/// Checks the Seifert route against the skein route on every cycle of `e`,
/// and the crossing count of lk against the skein z coefficient on every
/// disjoint pair.
pub fn oracle_check(e: &SpatialEmbedding, seed: u64) -> Result<OracleReport> {
    let proj = project(e, &random_generic_direction(e, seed)?)?;
    let mut knots: Vec<Option<String>> = Vec::new();
    let mut links: Vec<Option<String>> = Vec::new();
    match e.kind().simple_graph() {
        Some(g) => {
            let cycles = all_cycles(&g);
            knots = try_map(&cycles, |c| {
                knot_check(c.bracket(), &diagram_for_cycle(&proj, c)?)
            })?;
            for k in 3..=g.order() {
                for l in 3..=k.min(g.order() - k) {
                    let pairs = disjoint_cycle_pairs(&g, k, l)?;
                    links.extend(try_map(&pairs, |p| {
                        link_check(p.bracket(), &diagram_for_pair(&proj, p)?)
                    })?);
                }
            }
        }
        None => {
            for c in D4Graph::four_cycles() {
                knots.push(knot_check(
                    format!("{c:?}"),
                    &diagram_for_d4_cycle(&proj, &c)?,
                )?);
            }
            for c in D4Graph::two_cycles() {
                knots.push(knot_check(
                    format!("{c:?}"),
                    &diagram_for_walks(&proj, &[D4Graph::walk_two(&c)])?,
                )?);
            }
            for (a, b) in D4Graph::lambda_pairs() {
                links.push(link_check(
                    format!("{a:?}{b:?}"),
                    &diagram_for_d4_pair(&proj, &a, &b)?,
                )?);
            }
        }
    }
    Ok(OracleReport {
        knots: knots.len(),
        links: links.len(),
        mismatches: knots.into_iter().chain(links).flatten().collect(),
    })
}
