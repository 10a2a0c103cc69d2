use std::collections::BTreeMap;
use std::fmt;

use serde::Serialize;

use super::report::InvariantReport;
use crate::error::{arg, Error, Result};
use crate::invariants::{classify_knot, classify_link, KnotClass, LinkClass};

/// The two possible outcomes for a rectilinear K6.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum K6Case {
    /// No trefoil, one Hopf link.
    NoTrefoil,
    /// One trefoil, three Hopf links.
    OneTrefoil,
}

impl fmt::Display for K6Case {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            K6Case::NoTrefoil => "(0,1)",
            K6Case::OneTrefoil => "(1,3)",
        })
    }
}

impl Serialize for K6Case {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

/// Knot and link types of a rectilinear embedding, read from a₂ and lk with
/// each cycle's stick count as the bound.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CensusReport {
    pub graph: String,
    pub embedding: String,
    pub n6_trefoil: usize,
    pub n7_trefoil: usize,
    pub n33_hopf: usize,
    pub n43_hopf: usize,
    pub n43_torus24: usize,
    pub figure_eight: usize,
    pub sum_a2_gamma7: Option<i64>,
    pub k6_case: Option<K6Case>,
    /// Counts keyed `gamma<k>:<class>` and `gamma<k><l>:<class>`.
    pub classes: BTreeMap<String, usize>,
}

impl CensusReport {
    pub fn hopf_links(&self) -> usize {
        self.n33_hopf + self.n43_hopf
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(self).expect("census serializes")
    }
}

fn violation<T>(msg: String) -> Result<T> {
    Err(Error::InvariantViolation(msg))
}

fn tally(r: &InvariantReport) -> Result<CensusReport> {
    if !r.rectilinear {
        return arg("census needs a rectilinear embedding: stick bounds come from straight edges");
    }
    let mut c = CensusReport {
        graph: r.kind.name(),
        embedding: r.id.clone(),
        n6_trefoil: 0,
        n7_trefoil: 0,
        n33_hopf: 0,
        n43_hopf: 0,
        n43_torus24: 0,
        figure_eight: 0,
        sum_a2_gamma7: None,
        k6_case: None,
        classes: BTreeMap::new(),
    };
    for (&k, t) in &r.knots {
        for x in t {
            let class = classify_knot(x.a2, k as u32)?;
            *c.classes.entry(format!("gamma{k}:{class}")).or_default() += 1;
            match (class, k) {
                (KnotClass::Trefoil, 6) => c.n6_trefoil += 1,
                (KnotClass::Trefoil, 7) => c.n7_trefoil += 1,
                (KnotClass::FigureEight, _) => c.figure_eight += 1,
                _ => {}
            }
        }
    }
    for (&(k, l), t) in &r.links {
        for x in t {
            let class = classify_link(x.lk, (k + l) as u32)?;
            *c.classes.entry(format!("gamma{k}{l}:{class}")).or_default() += 1;
            match (class, k, l) {
                (LinkClass::Hopf, 3, 3) => c.n33_hopf += 1,
                (LinkClass::Hopf, 4, 3) => c.n43_hopf += 1,
                (LinkClass::Torus24, 4, 3) => c.n43_torus24 += 1,
                _ => {}
            }
        }
    }
    Ok(c)
}

/// Census of a rectilinear K6: (trefoils among 6-cycles, Hopf links) must be
/// (0,1) or (1,3).
pub fn census_k6(r: &InvariantReport) -> Result<CensusReport> {
    r.require_order(6, "K6 census")?;
    let mut c = tally(r)?;
    let case = match (c.n6_trefoil, c.n33_hopf) {
        (0, 1) => K6Case::NoTrefoil,
        (1, 3) => K6Case::OneTrefoil,
        (t, h) => return violation(format!("K6 census ({t},{h}) is neither (0,1) nor (1,3)")),
    };
    if (c.n6_trefoil == 0) != (c.n33_hopf == 1) || (c.n6_trefoil > 0) != (c.n33_hopf == 3) {
        return violation(format!(
            "K6 census {case} breaks the trefoil/Hopf correspondence"
        ));
    }
    c.k6_case = Some(case);
    Ok(c)
}

/// Census of a rectilinear K7: Σ_{Γ7} a₂ is positive and odd, and equals 1
/// exactly when the nontrivial links are 7 + 14 Hopf links and no
/// (2,4)-torus link.
pub fn census_k7(r: &InvariantReport) -> Result<CensusReport> {
    r.require_order(7, "K7 census")?;
    let mut c = tally(r)?;
    let s = r.sum_a2(7);
    c.sum_a2_gamma7 = Some(s);
    if s <= 0 || s % 2 == 0 {
        return violation(format!("sum of a2 over 7-cycles is {s}, not positive odd"));
    }
    let minimal_links = c.n43_torus24 == 0 && c.n43_hopf == 14 && c.n33_hopf == 7;
    if (s == 1) != minimal_links {
        return violation(format!(
            "sum {s} with {} + {} Hopf links and {} (2,4)-torus links",
            c.n33_hopf, c.n43_hopf, c.n43_torus24
        ));
    }
    Ok(c)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::{moment_curve_embedding, random_polyline, random_rectilinear, GraphKind};
    use crate::theorems::invariant_report;

    #[test]
    fn moment_k6_is_no_trefoil_case() {
        let c =
            census_k6(&invariant_report(&moment_curve_embedding(6).unwrap(), 0).unwrap()).unwrap();
        assert_eq!(c.k6_case, Some(K6Case::NoTrefoil));
        assert_eq!(c.k6_case.unwrap().to_string(), "(0,1)");
        assert_eq!((c.n6_trefoil, c.n33_hopf), (0, 1));
        assert_eq!(c.classes["gamma33:hopf"], 1);
        assert_eq!(c.classes["gamma33:trivial"], 9);
        assert_eq!(c.classes["gamma5:unknot"], 72);
        assert_eq!(c.to_json()["k6_case"], "(0,1)");
    }

    #[test]
    fn k7_sum_positive_odd() {
        for seed in 0..3 {
            let r = invariant_report(&random_rectilinear(7, seed, 1000).unwrap(), 0).unwrap();
            let c = census_k7(&r).unwrap();
            let s = c.sum_a2_gamma7.unwrap();
            assert!(s > 0 && s % 2 == 1);
            assert_eq!(c.n33_hopf + c.n43_hopf + c.n43_torus24, {
                r.links.values().flatten().filter(|x| x.lk != 0).count()
            });
        }
    }

    #[test]
    fn rejects_bent_edges() {
        let e = random_polyline(GraphKind::Complete(6), 2, 20, 1).unwrap();
        let r = invariant_report(&e, 0).unwrap();
        assert!(matches!(census_k6(&r), Err(Error::Argument(_))));
    }

    #[test]
    fn tampered_report_is_a_violation() {
        let mut r = invariant_report(&moment_curve_embedding(6).unwrap(), 0).unwrap();
        r.knots.get_mut(&5).unwrap()[0].a2 = 1;
        assert!(matches!(census_k6(&r), Err(Error::InvariantViolation(_))));
        let mut r = invariant_report(&moment_curve_embedding(6).unwrap(), 0).unwrap();
        for x in r.links.get_mut(&(3, 3)).unwrap().iter_mut() {
            x.lk = 0;
        }
        assert!(matches!(census_k6(&r), Err(Error::InvariantViolation(_))));
    }
}
