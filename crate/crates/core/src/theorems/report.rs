use std::collections::BTreeMap;

use serde_json::{json, Map, Value};

use super::try_map;
use crate::diagram::{diagram_for_cycle, diagram_for_pair};
use crate::error::{arg, Error, Result};
use crate::geometry::{
    embedding_to_json, project, random_generic_direction, GraphKind, Point3, Projection,
    SpatialEmbedding,
};
use crate::graph::{cycles_of_length, disjoint_cycle_pairs, Cycle, CyclePair};
use crate::invariants::{conway_a2, linking_number};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KnotEntry {
    pub cycle: Cycle,
    pub a2: i64,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinkEntry {
    pub pair: CyclePair,
    pub lk: i64,
}

/// a₂ of every cycle of length ≥ 4 and lk of every disjoint cycle pair of a
/// complete graph embedding, all read off one projection.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InvariantReport {
    pub kind: GraphKind,
    /// FNV-1a hash of the embedding's JSON form.
    pub id: String,
    pub rectilinear: bool,
    pub proj_seed: u64,
    pub direction: Point3,
    pub knots: BTreeMap<usize, Vec<KnotEntry>>,
    pub links: BTreeMap<(usize, usize), Vec<LinkEntry>>,
}

fn fnv1a(bytes: &[u8]) -> u64 {
    bytes.iter().fold(0xcbf2_9ce4_8422_2325, |h, &b| {
        (h ^ b as u64).wrapping_mul(0x0100_0000_01b3)
    })
}

/// Short stable identifier: FNV-1a of the embedding's JSON form, in hex.
pub fn embedding_id(e: &SpatialEmbedding) -> String {
    format!(
        "{:016x}",
        fnv1a(embedding_to_json(e).to_string().as_bytes())
    )
}

/// Report for `e` under the seeded generic direction.
pub fn invariant_report(e: &SpatialEmbedding, seed: u64) -> Result<InvariantReport> {
    let d = random_generic_direction(e, seed)?;
    let proj = project(e, &d)?;
    let mut r = report_for_projection(e, &proj)?;
    r.proj_seed = seed;
    Ok(r)
}

/// Report for an already computed projection; `proj_seed` is left at 0.
pub fn report_for_projection(e: &SpatialEmbedding, proj: &Projection) -> Result<InvariantReport> {
    let GraphKind::Complete(n) = e.kind() else {
        return arg(format!(
            "invariant reports cover complete graphs, not {}",
            e.kind()
        ));
    };
    let g = e
        .kind()
        .simple_graph()
        .ok_or_else(|| Error::Internal("complete graph without simple form".into()))?;
    let mut knots = BTreeMap::new();
    for k in 4..=n {
        let cycles = cycles_of_length(&g, k);
        let entries = try_map(&cycles, |c| {
            Ok(KnotEntry {
                cycle: c.clone(),
                a2: conway_a2(&diagram_for_cycle(proj, c)?)?,
            })
        })?;
        knots.insert(k, entries);
    }
    let mut links = BTreeMap::new();
    for k in 3..=n {
        for l in 3..=k.min(n - k) {
            let pairs = disjoint_cycle_pairs(&g, k, l)?;
            let entries = try_map(&pairs, |p| {
                Ok(LinkEntry {
                    pair: p.clone(),
                    lk: linking_number(&diagram_for_pair(proj, p)?)?,
                })
            })?;
            links.insert((k, l), entries);
        }
    }
    Ok(InvariantReport {
        kind: e.kind(),
        id: embedding_id(e),
        rectilinear: e.is_rectilinear(),
        proj_seed: 0,
        direction: proj.direction.d.clone(),
        knots,
        links,
    })
}

impl InvariantReport {
    pub fn order(&self) -> usize {
        match self.kind {
            GraphKind::Complete(n) => n,
            _ => 0,
        }
    }

    pub fn knots(&self, k: usize) -> &[KnotEntry] {
        self.knots.get(&k).map(Vec::as_slice).unwrap_or(&[])
    }

    pub fn links(&self, k: usize, l: usize) -> &[LinkEntry] {
        self.links.get(&(k, l)).map(Vec::as_slice).unwrap_or(&[])
    }

    /// Σ a₂ over the k-cycles.
    pub fn sum_a2(&self, k: usize) -> i64 {
        self.knots(k).iter().map(|x| x.a2).sum()
    }

    /// Σ lk² over the (k, l) pairs.
    pub fn sum_lk2(&self, k: usize, l: usize) -> i64 {
        self.links(k, l).iter().map(|x| x.lk * x.lk).sum()
    }

    pub fn sum_lk(&self, k: usize, l: usize) -> i64 {
        self.links(k, l).iter().map(|x| x.lk).sum()
    }

    /// True when both reports carry the same invariant values, whatever
    /// direction they were computed from.
    pub fn same_invariants(&self, other: &Self) -> bool {
        self.kind == other.kind && self.knots == other.knots && self.links == other.links
    }

    pub(crate) fn require_order(&self, n: usize, what: &str) -> Result<()> {
        if self.order() != n {
            return arg(format!("{what} needs a K{n} report, got {}", self.kind));
        }
        Ok(())
    }

    pub fn to_json(&self) -> Value {
        let mut knots = Map::new();
        let mut sums_a2 = Map::new();
        for (k, t) in &self.knots {
            let rows: Vec<Value> = t
                .iter()
                .map(|x| json!({"cycle": x.cycle.bracket(), "a2": x.a2}))
                .collect();
            knots.insert(k.to_string(), Value::Array(rows));
            sums_a2.insert(k.to_string(), json!(self.sum_a2(*k)));
        }
        let mut links = Map::new();
        let mut sums_lk2 = Map::new();
        for ((k, l), t) in &self.links {
            let rows: Vec<Value> = t
                .iter()
                .map(|x| json!({"pair": x.pair.bracket(), "lk": x.lk}))
                .collect();
            links.insert(format!("{k},{l}"), Value::Array(rows));
            sums_lk2.insert(format!("{k},{l}"), json!(self.sum_lk2(*k, *l)));
        }
        let d = &self.direction;
        json!({
            "graph": self.kind.name(),
            "embedding": self.id,
            "rectilinear": self.rectilinear,
            "proj_seed": self.proj_seed,
            "direction": [d.x.to_string(), d.y.to_string(), d.z.to_string()],
            "knots": knots,
            "links": links,
            "sums": {"a2": sums_a2, "lk2": sums_lk2},
        })
    }

    /// One row per cycle (`a2`) and per pair (`lk`).
    pub fn to_csv(&self) -> Result<String> {
        let mut w = csv::Writer::from_writer(Vec::new());
        let io = |e: csv::Error| Error::Internal(format!("csv: {e}"));
        w.write_record(["table", "cycles", "invariant", "value"])
            .map_err(io)?;
        for (k, t) in &self.knots {
            for x in t {
                w.write_record([
                    format!("gamma{k}"),
                    x.cycle.bracket(),
                    "a2".into(),
                    x.a2.to_string(),
                ])
                .map_err(io)?;
            }
        }
        for ((k, l), t) in &self.links {
            for x in t {
                w.write_record([
                    format!("gamma{k}{l}"),
                    x.pair.bracket(),
                    "lk".into(),
                    x.lk.to_string(),
                ])
                .map_err(io)?;
            }
        }
        let bytes = w
            .into_inner()
            .map_err(|e| Error::Internal(format!("csv: {e}")))?;
        String::from_utf8(bytes).map_err(|e| Error::Internal(e.to_string()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::{moment_curve_embedding, random_rectilinear};

    #[test]
    fn moment_k6_tables() {
        let r = invariant_report(&moment_curve_embedding(6).unwrap(), 0).unwrap();
        assert_eq!(r.knots(4).len(), 45);
        assert_eq!(r.knots(5).len(), 72);
        assert_eq!(r.knots(6).len(), 60);
        assert_eq!(r.links(3, 3).len(), 10);
        assert!(r.knots.values().flatten().all(|x| x.a2 == 0));
        let linked: Vec<_> = r.links(3, 3).iter().filter(|x| x.lk != 0).collect();
        assert_eq!(linked.len(), 1);
        assert_eq!(linked[0].lk.abs(), 1);
        assert!(r.rectilinear);
    }

    #[test]
    fn k7_table_sizes() {
        let r = invariant_report(&random_rectilinear(7, 1, 1000).unwrap(), 0).unwrap();
        let sizes: Vec<usize> = (4..=7).map(|k| r.knots(k).len()).collect();
        assert_eq!(sizes, vec![105, 252, 420, 360]);
        assert_eq!(r.links(4, 3).len(), 105);
        assert_eq!(r.links(3, 3).len(), 70);
        assert_eq!(r.links.len(), 2);
    }

    #[test]
    fn direction_independent() {
        let e = random_rectilinear(6, 9, 1000).unwrap();
        let a = invariant_report(&e, 1).unwrap();
        let b = invariant_report(&e, 2).unwrap();
        assert_ne!(a.direction, b.direction);
        assert!(a.same_invariants(&b));
        assert_eq!(a.id, b.id);
    }

    #[test]
    fn serialized_forms() {
        let r = invariant_report(&moment_curve_embedding(6).unwrap(), 0).unwrap();
        let j = r.to_json();
        assert_eq!(j["graph"], "K6");
        assert_eq!(j["knots"]["6"].as_array().unwrap().len(), 60);
        assert_eq!(j["sums"]["lk2"]["3,3"], 1);
        let csv = r.to_csv().unwrap();
        assert_eq!(csv.lines().count(), 1 + 45 + 72 + 60 + 10);
        assert!(csv.contains("gamma33,[456]∪[123],lk,"));
        assert!(csv.contains("gamma6,[123456],a2,0"));
    }

    #[test]
    fn rejects_non_complete() {
        let e = crate::geometry::random_polyline(GraphKind::K33, 1, 20, 0).unwrap();
        assert!(invariant_report(&e, 0).is_err());
    }
}
