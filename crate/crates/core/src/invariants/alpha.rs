use std::fmt;

use super::conway::{conway_a2, linking_number};
use crate::diagram::{diagram_for_cycle, diagram_for_d4_cycle, diagram_for_d4_pair};
use crate::error::{arg, Result};
use crate::geometry::{project, Direction, GraphKind, Projection, SpatialEmbedding};
use crate::graph::{cycles_of_length, D4Graph, LabeledK33, LabeledK5, SimonLabeling};

/// Which ω table to use.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Family {
    K5,
    K33,
    D4,
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Family::K5 => "K5",
            Family::K33 => "K33",
            Family::D4 => "D4",
        })
    }
}

/// Σ ω(γ)·a₂(γ) with ω = +1 on `long`-cycles, −1 on 4-cycles.
fn weighted<L: SimonLabeling>(proj: &Projection, l: &L, long: usize) -> Result<i64> {
    let g = l.subgraph();
    let mut total = 0;
    for c in cycles_of_length(&g, long) {
        total += conway_a2(&diagram_for_cycle(proj, &c)?)?;
    }
    for c in cycles_of_length(&g, 4) {
        total -= conway_a2(&diagram_for_cycle(proj, &c)?)?;
    }
    Ok(total)
}

/// α of a labeled K5 inside the projected graph: 5-cycles +1, 4-cycles −1.
pub fn alpha_k5(proj: &Projection, l: &LabeledK5) -> Result<i64> {
    weighted(proj, l, 5)
}

/// α of a labeled K3,3 inside the projected graph: 6-cycles +1, 4-cycles −1.
pub fn alpha_k33(proj: &Projection, l: &LabeledK33) -> Result<i64> {
    weighted(proj, l, 6)
}

/// α of a D4 projection: 4-cycles weighted by the parity of their edge indices.
pub fn alpha_d4(proj: &Projection) -> Result<i64> {
    if proj.kind != GraphKind::D4 {
        return arg(format!("D4 weights applied to {}", proj.kind));
    }
    let mut total = 0;
    for c in D4Graph::four_cycles() {
        total += D4Graph::omega(&c) * conway_a2(&diagram_for_d4_cycle(proj, &c)?)?;
    }
    Ok(total)
}

/// Linking numbers of λ = (e1∪e2, e5∪e6) and λ' = (e3∪e4, e7∪e8).
pub fn d4_linking_numbers(proj: &Projection) -> Result<(i64, i64)> {
    if proj.kind != GraphKind::D4 {
        return arg(format!("D4 pairs requested on {}", proj.kind));
    }
    let [(a, b), (c, d)] = D4Graph::lambda_pairs();
    Ok((
        linking_number(&diagram_for_d4_pair(proj, &a, &b)?)?,
        linking_number(&diagram_for_d4_pair(proj, &c, &d)?)?,
    ))
}

/// α_ω of an embedding of K5, K3,3 or D4 under its identity labeling.
pub fn alpha_omega(e: &SpatialEmbedding, d: &Direction, family: Family) -> Result<i64> {
    let proj = project(e, d)?;
    match (family, e.kind()) {
        (Family::K5, GraphKind::Complete(5)) => alpha_k5(&proj, &LabeledK5::new([1, 2, 3, 4, 5])?),
        (Family::K33, GraphKind::K33) => alpha_k33(&proj, &LabeledK33::new([1, 2, 3, 4, 5, 6])?),
        (Family::D4, GraphKind::D4) => alpha_d4(&proj),
        (f, k) => arg(format!("{f} weights do not apply to a {k} embedding")),
    }
}
