use crate::error::{arg, Result};
use crate::geometry::{project, Direction, GraphKind, Projection, SpatialEmbedding};
use crate::graph::{LabeledK33, LabeledK5, OrientedEdge, SimonLabeling};

fn edge_of(proj: &Projection, e: &OrientedEdge) -> Result<(usize, i64)> {
    let key = if e.tail < e.head {
        (e.tail, e.head)
    } else {
        (e.head, e.tail)
    };
    match proj.edges.iter().position(|&x| x == key) {
        Some(i) => Ok((i, if proj.edges[i].0 == e.tail { 1 } else { -1 })),
        None => arg(format!(
            "edge {}-{} is not in the projected graph",
            e.tail, e.head
        )),
    }
}

/// Signed count of crossings between the images of two oriented edges.
pub fn edge_linking(proj: &Projection, x: &OrientedEdge, y: &OrientedEdge) -> Result<i64> {
    let (ex, ox) = edge_of(proj, x)?;
    let (ey, oy) = edge_of(proj, y)?;
    let mut s = 0;
    for c in &proj.crossings {
        let (a, b) = (proj.segments[c.over].edge, proj.segments[c.under].edge);
        if (a == ex && b == ey) || (a == ey && b == ex) {
            s += c.sign as i64;
        }
    }
    Ok(s * ox * oy)
}

/// ℒ = Σ ε(x, y)·l(x, y) over unordered pairs of disjoint template edges.
pub fn simon_invariant<L: SimonLabeling>(proj: &Projection, labeling: &L) -> Result<i64> {
    let es = labeling.oriented_edges();
    let mut total = 0;
    for i in 0..es.len() {
        for j in i + 1..es.len() {
            if !es[i].shares_vertex(&es[j]) {
                total += labeling.epsilon(i, j) * edge_linking(proj, &es[i], &es[j])?;
            }
        }
    }
    Ok(total)
}

/// ℒ of a K5 or K3,3 embedding under its identity labeling.
pub fn simon_of_embedding(e: &SpatialEmbedding, d: &Direction) -> Result<i64> {
    let proj = project(e, d)?;
    match e.kind() {
        GraphKind::Complete(5) => simon_invariant(&proj, &LabeledK5::new([1, 2, 3, 4, 5])?),
        GraphKind::K33 => simon_invariant(&proj, &LabeledK33::new([1, 2, 3, 4, 5, 6])?),
        k => arg(format!(
            "Simon invariant is defined for K5 and K33, not {k}"
        )),
    }
}
