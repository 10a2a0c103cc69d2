use std::fmt;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{segments_meet3, Point3, Q};
use crate::error::{arg, Error, Result};
use crate::graph::{
    complete_graph, D4Graph, LabeledK33, SimonLabeling, SimpleGraph, Vertex, MAX_ORDER, MIN_ORDER,
};

pub const DEFAULT_SPAN: i64 = 1000;
pub const MIN_SPAN: i64 = 8;
pub const MAX_ATTEMPTS: usize = 10_000;

/// The abstract graph an embedding realizes.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum GraphKind {
    /// K_n on vertices `1..=n`.
    Complete(usize),
    /// K3,3 with parts `{1,3,5}` and `{2,4,6}`.
    K33,
    /// The doubled 4-cycle.
    D4,
}

impl GraphKind {
    pub fn name(&self) -> String {
        match self {
            GraphKind::Complete(n) => format!("K{n}"),
            GraphKind::K33 => "K33".into(),
            GraphKind::D4 => "D4".into(),
        }
    }

    pub fn parse(s: &str) -> Result<Self> {
        match s {
            "K33" | "K3,3" => Ok(GraphKind::K33),
            "D4" => Ok(GraphKind::D4),
            _ => {
                let n: usize = s
                    .strip_prefix('K')
                    .and_then(|r| r.parse().ok())
                    .ok_or_else(|| Error::Argument(format!("unknown graph '{s}'")))?;
                if !(MIN_ORDER..=MAX_ORDER).contains(&n) {
                    return arg(format!("unknown graph '{s}'"));
                }
                Ok(GraphKind::Complete(n))
            }
        }
    }

    pub fn vertices(&self) -> Vec<Vertex> {
        let n = match self {
            GraphKind::Complete(n) => *n,
            GraphKind::K33 => 6,
            GraphKind::D4 => 4,
        };
        (1..=n as Vertex).collect()
    }

    /// Edge list in canonical order. For D4 the list has parallel entries.
    pub fn edges(&self) -> Vec<(Vertex, Vertex)> {
        match self {
            GraphKind::D4 => D4Graph::EDGES.to_vec(),
            _ => self.simple_graph().unwrap().edges().collect(),
        }
    }

    /// The underlying simple graph; `None` for the multigraph D4.
    pub fn simple_graph(&self) -> Option<SimpleGraph> {
        match self {
            GraphKind::Complete(n) => complete_graph(*n).ok(),
            GraphKind::K33 => Some(LabeledK33::new([1, 2, 3, 4, 5, 6]).unwrap().subgraph()),
            GraphKind::D4 => None,
        }
    }
}

impl fmt::Display for GraphKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.name())
    }
}

/// One straight piece of an edge path, referring to points by id.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Segment {
    pub edge: usize,
    /// Position along the edge, counted from its tail.
    pub seq: usize,
    pub a: usize,
    pub b: usize,
}

impl Segment {
    pub fn shares_point(&self, o: &Segment) -> bool {
        self.a == o.a || self.a == o.b || self.b == o.a || self.b == o.b
    }
}

/// A piecewise-linear embedding with exact rational coordinates.
///
/// Edge `i` runs from `edges()[i].0` to `edges()[i].1` through the interior
/// points of `path(i)`; an empty path is a straight segment.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SpatialEmbedding {
    kind: GraphKind,
    vertices: Vec<Vertex>,
    positions: Vec<Point3>,
    edges: Vec<(Vertex, Vertex)>,
    paths: Vec<Vec<Point3>>,
}

impl SpatialEmbedding {
    /// `positions[i]` is the position of vertex `i + 1`; `paths` is indexed
    /// like `kind.edges()`.
    pub fn new(kind: GraphKind, positions: Vec<Point3>, paths: Vec<Vec<Point3>>) -> Result<Self> {
        let vertices = kind.vertices();
        let edges = kind.edges();
        if positions.len() != vertices.len() {
            return arg(format!(
                "{kind} needs {} vertex positions, got {}",
                vertices.len(),
                positions.len()
            ));
        }
        if paths.len() != edges.len() {
            return arg(format!(
                "{kind} needs {} edge paths, got {}",
                edges.len(),
                paths.len()
            ));
        }
        Ok(Self {
            kind,
            vertices,
            positions,
            edges,
            paths,
        })
    }

    pub fn straight(kind: GraphKind, positions: Vec<Point3>) -> Result<Self> {
        let m = kind.edges().len();
        Self::new(kind, positions, vec![Vec::new(); m])
    }

    pub fn kind(&self) -> GraphKind {
        self.kind
    }

    pub fn vertices(&self) -> &[Vertex] {
        &self.vertices
    }

    pub fn position(&self, v: Vertex) -> &Point3 {
        &self.positions[v as usize - 1]
    }

    pub fn positions(&self) -> &[Point3] {
        &self.positions
    }

    pub fn edges(&self) -> &[(Vertex, Vertex)] {
        &self.edges
    }

    pub fn path(&self, edge: usize) -> &[Point3] {
        &self.paths[edge]
    }

    pub fn paths(&self) -> &[Vec<Point3>] {
        &self.paths
    }

    pub fn is_rectilinear(&self) -> bool {
        self.paths.iter().all(|p| p.is_empty())
    }

    /// Index of the edge joining `a` and `b` in a simple graph.
    pub fn edge_index(&self, a: Vertex, b: Vertex) -> Option<usize> {
        if self.kind == GraphKind::D4 {
            return None;
        }
        let key = if a < b { (a, b) } else { (b, a) };
        self.edges.iter().position(|&e| e == key)
    }

    /// `"i-j"` for simple graphs, `"e1".."e8"` for D4.
    pub fn edge_label(&self, edge: usize) -> String {
        match self.kind {
            GraphKind::D4 => format!("e{}", edge + 1),
            _ => format!("{}-{}", self.edges[edge].0, self.edges[edge].1),
        }
    }

    /// Vertex positions followed by the interior points of every path, in
    /// edge order. Point ids used by [`Segment`] index this list.
    pub fn points(&self) -> Vec<Point3> {
        let mut out = self.positions.clone();
        for p in &self.paths {
            out.extend(p.iter().cloned());
        }
        out
    }

    pub fn segments(&self) -> Vec<Segment> {
        let mut out = Vec::new();
        let mut next = self.positions.len();
        for (i, &(t, h)) in self.edges.iter().enumerate() {
            let mut ids = vec![t as usize - 1];
            for _ in &self.paths[i] {
                ids.push(next);
                next += 1;
            }
            ids.push(h as usize - 1);
            for (seq, w) in ids.windows(2).enumerate() {
                out.push(Segment {
                    edge: i,
                    seq,
                    a: w[0],
                    b: w[1],
                });
            }
        }
        out
    }

    /// Every coordinate multiplied by `k`.
    pub fn scaled(&self, k: &Q) -> Self {
        let mut e = self.clone();
        e.positions = e.positions.iter().map(|p| p.scale(k)).collect();
        e.paths = e
            .paths
            .iter()
            .map(|p| p.iter().map(|x| x.scale(k)).collect())
            .collect();
        e
    }

    /// Reflection in the plane z = 0.
    pub fn mirrored(&self) -> Self {
        let flip = |p: &Point3| Point3::new(p.x.clone(), p.y.clone(), -&p.z);
        let mut e = self.clone();
        e.positions = e.positions.iter().map(flip).collect();
        e.paths = e
            .paths
            .iter()
            .map(|p| p.iter().map(flip).collect())
            .collect();
        e
    }
}

/// Outcome of [`validate_embedding`]; each failure names its witness.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct EmbeddingReport {
    pub failures: Vec<String>,
}

impl EmbeddingReport {
    pub fn ok(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Exact check that the map is injective: points are distinct, segments
/// sharing a point meet only there, all other segment pairs are disjoint.
pub fn validate_embedding(e: &SpatialEmbedding) -> EmbeddingReport {
    let mut rep = EmbeddingReport::default();
    let pts = e.points();
    for i in 0..pts.len() {
        for j in i + 1..pts.len() {
            if pts[i] == pts[j] {
                rep.failures
                    .push(format!("points {i} and {j} coincide at {}", pts[i]));
            }
        }
    }
    if !rep.ok() {
        return rep;
    }
    let segs = e.segments();
    let name = |s: &Segment| format!("{}#{}", e.edge_label(s.edge), s.seq);
    for i in 0..segs.len() {
        for j in i + 1..segs.len() {
            let (s, t) = (&segs[i], &segs[j]);
            let shared: Vec<usize> = [s.a, s.b]
                .into_iter()
                .filter(|p| *p == t.a || *p == t.b)
                .collect();
            let bad = match shared.len() {
                0 => segments_meet3(&pts[s.a], &pts[s.b], &pts[t.a], &pts[t.b]),
                1 => {
                    let c = shared[0];
                    let other = |x: &Segment| if x.a == c { x.b } else { x.a };
                    let u = pts[other(s)].sub(&pts[c]);
                    let w = pts[other(t)].sub(&pts[c]);
                    u.cross(&w).is_zero() && u.dot(&w) > Q::default()
                }
                _ => true,
            };
            if bad {
                rep.failures
                    .push(format!("segments {} and {} intersect", name(s), name(t)));
            }
        }
    }
    rep
}

/// Vertex `i` at `(i, i², i³)`, all edges straight.
pub fn moment_curve_embedding(n: usize) -> Result<SpatialEmbedding> {
    if !(MIN_ORDER..=MAX_ORDER).contains(&n) {
        return arg(format!("order {n} outside {MIN_ORDER}..={MAX_ORDER}"));
    }
    let pos = (1..=n as i64)
        .map(|t| Point3::from_ints(t, t * t, t * t * t))
        .collect();
    SpatialEmbedding::straight(GraphKind::Complete(n), pos)
}

/// Straight-edge embedding of K_n with vertices uniform on the lattice
/// `[-span, span]³`, resampled from the same stream until valid.
pub fn random_rectilinear(n: usize, seed: u64, span: i64) -> Result<SpatialEmbedding> {
    if !(MIN_ORDER..=MAX_ORDER).contains(&n) {
        return arg(format!("order {n} outside {MIN_ORDER}..={MAX_ORDER}"));
    }
    if span < MIN_SPAN {
        return arg(format!("span must be at least {MIN_SPAN}"));
    }
    random_polyline(GraphKind::Complete(n), seed, span, 0)
}

/// Like [`random_rectilinear`] for any graph kind, with `bends` random
/// lattice points inside every edge. D4 needs at least one bend.
pub fn random_polyline(
    kind: GraphKind,
    seed: u64,
    span: i64,
    bends: usize,
) -> Result<SpatialEmbedding> {
    if span < 1 {
        return arg("span must be positive");
    }
    if kind == GraphKind::D4 && bends == 0 {
        return arg("parallel edges of D4 need at least one bend");
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let nv = kind.vertices().len();
    let ne = kind.edges().len();
    let sample = |rng: &mut ChaCha8Rng| {
        Point3::from_ints(
            rng.gen_range(-span..=span),
            rng.gen_range(-span..=span),
            rng.gen_range(-span..=span),
        )
    };
    for _ in 0..MAX_ATTEMPTS {
        let pos: Vec<Point3> = (0..nv).map(|_| sample(&mut rng)).collect();
        let paths: Vec<Vec<Point3>> = (0..ne)
            .map(|_| (0..bends).map(|_| sample(&mut rng)).collect())
            .collect();
        let e = SpatialEmbedding::new(kind, pos, paths)?;
        if validate_embedding(&e).ok() {
            return Ok(e);
        }
    }
    Err(Error::Internal(format!(
        "no valid {kind} embedding after {MAX_ATTEMPTS} samples"
    )))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::q;

    #[test]
    fn moment_curve_basics() {
        let e = moment_curve_embedding(6).unwrap();
        assert_eq!(e.position(2), &Point3::from_ints(2, 4, 8));
        assert!(moment_curve_embedding(7).unwrap().is_rectilinear());
        for n in 3..=8 {
            assert!(
                validate_embedding(&moment_curve_embedding(n).unwrap()).ok(),
                "n = {n}"
            );
        }
        assert!(moment_curve_embedding(13).is_err());
    }

    #[test]
    fn random_is_deterministic_and_valid() {
        let a = random_rectilinear(7, 42, 1000).unwrap();
        let b = random_rectilinear(7, 42, 1000).unwrap();
        assert_eq!(a, b);
        assert!(a.is_rectilinear());
        assert!(validate_embedding(&a).ok());
        assert_ne!(a, random_rectilinear(7, 43, 1000).unwrap());
        assert!(random_rectilinear(6, 1, 7).is_err());
    }

    #[test]
    fn detects_crossing_edges() {
        // Square in a plane: the diagonals 1-3 and 2-4 meet at the center.
        let pos = vec![
            Point3::from_ints(0, 0, 0),
            Point3::from_ints(2, 0, 0),
            Point3::from_ints(2, 2, 0),
            Point3::from_ints(0, 2, 0),
        ];
        let e = SpatialEmbedding::straight(GraphKind::Complete(4), pos).unwrap();
        let rep = validate_embedding(&e);
        assert!(!rep.ok());
        assert!(rep
            .failures
            .iter()
            .any(|f| f.contains("1-3") && f.contains("2-4")));
    }

    #[test]
    fn detects_coincident_vertices() {
        let mut pos: Vec<Point3> = (1..=5)
            .map(|t| Point3::from_ints(t, t * t, t * t * t))
            .collect();
        pos[4] = pos[0].clone();
        let e = SpatialEmbedding::straight(GraphKind::Complete(5), pos).unwrap();
        assert!(!validate_embedding(&e).ok());
    }

    #[test]
    fn detects_folded_adjacent_edges() {
        // Vertex 4 on edge 1-2 makes 1-4 overlap 1-2.
        let pos = vec![
            Point3::from_ints(0, 0, 0),
            Point3::from_ints(4, 0, 0),
            Point3::from_ints(0, 4, 1),
            Point3::from_ints(2, 0, 0),
        ];
        let e = SpatialEmbedding::straight(GraphKind::Complete(4), pos).unwrap();
        assert!(!validate_embedding(&e).ok());
    }

    #[test]
    fn d4_needs_bends() {
        assert!(random_polyline(GraphKind::D4, 1, 5, 0).is_err());
        let e = random_polyline(GraphKind::D4, 1, 5, 1).unwrap();
        assert_eq!(e.segments().len(), 16);
        assert!(validate_embedding(&e).ok());
    }

    #[test]
    fn scaling_and_mirroring_preserve_validity() {
        let e = random_rectilinear(6, 9, 50).unwrap();
        assert!(validate_embedding(&e.scaled(&q(3))).ok());
        assert!(validate_embedding(&e.mirrored()).ok());
        assert_eq!(e.mirrored().mirrored(), e);
    }

    #[test]
    fn graph_kinds() {
        for s in ["K5", "K6", "K7", "K33", "D4"] {
            assert_eq!(GraphKind::parse(s).unwrap().name(), s);
        }
        assert!(GraphKind::parse("K2").is_err());
        assert!(GraphKind::parse("X").is_err());
        assert_eq!(GraphKind::K33.edges().len(), 9);
        assert!(GraphKind::K33.edges().iter().all(|(a, b)| (a + b) % 2 == 1));
    }
}
