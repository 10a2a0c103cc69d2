use std::collections::HashMap;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::embedding::{Segment, SpatialEmbedding, MAX_ATTEMPTS};
use super::{
    cross2, det3, dot2, on_segment2, orient2, q, segments_meet2, sign, sub2, GraphKind, Point3, P2,
    Q,
};
use crate::error::{arg, Error, Result};
use crate::graph::Vertex;

/// Projection direction `d` with a plane basis `u, v`, det(u, v, d) > 0.
///
/// A point `X = αu + βv + γd` projects to `(α, β)` at height `γ`; larger
/// height is nearer the viewer.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Direction {
    pub d: Point3,
    pub u: Point3,
    pub v: Point3,
}

impl Direction {
    pub fn new(d: Point3, u: Point3, v: Point3) -> Result<Self> {
        if det3(&u, &v, &d) <= Q::zero() {
            return arg("projection basis must satisfy det(u, v, d) > 0");
        }
        Ok(Self { d, u, v })
    }

    /// Completes `d` to a positively oriented basis with `u, v ⟂ d`.
    pub fn along(d: Point3) -> Result<Self> {
        if d.is_zero() {
            return arg("projection direction must be nonzero");
        }
        let c = d.coords();
        let axis = (0..3).min_by_key(|&i| c[i].abs()).unwrap();
        let mut w = [q(0), q(0), q(0)];
        w[axis] = q(1);
        let w = Point3::new(w[0].clone(), w[1].clone(), w[2].clone());
        let u = d.cross(&w);
        let v = d.cross(&u);
        Self::new(d, u, v)
    }

    pub fn from_ints(x: i64, y: i64, z: i64) -> Result<Self> {
        Self::along(Point3::from_ints(x, y, z))
    }

    fn decompose(&self, x: &Point3) -> (P2, Q) {
        let den = det3(&self.u, &self.v, &self.d);
        let a = det3(x, &self.v, &self.d) / &den;
        let b = det3(&self.u, x, &self.d) / &den;
        let g = det3(&self.u, &self.v, x) / &den;
        ([a, b], g)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ViolationKind {
    CoincidentVertexImages,
    VertexOnEdge,
    Tangency,
    TriplePoint,
    AdjacentEdgeOverlap,
}

impl fmt::Display for ViolationKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ViolationKind::CoincidentVertexImages => "coincident-vertex-images",
            ViolationKind::VertexOnEdge => "vertex-on-edge",
            ViolationKind::Tangency => "tangency",
            ViolationKind::TriplePoint => "triple-point",
            ViolationKind::AdjacentEdgeOverlap => "adjacent-edge-overlap",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Violation {
    pub kind: ViolationKind,
    pub witness: String,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct GenericityReport {
    pub violations: Vec<Violation>,
}

impl GenericityReport {
    pub fn ok(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn has(&self, kind: ViolationKind) -> bool {
        self.violations.iter().any(|v| v.kind == kind)
    }
}

/// A crossing of two segment images. Parameters run from each segment's
/// `a` end (0) to its `b` end (1).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ProjectedCrossing {
    pub over: usize,
    pub under: usize,
    pub s_over: Q,
    pub s_under: Q,
    /// Sign of det(t_over, t_under), tangents taken along edge orientation.
    pub sign: i8,
    pub point: P2,
}

/// The full crossing set of an embedding under one projection.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Projection {
    pub kind: GraphKind,
    pub direction: Direction,
    pub edges: Vec<(Vertex, Vertex)>,
    pub images: Vec<P2>,
    pub heights: Vec<Q>,
    pub segments: Vec<Segment>,
    pub crossings: Vec<ProjectedCrossing>,
}

struct Analysis {
    report: GenericityReport,
    images: Vec<P2>,
    heights: Vec<Q>,
    segments: Vec<Segment>,
    crossings: Vec<ProjectedCrossing>,
}

fn analyse(e: &SpatialEmbedding, dir: &Direction) -> Analysis {
    let pts = e.points();
    let (images, heights): (Vec<P2>, Vec<Q>) = pts.iter().map(|p| dir.decompose(p)).unzip();
    // Predicates run on integer images: every coordinate times a common
    // denominator, which keeps all signs and parameter ratios.
    let scale = images
        .iter()
        .flatten()
        .fold(BigInt::one(), |l, x| l.lcm(x.denom()));
    let ints: Vec<[BigInt; 2]> = images
        .iter()
        .map(|[x, y]| [(x * &scale).to_integer(), (y * &scale).to_integer()])
        .collect();
    let segments = e.segments();
    let mut report = GenericityReport::default();
    let mut crossings = Vec::new();
    macro_rules! push {
        ($kind:expr, $w:expr $(,)?) => {
            report.violations.push(Violation {
                kind: $kind,
                witness: $w,
            })
        };
    }
    let seg_name = |s: &Segment| format!("{}#{}", e.edge_label(s.edge), s.seq);

    let mut seen: HashMap<&P2, usize> = HashMap::new();
    for (i, im) in images.iter().enumerate() {
        if let Some(j) = seen.insert(im, i) {
            push!(
                ViolationKind::CoincidentVertexImages,
                format!("points {j} and {i}")
            );
        }
    }
    if !report.ok() {
        return Analysis {
            report,
            images,
            heights,
            segments,
            crossings,
        };
    }

    for (p, im) in ints.iter().enumerate() {
        for s in &segments {
            if s.a != p && s.b != p && on_segment2(im, &ints[s.a], &ints[s.b]) {
                push!(
                    ViolationKind::VertexOnEdge,
                    format!("point {p} on {}", seg_name(s))
                );
            }
        }
    }

    let mut at: HashMap<P2, (usize, usize)> = HashMap::new();
    for i in 0..segments.len() {
        for j in i + 1..segments.len() {
            let (s, t) = (&segments[i], &segments[j]);
            let (a, b, c, d) = (&ints[s.a], &ints[s.b], &ints[t.a], &ints[t.b]);
            if s.shares_point(t) {
                let shared = if s.a == t.a || s.a == t.b { s.a } else { s.b };
                let os = if s.a == shared { s.b } else { s.a };
                let ot = if t.a == shared { t.b } else { t.a };
                let u = sub2(&ints[os], &ints[shared]);
                let w = sub2(&ints[ot], &ints[shared]);
                let both_shared = (s.a == t.a && s.b == t.b) || (s.a == t.b && s.b == t.a);
                if both_shared || (cross2(&u, &w).is_zero() && dot2(&u, &w).is_positive()) {
                    push!(
                        ViolationKind::AdjacentEdgeOverlap,
                        format!("{} and {}", seg_name(s), seg_name(t))
                    );
                }
                continue;
            }
            let (o1, o2, o3, o4) = (
                orient2(a, b, c),
                orient2(a, b, d),
                orient2(c, d, a),
                orient2(c, d, b),
            );
            if o1 == 0 && o2 == 0 {
                if segments_meet2(a, b, c, d) {
                    push!(
                        ViolationKind::Tangency,
                        format!("{} and {} overlap", seg_name(s), seg_name(t))
                    );
                }
                continue;
            }
            if !(o1 * o2 < 0 && o3 * o4 < 0) {
                continue;
            }
            let den = cross2(&sub2(b, a), &sub2(d, c));
            let s_par = Q::new(cross2(&sub2(c, a), &sub2(d, c)), den.clone());
            let t_par = Q::new(cross2(&sub2(c, a), &sub2(b, a)), den.clone());
            let (a, b) = (&images[s.a], &images[s.b]);
            let point = [
                &a[0] + &(&s_par * (&b[0] - &a[0])),
                &a[1] + &(&s_par * (&b[1] - &a[1])),
            ];
            let hs = &heights[s.a] + &(&s_par * (&heights[s.b] - &heights[s.a]));
            let ht = &heights[t.a] + &(&t_par * (&heights[t.b] - &heights[t.a]));
            if hs == ht {
                push!(
                    ViolationKind::Tangency,
                    format!("{} and {} meet in space", seg_name(s), seg_name(t))
                );
                continue;
            }
            if let Some((x, y)) = at.insert(point.clone(), (i, j)) {
                push!(
                    ViolationKind::TriplePoint,
                    format!(
                        "{}, {} and {}",
                        seg_name(&segments[x]),
                        seg_name(&segments[y]),
                        seg_name(s)
                    ),
                );
            }
            let c = if hs > ht {
                ProjectedCrossing {
                    over: i,
                    under: j,
                    s_over: s_par,
                    s_under: t_par,
                    sign: sign(&den),
                    point,
                }
            } else {
                ProjectedCrossing {
                    over: j,
                    under: i,
                    s_over: t_par,
                    s_under: s_par,
                    sign: -sign(&den),
                    point,
                }
            };
            crossings.push(c);
        }
    }
    Analysis {
        report,
        images,
        heights,
        segments,
        crossings,
    }
}

/// Exact regularity check of the projection of `e` along `d`.
pub fn is_generic(e: &SpatialEmbedding, d: &Direction) -> GenericityReport {
    analyse(e, d).report
}

/// Every crossing of the projected graph, with over/under and sign.
pub fn project(e: &SpatialEmbedding, d: &Direction) -> Result<Projection> {
    let a = analyse(e, d);
    if let Some(v) = a.report.violations.first() {
        return Err(Error::Precondition(format!(
            "projection is not generic: {} ({})",
            v.kind, v.witness
        )));
    }
    Ok(Projection {
        kind: e.kind(),
        direction: d.clone(),
        edges: e.edges().to_vec(),
        images: a.images,
        heights: a.heights,
        segments: a.segments,
        crossings: a.crossings,
    })
}

/// A seeded random integer direction in `[-1000, 1000]³` that is generic for `e`.
pub fn random_generic_direction(e: &SpatialEmbedding, seed: u64) -> Result<Direction> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..MAX_ATTEMPTS {
        let (x, y, z) = (
            rng.gen_range(-1000..=1000),
            rng.gen_range(-1000..=1000),
            rng.gen_range(-1000..=1000),
        );
        if (x, y, z) == (0, 0, 0) {
            continue;
        }
        let d = Direction::from_ints(x, y, z)?;
        if is_generic(e, &d).ok() {
            return Ok(d);
        }
    }
    Err(Error::Internal(format!(
        "no generic direction after {MAX_ATTEMPTS} attempts"
    )))
}
