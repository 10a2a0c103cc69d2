#![allow(dead_code)]

use cgrefine::geometry::{
    moment_curve_embedding, random_polyline, random_rectilinear, validate_embedding, GraphKind,
    Point3, SpatialEmbedding, Q,
};
use num_bigint::BigInt;

fn frac(n: i64, d: i64) -> Q {
    Q::new(BigInt::from(n), BigInt::from(d))
}

/// Each edge of `e` bent once, through its midpoint pushed by an offset
/// that cycles with the edge index. Rational, not lattice, corners.
pub fn bend_edges(e: &SpatialEmbedding, push: i64) -> SpatialEmbedding {
    let paths = e
        .edges()
        .iter()
        .enumerate()
        .map(|(i, &(a, b))| {
            let (pa, pb) = (e.position(a), e.position(b));
            let i = i as i64;
            let off = [
                frac(push * ((i * 7) % 11 - 5), 3),
                frac(push * ((i * 5) % 13 - 6), 2),
                frac(push * ((i * 3) % 7 - 3), 5),
            ];
            vec![Point3::new(
                (&pa.x + &pb.x) / frac(2, 1) + &off[0],
                (&pa.y + &pb.y) / frac(2, 1) + &off[1],
                (&pa.z + &pb.z) / frac(2, 1) + &off[2],
            )]
        })
        .collect();
    let bent = SpatialEmbedding::new(e.kind(), e.positions().to_vec(), paths).unwrap();
    let check = validate_embedding(&bent);
    assert!(check.ok(), "bent fixture invalid: {:?}", check.failures);
    bent
}

/// Non-rectilinear K6 embeddings: hand-bent moment and random K6, plus two
/// random polylines.
pub fn polyline_k6() -> Vec<(String, SpatialEmbedding)> {
    let moment = moment_curve_embedding(6).unwrap();
    vec![
        ("moment bent".into(), bend_edges(&moment, 1)),
        (
            "seed 3 bent".into(),
            bend_edges(&random_rectilinear(6, 3, 30).unwrap(), 2),
        ),
        (
            "seed 11 bent".into(),
            bend_edges(&random_rectilinear(6, 11, 30).unwrap(), 3),
        ),
        (
            "polyline 1".into(),
            random_polyline(GraphKind::Complete(6), 1, 6, 2).unwrap(),
        ),
        (
            "polyline 4".into(),
            random_polyline(GraphKind::Complete(6), 4, 6, 2).unwrap(),
        ),
    ]
}

/// Knotted or linked K5 polylines with their Simon invariant and α.
pub const K5_FIXTURES: [(u64, i64, i64); 3] = [(2, 3, 1), (6, -3, 1), (12, -5, 3)];
/// Same for K3,3.
pub const K33_FIXTURES: [(u64, i64, i64); 3] = [(2, -3, 1), (6, -5, 3), (7, -9, 10)];

pub fn k5_fixture(seed: u64) -> SpatialEmbedding {
    random_polyline(GraphKind::Complete(5), seed, 6, 2).unwrap()
}

pub fn k33_fixture(seed: u64) -> SpatialEmbedding {
    random_polyline(GraphKind::K33, seed, 6, 2).unwrap()
}

/// D4 polylines at span 5 as (bends, seed, lk(λ), lk(λ'), α).
pub const D4_FIXTURES: [(usize, u64, i64, i64, i64); 22] = [
    (1, 0, 0, 0, 0),
    (1, 2, 0, 0, 0),
    (1, 4, 0, 0, 0),
    (1, 5, 0, 0, 0),
    (1, 1, 0, -1, 0),
    (1, 3, 0, -1, 0),
    (1, 7, 0, 1, 0),
    (1, 12, 1, 0, 0),
    (1, 66, 2, 0, 0),
    (1, 98, 2, 0, 0),
    (1, 165, 2, 0, 0),
    (1, 394, 0, -2, 0),
    (1, 43, -1, -1, 1),
    (1, 46, -1, -1, 1),
    (1, 52, 1, -1, -1),
    (1, 61, 1, 1, 1),
    (2, 27, 2, -1, -2),
    (2, 32, 1, 2, 2),
    (2, 57, -1, 2, -2),
    (2, 65, -2, 1, -2),
    (2, 275, -2, 2, -4),
    (2, 199, 3, 0, 0),
];

pub fn d4_fixture(bends: usize, seed: u64) -> SpatialEmbedding {
    random_polyline(GraphKind::D4, seed, 5, bends).unwrap()
}
