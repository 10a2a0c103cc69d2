//! Exact rational geometry: embeddings in 3-space and their projections.

mod embedding;
mod io;
mod projection;

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};

pub use embedding::{
    moment_curve_embedding, random_polyline, random_rectilinear, validate_embedding,
    EmbeddingReport, GraphKind, Segment, SpatialEmbedding, DEFAULT_SPAN, MAX_ATTEMPTS, MIN_SPAN,
};
pub use io::{embedding_from_json, embedding_to_json};
pub use projection::{
    is_generic, project, random_generic_direction, Direction, GenericityReport, ProjectedCrossing,
    Projection, Violation, ViolationKind,
};

/// Exact rational scalar.
pub type Q = BigRational;

pub fn q(n: i64) -> Q {
    Q::from_integer(BigInt::from(n))
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Point3 {
    pub x: Q,
    pub y: Q,
    pub z: Q,
}

impl Point3 {
    pub fn new(x: Q, y: Q, z: Q) -> Self {
        Self { x, y, z }
    }

    pub fn from_ints(x: i64, y: i64, z: i64) -> Self {
        Self::new(q(x), q(y), q(z))
    }

    pub fn sub(&self, o: &Point3) -> Point3 {
        Point3::new(&self.x - &o.x, &self.y - &o.y, &self.z - &o.z)
    }

    pub fn dot(&self, o: &Point3) -> Q {
        &self.x * &o.x + &self.y * &o.y + &self.z * &o.z
    }

    pub fn cross(&self, o: &Point3) -> Point3 {
        Point3::new(
            &self.y * &o.z - &self.z * &o.y,
            &self.z * &o.x - &self.x * &o.z,
            &self.x * &o.y - &self.y * &o.x,
        )
    }

    pub fn scale(&self, k: &Q) -> Point3 {
        Point3::new(&self.x * k, &self.y * k, &self.z * k)
    }

    pub fn is_zero(&self) -> bool {
        self.x.is_zero() && self.y.is_zero() && self.z.is_zero()
    }

    pub fn coords(&self) -> [&Q; 3] {
        [&self.x, &self.y, &self.z]
    }
}

impl fmt::Display for Point3 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {}, {})", self.x, self.y, self.z)
    }
}

/// det of the 3×3 matrix with columns `a, b, c`.
pub fn det3(a: &Point3, b: &Point3, c: &Point3) -> Q {
    a.dot(&b.cross(c))
}

/// A point of the projection plane.
pub type P2 = [Q; 2];

pub(crate) fn sub2<T: Clone + Signed>(a: &[T; 2], b: &[T; 2]) -> [T; 2] {
    [a[0].clone() - b[0].clone(), a[1].clone() - b[1].clone()]
}

pub(crate) fn cross2<T: Clone + Signed>(a: &[T; 2], b: &[T; 2]) -> T {
    a[0].clone() * b[1].clone() - a[1].clone() * b[0].clone()
}

pub(crate) fn dot2<T: Clone + Signed>(a: &[T; 2], b: &[T; 2]) -> T {
    a[0].clone() * b[0].clone() + a[1].clone() * b[1].clone()
}

/// Sign of the turn a → b → c.
pub(crate) fn orient2<T: Clone + Signed>(a: &[T; 2], b: &[T; 2], c: &[T; 2]) -> i8 {
    sign(&cross2(&sub2(b, a), &sub2(c, a)))
}

pub(crate) fn sign<T: Signed>(x: &T) -> i8 {
    if x.is_positive() {
        1
    } else if x.is_negative() {
        -1
    } else {
        0
    }
}

/// `p` lies on the closed segment `ab`.
pub(crate) fn on_segment2<T: Clone + Signed + PartialOrd>(
    p: &[T; 2],
    a: &[T; 2],
    b: &[T; 2],
) -> bool {
    if orient2(a, b, p) != 0 {
        return false;
    }
    let ap = sub2(p, a);
    let ab = sub2(b, a);
    let t = dot2(&ap, &ab);
    !t.is_negative() && t <= dot2(&ab, &ab)
}

/// Closed segments `ab` and `cd` share at least one point.
pub(crate) fn segments_meet2<T: Clone + Signed + PartialOrd>(
    a: &[T; 2],
    b: &[T; 2],
    c: &[T; 2],
    d: &[T; 2],
) -> bool {
    let o1 = orient2(a, b, c);
    let o2 = orient2(a, b, d);
    let o3 = orient2(c, d, a);
    let o4 = orient2(c, d, b);
    if o1 * o2 < 0 && o3 * o4 < 0 {
        return true;
    }
    on_segment2(c, a, b) || on_segment2(d, a, b) || on_segment2(a, c, d) || on_segment2(b, c, d)
}

/// Closed segments `ab` and `cd` in space share at least one point.
pub(crate) fn segments_meet3(a: &Point3, b: &Point3, c: &Point3, d: &Point3) -> bool {
    let ab = b.sub(a);
    if !det3(&ab, &c.sub(a), &d.sub(a)).is_zero() {
        return false;
    }
    let normals = [
        ab.cross(&c.sub(a)),
        ab.cross(&d.sub(a)),
        d.sub(c).cross(&a.sub(c)),
    ];
    let drop_axis = normals
        .iter()
        .find_map(|n| (0..3).find(|&i| !n.coords()[i].is_zero()));
    let keep: [usize; 2] = match drop_axis {
        Some(0) => [1, 2],
        Some(1) => [0, 2],
        Some(_) => [0, 1],
        // All four points collinear: compare along any axis where they spread.
        None => {
            let axis = (0..3).find(|&i| ab.coords()[i] != &Q::zero()).unwrap_or(0);
            let t = |p: &Point3| p.coords()[axis].clone();
            let (lo1, hi1) = minmax(t(a), t(b));
            let (lo2, hi2) = minmax(t(c), t(d));
            return lo1 <= hi2 && lo2 <= hi1;
        }
    };
    let p = |pt: &Point3| -> P2 { [pt.coords()[keep[0]].clone(), pt.coords()[keep[1]].clone()] };
    segments_meet2(&p(a), &p(b), &p(c), &p(d))
}

fn minmax(a: Q, b: Q) -> (Q, Q) {
    if a <= b {
        (a, b)
    } else {
        (b, a)
    }
}
