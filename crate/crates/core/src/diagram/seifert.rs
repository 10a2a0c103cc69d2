//! Seifert circles and the Seifert matrix of a knot diagram.
//!
//! The signed Gauss code fixes the rotation at each crossing, which gives a
//! planar combinatorial map. Faces of that map, merged across each oriented
//! smoothing, are the regions of the Seifert circle picture; the region tree
//! then tells which circles run counterclockwise and how they nest. The
//! surface is built from one disk per circle and one half-twisted band per
//! crossing, and its H_1 basis comes from a spanning tree of the Seifert
//! graph (circles joined by crossings).

use std::collections::VecDeque;

use crate::diagram::LinkDiagram;
use crate::error::{arg, Error, Result};

/// Integer Seifert form on a basis of H_1 of the Seifert surface.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SeifertMatrix {
    pub entries: Vec<Vec<i64>>,
}

impl SeifertMatrix {
    pub fn size(&self) -> usize {
        self.entries.len()
    }

    pub fn get(&self, i: usize, j: usize) -> i64 {
        self.entries[i][j]
    }

    pub fn transpose(&self) -> Self {
        let n = self.size();
        Self {
            entries: (0..n)
                .map(|i| (0..n).map(|j| self.entries[j][i]).collect())
                .collect(),
        }
    }
}

const IN_O: usize = 0;
const OUT_O: usize = 1;
const IN_U: usize = 2;
const OUT_U: usize = 3;

fn is_in(role: usize) -> bool {
    role == IN_O || role == IN_U
}

/// Half-edges around crossing `c` in counterclockwise order.
fn rotation(sign: i8) -> [usize; 4] {
    if sign > 0 {
        [OUT_O, OUT_U, IN_O, IN_U]
    } else {
        [OUT_O, IN_U, IN_O, OUT_U]
    }
}

struct Knot {
    n: usize,
    /// Visit position of the over / under passage of each crossing.
    po: Vec<usize>,
    pu: Vec<usize>,
    seq: Vec<(usize, bool)>,
    signs: Vec<i8>,
}

impl Knot {
    fn len(&self) -> usize {
        2 * self.n
    }

    fn visit_of_half(&self, h: usize) -> usize {
        let (c, role) = (h / 4, h % 4);
        if role == IN_O || role == OUT_O {
            self.po[c]
        } else {
            self.pu[c]
        }
    }

    fn half(&self, visit: usize, incoming: bool) -> usize {
        let (c, over) = self.seq[visit];
        let role = match (over, incoming) {
            (true, true) => IN_O,
            (true, false) => OUT_O,
            (false, true) => IN_U,
            (false, false) => OUT_U,
        };
        4 * c + role
    }

    fn partner(&self, visit: usize) -> usize {
        let (c, over) = self.seq[visit];
        if over {
            self.pu[c]
        } else {
            self.po[c]
        }
    }

    /// Clockwise neighbor of half-edge `h` at its crossing.
    fn cw_next(&self, h: usize) -> usize {
        let (c, role) = (h / 4, h % 4);
        let rot = rotation(self.signs[c]);
        let i = rot.iter().position(|&r| r == role).unwrap();
        4 * c + rot[(i + 3) % 4]
    }

    /// The dart that reaches its crossing through half-edge `h`; darts are
    /// `2e` (edge `e` forward) and `2e + 1` (backward).
    fn arriving_dart(&self, h: usize) -> usize {
        let k = self.visit_of_half(h);
        if is_in(h % 4) {
            2 * ((k + self.len() - 1) % self.len())
        } else {
            2 * k + 1
        }
    }

    fn arrival_half(&self, dart: usize) -> usize {
        let e = dart / 2;
        if dart.is_multiple_of(2) {
            self.half((e + 1) % self.len(), true)
        } else {
            self.half(e, false)
        }
    }

    /// Dart following `dart` around its left face.
    fn next_dart(&self, dart: usize) -> usize {
        let h = self.cw_next(self.arrival_half(dart));
        let k = self.visit_of_half(h);
        if is_in(h % 4) {
            2 * ((k + self.len() - 1) % self.len()) + 1
        } else {
            2 * k
        }
    }
}

fn knot_of(d: &LinkDiagram) -> Result<Knot> {
    if d.component_count() != 1 {
        return arg("Seifert matrix needs a one-component diagram");
    }
    let n = d.crossing_count();
    let mut po = vec![0; n];
    let mut pu = vec![0; n];
    let seq: Vec<(usize, bool)> = d.components()[0]
        .iter()
        .map(|v| (v.crossing, v.over))
        .collect();
    for (k, &(c, over)) in seq.iter().enumerate() {
        if over {
            po[c] = k;
        } else {
            pu[c] = k;
        }
    }
    Ok(Knot {
        n,
        po,
        pu,
        seq,
        signs: d.signs().to_vec(),
    })
}

struct Dsu(Vec<usize>);

impl Dsu {
    fn find(&mut self, x: usize) -> usize {
        let p = self.0[x];
        if p == x {
            return x;
        }
        let r = self.find(p);
        self.0[x] = r;
        r
    }

    fn union(&mut self, a: usize, b: usize) {
        let (a, b) = (self.find(a), self.find(b));
        if a != b {
            self.0[a] = b;
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Case {
    /// Circles side by side: a counterclockwise, b clockwise.
    Side,
    /// Both counterclockwise, a inside b.
    NestedCcw,
    /// Both clockwise, b inside a.
    NestedCw,
}

/// Everything the matrix needs about the circle picture.
struct Circles {
    /// Edges of each circle in traversal order.
    circles: Vec<Vec<usize>>,
    /// For each crossing: circle a (the one carrying the arc that turns
    /// left), circle b, and the attachment positions on each.
    a: Vec<usize>,
    b: Vec<usize>,
    at_a: Vec<usize>,
    at_b: Vec<usize>,
    case: Vec<Case>,
}

fn build_circles(k: &Knot) -> Result<Circles> {
    let len = k.len();
    let darts = 2 * len;
    let mut face = vec![usize::MAX; darts];
    let mut faces = 0;
    for start in 0..darts {
        if face[start] != usize::MAX {
            continue;
        }
        let mut x = start;
        while face[x] == usize::MAX {
            face[x] = faces;
            x = k.next_dart(x);
        }
        if x != start {
            return Err(Error::Internal("face tracing did not close".into()));
        }
        faces += 1;
    }
    if faces != k.n + 2 {
        return arg(format!(
            "Gauss code is not planar ({} faces for {} crossings)",
            faces, k.n
        ));
    }

    let mut circle_of = vec![usize::MAX; len];
    let mut circles: Vec<Vec<usize>> = Vec::new();
    for e in 0..len {
        if circle_of[e] != usize::MAX {
            continue;
        }
        let id = circles.len();
        let mut list = Vec::new();
        let mut x = e;
        while circle_of[x] == usize::MAX {
            circle_of[x] = id;
            list.push(x);
            x = k.partner((x + 1) % len);
        }
        circles.push(list);
    }

    let mut dsu = Dsu((0..faces).collect());
    for c in 0..k.n {
        let rot = rotation(k.signs[c]);
        let mut gap = Vec::new();
        for i in 0..4 {
            let (h1, h2) = (rot[i], rot[(i + 1) % 4]);
            if is_in(h1) == is_in(h2) {
                gap.push(face[k.arriving_dart(4 * c + h2)]);
            }
        }
        dsu.union(gap[0], gap[1]);
    }
    let mut region_id = vec![usize::MAX; faces];
    let mut regions = 0;
    for f in 0..faces {
        let r = dsu.find(f);
        if region_id[r] == usize::MAX {
            region_id[r] = regions;
            regions += 1;
        }
    }
    let region = |f: usize, dsu: &mut Dsu| region_id[dsu.find(f)];
    if regions != circles.len() + 1 {
        return Err(Error::Internal(format!(
            "{} regions for {} circles",
            regions,
            circles.len()
        )));
    }
    let mut left = Vec::with_capacity(circles.len());
    let mut right = Vec::with_capacity(circles.len());
    for list in &circles {
        let l = region(face[2 * list[0]], &mut dsu);
        let r = region(face[2 * list[0] + 1], &mut dsu);
        for &e in list {
            if region(face[2 * e], &mut dsu) != l || region(face[2 * e + 1], &mut dsu) != r {
                return Err(Error::Internal("circle borders several regions".into()));
            }
        }
        left.push(l);
        right.push(r);
    }

    // Root the region/circle tree at the region of face 0.
    let root = region(0, &mut dsu);
    let mut region_seen = vec![false; regions];
    let mut ccw = vec![None; circles.len()];
    let mut queue = VecDeque::from([root]);
    region_seen[root] = true;
    while let Some(r) = queue.pop_front() {
        for c in 0..circles.len() {
            if ccw[c].is_some() || (left[c] != r && right[c] != r) {
                continue;
            }
            // The circle's parent region is r; counterclockwise circles have
            // their outside on the right.
            ccw[c] = Some(right[c] == r);
            let child = if right[c] == r { left[c] } else { right[c] };
            if region_seen[child] {
                return Err(Error::Internal("region graph is not a tree".into()));
            }
            region_seen[child] = true;
            queue.push_back(child);
        }
    }
    let ccw: Vec<bool> = ccw
        .into_iter()
        .map(|c| c.expect("tree is connected"))
        .collect();

    let pos_in_circle = |e: usize| circles[circle_of[e]].iter().position(|&x| x == e).unwrap();
    let (mut a, mut b, mut at_a, mut at_b, mut case) = (vec![], vec![], vec![], vec![], vec![]);
    for c in 0..k.n {
        let (va, vb) = if k.signs[c] > 0 {
            (k.po[c], k.pu[c])
        } else {
            (k.pu[c], k.po[c])
        };
        let ea = (va + len - 1) % len;
        let eb = (vb + len - 1) % len;
        let (ca, cb) = (circle_of[ea], circle_of[eb]);
        if ca == cb {
            return Err(Error::Internal("crossing joins a circle to itself".into()));
        }
        let cs = match (ccw[ca], ccw[cb]) {
            (true, false) => Case::Side,
            (true, true) => Case::NestedCcw,
            (false, false) => Case::NestedCw,
            (false, true) => {
                return Err(Error::Internal(
                    "impossible circle orientation at a crossing".into(),
                ))
            }
        };
        a.push(ca);
        b.push(cb);
        at_a.push(pos_in_circle(ea));
        at_b.push(pos_in_circle(eb));
        case.push(cs);
    }
    Ok(Circles {
        circles,
        a,
        b,
        at_a,
        at_b,
        case,
    })
}

/// Seifert circles of a knot diagram, each as its list of edges (edge `k`
/// runs from passage `k` to passage `k + 1`).
pub fn seifert_circles(d: &LinkDiagram) -> Result<Vec<Vec<usize>>> {
    let k = knot_of(d)?;
    if k.n == 0 {
        return Ok(vec![Vec::new()]);
    }
    Ok(build_circles(&k)?.circles)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Role {
    None,
    Start,
    End,
    Pass,
}

/// One basis loop of the surface: for every crossing, whether and which way
/// the loop runs through its band, and its role at each attachment.
struct Loop {
    sigma: Vec<i64>,
    role_a: Vec<Role>,
    role_b: Vec<Role>,
}

fn basis_loops(k: &Knot, cs: &Circles) -> Vec<Loop> {
    let nc = cs.circles.len();
    let mut parent: Vec<Option<(usize, usize)>> = vec![None; nc];
    let mut depth = vec![usize::MAX; nc];
    let mut tree = vec![false; k.n];
    depth[0] = 0;
    let mut queue = VecDeque::from([0usize]);
    while let Some(c) = queue.pop_front() {
        for x in 0..k.n {
            let other = if cs.a[x] == c {
                cs.b[x]
            } else if cs.b[x] == c {
                cs.a[x]
            } else {
                continue;
            };
            if depth[other] == usize::MAX {
                depth[other] = depth[c] + 1;
                parent[other] = Some((c, x));
                tree[x] = true;
                queue.push_back(other);
            }
        }
    }

    let mut loops = Vec::new();
    for x in (0..k.n).filter(|&x| !tree[x]) {
        // Cross x from a to b, then return to a through the tree.
        let mut steps = vec![(x, cs.a[x], cs.b[x])];
        let (mut u, mut v) = (cs.b[x], cs.a[x]);
        let mut up = Vec::new();
        let mut down = Vec::new();
        while u != v {
            if depth[u] >= depth[v] {
                let (p, y) = parent[u].unwrap();
                up.push((y, u, p));
                u = p;
            } else {
                let (p, y) = parent[v].unwrap();
                down.push((y, p, v));
                v = p;
            }
        }
        steps.extend(up);
        steps.extend(down.into_iter().rev());

        let mut sigma = vec![0i64; k.n];
        let mut role_a = vec![Role::None; k.n];
        let mut role_b = vec![Role::None; k.n];
        for &(y, from, _) in &steps {
            sigma[y] = if from == cs.a[y] { 1 } else { -1 };
        }
        let m = steps.len();
        for i in 0..m {
            let (enter, _, circle) = steps[i];
            let (exit, _, _) = steps[(i + 1) % m];
            let attach = |y: usize| {
                if cs.a[y] == circle {
                    cs.at_a[y]
                } else {
                    cs.at_b[y]
                }
            };
            let set = |y: usize, r: Role, role_a: &mut Vec<Role>, role_b: &mut Vec<Role>| {
                if cs.a[y] == circle {
                    role_a[y] = r;
                } else {
                    role_b[y] = r;
                }
            };
            set(enter, Role::Start, &mut role_a, &mut role_b);
            set(exit, Role::End, &mut role_a, &mut role_b);
            let len = cs.circles[circle].len();
            let (s, e) = (attach(enter), attach(exit));
            let mut t = (s + 1) % len;
            while t != e {
                if let Some(y) = (0..k.n).find(|&y| {
                    (cs.a[y] == circle && cs.at_a[y] == t) || (cs.b[y] == circle && cs.at_b[y] == t)
                }) {
                    set(y, Role::Pass, &mut role_a, &mut role_b);
                }
                t = (t + 1) % len;
            }
        }
        loops.push(Loop {
            sigma,
            role_a,
            role_b,
        });
    }
    loops
}

/// lk(α, β⁺) summed crossing by crossing. `p_below_q` places α's copy of a
/// shared band below β's; the value must not depend on it.
fn linking_entry(k: &Knot, cs: &Circles, al: &Loop, be: &Loop, p_below_q: bool) -> i64 {
    let mut total = 0;
    for x in 0..k.n {
        let eps = k.signs[x] as i64;
        let (sa, sb) = (al.sigma[x], be.sigma[x]);
        let (ua, ub) = (sa != 0, sb != 0);
        if ua && ub && ((eps > 0) == p_below_q) {
            total -= eps * sa * sb;
        }
        if cs.case[x] == Case::NestedCw {
            let (ra, rb) = (al.role_a[x], be.role_a[x]);
            if ra == Role::Pass && ub {
                total += sb;
            }
            if ua && ub && ((ra == Role::Start && p_below_q) || (ra == Role::End && !p_below_q)) {
                total += sb;
            }
            if ua
                && (rb == Role::Pass
                    || (rb == Role::Start && !p_below_q)
                    || (rb == Role::End && p_below_q))
            {
                total += sa;
            }
        }
        let (ra, rb) = (al.role_b[x], be.role_b[x]);
        match cs.case[x] {
            Case::Side | Case::NestedCw => {
                if ra == Role::Pass && ub {
                    total -= sb;
                }
                if ua && ub && ((ra == Role::Start && !p_below_q) || (ra == Role::End && p_below_q))
                {
                    total -= sb;
                }
            }
            Case::NestedCcw => {
                if ua
                    && (rb == Role::Pass
                        || (rb == Role::Start && p_below_q)
                        || (rb == Role::End && !p_below_q))
                {
                    total += sa;
                }
            }
        }
    }
    total
}

pub(crate) fn seifert_matrix_with(d: &LinkDiagram, p_below_q: bool) -> Result<SeifertMatrix> {
    let k = knot_of(d)?;
    if k.n == 0 {
        return Ok(SeifertMatrix {
            entries: Vec::new(),
        });
    }
    let cs = build_circles(&k)?;
    let loops = basis_loops(&k, &cs);
    let entries = loops
        .iter()
        .map(|a| {
            loops
                .iter()
                .map(|b| linking_entry(&k, &cs, a, b, p_below_q))
                .collect()
        })
        .collect();
    Ok(SeifertMatrix { entries })
}

/// Seifert matrix of a one-component diagram; 0×0 when there are no crossings.
pub fn seifert_matrix(d: &LinkDiagram) -> Result<SeifertMatrix> {
    seifert_matrix_with(d, true)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn trefoil_matrix() {
        let d = LinkDiagram::from_gauss("O1+ U2+ O3+ U1+ O2+ U3+").unwrap();
        let v = seifert_matrix(&d).unwrap();
        assert_eq!(v.size(), 2);
        assert_eq!(v.entries, vec![vec![-1, -1], vec![0, -1]]);
        assert_eq!(seifert_matrix_with(&d, false).unwrap(), v);
        assert_eq!(seifert_circles(&d).unwrap().len(), 2);
    }

    #[test]
    fn empty_diagram() {
        let v = seifert_matrix(&LinkDiagram::trivial(1)).unwrap();
        assert_eq!(v.size(), 0);
    }

    #[test]
    fn rejects_links_and_nonplanar_codes() {
        let hopf = LinkDiagram::from_gauss("O1+ U2+\nO2+ U1+").unwrap();
        assert!(seifert_matrix(&hopf).is_err());
        // The trefoil's Gauss word with one sign flipped has no planar realization.
        let bad = LinkDiagram::from_gauss("O1+ U2+ O3- U1+ O2+ U3-").unwrap();
        assert!(seifert_matrix(&bad).is_err());
    }
}
