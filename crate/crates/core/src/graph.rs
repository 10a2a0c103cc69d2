//! Complete graphs, their cycles and disjoint cycle pairs, and the labeled
//! subgraph families used by the Simon and α invariants.

use std::collections::BTreeSet;
use std::fmt;

use crate::error::{arg, Result};

/// Vertex label. Graph vertices are labeled `1..=n`.
pub type Vertex = u8;

pub const MIN_ORDER: usize = 3;
pub const MAX_ORDER: usize = 12;

/// A simple graph on an explicit vertex set.
///
/// Vertex labels are kept when taking induced subgraphs, so deleting vertex
/// 1 from K7 gives the K6 on `{2, .., 7}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SimpleGraph {
    vertices: Vec<Vertex>,
    edges: BTreeSet<(Vertex, Vertex)>,
}

fn ordered(a: Vertex, b: Vertex) -> (Vertex, Vertex) {
    if a < b {
        (a, b)
    } else {
        (b, a)
    }
}

impl SimpleGraph {
    /// Builds a graph from a vertex list and an edge list. Loops and edges
    /// touching unknown vertices are rejected; duplicate edges collapse.
    pub fn new(
        vertices: impl IntoIterator<Item = Vertex>,
        edges: impl IntoIterator<Item = (Vertex, Vertex)>,
    ) -> Result<Self> {
        let mut vs: Vec<Vertex> = vertices.into_iter().collect();
        vs.sort_unstable();
        vs.dedup();
        let mut es = BTreeSet::new();
        for (a, b) in edges {
            if a == b {
                return arg(format!("loop at vertex {a}"));
            }
            if vs.binary_search(&a).is_err() || vs.binary_search(&b).is_err() {
                return arg(format!("edge {a}-{b} uses an unknown vertex"));
            }
            es.insert(ordered(a, b));
        }
        Ok(Self {
            vertices: vs,
            edges: es,
        })
    }

    pub fn vertices(&self) -> &[Vertex] {
        &self.vertices
    }

    pub fn order(&self) -> usize {
        self.vertices.len()
    }

    /// Edges as ordered pairs `(i, j)` with `i < j`, sorted.
    pub fn edges(&self) -> impl Iterator<Item = (Vertex, Vertex)> + '_ {
        self.edges.iter().copied()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn has_vertex(&self, v: Vertex) -> bool {
        self.vertices.binary_search(&v).is_ok()
    }

    pub fn has_edge(&self, a: Vertex, b: Vertex) -> bool {
        self.edges.contains(&ordered(a, b))
    }

    fn neighbors(&self, v: Vertex) -> Vec<Vertex> {
        self.vertices
            .iter()
            .copied()
            .filter(|&w| w != v && self.has_edge(v, w))
            .collect()
    }

    /// True when every pair of distinct vertices is joined.
    pub fn is_complete(&self) -> bool {
        let n = self.order();
        self.edge_count() == n * (n - 1) / 2
    }

    /// True when every consecutive pair of the cycle is an edge here.
    pub fn contains_cycle(&self, c: &Cycle) -> bool {
        c.edges().all(|(a, b)| self.has_edge(a, b))
    }
}

/// K_n on vertices `1..=n`.
pub fn complete_graph(n: usize) -> Result<SimpleGraph> {
    if !(MIN_ORDER..=MAX_ORDER).contains(&n) {
        return arg(format!(
            "complete graph order {n} outside {MIN_ORDER}..={MAX_ORDER}"
        ));
    }
    let vs: Vec<Vertex> = (1..=n as Vertex).collect();
    let mut es = BTreeSet::new();
    for &a in &vs {
        for &b in &vs {
            if a < b {
                es.insert((a, b));
            }
        }
    }
    Ok(SimpleGraph {
        vertices: vs,
        edges: es,
    })
}

/// The induced subgraph on all vertices except `v`.
pub fn vertex_deleted(g: &SimpleGraph, v: Vertex) -> Result<SimpleGraph> {
    if !g.has_vertex(v) {
        return arg(format!("vertex {v} is not in the graph"));
    }
    Ok(SimpleGraph {
        vertices: g.vertices.iter().copied().filter(|&w| w != v).collect(),
        edges: g
            .edges
            .iter()
            .copied()
            .filter(|&(a, b)| a != v && b != v)
            .collect(),
    })
}

/// A cycle stored in canonical form: it starts at its minimum vertex and,
/// of the two traversal directions, the lexicographically smaller is kept.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Cycle {
    vertices: Vec<Vertex>,
}

impl Cycle {
    /// Canonicalizes any rotation or reflection of a vertex sequence.
    pub fn new(seq: &[Vertex]) -> Result<Self> {
        if seq.len() < 3 {
            return arg("a cycle needs at least three vertices");
        }
        let distinct: BTreeSet<_> = seq.iter().collect();
        if distinct.len() != seq.len() {
            return arg(format!("repeated vertex in cycle {seq:?}"));
        }
        Ok(Self {
            vertices: canonical_rotation(seq),
        })
    }

    pub fn vertices(&self) -> &[Vertex] {
        &self.vertices
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn contains(&self, v: Vertex) -> bool {
        self.vertices.contains(&v)
    }

    /// Consecutive pairs in canonical traversal order, closing edge last.
    pub fn edges(&self) -> impl Iterator<Item = (Vertex, Vertex)> + '_ {
        let k = self.vertices.len();
        (0..k).map(move |i| (self.vertices[i], self.vertices[(i + 1) % k]))
    }

    pub fn is_disjoint(&self, other: &Cycle) -> bool {
        self.vertices.iter().all(|v| !other.contains(*v))
    }

    /// Bracket notation, e.g. `[1357246]`; vertices above 9 are comma separated.
    pub fn bracket(&self) -> String {
        let sep = if self.vertices.iter().any(|&v| v > 9) {
            ","
        } else {
            ""
        };
        let body: Vec<String> = self.vertices.iter().map(|v| v.to_string()).collect();
        format!("[{}]", body.join(sep))
    }
}

impl fmt::Display for Cycle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.bracket())
    }
}

fn canonical_rotation(seq: &[Vertex]) -> Vec<Vertex> {
    let k = seq.len();
    let start = (0..k).min_by_key(|&i| seq[i]).unwrap();
    let fwd: Vec<Vertex> = (0..k).map(|i| seq[(start + i) % k]).collect();
    let bwd: Vec<Vertex> = (0..k).map(|i| seq[(start + k - i) % k]).collect();
    fwd.min(bwd)
}

/// Two vertex-disjoint cycles, longer (then lexicographically larger) first.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CyclePair {
    pub first: Cycle,
    pub second: Cycle,
}

impl CyclePair {
    pub fn new(a: Cycle, b: Cycle) -> Result<Self> {
        if !a.is_disjoint(&b) {
            return arg(format!("cycles {a} and {b} share a vertex"));
        }
        let ka = (a.len(), a.clone());
        let kb = (b.len(), b.clone());
        Ok(if ka >= kb {
            Self {
                first: a,
                second: b,
            }
        } else {
            Self {
                first: b,
                second: a,
            }
        })
    }

    pub fn bracket(&self) -> String {
        format!("{}∪{}", self.first.bracket(), self.second.bracket())
    }
}

impl fmt::Display for CyclePair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.bracket())
    }
}

/// All k-cycles of `g` in canonical form, sorted.
///
/// Depth-first search from each start vertex `s`, visiting only vertices
/// larger than `s`; the reflection is pruned by requiring the second vertex
/// to be smaller than the last.
pub fn cycles_of_length(g: &SimpleGraph, k: usize) -> Vec<Cycle> {
    let mut out = Vec::new();
    if k < 3 || k > g.order() {
        return out;
    }
    let adj: Vec<(Vertex, Vec<Vertex>)> = g.vertices.iter().map(|&v| (v, g.neighbors(v))).collect();
    let nbrs = |v: Vertex| -> &[Vertex] { &adj.iter().find(|(w, _)| *w == v).unwrap().1 };
    let mut path = Vec::with_capacity(k);
    for &s in &g.vertices {
        path.clear();
        path.push(s);
        extend(&mut path, s, k, &nbrs, g, &mut out);
    }
    out.sort();
    out
}

fn extend<'a>(
    path: &mut Vec<Vertex>,
    s: Vertex,
    k: usize,
    nbrs: &impl Fn(Vertex) -> &'a [Vertex],
    g: &SimpleGraph,
    out: &mut Vec<Cycle>,
) {
    let last = *path.last().unwrap();
    if path.len() == k {
        if g.has_edge(last, s) && path[1] < path[k - 1] {
            out.push(Cycle {
                vertices: path.clone(),
            });
        }
        return;
    }
    for &w in nbrs(last) {
        if w > s && !path.contains(&w) {
            path.push(w);
            extend(path, s, k, nbrs, g, out);
            path.pop();
        }
    }
}

/// All cycles of `g` of every length, grouped by increasing length.
pub fn all_cycles(g: &SimpleGraph) -> Vec<Cycle> {
    (3..=g.order())
        .flat_map(|k| cycles_of_length(g, k))
        .collect()
}

/// Unordered pairs of disjoint k- and l-cycles, sorted.
pub fn disjoint_cycle_pairs(g: &SimpleGraph, k: usize, l: usize) -> Result<Vec<CyclePair>> {
    if k + l > g.order() {
        return arg(format!("Γ_{{{k},{l}}} needs at least {} vertices", k + l));
    }
    let (k, l) = if k >= l { (k, l) } else { (l, k) };
    let big = cycles_of_length(g, k);
    let small = if k == l {
        big.clone()
    } else {
        cycles_of_length(g, l)
    };
    let mut out = Vec::new();
    for (i, a) in big.iter().enumerate() {
        let rest = if k == l { &small[i + 1..] } else { &small[..] };
        for b in rest {
            if a.is_disjoint(b) {
                out.push(CyclePair::new(a.clone(), b.clone())?);
            }
        }
    }
    out.sort();
    Ok(out)
}

/// An oriented edge of a labeled template, already mapped into the host graph.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct OrientedEdge {
    pub tail: Vertex,
    pub head: Vertex,
}

impl OrientedEdge {
    pub fn shares_vertex(&self, o: &OrientedEdge) -> bool {
        self.tail == o.tail || self.tail == o.head || self.head == o.tail || self.head == o.head
    }
}

/// A K5 or K3,3 subgraph whose edges carry the orientations and sign table
/// needed by the Simon invariant.
pub trait SimonLabeling {
    /// Host-graph vertices in template order.
    fn vertex_map(&self) -> &[Vertex];
    /// Oriented edges in template order.
    fn oriented_edges(&self) -> Vec<OrientedEdge>;
    /// ε(x, y) for two disjoint template edges, by template index.
    fn epsilon(&self, x: usize, y: usize) -> i64;
    /// The subgraph as a simple graph on the host labels.
    fn subgraph(&self) -> SimpleGraph {
        SimpleGraph::new(
            self.vertex_map().iter().copied(),
            self.oriented_edges().iter().map(|e| (e.tail, e.head)),
        )
        .expect("template edges use mapped vertices")
    }
}

/// Edge class of the K5 template: pentagon edges `e_i = (i, i+1)` and
/// diagonals `d_i = (i, i+2)`, indices mod 5.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum K5Edge {
    Pentagon(u8),
    Diagonal(u8),
}

/// A labeled K5. Template edges are `e_1..e_5` then `d_1..d_5`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LabeledK5 {
    vertex_map: [Vertex; 5],
}

impl LabeledK5 {
    pub fn new(vertex_map: [Vertex; 5]) -> Result<Self> {
        let s: BTreeSet<_> = vertex_map.iter().collect();
        if s.len() != 5 {
            return arg("K5 vertex map must be injective");
        }
        Ok(Self { vertex_map })
    }

    pub fn classes() -> [K5Edge; 10] {
        let mut out = [K5Edge::Pentagon(1); 10];
        for i in 0..5 {
            out[i] = K5Edge::Pentagon(i as u8 + 1);
            out[i + 5] = K5Edge::Diagonal(i as u8 + 1);
        }
        out
    }

    fn template_edge(c: K5Edge) -> (usize, usize) {
        match c {
            K5Edge::Pentagon(i) => (i as usize, (i as usize) % 5 + 1),
            K5Edge::Diagonal(i) => (i as usize, (i as usize + 1) % 5 + 1),
        }
    }
}

impl SimonLabeling for LabeledK5 {
    fn vertex_map(&self) -> &[Vertex] {
        &self.vertex_map
    }

    fn oriented_edges(&self) -> Vec<OrientedEdge> {
        Self::classes()
            .iter()
            .map(|&c| {
                let (t, h) = Self::template_edge(c);
                OrientedEdge {
                    tail: self.vertex_map[t - 1],
                    head: self.vertex_map[h - 1],
                }
            })
            .collect()
    }

    fn epsilon(&self, x: usize, y: usize) -> i64 {
        let cs = Self::classes();
        match (cs[x], cs[y]) {
            (K5Edge::Pentagon(_), K5Edge::Pentagon(_)) => 1,
            (K5Edge::Diagonal(_), K5Edge::Diagonal(_)) => -1,
            _ => -1,
        }
    }
}

/// Edge class of the K3,3 template: hexagon edges `c_i = (i, i+1)` mod 6
/// and long diagonals `b_1 = (1, 4)`, `b_2 = (5, 2)`, `b_3 = (3, 6)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum K33Edge {
    Hexagon(u8),
    Long(u8),
}

/// ε(c_i, b_k) for the disjoint hexagon/diagonal pairs of the K3,3 template.
///
/// Together with ε(c,c) = ε(b,b) = 1 this is the only table (for these
/// orientations) under which the Simon sum is unchanged when an edge is
/// pushed across a vertex; see the `vertex_move_balance` test.
const K33_PARALLEL: [((u8, u8), i64); 6] = [
    ((2, 1), 1),
    ((5, 1), -1),
    ((3, 2), -1),
    ((6, 2), 1),
    ((1, 3), -1),
    ((4, 3), 1),
];

/// A labeled K3,3. Template positions `1..6` go around the hexagon, so the
/// parts are the odd and the even positions. Template edges are `c_1..c_6`
/// then `b_1..b_3`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LabeledK33 {
    vertex_map: [Vertex; 6],
}

impl LabeledK33 {
    pub fn new(vertex_map: [Vertex; 6]) -> Result<Self> {
        let s: BTreeSet<_> = vertex_map.iter().collect();
        if s.len() != 6 {
            return arg("K3,3 vertex map must be injective");
        }
        Ok(Self { vertex_map })
    }

    pub fn classes() -> [K33Edge; 9] {
        let mut out = [K33Edge::Hexagon(1); 9];
        for i in 0..6 {
            out[i] = K33Edge::Hexagon(i as u8 + 1);
        }
        for k in 0..3 {
            out[6 + k] = K33Edge::Long(k as u8 + 1);
        }
        out
    }

    fn template_edge(c: K33Edge) -> (usize, usize) {
        match c {
            K33Edge::Hexagon(i) => (i as usize, (i as usize) % 6 + 1),
            K33Edge::Long(1) => (1, 4),
            K33Edge::Long(2) => (5, 2),
            K33Edge::Long(_) => (3, 6),
        }
    }

    /// The two vertex parts (odd and even template positions).
    pub fn parts(&self) -> ([Vertex; 3], [Vertex; 3]) {
        let m = &self.vertex_map;
        ([m[0], m[2], m[4]], [m[1], m[3], m[5]])
    }
}

impl SimonLabeling for LabeledK33 {
    fn vertex_map(&self) -> &[Vertex] {
        &self.vertex_map
    }

    fn oriented_edges(&self) -> Vec<OrientedEdge> {
        Self::classes()
            .iter()
            .map(|&c| {
                let (t, h) = Self::template_edge(c);
                OrientedEdge {
                    tail: self.vertex_map[t - 1],
                    head: self.vertex_map[h - 1],
                }
            })
            .collect()
    }

    fn epsilon(&self, x: usize, y: usize) -> i64 {
        let cs = Self::classes();
        match (cs[x], cs[y]) {
            (K33Edge::Hexagon(_), K33Edge::Hexagon(_)) | (K33Edge::Long(_), K33Edge::Long(_)) => 1,
            (K33Edge::Hexagon(i), K33Edge::Long(k)) | (K33Edge::Long(k), K33Edge::Hexagon(i)) => {
                K33_PARALLEL
                    .iter()
                    .find(|((ci, bk), _)| *ci == i && *bk == k)
                    .map(|(_, s)| *s)
                    .unwrap_or_else(|| panic!("c{i} and b{k} are not disjoint"))
            }
        }
    }
}

/// The six K5 subgraphs of K6, one per deleted vertex (deleted vertex 1 first).
pub fn k5_subgraphs_of_k6() -> Vec<LabeledK5> {
    (1..=6u8)
        .map(|del| {
            let vs: Vec<Vertex> = (1..=6u8).filter(|&v| v != del).collect();
            LabeledK5::new([vs[0], vs[1], vs[2], vs[3], vs[4]]).unwrap()
        })
        .collect()
}

/// The ten K3,3 subgraphs of K6, one per bipartition of `{1..6}` into two
/// triples. The part containing vertex 1 takes the odd template positions.
pub fn k33_subgraphs_of_k6() -> Vec<LabeledK33> {
    let mut out = Vec::new();
    for a in 2..=6u8 {
        for b in a + 1..=6u8 {
            let part: [Vertex; 3] = [1, a, b];
            let rest: Vec<Vertex> = (1..=6u8).filter(|v| !part.contains(v)).collect();
            out.push(
                LabeledK33::new([part[0], rest[0], part[1], rest[1], part[2], rest[2]]).unwrap(),
            );
        }
    }
    out
}

/// The doubled 4-cycle: vertices 1..4, edges `e_1,e_2` on 1–2, `e_3,e_4` on
/// 2–3, `e_5,e_6` on 3–4, `e_7,e_8` on 4–1. Edge `e_i` is index `i - 1`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct D4Graph;

/// A directed walk through edges of a multigraph, given as
/// `(edge index, traversed tail-to-head)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct EdgeWalk(pub Vec<(usize, bool)>);

impl D4Graph {
    pub const EDGES: [(Vertex, Vertex); 8] = [
        (1, 2),
        (1, 2),
        (2, 3),
        (2, 3),
        (3, 4),
        (3, 4),
        (4, 1),
        (4, 1),
    ];

    /// The sixteen 4-cycles `e_i ∪ e_j ∪ e_k ∪ e_l`, one edge per parallel
    /// class, as 1-based edge indices `[i, j, k, l]`.
    pub fn four_cycles() -> Vec<[usize; 4]> {
        let mut out = Vec::with_capacity(16);
        for i in [1, 2] {
            for j in [3, 4] {
                for k in [5, 6] {
                    for l in [7, 8] {
                        out.push([i, j, k, l]);
                    }
                }
            }
        }
        out
    }

    /// The four 2-cycles `e_1∪e_2, e_3∪e_4, e_5∪e_6, e_7∪e_8`.
    pub fn two_cycles() -> Vec<[usize; 2]> {
        vec![[1, 2], [3, 4], [5, 6], [7, 8]]
    }

    /// ω for a 4-cycle: +1 when the index sum is even, −1 when odd.
    pub fn omega(c: &[usize; 4]) -> i64 {
        if c.iter().sum::<usize>() % 2 == 0 {
            1
        } else {
            -1
        }
    }

    /// Walk 1 → 2 → 3 → 4 → 1 along the chosen edges.
    pub fn walk_four(c: &[usize; 4]) -> EdgeWalk {
        EdgeWalk(vec![
            (c[0] - 1, true),
            (c[1] - 1, true),
            (c[2] - 1, true),
            (c[3] - 1, true),
        ])
    }

    /// Out along the first edge and back along the second.
    pub fn walk_two(c: &[usize; 2]) -> EdgeWalk {
        EdgeWalk(vec![(c[0] - 1, true), (c[1] - 1, false)])
    }

    /// λ = (e_1∪e_2, e_5∪e_6) and λ' = (e_3∪e_4, e_7∪e_8).
    pub fn lambda_pairs() -> [([usize; 2], [usize; 2]); 2] {
        [([1, 2], [5, 6]), ([3, 4], [7, 8])]
    }
}
