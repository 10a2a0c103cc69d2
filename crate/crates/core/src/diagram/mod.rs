//! Combinatorial knot and link diagrams extracted from projections.

mod seifert;

use std::collections::HashMap;
use std::fmt;

use num_traits::One;

use crate::error::{arg, Error, Result};
use crate::geometry::{Projection, Q};
use crate::graph::{Cycle, CyclePair, D4Graph, EdgeWalk};

pub use seifert::{seifert_circles, seifert_matrix, SeifertMatrix};

/// One passage of a component through a crossing.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Visit {
    pub crossing: usize,
    pub over: bool,
}

/// A crossing seen from the diagram: where its two strands sit.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Crossing {
    pub id: usize,
    /// `(component, position)` of the over passage.
    pub over: (usize, usize),
    pub under: (usize, usize),
    pub sign: i8,
}

/// An oriented link diagram as cyclic crossing sequences, one per component.
/// Crossing ids are `0..crossing_count()`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct LinkDiagram {
    components: Vec<Vec<Visit>>,
    signs: Vec<i8>,
}

impl LinkDiagram {
    /// Checks that every id in `0..signs.len()` is passed once over and once under.
    pub fn new(components: Vec<Vec<Visit>>, signs: Vec<i8>) -> Result<Self> {
        if components.is_empty() {
            return arg("a diagram needs at least one component");
        }
        let mut seen = vec![[false; 2]; signs.len()];
        for v in components.iter().flatten() {
            let slot = seen.get_mut(v.crossing).ok_or_else(|| {
                Error::Argument(format!("crossing id {} out of range", v.crossing))
            })?;
            if slot[v.over as usize] {
                return arg(format!(
                    "crossing {} passed twice in the same role",
                    v.crossing + 1
                ));
            }
            slot[v.over as usize] = true;
        }
        if let Some(i) = seen.iter().position(|s| !(s[0] && s[1])) {
            return arg(format!("crossing {} lacks an over or under passage", i + 1));
        }
        if signs.iter().any(|s| *s != 1 && *s != -1) {
            return arg("crossing signs must be ±1");
        }
        Ok(Self { components, signs })
    }

    /// An unknot with no crossings.
    pub fn trivial(components: usize) -> Self {
        Self {
            components: vec![Vec::new(); components.max(1)],
            signs: Vec::new(),
        }
    }

    /// Parses the extended Gauss form, one component per line, e.g.
    /// `O1+ U2+ O3+ U1+ O2+ U3+`. Ids are 1-based and may be any positive
    /// integers; they are renumbered by first appearance.
    pub fn from_gauss(text: &str) -> Result<Self> {
        let mut ids: HashMap<u64, usize> = HashMap::new();
        let mut signs: Vec<i8> = Vec::new();
        let mut components = Vec::new();
        for line in text.lines().map(str::trim).filter(|l| !l.is_empty()) {
            let mut comp = Vec::new();
            for tok in line.split_whitespace() {
                let bad = || Error::Format(format!("bad Gauss token '{tok}'"));
                let over = match tok.chars().next() {
                    Some('O') | Some('o') => true,
                    Some('U') | Some('u') => false,
                    _ => return Err(bad()),
                };
                let sign: i8 = match tok.chars().last() {
                    Some('+') => 1,
                    Some('-') => -1,
                    _ => return Err(bad()),
                };
                let label: u64 = tok[1..tok.len() - 1].parse().map_err(|_| bad())?;
                let next = ids.len();
                let id = *ids.entry(label).or_insert(next);
                if id == signs.len() {
                    signs.push(sign);
                } else if signs[id] != sign {
                    return Err(Error::Format(format!(
                        "crossing {label} has inconsistent signs"
                    )));
                }
                comp.push(Visit { crossing: id, over });
            }
            components.push(comp);
        }
        if components.is_empty() {
            components.push(Vec::new());
        }
        Self::new(components, signs).map_err(|e| Error::Format(e.to_string()))
    }

    /// The extended Gauss form, one component per line; a crossingless
    /// component is an empty line.
    pub fn gauss_text(&self) -> String {
        self.components
            .iter()
            .map(|c| {
                c.iter()
                    .map(|v| {
                        let s = if self.signs[v.crossing] > 0 { '+' } else { '-' };
                        format!("{}{}{}", if v.over { 'O' } else { 'U' }, v.crossing + 1, s)
                    })
                    .collect::<Vec<_>>()
                    .join(" ")
            })
            .collect::<Vec<_>>()
            .join("\n")
    }

    pub fn components(&self) -> &[Vec<Visit>] {
        &self.components
    }

    pub fn component_count(&self) -> usize {
        self.components.len()
    }

    pub fn crossing_count(&self) -> usize {
        self.signs.len()
    }

    pub fn sign(&self, c: usize) -> i8 {
        self.signs[c]
    }

    pub fn signs(&self) -> &[i8] {
        &self.signs
    }

    /// Locations of both passages of every crossing, by id.
    pub fn crossings(&self) -> Vec<Crossing> {
        let mut over = vec![(0, 0); self.signs.len()];
        let mut under = vec![(0, 0); self.signs.len()];
        for (ci, comp) in self.components.iter().enumerate() {
            for (pos, v) in comp.iter().enumerate() {
                if v.over {
                    over[v.crossing] = (ci, pos);
                } else {
                    under[v.crossing] = (ci, pos);
                }
            }
        }
        (0..self.signs.len())
            .map(|id| Crossing {
                id,
                over: over[id],
                under: under[id],
                sign: self.signs[id],
            })
            .collect()
    }

    /// Crossings whose strands belong to different components.
    pub fn inter_component(&self) -> Vec<Crossing> {
        self.crossings()
            .into_iter()
            .filter(|c| c.over.0 != c.under.0)
            .collect()
    }

    fn check_id(&self, c: usize) -> Result<()> {
        if c >= self.signs.len() {
            return arg(format!("no crossing {}", c + 1));
        }
        Ok(())
    }

    /// Exchanges over and under at `c` and negates its sign.
    pub fn switch_crossing(&self, c: usize) -> Result<Self> {
        self.check_id(c)?;
        let mut d = self.clone();
        for v in d.components.iter_mut().flatten() {
            if v.crossing == c {
                v.over = !v.over;
            }
        }
        d.signs[c] = -d.signs[c];
        Ok(d)
    }

    /// Oriented smoothing at `c`: the crossing disappears and the component
    /// count goes up (self crossing) or down (mixed crossing) by one.
    pub fn smooth_crossing(&self, c: usize) -> Result<Self> {
        self.check_id(c)?;
        let x = self.crossings()[c];
        let (i, p) = x.over;
        let (j, q) = x.under;
        let mut comps = self.components.clone();
        if i == j {
            let comp = &self.components[i];
            let k = comp.len();
            let arc = |from: usize, to: usize| -> Vec<Visit> {
                let mut out = Vec::new();
                let mut t = (from + 1) % k;
                while t != to {
                    out.push(comp[t]);
                    t = (t + 1) % k;
                }
                out
            };
            let first = arc(p, q);
            let second = arc(q, p);
            comps[i] = first;
            comps.insert(i + 1, second);
        } else {
            let (ci, cj) = (&self.components[i], &self.components[j]);
            let mut merged: Vec<Visit> = Vec::with_capacity(ci.len() + cj.len() - 2);
            merged.extend_from_slice(&ci[p + 1..]);
            merged.extend_from_slice(&ci[..p]);
            merged.extend_from_slice(&cj[q + 1..]);
            merged.extend_from_slice(&cj[..q]);
            let (lo, hi) = (i.min(j), i.max(j));
            comps[lo] = merged;
            comps.remove(hi);
        }
        for v in comps.iter_mut().flatten() {
            if v.crossing > c {
                v.crossing -= 1;
            }
        }
        let mut signs = self.signs.clone();
        signs.remove(c);
        Ok(Self {
            components: comps,
            signs,
        })
    }

    /// Reverses the orientation of one component. Crossings it shares with
    /// other components change sign.
    pub fn reverse_component(&self, i: usize) -> Result<Self> {
        if i >= self.components.len() {
            return arg(format!("no component {i}"));
        }
        let xs = self.crossings();
        let mut d = self.clone();
        d.components[i].reverse();
        for x in xs {
            if (x.over.0 == i) != (x.under.0 == i) {
                d.signs[x.id] = -d.signs[x.id];
            }
        }
        Ok(d)
    }

    /// The diagram of the mirror image: every crossing switched.
    pub fn mirror(&self) -> Self {
        let mut d = self.clone();
        for v in d.components.iter_mut().flatten() {
            v.over = !v.over;
        }
        for s in d.signs.iter_mut() {
            *s = -*s;
        }
        d
    }

    /// Drops the given crossings from every component and renumbers the rest.
    fn without(&self, drop: &[usize]) -> Self {
        let mut map = vec![usize::MAX; self.signs.len()];
        let mut signs = Vec::with_capacity(self.signs.len());
        for (c, &s) in self.signs.iter().enumerate() {
            if !drop.contains(&c) {
                map[c] = signs.len();
                signs.push(s);
            }
        }
        let components = self
            .components
            .iter()
            .map(|comp| {
                comp.iter()
                    .filter(|v| map[v.crossing] != usize::MAX)
                    .map(|v| Visit {
                        crossing: map[v.crossing],
                        over: v.over,
                    })
                    .collect()
            })
            .collect();
        Self { components, signs }
    }

    fn kink(&self) -> Option<usize> {
        self.components.iter().find_map(|comp| {
            let k = comp.len();
            (0..k)
                .find(|&t| k > 1 && comp[t].crossing == comp[(t + 1) % k].crossing)
                .map(|t| comp[t].crossing)
        })
    }

    /// Two crossings met in a row over by one strand and in a row under by
    /// another, with opposite signs.
    fn bigon(&self) -> Option<[usize; 2]> {
        let mut at = vec![[(0, 0); 2]; self.signs.len()];
        for (i, comp) in self.components.iter().enumerate() {
            for (t, v) in comp.iter().enumerate() {
                at[v.crossing][v.over as usize] = (i, t);
            }
        }
        for comp in &self.components {
            let k = comp.len();
            for t in 0..k {
                let (a, b) = (comp[t], comp[(t + 1) % k]);
                if !a.over
                    || !b.over
                    || a.crossing == b.crossing
                    || self.signs[a.crossing] == self.signs[b.crossing]
                {
                    continue;
                }
                let (j, p) = at[a.crossing][0];
                let (j2, q) = at[b.crossing][0];
                let len = self.components[j].len();
                if j == j2 && ((p + 1) % len == q || (q + 1) % len == p) {
                    return Some([a.crossing, b.crossing]);
                }
            }
        }
        None
    }

    /// Removes kinks and bigons (Reidemeister I and II moves) until none
    /// are left. The link type is unchanged.
    pub fn reduced(&self) -> Self {
        let mut d = self.clone();
        loop {
            if let Some(c) = d.kink() {
                d = d.without(&[c]);
            } else if let Some(pair) = d.bigon() {
                d = d.without(&pair);
            } else {
                return d;
            }
        }
    }

    /// Encoding with crossing ids renumbered by first appearance, keeping
    /// each component's basepoint. Equal diagrams up to relabeling of ids
    /// get equal keys.
    pub fn relabeled_key(&self) -> Vec<i32> {
        let mut map = vec![usize::MAX; self.signs.len()];
        let mut next = 0;
        let mut out = Vec::with_capacity(2 * self.signs.len() + self.components.len());
        for comp in &self.components {
            for v in comp {
                if map[v.crossing] == usize::MAX {
                    map[v.crossing] = next;
                    next += 1;
                }
                out.push(encode(map[v.crossing], v.over, self.signs[v.crossing]));
            }
            out.push(0);
        }
        out
    }

    /// Canonical form: each component in turn is rotated to the start that
    /// gives the lexicographically least first-appearance encoding.
    pub fn canonical(&self) -> Self {
        let mut map = vec![usize::MAX; self.signs.len()];
        let mut next = 0;
        let mut comps = Vec::with_capacity(self.components.len());
        for comp in &self.components {
            let k = comp.len();
            let code_for = |r: usize| -> Vec<i32> {
                let mut m = map.clone();
                let mut nx = next;
                (0..k)
                    .map(|t| {
                        let v = comp[(r + t) % k];
                        if m[v.crossing] == usize::MAX {
                            m[v.crossing] = nx;
                            nx += 1;
                        }
                        encode(m[v.crossing], v.over, self.signs[v.crossing])
                    })
                    .collect()
            };
            let best = (0..k.max(1))
                .min_by_key(|&r| if k == 0 { Vec::new() } else { code_for(r) })
                .unwrap_or(0);
            let rotated: Vec<Visit> = (0..k).map(|t| comp[(best + t) % k]).collect();
            for v in &rotated {
                if map[v.crossing] == usize::MAX {
                    map[v.crossing] = next;
                    next += 1;
                }
            }
            comps.push(rotated);
        }
        let mut signs = vec![0i8; self.signs.len()];
        for (old, &new) in map.iter().enumerate() {
            signs[new] = self.signs[old];
        }
        let comps = comps
            .into_iter()
            .map(|c| {
                c.into_iter()
                    .map(|v| Visit {
                        crossing: map[v.crossing],
                        over: v.over,
                    })
                    .collect()
            })
            .collect();
        Self {
            components: comps,
            signs,
        }
    }
}

fn encode(id: usize, over: bool, sign: i8) -> i32 {
    let base = 4 * id as i32 + if over { 1 } else { 3 };
    base * sign as i32
}

impl fmt::Display for LinkDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.gauss_text())
    }
}

/// The walk following a cycle of a simple-graph projection in its stored
/// vertex order.
pub fn walk_for_cycle(proj: &Projection, c: &Cycle) -> Result<EdgeWalk> {
    let mut walk = Vec::with_capacity(c.len());
    for (a, b) in c.edges() {
        let key = if a < b { (a, b) } else { (b, a) };
        let idx = proj
            .edges
            .iter()
            .position(|&e| e == key)
            .ok_or_else(|| Error::Argument(format!("cycle {c} uses missing edge {a}-{b}")))?;
        walk.push((idx, proj.edges[idx].0 == a));
    }
    Ok(EdgeWalk(walk))
}

/// Restricts the crossings of `proj` to the given closed walks, one
/// component per walk, ordered by traversal from each walk's start.
pub fn diagram_for_walks(proj: &Projection, walks: &[EdgeWalk]) -> Result<LinkDiagram> {
    if walks.is_empty() {
        return arg("no components");
    }
    let m = proj.edges.len();
    // Segment index → (component, step in walk, forward).
    let mut place: Vec<Option<(usize, usize, bool)>> = vec![None; proj.segments.len()];
    let mut by_edge: Vec<Vec<usize>> = vec![Vec::new(); m];
    for (i, s) in proj.segments.iter().enumerate() {
        by_edge[s.edge].push(i);
    }
    for (ci, w) in walks.iter().enumerate() {
        if w.0.is_empty() {
            return arg("empty walk");
        }
        for (step, &(edge, fwd)) in w.0.iter().enumerate() {
            if edge >= m {
                return arg(format!("edge index {edge} out of range"));
            }
            for &s in &by_edge[edge] {
                if place[s].is_some() {
                    return arg(format!("edge {} used twice", edge + 1));
                }
                place[s] = Some((ci, step, fwd));
            }
        }
    }
    let seq_key = |seg: usize, param: &Q| -> (usize, usize, usize, Q) {
        let (ci, step, fwd) = place[seg].unwrap();
        let s = &proj.segments[seg];
        let n_seg = by_edge[s.edge].len();
        if fwd {
            (ci, step, s.seq, param.clone())
        } else {
            (ci, step, n_seg - 1 - s.seq, Q::one() - param)
        }
    };
    let mut passages: Vec<((usize, usize, usize, Q), usize, bool)> = Vec::new();
    let mut signs = Vec::new();
    for x in &proj.crossings {
        let (Some(po), Some(pu)) = (place[x.over], place[x.under]) else {
            continue;
        };
        let id = signs.len();
        let flip = if po.2 == pu.2 { 1 } else { -1 };
        signs.push(x.sign * flip);
        passages.push((seq_key(x.over, &x.s_over), id, true));
        passages.push((seq_key(x.under, &x.s_under), id, false));
    }
    passages.sort_by(|a, b| a.0.cmp(&b.0));
    let mut comps: Vec<Vec<Visit>> = vec![Vec::new(); walks.len()];
    for (key, id, over) in passages {
        comps[key.0].push(Visit { crossing: id, over });
    }
    // Renumber ids by first appearance for readable output.
    let mut map = vec![usize::MAX; signs.len()];
    let mut next = 0;
    for v in comps.iter().flatten() {
        if map[v.crossing] == usize::MAX {
            map[v.crossing] = next;
            next += 1;
        }
    }
    let mut new_signs = vec![0i8; signs.len()];
    for (old, &new) in map.iter().enumerate() {
        new_signs[new] = signs[old];
    }
    let comps = comps
        .into_iter()
        .map(|c| {
            c.into_iter()
                .map(|v| Visit {
                    crossing: map[v.crossing],
                    over: v.over,
                })
                .collect()
        })
        .collect();
    LinkDiagram::new(comps, new_signs).map_err(|e| Error::Internal(e.to_string()))
}

/// The knot diagram of one cycle.
pub fn diagram_for_cycle(proj: &Projection, c: &Cycle) -> Result<LinkDiagram> {
    diagram_for_walks(proj, &[walk_for_cycle(proj, c)?])
}

/// The two-component link diagram of a disjoint cycle pair, first cycle first.
pub fn diagram_for_pair(proj: &Projection, pair: &CyclePair) -> Result<LinkDiagram> {
    if !pair.first.is_disjoint(&pair.second) {
        return arg(format!("cycles of {pair} are not disjoint"));
    }
    diagram_for_walks(
        proj,
        &[
            walk_for_cycle(proj, &pair.first)?,
            walk_for_cycle(proj, &pair.second)?,
        ],
    )
}

/// Knot diagram of a D4 4-cycle `[i, j, k, l]` (1-based edge indices).
pub fn diagram_for_d4_cycle(proj: &Projection, c: &[usize; 4]) -> Result<LinkDiagram> {
    diagram_for_walks(proj, &[D4Graph::walk_four(c)])
}

/// Link diagram of two D4 2-cycles.
pub fn diagram_for_d4_pair(
    proj: &Projection,
    a: &[usize; 2],
    b: &[usize; 2],
) -> Result<LinkDiagram> {
    diagram_for_walks(proj, &[D4Graph::walk_two(a), D4Graph::walk_two(b)])
}

#[cfg(test)]
mod tests {
    use super::*;

    const TREFOIL: &str = "O1+ U2+ O3+ U1+ O2+ U3+";

    #[test]
    fn gauss_round_trip() {
        let d = LinkDiagram::from_gauss(TREFOIL).unwrap();
        assert_eq!(d.crossing_count(), 3);
        assert_eq!(d.gauss_text(), TREFOIL);
        let hopf = LinkDiagram::from_gauss("O1+ U2+\nO2+ U1+").unwrap();
        assert_eq!(hopf.component_count(), 2);
        assert_eq!(LinkDiagram::from_gauss(&hopf.gauss_text()).unwrap(), hopf);
    }

    #[test]
    fn gauss_rejects_bad_input() {
        assert!(LinkDiagram::from_gauss("O1+ O1+").is_err());
        assert!(LinkDiagram::from_gauss("O1+ U1-").is_err());
        assert!(LinkDiagram::from_gauss("X1+ U1+").is_err());
        assert!(LinkDiagram::from_gauss("O1+").is_err());
    }

    #[test]
    fn reduction_moves() {
        let trefoil = LinkDiagram::from_gauss(TREFOIL).unwrap();
        assert_eq!(trefoil.reduced(), trefoil);
        let kinked = LinkDiagram::from_gauss("O4- U4- O1+ U2+ O3+ U1+ O2+ U3+").unwrap();
        assert_eq!(kinked.reduced().crossing_count(), 3);
        let bigon = LinkDiagram::from_gauss("O1+ O2-\nU2- U1+").unwrap();
        let r = bigon.reduced();
        assert_eq!((r.crossing_count(), r.component_count()), (0, 2));
        // same-sign pair is a Hopf-type clasp, not a bigon
        let clasp = LinkDiagram::from_gauss("O1+ U2+\nO2+ U1+").unwrap();
        assert_eq!(clasp.reduced(), clasp);
    }

    #[test]
    fn switch_is_an_involution() {
        let d = LinkDiagram::from_gauss(TREFOIL).unwrap();
        for c in 0..3 {
            let s = d.switch_crossing(c).unwrap();
            assert_eq!(s.crossing_count(), 3);
            assert_eq!(s.sign(c), -d.sign(c));
            assert_eq!(s.switch_crossing(c).unwrap(), d);
        }
        assert!(d.switch_crossing(3).is_err());
    }

    #[test]
    fn smoothing_changes_components_by_one() {
        let d = LinkDiagram::from_gauss(TREFOIL).unwrap();
        let s = d.smooth_crossing(0).unwrap();
        assert_eq!(s.component_count(), 2);
        assert_eq!(s.crossing_count(), 2);
        let hopf = LinkDiagram::from_gauss("O1+ U2+\nO2+ U1+").unwrap();
        let m = hopf.smooth_crossing(0).unwrap();
        assert_eq!(m.component_count(), 1);
        assert_eq!(m.crossing_count(), 1);
        assert!(hopf.smooth_crossing(5).is_err());
    }

    #[test]
    fn crossing_roles() {
        let d = LinkDiagram::from_gauss(TREFOIL).unwrap();
        for x in d.crossings() {
            assert_ne!(x.over, x.under);
        }
        assert!(d.inter_component().is_empty());
    }

    #[test]
    fn reverse_flips_mixed_signs_only() {
        let d = LinkDiagram::from_gauss("O1+ U2+ O3- U3-\nO2+ U1+").unwrap();
        let r = d.reverse_component(1).unwrap();
        assert_eq!(r.signs(), &[-1, -1, -1]);
    }

    #[test]
    fn canonical_is_rotation_invariant() {
        let a = LinkDiagram::from_gauss("O1+ U2+ O3+ U1+ O2+ U3+").unwrap();
        let b = LinkDiagram::from_gauss("U1+ O2+ U3+ O1+ U2+ O3+").unwrap();
        assert_eq!(a.canonical(), b.canonical());
        assert_eq!(a.canonical().canonical(), a.canonical());
    }
}
