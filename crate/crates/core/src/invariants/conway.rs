use std::collections::HashMap;
use std::fmt;

use super::poly::{determinant, in_z, to_i64, Laurent};
use crate::diagram::{seifert_matrix, LinkDiagram, SeifertMatrix};
use crate::error::{arg, Error, Result};

/// Node cap for the skein recursion.
pub const SKEIN_BUDGET: usize = 1_000_000;

/// Integer coefficients of `z^0, z^1, ...`, without trailing zeros.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct ConwayPolynomial {
    pub coeffs: Vec<i64>,
}

impl ConwayPolynomial {
    pub fn one() -> Self {
        Self { coeffs: vec![1] }
    }

    pub fn zero() -> Self {
        Self::default()
    }

    pub fn coefficient(&self, k: usize) -> i64 {
        self.coeffs.get(k).copied().unwrap_or(0)
    }

    fn trimmed(mut self) -> Self {
        while self.coeffs.last() == Some(&0) {
            self.coeffs.pop();
        }
        self
    }

    fn add_shifted(&self, o: &Self, scale: i64) -> Self {
        let n = self.coeffs.len().max(o.coeffs.len() + 1);
        let mut c = vec![0; n];
        for (i, x) in self.coeffs.iter().enumerate() {
            c[i] += x;
        }
        for (i, x) in o.coeffs.iter().enumerate() {
            c[i + 1] += scale * x;
        }
        Self { coeffs: c }.trimmed()
    }
}

impl fmt::Display for ConwayPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms: Vec<String> = self
            .coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| **c != 0)
            .map(|(k, &c)| match k {
                0 => c.to_string(),
                _ => {
                    let mag = if c.abs() == 1 {
                        String::new()
                    } else {
                        c.abs().to_string()
                    };
                    let pow = if k == 1 {
                        "z".to_string()
                    } else {
                        format!("z^{k}")
                    };
                    format!("{}{mag}{pow}", if c < 0 { "-" } else { "" })
                }
            })
            .collect();
        if terms.is_empty() {
            return f.write_str("0");
        }
        let mut s = terms[0].clone();
        for t in &terms[1..] {
            match t.strip_prefix('-') {
                Some(rest) => s.push_str(&format!(" - {rest}")),
                None => s.push_str(&format!(" + {t}")),
            }
        }
        f.write_str(&s)
    }
}

/// Half the signed count of crossings between the two components.
pub fn linking_number(d: &LinkDiagram) -> Result<i64> {
    if d.component_count() != 2 {
        return arg(format!(
            "linking number needs 2 components, got {}",
            d.component_count()
        ));
    }
    let s: i64 = d.inter_component().iter().map(|x| x.sign as i64).sum();
    if s % 2 != 0 {
        return Err(Error::Internal("odd number of mixed crossings".into()));
    }
    Ok(s / 2)
}

/// Conway polynomial from a Seifert matrix: det(xV - x⁻¹Vᵀ) with z = x - x⁻¹.
pub fn conway_from_seifert(v: &SeifertMatrix) -> Result<ConwayPolynomial> {
    let n = v.size();
    let m: Vec<Vec<Laurent>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    Laurent::monomial(v.get(i, j).into(), 1)
                        .sub(&Laurent::monomial(v.get(j, i).into(), -1))
                })
                .collect()
        })
        .collect();
    let z = in_z(&determinant(m)?)?;
    Ok(ConwayPolynomial {
        coeffs: z.iter().map(to_i64).collect::<Result<_>>()?,
    }
    .trimmed())
}

/// The Conway polynomial of a knot diagram through its Seifert matrix.
pub fn conway_seifert(d: &LinkDiagram) -> Result<ConwayPolynomial> {
    if d.component_count() != 1 {
        return arg("Seifert route needs a knot diagram");
    }
    let p = conway_from_seifert(&seifert_matrix(d)?)?;
    if p.coefficient(0) != 1 {
        return Err(Error::Internal(format!(
            "knot polynomial {p} has constant term other than 1"
        )));
    }
    Ok(p)
}

/// a₂ of a knot diagram (Seifert route).
pub fn conway_a2(d: &LinkDiagram) -> Result<i64> {
    Ok(conway_seifert(d)?.coefficient(2))
}

/// The Arf invariant: a₂ mod 2.
pub fn arf(d: &LinkDiagram) -> Result<u8> {
    Ok(conway_a2(d)?.rem_euclid(2) as u8)
}

/// First passage that meets a crossing from below before meeting it from
/// above, reading components in order from their basepoints.
fn first_ascending(d: &LinkDiagram) -> Option<usize> {
    let mut met = vec![false; d.crossing_count()];
    for v in d.components().iter().flatten() {
        if !met[v.crossing] {
            if !v.over {
                return Some(v.crossing);
            }
            met[v.crossing] = true;
        }
    }
    None
}

/// True when the components fall into two groups with no crossing between them.
fn is_split(d: &LinkDiagram) -> bool {
    let n = d.component_count();
    if n < 2 {
        return false;
    }
    let mut group: Vec<usize> = (0..n).collect();
    fn root(g: &mut [usize], x: usize) -> usize {
        let mut r = x;
        while g[r] != r {
            r = g[r];
        }
        g[x] = r;
        r
    }
    for x in d.crossings() {
        let (a, b) = (root(&mut group, x.over.0), root(&mut group, x.under.0));
        group[a] = b;
    }
    let r0 = root(&mut group, 0);
    (1..n).any(|i| root(&mut group, i) != r0)
}

struct Skein {
    memo: HashMap<Vec<i32>, ConwayPolynomial>,
    nodes: usize,
}

impl Skein {
    fn eval(&mut self, d: &LinkDiagram) -> Result<ConwayPolynomial> {
        self.nodes += 1;
        if self.nodes > SKEIN_BUDGET {
            return Err(Error::Internal(format!(
                "skein recursion exceeded {SKEIN_BUDGET} nodes"
            )));
        }
        let d = &d.reduced();
        let Some(c) = first_ascending(d) else {
            return Ok(if d.component_count() == 1 {
                ConwayPolynomial::one()
            } else {
                ConwayPolynomial::zero()
            });
        };
        if is_split(d) {
            return Ok(ConwayPolynomial::zero());
        }
        let key = d.canonical().relabeled_key();
        if let Some(p) = self.memo.get(&key) {
            return Ok(p.clone());
        }
        let sign = d.sign(c) as i64;
        let switched = self.eval(&d.switch_crossing(c)?)?;
        let smoothed = self.eval(&d.smooth_crossing(c)?)?;
        let p = switched.add_shifted(&smoothed, sign);
        self.memo.insert(key, p.clone());
        Ok(p)
    }
}

/// Conway polynomial by the skein relation ∇(L₊) - ∇(L₋) = z∇(L₀), reducing
/// to descending diagrams.
pub fn conway_skein(d: &LinkDiagram) -> Result<ConwayPolynomial> {
    if d.component_count() > 2 {
        return arg("skein evaluation takes knots and two-component links");
    }
    Skein {
        memo: HashMap::new(),
        nodes: 0,
    }
    .eval(d)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g(s: &str) -> LinkDiagram {
        LinkDiagram::from_gauss(s).unwrap()
    }

    #[test]
    fn unknot_and_trefoil() {
        assert_eq!(
            conway_skein(&LinkDiagram::trivial(1)).unwrap(),
            ConwayPolynomial::one()
        );
        assert_eq!(conway_a2(&LinkDiagram::trivial(1)).unwrap(), 0);
        let t = g("O1+ U2+ O3+ U1+ O2+ U3+");
        assert_eq!(conway_skein(&t).unwrap().coeffs, vec![1, 0, 1]);
        assert_eq!(conway_seifert(&t).unwrap().coeffs, vec![1, 0, 1]);
        assert_eq!(conway_a2(&t.mirror()).unwrap(), 1);
        assert_eq!(arf(&t).unwrap(), 1);
        for c in 0..3 {
            assert_eq!(conway_a2(&t.switch_crossing(c).unwrap()).unwrap(), 0);
        }
    }

    #[test]
    fn hopf_link() {
        let h = g("O1+ U2+\nO2+ U1+");
        assert_eq!(linking_number(&h).unwrap(), 1);
        assert_eq!(conway_skein(&h).unwrap().coeffs, vec![0, 1]);
        assert_eq!(
            linking_number(&h.reverse_component(0).unwrap()).unwrap(),
            -1
        );
        assert!(linking_number(&LinkDiagram::trivial(1)).is_err());
    }

    #[test]
    fn split_link_is_zero() {
        assert_eq!(
            conway_skein(&LinkDiagram::trivial(2)).unwrap(),
            ConwayPolynomial::zero()
        );
        assert_eq!(linking_number(&LinkDiagram::trivial(2)).unwrap(), 0);
    }

    #[test]
    fn display() {
        assert_eq!(
            ConwayPolynomial {
                coeffs: vec![1, 0, -1]
            }
            .to_string(),
            "1 - z^2"
        );
        assert_eq!(
            ConwayPolynomial {
                coeffs: vec![0, 2, 0, 1]
            }
            .to_string(),
            "2z + z^3"
        );
        assert_eq!(ConwayPolynomial::zero().to_string(), "0");
    }
}
