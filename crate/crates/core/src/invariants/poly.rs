//! Integer Laurent polynomials in x and the determinant route to the
//! Conway polynomial.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// `Σ c[i] x^(lo + i)`, trimmed so the first and last coefficients are nonzero.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Laurent {
    lo: i64,
    c: Vec<BigInt>,
}

impl Laurent {
    pub fn zero() -> Self {
        Self {
            lo: 0,
            c: Vec::new(),
        }
    }

    pub fn monomial(coef: BigInt, deg: i64) -> Self {
        Self {
            lo: deg,
            c: vec![coef],
        }
        .trimmed()
    }

    pub fn constant(k: i64) -> Self {
        Self::monomial(BigInt::from(k), 0)
    }

    fn trimmed(mut self) -> Self {
        while self.c.last().is_some_and(|x| x.is_zero()) {
            self.c.pop();
        }
        let lead = self.c.iter().take_while(|x| x.is_zero()).count();
        if lead == self.c.len() {
            return Self::zero();
        }
        self.c.drain(..lead);
        self.lo += lead as i64;
        self
    }

    pub fn is_zero(&self) -> bool {
        self.c.is_empty()
    }

    /// Highest exponent; undefined for zero.
    pub fn hi(&self) -> i64 {
        self.lo + self.c.len() as i64 - 1
    }

    pub fn lo(&self) -> i64 {
        self.lo
    }

    pub fn coeff(&self, deg: i64) -> BigInt {
        if self.is_zero() || deg < self.lo || deg > self.hi() {
            return BigInt::zero();
        }
        self.c[(deg - self.lo) as usize].clone()
    }

    pub fn add(&self, o: &Self) -> Self {
        if self.is_zero() {
            return o.clone();
        }
        if o.is_zero() {
            return self.clone();
        }
        let lo = self.lo.min(o.lo);
        let hi = self.hi().max(o.hi());
        let c = (lo..=hi).map(|d| self.coeff(d) + o.coeff(d)).collect();
        Self { lo, c }.trimmed()
    }

    pub fn neg(&self) -> Self {
        Self {
            lo: self.lo,
            c: self.c.iter().map(|x| -x).collect(),
        }
    }

    pub fn sub(&self, o: &Self) -> Self {
        self.add(&o.neg())
    }

    pub fn mul(&self, o: &Self) -> Self {
        if self.is_zero() || o.is_zero() {
            return Self::zero();
        }
        let mut c = vec![BigInt::zero(); self.c.len() + o.c.len() - 1];
        for (i, a) in self.c.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in o.c.iter().enumerate() {
                c[i + j] += a * b;
            }
        }
        Self {
            lo: self.lo + o.lo,
            c,
        }
        .trimmed()
    }

    /// Exact quotient; errors when `o` does not divide `self`.
    pub fn div_exact(&self, o: &Self) -> Result<Self> {
        if o.is_zero() {
            return Err(Error::Internal("division by the zero polynomial".into()));
        }
        let mut rem = self.clone();
        let mut q = Self::zero();
        let lead = o.c.last().unwrap();
        while !rem.is_zero() && rem.c.len() >= o.c.len() {
            let (quot, r) = rem.c.last().unwrap().div_rem(lead);
            if !r.is_zero() {
                break;
            }
            let t = Self::monomial(quot, rem.hi() - o.hi());
            rem = rem.sub(&t.mul(o));
            q = q.add(&t);
        }
        if !rem.is_zero() {
            return Err(Error::Internal("inexact polynomial division".into()));
        }
        Ok(q)
    }
}

/// Determinant by fraction-free elimination with row pivoting.
pub fn determinant(mut m: Vec<Vec<Laurent>>) -> Result<Laurent> {
    let n = m.len();
    if n == 0 {
        return Ok(Laurent::constant(1));
    }
    let mut sign = 1;
    let mut prev = Laurent::constant(1);
    for k in 0..n - 1 {
        if m[k][k].is_zero() {
            match (k + 1..n).find(|&r| !m[r][k].is_zero()) {
                Some(r) => {
                    m.swap(k, r);
                    sign = -sign;
                }
                None => return Ok(Laurent::zero()),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = m[i][j].mul(&m[k][k]).sub(&m[i][k].mul(&m[k][j]));
                m[i][j] = num.div_exact(&prev)?;
            }
            m[i][k] = Laurent::zero();
        }
        prev = m[k][k].clone();
    }
    let d = m[n - 1][n - 1].clone();
    Ok(if sign < 0 { d.neg() } else { d })
}

/// Rewrites a Laurent polynomial as a polynomial in `z = x - 1/x`,
/// returning coefficients of `z^0, z^1, ...`.
pub fn in_z(p: &Laurent) -> Result<Vec<BigInt>> {
    let z = Laurent {
        lo: -1,
        c: vec![BigInt::from(-1), BigInt::zero(), BigInt::one()],
    };
    let mut rem = p.clone();
    let mut out: Vec<BigInt> = Vec::new();
    while !rem.is_zero() && rem.hi() > 0 {
        let d = rem.hi();
        let c = rem.coeff(d);
        let mut zd = Laurent::constant(1);
        for _ in 0..d {
            zd = zd.mul(&z);
        }
        rem = rem.sub(&zd.mul(&Laurent::monomial(c.clone(), 0)));
        if out.len() <= d as usize {
            out.resize(d as usize + 1, BigInt::zero());
        }
        out[d as usize] = c;
    }
    if !rem.is_zero() {
        if rem.lo() != 0 || rem.hi() != 0 {
            return Err(Error::Internal(
                "polynomial is not a polynomial in x - 1/x".into(),
            ));
        }
        if out.is_empty() {
            out.push(BigInt::zero());
        }
        out[0] = rem.coeff(0);
    }
    while out.last().is_some_and(|c| c.is_zero()) {
        out.pop();
    }
    Ok(out)
}

pub(crate) fn to_i64(x: &BigInt) -> Result<i64> {
    x.to_i64()
        .ok_or_else(|| Error::Internal(format!("coefficient {x} does not fit in 64 bits")))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn lp(lo: i64, c: &[i64]) -> Laurent {
        Laurent {
            lo,
            c: c.iter().map(|&x| BigInt::from(x)).collect(),
        }
        .trimmed()
    }

    #[test]
    fn arithmetic() {
        let a = lp(-1, &[1, 0, 1]);
        let b = lp(0, &[2, -1]);
        let p = a.mul(&b);
        assert_eq!(p, lp(-1, &[2, -1, 2, -1]));
        assert_eq!(p.div_exact(&a).unwrap(), b);
        assert!(p.div_exact(&lp(0, &[3])).is_err());
        assert!(a.sub(&a).is_zero());
    }

    #[test]
    fn determinant_matches_expansion() {
        let m = vec![
            vec![lp(0, &[2]), lp(1, &[1]), lp(0, &[0])],
            vec![lp(-1, &[1]), lp(0, &[3]), lp(0, &[1])],
            vec![lp(0, &[0]), lp(0, &[1]), lp(0, &[4])],
        ];
        // 2(12 - 1) - x(4/x) = 22 - 4 = 18
        assert_eq!(determinant(m).unwrap(), lp(0, &[18]));
        let swap = vec![
            vec![Laurent::zero(), lp(0, &[1])],
            vec![lp(0, &[1]), Laurent::zero()],
        ];
        assert_eq!(determinant(swap).unwrap(), lp(0, &[-1]));
        assert_eq!(determinant(Vec::new()).unwrap(), lp(0, &[1]));
    }

    #[test]
    fn z_substitution() {
        // x^2 - 1 + x^-2 = (x - 1/x)^2 + 1
        let p = lp(-2, &[1, 0, -1, 0, 1]);
        assert_eq!(
            in_z(&p).unwrap(),
            vec![BigInt::from(1), BigInt::zero(), BigInt::from(1)]
        );
        assert!(in_z(&lp(0, &[1, 1])).is_err());
        assert!(in_z(&Laurent::zero()).unwrap().is_empty());
    }
}
