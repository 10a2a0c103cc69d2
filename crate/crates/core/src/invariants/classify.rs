use std::fmt;

use crate::error::{arg, Error, Result};

/// Knot types realizable with at most seven sticks.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum KnotClass {
    Unknot,
    Trefoil,
    FigureEight,
    OutOfScope,
}

/// Two-component link types realizable with at most seven sticks in total.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum LinkClass {
    Trivial,
    Hopf,
    Torus24,
    OutOfScope,
}

impl fmt::Display for KnotClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            KnotClass::Unknot => "unknot",
            KnotClass::Trefoil => "trefoil",
            KnotClass::FigureEight => "figure-eight",
            KnotClass::OutOfScope => "out-of-scope",
        })
    }
}

impl fmt::Display for LinkClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            LinkClass::Trivial => "trivial",
            LinkClass::Hopf => "hopf",
            LinkClass::Torus24 => "torus-2-4",
            LinkClass::OutOfScope => "out-of-scope",
        })
    }
}

fn check_bound(bound: u32) -> Result<()> {
    if bound > 7 {
        return arg(format!(
            "stick bound {bound} is above 7; the table does not apply"
        ));
    }
    Ok(())
}

/// Knot type from a₂ for a knot with at most `stick_bound` (≤ 7) sticks:
/// only the trefoil (6 sticks) and the figure-eight (7) are nontrivial.
pub fn classify_knot(a2: i64, stick_bound: u32) -> Result<KnotClass> {
    check_bound(stick_bound)?;
    let violation = |what: &str| {
        Err(Error::InvariantViolation(format!(
            "a2 = {a2} with {stick_bound} sticks: {what}"
        )))
    };
    match a2 {
        0 => Ok(KnotClass::Unknot),
        1 if stick_bound >= 6 => Ok(KnotClass::Trefoil),
        -1 if stick_bound >= 7 => Ok(KnotClass::FigureEight),
        1 | -1 => violation("too few sticks for a nontrivial knot of this type"),
        _ => violation("no knot with at most 7 sticks has this a2"),
    }
}

/// Link type from the linking number for a link with at most
/// `stick_bound` (≤ 7) sticks: trivial or Hopf with 6, the (2,4)-torus
/// link needs 7.
pub fn classify_link(lk: i64, stick_bound: u32) -> Result<LinkClass> {
    check_bound(stick_bound)?;
    let violation = |what: &str| {
        Err(Error::InvariantViolation(format!(
            "lk = {lk} with {stick_bound} sticks: {what}"
        )))
    };
    match lk.abs() {
        0 => Ok(LinkClass::Trivial),
        1 if stick_bound >= 6 => Ok(LinkClass::Hopf),
        2 if stick_bound >= 7 => Ok(LinkClass::Torus24),
        1 | 2 => violation("too few sticks for this link"),
        _ => violation("no link with at most 7 sticks has this linking number"),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn knots() {
        assert_eq!(classify_knot(0, 7).unwrap(), KnotClass::Unknot);
        assert_eq!(classify_knot(1, 6).unwrap(), KnotClass::Trefoil);
        assert_eq!(classify_knot(-1, 7).unwrap(), KnotClass::FigureEight);
        assert!(matches!(
            classify_knot(-1, 6),
            Err(Error::InvariantViolation(_))
        ));
        assert!(matches!(
            classify_knot(2, 7),
            Err(Error::InvariantViolation(_))
        ));
        assert!(matches!(
            classify_knot(1, 5),
            Err(Error::InvariantViolation(_))
        ));
        assert!(classify_knot(0, 8).is_err());
    }

    #[test]
    fn links() {
        assert_eq!(classify_link(1, 6).unwrap(), LinkClass::Hopf);
        assert_eq!(classify_link(-2, 7).unwrap(), LinkClass::Torus24);
        assert_eq!(classify_link(0, 6).unwrap(), LinkClass::Trivial);
        assert!(matches!(
            classify_link(2, 6),
            Err(Error::InvariantViolation(_))
        ));
        assert!(matches!(
            classify_link(3, 7),
            Err(Error::InvariantViolation(_))
        ));
    }
}
