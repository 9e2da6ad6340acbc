//! Intersection numbers on the projective plane and on Hirzebruch surfaces,
//! arithmetic genus by adjunction, and Chern numbers of double covers.
//!
//! On `F_N` a class is `aF + bT` with `F` a fiber and `T` a section with
//! `T^2 = N`, so `F^2 = 0` and `F.T = 1`. The negative section is
//! `T - NF`. Everything is exact integer arithmetic.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "kind")]
pub enum Surface {
    P2,
    #[serde(rename = "FN")]
    Hirzebruch {
        #[serde(rename = "N")]
        n: u32,
    },
}

impl fmt::Display for Surface {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Surface::P2 => f.write_str("P2"),
            Surface::Hirzebruch { n } => write!(f, "F_{n}"),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(untagged, deny_unknown_fields)]
pub enum DivClass {
    /// Multiple of the line class on `P2`.
    Degree { d: i64 },
    /// `aF + bT` on `F_N`.
    Bidegree { a: i64, b: i64 },
}

impl DivClass {
    pub const fn degree(d: i64) -> Self {
        DivClass::Degree { d }
    }

    pub const fn bidegree(a: i64, b: i64) -> Self {
        DivClass::Bidegree { a, b }
    }

    pub const FIBER: DivClass = DivClass::Bidegree { a: 1, b: 0 };
    pub const SECTION: DivClass = DivClass::Bidegree { a: 0, b: 1 };
    pub const LINE: DivClass = DivClass::Degree { d: 1 };

    pub fn scale(self, k: i64) -> Self {
        match self {
            DivClass::Degree { d } => DivClass::Degree { d: k * d },
            DivClass::Bidegree { a, b } => DivClass::Bidegree { a: k * a, b: k * b },
        }
    }

    /// Componentwise sum; both classes must have the same shape.
    pub fn checked_add(self, other: DivClass) -> Result<Self> {
        match (self, other) {
            (DivClass::Degree { d: x }, DivClass::Degree { d: y }) => Ok(DivClass::Degree { d: x + y }),
            (DivClass::Bidegree { a, b }, DivClass::Bidegree { a: c, b: d }) => {
                Ok(DivClass::Bidegree { a: a + c, b: b + d })
            }
            _ => Err(Error::Invalid(format!("cannot add {self} and {other}"))),
        }
    }

    /// `self = n * other` for some integer `n`.
    pub fn is_multiple_of(self, other: DivClass, n: i64) -> bool {
        other.scale(n) == self
    }
}

impl fmt::Display for DivClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DivClass::Degree { d } => write!(f, "degree {d}"),
            DivClass::Bidegree { a, b } => write!(f, "({a},{b})"),
        }
    }
}

impl Surface {
    pub fn fits(&self, c: DivClass) -> bool {
        matches!(
            (self, c),
            (Surface::P2, DivClass::Degree { .. }) | (Surface::Hirzebruch { .. }, DivClass::Bidegree { .. })
        )
    }

    fn check(&self, c: DivClass) -> Result<()> {
        if self.fits(c) {
            Ok(())
        } else {
            Err(Error::SurfaceMismatch {
                surface: self.to_string(),
                class: c.to_string(),
            })
        }
    }

    /// The negative section `T - NF`; `None` on `P2`.
    pub fn negative_section(&self) -> Option<DivClass> {
        match *self {
            Surface::P2 => None,
            Surface::Hirzebruch { n } => Some(DivClass::bidegree(-(n as i64), 1)),
        }
    }
}

pub fn intersect(x: Surface, d1: DivClass, d2: DivClass) -> Result<i64> {
    x.check(d1)?;
    x.check(d2)?;
    Ok(match (x, d1, d2) {
        (Surface::P2, DivClass::Degree { d: p }, DivClass::Degree { d: q }) => p * q,
        (
            Surface::Hirzebruch { n },
            DivClass::Bidegree { a: a1, b: b1 },
            DivClass::Bidegree { a: a2, b: b2 },
        ) => a1 * b2 + a2 * b1 + n as i64 * b1 * b2,
        _ => unreachable!("shapes checked above"),
    })
}

pub fn self_intersection(x: Surface, c: DivClass) -> Result<i64> {
    intersect(x, c, c)
}

/// `K = -3H` on `P2`, `K = (N - 2)F - 2T` on `F_N`.
pub fn canonical_class(x: Surface) -> DivClass {
    match x {
        Surface::P2 => DivClass::degree(-3),
        Surface::Hirzebruch { n } => DivClass::bidegree(n as i64 - 2, -2),
    }
}

/// `-K . C`.
pub fn anticanonical_degree(x: Surface, c: DivClass) -> Result<i64> {
    Ok(-intersect(x, canonical_class(x), c)?)
}

/// Arithmetic genus `(C^2 + K.C)/2 + 1`.
pub fn adjunction_genus(x: Surface, c: DivClass) -> Result<i64> {
    let num = self_intersection(x, c)? + intersect(x, canonical_class(x), c)?;
    debug_assert!(num % 2 == 0, "C^2 + K.C is even on these lattices");
    Ok(num / 2 + 1)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct ChernData {
    pub c1_sq: i64,
    pub c2: i64,
    /// Holomorphic Euler characteristic.
    pub chi: i64,
}

impl ChernData {
    /// `c2 = 5 c1^2 + 36`, the even branch of the Noether line.
    pub fn on_noether_line_even(&self) -> bool {
        self.c2 == 5 * self.c1_sq + 36
    }

    /// `c2 = 5 c1^2 + 30`, the odd branch. No double-cover model produces it
    /// here; it is exposed for classification only.
    pub fn on_noether_line_odd(&self) -> bool {
        self.c2 == 5 * self.c1_sq + 30
    }

    pub fn is_horikawa(&self) -> bool {
        if self.c1_sq.rem_euclid(2) == 0 {
            self.on_noether_line_even()
        } else {
            self.on_noether_line_odd()
        }
    }

    pub fn noether_consistent(&self) -> bool {
        self.c1_sq + self.c2 == 12 * self.chi
    }
}

/// Double cover of a rational surface branched along a curve of class `2L`:
/// `c1^2 = 2(K + L)^2`, `chi = 2 + (L^2 + L.K)/2`, `c2 = 12 chi - c1^2`.
pub fn double_cover_chern(x: Surface, l: DivClass) -> Result<ChernData> {
    let k = canonical_class(x);
    let kl = k.checked_add(l)?;
    x.check(kl)?;
    let c1_sq = 2 * self_intersection(x, kl)?;
    let num = self_intersection(x, l)? + intersect(x, l, k)?;
    debug_assert!(num % 2 == 0);
    let chi = 2 + num / 2;
    Ok(ChernData {
        c1_sq,
        c2: 12 * chi - c1_sq,
        chi,
    })
}

/// Genus of the normalized double cover of a rational curve meeting the
/// branch locus transversally in the given number of points.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum PullbackGenus {
    Genus(i64),
    /// No branch points: the cover splits into two rational curves.
    Split,
}

impl PullbackGenus {
    /// Rational or elliptic components only.
    pub fn at_most_elliptic(self) -> bool {
        match self {
            PullbackGenus::Genus(g) => g <= 1,
            PullbackGenus::Split => true,
        }
    }
}

/// Riemann-Hurwitz: `2g - 2 = 2(-2) + t`, so `g = t/2 - 1`.
pub fn rh_pullback_genus(transverse_points: i64) -> Result<PullbackGenus> {
    if transverse_points < 0 {
        return Err(Error::Invalid(format!(
            "transverse point count must be non-negative, got {transverse_points}"
        )));
    }
    if transverse_points % 2 != 0 {
        return Err(Error::Odd {
            what: "transverse point count",
            value: transverse_points,
        });
    }
    Ok(if transverse_points == 0 {
        PullbackGenus::Split
    } else {
        PullbackGenus::Genus(transverse_points / 2 - 1)
    })
}

/// A class literal `{"surface":{...},"class":{...}}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ClassLiteral {
    pub surface: Surface,
    pub class: DivClass,
}

impl ClassLiteral {
    pub fn validate(self) -> Result<Self> {
        self.surface.check(self.class)?;
        Ok(self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const P2: Surface = Surface::P2;

    fn fn_(n: u32) -> Surface {
        Surface::Hirzebruch { n }
    }

    #[test]
    fn hirzebruch_intersections() {
        for n in 0..6 {
            let x = fn_(n);
            let d = DivClass::bidegree(7, 5);
            assert_eq!(intersect(x, d, DivClass::FIBER).unwrap(), 5);
            assert_eq!(intersect(x, DivClass::SECTION, DivClass::SECTION).unwrap(), n as i64);
            if n >= 1 {
                let t = x.negative_section().unwrap();
                assert_eq!(intersect(x, d, t).unwrap(), 7);
                assert_eq!(self_intersection(x, t).unwrap(), -(n as i64));
            }
        }
        assert_eq!(intersect(P2, DivClass::LINE, DivClass::LINE).unwrap(), 1);
    }

    #[test]
    fn mismatched_surface() {
        assert!(matches!(
            intersect(P2, DivClass::FIBER, DivClass::LINE),
            Err(Error::SurfaceMismatch { .. })
        ));
        assert!(adjunction_genus(fn_(1), DivClass::degree(3)).is_err());
    }

    #[test]
    fn canonical_class_by_adjunction() {
        for n in 0..8 {
            let x = fn_(n);
            assert_eq!(anticanonical_degree(x, DivClass::FIBER).unwrap(), 2);
            assert_eq!(anticanonical_degree(x, DivClass::SECTION).unwrap(), n as i64 + 2);
            assert_eq!(adjunction_genus(x, DivClass::FIBER).unwrap(), 0);
            assert_eq!(adjunction_genus(x, DivClass::SECTION).unwrap(), 0);
            // K^2 = 8 on every Hirzebruch surface
            assert_eq!(self_intersection(x, canonical_class(x)).unwrap(), 8);
        }
        assert_eq!(anticanonical_degree(P2, DivClass::LINE).unwrap(), 3);
        assert_eq!(self_intersection(P2, canonical_class(P2)).unwrap(), 9);
    }

    #[test]
    fn genus_values() {
        assert_eq!(adjunction_genus(P2, DivClass::degree(5)).unwrap(), 6);
        assert_eq!(adjunction_genus(P2, DivClass::degree(1)).unwrap(), 0);
        assert_eq!(adjunction_genus(fn_(0), DivClass::bidegree(4, 4)).unwrap(), 9);
        for n in 1..=10 {
            assert_eq!(
                adjunction_genus(fn_(n), DivClass::bidegree(3, 4)).unwrap(),
                6 * n as i64 + 6
            );
        }
    }

    #[test]
    fn chern_of_plane_double_covers() {
        let c = double_cover_chern(P2, DivClass::degree(5)).unwrap();
        assert_eq!(c, ChernData { c1_sq: 8, c2: 76, chi: 7 });
        assert!(c.on_noether_line_even());
        let k3 = double_cover_chern(P2, DivClass::degree(3)).unwrap();
        assert_eq!(k3.c1_sq, 0);
        assert_eq!(k3.chi, 2);
        assert_eq!(k3.c2, 24);
    }

    #[test]
    fn chern_of_hirzebruch_double_covers() {
        for n in 0..=20i64 {
            let c = double_cover_chern(fn_(n as u32), DivClass::bidegree(3, 3)).unwrap();
            assert_eq!(c.c1_sq, 6 * n + 4);
            assert_eq!(c.c2, 30 * n + 56);
            assert!(c.on_noether_line_even());
            assert!(c.noether_consistent());
        }
    }

    #[test]
    fn odd_noether_branch() {
        // quintic surface in P3
        let quintic = ChernData { c1_sq: 5, c2: 55, chi: 5 };
        assert!(quintic.on_noether_line_odd());
        assert!(quintic.is_horikawa());
        assert!(quintic.noether_consistent());
    }

    #[test]
    fn riemann_hurwitz() {
        assert_eq!(rh_pullback_genus(4).unwrap(), PullbackGenus::Genus(1));
        assert_eq!(rh_pullback_genus(2).unwrap(), PullbackGenus::Genus(0));
        assert_eq!(rh_pullback_genus(6).unwrap(), PullbackGenus::Genus(2));
        assert_eq!(rh_pullback_genus(0).unwrap(), PullbackGenus::Split);
        assert!(matches!(rh_pullback_genus(3), Err(Error::Odd { .. })));
        assert!(rh_pullback_genus(-2).is_err());
    }

    #[test]
    fn tangent_fiber_bound() {
        // a fiber meeting the branch curve in b points with one tangency has
        // at most b - 2 transverse points
        for b in (2..=6).step_by(2) {
            assert!(rh_pullback_genus(b - 2).unwrap().at_most_elliptic());
        }
        assert!(!rh_pullback_genus(8 - 2).unwrap().at_most_elliptic());
    }

    #[test]
    fn class_literals() {
        let p: ClassLiteral =
            serde_json::from_str(r#"{"surface":{"kind":"P2"},"class":{"d":5}}"#).unwrap();
        assert_eq!(p.class, DivClass::degree(5));
        let f: ClassLiteral =
            serde_json::from_str(r#"{"surface":{"kind":"FN","N":1},"class":{"a":3,"b":4}}"#).unwrap();
        assert_eq!(f.surface, fn_(1));
        assert_eq!(f.class, DivClass::bidegree(3, 4));
        let bad: ClassLiteral =
            serde_json::from_str(r#"{"surface":{"kind":"P2"},"class":{"a":3,"b":4}}"#).unwrap();
        assert!(bad.validate().is_err());
        assert_eq!(
            serde_json::to_string(&f).unwrap(),
            r#"{"surface":{"kind":"FN","N":1},"class":{"a":3,"b":4}}"#
        );
    }
}
