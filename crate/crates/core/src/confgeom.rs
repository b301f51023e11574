//! Configurations of three or four points in the projective plane.

use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::rational::{self, Rational};

/// A point `[z₀:z₁:z₂]`, stored with its first nonzero coordinate equal to 1.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ProjectivePoint {
    coords: [Rational; 3],
}

impl ProjectivePoint {
    pub fn new(coords: [Rational; 3]) -> Result<Self> {
        let lead = coords.iter().find(|c| !c.is_zero()).cloned().ok_or(Error::ZeroPoint)?;
        let inv = lead.recip();
        Ok(Self { coords: coords.map(|c| c * &inv) })
    }

    pub fn from_ints(z: [i64; 3]) -> Result<Self> {
        Self::new(z.map(rational::int))
    }

    pub fn coords(&self) -> &[Rational; 3] {
        &self.coords
    }
}

impl fmt::Display for ProjectivePoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [a, b, c] = &self.coords;
        write!(f, "{}:{}:{}", rational::to_string(a), rational::to_string(b), rational::to_string(c))
    }
}

/// Parses `z0:z1:z2` with rational entries.
impl FromStr for ProjectivePoint {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let parts: Vec<&str> = s.trim().trim_matches(['[', ']']).split(':').collect();
        if parts.len() != 3 {
            return Err(Error::Parse(alloc::format!("expected z0:z1:z2, got `{s}`")));
        }
        Self::new([rational::parse(parts[0])?, rational::parse(parts[1])?, rational::parse(parts[2])?])
    }
}

/// Parses a comma-separated list of points.
pub fn parse_points(s: &str) -> Result<Vec<ProjectivePoint>> {
    s.split(',').map(str::parse).collect()
}

fn cross(p: &[Rational; 3], q: &[Rational; 3]) -> [Rational; 3] {
    [
        &p[1] * &q[2] - &p[2] * &q[1],
        &p[2] * &q[0] - &p[0] * &q[2],
        &p[0] * &q[1] - &p[1] * &q[0],
    ]
}

fn dot(p: &[Rational; 3], q: &[Rational; 3]) -> Rational {
    &p[0] * &q[0] + &p[1] * &q[1] + &p[2] * &q[2]
}

/// Determinant of the matrix with rows `p`, `q`, `r`.
pub fn det3(p: &ProjectivePoint, q: &ProjectivePoint, r: &ProjectivePoint) -> Rational {
    dot(&p.coords, &cross(&q.coords, &r.coords))
}

pub fn collinear(p: &ProjectivePoint, q: &ProjectivePoint, r: &ProjectivePoint) -> bool {
    det3(p, q, r).is_zero()
}

/// Stratum of a configuration by its collinear subsets (1-based indices).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Stratum {
    /// No three points collinear.
    General,
    /// Exactly the points `i < j < k` are collinear.
    Triple(u8, u8, u8),
    /// Four points on one line.
    AllFour,
}

impl fmt::Display for Stratum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Stratum::General => f.write_str("F0"),
            Stratum::Triple(i, j, k) => write!(f, "F{i}{j}{k}"),
            Stratum::AllFour => f.write_str("F1234"),
        }
    }
}

fn check_distinct(points: &[ProjectivePoint]) -> Result<()> {
    for i in 0..points.len() {
        if points[i + 1..].contains(&points[i]) {
            return Err(Error::DuplicatePoints);
        }
    }
    Ok(())
}

/// All collinear triples `(i, j, k)`, 1-based and increasing.
pub fn collinear_triples(points: &[ProjectivePoint]) -> Vec<(u8, u8, u8)> {
    let n = points.len();
    let mut out = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            for k in j + 1..n {
                if collinear(&points[i], &points[j], &points[k]) {
                    out.push((i as u8 + 1, j as u8 + 1, k as u8 + 1));
                }
            }
        }
    }
    out
}

/// Stratum of 3 or 4 distinct points.
pub fn stratum(points: &[ProjectivePoint]) -> Result<Stratum> {
    if !(3..=4).contains(&points.len()) {
        return Err(Error::OutOfRange { what: "number of points", value: points.len() as i64 });
    }
    check_distinct(points)?;
    let triples = collinear_triples(points);
    match (points.len(), triples.as_slice()) {
        (_, []) => Ok(Stratum::General),
        (_, [(i, j, k)]) => Ok(Stratum::Triple(*i, *j, *k)),
        (4, t) if t.len() == 4 => Ok(Stratum::AllFour),
        // two collinear triples share two distinct points, hence the line
        _ => Err(Error::InconsistentConfiguration),
    }
}

/// A value in `Q ∪ {∞}`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum ExtendedRatio {
    Finite(Rational),
    Infinity,
}

impl fmt::Display for ExtendedRatio {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ExtendedRatio::Finite(r) => f.write_str(&rational::to_string(r)),
            ExtendedRatio::Infinity => f.write_str("inf"),
        }
    }
}

/// Cross-ratio `((z₃−z₁)(z₄−z₂)) / ((z₃−z₂)(z₄−z₁))` of four distinct
/// collinear points.
///
/// Each difference `z_a − z_b` is taken projectively as the 2×2 minor of the
/// two points in a coordinate chart of the line; this minor is the component
/// `k` of `p_a × p_b`, for any `k` where the line's normal vector is nonzero,
/// and the ratio does not depend on that choice.
pub fn cross_ratio(points: &[ProjectivePoint]) -> Result<ExtendedRatio> {
    if points.len() != 4 {
        return Err(Error::DimensionMismatch { expected: 4, found: points.len() });
    }
    check_distinct(points)?;
    if collinear_triples(points).len() != 4 {
        return Err(Error::NotCollinear);
    }
    let normal = cross(&points[0].coords, &points[1].coords);
    let k = normal.iter().position(|c| !c.is_zero()).expect("distinct points span a line");
    let d = |a: usize, b: usize| cross(&points[a - 1].coords, &points[b - 1].coords)[k].clone();
    let num = d(3, 1) * d(4, 2);
    let den = d(3, 2) * d(4, 1);
    if den.is_zero() {
        Ok(ExtendedRatio::Infinity)
    } else {
        Ok(ExtendedRatio::Finite(num / den))
    }
}

/// An invertible 3×3 rational matrix acting on column vectors.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Matrix3 {
    rows: [[Rational; 3]; 3],
}

impl Matrix3 {
    pub fn new(rows: [[Rational; 3]; 3]) -> Result<Self> {
        let m = Self { rows };
        if m.det().is_zero() {
            return Err(Error::SingularMatrix);
        }
        Ok(m)
    }

    pub fn from_ints(rows: [[i64; 3]; 3]) -> Result<Self> {
        Self::new(rows.map(|r| r.map(rational::int)))
    }

    pub fn identity() -> Self {
        let (o, z) = (Rational::one, Rational::zero);
        Self { rows: [[o(), z(), z()], [z(), o(), z()], [z(), z(), o()]] }
    }

    pub fn det(&self) -> Rational {
        dot(&self.rows[0], &cross(&self.rows[1], &self.rows[2]))
    }

    pub fn rows(&self) -> &[[Rational; 3]; 3] {
        &self.rows
    }
}

pub fn apply_pgl(m: &Matrix3, p: &ProjectivePoint) -> ProjectivePoint {
    let image = m.rows.clone().map(|r| dot(&r, &p.coords));
    ProjectivePoint::new(image).expect("invertible matrices have trivial kernel")
}

/// Everything known about a configuration of 3 or 4 points.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Classification {
    pub stratum: Stratum,
    pub collinear_triples: Vec<(u8, u8, u8)>,
    /// Present for four collinear points.
    pub cross_ratio: Option<ExtendedRatio>,
}

pub fn classify(points: &[ProjectivePoint]) -> Result<Classification> {
    let stratum = stratum(points)?;
    let cross_ratio = if stratum == Stratum::AllFour { Some(cross_ratio(points)?) } else { None };
    Ok(Classification { stratum, collinear_triples: collinear_triples(points), cross_ratio })
}

/// The stratum label as text, e.g. `F123`.
pub fn stratum_name(points: &[ProjectivePoint]) -> Result<String> {
    Ok(alloc::format!("{}", stratum(points)?))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::frac;
    use alloc::string::ToString;

    fn pts(s: &str) -> Vec<ProjectivePoint> {
        parse_points(s).unwrap()
    }

    #[test]
    fn canonical_form() {
        let p: ProjectivePoint = "0:2:4".parse().unwrap();
        assert_eq!(p.to_string(), "0:1:2");
        assert_eq!(p, ProjectivePoint::from_ints([0, -3, -6]).unwrap());
        assert_eq!("1/2:1:0".parse::<ProjectivePoint>().unwrap().to_string(), "1:2:0");
        assert_eq!(ProjectivePoint::from_ints([0, 0, 0]), Err(Error::ZeroPoint));
        assert!("1:2".parse::<ProjectivePoint>().is_err());
    }

    #[test]
    fn collinearity() {
        let p = pts("1:0:0,0:1:0,1:1:0,0:0:1,1:1:1,1:2:3,1:3:5");
        assert!(collinear(&p[0], &p[1], &p[2]));
        assert!(!collinear(&p[0], &p[1], &p[3]));
        assert!(collinear(&p[4], &p[5], &p[6]));
    }

    #[test]
    fn strata() {
        assert_eq!(stratum(&pts("1:0:0,0:1:0,0:0:1,1:1:1")).unwrap(), Stratum::General);
        assert_eq!(stratum(&pts("1:0:0,0:1:0,1:1:0,0:0:1")).unwrap(), Stratum::Triple(1, 2, 3));
        assert_eq!(stratum(&pts("0:1:0,0:0:1,0:1:1,0:1:2")).unwrap(), Stratum::AllFour);
        assert_eq!(stratum(&pts("1:0:0,0:1:0,1:1:0")).unwrap().to_string(), "F123");
        assert_eq!(stratum(&pts("1:0:0,2:0:0,1:1:0")), Err(Error::DuplicatePoints));
        assert!(stratum(&pts("1:0:0,0:1:0")).is_err());
    }

    #[test]
    fn cross_ratios() {
        let expected = ExtendedRatio::Finite(frac(4, 3));
        // affine coordinates 0, 1, 2, 3 on the line z₂ = 0 with z = z₁/z₀
        assert_eq!(cross_ratio(&pts("1:0:0,1:1:0,1:2:0,1:3:0")).unwrap(), expected);
        assert_eq!(cross_ratio(&pts("1:1:0,1:2:0,1:3:0,1:4:0")).unwrap(), expected);
        assert_eq!(cross_ratio(&pts("1:0:0,0:1:0,0:0:1,1:1:1")), Err(Error::NotCollinear));
        // z₃ = ∞: the ratio reduces to (z₄−z₂)/(z₄−z₁)
        let r = cross_ratio(&pts("1:0:0,1:1:0,0:1:0,1:2:0")).unwrap();
        assert_eq!(r, ExtendedRatio::Finite(frac(1, 2)));
        assert_eq!(r.to_string(), "1/2");
        assert_eq!(ExtendedRatio::Infinity.to_string(), "inf");
    }

    #[test]
    fn pgl_action() {
        let m = Matrix3::from_ints([[1, 0, 0], [0, 1, 0], [0, 0, 2]]).unwrap();
        let p: ProjectivePoint = "1:1:1".parse().unwrap();
        assert_eq!(apply_pgl(&m, &p).to_string(), "1:1:2");
        assert_eq!(apply_pgl(&Matrix3::identity(), &p), p);
        assert_eq!(Matrix3::from_ints([[1, 2, 3], [2, 4, 6], [0, 0, 1]]), Err(Error::SingularMatrix));
        let c = classify(&pts("0:1:0,0:0:1,0:1:1,0:1:2")).unwrap();
        assert_eq!(c.collinear_triples.len(), 4);
        assert!(c.cross_ratio.is_some());
    }
}
