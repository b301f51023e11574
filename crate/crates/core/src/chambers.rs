//! Admissible capacity vectors and their stability chambers.
//!
//! A chamber is the set of admissible, sorted capacity vectors on which every
//! wall functional `c ↦ area(c, A)` has a fixed sign, `A` ranging over
//! [`negative_wall_classes`]. Zero area is counted on the non-positive side.

use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;
use core::str::FromStr;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::lattice::{area, enumerate_exceptional, negative_wall_classes, Capacities, H2Element};
use crate::lp::{LinearConstraintSystem, Relation};
use crate::rational::{self, Rational};

/// Why a capacity vector is not admissible.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Violation {
    /// An exceptional class with non-positive area.
    Class(H2Element),
    /// `Σ cᵢ² ≥ 1`.
    Volume,
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::Class(u) => write!(f, "{u}"),
            Violation::Volume => f.write_str("volume"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Admissibility {
    pub admissible: bool,
    pub violator: Option<Violation>,
}

/// Every exceptional class must have positive area and the balls must fit by volume.
pub fn is_admissible(c: &Capacities) -> Result<Admissibility> {
    for e in enumerate_exceptional(c.len())? {
        if area(c, &e)? <= Rational::zero() {
            return Ok(Admissibility { admissible: false, violator: Some(Violation::Class(e)) });
        }
    }
    if c.volume_defect() <= Rational::zero() {
        return Ok(Admissibility { admissible: false, violator: Some(Violation::Volume) });
    }
    Ok(Admissibility { admissible: true, violator: None })
}

/// Sign pattern of the wall functionals, keyed by wall class in canonical order.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ChamberSignature {
    bits: Vec<(H2Element, bool)>,
}

impl ChamberSignature {
    pub fn bits(&self) -> &[(H2Element, bool)] {
        &self.bits
    }

    pub fn positive_count(&self) -> usize {
        self.bits.iter().filter(|(_, b)| *b).count()
    }

    pub fn get(&self, wall: &H2Element) -> Option<bool> {
        self.bits.iter().find(|(w, _)| w == wall).map(|(_, b)| *b)
    }

    fn sort_key(&self) -> (usize, Vec<bool>) {
        (self.positive_count(), self.bits.iter().map(|(_, b)| *b).collect())
    }

    /// Compact form: one `+`/`-` per wall in canonical order.
    pub fn pattern(&self) -> String {
        self.bits.iter().map(|(_, b)| if *b { '+' } else { '-' }).collect()
    }
}

impl PartialOrd for ChamberSignature {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for ChamberSignature {
    fn cmp(&self, other: &Self) -> Ordering {
        self.sort_key().cmp(&other.sort_key())
    }
}

fn signature_unchecked(c: &Capacities) -> Result<ChamberSignature> {
    let bits = negative_wall_classes(c.len())?
        .into_iter()
        .map(|w| {
            let positive = area(c, &w)? > Rational::zero();
            Ok((w, positive))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(ChamberSignature { bits })
}

pub fn chamber_signature(c: &Capacities) -> Result<ChamberSignature> {
    let adm = is_admissible(c)?;
    if let Some(v) = adm.violator {
        return Err(Error::Inadmissible(v.to_string()));
    }
    signature_unchecked(c)
}

/// Named chambers for `n ≤ 4`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ChamberLabel {
    /// The single chamber for one or two balls.
    Unique,
    /// Three balls with `c₁+c₂+c₃ ≥ 1`.
    Big,
    /// Three balls with `c₁+c₂+c₃ < 1`.
    Small,
    /// Four balls; the index counts walls of positive area (`C_0` big … `C_5` small).
    C(u8),
}

impl fmt::Display for ChamberLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ChamberLabel::Unique => f.write_str("C_unique"),
            ChamberLabel::Big => f.write_str("big"),
            ChamberLabel::Small => f.write_str("small"),
            ChamberLabel::C(r) => write!(f, "C_{r}"),
        }
    }
}

impl FromStr for ChamberLabel {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "C_unique" | "unique" => Ok(ChamberLabel::Unique),
            "big" => Ok(ChamberLabel::Big),
            "small" => Ok(ChamberLabel::Small),
            _ => {
                let r = s
                    .strip_prefix("C_")
                    .or_else(|| s.strip_prefix('C'))
                    .and_then(|d| d.parse::<u8>().ok())
                    .filter(|r| *r <= 5)
                    .ok_or_else(|| Error::Parse(alloc::format!("unknown chamber `{s}`")))?;
                Ok(ChamberLabel::C(r))
            }
        }
    }
}

pub fn chamber_label(c: &Capacities) -> Result<ChamberLabel> {
    let sig = chamber_signature(c)?;
    match c.len() {
        1 | 2 => Ok(ChamberLabel::Unique),
        3 => Ok(if sig.positive_count() == 0 { ChamberLabel::Big } else { ChamberLabel::Small }),
        4 => Ok(ChamberLabel::C(sig.positive_count() as u8)),
        n => Err(Error::UnsupportedLabel { n }),
    }
}

/// How the admissible region is closed when enumerating chambers.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum Boundary {
    /// Every exceptional class has strictly positive area.
    #[default]
    Strict,
    /// Lines through two points may have zero area (`cᵢ + cⱼ ≤ 1`). The region
    /// is the polyhedron alone; the volume condition is not imposed.
    Inclusive,
}

impl FromStr for Boundary {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "strict" => Ok(Boundary::Strict),
            "inclusive" => Ok(Boundary::Inclusive),
            _ => Err(Error::Parse(alloc::format!("unknown boundary convention `{s}`"))),
        }
    }
}

impl fmt::Display for Boundary {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Boundary::Strict => "strict",
            Boundary::Inclusive => "inclusive",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Chamber {
    pub signature: ChamberSignature,
    pub witness: Capacities,
}

/// Coefficients of `area(c, u) = a − Σ rᵢcᵢ` as `(−r, a)`.
fn area_functional(u: &H2Element) -> (Vec<Rational>, Rational) {
    (
        u.multiplicities().iter().map(|r| rational::int(-r)).collect(),
        rational::int(u.degree()),
    )
}

/// Sorted, positive, exceptional-positive capacities with `c₁ < 1`.
pub fn admissible_region(n: usize, boundary: Boundary) -> Result<LinearConstraintSystem> {
    let mut sys = LinearConstraintSystem::new(n);
    for i in 0..n.saturating_sub(1) {
        let mut v = vec![Rational::zero(); n];
        v[i] = Rational::one();
        v[i + 1] = -Rational::one();
        sys.push(v, Relation::GreaterEq, Rational::zero())?;
    }
    for e in enumerate_exceptional(n)? {
        let (coeffs, a) = area_functional(&e);
        // area > 0  <=>  (−r)·c > −a
        let rel = match boundary {
            Boundary::Inclusive if e.degree() == 1 => Relation::GreaterEq,
            _ => Relation::Greater,
        };
        sys.push(coeffs, rel, -a)?;
    }
    // Linear consequence of the volume condition; the only one that is not
    // already implied by exceptional classes (n = 1). The full quadratic
    // condition is checked on every witness.
    let mut v = vec![Rational::zero(); n];
    v[0] = Rational::one();
    sys.push(v, Relation::Less, Rational::one())?;
    Ok(sys)
}

fn push_wall(sys: &mut LinearConstraintSystem, wall: &H2Element, positive: bool) -> Result<()> {
    let (coeffs, a) = area_functional(wall);
    let rel = if positive { Relation::Greater } else { Relation::LessEq };
    sys.push(coeffs, rel, -a)
}

/// All realizable signatures, each with a witness of small denominators, in
/// increasing order of positive walls.
///
/// Depth-first over the walls in canonical order; a branch is pruned as soon as
/// its partial system is infeasible.
pub fn enumerate_chambers(n: usize, boundary: Boundary) -> Result<Vec<Chamber>> {
    let walls = negative_wall_classes(n)?;
    let mut sys = admissible_region(n, boundary)?;
    let Some(start) = sys.find_point() else {
        return Ok(Vec::new());
    };
    let mut out = Vec::new();
    let mut bits = Vec::with_capacity(walls.len());
    descend(&walls, &mut sys, &start, &mut bits, boundary, &mut out)?;
    out.sort_by(|a: &Chamber, b: &Chamber| a.signature.cmp(&b.signature));
    Ok(out)
}

fn descend(
    walls: &[H2Element],
    sys: &mut LinearConstraintSystem,
    witness: &[Rational],
    bits: &mut Vec<bool>,
    boundary: Boundary,
    out: &mut Vec<Chamber>,
) -> Result<()> {
    let depth = bits.len();
    if depth == walls.len() {
        let point = sys.find_simple_point().expect("feasible leaf");
        let caps = Capacities::new(point)?;
        if boundary == Boundary::Strict && caps.volume_defect() <= Rational::zero() {
            return Err(Error::Inadmissible(String::from("volume")));
        }
        let signature = ChamberSignature {
            bits: walls.iter().cloned().zip(bits.iter().copied()).collect(),
        };
        out.push(Chamber { signature, witness: caps });
        return Ok(());
    }
    for positive in [true, false] {
        push_wall(sys, &walls[depth], positive)?;
        let next = if sys.constraints().last().expect("pushed").satisfied_by(witness) {
            Some(witness.to_vec())
        } else {
            sys.find_point()
        };
        if let Some(w) = next {
            bits.push(positive);
            descend(walls, sys, &w, bits, boundary, out)?;
            bits.pop();
        }
        sys.pop();
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::frac;

    fn caps(v: &[(i64, i64)]) -> Capacities {
        Capacities::new(v.iter().map(|(p, q)| frac(*p, *q)).collect()).unwrap()
    }

    #[test]
    fn admissibility_examples() {
        let a = is_admissible(&caps(&[(1, 2), (1, 2)])).unwrap();
        assert!(!a.admissible);
        assert_eq!(a.violator, Some(Violation::Class(H2Element::line_through(2, &[1, 2]))));
        assert!(is_admissible(&caps(&[(1, 3), (1, 3), (1, 3)])).unwrap().admissible);
        assert!(is_admissible(&caps(&[(9, 10)])).unwrap().admissible);
        let one = is_admissible(&caps(&[(1, 1)])).unwrap();
        assert!(!one.admissible);
    }

    #[test]
    fn signature_examples() {
        let s = chamber_signature(&caps(&[(9, 20); 4])).unwrap();
        assert_eq!(s.positive_count(), 0);
        let s = chamber_signature(&caps(&[(3, 10), (3, 10), (3, 10), (1, 20)])).unwrap();
        assert_eq!(s.positive_count(), 5);
        let s = chamber_signature(&caps(&[(2, 5), (2, 5), (3, 10), (1, 5)])).unwrap();
        assert_eq!(s.get(&H2Element::line_through(4, &[2, 3, 4])), Some(true));
        assert_eq!(s.get(&H2Element::line_through(4, &[1, 3, 4])), Some(true));
        assert_eq!(s.get(&H2Element::line_through(4, &[1, 2, 4])), Some(false));
        assert_eq!(s.get(&H2Element::line_through(4, &[1, 2, 3])), Some(false));
        assert_eq!(s.get(&H2Element::line_through(4, &[1, 2, 3, 4])), Some(false));
        assert_eq!(s.pattern(), "++---");
        assert!(matches!(chamber_signature(&caps(&[(1, 2), (1, 2)])), Err(Error::Inadmissible(_))));
    }

    #[test]
    fn label_examples() {
        assert_eq!(chamber_label(&caps(&[(2, 5), (2, 5), (3, 10), (1, 5)])).unwrap(), ChamberLabel::C(2));
        assert_eq!(chamber_label(&caps(&[(1, 3), (1, 3), (1, 3)])).unwrap(), ChamberLabel::Big);
        assert_eq!(chamber_label(&caps(&[(1, 4), (1, 4), (1, 4)])).unwrap(), ChamberLabel::Small);
        assert_eq!(chamber_label(&caps(&[(1, 2), (1, 3)])).unwrap(), ChamberLabel::Unique);
        assert_eq!(
            chamber_label(&caps(&[(1, 10); 5])),
            Err(Error::UnsupportedLabel { n: 5 })
        );
    }

    #[test]
    fn label_text() {
        for l in [ChamberLabel::Unique, ChamberLabel::Big, ChamberLabel::Small, ChamberLabel::C(3)] {
            assert_eq!(l.to_string().parse::<ChamberLabel>().unwrap(), l);
        }
        assert!("C_9".parse::<ChamberLabel>().is_err());
    }

    #[test]
    fn small_counts() {
        assert_eq!(enumerate_chambers(1, Boundary::Strict).unwrap().len(), 1);
        assert_eq!(enumerate_chambers(2, Boundary::Strict).unwrap().len(), 1);
        assert_eq!(enumerate_chambers(3, Boundary::Strict).unwrap().len(), 2);
        assert_eq!(enumerate_chambers(4, Boundary::Strict).unwrap().len(), 6);
    }
}
