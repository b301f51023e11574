//! Second homology of the n-fold blow-up of CP², with basis `L, E1, ..., En` and
//! intersection form `diag(1, -1, ..., -1)`.

use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::rational::{self, Rational};

pub const MAX_POINTS: usize = 8;

/// The class `a·L − Σ rᵢ·Eᵢ`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct H2Element {
    a: i64,
    r: Vec<i64>,
}

impl H2Element {
    pub fn new(a: i64, r: Vec<i64>) -> Result<Self> {
        if r.is_empty() {
            return Err(Error::OutOfRange { what: "number of points", value: 0 });
        }
        Ok(Self { a, r })
    }

    /// The line class `L`.
    pub fn line(n: usize) -> Self {
        Self { a: 1, r: vec![0; n] }
    }

    /// The exceptional class `E_i` (1-based).
    pub fn exceptional(n: usize, i: usize) -> Self {
        let mut r = vec![0; n];
        r[i - 1] = -1;
        Self { a: 0, r }
    }

    /// `L − Σ_{i∈S} E_i` for a 1-based index set.
    pub fn line_through(n: usize, points: &[usize]) -> Self {
        let mut r = vec![0; n];
        for &i in points {
            r[i - 1] = 1;
        }
        Self { a: 1, r }
    }

    pub fn degree(&self) -> i64 {
        self.a
    }

    pub fn multiplicities(&self) -> &[i64] {
        &self.r
    }

    pub fn n(&self) -> usize {
        self.r.len()
    }

    pub fn self_intersection(&self) -> i64 {
        intersection(self, self).expect("same n")
    }

    pub fn scaled_add(&self, s: i64, other: &Self, t: i64) -> Result<Self> {
        check_same_n(self, other)?;
        Ok(Self {
            a: s * self.a + t * other.a,
            r: self.r.iter().zip(&other.r).map(|(x, y)| s * x + t * y).collect(),
        })
    }

    /// Pads with zero multiplicities up to `n` points.
    pub fn padded(&self, n: usize) -> Self {
        let mut r = self.r.clone();
        r.resize(n.max(self.r.len()), 0);
        Self { a: self.a, r }
    }
}

fn check_same_n(u: &H2Element, v: &H2Element) -> Result<()> {
    if u.n() != v.n() {
        return Err(Error::DimensionMismatch { expected: u.n(), found: v.n() });
    }
    Ok(())
}

fn check_n(n: usize) -> Result<()> {
    if n == 0 || n > MAX_POINTS {
        return Err(Error::OutOfRange { what: "number of points", value: n as i64 });
    }
    Ok(())
}

pub fn intersection(u: &H2Element, v: &H2Element) -> Result<i64> {
    check_same_n(u, v)?;
    Ok(u.a * v.a - u.r.iter().zip(&v.r).map(|(x, y)| x * y).sum::<i64>())
}

/// `3L − E1 − ⋯ − En`.
pub fn anticanonical(n: usize) -> Result<H2Element> {
    check_n(n)?;
    Ok(H2Element { a: 3, r: vec![1; n] })
}

pub fn is_exceptional_numerical(u: &H2Element) -> bool {
    let k = H2Element { a: 3, r: vec![1; u.n()] };
    u.self_intersection() == -1 && intersection(&k, u) == Ok(1)
}

/// Whether `u` has one of the six shapes of negative curves of degree `1..=6`
/// (degree, then the multiset of nonzero multiplicities):
///
/// 1. `L − ΣE`  2. `2L − ΣE`  3. `3L − 2E − ΣE`  4. `4L − 2E−2E−2E − ΣE`
/// 5. `5L − E − E − Σ2E`  6. `6L − 3E − Σ2E`
pub fn matches_negative_curve_shape(u: &H2Element) -> bool {
    let count = |v: i64| u.r.iter().filter(|&&x| x == v).count();
    let only = |allowed: &[i64]| u.r.iter().all(|x| allowed.contains(x));
    match u.a {
        1 | 2 => only(&[0, 1]),
        3 => only(&[0, 1, 2]) && count(2) == 1,
        4 => only(&[0, 1, 2]) && count(2) == 3,
        5 => only(&[0, 1, 2]) && count(1) == 2,
        6 => only(&[0, 2, 3]) && count(3) == 1,
        _ => false,
    }
}

fn for_each_vector(n: usize, lo: i64, hi: i64, mut f: impl FnMut(&[i64])) {
    let mut r = vec![lo; n];
    loop {
        f(&r);
        let mut i = n;
        loop {
            if i == 0 {
                return;
            }
            i -= 1;
            if r[i] < hi {
                r[i] += 1;
                break;
            }
            r[i] = lo;
        }
    }
}

/// All numerically exceptional classes with `a ∈ [0,6]`, `rᵢ ∈ [−1,3]`, in
/// lexicographic order of `(a, r)`.
pub fn enumerate_exceptional(n: usize) -> Result<Vec<H2Element>> {
    check_n(n)?;
    let mut out = Vec::new();
    for a in 0..=6i64 {
        for_each_vector(n, -1, 3, |r| {
            // a² − Σr² = −1 and 3a − Σr = 1
            let sq: i64 = r.iter().map(|x| x * x).sum();
            let lin: i64 = r.iter().sum();
            if a * a - sq == -1 && 3 * a - lin == 1 {
                out.push(H2Element { a, r: r.to_vec() });
            }
        });
    }
    Ok(out)
}

/// Classes of the six negative-curve shapes with self-intersection `≤ −2` and
/// all multiplicities nonnegative, in lexicographic order.
pub fn negative_wall_classes(n: usize) -> Result<Vec<H2Element>> {
    check_n(n)?;
    let mut out = Vec::new();
    for a in 1..=6i64 {
        for_each_vector(n, 0, 3, |r| {
            let u = H2Element { a, r: r.to_vec() };
            if matches_negative_curve_shape(&u) && u.self_intersection() <= -2 {
                out.push(u);
            }
        });
    }
    Ok(out)
}

/// Symplectic area `a − Σ cᵢ rᵢ` of `u` for the blow-up form with capacities `c`.
pub fn area(c: &Capacities, u: &H2Element) -> Result<Rational> {
    if c.len() != u.n() {
        return Err(Error::DimensionMismatch { expected: u.n(), found: c.len() });
    }
    let mut s = rational::int(u.a);
    for (ci, ri) in c.values().iter().zip(&u.r) {
        if *ri != 0 {
            s -= ci * rational::int(*ri);
        }
    }
    Ok(s)
}

/// Ball capacities, kept sorted nonincreasing.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Capacities {
    values: Vec<Rational>,
}

impl Capacities {
    /// Sorts the input nonincreasing. Every entry must be strictly positive.
    pub fn new(mut values: Vec<Rational>) -> Result<Self> {
        check_n(values.len())?;
        if values.iter().any(|v| *v <= Rational::zero()) {
            return Err(Error::Parse(String::from("capacities must be positive")));
        }
        values.sort_by(|x, y| y.cmp(x));
        Ok(Self { values })
    }

    /// Parses a comma-separated list such as `2/5,2/5,3/10,1/5`.
    pub fn parse(s: &str) -> Result<Self> {
        let values = s.split(',').map(rational::parse).collect::<Result<Vec<_>>>()?;
        Self::new(values)
    }

    pub fn values(&self) -> &[Rational] {
        &self.values
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    /// `1 − Σ cᵢ²`.
    pub fn volume_defect(&self) -> Rational {
        let mut v = rational::int(1);
        for c in &self.values {
            v -= c * c;
        }
        v
    }
}

impl fmt::Display for H2Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        let mut term = |f: &mut fmt::Formatter<'_>, coeff: i64, sym: &str| -> fmt::Result {
            if coeff == 0 {
                return Ok(());
            }
            let mag = coeff.unsigned_abs();
            if first {
                if coeff < 0 {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if coeff < 0 { " - " } else { " + " })?;
            }
            first = false;
            if mag != 1 {
                write!(f, "{mag}")?;
            }
            f.write_str(sym)
        };
        term(f, self.a, "L")?;
        for (i, ri) in self.r.iter().enumerate() {
            term(f, -ri, &alloc::format!("E{}", i + 1))?;
        }
        if first {
            f.write_str("0")?;
        }
        Ok(())
    }
}

impl H2Element {
    /// Parses `aL - r1E1 - ... - rnEn` style text for a lattice with `n` points.
    pub fn parse(s: &str, n: usize) -> Result<Self> {
        check_n(n)?;
        let bad = || Error::Parse(alloc::format!("bad homology class `{s}`"));
        let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        let mut a = 0i64;
        let mut r = vec![0i64; n];
        if compact == "0" {
            return Ok(Self { a, r });
        }
        let mut terms: Vec<(i64, &str)> = Vec::new();
        let mut start = 0;
        let bytes = compact.as_bytes();
        for i in 1..=bytes.len() {
            if i == bytes.len() || bytes[i] == b'+' || bytes[i] == b'-' {
                let t = &compact[start..i];
                let (sign, body) = match t.as_bytes().first() {
                    Some(b'-') => (-1, &t[1..]),
                    Some(b'+') => (1, &t[1..]),
                    _ => (1, t),
                };
                terms.push((sign, body));
                start = i;
            }
        }
        for (sign, body) in terms {
            let split = body.find(|c: char| c.is_ascii_alphabetic()).ok_or_else(bad)?;
            let (num, sym) = body.split_at(split);
            let mag: i64 = if num.is_empty() { 1 } else { num.parse().map_err(|_| bad())? };
            let coeff = sign * mag;
            if sym == "L" {
                a += coeff;
            } else if let Some(idx) = sym.strip_prefix('E') {
                let i: usize = idx.parse().map_err(|_| bad())?;
                if i == 0 || i > n {
                    return Err(bad());
                }
                r[i - 1] -= coeff;
            } else {
                return Err(bad());
            }
        }
        Ok(Self { a, r })
    }
}

impl FromStr for Capacities {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Self::parse(s)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::frac;
    use alloc::string::ToString;

    fn caps(v: &[(i64, i64)]) -> Capacities {
        Capacities::new(v.iter().map(|(p, q)| frac(*p, *q)).collect()).unwrap()
    }

    #[test]
    fn intersection_examples() {
        let l12 = H2Element::line_through(2, &[1, 2]);
        assert_eq!(intersection(&l12, &l12), Ok(-1));
        let e1 = H2Element::exceptional(2, 1);
        let e2 = H2Element::exceptional(2, 2);
        assert_eq!(intersection(&e1, &e1), Ok(-1));
        assert_eq!(intersection(&e1, &e2), Ok(0));
        let l123 = H2Element::line_through(3, &[1, 2, 3]);
        assert_eq!(l123.self_intersection(), -2);
        assert!(matches!(intersection(&l12, &l123), Err(Error::DimensionMismatch { .. })));
    }

    #[test]
    fn anticanonical_examples() {
        assert_eq!(anticanonical(1).unwrap(), H2Element::new(3, vec![1]).unwrap());
        assert_eq!(intersection(&anticanonical(2).unwrap(), &H2Element::exceptional(2, 1)), Ok(1));
        let l12 = H2Element::line_through(3, &[1, 2]);
        assert_eq!(intersection(&anticanonical(3).unwrap(), &l12), Ok(1));
        assert!(anticanonical(0).is_err());
        assert!(anticanonical(9).is_err());
    }

    #[test]
    fn exceptional_numerical_test() {
        assert!(is_exceptional_numerical(&H2Element::exceptional(2, 1)));
        assert!(is_exceptional_numerical(&H2Element::line_through(2, &[1, 2])));
        assert!(!is_exceptional_numerical(&H2Element::line_through(3, &[1, 2, 3])));
    }

    #[test]
    fn exceptional_for_two_points() {
        let ex = enumerate_exceptional(2).unwrap();
        assert_eq!(
            ex,
            vec![
                H2Element::exceptional(2, 1),
                H2Element::exceptional(2, 2),
                H2Element::line_through(2, &[1, 2]),
            ]
        );
    }

    #[test]
    fn wall_classes_small_n() {
        assert!(negative_wall_classes(2).unwrap().is_empty());
        assert_eq!(negative_wall_classes(3).unwrap(), vec![H2Element::line_through(3, &[1, 2, 3])]);
        let w4 = negative_wall_classes(4).unwrap();
        assert_eq!(
            w4,
            vec![
                H2Element::line_through(4, &[2, 3, 4]),
                H2Element::line_through(4, &[1, 3, 4]),
                H2Element::line_through(4, &[1, 2, 4]),
                H2Element::line_through(4, &[1, 2, 3]),
                H2Element::line_through(4, &[1, 2, 3, 4]),
            ]
        );
        assert_eq!(negative_wall_classes(5).unwrap().len(), 16);
    }

    #[test]
    fn area_examples() {
        let c = caps(&[(1, 3), (1, 3), (1, 3)]);
        assert_eq!(area(&c, &H2Element::line_through(3, &[1, 2, 3])).unwrap(), frac(0, 1));
        let c = caps(&[(1, 2), (1, 4)]);
        assert_eq!(area(&c, &H2Element::line_through(2, &[1, 2])).unwrap(), frac(1, 4));
        let c = caps(&[(2, 5), (2, 5), (1, 5), (1, 10)]);
        assert_eq!(area(&c, &H2Element::line_through(4, &[1, 2, 3, 4])).unwrap(), frac(-1, 10));
        assert!(area(&c, &H2Element::line(3)).is_err());
    }

    #[test]
    fn capacities_are_sorted() {
        let c = caps(&[(1, 5), (2, 5), (3, 10)]);
        assert_eq!(c.values(), &[frac(2, 5), frac(3, 10), frac(1, 5)]);
        assert!(Capacities::parse("1/2,0").is_err());
        assert!(Capacities::parse("1/2,x").is_err());
    }

    #[test]
    fn text_form() {
        let u = H2Element::new(3, vec![2, 1, 0, 1]).unwrap();
        assert_eq!(u.to_string(), "3L - 2E1 - E2 - E4");
        assert_eq!(H2Element::parse("3L - 2E1 - E2 - E4", 4).unwrap(), u);
        assert_eq!(H2Element::exceptional(3, 2).to_string(), "E2");
        assert_eq!(H2Element::parse("E2", 3).unwrap(), H2Element::exceptional(3, 2));
        assert_eq!(H2Element::parse("0L - 0E1", 1).unwrap(), H2Element::new(0, vec![0]).unwrap());
        assert!(H2Element::parse("L - E5", 3).is_err());
    }

    proptest::proptest! {
        #[test]
        fn bilinear(
            a in proptest::collection::vec(-4i64..5, 5),
            b in proptest::collection::vec(-4i64..5, 5),
            w in proptest::collection::vec(-4i64..5, 5),
            s in -3i64..4, t in -3i64..4,
        ) {
            let u = H2Element::new(a[0], a[1..].to_vec()).unwrap();
            let v = H2Element::new(b[0], b[1..].to_vec()).unwrap();
            let w = H2Element::new(w[0], w[1..].to_vec()).unwrap();
            let lhs = intersection(&u.scaled_add(s, &v, t).unwrap(), &w).unwrap();
            let rhs = s * intersection(&u, &w).unwrap() + t * intersection(&v, &w).unwrap();
            proptest::prop_assert_eq!(lhs, rhs);
            proptest::prop_assert_eq!(intersection(&u, &v), intersection(&v, &u));
        }

        #[test]
        fn text_round_trip(a in proptest::collection::vec(-4i64..5, 4)) {
            let u = H2Element::new(a[0], a[1..].to_vec()).unwrap();
            proptest::prop_assert_eq!(H2Element::parse(&u.to_string(), 3).unwrap(), u);
        }
    }
}
