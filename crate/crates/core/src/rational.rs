//! Exact rationals with arbitrary-precision numerators and denominators.

use alloc::string::{String, ToString};
use core::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

pub type Rational = num_rational::BigRational;

pub fn int(v: i64) -> Rational {
    Rational::from_integer(BigInt::from(v))
}

pub fn frac(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// Parses `p`, `-p`, or `p/q`. Whitespace around the value is ignored.
pub fn parse(s: &str) -> Result<Rational> {
    let t = s.trim();
    let r = Rational::from_str(t).map_err(|_| Error::Parse(alloc::format!("bad rational `{t}`")))?;
    Ok(r)
}

/// Canonical text form: `p` for integers, `p/q` otherwise.
pub fn to_string(r: &Rational) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        alloc::format!("{}/{}", r.numer(), r.denom())
    }
}

fn floor(r: &Rational) -> BigInt {
    r.floor().to_integer()
}

/// Lower or upper end of an interval; `None` bound means unbounded on that side.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Bound {
    pub value: Rational,
    pub inclusive: bool,
}

fn above(x: &Rational, lo: &Option<Bound>) -> bool {
    match lo {
        None => true,
        Some(b) if b.inclusive => *x >= b.value,
        Some(b) => *x > b.value,
    }
}

fn below(x: &Rational, hi: &Option<Bound>) -> bool {
    match hi {
        None => true,
        Some(b) if b.inclusive => *x <= b.value,
        Some(b) => *x < b.value,
    }
}

pub fn in_interval(x: &Rational, lo: &Option<Bound>, hi: &Option<Bound>) -> bool {
    above(x, lo) && below(x, hi)
}

/// The rational of smallest denominator (then smallest absolute numerator) in the
/// interval, or `None` when the interval is empty.
///
/// Walks the Stern–Brocot tree on the continued-fraction expansion.
pub fn simplest_in(lo: &Option<Bound>, hi: &Option<Bound>) -> Option<Rational> {
    if let (Some(l), Some(h)) = (lo, hi) {
        if l.value > h.value || (l.value == h.value && !(l.inclusive && h.inclusive)) {
            return None;
        }
        if l.value == h.value {
            return Some(l.value.clone());
        }
    }
    // Integers first: the one of least absolute value.
    let zero = Rational::zero();
    if in_interval(&zero, lo, hi) {
        return Some(zero);
    }
    match (lo, hi) {
        (Some(l), _) if l.value.is_positive() || (l.value.is_zero()) => {
            Some(simplest_positive(lo, hi))
        }
        (_, Some(h)) if h.value.is_negative() || h.value.is_zero() => {
            // Mirror into the positive half-line.
            let mlo = Some(Bound { value: -h.value.clone(), inclusive: h.inclusive });
            let mhi = lo.as_ref().map(|l| Bound { value: -l.value.clone(), inclusive: l.inclusive });
            Some(-simplest_positive(&mlo, &mhi))
        }
        _ => unreachable!("interval containing no zero must lie on one side"),
    }
}

// lo is Some and >= 0, interval is nonempty and does not contain 0.
fn simplest_positive(lo: &Option<Bound>, hi: &Option<Bound>) -> Rational {
    let l = lo.as_ref().expect("lower bound");
    // Smallest integer in the interval, if any.
    let mut k = floor(&l.value);
    let kq = Rational::from_integer(k.clone());
    if !above(&kq, lo) {
        k += 1;
    }
    let kq = Rational::from_integer(k.clone());
    if below(&kq, hi) {
        return kq;
    }
    // No integer inside: interval lies strictly within (k-1, k).
    let base = Rational::from_integer(k - BigInt::one());
    let h = hi.as_ref().expect("bounded above when no integer fits");
    // x = base + 1/y with y in (1/(h-base), 1/(l-base)), endpoints swap.
    let nlo = Some(Bound {
        value: (h.value.clone() - base.clone()).recip(),
        inclusive: h.inclusive,
    });
    let dl = l.value.clone() - base.clone();
    let nhi = if dl.is_zero() {
        None
    } else {
        Some(Bound { value: dl.recip(), inclusive: l.inclusive })
    };
    let y = simplest_positive(&nlo, &nhi);
    base + y.recip()
}

/// Least common multiple of the denominators, as a rational.
pub fn denominator_lcm<'a>(values: impl IntoIterator<Item = &'a Rational>) -> BigInt {
    values.into_iter().fold(BigInt::one(), |acc, v| acc.lcm(v.denom()))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn open(v: Rational) -> Option<Bound> {
        Some(Bound { value: v, inclusive: false })
    }

    #[test]
    fn parses_and_prints() {
        assert_eq!(parse("3/6").unwrap(), frac(1, 2));
        assert_eq!(parse(" -7 ").unwrap(), int(-7));
        assert_eq!(to_string(&frac(-3, 4)), "-3/4");
        assert_eq!(to_string(&int(5)), "5");
        assert!(parse("x").is_err());
    }

    #[test]
    fn simplest_rational_examples() {
        assert_eq!(simplest_in(&open(frac(1, 3)), &open(frac(1, 2))), Some(frac(2, 5)));
        assert_eq!(simplest_in(&open(frac(2, 5)), &open(frac(9, 20))), Some(frac(3, 7)));
        assert_eq!(simplest_in(&open(int(0)), &open(int(1))), Some(frac(1, 2)));
        assert_eq!(simplest_in(&open(int(-1)), &open(int(3))), Some(int(0)));
        assert_eq!(simplest_in(&open(frac(-1, 2)), &open(frac(-1, 3))), Some(frac(-2, 5)));
        assert_eq!(simplest_in(&open(int(1)), &None), Some(int(2)));
        assert_eq!(simplest_in(&open(int(1)), &open(int(1))), None);
        let closed = Some(Bound { value: frac(1, 3), inclusive: true });
        assert_eq!(simplest_in(&closed, &open(frac(1, 2))), Some(frac(1, 3)));
    }

    proptest::proptest! {
        #[test]
        fn simplest_lies_inside(a in -50i64..50, b in 1i64..30, c in -50i64..50, d in 1i64..30) {
            let x = frac(a, b);
            let y = frac(c, d);
            let (lo, hi) = if x < y { (x, y) } else { (y, x) };
            let lo = open(lo);
            let hi = open(hi);
            match simplest_in(&lo, &hi) {
                Some(s) => proptest::prop_assert!(in_interval(&s, &lo, &hi)),
                None => proptest::prop_assert_eq!(lo.unwrap().value, hi.unwrap().value),
            }
        }
    }
}
