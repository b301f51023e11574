//! Kriz–Totaro models `E(CPᵐ, k)` of configuration spaces of projective space.
//!
//! Generators are `x_a` (degree 2, `x_a^{m+1} = 0`) for each point and `G_ab`
//! (degree `2m−1`) for each pair `a < b`, in that order. Relations:
//! `(x_a^i − x_b^i)·G_ab` for `1 ≤ i ≤ m`, and the Arnold relation
//! `G_ab G_bc + G_bc G_ca + G_ca G_ab` for every triple. The differential
//! kills `x_a` and sends `G_ab` to the pulled-back diagonal class.

use alloc::format;
use alloc::string::String;
use alloc::sync::Arc;
use alloc::vec::Vec;

use num_traits::One;

use crate::dga::DgaSpec;
use crate::error::{Error, Result};
use crate::gradedalg::{GPolynomial, Generator, GeneratorTable, Monomial, PresentedAlgebra};
use crate::rational::Rational;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct KrizParams {
    /// Complex dimension of the projective space.
    pub m: u32,
    /// Number of points.
    pub k: usize,
}

impl KrizParams {
    pub fn new(m: u32, k: usize) -> Result<Self> {
        if m == 0 {
            return Err(Error::OutOfRange { what: "projective dimension", value: 0 });
        }
        if k == 0 {
            return Err(Error::OutOfRange { what: "number of points", value: 0 });
        }
        Ok(Self { m, k })
    }
}

/// Name of the point class generator for point `a` (1-based).
pub fn x_name(a: usize) -> String {
    format!("x{a}")
}

/// Name of the pair generator for `a < b` (1-based); an underscore separates
/// the indices once they can have two digits.
pub fn g_name(k: usize, a: usize, b: usize) -> String {
    let (a, b) = if a < b { (a, b) } else { (b, a) };
    if k >= 10 {
        format!("G{a}_{b}")
    } else {
        format!("G{a}{b}")
    }
}

/// Generator table of `E(CPᵐ, k)`.
pub fn kriz_table(p: KrizParams) -> Arc<GeneratorTable> {
    let mut gens = Vec::new();
    for a in 1..=p.k {
        gens.push(Generator::nilpotent(&x_name(a), 2, p.m + 1));
    }
    for a in 1..=p.k {
        for b in a + 1..=p.k {
            gens.push(Generator::new(&g_name(p.k, a, b), 2 * p.m - 1));
        }
    }
    GeneratorTable::new(gens).expect("well-formed table")
}

fn gen(table: &Arc<GeneratorTable>, name: &str) -> GPolynomial {
    GPolynomial::generator(table, name).expect("generator in table")
}

fn x_power(table: &Arc<GeneratorTable>, a: usize, i: u32) -> GPolynomial {
    let mut e = alloc::vec![0; table.len()];
    let idx = table.index_of(&x_name(a)).expect("point generator");
    if i > table.max_exponent(idx).unwrap_or(u32::MAX) {
        return GPolynomial::zero(table);
    }
    e[idx] = i;
    GPolynomial::monomial(table, Monomial::from_exponents(e), Rational::one())
}

/// `Σ_{i+j=m} x_a^i x_b^j` over the table of `E(CPᵐ, k)`.
pub fn diagonal_pullback_in(table: &Arc<GeneratorTable>, m: u32, a: usize, b: usize) -> Result<GPolynomial> {
    if a == b {
        return Err(Error::OutOfRange { what: "diagonal index pair", value: a as i64 });
    }
    let mut out = GPolynomial::zero(table);
    for i in 0..=m {
        let t = x_power(table, a, i).mul(&x_power(table, b, m - i))?;
        out = out.add(&t)?;
    }
    Ok(out)
}

/// The pulled-back diagonal class for points `a ≠ b`, over the table of
/// `E(CPᵐ, max(a, b))`.
pub fn diagonal_pullback(m: u32, a: usize, b: usize) -> Result<GPolynomial> {
    let p = KrizParams::new(m, a.max(b).max(1))?;
    diagonal_pullback_in(&kriz_table(p), m, a, b)
}

/// `G_ab` for any ordered pair; `G_ba = G_ab`.
fn g(table: &Arc<GeneratorTable>, k: usize, a: usize, b: usize) -> GPolynomial {
    gen(table, &g_name(k, a, b))
}

pub fn kriz_algebra(p: KrizParams) -> PresentedAlgebra {
    let table = kriz_table(p);
    let k = p.k;
    let mut rels = Vec::new();
    for a in 1..=k {
        for b in a + 1..=k {
            for i in 1..=p.m {
                let diff = x_power(&table, a, i).sub(&x_power(&table, b, i)).expect("same table");
                rels.push(diff.mul(&g(&table, k, a, b)).expect("same table"));
            }
        }
    }
    for a in 1..=k {
        for b in a + 1..=k {
            for c in b + 1..=k {
                let (gab, gbc, gca) = (g(&table, k, a, b), g(&table, k, b, c), g(&table, k, c, a));
                let arnold = gab
                    .mul(&gbc)
                    .and_then(|t| t.add(&gbc.mul(&gca)?))
                    .and_then(|t| t.add(&gca.mul(&gab)?))
                    .expect("same table");
                rels.push(arnold);
            }
        }
    }
    PresentedAlgebra::new(table, rels).expect("homogeneous relations")
}

/// The model `E(CPᵐ, k)` as a DGA with the given degree cap.
pub fn kriz_model(p: KrizParams, degree_cap: u32) -> DgaSpec {
    let algebra = kriz_algebra(p);
    let table = algebra.table().clone();
    let mut d = alloc::vec![GPolynomial::zero(&table); table.len()];
    for a in 1..=p.k {
        for b in a + 1..=p.k {
            let idx = table.index_of(&g_name(p.k, a, b)).expect("pair generator");
            d[idx] = diagonal_pullback_in(&table, p.m, a, b).expect("distinct points");
        }
    }
    DgaSpec::new(algebra, d, degree_cap).expect("degrees match")
}

/// Generator images of the relabeling `a ↦ perm[a−1] + 1` (0-based `perm`),
/// with `G_ab ↦ G_{σaσb}` (symmetric in its indices).
pub fn relabeling(p: KrizParams, perm: &[usize]) -> Result<Vec<GPolynomial>> {
    if perm.len() != p.k {
        return Err(Error::DimensionMismatch { expected: p.k, found: perm.len() });
    }
    let mut seen = alloc::vec![false; p.k];
    for &s in perm {
        if s >= p.k || seen[s] {
            return Err(Error::OutOfRange { what: "permutation entry", value: s as i64 });
        }
        seen[s] = true;
    }
    let table = kriz_table(p);
    let mut images = Vec::new();
    for a in 1..=p.k {
        images.push(gen(&table, &x_name(perm[a - 1] + 1)));
    }
    for a in 1..=p.k {
        for b in a + 1..=p.k {
            images.push(g(&table, p.k, perm[a - 1] + 1, perm[b - 1] + 1));
        }
    }
    Ok(images)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dga::{check_d_squared, check_ideal_stability, cohomology};
    use alloc::string::ToString;
    use alloc::vec;

    #[test]
    fn diagonal_examples() {
        assert_eq!(diagonal_pullback(2, 1, 2).unwrap().to_string(), "x1^2 + x1*x2 + x2^2");
        assert_eq!(diagonal_pullback(1, 1, 2).unwrap().to_string(), "x1 + x2");
        assert_eq!(
            diagonal_pullback(3, 1, 2).unwrap().to_string(),
            "x1^3 + x1^2*x2 + x1*x2^2 + x2^3"
        );
        assert!(diagonal_pullback(2, 1, 1).is_err());
    }

    #[test]
    fn generator_order_and_names() {
        let t = kriz_table(KrizParams::new(2, 3).unwrap());
        let names: Vec<_> = t.generators().iter().map(|g| g.name.as_str()).collect();
        assert_eq!(names, vec!["x1", "x2", "x3", "G12", "G13", "G23"]);
        assert_eq!(g_name(10, 2, 10), "G2_10");
        assert_eq!(g_name(4, 3, 1), "G13");
    }

    #[test]
    fn small_models() {
        let rep = cohomology(&kriz_model(KrizParams::new(2, 2).unwrap(), 8)).unwrap();
        assert_eq!(rep.ranks, vec![1, 0, 2, 0, 2, 0, 1, 0, 0]);
        let rep = cohomology(&kriz_model(KrizParams::new(1, 3).unwrap(), 6)).unwrap();
        assert_eq!(rep.ranks, vec![1, 0, 0, 1, 0, 0, 0]);
        let rep = cohomology(&kriz_model(KrizParams::new(2, 1).unwrap(), 6)).unwrap();
        assert_eq!(rep.ranks, vec![1, 0, 1, 0, 1, 0, 0]);
    }

    #[test]
    fn three_points_in_the_plane() {
        let rep = cohomology(&kriz_model(KrizParams::new(2, 3).unwrap(), 12)).unwrap();
        assert_eq!(rep.ranks, vec![1, 0, 3, 0, 3, 0, 1, 1, 0, 1, 0, 0, 0]);
    }

    #[test]
    fn checks_pass_for_small_parameters() {
        for m in 1..=3 {
            for k in 1..=3 {
                let spec = kriz_model(KrizParams::new(m, k).unwrap(), 2 * m * k as u32);
                check_d_squared(&spec).unwrap();
                check_ideal_stability(&spec).unwrap();
            }
        }
    }
}
