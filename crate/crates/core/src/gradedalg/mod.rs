//! Graded-commutative algebras over the rationals.
//!
//! Monomials are exponent vectors over an ordered [`GeneratorTable`]; a product
//! is normalized by sorting factors into table order, picking up a sign for
//! every transposition of two odd-degree factors. Odd generators square to zero
//! and a generator may carry an explicit nilpotence bound (`x³ = 0`).

mod parse;
mod presented;

use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::sync::Arc;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::rational::{self, Rational};

pub use presented::{graded_basis, ideal_member, quotient_dimension, GradedPiece, PresentedAlgebra};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Generator {
    pub name: String,
    pub degree: u32,
    /// `Some(k)` means `g^k = 0`.
    pub nilpotence: Option<u32>,
}

impl Generator {
    pub fn new(name: &str, degree: u32) -> Self {
        Self { name: String::from(name), degree, nilpotence: None }
    }

    pub fn nilpotent(name: &str, degree: u32, power: u32) -> Self {
        Self { name: String::from(name), degree, nilpotence: Some(power) }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct GeneratorTable {
    gens: Vec<Generator>,
}

fn valid_name(s: &str) -> bool {
    let mut chars = s.chars();
    matches!(chars.next(), Some(c) if c.is_ascii_alphabetic() || c == '_')
        && chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

impl GeneratorTable {
    pub fn new(gens: Vec<Generator>) -> Result<Arc<Self>> {
        for (i, g) in gens.iter().enumerate() {
            if !valid_name(&g.name) {
                return Err(Error::Parse(alloc::format!("invalid generator name `{}`", g.name)));
            }
            if g.degree == 0 {
                return Err(Error::OutOfRange { what: "generator degree", value: 0 });
            }
            if let Some(k) = g.nilpotence {
                if k < 2 {
                    return Err(Error::OutOfRange { what: "nilpotence bound", value: k as i64 });
                }
            }
            if gens[..i].iter().any(|h| h.name == g.name) {
                return Err(Error::Parse(alloc::format!("duplicate generator `{}`", g.name)));
            }
        }
        Ok(Arc::new(Self { gens }))
    }

    pub fn len(&self) -> usize {
        self.gens.len()
    }

    pub fn is_empty(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn generators(&self) -> &[Generator] {
        &self.gens
    }

    pub fn index_of(&self, name: &str) -> Result<usize> {
        self.gens
            .iter()
            .position(|g| g.name == name)
            .ok_or_else(|| Error::UnknownSymbol(String::from(name)))
    }

    pub fn degree(&self, i: usize) -> u32 {
        self.gens[i].degree
    }

    pub fn is_odd(&self, i: usize) -> bool {
        self.gens[i].degree % 2 == 1
    }

    /// Largest exponent a normal-form monomial may carry, if bounded.
    pub fn max_exponent(&self, i: usize) -> Option<u32> {
        if self.is_odd(i) {
            Some(1)
        } else {
            self.gens[i].nilpotence.map(|k| k - 1)
        }
    }

    /// All normal-form monomials of total degree `q`, in increasing lexicographic
    /// order of exponent vectors.
    pub fn monomials_of_degree(&self, q: u32) -> Vec<Monomial> {
        let mut out = Vec::new();
        let mut exps = vec![0u32; self.len()];
        self.fill(0, q, &mut exps, &mut out);
        out.sort();
        out
    }

    fn fill(&self, i: usize, remaining: u32, exps: &mut Vec<u32>, out: &mut Vec<Monomial>) {
        if i == self.len() {
            if remaining == 0 {
                out.push(Monomial(exps.clone()));
            }
            return;
        }
        let d = self.degree(i);
        let mut top = remaining / d;
        if let Some(m) = self.max_exponent(i) {
            top = top.min(m);
        }
        for e in 0..=top {
            exps[i] = e;
            self.fill(i + 1, remaining - e * d, exps, out);
        }
        exps[i] = 0;
    }
}

/// Exponent vector over a generator table, ordered lexicographically.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial(Vec<u32>);

impl Monomial {
    pub fn one(len: usize) -> Self {
        Monomial(vec![0; len])
    }

    pub fn generator(len: usize, i: usize) -> Self {
        let mut e = vec![0; len];
        e[i] = 1;
        Monomial(e)
    }

    pub fn from_exponents(exponents: Vec<u32>) -> Self {
        Monomial(exponents)
    }

    pub fn exponents(&self) -> &[u32] {
        &self.0
    }

    pub fn degree(&self, table: &GeneratorTable) -> u32 {
        self.0.iter().enumerate().map(|(i, e)| e * table.degree(i)).sum()
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|e| *e == 0)
    }
}

/// Product of two normal-form monomials: `None` if it vanishes, otherwise the
/// sign (`true` for negative) and the normal form.
pub fn multiply_monomials(table: &GeneratorTable, a: &Monomial, b: &Monomial) -> Option<(bool, Monomial)> {
    let n = table.len();
    let mut out = Vec::with_capacity(n);
    let mut negative = false;
    // odd factors of `a` that come after index j must hop over b's odd factor j
    let mut a_odd_after = (0..n).filter(|&i| table.is_odd(i) && a.0[i] == 1).count();
    for i in 0..n {
        let e = a.0[i] + b.0[i];
        if let Some(m) = table.max_exponent(i) {
            if e > m {
                return None;
            }
        }
        if table.is_odd(i) {
            if a.0[i] == 1 {
                a_odd_after -= 1;
            }
            if b.0[i] == 1 && a_odd_after % 2 == 1 {
                negative = !negative;
            }
        }
        out.push(e);
    }
    Some((negative, Monomial(out)))
}

/// Normalizes a word of generator names with an initial sign (`±1`).
///
/// Returns `None` when the product vanishes (a repeated odd generator or an
/// exceeded nilpotence bound).
pub fn normal_form(table: &GeneratorTable, word: &[&str], sign: i32) -> Result<Option<(i32, Monomial)>> {
    let idx = word.iter().map(|w| table.index_of(w)).collect::<Result<Vec<_>>>()?;
    let mut sign = if sign < 0 { -1 } else { 1 };
    // bubble sort counting odd/odd swaps
    let mut v = idx;
    let len = v.len();
    for i in 0..len {
        for j in 0..len - 1 - i {
            if v[j] > v[j + 1] {
                if table.is_odd(v[j]) && table.is_odd(v[j + 1]) {
                    sign = -sign;
                }
                v.swap(j, j + 1);
            }
        }
    }
    let mut exps = vec![0u32; table.len()];
    for g in v {
        exps[g] += 1;
        if let Some(m) = table.max_exponent(g) {
            if exps[g] > m {
                return Ok(None);
            }
        }
    }
    Ok(Some((sign, Monomial(exps))))
}

/// A finite rational combination of normal-form monomials.
#[derive(Clone, Debug)]
pub struct GPolynomial {
    table: Arc<GeneratorTable>,
    terms: BTreeMap<Monomial, Rational>,
}

impl PartialEq for GPolynomial {
    fn eq(&self, other: &Self) -> bool {
        same_table(&self.table, &other.table) && self.terms == other.terms
    }
}

impl Eq for GPolynomial {}

fn same_table(a: &Arc<GeneratorTable>, b: &Arc<GeneratorTable>) -> bool {
    Arc::ptr_eq(a, b) || **a == **b
}

impl GPolynomial {
    pub fn zero(table: &Arc<GeneratorTable>) -> Self {
        Self { table: Arc::clone(table), terms: BTreeMap::new() }
    }

    pub fn constant(table: &Arc<GeneratorTable>, c: Rational) -> Self {
        let mut p = Self::zero(table);
        p.add_term(Monomial::one(table.len()), c);
        p
    }

    pub fn one(table: &Arc<GeneratorTable>) -> Self {
        Self::constant(table, Rational::one())
    }

    pub fn monomial(table: &Arc<GeneratorTable>, m: Monomial, c: Rational) -> Self {
        let mut p = Self::zero(table);
        p.add_term(m, c);
        p
    }

    pub fn generator(table: &Arc<GeneratorTable>, name: &str) -> Result<Self> {
        let i = table.index_of(name)?;
        Ok(Self::monomial(table, Monomial::generator(table.len(), i), Rational::one()))
    }

    /// Parses text such as `3/2*T1^2*G12 - T2^2*G12`.
    pub fn parse(table: &Arc<GeneratorTable>, s: &str) -> Result<Self> {
        parse::parse_polynomial(table, s)
    }

    pub fn table(&self) -> &Arc<GeneratorTable> {
        &self.table
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &Rational)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, m: &Monomial) -> Rational {
        self.terms.get(m).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_term(&mut self, m: Monomial, c: Rational) {
        use alloc::collections::btree_map::Entry;
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            Entry::Vacant(e) => {
                e.insert(c);
            }
            Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    /// Degree of the terms if they all agree; the zero polynomial has none.
    pub fn homogeneous_degree(&self) -> Option<u32> {
        let mut it = self.terms.keys().map(|m| m.degree(&self.table));
        let d = it.next()?;
        it.all(|e| e == d).then_some(d)
    }

    pub fn is_homogeneous(&self) -> bool {
        self.is_zero() || self.homogeneous_degree().is_some()
    }

    /// The lexicographically latest monomial and its coefficient.
    pub fn leading(&self) -> Option<(&Monomial, &Rational)> {
        self.terms.iter().next_back()
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero(&self.table);
        }
        Self {
            table: Arc::clone(&self.table),
            terms: self.terms.iter().map(|(m, x)| (m.clone(), x * c)).collect(),
        }
    }

    /// Rescales so the leading coefficient is 1.
    pub fn normalized(&self) -> Self {
        match self.leading() {
            Some((_, c)) => self.scale(&c.recip()),
            None => self.clone(),
        }
    }

    fn check(&self, other: &Self) -> Result<()> {
        if same_table(&self.table, &other.table) {
            Ok(())
        } else {
            Err(Error::TableMismatch)
        }
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.scale(&-Rational::one()))
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        let mut out = Self::zero(&self.table);
        for (a, x) in &self.terms {
            for (b, y) in &other.terms {
                if let Some((neg, m)) = multiply_monomials(&self.table, a, b) {
                    let c = x * y;
                    out.add_term(m, if neg { -c } else { c });
                }
            }
        }
        Ok(out)
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut out = Self::one(&self.table);
        for _ in 0..k {
            out = out.mul(self).expect("same table");
        }
        out
    }

    /// Image under the algebra map sending generator `i` of this table to
    /// `images[i]`. The images must be homogeneous of matching parity for the
    /// result to be meaningful.
    pub fn substitute(&self, target: &Arc<GeneratorTable>, images: &[GPolynomial]) -> Result<Self> {
        if images.len() != self.table.len() {
            return Err(Error::DimensionMismatch { expected: self.table.len(), found: images.len() });
        }
        let mut out = Self::zero(target);
        for (m, c) in &self.terms {
            let mut t = Self::constant(target, c.clone());
            for (i, e) in m.0.iter().enumerate() {
                for _ in 0..*e {
                    t = t.mul(&images[i])?;
                }
            }
            out = out.add(&t)?;
        }
        Ok(out)
    }
}

impl fmt::Display for GPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (k, (m, c)) in self.terms.iter().rev().enumerate() {
            let neg = c.is_negative();
            let mag = c.abs();
            if k == 0 {
                if neg {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if neg { " - " } else { " + " })?;
            }
            let mut parts: Vec<String> = Vec::new();
            if !mag.is_one() || m.is_one() {
                parts.push(rational::to_string(&mag));
            }
            for (i, e) in m.0.iter().enumerate() {
                match e {
                    0 => {}
                    1 => parts.push(self.table.gens[i].name.clone()),
                    _ => parts.push(alloc::format!("{}^{}", self.table.gens[i].name, e)),
                }
            }
            f.write_str(&parts.join("*"))?;
        }
        Ok(())
    }
}
