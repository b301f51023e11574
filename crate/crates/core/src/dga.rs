//! Commutative differential graded algebras and their cohomology.
//!
//! A [`DgaSpec`] is a presented algebra with the differential prescribed on
//! generators and extended by the graded Leibniz rule. Cohomology is computed
//! degree by degree on the quotient bases from [`crate::gradedalg`] up to a
//! degree cap, so for finite models the top degrees past the cap must be
//! checked separately ([`CohomologyReport::top_degrees_vanish`] looks at the
//! last two computed degrees).

use alloc::collections::BTreeMap;
use alloc::string::{String, ToString};
use alloc::vec::Vec;

use num_traits::One;

use crate::error::{Error, Result};
use crate::gradedalg::{graded_basis, GPolynomial, GradedPiece, Monomial, PresentedAlgebra};
use crate::linalg::{kernel_and_image, Echelon, KernelImage, SparseVec};
use crate::rational::{int, Rational};

#[derive(Clone, Debug)]
pub struct DgaSpec {
    algebra: PresentedAlgebra,
    differential: Vec<GPolynomial>,
    degree_cap: u32,
}

impl DgaSpec {
    /// `differential[i]` is `d` of generator `i`; it must be zero or homogeneous
    /// of one degree higher.
    pub fn new(algebra: PresentedAlgebra, differential: Vec<GPolynomial>, degree_cap: u32) -> Result<Self> {
        let table = algebra.table();
        if differential.len() != table.len() {
            return Err(Error::DimensionMismatch { expected: table.len(), found: differential.len() });
        }
        for (g, dg) in table.generators().iter().zip(&differential) {
            if dg.table() != table && **dg.table() != **table {
                return Err(Error::TableMismatch);
            }
            if dg.is_zero() {
                continue;
            }
            let expected = g.degree + 1;
            match dg.homogeneous_degree() {
                Some(d) if d == expected => {}
                Some(d) => return Err(Error::DegreeMismatch { generator: g.name.clone(), expected, found: d }),
                None => return Err(Error::NotHomogeneous(dg.to_string())),
            }
        }
        Ok(Self { algebra, differential, degree_cap })
    }

    /// Builds from `(generator, d(generator))` text pairs; unlisted generators
    /// are cycles.
    pub fn parse(algebra: PresentedAlgebra, differential: &[(&str, &str)], degree_cap: u32) -> Result<Self> {
        let table = algebra.table().clone();
        let mut d = alloc::vec![GPolynomial::zero(&table); table.len()];
        for (name, image) in differential {
            d[table.index_of(name)?] = GPolynomial::parse(&table, image)?;
        }
        Self::new(algebra, d, degree_cap)
    }

    pub fn algebra(&self) -> &PresentedAlgebra {
        &self.algebra
    }

    pub fn differential_of_generators(&self) -> &[GPolynomial] {
        &self.differential
    }

    pub fn degree_cap(&self) -> u32 {
        self.degree_cap
    }

    pub fn with_cap(mut self, cap: u32) -> Self {
        self.degree_cap = cap;
        self
    }

    /// Applies the differential to an arbitrary polynomial.
    pub fn d(&self, p: &GPolynomial) -> GPolynomial {
        differential(self, p)
    }
}

fn d_monomial(spec: &DgaSpec, m: &Monomial) -> GPolynomial {
    let table = spec.algebra.table();
    let e = m.exponents();
    let mut out = GPolynomial::zero(table);
    let mut prefix_degree = 0;
    for i in 0..e.len() {
        if e[i] == 0 {
            continue;
        }
        let dg = &spec.differential[i];
        if !dg.is_zero() {
            let mut pre = alloc::vec![0; e.len()];
            pre[..i].copy_from_slice(&e[..i]);
            let mut mid = alloc::vec![0; e.len()];
            mid[i] = e[i] - 1;
            let mut post = alloc::vec![0; e.len()];
            post[i + 1..].copy_from_slice(&e[i + 1..]);
            let coeff = if prefix_degree % 2 == 1 { -int(e[i] as i64) } else { int(e[i] as i64) };
            let term = GPolynomial::monomial(table, Monomial::from_exponents(pre), coeff)
                .mul(&GPolynomial::monomial(table, Monomial::from_exponents(mid), Rational::one()))
                .and_then(|t| t.mul(dg))
                .and_then(|t| t.mul(&GPolynomial::monomial(table, Monomial::from_exponents(post), Rational::one())))
                .expect("same table");
            out = out.add(&term).expect("same table");
        }
        prefix_degree += e[i] * table.degree(i);
    }
    out
}

/// The Leibniz extension `d(ab) = d(a)b + (-1)^{|a|} a d(b)`.
pub fn differential(spec: &DgaSpec, p: &GPolynomial) -> GPolynomial {
    let table = spec.algebra.table();
    let mut out = GPolynomial::zero(table);
    for (m, c) in p.terms() {
        out = out.add(&d_monomial(spec, m).scale(c)).expect("same table");
    }
    out
}

/// Lazily built cochain complex of a [`DgaSpec`].
#[derive(Debug)]
pub struct Complex<'a> {
    spec: &'a DgaSpec,
    pieces: BTreeMap<u32, GradedPiece>,
    maps: BTreeMap<u32, KernelImage>,
}

impl<'a> Complex<'a> {
    pub fn new(spec: &'a DgaSpec) -> Self {
        Self { spec, pieces: BTreeMap::new(), maps: BTreeMap::new() }
    }

    pub fn spec(&self) -> &DgaSpec {
        self.spec
    }

    pub fn piece(&mut self, q: u32) -> &GradedPiece {
        self.pieces.entry(q).or_insert_with(|| graded_basis(&self.spec.algebra, q))
    }

    /// Columns of `d: A^q → A^{q+1}` in quotient coordinates.
    pub fn d_columns(&mut self, q: u32) -> Vec<SparseVec> {
        let table = self.spec.algebra.table().clone();
        let sources: Vec<GPolynomial> = {
            let piece = self.piece(q);
            piece.basis().map(|m| GPolynomial::monomial(&table, m.clone(), Rational::one())).collect()
        };
        let spec = self.spec;
        let target = self.piece(q + 1);
        sources
            .iter()
            .map(|s| target.project(&differential(spec, s)).expect("differential raises degree by one"))
            .collect()
    }

    fn map(&mut self, q: u32) -> &KernelImage {
        if !self.maps.contains_key(&q) {
            let cols = self.d_columns(q);
            self.maps.insert(q, kernel_and_image(&cols));
        }
        &self.maps[&q]
    }

    /// Echelon basis of the coboundaries in degree `q`.
    pub fn coboundaries(&mut self, q: u32) -> Echelon {
        if q == 0 {
            Echelon::new()
        } else {
            self.map(q - 1).image.clone()
        }
    }

    /// Basis of cocycles in degree `q`, in quotient coordinates.
    pub fn cocycles(&mut self, q: u32) -> Vec<SparseVec> {
        self.map(q).kernel.clone()
    }

    pub fn rank(&mut self, q: u32) -> usize {
        let z = self.map(q).kernel.len();
        let b = if q == 0 { 0 } else { self.map(q - 1).image.rank() };
        z - b
    }

    /// Whether a homogeneous polynomial is a coboundary modulo the ideal.
    pub fn is_coboundary(&mut self, p: &GPolynomial) -> Result<bool> {
        if !p.is_homogeneous() {
            return Err(Error::NotHomogeneous(p.to_string()));
        }
        let Some(q) = p.homogeneous_degree() else { return Ok(true) };
        let v = self.piece(q).project(p)?;
        Ok(self.coboundaries(q).contains(&v))
    }

    /// Whether `d(p)` vanishes in the quotient.
    pub fn is_cocycle(&mut self, p: &GPolynomial) -> Result<bool> {
        let dp = differential(self.spec, p);
        self.is_zero_in_quotient(&dp)
    }

    pub fn is_zero_in_quotient(&mut self, p: &GPolynomial) -> Result<bool> {
        if !p.is_homogeneous() {
            return Err(Error::NotHomogeneous(p.to_string()));
        }
        match p.homogeneous_degree() {
            None => Ok(true),
            Some(q) => Ok(self.piece(q).project(p)?.is_empty()),
        }
    }

    /// Cohomology classes in degree `q` as polynomials, each normalized so its
    /// latest monomial has coefficient 1.
    pub fn representatives(&mut self, q: u32) -> Vec<GPolynomial> {
        let mut span = self.coboundaries(q);
        let cycles = self.cocycles(q);
        let table = self.spec.algebra.table().clone();
        let piece = self.piece(q);
        let mut reps = Vec::new();
        for z in cycles {
            if let Some(r) = span.insert_reduced(&z) {
                reps.push(piece.lift(&table, &r));
            }
        }
        reps
    }
}

/// Checks `d∘d = 0` on every generator, modulo the ideal.
pub fn check_d_squared(spec: &DgaSpec) -> Result<()> {
    let mut cx = Complex::new(spec);
    for (g, dg) in spec.algebra.table().generators().iter().zip(&spec.differential) {
        let ddg = differential(spec, dg);
        if !cx.is_zero_in_quotient(&ddg)? {
            return Err(Error::DSquaredNonzero { generator: g.name.clone() });
        }
    }
    Ok(())
}

/// Checks `d(I) ⊆ I` through the degree cap: `d(r·m) ∈ I` for every relation
/// `r` and monomial `m` with `|r·m| ≤ cap`, and likewise for the nilpotence
/// relations `g^k = 0` built into the generator table.
pub fn check_ideal_stability(spec: &DgaSpec) -> Result<()> {
    let mut cx = Complex::new(spec);
    let table = spec.algebra.table().clone();
    let cap = spec.degree_cap;
    let mut cofactors: BTreeMap<u32, Vec<Monomial>> = BTreeMap::new();
    let check = |cx: &mut Complex<'_>, label: &dyn Fn() -> String, image: GPolynomial| -> Result<()> {
        if cx.is_zero_in_quotient(&image)? {
            Ok(())
        } else {
            Err(Error::IdealNotStable { relation: label() })
        }
    };
    for r in spec.algebra.relations() {
        let Some(d) = r.homogeneous_degree() else { continue };
        for e in 0..=cap.saturating_sub(d) {
            if d + e > cap {
                break;
            }
            let ms = cofactors.entry(e).or_insert_with(|| table.monomials_of_degree(e)).clone();
            for m in ms {
                let rm = r.mul(&GPolynomial::monomial(&table, m, Rational::one()))?;
                if rm.is_zero() {
                    continue;
                }
                check(&mut cx, &|| r.to_string(), differential(spec, &rm))?;
            }
        }
    }
    for (i, g) in table.generators().iter().enumerate() {
        let (Some(k), false) = (g.nilpotence, table.is_odd(i)) else { continue };
        let dg = &spec.differential[i];
        if dg.is_zero() || k * g.degree > cap {
            continue;
        }
        // d(g^k) = k g^{k-1} dg, with g^k already zero in normal forms
        let lead = GPolynomial::generator(&table, &g.name)?.pow(k - 1).mul(dg)?.scale(&int(k as i64));
        let d0 = k * g.degree;
        for e in 0..=cap - d0 {
            let ms = cofactors.entry(e).or_insert_with(|| table.monomials_of_degree(e)).clone();
            for m in ms {
                let image = lead.mul(&GPolynomial::monomial(&table, m, Rational::one()))?;
                check(&mut cx, &|| alloc::format!("{}^{}", g.name, k), image)?;
            }
        }
    }
    Ok(())
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CohomologyReport {
    pub degree_cap: u32,
    /// `ranks[q]` for `q = 0..=degree_cap`.
    pub ranks: Vec<usize>,
    pub representatives: Vec<Vec<GPolynomial>>,
    pub d_squared_ok: bool,
    pub ideal_stable_ok: bool,
    /// Ranks at the cap and one below it are both zero.
    pub top_degrees_vanish: bool,
}

impl CohomologyReport {
    pub fn rank(&self, q: u32) -> usize {
        self.ranks.get(q as usize).copied().unwrap_or(0)
    }

    pub fn euler_characteristic(&self) -> i64 {
        self.ranks.iter().enumerate().map(|(q, r)| if q % 2 == 0 { *r as i64 } else { -(*r as i64) }).sum()
    }

    pub fn total_rank(&self) -> usize {
        self.ranks.iter().sum()
    }
}

/// Validates the differential and computes cohomology through the cap.
pub fn cohomology(spec: &DgaSpec) -> Result<CohomologyReport> {
    check_d_squared(spec)?;
    check_ideal_stability(spec)?;
    Ok(cohomology_unchecked(spec))
}

/// Cohomology without validating `d² = 0` or ideal stability.
pub fn cohomology_unchecked(spec: &DgaSpec) -> CohomologyReport {
    let mut cx = Complex::new(spec);
    let cap = spec.degree_cap;
    let mut ranks = Vec::new();
    let mut representatives = Vec::new();
    for q in 0..=cap {
        let reps = cx.representatives(q);
        ranks.push(reps.len());
        representatives.push(reps);
    }
    let top_degrees_vanish = ranks.iter().rev().take(2).all(|r| *r == 0);
    CohomologyReport { degree_cap: cap, ranks, representatives, d_squared_ok: true, ideal_stable_ok: true, top_degrees_vanish }
}

/// One way a proposed presentation of the cohomology can fail.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum PresentationFailure {
    /// The image of a generator has the wrong degree.
    ImageDegree { generator: String, expected: u32, found: u32 },
    /// The image of a generator is not closed.
    NotCocycle { generator: String },
    /// A relation does not map to zero in cohomology.
    RelationNotExact { relation: String, degree: u32 },
    DimensionMismatch { degree: u32, presented: usize, cohomology: usize },
    /// The classes of presented monomials do not span cohomology.
    NotSurjective { degree: u32, image_rank: usize, cohomology: usize },
}

impl PresentationFailure {
    pub fn degree(&self) -> u32 {
        match self {
            PresentationFailure::ImageDegree { expected, .. } => *expected,
            PresentationFailure::NotCocycle { .. } => 0,
            PresentationFailure::RelationNotExact { degree, .. }
            | PresentationFailure::DimensionMismatch { degree, .. }
            | PresentationFailure::NotSurjective { degree, .. } => *degree,
        }
    }
}

impl core::fmt::Display for PresentationFailure {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        match self {
            PresentationFailure::ImageDegree { generator, expected, found } => {
                write!(f, "image of {generator} has degree {found}, expected {expected}")
            }
            PresentationFailure::NotCocycle { generator } => write!(f, "image of {generator} is not a cocycle"),
            PresentationFailure::RelationNotExact { relation, degree } => {
                write!(f, "relation {relation} is not zero in cohomology (degree {degree})")
            }
            PresentationFailure::DimensionMismatch { degree, presented, cohomology } => {
                write!(f, "degree {degree}: presented dimension {presented}, cohomology rank {cohomology}")
            }
            PresentationFailure::NotSurjective { degree, image_rank, cohomology } => {
                write!(f, "degree {degree}: image has rank {image_rank} of {cohomology}")
            }
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PresentationReport {
    pub degree_cap: u32,
    pub presented_dims: Vec<usize>,
    pub cohomology_ranks: Vec<usize>,
    /// Sorted by degree.
    pub failures: Vec<PresentationFailure>,
}

impl PresentationReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    pub fn first_failure(&self) -> Option<&PresentationFailure> {
        self.failures.first()
    }
}

/// Checks that generator `i` of `presented` ↦ `gen_map[i]` induces an
/// isomorphism `presented ≅ H(spec)` through the degree cap: the images are
/// cocycles of the right degree, every relation maps to a coboundary, the
/// graded dimensions agree, and the induced map is onto in every degree.
/// Together these make the induced map a well-defined graded surjection
/// between spaces of equal finite dimension.
pub fn verify_presentation(
    spec: &DgaSpec,
    presented: &PresentedAlgebra,
    gen_map: &[GPolynomial],
) -> Result<PresentationReport> {
    let ptable = presented.table();
    if gen_map.len() != ptable.len() {
        return Err(Error::DimensionMismatch { expected: ptable.len(), found: gen_map.len() });
    }
    let cap = spec.degree_cap;
    let target = spec.algebra.table();
    let mut cx = Complex::new(spec);
    let mut failures = Vec::new();

    for (g, img) in ptable.generators().iter().zip(gen_map) {
        if !img.is_zero() {
            match img.homogeneous_degree() {
                Some(d) if d == g.degree => {}
                Some(d) => {
                    failures.push(PresentationFailure::ImageDegree { generator: g.name.clone(), expected: g.degree, found: d });
                    continue;
                }
                None => return Err(Error::NotHomogeneous(img.to_string())),
            }
        }
        if g.degree <= cap && !cx.is_cocycle(img)? {
            failures.push(PresentationFailure::NotCocycle { generator: g.name.clone() });
        }
    }
    if !failures.is_empty() {
        return Ok(PresentationReport { degree_cap: cap, presented_dims: Vec::new(), cohomology_ranks: Vec::new(), failures });
    }

    for r in presented.relations() {
        let Some(d) = r.homogeneous_degree() else { continue };
        if d > cap {
            continue;
        }
        let image = r.substitute(target, gen_map)?;
        if !cx.is_coboundary(&image)? {
            failures.push(PresentationFailure::RelationNotExact { relation: r.to_string(), degree: d });
        }
    }
    // nilpotence relations of the presented table
    for (i, g) in ptable.generators().iter().enumerate() {
        let Some(k) = g.nilpotence else { continue };
        if ptable.is_odd(i) || k * g.degree > cap {
            continue;
        }
        let image = gen_map[i].pow(k);
        if !cx.is_coboundary(&image)? {
            failures.push(PresentationFailure::RelationNotExact {
                relation: alloc::format!("{}^{}", g.name, k),
                degree: k * g.degree,
            });
        }
    }

    let mut presented_dims = Vec::new();
    let mut ranks = Vec::new();
    for q in 0..=cap {
        let ppiece = graded_basis(presented, q);
        let rank = cx.rank(q);
        presented_dims.push(ppiece.dimension());
        ranks.push(rank);
        if ppiece.dimension() != rank {
            failures.push(PresentationFailure::DimensionMismatch { degree: q, presented: ppiece.dimension(), cohomology: rank });
        }
        let mut span = cx.coboundaries(q);
        let base = span.rank();
        for m in ppiece.basis() {
            let image = GPolynomial::monomial(ptable, m.clone(), Rational::one()).substitute(target, gen_map)?;
            let v = cx.piece(q).project(&image)?;
            span.insert(&v);
        }
        let image_rank = span.rank() - base;
        if image_rank != rank {
            failures.push(PresentationFailure::NotSurjective { degree: q, image_rank, cohomology: rank });
        }
    }
    failures.sort_by_key(|f| f.degree());
    Ok(PresentationReport { degree_cap: cap, presented_dims, cohomology_ranks: ranks, failures })
}
