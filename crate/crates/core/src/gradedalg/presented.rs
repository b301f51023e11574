//! Finitely presented algebras and their per-degree quotient bases.

use alloc::collections::BTreeMap;
use alloc::string::ToString;
use alloc::sync::Arc;
use alloc::vec::Vec;

use super::{multiply_monomials, GPolynomial, GeneratorTable, Monomial};
use crate::error::{Error, Result};
use crate::linalg::{Echelon, SparseVec};
use crate::rational::Rational;

/// `Λ(generators) / (relations)` with homogeneous relations.
#[derive(Clone, Debug)]
pub struct PresentedAlgebra {
    table: Arc<GeneratorTable>,
    relations: Vec<GPolynomial>,
}

impl PresentedAlgebra {
    pub fn new(table: Arc<GeneratorTable>, relations: Vec<GPolynomial>) -> Result<Self> {
        for r in &relations {
            if !Arc::ptr_eq(r.table(), &table) && **r.table() != *table {
                return Err(Error::TableMismatch);
            }
            if !r.is_homogeneous() {
                return Err(Error::NotHomogeneous(r.to_string()));
            }
        }
        let relations = relations.into_iter().filter(|r| !r.is_zero()).collect();
        Ok(Self { table, relations })
    }

    /// Builds from relation text over `table`.
    pub fn parse(table: Arc<GeneratorTable>, relations: &[&str]) -> Result<Self> {
        let rels = relations
            .iter()
            .map(|s| GPolynomial::parse(&table, s))
            .collect::<Result<Vec<_>>>()?;
        Self::new(table, rels)
    }

    pub fn free(table: Arc<GeneratorTable>) -> Self {
        Self { table, relations: Vec::new() }
    }

    pub fn table(&self) -> &Arc<GeneratorTable> {
        &self.table
    }

    pub fn relations(&self) -> &[GPolynomial] {
        &self.relations
    }

    pub fn poly(&self, s: &str) -> Result<GPolynomial> {
        GPolynomial::parse(&self.table, s)
    }
}

/// The degree-`q` piece of a presented algebra.
///
/// The ideal is kept in echelon form over the ambient monomials (ordered
/// lexicographically); its pivots are the latest monomials, so the quotient
/// basis consists of the non-pivot monomials.
#[derive(Clone, Debug)]
pub struct GradedPiece {
    degree: u32,
    ambient: Vec<Monomial>,
    index: BTreeMap<Monomial, usize>,
    ideal: Echelon,
    complement: Vec<usize>,
    complement_pos: BTreeMap<usize, usize>,
}

impl GradedPiece {
    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn ambient(&self) -> &[Monomial] {
        &self.ambient
    }

    pub fn ideal(&self) -> &Echelon {
        &self.ideal
    }

    pub fn ideal_dimension(&self) -> usize {
        self.ideal.rank()
    }

    pub fn dimension(&self) -> usize {
        self.complement.len()
    }

    pub fn basis(&self) -> impl ExactSizeIterator<Item = &Monomial> + '_ {
        self.complement.iter().map(move |&i| &self.ambient[i])
    }

    /// Coordinates over the ambient monomials. Terms of other degrees are an error.
    pub fn coordinates(&self, p: &GPolynomial) -> Result<SparseVec> {
        let mut out = Vec::with_capacity(p.len());
        for (m, c) in p.terms() {
            match self.index.get(m) {
                Some(&i) => out.push((i, c.clone())),
                None => {
                    return Err(Error::DegreeMismatch {
                        generator: p.to_string(),
                        expected: self.degree,
                        found: m.degree(p.table()),
                    })
                }
            }
        }
        Ok(out)
    }

    /// Coordinates of the class of `p` in the quotient basis.
    pub fn project(&self, p: &GPolynomial) -> Result<SparseVec> {
        let coords = self.coordinates(p)?;
        Ok(self.project_coordinates(&coords))
    }

    pub fn project_coordinates(&self, coords: &[(usize, Rational)]) -> SparseVec {
        self.ideal
            .reduce(coords)
            .into_iter()
            .map(|(i, c)| (self.complement_pos[&i], c))
            .collect()
    }

    /// The polynomial whose quotient coordinates are `v`.
    pub fn lift(&self, table: &Arc<GeneratorTable>, v: &[(usize, Rational)]) -> GPolynomial {
        let mut p = GPolynomial::zero(table);
        for (i, c) in v {
            p.add_term(self.ambient[self.complement[*i]].clone(), c.clone());
        }
        p
    }
}

/// Computes the degree-`q` piece: ambient monomials, the ideal spanned by
/// `relation × monomial`, and the complementary quotient basis.
pub fn graded_basis(algebra: &PresentedAlgebra, q: u32) -> GradedPiece {
    let table = &algebra.table;
    let ambient = table.monomials_of_degree(q);
    let index: BTreeMap<Monomial, usize> =
        ambient.iter().cloned().enumerate().map(|(i, m)| (m, i)).collect();
    let mut ideal = Echelon::new();
    let mut cofactors: BTreeMap<u32, Vec<Monomial>> = BTreeMap::new();
    for r in &algebra.relations {
        let Some(d) = r.homogeneous_degree() else { continue };
        if d > q || ideal.rank() == ambient.len() {
            continue;
        }
        let ms = cofactors.entry(q - d).or_insert_with(|| table.monomials_of_degree(q - d));
        for m in ms.iter() {
            let mut row: BTreeMap<usize, Rational> = BTreeMap::new();
            for (a, c) in r.terms() {
                if let Some((neg, prod)) = multiply_monomials(table, a, m) {
                    let e = row.entry(index[&prod]).or_default();
                    if neg {
                        *e -= c;
                    } else {
                        *e += c;
                    }
                }
            }
            let row: SparseVec = row.into_iter().filter(|(_, c)| *c != Rational::default()).collect();
            if !row.is_empty() {
                ideal.insert(&row);
            }
        }
    }
    let complement: Vec<usize> = (0..ambient.len()).filter(|i| !ideal.is_pivot(*i)).collect();
    let complement_pos = complement.iter().enumerate().map(|(k, &i)| (i, k)).collect();
    GradedPiece { degree: q, ambient, index, ideal, complement, complement_pos }
}

pub fn quotient_dimension(algebra: &PresentedAlgebra, q: u32) -> usize {
    graded_basis(algebra, q).dimension()
}

/// Whether a homogeneous polynomial lies in the defining ideal.
pub fn ideal_member(algebra: &PresentedAlgebra, p: &GPolynomial) -> Result<bool> {
    if !p.is_homogeneous() {
        return Err(Error::NotHomogeneous(p.to_string()));
    }
    let Some(q) = p.homogeneous_degree() else { return Ok(true) };
    let piece = graded_basis(algebra, q);
    Ok(piece.project(p)?.is_empty())
}
