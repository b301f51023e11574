//! Exact sparse row reduction over the rationals.
//!
//! Rows are kept in echelon form keyed by their *last* nonzero column: the pivot
//! of a row is its largest column index and carries coefficient 1. Reducing a
//! vector eliminates pivot columns from the top down, so the remainder of any
//! vector is supported on non-pivot columns only and depends only on the span.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use num_traits::{One, Zero};

use crate::Rational;

/// Sparse vector as sorted `(column, nonzero coefficient)` pairs.
pub type SparseVec = Vec<(usize, Rational)>;

fn to_map(v: &[(usize, Rational)]) -> BTreeMap<usize, Rational> {
    let mut m = BTreeMap::new();
    for (c, x) in v {
        if !x.is_zero() {
            add_to(&mut m, *c, x.clone());
        }
    }
    m
}

fn add_to(m: &mut BTreeMap<usize, Rational>, c: usize, x: Rational) {
    use alloc::collections::btree_map::Entry;
    match m.entry(c) {
        Entry::Vacant(e) => {
            if !x.is_zero() {
                e.insert(x);
            }
        }
        Entry::Occupied(mut e) => {
            *e.get_mut() += x;
            if e.get().is_zero() {
                e.remove();
            }
        }
    }
}

fn axpy(m: &mut BTreeMap<usize, Rational>, factor: &Rational, row: &[(usize, Rational)]) {
    for (c, x) in row {
        add_to(m, *c, factor * x);
    }
}

fn scale_to_unit_last(v: &mut SparseVec) {
    if let Some((_, last)) = v.last() {
        if !last.is_one() {
            let inv = last.recip();
            for (_, x) in v.iter_mut() {
                *x *= &inv;
            }
        }
    }
}

/// An echelon basis of a subspace of `Q^dim`.
#[derive(Clone, Debug, Default)]
pub struct Echelon {
    rows: BTreeMap<usize, SparseVec>,
}

impl Echelon {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn is_pivot(&self, col: usize) -> bool {
        self.rows.contains_key(&col)
    }

    pub fn pivots(&self) -> impl Iterator<Item = usize> + '_ {
        self.rows.keys().copied()
    }

    fn reduce_map(&self, mut work: BTreeMap<usize, Rational>) -> SparseVec {
        let mut out = Vec::new();
        while let Some((c, x)) = work.pop_last() {
            match self.rows.get(&c) {
                Some(row) => {
                    // row has coefficient 1 at c, which is its last entry
                    let neg = -x;
                    axpy(&mut work, &neg, &row[..row.len() - 1]);
                }
                None => out.push((c, x)),
            }
        }
        out.reverse();
        out
    }

    /// Remainder of `v` modulo the span: supported on non-pivot columns.
    pub fn reduce(&self, v: &[(usize, Rational)]) -> SparseVec {
        self.reduce_map(to_map(v))
    }

    pub fn contains(&self, v: &[(usize, Rational)]) -> bool {
        self.reduce(v).is_empty()
    }

    /// Adds `v` to the span. Returns `true` when the rank grew.
    pub fn insert(&mut self, v: &[(usize, Rational)]) -> bool {
        let mut r = self.reduce(v);
        if r.is_empty() {
            return false;
        }
        scale_to_unit_last(&mut r);
        let pivot = r.last().map(|(c, _)| *c).expect("nonempty");
        self.rows.insert(pivot, r);
        true
    }

    /// Like [`Echelon::insert`] but also returns the normalized reduced row.
    pub fn insert_reduced(&mut self, v: &[(usize, Rational)]) -> Option<SparseVec> {
        let mut r = self.reduce(v);
        if r.is_empty() {
            return None;
        }
        scale_to_unit_last(&mut r);
        let pivot = r.last().map(|(c, _)| *c).expect("nonempty");
        self.rows.insert(pivot, r.clone());
        Some(r)
    }
}

/// Result of reducing a list of vectors while remembering how each row was formed.
#[derive(Clone, Debug)]
pub struct KernelImage {
    /// Echelon basis of the span of the inputs.
    pub image: Echelon,
    /// Basis of linear relations among the inputs (coordinates index the inputs).
    pub kernel: Vec<SparseVec>,
}

/// Computes image and kernel of the linear map sending basis vector `j` to
/// `columns[j]`.
pub fn kernel_and_image(columns: &[SparseVec]) -> KernelImage {
    // pivot -> (row, combination of inputs producing row)
    let mut rows: BTreeMap<usize, (SparseVec, SparseVec)> = BTreeMap::new();
    let mut kernel = Vec::new();
    for (j, col) in columns.iter().enumerate() {
        let mut work = to_map(col);
        let mut combo: BTreeMap<usize, Rational> = BTreeMap::new();
        combo.insert(j, Rational::one());
        let mut out: SparseVec = Vec::new();
        while let Some((c, x)) = work.pop_last() {
            match rows.get(&c) {
                Some((row, rc)) => {
                    let neg = -x;
                    axpy(&mut work, &neg, &row[..row.len() - 1]);
                    axpy(&mut combo, &neg, rc);
                }
                None => out.push((c, x)),
            }
        }
        let mut combo: SparseVec = combo.into_iter().collect();
        if out.is_empty() {
            scale_to_unit_last(&mut combo);
            kernel.push(combo);
        } else {
            out.reverse();
            let last = out.last().expect("nonempty").1.clone();
            let inv = last.recip();
            for (_, x) in out.iter_mut() {
                *x *= &inv;
            }
            for (_, x) in combo.iter_mut() {
                *x *= &inv;
            }
            let pivot = out.last().expect("nonempty").0;
            rows.insert(pivot, (out, combo));
        }
    }
    let image = Echelon { rows: rows.into_iter().map(|(p, (r, _))| (p, r)).collect() };
    KernelImage { image, kernel }
}

/// Applies a sparse matrix given by columns to a sparse coordinate vector.
pub fn apply(columns: &[SparseVec], v: &[(usize, Rational)]) -> SparseVec {
    let mut m = BTreeMap::new();
    for (j, x) in v {
        axpy(&mut m, x, &columns[*j]);
    }
    m.into_iter().collect()
}
