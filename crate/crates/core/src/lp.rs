//! Exact feasibility of mixed strict/non-strict linear inequality systems.
//!
//! Strict rows `a·x < b` are relaxed to `a·x + t ≤ b` with a shared margin
//! `0 ≤ t ≤ 1`; the system is feasible iff the maximal margin is positive. The
//! margin problem is solved by a two-phase dense simplex with Bland's rule.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::rational::{self, Bound, Rational};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Relation {
    Less,
    LessEq,
    Greater,
    GreaterEq,
}

impl Relation {
    fn is_strict(self) -> bool {
        matches!(self, Relation::Less | Relation::Greater)
    }

    pub fn holds(self, lhs: &Rational, rhs: &Rational) -> bool {
        match self {
            Relation::Less => lhs < rhs,
            Relation::LessEq => lhs <= rhs,
            Relation::Greater => lhs > rhs,
            Relation::GreaterEq => lhs >= rhs,
        }
    }
}

impl fmt::Display for Relation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Relation::Less => "<",
            Relation::LessEq => "<=",
            Relation::Greater => ">",
            Relation::GreaterEq => ">=",
        })
    }
}

/// `coeffs · x  rel  constant`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Constraint {
    pub coeffs: Vec<Rational>,
    pub rel: Relation,
    pub constant: Rational,
}

impl Constraint {
    pub fn satisfied_by(&self, x: &[Rational]) -> bool {
        let lhs = dot(&self.coeffs, x);
        self.rel.holds(&lhs, &self.constant)
    }
}

fn dot(a: &[Rational], x: &[Rational]) -> Rational {
    a.iter().zip(x).fold(Rational::zero(), |acc, (u, v)| acc + u * v)
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct LinearConstraintSystem {
    dim: usize,
    constraints: Vec<Constraint>,
}

impl LinearConstraintSystem {
    pub fn new(dim: usize) -> Self {
        Self { dim, constraints: Vec::new() }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn constraints(&self) -> &[Constraint] {
        &self.constraints
    }

    pub fn push(&mut self, coeffs: Vec<Rational>, rel: Relation, constant: Rational) -> Result<()> {
        if coeffs.len() != self.dim {
            return Err(Error::DimensionMismatch { expected: self.dim, found: coeffs.len() });
        }
        self.constraints.push(Constraint { coeffs, rel, constant });
        Ok(())
    }

    pub fn pop(&mut self) -> Option<Constraint> {
        self.constraints.pop()
    }

    pub fn satisfied_by(&self, x: &[Rational]) -> bool {
        self.constraints.iter().all(|c| c.satisfied_by(x))
    }

    /// A point satisfying every constraint, or `None` when there is none.
    pub fn find_point(&self) -> Option<Vec<Rational>> {
        if self.constraints.is_empty() {
            return Some(vec![Rational::zero(); self.dim]);
        }
        solve_margin(self)
    }

    /// Like [`find_point`](Self::find_point), then moves coordinates one at a
    /// time to the simplest rational that keeps the system satisfied.
    pub fn find_simple_point(&self) -> Option<Vec<Rational>> {
        let mut x = self.find_point()?;
        simplify_point(self, &mut x);
        debug_assert!(self.satisfied_by(&x));
        Some(x)
    }
}

pub fn feasible(sys: &LinearConstraintSystem) -> bool {
    sys.find_point().is_some()
}

/// Replaces each coordinate in turn by the simplest rational in its feasible
/// interval (other coordinates held fixed). Two sweeps.
pub fn simplify_point(sys: &LinearConstraintSystem, x: &mut [Rational]) {
    for _ in 0..2 {
        for i in 0..sys.dim {
            let mut lo: Option<Bound> = None;
            let mut hi: Option<Bound> = None;
            for c in &sys.constraints {
                let a = &c.coeffs[i];
                if a.is_zero() {
                    continue;
                }
                // a*xi  rel  constant - rest
                let rest = dot(&c.coeffs, x) - a * &x[i];
                let v = (&c.constant - rest) / a;
                let upper = matches!(c.rel, Relation::Less | Relation::LessEq) == a.is_positive();
                let b = Bound { value: v, inclusive: !c.rel.is_strict() };
                if upper {
                    tighten_hi(&mut hi, b);
                } else {
                    tighten_lo(&mut lo, b);
                }
            }
            if let Some(s) = rational::simplest_in(&lo, &hi) {
                x[i] = s;
            }
        }
    }
}

fn tighten_hi(hi: &mut Option<Bound>, b: Bound) {
    let replace = match hi {
        None => true,
        Some(h) => b.value < h.value || (b.value == h.value && !b.inclusive),
    };
    if replace {
        *hi = Some(b);
    }
}

fn tighten_lo(lo: &mut Option<Bound>, b: Bound) {
    let replace = match lo {
        None => true,
        Some(l) => b.value > l.value || (b.value == l.value && !b.inclusive),
    };
    if replace {
        *lo = Some(b);
    }
}

struct Tableau {
    rows: Vec<Vec<Rational>>,
    rhs: Vec<Rational>,
    obj: Vec<Rational>,
    basis: Vec<usize>,
}

impl Tableau {
    fn pivot(&mut self, r: usize, c: usize) {
        let inv = self.rows[r][c].recip();
        for x in self.rows[r].iter_mut() {
            *x *= &inv;
        }
        self.rhs[r] *= &inv;
        let prow = self.rows[r].clone();
        let prhs = self.rhs[r].clone();
        for i in 0..self.rows.len() {
            if i == r || self.rows[i][c].is_zero() {
                continue;
            }
            let f = self.rows[i][c].clone();
            for (x, p) in self.rows[i].iter_mut().zip(&prow) {
                if !p.is_zero() {
                    *x -= &f * p;
                }
            }
            self.rhs[i] -= &f * &prhs;
        }
        if !self.obj[c].is_zero() {
            let f = self.obj[c].clone();
            for (x, p) in self.obj.iter_mut().zip(&prow) {
                if !p.is_zero() {
                    *x -= &f * p;
                }
            }
        }
        self.basis[r] = c;
    }

    /// Maximizes with Bland's rule over columns `< active`. Returns false when unbounded.
    fn run(&mut self, active: usize) -> bool {
        loop {
            let Some(c) = (0..active).find(|&j| self.obj[j].is_negative()) else {
                return true;
            };
            let mut best: Option<(usize, Rational)> = None;
            for i in 0..self.rows.len() {
                let a = &self.rows[i][c];
                if a.is_positive() {
                    let ratio = &self.rhs[i] / a;
                    let better = match &best {
                        None => true,
                        Some((bi, br)) => {
                            ratio < *br || (ratio == *br && self.basis[i] < self.basis[*bi])
                        }
                    };
                    if better {
                        best = Some((i, ratio));
                    }
                }
            }
            match best {
                Some((r, _)) => self.pivot(r, c),
                None => return false,
            }
        }
    }
}

fn solve_margin(sys: &LinearConstraintSystem) -> Option<Vec<Rational>> {
    let d = sys.dim;
    let has_strict = sys.constraints.iter().any(|c| c.rel.is_strict());
    // columns: u (d), v (d), t, slacks (m), artificials
    let t_col = 2 * d;
    let mut rows_a: Vec<Vec<Rational>> = Vec::new();
    let mut rhs: Vec<Rational> = Vec::new();
    for c in &sys.constraints {
        // normalize to a·x (+t) <= b
        let (a, b): (Vec<Rational>, Rational) = match c.rel {
            Relation::Less | Relation::LessEq => (c.coeffs.clone(), c.constant.clone()),
            _ => (c.coeffs.iter().map(|x| -x).collect(), -c.constant.clone()),
        };
        let mut row = Vec::with_capacity(2 * d + 1);
        row.extend(a.iter().cloned());
        row.extend(a.iter().map(|x| -x));
        row.push(if c.rel.is_strict() { Rational::one() } else { Rational::zero() });
        rows_a.push(row);
        rhs.push(b);
    }
    // t <= 1
    let mut trow = vec![Rational::zero(); 2 * d + 1];
    trow[t_col] = Rational::one();
    rows_a.push(trow);
    rhs.push(Rational::one());

    let m = rows_a.len();
    let n_struct = 2 * d + 1;
    let negative: Vec<usize> = (0..m).filter(|&i| rhs[i].is_negative()).collect();
    let n_art = negative.len();
    let ncols = n_struct + m + n_art;
    let mut rows = Vec::with_capacity(m);
    let mut basis = Vec::with_capacity(m);
    let mut art_idx = 0;
    for i in 0..m {
        let mut row = vec![Rational::zero(); ncols];
        let neg = rhs[i].is_negative();
        let sgn = if neg { -Rational::one() } else { Rational::one() };
        for j in 0..n_struct {
            if !rows_a[i][j].is_zero() {
                row[j] = &rows_a[i][j] * &sgn;
            }
        }
        row[n_struct + i] = sgn.clone();
        if neg {
            let col = n_struct + m + art_idx;
            row[col] = Rational::one();
            basis.push(col);
            art_idx += 1;
            rhs[i] = -rhs[i].clone();
        } else {
            basis.push(n_struct + i);
        }
        rows.push(row);
    }
    let mut tab = Tableau { rows, rhs, obj: vec![Rational::zero(); ncols], basis };

    if n_art > 0 {
        // maximize -sum(artificials)
        for j in n_struct + m..ncols {
            tab.obj[j] = Rational::one();
        }
        let mut obj_rhs = Rational::zero();
        for i in 0..m {
            if tab.basis[i] >= n_struct + m {
                for j in 0..ncols {
                    if !tab.rows[i][j].is_zero() {
                        let v = tab.rows[i][j].clone();
                        tab.obj[j] -= v;
                    }
                }
                obj_rhs -= &tab.rhs[i];
            }
        }
        // obj_rhs tracks -(sum of artificials); recompute from the basis after solving.
        let _ = obj_rhs;
        tab.run(ncols);
        let art_sum = (0..m)
            .filter(|&i| tab.basis[i] >= n_struct + m)
            .fold(Rational::zero(), |acc, i| acc + &tab.rhs[i]);
        if !art_sum.is_zero() {
            return None;
        }
        // drive zero-level artificials out of the basis
        let mut i = 0;
        while i < tab.rows.len() {
            if tab.basis[i] >= n_struct + m {
                if let Some(c) = (0..n_struct + m).find(|&j| !tab.rows[i][j].is_zero()) {
                    tab.pivot(i, c);
                    i += 1;
                } else {
                    tab.rows.remove(i);
                    tab.rhs.remove(i);
                    tab.basis.remove(i);
                }
            } else {
                i += 1;
            }
        }
        for r in tab.rows.iter_mut() {
            r.truncate(n_struct + m);
        }
    }
    let active = n_struct + m;
    tab.obj = vec![Rational::zero(); active];
    if has_strict {
        // maximize t
        tab.obj[t_col] = -Rational::one();
        for i in 0..tab.rows.len() {
            let b = tab.basis[i];
            if !tab.obj[b].is_zero() {
                let f = tab.obj[b].clone();
                let row = tab.rows[i].clone();
                for (x, p) in tab.obj.iter_mut().zip(&row) {
                    if !p.is_zero() {
                        *x -= &f * p;
                    }
                }
            }
        }
        let bounded = tab.run(active);
        debug_assert!(bounded, "margin is capped at 1");
    }
    let mut y = vec![Rational::zero(); active];
    for (i, &b) in tab.basis.iter().enumerate() {
        y[b] = tab.rhs[i].clone();
    }
    if has_strict && !y[t_col].is_positive() {
        return None;
    }
    let x: Vec<Rational> = (0..d).map(|j| &y[j] - &y[d + j]).collect();
    debug_assert!(sys.satisfied_by(&x));
    Some(x)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{frac, int};

    fn sys1(cs: &[(i64, Relation, Rational)]) -> LinearConstraintSystem {
        let mut s = LinearConstraintSystem::new(1);
        for (a, r, b) in cs {
            s.push(vec![int(*a)], *r, b.clone()).unwrap();
        }
        s
    }

    #[test]
    fn open_and_closed_half_lines() {
        use Relation::*;
        assert!(!feasible(&sys1(&[(1, Greater, int(0)), (1, Less, int(0))])));
        let s = sys1(&[(1, GreaterEq, int(0)), (1, LessEq, int(0))]);
        assert_eq!(s.find_point(), Some(vec![int(0)]));
        assert!(feasible(&LinearConstraintSystem::new(3)));
    }

    #[test]
    fn triangle_with_strict_sides() {
        use Relation::*;
        let mut s = LinearConstraintSystem::new(2);
        s.push(vec![int(1), int(1)], Less, int(1)).unwrap();
        s.push(vec![int(1), int(0)], Greater, frac(2, 5)).unwrap();
        s.push(vec![int(0), int(1)], Greater, frac(2, 5)).unwrap();
        let p = s.find_simple_point().unwrap();
        assert!(s.satisfied_by(&p));
        assert!(s.satisfied_by(&[frac(9, 20), frac(9, 20)]));
        s.push(vec![int(1), int(0)], Greater, frac(3, 5)).unwrap();
        assert!(!feasible(&s));
    }

    #[test]
    fn negative_right_hand_sides_need_phase_one() {
        use Relation::*;
        let mut s = LinearConstraintSystem::new(2);
        s.push(vec![int(1), int(0)], GreaterEq, int(3)).unwrap();
        s.push(vec![int(0), int(1)], LessEq, int(-2)).unwrap();
        s.push(vec![int(1), int(1)], Greater, int(0)).unwrap();
        let p = s.find_point().unwrap();
        assert!(s.satisfied_by(&p));
        s.push(vec![int(1), int(1)], Less, int(1)).unwrap();
        assert!(feasible(&s));
        s.push(vec![int(0), int(1)], GreaterEq, int(-2)).unwrap();
        assert!(!feasible(&s));
    }

    #[test]
    fn dimension_is_checked() {
        let mut s = LinearConstraintSystem::new(2);
        assert!(s.push(vec![int(1)], Relation::Less, int(0)).is_err());
    }

    proptest::proptest! {
        // Feasibility of random 2-d systems agrees with a grid search whenever
        // the grid finds a point, and any returned point is genuine.
        #[test]
        fn returned_points_satisfy(rows in proptest::collection::vec((-3i64..4, -3i64..4, -4i64..5, 0usize..4), 1..7)) {
            let rels = [Relation::Less, Relation::LessEq, Relation::Greater, Relation::GreaterEq];
            let mut s = LinearConstraintSystem::new(2);
            for (a, b, c, r) in &rows {
                s.push(vec![int(*a), int(*b)], rels[*r], int(*c)).unwrap();
            }
            let found = s.find_simple_point();
            if let Some(p) = &found {
                proptest::prop_assert!(s.satisfied_by(p));
            }
            let mut grid_hit = false;
            for i in -40..=40 {
                for j in -40..=40 {
                    if s.satisfied_by(&[frac(i, 4), frac(j, 4)]) {
                        grid_hit = true;
                    }
                }
            }
            if grid_hit {
                proptest::prop_assert!(found.is_some());
            }
        }
    }
}
