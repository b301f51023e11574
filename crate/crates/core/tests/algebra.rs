use cpstrata_core::ballmodels::{iemb_model, CircleWeights};
use cpstrata_core::chambers::ChamberLabel;
use cpstrata_core::dga::{check_d_squared, check_ideal_stability, cohomology, DgaSpec};
use cpstrata_core::gradedalg::{
    ideal_member, multiply_monomials, quotient_dimension, GPolynomial, Generator, GeneratorTable,
    Monomial, PresentedAlgebra,
};
use cpstrata_core::kriz::{kriz_model, relabeling, KrizParams};
use cpstrata_core::rational::int;
use proptest::prelude::*;
use std::sync::Arc;

fn mixed_table() -> Arc<GeneratorTable> {
    GeneratorTable::new(vec![
        Generator::new("a", 2),
        Generator::nilpotent("b", 2, 3),
        Generator::new("u", 1),
        Generator::new("v", 3),
        Generator::new("w", 1),
    ])
    .unwrap()
}

/// Sorts the concatenated generator word by adjacent swaps, tracking the sign.
fn oracle_product(t: &GeneratorTable, a: &Monomial, b: &Monomial) -> Option<(bool, Vec<u32>)> {
    let mut word: Vec<usize> = Vec::new();
    for m in [a, b] {
        for (i, e) in m.exponents().iter().enumerate() {
            word.extend(std::iter::repeat_n(i, *e as usize));
        }
    }
    let mut neg = false;
    for i in 0..word.len() {
        for j in 0..word.len() - 1 - i {
            if word[j] > word[j + 1] {
                if t.is_odd(word[j]) && t.is_odd(word[j + 1]) {
                    neg = !neg;
                }
                word.swap(j, j + 1);
            }
        }
    }
    let mut exps = vec![0u32; t.len()];
    for g in word {
        exps[g] += 1;
    }
    for (i, e) in exps.iter().enumerate() {
        if t.is_odd(i) && *e > 1 {
            return None;
        }
        if let Some(max) = t.max_exponent(i) {
            if *e > max {
                return None;
            }
        }
    }
    Some((neg, exps))
}

fn homogeneous(table: Arc<GeneratorTable>, max_degree: u32) -> impl Strategy<Value = GPolynomial> {
    (1..=max_degree, prop::collection::vec(-3i64..4, 12)).prop_map(move |(q, coeffs)| {
        let mut p = GPolynomial::zero(&table);
        for (m, c) in table.monomials_of_degree(q).into_iter().zip(coeffs) {
            p.add_term(m, int(c));
        }
        p
    })
}

fn sign_of(p: &GPolynomial, q: &GPolynomial) -> i64 {
    let (a, b) = (p.homogeneous_degree().unwrap_or(0), q.homogeneous_degree().unwrap_or(0));
    if a % 2 == 1 && b % 2 == 1 {
        -1
    } else {
        1
    }
}

#[test]
fn monomial_products_match_sorting_oracle() {
    let t = mixed_table();
    let monos: Vec<Monomial> = (0..=5).flat_map(|q| t.monomials_of_degree(q)).collect();
    for a in &monos {
        for b in &monos {
            let lib = multiply_monomials(&t, a, b).map(|(s, m)| (s, m.exponents().to_vec()));
            assert_eq!(lib, oracle_product(&t, a, b), "{a:?} * {b:?}");
        }
    }
}

#[test]
fn signed_terms_parse() {
    let t = mixed_table();
    let p = GPolynomial::parse(&t, "a^2 + -2*b*a - -a^2").unwrap();
    assert_eq!(p, GPolynomial::parse(&t, "2*a^2 - 2*a*b").unwrap());
}

#[test]
fn exterior_algebra_dimensions() {
    for k in 1..=6usize {
        let gens = (0..k).map(|i| Generator::new(&format!("e{i}"), 1)).collect();
        let alg = PresentedAlgebra::free(GeneratorTable::new(gens).unwrap());
        let mut binom = 1usize;
        for q in 0..=k as u32 {
            assert_eq!(quotient_dimension(&alg, q), binom, "k = {k}, q = {q}");
            binom = binom * (k - q as usize) / (q as usize + 1);
        }
        assert_eq!(quotient_dimension(&alg, k as u32 + 1), 0);
    }
}

#[test]
fn polynomial_ring_dimensions() {
    // Two degree-2 generators: dim in degree 2q is q + 1; truncating one at T^3 caps it at 3.
    let t = GeneratorTable::new(vec![Generator::new("S", 2), Generator::new("T", 2)]).unwrap();
    let free = PresentedAlgebra::free(t.clone());
    let cut = PresentedAlgebra::parse(t, &["T^3"]).unwrap();
    for q in 0..8u32 {
        assert_eq!(quotient_dimension(&free, 2 * q), q as usize + 1);
        assert_eq!(quotient_dimension(&free, 2 * q + 1), 0);
        assert_eq!(quotient_dimension(&cut, 2 * q), (q as usize + 1).min(3));
    }
}

#[test]
fn relation_order_and_scaling_do_not_matter() {
    let t = GeneratorTable::new(vec![
        Generator::new("T1", 2),
        Generator::new("T2", 2),
        Generator::new("T3", 2),
        Generator::new("eta", 7),
    ])
    .unwrap();
    let rels = ["T1^2 + T1*T2 + T2^2 + T3^2", "T1*T3", "T2*T3", "T1^3", "eta*T1", "eta*T2"];
    let a = PresentedAlgebra::parse(t.clone(), &rels).unwrap();
    let mut rev: Vec<GPolynomial> =
        rels.iter().rev().map(|s| GPolynomial::parse(&t, s).unwrap().scale(&int(-3))).collect();
    rev.push(GPolynomial::parse(&t, "T1*T3 + T2*T3").unwrap());
    let b = PresentedAlgebra::new(t, rev).unwrap();
    for q in 0..=16 {
        assert_eq!(quotient_dimension(&a, q), quotient_dimension(&b, q), "q = {q}");
    }
}

fn all_models() -> Vec<DgaSpec> {
    let mut out = Vec::new();
    for (n, chambers) in [
        (1, vec![ChamberLabel::Unique]),
        (2, vec![ChamberLabel::Unique]),
        (3, vec![ChamberLabel::Big, ChamberLabel::Small]),
        (4, (0..=4).map(ChamberLabel::C).collect()),
    ] {
        for ch in chambers {
            let count = match (n, ch) {
                (3, ChamberLabel::Small) => 1,
                (4, ChamberLabel::C(r)) => r as usize,
                _ => 0,
            };
            for w in [CircleWeights::uniform(count), CircleWeights::new(vec![(2, -1); count]).unwrap()] {
                out.push(iemb_model(n, ch, &w, 12).unwrap_or_else(|e| panic!("{n} {ch} {w}: {e}")));
            }
        }
    }
    for m in 1..=3 {
        for k in 1..=4 {
            out.push(kriz_model(KrizParams::new(m, k).unwrap(), (2 * m * k as u32).min(12)));
        }
    }
    out
}

#[test]
fn every_model_is_a_dga() {
    for spec in all_models() {
        check_d_squared(&spec).unwrap();
        check_ideal_stability(&spec).unwrap();
    }
}

#[test]
fn kriz_euler_characteristic_is_falling_factorial() {
    for m in 1..=3u32 {
        for k in 1..=3usize {
            let rep = cohomology(&kriz_model(KrizParams::new(m, k).unwrap(), 2 * m * k as u32)).unwrap();
            let chi: i64 = (0..k as i64).map(|j| m as i64 + 1 - j).product();
            assert_eq!(rep.euler_characteristic(), chi, "m = {m}, k = {k}");
        }
    }
}

#[test]
fn kriz_two_points_match_fibration_poincare_series() {
    for m in 1..=4u32 {
        let cap = 4 * m;
        let rep = cohomology(&kriz_model(KrizParams::new(m, 2).unwrap(), cap)).unwrap();
        let mut expected = vec![0usize; cap as usize + 1];
        for i in 0..=m {
            for j in 0..m {
                expected[(2 * (i + j)) as usize] += 1;
            }
        }
        assert_eq!(rep.ranks, expected, "m = {m}");
    }
}

fn permutations(k: usize) -> Vec<Vec<usize>> {
    if k == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for p in permutations(k - 1) {
        for pos in 0..=p.len() {
            let mut q = p.clone();
            q.insert(pos, k - 1);
            out.push(q);
        }
    }
    out
}

#[test]
fn kriz_model_is_symmetric() {
    for k in [3usize, 4] {
        let p = KrizParams::new(2, k).unwrap();
        let spec = kriz_model(p, 8);
        let alg = spec.algebra();
        let table = alg.table().clone();
        for perm in permutations(k) {
            let images = relabeling(p, &perm).unwrap();
            for r in alg.relations() {
                let img = r.substitute(&table, &images).unwrap();
                assert!(ideal_member(alg, &img).unwrap(), "{r} under {perm:?}");
            }
            for (i, dg) in spec.differential_of_generators().iter().enumerate() {
                let lhs = spec.d(&images[i]);
                let rhs = dg.substitute(&table, &images).unwrap();
                assert!(ideal_member(alg, &lhs.sub(&rhs).unwrap()).unwrap());
            }
        }
    }
}

#[test]
fn reordering_generators_keeps_ranks() {
    let spec = kriz_model(KrizParams::new(2, 3).unwrap(), 10);
    let src = spec.algebra().table().clone();
    let reversed: Vec<Generator> = src.generators().iter().rev().cloned().collect();
    let dst = GeneratorTable::new(reversed).unwrap();
    let images: Vec<GPolynomial> =
        src.generators().iter().map(|g| GPolynomial::generator(&dst, &g.name).unwrap()).collect();
    let rels = spec.algebra().relations().iter().map(|r| r.substitute(&dst, &images).unwrap()).collect();
    // The differential must be listed in the new generator order.
    let diff: Vec<GPolynomial> = dst
        .generators()
        .iter()
        .map(|g| {
            let i = src.index_of(&g.name).unwrap();
            spec.differential_of_generators()[i].substitute(&dst, &images).unwrap()
        })
        .collect();
    let other = DgaSpec::new(PresentedAlgebra::new(dst, rels).unwrap(), diff, 10).unwrap();
    assert_eq!(cohomology(&other).unwrap().ranks, cohomology(&spec).unwrap().ranks);
}

#[test]
fn zero_differential_gives_quotient_dimensions() {
    let t = mixed_table();
    let alg = PresentedAlgebra::parse(t.clone(), &["a*u - w*a", "b^2 - a^2", "u*v"]).unwrap();
    let zero = vec![GPolynomial::zero(&t); t.len()];
    let rep = cohomology(&DgaSpec::new(alg.clone(), zero, 9).unwrap()).unwrap();
    let dims: Vec<usize> = (0..=9).map(|q| quotient_dimension(&alg, q)).collect();
    assert_eq!(rep.ranks, dims);
}

proptest! {
    #[test]
    fn graded_commutative(p in homogeneous(mixed_table(), 5), q in homogeneous(mixed_table(), 5)) {
        let pq = p.mul(&q).unwrap();
        let qp = q.mul(&p).unwrap().scale(&int(sign_of(&p, &q)));
        prop_assert_eq!(pq, qp);
    }

    #[test]
    fn associative(
        p in homogeneous(mixed_table(), 4),
        q in homogeneous(mixed_table(), 4),
        r in homogeneous(mixed_table(), 4),
    ) {
        let lhs = p.mul(&q).unwrap().mul(&r).unwrap();
        let rhs = p.mul(&q.mul(&r).unwrap()).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn display_parses_back(p in homogeneous(mixed_table(), 6)) {
        prop_assert_eq!(GPolynomial::parse(p.table(), &p.to_string()).unwrap(), p);
    }
}

fn kriz_spec() -> DgaSpec {
    kriz_model(KrizParams::new(2, 3).unwrap(), 12)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]
    #[test]
    fn leibniz(
        p in homogeneous(kriz_spec().algebra().table().clone(), 5),
        q in homogeneous(kriz_spec().algebra().table().clone(), 5),
    ) {
        let spec = kriz_spec();
        let lhs = spec.d(&p.mul(&q).unwrap());
        let sign = if p.homogeneous_degree().unwrap_or(0) % 2 == 1 { -1 } else { 1 };
        let rhs = spec.d(&p).mul(&q).unwrap().add(&p.mul(&spec.d(&q)).unwrap().scale(&int(sign))).unwrap();
        prop_assert_eq!(lhs, rhs);
    }
}
