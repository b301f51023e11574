use cpstrata_core::lattice::{
    anticanonical, area, enumerate_exceptional, intersection, is_exceptional_numerical,
    matches_negative_curve_shape, negative_wall_classes, Capacities, H2Element,
};
use cpstrata_core::rational::frac;
use proptest::prelude::*;
use std::collections::BTreeSet;

/// Straight nested-loop search, written independently of the library.
fn oracle_exceptional(n: usize) -> BTreeSet<(i64, Vec<i64>)> {
    let mut out = BTreeSet::new();
    let mut r = vec![-1i64; n];
    loop {
        let sq: i64 = r.iter().map(|x| x * x).sum();
        let sum: i64 = r.iter().sum();
        for a in 0..=6i64 {
            if a * a - sq == -1 && 3 * a - sum == 1 {
                out.insert((a, r.clone()));
            }
        }
        let mut i = 0;
        loop {
            if i == n {
                return out;
            }
            if r[i] < 3 {
                r[i] += 1;
                break;
            }
            r[i] = -1;
            i += 1;
        }
    }
}

fn as_set(v: &[H2Element]) -> BTreeSet<(i64, Vec<i64>)> {
    v.iter().map(|u| (u.degree(), u.multiplicities().to_vec())).collect()
}

#[test]
fn exceptional_counts_match_oracle() {
    let expected = [1, 3, 6, 10, 16, 27, 56, 240];
    for n in 1..=8 {
        let got = enumerate_exceptional(n).unwrap();
        assert_eq!(got.len(), expected[n - 1], "n = {n}");
        assert_eq!(as_set(&got), oracle_exceptional(n), "n = {n}");
        let mut sorted = got.clone();
        sorted.sort();
        assert_eq!(sorted, got, "deterministic lexicographic order");
        for u in &got {
            assert!(is_exceptional_numerical(u));
            let is_e = u.degree() == 0;
            assert!(is_e || matches_negative_curve_shape(u), "{u} has no known shape");
        }
    }
}

#[test]
fn wall_inventory() {
    let n3: Vec<String> = negative_wall_classes(3).unwrap().iter().map(|u| u.to_string()).collect();
    assert_eq!(n3, vec!["L - E1 - E2 - E3"]);
    let n4 = negative_wall_classes(4).unwrap();
    let want: BTreeSet<H2Element> = [
        H2Element::line_through(4, &[2, 3, 4]),
        H2Element::line_through(4, &[1, 3, 4]),
        H2Element::line_through(4, &[1, 2, 4]),
        H2Element::line_through(4, &[1, 2, 3]),
        H2Element::line_through(4, &[1, 2, 3, 4]),
    ]
    .into_iter()
    .collect();
    assert_eq!(n4.iter().cloned().collect::<BTreeSet<_>>(), want);
    assert_eq!(negative_wall_classes(5).unwrap().len(), 16);
}

#[test]
fn walls_and_exceptionals_are_disjoint() {
    for n in 1..=8 {
        let e: BTreeSet<_> = enumerate_exceptional(n).unwrap().into_iter().collect();
        for w in negative_wall_classes(n).unwrap() {
            assert!(!e.contains(&w), "{w}");
            assert!(w.self_intersection() <= -2);
        }
    }
}

#[test]
fn small_balls_see_positive_exceptional_areas() {
    for n in 1..=8 {
        let c = Capacities::new(vec![frac(1, 100); n]).unwrap();
        for e in enumerate_exceptional(n).unwrap() {
            assert!(area(&c, &e).unwrap() > frac(0, 1), "{e}");
        }
    }
}

#[test]
fn padding_is_monotone() {
    for n in 1..8 {
        let next: BTreeSet<_> = enumerate_exceptional(n + 1).unwrap().into_iter().collect();
        for u in enumerate_exceptional(n).unwrap() {
            assert!(next.contains(&u.padded(n + 1)), "{u}");
        }
    }
}

#[test]
fn spec_examples() {
    let l12 = H2Element::line_through(2, &[1, 2]);
    assert_eq!(intersection(&l12, &l12).unwrap(), -1);
    let l123 = H2Element::line_through(3, &[1, 2, 3]);
    assert_eq!(intersection(&l123, &l123).unwrap(), -2);
    assert_eq!(intersection(&anticanonical(3).unwrap(), &H2Element::line_through(3, &[1, 2])).unwrap(), 1);
    assert!(anticanonical(9).is_err());
    assert!(intersection(&l12, &l123).is_err());
    assert_eq!(area(&"1/3,1/3,1/3".parse().unwrap(), &l123).unwrap(), frac(0, 1));
    assert_eq!(area(&"1/2,1/4".parse().unwrap(), &l12).unwrap(), frac(1, 4));
    let l1234 = H2Element::line_through(4, &[1, 2, 3, 4]);
    assert_eq!(area(&"2/5,2/5,1/5,1/10".parse().unwrap(), &l1234).unwrap(), frac(-1, 10));
}

fn element(n: usize) -> impl Strategy<Value = H2Element> {
    (-5i64..6, prop::collection::vec(-4i64..5, n)).prop_map(|(a, r)| H2Element::new(a, r).unwrap())
}

proptest! {
    #[test]
    fn bilinear(
        (u, v, w) in (1usize..9).prop_flat_map(|n| (element(n), element(n), element(n))),
        s in -3i64..4,
        t in -3i64..4,
    ) {
        let lhs = intersection(&u.scaled_add(s, &v, t).unwrap(), &w).unwrap();
        prop_assert_eq!(lhs, s * intersection(&u, &w).unwrap() + t * intersection(&v, &w).unwrap());
        prop_assert_eq!(intersection(&u, &v).unwrap(), intersection(&v, &u).unwrap());
    }

    #[test]
    fn text_round_trip(u in (1usize..9).prop_flat_map(element)) {
        prop_assert_eq!(H2Element::parse(&u.to_string(), u.n()).unwrap(), u);
    }
}
