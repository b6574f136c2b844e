//! Cohomology orders against counting cocycles and coboundaries directly, and
//! algebraic laws of the differential on random cochains.

use std::collections::BTreeSet;

use proptest::prelude::*;

use catext_core::cochain::{all_cochains, bar_delta, is_cocycle, Cochain};
use catext_core::cohomology::{cohomology_group, is_coboundary};
use catext_core::{FinAbGroup, Limits};

fn grp(s: &str) -> FinAbGroup {
    s.parse().unwrap()
}

fn brute_order(g: &FinAbGroup, a: &FinAbGroup, n: usize, lim: &Limits) -> u128 {
    let z = all_cochains(g, a, n, lim).unwrap().into_iter().filter(|c| is_cocycle(c, lim).unwrap()).count();
    let b: BTreeSet<Vec<usize>> = all_cochains(g, a, n - 1, lim)
        .unwrap()
        .iter()
        .map(|c| {
            let d = bar_delta(c, lim).unwrap();
            d.free_tuples().iter().map(|t| d.get(t)).collect()
        })
        .collect();
    (z / b.len()) as u128
}

#[test]
fn orders_match_counting() {
    let lim = Limits::new(5_000_000);
    let cases = [
        ("Z/2", "Z/2", 1..=3),
        ("Z/3", "Z/3", 1..=2),
        ("Z/4", "Z/2", 1..=2),
        ("Z/2", "Z/4", 1..=3),
        ("Z/3", "Z/2", 1..=3),
        ("Z/2xZ/2", "Z/2", 1..=2),
    ];
    for (g, a, ns) in cases {
        let (g, a) = (grp(g), grp(a));
        for n in ns {
            let h = cohomology_group(&g, &a, n, &lim).unwrap();
            assert_eq!(h.order(), brute_order(&g, &a, n, &lim), "H^{n}({g}, {a})");
        }
    }
}

fn cochain_from(g: &FinAbGroup, a: &FinAbGroup, n: usize, seed: &[u32]) -> Cochain {
    let m = a.order();
    let lim = Limits::default();
    let free = Cochain::zero(g, a, n, &lim).unwrap().free_tuples();
    let mut c = Cochain::zero(g, a, n, &lim).unwrap();
    for (k, t) in free.iter().enumerate() {
        c.set(t, seed[k % seed.len()] as usize % m).unwrap();
    }
    c
}

fn groups() -> impl Strategy<Value = (&'static str, &'static str)> {
    prop::sample::select(vec![("Z/2", "Z/2"), ("Z/3", "Z/3"), ("Z/4", "Z/4"), ("Z/2xZ/2", "Z/2"), ("Z/6", "Z/3")])
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn delta_squared_vanishes((g, a) in groups(), n in 1usize..=3, seed in prop::collection::vec(any::<u32>(), 1..40)) {
        let (g, a) = (grp(g), grp(a));
        let lim = Limits::default();
        let c = cochain_from(&g, &a, n, &seed);
        let dd = bar_delta(&bar_delta(&c, &lim).unwrap(), &lim).unwrap();
        prop_assert!(dd.is_zero());
    }

    #[test]
    fn coboundaries_classify_as_zero((g, a) in groups(), n in 1usize..=2, seed in prop::collection::vec(any::<u32>(), 1..40)) {
        let (g, a) = (grp(g), grp(a));
        let lim = Limits::default();
        let d = bar_delta(&cochain_from(&g, &a, n, &seed), &lim).unwrap();
        let h = cohomology_group(&g, &a, n + 1, &lim).unwrap();
        prop_assert!(h.coordinates(&d).unwrap().iter().all(|&x| x == 0));
        let w = is_coboundary(&d, &lim).unwrap().expect("a coboundary has a primitive");
        prop_assert_eq!(bar_delta(&w, &lim).unwrap(), d);
    }

    #[test]
    fn coordinates_are_additive((g, a) in groups(), n in 1usize..=3, i in any::<prop::sample::Index>(), j in any::<prop::sample::Index>()) {
        let (g, a) = (grp(g), grp(a));
        let lim = Limits::default();
        let h = cohomology_group(&g, &a, n, &lim).unwrap();
        let all = h.all_coordinates();
        let (x, y) = (&all[i.index(all.len())], &all[j.index(all.len())]);
        let sum = h.element(x).unwrap().add(&h.element(y).unwrap()).unwrap();
        let want: Vec<i64> = x.iter().zip(y).zip(&h.invariants.0).map(|((p, q), m)| (p + q) % m).collect();
        prop_assert_eq!(h.coordinates(&sum).unwrap(), want);
    }
}
