//! Biextension invariants: commutator data from every pentagon cocycle,
//! independence of the section, stability under swap and wedge, the diagonal
//! cocycle guard, and triviality against an exhaustive search for sections.

use proptest::prelude::*;

use catext_core::biext::{
    all_sections, check_biext, commutator_biextension, diagonal_extension, interchange_defect, is_alternating, is_trivial, swap_dual,
    wedge, BiextCocycle, SkeletalMonoidalDatum,
};
use catext_core::cochain::{all_cochains, is_cocycle, Cochain};
use catext_core::{FinAbGroup, Limits};

fn pentagon_cocycles(g: &FinAbGroup, lim: &Limits) -> Vec<Cochain> {
    all_cochains(g, g, 3, lim).unwrap().into_iter().filter(|c| is_cocycle(c, lim).unwrap()).collect()
}

/// Exhaustive: does any section `G x H -> A` have this coboundary?
fn brute_trivial(e: &BiextCocycle, lim: &Limits) -> bool {
    all_sections(&e.g, &e.a, lim).unwrap().iter().any(|s| &BiextCocycle::coboundary(s, lim).unwrap() == e)
}

#[test]
fn commutators_of_all_pentagon_cocycles() {
    let lim = Limits::default();
    for n in [2, 3] {
        let g = FinAbGroup::cyclic(n);
        let cocycles = pentagon_cocycles(&g, &lim);
        assert!(!cocycles.is_empty());
        let sections = all_sections(&g, &g, &lim).unwrap();
        for a in &cocycles {
            let d = SkeletalMonoidalDatum::new(a.clone(), None, None).unwrap();
            let base = commutator_biextension(&d, &lim).unwrap();
            assert!(check_biext(&base).passed(), "Z/{n} a={a:?}");
            assert_eq!(is_trivial(&base, &lim).unwrap().is_some(), brute_trivial(&base, &lim));
            let alternating = is_alternating(&base, &lim).unwrap();
            for t in sections.iter().step_by(7) {
                let shifted = commutator_biextension(&d.with_shift(Some(t.clone())), &lim).unwrap();
                // outputs for different shifts differ by the coboundary of the shift
                assert_eq!(shifted, wedge(&base, &BiextCocycle::coboundary(t, &lim).unwrap()).unwrap());
                assert_eq!(is_trivial(&shifted, &lim).unwrap().is_some(), is_trivial(&base, &lim).unwrap().is_some());
                assert_eq!(is_alternating(&shifted, &lim).unwrap(), alternating);
            }
        }
    }
}

fn sample_biext(n: i64, a_idx: usize, t_idx: usize, lim: &Limits) -> (SkeletalMonoidalDatum, BiextCocycle) {
    let g = FinAbGroup::cyclic(n);
    let cocycles = pentagon_cocycles(&g, lim);
    let sections = all_sections(&g, &g, lim).unwrap();
    let a = cocycles[a_idx % cocycles.len()].clone();
    let t = sections[t_idx % sections.len()].clone();
    let d = SkeletalMonoidalDatum::new(a, None, Some(t)).unwrap();
    let e = commutator_biextension(&d, lim).unwrap();
    (d, e)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(40))]

    #[test]
    fn swap_and_wedge_preserve_validity(n in 2i64..=3, a1 in any::<usize>(), t1 in any::<usize>(), a2 in any::<usize>(), t2 in any::<usize>()) {
        let lim = Limits::default();
        let (_, e1) = sample_biext(n, a1, t1, &lim);
        let (_, e2) = sample_biext(n, a2, t2, &lim);
        prop_assert!(check_biext(&swap_dual(&e1, &lim).unwrap()).passed());
        prop_assert!(check_biext(&wedge(&e1, &e2).unwrap()).passed());
        prop_assert_eq!(swap_dual(&swap_dual(&e1, &lim).unwrap(), &lim).unwrap(), e1);
    }

    #[test]
    fn diagonal_is_a_cocycle_when_defined(n in 2i64..=3, a in any::<usize>(), t in any::<usize>()) {
        let lim = Limits::default();
        let (_, e) = sample_biext(n, a, t, &lim);
        let c = diagonal_extension(&e, &lim).unwrap();
        prop_assert!(is_cocycle(&c, &lim).unwrap());
    }

    #[test]
    fn interchange_holds_for_pentagon_cocycles(a in any::<usize>(), v in prop::collection::vec(0usize..3, 8)) {
        let lim = Limits::default();
        let (d, _) = sample_biext(3, a, 0, &lim);
        prop_assert_eq!(interchange_defect(&d, v[0], v[1], v[2], v[3], v[4], v[5], v[6], v[7]), 0);
    }
}
