//! Randomized structural laws. Matroids are drawn as random presentations
//! and their duals, so both the transversal and cotransversal sides get
//! exercised; each law here is something the rest of the crate silently
//! relies on.

use matroid_core::constructions::{block_swap, free_product};
use matroid_core::cyclic::{cyclic_flats, EnumOptions};
use matroid_core::fundamental::is_fundamental;
use matroid_core::mason::{alpha, beta};
use matroid_core::transversal::{
    complete_presentation, delta_of_set, is_transversal, maximal_presentation,
    phi_from_presentation, verify_phi, PhiMode,
};
use matroid_core::{Matroid, SetSystem, Subset};
use proptest::prelude::*;

fn arb_system_sized(max_n: usize, max_cols: usize) -> impl Strategy<Value = SetSystem> {
    (1..=max_n).prop_flat_map(move |n| {
        proptest::collection::vec(0u32..(1u32 << n), 0..=max_cols).prop_map(move |cols| {
            SetSystem::new(n, cols.into_iter().map(Subset).collect()).unwrap()
        })
    })
}

fn arb_system() -> impl Strategy<Value = SetSystem> {
    arb_system_sized(7, 4)
}

fn arb_transversal() -> impl Strategy<Value = Matroid> {
    arb_system().prop_map(|s| Matroid::from_presentation(&s).unwrap())
}

fn arb_matroid() -> impl Strategy<Value = Matroid> {
    (arb_transversal(), proptest::bool::ANY)
        .prop_map(|(m, flip)| if flip { m.dual() } else { m })
}

fn arb_small_matroid() -> impl Strategy<Value = Matroid> {
    (arb_system_sized(4, 3), proptest::bool::ANY)
        .prop_map(|(s, flip)| {
            let m = Matroid::from_presentation(&s).unwrap();
            if flip {
                m.dual()
            } else {
                m
            }
        })
}

proptest! {
    #[test]
    fn closure_laws(m in arb_matroid()) {
        for mask in 0u32..1 << m.n() {
            let x = Subset(mask);
            let c = m.closure(x);
            prop_assert!(x.is_subset_of(c));
            prop_assert_eq!(m.rank(c), m.rank(x));
            prop_assert_eq!(m.closure(c), c);
            prop_assert!(m.is_flat(c));
        }
    }

    #[test]
    fn restriction_commutes_with_presentation(s in arb_system(), raw in any::<u32>()) {
        let m = Matroid::from_presentation(&s).unwrap();
        let x = Subset(raw & Subset::full(s.n()).bits());
        let direct = Matroid::from_presentation(&s.restricted_to(x)).unwrap();
        prop_assert_eq!(m.restrict(x), direct);
    }

    #[test]
    fn dual_is_an_involution(m in arb_matroid()) {
        let d = m.dual();
        prop_assert_eq!(d.dual(), m.clone());
        prop_assert_eq!(d.loops(), m.coloops());
        prop_assert_eq!(d.coloops(), m.loops());
    }

    #[test]
    fn dual_cyclic_flats_are_complements(m in arb_matroid()) {
        let mut expected: Vec<Subset> =
            cyclic_flats(&m).flats().iter().map(|&f| f.complement_in(m.n())).collect();
        expected.sort_unstable_by_key(|f| (f.card(), f.bits()));
        prop_assert_eq!(cyclic_flats(&m.dual()).flats().to_vec(), expected);
    }

    #[test]
    fn completion_reaches_cyclic_flat_complements(s in arb_system()) {
        let m = Matroid::from_presentation(&s).unwrap();
        let done = complete_presentation(&m, &s).unwrap();
        prop_assert_eq!(Matroid::from_presentation(&done).unwrap(), m.clone());
        let z = cyclic_flats(&m);
        for &col in done.columns() {
            prop_assert!(z.contains(col.complement_in(m.n())));
        }
    }

    #[test]
    fn maximal_presentation_and_phi(m in arb_transversal()) {
        let a = maximal_presentation(&m).unwrap();
        prop_assert_eq!(Matroid::from_presentation(&a).unwrap(), m.clone());
        prop_assert_eq!(a.len(), m.full_rank());
        let z = cyclic_flats(&m);
        let phi = phi_from_presentation(&m, &a, &z).unwrap();
        let ok = verify_phi(&m, &z, &phi, PhiMode::Transversal, &EnumOptions::default()).unwrap();
        prop_assert!(ok.holds);
    }

    #[test]
    fn beta_recursion_holds_everywhere(m in arb_matroid()) {
        let b = beta(&m);
        let z = b.zlattice();
        let r = m.full_rank() as i64;
        let total: i64 = z.flats().iter().map(|&f| b.value(f)).sum();
        prop_assert_eq!(total, r);
        // the table is filled by a subset-sum transform; recompute naively
        for mask in 0u32..1 << m.n() {
            let x = Subset(mask);
            let above: i64 = z
                .flats()
                .iter()
                .filter(|&&y| x.is_proper_subset_of(y))
                .map(|&y| b.value(y))
                .sum();
            prop_assert_eq!(b.value(x), r - m.rank(x) as i64 - above);
        }
    }

    #[test]
    fn alpha_is_beta_of_the_dual(m in arb_matroid()) {
        let a = alpha(&m).unwrap();
        let bd = beta(&m.dual());
        for mask in 0u32..1 << m.n() {
            let x = Subset(mask);
            prop_assert_eq!(a.value(x), bd.value(x.complement_in(m.n())));
        }
    }

    #[test]
    fn alpha_sign_decides_the_dual(m in arb_matroid()) {
        let a = alpha(&m).unwrap();
        let nonneg = (0u32..1 << m.n()).all(|mask| a.value(Subset(mask)) >= 0);
        prop_assert_eq!(nonneg, is_transversal(&m.dual()).transversal);
    }

    #[test]
    fn fundamentality_is_self_dual(m in arb_matroid()) {
        let here = is_fundamental(&m).unwrap().fundamental;
        let there = is_fundamental(&m.dual()).unwrap().fundamental;
        prop_assert_eq!(here, there);
    }

    #[test]
    fn circuit_faces_survive_deleting_a_point(s in arb_system()) {
        let m = Matroid::from_presentation(&s).unwrap();
        for c in m.circuits() {
            let whole = delta_of_set(&s, c);
            for x in c.elements() {
                prop_assert_eq!(delta_of_set(&s, c.without(x)), whole);
            }
        }
    }

    #[test]
    fn fundamental_basis_counts_every_lattice_rank(m in arb_transversal()) {
        let v = is_fundamental(&m).unwrap();
        if let Some(b) = v.basis {
            let z = cyclic_flats(&m);
            z.for_each_antichain(&EnumOptions::default(), |idx| {
                let union = idx.iter().fold(Subset::EMPTY, |acc, &i| acc.union(z.flat(i)));
                let inter = idx.iter().fold(m.ground(), |acc, &i| acc.intersect(z.flat(i)));
                assert_eq!(b.intersect(union).card(), m.rank(union));
                assert_eq!(b.intersect(inter).card(), m.rank(inter));
                true
            }).unwrap();
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn free_product_minors_and_dual(m in arb_small_matroid(), n in arb_small_matroid()) {
        let p = free_product(&m, &n).unwrap();
        let front = Subset::full(m.n());
        prop_assert_eq!(p.restrict(front), m.clone());
        prop_assert_eq!(p.contract(front), n.clone());
        let swapped = block_swap(&p.dual(), m.n()).unwrap();
        prop_assert_eq!(swapped, free_product(&n.dual(), &m.dual()).unwrap());
    }

    #[test]
    fn free_product_lattice_rule(m in arb_small_matroid(), n in arb_small_matroid()) {
        let p = free_product(&m, &n).unwrap();
        let em = Subset::full(m.n());
        let zm = cyclic_flats(&m);
        let zn = cyclic_flats(&n);
        let mut expected: Vec<Subset> = Vec::new();
        for &f in zm.flats() {
            if f != em {
                expected.push(f);
            }
        }
        for &g in zn.flats() {
            if !g.is_empty() {
                expected.push(Subset(em.bits() | (g.bits() << m.n())));
            }
        }
        if zm.contains(em) && zn.contains(Subset::EMPTY) {
            expected.push(em);
        }
        expected.sort_unstable_by_key(|f| (f.card(), f.bits()));
        prop_assert_eq!(cyclic_flats(&p).flats().to_vec(), expected);
    }

    #[test]
    fn free_product_preserves_the_four_classes(m in arb_small_matroid(), n in arb_small_matroid()) {
        let p = free_product(&m, &n).unwrap();
        let both_t = is_transversal(&m).transversal && is_transversal(&n).transversal;
        prop_assert_eq!(is_transversal(&p).transversal, both_t);
        let both_c =
            is_transversal(&m.dual()).transversal && is_transversal(&n.dual()).transversal;
        prop_assert_eq!(is_transversal(&p.dual()).transversal, both_c);
        let both_f =
            is_fundamental(&m).unwrap().fundamental && is_fundamental(&n).unwrap().fundamental;
        prop_assert_eq!(is_fundamental(&p).unwrap().fundamental, both_f);
    }
}
