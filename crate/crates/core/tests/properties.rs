//! Randomized laws: closure, generation, lattice, constructions.

mod common;

use common::*;
use connspace::constructions::{
    is_morphism, pullback, pushforward, quotient, subspace, tensor, PointMap,
};
use connspace::pointed::{pointed_isomorphism, smash, wedge, wedge_via_tensor};
use connspace::{
    generate, irreducibles, phi, structure_join, structure_meet, validate, ConnSpace, GroundSet,
    Partition, PointedConnSpace, Subset, SubsetFamily,
};
use proptest::prelude::*;

fn family_on(n: usize, max_sets: usize) -> impl Strategy<Value = SubsetFamily> {
    let full = if n == 0 { 0 } else { (1u64 << n) - 1 };
    prop::collection::vec(0..=full, 0..=max_sets)
        .prop_map(|bits| bits.into_iter().map(Subset::from_bits).collect())
}

fn sized_family(max_n: usize, max_sets: usize) -> impl Strategy<Value = (usize, SubsetFamily)> {
    (0..=max_n).prop_flat_map(move |n| (Just(n), family_on(n, max_sets)))
}

fn integral_space(max_n: usize) -> impl Strategy<Value = ConnSpace> {
    sized_family(max_n, 5)
        .prop_map(|(n, gens)| generate(&GroundSet::new(n), &gens, true).unwrap())
}

fn space_on(n: usize, integral: bool) -> impl Strategy<Value = ConnSpace> {
    family_on(n, 5).prop_map(move |gens| generate(&GroundSet::new(n), &gens, integral).unwrap())
}

fn map_between(n: usize, m: usize) -> impl Strategy<Value = PointMap> {
    prop::collection::vec(0..m.max(1), n)
        .prop_map(move |t| PointMap::new(n, m, t).unwrap())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn generated_structures_are_union_closed(sp in integral_space(7)) {
        let members = sp.structure().members();
        for &a in members {
            for &b in members {
                if a.intersects(b) {
                    prop_assert!(sp.is_connected_subset(a | b));
                }
            }
        }
        prop_assert!(validate(sp.ground(), sp.structure(), true).is_ok());
    }

    #[test]
    fn unions_of_families_through_a_point_are_members(
        sp in integral_space(7),
        picks in prop::collection::vec(any::<prop::sample::Index>(), 1..6),
    ) {
        prop_assume!(sp.size() > 0);
        let x = picks[0].index(sp.size());
        let through: Vec<Subset> = sp.structure().iter().copied().filter(|k| k.contains(x)).collect();
        let union = picks.iter().fold(Subset::EMPTY, |acc, i| acc | through[i.index(through.len())]);
        prop_assert!(sp.is_connected_subset(union));
    }

    #[test]
    fn components_partition_the_structure(sp in integral_space(7)) {
        let comps = sp.connected_components().unwrap();
        prop_assert_eq!(&comps, &oracle_components(&sp));
        for (i, &a) in comps.iter().enumerate() {
            prop_assert!(sp.is_connected_subset(a));
            for &b in &comps[i + 1..] {
                prop_assert!(!a.intersects(b));
            }
        }
        for &k in sp.structure().iter().filter(|k| !k.is_empty()) {
            prop_assert_eq!(comps.iter().filter(|c| k.is_subset_of(**c)).count(), 1);
        }
    }

    #[test]
    fn phi_is_extensive_and_monotone((n, u) in sized_family(6, 5), extra in family_on(6, 3)) {
        let g = GroundSet::new(n);
        let extra: SubsetFamily = extra.iter().filter(|k| k.fits(n)).copied().collect();
        let v = u.union(&extra);
        let pu = phi(&g, &u).unwrap();
        prop_assert!(u.is_subfamily_of(&pu));
        prop_assert!(pu.is_subfamily_of(&phi(&g, &v).unwrap()));
    }

    #[test]
    fn phi_fixes_exactly_the_structures((n, u) in sized_family(5, 5)) {
        let g = GroundSet::new(n);
        let mut with_empty = u.clone();
        with_empty.insert(Subset::EMPTY);
        let fixed = phi(&g, &with_empty).unwrap() == with_empty;
        prop_assert_eq!(fixed, validate(&g, &with_empty, false).is_ok());
        let sp = generate(&g, &u, false).unwrap();
        prop_assert_eq!(&phi(&g, sp.structure()).unwrap(), sp.structure());
    }

    #[test]
    fn generate_is_a_closure_operator((n, a) in sized_family(6, 5), extra in family_on(6, 3)) {
        let g = GroundSet::new(n);
        for integral in [false, true] {
            let ga = generate(&g, &a, integral).unwrap();
            prop_assert!(a.is_subfamily_of(ga.structure()));
            prop_assert_eq!(&generate(&g, ga.structure(), integral).unwrap(), &ga);
            let b = a.union(&extra.iter().filter(|k| k.fits(n)).copied().collect());
            prop_assert!(ga.structure().is_subfamily_of(generate(&g, &b, integral).unwrap().structure()));
        }
    }

    #[test]
    fn lattice_bounds((n, a) in sized_family(5, 4), b in family_on(5, 4)) {
        let g = GroundSet::new(n);
        let b: SubsetFamily = b.iter().filter(|k| k.fits(n)).copied().collect();
        let (x, y) = (generate(&g, &a, true).unwrap(), generate(&g, &b, true).unwrap());
        let meet = structure_meet(&x, &y).unwrap();
        let join = structure_join(&x, &y).unwrap();
        prop_assert!(validate(&g, meet.structure(), true).is_ok());
        prop_assert!(meet.structure().is_subfamily_of(x.structure()));
        prop_assert!(meet.structure().is_subfamily_of(y.structure()));
        prop_assert!(x.structure().is_subfamily_of(join.structure()));
        prop_assert!(y.structure().is_subfamily_of(join.structure()));
    }

    #[test]
    fn irreducibles_generate_the_space(sp in integral_space(7)) {
        let gens = irreducibles(&sp);
        prop_assert_eq!(&generate(sp.ground(), &gens, true).unwrap(), &sp);
    }

    #[test]
    fn pullbacks_are_structures(
        (y, f) in (0usize..5, 1usize..5).prop_flat_map(|(n, m)| (space_on(m, true), map_between(n, m)))
    ) {
        let pulled = pullback(&f, &y).unwrap();
        prop_assert!(validate(pulled.ground(), pulled.structure(), true).is_ok());
        prop_assert!(is_morphism(&f, &pulled, &y).unwrap());
    }

    #[test]
    fn pushforward_of_generated_is_generated_by_images(
        (a, f) in (0usize..6, 1usize..6).prop_flat_map(|(n, m)| (family_on(n, 4), map_between(n, m))),
        integral in any::<bool>(),
    ) {
        let x = generate(&GroundSet::new(f.source()), &a, integral).unwrap();
        let images: SubsetFamily = a.iter().map(|&k| f.image(k)).collect();
        let direct = generate(&GroundSet::new(f.target()), &images, integral).unwrap();
        prop_assert_eq!(&pushforward(&f, &x).unwrap(), &direct);
        prop_assert!(is_morphism(&f, &x, &direct).unwrap());
    }

    #[test]
    fn tensor_is_finer_than_product(x in integral_space(3), y in integral_space(3)) {
        let t = tensor(&x, &y).unwrap();
        let p = connspace::constructions::product(&x, &y).unwrap();
        prop_assert!(t.structure().is_subfamily_of(p.structure()));
    }

    #[test]
    fn quotient_map_is_a_morphism(
        sp in integral_space(6),
        labels in prop::collection::vec(0usize..3, 6),
    ) {
        let n = sp.size();
        prop_assume!(n > 0);
        let groups: Vec<Subset> = (0..3)
            .map(|c| Subset::from_points((0..n).filter(|&p| labels[p] == c)))
            .filter(|g| !g.is_empty())
            .collect();
        let part = Partition::new(n, groups).unwrap();
        let q = quotient(&sp, &part).unwrap();
        prop_assert!(is_morphism(&part.assignment(), &sp, &q).unwrap());
    }

    #[test]
    fn subspace_inclusion_is_a_morphism(sp in integral_space(6), bits in any::<u64>()) {
        let keep = Subset::from_bits(bits) & Subset::full(sp.size());
        let sub = subspace(&sp, keep).unwrap();
        let inc = connspace::constructions::inclusion(sp.size(), keep);
        prop_assert!(is_morphism(&inc, &sub, &sp).unwrap());
    }

    #[test]
    fn permuted_spaces_are_isomorphic(sp in integral_space(6), seed in any::<u64>()) {
        use rand::{seq::SliceRandom, SeedableRng};
        let mut rng = rand::rngs::StdRng::seed_from_u64(seed);
        let mut perm: Vec<usize> = (0..sp.size()).collect();
        perm.shuffle(&mut rng);
        let moved = sp.permuted(&perm);
        let found = connspace::is_isomorphic(&sp, &moved).unwrap().unwrap();
        prop_assert_eq!(sp.structure().map(&found), moved.structure().clone());
        prop_assert!(connspace::is_isomorphic(&moved, &sp).unwrap().is_some());
        prop_assert_eq!(
            connspace::canonical_form(&sp).unwrap(),
            connspace::canonical_form(&moved).unwrap()
        );
    }

    #[test]
    fn smash_is_symmetric(
        (x, bx) in (1usize..4).prop_flat_map(|n| (space_on(n, true), 0..n)),
        (y, by) in (1usize..4).prop_flat_map(|n| (space_on(n, true), 0..n)),
    ) {
        let px = PointedConnSpace::new(x, bx).unwrap();
        let py = PointedConnSpace::new(y, by).unwrap();
        let a = smash(&px, &py).unwrap().space;
        let b = smash(&py, &px).unwrap().space;
        prop_assert!(pointed_isomorphism(&a, &b).unwrap().is_some());
        prop_assert_eq!(a.size(), px.size() * py.size() + 2 - px.size() - py.size());
        let w = wedge(&px, &py).unwrap();
        prop_assert_eq!(w.size(), px.size() + py.size() - 1);
        prop_assert!(pointed_isomorphism(&w, &wedge_via_tensor(&px, &py).unwrap()).unwrap().is_some());
    }
}
