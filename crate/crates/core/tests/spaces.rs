use std::collections::BTreeMap;

use polycap_core::abelian::arith::gcd;
use polycap_core::{
    capacity_of, default_max_dim, homology_of, parse_expression, unitary_divisor_products,
    zn_bound, AbelianGroup, CapacityKind, CapacityResult, Error, GroupDescriptor,
    SpaceDescriptor,
};
use proptest::prelude::*;

fn arb_group() -> impl Strategy<Value = AbelianGroup> {
    (0u32..=2, prop::collection::vec(prop::sample::select(vec![2u64, 3, 4, 5, 6, 8, 9, 12]), 0..=3))
        .prop_map(|(free, orders)| AbelianGroup::from_cyclic_orders(free, &orders))
        .prop_filter("nontrivial", |g| !g.is_trivial())
}

fn arb_descriptor() -> impl Strategy<Value = SpaceDescriptor> {
    use SpaceDescriptor::*;
    prop_oneof![
        Just(Point),
        (1u32..=8).prop_map(Sphere),
        prop::collection::btree_map(1u32..=6, 1u32..=3, 0..=3).prop_map(WedgeOfSpheres),
        (arb_group(), 2u32..=6).prop_map(|(group, degree)| MooreSpace { group, degree }),
        (arb_group(), 1u32..=4).prop_map(|(group, degree)| EilenbergMacLane { group, degree }),
        (1u32..=7, 1u32..=7).prop_map(|(n, m)| ProductOfSpheres(n, m)),
        (1u64..=24, 0u64..=60)
            .prop_filter("coprime", |&(p, q)| gcd(p, q) == 1)
            .prop_map(|(p, q)| LensSpace { p, q }),
        (1u32..=9).prop_map(RealProjective),
        (any::<bool>(), 0u32..=6)
            .prop_filter("genus", |&(o, g)| o || g >= 1)
            .prop_map(|(orientable, genus)| Surface { orientable, genus }),
        (1u64..=400, 0u32..=3).prop_map(|(n, h2_rank)| ZnComplex { n, h2_rank }),
        (2u64..=400).prop_map(PseudoProjectivePlane),
        (0u32..=3, 0u32..=3).prop_map(|(pi1_rank, h2_rank)| FreePi1Complex { pi1_rank, h2_rank }),
    ]
}

/// `H_i(Y)` is a direct summand of `H_i(X)` in every degree through the top
/// degree of `X`, whenever both tables are available.
fn summand_condition(x: &SpaceDescriptor, y: &SpaceDescriptor) -> Option<Result<(), String>> {
    let top = default_max_dim(x).ok()?;
    let hx = homology_of(x, top).ok()?;
    let hy = homology_of(y, top).ok()?;
    for i in 0..=top {
        if !hy.get(i).is_summand_of(&hx.get(i)) {
            return Some(Err(format!("H_{i}({y}) = {} vs H_{i}({x}) = {}", hy.get(i), hx.get(i))));
        }
    }
    Some(Ok(()))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(600))]

    #[test]
    fn normalize_is_idempotent(d in arb_descriptor()) {
        let n = d.normalize().unwrap();
        prop_assert_eq!(n.normalize().unwrap(), n.clone());
        prop_assert!(n.is_normalized());
        prop_assert!(d.descriptor_equal(&n).unwrap());
    }

    #[test]
    fn normalize_preserves_invariants(d in arb_descriptor()) {
        let n = d.normalize().unwrap();
        prop_assert_eq!(capacity_of(&d).unwrap(), capacity_of(&n).unwrap());
        prop_assert_eq!(d.fundamental_group().unwrap(), n.fundamental_group().unwrap());
        if let Ok(top) = default_max_dim(&d) {
            let hd = homology_of(&d, top + 1);
            let hn = homology_of(&n, top + 1);
            prop_assert_eq!(hd, hn);
        }
    }

    #[test]
    fn display_parses_back(d in arb_descriptor()) {
        let n = d.normalize().unwrap();
        let text = n.to_string();
        prop_assert_eq!(parse_expression(&text).unwrap(), n);
    }

    #[test]
    fn exact_lists_are_well_formed(d in arb_descriptor()) {
        let r = capacity_of(&d).unwrap();
        if let CapacityResult::Exact(list) = &r {
            prop_assert_eq!(r.value(), list.len() as u64);
            prop_assert!(list.contains(&SpaceDescriptor::Point));
            prop_assert!(list.contains(&d.normalize().unwrap()));
            prop_assert!(list.windows(2).all(|w| w[0] < w[1]));
            for y in list {
                prop_assert!(y.is_normalized());
            }
        }
    }

    #[test]
    fn dominated_homology_is_a_summand(d in arb_descriptor()) {
        let n = d.normalize().unwrap();
        if let Some(list) = capacity_of(&n).unwrap().dominated() {
            for y in list {
                if let Some(check) = summand_condition(&n, y) {
                    prop_assert!(check.is_ok(), "{}", check.unwrap_err());
                }
            }
        }
    }
}

#[test]
fn summand_condition_on_fixed_cases() {
    for expr in ["S2 x S3", "S1 x S1", "M(Z/4 + Z/2, 3)", "S2*2 v S5", "L(7,2)", "RP6", "ZC(360;3)"] {
        let x = parse_expression(expr).unwrap().normalize().unwrap();
        for y in capacity_of(&x).unwrap().dominated().unwrap() {
            assert_eq!(summand_condition(&x, y), Some(Ok(())), "{expr} -> {y}");
        }
    }
}

#[test]
fn zn_candidates() {
    for n in [2u64, 6, 12, 30, 360, 97, 1024] {
        let units = unitary_divisor_products(n).products;
        for r in [0u32, 1, 3] {
            let d = SpaceDescriptor::ZnComplex { n, h2_rank: r };
            let result = capacity_of(&d).unwrap();
            assert_eq!(result.kind(), CapacityKind::UpperBound);
            assert_eq!(result.value(), zn_bound(n, r));
            let zn = AbelianGroup::cyclic(n);
            for y in result.dominated().unwrap() {
                let pi1 = match y.fundamental_group().unwrap() {
                    GroupDescriptor::Trivial => AbelianGroup::zero(),
                    GroupDescriptor::Abelian(a) => a,
                    other => panic!("unexpected {other}"),
                };
                let order = u64::try_from(pi1.order().unwrap()).unwrap();
                assert!(units.contains(&order));
                assert!(pi1.is_summand_of(&zn));
            }
        }
    }
}

#[test]
fn cross_family_equalities() {
    let cap = |s: &str| capacity_of(&parse_expression(s).unwrap()).unwrap().value();
    assert_eq!(cap("Sg(1)"), 3);
    assert_eq!(cap("S1 x S1"), 3);
    assert_eq!(cap("Ng(1)"), cap("RP2"));
    assert_eq!(cap("RP2"), 2);
    for k in 1..=5u32 {
        for n in 2..=5u32 {
            let moore = SpaceDescriptor::MooreSpace { group: AbelianGroup::free(k), degree: n };
            let wedge = SpaceDescriptor::WedgeOfSpheres(BTreeMap::from([(n, k)]));
            assert_eq!(capacity_of(&moore).unwrap().value(), k as u64 + 1);
            assert_eq!(capacity_of(&moore).unwrap(), capacity_of(&wedge).unwrap());
        }
    }
    assert_eq!(cap("K(Z, 1)"), 2);
    assert_eq!(capacity_of(&parse_expression("K(Z, 1)").unwrap()).unwrap(),
        capacity_of(&SpaceDescriptor::Sphere(1)).unwrap());
}

#[test]
fn surface_counts() {
    for g in 0..=5u32 {
        let d = SpaceDescriptor::Surface { orientable: true, genus: g };
        assert_eq!(capacity_of(&d).unwrap().value(), g as u64 + 2);
    }
    for g in 1..=6u32 {
        let d = SpaceDescriptor::Surface { orientable: false, genus: g };
        assert_eq!(capacity_of(&d).unwrap().value(), (g / 2) as u64 + 2);
    }
}

#[test]
fn invalid_descriptors() {
    for text in ["L(4,2)", "S0", "M(Z/2, 1)", "Ng(0)", "P(1)", "S2 x S3 x S4", "RP2 v S2", "K(0, 2)"] {
        let err = parse_expression(text).unwrap_err();
        assert!(
            matches!(err, Error::InvalidDescriptor(_) | Error::InvalidGroup(_)),
            "{text}: {err:?}"
        );
    }
}
