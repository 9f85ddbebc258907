//! Property tests for the algebraic invariants of the engine: ring axioms,
//! grading, Whitney quotient inversion, dual behavior, the main identity
//! between the three routes to the zero-dimensional class, stratified
//! additivity, and the measure homomorphisms.

use std::collections::BTreeMap;
use std::sync::Arc;

use proptest::prelude::*;

use prochern::{AmbientSpace, ChowClass, DivisorArrangement, GWElement, SpaceExpression, TotalChernClass};

/// Largest monomial basis among the test ambients.
const MAX_COEFFS: usize = 16;

fn product_ambients() -> Vec<Arc<AmbientSpace>> {
    vec![
        AmbientSpace::product(&[1]).unwrap(),
        AmbientSpace::product(&[2]).unwrap(),
        AmbientSpace::product(&[3]).unwrap(),
        AmbientSpace::product(&[1, 1]).unwrap(),
        AmbientSpace::product(&[1, 2]).unwrap(),
        AmbientSpace::product(&[1, 1, 1]).unwrap(),
    ]
}

fn surface_ambients() -> Vec<Arc<AmbientSpace>> {
    let p2 = AmbientSpace::product(&[2]).unwrap().to_surface().unwrap();
    let (bl, _) = p2.blow_up("E").unwrap();
    let (bl2, _) = bl.blow_up("F").unwrap();
    let quadric = AmbientSpace::product(&[1, 1])
        .unwrap()
        .to_surface()
        .unwrap();
    vec![p2, bl, bl2, quadric]
}

fn all_ambients() -> Vec<Arc<AmbientSpace>> {
    let mut v = product_ambients();
    v.extend(surface_ambients());
    v
}

/// Build a class from a flat coefficient seed, independent of how many
/// coefficients the ambient actually needs.
fn class_from_seed(ambient: &Arc<AmbientSpace>, seed: &[i64]) -> ChowClass {
    if let Some(factors) = ambient.factors() {
        let mut acc = ambient.zero();
        let mut idx = 0usize;
        let mut exps = vec![0u32; factors.len()];
        loop {
            acc = acc
                .add(&ambient.monomial(&exps, seed[idx % seed.len()]).unwrap())
                .unwrap();
            idx += 1;
            // advance the exponent counter
            let mut i = factors.len();
            loop {
                if i == 0 {
                    return acc;
                }
                i -= 1;
                if exps[i] < factors[i] {
                    exps[i] += 1;
                    break;
                }
                exps[i] = 0;
            }
        }
    } else {
        let rank = ambient.surface_lattice().unwrap().rank();
        let a1: Vec<i64> = (0..rank).map(|i| seed[(i + 1) % seed.len()]).collect();
        ambient
            .surface_class(seed[0], &a1, seed[(rank + 1) % seed.len()])
            .unwrap()
    }
}

fn unit_series_from_seed(ambient: &Arc<AmbientSpace>, seed: &[i64]) -> TotalChernClass {
    let raw = class_from_seed(ambient, seed);
    let above = raw.sub(&raw.graded_piece(0)).unwrap();
    TotalChernClass::new(ambient.one().add(&above).unwrap()).unwrap()
}

fn coeffs() -> impl Strategy<Value = Vec<i64>> {
    proptest::collection::vec(-9i64..=9, MAX_COEFFS)
}

/// Independent multiplication oracle for product ambients: convolution of
/// exponent-indexed maps, dropping any exponent beyond its factor bound.
fn oracle_mul(
    factors: &[u32],
    a: &BTreeMap<Vec<u32>, i64>,
    b: &BTreeMap<Vec<u32>, i64>,
) -> BTreeMap<Vec<u32>, i64> {
    let mut out = BTreeMap::new();
    for (ea, ca) in a {
        for (eb, cb) in b {
            let exps: Vec<u32> = ea.iter().zip(eb).map(|(x, y)| x + y).collect();
            if exps.iter().zip(factors).any(|(&e, &n)| e > n) {
                continue;
            }
            *out.entry(exps).or_insert(0) += ca * cb;
        }
    }
    out.retain(|_, c| *c != 0);
    out
}

fn to_map(factors: &[u32], seed: &[i64]) -> BTreeMap<Vec<u32>, i64> {
    let mut out = BTreeMap::new();
    let mut exps = vec![0u32; factors.len()];
    let mut idx = 0usize;
    loop {
        if seed[idx % seed.len()] != 0 {
            out.insert(exps.clone(), seed[idx % seed.len()]);
        }
        idx += 1;
        let mut i = factors.len();
        loop {
            if i == 0 {
                return out;
            }
            i -= 1;
            if exps[i] < factors[i] {
                exps[i] += 1;
                break;
            }
            exps[i] = 0;
        }
    }
}

fn class_from_map(ambient: &Arc<AmbientSpace>, map: &BTreeMap<Vec<u32>, i64>) -> ChowClass {
    let mut acc = ambient.zero();
    for (exps, &c) in map {
        acc = acc.add(&ambient.monomial(exps, c).unwrap()).unwrap();
    }
    acc
}

proptest! {
    // Each case runs on every ambient, so these two exercise well over a
    // thousand random draws per ambient.
    #![proptest_config(ProptestConfig::with_cases(1024))]

    #[test]
    fn ring_axioms(a in coeffs(), b in coeffs(), c in coeffs()) {
        for ambient in all_ambients() {
            let x = class_from_seed(&ambient, &a);
            let y = class_from_seed(&ambient, &b);
            let z = class_from_seed(&ambient, &c);
            prop_assert_eq!(
                x.mul(&y).unwrap().mul(&z).unwrap(),
                x.mul(&y.mul(&z).unwrap()).unwrap()
            );
            prop_assert_eq!(x.mul(&y).unwrap(), y.mul(&x).unwrap());
            prop_assert_eq!(
                x.mul(&y.add(&z).unwrap()).unwrap(),
                x.mul(&y).unwrap().add(&x.mul(&z).unwrap()).unwrap()
            );
            prop_assert_eq!(x.mul(&ambient.one()).unwrap(), x.clone());
            prop_assert_eq!(x.add(&ambient.zero()).unwrap(), x);
        }
    }

    #[test]
    fn whitney_quotient_inverts_product(a in coeffs(), b in coeffs()) {
        for ambient in all_ambients() {
            let num = unit_series_from_seed(&ambient, &a);
            let den = unit_series_from_seed(&ambient, &b);
            let q = num.whitney_quotient(&den).unwrap();
            prop_assert_eq!(q.mul(&den).unwrap(), num);
        }
    }
}

proptest! {
    #[test]
    fn product_mul_matches_oracle(a in coeffs(), b in coeffs()) {
        for ambient in product_ambients() {
            let factors = ambient.factors().unwrap().to_vec();
            let ma = to_map(&factors, &a);
            let mb = to_map(&factors, &b);
            let expected = class_from_map(&ambient, &oracle_mul(&factors, &ma, &mb));
            let got = class_from_map(&ambient, &ma).mul(&class_from_map(&ambient, &mb)).unwrap();
            prop_assert_eq!(got, expected);
        }
    }

    #[test]
    fn grading_of_products(a in coeffs(), b in coeffs(), s in 0u32..4, t in 0u32..4) {
        for ambient in all_ambients() {
            let x = class_from_seed(&ambient, &a).graded_piece(s);
            let y = class_from_seed(&ambient, &b).graded_piece(t);
            let prod = x.mul(&y).unwrap();
            if s + t <= ambient.dimension() {
                prop_assert_eq!(prod.graded_piece(s + t), prod);
            } else {
                prop_assert!(prod.is_zero());
            }
        }
    }

    #[test]
    fn degree_is_bilinear_on_top_pieces(a in coeffs(), b in coeffs(), c in coeffs()) {
        for ambient in all_ambients() {
            let x = class_from_seed(&ambient, &a);
            let xp = class_from_seed(&ambient, &b);
            let y = class_from_seed(&ambient, &c);
            let lhs = x.add(&xp).unwrap().mul(&y).unwrap().degree();
            let rhs = x.mul(&y).unwrap().degree() + xp.mul(&y).unwrap().degree();
            prop_assert_eq!(lhs, rhs);
        }
    }

    #[test]
    fn pushforward_is_additive_and_degree_preserving(a in coeffs(), b in coeffs()) {
        let p2 = AmbientSpace::product(&[2]).unwrap().to_surface().unwrap();
        let (bl, map) = p2.blow_up("E").unwrap();
        let x = class_from_seed(&bl, &a);
        let y = class_from_seed(&bl, &b);
        prop_assert_eq!(
            map.pushforward(&x.add(&y).unwrap()).unwrap(),
            map.pushforward(&x).unwrap().add(&map.pushforward(&y).unwrap()).unwrap()
        );
        prop_assert_eq!(map.pushforward(&x).unwrap().degree(), x.degree());
    }

    #[test]
    fn dual_is_involutive_ring_hom(a in coeffs(), b in coeffs()) {
        for ambient in all_ambients() {
            let x = unit_series_from_seed(&ambient, &a);
            let y = unit_series_from_seed(&ambient, &b);
            prop_assert_eq!(x.dual().unwrap().dual().unwrap(), x.clone());
            prop_assert_eq!(
                x.mul(&y).unwrap().dual().unwrap(),
                x.dual().unwrap().mul(&y.dual().unwrap()).unwrap()
            );
        }
    }

    #[test]
    fn dual_tangent_is_cotangent_sign_rule(_ in proptest::bool::ANY) {
        for ambient in all_ambients() {
            let t = ambient.tangent_chern().unwrap();
            let cot = t.dual().unwrap();
            for s in 0..=ambient.dimension() {
                let sign = if s % 2 == 1 { -1 } else { 1 };
                prop_assert_eq!(
                    cot.graded_piece(s),
                    t.graded_piece(s).scale(sign).unwrap()
                );
            }
        }
    }

    #[test]
    fn structure_sheaf_inverts_one_minus_divisor(d in proptest::collection::vec(1i64..=3, 3)) {
        for ambient in product_ambients() {
            let k = ambient.factors().unwrap().len();
            let divisor = ambient.multidegree_divisor(&d[..k]).unwrap();
            let series = TotalChernClass::of_structure_sheaf(&divisor).unwrap();
            let one_minus = TotalChernClass::new(ambient.one().sub(&divisor).unwrap()).unwrap();
            prop_assert_eq!(series.mul(&one_minus).unwrap(), TotalChernClass::one(&ambient));
        }
    }
}

/// A random arrangement of `m` components with multidegree entries in
/// `[1, 3]` on the given product ambient.
fn arrangement_from(
    ambient: &Arc<AmbientSpace>,
    degrees: &[Vec<i64>],
) -> DivisorArrangement {
    let k = ambient.factors().unwrap().len();
    let components = degrees
        .iter()
        .enumerate()
        .map(|(i, d)| {
            (
                format!("D{}", i + 1),
                ambient.multidegree_divisor(&d[..k]).unwrap(),
            )
        })
        .collect();
    DivisorArrangement::new(ambient, components, true).unwrap()
}

fn arb_degrees() -> impl Strategy<Value = Vec<Vec<i64>>> {
    proptest::collection::vec(proptest::collection::vec(1i64..=3, 3), 1..=4)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn main_identity_on_random_arrangements(degrees in arb_degrees()) {
        for ambient in product_ambients() {
            let arr = arrangement_from(&ambient, &degrees);
            prop_assert_eq!(arr.csm_zero().unwrap(), arr.csm_zero_expanded().unwrap());
            prop_assert!(arr.verify_main_identity().unwrap().pass);
        }
    }

    #[test]
    fn additivity_on_random_arrangements(degrees in arb_degrees()) {
        for ambient in product_ambients() {
            let arr = arrangement_from(&ambient, &degrees);
            prop_assert!(arr.additivity_check().unwrap().pass);
        }
    }

    #[test]
    fn induction_levels_on_random_arrangements(degrees in arb_degrees()) {
        let ambient = AmbientSpace::product(&[2]).unwrap();
        let arr = arrangement_from(&ambient, &degrees);
        let report = arr.verify_induction().unwrap();
        prop_assert!(report.pass);
        prop_assert_eq!(report.levels.len(), arr.len());
    }

    #[test]
    fn csm_zero_degree_is_permutation_invariant(degrees in arb_degrees(), swap in (0usize..4, 0usize..4)) {
        for ambient in product_ambients() {
            let arr = arrangement_from(&ambient, &degrees);
            let mut shuffled = degrees.clone();
            let (i, j) = (swap.0 % shuffled.len(), swap.1 % shuffled.len());
            shuffled.swap(i, j);
            let arr2 = arrangement_from(&ambient, &shuffled);
            prop_assert_eq!(
                arr.csm_zero().unwrap().degree(),
                arr2.csm_zero().unwrap().degree()
            );
            prop_assert_eq!(
                arr.char_class_localization().unwrap(),
                arr2.char_class_localization().unwrap()
            );
        }
    }
}

#[test]
fn csm_open_with_no_components_is_tangent_class() {
    for ambient in all_ambients() {
        let arr = DivisorArrangement::new(&ambient, vec![], true).unwrap();
        assert_eq!(
            arr.csm_open().unwrap(),
            ambient.tangent_chern().unwrap().into_class()
        );
    }
}

#[test]
fn blow_up_invariants_hold_along_chains() {
    let mut surface = AmbientSpace::product(&[2]).unwrap().to_surface().unwrap();
    for label in ["E1", "E2", "E3"] {
        let before = surface.surface_lattice().unwrap().clone();
        let (next, map) = surface.blow_up(label).unwrap();
        let lat = next.surface_lattice().unwrap();
        let r = before.rank();
        assert_eq!(lat.rank(), r + 1);
        assert_eq!(lat.intersection_matrix()[r][r], -1);
        for i in 0..r {
            assert_eq!(lat.intersection_matrix()[i][r], 0);
            assert_eq!(lat.intersection_matrix()[r][i], 0);
            assert_eq!(
                lat.intersection_matrix()[i][..r],
                before.intersection_matrix()[i][..]
            );
        }
        assert_eq!(lat.canonical_class()[..r], before.canonical_class()[..]);
        assert_eq!(lat.canonical_class()[r], 1);
        assert_eq!(lat.c2_degree(), before.c2_degree() + 1);
        assert_eq!(map.exceptional_label(), label);
        surface = next;
    }
}

proptest! {
    #[test]
    fn gw_rank_and_signature_are_ring_homs(a in -99i64..=99, b in -99i64..=99, c in -99i64..=99, d in -99i64..=99) {
        let x = GWElement::new(a, b);
        let y = GWElement::new(c, d);
        let sum = x.add(&y).unwrap();
        let prod = x.mul(&y).unwrap();
        prop_assert_eq!(sum.rank(), x.rank() + y.rank());
        prop_assert_eq!(sum.signature(), x.signature() + y.signature());
        prop_assert_eq!(prod.rank(), x.rank() * y.rank());
        prop_assert_eq!(prod.signature(), x.signature() * y.signature());
    }
}

fn arb_space() -> impl Strategy<Value = SpaceExpression> {
    let leaf = prop_oneof![
        Just(SpaceExpression::point()),
        (1u32..=3).prop_map(SpaceExpression::affine),
        (1u32..=3).prop_map(SpaceExpression::proj),
        Just(SpaceExpression::gm()),
    ];
    leaf.prop_recursive(4, 24, 3, |inner| {
        prop_oneof![
            proptest::collection::vec(inner.clone(), 1..=3).prop_map(SpaceExpression::product),
            proptest::collection::vec(inner.clone(), 1..=3)
                .prop_map(SpaceExpression::disjoint_union),
            (inner.clone(), inner).prop_map(|(w, c)| SpaceExpression::complement(w, c)),
        ]
    })
}

proptest! {
    #[test]
    fn measures_are_additive_and_multiplicative(a in arb_space(), b in arb_space()) {
        let product = SpaceExpression::product(vec![a.clone(), b.clone()]);
        prop_assert_eq!(
            product.chi_compact().unwrap(),
            a.chi_compact().unwrap() * b.chi_compact().unwrap()
        );
        prop_assert_eq!(
            product.chi_compact_quadratic().unwrap(),
            a.chi_compact_quadratic().unwrap().mul(&b.chi_compact_quadratic().unwrap()).unwrap()
        );

        let union = SpaceExpression::disjoint_union(vec![a.clone(), b.clone()]);
        prop_assert_eq!(
            union.chi_compact().unwrap(),
            a.chi_compact().unwrap() + b.chi_compact().unwrap()
        );

        let cut = SpaceExpression::complement(a.clone(), b.clone());
        prop_assert_eq!(
            cut.chi_compact().unwrap() + b.chi_compact().unwrap(),
            a.chi_compact().unwrap()
        );
    }

    #[test]
    fn quadratic_measure_refines_integer_measure(e in arb_space()) {
        prop_assert_eq!(e.chi_compact_quadratic().unwrap().rank(), e.chi_compact().unwrap());
    }
}
