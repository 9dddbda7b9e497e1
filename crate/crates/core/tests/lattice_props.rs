use mwlforge_core::arith::rat;
use mwlforge_core::mwl::Kodaira;
use mwlforge_core::niemeier::{make_niemeier_a92d6, make_niemeier_d64, GlueVector, NiemeierLattice};
use mwlforge_core::weier::{euler_sum, fibers::weight_at_infinity, singular_fibers, FnFieldCurve, Model, Poly};
use proptest::prelude::*;

fn lattices() -> [NiemeierLattice; 2] {
    [make_niemeier_d64(), make_niemeier_a92d6()]
}

fn is_integer(r: &mwlforge_core::Rat) -> bool {
    r.is_integer()
}

#[test]
fn glue_codes_are_closed_and_integral_exhaustively() {
    for lat in lattices() {
        let code = &lat.glue_code;
        for a in code {
            assert!(is_integer(&lat.pairing(a, a)), "{} {a}", lat.name);
            assert!((lat.pairing(a, a) / rat(2, 1)).is_integer(), "odd glue {a}");
            for b in code {
                assert!(lat.contains(&lat.add(a, b)), "{} {a} + {b}", lat.name);
                assert!(is_integer(&lat.pairing(a, b)), "{} <{a}, {b}>", lat.name);
            }
        }
        let order: usize = lat.components.iter().map(|c| c.discriminant_order()).product();
        assert_eq!(code.len() * code.len(), order, "{}", lat.name);
    }
}

fn label_vector(lat: &NiemeierLattice, seed: &[usize]) -> GlueVector {
    GlueVector(
        lat.components
            .iter()
            .zip(seed)
            .map(|(c, s)| s % c.discriminant_order())
            .collect(),
    )
}

proptest! {
    #[test]
    fn glue_sums_and_multiples_stay_in_code(i in 0usize..64, j in 0usize..64, k in -12i64..12, which in 0usize..2) {
        let lat = &lattices()[which];
        let a = &lat.glue_code[i % lat.glue_code.len()];
        let b = &lat.glue_code[j % lat.glue_code.len()];
        prop_assert!(lat.contains(&lat.add(a, b)));
        prop_assert!(lat.contains(&lat.scale(a, k)));
        prop_assert_eq!(lat.scale(a, lat.order(a) as i64), GlueVector(vec![0; a.len()]));
    }

    #[test]
    fn vectors_outside_the_code_pair_non_integrally(seed in prop::collection::vec(0usize..40, 4), which in 0usize..2) {
        let lat = &lattices()[which];
        let v = label_vector(lat, &seed);
        let integral = lat.glue_code.iter().all(|c| is_integer(&lat.pairing(&v, c)));
        prop_assert_eq!(integral, lat.contains(&v));
    }
}

/// `a_i ↦ λ^i a_i` with `λ = c(t-r)^k`.
fn twist(c: &FnFieldCurve, scale: i64, r: i64, k: u32) -> FnFieldCurve {
    let lambda = Poly::from_i64(&[-r, 1]).pow(k).scale(&rat(scale, 1));
    let mut a = c.a.clone();
    for (e, ai) in [1u32, 2, 3, 4, 6].into_iter().zip(a.iter_mut()) {
        *ai = ai.mul(&lambda.pow(e));
    }
    FnFieldCurve::new(&c.name, &c.param, a).unwrap()
}

fn fiber_kinds(c: &FnFieldCurve) -> Vec<(String, Kodaira)> {
    singular_fibers(c)
        .unwrap()
        .into_iter()
        .map(|f| (f.place.to_string_in(&c.param), f.kodaira))
        .collect()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(16))]

    #[test]
    fn kodaira_types_survive_scaling(m in 0usize..4, scale in prop::sample::select(vec![-3i64, -2, -1, 2, 3, 5]), r in -4i64..5, k in 0u32..2) {
        let c = Model::ALL[m].curve();
        let t = twist(&c, scale, r, k);
        prop_assert_eq!(fiber_kinds(&t), fiber_kinds(&c));
        prop_assert_eq!(euler_sum(&singular_fibers(&t).unwrap()), 12 * weight_at_infinity(&c));
    }
}

#[test]
fn kodaira_types_survive_constant_scaling_exhaustively() {
    for m in Model::ALL {
        let c = Model::curve(m);
        let base = fiber_kinds(&c);
        for scale in [-2i64, -1, 2, 3] {
            assert_eq!(fiber_kinds(&twist(&c, scale, 0, 0)), base, "{m:?} by {scale}");
        }
        assert_eq!(euler_sum(&singular_fibers(&c).unwrap()), 24);
    }
}
