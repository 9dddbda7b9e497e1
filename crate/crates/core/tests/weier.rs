use mwlforge_core::arith::rat;
use mwlforge_core::mwl::Kodaira;
use mwlforge_core::weier::fibers::weight_at_infinity;
use mwlforge_core::weier::models::W_MINUS_ONE_COMPONENT;
use mwlforge_core::weier::*;
use mwlforge_core::Error;

fn fiber_map(m: Model) -> Vec<(String, Kodaira)> {
    let c = m.curve();
    singular_fibers(&c)
        .unwrap()
        .into_iter()
        .map(|f| (f.place.to_string_in(&c.param), f.kodaira))
        .collect()
}

fn kinds(m: Model) -> Vec<Kodaira> {
    let mut v: Vec<Kodaira> = fiber_map(m)
        .into_iter()
        .map(|(_, k)| k)
        .filter(|k| k.root_type().is_some())
        .collect();
    v.sort();
    v
}

#[test]
fn eu_torsion_is_z2_z6() {
    let c = Model::Eu.curve();
    let gens: Vec<CurvePoint> = ["A2", "A22", "P3"]
        .iter()
        .map(|n| Model::Eu.section(n).unwrap())
        .collect();
    let g = c.torsion_structure(&gens, 64).unwrap();
    assert_eq!(g.order(), 12);
    assert_eq!(g.invariant_factors(), [2, 6]);
    assert_eq!(g.primary_factors(), [2, 2, 3]);
    assert!(g.all_on_curve);
    assert!(g.is_abelian_group());
}

#[test]
fn eu_torsion_relations() {
    let c = Model::Eu.curve();
    let s = |n| Model::Eu.section(n).unwrap();
    assert_eq!(c.mul(3, &s("P3")).unwrap(), CurvePoint::Infinity);
    assert_ne!(c.mul(2, &s("P3")).unwrap(), CurvePoint::Infinity);
    assert_eq!(c.mul(2, &s("A22")).unwrap(), CurvePoint::Infinity);
    assert_eq!(c.add(&s("A22"), &s("A23")).unwrap(), s("A2"));
    assert_eq!(c.add(&s("P3"), &CurvePoint::Infinity).unwrap(), s("P3"));
    let minus = c.neg(&s("P3")).unwrap();
    assert_eq!(c.add(&s("P3"), &minus).unwrap(), CurvePoint::Infinity);
}

#[test]
fn mistyped_two_torsion_points_are_not_on_eu() {
    let c = Model::Eu.curve();
    assert!(matches!(c.point("-(u^2-1)^2/4", "0"), Err(Error::NotOnCurve(_))));
    assert!(matches!(c.point("-(u-1)^2", "(u-1)^3"), Err(Error::NotOnCurve(_))));
}

#[test]
fn ew_two_torsion() {
    let c = Model::Ew.curve();
    let gens = [Model::Ew.section("Q1").unwrap(), Model::Ew.section("Q2").unwrap()];
    let g = c.torsion_structure(&gens, 64).unwrap();
    assert_eq!(g.invariant_factors(), [2, 2]);
    assert!(g.is_abelian_group());
    let q3 = Model::Ew.section("Q3").unwrap();
    assert!(g.elements.contains(&q3));
    let trivial = c.torsion_structure(&[CurvePoint::Infinity], 4).unwrap();
    assert_eq!(trivial.order(), 1);
    assert!(trivial.invariant_factors().is_empty());
}

#[test]
fn w1_has_infinite_order() {
    let c = Model::Ew.curve();
    let w1 = Model::Ew.section("W1").unwrap();
    assert!(c.torsion_structure(&[w1], 4).is_err());
}

#[test]
fn eu_fibers() {
    let f = fiber_map(Model::Eu);
    let expect = [
        ("u + 3", Kodaira::I(2)),
        ("u + 1", Kodaira::I(6)),
        ("u", Kodaira::I(2)),
        ("u - 1", Kodaira::I(6)),
        ("u - 3", Kodaira::I(2)),
        ("inf", Kodaira::I(6)),
    ];
    let got: Vec<(&str, Kodaira)> = f.iter().map(|(p, k)| (p.as_str(), *k)).collect();
    assert_eq!(got, expect);
    let c = Model::Eu.curve();
    let generic = kodaira_at(&c, &Place::Finite(Poly::from_i64(&[-5, 1]))).unwrap();
    assert_eq!(generic.kodaira, Kodaira::I(0));
    assert!(!c.discriminant().eval(&rat(5, 1)).eq(&rat(0, 1)));
}

#[test]
fn ew_fibers() {
    let f = fiber_map(Model::Ew);
    let got: Vec<(&str, Kodaira)> = f.iter().map(|(p, k)| (p.as_str(), *k)).collect();
    assert_eq!(
        got,
        [
            ("w + 1", Kodaira::I(2)),
            ("w + 1/4", Kodaira::IStar(0)),
            ("w", Kodaira::IStar(2)),
            ("inf", Kodaira::IStar(2)),
        ]
    );
}

#[test]
fn p_and_t_models_carry_i8_and_i10() {
    for m in [Model::Ep, Model::Et] {
        assert_eq!(kinds(m), [Kodaira::I(8), Kodaira::I(10)], "{m:?}");
        let c = m.curve();
        let f = singular_fibers(&c).unwrap();
        let rest: Vec<&PlaceFiber> = f.iter().filter(|x| x.kodaira.root_type().is_none()).collect();
        assert_eq!(rest.len(), 1);
        assert_eq!(rest[0].kodaira, Kodaira::I(1));
        assert_eq!(rest[0].place.degree(), 6);
    }
}

#[test]
fn euler_sums_are_24() {
    for m in Model::ALL {
        let c = m.curve();
        assert_eq!(weight_at_infinity(&c), 2, "{m:?}");
        assert_eq!(euler_sum(&singular_fibers(&c).unwrap()), 24, "{m:?}");
    }
}

#[test]
fn reducible_place_rejected() {
    assert!(matches!(
        Place::finite(Poly::from_i64(&[-1, 0, 1])),
        Err(Error::InvalidPlace(_))
    ));
    assert!(Place::finite(Poly::from_i64(&[1, 0, 1])).is_ok());
}

#[test]
fn birational_maps_verify() {
    let eu = Model::Eu.curve();
    for check in builtin_maps().unwrap() {
        let src = check.source.curve();
        let r = verify_birational_map(&src, &eu, &check.map).unwrap();
        assert!(r.on_target, "{}", check.name);
        assert!(r.identities.iter().all(|&b| b), "{}", check.name);
        for (f, expected) in &check.pullbacks {
            assert!(verify_pullback(&src, &eu, &check.map, f, expected).unwrap(), "{} {f}", check.name);
        }
    }
}

#[test]
fn perturbed_map_fails() {
    let eu = Model::Eu.curve();
    let mut check = builtin_maps().unwrap().remove(0);
    check.map = BirationalMap::parse(
        "bad",
        &[("D", "Y - X*w - 2w^3(1+4w)")],
        "w(1+4w)^2(X+4w^3)^2(2Y+X(2w+1))^2/D^4",
        "(1+4w)^3 X (X+4w^3)^4 (2Y+X(2w+1))^2/D^6",
        "(1+4w)(X+4w^3)/D + 1",
    )
    .unwrap();
    let r = verify_birational_map(&Model::Ew.curve(), &eu, &check.map).unwrap();
    assert!(!r.on_target);
    assert!(!verify_elliptic_parameter(&Model::Ew.curve(), &eu, &check.map, "x/(u^2+1)^2").unwrap());
}

#[test]
fn identity_map_and_parameter() {
    let eu = Model::Eu.curve();
    let id = BirationalMap::identity(&eu).unwrap();
    assert!(verify_birational_map(&eu, &eu, &id).unwrap().verified());
    assert!(verify_elliptic_parameter(&eu, &eu, &id, "u").unwrap());
}

#[test]
fn w_is_the_elliptic_parameter_of_the_w_model() {
    let eu = Model::Eu.curve();
    let m = builtin_maps().unwrap().remove(0);
    assert!(verify_elliptic_parameter(&Model::Ew.curve(), &eu, &m.map, models::W_PARAMETER).unwrap());
}

#[test]
fn component_parametrization() {
    let eu = Model::Eu.curve();
    let (z, u, x, y) = W_MINUS_ONE_COMPONENT;
    assert!(verify_parametrized_component(&eu, z, u, x, y).unwrap());
    assert!(!verify_parametrized_component(&eu, z, u, x, &format!("-{y}")).unwrap());
    assert!(verify_parametrized_component(&eu, "z", "2", "0", "0").unwrap());
    let w = mwlforge_core::weier::expr::Expr::parse(models::W_PARAMETER).unwrap();
    let val = w
        .eval(&field::UnivariateField, &|n| match n {
            "x" => Some(curve_val(x)),
            "u" => Some(curve_val(u)),
            _ => None,
        })
        .unwrap();
    assert_eq!(val, RatFn::constant(rat(-1, 1)));
}

fn curve_val(s: &str) -> RatFn {
    mwlforge_core::weier::expr::Expr::parse(s)
        .unwrap()
        .eval(&field::UnivariateField, &|n| (n == "z").then(RatFn::var))
        .unwrap()
}

#[test]
fn section_orders_by_specialization() {
    let expect: [(Model, &str, Option<u32>); 10] = [
        (Model::Eu, "P3", Some(3)),
        (Model::Eu, "A2", Some(2)),
        (Model::Eu, "A23", Some(2)),
        (Model::Ew, "Q2", Some(2)),
        (Model::Ew, "W1", None),
        (Model::Ep, "V1", None),
        (Model::Ep, "V2", None),
        (Model::Et, "Z1", None),
        (Model::Et, "Z5", None),
        (Model::Eu, "A22", Some(2)),
    ];
    for (m, name, order) in expect {
        let c = m.curve();
        assert_eq!(c.point_order(&m.section(name).unwrap()).unwrap(), order, "{name}");
    }
    let c = Model::Eu.curve();
    let p6 = c.add(&Model::Eu.section("P3").unwrap(), &Model::Eu.section("A2").unwrap()).unwrap();
    assert_eq!(c.point_order(&p6).unwrap(), Some(6));
    assert_eq!(c.point_order(&CurvePoint::Infinity).unwrap(), Some(1));
    assert!(c.specialize(&rat(1, 1)).is_none());
}
