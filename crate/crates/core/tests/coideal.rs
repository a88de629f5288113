use std::sync::Arc;

use hopfforge::algebra::Presentation;
use hopfforge::catalog::{aff2_lie, abelian_lie, b_coideal, b_coideal_spec, b_lambda, e_algebra, e_coideal, enveloping, heisenberg_lie, BCoideal};
use hopfforge::coideal::{containment_check, Side, Subalgebra, SubalgebraSpec};
use hopfforge::graded::{hilbert_divides, signature, Signature};
use hopfforge::hopf::{HopfAlgebra, SquaredAntipode};
use hopfforge::nakayama::{
    enveloping_integral_character, nakayama_automorphism, normal_element_check, s4_identity_check, verify_character,
    winding, Character, GeneratorAutomorphism,
};
use hopfforge::scalar::{int, Scalar};
use hopfforge::Error;

fn b(lambda: i64) -> Arc<HopfAlgebra> {
    Arc::new(b_lambda(&int(lambda)).unwrap())
}

fn coideal(h: &Arc<HopfAlgebra>, name: &str) -> Subalgebra {
    b_coideal(h, &BCoideal::parse(name).unwrap()).unwrap()
}

fn catalog_names() -> Vec<&'static str> {
    vec!["g_0", "g_1", "g_inf", "L_0", "L_1", "L_2", "L_inf", "R_0", "R_1", "R_2", "R_inf"]
}

#[test]
fn registration() {
    let h = b(1);
    let l = coideal(&h, "L_inf");
    assert_eq!(l.names(), &["Y".to_string(), "Z".to_string()]);
    assert_eq!(l.weights(), &[1, 2]);
    assert!(l.coideal_check(Side::Left).unwrap().passed());

    let e = Arc::new(e_algebra(&int(1), &int(1), &int(0), &int(0)).unwrap());
    let t = e_coideal(&e, &int(1), &int(1)).unwrap();
    assert_eq!(t.weights(), &[1, 1, 3]);
    assert!(t.coideal_check(Side::Right).unwrap().passed());

    let p = Presentation::new([("Y", 1), ("Z", 1)]).unwrap();
    let half_y2 = p.parse_normal("1/2*Y^2").unwrap();
    let p = p.with_commutator("Z", "Y", half_y2).unwrap();
    let spec = SubalgebraSpec::new("bad", p, vec![h.parse("Y").unwrap(), h.parse("Z").unwrap()], Side::Left);
    let err = spec.and_then(|s| Subalgebra::register(h.clone(), s)).unwrap_err();
    assert!(matches!(err, Error::Reweight { declared: 1, degree: 2, .. }), "{err:?}");
}

#[test]
fn registration_rejects_non_homomorphisms() {
    let h = b(1);
    let p = Presentation::new([("Y", 1), ("Z", 2)]).unwrap();
    let spec = SubalgebraSpec::new("comm", p, vec![h.parse("Y").unwrap(), h.parse("Z").unwrap()], Side::Left).unwrap();
    assert!(matches!(Subalgebra::register(h, spec), Err(Error::NotHomomorphism { .. })));
}

#[test]
fn coideal_sides() {
    let h = b(1);
    let l = coideal(&h, "L_inf");
    let as_right = l.coideal_check(Side::Right).unwrap();
    assert!(!as_right.passed());
    let v = as_right.violation.as_ref().unwrap();
    assert_eq!(v.term, "X@Y");
    assert_eq!(
        as_right.to_string(),
        "right coideal: FAIL at Delta(Z), offending term X@Y (first leg not in the subalgebra)"
    );
    let r = coideal(&h, "R_inf");
    assert!(r.coideal_check(Side::Right).unwrap().passed());
    let w = h.parse("Z - X*Y").unwrap();
    assert_eq!(h.coproduct(&w), h.parse_tensor("1@Z - 1@X*Y + Z@1 - X*Y@1 - Y@X", 2).unwrap());
}

#[test]
fn antipode_images() {
    for lambda in [0, 1] {
        let h = b(lambda);
        for beta in ["0", "1", "2", "inf"] {
            let l = coideal(&h, &format!("L_{beta}"));
            let r = coideal(&h, &format!("R_{beta}"));
            let sl = l.antipode_image().unwrap();
            assert!(sl.same_span(&r).unwrap(), "S(L_{beta}) = R_{beta} at lambda {lambda}");
            assert!(r.antipode_image().unwrap().same_span(&l).unwrap());
            assert!(sl.antipode_image().unwrap().same_span(&l).unwrap());
        }
        let g = coideal(&h, "g_inf");
        assert!(g.antipode_image().unwrap().same_span(&g).unwrap());
    }
}

#[test]
fn hopf_subalgebras() {
    let h = b(1);
    let hopf: Vec<&str> = catalog_names()
        .into_iter()
        .filter(|n| coideal(&h, n).is_hopf_subalgebra().unwrap())
        .collect();
    assert_eq!(hopf, ["g_0", "g_1", "g_inf", "L_0", "R_0"]);
    assert!(coideal(&h, "L_0").same_span(&coideal(&h, "R_0")).unwrap());
    let u = Subalgebra::whole(Arc::new(enveloping(&aff2_lie()).unwrap())).unwrap();
    assert!(u.is_hopf_subalgebra().unwrap());
}

#[test]
fn signatures_and_dimensions() {
    let h = b(1);
    for n in ["L_1", "L_2", "L_inf", "R_1", "R_inf"] {
        let t = coideal(&h, n);
        assert_eq!(t.signature().to_string(), "(1, 2)", "{n}");
        assert_eq!(t.gk_dimension(), 2);
    }
    let l0 = coideal(&h, "L_0");
    assert_eq!(l0.signature(), Signature::from_parts([(1, 2)]));
    let e = Arc::new(e_algebra(&int(1), &int(1), &int(0), &int(0)).unwrap());
    let t = e_coideal(&e, &int(1), &int(1)).unwrap();
    assert_eq!(t.signature().to_string(), "(1^2, 3)");
    assert_eq!(t.gk_dimension(), 3);

    let full = signature(&h).unwrap();
    for n in catalog_names() {
        let t = coideal(&h, n);
        assert!(hilbert_divides(&t.signature(), &full).is_some(), "{n}");
        assert!(t.signature().multiplicity(1) >= 1, "{n}");
    }
}

#[test]
fn containments() {
    let h = b(1);
    let g = coideal(&h, "g_inf");
    let l = coideal(&h, "L_inf");
    let r = containment_check(&g, &l).unwrap();
    assert!(r.proper() && r.dichotomy_holds());
    assert_eq!(r.to_string(), "proper, gk 1 < 2");
    let same = containment_check(&l, &l).unwrap();
    assert!(same.equal && same.dichotomy_holds());
    let whole = Subalgebra::whole(h.clone()).unwrap();
    let r = containment_check(&l, &whole).unwrap();
    assert_eq!(r.to_string(), "proper, gk 2 < 3");
    let not = containment_check(&coideal(&h, "R_inf"), &l).unwrap();
    assert!(!not.contained);

    let other = b(1);
    assert!(containment_check(&g, &coideal(&other, "L_inf")).is_err());
}

#[test]
fn every_proper_containment_drops_gk() {
    for lambda in [0, 1] {
        let h = b(lambda);
        let mut all: Vec<Subalgebra> = catalog_names().into_iter().map(|n| coideal(&h, n)).collect();
        all.push(Subalgebra::whole(h.clone()).unwrap());
        for a in &all {
            for c in &all {
                let r = containment_check(a, c).unwrap();
                assert!(r.dichotomy_holds(), "{} in {}", a.name(), c.name());
            }
        }
    }
}

// Coinvariants of the quotient by T⁺H recover T itself.
#[test]
fn coinvariants() {
    let h = b(1);
    let l = coideal(&h, "L_inf");
    let basis = l.coinvariants(3).unwrap();
    let shown: Vec<String> = basis.iter().map(|x| h.show(x)).collect();
    assert_eq!(shown, ["1", "Y", "Y^2", "Z", "Y^3", "Y*Z"]);
    assert!(basis.iter().all(|x| l.contains(x).unwrap()));

    let k = Subalgebra::trivial(h.clone()).unwrap();
    assert_eq!(k.coinvariants(3).unwrap(), vec![h.one()]);
    let whole = Subalgebra::whole(h.clone()).unwrap();
    assert_eq!(whole.coinvariants(3).unwrap().len(), 1 + 2 + 4 + 6);
}

#[test]
fn primitives() {
    for lambda in [0, 1] {
        let h = b(lambda);
        for n in catalog_names() {
            let t = coideal(&h, n);
            let p = t.primitive().unwrap();
            assert!(!p.is_zero());
            assert!(h.reduced_coproduct(&p).unwrap().is_zero());
            assert!(t.contains(&p).unwrap());
        }
        let p = coideal(&h, "L_1").primitive().unwrap();
        assert_eq!(p.len(), 1);
        assert_eq!(p.leading().unwrap().0, h.parse("Y").unwrap().leading().unwrap().0);
        let g = coideal(&h, "g_1").primitive().unwrap();
        let scale = g.coefficient(h.parse("X").unwrap().leading().unwrap().0);
        assert_eq!(g.scaled(&(Scalar::from_integer(1.into()) / scale)), h.parse("X + Y").unwrap());
    }
    let e = Arc::new(e_algebra(&int(1), &int(1), &int(0), &int(0)).unwrap());
    let p = e_coideal(&e, &int(1), &int(1)).unwrap().primitive().unwrap();
    assert!(p.terms().all(|(m, _)| m.weight() == 1));
    assert!(Subalgebra::trivial(e.clone()).unwrap().primitive().is_err());
}

#[test]
fn squared_antipode_on_coideals() {
    let h = b(1);
    let r = coideal(&h, "R_inf");
    let s2 = r.s_squared_analysis().unwrap();
    match &s2 {
        SquaredAntipode::Infinite { element, shift } => {
            assert_eq!(element, &h.parse("Z - X*Y").unwrap());
            assert_eq!(shift, &h.parse("-Y").unwrap());
        }
        SquaredAntipode::Identity => panic!("S^2 moves Z - XY"),
    }
    assert_eq!(s2.describe(h.names()), "infinite; witness S^2(Z - X*Y) = Z - X*Y - Y");
    for n in ["g_0", "g_1", "g_inf", "L_0"] {
        assert!(coideal(&h, n).s_squared_analysis().unwrap().is_identity(), "{n}");
    }
}

#[test]
fn characters() {
    let h = b(1);
    let l0 = coideal(&h, "L_0");
    assert_eq!(l0.names(), &["Y".to_string(), "X".to_string()]);
    assert!(verify_character(&l0, &Character::trivial(2)).unwrap().passed());
    assert!(verify_character(&l0, &Character::new(vec![int(0), int(1)])).unwrap().passed());
    let bad = verify_character(&l0, &Character::new(vec![int(1), int(1)])).unwrap();
    assert!(!bad.passed());
}

#[test]
fn windings() {
    let h = b(1);
    let l0 = coideal(&h, "L_0");
    let chi = Character::new(vec![int(0), int(1)]);
    let x = h.parse("X").unwrap();
    assert_eq!(winding(&l0, &chi, &x, Side::Left).unwrap(), h.parse("X + 1").unwrap());
    let xy = h.parse("X*Y").unwrap();
    assert_eq!(winding(&l0, &chi, &xy, Side::Left).unwrap(), h.parse("X*Y + Y").unwrap());
    let eps = Character::trivial(2);
    assert_eq!(winding(&l0, &eps, &xy, Side::Left).unwrap(), xy);
    assert_eq!(winding(&l0, &eps, &xy, Side::Right).unwrap(), xy);
}

#[test]
fn nakayama_examples() {
    let h = b(1);
    let r = coideal(&h, "R_inf");
    let nu = nakayama_automorphism(&r, &Character::trivial(2)).unwrap();
    assert_eq!(nu.describe(&r), "Y -> Y, W -> W - Y");

    let g = coideal(&h, "g_inf");
    let nu = nakayama_automorphism(&g, &Character::trivial(1)).unwrap();
    assert_eq!(nu, GeneratorAutomorphism::identity(&g));

    let l0 = coideal(&h, "L_0");
    let nu = nakayama_automorphism(&l0, &Character::new(vec![int(0), int(1)])).unwrap();
    assert_eq!(nu.describe(&l0), "Y -> Y, X -> X + 1");

    let l = coideal(&h, "L_inf");
    let nu = nakayama_automorphism(&l, &Character::trivial(2)).unwrap();
    assert_eq!(nu.describe(&l), "Y -> Y, Z -> Z + Y");
}

#[test]
fn s4_examples() {
    let h = b(1);
    let l0 = coideal(&h, "L_0");
    let r = s4_identity_check(&l0, &Character::new(vec![int(0), int(1)])).unwrap();
    assert!(r.passed, "{r}");
    assert!(s4_identity_check(&l0, &Character::trivial(2)).unwrap().passed);
    assert!(s4_identity_check(&coideal(&h, "L_inf"), &Character::trivial(2)).is_err());

    let u = Arc::new(enveloping(&aff2_lie()).unwrap());
    let whole = Subalgebra::whole(u).unwrap();
    let chi = enveloping_integral_character(&aff2_lie()).unwrap();
    assert!(s4_identity_check(&whole, &chi).unwrap().passed);
}

#[test]
fn normal_elements() {
    let h = b(1);
    let r = coideal(&h, "R_inf");
    let sigma = GeneratorAutomorphism::parse(&r, &["Y", "W + 1/2*Y"]).unwrap();
    let y = h.parse("Y").unwrap();
    assert!(normal_element_check(&r, &y, &sigma));
    assert!(normal_element_check(&r, &h.one(), &GeneratorAutomorphism::identity(&r)));
    assert!(!normal_element_check(&r, &y, &GeneratorAutomorphism::identity(&r)));
}

#[test]
fn integral_characters() {
    let chi = enveloping_integral_character(&aff2_lie()).unwrap();
    assert_eq!(chi.values(), &[int(1), int(0)]);
    assert_eq!(enveloping_integral_character(&abelian_lie(3)).unwrap(), Character::trivial(3));
    assert_eq!(enveloping_integral_character(&heisenberg_lie()).unwrap(), Character::trivial(3));
}

#[test]
fn catalog_certificates() {
    for lambda in [0, 1] {
        let h = b(lambda);
        for n in catalog_names() {
            let spec = b_coideal_spec(&h, &BCoideal::parse(n).unwrap()).unwrap();
            let t = Subalgebra::register(h.clone(), spec).unwrap();
            assert!(t.coideal_check(t.side()).unwrap().passed(), "{n}");
            if t.gk_dimension() == 1 {
                let c = t.generator_image(0);
                assert!(h.reduced_coproduct(c).unwrap().is_zero(), "{n}");
            }
        }
    }
    assert_eq!(BCoideal::parse("R_-1/2").unwrap().name(), "R_-1/2");
    assert!(BCoideal::parse("Q_1").is_err());
}

#[test]
fn jordan_plane_relation() {
    let h = b(1);
    let r = coideal(&h, "R_inf");
    let w = r.algebra().generator(1);
    let y = r.algebra().generator(0);
    assert_eq!(r.algebra().commutator(&w, &y), r.algebra().parse("-1/2*Y^2").unwrap());
    let scaled = w.scaled(&int(-2));
    assert_eq!(r.algebra().commutator(&scaled, &y), r.algebra().parse("Y^2").unwrap());
}
