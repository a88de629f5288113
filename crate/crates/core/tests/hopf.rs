use hopfforge::algebra::Algebra;
use hopfforge::catalog::{aff2_lie, b_lambda, b_presentation, e_algebra, enveloping, heisenberg_lie};
use hopfforge::hopf::{AxiomGroup, HopfAlgebra, HopfData, SquaredAntipode};
use hopfforge::scalar::{int, Scalar};
use hopfforge::tensor::parse_tensor;
use hopfforge::Error;

fn e() -> HopfAlgebra {
    e_algebra(&int(1), &int(1), &int(0), &int(0)).unwrap()
}

#[test]
fn coproduct_examples() {
    let h = b_lambda(&int(1)).unwrap();
    let dz = h.coproduct(&h.parse("Z").unwrap());
    assert_eq!(dz, h.parse_tensor("1@Z + X@Y + Z@1", 2).unwrap());
    assert_eq!(h.coproduct(&h.one()), h.parse_tensor("1@1", 2).unwrap());

    let e = e();
    let u = e.parse("W - X*Z").unwrap();
    let expected = e
        .parse_tensor("1@W - 1@X*Z + W@1 - X*Z@1 + 2*X*Y@X - 2*X@Z - X^2@Y + Y@X^2", 2)
        .unwrap();
    assert_eq!(e.coproduct(&u), expected);
}

#[test]
fn counit_examples() {
    let h = b_lambda(&int(1)).unwrap();
    assert_eq!(h.counit(&h.parse("Z").unwrap()), int(0));
    assert_eq!(h.counit(&h.one()), int(1));
    assert_eq!(h.counit(&h.parse("3 + X^2*Y").unwrap()), int(3));
}

#[test]
fn antipode_examples() {
    let h = b_lambda(&int(1)).unwrap();
    let z = h.parse("Z").unwrap();
    assert_eq!(h.antipode(&z).unwrap(), h.parse("-Z + X*Y").unwrap());
    assert_eq!(h.antipode(&h.one()).unwrap(), h.one());
    assert_eq!(h.antipode_power(&z, 2).unwrap(), h.parse("Z - Y").unwrap());

    let e = e();
    assert_eq!(e.antipode(&e.parse("Z").unwrap()).unwrap(), e.parse("-Z").unwrap());
    assert_eq!(e.antipode(&e.parse("X").unwrap()).unwrap(), e.parse("-X").unwrap());
}

// The recursion gives S(W) = -W + X; -W - X violates the convolution identity.
#[test]
fn solved_antipode_of_w() {
    let e = e();
    let w = e.parse("W").unwrap();
    let sw = e.antipode(&w).unwrap();
    assert_eq!(sw, e.parse("-W + X").unwrap());
    let solved = e.solve_antipode().unwrap();
    assert_eq!(solved[3], sw);

    let mut data = e.data();
    data.antipodes.as_mut().unwrap()[3] = e.parse("-W - X").unwrap();
    let wrong = HopfAlgebra::new(e.algebra().clone(), data).unwrap();
    assert!(!wrong.axioms().group_passed(AxiomGroup::Antipode));
    assert!(wrong
        .axioms()
        .failures()
        .all(|c| c.group == AxiomGroup::Antipode || c.group == AxiomGroup::Relations));
}

#[test]
fn antipode_requires_data() {
    let h = b_lambda(&int(1)).unwrap();
    let mut data = h.data();
    data.antipodes = None;
    let solved = HopfAlgebra::new(h.algebra().clone(), data).unwrap();
    assert_eq!(solved.data().antipodes, h.data().antipodes);
}

#[test]
fn verify_hopf_examples() {
    for l in [0, 1, -2] {
        let h = b_lambda(&int(l)).unwrap();
        let r = h.verify_hopf();
        assert!(r.passed(), "{r}");
        for g in [AxiomGroup::Relations, AxiomGroup::Coassociativity, AxiomGroup::Counit, AxiomGroup::Antipode] {
            assert!(r.checks.iter().any(|c| c.group == g));
        }
    }
    assert!(e().verify_hopf().passed());

    let alg = Algebra::new(b_presentation(&int(1), [1, 1, 2]).unwrap()).unwrap();
    let coproducts = ["1@X + X@1", "1@Y + Y@1", "1@Z + Y@X + Z@1"]
        .iter()
        .map(|t| parse_tensor(&alg, t, 2).unwrap())
        .collect();
    let data = HopfData {
        coproducts,
        antipodes: Some(vec![alg.parse("-X").unwrap(), alg.parse("-Y").unwrap(), alg.parse("-Z + X*Y").unwrap()]),
    };
    // Swapping the legs of X@Y still respects every relation; only the
    // supplied antipode breaks.
    let swapped = HopfAlgebra::new(alg.clone(), data.clone()).unwrap();
    assert!(swapped.axioms().group_passed(AxiomGroup::Relations));
    assert!(swapped.axioms().group_passed(AxiomGroup::Coassociativity));
    assert!(!swapped.axioms().group_passed(AxiomGroup::Antipode));
    assert!(matches!(HopfAlgebra::certified(alg.clone(), data.clone(), 6), Err(Error::HopfAxioms(_))));
    let solved = HopfAlgebra::new(alg.clone(), HopfData { antipodes: None, ..data }).unwrap();
    assert!(solved.axioms().passed());
    assert_eq!(solved.antipode(&alg.parse("Z").unwrap()).unwrap(), alg.parse("-Z + X*Y - Y").unwrap());

    let coproducts = ["1@X + X@1", "1@Y + Y@1", "1@Z + X@X + Z@1"]
        .iter()
        .map(|t| parse_tensor(&alg, t, 2).unwrap())
        .collect();
    let broken = HopfAlgebra::new(alg, HopfData { coproducts, antipodes: None }).unwrap();
    assert!(!broken.axioms().group_passed(AxiomGroup::Relations));
    assert!(broken.axioms().failures().any(|c| c.subject.contains("[Z,Y]")));
}

#[test]
fn malformed_data_is_rejected() {
    let alg = Algebra::new(b_presentation(&int(1), [1, 1, 2]).unwrap()).unwrap();
    let coproducts = ["1@X + X@1", "1@Y", "1@Z + X@Y + Z@1"]
        .iter()
        .map(|t| parse_tensor(&alg, t, 2).unwrap())
        .collect();
    let data = HopfData { coproducts, antipodes: None };
    assert!(matches!(HopfAlgebra::new(alg, data), Err(Error::HopfData(_))));
}

#[test]
fn reduced_coproducts() {
    let h = b_lambda(&int(1)).unwrap();
    let z = h.parse("Z").unwrap();
    assert_eq!(h.iterated_reduced_coproduct(&z, 1).unwrap(), h.parse_tensor("X@Y", 2).unwrap());
    assert!(h.iterated_reduced_coproduct(&z, 2).unwrap().is_zero());
    assert!(matches!(h.reduced_coproduct(&h.parse("Z + 1").unwrap()), Err(Error::NonzeroCounit(_))));

    let e = e();
    let w = e.parse("W").unwrap();
    assert_eq!(
        e.iterated_reduced_coproduct(&w, 2).unwrap(),
        e.parse_tensor("2*X@Y@X", 3).unwrap()
    );
}

#[test]
fn coradical_degrees() {
    let h = b_lambda(&int(1)).unwrap();
    assert_eq!(h.coradical_degree(&h.parse("Z").unwrap()).unwrap(), 2);
    assert_eq!(h.coradical_degree(&h.parse("X").unwrap()).unwrap(), 1);
    assert_eq!(h.coradical_degree(&h.parse("5").unwrap()).unwrap(), 0);
    assert_eq!(h.coradical_degree(&h.parse("X*Y*Z + 2").unwrap()).unwrap(), 4);
    assert!(matches!(h.coradical_degree(&h.parse("0").unwrap()), Err(Error::ZeroElement)));

    let e = e();
    let u = e.parse("W - X*Z").unwrap();
    assert_eq!(e.coradical_degree(&u).unwrap(), 3);
    let expected = e.parse_tensor("2*X@Y@X + 2*Y@X@X - 2*X@X@Y", 3).unwrap();
    assert_eq!(e.iterated_reduced_coproduct(&u, 2).unwrap(), expected);
}

#[test]
fn primitive_bases() {
    let h = b_lambda(&int(1)).unwrap();
    assert_eq!(h.primitive_basis(4), vec![h.parse("X").unwrap(), h.parse("Y").unwrap()]);
    let u = enveloping(&aff2_lie()).unwrap();
    assert_eq!(u.primitive_basis(4).len(), 2);
    let e = e();
    assert_eq!(e.primitive_basis(4), vec![e.parse("X").unwrap(), e.parse("Y").unwrap()]);
}

#[test]
fn antipode_inverses() {
    let h = b_lambda(&int(1)).unwrap();
    assert_eq!(h.antipode_inverse(&h.parse("X").unwrap()).unwrap(), h.parse("-X").unwrap());
    let zi = h.antipode_inverse(&h.parse("Z").unwrap()).unwrap();
    assert_eq!(zi, h.parse("-Z + X*Y - Y").unwrap());
    assert_eq!(h.antipode(&zi).unwrap(), h.parse("Z").unwrap());
}

#[test]
fn squared_antipode() {
    let h = b_lambda(&int(1)).unwrap();
    let s2 = h.s_squared_analysis().unwrap();
    match &s2 {
        SquaredAntipode::Infinite { element, shift } => {
            assert_eq!(element, &h.parse("Z").unwrap());
            assert_eq!(shift, &h.parse("-Y").unwrap());
            assert_eq!(h.antipode_power(shift, 2).unwrap(), *shift);
        }
        SquaredAntipode::Identity => panic!("S^2 is not the identity on B"),
    }
    assert_eq!(s2.describe(h.names()), "infinite; witness S^2(Z) = Z - Y");
    let z = h.parse("Z").unwrap();
    for m in 1..4usize {
        let expected = &z + &h.parse("-Y").unwrap().scaled(&Scalar::from_integer((m as i64).into()));
        assert_eq!(h.antipode_power(&z, 2 * m).unwrap(), expected);
    }

    let u = enveloping(&heisenberg_lie()).unwrap();
    assert!(u.s_squared_analysis().unwrap().is_identity());
}

#[test]
fn unchecked_weights_skip_certification() {
    let h = hopfforge::catalog::b_lambda_with_weights(&int(1), [1, 1, 1]).unwrap();
    assert!(h.filtration().is_none());
    assert!(matches!(h.require_filtration(), Err(Error::MissingCertificate(_))));
}
