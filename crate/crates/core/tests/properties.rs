mod common;

use std::sync::{Arc, LazyLock};

use common::{augmented, element_from, Picks};
use hopfforge::algebra::reduce_word_with;
use hopfforge::catalog::{b_coideal, b_lambda, e_algebra, enveloping, sl2_lie, BCoideal};
use hopfforge::coideal::{Side, Subalgebra};
use hopfforge::element::Element;
use hopfforge::graded::{hilbert_series, signature};
use hopfforge::hopf::HopfAlgebra;
use hopfforge::monomial::{monomials_of_weight, Monomial};
use hopfforge::nakayama::{convolution_inverse, winding, Character};
use hopfforge::scalar::{int, Scalar};
use hopfforge::tensor::{contract, tensor_multiply, TensorElement};
use num_traits::Zero;
use proptest::prelude::*;

static B: LazyLock<Arc<HopfAlgebra>> = LazyLock::new(|| Arc::new(b_lambda(&int(1)).unwrap()));
static E: LazyLock<HopfAlgebra> = LazyLock::new(|| e_algebra(&int(1), &int(1), &int(0), &int(0)).unwrap());
static B_MONOS: LazyLock<Vec<Monomial>> = LazyLock::new(|| augmented(B.weights(), 4));
static E_MONOS: LazyLock<Vec<Monomial>> = LazyLock::new(|| augmented(E.weights(), 4));
static WHOLE: LazyLock<Subalgebra> = LazyLock::new(|| Subalgebra::whole(B.clone()).unwrap());
static L0: LazyLock<Subalgebra> = LazyLock::new(|| b_coideal(&B, &BCoideal::L(int(0))).unwrap());

fn picks(terms: usize) -> impl Strategy<Value = Picks> {
    prop::collection::vec((0usize..1000, -3i64..=3, 1i64..=3), 1..=terms)
}

fn b_elem(p: &Picks) -> Element {
    element_from(&B_MONOS, p)
}

fn e_elem(p: &Picks) -> Element {
    element_from(&E_MONOS, p)
}

fn hopf_cases() -> impl Strategy<Value = (bool, Picks)> {
    (any::<bool>(), picks(3))
}

fn pick(use_e: bool, p: &Picks) -> (&'static HopfAlgebra, Element) {
    if use_e {
        (&E, e_elem(p))
    } else {
        (&B, b_elem(p))
    }
}

fn degree_or_zero(h: &HopfAlgebra, x: &Element) -> usize {
    if x.is_zero() {
        0
    } else {
        h.coradical_degree(x).unwrap()
    }
}

fn words(max_len: usize, gens: usize) -> impl Strategy<Value = Vec<usize>> {
    prop::collection::vec(0..gens, 0..=max_len)
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 200, ..ProptestConfig::default() })]

    #[test]
    fn normal_form_is_idempotent(w in words(8, 4)) {
        let a = E.algebra();
        let once = a.reduce_word(&w, int(1));
        let mut twice = Element::zero();
        for (m, c) in once.terms() {
            twice.add_scaled(&a.reduce_word(&m.word(), int(1)), c);
        }
        prop_assert_eq!(once, twice);
    }

    #[test]
    fn rewrite_order_does_not_matter(w in words(7, 4), choices in prop::collection::vec(0usize..16, 64)) {
        let p = E.algebra().presentation();
        let mut k = 0;
        let random = reduce_word_with(p, &w, int(1), |_, descents| {
            k += 1;
            choices[k % choices.len()] % descents.len()
        });
        let rightmost = reduce_word_with(p, &w, int(1), |_, descents| descents.len() - 1);
        let leftmost = E.algebra().reduce_word(&w, int(1));
        prop_assert_eq!(&random, &leftmost);
        prop_assert_eq!(&rightmost, &leftmost);
    }

    #[test]
    fn multiplication_is_associative(a in picks(2), b in picks(2), c in picks(2)) {
        let monos = augmented(B.weights(), 6);
        let (a, b, c) = (element_from(&monos, &a), element_from(&monos, &b), element_from(&monos, &c));
        let alg = B.algebra();
        prop_assert_eq!(alg.mul(&alg.mul(&a, &b), &c), alg.mul(&a, &alg.mul(&b, &c)));
    }

    #[test]
    fn weights_add_under_multiplication((use_e, a) in hopf_cases(), b in picks(3)) {
        let (h, a) = pick(use_e, &a);
        let b = if use_e { e_elem(&b) } else { b_elem(&b) };
        prop_assume!(!a.is_zero() && !b.is_zero());
        let ab = h.mul(&a, &b);
        let wa = a.weight().finite().unwrap();
        let wb = b.weight().finite().unwrap();
        // The associated graded algebra is a polynomial ring, so leading
        // monomials always multiply to a nonzero ordered monomial.
        prop_assert_eq!(ab.weight().finite(), Some(wa + wb));
    }

    #[test]
    fn leg_maps_commute(a in picks(2), b in picks(2), c in picks(2)) {
        let t = TensorElement::from_legs(&[&b_elem(&a), &b_elem(&b), &b_elem(&c)]);
        let s = |m: &Monomial| B.antipode(&Element::monomial(m.clone()));
        let sq = |m: &Monomial| Ok(B.mul(&Element::monomial(m.clone()), &Element::monomial(m.clone())));
        let one = t.map_leg(0, s).unwrap().map_leg(2, sq).unwrap();
        let two = t.map_leg(2, sq).unwrap().map_leg(0, s).unwrap();
        prop_assert_eq!(one, two);
    }

    #[test]
    fn tensor_multiplication_is_associative(a in picks(2), b in picks(2), c in picks(2)) {
        let alg = B.algebra();
        let (da, db, dc) = (B.coproduct(&b_elem(&a)), B.coproduct(&b_elem(&b)), B.coproduct(&b_elem(&c)));
        let left = tensor_multiply(alg, &tensor_multiply(alg, &da, &db).unwrap(), &dc).unwrap();
        let right = tensor_multiply(alg, &da, &tensor_multiply(alg, &db, &dc).unwrap()).unwrap();
        prop_assert_eq!(&left, &right);
        let unit = TensorElement::unit(2, alg.len());
        prop_assert_eq!(tensor_multiply(alg, &unit, &da).unwrap(), da);
    }

    #[test]
    fn coproduct_is_multiplicative((use_e, a) in hopf_cases(), b in picks(3)) {
        let (h, a) = pick(use_e, &a);
        let b = if use_e { e_elem(&b) } else { b_elem(&b) };
        let lhs = h.coproduct(&h.mul(&a, &b));
        let rhs = tensor_multiply(h.algebra(), &h.coproduct(&a), &h.coproduct(&b)).unwrap();
        prop_assert_eq!(&lhs, &rhs);
        prop_assert_eq!(contract(h.algebra(), &lhs).unwrap(), contract(h.algebra(), &rhs).unwrap());
    }

    #[test]
    fn coproduct_is_coassociative((use_e, a) in hopf_cases()) {
        let (h, a) = pick(use_e, &a);
        let d = h.coproduct(&a);
        let delta = |m: &Monomial| Ok(h.coproduct(&Element::monomial(m.clone())));
        prop_assert_eq!(d.apply_to_leg(0, delta).unwrap(), d.apply_to_leg(1, delta).unwrap());
    }

    #[test]
    fn convolution_identities((use_e, a) in hopf_cases()) {
        let (h, a) = pick(use_e, &a);
        let d = h.coproduct(&a);
        let s = |m: &Monomial| h.antipode(&Element::monomial(m.clone()));
        let expected = h.one().scaled(&h.counit(&a));
        prop_assert_eq!(contract(h.algebra(), &d.map_leg(0, s).unwrap()).unwrap(), expected.clone());
        prop_assert_eq!(contract(h.algebra(), &d.map_leg(1, s).unwrap()).unwrap(), expected);
    }

    #[test]
    fn counit_identities((use_e, a) in hopf_cases()) {
        let (h, a) = pick(use_e, &a);
        let d = h.coproduct(&a);
        let eps = |m: &Monomial| Ok(h.counit(&Element::monomial(m.clone())));
        prop_assert_eq!(d.evaluate_leg(0, eps).unwrap().into_element().unwrap(), a.clone());
        prop_assert_eq!(d.evaluate_leg(1, eps).unwrap().into_element().unwrap(), a);
    }

    #[test]
    fn coradical_degree_is_submultiplicative((use_e, a) in hopf_cases(), b in picks(2)) {
        let (h, a) = pick(use_e, &a);
        let b = if use_e { e_elem(&b) } else { b_elem(&b) };
        prop_assume!(!a.is_zero() && !b.is_zero());
        let ab = h.mul(&a, &b);
        prop_assert!(degree_or_zero(h, &ab) <= degree_or_zero(h, &a) + degree_or_zero(h, &b));
    }

    #[test]
    fn coradical_degree_is_weight_of_homogeneous_top((use_e, a) in hopf_cases()) {
        let (h, a) = pick(use_e, &a);
        prop_assume!(!a.is_zero());
        prop_assert_eq!(degree_or_zero(h, &a), a.weight().finite().unwrap() as usize);
    }

    #[test]
    fn antipode_preserves_degree((use_e, a) in hopf_cases()) {
        let (h, a) = pick(use_e, &a);
        prop_assume!(!a.is_zero());
        prop_assert_eq!(degree_or_zero(h, &h.antipode(&a).unwrap()), degree_or_zero(h, &a));
    }

    #[test]
    fn antipode_is_triangular((use_e, a) in hopf_cases()) {
        let (h, a) = pick(use_e, &a);
        prop_assume!(!a.is_zero());
        let n = degree_or_zero(h, &a);
        let sa = h.antipode(&a).unwrap();
        let half = Scalar::new(1.into(), 2.into());
        let even = (&a + &sa).scaled(&half);
        let odd = (&a - &sa).scaled(&half);
        let even_drop = &h.antipode(&even).unwrap() - &even;
        let odd_drop = &h.antipode(&odd).unwrap() + &odd;
        prop_assert!(even_drop.is_zero() || degree_or_zero(h, &even_drop) < n);
        prop_assert!(odd_drop.is_zero() || degree_or_zero(h, &odd_drop) < n);
        let s2 = &h.antipode_power(&a, 2).unwrap() - &a;
        prop_assert!(s2.is_zero() || degree_or_zero(h, &s2) < n);
    }

    #[test]
    fn antipode_inverse_round_trip((use_e, a) in hopf_cases()) {
        let (h, a) = pick(use_e, &a);
        let sa = h.antipode(&a).unwrap();
        prop_assert_eq!(h.antipode_inverse(&sa).unwrap(), a.clone());
        prop_assert_eq!(h.antipode(&h.antipode_inverse(&a).unwrap()).unwrap(), a);
    }

    #[test]
    fn antipode_is_antimultiplicative(a in picks(2), b in picks(2)) {
        let (a, b) = (b_elem(&a), b_elem(&b));
        let lhs = B.antipode(&B.mul(&a, &b)).unwrap();
        let rhs = B.mul(&B.antipode(&b).unwrap(), &B.antipode(&a).unwrap());
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn windings_are_endomorphisms(a in picks(2), b in picks(2), x in -3i64..=3, left in any::<bool>()) {
        let chi = Character::new(vec![int(x), int(0), int(0)]);
        let side = if left { Side::Left } else { Side::Right };
        let (a, b) = (b_elem(&a), b_elem(&b));
        let tau = |v: &Element| winding(&WHOLE, &chi, v, side).unwrap();
        prop_assert_eq!(tau(&B.mul(&a, &b)), B.mul(&tau(&a), &tau(&b)));
    }

    #[test]
    fn winding_by_convolution_inverse_undoes(a in picks(3), x in -3i64..=3) {
        let chi = Character::new(vec![int(x), int(0), int(0)]);
        let inv = convolution_inverse(&WHOLE, &chi).unwrap();
        let a = b_elem(&a);
        let there = winding(&WHOLE, &chi, &a, Side::Left).unwrap();
        prop_assert_eq!(winding(&WHOLE, &inv, &there, Side::Left).unwrap(), a);
    }

    #[test]
    fn windings_on_a_hopf_subalgebra(a in picks(2), b in picks(2), x in -3i64..=3) {
        let chi = Character::new(vec![int(0), int(x)]);
        let monos = augmented(L0.weights(), 4);
        let (a, b) = (L0.image(&element_from(&monos, &a)), L0.image(&element_from(&monos, &b)));
        let tau = |v: &Element| winding(&L0, &chi, v, Side::Left).unwrap();
        let ab = tau(&L0.algebra().one());
        prop_assert_eq!(ab, B.one());
        prop_assert_eq!(tau(&B.mul(&a, &b)), B.mul(&tau(&a), &tau(&b)));
        prop_assert!(L0.contains(&tau(&a)).unwrap());
    }
}

#[test]
fn certificate_matches_hilbert_series() {
    let u = enveloping(&sl2_lie()).unwrap();
    for h in [&**B, &*E, &u] {
        let cert = h.require_filtration().unwrap();
        let n = cert.truncation() as usize;
        let series = hilbert_series(&signature(h).unwrap(), n);
        for (d, dim) in cert.graded_dims().iter().enumerate() {
            assert_eq!(*dim, monomials_of_weight(h.weights(), d as u32).len());
            assert_eq!(Scalar::from_integer((*dim as i64).into()), *series.coeff(d));
        }
        let sig = signature(h).unwrap();
        assert_eq!(sig.total(), h.weights().iter().map(|&w| w as u64).sum::<u64>());
    }
}

#[test]
fn convolution_inverse_is_character_composed_with_antipode() {
    let chi = Character::new(vec![int(2), int(0), int(0)]);
    let inv = convolution_inverse(&WHOLE, &chi).unwrap();
    assert_eq!(inv.values()[0], int(-2));
    assert!(inv.values()[1..].iter().all(Scalar::is_zero));
}
