#![allow(dead_code)]

use hopfforge::element::Element;
use hopfforge::monomial::{monomials_up_to, Monomial};
use hopfforge::scalar::{ratio, Scalar};
use rand::Rng;

/// Term picks `(monomial index, numerator, denominator)`.
pub type Picks = Vec<(usize, i64, i64)>;

pub fn element_from(monos: &[Monomial], picks: &Picks) -> Element {
    let mut out = Element::zero();
    for &(k, num, den) in picks {
        out.add_term(monos[k % monos.len()].clone(), ratio(num, den));
    }
    out
}

/// Non-identity monomials of weight at most `max`.
pub fn augmented(weights: &[u32], max: u32) -> Vec<Monomial> {
    monomials_up_to(weights, max).into_iter().filter(|m| !m.is_identity()).collect()
}

pub fn random_picks<R: Rng>(rng: &mut R, monos: usize, terms: usize) -> Picks {
    let n = rng.gen_range(1..=terms);
    (0..n)
        .map(|_| (rng.gen_range(0..monos), rng.gen_range(-3..=3), rng.gen_range(1..=3)))
        .collect()
}

pub fn random_element<R: Rng>(rng: &mut R, monos: &[Monomial], terms: usize) -> Element {
    element_from(monos, &random_picks(rng, monos.len(), terms))
}

pub fn random_scalar<R: Rng>(rng: &mut R) -> Scalar {
    ratio(rng.gen_range(-4..=4), rng.gen_range(1..=4))
}
