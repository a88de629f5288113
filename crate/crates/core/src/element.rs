//! Sparse linear combinations of normal monomials.

use std::collections::btree_map::{self, Entry};
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Neg, Sub};

use num_traits::{One, Zero};

use crate::monomial::{Monomial, Weight};
use crate::scalar::{format_scalar, is_negative, Scalar};

/// An element of a presented algebra, as a map from normal monomials to
/// nonzero coefficients. Iteration is in monomial order, so equality is
/// structural.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Element {
    terms: BTreeMap<Monomial, Scalar>,
}

impl Element {
    pub fn zero() -> Self {
        Element::default()
    }

    pub fn scalar(c: Scalar, len: usize) -> Self {
        Element::term(Monomial::identity(len), c)
    }

    pub fn one(len: usize) -> Self {
        Element::scalar(Scalar::one(), len)
    }

    pub fn monomial(m: Monomial) -> Self {
        Element::term(m, Scalar::one())
    }

    pub fn term(m: Monomial, c: Scalar) -> Self {
        let mut e = Element::zero();
        e.add_term(m, c);
        e
    }

    pub fn from_terms<I: IntoIterator<Item = (Monomial, Scalar)>>(terms: I) -> Self {
        let mut e = Element::zero();
        for (m, c) in terms {
            e.add_term(m, c);
        }
        e
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> btree_map::Iter<'_, Monomial, Scalar> {
        self.terms.iter()
    }

    pub fn into_terms(self) -> BTreeMap<Monomial, Scalar> {
        self.terms
    }

    pub fn as_map(&self) -> &BTreeMap<Monomial, Scalar> {
        &self.terms
    }

    pub fn coefficient(&self, m: &Monomial) -> Scalar {
        self.terms.get(m).cloned().unwrap_or_else(Scalar::zero)
    }

    /// Coefficient of the identity monomial.
    pub fn constant_term(&self) -> Scalar {
        self.terms
            .iter()
            .find(|(m, _)| m.is_identity())
            .map(|(_, c)| c.clone())
            .unwrap_or_else(Scalar::zero)
    }

    pub fn weight(&self) -> Weight {
        self.terms
            .keys()
            .map(|m| m.weight())
            .max()
            .map_or(Weight::NegInfinity, Weight::Finite)
    }

    /// The largest monomial in the order, if any.
    pub fn leading(&self) -> Option<(&Monomial, &Scalar)> {
        self.terms.iter().next_back()
    }

    pub fn add_term(&mut self, m: Monomial, c: Scalar) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn add_scaled(&mut self, other: &Element, c: &Scalar) {
        if c.is_zero() {
            return;
        }
        for (m, d) in &other.terms {
            self.add_term(m.clone(), d * c);
        }
    }

    pub fn scaled(&self, c: &Scalar) -> Element {
        if c.is_zero() {
            return Element::zero();
        }
        Element {
            terms: self.terms.iter().map(|(m, d)| (m.clone(), d * c)).collect(),
        }
    }

    /// Keeps only the terms of the given weight.
    pub fn homogeneous_part(&self, weight: u32) -> Element {
        Element {
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| m.weight() == weight)
                .map(|(m, c)| (m.clone(), c.clone()))
                .collect(),
        }
    }

    pub fn display<'a>(&'a self, names: &'a [String]) -> ElementDisplay<'a> {
        ElementDisplay { elem: self, names }
    }
}

impl Add for &Element {
    type Output = Element;
    fn add(self, rhs: &Element) -> Element {
        let mut out = self.clone();
        out.add_scaled(rhs, &Scalar::one());
        out
    }
}

impl Sub for &Element {
    type Output = Element;
    fn sub(self, rhs: &Element) -> Element {
        let mut out = self.clone();
        out.add_scaled(rhs, &-Scalar::one());
        out
    }
}

impl Neg for &Element {
    type Output = Element;
    fn neg(self) -> Element {
        self.scaled(&-Scalar::one())
    }
}

impl Add for Element {
    type Output = Element;
    fn add(self, rhs: Element) -> Element {
        &self + &rhs
    }
}

impl Sub for Element {
    type Output = Element;
    fn sub(self, rhs: Element) -> Element {
        &self - &rhs
    }
}

impl Neg for Element {
    type Output = Element;
    fn neg(self) -> Element {
        -&self
    }
}

pub struct ElementDisplay<'a> {
    elem: &'a Element,
    names: &'a [String],
}

/// Writes `c*m` terms, leading term first, folding signs into the
/// separators. Shared with tensor display.
pub(crate) fn write_terms<'a, I, F>(f: &mut fmt::Formatter<'_>, terms: I, mut body: F) -> fmt::Result
where
    I: Iterator<Item = (&'a Scalar, bool)>,
    F: FnMut(&mut fmt::Formatter<'_>, usize) -> fmt::Result,
{
    let mut wrote = false;
    for (idx, (c, body_is_one)) in terms.enumerate() {
        let neg = is_negative(c);
        let abs = if neg { -c.clone() } else { c.clone() };
        match (wrote, neg) {
            (false, false) => {}
            (false, true) => f.write_str("-")?,
            (true, false) => f.write_str(" + ")?,
            (true, true) => f.write_str(" - ")?,
        }
        wrote = true;
        if body_is_one {
            f.write_str(&format_scalar(&abs))?;
        } else {
            if !abs.is_one() {
                write!(f, "{}*", format_scalar(&abs))?;
            }
            body(f, idx)?;
        }
    }
    if !wrote {
        f.write_str("0")?;
    }
    Ok(())
}

impl fmt::Display for ElementDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let monos: Vec<&Monomial> = self.elem.terms.keys().rev().collect();
        write_terms(
            f,
            self.elem.terms.iter().rev().map(|(m, c)| (c, m.is_identity())),
            |f, i| write!(f, "{}", monos[i].display(self.names)),
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{int, ratio};

    fn names() -> Vec<String> {
        ["X", "Y", "Z"].iter().map(|s| s.to_string()).collect()
    }

    #[test]
    fn zero_coefficients_are_dropped() {
        let w = [1, 1, 2];
        let x = Monomial::generator(0, &w);
        let mut e = Element::term(x.clone(), int(2));
        e.add_term(x, int(-2));
        assert!(e.is_zero());
        assert_eq!(e.weight(), Weight::NegInfinity);
    }

    #[test]
    fn display_is_parseable_shape() {
        let w = [1, 1, 2];
        let e = Element::from_terms([
            (Monomial::generator(2, &w), int(-1)),
            (Monomial::new(vec![1, 1, 0], &w), int(1)),
            (Monomial::new(vec![0, 2, 0], &w), ratio(1, 2)),
            (Monomial::identity(3), int(3)),
        ]);
        assert_eq!(e.display(&names()).to_string(), "-Z + 1/2*Y^2 + X*Y + 3");
        assert_eq!(e.weight(), Weight::Finite(2));
        assert_eq!(e.constant_term(), int(3));
    }
}
