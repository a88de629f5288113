//! Elements of tensor powers `H^{⊗k}` stored on the monomial basis.

use std::collections::btree_map::{self, Entry};
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Neg, Sub};

use num_traits::{One, Zero};

use crate::algebra::Algebra;
use crate::element::{write_terms, Element};
use crate::error::{Error, Result};
use crate::monomial::Monomial;
use crate::scalar::Scalar;

/// Sparse combination of `k`-tuples of normal monomials. The arity is data,
/// so iterated coproducts of any depth share one type.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct TensorElement {
    arity: usize,
    terms: BTreeMap<Vec<Monomial>, Scalar>,
}

impl TensorElement {
    pub fn zero(arity: usize) -> Self {
        assert!(arity >= 1, "tensor arity must be positive");
        TensorElement {
            arity,
            terms: BTreeMap::new(),
        }
    }

    pub fn basis(legs: Vec<Monomial>, c: Scalar) -> Self {
        let mut t = TensorElement::zero(legs.len());
        t.add_term(legs, c);
        t
    }

    /// `1 ⊗ ... ⊗ 1` over `len` generators.
    pub fn unit(arity: usize, len: usize) -> Self {
        TensorElement::basis(vec![Monomial::identity(len); arity], Scalar::one())
    }

    /// The arity-1 tensor with the same terms as `e`.
    pub fn from_element(e: &Element) -> Self {
        let mut t = TensorElement::zero(1);
        for (m, c) in e.terms() {
            t.add_term(vec![m.clone()], c.clone());
        }
        t
    }

    /// `a_1 ⊗ a_2 ⊗ ... ⊗ a_k` expanded on the basis.
    pub fn from_legs(legs: &[&Element]) -> Self {
        let mut acc: Vec<(Vec<Monomial>, Scalar)> = vec![(Vec::new(), Scalar::one())];
        for leg in legs {
            let mut next = Vec::with_capacity(acc.len() * leg.len());
            for (prefix, c) in &acc {
                for (m, d) in leg.terms() {
                    let mut p = prefix.clone();
                    p.push(m.clone());
                    next.push((p, c * d));
                }
            }
            acc = next;
        }
        let mut t = TensorElement::zero(legs.len());
        for (k, c) in acc {
            t.add_term(k, c);
        }
        t
    }

    pub fn arity(&self) -> usize {
        self.arity
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

    pub fn terms(&self) -> btree_map::Iter<'_, Vec<Monomial>, Scalar> {
        self.terms.iter()
    }

    pub fn as_map(&self) -> &BTreeMap<Vec<Monomial>, Scalar> {
        &self.terms
    }

    pub fn coefficient(&self, legs: &[Monomial]) -> Scalar {
        self.terms.get(legs).cloned().unwrap_or_else(Scalar::zero)
    }

    pub fn add_term(&mut self, legs: Vec<Monomial>, c: Scalar) {
        assert_eq!(legs.len(), self.arity, "tensor term arity");
        if c.is_zero() {
            return;
        }
        match self.terms.entry(legs) {
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

    pub fn add_scaled(&mut self, other: &TensorElement, c: &Scalar) {
        assert_eq!(self.arity, other.arity, "tensor arity");
        if c.is_zero() {
            return;
        }
        for (k, d) in &other.terms {
            self.add_term(k.clone(), d * c);
        }
    }

    pub fn scaled(&self, c: &Scalar) -> Self {
        let mut t = TensorElement::zero(self.arity);
        t.add_scaled(self, c);
        t
    }

    /// Keeps terms whose total leg weight equals `weight`.
    pub fn homogeneous_part(&self, weight: u32) -> Self {
        TensorElement {
            arity: self.arity,
            terms: self
                .terms
                .iter()
                .filter(|(k, _)| k.iter().map(Monomial::weight).sum::<u32>() == weight)
                .map(|(k, c)| (k.clone(), c.clone()))
                .collect(),
        }
    }

    /// Applies a tensor-valued linear map to one leg (0-based). A map with
    /// output arity `r` turns arity `k` into `k - 1 + r`.
    pub fn apply_to_leg<F>(&self, leg: usize, mut f: F) -> Result<TensorElement>
    where
        F: FnMut(&Monomial) -> Result<TensorElement>,
    {
        if leg >= self.arity {
            return Err(Error::LegOutOfRange {
                leg,
                arity: self.arity,
            });
        }
        let mut out: Option<TensorElement> = None;
        let mut images: BTreeMap<&Monomial, TensorElement> = BTreeMap::new();
        for (k, c) in &self.terms {
            let image = match images.get(&k[leg]) {
                Some(t) => t.clone(),
                None => {
                    let t = f(&k[leg])?;
                    images.insert(&k[leg], t.clone());
                    t
                }
            };
            let acc = out.get_or_insert_with(|| TensorElement::zero(self.arity - 1 + image.arity));
            if acc.arity != self.arity - 1 + image.arity {
                return Err(Error::Arity {
                    expected: acc.arity,
                    found: self.arity - 1 + image.arity,
                });
            }
            for (ik, d) in &image.terms {
                let mut legs = Vec::with_capacity(acc.arity);
                legs.extend_from_slice(&k[..leg]);
                legs.extend(ik.iter().cloned());
                legs.extend_from_slice(&k[leg + 1..]);
                acc.add_term(legs, c * d);
            }
        }
        // An empty input keeps its arity when the map's arity is unknown.
        Ok(out.unwrap_or_else(|| TensorElement::zero(self.arity)))
    }

    /// Applies an element-valued linear map to one leg (0-based).
    pub fn map_leg<F>(&self, leg: usize, mut f: F) -> Result<TensorElement>
    where
        F: FnMut(&Monomial) -> Result<Element>,
    {
        self.apply_to_leg(leg, |m| Ok(TensorElement::from_element(&f(m)?)))
    }

    /// Applies a scalar-valued linear map to one leg, removing it.
    pub fn evaluate_leg<F>(&self, leg: usize, mut f: F) -> Result<TensorElement>
    where
        F: FnMut(&Monomial) -> Result<Scalar>,
    {
        if leg >= self.arity {
            return Err(Error::LegOutOfRange {
                leg,
                arity: self.arity,
            });
        }
        if self.arity == 1 {
            return Err(Error::Arity {
                expected: 2,
                found: 1,
            });
        }
        let mut out = TensorElement::zero(self.arity - 1);
        for (k, c) in &self.terms {
            let v = f(&k[leg])?;
            if v.is_zero() {
                continue;
            }
            let mut legs = k.clone();
            legs.remove(leg);
            out.add_term(legs, c * v);
        }
        Ok(out)
    }

    /// Converts an arity-1 tensor back to an element.
    pub fn into_element(self) -> Result<Element> {
        if self.arity != 1 {
            return Err(Error::Arity {
                expected: 1,
                found: self.arity,
            });
        }
        Ok(Element::from_terms(
            self.terms.into_iter().map(|(mut k, c)| (k.remove(0), c)),
        ))
    }

    pub fn display<'a>(&'a self, names: &'a [String]) -> TensorDisplay<'a> {
        TensorDisplay { t: self, names }
    }
}

impl Add for &TensorElement {
    type Output = TensorElement;
    fn add(self, rhs: &TensorElement) -> TensorElement {
        let mut out = self.clone();
        out.add_scaled(rhs, &Scalar::one());
        out
    }
}

impl Sub for &TensorElement {
    type Output = TensorElement;
    fn sub(self, rhs: &TensorElement) -> TensorElement {
        let mut out = self.clone();
        out.add_scaled(rhs, &-Scalar::one());
        out
    }
}

impl Neg for &TensorElement {
    type Output = TensorElement;
    fn neg(self) -> TensorElement {
        self.scaled(&-Scalar::one())
    }
}

/// `(a_1 ⊗ ... ⊗ a_k)(b_1 ⊗ ... ⊗ b_k) = a_1 b_1 ⊗ ... ⊗ a_k b_k`.
pub fn tensor_multiply(alg: &Algebra, s: &TensorElement, t: &TensorElement) -> Result<TensorElement> {
    if s.arity != t.arity {
        return Err(Error::Arity {
            expected: s.arity,
            found: t.arity,
        });
    }
    let mut out = TensorElement::zero(s.arity);
    for (ks, cs) in &s.terms {
        for (kt, ct) in &t.terms {
            let legs: Vec<Element> = ks
                .iter()
                .zip(kt)
                .map(|(a, b)| alg.mul_monomials(a, b))
                .collect();
            let refs: Vec<&Element> = legs.iter().collect();
            out.add_scaled(&TensorElement::from_legs(&refs), &(cs * ct));
        }
    }
    Ok(out)
}

/// Multiplies the two legs of an arity-2 tensor.
pub fn contract(alg: &Algebra, t: &TensorElement) -> Result<Element> {
    if t.arity != 2 {
        return Err(Error::Arity {
            expected: 2,
            found: t.arity,
        });
    }
    let mut out = Element::zero();
    for (k, c) in &t.terms {
        out.add_scaled(&alg.mul_monomials(&k[0], &k[1]), c);
    }
    Ok(out)
}

/// Parses `c*A@B + ...` with `arity` legs, evaluating each leg to normal form.
pub fn parse_tensor(alg: &Algebra, text: &str, arity: usize) -> Result<TensorElement> {
    let terms = crate::expr::parse_tensor(text, alg.names(), arity).map_err(|e| Error::Parse(e.to_string()))?;
    let mut out = TensorElement::zero(arity);
    for (c, words) in terms {
        let legs: Vec<Element> = words
            .iter()
            .map(|w| alg.eval_poly(&[(Scalar::one(), w.clone())]))
            .collect();
        let refs: Vec<&Element> = legs.iter().collect();
        out.add_scaled(&TensorElement::from_legs(&refs), &c);
    }
    Ok(out)
}

pub struct TensorDisplay<'a> {
    t: &'a TensorElement,
    names: &'a [String],
}

impl fmt::Display for TensorDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let keys: Vec<&Vec<Monomial>> = self.t.terms.keys().rev().collect();
        write_terms(f, self.t.terms.iter().rev().map(|(_, c)| (c, false)), |f, i| {
            for (l, m) in keys[i].iter().enumerate() {
                if l > 0 {
                    f.write_str("@")?;
                }
                write!(f, "{}", m.display(self.names))?;
            }
            Ok(())
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::Presentation;

    fn b1() -> Algebra {
        let p = Presentation::new([("X", 1), ("Y", 1), ("Z", 2)]).unwrap();
        let y = p.parse_normal("Y").unwrap();
        let zx = p.parse_normal("-Z + Y").unwrap();
        let zy = p.parse_normal("1/2*Y^2").unwrap();
        let p = p
            .with_commutator("X", "Y", y)
            .unwrap()
            .with_commutator("Z", "X", zx)
            .unwrap()
            .with_commutator("Z", "Y", zy)
            .unwrap();
        Algebra::new(p).unwrap()
    }

    fn prim(alg: &Algebra, i: usize) -> TensorElement {
        let one = alg.one();
        let g = alg.generator(i);
        &TensorElement::from_legs(&[&one, &g]) + &TensorElement::from_legs(&[&g, &one])
    }

    #[test]
    fn multiply_primitive_coproducts() {
        let b = b1();
        let prod = tensor_multiply(&b, &prim(&b, 0), &prim(&b, 1)).unwrap();
        let one = b.one();
        let (x, y, xy) = (b.generator(0), b.generator(1), b.parse("X*Y").unwrap());
        let mut expected = TensorElement::from_legs(&[&one, &xy]);
        expected.add_scaled(&TensorElement::from_legs(&[&y, &x]), &Scalar::one());
        expected.add_scaled(&TensorElement::from_legs(&[&x, &y]), &Scalar::one());
        expected.add_scaled(&TensorElement::from_legs(&[&xy, &one]), &Scalar::one());
        assert_eq!(prod, expected);
        let unit = TensorElement::unit(2, 3);
        assert_eq!(tensor_multiply(&b, &unit, &prod).unwrap(), prod);
    }

    #[test]
    fn contract_examples() {
        let b = b1();
        let one = b.one();
        let (x, y, z) = (b.generator(0), b.generator(1), b.generator(2));
        let mut dz = TensorElement::from_legs(&[&one, &z]);
        dz.add_scaled(&TensorElement::from_legs(&[&x, &y]), &Scalar::one());
        dz.add_scaled(&TensorElement::from_legs(&[&z, &one]), &Scalar::one());
        assert_eq!(contract(&b, &dz).unwrap(), b.parse("2*Z + X*Y").unwrap());
        let a = b.parse("X^2 - Z").unwrap();
        assert_eq!(contract(&b, &TensorElement::from_legs(&[&a, &one])).unwrap(), a);
        assert!(contract(&b, &TensorElement::unit(3, 3)).is_err());
    }

    #[test]
    fn leg_maps() {
        let b = b1();
        let dx = prim(&b, 0);
        let s_applied = dx
            .map_leg(0, |m| Ok(if m.is_identity() { b.one() } else { -Element::monomial(m.clone()) }))
            .unwrap();
        assert_eq!(s_applied.display(b.names()).to_string(), "-X@1 + 1@X");
        assert_eq!(dx.map_leg(1, |m| Ok(Element::monomial(m.clone()))).unwrap(), dx);
        assert!(dx.map_leg(2, |m| Ok(Element::monomial(m.clone()))).is_err());
    }
}
