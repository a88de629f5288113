//! Characters, winding automorphisms and Nakayama automorphisms of
//! coideal subalgebras.

use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Zero};

use crate::coideal::{Side, Subalgebra};
use crate::element::Element;
use crate::error::{Error, Result};
use crate::lantern::{verify_lie, GradedLieAlgebra};
use crate::monomial::Monomial;
use crate::scalar::{format_scalar, Scalar};

/// Algebra map to the base field, given by its values on the generators
/// of the target subalgebra.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Character {
    values: Vec<Scalar>,
}

impl Character {
    pub fn new(values: Vec<Scalar>) -> Self {
        Character { values }
    }

    /// The counit.
    pub fn trivial(len: usize) -> Self {
        Character {
            values: vec![Scalar::zero(); len],
        }
    }

    pub fn values(&self) -> &[Scalar] {
        &self.values
    }

    /// Value on an element written in the target's own generators.
    pub fn eval(&self, x: &Element) -> Scalar {
        let mut out = Scalar::zero();
        for (m, c) in x.terms() {
            out += c * self.eval_monomial(m);
        }
        out
    }

    fn eval_monomial(&self, m: &Monomial) -> Scalar {
        let mut acc = Scalar::one();
        for (v, &e) in self.values.iter().zip(m.exps()) {
            for _ in 0..e {
                acc *= v;
            }
        }
        acc
    }

    /// Value on a host element lying in `t`.
    pub fn eval_in(&self, t: &Subalgebra, x: &Element) -> Result<Scalar> {
        let pre = t.preimage(x)?.ok_or_else(|| {
            Error::CoidealViolation(format!("{} is not in {}", t.host().show(x), t.name()))
        })?;
        Ok(self.eval(&pre))
    }

    pub fn describe(&self, names: &[String]) -> String {
        names
            .iter()
            .zip(&self.values)
            .map(|(n, v)| format!("chi({n}) = {}", format_scalar(v)))
            .collect::<Vec<_>>()
            .join(", ")
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct CharacterReport {
    /// Relations `[a,b]` with `χ(P) ≠ 0`, with the offending value.
    pub failures: Vec<(String, String, Scalar)>,
}

impl CharacterReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

impl fmt::Display for CharacterReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.failures.is_empty() {
            return f.write_str("character: pass");
        }
        f.write_str("character: FAIL")?;
        for (a, b, v) in &self.failures {
            write!(f, "; chi of the value of [{a},{b}] is {}, must be 0", format_scalar(v))?;
        }
        Ok(())
    }
}

/// `χ(P_ji) = 0` for every relation of the target.
pub fn verify_character(t: &Subalgebra, chi: &Character) -> Result<CharacterReport> {
    if chi.values.len() != t.len() {
        return Err(Error::Character(format!(
            "{} values for {} generators",
            chi.values.len(),
            t.len()
        )));
    }
    let names = t.names();
    let failures = t
        .algebra()
        .presentation()
        .relations()
        .filter_map(|(j, i, p)| {
            let v = chi.eval(p);
            (!v.is_zero()).then(|| (names[j].clone(), names[i].clone(), v))
        })
        .collect();
    Ok(CharacterReport { failures })
}

fn require_character(t: &Subalgebra, chi: &Character) -> Result<()> {
    let report = verify_character(t, chi)?;
    if report.passed() {
        Ok(())
    } else {
        Err(Error::Character(report.to_string()))
    }
}

/// Winding map: `Σ χ(x₁)x₂` (left) or `Σ x₁χ(x₂)` (right). The character
/// lives on `t`, so the evaluated legs are grouped and must lie in `t`.
pub fn winding(t: &Subalgebra, chi: &Character, x: &Element, side: Side) -> Result<Element> {
    require_character(t, chi)?;
    let (eval_leg, keep_leg) = match side {
        Side::Left => (0, 1),
        Side::Right => (1, 0),
        Side::Hopf => return Err(Error::Character("winding needs side left or right".into())),
    };
    let d = t.host().coproduct(x);
    let mut groups: BTreeMap<&Monomial, Element> = BTreeMap::new();
    for (legs, c) in d.terms() {
        groups
            .entry(&legs[keep_leg])
            .or_default()
            .add_term(legs[eval_leg].clone(), c.clone());
    }
    let mut out = Element::zero();
    for (kept, combo) in groups {
        let v = chi.eval_in(t, &combo)?;
        out.add_term(kept.clone(), v);
    }
    Ok(out)
}

/// Convolution inverse `χ∘S`, for targets stable under `S`.
pub fn convolution_inverse(t: &Subalgebra, chi: &Character) -> Result<Character> {
    let values = (0..t.len())
        .map(|i| {
            let s = t.host().antipode(t.generator_image(i))?;
            chi.eval_in(t, &s)
        })
        .collect::<Result<_>>()?;
    Ok(Character { values })
}

/// Algebra endomorphism of a subalgebra, given on generators in the
/// subalgebra's own coordinates.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GeneratorAutomorphism {
    images: Vec<Element>,
}

impl GeneratorAutomorphism {
    /// Checks that the images satisfy the defining relations of `t`.
    pub fn new(t: &Subalgebra, images: Vec<Element>) -> Result<Self> {
        if images.len() != t.len() {
            return Err(Error::Automorphism(format!(
                "{} images for {} generators",
                images.len(),
                t.len()
            )));
        }
        let phi = GeneratorAutomorphism { images };
        let alg = t.algebra();
        for (j, i, p) in alg.presentation().pairs() {
            let defect = &alg.commutator(&phi.images[j], &phi.images[i]) - &phi.apply(t, &p);
            if !defect.is_zero() {
                return Err(Error::Automorphism(format!(
                    "images violate the relation [{},{}]",
                    t.names()[j],
                    t.names()[i]
                )));
            }
        }
        Ok(phi)
    }

    pub fn identity(t: &Subalgebra) -> Self {
        GeneratorAutomorphism {
            images: (0..t.len()).map(|i| t.algebra().generator(i)).collect(),
        }
    }

    /// Images parsed in the subalgebra's generators.
    pub fn parse(t: &Subalgebra, images: &[&str]) -> Result<Self> {
        let images = images.iter().map(|s| t.algebra().parse(s)).collect::<Result<_>>()?;
        GeneratorAutomorphism::new(t, images)
    }

    pub fn images(&self) -> &[Element] {
        &self.images
    }

    /// Applies the map to an element in the subalgebra's coordinates.
    pub fn apply(&self, t: &Subalgebra, x: &Element) -> Element {
        let alg = t.algebra();
        let mut out = Element::zero();
        for (m, c) in x.terms() {
            let mut acc = alg.one();
            for g in m.word() {
                acc = alg.mul(&acc, &self.images[g]);
            }
            out.add_scaled(&acc, c);
        }
        out
    }

    pub fn describe(&self, t: &Subalgebra) -> String {
        t.names()
            .iter()
            .zip(&self.images)
            .map(|(n, v)| format!("{n} -> {}", t.algebra().show(v)))
            .collect::<Vec<_>>()
            .join(", ")
    }
}

fn preimage_or(t: &Subalgebra, x: &Element, what: &str) -> Result<Element> {
    t.preimage(x)?.ok_or_else(|| {
        Error::CoidealViolation(format!("{what} {} escapes {}", t.host().show(x), t.name()))
    })
}

/// `S²∘τ^ℓ_χ` on generators of a right coideal.
fn nakayama_right(t: &Subalgebra, chi: &Character) -> Result<Vec<Element>> {
    (0..t.len())
        .map(|i| {
            let w = winding(t, chi, t.generator_image(i), Side::Left)?;
            preimage_or(t, &w, "winding image")?;
            let nu = t.host().antipode_power(&w, 2)?;
            preimage_or(t, &nu, "Nakayama image")
        })
        .collect()
}

/// `S⁻²∘τ^r_χ` on generators of a left coideal.
fn nakayama_left(t: &Subalgebra, chi: &Character) -> Result<Vec<Element>> {
    let h = t.host();
    (0..t.len())
        .map(|i| {
            let w = winding(t, chi, t.generator_image(i), Side::Right)?;
            preimage_or(t, &w, "winding image")?;
            let nu = h.antipode_inverse(&h.antipode_inverse(&w)?)?;
            preimage_or(t, &nu, "Nakayama image")
        })
        .collect()
}

/// Nakayama automorphism of a coideal with integral character `χ`: from
/// `S²∘τ^ℓ_χ` for right coideals and `S⁻²∘τ^r_χ` for left ones. For Hopf
/// subalgebras both are computed and must agree.
pub fn nakayama_automorphism(t: &Subalgebra, chi: &Character) -> Result<GeneratorAutomorphism> {
    require_character(t, chi)?;
    let report = t.coideal_check(t.side())?;
    if !report.passed() {
        return Err(Error::CoidealViolation(report.to_string()));
    }
    let images = match t.side() {
        Side::Right => nakayama_right(t, chi)?,
        Side::Left => nakayama_left(t, chi)?,
        Side::Hopf => {
            let right = nakayama_right(t, chi)?;
            let left = nakayama_left(t, chi)?;
            if right != left {
                return Err(Error::Automorphism(format!(
                    "the two Nakayama formulas disagree on {}",
                    t.name()
                )));
            }
            right
        }
    };
    GeneratorAutomorphism::new(t, images)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct S4Report {
    /// `(generator, S⁴(t), τ^ℓ_{χ∘S}(τ^r_χ(t)))` in the subalgebra's
    /// coordinates.
    pub rows: Vec<(String, String, String)>,
    pub passed: bool,
}

impl fmt::Display for S4Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (g, lhs, rhs) in &self.rows {
            let rel = if lhs == rhs { "=" } else { "!=" };
            writeln!(f, "S^4({g}) = {lhs} {rel} {rhs}")?;
        }
        Ok(())
    }
}

/// Compares `S⁴` with `τ^ℓ_{χ∘S}∘τ^r_χ` on the generators of a Hopf
/// subalgebra.
pub fn s4_identity_check(t: &Subalgebra, chi: &Character) -> Result<S4Report> {
    require_character(t, chi)?;
    if !t.is_hopf_subalgebra()? {
        return Err(Error::CoidealViolation(format!("{} is not a Hopf subalgebra", t.name())));
    }
    let inv = convolution_inverse(t, chi)?;
    let h = t.host();
    let mut rows = Vec::new();
    let mut passed = true;
    for i in 0..t.len() {
        let u = t.generator_image(i);
        let lhs = h.antipode_power(u, 4)?;
        let rhs = winding(t, &inv, &winding(t, chi, u, Side::Right)?, Side::Left)?;
        passed &= lhs == rhs;
        rows.push((t.names()[i].clone(), t.show(&lhs), t.show(&rhs)));
    }
    Ok(S4Report { rows, passed })
}

/// `τ(tᵢ)·b = b·tᵢ` for every generator; `b` is a host element.
pub fn normal_element_check(t: &Subalgebra, b: &Element, tau: &GeneratorAutomorphism) -> bool {
    let h = t.host();
    (0..t.len()).all(|i| {
        let lhs = h.mul(&t.image(&tau.images()[i]), b);
        let rhs = h.mul(b, t.generator_image(i));
        lhs == rhs
    })
}

/// `χ(x) = trace(ad x)` on the basis of a Lie algebra.
pub fn enveloping_integral_character(lie: &GradedLieAlgebra) -> Result<Character> {
    let report = verify_lie(lie);
    if !report.jacobi_failures.is_empty() {
        return Err(Error::Lie(format!("Jacobi fails on {:?}", report.jacobi_failures)));
    }
    let values = (0..lie.dim())
        .map(|a| (0..lie.dim()).map(|b| lie.constant(a, b, b)).sum())
        .collect();
    Ok(Character { values })
}
