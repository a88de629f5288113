//! From a definition file or built-in name to certified objects.

use std::sync::Arc;

use hopfforge::algebra::{Algebra, Presentation};
use hopfforge::catalog::{self, b_coideal, e_coideal, lie_by_name, BCoideal};
use hopfforge::coideal::{Subalgebra, SubalgebraSpec};
use hopfforge::element::Element;
use hopfforge::hopf::{HopfAlgebra, HopfData};
use hopfforge::lantern::GradedLieAlgebra;
use hopfforge::nakayama::{enveloping_integral_character, Character};
use hopfforge::scalar::{int, parse_scalar, Scalar};
use hopfforge::tensor::TensorElement;
use hopfforge::Result;
use num_traits::{One, Zero};

use crate::file::{DefinitionFile, GenDecl, Poly, Relation, SubBlock, TensorPoly};

/// A subalgebra recipe, registered once the host is certified.
pub enum SubSource {
    Spec(SubalgebraSpec, Option<Character>),
    BCatalog(BCoideal),
    ECoideal(Scalar, Scalar),
}

/// An uncertified host plus what to register in it.
pub struct Unbuilt {
    pub host: HopfAlgebra,
    pub subs: Vec<(String, SubSource)>,
    /// Lie algebra of an enveloping built-in.
    pub lie: Option<GradedLieAlgebra>,
}

pub struct Target {
    pub sub: Subalgebra,
    pub chi: Option<Character>,
    /// False for the whole algebra, kept only as a Nakayama target.
    pub coideal: bool,
}

fn presentation(gens: &[GenDecl], relations: &[Relation]) -> Result<Presentation> {
    let mut p = Presentation::new(gens.iter().map(|g| (g.name.clone(), g.weight)))?;
    for r in relations {
        let value = p.normal_poly(&r.value)?;
        p.set_commutator(r.a, r.b, value)?;
    }
    Ok(p)
}

fn tensor(alg: &Algebra, t: &TensorPoly) -> TensorElement {
    let mut out = TensorElement::zero(2);
    for (c, words) in t {
        let legs: Vec<Element> = words
            .iter()
            .map(|w| alg.eval_poly(&[(Scalar::one(), w.clone())]))
            .collect();
        let refs: Vec<&Element> = legs.iter().collect();
        out.add_scaled(&TensorElement::from_legs(&refs), c);
    }
    out
}

/// Adds `1⊗g` and `g⊗1` when the line leaves them out.
fn with_primitive_part(alg: &Algebra, i: usize, mut t: TensorElement) -> TensorElement {
    let one = alg.one();
    let g = alg.generator(i);
    for legs in [[&one, &g], [&g, &one]] {
        let unit = TensorElement::from_legs(&legs);
        let key: Vec<_> = unit.terms().next().expect("basis tensor").0.clone();
        if t.coefficient(&key).is_zero() {
            t = &t + &unit;
        }
    }
    t
}

fn eval(alg: &Algebra, p: &Poly) -> Element {
    alg.eval_poly(p)
}

/// Builds the algebra (termination and confluence certificates) and the
/// Hopf data. Subalgebras are only checked for syntax here.
pub fn from_file(file: &DefinitionFile) -> Result<Unbuilt> {
    let alg = Algebra::new(presentation(&file.generators, &file.relations)?)?;
    let coproducts = file
        .coproducts
        .iter()
        .enumerate()
        .map(|(i, t)| with_primitive_part(&alg, i, tensor(&alg, t)))
        .collect();
    let antipodes = file
        .antipodes
        .as_ref()
        .map(|s| s.iter().map(|p| eval(&alg, p)).collect());
    let host = HopfAlgebra::new(alg, HopfData { coproducts, antipodes })?;
    let subs = file
        .subs
        .iter()
        .map(|s| Ok((s.name.clone(), SubSource::Spec(sub_spec(&host, s)?, s.chi.clone().map(Character::new)))))
        .collect::<Result<_>>()?;
    Ok(Unbuilt { host, subs, lie: None })
}

fn sub_spec(host: &HopfAlgebra, s: &SubBlock) -> Result<SubalgebraSpec> {
    let p = presentation(&s.generators, &s.relations)?;
    let images = s.embeds.iter().map(|e| eval(host.algebra(), e)).collect();
    SubalgebraSpec::new(&s.name, p, images, s.side)
}

/// `B:λ`, `E:a,b,λ₁,λ₂` or `U:<lie>`.
pub fn from_builtin(spec: &str) -> Result<Unbuilt> {
    let host = catalog::builtin(spec)?;
    let (kind, params) = spec.split_once(':').unwrap_or((spec, ""));
    let mut subs = Vec::new();
    let mut lie = None;
    match kind {
        "B" => {
            let zero = Scalar::zero();
            for which in [
                BCoideal::G(zero.clone()),
                BCoideal::GInfinity,
                BCoideal::L(zero.clone()),
                BCoideal::L(int(1)),
                BCoideal::LInfinity,
                BCoideal::R(zero),
                BCoideal::R(int(1)),
                BCoideal::RInfinity,
            ] {
                subs.push((which.name(), SubSource::BCatalog(which)));
            }
        }
        "E" => {
            let (a, b) = match params.split(',').collect::<Vec<_>>()[..] {
                [a, b, _, _] => (parse_scalar(a)?, parse_scalar(b)?),
                _ => (int(1), int(1)),
            };
            subs.push(("T".to_string(), SubSource::ECoideal(a, b)));
        }
        "U" => lie = Some(lie_by_name(params)?),
        _ => {}
    }
    Ok(Unbuilt { host, subs, lie })
}

/// The character attached to a catalog coideal, where one is known.
fn catalog_character(which: &BCoideal) -> Option<Character> {
    (*which == BCoideal::RInfinity).then(|| Character::trivial(2))
}

pub fn register(host: &Arc<HopfAlgebra>, source: &SubSource) -> Result<Target> {
    let (sub, chi) = match source {
        SubSource::Spec(spec, chi) => (Subalgebra::register(host.clone(), spec.clone())?, chi.clone()),
        SubSource::BCatalog(which) => (b_coideal(host, which)?, catalog_character(which)),
        SubSource::ECoideal(a, b) => (e_coideal(host, a, b)?, None),
    };
    Ok(Target { sub, chi, coideal: true })
}

/// The whole enveloping algebra with its integral character.
pub fn enveloping_target(host: &Arc<HopfAlgebra>, lie: &GradedLieAlgebra) -> Result<Target> {
    let sub = Subalgebra::whole(host.clone())?;
    let chi = enveloping_integral_character(lie)?;
    Ok(Target {
        sub,
        chi: Some(chi),
        coideal: false,
    })
}
