//! Subalgebras of a Hopf algebra given with their own presentation and an
//! embedding, certified up to the host's truncation order. Coideal tests,
//! antipode images, containment and coinvariants.

use std::collections::BTreeMap;
use std::fmt;
use std::sync::{Arc, RwLock};

use num_traits::{One, Zero};

use crate::algebra::{Algebra, Presentation};
use crate::element::Element;
use crate::error::{Error, Result};
use crate::graded::Signature;
use crate::hopf::{s_squared_on, HopfAlgebra, SquaredAntipode};
use crate::linalg::{kernel, Echelon, Inserted, SparseVec};
use crate::memo::Memo;
use crate::monomial::{monomials_of_weight, monomials_up_to, Monomial, Weight};
use crate::scalar::Scalar;
use crate::tensor::TensorElement;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Side {
    Left,
    Right,
    /// Declared to be a Hopf subalgebra: a coideal on both sides.
    Hopf,
}

impl Side {
    pub fn opposite(self) -> Side {
        match self {
            Side::Left => Side::Right,
            Side::Right => Side::Left,
            Side::Hopf => Side::Hopf,
        }
    }
}

impl fmt::Display for Side {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Side::Left => "left",
            Side::Right => "right",
            Side::Hopf => "hopf",
        })
    }
}

impl std::str::FromStr for Side {
    type Err = Error;
    fn from_str(s: &str) -> Result<Side> {
        match s {
            "left" => Ok(Side::Left),
            "right" => Ok(Side::Right),
            "hopf" => Ok(Side::Hopf),
            _ => Err(Error::Parse(format!("unknown side `{s}` (expected left, right or hopf)"))),
        }
    }
}

/// A candidate subalgebra: its own presentation, the images of its
/// generators in the host, and the declared side.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SubalgebraSpec {
    name: String,
    presentation: Presentation,
    images: Vec<Element>,
    side: Side,
}

impl SubalgebraSpec {
    pub fn new(name: &str, presentation: Presentation, images: Vec<Element>, side: Side) -> Result<Self> {
        if images.len() != presentation.len() {
            return Err(Error::Presentation(format!(
                "subalgebra {name}: {} images for {} generators",
                images.len(),
                presentation.len()
            )));
        }
        Ok(SubalgebraSpec {
            name: name.to_string(),
            presentation,
            images,
            side,
        })
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn presentation(&self) -> &Presentation {
        &self.presentation
    }

    pub fn images(&self) -> &[Element] {
        &self.images
    }

    pub fn side(&self) -> Side {
        self.side
    }
}

/// Images of the normal monomials of `T` up to some weight, in echelon
/// form for membership and preimage solving.
#[derive(Clone, Debug, Default)]
struct Span {
    weight: u32,
    monos: Vec<Monomial>,
    echelon: Echelon<Monomial>,
}

/// Grows on demand past the truncation order.
#[derive(Debug, Default)]
struct SpanCell(RwLock<Span>);

impl Clone for SpanCell {
    fn clone(&self) -> Self {
        SpanCell(RwLock::new(self.0.read().expect("span lock").clone()))
    }
}

/// A registered subalgebra: the embedding is a homomorphism, injective on
/// monomials of weight up to the truncation, and weight-preserving.
/// Membership questions above the truncation extend the span weight by
/// weight and fail if injectivity breaks there.
#[derive(Clone, Debug)]
pub struct Subalgebra {
    host: Arc<HopfAlgebra>,
    spec: SubalgebraSpec,
    algebra: Algebra,
    truncation: u32,
    span: SpanCell,
    images: Memo<Monomial, Element>,
}

impl Subalgebra {
    /// Checks that each generator's weight is the coradical degree of its
    /// image, that relations map to zero, and that images of normal
    /// monomials of weight `≤ N` are independent.
    pub fn register(host: Arc<HopfAlgebra>, spec: SubalgebraSpec) -> Result<Self> {
        let truncation = host.require_filtration()?.truncation();
        let n_host = host.len();
        let names = spec.presentation.names().to_vec();
        for (i, u) in spec.images.iter().enumerate() {
            if u.terms().any(|(m, _)| m.len() != n_host) {
                return Err(Error::PresentationMismatch {
                    left: n_host,
                    right: u.terms().next().map_or(0, |(m, _)| m.len()),
                });
            }
            let name = &names[i];
            if !host.counit(u).is_zero() {
                return Err(Error::Presentation(format!(
                    "subalgebra {}: image of {name} has nonzero counit",
                    spec.name
                )));
            }
            if u.is_zero() {
                return Err(Error::DependentEmbedding {
                    name: spec.name.clone(),
                    detail: format!("{name} maps to 0"),
                });
            }
            let degree = host.coradical_degree(u)?;
            let declared = spec.presentation.weights()[i];
            if degree != declared as usize {
                return Err(Error::Reweight {
                    generator: name.clone(),
                    declared,
                    degree,
                });
            }
        }
        let algebra = Algebra::new(spec.presentation.clone())?;
        let sub = Subalgebra {
            host,
            algebra,
            truncation,
            span: SpanCell::default(),
            images: Memo::new(),
            spec,
        };
        for (j, i, p) in sub.spec.presentation.pairs() {
            let (uj, ui) = (&sub.spec.images[j], &sub.spec.images[i]);
            let defect = &sub.host.algebra().commutator(uj, ui) - &sub.image(&p);
            if !defect.is_zero() {
                return Err(Error::NotHomomorphism {
                    name: sub.spec.name.clone(),
                    a: names[j].clone(),
                    b: names[i].clone(),
                });
            }
        }
        sub.extend_span(truncation)?;
        Ok(sub)
    }

    /// The host itself, generated by its own generators.
    pub fn whole(host: Arc<HopfAlgebra>) -> Result<Self> {
        let p = host.algebra().presentation().clone();
        let images = (0..host.len()).map(|i| host.generator(i)).collect();
        let spec = SubalgebraSpec::new("H", p, images, Side::Hopf)?;
        Subalgebra::register(host, spec)
    }

    /// The base field.
    pub fn trivial(host: Arc<HopfAlgebra>) -> Result<Self> {
        let p = Presentation::new(std::iter::empty::<(String, u32)>())?;
        let spec = SubalgebraSpec::new("k", p, Vec::new(), Side::Hopf)?;
        Subalgebra::register(host, spec)
    }

    pub fn host(&self) -> &Arc<HopfAlgebra> {
        &self.host
    }

    pub fn spec(&self) -> &SubalgebraSpec {
        &self.spec
    }

    pub fn name(&self) -> &str {
        &self.spec.name
    }

    pub fn side(&self) -> Side {
        self.spec.side
    }

    /// `T`'s own algebra.
    pub fn algebra(&self) -> &Algebra {
        &self.algebra
    }

    pub fn names(&self) -> &[String] {
        self.algebra.names()
    }

    pub fn weights(&self) -> &[u32] {
        self.algebra.weights()
    }

    pub fn len(&self) -> usize {
        self.algebra.len()
    }

    pub fn is_empty(&self) -> bool {
        self.algebra.is_empty()
    }

    pub fn truncation(&self) -> u32 {
        self.truncation
    }

    /// Image of the `i`-th generator in the host.
    pub fn generator_image(&self, i: usize) -> &Element {
        &self.spec.images[i]
    }

    fn image_monomial(&self, m: &Monomial) -> Element {
        let Some(j) = m.last_index() else {
            return self.host.one();
        };
        if let Some(hit) = self.images.get(m) {
            return hit;
        }
        let prefix = m.bumped(j, -1, self.spec.presentation.weights());
        let out = self.host.mul(&self.image_monomial(&prefix), &self.spec.images[j]);
        self.images.put(m.clone(), out.clone());
        out
    }

    /// Embeds an element of `T` into the host.
    pub fn image(&self, x: &Element) -> Element {
        let mut out = Element::zero();
        for (m, c) in x.terms() {
            out.add_scaled(&self.image_monomial(m), c);
        }
        out
    }

    /// Adds the images of `T`-monomials of each weight up to `weight`.
    fn extend_span(&self, weight: u32) -> Result<()> {
        let covered = |s: &Span| !s.monos.is_empty() && s.weight >= weight;
        if covered(&self.span.0.read().expect("span lock")) {
            return Ok(());
        }
        let mut span = self.span.0.write().expect("span lock");
        if covered(&span) {
            return Ok(());
        }
        let weights = self.spec.presentation.weights();
        let start = if span.monos.is_empty() { 0 } else { span.weight + 1 };
        for w in start..=weight {
            for m in monomials_of_weight(weights, w) {
                let image = self.image_monomial(&m);
                if let Inserted::Dependent(_) = span.echelon.insert(image.into_terms()) {
                    return Err(Error::DependentEmbedding {
                        name: self.spec.name.clone(),
                        detail: format!(
                            "image of {} lies in the span of smaller monomials",
                            m.display(self.spec.presentation.names())
                        ),
                    });
                }
                span.monos.push(m);
            }
            span.weight = w;
        }
        Ok(())
    }

    fn ensure_weight(&self, x: &Element) -> Result<()> {
        match x.weight() {
            Weight::Finite(w) if w > self.truncation => self.extend_span(w),
            _ => Ok(()),
        }
    }

    /// The element of `T` mapping to `x`, if `x` lies in `T`.
    pub fn preimage(&self, x: &Element) -> Result<Option<Element>> {
        self.ensure_weight(x)?;
        let span = self.span.0.read().expect("span lock");
        Ok(span.echelon.solve(x.as_map()).map(|combo| {
            Element::from_terms(combo.into_iter().map(|(j, c)| (span.monos[j].clone(), c)))
        }))
    }

    /// Membership of a host element in `T`.
    pub fn contains(&self, x: &Element) -> Result<bool> {
        self.ensure_weight(x)?;
        Ok(self.span.0.read().expect("span lock").echelon.contains(x.as_map()))
    }

    /// Host element shown in `T`'s generators when it lies in `T`.
    pub fn show(&self, x: &Element) -> String {
        match self.preimage(x) {
            Ok(Some(t)) => self.algebra.show(&t),
            _ => self.host.show(x),
        }
    }

    /// Tests `Δ(T) ⊆ H⊗T` (left) or `Δ(T) ⊆ T⊗H` (right) on generators.
    pub fn coideal_check(&self, side: Side) -> Result<CoidealReport> {
        let sides: &[Side] = match side {
            Side::Hopf => &[Side::Left, Side::Right],
            Side::Left => &[Side::Left],
            Side::Right => &[Side::Right],
        };
        for &s in sides {
            for (i, u) in self.spec.images.iter().enumerate() {
                let d = self.host.coproduct(u);
                // Leg that must lie in T, grouped by the other leg.
                let (inner, outer) = if s == Side::Left { (1, 0) } else { (0, 1) };
                let mut groups: BTreeMap<&Monomial, Element> = BTreeMap::new();
                for (legs, c) in d.terms() {
                    groups
                        .entry(&legs[outer])
                        .or_default()
                        .add_term(legs[inner].clone(), c.clone());
                }
                for (other, combo) in groups {
                    if !self.contains(&combo)? {
                        let o = Element::monomial(other.clone());
                        let term = if s == Side::Left {
                            TensorElement::from_legs(&[&o, &combo])
                        } else {
                            TensorElement::from_legs(&[&combo, &o])
                        };
                        return Ok(CoidealReport {
                            side,
                            violation: Some(CoidealViolation {
                                generator: self.names()[i].clone(),
                                side: s,
                                term: self.host.show_tensor(&term),
                            }),
                        });
                    }
                }
            }
        }
        Ok(CoidealReport { side, violation: None })
    }

    /// `S(T)`, presented on generators `S(tᵢ)` with `[S(t_j), S(t_i)] =
    /// -S(P_ji)` rewritten in the new generators. Sides swap.
    pub fn antipode_image(&self) -> Result<Subalgebra> {
        let images: Vec<Element> = self
            .spec
            .images
            .iter()
            .map(|u| self.host.antipode(u))
            .collect::<Result<_>>()?;
        let p = &self.spec.presentation;
        let mut q = Presentation::new(p.names().iter().cloned().zip(p.weights().iter().copied()))?;
        let max_rel = p
            .relations()
            .filter_map(|(_, _, v)| v.weight().finite())
            .max()
            .unwrap_or(0);
        let monos = monomials_up_to(p.weights(), max_rel);
        let mut span: Echelon<Monomial> = Echelon::new();
        for m in &monos {
            let mut acc = self.host.one();
            for g in m.word() {
                acc = self.host.mul(&acc, &images[g]);
            }
            span.insert(acc.into_terms());
        }
        for (j, i, v) in p.relations() {
            let target = -&self.host.antipode(&self.image(v))?;
            let combo = span.solve(target.as_map()).ok_or_else(|| {
                Error::CoidealViolation(format!(
                    "S([{}, {}]) is not expressible in the antipode image of {}",
                    p.names()[i],
                    p.names()[j],
                    self.name()
                ))
            })?;
            let value = Element::from_terms(combo.into_iter().map(|(k, c)| (monos[k].clone(), c)));
            q.set_commutator(j, i, value)?;
        }
        let spec = SubalgebraSpec::new(&format!("S({})", self.name()), q, images, self.side().opposite())?;
        Subalgebra::register(self.host.clone(), spec)
    }

    /// Every generator of `other` lies in `self`.
    pub fn contains_subalgebra(&self, other: &Subalgebra) -> Result<bool> {
        for u in &other.spec.images {
            if !self.contains(u)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Same subalgebra of the host, by mutual containment.
    pub fn same_span(&self, other: &Subalgebra) -> Result<bool> {
        Ok(self.contains_subalgebra(other)? && other.contains_subalgebra(self)?)
    }

    /// `S(tᵢ) ∈ T` for every generator.
    pub fn is_hopf_subalgebra(&self) -> Result<bool> {
        for u in &self.spec.images {
            if !self.contains(&self.host.antipode(u)?)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    pub fn signature(&self) -> Signature {
        Signature::from_degrees(self.weights().iter().copied())
    }

    /// Number of PBW generators.
    pub fn gk_dimension(&self) -> usize {
        self.len()
    }

    /// A nonzero primitive element of the host lying in `T`.
    pub fn primitive(&self) -> Result<Element> {
        if self.is_empty() {
            return Err(Error::Presentation(format!("{} is the base field", self.name())));
        }
        let monos: Vec<Monomial> = monomials_up_to(self.weights(), self.truncation)
            .into_iter()
            .filter(|m| !m.is_identity())
            .collect();
        let images: Vec<Element> = monos.iter().map(|m| self.image_monomial(m)).collect();
        let reduced = images
            .iter()
            .map(|u| self.host.reduced_coproduct(u).map(|t| t.as_map().clone()))
            .collect::<Result<Vec<_>>>()?;
        let combo = kernel(reduced)
            .into_iter()
            .next()
            .ok_or_else(|| Error::Internal(format!("{} has no nonzero primitive", self.name())))?;
        let mut out = Element::zero();
        for (k, c) in combo {
            out.add_scaled(&images[k], &c);
        }
        Ok(out)
    }

    /// `S²` on the generators of `T`, after checking `S²(T) ⊆ T`.
    pub fn s_squared_analysis(&self) -> Result<SquaredAntipode> {
        for (i, u) in self.spec.images.iter().enumerate() {
            let s2 = self.host.antipode_power(u, 2)?;
            if !self.contains(&s2)? {
                return Err(Error::CoidealViolation(format!(
                    "S^2({}) = {} is not in {}",
                    self.names()[i],
                    self.host.show(&s2),
                    self.name()
                )));
            }
        }
        s_squared_on(&self.host, &self.spec.images)
    }

    /// Basis of the coinvariants of `π: H → H/T⁺H` (left coideal) or
    /// `H → H/HT⁺` (right coideal) among elements of weight `≤ cutoff`.
    pub fn coinvariants(&self, cutoff: u32) -> Result<Vec<Element>> {
        if cutoff > self.truncation {
            return Err(Error::BeyondTruncation {
                weight: cutoff,
                truncation: self.truncation,
            });
        }
        let right = self.side() == Side::Right;
        let host_monos = monomials_up_to(self.host.weights(), cutoff);
        let mut ideal: Echelon<Monomial> = Echelon::new();
        for u in &self.spec.images {
            let w = u.weight().finite().unwrap_or(0);
            for m in host_monos.iter().filter(|m| m.weight() + w <= cutoff) {
                let m = Element::monomial(m.clone());
                let prod = if right { self.host.mul(&m, u) } else { self.host.mul(u, &m) };
                ideal.insert(prod.into_terms());
            }
        }
        let one = Monomial::identity(self.host.len());
        let pi_one = ideal.remainder(&SparseVec::from([(one, Scalar::one())]));
        let mut images = Vec::with_capacity(host_monos.len());
        for m in &host_monos {
            let mut v: SparseVec<(Monomial, Monomial)> = SparseVec::new();
            for (legs, c) in self.host.coproduct(&Element::monomial(m.clone())).terms() {
                let (kept, projected) = if right { (&legs[1], &legs[0]) } else { (&legs[0], &legs[1]) };
                let rem = ideal.remainder(&SparseVec::from([(projected.clone(), Scalar::one())]));
                for (r, d) in rem {
                    bump(&mut v, (kept.clone(), r), c * d);
                }
            }
            for (r, d) in &pi_one {
                bump(&mut v, (m.clone(), r.clone()), -d.clone());
            }
            images.push(v);
        }
        Ok(kernel(images)
            .into_iter()
            .map(|combo| Element::from_terms(combo.into_iter().map(|(k, c)| (host_monos[k].clone(), c))))
            .collect())
    }
}

fn bump<K: Ord>(v: &mut SparseVec<K>, key: K, c: Scalar) {
    let e = v.entry(key).or_insert_with(Scalar::zero);
    *e += c;
    if e.is_zero() {
        v.retain(|_, c| !c.is_zero());
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoidealViolation {
    pub generator: String,
    pub side: Side,
    /// Part of the generator's coproduct whose required leg is not in `T`.
    pub term: String,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoidealReport {
    pub side: Side,
    pub violation: Option<CoidealViolation>,
}

impl CoidealReport {
    pub fn passed(&self) -> bool {
        self.violation.is_none()
    }
}

impl fmt::Display for CoidealReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.violation {
            None => write!(f, "{} coideal: pass", self.side),
            Some(v) => write!(
                f,
                "{} coideal: FAIL at Delta({}), offending term {} ({} leg not in the subalgebra)",
                v.side,
                v.generator,
                v.term,
                if v.side == Side::Left { "second" } else { "first" }
            ),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ContainmentReport {
    pub contained: bool,
    pub equal: bool,
    pub gk_sub: usize,
    pub gk_super: usize,
}

impl ContainmentReport {
    pub fn proper(&self) -> bool {
        self.contained && !self.equal
    }

    /// Proper containment forces a smaller GK dimension and equal GK
    /// dimension forces equality.
    pub fn dichotomy_holds(&self) -> bool {
        if !self.contained {
            return true;
        }
        if self.equal {
            self.gk_sub == self.gk_super
        } else {
            self.gk_sub < self.gk_super
        }
    }
}

impl fmt::Display for ContainmentReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if !self.contained {
            return f.write_str("not contained");
        }
        let rel = if self.equal { "equal" } else { "proper" };
        let cmp = match self.gk_sub.cmp(&self.gk_super) {
            std::cmp::Ordering::Less => "<",
            std::cmp::Ordering::Equal => "=",
            std::cmp::Ordering::Greater => ">",
        };
        write!(f, "{rel}, gk {} {cmp} {}", self.gk_sub, self.gk_super)
    }
}

/// Compares `L ⊆ K` in a common host.
pub fn containment_check(l: &Subalgebra, k: &Subalgebra) -> Result<ContainmentReport> {
    if !Arc::ptr_eq(l.host(), k.host()) {
        return Err(Error::Presentation("containment check across different hosts".into()));
    }
    let contained = k.contains_subalgebra(l)?;
    let equal = contained && l.contains_subalgebra(k)?;
    Ok(ContainmentReport {
        contained,
        equal,
        gk_sub: l.gk_dimension(),
        gk_super: k.gk_dimension(),
    })
}
