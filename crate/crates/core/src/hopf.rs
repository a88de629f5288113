//! Coproduct, counit and antipode on a presented algebra, with axiom checks,
//! reduced coproducts, coradical degrees and antipode analysis.

use std::fmt;
use std::sync::OnceLock;

use num_traits::{One, Zero};

use crate::algebra::Algebra;
use crate::element::Element;
use crate::error::{Error, Result};
use crate::graded::FiltrationCertificate;
use crate::linalg::{kernel, Echelon};
use crate::memo::Memo;
use crate::monomial::{monomials_up_to, Monomial, Weight};
use crate::scalar::Scalar;
use crate::tensor::{contract, tensor_multiply, TensorElement};

/// Coradical degrees above this are reported as an error rather than searched.
pub const DEGREE_BOUND: usize = 64;

/// Hopf data on generators: coproducts (with the `1⊗g + g⊗1` terms
/// included) and optionally antipodes. Counits are zero on generators.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HopfData {
    pub coproducts: Vec<TensorElement>,
    pub antipodes: Option<Vec<Element>>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum AxiomGroup {
    Relations,
    Coassociativity,
    Counit,
    Antipode,
}

impl fmt::Display for AxiomGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            AxiomGroup::Relations => "relations",
            AxiomGroup::Coassociativity => "coassociativity",
            AxiomGroup::Counit => "counit",
            AxiomGroup::Antipode => "antipode",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AxiomCheck {
    pub group: AxiomGroup,
    pub subject: String,
    /// `None` when the check passed, otherwise the nonzero defect.
    pub defect: Option<String>,
}

impl AxiomCheck {
    pub fn passed(&self) -> bool {
        self.defect.is_none()
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct HopfReport {
    pub checks: Vec<AxiomCheck>,
}

impl HopfReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(AxiomCheck::passed)
    }

    pub fn group_passed(&self, group: AxiomGroup) -> bool {
        self.checks.iter().filter(|c| c.group == group).all(AxiomCheck::passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &AxiomCheck> {
        self.checks.iter().filter(|c| !c.passed())
    }
}

impl fmt::Display for HopfReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for group in [
            AxiomGroup::Relations,
            AxiomGroup::Coassociativity,
            AxiomGroup::Counit,
            AxiomGroup::Antipode,
        ] {
            let total = self.checks.iter().filter(|c| c.group == group).count();
            let failed: Vec<&AxiomCheck> = self
                .checks
                .iter()
                .filter(|c| c.group == group && !c.passed())
                .collect();
            if failed.is_empty() {
                writeln!(f, "{group}: pass ({total} checks)")?;
            } else {
                writeln!(f, "{group}: FAIL ({} of {total})", failed.len())?;
                for c in failed {
                    writeln!(f, "  {}: {}", c.subject, c.defect.as_deref().unwrap_or(""))?;
                }
            }
        }
        Ok(())
    }
}

/// Outcome of comparing `S²` with the identity on generators.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SquaredAntipode {
    Identity,
    /// `S²(element) = element + shift` with `S²(shift) = shift`, so
    /// `S^{2m}(element) = element + m·shift` for all `m`.
    Infinite { element: Element, shift: Element },
}

impl SquaredAntipode {
    pub fn is_identity(&self) -> bool {
        matches!(self, SquaredAntipode::Identity)
    }

    pub fn describe(&self, names: &[String]) -> String {
        match self {
            SquaredAntipode::Identity => "identity; S^2 = id".to_string(),
            SquaredAntipode::Infinite { element, shift } => {
                let image = element + shift;
                format!(
                    "infinite; witness S^2({}) = {}",
                    element.display(names),
                    image.display(names)
                )
            }
        }
    }
}

/// A presented algebra with Hopf data and its certificates.
#[derive(Clone, Debug)]
pub struct HopfAlgebra {
    algebra: Algebra,
    coproducts: Vec<TensorElement>,
    antipodes: Option<Vec<Element>>,
    axioms: HopfReport,
    filtration: Option<FiltrationCertificate>,
    delta: Memo<Monomial, TensorElement>,
    s: Memo<Monomial, Element>,
    s_inverse: OnceLock<std::result::Result<Vec<Element>, String>>,
}

impl HopfAlgebra {
    /// Attaches Hopf data, solving for the antipode when none is given, and
    /// runs the axiom checks. Failing axioms are recorded, not raised.
    pub fn new(algebra: Algebra, data: HopfData) -> Result<Self> {
        let n = algebra.len();
        if data.coproducts.len() != n {
            return Err(Error::HopfData(format!(
                "{} coproducts for {n} generators",
                data.coproducts.len()
            )));
        }
        for (i, d) in data.coproducts.iter().enumerate() {
            let name = &algebra.names()[i];
            if d.arity() != 2 {
                return Err(Error::HopfData(format!("coproduct of {name} has arity {}", d.arity())));
            }
            if let Some((legs, _)) = d.terms().find(|(legs, _)| legs.iter().any(|m| m.len() != n)) {
                return Err(Error::HopfData(format!(
                    "coproduct of {name} has a leg over {} generators",
                    legs[0].len()
                )));
            }
            let one = Monomial::identity(n);
            let g = Monomial::generator(i, algebra.weights());
            if !d.coefficient(&[one.clone(), g.clone()]).is_one() || !d.coefficient(&[g, one]).is_one() {
                return Err(Error::HopfData(format!(
                    "coproduct of {name} must contain 1@{name} and {name}@1 with coefficient 1"
                )));
            }
        }
        if let Some(s) = &data.antipodes {
            if s.len() != n {
                return Err(Error::HopfData(format!("{} antipodes for {n} generators", s.len())));
            }
        }
        let mut h = HopfAlgebra {
            algebra,
            coproducts: data.coproducts,
            antipodes: data.antipodes,
            axioms: HopfReport::default(),
            filtration: None,
            delta: Memo::new(),
            s: Memo::new(),
            s_inverse: OnceLock::new(),
        };
        if h.antipodes.is_none() {
            h.antipodes = Some(h.solve_antipode()?);
        }
        h.axioms = h.verify_hopf();
        Ok(h)
    }

    /// [`HopfAlgebra::new`] followed by a filtration certificate to order `n`.
    /// Fails if any axiom check fails.
    pub fn certified(algebra: Algebra, data: HopfData, n: u32) -> Result<Self> {
        let mut h = HopfAlgebra::new(algebra, data)?;
        if !h.axioms.passed() {
            return Err(Error::HopfAxioms(h.axioms.to_string()));
        }
        h.certify(n)?;
        Ok(h)
    }

    /// Computes and stores the filtration certificate to order `n`.
    pub fn certify(&mut self, n: u32) -> Result<&FiltrationCertificate> {
        let cert = crate::graded::certify_filtration(self, n)?;
        self.filtration = Some(cert);
        Ok(self.filtration.as_ref().expect("just stored"))
    }

    pub fn algebra(&self) -> &Algebra {
        &self.algebra
    }

    pub fn len(&self) -> usize {
        self.algebra.len()
    }

    pub fn is_empty(&self) -> bool {
        self.algebra.is_empty()
    }

    pub fn names(&self) -> &[String] {
        self.algebra.names()
    }

    pub fn weights(&self) -> &[u32] {
        self.algebra.weights()
    }

    pub fn generator(&self, i: usize) -> Element {
        self.algebra.generator(i)
    }

    pub fn one(&self) -> Element {
        self.algebra.one()
    }

    pub fn mul(&self, a: &Element, b: &Element) -> Element {
        self.algebra.mul(a, b)
    }

    pub fn parse(&self, text: &str) -> Result<Element> {
        self.algebra.parse(text)
    }

    pub fn parse_tensor(&self, text: &str, arity: usize) -> Result<TensorElement> {
        crate::tensor::parse_tensor(&self.algebra, text, arity)
    }

    pub fn show(&self, e: &Element) -> String {
        self.algebra.show(e)
    }

    pub fn show_tensor(&self, t: &TensorElement) -> String {
        t.display(self.names()).to_string()
    }

    pub fn data(&self) -> HopfData {
        HopfData {
            coproducts: self.coproducts.clone(),
            antipodes: self.antipodes.clone(),
        }
    }

    pub fn generator_coproduct(&self, i: usize) -> &TensorElement {
        &self.coproducts[i]
    }

    pub fn generator_antipode(&self, i: usize) -> Option<&Element> {
        self.antipodes.as_ref().map(|s| &s[i])
    }

    pub fn axioms(&self) -> &HopfReport {
        &self.axioms
    }

    pub fn filtration(&self) -> Option<&FiltrationCertificate> {
        self.filtration.as_ref()
    }

    pub fn require_filtration(&self) -> Result<&FiltrationCertificate> {
        self.filtration
            .as_ref()
            .ok_or(Error::MissingCertificate("filtration certificate"))
    }

    /// Truncation order of the filtration certificate, if any.
    pub fn truncation(&self) -> Option<u32> {
        self.filtration.as_ref().map(FiltrationCertificate::truncation)
    }

    /// Default truncation order `max(6, 2·max weight)`.
    pub fn default_truncation(&self) -> u32 {
        default_truncation(self.weights())
    }

    fn coproduct_monomial(&self, m: &Monomial) -> TensorElement {
        let n = self.len();
        let Some(j) = m.last_index() else {
            return TensorElement::unit(2, n);
        };
        if let Some(hit) = self.delta.get(m) {
            return hit;
        }
        let prefix = m.bumped(j, -1, self.weights());
        let out = tensor_multiply(&self.algebra, &self.coproduct_monomial(&prefix), &self.coproducts[j])
            .expect("arity 2");
        self.delta.put(m.clone(), out.clone());
        out
    }

    /// `Δ`, extended multiplicatively from the generator data.
    pub fn coproduct(&self, x: &Element) -> TensorElement {
        let mut out = TensorElement::zero(2);
        for (m, c) in x.terms() {
            out.add_scaled(&self.coproduct_monomial(m), c);
        }
        out
    }

    /// `ε(x)`, the coefficient of the identity monomial.
    pub fn counit(&self, x: &Element) -> Scalar {
        x.constant_term()
    }

    fn antipode_monomial(&self, s: &[Element], m: &Monomial) -> Element {
        let Some(j) = m.last_index() else {
            return self.one();
        };
        if let Some(hit) = self.s.get(m) {
            return hit;
        }
        let prefix = m.bumped(j, -1, self.weights());
        let out = self.algebra.mul(&s[j], &self.antipode_monomial(s, &prefix));
        self.s.put(m.clone(), out.clone());
        out
    }

    /// `S`, extended anti-multiplicatively.
    pub fn antipode(&self, x: &Element) -> Result<Element> {
        let s = self.antipodes.as_ref().ok_or(Error::AntipodeMissing)?;
        let mut out = Element::zero();
        for (m, c) in x.terms() {
            out.add_scaled(&self.antipode_monomial(s, m), c);
        }
        Ok(out)
    }

    /// Applies `S^k` for `k ≥ 0`.
    pub fn antipode_power(&self, x: &Element, k: usize) -> Result<Element> {
        let mut y = x.clone();
        for _ in 0..k {
            y = self.antipode(&y)?;
        }
        Ok(y)
    }

    fn reduced_monomial(&self, m: &Monomial) -> TensorElement {
        let one = Monomial::identity(self.len());
        let mut t = self.coproduct_monomial(m);
        t.add_term(vec![one.clone(), m.clone()], -Scalar::one());
        t.add_term(vec![m.clone(), one], -Scalar::one());
        t
    }

    /// `Δ̃(x) = Δ(x) - 1⊗x - x⊗1` on the counit kernel.
    pub fn reduced_coproduct(&self, x: &Element) -> Result<TensorElement> {
        self.iterated_reduced_coproduct(x, 1)
    }

    /// `Δ̃ⁿ(x)`, iterating on the first leg. Every leg is checked to lie in
    /// the counit kernel.
    pub fn iterated_reduced_coproduct(&self, x: &Element, n: usize) -> Result<TensorElement> {
        if n == 0 {
            return Err(Error::HopfData("iterated reduced coproduct needs n >= 1".into()));
        }
        let eps = self.counit(x);
        if !eps.is_zero() {
            return Err(Error::NonzeroCounit(crate::scalar::format_scalar(&eps)));
        }
        let mut t = TensorElement::from_element(x);
        for _ in 0..n {
            t = self.reduce_first_leg(&t)?;
            if t.is_zero() {
                break;
            }
        }
        if t.is_zero() {
            return Ok(TensorElement::zero(n + 1));
        }
        Ok(t)
    }

    pub(crate) fn reduce_first_leg(&self, t: &TensorElement) -> Result<TensorElement> {
        let out = t.apply_to_leg(0, |m| {
            if m.is_identity() {
                return Err(Error::LegNotAugmented);
            }
            Ok(self.reduced_monomial(m))
        })?;
        if out.is_zero() {
            return Ok(TensorElement::zero(t.arity() + 1));
        }
        if out.terms().any(|(legs, _)| legs.iter().any(Monomial::is_identity)) {
            return Err(Error::LegNotAugmented);
        }
        Ok(out)
    }

    /// Smallest `n` with `Δ̃ⁿ(x - ε(x)) = 0`; `0` for nonzero scalars.
    pub fn coradical_degree(&self, x: &Element) -> Result<usize> {
        if x.is_zero() {
            return Err(Error::ZeroElement);
        }
        let eps = self.counit(x);
        let y = x - &self.algebra.scalar(eps);
        if y.is_zero() {
            return Ok(0);
        }
        let mut t = TensorElement::from_element(&y);
        for n in 1..=DEGREE_BOUND {
            t = self.reduce_first_leg(&t)?;
            if t.is_zero() {
                return Ok(n);
            }
        }
        Err(Error::DegreeBound(self.show(x), DEGREE_BOUND))
    }

    /// Solves `S(g) = -g - Σ S(y)z` over `Δ̃(g) = Σ y⊗z`, generators taken in
    /// ascending coradical degree. With antipode data present the solution
    /// is compared against it instead of being returned as new data.
    pub fn solve_antipode(&self) -> Result<Vec<Element>> {
        let n = self.len();
        let mut order: Vec<(usize, usize)> = Vec::with_capacity(n);
        for i in 0..n {
            order.push((self.coradical_degree(&self.generator(i))?, i));
        }
        order.sort();
        let mut solved: Vec<Option<Element>> = vec![None; n];
        for &(_, i) in &order {
            let g = self.generator(i);
            let mut s = -&g;
            for (legs, c) in self.reduced_monomial(&Monomial::generator(i, self.weights())).terms() {
                let sy = self.partial_antipode(&solved, &legs[0]).map_err(|k| {
                    Error::AntipodeRecursion(format!(
                        "S({}) needs S({}), which has no lower coradical degree",
                        self.names()[i],
                        self.names()[k]
                    ))
                })?;
                let z = Element::monomial(legs[1].clone());
                s.add_scaled(&self.algebra.mul(&sy, &z), &-c.clone());
            }
            solved[i] = Some(s);
        }
        let solved: Vec<Element> = solved.into_iter().map(|s| s.expect("all solved")).collect();
        if let Some(given) = &self.antipodes {
            for (i, (a, b)) in given.iter().zip(&solved).enumerate() {
                if a != b {
                    return Err(Error::AntipodeRecursion(format!(
                        "supplied S({}) = {} but the recursion gives {}",
                        self.names()[i],
                        self.show(a),
                        self.show(b)
                    )));
                }
            }
        }
        Ok(solved)
    }

    /// Anti-multiplicative extension over the generators solved so far;
    /// `Err(k)` names an unsolved generator.
    fn partial_antipode(&self, solved: &[Option<Element>], m: &Monomial) -> std::result::Result<Element, usize> {
        let mut acc = self.one();
        for g in m.word() {
            let sg = solved[g].as_ref().ok_or(g)?;
            acc = self.algebra.mul(sg, &acc);
        }
        Ok(acc)
    }

    /// Checks the Hopf axioms on generators: relations respected by `Δ`, `ε`
    /// and `S`; coassociativity; counit laws; both convolution identities.
    pub fn verify_hopf(&self) -> HopfReport {
        let names = self.names();
        let mut checks = Vec::new();
        let check = |group, subject: String, defect: Option<String>| AxiomCheck { group, subject, defect };
        for (j, i, p) in self.algebra.presentation().pairs() {
            let p = &p;
            let (gj, gi) = (self.generator(j), self.generator(i));
            let rel = format!("[{},{}]", names[j], names[i]);
            let dj = &self.coproducts[j];
            let di = &self.coproducts[i];
            let mut lhs = tensor_multiply(&self.algebra, dj, di).expect("arity 2");
            lhs.add_scaled(&tensor_multiply(&self.algebra, di, dj).expect("arity 2"), &-Scalar::one());
            let defect = &lhs - &self.coproduct(p);
            checks.push(check(
                AxiomGroup::Relations,
                format!("Delta {rel}"),
                (!defect.is_zero()).then(|| self.show_tensor(&defect)),
            ));
            let eps = self.counit(p);
            checks.push(check(
                AxiomGroup::Relations,
                format!("epsilon {rel}"),
                (!eps.is_zero()).then(|| crate::scalar::format_scalar(&eps)),
            ));
            let defect = match (self.antipode(&gj), self.antipode(&gi), self.antipode(p)) {
                (Ok(sj), Ok(si), Ok(sp)) => {
                    let d = &self.algebra.commutator(&si, &sj) - &sp;
                    (!d.is_zero()).then(|| self.show(&d))
                }
                _ => Some(Error::AntipodeMissing.to_string()),
            };
            checks.push(check(AxiomGroup::Relations, format!("S {rel}"), defect));
        }
        for (i, name) in names.iter().enumerate() {
            let g = self.generator(i);
            let d = &self.coproducts[i];
            let left = d.apply_to_leg(0, |m| Ok(self.coproduct_monomial(m))).expect("leg 0");
            let right = d.apply_to_leg(1, |m| Ok(self.coproduct_monomial(m))).expect("leg 1");
            let defect = &left - &right;
            checks.push(check(
                AxiomGroup::Coassociativity,
                name.clone(),
                (!defect.is_zero()).then(|| self.show_tensor(&defect)),
            ));
            for leg in [0, 1] {
                let e = d
                    .evaluate_leg(leg, |m| Ok(if m.is_identity() { Scalar::one() } else { Scalar::zero() }))
                    .and_then(TensorElement::into_element)
                    .expect("arity 2");
                let defect = &e - &g;
                let side = if leg == 0 { "(eps@id)" } else { "(id@eps)" };
                checks.push(check(
                    AxiomGroup::Counit,
                    format!("{side} Delta({name})"),
                    (!defect.is_zero()).then(|| self.show(&defect)),
                ));
            }
            for leg in [0, 1] {
                let defect = match d.map_leg(leg, |m| self.antipode(&Element::monomial(m.clone()))) {
                    Ok(t) => {
                        let e = contract(&self.algebra, &t).expect("arity 2");
                        (!e.is_zero()).then(|| self.show(&e))
                    }
                    Err(e) => Some(e.to_string()),
                };
                let side = if leg == 0 { "m(S@id)" } else { "m(id@S)" };
                checks.push(check(AxiomGroup::Antipode, format!("{side} Delta({name})"), defect));
            }
        }
        HopfReport { checks }
    }

    /// Basis of the primitives among combinations of non-identity monomials
    /// of weight at most `cutoff`.
    pub fn primitive_basis(&self, cutoff: u32) -> Vec<Element> {
        let monos: Vec<Monomial> = monomials_up_to(self.weights(), cutoff)
            .into_iter()
            .filter(|m| !m.is_identity())
            .collect();
        let images = monos.iter().map(|m| self.reduced_monomial(m).as_map().clone());
        kernel(images)
            .into_iter()
            .map(|v| Element::from_terms(v.into_iter().map(|(j, c)| (monos[j].clone(), c))))
            .collect()
    }

    fn inverse_on_generators(&self) -> Result<&[Element]> {
        let solved = self.s_inverse.get_or_init(|| {
            let s = self.antipodes.as_ref().ok_or_else(|| Error::AntipodeMissing.to_string())?;
            let max = self.weights().iter().copied().max().unwrap_or(0);
            let monos = monomials_up_to(self.weights(), max);
            let mut ech: Echelon<Monomial> = Echelon::new();
            for m in &monos {
                ech.insert(self.antipode_monomial(s, m).into_terms());
            }
            (0..self.len())
                .map(|i| {
                    let combo = ech
                        .solve(self.generator(i).as_map())
                        .ok_or_else(|| format!("{} is not in the image of S", self.names()[i]))?;
                    Ok(Element::from_terms(combo.into_iter().map(|(j, c)| (monos[j].clone(), c))))
                })
                .collect()
        });
        solved.as_deref().map_err(|e| Error::AntipodeInverse(e.clone()))
    }

    /// `S⁻¹(x)`: the inverse on generators comes from a triangular solve on
    /// the monomial basis and is extended anti-multiplicatively.
    pub fn antipode_inverse(&self, x: &Element) -> Result<Element> {
        let cert = self.require_filtration()?;
        if let Weight::Finite(w) = x.weight() {
            if w > cert.truncation() {
                return Err(Error::BeyondTruncation {
                    weight: w,
                    truncation: cert.truncation(),
                });
            }
        }
        let inv = self.inverse_on_generators()?;
        let mut out = Element::zero();
        for (m, c) in x.terms() {
            let mut acc = self.one();
            for g in m.word() {
                acc = self.algebra.mul(&inv[g], &acc);
            }
            out.add_scaled(&acc, c);
        }
        Ok(out)
    }

    /// `S²(g) - g` on generators, with an infinite-order witness when some
    /// generator moves.
    pub fn s_squared_analysis(&self) -> Result<SquaredAntipode> {
        let gens: Vec<Element> = (0..self.len()).map(|i| self.generator(i)).collect();
        s_squared_on(self, &gens)
    }
}

/// `max(6, 2·max weight)`.
pub fn default_truncation(weights: &[u32]) -> u32 {
    weights.iter().map(|w| 2 * w).max().unwrap_or(0).max(6)
}

/// Walks `h, (S²-1)h, (S²-1)²h, ...` from the first moved element until the
/// next step vanishes; the last two nonzero terms form the witness.
pub(crate) fn s_squared_on(h: &HopfAlgebra, elements: &[Element]) -> Result<SquaredAntipode> {
    for g in elements {
        let r = &h.antipode_power(g, 2)? - g;
        if r.is_zero() {
            continue;
        }
        let (mut element, mut shift) = (g.clone(), r);
        for _ in 0..DEGREE_BOUND {
            let next = &h.antipode_power(&shift, 2)? - &shift;
            if next.is_zero() {
                return Ok(SquaredAntipode::Infinite { element, shift });
            }
            element = shift;
            shift = next;
        }
        return Err(Error::Internal(format!(
            "S^2 - id is not nilpotent on {} within {DEGREE_BOUND} steps",
            h.show(g)
        )));
    }
    Ok(SquaredAntipode::Identity)
}
