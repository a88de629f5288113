//! Algebras presented by ordered generators and commutator relations
//! `x_j x_i = x_i x_j + P_ji` (j > i), with normal-form arithmetic.
//!
//! Two independent reduction routes are provided:
//!
//! * [`reduce_word`] / [`reduce_word_with`] rewrite adjacent misordered
//!   pairs in a word, one step at a time, with a caller-chosen position.
//! * [`Algebra::mul`] multiplies normal forms by moving one generator at a
//!   time into place, memoizing `monomial * generator`.
//!
//! Both agree whenever the presentation is confluent; the confluence check
//! and the randomized-order tests compare them.

use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Zero};

use crate::element::Element;
use crate::error::{Error, Result};
use crate::expr::Word;
use crate::memo::Memo;
use crate::monomial::{Monomial, Weight};
use crate::scalar::Scalar;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Generator {
    pub name: String,
    pub weight: u32,
}

/// Generators with weights plus the commutator table. Pairs absent from the
/// table commute.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Presentation {
    generators: Vec<Generator>,
    names: Vec<String>,
    weights: Vec<u32>,
    relations: BTreeMap<(usize, usize), Element>,
}

impl Presentation {
    pub fn new<S: Into<String>>(generators: impl IntoIterator<Item = (S, u32)>) -> Result<Self> {
        let generators: Vec<Generator> = generators
            .into_iter()
            .map(|(n, w)| Generator {
                name: n.into(),
                weight: w,
            })
            .collect();
        for (i, g) in generators.iter().enumerate() {
            if g.weight == 0 {
                return Err(Error::Presentation(format!("generator {} has weight 0", g.name)));
            }
            if generators[..i].iter().any(|h| h.name == g.name) {
                return Err(Error::Presentation(format!("duplicate generator {}", g.name)));
            }
        }
        let names = generators.iter().map(|g| g.name.clone()).collect();
        let weights = generators.iter().map(|g| g.weight).collect();
        Ok(Presentation {
            generators,
            names,
            weights,
            relations: BTreeMap::new(),
        })
    }

    pub fn len(&self) -> usize {
        self.generators.len()
    }

    pub fn is_empty(&self) -> bool {
        self.generators.is_empty()
    }

    pub fn generators(&self) -> &[Generator] {
        &self.generators
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn weights(&self) -> &[u32] {
        &self.weights
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    pub fn generator(&self, i: usize) -> Element {
        Element::monomial(Monomial::generator(i, &self.weights))
    }

    pub fn monomial(&self, exps: Vec<u32>) -> Monomial {
        Monomial::new(exps, &self.weights)
    }

    pub fn one(&self) -> Element {
        Element::one(self.len())
    }

    pub fn scalar(&self, c: Scalar) -> Element {
        Element::scalar(c, self.len())
    }

    /// Sets `[x_a, x_b] = value`. The value must be written in normal
    /// monomials; `a` and `b` may come in either order.
    pub fn set_commutator(&mut self, a: usize, b: usize, value: Element) -> Result<()> {
        if a == b || a >= self.len() || b >= self.len() {
            return Err(Error::Presentation(format!("bad commutator pair ({a},{b})")));
        }
        if value.terms().any(|(m, _)| m.len() != self.len()) {
            return Err(Error::Presentation("commutator value has wrong arity".into()));
        }
        let (key, value) = if a > b { ((a, b), value) } else { ((b, a), -value) };
        if value.is_zero() {
            self.relations.remove(&key);
        } else {
            self.relations.insert(key, value);
        }
        Ok(())
    }

    pub fn with_commutator(mut self, a: &str, b: &str, value: Element) -> Result<Self> {
        let ia = self.require(a)?;
        let ib = self.require(b)?;
        self.set_commutator(ia, ib, value)?;
        Ok(self)
    }

    fn require(&self, name: &str) -> Result<usize> {
        self.index_of(name)
            .ok_or_else(|| Error::Presentation(format!("undeclared generator {name}")))
    }

    /// `P_ji` for `j > i`.
    pub fn commutator_value(&self, j: usize, i: usize) -> Option<&Element> {
        self.relations.get(&(j, i))
    }

    /// All nonzero `(j, i, P_ji)` with `j > i`.
    pub fn relations(&self) -> impl Iterator<Item = (usize, usize, &Element)> {
        self.relations.iter().map(|(&(j, i), p)| (j, i, p))
    }

    /// Every pair `j > i` with its `P_ji`, zero for commuting pairs.
    pub fn pairs(&self) -> impl Iterator<Item = (usize, usize, Element)> + '_ {
        (0..self.len()).flat_map(move |j| {
            (0..j).map(move |i| {
                let p = self.commutator_value(j, i).cloned().unwrap_or_else(Element::zero);
                (j, i, p)
            })
        })
    }

    /// Builds an element from a word polynomial whose words are already in
    /// ascending generator order.
    pub fn normal_poly(&self, terms: &[(Scalar, Word)]) -> Result<Element> {
        let mut out = Element::zero();
        for (c, word) in terms {
            let mut exps = vec![0u32; self.len()];
            let mut last = None;
            for &(g, e) in word {
                if matches!(last, Some(l) if l >= g) {
                    return Err(Error::Presentation(format!(
                        "monomial `{}` is not in normal order",
                        crate::expr::format_word(word, &self.names)
                    )));
                }
                last = Some(g);
                exps[g] += e;
            }
            out.add_term(self.monomial(exps), c.clone());
        }
        Ok(out)
    }

    pub fn parse_normal(&self, text: &str) -> Result<Element> {
        let terms = crate::expr::parse_poly(text, &self.names).map_err(|e| Error::Parse(e.to_string()))?;
        self.normal_poly(&terms)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TerminationViolation {
    pub pair: (String, String),
    pub weight: Weight,
    pub bound: u32,
}

/// Result of checking `weight(P_ji) < w_i + w_j` for every relation.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct TerminationReport {
    pub checked: usize,
    pub violations: Vec<TerminationViolation>,
}

impl TerminationReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }
}

impl fmt::Display for TerminationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.passed() {
            return write!(f, "termination: {} relations, all weights drop", self.checked);
        }
        for v in &self.violations {
            writeln!(
                f,
                "  [{},{}]: weight {} is not below {}",
                v.pair.0, v.pair.1, v.weight, v.bound
            )?;
        }
        Ok(())
    }
}

pub fn check_termination_weights(p: &Presentation) -> TerminationReport {
    let mut report = TerminationReport::default();
    for (j, i, value) in p.relations() {
        report.checked += 1;
        let bound = p.weights[i] + p.weights[j];
        let weight = value.weight();
        if weight >= Weight::Finite(bound) {
            report.violations.push(TerminationViolation {
                pair: (p.names[j].clone(), p.names[i].clone()),
                weight,
                bound,
            });
        }
    }
    report
}

/// Reduces a word to normal form by rewriting the leftmost misordered pair.
pub fn reduce_word(p: &Presentation, word: &[usize], coeff: Scalar) -> Element {
    reduce_word_with(p, word, coeff, |_, _| 0)
}

/// Reduces a word to normal form, letting `choose` pick which descent to
/// rewrite next. `choose(word, descents)` returns an index into `descents`.
pub fn reduce_word_with<F>(p: &Presentation, word: &[usize], coeff: Scalar, mut choose: F) -> Element
where
    F: FnMut(&[usize], &[usize]) -> usize,
{
    let mut pending: BTreeMap<Vec<usize>, Scalar> = BTreeMap::new();
    let mut out = Element::zero();
    if coeff.is_zero() {
        return out;
    }
    pending.insert(word.to_vec(), coeff);
    let push = |pending: &mut BTreeMap<Vec<usize>, Scalar>, w: Vec<usize>, c: Scalar| {
        let e = pending.entry(w.clone()).or_insert_with(Scalar::zero);
        *e += c;
        if e.is_zero() {
            pending.remove(&w);
        }
    };
    while let Some((w, c)) = pending.pop_first() {
        let descents: Vec<usize> = (0..w.len().saturating_sub(1)).filter(|&k| w[k] > w[k + 1]).collect();
        if descents.is_empty() {
            let mut exps = vec![0u32; p.len()];
            for &g in &w {
                exps[g] += 1;
            }
            out.add_term(p.monomial(exps), c);
            continue;
        }
        let pick = descents[choose(&w, &descents).min(descents.len() - 1)];
        let (j, i) = (w[pick], w[pick + 1]);
        let mut swapped = w.clone();
        swapped.swap(pick, pick + 1);
        push(&mut pending, swapped, c.clone());
        if let Some(value) = p.commutator_value(j, i) {
            for (m, d) in value.terms() {
                let mut nw = w[..pick].to_vec();
                nw.extend(m.word());
                nw.extend_from_slice(&w[pick + 2..]);
                push(&mut pending, nw, &c * d);
            }
        }
    }
    out
}

/// An overlap `x_k x_j x_i` whose two reductions disagree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OverlapFailure {
    pub triple: (usize, usize, usize),
    pub via_left: Element,
    pub via_right: Element,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ConfluenceReport {
    pub names: Vec<String>,
    pub checked: usize,
    pub failures: Vec<OverlapFailure>,
}

impl ConfluenceReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    pub fn triple_names(&self, f: &OverlapFailure) -> (String, String, String) {
        let (k, j, i) = f.triple;
        (self.names[k].clone(), self.names[j].clone(), self.names[i].clone())
    }
}

impl fmt::Display for ConfluenceReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.passed() {
            return write!(f, "confluence: {} overlaps resolve", self.checked);
        }
        for fail in &self.failures {
            let (k, j, i) = self.triple_names(fail);
            writeln!(
                f,
                "  overlap ({k},{j},{i}): {} vs {}",
                fail.via_left.display(&self.names),
                fail.via_right.display(&self.names)
            )?;
        }
        Ok(())
    }
}

/// Resolves every overlap `x_k x_j x_i` (k > j > i) both ways.
pub fn check_confluence(p: &Presentation) -> ConfluenceReport {
    let mut report = ConfluenceReport {
        names: p.names.clone(),
        ..Default::default()
    };
    let n = p.len();
    let one = Scalar::one();
    for k in 0..n {
        for j in 0..k {
            for i in 0..j {
                report.checked += 1;
                // rewrite x_k x_j first
                let mut left = reduce_word(p, &[j, k, i], one.clone());
                if let Some(v) = p.commutator_value(k, j) {
                    for (m, c) in v.terms() {
                        let mut w = m.word();
                        w.push(i);
                        left.add_scaled(&reduce_word(p, &w, one.clone()), c);
                    }
                }
                // rewrite x_j x_i first
                let mut right = reduce_word(p, &[k, i, j], one.clone());
                if let Some(v) = p.commutator_value(j, i) {
                    for (m, c) in v.terms() {
                        let mut w = vec![k];
                        w.extend(m.word());
                        right.add_scaled(&reduce_word(p, &w, one.clone()), c);
                    }
                }
                if left != right {
                    report.failures.push(OverlapFailure {
                        triple: (k, j, i),
                        via_left: left,
                        via_right: right,
                    });
                }
            }
        }
    }
    report
}

/// A presentation with certified termination and confluence, ready for
/// normal-form arithmetic.
#[derive(Clone, Debug)]
pub struct Algebra {
    presentation: Presentation,
    termination: TerminationReport,
    confluence: ConfluenceReport,
    mono_gen: Memo<(Monomial, usize), Element>,
}

impl Algebra {
    pub fn new(presentation: Presentation) -> Result<Self> {
        let termination = check_termination_weights(&presentation);
        if !termination.passed() {
            return Err(Error::Termination(termination));
        }
        let confluence = check_confluence(&presentation);
        if !confluence.passed() {
            return Err(Error::Confluence(confluence));
        }
        Ok(Algebra {
            presentation,
            termination,
            confluence,
            mono_gen: Memo::new(),
        })
    }

    /// Skips the termination gate. The caller asserts that rewriting
    /// terminates (for example when diagnosing mis-declared weights);
    /// confluence is still checked.
    pub fn new_unchecked(presentation: Presentation) -> Result<Self> {
        let termination = check_termination_weights(&presentation);
        let confluence = check_confluence(&presentation);
        if !confluence.passed() {
            return Err(Error::Confluence(confluence));
        }
        Ok(Algebra {
            presentation,
            termination,
            confluence,
            mono_gen: Memo::new(),
        })
    }

    pub fn presentation(&self) -> &Presentation {
        &self.presentation
    }

    pub fn termination(&self) -> &TerminationReport {
        &self.termination
    }

    pub fn confluence(&self) -> &ConfluenceReport {
        &self.confluence
    }

    pub fn len(&self) -> usize {
        self.presentation.len()
    }

    pub fn is_empty(&self) -> bool {
        self.presentation.is_empty()
    }

    pub fn names(&self) -> &[String] {
        self.presentation.names()
    }

    pub fn weights(&self) -> &[u32] {
        self.presentation.weights()
    }

    pub fn generator(&self, i: usize) -> Element {
        self.presentation.generator(i)
    }

    pub fn one(&self) -> Element {
        self.presentation.one()
    }

    pub fn scalar(&self, c: Scalar) -> Element {
        self.presentation.scalar(c)
    }

    /// Normal form of `coeff * x_{w_1} ... x_{w_r}` by pair rewriting.
    pub fn reduce_word(&self, word: &[usize], coeff: Scalar) -> Element {
        reduce_word(&self.presentation, word, coeff)
    }

    /// `m * x_k` in normal form.
    fn mono_times_gen(&self, m: &Monomial, k: usize) -> Element {
        let w = self.weights();
        match m.last_index() {
            None => return Element::monomial(Monomial::generator(k, w)),
            Some(j) if j <= k => return Element::monomial(m.bumped(k, 1, w)),
            _ => {}
        }
        let key = (m.clone(), k);
        if let Some(hit) = self.mono_gen.get(&key) {
            return hit;
        }
        let j = m.last_index().expect("nonidentity");
        let prefix = m.bumped(j, -1, w);
        // m x_k = prefix x_j x_k = (prefix x_k) x_j + prefix P_jk
        let mut out = self.right_mul_gen(&self.mono_times_gen(&prefix, k), j);
        if let Some(p) = self.presentation.commutator_value(j, k) {
            for (pm, c) in p.terms() {
                out.add_scaled(&self.mul_monomials(&prefix, pm), c);
            }
        }
        self.mono_gen.put(key, out.clone());
        out
    }

    fn right_mul_gen(&self, a: &Element, k: usize) -> Element {
        let mut out = Element::zero();
        for (m, c) in a.terms() {
            out.add_scaled(&self.mono_times_gen(m, k), c);
        }
        out
    }

    pub fn mul_monomials(&self, a: &Monomial, b: &Monomial) -> Element {
        let mut acc = Element::monomial(a.clone());
        for g in b.word() {
            acc = self.right_mul_gen(&acc, g);
        }
        acc
    }

    fn check_len(&self, e: &Element) -> Result<()> {
        match e.terms().next() {
            Some((m, _)) if m.len() != self.len() => Err(Error::PresentationMismatch {
                left: self.len(),
                right: m.len(),
            }),
            _ => Ok(()),
        }
    }

    pub fn try_mul(&self, a: &Element, b: &Element) -> Result<Element> {
        self.check_len(a)?;
        self.check_len(b)?;
        Ok(self.mul(a, b))
    }

    /// Product of normal forms.
    ///
    /// # Panics
    /// If an operand was built over a different number of generators; use
    /// [`Algebra::try_mul`] to get an error instead.
    pub fn mul(&self, a: &Element, b: &Element) -> Element {
        let mut out = Element::zero();
        for (ma, ca) in a.terms() {
            for (mb, cb) in b.terms() {
                assert_eq!(ma.len(), self.len(), "operand from another presentation");
                assert_eq!(mb.len(), self.len(), "operand from another presentation");
                out.add_scaled(&self.mul_monomials(ma, mb), &(ca * cb));
            }
        }
        out
    }

    pub fn mul_all<'a>(&self, factors: impl IntoIterator<Item = &'a Element>) -> Element {
        factors.into_iter().fold(self.one(), |acc, f| self.mul(&acc, f))
    }

    pub fn pow(&self, a: &Element, e: u32) -> Element {
        (0..e).fold(self.one(), |acc, _| self.mul(&acc, a))
    }

    pub fn commutator(&self, a: &Element, b: &Element) -> Element {
        &self.mul(a, b) - &self.mul(b, a)
    }

    /// Evaluates a word polynomial (words in any order) to normal form.
    pub fn eval_poly(&self, terms: &[(Scalar, Word)]) -> Element {
        let mut out = Element::zero();
        for (c, word) in terms {
            let mut acc = self.one();
            for &(g, e) in word {
                for _ in 0..e {
                    acc = self.right_mul_gen(&acc, g);
                }
            }
            out.add_scaled(&acc, c);
        }
        out
    }

    /// Parses and evaluates an expression such as `Z - X*Y`.
    pub fn parse(&self, text: &str) -> Result<Element> {
        let terms = crate::expr::parse_poly(text, self.names()).map_err(|e| Error::Parse(e.to_string()))?;
        Ok(self.eval_poly(&terms))
    }

    pub fn show(&self, e: &Element) -> String {
        e.display(self.names()).to_string()
    }
}
