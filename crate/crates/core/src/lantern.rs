//! Graded Lie algebras, the lantern of a certified Hopf algebra, and the
//! numerical constraints on signatures.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Pow, Zero};

use crate::error::{Error, Result};
use crate::graded::{graded_coproduct_leading, signature, Signature};
use crate::hopf::HopfAlgebra;
use crate::linalg::{axpy, rank, SparseVec};
use crate::monomial::Monomial;
use crate::scalar::{format_scalar, Scalar};

/// Finite-dimensional graded Lie algebra on a named basis. Brackets are
/// stored for `a < b` only.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GradedLieAlgebra {
    names: Vec<String>,
    degrees: Vec<u32>,
    brackets: BTreeMap<(usize, usize), SparseVec<usize>>,
}

impl GradedLieAlgebra {
    pub fn new<S: Into<String>>(basis: impl IntoIterator<Item = (S, u32)>) -> Self {
        let (names, degrees) = basis.into_iter().map(|(n, d)| (n.into(), d)).unzip();
        GradedLieAlgebra {
            names,
            degrees,
            brackets: BTreeMap::new(),
        }
    }

    pub fn dim(&self) -> usize {
        self.names.len()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn degrees(&self) -> &[u32] {
        &self.degrees
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    /// Sets `[u_a, u_b] = value`; either order is accepted.
    pub fn set_bracket(&mut self, a: usize, b: usize, value: SparseVec<usize>) -> Result<()> {
        if a >= self.dim() || b >= self.dim() {
            return Err(Error::Lie(format!("basis index out of range in [{a},{b}]")));
        }
        let value: SparseVec<usize> = value.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        if a == b {
            return if value.is_empty() {
                Ok(())
            } else {
                Err(Error::Lie(format!("[{0},{0}] must vanish", self.names[a])))
            };
        }
        let (key, value) = if a < b {
            ((a, b), value)
        } else {
            ((b, a), value.into_iter().map(|(k, c)| (k, -c)).collect())
        };
        if value.is_empty() {
            self.brackets.remove(&key);
        } else {
            self.brackets.insert(key, value);
        }
        Ok(())
    }

    /// Builder form of [`GradedLieAlgebra::set_bracket`] by names.
    pub fn with_bracket(mut self, a: &str, b: &str, value: &[(&str, Scalar)]) -> Result<Self> {
        let idx = |n: &str| self.index_of(n).ok_or_else(|| Error::Lie(format!("unknown basis element `{n}`")));
        let (ia, ib) = (idx(a)?, idx(b)?);
        let v = value
            .iter()
            .map(|(n, c)| Ok((idx(n)?, c.clone())))
            .collect::<Result<SparseVec<usize>>>()?;
        self.set_bracket(ia, ib, v)?;
        Ok(self)
    }

    pub fn bracket(&self, a: usize, b: usize) -> SparseVec<usize> {
        match a.cmp(&b) {
            std::cmp::Ordering::Less => self.brackets.get(&(a, b)).cloned().unwrap_or_default(),
            std::cmp::Ordering::Greater => self
                .brackets
                .get(&(b, a))
                .map(|v| v.iter().map(|(k, c)| (*k, -c.clone())).collect())
                .unwrap_or_default(),
            std::cmp::Ordering::Equal => SparseVec::new(),
        }
    }

    /// Structure constant `c_{ab}^e`.
    pub fn constant(&self, a: usize, b: usize, e: usize) -> Scalar {
        self.bracket(a, b).get(&e).cloned().unwrap_or_else(Scalar::zero)
    }

    /// Bilinear bracket of two vectors.
    pub fn bracket_vectors(&self, u: &SparseVec<usize>, v: &SparseVec<usize>) -> SparseVec<usize> {
        let mut out = SparseVec::new();
        for (a, ca) in u {
            for (b, cb) in v {
                axpy(&mut out, &(ca * cb), &self.bracket(*a, *b));
            }
        }
        out
    }

    pub fn is_abelian(&self) -> bool {
        self.brackets.is_empty()
    }

    /// Nonzero brackets `(a, b, value)` with `a < b`.
    pub fn nonzero_brackets(&self) -> impl Iterator<Item = (usize, usize, &SparseVec<usize>)> {
        self.brackets.iter().map(|(&(a, b), v)| (a, b, v))
    }

    /// Basis indices of the given degree.
    pub fn component(&self, degree: u32) -> Vec<usize> {
        (0..self.dim()).filter(|&i| self.degrees[i] == degree).collect()
    }

    pub fn show_vector(&self, v: &SparseVec<usize>) -> String {
        if v.is_empty() {
            return "0".to_string();
        }
        let mut s = String::new();
        for (k, (i, c)) in v.iter().enumerate() {
            let neg = c < &Scalar::zero();
            let abs = if neg { -c.clone() } else { c.clone() };
            if k == 0 {
                if neg {
                    s.push('-');
                }
            } else {
                s.push_str(if neg { " - " } else { " + " });
            }
            if !abs.is_one() {
                s.push_str(&format_scalar(&abs));
                s.push('*');
            }
            s.push_str(&self.names[*i]);
        }
        s
    }
}

impl fmt::Display for GradedLieAlgebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.brackets.is_empty() {
            return f.write_str("abelian");
        }
        for (k, (&(a, b), v)) in self.brackets.iter().enumerate() {
            if k > 0 {
                f.write_str(", ")?;
            }
            write!(f, "[{},{}] = {}", self.names[a], self.names[b], self.show_vector(v))?;
        }
        Ok(())
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct LieReport {
    /// Triples `a < b < c` where the Jacobi sum is nonzero.
    pub jacobi_failures: Vec<(usize, usize, usize)>,
    /// `(a, b, e)` with `c_{ab}^e ≠ 0` but `deg e ≠ deg a + deg b`.
    pub grading_failures: Vec<(usize, usize, usize)>,
}

impl LieReport {
    pub fn passed(&self) -> bool {
        self.jacobi_failures.is_empty() && self.grading_failures.is_empty()
    }
}

/// Checks Jacobi on all basis triples and additivity of degrees.
pub fn verify_lie(l: &GradedLieAlgebra) -> LieReport {
    let n = l.dim();
    let mut report = LieReport::default();
    let unit = |i: usize| SparseVec::from([(i, Scalar::one())]);
    for a in 0..n {
        for b in a + 1..n {
            for c in b + 1..n {
                let mut sum = SparseVec::new();
                for (x, y, z) in [(a, b, c), (b, c, a), (c, a, b)] {
                    axpy(&mut sum, &Scalar::one(), &l.bracket_vectors(&unit(x), &l.bracket(y, z)));
                }
                if !sum.is_empty() {
                    report.jacobi_failures.push((a, b, c));
                }
            }
        }
    }
    for (a, b, v) in l.nonzero_brackets() {
        for &e in v.keys() {
            if l.degrees[e] != l.degrees[a] + l.degrees[b] {
                report.grading_failures.push((a, b, e));
            }
        }
    }
    report
}

/// Lantern: `c_{ab}^e` is the coefficient of `g_a⊗g_b` minus that of
/// `g_b⊗g_a` in the leading coproduct of `g_e`.
pub fn lantern(h: &HopfAlgebra) -> Result<GradedLieAlgebra> {
    h.require_filtration()?;
    let n = h.len();
    let w = h.weights();
    let gens: Vec<Monomial> = (0..n).map(|i| Monomial::generator(i, w)).collect();
    let mut l = GradedLieAlgebra::new(h.names().iter().cloned().zip(w.iter().copied()));
    let mut table: BTreeMap<(usize, usize), SparseVec<usize>> = BTreeMap::new();
    for e in 0..n {
        let lead = graded_coproduct_leading(h, e)?;
        for a in 0..n {
            for b in a + 1..n {
                let c = lead.coefficient(&[gens[a].clone(), gens[b].clone()])
                    - lead.coefficient(&[gens[b].clone(), gens[a].clone()]);
                if !c.is_zero() {
                    table.entry((a, b)).or_default().insert(e, c);
                }
            }
        }
    }
    for ((a, b), v) in table {
        l.set_bracket(a, b, v)?;
    }
    let report = verify_lie(&l);
    if !report.passed() {
        return Err(Error::Internal(format!(
            "extracted lantern is not a graded Lie algebra (Jacobi failures {:?}, grading failures {:?})",
            report.jacobi_failures, report.grading_failures
        )));
    }
    Ok(l)
}

/// Möbius function.
pub fn mobius(n: u64) -> i64 {
    assert!(n > 0, "mobius of 0");
    let mut n = n;
    let mut sign = 1;
    let mut p = 2;
    while p * p <= n {
        if n.is_multiple_of(p) {
            n /= p;
            if n.is_multiple_of(p) {
                return 0;
            }
            sign = -sign;
        }
        p += 1;
    }
    if n > 1 {
        sign = -sign;
    }
    sign
}

/// `(1/i) Σ_{d|i} μ(d) m^{i/d}`, the dimension of the degree-`i` part of
/// the free Lie algebra on `m` generators.
pub fn witt_bound(m: usize, i: u32) -> BigInt {
    let mut sum = BigInt::zero();
    for d in 1..=i {
        if i.is_multiple_of(d) {
            sum += BigInt::from(mobius(d as u64)) * BigInt::from(m).pow(i / d);
        }
    }
    sum / BigInt::from(i)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Verdict {
    pub passed: bool,
    pub detail: String,
}

impl Verdict {
    fn new(passed: bool, detail: String) -> Self {
        Verdict { passed, detail }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NumerologyReport {
    pub carnot: Verdict,
    pub no_gaps: Verdict,
    pub witt: Verdict,
    pub m1: Verdict,
}

impl NumerologyReport {
    pub fn passed(&self) -> bool {
        [&self.carnot, &self.no_gaps, &self.witt, &self.m1]
            .iter()
            .all(|v| v.passed)
    }

    pub fn verdicts(&self) -> [(&'static str, &Verdict); 4] {
        [
            ("carnot", &self.carnot),
            ("no-gaps", &self.no_gaps),
            ("witt-bound", &self.witt),
            ("m1", &self.m1),
        ]
    }
}

impl fmt::Display for NumerologyReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (name, v) in self.verdicts() {
            writeln!(f, "{name}: {} ({})", if v.passed { "pass" } else { "FAIL" }, v.detail)?;
        }
        Ok(())
    }
}

/// `L(i+1) = [L(1), L(i)]` for every degree, compared by rank.
pub fn carnot_check(l: &GradedLieAlgebra) -> Verdict {
    let max = l.degrees().iter().copied().max().unwrap_or(0);
    let ones = l.component(1);
    for i in 1..max {
        let next = l.component(i + 1);
        let brackets = ones
            .iter()
            .flat_map(|&a| l.component(i).into_iter().map(move |b| (a, b)))
            .map(|(a, b)| l.bracket(a, b));
        let r = rank(brackets);
        if r != next.len() {
            return Verdict::new(
                false,
                format!("[L(1),L({i})] has dimension {r} but L({}) has dimension {}", i + 1, next.len()),
            );
        }
    }
    Verdict::new(true, format!("generated in degree 1 up to degree {max}"))
}

/// Degrees of the signature form `{1, ..., t}`.
pub fn no_gaps_check(sig: &Signature) -> Verdict {
    let degrees: Vec<u32> = sig.degrees().collect();
    let t = degrees.len() as u32;
    let expected: Vec<u32> = (1..=t).collect();
    let shown = degrees.iter().map(u32::to_string).collect::<Vec<_>>().join(",");
    if degrees == expected {
        Verdict::new(true, format!("degrees {{{shown}}}"))
    } else {
        let missing: Vec<String> = (1..=degrees.last().copied().unwrap_or(0))
            .filter(|d| !degrees.contains(d))
            .map(|d| d.to_string())
            .collect();
        Verdict::new(
            false,
            format!("degrees {{{shown}}} miss {}", missing.join(",")),
        )
    }
}

/// `m_i ≤ (1/i) Σ_{d|i} μ(d) m₁^{i/d}` for every degree `i`.
pub fn witt_check(sig: &Signature) -> Verdict {
    let m1 = sig.multiplicity(1);
    let mut parts = Vec::new();
    let mut ok = true;
    for &(i, m) in sig.parts() {
        if i == 1 {
            continue;
        }
        let bound = witt_bound(m1, i);
        let holds = BigInt::from(m) <= bound;
        ok &= holds;
        parts.push(format!("m{i}={m}{}{bound}", if holds { "<=" } else { ">" }));
    }
    if parts.is_empty() {
        parts.push("no degrees above 1".to_string());
    }
    Verdict::new(ok, parts.join(", "))
}

/// `m₁ ≥ 2` whenever the dimension `Σ mᵢ` exceeds 1.
pub fn m1_check(sig: &Signature) -> Verdict {
    let m1 = sig.multiplicity(1);
    if sig.count() <= 1 {
        return Verdict::new(true, format!("dimension {} at most 1", sig.count()));
    }
    Verdict::new(m1 >= 2, format!("m1={m1}"))
}

/// The four checks for a Hopf algebra's lantern and signature.
pub fn numerology_report(l: &GradedLieAlgebra, sig: &Signature) -> NumerologyReport {
    NumerologyReport {
        carnot: carnot_check(l),
        no_gaps: no_gaps_check(sig),
        witt: witt_check(sig),
        m1: m1_check(sig),
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CocommutativityEvidence {
    /// Every generator has weight 1.
    pub cocommutative: bool,
    pub all_primitive: bool,
    /// Coproducts of generators are invariant under the flip.
    pub flip_invariant: bool,
    pub lantern_abelian: bool,
}

impl CocommutativityEvidence {
    /// The evidence agrees with the verdict.
    pub fn consistent(&self) -> bool {
        self.cocommutative == self.all_primitive && self.cocommutative == self.flip_invariant
    }
}

/// Decides cocommutativity from the signature, with the primitivity of
/// generators, flip invariance of their coproducts and the lantern as
/// evidence.
pub fn cocommutativity_test(h: &HopfAlgebra) -> Result<CocommutativityEvidence> {
    let sig = signature(h)?;
    let l = lantern(h)?;
    let cocommutative = sig.degrees().all(|d| d == 1);
    let mut all_primitive = true;
    let mut flip_invariant = true;
    for i in 0..h.len() {
        all_primitive &= h.reduced_coproduct(&h.generator(i))?.is_zero();
        let d = h.generator_coproduct(i);
        flip_invariant &= d.terms().all(|(legs, c)| &d.coefficient(&[legs[1].clone(), legs[0].clone()]) == c);
    }
    Ok(CocommutativityEvidence {
        cocommutative,
        all_primitive,
        flip_invariant,
        lantern_abelian: l.is_abelian(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::int;

    #[test]
    fn mobius_values() {
        assert_eq!([1, 2, 3, 4, 5, 6, 12, 30].map(mobius), [1, -1, -1, 0, -1, 1, 0, -1]);
    }

    #[test]
    fn witt_numbers() {
        assert_eq!(witt_bound(2, 2), BigInt::from(1));
        assert_eq!(witt_bound(2, 3), BigInt::from(2));
        assert_eq!(witt_bound(3, 2), BigInt::from(3));
        assert_eq!(witt_bound(2, 6), BigInt::from(9));
    }

    #[test]
    fn grading_violation_is_reported() {
        let l = GradedLieAlgebra::new([("u1", 1), ("u2", 1), ("u3", 2)])
            .with_bracket("u1", "u2", &[("u3", int(1))])
            .unwrap()
            .with_bracket("u1", "u3", &[("u2", int(1))])
            .unwrap();
        let r = verify_lie(&l);
        assert_eq!(r.grading_failures, vec![(0, 2, 1)]);
    }

    #[test]
    fn heisenberg_is_carnot() {
        let l = GradedLieAlgebra::new([("X", 1), ("Y", 1), ("Z", 2)])
            .with_bracket("X", "Y", &[("Z", int(1))])
            .unwrap();
        assert!(verify_lie(&l).passed());
        let sig = Signature::from_degrees([1, 1, 2]);
        let rep = numerology_report(&l, &sig);
        assert!(rep.passed(), "{rep}");
        assert_eq!(rep.witt.detail, "m2=1<=1");
        assert_eq!(l.to_string(), "[X,Y] = Z");
    }

    #[test]
    fn gap_in_signature() {
        let v = no_gaps_check(&Signature::from_degrees([1, 1, 3]));
        assert!(!v.passed);
        assert_eq!(v.detail, "degrees {1,3} miss 2");
    }
}
