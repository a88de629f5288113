//! Ordered (normal) monomials over a list of weighted generators.

use std::cmp::Ordering;
use std::fmt;

/// Filtration weight of an element. The zero element has weight `NegInfinity`,
/// which sorts below every finite weight.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Weight {
    NegInfinity,
    Finite(u32),
}

impl Weight {
    pub fn finite(self) -> Option<u32> {
        match self {
            Weight::NegInfinity => None,
            Weight::Finite(w) => Some(w),
        }
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Weight::NegInfinity => f.write_str("-inf"),
            Weight::Finite(w) => write!(f, "{w}"),
        }
    }
}

/// Exponent vector `x_1^{a_1} ... x_n^{a_n}` with its cached weight.
///
/// Ordering is by weight first; within a weight, monomials with larger
/// exponents on earlier generators come first (so `X^2 < X*Y < Y^2`).
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Monomial {
    weight: u32,
    exps: Vec<u32>,
}

impl Monomial {
    pub fn new(exps: Vec<u32>, weights: &[u32]) -> Self {
        assert_eq!(exps.len(), weights.len(), "exponent vector length");
        let weight = exps.iter().zip(weights).map(|(a, w)| a * w).sum();
        Monomial { weight, exps }
    }

    pub fn identity(len: usize) -> Self {
        Monomial {
            weight: 0,
            exps: vec![0; len],
        }
    }

    pub fn generator(index: usize, weights: &[u32]) -> Self {
        let mut exps = vec![0; weights.len()];
        exps[index] = 1;
        Monomial::new(exps, weights)
    }

    pub fn weight(&self) -> u32 {
        self.weight
    }

    pub fn exps(&self) -> &[u32] {
        &self.exps
    }

    pub fn len(&self) -> usize {
        self.exps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.exps.is_empty()
    }

    pub fn is_identity(&self) -> bool {
        self.exps.iter().all(|&a| a == 0)
    }

    /// Total number of generator letters.
    pub fn degree(&self) -> u32 {
        self.exps.iter().sum()
    }

    /// Index of the last generator with a nonzero exponent.
    pub fn last_index(&self) -> Option<usize> {
        self.exps.iter().rposition(|&a| a > 0)
    }

    /// The ascending word of generator indices spelling this monomial.
    pub fn word(&self) -> Vec<usize> {
        let mut word = Vec::with_capacity(self.degree() as usize);
        for (i, &a) in self.exps.iter().enumerate() {
            word.extend(std::iter::repeat_n(i, a as usize));
        }
        word
    }

    /// Returns the monomial with exponent `index` changed by `delta`.
    pub(crate) fn bumped(&self, index: usize, delta: i32, weights: &[u32]) -> Self {
        let mut exps = self.exps.clone();
        let e = exps[index] as i64 + delta as i64;
        assert!(e >= 0, "negative exponent");
        exps[index] = e as u32;
        let weight = (self.weight as i64 + delta as i64 * weights[index] as i64) as u32;
        Monomial { weight, exps }
    }

    pub fn display<'a>(&'a self, names: &'a [String]) -> MonomialDisplay<'a> {
        MonomialDisplay { mono: self, names }
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.weight
            .cmp(&other.weight)
            .then_with(|| other.exps.cmp(&self.exps))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

pub struct MonomialDisplay<'a> {
    mono: &'a Monomial,
    names: &'a [String],
}

impl fmt::Display for MonomialDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.mono.is_identity() {
            return f.write_str("1");
        }
        let mut first = true;
        for (i, &a) in self.mono.exps.iter().enumerate() {
            if a == 0 {
                continue;
            }
            if !first {
                f.write_str("*")?;
            }
            first = false;
            f.write_str(&self.names[i])?;
            if a > 1 {
                write!(f, "^{a}")?;
            }
        }
        Ok(())
    }
}

/// All exponent vectors whose weight is at most `max_weight`, in monomial order.
/// The identity is included.
pub fn monomials_up_to(weights: &[u32], max_weight: u32) -> Vec<Monomial> {
    let mut out = Vec::new();
    let mut exps = vec![0u32; weights.len()];
    fn rec(
        i: usize,
        remaining: u32,
        weights: &[u32],
        exps: &mut Vec<u32>,
        out: &mut Vec<Monomial>,
    ) {
        if i == weights.len() {
            out.push(Monomial::new(exps.clone(), weights));
            return;
        }
        let w = weights[i];
        let mut a = 0;
        while a * w <= remaining {
            exps[i] = a;
            rec(i + 1, remaining - a * w, weights, exps, out);
            a += 1;
            if w == 0 {
                break;
            }
        }
        exps[i] = 0;
    }
    rec(0, max_weight, weights, &mut exps, &mut out);
    out.sort();
    out
}

/// Monomials of weight exactly `weight`.
pub fn monomials_of_weight(weights: &[u32], weight: u32) -> Vec<Monomial> {
    monomials_up_to(weights, weight)
        .into_iter()
        .filter(|m| m.weight() == weight)
        .collect()
}
