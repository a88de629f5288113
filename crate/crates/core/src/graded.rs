//! Filtration certificates, signatures, Hilbert series and the leading
//! coproduct of the associated graded Hopf algebra.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::Mul;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::hopf::{AxiomGroup, HopfAlgebra};
use crate::linalg::rank;
use crate::monomial::{monomials_up_to, Monomial};
use crate::scalar::{format_scalar, Scalar};
use crate::tensor::TensorElement;

/// Witness that the weight filtration equals the coradical filtration up
/// to the truncation order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiltrationCertificate {
    truncation: u32,
    /// `dim H(n)` for `n = 0..=truncation`.
    graded_dims: Vec<usize>,
}

impl FiltrationCertificate {
    pub fn truncation(&self) -> u32 {
        self.truncation
    }

    pub fn graded_dims(&self) -> &[usize] {
        &self.graded_dims
    }

    /// `dim H_n`, the cumulative dimensions.
    pub fn filtered_dims(&self) -> Vec<usize> {
        self.graded_dims
            .iter()
            .scan(0, |acc, d| {
                *acc += d;
                Some(*acc)
            })
            .collect()
    }
}

/// For each `n ≤ N`, checks that `ker Δ̃ⁿ` on the span of non-identity
/// monomials of weight `≤ N` is exactly the span of those of weight `≤ n`,
/// after checking every generator's weight against its coradical degree.
pub fn certify_filtration(h: &HopfAlgebra, truncation: u32) -> Result<FiltrationCertificate> {
    for group in [AxiomGroup::Relations, AxiomGroup::Coassociativity, AxiomGroup::Counit] {
        if !h.axioms().group_passed(group) {
            return Err(Error::MissingCertificate("passing Hopf axiom checks"));
        }
    }
    for (i, &w) in h.weights().iter().enumerate() {
        let degree = h.coradical_degree(&h.generator(i))?;
        if degree != w as usize {
            return Err(Error::Reweight {
                generator: h.names()[i].clone(),
                declared: w,
                degree,
            });
        }
    }
    let monos: Vec<Monomial> = monomials_up_to(h.weights(), truncation)
        .into_iter()
        .filter(|m| !m.is_identity())
        .collect();
    let mut images: Vec<TensorElement> = monos
        .iter()
        .map(|m| TensorElement::basis(vec![m.clone()], Scalar::one()))
        .collect();
    let mut graded_dims = vec![0usize; truncation as usize + 1];
    graded_dims[0] = 1;
    for m in &monos {
        graded_dims[m.weight() as usize] += 1;
    }
    for n in 1..=truncation {
        images = images
            .iter()
            .map(|t| h.reduce_first_leg(t))
            .collect::<Result<_>>()?;
        let low = monos.iter().filter(|m| m.weight() <= n).count();
        if let Some(m) = monos.iter().zip(&images).find(|(m, t)| m.weight() <= n && !t.is_zero()) {
            return Err(Error::Filtration {
                degree: n,
                reason: format!(
                    "{} has weight {} but its {n}-fold reduced coproduct is nonzero",
                    m.0.display(h.names()),
                    m.0.weight()
                ),
            });
        }
        let r = rank(images.iter().map(|t| t.as_map().clone()));
        let kernel_dim = monos.len() - r;
        if kernel_dim != low {
            return Err(Error::Filtration {
                degree: n,
                reason: format!(
                    "kernel of the {n}-fold reduced coproduct has dimension {kernel_dim}, expected {low}"
                ),
            });
        }
    }
    Ok(FiltrationCertificate {
        truncation,
        graded_dims,
    })
}

/// Multiset of degrees, stored as `(degree, multiplicity)` with strictly
/// increasing degrees.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Signature {
    parts: Vec<(u32, usize)>,
}

impl Signature {
    pub fn from_degrees(degrees: impl IntoIterator<Item = u32>) -> Self {
        let mut counts: BTreeMap<u32, usize> = BTreeMap::new();
        for d in degrees {
            *counts.entry(d).or_default() += 1;
        }
        Signature {
            parts: counts.into_iter().collect(),
        }
    }

    pub fn from_parts(parts: impl IntoIterator<Item = (u32, usize)>) -> Self {
        Signature::from_degrees(
            parts
                .into_iter()
                .flat_map(|(d, m)| std::iter::repeat_n(d, m)),
        )
    }

    pub fn parts(&self) -> &[(u32, usize)] {
        &self.parts
    }

    pub fn degrees(&self) -> impl Iterator<Item = u32> + '_ {
        self.parts.iter().map(|&(d, _)| d)
    }

    pub fn multiplicity(&self, degree: u32) -> usize {
        self.parts
            .iter()
            .find(|&&(d, _)| d == degree)
            .map_or(0, |&(_, m)| m)
    }

    /// Number of generators, `Σ mᵢ`.
    pub fn count(&self) -> usize {
        self.parts.iter().map(|&(_, m)| m).sum()
    }

    /// `Σ dᵢ mᵢ`.
    pub fn total(&self) -> u64 {
        self.parts.iter().map(|&(d, m)| d as u64 * m as u64).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }
}

impl fmt::Display for Signature {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (k, &(d, m)) in self.parts.iter().enumerate() {
            if k > 0 {
                f.write_str(", ")?;
            }
            if m == 1 {
                write!(f, "{d}")?;
            } else {
                write!(f, "{d}^{m}")?;
            }
        }
        f.write_str(")")
    }
}

/// Truncated power series in `t`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PowerSeries {
    coeffs: Vec<Scalar>,
}

impl PowerSeries {
    pub fn new(coeffs: Vec<Scalar>) -> Self {
        assert!(!coeffs.is_empty(), "power series needs order >= 0");
        PowerSeries { coeffs }
    }

    pub fn one(order: usize) -> Self {
        let mut coeffs = vec![Scalar::zero(); order + 1];
        coeffs[0] = Scalar::one();
        PowerSeries { coeffs }
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[Scalar] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> &Scalar {
        &self.coeffs[i]
    }

    /// `1/(1 - t^d)` to the given order.
    pub fn geometric(d: u32, order: usize) -> Self {
        assert!(d > 0, "degree must be positive");
        let coeffs = (0..=order)
            .map(|i| if i % d as usize == 0 { Scalar::one() } else { Scalar::zero() })
            .collect();
        PowerSeries { coeffs }
    }
}

impl Mul for &PowerSeries {
    type Output = PowerSeries;
    fn mul(self, rhs: &PowerSeries) -> PowerSeries {
        let order = self.order().min(rhs.order());
        let mut coeffs = vec![Scalar::zero(); order + 1];
        for (i, a) in self.coeffs.iter().enumerate().take(order + 1) {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate().take(order + 1 - i) {
                coeffs[i + j] += a * b;
            }
        }
        PowerSeries { coeffs }
    }
}

impl fmt::Display for PowerSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut wrote = false;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let neg = c < &Scalar::zero();
            let abs = if neg { -c.clone() } else { c.clone() };
            match (wrote, neg) {
                (false, true) => f.write_str("-")?,
                (true, false) => f.write_str(" + ")?,
                (true, true) => f.write_str(" - ")?,
                _ => {}
            }
            wrote = true;
            let coef = if abs.is_one() && i > 0 { String::new() } else { format_scalar(&abs) };
            match i {
                0 => write!(f, "{coef}")?,
                1 => write!(f, "{coef}t")?,
                _ => write!(f, "{coef}t^{i}")?,
            }
        }
        if !wrote {
            f.write_str("0")?;
        }
        Ok(())
    }
}

/// `∏ 1/(1 - t^{dᵢ})^{mᵢ}` truncated at `order`.
pub fn hilbert_series(sig: &Signature, order: usize) -> PowerSeries {
    let mut acc = PowerSeries::one(order);
    for &(d, m) in sig.parts() {
        let g = PowerSeries::geometric(d, order);
        for _ in 0..m {
            acc = &acc * &g;
        }
    }
    acc
}

/// The complementary multiset when `sub` is contained in `full`.
pub fn hilbert_divides(sub: &Signature, full: &Signature) -> Option<Signature> {
    let mut rest: BTreeMap<u32, usize> = full.parts().iter().copied().collect();
    for &(d, m) in sub.parts() {
        let have = rest.get_mut(&d)?;
        *have = have.checked_sub(m)?;
    }
    Some(Signature::from_parts(rest))
}

/// Signature of a certified Hopf algebra: its generator weights.
pub fn signature(h: &HopfAlgebra) -> Result<Signature> {
    h.require_filtration()?;
    Ok(Signature::from_degrees(h.weights().iter().copied()))
}

/// Terms of `Δ(g_i)` whose legs have total weight `w_i`.
pub fn graded_coproduct_leading(h: &HopfAlgebra, i: usize) -> Result<TensorElement> {
    h.require_filtration()?;
    Ok(h.generator_coproduct(i).homogeneous_part(h.weights()[i]))
}
