//! Built-in algebras: the family `B(λ)` with its coideal subalgebras, the
//! four-generator algebra `E(a, b, λ₁, λ₂)` with its right coideal `T`, and
//! enveloping algebras of small Lie algebras.

use num_traits::{One, Zero};

use crate::algebra::{Algebra, Presentation};
use crate::coideal::{Side, Subalgebra, SubalgebraSpec};
use crate::element::Element;
use crate::error::{Error, Result};
use crate::hopf::{default_truncation, HopfAlgebra, HopfData};
use crate::lantern::GradedLieAlgebra;
use crate::scalar::{int, parse_scalar, ratio, Scalar};
use crate::tensor::{parse_tensor, TensorElement};
use std::sync::Arc;

/// `Σ cᵢ mᵢ` with each `mᵢ` written as a normal monomial.
fn poly(p: &Presentation, terms: &[(Scalar, &str)]) -> Result<Element> {
    let mut out = Element::zero();
    for (c, m) in terms {
        out.add_scaled(&p.parse_normal(m)?, c);
    }
    Ok(out)
}

fn coproducts(alg: &Algebra, extra: &[(&str, &str)]) -> Result<Vec<TensorElement>> {
    (0..alg.len())
        .map(|i| {
            let name = &alg.names()[i];
            let mut d = parse_tensor(alg, &format!("1@{name} + {name}@1"), 2)?;
            if let Some((_, t)) = extra.iter().find(|(g, _)| g == name) {
                d.add_scaled(&parse_tensor(alg, t, 2)?, &Scalar::one());
            }
            Ok(d)
        })
        .collect()
}

fn antipodes(alg: &Algebra, given: &[&str]) -> Result<Vec<Element>> {
    given.iter().map(|s| alg.parse(s)).collect()
}

/// Presentation of `B(λ)`: `[X,Y]=Y`, `[Z,X]=-Z+λY`, `[Z,Y]=½Y²`.
pub fn b_presentation(lambda: &Scalar, weights: [u32; 3]) -> Result<Presentation> {
    let p = Presentation::new([("X", weights[0]), ("Y", weights[1]), ("Z", weights[2])])?;
    let xy = poly(&p, &[(int(1), "Y")])?;
    let zx = poly(&p, &[(int(-1), "Z"), (lambda.clone(), "Y")])?;
    let zy = poly(&p, &[(ratio(1, 2), "Y^2")])?;
    p.with_commutator("X", "Y", xy)?
        .with_commutator("Z", "X", zx)?
        .with_commutator("Z", "Y", zy)
}

fn b_data(alg: &Algebra) -> Result<HopfData> {
    Ok(HopfData {
        coproducts: coproducts(alg, &[("Z", "X@Y")])?,
        antipodes: Some(antipodes(alg, &["-X", "-Y", "-Z + X*Y"])?),
    })
}

/// `B(λ)` with `X, Y` primitive and `Δ(Z) = 1⊗Z + X⊗Y + Z⊗1`, certified to
/// the default truncation.
pub fn b_lambda(lambda: &Scalar) -> Result<HopfAlgebra> {
    let alg = Algebra::new(b_presentation(lambda, [1, 1, 2])?)?;
    let data = b_data(&alg)?;
    let n = default_truncation(alg.weights());
    HopfAlgebra::certified(alg, data, n)
}

/// `B(λ)` under arbitrary declared weights, uncertified. Weight
/// declarations that break the termination bound are accepted here so the
/// filtration certificate can diagnose them.
pub fn b_lambda_with_weights(lambda: &Scalar, weights: [u32; 3]) -> Result<HopfAlgebra> {
    let alg = Algebra::new_unchecked(b_presentation(lambda, weights)?)?;
    let data = b_data(&alg)?;
    HopfAlgebra::new(alg, data)
}

/// Presentation of `E(a, b, λ₁, λ₂)` on `X, Y, Z, W` of weights 1, 1, 2, 3.
pub fn e_presentation(a: &Scalar, b: &Scalar, l1: &Scalar, l2: &Scalar) -> Result<Presentation> {
    let p = Presentation::new([("X", 1), ("Y", 1), ("Z", 2), ("W", 3)])?;
    let zx = poly(&p, &[(int(1), "X")])?;
    let wx = poly(&p, &[(a.clone(), "X")])?;
    let wy = poly(&p, &[(b.clone(), "X")])?;
    let wz = poly(&p, &[(a.clone(), "Z"), (int(-1), "W"), (l1.clone(), "X"), (l2.clone(), "Y")])?;
    p.with_commutator("Z", "X", zx)?
        .with_commutator("W", "X", wx)?
        .with_commutator("W", "Y", wy)?
        .with_commutator("W", "Z", wz)
}

/// `E(a, b, λ₁, λ₂)` with the antipode solved from the coproduct.
pub fn e_algebra(a: &Scalar, b: &Scalar, l1: &Scalar, l2: &Scalar) -> Result<HopfAlgebra> {
    let alg = Algebra::new(e_presentation(a, b, l1, l2)?)?;
    let data = HopfData {
        coproducts: coproducts(
            &alg,
            &[("Z", "X@Y - Y@X"), ("W", "Z@X - X@Z + X@X*Y + X*Y@X")],
        )?,
        antipodes: None,
    };
    let n = default_truncation(alg.weights());
    HopfAlgebra::certified(alg, data, n)
}

/// `U(𝔤)` with every basis element primitive of weight 1.
pub fn enveloping(lie: &GradedLieAlgebra) -> Result<HopfAlgebra> {
    let p = Presentation::new(lie.names().iter().map(|n| (n.clone(), 1)))?;
    let mut p = p;
    for (a, b, v) in lie.nonzero_brackets() {
        let value = Element::from_terms(
            v.iter()
                .map(|(e, c)| (crate::monomial::Monomial::generator(*e, p.weights()), c.clone())),
        );
        p.set_commutator(a, b, value)?;
    }
    let alg = Algebra::new(p)?;
    let data = HopfData {
        coproducts: coproducts(&alg, &[])?,
        antipodes: Some((0..alg.len()).map(|i| -alg.generator(i)).collect()),
    };
    let n = default_truncation(alg.weights());
    HopfAlgebra::certified(alg, data, n)
}

/// Abelian Lie algebra on `x1, ..., xn`.
pub fn abelian_lie(n: usize) -> GradedLieAlgebra {
    GradedLieAlgebra::new((1..=n).map(|i| (format!("x{i}"), 1)))
}

/// Two-dimensional nonabelian: `[X,Y] = Y`.
pub fn aff2_lie() -> GradedLieAlgebra {
    GradedLieAlgebra::new([("X", 1), ("Y", 1)])
        .with_bracket("X", "Y", &[("Y", int(1))])
        .expect("valid bracket")
}

/// Heisenberg: `[X,Y] = Z`.
pub fn heisenberg_lie() -> GradedLieAlgebra {
    GradedLieAlgebra::new([("X", 1), ("Y", 1), ("Z", 1)])
        .with_bracket("X", "Y", &[("Z", int(1))])
        .expect("valid bracket")
}

/// `sl2`: `[E,F] = H`, `[H,E] = 2E`, `[H,F] = -2F`.
pub fn sl2_lie() -> GradedLieAlgebra {
    GradedLieAlgebra::new([("E", 1), ("F", 1), ("H", 1)])
        .with_bracket("E", "F", &[("H", int(1))])
        .and_then(|l| l.with_bracket("H", "E", &[("E", int(2))]))
        .and_then(|l| l.with_bracket("H", "F", &[("F", int(-2))]))
        .expect("valid brackets")
}

/// Named Lie algebras for enveloping-algebra built-ins.
pub fn lie_by_name(name: &str) -> Result<GradedLieAlgebra> {
    match name {
        "aff2" => Ok(aff2_lie()),
        "heisenberg" => Ok(heisenberg_lie()),
        "sl2" => Ok(sl2_lie()),
        _ => match name.strip_prefix("abelian") {
            Some(n) => n
                .parse::<usize>()
                .ok()
                .filter(|&n| n > 0)
                .map(abelian_lie)
                .ok_or_else(|| Error::UnknownCatalog(name.to_string())),
            None => Err(Error::UnknownCatalog(name.to_string())),
        },
    }
}

/// Coideal subalgebras of `B(λ)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum BCoideal {
    /// `U(span{X + αY})`.
    G(Scalar),
    /// `U(span{Y})`.
    GInfinity,
    /// `k⟨Y, X + βZ⟩`, left.
    L(Scalar),
    /// `k⟨Y, Z⟩`, left.
    LInfinity,
    /// `k⟨Y, X + β(Z - XY)⟩`, right.
    R(Scalar),
    /// `k⟨Y, Z - XY⟩`, right.
    RInfinity,
}

impl BCoideal {
    pub fn name(&self) -> String {
        let f = crate::scalar::format_scalar;
        match self {
            BCoideal::G(a) => format!("g_{}", f(a)),
            BCoideal::GInfinity => "g_inf".to_string(),
            BCoideal::L(b) => format!("L_{}", f(b)),
            BCoideal::LInfinity => "L_inf".to_string(),
            BCoideal::R(b) => format!("R_{}", f(b)),
            BCoideal::RInfinity => "R_inf".to_string(),
        }
    }

    /// Parses `g_1`, `L_inf`, `R_-1/2` and so on.
    pub fn parse(text: &str) -> Result<Self> {
        let bad = || Error::UnknownCatalog(text.to_string());
        let (kind, param) = text.split_once('_').ok_or_else(bad)?;
        let inf = matches!(param, "inf" | "infinity" | "∞");
        let value = || parse_scalar(param).map_err(|_| bad());
        Ok(match (kind, inf) {
            ("g", true) => BCoideal::GInfinity,
            ("g", false) => BCoideal::G(value()?),
            ("L", true) => BCoideal::LInfinity,
            ("L", false) => BCoideal::L(value()?),
            ("R", true) => BCoideal::RInfinity,
            ("R", false) => BCoideal::R(value()?),
            _ => return Err(bad()),
        })
    }
}

/// The presentation and embedding of one coideal of `B(λ)`.
pub fn b_coideal_spec(host: &HopfAlgebra, which: &BCoideal) -> Result<SubalgebraSpec> {
    let name = which.name();
    let half = ratio(1, 2);
    let y = host.parse("Y")?;
    // Rank-two coideals: Y and an Ore variable v with [v,Y] = lin·Y + quad·Y².
    let ore = |v: &str, w: u32, lin: Scalar, quad: Scalar, image: Element, side: Side| {
        let p = Presentation::new([("Y", 1), (v, w)])?;
        let value = poly(&p, &[(lin, "Y"), (quad, "Y^2")])?;
        let p = p.with_commutator(v, "Y", value)?;
        SubalgebraSpec::new(&name, p, vec![y.clone(), image], side)
    };
    let weight = |b: &Scalar| if b.is_zero() { 1 } else { 2 };
    let ore_name = |b: &Scalar| if b.is_zero() { "X" } else { "V" };
    let side_unless_zero = |b: &Scalar, side| if b.is_zero() { Side::Hopf } else { side };
    match which {
        BCoideal::G(a) => {
            let p = Presentation::new([(ore_name(a), 1)])?;
            let image = &host.parse("X")? + &y.scaled(a);
            SubalgebraSpec::new(&name, p, vec![image], Side::Hopf)
        }
        BCoideal::GInfinity => {
            let p = Presentation::new([("Y", 1)])?;
            SubalgebraSpec::new(&name, p, vec![y.clone()], Side::Hopf)
        }
        BCoideal::L(b) => {
            let image = &host.parse("X")? + &host.parse("Z")?.scaled(b);
            ore(ore_name(b), weight(b), int(1), b * &half, image, side_unless_zero(b, Side::Left))
        }
        BCoideal::LInfinity => ore("Z", 2, Scalar::zero(), half.clone(), host.parse("Z")?, Side::Left),
        BCoideal::R(b) => {
            let image = &host.parse("X")? + &host.parse("Z - X*Y")?.scaled(b);
            ore(ore_name(b), weight(b), int(1), -(b * &half), image, side_unless_zero(b, Side::Right))
        }
        BCoideal::RInfinity => ore("W", 2, Scalar::zero(), -half.clone(), host.parse("Z - X*Y")?, Side::Right),
    }
}

/// Registers one coideal of a certified `B(λ)`.
pub fn b_coideal(host: &Arc<HopfAlgebra>, which: &BCoideal) -> Result<Subalgebra> {
    Subalgebra::register(host.clone(), b_coideal_spec(host, which)?)
}

/// The right coideal `T = k⟨X, Y, U⟩` of `E` with `U = W - XZ`,
/// `[U,X] = aX - X²`, `[U,Y] = bX`.
pub fn e_coideal_spec(host: &HopfAlgebra, a: &Scalar, b: &Scalar) -> Result<SubalgebraSpec> {
    let p = Presentation::new([("X", 1), ("Y", 1), ("U", 3)])?;
    let ux = poly(&p, &[(a.clone(), "X"), (int(-1), "X^2")])?;
    let uy = poly(&p, &[(b.clone(), "X")])?;
    let p = p.with_commutator("U", "X", ux)?.with_commutator("U", "Y", uy)?;
    let images = vec![host.parse("X")?, host.parse("Y")?, host.parse("W - X*Z")?];
    SubalgebraSpec::new("T", p, images, Side::Right)
}

pub fn e_coideal(host: &Arc<HopfAlgebra>, a: &Scalar, b: &Scalar) -> Result<Subalgebra> {
    Subalgebra::register(host.clone(), e_coideal_spec(host, a, b)?)
}

/// Resolves `B:λ`, `E:a,b,λ₁,λ₂` and `U:<lie>` (with `<lie>` one of
/// `aff2`, `heisenberg`, `sl2`, `abelianN`).
pub fn builtin(spec: &str) -> Result<HopfAlgebra> {
    let (kind, params) = spec.split_once(':').unwrap_or((spec, ""));
    let scalars = || -> Result<Vec<Scalar>> {
        if params.trim().is_empty() {
            return Ok(Vec::new());
        }
        params.split(',').map(parse_scalar).collect()
    };
    match kind {
        "B" => {
            let p = scalars()?;
            let lambda = match p.as_slice() {
                [] => Scalar::zero(),
                [l] => l.clone(),
                _ => return Err(Error::UnknownCatalog(spec.to_string())),
            };
            b_lambda(&lambda)
        }
        "E" => {
            let p = scalars()?;
            match p.as_slice() {
                [] => e_algebra(&int(1), &int(1), &int(0), &int(0)),
                [a, b, l1, l2] => e_algebra(a, b, l1, l2),
                _ => Err(Error::UnknownCatalog(spec.to_string())),
            }
        }
        "U" => enveloping(&lie_by_name(params)?),
        _ => Err(Error::UnknownCatalog(spec.to_string())),
    }
}
