use thiserror::Error;

use crate::algebra::{ConfluenceReport, TerminationReport};

#[derive(Debug, Error)]
pub enum Error {
    #[error("parse error: {0}")]
    Parse(String),

    #[error("invalid presentation: {0}")]
    Presentation(String),

    #[error("rewriting does not terminate under the declared weights:\n{0}")]
    Termination(TerminationReport),

    #[error("rewriting system is not confluent:\n{0}")]
    Confluence(ConfluenceReport),

    #[error("operands belong to different presentations ({left} vs {right} generators)")]
    PresentationMismatch { left: usize, right: usize },

    #[error("tensor arity mismatch: expected {expected}, found {found}")]
    Arity { expected: usize, found: usize },

    #[error("leg {leg} out of range for arity {arity}")]
    LegOutOfRange { leg: usize, arity: usize },

    #[error("invalid Hopf data: {0}")]
    HopfData(String),

    #[error("antipode data absent; solve first")]
    AntipodeMissing,

    #[error("antipode recursion failed: {0}")]
    AntipodeRecursion(String),

    #[error("Hopf axioms fail:\n{0}")]
    HopfAxioms(String),

    #[error("element has nonzero counit {0}; project onto the counit kernel first")]
    NonzeroCounit(String),

    #[error("the zero element has no coradical degree")]
    ZeroElement,

    #[error("reduced coproduct leg outside the counit kernel (malformed coproduct data)")]
    LegNotAugmented,

    #[error("coradical degree of {0} exceeds the iteration bound {1}")]
    DegreeBound(String, usize),

    #[error("reweight {generator} to {degree}: declared weight {declared} differs from its coradical degree")]
    Reweight {
        generator: String,
        declared: u32,
        degree: usize,
    },

    #[error("filtration certificate fails at degree {degree}: {reason}")]
    Filtration { degree: u32, reason: String },

    #[error("missing certificate: {0}")]
    MissingCertificate(&'static str),

    #[error("element of weight {weight} is beyond the truncation order {truncation}")]
    BeyondTruncation { weight: u32, truncation: u32 },

    #[error("inverse antipode: {0}")]
    AntipodeInverse(String),

    #[error("subalgebra {name}: relation [{a},{b}] is not respected by the embedding")]
    NotHomomorphism { name: String, a: String, b: String },

    #[error("subalgebra {name}: images of normal monomials are linearly dependent ({detail})")]
    DependentEmbedding { name: String, detail: String },

    #[error("coideal certificate violation: {0}")]
    CoidealViolation(String),

    #[error("character: {0}")]
    Character(String),

    #[error("automorphism: {0}")]
    Automorphism(String),

    #[error("Lie algebra: {0}")]
    Lie(String),

    #[error("internal inconsistency: {0}")]
    Internal(String),

    #[error("unknown catalog object `{0}`")]
    UnknownCatalog(String),
}

pub type Result<T> = std::result::Result<T, Error>;
