//! Exact computation of link signature invariants.
//!
//! This crate computes equivariant, Levine-Tristram and multivariate
//! signatures and nullities of Seifert links and iterated torus links,
//! entirely in exact rational arithmetic:
//!
//! - [`torus`] — closed lattice-point formulas for a torus link together
//!   with one or both cores of its companion tori,
//! - [`seifert`] — sawtooth-sum formulas for arbitrary Seifert links,
//!   their cyclotomic-factored Alexander polynomials, and the multivariate
//!   signature via hyperplane reduction,
//! - [`splice`] — splice trees, cabling recipes, and the recursive
//!   signature/nullity evaluation of spliced links,
//! - [`oracle`] — an independent brute-force check via Seifert matrices of
//!   positive braid closures,
//! - [`sweep`] — breakpoint-exact sweeps of signature functions,
//! - [`parse`] — a small text DSL for Seifert data, splice trees and
//!   cabling recipes (used by the `linksig` binary).
//!
//! Start with the `examples/` directory; each example is a runnable tour
//! of one capability.

pub mod alexander;
pub mod exact;
pub mod lattice;
pub mod oracle;
pub mod parse;
pub mod seifert;
pub mod splice;
pub mod sweep;
pub mod torus;
pub mod verify;

use std::fmt;

pub use alexander::FactoredPoly;
pub use exact::{ind, sawtooth, Angle, Rational};
pub use lattice::{LatticeCounts, Parallelogram};
pub use oracle::{BraidWord, SeifertMatrix};
pub use seifert::{SeifertDerived, SeifertLinkSpec};
pub use splice::{CablingRecipe, SpliceTree};
pub use torus::CoredTorusLink;

/// Equivariant signature, Levine-Tristram signature and nullity at one
/// unit-circle point.
#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize)]
pub struct SignatureTriple {
    pub sigma_minus: i64,
    pub sigma: i64,
    pub nullity: i64,
}

#[derive(Debug, Clone, PartialEq)]
pub enum Error {
    /// Weight 0 would produce a generalized Hopf piece, which has no
    /// closed signature formula here.
    ZeroWeight,
    /// Two weights > 1 share a factor; the data does not describe a
    /// Seifert homology sphere.
    NonCoprimeWeights(u64, u64),
    /// An angle must satisfy 0 <= value < 1.
    AngleOutOfRange(String),
    /// The operation is undefined at the removal value (angle 0).
    ThetaZero,
    /// Full signature/nullity of a cored torus link needs core
    /// multiplicities in {0,1}; only the equivariant signature extends to
    /// multilinks.
    MultilinkFullSignature { m1: u32, m2: u32 },
    /// Component index out of range.
    ComponentIndex(usize),
    /// A retained-component list must be non-empty.
    NoRetainedComponents,
    /// The formula requires an unreversed, positively fibered spec.
    PositiveSpecRequired,
    UnknownComponent(String),
    DuplicateComponent(String),
    /// A cabling step with these parameters produces no valid Seifert
    /// piece (for example a weight-0 piece).
    DegenerateCable { p: i64, q: i64 },
    /// Both splice-edge characters equal 1: the splice formula does not
    /// apply and the correction (slope) theory is out of scope here.
    ExceptionalCharacter { left: String, right: String },
    /// A braid word whose closure has a disconnected Seifert surface.
    DisconnectedBraid { missing_generator: usize },
    /// An eigenvalue fell inside the ambiguous zero band.
    IndeterminateEigenvalue { ratio: f64 },
    /// DSL syntax or semantic error, with a byte offset into the input.
    Parse { offset: usize, message: String },
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::ZeroWeight => write!(f, "weight 0 is not supported"),
            Error::NonCoprimeWeights(a, b) => {
                write!(f, "weights {a} and {b} are not coprime")
            }
            Error::AngleOutOfRange(v) => write!(f, "angle {v} not in [0,1)"),
            Error::ThetaZero => write!(f, "theta = 0 means component removal and is rejected here"),
            Error::MultilinkFullSignature { m1, m2 } => write!(
                f,
                "sigma/nullity need m1, m2 in {{0,1}} (got {m1}, {m2}); only sigma_minus extends to multilinks"
            ),
            Error::ComponentIndex(i) => write!(f, "component index {i} out of range"),
            Error::NoRetainedComponents => write!(f, "a link needs at least one retained component"),
            Error::PositiveSpecRequired => {
                write!(f, "operation defined for unreversed, positively fibered Seifert data")
            }
            Error::UnknownComponent(n) => write!(f, "unknown component `{n}`"),
            Error::DuplicateComponent(n) => write!(f, "duplicate component name `{n}`"),
            Error::DegenerateCable { p, q } => write!(f, "degenerate cabling parameters ({p},{q})"),
            Error::ExceptionalCharacter { left, right } => write!(
                f,
                "exceptional character at splice edge ({left}, {right}): both edge characters are 1"
            ),
            Error::DisconnectedBraid { missing_generator } => write!(
                f,
                "generator {missing_generator} does not occur: Seifert surface disconnected"
            ),
            Error::IndeterminateEigenvalue { ratio } => write!(
                f,
                "eigenvalue magnitude {ratio:.3e} (relative) lies in the ambiguous zero band"
            ),
            Error::Parse { offset, message } => write!(f, "parse error at byte {offset}: {message}"),
        }
    }
}

impl std::error::Error for Error {}

pub type Result<T> = std::result::Result<T, Error>;
