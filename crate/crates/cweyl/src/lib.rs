//! Exact symbolic verification engine and numerical evaluator for the
//! modular double of the quantum group SL_q(2).
//!
//! The crate is organized in layers. `scalar` provides exact coefficient
//! arithmetic (Gaussian-rational Laurent polynomials and rational functions
//! in the formal variable q, plus exact phase exponents). `weyl` is the
//! noncommutative engine: normal ordering on skew-commutation lattices,
//! tensor products, traces, truncation and the Cartan twist. On top of it,
//! `chevalley` embeds the quantum-group generators into the cyclic Weyl
//! algebra C_q, `qseries` handles the truncated q-exponent and its
//! identities, and `rmat` assembles the truncated universal R-matrix and
//! checks factorization, intertwining and Yang-Baxter. `heiscalc` is an
//! independent exact calculus of exponentials of Heisenberg generators,
//! `matoracle` a finite-dimensional numerical cross-check at roots of
//! unity, and `qdilog` the floating-point evaluator for the noncompact
//! quantum dilogarithm. `suites` and `report` bundle everything into
//! machine-readable verification reports.

pub mod chevalley;
pub mod heiscalc;
pub mod matoracle;
pub mod qdilog;
pub mod qseries;
pub mod report;
pub mod rmat;
pub mod scalar;
pub mod suites;
pub mod weyl;

use thiserror::Error;

/// Errors shared by all engine layers.
#[derive(Debug, Error)]
pub enum Error {
    #[error("division by zero scalar")]
    DivisionByZero,
    #[error("pole at q0 = {q0}: denominator {denominator} vanishes")]
    Pole { q0: String, denominator: String },
    #[error("non-finite complex value at API boundary: {0}")]
    NonFinite(String),
    #[error("lattice mismatch: {0} vs {1}")]
    LatticeMismatch(String, String),
    #[error("series argument has a monomial of graded degree {degree} < 1: {monomial}")]
    NonNilpotentArgument { monomial: String, degree: i64 },
    #[error("coproduct candidate {convention} is not a homomorphism: relation {relation} fails")]
    HomomorphismFailed { convention: String, relation: String },
    #[error("no (twist, coproduct) candidate passes the intertwining test")]
    NoPassingConvention,
    #[error("intertwining test is ambiguous: {0} candidates pass")]
    AmbiguousConvention(usize),
    #[error("centrality broken for {0}: adopted conventions are inconsistent")]
    CentralityBroken(String),
    #[error("Cartan realization mismatch for {0}: adopted prefactor is inconsistent")]
    CartanMismatch(String),
    #[error("central parameter {0} must be nonzero")]
    ZeroCentralParameter(&'static str),
    #[error("pole in coefficient of monomial {monomial} at q0 = {q0}")]
    CoefficientPole { monomial: String, q0: String },
    #[error("decay condition violated: |Im p|/pi = {im_p_over_pi} >= Re(b + 1/b) = {rate}")]
    DecayCondition { im_p_over_pi: f64, rate: f64 },
    #[error("product representation invalid: Im(b^2) = {im_tau} is not positive")]
    ProductRepInvalid { im_tau: f64 },
    #[error("quadrature did not converge: panel refinement still differs by {residual:e}")]
    QuadratureNotConverged { residual: f64 },
    #[error("invalid parameter: {0}")]
    BadParameter(String),
}

pub type Result<T> = std::result::Result<T, Error>;
