//! Error types shared across the crate.

use std::error::Error as StdError;
use std::fmt;
use std::io;

/// What went wrong while tokenizing or parsing an expression string.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ParseErrorKind {
    /// A malformed token sequence, with a human-readable description.
    Syntax(String),
    /// The exponent of `^` contains the variable (only constant exponents
    /// are supported).
    NonConstantExponent,
    /// An identifier outside the builtin set (`x`, `pi`, `e`, and the
    /// builtin function names).
    UnknownIdentifier(String),
}

/// Parse failure at a byte offset of the input string.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseError {
    pub offset: usize,
    pub kind: ParseErrorKind,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.kind {
            ParseErrorKind::Syntax(msg) => {
                write!(f, "syntax error at offset {}: {}", self.offset, msg)
            }
            ParseErrorKind::NonConstantExponent => write!(
                f,
                "non-constant exponent at offset {}: the exponent of '^' must not contain 'x'",
                self.offset
            ),
            ParseErrorKind::UnknownIdentifier(name) => {
                write!(f, "unknown identifier '{}' at offset {}", name, self.offset)
            }
        }
    }
}

impl StdError for ParseError {}

/// A sub-expression is undefined or non-smooth at the evaluation point
/// (log of a non-positive value, division by zero, and so on).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DomainError {
    /// Which operation failed, e.g. `"ln"` or `"div"`.
    pub op: &'static str,
    /// The offending input value of that operation.
    pub argument: f64,
    /// The expansion center being evaluated.
    pub center: f64,
}

impl fmt::Display for DomainError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "domain error: '{}' undefined for argument {} (expansion center {})",
            self.op, self.argument, self.center
        )
    }
}

impl StdError for DomainError {}

/// Errors from Taylor polynomial construction.
#[derive(Debug, Clone, PartialEq)]
pub enum TaylorError {
    /// The requested order is not an odd positive integer.
    EvenOrder { order: usize },
    Domain(DomainError),
}

impl fmt::Display for TaylorError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TaylorError::EvenOrder { order } => {
                write!(f, "order must be an odd positive integer, got {}", order)
            }
            TaylorError::Domain(e) => e.fmt(f),
        }
    }
}

impl StdError for TaylorError {}

impl From<DomainError> for TaylorError {
    fn from(e: DomainError) -> Self {
        TaylorError::Domain(e)
    }
}

/// Errors from the adaptive quadrature of the integral remainder.
#[derive(Debug, Clone, PartialEq)]
pub enum QuadratureError {
    /// The panel subdivision hit the depth cap before reaching the
    /// requested tolerance.
    NonConvergence { max_depth: usize },
    Taylor(TaylorError),
}

impl fmt::Display for QuadratureError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            QuadratureError::NonConvergence { max_depth } => write!(
                f,
                "quadrature did not converge within subdivision depth {}",
                max_depth
            ),
            QuadratureError::Taylor(e) => e.fmt(f),
        }
    }
}

impl StdError for QuadratureError {}

impl From<TaylorError> for QuadratureError {
    fn from(e: TaylorError) -> Self {
        QuadratureError::Taylor(e)
    }
}

impl From<DomainError> for QuadratureError {
    fn from(e: DomainError) -> Self {
        QuadratureError::Taylor(TaylorError::Domain(e))
    }
}

/// Errors from the tangency solver.
#[derive(Debug, Clone, PartialEq)]
pub enum SolverError {
    /// The query point lies on the graph of `f`; the illumination index is
    /// defined only off the graph.
    PointOnGraph { s: f64, t: f64, f_s: f64 },
    /// A solver configuration field is out of range.
    InvalidConfig(String),
    Taylor(TaylorError),
}

impl fmt::Display for SolverError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SolverError::PointOnGraph { s, t, f_s } => write!(
                f,
                "point ({}, {}) lies on the graph (f({}) = {})",
                s, t, s, f_s
            ),
            SolverError::InvalidConfig(msg) => write!(f, "invalid solver config: {}", msg),
            SolverError::Taylor(e) => e.fmt(f),
        }
    }
}

impl StdError for SolverError {}

impl From<TaylorError> for SolverError {
    fn from(e: TaylorError) -> Self {
        SolverError::Taylor(e)
    }
}

impl From<DomainError> for SolverError {
    fn from(e: DomainError) -> Self {
        SolverError::Taylor(TaylorError::Domain(e))
    }
}

/// Errors from the Taylor mean.
#[derive(Debug, Clone, PartialEq)]
pub enum MeanError {
    /// The endpoints do not bracket a zero of `P_b - P_a`; the lemma
    /// hypotheses are violated and bisection is impossible.
    NoSignChange { d_a: f64, d_b: f64 },
    /// `a < b` is required.
    InvalidInterval { a: f64, b: f64 },
    Taylor(TaylorError),
}

impl fmt::Display for MeanError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MeanError::NoSignChange { d_a, d_b } => write!(
                f,
                "P_b - P_a does not change sign on [a, b] (d(a) = {}, d(b) = {})",
                d_a, d_b
            ),
            MeanError::InvalidInterval { a, b } => {
                write!(f, "invalid interval: a = {} must be less than b = {}", a, b)
            }
            MeanError::Taylor(e) => e.fmt(f),
        }
    }
}

impl StdError for MeanError {}

impl From<TaylorError> for MeanError {
    fn from(e: TaylorError) -> Self {
        MeanError::Taylor(e)
    }
}

impl From<DomainError> for MeanError {
    fn from(e: DomainError) -> Self {
        MeanError::Taylor(TaylorError::Domain(e))
    }
}

/// Errors from atlas export.
#[derive(Debug)]
pub enum AtlasError {
    Io(io::Error),
    Solver(SolverError),
}

impl fmt::Display for AtlasError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AtlasError::Io(e) => write!(f, "atlas i/o error: {}", e),
            AtlasError::Solver(e) => e.fmt(f),
        }
    }
}

impl StdError for AtlasError {}

impl From<io::Error> for AtlasError {
    fn from(e: io::Error) -> Self {
        AtlasError::Io(e)
    }
}

impl From<SolverError> for AtlasError {
    fn from(e: SolverError) -> Self {
        AtlasError::Solver(e)
    }
}
