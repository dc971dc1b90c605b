//! Domain errors shared across the crate.

use std::fmt;

use crate::graph::Violation;

/// Everything that can go wrong between a text document and an invariant.
///
/// Validation failures are carried as data ([`Violation`]) so that a report
/// can list all of them at once; `Error::InvalidGraph` wraps them when an
/// operation requires a valid graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// Input could not be read.
    Io(String),
    /// Malformed input document.
    Syntax(String),
    /// Two vertices share an id.
    DuplicateId(String),
    /// An edge endpoint was never declared.
    UnknownEndpoint(String),
    /// A vertex declares a nonzero genus; only genus-zero graphs are supported.
    NonZeroGenus(String),
    /// The graph failed validation.
    InvalidGraph(Vec<Violation>),
    /// Cycles from two different lattice contexts were mixed.
    ContextMismatch,
    /// A cycle required to be integral and effective is not.
    NotEffective,
    /// A monomial exponent vector does not match the end set.
    UnknownEnd,
    /// The principal-cycle test is only defined on the anti-nef cone.
    InputOutsideCone,
    /// A staircase axis search exceeded the configured cap.
    UnboundedStaircase(String),
    /// A value that must be an integer came out fractional.
    NonIntegralResult(String),
    /// A value that must be nonnegative came out negative.
    NegativeResult(String),
    /// A string-graph oracle was called on a non-string graph.
    NotAString,
    /// A brute-force search box contained no candidate.
    BoxTooSmall,
    /// A vertex id does not occur in the graph.
    UnknownVertex(String),
    /// A rational cycle is not a point of the dual lattice `L'`.
    NotInDualLattice(String),
    /// A malformed cycle or class literal on the command line.
    BadLiteral(String),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::Io(m) => write!(f, "io error: {m}"),
            Error::Syntax(m) => write!(f, "syntax error: {m}"),
            Error::DuplicateId(id) => write!(f, "duplicate vertex id {id:?}"),
            Error::UnknownEndpoint(id) => write!(f, "edge endpoint {id:?} is not a declared vertex"),
            Error::NonZeroGenus(id) => write!(f, "vertex {id:?} has nonzero genus; only genus-zero graphs are supported"),
            Error::InvalidGraph(vs) => {
                write!(f, "invalid graph:")?;
                for v in vs {
                    write!(f, " {v};")?;
                }
                Ok(())
            }
            Error::ContextMismatch => write!(f, "cycle belongs to a different lattice context"),
            Error::NotEffective => write!(f, "cycle must be integral and effective"),
            Error::UnknownEnd => write!(f, "exponent vector does not match the end set"),
            Error::InputOutsideCone => write!(f, "cycle is outside the anti-nef cone"),
            Error::UnboundedStaircase(m) => write!(f, "staircase search exceeded the cap: {m}"),
            Error::NonIntegralResult(m) => write!(f, "non-integral result: {m}"),
            Error::NegativeResult(m) => write!(f, "negative result: {m}"),
            Error::NotAString => write!(f, "graph is not a string (path)"),
            Error::BoxTooSmall => write!(f, "search box contained no candidate"),
            Error::UnknownVertex(id) => write!(f, "unknown vertex id {id:?}"),
            Error::NotInDualLattice(m) => write!(f, "cycle is not in the dual lattice: {m}"),
            Error::BadLiteral(m) => write!(f, "malformed literal: {m}"),
        }
    }
}

impl std::error::Error for Error {}

impl Error {
    /// Stable machine-readable kind tag used in JSON error output.
    pub fn kind(&self) -> &'static str {
        match self {
            Error::Io(_) => "Io",
            Error::Syntax(_) => "SyntaxError",
            Error::DuplicateId(_) => "DuplicateId",
            Error::UnknownEndpoint(_) => "UnknownEndpoint",
            Error::NonZeroGenus(_) => "NonZeroGenus",
            Error::InvalidGraph(_) => "InvalidGraph",
            Error::ContextMismatch => "ContextMismatch",
            Error::NotEffective => "NotEffective",
            Error::UnknownEnd => "UnknownEnd",
            Error::InputOutsideCone => "InputOutsideCone",
            Error::UnboundedStaircase(_) => "UnboundedStaircase",
            Error::NonIntegralResult(_) => "NonIntegralResult",
            Error::NegativeResult(_) => "NegativeResult",
            Error::NotAString => "NotAString",
            Error::BoxTooSmall => "BoxTooSmall",
            Error::UnknownVertex(_) => "UnknownVertex",
            Error::NotInDualLattice(_) => "NotInDualLattice",
            Error::BadLiteral(_) => "BadLiteral",
        }
    }
}
