//! Exact combinatorial invariants of negative-definite plumbing trees.
//!
//! The input is a resolution/plumbing graph: a tree whose vertices carry
//! Euler numbers (self-intersections) and whose intersection matrix is
//! negative definite. From that single combinatorial object the crate
//! computes, with exact integer/rational arithmetic throughout:
//!
//! * the intersection lattice `L`, its dual `L'`, the discriminant group
//!   `H = L'/L`, the canonical class and the dual basis ([`lattice`]);
//! * coefficients and truncated sums of the multivariable series
//!   `prod_v (1 - t^{E_v^*})^{delta_v - 2}`, which encodes the equivariant
//!   divisorial Hilbert series of a splice-quotient singularity ([`series`]);
//! * Seiberg-Witten invariants of the link per spin^c class, `h^1` of
//!   natural line bundles and the geometric genus ([`invariants`]);
//! * minimal and maximal cycles, the principal-cycle decision procedure,
//!   Newton staircases at base points and the multiplicity ([`cycles`]).
//!
//! No floating point is used anywhere in a production path: rationals are
//! [`num_rational::BigRational`], integers are [`num_bigint::BigInt`].
//! Brute-force reference implementations used to pin test expectations live
//! in [`oracle`].

pub mod cycles;
pub mod error;
pub mod graph;
pub mod invariants;
pub mod lattice;
mod linalg;
pub mod oracle;
pub mod render;
pub mod series;
#[cfg(test)]
pub(crate) mod testutil;

/// Exact integer scalar used for all lattice data.
pub type Int = num_bigint::BigInt;
/// Exact rational scalar used for pairings and invariant values.
pub type Rat = num_rational::BigRational;

pub use error::Error;
pub use graph::{PlumbingGraph, ValidationReport, Violation};
pub use lattice::{HClass, LatticeContext, QCycle};

/// Crate version, embedded in `report` output for provenance.
pub const VERSION: &str = env!("CARGO_PKG_VERSION");
