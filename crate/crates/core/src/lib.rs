//! Kirillov-Reshetikhin crystals for the nonexceptional affine families
//! `D_n^(1)`, `B_n^(1)`, `A_{2n-1}^(2)`, `C_n^(1)`, `A_{2n}^(2)`, `D_{n+1}^(2)`
//! (type `A_n^(1)` excluded).
//!
//! The crate builds the combinatorial crystals `B~{r,s}` of the first three
//! families from the vector crystal, tensor words, +/- diagrams and the
//! node-0/1 swap involution, and verifies the algebraic side at desk scale:
//!
//! - [`qlaurent`]: exact Laurent polynomials in `q^{1/2}` with bigint
//!   coefficients; q-integers, q-factorials, q-binomials, lattice tests.
//! - [`cartan`]: affine type data, epsilon-coordinate weights, partitions,
//!   pairings, q-exponent and t-tables.
//! - [`fermionic`]: configuration sums for the multiplicities `N_s^(r)` and
//!   the unsigned variant `M_s^(r)`.
//! - [`branching`]: classical decompositions of KR modules by nu-removal and
//!   by the closed-form weight generators.
//! - [`kn_tableaux`]: classical crystal engine (vector crystal, tensor words,
//!   signature rule, component generation).
//! - [`pm_diagram`]: +/- diagrams, the bijection Phi, the sign-swap
//!   involution, and the pair machinery for the node-1 action.
//! - [`kr_crystal`]: assembly of the full `{0,..,n}`-colored graph together
//!   with JSON/DOT export.
//! - [`iso_check`]: canonical restricted isomorphisms and rigidity checks.
//! - [`norms`]: symbolic prepolarization values and the pseudobase criterion
//!   memberships.
//! - [`oracle`]: independent reference computations (Weyl dimension,
//!   Freudenthal characters) used by the test suites.

pub mod branching;
pub mod cartan;
pub mod fermionic;
pub mod iso_check;
pub mod kn_tableaux;
pub mod kr_crystal;
pub mod norms;
pub mod oracle;
pub mod pm_diagram;
pub mod qlaurent;

pub use cartan::{AffineType, Classical, Family, Nu, Partition, Weight};


pub use qlaurent::LaurentPoly;

/// Crate-wide error type for domain and input failures.
///
/// Internal invariant breaches (exact division with a remainder, an operator
/// string that annihilates mid-way, a non-bijective Phi table) are bugs and
/// panic instead.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("cannot parse affine type from `{0}`")]
    ParseType(String),
    #[error("rank {rank} is out of range for family {family}")]
    InvalidRank { family: &'static str, rank: usize },
    #[error("node index {node} is invalid here (rank {rank})")]
    InvalidNode { node: usize, rank: usize },
    #[error("{0}")]
    InvalidArgument(String),
    #[error("non-integral value in {0}")]
    NonIntegral(String),
    #[error("vertex cap {cap} exceeded while generating a crystal graph")]
    VertexCap { cap: usize },
}

pub type Result<T> = std::result::Result<T, Error>;
