//! Polynomial multivectors on `R^d` and the calculus acting on them.
//!
//! A multivector is a polynomial in even variables `x1..xd` and odd
//! variables `xi1..xid`. Odd variables anticommute; their monomials are kept
//! in increasing index order.

mod evaluate;
mod identities;
mod multivector;
mod parse;

pub use evaluate::{evaluate_orgraph, or_evaluate_algebraic, or_evaluate_sum};
pub use identities::{flow_commutator_check, linearize, verify_corollary, IdentityReport};
pub use multivector::{jacobiator, schouten, Monomial, Multivector};
pub use parse::{parse_multivector, parse_multivector_file, MultivectorFile};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum AlgebraError {
    #[error("dimension mismatch: {0} vs {1}")]
    DimensionMismatch(usize, usize),
    #[error("expected {expected} arguments, got {got}")]
    ArityMismatch { expected: usize, got: usize },
    #[error("at most one argument may be odd")]
    TooManyOddArguments,
    #[error("{0} odd variables exceed the supported 64")]
    TooManyVariables(usize),
    #[error("expected a bivector")]
    NotBivector,
    #[error("the graph sum mixes vertex counts")]
    MixedVertexCounts,
}
