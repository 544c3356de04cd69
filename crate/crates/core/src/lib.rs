//! Exact computations in the Kontsevich graph complex and the orientation
//! morphism into Poisson multivector calculus.
//!
//! The crate is split into four layers:
//!
//! * [`graphs`]: unoriented graphs with wedge-ordered edges, canonical forms.
//! * [`complex`]: formal sums of graphs, insertion, bracket, differential and
//!   cocycle spaces.
//! * [`orient`]: oriented graphs with sinks, the orientation morphism and the
//!   sign rules for its terms.
//! * [`superalgebra`]: polynomial multivectors, the Schouten bracket and the
//!   two independent evaluators of the orientation morphism.
//!
//! All arithmetic is over `BigRational`; nothing in the crate uses floating
//! point.

pub mod complex;
pub mod corpus;
pub mod graphs;
mod linalg;
pub mod orient;
mod perm;
pub mod sign;
pub mod superalgebra;
mod text;

pub use complex::GraphSum;
pub use graphs::UnorientedGraph;
pub use orient::{Orgraph, OrgraphSum, OrientationWitness};
pub use sign::Sign;
pub use superalgebra::Multivector;
pub use text::ParseError;

/// Version tag of every text encoding the crate reads and writes.
pub const FORMAT_VERSION: &str = "gckit-fmt/1";

pub type Rational = num_rational::BigRational;
