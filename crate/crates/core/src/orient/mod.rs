//! Kontsevich oriented graphs and the orientation morphism.
//!
//! An orgraph on `n` internal vertices with `k` sinks is stored as one
//! ordered target pair per internal vertex. Sinks carry the labels `0..k`
//! and internal vertices `k..k+n`, so the bivector case uses `0, 1` for the
//! sinks and `2..n+1` for the rest.

mod orgraph;
mod rules;
mod sum;
mod witness;

pub use orgraph::{
    isomorphisms, normalize_orgraph, parse_orgraph, NormalizedOrgraph, Orgraph, Shape,
};
pub use rules::{
    crosscheck_rules, rule1_sign, rule2_transition_sign, RuleMismatch, RulesReport, SignChain,
};
pub use sum::{fold_sink_swap, parse_orgraph_sum, FoldedSum, FoldedTerm, OrgraphSum};
pub use witness::{
    edge_correspondence, enumerate_orientations, orient, orient_graph, orientation_sign,
    shared_images, EdgeLabel, OrientationWitness,
};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum OrientError {
    #[error("invalid orgraph: {0}")]
    InvalidOrgraph(String),
    #[error("shape is only defined for orgraphs with two sinks")]
    NotBivector,
    #[error("expected a {expected}-shaped orgraph")]
    WrongShape { expected: Shape },
    #[error("witnesses orient different graphs")]
    DifferentGraphs,
    #[error("invalid witness: {0}")]
    InvalidWitness(String),
    #[error("skew-symmetry violated at {0}")]
    SkewSymmetryViolated(String),
}
