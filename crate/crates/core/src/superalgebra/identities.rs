//! Identities relating the graph complex to the Schouten calculus.

use super::evaluate::or_evaluate_sum;
use super::{jacobiator, schouten, AlgebraError, Multivector};
use crate::complex::{bracket, differential, GraphSum};
use crate::Rational;

/// Both sides of an identity, computed independently.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IdentityReport {
    pub lhs: Multivector,
    pub rhs: Multivector,
}

impl IdentityReport {
    pub fn holds(&self) -> bool {
        self.lhs == self.rhs
    }
}

fn vertex_count(gamma: &GraphSum) -> Result<Option<usize>, AlgebraError> {
    let counts: Vec<usize> = gamma.bigradings().into_iter().map(|b| b.0).collect();
    match counts.as_slice() {
        [] => Ok(None),
        [n, rest @ ..] if rest.iter().all(|m| m == n) => Ok(Some(*n)),
        _ => Err(AlgebraError::MixedVertexCounts),
    }
}

fn evaluate_on(gamma: &GraphSum, p: &Multivector) -> Result<Multivector, AlgebraError> {
    match vertex_count(gamma)? {
        None => Ok(Multivector::zero(p.dim())),
        Some(n) => or_evaluate_sum(gamma, &vec![p.clone(); n]),
    }
}

/// `Σ_i Or(γ)(P, .., R, .., P)` with `R` in slot `i`: the derivative of
/// `P ↦ Or(γ)(P, .., P)` in the direction `R`.
pub fn linearize(
    gamma: &GraphSum,
    p: &Multivector,
    r: &Multivector,
) -> Result<Multivector, AlgebraError> {
    let Some(n) = vertex_count(gamma)? else {
        return Ok(Multivector::zero(p.dim()));
    };
    let mut acc = Multivector::zero(p.dim());
    for slot in 0..n {
        let mut args = vec![p.clone(); n];
        args[slot] = r.clone();
        acc = &acc + &or_evaluate_sum(gamma, &args)?;
    }
    Ok(acc)
}

/// `Or(dγ)(P, .., P)` against `2[[P, Or(γ)(P, .., P)]] - Σ_i Or(γ)(P, .., [[P, P]], .., P)`.
pub fn verify_corollary(gamma: &GraphSum, p: &Multivector) -> Result<IdentityReport, AlgebraError> {
    let lhs = evaluate_on(&differential(gamma), p)?;
    let q = evaluate_on(gamma, p)?;
    let two = Rational::from_integer(2.into());
    let rhs = &schouten(p, &q).scaled(&two) - &linearize(gamma, p, &jacobiator(p))?;
    Ok(IdentityReport { lhs, rhs })
}

/// The commutator of the flows `Ṗ = Or(γ_i)(P, .., P)` against the flow of
/// `[γ1, γ2]`: `lhs = Q2'(P)[Q1] - Q1'(P)[Q2]`, `rhs = Or([γ1, γ2])(P, .., P)`.
pub fn flow_commutator_check(
    g1: &GraphSum,
    g2: &GraphSum,
    p: &Multivector,
) -> Result<IdentityReport, AlgebraError> {
    let q1 = evaluate_on(g1, p)?;
    let q2 = evaluate_on(g2, p)?;
    let lhs = &linearize(g2, p, &q1)? - &linearize(g1, p, &q2)?;
    let rhs = evaluate_on(&bracket(g1, g2), p)?;
    Ok(IdentityReport { lhs, rhs })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus;

    #[test]
    fn corollary_for_a_point() {
        // d(point) = -edge, and the identity holds even off Poisson structures
        let g = GraphSum::from_graph(&corpus::point());
        let r = verify_corollary(&g, &corpus::cubic_non_poisson()).unwrap();
        assert!(!r.lhs.is_zero());
        assert!(r.holds());
    }

    #[test]
    fn corollary_for_the_edge() {
        let g = GraphSum::from_graph(&corpus::edge());
        let r = verify_corollary(&g, &corpus::cubic_non_poisson()).unwrap();
        assert!(r.holds());
    }

    #[test]
    fn scaling_flow_commutes_by_degree() {
        // [point, edge] = edge; both sides equal Or(edge)(P, P)
        let p = corpus::cubic_non_poisson();
        let r = flow_commutator_check(
            &GraphSum::from_graph(&corpus::point()),
            &GraphSum::from_graph(&corpus::edge()),
            &p,
        )
        .unwrap();
        assert!(!r.rhs.is_zero());
        assert!(r.holds());
    }
}
