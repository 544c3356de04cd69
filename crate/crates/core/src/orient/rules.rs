//! Sign rules read directly off orgraphs, checked against reading parities.

use std::collections::BTreeMap;
use std::fmt;

use super::orgraph::{normalize_orgraph, Orgraph, Shape};
use super::witness::{enumerate_orientations, EdgeLabel, OrientationWitness};
use super::OrientError;
use crate::graphs::UnorientedGraph;
use crate::sign::Sign;

/// For a Π-shaped witness with pairs `(S0, A)` and `(S1, B)`: `-` when
/// `A ≺ B` in the edge order of the graph, `+` otherwise.
pub fn rule1_sign(w: &OrientationWitness) -> Result<Sign, OrientError> {
    if w.shape()? != Shape::Pi {
        return Err(OrientError::WrongShape {
            expected: Shape::Pi,
        });
    }
    let a = w.sink_companion(0).expect("sink 0 is emitted");
    let b = w.sink_companion(1).expect("sink 1 is emitted");
    Ok(if a < b { Sign::Minus } else { Sign::Plus })
}

/// `(-)^{#reversed body edges}`, times `-` when the shapes differ.
pub fn rule2_transition_sign(
    w1: &OrientationWitness,
    w2: &OrientationWitness,
) -> Result<Sign, OrientError> {
    if w1.graph() != w2.graph() {
        return Err(OrientError::DifferentGraphs);
    }
    let shape_factor = if w1.shape()? == w2.shape()? {
        Sign::Plus
    } else {
        Sign::Minus
    };
    Ok(shape_factor * Sign::from_parity(w1.reversed_edges(w2).len()))
}

fn rule1_or_plus(w: &OrientationWitness) -> Result<Sign, OrientError> {
    match w.shape()? {
        Shape::Lambda => Ok(Sign::Plus),
        Shape::Pi => rule1_sign(w),
    }
}

/// The factors that the rules multiply together for one transition.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SignChain {
    pub rule1_from: Sign,
    pub rule1_to: Sign,
    pub reversed: Vec<usize>,
    pub shape_factor: Sign,
    /// `sign(to) / sign(from)` according to the rules.
    pub predicted: Sign,
    /// The same ratio from the reading parities.
    pub actual: Sign,
}

impl SignChain {
    pub fn between(
        from: &OrientationWitness,
        to: &OrientationWitness,
    ) -> Result<SignChain, OrientError> {
        let rule1_from = rule1_or_plus(from)?;
        let rule1_to = rule1_or_plus(to)?;
        let shape_factor = if from.shape()? == to.shape()? {
            Sign::Plus
        } else {
            Sign::Minus
        };
        let reversed = from.reversed_edges(to);
        let predicted = rule1_from * rule1_to * shape_factor * Sign::from_parity(reversed.len());
        Ok(SignChain {
            rule1_from,
            rule1_to,
            reversed,
            shape_factor,
            predicted,
            actual: from.sign() * to.sign(),
        })
    }

    pub fn holds(&self) -> bool {
        self.predicted == self.actual
    }
}

impl fmt::Display for SignChain {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names: Vec<String> = self
            .reversed
            .iter()
            .map(|&e| EdgeLabel::Body(e).to_string())
            .collect();
        write!(
            f,
            "({})({})({}) = ({}) [rule1 {}, reversed {{{}}}, shape {}]; parity ratio ({})",
            self.rule1_to * self.rule1_from,
            Sign::from_parity(self.reversed.len()),
            self.shape_factor,
            self.predicted,
            self.rule1_to * self.rule1_from,
            names.join(","),
            self.shape_factor,
            self.actual
        )
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RuleMismatch {
    pub first: String,
    pub second: String,
    pub predicted: Sign,
    pub actual: Sign,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RulesReport {
    pub witnesses: usize,
    /// Pairs of witnesses with nonisomorphic orgraphs, the only ones the
    /// transition rule speaks about.
    pub pairs: usize,
    pub mismatches: usize,
    /// The first few mismatching pairs, in edge-sorted presentation.
    pub examples: Vec<RuleMismatch>,
    /// Nonzero orgraph classes hit by the witnesses.
    pub classes: usize,
    /// Classes whose witnesses contribute with signs the rules cannot
    /// reconcile whatever presentation each class is given: the product of
    /// the rule sign and the actual contribution is not constant on them.
    pub conflicting_classes: usize,
    /// False when the graph does not produce bivector orgraphs.
    pub applicable: bool,
}

impl RulesReport {
    /// Vacuously true when the rules do not apply.
    pub fn consistent(&self) -> bool {
        self.mismatches == 0 && self.conflicting_classes == 0
    }
}

impl fmt::Display for RulesReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if !self.applicable {
            return writeln!(f, "rules: not applicable (orgraphs do not have two sinks)");
        }
        writeln!(f, "witnesses: {}", self.witnesses)?;
        writeln!(f, "nonisomorphic pairs: {}", self.pairs)?;
        writeln!(f, "mismatches: {}", self.mismatches)?;
        writeln!(f, "classes: {}", self.classes)?;
        writeln!(f, "conflicting classes: {}", self.conflicting_classes)?;
        for m in &self.examples {
            writeln!(
                f,
                "mismatch: {} -> {}: rules ({}), parity ({})",
                m.first, m.second, m.predicted, m.actual
            )?;
        }
        Ok(())
    }
}

const EXAMPLE_LIMIT: usize = 5;

/// Compares, for every pair of admissible witnesses with nonisomorphic
/// orgraphs, the sign ratio predicted by the two rules with the ratio of
/// reading parities (each witness in its edge-sorted presentation).
pub fn crosscheck_rules(g: &UnorientedGraph) -> RulesReport {
    let ws = enumerate_orientations(g);
    let applicable = ws.first().map(|w| w.sink_count() == 2).unwrap_or(false);
    let mut report = RulesReport {
        witnesses: ws.len(),
        pairs: 0,
        mismatches: 0,
        examples: Vec::new(),
        classes: 0,
        conflicting_classes: 0,
        applicable,
    };
    if !applicable {
        return report;
    }
    let normalized: Vec<_> = ws.iter().map(|w| normalize_orgraph(&w.orgraph())).collect();
    let classes: Vec<_> = normalized.iter().map(|n| n.orgraph.clone()).collect();
    let chains: Vec<(Sign, Sign, u64)> = ws
        .iter()
        .map(|w| {
            let mut mask = 0u64;
            for e in 0..g.edge_count() {
                if w.direction(e).0 == g.edges()[e].0 {
                    mask |= 1 << e;
                }
            }
            (rule1_or_plus(w).expect("bivector witness"), w.sign(), mask)
        })
        .collect();
    let shapes: Vec<Shape> = ws
        .iter()
        .map(|w| w.shape().expect("bivector witness"))
        .collect();
    // rule sign of each witness relative to the orientation with every
    // edge pointing from its smaller endpoint
    let mut per_class: BTreeMap<&Orgraph, (bool, bool)> = BTreeMap::new();
    for i in 0..ws.len() {
        if normalized[i].is_zero {
            continue;
        }
        let (r, s, mask) = chains[i];
        let shape = if shapes[i] == Shape::Pi {
            Sign::Minus
        } else {
            Sign::Plus
        };
        let rule = r * shape * Sign::from_parity(mask.count_ones() as usize);
        let e = per_class.entry(&classes[i]).or_default();
        if rule * s * normalized[i].sign == Sign::Plus {
            e.0 = true;
        } else {
            e.1 = true;
        }
    }
    report.classes = per_class.len();
    report.conflicting_classes = per_class.values().filter(|&&(p, m)| p && m).count();
    for i in 0..ws.len() {
        for j in i + 1..ws.len() {
            if classes[i] == classes[j] {
                continue;
            }
            report.pairs += 1;
            let (r1, s1, m1) = chains[i];
            let (r2, s2, m2) = chains[j];
            let shape = if shapes[i] == shapes[j] {
                Sign::Plus
            } else {
                Sign::Minus
            };
            let predicted = r1 * r2 * shape * Sign::from_parity((m1 ^ m2).count_ones() as usize);
            let actual = s1 * s2;
            if predicted != actual {
                report.mismatches += 1;
                if report.examples.len() < EXAMPLE_LIMIT {
                    report.examples.push(RuleMismatch {
                        first: ws[i].to_string(),
                        second: ws[j].to_string(),
                        predicted,
                        actual,
                    });
                }
            }
        }
    }
    report
}
