use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use num_traits::Zero;

use super::orgraph::{normalize_orgraph, parse_inline_orgraph, Orgraph, Shape};
use super::OrientError;
use crate::complex::reduce_by_content;
use crate::sign::Sign;
use crate::text::{content_lines, format_rational, Cursor, ParseError};
use crate::Rational;

/// Linear combination of normalized orgraphs; zero orgraphs are dropped.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct OrgraphSum {
    terms: BTreeMap<Orgraph, Rational>,
}

impl OrgraphSum {
    pub fn new() -> OrgraphSum {
        OrgraphSum::default()
    }

    pub fn add_term(&mut self, o: &Orgraph, coeff: Rational) {
        let n = normalize_orgraph(o);
        if !n.is_zero {
            self.add_normalized(n.orgraph, n.sign.apply(coeff));
        }
    }

    pub(crate) fn add_normalized(&mut self, o: Orgraph, coeff: Rational) {
        if coeff.is_zero() {
            return;
        }
        let slot = self.terms.entry(o).or_insert_with(Rational::zero);
        *slot += coeff;
        if slot.is_zero() {
            self.terms.retain(|_, c| !c.is_zero());
        }
    }

    pub(crate) fn merged(mut self, other: OrgraphSum) -> OrgraphSum {
        for (o, c) in other.terms {
            self.add_normalized(o, c);
        }
        self
    }

    pub fn scaled(&self, factor: &Rational) -> OrgraphSum {
        let mut s = OrgraphSum::new();
        for (o, c) in &self.terms {
            s.add_normalized(o.clone(), c * factor);
        }
        s
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Orgraph, &Rational)> {
        self.terms.iter()
    }

    /// Coefficient of `o` in the presentation given, not the normalized one.
    pub fn coefficient(&self, o: &Orgraph) -> Rational {
        let n = normalize_orgraph(o);
        if n.is_zero {
            return Rational::zero();
        }
        self.terms
            .get(&n.orgraph)
            .map(|c| n.sign.apply(c.clone()))
            .unwrap_or_else(Rational::zero)
    }

    /// Divides by the positive content, returning the divided sum and the
    /// factor taken out.
    pub fn reduced(&self) -> (OrgraphSum, Rational) {
        let content = reduce_by_content(self.terms.values().cloned());
        let inv = Rational::from_integer(1.into()) / &content;
        (self.scaled(&inv), content)
    }

    /// Number of terms of the given shape (bivector sums only).
    pub fn count_shape(&self, shape: Shape) -> usize {
        self.terms.keys().filter(|o| o.shape() == Ok(shape)).count()
    }

    pub fn to_text(&self) -> String {
        if self.terms.is_empty() {
            return "0\n".to_string();
        }
        let mut s = String::new();
        for (o, c) in &self.terms {
            s.push_str(&format!("{} * {}\n", format_rational(c), o));
        }
        s
    }
}

impl fmt::Display for OrgraphSum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

/// Parses `<rational> * o <n> : ...` lines. A line `<c> * skew o ...` stands
/// for `c * (Γ - Γ')` with `Γ'` the same orgraph with sinks 0 and 1
/// exchanged.
pub fn parse_orgraph_sum(text: &str) -> Result<OrgraphSum, ParseError> {
    let mut sum = OrgraphSum::new();
    for (lno, body) in content_lines(text) {
        if body.trim() == "0" {
            continue;
        }
        let mut c = Cursor::new(lno, body);
        let coeff = c.rational()?;
        c.expect('*')?;
        let skew = c.eat_word("skew");
        let o = parse_inline_orgraph(&mut c)?;
        c.expect_end()?;
        if skew {
            sum.add_term(&o.swap_sinks(), -coeff.clone());
        }
        sum.add_term(&o, coeff);
    }
    Ok(sum)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FoldedTerm {
    /// Odd under the sink swap on its own (every Λ term).
    SelfPaired { orgraph: Orgraph, coeff: Rational },
    /// `coeff * (representative - representative with sinks swapped)`, where
    /// the swapped representative normalizes to `swap_sign * partner`.
    Antisymmetrized {
        representative: Orgraph,
        partner: Orgraph,
        coeff: Rational,
        swap_sign: Sign,
    },
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct FoldedSum {
    pub terms: Vec<FoldedTerm>,
}

impl FoldedSum {
    pub fn to_text(&self) -> String {
        if self.terms.is_empty() {
            return "0\n".to_string();
        }
        let mut s = String::new();
        for t in &self.terms {
            match t {
                FoldedTerm::SelfPaired { orgraph, coeff } => {
                    s.push_str(&format!("{} * {}\n", format_rational(coeff), orgraph));
                }
                FoldedTerm::Antisymmetrized {
                    representative,
                    coeff,
                    ..
                } => {
                    s.push_str(&format!(
                        "{} * skew {}\n",
                        format_rational(coeff),
                        representative
                    ));
                }
            }
        }
        s
    }

    /// Expands back into a plain sum.
    pub fn unfold(&self) -> OrgraphSum {
        let mut sum = OrgraphSum::new();
        for t in &self.terms {
            match t {
                FoldedTerm::SelfPaired { orgraph, coeff } => sum.add_term(orgraph, coeff.clone()),
                FoldedTerm::Antisymmetrized {
                    representative,
                    coeff,
                    ..
                } => {
                    sum.add_term(representative, coeff.clone());
                    sum.add_term(&representative.swap_sinks(), -coeff.clone());
                }
            }
        }
        sum
    }
}

/// Groups the terms of a bivector sum into pairs exchanged by the sink swap,
/// checking the sum is skew under that swap.
pub fn fold_sink_swap(s: &OrgraphSum) -> Result<FoldedSum, OrientError> {
    let mut done: BTreeSet<&Orgraph> = BTreeSet::new();
    let mut folded = FoldedSum::default();
    for (o, c) in s.iter() {
        if o.sink_count() != 2 {
            return Err(OrientError::NotBivector);
        }
        if done.contains(o) {
            continue;
        }
        let n = normalize_orgraph(&o.swap_sinks());
        if n.orgraph == *o {
            if n.sign == Sign::Plus {
                return Err(OrientError::SkewSymmetryViolated(o.to_string()));
            }
            folded.terms.push(FoldedTerm::SelfPaired {
                orgraph: o.clone(),
                coeff: c.clone(),
            });
            continue;
        }
        let expected = -n.sign.apply(c.clone());
        match s.terms.get_key_value(&n.orgraph) {
            Some((p, pc)) if *pc == expected => {
                done.insert(p);
                folded.terms.push(FoldedTerm::Antisymmetrized {
                    representative: o.clone(),
                    partner: p.clone(),
                    coeff: c.clone(),
                    swap_sign: n.sign,
                });
            }
            _ => return Err(OrientError::SkewSymmetryViolated(o.to_string())),
        }
    }
    Ok(folded)
}
