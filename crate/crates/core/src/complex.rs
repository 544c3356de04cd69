//! Formal sums of graphs and the Lie structure of the graph complex.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use rayon::prelude::*;

use crate::graphs::{canonicalize, parse_graph, parse_inline_graph, UnorientedGraph};
use crate::linalg::{nullspace, primitive_integer_vector};
use crate::sign::Sign;
use crate::text::{content_lines, format_rational, Cursor, ParseError};
use crate::Rational;

/// A finite linear combination of canonical graphs. Zero graphs and zero
/// coefficients are never stored.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct GraphSum {
    terms: BTreeMap<UnorientedGraph, Rational>,
}

impl GraphSum {
    pub fn new() -> GraphSum {
        GraphSum::default()
    }

    pub fn from_graph(g: &UnorientedGraph) -> GraphSum {
        let mut s = GraphSum::new();
        s.add_term(g, Rational::one());
        s
    }

    /// Adds `coeff * g`, bringing `g` to canonical form first.
    pub fn add_term(&mut self, g: &UnorientedGraph, coeff: Rational) {
        let c = canonicalize(g);
        if c.is_zero || coeff.is_zero() {
            return;
        }
        self.add_canonical(c.graph, c.sign.apply(coeff));
    }

    fn add_canonical(&mut self, g: UnorientedGraph, coeff: Rational) {
        let slot = self.terms.entry(g).or_insert_with(Rational::zero);
        *slot += coeff;
        if slot.is_zero() {
            self.terms.retain(|_, c| !c.is_zero());
        }
    }

    pub fn add_sum(&mut self, other: &GraphSum, factor: &Rational) {
        for (g, c) in &other.terms {
            self.add_canonical(g.clone(), c * factor);
        }
    }

    fn merged(mut self, other: GraphSum) -> GraphSum {
        for (g, c) in other.terms {
            self.add_canonical(g, c);
        }
        self
    }

    pub fn scaled(&self, factor: &Rational) -> GraphSum {
        let mut s = GraphSum::new();
        s.add_sum(self, factor);
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

    pub fn iter(&self) -> impl Iterator<Item = (&UnorientedGraph, &Rational)> {
        self.terms.iter()
    }

    /// Coefficient of `g` as written, i.e. including the sign relating `g` to
    /// its canonical form.
    pub fn coefficient(&self, g: &UnorientedGraph) -> Rational {
        let c = canonicalize(g);
        if c.is_zero {
            return Rational::zero();
        }
        self.terms
            .get(&c.graph)
            .map(|x| c.sign.apply(x.clone()))
            .unwrap_or_else(Rational::zero)
    }

    /// The set of `(vertices, edges)` occurring in the sum.
    pub fn bigradings(&self) -> BTreeSet<(usize, usize)> {
        self.terms.keys().map(|g| g.bigrading()).collect()
    }

    /// Text form, one term per line; the zero sum is written `0`.
    pub fn to_text(&self) -> String {
        if self.terms.is_empty() {
            return "0\n".to_string();
        }
        let mut s = String::new();
        for (g, c) in &self.terms {
            s.push_str(&format!("{} * {}\n", format_rational(c), g));
        }
        s
    }
}

impl fmt::Display for GraphSum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

/// Parses `<rational> * g <n> <m> : u v, ...` lines; a line `0` is allowed.
pub fn parse_graph_sum(text: &str) -> Result<GraphSum, ParseError> {
    let mut sum = GraphSum::new();
    for (lno, body) in content_lines(text) {
        if body.trim() == "0" {
            continue;
        }
        let mut c = Cursor::new(lno, body);
        let coeff = c.rational()?;
        c.expect('*')?;
        let g = parse_inline_graph(&mut c)?;
        c.expect_end()?;
        sum.add_term(&g, coeff);
    }
    Ok(sum)
}

/// Accepts either a single multi-line graph or a graph sum.
pub fn parse_graph_or_sum(text: &str) -> Result<GraphSum, ParseError> {
    let first = content_lines(text).next();
    match first {
        Some((_, body)) if body.trim_start().starts_with('g') => {
            Ok(GraphSum::from_graph(&parse_graph(text)?))
        }
        _ => parse_graph_sum(text),
    }
}

/// `g1 ∘ g2`: the sum over vertices `v` of `g2` of all ways to put `g1` in
/// place of `v` and reattach each edge formerly at `v` to some vertex of `g1`.
/// Edges of `g1` come first in the wedge order, then those of `g2` in their
/// original positions.
pub fn insert(g1: &UnorientedGraph, g2: &UnorientedGraph) -> GraphSum {
    let n1 = g1.vertex_count();
    let n2 = g2.vertex_count();
    let mut out = GraphSum::new();
    for v in 0..n2 {
        let incident = g2.incident_edges(v);
        // g2's vertices other than v follow g1's
        let rename = |w: usize| n1 + if w < v { w } else { w - 1 };
        let mut choice = vec![0usize; incident.len()];
        loop {
            let mut edges: Vec<(usize, usize)> = g1.edges().to_vec();
            let mut slot = 0;
            for (k, &(a, b)) in g2.edges().iter().enumerate() {
                if slot < incident.len() && incident[slot] == k {
                    let other = if a == v { b } else { a };
                    edges.push((rename(other), choice[slot]));
                    slot += 1;
                } else {
                    edges.push((rename(a), rename(b)));
                }
            }
            // reattaching two edges with a common far end to one vertex gives a double edge
            if let Ok(g) = UnorientedGraph::from_zero_based(n1 + n2 - 1, edges) {
                out.add_term(&g, Rational::one());
            }
            if !advance(&mut choice, n1) {
                break;
            }
        }
    }
    out
}

fn advance(digits: &mut [usize], base: usize) -> bool {
    for d in digits.iter_mut() {
        *d += 1;
        if *d < base {
            return true;
        }
        *d = 0;
    }
    false
}

/// `[g1, g2] = g1∘g2 - (-1)^{|g1||g2|} g2∘g1` with `|g|` the number of edges.
pub fn bracket_graphs(g1: &UnorientedGraph, g2: &UnorientedGraph) -> GraphSum {
    let mut out = insert(g1, g2);
    let sign = Sign::from_parity(g1.edge_count() * g2.edge_count());
    out.add_sum(&insert(g2, g1), &(-sign).to_rational());
    out
}

pub fn bracket(a: &GraphSum, b: &GraphSum) -> GraphSum {
    let pairs: Vec<(&UnorientedGraph, &Rational, &UnorientedGraph, &Rational)> = a
        .terms
        .iter()
        .flat_map(|(g1, c1)| b.terms.iter().map(move |(g2, c2)| (g1, c1, g2, c2)))
        .collect();
    pairs
        .into_par_iter()
        .map(|(g1, c1, g2, c2)| bracket_graphs(g1, g2).scaled(&(c1 * c2)))
        .reduce(GraphSum::new, GraphSum::merged)
}

/// `d = [•-•, ·]`.
pub fn differential(s: &GraphSum) -> GraphSum {
    bracket(&GraphSum::from_graph(&UnorientedGraph::edge()), s)
}

pub fn is_cocycle(s: &GraphSum) -> bool {
    differential(s).is_zero()
}

/// Canonical nonzero graphs with `n` vertices and `e` edges.
pub fn graph_basis(n: usize, e: usize, connected_only: bool) -> Vec<UnorientedGraph> {
    if n == 0 {
        return Vec::new();
    }
    let pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .collect();
    if e > pairs.len() {
        return Vec::new();
    }
    let subsets = combinations(pairs.len(), e);
    let found: BTreeSet<UnorientedGraph> = subsets
        .into_par_iter()
        .filter_map(|idx| {
            let g = UnorientedGraph::from_zero_based(n, idx.iter().map(|&i| pairs[i]).collect())
                .unwrap();
            if connected_only && !g.is_connected() {
                return None;
            }
            let c = canonicalize(&g);
            (!c.is_zero).then_some(c.graph)
        })
        .collect();
    found.into_iter().collect()
}

fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur: Vec<usize> = (0..k).collect();
    if k > n {
        return out;
    }
    loop {
        out.push(cur.clone());
        let Some(i) = (0..k).rev().find(|&i| cur[i] != i + n - k) else {
            return out;
        };
        cur[i] += 1;
        for j in i + 1..k {
            cur[j] = cur[j - 1] + 1;
        }
    }
}

/// A basis of the cocycles in bigrading `(n, e)`, each scaled to coprime
/// integer coefficients with a positive leading term.
pub fn cocycle_kernel(n: usize, e: usize, connected_only: bool) -> Vec<GraphSum> {
    let basis = graph_basis(n, e, connected_only);
    if basis.is_empty() {
        return Vec::new();
    }
    let images: Vec<GraphSum> = basis
        .par_iter()
        .map(|g| differential(&GraphSum::from_graph(g)))
        .collect();
    let rows: BTreeMap<&UnorientedGraph, usize> = {
        let keys: BTreeSet<&UnorientedGraph> = images.iter().flat_map(|s| s.terms.keys()).collect();
        keys.into_iter().enumerate().map(|(i, g)| (g, i)).collect()
    };
    let mut matrix = vec![vec![BigInt::zero(); basis.len()]; rows.len()];
    for (j, img) in images.iter().enumerate() {
        for (g, c) in &img.terms {
            // d has integer coefficients on single graphs
            matrix[rows[g]][j] = c.to_integer();
        }
    }
    nullspace(&matrix, basis.len())
        .into_iter()
        .map(|v| {
            let v = primitive_integer_vector(&v);
            let mut s = GraphSum::new();
            for (g, c) in basis.iter().zip(v) {
                if !c.is_zero() {
                    s.add_canonical(g.clone(), Rational::from_integer(c));
                }
            }
            s
        })
        .collect()
}

/// Divides by the positive rational content so coefficients become coprime
/// integers; the signs are kept.
pub fn reduce_by_content(terms: impl Iterator<Item = Rational>) -> Rational {
    let mut num = BigInt::zero();
    let mut den = BigInt::one();
    for c in terms {
        num = num_integer::Integer::gcd(&num, c.numer());
        den = num_integer::Integer::lcm(&den, c.denom());
    }
    if num.is_zero() {
        Rational::one()
    } else {
        Rational::new(num.abs(), den)
    }
}
