//! Two independent ways to evaluate the orientation morphism.

use std::collections::{BTreeMap, HashMap};

use rayon::prelude::*;

use super::{AlgebraError, Multivector};
use crate::complex::GraphSum;
use crate::graphs::UnorientedGraph;
use crate::orient::{Orgraph, OrgraphSum};
use crate::perm::for_each_permutation;
use crate::Rational;

fn factorial(n: usize) -> Rational {
    Rational::from_integer((1..=n).product::<usize>().into())
}

/// `Δ_ij = Σ_a ∂/∂xi_a^(i) ∂/∂x^a_(j) + ∂/∂x^a_(i) ∂/∂xi_a^(j)`, with the
/// variables of vertex `v` stored at offset `v * dim`.
fn apply_edge(m: &Multivector, i: usize, j: usize, dim: usize) -> Multivector {
    let mut out = Multivector::zero(m.dim());
    for a in 0..dim {
        let (ai, aj) = (i * dim + a, j * dim + a);
        out = &out + &m.partial_x(aj).partial_xi_left(ai);
        out = &out + &m.partial_x(ai).partial_xi_left(aj);
    }
    out
}

/// Evaluates a graph on multivectors by placing copies of the arguments in
/// the vertices, letting the edge operators act (first edge first) and
/// identifying the copies. Arguments are symmetrised over all placements.
pub fn or_evaluate_algebraic(
    g: &UnorientedGraph,
    args: &[Multivector],
) -> Result<Multivector, AlgebraError> {
    let n = g.vertex_count();
    if args.len() != n {
        return Err(AlgebraError::ArityMismatch {
            expected: n,
            got: args.len(),
        });
    }
    let dim = args[0].dim();
    if let Some(a) = args.iter().find(|a| a.dim() != dim) {
        return Err(AlgebraError::DimensionMismatch(dim, a.dim()));
    }
    if n * dim > 64 {
        return Err(AlgebraError::TooManyVariables(n * dim));
    }
    if args.iter().filter(|a| a.has_odd_part()).count() > 1 {
        return Err(AlgebraError::TooManyOddArguments);
    }
    // With at most one odd argument the placed copies commute, so a
    // placement is determined by which argument value sits at each vertex.
    let class: Vec<usize> = (0..n)
        .map(|i| (0..=i).find(|&j| args[j] == args[i]).unwrap())
        .collect();
    let mut placements: BTreeMap<Vec<usize>, usize> = BTreeMap::new();
    let mut at = vec![0; n];
    for_each_permutation(n, |sigma| {
        for i in 0..n {
            at[sigma[i]] = class[i];
        }
        *placements.entry(at.clone()).or_insert(0) += 1;
    });
    let total = factorial(n);
    let parts: Vec<Multivector> = placements
        .into_par_iter()
        .map(|(at, count)| {
            let mut m = Multivector::one(n * dim);
            for (v, &c) in at.iter().enumerate() {
                m = &m * &args[c].embed(v, n);
            }
            for &(i, j) in g.edges() {
                if m.is_zero() {
                    break;
                }
                m = apply_edge(&m, i, j, dim);
            }
            m.restrict_to_diagonal(dim)
                .scaled(&(Rational::from_integer(count.into()) / &total))
        })
        .collect();
    Ok(parts.iter().fold(Multivector::zero(dim), |acc, p| &acc + p))
}

/// Linear extension of [`or_evaluate_algebraic`]; every graph must have
/// `args.len()` vertices.
pub fn or_evaluate_sum(
    gamma: &GraphSum,
    args: &[Multivector],
) -> Result<Multivector, AlgebraError> {
    let dim = args.first().map(|a| a.dim()).unwrap_or(1);
    let mut acc = Multivector::zero(dim);
    for (g, c) in gamma.iter() {
        acc = &acc + &or_evaluate_algebraic(g, args)?.scaled(c);
    }
    Ok(acc)
}

/// Evaluates a sum of orgraphs on a bivector `P = ½ Σ P^{ab} xi_a xi_b`.
///
/// An orgraph with `k` sinks becomes `1/k! Σ Γ^{i_1..i_k} xi_{i_1}..xi_{i_k}`,
/// where `Γ^{i..}` contracts one copy of `P^{LR}` per internal vertex along
/// the edges and leaves the sink edges free. Readings list the sink edges
/// before the `m` body edges while the free `xi` are what remains after all
/// edge operators acted, hence an extra `(-1)^{k m}`; it is `+1` for
/// bivector orgraphs.
pub fn evaluate_orgraph(s: &OrgraphSum, p: &Multivector) -> Result<Multivector, AlgebraError> {
    if !p.is_bivector() {
        return Err(AlgebraError::NotBivector);
    }
    let dim = p.dim();
    let terms: Vec<(&Orgraph, &Rational)> = s.iter().collect();
    let parts: Vec<Multivector> = terms
        .into_par_iter()
        .map(|(o, c)| evaluate_one(o, p).scaled(c))
        .collect();
    Ok(parts.iter().fold(Multivector::zero(dim), |acc, m| &acc + m))
}

struct Contraction<'a> {
    o: &'a Orgraph,
    dim: usize,
    /// ordered pairs `(a, b)` with `P^{ab} != 0`
    support: Vec<(usize, usize)>,
    components: Vec<Vec<Multivector>>,
    /// edges arriving at each internal vertex, as `(source, slot)`
    incoming: Vec<Vec<(usize, usize)>>,
    sink_edges: Vec<(usize, usize)>,
    memo: HashMap<(usize, usize, Vec<usize>), Multivector>,
    totals: BTreeMap<Vec<usize>, Multivector>,
}

impl Contraction<'_> {
    fn derivative(&mut self, a: usize, b: usize, mut along: Vec<usize>) -> Multivector {
        along.sort_unstable();
        let key = (a, b, along);
        if let Some(m) = self.memo.get(&key) {
            return m.clone();
        }
        let mut m = self.components[a][b].clone();
        for &i in &key.2 {
            m = m.partial_x(i);
        }
        self.memo.insert(key, m.clone());
        m
    }

    fn run(&mut self, v: usize, chosen: &mut Vec<(usize, usize)>) {
        let n = self.o.internal_count();
        if v == n {
            let mut prod = Multivector::one(self.dim);
            for w in 0..n {
                let (a, b) = chosen[w];
                let along: Vec<usize> = self.incoming[w]
                    .iter()
                    .map(|&(src, slot)| {
                        if slot == 0 {
                            chosen[src].0
                        } else {
                            chosen[src].1
                        }
                    })
                    .collect();
                prod = &prod * &self.derivative(a, b, along);
                if prod.is_zero() {
                    return;
                }
            }
            let free: Vec<usize> = self
                .sink_edges
                .iter()
                .map(|&(src, slot)| {
                    if slot == 0 {
                        chosen[src].0
                    } else {
                        chosen[src].1
                    }
                })
                .collect();
            let slot = self
                .totals
                .entry(free)
                .or_insert_with(|| Multivector::zero(self.dim));
            *slot = &*slot + &prod;
            return;
        }
        for idx in 0..self.support.len() {
            chosen.push(self.support[idx]);
            self.run(v + 1, chosen);
            chosen.pop();
        }
    }
}

fn evaluate_one(o: &Orgraph, p: &Multivector) -> Multivector {
    let dim = p.dim();
    let k = o.sink_count();
    let n = o.internal_count();
    let components: Vec<Vec<Multivector>> = (0..dim)
        .map(|a| (0..dim).map(|b| p.bivector_component(a, b)).collect())
        .collect();
    let support = (0..dim)
        .flat_map(|a| (0..dim).map(move |b| (a, b)))
        .filter(|&(a, b)| !components[a][b].is_zero())
        .collect();
    let mut incoming = vec![Vec::new(); n];
    let mut sink_edges = vec![(0, 0); k];
    for (v, pair) in o.targets().iter().enumerate() {
        for (slot, &t) in pair.iter().enumerate() {
            if t < k {
                sink_edges[t] = (v, slot);
            } else {
                incoming[t - k].push((v, slot));
            }
        }
    }
    let mut c = Contraction {
        o,
        dim,
        support,
        components,
        incoming,
        sink_edges,
        memo: HashMap::new(),
        totals: BTreeMap::new(),
    };
    c.run(0, &mut Vec::with_capacity(n));
    let mut out = Multivector::zero(dim);
    for (free, poly) in &c.totals {
        let mut xi = Multivector::one(dim);
        for &i in free {
            xi = &xi * &Multivector::xi(dim, i);
        }
        if !xi.is_zero() {
            out = &out + &(&poly.clone() * &xi);
        }
    }
    let body = 2 * n - k;
    let sign = if k * body % 2 == 1 { -1 } else { 1 };
    out.scaled(&(Rational::from_integer(sign.into()) / factorial(k)))
}
