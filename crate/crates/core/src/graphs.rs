//! Unoriented graphs whose edge set carries a wedge ordering.
//!
//! Vertices are `0..n` internally; every text encoding and every
//! user-facing constructor counts from 1. Reordering the edges of a graph by
//! a permutation multiplies it by the sign of that permutation, so a graph
//! with an automorphism acting by an odd permutation of its edges equals
//! minus itself and vanishes.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use crate::perm::{for_each_cell_relabeling, inversions, sorting_sign};
use crate::sign::Sign;
use crate::text::{content_lines, Cursor, ParseError};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum GraphError {
    #[error("a graph needs at least one vertex")]
    NoVertices,
    #[error("vertex {vertex} is outside 1..={n}")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("loop at vertex {vertex}")]
    Loop { vertex: usize },
    #[error("parallel edge {u} {v}")]
    ParallelEdge { u: usize, v: usize },
    #[error("not a permutation of 0..{len}")]
    NotAPermutation { len: usize },
}

/// Edges are stored as `(u, v)` with `u < v`, in wedge order.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct UnorientedGraph {
    n: usize,
    edges: Vec<(usize, usize)>,
}

impl UnorientedGraph {
    /// Builds a graph from 1-based endpoints.
    pub fn new(n: usize, edges: &[(usize, usize)]) -> Result<UnorientedGraph, GraphError> {
        for &(u, v) in edges {
            for w in [u, v] {
                if w == 0 || w > n {
                    return Err(GraphError::VertexOutOfRange { vertex: w, n });
                }
            }
        }
        Self::from_zero_based(n, edges.iter().map(|&(u, v)| (u - 1, v - 1)).collect())
    }

    pub fn from_zero_based(
        n: usize,
        edges: Vec<(usize, usize)>,
    ) -> Result<UnorientedGraph, GraphError> {
        if n == 0 {
            return Err(GraphError::NoVertices);
        }
        let mut seen = BTreeSet::new();
        let mut norm = Vec::with_capacity(edges.len());
        for (u, v) in edges {
            if u >= n || v >= n {
                return Err(GraphError::VertexOutOfRange {
                    vertex: u.max(v) + 1,
                    n,
                });
            }
            if u == v {
                return Err(GraphError::Loop { vertex: u + 1 });
            }
            let e = (u.min(v), u.max(v));
            if !seen.insert(e) {
                return Err(GraphError::ParallelEdge {
                    u: e.0 + 1,
                    v: e.1 + 1,
                });
            }
            norm.push(e);
        }
        Ok(UnorientedGraph { n, edges: norm })
    }

    /// The single edge on two vertices.
    pub fn edge() -> UnorientedGraph {
        UnorientedGraph {
            n: 2,
            edges: vec![(0, 1)],
        }
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// 0-based endpoints in wedge order.
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn edges_one_based(&self) -> Vec<(usize, usize)> {
        self.edges.iter().map(|&(u, v)| (u + 1, v + 1)).collect()
    }

    pub fn bigrading(&self) -> (usize, usize) {
        (self.n, self.edges.len())
    }

    pub fn degree(&self, v: usize) -> usize {
        self.edges
            .iter()
            .filter(|&&(a, b)| a == v || b == v)
            .count()
    }

    pub fn degrees(&self) -> Vec<usize> {
        let mut d = vec![0; self.n];
        for &(u, v) in &self.edges {
            d[u] += 1;
            d[v] += 1;
        }
        d
    }

    /// Positions in the wedge order of the edges touching `v`.
    pub fn incident_edges(&self, v: usize) -> Vec<usize> {
        (0..self.edges.len())
            .filter(|&k| self.edges[k].0 == v || self.edges[k].1 == v)
            .collect()
    }

    pub fn neighbours(&self, v: usize) -> Vec<usize> {
        let mut out: Vec<usize> = self
            .edges
            .iter()
            .filter_map(|&(a, b)| {
                if a == v {
                    Some(b)
                } else if b == v {
                    Some(a)
                } else {
                    None
                }
            })
            .collect();
        out.sort_unstable();
        out
    }

    pub fn is_connected(&self) -> bool {
        let mut seen = vec![false; self.n];
        let mut stack = vec![0];
        seen[0] = true;
        while let Some(v) = stack.pop() {
            for w in self.neighbours(v) {
                if !seen[w] {
                    seen[w] = true;
                    stack.push(w);
                }
            }
        }
        seen.into_iter().all(|s| s)
    }

    /// Reorders the edges: edge `i` of the result is edge `perm[i]` of `self`.
    pub fn permute_edges(&self, perm: &[usize]) -> Result<UnorientedGraph, GraphError> {
        check_permutation(perm, self.edges.len())?;
        Ok(UnorientedGraph {
            n: self.n,
            edges: perm.iter().map(|&k| self.edges[k]).collect(),
        })
    }

    /// Renames vertex `v` to `relabel[v]`, keeping the edge order.
    pub fn relabel_vertices(&self, relabel: &[usize]) -> Result<UnorientedGraph, GraphError> {
        check_permutation(relabel, self.n)?;
        Ok(self.relabeled(relabel))
    }

    fn relabeled(&self, relabel: &[usize]) -> UnorientedGraph {
        let edges = self
            .edges
            .iter()
            .map(|&(u, v)| {
                let (a, b) = (relabel[u], relabel[v]);
                (a.min(b), a.max(b))
            })
            .collect();
        UnorientedGraph { n: self.n, edges }
    }

    /// Multi-line text form: a `g <n> <m>` header then one edge per line.
    pub fn to_text(&self) -> String {
        let mut s = format!("g {} {}\n", self.n, self.edges.len());
        for (u, v) in self.edges_one_based() {
            s.push_str(&format!("{u} {v}\n"));
        }
        s
    }
}

/// One-line form `g <n> <m> : u1 v1, u2 v2, ...` used inside sums.
impl fmt::Display for UnorientedGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "g {} {} :", self.n, self.edges.len())?;
        for (i, (u, v)) in self.edges_one_based().into_iter().enumerate() {
            let sep = if i == 0 { " " } else { ", " };
            write!(f, "{sep}{u} {v}")?;
        }
        Ok(())
    }
}

fn check_permutation(perm: &[usize], len: usize) -> Result<(), GraphError> {
    let mut seen = vec![false; len];
    if perm.len() != len {
        return Err(GraphError::NotAPermutation { len });
    }
    for &p in perm {
        if p >= len || seen[p] {
            return Err(GraphError::NotAPermutation { len });
        }
        seen[p] = true;
    }
    Ok(())
}

/// Sign of a permutation given in one-line notation over `0..perm.len()`.
pub fn edge_permutation_sign(perm: &[usize]) -> Result<Sign, GraphError> {
    check_permutation(perm, perm.len())?;
    Ok(sorting_sign(perm))
}

/// `g = sign * graph` with `graph` in canonical form.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CanonicalForm {
    pub graph: UnorientedGraph,
    pub sign: Sign,
    pub is_zero: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Automorphism {
    /// `vertex_map[v]` is the image of `v`.
    pub vertex_map: Vec<usize>,
    /// Sign of the induced permutation of the edges.
    pub edge_sign: Sign,
}

/// Iterated colour refinement starting from the degrees. The returned cells
/// are ordered by colour, which makes the ordering isomorphism-invariant.
pub(crate) fn refined_cells(
    n: usize,
    adjacency: &[Vec<usize>],
    initial: Vec<usize>,
) -> Vec<Vec<usize>> {
    let mut colour = rank(&initial);
    let mut classes = count_distinct(&colour);
    loop {
        let sigs: Vec<(usize, Vec<usize>)> = (0..n)
            .map(|v| {
                let mut nb: Vec<usize> = adjacency[v].iter().map(|&w| colour[w]).collect();
                nb.sort_unstable();
                (colour[v], nb)
            })
            .collect();
        let next = rank(&sigs);
        let c = count_distinct(&next);
        colour = next;
        if c == classes {
            break;
        }
        classes = c;
    }
    let mut cells: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
    for v in 0..n {
        cells.entry(colour[v]).or_default().push(v);
    }
    cells.into_values().collect()
}

fn rank<T: Ord + Clone>(keys: &[T]) -> Vec<usize> {
    let sorted: BTreeSet<T> = keys.iter().cloned().collect();
    let index: BTreeMap<T, usize> = sorted
        .into_iter()
        .enumerate()
        .map(|(i, k)| (k, i))
        .collect();
    keys.iter().map(|k| index[k]).collect()
}

fn count_distinct(c: &[usize]) -> usize {
    c.iter().collect::<BTreeSet<_>>().len()
}

/// Every relabeling that attains the minimal sorted edge list, together with
/// the sign of the edge sort it needs.
fn minimizers(g: &UnorientedGraph) -> (Vec<(usize, usize)>, Vec<(Vec<usize>, Sign)>) {
    let adjacency: Vec<Vec<usize>> = (0..g.n).map(|v| g.neighbours(v)).collect();
    let cells = refined_cells(g.n, &adjacency, g.degrees());
    let m = g.edges.len();
    let mut best: Option<Vec<(usize, usize)>> = None;
    let mut found: Vec<(Vec<usize>, Sign)> = Vec::new();
    let mut keyed: Vec<((usize, usize), usize)> = Vec::with_capacity(m);
    let mut enc: Vec<(usize, usize)> = Vec::with_capacity(m);
    for_each_cell_relabeling(&cells, g.n, |r| {
        keyed.clear();
        for (k, &(u, v)) in g.edges.iter().enumerate() {
            let (a, b) = (r[u], r[v]);
            keyed.push(((a.min(b), a.max(b)), k));
        }
        keyed.sort_unstable();
        enc.clear();
        enc.extend(keyed.iter().map(|x| x.0));
        let ord = match &best {
            None => std::cmp::Ordering::Less,
            Some(b) => enc.as_slice().cmp(b.as_slice()),
        };
        if ord == std::cmp::Ordering::Greater {
            return;
        }
        let order: Vec<usize> = keyed.iter().map(|x| x.1).collect();
        let sign = Sign::from_parity(inversions(&order));
        if ord == std::cmp::Ordering::Less {
            best = Some(enc.clone());
            found.clear();
        }
        found.push((r.to_vec(), sign));
    });
    (best.unwrap_or_default(), found)
}

/// Canonical representative among relabelings that respect the refined
/// colour cells, with the sign relating it to `g`.
pub fn canonicalize(g: &UnorientedGraph) -> CanonicalForm {
    let (best, found) = minimizers(g);
    let sign = found[0].1;
    let is_zero = found.iter().any(|f| f.1 != sign);
    CanonicalForm {
        graph: UnorientedGraph {
            n: g.n,
            edges: best,
        },
        sign,
        is_zero,
    }
}

pub fn automorphisms(g: &UnorientedGraph) -> Vec<Automorphism> {
    let (_, found) = minimizers(g);
    let base = &found[0].0;
    let mut inverse = vec![0; g.n];
    for (v, &r) in base.iter().enumerate() {
        inverse[r] = v;
    }
    let position: BTreeMap<(usize, usize), usize> =
        g.edges.iter().enumerate().map(|(k, &e)| (e, k)).collect();
    let mut out: Vec<Automorphism> = found
        .iter()
        .map(|(r, _)| {
            let vertex_map: Vec<usize> = (0..g.n).map(|v| inverse[r[v]]).collect();
            let image: Vec<usize> = g
                .edges
                .iter()
                .map(|&(u, v)| {
                    let (a, b) = (vertex_map[u], vertex_map[v]);
                    position[&(a.min(b), a.max(b))]
                })
                .collect();
            Automorphism {
                vertex_map,
                edge_sign: sorting_sign(&image),
            }
        })
        .collect();
    out.sort_by(|a, b| a.vertex_map.cmp(&b.vertex_map));
    out
}

pub fn is_zero_graph(g: &UnorientedGraph) -> bool {
    canonicalize(g).is_zero
}

/// Parses a single graph: `g <n> <m>` followed by `m` lines `u v`.
pub fn parse_graph(text: &str) -> Result<UnorientedGraph, ParseError> {
    let mut lines = content_lines(text);
    let Some((lno, header)) = lines.next() else {
        return Err(ParseError::new(1, 1, "empty input, expected 'g <n> <m>'"));
    };
    let mut c = Cursor::new(lno, header);
    c.expect_word("g")?;
    let n = c.usize()?;
    let m = c.usize()?;
    c.expect_end()?;
    let mut edges = Vec::with_capacity(m);
    let mut last = lno;
    for _ in 0..m {
        let Some((lno, body)) = lines.next() else {
            return Err(ParseError::new(
                last + 1,
                1,
                format!("expected {m} edge lines"),
            ));
        };
        let mut c = Cursor::new(lno, body);
        let u = c.usize()?;
        let v = c.usize()?;
        c.expect_end()?;
        edges.push((u, v));
        last = lno;
    }
    if let Some((lno, _)) = lines.next() {
        return Err(ParseError::new(
            lno,
            1,
            "unexpected line after the last edge",
        ));
    }
    UnorientedGraph::new(n, &edges).map_err(|e| ParseError::new(lno, 1, e.to_string()))
}

/// Parses the `g <n> <m> : u v, ...` form; the cursor must sit before `g`.
pub(crate) fn parse_inline_graph(c: &mut Cursor<'_>) -> Result<UnorientedGraph, ParseError> {
    c.expect_word("g")?;
    let n = c.usize()?;
    let m = c.usize()?;
    c.expect(':')?;
    let mut edges = Vec::with_capacity(m);
    for i in 0..m {
        if i > 0 {
            c.expect(',')?;
        }
        let u = c.usize()?;
        let v = c.usize()?;
        edges.push((u, v));
    }
    UnorientedGraph::new(n, &edges).map_err(|e| c.error(e.to_string()))
}
