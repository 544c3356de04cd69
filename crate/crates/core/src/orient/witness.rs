use std::collections::BTreeMap;
use std::fmt;

use rayon::prelude::*;

use super::orgraph::{isomorphisms, normalize_orgraph, Orgraph, Shape};
use super::sum::OrgraphSum;
use super::OrientError;
use crate::complex::GraphSum;
use crate::graphs::UnorientedGraph;
use crate::perm::inversions;
use crate::sign::Sign;

/// An edge of an orgraph built from a graph: either the `j`-th new edge to
/// a sink or the body edge at position `e` of the graph's wedge order.
/// The derived order is the global one, all sink edges before the body.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum EdgeLabel {
    Sink(usize),
    Body(usize),
}

impl fmt::Display for EdgeLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            EdgeLabel::Sink(j) => write!(f, "S{j}"),
            EdgeLabel::Body(e) => f.write_str(&roman(e + 1)),
        }
    }
}

fn roman(mut n: usize) -> String {
    const TABLE: [(usize, &str); 13] = [
        (1000, "M"),
        (900, "CM"),
        (500, "D"),
        (400, "CD"),
        (100, "C"),
        (90, "XC"),
        (50, "L"),
        (40, "XL"),
        (10, "X"),
        (9, "IX"),
        (5, "V"),
        (4, "IV"),
        (1, "I"),
    ];
    let mut s = String::new();
    for &(v, r) in &TABLE {
        while n >= v {
            s.push_str(r);
            n -= v;
        }
    }
    s
}

/// One admissible way to orient a graph: every vertex emits exactly two
/// edges, the missing ones going to sinks. `reading[v]` is the ordered
/// `(Left, Right)` pair emitted by vertex `v`; it fixes both the directions
/// and the presentation used for the sign.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrientationWitness {
    graph: UnorientedGraph,
    sinks: usize,
    reading: Vec<[EdgeLabel; 2]>,
}

impl OrientationWitness {
    pub fn new(
        graph: UnorientedGraph,
        sinks: usize,
        reading: Vec<[EdgeLabel; 2]>,
    ) -> Result<OrientationWitness, OrientError> {
        let n = graph.vertex_count();
        let bad = |m: String| Err(OrientError::InvalidWitness(m));
        if reading.len() != n {
            return bad(format!("expected {n} vertex pairs"));
        }
        let mut seen_body = vec![false; graph.edge_count()];
        let mut seen_sink = vec![false; sinks];
        for (v, pair) in reading.iter().enumerate() {
            for &l in pair {
                match l {
                    EdgeLabel::Sink(j) if j < sinks && !seen_sink[j] => seen_sink[j] = true,
                    EdgeLabel::Body(e) if e < graph.edge_count() && !seen_body[e] => {
                        let (a, b) = graph.edges()[e];
                        if a != v && b != v {
                            return bad(format!("edge {l} does not touch vertex {}", v + 1));
                        }
                        seen_body[e] = true;
                    }
                    _ => return bad(format!("edge {l} is missing or repeated")),
                }
            }
        }
        if seen_body.iter().chain(&seen_sink).any(|s| !s) {
            return bad("some edge is never emitted".into());
        }
        Ok(OrientationWitness {
            graph,
            sinks,
            reading,
        })
    }

    /// Builds the edge-sorted presentation from the tail of every body edge
    /// and the vertex emitting every sink edge (0-based vertices).
    pub fn from_tails(
        graph: &UnorientedGraph,
        tails: &[usize],
        sink_sources: &[usize],
    ) -> Result<OrientationWitness, OrientError> {
        let n = graph.vertex_count();
        let mut out: Vec<Vec<EdgeLabel>> = vec![Vec::new(); n];
        for (j, &v) in sink_sources.iter().enumerate() {
            if v >= n {
                return Err(OrientError::InvalidWitness(format!(
                    "sink source {v} out of range"
                )));
            }
            out[v].push(EdgeLabel::Sink(j));
        }
        if tails.len() != graph.edge_count() {
            return Err(OrientError::InvalidWitness(
                "one tail per edge expected".into(),
            ));
        }
        for (e, &t) in tails.iter().enumerate() {
            if t >= n {
                return Err(OrientError::InvalidWitness(format!(
                    "tail {t} out of range"
                )));
            }
            out[t].push(EdgeLabel::Body(e));
        }
        let mut reading = Vec::with_capacity(n);
        for (v, mut labels) in out.into_iter().enumerate() {
            if labels.len() != 2 {
                return Err(OrientError::InvalidWitness(format!(
                    "vertex {} emits {} edges",
                    v + 1,
                    labels.len()
                )));
            }
            labels.sort_unstable();
            reading.push([labels[0], labels[1]]);
        }
        OrientationWitness::new(graph.clone(), sink_sources.len(), reading)
    }

    pub fn graph(&self) -> &UnorientedGraph {
        &self.graph
    }

    pub fn sink_count(&self) -> usize {
        self.sinks
    }

    pub fn reading(&self) -> &[[EdgeLabel; 2]] {
        &self.reading
    }

    /// Vertex emitting `label`.
    pub fn source(&self, label: EdgeLabel) -> usize {
        self.reading
            .iter()
            .position(|p| p.contains(&label))
            .expect("label is emitted")
    }

    /// `(tail, head)` of body edge `e`.
    pub fn direction(&self, e: usize) -> (usize, usize) {
        let tail = self.source(EdgeLabel::Body(e));
        let (a, b) = self.graph.edges()[e];
        (tail, if a == tail { b } else { a })
    }

    fn target(&self, v: usize, l: EdgeLabel) -> usize {
        match l {
            EdgeLabel::Sink(j) => j,
            EdgeLabel::Body(e) => {
                let (a, b) = self.graph.edges()[e];
                self.sinks + if a == v { b } else { a }
            }
        }
    }

    /// The orgraph in this presentation; vertex `v` becomes label `k + v`.
    pub fn orgraph(&self) -> Orgraph {
        let targets = self
            .reading
            .iter()
            .enumerate()
            .map(|(v, p)| p.map(|l| self.target(v, l)))
            .collect();
        Orgraph::new_unchecked(self.sinks, targets)
    }

    /// Parity of the permutation taking `S0, S1, ..., I, II, ...` to the
    /// vertex-by-vertex reading.
    pub fn sign(&self) -> Sign {
        let flat: Vec<EdgeLabel> = self.reading.iter().flatten().copied().collect();
        Sign::from_parity(inversions(&flat))
    }

    /// Number of transpositions in the reading, i.e. its inversion count.
    pub fn transpositions(&self) -> usize {
        let flat: Vec<EdgeLabel> = self.reading.iter().flatten().copied().collect();
        inversions(&flat)
    }

    /// Vertices whose Left edge comes after the Right one globally.
    pub fn inversions(&self) -> usize {
        self.reading.iter().filter(|p| p[0] > p[1]).count()
    }

    pub fn shape(&self) -> Result<Shape, OrientError> {
        self.orgraph().shape()
    }

    pub fn with_swapped_pair(&self, v: usize) -> OrientationWitness {
        let mut w = self.clone();
        w.reading[v].swap(0, 1);
        w
    }

    /// The edge-sorted presentation of the same oriented graph.
    pub fn sorted(&self) -> OrientationWitness {
        let mut w = self.clone();
        for p in &mut w.reading {
            p.sort_unstable();
        }
        w
    }

    /// Edge emitted together with sink edge `j`.
    pub fn sink_companion(&self, j: usize) -> Option<EdgeLabel> {
        let p = self.reading[self.source(EdgeLabel::Sink(j))];
        let other = if p[0] == EdgeLabel::Sink(j) {
            p[1]
        } else {
            p[0]
        };
        Some(other)
    }

    /// Body edges whose direction differs between the two witnesses.
    pub fn reversed_edges(&self, other: &OrientationWitness) -> Vec<usize> {
        (0..self.graph.edge_count())
            .filter(|&e| self.direction(e).0 != other.direction(e).0)
            .collect()
    }

    /// Re-presents `self` with the Left/Right structure carried over from
    /// `from` along an isomorphism of the two orgraphs.
    pub fn with_reading_from(&self, from: &OrientationWitness) -> Option<OrientationWitness> {
        let map = edge_correspondence(from, self)?;
        let lookup: BTreeMap<EdgeLabel, EdgeLabel> = map
            .into_iter()
            .map(|(mine, theirs)| (theirs, mine))
            .collect();
        let phi = &isomorphisms(&from.orgraph(), &self.orgraph())[0];
        let mut reading = self.reading.clone();
        for (v, p) in from.reading.iter().enumerate() {
            reading[phi[v]] = p.map(|l| lookup[&l]);
        }
        Some(OrientationWitness {
            graph: self.graph.clone(),
            sinks: self.sinks,
            reading,
        })
    }
}

/// `(S0,S1)(VI,I)...`
impl fmt::Display for OrientationWitness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for p in &self.reading {
            write!(f, "({},{})", p[0], p[1])?;
        }
        Ok(())
    }
}

/// Matches the edges of two witnesses along the first isomorphism of their
/// orgraphs. Entries are `(label in to, label in from)`, sorted by the first.
pub fn edge_correspondence(
    from: &OrientationWitness,
    to: &OrientationWitness,
) -> Option<Vec<(EdgeLabel, EdgeLabel)>> {
    let (a, b) = (from.orgraph(), to.orgraph());
    let phi = isomorphisms(&a, &b).into_iter().next()?;
    let k = from.sinks;
    let mut out = Vec::new();
    for (v, pair) in from.reading.iter().enumerate() {
        let w = phi[v];
        for (s, &l) in pair.iter().enumerate() {
            let t = a.targets()[v][s];
            let mapped = if t < k { t } else { k + phi[t - k] };
            let slot = b.targets()[w].iter().position(|&x| x == mapped)?;
            out.push((to.reading[w][slot], l));
        }
    }
    out.sort_unstable();
    Some(out)
}

pub fn orientation_sign(w: &OrientationWitness) -> Sign {
    w.sign()
}

/// Every admissible orientation of `g` in the edge-sorted presentation.
///
/// Each vertex must emit two edges, so `2n - #E` sink edges make up the
/// deficit. Sinks are spread over the vertices in all ways, increasing
/// within a vertex; for a Π-shape this yields both sink assignments.
pub fn enumerate_orientations(g: &UnorientedGraph) -> Vec<OrientationWitness> {
    let n = g.vertex_count();
    let m = g.edge_count();
    if m > 2 * n {
        return Vec::new();
    }
    assert!(m < 64, "too many edges to enumerate orientations");
    let k = 2 * n - m;
    let masks: Vec<u64> = (0..1u64 << m).collect();
    masks
        .into_par_iter()
        .flat_map_iter(|mask| {
            let mut tails = Vec::with_capacity(m);
            let mut out = vec![0usize; n];
            for (e, &(a, b)) in g.edges().iter().enumerate() {
                let t = if mask >> e & 1 == 0 { a } else { b };
                tails.push(t);
                out[t] += 1;
            }
            let mut found = Vec::new();
            if out.iter().all(|&d| d <= 2) {
                let mut room: Vec<usize> = out.iter().map(|d| 2 - d).collect();
                let mut sources = Vec::with_capacity(k);
                spread_sinks(&mut room, &mut sources, k, &mut |s| {
                    found.push(OrientationWitness::from_tails(g, &tails, s).expect("admissible"));
                });
            }
            found
        })
        .collect()
}

fn spread_sinks(
    room: &mut [usize],
    sources: &mut Vec<usize>,
    k: usize,
    f: &mut impl FnMut(&[usize]),
) {
    if sources.len() == k {
        f(sources);
        return;
    }
    for v in 0..room.len() {
        if room[v] > 0 {
            room[v] -= 1;
            sources.push(v);
            spread_sinks(room, sources, k, f);
            sources.pop();
            room[v] += 1;
        }
    }
}

/// Signed sum of the normalized orgraphs of all admissible orientations.
pub fn orient_graph(g: &UnorientedGraph) -> OrgraphSum {
    let witnesses = enumerate_orientations(g);
    let parts: Vec<(Orgraph, Sign)> = witnesses
        .par_iter()
        .filter_map(|w| {
            let n = normalize_orgraph(&w.orgraph());
            (!n.is_zero).then(|| (n.orgraph, n.sign * w.sign()))
        })
        .collect();
    let mut sum = OrgraphSum::new();
    for (o, s) in parts {
        sum.add_normalized(o, s.to_rational());
    }
    sum
}

pub fn orient(gamma: &GraphSum) -> OrgraphSum {
    let terms: Vec<(&UnorientedGraph, &crate::Rational)> = gamma.iter().collect();
    terms
        .into_par_iter()
        .map(|(g, c)| orient_graph(g).scaled(c))
        .reduce(OrgraphSum::new, OrgraphSum::merged)
}

/// Orgraphs produced by more than one graph of the sum. Forgetting the sinks
/// and directions of an orgraph recovers its graph, so this is empty unless
/// the sum holds two isomorphic graphs, which canonical keys rule out.
pub fn shared_images(gamma: &GraphSum) -> Vec<Orgraph> {
    let mut owner: BTreeMap<Orgraph, usize> = BTreeMap::new();
    let mut shared = Vec::new();
    for (i, (g, _)) in gamma.iter().enumerate() {
        for (o, _) in orient_graph(g).iter() {
            match owner.get(o) {
                Some(&j) if j != i => shared.push(o.clone()),
                Some(_) => {}
                None => {
                    owner.insert(o.clone(), i);
                }
            }
        }
    }
    shared.sort();
    shared.dedup();
    shared
}
