use std::fmt;

use super::OrientError;
use crate::perm::for_each_permutation;
use crate::sign::Sign;
use crate::text::{content_lines, Cursor, ParseError};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Shape {
    /// Both sink edges leave the same vertex.
    Lambda,
    /// The sink edges leave two different vertices.
    Pi,
}

impl fmt::Display for Shape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Shape::Lambda => "Lambda",
            Shape::Pi => "Pi",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Orgraph {
    sinks: usize,
    targets: Vec<[usize; 2]>,
}

impl Orgraph {
    /// Checks labels, loops and that every sink receives exactly one edge.
    pub fn new(sinks: usize, targets: Vec<[usize; 2]>) -> Result<Orgraph, OrientError> {
        let n = targets.len();
        if n == 0 {
            return Err(OrientError::InvalidOrgraph("no internal vertices".into()));
        }
        let mut into_sink = vec![0; sinks];
        for (i, pair) in targets.iter().enumerate() {
            for &t in pair {
                if t >= sinks + n {
                    return Err(OrientError::InvalidOrgraph(format!(
                        "target {t} out of range"
                    )));
                }
                if t == sinks + i {
                    return Err(OrientError::InvalidOrgraph(format!("loop at vertex {t}")));
                }
                if t < sinks {
                    into_sink[t] += 1;
                }
            }
        }
        if let Some(s) = into_sink.iter().position(|&c| c != 1) {
            return Err(OrientError::InvalidOrgraph(format!(
                "sink {s} must receive exactly one edge"
            )));
        }
        Ok(Orgraph { sinks, targets })
    }

    pub(crate) fn new_unchecked(sinks: usize, targets: Vec<[usize; 2]>) -> Orgraph {
        Orgraph { sinks, targets }
    }

    pub fn sink_count(&self) -> usize {
        self.sinks
    }

    pub fn internal_count(&self) -> usize {
        self.targets.len()
    }

    /// Ordered `(Left, Right)` targets of internal vertex `i` (label `k + i`).
    pub fn targets(&self) -> &[[usize; 2]] {
        &self.targets
    }

    pub fn shape(&self) -> Result<Shape, OrientError> {
        if self.sinks != 2 {
            return Err(OrientError::NotBivector);
        }
        let from = |s: usize| self.targets.iter().position(|p| p.contains(&s));
        Ok(if from(0) == from(1) {
            Shape::Lambda
        } else {
            Shape::Pi
        })
    }

    /// Relabels sinks: sink `s` becomes `perm[s]`.
    pub fn relabel_sinks(&self, perm: &[usize]) -> Orgraph {
        let k = self.sinks;
        let targets = self
            .targets
            .iter()
            .map(|p| p.map(|t| if t < k { perm[t] } else { t }))
            .collect();
        Orgraph { sinks: k, targets }
    }

    /// Exchanges sinks 0 and 1.
    pub fn swap_sinks(&self) -> Orgraph {
        let mut perm: Vec<usize> = (0..self.sinks).collect();
        if perm.len() >= 2 {
            perm.swap(0, 1);
        }
        self.relabel_sinks(&perm)
    }

    /// Swaps Left and Right at internal vertex `i`.
    pub fn swap_pair(&self, i: usize) -> Orgraph {
        let mut o = self.clone();
        o.targets[i].swap(0, 1);
        o
    }

    /// Internal vertex `i` moves to position `relabel[i]`; pairs keep their order.
    pub fn relabel_internal(&self, relabel: &[usize]) -> Orgraph {
        let k = self.sinks;
        let mut targets = vec![[0, 0]; self.targets.len()];
        for (i, p) in self.targets.iter().enumerate() {
            targets[relabel[i]] = p.map(|t| if t < k { t } else { k + relabel[t - k] });
        }
        Orgraph { sinks: k, targets }
    }

    /// Number of vertices whose Left target label exceeds the Right one.
    pub fn descents(&self) -> usize {
        self.targets.iter().filter(|p| p[0] > p[1]).count()
    }
}

/// `o <n> : L R ; ...`, with the sink count inserted as `o <n> <k> :` when it
/// is not two.
impl fmt::Display for Orgraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "o {}", self.targets.len())?;
        if self.sinks != 2 {
            write!(f, " {}", self.sinks)?;
        }
        f.write_str(" :")?;
        for (i, p) in self.targets.iter().enumerate() {
            let sep = if i == 0 { " " } else { " ; " };
            write!(f, "{sep}{} {}", p[0], p[1])?;
        }
        Ok(())
    }
}

pub(crate) fn parse_inline_orgraph(c: &mut Cursor<'_>) -> Result<Orgraph, ParseError> {
    c.expect_word("o")?;
    let n = c.usize()?;
    let k = if c.peek_digit() { c.usize()? } else { 2 };
    c.expect(':')?;
    let mut targets = Vec::with_capacity(n);
    for i in 0..n {
        if i > 0 {
            c.expect(';')?;
        }
        let l = c.usize()?;
        let r = c.usize()?;
        targets.push([l, r]);
    }
    Orgraph::new(k, targets).map_err(|e| c.error(e.to_string()))
}

/// One orgraph per non-comment line.
pub fn parse_orgraph(text: &str) -> Result<Vec<Orgraph>, ParseError> {
    content_lines(text)
        .map(|(lno, body)| {
            let mut c = Cursor::new(lno, body);
            let o = parse_inline_orgraph(&mut c)?;
            c.expect_end()?;
            Ok(o)
        })
        .collect()
}

/// `Γ = sign * orgraph`, with `orgraph` the minimal encoding.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NormalizedOrgraph {
    pub orgraph: Orgraph,
    pub sign: Sign,
    pub is_zero: bool,
}

/// Minimises the flattened target list over all relabelings of internal
/// vertices and all Left/Right swaps. Relabelings cost nothing; each swap
/// costs a factor `-1`. Since every pair can be sorted independently, the
/// search runs over relabelings only.
pub fn normalize_orgraph(o: &Orgraph) -> NormalizedOrgraph {
    let k = o.sinks;
    let n = o.targets.len();
    if o.targets.iter().any(|p| p[0] == p[1]) {
        // a doubled edge is antisymmetric under its own swap
        let mut sorted = o.clone();
        for p in &mut sorted.targets {
            p.sort_unstable();
        }
        return NormalizedOrgraph {
            orgraph: sorted,
            sign: Sign::Plus,
            is_zero: true,
        };
    }
    let mut best: Option<Vec<[usize; 2]>> = None;
    let mut sign = Sign::Plus;
    let mut is_zero = false;
    let mut enc = vec![[0usize; 2]; n];
    for_each_permutation(n, |r| {
        let mut swaps = 0;
        for (i, p) in o.targets.iter().enumerate() {
            let a = if p[0] < k { p[0] } else { k + r[p[0] - k] };
            let b = if p[1] < k { p[1] } else { k + r[p[1] - k] };
            enc[r[i]] = if a <= b { [a, b] } else { [b, a] };
            if a > b {
                swaps += 1;
            }
        }
        let s = Sign::from_parity(swaps);
        match &best {
            Some(b) if enc.as_slice() > b.as_slice() => {}
            Some(b) if enc.as_slice() == b.as_slice() => {
                if s != sign {
                    is_zero = true;
                }
            }
            _ => {
                best = Some(enc.clone());
                sign = s;
                is_zero = false;
            }
        }
    });
    NormalizedOrgraph {
        orgraph: Orgraph {
            sinks: k,
            targets: best.unwrap(),
        },
        sign,
        is_zero,
    }
}

/// All relabelings `φ` of internal vertices (fixing sinks) with
/// `{targets of φ(i) in b} = φ({targets of i in a})`.
pub fn isomorphisms(a: &Orgraph, b: &Orgraph) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    if a.sinks != b.sinks || a.targets.len() != b.targets.len() {
        return out;
    }
    let k = a.sinks;
    let sorted = |p: [usize; 2]| if p[0] <= p[1] { p } else { [p[1], p[0]] };
    let target: Vec<[usize; 2]> = b.targets.iter().map(|&p| sorted(p)).collect();
    for_each_permutation(a.targets.len(), |r| {
        let ok = a.targets.iter().enumerate().all(|(i, p)| {
            let q = p.map(|t| if t < k { t } else { k + r[t - k] });
            sorted(q) == target[r[i]]
        });
        if ok {
            out.push(r.to_vec());
        }
    });
    out
}
